pub mod deduction;
pub mod engine;
pub mod identity;
pub mod lattice;
pub mod report;
pub mod terms;
