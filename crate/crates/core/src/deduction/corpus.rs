//! The shipped chain files.

use super::{check_chain_file, parse_chain_file, ChainFile, ChainReport};

pub const CHAIN_FILES: &[(&str, &str)] = &[
    ("case1_p2_q3", include_str!("../../data/chains/case1_p2_q3.chain")),
    ("case1_p3_q1", include_str!("../../data/chains/case1_p3_q1.chain")),
    ("subcase_2_1", include_str!("../../data/chains/subcase_2_1.chain")),
    ("subcase_2_2", include_str!("../../data/chains/subcase_2_2.chain")),
    ("subcase_2_3", include_str!("../../data/chains/subcase_2_3.chain")),
];

/// A deliberately broken copy of `subcase_2_1`.
pub const NEGATIVE_CONTROL: &str = include_str!("../../data/chains/corrupted_subcase_2_1.chain");
/// Chain in [`NEGATIVE_CONTROL`] that must fail, and its failing step.
pub const NEGATIVE_CONTROL_FAILURE: (&str, usize) = ("right-dbl-from-degEPI", 3);

pub fn chain_files() -> Vec<(&'static str, ChainFile)> {
    CHAIN_FILES
        .iter()
        .map(|(name, text)| (*name, parse_chain_file(text).expect("shipped chain file parses")))
        .collect()
}

pub fn check_all() -> Vec<(&'static str, Vec<ChainReport>)> {
    chain_files().iter().map(|(n, f)| (*n, check_chain_file(f))).collect()
}
