use super::{parse_cayley, FiniteEpigroup};

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        /// Names of the shipped Cayley tables, smallest order first.
        pub const FIXTURE_NAMES: &[&str] = &[$($name),*];

        fn source(name: &str) -> Option<&'static str> {
            match name {
                $($name => Some(include_str!(concat!("../../data/epigroups/", $name, ".cayley"))),)*
                _ => None,
            }
        }
    };
}

fixtures!(
    "sl2",
    "n2",
    "z2",
    "left_zero2",
    "mono_i2_p2",
    "n3",
    "z3",
    "mono_i3_p2",
    "mono_i2_p3",
    "n4",
    "z4",
    "klein4",
    "null4",
    "rect_band_2x2",
    "sl2_x_n2",
    "mono_i3_p3",
    "n5",
    "brandt_b2",
    "sl2_x_n3",
    "z2_x_n3",
    "brandt_b2_one",
    "comm_nil_x2y",
    "sym3",
);

/// A shipped fixture by name.
pub fn fixture(name: &str) -> Option<FiniteEpigroup> {
    source(name).map(|text| parse_cayley(text).expect("shipped fixtures are valid"))
}

/// Every shipped fixture.
pub fn catalog() -> Vec<FiniteEpigroup> {
    FIXTURE_NAMES.iter().map(|n| fixture(n).unwrap()).collect()
}
