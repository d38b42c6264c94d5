//! Seeded random identities for spot checks.

use rand::Rng;

use super::Identity;
use crate::terms::{Variable, Word};

/// Random word of exactly `size` nodes (variables plus pseudoinverses)
/// over the first `vars` of `x, y, z, t`.
pub fn random_word<R: Rng>(rng: &mut R, vars: usize, size: usize) -> Word {
    assert!((1..=4).contains(&vars) && size >= 1);
    if size == 1 {
        let v = ["x", "y", "z", "t"][rng.gen_range(0..vars)];
        return Word::var(Variable::new(v).unwrap());
    }
    if rng.gen_bool(1.0 / 3.0) {
        random_word(rng, vars, size - 1).inv()
    } else {
        let k = rng.gen_range(1..size);
        random_word(rng, vars, k).concat(random_word(rng, vars, size - k))
    }
}

/// Each side has size at most `max_size`; at most `vars` variables overall.
pub fn random_identity<R: Rng>(rng: &mut R, vars: usize, max_size: usize) -> Identity {
    let l = rng.gen_range(1..=max_size);
    let r = rng.gen_range(1..=max_size);
    Identity::new(random_word(rng, vars, l), random_word(rng, vars, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sizes_and_seeds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for size in 1..=8 {
            let w = random_word(&mut rng, 4, size);
            assert_eq!(w.size(), size);
            assert!(w.content().len() <= 4);
        }
        let a: Vec<Identity> = (0..20).map({
            let mut r = ChaCha8Rng::seed_from_u64(1);
            move |_| random_identity(&mut r, 3, 8)
        }).collect();
        let b: Vec<Identity> = (0..20).map({
            let mut r = ChaCha8Rng::seed_from_u64(1);
            move |_| random_identity(&mut r, 3, 8)
        }).collect();
        assert_eq!(a, b);
    }
}
