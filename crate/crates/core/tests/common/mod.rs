#![allow(dead_code)]

use epigroup::engine::{catalog, enumerate, FiniteEpigroup};
use epigroup::terms::{Variable, Word};

/// Every associative table of order 1 to 3.
pub fn enumerated_models() -> Vec<FiniteEpigroup> {
    (1..=3).flat_map(|n| enumerate(n, None).unwrap()).collect()
}

pub fn all_models() -> Vec<FiniteEpigroup> {
    let mut v = enumerated_models();
    v.extend(catalog());
    v
}

/// All words with exactly `size` nodes over the given variables, as trees:
/// a variable, a pseudoinverse of a smaller word, or a product.
pub fn words_of_size(vars: &[&str], size: usize) -> Vec<Word> {
    let mut memo: Vec<Vec<Word>> = vec![Vec::new()];
    for s in 1..=size {
        let mut out = Vec::new();
        if s == 1 {
            out.extend(vars.iter().map(|v| Word::var(Variable::new(*v).unwrap())));
        } else {
            out.extend(memo[s - 1].iter().map(|w| w.clone().inv()));
            for k in 1..s {
                for a in &memo[k] {
                    for b in &memo[s - k] {
                        out.push(a.clone().concat(b.clone()));
                    }
                }
            }
            out.sort_by_key(|w| w.to_string());
            out.dedup();
        }
        memo.push(out);
    }
    memo.swap_remove(size)
}

pub fn words_up_to(vars: &[&str], max_size: usize) -> Vec<Word> {
    (1..=max_size).flat_map(|s| words_of_size(vars, s)).collect()
}
