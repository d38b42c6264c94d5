//! Parsing and rendering epigroup words, and the one-variable normal form.
//!
//! cargo run --example words

use epigroup::terms::{normalize_one_variable, Length, Position, Word};

fn main() {
    let w: Word = "x1 ((x2 x3)~ x4)~~ x5".parse().unwrap();
    println!("word          {w}");
    println!("content       {:?}", w.content().iter().map(|v| v.name()).collect::<Vec<_>>());
    println!("size, depth   {}, {}", w.size(), w.depth());
    println!("length        {:?}", w.length());

    let pos: Position = "1.0:0..1".parse().unwrap();
    println!("at {pos}      {}", Word::from_factors(w.slice_at(&pos).unwrap().to_vec()).unwrap());

    let s: Word = "x y x y".parse().unwrap();
    assert_eq!(s.length(), Length::Finite(4));
    println!("{s} renders as {}", "x^2 y^2".parse::<Word>().unwrap());

    // `^w` is shorthand for `x x~`.
    for src in ["x^w", "x~~ x^3", "x~^2 x^2", "(x^2)~ x", "x^3 x~^5", "((x x~)~ x)~"] {
        let w: Word = src.parse().unwrap();
        println!("{src:<14} -> {}", normalize_one_variable(&w).unwrap());
    }
}
