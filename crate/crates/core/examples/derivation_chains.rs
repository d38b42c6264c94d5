//! Replaying the shipped derivation chains step by step.
//!
//! cargo run --example derivation_chains

use epigroup::deduction::{builtin_rule_book, check_chain_file, corpus, parse_chain_file, replay};

fn main() {
    println!("builtin rules:");
    for (name, id) in builtin_rule_book() {
        println!("  {name:<15} {id}");
    }

    for (file, chains) in corpus::chain_files() {
        println!("\n== {file}");
        for (c, r) in chains.chains.iter().zip(check_chain_file(&chains)) {
            println!("{} ({}): {}", c.name, c.conclusion(), r.verdict);
            let (words, _) = replay(c);
            for (w, s) in words.iter().skip(1).zip(&c.steps) {
                println!("    {:<15} {} at {:<8} {w}", s.rule.name, s.rule.direction, s.position.to_string());
            }
        }
    }

    let bad = parse_chain_file(corpus::NEGATIVE_CONTROL).unwrap();
    for r in check_chain_file(&bad).iter().filter(|r| !r.passed()) {
        println!("\nnegative control: {}: {}", r.name, r.verdict);
    }
}
