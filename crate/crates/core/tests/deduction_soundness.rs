mod common;

use epigroup::deduction::{builtin_rule_book, corpus, gate_models, parse_chain_file, verify_chain};
use epigroup::identity::IdentitySystem;

// Whatever a chain derives holds in every model of its hypotheses.
#[test]
fn chains_are_semantically_sound() {
    let models = gate_models();
    for (file, f) in corpus::chain_files() {
        for c in &f.chains {
            let hyps: IdentitySystem = c.hypotheses().into_iter().map(|(_, id)| id).collect();
            let concl = c.conclusion();
            let mut used = 0;
            for s in models.iter().filter(|s| s.satisfies(&hyps)) {
                used += 1;
                assert!(s.satisfies_identity(&concl), "{file}/{}: {concl} fails in {:?}", c.name, s.name());
            }
            assert!(used > 0, "{file}/{}", c.name);
        }
    }
}

// A chain that uses only builtin rules proves an identity of all epigroups.
#[test]
fn builtin_rules_hold_in_every_model() {
    for s in common::all_models() {
        for (name, id) in builtin_rule_book() {
            assert!(s.satisfies_identity(id), "{name} in {:?}", s.name());
        }
    }
}

#[test]
fn altered_substitutions_fail_at_their_step() {
    let f = parse_chain_file(corpus::CHAIN_FILES[2].1).unwrap();
    for c in &f.chains {
        for (k, step) in c.steps.iter().enumerate() {
            for v in step.substitution.keys() {
                let mut broken = c.clone();
                broken.steps[k].substitution.insert(v.clone(), "y9".parse().unwrap());
                assert_eq!(verify_chain(&broken).failing_step(), Some(k + 1), "{} step {}", c.name, k + 1);
            }
        }
    }
}
