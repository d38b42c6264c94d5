use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{elapsed_ms, load, CliError, Report};
use crate::deduction::{check_chain_file, corpus, parse_chain_file, replay};
use crate::engine::{fixture, parse_cayley, to_cayley_string, Element, FiniteEpigroup};
use crate::identity::parse_presentation;
use crate::lattice::{
    enumerate_lattices, lattice_fixture, parse_lattice, to_lattice_string, ElementProfile, FiniteLattice, LemmaViolation,
};

fn load_epigroup(spec: &str, report: &mut Report) -> Result<FiniteEpigroup, CliError> {
    let (text, d) = load(spec, |n| fixture(n).map(|s| to_cayley_string(&s)))?;
    report.inputs.push(d);
    parse_cayley(&text).map_err(|e| CliError::new(spec, e))
}

#[derive(Serialize)]
struct IdentityVerdict {
    line: usize,
    source: String,
    holds: bool,
    expanded: Vec<String>,
    witness: Option<WitnessRecord>,
}

#[derive(Serialize)]
struct WitnessRecord {
    identity: String,
    assignment: BTreeMap<String, Element>,
    lhs_value: Element,
    rhs_value: Element,
}

/// Checks every line of an identity file in a finite epigroup.
pub fn cmd_check(epigroup: &str, identities: &str) -> Result<Report, CliError> {
    let t0 = Instant::now();
    let mut report = Report::new("check");
    let s = load_epigroup(epigroup, &mut report)?;
    let (text, d) = load(identities, |_| None)?;
    report.inputs.push(d);
    let pres = parse_presentation(&text).map_err(|e| CliError::new(identities, e))?;

    let mut verdicts = Vec::new();
    for entry in &pres.entries {
        let witness = s.find_violation(&entry.expanded).map(|v| WitnessRecord {
            identity: v.identity.to_string(),
            assignment: v.assignment.iter().map(|(k, e)| (k.to_string(), *e)).collect(),
            lhs_value: v.lhs_value,
            rhs_value: v.rhs_value,
        });
        if let Some(w) = &witness {
            report.passed = false;
            let asg: Vec<String> = w.assignment.iter().map(|(k, e)| format!("{k}={e}")).collect();
            report.witnesses.push(format!(
                "line {}: `{}` fails at {}: {} != {}",
                entry.line,
                w.identity,
                asg.join(", "),
                w.lhs_value,
                w.rhs_value
            ));
        }
        report.summary.push(format!(
            "line {:>3}  {:<5} {}",
            entry.line,
            if witness.is_none() { "holds" } else { "FAILS" },
            entry.source
        ));
        verdicts.push(IdentityVerdict {
            line: entry.line,
            source: entry.source.clone(),
            holds: witness.is_none(),
            expanded: entry.expanded.iter().map(ToString::to_string).collect(),
            witness,
        });
    }
    report.summary.extend(report.witnesses.iter().map(|w| format!("  witness: {w}")));
    report.results = json!({ "epigroup": s.name(), "order": s.order(), "identities": verdicts });
    report.timing_ms = elapsed_ms(t0);
    Ok(report)
}

/// Structure of one finite epigroup.
pub fn cmd_inspect(epigroup: &str) -> Result<Report, CliError> {
    let t0 = Instant::now();
    let mut report = Report::new("inspect");
    let s = load_epigroup(epigroup, &mut report)?;
    let pinv: Vec<Element> = s.elements().map(|x| s.pseudoinverse(x)).collect();
    let omega: Vec<Element> = s.elements().map(|x| s.omega(x)).collect();
    let index = s.nilpotency_index().ok();
    report.results = json!({
        "name": s.name(),
        "order": s.order(),
        "pseudoinverse": pinv,
        "omega": omega,
        "idempotents": s.idempotents(),
        "group_elements": s.group_elements(),
        "zero": s.zero(),
        "nil": s.is_nil(),
        "nilpotency_index": index,
        "commutative": s.is_commutative(),
        "semilattice": s.is_semilattice(),
    });
    let list = |v: &[Element]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    report.summary = vec![
        format!("{} (order {})", s.name().unwrap_or(epigroup), s.order()),
        format!("pseudoinverse  {}", list(&pinv)),
        format!("x^w            {}", list(&omega)),
        format!("idempotents    {}", list(&s.idempotents())),
        format!("group elements {}", list(&s.group_elements())),
        format!("zero           {}", s.zero().map_or("none".to_string(), |z| z.to_string())),
        format!(
            "nil {}{}, commutative {}, semilattice {}",
            s.is_nil(),
            index.map_or(String::new(), |n| format!(" (index {n})")),
            s.is_commutative(),
            s.is_semilattice()
        ),
    ];
    report.timing_ms = elapsed_ms(t0);
    Ok(report)
}

fn chain_fixture(name: &str) -> Option<String> {
    if name == "corrupted_subcase_2_1" {
        return Some(corpus::NEGATIVE_CONTROL.to_owned());
    }
    corpus::CHAIN_FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| t.to_string())
}

#[derive(Serialize)]
struct ChainRecord {
    name: String,
    proves: Option<String>,
    proves_rule: Option<bool>,
    verified: bool,
    steps: usize,
    failing_step: Option<usize>,
    diagnostic: Option<String>,
    trace: Vec<String>,
}

/// Replays every chain in a chain file.
pub fn cmd_verify(chains: &str) -> Result<Report, CliError> {
    let t0 = Instant::now();
    let mut report = Report::new("verify");
    let (text, d) = load(chains, chain_fixture)?;
    report.inputs.push(d);
    let file = parse_chain_file(&text).map_err(|e| CliError::new(chains, e))?;

    let mut records = Vec::new();
    for (chain, r) in file.chains.iter().zip(check_chain_file(&file)) {
        let (words, _) = replay(chain);
        let mut diagnostic = (!r.verdict.is_verified()).then(|| r.verdict.to_string());
        if r.proves_rule == Some(false) {
            diagnostic = Some(format!("conclusion `{}` is not rule `{}`", chain.conclusion(), chain.proves.as_ref().unwrap()));
        }
        let status = if r.passed() { "verified" } else { "FAILED" };
        report.summary.push(format!("{:<32} {status}", r.name));
        if let Some(msg) = &diagnostic {
            report.passed = false;
            report.witnesses.push(format!("{}: {msg}", r.name));
            report.summary.push(format!("  {msg}"));
        }
        records.push(ChainRecord {
            name: r.name.clone(),
            proves: chain.proves.clone(),
            proves_rule: r.proves_rule,
            verified: r.passed(),
            steps: chain.steps.len(),
            failing_step: r.verdict.failing_step(),
            diagnostic,
            trace: words.iter().map(ToString::to_string).collect(),
        });
    }
    report.results = json!({ "rules": file.rules.iter().map(|(n, id)| format!("{n}: {id}")).collect::<Vec<_>>(), "chains": records });
    report.timing_ms = elapsed_ms(t0);
    Ok(report)
}

pub enum LatticeSource {
    File(String),
    /// Every lattice of size `1..=max_size`.
    Enumerate { max_size: usize, dedupe: bool },
}

const LEMMA_NAMES: [&str; 3] = ["join_with_neutral_atom", "over_neutral_atom", "modular_non_cancellable"];

fn lemma_json(l: &FiniteLattice) -> (serde_json::Value, Vec<LemmaViolation>) {
    let mut map = serde_json::Map::new();
    let mut bad = Vec::new();
    for (name, r) in LEMMA_NAMES.iter().zip(l.check_lemmas()) {
        match r {
            Ok(()) => map.insert(name.to_string(), json!("holds")),
            Err(v) => {
                let j = serde_json::to_value(&v).unwrap();
                bad.push(v);
                map.insert(name.to_string(), j)
            }
        };
    }
    (serde_json::Value::Object(map), bad)
}

/// Special elements of one lattice, or a survey of all small lattices.
pub fn cmd_lattice(source: &LatticeSource, jobs: usize) -> Result<Report, CliError> {
    let t0 = Instant::now();
    let mut report = Report::new("lattice");
    match source {
        LatticeSource::File(spec) => {
            let (text, d) = load(spec, |n| lattice_fixture(n).ok().map(|l| to_lattice_string(&l)))?;
            report.inputs.push(d);
            let l = parse_lattice(&text).map_err(|e| CliError::new(spec.as_str(), e))?;
            let profiles: Vec<ElementProfile> = l.elements().map(|x| l.profile(x)).collect();
            let (lemmas, bad) = lemma_json(&l);
            for v in &bad {
                report.passed = false;
                report.witnesses.push(v.to_string());
            }
            report.summary.push(format!(
                "size {}, bottom {}, top {}, atoms {:?}, distributive {}",
                l.size(),
                l.bottom(),
                l.top(),
                l.atoms(),
                l.is_distributive()
            ));
            report.summary.push("element neutral modular cancellable atom".into());
            for p in &profiles {
                let mut line = format!(
                    "{:>7} {:<7} {:<7} {:<11} {}",
                    p.element, p.neutral, p.modular, p.cancellable, p.atom
                );
                if let Some((y, z)) = p.modular_witness {
                    line.push_str(&format!("  non-modular at ({y}, {z})"));
                }
                if let Some((y, z)) = p.cancellable_witness {
                    line.push_str(&format!("  not cancelling ({y}, {z})"));
                }
                report.summary.push(line);
            }
            report.summary.push(format!("lemma checks: {}", if bad.is_empty() { "all hold" } else { "VIOLATED" }));
            report.results = json!({
                "size": l.size(),
                "bottom": l.bottom(),
                "top": l.top(),
                "atoms": l.atoms(),
                "neutral_atoms": l.neutral_atoms(),
                "distributive": l.is_distributive(),
                "elements": profiles,
                "lemmas": lemmas,
            });
        }
        LatticeSource::Enumerate { max_size, dedupe } => {
            report.settings.insert("max_size".into(), max_size.to_string());
            report.settings.insert("dedupe".into(), dedupe.to_string());
            let mut lattices = Vec::new();
            let mut per_size = Vec::new();
            for n in 1..=*max_size {
                let ls = enumerate_lattices(n, *dedupe).map_err(|e| CliError::new("--size", e))?;
                per_size.push(ls.len());
                lattices.extend(ls);
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| CliError::new("--jobs", e))?;
            let findings: Vec<Vec<String>> = pool.install(|| lattices.par_iter().map(survey_lattice).collect());
            let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
            for (l, f) in lattices.iter().zip(&findings) {
                for w in f {
                    let kind = w.split(':').next().unwrap();
                    *counts.entry(SURVEY_CHECKS.iter().find(|c| **c == kind).unwrap()).or_default() += 1;
                    report.witnesses.push(format!("{w}\n{}", to_lattice_string(l)));
                }
            }
            report.passed = report.witnesses.is_empty();
            let checks: BTreeMap<&str, usize> = SURVEY_CHECKS.iter().map(|c| (*c, counts.get(c).copied().unwrap_or(0))).collect();
            report.summary.push(format!("lattices per size 1..={max_size}: {per_size:?}"));
            for (c, n) in &checks {
                report.summary.push(format!("{c:<36} {n} violations"));
            }
            report.results = json!({ "lattices_per_size": per_size, "lattices": lattices.len(), "violations": checks });
        }
    }
    report.timing_ms = elapsed_ms(t0);
    Ok(report)
}

const SURVEY_CHECKS: [&str; 7] = [
    "cancellable_implies_modular",
    "neutral_algorithms_agree",
    "neutral_implies_cancellable",
    "distributive_all_special",
    "join_with_neutral_atom",
    "over_neutral_atom",
    "modular_non_cancellable",
];

fn survey_lattice(l: &FiniteLattice) -> Vec<String> {
    let mut out = Vec::new();
    let distributive = l.is_distributive();
    for x in l.elements() {
        let p = l.profile(x);
        if p.cancellable && !p.modular {
            out.push(format!("{}: element {x}", SURVEY_CHECKS[0]));
        }
        if p.neutral != l.is_neutral_sublattice(x) {
            out.push(format!("{}: element {x}", SURVEY_CHECKS[1]));
        }
        if p.neutral && !p.cancellable {
            out.push(format!("{}: element {x}", SURVEY_CHECKS[2]));
        }
        if distributive && !(p.neutral && p.modular && p.cancellable) {
            out.push(format!("{}: element {x}", SURVEY_CHECKS[3]));
        }
    }
    for (name, r) in LEMMA_NAMES.iter().zip(l.check_lemmas()) {
        if let Err(v) = r {
            out.push(format!("{name}: {v}"));
        }
    }
    out
}
