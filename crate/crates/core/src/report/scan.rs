use std::collections::HashSet;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{elapsed_ms, load, CliError, Report};
use crate::engine::oracle::{idempotent_power_by_search, is_group_element_by_search, is_nil_by_search, nil_subsemigroups, nilpotency_index_by_products};
use crate::engine::{candidate_count, enumerate_with_jobs, fixture, to_cayley_string, FiniteEpigroup};
use crate::identity::random::random_identity;
use crate::identity::{make_deg_identity, parse_presentation, sl_holds, Identity, IdentitySystem, ZeroIdentity};
use crate::terms::Word;

pub const DEFAULT_SEED: u64 = 0x5eed;
/// Random identities compared against the two-element semilattice per scan.
pub const SL_SPOT_CHECKS: usize = 1000;

pub struct ScanOptions {
    pub jobs: usize,
    pub dedupe: bool,
    pub seed: u64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { jobs: 1, dedupe: false, seed: DEFAULT_SEED }
    }
}

const INVARIANTS: [&str; 6] = [
    "omega_is_idempotent_power",
    "omega_identities",
    "pseudoinverse_zero_iff_nil",
    "group_element_criterion",
    "square_shadow",
    "degree_shadow",
];

/// Identity systems shared by all models of one scan.
struct Probes {
    zero: IdentitySystem,
    square: Vec<(u32, u32, Identity)>,
    degree: Vec<(usize, Identity)>,
}

impl Probes {
    fn new() -> Self {
        let x: Word = "x".parse().unwrap();
        let zero = ZeroIdentity::new(x.clone().inv()).expand();
        let mut square = Vec::new();
        for p in 1..=4u32 {
            for q in 1..=4u32 {
                let rhs = Word::product([x.pow(p as usize), x.clone().inv().pow(q as usize)]).unwrap();
                square.push((p, q, Identity::new(x.pow(2), rhs)));
            }
        }
        let mut degree = Vec::new();
        for n in 1..=3 {
            for i in 1..=n {
                for j in i..=n {
                    degree.push((n, make_deg_identity(n, i, j).unwrap()));
                }
            }
        }
        Probes { zero, square, degree }
    }
}

/// Failure messages per invariant, in [`INVARIANTS`] order.
fn check_model(s: &FiniteEpigroup, probes: &Probes) -> [Option<String>; 6] {
    let mut out: [Option<String>; 6] = Default::default();
    for x in s.elements() {
        let xb = s.pseudoinverse(x);
        let e = idempotent_power_by_search(s, x);
        if out[0].is_none() && (s.mul(x, xb) != e || s.mul(xb, x) != e) {
            out[0] = Some(format!("x={x}: x x~={}, x~ x={}, idempotent power {e}", s.mul(x, xb), s.mul(xb, x)));
        }
        let w = s.omega(x);
        let d = s.pseudoinverse(xb);
        let terms = [s.mul(w, x), s.mul(x, w), d, s.mul(w, d), s.mul(d, w)];
        if out[1].is_none() && terms.iter().any(|&t| t != terms[0]) {
            out[1] = Some(format!("x={x}: terms {terms:?}"));
        }
        if out[3].is_none() && (x == d) != is_group_element_by_search(s, x) {
            out[3] = Some(format!("x={x}: x~~={d}"));
        }
    }
    let zero_holds = s.satisfies(&probes.zero);
    if zero_holds != is_nil_by_search(s) {
        out[2] = Some(format!("x~ = 0 holds: {zero_holds}, nil: {}", !zero_holds));
    }
    for (p, q, id) in &probes.square {
        if s.satisfies_identity(id) {
            if let Some(x) = s.elements().find(|&x| !is_group_element_by_search(s, s.mul(x, x))) {
                out[4] = Some(format!("satisfies `{id}` (p={p}, q={q}) but x^2 is not a group element at x={x}"));
                break;
            }
        }
    }
    'deg: for (n, id) in &probes.degree {
        if s.satisfies_identity(id) {
            for sub in nil_subsemigroups(s) {
                let k = nilpotency_index_by_products(&sub).expect("nil");
                if k > *n {
                    out[5] = Some(format!("satisfies `{id}` but has a nil subsemigroup of index {k}"));
                    break 'deg;
                }
            }
        }
    }
    out
}

#[derive(Serialize)]
struct InvariantTotals {
    name: &'static str,
    checked: usize,
    failures: usize,
}

#[derive(Serialize)]
struct MatchRecord {
    table: Vec<Vec<usize>>,
    nil: bool,
    nilpotency_index: Option<usize>,
    commutative: bool,
    idempotents: Vec<usize>,
    group_elements: Vec<usize>,
}

/// Every associative table of `order` (optionally filtered by an identity
/// file) checked against the epigroup invariants, plus a seeded spot check
/// of the semilattice word problem.
pub fn cmd_scan(order: usize, identities: Option<&str>, opts: &ScanOptions) -> Result<Report, CliError> {
    let t0 = Instant::now();
    let mut report = Report::new("scan");
    report.settings.insert("order".into(), order.to_string());
    report.settings.insert("dedupe".into(), opts.dedupe.to_string());
    report.settings.insert("seed".into(), opts.seed.to_string());

    let filter = match identities {
        Some(spec) => {
            let (text, d) = load(spec, |_| None)?;
            report.inputs.push(d);
            Some(parse_presentation(&text).map_err(|e| CliError::new(spec, e))?.system())
        }
        None => None,
    };
    let mut models =
        enumerate_with_jobs(order, filter.as_ref(), opts.jobs).map_err(|e| CliError::new("order", e))?;
    let tables = models.len();
    if opts.dedupe {
        let mut seen = HashSet::new();
        models.retain(|s| seen.insert(s.canonical_table()));
    }

    let probes = Probes::new();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| CliError::new("--jobs", e))?;
    let outcomes: Vec<[Option<String>; 6]> = pool.install(|| models.par_iter().map(|s| check_model(s, &probes)).collect());

    let mut totals: Vec<InvariantTotals> =
        INVARIANTS.iter().map(|&name| InvariantTotals { name, checked: models.len(), failures: 0 }).collect();
    let mut first_failure = None;
    for (i, o) in outcomes.iter().enumerate() {
        for (k, msg) in o.iter().enumerate() {
            if let Some(msg) = msg {
                totals[k].failures += 1;
                if first_failure.is_none() {
                    first_failure = Some((i, INVARIANTS[k], msg.clone()));
                }
            }
        }
    }
    if let Some((i, name, msg)) = &first_failure {
        report.passed = false;
        report.witnesses.push(format!("{name}: {msg}\n{}", to_cayley_string(&models[*i])));
    }

    let sl2 = fixture("sl2").expect("sl2 fixture");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut sl_mismatches = 0;
    for _ in 0..SL_SPOT_CHECKS {
        let id = random_identity(&mut rng, 4, 8);
        if sl_holds(&id) != sl2.satisfies_identity(&id) {
            sl_mismatches += 1;
            if sl_mismatches == 1 {
                report.witnesses.push(format!("sl_word_problem: `{id}`"));
            }
        }
    }
    if sl_mismatches > 0 {
        report.passed = false;
    }

    let matches: Option<Vec<MatchRecord>> = filter.as_ref().map(|_| {
        models
            .iter()
            .map(|s| MatchRecord {
                table: s.rows(),
                nil: s.is_nil(),
                nilpotency_index: s.nilpotency_index().ok(),
                commutative: s.is_commutative(),
                idempotents: s.idempotents(),
                group_elements: s.group_elements(),
            })
            .collect()
    });

    report.summary.push(format!(
        "order {order}: {} candidates, {tables} tables{}{}",
        candidate_count(order),
        if filter.is_some() { " matching the filter" } else { "" },
        if opts.dedupe { format!(", {} up to isomorphism", models.len()) } else { String::new() }
    ));
    for t in &totals {
        report.summary.push(format!("{:<28} {} checked, {} failures", t.name, t.checked, t.failures));
    }
    report.summary.push(format!("{:<28} {SL_SPOT_CHECKS} identities, {sl_mismatches} mismatches", "sl_word_problem"));
    report.summary.extend(report.witnesses.iter().map(|w| format!("witness: {w}")));

    report.results = json!({
        "order": order,
        "candidates": candidate_count(order),
        "tables": tables,
        "models": models.len(),
        "invariants": totals,
        "sl_word_problem": { "identities": SL_SPOT_CHECKS, "mismatches": sl_mismatches },
        "matches": matches,
    });
    report.timing_ms = elapsed_ms(t0);
    Ok(report)
}
