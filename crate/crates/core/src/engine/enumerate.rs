use rayon::prelude::*;

use super::{first_nonassociative, EngineError, Element, FiniteEpigroup};
use crate::identity::IdentitySystem;

/// Largest order searched exhaustively (3^9 = 19683 candidate tables).
pub const MAX_ENUMERATION_ORDER: usize = 3;

/// Number of raw `order x order` tables.
pub fn candidate_count(order: usize) -> u64 {
    (order as u64).pow((order * order) as u32)
}

pub fn is_associative_table(order: usize, table: &[Element]) -> bool {
    first_nonassociative(order, table).is_none()
}

/// All associative tables of the given order in lexicographic order,
/// optionally keeping only those satisfying `filter`.
pub fn enumerate(order: usize, filter: Option<&IdentitySystem>) -> Result<Vec<FiniteEpigroup>, EngineError> {
    enumerate_with_jobs(order, filter, 1)
}

/// Same output as [`enumerate`], split over `jobs` worker threads.
///
/// The table space is cut into work units by the values of the first two
/// cells; units are searched independently and concatenated in prefix
/// order, so the result does not depend on `jobs`.
pub fn enumerate_with_jobs(
    order: usize,
    filter: Option<&IdentitySystem>,
    jobs: usize,
) -> Result<Vec<FiniteEpigroup>, EngineError> {
    if order == 0 {
        return Err(EngineError::BadShape("order must be at least 1".into()));
    }
    if order > MAX_ENUMERATION_ORDER {
        return Err(EngineError::OrderTooLarge { order, max: MAX_ENUMERATION_ORDER });
    }
    let cells = order * order;
    let prefix_len = cells.min(2);
    let units: Vec<Vec<Element>> = (0..order.pow(prefix_len as u32))
        .map(|code| {
            let mut prefix = vec![0; prefix_len];
            let mut c = code;
            for slot in prefix.iter_mut().rev() {
                *slot = c % order;
                c /= order;
            }
            prefix
        })
        .collect();
    let search = |prefix: &Vec<Element>| search_unit(order, prefix, filter);
    let chunks: Vec<Vec<FiniteEpigroup>> = if jobs <= 1 {
        units.iter().map(search).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| EngineError::BadShape(format!("thread pool: {e}")))?;
        pool.install(|| units.par_iter().map(search).collect())
    };
    Ok(chunks.into_iter().flatten().collect())
}

fn search_unit(order: usize, prefix: &[Element], filter: Option<&IdentitySystem>) -> Vec<FiniteEpigroup> {
    let cells = order * order;
    let mut table = vec![0; cells];
    table[..prefix.len()].copy_from_slice(prefix);
    let mut out = Vec::new();
    loop {
        if is_associative_table(order, &table) {
            let s = FiniteEpigroup::build(order, table.clone()).expect("associative table");
            if filter.is_none_or(|f| s.satisfies(f)) {
                out.push(s);
            }
        }
        let mut i = cells;
        loop {
            if i == prefix.len() {
                return out;
            }
            i -= 1;
            table[i] += 1;
            if table[i] < order {
                break;
            }
            table[i] = 0;
        }
    }
}
