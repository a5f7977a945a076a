//! Exhaustive path-pairability checks.
//!
//! Pairings are visited in lexicographic order of their canonical pair
//! lists, and the reported counterexample is always the first failing one in
//! that order, whatever the thread count. With orbit reduction only the
//! minimal member of each automorphism orbit is solved; since the first
//! failing pairing is minimal in its own orbit, the witness does not change.

use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::caps::{CapExceeded, Caps};
use crate::graph::SimpleGraph;
use crate::pairings::{automorphisms, k_pairings, pairing_count, pairing_orbits};
use crate::paths::Pairing;
use crate::solver::{find_disjoint_paths, Routing, SolverError, DEFAULT_BUDGET};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("path-pairability needs an even number of vertices, got {0}")]
    OddOrder(usize),
    #[error("{k} pairs need at least {} vertices, graph has {n}", 2 * k)]
    TooFewVertices { n: usize, k: usize },
    #[error(transparent)]
    Cap(#[from] CapExceeded),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Solve one representative per automorphism orbit.
    pub orbits: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Keep going after the first counterexample and list every failure.
    pub all: bool,
    /// Node-expansion budget per pairing.
    pub budget: u64,
    pub caps: Caps,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            orbits: false,
            jobs: None,
            all: false,
            budget: DEFAULT_BUDGET,
            caps: Caps::from_env(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "snake_case")]
pub enum Verdict {
    Pairable,
    Counterexample(Pairing),
    /// No counterexample found, but this pairing (the first such) ran out
    /// of budget.
    BudgetExceeded(Pairing),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub verdict: Verdict,
    /// Pairings in the quantified family.
    pub pairings: u128,
    /// Orbit count when reduction was on.
    pub orbits: Option<usize>,
    /// Pairings decided, counted in enumeration order up to the witness
    /// (or all of them).
    pub checked: usize,
    /// Every failing pairing checked, in order; only filled with `all`.
    pub failures: Vec<Pairing>,
}

impl VerifyReport {
    pub fn is_pairable(&self) -> bool {
        self.verdict == Verdict::Pairable
    }
}

/// Every full pairing realizable by edge-disjoint paths?
pub fn is_path_pairable(
    g: &SimpleGraph,
    opts: &VerifyOptions,
) -> Result<VerifyReport, VerifyError> {
    if g.n() % 2 == 1 {
        return Err(VerifyError::OddOrder(g.n()));
    }
    is_k_path_pairable(g, g.n() / 2, opts)
}

/// Every choice of `k` disjoint terminal pairs realizable?
pub fn is_k_path_pairable(
    g: &SimpleGraph,
    k: usize,
    opts: &VerifyOptions,
) -> Result<VerifyReport, VerifyError> {
    let n = g.n();
    if n < 2 * k {
        return Err(VerifyError::TooFewVertices { n, k });
    }
    let total = pairing_count(n, k).unwrap_or(u128::MAX);
    Caps::check("pairing count", total, opts.caps.pairings)?;
    let all = k_pairings(n, k);
    let (candidates, orbits): (Vec<Pairing>, Option<usize>) = if opts.orbits {
        let group = automorphisms(g);
        let reps: Vec<Pairing> = pairing_orbits(&group, &all)
            .iter()
            .map(|o| all[o[0]].clone())
            .collect();
        let count = reps.len();
        (reps, Some(count))
    } else {
        (all, None)
    };
    let run = || check_all(g, &candidates, opts);
    let (verdict, checked, failures) = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| VerifyError::ThreadPool(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    Ok(VerifyReport {
        verdict,
        pairings: total,
        orbits,
        checked,
        failures,
    })
}

type Outcome = (Verdict, usize, Vec<Pairing>);

fn check_all(
    g: &SimpleGraph,
    candidates: &[Pairing],
    opts: &VerifyOptions,
) -> Result<Outcome, VerifyError> {
    if opts.all {
        let results: Vec<Routing> = candidates
            .par_iter()
            .map(|p| find_disjoint_paths(g, p, opts.budget).map(|s| s.routing))
            .collect::<Result<_, _>>()?;
        let failures: Vec<Pairing> = results
            .iter()
            .zip(candidates)
            .filter(|(r, _)| **r == Routing::Infeasible)
            .map(|(_, p)| p.clone())
            .collect();
        let undecided = results.iter().position(|r| *r == Routing::BudgetExceeded);
        let verdict = match (failures.first(), undecided) {
            (Some(p), _) => Verdict::Counterexample(p.clone()),
            (None, Some(i)) => Verdict::BudgetExceeded(candidates[i].clone()),
            (None, None) => Verdict::Pairable,
        };
        return Ok((verdict, candidates.len(), failures));
    }
    let first_undecided = Mutex::new(None::<usize>);
    let first_error = Mutex::new(None::<(usize, SolverError)>);
    let witness = candidates.par_iter().enumerate().find_map_first(|(i, p)| {
        match find_disjoint_paths(g, p, opts.budget) {
            Ok(s) => match s.routing {
                Routing::Infeasible => return Some(i),
                Routing::BudgetExceeded => {
                    let mut slot = first_undecided.lock().unwrap();
                    *slot = Some(slot.map_or(i, |j| j.min(i)));
                }
                Routing::Feasible(_) => {}
            },
            Err(e) => {
                let mut slot = first_error.lock().unwrap();
                if slot.as_ref().is_none_or(|(j, _)| i < *j) {
                    *slot = Some((i, e));
                }
            }
        }
        None
    });
    if let Some((_, e)) = first_error.into_inner().unwrap() {
        return Err(e.into());
    }
    Ok(match (witness, first_undecided.into_inner().unwrap()) {
        (Some(i), _) => (
            Verdict::Counterexample(candidates[i].clone()),
            i + 1,
            Vec::new(),
        ),
        (None, Some(i)) => (
            Verdict::BudgetExceeded(candidates[i].clone()),
            candidates.len(),
            Vec::new(),
        ),
        (None, None) => (Verdict::Pairable, candidates.len(), Vec::new()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, star, triangle_hub};

    fn c4() -> SimpleGraph {
        SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn opts() -> VerifyOptions {
        VerifyOptions {
            caps: Caps::default(),
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn c4_fails_on_the_diagonals() {
        for orbits in [false, true] {
            let r = is_path_pairable(&c4(), &VerifyOptions { orbits, ..opts() }).unwrap();
            let diag = Pairing::new(vec![(0, 2), (1, 3)]).unwrap();
            assert_eq!(r.verdict, Verdict::Counterexample(diag));
            assert_eq!(r.checked, 2);
        }
    }

    #[test]
    fn small_pairable_graphs() {
        for g in [
            complete(4),
            complete(6),
            complete_bipartite(3, 3),
            triangle_hub(1).unwrap().graph().clone(),
        ] {
            let r = is_path_pairable(&g, &opts()).unwrap();
            assert!(r.is_pairable(), "{:?}", r);
        }
        let r = is_path_pairable(&complete(4), &opts()).unwrap();
        assert_eq!((r.pairings, r.checked), (3, 3));
    }

    #[test]
    fn stars_are_k_pairable() {
        for k in 1..=3 {
            let r = is_k_path_pairable(&star(2 * k).unwrap(), k, &opts()).unwrap();
            assert!(r.is_pairable());
        }
        let r = is_k_path_pairable(&star(4).unwrap(), 3, &opts());
        assert_eq!(r, Err(VerifyError::TooFewVertices { n: 5, k: 3 }));
    }

    #[test]
    fn odd_order_rejected() {
        assert_eq!(
            is_path_pairable(&complete(5), &opts()),
            Err(VerifyError::OddOrder(5))
        );
    }

    #[test]
    fn all_mode_lists_failures() {
        let r = is_path_pairable(
            &c4(),
            &VerifyOptions {
                all: true,
                ..opts()
            },
        )
        .unwrap();
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.checked, 3);
        let p4 = SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = is_path_pairable(
            &p4,
            &VerifyOptions {
                all: true,
                jobs: Some(2),
                ..opts()
            },
        )
        .unwrap();
        assert_eq!(r.failures.len(), 2);
    }

    #[test]
    fn c4_not_two_pairable() {
        let r = is_k_path_pairable(&c4(), 2, &opts()).unwrap();
        assert!(!r.is_pairable());
        assert!(is_k_path_pairable(&c4(), 1, &opts()).unwrap().is_pairable());
    }

    #[test]
    fn pairing_cap_applies() {
        let tight = VerifyOptions {
            caps: Caps {
                pairings: 2,
                ..Caps::default()
            },
            ..opts()
        };
        assert!(matches!(
            is_path_pairable(&complete(4), &tight),
            Err(VerifyError::Cap(_))
        ));
    }
}
