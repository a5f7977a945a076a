//! Batch runs of checks over graph families, one record per
//! (graph, check) pair. Records are computed in parallel and kept in input
//! order.

use std::fmt;
use std::str::FromStr;

use pathpair_core::caps::Caps;
use pathpair_core::conditions::{
    cut_condition, faudree_consistency, planar_degree_floor, CutCondition,
};
use pathpair_core::constructions::triangle_hub;
use pathpair_core::graph::{SimpleGraph, VertexSet};
use pathpair_core::io::emit_graph;
use pathpair_core::lemma::random::rng_from_seed;
use pathpair_core::minor::has_clique_minor;
use pathpair_core::pairings::{full_pairings, pairing_count, random_full_pairing};
use pathpair_core::planarity::{is_planar, Planarity};
use pathpair_core::router::route;
use pathpair_core::solver::DEFAULT_BUDGET;
use pathpair_core::verifier::{is_path_pairable, Verdict, VerifyError, VerifyOptions};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::family::Family;
use crate::report::{Timer, SCHEMA};
use crate::{CliError, Exit};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    RouteAll,
    RouteRandom,
    VerifyPp,
    Cut,
    Faudree,
    Planar,
    PlanarDegree,
    NoK5Minor,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::RouteAll,
        Check::RouteRandom,
        Check::VerifyPp,
        Check::Cut,
        Check::Faudree,
        Check::Planar,
        Check::PlanarDegree,
        Check::NoK5Minor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::RouteAll => "route-all",
            Check::RouteRandom => "route-random",
            Check::VerifyPp => "verify-pp",
            Check::Cut => "cut",
            Check::Faudree => "faudree",
            Check::Planar => "planar",
            Check::PlanarDegree => "planar-degree",
            Check::NoK5Minor => "no-k5-minor",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| {
                let known: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                CliError::Usage(format!("unknown check `{s}` (known: {})", known.join(", ")))
            })
    }
}

pub fn parse_checks(s: &str) -> Result<Vec<Check>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Exceeded,
    NotApplicable,
    /// Reference value only, never a failure.
    Info,
    Error,
}

impl Status {
    pub fn exit(self) -> Exit {
        match self {
            Status::Fail => Exit::Counterexample,
            Status::Exceeded => Exit::Exceeded,
            Status::Error => Exit::Usage,
            _ => Exit::Ok,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Exceeded => "exceeded",
            Status::NotApplicable => "n/a",
            Status::Info => "info",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub seed: u64,
    pub budget: u64,
    pub orbits: bool,
    /// Pairings tried by `route-random`.
    pub samples: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: 0,
            budget: DEFAULT_BUDGET,
            orbits: true,
            samples: 1000,
        }
    }
}

/// Runs one check; `family` is needed only by the routing checks.
pub fn run_check(
    g: &SimpleGraph,
    family: Option<&Family>,
    check: Check,
    opts: &CheckOptions,
) -> (Status, Value) {
    match check {
        Check::RouteAll | Check::RouteRandom => {
            let Some(&Family::TriangleHub(k)) = family else {
                return (
                    Status::NotApplicable,
                    json!({"reason": "routing needs a triangle-hub graph"}),
                );
            };
            route_check(k, check == Check::RouteAll, opts)
        }
        Check::VerifyPp => {
            let vo = VerifyOptions {
                orbits: opts.orbits,
                budget: opts.budget,
                ..VerifyOptions::default()
            };
            match is_path_pairable(g, &vo) {
                Ok(rep) => {
                    let status = match rep.verdict {
                        Verdict::Pairable => Status::Pass,
                        Verdict::Counterexample(_) => Status::Fail,
                        Verdict::BudgetExceeded(_) => Status::Exceeded,
                    };
                    (status, serde_json::to_value(&rep).unwrap())
                }
                Err(VerifyError::OddOrder(n)) => (
                    Status::NotApplicable,
                    json!({"reason": format!("odd vertex count {n}")}),
                ),
                Err(VerifyError::Cap(c)) => (Status::Exceeded, json!({"error": c.to_string()})),
                Err(e) => (Status::Error, json!({"error": e.to_string()})),
            }
        }
        Check::Cut => match cut_condition(g) {
            Ok(c @ CutCondition::Holds) => (Status::Pass, serde_json::to_value(&c).unwrap()),
            Ok(c) => (Status::Fail, serde_json::to_value(&c).unwrap()),
            Err(e) => (Status::Exceeded, json!({"error": e.to_string()})),
        },
        Check::Faudree => {
            let (n, d) = (g.n(), g.max_degree());
            if n < 2 || d == 0 {
                return (Status::NotApplicable, json!({"n": n, "max_degree": d}));
            }
            let holds = faudree_consistency(n, d);
            (
                if holds { Status::Pass } else { Status::Fail },
                json!({"n": n, "max_degree": d, "holds": holds}),
            )
        }
        Check::Planar => match is_planar(g) {
            Planarity::Planar(emb) => (
                Status::Pass,
                json!({"planar": true, "faces": emb.face_count()}),
            ),
            Planarity::NonPlanar(w) => (Status::Fail, json!({"planar": false, "kuratowski": w})),
        },
        Check::PlanarDegree => {
            let floor = planar_degree_floor(g.n());
            (
                Status::Info,
                json!({"max_degree": g.max_degree(), "sqrt_n_ceiling": floor}),
            )
        }
        Check::NoK5Minor => match has_clique_minor(g, 5) {
            Ok(false) => (Status::Pass, json!({"k5_minor": false})),
            Ok(true) => (Status::Fail, json!({"k5_minor": true})),
            Err(e) => (Status::Exceeded, json!({"error": e.to_string()})),
        },
    }
}

fn route_check(k: usize, all: bool, opts: &CheckOptions) -> (Status, Value) {
    let th = match triangle_hub(k) {
        Ok(th) => th,
        Err(e) => return (Status::Error, json!({"error": e.to_string()})),
    };
    let n = th.n();
    let pairings = if all {
        let total = pairing_count(n, n / 2).unwrap_or(u128::MAX);
        let cap = Caps::from_env().pairings;
        if total > cap {
            return (
                Status::Exceeded,
                json!({"error": format!("{total} pairings, above the cap of {cap}")}),
            );
        }
        full_pairings(n)
    } else {
        let mut rng = rng_from_seed(opts.seed);
        (0..opts.samples)
            .map(|_| random_full_pairing(n, &mut rng))
            .collect()
    };
    let failure = pairings
        .par_iter()
        .find_map_first(|p| route(&th, p).err().map(|e| (p.clone(), e.to_string())));
    match failure {
        None => (Status::Pass, json!({"routed": pairings.len()})),
        Some((p, e)) => (
            Status::Fail,
            json!({"routed_before_failure": pairings.len(), "witness": p, "error": e}),
        ),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Record {
    pub family: String,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub schema: u32,
    pub command: &'static str,
    pub seed: u64,
    pub families: Vec<String>,
    pub checks: Vec<String>,
    pub records: Vec<Record>,
}

impl CensusReport {
    pub fn exit(&self) -> Exit {
        self.records
            .iter()
            .fold(Exit::Ok, |e, r| e.merge(r.status.exit()))
    }
}

/// Random families draw from `seed + family index`, routing samples from
/// `seed + record index`.
pub fn run_census(
    families: &[Family],
    checks: &[Check],
    opts: &CheckOptions,
    timings: bool,
) -> CensusReport {
    let built: Vec<_> = families
        .par_iter()
        .enumerate()
        .map(|(i, f)| f.build(opts.seed.wrapping_add(i as u64)).map(|(g, _)| g))
        .collect();
    let jobs: Vec<(usize, Check)> = (0..families.len())
        .flat_map(|i| checks.iter().map(move |&c| (i, c)))
        .collect();
    let records = jobs
        .par_iter()
        .enumerate()
        .map(|(r, &(i, check))| {
            let family = &families[i];
            let timer = Timer::start(timings);
            match &built[i] {
                Err(e) => Record {
                    family: family.to_string(),
                    check: check.to_string(),
                    status: Status::Error,
                    n: None,
                    max_degree: None,
                    graph: None,
                    detail: json!({"error": e.to_string()}),
                    elapsed_ms: None,
                },
                Ok(g) => {
                    let o = CheckOptions {
                        seed: opts.seed.wrapping_add(r as u64),
                        ..*opts
                    };
                    let (status, detail) = run_check(g, Some(family), check, &o);
                    Record {
                        family: family.to_string(),
                        check: check.to_string(),
                        status,
                        n: Some(g.n()),
                        max_degree: Some(g.max_degree()),
                        graph: Some(emit_graph(g)),
                        detail,
                        elapsed_ms: timer.ms(),
                    }
                }
            }
        })
        .collect();
    CensusReport {
        schema: SCHEMA,
        command: "census",
        seed: opts.seed,
        families: families.iter().map(|f| f.to_string()).collect(),
        checks: checks.iter().map(|c| c.to_string()).collect(),
        records,
    }
}

/// Recomputes the witness of a failed record: the counterexample pairing
/// must be infeasible, the violating set must really violate.
pub fn witness_holds(g: &SimpleGraph, rec: &Record, budget: u64) -> Option<bool> {
    use pathpair_core::graph::edge_cut;
    use pathpair_core::paths::Pairing;
    use pathpair_core::solver::{find_disjoint_paths, Routing};
    match (rec.check.as_str(), rec.status) {
        ("verify-pp", Status::Fail) => {
            let pairs: Vec<(usize, usize)> =
                serde_json::from_value(rec.detail["verdict"]["witness"].clone()).ok()?;
            let p = Pairing::new(pairs).ok()?;
            let sol = find_disjoint_paths(g, &p, budget).ok()?;
            Some(sol.routing == Routing::Infeasible)
        }
        ("cut", Status::Fail) => {
            let set: Vec<usize> = serde_json::from_value(rec.detail["set"].clone()).ok()?;
            let cut = rec.detail["cut"].as_u64()? as usize;
            let x = VertexSet::within(g.n(), set).ok()?;
            Some(edge_cut(g, &x).ok()? == cut && cut < x.len() && 2 * x.len() <= g.n())
        }
        _ => None,
    }
}
