//! Acceptance run: one line per criterion, non-zero exit if any fails.
//! Built with `harness = false`, so `main` drives everything.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use pathpair_core::caps::Caps;
use pathpair_core::conditions::{cut_condition, faudree_consistency};
use pathpair_core::constructions::{complete, complete_bipartite, k_t_q, star, triangle_hub};
use pathpair_core::graph::{edge_cut, SimpleGraph, Vertex};
use pathpair_core::lemma::random::{
    random_bipartite_planar, random_dirac_graph, random_graph, random_multigraph,
    random_planar_multigraph, rng_from_seed,
};
use pathpair_core::lemma::{
    degree_partition, extract_matching, fact1_check, find_good_matching, greedy_matching,
    lemma5_check, refine_partition,
};
use pathpair_core::multigraph::{contract_matching, Multigraph};
use pathpair_core::pairings::full_pairings;
use pathpair_core::paths::Pairing;
use pathpair_core::planarity::{is_planar, Planarity};
use pathpair_core::router::route;
use pathpair_core::solver::{find_disjoint_paths, Routing, DEFAULT_BUDGET};
use pathpair_core::verifier::{is_k_path_pairable, is_path_pairable, Verdict, VerifyOptions};
use rand::Rng;

use common::*;

type Outcome = Result<String, String>;

/// Graphs certified pairable anywhere in the run, as (label, n, max degree).
#[derive(Default)]
struct Certified(Vec<(String, usize, usize)>);

impl Certified {
    fn add(&mut self, label: impl Into<String>, g: &SimpleGraph) {
        self.0.push((label.into(), g.n(), max_degree(g)));
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn opts(orbits: bool) -> VerifyOptions {
    VerifyOptions {
        orbits,
        caps: Caps::default(),
        ..VerifyOptions::default()
    }
}

/// Maximum degree straight from the edge list.
fn max_degree(g: &SimpleGraph) -> usize {
    let mut deg = vec![0; g.n()];
    for &(u, v) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

fn c1(cert: &mut Certified) -> Outcome {
    let th = triangle_hub(1).map_err(|e| e.to_string())?;
    let all = full_pairings(th.n());
    ensure(all.len() == 15, || format!("{} pairings", all.len()))?;
    for p in &all {
        let ps = route(&th, p).map_err(|e| format!("{p:?}: {e}"))?;
        ensure(valid_system(th.graph(), p.pairs(), ps.paths()), || {
            format!("{p:?}: invalid paths")
        })?;
    }
    let rep = is_path_pairable(th.graph(), &opts(true)).map_err(|e| e.to_string())?;
    ensure(rep.is_pairable(), || {
        format!("verifier says {:?}", rep.verdict)
    })?;
    cert.add("triangle_hub(1)", th.graph());
    Ok("15/15 routed, verifier certifies".into())
}

fn c2(cert: &mut Certified) -> Outcome {
    let th = triangle_hub(2).map_err(|e| e.to_string())?;
    let all = full_pairings(th.n());
    ensure(all.len() == 10395, || format!("{} pairings", all.len()))?;
    for p in &all {
        let ps = route(&th, p).map_err(|e| format!("{p:?}: {e}"))?;
        ensure(valid_system(th.graph(), p.pairs(), ps.paths()), || {
            format!("{p:?}: invalid paths")
        })?;
    }
    cert.add("triangle_hub(2)", th.graph());
    Ok("10395/10395 routed and re-checked".into())
}

fn c3(_: &mut Certified) -> Outcome {
    for k in 1..=50 {
        let th = triangle_hub(k).map_err(|e| e.to_string())?;
        let (n, d) = (th.n(), max_degree(th.graph()));
        ensure(n == 6 * k && d == 4 * k && 3 * d == 2 * n, || {
            format!("k = {k}: n = {n}, max degree {d}")
        })?;
        match is_planar(th.graph()) {
            Planarity::Planar(emb) => {
                ensure(emb.verify(th.graph()), || format!("k = {k}: bad embedding"))?
            }
            Planarity::NonPlanar(_) => return Err(format!("k = {k}: reported non-planar")),
        }
    }
    Ok("k = 1..50".into())
}

fn c4(_: &mut Certified) -> Outcome {
    let g = SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    ensure(cut_condition_holds(&g), || {
        "oracle: cut condition fails".into()
    })?;
    ensure(
        cut_condition(&g).map_err(|e| e.to_string())?.holds(),
        || "cut condition reported violated".into(),
    )?;
    let diagonal = Pairing::new(vec![(0, 2), (1, 3)]).unwrap();
    ensure(!naive_feasible(&g, diagonal.pairs()), || {
        "oracle: diagonal routable".into()
    })?;
    for orbits in [false, true] {
        let rep = is_path_pairable(&g, &opts(orbits)).map_err(|e| e.to_string())?;
        ensure(
            rep.verdict == Verdict::Counterexample(diagonal.clone()),
            || format!("orbits = {orbits}: {:?}", rep.verdict),
        )?;
    }
    Ok("cut condition holds, witness 0-2 1-3".into())
}

fn c5(cert: &mut Certified) -> Outcome {
    let full = [
        ("K4", complete(4)),
        ("K6", complete(6)),
        ("K3,3", complete_bipartite(3, 3)),
    ];
    for (name, g) in &full {
        let rep = is_path_pairable(g, &opts(true)).map_err(|e| e.to_string())?;
        ensure(rep.is_pairable(), || format!("{name}: {:?}", rep.verdict))?;
        cert.add(*name, g);
    }
    for k in 1..=3 {
        let g = star(2 * k).map_err(|e| e.to_string())?;
        let rep = is_k_path_pairable(&g, k, &opts(true)).map_err(|e| e.to_string())?;
        ensure(rep.is_pairable(), || {
            format!("star({}): {:?}", 2 * k, rep.verdict)
        })?;
    }
    Ok("K4, K6, K3,3 pairable; star(2k) k-pairable for k <= 3".into())
}

fn c6(_: &mut Certified) -> Outcome {
    for t in 1..=20 {
        for q in 1..=20 {
            let g = k_t_q(t, q).map_err(|e| e.to_string())?;
            let d = max_degree(&g);
            ensure(g.n() == t * q && d == t + q - 2, || {
                format!("t = {t}, q = {q}: n = {}, max degree {d}", g.n())
            })?;
        }
    }
    Ok("400 shapes".into())
}

fn c7(cert: &mut Certified) -> Outcome {
    for n in [2, 4, 6] {
        for g in graphs_up_to_iso(n, 15) {
            if is_path_pairable(&g, &opts(true))
                .map_err(|e| e.to_string())?
                .is_pairable()
            {
                cert.add(format!("n = {n} class"), &g);
            }
        }
    }
    for (label, n, d) in &cert.0 {
        ensure(
            faudree_oracle(*n, *d) && faudree_consistency(*n, *d),
            || format!("{label}: n = {n}, max degree {d}"),
        )?;
    }
    Ok(format!("{} certified graphs", cert.0.len()))
}

fn c8(_: &mut Certified) -> Outcome {
    let one = BigInt::from(1);
    for k in 2..=64usize {
        let r = fact1_check(k).map_err(|e| e.to_string())?;
        let x = BigInt::from(1) << k;
        let lhs = BigRational::new(2 * &x + &one, 2 * (&x - &one) * (&x - &one));
        let rhs = BigRational::new(BigInt::from(2), x.clone());
        let poly = (2 * &x - &one) * (&x - BigInt::from(4));
        ensure(r.lhs == lhs && r.rhs == rhs, || {
            format!("k = {k}: values differ")
        })?;
        ensure(r.holds && poly >= BigInt::from(0), || {
            format!("k = {k}: fails")
        })?;
        let eq = poly == BigInt::from(0);
        ensure(r.equality == eq && eq == (k == 2), || {
            format!("k = {k}: equality flag {}", r.equality)
        })?;
    }
    Ok("k = 2..64, equality only at k = 2".into())
}

/// Index of each contracted class, ranked by its smallest original vertex.
fn class_index(mg: &Multigraph, matched: &[(Vertex, Vertex)]) -> Vec<usize> {
    let mut owner: Vec<Vertex> = (0..mg.n()).collect();
    for &(u, v) in matched {
        owner[u] = u.min(v);
        owner[v] = u.min(v);
    }
    let mut mins: Vec<Vertex> = owner.clone();
    mins.sort_unstable();
    mins.dedup();
    owner
        .iter()
        .map(|o| mins.binary_search(o).unwrap())
        .collect()
}

fn c9(_: &mut Certified) -> Outcome {
    let mut rng = rng_from_seed(9);
    for i in 0..500u64 {
        let n = rng.gen_range(2..=12);
        let m = rng.gen_range(0..=30);
        let mg = random_planar_multigraph(n, m, 9_000 + i).map_err(|e| e.to_string())?;
        let found = find_good_matching(&mg, 5).map_err(|e| e.to_string())?;
        ensure(found.is_none(), || {
            format!("seed {}: good 5-matching {found:?}", 9_000 + i)
        })?;
    }
    let mut found_count = 0;
    let mut tries = 0;
    while found_count < 500 {
        tries += 1;
        ensure(tries < 200_000, || {
            format!("only {found_count} good matchings found")
        })?;
        let k = rng.gen_range(1..=4);
        let n = rng.gen_range(2 * k..=12);
        let m = rng.gen_range(k..=30);
        let mg = random_multigraph(n, m, &mut rng).map_err(|e| e.to_string())?;
        let Some(ids) = find_good_matching(&mg, k).map_err(|e| e.to_string())? else {
            continue;
        };
        found_count += 1;
        let matched: Vec<(Vertex, Vertex)> = ids
            .iter()
            .map(|&id| {
                let e = mg.multiedges().iter().find(|e| e.id == id).unwrap();
                (e.u, e.v)
            })
            .collect();
        let c = contract_matching(&mg, &ids).map_err(|e| e.to_string())?;
        let idx = class_index(&mg, &matched);
        let merged: Vec<usize> = matched.iter().map(|&(u, _)| idx[u]).collect();
        let h = c.underlying_simple();
        ensure(c.n() == n - k, || {
            format!("{} vertices after contracting {k}", c.n())
        })?;
        for (i, &a) in merged.iter().enumerate() {
            for &b in &merged[i + 1..] {
                ensure(a != b && h.has_edge(a, b), || {
                    format!("k = {k}: merged {a} and {b} not adjacent")
                })?;
            }
        }
    }
    Ok(format!(
        "500 planar without a good 5-matching; 500 contractions to K_k ({tries} draws)"
    ))
}

fn c10(_: &mut Certified) -> Outcome {
    let mut rng = rng_from_seed(10);
    for i in 0..1000 {
        let (g, a, b) = random_bipartite_planar(40, &mut rng);
        let r = lemma5_check(&g, &a, &b).map_err(|e| format!("graph {i}: {e}"))?;
        let deg = |v: Vertex| g.edges().iter().filter(|&&(x, y)| x == v || y == v).count();
        let e_ab = g
            .edges()
            .iter()
            .filter(|&&(u, v)| a.contains(u) != a.contains(v))
            .count();
        let two = a.iter().filter(|&&v| deg(v) == 2).count();
        let prime: Vec<Vertex> = a.iter().copied().filter(|&v| deg(v) >= 3).collect();
        let e_prime: usize = prime.iter().map(|&v| deg(v)).sum();
        let (n, nb) = (g.n() as i64, b.len() as i64);
        ensure(
            r.e_ab == e_ab
                && r.degree_two == two
                && r.a_prime.len() == prime.len()
                && r.e_a_prime_b == e_prime,
            || format!("graph {i}: counts differ"),
        )?;
        ensure(two as i64 >= e_ab as i64 - n - 3 * nb, || {
            format!("graph {i}: degree-two bound")
        })?;
        ensure((prime.len() as i64) < 2 * nb, || {
            format!("graph {i}: |A'| = {}, |B| = {nb}", prime.len())
        })?;
        ensure((e_prime as i64) < 6 * nb, || {
            format!("graph {i}: e(A', B) = {e_prime}, |B| = {nb}")
        })?;
        ensure(r.all_hold(), || format!("graph {i}: report flags"))?;
    }
    Ok("1000 graphs".into())
}

fn c11(_: &mut Certified) -> Outcome {
    let mut graphs = 0;
    let mut instances = 0;
    for n in 1..=6 {
        let pairings: Vec<Vec<(Vertex, Vertex)>> = (1..=3.min(n / 2))
            .flat_map(|k| pairings_of_size(n, k))
            .collect();
        for g in graphs_up_to_iso(n, 9) {
            graphs += 1;
            for pairs in &pairings {
                instances += 1;
                let p = Pairing::new(pairs.clone()).unwrap();
                let sol = find_disjoint_paths(&g, &p, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                let truth = naive_feasible(&g, pairs);
                let ok = match &sol.routing {
                    Routing::Feasible(ps) => truth && valid_system(&g, pairs, ps.paths()),
                    Routing::Infeasible => !truth,
                    Routing::BudgetExceeded => false,
                };
                ensure(ok, || {
                    format!(
                        "{:?} {pairs:?}: solver {:?}, naive {truth}",
                        g.edges(),
                        sol.routing
                    )
                })?;
            }
        }
    }
    Ok(format!("{graphs} graphs, {instances} instances"))
}

fn c12(_: &mut Certified) -> Outcome {
    let mut rng = rng_from_seed(12);
    let mut moves = 0;
    for i in 0..200 {
        let n = rng.gen_range(1..=40);
        let p = rng.gen_range(0.05..0.6);
        let g = random_graph(n, p, &mut rng);
        let d = rng.gen_range(0..=n);
        let start = degree_partition(&g, d);
        let end = refine_partition(&g, &start);
        let mut b = start.b.clone();
        let mut cut = edge_cut(&g, &b).unwrap();
        ensure(cut == start.cut, || format!("graph {i}: starting cut"))?;
        for m in &end.history {
            let nb = g.neighbors(m.vertex);
            let into_b = nb.iter().filter(|&&w| b.contains(w)).count();
            let into_a = nb.len() - into_b;
            b = b.union(&pathpair_core::graph::VertexSet::new([m.vertex]).unwrap());
            let after = edge_cut(&g, &b).unwrap();
            ensure(
                m.cut_before == cut
                    && m.cut_after == after
                    && after == cut + into_a - into_b
                    && into_a > into_b,
                || format!("graph {i}: migration of {} from {cut} to {after}", m.vertex),
            )?;
            cut = after;
            moves += 1;
        }
        ensure(
            end.b == b && end.cut == cut && end.t == end.history.len(),
            || format!("graph {i}: final state"),
        )?;
        let stuck = end.a.iter().any(|&v| {
            let into_b = g.neighbors(v).iter().filter(|&&w| b.contains(w)).count();
            g.neighbors(v).len() - into_b > into_b
        });
        ensure(!stuck, || format!("graph {i}: a migratable vertex is left"))?;
    }
    Ok(format!("200 graphs, {moves} migrations"))
}

fn is_matching(g: &SimpleGraph, m: &[(Vertex, Vertex)]) -> bool {
    let mut used = vec![false; g.n()];
    m.iter().all(|&(u, v)| {
        g.has_edge(u, v)
            && !std::mem::replace(&mut used[u], true)
            && !std::mem::replace(&mut used[v], true)
    })
}

fn c13(_: &mut Certified) -> Outcome {
    let mut rng = rng_from_seed(13);
    for i in 0..100 {
        let n = 2 * rng.gen_range(1..=15);
        let g = random_dirac_graph(n, rng.gen_range(0.0..0.5), &mut rng);
        ensure(2 * g.min_degree() >= n, || format!("graph {i}: not Dirac"))?;
        let m = extract_matching(&g).map_err(|e| format!("graph {i}: {e}"))?;
        ensure(is_matching(&g, &m) && 2 * m.len() == n, || {
            format!("graph {i}: {} edges on {n}", m.len())
        })?;
    }
    for i in 0..200 {
        let n = rng.gen_range(2..=60);
        let g = random_graph(n, rng.gen_range(0.0..1.0), &mut rng);
        let m = greedy_matching(&g).map_err(|e| format!("graph {i}: {e}"))?;
        let mut used = vec![false; n];
        for &(u, v) in &m {
            used[u] = true;
            used[v] = true;
        }
        let maximal = g.edges().iter().all(|&(u, v)| used[u] || used[v]);
        let nn = BigInt::from(n);
        let density = BigRational::new(BigInt::from(2 * g.edge_count()), &nn * (&nn - 1));
        let bound =
            density * BigRational::from_integer(nn) / BigRational::from_integer(BigInt::from(10));
        ensure(is_matching(&g, &m) && maximal, || {
            format!("graph {i}: not a maximal matching")
        })?;
        ensure(
            BigRational::from_integer(BigInt::from(m.len())) >= bound,
            || format!("graph {i}: |M| = {} below the bound", m.len()),
        )?;
    }
    Ok("100 perfect, 200 greedy".into())
}

type Check = fn(&mut Certified) -> Outcome;

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    // C7 is a suite-wide invariant with no time limit of its own.
    let criteria: [(usize, Option<Duration>, Check); 13] = [
        (1, Some(secs(1)), c1),
        (2, Some(secs(30)), c2),
        (3, Some(secs(5)), c3),
        (4, Some(secs(1)), c4),
        (5, Some(secs(60)), c5),
        (6, Some(secs(1)), c6),
        (7, None, c7),
        (8, Some(secs(1)), c8),
        (9, Some(secs(60)), c9),
        (10, Some(secs(30)), c10),
        (11, Some(secs(600)), c11),
        (12, Some(secs(10)), c12),
        (13, Some(secs(10)), c13),
    ];
    let mut cert = Certified::default();
    let mut failed = 0;
    for (id, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run(&mut cert);
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if took > l => Err(format!(
                "took {:.2} s, limit {} s",
                took.as_secs_f64(),
                l.as_secs()
            )),
            (o, _) => o,
        };
        match outcome {
            Ok(msg) => println!("criterion {id}: PASS ({:.2} s) {msg}", took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {id}: FAIL ({:.2} s) {msg}", took.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        println!("acceptance: 13/13 passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 13 failed");
        ExitCode::FAILURE
    }
}
