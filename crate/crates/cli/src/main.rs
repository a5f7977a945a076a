use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pathpair_cli::census::{parse_checks, run_census, run_check, CheckOptions};
use pathpair_cli::family::{expand, Family};
use pathpair_cli::report::{save, Report, Timer};
use pathpair_cli::{load, parse_ratio, parse_vertex_set, write_file, CliError, Exit};
use pathpair_core::constructions::triangle_hub;
use pathpair_core::graph::{SimpleGraph, VertexSet};
use pathpair_core::io::{
    emit_annotated, emit_dot_labeled, emit_graph, emit_multigraph, parse_graph, parse_multigraph,
    parse_pairs,
};
use pathpair_core::lemma::random::{random_planar_multigraph, rng_from_seed};
use pathpair_core::lemma::{
    build_auxiliary_pairing_graph, classify_bad_edges, degree_partition, extract_matching,
    fact1_check, hub_multigraph, lemma3_trichotomy_with, lemma5_check, radius_for,
    refine_partition, split_into_matchings, weak_reachability,
};
use pathpair_core::pairings::random_full_pairing;
use pathpair_core::paths::Pairing;
use pathpair_core::router::{classify_pair, route};
use pathpair_core::solver::{find_disjoint_paths, Routing, DEFAULT_BUDGET};
use pathpair_core::verifier::{is_k_path_pairable, is_path_pairable, Verdict, VerifyOptions};
use serde_json::json;

/// Path-pairability workbench.
#[derive(Parser, Debug)]
#[command(name = "pathpair", version)]
struct Cli {
    /// Write a JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Include wall-clock timings in JSON reports.
    #[arg(long, global = true)]
    timings: bool,
    /// Treat a counterexample as success and a clean pass as failure.
    #[arg(long, global = true)]
    expect_fail: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print a graph from a named family in edge-list (or DOT) format.
    Generate {
        /// star, complete, complete-bipartite, ktq, triangle-hub, cycle, random-planar
        family: String,
        params: Vec<usize>,
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Route a full pairing on triangle_hub(k).
    Route {
        #[arg(long)]
        k: usize,
        /// A pairs file or `random:<seed>`.
        #[arg(long, alias = "pairs")]
        pairing: String,
    },
    /// Search for edge-disjoint paths joining the given pairs.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pairs: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Decide (k-)path-pairability exhaustively.
    VerifyPp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        orbits: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// List every failing pairing instead of stopping at the first.
        #[arg(long)]
        all: bool,
    },
    /// Necessary conditions: cut, faudree, planar, planar-degree, no-k5-minor.
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "cut,faudree")]
        conditions: String,
    },
    /// Run one of the structural checks on a graph or multigraph
    #[command(subcommand)]
    Lemma(LemmaCmd),
    /// Run checks over graph families and collect one record per pair.
    Census {
        /// `name:args`, e.g. `triangle-hub:1..2`; repeatable.
        #[arg(long = "family")]
        families: Vec<String>,
        #[arg(long, default_value = "verify-pp,cut")]
        checks: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Random pairings per `route-random` record.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Solve every pairing instead of one per automorphism orbit.
        #[arg(long)]
        no_orbits: bool,
    },
}

#[derive(Args, Debug)]
struct GraphArg {
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Subcommand, Debug)]
enum LemmaCmd {
    /// Exact check of the rational inequality for k >= 2.
    Fact1 {
        #[arg(long)]
        k: usize,
    },
    /// Incidence, far pairs and good k-matchings of a multigraph.
    Trichotomy {
        /// Multigraph in edge-list format (repeats allowed).
        #[arg(long, conflicts_with = "random")]
        graph: Option<PathBuf>,
        /// `n,m`: a random planar multigraph from --seed.
        #[arg(long)]
        random: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        eps1: String,
        #[arg(long)]
        eps2: String,
        #[arg(long, default_value_t = pathpair_core::lemma::trichotomy::DEFAULT_FLOOR)]
        floor: usize,
    },
    /// Degree distribution of side A of a bipartite planar graph.
    Lemma5 {
        #[command(flatten)]
        g: GraphArg,
        /// Side A; defaults to the colour class of vertex 0's colour.
        #[arg(long)]
        a: Option<String>,
    },
    /// Degree partition at threshold D and its migration refinement.
    Partition {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        threshold: usize,
    },
    /// Classify bad edges against B* (A* is the rest).
    Badedges {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        b_star: String,
    },
    /// Multigraph on B* with one multiedge per Y vertex.
    Hub {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        y: String,
        #[arg(long)]
        b_star: String,
    },
    /// Weak reachability from x, plus the auxiliary graph on --u.
    Weak {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        a: String,
        #[arg(long)]
        x: usize,
        #[arg(long, conflicts_with = "eps")]
        radius: Option<usize>,
        /// Radius ceil(4/eps).
        #[arg(long)]
        eps: Option<String>,
        #[arg(long)]
        u: Option<String>,
    },
}

struct Ctx {
    json: Option<PathBuf>,
    timings: bool,
}

impl Ctx {
    fn save<T: serde::Serialize>(
        &self,
        report: Report<'_, T>,
        timer: &Timer,
    ) -> Result<(), CliError> {
        save(self.json.as_deref(), &report.timed(timer))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        json: cli.json.clone(),
        timings: cli.timings,
    };
    let result = match cli.cmd {
        Cmd::Census { jobs: Some(j), .. } | Cmd::VerifyPp { jobs: Some(j), .. } if j == 0 => {
            Err(CliError::Usage("--jobs must be at least 1".into()))
        }
        cmd => run(cmd, &ctx),
    };
    let code = match result {
        Ok(e) if cli.expect_fail => e.expecting_failure(),
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit()
        }
    };
    ExitCode::from(code as u8)
}

fn graph_from(path: &Path) -> Result<SimpleGraph, CliError> {
    load(path, parse_graph)
}

fn run(cmd: Cmd, ctx: &Ctx) -> Result<Exit, CliError> {
    let timer = Timer::start(ctx.timings);
    match cmd {
        Cmd::Generate {
            family,
            params,
            dot,
            seed,
            out,
        } => {
            let fam = Family::from_parts(&family, &params)?;
            let (g, roles) = fam.build(seed)?;
            let text = if dot {
                emit_dot_labeled(&g, &roles)
            } else {
                emit_annotated(&g, &roles)
            };
            match &out {
                Some(p) => write_file(p, &text)?,
                None => print!("{text}"),
            }
            let body = json!({"family": fam.to_string(), "n": g.n(), "edges": g.edge_count(),
                "max_degree": g.max_degree(), "roles": roles});
            ctx.save(Report::new("generate", Some(emit_graph(&g)), body), &timer)?;
            Ok(Exit::Ok)
        }
        Cmd::Route { k, pairing } => {
            let th = triangle_hub(k)?;
            let p = match pairing.strip_prefix("random:") {
                Some(s) => {
                    let seed = s
                        .parse()
                        .map_err(|_| CliError::Usage(format!("bad seed `{s}`")))?;
                    random_full_pairing(th.n(), &mut rng_from_seed(seed))
                }
                None => load(Path::new(&pairing), parse_pairs)?,
            };
            p.check_full(th.n())
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let ps = route(&th, &p)?;
            let mut rows = Vec::new();
            for (&(u, v), path) in p.pairs().iter().zip(ps.paths()) {
                let line: Vec<String> = path.iter().map(|v| v.to_string()).collect();
                println!("{}", line.join(" "));
                rows.push(json!({"pair": [u, v], "case": classify_pair(&th, u, v)?.number(), "path": path}));
            }
            println!("disjoint: true");
            let body = json!({"k": k, "pairing": p, "paths": rows, "disjoint": true});
            ctx.save(
                Report::new(
                    "route",
                    Some(emit_annotated(th.graph(), &th.role_table())),
                    body,
                ),
                &timer,
            )?;
            Ok(Exit::Ok)
        }
        Cmd::Solve {
            graph,
            pairs,
            budget,
        } => {
            let g = graph_from(&graph)?;
            let p = load(&pairs, parse_pairs)?;
            let sol = find_disjoint_paths(&g, &p, budget)?;
            let exit = match &sol.routing {
                Routing::Feasible(ps) => {
                    println!("feasible");
                    for path in ps.paths() {
                        let line: Vec<String> = path.iter().map(|v| v.to_string()).collect();
                        println!("{}", line.join(" "));
                    }
                    Exit::Ok
                }
                Routing::Infeasible => {
                    println!(
                        "infeasible ({} expansions, search complete)",
                        sol.expansions
                    );
                    Exit::Counterexample
                }
                Routing::BudgetExceeded => {
                    println!("budget exceeded after {} expansions", sol.expansions);
                    Exit::Exceeded
                }
            };
            let body = json!({"pairs": p, "solution": sol,
                "exhausted": sol.routing == Routing::Infeasible});
            ctx.save(Report::new("solve", Some(emit_graph(&g)), body), &timer)?;
            Ok(exit)
        }
        Cmd::VerifyPp {
            graph,
            k,
            orbits,
            jobs,
            budget,
            all,
        } => {
            let g = graph_from(&graph)?;
            let opts = VerifyOptions {
                orbits,
                jobs,
                all,
                budget,
                ..VerifyOptions::default()
            };
            let rep = match k {
                Some(k) => is_k_path_pairable(&g, k, &opts)?,
                None => is_path_pairable(&g, &opts)?,
            };
            let exit = match &rep.verdict {
                Verdict::Pairable => {
                    println!(
                        "pairable ({} pairings, {} solved)",
                        rep.pairings, rep.checked
                    );
                    Exit::Ok
                }
                Verdict::Counterexample(p) => {
                    println!("counterexample: {}", pairs_inline(p));
                    Exit::Counterexample
                }
                Verdict::BudgetExceeded(p) => {
                    println!("budget exceeded on: {}", pairs_inline(p));
                    Exit::Exceeded
                }
            };
            let body = json!({"k": k.unwrap_or(g.n() / 2), "report": rep});
            ctx.save(Report::new("verify-pp", Some(emit_graph(&g)), body), &timer)?;
            Ok(exit)
        }
        Cmd::Check { graph, conditions } => {
            let g = graph_from(&graph)?;
            let mut exit = Exit::Ok;
            let mut rows = Vec::new();
            for c in parse_checks(&conditions)? {
                let (status, detail) = run_check(&g, None, c, &CheckOptions::default());
                println!("{c}: {}", status.label());
                exit = exit.merge(status.exit());
                rows.push(json!({"condition": c.to_string(), "status": status, "detail": detail}));
            }
            ctx.save(
                Report::new("check", Some(emit_graph(&g)), json!({"conditions": rows})),
                &timer,
            )?;
            Ok(exit)
        }
        Cmd::Lemma(l) => run_lemma(l, ctx, &timer),
        Cmd::Census {
            families,
            checks,
            seed,
            jobs,
            budget,
            samples,
            no_orbits,
        } => {
            let fams: Vec<Family> = families
                .iter()
                .map(|s| expand(s))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .flatten()
                .collect();
            let checks = parse_checks(&checks)?;
            let opts = CheckOptions {
                seed,
                budget,
                orbits: !no_orbits,
                samples,
            };
            let rep = match jobs {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()?
                    .install(|| run_census(&fams, &checks, &opts, ctx.timings)),
                None => run_census(&fams, &checks, &opts, ctx.timings),
            };
            for r in &rep.records {
                println!("{} {} {}", r.family, r.check, r.status.label());
            }
            save(ctx.json.as_deref(), &rep)?;
            Ok(rep.exit())
        }
    }
}

fn pairs_inline(p: &Pairing) -> String {
    p.pairs()
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_lemma(cmd: LemmaCmd, ctx: &Ctx, timer: &Timer) -> Result<Exit, CliError> {
    match cmd {
        LemmaCmd::Fact1 { k } => {
            let rep = fact1_check(k)?;
            println!(
                "k = {k}: {} <= {}{}",
                rep.lhs,
                rep.rhs,
                if rep.equality { " (equality)" } else { "" }
            );
            let exit = if rep.holds {
                Exit::Ok
            } else {
                Exit::Counterexample
            };
            ctx.save(Report::new("lemma fact1", None, rep), timer)?;
            Ok(exit)
        }
        LemmaCmd::Trichotomy {
            graph,
            random,
            seed,
            k,
            eps1,
            eps2,
            floor,
        } => {
            let mg = match (graph, random) {
                (Some(p), _) => load(&p, parse_multigraph)?,
                (None, Some(spec)) => {
                    let nm = pathpair_cli::parse_vertex_list(&spec)?;
                    let [n, m] = nm[..] else {
                        return Err(CliError::Usage(format!(
                            "--random wants `n,m`, got `{spec}`"
                        )));
                    };
                    random_planar_multigraph(n, m, seed)?
                }
                (None, None) => return Err(CliError::Usage("give --graph or --random".into())),
            };
            let rep = lemma3_trichotomy_with(
                &mg,
                k,
                &parse_ratio(&eps1)?,
                &parse_ratio(&eps2)?,
                floor,
                &pathpair_core::caps::Caps::from_env(),
            )?;
            println!(
                "M = {}: clustered {}, spread {}, good {k}-matching {}{}",
                rep.m,
                rep.clustered,
                rep.spread,
                rep.has_good_matching,
                if rep.advisory {
                    " (below floor, advisory)"
                } else {
                    ""
                }
            );
            let exit = if rep.any_condition() || rep.advisory {
                Exit::Ok
            } else {
                Exit::Counterexample
            };
            ctx.save(
                Report::new("lemma trichotomy", Some(emit_multigraph(&mg)), rep),
                timer,
            )?;
            Ok(exit)
        }
        LemmaCmd::Lemma5 { g, a } => {
            let g = graph_from(&g.graph)?;
            let a = match a {
                Some(s) => parse_vertex_set(g.n(), &s)?,
                None => {
                    let colour = g
                        .two_coloring()
                        .ok_or_else(|| CliError::Usage("graph is not bipartite".into()))?;
                    VertexSet::new(g.vertices().filter(|&v| !colour[v]))?
                }
            };
            let rep = lemma5_check(&g, &a, &a.complement(g.n()))?;
            println!(
                "degree-2 {} >= {}: {}; |A'| {} < 2|B| {}: {}; e(A',B) {} < 6|B| {}: {}",
                rep.degree_two,
                rep.degree_two_bound,
                rep.degree_two_ok,
                rep.a_prime.len(),
                2 * rep.b_size,
                rep.a_prime_ok,
                rep.e_a_prime_b,
                6 * rep.b_size,
                rep.e_a_prime_ok
            );
            let exit = if rep.all_hold() {
                Exit::Ok
            } else {
                Exit::Counterexample
            };
            ctx.save(
                Report::new("lemma lemma5", Some(emit_graph(&g)), rep),
                timer,
            )?;
            Ok(exit)
        }
        LemmaCmd::Partition { g, threshold } => {
            let g = graph_from(&g.graph)?;
            if threshold == 0 {
                return Err(CliError::Usage("--threshold must be at least 1".into()));
            }
            let start = degree_partition(&g, threshold);
            let done = refine_partition(&g, &start);
            for m in &done.history {
                println!("move {}: cut {} -> {}", m.vertex, m.cut_before, m.cut_after);
            }
            println!("t = {}, cut = {}, |B| = {}", done.t, done.cut, done.b.len());
            let body = json!({"initial": start, "refined": done});
            ctx.save(
                Report::new("lemma partition", Some(emit_graph(&g)), body),
                timer,
            )?;
            Ok(Exit::Ok)
        }
        LemmaCmd::Badedges { g, b_star } => {
            let g = graph_from(&g.graph)?;
            let b = parse_vertex_set(g.n(), &b_star)?;
            let a = b.complement(g.n());
            let rep = classify_bad_edges(&g, &a, &b)?;
            let [t1, t2, t3, t4] = rep.counts();
            println!(
                "type I {t1}, type II {t2}, type III {t3}, type IV {t4}, good {}",
                rep.good
            );
            let matchings = split_into_matchings(&g, &a).ok();
            let body = json!({"report": rep, "a_star_matchings": matchings});
            ctx.save(
                Report::new("lemma badedges", Some(emit_graph(&g)), body),
                timer,
            )?;
            Ok(Exit::Ok)
        }
        LemmaCmd::Hub { g, y, b_star } => {
            let g = graph_from(&g.graph)?;
            let h = hub_multigraph(
                &g,
                &parse_vertex_set(g.n(), &y)?,
                &parse_vertex_set(g.n(), &b_star)?,
            )?;
            let text = emit_multigraph(&h.multigraph);
            print!("{text}");
            let body = json!({"b_star": h.b_star, "source": h.source, "multigraph": text});
            ctx.save(Report::new("lemma hub", Some(emit_graph(&g)), body), timer)?;
            Ok(Exit::Ok)
        }
        LemmaCmd::Weak {
            g,
            a,
            x,
            radius,
            eps,
            u,
        } => {
            let g = graph_from(&g.graph)?;
            let a = parse_vertex_set(g.n(), &a)?;
            let radius = match (radius, eps) {
                (Some(r), _) => r,
                (None, Some(e)) => radius_for(&parse_ratio(&e)?)?,
                (None, None) => return Err(CliError::Usage("give --radius or --eps".into())),
            };
            let w = weak_reachability(&g, &a, &a.complement(g.n()), x, radius)?;
            println!("Y_x = {:?}", w.reachable.members());
            println!("X(x, {radius}) = {:?}", w.ball.members());
            println!("U_x = {:?}", w.close.members());
            let aux = match u {
                Some(s) => {
                    let u = parse_vertex_set(g.n(), &s)?;
                    let h = build_auxiliary_pairing_graph(&g, &a, &u, radius)?;
                    let m = extract_matching(&h)?;
                    let pairs: Vec<(usize, usize)> = m
                        .iter()
                        .map(|&(i, j)| (u.members()[i], u.members()[j]))
                        .collect();
                    println!("auxiliary matching: {pairs:?}");
                    Some(json!({"u": u, "graph": emit_graph(&h), "matching": pairs}))
                }
                None => None,
            };
            let body = json!({"weak": w, "auxiliary": aux});
            ctx.save(Report::new("lemma weak", Some(emit_graph(&g)), body), timer)?;
            Ok(Exit::Ok)
        }
    }
}
