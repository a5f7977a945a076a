//! Seeded random inputs for the property suites: stacked triangulations and
//! their subgraphs, planar multigraphs, bipartite planar graphs, G(n, p) and
//! graphs of large minimum degree.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::LemmaError;
use crate::graph::{SimpleGraph, Vertex, VertexSet};
use crate::multigraph::Multigraph;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Edges and faces of a random stacked triangulation on `n` vertices with
/// shuffled labels. For n < 3 the edges of K_n and no faces.
fn stacked<R: Rng>(n: usize, rng: &mut R) -> (Vec<(Vertex, Vertex)>, Vec<[Vertex; 3]>) {
    if n < 3 {
        return (
            (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
            Vec::new(),
        );
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    // both sides of the starting triangle are faces
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    let mut label: Vec<Vertex> = (0..n).collect();
    label.shuffle(rng);
    let edges = edges
        .into_iter()
        .map(|(u, v)| (label[u], label[v]))
        .collect();
    let faces = faces.into_iter().map(|f| f.map(|v| label[v])).collect();
    (edges, faces)
}

/// A random maximal planar graph (3n - 6 edges for n >= 3).
pub fn random_triangulation<R: Rng>(n: usize, rng: &mut R) -> SimpleGraph {
    SimpleGraph::new(n, stacked(n, rng).0).unwrap()
}

/// A random triangulation with each edge kept with probability `keep`.
pub fn random_planar_graph<R: Rng>(n: usize, keep: f64, rng: &mut R) -> SimpleGraph {
    let (edges, _) = stacked(n, rng);
    SimpleGraph::new(n, edges.into_iter().filter(|_| rng.gen_bool(keep))).unwrap()
}

fn max_planar_edges(n: usize) -> usize {
    if n < 3 {
        n * n.saturating_sub(1) / 2
    } else {
        3 * n - 6
    }
}

/// A planar multigraph with exactly `m` multiedges and no loops: a random
/// subset of a triangulation's edges, then the surplus spread as extra
/// multiplicity. Multiedge ids are 0..m in random order.
pub fn random_planar_multigraph(n: usize, m: usize, seed: u64) -> Result<Multigraph, LemmaError> {
    random_planar_multigraph_with(n, m, &mut rng_from_seed(seed))
}

pub fn random_planar_multigraph_with<R: Rng>(
    n: usize,
    m: usize,
    rng: &mut R,
) -> Result<Multigraph, LemmaError> {
    if m > 0 && n < 2 {
        return Err(LemmaError::InfeasibleMultigraph { n, m });
    }
    let (mut edges, _) = stacked(n, rng);
    if m == 0 {
        return Ok(Multigraph::from_pairs(n, std::iter::empty())?);
    }
    edges.shuffle(rng);
    let simple = rng.gen_range(1..=m.min(max_planar_edges(n)));
    edges.truncate(simple);
    let mut pairs = edges.clone();
    for _ in simple..m {
        pairs.push(edges[rng.gen_range(0..simple)]);
    }
    pairs.shuffle(rng);
    Ok(Multigraph::from_pairs(n, pairs)?)
}

/// Any loopless multigraph with `m` multiedges on `n` vertices.
pub fn random_multigraph<R: Rng>(
    n: usize,
    m: usize,
    rng: &mut R,
) -> Result<Multigraph, LemmaError> {
    if m > 0 && n < 2 {
        return Err(LemmaError::InfeasibleMultigraph { n, m });
    }
    let pairs: Vec<(Vertex, Vertex)> = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let v = (u + rng.gen_range(1..n)) % n;
            (u, v)
        })
        .collect();
    Ok(Multigraph::from_pairs(n, pairs)?)
}

/// A bipartite planar graph with sides (A, B). B spans a random
/// triangulation whose edges are then removed; A holds one vertex in some
/// faces (three neighbours), a few parallel degree-two vertices along some
/// edges and some pendant vertices. At most `max_n` vertices in total.
pub fn random_bipartite_planar<R: Rng>(
    max_n: usize,
    rng: &mut R,
) -> (SimpleGraph, VertexSet, VertexSet) {
    assert!(max_n >= 2);
    let nb = rng.gen_range(1..=(max_n / 3).max(1));
    let (tri_edges, faces) = stacked(nb, rng);
    let mut edges = Vec::new();
    let mut next = nb;
    let mut budget = max_n - nb;
    let mut spots: Vec<usize> = (0..faces.len() + tri_edges.len() + nb).collect();
    spots.shuffle(rng);
    for s in spots {
        if budget == 0 {
            break;
        }
        let attach: Vec<Vertex> = if s < faces.len() {
            if !rng.gen_bool(0.6) {
                continue;
            }
            faces[s].to_vec()
        } else if s < faces.len() + tri_edges.len() {
            let (u, v) = tri_edges[s - faces.len()];
            let copies = rng.gen_range(0..=3).min(budget);
            for _ in 0..copies {
                edges.extend([(next, u), (next, v)]);
                next += 1;
            }
            budget -= copies;
            continue;
        } else {
            if !rng.gen_bool(0.3) {
                continue;
            }
            vec![s - faces.len() - tri_edges.len()]
        };
        edges.extend(attach.into_iter().map(|b| (next, b)));
        next += 1;
        budget -= 1;
    }
    let g = SimpleGraph::new(next, edges).unwrap();
    let b = VertexSet::new(0..nb).unwrap();
    let a = b.complement(next);
    (g, a, b)
}

/// G(n, p).
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).unwrap()
}

/// G(n, p) topped up with random edges until every degree is at least
/// ceil(n / 2).
pub fn random_dirac_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in random_graph(n, p, rng).edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let need = n.div_ceil(2);
    // adj[w][v] is written inside, so no iterator over adj
    #[allow(clippy::needless_range_loop)]
    for v in 0..n {
        let mut others: Vec<Vertex> = (0..n).filter(|&w| w != v && !adj[v][w]).collect();
        others.shuffle(rng);
        let have = adj[v].iter().filter(|&&x| x).count();
        for w in others.into_iter().take(need.saturating_sub(have)) {
            adj[v][w] = true;
            adj[w][v] = true;
        }
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u][v]);
    SimpleGraph::new(n, edges.collect::<Vec<_>>()).unwrap()
}
