//! The high/low degree partition, its migration refinement, the bad-edge
//! classification and the hub multigraph on B*.

use serde::Serialize;

use super::LemmaError;
use crate::graph::{edge_cut, SimpleGraph, Vertex, VertexSet};
use crate::multigraph::Multigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Migration {
    pub vertex: Vertex,
    pub cut_before: usize,
    pub cut_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreePartitionState {
    pub threshold: usize,
    pub a: VertexSet,
    pub b: VertexSet,
    /// Migrations performed so far.
    pub t: usize,
    pub cut: usize,
    pub history: Vec<Migration>,
}

/// B = vertices of degree at least `d`, A = the rest.
pub fn degree_partition(g: &SimpleGraph, d: usize) -> DegreePartitionState {
    let b = VertexSet::new(g.vertices().filter(|&v| g.degree(v) >= d)).unwrap();
    let a = b.complement(g.n());
    let cut = edge_cut(g, &b).unwrap();
    DegreePartitionState {
        threshold: d,
        a,
        b,
        t: 0,
        cut,
        history: Vec::new(),
    }
}

/// Smallest A vertex with more neighbours in A than in B.
pub fn migratable(g: &SimpleGraph, state: &DegreePartitionState) -> Option<Vertex> {
    state
        .a
        .iter()
        .copied()
        .find(|&v| g.degree_into(v, &state.a) > g.degree_into(v, &state.b))
}

/// Moves migratable vertices from A to B, smallest first, until none is
/// left. Each move raises the cut by d_A(v) - d_B(v) >= 1.
pub fn refine_partition(g: &SimpleGraph, state: &DegreePartitionState) -> DegreePartitionState {
    let mut s = state.clone();
    while let Some(v) = migratable(g, &s) {
        let gain = g.degree_into(v, &s.a) - g.degree_into(v, &s.b);
        let before = s.cut;
        s.a = s.a.difference(&VertexSet::new([v]).unwrap());
        s.b = s.b.union(&VertexSet::new([v]).unwrap());
        s.cut = before + gain;
        debug_assert_eq!(s.cut, edge_cut(g, &s.b).unwrap());
        s.t += 1;
        s.history.push(Migration {
            vertex: v,
            cut_before: before,
            cut_after: s.cut,
        });
    }
    s
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BadEdgeReport {
    pub a_star: VertexSet,
    pub b_star: VertexSet,
    /// A* vertices with exactly two neighbours in B*.
    pub y: VertexSet,
    /// Edges inside B*.
    pub type1: Vec<(Vertex, Vertex)>,
    /// Edges inside A* with an end whose B*-degree is not two.
    pub type2: Vec<(Vertex, Vertex)>,
    /// Edges inside A* between B*-degree-two ends with different
    /// B*-neighbourhoods.
    pub type3: Vec<(Vertex, Vertex)>,
    /// Edges from an A* vertex of B*-degree at least three into B*.
    pub type4: Vec<(Vertex, Vertex)>,
    pub good: usize,
}

impl BadEdgeReport {
    pub fn counts(&self) -> [usize; 4] {
        [
            self.type1.len(),
            self.type2.len(),
            self.type3.len(),
            self.type4.len(),
        ]
    }

    pub fn bad(&self) -> usize {
        self.counts().iter().sum()
    }
}

fn check_partition(g: &SimpleGraph, a: &VertexSet, b: &VertexSet) -> Result<(), LemmaError> {
    VertexSet::within(g.n(), a.iter().copied())?;
    VertexSet::within(g.n(), b.iter().copied())?;
    if !a.is_disjoint(b) || a.len() + b.len() != g.n() {
        return Err(LemmaError::NotAPartition);
    }
    Ok(())
}

pub fn classify_bad_edges(
    g: &SimpleGraph,
    a_star: &VertexSet,
    b_star: &VertexSet,
) -> Result<BadEdgeReport, LemmaError> {
    check_partition(g, a_star, b_star)?;
    let in_b = b_star.indicator(g.n());
    let deg_b: Vec<usize> = g.vertices().map(|v| g.degree_into(v, b_star)).collect();
    let mut rep = BadEdgeReport {
        a_star: a_star.clone(),
        b_star: b_star.clone(),
        y: VertexSet::new(a_star.iter().copied().filter(|&v| deg_b[v] == 2)).unwrap(),
        ..BadEdgeReport::default()
    };
    for &(u, v) in g.edges() {
        match (in_b[u], in_b[v]) {
            (true, true) => rep.type1.push((u, v)),
            (false, false) => {
                if deg_b[u] != 2 || deg_b[v] != 2 {
                    rep.type2.push((u, v));
                } else if g.neighbors_in(u, b_star) != g.neighbors_in(v, b_star) {
                    rep.type3.push((u, v));
                } else {
                    rep.good += 1;
                }
            }
            _ => {
                let a_end = if in_b[u] { v } else { u };
                if deg_b[a_end] >= 3 {
                    rep.type4.push((u, v));
                } else {
                    rep.good += 1;
                }
            }
        }
    }
    Ok(rep)
}

/// Splits the edges of G[A*] (maximum degree two) into at most three
/// matchings: paths alternate two colours, odd cycles take a third on one
/// edge.
pub fn split_into_matchings(
    g: &SimpleGraph,
    a_star: &VertexSet,
) -> Result<Vec<Vec<(Vertex, Vertex)>>, LemmaError> {
    let a = VertexSet::within(g.n(), a_star.iter().copied())?;
    let (sub, map) = g.induced_subgraph(&a);
    if let Some(v) = sub.vertices().find(|&v| sub.degree(v) > 2) {
        return Err(LemmaError::DegreeAboveTwo {
            vertex: map[v],
            degree: sub.degree(v),
        });
    }
    let mut colour = vec![usize::MAX; sub.edge_count()];
    let mut seen = vec![false; sub.n()];
    // paths first, from an end, then what is left is cycles
    let starts: Vec<Vertex> = sub
        .vertices()
        .filter(|&v| sub.degree(v) == 1)
        .chain(sub.vertices().filter(|&v| sub.degree(v) == 2))
        .collect();
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut prev = usize::MAX;
        let mut cur = s;
        let mut c = 0;
        let mut first_edge = usize::MAX;
        while let Some(&next) = sub.neighbors(cur).iter().find(|&&w| {
            w != prev && {
                let e = sub.edge_index(cur, w).unwrap();
                colour[e] == usize::MAX
            }
        }) {
            let e = sub.edge_index(cur, next).unwrap();
            if first_edge == usize::MAX {
                first_edge = e;
            }
            colour[e] = c;
            c = 1 - c;
            prev = cur;
            cur = next;
            seen[cur] = true;
        }
        // closing edge of an odd cycle clashes with the first edge
        if cur == s && first_edge != usize::MAX {
            let last = sub.edge_index(prev, cur).unwrap();
            if last != first_edge && colour[last] == colour[first_edge] {
                colour[last] = 2;
            }
        }
    }
    let used = colour.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut out = vec![Vec::new(); used];
    for (e, &(u, v)) in sub.edges().iter().enumerate() {
        out[colour[e]].push((map[u], map[v]));
    }
    Ok(out)
}

/// The multigraph on B*, vertex `i` standing for the `i`-th member of
/// `b_star`, with one multiedge per member of `y` joining its two B*
/// neighbours. Multiedge ids follow the order of `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HubMultigraph {
    pub multigraph: Multigraph,
    pub b_star: VertexSet,
    /// Multiedge id to the vertex of `y` it came from.
    pub source: Vec<Vertex>,
}

pub fn hub_multigraph(
    g: &SimpleGraph,
    y: &VertexSet,
    b_star: &VertexSet,
) -> Result<HubMultigraph, LemmaError> {
    let y = VertexSet::within(g.n(), y.iter().copied())?;
    let b_star = VertexSet::within(g.n(), b_star.iter().copied())?;
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in b_star.iter().enumerate() {
        index[v] = i;
    }
    let mut pairs = Vec::with_capacity(y.len());
    for &v in y.iter() {
        if b_star.contains(v) {
            return Err(LemmaError::YMeetsB(v));
        }
        let nb = g.neighbors_in(v, &b_star);
        if nb.len() != 2 {
            return Err(LemmaError::HubDegree {
                vertex: v,
                degree: nb.len(),
            });
        }
        pairs.push((index[nb[0]], index[nb[1]]));
    }
    let multigraph = Multigraph::from_pairs(b_star.len(), pairs)?;
    Ok(HubMultigraph {
        multigraph,
        b_star,
        source: y.members().to_vec(),
    })
}
