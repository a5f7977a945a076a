//! Necessary conditions for path-pairability.

use serde::Serialize;

use crate::caps::{CapExceeded, Caps};
use crate::graph::{SimpleGraph, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "cut_condition", rename_all = "snake_case")]
pub enum CutCondition {
    Holds,
    /// Smallest violating set, lexicographically first among those.
    Violated {
        set: VertexSet,
        cut: usize,
    },
}

impl CutCondition {
    pub fn holds(&self) -> bool {
        *self == CutCondition::Holds
    }
}

/// At least |X| edges leave every X with |X| <= n/2. Exhaustive over
/// subsets, size by size.
pub fn cut_condition(g: &SimpleGraph) -> Result<CutCondition, CapExceeded> {
    cut_condition_with(g, &Caps::from_env())
}

pub fn cut_condition_with(g: &SimpleGraph, caps: &Caps) -> Result<CutCondition, CapExceeded> {
    let n = g.n();
    Caps::check("vertex count", n as u128, caps.cut_vertices.min(64) as u128)?;
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut chosen = Vec::with_capacity(n / 2);
    for size in 1..=n / 2 {
        if let Some(cut) = first_violation(&adj, g, size, 0, 0, 0, &mut chosen) {
            let set = VertexSet::new(chosen.clone()).unwrap();
            return Ok(CutCondition::Violated { set, cut });
        }
    }
    Ok(CutCondition::Holds)
}

/// Lexicographic search for a `size`-subset with cut < size; leaves the
/// subset in `chosen` on success.
fn first_violation(
    adj: &[u64],
    g: &SimpleGraph,
    size: usize,
    start: Vertex,
    mask: u64,
    cut: usize,
    chosen: &mut Vec<Vertex>,
) -> Option<usize> {
    if chosen.len() == size {
        return (cut < size).then_some(cut);
    }
    let n = adj.len();
    let need = size - chosen.len();
    for v in start..=n - need {
        let inner = (adj[v] & mask).count_ones() as usize;
        let next = cut + g.degree(v) - 2 * inner;
        chosen.push(v);
        if let Some(c) = first_violation(adj, g, size, v + 1, mask | 1 << v, next, chosen) {
            return Some(c);
        }
        chosen.pop();
    }
    None
}

/// n <= 2 * delta^delta, in exact integers. Values too large for `u128`
/// are larger than any `usize` n, so the check passes.
pub fn faudree_consistency(n: usize, delta: usize) -> bool {
    let bound = u32::try_from(delta)
        .ok()
        .and_then(|d| (delta as u128).checked_pow(d))
        .and_then(|p| p.checked_mul(2));
    match bound {
        Some(b) => (n as u128) <= b,
        None => true,
    }
}

/// ceil(sqrt(n)).
pub fn planar_degree_floor(n: usize) -> usize {
    let r = n.isqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}
