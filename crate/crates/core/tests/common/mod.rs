//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the search code under test.

#![allow(dead_code)]

use pathpair_core::graph::{SimpleGraph, Vertex};

/// Every simple path from `s` to `t`.
pub fn all_simple_paths(g: &SimpleGraph, s: Vertex, t: Vertex) -> Vec<Vec<Vertex>> {
    fn go(
        g: &SimpleGraph,
        t: Vertex,
        path: &mut Vec<Vertex>,
        seen: &mut [bool],
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let v = *path.last().unwrap();
        if v == t {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                path.push(w);
                go(g, t, path, seen, out);
                path.pop();
                seen[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    go(g, t, &mut vec![s], &mut seen, &mut out);
    out
}

fn edge_ids(g: &SimpleGraph, path: &[Vertex]) -> Vec<usize> {
    path.windows(2)
        .map(|w| g.edge_index(w[0], w[1]).unwrap())
        .collect()
}

/// Tries every combination of simple paths, one per pair.
pub fn naive_feasible(g: &SimpleGraph, pairs: &[(Vertex, Vertex)]) -> bool {
    let options: Vec<Vec<Vec<usize>>> = pairs
        .iter()
        .map(|&(s, t)| {
            all_simple_paths(g, s, t)
                .iter()
                .map(|p| edge_ids(g, p))
                .collect()
        })
        .collect();
    fn pick(options: &[Vec<Vec<usize>>], i: usize, used: &mut Vec<bool>) -> bool {
        if i == options.len() {
            return true;
        }
        for p in &options[i] {
            if p.iter().all(|&e| !used[e]) {
                p.iter().for_each(|&e| used[e] = true);
                let ok = pick(options, i + 1, used);
                p.iter().for_each(|&e| used[e] = false);
                if ok {
                    return true;
                }
            }
        }
        false
    }
    pick(&options, 0, &mut vec![false; g.edge_count()])
}

/// Endpoints, adjacency, simplicity and edge-disjointness, checked from
/// scratch.
pub fn valid_system(g: &SimpleGraph, pairs: &[(Vertex, Vertex)], paths: &[Vec<Vertex>]) -> bool {
    if pairs.len() != paths.len() {
        return false;
    }
    let mut used = std::collections::HashSet::new();
    for (&(s, t), p) in pairs.iter().zip(paths) {
        let ends = (p.first().copied(), p.last().copied());
        if ends != (Some(s), Some(t)) && ends != (Some(t), Some(s)) {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        if !p.iter().all(|v| seen.insert(*v)) {
            return false;
        }
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) || !used.insert((w[0].min(w[1]), w[0].max(w[1]))) {
                return false;
            }
        }
    }
    true
}

/// All labelled graphs on `n` vertices with at most `max_e` edges, one per
/// isomorphism class (the one with the smallest edge mask).
pub fn graphs_up_to_iso(n: usize, max_e: usize) -> Vec<SimpleGraph> {
    let slots: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let index = |u: Vertex, v: Vertex| {
        slots
            .iter()
            .position(|&e| e == (u.min(v), u.max(v)))
            .unwrap()
    };
    let perms = permutations(n);
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| slots.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << slots.len()) {
        if mask.count_ones() as usize > max_e {
            continue;
        }
        let minimal = maps.iter().all(|m| {
            let mut img = 0u32;
            for (i, &j) in m.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    img |= 1 << j;
                }
            }
            img >= mask
        });
        if minimal {
            let edges = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            out.push(SimpleGraph::new(n, edges).unwrap());
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every set of `k` disjoint unordered pairs from 0..n, as sorted lists.
pub fn pairings_of_size(n: usize, k: usize) -> Vec<Vec<(Vertex, Vertex)>> {
    fn go(
        n: usize,
        k: usize,
        from: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(Vertex, Vertex)>,
        out: &mut Vec<Vec<(Vertex, Vertex)>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for u in from..n {
            if used[u] {
                continue;
            }
            used[u] = true;
            for v in u + 1..n {
                if !used[v] {
                    used[v] = true;
                    cur.push((u, v));
                    go(n, k, u + 1, used, cur, out);
                    cur.pop();
                    used[v] = false;
                }
            }
            used[u] = false;
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// Exhaustive cut condition.
pub fn cut_condition_holds(g: &SimpleGraph) -> bool {
    let n = g.n();
    (0u64..1 << n).all(|mask| {
        let size = mask.count_ones() as usize;
        if size == 0 || 2 * size > n {
            return true;
        }
        let cut = g
            .edges()
            .iter()
            .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
            .count();
        cut >= size
    })
}

/// Contains a subdivision of K5 or K3,3, for graphs on at most six
/// vertices.
pub fn small_nonplanar(g: &SimpleGraph) -> bool {
    let n = g.n();
    assert!(n <= 6);
    let subsets = |k: usize| (0u32..1 << n).filter(move |m| m.count_ones() as usize == k);
    let members = |m: u32| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>();
    let k5_on = |vs: &[Vertex], skip: Option<(Vertex, Vertex)>| {
        vs.iter().enumerate().all(|(i, &u)| {
            vs[i + 1..]
                .iter()
                .all(|&v| g.has_edge(u, v) || skip == Some((u.min(v), u.max(v))))
        })
    };
    for m in subsets(5) {
        if k5_on(&members(m), None) {
            return true;
        }
    }
    if n == 6 {
        for s in 0..n {
            let rest: Vec<Vertex> = (0..n).filter(|&v| v != s).collect();
            let nb = g.neighbors(s);
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    if k5_on(&rest, Some((a.min(b), a.max(b)))) {
                        return true;
                    }
                }
            }
        }
        for m in subsets(3) {
            let left = members(m);
            let right = members(!m & 0b111111);
            if left
                .iter()
                .all(|&u| right.iter().all(|&v| g.has_edge(u, v)))
            {
                return true;
            }
        }
    }
    false
}

/// n <= 2 * d^d with big integers.
pub fn faudree_oracle(n: usize, d: usize) -> bool {
    use num_bigint::BigUint;
    BigUint::from(n) <= BigUint::from(2u32) * BigUint::from(d).pow(d as u32)
}
