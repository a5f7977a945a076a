//! Enumeration of pairings, random full pairings, and symmetry reduction by
//! graph automorphisms.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{SimpleGraph, Vertex};
use crate::paths::Pairing;

/// Number of k-pairings of `n` vertices: C(n, 2k) * (2k - 1)!!.
/// `None` on overflow.
pub fn pairing_count(n: usize, k: usize) -> Option<u128> {
    if 2 * k > n {
        return Some(0);
    }
    let mut count: u128 = 1;
    // C(n, 2k), built incrementally so every intermediate is an integer.
    for i in 0..2 * k {
        count = count.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    for odd in (1..2 * k).step_by(2) {
        count = count.checked_mul(odd as u128)?;
    }
    Some(count)
}

/// Every set of `k` disjoint pairs on `0..n`, each in canonical form, in
/// lexicographic order of the pair list.
pub fn k_pairings(n: usize, k: usize) -> Vec<Pairing> {
    let mut out = Vec::new();
    if 2 * k > n {
        return out;
    }
    let mut used = vec![false; n];
    let mut pairs = Vec::with_capacity(k);
    k_pairings_rec(n, k, 0, 0, &mut used, &mut pairs, &mut out);
    out
}

fn k_pairings_rec(
    n: usize,
    k: usize,
    start: Vertex,
    skipped: usize,
    used: &mut [bool],
    pairs: &mut Vec<(Vertex, Vertex)>,
    out: &mut Vec<Pairing>,
) {
    if pairs.len() == k {
        out.push(Pairing::new(pairs.clone()).expect("disjoint by construction"));
        return;
    }
    // Vertices below the next first element that are still free never get
    // covered later, so at most n - 2k of them may be passed over.
    let slack = n - 2 * k;
    let mut skipped_here = skipped;
    for a in start..n {
        if used[a] {
            continue;
        }
        if skipped_here > slack {
            break;
        }
        used[a] = true;
        for b in a + 1..n {
            if used[b] {
                continue;
            }
            used[b] = true;
            pairs.push((a, b));
            k_pairings_rec(n, k, a + 1, skipped_here, used, pairs, out);
            pairs.pop();
            used[b] = false;
        }
        used[a] = false;
        skipped_here += 1;
    }
}

/// Full pairings of `0..n` (one vertex left out when `n` is odd).
pub fn full_pairings(n: usize) -> Vec<Pairing> {
    k_pairings(n, n / 2)
}

/// Uniform full pairing: shuffle, then pair consecutive vertices.
pub fn random_full_pairing<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Pairing {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let pairs = order.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    Pairing::new(pairs).unwrap().canonical()
}

/// Automorphism group given by generators, with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub generators: Vec<Vec<Vertex>>,
    pub order: u128,
}

/// Generators along the stabilizer chain of the base 0, 1, .., n-1.
///
/// Level `i` looks for permutations fixing `0..i` that send `i` anywhere
/// outside the orbit already generated.
pub fn automorphisms(g: &SimpleGraph) -> AutomorphismGroup {
    let n = g.n();
    let mut generators: Vec<Vec<Vertex>> = Vec::new();
    let mut order: u128 = 1;
    for i in (0..n).rev() {
        let mut orbit = orbit_of(i, &generators, n);
        for j in i + 1..n {
            if orbit[j] {
                continue;
            }
            if let Some(perm) = find_automorphism(g, i, j) {
                generators.push(perm);
                orbit = orbit_of(i, &generators, n);
            }
        }
        order = order.saturating_mul(orbit.iter().filter(|&&b| b).count() as u128);
    }
    generators.reverse();
    AutomorphismGroup { generators, order }
}

fn orbit_of(v: Vertex, gens: &[Vec<Vertex>], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        for p in gens {
            let w = p[u];
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// An automorphism fixing `0..i` pointwise with `i -> j`, if any.
fn find_automorphism(g: &SimpleGraph, i: Vertex, j: Vertex) -> Option<Vec<Vertex>> {
    let n = g.n();
    if g.degree(i) != g.degree(j) {
        return None;
    }
    let mut perm = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    for v in 0..i {
        perm[v] = v;
        taken[v] = true;
    }
    if !consistent(g, &perm, i, j) {
        return None;
    }
    perm[i] = j;
    taken[j] = true;
    if extend(g, &mut perm, &mut taken, i + 1) {
        Some(perm)
    } else {
        None
    }
}

fn consistent(g: &SimpleGraph, perm: &[Vertex], v: Vertex, w: Vertex) -> bool {
    (0..v).all(|u| perm[u] == usize::MAX || g.has_edge(u, v) == g.has_edge(perm[u], w))
}

fn extend(g: &SimpleGraph, perm: &mut [Vertex], taken: &mut [bool], v: Vertex) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..g.n() {
        if taken[w] || g.degree(w) != g.degree(v) || !consistent(g, perm, v, w) {
            continue;
        }
        perm[v] = w;
        taken[w] = true;
        if extend(g, perm, taken, v + 1) {
            return true;
        }
        taken[w] = false;
        perm[v] = usize::MAX;
    }
    false
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // the smaller index stays the root, so roots are orbit minima
        if ra < rb {
            self.0[rb] = ra;
        } else if rb < ra {
            self.0[ra] = rb;
        }
    }
}

/// Groups a lexicographically sorted list of canonical pairings into orbits
/// under the group. Orbits are index lists, each sorted, ordered by their
/// first (minimal) member.
pub fn pairing_orbits(group: &AutomorphismGroup, pairings: &[Pairing]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind((0..pairings.len()).collect());
    for (i, p) in pairings.iter().enumerate() {
        for perm in &group.generators {
            let image = p.permuted(perm);
            let j = pairings
                .binary_search(&image)
                .expect("pairing list closed under the group");
            uf.union(i, j);
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; pairings.len()];
    for i in 0..pairings.len() {
        let r = uf.find(i);
        if slot[r] == usize::MAX {
            slot[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[r]].push(i);
    }
    orbits
}

/// Orbit partition of the full pairings of `g`, as pairings.
pub fn automorphism_orbits(g: &SimpleGraph) -> Vec<Vec<Pairing>> {
    let all = full_pairings(g.n());
    let group = automorphisms(g);
    pairing_orbits(&group, &all)
        .into_iter()
        .map(|orbit| orbit.into_iter().map(|i| all[i].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, star};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c4() -> SimpleGraph {
        SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn counts_match_formula() {
        for n in 0..=10 {
            for k in 0..=n / 2 {
                assert_eq!(
                    k_pairings(n, k).len() as u128,
                    pairing_count(n, k).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
        assert_eq!(full_pairings(6).len(), 15);
        assert_eq!(full_pairings(12).len(), 10395);
        assert_eq!(full_pairings(7).len(), 105);
    }

    #[test]
    fn lexicographic_and_canonical() {
        let all = full_pairings(8);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|p| p.canonical() == *p));
        let four = full_pairings(4);
        assert_eq!(four[0].pairs(), &[(0, 1), (2, 3)]);
        assert_eq!(four[1].pairs(), &[(0, 2), (1, 3)]);
        assert_eq!(four[2].pairs(), &[(0, 3), (1, 2)]);
        let partial = k_pairings(5, 2);
        assert!(partial.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn random_pairing_is_full_and_seeded() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let p = random_full_pairing(12, &mut a);
            assert!(p.is_full(12));
            assert_eq!(p, random_full_pairing(12, &mut b));
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&complete(4)).order, 24);
        assert_eq!(automorphisms(&c4()).order, 8);
        assert_eq!(automorphisms(&star(4).unwrap()).order, 24);
        assert_eq!(automorphisms(&complete_bipartite(3, 3)).order, 72);
        let path = SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(automorphisms(&path).order, 2);
        let petersen = SimpleGraph::new(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(automorphisms(&petersen).order, 120);
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = complete_bipartite(2, 3);
        for p in automorphisms(&g).generators {
            for &(u, v) in g.edges() {
                assert!(g.has_edge(p[u], p[v]));
            }
        }
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(automorphism_orbits(&complete(4)).len(), 1);
        let orbits = automorphism_orbits(&c4());
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[1], vec![Pairing::new(vec![(0, 2), (1, 3)]).unwrap()]);
        // asymmetric graph on 6 vertices: every pairing alone
        let asym = SimpleGraph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap();
        assert_eq!(automorphisms(&asym).order, 1);
        assert_eq!(automorphism_orbits(&asym).len(), 15);
    }
}
