//! Incidence counts, far pairs and good matchings of multigraphs, and the
//! three-way condition check built from them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::fact::pow2;
use super::{ratio_string, LemmaError};
use crate::caps::Caps;
use crate::multigraph::{multiedge_distance, EdgeDistance, Multiedge, MultiedgeId, Multigraph};

pub const DEFAULT_FLOOR: usize = 20;

/// Other multiedges sharing an endpoint with `e` (parallels and loops
/// included).
pub fn incidence_count(mg: &Multigraph, e: MultiedgeId) -> Result<usize, LemmaError> {
    let me = mg.multiedge(e)?;
    Ok(mg
        .multiedges()
        .iter()
        .filter(|f| f.id != e && f.shares_endpoint(&me))
        .count())
}

/// Unordered pairs of multiedges at distance greater than one, unreachable
/// pairs included.
pub fn far_pair_count(mg: &Multigraph) -> usize {
    let table = mg.distance_table();
    let edges = mg.multiedges();
    let mut count = 0;
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            if table.edge_distance(e, f).is_far() {
                count += 1;
            }
        }
    }
    count
}

/// First (by ascending ids) set of `k` multiedges pairwise at distance
/// exactly one. Loops never take part.
pub fn find_good_matching(
    mg: &Multigraph,
    k: usize,
) -> Result<Option<Vec<MultiedgeId>>, LemmaError> {
    find_good_matching_with(mg, k, &Caps::from_env())
}

pub fn find_good_matching_with(
    mg: &Multigraph,
    k: usize,
    caps: &Caps,
) -> Result<Option<Vec<MultiedgeId>>, LemmaError> {
    Caps::check(
        "multiedge count",
        mg.multiedge_count() as u128,
        caps.matching_multiedges as u128,
    )?;
    let edges: Vec<Multiedge> = mg
        .multiedges()
        .iter()
        .copied()
        .filter(|e| !e.is_loop())
        .collect();
    let table = mg.distance_table();
    let m = edges.len();
    let mut near = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let d = table.edge_distance(&edges[i], &edges[j]) == EdgeDistance::Finite(1);
            near[i][j] = d;
            near[j][i] = d;
        }
    }
    let mut chosen = Vec::with_capacity(k);
    let cand: Vec<usize> = (0..m).collect();
    Ok(grow_clique(&near, &cand, k, &mut chosen)
        .then(|| chosen.iter().map(|&i| edges[i].id).collect()))
}

fn grow_clique(near: &[Vec<bool>], cand: &[usize], need: usize, chosen: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    for (pos, &v) in cand.iter().enumerate() {
        if cand.len() - pos < need {
            break;
        }
        let rest: Vec<usize> = cand[pos + 1..]
            .iter()
            .copied()
            .filter(|&w| near[v][w])
            .collect();
        chosen.push(v);
        if grow_clique(near, &rest, need - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrichotomyReport {
    pub m: usize,
    pub k: usize,
    #[serde(serialize_with = "ratio_string")]
    pub eps1: BigRational,
    #[serde(serialize_with = "ratio_string")]
    pub eps2: BigRational,
    pub max_incidence: usize,
    /// A multiedge attaining `max_incidence` (smallest id).
    pub max_incidence_edge: Option<MultiedgeId>,
    pub far_pairs: usize,
    pub good_matching: Option<Vec<MultiedgeId>>,
    /// Some multiedge meets at least eps1 * M others.
    pub clustered: bool,
    /// At least eps2 * C(M, 2) far pairs.
    pub spread: bool,
    pub has_good_matching: bool,
    /// M below the floor: the trichotomy is not claimed.
    pub advisory: bool,
    pub floor: usize,
}

impl TrichotomyReport {
    pub fn any_condition(&self) -> bool {
        self.clustered || self.spread || self.has_good_matching
    }

    /// Recomputes every flag from the stored numbers and the multigraph.
    pub fn verify(&self, mg: &Multigraph) -> bool {
        let m = BigRational::from_integer(BigInt::from(self.m));
        let pairs = BigRational::from_integer(BigInt::from(self.m * self.m.saturating_sub(1) / 2));
        let clustered = BigRational::from_integer(self.max_incidence.into()) >= &self.eps1 * m;
        let spread = BigRational::from_integer(self.far_pairs.into()) >= &self.eps2 * pairs;
        let matching_ok = match &self.good_matching {
            None => true,
            Some(ids) => ids.len() == self.k && is_good(mg, ids),
        };
        let max_ok = match self.max_incidence_edge {
            Some(e) => incidence_count(mg, e).ok() == Some(self.max_incidence),
            None => self.m == 0,
        };
        self.m == mg.multiedge_count()
            && clustered == self.clustered
            && spread == self.spread
            && self.has_good_matching == self.good_matching.is_some()
            && matching_ok
            && max_ok
            && self.far_pairs == far_pair_count(mg)
    }
}

fn is_good(mg: &Multigraph, ids: &[MultiedgeId]) -> bool {
    ids.iter().enumerate().all(|(i, &e)| {
        ids[i + 1..]
            .iter()
            .all(|&f| multiedge_distance(mg, e, f) == Ok(EdgeDistance::Finite(1)))
    })
}

pub fn lemma3_trichotomy(
    mg: &Multigraph,
    k: usize,
    eps1: &BigRational,
    eps2: &BigRational,
) -> Result<TrichotomyReport, LemmaError> {
    lemma3_trichotomy_with(mg, k, eps1, eps2, DEFAULT_FLOOR, &Caps::from_env())
}

pub fn lemma3_trichotomy_with(
    mg: &Multigraph,
    k: usize,
    eps1: &BigRational,
    eps2: &BigRational,
    floor: usize,
    caps: &Caps,
) -> Result<TrichotomyReport, LemmaError> {
    if k == 0 {
        return Err(LemmaError::ZeroK);
    }
    for eps in [eps1, eps2] {
        if *eps <= BigRational::zero() {
            return Err(LemmaError::EpsNotPositive(eps.to_string()));
        }
    }
    let bound = pow2(-(k as i64));
    let sum = eps1 + eps2;
    if sum > bound {
        return Err(LemmaError::EpsTooLarge {
            sum: sum.to_string(),
            bound: bound.to_string(),
        });
    }
    let m = mg.multiedge_count();
    let mut max_incidence = 0;
    let mut max_incidence_edge = None;
    for id in mg.ids() {
        let c = incidence_count(mg, id)?;
        if max_incidence_edge.is_none() || c > max_incidence {
            max_incidence = c;
            max_incidence_edge = Some(id);
        }
    }
    let far_pairs = far_pair_count(mg);
    let good_matching = find_good_matching_with(mg, k, caps)?;
    let big = |x: usize| BigRational::from_integer(BigInt::from(x));
    let clustered = big(max_incidence) >= eps1 * big(m);
    let spread = big(far_pairs) >= eps2 * big(m * m.saturating_sub(1) / 2);
    Ok(TrichotomyReport {
        m,
        k,
        eps1: eps1.clone(),
        eps2: eps2.clone(),
        max_incidence,
        max_incidence_edge,
        far_pairs,
        has_good_matching: good_matching.is_some(),
        good_matching,
        clustered,
        spread,
        advisory: m < floor,
        floor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::contract_matching;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn complete_mg(t: usize) -> Multigraph {
        Multigraph::from_pairs(t, (0..t).flat_map(|u| (u + 1..t).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn counts() {
        let tri = Multigraph::from_pairs(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        for id in 0..3 {
            assert_eq!(incidence_count(&tri, id).unwrap(), 2);
        }
        assert_eq!(far_pair_count(&tri), 0);
        let apart = Multigraph::from_pairs(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(far_pair_count(&apart), 3);
        let path = Multigraph::from_pairs(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(far_pair_count(&path), 1);
        assert!(incidence_count(&tri, 7).is_err());
    }

    #[test]
    fn good_matchings() {
        assert_eq!(
            find_good_matching(&complete_mg(4), 2).unwrap(),
            Some(vec![0, 5])
        );
        let k6 = complete_mg(6);
        let m = find_good_matching(&k6, 3).unwrap().unwrap();
        let c = contract_matching(&k6, &m).unwrap();
        assert_eq!(c.n(), 3);
        assert_eq!(c.underlying_simple().edge_count(), 3);
        assert_eq!(find_good_matching(&complete_mg(4), 3).unwrap(), None);
        let looped = Multigraph::from_pairs(2, [(0, 0), (1, 1)]).unwrap();
        assert_eq!(find_good_matching(&looped, 1).unwrap(), None);
    }

    #[test]
    fn trichotomy_examples() {
        let k6 = complete_mg(6);
        let rep = lemma3_trichotomy(&k6, 3, &r(1, 16), &r(1, 16)).unwrap();
        assert!(rep.has_good_matching);
        assert!(rep.verify(&k6));
        assert!(rep.advisory);

        let apart = Multigraph::from_pairs(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let rep = lemma3_trichotomy(&apart, 3, &r(1, 16), &r(1, 16)).unwrap();
        assert!(rep.spread && !rep.clustered && !rep.has_good_matching);
        assert_eq!(rep.far_pairs, 3);
        assert!(rep.verify(&apart));
    }

    #[test]
    fn precondition_enforced() {
        let k4 = complete_mg(4);
        assert!(matches!(
            lemma3_trichotomy(&k4, 3, &r(1, 8), &r(1, 8)),
            Err(LemmaError::EpsTooLarge { .. })
        ));
        assert!(matches!(
            lemma3_trichotomy(&k4, 3, &r(0, 1), &r(1, 8)),
            Err(LemmaError::EpsNotPositive(_))
        ));
        assert_eq!(
            lemma3_trichotomy(&k4, 0, &r(1, 8), &r(1, 8)),
            Err(LemmaError::ZeroK)
        );
    }

    #[test]
    fn tampered_report_fails_verification() {
        let k6 = complete_mg(6);
        let mut rep = lemma3_trichotomy(&k6, 3, &r(1, 16), &r(1, 16)).unwrap();
        rep.far_pairs += 1;
        assert!(!rep.verify(&k6));
    }
}
