//! Generators for the graph families that appear around path-pairability.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{SimpleGraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{family} needs {param} >= 1")]
    ZeroParameter {
        family: &'static str,
        param: &'static str,
    },
}

/// K_{1,m} with vertex 0 as the centre.
pub fn star(m: usize) -> Result<SimpleGraph, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::ZeroParameter {
            family: "star",
            param: "m",
        });
    }
    Ok(SimpleGraph::new(m + 1, (1..=m).map(|i| (0, i))).unwrap())
}

pub fn complete(t: usize) -> SimpleGraph {
    SimpleGraph::new(t, (0..t).flat_map(|u| (u + 1..t).map(move |v| (u, v)))).unwrap()
}

/// K_{m,n} with sides `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> SimpleGraph {
    SimpleGraph::new(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)))).unwrap()
}

/// K_t with q-1 pendant leaves on every clique vertex. Clique vertices are
/// `0..t`; the leaves of clique vertex `i` are `t + i(q-1) ..`.
pub fn k_t_q(t: usize, q: usize) -> Result<SimpleGraph, ConstructionError> {
    if t == 0 {
        return Err(ConstructionError::ZeroParameter {
            family: "k_t_q",
            param: "t",
        });
    }
    if q == 0 {
        return Err(ConstructionError::ZeroParameter {
            family: "k_t_q",
            param: "q",
        });
    }
    let clique = (0..t).flat_map(|u| (u + 1..t).map(move |v| (u, v)));
    let leaves = (0..t).flat_map(|i| (0..q - 1).map(move |j| (i, t + i * (q - 1) + j)));
    Ok(SimpleGraph::new(t * q, clique.chain(leaves)).unwrap())
}

/// Vertex classes of the triangle-hub graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Role {
    A,
    B,
    C,
    XAB,
    XBC,
    XCA,
}

impl Role {
    pub const HUBS: [Role; 3] = [Role::XAB, Role::XBC, Role::XCA];
    pub const CLASSES: [Role; 3] = [Role::A, Role::B, Role::C];

    pub fn is_hub(self) -> bool {
        matches!(self, Role::XAB | Role::XBC | Role::XCA)
    }

    /// The two classes a hub is joined to.
    pub fn served_classes(self) -> Option<[Role; 2]> {
        match self {
            Role::XAB => Some([Role::A, Role::B]),
            Role::XBC => Some([Role::B, Role::C]),
            Role::XCA => Some([Role::C, Role::A]),
            _ => None,
        }
    }

    /// The two hubs serving a class.
    pub fn serving_hubs(self) -> Option<[Role; 2]> {
        match self {
            Role::A => Some([Role::XAB, Role::XCA]),
            Role::B => Some([Role::XAB, Role::XBC]),
            Role::C => Some([Role::XBC, Role::XCA]),
            _ => None,
        }
    }

    /// Successor on the directed triangle xAB -> xBC -> xCA -> xAB.
    pub fn rotate(self) -> Option<Role> {
        match self {
            Role::XAB => Some(Role::XBC),
            Role::XBC => Some(Role::XCA),
            Role::XCA => Some(Role::XAB),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Role::A => "A",
            Role::B => "B",
            Role::C => "C",
            Role::XAB => "xAB",
            Role::XBC => "xBC",
            Role::XCA => "xCA",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Role {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" => Ok(Role::A),
            "B" => Ok(Role::B),
            "C" => Ok(Role::C),
            "xAB" => Ok(Role::XAB),
            "xBC" => Ok(Role::XBC),
            "xCA" => Ok(Role::XCA),
            other => Err(format!("unknown role `{other}`")),
        }
    }
}

/// Three classes A, B, C of 2k-1 vertices each, plus three mutually adjacent
/// hubs; xAB sees A and B, xBC sees B and C, xCA sees C and A. n = 6k and
/// every hub has degree 4k.
///
/// Numbering: A is `0..2k-1`, B and C follow contiguously, and the hubs are
/// the last three ids in the order xAB, xBC, xCA.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleHubGraph {
    k: usize,
    graph: SimpleGraph,
    roles: Vec<Role>,
}

pub fn triangle_hub(k: usize) -> Result<TriangleHubGraph, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::ZeroParameter {
            family: "triangle_hub",
            param: "k",
        });
    }
    let class = 2 * k - 1;
    let n = 6 * k;
    let mut roles = Vec::with_capacity(n);
    for role in Role::CLASSES {
        roles.extend(std::iter::repeat_n(role, class));
    }
    roles.extend(Role::HUBS);
    let hub = |r: Role| n - 3 + Role::HUBS.iter().position(|&h| h == r).unwrap();
    let mut edges = vec![
        (hub(Role::XAB), hub(Role::XBC)),
        (hub(Role::XBC), hub(Role::XCA)),
        (hub(Role::XCA), hub(Role::XAB)),
    ];
    for (v, role) in roles.iter().enumerate().take(3 * class) {
        for h in role.serving_hubs().unwrap() {
            edges.push((v, hub(h)));
        }
    }
    let graph = SimpleGraph::new(n, edges).unwrap();
    Ok(TriangleHubGraph { k, graph, roles })
}

impl TriangleHubGraph {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn role(&self, v: Vertex) -> Role {
        self.roles[v]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn hub(&self, role: Role) -> Vertex {
        let i = Role::HUBS
            .iter()
            .position(|&h| h == role)
            .expect("hub role");
        self.n() - 3 + i
    }

    pub fn class_members(&self, role: Role) -> std::ops::Range<Vertex> {
        let size = 2 * self.k - 1;
        let i = Role::CLASSES
            .iter()
            .position(|&c| c == role)
            .expect("class role");
        i * size..(i + 1) * size
    }

    /// Role table in the `role <v> <label>` annotation form.
    pub fn role_table(&self) -> Vec<(Vertex, String)> {
        self.roles
            .iter()
            .enumerate()
            .map(|(v, r)| (v, r.label().to_string()))
            .collect()
    }
}
