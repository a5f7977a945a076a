//! Deterministic routing of any full pairing of a triangle-hub graph by
//! edge-disjoint paths of length at most two.
//!
//! Every terminal pair falls into exactly one of five cases:
//!
//! 1. hub and hub: the triangle edge between them;
//! 2. hub and a class vertex it sees: the direct edge;
//! 3. hub and a class vertex it does not see: two steps, first along the
//!    directed triangle xAB -> xBC -> xCA -> xAB, then down to the vertex;
//! 4. two vertices of one class: through one of the two hubs serving the
//!    class (the smaller hub by role order unless a different choice is
//!    supplied);
//! 5. vertices of different classes: through their unique common hub.
//!
//! Each class-to-hub edge is only ever used by the path of its own class
//! endpoint, and the triangle edge `h -> rotate(h)` only by the pair
//! containing `h`, which is why the result is edge-disjoint.

use serde::Serialize;
use thiserror::Error;

use crate::constructions::{Role, TriangleHubGraph};
use crate::graph::Vertex;
use crate::paths::{Pairing, PairingError, PathError, PathSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RouteCase {
    HubHub,
    HubAdjacentClass,
    HubRotation,
    SameClass,
    DifferentClass,
}

impl RouteCase {
    /// Case number 1..=5 in the order listed in the module docs.
    pub fn number(self) -> u8 {
        match self {
            RouteCase::HubHub => 1,
            RouteCase::HubAdjacentClass => 2,
            RouteCase::HubRotation => 3,
            RouteCase::SameClass => 4,
            RouteCase::DifferentClass => 5,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RouteError {
    #[error("terminal {vertex} out of range (n = {n})")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("pair joins vertex {0} to itself")]
    SameVertex(Vertex),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error("{choice} does not serve class {class}")]
    BadHubChoice { class: Role, choice: Role },
    #[error("router produced an invalid path system: {0}")]
    Invalid(#[from] PathError),
}

pub fn classify_pair(g: &TriangleHubGraph, u: Vertex, v: Vertex) -> Result<RouteCase, RouteError> {
    for w in [u, v] {
        if w >= g.n() {
            return Err(RouteError::OutOfRange {
                vertex: w,
                n: g.n(),
            });
        }
    }
    if u == v {
        return Err(RouteError::SameVertex(u));
    }
    let (ru, rv) = (g.role(u), g.role(v));
    Ok(match (ru.is_hub(), rv.is_hub()) {
        (true, true) => RouteCase::HubHub,
        (true, false) | (false, true) => {
            let (hub, class) = if ru.is_hub() { (ru, rv) } else { (rv, ru) };
            if hub.served_classes().unwrap().contains(&class) {
                RouteCase::HubAdjacentClass
            } else {
                RouteCase::HubRotation
            }
        }
        (false, false) if ru == rv => RouteCase::SameClass,
        (false, false) => RouteCase::DifferentClass,
    })
}

/// Smaller of the two hubs serving a class, by role order.
fn default_hub(class: Role) -> Role {
    let [a, b] = class.serving_hubs().unwrap();
    a.min(b)
}

/// Routes a full pairing with the default same-class hub choice and checks
/// the result before returning it.
pub fn route(g: &TriangleHubGraph, p: &Pairing) -> Result<PathSystem, RouteError> {
    route_with(g, p, |_, class| default_hub(class))
}

/// Like [`route`], but same-class pairs go through the hub returned by
/// `choose(pair_index, class)`.
pub fn route_with<F>(
    g: &TriangleHubGraph,
    p: &Pairing,
    mut choose: F,
) -> Result<PathSystem, RouteError>
where
    F: FnMut(usize, Role) -> Role,
{
    p.check_full(g.n())?;
    let mut paths = Vec::with_capacity(p.len());
    for (i, &(u, v)) in p.pairs().iter().enumerate() {
        let path = match classify_pair(g, u, v)? {
            RouteCase::HubHub | RouteCase::HubAdjacentClass => vec![u, v],
            RouteCase::HubRotation => {
                let hub = if g.role(u).is_hub() {
                    g.role(u)
                } else {
                    g.role(v)
                };
                vec![u, g.hub(hub.rotate().unwrap()), v]
            }
            RouteCase::SameClass => {
                let class = g.role(u);
                let hub = choose(i, class);
                if !class.serving_hubs().unwrap().contains(&hub) {
                    return Err(RouteError::BadHubChoice { class, choice: hub });
                }
                vec![u, g.hub(hub), v]
            }
            RouteCase::DifferentClass => {
                let [a, b] = g.role(u).serving_hubs().unwrap();
                let theirs = g.role(v).serving_hubs().unwrap();
                let common = if theirs.contains(&a) { a } else { b };
                vec![u, g.hub(common), v]
            }
        };
        paths.push(path);
    }
    let system = PathSystem::new(paths);
    system.verify(g.graph(), p)?;
    Ok(system)
}
