//! Executable versions of the structural lemmas used in the linear
//! max-degree bound for path-pairable planar graphs. Every procedure
//! returns a report carrying enough data to re-check its claims.
//!
//! The bound itself uses D with 1/D <= 8.5e-6, eps = 6/D and
//! c = eps / (4 D^(2 ceil(4/eps) + 1)). Nothing here instantiates those
//! constants; the procedures take their parameters explicitly.

pub mod bipartite;
pub mod fact;
pub mod matching;
pub mod partition;
pub mod random;
pub mod trichotomy;
pub mod weak;

use num_rational::BigRational;
use serde::Serializer;
use thiserror::Error;

use crate::caps::CapExceeded;
use crate::graph::{GraphError, Vertex};
use crate::multigraph::MultigraphError;

pub use bipartite::{lemma5_check, Lemma5Report};
pub use fact::{fact1_check, Fact1Report};
pub use matching::{extract_matching, greedy_matching, maximum_matching};
pub use partition::{
    classify_bad_edges, degree_partition, hub_multigraph, refine_partition, split_into_matchings,
    BadEdgeReport, DegreePartitionState, HubMultigraph,
};
pub use random::{random_planar_multigraph, rng_from_seed};
pub use trichotomy::{
    far_pair_count, find_good_matching, incidence_count, lemma3_trichotomy, lemma3_trichotomy_with,
    TrichotomyReport,
};
pub use weak::{build_auxiliary_pairing_graph, radius_for, weak_reachability, WeakReachability};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LemmaError {
    #[error("k = {0} is below the minimum of 2")]
    KTooSmall(usize),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("eps must be positive, got {0}")]
    EpsNotPositive(String),
    #[error("eps1 + eps2 = {sum} exceeds 2^-k = {bound}")]
    EpsTooLarge { sum: String, bound: String },
    #[error("the two sets do not partition the vertex set")]
    NotAPartition,
    #[error("edge {0} {1} lies inside one side, graph is not bipartite between the sets")]
    NotBipartite(Vertex, Vertex),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("the B side is empty")]
    EmptyB,
    #[error("vertex {0} is not in A")]
    NotInA(Vertex),
    #[error("vertex {vertex} has {degree} neighbours in B*, expected 2")]
    HubDegree { vertex: Vertex, degree: usize },
    #[error("vertex {0} is in both Y and B*")]
    YMeetsB(Vertex),
    #[error("vertex {vertex} has degree {degree} inside A*, above 2")]
    DegreeAboveTwo { vertex: Vertex, degree: usize },
    #[error("cannot place {m} multiedges on {n} vertices without loops")]
    InfeasibleMultigraph { n: usize, m: usize },
    #[error("adjacency of the auxiliary graph is not symmetric at {0} {1}")]
    Asymmetric(Vertex, Vertex),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Multigraph(#[from] MultigraphError),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
}

pub(crate) fn ratio_string<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}
