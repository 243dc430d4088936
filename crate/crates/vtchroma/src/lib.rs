//! Exact combinatorial toolkit for the clique structure and coloring of
//! vertex-transitive graphs.
//!
//! Everything here is exact: searches are exhaustive branch-and-bound, the
//! fractional chromatic number is solved in arbitrary-precision rational
//! arithmetic, and bound comparisons never touch floating point. Graphs are
//! capped at [`MAX_VERTICES`] vertices, which covers every desk-scale family
//! the toolkit generates.

pub mod bitset;
pub mod cli;
pub mod cliques;
pub mod coloring;
pub mod conjectures;
pub mod corpus;
pub mod graph;
pub mod graph6;
pub mod report;
pub mod simplex;
pub mod symmetry;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use cliques::{
    build_clique_graph, cek_classify, clique_number, hajnal_check, hajnal_sweep,
    kostochka_common_vertex, max_clique, maximal_cliques, maximum_cliques, vt_classify,
    CliqueCollection, CliqueGraph, ClusterClassification, HajnalReport, HajnalSweep,
};
pub use coloring::{
    chromatic_number, clique_padding_reduction, fractional_chromatic, fractional_chromatic_vt,
    independence_number, independent_transversal, strong_coloring,
    strong_chromatic_number_exhaustive, Coloring, FractionalCertificate, StrongColoring,
    StrongExhaustive, VertexPartition,
};
pub use conjectures::{
    analyze_graph, check_borodin_kostochka, check_catlin_formula, check_fajtlowicz,
    check_five_sixths, check_five_sixths_fractional, check_reed, compute_profile,
    enumerate_family, scan, AnalysisRecord, ConjectureReport, FamilySpec, GraphProfile,
    ScanSummary,
};
pub use graph::{Graph, Multigraph};
pub use graph6::{parse_graph6, write_graph6};
pub use symmetry::{
    are_isomorphic, automorphism_orbits, is_vertex_transitive, isomorphism, OrbitPartition,
    Permutation,
};

use num::BigRational;

/// Resource limits for the exact searches.
///
/// Exceeding a limit is always reported as an explicit [`Error::BudgetExhausted`]
/// ("undecided"), never as a wrong answer.
#[derive(Clone, Debug)]
pub struct Budget {
    /// Node cap for each backtracking search (isomorphism, chromatic number,
    /// strong coloring).
    pub search_nodes: u64,
    /// Cap on the number of cliques any enumeration may emit.
    pub clique_limit: usize,
    /// Cap on the number of maximal independent sets enumerated for the
    /// fractional-chromatic linear program.
    pub independent_set_limit: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            search_nodes: 50_000_000,
            clique_limit: 1_000_000,
            independent_set_limit: 200_000,
        }
    }
}

impl Budget {
    /// Budget scaled by a positive factor, saturating; used by the CLI's
    /// budget override.
    pub fn scaled(&self, factor: u64) -> Budget {
        Budget {
            search_nodes: self.search_nodes.saturating_mul(factor),
            clique_limit: self.clique_limit.saturating_mul(factor as usize),
            independent_set_limit: self.independent_set_limit.saturating_mul(factor as usize),
        }
    }
}

/// Errors shared across the toolkit.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("graph would have {requested} vertices; capacity is {MAX_VERTICES}")]
    CapacityExceeded { requested: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("multigraph has no edges")]
    EmptyEdgeList,
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("search budget exhausted during {0}; result undecided")]
    BudgetExhausted(&'static str),
    #[error("clique enumeration exceeded the configured limit of {0}")]
    CliqueLimitExceeded(usize),
    #[error("collection contains a set that is not a maximum clique of the graph")]
    NotMaximumClique,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph is not vertex-transitive")]
    NotVertexTransitive,
    #[error("a proved statement failed on a concrete input: {0}")]
    LemmaFalsified(String),
    #[error("cliques do not form a partition of the vertex set: {0}")]
    NotCliquePartition(String),
    #[error("strong coloring infeasible for the given clique partition")]
    StrongColoringInfeasible,
    #[error("part of size {size} exceeds the color count {colors}")]
    PartTooLarge { size: usize, colors: usize },
    #[error("invalid vertex partition: {0}")]
    InvalidPartition(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Formats an exact rational as `p/q` (denominator always present and positive).
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact rational from an integer.
pub fn rational_from(n: usize) -> BigRational {
    BigRational::from_integer(num::BigInt::from(n))
}

/// Exact rational p/q from integers (q != 0).
pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(num::BigInt::from(p), num::BigInt::from(q))
}
