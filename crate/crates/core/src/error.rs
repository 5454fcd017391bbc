use std::collections::BTreeSet;

use thiserror::Error;

/// A concrete witness that an input graph lies outside the class a solver
/// was asked to assume. Produced whenever a proof-backed assertion fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassViolation {
    pub kind: ViolationKind,
    /// Vertex sets certifying the violation, in the ids of the graph the
    /// check ran on.
    pub witness: Vec<BTreeSet<usize>>,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    /// An induced path meets `N(X)` in at least `3t^2` vertices.
    PathNeighborhood,
    /// More than `t^2` cut edges were needed between two layers.
    CutsetTooLarge,
    /// No admissible next cut edge on a path while the layers stay connected.
    NoCutEdge,
    /// A BFS layer has more maximal independent sets than the class allows.
    LayerEnumeration,
    /// The hole neighborhood misses a `tC3` set.
    HoleMissesTriangles,
    /// The measure did not drop by the guaranteed fraction.
    MeasureDecrease,
    SeparatorNotClique,
    CommonNeighborhoodNotClique,
    RemainderNotChordal,
    /// A cut selection failed one of its structural consequences.
    CutSelection,
}

impl ClassViolation {
    pub fn new(kind: ViolationKind, witness: Vec<BTreeSet<usize>>, detail: impl Into<String>) -> Self {
        Self {
            kind,
            witness,
            detail: detail.into(),
        }
    }

    /// Rewrites every witness vertex through `map` (typically a label map to
    /// the ids of an enclosing graph).
    pub fn relabel(mut self, map: impl Fn(usize) -> usize) -> Self {
        self.witness = self
            .witness
            .into_iter()
            .map(|part| part.into_iter().map(&map).collect())
            .collect();
        self
    }
}

impl std::fmt::Display for ClassViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.detail)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("source set is empty")]
    EmptySource,
    #[error("source set does not induce a connected subgraph")]
    DisconnectedSource,
    #[error("{what}: instance of size {size} exceeds the cap {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("enumeration produced more than {cap} sets")]
    CapExceeded { cap: usize },
    #[error("graph is not bipartite (odd cycle {cycle:?})")]
    NotBipartite { cycle: Vec<usize> },
    #[error("graph is not chordal (hole {hole:?})")]
    NotChordal { hole: Vec<usize> },
    #[error("the sets touch, so no separator exists")]
    NotSeparable,
    #[error("invalid layering: {0}")]
    InvalidLayering(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("class violation: {0}")]
    ClassViolation(ClassViolation),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("rejection sampling exhausted {attempts} attempts")]
    RejectionBudget { attempts: usize },
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
