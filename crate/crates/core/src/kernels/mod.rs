//! Exact maximum independent set subroutines.
//!
//! Every kernel returns the lexicographically least maximum independent set
//! (compared as sorted sequences), so results are reproducible across kernels.

mod bipartite;
mod chordal;
mod enumerate;
mod oracle;

pub use bipartite::{maximum_matching, mis_bipartite, mis_bipartite_any, two_coloring};
pub use chordal::{chordal_alpha, mis_chordal};
pub use enumerate::{alekseev_cap, enumerate_maximal_independent_sets};
pub use oracle::{independence_number, mis_oracle, mis_oracle_with, OracleConfig, DEFAULT_ORACLE_CAP};

use crate::graph::{Graph, VertexSet};

/// Turns an exact `alpha` for induced subgraphs into the lexicographically
/// least maximum independent set: scan vertices in order and keep `v`
/// whenever some maximum solution of the remainder still contains it.
pub(crate) fn lex_least(g: &Graph, alpha: impl Fn(&VertexSet) -> usize) -> VertexSet {
    let mut cand = g.vertex_set();
    let mut need = alpha(&cand);
    let mut chosen = VertexSet::new();
    for v in g.vertices() {
        if need == 0 {
            break;
        }
        if !cand.contains(&v) {
            continue;
        }
        let mut rest = cand.clone();
        rest.remove(&v);
        for w in g.neighbors(v) {
            rest.remove(w);
        }
        if 1 + alpha(&rest) == need {
            chosen.insert(v);
            cand = rest;
            need -= 1;
        } else {
            cand.remove(&v);
        }
    }
    chosen
}

/// Compares independent sets by size (larger first), then lexicographically.
pub fn better(a: &VertexSet, b: &VertexSet) -> bool {
    a.len() > b.len() || (a.len() == b.len() && a.iter().lt(b.iter()))
}
