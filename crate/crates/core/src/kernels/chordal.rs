use crate::detectors::{chordality, Chordality};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Greedy sweep along a perfect elimination ordering restricted to `cand`:
/// the earliest remaining vertex is simplicial, so some maximum solution
/// contains it.
fn sweep(g: &Graph, order: &[usize], cand: &VertexSet) -> VertexSet {
    let mut alive = cand.clone();
    let mut set = VertexSet::new();
    for &v in order {
        if alive.remove(&v) {
            set.insert(v);
            for w in g.neighbors(v) {
                alive.remove(w);
            }
        }
    }
    set
}

/// Independence number of a chordal graph.
pub fn chordal_alpha(g: &Graph) -> Result<usize> {
    let order = elimination_order(g)?;
    Ok(sweep(g, &order, &g.vertex_set()).len())
}

/// The lexicographically least maximum independent set of a chordal graph.
pub fn mis_chordal(g: &Graph) -> Result<VertexSet> {
    let order = elimination_order(g)?;
    Ok(super::lex_least(g, |cand| sweep(g, &order, cand).len()))
}

fn elimination_order(g: &Graph) -> Result<Vec<usize>> {
    match chordality(g) {
        Chordality::Chordal { order } => Ok(order),
        Chordality::NotChordal { hole } => Err(Error::NotChordal {
            hole: hole.cycle.unwrap_or_default(),
        }),
    }
}
