//! Maximum independent set on a few consecutive BFS layers.

use crate::detectors::find_induced_tk2;
use crate::error::{ClassViolation, Error, Result, ViolationKind};
use crate::graph::{Graph, VertexSet};
use crate::kernels::{alekseev_cap, enumerate_maximal_independent_sets, mis_bipartite, mis_bipartite_any};

/// Exact MIS of `g`, whose vertices are split into `layers` with edges only
/// inside a layer or between consecutive layers.
///
/// An optimum meets every layer in an independent set, which extends to a
/// maximal one. So it suffices to try every tuple of per-layer maximal
/// independent sets. Their union is bipartite along layer parity. Each layer
/// may have at most `m^(2t-1)` maximal sets (`m` = layer size). More than that
/// means the layer contains an induced `tK2`, which is reported as a class
/// violation.
pub fn mis_bounded_layers(g: &Graph, layers: &[VertexSet], t: usize) -> Result<VertexSet> {
    validate(g, layers)?;
    let mut choices: Vec<Vec<VertexSet>> = Vec::with_capacity(layers.len());
    for layer in layers {
        let sub = g.induced_subgraph(layer)?;
        let ids: Vec<usize> = layer.iter().copied().collect();
        let cap = alekseev_cap(sub.n(), t);
        let list = match enumerate_maximal_independent_sets(&sub, cap) {
            Ok(list) => list,
            Err(Error::CapExceeded { .. }) => return Err(layer_violation(&sub, &ids, t, cap)),
            Err(e) => return Err(e),
        };
        choices.push(
            list.into_iter()
                .map(|s| s.into_iter().map(|i| ids[i]).collect())
                .collect(),
        );
    }

    let mut best_size = 0;
    let mut best_unions: std::collections::BTreeSet<VertexSet> = Default::default();
    let mut pick = vec![0usize; choices.len()];
    loop {
        let union: VertexSet = pick
            .iter()
            .zip(&choices)
            .flat_map(|(&i, list)| list[i].iter().copied())
            .collect();
        let sub = g.induced_subgraph(&union)?;
        let size = mis_bipartite_any(&sub)?.len();
        if size > best_size || best_unions.is_empty() {
            best_size = size;
            best_unions.clear();
        }
        if size == best_size {
            best_unions.insert(union);
        }
        if !advance(&mut pick, &choices) {
            break;
        }
    }

    let mut best: Option<VertexSet> = None;
    for union in best_unions {
        let ids: Vec<usize> = union.iter().copied().collect();
        let sub = g.induced_subgraph(&union)?;
        let local: VertexSet = mis_bipartite(&sub)?.into_iter().map(|i| ids[i]).collect();
        if best.as_ref().is_none_or(|b| local.iter().lt(b.iter())) {
            best = Some(local);
        }
    }
    Ok(best.unwrap_or_default())
}

fn advance(pick: &mut [usize], choices: &[Vec<VertexSet>]) -> bool {
    for (i, list) in pick.iter_mut().zip(choices) {
        *i += 1;
        if *i < list.len() {
            return true;
        }
        *i = 0;
    }
    false
}

fn validate(g: &Graph, layers: &[VertexSet]) -> Result<()> {
    let mut index = vec![usize::MAX; g.n()];
    for (j, layer) in layers.iter().enumerate() {
        for &v in layer {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if index[v] != usize::MAX {
                return Err(Error::InvalidLayering(format!("vertex {v} lies in two layers")));
            }
            index[v] = j;
        }
    }
    if let Some(v) = index.iter().position(|&j| j == usize::MAX) {
        return Err(Error::InvalidLayering(format!("vertex {v} lies in no layer")));
    }
    for (u, w) in g.edges() {
        if index[u].abs_diff(index[w]) > 1 {
            return Err(Error::InvalidLayering(format!("edge {u}-{w} skips a layer")));
        }
    }
    Ok(())
}

fn layer_violation(sub: &Graph, ids: &[usize], t: usize, cap: usize) -> Error {
    let layer: VertexSet = ids.iter().copied().collect();
    let mut witness = vec![layer];
    if let Some(w) = find_induced_tk2(sub, t) {
        witness.extend(w.parts.iter().map(|p| p.iter().map(|&i| ids[i]).collect()));
    }
    Error::ClassViolation(ClassViolation::new(
        ViolationKind::LayerEnumeration,
        witness,
        format!(
            "a layer of {} vertices has more than {cap} maximal independent sets",
            sub.n()
        ),
    ))
}
