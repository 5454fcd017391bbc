//! Dynamic program over the bags of a path decomposition.

use std::collections::{BTreeMap, HashMap};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::kernels::better;

use super::decomposition::PathDecomposition;
use super::layers::mis_bounded_layers;

/// Maximum independent set of `c - removed`, using `pd` (a decomposition of
/// `c`) restricted to the surviving vertices.
///
/// `T[i][S]` is a best independent set of the first `i` bags meeting the
/// adhesion `A_i` exactly in `S`. Entry `T[i][S]` extends some `T[i-1][S']`
/// by `S` and an optimum of bag `i` minus both adhesions and `N[S ∪ S']`.
/// Bag interiors are solved layer by layer, with `dist` giving each vertex's
/// BFS layer in `c`.
pub(crate) fn solve_on_decomposition(
    c: &Graph,
    pd: &PathDecomposition,
    dist: &[usize],
    removed: &VertexSet,
    t: usize,
) -> Result<VertexSet> {
    let keep =
        |set: &VertexSet| -> VertexSet { set.iter().copied().filter(|u| !removed.contains(u)).collect() };
    let p = pd.bags.len();
    let bags: Vec<VertexSet> = pd.bags.iter().map(keep).collect();
    let mut adhesions = vec![VertexSet::new()];
    adhesions.extend(pd.adhesions.iter().map(keep));
    adhesions.push(VertexSet::new());

    let mut prev: BTreeMap<VertexSet, VertexSet> = BTreeMap::from([(VertexSet::new(), VertexSet::new())]);
    for i in 1..=p {
        let bag = &bags[i - 1];
        let (a_prev, a_cur) = (&adhesions[i - 1], &adhesions[i]);
        let core: VertexSet = bag
            .iter()
            .copied()
            .filter(|u| !a_prev.contains(u) && !a_cur.contains(u))
            .collect();
        let mut interior: HashMap<VertexSet, VertexSet> = HashMap::new();
        let mut table = BTreeMap::new();
        for s in independent_subsets(c, a_cur) {
            let mut best: Option<VertexSet> = None;
            for (s_prev, t_prev) in &prev {
                let joint: VertexSet = s.union(s_prev).copied().collect();
                if !c.is_independent(&joint) || s.intersection(a_prev).ne(s_prev.intersection(a_cur)) {
                    continue;
                }
                let blocked = c.closed_neighborhood(&joint);
                let free: VertexSet = core.iter().copied().filter(|u| !blocked.contains(u)).collect();
                let inner = match interior.get(&free) {
                    Some(found) => found.clone(),
                    None => {
                        let found = solve_interior(c, &free, dist, t)?;
                        interior.insert(free, found.clone());
                        found
                    }
                };
                let mut cand = t_prev.clone();
                cand.extend(inner);
                cand.extend(s.iter().copied());
                if best.as_ref().is_none_or(|b| better(&cand, b)) {
                    best = Some(cand);
                }
            }
            if let Some(entry) = best {
                debug_assert!(c.is_independent(&entry));
                debug_assert!(entry.intersection(a_cur).eq(s.iter()));
                table.insert(s, entry);
            }
        }
        prev = table;
    }
    Ok(prev.remove(&VertexSet::new()).unwrap_or_default())
}

/// Runs the layered kernel on `c[free]`, one layer per BFS distance.
fn solve_interior(c: &Graph, free: &VertexSet, dist: &[usize], t: usize) -> Result<VertexSet> {
    if free.is_empty() {
        return Ok(VertexSet::new());
    }
    let ids: Vec<usize> = free.iter().copied().collect();
    let sub = c.induced_subgraph(free)?;
    let lo = ids.iter().map(|&u| dist[u]).min().unwrap();
    let hi = ids.iter().map(|&u| dist[u]).max().unwrap();
    let mut layers = vec![VertexSet::new(); hi - lo + 1];
    for (i, &u) in ids.iter().enumerate() {
        layers[dist[u] - lo].insert(i);
    }
    let local = mis_bounded_layers(&sub, &layers, t)?;
    Ok(local.into_iter().map(|i| ids[i]).collect())
}

/// Independent subsets of `set`, including the empty one.
fn independent_subsets(c: &Graph, set: &VertexSet) -> Vec<VertexSet> {
    let items: Vec<usize> = set.iter().copied().collect();
    let mut out = vec![VertexSet::new()];
    for &u in &items {
        let grown: Vec<VertexSet> = out
            .iter()
            .filter(|s| s.iter().all(|&w| !c.has_edge(u, w)))
            .map(|s| {
                let mut s = s.clone();
                s.insert(u);
                s
            })
            .collect();
        out.extend(grown);
    }
    out
}
