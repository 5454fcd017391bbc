//! Exhaustive searches for induced matchings and independent triangles.

use std::ops::ControlFlow;

use crate::graph::{Graph, VertexSet};

use super::witness::{PatternWitness, WitnessKind};

/// Calls `visit` on every `t`-tuple (increasing indices) of pairwise
/// non-touching items, where an item is a small vertex list. `visit` also
/// receives the per-vertex count of chosen items whose closed neighborhood
/// covers that vertex.
pub(crate) fn for_each_apart_tuple<F>(g: &Graph, items: &[Vec<usize>], t: usize, mut visit: F)
where
    F: FnMut(&[usize], &[u32]) -> ControlFlow<()>,
{
    let mut blocked = vec![0u32; g.n()];
    let mut chosen = Vec::with_capacity(t);
    let _ = descend(g, items, t, 0, &mut chosen, &mut blocked, &mut visit);
}

fn descend<F>(
    g: &Graph,
    items: &[Vec<usize>],
    t: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    blocked: &mut [u32],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize], &[u32]) -> ControlFlow<()>,
{
    if chosen.len() == t {
        return visit(chosen, blocked);
    }
    let need = t - chosen.len();
    for i in from..items.len() {
        if items.len() - i < need {
            break;
        }
        let item = &items[i];
        if item.iter().any(|&v| blocked[v] > 0) {
            continue;
        }
        let cover = closed_cover(g, item);
        for &v in &cover {
            blocked[v] += 1;
        }
        chosen.push(i);
        let flow = descend(g, items, t, i + 1, chosen, blocked, visit);
        chosen.pop();
        for &v in &cover {
            blocked[v] -= 1;
        }
        flow?;
    }
    ControlFlow::Continue(())
}

fn closed_cover(g: &Graph, item: &[usize]) -> VertexSet {
    let set: VertexSet = item.iter().copied().collect();
    g.closed_neighborhood(&set)
}

fn edge_items(g: &Graph) -> Vec<Vec<usize>> {
    g.edges().map(|(u, v)| vec![u, v]).collect()
}

/// Triangles as sorted triples, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for &w in g.neighbors(v) {
            if w > v && g.has_edge(u, w) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

/// Every induced `tK2`, as edge tuples in lexicographic order of the edges.
pub fn induced_matchings(g: &Graph, t: usize) -> Vec<Vec<(usize, usize)>> {
    let items = edge_items(g);
    let mut out = Vec::new();
    for_each_apart_tuple(g, &items, t, |chosen, _| {
        out.push(chosen.iter().map(|&i| (items[i][0], items[i][1])).collect());
        ControlFlow::Continue(())
    });
    out
}

/// The first induced `tK2` in lexicographic edge order, if any.
pub fn find_induced_tk2(g: &Graph, t: usize) -> Option<PatternWitness> {
    let items = edge_items(g);
    let mut found = None;
    for_each_apart_tuple(g, &items, t, |chosen, _| {
        found = Some(parts_of(&items, chosen));
        ControlFlow::Break(())
    });
    found.map(|parts| PatternWitness::new(WitnessKind::InducedMatching, parts))
}

/// The first collection of `t` pairwise non-touching triangles, if any.
pub fn find_triangle_collection(g: &Graph, t: usize) -> Option<PatternWitness> {
    let items: Vec<Vec<usize>> = triangles(g).into_iter().map(|tr| tr.to_vec()).collect();
    let mut found = None;
    for_each_apart_tuple(g, &items, t, |chosen, _| {
        found = Some(parts_of(&items, chosen));
        ControlFlow::Break(())
    });
    found.map(|parts| PatternWitness::new(WitnessKind::TriangleCollection, parts))
}

fn parts_of(items: &[Vec<usize>], chosen: &[usize]) -> Vec<VertexSet> {
    chosen
        .iter()
        .map(|&i| items[i].iter().copied().collect())
        .collect()
}

/// The `3t`-subsets inducing `tC3`, counted, with per-vertex hit counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tc3Count {
    pub count: u64,
    /// `hits[v]` counts the sets `X` with `X ∩ N[v] ≠ ∅`.
    pub hits: Vec<u64>,
}

pub fn count_tc3_sets(g: &Graph, t: usize) -> Tc3Count {
    let items: Vec<Vec<usize>> = triangles(g).into_iter().map(|tr| tr.to_vec()).collect();
    let mut count = 0;
    let mut hits = vec![0u64; g.n()];
    // A set inducing tC3 splits uniquely into its triangles, so tuples and
    // sets are in bijection. X meets N[v] exactly when v lies in N[X].
    for_each_apart_tuple(g, &items, t, |_, blocked| {
        count += 1;
        for (v, &b) in blocked.iter().enumerate() {
            if b > 0 {
                hits[v] += 1;
            }
        }
        ControlFlow::Continue(())
    });
    Tc3Count { count, hits }
}

/// Number of `tC3` sets that meet `region`.
pub fn count_tc3_meeting(g: &Graph, t: usize, region: &VertexSet) -> u64 {
    let items: Vec<Vec<usize>> = triangles(g).into_iter().map(|tr| tr.to_vec()).collect();
    let mut count = 0;
    for_each_apart_tuple(g, &items, t, |chosen, _| {
        if chosen
            .iter()
            .any(|&i| items[i].iter().any(|v| region.contains(v)))
        {
            count += 1;
        }
        ControlFlow::Continue(())
    });
    count
}

/// Some `tC3` set avoiding `region` entirely, if one exists.
pub fn tc3_avoiding(g: &Graph, t: usize, region: &VertexSet) -> Option<Vec<VertexSet>> {
    let items: Vec<Vec<usize>> = triangles(g)
        .into_iter()
        .filter(|tr| tr.iter().all(|v| !region.contains(v)))
        .map(|tr| tr.to_vec())
        .collect();
    let mut found = None;
    for_each_apart_tuple(g, &items, t, |chosen, _| {
        found = Some(parts_of(&items, chosen));
        ControlFlow::Break(())
    });
    found
}
