use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `n^(2t-1) + 1`: one more than the number of maximal independent sets a
/// graph without an induced `tK2` can have, so overflowing it is detectable.
pub fn alekseev_cap(n: usize, t: usize) -> usize {
    assert!(t >= 1);
    let exp = u32::try_from(2 * t - 1).unwrap_or(u32::MAX);
    n.max(1).saturating_pow(exp).saturating_add(1)
}

/// All maximal independent sets, in the order of a depth-first walk over
/// vertex prefixes.
///
/// Each maximal set of the prefix graph `G[v_0..v_i]` has a unique parent in
/// `G[v_0..v_{i-1}]`, and the walk visits that tree. Every branch ends in a
/// leaf, so the delay between outputs is polynomial. Fails once more than
/// `cap` sets have been produced.
pub fn enumerate_maximal_independent_sets(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    let mut current = VertexSet::new();
    walk(g, 0, &mut current, cap, &mut out)?;
    Ok(out)
}

fn walk(g: &Graph, i: usize, set: &mut VertexSet, cap: usize, out: &mut Vec<VertexSet>) -> Result<()> {
    if i == g.n() {
        if out.len() == cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(set.clone());
        return Ok(());
    }
    let hits: Vec<usize> = g
        .neighbors(i)
        .iter()
        .copied()
        .filter(|w| set.contains(w))
        .collect();
    if hits.is_empty() {
        set.insert(i);
        walk(g, i + 1, set, cap, out)?;
        set.remove(&i);
        return Ok(());
    }
    walk(g, i + 1, set, cap, out)?;
    let mut child: VertexSet = set.iter().copied().filter(|w| !hits.contains(w)).collect();
    child.insert(i);
    if maximal_in_prefix(g, &child, i + 1) && parent(g, &child, i) == *set {
        let mut child = child;
        walk(g, i + 1, &mut child, cap, out)?;
    }
    Ok(())
}

fn maximal_in_prefix(g: &Graph, set: &VertexSet, len: usize) -> bool {
    (0..len).all(|u| set.contains(&u) || g.neighbors(u).iter().any(|w| set.contains(w)))
}

/// Greedy completion of `child - {i}` within `G[v_0..v_{i-1}]`.
fn parent(g: &Graph, child: &VertexSet, i: usize) -> VertexSet {
    let mut p: VertexSet = child.iter().copied().filter(|&w| w != i).collect();
    for u in 0..i {
        if !p.contains(&u) && g.neighbors(u).iter().all(|w| !p.contains(w)) {
            p.insert(u);
        }
    }
    p
}
