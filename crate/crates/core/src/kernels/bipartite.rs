//! Bipartite MIS as the complement of a König vertex cover.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A proper 2-coloring (`false`/`true` per vertex), or an odd cycle.
pub fn two_coloring(g: &Graph) -> Result<Vec<bool>> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    for root in g.vertices() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return Err(Error::NotBipartite {
                            cycle: odd_cycle(&parent, u, w),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap()).collect())
}

/// Closes the tree paths from `u` and `w` to their common ancestor.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let up = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = up(u);
    let pw = up(w);
    let on_w: VertexSet = pw.iter().copied().collect();
    let meet = *pu.iter().find(|x| on_w.contains(x)).unwrap();
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != meet).collect();
    cycle.push(meet);
    let back: Vec<usize> = pw.iter().copied().take_while(|&x| x != meet).collect();
    cycle.extend(back.into_iter().rev());
    cycle
}

/// Maximum matching by Hopcroft–Karp, as edges `(left, right)` with the left
/// endpoint colored `false`.
pub fn maximum_matching(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let side = two_coloring(g)?;
    let mate = hopcroft_karp(g, &side);
    Ok(g.vertices()
        .filter(|&u| !side[u])
        .filter_map(|u| mate[u].map(|w| (u, w)))
        .collect())
}

fn hopcroft_karp(g: &Graph, side: &[bool]) -> Vec<Option<usize>> {
    let n = g.n();
    let left: Vec<usize> = g.vertices().filter(|&u| !side[u]).collect();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let mut layer = vec![usize::MAX; n];
    loop {
        // BFS from free left vertices, layering the left side.
        let mut queue = VecDeque::new();
        for &u in &left {
            if mate[u].is_none() {
                layer[u] = 0;
                queue.push_back(u);
            } else {
                layer[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                match mate[w] {
                    None => found = true,
                    Some(x) if layer[x] == usize::MAX => {
                        layer[x] = layer[u] + 1;
                        queue.push_back(x);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            return mate;
        }
        for &u in &left {
            if mate[u].is_none() {
                augment(g, u, &mut mate, &mut layer);
            }
        }
    }
}

fn augment(g: &Graph, u: usize, mate: &mut [Option<usize>], layer: &mut [usize]) -> bool {
    for &w in g.neighbors(u) {
        let ok = match mate[w] {
            None => true,
            Some(x) => layer[x] == layer[u] + 1 && augment(g, x, mate, layer),
        };
        if ok {
            mate[u] = Some(w);
            mate[w] = Some(u);
            return true;
        }
    }
    layer[u] = usize::MAX;
    false
}

/// Some maximum independent set of a bipartite graph, without the
/// lexicographic canonicalization.
pub fn mis_bipartite_any(g: &Graph) -> Result<VertexSet> {
    let side = two_coloring(g)?;
    Ok(konig_independent(g, &side))
}

fn konig_independent(g: &Graph, side: &[bool]) -> VertexSet {
    let mate = hopcroft_karp(g, side);
    // Z: reachable from free left vertices along alternating paths.
    let mut in_z = vec![false; g.n()];
    let mut queue: VecDeque<usize> = g.vertices().filter(|&u| !side[u] && mate[u].is_none()).collect();
    for &u in &queue {
        in_z[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if in_z[w] || mate[u] == Some(w) {
                continue;
            }
            in_z[w] = true;
            if let Some(x) = mate[w] {
                if !in_z[x] {
                    in_z[x] = true;
                    queue.push_back(x);
                }
            }
        }
    }
    // The cover is (L - Z) ∪ (R ∩ Z); its complement is independent.
    g.vertices().filter(|&v| side[v] != in_z[v]).collect()
}

/// The lexicographically least maximum independent set of a bipartite graph.
pub fn mis_bipartite(g: &Graph) -> Result<VertexSet> {
    let side = two_coloring(g)?;
    Ok(super::lex_least(g, |cand| {
        let sub = g.induced_subgraph(cand).expect("candidate set is in range");
        let side: Vec<bool> = cand.iter().map(|&v| side[v]).collect();
        sub.n() - count_matching(&sub, &side)
    }))
}

fn count_matching(g: &Graph, side: &[bool]) -> usize {
    hopcroft_karp(g, side).iter().filter(|m| m.is_some()).count() / 2
}
