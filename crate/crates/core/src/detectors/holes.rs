//! Holes and chordality.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};

use super::witness::PatternWitness;

/// The lexicographically least vertex set (as a sorted sequence) inducing a
/// cycle of length in `4..=max_len`, returned in cyclic order.
///
/// Candidate subsets are grown in increasing vertex order. A partial subset
/// survives only while it induces a linear forest that can still close up.
pub fn find_short_hole(g: &Graph, max_len: usize) -> Option<PatternWitness> {
    assert!(max_len >= 4, "holes have length at least four");
    let max_len = max_len.min(g.n());
    if max_len < 4 {
        return None;
    }
    let mut chosen = Vec::with_capacity(max_len);
    let mut degree = vec![0usize; g.n()];
    grow_hole(g, max_len, 0, &mut chosen, &mut degree).map(|set| {
        let order = cyclic_order(g, &set);
        PatternWitness::hole(order)
    })
}

/// Shape of the subgraph induced by `chosen`, given in-set degrees.
enum Shape {
    LinearForest { paths: usize },
    Cycle,
    Dead,
}

fn shape(g: &Graph, chosen: &[usize], degree: &[usize]) -> Shape {
    if chosen.iter().any(|&v| degree[v] > 2) {
        return Shape::Dead;
    }
    let set: VertexSet = chosen.iter().copied().collect();
    let mut seen = VertexSet::new();
    let mut paths = 0;
    let mut cycles = 0;
    for &v in chosen {
        if seen.contains(&v) {
            continue;
        }
        let comp = g.reach_within(v, |w| set.contains(&w));
        let edges: usize = comp.iter().map(|&w| degree[w]).sum::<usize>() / 2;
        if edges == comp.len() {
            cycles += 1;
        } else {
            paths += 1;
        }
        seen.extend(comp);
    }
    match (cycles, paths) {
        (0, p) => Shape::LinearForest { paths: p },
        (1, 0) => Shape::Cycle,
        _ => Shape::Dead,
    }
}

fn grow_hole(
    g: &Graph,
    max_len: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    degree: &mut [usize],
) -> Option<VertexSet> {
    for v in from..g.n() {
        for &w in g.neighbors(v) {
            if chosen.contains(&w) {
                degree[w] += 1;
                degree[v] += 1;
            }
        }
        chosen.push(v);
        let result = match shape(g, chosen, degree) {
            Shape::Cycle if chosen.len() >= 4 => Some(chosen.iter().copied().collect()),
            Shape::LinearForest { paths } if max_len - chosen.len() >= paths => {
                grow_hole(g, max_len, v + 1, chosen, degree)
            }
            _ => None,
        };
        chosen.pop();
        for &w in g.neighbors(v) {
            if chosen.contains(&w) {
                degree[w] -= 1;
                degree[v] -= 1;
            }
        }
        if result.is_some() {
            return result;
        }
    }
    None
}

/// Walks an induced cycle starting from its smallest vertex, stepping first
/// to the smaller of its two neighbors.
fn cyclic_order(g: &Graph, set: &VertexSet) -> Vec<usize> {
    let start = *set.iter().next().expect("non-empty cycle");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| set.contains(&w) && w != prev && (order.len() < 2 || w != order[order.len() - 2]));
        match next {
            Some(w) if w != start => {
                order.push(w);
                prev = cur;
                cur = w;
            }
            _ => break,
        }
    }
    order
}

/// Outcome of a chordality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering: every vertex's later neighbors form a clique.
    Chordal {
        order: Vec<usize>,
    },
    NotChordal {
        hole: PatternWitness,
    },
}

impl Chordality {
    pub fn order(&self) -> Option<&[usize]> {
        match self {
            Chordality::Chordal { order } => Some(order),
            Chordality::NotChordal { .. } => None,
        }
    }
}

/// Maximum cardinality search; the reverse visiting order is a perfect
/// elimination ordering exactly when the graph is chordal.
pub fn chordality(g: &Graph) -> Chordality {
    let order = mcs_elimination_order(g);
    if is_perfect_elimination_order(g, &order) {
        Chordality::Chordal { order }
    } else {
        let hole = find_hole(g).expect("graph without a perfect elimination ordering has a hole");
        Chordality::NotChordal { hole }
    }
}

fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        // heaviest unvisited vertex, smallest id on ties
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        visited[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return false;
        }
        position[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] > position[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}

/// Some hole, found through a vertex `v` and two non-adjacent neighbors
/// `u`, `w`: a shortest `u`–`w` path avoiding the rest of `N[v]` closes an
/// induced cycle. Every hole arises this way, so `None` means chordal.
pub fn find_hole(g: &Graph) -> Option<PatternWitness> {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let blocked = |x: usize| x == v || (x != u && x != w && g.has_edge(v, x));
                if let Some(path) = shortest_path(g, u, w, blocked) {
                    let mut order = vec![v];
                    order.extend(path);
                    return Some(PatternWitness::hole(order));
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, blocked: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if parent[y] == usize::MAX && !blocked(y) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}
