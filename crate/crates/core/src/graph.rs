//! Undirected simple graphs over dense vertex ids, plus the traversal
//! primitives every solver builds on.
//!
//! Adjacency lists are kept sorted, so every iteration order (and therefore
//! every tie-break further up the stack) is deterministic.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type VertexSet = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    /// Maps internal ids to the ids of the root graph this one was cut from.
    labels: Option<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw(adj, None))
    }

    fn from_raw(mut adj: Vec<Vec<usize>>, labels: Option<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Self {
            adj,
            m: twice / 2,
            labels,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Id of `v` in the root graph.
    pub fn label(&self, v: usize) -> usize {
        match &self.labels {
            Some(labels) => labels[v],
            None => v,
        }
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    /// Maps a vertex set to root-graph ids.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|&v| self.label(v)).collect()
    }

    /// Drops the label map, making this graph its own root.
    pub fn unlabeled(mut self) -> Self {
        self.labels = None;
        self
    }

    /// `N(S) = (union of N(v) for v in S) \ S`
    pub fn open_neighborhood(&self, set: &VertexSet) -> VertexSet {
        set.iter()
            .flat_map(|&v| self.adj[v].iter().copied())
            .filter(|w| !set.contains(w))
            .collect()
    }

    /// `N[S] = N(S) ∪ S`
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.open_neighborhood(set);
        out.extend(set.iter().copied());
        out
    }

    pub fn closed_neighborhood_of(&self, v: usize) -> VertexSet {
        let mut out: VertexSet = self.adj[v].iter().copied().collect();
        out.insert(v);
        out
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|&v| v < self.n() && self.adj[v].iter().all(|w| !set.contains(w)))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let list: Vec<usize> = set.iter().copied().collect();
        list.iter()
            .enumerate()
            .all(|(i, &u)| list[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Whether two disjoint or overlapping sets touch: they intersect or an
    /// edge joins them.
    pub fn touch(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter()
            .any(|&v| b.contains(&v) || self.adj[v].iter().any(|w| b.contains(w)))
    }

    /// Whether `set` is non-empty and induces a connected subgraph.
    pub fn is_connected_subset(&self, set: &VertexSet) -> bool {
        let Some(&start) = set.iter().next() else {
            return false;
        };
        self.reach_within(start, |v| set.contains(&v)).len() == set.len()
    }

    /// Vertices reachable from `start` through vertices accepted by `allowed`.
    pub(crate) fn reach_within(&self, start: usize, allowed: impl Fn(usize) -> bool) -> VertexSet {
        let mut seen = VertexSet::new();
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if allowed(w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// `G[S]`, relabeled to `0..|S|` in increasing order of the original ids.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        let n = self.n();
        if let Some(&bad) = set.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        let order: Vec<usize> = set.iter().copied().collect();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        let labels = order.iter().map(|&v| self.label(v)).collect();
        Ok(Graph::from_raw(adj, Some(labels)))
    }

    /// `G - S`
    pub fn without(&self, set: &VertexSet) -> Graph {
        let keep: VertexSet = self.vertices().filter(|v| !set.contains(v)).collect();
        self.induced_subgraph(&keep)
            .expect("complement of a vertex set is in range")
    }

    /// Adjacency as bitmasks; requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask view needs at most 64 vertices");
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &w| acc | (1u64 << w)))
            .collect()
    }

    /// Disjoint union, with the vertices of `other` shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&w| w + shift).collect()),
        );
        Graph::from_raw(adj, None)
    }

    /// Join: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut g = self.disjoint_union(other);
        for u in 0..shift {
            for v in shift..g.n() {
                g.adj[u].push(v);
                g.adj[v].push(u);
            }
        }
        Graph::from_raw(g.adj, None)
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&w| perm[w]).collect();
        }
        Graph::from_raw(adj, None)
    }
}

/// BFS distance classes from a connected source set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layering {
    pub source: VertexSet,
    /// `layers[i - 1]` holds the vertices at distance exactly `i`.
    pub layers: Vec<VertexSet>,
    /// Vertices not reachable from the source.
    pub unreachable: VertexSet,
    dist: Vec<Option<usize>>,
}

impl Layering {
    /// The largest distance `q`.
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// `L_i`; `L_0` is the source. Out-of-range indices give the empty set.
    pub fn layer(&self, i: usize) -> &VertexSet {
        static EMPTY: VertexSet = VertexSet::new();
        if i == 0 {
            &self.source
        } else {
            self.layers.get(i - 1).unwrap_or(&EMPTY)
        }
    }

    pub fn distance(&self, v: usize) -> Option<usize> {
        self.dist.get(v).copied().flatten()
    }

    /// Vertices in layers `lo..=hi`.
    pub fn band(&self, lo: usize, hi: usize) -> VertexSet {
        (lo..=hi).flat_map(|i| self.layer(i).iter().copied()).collect()
    }
}

pub fn bfs_layering(g: &Graph, source: &VertexSet) -> Result<Layering> {
    if source.is_empty() {
        return Err(Error::EmptySource);
    }
    if let Some(&bad) = source.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: bad,
            n: g.n(),
        });
    }
    if !g.is_connected_subset(source) {
        return Err(Error::DisconnectedSource);
    }
    let mut dist = vec![None; g.n()];
    let mut frontier: Vec<usize> = source.iter().copied().collect();
    for &s in &frontier {
        dist[s] = Some(0);
    }
    let mut layers = Vec::new();
    let mut depth = 0;
    loop {
        depth += 1;
        let mut next = VertexSet::new();
        for &u in &frontier {
            for &w in g.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(depth);
                    next.insert(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next.iter().copied().collect();
        layers.push(next);
    }
    let unreachable = g.vertices().filter(|&v| dist[v].is_none()).collect();
    Ok(Layering {
        source: source.clone(),
        layers,
        unreachable,
        dist,
    })
}

/// Partition of the vertices into connected components, ordered by their
/// smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    let mut parts = Vec::new();
    for v in g.vertices() {
        if seen[v] {
            continue;
        }
        let part = g.reach_within(v, |_| true);
        for &w in &part {
            seen[w] = true;
        }
        parts.push(part);
    }
    parts
}

/// Components of `G[allowed]`, ordered by smallest vertex. Ids stay those of `g`.
pub fn components_within(g: &Graph, allowed: &VertexSet) -> Vec<VertexSet> {
    let mut seen = VertexSet::new();
    let mut parts = Vec::new();
    for &v in allowed {
        if seen.contains(&v) {
            continue;
        }
        let part = g.reach_within(v, |w| allowed.contains(&w));
        seen.extend(part.iter().copied());
        parts.push(part);
    }
    parts
}

pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Graph> {
    g.induced_subgraph(s)
}

/// Repeatedly takes the smallest vertex of degree at most one into the
/// solution and deletes its closed neighborhood.
///
/// Returns the remaining graph (labels point into `g`'s root) and the forced
/// vertices in `g`'s ids. `forced` extends to a maximum independent set of
/// `g`, and the remainder has minimum degree at least two.
pub fn reduce_degree_one(g: &Graph) -> (Graph, VertexSet) {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut forced = VertexSet::new();
    // Candidates of degree <= 1, always popped smallest first.
    let mut low: BTreeSet<usize> = g.vertices().filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = low.pop_first() {
        if !alive[v] || degree[v] > 1 {
            continue;
        }
        forced.insert(v);
        let mut dead = vec![v];
        dead.extend(g.neighbors(v).iter().copied().filter(|&w| alive[w]));
        for &d in &dead {
            alive[d] = false;
        }
        for &d in &dead {
            for &w in g.neighbors(d) {
                if alive[w] {
                    degree[w] -= 1;
                    if degree[w] <= 1 {
                        low.insert(w);
                    }
                }
            }
        }
    }
    let rest: VertexSet = g.vertices().filter(|&v| alive[v]).collect();
    let reduced = g
        .induced_subgraph(&rest)
        .expect("surviving vertices are in range");
    (reduced, forced)
}

/// Small named graphs used by tests, generators and pattern oracles.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::from_edges(a + b, &edges).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// `k` disjoint copies of `g`.
    pub fn copies(g: &Graph, k: usize) -> Graph {
        (0..k).fold(Graph::new(0), |acc, _| acc.disjoint_union(g))
    }

    /// The friendship graph `K1 + tK2`; vertex 0 is the apex.
    pub fn friendship(t: usize) -> Graph {
        complete(1).join(&copies(&complete(2), t))
    }

    /// `tC3 ⊎ C4`; the 4-cycle comes last.
    pub fn triangles_and_square(t: usize) -> Graph {
        copies(&complete(3), t).disjoint_union(&cycle(4))
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn set(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn layering_on_path_complete_and_cycle() {
        let p = path(3);
        let l = bfs_layering(&p, &set(&[0])).unwrap();
        assert_eq!(l.layers, vec![set(&[1]), set(&[2])]);

        let k = complete(4);
        let l = bfs_layering(&k, &set(&[2])).unwrap();
        assert_eq!(l.depth(), 1);
        assert_eq!(l.layer(1), &set(&[0, 1, 3]));

        let c = cycle(6);
        let l = bfs_layering(&c, &set(&[0])).unwrap();
        assert_eq!(l.layers, vec![set(&[1, 5]), set(&[2, 4]), set(&[3])]);
    }

    #[test]
    fn layering_rejects_bad_sources() {
        let c = cycle(6);
        assert!(matches!(
            bfs_layering(&c, &set(&[0, 3])),
            Err(Error::DisconnectedSource)
        ));
        assert!(matches!(bfs_layering(&c, &set(&[])), Err(Error::EmptySource)));
    }

    #[test]
    fn layering_reports_unreachable() {
        let g = path(2).disjoint_union(&path(2));
        let l = bfs_layering(&g, &set(&[0])).unwrap();
        assert_eq!(l.unreachable, set(&[2, 3]));
        assert_eq!(l.distance(2), None);
    }

    #[test]
    fn components() {
        let two_k2 = copies(&complete(2), 2);
        assert_eq!(connected_components(&two_k2), vec![set(&[0, 1]), set(&[2, 3])]);
        assert!(connected_components(&Graph::new(0)).is_empty());
        let sizes: Vec<usize> = connected_components(&cycle(5).disjoint_union(&Graph::new(1)))
            .iter()
            .map(|c| c.len())
            .collect();
        assert_eq!(sizes, vec![5, 1]);
    }

    #[test]
    fn induced_subgraph_of_cycle_is_matching() {
        let c = cycle(6);
        let h = c.induced_subgraph(&set(&[1, 2, 4, 5])).unwrap();
        // brute force: the edges of C6 with both ends in {1,2,4,5}
        let expected: Vec<_> = c
            .edges()
            .filter(|&(u, v)| [1, 2, 4, 5].contains(&u) && [1, 2, 4, 5].contains(&v))
            .collect();
        assert_eq!(expected, vec![(1, 2), (4, 5)]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert_eq!(h.labels().unwrap(), &[1, 2, 4, 5]);

        assert_eq!(c.induced_subgraph(&c.vertex_set()).unwrap().unlabeled(), c);
        assert_eq!(c.induced_subgraph(&set(&[])).unwrap().n(), 0);
        assert!(c.induced_subgraph(&set(&[6])).is_err());
    }

    #[test]
    fn nested_labels_compose() {
        let c = cycle(8);
        let a = c.induced_subgraph(&set(&[2, 3, 4, 5, 6])).unwrap();
        let b = a.induced_subgraph(&set(&[1, 3])).unwrap();
        assert_eq!(b.lift(&set(&[0, 1])), set(&[3, 5]));
    }

    #[test]
    fn degree_one_reduction() {
        let (rest, forced) = reduce_degree_one(&path(5));
        assert_eq!(rest.n(), 0);
        assert_eq!(forced.len(), 3);

        let c = cycle(5);
        let (rest, forced) = reduce_degree_one(&c);
        assert!(forced.is_empty());
        assert_eq!(rest.unlabeled(), c);

        let (rest, forced) = reduce_degree_one(&star(4));
        assert_eq!(rest.n(), 0);
        assert_eq!(forced, set(&[1, 2, 3, 4]));
    }

    #[test]
    fn reduction_leaves_min_degree_two() {
        // C4 with a pendant path
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let (rest, forced) = reduce_degree_one(&g);
        assert_eq!(forced, set(&[5]));
        assert!(rest.vertices().all(|v| rest.degree(v) >= 2));
        assert_eq!(rest.lift(&rest.vertex_set()), set(&[0, 1, 2, 3]));
    }

    #[test]
    fn families_have_expected_shape() {
        assert_eq!(petersen().m(), 15);
        assert!(petersen().vertices().all(|v| petersen().degree(v) == 3));
        let f = friendship(2);
        assert_eq!((f.n(), f.m()), (5, 6));
        let tc = triangles_and_square(2);
        assert_eq!((tc.n(), tc.m()), (10, 10));
    }
}
