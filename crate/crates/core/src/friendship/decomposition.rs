//! Path decompositions of a component of `G - X` with small adhesions and
//! bags spanning few BFS layers.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{ClassViolation, Error, Result, ViolationKind};
use crate::graph::{bfs_layering, Graph, Layering, VertexSet};

/// `t^2 (6t^2 + 2)`, the layer distance a cutset is asked to span.
pub fn f_bound(t: usize) -> usize {
    t * t * (6 * t * t + 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathDecomposition {
    /// The vertex the BFS layering starts from.
    pub root: usize,
    pub bags: Vec<VertexSet>,
    /// `adhesions[i]` is `bags[i] ∩ bags[i + 1]`.
    pub adhesions: Vec<VertexSet>,
    /// First and last BFS layer each bag meets.
    pub layer_windows: Vec<(usize, usize)>,
    /// The cut edges behind each adhesion.
    pub cutsets: Vec<Vec<(usize, usize)>>,
}

impl PathDecomposition {
    /// The one-bag decomposition.
    pub fn single(c: &Graph, root: usize) -> Result<Self> {
        let lay = bfs_layering(c, &VertexSet::from([root]))?;
        if !lay.unreachable.is_empty() {
            return Err(Error::NotConnected);
        }
        Ok(Self {
            root,
            bags: vec![c.vertex_set()],
            adhesions: Vec::new(),
            layer_windows: vec![(0, lay.depth())],
            cutsets: Vec::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn max_adhesion(&self) -> usize {
        self.adhesions.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn max_window(&self) -> usize {
        self.layer_windows
            .iter()
            .map(|&(lo, hi)| hi - lo + 1)
            .max()
            .unwrap_or(0)
    }
}

/// Cut edges whose endpoints separate `L_s` from `L_target` in `c`.
///
/// Repeatedly takes a shortest `L_s`–`L_target` path in what is left of `c`
/// and deletes both endpoints of one of its edges avoiding `x_neighbors`. The
/// first edge taken is the one closest to `v`. Each later one is the first
/// along the path whose distance to `v` is at least two more than the
/// previous pick.
pub fn layer_cutset(
    c: &Graph,
    x_neighbors: &VertexSet,
    v: usize,
    s: usize,
    target: usize,
    t: usize,
) -> Result<Vec<(usize, usize)>> {
    let lay = bfs_layering(c, &VertexSet::from([v]))?;
    cutset_in(c, &lay, x_neighbors, s, target, t)
}

fn cutset_in(
    c: &Graph,
    lay: &Layering,
    x_neighbors: &VertexSet,
    s: usize,
    target: usize,
    t: usize,
) -> Result<Vec<(usize, usize)>> {
    if s == 0 || target <= s || target > lay.depth() {
        return Err(Error::InvalidLayering(format!(
            "cannot cut layer {s} from layer {target} at depth {}",
            lay.depth()
        )));
    }
    let dist = |u: usize| lay.distance(u).expect("component is connected");
    let edge_dist = |(a, b): (usize, usize)| dist(a).min(dist(b));
    let clean = |(a, b): (usize, usize)| !x_neighbors.contains(&a) && !x_neighbors.contains(&b);
    let mut removed = vec![false; c.n()];
    let mut cut: Vec<(usize, usize)> = Vec::new();
    while let Some(path) = layer_path(c, lay, s, target, &removed) {
        let touching: VertexSet = path.iter().copied().filter(|u| x_neighbors.contains(u)).collect();
        if touching.len() >= 3 * t * t {
            return Err(violation(
                ViolationKind::PathNeighborhood,
                vec![path.iter().copied().collect(), touching],
                format!("an induced path meets N(X) in at least {} vertices", 3 * t * t),
            ));
        }
        if cut.len() == t * t {
            return Err(violation(
                ViolationKind::CutsetTooLarge,
                vec![endpoints(&cut), path.iter().copied().collect()],
                format!(
                    "layers {s} and {target} still connected after {} cut edges",
                    cut.len()
                ),
            ));
        }
        let edges = path.windows(2).map(|w| (w[0], w[1]));
        let pick = match cut.last() {
            None => edges.filter(|&e| clean(e)).min_by_key(|&e| edge_dist(e)),
            Some(&prev) => {
                let floor = edge_dist(prev) + 2;
                edges.filter(|&e| clean(e)).find(|&e| edge_dist(e) >= floor)
            }
        };
        let Some((a, b)) = pick else {
            return Err(violation(
                ViolationKind::NoCutEdge,
                vec![endpoints(&cut), path.iter().copied().collect()],
                format!("no admissible cut edge between layers {s} and {target}"),
            ));
        };
        removed[a] = true;
        removed[b] = true;
        cut.push((a.min(b), a.max(b)));
    }
    Ok(cut)
}

fn violation(kind: ViolationKind, witness: Vec<VertexSet>, detail: String) -> Error {
    Error::ClassViolation(ClassViolation::new(kind, witness, detail))
}

fn endpoints(edges: &[(usize, usize)]) -> VertexSet {
    edges.iter().flat_map(|&(a, b)| [a, b]).collect()
}

/// Shortest path from `L_s` to `L_target` avoiding `removed`, listed from its
/// `L_s` end.
fn layer_path(c: &Graph, lay: &Layering, s: usize, target: usize, removed: &[bool]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; c.n()];
    let mut queue = VecDeque::new();
    for &u in lay.layer(s) {
        if !removed[u] {
            parent[u] = u;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        if lay.distance(u) == Some(target) {
            let mut path = vec![u];
            let mut cur = u;
            while parent[cur] != cur {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in c.neighbors(u) {
            if !removed[w] && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Builds the decomposition of the connected graph `c` rooted at `v`.
///
/// With `f = f_bound(t)` and BFS depth `q`, there are `max(1, ⌈q/f⌉)` bags.
/// Cut `j` separates `L_{(j-1)f+1}` from `L_{jf}`. Its endpoint set `S_j` is
/// exactly the adhesion between bags `j` and `j + 1`. Bag `j` is `S_{j-1}` and
/// `S_j` plus the vertices that join `v`'s side once `S_j` is removed.
pub fn build_path_decomposition(
    c: &Graph,
    x_neighbors: &VertexSet,
    v: usize,
    t: usize,
) -> Result<PathDecomposition> {
    if v >= c.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: c.n() });
    }
    let lay = bfs_layering(c, &VertexSet::from([v]))?;
    if !lay.unreachable.is_empty() {
        return Err(Error::NotConnected);
    }
    let f = f_bound(t);
    let q = lay.depth();
    let p = q.div_ceil(f).max(1);
    if p == 1 {
        return PathDecomposition::single(c, v);
    }

    let mut cutsets = Vec::with_capacity(p - 1);
    let mut seps = Vec::with_capacity(p - 1);
    for j in 1..p {
        let cut = cutset_in(c, &lay, x_neighbors, (j - 1) * f + 1, j * f, t)?;
        seps.push(endpoints(&cut));
        cutsets.push(cut);
    }

    // Vertices on v's side of each separator, then the increments between
    // consecutive separators.
    let mut bags = Vec::with_capacity(p);
    let mut assigned = VertexSet::new();
    for j in 0..p {
        let mut bag = if j > 0 {
            seps[j - 1].clone()
        } else {
            VertexSet::new()
        };
        let fresh: VertexSet = if j + 1 < p {
            let sep = &seps[j];
            c.reach_within(v, |u| !sep.contains(&u))
                .into_iter()
                .filter(|u| !assigned.contains(u))
                .collect()
        } else {
            c.vertices().filter(|u| !assigned.contains(u)).collect()
        };
        assigned.extend(fresh.iter().copied());
        bag.extend(fresh);
        if j + 1 < p {
            bag.extend(seps[j].iter().copied());
            assigned.extend(seps[j].iter().copied());
        }
        bags.push(bag);
    }

    let adhesions = bags.windows(2).map(|w| &w[0] & &w[1]).collect();
    let layer_windows = bags.iter().map(|b| window(&lay, b)).collect();
    Ok(PathDecomposition {
        root: v,
        bags,
        adhesions,
        layer_windows,
        cutsets,
    })
}

fn window(lay: &Layering, bag: &VertexSet) -> (usize, usize) {
    let d = bag.iter().map(|&u| lay.distance(u).unwrap());
    let (lo, hi) = d.fold((usize::MAX, 0), |(lo, hi), x| (lo.min(x), hi.max(x)));
    if lo == usize::MAX {
        (0, 0)
    } else {
        (lo, hi)
    }
}

/// Independent validity check. Returns every problem found; an empty list
/// means the decomposition covers `c`, is contiguous, and meets the adhesion
/// (`2t^2`), window (`2 f(t)` layers) and cut-size (`t^2`) bounds.
pub fn check_path_decomposition(c: &Graph, pd: &PathDecomposition, t: usize) -> Vec<String> {
    let mut problems = Vec::new();
    let n = c.n();
    if pd.bags.is_empty() {
        if n > 0 {
            problems.push("no bags".to_string());
        }
        return problems;
    }
    if pd.root >= n {
        problems.push(format!("root {} out of range", pd.root));
        return problems;
    }
    // distances recomputed here rather than trusted
    let mut dist = vec![usize::MAX; n];
    dist[pd.root] = 0;
    let mut queue = VecDeque::from([pd.root]);
    while let Some(u) = queue.pop_front() {
        for &w in c.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }

    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in pd.bags.iter().enumerate() {
        for &u in bag {
            if u >= n {
                problems.push(format!("bag {i} holds out-of-range vertex {u}"));
            } else {
                occurrences[u].push(i);
            }
        }
    }
    for (u, occ) in occurrences.iter().enumerate() {
        if occ.is_empty() {
            problems.push(format!("vertex {u} is in no bag"));
        } else if occ.last().unwrap() - occ[0] + 1 != occ.len() {
            problems.push(format!("bags holding vertex {u} are not contiguous"));
        }
    }
    for (a, b) in c.edges() {
        if !pd.bags.iter().any(|bag| bag.contains(&a) && bag.contains(&b)) {
            problems.push(format!("edge {a}-{b} is in no bag"));
        }
    }

    if pd.adhesions.len() + 1 != pd.bags.len() {
        problems.push("adhesion count does not match bag count".to_string());
    }
    for (i, pair) in pd.bags.windows(2).enumerate() {
        let actual = &pair[0] & &pair[1];
        if pd.adhesions.get(i) != Some(&actual) {
            problems.push(format!("adhesion {i} is recorded wrongly"));
        }
        if actual.len() > 2 * t * t {
            problems.push(format!(
                "adhesion {i} has {} > {} vertices",
                actual.len(),
                2 * t * t
            ));
        }
    }

    let limit = 2 * f_bound(t);
    for (i, bag) in pd.bags.iter().enumerate() {
        let layers = bag.iter().filter(|&&u| u < n).map(|&u| dist[u]);
        let (lo, hi) = layers.fold((usize::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)));
        if lo == usize::MAX {
            continue;
        }
        if hi == usize::MAX {
            problems.push(format!("bag {i} holds a vertex unreachable from the root"));
            continue;
        }
        if hi - lo + 1 > limit {
            problems.push(format!("bag {i} spans {} > {limit} layers", hi - lo + 1));
        }
        if pd.layer_windows.get(i) != Some(&(lo, hi)) {
            problems.push(format!("layer window of bag {i} is recorded wrongly"));
        }
    }

    for (i, cut) in pd.cutsets.iter().enumerate() {
        if cut.len() > t * t {
            problems.push(format!("cut {i} uses {} > {} edges", cut.len(), t * t));
        }
        if pd.adhesions.get(i) != Some(&endpoints(cut)) {
            problems.push(format!("adhesion {i} differs from its cut endpoints"));
        }
    }
    problems
}
