//! Maximum independent set in graphs with no `K1 + tK2` induced minor.
//!
//! Pipeline per connected component of the degree-one-reduced graph:
//! 1. pick an induced `tK2` `X` maximizing the largest component of `G - X`
//!    (with none, list all maximal independent sets instead);
//! 2. build a path decomposition of every component of `G - X`;
//! 3. guess which independent part `X'` of `X` the solution keeps, and run
//!    the bag DP on each component minus `N(X')`.
//!
//! Failed structural assertions do not abort the solve. They are collected as
//! class violations, and the affected component falls back to a simpler exact
//! method where one applies.

mod decomposition;
mod dp;
mod layers;
mod selection;

use std::collections::HashMap;

pub use decomposition::{
    build_path_decomposition, check_path_decomposition, f_bound, layer_cutset, PathDecomposition,
};
pub use layers::mis_bounded_layers;
pub use selection::{select_x, verify_cut_selection, CutCounterexample, CutSelection, CutSelectionReport};

use crate::error::{ClassViolation, Error, Result, ViolationKind};
use crate::graph::{bfs_layering, connected_components, reduce_degree_one, Graph, VertexSet};
use crate::kernels::{
    alekseev_cap, better, enumerate_maximal_independent_sets, mis_oracle_with, OracleConfig,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FriendshipConfig {
    /// Size limit for the exact fallback after a class violation.
    pub oracle: OracleConfig,
}

/// How a component of the reduced graph was solved.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentMethod {
    /// No induced `tK2`: best of all maximal independent sets.
    Enumeration,
    /// Independent part of `X` guessed, bag DP per component of `G - X`.
    Decomposition,
    /// Exhaustive search after a violation.
    OracleFallback,
    /// Minimum-degree greedy after a violation on a component too large for the oracle.
    GreedyFallback,
}

/// A component of `G - X` with its decomposition, in the component's own ids.
#[derive(Clone, Debug)]
pub struct PieceTrace {
    pub graph: Graph,
    pub x_neighbors: VertexSet,
    pub decomposition: PathDecomposition,
    /// Whether building the decomposition failed and one bag was used instead.
    pub single_bag_fallback: bool,
}

#[derive(Clone, Debug)]
pub struct ComponentTrace {
    /// The reduced component; its labels map into the input graph.
    pub graph: Graph,
    pub selection: Option<CutSelection>,
    pub pieces: Vec<PieceTrace>,
    pub method: ComponentMethod,
}

#[derive(Clone, Debug)]
pub struct FriendshipSolution {
    pub independent_set: VertexSet,
    /// Vertices taken by the degree-one reduction.
    pub forced: VertexSet,
    pub components: Vec<ComponentTrace>,
    pub violations: Vec<ClassViolation>,
}

impl FriendshipSolution {
    /// Whether every structural assertion held, so the answer is certified
    /// optimal for in-class inputs.
    pub fn verified(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn solve_friendship(g: &Graph, t: usize) -> FriendshipSolution {
    solve_friendship_with(g, t, &FriendshipConfig::default())
}

pub fn solve_friendship_with(g: &Graph, t: usize, cfg: &FriendshipConfig) -> FriendshipSolution {
    assert!(t >= 1, "t must be positive");
    let (reduced, forced) = reduce_degree_one(g);
    let mut solution = FriendshipSolution {
        independent_set: forced.clone(),
        forced,
        components: Vec::new(),
        violations: Vec::new(),
    };
    for part in connected_components(&reduced) {
        let comp = reduced.induced_subgraph(&part).expect("component is in range");
        let mut violations = Vec::new();
        let (local, trace) = solve_component(&comp, t, cfg, &mut violations);
        solution
            .independent_set
            .extend(local.iter().map(|&v| comp.label(v)));
        for v in violations {
            solution.violations.push(v.relabel(|u| comp.label(u)));
        }
        solution.components.push(trace);
    }
    solution
}

fn solve_component(
    comp: &Graph,
    t: usize,
    cfg: &FriendshipConfig,
    violations: &mut Vec<ClassViolation>,
) -> (VertexSet, ComponentTrace) {
    let mut trace = ComponentTrace {
        graph: comp.clone(),
        selection: None,
        pieces: Vec::new(),
        method: ComponentMethod::Decomposition,
    };
    let attempt = match select_x(comp, t) {
        Ok(None) => {
            trace.method = ComponentMethod::Enumeration;
            best_maximal_set(comp, t)
        }
        Ok(Some(sel)) => {
            let result = solve_with_selection(comp, &sel, t, &mut trace, violations);
            trace.selection = Some(sel);
            result
        }
        Err(e) => Err(e),
    };
    match attempt {
        Ok(set) => (set, trace),
        Err(err) => {
            violations.push(as_violation(err));
            let (set, method) = fallback(comp, cfg);
            trace.method = method;
            (set, trace)
        }
    }
}

fn solve_with_selection(
    comp: &Graph,
    sel: &CutSelection,
    t: usize,
    trace: &mut ComponentTrace,
    violations: &mut Vec<ClassViolation>,
) -> Result<VertexSet> {
    let nx = comp.open_neighborhood(&sel.x);
    let mut pieces = Vec::new();
    for part in &sel.components {
        let graph = comp.induced_subgraph(part)?;
        let ids: Vec<usize> = part.iter().copied().collect();
        let x_neighbors: VertexSet = (0..ids.len()).filter(|&i| nx.contains(&ids[i])).collect();
        let root = *x_neighbors
            .iter()
            .next()
            .expect("every component of G - X touches X in a connected graph");
        let (decomposition, single_bag_fallback) =
            match build_path_decomposition(&graph, &x_neighbors, root, t) {
                Ok(pd) => (pd, false),
                Err(err @ Error::ClassViolation(_)) => {
                    violations.push(as_violation(err).relabel(|u| ids[u]));
                    (PathDecomposition::single(&graph, root)?, true)
                }
                Err(e) => return Err(e),
            };
        let lay = bfs_layering(&graph, &VertexSet::from([root]))?;
        let dist: Vec<usize> = graph.vertices().map(|u| lay.distance(u).unwrap()).collect();
        pieces.push((ids, dist));
        trace.pieces.push(PieceTrace {
            graph,
            x_neighbors,
            decomposition,
            single_bag_fallback,
        });
    }

    let x: Vec<usize> = sel.x.iter().copied().collect();
    let mut best: Option<VertexSet> = None;
    // DP results per piece, keyed by the deleted neighborhood of X'.
    let mut memo: Vec<HashMap<VertexSet, VertexSet>> = vec![HashMap::new(); pieces.len()];
    for mask in 0u32..1 << x.len() {
        let guess: VertexSet = (0..x.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| x[i])
            .collect();
        if !comp.is_independent(&guess) {
            continue;
        }
        let blocked = comp.open_neighborhood(&guess);
        let mut total = guess.clone();
        for (k, (ids, dist)) in pieces.iter().enumerate() {
            let removed: VertexSet = (0..ids.len()).filter(|&i| blocked.contains(&ids[i])).collect();
            let local = match memo[k].get(&removed) {
                Some(found) => found.clone(),
                None => {
                    let piece = &trace.pieces[k];
                    let found =
                        dp::solve_on_decomposition(&piece.graph, &piece.decomposition, dist, &removed, t)?;
                    memo[k].insert(removed, found.clone());
                    found
                }
            };
            total.extend(local.into_iter().map(|i| ids[i]));
        }
        if best.as_ref().is_none_or(|b| better(&total, b)) {
            best = Some(total);
        }
    }
    Ok(best.unwrap_or_default())
}

fn best_maximal_set(comp: &Graph, t: usize) -> Result<VertexSet> {
    let cap = alekseev_cap(comp.n(), t);
    let list = enumerate_maximal_independent_sets(comp, cap).map_err(|e| match e {
        Error::CapExceeded { cap } => Error::ClassViolation(ClassViolation::new(
            ViolationKind::LayerEnumeration,
            vec![comp.vertex_set()],
            format!(
                "more than {} maximal independent sets without an induced tK2",
                cap - 1
            ),
        )),
        other => other,
    })?;
    Ok(list
        .into_iter()
        .reduce(|a, b| if better(&b, &a) { b } else { a })
        .unwrap_or_default())
}

fn as_violation(err: Error) -> ClassViolation {
    match err {
        Error::ClassViolation(v) => v,
        other => ClassViolation::new(ViolationKind::CutSelection, Vec::new(), other.to_string()),
    }
}

fn fallback(comp: &Graph, cfg: &FriendshipConfig) -> (VertexSet, ComponentMethod) {
    match mis_oracle_with(comp, &cfg.oracle) {
        Ok(set) => (set, ComponentMethod::OracleFallback),
        Err(_) => (greedy(comp), ComponentMethod::GreedyFallback),
    }
}

fn greedy(g: &Graph) -> VertexSet {
    let mut alive = g.vertex_set();
    let mut set = VertexSet::new();
    while let Some(&v) = alive
        .iter()
        .min_by_key(|&&v| g.neighbors(v).iter().filter(|w| alive.contains(w)).count())
    {
        set.insert(v);
        alive.remove(&v);
        for w in g.neighbors(v) {
            alive.remove(w);
        }
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detectors::{has_induced_minor, MinorOracleConfig};
    use crate::graph::families::*;
    use crate::kernels::mis_oracle;

    #[test]
    fn examples() {
        let s = solve_friendship(&path(5), 1);
        assert_eq!(s.independent_set.len(), 3);
        assert!(s.verified());
        assert_eq!(
            solve_friendship(&Graph::new(6), 2).independent_set,
            (0..6).collect()
        );
    }

    #[test]
    fn random_trees_match_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..40 {
            let n = rng.gen_range(1..=20);
            let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let s = solve_friendship(&g, 1);
            assert!(g.is_independent(&s.independent_set));
            assert_eq!(s.independent_set.len(), mis_oracle(&g).unwrap().len());
            assert!(s.verified());
        }
    }

    #[test]
    fn small_in_class_graphs_match_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let h = friendship(2);
        let cfg = MinorOracleConfig::default();
        let mut done = 0;
        while done < 25 {
            let n = rng.gen_range(4..=12);
            let p = rng.gen_range(0.1..0.5);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if has_induced_minor(&g, &h, &cfg).unwrap().is_some() {
                continue;
            }
            let s = solve_friendship(&g, 2);
            assert!(g.is_independent(&s.independent_set));
            assert_eq!(s.independent_set.len(), mis_oracle(&g).unwrap().len());
            assert!(s.verified(), "{:?}", s.violations);
            done += 1;
        }
    }

    #[test]
    fn long_cycle_uses_several_bags() {
        let g = cycle(300);
        let s = solve_friendship(&g, 2);
        assert_eq!(s.independent_set.len(), 150);
        assert!(g.is_independent(&s.independent_set));
        assert!(s.verified());
        let comp = &s.components[0];
        assert_eq!(
            comp.selection.as_ref().unwrap().x,
            [0, 1, 3, 4].into_iter().collect()
        );
        let longest = comp.pieces.iter().map(|p| p.decomposition.len()).max().unwrap();
        assert_eq!(longest, 3);
        for piece in &comp.pieces {
            assert!(check_path_decomposition(&piece.graph, &piece.decomposition, 2).is_empty());
        }
    }

    #[test]
    fn out_of_class_input_still_returns_an_independent_set() {
        // K1 + 2K2 itself contains the pattern; t = 1 sees a triangle-rich graph
        for (g, t) in [
            (friendship(2), 1),
            (petersen(), 1),
            (complete(1).join(&cycle(8)), 2),
        ] {
            let s = solve_friendship(&g, t);
            assert!(g.is_independent(&s.independent_set));
            assert_eq!(s.independent_set.len(), mis_oracle(&g).unwrap().len());
        }
    }
}
