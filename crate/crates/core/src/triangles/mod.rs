//! Maximum independent set in graphs with no `tC3 ⊎ C4` induced minor.
//!
//! Short holes are branched away first. At each remaining leaf either there
//! are no `t + 2` pairwise non-touching triangles, and a pluggable solver for
//! graphs with few independent cycles takes over, or such triangles exist and
//! their pairwise separators and common neighborhoods are cliques whose
//! removal leaves a chordal graph.

mod branch;
mod separator;

pub use branch::{branch_short_holes, BranchOutcome, BranchStats};
pub use separator::{minimal_separator, separates, SeparatorFamily};

use crate::detectors::find_triangle_collection;
use crate::error::{ClassViolation, Error, Result, ViolationKind};
use crate::graph::{Graph, VertexSet};
use crate::kernels::{better, mis_chordal, mis_oracle_with, OracleConfig};

/// Solver for graphs without `cycles` pairwise independent cycles.
pub trait CyclesFallback {
    fn name(&self) -> &'static str;
    fn solve(&self, g: &Graph, cycles: usize) -> Result<VertexSet>;
}

/// Exact search, limited by its cap. Ignores the cycle bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleFallback {
    pub oracle: OracleConfig,
}

impl Default for OracleFallback {
    fn default() -> Self {
        Self {
            oracle: OracleConfig { cap: 64 },
        }
    }
}

impl CyclesFallback for OracleFallback {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn solve(&self, g: &Graph, _cycles: usize) -> Result<VertexSet> {
        mis_oracle_with(g, &self.oracle)
    }
}

pub fn default_fallback(g: &Graph, cycles: usize) -> Result<VertexSet> {
    OracleFallback::default().solve(g, cycles)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleConfig {
    /// Longest hole the branching step removes.
    pub max_len: usize,
}

impl Default for TriangleConfig {
    fn default() -> Self {
        Self { max_len: 6 }
    }
}

/// Leaf outcomes and the structural checks run there.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LeafStats {
    /// Leaves without `t + 2` independent triangles.
    pub fallback: usize,
    /// Leaves solved through the separator family.
    pub separator: usize,
    /// Leaves where a check failed and the fallback ran instead.
    pub rescued: usize,
    pub clique_checks: usize,
    pub chordality_checks: usize,
}

#[derive(Clone, Debug)]
pub struct TriangleSolution {
    pub independent_set: VertexSet,
    pub branch: BranchStats,
    pub leaves: LeafStats,
    pub fallback: &'static str,
    pub violations: Vec<ClassViolation>,
}

impl TriangleSolution {
    pub fn verified(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn solve_triangles_c4(g: &Graph, t: usize, fallback: &dyn CyclesFallback) -> Result<TriangleSolution> {
    solve_triangles_c4_with(g, t, fallback, &TriangleConfig::default())
}

pub fn solve_triangles_c4_with(
    g: &Graph,
    t: usize,
    fallback: &dyn CyclesFallback,
    cfg: &TriangleConfig,
) -> Result<TriangleSolution> {
    let mut leaves = LeafStats::default();
    let mut leaf_violations = Vec::new();
    let outcome = branch_short_holes(g, t, cfg.max_len, |h| {
        solve_leaf(h, t, fallback, &mut leaves, &mut leaf_violations)
    })?;
    let mut violations = outcome.violations;
    violations.extend(leaf_violations);
    Ok(TriangleSolution {
        independent_set: outcome.independent_set,
        branch: outcome.stats,
        leaves,
        fallback: fallback.name(),
        violations,
    })
}

/// `h` has no short hole or no `tC3`. Violations are recorded in the ids of
/// the graph the branching started from.
fn solve_leaf(
    h: &Graph,
    t: usize,
    fallback: &dyn CyclesFallback,
    stats: &mut LeafStats,
    violations: &mut Vec<ClassViolation>,
) -> Result<VertexSet> {
    let Some(collection) = find_triangle_collection(h, t + 2) else {
        stats.fallback += 1;
        return fallback.solve(h, t + 2);
    };
    let family = SeparatorFamily::build(h, collection.parts)?;
    stats.clique_checks += family.cliques().count();
    let broken = family.clique_violations(h);
    if !broken.is_empty() {
        violations.extend(broken.into_iter().map(|v| v.relabel(|u| h.label(u))));
        stats.rescued += 1;
        return fallback.solve(h, t + 2);
    }

    let u = family.union();
    let u_list: Vec<usize> = u.iter().copied().collect();
    let mut best: Option<VertexSet> = None;
    let mut chosen = VertexSet::new();
    let mut failure = None;
    for_each_independent_subset(h, &u_list, 0, &mut chosen, &mut |s| {
        let mut gone = h.closed_neighborhood(s);
        gone.extend(u.iter().copied());
        let keep: VertexSet = h.vertices().filter(|v| !gone.contains(v)).collect();
        let ids: Vec<usize> = keep.iter().copied().collect();
        let rest = h.induced_subgraph(&keep).expect("subset of h");
        stats.chordality_checks += 1;
        match mis_chordal(&rest) {
            Ok(local) => {
                let mut total = s.clone();
                total.extend(local.into_iter().map(|i| ids[i]));
                if best.as_ref().is_none_or(|b| better(&total, b)) {
                    best = Some(total);
                }
                true
            }
            Err(Error::NotChordal { hole }) => {
                failure = Some(ClassViolation::new(
                    ViolationKind::RemainderNotChordal,
                    vec![hole.iter().map(|&i| h.label(ids[i])).collect(), h.lift(s)],
                    "graph outside the separator cliques has a hole",
                ));
                false
            }
            Err(e) => {
                failure = Some(ClassViolation::new(
                    ViolationKind::RemainderNotChordal,
                    Vec::new(),
                    e.to_string(),
                ));
                false
            }
        }
    });
    if let Some(v) = failure {
        violations.push(v);
        stats.rescued += 1;
        return fallback.solve(h, t + 2);
    }
    stats.separator += 1;
    Ok(best.unwrap_or_default())
}

/// Visits every independent subset of `items` (sorted); stops early when the
/// visitor returns `false`.
fn for_each_independent_subset(
    g: &Graph,
    items: &[usize],
    from: usize,
    chosen: &mut VertexSet,
    visit: &mut dyn FnMut(&VertexSet) -> bool,
) -> bool {
    if !visit(chosen) {
        return false;
    }
    for i in from..items.len() {
        let v = items[i];
        if g.neighbors(v).iter().any(|w| chosen.contains(w)) {
            continue;
        }
        chosen.insert(v);
        let go_on = for_each_independent_subset(g, items, i + 1, chosen, visit);
        chosen.remove(&v);
        if !go_on {
            return false;
        }
    }
    true
}
