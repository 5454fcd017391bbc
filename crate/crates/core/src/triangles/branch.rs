use crate::detectors::{count_tc3_sets, find_short_hole, tc3_avoiding};
use crate::error::{ClassViolation, Result, ViolationKind};
use crate::graph::{Graph, VertexSet};
use crate::kernels::better;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BranchStats {
    /// Nodes that branched on a hole vertex.
    pub nodes: usize,
    pub leaves: usize,
    /// Largest number of take-`v` decisions on one root-to-leaf path.
    pub max_takes: usize,
}

#[derive(Clone, Debug)]
pub struct BranchOutcome {
    pub independent_set: VertexSet,
    pub stats: BranchStats,
    pub violations: Vec<ClassViolation>,
}

/// Branches on a vertex of a short hole while both a hole of length at most
/// `max_len` and an induced `tC3` exist, then hands each remaining graph to
/// `leaf`.
///
/// `leaf` receives an induced subgraph whose labels are ids of `g` and returns
/// a maximum independent set in its own ids. Branching is exhaustive, so the
/// result is exact whenever `leaf` is. The hole and measure guarantees that
/// only hold in class are checked at every node and reported as violations.
pub fn branch_short_holes<F>(g: &Graph, t: usize, max_len: usize, leaf: F) -> Result<BranchOutcome>
where
    F: FnMut(&Graph) -> Result<VertexSet>,
{
    assert!(max_len >= 4, "holes have length at least four");
    assert!(t >= 1, "t must be positive");
    let mut brancher = Brancher {
        t,
        max_len,
        leaf,
        stats: BranchStats::default(),
        violations: Vec::new(),
    };
    let root = g.clone().unlabeled();
    let independent_set = brancher.node(&root, None, 0)?;
    Ok(BranchOutcome {
        independent_set,
        stats: brancher.stats,
        violations: brancher.violations,
    })
}

struct Brancher<F> {
    t: usize,
    max_len: usize,
    leaf: F,
    stats: BranchStats,
    violations: Vec<ClassViolation>,
}

impl<F> Brancher<F>
where
    F: FnMut(&Graph) -> Result<VertexSet>,
{
    /// `parent` carries the measure before a take-`v` step and the taken vertex.
    fn node(&mut self, g: &Graph, parent: Option<(u64, usize)>, takes: usize) -> Result<VertexSet> {
        let count = count_tc3_sets(g, self.t);
        if let Some((mu, v)) = parent {
            let l = self.max_len as u64;
            if l * count.count > (l - 1) * mu {
                self.violations.push(ClassViolation::new(
                    ViolationKind::MeasureDecrease,
                    vec![VertexSet::from([v])],
                    format!("taking {v} left {} of {mu} triangle collections", count.count),
                ));
            }
        }
        let hole = if count.count > 0 {
            find_short_hole(g, self.max_len)
        } else {
            None
        };
        let Some(hole) = hole else {
            self.stats.leaves += 1;
            self.stats.max_takes = self.stats.max_takes.max(takes);
            let local = (self.leaf)(g)?;
            debug_assert!(g.is_independent(&local));
            return Ok(g.lift(&local));
        };
        self.stats.nodes += 1;

        let on_hole = hole.vertices();
        if let Some(tris) = tc3_avoiding(g, self.t, &g.closed_neighborhood(&on_hole)) {
            let mut witness = vec![g.lift(&on_hole)];
            witness.extend(tris.iter().map(|tr| g.lift(tr)));
            self.violations.push(ClassViolation::new(
                ViolationKind::HoleMissesTriangles,
                witness,
                "a short hole is far from some triangle collection",
            ));
        }
        let v = *on_hole
            .iter()
            .max_by(|&&a, &&b| count.hits[a].cmp(&count.hits[b]).then(b.cmp(&a)))
            .expect("holes are non-empty");

        let taken = g.without(&g.closed_neighborhood_of(v));
        let mut with = self.node(&taken, Some((count.count, g.label(v))), takes + 1)?;
        with.insert(g.label(v));
        let without = self.node(&g.without(&VertexSet::from([v])), None, takes)?;
        Ok(if better(&without, &with) { without } else { with })
    }
}
