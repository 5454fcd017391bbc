//! Brute-force induced-minor containment for small hosts and patterns.
//!
//! The search places the pattern one connected component at a time, each in
//! the part of the host that does not touch earlier placements.
//!
//! * A cycle component `C_k` is modeled by an induced cycle of length at
//!   least `k`, cut into `k` arcs.
//! * Otherwise, some pattern vertices can be assumed to have one-vertex branch
//!   sets. A vertex of degree at most one always can. A degree-two vertex `u`
//!   can too, if it has a neighbor `w` (not yet reduced) with
//!   `N(u) - w ⊆ N(w)`. The surplus of `u`'s branch set then moves into `w`'s.
//!   The remaining branch sets are enumerated as connected subsets. The very
//!   last one is read off from a connected component, since any larger
//!   connected set in the admissible region works just as well.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, VertexSet};

use super::witness::{PatternWitness, WitnessKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorOracleConfig {
    pub max_host: usize,
    pub max_pattern: usize,
}

impl Default for MinorOracleConfig {
    fn default() -> Self {
        Self {
            max_host: 16,
            max_pattern: 8,
        }
    }
}

/// Returns an induced-minor model of `h` in `g`, or `None` if there is none.
pub fn has_induced_minor(g: &Graph, h: &Graph, cfg: &MinorOracleConfig) -> Result<Option<PatternWitness>> {
    if g.n() > cfg.max_host.min(64) {
        return Err(Error::SizeCap {
            what: "induced-minor host",
            size: g.n(),
            cap: cfg.max_host.min(64),
        });
    }
    if h.n() > cfg.max_pattern {
        return Err(Error::SizeCap {
            what: "induced-minor pattern",
            size: h.n(),
            cap: cfg.max_pattern,
        });
    }
    if h.n() > g.n() {
        return Ok(None);
    }
    let search = Search {
        adj: g.adjacency_masks(),
        h,
        parts: plan(h),
    };
    let mut model = vec![0u64; h.n()];
    let full = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let found = search.place(0, full, 0, &mut model).is_break();
    Ok(found.then(|| {
        let parts = model.iter().map(|&m| bits(m).collect()).collect();
        PatternWitness::new(WitnessKind::InducedMinorModel, parts)
    }))
}

enum Part {
    /// Pattern vertices in cyclic order; `twin` marks an identical cycle just
    /// before this one, for symmetry breaking.
    Cycle { order: Vec<usize>, twin: bool },
    Generic {
        /// Slots in placement order: singletons first, then free sets.
        slots: Vec<(usize, Slot)>,
        /// Whether the final free slot may be read off from a component.
        shortcut: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Single,
    Free,
}

fn plan(h: &Graph) -> Vec<Part> {
    let mut cycles = Vec::new();
    let mut generic = Vec::new();
    for comp in connected_components(h) {
        let is_cycle = comp.len() >= 3 && comp.iter().all(|&v| h.degree(v) == 2);
        if is_cycle {
            cycles.push(cycle_order(h, &comp));
        } else {
            generic.push(generic_slots(h, &comp));
        }
    }
    cycles.sort_by_key(|c| std::cmp::Reverse(c.len()));
    // The component with the most free slots goes last, where it benefits
    // from the component shortcut.
    generic.sort_by_key(|slots| slots.iter().filter(|s| s.1 == Slot::Free).count());
    let mut parts = Vec::new();
    for (i, order) in cycles.iter().enumerate() {
        let twin = i > 0 && cycles[i - 1].len() == order.len();
        parts.push(Part::Cycle {
            order: order.clone(),
            twin,
        });
    }
    let last = generic.len();
    for (i, slots) in generic.into_iter().enumerate() {
        parts.push(Part::Generic {
            slots,
            shortcut: i + 1 == last,
        });
    }
    parts
}

fn cycle_order(h: &Graph, comp: &VertexSet) -> Vec<usize> {
    let start = *comp.iter().next().unwrap();
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = h.neighbors(start)[0];
    while cur != start {
        order.push(cur);
        let next = h.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    order
}

fn generic_slots(h: &Graph, comp: &VertexSet) -> Vec<(usize, Slot)> {
    let mut single = VertexSet::new();
    let mut single_order = Vec::new();
    loop {
        let next = comp.iter().copied().find(|&u| {
            if single.contains(&u) {
                return false;
            }
            match h.degree(u) {
                0 | 1 => true,
                2 => h.neighbors(u).iter().any(|&w| {
                    !single.contains(&w) && h.neighbors(u).iter().all(|&x| x == w || h.has_edge(x, w))
                }),
                _ => false,
            }
        });
        match next {
            Some(u) => {
                single.insert(u);
                single_order.push(u);
            }
            None => break,
        }
    }
    let mut free: Vec<usize> = comp.iter().copied().filter(|u| !single.contains(u)).collect();
    // highest degree last, smallest id among ties
    free.sort_by(|&a, &b| h.degree(a).cmp(&h.degree(b)).then(b.cmp(&a)));
    single_order
        .into_iter()
        .map(|u| (u, Slot::Single))
        .chain(free.into_iter().map(|u| (u, Slot::Free)))
        .collect()
}

struct Search<'a> {
    adj: Vec<u64>,
    h: &'a Graph,
    parts: Vec<Part>,
}

impl Search<'_> {
    fn closed(&self, set: u64) -> u64 {
        bits(set).fold(set, |acc, v| acc | self.adj[v])
    }

    fn touches(&self, a: u64, b: u64) -> bool {
        a & b != 0 || bits(a).any(|v| self.adj[v] & b != 0)
    }

    fn place(&self, part: usize, region: u64, prev_min: usize, model: &mut [u64]) -> ControlFlow<()> {
        let Some(p) = self.parts.get(part) else {
            return ControlFlow::Break(());
        };
        match p {
            Part::Cycle { order, twin } => {
                let k = order.len();
                let floor = if *twin { prev_min + 1 } else { 0 };
                let adj = &self.adj;
                for_each_induced_cycle(adj, region, k, floor, |cycle| {
                    let mask = cycle.iter().fold(0u64, |m, &v| m | 1 << v);
                    for (i, &hv) in order.iter().enumerate() {
                        model[hv] = if i + 1 < k {
                            1 << cycle[i]
                        } else {
                            cycle[k - 1..].iter().fold(0u64, |m, &v| m | 1 << v)
                        };
                    }
                    self.place(part + 1, region & !self.closed(mask), cycle[0], model)
                })
            }
            Part::Generic { slots, shortcut } => self.fill(part, slots, *shortcut, 0, region, 0, model),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        &self,
        part: usize,
        slots: &[(usize, Slot)],
        shortcut: bool,
        slot: usize,
        region: u64,
        used: u64,
        model: &mut [u64],
    ) -> ControlFlow<()> {
        if slot == slots.len() {
            return self.place(part + 1, region & !self.closed(used), 0, model);
        }
        let (hv, kind) = slots[slot];
        let mut forbidden = used;
        let mut required = Vec::new();
        for &(other, _) in &slots[..slot] {
            if self.h.has_edge(hv, other) {
                required.push(model[other]);
            } else {
                forbidden |= self.closed(model[other]);
            }
        }
        let allowed = region & !forbidden;
        let ok = |set: u64| required.iter().all(|&r| self.touches(set, r));
        match kind {
            Slot::Single => {
                for x in bits(allowed) {
                    if ok(1 << x) {
                        model[hv] = 1 << x;
                        self.fill(part, slots, shortcut, slot + 1, region, used | 1 << x, model)?;
                    }
                }
                ControlFlow::Continue(())
            }
            Slot::Free if shortcut && slot + 1 == slots.len() => {
                let mut rest = allowed;
                while rest != 0 {
                    let comp = reach(&self.adj, rest.trailing_zeros() as usize, allowed);
                    rest &= !comp;
                    if ok(comp) {
                        model[hv] = comp;
                        self.fill(part, slots, shortcut, slot + 1, region, used | comp, model)?;
                    }
                }
                ControlFlow::Continue(())
            }
            Slot::Free => for_each_connected_subset(&self.adj, allowed, |set| {
                if ok(set) {
                    model[hv] = set;
                    self.fill(part, slots, shortcut, slot + 1, region, used | set, model)
                } else {
                    ControlFlow::Continue(())
                }
            }),
        }
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn reach(adj: &[u64], start: usize, allowed: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let next = bits(frontier).fold(0, |acc, v| acc | adj[v]) & allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Every non-empty connected subset of `allowed`, each exactly once.
fn for_each_connected_subset<F>(adj: &[u64], allowed: u64, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(u64) -> ControlFlow<()>,
{
    fn grow<F: FnMut(u64) -> ControlFlow<()>>(
        adj: &[u64],
        allowed: u64,
        set: u64,
        mut ext: u64,
        mut excluded: u64,
        visit: &mut F,
    ) -> ControlFlow<()> {
        visit(set)?;
        while ext != 0 {
            let v = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let child = set | 1 << v;
            let child_ext = (ext | adj[v]) & allowed & !child & !excluded;
            grow(adj, allowed, child, child_ext, excluded, visit)?;
            excluded |= 1 << v;
        }
        ControlFlow::Continue(())
    }
    let mut below = 0u64;
    for root in bits(allowed) {
        below |= 1 << root;
        let ext = adj[root] & allowed & !below;
        grow(adj, allowed, 1 << root, ext, below, &mut visit)?;
    }
    ControlFlow::Continue(())
}

/// Every induced cycle of length at least `min_len` inside `region` whose
/// smallest vertex is at least `floor`, as a vertex sequence starting at the
/// smallest vertex.
fn for_each_induced_cycle<F>(
    adj: &[u64],
    region: u64,
    min_len: usize,
    floor: usize,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn extend<F: FnMut(&[usize]) -> ControlFlow<()>>(
        adj: &[u64],
        allowed: u64,
        min_len: usize,
        path: &mut Vec<usize>,
        inner: u64,
        visit: &mut F,
    ) -> ControlFlow<()> {
        let start = path[0];
        let last = *path.last().unwrap();
        for x in bits(adj[last] & allowed) {
            if path.contains(&x) || adj[x] & inner != 0 {
                continue;
            }
            path.push(x);
            if adj[x] >> start & 1 == 1 {
                // closes a cycle; count each orientation once
                if path.len() >= 3 && path.len() >= min_len && path[1] < x {
                    visit(path)?;
                }
            } else {
                let inner = inner | 1 << last;
                extend(adj, allowed, min_len, path, inner, visit)?;
            }
            path.pop();
        }
        ControlFlow::Continue(())
    }
    for start in bits(region).filter(|&s| s >= floor) {
        let allowed = region & !((2u64 << start) - 1);
        let mut path = vec![start];
        for first in bits(adj[start] & allowed) {
            path.push(first);
            extend(adj, allowed, min_len, &mut path, 0, &mut visit)?;
            path.pop();
        }
    }
    ControlFlow::Continue(())
}
