//! Choice of the induced matching `X` whose removal leaves a largest
//! possible component.

use crate::detectors::induced_matchings;
use crate::error::{Error, Result};
use crate::graph::{components_within, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSelection {
    pub x: VertexSet,
    pub matching: Vec<(usize, usize)>,
    pub largest_component_size: usize,
    /// Components of `G - X`, ordered by smallest vertex.
    pub components: Vec<VertexSet>,
}

/// Over every induced `tK2`, maximizes the largest component of `G - X`;
/// ties go to the lexicographically least `X`. `None` if `g` has no induced
/// `tK2`.
pub fn select_x(g: &Graph, t: usize) -> Result<Option<CutSelection>> {
    if !g.is_connected_subset(&g.vertex_set()) {
        return Err(Error::NotConnected);
    }
    let mut best: Option<CutSelection> = None;
    for matching in induced_matchings(g, t) {
        let x: VertexSet = matching.iter().flat_map(|&(a, b)| [a, b]).collect();
        let rest: VertexSet = g.vertices().filter(|v| !x.contains(v)).collect();
        let components = components_within(g, &rest);
        let largest = components.iter().map(|c| c.len()).max().unwrap_or(0);
        let wins = match &best {
            None => true,
            Some(b) => {
                largest > b.largest_component_size
                    || (largest == b.largest_component_size && x.iter().lt(b.x.iter()))
            }
        };
        if wins {
            best = Some(CutSelection {
                x,
                matching,
                largest_component_size: largest,
                components,
            });
        }
    }
    Ok(best)
}

/// One failure of the structure a maximizing `X` forces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCounterexample {
    pub edge: (usize, usize),
    /// Component of `G - X` holding the edge.
    pub component: VertexSet,
    /// `None` when deleting the edge's endpoints leaves the component
    /// connected; otherwise the piece with no vertex in `N(X)`.
    pub stranded: Option<VertexSet>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CutSelectionReport {
    pub edges_checked: usize,
    pub counterexamples: Vec<CutCounterexample>,
}

impl CutSelectionReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// For each edge `e` of `G - X` with no endpoint in `N(X)`, checks that
/// deleting both endpoints splits its component `C`, and that every piece
/// still meets `N(X)`.
pub fn verify_cut_selection(g: &Graph, sel: &CutSelection) -> CutSelectionReport {
    let nx = g.open_neighborhood(&sel.x);
    let mut report = CutSelectionReport::default();
    for comp in &sel.components {
        for &a in comp {
            for &b in g.neighbors(a) {
                if b <= a || !comp.contains(&b) || nx.contains(&a) || nx.contains(&b) {
                    continue;
                }
                report.edges_checked += 1;
                let mut rest = comp.clone();
                rest.remove(&a);
                rest.remove(&b);
                let pieces = components_within(g, &rest);
                let stranded = pieces.iter().find(|p| p.is_disjoint(&nx)).cloned();
                if pieces.len() < 2 || stranded.is_some() {
                    report.counterexamples.push(CutCounterexample {
                        edge: (a, b),
                        component: comp.clone(),
                        stranded: if pieces.len() < 2 { None } else { stranded },
                    });
                }
            }
        }
    }
    report
}
