use serde::Serialize;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// `t` disjoint edges with no other edges among their endpoints.
    InducedMatching,
    /// Pairwise non-touching triangles.
    TriangleCollection,
    /// An induced cycle of length at least four.
    Hole,
    /// Branch sets of an induced-minor model, one per pattern vertex.
    InducedMinorModel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternWitness {
    pub kind: WitnessKind,
    pub parts: Vec<VertexSet>,
    /// Cyclic vertex order, for holes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
}

impl PatternWitness {
    pub fn new(kind: WitnessKind, parts: Vec<VertexSet>) -> Self {
        Self {
            kind,
            parts,
            cycle: None,
        }
    }

    pub fn hole(order: Vec<usize>) -> Self {
        Self {
            kind: WitnessKind::Hole,
            parts: vec![order.iter().copied().collect()],
            cycle: Some(order),
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.parts.iter().flatten().copied().collect()
    }

    /// Checks the witness against its own invariant. Induced-minor models
    /// need the pattern; use [`PatternWitness::check_model`] for those.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let in_range = self.parts.iter().flatten().all(|&v| v < g.n());
        if !in_range {
            return Err("vertex out of range".into());
        }
        match self.kind {
            WitnessKind::InducedMatching => {
                for part in &self.parts {
                    let list: Vec<usize> = part.iter().copied().collect();
                    if list.len() != 2 || !g.has_edge(list[0], list[1]) {
                        return Err(format!("{part:?} is not an edge"));
                    }
                }
                pairwise_apart(g, &self.parts)
            }
            WitnessKind::TriangleCollection => {
                for part in &self.parts {
                    if part.len() != 3 || !g.is_clique(part) {
                        return Err(format!("{part:?} is not a triangle"));
                    }
                }
                pairwise_apart(g, &self.parts)
            }
            WitnessKind::Hole => {
                let order = self.cycle.as_ref().ok_or("hole without cyclic order")?;
                check_hole(g, order)
            }
            WitnessKind::InducedMinorModel => Err("model needs a pattern graph".into()),
        }
    }

    /// Checks an induced-minor model of `h` in `g`: disjoint connected
    /// branch sets that touch exactly along the edges of `h`.
    pub fn check_model(&self, g: &Graph, h: &Graph) -> Result<(), String> {
        if self.kind != WitnessKind::InducedMinorModel {
            return Err("not a model".into());
        }
        if self.parts.len() != h.n() {
            return Err(format!(
                "{} branch sets for {} pattern vertices",
                self.parts.len(),
                h.n()
            ));
        }
        for (i, part) in self.parts.iter().enumerate() {
            if part.iter().any(|&v| v >= g.n()) {
                return Err("vertex out of range".into());
            }
            if !g.is_connected_subset(part) {
                return Err(format!("branch set {i} is empty or disconnected"));
            }
        }
        for i in 0..h.n() {
            for j in i + 1..h.n() {
                let (a, b) = (&self.parts[i], &self.parts[j]);
                if !a.is_disjoint(b) {
                    return Err(format!("branch sets {i} and {j} intersect"));
                }
                if g.touch(a, b) != h.has_edge(i, j) {
                    return Err(format!("touch pattern wrong between {i} and {j}"));
                }
            }
        }
        Ok(())
    }
}

fn pairwise_apart(g: &Graph, parts: &[VertexSet]) -> Result<(), String> {
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            if g.touch(a, b) {
                return Err(format!("{a:?} and {b:?} touch"));
            }
        }
    }
    Ok(())
}

/// An induced cycle of length at least four, given in cyclic order.
pub fn check_hole(g: &Graph, order: &[usize]) -> Result<(), String> {
    let k = order.len();
    if k < 4 {
        return Err(format!("cycle of length {k} is not a hole"));
    }
    let distinct: VertexSet = order.iter().copied().collect();
    if distinct.len() != k || order.iter().any(|&v| v >= g.n()) {
        return Err("repeated or out-of-range vertex".into());
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(order[i], order[j]) != consecutive {
                return Err(format!("bad adjacency between {} and {}", order[i], order[j]));
            }
        }
    }
    Ok(())
}
