use std::collections::{BTreeMap, VecDeque};

use crate::error::{ClassViolation, Error, Result, ViolationKind};
use crate::graph::{Graph, VertexSet};

/// A minimal `(a, b)`-separator in `g - forbidden`.
///
/// Starts from the neighborhood of everything `a` reaches while avoiding
/// `N[b]`, then drops vertices one at a time in increasing order while the
/// rest still separates. Separation is monotone under supersets, so a single
/// pass ends at a minimal separator.
pub fn minimal_separator(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    forbidden: &VertexSet,
) -> Result<VertexSet> {
    if let Some(&v) = a
        .iter()
        .chain(b.iter())
        .chain(forbidden.iter())
        .find(|&&v| v >= g.n())
    {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if g.touch(a, b) || !a.is_disjoint(forbidden) || !b.is_disjoint(forbidden) {
        return Err(Error::NotSeparable);
    }
    let near_b = g.closed_neighborhood(b);
    let allowed = |v: usize| !forbidden.contains(&v);
    let reach_a = reach(g, a, |v| allowed(v) && !near_b.contains(&v));
    let mut sep: VertexSet = g
        .open_neighborhood(&reach_a)
        .into_iter()
        .filter(|&v| allowed(v))
        .collect();
    let candidates: Vec<usize> = sep.iter().copied().collect();
    for v in candidates {
        sep.remove(&v);
        if !separates(g, a, b, forbidden, &sep) {
            sep.insert(v);
        }
    }
    Ok(sep)
}

/// Whether every `a`-`b` path in `g - forbidden` meets `sep`.
pub fn separates(g: &Graph, a: &VertexSet, b: &VertexSet, forbidden: &VertexSet, sep: &VertexSet) -> bool {
    let start: VertexSet = a.iter().copied().filter(|v| !sep.contains(v)).collect();
    let seen = reach(g, &start, |v| !forbidden.contains(&v) && !sep.contains(&v));
    seen.is_disjoint(b)
}

fn reach(g: &Graph, start: &VertexSet, allowed: impl Fn(usize) -> bool) -> VertexSet {
    let mut seen = start.clone();
    let mut queue: VecDeque<usize> = start.iter().copied().collect();
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if allowed(w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Separators and common neighborhoods for a collection of pairwise
/// non-touching triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorFamily {
    pub triangles: Vec<VertexSet>,
    /// `S[i][j]`: minimal `(T_i, T_j)`-separator avoiding the other triangles' neighborhoods.
    pub separators: BTreeMap<(usize, usize), VertexSet>,
    /// `N(T_i) ∩ N(T_j)`.
    pub common: BTreeMap<(usize, usize), VertexSet>,
}

impl SeparatorFamily {
    pub fn build(g: &Graph, triangles: Vec<VertexSet>) -> Result<Self> {
        let nbhd: Vec<VertexSet> = triangles.iter().map(|tr| g.open_neighborhood(tr)).collect();
        let mut separators = BTreeMap::new();
        let mut common = BTreeMap::new();
        for i in 0..triangles.len() {
            for j in i + 1..triangles.len() {
                let forbidden: VertexSet = (0..triangles.len())
                    .filter(|&k| k != i && k != j)
                    .flat_map(|k| nbhd[k].iter().copied())
                    .collect();
                let sep = minimal_separator(g, &triangles[i], &triangles[j], &forbidden)?;
                separators.insert((i, j), sep);
                common.insert((i, j), nbhd[i].intersection(&nbhd[j]).copied().collect());
            }
        }
        Ok(Self {
            triangles,
            separators,
            common,
        })
    }

    /// `U`: the union of all separators and common neighborhoods.
    pub fn union(&self) -> VertexSet {
        self.separators
            .values()
            .chain(self.common.values())
            .flatten()
            .copied()
            .collect()
    }

    /// All sets of the family that must be cliques, tagged with the violation
    /// reported when one is not.
    pub fn cliques(&self) -> impl Iterator<Item = (ViolationKind, (usize, usize), &VertexSet)> {
        let s = self
            .separators
            .iter()
            .map(|(&k, v)| (ViolationKind::SeparatorNotClique, k, v));
        let n = self
            .common
            .iter()
            .map(|(&k, v)| (ViolationKind::CommonNeighborhoodNotClique, k, v));
        s.chain(n)
    }

    /// One violation per non-clique set, witnessed by a non-adjacent pair and
    /// the two triangles.
    pub fn clique_violations(&self, g: &Graph) -> Vec<ClassViolation> {
        let mut out = Vec::new();
        for (kind, (i, j), set) in self.cliques() {
            if let Some(pair) = non_edge(g, set) {
                out.push(ClassViolation::new(
                    kind,
                    vec![pair, self.triangles[i].clone(), self.triangles[j].clone()],
                    format!("set for triangles {i} and {j} is not a clique"),
                ));
            }
        }
        out
    }
}

fn non_edge(g: &Graph, set: &VertexSet) -> Option<VertexSet> {
    let list: Vec<usize> = set.iter().copied().collect();
    for (k, &u) in list.iter().enumerate() {
        if let Some(&w) = list[k + 1..].iter().find(|&&w| !g.has_edge(u, w)) {
            return Some(VertexSet::from([u, w]));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn set(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    fn is_minimal(g: &Graph, a: &VertexSet, b: &VertexSet, f: &VertexSet, s: &VertexSet) -> bool {
        separates(g, a, b, f, s)
            && s.iter().all(|v| {
                let mut smaller = s.clone();
                smaller.remove(v);
                !separates(g, a, b, f, &smaller)
            })
    }

    #[test]
    fn examples() {
        // triangles 0-1-2 and 4-5-6, both joined to 3
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (0, 2), (4, 5), (5, 6), (4, 6), (2, 3), (3, 4)],
        )
        .unwrap();
        let (a, b) = (set(&[0, 1, 2]), set(&[4, 5, 6]));
        assert_eq!(
            minimal_separator(&g, &a, &b, &VertexSet::new()).unwrap(),
            set(&[3])
        );
        let apart = copies(&complete(3), 2);
        assert!(minimal_separator(&apart, &a, &set(&[3, 4, 5]), &VertexSet::new())
            .unwrap()
            .is_empty());
        assert!(matches!(
            minimal_separator(&path(2), &set(&[0]), &set(&[1]), &VertexSet::new()),
            Err(Error::NotSeparable)
        ));
    }

    #[test]
    fn grid_gadget_has_two_vertex_cut() {
        // 3x4 grid, with columns 0 and 3 as the terminals: a 3-vertex cut.
        // Deleting the corner (0, 1) via `forbidden` leaves a 2-vertex cut.
        let id = |r: usize, c: usize| r * 4 + c;
        let mut edges = Vec::new();
        for r in 0..3 {
            for c in 0..4 {
                if c + 1 < 4 {
                    edges.push((id(r, c), id(r, c + 1)));
                }
                if r + 1 < 3 {
                    edges.push((id(r, c), id(r + 1, c)));
                }
            }
        }
        let g = Graph::from_edges(12, &edges).unwrap();
        let a = set(&[id(0, 0), id(1, 0), id(2, 0)]);
        let b = set(&[id(0, 3), id(1, 3), id(2, 3)]);
        let s = minimal_separator(&g, &a, &b, &VertexSet::new()).unwrap();
        assert_eq!(s.len(), 3);
        assert!(is_minimal(&g, &a, &b, &VertexSet::new(), &s));
        let f = set(&[id(0, 1)]);
        let s = minimal_separator(&g, &a, &b, &f).unwrap();
        assert_eq!(s.len(), 2);
        assert!(is_minimal(&g, &a, &b, &f, &s));
        assert!(s.is_disjoint(&f) && s.is_disjoint(&a) && s.is_disjoint(&b));
    }

    #[test]
    fn random_separators_are_minimal() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let mut done = 0;
        while done < 100 {
            let n = rng.gen_range(4..=14);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.25))
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let a = set(&[0]);
            let b = set(&[n - 1]);
            let f: VertexSet = (1..n - 1).filter(|_| rng.gen_bool(0.15)).collect();
            match minimal_separator(&g, &a, &b, &f) {
                Ok(s) => {
                    assert!(is_minimal(&g, &a, &b, &f, &s), "{edges:?} {f:?} {s:?}");
                    assert!(s.is_disjoint(&f));
                    done += 1;
                }
                Err(Error::NotSeparable) => assert!(g.has_edge(0, n - 1)),
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn family_for_disjoint_triangles_is_empty() {
        let g = copies(&complete(3), 3);
        let tris = vec![set(&[0, 1, 2]), set(&[3, 4, 5]), set(&[6, 7, 8])];
        let fam = SeparatorFamily::build(&g, tris).unwrap();
        assert_eq!(fam.separators.len(), 3);
        assert!(fam.union().is_empty());
        assert!(fam.clique_violations(&g).is_empty());
    }

    #[test]
    fn non_clique_common_neighborhood_is_reported() {
        // two triangles with two non-adjacent common neighbors 6 and 7
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (2, 6),
                (6, 3),
                (2, 7),
                (7, 3),
            ],
        )
        .unwrap();
        let fam = SeparatorFamily::build(&g, vec![set(&[0, 1, 2]), set(&[3, 4, 5])]).unwrap();
        assert_eq!(fam.common[&(0, 1)], set(&[6, 7]));
        let kinds: Vec<_> = fam.clique_violations(&g).into_iter().map(|v| v.kind).collect();
        assert_eq!(
            kinds,
            vec![
                ViolationKind::SeparatorNotClique,
                ViolationKind::CommonNeighborhoodNotClique
            ]
        );
    }
}
