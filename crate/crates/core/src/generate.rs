//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::detectors::{has_induced_minor, MinorOracleConfig};
use crate::error::{Error, Result};
use crate::graph::{families, Graph};

/// Excluded induced minors the rejection sampler can target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Pattern {
    /// `K1 + tK2`
    Friendship,
    /// `tC3 ⊎ C4`
    TrianglesC4,
}

impl Pattern {
    pub fn graph(self, t: usize) -> Graph {
        match self {
            Pattern::Friendship => families::friendship(t),
            Pattern::TrianglesC4 => families::triangles_and_square(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Kind {
    RandomGnp {
        n: usize,
        p: f64,
    },
    /// Uniform random recursive tree with shuffled labels.
    Tree {
        n: usize,
    },
    /// Each new vertex joins a random sub-clique of an existing vertex's
    /// attachment clique; `p` is the chance to keep each clique member.
    Chordal {
        n: usize,
        p: f64,
    },
    LongCycle {
        n: usize,
    },
    RandomBipartite {
        left: usize,
        right: usize,
        p: f64,
    },
    /// `G(n, p)` redrawn until it has no `pattern(t)` induced minor.
    InClassRejection {
        pattern: Pattern,
        t: usize,
        n: usize,
        p: f64,
        budget: usize,
        minor: MinorOracleConfig,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    /// Draws rejected before acceptance; zero for the direct generators.
    pub rejections: usize,
}

pub fn generate(kind: &Kind, seed: u64) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate_with(kind, &mut rng)
}

pub fn generate_with<R: Rng>(kind: &Kind, rng: &mut R) -> Result<Generated> {
    let graph = match *kind {
        Kind::RandomGnp { n, p } => gnp(n, check_p(p)?, rng),
        Kind::Tree { n } => tree(n, rng),
        Kind::Chordal { n, p } => chordal(n, check_p(p)?, rng),
        Kind::LongCycle { n } => {
            if n < 3 {
                return Err(Error::Config(format!(
                    "a cycle needs at least 3 vertices, got {n}"
                )));
            }
            families::cycle(n)
        }
        Kind::RandomBipartite { left, right, p } => {
            let p = check_p(p)?;
            let edges: Vec<_> = (0..left)
                .flat_map(|u| (left..left + right).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            Graph::from_edges(left + right, &edges)?
        }
        Kind::InClassRejection {
            pattern,
            t,
            n,
            p,
            budget,
            minor,
        } => {
            let h = pattern.graph(t);
            let p = check_p(p)?;
            for rejections in 0..budget {
                let g = gnp(n, p, rng);
                if has_induced_minor(&g, &h, &minor)?.is_none() {
                    return Ok(Generated { graph: g, rejections });
                }
            }
            return Err(Error::RejectionBudget { attempts: budget });
        }
    };
    Ok(Generated { graph, rejections: 0 })
}

fn check_p(p: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(Error::Config(format!("edge probability {p} outside [0, 1]")))
    }
}

fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).expect("ids in range")
}

fn tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = (1..n).map(|v| (perm[rng.gen_range(0..v)], perm[v])).collect();
    Graph::from_edges(n, &edges).expect("ids in range")
}

fn chordal<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut cliques: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for v in 0..n {
        let mut attach = Vec::new();
        if v > 0 {
            let u = rng.gen_range(0..v);
            attach.push(u);
            attach.extend(cliques[u].iter().copied().filter(|&w| w != u && rng.gen_bool(p)));
        }
        edges.extend(attach.iter().map(|&w| (w, v)));
        attach.push(v);
        cliques.push(attach);
    }
    Graph::from_edges(n, &edges).expect("ids in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detectors::chordality;
    use crate::graph::connected_components;
    use crate::kernels::two_coloring;

    #[test]
    fn examples() {
        let t = generate(&Kind::Tree { n: 10 }, 1).unwrap().graph;
        assert_eq!(t.m(), 9);
        assert_eq!(connected_components(&t).len(), 1);
        assert_eq!(
            generate(&Kind::LongCycle { n: 9 }, 0).unwrap().graph,
            families::cycle(9)
        );
        let forest = generate(
            &Kind::InClassRejection {
                pattern: Pattern::Friendship,
                t: 1,
                n: 12,
                p: 0.15,
                budget: 10_000,
                minor: MinorOracleConfig::default(),
            },
            3,
        )
        .unwrap()
        .graph;
        assert_eq!(forest.m() + connected_components(&forest).len(), 12);
    }

    #[test]
    fn deterministic_under_seed() {
        let kind = Kind::RandomGnp { n: 30, p: 0.2 };
        assert_eq!(generate(&kind, 5).unwrap(), generate(&kind, 5).unwrap());
        assert_ne!(generate(&kind, 5).unwrap(), generate(&kind, 6).unwrap());
    }

    #[test]
    fn structured_kinds_have_their_shape() {
        for seed in 0..20 {
            let g = generate(&Kind::Chordal { n: 40, p: 0.5 }, seed).unwrap().graph;
            assert!(chordality(&g).order().is_some());
            let b = generate(
                &Kind::RandomBipartite {
                    left: 7,
                    right: 9,
                    p: 0.4,
                },
                seed,
            )
            .unwrap()
            .graph;
            assert!(two_coloring(&b).is_ok());
        }
    }

    #[test]
    fn budget_and_parameter_errors() {
        let impossible = Kind::InClassRejection {
            pattern: Pattern::Friendship,
            t: 1,
            n: 8,
            p: 1.0,
            budget: 5,
            minor: MinorOracleConfig::default(),
        };
        assert!(matches!(
            generate(&impossible, 0),
            Err(Error::RejectionBudget { attempts: 5 })
        ));
        assert!(matches!(
            generate(&Kind::RandomGnp { n: 3, p: 1.5 }, 0),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            generate(&Kind::LongCycle { n: 2 }, 0),
            Err(Error::Config(_))
        ));
    }
}
