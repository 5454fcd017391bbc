use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_ORACLE_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest vertex count the oracle accepts; at most 64.
    pub cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ORACLE_CAP,
        }
    }
}

/// Exhaustive maximum independent set under the default cap.
pub fn mis_oracle(g: &Graph) -> Result<VertexSet> {
    mis_oracle_with(g, &OracleConfig::default())
}

pub fn mis_oracle_with(g: &Graph, cfg: &OracleConfig) -> Result<VertexSet> {
    check_cap(g, cfg)?;
    let adj = g.adjacency_masks();
    let mut cand = full(g.n());
    let mut need = alpha(&adj, cand);
    let mut chosen = VertexSet::new();
    for v in g.vertices() {
        if need == 0 {
            break;
        }
        if cand >> v & 1 == 0 {
            continue;
        }
        let rest = cand & !adj[v] & !(1 << v);
        if 1 + alpha(&adj, rest) == need {
            chosen.insert(v);
            cand = rest;
            need -= 1;
        } else {
            cand &= !(1 << v);
        }
    }
    Ok(chosen)
}

pub fn independence_number(g: &Graph, cfg: &OracleConfig) -> Result<usize> {
    check_cap(g, cfg)?;
    Ok(alpha(&g.adjacency_masks(), full(g.n())))
}

fn check_cap(g: &Graph, cfg: &OracleConfig) -> Result<()> {
    let cap = cfg.cap.min(64);
    if g.n() > cap {
        return Err(Error::SizeCap {
            what: "MIS oracle",
            size: g.n(),
            cap,
        });
    }
    Ok(())
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn alpha(adj: &[u64], cand: u64) -> usize {
    let mut best = greedy(adj, cand);
    branch(adj, cand, 0, &mut best);
    best
}

/// Minimum-degree greedy, used as the initial lower bound.
fn greedy(adj: &[u64], mut cand: u64) -> usize {
    let mut size = 0;
    while cand != 0 {
        let v = min_degree_vertex(adj, cand);
        cand &= !adj[v] & !(1 << v);
        size += 1;
    }
    size
}

fn min_degree_vertex(adj: &[u64], cand: u64) -> usize {
    let mut best = (u32::MAX, 0);
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d < best.0 {
            best = (d, v);
        }
    }
    best.1
}

fn branch(adj: &[u64], mut cand: u64, mut size: usize, best: &mut usize) {
    loop {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = size;
            return;
        }
        // Vertices of degree at most one are always safe to take.
        let mut low = None;
        let mut high = (0u32, 0usize);
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & cand).count_ones();
            if d <= 1 {
                low = Some(v);
                break;
            }
            if d > high.0 {
                high = (d, v);
            }
        }
        match low {
            Some(v) => {
                cand &= !adj[v] & !(1 << v);
                size += 1;
            }
            None => {
                let v = high.1;
                branch(adj, cand & !adj[v] & !(1 << v), size + 1, best);
                cand &= !(1 << v);
            }
        }
    }
}
