//! Solve reports: one solver run plus every certificate checked along the way.

use std::time::Instant;

use serde::Serialize;

use crate::detectors::{chordality, has_induced_minor, Chordality, MinorOracleConfig};
use crate::error::{ClassViolation, Error, Result};
use crate::friendship::{
    check_path_decomposition, solve_friendship_with, verify_cut_selection, FriendshipConfig,
};
use crate::generate::Pattern;
use crate::graph::{Graph, VertexSet};
use crate::kernels::{
    independence_number, mis_bipartite, mis_chordal, mis_oracle_with, two_coloring, OracleConfig,
};
use crate::triangles::{solve_triangles_c4, OracleFallback};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Oracle,
    Friendship,
    TrianglesC4,
    Bipartite,
    Chordal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CertificateCheck {
    fn new(name: &str, status: CheckStatus, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status,
            witness: None,
            detail: detail.into(),
        }
    }

    fn pass(name: &str, detail: impl Into<String>) -> Self {
        Self::new(name, CheckStatus::Pass, detail)
    }

    fn of_violation(v: &ClassViolation) -> Self {
        Self {
            name: format!("assertion:{}", kebab(&format!("{:?}", v.kind))),
            status: CheckStatus::Fail,
            witness: Some(v.witness.iter().map(|s| s.iter().copied().collect()).collect()),
            detail: v.detail.clone(),
        }
    }
}

fn kebab(camel: &str) -> String {
    let mut out = String::new();
    for (i, c) in camel.chars().enumerate() {
        if c.is_uppercase() && i > 0 {
            out.push('-');
        }
        out.push(c.to_ascii_lowercase());
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassStatus {
    VerifiedInClass,
    VerifiedOutOfClass,
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolveReport {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: Algorithm,
    pub t: usize,
    pub mis_size: usize,
    pub mis_vertices: Vec<usize>,
    pub certificate_checks: Vec<CertificateCheck>,
    pub class_verified: ClassStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch_nodes: Option<usize>,
    pub elapsed_ms: f64,
}

impl SolveReport {
    pub fn has_failures(&self) -> bool {
        self.certificate_checks
            .iter()
            .any(|c| c.status == CheckStatus::Fail)
    }

    /// The report with its timing zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Self {
        Self {
            elapsed_ms: 0.0,
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub algorithm: Algorithm,
    pub t: usize,
    /// Cross-check the size against the exact oracle.
    pub verify: bool,
    /// Largest instance the exact oracle is run on.
    pub oracle_cap: usize,
    /// Largest host the induced-minor oracle is run on.
    pub minor_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            algorithm: Algorithm::Oracle,
            t: 1,
            verify: false,
            oracle_cap: crate::kernels::DEFAULT_ORACLE_CAP,
            minor_cap: MinorOracleConfig::default().max_host,
        }
    }
}

struct Outcome {
    set: VertexSet,
    checks: Vec<CertificateCheck>,
    /// Exact class membership when the algorithm decides it itself.
    class: Option<ClassStatus>,
    branch_nodes: Option<usize>,
}

pub fn solve_instance(name: &str, g: &Graph, opts: &SolveOptions) -> Result<SolveReport> {
    if opts.t == 0 {
        return Err(Error::Config("t must be positive".into()));
    }
    let oracle = OracleConfig { cap: opts.oracle_cap };
    let start = Instant::now();
    let outcome = match opts.algorithm {
        Algorithm::Oracle => Outcome {
            set: mis_oracle_with(g, &oracle)?,
            checks: Vec::new(),
            class: Some(ClassStatus::VerifiedInClass),
            branch_nodes: None,
        },
        Algorithm::Friendship => friendship(g, opts.t, oracle),
        Algorithm::TrianglesC4 => triangles(g, opts.t)?,
        Algorithm::Bipartite => bipartite(g, oracle)?,
        Algorithm::Chordal => chordal(g, oracle)?,
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let mut checks = vec![if g.is_independent(&outcome.set) {
        CertificateCheck::pass("independent-set", "")
    } else {
        CertificateCheck::new(
            "independent-set",
            CheckStatus::Fail,
            "returned vertices are not independent",
        )
    }];
    checks.extend(outcome.checks);
    if opts.verify {
        checks.push(match independence_number(g, &oracle) {
            Ok(alpha) if alpha == outcome.set.len() => {
                CertificateCheck::pass("oracle-agreement", format!("alpha = {alpha}"))
            }
            Ok(alpha) => CertificateCheck::new(
                "oracle-agreement",
                CheckStatus::Fail,
                format!("size {} but alpha = {alpha}", outcome.set.len()),
            ),
            Err(e) => CertificateCheck::new("oracle-agreement", CheckStatus::Skipped, e.to_string()),
        });
    }
    let class_verified = match outcome.class {
        Some(status) => status,
        None => pattern_class(g, opts),
    };
    Ok(SolveReport {
        instance: name.into(),
        n: g.n(),
        m: g.m(),
        algorithm: opts.algorithm,
        t: opts.t,
        mis_size: outcome.set.len(),
        mis_vertices: outcome.set.into_iter().collect(),
        certificate_checks: checks,
        class_verified,
        branch_nodes: outcome.branch_nodes,
        elapsed_ms,
    })
}

fn pattern_class(g: &Graph, opts: &SolveOptions) -> ClassStatus {
    let pattern = match opts.algorithm {
        Algorithm::Friendship => Pattern::Friendship,
        Algorithm::TrianglesC4 => Pattern::TrianglesC4,
        _ => return ClassStatus::Unverified,
    };
    let cfg = MinorOracleConfig {
        max_host: opts.minor_cap,
        ..MinorOracleConfig::default()
    };
    match has_induced_minor(g, &pattern.graph(opts.t), &cfg) {
        Ok(None) => ClassStatus::VerifiedInClass,
        Ok(Some(_)) => ClassStatus::VerifiedOutOfClass,
        Err(_) => ClassStatus::Unverified,
    }
}

fn friendship(g: &Graph, t: usize, oracle: OracleConfig) -> Outcome {
    let sol = solve_friendship_with(g, t, &FriendshipConfig { oracle });
    let mut checks = Vec::new();
    let mut decomposition_errors = Vec::new();
    let mut decompositions = 0;
    let mut cut_edges = 0;
    let mut counterexamples = 0;
    for comp in &sol.components {
        for piece in &comp.pieces {
            decompositions += 1;
            decomposition_errors.extend(check_path_decomposition(&piece.graph, &piece.decomposition, t));
        }
        if let Some(sel) = &comp.selection {
            let report = verify_cut_selection(&comp.graph, sel);
            cut_edges += report.edges_checked;
            counterexamples += report.counterexamples.len();
        }
    }
    checks.push(if decomposition_errors.is_empty() {
        CertificateCheck::pass(
            "path-decomposition",
            format!("{decompositions} decompositions valid"),
        )
    } else {
        CertificateCheck::new(
            "path-decomposition",
            CheckStatus::Fail,
            decomposition_errors.join("; "),
        )
    });
    checks.push(if counterexamples == 0 {
        CertificateCheck::pass("cut-selection", format!("{cut_edges} edges checked"))
    } else {
        CertificateCheck::new(
            "cut-selection",
            CheckStatus::Fail,
            format!("{counterexamples} counterexamples over {cut_edges} edges"),
        )
    });
    checks.extend(sol.violations.iter().map(CertificateCheck::of_violation));
    Outcome {
        set: sol.independent_set,
        checks,
        class: None,
        branch_nodes: None,
    }
}

fn triangles(g: &Graph, t: usize) -> Result<Outcome> {
    let fallback = OracleFallback::default();
    let sol = solve_triangles_c4(g, t, &fallback)?;
    let mut checks = vec![CertificateCheck::pass(
        "leaves",
        format!(
            "{} separator, {} {} fallback, {} clique and {} chordality checks",
            sol.leaves.separator,
            sol.leaves.fallback,
            sol.fallback,
            sol.leaves.clique_checks,
            sol.leaves.chordality_checks
        ),
    )];
    checks.extend(sol.violations.iter().map(CertificateCheck::of_violation));
    Ok(Outcome {
        set: sol.independent_set,
        checks,
        class: None,
        branch_nodes: Some(sol.branch.nodes),
    })
}

/// The exact oracle, for kernels whose precondition failed.
fn rescue(g: &Graph, oracle: OracleConfig) -> VertexSet {
    mis_oracle_with(g, &oracle).unwrap_or_default()
}

fn bipartite(g: &Graph, oracle: OracleConfig) -> Result<Outcome> {
    Ok(match two_coloring(g) {
        Ok(_) => Outcome {
            set: mis_bipartite(g)?,
            checks: vec![CertificateCheck::pass("bipartite", "")],
            class: Some(ClassStatus::VerifiedInClass),
            branch_nodes: None,
        },
        Err(Error::NotBipartite { cycle }) => Outcome {
            set: rescue(g, oracle),
            checks: vec![CertificateCheck {
                witness: Some(vec![cycle]),
                ..CertificateCheck::new("bipartite", CheckStatus::Fail, "odd cycle")
            }],
            class: Some(ClassStatus::VerifiedOutOfClass),
            branch_nodes: None,
        },
        Err(e) => return Err(e),
    })
}

fn chordal(g: &Graph, oracle: OracleConfig) -> Result<Outcome> {
    Ok(match chordality(g) {
        Chordality::Chordal { .. } => Outcome {
            set: mis_chordal(g)?,
            checks: vec![CertificateCheck::pass("chordal", "")],
            class: Some(ClassStatus::VerifiedInClass),
            branch_nodes: None,
        },
        Chordality::NotChordal { hole } => Outcome {
            set: rescue(g, oracle),
            checks: vec![CertificateCheck {
                witness: Some(vec![hole.cycle.unwrap_or_default()]),
                ..CertificateCheck::new("chordal", CheckStatus::Fail, "hole")
            }],
            class: Some(ClassStatus::VerifiedOutOfClass),
            branch_nodes: None,
        },
    })
}
