//! Benchmark suites: generator presets kept in plain `key = value` files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::detectors::MinorOracleConfig;
use crate::error::{Error, Result};
use crate::generate::{generate, Kind, Pattern};
use crate::report::{solve_instance, Algorithm, SolveOptions, SolveReport};

#[derive(Clone, Debug, PartialEq)]
pub struct Suite {
    pub name: String,
    pub kind: String,
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub p: f64,
    pub pattern: Pattern,
    pub budget: usize,
    pub algorithm: Algorithm,
    pub t: usize,
    pub verify: bool,
}

impl Suite {
    pub fn parse(name: &str, text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let body = raw.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = body.split_once('=').ok_or_else(|| Error::Parse {
                line: i + 1,
                msg: "expected `key = value`".into(),
            })?;
            map.insert(key.trim().to_string(), value.trim().to_string());
        }
        let mut take = |key: &str| map.remove(key);
        let kind = take("kind").ok_or_else(|| Error::Config("suite needs a `kind`".into()))?;
        let sizes = list(&take("sizes").ok_or_else(|| Error::Config("suite needs `sizes`".into()))?)?;
        let seeds = list(&take("seeds").unwrap_or_else(|| "1".into()))?;
        let suite = Suite {
            name: name.to_string(),
            kind,
            sizes: sizes.into_iter().map(|s| s as usize).collect(),
            seeds,
            p: value(take("p"), 0.3)?,
            pattern: enum_value(take("pattern"), Pattern::Friendship)?,
            budget: value(take("budget"), 10_000)?,
            algorithm: enum_value(take("alg"), Algorithm::Oracle)?,
            t: value(take("t"), 1)?,
            verify: value(take("verify"), false)?,
        };
        if let Some(key) = map.keys().next() {
            return Err(Error::Config(format!("unknown suite key `{key}`")));
        }
        suite.generator(
            suite.sizes.first().copied().unwrap_or(1),
            &MinorOracleConfig::default(),
        )?;
        Ok(suite)
    }

    fn generator(&self, n: usize, minor: &MinorOracleConfig) -> Result<Kind> {
        Ok(match self.kind.as_str() {
            "random-gnp" => Kind::RandomGnp { n, p: self.p },
            "tree" => Kind::Tree { n },
            "chordal" => Kind::Chordal { n, p: self.p },
            "long-cycle" => Kind::LongCycle { n },
            "random-bipartite" => Kind::RandomBipartite {
                left: n / 2,
                right: n - n / 2,
                p: self.p,
            },
            "in-class-rejection" => Kind::InClassRejection {
                pattern: self.pattern,
                t: self.t,
                n,
                p: self.p,
                budget: self.budget,
                minor: *minor,
            },
            other => return Err(Error::Config(format!("unknown generator kind `{other}`"))),
        })
    }
}

/// `1, 2, 5` or `1-10` (inclusive), or a mix.
fn list(text: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let bad = || Error::Config(format!("bad list item `{item}`"));
        match item.split_once('-') {
            Some((a, b)) => {
                let (a, b): (u64, u64) = (
                    a.trim().parse().map_err(|_| bad())?,
                    b.trim().parse().map_err(|_| bad())?,
                );
                out.extend(a..=b);
            }
            None => out.push(item.parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}

fn value<T: std::str::FromStr>(text: Option<String>, default: T) -> Result<T> {
    match text {
        None => Ok(default),
        Some(s) => s
            .parse()
            .map_err(|_| Error::Config(format!("cannot parse `{s}`"))),
    }
}

fn enum_value<T: clap::ValueEnum>(text: Option<String>, default: T) -> Result<T> {
    match text {
        None => Ok(default),
        Some(s) => T::from_str(&s, false).map_err(|_| Error::Config(format!("unknown value `{s}`"))),
    }
}

/// Resolves a suite name: an existing file path, or `<name>.suite` in
/// `$MINORFREE_SUITES` or the bundled suites directory.
pub fn locate_suite(name: &str) -> PathBuf {
    let direct = Path::new(name);
    if direct.is_file() {
        return direct.to_path_buf();
    }
    let dir = std::env::var_os("MINORFREE_SUITES")
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("suites"));
    dir.join(format!("{name}.suite"))
}

pub fn load_suite(name: &str) -> Result<Suite> {
    let path = locate_suite(name);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Error::Config(format!("cannot read suite {}: {e}", path.display())))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(name);
    Suite::parse(stem, &text)
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub suite: String,
    pub reports: Vec<SolveReport>,
    pub failures: usize,
}

pub fn run_suite(suite: &Suite, base: &SolveOptions) -> Result<BenchReport> {
    let opts = SolveOptions {
        algorithm: suite.algorithm,
        t: suite.t,
        verify: suite.verify || base.verify,
        ..base.clone()
    };
    let minor = MinorOracleConfig {
        max_host: base.minor_cap,
        ..MinorOracleConfig::default()
    };
    let jobs: Vec<(usize, u64)> = suite
        .sizes
        .iter()
        .flat_map(|&n| suite.seeds.iter().map(move |&s| (n, s)))
        .collect();
    let mut reports = jobs
        .par_iter()
        .map(|&(n, seed)| {
            let g = generate(&suite.generator(n, &minor)?, seed)?.graph;
            let name = format!("{}/{}-n{n:05}-s{seed:05}", suite.name, suite.kind);
            solve_instance(&name, &g, &opts)
        })
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.instance.cmp(&b.instance));
    let failures = reports.iter().filter(|r| r.has_failures()).count();
    Ok(BenchReport {
        suite: suite.name.clone(),
        reports,
        failures,
    })
}
