//! Benchmark suites: run several algorithms on a list of instances and report
//! one CSV row per run.
//!
//! Suite JSON:
//!
//! ```json
//! {
//!   "algorithms": ["oracle", "ilp-m"],
//!   "seed": 1,
//!   "random": {"count": 100, "rules": ["av"], "ops": ["vc"],
//!              "m": [2, 4], "n": [0, 5], "k": [1, 3], "ell": [0, 2], "r": [0, 2]},
//!   "instances": [{"election": "e1.txt", "params": {"rule": "av", "op": "appadd",
//!                  "k": 1, "ell": 1, "r": 0, "distinguished": [0]}}]
//! }
//! ```
//!
//! File instances come first, then the random ones. Rows are ordered by
//! instance, then by algorithm as listed, regardless of which run finishes
//! first. Wall time is left out unless asked for, so output is reproducible.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Deserialize;

use crate::dispatch::{solve, Algorithm};
use crate::election::Rule;
use crate::error::{Error, Result};
use crate::io::{instance_digest, parse_election, InstanceParams};
use crate::limits::Limits;
use crate::model::{BriberyInstance, OperationKind};
use crate::random::{random_instance, rng, Shape};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomSpec {
    pub count: usize,
    #[serde(default = "all_rules")]
    pub rules: Vec<Rule>,
    #[serde(default = "all_ops")]
    pub ops: Vec<OperationKind>,
    pub m: [usize; 2],
    pub n: [usize; 2],
    pub k: [usize; 2],
    pub ell: [usize; 2],
    pub r: [usize; 2],
}

fn all_rules() -> Vec<Rule> {
    Rule::ALL.to_vec()
}

fn all_ops() -> Vec<OperationKind> {
    OperationKind::ALL.to_vec()
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileInstance {
    pub election: PathBuf,
    pub params: InstanceParams,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Suite {
    pub algorithms: Vec<String>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub random: Option<RandomSpec>,
    #[serde(default)]
    pub instances: Vec<FileInstance>,
}

impl Suite {
    /// 100 small random instances cycling through every rule and operation,
    /// solved by the oracle and the committee-guessing program.
    pub fn default_random(seed: u64) -> Self {
        Suite {
            algorithms: vec!["oracle".into(), "ilp-m".into()],
            seed,
            random: Some(RandomSpec {
                count: 100,
                rules: all_rules(),
                ops: all_ops(),
                m: [2, 4],
                n: [0, 5],
                k: [1, 3],
                ell: [0, 2],
                r: [0, 2],
            }),
            instances: Vec::new(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }

    /// Loads the file instances (relative to `base`) and generates the random
    /// ones.
    pub fn instances(&self, base: &Path) -> Result<Vec<BriberyInstance>> {
        let mut out = Vec::new();
        for f in &self.instances {
            let path = base.join(&f.election);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::InvalidInstance(format!("{}: {e}", path.display())))?;
            out.push(f.params.instance(parse_election(&text)?)?);
        }
        if let Some(spec) = &self.random {
            if spec.rules.is_empty() || spec.ops.is_empty() {
                return Err(Error::InvalidInstance("random suite needs rules and operations".into()));
            }
            let ranges = [spec.m, spec.n, spec.k, spec.ell, spec.r];
            if spec.m[0] == 0 || spec.k[0] == 0 || spec.k[0] > spec.m[0] || ranges.iter().any(|r| r[0] > r[1]) {
                return Err(Error::InvalidInstance(
                    "random ranges must be [lo, hi] with lo <= hi, m >= 1 and 1 <= k <= m".into(),
                ));
            }
            let shape = Shape {
                m: spec.m[0]..=spec.m[1],
                n: spec.n[0]..=spec.n[1],
                k: spec.k[0]..=spec.k[1],
                budget: spec.ell[0]..=spec.ell[1],
                radius: spec.r[0]..=spec.r[1],
            };
            let mut r = rng(self.seed);
            for i in 0..spec.count {
                let rule = spec.rules[i % spec.rules.len()];
                let op = spec.ops[(i / spec.rules.len()) % spec.ops.len()];
                out.push(random_instance(&mut r, rule, op, &shape));
            }
        }
        Ok(out)
    }
}

struct Row {
    answer: String,
    algorithm: String,
    nodes: u64,
    committees: u64,
    time_ms: f64,
}

/// Runs the suite and returns the CSV text.
pub fn run_suite(suite: &Suite, base: &Path, limits: &Limits, timing: bool) -> Result<String> {
    let algorithms = suite
        .algorithms
        .iter()
        .map(|a| a.parse::<Algorithm>())
        .collect::<Result<Vec<_>>>()?;
    let instances = suite.instances(base)?;
    let results: Vec<Vec<Row>> = instances
        .par_iter()
        .map(|inst| {
            algorithms
                .iter()
                .map(|&algo| {
                    let start = Instant::now();
                    let outcome = solve(inst, algo, limits);
                    let time_ms = start.elapsed().as_secs_f64() * 1000.0;
                    match outcome {
                        Ok(d) => Row {
                            answer: if d.answer { "yes" } else { "no" }.into(),
                            algorithm: d.algorithm.into(),
                            nodes: d.stats.nodes,
                            committees: d.stats.committees,
                            time_ms,
                        },
                        Err(e) => Row {
                            answer: format!("error: {e}"),
                            algorithm: algo.name().into(),
                            nodes: 0,
                            committees: 0,
                            time_ms,
                        },
                    }
                })
                .collect()
        })
        .collect();

    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![
        "index", "digest", "rule", "op", "m", "n", "k", "ell", "r", "requested", "algorithm", "answer", "nodes",
        "committees", "agreement",
    ];
    if timing {
        header.push("time_ms");
    }
    let csv_err = |e: csv::Error| Error::InvalidInstance(format!("writing CSV: {e}"));
    w.write_record(&header).map_err(csv_err)?;
    for (index, (inst, rows)) in instances.iter().zip(&results).enumerate() {
        let answers: Vec<&str> = rows
            .iter()
            .map(|r| r.answer.as_str())
            .filter(|a| !a.starts_with("error"))
            .collect();
        let agreement = answers.windows(2).all(|w| w[0] == w[1]);
        let digest = instance_digest(inst);
        for (algo, row) in algorithms.iter().zip(rows) {
            let mut record = vec![
                index.to_string(),
                digest.clone(),
                inst.rule.to_string(),
                inst.op.to_string(),
                inst.election.num_candidates().to_string(),
                inst.election.num_votes().to_string(),
                inst.k.to_string(),
                inst.budget.to_string(),
                inst.radius.to_string(),
                algo.name().to_string(),
                row.algorithm.clone(),
                row.answer.clone(),
                row.nodes.to_string(),
                row.committees.to_string(),
                agreement.to_string(),
            ];
            if timing {
                record.push(format!("{:.3}", row.time_ms));
            }
            w.write_record(&record).map_err(csv_err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidInstance(format!("writing CSV: {e}")))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields is UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite_is_header_only() {
        let suite = Suite::from_json(r#"{"algorithms": ["oracle"]}"#).unwrap();
        let csv = run_suite(&suite, Path::new("."), &Limits::default(), false).unwrap();
        assert_eq!(csv.lines().count(), 1);
        assert!(csv.starts_with("index,digest,"));
    }

    #[test]
    fn small_random_suite_agrees() {
        let mut suite = Suite::default_random(5);
        suite.random.as_mut().unwrap().count = 20;
        let csv = run_suite(&suite, Path::new("."), &Limits::default(), false).unwrap();
        assert_eq!(csv.lines().count(), 41);
        assert!(csv.lines().skip(1).all(|l| l.ends_with(",true")));
        assert_eq!(csv, run_suite(&suite, Path::new("."), &Limits::default(), false).unwrap());
    }

    #[test]
    fn bad_suites() {
        assert!(Suite::from_json(r#"{"algorithms": ["magic"]}"#).is_ok());
        let s = Suite::from_json(r#"{"algorithms": ["magic"]}"#).unwrap();
        assert!(run_suite(&s, Path::new("."), &Limits::default(), false).is_err());
        assert!(Suite::from_json(r#"{"algorithms": [], "extra": 1}"#).is_err());
    }
}
