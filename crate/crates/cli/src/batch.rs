//! Randomized campaigns of every check over many graphs.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context};
use mixed_spectra::report::fmt_real;
use mixed_spectra::{run_all, CheckKind, MixedGraph, TheoremReport, VerifyConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::commands::{EXIT_EXACT, EXIT_INEQUALITY, EXIT_OK};
use crate::format::emit_graph_with_comments;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BatchParams {
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub p_digon: f64,
    pub p_arc: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub kind: CheckKind,
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    /// Smallest slack over applicable trials, for checks that report one.
    pub min_slack: Option<f64>,
}

/// One failed applicable check, kept for serialization as a witness.
#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub trial: usize,
    pub graph: MixedGraph,
    pub report: TheoremReport,
}

impl Failure {
    /// Graph file text with the failing report as a comment.
    pub fn witness_text(&self) -> String {
        emit_graph_with_comments(
            &self.graph,
            &[format!("trial {}", self.trial), self.report.to_string()],
        )
    }

    pub fn file_name(&self) -> String {
        format!("trial-{:06}-{}.mg", self.trial, self.report.name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BatchSummary {
    pub params: BatchParams,
    pub checks: Vec<CheckSummary>,
    pub exact_failures: usize,
    pub inequality_failures: usize,
    /// Witness file names, relative to the witness directory.
    pub witnesses: Vec<String>,
    #[serde(skip)]
    pub failures: Vec<Failure>,
}

impl BatchSummary {
    pub fn exit_code(&self) -> u8 {
        if self.exact_failures > 0 {
            EXIT_EXACT
        } else if self.inequality_failures > 0 {
            EXIT_INEQUALITY
        } else {
            EXIT_OK
        }
    }

    pub fn to_text(&self) -> String {
        let p = &self.params;
        let mut out = format!(
            "trials={} seed={} n_max={} p_digon={} p_arc={}\n",
            p.trials, p.seed, p.n_max, p.p_digon, p.p_arc
        );
        writeln!(
            out,
            "{:<26} {:<12} {:>7} {:>7} {:>7} {:>12}",
            "check", "kind", "pass", "fail", "n/a", "min_slack"
        )
        .unwrap();
        for c in &self.checks {
            let kind = format!("{:?}", c.kind).to_lowercase();
            let slack = c.min_slack.map_or_else(|| "-".to_string(), fmt_real);
            writeln!(
                out,
                "{:<26} {:<12} {:>7} {:>7} {:>7} {:>12}",
                c.name, kind, c.pass, c.fail, c.inapplicable, slack
            )
            .unwrap();
        }
        writeln!(out, "exact failures: {}", self.exact_failures).unwrap();
        writeln!(out, "inequality failures: {}", self.inequality_failures).unwrap();
        for w in &self.witnesses {
            writeln!(out, "witness: {w}").unwrap();
        }
        out
    }
}

/// The graph of trial `trial`: its own ChaCha stream of the campaign seed,
/// with a vertex count uniform in `1..=n_max`.
pub fn trial_graph(params: &BatchParams, trial: usize) -> anyhow::Result<MixedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(trial as u64);
    let n = rng.gen_range(1..=params.n_max);
    Ok(mixed_spectra::graph::random_mixed_graph_with(
        n,
        params.p_digon,
        params.p_arc,
        &mut rng,
    )?)
}

/// Runs every check on `params.trials` graphs in parallel. Results are
/// merged in trial order, so the summary does not depend on scheduling.
pub fn run_batch(params: &BatchParams, cfg: &VerifyConfig) -> anyhow::Result<BatchSummary> {
    if params.n_max == 0 {
        bail!("--n-max must be at least 1");
    }
    // validates the probabilities up front, even for an empty campaign
    mixed_spectra::random_mixed_graph(1, params.p_digon, params.p_arc, 0)?;

    let results: Vec<(MixedGraph, Vec<TheoremReport>)> = (0..params.trials)
        .into_par_iter()
        .map(|t| {
            let g = trial_graph(params, t)?;
            let reports = run_all(&g, cfg);
            Ok((g, reports))
        })
        .collect::<anyhow::Result<_>>()?;

    // a single vertex fixes the name and kind of every check, even when no trial runs
    let mut checks: Vec<CheckSummary> = run_all(&MixedGraph::edgeless(1), cfg)
        .into_iter()
        .map(|r| CheckSummary {
            name: r.name,
            kind: r.kind,
            pass: 0,
            fail: 0,
            inapplicable: 0,
            min_slack: None,
        })
        .collect();
    let mut failures = Vec::new();
    for (trial, (graph, reports)) in results.into_iter().enumerate() {
        for (summary, report) in checks.iter_mut().zip(reports) {
            debug_assert_eq!(summary.name, report.name);
            if !report.applicable {
                summary.inapplicable += 1;
                continue;
            }
            if let Some(s) = report.slack {
                summary.min_slack = Some(summary.min_slack.map_or(s, |m: f64| m.min(s)));
            }
            if report.holds {
                summary.pass += 1;
            } else {
                summary.fail += 1;
                if report.kind != CheckKind::Exploratory {
                    failures.push(Failure { trial, graph: graph.clone(), report });
                }
            }
        }
    }
    let count = |kind| failures.iter().filter(|f| f.report.kind == kind).count();
    Ok(BatchSummary {
        params: *params,
        exact_failures: count(CheckKind::Exact),
        inequality_failures: count(CheckKind::Inequality),
        witnesses: failures.iter().map(Failure::file_name).collect(),
        checks,
        failures,
    })
}

/// Writes one graph file per failure into `dir`, creating it if needed.
pub fn write_witnesses(summary: &BatchSummary, dir: &Path) -> anyhow::Result<()> {
    if summary.failures.is_empty() {
        return Ok(());
    }
    std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    for f in &summary.failures {
        let path = dir.join(f.file_name());
        std::fs::write(&path, f.witness_text())
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(trials: usize, seed: u64) -> BatchParams {
        BatchParams { n_max: 6, trials, seed, p_digon: 0.3, p_arc: 0.3 }
    }

    #[test]
    fn empty_campaign() {
        let s = run_batch(&params(0, 1), &VerifyConfig::default()).unwrap();
        assert_eq!(s.exit_code(), EXIT_OK);
        assert!(s.checks.iter().all(|c| c.pass + c.fail + c.inapplicable == 0));
        assert_eq!(s.checks.iter().find(|c| c.name == "cassels_bound").unwrap().kind, CheckKind::Exploratory);
    }

    #[test]
    fn deterministic_and_clean() {
        let cfg = VerifyConfig::default();
        let a = run_batch(&params(40, 7), &cfg).unwrap();
        let b = run_batch(&params(40, 7), &cfg).unwrap();
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.exact_failures, 0);
        assert_eq!(a.inequality_failures, 0);
        for c in &a.checks {
            assert_eq!(c.pass + c.fail + c.inapplicable, 40);
        }
    }

    #[test]
    fn trial_graphs_depend_on_seed_and_index() {
        let p = params(10, 3);
        assert_eq!(trial_graph(&p, 4).unwrap(), trial_graph(&p, 4).unwrap());
        let distinct: std::collections::BTreeSet<String> = (0..10)
            .map(|t| crate::format::emit_graph(&trial_graph(&p, t).unwrap()))
            .collect();
        assert!(distinct.len() > 1);
    }

    #[test]
    fn rejects_bad_parameters() {
        let cfg = VerifyConfig::default();
        assert!(run_batch(&BatchParams { n_max: 0, ..params(1, 0) }, &cfg).is_err());
        assert!(run_batch(&BatchParams { p_digon: 0.8, p_arc: 0.5, ..params(0, 0) }, &cfg).is_err());
    }

    #[test]
    fn witness_files() {
        let graph = MixedGraph::new(2, [(0, 1)], []).unwrap();
        let report = TheoremReport::upper_bound("spread", CheckKind::Inequality, 3.0, 2.0, 1e-8);
        let failure = Failure { trial: 12, graph, report };
        let summary = BatchSummary {
            params: params(13, 0),
            checks: vec![],
            exact_failures: 0,
            inequality_failures: 1,
            witnesses: vec![failure.file_name()],
            failures: vec![failure],
        };
        let tmp = tempfile::tempdir().unwrap();
        let dir = tmp.path().join("witnesses");
        write_witnesses(&summary, &dir).unwrap();
        let text = std::fs::read_to_string(dir.join("trial-000012-spread.mg")).unwrap();
        assert!(text.starts_with("vertices 2\n# trial 12\n# spread applicable=true holds=false"));
        assert_eq!(crate::format::parse_graph(&text).unwrap().edge_count(), 1);
    }
}
