//! The `spectrum`, `verify`, `linegraph` and `switch` commands. Each returns
//! its output instead of printing it.

use anyhow::{anyhow, bail, Context};
use mixed_spectra::report::fmt_real;
use mixed_spectra::spectra::determinant_exact;
use mixed_spectra::verify::{any_exact_failure, any_inequality_failure};
use mixed_spectra::{
    algebraic_line_graph, apply_switching, char_poly_exact, eigenvalues, hermitian_adjacency, run_all,
    signless_laplacian, Gauge, MixedGraph, OmegaPower, VerifyConfig,
};
use serde::Serialize;

use crate::format::{edge_label, emit_graph, emit_graph_with_comments};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INEQUALITY: u8 = 1;
pub const EXIT_EXACT: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

/// Text for stdout and stderr plus the process exit status.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    fn stdout(stdout: String) -> Self {
        Output { stdout, ..Default::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
pub enum MatrixKind {
    /// Hermitian adjacency matrix
    H,
    /// Signless Laplacian D + H
    Q,
}

#[derive(Serialize)]
struct CharPolyJson {
    polynomial: String,
    /// Highest degree first.
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct SpectrumJson {
    matrix: MatrixKind,
    n: usize,
    eigenvalues: Vec<f64>,
    trace: i64,
    determinant: String,
    charpoly: Option<CharPolyJson>,
}

fn to_json(value: &impl Serialize) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Sorted spectrum, trace and exact determinant of `H` or `Q`, optionally with
/// the exact characteristic polynomial.
pub fn spectrum(
    x: &MixedGraph,
    kind: MatrixKind,
    exact_charpoly: bool,
    json: bool,
    cfg: &VerifyConfig,
) -> anyhow::Result<Output> {
    let m = match kind {
        MatrixKind::H => hermitian_adjacency(x),
        MatrixKind::Q => signless_laplacian(x),
    };
    let spec = eigenvalues(&m, cfg.convergence_tol)?;
    let det = determinant_exact(&m);
    let charpoly = exact_charpoly.then(|| {
        let p = char_poly_exact(&m);
        CharPolyJson {
            polynomial: p.to_string(),
            coefficients: p.coeffs().iter().rev().map(ToString::to_string).collect(),
        }
    });
    if json {
        return Ok(Output::stdout(to_json(&SpectrumJson {
            matrix: kind,
            n: m.dim(),
            eigenvalues: spec.values.iter().map(|v| v + 0.0).collect(),
            trace: m.trace(),
            determinant: det.to_string(),
            charpoly,
        })?));
    }
    let values: Vec<String> = spec.values.iter().map(|&v| fmt_real(v)).collect();
    let mut out = format!(
        "matrix {kind:?} (n={})\nspectrum: {}; det={det}\ntrace: {}\n",
        m.dim(),
        values.join(", "),
        m.trace()
    );
    if let Some(p) = charpoly {
        out.push_str(&format!(
            "charpoly: {}\ncoefficients: {}\n",
            p.polynomial,
            p.coefficients.join(", ")
        ));
    }
    Ok(Output::stdout(out))
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    status: &'static str,
    reports: &'a [mixed_spectra::TheoremReport],
}

/// Every check, one line each. Exit status 2 when an exact identity fails,
/// otherwise 1 when an inequality fails.
pub fn verify(x: &MixedGraph, json: bool, cfg: &VerifyConfig) -> anyhow::Result<Output> {
    let reports = run_all(x, cfg);
    let (code, status) = if any_exact_failure(&reports) {
        (EXIT_EXACT, "exact_violation")
    } else if any_inequality_failure(&reports) {
        (EXIT_INEQUALITY, "inequality_violation")
    } else {
        (EXIT_OK, "ok")
    };
    let stdout = if json {
        to_json(&VerifyJson { status, reports: &reports })?
    } else {
        let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
        s.push_str(&format!("status: {status}\n"));
        s
    };
    Ok(Output { stdout, stderr: String::new(), code })
}

/// `AL_X` in the graph file format, with one comment per vertex naming the
/// edge of `X` it stands for.
pub fn linegraph(x: &MixedGraph) -> Output {
    let al = algebraic_line_graph(x);
    let comments: Vec<String> = x
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| format!("vertex {i}: {}", edge_label(e)))
        .collect();
    Output::stdout(emit_graph_with_comments(&al, &comments))
}

/// Parses `"v:p,..."`, requiring every vertex exactly once and `p ∈ {0,1,2}`.
pub fn parse_gauge(spec: &str, n: usize) -> anyhow::Result<Gauge> {
    let mut values: Vec<Option<OmegaPower>> = vec![None; n];
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (v, p) = item
            .split_once(':')
            .ok_or_else(|| anyhow!("gauge entry {item:?} is not of the form vertex:power"))?;
        let v: usize = v.trim().parse().with_context(|| format!("invalid vertex in {item:?}"))?;
        let p: u8 = p.trim().parse().with_context(|| format!("invalid power in {item:?}"))?;
        if v >= n {
            bail!("gauge vertex {v} out of range for {n} vertices");
        }
        if p > 2 {
            bail!("gauge power {p} at vertex {v} is not 0, 1 or 2");
        }
        if values[v].replace(OmegaPower::new(p.into())).is_some() {
            bail!("gauge assigns vertex {v} twice");
        }
    }
    let missing: Vec<usize> = (0..n).filter(|&v| values[v].is_none()).collect();
    if !missing.is_empty() {
        bail!("gauge is incomplete: no power for vertices {missing:?}");
    }
    Ok(Gauge::new(values.into_iter().flatten().collect()))
}

/// The switched graph, with a confirmation on stderr that the two
/// `Q`-spectra agree.
pub fn switch(x: &MixedGraph, gauge: &Gauge, cfg: &VerifyConfig) -> anyhow::Result<Output> {
    let y = apply_switching(x, gauge)?;
    let before = eigenvalues(&signless_laplacian(x), cfg.convergence_tol)?;
    let after = eigenvalues(&signless_laplacian(&y), cfg.convergence_tol)?;
    let dev = before.max_deviation(&after);
    let (stderr, code) = if dev <= cfg.switching_tol {
        (format!("Q-spectra match: max deviation {dev:.1e} <= {:.0e}\n", cfg.switching_tol), EXIT_OK)
    } else {
        (format!("Q-spectra differ: max deviation {dev:.1e} > {:.0e}\n", cfg.switching_tol), EXIT_EXACT)
    };
    Ok(Output { stdout: emit_graph(&y), stderr, code })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_graph;

    fn cfg() -> VerifyConfig {
        VerifyConfig::default()
    }

    #[test]
    fn spectrum_of_digon() {
        let d = parse_graph("vertices 2\n0 -- 1").unwrap();
        let q = spectrum(&d, MatrixKind::Q, true, false, &cfg()).unwrap().stdout;
        assert!(q.contains("spectrum: 2.000000, 0.000000; det=0"), "{q}");
        assert!(q.contains("charpoly: λ^2 - 2λ"));
        assert!(q.contains("coefficients: 1, -2, 0"));
        let h = spectrum(&d, MatrixKind::H, false, false, &cfg()).unwrap().stdout;
        assert!(h.contains("spectrum: 1.000000, -1.000000; det=-1"), "{h}");
        assert!(!h.contains("charpoly"));
    }

    #[test]
    fn spectrum_json() {
        let d = parse_graph("vertices 2\n0 -- 1").unwrap();
        let out = spectrum(&d, MatrixKind::Q, true, true, &cfg()).unwrap().stdout;
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["matrix"], "Q");
        assert_eq!(v["determinant"], "0");
        assert_eq!(v["charpoly"]["coefficients"], serde_json::json!(["1", "-2", "0"]));
        assert!((v["eigenvalues"][0].as_f64().unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn verify_examples() {
        let c4 = parse_graph("vertices 4\n0 -- 1\n1 -- 2\n2 -- 3\n3 -- 0").unwrap();
        let out = verify(&c4, false, &cfg()).unwrap();
        assert_eq!(out.code, EXIT_OK);
        let line = out.stdout.lines().find(|l| l.starts_with("singularity ")).unwrap();
        for token in ["holds=true", "singular=true", "monostore=true", "bipartite=true"] {
            assert!(line.contains(token), "{line}");
        }

        let tri = parse_graph("vertices 3\n0 -> 1\n1 -> 2\n2 -> 0").unwrap();
        let out = verify(&tri, false, &cfg()).unwrap();
        let line = out.stdout.lines().find(|l| l.starts_with("monostore_spectrum ")).unwrap();
        assert!(line.contains("applicable=true holds=true"), "{line}");

        let edgeless = parse_graph("vertices 3").unwrap();
        let out = verify(&edgeless, false, &cfg()).unwrap();
        assert_eq!(out.code, EXIT_OK);
        for r in run_all(&edgeless, &cfg()) {
            if r.kind != mixed_spectra::CheckKind::Exact {
                let line = out.stdout.lines().find(|l| l.starts_with(&format!("{} ", r.name))).unwrap();
                assert!(line.contains("applicable=false"), "{line}");
            }
        }
    }

    #[test]
    fn linegraph_examples() {
        let chained = parse_graph("vertices 3\n0 -- 1\n1 -- 2").unwrap();
        let out = linegraph(&chained).stdout;
        assert_eq!(out, "vertices 2\n# vertex 0: 0 -- 1\n# vertex 1: 1 -- 2\n0 -- 1\n");
        let arcs = parse_graph("vertices 3\n0 -> 1\n1 -> 2").unwrap();
        assert!(linegraph(&arcs).stdout.ends_with("vertices 2\n# vertex 0: 0 -> 1\n# vertex 1: 1 -> 2\n0 -> 1\n"));
        let single = parse_graph("vertices 2\n0 -> 1").unwrap();
        assert_eq!(parse_graph(&linegraph(&single).stdout).unwrap(), MixedGraph::edgeless(1));
    }

    #[test]
    fn gauge_parsing() {
        let g = parse_gauge("0:0, 1:1,2:2", 3).unwrap();
        assert_eq!(g.values(), &[OmegaPower::ONE, OmegaPower::OMEGA, OmegaPower::OMEGA_SQUARED]);
        assert!(parse_gauge("0:0", 2).unwrap_err().to_string().contains("incomplete"));
        assert!(parse_gauge("0:0,0:1", 1).is_err());
        assert!(parse_gauge("0:3,1:0", 2).is_err());
        assert!(parse_gauge("0:0,2:0", 2).is_err());
        assert!(parse_gauge("0-0", 1).is_err());
    }

    #[test]
    fn switch_examples() {
        let d = parse_graph("vertices 2\n0 -- 1").unwrap();
        let same = switch(&d, &parse_gauge("0:0,1:0", 2).unwrap(), &cfg()).unwrap();
        assert_eq!(same.stdout, emit_graph(&d));
        assert_eq!(same.code, EXIT_OK);
        let out = switch(&d, &parse_gauge("0:0,1:1", 2).unwrap(), &cfg()).unwrap();
        let y = parse_graph(&out.stdout).unwrap();
        assert_eq!(y.arc_count(), 1);
        assert_eq!(y.connection(0, 1), Some(OmegaPower::OMEGA));
        assert!(out.stderr.starts_with("Q-spectra match"));
    }
}
