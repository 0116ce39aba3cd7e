//! One check per identity or eigenvalue bound of the signless Laplacian
//! `Q_γ = D + H_γ`, each producing a [`TheoremReport`].
//!
//! Notation used in the reports: `n` vertices, `m` edges (`l` digons and `k`
//! arcs), `λ_1 ≥ … ≥ λ_n` the eigenvalues of `Q_γ`, `μ_i` those of `H_γ`,
//! and `Δ` the maximum degree.

use std::cell::OnceCell;

use crate::error::Error;
use crate::graph::MixedGraph;
use crate::line_graph::{algebraic_line_graph, verify_line_graph_gram, verify_line_graph_underlying};
use crate::matrices::{
    adjacency, degree_matrix, hermitian_adjacency, signless_laplacian, verify_incidence_identities,
    HermitianMatrixExact,
};
use crate::report::{fmt_real, CheckKind, ReportValue, TheoremReport};
use crate::spectra::{
    char_poly_exact, eigenvalues, is_singular_exact, spectral_decomposition, unit_vector_inequalities,
    IntPolynomial, Spectrum, DEFAULT_ASSERTION_TOL, DEFAULT_CONVERGENCE_TOL,
};

/// Tolerances shared by all checks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyConfig {
    /// Off-diagonal stopping norm for the eigensolver.
    pub convergence_tol: f64,
    /// Absolute slack for eigenvalue inequalities and spectrum comparisons.
    pub assertion_tol: f64,
    /// Absolute slack when comparing eigenvalue sums with exact traces.
    pub trace_tol: f64,
    /// Absolute slack for switching-invariance comparisons of spectra.
    pub switching_tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            convergence_tol: DEFAULT_CONVERGENCE_TOL,
            assertion_tol: DEFAULT_ASSERTION_TOL,
            trace_tol: 1e-7,
            switching_tol: 1e-9,
        }
    }
}

/// Report names, in the order [`run_all`] emits them.
pub const CHECK_NAMES: [&str; 14] = [
    "incidence_products",
    "line_graph_gram",
    "line_graph_underlying",
    "charpoly_relation",
    "trace_identities",
    "singularity",
    "hermitian_spectral_radius",
    "q_radius_sandwich",
    "edge_count_bounds",
    "spread",
    "digon_arc_bound",
    "monostore_spectrum",
    "spectral_projectors",
    "cassels_bound",
];

/// Lazily computed matrices and spectra of one graph.
pub struct GraphAnalysis<'a> {
    x: &'a MixedGraph,
    cfg: VerifyConfig,
    q: OnceCell<HermitianMatrixExact>,
    h: OnceCell<HermitianMatrixExact>,
    q_spectrum: OnceCell<Result<Spectrum, Error>>,
    h_spectrum: OnceCell<Result<Spectrum, Error>>,
    q_singular: OnceCell<bool>,
}

fn numeric_failure(name: &str, kind: CheckKind, err: &Error) -> TheoremReport {
    let mut r = TheoremReport::inapplicable(name, kind, "eigensolver failed");
    r.applicable = true;
    r.with_witness(err.to_string())
}

/// Two-sided bound `lower ≤ value ≤ upper`.
fn sandwich(name: &str, lower: f64, value: f64, upper: f64, tol: f64) -> TheoremReport {
    let slack = (value - lower).min(upper - value);
    TheoremReport {
        slack: Some(slack),
        holds: value - lower >= -tol && upper - value >= -tol,
        ..TheoremReport::upper_bound(name, CheckKind::Inequality, value, upper, tol)
    }
    .with_detail("lower", fmt_real(lower))
    .with_detail("lower_slack", fmt_real(value - lower))
    .with_detail("upper_slack", fmt_real(upper - value))
}

impl<'a> GraphAnalysis<'a> {
    pub fn new(x: &'a MixedGraph, cfg: VerifyConfig) -> Self {
        GraphAnalysis {
            x,
            cfg,
            q: OnceCell::new(),
            h: OnceCell::new(),
            q_spectrum: OnceCell::new(),
            h_spectrum: OnceCell::new(),
            q_singular: OnceCell::new(),
        }
    }

    pub fn q(&self) -> &HermitianMatrixExact {
        self.q.get_or_init(|| signless_laplacian(self.x))
    }

    pub fn h(&self) -> &HermitianMatrixExact {
        self.h.get_or_init(|| hermitian_adjacency(self.x))
    }

    pub fn q_spectrum(&self) -> Result<&Spectrum, &Error> {
        self.q_spectrum
            .get_or_init(|| eigenvalues(self.q(), self.cfg.convergence_tol))
            .as_ref()
    }

    pub fn h_spectrum(&self) -> Result<&Spectrum, &Error> {
        self.h_spectrum
            .get_or_init(|| eigenvalues(self.h(), self.cfg.convergence_tol))
            .as_ref()
    }

    pub fn q_singular(&self) -> bool {
        *self.q_singular.get_or_init(|| is_singular_exact(self.q()))
    }

    fn n(&self) -> usize {
        self.x.vertex_count()
    }

    fn m(&self) -> usize {
        self.x.edge_count()
    }

    /// `Σ_{uv ∈ E} (deg u + deg v)`.
    fn edge_degree_sum(&self) -> usize {
        let deg = self.x.degrees();
        self.x
            .edges()
            .iter()
            .map(|e| {
                let (u, v) = e.endpoints();
                deg[u] + deg[v]
            })
            .sum()
    }

    /// `(λ+2)^n χ_H(AL_X, λ) = (λ+2)^m χ_Q(X, λ+2)` as integer polynomials.
    pub fn charpoly_relation(&self) -> TheoremReport {
        let line = algebraic_line_graph(self.x);
        let chi_h = char_poly_exact(&hermitian_adjacency(&line));
        let chi_q = char_poly_exact(self.q());
        let two = IntPolynomial::linear(2);
        let lhs = &two.pow(self.n() as u32) * &chi_h;
        let rhs = &two.pow(self.m() as u32) * &chi_q.shift(2);
        let holds = lhs == rhs;
        let report = TheoremReport::exact(
            "charpoly_relation",
            holds,
            ReportValue::Exact(chi_h.to_string()),
            ReportValue::Exact(chi_q.to_string()),
        )
        .with_detail("n", self.n())
        .with_detail("m", self.m());
        if holds {
            report
        } else {
            report.with_witness(format!("(λ+2)^n χ_H = {lhs}; (λ+2)^m χ_Q(λ+2) = {rhs}"))
        }
    }

    /// `tr Q = 2m` and `tr Q² = 2m + Σ_{uv} (deg u + deg v)`, exactly and
    /// against the numeric spectrum.
    pub fn trace_identities(&self) -> TheoremReport {
        let name = "trace_identities";
        let tr = self.q().trace();
        let tr2 = self.q().trace_of_square();
        let want = 2 * self.m() as i64;
        let want2 = want + self.edge_degree_sum() as i64;
        let exact_ok = tr == want && tr2 == want2;
        let spec = match self.q_spectrum() {
            Ok(s) => s,
            Err(e) => return numeric_failure(name, CheckKind::Exact, e),
        };
        let dev1 = (spec.sum() - want as f64).abs();
        let dev2 = (spec.sum_of_squares() - want2 as f64).abs();
        let numeric_ok = dev1 <= self.cfg.trace_tol && dev2 <= self.cfg.trace_tol;
        let report = TheoremReport::exact(
            name,
            exact_ok && numeric_ok,
            ReportValue::Exact(format!("tr(Q)={tr}, tr(Q^2)={tr2}")),
            ReportValue::Exact(format!("2m={want}, 2m+sum(deg u+deg v)={want2}")),
        )
        .with_detail("exact", exact_ok)
        .with_detail("eigen_sum_error", format!("{dev1:.3e}"))
        .with_detail("eigen_square_sum_error", format!("{dev2:.3e}"));
        if exact_ok && !numeric_ok {
            report.with_witness("numeric spectrum disagrees with exact traces")
        } else {
            report
        }
    }

    /// On every connected component `C`: `det Q_γ(C) = 0` exactly when `C` is
    /// monostore and its underlying graph is bipartite.
    pub fn singularity(&self) -> TheoremReport {
        let mut mismatch = None;
        let components = self.x.components();
        for comp in &components {
            let sub = self.x.induced_subgraph(comp).expect("component vertices are valid");
            let singular = is_singular_exact(&signless_laplacian(&sub));
            let mono = sub.is_monostore();
            let bip = sub.underlying_graph().is_bipartite();
            if singular != (mono && bip) && mismatch.is_none() {
                mismatch = Some(format!(
                    "component {comp:?}: singular={singular} monostore={mono} bipartite={bip}"
                ));
            }
        }
        let singular = self.q_singular();
        let mono = self.x.is_monostore();
        let bip = self.x.underlying_graph().is_bipartite();
        let report = TheoremReport::exact(
            "singularity",
            mismatch.is_none(),
            ReportValue::Exact(format!("singular={singular}")),
            ReportValue::Exact(format!("monostore&bipartite={}", mono && bip)),
        )
        .with_detail("singular", singular)
        .with_detail("monostore", mono)
        .with_detail("bipartite", bip)
        .with_detail("components", components.len());
        match mismatch {
            Some(w) => report.with_witness(w),
            None => report,
        }
    }

    /// `max |μ_i| ≤ Δ`.
    pub fn hermitian_spectral_radius(&self) -> TheoremReport {
        let name = "hermitian_spectral_radius";
        if self.m() == 0 {
            return TheoremReport::inapplicable(name, CheckKind::Inequality, "no edges");
        }
        match self.h_spectrum() {
            Ok(s) => TheoremReport::upper_bound(
                name,
                CheckKind::Inequality,
                s.spectral_radius(),
                self.x.max_degree() as f64,
                self.cfg.assertion_tol,
            ),
            Err(e) => numeric_failure(name, CheckKind::Inequality, e),
        }
    }

    /// `Δ ≤ λ_1 ≤ max_{uv} (deg u + deg v)`.
    pub fn q_radius_sandwich(&self) -> TheoremReport {
        let name = "q_radius_sandwich";
        if self.m() == 0 {
            return TheoremReport::inapplicable(name, CheckKind::Inequality, "no edges");
        }
        let s = match self.q_spectrum() {
            Ok(s) => s,
            Err(e) => return numeric_failure(name, CheckKind::Inequality, e),
        };
        let deg = self.x.degrees();
        let upper = self
            .x
            .edges()
            .iter()
            .map(|e| {
                let (u, v) = e.endpoints();
                deg[u] + deg[v]
            })
            .max()
            .unwrap_or(0);
        sandwich(
            name,
            self.x.max_degree() as f64,
            s.largest().unwrap_or(0.0),
            upper as f64,
            self.cfg.assertion_tol,
        )
    }

    /// `(n/2) λ_n + 1 ≤ m ≤ (n/2) λ_1 - 1`, asserted only when a digon exists.
    /// Arc-only graphs get the same numbers as exploratory details.
    pub fn edge_count_bounds(&self) -> TheoremReport {
        let name = "edge_count_bounds";
        if self.m() == 0 {
            return TheoremReport::inapplicable(name, CheckKind::Inequality, "no edges");
        }
        let s = match self.q_spectrum() {
            Ok(s) => s,
            Err(e) => return numeric_failure(name, CheckKind::Inequality, e),
        };
        let half_n = self.n() as f64 / 2.0;
        let lower = half_n * s.smallest().unwrap_or(0.0) + 1.0;
        let upper = half_n * s.largest().unwrap_or(0.0) - 1.0;
        let m = self.m() as f64;
        if !self.x.has_digon() {
            let tol = self.cfg.assertion_tol;
            return TheoremReport::inapplicable(name, CheckKind::Inequality, "no digon")
                .with_detail("exploratory_lower", fmt_real(lower))
                .with_detail("exploratory_upper", fmt_real(upper))
                .with_detail("exploratory_holds", m - lower >= -tol && upper - m >= -tol);
        }
        sandwich(name, lower, m, upper, self.cfg.assertion_tol)
    }

    /// `λ_1 - λ_n ≥ 2` for any graph with an edge, and `≥ 4/n` (reported as a
    /// detail) when a digon exists.
    pub fn spread(&self) -> TheoremReport {
        let name = "spread";
        if self.m() == 0 {
            return TheoremReport::inapplicable(name, CheckKind::Inequality, "no edges");
        }
        let s = match self.q_spectrum() {
            Ok(s) => s,
            Err(e) => return numeric_failure(name, CheckKind::Inequality, e),
        };
        let spread = s.largest().unwrap_or(0.0) - s.smallest().unwrap_or(0.0);
        let tol = self.cfg.assertion_tol;
        let mut report = TheoremReport::upper_bound(name, CheckKind::Inequality, 2.0, spread, tol);
        if self.x.has_digon() {
            let bound = 4.0 / self.n() as f64;
            let ok = spread - bound >= -tol;
            report.holds &= ok;
            report = report
                .with_detail("reciprocal_bound", fmt_real(bound))
                .with_detail("reciprocal_holds", ok);
        }
        report
    }

    /// `λ_1 ≥ (4l + k)/n`.
    pub fn digon_arc_bound(&self) -> TheoremReport {
        let name = "digon_arc_bound";
        if self.m() == 0 {
            return TheoremReport::inapplicable(name, CheckKind::Inequality, "no edges");
        }
        match self.q_spectrum() {
            Ok(s) => {
                let bound = (4 * self.x.digon_count() + self.x.arc_count()) as f64 / self.n() as f64;
                TheoremReport::upper_bound(
                    name,
                    CheckKind::Inequality,
                    bound,
                    s.largest().unwrap_or(0.0),
                    self.cfg.assertion_tol,
                )
                .with_detail("l", self.x.digon_count())
                .with_detail("k", self.x.arc_count())
            }
            Err(e) => numeric_failure(name, CheckKind::Inequality, e),
        }
    }

    /// For connected monostore graphs: `σ(H_γ(X)) = σ(A(Γ(X)))` and
    /// `σ(Q_γ(X)) = σ(D + A(Γ(X)))`. `lhs` is the larger deviation.
    pub fn monostore_spectrum(&self) -> TheoremReport {
        let name = "monostore_spectrum";
        if self.m() == 0 {
            return TheoremReport::inapplicable(name, CheckKind::Inequality, "no edges");
        }
        if self.x.is_connected() != Ok(true) {
            return TheoremReport::inapplicable(name, CheckKind::Inequality, "not connected");
        }
        if !self.x.is_monostore() {
            return TheoremReport::inapplicable(name, CheckKind::Inequality, "not monostore");
        }
        let a = adjacency(&self.x.underlying_graph());
        let q_plain = degree_matrix(self.x).add(&a);
        let tol = self.cfg.convergence_tol;
        let spectra = (|| {
            Ok::<_, Error>((
                self.h_spectrum().map_err(Clone::clone)?.clone(),
                eigenvalues(&a, tol)?,
                self.q_spectrum().map_err(Clone::clone)?.clone(),
                eigenvalues(&q_plain, tol)?,
            ))
        })();
        match spectra {
            Ok((h, a, q, qa)) => {
                let dh = h.max_deviation(&a);
                let dq = q.max_deviation(&qa);
                TheoremReport::upper_bound(name, CheckKind::Inequality, dh.max(dq), self.cfg.assertion_tol, 0.0)
                    .with_detail("h_deviation", format!("{dh:.3e}"))
                    .with_detail("q_deviation", format!("{dq:.3e}"))
            }
            Err(e) => numeric_failure(name, CheckKind::Inequality, &e),
        }
    }

    /// Spectral decomposition of `Q`: `Σ P_i = I` and `Q = Σ λ_i P_i` up to a
    /// Frobenius residual of `tol·max(1, ‖Q‖_F)`, the projector row sums, and
    /// the unit-vector inequalities on every eigenvector. `lhs` is the larger
    /// residual.
    pub fn spectral_projectors(&self) -> TheoremReport {
        let name = "spectral_projectors";
        if self.m() == 0 {
            return TheoremReport::inapplicable(name, CheckKind::Inequality, "no edges");
        }
        let q = self.q().to_numeric();
        let dec = match spectral_decomposition(&q, self.cfg.convergence_tol) {
            Ok(d) => d,
            Err(e) => return numeric_failure(name, CheckKind::Inequality, &e),
        };
        let n = self.n();
        let frob = |v: &[num_complex::Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let mut id_err = dec.projector_sum();
        for i in 0..n {
            id_err[i * n + i] -= 1.0;
        }
        let mut rec_err = dec.reconstruct();
        for (r, qv) in rec_err.iter_mut().zip(q.entries()) {
            *r -= qv;
        }
        let identity_residual = frob(&id_err);
        let reconstruction_residual = frob(&rec_err) / q.frobenius_norm().max(1.0);
        let mut vectors_ok = true;
        for (_, v) in dec.eigenpairs() {
            match unit_vector_inequalities(v, self.cfg.assertion_tol) {
                Ok(r) => vectors_ok &= r.holds,
                Err(_) => vectors_ok = false,
            }
        }
        let mut report = TheoremReport::upper_bound(
            name,
            CheckKind::Inequality,
            identity_residual.max(reconstruction_residual),
            self.cfg.assertion_tol,
            0.0,
        )
        .with_detail("identity_residual", format!("{identity_residual:.3e}"))
        .with_detail("reconstruction_residual", format!("{reconstruction_residual:.3e}"))
        .with_detail("unit_vector_inequalities", vectors_ok);
        report.holds &= vectors_ok;
        report
    }

    /// Evaluates
    /// `(2m + 2 + Σ_{uv}(deg u + deg v)) / (m-1)² ≤ (λ_1 + λ_n)² / (n λ_1 λ_n)`
    /// for nonsingular `Q` and `m ≥ 2`. Recorded, never asserted.
    pub fn cassels_bound(&self) -> TheoremReport {
        let name = "cassels_bound";
        if self.m() < 2 {
            return TheoremReport::inapplicable(name, CheckKind::Exploratory, "fewer than two edges");
        }
        if self.q_singular() {
            return TheoremReport::inapplicable(name, CheckKind::Exploratory, "Q is singular");
        }
        let s = match self.q_spectrum() {
            Ok(s) => s,
            Err(e) => return numeric_failure(name, CheckKind::Exploratory, e),
        };
        let m = self.m() as f64;
        let (l1, ln) = (s.largest().unwrap_or(0.0), s.smallest().unwrap_or(0.0));
        let lhs = (2.0 * m + 2.0 + self.edge_degree_sum() as f64) / ((m - 1.0) * (m - 1.0));
        let rhs = (l1 + ln).powi(2) / (self.n() as f64 * l1 * ln);
        TheoremReport::upper_bound(name, CheckKind::Exploratory, lhs, rhs, self.cfg.assertion_tol)
    }

    pub fn run_all(&self) -> Vec<TheoremReport> {
        vec![
            verify_incidence_identities(self.x),
            verify_line_graph_gram(self.x),
            verify_line_graph_underlying(self.x),
            self.charpoly_relation(),
            self.trace_identities(),
            self.singularity(),
            self.hermitian_spectral_radius(),
            self.q_radius_sandwich(),
            self.edge_count_bounds(),
            self.spread(),
            self.digon_arc_bound(),
            self.monostore_spectrum(),
            self.spectral_projectors(),
            self.cassels_bound(),
        ]
    }
}

macro_rules! single_checks {
    ($($(#[$doc:meta])* $fn_name:ident => $method:ident;)*) => {
        $(
            $(#[$doc])*
            pub fn $fn_name(x: &MixedGraph, cfg: &VerifyConfig) -> TheoremReport {
                GraphAnalysis::new(x, *cfg).$method()
            }
        )*
    };
}

single_checks! {
    check_charpoly_relation => charpoly_relation;
    check_trace_identities => trace_identities;
    check_singularity => singularity;
    check_h_spectral_radius => hermitian_spectral_radius;
    check_lambda1_sandwich => q_radius_sandwich;
    check_edge_count_bounds => edge_count_bounds;
    check_spread => spread;
    check_digon_arc_bound => digon_arc_bound;
    check_monostore_spectrum => monostore_spectrum;
    check_spectral_projectors => spectral_projectors;
    check_cassels_bound => cassels_bound;
}

/// Every check on one graph, in [`CHECK_NAMES`] order.
pub fn run_all(x: &MixedGraph, cfg: &VerifyConfig) -> Vec<TheoremReport> {
    GraphAnalysis::new(x, *cfg).run_all()
}

/// True when an applicable exact identity failed.
pub fn any_exact_failure(reports: &[TheoremReport]) -> bool {
    reports.iter().any(|r| r.kind == CheckKind::Exact && r.failed())
}

/// True when an applicable inequality failed.
pub fn any_inequality_failure(reports: &[TheoremReport]) -> bool {
    reports.iter().any(|r| r.kind == CheckKind::Inequality && r.failed())
}
