//! Hermitian adjacency, incidence, degree and signless Laplacian matrices.
//!
//! Exact matrices carry Eisenstein integer entries. The numeric variant holds
//! complex doubles and is what the eigensolver consumes.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::eisenstein::{Eisenstein, OmegaPower};
use crate::error::{Error, Result};
use crate::graph::{Edge, Gauge, Graph, MixedGraph};
use crate::line_graph::algebraic_line_graph;
use crate::report::{ReportValue, TheoremReport};

/// Largest entrywise deviation from Hermitian symmetry accepted by
/// [`HermitianMatrixNumeric::new`].
pub const HERMITIAN_TOLERANCE: f64 = 1e-10;

/// Square matrix over `Z[ω]` with `entry(j, i) = conj(entry(i, j))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HermitianMatrixExact {
    n: usize,
    entries: Vec<Eisenstein>,
}

impl HermitianMatrixExact {
    /// Row-major entries; rejects anything that is not Hermitian.
    pub fn new(n: usize, entries: Vec<Eisenstein>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, got: entries.len() });
        }
        let m = HermitianMatrixExact { n, entries };
        for i in 0..n {
            for j in i..n {
                if m.get(j, i) != m.get(i, j).conj() {
                    let dev = (m.get(j, i).to_complex() - m.get(i, j).to_complex().conj()).norm();
                    return Err(Error::NotHermitian(dev));
                }
            }
        }
        Ok(m)
    }

    pub fn zero(n: usize) -> Self {
        HermitianMatrixExact { n, entries: vec![Eisenstein::zero(); n * n] }
    }

    /// `c·I`.
    pub fn scalar(n: usize, c: i64) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = Eisenstein::from_int(c);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Eisenstein {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Eisenstein] {
        &self.entries
    }

    /// Trace; diagonal entries are real so this is a rational integer.
    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i).a).sum()
    }

    /// `tr(M²) = Σ_ij |m_ij|²` for Hermitian `M`.
    pub fn trace_of_square(&self) -> i64 {
        self.entries.iter().map(Eisenstein::norm).sum()
    }

    /// Sum of two Hermitian matrices of equal size.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        HermitianMatrixExact {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| *a + *b).collect(),
        }
    }

    /// `S* M S` for the diagonal `S = diag(g)`.
    pub fn conjugate_by(&self, gauge: &Gauge) -> Result<Self> {
        if gauge.len() != self.n {
            return Err(Error::GaugeLength { expected: self.n, got: gauge.len() });
        }
        let g = gauge.values();
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                let s = (g[i].conj() * g[j]).to_eisenstein();
                out.entries[i * self.n + j] = self.get(i, j) * s;
            }
        }
        Ok(out)
    }

    /// First entry where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((self.n.min(other.n), self.n.min(other.n)));
        }
        (0..self.n * self.n)
            .find(|&k| self.entries[k] != other.entries[k])
            .map(|k| (k / self.n, k % self.n))
    }

    pub fn to_numeric(&self) -> HermitianMatrixNumeric {
        HermitianMatrixNumeric {
            n: self.n,
            entries: self.entries.iter().map(Eisenstein::to_complex).collect(),
        }
    }
}

/// Complex Hermitian matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrixNumeric {
    n: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrixNumeric {
    /// Rejects inputs further than [`HERMITIAN_TOLERANCE`] from Hermitian and
    /// stores the Hermitian part `(M + M*)/2` of what remains.
    pub fn new(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, got: entries.len() });
        }
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((entries[j * n + i] - entries[i * n + j].conj()).norm());
            }
        }
        if !worst.is_finite() || worst > HERMITIAN_TOLERANCE {
            return Err(Error::NotHermitian(worst));
        }
        let mut m = HermitianMatrixNumeric { n, entries };
        for i in 0..n {
            for j in i..n {
                let avg = (m.entries[i * n + j] + m.entries[j * n + i].conj()) * 0.5;
                m.entries[i * n + j] = avg;
                m.entries[j * n + i] = avg.conj();
            }
        }
        Ok(m)
    }

    pub fn from_real_symmetric(n: usize, entries: &[f64]) -> Result<Self> {
        Self::new(n, entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Exact incidence matrix: rows are vertices, columns follow `edge_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrixExact {
    rows: usize,
    edge_order: Vec<Edge>,
    entries: Vec<Eisenstein>,
}

impl IncidenceMatrixExact {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.edge_order.len()
    }

    pub fn edge_order(&self) -> &[Edge] {
        &self.edge_order
    }

    pub fn get(&self, i: usize, j: usize) -> Eisenstein {
        self.entries[i * self.cols() + j]
    }

    pub fn column(&self, j: usize) -> Vec<Eisenstein> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// `B B*`.
    pub fn gram_rows(&self) -> HermitianMatrixExact {
        let (n, m) = (self.rows, self.cols());
        let mut out = HermitianMatrixExact::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[i * n + j] = (0..m)
                    .map(|k| self.get(i, k) * self.get(j, k).conj())
                    .fold(Eisenstein::zero(), |acc, x| acc + x);
            }
        }
        out
    }

    /// `B* B`.
    pub fn gram_cols(&self) -> HermitianMatrixExact {
        let (n, m) = (self.rows, self.cols());
        let mut out = HermitianMatrixExact::zero(m);
        for i in 0..m {
            for j in 0..m {
                out.entries[i * m + j] = (0..n)
                    .map(|k| self.get(k, i).conj() * self.get(k, j))
                    .fold(Eisenstein::zero(), |acc, x| acc + x);
            }
        }
        out
    }
}

/// `H_γ(X)`: `1` on digons, `ω` for an arc `i → j`, `ω²` for `j → i`.
pub fn hermitian_adjacency(x: &MixedGraph) -> HermitianMatrixExact {
    let n = x.vertex_count();
    let mut m = HermitianMatrixExact::zero(n);
    for u in 0..n {
        for &(v, h) in x.neighbors(u) {
            m.entries[u * n + v] = h.to_eisenstein();
        }
    }
    m
}

/// `H_α(X)` with `α = e^{iθ}`.
pub fn hermitian_adjacency_alpha(x: &MixedGraph, theta: f64) -> HermitianMatrixNumeric {
    let n = x.vertex_count();
    let alpha = Complex64::from_polar(1.0, theta);
    let mut entries = vec![Complex64::zero(); n * n];
    for u in 0..n {
        for &(v, h) in x.neighbors(u) {
            entries[u * n + v] = match h {
                OmegaPower::ONE => Complex64::one(),
                OmegaPower::OMEGA => alpha,
                _ => alpha.conj(),
            };
        }
    }
    HermitianMatrixNumeric { n, entries }
}

/// 0/1 adjacency matrix of an undirected graph.
pub fn adjacency(g: &Graph) -> HermitianMatrixExact {
    let n = g.vertex_count();
    let mut m = HermitianMatrixExact::zero(n);
    for (u, v) in g.edges() {
        m.entries[u * n + v] = Eisenstein::one();
        m.entries[v * n + u] = Eisenstein::one();
    }
    m
}

/// 0/1 vertex-edge incidence matrix of an undirected graph, columns in
/// lexicographic edge order.
pub fn classic_incidence(g: &Graph) -> IncidenceMatrixExact {
    let edges: Vec<Edge> = g.edges().map(|(u, v)| Edge::digon(u, v)).collect();
    incidence_for(g.vertex_count(), edges)
}

pub fn degree_matrix(x: &MixedGraph) -> HermitianMatrixExact {
    let n = x.vertex_count();
    let mut m = HermitianMatrixExact::zero(n);
    for (u, d) in x.degrees().into_iter().enumerate() {
        m.entries[u * n + u] = Eisenstein::from_int(d as i64);
    }
    m
}

/// `B_γ(X)`: `1` where a vertex meets a digon, `ω` at an arc's terminal
/// vertex, `ω²` at its initial vertex. Columns follow the canonical edge order.
pub fn incidence_matrix(x: &MixedGraph) -> IncidenceMatrixExact {
    incidence_for(x.vertex_count(), x.edges().to_vec())
}

fn incidence_for(rows: usize, edge_order: Vec<Edge>) -> IncidenceMatrixExact {
    let m = edge_order.len();
    let mut entries = vec![Eisenstein::zero(); rows * m];
    for (j, e) in edge_order.iter().enumerate() {
        let (u, v) = e.endpoints();
        for w in [u, v] {
            if let Some(b) = e.incidence(w) {
                entries[w * m + j] = b.to_eisenstein();
            }
        }
    }
    IncidenceMatrixExact { rows, edge_order, entries }
}

/// `Q_γ = B_γ B_γ*`, checked against `D + H_γ`.
///
/// # Panics
///
/// If the two constructions disagree, which would be a construction bug.
pub fn signless_laplacian(x: &MixedGraph) -> HermitianMatrixExact {
    let q = incidence_matrix(x).gram_rows();
    let sum = degree_matrix(x).add(&hermitian_adjacency(x));
    assert_eq!(q, sum, "B B* differs from D + H");
    q
}

fn matrix_witness(what: &str, lhs: &HermitianMatrixExact, rhs: &HermitianMatrixExact) -> Option<String> {
    lhs.first_difference(rhs).map(|(i, j)| {
        if lhs.dim() != rhs.dim() {
            format!("{what}: dimensions {} vs {}", lhs.dim(), rhs.dim())
        } else {
            format!("{what}: entry ({i},{j}) {} vs {}", lhs.get(i, j), rhs.get(i, j))
        }
    })
}

/// Exact check of the three incidence identities: the incidence matrix of
/// `Γ(X)` is the classic 0/1 one, `B B* = D + H_γ(X)` and
/// `B* B = 2I + H_γ(AL_X)`.
pub fn verify_incidence_identities(x: &MixedGraph) -> TheoremReport {
    let gamma = x.underlying_graph();
    let flattened = MixedGraph::new(gamma.vertex_count(), gamma.edges(), [])
        .expect("underlying graph is simple");
    let underlying_ok = incidence_matrix(&flattened) == classic_incidence(&gamma);

    let b = incidence_matrix(x);
    let bbstar = b.gram_rows();
    let d_plus_h = degree_matrix(x).add(&hermitian_adjacency(x));
    let bstarb = b.gram_cols();
    let line = algebraic_line_graph(x);
    let two_i_plus_h = HermitianMatrixExact::scalar(x.edge_count(), 2).add(&hermitian_adjacency(&line));

    let mut witness = None;
    if !underlying_ok {
        witness = Some("incidence of the underlying graph is not 0/1".to_string());
    }
    witness = witness
        .or_else(|| matrix_witness("B B* vs D + H", &bbstar, &d_plus_h))
        .or_else(|| matrix_witness("B* B vs 2I + H(AL)", &bstarb, &two_i_plus_h));
    let holds = witness.is_none();
    let report = TheoremReport::exact(
        "incidence_products",
        holds,
        ReportValue::Exact("B B*, B* B".into()),
        ReportValue::Exact("D + H, 2I + H(AL)".into()),
    )
    .with_detail("underlying_incidence", underlying_ok)
    .with_detail("row_gram", bbstar == d_plus_h)
    .with_detail("column_gram", bstarb == two_i_plus_h);
    match witness {
        Some(w) => report.with_witness(w),
        None => report,
    }
}

/// The mixed graph `X'` with `H_γ(X') = S* H_γ(X) S`, `S = diag(g)`.
///
/// Each edge `uv` is re-weighted to `conj(g_u) h_uv g_v`, which is again a
/// cube root of unity, so `X'` has the same underlying graph and degrees.
pub fn apply_switching(x: &MixedGraph, gauge: &Gauge) -> Result<MixedGraph> {
    if gauge.len() != x.vertex_count() {
        return Err(Error::GaugeLength { expected: x.vertex_count(), got: gauge.len() });
    }
    let g = gauge.values();
    let edges = x.edges().iter().map(|e| {
        let (u, v) = e.endpoints();
        let h = x.connection(u, v).expect("edge endpoints are adjacent");
        match g[u].conj() * h * g[v] {
            OmegaPower::ONE => Edge::digon(u, v),
            OmegaPower::OMEGA => Edge::arc(u, v),
            _ => Edge::arc(v, u),
        }
    });
    MixedGraph::from_edges(x.vertex_count(), edges.collect::<Vec<_>>())
}
