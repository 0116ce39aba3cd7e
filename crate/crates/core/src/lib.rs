//! Mixed graphs with Eisenstein-integer Hermitian adjacency `H_γ`, their
//! signless Laplacian `Q_γ = D + H_γ`, incidence matrices, algebraic line
//! graphs, and numeric and exact spectra, together with checks of the
//! identities and eigenvalue bounds that tie them together.

pub mod eisenstein;
pub mod error;
pub mod graph;
pub mod line_graph;
pub mod matrices;
pub mod report;
pub mod spectra;
pub mod verify;

pub use eisenstein::{Eisenstein, EisensteinRational, OmegaPower};
pub use error::{Error, Result};
pub use graph::{random_mixed_graph, Edge, Gauge, Graph, MixedGraph, Walk};
pub use line_graph::{algebraic_line_graph, classic_line_graph};
pub use matrices::{
    apply_switching, hermitian_adjacency, incidence_matrix, signless_laplacian, HermitianMatrixExact,
    HermitianMatrixNumeric, IncidenceMatrixExact,
};
pub use report::{CheckKind, ReportValue, TheoremReport};
pub use spectra::{char_poly_exact, eigenvalues, spectral_decomposition, IntPolynomial, Spectrum};
pub use verify::{run_all, VerifyConfig};
