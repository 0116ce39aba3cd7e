//! Classic line graphs and the algebraic line mixed graph `AL_X`.

use crate::graph::{Edge, Graph, MixedGraph};
use crate::matrices::{hermitian_adjacency, incidence_matrix, HermitianMatrixExact};
use crate::report::{ReportValue, TheoremReport};

/// `L(G)`: vertex `i` is the `i`-th edge of `G` in lexicographic order, and two
/// vertices are adjacent when the edges share an endpoint.
pub fn classic_line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Graph::new(edges.len(), out).expect("line graph is simple")
}

/// Connection between two distinct edges of `X` that share a vertex.
fn connect(i: usize, ei: &Edge, j: usize, ej: &Edge) -> Option<Edge> {
    let mut fired = Vec::new();
    match (*ei, *ej) {
        (Edge::Arc { tail: ti, head: hi }, Edge::Arc { tail: tj, head: hj }) => {
            if hi == tj {
                fired.push(Edge::arc(i, j));
            }
            if hj == ti {
                fired.push(Edge::arc(j, i));
            }
            if ti == tj || hi == hj {
                fired.push(Edge::digon(i, j));
            }
        }
        (Edge::Digon(..), Edge::Arc { tail, head }) => {
            if ei.contains(head) {
                fired.push(Edge::arc(i, j));
            }
            if ei.contains(tail) {
                fired.push(Edge::arc(j, i));
            }
        }
        (Edge::Arc { .. }, Edge::Digon(..)) => return connect(j, ej, i, ei),
        (Edge::Digon(a, b), Edge::Digon(..)) => {
            if ej.contains(a) || ej.contains(b) {
                fired.push(Edge::digon(i, j));
            }
        }
    }
    assert!(fired.len() <= 1, "conflicting line-graph rules for edges {ei:?} and {ej:?}");
    fired.pop()
}

/// `AL_X`, whose vertices are the edges of `X` in canonical order.
///
/// Two edges of `X` that share a vertex are joined by:
/// * an arc `e_i → e_j` between arcs when the head of `e_i` is the tail of `e_j`;
/// * an arc from a digon `e_i` to an arc `e_j` whose head lies on `e_i`;
/// * an arc from an arc `e_j` to a digon `e_i` when the tail of `e_j` lies on `e_i`;
/// * a digon between arcs with a common tail or a common head;
/// * a digon between digons sharing a vertex.
pub fn algebraic_line_graph(x: &MixedGraph) -> MixedGraph {
    let edges = x.edges();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if let Some(e) = connect(i, &edges[i], j, &edges[j]) {
                out.push(e);
            }
        }
    }
    MixedGraph::from_edges(edges.len(), out).expect("line graph rules are exclusive")
}

/// `B_γ* B_γ = 2I + H_γ(AL_X)`, exactly, in the shared canonical edge order.
pub fn verify_line_graph_gram(x: &MixedGraph) -> TheoremReport {
    let lhs = incidence_matrix(x).gram_cols();
    let rhs = HermitianMatrixExact::scalar(x.edge_count(), 2)
        .add(&hermitian_adjacency(&algebraic_line_graph(x)));
    let report = TheoremReport::exact(
        "line_graph_gram",
        lhs == rhs,
        ReportValue::Exact("B* B".into()),
        ReportValue::Exact("2I + H(AL)".into()),
    )
    .with_detail("order", x.edge_count());
    match lhs.first_difference(&rhs) {
        Some((i, j)) => report.with_witness(format!("entry ({i},{j}) {} vs {}", lhs.get(i, j), rhs.get(i, j))),
        None => report,
    }
}

/// `Γ(AL_X) = L(Γ(X))` as labelled graphs, identifying each vertex of `AL_X`
/// with the underlying edge it stands for.
pub fn verify_line_graph_underlying(x: &MixedGraph) -> TheoremReport {
    let gamma = x.underlying_graph();
    let lexicographic: Vec<(usize, usize)> = gamma.edges().collect();
    let perm: Vec<usize> = x
        .edges()
        .iter()
        .map(|e| lexicographic.binary_search(&e.endpoints()).expect("edge of Γ(X)"))
        .collect();
    let lhs = algebraic_line_graph(x)
        .underlying_graph()
        .relabel(&perm)
        .expect("permutation of edge indices");
    let rhs = classic_line_graph(&gamma);
    let holds = lhs == rhs;
    let report = TheoremReport::exact(
        "line_graph_underlying",
        holds,
        ReportValue::Exact(format!("{} edges", lhs.edge_count())),
        ReportValue::Exact(format!("{} edges", rhs.edge_count())),
    );
    if holds {
        return report;
    }
    let diff = lhs
        .edges()
        .find(|&(u, v)| !rhs.has_edge(u, v))
        .or_else(|| rhs.edges().find(|&(u, v)| !lhs.has_edge(u, v)));
    report.with_witness(format!("first differing pair {diff:?}"))
}
