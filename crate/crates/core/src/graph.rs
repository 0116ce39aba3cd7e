//! Mixed graphs, their underlying simple graphs, walks and the monostore test.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::eisenstein::OmegaPower;
use crate::error::{Error, Result};

/// One connection of a mixed graph.
///
/// A digon is stored with `u < v`. An arc runs from `tail` (initial vertex)
/// to `head` (terminal vertex).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Edge {
    Digon(usize, usize),
    Arc { tail: usize, head: usize },
}

impl Edge {
    pub fn digon(u: usize, v: usize) -> Self {
        Edge::Digon(u.min(v), u.max(v))
    }

    pub fn arc(tail: usize, head: usize) -> Self {
        Edge::Arc { tail, head }
    }

    pub fn is_digon(&self) -> bool {
        matches!(self, Edge::Digon(..))
    }

    /// Endpoints as `(min, max)`.
    pub fn endpoints(&self) -> (usize, usize) {
        match *self {
            Edge::Digon(u, v) => (u, v),
            Edge::Arc { tail, head } => (tail.min(head), tail.max(head)),
        }
    }

    pub fn contains(&self, vertex: usize) -> bool {
        let (u, v) = self.endpoints();
        vertex == u || vertex == v
    }

    /// Incidence weight of `vertex` on this edge: `1` on a digon, `ω` at an
    /// arc's head, `ω²` at its tail, `None` when not incident.
    pub fn incidence(&self, vertex: usize) -> Option<OmegaPower> {
        match *self {
            Edge::Digon(u, v) if vertex == u || vertex == v => Some(OmegaPower::ONE),
            Edge::Arc { head, .. } if vertex == head => Some(OmegaPower::OMEGA),
            Edge::Arc { tail, .. } if vertex == tail => Some(OmegaPower::OMEGA_SQUARED),
            _ => None,
        }
    }

    /// Sort key of the canonical edge order: digons before arcs, then
    /// lexicographic by `(min endpoint, max endpoint)`.
    pub fn canonical_key(&self) -> (bool, usize, usize) {
        let (u, v) = self.endpoints();
        (!self.is_digon(), u, v)
    }
}

/// A mixed graph on vertices `0..n`.
///
/// Every vertex pair carries at most one of: a digon, an arc one way, an arc
/// the other way. Anti-parallel arc pairs are rejected; a two-way connection
/// must be declared as a digon.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    n: usize,
    /// Canonical order.
    edges: Vec<Edge>,
    /// `adjacency[u]` holds `(v, h_uv)` sorted by `v`.
    adjacency: Vec<Vec<(usize, OmegaPower)>>,
}

impl MixedGraph {
    /// A graph with zero vertices is representable (it is the line graph of an
    /// edgeless graph), but operations that need a vertex reject it.
    pub fn new(
        n: usize,
        digons: impl IntoIterator<Item = (usize, usize)>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let edges = digons
            .into_iter()
            .map(|(u, v)| Edge::digon(u, v))
            .chain(arcs.into_iter().map(|(t, h)| Edge::arc(t, h)));
        Self::from_edges(n, edges)
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut adjacency: Vec<Vec<(usize, OmegaPower)>> = vec![Vec::new(); n];
        let mut list = Vec::new();
        let mut seen = BTreeMap::new();
        for edge in edges {
            let (u, v) = edge.endpoints();
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if let Some(prev) = seen.insert((u, v), edge) {
                return Err(match (prev, edge) {
                    (Edge::Arc { tail, head }, Edge::Arc { tail: t2, .. }) if tail != t2 => {
                        Error::AntiParallelArcs(tail, head)
                    }
                    _ => Error::DuplicatePair(u, v),
                });
            }
            match edge {
                Edge::Digon(u, v) => {
                    adjacency[u].push((v, OmegaPower::ONE));
                    adjacency[v].push((u, OmegaPower::ONE));
                }
                Edge::Arc { tail, head } => {
                    adjacency[tail].push((head, OmegaPower::OMEGA));
                    adjacency[head].push((tail, OmegaPower::OMEGA_SQUARED));
                }
            }
            list.push(edge);
        }
        list.sort_by_key(Edge::canonical_key);
        for row in &mut adjacency {
            row.sort_by_key(|&(v, _)| v);
        }
        Ok(MixedGraph { n, edges: list, adjacency })
    }

    pub fn edgeless(n: usize) -> Self {
        MixedGraph { n, edges: Vec::new(), adjacency: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `m`, the number of digons plus arcs.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `l`, the number of digons.
    pub fn digon_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_digon()).count()
    }

    /// `k`, the number of arcs.
    pub fn arc_count(&self) -> usize {
        self.edge_count() - self.digon_count()
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn digons(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().filter_map(|e| match *e {
            Edge::Digon(u, v) => Some((u, v)),
            Edge::Arc { .. } => None,
        })
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().filter_map(|e| match *e {
            Edge::Arc { tail, head } => Some((tail, head)),
            Edge::Digon(..) => None,
        })
    }

    /// Neighbours of `u` with the Hermitian adjacency entry `h_uv`.
    pub fn neighbors(&self, u: usize) -> &[(usize, OmegaPower)] {
        &self.adjacency[u]
    }

    /// The entry `h_uv` of the Hermitian adjacency matrix, `None` when `u` and
    /// `v` are not adjacent.
    pub fn connection(&self, u: usize, v: usize) -> Option<OmegaPower> {
        let row = self.adjacency.get(u)?;
        row.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| row[i].1)
    }

    pub fn degree(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(self.adjacency[u].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, n: self.n })
        }
    }

    /// `Γ(X)`: every digon and arc becomes one undirected edge.
    pub fn underlying_graph(&self) -> Graph {
        Graph {
            n: self.n,
            edges: self.edges.iter().map(Edge::endpoints).collect(),
        }
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.components().len() == 1)
    }

    /// Vertex sets of the connected components, each sorted, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if label[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![root];
            label[root] = id;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in &self.adjacency[u] {
                    if label[v] == usize::MAX {
                        label[v] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The subgraph induced on `vertices`, relabelled `0..vertices.len()` in
    /// the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<MixedGraph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let edges = self.edges.iter().filter_map(|e| {
            let (u, v) = e.endpoints();
            if index[u] == usize::MAX || index[v] == usize::MAX {
                return None;
            }
            Some(match *e {
                Edge::Digon(u, v) => Edge::digon(index[u], index[v]),
                Edge::Arc { tail, head } => Edge::arc(index[tail], index[head]),
            })
        });
        MixedGraph::from_edges(vertices.len(), edges.collect::<Vec<_>>())
    }

    /// `γ`-weight of a walk: the product of `h` entries along consecutive
    /// vertex pairs. A single-vertex walk has weight `1`.
    pub fn gamma_weight(&self, walk: &Walk) -> Result<OmegaPower> {
        for &v in walk.vertices() {
            self.check_vertex(v)?;
        }
        walk.vertices().windows(2).try_fold(OmegaPower::ONE, |acc, pair| {
            self.connection(pair[0], pair[1])
                .map(|h| acc * h)
                .ok_or(Error::NotAWalk(pair[0], pair[1]))
        })
    }

    /// Spanning-forest gauge test. Returns `g` with `conj(g_u) h_uv g_v = 1`
    /// on every edge when every cycle has weight `1`, and `None` otherwise.
    pub fn monostore_gauge(&self) -> Option<Gauge> {
        let mut gauge: Vec<Option<OmegaPower>> = vec![None; self.n];
        for root in 0..self.n {
            if gauge[root].is_some() {
                continue;
            }
            gauge[root] = Some(OmegaPower::ONE);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let gu = gauge[u].expect("queued vertices are gauged");
                for &(v, h) in &self.adjacency[u] {
                    let want = gu * h.conj();
                    match gauge[v] {
                        None => {
                            gauge[v] = Some(want);
                            queue.push_back(v);
                        }
                        Some(gv) if gv != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Gauge(gauge.into_iter().map(|g| g.expect("every vertex reached")).collect()))
    }

    pub fn is_monostore(&self) -> bool {
        self.monostore_gauge().is_some()
    }

    pub fn has_digon(&self) -> bool {
        self.edges.first().is_some_and(Edge::is_digon)
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicatePair(u.min(v), u.max(v)));
            }
        }
        Ok(Graph { n, edges: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: perm.len() });
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// A proper 2-colouring (`false`/`true` per vertex), or `None` when the
    /// graph has an odd cycle. Uncoloured components start at `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let adj = self.adjacency_lists();
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u]?;
                for &v in &adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        color.into_iter().collect()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

/// A vertex sequence `v1, v2, ..., vk` with at least one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk(Vec<usize>);

impl Walk {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyWalk);
        }
        Ok(Walk(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }
}

/// A diagonal switching matrix `S = diag(g)` with every `g_v` a power of `ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gauge(Vec<OmegaPower>);

impl Gauge {
    pub fn new(values: Vec<OmegaPower>) -> Self {
        Gauge(values)
    }

    pub fn identity(n: usize) -> Self {
        Gauge(vec![OmegaPower::ONE; n])
    }

    pub fn from_exponents(exponents: &[u32]) -> Self {
        Gauge(exponents.iter().map(|&e| OmegaPower::new(e)).collect())
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        Gauge((0..n).map(|_| OmegaPower::new(rng.gen_range(0..3))).collect())
    }

    pub fn values(&self) -> &[OmegaPower] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Random mixed graph: each unordered pair independently becomes a digon with
/// probability `p_digon`, an arc with probability `p_arc` (direction chosen
/// uniformly), and is left unconnected otherwise. Deterministic in `seed`.
pub fn random_mixed_graph(n: usize, p_digon: f64, p_arc: f64, seed: u64) -> Result<MixedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_mixed_graph_with(n, p_digon, p_arc, &mut rng)
}

pub fn random_mixed_graph_with(
    n: usize,
    p_digon: f64,
    p_arc: f64,
    rng: &mut impl Rng,
) -> Result<MixedGraph> {
    let valid = |p: f64| p.is_finite() && (0.0..=1.0).contains(&p);
    if !valid(p_digon) || !valid(p_arc) || p_digon + p_arc > 1.0 + 1e-12 {
        return Err(Error::InvalidProbability { p_digon, p_arc });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let r: f64 = rng.gen();
            if r < p_digon {
                edges.push(Edge::digon(u, v));
            } else if r < p_digon + p_arc {
                if rng.gen::<bool>() {
                    edges.push(Edge::arc(u, v));
                } else {
                    edges.push(Edge::arc(v, u));
                }
            }
        }
    }
    MixedGraph::from_edges(n, edges)
}
