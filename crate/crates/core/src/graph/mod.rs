//! Signed graphs: data model, degree predicates, switching, balance and the
//! s-neighbourhood corona.
//!
//! A [`SignedGraph`] is an immutable value. Every operation that "modifies" a
//! graph returns a new one.

mod io;
mod iso;

pub use io::{format_graph, parse_graph, read_graph, write_graph, ParseError, ParseErrorKind};
pub use iso::{
    is_isomorphic, is_isomorphic_with_cap, is_switching_isomorphic,
    is_switching_isomorphic_with_cap, IsoError, DEFAULT_ISO_CAP,
};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Sign of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn from_i64(s: i64) -> Option<Sign> {
        match s {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    /// Product of two signs.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Positive => write!(f, "+"),
            Sign::Negative => write!(f, "-"),
        }
    }
}

/// A signed edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {u}-{v} given twice with conflicting signs")]
    DuplicateEdge { u: usize, v: usize },
    #[error("sign must be +1 or -1, got {0}")]
    InvalidSign(i64),
}

/// A signed graph `S = (G, σ)` on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

/// Per-vertex degree counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VertexDegrees {
    pub degree: usize,
    pub positive: usize,
    pub negative: usize,
    pub net: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub vertices: Vec<VertexDegrees>,
}

impl DegreeProfile {
    pub fn degree(&self, v: usize) -> usize {
        self.vertices[v].degree
    }

    pub fn net(&self, v: usize) -> i64 {
        self.vertices[v].net
    }

    fn common<T: PartialEq + Copy>(&self, f: impl Fn(&VertexDegrees) -> T) -> Option<T> {
        let first = f(self.vertices.first()?);
        self.vertices.iter().all(|d| f(d) == first).then_some(first)
    }
}

/// A set of vertices to switch at.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SwitchSet {
    members: Vec<bool>,
}

impl SwitchSet {
    pub fn new(n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut members = vec![false; n];
        for v in vertices {
            if v >= n {
                return Err(GraphError::IndexOutOfRange { index: v, n });
            }
            members[v] = true;
        }
        Ok(SwitchSet { members })
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.iter().all(|m| !m)
    }
}

impl SignedGraph {
    /// Builds a graph from `(u, v, s)` triples with `s ∈ {+1, −1}`.
    pub fn from_edge_list(
        n: usize,
        triples: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (u, v, s) in triples {
            let sign = Sign::from_i64(s).ok_or(GraphError::InvalidSign(s))?;
            edges.push((u, v, sign));
        }
        Self::from_signed_edges(n, edges)
    }

    pub fn from_signed_edges(
        n: usize,
        triples: impl IntoIterator<Item = (usize, usize, Sign)>,
    ) -> Result<Self, GraphError> {
        let mut edges: Vec<Edge> = Vec::new();
        for (a, b, sign) in triples {
            for index in [a, b] {
                if index >= n {
                    return Err(GraphError::IndexOutOfRange { index, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            edges.push(Edge { u, v, sign });
        }
        edges.sort();
        edges.dedup();
        for w in edges.windows(2) {
            if w[0].u == w[1].u && w[0].v == w[1].v {
                return Err(GraphError::DuplicateEdge { u: w[0].u, v: w[0].v });
            }
        }
        Ok(SignedGraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        SignedGraph { n, edges: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sign of the edge `uv`, if present.
    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by(|e| (e.u, e.v).cmp(&(a, b)))
            .ok()
            .map(|i| self.edges[i].sign)
    }

    /// Signed adjacency lists.
    pub fn neighbours(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        adj
    }

    pub fn degrees(&self) -> DegreeProfile {
        let mut vertices = vec![VertexDegrees::default(); self.n];
        for e in &self.edges {
            for x in [e.u, e.v] {
                let d = &mut vertices[x];
                d.degree += 1;
                match e.sign {
                    Sign::Positive => d.positive += 1,
                    Sign::Negative => d.negative += 1,
                }
                d.net += e.sign.value();
            }
        }
        DegreeProfile { vertices }
    }

    /// Common degree, if the underlying graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        self.degrees().common(|d| d.degree)
    }

    /// Common net degree, if the graph is net-regular.
    pub fn net_regularity(&self) -> Option<i64> {
        self.degrees().common(|d| d.net)
    }

    /// Common negative degree. Equivalent to the Laplacian having constant
    /// row sums (each row of `L` sums to `2·d⁻`).
    pub fn negative_regularity(&self) -> Option<usize> {
        self.degrees().common(|d| d.negative)
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Positive)
    }

    /// Assigns a ±1 potential along a BFS forest; returns the potential if
    /// every edge satisfies `σ(uv) = x_u·x_v`, i.e. the graph is balanced.
    pub fn balancing_potential(&self) -> Option<Vec<Sign>> {
        let adj = self.neighbours();
        let mut pot: Vec<Option<Sign>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if pot[root].is_some() {
                continue;
            }
            pot[root] = Some(Sign::Positive);
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                let px = pot[x].unwrap();
                for &(y, s) in &adj[x] {
                    let want = px.times(s);
                    match pot[y] {
                        None => {
                            pot[y] = Some(want);
                            queue.push_back(y);
                        }
                        Some(py) if py != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(pot.into_iter().map(Option::unwrap).collect())
    }

    /// True iff every cycle has positive sign.
    pub fn is_balanced(&self) -> bool {
        self.balancing_potential().is_some()
    }

    /// Connected components of the underlying graph, as vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.neighbours();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut i = 0;
            while i < comp.len() {
                for &(y, _) in &adj[comp[i]] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Number of connected components that are balanced.
    pub fn balanced_component_count(&self) -> usize {
        self.components()
            .into_iter()
            .filter(|c| self.induced(c).is_balanced())
            .count()
    }

    /// Induced subgraph on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SignedGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| (index[e.u], index[e.v], e.sign));
        SignedGraph::from_signed_edges(vertices.len(), edges).expect("induced subgraph is simple")
    }

    /// `S^X`: negates every edge with exactly one endpoint in `X`.
    pub fn switch(&self, x: &SwitchSet) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let sign = if x.contains(e.u) != x.contains(e.v) {
                    e.sign.flip()
                } else {
                    e.sign
                };
                Edge { sign, ..*e }
            })
            .collect();
        SignedGraph { n: self.n, edges }
    }

    /// Same underlying graph with every sign negated.
    pub fn negated(&self) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { sign: e.sign.flip(), ..*e })
            .collect();
        SignedGraph { n: self.n, edges }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SignedGraph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        SignedGraph::from_signed_edges(self.n, self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.sign)))
            .expect("relabelling by a permutation keeps the graph simple")
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            u: e.u + shift,
            v: e.v + shift,
            sign: e.sign,
        }));
        SignedGraph { n: self.n + other.n, edges }
    }
}

/// Index of vertex `u` of copy `copy` inside `S₁ ⋆ₛ S₂`.
///
/// Layout: `S₁` occupies `0..n₁`, then copy `j` of `S₂` occupies
/// `n₁ + j·n₂ .. n₁ + (j+1)·n₂` in `S₂`'s vertex order.
pub fn corona_copy_vertex(n1: usize, n2: usize, copy: usize, u: usize) -> usize {
    n1 + copy * n2 + u
}

/// The s-neighbourhood corona `S₁ ⋆ₛ S₂`.
///
/// Takes one copy of `S₁` and `n₁` copies of `S₂`; for every edge `v_i v_k`
/// of `S₁` every vertex of copy `i` is joined to `v_k` (and every vertex of
/// copy `k` to `v_i`) with the sign of `v_i v_k`.
pub fn s_neighbourhood_corona(s1: &SignedGraph, s2: &SignedGraph) -> SignedGraph {
    let (n1, n2) = (s1.n, s2.n);
    let mut edges = Vec::with_capacity(s1.edge_count() * (1 + 2 * n2) + n1 * s2.edge_count());
    edges.extend_from_slice(&s1.edges);
    for copy in 0..n1 {
        for e in &s2.edges {
            edges.push(Edge {
                u: corona_copy_vertex(n1, n2, copy, e.u),
                v: corona_copy_vertex(n1, n2, copy, e.v),
                sign: e.sign,
            });
        }
    }
    for e in &s1.edges {
        for u in 0..n2 {
            // v_u's copy hangs off v_v and vice versa; S₁ vertices come first so
            // the copy vertex is always the larger index.
            edges.push(Edge { u: e.v, v: corona_copy_vertex(n1, n2, e.u, u), sign: e.sign });
            edges.push(Edge { u: e.u, v: corona_copy_vertex(n1, n2, e.v, u), sign: e.sign });
        }
    }
    edges.sort();
    SignedGraph { n: n1 * (n2 + 1), edges }
}

/// Small named graphs used throughout tests, examples and the CLI.
pub mod catalog {
    use super::{Sign, SignedGraph};

    pub fn k1() -> SignedGraph {
        SignedGraph::empty(1)
    }

    pub fn complete(n: usize, sign: Sign) -> SignedGraph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v, sign)));
        SignedGraph::from_signed_edges(n, edges).unwrap()
    }

    pub fn cycle(n: usize, sign: Sign) -> SignedGraph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        SignedGraph::from_signed_edges(n, (0..n).map(|i| (i, (i + 1) % n, sign))).unwrap()
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize, sign: Sign) -> SignedGraph {
        SignedGraph::from_signed_edges(n, (1..n).map(|i| (i - 1, i, sign))).unwrap()
    }

    /// The unbalanced 4-cycle with edge `0-3` negative.
    pub fn c4_minus() -> SignedGraph {
        SignedGraph::from_edge_list(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, -1)]).unwrap()
    }

    /// `K_{p,q}` with parts `0..p` and `p..p+q`, all edges carrying `sign`.
    pub fn complete_bipartite(p: usize, q: usize, sign: Sign) -> SignedGraph {
        let edges = (0..p).flat_map(|i| (0..q).map(move |j| (i, p + j, sign)));
        SignedGraph::from_signed_edges(p + q, edges).unwrap()
    }

    pub fn star(leaves: usize, sign: Sign) -> SignedGraph {
        complete_bipartite(1, leaves, sign)
    }

    /// Even cycle whose edge signs alternate `+, −, +, −, …` (net degree 0).
    pub fn alternating_cycle(n: usize) -> SignedGraph {
        assert!(n >= 4 && n.is_multiple_of(2), "alternating cycle needs even n >= 4");
        let edges = (0..n).map(|i| {
            let s = if i % 2 == 0 { Sign::Positive } else { Sign::Negative };
            (i, (i + 1) % n, s)
        });
        SignedGraph::from_signed_edges(n, edges).unwrap()
    }

    /// Circulant graph: `i ~ i ± d` for each jump `d`, with the sign attached
    /// to that jump. Regular and net-regular by construction.
    pub fn circulant(n: usize, jumps: &[(usize, Sign)]) -> SignedGraph {
        let mut edges = Vec::new();
        for &(d, s) in jumps {
            assert!(d >= 1 && 2 * d <= n, "jump {d} invalid for n={n}");
            for i in 0..n {
                let j = (i + d) % n;
                if 2 * d == n && i >= j {
                    continue;
                }
                edges.push((i, j, s));
            }
        }
        SignedGraph::from_signed_edges(n, edges).unwrap()
    }
}
