//! Simple graphs on at most 64 vertices, circulant graphs and the three
//! circulant families.

mod io;
mod iso;

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bits::{low_mask, ones};
use crate::error::{Error, Result};

pub use iso::{are_isomorphic, ISO_VERTEX_CAP};

pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on vertices `0..n`, adjacency stored as one bit
/// mask per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::cap("graph vertex count", MAX_VERTICES, n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::InvalidParameters(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::edgeless(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// The cycle `C_m`, `m >= 3`.
    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidParameters(format!("cycle length {m} < 3")));
        }
        circulant(&CirculantSpec::new(m, [1])?)
    }

    pub fn path(n: usize) -> Result<Self> {
        let mut g = Graph::edgeless(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    /// Complement of the cycle `C_k`, where `C_2` is read as `K_2` (so the
    /// result for `k = 2` is two isolated vertices).
    pub fn cycle_complement(k: usize) -> Result<Self> {
        match k {
            0 | 1 => Err(Error::InvalidParameters(format!(
                "cycle complement needs k >= 2, got {k}"
            ))),
            2 => Graph::edgeless(2),
            _ => Ok(Graph::cycle(k)?.complement()),
        }
    }

    /// Complete multipartite graph with the given part sizes. Parts occupy
    /// consecutive vertex ranges.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        parts.iter().try_fold(Graph::edgeless(0)?, |acc, &p| {
            acc.join(&Graph::edgeless(p)?)
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Open neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in ones(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        self.adj
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.n * self.n.saturating_sub(1)
    }

    /// Edge count of the subgraph induced on `w`.
    pub fn induced_edge_count(&self, w: u64) -> usize {
        ones(w)
            .map(|v| (self.adj[v] & w).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| all & !self.adj[v] & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced on `w`, relabelled to `0..|w|` preserving order.
    pub fn induced_subgraph(&self, w: u64) -> Result<Graph> {
        if w & !self.vertex_mask() != 0 {
            return Err(Error::NotSubset);
        }
        let verts: Vec<usize> = ones(w).collect();
        let adj = verts
            .iter()
            .map(|&v| crate::bits::compress(self.adj[v] & w, w))
            .collect();
        Ok(Graph {
            n: verts.len(),
            adj,
        })
    }

    /// The join `self * other`; `other`'s vertices are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::cap("graph vertex count", MAX_VERTICES, n));
        }
        let left = low_mask(self.n);
        let right = low_mask(n) & !left;
        let mut adj = Vec::with_capacity(n);
        adj.extend(self.adj.iter().map(|&a| a | right));
        adj.extend(other.adj.iter().map(|&a| (a << self.n) | left));
        Ok(Graph { n, adj })
    }

    /// `G \ N[x]`: the subgraph induced on the vertices outside the closed
    /// neighbourhood of `x`.
    pub fn closed_neighborhood_deleted(&self, x: usize) -> Result<Graph> {
        if x >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.n,
            });
        }
        self.induced_subgraph(self.vertex_mask() & !self.adj[x] & !(1 << x))
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let next = ones(frontier).fold(0, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Splits the graph as a join: the parts are the vertex sets of the
    /// connected components of the complement.
    pub fn join_factors(&self) -> Vec<Graph> {
        self.complement()
            .components()
            .into_iter()
            .map(|c| self.induced_subgraph(c).expect("component is a subset"))
            .collect()
    }
}

/// `C_n(S)`: vertex count and a set of connection distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantSpec {
    n: usize,
    distances: BTreeSet<usize>,
}

impl CirculantSpec {
    pub fn new(n: usize, distances: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::cap("graph vertex count", MAX_VERTICES, n));
        }
        let distances: BTreeSet<usize> = distances.into_iter().collect();
        let max = n / 2;
        if let Some(&bad) = distances.iter().find(|&&s| s == 0 || s > max) {
            return Err(Error::DistanceOutOfRange {
                distance: bad,
                n,
                max,
            });
        }
        Ok(CirculantSpec { n, distances })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distances(&self) -> &BTreeSet<usize> {
        &self.distances
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.distances.iter().map(|s| s.to_string()).collect();
        write!(f, "{}:{}", self.n, ds.join(","))
    }
}

impl std::str::FromStr for CirculantSpec {
    type Err = Error;

    /// Parses `"n:s1,s2,..."`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected n:s1,s2,..., got {s:?}"));
        let (n, rest) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let mut ds = Vec::new();
        for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            ds.push(part.parse().map_err(|_| bad())?);
        }
        CirculantSpec::new(n, ds)
    }
}

/// The circulant graph `C_n(S)`: `{a, b}` is an edge iff the circular
/// distance `min(|a-b|, n-|a-b|)` lies in `S`.
pub fn circulant(spec: &CirculantSpec) -> Result<Graph> {
    let n = spec.n;
    let mut g = Graph::edgeless(n)?;
    for a in 0..n {
        for &s in &spec.distances {
            g.adj[a] |= 1 << ((a + s) % n);
            g.adj[a] |= 1 << ((a + n - s) % n);
        }
    }
    Ok(g)
}

/// One of the three circulant families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    /// `C_n(1, .., ^j, .., floor(n/2))`, `1 <= j <= floor(n/2)`.
    H1 { n: usize, j: usize },
    /// `C_lm(1, .., ^2l, .., ^3l, .., floor(lm/2))`, `l >= 1`, `m >= 3`.
    H2 { l: usize, m: usize },
    /// `C_lm(1, .., ^l, .., ^2l, .., floor(lm/2))`, `l, m >= 2`.
    H3 { l: usize, m: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        match *self {
            FamilySpec::H1 { n, j } => {
                if j < 1 || j > n / 2 {
                    return bad(format!("H1 needs 1 <= j <= n/2, got n={n}, j={j}"));
                }
            }
            FamilySpec::H2 { l, m } => {
                if l < 1 || m < 3 {
                    return bad(format!("H2 needs l >= 1, m >= 3, got l={l}, m={m}"));
                }
            }
            FamilySpec::H3 { l, m } => {
                if l < 2 || m < 2 {
                    return bad(format!("H3 needs l, m >= 2, got l={l}, m={m}"));
                }
            }
        }
        if self.n() > MAX_VERTICES {
            return Err(Error::cap("graph vertex count", MAX_VERTICES, self.n()));
        }
        Ok(())
    }

    /// Vertex count of the family graph.
    pub fn n(&self) -> usize {
        match *self {
            FamilySpec::H1 { n, .. } => n,
            FamilySpec::H2 { l, m } | FamilySpec::H3 { l, m } => l.saturating_mul(m),
        }
    }

    /// `(d, k)` with `d = gcd(n, j)` and `k = n / d`, for `H1` only.
    pub fn h1_gcd_split(&self) -> Option<(usize, usize)> {
        match *self {
            FamilySpec::H1 { n, j } => {
                let d = n.gcd(&j);
                Some((d, n / d))
            }
            _ => None,
        }
    }

    pub fn circulant_spec(&self) -> Result<CirculantSpec> {
        self.validate()?;
        let n = self.n();
        let all = 1..=n / 2;
        match *self {
            FamilySpec::H1 { j, .. } => CirculantSpec::new(n, all.filter(|&s| s != j)),
            FamilySpec::H2 { l, .. } => {
                CirculantSpec::new(n, all.filter(|&s| s % l != 0 || s == l))
            }
            FamilySpec::H3 { l, .. } => CirculantSpec::new(n, all.filter(|&s| s % l != 0)),
        }
    }

    /// The join decomposition predicted for the family: `d` copies of the
    /// complement of `C_k` for `H1`, `l` copies of `C_m` for `H2`, and
    /// `K_{m,..,m}` for `H3`.
    pub fn join_form(&self) -> Result<Graph> {
        self.validate()?;
        let repeat = |g: Graph, times: usize| -> Result<Graph> {
            (1..times).try_fold(g.clone(), |acc, _| acc.join(&g))
        };
        match *self {
            FamilySpec::H1 { .. } => {
                let (d, k) = self.h1_gcd_split().expect("H1");
                repeat(Graph::cycle_complement(k)?, d)
            }
            FamilySpec::H2 { l, m } => repeat(Graph::cycle(m)?, l),
            FamilySpec::H3 { l, m } => Graph::complete_multipartite(&vec![m; l]),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::H1 { n, j } => write!(f, "H1(n={n}, j={j})"),
            FamilySpec::H2 { l, m } => write!(f, "H2(l={l}, m={m})"),
            FamilySpec::H3 { l, m } => write!(f, "H3(l={l}, m={m})"),
        }
    }
}

pub fn family_graph(f: &FamilySpec) -> Result<Graph> {
    circulant(&f.circulant_spec()?)
}
