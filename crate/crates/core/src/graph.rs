//! Simple undirected graphs on `0..n`, optionally carrying loops.
//!
//! Input graphs never have loops. Overspan graphs and their unions use the
//! loop set, and a loop counts as an edge covering a single vertex.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An edge or a loop, stored as `(a, b)` with `a <= b`; `a == b` is a loop.
///
/// The derived ordering is the canonical element order used by the searches:
/// lexicographic on `(a, b)`, so loop `b` sorts before edge `bc` which sorts
/// before loop `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Element(pub usize, pub usize);

impl Element {
    pub fn edge(u: usize, v: usize) -> Self {
        if u <= v {
            Element(u, v)
        } else {
            Element(v, u)
        }
    }

    pub fn self_loop(v: usize) -> Self {
        Element(v, v)
    }

    pub fn is_loop(&self) -> bool {
        self.0 == self.1
    }

    pub fn touches(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn meets(&self, other: &Element) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        let (a, b) = (self.0, self.1);
        std::iter::once(a).chain((a != b).then_some(b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
    loops: BTreeSet<usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    loops: Vec<usize>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges().collect(),
            loops: g.loops.iter().copied().collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        let mut g = Graph::new(r.n);
        for (u, v) in r.edges {
            g.add_edge(u, v)?;
        }
        for v in r.loops {
            g.add_loop(v)?;
        }
        Ok(g)
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
            loops: BTreeSet::new(),
        }
    }

    /// Builds a loopless graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Adds the edge `uv`; returns whether it was new. `u == v` is rejected,
    /// use [`Graph::add_loop`] for loops.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop on {u} passed as an edge")));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    pub fn add_loop(&mut self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.loops.insert(v))
    }

    /// Adds an edge or a loop.
    pub fn add_element(&mut self, e: Element) -> Result<bool> {
        if e.is_loop() {
            self.add_loop(e.0)
        } else {
            self.add_edge(e.0, e.1)
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.contains(&v)
    }

    pub fn contains(&self, e: Element) -> bool {
        if e.is_loop() {
            self.has_loop(e.0)
        } else {
            self.has_edge(e.0, e.1)
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        self.loops.iter().copied()
    }

    /// Edges and loops in canonical [`Element`] order.
    pub fn elements(&self) -> Vec<Element> {
        let mut out: Vec<Element> = self
            .edges()
            .map(|(u, v)| Element(u, v))
            .chain(self.loops().map(Element::self_loop))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn loop_count(&self) -> usize {
        self.loops.len()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components_after_removal(&[]).map(|c| c.count == 1).unwrap_or(false)
    }

    /// Components of `G - removed`.
    pub fn components_after_removal(&self, removed: &[usize]) -> Result<Components> {
        let mut gone = vec![false; self.n];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let mut assignment = vec![None; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if gone[s] || assignment[s].is_some() {
                continue;
            }
            assignment[s] = Some(count);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !gone[w] && assignment[w].is_none() {
                        assignment[w] = Some(count);
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        Ok(Components { count, assignment })
    }

    /// Subgraph induced on `keep` (other vertices become isolated, indices
    /// are preserved).
    pub fn restricted_to(&self, keep: &[bool]) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            if keep[u] && keep[v] {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g.loops = self.loops.iter().copied().filter(|&v| keep[v]).collect();
        g
    }

    /// Whether `seq` visits every vertex once with consecutive vertices
    /// adjacent, including the wrap-around pair.
    pub fn is_hamilton_cycle(&self, seq: &[usize]) -> bool {
        self.is_hamilton_path(seq)
            && seq.len() >= 3
            && self.has_edge(seq[seq.len() - 1], seq[0])
    }

    pub fn is_hamilton_path(&self, seq: &[usize]) -> bool {
        if seq.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &v in seq {
            if v >= self.n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        seq.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }
}

/// Connected components of `G - S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Components {
    pub count: usize,
    /// Component id per vertex; `None` exactly for removed vertices.
    pub assignment: Vec<Option<usize>>,
}

impl Components {
    pub fn same(&self, u: usize, v: usize) -> bool {
        matches!((self.assignment[u], self.assignment[v]), (Some(a), Some(b)) if a == b)
    }
}
