//! Clique-tree representation, the independent set of path subtrees, and
//! the base tree obtained by suppressing unimportant degree-2 nodes.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chordal::{is_chordal, maximal_cliques, Chordality};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree `T0` on maximal cliques together with the subtree `F_v` of every
/// vertex (the cliques containing `v`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeRepresentation {
    /// Node `i` of `T0` is the clique `cliques[i]`.
    pub cliques: Vec<Vec<usize>>,
    /// Edges of `T0` as `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Sorted node list of `F_v` for every vertex `v`.
    pub subtrees: Vec<Vec<usize>>,
    /// For every leaf of `T0`, the lowest vertex whose subtree is that leaf alone.
    pub leaf_owners: BTreeMap<usize, usize>,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
}

impl TreeRepresentation {
    pub fn node_count(&self) -> usize {
        self.cliques.len()
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adj[node].len()
    }

    pub fn contains(&self, v: usize, node: usize) -> bool {
        self.subtrees[v].binary_search(&node).is_ok()
    }

    /// Whether `F_v` and `F_u` share a node.
    pub fn intersects(&self, u: usize, v: usize) -> bool {
        self.subtrees[u].iter().any(|&t| self.contains(v, t))
    }

    fn is_leaf(&self, node: usize) -> bool {
        self.degree(node) <= 1
    }

    /// Nodes of `F_v` in path order starting from the lower-indexed end, or
    /// `None` if `F_v` is not a path.
    pub fn path_order(&self, v: usize) -> Option<Vec<usize>> {
        let nodes = &self.subtrees[v];
        let inner_degree = |t: usize| self.adj[t].iter().filter(|&&w| self.contains(v, w)).count();
        if nodes.iter().any(|&t| inner_degree(t) > 2) {
            return None;
        }
        let start = *nodes.iter().find(|&&t| inner_degree(t) <= 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = self.adj[cur].iter().find(|&&w| w != prev && self.contains(v, w)) {
            prev = cur;
            cur = next;
            order.push(cur);
        }
        Some(order)
    }

    /// Checks connectivity of each subtree, the intersection property against
    /// `g`, and the leaf property.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let k = self.node_count();
        if self.edges.len() + 1 != k {
            return Err(Error::invariant(format!("T0 has {k} nodes but {} edges", self.edges.len())));
        }
        for (v, nodes) in self.subtrees.iter().enumerate() {
            if nodes.is_empty() {
                return Err(Error::invariant(format!("F_{v} is empty")));
            }
            // a node set of a tree is connected iff it spans |nodes|-1 tree edges
            let inner = self
                .edges
                .iter()
                .filter(|&&(a, b)| self.contains(v, a) && self.contains(v, b))
                .count();
            if inner + 1 != nodes.len() {
                return Err(Error::invariant(format!("F_{v} is not connected")));
            }
        }
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if g.has_edge(u, v) != self.intersects(u, v) {
                    return Err(Error::invariant(format!(
                        "intersection property fails for {u},{v}: edge={}, intersect={}",
                        g.has_edge(u, v),
                        self.intersects(u, v)
                    )));
                }
            }
        }
        for t in (0..k).filter(|&t| self.is_leaf(t)) {
            match self.leaf_owners.get(&t) {
                Some(&v) if self.subtrees[v] == [t] => {}
                _ => return Err(Error::invariant(format!("leaf {t} of T0 has no owning subtree"))),
            }
        }
        Ok(())
    }
}

/// Clique tree of a connected chordal graph, built as a maximum-weight
/// spanning tree of the clique intersection graph (Kruskal, ties by clique
/// index pair).
pub fn build_tree_representation(g: &Graph) -> Result<TreeRepresentation> {
    if g.n() == 0 {
        return Err(Error::TooSmall { n: 0, min: 1 });
    }
    if let Chordality::Hole(hole) = is_chordal(g) {
        return Err(Error::NotChordal { hole });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let cliques = maximal_cliques(g)?;
    let k = cliques.len();
    let mut weighted = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let w = cliques[i].iter().filter(|x| cliques[j].binary_search(x).is_ok()).count();
            if w > 0 {
                weighted.push((w, i, j));
            }
        }
    }
    weighted.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));

    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut edges = Vec::with_capacity(k.saturating_sub(1));
    for (_, i, j) in weighted {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            edges.push((i, j));
        }
    }
    edges.sort_unstable();
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for nb in &mut adj {
        nb.sort_unstable();
    }
    let mut subtrees = vec![Vec::new(); g.n()];
    for (t, clique) in cliques.iter().enumerate() {
        for &v in clique {
            subtrees[v].push(t);
        }
    }
    let mut leaf_owners = BTreeMap::new();
    for t in (0..k).filter(|&t| adj[t].len() <= 1) {
        if let Some(v) = (0..g.n()).find(|&v| subtrees[v] == [t]) {
            leaf_owners.insert(t, v);
        }
    }
    let rep = TreeRepresentation { cliques, edges, subtrees, leaf_owners, adj };
    rep.validate(g)?;
    Ok(rep)
}

/// One member of the independent set with its path subtree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IPath {
    pub vertex: usize,
    /// Nodes of `F_vertex` in path order, lower-indexed end first.
    pub nodes: Vec<usize>,
}

impl IPath {
    pub fn is_trivial(&self) -> bool {
        self.nodes.len() == 1
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.nodes[0], self.nodes[self.nodes.len() - 1])
    }
}

/// The independent set `I` and its I-paths, sorted by vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependentPathSystem {
    pub paths: Vec<IPath>,
}

impl IndependentPathSystem {
    pub fn members(&self) -> Vec<usize> {
        self.paths.iter().map(|p| p.vertex).collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.paths.binary_search_by_key(&v, |p| p.vertex).is_ok()
    }

    pub fn path_of(&self, v: usize) -> Option<&IPath> {
        self.paths.binary_search_by_key(&v, |p| p.vertex).ok().map(|i| &self.paths[i])
    }

    /// Membership mask over the vertices of a graph on `n` vertices.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for p in &self.paths {
            m[p.vertex] = true;
        }
        m
    }
}

/// Vertices whose subtree is a path through nodes of `T0`-degree at most 2.
fn has_path_property(rep: &TreeRepresentation, v: usize) -> bool {
    rep.subtrees[v].iter().all(|&t| rep.degree(t) <= 2)
}

fn properly_contains(outer: &[usize], inner: &[usize]) -> bool {
    inner.len() < outer.len() && inner.iter().all(|t| outer.binary_search(t).is_ok())
}

/// Greedy choice of `I`: among path-property vertices whose subtree contains
/// no other subtree properly, add in order of (subtree size, index) while
/// independence allows, then confirm maximality.
pub fn select_independent_set(rep: &TreeRepresentation, g: &Graph) -> Result<IndependentPathSystem> {
    let n = g.n();
    let mut candidates: Vec<usize> = (0..n)
        .filter(|&v| has_path_property(rep, v))
        .filter(|&v| !(0..n).any(|u| u != v && properly_contains(&rep.subtrees[v], &rep.subtrees[u])))
        .collect();
    candidates.sort_by_key(|&v| (rep.subtrees[v].len(), v));

    let mut chosen: Vec<usize> = Vec::new();
    for v in candidates {
        if chosen.iter().all(|&x| !g.has_edge(x, v)) {
            chosen.push(v);
        }
    }
    chosen.sort_unstable();

    let in_set = |v: usize| chosen.binary_search(&v).is_ok();
    if let Some(w) = (0..n)
        .filter(|&w| !in_set(w) && has_path_property(rep, w))
        .find(|&w| chosen.iter().all(|&x| !g.has_edge(x, w)))
    {
        return Err(Error::invariant(format!(
            "independent set {chosen:?} is not maximal: vertex {w} has a path subtree and no neighbour in it"
        )));
    }

    let paths = chosen
        .into_iter()
        .map(|v| IPath {
            vertex: v,
            nodes: rep.path_order(v).expect("path-property subtree is a path"),
        })
        .collect();
    Ok(IndependentPathSystem { paths })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColour {
    Red,
    Black,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseEdge {
    /// Endpoints as base-tree node indices, `a < b`.
    pub a: usize,
    pub b: usize,
    pub colour: EdgeColour,
    /// For red edges, the member of `I` whose I-path became this edge.
    pub red_source: Option<usize>,
    /// The `T0` path the edge replaces, from `a`'s node to `b`'s node.
    pub t0_path: Vec<usize>,
}

impl BaseEdge {
    pub fn other(&self, t: usize) -> usize {
        if t == self.a {
            self.b
        } else {
            self.a
        }
    }

    pub fn is_red(&self) -> bool {
        self.colour == EdgeColour::Red
    }
}

/// The base tree `T`: substantial nodes of `T0` with red/black edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseTree {
    /// Base node `i` is the `T0` node `nodes[i]`; ascending.
    pub nodes: Vec<usize>,
    pub edges: Vec<BaseEdge>,
    #[serde(skip)]
    adj: Vec<Vec<(usize, usize)>>,
}

impl BaseTree {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `(neighbour, edge index)` pairs, by ascending neighbour.
    pub fn neighbors(&self, t: usize) -> &[(usize, usize)] {
        &self.adj[t]
    }

    pub fn degree(&self, t: usize) -> usize {
        self.adj[t].len()
    }

    /// Base index of a `T0` node, if it is substantial.
    pub fn index_of(&self, t0_node: usize) -> Option<usize> {
        self.nodes.binary_search(&t0_node).ok()
    }

    /// Base nodes contained in `F_v`.
    pub fn substantial_in(&self, rep: &TreeRepresentation, v: usize) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| rep.contains(v, self.nodes[i])).collect()
    }

    /// Base nodes on the side of `a` after deleting edge `edge`.
    pub fn side_of(&self, edge: usize, a: usize) -> Vec<bool> {
        let mut side = vec![false; self.nodes.len()];
        side[a] = true;
        let mut stack = vec![a];
        while let Some(t) = stack.pop() {
            for &(w, e) in &self.adj[t] {
                if e != edge && !side[w] {
                    side[w] = true;
                    stack.push(w);
                }
            }
        }
        side
    }

    /// Edge indices on the unique path between two base nodes.
    pub fn path_edges(&self, from: usize, to: usize) -> Vec<usize> {
        let k = self.nodes.len();
        let mut via = vec![None; k];
        let mut seen = vec![false; k];
        seen[from] = true;
        let mut stack = vec![from];
        while let Some(t) = stack.pop() {
            for &(w, e) in &self.adj[t] {
                if !seen[w] {
                    seen[w] = true;
                    via[w] = Some((t, e));
                    stack.push(w);
                }
            }
        }
        let mut out = Vec::new();
        let mut cur = to;
        while let Some((p, e)) = via[cur] {
            out.push(e);
            cur = p;
        }
        out.reverse();
        out
    }

    /// Checks the colouring, substantial-node, and red-matching invariants.
    pub fn validate(&self, rep: &TreeRepresentation, ips: &IndependentPathSystem) -> Result<()> {
        let expected = substantial_nodes(rep, ips);
        if self.nodes != expected {
            return Err(Error::invariant(format!(
                "base nodes {:?} differ from substantial nodes {expected:?}",
                self.nodes
            )));
        }
        if self.edges.len() + 1 != self.nodes.len() {
            return Err(Error::invariant("base tree edge count mismatch"));
        }
        for (i, &t) in self.nodes.iter().enumerate() {
            if self.degree(i) != rep.degree(t) {
                return Err(Error::invariant(format!("substantial node {t} changed degree")));
            }
        }
        let mut red_sources = BTreeSet::new();
        let mut red_ends = BTreeSet::new();
        for e in self.edges.iter().filter(|e| e.is_red()) {
            let x = e.red_source.ok_or_else(|| Error::invariant("red edge without source"))?;
            if !red_sources.insert(x) {
                return Err(Error::invariant(format!("two red edges from I-path of {x}")));
            }
            for t in [e.a, e.b] {
                if !red_ends.insert(t) {
                    return Err(Error::invariant("red edges do not form a matching"));
                }
                if self.degree(t) != 2 {
                    return Err(Error::invariant(format!("red endpoint {} has degree {}", self.nodes[t], self.degree(t))));
                }
            }
        }
        let nontrivial: BTreeSet<usize> = ips.paths.iter().filter(|p| !p.is_trivial()).map(|p| p.vertex).collect();
        if nontrivial != red_sources {
            return Err(Error::invariant("red edges do not match nontrivial I-paths one-to-one"));
        }
        for v in 0..rep.subtrees.len() {
            if self.substantial_in(rep, v).is_empty() {
                return Err(Error::invariant(format!("F_{v} contains no substantial node")));
            }
        }
        Ok(())
    }
}

/// Endpoints of I-paths together with nodes of degree at least 3, ascending.
pub fn substantial_nodes(rep: &TreeRepresentation, ips: &IndependentPathSystem) -> Vec<usize> {
    let mut s: BTreeSet<usize> = (0..rep.node_count()).filter(|&t| rep.degree(t) >= 3).collect();
    for p in &ips.paths {
        let (x, y) = p.endpoints();
        s.insert(x);
        s.insert(y);
    }
    s.into_iter().collect()
}

/// Suppresses every degree-2 node that is not an I-path endpoint, in
/// ascending node order.
pub fn build_base_tree(rep: &TreeRepresentation, ips: &IndependentPathSystem) -> Result<BaseTree> {
    let subst = substantial_nodes(rep, ips);
    let order: Vec<usize> = (0..rep.node_count()).filter(|t| subst.binary_search(t).is_err()).collect();
    build_base_tree_in_order(rep, ips, &order)
}

/// As [`build_base_tree`], suppressing nodes in the given order.
pub(crate) fn build_base_tree_in_order(
    rep: &TreeRepresentation,
    ips: &IndependentPathSystem,
    order: &[usize],
) -> Result<BaseTree> {
    let k = rep.node_count();
    // working multigraph: edge id -> node path; adjacency by edge ids
    let mut paths: Vec<Option<Vec<usize>>> = rep.edges.iter().map(|&(a, b)| Some(vec![a, b])).collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, &(a, b)) in rep.edges.iter().enumerate() {
        incident[a].push(i);
        incident[b].push(i);
    }
    let mut alive = vec![true; k];
    for &t in order {
        if incident[t].len() != 2 {
            return Err(Error::invariant(format!("suppressing node {t} of degree {}", incident[t].len())));
        }
        let (e1, e2) = (incident[t][0], incident[t][1]);
        let mut p1 = paths[e1].take().unwrap();
        let mut p2 = paths[e2].take().unwrap();
        // orient p1 to end at t and p2 to start at t
        if p1[0] == t {
            p1.reverse();
        }
        if p2[p2.len() - 1] == t {
            p2.reverse();
        }
        p1.extend_from_slice(&p2[1..]);
        let (x, y) = (p1[0], p1[p1.len() - 1]);
        let id = paths.len();
        paths.push(Some(p1));
        for end in [x, y] {
            incident[end].retain(|&e| e != e1 && e != e2);
            incident[end].push(id);
        }
        incident[t].clear();
        alive[t] = false;
    }
    let nodes: Vec<usize> = (0..k).filter(|&t| alive[t]).collect();
    let index = |t: usize| nodes.binary_search(&t).unwrap();

    let red_owner = |p: usize, q: usize| {
        ips.paths
            .iter()
            .find(|ip| rep.contains(ip.vertex, p) && rep.contains(ip.vertex, q))
            .map(|ip| ip.vertex)
    };
    let mut edges = Vec::new();
    for mut path in paths.into_iter().flatten() {
        if path[0] > path[path.len() - 1] {
            path.reverse();
        }
        let owners: Vec<Option<usize>> = path.windows(2).map(|w| red_owner(w[0], w[1])).collect();
        if owners.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::invariant(format!("mixed colours along suppressed path {path:?}")));
        }
        let red_source = owners[0];
        edges.push(BaseEdge {
            a: index(path[0]),
            b: index(path[path.len() - 1]),
            colour: if red_source.is_some() { EdgeColour::Red } else { EdgeColour::Black },
            red_source,
            t0_path: path,
        });
    }
    edges.sort_by_key(|e| (e.a, e.b));
    let mut adj = vec![Vec::new(); nodes.len()];
    for (i, e) in edges.iter().enumerate() {
        adj[e.a].push((e.b, i));
        adj[e.b].push((e.a, i));
    }
    for nb in &mut adj {
        nb.sort_unstable();
    }
    let base = BaseTree { nodes, edges, adj };
    base.validate(rep, ips)?;
    Ok(base)
}
