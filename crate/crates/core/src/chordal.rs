//! Chordality recognition and maximal cliques of chordal graphs.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An order in which every vertex's later neighbours form a clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectEliminationOrder {
    pub order: Vec<usize>,
}

impl PerfectEliminationOrder {
    /// Position of each vertex in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Neighbours of `v` occurring after it in the order, sorted by index.
    pub fn later_neighbors(&self, g: &Graph, v: usize) -> Vec<usize> {
        let pos = self.positions();
        g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect()
    }

    /// Checks the later-neighbour clique condition at every position.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.order.len() != g.n() {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.order {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        first_violation(g, &self.order).is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "certificate", rename_all = "snake_case")]
pub enum Chordality {
    Chordal(PerfectEliminationOrder),
    /// Induced cycle of length at least 4, rotated to start at its smallest
    /// vertex and oriented towards the smaller of that vertex's two cycle
    /// neighbours.
    Hole(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Lexicographic breadth-first search; ties go to the lowest vertex index.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for step in 0..n {
        let mut best: Option<usize> = None;
        for v in (0..n).filter(|&v| !numbered[v]) {
            if best.is_none_or(|b| labels[v] > labels[b]) {
                best = Some(v);
            }
        }
        let v = best.expect("unnumbered vertex remains");
        numbered[v] = true;
        visit.push(v);
        for w in g.neighbors(v) {
            if !numbered[w] {
                labels[w].push(n - step);
            }
        }
    }
    visit
}

/// Returns the first vertex (in `order`) whose later neighbours are not a
/// clique, with a non-adjacent pair among them.
fn first_violation(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        for (i, &x) in later.iter().enumerate() {
            for &y in &later[i + 1..] {
                if !g.has_edge(x, y) {
                    return Some((v, x, y));
                }
            }
        }
    }
    None
}

/// Shortest path from `x` to `y` avoiding the closed neighbourhood of `v`
/// (except `x` and `y`). Together with `v` it closes an induced cycle.
fn hole_through(g: &Graph, v: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for w in g.neighbors(v) {
        blocked[w] = true;
    }
    blocked[x] = false;
    blocked[y] = false;
    let mut parent = vec![usize::MAX; n];
    parent[x] = x;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if u == y {
            break;
        }
        for w in g.neighbors(u) {
            if !blocked[w] && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if parent[y] == usize::MAX {
        return None;
    }
    let mut path = vec![y];
    let mut cur = y;
    while cur != x {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(normalize_cycle(cycle))
}

fn normalize_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    let k = cycle.len();
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(start);
    if k > 2 && cycle[k - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

/// Decides chordality, returning a perfect elimination order or a hole.
pub fn is_chordal(g: &Graph) -> Chordality {
    let mut order = lex_bfs(g);
    order.reverse();
    match first_violation(g, &order) {
        None => Chordality::Chordal(PerfectEliminationOrder { order }),
        Some((v, x, y)) => {
            if let Some(hole) = hole_through(g, v, x, y) {
                return Chordality::Hole(hole);
            }
            // every hole passes through some vertex with its two cycle
            // neighbours as a non-adjacent pair, so this search is complete
            for v in 0..g.n() {
                let nb: Vec<usize> = g.neighbors(v).collect();
                for (i, &x) in nb.iter().enumerate() {
                    for &y in &nb[i + 1..] {
                        if !g.has_edge(x, y) {
                            if let Some(hole) = hole_through(g, v, x, y) {
                                return Chordality::Hole(hole);
                            }
                        }
                    }
                }
            }
            unreachable!("perfect elimination check failed on a graph without holes")
        }
    }
}

/// Maximal cliques of a chordal graph, each sorted, listed in lexicographic
/// order.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let peo = match is_chordal(g) {
        Chordality::Chordal(p) => p,
        Chordality::Hole(hole) => return Err(Error::NotChordal { hole }),
    };
    let pos = peo.positions();
    let mut candidates: Vec<Vec<usize>> = peo
        .order
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    let is_subset = |a: &[usize], b: &[usize]| a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok());
    let maximal = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| is_subset(c, d)))
        .cloned()
        .collect();
    Ok(maximal)
}
