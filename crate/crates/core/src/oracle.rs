//! Exhaustive reference routines.
//!
//! Everything here is exponential and meant for small graphs only: the
//! routines exist to cross-check the structural algorithms in tests, never
//! to sit on a production path.

use crate::graph::{Element, Graph};

/// Hamilton cycle by backtracking from vertex 0, or `None`.
pub fn hamilton_oracle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    extend_path(g, &mut path, &mut used, &|p: &[usize]| g.has_edge(p[p.len() - 1], p[0]))
        .then_some(path)
}

/// Hamilton path from `u` to `v` by backtracking, or `None`.
pub fn hamilton_path_oracle(g: &Graph, u: usize, v: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if u >= n || v >= n || u == v {
        return None;
    }
    let mut path = vec![u];
    let mut used = vec![false; n];
    used[u] = true;
    extend_path(g, &mut path, &mut used, &|p: &[usize]| p[p.len() - 1] == v).then_some(path)
}

fn extend_path(g: &Graph, path: &mut Vec<usize>, used: &mut [bool], accept: &dyn Fn(&[usize]) -> bool) -> bool {
    if path.len() == g.n() {
        return accept(path);
    }
    let last = *path.last().unwrap();
    let next: Vec<usize> = g.neighbors(last).filter(|&w| !used[w]).collect();
    for w in next {
        used[w] = true;
        path.push(w);
        if extend_path(g, path, used, accept) {
            return true;
        }
        path.pop();
        used[w] = false;
    }
    false
}

/// Maximum matching (loops allowed, vertex-disjoint from everything else)
/// by exhaustive branching on the lowest undecided vertex.
pub fn maximum_matching_oracle(h: &Graph) -> Vec<Element> {
    fn go(h: &Graph, v: usize, used: &mut [bool], cur: &mut Vec<Element>, best: &mut Vec<Element>) {
        let n = h.n();
        let mut v = v;
        while v < n && used[v] {
            v += 1;
        }
        if v == n {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            return;
        }
        // upper bound: every remaining vertex in its own element
        let free = (v..n).filter(|&w| !used[w]).count();
        if cur.len() + free <= best.len() {
            return;
        }
        used[v] = true;
        if h.has_loop(v) {
            cur.push(Element::self_loop(v));
            go(h, v + 1, used, cur, best);
            cur.pop();
        }
        let nb: Vec<usize> = h.neighbors(v).filter(|&w| !used[w]).collect();
        for w in nb {
            used[w] = true;
            cur.push(Element::edge(v, w));
            go(h, v + 1, used, cur, best);
            cur.pop();
            used[w] = false;
        }
        go(h, v + 1, used, cur, best);
        used[v] = false;
    }
    let mut best = Vec::new();
    go(h, 0, &mut vec![false; h.n()], &mut Vec::new(), &mut best);
    best.sort_unstable();
    best
}

pub fn matching_number_oracle(h: &Graph) -> usize {
    maximum_matching_oracle(h).len()
}

fn covers(h: &Graph, mask: u64) -> bool {
    let inside = |v: usize| mask >> v & 1 == 1;
    h.loops().all(inside) && h.edges().all(|(u, v)| inside(u) || inside(v))
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// All minimum vertex covers (a loop is covered by its vertex), each sorted,
/// in lexicographic order. Supports graphs on at most 24 vertices.
pub fn all_minimum_covers(h: &Graph) -> Vec<Vec<usize>> {
    let n = h.n();
    assert!(n <= 24, "exhaustive cover search limited to 24 vertices");
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    for mask in 0u64..(1 << n) {
        if covers(h, mask) {
            by_size[mask.count_ones() as usize].push(mask_to_vec(mask));
        }
    }
    let mut best = by_size.into_iter().find(|c| !c.is_empty()).unwrap_or_default();
    best.sort();
    best
}

/// A minimum vertex cover, lexicographically first among minimum ones.
pub fn vertex_cover_oracle(h: &Graph) -> Vec<usize> {
    all_minimum_covers(h).into_iter().next().unwrap_or_default()
}

/// Maximal cliques by enumerating every vertex subset.
pub fn maximal_cliques_oracle(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 20, "exhaustive clique search limited to 20 vertices");
    let cliques: Vec<u64> = (1u64..(1 << n))
        .filter(|&m| g.is_clique(&mask_to_vec(m)))
        .collect();
    let mut out: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|&&m| !cliques.iter().any(|&o| o != m && o & m == m))
        .map(|&m| mask_to_vec(m))
        .collect();
    out.sort();
    out
}

/// Whether `cycle` is an induced (chordless) cycle of length at least 4.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut distinct = cycle.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_minus_ad() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn hamilton_cycles() {
        assert_eq!(hamilton_oracle(&Graph::complete(3)), Some(vec![0, 1, 2]));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(hamilton_oracle(&p4), None);
        let c = hamilton_oracle(&k4_minus_ad()).unwrap();
        assert_eq!(c, vec![0, 1, 3, 2]);
        assert!(k4_minus_ad().is_hamilton_cycle(&c));
    }

    #[test]
    fn hamilton_paths() {
        assert_eq!(hamilton_path_oracle(&Graph::complete(3), 0, 2), Some(vec![0, 1, 2]));
        let p = hamilton_path_oracle(&k4_minus_ad(), 0, 3).unwrap();
        assert!(k4_minus_ad().is_hamilton_path(&p));
        assert_eq!((p[0], p[3]), (0, 3));
    }

    #[test]
    fn matchings_with_loops() {
        let tri = Graph::complete(3);
        assert_eq!(matching_number_oracle(&tri), 1);
        let mut h = Graph::from_edges(4, &[(1, 2)]).unwrap();
        h.add_loop(1).unwrap();
        h.add_loop(2).unwrap();
        assert_eq!(maximum_matching_oracle(&h), vec![Element(1, 1), Element(2, 2)]);
        assert_eq!(matching_number_oracle(&Graph::new(0)), 0);
        assert_eq!(vertex_cover_oracle(&h), vec![1, 2]);
    }

    #[test]
    fn covers_of_an_edge() {
        let h = Graph::from_edges(4, &[(1, 2)]).unwrap();
        assert_eq!(all_minimum_covers(&h), vec![vec![1], vec![2]]);
    }

    #[test]
    fn brute_cliques() {
        assert_eq!(maximal_cliques_oracle(&k4_minus_ad()), vec![vec![0, 1, 2], vec![1, 2, 3]]);
    }
}
