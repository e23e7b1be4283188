//! Overspan graphs, their unions, and the matching/cover certificate.
//!
//! Every edge of the base tree gets an overspan graph on `V(G) \ I`; black
//! edges get a second, identical copy. A union of overspan graphs is
//! bipartite once loop-carrying vertices are removed, so maximum matchings
//! and minimum covers come from augmenting paths and König's construction.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Element, Graph};
use crate::treerep::{BaseTree, IndependentPathSystem, TreeRepresentation};

/// Default limit on family size for subfamily enumeration.
pub const DEFAULT_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverspanItem {
    /// Index into [`BaseTree::edges`].
    pub edge: usize,
    /// 0 for the first graph of an edge, 1 for the extra copy of a black edge.
    pub copy: u8,
    pub graph: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverspanFamily {
    /// `V(G) \ I`, ascending. Graphs keep the original vertex numbering and
    /// leave members of `I` isolated.
    pub vertices: Vec<usize>,
    /// Ordered by base edge, copy 0 before copy 1.
    pub items: Vec<OverspanItem>,
}

impl OverspanFamily {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Index of the item for `(edge, copy)`.
    pub fn item_index(&self, edge: usize, copy: u8) -> Option<usize> {
        self.items.iter().position(|it| it.edge == edge && it.copy == copy)
    }
}

/// `A_e` for base edge `edge`: a loop at `v` when `F_v` holds both ends of
/// the edge, and an edge `uv` of `G` when `F_u` and `F_v` hold opposite ends.
/// Members of `I` stay isolated.
pub fn overspan_graph(
    g: &Graph,
    rep: &TreeRepresentation,
    ips: &IndependentPathSystem,
    base: &BaseTree,
    edge: usize,
) -> Graph {
    let n = g.n();
    let in_i = ips.mask(n);
    let e = &base.edges[edge];
    let (r, s) = (base.nodes[e.a], base.nodes[e.b]);
    let mut a = Graph::new(n);
    for v in (0..n).filter(|&v| !in_i[v]) {
        if rep.contains(v, r) && rep.contains(v, s) {
            a.add_loop(v).expect("vertex in range");
        }
    }
    for (u, v) in g.edges() {
        if in_i[u] || in_i[v] {
            continue;
        }
        let crosses = (rep.contains(u, r) && rep.contains(v, s)) || (rep.contains(u, s) && rep.contains(v, r));
        if crosses {
            a.add_edge(u, v).expect("vertex in range");
        }
    }
    a
}

/// One overspan graph per base edge, plus a copy for each black edge.
pub fn build_overspan_family(
    g: &Graph,
    rep: &TreeRepresentation,
    ips: &IndependentPathSystem,
    base: &BaseTree,
) -> OverspanFamily {
    let in_i = ips.mask(g.n());
    let vertices: Vec<usize> = (0..g.n()).filter(|&v| !in_i[v]).collect();
    let mut items = Vec::new();
    for (idx, e) in base.edges.iter().enumerate() {
        let a = overspan_graph(g, rep, ips, base, idx);
        if !e.is_red() {
            items.push(OverspanItem { edge: idx, copy: 0, graph: a.clone() });
            items.push(OverspanItem { edge: idx, copy: 1, graph: a });
        } else {
            items.push(OverspanItem { edge: idx, copy: 0, graph: a });
        }
    }
    OverspanFamily { vertices, items }
}

/// Union `G_B` of a subfamily with, for every edge and loop, the items
/// contributing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnionGraph {
    pub graph: Graph,
    pub back_refs: Vec<(Element, Vec<usize>)>,
}

pub fn union_subfamily(fam: &OverspanFamily, picks: &[usize]) -> Result<UnionGraph> {
    let n = fam.items.first().map_or_else(|| fam.vertices.last().map_or(0, |v| v + 1), |it| it.graph.n());
    let mut graph = Graph::new(n);
    let mut refs: BTreeMap<Element, Vec<usize>> = BTreeMap::new();
    let mut picks = picks.to_vec();
    picks.sort_unstable();
    picks.dedup();
    for &i in &picks {
        let item = fam
            .items
            .get(i)
            .ok_or_else(|| Error::InvalidArgument(format!("no family item {i}")))?;
        for el in item.graph.elements() {
            graph.add_element(el)?;
            refs.entry(el).or_default().push(i);
        }
    }
    Ok(UnionGraph { graph, back_refs: refs.into_iter().collect() })
}

/// Matching number and vertex cover number with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NuTauCertificate {
    pub nu: usize,
    pub tau: usize,
    pub matching: Vec<Element>,
    pub cover: Vec<usize>,
}

impl NuTauCertificate {
    /// Re-checks disjointness, covering, and the sizes.
    pub fn verify(&self, h: &Graph) -> Result<()> {
        for (i, a) in self.matching.iter().enumerate() {
            if !h.contains(*a) {
                return Err(Error::invariant(format!("matching element {a:?} not in graph")));
            }
            if self.matching[i + 1..].iter().any(|b| a.meets(b)) {
                return Err(Error::invariant("matching elements overlap"));
            }
        }
        let inside = |v: usize| self.cover.binary_search(&v).is_ok();
        if !h.elements().iter().all(|e| e.vertices().any(inside)) {
            return Err(Error::invariant("cover misses an edge or loop"));
        }
        if self.nu != self.matching.len() || self.tau != self.cover.len() || self.nu != self.tau {
            return Err(Error::invariant(format!("nu={} tau={} differ", self.nu, self.tau)));
        }
        Ok(())
    }
}

/// Two-colours the loop-free part of `h`; `None` when it has an odd cycle.
fn two_colour(h: &Graph, skip: &[bool]) -> Option<Vec<Option<bool>>> {
    let n = h.n();
    let mut side = vec![None; n];
    for s in 0..n {
        if skip[s] || side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for w in h.neighbors(u).filter(|&w| !skip[w]) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    _ => {}
                }
            }
        }
    }
    Some(side)
}

/// `ν` and `τ` of a graph whose loop-free part is bipartite, as is the case
/// for every union of overspan graphs.
///
/// Loop vertices are set aside; the rest is two-coloured, matched by
/// augmenting paths (left vertices ascending, neighbours ascending), and
/// covered by König's alternating-reachability construction. Loops are then
/// added to both the matching and the cover.
pub fn nu_tau_konig(h: &Graph) -> Result<NuTauCertificate> {
    let n = h.n();
    let looped: Vec<bool> = (0..n).map(|v| h.has_loop(v)).collect();
    let side = two_colour(h, &looped).ok_or_else(|| {
        Error::invariant("union of overspan graphs is not bipartite after removing loop vertices")
    })?;
    let left = |v: usize| !looped[v] && side[v] == Some(false);
    let right = |v: usize| !looped[v] && side[v] == Some(true);

    let mut mate: Vec<Option<usize>> = vec![None; n];
    fn augment(h: &Graph, u: usize, looped: &[bool], seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for w in h.neighbors(u) {
            if looped[w] || seen[w] {
                continue;
            }
            seen[w] = true;
            let free = match mate[w] {
                None => true,
                Some(x) => augment(h, x, looped, seen, mate),
            };
            if free {
                mate[w] = Some(u);
                mate[u] = Some(w);
                return true;
            }
        }
        false
    }
    for u in (0..n).filter(|&u| left(u)) {
        let mut seen = vec![false; n];
        augment(h, u, &looped, &mut seen, &mut mate);
    }

    // alternating reachability from unmatched left vertices
    let mut reached = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&u| left(u) && mate[u].is_none()).collect();
    for &u in &queue {
        reached[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for w in h.neighbors(u).filter(|&w| !looped[w]) {
            if !reached[w] && mate[u] != Some(w) {
                reached[w] = true;
                if let Some(x) = mate[w] {
                    if !reached[x] {
                        reached[x] = true;
                        queue.push_back(x);
                    }
                }
            }
        }
    }

    let mut matching: Vec<Element> = (0..n)
        .filter(|&u| left(u))
        .filter_map(|u| mate[u].map(|w| Element::edge(u, w)))
        .chain((0..n).filter(|&v| looped[v]).map(Element::self_loop))
        .collect();
    matching.sort_unstable();
    let cover: Vec<usize> = (0..n)
        .filter(|&v| {
            looped[v]
                || (left(v) && !reached[v])
                || (right(v) && reached[v])
        })
        .collect();
    let cert = NuTauCertificate { nu: matching.len(), tau: cover.len(), matching, cover };
    cert.verify(h)?;
    Ok(cert)
}

impl UnionGraph {
    pub fn certificate(&self) -> Result<NuTauCertificate> {
        nu_tau_konig(&self.graph)
    }
}

/// Lexicographically first minimum vertex cover.
///
/// Vertices are decided in ascending order: a vertex joins the cover when
/// some minimum cover extends the decisions so far with it, and is excluded
/// otherwise. Feasibility of a partial decision is a König computation on
/// the residual graph.
pub fn lexicographic_minimum_cover(h: &Graph) -> Result<Vec<usize>> {
    let n = h.n();
    let tau = nu_tau_konig(h)?.tau;
    let touched: Vec<usize> = (0..n).filter(|&v| h.has_loop(v) || h.degree(v) > 0).collect();

    let feasible = |inc: &[bool], exc: &[bool]| -> Result<bool> {
        let mut forced = inc.to_vec();
        for x in (0..n).filter(|&x| exc[x]) {
            if h.has_loop(x) || inc[x] {
                return Ok(false);
            }
            for w in h.neighbors(x) {
                if exc[w] {
                    return Ok(false);
                }
                forced[w] = true;
            }
        }
        let keep: Vec<bool> = (0..n).map(|v| !forced[v] && !exc[v]).collect();
        let residual = h.restricted_to(&keep);
        let rest = nu_tau_konig(&residual)?.tau;
        Ok(forced.iter().filter(|&&f| f).count() + rest == tau)
    };

    let mut inc = vec![false; n];
    let mut exc = vec![false; n];
    for &v in &touched {
        inc[v] = true;
        if !feasible(&inc, &exc)? {
            inc[v] = false;
            exc[v] = true;
        }
    }
    let cover: Vec<usize> = (0..n).filter(|&v| inc[v]).collect();
    if cover.len() != tau {
        return Err(Error::invariant(format!("lexicographic cover has size {} but tau={tau}", cover.len())));
    }
    Ok(cover)
}

/// Which Hall-type bound a subfamily must beat.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HallBound {
    /// `ν(G_B) > 2|B| - 2`, sufficient for a system of disjoint representatives.
    Cycle,
    /// `ν(G_B) > 2|B|`, sufficient for one avoiding two prescribed vertices.
    Path,
}

impl HallBound {
    pub fn threshold(self, size: usize) -> i64 {
        match self {
            HallBound::Cycle => 2 * size as i64 - 2,
            HallBound::Path => 2 * size as i64,
        }
    }

    pub fn violated_by(self, nu: usize, size: usize) -> bool {
        size > 0 && (nu as i64) <= self.threshold(size)
    }
}

/// A nonempty subfamily failing the Hall-type bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub items: Vec<usize>,
    pub nu: usize,
}

/// Smallest (then lexicographically first) nonempty subfamily with
/// `ν(G_B)` at or below the bound, or `None` when every subfamily beats it.
///
/// A subfamily holding copy 1 of a black edge without copy 0 is skipped: the
/// copies are identical, so swapping gives a lexicographically smaller
/// subfamily with the same union.
pub fn find_violating_subfamily(fam: &OverspanFamily, cap: usize, bound: HallBound) -> Result<Option<Violation>> {
    let m = fam.len();
    if m > cap {
        return Err(Error::CapExceeded { size: m, cap });
    }
    let elements: Vec<Vec<Element>> = fam.items.iter().map(|it| it.graph.elements()).collect();
    let twin_of: Vec<Option<usize>> = fam
        .items
        .iter()
        .map(|it| if it.copy == 1 { fam.item_index(it.edge, 0) } else { None })
        .collect();
    let n = fam.items.first().map_or(0, |it| it.graph.n());

    for size in 1..=m {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let canonical = combo.iter().all(|&i| twin_of[i].is_none_or(|t| combo.binary_search(&t).is_ok()));
            if canonical {
                let mut h = Graph::new(n);
                for &i in &combo {
                    for &el in &elements[i] {
                        h.add_element(el)?;
                    }
                }
                let nu = nu_tau_konig(&h)?.nu;
                if bound.violated_by(nu, size) {
                    return Ok(Some(Violation { items: combo, nu }));
                }
            }
            if !next_combination(&mut combo, m) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances to the next `k`-subset of `0..m` in lexicographic order.
fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < m - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::treerep::{build_base_tree, build_tree_representation, select_independent_set};

    fn family(g: &Graph) -> OverspanFamily {
        let rep = build_tree_representation(g).unwrap();
        let ips = select_independent_set(&rep, g).unwrap();
        let base = build_base_tree(&rep, &ips).unwrap();
        build_overspan_family(g, &rep, &ips, &base)
    }

    fn k4_minus_ad() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_minus_edge_family() {
        let fam = family(&k4_minus_ad());
        assert_eq!(fam.vertices, vec![1, 2]);
        assert_eq!(fam.len(), 2);
        let a = &fam.items[0].graph;
        assert_eq!(a.elements(), vec![Element(1, 1), Element(1, 2), Element(2, 2)]);
        assert_eq!(fam.items[1].graph, *a);
        assert_eq!((fam.items[1].edge, fam.items[1].copy), (0, 1));
    }

    #[test]
    fn p4_family() {
        let fam = family(&p4());
        assert_eq!(fam.len(), 2);
        assert_eq!(fam.items[0].graph.elements(), vec![Element(1, 2)]);
    }

    #[test]
    fn k3_family_is_empty() {
        assert!(family(&Graph::complete(3)).is_empty());
    }

    #[test]
    fn unions() {
        let fam = family(&k4_minus_ad());
        let u = union_subfamily(&fam, &[0, 1]).unwrap();
        assert_eq!(u.graph.loops().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(u.graph.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(u.back_refs[0], (Element(1, 1), vec![0, 1]));
        let empty = union_subfamily(&fam, &[]).unwrap();
        assert_eq!(empty.graph.elements(), vec![]);
        let p = union_subfamily(&family(&p4()), &[0]).unwrap();
        assert_eq!(p.graph.elements(), vec![Element(1, 2)]);
        assert!(union_subfamily(&fam, &[5]).is_err());
    }

    #[test]
    fn konig_certificates() {
        let fam = family(&k4_minus_ad());
        let c = union_subfamily(&fam, &[0, 1]).unwrap().certificate().unwrap();
        assert_eq!((c.nu, c.tau), (2, 2));
        assert_eq!(c.matching, vec![Element(1, 1), Element(2, 2)]);
        assert_eq!(c.cover, vec![1, 2]);

        let c = union_subfamily(&family(&p4()), &[0, 1]).unwrap().certificate().unwrap();
        assert_eq!((c.nu, c.tau), (1, 1));
        let c = nu_tau_konig(&Graph::new(3)).unwrap();
        assert_eq!((c.nu, c.tau), (0, 0));
    }

    #[test]
    fn odd_cycle_is_rejected() {
        assert!(matches!(nu_tau_konig(&Graph::complete(3)), Err(Error::Invariant(_))));
    }

    #[test]
    fn lexicographic_cover_matches_oracle() {
        let h = Graph::from_edges(6, &[(0, 3), (1, 3), (1, 4), (2, 4), (2, 5)]).unwrap();
        assert_eq!(lexicographic_minimum_cover(&h).unwrap(), oracle::vertex_cover_oracle(&h));
        let p = Graph::from_edges(4, &[(1, 2)]).unwrap();
        assert_eq!(lexicographic_minimum_cover(&p).unwrap(), vec![1]);
    }

    #[test]
    fn violating_subfamilies() {
        let v = find_violating_subfamily(&family(&k4_minus_ad()), DEFAULT_CAP, HallBound::Cycle).unwrap();
        assert_eq!(v, Some(Violation { items: vec![0, 1], nu: 2 }));
        let v = find_violating_subfamily(&family(&p4()), DEFAULT_CAP, HallBound::Cycle).unwrap();
        assert_eq!(v, Some(Violation { items: vec![0, 1], nu: 1 }));
        let fam = family(&Graph::complete(3));
        assert_eq!(find_violating_subfamily(&fam, DEFAULT_CAP, HallBound::Cycle).unwrap(), None);
        assert_eq!(
            find_violating_subfamily(&family(&p4()), 1, HallBound::Cycle),
            Err(Error::CapExceeded { size: 2, cap: 1 })
        );
    }

    #[test]
    fn empty_subfamily_never_violates() {
        assert!(!HallBound::Cycle.violated_by(0, 0));
        assert!(!HallBound::Path.violated_by(0, 0));
    }

    #[test]
    fn combinations_enumerate_in_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
