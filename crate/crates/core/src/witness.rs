//! Separators certifying toughness below 10.
//!
//! A subfamily of overspan graphs whose union has a small matching number
//! has a small vertex cover. Growing the subfamily while the cover still
//! covers it, and adding the I-vertices of isolated red edges, yields a set
//! `S` whose removal leaves many components. The counting inequalities are
//! checked with exact rationals before a witness is returned.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::overspan::{lexicographic_minimum_cover, nu_tau_konig, overspan_graph, union_subfamily, HallBound, OverspanFamily};
use crate::treerep::{BaseTree, IndependentPathSystem, TreeRepresentation};

/// The weight applied to `E0` when bounding components.
pub fn component_weight() -> Ratio<i64> {
    Ratio::new(2, 5)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSeparator {
    /// `S = C ∪ X'`, ascending.
    pub separator: Vec<usize>,
    /// `c(G - S)`.
    pub components: usize,
    /// Lexicographically first minimum cover of the seed subfamily's union.
    pub cover: Vec<usize>,
    /// The violating subfamily the witness grew from.
    pub seed: Vec<usize>,
    /// Maximal extension of `seed` still covered by `cover`.
    pub extended: Vec<usize>,
    /// Base-tree edges owning an item of `extended`.
    pub tree_edges: Vec<usize>,
    pub e0: Vec<usize>,
    pub e1: Vec<usize>,
    pub e2: Vec<usize>,
    /// Red edges of `tree_edges` with no adjacent black edge in `tree_edges`.
    pub e_prime: Vec<usize>,
    /// I-vertices of the red edges in `e_prime`.
    pub x_prime: Vec<usize>,
    /// Components of `T - (E0 ∪ E1 ∪ E2)` holding a node of degree at most 2.
    pub low_degree_components: usize,
    pub bound: HallBound,
}

impl WitnessSeparator {
    /// `10 · c(G - S) > |S|` with `c(G - S) >= 2`.
    pub fn certifies_toughness_below_10(&self) -> bool {
        self.components >= 2 && 10 * self.components > self.separator.len()
    }

    /// Re-derives `c(G - S)` and checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let c = g.components_after_removal(&self.separator)?.count;
        if c != self.components {
            return Err(Error::invariant(format!("witness claims {} components, found {c}", self.components)));
        }
        if !self.certifies_toughness_below_10() {
            return Err(Error::invariant(format!(
                "separator of size {} leaves {c} components",
                self.separator.len()
            )));
        }
        Ok(())
    }
}

/// Edge classes for [`tree_component_bound`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EdgeClasses {
    pub e0: Vec<usize>,
    pub e1: Vec<usize>,
    pub e2: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeBound {
    pub c2: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub bound: Ratio<i64>,
    pub holds: bool,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

/// Counts components of `T - (E0 ∪ E1 ∪ E2)` containing a node of degree at
/// most 2 in `T`, and compares with `1 + k|E0| + (1-k)|E1| + |E2|`.
///
/// `edges` must form a tree on `0..node_count`; every edge of `Ei` must
/// have exactly `i` endpoints of degree at most 2; `1/3 <= k <= 1/2`.
pub fn tree_component_bound(
    node_count: usize,
    edges: &[(usize, usize)],
    classes: &EdgeClasses,
    k: Ratio<i64>,
) -> Result<TreeBound> {
    if k < Ratio::new(1, 3) || k > Ratio::new(1, 2) {
        return Err(Error::InvalidArgument(format!("k = {k} outside [1/3, 1/2]")));
    }
    if node_count == 0 || edges.len() + 1 != node_count {
        return Err(Error::InvalidArgument("edge list is not a tree".into()));
    }
    let mut degree = vec![0usize; node_count];
    let mut tree = Graph::new(node_count);
    for &(a, b) in edges {
        if !tree.add_edge(a, b)? {
            return Err(Error::InvalidArgument(format!("duplicate tree edge {a}-{b}")));
        }
        degree[a] += 1;
        degree[b] += 1;
    }
    if !tree.is_connected() {
        return Err(Error::InvalidArgument("edge list is not a tree".into()));
    }
    let mut removed = vec![false; edges.len()];
    for (class, set) in [&classes.e0, &classes.e1, &classes.e2].into_iter().enumerate() {
        for &e in set {
            let &(a, b) = edges
                .get(e)
                .ok_or_else(|| Error::InvalidArgument(format!("edge index {e} out of range")))?;
            let low = usize::from(degree[a] <= 2) + usize::from(degree[b] <= 2);
            if low != class {
                return Err(Error::InvalidArgument(format!(
                    "edge {e} has {low} low-degree endpoints but is listed in E{class}"
                )));
            }
            if std::mem::replace(&mut removed[e], true) {
                return Err(Error::InvalidArgument(format!("edge {e} listed twice")));
            }
        }
    }
    let mut forest = Graph::new(node_count);
    for (i, &(a, b)) in edges.iter().enumerate() {
        if !removed[i] {
            forest.add_edge(a, b)?;
        }
    }
    let comps = forest.components_after_removal(&[])?;
    let mut has_low = vec![false; comps.count];
    for v in 0..node_count {
        if degree[v] <= 2 {
            has_low[comps.assignment[v].unwrap()] = true;
        }
    }
    let c2 = has_low.iter().filter(|&&h| h).count();
    let size = |s: &Vec<usize>| Ratio::from_integer(s.len() as i64);
    let one = Ratio::from_integer(1);
    let bound = one + k * size(&classes.e0) + (one - k) * size(&classes.e1) + size(&classes.e2);
    Ok(TreeBound { c2, bound, holds: Ratio::from_integer(c2 as i64) >= bound })
}

/// Two vertices with substantial nodes `s ∈ F_u`, `t ∈ F_v` on opposite
/// sides of base edge `edge`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnclosingPair {
    pub u: usize,
    pub v: usize,
    pub edge: usize,
    pub s: usize,
    pub t: usize,
}

/// The set `S` used with a cover of `A_e`: the cover itself, plus the
/// I-vertex when `e` is red.
fn separator_for_edge(base: &BaseTree, edge: usize, cover: &[usize]) -> Vec<usize> {
    let mut s = cover.to_vec();
    if let Some(x) = base.edges[edge].red_source {
        s.push(x);
    }
    s.sort_unstable();
    s.dedup();
    s
}

/// Every `edge`-enclosing pair `u < v` with neither vertex in `removed`,
/// using the lowest-indexed witnesses.
pub fn enclosing_pairs(rep: &TreeRepresentation, base: &BaseTree, edge: usize, removed: &[usize]) -> Vec<EnclosingPair> {
    let e = &base.edges[edge];
    let side = base.side_of(edge, e.a);
    let n = rep.subtrees.len();
    let alive: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
    let subst: Vec<Vec<usize>> = (0..n).map(|v| base.substantial_in(rep, v)).collect();
    let mut out = Vec::new();
    for (i, &u) in alive.iter().enumerate() {
        for &v in &alive[i + 1..] {
            let found = subst[u]
                .iter()
                .flat_map(|&s| subst[v].iter().map(move |&t| (s, t)))
                .find(|&(s, t)| side[s] != side[t]);
            if let Some((s, t)) = found {
                out.push(EnclosingPair { u, v, edge, s, t });
            }
        }
    }
    out
}

/// Removes the cover of `A_e` (and the I-vertex of a red `e`) and reports
/// whether the enclosing pair ends up in different components.
pub fn check_enclosing_disconnection(
    g: &Graph,
    rep: &TreeRepresentation,
    ips: &IndependentPathSystem,
    base: &BaseTree,
    edge: usize,
    cover: &[usize],
    pair: &EnclosingPair,
) -> Result<bool> {
    if edge >= base.edge_count() || pair.edge != edge {
        return Err(Error::InvalidArgument(format!("pair is not for base edge {edge}")));
    }
    let a_e = overspan_graph(g, rep, ips, base, edge);
    if !a_e.elements().iter().all(|el| el.vertices().any(|v| cover.contains(&v))) {
        return Err(Error::InvalidArgument(format!("{cover:?} does not cover the overspan graph")));
    }
    let s = separator_for_edge(base, edge, cover);
    if s.contains(&pair.u) || s.contains(&pair.v) {
        return Err(Error::InvalidArgument("pair vertex removed by the separator".into()));
    }
    let side = base.side_of(edge, base.edges[edge].a);
    let ok_witness = |x: usize, node: usize| node < base.node_count() && rep.contains(x, base.nodes[node]);
    if !ok_witness(pair.u, pair.s) || !ok_witness(pair.v, pair.t) || side[pair.s] == side[pair.t] {
        return Err(Error::InvalidArgument("not an enclosing pair".into()));
    }
    let comps = g.components_after_removal(&s)?;
    Ok(!comps.same(pair.u, pair.v))
}

/// Builds the separator from a subfamily `seed` failing `bound`.
#[allow(clippy::too_many_arguments)]
pub fn extract_separator(
    g: &Graph,
    base: &BaseTree,
    fam: &OverspanFamily,
    seed: &[usize],
    bound: HallBound,
) -> Result<WitnessSeparator> {
    let mut seed = seed.to_vec();
    seed.sort_unstable();
    seed.dedup();
    let seed_union = union_subfamily(fam, &seed)?;
    let nu = nu_tau_konig(&seed_union.graph)?.nu;
    if !bound.violated_by(nu, seed.len()) {
        return Err(Error::InvalidArgument(format!(
            "subfamily {seed:?} has matching number {nu}, above {}",
            bound.threshold(seed.len())
        )));
    }
    let cover = lexicographic_minimum_cover(&seed_union.graph)?;
    let covered = |i: usize| {
        fam.items[i]
            .graph
            .elements()
            .iter()
            .all(|el| el.vertices().any(|v| cover.binary_search(&v).is_ok()))
    };
    let extended: Vec<usize> = (0..fam.len()).filter(|i| seed.binary_search(i).is_ok() || covered(*i)).collect();

    let mut in_b = vec![false; base.edge_count()];
    for &i in &extended {
        in_b[fam.items[i].edge] = true;
    }
    let tree_edges: Vec<usize> = (0..base.edge_count()).filter(|&e| in_b[e]).collect();
    let adjacent_black_in_b = |e: usize| {
        let be = &base.edges[e];
        [be.a, be.b]
            .iter()
            .flat_map(|&t| base.neighbors(t))
            .any(|&(_, f)| f != e && in_b[f] && !base.edges[f].is_red())
    };
    let e_prime: Vec<usize> = tree_edges
        .iter()
        .copied()
        .filter(|&e| base.edges[e].is_red() && !adjacent_black_in_b(e))
        .collect();
    let mut x_prime: Vec<usize> = e_prime.iter().map(|&e| base.edges[e].red_source.unwrap()).collect();
    x_prime.sort_unstable();

    let mut classes = EdgeClasses::default();
    for &e in tree_edges.iter().filter(|&&e| !base.edges[e].is_red()) {
        let be = &base.edges[e];
        let low = usize::from(base.degree(be.a) <= 2) + usize::from(base.degree(be.b) <= 2);
        match low {
            0 => classes.e0.push(e),
            1 => classes.e1.push(e),
            _ => classes.e2.push(e),
        }
    }
    let tree_list: Vec<(usize, usize)> = base.edges.iter().map(|e| (e.a, e.b)).collect();
    let tree_bound = tree_component_bound(base.node_count(), &tree_list, &classes, component_weight())?;

    let mut separator: Vec<usize> = cover.iter().chain(&x_prime).copied().collect();
    separator.sort_unstable();
    let components = g.components_after_removal(&separator)?.count;

    let witness = WitnessSeparator {
        separator,
        components,
        cover,
        seed,
        extended,
        tree_edges,
        e0: classes.e0,
        e1: classes.e1,
        e2: classes.e2,
        e_prime,
        x_prime,
        low_degree_components: tree_bound.c2,
        bound,
    };
    check_counting(&witness, base, tree_bound.holds)?;
    witness.verify(g)?;
    Ok(witness)
}

fn check_counting(w: &WitnessSeparator, base: &BaseTree, tree_bound_holds: bool) -> Result<()> {
    let (e0, e1, e2, ep) = (w.e0.len() as i64, w.e1.len() as i64, w.e2.len() as i64, w.e_prime.len() as i64);
    let fail = |what: &str| Err(Error::invariant(format!("witness check failed: {what}")));
    if !tree_bound_holds {
        return fail("component bound on the base tree");
    }
    let black = w.tree_edges.iter().filter(|&&e| !base.edges[e].is_red()).count() as i64;
    if black != e0 + e1 + e2 {
        return fail("|E*| = |E0| + |E1| + |E2|");
    }
    let other_red = w.tree_edges.len() as i64 - black - ep;
    if other_red > e1 + 2 * e2 {
        return fail("|B \\ (E* ∪ E')| <= |E1| + 2|E2|");
    }
    let family_size = w.extended.len() as i64;
    if family_size > 2 * e0 + 3 * e1 + 4 * e2 + ep {
        return fail("|family| <= 2|E0| + 3|E1| + 4|E2| + |E'|");
    }
    let s = w.separator.len() as i64;
    if s > w.bound.threshold(w.extended.len()) + ep {
        return fail("|S| <= bound(|family|) + |E'|");
    }
    let rhs = 4 * e0 + 6 * e1 + 8 * e2 + 3 * ep;
    let size_ok = match w.bound {
        HallBound::Cycle => s < rhs,
        HallBound::Path => s <= rhs,
    };
    if !size_ok {
        return fail("|S| < 4|E0| + 6|E1| + 8|E2| + 3|E'|");
    }
    // c > 2/5 E0 + 3/5 E1 + E2 + E', cleared of denominators
    if 5 * w.components as i64 <= 2 * e0 + 3 * e1 + 5 * e2 + 5 * ep {
        return fail("c(G - S) > 2/5|E0| + 3/5|E1| + |E2| + |E'|");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::Decomposition;

    fn k4_minus_ad() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn extract(d: &Decomposition, seed: &[usize]) -> Result<WitnessSeparator> {
        extract_separator(&d.graph, &d.base, &d.family, seed, HallBound::Cycle)
    }

    #[test]
    fn p4_witness() {
        let d = Decomposition::new(&p4()).unwrap();
        let w = extract(&d, &[0, 1]).unwrap();
        assert_eq!(w.cover, vec![1]);
        assert_eq!(w.extended, vec![0, 1]);
        assert_eq!(w.e2, vec![0]);
        assert!(w.e0.is_empty() && w.e1.is_empty() && w.e_prime.is_empty());
        assert_eq!(w.separator, vec![1]);
        assert_eq!(w.components, 2);
    }

    #[test]
    fn k4_minus_edge_witness() {
        let d = Decomposition::new(&k4_minus_ad()).unwrap();
        let w = extract(&d, &[0, 1]).unwrap();
        assert_eq!(w.cover, vec![1, 2]);
        assert_eq!(w.separator, vec![1, 2]);
        assert_eq!(w.components, 2);
        assert!(w.certifies_toughness_below_10());
    }

    #[test]
    fn empty_seed_is_rejected() {
        let d = Decomposition::new(&p4()).unwrap();
        assert!(matches!(extract(&d, &[]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn non_violating_seed_is_rejected() {
        let d = Decomposition::new(&p4()).unwrap();
        assert!(matches!(extract(&d, &[0]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn tree_bound_examples() {
        let k = component_weight();
        let single = tree_component_bound(2, &[(0, 1)], &EdgeClasses { e2: vec![0], ..Default::default() }, k).unwrap();
        assert_eq!((single.c2, single.bound, single.holds), (2, Ratio::from_integer(2), true));

        let star = [(0, 1), (0, 2), (0, 3)];
        let r = tree_component_bound(4, &star, &EdgeClasses { e1: vec![0], ..Default::default() }, k).unwrap();
        assert_eq!((r.c2, r.bound, r.holds), (2, Ratio::new(8, 5), true));

        // two degree-4 centres 0 and 1, three leaves each
        let double = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)];
        let r = tree_component_bound(8, &double, &EdgeClasses { e0: vec![0], ..Default::default() }, k).unwrap();
        assert_eq!((r.c2, r.bound, r.holds), (2, Ratio::new(7, 5), true));
    }

    #[test]
    fn tree_bound_rejects_bad_input() {
        let star = [(0, 1), (0, 2), (0, 3)];
        let misfiled = EdgeClasses { e0: vec![0], ..Default::default() };
        assert!(tree_component_bound(4, &star, &misfiled, component_weight()).is_err());
        let fine = EdgeClasses::default();
        assert!(tree_component_bound(4, &star, &fine, Ratio::new(1, 4)).is_err());
        assert!(tree_component_bound(4, &star, &fine, Ratio::new(3, 5)).is_err());
    }

    #[test]
    fn p4_enclosing_pairs_disconnect() {
        let d = Decomposition::new(&p4()).unwrap();
        for (u, v) in [(0, 2), (0, 3)] {
            let pair = enclosing_pairs(&d.rep, &d.base, 0, &[1])
                .into_iter()
                .find(|p| (p.u, p.v) == (u, v))
                .unwrap();
            assert!(check_enclosing_disconnection(&d.graph, &d.rep, &d.ips, &d.base, 0, &[1], &pair).unwrap());
        }
    }

    #[test]
    fn k4_minus_edge_enclosing_pair() {
        let d = Decomposition::new(&k4_minus_ad()).unwrap();
        let pairs = enclosing_pairs(&d.rep, &d.base, 0, &[1, 2]);
        assert_eq!(pairs, vec![EnclosingPair { u: 0, v: 3, edge: 0, s: 0, t: 1 }]);
        assert!(check_enclosing_disconnection(&d.graph, &d.rep, &d.ips, &d.base, 0, &[1, 2], &pairs[0]).unwrap());
    }

    #[test]
    fn enclosing_check_rejects_non_cover() {
        let d = Decomposition::new(&k4_minus_ad()).unwrap();
        let pair = EnclosingPair { u: 0, v: 3, edge: 0, s: 0, t: 1 };
        assert!(check_enclosing_disconnection(&d.graph, &d.rep, &d.ips, &d.base, 0, &[1], &pair).is_err());
    }
}
