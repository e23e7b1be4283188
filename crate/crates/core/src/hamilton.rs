//! Hamilton cycles and paths from a system of disjoint representatives,
//! and the cycle-or-witness pipeline.
//!
//! A closed walk through the base tree (or, for paths, a trail between two
//! anchors) crosses every tree edge once or twice. Each crossing is paired
//! with two subtrees meeting the crossing's tail and head: the chosen
//! representative of an overspan graph, or the I-path of a red edge. Listing
//! the pairs along the walk, splicing in the unused subtrees at a node they
//! contain, and dropping repeated subtrees gives a cyclic (or linear) order
//! of all subtrees in which neighbours intersect, i.e. a Hamilton cycle (path).

use serde::Serialize;

use crate::chordal::{is_chordal, Chordality};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::{Element, Graph};
use crate::overspan::{find_violating_subfamily, HallBound, OverspanFamily, DEFAULT_CAP};
use crate::sdr::{find_sdr, Sdr};
use crate::treerep::{BaseTree, IndependentPathSystem, TreeRepresentation};
use crate::witness::{extract_separator, WitnessSeparator};

/// One traversal of a base-tree edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub from: usize,
    pub to: usize,
    pub edge: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// From a non-loop representative; two distinct subtrees.
    Edge,
    /// From a loop representative; the same subtree twice.
    Loop,
    /// From the I-path of a red edge; the same subtree twice.
    IPath,
}

/// Subtrees `(F_first, F_second)` assigned to a step, with the tail's node
/// in `F_first` and the head's node in `F_second`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AssociatedPair {
    pub step: Step,
    pub first: usize,
    pub second: usize,
    pub kind: PairKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TourAssociation {
    pub pairs: Vec<AssociatedPair>,
}

/// The construction trace: associated pairs, the subtree sequence before
/// duplicates are dropped, and the resulting vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub association: TourAssociation,
    pub sequence: Vec<usize>,
    pub order: Vec<usize>,
}

fn excursion(base: &BaseTree, node: usize, via: Option<usize>, skip: &[bool], out: &mut Vec<Step>) {
    for &(w, e) in base.neighbors(node) {
        if Some(e) == via || skip[e] {
            continue;
        }
        out.push(Step { from: node, to: w, edge: e });
        excursion(base, w, Some(e), skip, out);
        out.push(Step { from: w, to: node, edge: e });
    }
}

/// Euler tour of the symmetric orientation of the base tree: depth-first
/// from node 0, children in ascending order.
pub fn euler_tour(base: &BaseTree) -> Vec<Step> {
    let mut out = Vec::with_capacity(2 * base.edge_count());
    if base.node_count() > 0 {
        excursion(base, 0, None, &vec![false; base.edge_count()], &mut out);
    }
    out
}

/// Trail from `start` to `end` using the edges of the connecting path once
/// and every other edge twice. Branches off the path are toured (in
/// ascending order) before leaving each path node.
pub fn spanning_trail(base: &BaseTree, start: usize, end: usize) -> Vec<Step> {
    let path = base.path_edges(start, end);
    let mut on_path = vec![false; base.edge_count()];
    for &e in &path {
        on_path[e] = true;
    }
    let mut out = Vec::new();
    let mut cur = start;
    for &e in &path {
        excursion(base, cur, None, &on_path, &mut out);
        let next = base.edges[e].other(cur);
        out.push(Step { from: cur, to: next, edge: e });
        cur = next;
    }
    excursion(base, cur, None, &on_path, &mut out);
    out
}

/// Orders the subtrees of a representative so the first contains `from`
/// and the second contains `to` (both `T0` nodes).
fn orient(rep: &TreeRepresentation, el: Element, from: usize, to: usize) -> Result<(usize, usize, PairKind)> {
    if el.is_loop() {
        return Ok((el.0, el.0, PairKind::Loop));
    }
    let (u, w) = (el.0, el.1);
    if rep.contains(u, from) && rep.contains(w, to) {
        Ok((u, w, PairKind::Edge))
    } else if rep.contains(w, from) && rep.contains(u, to) {
        Ok((w, u, PairKind::Edge))
    } else {
        Err(Error::invariant(format!("edge {u}-{w} does not cross tree edge {from}-{to}")))
    }
}

/// Pairs for every step of `walk`. The first traversal of a black edge uses
/// copy 0 and the second copy 1; the first traversal of a red edge uses its
/// representative and the second the I-path.
pub fn associate(rep: &TreeRepresentation, base: &BaseTree, fam: &OverspanFamily, sdr: &Sdr, walk: &[Step]) -> Result<TourAssociation> {
    let mut seen = vec![0u8; base.edge_count()];
    let mut pairs = Vec::with_capacity(walk.len());
    for &step in walk {
        let k = seen[step.edge];
        seen[step.edge] += 1;
        let be = &base.edges[step.edge];
        let (from, to) = (base.nodes[step.from], base.nodes[step.to]);
        let (first, second, kind) = if be.is_red() && k == 1 {
            let x = be.red_source.expect("red edge has a source");
            (x, x, PairKind::IPath)
        } else {
            let copy = if be.is_red() { 0 } else { k };
            let item = fam
                .item_index(step.edge, copy)
                .ok_or_else(|| Error::invariant(format!("no overspan item for edge {} copy {copy}", step.edge)))?;
            orient(rep, sdr.choice[item], from, to)?
        };
        pairs.push(AssociatedPair { step, first, second, kind });
    }
    Ok(TourAssociation { pairs })
}

/// Splices unused subtrees into the pair sequence and drops duplicates.
/// With `ends = Some((u, v))` the result is a path from `u` to `v` whose walk
/// starts at base node `start`; otherwise it is a cycle.
fn assemble(
    g: &Graph,
    rep: &TreeRepresentation,
    base: &BaseTree,
    assoc: &TourAssociation,
    ends: Option<(usize, usize)>,
    start: usize,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut uses = vec![0usize; n];
    for p in &assoc.pairs {
        uses[p.first] += 1;
        if p.second != p.first {
            uses[p.second] += 1;
        }
    }
    if let Some((u, v)) = ends {
        uses[u] += 1;
        uses[v] += 1;
    }
    if let Some(v) = (0..n).find(|&v| uses[v] > 1) {
        return Err(Error::invariant(format!("subtree F_{v} appears in more than one associated pair")));
    }

    // unused subtrees, grouped by the slot after which they are spliced in:
    // slot 0 is before the first step (path start), slot i+1 follows step i
    let mut slot_of_node = vec![None; base.node_count()];
    if ends.is_some() {
        slot_of_node[start] = Some(0);
    }
    for (i, p) in assoc.pairs.iter().enumerate() {
        if slot_of_node[p.step.to].is_none() {
            slot_of_node[p.step.to] = Some(i + 1);
        }
    }
    let mut inserts: Vec<Vec<usize>> = vec![Vec::new(); assoc.pairs.len() + 1];
    for v in (0..n).filter(|&v| uses[v] == 0) {
        let t = *base
            .substantial_in(rep, v)
            .first()
            .ok_or_else(|| Error::invariant(format!("F_{v} has no substantial node")))?;
        let slot = slot_of_node[t].ok_or_else(|| Error::invariant(format!("walk never enters base node {t}")))?;
        inserts[slot].push(v);
    }

    let mut sequence = Vec::with_capacity(2 * assoc.pairs.len() + n);
    let mut order = Vec::with_capacity(n);
    if let Some((u, _)) = ends {
        sequence.push(u);
        order.push(u);
    }
    sequence.extend(&inserts[0]);
    order.extend(&inserts[0]);
    for (i, p) in assoc.pairs.iter().enumerate() {
        sequence.push(p.first);
        sequence.push(p.second);
        order.push(p.first);
        if p.kind == PairKind::Edge {
            order.push(p.second);
        }
        sequence.extend(&inserts[i + 1]);
        order.extend(&inserts[i + 1]);
    }
    if let Some((_, v)) = ends {
        sequence.push(v);
        order.push(v);
    }

    let closed = ends.is_none();
    let ok = if closed { g.is_hamilton_cycle(&order) } else { g.is_hamilton_path(&order) };
    if !ok {
        let k = order.len();
        let bad = (0..k)
            .filter(|&i| closed || i + 1 < k)
            .map(|i| (order[i], order[(i + 1) % k]))
            .find(|&(a, b)| !g.has_edge(a, b));
        return Err(Error::invariant(format!(
            "assembled order {order:?} is not Hamiltonian (offending pair {bad:?})"
        )));
    }
    Ok((sequence, order))
}

/// Hamilton cycle from a system of disjoint representatives of the whole
/// overspan family. A complete graph (base tree without edges) is returned
/// in index order.
pub fn construct_hamilton_cycle(
    g: &Graph,
    rep: &TreeRepresentation,
    base: &BaseTree,
    fam: &OverspanFamily,
    sdr: &Sdr,
) -> Result<Vec<usize>> {
    trace_hamilton_cycle(g, rep, base, fam, sdr).map(|c| c.order)
}

pub fn trace_hamilton_cycle(
    g: &Graph,
    rep: &TreeRepresentation,
    base: &BaseTree,
    fam: &OverspanFamily,
    sdr: &Sdr,
) -> Result<Construction> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 });
    }
    sdr.verify(fam, &[])?;
    if base.edge_count() == 0 {
        if !g.is_complete() {
            return Err(Error::invariant("base tree without edges for a non-complete graph"));
        }
        let order: Vec<usize> = (0..g.n()).collect();
        return Ok(Construction { association: TourAssociation { pairs: vec![] }, sequence: order.clone(), order });
    }
    let walk = euler_tour(base);
    let association = associate(rep, base, fam, sdr, &walk)?;
    let (sequence, order) = assemble(g, rep, base, &association, None, 0)?;
    Ok(Construction { association, sequence, order })
}

/// Base nodes to start and end the trail for a `u`-`v` path: the first pair
/// (in index order) of substantial nodes of `F_u` and `F_v` whose connecting
/// path runs through the red edges of `u` and `v`, if they have any.
pub fn path_anchors(
    rep: &TreeRepresentation,
    ips: &IndependentPathSystem,
    base: &BaseTree,
    u: usize,
    v: usize,
) -> Option<(usize, usize)> {
    let red_of = |x: usize| {
        ips.path_of(x)
            .filter(|p| !p.is_trivial())
            .and_then(|_| base.edges.iter().position(|e| e.red_source == Some(x)))
    };
    let required: Vec<usize> = [red_of(u), red_of(v)].into_iter().flatten().collect();
    let from = base.substantial_in(rep, u);
    let to = base.substantial_in(rep, v);
    from.iter()
        .flat_map(|&a| to.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| {
            let path = base.path_edges(a, b);
            required.iter().all(|e| path.contains(e))
        })
}

/// Hamilton path from `u` to `v` from a representative system avoiding both.
#[allow(clippy::too_many_arguments)]
pub fn trace_hamilton_path(
    g: &Graph,
    rep: &TreeRepresentation,
    ips: &IndependentPathSystem,
    base: &BaseTree,
    fam: &OverspanFamily,
    sdr: &Sdr,
    u: usize,
    v: usize,
) -> Result<Construction> {
    sdr.verify(fam, &[u, v])?;
    if base.edge_count() == 0 {
        let mut order = vec![u];
        order.extend((0..g.n()).filter(|&w| w != u && w != v));
        order.push(v);
        return Ok(Construction { association: TourAssociation { pairs: vec![] }, sequence: order.clone(), order });
    }
    let (a, b) = path_anchors(rep, ips, base, u, v)
        .ok_or_else(|| Error::invariant(format!("no trail anchors for {u}-{v}")))?;
    let walk = spanning_trail(base, a, b);
    let association = associate(rep, base, fam, sdr, &walk)?;
    let (sequence, order) = assemble(g, rep, base, &association, Some((u, v)), a)?;
    Ok(Construction { association, sequence, order })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PipelineResult {
    HamiltonCycle { cycle: Vec<usize> },
    Witness(Box<WitnessSeparator>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PathOutcome {
    HamiltonPath { path: Vec<usize> },
    Witness(Box<WitnessSeparator>),
    /// A representative system avoiding both ends exists but the trail
    /// construction did not yield a verified path.
    Diagnostic { reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Largest overspan family searched for a violating subfamily.
    pub cap: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { cap: DEFAULT_CAP }
    }
}

fn check_input(g: &Graph, min: usize) -> Result<()> {
    if g.n() < min {
        return Err(Error::TooSmall { n: g.n(), min });
    }
    if let Chordality::Hole(hole) = is_chordal(g) {
        return Err(Error::NotChordal { hole });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Hamilton cycle or a separator certifying toughness below 10.
pub fn run_pipeline(g: &Graph, opts: PipelineOptions) -> Result<PipelineResult> {
    check_input(g, 3)?;
    let d = Decomposition::new(g)?;
    run_pipeline_on(&d, opts)
}

pub fn run_pipeline_on(d: &Decomposition, opts: PipelineOptions) -> Result<PipelineResult> {
    if let Some(sdr) = find_sdr(&d.family, &[]) {
        let cycle = construct_hamilton_cycle(&d.graph, &d.rep, &d.base, &d.family, &sdr)?;
        return Ok(PipelineResult::HamiltonCycle { cycle });
    }
    let violation = find_violating_subfamily(&d.family, opts.cap, HallBound::Cycle)?.ok_or_else(|| {
        Error::invariant("no representative system, yet every subfamily satisfies the Hall-type bound")
    })?;
    let w = extract_separator(&d.graph, &d.base, &d.family, &violation.items, HallBound::Cycle)?;
    Ok(PipelineResult::Witness(Box::new(w)))
}

/// Hamilton `u`-`v` path or a separator certifying toughness below 10. A
/// witness does not mean that no such path exists.
pub fn construct_hamilton_path(g: &Graph, u: usize, v: usize, opts: PipelineOptions) -> Result<PathOutcome> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidArgument("path ends must differ".into()));
    }
    check_input(g, 2)?;
    let d = Decomposition::new(g)?;
    if let Some(sdr) = find_sdr(&d.family, &[u, v]) {
        return Ok(match trace_hamilton_path(&d.graph, &d.rep, &d.ips, &d.base, &d.family, &sdr, u, v) {
            Ok(c) => PathOutcome::HamiltonPath { path: c.order },
            Err(e) => PathOutcome::Diagnostic { reason: e.to_string() },
        });
    }
    let violation = find_violating_subfamily(&d.family, opts.cap, HallBound::Path)?.ok_or_else(|| {
        Error::invariant("no representative system avoiding the ends, yet every subfamily satisfies the bound")
    })?;
    let w = extract_separator(&d.graph, &d.base, &d.family, &violation.items, HallBound::Path)?;
    Ok(PathOutcome::Witness(Box::new(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn k4_minus_ad() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_minus_edge_trace() {
        let d = Decomposition::new(&k4_minus_ad()).unwrap();
        let sdr = find_sdr(&d.family, &[]).unwrap();
        let c = trace_hamilton_cycle(&d.graph, &d.rep, &d.base, &d.family, &sdr).unwrap();
        // F_b F_b F_d F_c F_c F_a
        assert_eq!(c.sequence, vec![1, 1, 3, 2, 2, 0]);
        assert_eq!(c.order, vec![1, 3, 2, 0]);
        assert!(oracle::hamilton_oracle(&d.graph).is_some());
    }

    #[test]
    fn complete_graphs_shortcut() {
        for n in [3, 4] {
            let r = run_pipeline(&Graph::complete(n), PipelineOptions::default()).unwrap();
            assert_eq!(r, PipelineResult::HamiltonCycle { cycle: (0..n).collect() });
        }
    }

    #[test]
    fn p4_pipeline_gives_witness() {
        match run_pipeline(&p4(), PipelineOptions::default()).unwrap() {
            PipelineResult::Witness(w) => {
                assert_eq!(w.separator, vec![1]);
                assert_eq!(w.components, 2);
            }
            r => panic!("unexpected {r:?}"),
        }
    }

    #[test]
    fn pipeline_rejects_bad_input() {
        let opts = PipelineOptions::default();
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(matches!(run_pipeline(&c4, opts), Err(Error::NotChordal { .. })));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(run_pipeline(&split, opts), Err(Error::Disconnected));
        assert_eq!(run_pipeline(&Graph::complete(2), opts), Err(Error::TooSmall { n: 2, min: 3 }));
    }

    #[test]
    fn euler_tour_is_closed_and_covers_edges_twice() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let d = Decomposition::new(&g).unwrap();
        let tour = euler_tour(&d.base);
        assert_eq!(tour.len(), 2 * d.base.edge_count());
        assert_eq!(tour[0].from, 0);
        assert_eq!(tour[tour.len() - 1].to, 0);
        assert!(tour.windows(2).all(|w| w[0].to == w[1].from));
    }

    #[test]
    fn trail_spans_tree() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let d = Decomposition::new(&g).unwrap();
        let trail = spanning_trail(&d.base, 1, 3);
        assert_eq!(trail.first().unwrap().from, 1);
        assert_eq!(trail.last().unwrap().to, 3);
        assert!(trail.windows(2).all(|w| w[0].to == w[1].from));
        let mut count = vec![0; d.base.edge_count()];
        for s in &trail {
            count[s.edge] += 1;
        }
        let on_path = d.base.path_edges(1, 3);
        for (e, c) in count.iter().enumerate() {
            assert_eq!(*c, if on_path.contains(&e) { 1 } else { 2 });
        }
    }

    #[test]
    fn paths() {
        let opts = PipelineOptions::default();
        assert_eq!(
            construct_hamilton_path(&Graph::complete(3), 0, 2, opts).unwrap(),
            PathOutcome::HamiltonPath { path: vec![0, 1, 2] }
        );
        match construct_hamilton_path(&k4_minus_ad(), 0, 3, opts).unwrap() {
            PathOutcome::HamiltonPath { path } => {
                assert!(k4_minus_ad().is_hamilton_path(&path));
                assert_eq!((path[0], path[3]), (0, 3));
            }
            r => panic!("unexpected {r:?}"),
        }
        match construct_hamilton_path(&p4(), 0, 3, opts).unwrap() {
            PathOutcome::Witness(w) => assert_eq!(w.separator, vec![1]),
            r => panic!("unexpected {r:?}"),
        }
    }
}
