//! All structures derived from one chordal graph, built in one go.

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::overspan::{build_overspan_family, OverspanFamily};
use crate::treerep::{
    build_base_tree, build_tree_representation, select_independent_set, BaseTree, IndependentPathSystem,
    TreeRepresentation,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub graph: Graph,
    pub rep: TreeRepresentation,
    pub ips: IndependentPathSystem,
    pub base: BaseTree,
    pub family: OverspanFamily,
}

impl Decomposition {
    /// Clique tree, independent set, base tree and overspan family of a
    /// connected chordal graph.
    pub fn new(g: &Graph) -> Result<Self> {
        let rep = build_tree_representation(g)?;
        let ips = select_independent_set(&rep, g)?;
        let base = build_base_tree(&rep, &ips)?;
        let family = build_overspan_family(g, &rep, &ips, &base);
        Ok(Decomposition { graph: g.clone(), rep, ips, base, family })
    }
}
