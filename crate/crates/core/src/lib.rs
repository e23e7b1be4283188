//! Hamilton cycles in chordal graphs, or a separator certifying that the
//! graph is less than 10-tough.
//!
//! The pipeline builds a clique tree, picks an independent set of vertices
//! whose subtrees are paths, contracts the tree to a base tree with red and
//! black edges, and attaches an overspan graph to every base-tree edge. A
//! system of disjoint representatives for that family yields a Hamilton
//! cycle via an Euler tour; its absence yields a subfamily with a small
//! matching number, whose minimum vertex cover is turned into a separator.
//!
//! ```
//! use tough_chordal::{run_pipeline, Graph, PipelineOptions, PipelineResult};
//!
//! let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
//! match run_pipeline(&g, PipelineOptions::default()).unwrap() {
//!     PipelineResult::HamiltonCycle { cycle } => assert!(g.is_hamilton_cycle(&cycle)),
//!     PipelineResult::Witness(w) => assert!(w.certifies_toughness_below_10()),
//! }
//! ```

pub mod chordal;
pub mod decomposition;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hamilton;
pub mod io;
pub mod oracle;
pub mod overspan;
pub mod sdr;
pub mod toughness;
pub mod treerep;
pub mod witness;

pub use chordal::{is_chordal, lex_bfs, maximal_cliques, Chordality, PerfectEliminationOrder};
pub use decomposition::Decomposition;
pub use error::{Error, Result};
pub use generate::{generate_chordal, Family, GeneratorSpec};
pub use graph::{Element, Graph};
pub use hamilton::{
    construct_hamilton_cycle, construct_hamilton_path, run_pipeline, PathOutcome, PipelineOptions, PipelineResult,
};
pub use io::{parse_graph, render_graph};
pub use overspan::{find_violating_subfamily, nu_tau_konig, HallBound, OverspanFamily, DEFAULT_CAP};
pub use sdr::{find_sdr, Sdr};
pub use toughness::{toughness, toughness_report, Toughness};
pub use treerep::{build_base_tree, build_tree_representation, select_independent_set, BaseTree, TreeRepresentation};
pub use witness::{extract_separator, WitnessSeparator};
