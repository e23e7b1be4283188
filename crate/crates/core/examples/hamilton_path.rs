//! Hamilton paths between a chosen pair of vertices.

use tough_chordal::{construct_hamilton_path, Graph, PathOutcome, PipelineOptions};

fn main() {
    let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]).unwrap();
    for (u, v) in [(0, 5), (1, 4), (0, 1)] {
        match construct_hamilton_path(&g, u, v, PipelineOptions::default()).unwrap() {
            PathOutcome::HamiltonPath { path } => println!("{u} to {v}: {path:?}"),
            PathOutcome::Witness(w) => {
                println!("{u} to {v}: separator {:?} leaves {} components", w.separator, w.components)
            }
            PathOutcome::Diagnostic { reason } => println!("{u} to {v}: {reason}"),
        }
    }
}
