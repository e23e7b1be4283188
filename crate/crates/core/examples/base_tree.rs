//! Independent I-paths and the red/black base tree.

use tough_chordal::io::base_tree_to_dot;
use tough_chordal::{Decomposition, Graph};

fn main() {
    // the path 0-1-2-3-4: vertex 2 owns a two-node I-path, which becomes a red edge
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    let d = Decomposition::new(&g).unwrap();

    for p in &d.ips.paths {
        println!("I-path of {}: nodes {:?}", p.vertex, p.nodes);
    }
    for (i, e) in d.base.edges.iter().enumerate() {
        let (a, b) = (d.base.nodes[e.a], d.base.nodes[e.b]);
        println!("base edge {i}: K{a} - K{b} {:?} (source {:?}, suppressed path {:?})", e.colour, e.red_source, e.t0_path);
    }
    print!("{}", base_tree_to_dot(&d.rep, &d.base));
}
