//! Hamilton cycle from an Euler tour of the base tree, with the full trace.

use tough_chordal::hamilton::trace_hamilton_cycle;
use tough_chordal::{find_sdr, Decomposition, Graph};

fn main() {
    // a 2-tree on 6 vertices: a strip of four triangles
    let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]).unwrap();
    let d = Decomposition::new(&g).unwrap();
    let sdr = find_sdr(&d.family, &[]).expect("this graph admits representatives");
    let trace = trace_hamilton_cycle(&g, &d.rep, &d.base, &d.family, &sdr).unwrap();

    for p in &trace.association.pairs {
        println!("step {} -> {} (edge {}): F_{} F_{} {:?}", p.step.from, p.step.to, p.step.edge, p.first, p.second, p.kind);
    }
    println!("subtree sequence {:?}", trace.sequence);
    println!("Hamilton cycle {:?}", trace.order);
    assert!(g.is_hamilton_cycle(&trace.order));
}
