//! Exact toughness by exhaustive separator search.

use tough_chordal::{toughness_report, Graph};

fn main() {
    let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    let k4_minus_edge = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();

    for (name, g) in [("K1,4", star), ("K4 minus an edge", k4_minus_edge), ("K5", Graph::complete(5))] {
        let r = toughness_report(&g).unwrap();
        println!("{name}: toughness {}, separator {:?}, components left: {}", r.toughness, r.separator, r.components);
    }
}
