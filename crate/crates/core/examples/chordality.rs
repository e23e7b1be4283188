//! Recognise chordal graphs: an elimination order, or an induced cycle.

use tough_chordal::{is_chordal, lex_bfs, Chordality, Graph};

fn main() {
    let k4_minus_edge = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();

    for (name, g) in [("K4 minus an edge", &k4_minus_edge), ("C5", &c5)] {
        println!("{name}: lexicographic BFS visits {:?}", lex_bfs(g));
        match is_chordal(g) {
            Chordality::Chordal(peo) => println!("  chordal, elimination order {:?}", peo.order),
            Chordality::Hole(cycle) => println!("  not chordal, induced cycle {cycle:?}"),
        }
    }
}
