//! Systems of disjoint representatives for the overspan family.

use tough_chordal::{find_sdr, Decomposition, Graph};

fn main() {
    let k4_minus_edge = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();

    for (name, g) in [("K4 minus an edge", k4_minus_edge), ("P4", p4)] {
        let d = Decomposition::new(&g).unwrap();
        match find_sdr(&d.family, &[]) {
            Some(sdr) => {
                sdr.verify(&d.family, &[]).unwrap();
                println!("{name}: representatives {:?}", sdr.choice);
            }
            None => println!("{name}: no system of disjoint representatives"),
        }
    }
}
