//! Clique tree of a chordal graph: maximal cliques as nodes, one subtree per
//! vertex.

use tough_chordal::io::clique_tree_to_dot;
use tough_chordal::{build_tree_representation, maximal_cliques, Graph};

fn main() {
    // two triangles sharing vertex 2, plus a pendant vertex on 4
    let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
    println!("maximal cliques: {:?}", maximal_cliques(&g).unwrap());

    let rep = build_tree_representation(&g).unwrap();
    rep.validate(&g).unwrap();
    println!("tree edges: {:?}", rep.edges);
    for (v, nodes) in rep.subtrees.iter().enumerate() {
        println!("  F_{v} = {nodes:?}");
    }
    println!("leaf owners: {:?}", rep.leaf_owners);
    print!("{}", clique_tree_to_dot(&rep));
}
