//! Overspan graphs, König certificates and the search for a subfamily with
//! a small matching number.

use tough_chordal::overspan::union_subfamily;
use tough_chordal::{find_violating_subfamily, nu_tau_konig, Decomposition, Graph, HallBound, DEFAULT_CAP};

fn main() {
    let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let d = Decomposition::new(&g).unwrap();

    for (i, item) in d.family.items.iter().enumerate() {
        println!("item {i}: base edge {} copy {} elements {:?}", item.edge, item.copy, item.graph.elements());
    }
    let all: Vec<usize> = (0..d.family.len()).collect();
    let union = union_subfamily(&d.family, &all).unwrap();
    let cert = nu_tau_konig(&union.graph).unwrap();
    println!("whole family: nu = {}, tau = {}, matching {:?}, cover {:?}", cert.nu, cert.tau, cert.matching, cert.cover);

    match find_violating_subfamily(&d.family, DEFAULT_CAP, HallBound::Cycle).unwrap() {
        Some(v) => println!("violating subfamily {:?} with nu = {}", v.items, v.nu),
        None => println!("every subfamily satisfies the bound"),
    }
}
