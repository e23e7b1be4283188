//! Seeded generators for k-trees, interval graphs and split graphs.

use tough_chordal::{generate_chordal, is_chordal, render_graph, Family, GeneratorSpec};

fn main() {
    let specs = [
        GeneratorSpec::new(Family::KTree { k: 2, n: 7 }, 1),
        GeneratorSpec::new(Family::Interval { n: 6 }, 7),
        GeneratorSpec::new(Family::Split { clique: 3, independent: 3 }, 3),
    ];
    for spec in specs {
        let g = generate_chordal(&spec).unwrap();
        assert!(is_chordal(&g).is_chordal() && g.is_connected());
        println!("# {}", serde_json::to_string(&spec).unwrap());
        print!("{}", render_graph(&g));
    }
}
