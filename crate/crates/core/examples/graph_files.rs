//! Reading and writing graph files, and DOT output.
//!
//! Usage: `cargo run --example graph_files [FILE]`; without a file a small
//! built-in graph is used.

use tough_chordal::io::graph_to_dot;
use tough_chordal::{parse_graph, render_graph};

const DEFAULT: &str = "# K4 minus the edge 0-3\n4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable file"),
        None => DEFAULT.to_string(),
    };
    match parse_graph(&text) {
        Ok(g) => {
            print!("{}", render_graph(&g));
            print!("{}", graph_to_dot(&g));
        }
        Err(e) => eprintln!("{e}"),
    }
    for bad in ["2 2\n0 1\n0 1\n", "3 1\n1 1\n", "3 1\n0 7\n", "three 1\n"] {
        println!("{:?} -> {}", bad, parse_graph(bad).unwrap_err());
    }
}
