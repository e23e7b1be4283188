//! Plain-text graph files and DOT rendering.
//!
//! A graph file is a header line `n m` followed by `m` lines `u v` with
//! `0 <= u < v < n`. Lines starting with `#` and blank lines are skipped.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::treerep::{BaseTree, EdgeColour, TreeRepresentation};

fn parse_pair(line: &str, lineno: usize, what: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse { line: lineno, message: format!("malformed {what} {line:?}, expected two non-negative integers") };
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let b = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

/// Parses a graph file. Errors name the offending (1-based) line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing header \"n m\"".into() })?;
    let (n, m) = parse_pair(header, hline, "header")?;
    let mut g = Graph::new(n);
    let mut seen = BTreeSet::new();
    let mut count = 0;
    let mut last = hline;
    for (lineno, line) in lines {
        last = lineno;
        let (u, v) = parse_pair(line, lineno, "edge line")?;
        if u == v {
            return Err(Error::Parse { line: lineno, message: format!("self-loop {u} {v}") });
        }
        if u >= n || v >= n {
            return Err(Error::Parse { line: lineno, message: format!("vertex index out of range in {u} {v} (n = {n})") });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse { line: lineno, message: format!("duplicate edge {u} {v}") });
        }
        g.add_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(Error::Parse { line: last, message: format!("header announces {m} edges, found {count}") });
    }
    Ok(g)
}

/// Renders `g` in graph-file format with edges in lexicographic order.
pub fn render_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    for v in g.loops() {
        let _ = writeln!(s, "  {v} -- {v};");
    }
    s.push_str("}\n");
    s
}

fn clique_label(c: &[usize]) -> String {
    let body: Vec<String> = c.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", body.join(","))
}

pub fn clique_tree_to_dot(rep: &TreeRepresentation) -> String {
    let mut s = String::from("graph T0 {\n");
    for (i, c) in rep.cliques.iter().enumerate() {
        let _ = writeln!(s, "  K{i} [label=\"K{i} {}\"];", clique_label(c));
    }
    for &(a, b) in &rep.edges {
        let _ = writeln!(s, "  K{a} -- K{b};");
    }
    s.push_str("}\n");
    s
}

/// Base tree with red and black edges; red edges are labelled with the
/// vertex whose I-path they replace.
pub fn base_tree_to_dot(rep: &TreeRepresentation, base: &BaseTree) -> String {
    let mut s = String::from("graph T {\n");
    for &t0 in &base.nodes {
        let _ = writeln!(s, "  K{t0} [label=\"K{t0} {}\"];", clique_label(&rep.cliques[t0]));
    }
    for e in &base.edges {
        let (a, b) = (base.nodes[e.a], base.nodes[e.b]);
        match e.colour {
            EdgeColour::Red => {
                let x = e.red_source.map(|x| x.to_string()).unwrap_or_default();
                let _ = writeln!(s, "  K{a} -- K{b} [color=red, label=\"{x}\"];");
            }
            EdgeColour::Black => {
                let _ = writeln!(s, "  K{a} -- K{b} [color=black];");
            }
        }
    }
    s.push_str("}\n");
    s
}
