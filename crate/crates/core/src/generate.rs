//! Seeded generators of connected chordal graphs.
//!
//! Output depends only on the spec: the RNG is ChaCha8 seeded from the
//! 64-bit seed, so graphs are reproducible across platforms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// Iterated simplicial addition onto a `(k+1)`-clique.
    #[serde(rename = "ktree")]
    KTree { k: usize, n: usize },
    /// Intersection graph of `n` random closed intervals.
    Interval { n: usize },
    /// A clique plus an independent set, each independent vertex joined to a
    /// random nonempty part of the clique.
    Split { clique: usize, independent: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub family: Family,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, seed: u64) -> Self {
        GeneratorSpec { family, seed }
    }
}

/// Relabels `g` by a random permutation so vertex indices carry no
/// construction order.
fn shuffled(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    let mut h = Graph::new(g.n());
    for (u, v) in g.edges() {
        h.add_edge(perm[u], perm[v]).expect("permutation stays in range");
    }
    h
}

fn ktree(k: usize, n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if k == 0 || n < k + 1 {
        return Err(Error::InvalidArgument(format!("k-tree needs k >= 1 and n >= k+1 (k = {k}, n = {n})")));
    }
    let mut g = Graph::new(n);
    for (u, v) in Graph::complete(k + 1).edges() {
        g.add_edge(u, v)?;
    }
    let base: Vec<usize> = (0..=k).collect();
    let mut cliques: Vec<Vec<usize>> = (0..=k)
        .map(|skip| base.iter().copied().filter(|&x| x != skip).collect())
        .collect();
    for v in k + 1..n {
        let c = cliques[rng.gen_range(0..cliques.len())].clone();
        for &u in &c {
            g.add_edge(u, v)?;
        }
        for skip in 0..k {
            let mut next: Vec<usize> = c.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
            next.push(v);
            cliques.push(next);
        }
    }
    Ok(g)
}

fn interval(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("interval graph needs n >= 1".into()));
    }
    let span = 2 * n as u64;
    let mut iv: Vec<(u64, u64)> = (0..n)
        .map(|_| {
            let l = rng.gen_range(0..span);
            (l, l + rng.gen_range(1..=(n as u64 / 2 + 1)))
        })
        .collect();
    iv.sort_unstable();
    // pull gaps shut: every interval starts no later than the reach so far
    let mut reach = iv[0].1;
    for x in iv.iter_mut().skip(1) {
        if x.0 > reach {
            let len = x.1 - x.0;
            *x = (reach, reach + len);
        }
        reach = reach.max(x.1);
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if iv[i].0 <= iv[j].1 && iv[j].0 <= iv[i].1 {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

fn split(clique: usize, independent: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if clique == 0 {
        return Err(Error::InvalidArgument("split graph needs a nonempty clique".into()));
    }
    let mut g = Graph::new(clique + independent);
    for u in 0..clique {
        for v in u + 1..clique {
            g.add_edge(u, v)?;
        }
    }
    for x in clique..clique + independent {
        let mut any = false;
        for u in 0..clique {
            if rng.gen_bool(0.5) {
                g.add_edge(u, x)?;
                any = true;
            }
        }
        if !any {
            g.add_edge(rng.gen_range(0..clique), x)?;
        }
    }
    Ok(g)
}

/// A connected chordal graph drawn from `spec`.
pub fn generate_chordal(spec: &GeneratorSpec) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let g = match spec.family {
        Family::KTree { k, n } => ktree(k, n, &mut rng)?,
        Family::Interval { n } => interval(n, &mut rng)?,
        Family::Split { clique, independent } => split(clique, independent, &mut rng)?,
    };
    Ok(shuffled(&g, &mut rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::{is_chordal, Chordality};

    fn gen(family: Family, seed: u64) -> Graph {
        generate_chordal(&GeneratorSpec::new(family, seed)).unwrap()
    }

    #[test]
    fn one_trees_are_trees() {
        for seed in 0..20 {
            let g = gen(Family::KTree { k: 1, n: 4 }, seed);
            assert_eq!(g.edge_count(), 3);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn base_clique_only() {
        assert_eq!(gen(Family::KTree { k: 3, n: 4 }, 99), Graph::complete(4));
    }

    #[test]
    fn outputs_are_connected_and_chordal() {
        for seed in 0..50 {
            for fam in [
                Family::KTree { k: 2, n: 9 },
                Family::Interval { n: 6 },
                Family::Interval { n: 11 },
                Family::Split { clique: 3, independent: 5 },
            ] {
                let g = gen(fam, seed);
                assert!(g.is_connected(), "{fam:?} seed {seed}");
                assert!(matches!(is_chordal(&g), Chordality::Chordal(_)), "{fam:?} seed {seed}");
            }
        }
    }

    #[test]
    fn reproducible() {
        let f = Family::Interval { n: 10 };
        assert_eq!(gen(f, 7), gen(f, 7));
        let k = Family::KTree { k: 2, n: 12 };
        assert_eq!(gen(k, 3), gen(k, 3));
        assert_ne!(gen(k, 3), gen(k, 4));
    }

    #[test]
    fn infeasible_parameters() {
        for fam in [Family::KTree { k: 0, n: 3 }, Family::KTree { k: 3, n: 3 }, Family::Interval { n: 0 }, Family::Split { clique: 0, independent: 2 }] {
            assert!(generate_chordal(&GeneratorSpec::new(fam, 0)).is_err());
        }
    }
}
