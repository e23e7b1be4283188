#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tough_chordal::{generate_chordal, Family, GeneratorSpec, Graph};

/// Generator spec number `i` of a corpus with vertex counts in `min_n..=max_n`,
/// cycling through the three families.
pub fn corpus_spec(master: u64, i: u64, min_n: usize, max_n: usize) -> GeneratorSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(master ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let n = rng.gen_range(min_n..=max_n);
    let family = match i % 3 {
        0 => {
            let k = rng.gen_range(1..=3.min(n - 1));
            Family::KTree { k, n }
        }
        1 => Family::Interval { n },
        _ => {
            let clique = rng.gen_range(1..=(n - 1).min(5));
            Family::Split { clique, independent: n - clique }
        }
    };
    GeneratorSpec::new(family, rng.gen())
}

pub fn corpus(master: u64, count: usize, min_n: usize, max_n: usize) -> Vec<(GeneratorSpec, Graph)> {
    (0..count as u64)
        .map(|i| {
            let spec = corpus_spec(master, i, min_n, max_n);
            let g = generate_chordal(&spec).expect("corpus spec is feasible");
            (spec, g)
        })
        .collect()
}
