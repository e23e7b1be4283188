//! The cycle-or-witness pipeline over a seeded corpus of random chordal graphs.

use tough_chordal::{generate_chordal, run_pipeline, Family, GeneratorSpec, PipelineOptions, PipelineResult};

fn main() {
    let families = [Family::KTree { k: 5, n: 10 }, Family::Interval { n: 10 }, Family::Split { clique: 8, independent: 3 }];
    for family in families {
        let (mut cycles, mut witnesses) = (0, 0);
        for seed in 0..100 {
            let g = generate_chordal(&GeneratorSpec::new(family, seed)).unwrap();
            match run_pipeline(&g, PipelineOptions::default()).unwrap() {
                PipelineResult::HamiltonCycle { cycle } => {
                    assert!(g.is_hamilton_cycle(&cycle));
                    cycles += 1;
                }
                PipelineResult::Witness(w) => {
                    assert!(w.certifies_toughness_below_10());
                    witnesses += 1;
                }
            }
        }
        println!("{family:?}: {cycles} cycles, {witnesses} witnesses");
    }
}
