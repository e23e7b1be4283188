//! Separator certifying toughness below 10, with the sets it was built from.

use tough_chordal::{find_violating_subfamily, toughness, Decomposition, HallBound, DEFAULT_CAP};
use tough_chordal::{extract_separator, generate_chordal, Family, GeneratorSpec};

fn main() {
    let g = generate_chordal(&GeneratorSpec::new(Family::Split { clique: 3, independent: 6 }, 11)).unwrap();
    let d = Decomposition::new(&g).unwrap();
    let violation = find_violating_subfamily(&d.family, DEFAULT_CAP, HallBound::Cycle)
        .unwrap()
        .expect("a split graph with many pendant-like vertices is not tough");
    let w = extract_separator(&g, &d.base, &d.family, &violation.items, HallBound::Cycle).unwrap();

    println!("seed subfamily {:?} (nu = {})", violation.items, violation.nu);
    println!("cover {:?}, extended family {:?}", w.cover, w.extended);
    println!("E0 {:?} E1 {:?} E2 {:?} E' {:?} X' {:?}", w.e0, w.e1, w.e2, w.e_prime, w.x_prime);
    println!("S = {:?} leaves {} components", w.separator, w.components);
    println!("exact toughness {}", toughness(&g).unwrap());
}
