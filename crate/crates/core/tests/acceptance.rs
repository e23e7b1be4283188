//! Acceptance criteria; one PASS/FAIL line each. Exits nonzero on failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tough_chordal::oracle::{all_minimum_covers, matching_number_oracle, vertex_cover_oracle};
use tough_chordal::overspan::{overspan_graph, union_subfamily};
use tough_chordal::witness::{
    check_enclosing_disconnection, enclosing_pairs, tree_component_bound, EdgeClasses, WitnessSeparator,
};
use tough_chordal::{
    construct_hamilton_path, find_sdr, find_violating_subfamily, nu_tau_konig, run_pipeline, toughness, Decomposition,
    Graph, HallBound, PathOutcome, PipelineOptions, PipelineResult, Toughness, DEFAULT_CAP,
};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

/// Independent re-check of a witness: recount components and compare.
fn witness_holds(g: &Graph, w: &WitnessSeparator) -> bool {
    let c = g.components_after_removal(&w.separator).map(|c| c.count).unwrap_or(0);
    c == w.components && c >= 2 && 10 * c > w.separator.len()
}

fn dichotomy() -> Verdict {
    let corpus = common::corpus(0xd1c0, 500, 3, 12);
    let start = Instant::now();
    let (mut cycles, mut witnesses, mut bad) = (0, 0, Vec::new());
    for (i, (_, g)) in corpus.iter().enumerate() {
        match run_pipeline(g, PipelineOptions::default()) {
            Ok(PipelineResult::HamiltonCycle { cycle }) if g.is_hamilton_cycle(&cycle) => cycles += 1,
            Ok(PipelineResult::Witness(w)) if witness_holds(g, &w) => witnesses += 1,
            Ok(r) => bad.push(format!("#{i} unverified {r:?}")),
            Err(e) => bad.push(format!("#{i} {e}")),
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed <= Duration::from_secs(60);
    verdict(
        pass,
        format!("{cycles} cycles, {witnesses} witnesses, {} indeterminate, {:.2?}{}", bad.len(), elapsed, first(&bad)),
    )
}

fn first(bad: &[String]) -> String {
    bad.first().map(|b| format!("; first: {b}")).unwrap_or_default()
}

fn konig() -> Verdict {
    let (mut graphs, mut subfamilies, mut skipped, mut bad) = (0, 0u64, 0, Vec::new());
    let mut i = 0;
    while graphs < 100 {
        let spec = common::corpus_spec(0x4b0e, i, 3, 8);
        i += 1;
        let g = tough_chordal::generate_chordal(&spec).unwrap();
        let d = Decomposition::new(&g).unwrap();
        let m = d.family.len();
        if m > 10 {
            skipped += 1;
            continue;
        }
        graphs += 1;
        for mask in 1u32..(1 << m) {
            subfamilies += 1;
            let picks: Vec<usize> = (0..m).filter(|&j| mask >> j & 1 == 1).collect();
            let h = union_subfamily(&d.family, &picks).unwrap().graph;
            match nu_tau_konig(&h) {
                Ok(cert) => {
                    let nu = matching_number_oracle(&h);
                    let tau = vertex_cover_oracle(&h).len();
                    if cert.nu != nu || cert.tau != tau || nu != tau || cert.verify(&h).is_err() {
                        bad.push(format!("{spec:?} {picks:?}: cert {}/{} oracle {nu}/{tau}", cert.nu, cert.tau));
                    }
                }
                Err(e) => bad.push(format!("{spec:?} {picks:?}: {e}")),
            }
        }
    }
    verdict(
        bad.is_empty(),
        format!("{graphs} graphs, {subfamilies} subfamilies, {skipped} graphs skipped (|family| > 10), {} mismatches{}", bad.len(), first(&bad)),
    )
}

fn random_tree(rng: &mut ChaCha8Rng, nodes: usize) -> Vec<(usize, usize)> {
    (1..nodes).map(|v| (rng.gen_range(0..v), v)).collect()
}

fn tree_components() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x76ee);
    let mut ks = vec![Ratio::new(1, 3), Ratio::new(2, 5), Ratio::new(1, 2)];
    while ks.len() < 8 {
        let q: i64 = rng.gen_range(6..=60);
        let k = Ratio::new(rng.gen_range((q + 2) / 3..=q / 2), q);
        if !ks.contains(&k) {
            ks.push(k);
        }
    }
    let (mut checks, mut bad) = (0, Vec::new());
    for _ in 0..1000 {
        let nodes = rng.gen_range(2..=12);
        let edges = random_tree(&mut rng, nodes);
        let mut degree = vec![0; nodes];
        for &(a, b) in &edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        let mut classes = EdgeClasses::default();
        for (e, &(a, b)) in edges.iter().enumerate() {
            if rng.gen_bool(0.5) {
                match usize::from(degree[a] <= 2) + usize::from(degree[b] <= 2) {
                    0 => classes.e0.push(e),
                    1 => classes.e1.push(e),
                    _ => classes.e2.push(e),
                }
            }
        }
        for &k in &ks {
            checks += 1;
            match tree_component_bound(nodes, &edges, &classes, k) {
                Ok(r) if r.holds => {}
                Ok(r) => bad.push(format!("{edges:?} {classes:?} k={k}: c2 {} < {}", r.c2, r.bound)),
                Err(e) => bad.push(format!("{edges:?} k={k}: {e}")),
            }
        }
    }
    let ks: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
    verdict(bad.is_empty(), format!("{checks} checks, k in {{{}}}, {} failures{}", ks.join(", "), bad.len(), first(&bad)))
}

fn disconnection() -> Verdict {
    let (mut pairs, mut covers, mut bad) = (0u64, 0u64, Vec::new());
    for (spec, g) in common::corpus(0xd15c, 100, 3, 10) {
        let d = Decomposition::new(&g).unwrap();
        for e in 0..d.base.edge_count() {
            let a_e = overspan_graph(&d.graph, &d.rep, &d.ips, &d.base, e);
            for cover in all_minimum_covers(&a_e) {
                covers += 1;
                let mut removed = cover.clone();
                removed.extend(d.base.edges[e].red_source);
                for pair in enclosing_pairs(&d.rep, &d.base, e, &removed) {
                    pairs += 1;
                    match check_enclosing_disconnection(&d.graph, &d.rep, &d.ips, &d.base, e, &cover, &pair) {
                        Ok(true) => {}
                        Ok(false) => bad.push(format!("{spec:?} edge {e} cover {cover:?} pair {pair:?}")),
                        Err(err) => bad.push(format!("{spec:?} edge {e}: {err}")),
                    }
                }
            }
        }
    }
    verdict(
        bad.is_empty() && pairs > 0,
        format!("{covers} minimum covers, {pairs} enclosing pairs, {} not separated{}", bad.len(), first(&bad)),
    )
}

/// Absence of a violating subfamily implies a representative system, for the
/// plain family and for families with two forbidden vertices. The converse
/// need not hold; such instances are only counted.
fn sdr_completeness() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5d2);
    let (mut none_cases, mut instances, mut both, mut bad) = (0, 0, 0, Vec::new());
    let corpora = [common::corpus(0xd1c0, 500, 3, 12), common::corpus(0x9a7, 100, 3, 12)];
    for (spec, g) in corpora.iter().flatten() {
        let d = Decomposition::new(g).unwrap();
        let (u, v) = random_pair(&mut rng, g.n());
        for (bound, forbidden) in [(HallBound::Cycle, vec![]), (HallBound::Path, vec![u, v])] {
            instances += 1;
            let violation = match find_violating_subfamily(&d.family, DEFAULT_CAP, bound) {
                Ok(x) => x,
                Err(e) => {
                    bad.push(format!("{spec:?}: {e}"));
                    continue;
                }
            };
            let sdr = find_sdr(&d.family, &forbidden);
            match (&violation, &sdr) {
                (None, Some(_)) => none_cases += 1,
                (None, None) => bad.push(format!("{spec:?} {bound:?} forbidden {forbidden:?}: no violator and no SDR")),
                (Some(_), Some(_)) => both += 1,
                (Some(_), None) => {}
            }
        }
    }
    verdict(
        bad.is_empty(),
        format!(
            "{instances} instances, {none_cases} without a violator (all with SDR), {both} with both, {} failures{}",
            bad.len(),
            first(&bad)
        ),
    )
}

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    (u, v)
}

fn witness_soundness() -> Verdict {
    let (mut checked, mut bad) = (0, Vec::new());
    for (spec, g) in common::corpus(0xd1c0, 500, 3, 12).into_iter().filter(|(_, g)| g.n() <= 10) {
        let Ok(PipelineResult::Witness(w)) = run_pipeline(&g, PipelineOptions::default()) else {
            continue;
        };
        checked += 1;
        let ratio = Toughness::ratio(w.separator.len() as u64, w.components as u64);
        match toughness(&g) {
            Ok(t) if t <= ratio && ratio < Toughness::ratio(10, 1) => {}
            Ok(t) => bad.push(format!("{spec:?}: toughness {t}, witness ratio {ratio}")),
            Err(e) => bad.push(format!("{spec:?}: {e}")),
        }
    }
    verdict(bad.is_empty() && checked > 0, format!("{checked} witnesses confirmed by exact toughness, {} failures{}", bad.len(), first(&bad)))
}

/// `cycle` equals `target` up to rotation and reflection.
fn same_cycle(cycle: &[usize], target: &[usize]) -> bool {
    let n = target.len();
    cycle.len() == n
        && (0..n).any(|r| {
            (0..n).all(|i| cycle[(i + r) % n] == target[i]) || (0..n).all(|i| cycle[(r + n - i) % n] == target[i])
        })
}

fn golden() -> Verdict {
    let k4e = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let opts = PipelineOptions::default();
    let cycle = match run_pipeline(&k4e, opts) {
        Ok(PipelineResult::HamiltonCycle { cycle }) => cycle,
        r => return verdict(false, format!("K4-e: {r:?}")),
    };
    let witness = match run_pipeline(&p4, opts) {
        Ok(PipelineResult::Witness(w)) => w,
        r => return verdict(false, format!("P4: {r:?}")),
    };
    let pass = same_cycle(&cycle, &[1, 3, 2, 0]) && witness.separator == vec![1] && witness.components == 2;
    verdict(pass, format!("K4-e cycle {cycle:?}, P4 separator {:?} with {} components", witness.separator, witness.components))
}

fn path_variant() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a7);
    let (mut paths, mut witnesses, mut diagnostics, mut bad) = (0, 0, 0, Vec::new());
    for (spec, g) in common::corpus(0x9a7, 100, 3, 12) {
        let (u, v) = random_pair(&mut rng, g.n());
        match construct_hamilton_path(&g, u, v, PipelineOptions::default()) {
            Ok(PathOutcome::HamiltonPath { path })
                if g.is_hamilton_path(&path) && path[0] == u && path[path.len() - 1] == v =>
            {
                paths += 1
            }
            Ok(PathOutcome::Witness(w)) if witness_holds(&g, &w) => witnesses += 1,
            Ok(PathOutcome::Diagnostic { reason }) => {
                diagnostics += 1;
                println!("  diagnostic {spec:?} {u}-{v}: {reason}");
            }
            Ok(r) => bad.push(format!("{spec:?} {u}-{v}: unverified {r:?}")),
            Err(e) => bad.push(format!("{spec:?} {u}-{v}: {e}")),
        }
    }
    verdict(
        bad.is_empty(),
        format!("{paths} paths, {witnesses} witnesses, {diagnostics} diagnostics, {} failures{}", bad.len(), first(&bad)),
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Verdict);
    let criteria: [Criterion; 8] = [
        ("dichotomy", dichotomy),
        ("konig", konig),
        ("tree_components", tree_components),
        ("disconnection", disconnection),
        ("sdr_completeness", sdr_completeness),
        ("witness_soundness", witness_soundness),
        ("golden_traces", golden),
        ("path_variant", path_variant),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        failed += usize::from(!v.pass);
        println!("{} {}. {name}: {}", if v.pass { "PASS" } else { "FAIL" }, i + 1, v.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
