//! Exit criteria, one pass/fail line each. Run with `cargo test --test acceptance`.

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use schyper::construct::{build_gamma, swap_antimorphism, ConstructionParams, Gamma};
use schyper::hypercore::{
    binomial, parse_edge_list, rank_colex, to_edge_list, unrank_colex, ColexSubsets,
};
use schyper::parity::{admissible, binom_parity, default_scan_bound, residue_classes, Parity};
use schyper::search::{enumerate_sc_hypergraphs, search_regular_sc, CapPolicy};
use schyper::verify::{
    automorphism_vertex_orbits, euler_characteristic_triangulation, pair_case_breakdown,
    t_subset_regularity, verify_antimorphism, vertex_invariant_k4, PairCase, SearchLimits,
    Skeleton,
};
use schyper::{Hypergraph, Permutation};

const SWEEP: [usize; 12] = [6, 10, 14, 18, 22, 26, 30, 34, 38, 42, 46, 50];

/// Survivors of the order-6 search, recorded from the first exhaustive run and
/// confirmed by an independent bitmask scan over all 2^20 triple sets.
const ORDER_SIX_REGULAR_SURVIVORS: usize = 8;

fn within(start: Instant, limit: Duration, what: &str) {
    let took = start.elapsed();
    assert!(took < limit, "{what} took {took:?}, limit {limit:?}");
}

fn construction_sweep() {
    let start = Instant::now();
    for n in SWEEP {
        let g = build_gamma(n).unwrap();
        let half = binomial(n as u64, 3).unwrap() / 2;
        assert_eq!(g.edge_count() as u64, half, "n = {n}: |E|");
        let r = t_subset_regularity(&g, 2).unwrap();
        assert_eq!(r.valence(), Some((n as u64 - 2) / 2), "n = {n}: {r}");
        let phi = swap_antimorphism(n).unwrap();
        assert!(
            verify_antimorphism(&g, &phi).unwrap().holds(),
            "n = {n}: swap"
        );
    }
    within(start, Duration::from_secs(10), "sweep");
}

fn case_analysis() {
    for n in [6, 10, 14] {
        let gamma = Gamma::build(n).unwrap();
        let k = ConstructionParams::for_order(n).unwrap().kparam as u64;
        let mut seen = 0;
        for u in 0..n {
            for v in u + 1..n {
                let b = pair_case_breakdown(&gamma, u, v).unwrap();
                let expected = match b.case {
                    PairCase::A => [2 * k - 1, 1, 0],
                    PairCase::B => [0, 0, 2 * k],
                    PairCase::C => [0, 0, 2 * k],
                    PairCase::D => [0, 1, 2 * k - 1],
                };
                assert_eq!(b.counts, expected, "n = {n}, pair ({u},{v}) {}", b.case);
                seen += 1;
            }
        }
        assert_eq!(seen, binomial(n as u64, 2).unwrap());
    }
}

fn admissibility() {
    for n in 4..=1024u64 {
        assert_eq!(
            admissible(n, 3, 2).unwrap().admissible(),
            n % 4 == 2,
            "n = {n}"
        );
    }
    let rc = |k, t| residue_classes(k, t, 4, default_scan_bound(k, 4)).unwrap();
    assert_eq!(rc(2, 1).into_iter().collect::<Vec<_>>(), vec![1]);
    assert_eq!(rc(3, 1).into_iter().collect::<Vec<_>>(), vec![1, 2]);
    assert_eq!(rc(3, 2).into_iter().collect::<Vec<_>>(), vec![2]);
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    permutations(n - 1)
        .into_iter()
        .flat_map(|p| {
            (0..n).map(move |i| {
                let mut q = p.clone();
                q.insert(i, n - 1);
                q
            })
        })
        .collect()
}

fn gamma6_invariants() {
    let start = Instant::now();
    let g = build_gamma(6).unwrap();
    assert_eq!(t_subset_regularity(&g, 2).unwrap().valence(), Some(2));
    assert_eq!(
        euler_characteristic_triangulation(&g, Skeleton::CompleteGraph).unwrap(),
        1
    );
    // every automorphism among the 720 permutations, then the orbit of vertex 0
    let perms = permutations(6);
    assert_eq!(perms.len(), 720);
    let mut orbit: Vec<usize> = perms
        .into_iter()
        .map(|p| Permutation::new(p).unwrap())
        .filter(|p| g.permuted(p).unwrap() == g)
        .map(|p| p.image(0))
        .collect();
    orbit.sort_unstable();
    orbit.dedup();
    assert_eq!(orbit.len(), 6, "orbit of vertex 0");
    let orbits = automorphism_vertex_orbits(&g, SearchLimits::default()).unwrap();
    assert_eq!(orbits.orbit_count(), Some(1));
    within(start, Duration::from_secs(1), "order-6 invariants");
}

fn gamma10_not_transitive() {
    let start = Instant::now();
    let g = build_gamma(10).unwrap();
    let counts: Vec<u64> = (0..10)
        .map(|v| vertex_invariant_k4(&g, v).unwrap())
        .collect();
    let side0: Vec<u64> = counts[..5].to_vec();
    let side1: Vec<u64> = counts[5..].to_vec();
    assert!(
        side0.iter().all(|c| side1.iter().all(|d| c != d)),
        "{counts:?}"
    );
    within(start, Duration::from_secs(5), "K4 invariant");
}

fn search_oracle() {
    let start = Instant::now();
    let phi = swap_antimorphism(6).unwrap();
    let en = enumerate_sc_hypergraphs(6, 3, &phi, CapPolicy::default()).unwrap();
    assert_eq!(en.decomposition().len(), 10);
    assert_eq!(en.len(), 1024);
    let mut emitted = 0;
    for h in en.iter() {
        assert!(verify_antimorphism(&h, &phi).unwrap().holds());
        emitted += 1;
    }
    assert_eq!(emitted, 1024);
    let summary = search_regular_sc(6, 3, 2, &phi, CapPolicy::default(), 4).unwrap();
    assert!(summary.regular.contains(&build_gamma(6).unwrap()));
    assert_eq!(summary.regular.len(), ORDER_SIX_REGULAR_SURVIVORS);
    assert_eq!(summary.to_string(), "orbits=10 candidates=1024 regular=8");
    within(start, Duration::from_secs(5), "search");
}

fn property_suite() {
    // complement involution and complement valence on every Γ_n of the sweep
    for n in SWEEP {
        let g = build_gamma(n).unwrap();
        let c = g.complement();
        assert_eq!(c.complement(), g);
        let l = t_subset_regularity(&g, 2).unwrap().valence().unwrap();
        let lc = t_subset_regularity(&c, 2).unwrap().valence().unwrap();
        assert_eq!(l + lc, binomial(n as u64 - 2, 1).unwrap());
        assert_eq!(
            l * binomial(n as u64, 2).unwrap(),
            g.edge_count() as u64 * 3
        );
        assert_eq!(
            lc * binomial(n as u64, 2).unwrap(),
            c.edge_count() as u64 * 3
        );
    }
    // exhaustive on every 3-hypergraph on 5 vertices
    for mask in 0u32..1 << 10 {
        let h = Hypergraph::from_ranks(5, 3, (0..10).filter(|i| mask >> i & 1 == 1)).unwrap();
        assert_eq!(h.complement().complement(), h);
        for t in [1, 2] {
            if let Some(l) = t_subset_regularity(&h, t).unwrap().valence() {
                assert_eq!(
                    l * binomial(5, t as u64).unwrap(),
                    h.edge_count() as u64 * binomial(3, t as u64).unwrap()
                );
                let lc = t_subset_regularity(&h.complement(), t).unwrap().valence();
                assert_eq!(lc, Some(binomial(5 - t as u64, 3 - t as u64).unwrap() - l));
            }
        }
    }
    for a in 0..=64u64 {
        for b in 0..=a {
            let odd = binomial(a, b).unwrap() % 2 == 1;
            assert_eq!(binom_parity(a, b) == Parity::Odd, odd, "C({a},{b})");
        }
    }
    for n in 0..=12 {
        for k in 0..=n.min(4) {
            let total = binomial(n as u64, k as u64).unwrap();
            let mut seen = 0;
            for (r, s) in ColexSubsets::new(n, k).enumerate() {
                assert_eq!(rank_colex(&s, n, k).unwrap(), r as u64);
                assert_eq!(unrank_colex(r as u64, n, k).unwrap(), s);
                seen += 1;
            }
            assert_eq!(seen, total);
        }
    }
}

fn serialization_round_trip() {
    for n in SWEEP {
        let g = build_gamma(n).unwrap();
        let first = to_edge_list(&g, &[]);
        let again = to_edge_list(&build_gamma(n).unwrap(), &[]);
        assert_eq!(first, again, "n = {n}: construction not byte-stable");
        let back = parse_edge_list(&first).unwrap();
        assert_eq!(back, g);
        assert_eq!(to_edge_list(&back, &[]), first);
        assert_eq!(
            t_subset_regularity(&back, 2).unwrap().valence(),
            Some((n as u64 - 2) / 2)
        );
        assert!(verify_antimorphism(&back, &swap_antimorphism(n).unwrap())
            .unwrap()
            .holds());
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 8] = [
        ("construction sweep n = 6..50", construction_sweep),
        ("pair case analysis n = 6, 10, 14", case_analysis),
        ("admissibility and residue classes", admissibility),
        ("order-6 invariants", gamma6_invariants),
        ("order-10 non-transitivity", gamma10_not_transitive),
        ("search oracle at order 6", search_oracle),
        ("property suite", property_suite),
        ("serialization round trip", serialization_round_trip),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match panic::catch_unwind(check) {
            Ok(()) => println!("PASS  [{}] {name} ({:.2?})", i + 1, start.elapsed()),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL  [{}] {name}: {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
