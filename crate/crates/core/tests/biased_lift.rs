mod common;

use common::{
    all_linear_pick_families, brute_lift_ranks, edge_endpoints, spike_minor_census, IsoClasses,
};
use fractal_core::biased_lift::*;
use fractal_core::bits::{self, Mask};
use fractal_core::comb::binomial;
use fractal_core::Matroid;
use proptest::prelude::*;

fn assert_lift_ranks(g: &GGraph, b: &LinearClass) {
    let m = lift_matroid(g, b).unwrap();
    let (v, ends) = edge_endpoints(g.kind, g.t, g.s, g.p);
    let ranks = brute_lift_ranks(v, &ends, &b.cycles);
    for x in 0..=bits::full(g.n()) {
        assert_eq!(
            m.rank_of(x).unwrap(),
            ranks[x as usize],
            "{g:?} {b:?} at {x:b}"
        );
    }
    assert_eq!(m.rank(), lift_rank_formula(g, b));
}

fn arb_hamiltonian() -> impl Strategy<Value = HamiltonianLift> {
    (
        0usize..=4,
        0usize..=4,
        0usize..=2,
        prop::collection::vec(any::<u32>(), 0..4),
    )
        .prop_filter("cycle of length >= 3", |(t, s, _, _)| t + s >= 3)
        .prop_map(|(t, s, p, raw)| {
            let mut picks: Vec<u32> = Vec::new();
            for h in raw {
                let h = h & bits::full(t);
                if picks.iter().all(|&x| (x ^ h).count_ones() >= 2) {
                    picks.push(h);
                }
            }
            HamiltonianLift::new(t, s, p, picks).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hamiltonian_lifts_match_rank_formula_on_every_subset(d in arb_hamiltonian()) {
        assert_lift_ranks(&d.graph(), &d.linear_class());
    }

    #[test]
    fn contraction_of_extra_loop_recovers_balanced_cycles(d in arb_hamiltonian()) {
        let g = d.graph();
        let m = d.matroid().unwrap();
        let mut with_loop = g;
        with_loop.p += 1;
        // Adding an unbalanced loop gives a matroid whose contraction of it is graphic.
        let lifted = lift_matroid(&with_loop, &d.linear_class()).unwrap();
        let e = with_loop.n() - 1;
        prop_assert_eq!(lifted.contract(e), graphic(&g).unwrap());
        let (g2, class) = lift_from_contraction(&lifted, e, &g).unwrap();
        prop_assert_eq!(g2, with_loop);
        prop_assert_eq!(&class, &d.linear_class());
        prop_assert_eq!(lifted.delete(e), m);
    }

    #[test]
    fn category_a_minors_stay_in_class(d in arb_hamiltonian(), e in 0usize..16) {
        prop_assume!(d.n() <= 10 && !d.picks.is_empty());
        let k = d.picks.len();
        let m = d.matroid().unwrap();
        let e = e % m.n();
        let below = CategoryIndex::new(m.n() - 1, k).unwrap();
        prop_assert!(below.categorize(&m.delete(e)).is_some());
        prop_assert!(below.categorize(&m.contract(e)).is_some());
    }
}

#[test]
fn two_vertex_and_single_vertex_lifts_match_rank_formula() {
    for j in 1..=4 {
        for p in 0..=2 {
            let g = GGraph::two(j, p);
            assert_lift_ranks(&g, &LinearClass::empty());
            assert_lift_ranks(&g, &LinearClass::all_cycles(&g));
            if j >= 2 {
                assert_lift_ranks(&g, &LinearClass::new(vec![0b11]));
            }
            if j == 4 {
                assert_lift_ranks(&g, &LinearClass::new(vec![0b0011, 0b1100]));
            }
        }
    }
    for p in 1..=4 {
        let g = GGraph::single(p);
        assert_lift_ranks(&g, &LinearClass::empty());
        assert_lift_ranks(&g, &LinearClass::new(vec![1]));
    }
}

#[test]
fn theta_with_exactly_two_balanced_cycles_is_rejected() {
    let g = GGraph::cycle(3, 0, 0);
    // Picks 000 and 001 differ at one pair: with pair 0 they form a theta.
    let bad = LinearClass::hamiltonian(&g, &[0b000, 0b001]);
    assert!(matches!(
        lift_matroid(&g, &bad),
        Err(LiftError::InvalidLinearClass(_))
    ));
    assert!(HamiltonianLift::new(3, 0, 0, vec![0, 1]).is_err());
    let two = GGraph::two(3, 0);
    assert!(lift_matroid(&two, &LinearClass::new(vec![0b011, 0b101])).is_err());
    assert!(lift_matroid(&two, &LinearClass::new(vec![0b011, 0b101, 0b110])).is_ok());
    assert!(matches!(
        lift_matroid(&GGraph::cycle(1, 1, 0), &LinearClass::empty()),
        Err(LiftError::InvalidGraph(_))
    ));
}

#[test]
fn spike_with_no_balanced_cycle_on_four_pairs() {
    let spec = SpikeSpec::new(4, vec![]).unwrap();
    let m = spec.matroid().unwrap();
    assert_eq!((m.n(), m.rank()), (8, 4));
    let small: Vec<Mask> = m.non_spanning_circuits().iter().collect();
    // The six unions of two pairs.
    assert_eq!(small.len(), 6);
    assert!(small
        .iter()
        .all(|&c| bits::size(c) == 4 && c & 0x55 == (c & 0xaa) >> 1));
    assert_eq!(spike_cyclic_flats(&spec).unwrap().len(), 8);
    assert_eq!(spike_cyclic_flats(&spec).unwrap(), m.cyclic_flats());
}

#[test]
fn spike_on_five_pairs_with_one_balanced_cycle() {
    let spec = SpikeSpec::new(5, vec![0]).unwrap();
    let m = spec.matroid().unwrap();
    let flats = m.cyclic_flats();
    assert_eq!(flats.len(), 1 + 1 + 1 + 10 + 10);
    assert_eq!(flats, spike_cyclic_flats(&spec).unwrap());
    assert_eq!(
        m.circuit_hyperplanes().iter().collect::<Vec<_>>(),
        vec![0b01_0101_0101]
    );
}

/// One family per orbit plus every family through the all-`a` cycle, `t <= 6`, `m <= 2`.
fn small_spikes() -> Vec<SpikeSpec> {
    let mut out = Vec::new();
    for t in 3..=6 {
        for m in 0..=2 {
            for f in all_linear_pick_families(t, m) {
                if m == 0 || f[0] == 0 {
                    out.push(SpikeSpec::new(t, f).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn spike_cyclic_flats_duality_and_circuit_hyperplanes() {
    for spec in small_spikes() {
        let m = spec.matroid().unwrap();
        assert_eq!(
            spike_cyclic_flats(&spec).unwrap(),
            m.cyclic_flats(),
            "{spec:?}"
        );
        assert!(duality_check(&spec).unwrap(), "{spec:?}");
        let chs: Vec<Mask> = m.circuit_hyperplanes().iter().collect();
        if spec.t >= 5 {
            assert_eq!(chs, spec.cycle_sets(), "{spec:?}");
        }
        if spec.t == 4 {
            let g = GGraph::cycle(4, 0, 0);
            let mut expected = spec.cycle_sets();
            for pairs in bits::combinations(4, 2) {
                let u = bits::elements(pairs).fold(0, |acc, i| acc | g.pair(i));
                // A union of two pairs is a circuit-hyperplane unless it holds a balanced cycle's closure.
                if m.table().is_circuit(u) && m.rank_of(u).unwrap() == 3 && m.table().is_flat(u) {
                    expected.push(u);
                }
            }
            expected.sort_unstable();
            assert_eq!(chs, expected);
            assert!(spec.cycle_sets().iter().all(|c| chs.contains(c)));
        }
    }
}

#[test]
fn dual_of_spike_is_complement_spike() {
    let spec = SpikeSpec::new(5, vec![0b00000, 0b00111]).unwrap();
    let d = spec.matroid().unwrap().dual();
    assert_eq!(d, spike(5, &[0b11111, 0b11000]).unwrap());
    assert_eq!(dual_picks(&spec.picks, 5), vec![0b11000, 0b11111]);
}

#[test]
fn truncated_cells_of_a_two_cycle_family() {
    // aaaaa and bbaaa: the last cycle shares three pairs with the other.
    let d = HamiltonianLift::new(5, 0, 0, vec![0b00000, 0b00011]).unwrap();
    assert_eq!(trun_cells(&d.picks, 5, 0, 0), vec![2, 3]);
    assert_eq!(trun_cells(&d.picks, 5, 0, 1), vec![2, 3]);
    assert_eq!(glance_signature(&d).unwrap().sig, vec![2, 3]);
    let flipped = HamiltonianLift::new(5, 0, 0, vec![0b11111, 0b11100]).unwrap();
    assert!(glance_isomorphic(&d, &flipped).unwrap());
    let other = HamiltonianLift::new(5, 0, 0, vec![0b00000, 0b00111]).unwrap();
    assert!(!glance_isomorphic(&d, &other).unwrap());
    assert!(!d
        .matroid()
        .unwrap()
        .is_isomorphic(&other.matroid().unwrap()));
    let with_loop = HamiltonianLift::new(5, 0, 1, vec![0b00000, 0b00011]).unwrap();
    assert!(!glance_isomorphic(&d, &with_loop).unwrap());
    let short = HamiltonianLift::new(4, 0, 0, vec![0, 3]).unwrap();
    assert!(matches!(
        glance_signature(&short),
        Err(LiftError::HypothesisViolated { .. })
    ));
}

/// Signature equality against kernel isomorphism over every family of `m`
/// cycles on `t` pairs with `s` thin edges and `p` loops.
fn glance_agrees_with_kernel(t: usize, s: usize, p: usize, m: usize) {
    let mut classes = IsoClasses::new();
    let mut key_of_class: Vec<GlanceKey> = Vec::new();
    let mut keys = std::collections::HashSet::new();
    for f in all_linear_pick_families(t, m) {
        let d = HamiltonianLift::new(t, s, p, f).unwrap();
        let key = glance_signature(&d).unwrap();
        let c = classes.insert(d.matroid().unwrap());
        if c == key_of_class.len() {
            key_of_class.push(key.clone());
            assert!(keys.insert(key.clone()), "two classes share {key:?}");
        }
        assert_eq!(key_of_class[c], key, "one class, two keys");
    }
}

#[test]
fn glance_signature_separates_exactly_the_isomorphism_classes() {
    glance_agrees_with_kernel(5, 0, 0, 2);
    glance_agrees_with_kernel(5, 0, 0, 3);
    glance_agrees_with_kernel(4, 1, 0, 2);
    glance_agrees_with_kernel(3, 2, 1, 2);
    glance_agrees_with_kernel(4, 1, 1, 3);
}

#[test]
fn canonical_pick_families_are_orbit_representatives() {
    for t in 2..=5 {
        for m in 0..=3 {
            let mut classes = IsoClasses::new();
            for f in all_linear_pick_families(t, m) {
                classes.insert(HamiltonianLift::new(t, 1, 0, f).unwrap().matroid().unwrap());
            }
            let reps = canonical_pick_families(t, m);
            let mut rep_classes = IsoClasses::new();
            for f in &reps {
                rep_classes.insert(
                    HamiltonianLift::new(t, 1, 0, f.clone())
                        .unwrap()
                        .matroid()
                        .unwrap(),
                );
            }
            // With t + 1 >= 5 distinct representatives are non-isomorphic; below
            // that the orbit count can only exceed the class count.
            assert!(reps.len() >= classes.len(), "t={t} m={m}");
            assert_eq!(rep_classes.len(), classes.len(), "t={t} m={m}");
            if t + 1 >= 5 {
                assert_eq!(reps.len(), classes.len(), "t={t} m={m}");
            }
        }
    }
}

#[test]
fn cell_equation_solution_counts() {
    assert_eq!(bottom_solution_count(12, 5).unwrap(), 1);
    assert_eq!(bottom_solutions(12, 5).unwrap().count(), 1);
    assert_eq!(bottom_solution_count(6, 2).unwrap(), 1);
    assert_eq!(bottom_solution_count(7, 2).unwrap(), 0);
    assert_eq!(bottom_solutions(9, 3).unwrap().count(), 3);
    assert_eq!(bottom_variables(5).len(), 32 - 5 - 2);
    for k in 3..=5 {
        for t in 2 * (k + 1)..2 * (k + 1) + 6 {
            let expected = binomial(
                t as i64 + (1 << k) - 3 * k as i64 - 5,
                (1 << k) - k as i64 - 3,
            );
            assert_eq!(bottom_solution_count(t, k).unwrap(), expected);
            assert_eq!(bottom_solutions(t, k).unwrap().count() as u128, expected);
        }
    }
    assert!(matches!(
        bottom_solution_count(5, 2),
        Err(LiftError::TooSmall { t: 5, min: 6 })
    ));
    assert!(matches!(
        bottom_solution_count(9, 1),
        Err(LiftError::BoundOutOfRange(1))
    ));
}

#[test]
fn constructed_spikes_are_excluded_minors() {
    for phi in bottom_solutions(6, 2).unwrap() {
        let spec = bottom_construct(&phi, 6, 2).unwrap();
        assert_eq!(spec.picks.len(), 3);
        assert!(verify_sk_excluded_minor(&spec, 2, VerifyMode::Full).unwrap());
        assert!(verify_sk_excluded_minor(&spec, 2, VerifyMode::Structural).unwrap());
        let m = spec.matroid().unwrap();
        // Simple and cosimple.
        assert!(m
            .circuits()
            .iter()
            .chain(m.cocircuits().iter())
            .all(|c| bits::size(c) >= 3));
    }
    for (k, t) in [(3, 8), (3, 9), (3, 11), (4, 10), (4, 12), (5, 12)] {
        for phi in bottom_solutions(t, k).unwrap() {
            let spec = bottom_construct(&phi, t, k).unwrap();
            assert_eq!(spec.n() % 2, 0);
            assert_eq!(spec.picks.len(), k + 1);
            assert!(
                verify_sk_excluded_minor(&spec, k, VerifyMode::Structural).unwrap(),
                "k={k} t={t}"
            );
            assert!(!verify_sk_excluded_minor(&spec, k + 1, VerifyMode::Structural).unwrap());
        }
    }
    let phi = bottom_solutions(9, 3).unwrap().next().unwrap();
    assert!(matches!(
        bottom_construct(&phi, 10, 3),
        Err(LiftError::NotASolution)
    ));
}

#[test]
fn structural_verification_agrees_with_full_on_small_spikes() {
    for t in 5..=6 {
        for m in 3..=4 {
            for picks in canonical_pick_families(t, m) {
                let spec = SpikeSpec::new(t, picks).unwrap();
                let full = verify_sk_excluded_minor(&spec, 2, VerifyMode::Full).unwrap();
                let structural =
                    verify_sk_excluded_minor(&spec, 2, VerifyMode::Structural).unwrap();
                assert_eq!(full, structural, "{spec:?}");
            }
        }
    }
}

#[test]
fn degree_conditions_reject() {
    // Element a_0 lies in all four cycles.
    let spec = SpikeSpec::new(6, vec![0b000000, 0b000110, 0b011000, 0b100010]).unwrap();
    assert_eq!(spec.degree(0), 4);
    assert!(!verify_sk_excluded_minor(&spec, 2, VerifyMode::Structural).unwrap());
    assert!(!verify_sk_excluded_minor(&spec, 2, VerifyMode::Full).unwrap());
    // b_0 lies in no cycle.
    let spec = SpikeSpec::new(6, vec![0b000000, 0b000110, 0b011000]).unwrap();
    assert_eq!(spec.degree(1), 0);
    assert!(!verify_sk_excluded_minor(&spec, 2, VerifyMode::Structural).unwrap());
    assert!(!verify_sk_excluded_minor(&spec, 2, VerifyMode::Full).unwrap());
    let big = SpikeSpec::new(8, vec![]).unwrap();
    assert!(matches!(
        verify_sk_excluded_minor(&big, 2, VerifyMode::Full),
        Err(LiftError::TooLargeForFull(16))
    ));
}

#[test]
fn camera_fixtures_are_outside_the_class() {
    for m in camera_fixtures() {
        for k in 0..=5 {
            assert_eq!(categorize(&m, k).unwrap(), None);
        }
        // Each is one element past the class: some single-element minor is in.
        let below = CategoryIndex::new(m.n() - 1, 5).unwrap();
        assert!((0..m.n()).any(|e| below.categorize(&m.delete(e)).is_some()));
    }
}

#[test]
fn category_census_matches_closure_of_spikes_under_minors() {
    for k in 0..=2 {
        let oracle = spike_minor_census(k, 8);
        for (n, &expected) in oracle.iter().enumerate().take(7) {
            assert_eq!(
                census_sk_exact(n, k).unwrap(),
                expected as u128,
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn small_exact_census_values() {
    assert_eq!(census_sk_exact(2, 0).unwrap(), 4);
    let u24 = Matroid::uniform(2, 4).unwrap();
    assert_eq!(categorize(&u24, 0).unwrap(), Some(Category::B));
    assert!(matches!(
        census_sk_exact(13, 1),
        Err(LiftError::TooLargeForExact { n: 13, .. })
    ));
}

#[test]
fn strata_bound_the_exact_census() {
    for k in 0..=2 {
        for n in (2..=12).step_by(2) {
            let exact = census_sk_exact(n, k).unwrap();
            let rows = census_sk_strata(n, k).unwrap();
            let total: u128 = rows.iter().map(|r| r.count).sum();
            assert!(total >= exact, "n={n} k={k}");
            assert!(
                total * 100 <= exact * 115,
                "n={n} k={k}: {total} vs {exact}"
            );
            for row in &rows {
                assert_eq!(row.mode, CountMode::Exact);
                if row.category == Category::A && row.m >= 2 {
                    let cells = 1i64 << (row.m - 1);
                    let bound =
                        binomial(row.r as i64 + cells - 1, cells - 1) * ((n + 1) * (n + 1)) as u128;
                    assert!(row.count <= bound);
                }
            }
        }
    }
    assert!(matches!(census_sk_strata(7, 2), Err(LiftError::OddSize(7))));
    let big = census_sk_strata(20, 2).unwrap();
    assert!(big.iter().any(|r| r.mode == CountMode::Upper));
}

#[test]
fn deduplicated_constructions_have_distinct_signatures() {
    let specs = sk_excluded_minors(10, 3).unwrap();
    assert!(!specs.is_empty());
    let total = bottom_solution_count(10, 3).unwrap();
    assert!(specs.len() as u128 * 24 >= total);
    let keys: std::collections::HashSet<_> = specs
        .iter()
        .map(|s| glance_signature(&s.as_lift()).unwrap())
        .collect();
    assert_eq!(keys.len(), specs.len());
}
