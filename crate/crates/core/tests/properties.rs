use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thinwidth::bounds::{audit, conjectured_width_bound};
use thinwidth::catalog;
use thinwidth::foliation::{
    disk_extremum_audit, eliminate_inessential_saddles, fixtures, induced_foliation, CurveId, FoliationWord,
    TorusEvent,
};
use thinwidth::levelgraph::{audit_level, build_graph, sweep_levels};
use thinwidth::morse::{parse_morse, serialize_morse};
use thinwidth::random::{cyclic_braid, knot_word};
use thinwidth::satellite::{cable, canonical_invariants, SatelliteError};
use thinwidth::{validate, BraidLetter, BraidWord, MorseError, MorseEvent, SatelliteSpec};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_spec(r: &mut ChaCha8Rng) -> SatelliteSpec {
    let companion = knot_word(r, 14);
    let n = r.gen_range(1..=3);
    let braid = cyclic_braid(r, n, 5);
    let site = r.gen_range(0..companion.bridge_count());
    SatelliteSpec::new(companion, braid).with_framing(r.gen_range(-2..=2)).with_site(site)
}

fn two_bridge_spec(r: &mut ChaCha8Rng) -> SatelliteSpec {
    let names = ["trefoil", "figure-eight"];
    let companion = catalog::get(names[r.gen_range(0..2)]).unwrap().presentation();
    let n = r.gen_range(1..=4);
    let site = r.gen_range(0..2);
    SatelliteSpec::new(companion, cyclic_braid(r, n, 6)).with_framing(r.gen_range(-1..=1)).with_site(site)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn level_counts_step_by_two(seed in any::<u64>()) {
        let p = knot_word(&mut rng(seed), 40);
        let counts = p.level_counts();
        prop_assert!(counts.windows(2).all(|w| w[0].abs_diff(w[1]) == 2));
        prop_assert!(counts.iter().all(|c| c % 2 == 0 && *c >= 2));
        prop_assert_eq!(p.width(), p.thick_thin().width());
        let caps = p.events().iter().filter(|e| matches!(e, MorseEvent::Cap(_))).count();
        prop_assert_eq!(p.bridge_count(), caps);
    }

    #[test]
    fn morse_text_round_trips(seed in any::<u64>()) {
        let p = knot_word(&mut rng(seed), 40);
        let text = serialize_morse(p.events());
        prop_assert_eq!(parse_morse(&text).unwrap(), p.events().to_vec());
    }

    #[test]
    fn orientation_is_consistent(seed in any::<u64>()) {
        let p = knot_word(&mut rng(seed), 30);
        let dirs = p.orientations();
        // every level sums to zero: as many strands go up as down
        for level in &dirs {
            prop_assert!(level.iter().all(|&d| d == 1 || d == -1));
            prop_assert_eq!(level.iter().map(|&d| d as i32).sum::<i32>(), 0);
        }
    }

    #[test]
    fn cable_scales_invariants(seed in any::<u64>()) {
        let spec = random_spec(&mut rng(seed));
        let n = spec.winding();
        let k = cable(&spec).unwrap();
        prop_assert_eq!(k.width(), n * n * spec.companion.width());
        prop_assert_eq!(k.bridge_count(), n * spec.companion.bridge_count());
        prop_assert_eq!(k.trunk(), n * spec.companion.trunk());
        prop_assert!(canonical_invariants(&spec).is_ok());
    }

    #[test]
    fn cable_is_a_knot_iff_the_braid_is_cyclic(seed in any::<u64>(), n in 1usize..5) {
        let mut r = rng(seed);
        let letters: Vec<BraidLetter> = (0..r.gen_range(0..6))
            .filter(|_| n > 1)
            .map(|_| BraidLetter::pos(r.gen_range(1..n)))
            .collect();
        let braid = BraidWord::new(n, letters).unwrap();
        let cycles = braid.cycle_count();
        let trefoil = catalog::get("trefoil").unwrap().presentation();
        match cable(&SatelliteSpec::new(trefoil, braid.clone())) {
            Ok(_) => prop_assert_eq!(cycles, 1),
            Err(SatelliteError::NotAKnot { cycles: c }) => {
                prop_assert!(c > 1);
                // the closed braid traced strand by strand has one component per cycle
                prop_assert_eq!(braid.closure(), Err(MorseError::MultiComponent { components: c }));
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn canonical_foliation_is_clean(seed in any::<u64>()) {
        let spec = random_spec(&mut rng(seed));
        let fw = induced_foliation(&spec).unwrap();
        let (minima, maxima, saddles) = fw.critical_counts();
        prop_assert_eq!(minima + maxima, saddles);
        prop_assert!(fw.detect_inessential().is_empty());
        prop_assert_eq!(disk_extremum_audit(&fw), Ok(true));
        let kcount = fw.k_sequence().len();
        prop_assert_eq!(kcount, 2 * cable(&spec).unwrap().bridge_count());
    }

    #[test]
    fn elimination_preserves_knot_events(seed in any::<u64>(), fingers in 1usize..6) {
        let mut r = rng(seed);
        let base = induced_foliation(&random_spec(&mut r)).unwrap();
        let fingered = fixtures::random_fingers(&mut r, &base, fingers);
        prop_assert_eq!(fingered.detect_inessential().len(), fingers);
        let clean = eliminate_inessential_saddles(&fingered).unwrap();
        prop_assert!(clean.detect_inessential().is_empty());
        prop_assert_eq!(clean.k_sequence(), base.k_sequence());
        prop_assert_eq!(clean.events().len(), base.events().len());
        prop_assert_eq!(disk_extremum_audit(&clean), Ok(true));
    }

    #[test]
    fn finger_on_a_meridian_cancels_back_exactly(seed in any::<u64>()) {
        let mut r = rng(seed);
        let base = induced_foliation(&random_spec(&mut r)).unwrap();
        let levels = base.levels();
        let len = base.events().len();
        let spots: Vec<(usize, CurveId)> = (0..=len)
            .flat_map(|i| levels[i].curves.iter().filter(|(_, s)| s.essential).map(move |(&c, _)| (i, c)))
            .collect();
        let (i, c) = spots[r.gen_range(0..spots.len())];
        let mut spliced = 0;
        for shape in [fixtures::FingerShape::Below, fixtures::FingerShape::Above, fixtures::FingerShape::Pocket] {
            // place the extremum as early or late as the curve's lifetime allows
            let alive: Vec<usize> = (0..=len).filter(|&j| levels[j].curves.contains_key(&c)).collect();
            let (first, second) = match shape {
                fixtures::FingerShape::Below => (0, i),
                fixtures::FingerShape::Above => (i, *alive.last().unwrap()),
                fixtures::FingerShape::Pocket => (alive[0], i),
            };
            let Ok(fingered) = fixtures::splice(&base, shape, c, first, second) else { continue };
            prop_assert_eq!(eliminate_inessential_saddles(&fingered).unwrap(), base.clone());
            spliced += 1;
        }
        // a bowl beside a meridian at the very bottom always fits
        prop_assert!(spliced >= 1);
    }

    #[test]
    fn level_graphs_are_trees_with_inside_endpoints(seed in any::<u64>()) {
        let mut r = rng(seed);
        let spec = random_spec(&mut r);
        let base = induced_foliation(&spec).unwrap();
        let fingered = fixtures::random_fingers(&mut r, &base, 2);
        for word in [&base, &fingered] {
            for s in sweep_levels(word) {
                let g = build_graph(&s).unwrap();
                prop_assert_eq!(g.edges().len() + 1, g.vertex_count());
                prop_assert!(g.endpoints_in_a());
                prop_assert_eq!(s.total_points() % 2, 0);
                prop_assert_eq!(s.algebraic_intersection(), 0);
            }
        }
        let max = sweep_levels(&base).iter().map(|s| s.total_points() as usize).max().unwrap();
        prop_assert_eq!(max, cable(&spec).unwrap().trunk());
    }

    #[test]
    fn two_bridge_satellites_meet_every_bound(seed in any::<u64>()) {
        let spec = two_bridge_spec(&mut rng(seed));
        let n = spec.winding();
        let k = cable(&spec).unwrap();
        let report = audit(&k, Some(&spec)).unwrap();
        prop_assert!(report.checks.iter().all(|c| c.satisfied && c.value == c.bound));
        prop_assert_eq!(conjectured_width_bound(n, spec.companion.width()), k.width());
        for s in sweep_levels(&induced_foliation(&spec).unwrap()) {
            prop_assert_eq!(audit_level(&s, n), Ok(true));
        }
    }
}

#[test]
fn random_words_validate_deterministically() {
    let a: Vec<_> = (0..20).map(|s| knot_word(&mut rng(s), 20)).collect();
    let b: Vec<_> = (0..20).map(|s| knot_word(&mut rng(s), 20)).collect();
    assert_eq!(a, b);
    for p in a {
        assert_eq!(validate(p.events().to_vec()).unwrap(), p);
    }
}

#[test]
fn essential_curves_never_reach_a_maximum() {
    let spec = two_bridge_spec(&mut rng(3));
    let fw: FoliationWord = induced_foliation(&spec).unwrap();
    let levels = fw.levels();
    for (i, e) in fw.events().iter().enumerate() {
        if let TorusEvent::Max { curve } = e {
            assert!(!levels[i].curves[curve].essential);
        }
    }
}

#[test]
fn nested_star_fixture_is_a_tree_and_round_trips() {
    use thinwidth::levelgraph::{parse_level_sphere, serialize_level_sphere};
    let text = include_str!("assets/nested_star.sphere");
    let s = parse_level_sphere(text).unwrap();
    let g = build_graph(&s).unwrap();
    assert_eq!(g.trunk(), 6);
    assert!(g.endpoints_in_a());
    assert_eq!(audit_level(&s, 2), Ok(true));
    assert_eq!(parse_level_sphere(&serialize_level_sphere(&s)).unwrap(), s);
}
