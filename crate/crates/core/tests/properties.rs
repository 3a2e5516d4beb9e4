mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use sitelink_core::*;

fn link(max_a: usize, max_k: usize) -> impl Strategy<Value = (usize, Vec<(u8, u8)>)> {
    (2..=max_a, 2..=max_k, any::<u64>())
        .prop_map(|(a, k, seed)| (a, random_link(&mut rng(seed), a, k)))
}

/// Rows over `a` symbols with every joint cell occupied and `k` a multiple of `a^2`.
fn full_support_link() -> impl Strategy<Value = (usize, Vec<(u8, u8)>)> {
    (2usize..=3, 1usize..=4, any::<u64>()).prop_map(|(a, m, seed)| {
        let mut r = rng(seed);
        let mut rows: Vec<(u8, u8)> = (0..a * a).map(|c| ((c / a) as u8, (c % a) as u8)).collect();
        while rows.len() < m * a * a {
            rows.push((r.gen_range(0..a) as u8, r.gen_range(0..a) as u8));
        }
        (a, rows)
    })
}

fn system(max_k: usize, max_n: usize) -> impl Strategy<Value = System> {
    (2..=4usize, 2..=max_k, 2..=max_n, any::<u64>()).prop_map(|(a, k, n, seed)| {
        let mut r = rng(seed);
        // a pure column pair keeps some links at zero distance
        let rows: Vec<Vec<u8>> = (0..k)
            .map(|_| {
                let mut row: Vec<u8> = (0..n).map(|_| r.gen_range(0..a) as u8).collect();
                if r.gen_bool(0.7) {
                    row[1] = row[0];
                }
                row
            })
            .collect();
        System::from_rows(alphabet(a), &rows).unwrap()
    })
}

fn closed(lc: &LinkCounts) -> f64 {
    potential_closed_form_s1(lc).unwrap().value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn removing_rows_subtracts_their_counts(sys in system(12, 5), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let mask = RowMask::new(picks.iter().map(|p| p.index(sys.k())).collect());
        prop_assume!(mask.len() < sys.k());
        let rest = sys.remove_rows(&mask).unwrap();
        for l in LinkSet::all(sys.n()).iter() {
            let mut expected = link_counts(&sys, l.i, l.j).unwrap();
            for &h in mask.indices() {
                expected.remove(sys.cell(h, l.i), sys.cell(h, l.j));
            }
            prop_assert_eq!(link_counts(&rest, l.i, l.j).unwrap(), expected);
        }
        let kept: Vec<usize> = sys.labels().iter().copied().enumerate()
            .filter(|(h, _)| !mask.indices().contains(h)).map(|(_, l)| l).collect();
        prop_assert_eq!(rest.labels(), &kept[..]);
    }

    #[test]
    fn relabelling_rows_and_symbols_changes_nothing((a, rows) in link(4, 40), seed in any::<u64>()) {
        let lc = LinkCounts::from_pairs(a, rows.iter().copied());
        let mut r = rng(seed);
        let mut perm: Vec<u8> = (0..a as u8).collect();
        for t in (1..a).rev() { perm.swap(t, r.gen_range(0..=t)); }
        let mut shuffled: Vec<(u8, u8)> = rows.iter().map(|&(u, v)| (perm[u as usize], v)).collect();
        for t in (1..shuffled.len()).rev() { shuffled.swap(t, r.gen_range(0..=t)); }
        let other = LinkCounts::from_pairs(a, shuffled.iter().copied());
        prop_assert_eq!(lc.is_pure(), other.is_pure());
        prop_assert!((vi_distance(&lc) - vi_distance(&other)).abs() < 1e-12);
        prop_assert!((closed(&lc) - closed(&other)).abs() < 1e-12);
        prop_assert!((closed(&lc) - closed(&lc.transposed())).abs() < 1e-12);
    }

    #[test]
    fn zero_distance_exactly_when_pure((a, rows) in link(4, 64)) {
        let lc = LinkCounts::from_pairs(a, rows.iter().copied());
        let d = vi_distance(&lc);
        if lc.is_pure() {
            prop_assert_eq!(d, 0.0);
        } else {
            prop_assert!(d > 1e-12);
        }
    }

    #[test]
    fn distance_is_at_most_twice_ln_a((a, rows) in link(4, 64)) {
        let lc = LinkCounts::from_pairs(a, rows.iter().copied());
        let top = 2.0 * (a as f64).ln();
        let d = vi_distance(&lc);
        prop_assert!(d <= top + 1e-12);
        if lc.is_uniform() {
            prop_assert!((d - top).abs() < 1e-12);
        } else {
            prop_assert!(d < top - 1e-12);
        }
    }

    #[test]
    fn potential_vanishes_exactly_on_pure_links_and_grows_with_s((a, rows) in link(3, 12)) {
        let lc = LinkCounts::from_pairs(a, rows.iter().copied());
        let k = rows.len();
        let mut previous = 0.0;
        for s in 1..k {
            let e = lc.potential_exact(s, DEFAULT_ENUMERATION_BUDGET).unwrap().value;
            if lc.is_pure() {
                prop_assert!(e.abs() <= 1e-12);
            } else {
                prop_assert!(e > 1e-12, "s={} e={}", s, e);
            }
            prop_assert!(e >= previous - 1e-12, "s={} {} < {}", s, e, previous);
            previous = e;
        }
    }

    #[test]
    fn full_support_links_sit_above_the_ground_state((a, rows) in full_support_link()) {
        let lc = LinkCounts::from_pairs(a, rows.iter().copied());
        let bound = ground_state_bound(rows.len(), a).unwrap();
        let e = closed(&lc);
        if lc.is_uniform() {
            prop_assert!((e - bound).abs() < 1e-12);
        } else {
            prop_assert!(e > bound + 1e-12, "{} vs {}", e, bound);
        }
    }

    #[test]
    fn g_increases_and_upper_g_is_concave(z in 1.0f64..500.0, h in 0.01f64..5.0) {
        prop_assert!(special_g(z + h).unwrap() > special_g(z).unwrap());
        let z = z.max(1.0 + h);
        let second = special_upper_g(z - h).unwrap() - 2.0 * special_upper_g(z).unwrap()
            + special_upper_g(z + h).unwrap();
        prop_assert!(second <= 1e-12);
    }

    #[test]
    fn h_is_positive_and_convex(a in 2u32..6, offset in 0.05f64..50.0, h in 0.05f64..2.0) {
        let z = a as f64 + offset + h;
        let f = |z: f64| special_h(z, a).unwrap();
        prop_assert!(f(z) > 0.0);
        prop_assert!(f(z - h) - 2.0 * f(z) + f(z + h) > 0.0);
    }

    #[test]
    fn drops_average_to_the_mean_potential(sys in system(12, 5)) {
        let links = LinkSet::all(sys.n());
        let drops = q_drops(&sys, &links).unwrap();
        let mean_drop = drops.iter().sum::<f64>() / drops.len() as f64;
        let spectrum = site_spectrum(&sys, &links, 1, &Method::ClosedForm).unwrap();
        let mean_e = spectrum.iter().map(|e| e.potential.value).sum::<f64>() / spectrum.len() as f64;
        prop_assert!((mean_drop - mean_e).abs() < 1e-12, "{} vs {}", mean_drop, mean_e);
        let (_, best) = argmax_drop(&sys, &links).unwrap();
        prop_assert!(best >= mean_e - 1e-12);
        if spectrum.iter().any(|e| e.distance > 0.0) {
            prop_assert!(best > 0.0);
        }
    }

    #[test]
    fn fixed_purge_strictly_lowers_the_average(sys in system(10, 4)) {
        let links = LinkSet::all(sys.n());
        let trace = purge(&sys, &LinkPolicy::Fixed(links.clone()), &StopRule { threshold: Some(0.0), max_removals: None }).unwrap();
        prop_assert!(trace.stop_reason != StopReason::NoPositiveDrop);
        let mut q = q_average(&sys, &links).unwrap();
        for step in &trace.steps {
            prop_assert_eq!(step.q_before, q);
            prop_assert!(step.q_after < step.q_before);
            prop_assert!((step.q_drop - (step.q_before - step.q_after)).abs() < 1e-15);
            q = step.q_after;
        }
    }
}
