//! Worked examples with known answers, run by `sitelink selfcheck`.

use std::f64::consts::LN_2;

use sitelink_core::{
    argmax_drop, entropy, ground_state_bound, link_counts, potential_closed_form_s1,
    potential_exact, potential_mc, purge, q_drop, row_mutual_information, special_g, special_h,
    special_upper_g, theorem51_bound, vi_distance, Alphabet, LinkCounts, LinkPolicy, LinkSet,
    StopReason, StopRule, System, DEFAULT_ENUMERATION_BUDGET,
};

pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

fn near(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12
}

fn binary(columns: [&[u8]; 2]) -> System {
    let rows: Vec<[u8; 2]> = columns[0]
        .iter()
        .zip(columns[1])
        .map(|(&x, &y)| [x, y])
        .collect();
    System::from_rows(Alphabet::new(b"01").expect("alphabet"), &rows).expect("system")
}

pub fn run_all() -> Vec<Check> {
    let worked = binary([&[0, 0, 1], &[0, 1, 1]]);
    let uniform = binary([&[0, 0, 1, 1], &[0, 1, 0, 1]]);
    let pure = binary([&[0, 1, 0], &[1, 0, 1]]);
    let one = LinkSet::all(2);
    let budget = DEFAULT_ENUMERATION_BUDGET;

    type Case<'a> = (&'static str, Box<dyn Fn() -> bool + 'a>);
    let checks: Vec<Case<'_>> = vec![
        (
            "entropy [2,2] = ln 2",
            Box::new(|| near(entropy(&[2, 2], 4).unwrap(), LN_2)),
        ),
        (
            "entropy [1,3] = ln 4 - (3/4) ln 3",
            Box::new(|| near(entropy(&[1, 3], 4).unwrap(), 4f64.ln() - 0.75 * 3f64.ln())),
        ),
        (
            "worked link distance = (4/3) ln 2",
            Box::new(|| {
                near(
                    vi_distance(&link_counts(&worked, 0, 1).unwrap()),
                    4.0 / 3.0 * LN_2,
                )
            }),
        ),
        (
            "uniform link distance = 2 ln 2",
            Box::new(|| {
                near(
                    vi_distance(&link_counts(&uniform, 0, 1).unwrap()),
                    2.0 * LN_2,
                )
            }),
        ),
        (
            "pure link distance = 0",
            Box::new(|| {
                let lc = link_counts(&pure, 0, 1).unwrap();
                lc.is_pure() && vi_distance(&lc) == 0.0
            }),
        ),
        (
            "row information [2,1] = ln(3/2) - (1/3) ln 2",
            Box::new(|| {
                near(
                    row_mutual_information(&[2, 1], 3).unwrap(),
                    1.5f64.ln() - LN_2 / 3.0,
                )
            }),
        ),
        (
            "g(2) = ln 2, G(2) = 2 ln 2",
            Box::new(|| {
                near(special_g(2.0).unwrap(), LN_2)
                    && near(special_upper_g(2.0).unwrap(), 2.0 * LN_2)
            }),
        ),
        (
            "H_2(4) = 12 ln(4/3) - 4 ln 2",
            Box::new(|| {
                near(
                    special_h(4.0, 2).unwrap(),
                    12.0 * (4.0f64 / 3.0).ln() - 4.0 * LN_2,
                )
            }),
        ),
        (
            "closed form, worked link = (2/3) ln 2",
            Box::new(|| {
                let lc = LinkCounts::from_joint(2, &[1, 1, 0, 1]);
                near(
                    potential_closed_form_s1(&lc).unwrap().value,
                    2.0 / 3.0 * LN_2,
                )
            }),
        ),
        (
            "exact s=1, worked link = (2/3) ln 2",
            Box::new(|| {
                near(
                    potential_exact(&worked, 0, 1, 1, budget).unwrap().value,
                    2.0 / 3.0 * LN_2,
                )
            }),
        ),
        (
            "exact s=2, uniform link = (4/3) ln 2",
            Box::new(|| {
                near(
                    potential_exact(&uniform, 0, 1, 2, budget).unwrap().value,
                    4.0 / 3.0 * LN_2,
                )
            }),
        ),
        (
            "monte carlo, pure link = 0 with zero error",
            Box::new(|| {
                let e = potential_mc(&pure, 0, 1, 1, 100, 1).unwrap();
                e.value == 0.0 && e.stderr == Some(0.0)
            }),
        ),
        (
            "ground state (4, 2) = (2/3) ln 2",
            Box::new(|| near(ground_state_bound(4, 2).unwrap(), 2.0 / 3.0 * LN_2)),
        ),
        (
            "ground state rejects k = 6, a = 2",
            Box::new(|| ground_state_bound(6, 2).is_err()),
        ),
        (
            "purity bound (4, 2, 0.5) = (1/3) ln 2",
            Box::new(|| near(theorem51_bound(4, 2, 0.5).unwrap(), LN_2 / 3.0)),
        ),
        (
            "Q(row 2) = (4/3) ln 2, Q(row 1) = (1/3) ln 2",
            Box::new(|| {
                near(q_drop(&worked, &one, 1).unwrap(), 4.0 / 3.0 * LN_2)
                    && near(q_drop(&worked, &one, 0).unwrap(), LN_2 / 3.0)
            }),
        ),
        (
            "argmax drop is row 2",
            Box::new(|| argmax_drop(&worked, &one).unwrap().0 == 1),
        ),
        (
            "purge removes row 2 and stops with all links pure",
            Box::new(|| {
                let t = purge(
                    &worked,
                    &LinkPolicy::Fixed(one.clone()),
                    &StopRule {
                        threshold: Some(0.0),
                        max_removals: None,
                    },
                )
                .unwrap();
                t.removed_labels() == [2] && t.stop_reason == StopReason::AllLinksPure
            }),
        ),
    ];
    checks
        .into_iter()
        .map(|(name, f)| Check { name, passed: f() })
        .collect()
}
