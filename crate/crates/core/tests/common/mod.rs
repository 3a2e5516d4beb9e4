//! Brute-force references that share no code with the library: plain hash
//! map counting, `f64::ln`, and subset recursion in lexicographic order.

#![allow(dead_code)]

use std::collections::HashMap;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sitelink_core::{Alphabet, LinkCounts, System};

pub fn entropy_of<T: Hash + Eq + Copy>(items: &[T]) -> f64 {
    let mut counts: HashMap<T, usize> = HashMap::new();
    for &x in items {
        *counts.entry(x).or_default() += 1;
    }
    let k = items.len() as f64;
    let mut values: Vec<usize> = counts.into_values().collect();
    values.sort_unstable();
    -values
        .iter()
        .map(|&c| (c as f64 / k) * (c as f64 / k).ln())
        .sum::<f64>()
}

pub fn vi_of(rows: &[(u8, u8)]) -> f64 {
    let left: Vec<u8> = rows.iter().map(|r| r.0).collect();
    let right: Vec<u8> = rows.iter().map(|r| r.1).collect();
    2.0 * entropy_of(rows) - entropy_of(&left) - entropy_of(&right)
}

fn subsets(k: usize, s: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == s {
        out.push(cur.clone());
        return;
    }
    for x in start..k {
        cur.push(x);
        subsets(k, s, x + 1, cur, out);
        cur.pop();
    }
}

pub fn all_subsets(k: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    subsets(k, s, 0, &mut Vec::new(), &mut out);
    out
}

/// Mean distance over all sub-links with `s` rows deleted.
pub fn mean_vi_after_removal(rows: &[(u8, u8)], s: usize) -> f64 {
    let all = all_subsets(rows.len(), s);
    let total: f64 = all
        .iter()
        .map(|m| {
            let kept: Vec<(u8, u8)> = rows
                .iter()
                .enumerate()
                .filter(|(h, _)| !m.contains(h))
                .map(|(_, &r)| r)
                .collect();
            vi_of(&kept)
        })
        .sum();
    total / all.len() as f64
}

pub fn potential_oracle(rows: &[(u8, u8)], s: usize) -> f64 {
    vi_of(rows) - mean_vi_after_removal(rows, s)
}

/// `H(Z) - (1/k) sum_x H(Z^x)` by deleting every row in turn.
pub fn row_information_oracle(column: &[u8]) -> f64 {
    let k = column.len();
    let deleted: f64 = (0..k)
        .map(|x| {
            let rest: Vec<u8> = column
                .iter()
                .enumerate()
                .filter(|(h, _)| *h != x)
                .map(|(_, &c)| c)
                .collect();
            entropy_of(&rest)
        })
        .sum();
    entropy_of(column) - deleted / k as f64
}

pub fn pairs_of(lc: &LinkCounts) -> Vec<(u8, u8)> {
    let a = lc.alphabet_size();
    let mut rows = Vec::new();
    for u in 0..a {
        for v in 0..a {
            for _ in 0..lc.joint_at(u, v) {
                rows.push((u as u8, v as u8));
            }
        }
    }
    rows
}

pub fn alphabet(a: usize) -> Alphabet {
    let symbols: Vec<u8> = (b'a'..).take(a).collect();
    Alphabet::new(&symbols).unwrap()
}

pub fn two_column_system(a: usize, rows: &[(u8, u8)]) -> System {
    let rows: Vec<[u8; 2]> = rows.iter().map(|&(u, v)| [u, v]).collect();
    System::from_rows(alphabet(a), &rows).unwrap()
}

/// A random link; about one in four is pure.
pub fn random_link(rng: &mut ChaCha8Rng, a: usize, k: usize) -> Vec<(u8, u8)> {
    let pure = rng.gen_bool(0.25);
    let mut perm: Vec<u8> = (0..a as u8).collect();
    for t in (1..a).rev() {
        perm.swap(t, rng.gen_range(0..=t));
    }
    (0..k)
        .map(|_| {
            let u = rng.gen_range(0..a) as u8;
            let v = if pure {
                perm[u as usize]
            } else {
                rng.gen_range(0..a) as u8
            };
            (u, v)
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-12)
}
