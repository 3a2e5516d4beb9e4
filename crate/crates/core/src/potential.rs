//! Link potentials: the expected drop of a link's distance when `s` rows are
//! deleted uniformly at random.
//!
//! Three routes are provided:
//!
//! * [`potential_closed_form_s1`] evaluates `lambda / (k - 1)` for `s = 1`.
//! * [`potential_exact`] enumerates all `C(k, s)` row subsets in colex order.
//! * [`potential_mc`] averages over uniformly drawn subsets from a keyed
//!   ChaCha stream, so the estimate for a link does not depend on which thread
//!   computes it or in which order links are visited.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinations::{binomial, Colex};
use crate::counts::{check_link, LinkCounts};
use crate::error::{Error, Result};
use crate::info::vi_distance;
use crate::special::{g_unchecked, upper_g_count};
use crate::summation::PairwiseSum;
use crate::system::System;

/// Largest number of subsets [`potential_exact`] enumerates by default.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 10_000_000;

/// How a potential is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Exact { budget: u128 },
    MonteCarlo { samples: u64, seed: u64 },
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Exact { .. } => "exact",
            Method::MonteCarlo { .. } => "monte_carlo",
        }
    }
}

/// One value of the link potential `E_s[V]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialEstimate {
    pub value: f64,
    /// Number of rows removed.
    pub s: usize,
    pub method: Method,
    /// Standard error of a Monte Carlo estimate.
    pub stderr: Option<f64>,
}

/// `lambda = (1/k) [sum G(nu_left) + sum G(nu_right) - 2 sum G(nu_joint)]`,
/// summed over observed symbols only.
pub fn lambda(lc: &LinkCounts) -> Result<f64> {
    let k = lc.total();
    if k < 2 {
        return Err(Error::TooFewRows {
            needed: 2,
            k: k as usize,
        });
    }
    Ok(lambda_unchecked(lc))
}

fn lambda_unchecked(lc: &LinkCounts) -> f64 {
    let sum_g = |counts: &[u32]| -> f64 {
        counts
            .iter()
            .filter(|&&c| c > 0)
            .map(|&c| upper_g_count(c))
            .sum()
    };
    (sum_g(lc.left()) + sum_g(lc.right()) - 2.0 * sum_g(lc.joint())) / lc.total() as f64
}

/// Potential for single-row removal, `lambda / (k - 1)`. Exactly zero for
/// pure links and strictly positive otherwise.
pub fn potential_closed_form_s1(lc: &LinkCounts) -> Result<PotentialEstimate> {
    let k = lc.total();
    if k < 2 {
        return Err(Error::TooFewRows {
            needed: 2,
            k: k as usize,
        });
    }
    let value = if lc.is_pure() {
        0.0
    } else {
        lambda_unchecked(lc) / (k - 1) as f64
    };
    Ok(PotentialEstimate {
        value,
        s: 1,
        method: Method::ClosedForm,
        stderr: None,
    })
}

/// Per-row symbol pairs of one link together with their counts.
#[derive(Debug, Clone)]
pub(crate) struct LinkRows {
    pairs: Vec<(u8, u8)>,
    counts: LinkCounts,
}

impl LinkRows {
    pub(crate) fn new(sys: &System, i: usize, j: usize) -> Result<Self> {
        check_link(sys, i, j)?;
        let pairs: Vec<(u8, u8)> = sys.rows().map(|r| (r[i], r[j])).collect();
        let counts = LinkCounts::from_pairs(sys.alphabet().size(), pairs.iter().copied());
        Ok(Self { pairs, counts })
    }

    /// Rows in code order, one per counted pair.
    pub(crate) fn from_counts(lc: &LinkCounts) -> Self {
        let a = lc.alphabet_size();
        let mut pairs = Vec::with_capacity(lc.total() as usize);
        for u in 0..a {
            for v in 0..a {
                for _ in 0..lc.joint_at(u, v) {
                    pairs.push((u as u8, v as u8));
                }
            }
        }
        Self {
            pairs,
            counts: lc.clone(),
        }
    }

    pub(crate) fn counts(&self) -> &LinkCounts {
        &self.counts
    }

    fn k(&self) -> usize {
        self.pairs.len()
    }

    pub(crate) fn distance_without_row(&mut self, x: usize) -> f64 {
        self.distance_without(&[x])
    }

    /// Distance of the link with the rows at `removed` deleted.
    fn distance_without(&mut self, removed: &[usize]) -> f64 {
        for &x in removed {
            let (u, v) = self.pairs[x];
            self.counts.remove(u, v);
        }
        let d = vi_distance(&self.counts);
        for &x in removed {
            let (u, v) = self.pairs[x];
            self.counts.add(u, v);
        }
        d
    }

    fn check_s(&self, s: usize, min: usize) -> Result<()> {
        let k = self.k();
        if k < 2 {
            return Err(Error::TooFewRows { needed: 2, k });
        }
        if s < min || s > k - 1 {
            return Err(Error::RemovalSizeOutOfRange { s, min, max: k - 1 });
        }
        Ok(())
    }

    pub(crate) fn exact(&mut self, s: usize, budget: u128) -> Result<PotentialEstimate> {
        let method = Method::Exact { budget };
        if s == 0 {
            return Ok(PotentialEstimate {
                value: 0.0,
                s,
                method,
                stderr: None,
            });
        }
        self.check_s(s, 0)?;
        let k = self.k();
        let subsets = binomial(k, s);
        match subsets {
            Some(c) if c <= budget => {}
            _ => {
                return Err(Error::BudgetExceeded {
                    k,
                    s,
                    subsets,
                    budget,
                })
            }
        }
        let base = vi_distance(&self.counts);
        let mut acc = PairwiseSum::new();
        let mut colex = Colex::new(k, s);
        while let Some(m) = colex.next() {
            acc.add(self.distance_without(m));
        }
        let mean = acc.sum() / acc.len() as f64;
        Ok(PotentialEstimate {
            value: base - mean,
            s,
            method,
            stderr: None,
        })
    }

    pub(crate) fn monte_carlo(
        &mut self,
        s: usize,
        samples: u64,
        seed: u64,
        stream: u64,
    ) -> Result<PotentialEstimate> {
        self.check_s(s, 1)?;
        if samples < 2 {
            return Err(Error::TooFewSamples(samples as usize));
        }
        let k = self.k();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);

        let base = vi_distance(&self.counts);
        let mut chosen = vec![false; k];
        let mut subset = Vec::with_capacity(s);
        // Welford running moments
        let mut mean = 0.0;
        let mut m2 = 0.0;
        for t in 0..samples {
            floyd_sample(&mut rng, k, s, &mut chosen, &mut subset);
            let d = self.distance_without(&subset);
            let delta = d - mean;
            mean += delta / (t + 1) as f64;
            m2 += delta * (d - mean);
            for &x in &subset {
                chosen[x] = false;
            }
        }
        let variance = m2 / (samples - 1) as f64;
        let stderr = libm::sqrt(variance.max(0.0) / samples as f64);
        Ok(PotentialEstimate {
            value: base - mean,
            s,
            method: Method::MonteCarlo { samples, seed },
            stderr: Some(stderr),
        })
    }
}

/// Floyd's algorithm: a uniform `s`-subset of `{0, .., k-1}` with `s` draws.
fn floyd_sample<R: Rng>(
    rng: &mut R,
    k: usize,
    s: usize,
    chosen: &mut [bool],
    out: &mut Vec<usize>,
) {
    out.clear();
    for t in (k - s)..k {
        let r = rng.gen_range(0..=t);
        let pick = if chosen[r] { t } else { r };
        chosen[pick] = true;
        out.push(pick);
    }
}

/// Stream key of the link `(i, j)` inside one seeded Monte Carlo run.
pub(crate) fn link_stream(i: usize, j: usize) -> u64 {
    ((i as u64) << 32) | (j as u64 & 0xffff_ffff)
}

/// Exact potential of link `(i, j)` by enumerating every `s`-subset of rows.
///
/// `s = 0` yields 0. Fails with [`Error::BudgetExceeded`] when `C(k, s)`
/// exceeds `budget`.
pub fn potential_exact(
    sys: &System,
    i: usize,
    j: usize,
    s: usize,
    budget: u128,
) -> Result<PotentialEstimate> {
    LinkRows::new(sys, i, j)?.exact(s, budget)
}

/// Monte Carlo potential of link `(i, j)` from `samples` uniform `s`-subsets.
///
/// The random stream is keyed by `(seed, i, j)`.
pub fn potential_mc(
    sys: &System,
    i: usize,
    j: usize,
    s: usize,
    samples: u64,
    seed: u64,
) -> Result<PotentialEstimate> {
    LinkRows::new(sys, i, j)?.monte_carlo(s, samples, seed, link_stream(i, j))
}

impl LinkCounts {
    /// Exact potential of a link given only by its counts. The potential does
    /// not depend on row order, so rows are laid out in code order.
    pub fn potential_exact(&self, s: usize, budget: u128) -> Result<PotentialEstimate> {
        LinkRows::from_counts(self).exact(s, budget)
    }

    /// Monte Carlo potential with rows laid out in code order.
    pub fn potential_mc(&self, s: usize, samples: u64, seed: u64) -> Result<PotentialEstimate> {
        LinkRows::from_counts(self).monte_carlo(s, samples, seed, 0)
    }
}

fn check_ground_state_args(k: usize, a: usize) -> Result<()> {
    if a < 2 {
        return Err(Error::AlphabetTooSmall(a));
    }
    let a_squared = a * a;
    if k == 0 || !k.is_multiple_of(a_squared) {
        return Err(Error::NotDivisible { k, a_squared });
    }
    Ok(())
}

/// The potential of a uniform link, `(2/(k-1)) [g(k/a) - g(k/a^2)]`, for
/// `k` divisible by `a^2`.
///
/// Among non-pure links in which every symbol pair occurs at least once, the
/// single-row potential is at least this value, with equality exactly for the
/// uniform link. Links with unobserved symbol pairs can fall below it: the
/// 4-row binary link with joint counts `[[2, 1], [1, 0]]` has potential
/// ~0.1744 against a bound of ~0.4621.
pub fn ground_state_bound(k: usize, a: usize) -> Result<f64> {
    check_ground_state_args(k, a)?;
    let (k_f, a_f) = (k as f64, a as f64);
    Ok(2.0 / (k_f - 1.0) * (g_unchecked(k_f / a_f) - g_unchecked(k_f / (a_f * a_f))))
}

/// `(1 - p)` times [`ground_state_bound`]: the guaranteed drop of the average
/// distance when `p` is the fraction of pure links.
pub fn theorem51_bound(k: usize, a: usize, p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::FractionOutOfRange(p));
    }
    Ok((1.0 - p) * ground_state_bound(k, a)?)
}
