//! Spectra over link sets and the greedy row purge.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::combinations::binomial;
use crate::counts::{check_link, link_counts};
use crate::error::{Error, Result};
use crate::info::{vi_distance, Nats};
use crate::potential::{
    link_stream, potential_closed_form_s1, LinkRows, Method, PotentialEstimate,
};
use crate::system::System;

/// A pair of columns `i < j` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Link {
    pub i: usize,
    pub j: usize,
}

impl Link {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }
}

/// A lexicographically sorted set of distinct links.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinkSet {
    links: Vec<Link>,
}

impl LinkSet {
    /// Sorts `links`; rejects unordered or repeated pairs.
    pub fn new(mut links: Vec<Link>) -> Result<Self> {
        if let Some(l) = links.iter().find(|l| l.i >= l.j) {
            return Err(if l.i == l.j {
                Error::SameColumn(l.i)
            } else {
                Error::UnorderedLink(l.i, l.j)
            });
        }
        links.sort_unstable();
        if let Some(w) = links.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLink(w[0].i, w[0].j));
        }
        Ok(Self { links })
    }

    /// Every link of an `n`-column system.
    pub fn all(n: usize) -> Self {
        let links = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| Link::new(i, j)))
            .collect();
        Self { links }
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &Link> + '_ {
        self.links.iter()
    }

    fn check_against(&self, sys: &System) -> Result<()> {
        self.links
            .iter()
            .try_for_each(|l| check_link(sys, l.i, l.j))
    }
}

/// Distance and potential of one link.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub link: Link,
    pub distance: Nats,
    pub potential: PotentialEstimate,
}

/// Every link of `sys` with its distance, ascending by distance and then by
/// `(i, j)`.
pub fn ranked_links(sys: &System) -> Result<Vec<(Link, Nats)>> {
    if sys.n() < 2 {
        return Err(Error::TooFewColumns(sys.n()));
    }
    let mut ranked: Vec<(Link, Nats)> = LinkSet::all(sys.n())
        .iter()
        .map(|&l| Ok((l, vi_distance(&link_counts(sys, l.i, l.j)?))))
        .collect::<Result<_>>()?;
    ranked.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
    Ok(ranked)
}

/// The `max(1, floor(fraction * C(n, 2)))` links of lowest distance.
pub fn rank_links(sys: &System, fraction: f64) -> Result<LinkSet> {
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(Error::FractionOutOfRange(fraction));
    }
    let ranked = ranked_links(sys)?;
    let total = binomial(sys.n(), 2).unwrap_or(u128::MAX) as f64;
    let take = (libm::floor(fraction * total) as usize).clamp(1, ranked.len());
    let mut links: Vec<Link> = ranked[..take].iter().map(|&(l, _)| l).collect();
    links.sort_unstable();
    Ok(LinkSet { links })
}

/// Distance and potential of a single link.
pub fn spectrum_entry(
    sys: &System,
    link: Link,
    s: usize,
    method: &Method,
) -> Result<SpectrumEntry> {
    let mut rows = LinkRows::new(sys, link.i, link.j)?;
    let distance = vi_distance(rows.counts());
    let potential = match *method {
        Method::ClosedForm => {
            if s != 1 {
                return Err(Error::RemovalSizeOutOfRange { s, min: 1, max: 1 });
            }
            potential_closed_form_s1(rows.counts())?
        }
        Method::Exact { budget } => rows.exact(s, budget)?,
        Method::MonteCarlo { samples, seed } => {
            rows.monte_carlo(s, samples, seed, link_stream(link.i, link.j))?
        }
    };
    Ok(SpectrumEntry {
        link,
        distance,
        potential,
    })
}

/// The spectrum: one entry per link of `links`, in the same order.
pub fn site_spectrum(
    sys: &System,
    links: &LinkSet,
    s: usize,
    method: &Method,
) -> Result<Vec<SpectrumEntry>> {
    links
        .iter()
        .map(|&l| spectrum_entry(sys, l, s, method))
        .collect()
}

/// Count tables for a link set, kept in sync with single-row deletions.
struct Panel {
    links: Vec<LinkRows>,
}

impl Panel {
    fn new(sys: &System, links: &LinkSet) -> Result<Self> {
        if links.is_empty() {
            return Err(Error::EmptyLinkSet);
        }
        links.check_against(sys)?;
        let links = links
            .iter()
            .map(|l| LinkRows::new(sys, l.i, l.j))
            .collect::<Result<_>>()?;
        Ok(Self { links })
    }

    fn q(&self) -> Nats {
        let sum: f64 = self.links.iter().map(|l| vi_distance(l.counts())).sum();
        sum / self.links.len() as f64
    }

    fn q_without(&mut self, x: usize) -> Nats {
        let sum: f64 = self
            .links
            .iter_mut()
            .map(|l| l.distance_without_row(x))
            .sum();
        sum / self.links.len() as f64
    }

    fn all_pure(&self) -> bool {
        self.links.iter().all(|l| l.counts().is_pure())
    }
}

/// Average distance over `links`.
pub fn q_average(sys: &System, links: &LinkSet) -> Result<Nats> {
    Ok(Panel::new(sys, links)?.q())
}

/// `Q(x)`: the drop of the average distance over `links` when row position
/// `x` is deleted. Individual drops may be negative.
pub fn q_drop(sys: &System, links: &LinkSet, x: usize) -> Result<f64> {
    if x >= sys.k() {
        return Err(Error::RowOutOfRange {
            index: x,
            k: sys.k(),
        });
    }
    if sys.k() < 2 {
        return Err(Error::TooFewRows {
            needed: 2,
            k: sys.k(),
        });
    }
    let mut panel = Panel::new(sys, links)?;
    Ok(panel.q() - panel.q_without(x))
}

/// `Q(x)` for every row position.
pub fn q_drops(sys: &System, links: &LinkSet) -> Result<Vec<f64>> {
    if sys.k() < 2 {
        return Err(Error::TooFewRows {
            needed: 2,
            k: sys.k(),
        });
    }
    let mut panel = Panel::new(sys, links)?;
    let q = panel.q();
    Ok((0..sys.k()).map(|x| q - panel.q_without(x)).collect())
}

/// The row position with the largest drop and that drop. Ties go to the
/// lowest position.
pub fn argmax_drop(sys: &System, links: &LinkSet) -> Result<(usize, f64)> {
    Ok(argmax(&q_drops(sys, links)?))
}

fn argmax(drops: &[f64]) -> (usize, f64) {
    let mut best = (0, drops[0]);
    for (x, &q) in drops.iter().enumerate().skip(1) {
        if q.total_cmp(&best.1) == Ordering::Greater {
            best = (x, q);
        }
    }
    best
}

/// Which links the purge evaluates at each step.
#[derive(Debug, Clone, PartialEq)]
pub enum LinkPolicy {
    /// The same links throughout.
    Fixed(LinkSet),
    /// Re-rank the lowest-distance links of the surviving rows before every
    /// step.
    Refresh { fraction: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StopRule {
    /// Stop once the average distance is at or below this value.
    pub threshold: Option<f64>,
    /// Stop after this many removals.
    pub max_removals: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    ThresholdReached,
    MaxRemovals,
    AllLinksPure,
    NoPositiveDrop,
}

impl StopReason {
    pub fn name(&self) -> &'static str {
        match self {
            StopReason::ThresholdReached => "threshold_reached",
            StopReason::MaxRemovals => "max_removals",
            StopReason::AllLinksPure => "all_links_pure",
            StopReason::NoPositiveDrop => "no_positive_drop",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RemovalStep {
    /// 1-based label of the removed row in the original input.
    pub row_label: usize,
    pub q_drop: f64,
    pub q_before: Nats,
    pub q_after: Nats,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RemovalTrace {
    pub steps: Vec<RemovalStep>,
    pub stop_reason: StopReason,
}

impl RemovalTrace {
    pub fn removed_labels(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.row_label).collect()
    }
}

/// Greedily removes the row with the largest drop of the average link
/// distance until a stop condition holds.
///
/// Conditions are checked before each step in this order: every link pure,
/// average at or below the threshold, removal limit reached, largest drop not
/// positive.
pub fn purge(sys: &System, policy: &LinkPolicy, stop: &StopRule) -> Result<RemovalTrace> {
    if stop.threshold.is_none() && stop.max_removals.is_none() {
        return Err(Error::NoStopRule);
    }
    if sys.k() < 2 {
        return Err(Error::TooFewRows {
            needed: 2,
            k: sys.k(),
        });
    }
    if let LinkPolicy::Refresh { fraction } = *policy {
        if !(fraction > 0.0 && fraction <= 1.0) {
            return Err(Error::FractionOutOfRange(fraction));
        }
    }
    let mut current = sys.clone();
    let mut steps = Vec::new();
    let stop_reason = loop {
        let links = match policy {
            LinkPolicy::Fixed(links) => links.clone(),
            LinkPolicy::Refresh { fraction } => rank_links(&current, *fraction)?,
        };
        let mut panel = Panel::new(&current, &links)?;
        if panel.all_pure() {
            break StopReason::AllLinksPure;
        }
        let q = panel.q();
        if stop.threshold.is_some_and(|t| q <= t) {
            break StopReason::ThresholdReached;
        }
        if stop.max_removals.is_some_and(|r| steps.len() >= r) {
            break StopReason::MaxRemovals;
        }
        let after: Vec<Nats> = (0..current.k()).map(|x| panel.q_without(x)).collect();
        let drops: Vec<f64> = after.iter().map(|&qx| q - qx).collect();
        let (x, best) = argmax(&drops);
        if best <= 0.0 {
            break StopReason::NoPositiveDrop;
        }
        let label = current.labels()[x];
        current = current.remove_row(x)?;
        steps.push(RemovalStep {
            row_label: label,
            q_drop: best,
            q_before: q,
            q_after: after[x],
        });
    };
    Ok(RemovalTrace { steps, stop_reason })
}
