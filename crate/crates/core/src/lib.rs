//! Information-theoretic site linkage of aligned symbol data.
//!
//! A [`System`] is a `k x n` table of symbol codes (an alignment). Any pair of
//! columns `(i, j)` with `i < j` is a *link*. For each link this crate computes
//! the variation-of-information distance between the two columns, the
//! expected drop of that distance when `s` rows are removed uniformly at
//! random (the link potential), and, over a set of links, the greedy
//! row-removal loop that exposes rows which make the links least pure.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, synthetic data
//! generation and the command-line tool live in the `sitelink` crate.

#![no_std]

extern crate alloc;

mod combinations;
mod counts;
mod error;
mod info;
mod potential;
mod special;
mod spectrum;
mod summation;
mod system;

pub use combinations::{binomial, Colex};
pub use counts::{link_counts, LinkCounts};
pub use error::{Error, Result};
pub use info::{
    entropy, row_mutual_information, row_mutual_information_closed_form, vi_distance, Nats,
};
pub use potential::{
    ground_state_bound, lambda, potential_closed_form_s1, potential_exact, potential_mc,
    theorem51_bound, Method, PotentialEstimate, DEFAULT_ENUMERATION_BUDGET,
};
pub use special::{special_g, special_h, special_upper_g};
pub use spectrum::{
    argmax_drop, purge, q_average, q_drop, q_drops, rank_links, ranked_links, site_spectrum,
    spectrum_entry, Link, LinkPolicy, LinkSet, RemovalStep, RemovalTrace, SpectrumEntry,
    StopReason, StopRule,
};
pub use summation::PairwiseSum;
pub use system::{Alphabet, RowMask, System};

/// Absolute tolerance for deciding that a potential or distance is zero.
pub const ZERO_TOL: f64 = 1e-12;

/// Relative tolerance for agreement between two evaluation routes.
pub const AGREEMENT_TOL: f64 = 1e-9;
