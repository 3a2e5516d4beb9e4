use rayon::prelude::*;
use sitelink_core::{spectrum_entry, LinkSet, Method, SpectrumEntry, System};

use crate::error::{Error, Result};

/// [`sitelink_core::site_spectrum`] spread over `workers` threads.
///
/// Each link is evaluated independently (Monte Carlo streams are keyed by the
/// link), so the output is identical for every worker count.
pub fn par_site_spectrum(
    sys: &System,
    links: &LinkSet,
    s: usize,
    method: &Method,
    workers: usize,
) -> Result<Vec<SpectrumEntry>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let entries = pool.install(|| {
        links
            .links()
            .par_iter()
            .map(|&l| spectrum_entry(sys, l, s, method))
            .collect::<std::result::Result<Vec<_>, _>>()
    })?;
    Ok(entries)
}
