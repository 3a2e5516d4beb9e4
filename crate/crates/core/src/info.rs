//! Plug-in Shannon quantities in nats.

use alloc::vec::Vec;

use crate::counts::LinkCounts;
use crate::error::{Error, Result};

/// Information measured with the natural logarithm.
pub type Nats = f64;

#[inline]
pub(crate) fn xlogx_ratio(c: u32, total: f64) -> f64 {
    if c == 0 {
        0.0
    } else {
        let p = c as f64 / total;
        p * libm::log(p)
    }
}

fn entropy_unchecked(counts: &[u32], total: u32) -> Nats {
    let t = total as f64;
    // ascending code order, fixed for reproducibility
    let s: f64 = counts.iter().map(|&c| xlogx_ratio(c, t)).sum();
    if s == 0.0 {
        0.0
    } else {
        -s
    }
}

/// Shannon entropy of a count table, `-sum p ln p` with `0 ln 0 = 0`.
pub fn entropy(counts: &[u32], total: u32) -> Result<Nats> {
    if total == 0 {
        return Err(Error::ZeroTotal);
    }
    debug_assert_eq!(counts.iter().map(|&c| c as u64).sum::<u64>(), total as u64);
    Ok(entropy_unchecked(counts, total))
}

/// Variation of information between the two columns of a link:
/// `2 H(joint) - H(left) - H(right)`.
///
/// Pure links return exactly zero; purity is decided on the integer counts.
pub fn vi_distance(lc: &LinkCounts) -> Nats {
    if lc.is_pure() {
        return 0.0;
    }
    let k = lc.total();
    2.0 * entropy_unchecked(lc.joint(), k)
        - entropy_unchecked(lc.left(), k)
        - entropy_unchecked(lc.right(), k)
}

/// Mutual information `I(Z, X)` between a column `Z` and the uniformly chosen
/// row index `X`, evaluated as `H(Z) - (1/k) sum_x H(Z^x)` where `Z^x` is the
/// column with row `x` deleted.
pub fn row_mutual_information(counts: &[u32], total: u32) -> Result<Nats> {
    if total < 2 {
        return Err(Error::TooFewRows {
            needed: 2,
            k: total as usize,
        });
    }
    let k = total as f64;
    let mut reduced: Vec<u32> = counts.to_vec();
    let mut deleted = 0.0;
    for z in 0..counts.len() {
        let nu = counts[z];
        if nu == 0 {
            continue;
        }
        // every one of the nu rows holding z leaves the same reduced table
        reduced[z] -= 1;
        deleted += nu as f64 * entropy_unchecked(&reduced, total - 1);
        reduced[z] += 1;
    }
    Ok(entropy_unchecked(counts, total) - deleted / k)
}

/// Closed form of [`row_mutual_information`]:
/// `ln(k/(k-1)) + sum_z p_z^- p_z ln((nu_z - 1)/nu_z)`, where
/// `p_z^- = (nu_z - 1)/(k - 1)`. Symbols seen once contribute nothing.
pub fn row_mutual_information_closed_form(counts: &[u32], total: u32) -> Result<Nats> {
    if total < 2 {
        return Err(Error::TooFewRows {
            needed: 2,
            k: total as usize,
        });
    }
    let k = total as f64;
    let tail: f64 = counts
        .iter()
        .filter(|&&nu| nu > 1)
        .map(|&nu| {
            let nu = nu as f64;
            let p = nu / k;
            let p_minus = (nu - 1.0) / (k - 1.0);
            p_minus * p * libm::log((nu - 1.0) / nu)
        })
        .sum();
    Ok(libm::log(k / (k - 1.0)) + tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::LN_2;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn entropy_examples() {
        assert!(close(entropy(&[2, 2], 4).unwrap(), LN_2, 1e-15));
        assert_eq!(entropy(&[4], 4).unwrap(), 0.0);
        assert_eq!(entropy(&[0, 4, 0], 4).unwrap(), 0.0);
        // ln 4 - (3/4) ln 3
        assert!(close(
            entropy(&[1, 3], 4).unwrap(),
            0.562_335_144_618_808_3,
            1e-15
        ));
        assert_eq!(entropy(&[0, 0], 0), Err(Error::ZeroTotal));
    }

    #[test]
    fn vi_examples() {
        let pure = LinkCounts::from_pairs(3, [(0, 2), (1, 0), (2, 1), (0, 2)]);
        assert_eq!(vi_distance(&pure), 0.0);
        let uniform = LinkCounts::from_joint(2, &[1, 1, 1, 1]);
        assert!(close(vi_distance(&uniform), 2.0 * LN_2, 1e-15));
        let lc = LinkCounts::from_joint(2, &[1, 1, 0, 1]);
        assert!(close(vi_distance(&lc), 4.0 / 3.0 * LN_2, 1e-15));
        assert!(close(
            vi_distance(&lc),
            vi_distance(&lc.transposed()),
            1e-15
        ));
    }

    #[test]
    fn row_information_examples() {
        // ln(3/2) - (1/3) ln 2
        let expected = 0.174_416_047_921_516;
        assert!(close(
            row_mutual_information(&[2, 1], 3).unwrap(),
            expected,
            1e-15
        ));
        assert!(close(
            row_mutual_information_closed_form(&[2, 1], 3).unwrap(),
            expected,
            1e-15
        ));
        assert!(row_mutual_information(&[7], 7).unwrap().abs() < 1e-15);
        assert!(
            row_mutual_information_closed_form(&[0, 7], 7)
                .unwrap()
                .abs()
                < 1e-15
        );
        assert_eq!(
            row_mutual_information(&[1], 1),
            Err(Error::TooFewRows { needed: 2, k: 1 })
        );
    }
}
