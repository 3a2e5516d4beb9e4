use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::system::System;

/// Joint and marginal symbol counts of one link.
///
/// `joint[u * a + v]` counts rows whose left column holds `u` and right column
/// holds `v`. These counts are a sufficient statistic for every distance and
/// potential in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkCounts {
    a: usize,
    joint: Vec<u32>,
    left: Vec<u32>,
    right: Vec<u32>,
    total: u32,
}

impl LinkCounts {
    pub fn zeroed(a: usize) -> Self {
        Self {
            a,
            joint: vec![0; a * a],
            left: vec![0; a],
            right: vec![0; a],
            total: 0,
        }
    }

    /// Builds counts from an `a x a` row-major joint table.
    pub fn from_joint(a: usize, joint: &[u32]) -> Self {
        assert_eq!(joint.len(), a * a, "joint table must be a x a");
        let mut lc = Self::zeroed(a);
        for u in 0..a {
            for v in 0..a {
                let c = joint[u * a + v];
                lc.joint[u * a + v] = c;
                lc.left[u] += c;
                lc.right[v] += c;
                lc.total += c;
            }
        }
        lc
    }

    /// Builds counts from a sequence of `(left, right)` symbol codes.
    pub fn from_pairs<I: IntoIterator<Item = (u8, u8)>>(a: usize, pairs: I) -> Self {
        let mut lc = Self::zeroed(a);
        for (u, v) in pairs {
            lc.add(u, v);
        }
        lc
    }

    #[inline]
    pub fn add(&mut self, u: u8, v: u8) {
        let (u, v) = (u as usize, v as usize);
        self.joint[u * self.a + v] += 1;
        self.left[u] += 1;
        self.right[v] += 1;
        self.total += 1;
    }

    /// Panics if the pair has no occurrence left.
    #[inline]
    pub fn remove(&mut self, u: u8, v: u8) {
        let (u, v) = (u as usize, v as usize);
        self.joint[u * self.a + v] -= 1;
        self.left[u] -= 1;
        self.right[v] -= 1;
        self.total -= 1;
    }

    pub fn alphabet_size(&self) -> usize {
        self.a
    }

    pub fn joint(&self) -> &[u32] {
        &self.joint
    }

    pub fn joint_at(&self, u: usize, v: usize) -> u32 {
        self.joint[u * self.a + v]
    }

    pub fn left(&self) -> &[u32] {
        &self.left
    }

    pub fn right(&self) -> &[u32] {
        &self.right
    }

    /// Number of rows, `k`.
    pub fn total(&self) -> u32 {
        self.total
    }

    /// Swaps the roles of the two columns.
    pub fn transposed(&self) -> Self {
        let a = self.a;
        let mut joint = vec![0; a * a];
        for u in 0..a {
            for v in 0..a {
                joint[v * a + u] = self.joint[u * a + v];
            }
        }
        Self {
            a,
            joint,
            left: self.right.clone(),
            right: self.left.clone(),
            total: self.total,
        }
    }

    /// True when the observed map from left symbols to right symbols is
    /// injective, i.e. it extends to a bijection of the alphabet. Equivalently,
    /// every row and every column of the joint table has at most one nonzero
    /// entry.
    pub fn is_pure(&self) -> bool {
        let a = self.a;
        // a <= 256, so a fixed bitset tracks which right symbols are taken
        let mut column_used = [0u64; 4];
        for u in 0..a {
            let mut in_row = 0;
            for v in 0..a {
                if self.joint[u * a + v] > 0 {
                    in_row += 1;
                    let (word, bit) = (v / 64, 1u64 << (v % 64));
                    if in_row > 1 || column_used[word] & bit != 0 {
                        return false;
                    }
                    column_used[word] |= bit;
                }
            }
        }
        true
    }

    /// True when every symbol pair occurs exactly `total / a^2` times.
    pub fn is_uniform(&self) -> bool {
        let cells = (self.a * self.a) as u32;
        if self.total == 0 || !self.total.is_multiple_of(cells) {
            return false;
        }
        let each = self.total / cells;
        self.joint.iter().all(|&c| c == each)
    }

    /// True when every symbol pair occurs at least once.
    pub fn has_full_support(&self) -> bool {
        self.joint.iter().all(|&c| c > 0)
    }
}

/// Counts of the link `(i, j)` of `sys`, `i < j`.
pub fn link_counts(sys: &System, i: usize, j: usize) -> Result<LinkCounts> {
    check_link(sys, i, j)?;
    let a = sys.alphabet().size();
    Ok(LinkCounts::from_pairs(a, sys.rows().map(|r| (r[i], r[j]))))
}

pub(crate) fn check_link(sys: &System, i: usize, j: usize) -> Result<()> {
    sys.check_column(i)?;
    sys.check_column(j)?;
    if i == j {
        return Err(Error::SameColumn(i));
    }
    if i > j {
        return Err(Error::UnorderedLink(i, j));
    }
    Ok(())
}
