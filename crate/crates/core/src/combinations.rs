//! s-subsets of `{0, .., k-1}` in colexicographic order.

use alloc::vec::Vec;

/// `C(k, s)`, or `None` when it does not fit in a `u128`.
pub fn binomial(k: usize, s: usize) -> Option<u128> {
    if s > k {
        return Some(0);
    }
    let s = s.min(k - s);
    let mut acc: u128 = 1;
    for t in 0..s {
        // acc * (k - t) / (t + 1) stays integral at every step
        acc = acc.checked_mul((k - t) as u128)? / (t as u128 + 1);
    }
    Some(acc)
}

/// Walks all `s`-subsets of `{0, .., k-1}` in colex order: subsets are
/// compared by their largest element first, so `{0,1} < {0,2} < {1,2} < {0,3}`.
#[derive(Debug, Clone)]
pub struct Colex {
    k: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl Colex {
    pub fn new(k: usize, s: usize) -> Self {
        Self {
            k,
            current: (0..s).collect(),
            started: false,
            done: s > k,
        }
    }

    /// The next subset as a sorted slice.
    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let s = self.current.len();
        // lowest position that can move up without colliding with its successor
        let mut j = 0;
        while j < s {
            let limit = if j + 1 < s {
                self.current[j + 1]
            } else {
                self.k
            };
            if self.current[j] + 1 < limit {
                break;
            }
            j += 1;
        }
        if j == s {
            self.done = true;
            return None;
        }
        self.current[j] += 1;
        for (t, slot) in self.current[..j].iter_mut().enumerate() {
            *slot = t;
        }
        Some(&self.current)
    }
}
