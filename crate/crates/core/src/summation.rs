/// Pairwise (cascade) summation over a stream of values.
///
/// Values are combined as the leaves of a balanced binary tree in arrival
/// order, so the rounding error grows with `log n` and the result depends only
/// on the sequence of inputs.
#[derive(Debug, Clone, Default)]
pub struct PairwiseSum {
    // (subtree size as a power of two, partial sum), sizes strictly decreasing
    stack: alloc::vec::Vec<(u32, f64)>,
    len: u64,
}

impl PairwiseSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        self.len += 1;
        let mut node = (0u32, x);
        while let Some(&(level, sum)) = self.stack.last() {
            if level != node.0 {
                break;
            }
            self.stack.pop();
            node = (level + 1, sum + node.1);
        }
        self.stack.push(node);
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn sum(&self) -> f64 {
        self.stack.iter().rev().fold(0.0, |acc, &(_, s)| s + acc)
    }
}
