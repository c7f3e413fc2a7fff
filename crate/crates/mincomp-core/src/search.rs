//! Exhaustive subset search in cardinality-then-lexicographic order.
//!
//! Subsets of an indexed universe are visited by increasing cardinality and,
//! within a cardinality, in lexicographic order of their sorted index lists.
//! The parallel path batches candidates and keeps the sequential answer: the
//! first match in enumeration order wins regardless of scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for searches that support data parallelism.
///
/// `Parallel` falls back to sequential execution when the crate is built
/// without the `parallel` feature; results are identical either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Lexicographic combinations of `k` indices out of `0..n`, emitted as bit
/// masks. Plain rejection over all masks would break the required order, so
/// the index list is stepped directly.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |m, &i| m | (1u64 << i));
        let k = self.idx.len();
        // Advance: bump the rightmost index that still has room.
        let mut pos = k;
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            if self.idx[pos] < self.n - k + pos {
                self.idx[pos] += 1;
                for j in pos + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        if k == 0 {
            self.done = true;
        }
        Some(mask)
    }
}

const BATCH: usize = 4096;

/// First nonempty subset satisfying `pred`, in cardinality-then-lex order.
pub(crate) fn first_matching_subset<P>(n: usize, exec: Execution, pred: P) -> Option<u64>
where
    P: Fn(u64) -> bool + Sync,
{
    assert!(n <= 64, "subset universe larger than mask width");
    for k in 1..=n {
        let mut combos = Combinations::new(n, k);
        match exec {
            Execution::Sequential => {
                if let Some(m) = combos.find(|&m| pred(m)) {
                    return Some(m);
                }
            }
            Execution::Parallel => {
                let mut batch = Vec::with_capacity(BATCH);
                loop {
                    batch.clear();
                    batch.extend(combos.by_ref().take(BATCH));
                    if batch.is_empty() {
                        break;
                    }
                    let hit = find_in_batch(&batch, &pred);
                    if let Some(m) = hit {
                        return Some(m);
                    }
                }
            }
        }
    }
    None
}

#[cfg(feature = "parallel")]
fn find_in_batch<P: Fn(u64) -> bool + Sync>(batch: &[u64], pred: &P) -> Option<u64> {
    batch.par_iter().find_first(|&&m| pred(m)).copied()
}

#[cfg(not(feature = "parallel"))]
fn find_in_batch<P: Fn(u64) -> bool + Sync>(batch: &[u64], pred: &P) -> Option<u64> {
    batch.iter().find(|&&m| pred(m)).copied()
}
