//! Sorted disjoint interval sets over positive label values.
//!
//! The solver keeps one forbidden set per unlabeled vertex; assigning a
//! label inserts one closed interval into each. Queries are binary
//! searches over the run list.

/// Set of closed `[lo, hi]` runs, sorted, pairwise disjoint and
/// non-adjacent (`runs[i].1 + 1 < runs[i+1].0`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntervalSet {
    runs: Vec<(u32, u32)>,
    covered: u64,
}

impl IntervalSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Total number of values covered.
    pub fn covered_len(&self) -> u64 {
        self.covered
    }

    /// Inserts `[lo, hi]`, merging with overlapping or adjacent runs.
    pub fn insert(&mut self, lo: u32, hi: u32) {
        debug_assert!(lo <= hi);
        let start = self.runs.partition_point(|r| r.1.saturating_add(1) < lo);
        let end = self.runs.partition_point(|r| r.0 <= hi.saturating_add(1));
        if start == end {
            self.runs.insert(start, (lo, hi));
            self.covered += u64::from(hi - lo) + 1;
            return;
        }
        let new_lo = lo.min(self.runs[start].0);
        let new_hi = hi.max(self.runs[end - 1].1);
        let removed: u64 = self.runs[start..end]
            .iter()
            .map(|&(a, b)| u64::from(b - a) + 1)
            .sum();
        self.runs.drain(start + 1..end);
        self.runs[start] = (new_lo, new_hi);
        self.covered += u64::from(new_hi - new_lo) + 1 - removed;
    }

    #[cfg(test)]
    pub fn contains(&self, x: u32) -> bool {
        let idx = self.runs.partition_point(|r| r.1 < x);
        idx < self.runs.len() && self.runs[idx].0 <= x
    }

    /// Smallest value `>= x` not in the set.
    pub fn next_outside(&self, x: u32) -> u32 {
        let idx = self.runs.partition_point(|r| r.1 < x);
        if idx < self.runs.len() && self.runs[idx].0 <= x {
            // runs are non-adjacent, so the value just past this run is free
            self.runs[idx].1 + 1
        } else {
            x
        }
    }

    /// Appends the maximal runs of `[1, limit]` *not* covered by the set.
    pub fn push_gaps_within(&self, limit: u32, out: &mut Vec<(u32, u32)>) {
        let mut next = 1u32;
        for &(lo, hi) in &self.runs {
            if lo > limit {
                break;
            }
            if lo > next {
                out.push((next, lo - 1));
            }
            next = hi.saturating_add(1);
            if next > limit {
                return;
            }
        }
        if next <= limit {
            out.push((next, limit));
        }
    }
}

/// Sorts and coalesces runs in place, merging overlapping or adjacent ones.
pub fn merge_runs(runs: &mut Vec<(u32, u32)>) {
    if runs.len() <= 1 {
        return;
    }
    runs.sort_unstable();
    let mut write = 0;
    for read in 1..runs.len() {
        let (lo, hi) = runs[read];
        let current = &mut runs[write];
        if lo <= current.1.saturating_add(1) {
            current.1 = current.1.max(hi);
        } else {
            write += 1;
            runs[write] = (lo, hi);
        }
    }
    runs.truncate(write + 1);
}

/// Maximum number of values selectable from disjoint sorted `runs` with
/// consecutive picks at least `gap` apart. Greedy from the left is optimal.
pub fn max_packing(runs: &[(u32, u32)], gap: u32) -> u64 {
    debug_assert!(gap >= 1);
    let gap = u64::from(gap);
    let mut count = 0u64;
    let mut next_ok = 0u64;
    for &(lo, hi) in runs {
        let start = u64::from(lo).max(next_ok);
        if start <= u64::from(hi) {
            let picks = (u64::from(hi) - start) / gap + 1;
            count += picks;
            next_ok = start + picks * gap;
        }
    }
    count
}
