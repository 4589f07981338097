//! Exact radio-number computation by incremental-span backtracking with
//! forbidden-interval pruning.
//!
//! [`solve`] iterates candidate spans upward from the best generic lower
//! bound. At each span a depth-first search assigns labels to vertices in a
//! fixed most-constrained-first order (increasing eccentricity, ties by
//! vertex id), always trying the smallest feasible label next. Every
//! assignment of value `a` to vertex `v` forbids, for each unlabeled `u`,
//! the interval of values within `diam - d(u, v)` of `a`: the interval
//! form of the radio condition. Two counting prunes run at every node:
//! the remaining vertices must fit injectively into the union of their
//! allowed values, and vertex groups with a pairwise minimum label gap
//! must fit at that spacing.
//!
//! The first span admitting a complete assignment is the radio number; the
//! spans below it have been exhausted, which is the optimality certificate.
//! Budgets turn an over-long search into an explicit inconclusive result.

mod intervals;

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::graph::{Graph, VertexId};
use crate::radio::Labeling;

use intervals::{max_packing, merge_runs, IntervalSet};

/// Search limits and strategy switches.
///
/// `start_span` overrides the initial candidate span; the solver certifies
/// minimality only down to that span, so pass a value that is itself a
/// sound lower bound. With `symmetry_breaking` the first vertex in the
/// search order only takes labels in the lower half of `1..=s`: reflecting
/// every label through `s + 1 - c` preserves the radio condition, so half
/// the space is redundant. `workers > 1` splits the top-level value choices
/// across a thread pool.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    pub start_span: Option<u32>,
    pub symmetry_breaking: bool,
    pub workers: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: None,
            time_budget: None,
            start_span: None,
            symmetry_breaking: true,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes_explored: u64,
    pub spans_tried: u32,
    #[serde(rename = "wall_time_ms", with = "duration_millis")]
    pub wall_time: Duration,
}

mod duration_millis {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_millis() as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_millis(u64::deserialize(d)?))
    }
}

/// A solved instance: minimal span, a witness labeling attaining it, and
/// search statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub rn: u32,
    pub witness: Labeling,
    pub stats: SearchStats,
}

/// Best-known information when a budget ran out before the search finished.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inconclusive {
    /// Every span below this value has been exhausted (or was excluded by
    /// the starting bound), so the radio number is at least this.
    pub lower_bound: u32,
    /// Span of a feasible labeling found before the budget ran out, if any.
    pub upper_bound: Option<u32>,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SolveOutcome {
    Solved(SolveResult),
    Inconclusive(Inconclusive),
}

impl SolveOutcome {
    pub fn solved(&self) -> Option<&SolveResult> {
        match self {
            SolveOutcome::Solved(r) => Some(r),
            SolveOutcome::Inconclusive(_) => None,
        }
    }

    pub fn stats(&self) -> &SearchStats {
        match self {
            SolveOutcome::Solved(r) => &r.stats,
            SolveOutcome::Inconclusive(r) => &r.stats,
        }
    }
}

/// Outcome of the span-feasibility decision problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Labeling),
    Infeasible,
    Inconclusive,
}

impl Feasibility {
    pub fn labeling(&self) -> Option<&Labeling> {
        match self {
            Feasibility::Feasible(c) => Some(c),
            _ => None,
        }
    }
}

/// Computes the radio number of `g` with a witness labeling.
///
/// Candidate spans start at `cfg.start_span` or, by default, the larger of
/// the vertex-count and eccentricity-gap lower bounds. A span of
/// `1 + (|V| - 1) * diam` is always feasible, so the search terminates
/// whenever the budgets allow.
pub fn solve(g: &Graph, cfg: &SolverConfig) -> SolveOutcome {
    let started = Instant::now();
    let problem = Problem::new(g);
    let budget = Budget::new(cfg, started);
    let n = g.n_vertices() as u32;
    let default_start = bounds::lower_bound_ecc_gap(g).value.max(n);
    let start = cfg.start_span.unwrap_or(default_start).max(1);
    let always_feasible = 1 + (n - 1) * g.diameter().max(1);
    let mut spans_tried = 0;

    for span in start..=always_feasible.max(start) {
        spans_tried += 1;
        match run_span(&problem, span, cfg, &budget) {
            BranchOutcome::Found(assignment) => {
                let witness = problem.to_labeling(&assignment);
                debug_assert!(crate::radio::check(g, &witness)
                    .map(|v| v.is_empty())
                    .unwrap_or(false));
                return SolveOutcome::Solved(SolveResult {
                    rn: span,
                    witness,
                    stats: stats(&budget, spans_tried, started),
                });
            }
            BranchOutcome::Exhausted => continue,
            BranchOutcome::Aborted => {
                return SolveOutcome::Inconclusive(Inconclusive {
                    lower_bound: span,
                    upper_bound: None,
                    stats: stats(&budget, spans_tried, started),
                });
            }
        }
    }
    unreachable!("a span of 1 + (n - 1) * diam always admits a radio labeling");
}

/// Searches for a radio labeling of `g` with span at most `span`.
///
/// `Infeasible` is certified by exhausting the search space; `Inconclusive`
/// means a budget ran out first.
pub fn feasible_at_span(g: &Graph, span: u32, cfg: &SolverConfig) -> Feasibility {
    let started = Instant::now();
    let problem = Problem::new(g);
    let budget = Budget::new(cfg, started);
    match run_span(&problem, span, cfg, &budget) {
        BranchOutcome::Found(assignment) => Feasibility::Feasible(problem.to_labeling(&assignment)),
        BranchOutcome::Exhausted => Feasibility::Infeasible,
        BranchOutcome::Aborted => Feasibility::Inconclusive,
    }
}

fn stats(budget: &Budget, spans_tried: u32, started: Instant) -> SearchStats {
    SearchStats {
        nodes_explored: budget.used.load(Ordering::Relaxed),
        spans_tried,
        wall_time: started.elapsed(),
    }
}

/// A group of vertices (as search-order positions) whose labels must be
/// pairwise at least `min_gap` apart.
struct Clique {
    members: Vec<usize>,
    min_gap: u32,
}

/// Static, span-independent description of one search instance.
struct Problem {
    n: usize,
    order: Vec<VertexId>,
    /// Required label gap `diam + 1 - d` indexed by order position pairs.
    gap: Vec<Vec<u32>>,
    cliques: Vec<Clique>,
}

impl Problem {
    fn new(g: &Graph) -> Self {
        let dm = g.distances();
        let n = g.n_vertices();
        // most-constrained first: small eccentricity forces large gaps
        let mut order: Vec<VertexId> = g.vertices().collect();
        order.sort_by_key(|&v| (dm.eccentricity(v), v));

        let required = |u: VertexId, v: VertexId| dm.diameter() + 1 - dm.distance(u, v);
        let gap: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            0
                        } else {
                            required(order[i], order[j])
                        }
                    })
                    .collect()
            })
            .collect();

        // One pigeonhole group over everything, plus greedy groups of
        // vertices with larger pairwise gaps for each threshold.
        let mut cliques = vec![Clique {
            members: (0..n).collect(),
            min_gap: 1,
        }];
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for threshold in 2..=dm.diameter() + 1 {
            let mut groups: Vec<Vec<usize>> = Vec::new();
            #[allow(clippy::needless_range_loop)]
            for pos in 0..n {
                let home = groups
                    .iter_mut()
                    .find(|group| group.iter().all(|&m| gap[m][pos] >= threshold));
                match home {
                    Some(group) => group.push(pos),
                    None => groups.push(vec![pos]),
                }
            }
            for group in groups {
                if group.len() < 3 || seen.contains(&group) {
                    continue;
                }
                let gap = &gap;
                let min_gap = group
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &a)| group[i + 1..].iter().map(move |&b| gap[a][b]))
                    .min()
                    .unwrap_or(1);
                seen.push(group.clone());
                cliques.push(Clique {
                    members: group,
                    min_gap,
                });
            }
        }

        Problem {
            n,
            order,
            gap,
            cliques,
        }
    }

    fn to_labeling(&self, assignment: &[u32]) -> Labeling {
        self.order
            .iter()
            .zip(assignment)
            .map(|(&v, &c)| (v, c))
            .collect()
    }
}

/// Shared search budget. Branches batch node counts locally and flush them
/// periodically, so the limit check lags by at most the batch size.
struct Budget {
    used: AtomicU64,
    node_limit: u64,
    deadline: Option<Instant>,
}

const FLUSH_EVERY: u64 = 512;

impl Budget {
    fn new(cfg: &SolverConfig, started: Instant) -> Self {
        Budget {
            used: AtomicU64::new(0),
            node_limit: cfg.node_budget.unwrap_or(u64::MAX),
            deadline: cfg.time_budget.map(|d| started + d),
        }
    }

    /// Returns false when the budget is exhausted.
    fn flush(&self, pending: &mut u64) -> bool {
        let total = self.used.fetch_add(*pending, Ordering::Relaxed) + *pending;
        *pending = 0;
        if total > self.node_limit {
            return false;
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() > deadline {
                return false;
            }
        }
        true
    }
}

enum BranchOutcome {
    Found(Vec<u32>),
    Exhausted,
    Aborted,
}

/// Runs the full search for one candidate span. The value choices for the
/// first vertex in the order partition the space into branches; they are
/// explored left to right, in parallel when `cfg.workers > 1`, and the
/// leftmost non-exhausted branch decides the outcome (which keeps the
/// returned witness independent of the worker count).
fn run_span(problem: &Problem, span: u32, cfg: &SolverConfig, budget: &Budget) -> BranchOutcome {
    if span == 0 {
        return BranchOutcome::Exhausted;
    }
    let first_limit = if cfg.symmetry_breaking {
        span.div_ceil(2)
    } else {
        span
    };
    let candidates: Vec<u32> = (1..=first_limit).collect();

    let run = |first_value: u32| {
        let mut search = SpanSearch::new(problem, span, budget);
        search.run_from(first_value)
    };

    if cfg.workers <= 1 {
        for first_value in candidates {
            match run(first_value) {
                BranchOutcome::Exhausted => continue,
                decided => return decided,
            }
        }
        return BranchOutcome::Exhausted;
    }

    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .expect("failed to build solver thread pool");
    let decided = pool.install(|| {
        candidates
            .into_par_iter()
            .filter_map(|first_value| match run(first_value) {
                BranchOutcome::Exhausted => None,
                decided => Some(decided),
            })
            .find_first(|_| true)
    });
    decided.unwrap_or(BranchOutcome::Exhausted)
}

/// Depth-first search state for a single span and top-level branch.
///
/// `domains[depth]` holds, per order position, the forbidden intervals
/// implied by the assignments on positions `< depth`; descending clones the
/// suffix of the parent level and inserts the new intervals.
struct SpanSearch<'p> {
    problem: &'p Problem,
    span: u32,
    budget: &'p Budget,
    domains: Vec<Vec<IntervalSet>>,
    assignment: Vec<u32>,
    pending_nodes: u64,
    scratch: Vec<(u32, u32)>,
}

enum StepResult {
    Descend,
    Pruned,
    Abort,
}

impl<'p> SpanSearch<'p> {
    fn new(problem: &'p Problem, span: u32, budget: &'p Budget) -> Self {
        let n = problem.n;
        SpanSearch {
            problem,
            span,
            budget,
            domains: vec![vec![IntervalSet::new(); n]; n + 1],
            assignment: vec![0; n],
            pending_nodes: 0,
            scratch: Vec::new(),
        }
    }

    fn run_from(&mut self, first_value: u32) -> BranchOutcome {
        let outcome = match self.step(0, first_value) {
            StepResult::Abort => BranchOutcome::Aborted,
            StepResult::Pruned => BranchOutcome::Exhausted,
            StepResult::Descend => self.dfs(1),
        };
        let _ = self.budget.flush(&mut self.pending_nodes);
        outcome
    }

    fn dfs(&mut self, depth: usize) -> BranchOutcome {
        if depth == self.problem.n {
            return BranchOutcome::Found(self.assignment.clone());
        }
        let mut from = 1u32;
        loop {
            let value = self.domains[depth][depth].next_outside(from);
            if value > self.span {
                return BranchOutcome::Exhausted;
            }
            match self.step(depth, value) {
                StepResult::Abort => return BranchOutcome::Aborted,
                StepResult::Pruned => {}
                StepResult::Descend => match self.dfs(depth + 1) {
                    BranchOutcome::Exhausted => {}
                    decided => return decided,
                },
            }
            from = value + 1;
        }
    }

    /// Tentatively assigns `value` at `depth`: propagates forbidden
    /// intervals into the next level and runs the counting prunes.
    fn step(&mut self, depth: usize, value: u32) -> StepResult {
        self.pending_nodes += 1;
        if self.pending_nodes >= FLUSH_EVERY && !self.budget.flush(&mut self.pending_nodes) {
            return StepResult::Abort;
        }
        self.assignment[depth] = value;

        let n = self.problem.n;
        let (parent, rest) = self.domains.split_at_mut(depth + 1);
        let (parent, child) = (&parent[depth], &mut rest[0]);
        let gaps = &self.problem.gap[depth];
        for pos in depth + 1..n {
            let domain = &mut child[pos];
            domain.clone_from(&parent[pos]);
            let gap = gaps[pos];
            let lo = value.saturating_sub(gap - 1).max(1);
            let hi = (value + gap - 1).min(self.span);
            domain.insert(lo, hi);
            if domain.covered_len() == u64::from(self.span) {
                return StepResult::Pruned;
            }
        }

        if self.prune_by_counting(depth) {
            return StepResult::Pruned;
        }
        StepResult::Descend
    }

    /// True when some vertex group provably no longer fits: the unlabeled
    /// members of a group must pack into the union of their allowed values
    /// at the group's minimum pairwise gap.
    fn prune_by_counting(&mut self, depth: usize) -> bool {
        let level = &self.domains[depth + 1];
        for clique in &self.problem.cliques {
            let unlabeled = clique.members.iter().filter(|&&pos| pos > depth);
            let needed = unlabeled.clone().count() as u64;
            if needed < 2 {
                continue;
            }
            self.scratch.clear();
            for &pos in unlabeled {
                level[pos].push_gaps_within(self.span, &mut self.scratch);
            }
            merge_runs(&mut self.scratch);
            if max_packing(&self.scratch, clique.min_gap) < needed {
                return true;
            }
        }
        false
    }
}
