//! Smallest dominating sets.
//!
//! Same level structure as [`crate::weighted_dp`], but each combination keeps
//! only the candidate reaching farthest from its owner, so a bucket holds
//! `O(t)` sublists. The first level that produces the full circle gives a
//! smallest dominating set.

use std::ops::Range;

use crate::geometry::{union_extend, CyclicSublist, Instance, Mode, Openness};
use crate::neighbor_index::{NeighborAnswer, NeighborIndex};
use crate::oracle;
use crate::solution::{Solution, SolveError};
use crate::sublist_queries::{FarthestEnclosingIndex, ValuedSublist};
use crate::weighted_dp::{merge_witnesses, SolverConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyCandidate {
    pub sub: CyclicSublist,
    /// Canonical indices, ascending.
    pub witnesses: Vec<usize>,
    pub owner: usize,
    pub level: usize,
}

impl GreedyCandidate {
    pub fn check(&self, instance: &Instance) -> Result<(), String> {
        if !oracle::dominates(instance, &self.witnesses, &self.sub) {
            return Err(format!(
                "witnesses {:?} do not dominate {:?}",
                self.witnesses, self.sub
            ));
        }
        if self.witnesses.binary_search(&self.owner).is_err() {
            return Err(format!(
                "owner {} missing from witnesses {:?}",
                self.owner, self.witnesses
            ));
        }
        if !self.sub.contains_index(self.owner) {
            return Err(format!("owner {} outside {:?}", self.owner, self.sub));
        }
        if self.witnesses.len() > self.level {
            return Err(format!(
                "{} witnesses at level {}",
                self.witnesses.len(),
                self.level
            ));
        }
        Ok(())
    }

    fn ccw_reach(&self) -> usize {
        self.sub.ccw_reach_from(self.owner)
    }

    fn cw_reach(&self) -> usize {
        self.sub.cw_reach_from(self.owner)
    }
}

/// A frozen level with per-owner extremes and the global farthest index.
pub struct GreedyLevel {
    level: usize,
    candidates: Vec<GreedyCandidate>,
    buckets: Vec<Range<usize>>,
    ccw_extreme: Vec<Option<u32>>,
    cw_extreme: Vec<Option<u32>>,
    global: FarthestEnclosingIndex,
}

impl GreedyLevel {
    fn freeze(
        level: usize,
        n: usize,
        buckets: Vec<Vec<GreedyCandidate>>,
        config: &SolverConfig,
    ) -> Self {
        let mut candidates: Vec<GreedyCandidate> = Vec::new();
        let mut ranges = Vec::with_capacity(n);
        let mut ccw_extreme = Vec::with_capacity(n);
        let mut cw_extreme = Vec::with_capacity(n);
        for bucket in buckets {
            let begin = candidates.len();
            let (mut ccw, mut cw): (Option<u32>, Option<u32>) = (None, None);
            for c in bucket {
                let id = candidates.len() as u32;
                let far = |best: Option<u32>, reach: &dyn Fn(&GreedyCandidate) -> usize| match best
                {
                    Some(b) if reach(&candidates[b as usize]) >= reach(&c) => Some(b),
                    _ => Some(id),
                };
                ccw = far(ccw, &GreedyCandidate::ccw_reach);
                cw = far(cw, &GreedyCandidate::cw_reach);
                candidates.push(c);
            }
            ranges.push(begin..candidates.len());
            ccw_extreme.push(ccw);
            cw_extreme.push(cw);
        }
        let items = candidates
            .iter()
            .enumerate()
            .map(|(id, c)| ValuedSublist {
                sub: c.sub,
                value: 0.0,
                id: id as u32,
            })
            .collect();
        GreedyLevel {
            level,
            global: FarthestEnclosingIndex::build_with(items, n, config.queries),
            candidates,
            buckets: ranges,
            ccw_extreme,
            cw_extreme,
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn candidates(&self) -> &[GreedyCandidate] {
        &self.candidates
    }

    pub fn bucket(&self, i: usize) -> &[GreedyCandidate] {
        &self.candidates[self.buckets[i].clone()]
    }

    /// Bucket entry whose counterclockwise endpoint is farthest from `p_i`.
    pub fn ccw_extreme(&self, i: usize) -> Option<&GreedyCandidate> {
        self.ccw_extreme[i].map(|id| &self.candidates[id as usize])
    }

    /// Bucket entry whose clockwise endpoint is farthest from `p_i`.
    pub fn cw_extreme(&self, i: usize) -> Option<&GreedyCandidate> {
        self.cw_extreme[i].map(|id| &self.candidates[id as usize])
    }

    pub fn global_index(&self) -> &FarthestEnclosingIndex {
        &self.global
    }

    fn global(&self, id: u32) -> &GreedyCandidate {
        &self.candidates[id as usize]
    }

    /// Recomputes the extremes by scanning and compares with the cached ones.
    pub fn extremes_consistent(&self) -> bool {
        (0..self.buckets.len()).all(|i| {
            let bucket = self.bucket(i);
            let scan = |reach: fn(&GreedyCandidate) -> usize| {
                let mut best: Option<usize> = None;
                for (k, c) in bucket.iter().enumerate() {
                    if best.is_none_or(|b| reach(c) > reach(&bucket[b])) {
                        best = Some(k);
                    }
                }
                best.map(|k| (self.buckets[i].start + k) as u32)
            };
            scan(GreedyCandidate::ccw_reach) == self.ccw_extreme[i]
                && scan(GreedyCandidate::cw_reach) == self.cw_extreme[i]
        })
    }
}

#[derive(Clone, Copy)]
enum Turn {
    Ccw,
    Cw,
}

/// Level-by-level state of the greedy solver.
pub struct GreedySolver<'a> {
    instance: &'a Instance,
    neighbors: NeighborIndex<'a>,
    config: SolverConfig,
    runs: Vec<CyclicSublist>,
    levels: Vec<GreedyLevel>,
}

impl<'a> GreedySolver<'a> {
    pub fn new(instance: &'a Instance, config: SolverConfig) -> Self {
        let neighbors = NeighborIndex::build(instance, config.neighbors);
        let n = instance.len();
        let runs: Vec<CyclicSublist> = (0..n).map(|i| neighbors.dominated_run(i)).collect();
        let buckets = (0..n)
            .map(|i| {
                vec![GreedyCandidate {
                    sub: runs[i],
                    witnesses: vec![i],
                    owner: i,
                    level: 1,
                }]
            })
            .collect();
        let level_one = GreedyLevel::freeze(1, n, buckets, &config);
        let mut solver = GreedySolver {
            instance,
            neighbors,
            config,
            runs,
            levels: Vec::new(),
        };
        solver.check_level(&level_one);
        solver.levels.push(level_one);
        solver
    }

    pub fn levels(&self) -> &[GreedyLevel] {
        &self.levels
    }

    fn level(&self, t: usize) -> &GreedyLevel {
        &self.levels[t - 1]
    }

    fn assert_ready(&self, t: usize) {
        assert!(t >= 2, "steps need t >= 2");
        assert!(
            t - 1 <= self.levels.len(),
            "levels 1..{} are not all frozen",
            t - 1
        );
    }

    /// For each `t' < t`, extends the farthest-ccw entry of `L_{t'}(i)` with
    /// the farthest-ccw entry of `L_{t-t'}` covering the next point, and
    /// keeps the result reaching farthest from `p_i`.
    pub fn greedy_ccw_step(&self, i: usize, t: usize) -> Option<GreedyCandidate> {
        self.directional_step(i, t, Turn::Ccw)
    }

    /// Clockwise mirror of [`GreedySolver::greedy_ccw_step`].
    pub fn greedy_cw_step(&self, i: usize, t: usize) -> Option<GreedyCandidate> {
        self.directional_step(i, t, Turn::Cw)
    }

    fn directional_step(&self, i: usize, t: usize, turn: Turn) -> Option<GreedyCandidate> {
        self.assert_ready(t);
        let n = self.instance.len();
        let mut best: Option<GreedyCandidate> = None;
        let mut best_reach = 0;
        for tp in 1..t {
            let first_level = self.level(tp);
            let first = match turn {
                Turn::Ccw => first_level.ccw_extreme(i),
                Turn::Cw => first_level.cw_extreme(i),
            };
            let Some(first) = first else { continue };
            let cand = match self.extend(i, t, first, self.level(t - tp), turn) {
                Some(c) => c,
                None => continue,
            };
            let reach = match turn {
                Turn::Ccw => cand.ccw_reach(),
                Turn::Cw => cand.cw_reach(),
            };
            if best.is_none() || reach > best_reach {
                best_reach = reach;
                best = Some(cand);
            }
            if best_reach == n {
                break;
            }
        }
        best
    }

    fn extend(
        &self,
        i: usize,
        t: usize,
        first: &GreedyCandidate,
        second_level: &GreedyLevel,
        turn: Turn,
    ) -> Option<GreedyCandidate> {
        let n = self.instance.len();
        let full = |witnesses| GreedyCandidate {
            sub: CyclicSublist::full(n),
            witnesses,
            owner: i,
            level: t,
        };
        let next = match turn {
            Turn::Ccw => first.sub.ccw_endpoint().map(|z1| (z1 + 1) % n),
            Turn::Cw => first.sub.cw_endpoint().map(|z1| (z1 + n - 1) % n),
        };
        let Some(next) = next else {
            return Some(full(first.witnesses.clone()));
        };
        let hit = match turn {
            Turn::Ccw => second_level.global.query_ccw(next),
            Turn::Cw => second_level.global.query_cw(next),
        }?;
        let second = second_level.global(hit.id);
        let witnesses = merge_witnesses(&first.witnesses, &second.witnesses);
        let tail = match turn {
            Turn::Ccw => {
                second
                    .sub
                    .ccw_endpoint()
                    .map(|z2| match self.neighbors.a(i, (z2 + 1) % n) {
                        NeighborAnswer::Index(a) => {
                            CyclicSublist::between(z2, a, Openness::OpenOpen, n)
                        }
                        NeighborAnswer::IntersectsAll => CyclicSublist::full(n),
                    })
            }
            Turn::Cw => {
                second
                    .sub
                    .cw_endpoint()
                    .map(|z2| match self.neighbors.b(i, (z2 + n - 1) % n) {
                        NeighborAnswer::Index(b) => {
                            CyclicSublist::between(b, z2, Openness::OpenOpen, n)
                        }
                        NeighborAnswer::IntersectsAll => CyclicSublist::full(n),
                    })
            }
        };
        let Some(tail) = tail else {
            return Some(full(witnesses));
        };
        let sub = union_extend(n, &[self.runs[i], first.sub, second.sub, tail])
            .expect("directional parts chain through p_i");
        Some(GreedyCandidate {
            sub,
            witnesses,
            owner: i,
            level: t,
        })
    }

    /// One candidate per `t' ∈ [2, t-1]`, joining the farthest-ccw entry of
    /// `L_{t'}(i)` with the farthest-cw entry of `L_{t+1-t'}(i)`.
    pub fn greedy_bidirectional_step(&self, i: usize, t: usize) -> Vec<GreedyCandidate> {
        self.assert_ready(t);
        let n = self.instance.len();
        let mut out = Vec::new();
        for tp in 2..t {
            let (Some(lx), Some(ly)) = (
                self.level(tp).ccw_extreme(i),
                self.level(t + 1 - tp).cw_extreme(i),
            ) else {
                continue;
            };
            let sub =
                union_extend(n, &[self.runs[i], lx.sub, ly.sub]).expect("both parts contain p_i");
            out.push(GreedyCandidate {
                sub,
                witnesses: merge_witnesses(&lx.witnesses, &ly.witnesses),
                owner: i,
                level: t,
            });
        }
        out
    }

    /// Builds and freezes the next level.
    pub fn advance(&mut self) -> &GreedyLevel {
        let t = self.levels.len() + 1;
        let n = self.instance.len();
        let buckets = (0..n)
            .map(|i| {
                let mut bucket = Vec::with_capacity(t);
                bucket.extend(self.greedy_ccw_step(i, t));
                bucket.extend(self.greedy_cw_step(i, t));
                bucket.extend(self.greedy_bidirectional_step(i, t));
                bucket
            })
            .collect();
        let table = GreedyLevel::freeze(t, n, buckets, &self.config);
        self.check_level(&table);
        self.levels.push(table);
        self.levels.last().unwrap()
    }

    fn check_level(&self, table: &GreedyLevel) {
        if !self.config.check_invariants {
            return;
        }
        let t = table.level;
        for (i, range) in table.buckets.iter().enumerate() {
            let bound = 2 + t.saturating_sub(2);
            assert!(
                range.len() <= bound,
                "bucket {i} at level {t} holds {} > {bound}",
                range.len()
            );
        }
        for c in &table.candidates {
            if let Err(msg) = c.check(self.instance) {
                panic!(
                    "level {t} candidate for owner {} violates invariants: {msg}",
                    c.owner
                );
            }
        }
        assert!(
            table.extremes_consistent(),
            "cached extremes of level {t} disagree with a scan"
        );
    }

    /// Full candidate of the newest level with the fewest witnesses.
    fn full_in_last(&self) -> Option<&GreedyCandidate> {
        let last = self.levels.last()?;
        let mut best: Option<&GreedyCandidate> = None;
        for c in last.candidates.iter().filter(|c| c.sub.is_full()) {
            if best.is_none_or(|b| c.witnesses.len() < b.witnesses.len()) {
                best = Some(c);
            }
        }
        best
    }

    /// Advances until a level contains the full circle or `k_cap` levels
    /// are built.
    pub fn solve(&mut self, k_cap: Option<usize>) -> Result<Solution, SolveError> {
        let n = self.instance.len();
        if k_cap == Some(0) {
            return Err(SolveError::InvalidK { k: 0, n });
        }
        let cap = k_cap.unwrap_or(n).min(n);
        loop {
            if let Some(c) = self.full_in_last() {
                return Ok(Solution::from_canonical(
                    self.instance,
                    Mode::Unweighted,
                    &c.witnesses,
                ));
            }
            if self.levels.len() >= cap {
                return Err(SolveError::Infeasible {
                    k: k_cap.unwrap_or(n),
                });
            }
            self.advance();
        }
    }
}

/// Smallest dominating set, or `Infeasible` when more than `k_cap` centers
/// are needed.
pub fn solve_unweighted(instance: &Instance, k_cap: Option<usize>) -> Result<Solution, SolveError> {
    solve_unweighted_with(instance, k_cap, SolverConfig::default())
}

pub fn solve_unweighted_with(
    instance: &Instance,
    k_cap: Option<usize>,
    config: SolverConfig,
) -> Result<Solution, SolveError> {
    GreedySolver::new(instance, config).solve(k_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::WeightedDisk;

    fn t4() -> Instance {
        Instance::canonicalize(
            &[
                WeightedDisk::unit(0.0, 0.0, 0.6),
                WeightedDisk::unit(1.0, 0.0, 0.6),
                WeightedDisk::unit(1.0, 1.0, 0.6),
                WeightedDisk::unit(0.0, 1.0, 0.6),
            ],
            Mode::Unweighted,
        )
        .unwrap()
    }

    fn checked() -> SolverConfig {
        SolverConfig {
            check_invariants: true,
            ..SolverConfig::default()
        }
    }

    #[test]
    fn ccw_step_t4() {
        let inst = t4();
        for config in [checked(), SolverConfig::reference()] {
            let s = GreedySolver::new(&inst, config);
            // p_3's run {2, 3, 0} reaches farthest counterclockwise from p_2.
            let c = s.greedy_ccw_step(0, 2).unwrap();
            assert!(c.sub.is_full());
            assert_eq!(c.witnesses, vec![0, 3]);
            let c = s.greedy_cw_step(0, 2).unwrap();
            assert!(c.sub.is_full());
            assert_eq!(c.witnesses, vec![0, 1]);
            assert!(s.greedy_bidirectional_step(0, 2).is_empty());
        }
    }

    #[test]
    fn t4_size_two() {
        let sol = solve_unweighted_with(&t4(), None, checked()).unwrap();
        assert_eq!(sol.size, 2);
        assert!(sol.verified);
        assert_eq!(
            solve_unweighted(&t4(), Some(1)),
            Err(SolveError::Infeasible { k: 1 })
        );
        assert_eq!(
            solve_unweighted(&t4(), Some(0)),
            Err(SolveError::InvalidK { k: 0, n: 4 })
        );
    }

    #[test]
    fn big_disk_alone() {
        let disks: Vec<WeightedDisk> = (0..5)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / 5.0;
                WeightedDisk::unit(
                    10.0 * t.cos(),
                    10.0 * t.sin(),
                    if k == 2 { 100.0 } else { 0.5 },
                )
            })
            .collect();
        let inst = Instance::canonicalize(&disks, Mode::Unweighted).unwrap();
        let sol = solve_unweighted_with(&inst, None, checked()).unwrap();
        assert_eq!(sol.centers, vec![2]);
    }

    #[test]
    fn isolated_disks_need_everyone() {
        let disks: Vec<WeightedDisk> = (0..6)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / 6.0;
                WeightedDisk::unit(t.cos(), t.sin(), 0.01)
            })
            .collect();
        let inst = Instance::canonicalize(&disks, Mode::Unweighted).unwrap();
        let mut s = GreedySolver::new(&inst, checked());
        let sol = s.solve(None).unwrap();
        assert_eq!(sol.size, 6);
        assert_eq!(s.levels().len(), 6);
    }
}
