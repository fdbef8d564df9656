//! Minimum-weight dominating sets of bounded size.
//!
//! Level `t` holds, for every owner `p_i`, a bucket `L_t(i)` of candidate
//! sublists `L` with a value `w'(L)` and a witness set `S_L` such that
//! `w(S_L) <= w'(L)`, `S_L` dominates `L`, `p_i ∈ S_L` and `|S_L| <= t`.
//! Level 1 is the dominated run of each point; level `t` combines candidates
//! of lower levels with counterclockwise, clockwise and bidirectional
//! processing. A full-circle candidate of minimum value after `k` levels is a
//! minimum-weight dominating set of size at most `k`.

use std::collections::HashMap;
use std::ops::Range;

use crate::geometry::{
    offset_ccw, offset_cw, union_extend, CyclicSublist, Instance, Mode, Openness,
};
use crate::neighbor_index::{NeighborAnswer, NeighborIndex, NeighborStrategy};
use crate::oracle;
use crate::solution::{Solution, SolveError};
use crate::sublist_queries::{MinEnclosingIndex, QueryStrategy, ValuedSublist};

/// Knobs shared by both solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub neighbors: NeighborStrategy,
    pub queries: QueryStrategy,
    /// Drop bucket entries that repeat a sublist with no better value.
    pub prune: bool,
    /// Verify every inserted candidate against the algorithm invariants.
    pub check_invariants: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            neighbors: NeighborStrategy::Tree,
            queries: QueryStrategy::Indexed,
            prune: true,
            check_invariants: cfg!(debug_assertions),
        }
    }
}

impl SolverConfig {
    /// Naive reference paths everywhere, no pruning, invariants checked.
    pub fn reference() -> Self {
        SolverConfig {
            neighbors: NeighborStrategy::Naive,
            queries: QueryStrategy::Naive,
            prune: false,
            check_invariants: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub sub: CyclicSublist,
    /// `w'(L)`, an upper bound on the witnesses' total weight.
    pub value: f64,
    /// Canonical indices, ascending.
    pub witnesses: Vec<usize>,
    pub owner: usize,
    pub level: usize,
}

impl Candidate {
    /// Checks the four algorithm invariants, returning a description of the
    /// first one that fails.
    pub fn check(&self, instance: &Instance) -> Result<(), String> {
        let weight = instance.total_weight(self.witnesses.iter().copied());
        let slack = 1e-9 * self.value.abs().max(1.0);
        if weight > self.value + slack {
            return Err(format!(
                "witness weight {weight} exceeds value {}",
                self.value
            ));
        }
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
        if self.witnesses.len() > self.level {
            return Err(format!(
                "{} witnesses at level {}",
                self.witnesses.len(),
                self.level
            ));
        }
        Ok(())
    }
}

pub(crate) fn merge_witnesses(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() || y < b.len() {
        match (a.get(x), b.get(y)) {
            (Some(&p), Some(&q)) if p == q => {
                out.push(p);
                x += 1;
                y += 1;
            }
            (Some(&p), Some(&q)) if p < q => {
                out.push(p);
                x += 1;
            }
            (Some(&p), None) => {
                out.push(p);
                x += 1;
            }
            (_, Some(&q)) => {
                out.push(q);
                y += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// A frozen level: buckets `L_t(i)`, their indexes, the global index over
/// `L_t`, and memoized enclosing queries used by later levels.
pub struct LevelTable {
    level: usize,
    n: usize,
    candidates: Vec<Candidate>,
    buckets: Vec<Range<usize>>,
    bucket_index: Vec<MinEnclosingIndex>,
    global_index: MinEnclosingIndex,
    /// `[i * n + d]`: bucket `i` minimum containing `P[i, i + d]`.
    ccw_prefix: Vec<Option<u32>>,
    /// `[i * n + d]`: bucket `i` minimum containing `P[i - d, i]`.
    cw_prefix: Vec<Option<u32>>,
    /// `[a * n + d]`: global minimum containing `P[a, a + d]`.
    span: Vec<Option<u32>>,
}

impl LevelTable {
    fn freeze(level: usize, n: usize, buckets: Vec<Vec<Candidate>>, config: &SolverConfig) -> Self {
        let mut candidates: Vec<Candidate> = Vec::new();
        let mut ranges = Vec::with_capacity(n);
        for bucket in buckets {
            let begin = candidates.len();
            if config.prune {
                let mut seen: HashMap<CyclicSublist, usize> = HashMap::new();
                for c in bucket {
                    match seen.get(&c.sub) {
                        Some(&pos) => {
                            if c.value < candidates[pos].value {
                                candidates[pos] = c;
                            }
                        }
                        None => {
                            seen.insert(c.sub, candidates.len());
                            candidates.push(c);
                        }
                    }
                }
            } else {
                candidates.extend(bucket);
            }
            ranges.push(begin..candidates.len());
        }

        let valued = |range: Range<usize>| -> Vec<ValuedSublist> {
            range
                .map(|id| ValuedSublist {
                    sub: candidates[id].sub,
                    value: candidates[id].value,
                    id: id as u32,
                })
                .collect()
        };
        let bucket_index: Vec<MinEnclosingIndex> = ranges
            .iter()
            .map(|r| MinEnclosingIndex::build_with(valued(r.clone()), n, config.queries))
            .collect();
        let global_index =
            MinEnclosingIndex::build_with(valued(0..candidates.len()), n, config.queries);

        let mut ccw_prefix = vec![None; n * n];
        let mut cw_prefix = vec![None; n * n];
        let mut span = vec![None; n * n];
        for i in 0..n {
            for d in 0..n {
                let q = CyclicSublist::from_start_len(i, d + 1, n);
                match bucket_index[i].query(&q) {
                    Some(it) => ccw_prefix[i * n + d] = Some(it.id),
                    None => break,
                }
            }
            for d in 0..n {
                let q = CyclicSublist::from_start_len((i + n - d) % n, d + 1, n);
                match bucket_index[i].query(&q) {
                    Some(it) => cw_prefix[i * n + d] = Some(it.id),
                    None => break,
                }
            }
            for d in 0..n {
                let q = CyclicSublist::from_start_len(i, d + 1, n);
                match global_index.query(&q) {
                    Some(it) => span[i * n + d] = Some(it.id),
                    None => break,
                }
            }
        }

        LevelTable {
            level,
            n,
            candidates,
            buckets: ranges,
            bucket_index,
            global_index,
            ccw_prefix,
            cw_prefix,
            span,
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// All candidates of `L_t`, grouped by owner.
    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn candidate(&self, id: u32) -> &Candidate {
        &self.candidates[id as usize]
    }

    pub fn bucket(&self, i: usize) -> &[Candidate] {
        &self.candidates[self.buckets[i].clone()]
    }

    pub fn bucket_index(&self, i: usize) -> &MinEnclosingIndex {
        &self.bucket_index[i]
    }

    pub fn global_index(&self) -> &MinEnclosingIndex {
        &self.global_index
    }

    fn ccw_enclosing(&self, i: usize, d: usize) -> Option<&Candidate> {
        self.ccw_prefix[i * self.n + d].map(|id| self.candidate(id))
    }

    fn cw_enclosing(&self, i: usize, d: usize) -> Option<&Candidate> {
        self.cw_prefix[i * self.n + d].map(|id| self.candidate(id))
    }

    fn span_enclosing(&self, a: usize, d: usize) -> Option<&Candidate> {
        self.span[a * self.n + d].map(|id| self.candidate(id))
    }
}

/// `L_1(i) = { P(b_i^i, a_i^i) }` with value `w_i` and witnesses `{p_i}`.
pub fn init_level_one(
    instance: &Instance,
    neighbors: &NeighborIndex<'_>,
    config: &SolverConfig,
) -> LevelTable {
    let n = instance.len();
    let buckets = (0..n)
        .map(|i| {
            vec![Candidate {
                sub: neighbors.dominated_run(i),
                value: instance.weight(i),
                witnesses: vec![i],
                owner: i,
                level: 1,
            }]
        })
        .collect();
    LevelTable::freeze(1, n, buckets, config)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DpStats {
    pub candidates_per_level: Vec<usize>,
    pub invariant_checks: usize,
}

/// The dynamic program's state: frozen levels `1..=t`.
pub struct WeightedDp<'a> {
    instance: &'a Instance,
    neighbors: NeighborIndex<'a>,
    config: SolverConfig,
    runs: Vec<CyclicSublist>,
    levels: Vec<LevelTable>,
    stats: DpStats,
}

struct Pick<'c> {
    value: f64,
    first: &'c Candidate,
    second: Option<&'c Candidate>,
}

impl<'a> WeightedDp<'a> {
    pub fn new(instance: &'a Instance, config: SolverConfig) -> Self {
        let neighbors = NeighborIndex::build(instance, config.neighbors);
        let runs = (0..instance.len())
            .map(|i| neighbors.dominated_run(i))
            .collect();
        let level_one = init_level_one(instance, &neighbors, &config);
        let mut dp = WeightedDp {
            instance,
            neighbors,
            config,
            runs,
            levels: Vec::new(),
            stats: DpStats::default(),
        };
        dp.check_level(&level_one);
        dp.stats
            .candidates_per_level
            .push(level_one.candidates.len());
        dp.levels.push(level_one);
        dp
    }

    pub fn levels(&self) -> &[LevelTable] {
        &self.levels
    }

    pub fn stats(&self) -> &DpStats {
        &self.stats
    }

    pub fn dominated_run(&self, i: usize) -> CyclicSublist {
        self.runs[i]
    }

    fn n(&self) -> usize {
        self.instance.len()
    }

    fn level(&self, t: usize) -> &LevelTable {
        &self.levels[t - 1]
    }

    fn assert_ready(&self, t: usize) {
        assert!(t >= 2, "processing needs t >= 2");
        assert!(
            t - 1 <= self.levels.len(),
            "levels 1..{} are not all frozen",
            t - 1
        );
    }

    /// Best candidate for owner `i` obtained by extending counterclockwise
    /// to `p_j`: for every `t' < t` and `p_z ∈ P[i, j]`, combine the minimum
    /// `L_1 ∈ L_{t'}(i)` containing `P[i, z]` with the minimum
    /// `L_2 ∈ L_{t-t'}` containing `P[z_1 + 1, j]` and close with the tail
    /// `P(z_2, a_i^{z_2 + 1})`.
    pub fn ccw_processing(&self, i: usize, j: usize, t: usize) -> Option<Candidate> {
        self.assert_ready(t);
        let n = self.n();
        let reach = offset_ccw(i, j, n);
        let mut best: Option<Pick<'_>> = None;
        for tp in 1..t {
            let (first_level, second_level) = (self.level(tp), self.level(t - tp));
            for dz in 0..=reach {
                let Some(first) = first_level.ccw_enclosing(i, dz) else {
                    break;
                };
                let pick = match first.sub.ccw_endpoint() {
                    None => Pick {
                        value: first.value,
                        first,
                        second: None,
                    },
                    Some(z1) => {
                        let next = (z1 + 1) % n;
                        let Some(second) =
                            second_level.span_enclosing(next, offset_ccw(next, j, n))
                        else {
                            continue;
                        };
                        Pick {
                            value: first.value + second.value,
                            first,
                            second: Some(second),
                        }
                    }
                };
                if best.as_ref().is_none_or(|b| pick.value < b.value) {
                    best = Some(pick);
                }
            }
        }
        best.map(|pick| self.combine_directional(i, t, pick, Turn::Ccw))
    }

    /// Mirror of [`WeightedDp::ccw_processing`] extending clockwise to `p_j`.
    pub fn cw_processing(&self, i: usize, j: usize, t: usize) -> Option<Candidate> {
        self.assert_ready(t);
        let n = self.n();
        let reach = offset_cw(i, j, n);
        let mut best: Option<Pick<'_>> = None;
        for tp in 1..t {
            let (first_level, second_level) = (self.level(tp), self.level(t - tp));
            for dz in 0..=reach {
                let Some(first) = first_level.cw_enclosing(i, dz) else {
                    break;
                };
                let pick = match first.sub.cw_endpoint() {
                    None => Pick {
                        value: first.value,
                        first,
                        second: None,
                    },
                    Some(z1) => {
                        let prev = (z1 + n - 1) % n;
                        let Some(second) = second_level.span_enclosing(j, offset_ccw(j, prev, n))
                        else {
                            continue;
                        };
                        Pick {
                            value: first.value + second.value,
                            first,
                            second: Some(second),
                        }
                    }
                };
                if best.as_ref().is_none_or(|b| pick.value < b.value) {
                    best = Some(pick);
                }
            }
        }
        best.map(|pick| self.combine_directional(i, t, pick, Turn::Cw))
    }

    fn combine_directional(&self, i: usize, t: usize, pick: Pick<'_>, turn: Turn) -> Candidate {
        let n = self.n();
        let (sub, witnesses) = match pick.second {
            None => (CyclicSublist::full(n), pick.first.witnesses.clone()),
            Some(second) => {
                let witnesses = merge_witnesses(&pick.first.witnesses, &second.witnesses);
                let tail = match turn {
                    Turn::Ccw => second.sub.ccw_endpoint().map(|z2| {
                        match self.neighbors.a(i, (z2 + 1) % n) {
                            NeighborAnswer::Index(a) => {
                                CyclicSublist::between(z2, a, Openness::OpenOpen, n)
                            }
                            NeighborAnswer::IntersectsAll => CyclicSublist::full(n),
                        }
                    }),
                    Turn::Cw => second.sub.cw_endpoint().map(|z2| {
                        match self.neighbors.b(i, (z2 + n - 1) % n) {
                            NeighborAnswer::Index(b) => {
                                CyclicSublist::between(b, z2, Openness::OpenOpen, n)
                            }
                            NeighborAnswer::IntersectsAll => CyclicSublist::full(n),
                        }
                    }),
                };
                let tail = tail.unwrap_or_else(|| CyclicSublist::full(n));
                let parts = [self.runs[i], pick.first.sub, second.sub, tail];
                let sub = union_extend(n, &parts).expect("directional parts chain through p_i");
                (sub, witnesses)
            }
        };
        Candidate {
            sub,
            value: pick.value,
            witnesses,
            owner: i,
            level: t,
        }
    }

    /// Best candidate stitching `L_x ∈ L_{t'}(i)` containing `P[i, x]` and
    /// `L_y ∈ L_{t+1-t'}(i)` containing `P[y, i]` over `t' ∈ [2, t-1]`, with
    /// value `w'(L_x) + w'(L_y) - w_i`.
    pub fn bidirectional_processing(
        &self,
        i: usize,
        x: usize,
        y: usize,
        t: usize,
    ) -> Option<Candidate> {
        self.assert_ready(t);
        let n = self.n();
        let (dx, dy) = (offset_ccw(i, x, n), offset_cw(i, y, n));
        let mut best: Option<Pick<'_>> = None;
        for tp in 2..t {
            let Some(lx) = self.level(tp).ccw_enclosing(i, dx) else {
                continue;
            };
            let Some(ly) = self.level(t + 1 - tp).cw_enclosing(i, dy) else {
                continue;
            };
            let value = lx.value + ly.value - self.instance.weight(i);
            if best.as_ref().is_none_or(|b| value < b.value) {
                best = Some(Pick {
                    value,
                    first: lx,
                    second: Some(ly),
                });
            }
        }
        best.map(|pick| {
            let ly = pick.second.unwrap();
            let parts = [self.runs[i], pick.first.sub, ly.sub];
            Candidate {
                sub: union_extend(n, &parts).expect("bidirectional parts share p_i"),
                value: pick.value,
                witnesses: merge_witnesses(&pick.first.witnesses, &ly.witnesses),
                owner: i,
                level: t,
            }
        })
    }

    /// Builds and freezes the next level.
    pub fn advance(&mut self) -> &LevelTable {
        let t = self.levels.len() + 1;
        let n = self.n();
        let mut buckets = Vec::with_capacity(n);
        for i in 0..n {
            let mut bucket = Vec::new();
            for j in 0..n {
                bucket.extend(self.ccw_processing(i, j, t));
                bucket.extend(self.cw_processing(i, j, t));
            }
            if t >= 3 {
                let mut seen_pairs = std::collections::HashSet::new();
                for x in (0..n).filter(|&x| x != i) {
                    for y in (0..n).filter(|&y| y != i) {
                        if self.config.prune {
                            let key = self.bidirectional_key(i, x, y, t);
                            if !seen_pairs.insert(key) {
                                continue;
                            }
                        }
                        bucket.extend(self.bidirectional_processing(i, x, y, t));
                    }
                }
            }
            buckets.push(bucket);
        }
        let table = LevelTable::freeze(t, n, buckets, &self.config);
        self.check_level(&table);
        self.stats.candidates_per_level.push(table.candidates.len());
        self.levels.push(table);
        self.levels.last().unwrap()
    }

    /// The memoized query results that fully determine a bidirectional
    /// candidate for `(x, y)`.
    fn bidirectional_key(
        &self,
        i: usize,
        x: usize,
        y: usize,
        t: usize,
    ) -> Vec<(Option<u32>, Option<u32>)> {
        let n = self.n();
        let (dx, dy) = (offset_ccw(i, x, n), offset_cw(i, y, n));
        (2..t)
            .map(|tp| {
                (
                    self.level(tp).ccw_prefix[i * n + dx],
                    self.level(t + 1 - tp).cw_prefix[i * n + dy],
                )
            })
            .collect()
    }

    fn check_level(&mut self, table: &LevelTable) {
        if !self.config.check_invariants {
            return;
        }
        for c in &table.candidates {
            if let Err(msg) = c.check(self.instance) {
                panic!(
                    "level {} candidate for owner {} violates invariants: {msg}",
                    c.level, c.owner
                );
            }
        }
        self.stats.invariant_checks += table.candidates.len();
    }

    /// Minimum-value full-circle candidate among levels `1..=k`; ties go to
    /// the lower level, then the earlier candidate.
    pub fn best_full(&self, k: usize) -> Option<&Candidate> {
        let mut best: Option<&Candidate> = None;
        for table in self.levels.iter().take(k) {
            for c in table.candidates.iter().filter(|c| c.sub.is_full()) {
                if best.is_none_or(|b| c.value < b.value) {
                    best = Some(c);
                }
            }
        }
        best
    }

    /// Runs levels up to `k` and extracts the optimum.
    pub fn solve(&mut self, k: usize) -> Result<Solution, SolveError> {
        let n = self.n();
        if k < 1 || k > n {
            return Err(SolveError::InvalidK { k, n });
        }
        while self.levels.len() < k {
            self.advance();
        }
        let best = self.best_full(k).ok_or(SolveError::Infeasible { k })?;
        Ok(Solution::from_canonical(
            self.instance,
            Mode::Weighted,
            &best.witnesses,
        ))
    }
}

#[derive(Clone, Copy)]
enum Turn {
    Ccw,
    Cw,
}

/// Minimum-weight dominating set of size at most `k`.
pub fn solve_weighted(instance: &Instance, k: usize) -> Result<Solution, SolveError> {
    solve_weighted_with(instance, k, SolverConfig::default())
}

pub fn solve_weighted_with(
    instance: &Instance,
    k: usize,
    config: SolverConfig,
) -> Result<Solution, SolveError> {
    let n = instance.len();
    if k < 1 || k > n {
        return Err(SolveError::InvalidK { k, n });
    }
    WeightedDp::new(instance, config).solve(k)
}

/// Minimum-weight dominating set without a size bound.
pub fn solve_weighted_unbounded(instance: &Instance) -> Solution {
    solve_weighted(instance, instance.len()).expect("the whole point set dominates itself")
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
            Mode::Weighted,
        )
        .unwrap()
    }

    fn big_disk() -> (Instance, usize) {
        let mut disks: Vec<WeightedDisk> = (0..5)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / 5.0;
                WeightedDisk::unit(10.0 * t.cos(), 10.0 * t.sin(), 0.5)
            })
            .collect();
        disks[2].radius = 100.0;
        disks[2].weight = 10.0;
        let inst = Instance::canonicalize(&disks, Mode::Weighted).unwrap();
        let big = (0..inst.len())
            .find(|&i| inst.disk(i).radius == 100.0)
            .unwrap();
        (inst, big)
    }

    fn configs() -> [SolverConfig; 2] {
        [
            SolverConfig {
                check_invariants: true,
                ..SolverConfig::default()
            },
            SolverConfig::reference(),
        ]
    }

    #[test]
    fn merge_is_sorted_union() {
        assert_eq!(merge_witnesses(&[1, 4, 6], &[0, 4, 9]), vec![0, 1, 4, 6, 9]);
        assert_eq!(merge_witnesses(&[], &[2]), vec![2]);
    }

    #[test]
    fn level_one_t4() {
        let inst = t4();
        for config in configs() {
            let dp = WeightedDp::new(&inst, config);
            let bucket = dp.levels()[0].bucket(0);
            assert_eq!(bucket.len(), 1);
            assert_eq!(bucket[0].sub.indices().collect::<Vec<_>>(), vec![3, 0, 1]);
            assert_eq!(bucket[0].value, 1.0);
            assert_eq!(bucket[0].witnesses, vec![0]);
        }
    }

    #[test]
    fn ccw_and_cw_processing_t4() {
        let inst = t4();
        for config in configs() {
            let dp = WeightedDp::new(&inst, config);
            // Every pair of corners dominates the square; the minimum
            // enclosing query at p_2 prefers the lowest id, p_1's run.
            let c = dp.ccw_processing(0, 2, 2).unwrap();
            assert!(c.sub.is_full());
            assert_eq!(c.value, 2.0);
            assert_eq!(c.witnesses, vec![0, 1]);
            let c = dp.cw_processing(0, 2, 2).unwrap();
            assert!(c.sub.is_full());
            assert_eq!(c.value, 2.0);
            assert_eq!(c.witnesses, vec![0, 1]);
            assert_eq!(dp.bidirectional_processing(0, 1, 3, 2), None);
        }
    }

    #[test]
    fn t4_solutions() {
        let inst = t4();
        for config in configs() {
            let sol = solve_weighted_with(&inst, 2, config).unwrap();
            assert_eq!(sol.weight, 2.0);
            assert_eq!(sol.size, 2);
            assert!(sol.verified);
            assert_eq!(
                solve_weighted_with(&inst, 1, config),
                Err(SolveError::Infeasible { k: 1 })
            );
        }
        assert_eq!(solve_weighted_unbounded(&inst).weight, 2.0);
        assert_eq!(
            solve_weighted(&inst, 0),
            Err(SolveError::InvalidK { k: 0, n: 4 })
        );
        assert_eq!(
            solve_weighted(&inst, 5),
            Err(SolveError::InvalidK { k: 5, n: 4 })
        );
    }

    #[test]
    fn big_disk_short_circuits() {
        let (inst, big) = big_disk();
        let dp = WeightedDp::new(&inst, SolverConfig::reference());
        assert!(dp.levels()[0].bucket(big)[0].sub.is_full());
        let c = dp.ccw_processing(big, (big + 2) % inst.len(), 2).unwrap();
        assert!(c.sub.is_full());
        assert_eq!(c.value, 10.0);
        let sol = solve_weighted(&inst, 5).unwrap();
        assert!(sol.verified);
    }

    #[test]
    fn single_disk() {
        let inst = Instance::canonicalize(&[WeightedDisk::new(0.0, 0.0, 0.0, 3.5)], Mode::Weighted)
            .unwrap();
        let sol = solve_weighted_unbounded(&inst);
        assert_eq!(sol.centers, vec![0]);
        assert_eq!(sol.weight, 3.5);
    }

    #[test]
    fn two_disjoint_disks() {
        let inst = Instance::canonicalize(
            &[
                WeightedDisk::new(0.0, 0.0, 0.1, 2.0),
                WeightedDisk::new(1.0, 0.0, 0.1, 3.0),
            ],
            Mode::Weighted,
        )
        .unwrap();
        assert_eq!(
            solve_weighted(&inst, 1),
            Err(SolveError::Infeasible { k: 1 })
        );
        let sol = solve_weighted(&inst, 2).unwrap();
        assert_eq!(sol.weight, 5.0);
        assert_eq!(sol.size, 2);
    }
}
