//! Query structures over frozen collections of valued cyclic sublists.
//!
//! Both structures unroll a non-full cyclic run `[s, e]` (with `e` possibly
//! `>= n`) into the two linear intervals `[s, e]` and `[s - n, e - n]`. A
//! non-full query run `[qs, qe]` with `qs < n` is contained in the cyclic run
//! exactly when one of the copies satisfies `start <= qs && end >= qe`, and a
//! point `j < n` is covered exactly when one copy stabs it. Full runs are kept
//! aside because they contain everything.

use std::cmp::Ordering;

use crate::geometry::CyclicSublist;

/// A stored sublist with its value and a caller-chosen handle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ValuedSublist {
    pub sub: CyclicSublist,
    pub value: f64,
    pub id: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum QueryStrategy {
    Naive,
    #[default]
    Indexed,
}

/// `(value, id)` ordering: the preferred item compares `Less`.
fn value_order(a: &ValuedSublist, b: &ValuedSublist) -> Ordering {
    a.value.total_cmp(&b.value).then(a.id.cmp(&b.id))
}

fn better_of(best: Option<ValuedSublist>, cand: ValuedSublist) -> Option<ValuedSublist> {
    match best {
        Some(b) if value_order(&b, &cand) != Ordering::Greater => Some(b),
        _ => Some(cand),
    }
}

/// Linear copies `(start, end)` of a non-full, nonempty run.
fn unroll(sub: &CyclicSublist) -> [(i64, i64); 2] {
    let n = sub.n() as i64;
    let s = sub.start() as i64;
    let e = s + sub.len() as i64 - 1;
    [(s, e), (s - n, e - n)]
}

fn query_bounds(q: &CyclicSublist) -> (i64, i64) {
    let s = q.start() as i64;
    (s, s + q.len() as i64 - 1)
}

/// Minimum-value enclosing sublist queries.
#[derive(Clone, Debug)]
pub struct MinEnclosingIndex {
    n: usize,
    strategy: QueryStrategy,
    items: Vec<ValuedSublist>,
    best_full: Option<ValuedSublist>,
    best_any: Option<ValuedSublist>,
    /// Unrolled copies sorted by start.
    starts: Vec<i64>,
    /// Fenwick nodes over `starts` order; node `k` (1-based) covers sorted
    /// positions `(k - lowbit(k), k]`, stored by descending end with running
    /// best `(value, id)`.
    fenwick: Vec<Vec<(i64, ValuedSublist)>>,
}

impl MinEnclosingIndex {
    pub fn build(items: Vec<ValuedSublist>, n: usize) -> Self {
        Self::build_with(items, n, QueryStrategy::Indexed)
    }

    pub fn build_with(items: Vec<ValuedSublist>, n: usize, strategy: QueryStrategy) -> Self {
        let mut index = MinEnclosingIndex {
            n,
            strategy,
            items: Vec::new(),
            best_full: None,
            best_any: None,
            starts: Vec::new(),
            fenwick: Vec::new(),
        };
        for it in &items {
            debug_assert!(!it.sub.is_empty(), "stored sublists must be nonempty");
            debug_assert_eq!(it.sub.n(), n);
            index.best_any = better_of(index.best_any, *it);
            if it.sub.is_full() {
                index.best_full = better_of(index.best_full, *it);
            }
        }
        if strategy == QueryStrategy::Indexed {
            index.build_tree(&items);
        }
        index.items = items;
        index
    }

    fn build_tree(&mut self, items: &[ValuedSublist]) {
        // Items with the same run are interchangeable for every query; keep
        // only the preferred one.
        let mut partial: Vec<ValuedSublist> = items
            .iter()
            .copied()
            .filter(|it| !it.sub.is_full())
            .collect();
        partial.sort_by(|a, b| a.sub.cmp(&b.sub).then(value_order(a, b)));
        partial.dedup_by(|later, kept| later.sub == kept.sub);

        let mut copies: Vec<(i64, i64, ValuedSublist)> = partial
            .iter()
            .flat_map(|it| unroll(&it.sub).map(|(s, e)| (s, e, *it)))
            .collect();
        copies.sort_by(|a, b| {
            a.0.cmp(&b.0)
                .then(b.1.cmp(&a.1))
                .then(value_order(&a.2, &b.2))
        });
        self.starts = copies.iter().map(|c| c.0).collect();

        let m = copies.len();
        let mut fenwick: Vec<Vec<(i64, ValuedSublist)>> = vec![Vec::new(); m + 1];
        for (k, node) in fenwick.iter_mut().enumerate().skip(1) {
            let lo = k - lowbit(k);
            let mut entries: Vec<(i64, ValuedSublist)> =
                copies[lo..k].iter().map(|c| (c.1, c.2)).collect();
            entries.sort_by(|a, b| b.0.cmp(&a.0).then(value_order(&a.1, &b.1)));
            for t in 1..entries.len() {
                if value_order(&entries[t - 1].1, &entries[t].1) == Ordering::Less {
                    entries[t].1 = entries[t - 1].1;
                }
            }
            *node = entries;
        }
        self.fenwick = fenwick;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn items(&self) -> &[ValuedSublist] {
        &self.items
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The minimum `(value, id)` item whose run contains `q`.
    pub fn query(&self, q: &CyclicSublist) -> Option<ValuedSublist> {
        match self.strategy {
            QueryStrategy::Naive => self.query_naive(q),
            QueryStrategy::Indexed => self.query_indexed(q),
        }
    }

    pub fn query_naive(&self, q: &CyclicSublist) -> Option<ValuedSublist> {
        self.items
            .iter()
            .filter(|it| it.sub.contains_sub(q))
            .min_by(|a, b| value_order(a, b))
            .copied()
    }

    fn query_indexed(&self, q: &CyclicSublist) -> Option<ValuedSublist> {
        if q.is_empty() {
            return self.best_any;
        }
        if q.is_full() {
            return self.best_full;
        }
        let (qs, qe) = query_bounds(q);
        let mut best = self.best_full;
        let mut k = self.starts.partition_point(|&s| s <= qs);
        while k > 0 {
            let node = &self.fenwick[k];
            let depth = node.partition_point(|e| e.0 >= qe);
            if depth > 0 {
                let cand = node[depth - 1].1;
                best = better_of(best, cand);
            }
            k -= lowbit(k);
        }
        best
    }
}

fn lowbit(k: usize) -> usize {
    k & k.wrapping_neg()
}

/// Counterclockwise / clockwise farthest enclosing sublist queries.
#[derive(Clone, Debug)]
pub struct FarthestEnclosingIndex {
    n: usize,
    strategy: QueryStrategy,
    items: Vec<ValuedSublist>,
    full: Option<ValuedSublist>,
    /// Copies sorted by start with the prefix-best (max end, min id).
    by_start: Vec<i64>,
    prefix_far_end: Vec<(i64, u32, usize)>,
    /// Copies sorted by end with the suffix-best (min start, min id).
    by_end: Vec<i64>,
    suffix_far_start: Vec<(i64, u32, usize)>,
}

impl FarthestEnclosingIndex {
    pub fn build(items: Vec<ValuedSublist>, n: usize) -> Self {
        Self::build_with(items, n, QueryStrategy::Indexed)
    }

    pub fn build_with(items: Vec<ValuedSublist>, n: usize, strategy: QueryStrategy) -> Self {
        let full = items
            .iter()
            .filter(|it| it.sub.is_full())
            .min_by_key(|it| it.id)
            .copied();
        let mut index = FarthestEnclosingIndex {
            n,
            strategy,
            items: Vec::new(),
            full,
            by_start: Vec::new(),
            prefix_far_end: Vec::new(),
            by_end: Vec::new(),
            suffix_far_start: Vec::new(),
        };
        if strategy == QueryStrategy::Indexed {
            // (start, end, id, item position)
            let copies: Vec<(i64, i64, u32, usize)> = items
                .iter()
                .enumerate()
                .filter(|(_, it)| !it.sub.is_full())
                .flat_map(|(pos, it)| unroll(&it.sub).map(move |(s, e)| (s, e, it.id, pos)))
                .collect();

            let mut ccw = copies.clone();
            ccw.sort_by_key(|c| c.0);
            index.by_start = ccw.iter().map(|c| c.0).collect();
            let mut best: Option<(i64, u32, usize)> = None;
            for c in &ccw {
                let cand = (c.1, c.2, c.3);
                best = Some(match best {
                    Some(b)
                        if (b.0, std::cmp::Reverse(b.1)) >= (cand.0, std::cmp::Reverse(cand.1)) =>
                    {
                        b
                    }
                    _ => cand,
                });
                index.prefix_far_end.push(best.unwrap());
            }

            let mut cw = copies;
            cw.sort_by_key(|c| c.1);
            index.by_end = cw.iter().map(|c| c.1).collect();
            let mut best: Option<(i64, u32, usize)> = None;
            let mut suffix = vec![(0, 0, 0); cw.len()];
            for (k, c) in cw.iter().enumerate().rev() {
                let cand = (c.0, c.2, c.3);
                best = Some(match best {
                    Some(b) if (b.0, b.1) <= (cand.0, cand.1) => b,
                    _ => cand,
                });
                suffix[k] = best.unwrap();
            }
            index.suffix_far_start = suffix;
        }
        index.items = items;
        index
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn items(&self) -> &[ValuedSublist] {
        &self.items
    }

    /// Stored run containing `j` whose counterclockwise endpoint is farthest
    /// from `j`; full runs win, ties go to the smallest id.
    pub fn query_ccw(&self, j: usize) -> Option<ValuedSublist> {
        match self.strategy {
            QueryStrategy::Naive => self.query_naive(j, |s, j| s.ccw_reach_from(j)),
            QueryStrategy::Indexed => {
                if self.full.is_some() {
                    return self.full;
                }
                let k = self.by_start.partition_point(|&s| s <= j as i64);
                if k == 0 {
                    return None;
                }
                let (end, _, pos) = self.prefix_far_end[k - 1];
                (end >= j as i64).then(|| self.items[pos])
            }
        }
    }

    /// Clockwise counterpart of [`FarthestEnclosingIndex::query_ccw`].
    pub fn query_cw(&self, j: usize) -> Option<ValuedSublist> {
        match self.strategy {
            QueryStrategy::Naive => self.query_naive(j, |s, j| s.cw_reach_from(j)),
            QueryStrategy::Indexed => {
                if self.full.is_some() {
                    return self.full;
                }
                let k = self.by_end.partition_point(|&e| e < j as i64);
                if k == self.by_end.len() {
                    return None;
                }
                let (start, _, pos) = self.suffix_far_start[k];
                (start <= j as i64).then(|| self.items[pos])
            }
        }
    }

    fn query_naive(
        &self,
        j: usize,
        reach: impl Fn(&CyclicSublist, usize) -> usize,
    ) -> Option<ValuedSublist> {
        self.items
            .iter()
            .filter(|it| it.sub.contains_index(j))
            .max_by(|a, b| {
                reach(&a.sub, j)
                    .cmp(&reach(&b.sub, j))
                    .then(b.id.cmp(&a.id))
            })
            .copied()
    }
}
