//! Exhaustive reference solvers, solution checks and structural diagnostics
//! of nearest-center assignments.

use thiserror::Error;

use crate::geometry::{orientation, CyclicSublist, Instance, Mode, Point};
use crate::solution::Solution;

/// Largest instance the brute-force solvers accept.
pub const BRUTE_FORCE_MAX_N: usize = 22;

/// Adjacency of the disk graph as one bitset per point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationMasks {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl DominationMasks {
    pub fn build(instance: &Instance) -> Self {
        let n = instance.len();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for i in 0..n {
            for j in i..n {
                if instance.intersects(i, j) {
                    bits[i * words + j / 64] |= 1 << (j % 64);
                    bits[j * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        DominationMasks { n, words, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.mask(i)[j / 64] >> (j % 64) & 1 == 1
    }

    pub fn universe(&self) -> Vec<u64> {
        let mut u = vec![u64::MAX; self.words];
        if !self.n.is_multiple_of(64) {
            u[self.words - 1] = (1u64 << (self.n % 64)) - 1;
        }
        u
    }

    /// Whether the union of the given masks is the universe.
    pub fn covers(&self, centers: &[usize]) -> bool {
        let mut acc = vec![0u64; self.words];
        for &c in centers {
            for (a, m) in acc.iter_mut().zip(self.mask(c)) {
                *a |= m;
            }
        }
        acc == self.universe()
    }

    /// Single-word masks for instances of at most 64 points.
    fn small(&self) -> Vec<u64> {
        assert!(self.words <= 1);
        (0..self.n).map(|i| self.bits[i]).collect()
    }
}

/// Whether `centers` dominates every point.
pub fn verify(instance: &Instance, centers: &[usize]) -> bool {
    (0..instance.len()).all(|p| centers.iter().any(|&c| instance.intersects(p, c)))
}

/// Whether `witnesses` dominates every point of `sub`.
pub fn dominates(instance: &Instance, witnesses: &[usize], sub: &CyclicSublist) -> bool {
    sub.indices()
        .all(|p| witnesses.iter().any(|&c| instance.intersects(p, c)))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute force is limited to {max} points, instance has {n}")]
    TooLarge { n: usize, max: usize },
    #[error("no dominating set of size at most {k} exists")]
    Infeasible { k: usize },
}

/// Optimal dominating set by exhaustive search.
///
/// Unweighted: fewest centers, then least weight, then the lexicographically
/// smallest index list. Weighted: least weight, then fewest centers, then
/// lexicographic. At most `k_cap` centers (default `n`).
pub fn brute_force_min(
    instance: &Instance,
    mode: Mode,
    k_cap: Option<usize>,
) -> Result<Solution, OracleError> {
    let n = instance.len();
    if n > BRUTE_FORCE_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    let cap = k_cap.unwrap_or(n).min(n);
    let masks = DominationMasks::build(instance).small();
    let universe: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let weights: Vec<f64> = (0..n).map(|i| instance.weight(i)).collect();

    let mut search = Search {
        masks: &masks,
        weights: &weights,
        universe,
        cap,
        mode,
        chosen: Vec::with_capacity(n),
        best: None,
    };
    search.descend(0, 0, 0.0);
    let best = search.best.ok_or(OracleError::Infeasible { k: cap })?;
    Ok(Solution::from_canonical(instance, mode, &best.1))
}

struct Search<'a> {
    masks: &'a [u64],
    weights: &'a [f64],
    universe: u64,
    cap: usize,
    mode: Mode,
    chosen: Vec<usize>,
    best: Option<(f64, Vec<usize>)>,
}

impl Search<'_> {
    fn better(&self, weight: f64) -> bool {
        let Some((bw, bs)) = &self.best else {
            return true;
        };
        let (size, best_size) = (self.chosen.len(), bs.len());
        let key = match self.mode {
            Mode::Unweighted => size.cmp(&best_size).then(weight.total_cmp(bw)),
            Mode::Weighted => weight.total_cmp(bw).then(size.cmp(&best_size)),
        };
        key.then_with(|| self.chosen.cmp(bs)).is_lt()
    }

    /// Elements are decided in index order, so supersets of a covering set
    /// are never better and the subtree is cut.
    fn descend(&mut self, next: usize, cover: u64, weight: f64) {
        if cover == self.universe {
            if self.better(weight) {
                self.best = Some((weight, self.chosen.clone()));
            }
            return;
        }
        if next == self.masks.len() || self.chosen.len() == self.cap {
            return;
        }
        if let Some((bw, bs)) = &self.best {
            let hopeless = match self.mode {
                Mode::Unweighted => self.chosen.len() + 1 > bs.len(),
                Mode::Weighted => weight > *bw,
            };
            if hopeless {
                return;
            }
        }
        let rest = self.masks[next..].iter().fold(cover, |acc, m| acc | m);
        if rest != self.universe {
            return;
        }
        self.chosen.push(next);
        self.descend(
            next + 1,
            cover | self.masks[next],
            weight + self.weights[next],
        );
        self.chosen.pop();
        self.descend(next + 1, cover, weight);
    }
}

/// Nearest-center assignment under the additive weights `-r_c`.
#[derive(Clone, Debug, PartialEq)]
pub struct Assignment {
    /// Centers, ascending canonical indices.
    pub centers: Vec<usize>,
    /// Assigned center of every point.
    pub assigned: Vec<usize>,
    /// Maximal contiguous runs of points sharing a center.
    pub groups: Vec<(usize, CyclicSublist)>,
    /// Pairs `(i, j)` of centers with `D_i ⊆ D_j`.
    pub containment_pairs: Vec<(usize, usize)>,
}

impl Assignment {
    /// Group of `center` that contains the center itself.
    pub fn main_group(&self, center: usize) -> Option<CyclicSublist> {
        self.groups
            .iter()
            .find(|(c, sub)| *c == center && sub.contains_index(center))
            .map(|(_, sub)| *sub)
    }
}

fn contained_in(instance: &Instance, i: usize, j: usize) -> bool {
    let (a, b) = (instance.disk(i), instance.disk(j));
    a.center.dist(&b.center) + a.radius <= b.radius + 1e-12
}

pub fn voronoi_assignment(instance: &Instance, centers: &[usize]) -> Assignment {
    assert!(!centers.is_empty(), "assignment needs at least one center");
    let n = instance.len();
    let mut centers = centers.to_vec();
    centers.sort_unstable();
    centers.dedup();

    let assigned: Vec<usize> = (0..n)
        .map(|p| {
            let pc = instance.disk(p).center;
            let mut best = centers[0];
            let mut best_d = f64::INFINITY;
            for &c in &centers {
                let d = pc.dist(&instance.disk(c).center) - instance.disk(c).radius;
                if d < best_d {
                    best_d = d;
                    best = c;
                }
            }
            best
        })
        .collect();

    let mut groups = Vec::new();
    match (0..n).find(|&p| assigned[p] != assigned[(p + n - 1) % n]) {
        None => groups.push((assigned[0], CyclicSublist::full(n))),
        Some(first) => {
            let mut start = first;
            for step in 1..=n {
                let p = (first + step) % n;
                if step == n || assigned[p] != assigned[start] {
                    let len = (p + n - start) % n;
                    let len = if len == 0 { n } else { len };
                    groups.push((
                        assigned[start],
                        CyclicSublist::from_start_len(start, len, n),
                    ));
                    start = p;
                }
            }
        }
    }

    let mut containment_pairs = Vec::new();
    for &i in &centers {
        for &j in &centers {
            if i != j && contained_in(instance, i, j) {
                containment_pairs.push((i, j));
            }
        }
    }

    Assignment {
        centers,
        assigned,
        groups,
        containment_pairs,
    }
}

/// Outcome of the segment-crossing scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Separability {
    Separable,
    /// Two segments from different centers properly cross.
    Crossing,
    /// No proper crossing, but some orientation was within the collinearity
    /// band.
    Inconclusive,
}

impl Separability {
    /// Not a hard failure.
    pub fn is_acceptable(self) -> bool {
        self != Separability::Crossing
    }
}

const COLLINEAR_BAND: f64 = 1e-12;

fn banded_sign(a: &Point, b: &Point, c: &Point) -> i8 {
    let o = orientation(a, b, c);
    let scale = (a.dist(b) * a.dist(c)).max(f64::MIN_POSITIVE);
    if o.abs() <= COLLINEAR_BAND * scale {
        0
    } else if o > 0.0 {
        1
    } else {
        -1
    }
}

fn segment_crossing(p: &Point, q: &Point, r: &Point, s: &Point) -> Separability {
    let (o1, o2) = (banded_sign(p, q, r), banded_sign(p, q, s));
    let (o3, o4) = (banded_sign(r, s, p), banded_sign(r, s, q));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        Separability::Crossing
    } else if o1 * o2 <= 0 && o3 * o4 <= 0 && (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
        Separability::Inconclusive
    } else {
        Separability::Separable
    }
}

/// Scans every pair of assignment segments `c -> p`, `c' -> p'` with
/// `c != c'` for a proper crossing. Segments sharing an endpoint are skipped.
pub fn check_line_separable(instance: &Instance, assignment: &Assignment) -> Separability {
    let n = instance.len();
    let at = |i: usize| instance.disk(i).center;
    let mut verdict = Separability::Separable;
    for p in 0..n {
        let c = assignment.assigned[p];
        if c == p {
            continue;
        }
        for q in (p + 1)..n {
            let d = assignment.assigned[q];
            if d == q || d == c {
                continue;
            }
            if p == d || q == c {
                continue;
            }
            match segment_crossing(&at(c), &at(p), &at(d), &at(q)) {
                Separability::Crossing => return Separability::Crossing,
                Separability::Inconclusive => verdict = Separability::Inconclusive,
                Separability::Separable => {}
            }
        }
    }
    verdict
}

/// Whether every point's disk meets its assigned center's disk.
pub fn check_domination_of_assignment(instance: &Instance, assignment: &Assignment) -> bool {
    (0..instance.len()).all(|p| instance.intersects(p, assignment.assigned[p]))
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

    fn big_disk() -> Instance {
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
        Instance::canonicalize(&disks, Mode::Unweighted).unwrap()
    }

    fn members(masks: &DominationMasks, i: usize) -> Vec<usize> {
        (0..masks.n()).filter(|&j| masks.contains(i, j)).collect()
    }

    #[test]
    fn masks_examples() {
        let m = DominationMasks::build(&t4());
        assert_eq!(members(&m, 0), vec![0, 1, 3]);
        assert_eq!(members(&m, 1), vec![0, 1, 2]);
        let inst = big_disk();
        let big = (0..5).find(|&i| inst.disk(i).radius == 100.0).unwrap();
        let m = DominationMasks::build(&inst);
        assert_eq!(m.mask(big), m.universe().as_slice());
        let one =
            Instance::canonicalize(&[WeightedDisk::unit(0.0, 0.0, 1.0)], Mode::Unweighted).unwrap();
        assert_eq!(members(&DominationMasks::build(&one), 0), vec![0]);
    }

    #[test]
    fn verify_examples() {
        let inst = t4();
        assert!(verify(&inst, &[0, 2]));
        assert!(!verify(&inst, &[0]));
        assert!(verify(&inst, &[0, 1, 2, 3]));
        let m = DominationMasks::build(&inst);
        assert!(m.covers(&[0, 2]));
        assert!(!m.covers(&[0]));
    }

    #[test]
    fn brute_force_examples() {
        let inst = t4();
        let sol = brute_force_min(&inst, Mode::Unweighted, None).unwrap();
        assert_eq!((sol.size, sol.weight), (2, 2.0));
        assert_eq!(sol.canonical_centers, vec![0, 1]);
        assert_eq!(
            brute_force_min(&inst, Mode::Weighted, Some(1)),
            Err(OracleError::Infeasible { k: 1 })
        );
        assert_eq!(
            brute_force_min(&big_disk(), Mode::Unweighted, None)
                .unwrap()
                .size,
            1
        );
    }

    #[test]
    fn brute_force_weighted_prefers_weight_over_size() {
        let inst = Instance::canonicalize(
            &[
                WeightedDisk::new(0.0, 0.0, 0.1, 1.0),
                WeightedDisk::new(1.0, 0.0, 0.1, 1.0),
                WeightedDisk::new(0.5, 1.0, 2.0, 5.0),
            ],
            Mode::Weighted,
        )
        .unwrap();
        let w = brute_force_min(&inst, Mode::Weighted, None).unwrap();
        assert_eq!((w.size, w.weight), (2, 2.0));
        let u = brute_force_min(&inst, Mode::Unweighted, None).unwrap();
        assert_eq!((u.size, u.weight), (1, 5.0));
    }

    #[test]
    fn too_large() {
        let disks: Vec<WeightedDisk> = (0..23)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / 23.0;
                WeightedDisk::unit(t.cos(), t.sin(), 0.1)
            })
            .collect();
        let inst = Instance::canonicalize(&disks, Mode::Unweighted).unwrap();
        assert_eq!(
            brute_force_min(&inst, Mode::Unweighted, None),
            Err(OracleError::TooLarge { n: 23, max: 22 })
        );
    }

    #[test]
    fn assignment_examples() {
        let inst = t4();
        let a = voronoi_assignment(&inst, &[2]);
        assert_eq!(a.groups, vec![(2, CyclicSublist::full(4))]);
        assert_eq!(check_line_separable(&inst, &a), Separability::Separable);

        let a = voronoi_assignment(&inst, &[0, 2]);
        assert_eq!(a.assigned, vec![0, 0, 2, 0]);
        assert!(check_domination_of_assignment(&inst, &a));
        assert_eq!(check_line_separable(&inst, &a), Separability::Separable);
        assert_eq!(a.main_group(0), Some(CyclicSublist::closed(3, 1, 4)));
        assert!(a.containment_pairs.is_empty());
    }

    #[test]
    fn interleaved_assignment_crosses() {
        let inst = t4();
        let bad = Assignment {
            centers: vec![0, 1],
            assigned: vec![0, 1, 0, 1],
            groups: Vec::new(),
            containment_pairs: Vec::new(),
        };
        assert_eq!(check_line_separable(&inst, &bad), Separability::Crossing);
    }

    #[test]
    fn containment_is_flagged() {
        let inst = Instance::canonicalize(
            &[
                WeightedDisk::unit(0.0, 0.0, 0.1),
                WeightedDisk::unit(1.0, 0.0, 3.0),
                WeightedDisk::unit(0.5, 1.0, 0.1),
            ],
            Mode::Unweighted,
        )
        .unwrap();
        let a = voronoi_assignment(&inst, &[0, 1]);
        assert_eq!(a.containment_pairs.len(), 1);
    }
}
