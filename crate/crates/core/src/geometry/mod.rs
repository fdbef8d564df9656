//! Disks, convex-position instances and exact intersection predicates.

mod sublist;

pub use sublist::{offset_ccw, offset_cw, union_extend, CyclicSublist, Openness, SublistError};

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A point in the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist2(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    fn lex_cmp(&self, other: &Point) -> Ordering {
        self.x.total_cmp(&other.x).then(self.y.total_cmp(&other.y))
    }
}

/// A closed disk with a positive weight. Zero radius is allowed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightedDisk {
    pub center: Point,
    pub radius: f64,
    pub weight: f64,
}

impl WeightedDisk {
    pub const fn new(x: f64, y: f64, radius: f64, weight: f64) -> Self {
        WeightedDisk {
            center: Point::new(x, y),
            radius,
            weight,
        }
    }

    /// Unit-weight disk.
    pub const fn unit(x: f64, y: f64, radius: f64) -> Self {
        Self::new(x, y, radius, 1.0)
    }
}

/// `|c1 c2| - (r1 + r2)`; nonpositive when the disks intersect.
pub fn disk_distance(d1: &WeightedDisk, d2: &WeightedDisk) -> f64 {
    d1.center.dist(&d2.center) - (d1.radius + d2.radius)
}

/// Closed intersection test, `|c1 c2|^2 <= (r1 + r2)^2`. Tangent disks intersect.
pub fn intersects(d1: &WeightedDisk, d2: &WeightedDisk) -> bool {
    let reach = d1.radius + d2.radius;
    d1.center.dist2(&d2.center) <= reach * reach
}

/// Whether the solver treats weights as part of the objective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Weighted,
    Unweighted,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("instance has no disks")]
    Empty,
    #[error("disk {index} has a non-finite coordinate, radius or weight")]
    NonFiniteValue { index: usize },
    #[error("disk {index} has negative radius {radius}")]
    NegativeRadius { index: usize, radius: f64 },
    #[error("disk {index} has non-positive weight {weight}")]
    NonPositiveWeight { index: usize, weight: f64 },
    #[error("disks {first} and {second} share the same center")]
    DuplicateCenter { first: usize, second: usize },
    #[error("center of disk {index} is not a strict vertex of the convex hull")]
    NotStrictlyConvex { index: usize },
}

/// Disks whose centers are in strictly convex position, stored in
/// counterclockwise hull order starting from the lexicographically smallest
/// center.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    disks: Vec<WeightedDisk>,
    original_index: Vec<usize>,
}

impl Instance {
    /// Validates `raw` and reorders it counterclockwise around its hull.
    ///
    /// Weights are only required to be positive in [`Mode::Weighted`];
    /// unweighted instances keep whatever finite weights they carry.
    pub fn canonicalize(raw: &[WeightedDisk], mode: Mode) -> Result<Self, GeometryError> {
        if raw.is_empty() {
            return Err(GeometryError::Empty);
        }
        for (index, d) in raw.iter().enumerate() {
            if !d.center.is_finite() || !d.radius.is_finite() || !d.weight.is_finite() {
                return Err(GeometryError::NonFiniteValue { index });
            }
            if d.radius < 0.0 {
                return Err(GeometryError::NegativeRadius {
                    index,
                    radius: d.radius,
                });
            }
            if mode == Mode::Weighted && d.weight <= 0.0 {
                return Err(GeometryError::NonPositiveWeight {
                    index,
                    weight: d.weight,
                });
            }
        }

        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by(|&a, &b| raw[a].center.lex_cmp(&raw[b].center).then(a.cmp(&b)));
        for w in order.windows(2) {
            if raw[w[0]].center == raw[w[1]].center {
                let (first, second) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(GeometryError::DuplicateCenter { first, second });
            }
        }

        let hull = strict_hull(raw, &order);
        if hull.len() != raw.len() {
            let on_hull: std::collections::HashSet<usize> = hull.iter().copied().collect();
            let index = order
                .iter()
                .copied()
                .find(|i| !on_hull.contains(i))
                .unwrap_or(0);
            return Err(GeometryError::NotStrictlyConvex { index });
        }

        Ok(Instance {
            disks: hull.iter().map(|&i| raw[i]).collect(),
            original_index: hull,
        })
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn disks(&self) -> &[WeightedDisk] {
        &self.disks
    }

    pub fn disk(&self, i: usize) -> &WeightedDisk {
        &self.disks[i]
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.disks[i].weight
    }

    /// Position in the caller's input of canonical disk `i`.
    pub fn original_index(&self, i: usize) -> usize {
        self.original_index[i]
    }

    pub fn original_indices(&self) -> &[usize] {
        &self.original_index
    }

    /// Inverse of [`Instance::original_index`].
    pub fn canonical_index(&self, original: usize) -> Option<usize> {
        self.original_index.iter().position(|&o| o == original)
    }

    /// Canonical disks intersect test.
    pub fn intersects(&self, i: usize, j: usize) -> bool {
        intersects(&self.disks[i], &self.disks[j])
    }

    pub fn total_weight<I: IntoIterator<Item = usize>>(&self, indices: I) -> f64 {
        indices.into_iter().map(|i| self.disks[i].weight).sum()
    }

    /// Sublist helper bound to this instance's size.
    pub fn sublist(&self, i: usize, j: usize, openness: Openness) -> CyclicSublist {
        CyclicSublist::between(i, j, openness, self.len())
    }
}

/// Sign of the orientation of `(a, b, c)`: positive for a left turn.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> f64 {
    robust::orient2d(
        robust::Coord { x: a.x, y: a.y },
        robust::Coord { x: b.x, y: b.y },
        robust::Coord { x: c.x, y: c.y },
    )
}

/// Andrew's monotone chain keeping only strict turns. `order` is the
/// lexicographic order of the (distinct) centers. Returns raw indices
/// counterclockwise from the lexicographically smallest center.
fn strict_hull(raw: &[WeightedDisk], order: &[usize]) -> Vec<usize> {
    if order.len() <= 2 {
        return order.to_vec();
    }
    let p = |i: usize| &raw[i].center;
    let mut hull: Vec<usize> = Vec::with_capacity(order.len() + 1);
    for &i in order {
        while hull.len() >= 2
            && orientation(p(hull[hull.len() - 2]), p(hull[hull.len() - 1]), p(i)) <= 0.0
        {
            hull.pop();
        }
        hull.push(i);
    }
    let lower_len = hull.len() + 1;
    for &i in order.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && orientation(p(hull[hull.len() - 2]), p(hull[hull.len() - 1]), p(i)) <= 0.0
        {
            hull.pop();
        }
        hull.push(i);
    }
    hull.pop();
    hull
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(r: f64) -> Vec<WeightedDisk> {
        vec![
            WeightedDisk::unit(1.0, 1.0, r),
            WeightedDisk::unit(0.0, 0.0, r),
            WeightedDisk::unit(1.0, 0.0, r),
            WeightedDisk::unit(0.0, 1.0, r),
        ]
    }

    #[test]
    fn disk_distance_examples() {
        let a = WeightedDisk::unit(0.0, 0.0, 1.0);
        let b = WeightedDisk::unit(2.0, 0.0, 1.0);
        assert_eq!(disk_distance(&a, &b), 0.0);
        assert_eq!(disk_distance(&a, &a), -2.0);
        let c = WeightedDisk::unit(0.0, 0.0, 0.6);
        let d = WeightedDisk::unit(1.0, 1.0, 0.6);
        assert!((disk_distance(&c, &d) - (2f64.sqrt() - 1.2)).abs() < 1e-12);
        assert!((disk_distance(&c, &d) - 0.214214).abs() < 1e-6);
    }

    #[test]
    fn intersects_examples() {
        let a = WeightedDisk::unit(0.0, 0.0, 1.0);
        let b = WeightedDisk::unit(2.0, 0.0, 1.0);
        assert!(intersects(&a, &b));
        let c = WeightedDisk::unit(0.0, 0.0, 0.6);
        let d = WeightedDisk::unit(1.0, 1.0, 0.6);
        assert!(!intersects(&c, &d));
        assert!(intersects(&c, &c));
        let point = WeightedDisk::unit(3.0, 4.0, 0.0);
        assert!(intersects(&point, &point));
    }

    #[test]
    fn canonical_square_order() {
        let inst = Instance::canonicalize(&square(0.6), Mode::Weighted).unwrap();
        let centers: Vec<(f64, f64)> = inst
            .disks()
            .iter()
            .map(|d| (d.center.x, d.center.y))
            .collect();
        assert_eq!(
            centers,
            vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
        );
        assert_eq!(inst.original_indices(), &[1, 2, 0, 3]);
        assert_eq!(inst.canonical_index(0), Some(2));
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let inst = Instance::canonicalize(&square(0.6), Mode::Weighted).unwrap();
        let again = Instance::canonicalize(inst.disks(), Mode::Weighted).unwrap();
        assert_eq!(again.disks(), inst.disks());
        assert_eq!(again.original_indices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn rejects_collinear_and_interior() {
        let line = [
            WeightedDisk::unit(0.0, 0.0, 1.0),
            WeightedDisk::unit(1.0, 0.0, 1.0),
            WeightedDisk::unit(2.0, 0.0, 1.0),
        ];
        assert_eq!(
            Instance::canonicalize(&line, Mode::Unweighted),
            Err(GeometryError::NotStrictlyConvex { index: 1 })
        );
        let mut sq = square(0.1);
        sq.push(WeightedDisk::unit(0.5, 0.5, 0.1));
        assert_eq!(
            Instance::canonicalize(&sq, Mode::Unweighted),
            Err(GeometryError::NotStrictlyConvex { index: 4 })
        );
        let mut edge = square(0.1);
        edge.push(WeightedDisk::unit(0.5, 0.0, 0.1));
        assert!(matches!(
            Instance::canonicalize(&edge, Mode::Unweighted),
            Err(GeometryError::NotStrictlyConvex { index: 4 })
        ));
    }

    #[test]
    fn rejects_bad_values() {
        let dup = [
            WeightedDisk::unit(0.0, 0.0, 1.0),
            WeightedDisk::unit(0.0, 0.0, 2.0),
        ];
        assert_eq!(
            Instance::canonicalize(&dup, Mode::Unweighted),
            Err(GeometryError::DuplicateCenter {
                first: 0,
                second: 1
            })
        );
        let zero_w = [WeightedDisk::new(0.0, 0.0, 1.0, 0.0)];
        assert!(matches!(
            Instance::canonicalize(&zero_w, Mode::Weighted),
            Err(GeometryError::NonPositiveWeight { index: 0, .. })
        ));
        assert!(Instance::canonicalize(&zero_w, Mode::Unweighted).is_ok());
        let nan = [WeightedDisk::unit(f64::NAN, 0.0, 1.0)];
        assert_eq!(
            Instance::canonicalize(&nan, Mode::Unweighted),
            Err(GeometryError::NonFiniteValue { index: 0 })
        );
        assert_eq!(
            Instance::canonicalize(&[], Mode::Unweighted),
            Err(GeometryError::Empty)
        );
    }

    #[test]
    fn tiny_instances() {
        let one =
            Instance::canonicalize(&[WeightedDisk::unit(5.0, 5.0, 0.0)], Mode::Weighted).unwrap();
        assert_eq!(one.len(), 1);
        let two = Instance::canonicalize(
            &[
                WeightedDisk::unit(1.0, 0.0, 0.0),
                WeightedDisk::unit(0.0, 0.0, 0.0),
            ],
            Mode::Weighted,
        )
        .unwrap();
        assert_eq!(two.original_indices(), &[1, 0]);
    }

    #[test]
    fn clockwise_input_is_reversed() {
        let cw = [
            WeightedDisk::unit(0.0, 0.0, 0.1),
            WeightedDisk::unit(0.0, 1.0, 0.1),
            WeightedDisk::unit(1.0, 1.0, 0.1),
            WeightedDisk::unit(1.0, 0.0, 0.1),
        ];
        let inst = Instance::canonicalize(&cw, Mode::Unweighted).unwrap();
        assert_eq!(inst.original_indices(), &[0, 3, 2, 1]);
    }
}
