//! First non-intersecting disk counterclockwise / clockwise from a position.
//!
//! For a query disk `D_i` and a start position `j`, `a(i, j)` is the first
//! index at or after `j` in counterclockwise order whose disk is disjoint from
//! `D_i`, and `b(i, j)` the clockwise counterpart. The tree strategy walks a
//! complete binary tree over the canonical order; each node answers "is the
//! disk of `P_v` farthest from `p_i` disjoint from `D_i`?" through a
//! [`FarthestDiskTest`] backend.

use crate::geometry::{intersects, CyclicSublist, Instance, Openness, WeightedDisk};

/// Result of an `a` / `b` query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NeighborAnswer {
    Index(usize),
    /// The query disk intersects every disk of the instance.
    IntersectsAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum NeighborStrategy {
    Naive,
    #[default]
    Tree,
}

/// Per-node subquery: does some disk with index in `lo..hi` lie entirely
/// outside `query`? Equivalently, is the additively weighted farthest disk
/// `max |q p| - r_p` of the node farther than `r_q`?
pub trait FarthestDiskTest: Send + Sync {
    fn any_disjoint(&self, disks: &[WeightedDisk], node: &TreeNode, query: &WeightedDisk) -> bool;
}

/// Leaf range and bounding data of a tree node.
#[derive(Clone, Debug)]
pub struct TreeNode {
    pub lo: usize,
    pub hi: usize,
    min_radius: f64,
    bbox: [f64; 4],
}

/// Linear scan of the node's disks, skipped when even the farthest corner
/// of the node's bounding box cannot clear the query disk.
#[derive(Clone, Copy, Debug, Default)]
pub struct LinearScan;

impl FarthestDiskTest for LinearScan {
    fn any_disjoint(&self, disks: &[WeightedDisk], node: &TreeNode, query: &WeightedDisk) -> bool {
        if node.lo >= node.hi {
            return false;
        }
        let q = query.center;
        let [x0, y0, x1, y1] = node.bbox;
        let dx = (q.x - x0).abs().max((q.x - x1).abs());
        let dy = (q.y - y0).abs().max((q.y - y1).abs());
        let reach = query.radius + node.min_radius;
        // The margin keeps the shortcut conservative under rounding.
        if (dx * dx + dy * dy) * (1.0 + 1e-9) < reach * reach {
            return false;
        }
        disks[node.lo..node.hi]
            .iter()
            .any(|d| !intersects(query, d))
    }
}

pub struct NeighborIndex<'a> {
    instance: &'a Instance,
    strategy: NeighborStrategy,
    /// Number of leaf slots, a power of two `>= n`.
    width: usize,
    /// Heap-ordered nodes: root at 1, leaves at `width..2 * width`.
    nodes: Vec<TreeNode>,
    backend: Box<dyn FarthestDiskTest + 'a>,
}

impl<'a> NeighborIndex<'a> {
    pub fn build(instance: &'a Instance, strategy: NeighborStrategy) -> Self {
        Self::with_backend(instance, strategy, Box::new(LinearScan))
    }

    pub fn with_backend(
        instance: &'a Instance,
        strategy: NeighborStrategy,
        backend: Box<dyn FarthestDiskTest + 'a>,
    ) -> Self {
        let n = instance.len();
        let width = n.next_power_of_two();
        let empty = TreeNode {
            lo: 0,
            hi: 0,
            min_radius: f64::INFINITY,
            bbox: [
                f64::INFINITY,
                f64::INFINITY,
                f64::NEG_INFINITY,
                f64::NEG_INFINITY,
            ],
        };
        let mut nodes = vec![empty; 2 * width];
        if strategy == NeighborStrategy::Tree {
            for k in 0..width {
                let node = &mut nodes[width + k];
                node.lo = k.min(n);
                node.hi = (k + 1).min(n);
                if let Some(d) = instance.disks().get(k) {
                    node.min_radius = d.radius;
                    node.bbox = [d.center.x, d.center.y, d.center.x, d.center.y];
                }
            }
            for v in (1..width).rev() {
                let (l, r) = (&nodes[2 * v], &nodes[2 * v + 1]);
                let merged = TreeNode {
                    lo: l.lo,
                    hi: r.hi.max(l.hi),
                    min_radius: l.min_radius.min(r.min_radius),
                    bbox: [
                        l.bbox[0].min(r.bbox[0]),
                        l.bbox[1].min(r.bbox[1]),
                        l.bbox[2].max(r.bbox[2]),
                        l.bbox[3].max(r.bbox[3]),
                    ],
                };
                nodes[v] = merged;
            }
        }
        NeighborIndex {
            instance,
            strategy,
            width,
            nodes,
            backend,
        }
    }

    pub fn instance(&self) -> &'a Instance {
        self.instance
    }

    pub fn strategy(&self) -> NeighborStrategy {
        self.strategy
    }

    fn disjoint(&self, i: usize, p: usize) -> bool {
        !self.instance.intersects(i, p)
    }

    /// First index counterclockwise from `j` (inclusive) whose disk is
    /// disjoint from `D_i`.
    pub fn a(&self, i: usize, j: usize) -> NeighborAnswer {
        match self.strategy {
            NeighborStrategy::Naive => self.walk(i, j, 1),
            NeighborStrategy::Tree => self.tree_query(i, j, Direction::Ccw),
        }
    }

    /// First index clockwise from `j` (inclusive) whose disk is disjoint
    /// from `D_i`.
    pub fn b(&self, i: usize, j: usize) -> NeighborAnswer {
        match self.strategy {
            NeighborStrategy::Naive => self.walk(i, j, self.instance.len() - 1),
            NeighborStrategy::Tree => self.tree_query(i, j, Direction::Cw),
        }
    }

    /// `P(b_i^i, a_i^i)`: the maximal run through `i` dominated by `p_i`.
    pub fn dominated_run(&self, i: usize) -> CyclicSublist {
        let n = self.instance.len();
        match (self.b(i, i), self.a(i, i)) {
            (NeighborAnswer::Index(b), NeighborAnswer::Index(a)) => {
                CyclicSublist::between(b, a, Openness::OpenOpen, n)
            }
            _ => CyclicSublist::full(n),
        }
    }

    fn walk(&self, i: usize, j: usize, step: usize) -> NeighborAnswer {
        let n = self.instance.len();
        let mut p = j;
        for _ in 0..n {
            if self.disjoint(i, p) {
                return NeighborAnswer::Index(p);
            }
            p = (p + step) % n;
        }
        NeighborAnswer::IntersectsAll
    }

    fn node_has(&self, i: usize, v: usize) -> bool {
        self.backend
            .any_disjoint(self.instance.disks(), &self.nodes[v], self.instance.disk(i))
    }

    fn tree_query(&self, i: usize, j: usize, dir: Direction) -> NeighborAnswer {
        let n = self.instance.len();
        if !self.node_has(i, 1) {
            return NeighborAnswer::IntersectsAll;
        }
        if self.disjoint(i, j) {
            return NeighborAnswer::Index(j);
        }
        // Search strictly beyond j toward the end of the leaf order, then
        // wrap around: test the first leaf on the far side and search from it.
        let (wrap_leaf, beyond) = match dir {
            Direction::Ccw => (0, self.search_from(i, j, dir)),
            Direction::Cw => (n - 1, self.search_from(i, j, dir)),
        };
        if let Some(p) = beyond {
            return NeighborAnswer::Index(p);
        }
        if self.disjoint(i, wrap_leaf) {
            return NeighborAnswer::Index(wrap_leaf);
        }
        match self.search_from(i, wrap_leaf, dir) {
            Some(p) => NeighborAnswer::Index(p),
            None => unreachable!("root reported a disjoint disk that the search missed"),
        }
    }

    /// Bottom-up from leaf `j` inspecting siblings on the `dir` side, then
    /// top-down into the first sibling that holds a disjoint disk. Only
    /// leaves strictly beyond `j` are considered.
    fn search_from(&self, i: usize, j: usize, dir: Direction) -> Option<usize> {
        let mut v = self.width + j;
        let found = loop {
            if v == 1 {
                return None;
            }
            let is_left = v.is_multiple_of(2);
            let sibling = match (dir, is_left) {
                (Direction::Ccw, true) => Some(v + 1),
                (Direction::Cw, false) => Some(v - 1),
                _ => None,
            };
            if let Some(u) = sibling {
                if self.node_has(i, u) {
                    break u;
                }
            }
            v /= 2;
        };
        let mut v = found;
        while v < self.width {
            let (near, far) = match dir {
                Direction::Ccw => (2 * v, 2 * v + 1),
                Direction::Cw => (2 * v + 1, 2 * v),
            };
            v = if self.node_has(i, near) { near } else { far };
        }
        Some(v - self.width)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    Ccw,
    Cw,
}
