use std::fmt;

use thiserror::Error;

/// Counterclockwise step count from `i` to `j` on a cycle of size `n`.
pub fn offset_ccw(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < n && j < n);
    (j + n - i) % n
}

/// Clockwise step count from `i` to `j`.
pub fn offset_cw(i: usize, j: usize, n: usize) -> usize {
    offset_ccw(j, i, n)
}

/// Endpoint inclusion for [`CyclicSublist::between`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Openness {
    ClosedClosed,
    OpenOpen,
    ClosedOpen,
    OpenClosed,
}

/// A contiguous counterclockwise run of instance indices.
///
/// Empty and full runs are stored with `start == 0`, so derived equality
/// coincides with equality of the covered index sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicSublist {
    start: u32,
    len: u32,
    n: u32,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SublistError {
    #[error("part {part} leaves a gap after the preceding parts")]
    NotConsecutive { part: usize },
}

impl CyclicSublist {
    pub fn empty(n: usize) -> Self {
        CyclicSublist {
            start: 0,
            len: 0,
            n: n as u32,
        }
    }

    pub fn full(n: usize) -> Self {
        CyclicSublist {
            start: 0,
            len: n as u32,
            n: n as u32,
        }
    }

    /// Run of `len` indices starting at `start`; `len >= n` saturates to full.
    pub fn from_start_len(start: usize, len: usize, n: usize) -> Self {
        assert!(n > 0 && start < n, "start {start} out of range for n = {n}");
        if len == 0 {
            Self::empty(n)
        } else if len >= n {
            Self::full(n)
        } else {
            CyclicSublist {
                start: start as u32,
                len: len as u32,
                n: n as u32,
            }
        }
    }

    /// `P[i, j]`: from `i` counterclockwise to `j`, both included.
    pub fn closed(i: usize, j: usize, n: usize) -> Self {
        Self::from_start_len(i, offset_ccw(i, j, n) + 1, n)
    }

    pub fn singleton(i: usize, n: usize) -> Self {
        Self::from_start_len(i, 1, n)
    }

    /// The run from `i` counterclockwise to `j` with the requested endpoint
    /// inclusion. When `i == j` and an endpoint is open, the walk goes once
    /// around the cycle, so `P(i, i)` is every index except `i`.
    pub fn between(i: usize, j: usize, openness: Openness, n: usize) -> Self {
        if openness == Openness::ClosedClosed {
            return Self::closed(i, j, n);
        }
        let steps = match offset_ccw(i, j, n) {
            0 => n,
            d => d,
        };
        match openness {
            Openness::OpenOpen => Self::from_start_len((i + 1) % n, steps - 1, n),
            Openness::ClosedOpen => Self::from_start_len(i, steps, n),
            Openness::OpenClosed => Self::from_start_len((i + 1) % n, steps, n),
            Openness::ClosedClosed => unreachable!(),
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn start(&self) -> usize {
        self.start as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.len == self.n
    }

    /// Clockwise endpoint; `None` for empty or full runs.
    pub fn cw_endpoint(&self) -> Option<usize> {
        (!self.is_empty() && !self.is_full()).then_some(self.start())
    }

    /// Counterclockwise endpoint; `None` for empty or full runs.
    pub fn ccw_endpoint(&self) -> Option<usize> {
        (!self.is_empty() && !self.is_full()).then(|| (self.start() + self.len() - 1) % self.n())
    }

    pub fn contains_index(&self, p: usize) -> bool {
        self.is_full() || (!self.is_empty() && offset_ccw(self.start(), p, self.n()) < self.len())
    }

    /// `other ⊆ self` as index sets.
    pub fn contains_sub(&self, other: &CyclicSublist) -> bool {
        debug_assert_eq!(self.n, other.n);
        if other.is_empty() || self.is_full() {
            return true;
        }
        if self.is_empty() || other.is_full() {
            return false;
        }
        offset_ccw(self.start(), other.start(), self.n()) + other.len() <= self.len()
    }

    /// How far the run extends counterclockwise from `p`, which it must
    /// contain; full runs reach `n`.
    pub fn ccw_reach_from(&self, p: usize) -> usize {
        debug_assert!(self.contains_index(p));
        if self.is_full() {
            self.n()
        } else {
            offset_ccw(p, self.ccw_endpoint().unwrap(), self.n())
        }
    }

    /// Clockwise counterpart of [`CyclicSublist::ccw_reach_from`].
    pub fn cw_reach_from(&self, p: usize) -> usize {
        debug_assert!(self.contains_index(p));
        if self.is_full() {
            self.n()
        } else {
            offset_cw(p, self.start(), self.n())
        }
    }

    /// Covered indices in counterclockwise order from the clockwise endpoint.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let (start, n) = (self.start(), self.n());
        (0..self.len()).map(move |k| (start + k) % n)
    }

    /// Smallest run covering `self` and `other`, which must overlap or abut.
    pub fn union(&self, other: &CyclicSublist) -> Option<CyclicSublist> {
        debug_assert_eq!(self.n, other.n);
        if other.is_empty() {
            return Some(*self);
        }
        if self.is_empty() {
            return Some(*other);
        }
        if self.is_full() || other.is_full() {
            return Some(Self::full(self.n()));
        }
        let n = self.n();
        let extend = |a: &CyclicSublist, b: &CyclicSublist| {
            let off = offset_ccw(a.start(), b.start(), n);
            (off <= a.len()).then(|| Self::from_start_len(a.start(), a.len().max(off + b.len()), n))
        };
        match (extend(self, other), extend(other, self)) {
            (Some(x), Some(y)) => Some(if x.len() >= y.len() { x } else { y }),
            (x, y) => x.or(y),
        }
    }
}

/// Union of ordered parts, each of which must overlap or abut the union of
/// the nonempty parts before it. Saturates to full once coverage wraps.
pub fn union_extend(n: usize, parts: &[CyclicSublist]) -> Result<CyclicSublist, SublistError> {
    let mut acc = CyclicSublist::empty(n);
    for (part, sub) in parts.iter().enumerate() {
        acc = acc
            .union(sub)
            .ok_or(SublistError::NotConsecutive { part })?;
    }
    Ok(acc)
}

impl fmt::Debug for CyclicSublist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "∅/{}", self.n)
        } else if self.is_full() {
            write!(f, "P/{}", self.n)
        } else {
            write!(
                f,
                "[{}..{}]/{}",
                self.start,
                self.ccw_endpoint().unwrap(),
                self.n
            )
        }
    }
}
