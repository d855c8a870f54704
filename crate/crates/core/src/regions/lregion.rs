//! The parallelogram building blocks `L_{n,x}(P, Q, R, S)` and their barred
//! counterparts.
//!
//! The unbarred region is `0 ≤ v ≤ x + n`, `x ≤ w ≤ x + n`, split by the
//! segment of `u = 0` above `(0, x)` into a down-triangle (left) and a
//! trapezoid (right). `P` labels the triangle's left side `w = x` and `Q` its
//! right side `u = 0`, both bottom to top; `R` labels the trapezoid's upper
//! left side (also `u = 0`) bottom to top and `S` its bottom side `v = 0`
//! left to right, starting at `(x, 0)`.
//!
//! The barred region is `0 ≤ v ≤ n`, `0 ≤ w ≤ x + n`. It is what the
//! top-and-upper-right third of a flipped snowflake looks like: the `P`
//! side starts at `(0, 0)`, the `Q`/`R` side is `u = x` above `(x, 0)`, and
//! the `S` side is `v = 0` to the right of `(x, 0)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{LineBounds, Region, TriCell};
use crate::regions::labels::{LabelSet, MAX_LABEL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LSpec {
    pub n: u32,
    pub x: u32,
    #[serde(rename = "P")]
    pub p: LabelSet,
    #[serde(rename = "Q")]
    pub q: LabelSet,
    #[serde(rename = "R")]
    pub r: LabelSet,
    #[serde(rename = "S")]
    pub s: LabelSet,
    #[serde(default)]
    pub barred: bool,
}

impl LSpec {
    pub fn new(n: u32, x: u32, p: LabelSet, q: LabelSet, r: LabelSet, s: LabelSet) -> Self {
        LSpec { n, x, p, q, r, s, barred: false }
    }

    pub fn barred(self) -> Self {
        LSpec { barred: true, ..self }
    }

    pub fn unbarred(self) -> Self {
        LSpec { barred: false, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_LABEL {
            return Err(Error::TooLarge(self.n));
        }
        for (name, set) in [("P", self.p), ("Q", self.q), ("R", self.r), ("S", self.s)] {
            if let Some(m) = set.max() {
                if m > self.n {
                    return Err(Error::LabelOutOfRange { set: name.into(), label: m, n: self.n });
                }
            }
        }
        let mut seen: BTreeMap<TriCell, &str> = BTreeMap::new();
        for (name, _, cell) in self.holes() {
            if let Some(prev) = seen.insert(cell, name) {
                return Err(Error::HoleCollision(cell, prev.into(), name.into()));
            }
        }
        Ok(())
    }

    /// `1 ∉ P ∩ Q` and `1 ∉ R ∩ S`: both the region and its barred
    /// counterpart are then well defined.
    pub fn check_hypothesis(&self) -> Result<()> {
        if self.p.intersection(self.q).contains(1) {
            return Err(Error::FlipHypothesis("P".into(), "Q".into()));
        }
        if self.r.intersection(self.s).contains(1) {
            return Err(Error::FlipHypothesis("R".into(), "S".into()));
        }
        Ok(())
    }

    pub fn bounds(&self) -> LineBounds {
        let (n, x) = (i64::from(self.n), i64::from(self.x));
        if self.barred {
            LineBounds { u: (-n, x + n), v: (0, n), w: (0, x + n) }
        } else {
            LineBounds { u: (-n, x + n), v: (0, x + n), w: (x, x + n) }
        }
    }

    /// Hole cells tagged with the name of the set that removes them.
    pub fn holes(&self) -> Vec<(&'static str, u32, TriCell)> {
        let x = i64::from(self.x);
        let mut out = Vec::new();
        let mut push = |name: &'static str, set: LabelSet, cell: &dyn Fn(i64) -> TriCell| {
            for k in set.iter() {
                out.push((name, k, cell(i64::from(k))));
            }
        };
        if self.barred {
            push("P", self.p, &|k| TriCell::down(k - 1, -k));
            push("Q", self.q, &|k| TriCell::down(k - 1, x - 1));
            push("R", self.r, &|k| TriCell::up(k - 1, x));
            push("S", self.s, &|k| TriCell::up(0, x + k - 1));
        } else {
            push("P", self.p, &|k| TriCell::down(x + k - 1, -k));
            push("Q", self.q, &|k| TriCell::down(x + k - 1, -1));
            push("R", self.r, &|k| TriCell::up(x + k - 1, 0));
            push("S", self.s, &|k| TriCell::up(0, x + k - 1));
        }
        out
    }
}

pub fn build_l(s: &LSpec) -> Result<Region> {
    s.validate()?;
    let mut region = s.bounds().region();
    for (name, _, cell) in s.holes() {
        if !region.remove(&cell) {
            return Err(Error::HoleOutsideRegion(cell, name.into()));
        }
    }
    Ok(region)
}

/// The L-region example with `n = 7`, `x = 3`.
pub fn sample_l_7_3() -> LSpec {
    LSpec::new(
        7,
        3,
        LabelSet::new(&[3, 7]),
        LabelSet::new(&[2, 5, 6]),
        LabelSet::new(&[6]),
        LabelSet::new(&[2, 3, 4, 6]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{is_balanced, Orientation};

    #[test]
    fn empty_sets_x_zero_is_a_parallelogram() {
        for n in 0..5 {
            let s = LSpec::new(n, 0, LabelSet::EMPTY, LabelSet::EMPTY, LabelSet::EMPTY, LabelSet::EMPTY);
            let r = build_l(&s).unwrap();
            assert_eq!(r.len(), 2 * (n * n) as usize);
            assert!(is_balanced(&r));
            assert_eq!(build_l(&s.barred()).unwrap(), r);
        }
    }

    #[test]
    fn parallelogram_sides() {
        let s = LSpec::new(3, 2, LabelSet::EMPTY, LabelSet::EMPTY, LabelSet::EMPTY, LabelSet::EMPTY);
        let r = build_l(&s).unwrap();
        assert_eq!(r.len(), 2 * 3 * 5);
        // Down-cells on the top edge count the horizontal side.
        assert_eq!(r.iter().filter(|c| c.i == 4 && !c.is_up()).count(), 3);
        let b = build_l(&s.barred()).unwrap();
        assert_eq!(b.len(), 2 * 3 * 5);
        assert_eq!(b.iter().filter(|c| c.i == 0 && c.is_up()).count(), 5);
    }

    #[test]
    fn hole_orientations() {
        let s = sample_l_7_3();
        for spec in [s, s.barred()] {
            for (name, _, cell) in spec.holes() {
                let expect = if matches!(name, "P" | "Q") { Orientation::Down } else { Orientation::Up };
                assert_eq!(cell.orient, expect);
            }
            let r = build_l(&spec).unwrap();
            assert_eq!(r.len(), 2 * 7 * 10 - 10);
        }
    }

    #[test]
    fn validation() {
        let mut s = sample_l_7_3();
        s.p.insert(1);
        s.q.insert(1);
        assert!(matches!(build_l(&s), Err(Error::HoleCollision(..))));
        // The barred region keeps the two holes apart.
        assert!(build_l(&s.barred()).is_ok());
        assert!(s.barred().check_hypothesis().is_err());
        let mut s = sample_l_7_3();
        s.s.insert(8);
        assert!(matches!(build_l(&s), Err(Error::LabelOutOfRange { .. })));
    }
}
