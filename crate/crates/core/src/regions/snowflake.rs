//! Hexagons with a central triangular hole and unit holes along the three
//! long diagonals.
//!
//! The unflipped central hole is the up-triangle with corners `L = (0, 0)`,
//! `R = (x, 0)` and `U = (0, x)`, and the hexagon is
//! `-n ≤ u, v, w ≤ x + n`. The six arms, with the sets hanging on them
//! (triangle side first, trapezoid side second):
//!
//! | arm            | line      | sets     |
//! |----------------|-----------|----------|
//! | `U` → top-left | `w = x`   | A1, B6   |
//! | `U` → top-right| `u = 0`   | B1, A2   |
//! | `R` → right    | `v = 0`   | A3, B2   |
//! | `R` → bottom-right | `w = x` | B3, A4 |
//! | `L` → bottom-left  | `u = 0` | A5, B4 |
//! | `L` → left     | `v = 0`   | B5, A6   |
//!
//! Holes on the triangle side of an arm point down, holes on the trapezoid
//! side point up. Label `k` is the `k`-th unit segment counted from the
//! central triangle.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{LatticeLine, LineBounds, LineFamily, Point, Region, TriCell};
use crate::regions::labels::{LabelSet, MAX_LABEL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SetFamily {
    A,
    B,
}

/// One of the twelve label sets `A1..A6`, `B1..B6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetId {
    pub family: SetFamily,
    /// 1-based.
    pub index: u8,
}

impl SetId {
    pub const fn a(index: u8) -> Self {
        SetId { family: SetFamily::A, index }
    }

    pub const fn b(index: u8) -> Self {
        SetId { family: SetFamily::B, index }
    }

    /// Odd sets sit in the triangular subregions and their holes point down.
    pub fn is_odd(&self) -> bool {
        self.index % 2 == 1
    }

    pub fn dendrite(&self) -> DendriteAxis {
        match (self.family, self.index) {
            (SetFamily::A, 3 | 6) | (SetFamily::B, 2 | 5) => DendriteAxis::Horizontal,
            (SetFamily::A, 2 | 5) | (SetFamily::B, 1 | 4) => DendriteAxis::Positive,
            _ => DendriteAxis::Negative,
        }
    }
}

impl fmt::Display for SetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.index)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DendriteAxis {
    Horizontal,
    Positive,
    Negative,
}

/// `H_{n,x}(A, B)` or, with `flipped`, its snowflake flip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SnowflakeSpec {
    pub n: u32,
    pub x: u32,
    #[serde(rename = "A")]
    pub a: [LabelSet; 6],
    #[serde(rename = "B")]
    pub b: [LabelSet; 6],
    #[serde(default)]
    pub flipped: bool,
}

/// A unit hole together with the diagonal it hangs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hole {
    pub set: SetId,
    pub label: u32,
    pub cell: TriCell,
    pub line: LatticeLine,
}

/// A long diagonal with the holes fastened to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dendrite {
    pub axis: DendriteAxis,
    pub line: LatticeLine,
    pub holes: Vec<Hole>,
}

impl SnowflakeSpec {
    /// `H_{n,x}` with no unit holes.
    pub fn plain(n: u32, x: u32) -> Self {
        SnowflakeSpec { n, x, a: [LabelSet::EMPTY; 6], b: [LabelSet::EMPTY; 6], flipped: false }
    }

    pub fn set(&self, id: SetId) -> LabelSet {
        let idx = usize::from(id.index - 1);
        match id.family {
            SetFamily::A => self.a[idx],
            SetFamily::B => self.b[idx],
        }
    }

    pub fn all_sets(&self) -> impl Iterator<Item = (SetId, LabelSet)> + '_ {
        (1..=6u8)
            .map(SetId::a)
            .chain((1..=6u8).map(SetId::b))
            .map(move |id| (id, self.set(id)))
    }

    /// `1 ∉ Aᵢ ∩ Bᵢ` for every `i`.
    pub fn flip_hypothesis_holds(&self) -> bool {
        (0..6).all(|i| !self.a[i].intersection(self.b[i]).contains(1))
    }

    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_LABEL {
            return Err(Error::TooLarge(self.n));
        }
        for (id, set) in self.all_sets() {
            if let Some(m) = set.max() {
                if m > self.n {
                    return Err(Error::LabelOutOfRange { set: id.to_string(), label: m, n: self.n });
                }
            }
        }
        if self.flipped {
            self.check_flip_hypothesis()?;
        }
        Ok(())
    }

    fn check_flip_hypothesis(&self) -> Result<()> {
        for i in 0..6u8 {
            let idx = usize::from(i);
            if self.a[idx].intersection(self.b[idx]).contains(1) {
                return Err(Error::FlipHypothesis(SetId::a(i + 1).to_string(), SetId::b(i + 1).to_string()));
            }
        }
        Ok(())
    }

    /// Cyclically symmetric specs: `A1=A3=A5`, `A2=A4=A6`, `B1=B3=B5`, `B2=B4=B6`.
    pub fn is_cyclic(&self) -> bool {
        let (a, b) = (&self.a, &self.b);
        a[0] == a[2] && a[2] == a[4] && a[1] == a[3] && a[3] == a[5]
            && b[0] == b[2] && b[2] == b[4] && b[1] == b[3] && b[3] == b[5]
    }

    /// Specs whose regions are mirror symmetric in the vertical line through
    /// the center: `A1=B1, A2=B6, A3=B5, A4=B4, A5=B3, A6=B2`.
    pub fn is_vertical(&self) -> bool {
        let (a, b) = (&self.a, &self.b);
        a[0] == b[0] && a[1] == b[5] && a[2] == b[4] && a[3] == b[3] && a[4] == b[2] && a[5] == b[1]
    }

    /// The spec describing this region after a half turn about
    /// [`SnowflakeSpec::half_turn_center`]. Only meaningful for flipped specs,
    /// whose half-turn image is the unflipped snowflake returned here.
    pub fn half_turn_conjugate(&self) -> SnowflakeSpec {
        let rot = |s: &[LabelSet; 6]| std::array::from_fn(|i| s[(i + 3) % 6]);
        SnowflakeSpec { n: self.n, x: self.x, a: rot(&self.a), b: rot(&self.b), flipped: !self.flipped }
    }

    pub fn half_turn_center(&self) -> Point {
        Point::new(Rational64::new(i64::from(self.x), 2), Rational64::from_integer(0))
    }

    /// Centroid of the central triangle: the 120° rotation center, and a
    /// point on the vertical symmetry axis.
    pub fn center(&self) -> Point {
        let x = i64::from(self.x);
        if self.flipped {
            Point::new(Rational64::new(2 * x, 3), Rational64::new(-x, 3))
        } else {
            Point::new(Rational64::new(x, 3), Rational64::new(x, 3))
        }
    }

    /// The boundary hexagon, central hole not removed.
    pub fn hexagon_bounds(&self) -> LineBounds {
        let (n, x) = (i64::from(self.n), i64::from(self.x));
        if self.flipped {
            LineBounds { u: (-n, x + n), v: (-(x + n), n), w: (-n, x + n) }
        } else {
            LineBounds { u: (-n, x + n), v: (-n, x + n), w: (-n, x + n) }
        }
    }

    pub fn central_hole(&self) -> LineBounds {
        let x = i64::from(self.x);
        if self.flipped {
            LineBounds::down_triangle(0, 0, x)
        } else {
            LineBounds::up_triangle(0, 0, x)
        }
    }

    /// Lines carrying the horizontal, positive and negative dendrites.
    pub fn axis_line(&self, axis: DendriteAxis) -> LatticeLine {
        let x = i64::from(self.x);
        match (axis, self.flipped) {
            (DendriteAxis::Horizontal, _) => LatticeLine::horizontal(0),
            (DendriteAxis::Positive, false) => LatticeLine::positive(0),
            (DendriteAxis::Positive, true) => LatticeLine::positive(x),
            (DendriteAxis::Negative, false) => LatticeLine::negative(x),
            (DendriteAxis::Negative, true) => LatticeLine::negative(0),
        }
    }

    /// Every unit hole, in set order then label order.
    pub fn holes(&self) -> Vec<Hole> {
        self.holes_with_shift(0)
    }

    pub(crate) fn holes_with_shift(&self, shift: u32) -> Vec<Hole> {
        let mut out = Vec::new();
        for (set, labels) in self.all_sets() {
            for label in labels.iter() {
                let cell = hole_cell(set, i64::from(label + shift), i64::from(self.x), self.flipped);
                let line = cell.side_line(match set.dendrite() {
                    DendriteAxis::Horizontal => LineFamily::Horizontal,
                    DendriteAxis::Positive => LineFamily::Positive,
                    DendriteAxis::Negative => LineFamily::Negative,
                });
                out.push(Hole { set, label, cell, line });
            }
        }
        out
    }

    pub fn dendrites(&self) -> [Dendrite; 3] {
        let holes = self.holes();
        [DendriteAxis::Horizontal, DendriteAxis::Positive, DendriteAxis::Negative].map(|axis| Dendrite {
            axis,
            line: self.axis_line(axis),
            holes: holes.iter().filter(|h| h.set.dendrite() == axis).copied().collect(),
        })
    }
}

/// Cell removed by label `k` of `set` in `H_{n,x}`, translated along with its
/// dendrite when `flipped`. Rows are `i`, skew columns `j`.
fn hole_cell(set: SetId, k: i64, x: i64, flipped: bool) -> TriCell {
    let base = match (set.family, set.index) {
        (SetFamily::A, 1) => TriCell::down(x + k - 1, -k),
        (SetFamily::B, 6) => TriCell::up(x + k - 1, -k),
        (SetFamily::B, 1) => TriCell::down(x + k - 1, -1),
        (SetFamily::A, 2) => TriCell::up(x + k - 1, 0),
        (SetFamily::A, 3) => TriCell::down(-1, x + k - 1),
        (SetFamily::B, 2) => TriCell::up(0, x + k - 1),
        (SetFamily::B, 3) => TriCell::down(-k, x + k - 1),
        (SetFamily::A, 4) => TriCell::up(-k, x + k - 1),
        (SetFamily::A, 5) => TriCell::down(-k, -1),
        (SetFamily::B, 4) => TriCell::up(-k, 0),
        (SetFamily::B, 5) => TriCell::down(-1, -k),
        (SetFamily::A, 6) => TriCell::up(0, -k),
        _ => unreachable!("set index out of range"),
    };
    if !flipped {
        return base;
    }
    // The positive dendrite moves x units southeast, the negative one x units southwest.
    let (du, dv) = match set.dendrite() {
        DendriteAxis::Horizontal => (0, 0),
        DendriteAxis::Positive => (x, -x),
        DendriteAxis::Negative => (0, -x),
    };
    TriCell::new(base.i + dv, base.j + du, base.orient)
}

/// `H_{n,x}`: the hexagon with sides `n, n+x, n, n+x, n, n+x` minus its
/// central up-triangle of side `x`.
pub fn build_h(n: u32, x: u32) -> Region {
    build_snowflake(&SnowflakeSpec::plain(n, x)).expect("plain spec is always valid")
}

pub fn build_snowflake(s: &SnowflakeSpec) -> Result<Region> {
    build_snowflake_shifted(s, 0)
}

/// Like [`build_snowflake`] but every hole sits `shift` positions further
/// out than its label says. Exists only to produce deliberately wrong
/// regions for negative controls.
pub fn build_snowflake_shifted(s: &SnowflakeSpec, shift: u32) -> Result<Region> {
    s.validate()?;
    let hexagon = s.hexagon_bounds();
    let hole = s.central_hole();
    let mut region: Region = hexagon.region().iter().copied().filter(|&c| !hole.contains(c)).collect();
    let mut seen: BTreeMap<TriCell, SetId> = BTreeMap::new();
    for h in s.holes_with_shift(shift) {
        if let Some(prev) = seen.insert(h.cell, h.set) {
            return Err(Error::HoleCollision(h.cell, prev.to_string(), h.set.to_string()));
        }
        if !region.remove(&h.cell) {
            return Err(Error::HoleOutsideRegion(h.cell, h.set.to_string()));
        }
    }
    Ok(region)
}

/// Toggles `flipped`; requires `1 ∉ Aᵢ ∩ Bᵢ`.
pub fn flip_spec(s: &SnowflakeSpec) -> Result<SnowflakeSpec> {
    s.check_flip_hypothesis()?;
    Ok(SnowflakeSpec { flipped: !s.flipped, ..*s })
}

/// The spec of the region pictured in the snowflake-flipping example with
/// `n = 7`, `x = 3`.
pub fn sample_snowflake_7_3() -> SnowflakeSpec {
    SnowflakeSpec {
        n: 7,
        x: 3,
        a: [
            LabelSet::new(&[3, 7]),
            LabelSet::new(&[6]),
            LabelSet::new(&[3, 7]),
            LabelSet::new(&[6]),
            LabelSet::new(&[1, 5]),
            LabelSet::new(&[2, 3, 7]),
        ],
        b: [
            LabelSet::new(&[2, 5, 6]),
            LabelSet::new(&[2, 3, 4]),
            LabelSet::new(&[3, 5]),
            LabelSet::new(&[3, 6]),
            LabelSet::new(&[5]),
            LabelSet::new(&[2, 5]),
        ],
        flipped: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{apply_isometry, is_balanced, Isometry, IsometryKind, Orientation};
    use crate::regions::build_hexagon;

    fn cell_count(n: u32, x: u32) -> usize {
        let (n, x) = (n as usize, x as usize);
        (x + 3 * n).pow(2) - 3 * n * n - x * x
    }

    #[test]
    fn plain_h_is_balanced_with_expected_size() {
        for n in 0..5 {
            for x in 0..4 {
                let r = build_h(n, x);
                assert_eq!(r.len(), cell_count(n, x), "n={n} x={x}");
                assert!(is_balanced(&r));
                let flipped = build_snowflake(&SnowflakeSpec { flipped: true, ..SnowflakeSpec::plain(n, x) }).unwrap();
                assert_eq!(flipped.len(), r.len());
                assert!(is_balanced(&flipped));
            }
        }
    }

    #[test]
    fn x_zero_is_the_regular_hexagon() {
        for n in 0..4 {
            assert_eq!(build_h(n, 0).translate(0, i64::from(n)), build_hexagon(n, n, n));
        }
    }

    #[test]
    fn h_7_3_has_sides_7_and_10() {
        let r = build_h(7, 3);
        // Down-cells touching the top side v = x + n, up-cells touching the bottom side.
        let top_row: Vec<_> = r.iter().filter(|c| c.i == 9 && !c.is_up()).collect();
        assert_eq!(top_row.len(), 7);
        let bottom_row: Vec<_> = r.iter().filter(|c| c.i == -7 && c.is_up()).collect();
        assert_eq!(bottom_row.len(), 10);
        assert_eq!(r.len(), 24 * 24 - 3 * 49 - 9);
    }

    #[test]
    fn h_is_invariant_under_rotation_about_its_center() {
        for (n, x) in [(2, 1), (3, 2), (1, 0)] {
            for flipped in [false, true] {
                let s = SnowflakeSpec { flipped, ..SnowflakeSpec::plain(n, x) };
                let r = build_snowflake(&s).unwrap();
                let rot = Isometry::new(IsometryKind::Rotate120, s.center());
                assert_eq!(apply_isometry(&rot, &r).unwrap(), r);
                let refl = Isometry::new(IsometryKind::ReflectVertical, s.center());
                assert_eq!(apply_isometry(&refl, &r).unwrap(), r);
            }
        }
    }

    #[test]
    fn hole_orientation_follows_subregion() {
        let mut s = SnowflakeSpec::plain(4, 2);
        s.a = [LabelSet::full(4); 6];
        s.b = [LabelSet::new(&[2, 3, 4]); 6];
        for flipped in [false, true] {
            s.flipped = flipped;
            for h in s.holes() {
                let expect = if h.set.is_odd() { Orientation::Down } else { Orientation::Up };
                assert_eq!(h.cell.orient, expect, "{}", h.set);
                assert_eq!(h.line, s.axis_line(h.set.dendrite()), "{}", h.set);
            }
            let r = build_snowflake(&s).unwrap();
            assert_eq!(r.len(), cell_count(4, 2) - 6 * 4 - 6 * 3);
        }
    }

    #[test]
    fn label_one_collision_on_triangle_corner() {
        let mut s = SnowflakeSpec::plain(3, 1);
        s.a[0] = LabelSet::new(&[1]);
        s.b[0] = LabelSet::new(&[1]);
        assert!(matches!(build_snowflake(&s), Err(Error::HoleCollision(..))));
        // Trapezoid label 1 on both sides only collides when x = 0.
        let mut s = SnowflakeSpec::plain(3, 1);
        s.a[1] = LabelSet::new(&[1]);
        s.b[1] = LabelSet::new(&[1]);
        assert!(build_snowflake(&s).is_ok());
        assert!(flip_spec(&s).is_err());
        s.x = 0;
        assert!(build_snowflake(&s).is_err());
    }

    #[test]
    fn labels_out_of_range() {
        let mut s = SnowflakeSpec::plain(7, 3);
        s.b[3] = LabelSet::new(&[9]);
        assert!(matches!(build_snowflake(&s), Err(Error::LabelOutOfRange { label: 9, .. })));
    }

    #[test]
    fn n7_x3_cell_count() {
        let s = sample_snowflake_7_3();
        let holes: usize = s.all_sets().map(|(_, l)| l.len()).sum();
        assert_eq!(holes, 24);
        let r = build_snowflake(&s).unwrap();
        assert_eq!(r.len(), build_h(7, 3).len() - holes);
        let f = build_snowflake(&flip_spec(&s).unwrap()).unwrap();
        assert_eq!(f.len(), r.len());
    }

    #[test]
    fn flip_is_an_involution_and_x_zero_is_trivial() {
        let s = sample_snowflake_7_3();
        assert_eq!(flip_spec(&flip_spec(&s).unwrap()).unwrap(), s);
        let mut z = s;
        z.x = 0;
        let a = build_snowflake(&z).unwrap();
        let b = build_snowflake(&flip_spec(&z).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn flipped_region_half_turn_is_a_snowflake() {
        let mut s = sample_snowflake_7_3();
        s.flipped = true;
        let r = build_snowflake(&s).unwrap();
        let half = Isometry::new(IsometryKind::Rotate180, s.half_turn_center());
        let image = apply_isometry(&half, &r).unwrap();
        let conj = s.half_turn_conjugate();
        assert!(!conj.flipped);
        assert_eq!(image, build_snowflake(&conj).unwrap());
    }

    #[test]
    fn dendrites_hold_the_right_sets() {
        let s = sample_snowflake_7_3();
        let [h, p, n] = s.dendrites();
        let ids = |d: &Dendrite| {
            let mut v: Vec<String> = d.holes.iter().map(|h| h.set.to_string()).collect();
            v.dedup();
            v
        };
        assert_eq!(ids(&h), ["A3", "A6", "B2", "B5"]);
        assert_eq!(ids(&p), ["A2", "A5", "B1", "B4"]);
        assert_eq!(ids(&n), ["A1", "A4", "B3", "B6"]);
    }
}
