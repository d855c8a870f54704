//! Triangular-lattice geometry.
//!
//! One family of lattice lines is horizontal. Lattice vertices are written in
//! skew coordinates `(u, v)`, meaning the planar point `u·e₁ + v·e₂` with
//! `e₁ = (1, 0)` and `e₂ = (1/2, √3/2)`. The three line families are then
//! `v = const` (horizontal), `u = const` (positive slope) and
//! `w = u + v = const` (negative slope).
//!
//! A unit triangle is addressed by `(i, j, orient)`: `i` is the row (the
//! `v` coordinate of its lower edge or vertex, counted from the bottom) and
//! `j` its skew column. The up-cell `(i, j, Up)` has vertices
//! `(j, i), (j+1, i), (j, i+1)`; the down-cell `(i, j, Down)` has vertices
//! `(j+1, i), (j, i+1), (j+1, i+1)`. Every other module only sees cells and
//! never depends on this embedding directly.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn opposite(self) -> Self {
        match self {
            Orientation::Up => Orientation::Down,
            Orientation::Down => Orientation::Up,
        }
    }
}

/// A unit triangle of the lattice. Ordered lexicographically by `(i, j, orient)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TriCell {
    pub i: i64,
    pub j: i64,
    pub orient: Orientation,
}

impl TriCell {
    pub const fn new(i: i64, j: i64, orient: Orientation) -> Self {
        TriCell { i, j, orient }
    }

    pub const fn up(i: i64, j: i64) -> Self {
        TriCell::new(i, j, Orientation::Up)
    }

    pub const fn down(i: i64, j: i64) -> Self {
        TriCell::new(i, j, Orientation::Down)
    }

    pub fn is_up(&self) -> bool {
        self.orient == Orientation::Up
    }

    /// The three corners in skew coordinates.
    pub fn vertices(&self) -> [(i64, i64); 3] {
        let (i, j) = (self.i, self.j);
        match self.orient {
            Orientation::Up => [(j, i), (j + 1, i), (j, i + 1)],
            Orientation::Down => [(j + 1, i), (j, i + 1), (j + 1, i + 1)],
        }
    }

    /// Centroid in skew coordinates.
    pub fn centroid(&self) -> Point {
        let third = match self.orient {
            Orientation::Up => Rational64::new(1, 3),
            Orientation::Down => Rational64::new(2, 3),
        };
        Point::new(
            Rational64::from_integer(self.j) + third,
            Rational64::from_integer(self.i) + third,
        )
    }

    /// Inverse of [`TriCell::centroid`]; `None` when `p` is not a cell centroid.
    pub fn from_centroid(p: &Point) -> Option<TriCell> {
        let fu = p.u - p.u.floor();
        let fv = p.v - p.v.floor();
        if fu != fv {
            return None;
        }
        let (i, j) = (p.v.floor().to_integer(), p.u.floor().to_integer());
        if fu == Rational64::new(1, 3) {
            Some(TriCell::up(i, j))
        } else if fu == Rational64::new(2, 3) {
            Some(TriCell::down(i, j))
        } else {
            None
        }
    }

    /// The lattice line carrying the side of this cell in the given family.
    pub fn side_line(&self, family: LineFamily) -> LatticeLine {
        let (i, j) = (self.i, self.j);
        let offset = match (self.orient, family) {
            (Orientation::Up, LineFamily::Horizontal) => i,
            (Orientation::Up, LineFamily::Positive) => j,
            (Orientation::Down, LineFamily::Horizontal) => i + 1,
            (Orientation::Down, LineFamily::Positive) => j + 1,
            (_, LineFamily::Negative) => i + j + 1,
        };
        LatticeLine { family, offset }
    }
}

impl fmt::Display for TriCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orient {
            Orientation::Up => "up",
            Orientation::Down => "down",
        };
        write!(f, "({}, {}, {})", self.i, self.j, o)
    }
}

/// The three cells sharing an edge with `c`, all of opposite orientation.
pub fn neighbors(c: TriCell) -> [TriCell; 3] {
    let (i, j) = (c.i, c.j);
    match c.orient {
        Orientation::Up => [
            TriCell::down(i - 1, j),
            TriCell::down(i, j - 1),
            TriCell::down(i, j),
        ],
        Orientation::Down => [
            TriCell::up(i + 1, j),
            TriCell::up(i, j + 1),
            TriCell::up(i, j),
        ],
    }
}

pub fn are_adjacent(a: TriCell, b: TriCell) -> bool {
    neighbors(a).contains(&b)
}

/// Named by the direction the lozenge leans; the shared edge of a
/// `Vertical` lozenge is horizontal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LozengeKind {
    Left,
    Vertical,
    Right,
}

/// Two adjacent cells. Stored with the up-cell first so that the pair is unordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lozenge {
    pub a: TriCell,
    pub b: TriCell,
    pub kind: LozengeKind,
}

impl Lozenge {
    pub fn cells(&self) -> [TriCell; 2] {
        [self.a, self.b]
    }

    pub fn contains(&self, c: TriCell) -> bool {
        self.a == c || self.b == c
    }
}

pub fn lozenge_of(a: TriCell, b: TriCell) -> Result<Lozenge, Error> {
    let (up, down) = match (a.orient, b.orient) {
        (Orientation::Up, Orientation::Down) => (a, b),
        (Orientation::Down, Orientation::Up) => (b, a),
        _ => return Err(Error::InvalidLozenge(a, b)),
    };
    let kind = if down == TriCell::down(up.i - 1, up.j) {
        LozengeKind::Vertical
    } else if down == TriCell::down(up.i, up.j - 1) {
        LozengeKind::Left
    } else if down == TriCell::down(up.i, up.j) {
        LozengeKind::Right
    } else {
        return Err(Error::InvalidLozenge(a, b));
    };
    Ok(Lozenge { a: up, b: down, kind })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineFamily {
    /// `v = offset`
    Horizontal,
    /// `u = offset`
    Positive,
    /// `u + v = offset`
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeLine {
    pub family: LineFamily,
    pub offset: i64,
}

impl LatticeLine {
    pub const fn horizontal(v: i64) -> Self {
        LatticeLine { family: LineFamily::Horizontal, offset: v }
    }

    pub const fn positive(u: i64) -> Self {
        LatticeLine { family: LineFamily::Positive, offset: u }
    }

    pub const fn negative(w: i64) -> Self {
        LatticeLine { family: LineFamily::Negative, offset: w }
    }

    pub fn supports(&self, c: TriCell) -> bool {
        c.side_line(self.family) == *self
    }

    /// Signed position of the midpoint of `c`'s side on this line, in unit
    /// steps along the line. Differences of positions are Euclidean distances.
    pub(crate) fn position(&self, c: TriCell) -> i64 {
        match self.family {
            LineFamily::Horizontal => c.j,
            LineFamily::Positive | LineFamily::Negative => c.i,
        }
    }
}

/// A finite set of cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Region {
    cells: BTreeSet<TriCell>,
}

impl Region {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cells(&self) -> &BTreeSet<TriCell> {
        &self.cells
    }

    pub fn iter(&self) -> impl Iterator<Item = &TriCell> + '_ {
        self.cells.iter()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: &TriCell) -> bool {
        self.cells.contains(c)
    }

    pub fn insert(&mut self, c: TriCell) -> bool {
        self.cells.insert(c)
    }

    pub fn remove(&mut self, c: &TriCell) -> bool {
        self.cells.remove(c)
    }

    pub fn up_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_up()).count()
    }

    pub fn down_count(&self) -> usize {
        self.cells.len() - self.up_count()
    }

    /// The region minus `cells`; cells not present are ignored.
    pub fn without<'a>(&self, cells: impl IntoIterator<Item = &'a TriCell>) -> Region {
        let mut out = self.clone();
        for c in cells {
            out.cells.remove(c);
        }
        out
    }

    pub fn translate(&self, du: i64, dv: i64) -> Region {
        self.cells
            .iter()
            .map(|c| TriCell::new(c.i + dv, c.j + du, c.orient))
            .collect()
    }

    /// Adjacent in-region pairs, each listed once as (up, down).
    pub fn adjacent_pairs(&self) -> Vec<(TriCell, TriCell)> {
        self.cells
            .iter()
            .filter(|c| c.is_up())
            .flat_map(|&c| {
                neighbors(c)
                    .into_iter()
                    .filter(|d| self.cells.contains(d))
                    .map(move |d| (c, d))
            })
            .collect()
    }
}

impl FromIterator<TriCell> for Region {
    fn from_iter<I: IntoIterator<Item = TriCell>>(iter: I) -> Self {
        Region { cells: iter.into_iter().collect() }
    }
}

impl<'a> IntoIterator for &'a Region {
    type Item = &'a TriCell;
    type IntoIter = std::collections::btree_set::Iter<'a, TriCell>;

    fn into_iter(self) -> Self::IntoIter {
        self.cells.iter()
    }
}

pub fn is_balanced(r: &Region) -> bool {
    r.up_count() == r.down_count()
}

/// Closed bounds on the three line coordinates `u`, `v` and `w = u + v`.
/// The cells of a convex lattice polygon are exactly the cells whose three
/// corners satisfy all six bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineBounds {
    pub u: (i64, i64),
    pub v: (i64, i64),
    pub w: (i64, i64),
}

impl LineBounds {
    pub fn contains_vertex(&self, (u, v): (i64, i64)) -> bool {
        let w = u + v;
        self.u.0 <= u && u <= self.u.1 && self.v.0 <= v && v <= self.v.1 && self.w.0 <= w && w <= self.w.1
    }

    pub fn contains(&self, c: TriCell) -> bool {
        c.vertices().iter().all(|&p| self.contains_vertex(p))
    }

    pub fn region(&self) -> Region {
        let mut out = Region::new();
        for i in self.v.0..self.v.1 {
            let lo = self.u.0.max(self.w.0 - i - 1);
            let hi = self.u.1.min(self.w.1 - i);
            for j in lo..=hi {
                for c in [TriCell::up(i, j), TriCell::down(i, j)] {
                    if self.contains(c) {
                        out.insert(c);
                    }
                }
            }
        }
        out
    }

    /// The up-pointing triangle of side `k` with lower-left corner `(u, v)`.
    pub fn up_triangle(u: i64, v: i64, k: i64) -> Self {
        LineBounds { u: (u, u + k), v: (v, v + k), w: (u + v, u + v + k) }
    }

    /// The down-pointing triangle of side `k` with upper-left corner `(u, v)`.
    pub fn down_triangle(u: i64, v: i64, k: i64) -> Self {
        LineBounds { u: (u, u + k), v: (v - k, v), w: (u + v, u + v + k) }
    }
}

/// A point in skew coordinates with exact rational entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub u: Rational64,
    pub v: Rational64,
}

impl Point {
    pub fn new(u: Rational64, v: Rational64) -> Self {
        Point { u, v }
    }

    pub fn integer(u: i64, v: i64) -> Self {
        Point::new(Rational64::from_integer(u), Rational64::from_integer(v))
    }

    /// Horizontal planar coordinate `u + v/2`.
    pub fn planar_x(&self) -> Rational64 {
        self.u + self.v / 2
    }

    /// `true` for lattice vertices, edge midpoints and cell centroids: the
    /// points about which some lattice symmetry is centered.
    fn is_symmetry_center(&self) -> bool {
        (self.u * 6).is_integer() && (self.v * 6).is_integer()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsometryKind {
    Identity,
    Rotate120,
    Rotate180,
    Rotate240,
    /// Reflection across the vertical line through the center.
    ReflectVertical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Isometry {
    pub kind: IsometryKind,
    pub center: Point,
}

impl Isometry {
    pub fn new(kind: IsometryKind, center: Point) -> Self {
        Isometry { kind, center }
    }

    pub fn identity() -> Self {
        Isometry::new(IsometryKind::Identity, Point::integer(0, 0))
    }

    pub fn map_point(&self, p: &Point) -> Point {
        let c = self.center;
        let (du, dv) = (p.u - c.u, p.v - c.v);
        // 120° counterclockwise sends e₁ to e₂ - e₁ and e₂ to -e₁.
        let (ru, rv) = match self.kind {
            IsometryKind::Identity => (du, dv),
            IsometryKind::Rotate120 => (-du - dv, du),
            IsometryKind::Rotate240 => (dv, -du - dv),
            IsometryKind::Rotate180 => (-du, -dv),
            IsometryKind::ReflectVertical => (-du - dv, dv),
        };
        Point::new(c.u + ru, c.v + rv)
    }

    pub fn map_cell(&self, c: TriCell) -> Result<TriCell, Error> {
        TriCell::from_centroid(&self.map_point(&c.centroid()))
            .ok_or(Error::IncompatibleCenter(self.kind))
    }

    /// `then ∘ self`, when it is again one of the supported kinds about the
    /// same center.
    pub fn compose(&self, then: &Isometry) -> Option<Isometry> {
        if self.center != then.center {
            return None;
        }
        let probe = [Point::integer(0, 0), Point::integer(1, 0), Point::integer(0, 1)];
        let images: Vec<Point> = probe.iter().map(|p| then.map_point(&self.map_point(p))).collect();
        ALL_KINDS
            .iter()
            .map(|&k| Isometry::new(k, self.center))
            .find(|cand| probe.iter().zip(&images).all(|(p, q)| cand.map_point(p) == *q))
    }
}

const ALL_KINDS: [IsometryKind; 5] = [
    IsometryKind::Identity,
    IsometryKind::Rotate120,
    IsometryKind::Rotate180,
    IsometryKind::Rotate240,
    IsometryKind::ReflectVertical,
];

pub fn apply_isometry(m: &Isometry, r: &Region) -> Result<Region, Error> {
    if !m.center.is_symmetry_center() {
        return Err(Error::IncompatibleCenter(m.kind));
    }
    r.iter().map(|&c| m.map_cell(c)).collect()
}

/// Convenience for rationals with small denominators.
pub fn rational(num: i64, den: i64) -> Rational64 {
    Rational64::new(num, den)
}
