//! Non-intersecting lattice paths on `Z²` with south and east steps, and the
//! path-family count of L-regions.
//!
//! Tilings of an L-region are split into classes `U` by the points
//! `(x + u, x + u)` where the paths cross the diagonal. Each class is a
//! product of two LGV determinants.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::counting::Count;
use crate::error::{Error, Result};
use crate::linalg::{binomial, determinant};
use crate::par::Exec;
use crate::regions::{LSpec, LabelSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }
}

/// Starts and ends listed so that start `k` is joined to end `k` in every
/// non-intersecting family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathSystem {
    pub starts: Vec<LatticePoint>,
    pub ends: Vec<LatticePoint>,
}

/// The diagonal labels a path family passes through.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UPartitionClass {
    pub u: LabelSet,
}

impl UPartitionClass {
    /// All admissible classes in lexicographic order: subsets of
    /// `[n] \ (Q ∪ R)` of size `|P| − |Q' ∩ R|`. Empty when that size is
    /// negative or the second path system would be unbalanced.
    pub fn all(s: &LSpec) -> Vec<UPartitionClass> {
        let Some(k) = class_size(s) else {
            return Vec::new();
        };
        let free = LabelSet::full(s.n).difference(s.q.union(s.r));
        free.subsets_of_size(k).into_iter().map(|u| UPartitionClass { u }).collect()
    }

    pub fn is_admissible(&self, s: &LSpec) -> bool {
        let free = LabelSet::full(s.n).difference(s.q.union(s.r));
        class_size(s) == Some(self.u.len()) && self.u.is_subset(free)
    }
}

fn only_r(s: &LSpec) -> LabelSet {
    s.r.difference(s.q)
}

fn only_q(s: &LSpec) -> LabelSet {
    s.q.difference(s.r)
}

fn class_size(s: &LSpec) -> Option<usize> {
    let k = s.p.len().checked_sub(only_r(s).len())?;
    (only_q(s).len() + k == s.s.len()).then_some(k)
}

/// Rising factorial `a (a + 1) ⋯ (a + k − 1)`.
pub fn pochhammer(a: i64, k: u32) -> Result<Count> {
    if a <= 0 {
        return Err(Error::NonPositivePochhammer(a));
    }
    Ok((0..i64::from(k)).fold(BigUint::one(), |acc, i| acc * BigUint::from((a + i) as u64)))
}

/// Number of south/east paths from `p` to `q`.
pub fn path_count(p: LatticePoint, q: LatticePoint) -> Count {
    let (east, south) = (q.x - p.x, p.y - q.y);
    if east < 0 || south < 0 {
        return BigUint::ZERO;
    }
    binomial(east + south, east)
}

fn lgv_determinant(sys: &PathSystem) -> Result<BigInt> {
    if sys.starts.len() != sys.ends.len() {
        return Err(Error::PathSystemMismatch { starts: sys.starts.len(), ends: sys.ends.len() });
    }
    let m: Vec<Vec<BigInt>> = sys
        .starts
        .iter()
        .map(|&a| sys.ends.iter().map(|&b| BigInt::from(path_count(a, b))).collect())
        .collect();
    Ok(determinant(&m))
}

/// Number of non-intersecting path families of a compatible system.
pub fn lgv_count(sys: &PathSystem) -> Result<Count> {
    let d = lgv_determinant(sys)?;
    d.to_biguint().ok_or(Error::NegativeSummand(Vec::new()))
}

/// Paths for the hexagon with sides `a, b, c`: start `i` at `(i, i)` and
/// end `j` at `(b + j, j − c)`, giving the matrix `C(b + c, b − i + j)`.
pub fn hexagon_path_system(a: u32, b: u32, c: u32) -> PathSystem {
    let (b, c) = (i64::from(b), i64::from(c));
    PathSystem {
        starts: (1..=i64::from(a)).map(|i| LatticePoint::new(i, i)).collect(),
        ends: (1..=i64::from(a)).map(|j| LatticePoint::new(b + j, j - c)).collect(),
    }
}

/// The two path systems of class `u`: from the `P` starts to the diagonal,
/// and from the diagonal to the `S` ends.
pub fn l_region_path_system(s: &LSpec, u: &UPartitionClass) -> Result<(PathSystem, PathSystem)> {
    if !u.is_admissible(s) {
        return Err(Error::InvalidUClass(u.u.to_vec()));
    }
    let x = i64::from(s.x);
    let diag = |k: u32| LatticePoint::new(x + i64::from(k), x + i64::from(k));
    // Barred regions start on the left side and end above the diagonal.
    let (start_u, end_v) = if s.barred { (1, x + 1) } else { (x + 1, 1) };
    let first = PathSystem {
        starts: s.p.iter().map(|p| LatticePoint::new(start_u, x + i64::from(p))).collect(),
        ends: only_r(s).union(u.u).iter().map(diag).collect(),
    };
    let second = PathSystem {
        starts: only_q(s).union(u.u).iter().map(diag).collect(),
        ends: s.s.iter().map(|t| LatticePoint::new(x + i64::from(t), end_v)).collect(),
    };
    Ok((first, second))
}

/// Every class with its summand, in class order.
pub fn lgv_summands(s: &LSpec) -> Result<Vec<(UPartitionClass, Count)>> {
    lgv_summands_with(s, Exec::Sequential)
}

pub fn lgv_summands_with(s: &LSpec, exec: Exec) -> Result<Vec<(UPartitionClass, Count)>> {
    s.validate()?;
    let classes = UPartitionClass::all(s);
    exec.map(&classes, |u| {
        let (a, b) = l_region_path_system(s, u)?;
        let v = lgv_determinant(&a)? * lgv_determinant(&b)?;
        if v.is_negative() {
            return Err(Error::NegativeSummand(u.u.to_vec()));
        }
        Ok((*u, v.to_biguint().expect("checked sign")))
    })
    .into_iter()
    .collect()
}

/// Tiling count of the (barred or unbarred) L-region as a sum over classes.
#[allow(non_snake_case)]
pub fn count_L_lgv(s: &LSpec) -> Result<Count> {
    Ok(lgv_summands(s)?.into_iter().map(|(_, c)| c).sum())
}

#[allow(non_snake_case)]
pub fn count_L_lgv_with(s: &LSpec, exec: Exec) -> Result<Count> {
    Ok(lgv_summands_with(s, exec)?.into_iter().map(|(_, c)| c).sum())
}

/// Product of `(a)_x` over a label set.
pub(crate) fn pochhammer_product(set: impl IntoIterator<Item = u32>, x: u32) -> BigUint {
    set.into_iter()
        .map(|a| pochhammer(i64::from(a), x).expect("labels are positive"))
        .product()
}

/// The predicted barred-to-unbarred ratio of an L-region.
#[allow(non_snake_case)]
pub fn ratio_rhs_L(s: &LSpec) -> BigRational {
    let x = s.x;
    let num = pochhammer_product(s.p.iter(), x) * pochhammer_product(s.q.iter(), x);
    let den = pochhammer_product(s.r.iter(), x) * pochhammer_product(s.s.iter(), x);
    BigRational::new(num.into(), den.into())
}

/// Checks `det[C(x+p_i−1, x+r_j−1)] · Π(r_j)_x = Π(p_i)_x · det[C(p_i−1, r_j−1)]`
/// with both sides computed independently.
pub fn factorization_check(p: &[u32], r: &[u32], x: u32) -> bool {
    if p.len() != r.len() || p.iter().chain(r).any(|&v| v == 0) {
        return false;
    }
    let xi = i64::from(x);
    let matrix = |shift: i64| -> Vec<Vec<BigInt>> {
        p.iter()
            .map(|&pi| r.iter().map(|&rj| BigInt::from(binomial(shift + i64::from(pi) - 1, shift + i64::from(rj) - 1))).collect())
            .collect()
    };
    let lhs = determinant(&matrix(xi)) * BigInt::from(pochhammer_product(r.iter().copied(), x));
    let rhs = determinant(&matrix(0)) * BigInt::from(pochhammer_product(p.iter().copied(), x));
    lhs == rhs
}
