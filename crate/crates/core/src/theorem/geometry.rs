//! The distance-product form of the flip ratio.
//!
//! Each unit hole shares a lattice line with one side of the central
//! triangle. Its factor is the product of its distances to the unit cells
//! of the central triangle that sit on that line: down-pointing holes
//! contribute to the numerator, up-pointing ones to the denominator.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use super::Ratio;
use crate::error::{Error, Result};
use crate::lattice::{LatticeLine, LineBounds, TriCell};
use crate::regions::SnowflakeSpec;

fn not_supported(c: TriCell, line: LatticeLine) -> Error {
    Error::Invalid(format!("{c} has no side on {:?} line {}", line.family, line.offset))
}

/// Distance between the midpoints of the sides the two cells have on `line`.
pub fn distance(t1: TriCell, t2: TriCell, line: LatticeLine) -> Result<u64> {
    for t in [t1, t2] {
        if !line.supports(t) {
            return Err(not_supported(t, line));
        }
    }
    Ok(line.position(t1).abs_diff(line.position(t2)))
}

/// The unit cells of triangle `c` with a side on `line`, in line order.
pub fn projection(c: &LineBounds, line: LatticeLine) -> Result<Vec<TriCell>> {
    let k = c.u.1 - c.u.0;
    let mut cells: Vec<TriCell> = c.region().iter().copied().filter(|&t| line.supports(t)).collect();
    if k <= 0 || cells.len() as i64 != k {
        return Err(Error::Invalid(format!("triangle is not supported on {:?} line {}", line.family, line.offset)));
    }
    cells.sort_by_key(|&t| line.position(t));
    Ok(cells)
}

/// The flip ratio computed from hole positions alone.
pub fn ratio_rhs_geometric(s: &SnowflakeSpec) -> Ratio {
    let base = SnowflakeSpec { flipped: false, ..*s };
    let central = base.central_hole();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for hole in base.holes() {
        if s.x == 0 {
            break;
        }
        let proj = projection(&central, hole.line).expect("each arm lies on a side line of the central triangle");
        let d: BigUint = proj
            .iter()
            .map(|&t| BigUint::from(distance(hole.cell, t, hole.line).expect("both on the line")))
            .product();
        if hole.cell.is_up() {
            den *= d;
        } else {
            num *= d;
        }
    }
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
