//! Closed-form right-hand sides of the flip ratio identities.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lgv::pochhammer_product;
use crate::regions::{LabelSet, SnowflakeSpec};

pub type Ratio = BigRational;

fn product(sets: impl IntoIterator<Item = LabelSet>, x: u32) -> BigUint {
    sets.into_iter().map(|s| pochhammer_product(s.iter(), x)).product()
}

fn ratio(num: BigUint, den: BigUint) -> Ratio {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The multiset `A₁ ⊎ A₃ ⊎ A₅` (`odd`) or `A₂ ⊎ A₄ ⊎ A₆` as a sorted list.
pub fn multiset(sets: &[LabelSet; 6], odd: bool) -> Vec<u32> {
    let start = if odd { 0 } else { 1 };
    let mut out: Vec<u32> = (start..6).step_by(2).flat_map(|i| sets[i].iter()).collect();
    out.sort_unstable();
    out
}

/// `Π_{A_o}(a)_x Π_{B_o}(b)_x / Π_{A_e}(a)_x Π_{B_e}(b)_x`.
pub fn ratio_rhs_snowflake(s: &SnowflakeSpec) -> Ratio {
    let odd = |v: &[LabelSet; 6]| product((0..6).step_by(2).map(|i| v[i]), s.x);
    let even = |v: &[LabelSet; 6]| product((1..6).step_by(2).map(|i| v[i]), s.x);
    ratio(odd(&s.a) * odd(&s.b), even(&s.a) * even(&s.b))
}

/// `Π_{A₁}(a)_x Π_{B₁}(b)_x / Π_{A₂}(a)_x Π_{B₂}(b)_x` for cyclic specs.
pub fn ratio_rhs_cyclic(s: &SnowflakeSpec) -> Result<Ratio> {
    if !s.is_cyclic() {
        return Err(Error::NotSymmetric("cyclic"));
    }
    Ok(ratio(product([s.a[0], s.b[0]], s.x), product([s.a[1], s.b[1]], s.x)))
}

/// `Π_{A_o}(a)_x / Π_{A_e}(a)_x` for vertically symmetric specs.
pub fn ratio_rhs_vertical(s: &SnowflakeSpec) -> Result<Ratio> {
    if !s.is_vertical() {
        return Err(Error::NotSymmetric("vertical"));
    }
    let odd = product((0..6).step_by(2).map(|i| s.a[i]), s.x);
    let even = product((1..6).step_by(2).map(|i| s.a[i]), s.x);
    Ok(ratio(odd, even))
}

/// `Π_{A₁}(a)_x / Π_{A₂}(a)_x` for specs both cyclic and vertical.
pub fn ratio_rhs_cyclic_vertical(s: &SnowflakeSpec) -> Result<Ratio> {
    if !(s.is_cyclic() && s.is_vertical()) {
        return Err(Error::NotSymmetric("cyclic and vertical"));
    }
    Ok(ratio(product([s.a[0]], s.x), product([s.a[1]], s.x)))
}

/// Tilings of the hexagon with sides `a, b, c`: the product of
/// `(i + j + k − 1) / (i + j + k − 2)` over the `a × b × c` box, evaluated
/// exactly and checked to be an integer.
pub fn macmahon(a: u32, b: u32, c: u32) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=u64::from(a) {
        for j in 1..=u64::from(b) {
            for k in 1..=u64::from(c) {
                num *= i + j + k - 1;
                den *= i + j + k - 2;
            }
        }
    }
    let r = BigRational::new(num.into(), den.into());
    assert!(r.is_integer(), "box product is integral");
    r.to_integer().to_biguint().expect("positive")
}
