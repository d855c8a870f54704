//! Exact integer determinants by Bareiss fraction-free elimination.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Determinant of a square matrix given as rows. The empty matrix has
/// determinant 1.
pub fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..n {
                // Exact by Sylvester's identity.
                let num = &row[j] * pivot - &factor * &pivot_row[j];
                row[j] = if prev.is_one() { num } else { num.div_floor(&prev) };
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Determinant of a matrix with small entries.
pub fn determinant_i64(rows: &[Vec<i64>]) -> BigInt {
    let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    determinant(&big)
}

/// `C(n, k)`, zero whenever `k < 0` or `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from((n - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Leibniz expansion over all permutations.
    fn leibniz(m: &[Vec<i64>]) -> i128 {
        fn rec(m: &[Vec<i64>], row: usize, used: &mut Vec<bool>, sign: i128, acc: i128, out: &mut i128) {
            let n = m.len();
            if row == n {
                *out += sign * acc;
                return;
            }
            let mut s = sign;
            for c in 0..n {
                if used[c] {
                    continue;
                }
                // sign flips for every unused column left of c
                used[c] = true;
                rec(m, row + 1, used, s, acc * m[row][c] as i128, out);
                used[c] = false;
                s = -s;
            }
        }
        let mut out = 0;
        rec(m, 0, &mut vec![false; m.len()], 1, 1, &mut out);
        out
    }

    #[test]
    fn small_cases() {
        assert_eq!(determinant(&[]), BigInt::one());
        assert_eq!(determinant_i64(&[vec![7]]), BigInt::from(7));
        assert_eq!(determinant_i64(&[vec![1, 0], vec![1, 1]]), BigInt::from(1));
        assert_eq!(determinant_i64(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant_i64(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
        assert_eq!(determinant_i64(&[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]), BigInt::from(-1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(3, -1), BigUint::zero());
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(n in 0usize..6, seed in proptest::collection::vec(-9i64..10, 36)) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| seed[i * 6 + j]).collect()).collect();
            prop_assert_eq!(determinant_i64(&m), BigInt::from(leibniz(&m)));
        }
    }
}
