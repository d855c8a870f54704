//! Counting snowflakes through their three L-region pieces.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::counting::Count;
use crate::error::{Error, Result};
use crate::lgv::count_L_lgv;
use crate::par::Exec;
use crate::regions::{decompose_h_into_l, LSpec, LabelSet, SnowflakeSpec, WTriple};

/// Tiling count of one piece; pieces whose holes overlap have none.
fn piece_count(s: &LSpec) -> Result<Count> {
    match count_L_lgv(s) {
        Err(Error::HoleCollision(..)) => Ok(BigUint::ZERO),
        other => other,
    }
}

/// Admissible values of `W_{2i+2}`: subsets of `[n]` avoiding `A_{2i+3} ∪ B_{2i+2}`.
fn w_choices(s: &SnowflakeSpec, i: usize) -> Vec<LabelSet> {
    let forbidden = s.a[(2 * i + 2) % 6].union(s.b[2 * i + 1]);
    LabelSet::full(s.n).difference(forbidden).subsets().collect()
}

pub fn count_h_via_decomposition(s: &SnowflakeSpec) -> Result<Count> {
    count_h_via_decomposition_with(s, Exec::default())
}

/// The sum over `W`-triples of the product of the three piece counts.
///
/// Piece `i` depends only on `(W_{2i}, W_{2i+2})`, so the triple sum is the
/// trace of a product of three transfer matrices indexed by those choices.
pub fn count_h_via_decomposition_with(s: &SnowflakeSpec, exec: Exec) -> Result<Count> {
    s.validate()?;
    let choices: [Vec<LabelSet>; 3] = std::array::from_fn(|i| w_choices(s, i));
    let mut mats: Vec<Vec<Vec<Count>>> = Vec::with_capacity(3);
    for i in 0..3 {
        let (rows, cols) = (&choices[(i + 2) % 3], &choices[i]);
        let cells: Vec<(usize, usize)> = (0..rows.len()).flat_map(|r| (0..cols.len()).map(move |c| (r, c))).collect();
        let values = exec.map(&cells, |&(r, c)| {
            let mut w: WTriple = [LabelSet::EMPTY; 3];
            w[(i + 2) % 3] = rows[r];
            w[i] = cols[c];
            let pieces = decompose_h_into_l(s, &w)?;
            piece_count(&pieces[i])
        });
        let mut m = vec![vec![BigUint::ZERO; cols.len()]; rows.len()];
        for (&(r, c), v) in cells.iter().zip(values) {
            m[r][c] = v?;
        }
        mats.push(m);
    }
    let prod = mat_mul(&mat_mul(&mats[0], &mats[1]), &mats[2]);
    Ok((0..prod.len()).map(|k| prod[k][k].clone()).sum())
}

fn mat_mul(a: &[Vec<Count>], b: &[Vec<Count>]) -> Vec<Vec<Count>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, brow)| x * &brow[c])
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// Cyclically symmetric tilings, counted on one third of the region: the
/// sum over `W₂` avoiding `A₁ ∪ B₂` of `M(L(A₁ ∪ W₂, B₁, A₂, B₂ ∪ W₂))`,
/// with barred pieces for flipped specs.
pub fn cyclic_count_via_l(s: &SnowflakeSpec) -> Result<Count> {
    s.validate()?;
    if !s.is_cyclic() {
        return Err(Error::NotSymmetric("cyclic"));
    }
    let mut total = BigUint::ZERO;
    for w in w_choices(s, 0) {
        let piece = decompose_h_into_l(s, &[w; 3])?[0];
        total += piece_count(&piece)?;
    }
    Ok(total)
}


#[cfg(test)]
mod fixture_tests {
    use super::*;
    use crate::counting::count_determinant;
    use crate::regions::{build_snowflake, sample_snowflake_7_3, flip_spec};

    #[test]
    fn large_fixture_both_orientations() {
        let s = sample_snowflake_7_3();
        for spec in [s, flip_spec(&s).unwrap()] {
            let direct = count_determinant(&build_snowflake(&spec).unwrap()).unwrap();
            assert!(!direct.is_zero());
            assert_eq!(count_h_via_decomposition(&spec).unwrap(), direct);
        }
    }
}
