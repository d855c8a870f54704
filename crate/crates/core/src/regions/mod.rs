//! Builders for every region family: MacMahon hexagons, snowflakes and their
//! flips, L-regions, plus the three-way split of a snowflake and forced
//! lozenge detection.

mod labels;
mod lregion;
mod snowflake;

pub use labels::{LabelSet, MAX_LABEL};
pub use lregion::{build_l, sample_l_7_3, LSpec};
pub use snowflake::{
    build_h, build_snowflake, build_snowflake_shifted, sample_snowflake_7_3, flip_spec, Dendrite, DendriteAxis, Hole,
    SetFamily, SetId, SnowflakeSpec,
};

use crate::counting::count_determinant;
use crate::error::{Error, Result};
use crate::lattice::{lozenge_of, LineBounds, Lozenge, Region};
use crate::par::Exec;

/// The hexagon with sides `a, b, c, a, b, c` clockwise from the top, with
/// its bottom-left corner at the origin.
pub fn build_hexagon(a: u32, b: u32, c: u32) -> Region {
    hexagon_bounds(a, b, c).region()
}

pub fn hexagon_bounds(a: u32, b: u32, c: u32) -> LineBounds {
    let (a, b, c) = (i64::from(a), i64::from(b), i64::from(c));
    LineBounds { u: (-b, a), v: (0, b + c), w: (0, a + c) }
}

/// `W = (W₂, W₄, W₆)`: labels of the lozenges crossing the arms
/// `R → right`, `L → bottom-left` and `U → top-left`.
pub type WTriple = [LabelSet; 3];

/// Checks `W_{2i} ∩ (A_{2i+1} ∪ B_{2i}) = ∅` (with `A₇ = A₁`) and `W_{2i} ⊆ [n]`.
pub fn check_w_triple(s: &SnowflakeSpec, w: &WTriple) -> Result<()> {
    for (i, wi) in w.iter().enumerate() {
        let forbidden = s.a[(2 * i + 2) % 6].union(s.b[2 * i + 1]);
        if !wi.is_disjoint(forbidden) {
            return Err(Error::InvalidWTriple(format!(
                "W{} = {} meets A{} ∪ B{}",
                2 * i + 2,
                wi,
                (2 * i + 2) % 6 + 1,
                2 * i + 2
            )));
        }
        if !wi.is_subset(LabelSet::full(s.n)) {
            return Err(Error::InvalidWTriple(format!("W{} = {} is not inside [{}]", 2 * i + 2, wi, s.n)));
        }
    }
    Ok(())
}

/// `(A_W, B^W)`: the snowflake with the lozenges named by `W` removed.
pub fn with_w_holes(s: &SnowflakeSpec, w: &WTriple) -> Result<SnowflakeSpec> {
    check_w_triple(s, w)?;
    let mut out = *s;
    for (i, &wi) in w.iter().enumerate() {
        out.a[(2 * i + 2) % 6] = out.a[(2 * i + 2) % 6].union(wi);
        out.b[2 * i + 1] = out.b[2 * i + 1].union(wi);
    }
    Ok(out)
}

/// The three L-regions `L(A_{2i−1} ∪ W_{2i−2}, B_{2i−1}, A_{2i}, B_{2i} ∪ W_{2i})`,
/// `W₀ = W₆`, barred exactly when `s` is flipped.
pub fn decompose_h_into_l(s: &SnowflakeSpec, w: &WTriple) -> Result<[LSpec; 3]> {
    check_w_triple(s, w)?;
    Ok(std::array::from_fn(|i| {
        let prev = w[(i + 2) % 3];
        LSpec {
            n: s.n,
            x: s.x,
            p: s.a[2 * i].union(prev),
            q: s.b[2 * i],
            r: s.a[2 * i + 1],
            s: s.b[2 * i + 1].union(w[i]),
            barred: s.flipped,
        }
    }))
}

/// Lozenges present in every tiling of `r`: the adjacent pairs whose removal
/// leaves the tiling count unchanged.
pub fn forced_lozenges(r: &Region) -> Result<Vec<Lozenge>> {
    forced_lozenges_with(r, Exec::default())
}

pub fn forced_lozenges_with(r: &Region, exec: Exec) -> Result<Vec<Lozenge>> {
    let total = count_determinant(r)?;
    if total == num_bigint::BigUint::ZERO {
        return Err(Error::Untileable);
    }
    let pairs = r.adjacent_pairs();
    let forced = exec.map(&pairs, |&(a, b)| -> Result<Option<Lozenge>> {
        let rest = r.without(&[a, b]);
        Ok((count_determinant(&rest)? == total).then(|| lozenge_of(a, b).expect("adjacent pair")))
    });
    let mut out = Vec::new();
    for f in forced {
        if let Some(l) = f? {
            out.push(l);
        }
    }
    out.sort();
    Ok(out)
}
