//! Worked flips where forced lozenges are trimmed away before comparing.
//!
//! Removing a forced lozenge does not change a tiling count, so the flip
//! ratio of the trimmed regions is still the snowflake formula even though
//! the trimmed regions are no longer snowflakes.

use crate::counting::SymmetryTag;
use crate::error::Result;
use crate::lattice::{Lozenge, Region};
use crate::regions::{build_snowflake, flip_spec, forced_lozenges, LabelSet, SnowflakeSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DemoFixture {
    pub name: &'static str,
    pub spec: SnowflakeSpec,
    /// `Plain` compares all tilings, `R` cyclically symmetric ones.
    pub class: SymmetryTag,
}

/// A region with its forced lozenges removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trimmed {
    pub region: Region,
    pub forced: Vec<Lozenge>,
}

fn trim(s: &SnowflakeSpec) -> Result<Trimmed> {
    let full = build_snowflake(s)?;
    let forced = forced_lozenges(&full)?;
    let region = full.without(forced.iter().flat_map(|l| [&l.a, &l.b]));
    Ok(Trimmed { region, forced })
}

impl DemoFixture {
    /// The trimmed original and trimmed flipped regions.
    pub fn trimmed(&self) -> Result<(Trimmed, Trimmed)> {
        Ok((trim(&self.spec)?, trim(&flip_spec(&self.spec)?)?))
    }
}

fn sets(v: [&[u32]; 6]) -> [LabelSet; 6] {
    v.map(LabelSet::new)
}

/// A unit central triangle flipped inside a region with holes on all
/// three lines.
pub fn triangle_flip() -> DemoFixture {
    let spec = SnowflakeSpec {
        n: 3,
        x: 1,
        a: sets([&[2], &[], &[3], &[1], &[], &[2]]),
        b: sets([&[], &[3], &[1], &[], &[2], &[1]]),
        flipped: false,
    };
    DemoFixture { name: "triangle_flip", spec, class: SymmetryTag::Plain }
}

/// Holes crowded against the central triangle on one side, which squeeze
/// into the flipped triangle's corners.
pub fn bowtie_squeeze() -> DemoFixture {
    let spec = SnowflakeSpec {
        n: 3,
        x: 2,
        a: sets([&[], &[1], &[2], &[1], &[], &[]]),
        b: sets([&[2], &[], &[], &[], &[1], &[3]]),
        flipped: false,
    };
    DemoFixture { name: "bowtie_squeeze", spec, class: SymmetryTag::Plain }
}

/// A cyclically symmetric region whose central hole grows three lobes of
/// holes, compared through cyclically symmetric tilings.
pub fn shamrock() -> DemoFixture {
    let odd = LabelSet::new(&[2]);
    let even = LabelSet::new(&[1]);
    let spec = SnowflakeSpec {
        n: 3,
        x: 2,
        a: [odd, LabelSet::EMPTY, odd, LabelSet::EMPTY, odd, LabelSet::EMPTY],
        b: [LabelSet::EMPTY, even, LabelSet::EMPTY, even, LabelSet::EMPTY, even],
        flipped: false,
    };
    DemoFixture { name: "shamrock", spec, class: SymmetryTag::R }
}

pub fn demo_fixtures() -> [DemoFixture; 3] {
    [triangle_flip(), bowtie_squeeze(), shamrock()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{count_determinant, count_symmetric, SymmetryClass};
    use crate::theorem::{ratio_rhs_cyclic, ratio_rhs_snowflake, Ratio};
    use num_bigint::BigInt;
    use num_traits::Zero;

    #[test]
    fn trimmed_ratios_match_formulas() {
        for fx in demo_fixtures() {
            let (pre, post) = fx.trimmed().unwrap();
            assert!(pre.region.len() < build_snowflake(&fx.spec).unwrap().len() || pre.forced.is_empty());
            let (m, mb, formula) = match fx.class {
                SymmetryTag::R => {
                    let flipped = flip_spec(&fx.spec).unwrap();
                    let c = SymmetryClass::new(SymmetryTag::R, fx.spec.center());
                    let cb = SymmetryClass::new(SymmetryTag::R, flipped.center());
                    (
                        count_symmetric(&pre.region, &c).unwrap(),
                        count_symmetric(&post.region, &cb).unwrap(),
                        ratio_rhs_cyclic(&fx.spec).unwrap(),
                    )
                }
                _ => (
                    count_determinant(&pre.region).unwrap(),
                    count_determinant(&post.region).unwrap(),
                    ratio_rhs_snowflake(&fx.spec),
                ),
            };
            assert!(!m.is_zero(), "{}", fx.name);
            assert_eq!(Ratio::new(BigInt::from(mb), BigInt::from(m)), formula, "{}", fx.name);
        }
    }
}
