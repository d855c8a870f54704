//! Verification reports tying the counting routes to the ratio formulas.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use super::{
    count_h_via_decomposition, cyclic_count_via_l, ratio_rhs_cyclic, ratio_rhs_cyclic_vertical, ratio_rhs_geometric,
    ratio_rhs_snowflake, ratio_rhs_vertical, Ratio,
};
use crate::counting::{count_determinant, count_enumeration, count_symmetric, Count, SymmetryClass, SymmetryTag};
use crate::error::{Error, Result};
use crate::regions::{build_snowflake, build_snowflake_shifted, flip_spec, SnowflakeSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Enumeration,
    Determinant,
    Decomposition,
}

/// Which counts [`verify`] computes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Routes {
    pub counts: Vec<Route>,
    /// Also check the symmetry-class identities when the regions qualify.
    pub symmetric: bool,
}

impl Default for Routes {
    fn default() -> Self {
        Routes { counts: vec![Route::Determinant], symmetric: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RouteCounts {
    pub route: Route,
    pub h: String,
    pub h_bar: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryCheck {
    pub class: SymmetryTag,
    pub h: String,
    pub h_bar: String,
    pub measured_ratio: Option<String>,
    pub formula_ratio: String,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Neither region has a tiling, so there is no ratio to check.
    HypothesisUnmet,
}

impl Verdict {
    pub fn is_success(self) -> bool {
        self != Verdict::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub spec: SnowflakeSpec,
    pub counts: Vec<RouteCounts>,
    pub measured_ratio: Option<String>,
    pub formula_ratio: String,
    pub geometric_ratio: String,
    pub symmetry: Vec<SymmetryCheck>,
    pub failures: Vec<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

fn ratio_of(num: &Count, den: &Count) -> Ratio {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

fn count_route(route: Route, s: &SnowflakeSpec, shift: u32) -> Result<Count> {
    let r = build_snowflake_shifted(s, shift)?;
    match route {
        Route::Enumeration => Ok(count_enumeration(&r)),
        Route::Determinant => count_determinant(&r),
        Route::Decomposition if shift == 0 => count_h_via_decomposition(s),
        Route::Decomposition => Err(Error::Invalid("the decomposition route needs unshifted holes".into())),
    }
}

/// Counts `H` and its flip by every selected route and checks the flip
/// ratio, its geometric form and any applicable symmetry-class ratios.
/// A flipped `s` is verified through its unflipped counterpart.
pub fn verify(s: &SnowflakeSpec, routes: &Routes) -> Result<VerificationReport> {
    verify_shifted(s, 0, routes)
}

/// [`verify`] on regions whose holes sit `shift` positions away from their
/// labels, while the formulas still read the labels. Any `shift > 0` breaks
/// the placement convention, so this is a negative control.
pub fn verify_shifted(s: &SnowflakeSpec, shift: u32, routes: &Routes) -> Result<VerificationReport> {
    let h = SnowflakeSpec { flipped: false, ..*s };
    let hb = flip_spec(&h)?;
    build_snowflake_shifted(&h, shift)?;
    build_snowflake_shifted(&hb, shift)?;

    let mut failures = Vec::new();
    let mut counts = Vec::new();
    let mut pairs: Vec<(Count, Count)> = Vec::new();
    for &route in &routes.counts {
        let pair = (count_route(route, &h, shift)?, count_route(route, &hb, shift)?);
        counts.push(RouteCounts { route, h: pair.0.to_string(), h_bar: pair.1.to_string() });
        pairs.push(pair);
    }
    if pairs.windows(2).any(|w| w[0] != w[1]) {
        failures.push("counting routes disagree".to_string());
    }

    let formula = ratio_rhs_snowflake(&h);
    let geometric = ratio_rhs_geometric(&h);
    if geometric != formula {
        failures.push(format!("geometric ratio {geometric} differs from formula {formula}"));
    }

    let mut measured = None;
    let mut vacuous = false;
    if let Some((m, mb)) = pairs.first() {
        if m.is_zero() {
            vacuous = true;
            if !mb.is_zero() {
                failures.push("flipped region is tileable but the original is not".to_string());
            }
        } else {
            let r = ratio_of(mb, m);
            if r != formula {
                failures.push(format!("measured ratio {r} differs from formula {formula}"));
            }
            measured = Some(r);
        }
    }

    let mut symmetry = Vec::new();
    if routes.symmetric && shift == 0 {
        for tag in [SymmetryTag::R, SymmetryTag::V, SymmetryTag::Rv] {
            if let Some(check) = check_symmetry(tag, &h, &hb, measured.as_ref(), &mut failures)? {
                symmetry.push(check);
            }
        }
    }

    let verdict = if !failures.is_empty() {
        Verdict::Fail
    } else if vacuous {
        Verdict::HypothesisUnmet
    } else {
        Verdict::Pass
    };
    Ok(VerificationReport {
        spec: h,
        counts,
        measured_ratio: measured.map(|r| r.to_string()),
        formula_ratio: formula.to_string(),
        geometric_ratio: geometric.to_string(),
        symmetry,
        failures,
        verdict,
        elapsed_ms: None,
    })
}

fn check_symmetry(
    tag: SymmetryTag,
    h: &SnowflakeSpec,
    hb: &SnowflakeSpec,
    full: Option<&Ratio>,
    failures: &mut Vec<String>,
) -> Result<Option<SymmetryCheck>> {
    let (rh, rhb) = (build_snowflake(h)?, build_snowflake(hb)?);
    let (ch, chb) = (SymmetryClass::new(tag, h.center()), SymmetryClass::new(tag, hb.center()));
    if !(ch.preserves(&rh) && chb.preserves(&rhb)) {
        return Ok(None);
    }
    let (formula, power) = match tag {
        SymmetryTag::R => (ratio_rhs_cyclic(h), 3u32),
        SymmetryTag::V => (ratio_rhs_vertical(h), 2),
        SymmetryTag::Rv => (ratio_rhs_cyclic_vertical(h), 6),
        SymmetryTag::Plain => unreachable!("plain class is not checked"),
    };
    let formula = match formula {
        Ok(f) => f,
        // With x = 0 label-1 holes of different sets share cells, so the
        // region can be symmetric without the spec being so. Every factor
        // is (a)_0 = 1 then.
        Err(_) if h.x == 0 => Ratio::one(),
        Err(e) => {
            failures.push(format!("{tag:?}-symmetric regions but {e}"));
            return Ok(None);
        }
    };
    let mut holds = true;
    let mut fail = |msg: String| {
        holds = false;
        failures.push(msg);
    };
    if formula.clone().pow(power) != ratio_rhs_snowflake(h) {
        fail(format!("{tag:?} formula to the power {power} differs from the full formula"));
    }
    let (m, mb) = (count_symmetric(&rh, &ch)?, count_symmetric(&rhb, &chb)?);
    if tag == SymmetryTag::R && h.is_cyclic() && (cyclic_count_via_l(h)? != m || cyclic_count_via_l(hb)? != mb) {
        fail("cyclic count via L-regions differs from the orbit count".to_string());
    }
    let mut measured = None;
    if !m.is_zero() {
        let r = ratio_of(&mb, &m);
        if r != formula {
            fail(format!("{tag:?} measured ratio {r} differs from formula {formula}"));
        }
        if let Some(full) = full {
            if r.clone().pow(power) != *full {
                fail(format!("{tag:?} measured ratio to the power {power} differs from the full ratio"));
            }
        }
        measured = Some(r.to_string());
    }
    Ok(Some(SymmetryCheck {
        class: tag,
        h: m.to_string(),
        h_bar: mb.to_string(),
        measured_ratio: measured,
        formula_ratio: formula.to_string(),
        holds,
    }))
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.spec;
        writeln!(f, "spec: n={} x={}", s.n, s.x)?;
        for (k, (a, b)) in s.a.iter().zip(&s.b).enumerate() {
            writeln!(f, "  A{} = {a}  B{} = {b}", k + 1, k + 1)?;
        }
        for c in &self.counts {
            writeln!(f, "{:?}: M(H) = {}  M(H_bar) = {}", c.route, c.h, c.h_bar)?;
        }
        match &self.measured_ratio {
            Some(r) => writeln!(f, "measured ratio: {r}")?,
            None => writeln!(f, "measured ratio: none (M(H) = 0)")?,
        }
        writeln!(f, "formula ratio: {}", self.formula_ratio)?;
        writeln!(f, "geometric ratio: {}", self.geometric_ratio)?;
        for c in &self.symmetry {
            writeln!(
                f,
                "{:?}-symmetric: M(H) = {}  M(H_bar) = {}  measured = {}  formula = {}  {}",
                c.class,
                c.h,
                c.h_bar,
                c.measured_ratio.as_deref().unwrap_or("none"),
                c.formula_ratio,
                if c.holds { "ok" } else { "FAILED" }
            )?;
        }
        for msg in &self.failures {
            writeln!(f, "failure: {msg}")?;
        }
        if let Some(ms) = self.elapsed_ms {
            writeln!(f, "elapsed: {ms} ms")?;
        }
        let verdict = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::HypothesisUnmet => "hypothesis unmet (no tilings)",
        };
        write!(f, "verdict: {verdict}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::LabelSet;
    use crate::sample::Sampler;

    #[test]
    fn empty_spec_passes_with_unit_ratio() {
        let routes = Routes { counts: vec![Route::Enumeration, Route::Determinant, Route::Decomposition], symmetric: true };
        let r = verify(&SnowflakeSpec::plain(2, 1), &routes).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        assert_eq!(r.measured_ratio.as_deref(), Some("1"));
        assert_eq!(r.counts[0].h, r.counts[0].h_bar);
        assert_eq!(r.symmetry.len(), 3);
    }

    #[test]
    fn untileable_is_vacuous() {
        let mut s = SnowflakeSpec::plain(2, 1);
        s.a[0] = LabelSet::new(&[2]);
        s.a[2] = LabelSet::new(&[2]);
        s.b[0] = LabelSet::new(&[2]);
        s.b[3] = LabelSet::new(&[1]);
        s.a[1] = LabelSet::new(&[1]);
        s.a[5] = LabelSet::new(&[2]);
        let r = verify(&s, &Routes::default()).unwrap();
        if r.measured_ratio.is_none() {
            assert_eq!(r.verdict, Verdict::HypothesisUnmet);
        }
    }

    #[test]
    fn shifted_holes_fail() {
        use crate::regions::LabelSet;
        let mut s = SnowflakeSpec::plain(3, 2);
        s.a[0] = LabelSet::new(&[2]);
        s.a[1] = LabelSet::new(&[1]);
        s.a[3] = LabelSet::new(&[2]);
        s.b[0] = LabelSet::new(&[1]);
        s.b[3] = LabelSet::new(&[2]);
        s.b[4] = LabelSet::new(&[1]);
        let r = verify_shifted(&s, 1, &Routes::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail, "{r}");
        assert!(verify(&s, &Routes::default()).unwrap().verdict == Verdict::Pass);
    }

    #[test]
    fn random_specs_pass() {
        let mut sampler = Sampler::new(1);
        let routes = Routes { counts: vec![Route::Enumeration, Route::Determinant], symmetric: true };
        for _ in 0..30 {
            let s = sampler.snowflake(3, 2);
            let r = verify(&s, &routes).unwrap();
            assert!(r.verdict.is_success(), "{r}");
        }
        for _ in 0..10 {
            let s = sampler.cyclic_vertical(3, 1);
            let r = verify(&s, &routes).unwrap();
            assert!(r.verdict.is_success(), "{r}");
        }
    }
}
