//! The JSON region-spec file format.

use std::path::Path;

use lozenge_core::lattice::{Orientation, Region, TriCell};
use lozenge_core::regions::{build_hexagon, build_l, build_snowflake_shifted, LSpec, LabelSet, SnowflakeSpec};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum RegionSpecFile {
    #[serde(rename = "hexagon")]
    Hexagon { a: u32, b: u32, c: u32 },
    /// `H_{n,x}` with no unit holes.
    H { n: u32, x: u32 },
    #[serde(rename = "snowflake")]
    Snowflake {
        n: u32,
        x: u32,
        #[serde(rename = "A")]
        a: [LabelSet; 6],
        #[serde(rename = "B")]
        b: [LabelSet; 6],
        #[serde(default)]
        flipped: bool,
        /// Places every hole this many positions past its label. Only
        /// useful as a negative control.
        #[serde(default, skip_serializing_if = "is_zero")]
        hole_shift: u32,
    },
    #[serde(rename = "l_region")]
    LRegion {
        n: u32,
        x: u32,
        #[serde(rename = "P")]
        p: LabelSet,
        #[serde(rename = "Q")]
        q: LabelSet,
        #[serde(rename = "R")]
        r: LabelSet,
        #[serde(rename = "S")]
        s: LabelSet,
        #[serde(default)]
        barred: bool,
    },
    #[serde(rename = "explicit")]
    Explicit { cells: Vec<(i64, i64, Orientation)> },
}

fn is_zero(v: &u32) -> bool {
    *v == 0
}

impl RegionSpecFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("bad spec file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec files always serialize")
    }

    pub fn from_snowflake(s: &SnowflakeSpec) -> Self {
        RegionSpecFile::Snowflake { n: s.n, x: s.x, a: s.a, b: s.b, flipped: s.flipped, hole_shift: 0 }
    }

    /// The snowflake spec and hole shift, for the `H` and `snowflake` types.
    pub fn snowflake(&self) -> Option<(SnowflakeSpec, u32)> {
        match *self {
            RegionSpecFile::H { n, x } => Some((SnowflakeSpec::plain(n, x), 0)),
            RegionSpecFile::Snowflake { n, x, a, b, flipped, hole_shift } => {
                Some((SnowflakeSpec { n, x, a, b, flipped }, hole_shift))
            }
            _ => None,
        }
    }

    pub fn l_spec(&self) -> Option<LSpec> {
        match *self {
            RegionSpecFile::LRegion { n, x, p, q, r, s, barred } => Some(LSpec { n, x, p, q, r, s, barred }),
            _ => None,
        }
    }

    pub fn build(&self) -> Result<Region, CliError> {
        if let Some((s, shift)) = self.snowflake() {
            return Ok(build_snowflake_shifted(&s, shift)?);
        }
        if let Some(l) = self.l_spec() {
            return Ok(build_l(&l)?);
        }
        match self {
            RegionSpecFile::Hexagon { a, b, c } => Ok(build_hexagon(*a, *b, *c)),
            RegionSpecFile::Explicit { cells } => {
                let mut r = Region::new();
                for &(i, j, o) in cells {
                    if !r.insert(TriCell::new(i, j, o)) {
                        return Err(CliError::Invalid(format!("cell {} is listed twice", TriCell::new(i, j, o))));
                    }
                }
                Ok(r)
            }
            _ => unreachable!("handled above"),
        }
    }
}
