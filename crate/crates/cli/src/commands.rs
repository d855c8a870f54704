use std::fmt::Write;
use std::path::Path;
use std::time::Instant;

use lozenge_core::counting::{count_determinant, count_enumeration, enumerate_tilings, Count, SymmetryTag};
use lozenge_core::lgv::{count_L_lgv, hexagon_path_system, lgv_count};
use lozenge_core::par::Exec;
use lozenge_core::regions::SnowflakeSpec;
use lozenge_core::sample::Sampler;
use lozenge_core::theorem::{count_h_via_decomposition, macmahon, verify_shifted, Routes, Verdict, VerificationReport};

use crate::render::{render_svg, Scene};
use crate::spec_file::RegionSpecFile;
use crate::{CliError, EXIT_FAIL, EXIT_OK};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Enum,
    Det,
    /// Lattice paths: LGV for hexagons and L-regions, the L-decomposition
    /// for snowflakes.
    Lgv,
    All,
}

fn count_lgv(spec: &RegionSpecFile) -> Result<Option<Count>, CliError> {
    if let Some((s, shift)) = spec.snowflake() {
        return Ok((shift == 0).then(|| count_h_via_decomposition(&s)).transpose()?);
    }
    if let Some(l) = spec.l_spec() {
        return Ok(Some(count_L_lgv(&l)?));
    }
    match *spec {
        RegionSpecFile::Hexagon { a, b, c } => Ok(Some(lgv_count(&hexagon_path_system(a, b, c))?)),
        _ => Ok(None),
    }
}

pub fn cmd_count(spec: &RegionSpecFile, method: Method) -> Result<Outcome, CliError> {
    let region = spec.build()?;
    let mut results: Vec<(&str, Count)> = Vec::new();
    if matches!(method, Method::Enum | Method::All) {
        results.push(("enum", count_enumeration(&region)));
    }
    if matches!(method, Method::Det | Method::All) {
        results.push(("det", count_determinant(&region)?));
    }
    if matches!(method, Method::Lgv | Method::All) {
        match count_lgv(spec)? {
            Some(c) => results.push(("lgv", c)),
            None if method == Method::Lgv => {
                return Err(CliError::Invalid("this region type has no lattice-path count".into()))
            }
            None => {}
        }
    }
    let mut out = String::new();
    for (name, c) in &results {
        let _ = writeln!(out, "{name} {c}");
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    if !agree {
        out.push_str("methods disagree\n");
    }
    Ok(Outcome { stdout: out, code: if agree { EXIT_OK } else { EXIT_FAIL } })
}

fn snowflake_of(spec: &RegionSpecFile) -> Result<(SnowflakeSpec, u32), CliError> {
    spec.snowflake().ok_or_else(|| CliError::Invalid("verify needs an H or snowflake spec".into()))
}

pub fn cmd_verify(spec: &RegionSpecFile, routes: &Routes, json: bool, timing: bool) -> Result<Outcome, CliError> {
    let (s, shift) = snowflake_of(spec)?;
    let start = Instant::now();
    let mut report = verify_shifted(&s, shift, routes)?;
    if timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    let code = if report.verdict.is_success() { EXIT_OK } else { EXIT_FAIL };
    let stdout = if json {
        serde_json::to_string_pretty(&report).expect("reports always serialize") + "\n"
    } else {
        format!("{report}\n")
    };
    Ok(Outcome { stdout, code })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum SweepClass {
    #[default]
    Plain,
    R,
    V,
    Rv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_max: u32,
    pub x_max: u32,
    pub trials: usize,
    pub seed: u64,
    pub class: SweepClass,
}

/// Draws this many candidates per parallel batch.
const BATCH: usize = 32;
/// Gives up after `trials * MAX_DRAWS_PER_TRIAL` candidates.
const MAX_DRAWS_PER_TRIAL: usize = 50;

/// A candidate counts toward the sweep once the quantities its class tests
/// are defined: `M(H) > 0`, and the symmetric count is nonzero for `r`, `v`
/// and `rv`.
fn qualifies(report: &VerificationReport, class: SweepClass) -> bool {
    let tag = match class {
        SweepClass::Plain => return report.verdict != Verdict::HypothesisUnmet,
        SweepClass::R => SymmetryTag::R,
        SweepClass::V => SymmetryTag::V,
        SweepClass::Rv => SymmetryTag::Rv,
    };
    report.measured_ratio.is_some() && report.symmetry.iter().any(|c| c.class == tag && c.measured_ratio.is_some())
}

pub fn cmd_sweep(cfg: &SweepConfig, routes: &Routes, exec: Exec) -> Outcome {
    let mut sampler = Sampler::new(cfg.seed);
    let draw = |s: &mut Sampler| match cfg.class {
        SweepClass::Plain => s.snowflake(cfg.n_max, cfg.x_max),
        SweepClass::R => s.cyclic(cfg.n_max, cfg.x_max),
        SweepClass::V => s.vertical(cfg.n_max, cfg.x_max),
        SweepClass::Rv => s.cyclic_vertical(cfg.n_max, cfg.x_max),
    };
    let mut out = String::new();
    let (mut accepted, mut passed, mut drawn) = (0usize, 0usize, 0usize);
    let limit = cfg.trials.saturating_mul(MAX_DRAWS_PER_TRIAL);
    while accepted < cfg.trials && drawn < limit {
        let batch: Vec<SnowflakeSpec> = (0..BATCH).map(|_| draw(&mut sampler)).collect();
        drawn += BATCH;
        let reports = exec.map(&batch, |s| verify_shifted(s, 0, routes));
        for (s, report) in batch.iter().zip(reports) {
            if accepted == cfg.trials {
                break;
            }
            let line = match report {
                Ok(r) if !qualifies(&r, cfg.class) => continue,
                Ok(r) => {
                    let ok = r.verdict.is_success();
                    passed += usize::from(ok);
                    let c = &r.counts[0];
                    let mut line =
                        format!("n={} x={} M(H)={} M(H_bar)={}", s.n, s.x, c.h, c.h_bar);
                    for sym in &r.symmetry {
                        let _ = write!(line, " {:?}:{}/{}", sym.class, sym.h_bar, sym.h);
                    }
                    line.push_str(if ok { " pass" } else { " FAIL" });
                    for f in &r.failures {
                        let _ = write!(line, "; {f}");
                    }
                    line
                }
                Err(e) => format!("n={} x={} error: {e}", s.n, s.x),
            };
            accepted += 1;
            let _ = writeln!(out, "trial {accepted}: {line}");
        }
    }
    let _ = writeln!(out, "passed {passed}/{}", cfg.trials);
    if accepted < cfg.trials {
        let _ = writeln!(out, "only {accepted} qualifying specs found in {drawn} draws");
    }
    Outcome { stdout: out, code: if passed == cfg.trials { EXIT_OK } else { EXIT_FAIL } }
}

pub fn cmd_render(spec: &RegionSpecFile, out: &Path, tiling: Option<usize>, overlay: bool) -> Result<Outcome, CliError> {
    let region = spec.build()?;
    let mut scene = if let Some((s, _)) = spec.snowflake() {
        Scene::snowflake(&s, &region, overlay)
    } else if let Some(l) = spec.l_spec() {
        Scene::l_region(&l, &region, overlay)
    } else {
        Scene::default()
    };
    if let Some(idx) = tiling {
        let mut found = enumerate_tilings(&region, Some(idx + 1));
        if found.len() <= idx {
            return Err(CliError::Invalid(format!(
                "tiling index {idx} is out of range: the region has {} tilings",
                found.len()
            )));
        }
        scene.tiling = Some(found.swap_remove(idx));
    }
    std::fs::write(out, render_svg(&region, &scene))
        .map_err(|e| CliError::Invalid(format!("cannot write {}: {e}", out.display())))?;
    Ok(Outcome::ok(format!("wrote {}\n", out.display())))
}

pub fn cmd_macmahon(a: u32, b: u32, c: u32) -> Outcome {
    Outcome::ok(format!("{}\n", macmahon(a, b, c)))
}
