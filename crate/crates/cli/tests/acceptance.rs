//! The acceptance criteria, one PASS/FAIL line each. Runs as a plain binary
//! so the lines are printed even when everything passes.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use lozenge_cli::{cmd_sweep, SweepClass, SweepConfig};
use lozenge_core::counting::{count_determinant, count_enumeration, count_symmetric, Count, SymmetryClass, SymmetryTag};
use lozenge_core::lattice::{LatticeLine, TriCell};
use lozenge_core::lgv::{count_L_lgv, factorization_check, ratio_rhs_L};
use lozenge_core::par::Exec;
use lozenge_core::regions::{
    build_h, build_hexagon, build_l, build_snowflake, sample_snowflake_7_3, flip_spec, with_w_holes, LabelSet,
    SnowflakeSpec, WTriple,
};
use lozenge_core::sample::Sampler;
use lozenge_core::theorem::{
    count_h_via_decomposition, cyclic_count_via_l, distance, macmahon, ratio_rhs_cyclic, ratio_rhs_cyclic_vertical,
    ratio_rhs_geometric, ratio_rhs_snowflake, ratio_rhs_vertical, verify, Ratio, Routes, Verdict,
};
use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ratio(num: &Count, den: &Count) -> Ratio {
    Ratio::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn macmahon_conformance() -> Outcome {
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                let r = build_hexagon(a, b, c);
                let m = macmahon(a, b, c);
                let e = count_enumeration(&r);
                let d = count_determinant(&r).map_err(|e| e.to_string())?;
                ensure(m == e && e == d, || format!("({a},{b},{c}): formula {m}, enumeration {e}, determinant {d}"))?;
            }
        }
    }
    ensure(macmahon(1, 1, 1) == Count::from(2u32) && macmahon(2, 2, 2) == Count::from(20u32), || {
        "M(1,1,1) or M(2,2,2) is wrong".into()
    })?;
    Ok("125 boxes".into())
}

fn backend_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut sampler = Sampler::new(1);
    let mut done = 0;
    let mut kinds = [0usize; 4];
    while done < 300 {
        let kind = done % 4;
        let region = match kind {
            0 => build_hexagon(rng.gen_range(0..=5), rng.gen_range(0..=5), rng.gen_range(0..=5)),
            1 => build_h(rng.gen_range(1..=3), rng.gen_range(0..=3)),
            2 => {
                let mut s = sampler.snowflake(3, 2);
                s.flipped = rng.gen_bool(0.5);
                build_snowflake(&s).map_err(|e| e.to_string())?
            }
            _ => {
                let l = sampler.lspec(4, 2);
                build_l(&if rng.gen_bool(0.5) { l.barred() } else { l }).map_err(|e| e.to_string())?
            }
        };
        if region.len() > 60 {
            continue;
        }
        let e = count_enumeration(&region);
        let d = count_determinant(&region).map_err(|e| e.to_string())?;
        ensure(e == d, || format!("enumeration {e} vs determinant {d} on a {}-cell region", region.len()))?;
        kinds[kind] += 1;
        done += 1;
    }
    Ok(format!(
        "300 regions: {} hexagons, {} H, {} snowflakes, {} L-regions",
        kinds[0], kinds[1], kinds[2], kinds[3]
    ))
}

fn l_region_ratio() -> Outcome {
    let mut sampler = Sampler::new(3);
    let (mut tileable, mut drawn) = (0, 0);
    while tileable < 200 {
        let l = sampler.lspec(4, 2);
        drawn += 1;
        let m = count_L_lgv(&l).map_err(|e| e.to_string())?;
        let mb = count_L_lgv(&l.barred()).map_err(|e| e.to_string())?;
        let region = build_l(&l).map_err(|e| e.to_string())?;
        let region_b = build_l(&l.barred()).map_err(|e| e.to_string())?;
        ensure(count_determinant(&region).ok() == Some(m.clone()), || format!("{l:?}: path count disagrees"))?;
        ensure(count_determinant(&region_b).ok() == Some(mb.clone()), || format!("{l:?}: barred path count disagrees"))?;
        ensure(m.is_zero() == mb.is_zero(), || format!("{l:?}: only one of L, L-bar is tileable"))?;
        if m.is_zero() {
            continue;
        }
        ensure(ratio(&mb, &m) == ratio_rhs_L(&l), || format!("{l:?}: ratio {} vs {}", ratio(&mb, &m), ratio_rhs_L(&l)))?;
        tileable += 1;
    }
    Ok(format!("200 tileable specs, nonvanishing checked on {drawn}"))
}

fn snowflake_ratio() -> Outcome {
    let cfg = SweepConfig { n_max: 3, x_max: 2, trials: 200, seed: 42, class: SweepClass::Plain };
    let sweep = cmd_sweep(&cfg, &Routes { symmetric: false, ..Routes::default() }, Exec::default());
    ensure(sweep.code == 0, || sweep.stdout.lines().filter(|l| l.contains("FAIL")).collect::<Vec<_>>().join("\n"))?;
    let big = verify(&sample_snowflake_7_3(), &Routes { symmetric: false, ..Routes::default() }).map_err(|e| e.to_string())?;
    ensure(big.verdict == Verdict::Pass, || format!("n=7 x=3 fixture: {:?}", big.failures))?;
    Ok(format!("200 random specs plus the n=7 x=3 fixture (ratio {})", big.formula_ratio))
}

fn symmetric_counts(s: &SnowflakeSpec, tag: SymmetryTag) -> Result<(Count, Count), String> {
    let sb = flip_spec(s).map_err(|e| e.to_string())?;
    let (r, rb) = (build_snowflake(s).map_err(|e| e.to_string())?, build_snowflake(&sb).map_err(|e| e.to_string())?);
    let m = count_symmetric(&r, &SymmetryClass::new(tag, s.center())).map_err(|e| e.to_string())?;
    let mb = count_symmetric(&rb, &SymmetryClass::new(tag, sb.center())).map_err(|e| e.to_string())?;
    Ok((m, mb))
}

fn cyclic_ratio() -> Outcome {
    let mut sampler = Sampler::new(5);
    let mut done = 0;
    while done < 50 {
        let s = sampler.cyclic(3, 1);
        let (m, mb) = symmetric_counts(&s, SymmetryTag::R)?;
        if m.is_zero() {
            continue;
        }
        let formula = ratio_rhs_cyclic(&s).map_err(|e| e.to_string())?;
        let measured = ratio(&mb, &m);
        ensure(measured == formula, || format!("{s:?}: measured {measured} vs formula {formula}"))?;
        let via_l = (cyclic_count_via_l(&s), cyclic_count_via_l(&flip_spec(&s).map_err(|e| e.to_string())?));
        ensure(via_l == (Ok(m.clone()), Ok(mb.clone())), || format!("{s:?}: L-region route {via_l:?} vs {m}, {mb}"))?;
        let full = ratio(
            &count_determinant(&build_snowflake(&flip_spec(&s).unwrap()).unwrap()).map_err(|e| e.to_string())?,
            &count_determinant(&build_snowflake(&s).unwrap()).map_err(|e| e.to_string())?,
        );
        ensure(measured.clone().pow(3u32) == full, || format!("{s:?}: cube of {measured} is not {full}"))?;
        done += 1;
    }
    Ok("50 cyclic specs".into())
}

fn remark_identities() -> Outcome {
    let mut sampler = Sampler::new(6);
    for (tag, draw) in [
        (SymmetryTag::V, Sampler::vertical as fn(&mut Sampler, u32, u32) -> SnowflakeSpec),
        (SymmetryTag::Rv, Sampler::cyclic_vertical),
    ] {
        let mut done = 0;
        while done < 30 {
            let s = draw(&mut sampler, 3, 1);
            let (m, mb) = symmetric_counts(&s, tag)?;
            if m.is_zero() {
                continue;
            }
            let formula = match tag {
                SymmetryTag::V => ratio_rhs_vertical(&s),
                _ => ratio_rhs_cyclic_vertical(&s),
            }
            .map_err(|e| e.to_string())?;
            ensure(ratio(&mb, &m) == formula, || format!("{tag:?} {s:?}: measured {} vs {formula}", ratio(&mb, &m)))?;
            done += 1;
        }
    }
    for _ in 0..1000 {
        let v = sampler.vertical(4, 3);
        let full = ratio_rhs_snowflake(&v);
        ensure(ratio_rhs_vertical(&v).map(|r| r.pow(2u32)) == Ok(full), || format!("{v:?}: square root tower"))?;
        let rv = sampler.cyclic_vertical(4, 3);
        let (c, vv, cv) = (ratio_rhs_cyclic(&rv), ratio_rhs_vertical(&rv), ratio_rhs_cyclic_vertical(&rv));
        let (c, vv, cv) = (c.map_err(|e| e.to_string())?, vv.map_err(|e| e.to_string())?, cv.map_err(|e| e.to_string())?);
        ensure(
            cv.clone().pow(2u32) == c && cv.clone().pow(3u32) == vv && cv.pow(6u32) == ratio_rhs_snowflake(&rv),
            || format!("{rv:?}: sixth root tower"),
        )?;
    }
    Ok("30 vertical and 30 rv specs counted, 1000 formula towers".into())
}

fn geometric_form() -> Outcome {
    let mut sampler = Sampler::new(7);
    for _ in 0..1000 {
        let s = sampler.snowflake(6, 4);
        ensure(ratio_rhs_geometric(&s) == ratio_rhs_snowflake(&s), || format!("{s:?}"))?;
    }
    let line = LatticeLine::horizontal(0);
    let (a, b, c) = (TriCell::up(0, 0), TriCell::down(-1, 5), TriCell::up(0, 8));
    let d = (distance(a, b, line), distance(b, c, line));
    ensure(d == (Ok(5), Ok(3)), || format!("distances {d:?}, expected 5 and 3"))?;
    Ok("1000 specs, distance fixture 5 and 3".into())
}

fn w_triples(s: &SnowflakeSpec) -> Vec<WTriple> {
    let allowed: [LabelSet; 3] =
        std::array::from_fn(|i| LabelSet::full(s.n).difference(s.a[(2 * i + 2) % 6].union(s.b[2 * i + 1])));
    let mut out = Vec::new();
    for w2 in allowed[0].subsets() {
        for w4 in allowed[1].subsets() {
            for w6 in allowed[2].subsets() {
                out.push([w2, w4, w6]);
            }
        }
    }
    out
}

fn decomposition_routes() -> Outcome {
    let mut sampler = Sampler::new(8);
    let mut triples = 0;
    for _ in 0..50 {
        let s = sampler.snowflake(3, 1);
        for h in [s, flip_spec(&s).map_err(|e| e.to_string())?] {
            let direct = count_determinant(&build_snowflake(&h).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let routed = count_h_via_decomposition(&h).map_err(|e| e.to_string())?;
            ensure(direct == routed, || format!("{h:?}: direct {direct} vs decomposition {routed}"))?;
        }
        for w in w_triples(&s) {
            let Ok(sw) = with_w_holes(&s, &w) else { continue };
            let Ok(swb) = flip_spec(&sw) else { continue };
            let (Ok(r), Ok(rb)) = (build_snowflake(&sw), build_snowflake(&swb)) else { continue };
            let (m, mb) = (count_determinant(&r).map_err(|e| e.to_string())?, count_determinant(&rb).map_err(|e| e.to_string())?);
            ensure(m.is_zero() == mb.is_zero(), || format!("{s:?} W={w:?}: {m} vs {mb}"))?;
            triples += 1;
        }
    }
    Ok(format!("50 specs in both orientations, nonvanishing on {triples} W-triples"))
}

fn determinant_factorization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let labels = |rng: &mut ChaCha8Rng, k: usize| {
        let mut v = rand::seq::index::sample(rng, 8, k).into_iter().map(|i| i as u32 + 1).collect::<Vec<_>>();
        v.sort_unstable();
        v
    };
    for _ in 0..500 {
        let k = rng.gen_range(1..=4);
        let (p, r) = (labels(&mut rng, k), labels(&mut rng, k));
        let x = rng.gen_range(0..=3);
        ensure(factorization_check(&p, &r, x), || format!("p={p:?} r={r:?} x={x}"))?;
    }
    Ok("500 matrices".into())
}

fn negative_control() -> Outcome {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let run = |file: &str| {
        Command::new(env!("CARGO_BIN_EXE_lozenge"))
            .arg("verify")
            .arg(fixtures.join(file))
            .output()
            .map_err(|e| e.to_string())
    };
    let shifted = run("shifted_convention.json")?;
    ensure(shifted.status.code() == Some(1), || format!("shifted fixture exited with {:?}", shifted.status.code()))?;
    let big = run("sample_snowflake_7_3.json")?;
    ensure(big.status.code() == Some(0), || format!("n=7 x=3 fixture exited with {:?}", big.status.code()))?;
    Ok("shifted fixture exits 1, unshifted n=7 x=3 fixture exits 0".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("MacMahon conformance", macmahon_conformance),
        ("backend equivalence", backend_equivalence),
        ("L-region flip ratio", l_region_ratio),
        ("snowflake flip ratio", snowflake_ratio),
        ("cyclically symmetric ratio", cyclic_ratio),
        ("vertical and rv ratios", remark_identities),
        ("geometric form", geometric_form),
        ("decomposition routes", decomposition_routes),
        ("determinant factorization", determinant_factorization),
        ("negative control", negative_control),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
