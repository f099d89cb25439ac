//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::{Command, ExitCode};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use starlike_radius::extremal::{caratheodory_part, eval_extremal, schwarz_eval, ExtremalId};
use starlike_radius::output::{read_csv, read_json};
use starlike_radius::solver::{g1_nephroid_proof_coeffs, g1_nephroid_theorem_coeffs, DEFAULT_TOL};
use starlike_radius::verify::{containment_scan, disk_samples, sharpness_check, sharpness_check_tol};
use starlike_radius::{
    assemble_condition, class_disk, compute_radius, containment_threshold, smallest_root_in_01, ClassId, ClassSpec,
    RadiusCondition, Target, VariantPolicy,
};

const GRID_POINTS: usize = 11;
const SCAN_SAMPLES: usize = 512;
const BRACKET_OFFSET: f64 = 1e-6;

type Outcome = Result<String, String>;

fn policy() -> VariantPolicy {
    VariantPolicy::default()
}

/// Default targets for a class: all twelve on G1, the nine supported on G2.
fn targets(class_id: ClassId) -> Vec<Target> {
    Target::all(0.0, 0.5).unwrap().into_iter().filter(|t| t.in_paper_scope(class_id)).collect()
}

fn grid(class_id: ClassId) -> Vec<ClassSpec> {
    ClassSpec::standard_b_grid(class_id, GRID_POINTS).into_iter().map(|b| ClassSpec::new(class_id, b).unwrap()).collect()
}

fn cells() -> Vec<(ClassSpec, Target)> {
    [ClassId::G1, ClassId::G2]
        .into_iter()
        .flat_map(|id| grid(id).into_iter().flat_map(move |s| targets(id).into_iter().map(move |t| (s, t))))
        .collect()
}

fn rho(spec: &ClassSpec, target: &Target) -> f64 {
    compute_radius(spec, target, policy(), DEFAULT_TOL).unwrap().rho
}

fn criterion_1() -> Outcome {
    let spec = ClassSpec::new(ClassId::G1, -1.0).unwrap();
    let got = compute_radius(&spec, &Target::StarlikeOrder { alpha: 0.0 }, policy(), DEFAULT_TOL).map_err(|e| e.to_string())?;
    let want = 2.0 - 3f64.sqrt();
    let err = (got.rho - want).abs();
    if err <= 1e-10 {
        Ok(format!("rho = {:.15}, |rho - (2 - sqrt 3)| = {err:.1e}", got.rho))
    } else {
        Err(format!("rho = {:.15}, expected {want:.15}", got.rho))
    }
}

fn criterion_2() -> Outcome {
    let mut worst = 0f64;
    let cells = cells();
    for (spec, target) in &cells {
        let cond = assemble_condition(spec, target, policy()).map_err(|e| e.to_string())?;
        let res = smallest_root_in_01(&cond, DEFAULT_TOL).map_err(|e| format!("{} b={} {target}: {e}", spec.class_id(), spec.b()))?;
        worst = worst.max(res.residual);
        let id = format!("{} b={} {target}", spec.class_id(), spec.b());
        if res.residual > 1e-10 {
            return Err(format!("{id}: residual {:.2e}", res.residual));
        }
        let (lo, hi) = (res.rho - BRACKET_OFFSET, res.rho + BRACKET_OFFSET);
        if !(cond.eval(lo) < 0.0 && cond.eval(hi) > 0.0) {
            return Err(format!("{id}: no sign change across rho = {}", res.rho));
        }
    }
    Ok(format!("{} cells, max residual {worst:.1e}", cells.len()))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0usize;
    let mut skipped = 0usize;
    for id in [ClassId::G1, ClassId::G2] {
        for k in 0..GRID_POINTS {
            let mag = id.max_coeff_mag() * k as f64 / (GRID_POINTS - 1) as f64;
            let spec = ClassSpec::from_coeff_mag(id, mag).unwrap();
            for target in targets(id) {
                let cond = assemble_condition(&spec, &target, policy()).unwrap();
                for _ in 0..100 {
                    let r: f64 = rng.gen_range(1e-6..1.0 - 1e-6);
                    if cond.eval(r - 1e-9).signum() != cond.eval(r + 1e-9).signum() {
                        skipped += 1;
                        continue;
                    }
                    let disk = class_disk(&spec, r).unwrap();
                    let direct = disk.radius - containment_threshold(&target, disk.center).unwrap();
                    let h = cond.eval(r);
                    if (h > 0.0) != (direct > 0.0) {
                        return Err(format!("{id} mag={mag} {target} r={r}: h = {h:e}, R - T = {direct:e}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} points agree, {skipped} within 1e-9 of a zero"))
}

fn criterion_4() -> Outcome {
    let algebraic = |t: &Target| {
        matches!(
            t,
            Target::StarlikeOrder { .. }
                | Target::StronglyStarlike { .. }
                | Target::Parabolic
                | Target::Lemniscate
                | Target::Lune
                | Target::Exponential
                | Target::SigmoidSG
                | Target::Nephroid
                | Target::Cardioid
                | Target::RationalRL
        )
    };
    let cells = cells();
    let mut inside_fail = Vec::new();
    let mut outside_fail = Vec::new();
    let mut outside_checked = 0;
    for (spec, target) in &cells {
        let scan = containment_scan(spec, target, rho(spec, target), SCAN_SAMPLES).map_err(|e| e.to_string())?;
        let id = format!("{} b={:.3} {}", spec.class_id(), spec.b(), target.family());
        if !scan.inside.passed {
            inside_fail.push(id.clone());
        }
        if algebraic(target) {
            outside_checked += 1;
            if !scan.just_outside.passed {
                outside_fail.push((target.family(), id));
            }
        }
    }
    let mut families: Vec<_> = outside_fail.iter().map(|(f, _)| f.name()).collect();
    families.dedup();
    let summary = format!(
        "inside scan {}/{} cells, just-outside scan {}/{} algebraic cells",
        cells.len() - inside_fail.len(),
        cells.len(),
        outside_checked - outside_fail.len(),
        outside_checked
    );
    if inside_fail.is_empty() && outside_fail.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; inside failures {inside_fail:?}; just-outside failures for {families:?}"))
    }
}

fn criterion_5() -> Outcome {
    let g1 = ClassSpec::new(ClassId::G1, -1.0).unwrap();
    let g2 = ClassSpec::new(ClassId::G2, -1.0).unwrap();
    let mut cases: Vec<(ClassSpec, Target)> =
        [0.0, 0.25, 0.5].into_iter().map(|a| (g1, Target::StarlikeOrder { alpha: a })).collect();
    for t in [Target::Lemniscate, Target::Parabolic, Target::Exponential, Target::Cardioid, Target::Sine, Target::RationalR, Target::SigmoidSG] {
        cases.push((g1, t));
    }
    for t in [Target::Sine, Target::Nephroid, Target::SigmoidSG] {
        cases.push((g2, t));
    }
    let mut worst = 0f64;
    for (spec, target) in &cases {
        let s = sharpness_check(spec, target, rho(spec, target)).map_err(|e| e.to_string())?;
        worst = worst.max(s.deviation);
        if !s.ok {
            return Err(format!("{} {target}: {} = {} vs {}", spec.class_id(), s.functional, s.value, s.target_value));
        }
    }
    Ok(format!("{} contact checks, max deviation {worst:.1e}", cases.len()))
}

/// First sign change of `h` on a grid of step `1e-6`, refined to the
/// midpoint of that cell.
fn dense_scan_root(h: impl Fn(f64) -> f64) -> f64 {
    let step = 1e-6;
    let mut prev = 0.0;
    let mut k = 1;
    loop {
        let r = k as f64 * step;
        assert!(r < 1.0, "no root");
        if h(r) >= 0.0 {
            return 0.5 * (prev + r);
        }
        prev = r;
        k += 1;
    }
}

fn criterion_6() -> Outcome {
    let spec = ClassSpec::new(ClassId::G1, -1.0).unwrap();
    let corrected = assemble_condition(&spec, &Target::Nephroid, policy()).unwrap();
    let theorem = RadiusCondition::polynomial(g1_nephroid_theorem_coeffs(1.0));
    let proof = RadiusCondition::polynomial(g1_nephroid_proof_coeffs(1.0));
    let expected = [0.1514, 0.175, 0.1565];
    let mut roots = Vec::new();
    for (cond, approx) in [&corrected, &theorem, &proof].into_iter().zip(expected) {
        let dense = dense_scan_root(|r| cond.eval(r));
        let bisect = smallest_root_in_01(cond, DEFAULT_TOL).unwrap().rho;
        if (dense - bisect).abs() > 1e-6 || (dense - approx).abs() > 1e-3 {
            return Err(format!("root mismatch: dense {dense}, bisection {bisect}, expected about {approx}"));
        }
        roots.push(bisect);
    }
    let value = |rho: f64| sharpness_check_tol(&spec, &Target::Nephroid, rho, 1e-4).unwrap();
    let c = value(roots[0]);
    let (t, p) = (value(roots[1]), value(roots[2]));
    let msg = format!(
        "roots {:.4}/{:.4}/{:.4}, |w| = {:.6}/{:.6}/{:.6}",
        roots[0], roots[1], roots[2], c.value, t.value, p.value
    );
    if c.deviation <= 1e-4 && t.deviation > 1e-2 && p.deviation > 1e-2 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_7() -> Outcome {
    let samples = disk_samples(10_000, 0.999, 7);
    let mut checks = 0usize;
    let g1_bs = ClassSpec::standard_b_grid(ClassId::G1, GRID_POINTS);
    let g2_bs = ClassSpec::standard_b_grid(ClassId::G2, GRID_POINTS);
    let one = Complex64::new(1.0, 0.0);
    for (index, id, bs) in [(1u8, ExtremalId::F1, &g1_bs), (2, ExtremalId::F2, &g1_bs), (3, ExtremalId::F3, &g2_bs)] {
        for &b in bs {
            for &z in &samples {
                let w = schwarz_eval(index, b, z).unwrap();
                if w.norm() > z.norm() + 1e-12 {
                    return Err(format!("|w{index}({z})| = {} > |z| at b = {b}", w.norm()));
                }
                let p = caratheodory_part(id, b, z).unwrap();
                if p.re <= -1e-12 {
                    return Err(format!("Re part of {} at {z}, b = {b}: {}", id.name(), p.re));
                }
                let mobius = match id {
                    ExtremalId::F1 => (one - w) / (one + w),
                    _ => (one + w) / (one - w),
                };
                if (p - mobius).norm() > 1e-12 * p.norm().max(1.0) {
                    return Err(format!("Mobius identity for {} at {z}, b = {b}: {p} vs {mobius}", id.name()));
                }
                checks += 1;
            }
            // second coefficient from a Cauchy integral on |z| = 0.1
            let m = 256;
            let rad = 0.1;
            let mut a2 = Complex64::new(0.0, 0.0);
            for k in 0..m {
                let z = Complex64::from_polar(rad, 2.0 * std::f64::consts::PI * k as f64 / m as f64);
                a2 += eval_extremal(id, b, z).unwrap() / (z * z);
            }
            a2 /= m as f64;
            let want = if id == ExtremalId::F3 { 3.0 * b } else { 4.0 * b };
            if (a2 - want).norm() > 1e-8 {
                return Err(format!("a2({}) at b = {b}: {a2} vs {want}", id.name()));
            }
        }
    }
    Ok(format!("{checks} sample checks, a2 matched on {} parameter values", 2 * g1_bs.len() + g2_bs.len()))
}

fn criterion_8() -> Outcome {
    let all = Target::all(0.0, 0.5).unwrap();
    let pairs = [-0.05, -0.1, -0.25, -0.3, -0.4375];
    for b in pairs {
        let (s, m) = (ClassSpec::new(ClassId::G1, b).unwrap(), ClassSpec::new(ClassId::G1, -1.0 - b).unwrap());
        for t in &all {
            let (x, y) = (rho(&s, t), rho(&m, t));
            if (x - y).abs() > 1e-12 {
                return Err(format!("rho({b}) = {x} vs rho({}) = {y} for {t}", -1.0 - b));
            }
        }
    }
    for id in [ClassId::G1, ClassId::G2] {
        for spec in grid(id) {
            let x = rho(&spec, &Target::StronglyStarlike { gamma: 1.0 });
            let y = rho(&spec, &Target::StarlikeOrder { alpha: 0.0 });
            if (x - y).abs() > 1e-10 {
                return Err(format!("{id} b={}: strongly(1) {x} vs starlike(0) {y}", spec.b()));
            }
        }
    }
    let ext = VariantPolicy::default().extended(true);
    let rho_ext = |s: &ClassSpec, t: &Target| compute_radius(s, t, ext, DEFAULT_TOL).unwrap().rho;
    let mut monotone_runs = 0;
    for id in [ClassId::G1, ClassId::G2] {
        let specs: Vec<_> = (0..=10)
            .map(|k| ClassSpec::from_coeff_mag(id, id.max_coeff_mag() * k as f64 / 10.0).unwrap())
            .collect();
        for t in &Target::all(0.0, 0.5).unwrap() {
            let col: Vec<f64> = specs.iter().map(|s| rho_ext(s, t)).collect();
            if col.windows(2).any(|w| w[1] > w[0]) {
                return Err(format!("{id} {t}: rho increases with coeff_mag: {col:?}"));
            }
            monotone_runs += 1;
        }
        for s in &specs {
            let by_alpha: Vec<f64> = (0..10).map(|k| rho_ext(s, &Target::StarlikeOrder { alpha: k as f64 / 10.0 })).collect();
            let by_gamma: Vec<f64> = (1..=10).map(|k| rho_ext(s, &Target::StronglyStarlike { gamma: k as f64 / 10.0 })).collect();
            if by_alpha.windows(2).any(|w| w[1] > w[0]) || by_gamma.windows(2).any(|w| w[1] < w[0]) {
                return Err(format!("{id} mag={}: alpha column {by_alpha:?}, gamma column {by_gamma:?}", s.coeff_mag()));
            }
            monotone_runs += 2;
        }
    }
    Ok(format!("{} symmetric pairs x {} targets, {monotone_runs} monotone columns", pairs.len(), all.len()))
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_starlike-radius");
    let run = |format: &str| {
        let out = Command::new(bin)
            .args(["table", "--class", "g1", "--targets", "all", "--format", format])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
        }
        Ok(out.stdout)
    };
    let (a, b) = (run("csv")?, run("csv")?);
    if a != b {
        return Err("two CSV runs differ".into());
    }
    let json = run("json")?;
    let from_csv = read_csv(&a[..]).map_err(|e| e.to_string())?;
    let from_json = read_json(std::str::from_utf8(&json).unwrap()).map_err(|e| e.to_string())?;
    if let Some((c, j)) = from_csv.iter().zip(&from_json).find(|(c, j)| c != j) {
        return Err(format!("CSV and JSON records differ: {c:?} vs {j:?}"));
    }
    if from_csv.len() != GRID_POINTS * 12 {
        return Err(format!("expected {} rows, got {}", GRID_POINTS * 12, from_csv.len()));
    }
    Ok(format!("{} rows, {} bytes identical across runs, CSV == JSON", from_csv.len(), a.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("closed-form root 2 - sqrt 3", criterion_1),
        ("residual and bracketing", criterion_2),
        ("assembly vs inequality", criterion_3),
        ("exact-region containment", criterion_4),
        ("sharpness at b = -1", criterion_5),
        ("nephroid adjudication", criterion_6),
        ("extremal and class invariants", criterion_7),
        ("structural symmetries", criterion_8),
        ("CLI determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} ({name}): PASS: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
