use num_complex::Complex64;
use num_rational::Rational64;
use proptest::prelude::*;

use starlike_radius::extremal::{caratheodory_part, eval_extremal, log_deriv, schwarz_eval, ExtremalId};
use starlike_radius::verify::disk_samples;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Taylor coefficients of `num/den` up to `terms`, by long division over the
/// rationals.
fn series_div(num: &[Rational64], den: &[Rational64], terms: usize) -> Vec<Rational64> {
    let zero = Rational64::from_integer(0);
    let mut rem: Vec<Rational64> = (0..terms).map(|i| num.get(i).copied().unwrap_or(zero)).collect();
    let mut q = vec![zero; terms];
    for i in 0..terms {
        q[i] = rem[i] / den[0];
        for (j, d) in den.iter().enumerate() {
            if i + j < terms {
                rem[i + j] -= q[i] * d;
            }
        }
    }
    q
}

fn poly_mul(a: &[Rational64], b: &[Rational64]) -> Vec<Rational64> {
    let mut out = vec![Rational64::from_integer(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact `a2` of the extremal function at rational `b`. The series of
/// `f(z)/z` starts `1 + a2 z + ...`.
fn exact_a2(id: ExtremalId, b: Rational64) -> Rational64 {
    let r = |n: i64| Rational64::from_integer(n);
    let (num, den) = match id {
        ExtremalId::F1 => {
            let beta = r(1) + r(2) * b;
            (vec![r(1), r(-1)], poly_mul(&[r(1), r(1)], &[r(1), -r(2) * beta, r(1)]))
        }
        ExtremalId::F2 => {
            let beta = r(1) + r(2) * b;
            (vec![r(1), r(2) * beta, r(1)], poly_mul(&poly_mul(&[r(1), r(1)], &[r(1), r(1)]), &[r(1), r(0), r(-1)]))
        }
        ExtremalId::F3 => {
            let beta = r(1) + r(3) * b;
            (vec![r(1), beta, r(1)], poly_mul(&[r(1), r(1)], &[r(1), r(0), r(-1)]))
        }
    };
    let s = series_div(&num, &den, 8);
    assert_eq!(s[0], r(1));
    s[1]
}

fn cauchy_a2(id: ExtremalId, b: f64) -> Complex64 {
    let m = 256;
    let mut acc = c(0.0, 0.0);
    for k in 0..m {
        let z = Complex64::from_polar(0.1, std::f64::consts::TAU * k as f64 / m as f64);
        acc += eval_extremal(id, b, z).unwrap() / (z * z);
    }
    acc / m as f64
}

#[test]
fn second_coefficient_exact_and_numeric() {
    for (p, q) in [(-1, 1), (-3, 4), (-1, 2), (-1, 3), (-1, 8), (0, 1)] {
        let b = Rational64::new(p, q);
        let bf = p as f64 / q as f64;
        for id in [ExtremalId::F1, ExtremalId::F2] {
            assert_eq!(exact_a2(id, b), Rational64::from_integer(4) * b);
            assert!((cauchy_a2(id, bf) - 4.0 * bf).norm() < 1e-8);
        }
    }
    for (p, q) in [(-1, 1), (-2, 3), (-1, 3), (0, 1), (1, 6), (1, 3)] {
        let b = Rational64::new(p, q);
        let bf = p as f64 / q as f64;
        assert_eq!(exact_a2(ExtremalId::F3, b), Rational64::from_integer(3) * b);
        assert!((cauchy_a2(ExtremalId::F3, bf) - 3.0 * bf).norm() < 1e-8);
    }
}

#[test]
fn f3_second_coefficient_by_differences() {
    // (f(z) - z)/z^2 -> a2 as z -> 0; Richardson on h and h/2 removes the a3 term
    for b in [-1.0, -0.4, 0.1, 1.0 / 3.0] {
        let g = |h: f64| (eval_extremal(ExtremalId::F3, b, c(h, 0.0)).unwrap().re - h) / (h * h);
        let a2 = 2.0 * g(5e-4) - g(1e-3);
        assert!((a2 - 3.0 * b).abs() < 1e-5, "{b}: {a2}");
    }
}

#[test]
fn log_derivatives_match_closed_forms() {
    for b in [-1.0, -0.8, -0.5, -0.2, 0.0] {
        for k in 1..20 {
            let r = k as f64 * 0.04;
            let den = (1.0 - r * r) * (1.0 - 2.0 * (1.0 + 2.0 * b) * r + r * r);
            if den.abs() < 1e-6 {
                continue;
            }
            let f1 = (r.powi(4) - 2.0 * r.powi(3) + (2.0 + 8.0 * b) * r * r - 2.0 * r + 1.0) / den;
            let got = log_deriv(ExtremalId::F1, b, c(r, 0.0)).unwrap();
            assert!((got.re - f1).abs() < 1e-12 * f1.abs().max(1.0) && got.im.abs() < 1e-15, "f1 b={b} r={r}");
            let f2 = (r.powi(4) - (2.0 + 8.0 * b) * r.powi(3) + (2.0 - 8.0 * b) * r * r - (2.0 + 8.0 * b) * r + 1.0) / den;
            let got = log_deriv(ExtremalId::F2, b, c(-r, 0.0)).unwrap();
            assert!((got.re - f2).abs() < 1e-12 * f2.abs().max(1.0), "f2 b={b} r={r}");
        }
    }
}

#[test]
fn log_derivative_matches_difference_quotient() {
    for id in [ExtremalId::F1, ExtremalId::F2, ExtremalId::F3] {
        let b = if id == ExtremalId::F3 { 0.2 } else { -0.3 };
        for z in disk_samples(200, 0.9, 11) {
            let h = 1e-6;
            let f = |z| eval_extremal(id, b, z).unwrap();
            let d = (f(z + h) - f(z - h)) / (2.0 * h);
            let approx = z * d / f(z);
            let exact = log_deriv(id, b, z).unwrap();
            assert!((approx - exact).norm() < 1e-6 * exact.norm().max(1.0), "{id:?} {z}");
        }
    }
}

#[test]
fn schwarz_and_positivity_on_samples() {
    let samples = disk_samples(10_000, 0.999, 2);
    for b in [-1.0, -0.75, -0.5, -0.1, 0.0] {
        for &z in &samples {
            for i in [1, 2] {
                assert!(schwarz_eval(i, b, z).unwrap().norm() <= z.norm() + 1e-12);
            }
            assert!(caratheodory_part(ExtremalId::F1, b, z).unwrap().re > -1e-12);
            assert!(caratheodory_part(ExtremalId::F2, b, z).unwrap().re > -1e-12);
        }
    }
    for b in [-1.0, -0.5, 0.0, 1.0 / 3.0] {
        for &z in &samples {
            assert!(schwarz_eval(3, b, z).unwrap().norm() <= z.norm() + 1e-12);
            assert!(caratheodory_part(ExtremalId::F3, b, z).unwrap().re > -1e-12);
        }
    }
}

proptest! {
    #[test]
    fn mobius_identities(b1 in -1.0..=0.0f64, b2 in -1.0..=1.0 / 3.0f64, r in 0.0..0.999f64, t in 0.0..std::f64::consts::TAU) {
        let z = Complex64::from_polar(r, t);
        let one = c(1.0, 0.0);
        let w1 = schwarz_eval(1, b1, z).unwrap();
        let w2 = schwarz_eval(2, b1, z).unwrap();
        let w3 = schwarz_eval(3, b2, z).unwrap();
        let close = |a: Complex64, b: Complex64| (a - b).norm() <= 1e-12 * a.norm().max(1.0);
        prop_assert!(close(caratheodory_part(ExtremalId::F1, b1, z).unwrap(), (one - w1) / (one + w1)));
        prop_assert!(close(caratheodory_part(ExtremalId::F2, b1, z).unwrap(), (one + w2) / (one - w2)));
        prop_assert!(close(caratheodory_part(ExtremalId::F3, b2, z).unwrap(), (one + w3) / (one - w3)));
    }

    #[test]
    fn log_derivative_splits(b in -1.0..=0.0f64, r in 0.01..0.95f64, t in 0.0..std::f64::consts::TAU) {
        // f = z h/(1+z)^2 with h = (1+z)^2 f/z gives zf'/f = zh'/h + (1-z)/(1+z)
        let z = Complex64::from_polar(r, t);
        let one = c(1.0, 0.0);
        for id in [ExtremalId::F1, ExtremalId::F2] {
            let h = |z| caratheodory_part(id, b, z).unwrap();
            let eps = 1e-6;
            let zh = z * (h(z + eps) - h(z - eps)) / (2.0 * eps) / h(z);
            let lhs = log_deriv(id, b, z).unwrap();
            let rhs = zh + (one - z) / (one + z);
            prop_assert!((lhs - rhs).norm() < 1e-5 * lhs.norm().max(1.0));
        }
    }
}
