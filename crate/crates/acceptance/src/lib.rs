//! Test-support oracles for the acceptance suite.
//!
//! Everything here deliberately avoids the code paths it is used to check:
//! the matrix exponential is scaling-and-squaring Taylor (the library uses
//! eigendecomposition) and the quadrature is adaptive Simpson (the library
//! integrates power laws in closed form).

use nalgebra::DMatrix;
use num_complex::Complex64;
use sfq_core::TransmonSpec;

/// Scaling-and-squaring Taylor matrix exponential.
pub fn expm_taylor(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let dim = m.nrows();
    let mut scaled = m.clone();
    let mut squarings = 0u32;
    let mut norm: f64 = scaled.iter().map(|z| z.norm()).fold(0.0, f64::max) * dim as f64;
    while norm > 0.25 {
        scaled /= Complex64::new(2.0, 0.0);
        norm /= 2.0;
        squarings += 1;
    }
    let mut result = DMatrix::<Complex64>::identity(dim, dim);
    let mut term = DMatrix::<Complex64>::identity(dim, dim);
    for k in 1..30 {
        term = (&term * &scaled) / Complex64::new(k as f64, 0.0);
        result += &term;
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// Time-ordered dense integration of a kicked transmon where each kick is a
/// rectangular pulse of width `w` starting at its event time. Converges
/// linearly in `w` to the δ-kick propagator.
pub fn finite_width_propagator(
    spec: &TransmonSpec,
    times: &[f64],
    delta_theta: f64,
    total: f64,
    w: f64,
) -> DMatrix<Complex64> {
    let dim = spec.levels();
    let energies = spec.spectrum();
    let diag = |t: f64| -> DMatrix<Complex64> {
        DMatrix::from_fn(dim, dim, |i, j| {
            if i == j {
                Complex64::from_polar(1.0, -energies[i] * t)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    };
    let h0 = DMatrix::<Complex64>::from_fn(dim, dim, |i, j| {
        if i == j {
            Complex64::new(energies[i], 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let a = DMatrix::<Complex64>::from_fn(dim, dim, |i, j| {
        if j == i + 1 {
            Complex64::new((j as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let hk = (a.adjoint() - &a) * Complex64::new(0.0, delta_theta / 2.0);
    let pulse = expm_taylor(&((&h0 * Complex64::new(w, 0.0) + &hk) * Complex64::new(0.0, -1.0)));

    let mut u = DMatrix::<Complex64>::identity(dim, dim);
    let mut t = 0.0;
    for &tp in times {
        u = &pulse * diag(tp - t) * u;
        t = tp + w;
    }
    diag(total - t) * u
}

/// Max entry-wise distance between two matrices.
pub fn max_distance(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Recursive adaptive Simpson quadrature.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
    }
    fn recurse(f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let left = simpson(f, a, m);
        let right = simpson(f, m, b);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            recurse(f, a, m, left, tol / 2.0, depth - 1)
                + recurse(f, m, b, right, tol / 2.0, depth - 1)
        }
    }
    recurse(f, a, b, simpson(f, a, b), tol, 48)
}

/// Least-squares slope of y against x.
pub fn fit_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}
