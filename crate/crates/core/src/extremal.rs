//! Closed-form extremal objects.
//!
//! For each degree count `n` there is a unique normalized pair whose sine
//! component is nonnegative on `[0, π]` and which attains the supremum
//!
//! ```text
//! sup min { C(t) : S(t) = 0 } = −tan²(π/(2(n+1))).
//! ```
//!
//! The optimal coefficients are
//!
//! ```text
//! aⱼ⁰ = 2 tan(π/(2(n+1))) · (1 − j/(n+1)) · sin(πj/(n+1)),
//! ```
//!
//! and `S⁰(t)/sin t` is proportional to the Fejér kernel, which is what
//! makes the nonnegativity work. This module provides those closed forms,
//! the kernel evaluation, and the one-parameter perturbation family that
//! approaches the supremum from below.

use crate::error::{Error, Result};
use crate::trigpoly::{CoeffVector, GammaVector};
use std::f64::consts::PI;

/// The optimal pair for a given `n`: coefficients `a⁰`, parity sums `γ⁰`
/// and the extremal value `I = −tan²(π/(2(n+1)))`.
#[derive(Debug, Clone)]
pub struct ExtremalSolution {
    pub n: usize,
    pub a0: CoeffVector,
    pub g0: GammaVector,
    /// The extremal value `I`.
    pub value: f64,
}

fn require_positive_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::domain("n must be at least 1"))
    } else {
        Ok(())
    }
}

/// `I = −tan²(π/(2(n+1)))`, strictly increasing in `n`, tending to `0⁻`.
///
/// Computed via the tangent of the half angle directly for accuracy at
/// large `n`.
pub fn extremal_value(n: usize) -> Result<f64> {
    require_positive_n(n)?;
    let t = (PI / (2.0 * (n as f64 + 1.0))).tan();
    Ok(-(t * t))
}

/// The optimal coefficients `a⁰`, parity sums `γ⁰` and extremal value for
/// degree count `n`.
///
/// `a⁰` comes from the closed form above and `γ⁰` from the explicit kernel
/// expansion; the two routes must agree through `aⱼ⁰ = γⱼ⁰ − γⱼ₊₂⁰`, which
/// is asserted rather than assumed.
pub fn optimal_coeffs(n: usize) -> Result<ExtremalSolution> {
    require_positive_n(n)?;
    let nf = n as f64;
    let half = PI / (2.0 * (nf + 1.0));
    let tan_half = half.tan();

    let a: Vec<f64> = (1..=n)
        .map(|j| {
            let jf = j as f64;
            2.0 * tan_half * (1.0 - jf / (nf + 1.0)) * (PI * jf / (nf + 1.0)).sin()
        })
        .collect();

    // γⱼ⁰ of the kernel expansion:
    //   γⱼ⁰ = ((n−j+3) sin(πj/(n+1)) − (n−j+1) sin(π(j−2)/(n+1)))
    //         / (2(n+1) sin(π/(n+1)) (1 + cos(π/(n+1)))).
    let denom = 2.0 * (nf + 1.0) * (PI / (nf + 1.0)).sin() * (1.0 + (PI / (nf + 1.0)).cos());
    let g: Vec<f64> = (1..=n)
        .map(|j| {
            let jf = j as f64;
            ((nf - jf + 3.0) * (PI * jf / (nf + 1.0)).sin()
                - (nf - jf + 1.0) * (PI * (jf - 2.0) / (nf + 1.0)).sin())
                / denom
        })
        .collect();

    for j in 0..n {
        let from_gamma = g[j] - if j + 2 < n { g[j + 2] } else { 0.0 };
        debug_assert!(
            (a[j] - from_gamma).abs() <= 1e-9,
            "closed forms disagree at j={}: {} vs {}",
            j + 1,
            a[j],
            from_gamma
        );
    }

    Ok(ExtremalSolution {
        n,
        a0: CoeffVector::new(a)?,
        g0: GammaVector::new(g)?,
        value: extremal_value(n)?,
    })
}

/// The nonnegative kernel `S⁰(t)/sin t` in closed form:
///
/// ```text
/// ((1 − cos(π/(n+1)))/(n+1)) · 2 cos²((n+1)t/2) / (cos t − cos(π/(n+1)))²
/// ```
///
/// The closed form has a removable singularity at `t = π/(n+1)`; within
/// `1e−8` of it the equivalent cosine expansion
/// `γ₁⁰ + 2 Σ γⱼ⁰ cos((j−1)t)` is used instead.
pub fn fejer_kernel_value(n: usize, t: f64) -> Result<f64> {
    require_positive_n(n)?;
    let nf = n as f64;
    let t0 = PI / (nf + 1.0);
    if (t - t0).abs() < 1e-8 {
        return fejer_kernel_series(n, t);
    }
    let denom = t.cos() - t0.cos();
    if denom.abs() < 1e-12 {
        // cos t grazes cos t0 away from t0 itself (t near -t0 mod 2π).
        return fejer_kernel_series(n, t);
    }
    let c = ((nf + 1.0) * t / 2.0).cos();
    Ok((1.0 - t0.cos()) / (nf + 1.0) * 2.0 * c * c / (denom * denom))
}

fn fejer_kernel_series(n: usize, t: f64) -> Result<f64> {
    let sol = optimal_coeffs(n)?;
    let g = sol.g0.values();
    let mut v = g[0];
    for (j, &gj) in g.iter().enumerate().skip(1) {
        v += 2.0 * gj * (j as f64 * t).cos();
    }
    Ok(v)
}

/// The perturbation family `S^ε`: first coefficient `(a₁⁰ + ε)/(1 + ε)`,
/// the rest `aⱼ⁰/(1 + ε)`.
///
/// The result is normalized, strictly positive on `(0, π)`, and satisfies
/// `ρ = (I − ε)/(1 + ε) < I`, converging to `I` as `ε → 0`: the supremum
/// is approached but not attained by polynomials with `S > 0` inside.
pub fn epsilon_family(n: usize, eps: f64) -> Result<CoeffVector> {
    require_positive_n(n)?;
    if !(eps > 0.0) {
        return Err(Error::domain("epsilon_family: eps must be positive"));
    }
    let sol = optimal_coeffs(n)?;
    let a0 = sol.a0.coeffs();
    let mut a = Vec::with_capacity(n);
    a.push((a0[0] + eps) / (1.0 + eps));
    for &aj in &a0[1..] {
        a.push(aj / (1.0 + eps));
    }
    CoeffVector::new(a)
}
