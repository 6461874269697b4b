//! Schur stability of the gain-parameterized family
//!
//! ```text
//! f(λ) = λⁿ + k (a₁ λⁿ⁻¹ + … + aₙ),    Σ aⱼ = 1.
//! ```
//!
//! The family is stable at `k = 0` and loses stability at two gains on
//! either side of zero; `(−k₁, k₂)` is the robust stability segment and
//! `Φ = k₁ + k₂` its length. Stability of a single polynomial is decided
//! by the Schur–Cohn reflection-coefficient recursion; the root-finder in
//! [`crate::oracle`] serves as an independent cross-check, not as the
//! decision procedure.
//!
//! Geometrically, `f(e^{it}) = 0` forces `S(t) = 0` and `k = −1/C(t)`, so
//! the boundary gains are read off the zero set of `S`; see
//! [`critical_gains`].

use crate::error::{Error, Result};
use crate::extremal;
use crate::trigpoly::CoeffVector;

/// Default reflection-coefficient boundary band.
pub const DEFAULT_SCHUR_TOL: f64 = 1e-10;
/// Default cap on the gain scan.
pub const DEFAULT_GAIN_CAP: f64 = 1e6;

/// Verdict of the Schur–Cohn test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stability {
    /// All reflection coefficients satisfy `|r| < 1 − tol`.
    Stable,
    /// Some `|r| > 1 + tol`.
    Unstable,
    /// Some `|r|` falls in the band `[1 − tol, 1 + tol]`.
    Boundary,
}

/// One side of the robust stability segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GainMargin {
    /// Stability is lost at this gain magnitude.
    Lost(f64),
    /// No loss of stability was observed up to the scan cap.
    AtLeast(f64),
}

impl GainMargin {
    /// The margin value when stability loss was observed.
    pub fn value(&self) -> Option<f64> {
        match *self {
            GainMargin::Lost(k) => Some(k),
            GainMargin::AtLeast(_) => None,
        }
    }
}

/// The robust stability segment `(−k₁, k₂)` of the gain family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityInterval {
    /// Magnitude of the negative-side margin.
    pub k1: GainMargin,
    /// Positive-side margin.
    pub k2: GainMargin,
}

impl StabilityInterval {
    /// Segment length `Φ = k₁ + k₂`, when both sides are bounded.
    pub fn phi(&self) -> Option<f64> {
        Some(self.k1.value()? + self.k2.value()?)
    }
}

/// Schur–Cohn test for a monic real polynomial given by descending
/// coefficients `[1, c₁, …, cₙ]`.
///
/// Repeatedly forms the reflection coefficient `r` (the ratio of the
/// constant term to the leading one) and reduces the degree; the
/// polynomial is Schur stable iff every `|r| < 1`. `tol` sets the
/// boundary band around `|r| = 1`.
pub fn is_schur_stable(monic: &[f64], tol: f64) -> Result<Stability> {
    if monic.len() < 2 {
        return Err(Error::domain("is_schur_stable: degree must be at least 1"));
    }
    if (monic[0] - 1.0).abs() > 1e-12 {
        return Err(Error::domain(format!(
            "is_schur_stable: polynomial must be monic (leading coefficient {})",
            monic[0]
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::domain("is_schur_stable: tol must be positive"));
    }
    let mut c = monic.to_vec();
    while c.len() > 1 {
        let r = c[c.len() - 1] / c[0];
        if r.abs() > 1.0 + tol {
            return Ok(Stability::Unstable);
        }
        if r.abs() >= 1.0 - tol {
            return Ok(Stability::Boundary);
        }
        let d = 1.0 - r * r;
        let m = c.len() - 1;
        c = (0..m).map(|i| (c[i] - r * c[m - i]) / d).collect();
    }
    Ok(Stability::Stable)
}

/// Coefficients of `f(λ) = λⁿ + k (a₁ λⁿ⁻¹ + … + aₙ)` in descending order.
pub fn gain_family_poly(a: &CoeffVector, k: f64) -> Vec<f64> {
    let mut p = Vec::with_capacity(a.n() + 1);
    p.push(1.0);
    p.extend(a.coeffs().iter().map(|&aj| k * aj));
    p
}

fn family_is_stable(a: &CoeffVector, k: f64, tol: f64) -> bool {
    matches!(
        is_schur_stable(&gain_family_poly(a, k), tol),
        Ok(Stability::Stable)
    )
}

/// First gain magnitude at which stability is lost on one side, found by a
/// geometric doubling scan from `1e−6` followed by bisection to width
/// `tol`. Returns `AtLeast(k_cap)` if the scan reaches the cap while the
/// family is still stable.
fn side_margin(a: &CoeffVector, sign: f64, k_cap: f64, tol: f64) -> GainMargin {
    let mut k = 1e-6;
    if !family_is_stable(a, sign * k, DEFAULT_SCHUR_TOL) {
        // unstable already at the scan origin: bisect down from there
        let (mut lo, mut hi) = (0.0, k);
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if family_is_stable(a, sign * mid, DEFAULT_SCHUR_TOL) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return GainMargin::Lost(0.5 * (lo + hi));
    }
    loop {
        let next = k * 2.0;
        if next > k_cap {
            return GainMargin::AtLeast(k_cap);
        }
        if !family_is_stable(a, sign * next, DEFAULT_SCHUR_TOL) {
            let (mut lo, mut hi) = (k, next);
            while hi - lo > tol {
                let mid = 0.5 * (lo + hi);
                if family_is_stable(a, sign * mid, DEFAULT_SCHUR_TOL) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return GainMargin::Lost(0.5 * (lo + hi));
        }
        k = next;
    }
}

/// Robust stability segment of the family with default cap `1e6` and
/// bisection width `1e−10`.
pub fn stability_interval(a: &CoeffVector) -> Result<StabilityInterval> {
    stability_interval_with(a, DEFAULT_GAIN_CAP, 1e-10)
}

/// Robust stability segment `(−k₁, k₂)`.
///
/// `k₂` is the smallest positive gain at which the Schur–Cohn verdict
/// stops being `Stable` (boundary counts as loss), `k₁` the analogue on
/// the negative side. The scan-then-bisect procedure reports the first
/// failure moving away from zero even if the stability set in `k` were
/// disconnected.
pub fn stability_interval_with(a: &CoeffVector, k_cap: f64, tol: f64) -> Result<StabilityInterval> {
    if !a.is_normalized() {
        return Err(Error::NotNormalized { sum: a.sum() });
    }
    if !(k_cap > 0.0) {
        return Err(Error::domain("stability_interval: k_cap must be positive"));
    }
    if !(tol > 0.0) {
        return Err(Error::domain("stability_interval: tol must be positive"));
    }
    Ok(StabilityInterval {
        k1: side_margin(a, -1.0, k_cap, tol),
        k2: side_margin(a, 1.0, k_cap, tol),
    })
}

/// Boundary gains from the geometric interpretation: at every zero `t` of
/// `S`, the gain `k = −1/C(t)` puts a root of the family on the unit
/// circle. Zeros where `|C| ≤ 1e−12` are skipped (no finite gain).
/// Sorted ascending, deduplicated within `1e−9`.
pub fn critical_gains(a: &CoeffVector) -> Result<Vec<f64>> {
    if !a.is_normalized() {
        return Err(Error::NotNormalized { sum: a.sum() });
    }
    let zs = a.zero_set_default()?;
    let mut gains: Vec<f64> = zs
        .zeros
        .iter()
        .map(|&z| a.eval_c(z))
        .filter(|c| c.abs() > 1e-12)
        .map(|c| -1.0 / c)
        .collect();
    gains.sort_by(|x, y| x.total_cmp(y));
    gains.dedup_by(|x, y| (*x - *y).abs() < 1e-9);
    Ok(gains)
}

/// `max k₂ = cot²(π/(2(n+1))) = −1/I`, attained by the extremal
/// coefficients.
pub fn max_k2_bound(n: usize) -> Result<f64> {
    Ok(-1.0 / extremal::extremal_value(n)?)
}
