//! Conjugate trigonometric polynomial pairs.
//!
//! A coefficient vector `a₁ … aₙ` defines the pair
//!
//! ```text
//! C(t) = Σ aⱼ cos jt,    S(t) = Σ aⱼ sin jt,
//! ```
//!
//! sharing one set of coefficients. This module provides evaluation, zero
//! and sign-change detection of `S` on `[0, π]`, the `ρ`/`ρ₁` functionals
//! (minimum of `C` over zeros of `S`, respectively over its strict sign
//! changes plus `π`), the parity partial-sum transform `γ`, and the
//! zero-factorization recursions
//!
//! ```text
//! S(t) = Π (cos t − cos tⱼ) · Σ aⱼ⁽ᵐ⁾ sin jt.
//! ```
//!
//! `S` vanishes identically at `0` and `π`, and periodicity plus oddness
//! make `[0, π]` the only interval that matters; all scanning happens there.

use crate::error::{Error, Result};
use crate::util::{bisect_sign_change, golden_min};
use std::f64::consts::PI;

/// Tolerance on `|Σ aⱼ − 1|` for a vector to count as normalized.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Abscissa tolerance for bisection refinement of zeros.
const ZERO_XTOL: f64 = 1e-12;

/// Relative residual tolerance accepted by the factorization operations.
const FACTOR_RESIDUAL_TOL: f64 = 1e-8;

/// Minimum pairwise gap between angles passed to [`CoeffVector::reduce_zeros`].
const DISTINCT_ANGLE_GAP: f64 = 1e-9;

/// Coefficients `a₁ … aₙ` of a conjugate trigonometric polynomial pair.
///
/// Index 0 of the stored slice is `a₁`. The vector must be nonempty; most
/// analysis operations additionally require the normalization `Σ aⱼ = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector {
    a: Vec<f64>,
}

/// Parity partial sums `γ₁ … γₙ`: `γₛ = Σ aⱼ` over `j ≥ s` of the same
/// parity as `s`. The normalization `Σ aⱼ = 1` is equivalent to
/// `γ₁ + γ₂ = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaVector {
    g: Vec<f64>,
}

/// Result of factoring `m` zeros out of `S`: the level `m`, the reduced
/// coefficients `a₁⁽ᵐ⁾ … a_{n−m}⁽ᵐ⁾` and the factored angles `t₁ … tₘ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedCoeffs {
    level: usize,
    coeffs: Vec<f64>,
    zeros: Vec<f64>,
}

/// Zeros of `S` on `[0, π]` with their sign-change classification.
///
/// `sign_changes` holds the strictly interior zeros where `S` takes both
/// strict signs; touching zeros (local minima of `|S|` that do not cross)
/// and the endpoints appear in `zeros` only. `π` is always a zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    /// All zeros, sorted ascending; `0` and `π` always present.
    pub zeros: Vec<f64>,
    /// Strictly sign-changing interior zeros, sorted ascending.
    pub sign_changes: Vec<f64>,
}

impl ZeroSet {
    /// Interior zeros that are not sign changes.
    pub fn touching(&self) -> Vec<f64> {
        self.zeros
            .iter()
            .copied()
            .filter(|&z| {
                z > 0.0 && z < PI && !self.sign_changes.iter().any(|&s| (s - z).abs() < 1e-12)
            })
            .collect()
    }
}

impl CoeffVector {
    /// Wraps coefficients `a₁ … aₙ` (element 0 is `a₁`).
    pub fn new(a: Vec<f64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::EmptyCoeffs);
        }
        if a.iter().any(|x| !x.is_finite()) {
            return Err(Error::domain("coefficients must be finite"));
        }
        Ok(CoeffVector { a })
    }

    /// Like [`CoeffVector::new`] but additionally requires `Σ aⱼ = 1`
    /// within [`NORMALIZATION_TOL`].
    pub fn normalized(a: Vec<f64>) -> Result<Self> {
        let v = Self::new(a)?;
        v.require_normalized()?;
        Ok(v)
    }

    /// Number of coefficients `n`.
    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// The coefficients; element 0 is `a₁`.
    pub fn coeffs(&self) -> &[f64] {
        &self.a
    }

    /// `Σ aⱼ`.
    pub fn sum(&self) -> f64 {
        self.a.iter().sum()
    }

    /// `Σ |aⱼ|`.
    pub fn abs_sum(&self) -> f64 {
        self.a.iter().map(|x| x.abs()).sum()
    }

    /// Whether `Σ aⱼ = 1` within [`NORMALIZATION_TOL`].
    pub fn is_normalized(&self) -> bool {
        (self.sum() - 1.0).abs() <= NORMALIZATION_TOL
    }

    fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized { sum: self.sum() })
        }
    }

    /// `C(t) = Σ aⱼ cos jt`. In particular `eval_c(0) = Σ aⱼ`.
    pub fn eval_c(&self, t: f64) -> f64 {
        self.eval_pair(t).1
    }

    /// `S(t) = Σ aⱼ sin jt`. Vanishes identically at `0` and `π`.
    pub fn eval_s(&self, t: f64) -> f64 {
        self.eval_pair(t).0
    }

    /// Evaluates `(S(t), C(t))` with one `sin_cos` call, advancing the
    /// harmonics by the angle-addition recurrence.
    pub fn eval_pair(&self, t: f64) -> (f64, f64) {
        let (s1, c1) = t.sin_cos();
        let (mut sj, mut cj) = (s1, c1);
        let mut s = 0.0;
        let mut c = 0.0;
        for &aj in &self.a {
            s += aj * sj;
            c += aj * cj;
            let s_next = sj * c1 + cj * s1;
            let c_next = cj * c1 - sj * s1;
            sj = s_next;
            cj = c_next;
        }
        (s, c)
    }

    /// `S` sampled on the uniform grid `tᵢ = iπ/(g−1)`, `i = 0 … g−1`.
    pub(crate) fn sample_s(&self, grid_points: usize) -> Vec<f64> {
        let step = PI / (grid_points - 1) as f64;
        (0..grid_points)
            .map(|i| self.eval_s(i as f64 * step))
            .collect()
    }

    /// Grid size used by the default zero scan: 64 samples per harmonic,
    /// at least 1024. `S` has at most `2n` zeros per period, so this
    /// cannot skip an oscillation.
    pub fn default_grid_points(&self) -> usize {
        (64 * self.n()).max(1024)
    }

    /// Zero scan with the default grid and the default touching-zero
    /// threshold `1e−9 · max |S|` over the grid.
    pub fn zero_set_default(&self) -> Result<ZeroSet> {
        self.zero_set_auto(self.default_grid_points())
    }

    /// Zero scan on `grid_points` samples with the touching-zero threshold
    /// derived from the sampled magnitude (`1e−9 · max |S|`).
    pub(crate) fn zero_set_auto(&self, grid_points: usize) -> Result<ZeroSet> {
        self.zero_scan(grid_points, None)
    }

    /// Zeros and sign changes of `S` on `[0, π]`.
    ///
    /// Samples `S` on a uniform grid, refines every strict sign-change
    /// bracket by bisection to abscissa tolerance `1e−12`, and polishes
    /// grid-local extrema of small magnitude to decide whether they hide a
    /// pair of crossings (a dip through zero thinner than the grid) or a
    /// touching zero (refined `|S|` below `tol` without a crossing).
    ///
    /// `tol` is the absolute threshold on the refined `|S|` below which a
    /// non-crossing local extremum counts as a touching zero.
    pub fn zero_set(&self, grid_points: usize, tol: f64) -> Result<ZeroSet> {
        if !(tol > 0.0) {
            return Err(Error::domain("zero_set: tol must be positive"));
        }
        self.zero_scan(grid_points, Some(tol))
    }

    fn zero_scan(&self, grid_points: usize, tol: Option<f64>) -> Result<ZeroSet> {
        if grid_points < 2 {
            return Err(Error::domain("zero_set: grid_points must be at least 2"));
        }
        let g = grid_points;
        let step = PI / (g - 1) as f64;

        let mut s = self.sample_s(g);
        let mut t: Vec<f64> = (0..g).map(|i| i as f64 * step).collect();
        // S(0) = S(π) = 0 identically, so the endpoint samples carry no
        // sign information. Probe just inside instead.
        let h = step * 1e-3;
        t[0] = h;
        t[g - 1] = PI - h;
        s[0] = self.eval_s(h);
        s[g - 1] = self.eval_s(PI - h);

        let tol = tol.unwrap_or_else(|| {
            1e-9 * s.iter().fold(0.0_f64, |m, &v| m.max(v.abs())).max(f64::MIN_POSITIVE)
        });
        // Fp noise floor of an S evaluation; dips shallower than this are
        // indistinguishable from a touching zero.
        let noise = 64.0 * f64::EPSILON * (1.0 + self.abs_sum());
        // |S''| <= Σ j² |a_j| bounds how far below its neighbours a dip
        // between two samples can reach.
        let curvature: f64 = self
            .a
            .iter()
            .enumerate()
            .map(|(i, &aj)| ((i + 1) * (i + 1)) as f64 * aj.abs())
            .sum();
        let dip_threshold = 2.0 * curvature * (0.5 * step) * (0.5 * step) + tol;

        #[derive(Clone, Copy, PartialEq)]
        enum Kind {
            Crossing,
            Touching,
        }
        let mut found: Vec<(f64, Kind)> = Vec::new();
        let f = |x: f64| self.eval_s(x);
        // A sample this small carries no sign information: a grid point
        // can land on (or next to) a zero, where the evaluated value is
        // pure rounding noise of either sign.
        let near_zero = |x: f64| x.abs() <= noise;

        // Strict sign-change brackets between clearly nonzero samples.
        for i in 0..g - 1 {
            if near_zero(s[i]) || near_zero(s[i + 1]) {
                continue;
            }
            if (s[i] < 0.0) != (s[i + 1] < 0.0) {
                let z = bisect_sign_change(f, t[i], t[i + 1], s[i], ZERO_XTOL);
                found.push((z, Kind::Crossing));
            }
        }

        // Refinement candidates: noise-level samples, and local extrema of
        // small magnitude (a dip through zero the grid stepped over, or a
        // touching zero between samples).
        for i in 1..g - 1 {
            let (refine_sign, bracket_lo, bracket_hi);
            if near_zero(s[i]) {
                if !near_zero(s[i - 1]) && !near_zero(s[i + 1]) {
                    if (s[i - 1] < 0.0) != (s[i + 1] < 0.0) {
                        // a plain crossing that happens to sit on a sample
                        let z = bisect_sign_change(f, t[i - 1], t[i + 1], s[i - 1], ZERO_XTOL);
                        found.push((z, Kind::Crossing));
                        continue;
                    }
                    // same-sign neighbours: extremum grazing zero
                    refine_sign = if s[i - 1] > 0.0 { 1.0 } else { -1.0 };
                } else {
                    // neighbours are noise too; best effort
                    found.push((t[i], Kind::Touching));
                    continue;
                }
                bracket_lo = t[i - 1];
                bracket_hi = t[i + 1];
            } else {
                let dip = s[i] > 0.0 && s[i] <= s[i - 1] && s[i] <= s[i + 1] && s[i] < dip_threshold;
                let bump =
                    s[i] < 0.0 && s[i] >= s[i - 1] && s[i] >= s[i + 1] && -s[i] < dip_threshold;
                if !(dip || bump) {
                    continue;
                }
                refine_sign = if dip { 1.0 } else { -1.0 };
                bracket_lo = t[i - 1];
                bracket_hi = t[i + 1];
            }
            let (xm, fm) = golden_min(|x| refine_sign * f(x), bracket_lo, bracket_hi, 70);
            let fm = refine_sign * fm;
            if refine_sign * fm < -noise {
                // The extremum crosses zero: two sign changes around it.
                let z1 = bisect_sign_change(f, bracket_lo, xm, refine_sign, ZERO_XTOL);
                let z2 = bisect_sign_change(f, xm, bracket_hi, fm, ZERO_XTOL);
                found.push((z1, Kind::Crossing));
                found.push((z2, Kind::Crossing));
            } else if fm.abs() <= tol {
                found.push((xm, Kind::Touching));
            }
        }

        // Merge duplicates (crossing classification wins) and clamp to the
        // open interval. Touching zeros within the probe distance of an
        // endpoint are indistinguishable from the endpoint zero itself.
        found.retain(|&(z, kind)| match kind {
            Kind::Crossing => z > h && z < PI - 0.5 * h,
            Kind::Touching => z > 2.0 * h && z < PI - 2.0 * h,
        });
        found.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut interior: Vec<(f64, Kind)> = Vec::with_capacity(found.len());
        for (z, kind) in found {
            match interior.last_mut() {
                Some((zl, kl)) if (z - *zl).abs() < DISTINCT_ANGLE_GAP => {
                    if kind == Kind::Crossing {
                        *kl = Kind::Crossing;
                    }
                }
                _ => interior.push((z, kind)),
            }
        }

        let mut zeros = Vec::with_capacity(interior.len() + 2);
        let mut sign_changes = Vec::new();
        zeros.push(0.0);
        for (z, kind) in interior {
            zeros.push(z);
            if kind == Kind::Crossing {
                sign_changes.push(z);
            }
        }
        zeros.push(PI);
        Ok(ZeroSet { zeros, sign_changes })
    }

    /// `ρ = min { C(t) : S(t) = 0 }` over the full zero set on `[0, π]`,
    /// endpoints and touching zeros included. Negative for every
    /// normalized vector.
    pub fn rho(&self) -> Result<f64> {
        self.require_normalized()?;
        let zs = self.zero_set_default()?;
        Ok(zs
            .zeros
            .iter()
            .map(|&z| self.eval_c(z))
            .fold(f64::INFINITY, f64::min))
    }

    /// `ρ₁ = min { C(t) : t ∈ T ∪ {π} }` where `T` is the set of strict
    /// sign changes of `S` inside `(0, π)`. Always `ρ ≤ ρ₁`.
    pub fn rho1(&self) -> Result<f64> {
        self.require_normalized()?;
        self.rho1_grid(self.default_grid_points())
    }

    /// `ρ₁` computed on an explicit grid size (normalization unchecked).
    pub(crate) fn rho1_grid(&self, grid_points: usize) -> Result<f64> {
        let zs = self.zero_set_auto(grid_points)?;
        let mut m = self.eval_c(PI);
        for &z in &zs.sign_changes {
            m = m.min(self.eval_c(z));
        }
        Ok(m)
    }

    /// Minimum of `S` over the interior `(0, π)`, with grid-local minima
    /// polished to full precision. Used as a feasibility margin for
    /// near-nonnegative polynomials.
    pub(crate) fn interior_min_s(&self, grid_points: usize) -> f64 {
        let g = grid_points.max(3);
        let s = self.sample_s(g);
        let step = PI / (g - 1) as f64;
        let f = |x: f64| self.eval_s(x);
        let mut best = f64::INFINITY;
        for i in 1..g - 1 {
            if s[i] <= s[i - 1] && s[i] <= s[i + 1] {
                let lo = (i as f64 - 1.0) * step;
                let hi = (i as f64 + 1.0) * step;
                let (_, fm) = golden_min(f, lo, hi, 60);
                best = best.min(fm);
            }
            best = best.min(s[i]);
        }
        best
    }

    /// Parity partial sums `γₛ = Σ { aⱼ : j ≥ s, j ≡ s (mod 2) }`.
    pub fn gamma_transform(&self) -> GammaVector {
        let n = self.n();
        let mut g = vec![0.0; n];
        // γ_s = a_s + γ_{s+2}, summed from the tail.
        for s in (0..n).rev() {
            g[s] = self.a[s] + if s + 2 < n { g[s + 2] } else { 0.0 };
        }
        GammaVector { g }
    }

    /// Factors one zero `t₁ ∈ (0, π)` of `S` out of the pair:
    ///
    /// ```text
    /// S(t) = (cos t − cos t₁) · Σ aⱼ⁽¹⁾ sin jt,
    /// C(t) = −a₁⁽¹⁾/2 + (cos t − cos t₁) · Σ aⱼ⁽¹⁾ cos jt.
    /// ```
    ///
    /// The reduced coefficients solve the coupling system by
    /// back-substitution from its last equation, which is exact and O(n).
    /// Rejects angles outside `(0, π)` and angles where `|S(t₁)|` exceeds
    /// the residual tolerance.
    pub fn factor_out_zero(&self, t1: f64) -> Result<ReducedCoeffs> {
        let reduced = factor_step(&self.a, t1)?;
        Ok(ReducedCoeffs {
            level: 1,
            coeffs: reduced,
            zeros: vec![t1],
        })
    }

    /// Iterated factorization at `m` pairwise-distinct zeros of `S`:
    ///
    /// ```text
    /// S(t) = Π (cos t − cos tⱼ) · Σ aⱼ⁽ᵐ⁾ sin jt.
    /// ```
    ///
    /// An empty list is the identity at level 0. Requires `m < n` and a
    /// minimum pairwise gap of `1e−9` between the angles.
    pub fn reduce_zeros(&self, zeros: &[f64]) -> Result<ReducedCoeffs> {
        let m = zeros.len();
        let n = self.n();
        if m >= n {
            return Err(Error::domain(format!(
                "reduce_zeros: need m < n, got m = {m} with n = {n}"
            )));
        }
        for (i, &ti) in zeros.iter().enumerate() {
            for &tj in &zeros[i + 1..] {
                if (ti - tj).abs() <= DISTINCT_ANGLE_GAP {
                    return Err(Error::domain(format!(
                        "reduce_zeros: angles {ti} and {tj} are not distinct"
                    )));
                }
            }
        }
        let mut coeffs = self.a.clone();
        for &tj in zeros {
            coeffs = factor_step(&coeffs, tj)?;
        }
        Ok(ReducedCoeffs {
            level: m,
            coeffs,
            zeros: zeros.to_vec(),
        })
    }
}

/// One step of the factorization recursion: given the coefficients of a
/// sine polynomial vanishing at `t1 ∈ (0, π)`, returns the coefficients of
/// the quotient by `(cos t − cos t1)`.
fn factor_step(a: &[f64], t1: f64) -> Result<Vec<f64>> {
    let n = a.len();
    if n < 2 {
        return Err(Error::domain(
            "factorization needs at least two coefficients",
        ));
    }
    if !(t1 > 0.0 && t1 < PI) {
        return Err(Error::domain(format!(
            "factorization angle must lie strictly inside (0, π), got {t1}"
        )));
    }
    let scale: f64 = a.iter().map(|x| x.abs()).sum();
    let residual = eval_sine_poly(a, t1).abs();
    let tol = FACTOR_RESIDUAL_TOL * (1.0 + scale);
    if residual > tol {
        return Err(Error::NotAZero {
            angle: t1,
            residual,
            tol,
        });
    }
    let c = t1.cos();
    let mut b = vec![0.0; n - 1];
    // Back-substitution from the last equation a_n = b_{n-1}/2 upward:
    //   b_{k-1} = 2 a_k + 2 c b_k - b_{k+1}   (b with index > n-1 read as 0).
    b[n - 2] = 2.0 * a[n - 1];
    for k in (2..=n - 1).rev() {
        let upper = if k <= n - 2 { b[k] } else { 0.0 };
        b[k - 2] = 2.0 * (a[k - 1] + c * b[k - 1]) - upper;
    }
    Ok(b)
}

fn eval_sine_poly(a: &[f64], t: f64) -> f64 {
    let (s1, c1) = t.sin_cos();
    let (mut sj, mut cj) = (s1, c1);
    let mut s = 0.0;
    for &aj in a {
        s += aj * sj;
        let s_next = sj * c1 + cj * s1;
        let c_next = cj * c1 - sj * s1;
        sj = s_next;
        cj = c_next;
    }
    s
}

/// Multiplies the sine polynomial `Σ bⱼ sin jt` by `(cos t − c)` in
/// coefficient space using the product-to-sum identities.
pub(crate) fn multiply_by_cos_factor(b: &[f64], c: f64) -> Vec<f64> {
    let k = b.len();
    let get = |i: isize| -> f64 {
        if i < 0 || i as usize >= k {
            0.0
        } else {
            b[i as usize]
        }
    };
    (0..=k)
        .map(|i| {
            let i = i as isize;
            0.5 * get(i - 1) - c * get(i) + 0.5 * get(i + 1)
        })
        .collect()
}

impl GammaVector {
    /// Wraps parity partial sums `γ₁ … γₙ` (element 0 is `γ₁`).
    pub fn new(g: Vec<f64>) -> Result<Self> {
        if g.is_empty() {
            return Err(Error::EmptyCoeffs);
        }
        Ok(GammaVector { g })
    }

    pub fn n(&self) -> usize {
        self.g.len()
    }

    /// The partial sums; element 0 is `γ₁`.
    pub fn values(&self) -> &[f64] {
        &self.g
    }

    /// Inverts the parity transform: `aⱼ = γⱼ − γⱼ₊₂` with
    /// `γₙ₊₁ = γₙ₊₂ = 0`.
    pub fn gamma_inverse(&self) -> CoeffVector {
        let n = self.g.len();
        let a = (0..n)
            .map(|j| self.g[j] - if j + 2 < n { self.g[j + 2] } else { 0.0 })
            .collect();
        CoeffVector { a }
    }

    /// Fejér coefficient inequality `|γ₂| ≤ cos(π/(n+1)) · |γ₁|`, a
    /// necessary condition for nonnegativity of `S(t)/sin t`. Trivially
    /// true when `γ₂` is absent (`n < 2`).
    pub fn fejer_bound_holds(&self) -> bool {
        if self.g.len() < 2 {
            return true;
        }
        let n = self.g.len() as f64;
        self.g[1].abs() <= (PI / (n + 1.0)).cos() * self.g[0].abs() + 1e-12
    }
}

impl ReducedCoeffs {
    /// Builds a factored representation directly from inner coefficients
    /// and angles in `(0, π)`; its [`ReducedCoeffs::compose`] is then the
    /// polynomial `Π (cos t − cos tⱼ) · Σ coeffsⱼ sin jt`.
    pub fn new(coeffs: Vec<f64>, zeros: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoeffs);
        }
        if let Some(&bad) = zeros.iter().find(|z| !(0.0 < **z && **z < PI)) {
            return Err(Error::domain(format!(
                "factored angle must lie strictly inside (0, π), got {bad}"
            )));
        }
        Ok(ReducedCoeffs {
            level: zeros.len(),
            coeffs,
            zeros,
        })
    }

    /// The factorization level `m`.
    pub fn level(&self) -> usize {
        self.level
    }

    /// The reduced coefficients `a₁⁽ᵐ⁾ … a_{n−m}⁽ᵐ⁾`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// The factored angles `t₁ … tₘ`.
    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    /// The inner sum `Σ aⱼ⁽ᵐ⁾ sin jt`.
    pub fn eval_inner_s(&self, t: f64) -> f64 {
        eval_sine_poly(&self.coeffs, t)
    }

    /// The recomposed polynomial `Π (cos t − cos tⱼ) · Σ aⱼ⁽ᵐ⁾ sin jt`,
    /// which reproduces the source `S` pointwise.
    pub fn recompose_s(&self, t: f64) -> f64 {
        let ct = t.cos();
        let prod: f64 = self.zeros.iter().map(|&tj| ct - tj.cos()).product();
        prod * self.eval_inner_s(t)
    }

    /// Expands the product back into plain coefficients. Inverse of
    /// [`CoeffVector::reduce_zeros`] up to rounding.
    pub fn compose(&self) -> Result<CoeffVector> {
        let mut coeffs = self.coeffs.clone();
        for &tj in &self.zeros {
            coeffs = multiply_by_cos_factor(&coeffs, tj.cos());
        }
        CoeffVector::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn cv(a: &[f64]) -> CoeffVector {
        CoeffVector::new(a.to_vec()).unwrap()
    }

    #[test]
    fn eval_c_examples() {
        assert_abs_diff_eq!(cv(&[1.0]).eval_c(PI), -1.0, epsilon = 1e-15);
        let a = cv(&[2.0 / 3.0, 1.0 / 3.0]);
        assert_abs_diff_eq!(a.eval_c(PI), -1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(a.eval_c(0.0), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn eval_s_examples() {
        assert_abs_diff_eq!(cv(&[1.0]).eval_s(PI / 2.0), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(cv(&[0.0, 1.0]).eval_s(PI / 4.0), 1.0, epsilon = 1e-15);
        let a = cv(&[2.0 / 3.0, 1.0 / 3.0]);
        assert_abs_diff_eq!(a.eval_s(PI / 2.0), 2.0 / 3.0, epsilon = 1e-15);
        // endpoint zeros up to rounding
        assert!(a.eval_s(0.0).abs() <= 1e-12 * a.abs_sum());
        assert!(a.eval_s(PI).abs() <= 1e-12 * a.abs_sum());
    }

    #[test]
    fn recurrence_matches_direct_eval() {
        let a = cv(&[0.3, -0.2, 0.55, 0.1, 0.25]);
        for i in 0..50 {
            let t = i as f64 * PI / 49.0;
            let direct_s: f64 = (1..=5).map(|j| a.coeffs()[j - 1] * (j as f64 * t).sin()).sum();
            let direct_c: f64 = (1..=5).map(|j| a.coeffs()[j - 1] * (j as f64 * t).cos()).sum();
            assert_abs_diff_eq!(a.eval_s(t), direct_s, epsilon = 1e-13);
            assert_abs_diff_eq!(a.eval_c(t), direct_c, epsilon = 1e-13);
        }
    }

    #[test]
    fn zero_set_sin_2t() {
        let zs = cv(&[0.0, 1.0]).zero_set_default().unwrap();
        assert_eq!(zs.zeros.len(), 3);
        assert_abs_diff_eq!(zs.zeros[1], PI / 2.0, epsilon = 1e-10);
        assert_eq!(zs.sign_changes.len(), 1);
        assert_abs_diff_eq!(zs.sign_changes[0], PI / 2.0, epsilon = 1e-10);
    }

    #[test]
    fn zero_set_nonnegative_pair() {
        // S = (2/3) sin t (1 + cos t) >= 0: no interior sign changes.
        let zs = cv(&[2.0 / 3.0, 1.0 / 3.0]).zero_set_default().unwrap();
        assert!(zs.sign_changes.is_empty());
        assert_eq!(zs.zeros.first(), Some(&0.0));
        assert_eq!(zs.zeros.last(), Some(&PI));
    }

    #[test]
    fn zero_set_sin_t() {
        let zs = cv(&[1.0]).zero_set_default().unwrap();
        assert_eq!(zs.zeros, vec![0.0, PI]);
        assert!(zs.sign_changes.is_empty());
    }

    #[test]
    fn zero_set_rejects_bad_arguments() {
        assert!(cv(&[1.0]).zero_set(1, 1e-9).is_err());
        assert!(cv(&[1.0]).zero_set(16, 0.0).is_err());
        assert!(cv(&[1.0]).zero_set(16, -1.0).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_abs_diff_eq!(cv(&[1.0]).rho().unwrap(), -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(cv(&[0.0, 1.0]).rho().unwrap(), -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            cv(&[2.0 / 3.0, 1.0 / 3.0]).rho().unwrap(),
            -1.0 / 3.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn rho1_examples() {
        assert_abs_diff_eq!(cv(&[0.0, 1.0]).rho1().unwrap(), -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            cv(&[2.0 / 3.0, 1.0 / 3.0]).rho1().unwrap(),
            -1.0 / 3.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(cv(&[1.0]).rho1().unwrap(), -1.0, epsilon = 1e-12);
    }

    #[test]
    fn rho_requires_normalization() {
        assert!(matches!(
            cv(&[0.5, 0.2]).rho(),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn gamma_transform_examples() {
        let g = cv(&[2.0 / 3.0, 1.0 / 3.0]).gamma_transform();
        assert_eq!(g.values(), &[2.0 / 3.0, 1.0 / 3.0]);

        let g = cv(&[0.439340, 0.414214, 0.146447]).gamma_transform();
        assert_abs_diff_eq!(g.values()[0], 0.585787, epsilon = 1e-6);
        assert_abs_diff_eq!(g.values()[1], 0.414214, epsilon = 1e-12);
        assert_abs_diff_eq!(g.values()[2], 0.146447, epsilon = 1e-12);

        let g = cv(&[1.0, 0.0, 0.0, 0.0]).gamma_transform();
        assert_eq!(g.values(), &[1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn gamma_inverse_examples() {
        let a = GammaVector::new(vec![2.0 / 3.0, 1.0 / 3.0])
            .unwrap()
            .gamma_inverse();
        assert_eq!(a.coeffs(), &[2.0 / 3.0, 1.0 / 3.0]);

        let a = GammaVector::new(vec![1.0, 1.0, 1.0]).unwrap().gamma_inverse();
        assert_eq!(a.coeffs(), &[0.0, 1.0, 1.0]);
    }

    #[test]
    fn fejer_bound_examples() {
        // equality case
        assert!(GammaVector::new(vec![2.0 / 3.0, 1.0 / 3.0])
            .unwrap()
            .fejer_bound_holds());
        // 0.5 > cos(pi/3) * 0.5 = 0.25
        assert!(!GammaVector::new(vec![0.5, 0.5]).unwrap().fejer_bound_holds());
        assert!(GammaVector::new(vec![1.0, 0.0]).unwrap().fejer_bound_holds());
        // n < 2 trivially true
        assert!(GammaVector::new(vec![0.3]).unwrap().fejer_bound_holds());
    }

    #[test]
    fn factor_sin_2t() {
        // sin 2t = 2 sin t cos t: factoring the zero at pi/2 leaves (2).
        let r = cv(&[0.0, 1.0]).factor_out_zero(PI / 2.0).unwrap();
        assert_eq!(r.level(), 1);
        assert_abs_diff_eq!(r.coeffs()[0], 2.0, epsilon = 1e-12);
        // Corollary: C(t1) = -a1^(1)/2
        assert_abs_diff_eq!(
            cv(&[0.0, 1.0]).eval_c(PI / 2.0),
            -r.coeffs()[0] / 2.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn factor_hand_example() {
        // 0.5 sin t + 0.5 sin 2t = (cos t + 1/2) sin t, zero at arccos(-1/2).
        let a = cv(&[0.5, 0.5]);
        let t1 = 2.0 * PI / 3.0;
        let r = a.factor_out_zero(t1).unwrap();
        assert_abs_diff_eq!(r.coeffs()[0], 1.0, epsilon = 1e-12);
        for i in 0..=100 {
            let t = i as f64 * PI / 100.0;
            assert_abs_diff_eq!(r.recompose_s(t), a.eval_s(t), epsilon = 1e-12);
        }
    }

    #[test]
    fn factor_rejects_bad_input() {
        let a = cv(&[0.5, 0.5]);
        assert!(a.factor_out_zero(0.0).is_err());
        assert!(a.factor_out_zero(PI).is_err());
        // 1.0 is not a zero of S
        assert!(matches!(
            a.factor_out_zero(1.0),
            Err(Error::NotAZero { .. })
        ));
        assert!(cv(&[1.0]).factor_out_zero(1.0).is_err());
    }

    #[test]
    fn reduce_empty_is_identity() {
        let a = cv(&[0.2, 0.3, 0.5]);
        let r = a.reduce_zeros(&[]).unwrap();
        assert_eq!(r.level(), 0);
        assert_eq!(r.coeffs(), a.coeffs());
        assert_eq!(r.compose().unwrap().coeffs(), a.coeffs());
    }

    #[test]
    fn reduce_matches_factor_at_level_one() {
        let a = cv(&[0.5, 0.5]);
        let t1 = 2.0 * PI / 3.0;
        let r1 = a.factor_out_zero(t1).unwrap();
        let r2 = a.reduce_zeros(&[t1]).unwrap();
        assert_eq!(r1, r2);
    }

    #[test]
    fn reduce_two_known_zeros() {
        // S = (cos t - cos 1)(cos t - cos 2) sin t expanded by hand:
        // a = (1/4 + cos1*cos2, -(cos1 + cos2)/2, 1/4).
        let (c1, c2) = (1.0_f64.cos(), 2.0_f64.cos());
        let a = cv(&[0.25 + c1 * c2, -(c1 + c2) / 2.0, 0.25]);
        let r = a.reduce_zeros(&[1.0, 2.0]).unwrap();
        assert_eq!(r.level(), 2);
        assert_eq!(r.coeffs().len(), 1);
        assert_abs_diff_eq!(r.coeffs()[0], 1.0, epsilon = 1e-12);
        for i in 0..=1000 {
            let t = i as f64 * PI / 1000.0;
            assert_abs_diff_eq!(r.recompose_s(t), a.eval_s(t), epsilon = 1e-12);
        }
    }

    #[test]
    fn reduce_rejects_bad_input() {
        let a = cv(&[0.2, 0.3, 0.5]);
        assert!(a.reduce_zeros(&[1.0, 1.0 + 1e-10]).is_err());
        assert!(a.reduce_zeros(&[0.5, 1.0, 1.5]).is_err()); // m >= n
    }

    #[test]
    fn compose_then_reduce_round_trip() {
        let inner = vec![0.7, -0.3, 0.45];
        let zeros = vec![0.9, 2.1];
        let r = ReducedCoeffs {
            level: 2,
            coeffs: inner.clone(),
            zeros: zeros.clone(),
        };
        let full = r.compose().unwrap();
        assert_eq!(full.n(), 5);
        let back = full.reduce_zeros(&zeros).unwrap();
        for (x, y) in back.coeffs().iter().zip(&inner) {
            assert_abs_diff_eq!(x, y, epsilon = 1e-12);
        }
    }

    #[test]
    fn touching_zero_detected() {
        // S = (cos t - cos 1.3)^2 sin t has a touching zero at 1.3.
        let r = ReducedCoeffs {
            level: 2,
            coeffs: vec![1.0],
            zeros: vec![1.3, 1.3],
        };
        let a = r.compose().unwrap();
        let zs = a.zero_set_default().unwrap();
        assert!(zs.sign_changes.is_empty());
        let touching = zs.touching();
        assert_eq!(touching.len(), 1);
        assert_abs_diff_eq!(touching[0], 1.3, epsilon = 1e-6);
    }

    #[test]
    fn thin_crossing_pair_detected() {
        // (cos t - cos(1.3 - d))(cos t - cos(1.3 + d)) sin t dips just below
        // zero near 1.3; the crossings are closer together than the default
        // grid step.
        let d = 1e-4;
        let r = ReducedCoeffs {
            level: 2,
            coeffs: vec![1.0],
            zeros: vec![1.3 - d, 1.3 + d],
        };
        let a = r.compose().unwrap();
        let zs = a.zero_set_default().unwrap();
        assert_eq!(zs.sign_changes.len(), 2);
        assert_abs_diff_eq!(zs.sign_changes[0], 1.3 - d, epsilon = 1e-8);
        assert_abs_diff_eq!(zs.sign_changes[1], 1.3 + d, epsilon = 1e-8);
    }
}
