//! Delayed-feedback stabilization of scalar maps.
//!
//! An unstable equilibrium `x*` of `x_{n+1} = f(x_n)` with multiplier
//! `μ = f'(x*) ∈ (−μ*, −1)` is stabilized by the control
//!
//! ```text
//! u = Σ εⱼ f(x_{n−j+1}),    Σ εⱼ = 0,  |εⱼ| < 1,
//! ```
//!
//! which leaves `x*` an equilibrium of the closed loop
//!
//! ```text
//! x_{n+1} = (1 + ε₁) f(x_n) + Σ_{j≥2} εⱼ f(x_{n−j+1}).
//! ```
//!
//! The closed-loop multipliers solve
//!
//! ```text
//! λᴺ + |μ| ((1 + ε₁) λᴺ⁻¹ + ε₂ λᴺ⁻² + … + ε_N) = 0,
//! ```
//!
//! and the smallest usable prehistory depth is
//! `N* = ⌊π/(2 arccot √μ*)⌋ − 1`, with the gains taken from the extremal
//! coefficients: `ε₁ = a₁⁰ − 1`, `εⱼ = aⱼ⁰` for `j ≥ 2`.

use crate::error::{Error, Result};
use crate::extremal::optimal_coeffs;
use crate::oracle;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Tolerance on `Σ εⱼ = 0` for a valid controller.
pub const GAIN_SUM_TOL: f64 = 1e-12;

/// A scalar discrete-time map on a bounded interval.
pub trait ScalarMap {
    /// `f(x)`.
    fn eval(&self, x: f64) -> f64;
    /// `f'(x)`.
    fn derivative(&self, x: f64) -> f64;
    /// The closed interval the map is declared on.
    fn domain(&self) -> (f64, f64);
    /// The interior equilibrium `x*` for the current parameters, if any.
    fn equilibrium(&self) -> Option<f64>;
}

/// The logistic map `f(x) = h·x·(1−x)` on `[0, 1]`, `h ∈ [0, 4]`.
///
/// For `h > 1` the interior equilibrium is `x* = 1 − 1/h` with multiplier
/// `μ = 2 − h`; it is unstable for `h > 3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogisticMap {
    h: f64,
}

impl LogisticMap {
    pub fn new(h: f64) -> Result<Self> {
        if !(0.0..=4.0).contains(&h) {
            return Err(Error::domain(format!(
                "logistic map parameter must lie in [0, 4], got {h}"
            )));
        }
        Ok(LogisticMap { h })
    }

    pub fn h(&self) -> f64 {
        self.h
    }
}

impl ScalarMap for LogisticMap {
    fn eval(&self, x: f64) -> f64 {
        self.h * x * (1.0 - x)
    }

    fn derivative(&self, x: f64) -> f64 {
        self.h * (1.0 - 2.0 * x)
    }

    fn domain(&self) -> (f64, f64) {
        (0.0, 1.0)
    }

    fn equilibrium(&self) -> Option<f64> {
        (self.h > 1.0).then(|| 1.0 - 1.0 / self.h)
    }
}

/// A user-supplied scalar map: evaluation rule, derivative rule, domain,
/// and (optionally) the interior equilibrium.
pub struct CustomMap {
    eval: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    derivative: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    domain: (f64, f64),
    equilibrium: Option<f64>,
}

impl CustomMap {
    pub fn new(
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        derivative: impl Fn(f64) -> f64 + Send + Sync + 'static,
        domain: (f64, f64),
        equilibrium: Option<f64>,
    ) -> Result<Self> {
        if !(domain.0 < domain.1) {
            return Err(Error::domain("map domain must be a nonempty interval"));
        }
        Ok(CustomMap {
            eval: Box::new(eval),
            derivative: Box::new(derivative),
            domain,
            equilibrium,
        })
    }
}

impl ScalarMap for CustomMap {
    fn eval(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    fn derivative(&self, x: f64) -> f64 {
        (self.derivative)(x)
    }

    fn domain(&self) -> (f64, f64) {
        self.domain
    }

    fn equilibrium(&self) -> Option<f64> {
        self.equilibrium
    }
}

/// The interior equilibrium and its multiplier `μ = f'(x*)`.
pub fn equilibrium_and_multiplier(map: &dyn ScalarMap) -> Result<(f64, f64)> {
    let x_star = map.equilibrium().ok_or(Error::NoInteriorEquilibrium)?;
    Ok((x_star, map.derivative(x_star)))
}

/// Delayed-feedback gains `ε₁ … ε_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct Controller {
    eps: Vec<f64>,
}

impl Controller {
    /// Validates `Σ εⱼ = 0` within [`GAIN_SUM_TOL`] and `|εⱼ| < 1`.
    pub fn new(eps: Vec<f64>) -> Result<Self> {
        if eps.is_empty() {
            return Err(Error::domain("controller needs at least one gain"));
        }
        let sum: f64 = eps.iter().sum();
        if sum.abs() > GAIN_SUM_TOL {
            return Err(Error::domain(format!(
                "controller gains must sum to 0 (got {sum:.3e})"
            )));
        }
        if let Some(bad) = eps.iter().find(|e| e.abs() >= 1.0) {
            return Err(Error::domain(format!(
                "controller gains must satisfy |ε| < 1 (got {bad})"
            )));
        }
        Ok(Controller { eps })
    }

    /// The gains `ε₁ … ε_N`; element 0 is `ε₁`.
    pub fn gains(&self) -> &[f64] {
        &self.eps
    }

    /// Number of gains `N`.
    pub fn taps(&self) -> usize {
        self.eps.len()
    }

    /// Prehistory depth `N* = N − 1`.
    pub fn depth(&self) -> usize {
        self.eps.len() - 1
    }

    /// Total gain budget `Σ |εⱼ|`; equals `2(1 − a₁⁰) < 2` for
    /// synthesized controllers.
    pub fn gain_budget(&self) -> f64 {
        self.eps.iter().map(|e| e.abs()).sum()
    }
}

fn cot2_half(n_taps: usize) -> f64 {
    let t = (PI / (2.0 * (n_taps as f64 + 1.0))).tan();
    1.0 / (t * t)
}

/// Minimal prehistory depth `N*` stabilizing every multiplier
/// `μ ∈ (−μ*, −1)`.
///
/// `N* + 1` is the smallest tap count `N` with
/// `cot²(π/(2(N+1))) > μ*`; values of `μ*` within `1e−9` (relative) of
/// the boundary count as on it, so exact-boundary inputs such as
/// `μ* = 3` resolve the way the closed-form
/// `⌊π/(2 arccot √μ*)⌋ − 1` does. Agreement with that closed form is
/// asserted away from boundaries.
pub fn min_depth(mu_star: f64) -> Result<usize> {
    if !(mu_star > 1.0) || !mu_star.is_finite() {
        return Err(Error::domain(format!(
            "min_depth: mu_star must exceed 1, got {mu_star}"
        )));
    }
    let guard = 1e-9 * mu_star;
    let mut n_taps = 1usize;
    while cot2_half(n_taps) <= mu_star + guard {
        n_taps += 1;
        if n_taps > 1 << 30 {
            return Err(Error::domain("min_depth: mu_star out of range"));
        }
    }
    let depth = n_taps - 1;
    #[cfg(debug_assertions)]
    {
        let x = PI / (2.0 * (1.0 / mu_star.sqrt()).atan());
        if (x - x.round()).abs() > 1e-8 * x {
            debug_assert_eq!(depth, min_depth_floor_formula(mu_star).unwrap());
        }
    }
    Ok(depth)
}

/// The closed form `N* = ⌊π/(2 arccot √μ*)⌋ − 1`, with `arccot` on the
/// branch `(0, π/2)` via `arccot x = arctan(1/x)`. Arguments within
/// `1e−9` (relative) of an integer are snapped to it before flooring.
pub fn min_depth_floor_formula(mu_star: f64) -> Result<usize> {
    if !(mu_star > 1.0) || !mu_star.is_finite() {
        return Err(Error::domain(format!(
            "min_depth: mu_star must exceed 1, got {mu_star}"
        )));
    }
    let x = PI / (2.0 * (1.0 / mu_star.sqrt()).atan());
    let floored = if (x - x.round()).abs() <= 1e-9 * x.max(1.0) {
        x.round()
    } else {
        x.floor()
    };
    Ok(floored as usize - 1)
}

/// Optimal delayed-feedback gains for multipliers in `(−μ*, −1)`:
/// `N = N* + 1` taps with `ε₁ = a₁⁰ − 1` and `εⱼ = aⱼ⁰` for `j ≥ 2`,
/// where `a⁰` are the extremal coefficients at `n = N`.
pub fn synthesize(mu_star: f64) -> Result<Controller> {
    let n_taps = min_depth(mu_star)? + 1;
    optimal_controller(n_taps)
}

/// The controller built from the extremal coefficients at a fixed tap
/// count, regardless of any `μ*`.
pub fn optimal_controller(n_taps: usize) -> Result<Controller> {
    let a0 = optimal_coeffs(n_taps)?.a0;
    let mut eps = a0.coeffs().to_vec();
    eps[0] -= 1.0;
    Controller::new(eps)
}

/// Descending coefficients of the characteristic polynomial
/// `λᴺ + |μ|((1+ε₁)λᴺ⁻¹ + ε₂λᴺ⁻² + … + ε_N)`.
pub fn characteristic_poly(mu: f64, c: &Controller) -> Vec<f64> {
    let am = mu.abs();
    let mut p = Vec::with_capacity(c.taps() + 1);
    p.push(1.0);
    p.push(am * (1.0 + c.gains()[0]));
    p.extend(c.gains()[1..].iter().map(|&e| am * e));
    p
}

/// All `N` closed-loop multipliers (roots of the characteristic
/// equation), sorted by real part then imaginary part. The closed loop is
/// locally stable at `x*` iff every modulus is below 1.
pub fn closed_loop_multipliers(mu: f64, c: &Controller) -> Result<Vec<Complex64>> {
    let mut roots = oracle::poly_roots(&characteristic_poly(mu, c))?.roots;
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

/// How a simulation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceStatus {
    /// All requested steps executed.
    Completed,
    /// The state left the declared domain at this index; the trace is
    /// truncated there (the escaping state is recorded).
    EscapedDomain { step: usize },
}

/// Time-indexed orbit of the open- or closed-loop map.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationTrace {
    /// States `x₀ … x_T`.
    pub states: Vec<f64>,
    /// The equilibrium the run is measured against, when the map has one.
    pub target: Option<f64>,
    /// Whether `|xₙ − x*|` stayed below the tolerance over the final 10 %
    /// of a completed trace.
    pub converged: bool,
    /// First index from which the deviation stays below the tolerance to
    /// the end; present only when converged.
    pub settling_index: Option<usize>,
    pub status: TraceStatus,
}

/// Iterates the closed loop (or the plain map when `controller` is
/// `None`) from constant prehistory `x₀ = x₋₁ = … = x₋(N−1) = x0`.
///
/// Convergence is judged on the final 10 % of the trace against
/// `conv_tol`. The control law does not preserve the domain in general;
/// a state leaving it truncates the trace with an explicit status rather
/// than clamping.
pub fn simulate(
    map: &dyn ScalarMap,
    controller: Option<&Controller>,
    x0: f64,
    steps: usize,
    conv_tol: f64,
) -> Result<SimulationTrace> {
    let (lo, hi) = map.domain();
    if !(lo..=hi).contains(&x0) {
        return Err(Error::domain(format!(
            "x0 = {x0} outside the map domain [{lo}, {hi}]"
        )));
    }
    if steps == 0 {
        return Err(Error::domain("simulate: steps must be at least 1"));
    }
    if !(conv_tol > 0.0) {
        return Err(Error::domain("simulate: conv_tol must be positive"));
    }

    let target = map.equilibrium();
    let n_taps = controller.map_or(1, Controller::taps);
    // history[j] = f-argument x_{n-j}; constant prehistory seeding.
    let mut history = vec![x0; n_taps];
    let mut states = Vec::with_capacity(steps + 1);
    states.push(x0);
    let mut status = TraceStatus::Completed;

    for step in 1..=steps {
        let next = match controller {
            None => map.eval(history[0]),
            Some(c) => {
                let mut v = (1.0 + c.gains()[0]) * map.eval(history[0]);
                for (j, &e) in c.gains().iter().enumerate().skip(1) {
                    v += e * map.eval(history[j]);
                }
                v
            }
        };
        states.push(next);
        if !(lo..=hi).contains(&next) {
            status = TraceStatus::EscapedDomain { step };
            break;
        }
        history.rotate_right(1);
        history[0] = next;
    }

    let (converged, settling_index) = match (target, status) {
        (Some(xs), TraceStatus::Completed) => {
            let tail = states.len().div_ceil(10).max(1);
            let tail_start = states.len() - tail;
            let ok = states[tail_start..].iter().all(|x| (x - xs).abs() < conv_tol);
            if ok {
                let last_bad = states.iter().rposition(|x| (x - xs).abs() >= conv_tol);
                (true, Some(last_bad.map_or(0, |i| i + 1)))
            } else {
                (false, None)
            }
        }
        _ => (false, None),
    };

    Ok(SimulationTrace {
        states,
        target,
        converged,
        settling_index,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn logistic_equilibria() {
        let (x, mu) = equilibrium_and_multiplier(&LogisticMap::new(3.8).unwrap()).unwrap();
        assert_abs_diff_eq!(x, 1.0 - 1.0 / 3.8, epsilon = 1e-15);
        assert_abs_diff_eq!(mu, -1.8, epsilon = 1e-12);

        let (x, mu) = equilibrium_and_multiplier(&LogisticMap::new(4.0).unwrap()).unwrap();
        assert_abs_diff_eq!(x, 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(mu, -2.0, epsilon = 1e-15);

        let (x, mu) = equilibrium_and_multiplier(&LogisticMap::new(2.0).unwrap()).unwrap();
        assert_abs_diff_eq!(x, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(mu, 0.0, epsilon = 1e-15);

        assert!(matches!(
            equilibrium_and_multiplier(&LogisticMap::new(0.9).unwrap()),
            Err(Error::NoInteriorEquilibrium)
        ));
        assert!(LogisticMap::new(4.2).is_err());
    }

    #[test]
    fn min_depth_examples() {
        assert_eq!(min_depth(2.0).unwrap(), 1);
        assert_eq!(min_depth(3.0).unwrap(), 2);
        assert_eq!(min_depth(1.5).unwrap(), 1);
        assert!(min_depth(1.0).is_err());
        assert!(min_depth(0.5).is_err());
    }

    #[test]
    fn floor_formula_examples() {
        assert_eq!(min_depth_floor_formula(2.0).unwrap(), 1);
        assert_eq!(min_depth_floor_formula(3.0).unwrap(), 2);
        assert_eq!(min_depth_floor_formula(1.5).unwrap(), 1);
    }

    #[test]
    fn synthesize_examples() {
        let c = synthesize(2.0).unwrap();
        assert_eq!(c.taps(), 2);
        assert_abs_diff_eq!(c.gains()[0], -1.0 / 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(c.gains()[1], 1.0 / 3.0, epsilon = 1e-14);

        let c = synthesize(1.2).unwrap();
        assert_eq!(c.taps(), 2);
        assert_abs_diff_eq!(c.gains()[0], -1.0 / 3.0, epsilon = 1e-14);

        let c = synthesize(3.0).unwrap();
        assert_eq!(c.taps(), 3);
        assert_abs_diff_eq!(c.gains()[0], -0.560660, epsilon = 1e-6);
        assert_abs_diff_eq!(c.gains()[1], 0.414214, epsilon = 1e-6);
        assert_abs_diff_eq!(c.gains()[2], 0.146447, epsilon = 1e-6);

        assert!(synthesize(1.0).is_err());
    }

    #[test]
    fn controller_validation() {
        assert!(Controller::new(vec![]).is_err());
        assert!(Controller::new(vec![0.5]).is_err()); // sum != 0
        assert!(Controller::new(vec![-1.0, 1.0]).is_err()); // |eps| >= 1
        assert!(Controller::new(vec![0.0, 0.0]).is_ok());
        let c = Controller::new(vec![-1.0 / 3.0, 1.0 / 3.0]).unwrap();
        assert_eq!(c.depth(), 1);
        assert_abs_diff_eq!(c.gain_budget(), 2.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn gain_budget_examples() {
        let c = synthesize(3.0).unwrap();
        assert_abs_diff_eq!(c.gain_budget(), 1.121320, epsilon = 1e-6);
        let zero = Controller::new(vec![0.0, 0.0, 0.0]).unwrap();
        assert_abs_diff_eq!(zero.gain_budget(), 0.0, epsilon = 0.0);
    }

    #[test]
    fn multiplier_examples() {
        let c = Controller::new(vec![-1.0 / 3.0, 1.0 / 3.0]).unwrap();
        // λ² + 1.2λ + 0.6: both moduli √0.6
        let roots = closed_loop_multipliers(-1.8, &c).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert_abs_diff_eq!(r.norm(), 0.6_f64.sqrt(), epsilon = 1e-10);
        }
        // |μ| = 3 sits exactly on the margin: (λ+1)²
        let roots = closed_loop_multipliers(-3.0, &c).unwrap();
        for r in &roots {
            assert_abs_diff_eq!(r.norm(), 1.0, epsilon = 1e-6);
        }
        // μ = 0: λᴺ
        let roots = closed_loop_multipliers(0.0, &c).unwrap();
        for r in &roots {
            assert!(r.norm() < 1e-5);
        }
    }

    #[test]
    fn simulate_stabilizes_example() {
        let map = LogisticMap::new(3.8).unwrap();
        let c = synthesize(2.0).unwrap();
        let x_star = 1.0 - 1.0 / 3.8;
        let tr = simulate(&map, Some(&c), x_star + 0.03, 1000, 1e-8).unwrap();
        assert_eq!(tr.status, TraceStatus::Completed);
        assert!(tr.converged);
        assert_abs_diff_eq!(*tr.states.last().unwrap(), x_star, epsilon = 1e-8);
        assert!(tr.settling_index.unwrap() <= 1000);
    }

    #[test]
    fn simulate_open_loop_diverges() {
        let map = LogisticMap::new(3.8).unwrap();
        let x_star = 1.0 - 1.0 / 3.8;
        let tr = simulate(&map, None, x_star + 0.03, 1000, 1e-8).unwrap();
        assert!(!tr.converged);
    }

    #[test]
    fn simulate_stable_open_loop() {
        let map = LogisticMap::new(2.5).unwrap();
        let tr = simulate(&map, None, 0.3, 200, 1e-8).unwrap();
        assert!(tr.converged);
        assert_abs_diff_eq!(*tr.states.last().unwrap(), 0.6, epsilon = 1e-8);
    }

    #[test]
    fn simulate_validates_input() {
        let map = LogisticMap::new(2.5).unwrap();
        assert!(simulate(&map, None, 1.5, 10, 1e-8).is_err());
        assert!(simulate(&map, None, 0.5, 0, 1e-8).is_err());
        assert!(simulate(&map, None, 0.5, 10, 0.0).is_err());
    }

    #[test]
    fn simulate_reports_escape() {
        // A map declared on [0, 1] that jumps out of it.
        let map = CustomMap::new(|x| x + 0.4, |_| 1.0, (0.0, 1.0), None).unwrap();
        let tr = simulate(&map, None, 0.5, 10, 1e-8).unwrap();
        assert!(matches!(tr.status, TraceStatus::EscapedDomain { step: 2 }));
        assert_eq!(tr.states.len(), 3); // x0, one good step, the escape
        assert!(!tr.converged);
    }

    #[test]
    fn equilibrium_is_fixed_point_of_closed_loop() {
        let map = LogisticMap::new(3.8).unwrap();
        let c = synthesize(2.0).unwrap();
        let x_star = 1.0 - 1.0 / 3.8;
        let mut v = (1.0 + c.gains()[0]) * map.eval(x_star);
        for &e in &c.gains()[1..] {
            v += e * map.eval(x_star);
        }
        assert_abs_diff_eq!(v, x_star, epsilon = 1e-12);
    }

    #[test]
    fn custom_map_hook() {
        // tent-like map with known fixed point 2/3 for slope 2
        let map = CustomMap::new(
            |x| 2.0 * (1.0 - (2.0 * x - 1.0).abs()) / 2.0,
            |x| if x < 0.5 { 2.0 } else { -2.0 },
            (0.0, 1.0),
            Some(2.0 / 3.0),
        )
        .unwrap();
        let (xs, mu) = equilibrium_and_multiplier(&map).unwrap();
        assert_abs_diff_eq!(xs, 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(mu, -2.0, epsilon = 1e-15);
    }
}
