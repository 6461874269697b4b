//! Browser bindings for the interactive demo page.
//!
//! Three operations are exposed: the extremal polynomial pair and its
//! kernel as plot-ready curves, closed-loop stabilization of the logistic
//! map, and bifurcation sweeps with the controller on or off. All return
//! flat `Float64Array` buffers that the page slices for drawing.

use fejerstab::control::{simulate, synthesize, LogisticMap, ScalarMap, TraceStatus};
use fejerstab::extremal::{extremal_value, fejer_kernel_value, optimal_coeffs};
use fejerstab::schur::max_k2_bound;
use wasm_bindgen::prelude::*;

fn err_to_js(e: fejerstab::Error) -> JsError {
    JsError::new(&e.to_string())
}

/// The extremal value `I = -tan^2(pi/(2(n+1)))`.
#[wasm_bindgen]
pub fn extremal_value_of(n: usize) -> Result<f64, JsError> {
    extremal_value(n).map_err(err_to_js)
}

/// The largest robust gain margin `cot^2(pi/(2(n+1)))`.
#[wasm_bindgen]
pub fn max_gain_of(n: usize) -> Result<f64, JsError> {
    max_k2_bound(n).map_err(err_to_js)
}

/// The optimal coefficients `a0` for a given degree count.
#[wasm_bindgen]
pub fn optimal_coeffs_of(n: usize) -> Result<Vec<f64>, JsError> {
    Ok(optimal_coeffs(n).map_err(err_to_js)?.a0.coeffs().to_vec())
}

/// Rows `[t, S0(t), C0(t), kernel(t)]` flattened, sampled at `points`
/// angles across `[0, pi]`.
#[wasm_bindgen]
pub fn extremal_curves(n: usize, points: usize) -> Result<Vec<f64>, JsError> {
    let sol = optimal_coeffs(n).map_err(err_to_js)?;
    let points = points.max(2);
    let mut out = Vec::with_capacity(points * 4);
    for i in 0..points {
        let t = i as f64 * std::f64::consts::PI / (points - 1) as f64;
        let (s, c) = sol.a0.eval_pair(t);
        out.push(t);
        out.push(s);
        out.push(c);
        out.push(fejer_kernel_value(n, t).map_err(err_to_js)?);
    }
    Ok(out)
}

/// Delayed-feedback gains stabilizing every multiplier in
/// `(-mu_star, -1)`.
#[wasm_bindgen]
pub fn synthesized_gains(mu_star: f64) -> Result<Vec<f64>, JsError> {
    Ok(synthesize(mu_star).map_err(err_to_js)?.gains().to_vec())
}

/// The logistic interior equilibrium `1 - 1/h`, or NaN when h <= 1.
#[wasm_bindgen]
pub fn logistic_target(h: f64) -> f64 {
    LogisticMap::new(h)
        .ok()
        .and_then(|m| m.equilibrium())
        .unwrap_or(f64::NAN)
}

/// Orbit of the logistic map from `x0`, controlled (gains synthesized
/// from the map multiplier) or open loop. Escaping the domain truncates
/// the trace.
#[wasm_bindgen]
pub fn simulate_logistic(
    h: f64,
    x0: f64,
    steps: usize,
    controlled: bool,
) -> Result<Vec<f64>, JsError> {
    let map = LogisticMap::new(h).map_err(err_to_js)?;
    let controller = if controlled {
        match map.equilibrium().map(|xs| map.derivative(xs)) {
            Some(mu) if mu.abs() > 1.0 => Some(synthesize(mu.abs() + 1e-9).map_err(err_to_js)?),
            _ => None,
        }
    } else {
        None
    };
    let trace = simulate(&map, controller.as_ref(), x0, steps, 1e-8).map_err(err_to_js)?;
    Ok(trace.states)
}

/// Flattened `(h, x)` pairs of post-transient states across a parameter
/// range; with `controlled` the per-h synthesized feedback is applied.
/// Parameter values whose controlled orbit escapes contribute no pairs.
#[wasm_bindgen]
pub fn bifurcation_points(
    h_min: f64,
    h_max: f64,
    h_steps: usize,
    transient: usize,
    keep: usize,
    controlled: bool,
) -> Result<Vec<f64>, JsError> {
    if !(h_min < h_max) || h_steps < 2 {
        return Err(JsError::new("need h_min < h_max and at least 2 steps"));
    }
    let mut out = Vec::with_capacity(h_steps * keep * 2);
    for i in 0..h_steps {
        let h = h_min + (h_max - h_min) * i as f64 / (h_steps - 1) as f64;
        let map = LogisticMap::new(h).map_err(err_to_js)?;
        let controller = if controlled {
            match map.equilibrium().map(|xs| map.derivative(xs)) {
                Some(mu) if mu.abs() > 1.0 => {
                    Some(synthesize(mu.abs() + 1e-9).map_err(err_to_js)?)
                }
                _ => None,
            }
        } else {
            None
        };
        let trace = simulate(
            &map,
            controller.as_ref(),
            0.5,
            transient + keep,
            f64::MIN_POSITIVE,
        )
        .map_err(err_to_js)?;
        if trace.status == TraceStatus::Completed {
            for &x in trace.states.iter().skip(transient + 1) {
                out.push(h);
                out.push(x);
            }
        }
    }
    Ok(out)
}
