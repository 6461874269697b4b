//! Extremal trigonometric polynomials and optimal stabilization of chaos.
//!
//! For the normalized conjugate pair `C(t) = Σ aⱼ cos jt`,
//! `S(t) = Σ aⱼ sin jt` with `Σ aⱼ = 1`, the supremum of
//! `min { C(t) : S(t) = 0 }` over all coefficient choices equals
//! `−tan²(π/(2(n+1)))`, attained by a unique nonnegative Fejér-kernel
//! polynomial. Two consequences drive everything in this crate:
//!
//! * the gain family `λⁿ + k(a₁λⁿ⁻¹ + … + aₙ)` has its longest robust
//!   Schur-stability segment `(−1, cot²(π/(2(n+1))))` exactly at those
//!   coefficients, and
//! * a delayed-feedback control built from them stabilizes an unstable
//!   fixed point of a scalar chaotic map with the smallest possible
//!   prehistory depth.
//!
//! Module map:
//!
//! * [`trigpoly`] — coefficient vectors, zero/sign-change analysis of `S`
//!   on `[0, π]`, the `ρ`/`ρ₁` functionals, the parity transform, and the
//!   zero-factorization recursions.
//! * [`extremal`] — the closed-form optimum `a⁰`, `γ⁰`,
//!   `I = −tan²(π/(2(n+1)))`, the Fejér kernel, and the `ε`-perturbation
//!   family.
//! * [`schur`] — Schur–Cohn stability test, robust gain margins `k₁`,
//!   `k₂`, `Φ`, and the geometric critical gains `−1/C(t)`.
//! * [`control`] — minimal prehistory depth, gain synthesis, closed-loop
//!   multipliers, and simulation of controlled scalar maps.
//! * [`oracle`] — polynomial roots by simultaneous iteration and a
//!   brute-force search confirming the supremum at desk scale.

pub mod control;
pub mod error;
pub mod extremal;
pub mod oracle;
pub mod schur;
pub mod trigpoly;
mod util;

pub use control::{
    closed_loop_multipliers, equilibrium_and_multiplier, min_depth, min_depth_floor_formula,
    optimal_controller, simulate, synthesize, Controller, CustomMap, LogisticMap, ScalarMap,
    SimulationTrace, TraceStatus,
};
pub use error::{Error, Result};
pub use extremal::{
    epsilon_family, extremal_value, fejer_kernel_value, optimal_coeffs, ExtremalSolution,
};
pub use oracle::{brute_force_sup, poly_roots, verify_theorem1, PolyRoots, SearchReport};
pub use schur::{
    critical_gains, is_schur_stable, max_k2_bound, stability_interval, GainMargin, Stability,
    StabilityInterval,
};
pub use trigpoly::{CoeffVector, GammaVector, ReducedCoeffs, ZeroSet};
