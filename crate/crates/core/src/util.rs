//! Small 1-D search primitives shared by the zero finder and the oracle.

/// Inverse golden ratio.
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section minimization of `f` on `[lo, hi]`.
///
/// Runs a fixed number of bracket contractions and returns the midpoint of
/// the final bracket together with its value. Requires `f` unimodal on the
/// bracket for a guarantee; on well-sampled smooth data the bracket is
/// narrow enough for that to hold.
pub(crate) fn golden_min<F: FnMut(f64) -> f64>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    iters: usize,
) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let xm = 0.5 * (lo + hi);
    let fm = f(xm);
    (xm, fm)
}

/// Golden-section maximization; see [`golden_min`].
pub(crate) fn golden_max<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    iters: usize,
) -> (f64, f64) {
    let (x, fneg) = golden_min(|x| -f(x), lo, hi, iters);
    (x, -fneg)
}

/// Bisection for a sign change of `f` on `[lo, hi]`, given `f(lo) = flo`.
///
/// Maintains the bracketing invariant and stops once the bracket is
/// narrower than `xtol`. Returns the bracket midpoint.
pub(crate) fn bisect_sign_change<F: FnMut(f64) -> f64>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    mut flo: f64,
    xtol: f64,
) -> f64 {
    for _ in 0..200 {
        if hi - lo <= xtol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 || (flo < 0.0) != (fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    0.5 * (lo + hi)
}
