//! Gauss-Legendre quadrature used by the characteristic-function layer and
//! the Fourier pricing integrals.
//!
//! Two flavours are provided:
//!
//! * fixed-order complex rules ([`gl64`], [`gl128`]) for the short, smooth
//!   kernel integrals inside the log-characteristic functions — evaluating
//!   the same integral at two orders gives a cheap, reliable refinement
//!   check;
//! * an adaptive panel integrator ([`adaptive_gl`]) for semi-infinite
//!   pricing integrals, which compares embedded 16- and 32-point estimates
//!   per panel and bisects until a global absolute-error budget is met.
//!
//! The node tables live in [`crate::gl_tables`] and were generated offline
//! with 40-digit arithmetic, so the rules are exact to machine precision for
//! polynomials up to degree `2n - 1`.

use num_complex::Complex64;

use crate::error::EngineError;
use crate::gl_tables::{
    GL128_NODES, GL128_WEIGHTS, GL16_NODES, GL16_WEIGHTS, GL32_NODES, GL32_WEIGHTS, GL64_NODES,
    GL64_WEIGHTS,
};
use crate::Result;

/// Fixed-order Gauss-Legendre rule for a complex-valued integrand on
/// `[lo, hi]`.
fn gl_fixed<F>(f: F, lo: f64, hi: f64, nodes: &[f64], weights: &[f64]) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, w) in nodes.iter().zip(weights) {
        acc += f(mid + half * x) * *w;
    }
    acc * half
}

/// 64-point Gauss-Legendre rule on `[lo, hi]`.
pub(crate) fn gl64<F>(f: F, lo: f64, hi: f64) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    gl_fixed(f, lo, hi, &GL64_NODES, &GL64_WEIGHTS)
}

/// 128-point Gauss-Legendre rule on `[lo, hi]`.
pub(crate) fn gl128<F>(f: F, lo: f64, hi: f64) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    gl_fixed(f, lo, hi, &GL128_NODES, &GL128_WEIGHTS)
}

/// Composite fixed-order rule: `panels` equal subintervals of `[lo, hi]`,
/// each integrated with the 64-point (`fine = false`) or 128-point
/// (`fine = true`) rule.
///
/// Strong mean reversion squeezes the kernel integrands into a boundary
/// layer that a single panel cannot resolve; splitting the interval
/// restores spectral accuracy per panel.
pub(crate) fn gl_composite<F>(f: F, lo: f64, hi: f64, panels: usize, fine: bool) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let width = (hi - lo) / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let a = lo + p as f64 * width;
        let b = if p + 1 == panels { hi } else { a + width };
        acc += if fine {
            gl128(&f, a, b)
        } else {
            gl64(&f, a, b)
        };
    }
    acc
}

/// Maximum number of panels the adaptive integrator may generate before
/// giving up; generous enough for every integrand in this crate while still
/// terminating on pathological input.
const ADAPTIVE_MAX_PANELS: usize = 200_000;

/// Adaptive Gauss-Legendre integration of a real integrand on `[lo, hi]`
/// to an absolute accuracy `abs_tol`.
///
/// Each panel is evaluated with 16- and 32-point rules; the panel is
/// accepted when the two estimates agree within the panel's proportional
/// share of the global budget, and bisected otherwise. The integrand may
/// fail (e.g. a characteristic-function evaluation outside its domain), in
/// which case the first error is propagated.
///
/// # Errors
///
/// [`EngineError::QuadratureFailure`] if the panel budget is exhausted
/// before convergence, plus any error returned by the integrand itself.
pub(crate) fn adaptive_gl<F>(f: F, lo: f64, hi: f64, abs_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(abs_tol > 0.0) {
        return Err(EngineError::InvalidParameter {
            name: "abs_tol",
            reason: format!("must be > 0, got {abs_tol}"),
        });
    }
    if !(hi > lo) {
        return Err(EngineError::InvalidParameter {
            name: "interval",
            reason: format!("need lo < hi, got [{lo}, {hi}]"),
        });
    }

    let width_total = hi - lo;
    let mut stack = vec![(lo, hi)];
    let mut total = 0.0_f64;
    let mut panels = 0usize;

    while let Some((a, b)) = stack.pop() {
        panels += 1;
        if panels > ADAPTIVE_MAX_PANELS {
            return Err(EngineError::QuadratureFailure {
                context: format!(
                    "adaptive rule exceeded {ADAPTIVE_MAX_PANELS} panels on [{lo}, {hi}] \
                     at absolute tolerance {abs_tol:e}"
                ),
            });
        }

        let coarse = gl_fixed_real(&f, a, b, &GL16_NODES, &GL16_WEIGHTS)?;
        let fine = gl_fixed_real(&f, a, b, &GL32_NODES, &GL32_WEIGHTS)?;
        let budget = 0.9 * abs_tol * (b - a) / width_total;

        if (fine - coarse).abs() <= budget {
            total += fine;
        } else {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                // The panel is at floating-point resolution; the remaining
                // discrepancy cannot be reduced by further bisection.
                return Err(EngineError::QuadratureFailure {
                    context: format!(
                        "panel [{a}, {b}] reached floating-point resolution with residual \
                         {:e} above budget {budget:e}",
                        (fine - coarse).abs()
                    ),
                });
            }
            stack.push((a, mid));
            stack.push((mid, b));
        }
    }
    Ok(total)
}

/// Real-valued fixed rule with a fallible integrand.
fn gl_fixed_real<F>(f: &F, lo: f64, hi: f64, nodes: &[f64], weights: &[f64]) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        acc += f(mid + half * x)? * w;
    }
    Ok(acc * half)
}
