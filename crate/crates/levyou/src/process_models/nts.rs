//! Normal tempered-stable (NTS) building block.
//!
//! An NTS law is a Brownian motion with drift `theta` and volatility
//! `sigma`, evaluated at an independent tempered-stable subordinator with
//! unit mean rate and variance rate `kappa`; `alpha < 1` is the stability
//! exponent of the subordinator (`alpha = 0` is the Variance-Gamma case).
//! The characteristic exponent is
//!
//! ```text
//! psi(u) = (1 - alpha) / (kappa alpha) * [1 - g(u)^alpha],
//! g(u)   = 1 + kappa/(1 - alpha) * (sigma^2 u^2 / 2 - i theta u),
//! ```
//!
//! with the `alpha -> 0` limit `psi(u) = -ln(g0(u)) / kappa`,
//! `g0 = 1 + kappa (sigma^2 u^2 / 2 - i theta u)`.
//!
//! As in the TS module, everything is expressed through brackets that
//! vanish at `u = 0` and are evaluated by a stabilised series for small
//! arguments, so increments and finite differences keep full relative
//! accuracy. The two mean-reverting constructions mirror the TS ones: an OU
//! process driven by an NTS process (kernel integral along the flow) and an
//! OU process with NTS stationary law (exponent difference).

use num_complex::Complex64;
use statrs::function::gamma::gamma;

use crate::error::EngineError;
use crate::process_models::AnalyticityStrip;
use crate::process_models::ts::{flow_panels, truncated_flow_horizon};
use crate::quadrature::gl_composite;
use crate::Result;

/// Parameters of a normal tempered-stable law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NtsParams {
    /// Stability exponent of the subordinator, `< 1`.
    pub alpha: f64,
    /// Drift of the subordinated Brownian motion.
    pub theta: f64,
    /// Variance rate of the subordinator, `> 0`.
    pub kappa: f64,
    /// Volatility of the subordinated Brownian motion, `> 0`.
    pub sigma: f64,
}

impl NtsParams {
    /// Checks the parameter domain.
    ///
    /// # Errors
    ///
    /// [`EngineError::InvalidParameter`] naming the first violated
    /// constraint.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("alpha", self.alpha),
            ("theta", self.theta),
            ("kappa", self.kappa),
            ("sigma", self.sigma),
        ] {
            if !v.is_finite() {
                return Err(EngineError::InvalidParameter {
                    name,
                    reason: format!("must be finite, got {v}"),
                });
            }
        }
        if self.alpha >= 1.0 {
            return Err(EngineError::InvalidParameter {
                name: "alpha",
                reason: format!("must be < 1, got {}", self.alpha),
            });
        }
        if self.kappa <= 0.0 {
            return Err(EngineError::InvalidParameter {
                name: "kappa",
                reason: format!("must be > 0, got {}", self.kappa),
            });
        }
        if self.sigma <= 0.0 {
            return Err(EngineError::InvalidParameter {
                name: "sigma",
                reason: format!("must be > 0, got {}", self.sigma),
            });
        }
        Ok(())
    }

    /// `kappa / (1 - alpha)`, the scale entering `g(u)`; for `alpha = 0`
    /// this is just `kappa`.
    fn g_scale(&self) -> f64 {
        self.kappa / (1.0 - self.alpha)
    }
}

/// Strip of analyticity of the NTS characteristic function:
/// `((theta - A) / sigma^2, (theta + A) / sigma^2)` with
/// `A = sqrt(theta^2 + 2 sigma^2 (1 - alpha) / kappa)`.
///
/// These are exactly the imaginary arguments for which `Re g > 0`, keeping
/// every fractional power on the principal branch.
pub(crate) fn nts_strip(p: &NtsParams) -> AnalyticityStrip {
    let a = (p.theta * p.theta + 2.0 * p.sigma * p.sigma * (1.0 - p.alpha) / p.kappa).sqrt();
    AnalyticityStrip {
        p_minus: (p.theta - a) / (p.sigma * p.sigma),
        p_plus: (p.theta + a) / (p.sigma * p.sigma),
    }
}

/// Characteristic exponent `psi(u)` of the NTS law.
///
/// # Errors
///
/// Parameter errors from [`NtsParams::validate`], and
/// [`EngineError::OutsideStrip`] when `Im(u)` is not strictly inside the
/// strip of analyticity.
pub fn nts_characteristic_exponent(p: &NtsParams, u: Complex64) -> Result<Complex64> {
    p.validate()?;
    nts_strip(p).check_contains(u.im)?;
    Ok(nts_exponent_unchecked(p, u))
}

/// `g(u) - 1`, computed directly from the parameters (no cancellation).
fn g_minus_one(p: &NtsParams, u: Complex64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    p.g_scale() * (0.5 * p.sigma * p.sigma * u * u - i * p.theta * u)
}

/// Exponent evaluation without domain checks; callers guarantee validity.
pub(crate) fn nts_exponent_unchecked(p: &NtsParams, u: Complex64) -> Complex64 {
    let eps = g_minus_one(p, u);
    if p.alpha == 0.0 {
        -ln_one_plus(eps) / p.kappa
    } else {
        -(1.0 - p.alpha) / (p.kappa * p.alpha) * bracket_plus_pow(p.alpha, eps)
    }
}

/// Shared small-argument machinery (same cutoffs as the TS brackets).
const SERIES_CUTOFF: f64 = 1e-3;
const SERIES_TERMS: usize = 12;

/// `(1 + e)^alpha - 1`, accurate in relative terms near `e = 0`.
pub(crate) fn bracket_plus_pow(alpha: f64, e: Complex64) -> Complex64 {
    if e.norm_sqr() < SERIES_CUTOFF * SERIES_CUTOFF {
        // Binomial series: sum_{k>=1} C(alpha, k) e^k.
        let mut coef = 1.0;
        let mut pow = Complex64::new(1.0, 0.0);
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 1..=SERIES_TERMS {
            coef *= (alpha - (k as f64) + 1.0) / k as f64;
            pow *= e;
            acc += coef * pow;
        }
        acc
    } else {
        (1.0 + e).powf(alpha) - 1.0
    }
}

/// `ln(1 + e)`, accurate in relative terms near `e = 0`.
pub(crate) fn ln_one_plus(e: Complex64) -> Complex64 {
    if e.norm_sqr() < SERIES_CUTOFF * SERIES_CUTOFF {
        // sum_{k>=1} (-1)^{k+1} e^k / k.
        let mut pow = Complex64::new(1.0, 0.0);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut sign = 1.0;
        for k in 1..=SERIES_TERMS {
            pow *= e;
            acc += sign * pow / k as f64;
            sign = -sign;
        }
        acc
    } else {
        (1.0 + e).ln()
    }
}

/// Cumulant of order `k >= 1` of the time-1 NTS law:
///
/// `c_k = sum_{n=0}^{floor(k/2)} k!/(n! (k-2n)!) * G(k - alpha - n)/G(1 - alpha)
///        * (kappa/(1-alpha))^{k-1-n} * theta^{k-2n} * (sigma^2/2)^n`.
pub(crate) fn nts_cumulant_time1(p: &NtsParams, k: u32) -> f64 {
    let kk = k as i64;
    let mut total = 0.0;
    for n in 0..=(kk / 2) {
        let mut term = factorial(kk) / (factorial(n) * factorial(kk - 2 * n));
        term *= gamma(f64::from(k) - p.alpha - n as f64) / gamma(1.0 - p.alpha);
        term *= p.g_scale().powi((kk - 1 - n) as i32);
        term *= p.theta.powi((kk - 2 * n) as i32);
        term *= (0.5 * p.sigma * p.sigma).powi(n as i32);
        total += term;
    }
    total
}

fn factorial(n: i64) -> f64 {
    (1..=n).map(|v| v as f64).product()
}

/// Increment LCF of the OU process whose stationary law is NTS: the
/// exponent difference `psi(u) - psi(u e^{-b dt})`.
pub(crate) fn nts_ou_lcf(p: &NtsParams, b: f64, dt: f64, u: Complex64) -> Complex64 {
    nts_exponent_unchecked(p, u) - nts_exponent_unchecked(p, u * (-b * dt).exp())
}

/// Increment LCF of the OU process driven by an NTS process, evaluated with
/// a fixed-order Gauss-Legendre rule (64 or 128 nodes).
///
/// Along the flow `s in [0, dt]` the argument is `u e^{-b s}`, so the
/// integrand is the exponent bracket at `g(u e^{-b s}) - 1`; constant terms
/// cancel exactly, making the LCF vanish at `u = 0`. The same tail
/// truncation as the TS kernel applies.
pub(crate) fn ou_nts_lcf(p: &NtsParams, b: f64, dt: f64, u: Complex64, fine: bool) -> Complex64 {
    // |g - 1| decays like e^{-b s} once the quadratic term is subdominant;
    // bound its initial magnitude for the truncation rule.
    let r0 = g_minus_one(p, u).norm();
    let s_star = truncated_flow_horizon(r0, b, dt);
    let integrand = |s: f64| {
        let e = g_minus_one(p, u * (-b * s).exp());
        if p.alpha == 0.0 {
            ln_one_plus(e)
        } else {
            bracket_plus_pow(p.alpha, e)
        }
    };
    let integral = gl_composite(integrand, 0.0, s_star, flow_panels(b, s_star), fine);
    if p.alpha == 0.0 {
        -integral / p.kappa
    } else {
        -(1.0 - p.alpha) / (p.kappa * p.alpha) * integral
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn symmetric_params(alpha: f64) -> NtsParams {
        NtsParams {
            alpha,
            theta: 0.0,
            kappa: 0.256,
            sigma: 0.201,
        }
    }

    fn asymmetric_params(alpha: f64) -> NtsParams {
        NtsParams {
            alpha,
            theta: 0.1,
            kappa: 0.256,
            sigma: 0.201,
        }
    }

    #[test]
    fn validate_rejects_out_of_domain() {
        let mut p = symmetric_params(0.4);
        p.alpha = 1.0;
        assert!(p.validate().is_err());
        let mut p = symmetric_params(0.4);
        p.sigma = 0.0;
        assert!(p.validate().is_err());
        let mut p = symmetric_params(0.4);
        p.kappa = -1.0;
        assert!(p.validate().is_err());
        assert!(symmetric_params(-2.0).validate().is_ok());
    }

    #[test]
    fn exponent_is_zero_at_origin_and_hermitian() {
        for alpha in [-1.0, 0.0, 0.2, 0.8] {
            let p = asymmetric_params(alpha);
            let zero = nts_characteristic_exponent(&p, Complex64::new(0.0, 0.0)).unwrap();
            assert_eq!(zero, Complex64::new(0.0, 0.0));
            let u = Complex64::new(2.3, 0.0);
            let a = nts_characteristic_exponent(&p, u).unwrap();
            let b = nts_characteristic_exponent(&p, -u).unwrap();
            assert_abs_diff_eq!(a.re, b.re, epsilon = 1e-14);
            assert_abs_diff_eq!(a.im, -b.im, epsilon = 1e-14);
        }
    }

    #[test]
    fn strip_boundaries_solve_re_g_equals_zero() {
        // At the strip boundary (real axis offset ia), g(ia) hits zero:
        // g(ia) = 1 + kappa/(1-alpha) (-sigma^2 a^2/2 + theta a) vanishes.
        for p in [symmetric_params(0.4), asymmetric_params(0.8)] {
            let s = nts_strip(&p);
            for a in [s.p_minus, s.p_plus] {
                let g = 1.0
                    + p.kappa / (1.0 - p.alpha)
                        * (-0.5 * p.sigma * p.sigma * a * a + p.theta * a);
                assert_abs_diff_eq!(g, 0.0, epsilon = 1e-12);
            }
            assert!(s.p_minus < 0.0 && s.p_plus > 0.0);
        }
    }

    #[test]
    fn exponent_rejects_arguments_outside_strip() {
        let p = symmetric_params(0.4);
        let s = nts_strip(&p);
        assert!(nts_characteristic_exponent(&p, Complex64::new(0.0, s.p_plus)).is_err());
        assert!(
            nts_characteristic_exponent(&p, Complex64::new(0.0, 0.999 * s.p_plus)).is_ok()
        );
    }

    #[test]
    fn variance_gamma_limit_is_continuous() {
        // psi at alpha -> 0 converges to the Variance-Gamma closed form.
        let u = Complex64::new(1.7, 0.3);
        let vg = nts_exponent_unchecked(&symmetric_params(0.0), u);
        let near = nts_exponent_unchecked(&symmetric_params(1e-7), u);
        assert_abs_diff_eq!(vg.re, near.re, epsilon = 1e-5);
        assert_abs_diff_eq!(vg.im, near.im, epsilon = 1e-5);
    }

    #[test]
    fn cumulants_match_finite_differences_of_exponent() {
        // Lightweight self-check of the closed-form cumulants: c1 and c2
        // from central differences of psi on the real axis.
        for p in [asymmetric_params(0.4), asymmetric_params(-1.0)] {
            let h = 1e-3;
            let at = |x: f64| nts_exponent_unchecked(&p, Complex64::new(x, 0.0));
            let d1 = (at(h) - at(-h)) / (2.0 * h);
            let c1 = (d1 / Complex64::new(0.0, 1.0)).re;
            assert_abs_diff_eq!(c1, nts_cumulant_time1(&p, 1), epsilon = 1e-8);
            let d2 = (at(h) - 2.0 * at(0.0) + at(-h)) / (h * h);
            let c2 = -d2.re;
            assert_abs_diff_eq!(c2, nts_cumulant_time1(&p, 2), epsilon = 1e-8);
        }
    }

    #[test]
    fn driven_ou_matches_exponent_derivative() {
        let b = 0.2162;
        let u = Complex64::new(2.0, 0.0);
        for alpha in [-1.0, 0.0, 0.2, 0.8] {
            let p = asymmetric_params(alpha);
            let t = 0.3;
            let dh = 1e-5;
            let up = ou_nts_lcf(&p, b, t + dh, u, true);
            let dn = ou_nts_lcf(&p, b, t - dh, u, true);
            let deriv = (up - dn) / (2.0 * dh);
            let psi = nts_exponent_unchecked(&p, u * (-b * t).exp());
            assert_abs_diff_eq!(deriv.re, psi.re, epsilon = 1e-8);
            assert_abs_diff_eq!(deriv.im, psi.im, epsilon = 1e-8);
        }
    }

    #[test]
    fn stationary_variance_gamma_matches_closed_form() {
        // For the Variance-Gamma stationary law the increment LCF is
        // ln of a ratio of the two quadratic symbols.
        let p = asymmetric_params(0.0);
        let (b, dt) = (0.2162_f64, 1.0 / 12.0);
        let u = Complex64::new(3.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let d = (-b * dt).exp();
        let num = 0.5 * p.sigma * p.sigma * u * u * p.kappa * d * d - i * p.theta * p.kappa * u * d
            + 1.0;
        let den = 0.5 * p.sigma * p.sigma * u * u * p.kappa - i * p.theta * p.kappa * u + 1.0;
        let expect = (num / den).ln() / p.kappa;
        let got = nts_ou_lcf(&p, b, dt, u);
        assert_abs_diff_eq!(got.re, expect.re, epsilon = 1e-13);
        assert_abs_diff_eq!(got.im, expect.im, epsilon = 1e-13);
    }
}
