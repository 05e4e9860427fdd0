//! Model layer: mean-reverting processes built from tempered-stable and
//! normal-tempered-stable laws, described through the log-characteristic
//! function (LCF) of their transition increments.
//!
//! A process spec pairs a mean-reversion speed `b > 0` with one of four
//! families:
//!
//! * [`ProcessLaw::OuTs`] / [`ProcessLaw::OuNts`] — the OU equation driven
//!   by a TS (NTS) Lévy process; the increment LCF integrates the driver's
//!   exponent along the mean-reversion flow.
//! * [`ProcessLaw::TsOu`] / [`ProcessLaw::NtsOu`] — the OU process whose
//!   stationary law is TS (NTS); self-decomposability gives the increment
//!   LCF as a closed-form exponent difference. These require non-negative
//!   stability exponents.
//!
//! Everything the inversion engine needs is derived here: the strip of
//! analyticity, the activity classification, analytic increment cumulants,
//! the modulus-decay profile of the characteristic function (which fixes
//! the inversion step size), and — for finite-activity laws — the
//! compound-Poisson split `Z = (jump part) + drift` used both for sampling
//! and to replace a non-decaying CF by the decaying CF of its jump part.

use num_complex::Complex64;

use crate::error::EngineError;
use crate::Result;

pub mod nts;
pub mod ts;

pub use nts::{nts_characteristic_exponent, NtsParams};
pub use ts::{ts_characteristic_exponent, TsParams};

/// One of the four supported model families with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProcessLaw {
    /// OU process driven by a TS Lévy process.
    OuTs(TsParams),
    /// OU process with TS stationary law (stability exponents `>= 0`).
    TsOu(TsParams),
    /// OU process driven by an NTS Lévy process.
    OuNts(NtsParams),
    /// OU process with NTS stationary law (stability exponent `>= 0`).
    NtsOu(NtsParams),
}

/// A mean-reverting process specification: family plus reversion speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OuProcessSpec {
    /// The model family and its parameters.
    pub law: ProcessLaw,
    /// Mean-reversion speed, `> 0`.
    pub b: f64,
}

impl OuProcessSpec {
    /// Builds a validated specification.
    ///
    /// # Errors
    ///
    /// [`EngineError::InvalidParameter`] for any domain violation,
    /// including the stationary-law families' requirement of non-negative
    /// stability exponents (self-decomposability).
    pub fn new(law: ProcessLaw, b: f64) -> Result<Self> {
        let spec = Self { law, b };
        spec.validate()?;
        Ok(spec)
    }

    /// Re-checks all parameter constraints; cheap enough to run on every
    /// public operation so that field mutation cannot smuggle in an invalid
    /// state.
    pub fn validate(&self) -> Result<()> {
        if !(self.b > 0.0) || !self.b.is_finite() {
            return Err(EngineError::InvalidParameter {
                name: "b",
                reason: format!("mean-reversion speed must be finite and > 0, got {}", self.b),
            });
        }
        match &self.law {
            ProcessLaw::OuTs(p) => p.validate(),
            ProcessLaw::TsOu(p) => {
                p.validate()?;
                // Self-decomposability of the stationary TS law requires
                // non-negative stability exponents on every active side.
                if p.c_p > 0.0 && p.alpha_p < 0.0 {
                    return Err(EngineError::InvalidParameter {
                        name: "alpha_p",
                        reason: format!(
                            "stationary TS law requires alpha_p >= 0, got {}",
                            p.alpha_p
                        ),
                    });
                }
                if p.c_n > 0.0 && p.alpha_n < 0.0 {
                    return Err(EngineError::InvalidParameter {
                        name: "alpha_n",
                        reason: format!(
                            "stationary TS law requires alpha_n >= 0, got {}",
                            p.alpha_n
                        ),
                    });
                }
                Ok(())
            }
            ProcessLaw::OuNts(p) => p.validate(),
            ProcessLaw::NtsOu(p) => {
                p.validate()?;
                if p.alpha < 0.0 {
                    return Err(EngineError::InvalidParameter {
                        name: "alpha",
                        reason: format!(
                            "stationary NTS law requires alpha >= 0, got {}",
                            p.alpha
                        ),
                    });
                }
                Ok(())
            }
        }
    }
}

/// Open strip `(p_minus, p_plus)` of imaginary arguments on which the
/// characteristic function is analytic; always contains 0 and may be
/// half-infinite for one-sided TS laws.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticityStrip {
    /// Lower boundary, `< 0` (possibly `-inf`).
    pub p_minus: f64,
    /// Upper boundary, `> 0` (possibly `+inf`).
    pub p_plus: f64,
}

/// Path-regularity classification of the increment law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActivityClass {
    /// Finitely many jumps per interval: compound Poisson plus drift.
    FiniteActivity,
    /// Infinitely many jumps of finite total variation.
    InfiniteActivityFiniteVariation,
    /// Infinite variation.
    InfiniteActivityInfiniteVariation,
}

impl ActivityClass {
    /// Short human-readable label used in error messages and reports.
    pub fn label(self) -> &'static str {
        match self {
            ActivityClass::FiniteActivity => "finite-activity",
            ActivityClass::InfiniteActivityFiniteVariation => {
                "infinite-activity finite-variation"
            }
            ActivityClass::InfiniteActivityInfiniteVariation => {
                "infinite-activity infinite-variation"
            }
        }
    }
}

/// Asymptotic modulus decay of the function the inversion engine works on:
/// the increment CF itself for infinite-activity laws, or the jump-part CF
/// of the compound-Poisson split for finite-activity laws (whose full CF
/// does not vanish at infinity).
///
/// `|phi(u + ia)| ~ amplitude * exp(-ell |u|^omega)` in the exponential
/// case and `~ amplitude * |u|^{-omega}` in the power-law case, uniformly
/// over shifts `a` inside the strip. For a bilateral law the slowest
/// (dominant) side is reported.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayProfile {
    /// `amplitude * exp(-ell u^omega)` with `ell > 0`, `0 < omega <= 2`.
    Exponential {
        /// Leading amplitude bound (1 in this crate's conventions).
        amplitude: f64,
        /// Decay coefficient in the exponent.
        ell: f64,
        /// Power of `|u|` inside the exponent.
        omega: f64,
    },
    /// `amplitude * |u|^{-omega}` with `omega > 0`.
    PowerLaw {
        /// Leading amplitude bound (1 in this crate's conventions).
        amplitude: f64,
        /// Algebraic decay rate.
        omega: f64,
    },
}

impl DecayProfile {
    /// The decay rate `omega` (exponent power or algebraic rate).
    pub fn omega(&self) -> f64 {
        match self {
            DecayProfile::Exponential { omega, .. } | DecayProfile::PowerLaw { omega, .. } => {
                *omega
            }
        }
    }

    /// The leading amplitude bound.
    pub fn amplitude(&self) -> f64 {
        match self {
            DecayProfile::Exponential { amplitude, .. }
            | DecayProfile::PowerLaw { amplitude, .. } => *amplitude,
        }
    }

    /// Of two profiles, the one that decays more slowly (power law beats
    /// exponential; then smaller `omega`; exponential ties break on the
    /// smaller coefficient `ell`).
    fn slower_of(a: DecayProfile, b: DecayProfile) -> DecayProfile {
        use DecayProfile::{Exponential, PowerLaw};
        match (a, b) {
            (PowerLaw { .. }, Exponential { .. }) => a,
            (Exponential { .. }, PowerLaw { .. }) => b,
            (PowerLaw { omega: oa, .. }, PowerLaw { omega: ob, .. }) => {
                if oa <= ob {
                    a
                } else {
                    b
                }
            }
            (
                Exponential {
                    omega: oa, ell: la, ..
                },
                Exponential {
                    omega: ob, ell: lb, ..
                },
            ) => {
                if oa < ob || (oa == ob && la <= lb) {
                    a
                } else {
                    b
                }
            }
        }
    }
}

/// Compound-Poisson decomposition of a finite-activity increment:
/// `Z_dt = mu(dt) + (jump sum)`, where the jump count is Poisson with mean
/// `lambda * dt` and `phi_v` is the CF of the (time-dependent) law of the
/// summed jumps conditional on at least one jump.
///
/// Writing `p = 1 - e^{-lambda dt}` for the jump probability, the full CF
/// factors as `phi_Z(u) = e^{i u mu} [ (1 - p) + p phi_v(u) ]`; the engine
/// inverts `phi_v`, which decays at infinity even though `phi_Z` does not.
#[derive(Debug, Clone)]
pub struct FaDecomposition {
    spec: OuProcessSpec,
    /// Jump arrival rate of the driving compound-Poisson structure.
    pub lambda: f64,
}

impl FaDecomposition {
    /// Probability that an increment of length `dt` contains at least one
    /// jump.
    pub fn jump_probability(&self, dt: f64) -> f64 {
        -(-self.lambda * dt).exp_m1()
    }

    /// Deterministic drift `mu(dt)` accumulated over a step of length `dt`.
    pub fn drift(&self, dt: f64) -> f64 {
        let b = self.spec.b;
        let horizon = -(-b * dt).exp_m1(); // 1 - e^{-b dt}
        match &self.spec.law {
            ProcessLaw::OuTs(p) => {
                // Uncompensated drift of the driver, damped by the flow:
                // gamma_c plus each side's lambda_s alpha_s / beta_s with the
                // side's jump sign.
                let mut g = p.gamma_c;
                if p.c_p > 0.0 {
                    g += ts::ts_side_jump_rate(p.alpha_p, p.beta_p, p.c_p) * p.alpha_p / p.beta_p;
                }
                if p.c_n > 0.0 {
                    g -= ts::ts_side_jump_rate(p.alpha_n, p.beta_n, p.c_n) * p.alpha_n / p.beta_n;
                }
                g * horizon / b
            }
            ProcessLaw::TsOu(p) => {
                let mut g = p.gamma_c;
                if p.c_p > 0.0 {
                    g -= p.c_p / p.beta_p;
                }
                if p.c_n > 0.0 {
                    g += p.c_n / p.beta_n;
                }
                g * horizon
            }
            // NTS jumps carry the whole mean; no separate drift.
            ProcessLaw::OuNts(_) | ProcessLaw::NtsOu(_) => 0.0,
        }
    }

    /// CF of the conditional jump-sum law `V_dt`.
    ///
    /// Computed from the increment LCF as
    /// `(e^{lambda dt + LCF(u) - i u mu} - 1) / (e^{lambda dt} - 1)`, which
    /// is exact for every finite-activity family.
    ///
    /// # Errors
    ///
    /// Propagates LCF evaluation errors (strip violations, refinement
    /// failures).
    pub fn phi_v(&self, u: Complex64, dt: f64) -> Result<Complex64> {
        let lcf = lcf_increment(&self.spec, u, dt)?;
        let i = Complex64::new(0.0, 1.0);
        let lam_dt = self.lambda * dt;
        let num = (lam_dt + lcf - i * u * self.drift(dt)).exp() - 1.0;
        let den = lam_dt.exp_m1();
        Ok(num / den)
    }
}

/// Everything the inversion engine needs to know about one increment law:
/// the spec and step, plus the derived strip, activity class, decay profile
/// and (for finite-activity laws) the compound-Poisson split.
#[derive(Debug, Clone)]
pub struct IncrementLaw {
    /// The underlying process specification.
    pub spec: OuProcessSpec,
    /// Step length, `> 0`.
    pub dt: f64,
    /// Strip of analyticity (shared by the full CF and the jump-part CF).
    pub strip: AnalyticityStrip,
    /// Activity classification.
    pub activity: ActivityClass,
    /// Decay profile of the CF the engine inverts.
    pub decay: DecayProfile,
    /// Compound-Poisson split, present exactly for finite-activity laws.
    pub fa: Option<FaDecomposition>,
}

impl IncrementLaw {
    /// Assembles the increment law for one step length.
    ///
    /// # Errors
    ///
    /// Parameter and step-length validation errors.
    pub fn new(spec: &OuProcessSpec, dt: f64) -> Result<Self> {
        spec.validate()?;
        check_dt(dt)?;
        let activity = classify(spec)?;
        let fa = match activity {
            ActivityClass::FiniteActivity => Some(fa_decomposition(spec, dt)?),
            _ => None,
        };
        Ok(Self {
            spec: *spec,
            dt,
            strip: analyticity_strip(spec)?,
            activity,
            decay: decay_profile(spec, dt)?,
            fa,
        })
    }

    /// Increment LCF at `u`.
    ///
    /// # Errors
    ///
    /// See [`lcf_increment`].
    pub fn lcf(&self, u: Complex64) -> Result<Complex64> {
        lcf_increment(&self.spec, u, self.dt)
    }

    /// Increment CF `exp(LCF)` at `u`.
    ///
    /// # Errors
    ///
    /// See [`lcf_increment`].
    pub fn cf(&self, u: Complex64) -> Result<Complex64> {
        Ok(self.lcf(u)?.exp())
    }
}

fn check_dt(dt: f64) -> Result<()> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(EngineError::InvalidParameter {
            name: "dt",
            reason: format!("step length must be finite and > 0, got {dt}"),
        });
    }
    Ok(())
}

/// Relative tolerance of the embedded 64- vs 128-node refinement check on
/// kernel-integral LCFs, on the scale `max(1, |LCF|)` (purely relative
/// tolerances are meaningless near the zero of the LCF at `u = 0`).
const REFINEMENT_RTOL: f64 = 1e-10;

/// Log-characteristic function of the increment `Z_dt` of the process over
/// a step `dt`: `E exp(i u Z_dt) = exp(lcf_increment(spec, u, dt))`.
///
/// Kernel-integral families (driven OU) are evaluated at 64 and 128
/// Gauss-Legendre nodes and the two results are required to agree to
/// [`REFINEMENT_RTOL`] on the scale `max(1, |value|)`; stationary-law
/// families use closed forms. The LCF vanishes at `u = 0` exactly and is
/// Hermitian across the imaginary axis.
///
/// # Errors
///
/// Parameter validation; [`EngineError::OutsideStrip`] when `Im(u)` is not
/// strictly inside the analyticity strip;
/// [`EngineError::QuadratureFailure`] when the refinement check fails.
pub fn lcf_increment(spec: &OuProcessSpec, u: Complex64, dt: f64) -> Result<Complex64> {
    spec.validate()?;
    check_dt(dt)?;
    analyticity_strip(spec)?.check_contains(u.im)?;
    match &spec.law {
        ProcessLaw::OuTs(p) => {
            let coarse = ts::ou_ts_lcf(p, spec.b, dt, u, false);
            let fine = ts::ou_ts_lcf(p, spec.b, dt, u, true);
            refinement_check(coarse, fine, u)?;
            Ok(fine)
        }
        ProcessLaw::TsOu(p) => Ok(ts::ts_ou_lcf(p, spec.b, dt, u)),
        ProcessLaw::OuNts(p) => {
            let coarse = nts::ou_nts_lcf(p, spec.b, dt, u, false);
            let fine = nts::ou_nts_lcf(p, spec.b, dt, u, true);
            refinement_check(coarse, fine, u)?;
            Ok(fine)
        }
        ProcessLaw::NtsOu(p) => Ok(nts::nts_ou_lcf(p, spec.b, dt, u)),
    }
}

fn refinement_check(coarse: Complex64, fine: Complex64, u: Complex64) -> Result<()> {
    let tol = REFINEMENT_RTOL * fine.norm().max(1.0);
    let diff = (fine - coarse).norm();
    if diff > tol {
        return Err(EngineError::QuadratureFailure {
            context: format!(
                "64- and 128-node kernel integrals differ by {diff:e} (tolerance {tol:e}) \
                 at u = {u}"
            ),
        });
    }
    Ok(())
}

/// Strip of analyticity of the increment CF (equals the driver's or the
/// stationary law's strip for every family and step length).
///
/// # Errors
///
/// Parameter validation errors.
pub fn analyticity_strip(spec: &OuProcessSpec) -> Result<AnalyticityStrip> {
    spec.validate()?;
    Ok(match &spec.law {
        ProcessLaw::OuTs(p) | ProcessLaw::TsOu(p) => ts::ts_strip(p),
        ProcessLaw::OuNts(p) | ProcessLaw::NtsOu(p) => nts::nts_strip(p),
    })
}

/// Activity classification of the increment law.
///
/// TS-type laws classify on the largest active stability exponent `m`:
/// driven families are finite-activity for `m < 0`, finite-variation on
/// `[0, 1)` and infinite-variation on `[1, 2)`; stationary-law families are
/// finite-activity exactly at `m = 0` (Gamma-type). NTS-type laws classify
/// on the subordinator exponent with thresholds at 0 and 1/2, the
/// stationary-law family again being finite-activity exactly at 0
/// (Variance-Gamma-type).
///
/// # Errors
///
/// Parameter validation errors.
pub fn classify(spec: &OuProcessSpec) -> Result<ActivityClass> {
    spec.validate()?;
    use ActivityClass::{
        FiniteActivity, InfiniteActivityFiniteVariation, InfiniteActivityInfiniteVariation,
    };
    Ok(match &spec.law {
        ProcessLaw::OuTs(p) => {
            let m = max_active_alpha(p);
            if m < 0.0 {
                FiniteActivity
            } else if m < 1.0 {
                InfiniteActivityFiniteVariation
            } else {
                InfiniteActivityInfiniteVariation
            }
        }
        ProcessLaw::TsOu(p) => {
            let m = max_active_alpha(p);
            if m == 0.0 {
                FiniteActivity
            } else if m < 1.0 {
                InfiniteActivityFiniteVariation
            } else {
                InfiniteActivityInfiniteVariation
            }
        }
        ProcessLaw::OuNts(p) => {
            if p.alpha < 0.0 {
                FiniteActivity
            } else if p.alpha < 0.5 {
                InfiniteActivityFiniteVariation
            } else {
                InfiniteActivityInfiniteVariation
            }
        }
        ProcessLaw::NtsOu(p) => {
            if p.alpha == 0.0 {
                FiniteActivity
            } else if p.alpha < 0.5 {
                InfiniteActivityFiniteVariation
            } else {
                InfiniteActivityInfiniteVariation
            }
        }
    })
}

fn max_active_alpha(p: &TsParams) -> f64 {
    p.active_alphas().fold(f64::NEG_INFINITY, f64::max)
}

/// Analytic cumulant of order `k` (1 through 4) of the increment `Z_dt`.
///
/// For driven families `c_k(Z_dt) = c_k(L_1) (1 - e^{-k b dt}) / (k b)`;
/// for stationary-law families `c_k(Z_dt) = c_k(X) (1 - e^{-k b dt})`,
/// where `L_1` is the driver's time-1 law and `X` the stationary law.
///
/// # Errors
///
/// Parameter validation errors, and an `InvalidParameter` error for orders
/// outside 1..=4.
pub fn cumulants_increment(spec: &OuProcessSpec, dt: f64, k: u32) -> Result<f64> {
    spec.validate()?;
    check_dt(dt)?;
    if !(1..=4).contains(&k) {
        return Err(EngineError::InvalidParameter {
            name: "k",
            reason: format!("cumulant order must be in 1..=4, got {k}"),
        });
    }
    let kb = f64::from(k) * spec.b;
    let driven_scale = -(-kb * dt).exp_m1() / kb; // (1 - e^{-k b dt}) / (k b)
    let stationary_scale = -(-kb * dt).exp_m1(); // 1 - e^{-k b dt}
    Ok(match &spec.law {
        ProcessLaw::OuTs(p) => ts::ts_cumulant_time1(p, k) * driven_scale,
        ProcessLaw::TsOu(p) => ts::ts_cumulant_time1(p, k) * stationary_scale,
        ProcessLaw::OuNts(p) => nts::nts_cumulant_time1(p, k) * driven_scale,
        ProcessLaw::NtsOu(p) => nts::nts_cumulant_time1(p, k) * stationary_scale,
    })
}

/// Compound-Poisson split of a finite-activity law; see
/// [`FaDecomposition`].
///
/// # Errors
///
/// Parameter validation errors, and [`EngineError::NotFiniteActivity`] if
/// the law has infinite activity.
pub fn fa_decomposition(spec: &OuProcessSpec, dt: f64) -> Result<FaDecomposition> {
    spec.validate()?;
    check_dt(dt)?;
    let class = classify(spec)?;
    if class != ActivityClass::FiniteActivity {
        return Err(EngineError::NotFiniteActivity {
            found: class.label(),
        });
    }
    let lambda = match &spec.law {
        ProcessLaw::OuTs(p) => {
            ts::ts_side_jump_rate(p.alpha_p, p.beta_p, p.c_p)
                + ts::ts_side_jump_rate(p.alpha_n, p.beta_n, p.c_n)
        }
        ProcessLaw::TsOu(p) => (p.c_p + p.c_n) * spec.b,
        ProcessLaw::OuNts(p) => (1.0 - p.alpha) / (p.kappa * p.alpha.abs()),
        ProcessLaw::NtsOu(p) => 2.0 * spec.b / p.kappa,
    };
    Ok(FaDecomposition {
        spec: *spec,
        lambda,
    })
}

/// Modulus-decay profile of the function the inversion engine consumes:
/// the increment CF for infinite-activity laws, the jump-part CF `phi_v`
/// for finite-activity laws. See [`DecayProfile`] for conventions. For
/// bilateral TS laws whose sides decay with the same shape the exact
/// combined profile is returned (the side contributions add); otherwise
/// the slowest active side is returned as a conservative envelope.
///
/// # Errors
///
/// Parameter validation errors.
pub fn decay_profile(spec: &OuProcessSpec, dt: f64) -> Result<DecayProfile> {
    spec.validate()?;
    check_dt(dt)?;
    let b = spec.b;
    Ok(match &spec.law {
        ProcessLaw::OuTs(p) => {
            if classify(spec)? == ActivityClass::FiniteActivity {
                // Jump-part CF decays algebraically at the slowest side's
                // rate |u|^{alpha_s}.
                DecayProfile::PowerLaw {
                    amplitude: 1.0,
                    omega: -max_active_alpha(p),
                }
            } else {
                combine_ts_sides(p, |alpha, beta, c| {
                    ts_side_decay(alpha, beta, c, b, dt, true)
                })
            }
        }
        ProcessLaw::TsOu(p) => {
            if classify(spec)? == ActivityClass::FiniteActivity {
                // Gamma-type stationary law: jump-part CF decays like 1/|u|.
                DecayProfile::PowerLaw {
                    amplitude: 1.0,
                    omega: 1.0,
                }
            } else {
                combine_ts_sides(p, |alpha, beta, c| {
                    ts_side_decay(alpha, beta, c, b, dt, false)
                })
            }
        }
        ProcessLaw::OuNts(p) => {
            if p.alpha < 0.0 {
                DecayProfile::PowerLaw {
                    amplitude: 1.0,
                    omega: -2.0 * p.alpha,
                }
            } else if p.alpha == 0.0 {
                // Variance-Gamma driver: algebraic decay accumulating with
                // the step length.
                DecayProfile::PowerLaw {
                    amplitude: 1.0,
                    omega: 2.0 * dt / p.kappa,
                }
            } else {
                DecayProfile::Exponential {
                    amplitude: 1.0,
                    ell: nts_exp_ell(p) * -(-2.0 * p.alpha * b * dt).exp_m1() / (2.0 * p.alpha * b),
                    omega: 2.0 * p.alpha,
                }
            }
        }
        ProcessLaw::NtsOu(p) => {
            if p.alpha == 0.0 {
                // Variance-Gamma stationary law: jump-part CF decays like
                // 1/|u|.
                DecayProfile::PowerLaw {
                    amplitude: 1.0,
                    omega: 1.0,
                }
            } else {
                DecayProfile::Exponential {
                    amplitude: 1.0,
                    ell: nts_exp_ell(p) * -(-2.0 * p.alpha * b * dt).exp_m1(),
                    omega: 2.0 * p.alpha,
                }
            }
        }
    })
}

/// Shared NTS exponential-decay scale
/// `(1/alpha) ((1-alpha)/kappa)^{1-alpha} (sigma^2/2)^alpha`; the family
/// then multiplies in its own flow factor.
fn nts_exp_ell(p: &NtsParams) -> f64 {
    ((1.0 - p.alpha) / p.kappa).powf(1.0 - p.alpha) * (0.5 * p.sigma * p.sigma).powf(p.alpha)
        / p.alpha
}

/// Decay profile of one active TS side, or `None` when that side's CF
/// factor does not vanish at infinity (negative exponents always; zero
/// exponents for stationary-law increments).
fn ts_side_decay(
    alpha: f64,
    _beta: f64,
    c: f64,
    b: f64,
    dt: f64,
    driven: bool,
) -> Option<DecayProfile> {
    use statrs::function::gamma::gamma;
    if c == 0.0 || alpha < 0.0 {
        return None;
    }
    if alpha == 0.0 {
        // Gamma-type side: the driven increment keeps algebraic decay
        // |u|^{-c dt}; the stationary-law increment's side factor tends to a
        // constant.
        return driven.then_some(DecayProfile::PowerLaw {
            amplitude: 1.0,
            omega: c * dt,
        });
    }
    let flow = if driven {
        -(-alpha * b * dt).exp_m1() / (alpha * b)
    } else {
        -(-alpha * b * dt).exp_m1()
    };
    let base = if alpha == 1.0 {
        c * std::f64::consts::FRAC_PI_2
    } else {
        -c * gamma(-alpha) * (alpha * std::f64::consts::FRAC_PI_2).cos()
    };
    Some(DecayProfile::Exponential {
        amplitude: 1.0,
        ell: base * flow,
        omega: alpha,
    })
}

/// Combines the two sides' profiles. The CF modulus is the product of the
/// side factors, so when both sides decay with the same shape the exact
/// combined profile is available: exponential rates with a common exponent
/// add, and so do algebraic orders. Mismatched shapes fall back to the
/// slower side, which bounds the product from above. At least one side of
/// an infinite-activity law always has a decaying factor.
fn combine_ts_sides<F>(p: &TsParams, side: F) -> DecayProfile
where
    F: Fn(f64, f64, f64) -> Option<DecayProfile>,
{
    use DecayProfile::{Exponential, PowerLaw};
    let dp = side(p.alpha_p, p.beta_p, p.c_p);
    let dn = side(p.alpha_n, p.beta_n, p.c_n);
    match (dp, dn) {
        (
            Some(Exponential { amplitude, ell: la, omega }),
            Some(Exponential { ell: lb, omega: ob, .. }),
        ) if omega == ob => Exponential {
            amplitude,
            ell: la + lb,
            omega,
        },
        (
            Some(PowerLaw { amplitude, omega }),
            Some(PowerLaw { omega: ob, .. }),
        ) => PowerLaw {
            amplitude,
            omega: omega + ob,
        },
        (Some(a), Some(b)) => DecayProfile::slower_of(a, b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => unreachable!(
            "infinite-activity TS law must have at least one decaying side"
        ),
    }
}
