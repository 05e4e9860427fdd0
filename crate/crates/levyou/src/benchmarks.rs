//! Reference parameter sets shared by the test-suite, the acceptance
//! battery, and the CLI's `bench`/`verify` subcommands.
//!
//! The numbers pin down one representative configuration per model family
//! (an asymmetric tempered-stable driver and a normal-tempered-stable driver
//! with monthly-scale mean reversion) so that results are comparable across
//! modules and runs. They are defaults, not constraints: every public API
//! accepts arbitrary valid parameters.

use crate::process_models::{NtsParams, OuProcessSpec, ProcessLaw, TsParams};

/// Mean-reversion rate paired with the TS parameter sets.
pub const TS_B: f64 = 0.1;

/// Mean-reversion rate paired with the NTS parameter sets.
pub const NTS_B: f64 = 0.2162;

/// Asymmetric two-sided TS parameters with stability `alpha` on both sides.
pub fn ts_params(alpha: f64) -> TsParams {
    TsParams {
        alpha_p: alpha,
        beta_p: 2.5,
        c_p: 0.5,
        alpha_n: alpha,
        beta_n: 3.5,
        c_n: 1.0,
        gamma_c: 0.0,
    }
}

/// NTS parameters with stability `alpha` and skew `theta`.
pub fn nts_params(alpha: f64, theta: f64) -> NtsParams {
    NtsParams {
        alpha,
        theta,
        kappa: 0.256,
        sigma: 0.201,
    }
}

/// OU process driven by a TS Lévy process.
pub fn ou_ts(alpha: f64) -> OuProcessSpec {
    OuProcessSpec::new(ProcessLaw::OuTs(ts_params(alpha)), TS_B).expect("valid reference params")
}

/// OU process with a TS stationary law.
pub fn ts_ou(alpha: f64) -> OuProcessSpec {
    OuProcessSpec::new(ProcessLaw::TsOu(ts_params(alpha)), TS_B).expect("valid reference params")
}

/// OU process driven by an NTS Lévy process.
pub fn ou_nts(alpha: f64, theta: f64) -> OuProcessSpec {
    OuProcessSpec::new(ProcessLaw::OuNts(nts_params(alpha, theta)), NTS_B)
        .expect("valid reference params")
}

/// OU process with an NTS stationary law.
pub fn nts_ou(alpha: f64, theta: f64) -> OuProcessSpec {
    OuProcessSpec::new(ProcessLaw::NtsOu(nts_params(alpha, theta)), NTS_B)
        .expect("valid reference params")
}
