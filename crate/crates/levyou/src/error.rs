//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Failure modes of the model, inversion, sampling and pricing layers.
///
/// All public functions return [`crate::Result`]; panics are reserved for
/// internal logic errors (broken invariants that no input can trigger).
#[derive(Debug, Error)]
pub enum EngineError {
    /// A model or engine parameter violates its domain constraint.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter {
        /// Name of the offending parameter.
        name: &'static str,
        /// Human-readable description of the violated constraint.
        reason: String,
    },

    /// A characteristic function was evaluated at an imaginary part outside
    /// the strip of analyticity.
    #[error(
        "argument with imaginary part {im} lies outside the analyticity strip ({p_minus}, {p_plus})"
    )]
    OutsideStrip {
        /// Imaginary part of the requested argument.
        im: f64,
        /// Lower strip boundary.
        p_minus: f64,
        /// Upper strip boundary.
        p_plus: f64,
    },

    /// A compound-Poisson decomposition was requested for a law that is not
    /// of finite activity.
    #[error("compound-Poisson decomposition requires a finite-activity law; this one is {found}")]
    NotFiniteActivity {
        /// The activity class that was actually found.
        found: &'static str,
    },

    /// A quadrature did not reach its accuracy target, or two refinement
    /// levels of a fixed rule disagree beyond tolerance.
    #[error("quadrature failure: {context}")]
    QuadratureFailure {
        /// What was being integrated and how the check failed.
        context: String,
    },

    /// The inverted CDF grid has no usable monotone window.
    #[error("degenerate CDF window: {reason} ({hint})")]
    DegenerateWindow {
        /// What is wrong with the retained window.
        reason: String,
        /// Suggested remedy (e.g. increase the grid exponent).
        hint: String,
    },

    /// The CDF values at the edges of the retained window are not strictly
    /// inside (0, 1), so no exponential tail can be fitted.
    #[error("cannot fit {side} tail: boundary CDF value {value} is not strictly inside (0, 1)")]
    TailFit {
        /// Which tail failed ("left" or "right").
        side: &'static str,
        /// The offending boundary CDF value.
        value: f64,
    },

    /// The martingale drift requires the characteristic function at `-i`,
    /// i.e. the strip must extend strictly below `-1`.
    #[error(
        "martingale drift needs E[e^X] finite: lower strip bound p_minus = {p_minus} must be < -1"
    )]
    MartingaleInfeasible {
        /// Lower boundary of the analyticity strip.
        p_minus: f64,
    },

    /// A date grid is empty, unsorted, or contains a non-positive step.
    #[error("invalid date grid: {reason}")]
    InvalidGrid {
        /// Human-readable description of the defect.
        reason: String,
    },

    /// An operation on measured data received an empty input slice.
    #[error("empty input: {context}")]
    EmptyInput {
        /// Which input was empty.
        context: &'static str,
    },

    /// Mismatched lengths between parallel input slices.
    #[error("length mismatch: {context}")]
    LengthMismatch {
        /// Which inputs disagree and how.
        context: String,
    },
}
