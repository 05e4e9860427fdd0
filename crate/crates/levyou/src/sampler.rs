//! Monte Carlo path generation for the OU families.
//!
//! The transition over one step is `X_{t_j} = e^{-b dt_j} X_{t_{j-1}} + Z_j`
//! with the increment `Z_j` drawn by inverse transform from the CDF built in
//! [`crate::cdf_engine`]:
//!
//! * **Infinite activity** — one uniform per step, pushed through the
//!   interpolated inverse CDF of the increment law.
//! * **Finite activity** — the increment splits as a deterministic drift
//!   plus a Bernoulli mixture: with probability `1 - e^{-lambda dt}` the
//!   step carries a jump part drawn from its own inverted CDF, otherwise
//!   only the drift moves the state. One uniform decides, a second is spent
//!   only when a jump occurs.
//!
//! CDF construction is the expensive part, so built samplers are cached
//! process-wide by (model parameters, step length, grid exponent); a uniform
//! date grid therefore costs one build regardless of the number of steps or
//! paths. Randomness comes from one counter-based stream per path, which
//! makes every result bit-reproducible for any thread count.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::cdf_engine::{
    build_cdf_function, invert_cf_to_cdf, select_shift, select_step, trim_grid_to_noise_floor,
    CdfFunction, FftPlan,
};
use crate::process_models::{cumulants_increment, IncrementLaw, OuProcessSpec, ProcessLaw};
use crate::{EngineError, Result};

/// Default grid exponent: 2^16 CF samples per CDF build.
pub const DEFAULT_GRID_EXPONENT: u32 = 16;

/// Uniform draws are clamped to `[CLAMP, 1 - CLAMP]` before inversion, which
/// bounds the Newton iteration depth in the interpolant's tails.
const UNIFORM_CLAMP: f64 = 1e-15;

/// A strictly increasing grid of observation times.
///
/// The first entry carries the initial condition; the `j`-th step spans
/// `dt_j = t_j - t_{j-1}`. Steps need not be equally spaced. The steps are
/// stored, not re-derived from the times: [`DateGrid::uniform`] makes them
/// bitwise identical, so the sampler cache (which keys on step bits) builds
/// one CDF per uniform grid — with the side effect that each observation
/// time is correctly rounded on its own and may differ from the cumulative
/// steps by an ulp.
#[derive(Debug, Clone, PartialEq)]
pub struct DateGrid {
    times: Vec<f64>,
    dts: Vec<f64>,
}

impl DateGrid {
    /// Validates and wraps a list of observation times.
    ///
    /// # Errors
    ///
    /// [`EngineError::InvalidGrid`] unless at least two finite times are
    /// supplied in strictly increasing order.
    pub fn new(times: Vec<f64>) -> Result<Self> {
        if times.len() < 2 {
            return Err(EngineError::InvalidGrid {
                reason: format!("need at least 2 times, got {}", times.len()),
            });
        }
        if times.iter().any(|t| !t.is_finite()) {
            return Err(EngineError::InvalidGrid {
                reason: "times must be finite".into(),
            });
        }
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(EngineError::InvalidGrid {
                reason: "times must be strictly increasing".into(),
            });
        }
        let dts = times.windows(2).map(|w| w[1] - w[0]).collect();
        Ok(Self { times, dts })
    }

    /// Equally spaced grid with `steps` steps from `t0` to `t_end`.
    pub fn uniform(t0: f64, t_end: f64, steps: usize) -> Result<Self> {
        if steps == 0 {
            return Err(EngineError::InvalidGrid {
                reason: "a uniform grid needs at least one step".into(),
            });
        }
        let dt = (t_end - t0) / steps as f64;
        let mut grid = Self::new((0..=steps).map(|j| t0 + dt * j as f64).collect())?;
        grid.dts = vec![dt; steps];
        Ok(grid)
    }

    /// The observation times, including the initial one.
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    /// Number of steps `Q` (one less than the number of times).
    pub fn steps(&self) -> usize {
        self.times.len() - 1
    }

    /// Step lengths `dt_j`, `j = 1..=Q`.
    pub fn step_lengths(&self) -> impl Iterator<Item = f64> + '_ {
        self.dts.iter().copied()
    }
}

/// Finite-activity sampling constants attached to an [`IncrementSampler`].
#[derive(Debug, Clone, Copy)]
pub struct FaSampling {
    /// Probability that the step carries a jump part.
    pub p_jump: f64,
    /// Deterministic drift added to every step.
    pub mu: f64,
}

/// A ready-to-draw sampler for the increment of one (model, dt) pair.
///
/// For infinite-activity laws `cdf` inverts the increment itself; for
/// finite-activity laws it inverts the jump part of the Bernoulli mixture
/// and `fa` holds the mixture constants. Exactly one of the two shapes is
/// active, matching the law's activity class.
#[derive(Debug)]
pub struct IncrementSampler {
    /// The increment law the sampler was built from.
    pub law: IncrementLaw,
    /// Inverse-transform backend (increment CDF or jump-part CDF).
    pub cdf: CdfFunction,
    /// Mixture constants, present exactly for finite-activity laws.
    pub fa: Option<FaSampling>,
}

impl IncrementSampler {
    /// Draws one increment, consuming one uniform (plus one more on a
    /// finite-activity jump).
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<f64> {
        match self.fa {
            None => {
                let u = clamped_uniform(rng);
                self.cdf.inverse_cdf(u)
            }
            Some(fa) => {
                if rng.random::<f64>() < fa.p_jump {
                    let u = clamped_uniform(rng);
                    Ok(fa.mu + self.cdf.inverse_cdf(u)?)
                } else {
                    Ok(fa.mu)
                }
            }
        }
    }
}

fn clamped_uniform<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.random::<f64>().clamp(UNIFORM_CLAMP, 1.0 - UNIFORM_CLAMP)
}

/// Cache key: model family, parameter bits, mean reversion, step, and grid
/// exponent. Bitwise f64 comparison — two steps are "the same" only when
/// they are identical floats, which is what a uniform grid produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct SamplerKey {
    family: u8,
    params: [u64; 7],
    b: u64,
    dt: u64,
    m: u32,
}

fn sampler_key(spec: &OuProcessSpec, dt: f64, m: u32) -> SamplerKey {
    let (family, params) = match &spec.law {
        ProcessLaw::OuTs(p) | ProcessLaw::TsOu(p) => (
            if matches!(spec.law, ProcessLaw::OuTs(_)) { 0 } else { 1 },
            [
                p.alpha_p.to_bits(),
                p.beta_p.to_bits(),
                p.c_p.to_bits(),
                p.alpha_n.to_bits(),
                p.beta_n.to_bits(),
                p.c_n.to_bits(),
                p.gamma_c.to_bits(),
            ],
        ),
        ProcessLaw::OuNts(p) | ProcessLaw::NtsOu(p) => (
            if matches!(spec.law, ProcessLaw::OuNts(_)) { 2 } else { 3 },
            [
                p.alpha.to_bits(),
                p.theta.to_bits(),
                p.sigma.to_bits(),
                p.kappa.to_bits(),
                0,
                0,
                0,
            ],
        ),
    };
    SamplerKey {
        family,
        params,
        b: spec.b.to_bits(),
        dt: dt.to_bits(),
        m,
    }
}

fn sampler_cache() -> &'static Mutex<HashMap<SamplerKey, Arc<IncrementSampler>>> {
    static CACHE: OnceLock<Mutex<HashMap<SamplerKey, Arc<IncrementSampler>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Builds (or fetches from the process-wide cache) the increment sampler
/// for one (model, step, grid exponent) combination.
///
/// A cache hit returns the identical object, so repeated requests cost a
/// hash lookup and produce bit-identical draws.
///
/// # Errors
///
/// Propagates model validation, quadrature, inversion-window, and tail-fit
/// errors from the underlying layers.
pub fn build_increment_sampler(
    spec: &OuProcessSpec,
    dt: f64,
    m: u32,
) -> Result<Arc<IncrementSampler>> {
    let key = sampler_key(spec, dt, m);
    let mut cache = sampler_cache().lock().expect("sampler cache poisoned");
    if let Some(hit) = cache.get(&key) {
        return Ok(hit.clone());
    }
    // Build under the lock: concurrent requests for the same key would
    // otherwise duplicate the expensive CDF construction.
    let built = Arc::new(build_uncached(spec, dt, m)?);
    cache.insert(key, built.clone());
    Ok(built)
}

/// Window edges whose tail mass the a-priori error bound cannot certify by
/// this factor trigger a warning (the monotone self-check still applies).
const NOISE_FLOOR_SAFETY: f64 = 10.0;

fn build_uncached(spec: &OuProcessSpec, dt: f64, m: u32) -> Result<IncrementSampler> {
    let law = IncrementLaw::new(spec, dt)?;
    let a = select_shift(&law.strip, &law.decay)?;
    let h = select_step(1_usize << m, a, &law.decay);
    let plan = FftPlan::new(m, a, h)?;
    let c1 = cumulants_increment(spec, dt, 1)?;
    let two_ia = Complex64::new(0.0, 2.0 * a);
    let (grid, phi_two_ia, fa) = match &law.fa {
        None => (
            invert_cf_to_cdf(|z| law.cf(z), &plan, c1)?,
            law.cf(two_ia)?.re,
            None,
        ),
        Some(decomp) => {
            let p_jump = decomp.jump_probability(dt);
            let mu = decomp.drift(dt);
            // E[Z] = mu + p E[V] fixes the jump part's mean, which centers
            // the inversion grid on the law actually being inverted.
            let center = (c1 - mu) / p_jump;
            let grid = invert_cf_to_cdf(|z| decomp.phi_v(z, dt), &plan, center)?;
            (
                grid,
                decomp.phi_v(two_ia, dt)?.re,
                Some(FaSampling { p_jump, mu }),
            )
        }
    };
    // Inverse sampling maps uniforms straight through the window, so the
    // monotone run must resolve the central quantile band; refuse plans
    // whose noise eats into the bulk rather than drawing wild values.
    validate_cdf_window(&grid, &plan, &law.decay, phi_two_ia, NOISE_FLOOR_SAFETY)?;
    let cdf = build_cdf_function(&grid, &law.strip)?;
    Ok(IncrementSampler { law, cdf, fa })
}

/// Simulated paths on a date grid, stored row-major (one row per path).
///
/// Column `0` is the initial state for every path.
#[derive(Debug, Clone)]
pub struct PathMatrix {
    values: Vec<f64>,
    grid: DateGrid,
    seed: u64,
}

impl PathMatrix {
    /// Number of simulated paths.
    pub fn n_paths(&self) -> usize {
        self.values.len() / self.grid.times().len()
    }

    /// The date grid the paths live on.
    pub fn grid(&self) -> &DateGrid {
        &self.grid
    }

    /// Seed the paths were generated from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// States of path `p` at all grid times.
    pub fn path(&self, p: usize) -> &[f64] {
        let w = self.grid.times().len();
        &self.values[p * w..(p + 1) * w]
    }

    /// States of all paths at grid index `j` (0 is the initial time).
    pub fn column(&self, j: usize) -> impl Iterator<Item = f64> + '_ {
        let w = self.grid.times().len();
        assert!(j < w, "column {j} out of range for {w} grid times");
        self.values[j..].iter().step_by(w).copied()
    }

    /// Terminal states of all paths as a fresh vector.
    pub fn terminal(&self) -> Vec<f64> {
        self.column(self.grid.times().len() - 1).collect()
    }
}

/// One counter-based RNG stream per path: any thread assignment replays the
/// same per-path sequence.
fn path_rng(seed: u64, path: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(path);
    rng
}

/// Simulates `n_paths` paths of the process on `grid`, starting at `x0`.
///
/// Samplers are built once per distinct step length (bitwise comparison) and
/// shared across steps and paths; path `p` draws from the substream
/// `(seed, p)`, so results are independent of the number of worker threads
/// and of any other consumer of the cache.
///
/// # Errors
///
/// Propagates sampler construction errors; rejects `n_paths = 0`.
pub fn sample_paths(
    spec: &OuProcessSpec,
    x0: f64,
    grid: &DateGrid,
    n_paths: usize,
    seed: u64,
    m: u32,
) -> Result<PathMatrix> {
    if n_paths == 0 {
        return Err(EngineError::InvalidParameter {
            name: "n_paths",
            reason: "need at least one path".into(),
        });
    }
    let q = grid.steps();
    // One sampler per distinct dt, in step order.
    let mut distinct: Vec<(u64, Arc<IncrementSampler>)> = Vec::new();
    let mut per_step: Vec<Arc<IncrementSampler>> = Vec::with_capacity(q);
    for dt in grid.step_lengths() {
        let bits = dt.to_bits();
        let sampler = match distinct.iter().find(|(b, _)| *b == bits) {
            Some((_, s)) => s.clone(),
            None => {
                let s = build_increment_sampler(spec, dt, m)?;
                distinct.push((bits, s.clone()));
                s
            }
        };
        per_step.push(sampler);
    }
    let decays: Vec<f64> = grid.step_lengths().map(|dt| (-spec.b * dt).exp()).collect();
    let width = q + 1;
    let mut values = vec![0.0_f64; n_paths * width];
    values
        .par_chunks_mut(width)
        .enumerate()
        .try_for_each(|(p, row)| -> Result<()> {
            let mut rng = path_rng(seed, p as u64);
            row[0] = x0;
            for j in 0..q {
                let z = per_step[j].draw(&mut rng)?;
                row[j + 1] = decays[j] * row[j] + z;
            }
            Ok(())
        })?;
    Ok(PathMatrix {
        values,
        grid: grid.clone(),
        seed,
    })
}

/// Simulates a Gaussian OU process (`dX = -b X dt + sigma_driver dW`) by its
/// exact transition law.
///
/// One standard normal per step; the per-step deviation is
/// `sigma_driver sqrt((1 - e^{-2 b dt}) / (2 b))`. This is the throughput
/// and correctness baseline for the CF-driven samplers.
///
/// # Errors
///
/// Rejects non-positive `b` or `sigma_driver` and `n_paths = 0`.
pub fn sample_gaussian_ou(
    b: f64,
    sigma_driver: f64,
    x0: f64,
    grid: &DateGrid,
    n_paths: usize,
    seed: u64,
) -> Result<PathMatrix> {
    if !(b > 0.0 && b.is_finite()) {
        return Err(EngineError::InvalidParameter {
            name: "b",
            reason: format!("mean-reversion rate must be positive and finite, got {b}"),
        });
    }
    if !(sigma_driver > 0.0 && sigma_driver.is_finite()) {
        return Err(EngineError::InvalidParameter {
            name: "sigma_driver",
            reason: format!("driver volatility must be positive and finite, got {sigma_driver}"),
        });
    }
    if n_paths == 0 {
        return Err(EngineError::InvalidParameter {
            name: "n_paths",
            reason: "need at least one path".into(),
        });
    }
    let q = grid.steps();
    let decays: Vec<f64> = grid.step_lengths().map(|dt| (-b * dt).exp()).collect();
    let sds: Vec<f64> = grid
        .step_lengths()
        .map(|dt| sigma_driver * ((1.0 - (-2.0 * b * dt).exp()) / (2.0 * b)).sqrt())
        .collect();
    let width = q + 1;
    let mut values = vec![0.0_f64; n_paths * width];
    values.par_chunks_mut(width).enumerate().for_each(|(p, row)| {
        let mut rng = path_rng(seed, p as u64);
        row[0] = x0;
        for j in 0..q {
            let z: f64 = rng.sample(StandardNormal);
            row[j + 1] = decays[j] * row[j] + sds[j] * z;
        }
    });
    Ok(PathMatrix {
        values,
        grid: grid.clone(),
        seed,
    })
}

/// RNG wrapper that counts 64-bit words drawn from the inner generator;
/// every `f64` uniform costs exactly one word, so the count equals the
/// number of uniforms consumed.
#[cfg(test)]
pub(crate) struct CountingRng<R> {
    inner: R,
    pub(crate) count: u64,
}

#[cfg(test)]
impl<R: RngCore> CountingRng<R> {
    pub(crate) fn new(inner: R) -> Self {
        Self { inner, count: 0 }
    }
}

#[cfg(test)]
impl<R: RngCore> RngCore for CountingRng<R> {
    fn next_u32(&mut self) -> u32 {
        self.count += 1;
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.count += 1;
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.count += 1;
        self.inner.fill_bytes(dest);
    }
}
