//! Run configuration: system dimensions, channel statistics, and the
//! transmit-power and learning-rate schedules.

use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::error::{config_err, Result};

/// How the training data is spread across devices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionMode {
    /// Disjoint uniform shards.
    Iid,
    /// Each device holds samples of exactly one cluster/class.
    NonIid,
}

/// Transmit power scaling factor over global iterations.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PowerSchedule {
    Constant { a0: f64 },
    /// `alpha_t = a0 + a1 * t`.
    Affine { a0: f64, a1: f64 },
    /// Explicit per-round values, indexed by `t`.
    Table { values: Vec<f64> },
}

impl PowerSchedule {
    /// Evaluate `alpha_t`. Errors if the schedule yields a non-positive
    /// value or the table does not cover `t`.
    pub fn eval(&self, t: u32) -> Result<f64> {
        let v = match self {
            PowerSchedule::Constant { a0 } => *a0,
            PowerSchedule::Affine { a0, a1 } => a0 + a1 * f64::from(t),
            PowerSchedule::Table { values } => *values
                .get(t as usize)
                .ok_or_else(|| config_err!("power schedule table has no entry for t={t}"))?,
        };
        if !(v > 0.0 && v.is_finite()) {
            return Err(config_err!("power schedule non-positive at t={t}: alpha={v}"));
        }
        Ok(v)
    }
}

/// Learning rate over global iterations (shared by all devices and local
/// steps within a round).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LearningRateSchedule {
    Constant { c0: f64 },
    /// `eta(t) = c0 / (c1 * t + 1)`.
    InverseAffine { c0: f64, c1: f64 },
    /// Explicit per-round values, indexed by `t`.
    Table { values: Vec<f64> },
}

impl LearningRateSchedule {
    /// Evaluate `eta(t)`. Errors if the schedule yields a non-positive value
    /// or the table does not cover `t`.
    pub fn eval(&self, t: u32) -> Result<f64> {
        let v = match self {
            LearningRateSchedule::Constant { c0 } => *c0,
            LearningRateSchedule::InverseAffine { c0, c1 } => c0 / (c1 * f64::from(t) + 1.0),
            LearningRateSchedule::Table { values } => *values
                .get(t as usize)
                .ok_or_else(|| config_err!("learning rate table has no entry for t={t}"))?,
        };
        if !(v > 0.0 && v.is_finite()) {
            return Err(config_err!("learning rate non-positive at t={t}: eta={v}"));
        }
        Ok(v)
    }
}

/// All scalars of one run.
///
/// `m` devices transmit `d`-dimensional updates over `s` subchannels with
/// `n = ceil(d / 2s)` symbols per round to a server with `k` antennas.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    /// Device count M.
    pub m: usize,
    /// Server antenna count K.
    pub k: usize,
    /// Model dimension d.
    pub d: usize,
    /// Subchannels per symbol s (s <= d).
    pub s: usize,
    /// Fading gain variance.
    pub sigma_h2: f64,
    /// Receiver noise variance.
    pub sigma_z2: f64,
    /// CSI estimation error variance.
    pub sigma_ht2: f64,
    /// Local SGD steps per round.
    pub tau: u32,
    /// Global rounds T.
    pub t_rounds: u32,
    pub alpha: PowerSchedule,
    pub eta: LearningRateSchedule,
    pub seed: u64,
    pub partition_mode: PartitionMode,
    pub batch_size: usize,
    /// Test hook: freeze every fading gain at `sqrt(sigma_h2)` (real).
    /// Statistical checks do not apply under this hook.
    #[serde(default)]
    pub deterministic_channel: bool,
}

impl SimConfig {
    /// Symbols per round, `N = ceil(d / 2s)`.
    pub fn symbols_per_round(&self) -> usize {
        self.d.div_ceil(2 * self.s)
    }

    /// Check the structural invariants. Schedule positivity over the whole
    /// horizon is checked separately by evaluation.
    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(config_err!("device count m must be positive"));
        }
        if self.k == 0 {
            return Err(config_err!("antenna count k must be positive"));
        }
        if self.d == 0 {
            return Err(config_err!("model dimension d must be positive"));
        }
        if self.s == 0 || self.s > self.d {
            return Err(config_err!(
                "subchannel count s must satisfy 1 <= s <= d, got s={} d={}",
                self.s,
                self.d
            ));
        }
        if !(self.sigma_h2 > 0.0 && self.sigma_h2.is_finite()) {
            return Err(config_err!(
                "sigma_h2 must be positive (the estimator divides by it), got {}",
                self.sigma_h2
            ));
        }
        if !(self.sigma_z2 >= 0.0 && self.sigma_z2.is_finite()) {
            return Err(config_err!("sigma_z2 must be non-negative, got {}", self.sigma_z2));
        }
        if !(self.sigma_ht2 >= 0.0 && self.sigma_ht2.is_finite()) {
            return Err(config_err!("sigma_ht2 must be non-negative, got {}", self.sigma_ht2));
        }
        if self.tau == 0 {
            return Err(config_err!("local step count tau must be positive"));
        }
        if self.t_rounds == 0 {
            return Err(config_err!("round count t_rounds must be positive"));
        }
        if self.batch_size == 0 {
            return Err(config_err!("batch_size must be positive"));
        }
        // Positivity of both schedules over [0, T].
        for t in 0..=self.t_rounds {
            self.alpha.eval(t)?;
            self.eta.eval(t)?;
        }
        Ok(())
    }
}
