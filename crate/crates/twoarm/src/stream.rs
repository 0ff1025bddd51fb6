//! Deterministic random streams for Monte-Carlo replications.
//!
//! Each replication owns three independent ChaCha8 streams: one feeding
//! action draws and one feeding each arm's incomes. A stream is keyed by the
//! 32-byte seed `(master_seed, point, replication, channel)`, each as a
//! little-endian u64, so any replication of any grid point can be recomputed
//! in isolation and results never depend on scheduling.
//!
//! Frozen variate recipes:
//! - uniform: one `u64` per draw, `u = ((bits >> 12) + 0.5) * 2^-52`,
//!   strictly inside (0, 1) and exactly symmetric under `u -> 1 - u`;
//! - standard normal: one uniform per draw through the inverse CDF,
//!   `sqrt(2) * erf_inv(2u - 1)`;
//! - Bernoulli income: one uniform per pull, success iff `u < p`.
//!
//! Keeping the arms on separate substreams gives the label-symmetry
//! invariant an exact form: running on the swapped parameter with
//! [`RunStream::mirrored`] (arm substreams exchanged, action uniforms
//! reflected) reproduces the original run's incomes variate-for-variate.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::env::Arm;

const CHANNEL_ACTION: u64 = 0;
const CHANNEL_ARM1: u64 = 1;
const CHANNEL_ARM2: u64 = 2;

fn channel_rng(master_seed: u64, point: u64, rep: u64, channel: u64) -> ChaCha8Rng {
    let mut seed = [0u8; 32];
    seed[0..8].copy_from_slice(&master_seed.to_le_bytes());
    seed[8..16].copy_from_slice(&point.to_le_bytes());
    seed[16..24].copy_from_slice(&rep.to_le_bytes());
    seed[24..32].copy_from_slice(&channel.to_le_bytes());
    ChaCha8Rng::from_seed(seed)
}

fn unit_uniform(rng: &mut ChaCha8Rng) -> f64 {
    ((rng.next_u64() >> 12) as f64 + 0.5) * (1.0 / (1u64 << 52) as f64)
}

/// Inverse-CDF standard normal draw from a uniform in (0, 1).
pub fn standard_normal(u: f64) -> f64 {
    std::f64::consts::SQRT_2 * statrs::function::erf::erf_inv(2.0 * u - 1.0)
}

/// The randomness owned by a single simulated run.
#[derive(Debug, Clone)]
pub struct RunStream {
    action: ChaCha8Rng,
    arms: [ChaCha8Rng; 2],
    reflect_actions: bool,
}

impl RunStream {
    /// Stream set for replication `rep` of grid point `point` under `master_seed`.
    pub fn new(master_seed: u64, point: u64, rep: u64) -> Self {
        RunStream {
            action: channel_rng(master_seed, point, rep, CHANNEL_ACTION),
            arms: [
                channel_rng(master_seed, point, rep, CHANNEL_ARM1),
                channel_rng(master_seed, point, rep, CHANNEL_ARM2),
            ],
            reflect_actions: false,
        }
    }

    /// The label-mirrored view of this stream set: arm substreams swapped and
    /// action uniforms reflected to `1 - u`, so a run on the coordinate-swapped
    /// parameter retraces the original run with the arm labels exchanged.
    pub fn mirrored(mut self) -> Self {
        self.arms.swap(0, 1);
        self.reflect_actions = !self.reflect_actions;
        self
    }

    /// One uniform from the action channel.
    pub fn action_uniform(&mut self) -> f64 {
        let u = unit_uniform(&mut self.action);
        if self.reflect_actions {
            1.0 - u
        } else {
            u
        }
    }

    /// Draws an arm: the first with probability `p_first`.
    pub fn draw_action(&mut self, p_first: f64) -> Arm {
        if self.action_uniform() < p_first {
            Arm::First
        } else {
            Arm::Second
        }
    }

    /// One uniform from the given arm's income channel.
    pub fn arm_uniform(&mut self, arm: Arm) -> f64 {
        unit_uniform(&mut self.arms[arm.index()])
    }

    /// One standard-normal variate from the given arm's income channel.
    pub fn arm_gaussian(&mut self, arm: Arm) -> f64 {
        standard_normal(self.arm_uniform(arm))
    }
}
