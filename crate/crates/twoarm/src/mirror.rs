//! Shared mirror-descent machinery: the Gibbs (entropic) map, the probability
//! floor projection, square-root beta schedules and the thresholded
//! stochastic gradients.

use crate::env::Arm;
use crate::error::Error;

/// A two-component vector: probabilities, duals or gradients.
pub type Pair = [f64; 2];

/// Scale factor `(8 / ln 2)^(1/2) ~= 3.397` of the proven worst-case
/// per-item schedule.
pub fn beta_star() -> f64 {
    (8.0 / std::f64::consts::LN_2).sqrt()
}

/// The Gibbs distribution `(e^{-z1/beta}, e^{-z2/beta})` normalized to sum 1.
///
/// Computed from the dual difference `(z1 - z2)/beta`, so arbitrarily large
/// duals cannot overflow; the disfavored component underflows to 0 and the
/// sum stays exactly 1.
pub fn gibbs(zeta: Pair, beta: f64) -> Result<Pair, Error> {
    if beta <= 0.0 || beta.is_nan() {
        return Err(Error::NonPositiveBeta(beta));
    }
    Ok(gibbs_raw(zeta, beta))
}

// The two branches make the map exactly symmetric: swapping the dual
// components swaps the output components bitwise.
pub(crate) fn gibbs_raw(zeta: Pair, beta: f64) -> Pair {
    let diff = (zeta[0] - zeta[1]) / beta;
    if diff >= 0.0 {
        let e = (-diff).exp();
        let lo = e / (1.0 + e);
        [lo, 1.0 - lo]
    } else {
        let e = diff.exp();
        let lo = e / (1.0 + e);
        [1.0 - lo, lo]
    }
}

/// Clamps a probability vector away from 0: a component below `rho` is raised
/// to `rho` and the other lowered to `1 - rho`. Identity otherwise; idempotent.
pub fn project(p: Pair, rho: f64) -> Result<Pair, Error> {
    if !(rho > 0.0 && rho < 0.5) {
        return Err(Error::RhoOutOfRange(rho));
    }
    Ok(project_raw(p, rho))
}

pub(crate) fn project_raw(p: Pair, rho: f64) -> Pair {
    if p[0] < rho {
        [rho, 1.0 - rho]
    } else if p[1] < rho {
        [1.0 - rho, rho]
    } else {
        p
    }
}

/// How a schedule indexes time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScheduleKind {
    /// Item-by-item: `beta_n = beta * sqrt(variance * (n + 1))`.
    PerItem,
    /// Packet-by-packet: `beta_t = beta * sqrt(variance * (offset + m * (t + 0.5)))`.
    /// `offset` is the item mass already processed before this phase, so a
    /// combined algorithm keeps the sqrt-of-elapsed growth across the handoff.
    PerPacket { m: f64, offset: f64 },
}

/// A strictly increasing step-size schedule `beta_i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaSchedule {
    beta: f64,
    variance: f64,
    kind: ScheduleKind,
}

impl BetaSchedule {
    pub fn per_item(beta: f64, variance: f64) -> Result<Self, Error> {
        Self::new(beta, variance, ScheduleKind::PerItem)
    }

    pub fn per_packet(beta: f64, variance: f64, m: u64, offset: u64) -> Result<Self, Error> {
        Self::new(
            beta,
            variance,
            ScheduleKind::PerPacket {
                m: m as f64,
                offset: offset as f64,
            },
        )
    }

    fn new(beta: f64, variance: f64, kind: ScheduleKind) -> Result<Self, Error> {
        if beta <= 0.0 || beta.is_nan() {
            return Err(Error::NonPositiveBeta(beta));
        }
        if variance <= 0.0 || variance.is_nan() {
            return Err(Error::NonPositiveVariance(variance));
        }
        Ok(BetaSchedule {
            beta,
            variance,
            kind,
        })
    }

    /// The step size at item `n` (PerItem) or packet `t` (PerPacket),
    /// both indexed from 1.
    pub fn at(&self, index: u64) -> f64 {
        let i = index as f64;
        match self.kind {
            ScheduleKind::PerItem => self.beta * (self.variance * (i + 1.0)).sqrt(),
            ScheduleKind::PerPacket { m, offset } => {
                self.beta * (self.variance * (offset + m * (i + 0.5))).sqrt()
            }
        }
    }
}

/// The thresholded stochastic gradient of one ordinary step: the chosen arm
/// carries `(1 - income) / p_prev`, the other arm carries 0.
pub fn grad_ordinary(arm: Arm, income: u8, p_prev: Pair) -> Pair {
    let p = p_prev[arm.index()];
    debug_assert!(p > 0.0, "chosen arm has zero probability");
    let mut grad = [0.0, 0.0];
    grad[arm.index()] = f64::from(1 - income) / p;
    grad
}

/// The packet gradient: accumulated failures divided componentwise by the
/// packet's frozen probabilities. A zero failure mass contributes exactly 0
/// even for an arm whose probability has underflowed to 0 (such an arm was
/// never applied).
pub fn grad_packet(eta: Pair, p_prev: Pair) -> Pair {
    let comp = |i: usize| {
        if eta[i] == 0.0 {
            0.0
        } else {
            debug_assert!(p_prev[i] > 0.0, "failures recorded on a zero-probability arm");
            eta[i] / p_prev[i]
        }
    };
    [comp(0), comp(1)]
}

/// The mirror-descent state: probability vector, dual vector and the number
/// of items processed so far.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MdaState {
    pub p: Pair,
    pub zeta: Pair,
    pub elapsed: u64,
}

impl MdaState {
    /// The standard start: `p = (0.5, 0.5)`, `zeta = (0, 0)`.
    pub fn initial() -> Self {
        MdaState {
            p: [0.5, 0.5],
            zeta: [0.0, 0.0],
            elapsed: 0,
        }
    }

    /// One mirror-descent update: accumulate the gradient into the dual,
    /// remap through the Gibbs distribution at step size `beta`, and apply
    /// the floor projection when `rho` is given. `elapsed` is advanced by
    /// the caller, which knows the item mass behind the gradient.
    pub fn update(&mut self, grad: Pair, beta: f64, rho: Option<f64>) {
        debug_assert!(beta > 0.0);
        self.zeta[0] += grad[0];
        self.zeta[1] += grad[1];
        self.p = gibbs_raw(self.zeta, beta);
        if let Some(rho) = rho {
            debug_assert!(rho > 0.0 && rho < 0.5);
            self.p = project_raw(self.p, rho);
        }
    }
}
