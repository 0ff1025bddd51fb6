//! Exact expected-regret computations for small horizons, independent of the
//! Monte-Carlo path: full path enumeration for the ordinary mirror-descent
//! strategy and a dynamic program for the thresholding strategy. These are
//! the ground truth the simulation harness is validated against.

use crate::env::{Arm, BanditParams};
use crate::error::Error;
use crate::mirror::{gibbs_raw, grad_ordinary, BetaSchedule, Pair};

/// Largest horizon accepted by [`exact_regret_alg1`] (4^N branches).
pub const MAX_ENUMERATION_HORIZON: u32 = 12;

/// Largest horizon accepted by [`exact_regret_threshold`].
pub const MAX_THRESHOLD_HORIZON: u64 = 10_000;

/// Compensated (Kahan) accumulator; the enumeration adds up to 4^12 terms of
/// magnitude <= 1 and the leaf mass must come back to 1 within 1e-12.
#[derive(Debug, Clone, Copy, Default)]
struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    fn add(&mut self, value: f64) {
        let y = value - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum
    }
}

struct Enumeration<'a> {
    theta: &'a BanditParams,
    horizon: u32,
    schedule: &'a BetaSchedule,
    expected_income: KahanSum,
    leaf_mass: KahanSum,
}

impl Enumeration<'_> {
    fn walk(&mut self, step: u32, p: Pair, zeta: Pair, prob: f64, income: u32) {
        if step == self.horizon {
            self.expected_income.add(prob * f64::from(income));
            self.leaf_mass.add(prob);
            return;
        }
        let n = u64::from(step) + 1;
        let beta = self.schedule.at(n);
        for arm in Arm::BOTH {
            let p_arm = p[arm.index()];
            if p_arm == 0.0 {
                continue;
            }
            for xi in [1u8, 0u8] {
                let branch = if xi == 1 {
                    self.theta.mean(arm)
                } else {
                    self.theta.q(arm)
                };
                if branch == 0.0 {
                    continue;
                }
                let grad = grad_ordinary(arm, xi, p);
                let next_zeta = [zeta[0] + grad[0], zeta[1] + grad[1]];
                let next_p = gibbs_raw(next_zeta, beta);
                self.walk(
                    step + 1,
                    next_p,
                    next_zeta,
                    prob * p_arm * branch,
                    income + u32::from(xi),
                );
            }
        }
    }
}

/// Exact expected regret of the ordinary mirror-descent strategy over `n`
/// steps, by enumerating all 4^n (action, income) branches with the
/// deterministic Gibbs update in between.
pub fn exact_regret_alg1(
    theta: &BanditParams,
    n: u32,
    schedule: &BetaSchedule,
) -> Result<f64, Error> {
    if n > MAX_ENUMERATION_HORIZON {
        return Err(Error::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_HORIZON,
        });
    }
    let mut enumeration = Enumeration {
        theta,
        horizon: n,
        schedule,
        expected_income: KahanSum::default(),
        leaf_mass: KahanSum::default(),
    };
    enumeration.walk(0, [0.5, 0.5], [0.0, 0.0], 1.0, 0);
    let mass = enumeration.leaf_mass.value();
    assert!(
        (mass - 1.0).abs() <= 1e-12,
        "leaf probabilities sum to {mass}, not 1"
    );
    Ok(f64::from(n) * theta.best_mean() - enumeration.expected_income.value())
}

/// Exact expected regret of the thresholding strategy: apply the arms in
/// alternating rounds, and once the absolute income difference exceeds
/// `alpha * sqrt(variance*n)` commit to the leader for the rest of the
/// horizon.
///
/// Dynamic program over the integer income-difference walk, one round of
/// both arms per step, with absorption on strict threshold crossings (ties
/// never commit). Mirrors the simulated strategy decision-for-decision,
/// including the final unpaired first-arm turn of an odd horizon.
pub fn exact_regret_threshold(
    theta: &BanditParams,
    n: u64,
    alpha: f64,
    variance: f64,
) -> Result<f64, Error> {
    if n > MAX_THRESHOLD_HORIZON {
        return Err(Error::RecursionTooLarge {
            n,
            max: MAX_THRESHOLD_HORIZON,
        });
    }
    if alpha <= 0.0 || alpha.is_nan() {
        return Err(Error::NonPositiveAlpha(alpha));
    }
    let threshold = alpha * (variance * n as f64).sqrt();
    // Alive differences satisfy |diff| <= threshold; one more slot each side
    // holds the round's overshoot before absorption.
    let rounds = n / 2;
    let reach = (threshold.floor() as i64 + 1).min(rounds as i64 + 1);
    let width = (2 * reach + 1) as usize;
    let center = reach as usize;
    let mut alive = vec![0.0f64; width];
    let mut next = vec![0.0f64; width];
    alive[center] = 1.0;

    let p_round = theta.mean(Arm::First) + theta.mean(Arm::Second);
    let up = theta.mean(Arm::First) * theta.q(Arm::Second);
    let down = theta.q(Arm::First) * theta.mean(Arm::Second);
    let stay = 1.0 - up - down;

    let mut expected_income = KahanSum::default();
    for round in 1..=rounds {
        let alive_mass: f64 = alive.iter().sum();
        if alive_mass == 0.0 {
            break;
        }
        // Every replication still alive plays both arms this round.
        expected_income.add(alive_mass * p_round);

        next.iter_mut().for_each(|x| *x = 0.0);
        for (idx, &mass) in alive.iter().enumerate() {
            if mass == 0.0 {
                continue;
            }
            next[idx + 1] += mass * up;
            next[idx - 1] += mass * down;
            next[idx] += mass * stay;
        }
        for (idx, slot) in next.iter_mut().enumerate() {
            if *slot == 0.0 {
                continue;
            }
            let diff = idx as i64 - reach;
            if (diff.abs() as f64) > threshold {
                let leader = if diff > 0 { Arm::First } else { Arm::Second };
                expected_income.add(*slot * (n - 2 * round) as f64 * theta.mean(leader));
                *slot = 0.0;
            }
        }
        std::mem::swap(&mut alive, &mut next);
    }

    // The unpaired final turn of an odd horizon goes to the first arm.
    if n % 2 == 1 {
        let alive_mass: f64 = alive.iter().sum();
        expected_income.add(alive_mass * theta.mean(Arm::First));
    }

    Ok(n as f64 * theta.best_mean() - expected_income.value())
}


/// Pinned oracle outputs used by the CLI `oracle-check` command and the
/// acceptance suite. Values are frozen outputs of the two exact routines
/// above at the stated configurations.
pub mod pinned {
    /// `exact_regret_alg1(theta=(0.7,0.3), n=6, per-item beta=2.2, D=0.25)`.
    pub const ALG1_N6_BETA22: f64 = 1.002_460_205_517_193_2;
    /// `exact_regret_threshold(theta=(0.9,0.1), n=10, alpha=0.584, D=0.25)`.
    /// The absorbing round walk is small enough to evaluate by hand here:
    /// rounds move +1 w.p. 0.81, -1 w.p. 0.01, else stay, and the first
    /// crossing commits; the expected income telescopes to 7.95080448.
    pub const THRESHOLD_N10_A0584: f64 = 1.049_195_52;
}
