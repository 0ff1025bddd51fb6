//! The concrete control strategies: the ordinary mirror-descent algorithm,
//! its two packet-parallel variants (proportional allocation and per-item
//! sampling with frozen probabilities), the Gaussian-duration idealization,
//! the three combined prefix-then-packets algorithms, and the alternating
//! thresholding baseline.
//!
//! A run is strictly sequential over its horizon; parallelism lives one
//! level up, across Monte-Carlo replications.

use crate::env::{gaussian_packet_failures, pull_bernoulli, Arm, BanditParams, VarianceConvention};
use crate::error::Error;
use crate::mirror::{grad_ordinary, grad_packet, BetaSchedule, MdaState, Pair};
use crate::stream::RunStream;

/// Which strategy to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrategyKind {
    /// Ordinary mirror descent, one item at a time.
    Alg1,
    /// Packet mirror descent with proportional integer allocation and a
    /// probability floor.
    Alg2,
    /// Packet mirror descent with real-valued durations and Gaussian
    /// aggregated failures.
    Alg3,
    /// Packet mirror descent sampling every item from the packet's frozen
    /// probabilities.
    Alg4,
    /// Ordinary prefix, then per-item-sampling packets.
    Alg5,
    /// Ordinary prefix, then proportional packets.
    Alg6,
    /// Ordinary prefix, then a one-shot switch: per-item-sampling packets if
    /// one arm already looks dominated, proportional packets otherwise.
    Alg7,
    /// Alternate the arms until the income difference crosses a threshold,
    /// then commit to the leader.
    Threshold,
}

impl StrategyKind {
    pub const ALL: [StrategyKind; 8] = [
        StrategyKind::Alg1,
        StrategyKind::Alg2,
        StrategyKind::Alg3,
        StrategyKind::Alg4,
        StrategyKind::Alg5,
        StrategyKind::Alg6,
        StrategyKind::Alg7,
        StrategyKind::Threshold,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::Alg1 => "alg1",
            StrategyKind::Alg2 => "alg2",
            StrategyKind::Alg3 => "alg3",
            StrategyKind::Alg4 => "alg4",
            StrategyKind::Alg5 => "alg5",
            StrategyKind::Alg6 => "alg6",
            StrategyKind::Alg7 => "alg7",
            StrategyKind::Threshold => "threshold",
        }
    }

    /// Pure packet algorithms requiring `N = M * T`.
    pub fn is_packet(self) -> bool {
        matches!(
            self,
            StrategyKind::Alg2 | StrategyKind::Alg3 | StrategyKind::Alg4
        )
    }

    /// Combined algorithms: ordinary prefix of `M0` items, then packets.
    pub fn is_combined(self) -> bool {
        matches!(
            self,
            StrategyKind::Alg5 | StrategyKind::Alg6 | StrategyKind::Alg7
        )
    }

    pub fn uses_beta(self) -> bool {
        self != StrategyKind::Threshold
    }

    pub fn uses_beta2(self) -> bool {
        matches!(self, StrategyKind::Alg6 | StrategyKind::Alg7)
    }

    pub fn uses_rho(self) -> bool {
        matches!(
            self,
            StrategyKind::Alg2 | StrategyKind::Alg3 | StrategyKind::Alg6 | StrategyKind::Alg7
        )
    }

    pub fn uses_kappa(self) -> bool {
        self == StrategyKind::Alg7
    }

    pub fn uses_alpha(self) -> bool {
        self == StrategyKind::Threshold
    }
}

impl std::fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for StrategyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StrategyKind::ALL
            .into_iter()
            .find(|kind| kind.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = StrategyKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown algorithm `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// A strategy plus all of its tuning knobs. Knobs not used by the selected
/// kind are ignored (and left out of serialized rows).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyConfig {
    pub kind: StrategyKind,
    /// Schedule scale; the prefix scale for the combined algorithms.
    pub beta: f64,
    /// Residual-phase scale for Alg6/Alg7.
    pub beta2: f64,
    /// Probability floor of the proportional packet algorithms.
    pub rho: f64,
    /// Alg7 switch threshold on `min(p)` after the prefix.
    pub kappa: f64,
    /// Threshold factor of the alternating baseline.
    pub alpha: f64,
    /// Packet size.
    pub m: u64,
    /// Packet count (pure packet algorithms; derived for combined ones).
    pub t: u64,
    /// Ordinary prefix length of the combined algorithms.
    pub m0: u64,
    pub convention: VarianceConvention,
}

impl StrategyConfig {
    /// A configuration with the tuned default knobs for `kind`.
    pub fn new(kind: StrategyKind) -> Self {
        let beta = match kind {
            StrategyKind::Alg2 | StrategyKind::Alg3 => 1.0,
            _ => 2.2,
        };
        StrategyConfig {
            kind,
            beta,
            beta2: 1.0,
            rho: 0.02,
            kappa: 0.2,
            alpha: 0.584,
            m: 100,
            t: 100,
            m0: 0,
            convention: VarianceConvention::Canonical,
        }
    }

    /// Number of packets in the residual phase of a combined algorithm.
    pub fn residual_packets(&self, n: u64) -> u64 {
        (n - self.m0) / self.m
    }

    /// Checks every precondition of running this configuration over `n` items.
    pub fn validate(&self, n: u64) -> Result<(), Error> {
        let kind = self.kind;
        if kind.uses_beta() && (self.beta <= 0.0 || self.beta.is_nan()) {
            return Err(Error::NonPositiveBeta(self.beta));
        }
        if kind.uses_beta2() && (self.beta2 <= 0.0 || self.beta2.is_nan()) {
            return Err(Error::NonPositiveBeta(self.beta2));
        }
        if kind.uses_rho() && !(self.rho > 0.0 && self.rho < 0.5) {
            return Err(Error::RhoOutOfRange(self.rho));
        }
        if kind.uses_kappa() && !(self.kappa > 0.0 && self.kappa < 0.5) {
            return Err(Error::KappaOutOfRange(self.kappa));
        }
        if kind.uses_alpha() && (self.alpha <= 0.0 || self.alpha.is_nan()) {
            return Err(Error::NonPositiveAlpha(self.alpha));
        }
        if kind == StrategyKind::Alg3 && self.convention != VarianceConvention::Empirical {
            return Err(Error::EmpiricalRequired { kind });
        }
        match kind {
            StrategyKind::Alg1 => {
                if n < 1 {
                    return Err(Error::HorizonTooShort { kind, n, min: 1 });
                }
            }
            StrategyKind::Threshold => {
                if n < 2 {
                    return Err(Error::HorizonTooShort { kind, n, min: 2 });
                }
            }
            StrategyKind::Alg2 | StrategyKind::Alg3 | StrategyKind::Alg4 => {
                if self.m == 0 {
                    return Err(Error::EmptyPacket);
                }
                if n != self.m * self.t {
                    return Err(Error::PacketHorizonMismatch {
                        n,
                        m: self.m,
                        t: self.t,
                    });
                }
            }
            StrategyKind::Alg5 | StrategyKind::Alg6 | StrategyKind::Alg7 => {
                if self.m == 0 {
                    return Err(Error::EmptyPacket);
                }
                if self.m0 == 0 {
                    return Err(Error::EmptyPrefix);
                }
                if n <= self.m0 || !(n - self.m0).is_multiple_of(self.m) {
                    return Err(Error::ResidualNotMultiple {
                        n,
                        m0: self.m0,
                        m: self.m,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Which residual phase a combined algorithm executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualPhase {
    /// Proportional allocation packets (the Alg2 body).
    Proportional,
    /// Per-item sampling packets (the Alg4 body).
    ItemSampled,
}

/// Optional per-run recording: the state after every update and the item-level
/// action sequence (empty for duration-based runs).
#[derive(Debug, Clone, Default)]
pub struct RunTrace {
    pub states: Vec<MdaState>,
    pub actions: Vec<Arm>,
}

/// The outcome of one simulated run.
#[derive(Debug, Clone)]
pub struct SimResult {
    /// Total income per arm. Summing the two components is exact under arm
    /// relabeling, which keeps the label-symmetry invariant bitwise.
    pub income: [f64; 2],
    /// Pulls per arm; real durations for the Gaussian packet algorithm.
    pub pulls: [f64; 2],
    /// Final mirror-descent state (absent for the thresholding baseline).
    pub final_state: Option<MdaState>,
    /// The branch a combined algorithm took in its residual phase.
    pub residual_phase: Option<ResidualPhase>,
    pub trace: Option<RunTrace>,
}

impl SimResult {
    pub fn total_income(&self) -> f64 {
        self.income[0] + self.income[1]
    }

    pub fn total_pulls(&self) -> f64 {
        self.pulls[0] + self.pulls[1]
    }

    /// The second arm's probability after each recorded update.
    pub fn action2_share(&self) -> Option<Vec<f64>> {
        self.trace
            .as_ref()
            .map(|t| t.states.iter().map(|s| s.p[1]).collect())
    }
}

/// Integer packet allocation: the first arm gets `round-half-up(p1 * m)`
/// items and the second the remainder, so every packet sums to `m` exactly.
pub fn packet_allocation(p_first: f64, m: u64) -> [u64; 2] {
    let k = ((p_first * m as f64 + 0.5).floor() as u64).min(m);
    [k, m - k]
}

struct Sim<'a> {
    theta: &'a BanditParams,
    stream: &'a mut RunStream,
    state: MdaState,
    income: [f64; 2],
    pulls: [f64; 2],
    trace: Option<RunTrace>,
}

impl<'a> Sim<'a> {
    fn new(theta: &'a BanditParams, stream: &'a mut RunStream, trace: bool) -> Self {
        Sim {
            theta,
            stream,
            state: MdaState::initial(),
            income: [0.0; 2],
            pulls: [0.0; 2],
            trace: trace.then(RunTrace::default),
        }
    }

    fn pull(&mut self, arm: Arm) -> u8 {
        let xi = pull_bernoulli(self.theta, arm, self.stream);
        self.pulls[arm.index()] += 1.0;
        self.income[arm.index()] += f64::from(xi);
        if let Some(trace) = self.trace.as_mut() {
            trace.actions.push(arm);
        }
        xi
    }

    fn record_state(&mut self) {
        if let Some(trace) = self.trace.as_mut() {
            trace.states.push(self.state);
        }
    }

    /// Ordinary mirror descent for `count` items; `schedule` is indexed by the
    /// global item counter so a combined prefix and a plain run look the same.
    fn ordinary_steps(&mut self, count: u64, schedule: &BetaSchedule) {
        for _ in 0..count {
            let p_prev = self.state.p;
            let arm = self.stream.draw_action(p_prev[0]);
            let xi = self.pull(arm);
            let grad = grad_ordinary(arm, xi, p_prev);
            let beta = schedule.at(self.state.elapsed + 1);
            self.state.update(grad, beta, None);
            self.state.elapsed += 1;
            self.record_state();
        }
    }

    /// Proportional-allocation packets with the probability floor (the Alg2
    /// body). Arm-one items run first within a packet.
    fn proportional_packets(&mut self, packets: u64, m: u64, schedule: &BetaSchedule, rho: f64) {
        for t in 1..=packets {
            let p_prev = self.state.p;
            let alloc = packet_allocation(p_prev[0], m);
            let mut eta = [0.0f64; 2];
            for arm in Arm::BOTH {
                for _ in 0..alloc[arm.index()] {
                    let xi = self.pull(arm);
                    eta[arm.index()] += f64::from(1 - xi);
                }
            }
            let grad = grad_packet(eta, p_prev);
            self.state.update(grad, schedule.at(t), Some(rho));
            self.state.elapsed += m;
            self.record_state();
        }
    }

    /// Gaussian-duration packets (the Alg3 body): real allocations
    /// `p * m`, aggregated failures drawn in one normal variate per arm.
    fn duration_packets(
        &mut self,
        packets: u64,
        m: u64,
        schedule: &BetaSchedule,
        rho: f64,
        dhat: f64,
    ) {
        for t in 1..=packets {
            let p_prev = self.state.p;
            let mut eta = [0.0f64; 2];
            for arm in Arm::BOTH {
                let duration = p_prev[arm.index()] * m as f64;
                let failures =
                    gaussian_packet_failures(self.theta, arm, dhat, duration, self.stream)
                        .expect("durations are nonnegative");
                self.pulls[arm.index()] += duration;
                self.income[arm.index()] += duration - failures;
                eta[arm.index()] = failures;
            }
            let grad = grad_packet(eta, p_prev);
            self.state.update(grad, schedule.at(t), Some(rho));
            self.state.elapsed += m;
            self.record_state();
        }
    }

    /// Frozen-probability sampling packets (the Alg4 body): every item draws
    /// its own action from the packet's initial probabilities, failures are
    /// pooled, and no projection is applied.
    fn sampled_packets(&mut self, packets: u64, m: u64, schedule: &BetaSchedule) {
        for t in 1..=packets {
            let p_prev = self.state.p;
            let mut chi = [0.0f64; 2];
            for _ in 0..m {
                let arm = self.stream.draw_action(p_prev[0]);
                let xi = self.pull(arm);
                chi[arm.index()] += f64::from(1 - xi);
            }
            let grad = grad_packet(chi, p_prev);
            self.state.update(grad, schedule.at(t), None);
            self.state.elapsed += m;
            self.record_state();
        }
    }

    /// The alternating threshold baseline: turn-by-turn rounds of both arms,
    /// with a strict commitment check once per round (so an exact tie never
    /// commits and the comparison always weighs equal pull counts). An odd
    /// horizon gives its final unpaired alternating turn to the first arm.
    fn threshold_run(&mut self, n: u64, alpha: f64, variance: f64) {
        let threshold = alpha * (variance * n as f64).sqrt();
        let mut committed: Option<Arm> = None;
        let mut taken = 0u64;
        while taken + 1 < n && committed.is_none() {
            self.pull(Arm::First);
            self.pull(Arm::Second);
            taken += 2;
            let diff = self.income[0] - self.income[1];
            if diff.abs() > threshold {
                committed = Some(if diff > 0.0 { Arm::First } else { Arm::Second });
            }
        }
        match committed {
            Some(arm) => {
                for _ in taken..n {
                    self.pull(arm);
                }
            }
            None => {
                if taken < n {
                    self.pull(Arm::First);
                }
            }
        }
    }

    fn into_result(self, final_state: bool, residual_phase: Option<ResidualPhase>) -> SimResult {
        SimResult {
            income: self.income,
            pulls: self.pulls,
            final_state: final_state.then_some(self.state),
            residual_phase,
            trace: self.trace,
        }
    }
}

/// Runs one replication of `cfg` on `theta` over `n` items.
///
/// `variance` is the schedule variance of the experiment (`D = 0.25` under
/// the canonical convention, the center's `p(1-p)` under the empirical one);
/// the Gaussian packet algorithm also uses it as the per-item failure
/// variance.
pub fn run(
    cfg: &StrategyConfig,
    theta: &BanditParams,
    n: u64,
    variance: f64,
    stream: &mut RunStream,
    trace: bool,
) -> Result<SimResult, Error> {
    cfg.validate(n)?;
    let mut sim = Sim::new(theta, stream, trace);
    let result = match cfg.kind {
        StrategyKind::Alg1 => {
            let schedule = BetaSchedule::per_item(cfg.beta, variance)?;
            sim.ordinary_steps(n, &schedule);
            sim.into_result(true, None)
        }
        StrategyKind::Alg2 => {
            let schedule = BetaSchedule::per_packet(cfg.beta, variance, cfg.m, 0)?;
            sim.proportional_packets(cfg.t, cfg.m, &schedule, cfg.rho);
            sim.into_result(true, None)
        }
        StrategyKind::Alg3 => {
            let schedule = BetaSchedule::per_packet(cfg.beta, variance, cfg.m, 0)?;
            sim.duration_packets(cfg.t, cfg.m, &schedule, cfg.rho, variance);
            sim.into_result(true, None)
        }
        StrategyKind::Alg4 => {
            let schedule = BetaSchedule::per_packet(cfg.beta, variance, cfg.m, 0)?;
            sim.sampled_packets(cfg.t, cfg.m, &schedule);
            sim.into_result(true, None)
        }
        StrategyKind::Alg5 => {
            let prefix = BetaSchedule::per_item(cfg.beta, variance)?;
            let residual = BetaSchedule::per_packet(cfg.beta, variance, cfg.m, cfg.m0)?;
            sim.ordinary_steps(cfg.m0, &prefix);
            sim.sampled_packets(cfg.residual_packets(n), cfg.m, &residual);
            sim.into_result(true, Some(ResidualPhase::ItemSampled))
        }
        StrategyKind::Alg6 => {
            let prefix = BetaSchedule::per_item(cfg.beta, variance)?;
            let residual = BetaSchedule::per_packet(cfg.beta2, variance, cfg.m, cfg.m0)?;
            sim.ordinary_steps(cfg.m0, &prefix);
            sim.proportional_packets(cfg.residual_packets(n), cfg.m, &residual, cfg.rho);
            sim.into_result(true, Some(ResidualPhase::Proportional))
        }
        StrategyKind::Alg7 => {
            let prefix = BetaSchedule::per_item(cfg.beta, variance)?;
            sim.ordinary_steps(cfg.m0, &prefix);
            let packets = cfg.residual_packets(n);
            let phase = if sim.state.p[0].min(sim.state.p[1]) < cfg.kappa {
                let residual = BetaSchedule::per_packet(cfg.beta, variance, cfg.m, cfg.m0)?;
                sim.sampled_packets(packets, cfg.m, &residual);
                ResidualPhase::ItemSampled
            } else {
                let residual = BetaSchedule::per_packet(cfg.beta2, variance, cfg.m, cfg.m0)?;
                sim.proportional_packets(packets, cfg.m, &residual, cfg.rho);
                ResidualPhase::Proportional
            };
            sim.into_result(true, Some(phase))
        }
        StrategyKind::Threshold => {
            sim.threshold_run(n, cfg.alpha, variance);
            sim.into_result(false, None)
        }
    };
    Ok(result)
}

/// Ordinary mirror descent under an explicit schedule; used to study the
/// packet algorithms' M = 1 reduction under a shared schedule and stream.
pub fn run_ordinary_with_schedule(
    theta: &BanditParams,
    n: u64,
    schedule: &BetaSchedule,
    stream: &mut RunStream,
    trace: bool,
) -> SimResult {
    let mut sim = Sim::new(theta, stream, trace);
    sim.ordinary_steps(n, schedule);
    sim.into_result(true, None)
}

/// Frozen-probability sampling packets under an explicit schedule; the
/// packet-index schedule argument makes it comparable item-for-item with
/// [`run_ordinary_with_schedule`] at `m = 1`.
pub fn run_sampled_packets_with_schedule(
    theta: &BanditParams,
    m: u64,
    packets: u64,
    schedule: &BetaSchedule,
    stream: &mut RunStream,
    trace: bool,
) -> SimResult {
    let mut sim = Sim::new(theta, stream, trace);
    sim.sampled_packets(packets, m, schedule);
    sim.into_result(true, None)
}

/// One frozen-probability sampling packet in isolation: returns the pooled
/// failure counts `chi`. Exposed for moment checks against
/// `E chi = m * p_frozen * q`.
pub fn sampled_packet_failures(
    theta: &BanditParams,
    p_frozen: Pair,
    m: u64,
    stream: &mut RunStream,
) -> [f64; 2] {
    let mut chi = [0.0f64; 2];
    for _ in 0..m {
        let arm = stream.draw_action(p_frozen[0]);
        let xi = pull_bernoulli(theta, arm, stream);
        chi[arm.index()] += f64::from(1 - xi);
    }
    chi
}
