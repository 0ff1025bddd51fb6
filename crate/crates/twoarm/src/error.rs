use crate::strategy::StrategyKind;

/// Errors produced by environment construction, algorithm configuration and
/// the exact oracles.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{coord} = {value} is outside [0, 1]")]
    ProbabilityOutOfRange { coord: &'static str, value: f64 },

    #[error("duration must be nonnegative, got {0}")]
    NegativeDuration(f64),

    #[error("beta must be positive, got {0}")]
    NonPositiveBeta(f64),

    #[error("schedule variance must be positive, got {0}")]
    NonPositiveVariance(f64),

    #[error("rho must lie in (0, 0.5), got {0}")]
    RhoOutOfRange(f64),

    #[error("kappa must lie in (0, 0.5), got {0}")]
    KappaOutOfRange(f64),

    #[error("alpha must be positive, got {0}")]
    NonPositiveAlpha(f64),

    #[error("horizon N = {n} must equal M*T = {m}*{t} = {}", m * t)]
    PacketHorizonMismatch { n: u64, m: u64, t: u64 },

    #[error("packet size M must be at least 1")]
    EmptyPacket,

    #[error("initial horizon M0 must be at least 1")]
    EmptyPrefix,

    #[error(
        "residual horizon N - M0 = {n} - {m0} must be a positive multiple of the packet size M = {m}"
    )]
    ResidualNotMultiple { n: u64, m0: u64, m: u64 },

    #[error("horizon N = {n} must be at least {min} for {kind}")]
    HorizonTooShort { kind: StrategyKind, n: u64, min: u64 },

    #[error("{kind} requires the empirical variance convention")]
    EmpiricalRequired { kind: StrategyKind },

    #[error("cannot derive a normalized gap: the center variance is 0 at p = {p}")]
    DegenerateCenter { p: f64 },

    #[error("exact enumeration needs 4^N branches; N = {n} exceeds the bound {max}")]
    EnumerationTooLarge { n: u32, max: u32 },

    #[error("exact threshold recursion is bounded at N = {max}, got {n}")]
    RecursionTooLarge { n: u64, max: u64 },

    #[error("replication count must be at least 2, got {0}")]
    TooFewReps(u64),

    #[error("sweep grid has an empty {axis} axis")]
    EmptyGridAxis { axis: &'static str },

    #[error("minimax scan needs a beta-scheduled algorithm, got {kind}")]
    ScanUnsupported { kind: StrategyKind },
}
