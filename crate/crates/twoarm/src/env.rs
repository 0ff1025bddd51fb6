//! Two-armed Bernoulli and Gaussian-packet environments and the normalized
//! parametrization `theta = (p + d*sqrt(variance/N), p - d*sqrt(variance/N))`
//! used throughout the experiments.

use crate::error::Error;
use crate::stream::RunStream;

/// One of the two actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arm {
    First,
    Second,
}

impl Arm {
    pub const BOTH: [Arm; 2] = [Arm::First, Arm::Second];

    pub fn index(self) -> usize {
        match self {
            Arm::First => 0,
            Arm::Second => 1,
        }
    }

    pub fn other(self) -> Arm {
        match self {
            Arm::First => Arm::Second,
            Arm::Second => Arm::First,
        }
    }
}

/// Variance convention used by schedules and normalization.
///
/// `Canonical` is the worst-case one-step variance `D = 0.25`; `Empirical`
/// is the center-dependent `D = p(1-p)`. The two are never mixed implicitly:
/// every configuration carries its convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VarianceConvention {
    #[default]
    Canonical,
    Empirical,
}

impl VarianceConvention {
    pub fn label(self) -> &'static str {
        match self {
            VarianceConvention::Canonical => "canonical",
            VarianceConvention::Empirical => "empirical",
        }
    }

    /// The schedule/normalization variance at center probability `p`.
    pub fn variance_at(self, p: f64) -> f64 {
        match self {
            VarianceConvention::Canonical => 0.25,
            VarianceConvention::Empirical => p * (1.0 - p),
        }
    }
}

impl std::str::FromStr for VarianceConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "canonical" => Ok(VarianceConvention::Canonical),
            "empirical" => Ok(VarianceConvention::Empirical),
            other => Err(format!(
                "unknown variance convention `{other}` (expected `canonical` or `empirical`)"
            )),
        }
    }
}

/// The environment parameter: success probabilities of the two actions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BanditParams {
    pub p1: f64,
    pub p2: f64,
}

impl BanditParams {
    pub fn new(p1: f64, p2: f64) -> Result<Self, Error> {
        if !(0.0..=1.0).contains(&p1) || p1.is_nan() {
            return Err(Error::ProbabilityOutOfRange {
                coord: "p1",
                value: p1,
            });
        }
        if !(0.0..=1.0).contains(&p2) || p2.is_nan() {
            return Err(Error::ProbabilityOutOfRange {
                coord: "p2",
                value: p2,
            });
        }
        Ok(BanditParams { p1, p2 })
    }

    /// Expected one-step income of an arm.
    pub fn mean(&self, arm: Arm) -> f64 {
        match arm {
            Arm::First => self.p1,
            Arm::Second => self.p2,
        }
    }

    /// Failure probability of an arm.
    pub fn q(&self, arm: Arm) -> f64 {
        1.0 - self.mean(arm)
    }

    /// One-step income variance of an arm, `p * q`.
    pub fn variance(&self, arm: Arm) -> f64 {
        self.mean(arm) * self.q(arm)
    }

    pub fn best_mean(&self) -> f64 {
        self.p1.max(self.p2)
    }

    pub fn swapped(&self) -> BanditParams {
        BanditParams {
            p1: self.p2,
            p2: self.p1,
        }
    }
}

/// A point of the normalized experiment grid.
///
/// The environment parameter is recovered as
/// `theta = (p + d*s, p - d*s)` with `s = sqrt(variance/N)`, so `d` measures
/// the arm gap in units of the one-step noise accumulated over the horizon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedPoint {
    pub p: f64,
    pub d: f64,
    pub n: u64,
    pub convention: VarianceConvention,
}

impl NormalizedPoint {
    pub fn new(p: f64, d: f64, n: u64, convention: VarianceConvention) -> Self {
        NormalizedPoint {
            p,
            d,
            n,
            convention,
        }
    }

    /// The schedule/normalization variance of this point.
    pub fn variance(&self) -> f64 {
        self.convention.variance_at(self.p)
    }

    pub fn theta(&self) -> Result<BanditParams, Error> {
        theta_from_normalized(self)
    }
}

/// Maps a normalized grid point to the environment parameter.
///
/// For `d >= 0` the first coordinate is the larger one and the gap is exactly
/// `2 d sqrt(variance/N)`; calling with `-d` yields the coordinate-swapped
/// parameter.
pub fn theta_from_normalized(point: &NormalizedPoint) -> Result<BanditParams, Error> {
    let scale = (point.variance() / point.n as f64).sqrt();
    let shift = point.d * scale;
    BanditParams::new(point.p + shift, point.p - shift)
}

/// One Bernoulli pull of `arm`; returns the 0/1 income.
///
/// Consumes exactly one uniform variate from the arm's income substream.
pub fn pull_bernoulli(params: &BanditParams, arm: Arm, stream: &mut RunStream) -> u8 {
    u8::from(stream.arm_uniform(arm) < params.mean(arm))
}

/// Aggregated failure mass of applying `arm` for a (possibly fractional)
/// duration: a normal variate with mean `q * duration` and variance
/// `dhat * duration`, where `dhat` is the experiment's center variance.
/// A zero duration yields exactly 0.
pub fn gaussian_packet_failures(
    params: &BanditParams,
    arm: Arm,
    dhat: f64,
    duration: f64,
    stream: &mut RunStream,
) -> Result<f64, Error> {
    if duration < 0.0 || duration.is_nan() {
        return Err(Error::NegativeDuration(duration));
    }
    // Consume the variate even at zero duration so packet streams stay aligned
    // across configurations with the same packet count.
    let g = stream.arm_gaussian(arm);
    if duration == 0.0 {
        return Ok(0.0);
    }
    Ok(params.q(arm) * duration + (dhat * duration).sqrt() * g)
}
