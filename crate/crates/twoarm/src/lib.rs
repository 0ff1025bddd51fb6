//! Mirror-descent strategies for the minimax two-armed bandit.
//!
//! The crate simulates a two-armed Bernoulli bandit controlled by the
//! ordinary (item-by-item) mirror-descent algorithm, by packet-parallel
//! variants that process data in stages of `M` items, by combined
//! prefix-then-packets algorithms, and by the classical alternate-then-commit
//! thresholding strategy. A deterministic Monte-Carlo harness estimates
//! expected regret, sweeps normalized-regret curves over `(beta, p, d)`
//! grids, and scans for the minimax factor; exact small-horizon oracles
//! validate the whole pipeline.
//!
//! Every estimate is a pure function of `(configuration, seed)`: replications
//! draw from counter-derived ChaCha streams and results are bitwise identical
//! for any worker count.
//!
//! Start with the runnable examples (`cargo run --example single_run`) or the
//! `twoarm` binary (`run`, `figure`, `scan`, `oracle-check`).

pub mod cli;
pub mod env;
mod error;
pub mod figures;
pub mod harness;
pub mod mirror;
pub mod oracle;
pub mod strategy;
pub mod stream;
pub mod svg;

pub use env::{
    gaussian_packet_failures, pull_bernoulli, theta_from_normalized, Arm, BanditParams,
    NormalizedPoint, VarianceConvention,
};
pub use error::Error;
pub use harness::{
    estimate_regret, minimax_scan, normalized_regret, normalized_stderr, scan_from_rows, sweep,
    RegretEstimate, ScanResult, SweepGrid, SweepRow,
};
pub use mirror::{beta_star, gibbs, project, BetaSchedule, MdaState, Pair, ScheduleKind};
pub use oracle::{exact_regret_alg1, exact_regret_threshold};
pub use strategy::{run, ResidualPhase, SimResult, StrategyConfig, StrategyKind};
pub use stream::RunStream;
