//! Estimate the expected regret of one strategy at one grid point.
//!
//! The environment is specified in normalized coordinates: a center
//! probability `p`, a gap `d` in units of sqrt(variance/N), and a horizon N.

use twoarm::{
    estimate_regret, normalized_regret, normalized_stderr, NormalizedPoint, StrategyConfig,
    StrategyKind, VarianceConvention,
};

fn main() {
    let cfg = StrategyConfig::new(StrategyKind::Alg1); // beta = 2.2
    let point = NormalizedPoint::new(0.5, 3.0, 2000, VarianceConvention::Canonical);
    let theta = point.theta().unwrap();
    println!(
        "environment: p1 = {:.4}, p2 = {:.4} (p = {}, d = {}, N = {})",
        theta.p1, theta.p2, point.p, point.d, point.n
    );

    let estimate = estimate_regret(&cfg, &point, 5000, 42).unwrap();
    println!(
        "expected regret  : {:.3} ± {:.3}  ({} replications, seed {})",
        estimate.mean, estimate.stderr, estimate.reps, estimate.seed
    );
    println!(
        "normalized regret: {:.4} ± {:.4}",
        normalized_regret(&estimate, &point),
        normalized_stderr(&estimate, &point)
    );
}
