//! Validate Monte-Carlo estimates against exact computations: full path
//! enumeration for the ordinary algorithm at a tiny horizon, and the
//! absorbing-walk recursion for the thresholding baseline.

use twoarm::harness::estimate_regret_theta;
use twoarm::{
    exact_regret_alg1, exact_regret_threshold, BanditParams, BetaSchedule, StrategyConfig,
    StrategyKind,
};

fn main() {
    let reps = 50_000;
    let seed = 2;

    let alg1 = StrategyConfig::new(StrategyKind::Alg1);
    let schedule = BetaSchedule::per_item(alg1.beta, 0.25).unwrap();
    let theta = BanditParams::new(0.7, 0.3).unwrap();
    let exact = exact_regret_alg1(&theta, 6, &schedule).unwrap();
    let est = estimate_regret_theta(&alg1, &theta, 6, 0.25, reps, seed, 0).unwrap();
    println!("alg1, theta=(0.7,0.3), N=6:");
    println!("  exact (4^6 path enumeration): {exact:.6}");
    println!(
        "  Monte-Carlo ({reps} reps):      {:.6} ± {:.6}   z = {:+.2}",
        est.mean,
        est.stderr,
        (est.mean - exact) / est.stderr
    );

    let threshold = StrategyConfig::new(StrategyKind::Threshold);
    let spread = BanditParams::new(0.9, 0.1).unwrap();
    let exact_t = exact_regret_threshold(&spread, 10, threshold.alpha, 0.25).unwrap();
    let est_t = estimate_regret_theta(&threshold, &spread, 10, 0.25, reps, seed, 1).unwrap();
    println!("threshold, theta=(0.9,0.1), N=10, alpha={}:", threshold.alpha);
    println!("  exact (absorbing-walk recursion): {exact_t:.6}");
    println!(
        "  Monte-Carlo ({reps} reps):          {:.6} ± {:.6}   z = {:+.2}",
        est_t.mean,
        est_t.stderr,
        (est_t.mean - exact_t) / est_t.stderr
    );
}
