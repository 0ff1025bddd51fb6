//! The alternate-then-commit baseline: its normalized regret over the gap
//! peaks near d ~ 1.9 and stays in the classical band below 0.752 at the
//! tuned threshold factor alpha = 0.584.

use twoarm::{sweep, StrategyConfig, StrategyKind, SweepGrid};

fn main() {
    let cfg = StrategyConfig::new(StrategyKind::Threshold); // alpha = 0.584
    let gaps: Vec<f64> = (1..=10).map(|i| i as f64 * 0.5).collect();
    let rows = sweep(&SweepGrid::single(cfg, 10_000, 0.5, gaps), 4000, 17).unwrap();

    println!("threshold strategy, alpha = {}, N = 10000, p = 0.5:", cfg.alpha);
    for row in &rows {
        let bar = "#".repeat((row.normalized_mean * 60.0).round() as usize);
        println!("  d={:<4} {:>7.4}  {bar}", row.point.d, row.normalized_mean);
    }
    let worst = rows
        .iter()
        .max_by(|a, b| a.normalized_mean.partial_cmp(&b.normalized_mean).unwrap())
        .unwrap();
    println!(
        "peak {:.4} at d = {} (classical worst case: ~0.75 near d = 1.89)",
        worst.normalized_mean, worst.point.d
    );
}
