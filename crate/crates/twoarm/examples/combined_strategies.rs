//! The combined algorithms: an ordinary prefix of M0 items, then packets.
//!
//! alg6 always continues with proportional packets and suffers at large gaps
//! (the probability floor keeps feeding the bad arm); alg7 inspects the
//! probabilities after the prefix and falls back to per-item sampling when
//! one arm already looks dominated, so its curve stays flat for large d.

use twoarm::{sweep, StrategyConfig, StrategyKind, SweepGrid};

fn main() {
    let n = 12_000u64;
    let gaps = vec![0.0, 2.0, 5.0, 10.0, 15.0, 20.0, 25.0];
    let reps = 1200;
    let seed = 31;

    let mut curves = Vec::new();
    for kind in [StrategyKind::Alg6, StrategyKind::Alg7] {
        let mut cfg = StrategyConfig::new(kind);
        cfg.beta = 2.2; // prefix scale
        cfg.beta2 = 1.0; // packet scale
        cfg.m0 = 600;
        cfg.m = 300;
        cfg.kappa = 0.2;
        let rows = sweep(&SweepGrid::single(cfg, n, 0.5, gaps.clone()), reps, seed).unwrap();
        curves.push((kind, rows));
    }

    println!("normalized regret, N = {n}, M0 = 600, M = 300, p = 0.5:");
    println!("{:>5}  {:>10}  {:>10}", "d", "alg6", "alg7");
    for (i, d) in gaps.iter().enumerate() {
        println!(
            "{:>5}  {:>10.4}  {:>10.4}",
            d, curves[0].1[i].normalized_mean, curves[1].1[i].normalized_mean
        );
    }
}
