//! Sweep normalized-regret curves of the ordinary mirror-descent algorithm
//! over the gap d for two horizons, in the hatted (empirical-variance)
//! normalization. The curves nearly coincide: normalized regret converges
//! as the horizon grows.

use twoarm::{sweep, StrategyConfig, StrategyKind, SweepGrid, VarianceConvention};

fn main() {
    let mut base = StrategyConfig::new(StrategyKind::Alg1);
    base.convention = VarianceConvention::Empirical;
    let gaps: Vec<f64> = (0..=10).map(f64::from).collect();

    let mut curves = Vec::new();
    for n in [500u64, 2000] {
        let grid = SweepGrid::single(base, n, 0.5, gaps.clone());
        curves.push((n, sweep(&grid, 2000, 7).unwrap()));
    }

    println!("normalized regret, beta = {}, p = 0.5", base.beta);
    print!("{:>4}", "d");
    for (n, _) in &curves {
        print!("  {:>12}", format!("N={n}"));
    }
    println!();
    for i in 0..gaps.len() {
        print!("{:>4}", gaps[i]);
        for (_, rows) in &curves {
            print!("  {:>12.4}", rows[i].normalized_mean);
        }
        println!();
    }
}
