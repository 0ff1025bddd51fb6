//! Monte-Carlo estimation of regret and normalized regret, cartesian sweeps
//! over `(beta, p, d)` grids, and the minimax scan over beta.
//!
//! Determinism contract: an estimate is a pure function of
//! `(config, point, reps, seed)`. Replication `i` of grid point `j` draws
//! from streams keyed by `(seed, j, i)`, replications are folded in index
//! order, and the worker count never changes a single bit of the output.

use rayon::prelude::*;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::env::{BanditParams, NormalizedPoint};
use crate::error::Error;
use crate::strategy::{run, StrategyConfig};
use crate::stream::RunStream;

/// Default replication count of the experiment protocol.
pub const DEFAULT_REPS: u64 = 10_000;

/// Environment variable overriding the worker-thread count.
pub const WORKERS_ENV: &str = "TWOARM_WORKERS";

static WORKER_OVERRIDE: AtomicUsize = AtomicUsize::new(0);

/// Overrides the worker-thread count for subsequent estimates (`None` falls
/// back to `TWOARM_WORKERS`, then to all cores). Results are identical for
/// every worker count; this knob exists so tests can prove exactly that.
pub fn set_worker_override(workers: Option<usize>) {
    WORKER_OVERRIDE.store(workers.unwrap_or(0), Ordering::SeqCst);
}

fn configured_workers() -> Option<usize> {
    let forced = WORKER_OVERRIDE.load(Ordering::SeqCst);
    if forced > 0 {
        return Some(forced);
    }
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|raw| raw.parse::<usize>().ok())
        .filter(|&n| n > 0)
}

fn collect_samples<F>(reps: u64, sample: F) -> Vec<f64>
where
    F: Fn(u64) -> f64 + Sync + Send,
{
    match configured_workers() {
        None => (0..reps).into_par_iter().map(sample).collect(),
        Some(workers) => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("worker pool")
            .install(|| (0..reps).into_par_iter().map(sample).collect()),
    }
}

/// A Monte-Carlo regret estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegretEstimate {
    /// Mean of `N * max(p1, p2) - total_income` over the replications.
    pub mean: f64,
    /// Sample standard deviation divided by sqrt(reps).
    pub stderr: f64,
    pub reps: u64,
    pub seed: u64,
}

fn summarize(samples: &[f64], seed: u64) -> RegretEstimate {
    let reps = samples.len() as u64;
    let mean = samples.iter().sum::<f64>() / reps as f64;
    let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (reps - 1) as f64;
    RegretEstimate {
        mean,
        stderr: (var / reps as f64).sqrt(),
        reps,
        seed,
    }
}

/// Estimates expected regret on an explicit environment parameter.
///
/// Replication `i` is seeded by the pure function `(seed, point_id, i)`; see
/// [`crate::stream::RunStream::new`].
pub fn estimate_regret_theta(
    cfg: &StrategyConfig,
    theta: &BanditParams,
    n: u64,
    variance: f64,
    reps: u64,
    seed: u64,
    point_id: u64,
) -> Result<RegretEstimate, Error> {
    if reps < 2 {
        return Err(Error::TooFewReps(reps));
    }
    cfg.validate(n)?;
    let best = n as f64 * theta.best_mean();
    let samples = collect_samples(reps, |rep| {
        let mut stream = RunStream::new(seed, point_id, rep);
        let result =
            run(cfg, theta, n, variance, &mut stream, false).expect("validated configuration");
        best - result.total_income()
    });
    Ok(summarize(&samples, seed))
}

/// Estimates expected regret at a normalized grid point.
pub fn estimate_regret(
    cfg: &StrategyConfig,
    point: &NormalizedPoint,
    reps: u64,
    seed: u64,
) -> Result<RegretEstimate, Error> {
    estimate_regret_at(cfg, point, reps, seed, 0)
}

/// As [`estimate_regret`], with an explicit grid-point index for stream
/// derivation (used by [`sweep`]).
pub fn estimate_regret_at(
    cfg: &StrategyConfig,
    point: &NormalizedPoint,
    reps: u64,
    seed: u64,
    point_id: u64,
) -> Result<RegretEstimate, Error> {
    let theta = point.theta()?;
    estimate_regret_theta(cfg, &theta, point.n, point.variance(), reps, seed, point_id)
}

/// Normalized regret: `mean / sqrt(variance * N)` under the point's
/// variance convention.
pub fn normalized_regret(estimate: &RegretEstimate, point: &NormalizedPoint) -> f64 {
    estimate.mean / (point.variance() * point.n as f64).sqrt()
}

/// The matching standard error of [`normalized_regret`].
pub fn normalized_stderr(estimate: &RegretEstimate, point: &NormalizedPoint) -> f64 {
    estimate.stderr / (point.variance() * point.n as f64).sqrt()
}

/// A cartesian `(beta, p, d)` experiment grid over a fixed horizon shape.
///
/// The base configuration carries everything else: algorithm, packet shape,
/// floors and the variance convention (which is also the normalization of
/// the resulting curves).
#[derive(Debug, Clone)]
pub struct SweepGrid {
    pub base: StrategyConfig,
    pub n: u64,
    pub beta_values: Vec<f64>,
    pub p_values: Vec<f64>,
    pub d_values: Vec<f64>,
}

impl SweepGrid {
    /// A single-curve grid: one beta (the base's), one center.
    pub fn single(base: StrategyConfig, n: u64, p: f64, d_values: Vec<f64>) -> Self {
        SweepGrid {
            beta_values: vec![base.beta],
            base,
            n,
            p_values: vec![p],
            d_values,
        }
    }

    fn validate(&self) -> Result<(), Error> {
        for (axis, len) in [
            ("beta", self.beta_values.len()),
            ("p", self.p_values.len()),
            ("d", self.d_values.len()),
        ] {
            if len == 0 {
                return Err(Error::EmptyGridAxis { axis });
            }
        }
        Ok(())
    }
}

/// One row of a sweep table.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub cfg: StrategyConfig,
    pub point: NormalizedPoint,
    pub estimate: RegretEstimate,
    pub normalized_mean: f64,
    pub normalized_stderr: f64,
}

/// Runs every grid point and returns one row per point, in lexicographic
/// `(beta, p, d)` order. Corners where the normalized parametrization leaves
/// [0, 1] (large d at an extreme center under the canonical variance) are
/// skipped, so a grid always satisfies the environment's preconditions.
///
/// Stream derivation: the per-point index enumerates the `(p, d)` subgrid
/// only, so estimates at different beta (and across grids sharing the same
/// subgrid) run on common random numbers. That leaves each estimate unbiased
/// and makes curve differences — and the minimax argmin — much quieter.
pub fn sweep(grid: &SweepGrid, reps: u64, seed: u64) -> Result<Vec<SweepRow>, Error> {
    grid.validate()?;
    let mut rows =
        Vec::with_capacity(grid.beta_values.len() * grid.p_values.len() * grid.d_values.len());
    for &beta in &grid.beta_values {
        let mut cfg = grid.base;
        cfg.beta = beta;
        for (pi, &p) in grid.p_values.iter().enumerate() {
            for (di, &d) in grid.d_values.iter().enumerate() {
                let point = NormalizedPoint::new(p, d, grid.n, cfg.convention);
                if point.theta().is_err() {
                    continue;
                }
                let point_id = (pi * grid.d_values.len() + di) as u64;
                let estimate = estimate_regret_at(&cfg, &point, reps, seed, point_id)?;
                rows.push(SweepRow {
                    cfg,
                    point,
                    normalized_mean: normalized_regret(&estimate, &point),
                    normalized_stderr: normalized_stderr(&estimate, &point),
                    estimate,
                });
            }
        }
    }
    Ok(rows)
}

/// The outcome of a minimax scan.
#[derive(Debug, Clone, Copy)]
pub struct ScanResult {
    /// The beta minimizing the worst-case normalized regret (ties broken
    /// toward smaller beta).
    pub beta_star: f64,
    /// The minimized worst-case normalized regret.
    pub r: f64,
    /// Standard error of the estimate behind `r`.
    pub r_stderr: f64,
    /// Where the worst case occurred.
    pub argmax_p: f64,
    pub argmax_d: f64,
}

/// For each beta, takes the maximal normalized regret over the `(p, d)`
/// grid; returns the beta minimizing that maximum, the value, and the grid
/// point where the maximum occurred.
pub fn minimax_scan(grid: &SweepGrid, reps: u64, seed: u64) -> Result<ScanResult, Error> {
    if !grid.base.kind.uses_beta() {
        return Err(Error::ScanUnsupported {
            kind: grid.base.kind,
        });
    }
    let rows = sweep(grid, reps, seed)?;
    scan_from_rows(&rows).ok_or(Error::EmptyGridAxis { axis: "beta" })
}

/// The minimax fold over an already-computed sweep table: per-beta worst
/// case, then the best beta (ties broken toward smaller beta).
pub fn scan_from_rows(rows: &[SweepRow]) -> Option<ScanResult> {
    let mut betas: Vec<f64> = rows.iter().map(|r| r.cfg.beta).collect();
    betas.sort_by(|a, b| a.partial_cmp(b).expect("finite beta"));
    betas.dedup();
    let mut best: Option<ScanResult> = None;
    for beta in betas {
        let worst = rows
            .iter()
            .filter(|row| row.cfg.beta == beta)
            .max_by(|a, b| {
                a.normalized_mean
                    .partial_cmp(&b.normalized_mean)
                    .expect("finite estimates")
            })?;
        let candidate = ScanResult {
            beta_star: beta,
            r: worst.normalized_mean,
            r_stderr: worst.normalized_stderr,
            argmax_p: worst.point.p,
            argmax_d: worst.point.d,
        };
        if best.is_none_or(|b| candidate.r < b.r) {
            best = Some(candidate);
        }
    }
    best
}

/// The frozen CSV schema shared by every command.
pub const CSV_HEADER: &str = "algorithm,beta,beta2,p,d,N,M,T,M0,rho,kappa,alpha,convention,reps,\
                              seed,regret_mean,regret_stderr,normalized_mean,normalized_stderr";

fn field(present: bool, value: f64) -> String {
    if present {
        format!("{value}")
    } else {
        String::new()
    }
}

fn int_field(present: bool, value: u64) -> String {
    if present {
        format!("{value}")
    } else {
        String::new()
    }
}

impl SweepRow {
    /// The row under [`CSV_HEADER`]; knobs the algorithm does not use are
    /// left empty, numbers render in shortest round-trip form.
    pub fn to_csv(&self) -> String {
        let kind = self.cfg.kind;
        let uses_packets = kind.is_packet() || kind.is_combined();
        let t = if kind.is_packet() {
            self.cfg.t
        } else if kind.is_combined() {
            self.cfg.residual_packets(self.point.n)
        } else {
            0
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            kind.name(),
            field(kind.uses_beta(), self.cfg.beta),
            field(kind.uses_beta2(), self.cfg.beta2),
            self.point.p,
            self.point.d,
            self.point.n,
            int_field(uses_packets, self.cfg.m),
            int_field(uses_packets, t),
            int_field(kind.is_combined(), self.cfg.m0),
            field(kind.uses_rho(), self.cfg.rho),
            field(kind.uses_kappa(), self.cfg.kappa),
            field(kind.uses_alpha(), self.cfg.alpha),
            self.cfg.convention.label(),
            self.estimate.reps,
            self.estimate.seed,
            self.estimate.mean,
            self.estimate.stderr,
            self.normalized_mean,
            self.normalized_stderr,
        )
    }
}

/// Renders a full table: header plus one line per row.
pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::env::VarianceConvention;
    use crate::strategy::StrategyKind;

    fn alg1_cfg() -> StrategyConfig {
        StrategyConfig::new(StrategyKind::Alg1)
    }

    #[test]
    fn estimates_are_deterministic_across_worker_counts() {
        let cfg = alg1_cfg();
        let point = NormalizedPoint::new(0.5, 2.0, 200, VarianceConvention::Canonical);
        let baseline = estimate_regret(&cfg, &point, 300, 9).unwrap();
        for workers in [1usize, 2, 3] {
            set_worker_override(Some(workers));
            let again = estimate_regret(&cfg, &point, 300, 9).unwrap();
            assert_eq!(baseline.mean.to_bits(), again.mean.to_bits());
            assert_eq!(baseline.stderr.to_bits(), again.stderr.to_bits());
        }
        set_worker_override(None);
    }

    #[test]
    fn stderr_matches_the_direct_formula() {
        let est = summarize(&[1.0, 2.0, 3.0, 4.0], 0);
        assert!((est.mean - 2.5).abs() < 1e-15);
        // Sample sd of {1,2,3,4} is sqrt(5/3).
        assert!((est.stderr - (5.0f64 / 3.0).sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn too_few_reps_is_an_error() {
        let cfg = alg1_cfg();
        let point = NormalizedPoint::new(0.5, 0.0, 100, VarianceConvention::Canonical);
        assert!(matches!(
            estimate_regret(&cfg, &point, 1, 0),
            Err(Error::TooFewReps(1))
        ));
    }

    #[test]
    fn zero_gap_mean_is_noise_around_zero() {
        let cfg = alg1_cfg();
        let point = NormalizedPoint::new(0.5, 0.0, 500, VarianceConvention::Canonical);
        let est = estimate_regret(&cfg, &point, 2000, 5).unwrap();
        assert!(est.stderr > 0.0);
        assert!(est.mean.abs() <= 3.0 * est.stderr, "mean {} stderr {}", est.mean, est.stderr);
    }

    #[test]
    fn normalization_arithmetic() {
        let point = NormalizedPoint::new(0.5, 1.0, 10_000, VarianceConvention::Canonical);
        let est = RegretEstimate {
            mean: 50.0,
            stderr: 5.0,
            reps: 2,
            seed: 0,
        };
        assert_eq!(normalized_regret(&est, &point), 1.0);
        assert_eq!(normalized_stderr(&est, &point), 0.1);

        let hatted = NormalizedPoint::new(0.1, 1.0, 10_000, VarianceConvention::Empirical);
        assert!((normalized_regret(&est, &hatted) - 50.0 / 30.0).abs() < 1e-12);
    }

    #[test]
    fn single_point_sweep_equals_the_composition() {
        let mut cfg = StrategyConfig::new(StrategyKind::Alg2);
        cfg.m = 20;
        cfg.t = 25;
        let grid = SweepGrid::single(cfg, 500, 0.5, vec![3.0]);
        let rows = sweep(&grid, 200, 3).unwrap();
        assert_eq!(rows.len(), 1);
        let point = NormalizedPoint::new(0.5, 3.0, 500, cfg.convention);
        let direct = estimate_regret(&cfg, &point, 200, 3).unwrap();
        assert_eq!(rows[0].estimate.mean.to_bits(), direct.mean.to_bits());
        assert_eq!(
            rows[0].normalized_mean.to_bits(),
            normalized_regret(&direct, &point).to_bits()
        );
    }

    #[test]
    fn sweep_row_order_is_lexicographic() {
        let mut grid = SweepGrid::single(alg1_cfg(), 100, 0.5, vec![0.0, 1.0]);
        grid.beta_values = vec![1.0, 2.0];
        grid.p_values = vec![0.3, 0.5];
        let rows = sweep(&grid, 50, 1).unwrap();
        let keys: Vec<(f64, f64, f64)> = rows
            .iter()
            .map(|r| (r.cfg.beta, r.point.p, r.point.d))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(keys, sorted);
        assert_eq!(rows.len(), 8);
    }

    #[test]
    fn degenerate_scan_returns_the_only_beta() {
        let grid = SweepGrid::single(alg1_cfg(), 200, 0.5, vec![1.0, 2.0, 3.0]);
        let scan = minimax_scan(&grid, 200, 11).unwrap();
        assert_eq!(scan.beta_star, 2.2);
        assert!(scan.r > 0.0);
    }

    #[test]
    fn scan_rejects_threshold() {
        let grid = SweepGrid::single(
            StrategyConfig::new(StrategyKind::Threshold),
            200,
            0.5,
            vec![1.0],
        );
        assert!(matches!(
            minimax_scan(&grid, 100, 0),
            Err(Error::ScanUnsupported { .. })
        ));
    }

    #[test]
    fn empty_axis_is_an_error() {
        let mut grid = SweepGrid::single(alg1_cfg(), 100, 0.5, vec![]);
        assert!(matches!(
            sweep(&grid, 100, 0),
            Err(Error::EmptyGridAxis { axis: "d" })
        ));
        grid.d_values = vec![1.0];
        grid.beta_values.clear();
        assert!(matches!(
            sweep(&grid, 100, 0),
            Err(Error::EmptyGridAxis { axis: "beta" })
        ));
    }

    #[test]
    fn default_replication_count_matches_the_protocol() {
        assert_eq!(DEFAULT_REPS, 10_000);
    }

    #[test]
    fn csv_schema_is_frozen() {
        assert_eq!(
            CSV_HEADER,
            "algorithm,beta,beta2,p,d,N,M,T,M0,rho,kappa,alpha,convention,reps,seed,\
             regret_mean,regret_stderr,normalized_mean,normalized_stderr"
        );
        let grid = SweepGrid::single(alg1_cfg(), 100, 0.5, vec![1.0]);
        let rows = sweep(&grid, 50, 1).unwrap();
        let line = rows[0].to_csv();
        assert_eq!(line.split(',').count(), CSV_HEADER.split(',').count());
        // Alg1 leaves every packet knob empty.
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0], "alg1");
        assert_eq!(fields[1], "2.2");
        for idx in [2usize, 6, 7, 8, 9, 10, 11] {
            assert_eq!(fields[idx], "", "field {idx} should be empty");
        }
        assert_eq!(fields[12], "canonical");
    }
}
