//! Preset experiment grids for the standard normalized-regret
//! figures, keyed by their figure ids (fig21..fig53).

use crate::env::VarianceConvention;
use crate::harness::{SweepGrid, SweepRow};
use crate::strategy::{StrategyConfig, StrategyKind};

/// Which quantity labels the curves of a preset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegendAxis {
    Horizon,
    PacketSize,
    PacketCount,
    Center,
    Beta,
    Algorithm,
}

impl LegendAxis {
    pub fn label(self, row: &SweepRow) -> String {
        match self {
            LegendAxis::Horizon => format!("N={}", row.point.n),
            LegendAxis::PacketSize => format!("M={}", row.cfg.m),
            LegendAxis::PacketCount => format!("T={}", row.cfg.t),
            LegendAxis::Center => format!("p={}", row.point.p),
            LegendAxis::Beta => format!("beta={}", row.cfg.beta),
            LegendAxis::Algorithm => row.cfg.kind.name().to_string(),
        }
    }
}

/// A resolved preset: the grids to sweep and how to group rows into curves.
#[derive(Debug, Clone)]
pub struct FigurePreset {
    pub id: &'static str,
    pub title: String,
    pub legend: LegendAxis,
    pub grids: Vec<SweepGrid>,
}

pub const PRESET_IDS: [&str; 13] = [
    "fig21", "fig22", "fig23", "fig24", "fig31", "fig32", "fig33", "fig34", "fig35", "fig41",
    "fig51", "fig52", "fig53",
];

fn d_range(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let count = ((hi - lo) / step).round() as usize;
    (0..=count).map(|i| lo + i as f64 * step).collect()
}

const FIVE_CENTERS: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

fn alg1(beta: f64, convention: VarianceConvention) -> StrategyConfig {
    let mut cfg = StrategyConfig::new(StrategyKind::Alg1);
    cfg.beta = beta;
    cfg.convention = convention;
    cfg
}

fn packet_cfg(
    kind: StrategyKind,
    beta: f64,
    m: u64,
    t: u64,
    convention: VarianceConvention,
) -> StrategyConfig {
    let mut cfg = StrategyConfig::new(kind);
    cfg.beta = beta;
    cfg.m = m;
    cfg.t = t;
    cfg.convention = convention;
    cfg
}

fn combined_cfg(
    kind: StrategyKind,
    beta: f64,
    beta2: f64,
    m0: u64,
    m: u64,
    convention: VarianceConvention,
) -> StrategyConfig {
    let mut cfg = StrategyConfig::new(kind);
    cfg.beta = beta;
    cfg.beta2 = beta2;
    cfg.m0 = m0;
    cfg.m = m;
    cfg.convention = convention;
    cfg
}

/// Resolves a preset id.
pub fn preset(id: &str) -> Option<FigurePreset> {
    use VarianceConvention::{Canonical, Empirical};
    let preset = match id {
        // Ordinary mirror descent, hatted normalization, horizon sweep.
        "fig21" => FigurePreset {
            id: "fig21",
            title: "alg1: beta=2.2, p=0.5, N=500..32000".into(),
            legend: LegendAxis::Horizon,
            grids: [500u64, 2000, 8000, 16_000, 32_000]
                .into_iter()
                .map(|n| SweepGrid::single(alg1(2.2, Empirical), n, 0.5, d_range(1.0, 10.0, 1.0)))
                .collect(),
        },
        // Ordinary mirror descent, hatted, center sweep.
        "fig22" => FigurePreset {
            id: "fig22",
            title: "alg1: beta=2.2, N=2000, p=0.1..0.9".into(),
            legend: LegendAxis::Center,
            grids: vec![SweepGrid {
                base: alg1(2.2, Empirical),
                n: 2000,
                beta_values: vec![2.2],
                p_values: FIVE_CENTERS.to_vec(),
                d_values: d_range(0.0, 10.0, 1.0),
            }],
        },
        // Ordinary mirror descent, unhatted, beta sweep at p=0.1.
        "fig23" => FigurePreset {
            id: "fig23",
            title: "alg1: p=0.1, N=2000, beta=1.0..3.0".into(),
            legend: LegendAxis::Beta,
            grids: vec![SweepGrid {
                base: alg1(2.2, Canonical),
                n: 2000,
                beta_values: vec![1.0, 1.5, 2.0, 2.5, 3.0],
                p_values: vec![0.1],
                d_values: d_range(0.0, 10.0, 1.0),
            }],
        },
        // Ordinary mirror descent, unhatted, center sweep at the tuned beta.
        "fig24" => FigurePreset {
            id: "fig24",
            title: "alg1: beta=2.2, N=2000, p=0.1..0.9".into(),
            legend: LegendAxis::Center,
            grids: vec![SweepGrid {
                base: alg1(2.2, Canonical),
                n: 2000,
                beta_values: vec![2.2],
                p_values: FIVE_CENTERS.to_vec(),
                d_values: d_range(0.0, 10.0, 1.0),
            }],
        },
        // Proportional packets, hatted, packet-size sweep at T=100.
        "fig31" => FigurePreset {
            id: "fig31",
            title: "alg2: beta=1.0, rho=0.02, T=100, M=50..1000".into(),
            legend: LegendAxis::PacketSize,
            grids: [50u64, 200, 500, 1000]
                .into_iter()
                .map(|m| {
                    SweepGrid::single(
                        packet_cfg(StrategyKind::Alg2, 1.0, m, 100, Empirical),
                        m * 100,
                        0.5,
                        d_range(1.0, 25.0, 1.0),
                    )
                })
                .collect(),
        },
        // Proportional packets, hatted, packet-count sweep at M=100.
        "fig32" => FigurePreset {
            id: "fig32",
            title: "alg2: beta=1.0, rho=0.02, M=100, T=50..1000".into(),
            legend: LegendAxis::PacketCount,
            grids: [50u64, 100, 200, 500, 1000]
                .into_iter()
                .map(|t| {
                    SweepGrid::single(
                        packet_cfg(StrategyKind::Alg2, 1.0, 100, t, Empirical),
                        100 * t,
                        0.5,
                        d_range(1.0, 25.0, 1.0),
                    )
                })
                .collect(),
        },
        // Proportional packets, hatted, center sweep.
        "fig33" => FigurePreset {
            id: "fig33",
            title: "alg2: beta=1.0, rho=0.02, M=100, T=500, p=0.1..0.9".into(),
            legend: LegendAxis::Center,
            grids: vec![SweepGrid {
                base: packet_cfg(StrategyKind::Alg2, 1.0, 100, 500, Empirical),
                n: 50_000,
                beta_values: vec![1.0],
                p_values: FIVE_CENTERS.to_vec(),
                d_values: d_range(1.0, 25.0, 1.0),
            }],
        },
        // Proportional packets, unhatted, beta sweep.
        "fig34" => FigurePreset {
            id: "fig34",
            title: "alg2: rho=0.02, M=100, T=300, p=0.5, beta=0.5..2.0".into(),
            legend: LegendAxis::Beta,
            grids: vec![SweepGrid {
                base: packet_cfg(StrategyKind::Alg2, 1.0, 100, 300, Canonical),
                n: 30_000,
                beta_values: vec![0.5, 0.75, 1.0, 1.25, 1.5, 2.0],
                p_values: vec![0.5],
                d_values: d_range(0.0, 25.0, 1.0),
            }],
        },
        // Proportional packets, unhatted, center sweep at the tuned beta.
        "fig35" => FigurePreset {
            id: "fig35",
            title: "alg2: beta=1.0, rho=0.02, M=100, T=300, p=0.1..0.9".into(),
            legend: LegendAxis::Center,
            grids: vec![SweepGrid {
                base: packet_cfg(StrategyKind::Alg2, 1.0, 100, 300, Canonical),
                n: 30_000,
                beta_values: vec![1.0],
                p_values: FIVE_CENTERS.to_vec(),
                d_values: d_range(0.0, 25.0, 1.0),
            }],
        },
        // Frozen-probability sampling packets at a fixed horizon; M=1 is the
        // ordinary algorithm run packet-wise.
        "fig41" => FigurePreset {
            id: "fig41",
            title: "alg4: beta=2.2, N=10000, p=0.5, M=1..200".into(),
            legend: LegendAxis::PacketSize,
            grids: [1u64, 20, 50, 100, 200]
                .into_iter()
                .map(|m| {
                    SweepGrid::single(
                        packet_cfg(StrategyKind::Alg4, 2.2, m, 10_000 / m, Canonical),
                        10_000,
                        0.5,
                        d_range(1.0, 25.0, 1.0),
                    )
                })
                .collect(),
        },
        // Ordinary prefix then sampling packets.
        "fig51" => FigurePreset {
            id: "fig51",
            title: "alg5: beta=2.2, N=20000, M0=600, M=200, p=0.1..0.9".into(),
            legend: LegendAxis::Center,
            grids: vec![SweepGrid {
                base: combined_cfg(StrategyKind::Alg5, 2.2, 2.2, 600, 200, Canonical),
                n: 20_000,
                beta_values: vec![2.2],
                p_values: FIVE_CENTERS.to_vec(),
                d_values: d_range(0.0, 25.0, 1.0),
            }],
        },
        // The two prefix-then-packets variants side by side.
        "fig52" => FigurePreset {
            id: "fig52",
            title: "alg6 vs alg7: beta1=2.2, beta2=1.0, N=30000, p=0.5, M0=900, M=300".into(),
            legend: LegendAxis::Algorithm,
            grids: [StrategyKind::Alg6, StrategyKind::Alg7]
                .into_iter()
                .map(|kind| {
                    SweepGrid::single(
                        combined_cfg(kind, 2.2, 1.0, 900, 300, Canonical),
                        30_000,
                        0.5,
                        d_range(0.0, 25.0, 1.0),
                    )
                })
                .collect(),
        },
        // The switching combined algorithm across centers.
        "fig53" => FigurePreset {
            id: "fig53",
            title: "alg7: beta1=2.2, beta2=1.0, N=30000, M0=900, M=300, p=0.1..0.9".into(),
            legend: LegendAxis::Center,
            grids: vec![SweepGrid {
                base: combined_cfg(StrategyKind::Alg7, 2.2, 1.0, 900, 300, Canonical),
                n: 30_000,
                beta_values: vec![2.2],
                p_values: FIVE_CENTERS.to_vec(),
                d_values: d_range(0.0, 25.0, 1.0),
            }],
        },
        _ => return None,
    };
    Some(preset)
}
