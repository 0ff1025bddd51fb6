//! Self-contained SVG line charts for sweep tables: normalized regret
//! against the normalized gap, one polyline per curve, inline axes and
//! legend, no external assets. Presentation only — every number in a chart
//! also lives in the CSV next to it.

use std::fmt::Write;

/// Asymptotic minimax factor of the unrestricted strategy class, drawn as a
/// dashed reference line in every chart. It is a known limit quoted for
/// orientation, not a quantity this crate recomputes.
pub const R0_REFERENCE: f64 = 0.637;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 520.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 160.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 52.0;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
];

/// One named polyline.
#[derive(Debug, Clone)]
pub struct Curve {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

fn nice_step(span: f64, target_ticks: usize) -> f64 {
    let raw = span / target_ticks as f64;
    let magnitude = 10f64.powf(raw.log10().floor());
    for mult in [1.0, 2.0, 5.0, 10.0] {
        if magnitude * mult >= raw {
            return magnitude * mult;
        }
    }
    magnitude * 10.0
}

fn ticks(lo: f64, hi: f64, target: usize) -> Vec<f64> {
    let step = nice_step(hi - lo, target);
    let start = (lo / step).ceil() as i64;
    let end = (hi / step).floor() as i64;
    (start..=end).map(|i| i as f64 * step).collect()
}

fn fmt_tick(v: f64) -> String {
    // Ticks come from nice steps; round away float fuzz before display.
    let rounded = (v * 1e9).round() / 1e9;
    format!("{rounded}")
}

/// Renders the chart. `x_label` is the swept quantity (normally `d`).
pub fn render(title: &str, x_label: &str, y_label: &str, curves: &[Curve]) -> String {
    let xs: Vec<f64> = curves
        .iter()
        .flat_map(|c| c.points.iter().map(|p| p.0))
        .collect();
    let ys: Vec<f64> = curves
        .iter()
        .flat_map(|c| c.points.iter().map(|p| p.1))
        .collect();
    let x_min = xs.iter().copied().fold(f64::INFINITY, f64::min).min(0.0);
    let x_max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max).max(1.0);
    let y_min = ys.iter().copied().fold(f64::INFINITY, f64::min).min(0.0);
    // Keep the reference line inside the viewport.
    let y_max = ys
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
        .max(R0_REFERENCE)
        * 1.06;

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = move |x: f64| MARGIN_LEFT + (x - x_min) / (x_max - x_min) * plot_w;
    let sy = move |y: f64| MARGIN_TOP + plot_h - (y - y_min) / (y_max - y_min) * plot_h;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"12\">"
    );
    let _ = writeln!(
        out,
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    );
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>",
        MARGIN_LEFT + plot_w / 2.0,
        escape(title)
    );

    // Axes.
    let x0 = sx(x_min);
    let x1 = sx(x_max);
    let y0 = sy(y_min);
    let y1 = sy(y_max);
    let _ = writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>"
    );
    let _ = writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>"
    );
    for t in ticks(x_min, x_max, 8) {
        let x = sx(t);
        let _ = writeln!(
            out,
            "<line x1=\"{x}\" y1=\"{y0}\" x2=\"{x}\" y2=\"{}\" stroke=\"black\"/>",
            y0 + 5.0
        );
        let _ = writeln!(
            out,
            "<text x=\"{x}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
            y0 + 20.0,
            fmt_tick(t)
        );
    }
    for t in ticks(y_min, y_max, 7) {
        let y = sy(t);
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{y}\" x2=\"{x0}\" y2=\"{y}\" stroke=\"black\"/>",
            x0 - 5.0
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>",
            x0 - 9.0,
            y + 4.0,
            fmt_tick(t)
        );
        let _ = writeln!(
            out,
            "<line x1=\"{x0}\" y1=\"{y}\" x2=\"{x1}\" y2=\"{y}\" stroke=\"#dddddd\" \
             stroke-width=\"0.5\"/>"
        );
    }
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 12.0,
        escape(x_label)
    );
    let _ = writeln!(
        out,
        "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {})\">{}</text>",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        escape(y_label)
    );

    // Reference line: the asymptotic minimax factor of unrestricted
    // strategies, for orientation only.
    let y_ref = sy(R0_REFERENCE);
    let _ = writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{y_ref}\" x2=\"{x1}\" y2=\"{y_ref}\" stroke=\"#444444\" \
         stroke-dasharray=\"6,4\"/>"
    );
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"{}\" fill=\"#444444\">r0 = 0.637 (asymptotic minimax factor, \
         unrestricted strategies)</text>",
        x0 + 6.0,
        y_ref - 5.0
    );

    for (i, curve) in curves.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let path: Vec<String> = curve
            .points
            .iter()
            .map(|&(x, y)| format!("{},{}", sx(x), sy(y)))
            .collect();
        let _ = writeln!(
            out,
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>",
            path.join(" ")
        );
        let legend_y = MARGIN_TOP + 16.0 * i as f64 + 8.0;
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{legend_y}\" x2=\"{}\" y2=\"{legend_y}\" stroke=\"{color}\" \
             stroke-width=\"2\"/>",
            WIDTH - MARGIN_RIGHT + 12.0,
            WIDTH - MARGIN_RIGHT + 36.0
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\">{}</text>",
            WIDTH - MARGIN_RIGHT + 42.0,
            legend_y + 4.0,
            escape(&curve.label)
        );
    }

    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_curves() -> Vec<Curve> {
        vec![
            Curve {
                label: "N=500".into(),
                points: vec![(1.0, 0.8), (2.0, 1.4), (3.0, 1.1)],
            },
            Curve {
                label: "N=2000".into(),
                points: vec![(1.0, 0.9), (2.0, 1.5), (3.0, 1.2)],
            },
        ]
    }

    #[test]
    fn chart_is_self_contained_and_carries_the_reference_line() {
        let svg = render("demo", "d", "normalized regret", &sample_curves());
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(svg.contains("r0 = 0.637"));
        assert!(svg.matches("<polyline").count() == 2);
        assert!(!svg.contains("href"));
        assert!(svg.contains("N=500"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let a = render("demo", "d", "y", &sample_curves());
        let b = render("demo", "d", "y", &sample_curves());
        assert_eq!(a, b);
    }
}
