//! Render a preset figure to CSV + SVG without going through the binary.
//! Uses a reduced replication count so it finishes in seconds; pass higher
//! `--reps` to the `twoarm figure` command for publication-quality curves.

use twoarm::cli::figure_curves;
use twoarm::figures::preset;
use twoarm::harness::{rows_to_csv, sweep};
use twoarm::svg::render;

fn main() {
    let preset = preset("fig24").expect("known preset");
    let mut rows = Vec::new();
    for grid in &preset.grids {
        rows.extend(sweep(grid, 150, 8).unwrap());
    }

    let out_dir = std::env::temp_dir().join("twoarm-figures");
    std::fs::create_dir_all(&out_dir).unwrap();
    let csv_path = out_dir.join(format!("{}.csv", preset.id));
    std::fs::write(&csv_path, rows_to_csv(&rows)).unwrap();

    let curves = figure_curves(&preset, &rows);
    let svg = render(&preset.title, "d", "normalized regret", &curves);
    let svg_path = out_dir.join(format!("{}.svg", preset.id));
    std::fs::write(&svg_path, svg).unwrap();

    println!("{} rows -> {}", rows.len(), csv_path.display());
    println!("{} curves -> {}", curves.len(), svg_path.display());
}
