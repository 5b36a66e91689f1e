//! Regenerates the bundled test fixtures and their golden outputs:
//!
//! ```text
//! cargo run -p conereg --example make_fixtures -- crates/conereg/tests/fixtures
//! ```

use std::fs;
use std::path::PathBuf;

use conereg::csv_format::{self, Schema};
use conereg::report::{predict_all, ModelKind, ModelReport, Policy};
use conereg::simulation::{generate_dataset, rep_rng, ConfigId, ErrorLaw, SimulationConfig};

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "crates/conereg/tests/fixtures".into()));
    fs::create_dir_all(&dir).unwrap();

    let synthetic = SimulationConfig::new(ConfigId::I, 40, 1, 7).with_error_law(ErrorLaw::ZeroMean);
    let g = generate_dataset(&synthetic, &mut rep_rng(synthetic.seed, 0));
    let mut buf = Vec::new();
    csv_format::write_dataset(&mut buf, &g.data, Schema::LowerUpper).unwrap();
    fs::write(dir.join("synthetic.csv"), &buf).unwrap();

    let report = ModelReport::fit(&g.data, ModelKind::Cone, Policy::Auto).unwrap();
    fs::write(dir.join("synthetic_report.json"), report.to_json()).unwrap();
    let rows: Vec<_> = g.data.rows().map(|(x, _)| x.to_vec()).collect();
    let predictions = predict_all(report.predictor().as_ref(), &rows).unwrap();
    let mut buf = Vec::new();
    csv_format::write_predictions(&mut buf, &predictions, Schema::LowerUpper).unwrap();
    fs::write(dir.join("synthetic_predictions.csv"), &buf).unwrap();

    let mut noiseless = SimulationConfig::new(ConfigId::III, 30, 1, 11);
    noiseless.noiseless = true;
    let g = generate_dataset(&noiseless, &mut rep_rng(noiseless.seed, 0));
    let mut buf = Vec::new();
    csv_format::write_dataset(&mut buf, &g.data, Schema::CenterRange).unwrap();
    fs::write(dir.join("noiseless.csv"), &buf).unwrap();
}
