use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::csv_format::{self, IntervalTable};
use crate::error::{Error, Result};
use crate::report::{metrics, predict_all, ModelKind, ModelReport, Policy};
use crate::simulation::{self, ConfigId, ErrorLaw, SimulationConfig, Table1Row, Table3Row};

#[derive(Debug, Parser)]
#[command(name = "conereg", version, about = "Cone-affine linear regression for interval-valued data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit a model to a CSV file and write a JSON report.
    Fit(FitArgs),
    /// Predict outcome intervals with a saved report.
    Predict(PredictArgs),
    /// Run the Monte Carlo tables.
    Simulate(SimulateArgs),
    /// Compare the cone model with CCRM and the M model on one dataset.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct FitArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = ModelKind::Cone)]
    pub model: ModelKind,
    /// Positivity policy for theta and gamma (cone model only).
    #[arg(long, value_enum, default_value_t = Policy::Auto)]
    pub constrained: Policy,
    /// JSON report path; without it the JSON goes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the plain-text report here.
    #[arg(long)]
    pub text: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    pub report: PathBuf,
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub table: u8,
    /// Model configurations; default all three (III for table 2).
    #[arg(long, value_enum, value_delimiter = ',', ignore_case = true)]
    pub config: Vec<ConfigId>,
    /// Training sizes; default 100,200,300,400 (table 1), 300 (table 2),
    /// 60,100,200,300 (table 3).
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = 500)]
    pub reps: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ErrorLaw::Literal)]
    pub error_law: ErrorLaw,
    /// Directory for tableK.csv and tableK.txt.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    pub train: PathBuf,
    /// Evaluate here instead of in-sample.
    #[arg(long)]
    pub holdout: Option<PathBuf>,
    /// CSV output path; without it a text table goes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn read_table(path: &Path) -> Result<IntervalTable> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    csv_format::read_table(file).map_err(|source| Error::Data {
        path: path.to_path_buf(),
        source,
    })
}

fn read_dataset(path: &Path) -> Result<(conereg_core::IntervalDataset, csv_format::Schema)> {
    let table = read_table(path)?;
    let schema = table.schema;
    let data = table.into_dataset().map_err(|source| Error::Data {
        path: path.to_path_buf(),
        source,
    })?;
    Ok((data, schema))
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn check_names(path: &Path, found: &[String], expected: &[String]) -> Result<()> {
    if found == expected {
        return Ok(());
    }
    Err(Error::Data {
        path: path.to_path_buf(),
        source: csv_format::DataError::Header(format!(
            "predictors [{}] do not match the model's [{}]",
            found.join(", "),
            expected.join(", ")
        )),
    })
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Fit(a) => fit(a, stdout),
        Command::Predict(a) => predict(a, stdout),
        Command::Simulate(a) => simulate(a, stdout),
        Command::Compare(a) => compare(a, stdout),
    }
}

fn emit(stdout: &mut dyn Write, bytes: &[u8]) -> Result<()> {
    stdout.write_all(bytes).map_err(|e| Error::io("<stdout>", e))
}

fn fit(a: FitArgs, stdout: &mut dyn Write) -> Result<()> {
    if a.model != ModelKind::Cone && a.constrained != Policy::Auto {
        return Err(Error::Usage("--constrained applies to the cone model only".into()));
    }
    let (data, _) = read_dataset(&a.input)?;
    let report = ModelReport::fit(&data, a.model, a.constrained)?;
    let text = report.to_text();
    if let Some(path) = &a.text {
        write_file(path, text.as_bytes())?;
    }
    match &a.out {
        Some(path) => {
            write_file(path, report.to_json().as_bytes())?;
            emit(stdout, text.as_bytes())
        }
        None => emit(stdout, report.to_json().as_bytes()),
    }
}

fn predict(a: PredictArgs, stdout: &mut dyn Write) -> Result<()> {
    let json = fs::read_to_string(&a.report).map_err(|e| Error::io(&a.report, e))?;
    let report = ModelReport::from_json(&json).map_err(|message| Error::Report {
        path: a.report.clone(),
        message,
    })?;
    let table = read_table(&a.input)?;
    check_names(&a.input, &table.names, &report.predictors)?;
    let predictions = predict_all(report.predictor().as_ref(), &table.predictors)?;
    let mut buf = Vec::new();
    csv_format::write_predictions(&mut buf, &predictions, table.schema).map_err(|e| Error::Data {
        path: a.input.clone(),
        source: e.into(),
    })?;
    match &a.out {
        Some(path) => write_file(path, &buf),
        None => emit(stdout, &buf),
    }
}

fn simulate(a: SimulateArgs, stdout: &mut dyn Write) -> Result<()> {
    let (default_configs, default_n): (&[ConfigId], &[usize]) = match a.table {
        1 => (&ConfigId::ALL, &[100, 200, 300, 400]),
        2 => (&[ConfigId::III], &[300]),
        _ => (&ConfigId::ALL, &[60, 100, 200, 300]),
    };
    let configs = if a.config.is_empty() { default_configs.to_vec() } else { a.config.clone() };
    let ns = if a.n.is_empty() { default_n.to_vec() } else { a.n.clone() };
    if a.table == 2 && (configs.len() != 1 || ns.len() != 1) {
        return Err(Error::Usage("table 2 takes one --config and one --n".into()));
    }
    let mut runs = Vec::new();
    for &c in &configs {
        for &n in &ns {
            let cfg = SimulationConfig::new(c, n, a.reps, a.seed).with_error_law(a.error_law);
            cfg.validate().map_err(Error::Usage)?;
            if a.table == 3 {
                simulation::validate_table3_n(n).map_err(Error::Usage)?;
            }
            runs.push(cfg);
        }
    }

    let (csv, text) = match a.table {
        1 => {
            let rows: Vec<Table1Row> = runs.iter().map(simulation::run_table1).collect();
            (simulation::table1_csv(&rows), simulation::table1_text(&rows))
        }
        2 => {
            let truth = simulation::fixed_model(runs[0].config, a.seed);
            let t = simulation::run_table2(&truth, &runs[0]);
            (simulation::table2_csv(&t), simulation::table2_text(&t))
        }
        _ => {
            let mut rows: Vec<Table3Row> = Vec::new();
            for cfg in &runs {
                rows.extend(simulation::run_table3(cfg).map_err(Error::Usage)?.rows);
            }
            (simulation::table3_csv(&rows), simulation::table3_text(&rows))
        }
    };
    if let Some(dir) = &a.out {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        write_file(&dir.join(format!("table{}.csv", a.table)), csv.as_bytes())?;
        write_file(&dir.join(format!("table{}.txt", a.table)), text.as_bytes())?;
    }
    emit(stdout, text.as_bytes())
}

fn compare(a: CompareArgs, stdout: &mut dyn Write) -> Result<()> {
    let (train, _) = read_dataset(&a.train)?;
    let eval = match &a.holdout {
        Some(path) => {
            let (h, _) = read_dataset(path)?;
            check_names(path, h.names(), train.names())?;
            h
        }
        None => train.clone(),
    };
    let mut kinds = vec![ModelKind::Cone, ModelKind::Ccrm];
    if train.p() == 1 {
        kinds.push(ModelKind::M);
    }
    let rows_x: Vec<Vec<conereg_core::Interval>> = eval.rows().map(|(x, _)| x.to_vec()).collect();
    let mut rows = Vec::new();
    for kind in kinds {
        let report = ModelReport::fit(&train, kind, Policy::Auto)?;
        let predictions = predict_all(report.predictor().as_ref(), &rows_x)?;
        let m = metrics(&predictions, eval.outcome())?;
        let label = match kind {
            ModelKind::Cone => "cone",
            ModelKind::Ccrm => "ccrm",
            ModelKind::M => "m",
        };
        rows.push((label, m));
    }
    match &a.out {
        Some(path) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| Error::Data {
                path: path.clone(),
                source: e.into(),
            };
            w.write_record(["method", "msec", "mser", "msei", "clamped"]).map_err(csv_err)?;
            for (label, m) in &rows {
                w.write_record([
                    label.to_string(),
                    csv_format::format_f64(m.msec),
                    csv_format::format_f64(m.mser),
                    csv_format::format_f64(m.msei),
                    m.clamped_predictions.to_string(),
                ])
                .map_err(csv_err)?;
            }
            let buf = w.into_inner().map_err(|e| Error::io(path, e.into_error()))?;
            write_file(path, &buf)
        }
        None => {
            let mut s = format!("{:<6}  {:>12}  {:>12}  {:>12}  {:>7}\n", "method", "MSEC", "MSER", "MSEI", "clamped");
            for (label, m) in &rows {
                s.push_str(&format!(
                    "{:<6}  {:>12.4}  {:>12.4}  {:>12.4}  {:>7}\n",
                    label, m.msec, m.mser, m.msei, m.clamped_predictions
                ));
            }
            emit(stdout, s.as_bytes())
        }
    }
}
