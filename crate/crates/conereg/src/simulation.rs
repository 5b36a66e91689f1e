//! Monte Carlo harness for the three simulation configurations.
//!
//! Each configuration draws a fresh parameter set per repetition:
//!
//! | config | p | eta, alpha_j, beta_j | theta, gamma_j | sigma      |
//! |--------|---|----------------------|----------------|------------|
//! | I      | 1 | Unif(0, 4)           | Unif(1, 3)     | Unif(2, 4) |
//! | II     | 1 | Unif(-4, 0)          | Unif(1, 3)     | Unif(2, 4) |
//! | III    | 3 | Unif(-4, 4)          | Unif(1, 3)     | Unif(2, 4) |
//!
//! Lower and upper errors are independent draws from [`ErrorLaw`], whose
//! variance `sigma⁴ / 12` is the `sigma2` that `sigma2_hat` estimates.
//! Repetition `k` of a configuration reads its own ChaCha8 stream under the
//! run seed, so results do not depend on scheduling or thread count.

use std::fmt::Write as _;

use conereg_core::metrics::interval_mse;
use conereg_core::regression::{assumption2_holds, coefficient_names, fit_constrained, fit_unconstrained, IntervalPredictor};
use conereg_core::{fit_ccrm, fit_m_model, ConeCoefficients, FittedModel, Interval, IntervalDataset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::csv_format::format_f64;

/// Caps the number of worker threads used for repetitions.
pub const THREADS_ENV: &str = "CONE_REG_THREADS";

const POSITIVE_RANGE: (f64, f64) = (1.0, 3.0);
const SIGMA_RANGE: (f64, f64) = (2.0, 4.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
pub enum ConfigId {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
    #[value(name = "III")]
    III,
}

impl ConfigId {
    pub const ALL: [ConfigId; 3] = [ConfigId::I, ConfigId::II, ConfigId::III];

    pub fn p(self) -> usize {
        match self {
            ConfigId::I | ConfigId::II => 1,
            ConfigId::III => 3,
        }
    }

    /// Support of `eta`, `alpha_j` and `beta_j`.
    pub fn free_range(self) -> (f64, f64) {
        match self {
            ConfigId::I => (0.0, 4.0),
            ConfigId::II => (-4.0, 0.0),
            ConfigId::III => (-4.0, 4.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConfigId::I => "I",
            ConfigId::II => "II",
            ConfigId::III => "III",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorLaw {
    /// `Unif(0, sigma²)`. Its mean `sigma² / 2` is absorbed by `eta`.
    #[default]
    Literal,
    /// `Unif(-sigma² / 2, sigma² / 2)`.
    ZeroMean,
}

impl ErrorLaw {
    pub fn sample<R: Rng + ?Sized>(self, rng: &mut R, sigma: f64) -> f64 {
        let s2 = sigma * sigma;
        match self {
            ErrorLaw::Literal => rng.random_range(0.0..=s2),
            ErrorLaw::ZeroMean => rng.random_range(-0.5 * s2..=0.5 * s2),
        }
    }

    /// Variance of one error draw: `sigma⁴ / 12` under both laws.
    pub fn variance(self, sigma: f64) -> f64 {
        let s2 = sigma * sigma;
        s2 * s2 / 12.0
    }

    /// Mean of one error draw.
    pub fn mean(self, sigma: f64) -> f64 {
        match self {
            ErrorLaw::Literal => 0.5 * sigma * sigma,
            ErrorLaw::ZeroMean => 0.0,
        }
    }
}

/// Predictor intervals: center and range drawn independently and uniformly,
/// per predictor and observation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PredictorLaw {
    pub center: (f64, f64),
    pub range: (f64, f64),
}

impl Default for PredictorLaw {
    fn default() -> Self {
        PredictorLaw {
            center: (0.0, 10.0),
            range: (0.5, 4.0),
        }
    }
}

impl PredictorLaw {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Interval {
        let c = rng.random_range(self.center.0..=self.center.1);
        let r = rng.random_range(self.range.0..=self.range.1);
        Interval::from_center_range(c, r).expect("law has nonnegative ranges")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationConfig {
    pub config: ConfigId,
    pub n: usize,
    pub reps: usize,
    pub seed: u64,
    pub error_law: ErrorLaw,
    pub predictor_law: PredictorLaw,
    /// Test hook: all errors are zero.
    pub noiseless: bool,
}

impl SimulationConfig {
    pub fn new(config: ConfigId, n: usize, reps: usize, seed: u64) -> Self {
        SimulationConfig {
            config,
            n,
            reps,
            seed,
            error_law: ErrorLaw::default(),
            predictor_law: PredictorLaw::default(),
            noiseless: false,
        }
    }

    pub fn with_error_law(mut self, law: ErrorLaw) -> Self {
        self.error_law = law;
        self
    }

    pub fn p(&self) -> usize {
        self.config.p()
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.n < 10 {
            return Err(format!("n must be at least 10, got {}", self.n));
        }
        if self.reps == 0 {
            return Err("reps must be at least 1".into());
        }
        let PredictorLaw { center, range } = self.predictor_law;
        let ok = |(a, b): (f64, f64)| a.is_finite() && b.is_finite() && a <= b;
        if !ok(center) || !ok(range) || range.0 < 0.0 {
            return Err("predictor law needs finite bounds low <= high and nonnegative ranges".into());
        }
        Ok(())
    }
}

/// Generating parameters of one repetition.
#[derive(Debug, Clone, PartialEq)]
pub struct TrueModel {
    pub coefficients: ConeCoefficients,
    pub sigma: f64,
}

impl TrueModel {
    pub fn draw<R: Rng + ?Sized>(config: ConfigId, rng: &mut R) -> TrueModel {
        let p = config.p();
        let (lo, hi) = config.free_range();
        let mut free = || rng.random_range(lo..=hi);
        let eta = free();
        let mut alpha = Vec::with_capacity(p);
        let mut beta = Vec::with_capacity(p);
        for _ in 0..p {
            alpha.push(free());
            beta.push(free());
        }
        let theta = rng.random_range(POSITIVE_RANGE.0..=POSITIVE_RANGE.1);
        let gamma = (0..p).map(|_| rng.random_range(POSITIVE_RANGE.0..=POSITIVE_RANGE.1)).collect();
        let sigma = rng.random_range(SIGMA_RANGE.0..=SIGMA_RANGE.1);
        TrueModel {
            coefficients: ConeCoefficients::new(eta, alpha, beta, theta, gamma).expect("lengths match"),
            sigma,
        }
    }

    pub fn p(&self) -> usize {
        self.coefficients.p()
    }
}

/// A simulated dataset with its generating parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedDataset {
    pub data: IntervalDataset,
    pub truth: TrueModel,
    /// Variance of each error term; zero in noiseless runs.
    pub sigma2: f64,
    /// Observations whose bounds crossed after adding noise and were swapped.
    pub inversions: usize,
}

/// Stream index of repetition `rep` of `config`; configurations never share
/// a stream.
pub fn stream_id(config: ConfigId, rep: u64) -> u64 {
    let tag = match config {
        ConfigId::I => 1u64,
        ConfigId::II => 2,
        ConfigId::III => 3,
    };
    (tag << 48) | rep
}

/// The random stream `rep` under `seed`.
pub fn rep_rng(seed: u64, rep: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(rep);
    rng
}

/// Draws `n` observations from `truth`. Returns the data and the number of
/// swapped bounds.
pub fn draw_observations<R: Rng + ?Sized>(
    truth: &TrueModel,
    n: usize,
    config: &SimulationConfig,
    rng: &mut R,
) -> (IntervalDataset, usize) {
    let p = truth.p();
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    let mut inversions = 0;
    for _ in 0..n {
        let x: Vec<Interval> = (0..p).map(|_| config.predictor_law.sample(rng)).collect();
        let (l, u) = truth.coefficients.lower_upper(&x).expect("arity matches");
        let (el, eu) = if config.noiseless {
            (0.0, 0.0)
        } else {
            (
                config.error_law.sample(rng, truth.sigma),
                config.error_law.sample(rng, truth.sigma),
            )
        };
        let (mut yl, mut yu) = (l + el, u + eu);
        if yl > yu {
            std::mem::swap(&mut yl, &mut yu);
            inversions += 1;
        }
        xs.push(x);
        ys.push(Interval::new(yl, yu).expect("ordered bounds"));
    }
    (IntervalDataset::unnamed(xs, ys).expect("n > 0 and p > 0"), inversions)
}

/// Draws a parameter set and `config.n` observations from it.
pub fn generate_dataset<R: Rng + ?Sized>(config: &SimulationConfig, rng: &mut R) -> GeneratedDataset {
    let truth = TrueModel::draw(config.config, rng);
    let (data, inversions) = draw_observations(&truth, config.n, config, rng);
    let sigma2 = if config.noiseless {
        0.0
    } else {
        config.error_law.variance(truth.sigma)
    };
    GeneratedDataset {
        data,
        truth,
        sigma2,
        inversions,
    }
}

/// Closed-form fit when every predictor range covaries positively with the
/// outcome range, bound-constrained fit otherwise.
pub fn fit_with_protocol(data: &IntervalDataset) -> conereg_core::Result<FittedModel> {
    if assumption2_holds(data) {
        fit_unconstrained(data)
    } else {
        fit_constrained(data)
    }
}

pub fn thread_count() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&k| k > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |k| k.get()))
}

/// Runs `f` for every repetition index and returns the results in index
/// order.
fn par_reps<T: Send>(reps: usize, f: impl Fn(u64) -> T + Sync + Send) -> Vec<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count())
        .build()
        .expect("thread pool");
    pool.install(|| (0..reps as u64).into_par_iter().map(f).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct RepetitionResult {
    pub true_params: Vec<f64>,
    pub estimate: Vec<f64>,
    pub sigma2_true: f64,
    pub sigma2_hat: f64,
    pub used_constrained: bool,
    pub inversions: usize,
}

impl RepetitionResult {
    /// `‖estimate − truth‖ / ‖truth‖`.
    pub fn relative_error(&self) -> f64 {
        let num: f64 = self
            .estimate
            .iter()
            .zip(&self.true_params)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        let den: f64 = self.true_params.iter().map(|b| b * b).sum();
        (num / den).sqrt()
    }

    /// `|sigma2_hat − sigma2| / sigma2`, or the absolute error when
    /// `sigma2 = 0`.
    pub fn sigma2_relative_error(&self) -> f64 {
        let d = (self.sigma2_hat - self.sigma2_true).abs();
        if self.sigma2_true > 0.0 {
            d / self.sigma2_true
        } else {
            d
        }
    }
}

/// One Table 1 repetition: draw, check the range covariances, fit.
pub fn run_repetition(config: &SimulationConfig, rep: u64) -> conereg_core::Result<RepetitionResult> {
    let mut rng = rep_rng(config.seed, stream_id(config.config, rep));
    let g = generate_dataset(config, &mut rng);
    let used_constrained = !assumption2_holds(&g.data);
    let fit = fit_with_protocol(&g.data)?;
    Ok(RepetitionResult {
        true_params: g.truth.coefficients.to_vec(),
        estimate: fit.coefficients().to_vec(),
        sigma2_true: g.sigma2,
        sigma2_hat: fit.sigma2_hat(),
        used_constrained,
        inversions: g.inversions,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table1Row {
    pub config: ConfigId,
    pub n: usize,
    pub reps: usize,
    pub mre_beta: f64,
    pub mre_sigma2: f64,
    pub unconstrained: usize,
    pub constrained: usize,
    /// Repetitions whose fit failed (singular design); excluded from the MREs.
    pub skipped: usize,
    pub inversions: usize,
}

pub fn run_table1(config: &SimulationConfig) -> Table1Row {
    let results = par_reps(config.reps, |rep| run_repetition(config, rep));
    let ok: Vec<&RepetitionResult> = results.iter().filter_map(|r| r.as_ref().ok()).collect();
    let k = ok.len() as f64;
    let mean = |f: &dyn Fn(&RepetitionResult) -> f64| {
        if ok.is_empty() {
            f64::NAN
        } else {
            ok.iter().map(|r| f(r)).sum::<f64>() / k
        }
    };
    let constrained = ok.iter().filter(|r| r.used_constrained).count();
    Table1Row {
        config: config.config,
        n: config.n,
        reps: config.reps,
        mre_beta: mean(&RepetitionResult::relative_error),
        mre_sigma2: mean(&RepetitionResult::sigma2_relative_error),
        unconstrained: ok.len() - constrained,
        constrained,
        skipped: results.len() - ok.len(),
        inversions: ok.iter().map(|r| r.inversions).sum(),
    }
}

/// A parameter set drawn once from `config`'s ranges, independent of every
/// repetition stream under the same seed.
pub fn fixed_model(config: ConfigId, seed: u64) -> TrueModel {
    TrueModel::draw(config, &mut rep_rng(seed, u64::MAX))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table2Row {
    pub parameter: String,
    pub true_value: f64,
    pub mean_estimate: f64,
    /// Mean over repetitions of the estimated variance `sigma2_hat (XᵀX)⁻¹`.
    pub estimated_variance: f64,
    /// Sample variance of the estimates across repetitions.
    pub empirical_variance: f64,
    /// Monte Carlo standard error of `mean_estimate`.
    pub mc_standard_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table2 {
    pub sigma: f64,
    pub rows: Vec<Table2Row>,
    pub constrained: usize,
    pub skipped: usize,
}

/// Repeated fits of one fixed model: `config.reps` datasets of size
/// `config.n`. `config.config` is ignored in favor of `truth`.
pub fn run_table2(truth: &TrueModel, config: &SimulationConfig) -> Table2 {
    let results = par_reps(config.reps, |rep| {
        let mut rng = rep_rng(config.seed, rep);
        let (data, _) = draw_observations(truth, config.n, config, &mut rng);
        let constrained = !assumption2_holds(&data);
        fit_with_protocol(&data).map(|f| (f.coefficients().to_vec(), f.covariance().diagonal(), constrained))
    });
    let ok: Vec<_> = results.iter().filter_map(|r| r.as_ref().ok()).collect();
    let k = ok.len();
    let names = coefficient_names(truth.p());
    let rows = truth
        .coefficients
        .to_vec()
        .into_iter()
        .enumerate()
        .map(|(i, true_value)| {
            let est: Vec<f64> = ok.iter().map(|r| r.0[i]).collect();
            let mean = est.iter().sum::<f64>() / k as f64;
            let empirical_variance = if k > 1 {
                est.iter().map(|e| (e - mean) * (e - mean)).sum::<f64>() / (k - 1) as f64
            } else {
                0.0
            };
            Table2Row {
                parameter: names[i].clone(),
                true_value,
                mean_estimate: mean,
                estimated_variance: ok.iter().map(|r| r.1[i]).sum::<f64>() / k as f64,
                empirical_variance,
                mc_standard_error: (empirical_variance / k as f64).sqrt(),
            }
        })
        .collect();
    Table2 {
        sigma: truth.sigma,
        rows,
        constrained: ok.iter().filter(|r| r.2).count(),
        skipped: results.len() - k,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    M,
    Ccrm,
    Cone,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::M => "M",
            Method::Ccrm => "CCRM",
            Method::Cone => "ours",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table3Row {
    pub config: ConfigId,
    pub n: usize,
    pub method: Method,
    pub msec: f64,
    pub mser: f64,
    pub msei: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table3 {
    pub rows: Vec<Table3Row>,
    pub skipped: usize,
}

impl Table3 {
    pub fn get(&self, method: Method) -> Option<&Table3Row> {
        self.rows.iter().find(|r| r.method == method)
    }
}

pub fn validate_table3_n(n: usize) -> Result<(), String> {
    if n >= 20 && n.is_multiple_of(4) {
        Ok(())
    } else {
        Err(format!("training size must be a multiple of 4 and at least 20, got {n}"))
    }
}

fn holdout_mse(model: &dyn IntervalPredictor, holdout: &IntervalDataset) -> conereg_core::Result<[f64; 3]> {
    let pred = holdout
        .rows()
        .map(|(x, _)| model.predict(x).map(|p| p.interval))
        .collect::<conereg_core::Result<Vec<_>>>()?;
    let m = interval_mse(&pred, holdout.outcome())?;
    Ok([m.center, m.radius, m.interval])
}

/// Holdout errors of every applicable method, averaged over repetitions. The
/// holdout has `n / 4` fresh observations from the repetition's model.
pub fn run_table3(config: &SimulationConfig) -> Result<Table3, String> {
    validate_table3_n(config.n)?;
    let methods: Vec<Method> = if config.p() == 1 {
        vec![Method::M, Method::Ccrm, Method::Cone]
    } else {
        vec![Method::Ccrm, Method::Cone]
    };
    let results = par_reps(config.reps, |rep| -> conereg_core::Result<Vec<[f64; 3]>> {
        let mut rng = rep_rng(config.seed, stream_id(config.config, rep));
        let g = generate_dataset(config, &mut rng);
        let (holdout, _) = draw_observations(&g.truth, config.n / 4, config, &mut rng);
        methods
            .iter()
            .map(|m| match m {
                Method::M => holdout_mse(&fit_m_model(&g.data)?, &holdout),
                Method::Ccrm => holdout_mse(&fit_ccrm(&g.data)?, &holdout),
                Method::Cone => holdout_mse(fit_with_protocol(&g.data)?.coefficients(), &holdout),
            })
            .collect()
    });
    let ok: Vec<&Vec<[f64; 3]>> = results.iter().filter_map(|r| r.as_ref().ok()).collect();
    let k = ok.len() as f64;
    let rows = methods
        .iter()
        .enumerate()
        .map(|(i, &method)| {
            let avg = |c: usize| ok.iter().map(|r| r[i][c]).sum::<f64>() / k;
            Table3Row {
                config: config.config,
                n: config.n,
                method,
                msec: avg(0),
                mser: avg(1),
                msei: avg(2),
            }
        })
        .collect();
    Ok(Table3 {
        rows,
        skipped: results.len() - ok.len(),
    })
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    let line = |s: &mut String, cells: &[&str]| {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        let _ = writeln!(s, "{}", parts.join("  ").trim_end());
    };
    line(&mut s, header);
    for r in rows {
        line(&mut s, &r.iter().map(String::as_str).collect::<Vec<_>>());
    }
    s
}

const TABLE1_HEADER: [&str; 8] = [
    "model",
    "n",
    "mre_beta",
    "mre_sigma2",
    "unconstrained",
    "constrained",
    "skipped",
    "inversions",
];

pub fn table1_csv(rows: &[Table1Row]) -> String {
    csv_string(
        &TABLE1_HEADER,
        rows.iter().map(|r| {
            vec![
                r.config.name().into(),
                r.n.to_string(),
                format_f64(r.mre_beta),
                format_f64(r.mre_sigma2),
                r.unconstrained.to_string(),
                r.constrained.to_string(),
                r.skipped.to_string(),
                r.inversions.to_string(),
            ]
        }),
    )
}

pub fn table1_text(rows: &[Table1Row]) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                format!("Model {}", r.config.name()),
                r.n.to_string(),
                format!("{:.4}", r.mre_beta),
                format!("{:.4}", r.mre_sigma2),
                r.unconstrained.to_string(),
                r.constrained.to_string(),
                r.skipped.to_string(),
                r.inversions.to_string(),
            ]
        })
        .collect();
    text_table(
        &["", "n", "MRE(beta)", "MRE(sigma2)", "Unconstrained", "Constrained", "Skipped", "Swapped"],
        &body,
    )
}

const TABLE2_HEADER: [&str; 6] = [
    "parameter",
    "true_value",
    "mean_estimate",
    "estimated_variance",
    "empirical_variance",
    "mc_standard_error",
];

pub fn table2_csv(t: &Table2) -> String {
    csv_string(
        &TABLE2_HEADER,
        t.rows.iter().map(|r| {
            vec![
                r.parameter.clone(),
                format_f64(r.true_value),
                format_f64(r.mean_estimate),
                format_f64(r.estimated_variance),
                format_f64(r.empirical_variance),
                format_f64(r.mc_standard_error),
            ]
        }),
    )
}

pub fn table2_text(t: &Table2) -> String {
    let body: Vec<Vec<String>> = t
        .rows
        .iter()
        .map(|r| {
            vec![
                r.parameter.clone(),
                format!("{:.4}", r.true_value),
                format!("{:.4}", r.mean_estimate),
                format!("{:.4}", r.estimated_variance),
                format!("{:.4}", r.empirical_variance),
            ]
        })
        .collect();
    let mut s = text_table(
        &["Parameter", "True Value", "Mean Estimate", "Estimated Variance", "Empirical Variance"],
        &body,
    );
    let _ = writeln!(s, "sigma = {:.4}, constrained fits: {}, skipped: {}", t.sigma, t.constrained, t.skipped);
    s
}

const TABLE3_HEADER: [&str; 6] = ["model", "n", "method", "msec", "mser", "msei"];

pub fn table3_csv(rows: &[Table3Row]) -> String {
    csv_string(
        &TABLE3_HEADER,
        rows.iter().map(|r| {
            vec![
                r.config.name().into(),
                r.n.to_string(),
                r.method.label().into(),
                format_f64(r.msec),
                format_f64(r.mser),
                format_f64(r.msei),
            ]
        }),
    )
}

/// Wide layout: one line per (config, n), three columns per method, `-` for
/// methods that do not apply.
pub fn table3_text(rows: &[Table3Row]) -> String {
    let methods = [Method::M, Method::Ccrm, Method::Cone];
    let mut keys: Vec<(ConfigId, usize)> = Vec::new();
    for r in rows {
        if !keys.contains(&(r.config, r.n)) {
            keys.push((r.config, r.n));
        }
    }
    let body: Vec<Vec<String>> = keys
        .iter()
        .map(|&(c, n)| {
            let mut line = vec![format!("Model {}", c.name()), n.to_string()];
            for m in methods {
                match rows.iter().find(|r| r.config == c && r.n == n && r.method == m) {
                    Some(r) => line.extend([r.msec, r.mser, r.msei].map(|v| format!("{v:.4}"))),
                    None => line.extend(["-", "-", "-"].map(String::from)),
                }
            }
            line
        })
        .collect();
    let header = [
        "", "n", "M:MSEC", "M:MSER", "M:MSEI", "CCRM:MSEC", "CCRM:MSER", "CCRM:MSEI", "ours:MSEC", "ours:MSER",
        "ours:MSEI",
    ];
    text_table(&header, &body)
}
