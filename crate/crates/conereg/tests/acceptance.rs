//! End-to-end acceptance checks. Runs as a plain binary (`harness = false`)
//! and prints one PASS/FAIL line per criterion.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use conereg::core::regression::range_rss;
use conereg::core::{
    fit_constrained, fit_unconstrained, metrics::interval_mse, ConeCoefficients, Interval, IntervalDataset,
};
use conereg::csv_format::{self, Schema};
use conereg::simulation::{
    fixed_model, generate_dataset, rep_rng, run_table1, run_table2, run_table3, ConfigId, ErrorLaw, Method,
    SimulationConfig,
};
use conereg::ModelReport;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("noiseless round trip", noiseless_round_trip),
        ("range-covariance equivalence", range_covariance_equivalence),
        ("table 1 error rates", table1_error_rates),
        ("table 2 protocol", table2_protocol),
        ("table 3 dominance", table3_dominance),
        ("range bias of the constrained fit", constrained_range_bias),
        ("constrained solver optimality", constrained_solver_optimality),
        ("negative range probability bound", negative_range_bound),
        ("CLI fixture round trip", cli_fixture_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {verdict} {name} ({:.2}s) {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            o.detail
        );
        if !o.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

// ---------------------------------------------------------------------------
// Independent helpers

fn random_truth(r: &mut ChaCha8Rng, p: usize, range_lo: f64) -> ConeCoefficients {
    let eta = r.random_range(-4.0..4.0);
    let alpha = (0..p).map(|_| r.random_range(-4.0..4.0)).collect();
    let beta = (0..p).map(|_| r.random_range(-4.0..4.0)).collect();
    let theta = r.random_range(range_lo..3.0);
    let gamma = (0..p).map(|_| r.random_range(range_lo..3.0)).collect();
    ConeCoefficients::new(eta, alpha, beta, theta, gamma).unwrap()
}

fn random_predictors(r: &mut ChaCha8Rng, n: usize, p: usize) -> Vec<Vec<Interval>> {
    (0..n)
        .map(|_| {
            (0..p)
                .map(|_| Interval::from_center_range(r.random_range(0.0..10.0), r.random_range(0.5..4.0)).unwrap())
                .collect()
        })
        .collect()
}

/// Lower and upper bounds of the model, written out term by term.
fn model_bounds(c: &ConeCoefficients, x: &[Interval]) -> (f64, f64) {
    let mut l = c.eta;
    let mut u = c.eta + c.theta;
    for j in 0..x.len() {
        l += c.alpha[j] * x[j].lower() + c.beta[j] * x[j].upper();
        u += (c.alpha[j] - c.gamma[j]) * x[j].lower() + (c.beta[j] + c.gamma[j]) * x[j].upper();
    }
    (l, u)
}

fn dataset(c: &ConeCoefficients, xs: &[Vec<Interval>], mut noise: impl FnMut() -> (f64, f64)) -> IntervalDataset {
    let ys = xs
        .iter()
        .map(|x| {
            let (l, u) = model_bounds(c, x);
            let (el, eu) = noise();
            let (a, b) = (l + el, u + eu);
            Interval::new(a.min(b), a.max(b)).unwrap()
        })
        .collect();
    IntervalDataset::unnamed(xs.to_vec(), ys).unwrap()
}

/// Rows of the stacked design in `(eta, alpha_1, beta_1, ..., theta, gamma_1, ...)` order.
fn stacked_rows(data: &IntervalDataset) -> (Vec<Vec<f64>>, Vec<f64>) {
    let p = data.p();
    let mut rows = Vec::new();
    let mut y = Vec::new();
    for (x, out) in data.rows() {
        let mut lo = vec![0.0; 3 * p + 2];
        let mut up = vec![0.0; 3 * p + 2];
        lo[0] = 1.0;
        up[0] = 1.0;
        up[2 * p + 1] = 1.0;
        for j in 0..p {
            lo[1 + 2 * j] = x[j].lower();
            lo[2 + 2 * j] = x[j].upper();
            up[1 + 2 * j] = x[j].lower();
            up[2 + 2 * j] = x[j].upper();
            up[2 * p + 2 + j] = x[j].upper() - x[j].lower();
        }
        rows.push(lo);
        y.push(out.lower());
        rows.push(up);
        y.push(out.upper());
    }
    (rows, y)
}

fn objective(rows: &[Vec<f64>], y: &[f64], b: &[f64]) -> f64 {
    rows.iter()
        .zip(y)
        .map(|(r, yi)| {
            let e = yi - r.iter().zip(b).map(|(a, c)| a * c).sum::<f64>();
            e * e
        })
        .sum()
}

fn gradient(rows: &[Vec<f64>], y: &[f64], b: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; b.len()];
    for (r, yi) in rows.iter().zip(y) {
        let e = r.iter().zip(b).map(|(a, c)| a * c).sum::<f64>() - yi;
        for (gk, rk) in g.iter_mut().zip(r) {
            *gk += 2.0 * e * rk;
        }
    }
    g
}

/// Gaussian elimination with partial pivoting.
fn gauss_solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for k in 0..n {
        let piv = (k..n).max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs())).unwrap();
        a.swap(k, piv);
        b.swap(k, piv);
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                a[i][j] -= f * a[k][j];
            }
            b[i] -= f * b[k];
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let s: f64 = (k + 1..n).map(|j| a[k][j] * x[j]).sum();
        x[k] = (b[k] - s) / a[k][k];
    }
    x
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

fn cov(a: &[f64], b: &[f64]) -> f64 {
    let (ma, mb) = (mean(a), mean(b));
    a.iter().zip(b).map(|(x, y)| (x - ma) * (y - mb)).sum::<f64>() / a.len() as f64
}

// ---------------------------------------------------------------------------
// Criteria

fn noiseless_round_trip() -> Outcome {
    let start = Instant::now();
    let mut r = ChaCha8Rng::seed_from_u64(101);
    let (mut worst_coef, mut worst_sigma) = (0.0f64, 0.0f64);
    for case in 0..100 {
        let p = 1 + case % 3;
        let n = r.random_range(20..=200);
        let truth = random_truth(&mut r, p, 0.0);
        let xs = random_predictors(&mut r, n, p);
        let data = dataset(&truth, &xs, || (0.0, 0.0));
        let fit = fit_unconstrained(&data).unwrap();
        for (a, b) in fit.coefficients().to_vec().iter().zip(truth.to_vec()) {
            worst_coef = worst_coef.max((a - b).abs());
        }
        worst_sigma = worst_sigma.max(fit.sigma2_hat());
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        worst_coef <= 1e-8 && worst_sigma <= 1e-12 && secs < 5.0,
        format!("max coefficient error {worst_coef:.2e}, max sigma2_hat {worst_sigma:.2e}, {secs:.3}s"),
    )
}

fn range_covariance_equivalence() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(202);
    let mut worst = 0.0f64;
    for case in 0..100 {
        let p = 1 + case % 3;
        let n = r.random_range(20..=200);
        let truth = random_truth(&mut r, p, -2.0);
        let xs = random_predictors(&mut r, n, p);
        let data = dataset(&truth, &xs, || (r.random_range(-2.0..2.0), r.random_range(-2.0..2.0)));
        let fit = fit_unconstrained(&data).unwrap();

        let yr: Vec<f64> = data.outcome().iter().map(|y| y.upper() - y.lower()).collect();
        let xr: Vec<Vec<f64>> = (0..p)
            .map(|j| data.rows().map(|(x, _)| x[j].upper() - x[j].lower()).collect())
            .collect();
        let s: Vec<Vec<f64>> = (0..p).map(|j| (0..p).map(|k| cov(&xr[j], &xr[k])).collect()).collect();
        let rhs: Vec<f64> = (0..p).map(|j| cov(&xr[j], &yr)).collect();
        let gamma = gauss_solve(s, rhs);
        let theta = mean(&yr) - (0..p).map(|j| gamma[j] * mean(&xr[j])).sum::<f64>();

        worst = worst.max((fit.theta() - theta).abs());
        for j in 0..p {
            worst = worst.max((fit.gamma()[j] - gamma[j]).abs());
        }
    }
    outcome(worst <= 1e-8, format!("max deviation {worst:.2e}"))
}

fn table1_error_rates() -> Outcome {
    let law = ErrorLaw::ZeroMean;
    let row = |c: ConfigId, n: usize| run_table1(&SimulationConfig::new(c, n, 500, 1).with_error_law(law));
    let main = row(ConfigId::I, 400);
    let at300 = row(ConfigId::I, 300);
    let beta_ok = (main.mre_beta - 0.3386).abs() <= 0.08;
    let sigma_ok = (main.mre_sigma2 - 0.0695).abs() <= 0.03;
    let constrained_ok = at300.constrained <= 5;
    let mut trend = Vec::new();
    let mut trend_ok = true;
    for c in ConfigId::ALL {
        let (a, b) = (row(c, 100).mre_beta, row(c, 400).mre_beta);
        trend_ok &= a > b;
        trend.push(format!("{} {a:.4}>{b:.4}", c.name()));
    }
    let literal = run_table1(&SimulationConfig::new(ConfigId::I, 400, 500, 1));
    outcome(
        beta_ok && sigma_ok && constrained_ok && trend_ok,
        format!(
            "MRE(beta) {:.4}, MRE(sigma2) {:.4}, constrained at n=300 {}, trend [{}]; literal error law MRE(beta) {:.4}",
            main.mre_beta,
            main.mre_sigma2,
            at300.constrained,
            trend.join(", "),
            literal.mre_beta
        ),
    )
}

fn table2_protocol() -> Outcome {
    let cfg = SimulationConfig::new(ConfigId::III, 300, 500, 1).with_error_law(ErrorLaw::ZeroMean);
    let truth = fixed_model(ConfigId::III, cfg.seed);
    let t = run_table2(&truth, &cfg);
    let mut worst_z = 0.0f64;
    let mut worst_ratio = 0.0f64;
    let mut ok = t.skipped == 0;
    for row in &t.rows {
        let z = (row.mean_estimate - row.true_value).abs() / row.mc_standard_error;
        worst_z = worst_z.max(z);
        ok &= z <= 3.0;
        let slope_type = row.parameter.starts_with("alpha") || row.parameter.starts_with("beta") || row.parameter.starts_with("gamma");
        if slope_type {
            let dev = (row.empirical_variance / row.estimated_variance - 1.0).abs();
            worst_ratio = worst_ratio.max(dev);
            ok &= dev <= 0.3;
        }
    }
    outcome(
        ok,
        format!("max |mean - truth| / MC s.e. {worst_z:.2}, max slope variance deviation {:.1}%", 100.0 * worst_ratio),
    )
}

fn table3_dominance() -> Outcome {
    let mut ok = true;
    let mut worst_margin = f64::INFINITY;
    let mut ratio = 0.0;
    for c in ConfigId::ALL {
        for n in [60, 100, 200, 300] {
            let cfg = SimulationConfig::new(c, n, 500, 1).with_error_law(ErrorLaw::ZeroMean);
            let t = run_table3(&cfg).unwrap();
            let ours = t.get(Method::Cone).unwrap();
            let ccrm = t.get(Method::Ccrm).unwrap();
            ok &= ours.msei < ccrm.msei;
            worst_margin = worst_margin.min(ccrm.msei - ours.msei);
            if c == ConfigId::III && n == 300 {
                ratio = ccrm.msec / ours.msec;
            }
        }
    }
    ok &= ratio >= 2.0;
    outcome(
        ok,
        format!("smallest MSEI(CCRM) - MSEI(ours) {worst_margin:.4}, Model III n=300 MSEC ratio {ratio:.2}"),
    )
}

fn constrained_range_bias() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(606);
    let mut ok = true;
    let mut worst_grid = 0.0f64;
    let mut worst_gap = f64::INFINITY;
    let mut zero_gamma = 0;
    for case in 0..50 {
        let n = r.random_range(20..=120);
        // Ranges fall as predictor ranges grow.
        let slope = r.random_range(0.2..2.0);
        let xs: Vec<Vec<Interval>> = (0..n)
            .map(|_| vec![Interval::from_center_range(r.random_range(0.0..10.0), r.random_range(0.5..4.0)).unwrap()])
            .collect();
        let ys: Vec<Interval> = xs
            .iter()
            .map(|x| {
                let range = (9.0 - slope * x[0].range() + r.random_range(-1.0..1.0)).max(0.0);
                let center = 1.5 * x[0].center() + r.random_range(-1.0..1.0);
                Interval::from_center_range(center, range).unwrap()
            })
            .collect();
        let data = IntervalDataset::unnamed(xs, ys).unwrap();
        let xr: Vec<f64> = data.rows().map(|(x, _)| x[0].range()).collect();
        let yr: Vec<f64> = data.outcome().iter().map(|y| y.range()).collect();
        if cov(&xr, &yr) >= 0.0 {
            return outcome(false, format!("case {case}: constructed data has S1 >= 0"));
        }
        let (xbar, ybar) = (mean(&xr), mean(&yr));
        let rss = |theta: f64, gamma: f64| -> f64 {
            xr.iter().zip(&yr).map(|(x, y)| (y - theta - gamma * x).powi(2)).sum()
        };
        let sst = rss(ybar, 0.0);

        let fit = fit_constrained(&data).unwrap();
        let gamma_tilde = fit.gamma()[0];
        let lhs = range_rss(&data, fit.theta(), fit.gamma()).unwrap();
        ok &= lhs >= sst - 1e-9;
        let equal = (lhs - sst).abs() <= 1e-9 * sst.max(1.0);
        ok &= equal == (gamma_tilde == 0.0);
        if gamma_tilde == 0.0 {
            zero_gamma += 1;
        }

        // Any other feasible slope does strictly worse than the constant model.
        for g in [1e-3, 0.01, 0.1, 0.5, 1.0] {
            let theta = (ybar - g * xbar).max(0.0);
            let gap = rss(theta, g) - sst;
            worst_gap = worst_gap.min(gap);
            ok &= gap > 0.0;
        }

        let mut best = (f64::INFINITY, 0.0);
        for k in 0..=30_000 {
            let g = k as f64 * 1e-4;
            let v = rss((ybar - g * xbar).max(0.0), g);
            if v < best.0 {
                best = (v, g);
            }
        }
        worst_grid = worst_grid.max((best.1 - gamma_tilde).abs());
        ok &= (best.1 - gamma_tilde).abs() <= 1e-3;
    }
    outcome(
        ok,
        format!(
            "gamma_tilde = 0 in {zero_gamma}/50, max grid deviation {worst_grid:.1e}, smallest RSS excess at positive gamma {worst_gap:.3e}"
        ),
    )
}

fn constrained_solver_optimality() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(707);
    let mut worst_kkt = 0.0f64;
    let mut beaten = 0;
    let mut with_active = 0;
    for case in 0..200 {
        let p = 1 + case % 3;
        let n = r.random_range(20..=80);
        let truth = random_truth(&mut r, p, -3.0);
        let xs = random_predictors(&mut r, n, p);
        let data = dataset(&truth, &xs, || (r.random_range(-3.0..3.0), r.random_range(-3.0..3.0)));
        let fit = fit_constrained(&data).unwrap();
        let b = fit.coefficients().to_vec();
        if fit.active_bounds().iter().any(|&a| a) {
            with_active += 1;
        }
        let bounded: Vec<bool> = (0..b.len()).map(|k| k > 2 * p).collect();
        let (rows, y) = stacked_rows(&data);
        let g = gradient(&rows, &y, &b);
        for k in 0..b.len() {
            let v = if bounded[k] && b[k] <= 0.0 { (-g[k]).max(-b[k]) } else { g[k].abs() };
            worst_kkt = worst_kkt.max(v);
        }
        let f = objective(&rows, &y, &b);
        for t in 0..1000 {
            let scale = [1e-4, 1e-2, 1.0][t % 3];
            let q: Vec<f64> = b
                .iter()
                .enumerate()
                .map(|(k, &v)| {
                    let w = v + scale * r.random_range(-1.0..1.0);
                    if bounded[k] {
                        w.max(0.0)
                    } else {
                        w
                    }
                })
                .collect();
            if objective(&rows, &y, &q) < f {
                beaten += 1;
            }
        }
    }
    outcome(
        worst_kkt <= 1e-6 && beaten == 0,
        format!("max KKT violation {worst_kkt:.2e}, perturbations with lower objective {beaten}, fits with an active bound {with_active}/200"),
    )
}

fn negative_range_bound() -> Outcome {
    let reps = 10_000u64;
    let (theta, gamma, sigma) = (0.5, 1.0, 1.0);
    let law = ErrorLaw::ZeroMean;
    let sigma2 = law.variance(sigma);
    let xr = [0.5, 0.7, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0];
    let mut fixed = ChaCha8Rng::seed_from_u64(808);
    let xs: Vec<Vec<Interval>> = xr
        .iter()
        .map(|&d| vec![Interval::from_center_range(fixed.random_range(0.0..10.0), d).unwrap()])
        .collect();
    let truth = ConeCoefficients::new(1.0, vec![0.8], vec![0.6], theta, vec![gamma]).unwrap();
    let mut negatives = vec![0u64; xr.len()];
    let mut inversions = 0;
    for rep in 0..reps {
        let mut rng = rep_rng(808, rep);
        let ys: Vec<Interval> = xs
            .iter()
            .map(|x| {
                let (l, u) = model_bounds(&truth, x);
                let (a, b) = (l + law.sample(&mut rng, sigma), u + law.sample(&mut rng, sigma));
                if a > b {
                    inversions += 1;
                }
                Interval::new(a.min(b), a.max(b)).unwrap()
            })
            .collect();
        let data = IntervalDataset::unnamed(xs.clone(), ys).unwrap();
        let fit = fit_unconstrained(&data).unwrap();
        for (i, &d) in xr.iter().enumerate() {
            if fit.theta() + fit.gamma()[0] * d < 0.0 {
                negatives[i] += 1;
            }
        }
    }
    let mut ok = inversions == 0;
    let mut informative = false;
    let mut worst_slack = f64::INFINITY;
    for (i, &d) in xr.iter().enumerate() {
        let bound = 2.0 * sigma2 / (theta + gamma * d).powi(2);
        informative |= bound > 0.01 && bound < 0.5;
        let freq = negatives[i] as f64 / reps as f64;
        let b = bound.min(1.0);
        let limit = bound + 3.0 * (b * (1.0 - b) / reps as f64).sqrt();
        worst_slack = worst_slack.min(limit - freq);
        ok &= freq <= limit;
    }
    let first_bound = 2.0 * sigma2 / (theta + gamma * xr[0]).powi(2);
    outcome(
        ok && informative,
        format!(
            "bound at smallest range {first_bound:.4}, frequencies {:?}, smallest slack {worst_slack:.4}",
            negatives.iter().map(|&k| k as f64 / reps as f64).collect::<Vec<_>>()
        ),
    )
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

fn cli(args: &[&std::ffi::OsStr]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_conereg"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    Ok(out.stdout)
}

fn cli_fixture_round_trip() -> Outcome {
    match fixture_checks() {
        Ok(detail) => outcome(true, detail),
        Err(detail) => outcome(false, detail),
    }
}

fn fixture_checks() -> Result<String, String> {
    let dir = fixtures();
    let read = |name: &str| std::fs::read(dir.join(name)).map_err(|e| format!("{name}: {e}"));
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;

    // The fixture is exactly what the generator produces for its seed.
    let cfg = SimulationConfig::new(ConfigId::I, 40, 1, 7).with_error_law(ErrorLaw::ZeroMean);
    let g = generate_dataset(&cfg, &mut rep_rng(cfg.seed, 0));
    let mut regenerated = Vec::new();
    csv_format::write_dataset(&mut regenerated, &g.data, Schema::LowerUpper).map_err(|e| e.to_string())?;
    if regenerated != read("synthetic.csv")? {
        return Err("synthetic.csv differs from the seeded generator".into());
    }

    let input = dir.join("synthetic.csv");
    let mut reports = Vec::new();
    let mut predictions = Vec::new();
    for k in 0..2 {
        let report = tmp.path().join(format!("report{k}.json"));
        let pred = tmp.path().join(format!("pred{k}.csv"));
        cli(&["fit".as_ref(), input.as_os_str(), "--out".as_ref(), report.as_os_str()])?;
        cli(&["predict".as_ref(), report.as_os_str(), input.as_os_str(), "--out".as_ref(), pred.as_os_str()])?;
        reports.push(std::fs::read(&report).map_err(|e| e.to_string())?);
        predictions.push(std::fs::read(&pred).map_err(|e| e.to_string())?);
    }
    if reports[0] != reports[1] || predictions[0] != predictions[1] {
        return Err("repeated runs are not byte-identical".into());
    }
    if reports[0] != read("synthetic_report.json")? {
        return Err("report differs from golden".into());
    }
    if predictions[0] != read("synthetic_predictions.csv")? {
        return Err("predictions differ from golden".into());
    }

    // Predictions reproduce the in-sample metrics of the report.
    let report = ModelReport::from_json(std::str::from_utf8(&reports[0]).unwrap())?;
    let pred_intervals: Vec<Interval> = parse_prediction_rows(&predictions[0])?;
    let m = interval_mse(&pred_intervals, g.data.outcome()).map_err(|e| e.to_string())?;
    let metric_err = (m.center - report.metrics.msec)
        .abs()
        .max((m.radius - report.metrics.mser).abs())
        .max((m.interval - report.metrics.msei).abs());
    if metric_err > 1e-9 {
        return Err(format!("prediction metrics deviate by {metric_err:.2e}"));
    }

    // Noiseless fixture: coefficients recovered to 8 decimals.
    let mut noiseless = SimulationConfig::new(ConfigId::III, 30, 1, 11);
    noiseless.noiseless = true;
    let g = generate_dataset(&noiseless, &mut rep_rng(noiseless.seed, 0));
    let path = dir.join("noiseless.csv");
    let json = cli(&["fit".as_ref(), path.as_os_str()])?;
    let report = ModelReport::from_json(std::str::from_utf8(&json).unwrap())?;
    let truth = g.truth.coefficients.to_vec();
    let mut worst = 0.0f64;
    for (c, t) in report.coefficients.iter().zip(&truth) {
        worst = worst.max((c.estimate - t).abs());
    }
    if report.coefficients.len() != truth.len() || worst >= 0.5e-8 {
        return Err(format!("noiseless coefficients deviate by {worst:.2e}"));
    }
    Ok(format!(
        "goldens match on two runs, metric deviation {metric_err:.1e}, noiseless coefficient deviation {worst:.1e}"
    ))
}

fn parse_prediction_rows(bytes: &[u8]) -> Result<Vec<Interval>, String> {
    let mut reader = csv::Reader::from_reader(bytes);
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let l: f64 = rec[0].parse().map_err(|e| format!("{e}"))?;
        let u: f64 = rec[1].parse().map_err(|e| format!("{e}"))?;
        out.push(Interval::new(l, u).map_err(|e| e.to_string())?);
    }
    Ok(out)
}
