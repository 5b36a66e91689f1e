//! Fitted-model reports: a JSON document that can be reloaded for prediction,
//! and a plain-text listing for reading.

use std::fmt::Write as _;

use conereg_core::metrics::{interval_mse, IntervalMse};
use conereg_core::regression::{coefficient_names, positivity_diagnostics, FitPolicy, FitWarning, IntervalPredictor};
use conereg_core::{fit, fit_ccrm, fit_m_model, CcrmFit, ConeCoefficients, FittedModel, Interval, IntervalDataset, MModelFit};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-observation negative-range bounds above this are counted in the
/// report summary.
pub const BOUND_ALERT: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Cone,
    Ccrm,
    M,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Policy {
    Auto,
    Always,
    Never,
}

impl From<Policy> for FitPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::Auto => FitPolicy::Auto,
            Policy::Always => FitPolicy::Always,
            Policy::Never => FitPolicy::Never,
        }
    }
}

/// Native parameters of each model family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum Parameters {
    Cone {
        eta: f64,
        alpha: Vec<f64>,
        beta: Vec<f64>,
        theta: f64,
        gamma: Vec<f64>,
    },
    Ccrm {
        beta0_c: f64,
        beta1_c: Vec<f64>,
        beta0_r: f64,
        beta1_r: Vec<f64>,
        resid_var_c: f64,
        resid_var_r: f64,
    },
    M {
        slope_c: f64,
        intercept_c: f64,
        abs_slope_r: f64,
        spr_eps_mean: f64,
    },
}

impl Parameters {
    pub fn kind(&self) -> ModelKind {
        match self {
            Parameters::Cone { .. } => ModelKind::Cone,
            Parameters::Ccrm { .. } => ModelKind::Ccrm,
            Parameters::M { .. } => ModelKind::M,
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Parameters::Cone { alpha, .. } => alpha.len(),
            Parameters::Ccrm { beta1_c, .. } => beta1_c.len(),
            Parameters::M { .. } => 1,
        }
    }

    pub fn predictor(&self) -> std::result::Result<Box<dyn IntervalPredictor + Send + Sync>, String> {
        match self.clone() {
            Parameters::Cone {
                eta,
                alpha,
                beta,
                theta,
                gamma,
            } => ConeCoefficients::new(eta, alpha, beta, theta, gamma)
                .map(|c| Box::new(c) as Box<dyn IntervalPredictor + Send + Sync>)
                .map_err(|e| e.to_string()),
            Parameters::Ccrm {
                beta0_c,
                beta1_c,
                beta0_r,
                beta1_r,
                resid_var_c,
                resid_var_r,
            } => {
                if beta1_c.len() != beta1_r.len() {
                    return Err("beta1_c and beta1_r differ in length".into());
                }
                Ok(Box::new(CcrmFit {
                    beta0_c,
                    beta1_c,
                    beta0_r,
                    beta1_r,
                    resid_var_c,
                    resid_var_r,
                }))
            }
            Parameters::M {
                slope_c,
                intercept_c,
                abs_slope_r,
                spr_eps_mean,
            } => Ok(Box::new(MModelFit {
                slope_c,
                intercept_c,
                abs_slope_r,
                spr_eps_mean,
            })),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Coefficient {
    pub name: String,
    pub estimate: f64,
    /// Only the cone model carries standard errors.
    pub std_error: Option<f64>,
}

/// Summary of the per-observation bounds `2 sigma2_hat / (Y_i^R)²` on the
/// chance of a negative predicted range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundSummary {
    pub max: Option<f64>,
    pub mean: Option<f64>,
    pub above_alert: usize,
    pub alert_level: f64,
    /// Observations with a zero outcome range, where the bound is vacuous.
    pub zero_range: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub assumption1_ok: bool,
    pub assumption2_ok: bool,
    pub min_range_correlation_p_value: f64,
    /// Sample covariances `S_k` of each predictor range with the outcome range.
    pub range_cross_cov: Vec<f64>,
    pub gamma_from_ranges: Vec<f64>,
    pub theta_from_ranges: f64,
    pub constrained: bool,
    pub active_bounds: Vec<String>,
    pub negative_range_bound: BoundSummary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub msec: f64,
    pub mser: f64,
    pub msei: f64,
    pub clamped_predictions: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelReport {
    pub predictors: Vec<String>,
    pub n: usize,
    /// `unconstrained`, `constrained` or `center_range`.
    pub fit_path: String,
    pub policy: Option<Policy>,
    /// Cone-model coefficients `eta, alpha_j, beta_j, theta, gamma_j`; the
    /// baselines are translated into this form.
    pub coefficients: Vec<Coefficient>,
    pub sigma2_hat: Option<f64>,
    pub parameters: Parameters,
    pub diagnostics: Option<Diagnostics>,
    pub metrics: Metrics,
    pub warnings: Vec<String>,
}

/// Clamped predictions of `model` for every row of `data`.
pub fn predict_all(model: &dyn IntervalPredictor, rows: &[Vec<Interval>]) -> conereg_core::Result<Vec<conereg_core::Prediction>> {
    rows.iter().map(|x| model.predict(x)).collect()
}

pub fn metrics(predictions: &[conereg_core::Prediction], actual: &[Interval]) -> conereg_core::Result<Metrics> {
    let pred: Vec<Interval> = predictions.iter().map(|p| p.interval).collect();
    let IntervalMse { center, radius, interval } = interval_mse(&pred, actual)?;
    Ok(Metrics {
        msec: center,
        mser: radius,
        msei: interval,
        clamped_predictions: predictions.iter().filter(|p| p.clamped).count(),
    })
}

fn rows_of(data: &IntervalDataset) -> Vec<Vec<Interval>> {
    data.rows().map(|(x, _)| x.to_vec()).collect()
}

fn cone_coefficients(c: &ConeCoefficients, se: Option<&[f64]>) -> Vec<Coefficient> {
    coefficient_names(c.p())
        .into_iter()
        .zip(c.to_vec())
        .enumerate()
        .map(|(i, (name, estimate))| Coefficient {
            name,
            estimate,
            std_error: se.map(|s| s[i]),
        })
        .collect()
}

fn describe_warning(w: &FitWarning, names: &[String], diag: Option<&Diagnostics>) -> String {
    match w {
        FitWarning::IllConditioned { condition_estimate } => {
            format!("design is ill-conditioned (condition estimate {condition_estimate:e})")
        }
        FitWarning::NegativeRangeCoefficients {
            theta_negative,
            negative_gamma,
        } => {
            let mut parts = Vec::new();
            if *theta_negative {
                parts.push("theta".to_string());
            }
            parts.extend(negative_gamma.iter().map(|j| format!("gamma_{}", j + 1)));
            let mut msg = format!("negative range coefficient estimate: {}", parts.join(", "));
            if let Some(d) = diag {
                let bad: Vec<String> = d
                    .range_cross_cov
                    .iter()
                    .zip(names)
                    .filter(|(s, _)| **s <= 0.0)
                    .map(|(s, n)| format!("S({n}) = {s}"))
                    .collect();
                if bad.is_empty() {
                    msg.push_str("; positivity diagnostics: every predictor range covaries positively with the outcome range");
                } else {
                    let _ = write!(
                        msg,
                        "; positivity diagnostics: range covariance not positive, {}",
                        bad.join(", ")
                    );
                }
                if !d.assumption1_ok {
                    msg.push_str("; predictor ranges are correlated");
                }
            }
            msg
        }
        FitWarning::ConstrainedVariance => {
            "sigma2_hat and standard errors of the constrained fit use the unconstrained formulas".into()
        }
    }
}

fn bound_summary(bounds: &[f64]) -> BoundSummary {
    let finite: Vec<f64> = bounds.iter().copied().filter(|b| b.is_finite()).collect();
    BoundSummary {
        max: finite.iter().copied().reduce(f64::max),
        mean: (!finite.is_empty()).then(|| finite.iter().sum::<f64>() / finite.len() as f64),
        above_alert: finite.iter().filter(|&&b| b > BOUND_ALERT).count(),
        alert_level: BOUND_ALERT,
        zero_range: bounds.len() - finite.len(),
    }
}

fn cone_diagnostics(data: &IntervalDataset, model: &FittedModel) -> Option<Diagnostics> {
    // a singular range covariance leaves the diagnostics undefined, not the fit
    let d = positivity_diagnostics(data, model).ok()?;
    let names = coefficient_names(model.p());
    Some(Diagnostics {
        assumption1_ok: d.assumption1_ok,
        assumption2_ok: d.assumption2_ok,
        min_range_correlation_p_value: d.min_range_correlation_p_value,
        range_cross_cov: d.range_cross_cov,
        gamma_from_ranges: d.gamma_from_ranges,
        theta_from_ranges: d.theta_from_ranges,
        constrained: model.constrained(),
        active_bounds: model
            .active_bounds()
            .iter()
            .zip(names)
            .filter(|(a, _)| **a)
            .map(|(_, n)| n)
            .collect(),
        negative_range_bound: bound_summary(&d.negative_range_bound),
    })
}

impl ModelReport {
    pub fn fit(data: &IntervalDataset, kind: ModelKind, policy: Policy) -> Result<ModelReport> {
        let names = data.names().to_vec();
        let rows = rows_of(data);
        match kind {
            ModelKind::Cone => {
                let model = fit(data, policy.into()).map_err(|e| Error::cone_fit(e, &names))?;
                let diagnostics = cone_diagnostics(data, &model);
                let warnings = model
                    .warnings()
                    .iter()
                    .map(|w| describe_warning(w, &names, diagnostics.as_ref()))
                    .collect();
                let c = model.coefficients();
                let predictions = predict_all(c, &rows)?;
                Ok(ModelReport {
                    predictors: names,
                    n: data.n(),
                    fit_path: if model.constrained() { "constrained" } else { "unconstrained" }.into(),
                    policy: Some(policy),
                    coefficients: cone_coefficients(c, Some(&model.standard_errors())),
                    sigma2_hat: Some(model.sigma2_hat()),
                    parameters: Parameters::Cone {
                        eta: c.eta,
                        alpha: c.alpha.clone(),
                        beta: c.beta.clone(),
                        theta: c.theta,
                        gamma: c.gamma.clone(),
                    },
                    diagnostics,
                    metrics: metrics(&predictions, data.outcome())?,
                    warnings,
                })
            }
            ModelKind::Ccrm => {
                let f = fit_ccrm(data).map_err(|e| Error::baseline_fit(e, &names))?;
                let predictions = predict_all(&f, &rows)?;
                Ok(ModelReport {
                    predictors: names,
                    n: data.n(),
                    fit_path: "center_range".into(),
                    policy: None,
                    coefficients: cone_coefficients(&f.to_cone(), None),
                    sigma2_hat: None,
                    metrics: metrics(&predictions, data.outcome())?,
                    parameters: Parameters::Ccrm {
                        beta0_c: f.beta0_c,
                        beta1_c: f.beta1_c,
                        beta0_r: f.beta0_r,
                        beta1_r: f.beta1_r,
                        resid_var_c: f.resid_var_c,
                        resid_var_r: f.resid_var_r,
                    },
                    diagnostics: None,
                    warnings: Vec::new(),
                })
            }
            ModelKind::M => {
                if data.p() != 1 {
                    return Err(Error::Usage(format!(
                        "the M model takes exactly one predictor, the data has {}",
                        data.p()
                    )));
                }
                let f = fit_m_model(data).map_err(|e| Error::baseline_fit(e, &names))?;
                let predictions = predict_all(&f, &rows)?;
                Ok(ModelReport {
                    predictors: names,
                    n: data.n(),
                    fit_path: "center_range".into(),
                    policy: None,
                    coefficients: cone_coefficients(&f.to_cone(), None),
                    sigma2_hat: None,
                    metrics: metrics(&predictions, data.outcome())?,
                    parameters: Parameters::M {
                        slope_c: f.slope_c,
                        intercept_c: f.intercept_c,
                        abs_slope_r: f.abs_slope_r,
                        spr_eps_mean: f.spr_eps_mean,
                    },
                    diagnostics: None,
                    warnings: Vec::new(),
                })
            }
        }
    }

    pub fn kind(&self) -> ModelKind {
        self.parameters.kind()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Parses and checks a report produced by [`ModelReport::to_json`].
    pub fn from_json(s: &str) -> std::result::Result<ModelReport, String> {
        let r: ModelReport = serde_json::from_str(s).map_err(|e| e.to_string())?;
        if r.parameters.arity() != r.predictors.len() {
            return Err(format!(
                "{} predictor names for a model with {} predictors",
                r.predictors.len(),
                r.parameters.arity()
            ));
        }
        r.parameters.predictor()?;
        Ok(r)
    }

    pub fn predictor(&self) -> Box<dyn IntervalPredictor + Send + Sync> {
        self.parameters.predictor().expect("validated on construction")
    }

    /// Plain-text listing. Numbers use the shortest decimal form that reads
    /// back to the same `f64`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let model = match self.kind() {
            ModelKind::Cone => "cone model",
            ModelKind::Ccrm => "CCRM",
            ModelKind::M => "M model",
        };
        let _ = writeln!(
            s,
            "{model}: {} predictor(s) [{}], n = {}, fit: {}",
            self.predictors.len(),
            self.predictors.join(", "),
            self.n,
            self.fit_path
        );
        if self.kind() != ModelKind::Cone {
            s.push_str("coefficients in lower/upper form (alpha_j = beta_j + gamma_j)\n");
        }
        let width = self.coefficients.iter().map(|c| c.name.len()).max().unwrap_or(0).max(10);
        let _ = writeln!(s, "{:<width$}  {:>24}  {:>24}", "parameter", "estimate", "std_error");
        for c in &self.coefficients {
            let se = c.std_error.map_or_else(|| "-".to_string(), |v| v.to_string());
            let _ = writeln!(s, "{:<width$}  {:>24}  {:>24}", c.name, c.estimate, se);
        }
        if let Some(v) = self.sigma2_hat {
            let _ = writeln!(s, "{:<width$}  {:>24}", "sigma2_hat", v);
        }
        match &self.parameters {
            Parameters::Ccrm {
                beta0_c,
                beta1_c,
                beta0_r,
                beta1_r,
                resid_var_c,
                resid_var_r,
            } => {
                let _ = writeln!(s, "center: intercept {beta0_c}, slopes {beta1_c:?}, residual variance {resid_var_c}");
                let _ = writeln!(s, "range:  intercept {beta0_r}, slopes {beta1_r:?}, residual variance {resid_var_r}");
            }
            Parameters::M {
                slope_c,
                intercept_c,
                abs_slope_r,
                spr_eps_mean,
            } => {
                let _ = writeln!(s, "mid:    slope {slope_c}, intercept {intercept_c}");
                let _ = writeln!(s, "spread: |beta| {abs_slope_r}, mean spread error {spr_eps_mean}");
            }
            Parameters::Cone { .. } => {}
        }
        if let Some(d) = &self.diagnostics {
            let ok = |b: bool| if b { "holds" } else { "violated" };
            s.push_str("diagnostics:\n");
            let _ = writeln!(
                s,
                "  predictor ranges uncorrelated: {} (min p-value {})",
                ok(d.assumption1_ok),
                d.min_range_correlation_p_value
            );
            let _ = writeln!(
                s,
                "  range covariances positive: {} (S = {:?})",
                ok(d.assumption2_ok),
                d.range_cross_cov
            );
            let _ = writeln!(
                s,
                "  range system: theta = {}, gamma = {:?}",
                d.theta_from_ranges, d.gamma_from_ranges
            );
            let _ = writeln!(s, "  constrained: {}, active bounds: [{}]", d.constrained, d.active_bounds.join(", "));
            let b = &d.negative_range_bound;
            let opt = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
            let _ = writeln!(
                s,
                "  negative-range bound: max {}, mean {}, {} above {}, {} zero-range outcome(s)",
                opt(b.max),
                opt(b.mean),
                b.above_alert,
                b.alert_level,
                b.zero_range
            );
        }
        let m = &self.metrics;
        let _ = writeln!(
            s,
            "in-sample: MSEC {}, MSER {}, MSEI {}, clamped {}",
            m.msec, m.mser, m.msei, m.clamped_predictions
        );
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dataset(truth: &ConeCoefficients, n: usize) -> IntervalDataset {
        let xs: Vec<Vec<Interval>> = (0..n)
            .map(|i| {
                let t = i as f64;
                vec![
                    Interval::from_center_range((t * 0.37).sin() * 5.0, 1.0 + (t * 0.91).cos().abs() * 2.0).unwrap(),
                    Interval::from_center_range((t * 1.3).cos() * 3.0, 0.5 + (t * 0.23).sin().abs()).unwrap(),
                ]
            })
            .collect();
        let y = xs
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let (l, u) = truth.lower_upper(x).unwrap();
                let e = ((i * 7919) % 13) as f64 / 13.0 - 0.5;
                Interval::new(l + e, u + e * 0.5 + 0.3).unwrap()
            })
            .collect();
        IntervalDataset::new(xs, y, vec!["a".into(), "b".into()]).unwrap()
    }

    fn truth() -> ConeCoefficients {
        ConeCoefficients::new(1.0, vec![0.5, -1.0], vec![1.5, 0.25], 2.0, vec![1.0, 0.5]).unwrap()
    }

    #[test]
    fn json_round_trip_is_lossless() {
        let data = dataset(&truth(), 40);
        for kind in [ModelKind::Cone, ModelKind::Ccrm] {
            let r = ModelReport::fit(&data, kind, Policy::Auto).unwrap();
            let back = ModelReport::from_json(&r.to_json()).unwrap();
            assert_eq!(back, r);
        }
    }

    #[test]
    fn text_listing_reads_back() {
        let data = dataset(&truth(), 40);
        let r = ModelReport::fit(&data, ModelKind::Cone, Policy::Auto).unwrap();
        let text = r.to_text();
        for c in &r.coefficients {
            let line = text.lines().find(|l| l.split_whitespace().next() == Some(c.name.as_str())).unwrap();
            let fields: Vec<&str> = line.split_whitespace().collect();
            assert_eq!(fields[1].parse::<f64>().unwrap(), c.estimate);
            assert_eq!(fields[2].parse::<f64>().unwrap(), c.std_error.unwrap());
        }
        assert!(text.contains("sigma2_hat"));
        assert!(text.contains("diagnostics:"));
    }

    #[test]
    fn reloaded_predictor_matches() {
        let data = dataset(&truth(), 30);
        for kind in [ModelKind::Cone, ModelKind::Ccrm] {
            let r = ModelReport::fit(&data, kind, Policy::Auto).unwrap();
            let back = ModelReport::from_json(&r.to_json()).unwrap();
            let rows = rows_of(&data);
            let a = predict_all(r.predictor().as_ref(), &rows).unwrap();
            let b = predict_all(back.predictor().as_ref(), &rows).unwrap();
            assert_eq!(a, b);
            assert_eq!(metrics(&b, data.outcome()).unwrap(), r.metrics);
        }
    }

    #[test]
    fn m_model_needs_one_predictor() {
        let data = dataset(&truth(), 30);
        assert!(matches!(
            ModelReport::fit(&data, ModelKind::M, Policy::Auto),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn ccrm_coefficients_obey_restriction() {
        let data = dataset(&truth(), 30);
        let r = ModelReport::fit(&data, ModelKind::Ccrm, Policy::Auto).unwrap();
        let get = |n: &str| r.coefficients.iter().find(|c| c.name == n).unwrap().estimate;
        for j in 1..=2 {
            let (a, b, g) = (get(&format!("alpha_{j}")), get(&format!("beta_{j}")), get(&format!("gamma_{j}")));
            assert!((a - (b + g)).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_inconsistent_reports() {
        let data = dataset(&truth(), 30);
        let r = ModelReport::fit(&data, ModelKind::Cone, Policy::Auto).unwrap();
        let mut bad = r.clone();
        bad.predictors.pop();
        assert!(ModelReport::from_json(&bad.to_json()).is_err());
        let mut bad = r;
        if let Parameters::Cone { gamma, .. } = &mut bad.parameters {
            gamma.push(1.0);
        }
        assert!(ModelReport::from_json(&bad.to_json()).is_err());
        assert!(ModelReport::from_json("{}").is_err());
    }

    #[test]
    fn bound_summary_counts() {
        let b = bound_summary(&[0.01, 0.2, f64::INFINITY, 0.06]);
        assert_eq!(b.max, Some(0.2));
        assert_eq!(b.above_alert, 2);
        assert_eq!(b.zero_range, 1);
        assert!((b.mean.unwrap() - 0.27 / 3.0).abs() < 1e-15);
        let b = bound_summary(&[f64::INFINITY]);
        assert_eq!((b.max, b.mean), (None, None));
    }
}
