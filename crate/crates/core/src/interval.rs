//! Closed bounded intervals, the δ-metric, and collinearity of interval
//! collections.
//!
//! An interval `[l, u]` is viewed both as a point `(l, u)` of the cone
//! `l <= u` and through its center `(l + u) / 2` and range `u - l`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Inversions of the bounds up to this size are treated as rounding noise.
pub const SNAP_TOLERANCE: f64 = 1e-12;

/// A closed interval `[lower, upper]` with `lower <= upper`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lower: f64,
    upper: f64,
}

impl Interval {
    /// Builds `[lower, upper]`.
    ///
    /// If `lower` exceeds `upper` by at most [`SNAP_TOLERANCE`] (scaled by the
    /// magnitude of the bounds) both bounds snap to their midpoint.
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !lower.is_finite() || !upper.is_finite() {
            return Err(Error::NonFinite);
        }
        if lower <= upper {
            return Ok(Interval { lower, upper });
        }
        let scale = 1.0 + libm::fmax(libm::fabs(lower), libm::fabs(upper));
        if lower - upper <= SNAP_TOLERANCE * scale {
            let mid = 0.5 * (lower + upper);
            Ok(Interval {
                lower: mid,
                upper: mid,
            })
        } else {
            Err(Error::InvalidInterval { lower, upper })
        }
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: f64) -> Result<Self> {
        Interval::new(x, x)
    }

    pub fn from_center_range(center: f64, range: f64) -> Result<Self> {
        if !center.is_finite() || !range.is_finite() {
            return Err(Error::NonFinite);
        }
        if range < 0.0 {
            return Err(Error::NegativeRange(range));
        }
        let half = 0.5 * range;
        Ok(Interval {
            lower: center - half,
            upper: center + half,
        })
    }

    #[inline]
    pub fn lower(&self) -> f64 {
        self.lower
    }

    #[inline]
    pub fn upper(&self) -> f64 {
        self.upper
    }

    #[inline]
    pub fn center(&self) -> f64 {
        0.5 * (self.upper + self.lower)
    }

    #[inline]
    pub fn range(&self) -> f64 {
        self.upper - self.lower
    }

    /// Half of the range.
    #[inline]
    pub fn radius(&self) -> f64 {
        0.5 * self.range()
    }

    pub fn is_degenerate(&self) -> bool {
        self.lower == self.upper
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }
}

/// L2-type distance between intervals: `sqrt(½ ΔL² + ½ ΔU²)`.
pub fn delta_metric(a: &Interval, b: &Interval) -> f64 {
    let dl = a.lower - b.lower;
    let du = a.upper - b.upper;
    libm::sqrt(0.5 * dl * dl + 0.5 * du * du)
}

/// `n` observations of `p` interval predictors and one interval outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalDataset {
    predictors: Vec<Vec<Interval>>,
    outcome: Vec<Interval>,
    names: Vec<String>,
}

impl IntervalDataset {
    /// `predictors[i]` holds the `p` predictor intervals of observation `i`.
    pub fn new(
        predictors: Vec<Vec<Interval>>,
        outcome: Vec<Interval>,
        names: Vec<String>,
    ) -> Result<Self> {
        if predictors.is_empty() || outcome.is_empty() {
            return Err(Error::EmptyDataset);
        }
        if predictors.len() != outcome.len() {
            return Err(Error::DimensionMismatch {
                op: "dataset rows",
                left: (predictors.len(), names.len()),
                right: (outcome.len(), 1),
            });
        }
        let p = names.len();
        if p == 0 {
            return Err(Error::EmptyDataset);
        }
        for (row, xs) in predictors.iter().enumerate() {
            if xs.len() != p {
                return Err(Error::RaggedRow {
                    row,
                    expected: p,
                    found: xs.len(),
                });
            }
        }
        Ok(IntervalDataset {
            predictors,
            outcome,
            names,
        })
    }

    /// Same as [`IntervalDataset::new`] with predictors named `x1, x2, ...`.
    pub fn unnamed(predictors: Vec<Vec<Interval>>, outcome: Vec<Interval>) -> Result<Self> {
        let p = predictors.first().map_or(0, Vec::len);
        let names = (1..=p).map(|j| format!("x{j}")).collect();
        IntervalDataset::new(predictors, outcome, names)
    }

    pub fn n(&self) -> usize {
        self.outcome.len()
    }

    pub fn p(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn outcome(&self) -> &[Interval] {
        &self.outcome
    }

    /// Predictor intervals of observation `i`.
    pub fn row(&self, i: usize) -> &[Interval] {
        &self.predictors[i]
    }

    pub fn rows(&self) -> impl Iterator<Item = (&[Interval], &Interval)> {
        self.predictors
            .iter()
            .map(Vec::as_slice)
            .zip(self.outcome.iter())
    }

    /// Predictor `j` of observation `i`.
    pub fn predictor(&self, i: usize, j: usize) -> Interval {
        self.predictors[i][j]
    }
}

/// Line fitted through the `(lower, upper)` representations of a collection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RayFit {
    /// All lower bounds coincide; the points lie on the vertical line `L = lower`.
    Vertical { lower: f64 },
    /// `U = slope * L + intercept`.
    Line { slope: f64, intercept: f64 },
}

impl RayFit {
    /// The equivalent center/range line `R = c * C + d`, undefined for slope -1.
    /// A vertical fit maps to `c = 2`.
    pub fn center_range(&self) -> Option<(f64, f64)> {
        match *self {
            // L = l0 gives R = 2C - 2 l0
            RayFit::Vertical { lower } => Some((2.0, -2.0 * lower)),
            RayFit::Line { slope, intercept } => lower_upper_to_center_range(slope, intercept),
        }
    }
}

/// `(a, b)` of `U = aL + b` to `(c, d)` of `R = cC + d`.
pub fn lower_upper_to_center_range(a: f64, b: f64) -> Option<(f64, f64)> {
    let denom = a + 1.0;
    if denom == 0.0 {
        return None;
    }
    Some((2.0 * (a - 1.0) / denom, 2.0 * b / denom))
}

/// `(c, d)` of `R = cC + d` to `(a, b)` of `U = aL + b`, undefined for c = 2.
pub fn center_range_to_lower_upper(c: f64, d: f64) -> Option<(f64, f64)> {
    let denom = 2.0 - c;
    if denom == 0.0 {
        return None;
    }
    Some(((2.0 + c) / denom, 2.0 * d / denom))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Collinearity {
    pub collinear: bool,
    pub fit: RayFit,
    /// Largest absolute residual of the fitted line.
    pub max_residual: f64,
}

impl Collinearity {
    pub fn is_vertical(&self) -> bool {
        matches!(self.fit, RayFit::Vertical { .. })
    }
}

/// Least-squares line `v = slope * t + intercept` and its largest residual,
/// or `None` if every `t` lies within `tolerance` of the first.
fn fit_line(pairs: impl Iterator<Item = (f64, f64)> + Clone, tolerance: f64) -> Option<(f64, f64, f64)> {
    let mut count = 0usize;
    let (mut st, mut sv) = (0.0, 0.0);
    for (t, v) in pairs.clone() {
        st += t;
        sv += v;
        count += 1;
    }
    let (mt, mv) = (st / count as f64, sv / count as f64);
    let (mut stt, mut stv, mut spread) = (0.0, 0.0, 0.0f64);
    for (t, v) in pairs.clone() {
        stt += (t - mt) * (t - mt);
        stv += (t - mt) * (v - mv);
        spread = libm::fmax(spread, libm::fabs(t - mt));
    }
    if spread <= tolerance || stt == 0.0 {
        return None;
    }
    let slope = stv / stt;
    let intercept = mv - slope * mt;
    let max_residual = pairs.fold(0.0f64, |m, (t, v)| {
        libm::fmax(m, libm::fabs(v - (slope * t + intercept)))
    });
    Some((slope, intercept, max_residual))
}

/// Decides whether the `(L, U)` points of `points` lie on one ray of the cone,
/// i.e. satisfy `U = aL + b` with every point on the cone side of the line.
///
/// Points sharing a common lower bound (within `tolerance`) are reported as
/// collinear with a vertical fit.
pub fn is_collinear(points: &[Interval], tolerance: f64) -> Result<Collinearity> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            found: points.len(),
        });
    }
    if !(tolerance > 0.0) {
        return Err(Error::InvalidTolerance(tolerance));
    }
    let pairs = points.iter().map(|x| (x.lower, x.upper));
    let Some((a, b, max_residual)) = fit_line(pairs, tolerance) else {
        let lower = points[0].lower;
        let max_residual = points
            .iter()
            .fold(0.0f64, |m, x| libm::fmax(m, libm::fabs(x.lower - lower)));
        return Ok(Collinearity {
            collinear: true,
            fit: RayFit::Vertical { lower },
            max_residual,
        });
    };
    // Cone side: the fitted upper bound may not fall below the lower bound.
    // For a > 1 this is L >= -b/(a-1), for a < 1 it is L <= -b/(a-1), and for
    // a = 1 it is b >= 0.
    let on_cone = points
        .iter()
        .all(|x| (a - 1.0) * x.lower + b >= -tolerance);
    Ok(Collinearity {
        collinear: max_residual <= tolerance && on_cone,
        fit: RayFit::Line {
            slope: a,
            intercept: b,
        },
        max_residual,
    })
}

/// Center/range counterpart of [`is_collinear`]: fits `R = cC + d`.
///
/// Returns `(collinear, Some((c, d)))`, or `(true, None)` when all centers
/// coincide (the `a = -1` family of the lower/upper form).
pub fn is_collinear_center_range(
    points: &[Interval],
    tolerance: f64,
) -> Result<(bool, Option<(f64, f64)>)> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            found: points.len(),
        });
    }
    if !(tolerance > 0.0) {
        return Err(Error::InvalidTolerance(tolerance));
    }
    let pairs = points.iter().map(|x| (x.center(), x.range()));
    match fit_line(pairs, tolerance) {
        None => Ok((true, None)),
        Some((c, d, max_residual)) => {
            let on_cone = points.iter().all(|x| c * x.center() + d >= -tolerance);
            Ok((max_residual <= tolerance && on_cone, Some((c, d))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(l: f64, u: f64) -> Interval {
        Interval::new(l, u).unwrap()
    }

    #[test]
    fn center_range_construction() {
        assert_eq!(Interval::from_center_range(1.0, 2.0).unwrap(), iv(0.0, 2.0));
        assert_eq!(Interval::from_center_range(5.0, 0.0).unwrap(), iv(5.0, 5.0));
        assert_eq!(Interval::from_center_range(0.0, 4.0).unwrap(), iv(-2.0, 2.0));
        assert_eq!(
            Interval::from_center_range(0.0, -1.0),
            Err(Error::NegativeRange(-1.0))
        );
    }

    #[test]
    fn snap_rule() {
        let x = Interval::new(1.0 + 5e-13, 1.0).unwrap();
        assert_eq!(x.lower(), x.upper());
        assert!(matches!(
            Interval::new(1.0 + 1e-9, 1.0),
            Err(Error::InvalidInterval { .. })
        ));
        assert_eq!(Interval::new(f64::NAN, 1.0), Err(Error::NonFinite));
    }

    #[test]
    fn delta_metric_values() {
        assert_eq!(delta_metric(&iv(1.0, 3.0), &iv(1.0, 3.0)), 0.0);
        assert!((delta_metric(&iv(0.0, 2.0), &iv(0.0, 0.0)) - 2f64.sqrt()).abs() < 1e-15);
        assert!((delta_metric(&iv(0.0, 0.0), &iv(2.0, 2.0)) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn collinear_line() {
        let pts = [iv(0.0, 1.0), iv(1.0, 3.0), iv(2.0, 5.0)];
        let c = is_collinear(&pts, 1e-9).unwrap();
        assert!(c.collinear);
        match c.fit {
            RayFit::Line { slope, intercept } => {
                assert!((slope - 2.0).abs() < 1e-12);
                assert!((intercept - 1.0).abs() < 1e-12);
            }
            _ => panic!("expected a line"),
        }
        let (cc, dd) = c.fit.center_range().unwrap();
        assert!((cc - 2.0 / 3.0).abs() < 1e-12);
        assert!((dd - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn collinear_vertical() {
        let c = is_collinear(&[iv(0.0, 1.0), iv(0.0, 2.0)], 1e-9).unwrap();
        assert!(c.collinear);
        assert!(c.is_vertical());
    }

    #[test]
    fn not_collinear() {
        let pts = [iv(0.0, 1.0), iv(1.0, 3.0), iv(2.0, 6.0)];
        assert!(!is_collinear(&pts, 1e-9).unwrap().collinear);
    }

    #[test]
    fn collinear_errors() {
        assert!(matches!(
            is_collinear(&[iv(0.0, 1.0)], 1e-9),
            Err(Error::TooFewPoints { .. })
        ));
        assert!(matches!(
            is_collinear(&[iv(0.0, 1.0), iv(1.0, 2.0)], 0.0),
            Err(Error::InvalidTolerance(_))
        ));
    }

    #[test]
    fn dataset_validation() {
        let rows = alloc::vec![alloc::vec![iv(0.0, 1.0)], alloc::vec![]];
        let y = alloc::vec![iv(0.0, 1.0), iv(0.0, 1.0)];
        assert!(matches!(
            IntervalDataset::unnamed(rows, y),
            Err(Error::RaggedRow { row: 1, .. })
        ));
    }

    fn interval() -> impl Strategy<Value = Interval> {
        (-1e3..1e3f64, 0.0..1e3f64).prop_map(|(c, r)| Interval::from_center_range(c, r).unwrap())
    }

    proptest! {
        #[test]
        fn delta_is_a_metric(a in interval(), b in interval(), c in interval()) {
            let ab = delta_metric(&a, &b);
            prop_assert!((ab - delta_metric(&b, &a)).abs() <= 1e-12);
            prop_assert!(ab >= 0.0);
            prop_assert!(delta_metric(&a, &c) <= ab + delta_metric(&b, &c) + 1e-12);
        }

        #[test]
        fn center_range_round_trip(l in -1e3..1e3f64, w in 0.0..1e3f64) {
            let x = iv(l, l + w);
            let y = Interval::from_center_range(x.center(), x.range()).unwrap();
            prop_assert!((x.lower() - y.lower()).abs() <= 1e-12);
            prop_assert!((x.upper() - y.upper()).abs() <= 1e-12);
            prop_assert!(x.range() >= 0.0);
        }

        // Points on U = aL + b inside the cone are collinear in both forms,
        // with (c, d) = (2(a-1)/(a+1), 2b/(a+1)).
        #[test]
        fn definitions_agree(a in -3.0..3.0f64, b in 0.1..5.0f64, ts in proptest::collection::vec(0.0..1.0f64, 3..8)) {
            prop_assume!((a + 1.0).abs() > 0.05 && (a - 1.0).abs() > 0.05);
            let x0 = -b / (a - 1.0);
            // walk away from the apex along the valid side of the ray
            let pts: Vec<Interval> = ts.iter().map(|t| {
                let l = if a > 1.0 { x0 + 4.0 * t } else { x0 - 4.0 * t };
                iv(l, a * l + b)
            }).collect();
            prop_assume!(pts.iter().any(|p| (p.lower() - pts[0].lower()).abs() > 1e-3));
            let lu = is_collinear(&pts, 1e-8).unwrap();
            prop_assert!(lu.collinear);
            let (c, d) = lower_upper_to_center_range(a, b).unwrap();
            let (cr_ok, cd) = is_collinear_center_range(&pts, 1e-8).unwrap();
            prop_assert!(cr_ok);
            let (cf, df) = cd.unwrap();
            prop_assert!((cf - c).abs() < 1e-6 && (df - d).abs() < 1e-6);
            let (a2, b2) = center_range_to_lower_upper(c, d).unwrap();
            prop_assert!((a2 - a).abs() < 1e-9 && (b2 - b).abs() < 1e-9);
        }
    }
}
