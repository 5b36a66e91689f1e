//! Interval data as CSV.
//!
//! Every variable occupies two columns, either `<var>_lower,<var>_upper` or
//! `<var>_center,<var>_range`; one file uses one convention throughout. The
//! outcome variable is `y`. Predictors keep the order of their first column.

use std::io::{Read, Write};

use conereg_core::{Interval, IntervalDataset};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const OUTCOME: &str = "y";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Schema {
    LowerUpper,
    CenterRange,
}

impl Schema {
    pub fn suffixes(self) -> [&'static str; 2] {
        match self {
            Schema::LowerUpper => ["lower", "upper"],
            Schema::CenterRange => ["center", "range"],
        }
    }

    fn of_suffix(suffix: &str) -> Option<(Schema, usize)> {
        match suffix {
            "lower" => Some((Schema::LowerUpper, 0)),
            "upper" => Some((Schema::LowerUpper, 1)),
            "center" => Some((Schema::CenterRange, 0)),
            "range" => Some((Schema::CenterRange, 1)),
            _ => None,
        }
    }

    fn interval(self, a: f64, b: f64) -> Result<Interval, conereg_core::Error> {
        match self {
            Schema::LowerUpper => Interval::new(a, b),
            // a slightly negative range is subject to the same snap rule
            Schema::CenterRange => Interval::new(a - 0.5 * b, a + 0.5 * b),
        }
    }

    fn parts(self, x: &Interval) -> [f64; 2] {
        match self {
            Schema::LowerUpper => [x.lower(), x.upper()],
            Schema::CenterRange => [x.center(), x.range()],
        }
    }

    pub fn columns(self, var: &str) -> [String; 2] {
        self.suffixes().map(|s| format!("{var}_{s}"))
    }
}

/// Where and why a file failed to parse. Lines are 1-based and count the
/// header.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("header: {0}")]
    Header(String),
    #[error("line {line}, column `{column}`: {message}")]
    Cell {
        line: u64,
        column: String,
        message: String,
    },
    #[error("line {line}: expected {expected} fields, found {found}")]
    FieldCount { line: u64, expected: usize, found: usize },
    #[error("no data rows")]
    Empty,
    #[error("outcome columns `y_*` are required")]
    MissingOutcome,
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Parsed header: predictor names, the schema, and for every CSV column the
/// variable slot (`None` is the outcome) and which half of the pair it holds.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    pub schema: Schema,
    pub predictors: Vec<String>,
    pub has_outcome: bool,
    slots: Vec<(Option<usize>, usize)>,
}

impl Layout {
    pub fn parse(header: &[&str]) -> Result<Layout, DataError> {
        let mut schema: Option<(Schema, &str)> = None;
        let mut predictors: Vec<String> = Vec::new();
        let mut seen: Vec<(Option<usize>, usize)> = Vec::new();
        let mut slots = Vec::with_capacity(header.len());
        for &column in header {
            let (var, suffix) = column
                .rsplit_once('_')
                .filter(|(v, _)| !v.is_empty())
                .ok_or_else(|| DataError::Header(format!("column `{column}` is not named <var>_<part>")))?;
            let (s, half) = Schema::of_suffix(suffix).ok_or_else(|| {
                DataError::Header(format!(
                    "column `{column}`: suffix must be lower, upper, center or range"
                ))
            })?;
            match schema {
                None => schema = Some((s, column)),
                Some((first, first_col)) if first != s => {
                    return Err(DataError::Header(format!(
                        "mixed schemas: `{first_col}` and `{column}`; use lower/upper or center/range throughout"
                    )))
                }
                _ => {}
            }
            let slot = if var == OUTCOME {
                None
            } else {
                Some(match predictors.iter().position(|p| p == var) {
                    Some(j) => j,
                    None => {
                        predictors.push(var.to_string());
                        predictors.len() - 1
                    }
                })
            };
            if seen.contains(&(slot, half)) {
                return Err(DataError::Header(format!("duplicate column `{column}`")));
            }
            seen.push((slot, half));
            slots.push((slot, half));
        }
        let Some((schema, _)) = schema else {
            return Err(DataError::Header("empty header".into()));
        };
        let has_outcome = seen.iter().any(|(s, _)| s.is_none());
        let vars = predictors
            .iter()
            .enumerate()
            .map(|(j, name)| (Some(j), name.as_str()))
            .chain(has_outcome.then_some((None, OUTCOME)));
        for (slot, name) in vars {
            for half in 0..2 {
                if !seen.contains(&(slot, half)) {
                    return Err(DataError::Header(format!(
                        "missing column `{}`",
                        schema.columns(name)[half]
                    )));
                }
            }
        }
        if predictors.is_empty() {
            return Err(DataError::Header("no predictor columns".into()));
        }
        Ok(Layout {
            schema,
            predictors,
            has_outcome,
            slots,
        })
    }
}

/// Rows of a parsed file. `outcome` is present when the header has `y_*`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalTable {
    pub schema: Schema,
    pub names: Vec<String>,
    pub predictors: Vec<Vec<Interval>>,
    pub outcome: Option<Vec<Interval>>,
}

impl IntervalTable {
    pub fn into_dataset(self) -> Result<IntervalDataset, DataError> {
        let outcome = self.outcome.ok_or(DataError::MissingOutcome)?;
        IntervalDataset::new(self.predictors, outcome, self.names).map_err(|e| DataError::Header(e.to_string()))
    }
}

fn parse_number(raw: &str) -> Result<f64, String> {
    if raw.is_empty() {
        return Err("missing value".into());
    }
    let v: f64 = raw.parse().map_err(|_| format!("`{raw}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{raw}` is not finite"))
    }
}

pub fn read_table<R: Read>(reader: R) -> Result<IntervalTable, DataError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(reader);
    let header: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    let refs: Vec<&str> = header.iter().map(String::as_str).collect();
    let layout = Layout::parse(&refs)?;
    let p = layout.predictors.len();

    let mut predictors = Vec::new();
    let mut outcome = Vec::new();
    for record in rdr.records() {
        let record = record?;
        let line = record.position().map_or(0, |pos| pos.line());
        if record.len() != header.len() {
            return Err(DataError::FieldCount {
                line,
                expected: header.len(),
                found: record.len(),
            });
        }
        let mut xs = vec![[0.0f64; 2]; p];
        let mut y = [0.0f64; 2];
        let mut columns = vec![[0usize; 2]; p + 1];
        for (c, ((slot, half), raw)) in layout.slots.iter().zip(record.iter()).enumerate() {
            let v = parse_number(raw).map_err(|message| DataError::Cell {
                line,
                column: header[c].clone(),
                message,
            })?;
            match slot {
                Some(j) => {
                    xs[*j][*half] = v;
                    columns[*j][*half] = c;
                }
                None => {
                    y[*half] = v;
                    columns[p][*half] = c;
                }
            }
        }
        let build = |pair: [f64; 2], cols: [usize; 2]| {
            layout.schema.interval(pair[0], pair[1]).map_err(|e| DataError::Cell {
                line,
                column: header[cols[1]].clone(),
                message: e.to_string(),
            })
        };
        let row = xs
            .iter()
            .zip(&columns)
            .map(|(pair, cols)| build(*pair, *cols))
            .collect::<Result<Vec<_>, _>>()?;
        predictors.push(row);
        if layout.has_outcome {
            outcome.push(build(y, columns[p])?);
        }
    }
    if predictors.is_empty() {
        return Err(DataError::Empty);
    }
    Ok(IntervalTable {
        schema: layout.schema,
        names: layout.predictors,
        predictors,
        outcome: layout.has_outcome.then_some(outcome),
    })
}

pub fn read_dataset<R: Read>(reader: R) -> Result<(IntervalDataset, Schema), DataError> {
    let table = read_table(reader)?;
    let schema = table.schema;
    Ok((table.into_dataset()?, schema))
}

/// 17 significant digits, enough to reproduce any `f64` exactly.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_dataset<W: Write>(writer: W, data: &IntervalDataset, schema: Schema) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(writer);
    let mut header: Vec<String> = data.names().iter().flat_map(|n| schema.columns(n)).collect();
    header.extend(schema.columns(OUTCOME));
    w.write_record(&header)?;
    for (xs, y) in data.rows() {
        let record: Vec<String> = xs
            .iter()
            .chain(std::iter::once(y))
            .flat_map(|x| schema.parts(x))
            .map(format_f64)
            .collect();
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

/// One predicted outcome interval per row, in `schema`, plus the clamp flag.
pub fn write_predictions<W: Write>(
    writer: W,
    predictions: &[conereg_core::Prediction],
    schema: Schema,
) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(writer);
    let [a, b] = schema.columns(OUTCOME);
    w.write_record([a.as_str(), b.as_str(), "clamped"])?;
    for p in predictions {
        let [u, v] = schema.parts(&p.interval);
        w.write_record([format_f64(u), format_f64(v), p.clamped.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
