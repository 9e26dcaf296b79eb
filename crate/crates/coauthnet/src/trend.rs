//! Linear growth trend over cumulative per-year counts, with extrapolation
//! a few years past the observed range.

use thiserror::Error;

use crate::stats::linear_regression;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TrendError {
    #[error("degenerate trend: {0}")]
    DegenerateFit(&'static str),
}

/// Least-squares line over (year, cumulative count) points.
#[derive(Clone, Debug, PartialEq)]
pub struct TrendFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    /// Predicted values for the years after the last observed one.
    pub extrapolation: Vec<(i32, f64)>,
}

impl TrendFit {
    pub fn predict(&self, year: i32) -> f64 {
        self.intercept + self.slope * year as f64
    }
}

/// Fits cumulative counts against calendar year. Years must be strictly
/// increasing; at least 3 points are required for the error terms to exist.
pub fn fit_trend(series: &[(i32, u64)], horizon: u32) -> Result<TrendFit, TrendError> {
    if series.len() < 3 {
        return Err(TrendError::DegenerateFit("fewer than 3 yearly points"));
    }
    for pair in series.windows(2) {
        if pair[1].0 <= pair[0].0 {
            return Err(TrendError::DegenerateFit(
                "years must be strictly increasing",
            ));
        }
    }
    let xs: Vec<f64> = series.iter().map(|&(y, _)| y as f64).collect();
    let ys: Vec<f64> = series.iter().map(|&(_, c)| c as f64).collect();
    let reg = linear_regression(&xs, &ys)
        .ok_or(TrendError::DegenerateFit("zero year variance"))?;
    let last = series.last().unwrap().0;
    let extrapolation = (1..=horizon as i32)
        .map(|k| {
            let year = last + k;
            (year, reg.intercept + reg.slope * year as f64)
        })
        .collect();
    Ok(TrendFit {
        slope: reg.slope,
        intercept: reg.intercept,
        r_squared: reg.r_squared,
        extrapolation,
    })
}
