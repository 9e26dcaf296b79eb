//! Power-law fitting of degree frequency distributions.
//!
//! A distribution y = c * degree^phi turns into a line under log-log
//! transform; the fit is ordinary least squares on (log10 degree,
//! log10 frequency) with t-tests on both coefficients. Degree 0 cannot be
//! placed on a log axis, so its bin is always dropped before fitting.

use thiserror::Error;

use crate::stats::linear_regression;

/// Degree histogram: strictly increasing degrees, each with a positive
/// count. Degrees that never occur have no bin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencyDistribution {
    points: Vec<(usize, u64)>,
}

impl FrequencyDistribution {
    /// (degree, frequency) pairs, ascending by degree.
    pub fn points(&self) -> &[(usize, u64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Sum of all frequencies.
    pub fn total(&self) -> u64 {
        self.points.iter().map(|&(_, f)| f).sum()
    }
}

/// Counts degree multiplicities. The zero bin is excluded unless
/// `include_zero` is set (it is dropped again before any fit).
pub fn frequency_distribution(degrees: &[usize], include_zero: bool) -> FrequencyDistribution {
    let mut counts: std::collections::BTreeMap<usize, u64> = std::collections::BTreeMap::new();
    for &d in degrees {
        if d == 0 && !include_zero {
            continue;
        }
        *counts.entry(d).or_insert(0) += 1;
    }
    FrequencyDistribution {
        points: counts.into_iter().collect(),
    }
}

/// Fitted model y = c * degree^phi with log-space inference. `se`, `t` and
/// `p` fields describe the log10-space coefficients (log10 c and phi).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerLawFit {
    pub c: f64,
    pub phi: f64,
    pub r_squared: f64,
    pub se_log_c: f64,
    pub se_phi: f64,
    pub t_log_c: f64,
    pub t_phi: f64,
    pub p_log_c: f64,
    pub p_phi: f64,
    pub n_points: usize,
    /// Significance level the fit was requested at.
    pub alpha: f64,
}

impl PowerLawFit {
    pub fn significant_phi(&self) -> bool {
        self.p_phi < self.alpha
    }

    pub fn significant_log_c(&self) -> bool {
        self.p_log_c < self.alpha
    }

    /// Model value at a degree.
    pub fn fitted(&self, degree: f64) -> f64 {
        self.c * degree.powf(self.phi)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FitError {
    /// Fewer than 3 usable points, a single distinct degree, or a
    /// non-positive coordinate that cannot be log-transformed.
    #[error("degenerate fit: {0}")]
    DegenerateFit(&'static str),
}

/// Fits the histogram, dropping any zero-degree bin first.
pub fn fit_power_law(fd: &FrequencyDistribution, alpha: f64) -> Result<PowerLawFit, FitError> {
    let points: Vec<(f64, f64)> = fd
        .points
        .iter()
        .filter(|&&(d, _)| d > 0)
        .map(|&(d, f)| (d as f64, f as f64))
        .collect();
    fit_power_law_points(&points, alpha)
}

/// Core fit over real-valued (degree, value) pairs. Exposed separately so
/// exact model data (whose values need not be integer counts) can be fitted
/// and recovered bit-for-bit.
pub fn fit_power_law_points(points: &[(f64, f64)], alpha: f64) -> Result<PowerLawFit, FitError> {
    if points.len() < 3 {
        return Err(FitError::DegenerateFit("fewer than 3 points"));
    }
    if points.iter().any(|&(d, y)| d <= 0.0 || y <= 0.0) {
        return Err(FitError::DegenerateFit(
            "non-positive point cannot be log-transformed",
        ));
    }
    let x: Vec<f64> = points.iter().map(|&(d, _)| d.log10()).collect();
    let y: Vec<f64> = points.iter().map(|&(_, v)| v.log10()).collect();
    let reg = linear_regression(&x, &y)
        .ok_or(FitError::DegenerateFit("zero variance in log degree"))?;
    Ok(PowerLawFit {
        c: 10f64.powf(reg.intercept),
        phi: reg.slope,
        r_squared: reg.r_squared,
        se_log_c: reg.se_intercept,
        se_phi: reg.se_slope,
        t_log_c: reg.t_intercept,
        t_phi: reg.t_slope,
        p_log_c: reg.p_intercept,
        p_phi: reg.p_slope,
        n_points: points.len(),
        alpha,
    })
}

/// Absolute distance of the fitted exponent from the classic inverse-square
/// productivity law (phi = -2).
pub fn lotka_comparison(fit: &PowerLawFit) -> f64 {
    (fit.phi + 2.0).abs()
}
