//! Shared statistical machinery: simple linear regression with coefficient
//! significance, Pearson correlation, and Student t tail probabilities via
//! the regularized incomplete beta function.
//!
//! The t CDF route is the classic identity P(|T| > t) = I_x(df/2, 1/2) with
//! x = df / (df + t^2), evaluated by a Lentz-style continued fraction.

/// Least-squares line fit with standard errors and two-tailed p-values for
/// both coefficients. Slope and intercept are reported in the original x
/// coordinates even though the fit centers x internally for conditioning.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Regression {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub se_slope: f64,
    pub se_intercept: f64,
    pub t_slope: f64,
    pub t_intercept: f64,
    pub p_slope: f64,
    pub p_intercept: f64,
    pub n: usize,
}

/// Returns `None` when fewer than 3 points are given or x has zero
/// variance; both leave the slope undefined.
pub fn linear_regression(x: &[f64], y: &[f64]) -> Option<Regression> {
    let n = x.len();
    if n != y.len() || n < 3 {
        return None;
    }
    let nf = n as f64;
    let x_mean = x.iter().sum::<f64>() / nf;
    let y_mean = y.iter().sum::<f64>() / nf;

    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for i in 0..n {
        let dx = x[i] - x_mean;
        sxx += dx * dx;
        sxy += dx * (y[i] - y_mean);
    }
    if sxx == 0.0 {
        return None;
    }

    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;

    let mut sse = 0.0;
    let mut sst = 0.0;
    for i in 0..n {
        let resid = y[i] - (intercept + slope * x[i]);
        sse += resid * resid;
        let dy = y[i] - y_mean;
        sst += dy * dy;
    }
    // SSE <= SST for a least-squares line with intercept, so SST == 0
    // forces SSE == 0: a perfectly flat, perfectly fitted series.
    let r_squared = if sst == 0.0 {
        1.0
    } else {
        (1.0 - sse / sst).clamp(0.0, 1.0)
    };

    let df = nf - 2.0;
    let sigma2 = sse / df;
    let se_slope = (sigma2 / sxx).sqrt();
    let se_intercept = (sigma2 * (1.0 / nf + x_mean * x_mean / sxx)).sqrt();

    let (t_slope, p_slope) = t_and_p(slope, se_slope, df);
    let (t_intercept, p_intercept) = t_and_p(intercept, se_intercept, df);

    Some(Regression {
        slope,
        intercept,
        r_squared,
        se_slope,
        se_intercept,
        t_slope,
        t_intercept,
        p_slope,
        p_intercept,
        n,
    })
}

/// An exact fit has zero standard error; the statistic is reported as
/// infinite and the p-value underflows to zero.
fn t_and_p(estimate: f64, se: f64, df: f64) -> (f64, f64) {
    if se == 0.0 {
        if estimate == 0.0 {
            (0.0, 1.0)
        } else {
            (f64::INFINITY.copysign(estimate), 0.0)
        }
    } else {
        let t = estimate / se;
        (t, t_two_tailed_p(t, df))
    }
}

/// Pearson product-moment correlation. `None` when lengths differ, fewer
/// than two points are given, or either side has zero variance.
pub fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    let n = x.len();
    if n != y.len() || n < 2 {
        return None;
    }
    // Constant input has zero variance by definition; test for it directly
    // because the summed squared deviations can round away from zero.
    if x.iter().all(|&v| v == x[0]) || y.iter().all(|&v| v == y[0]) {
        return None;
    }
    let nf = n as f64;
    let x_mean = x.iter().sum::<f64>() / nf;
    let y_mean = y.iter().sum::<f64>() / nf;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for i in 0..n {
        let dx = x[i] - x_mean;
        let dy = y[i] - y_mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Two-tailed p-value of a Student t statistic with `df` degrees of freedom.
pub fn t_two_tailed_p(t: f64, df: f64) -> f64 {
    if t == 0.0 {
        return 1.0;
    }
    if !t.is_finite() {
        return 0.0;
    }
    regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t * t))
}

const BETA_EPS: f64 = 1e-10;
const BETA_MAX_ITER: usize = 400;

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
/// Converges for a, b > 0 and x in [0, 1]; the symmetry relation keeps the
/// fraction in its rapidly converging region.
pub fn regularized_incomplete_beta(a: f64, b: f64, x: f64) -> f64 {
    assert!(a > 0.0 && b > 0.0, "shape parameters must be positive");
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front =
        ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (1.0 - x).ln();
    let front = ln_front.exp();
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_cf(a, b, x) / a
    } else {
        1.0 - front * beta_cf(b, a, 1.0 - x) / b
    }
}

/// Continued fraction for the incomplete beta (modified Lentz iteration).
fn beta_cf(a: f64, b: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=BETA_MAX_ITER {
        let mf = m as f64;
        let m2 = 2.0 * mf;
        let aa = mf * (b - mf) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + mf) * (qab + mf) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < BETA_EPS {
            break;
        }
    }
    h
}

/// Lanczos approximation, g = 7, 9 coefficients. Accurate to ~1e-13 over
/// the positive reals, far below the continued fraction's tolerance.
// Coefficients kept digit for digit as published.
#[allow(clippy::excessive_precision)]
fn ln_gamma(x: f64) -> f64 {
    const COEFFS: [f64; 8] = [
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ];
    if x < 0.5 {
        // Reflection keeps the series in its accurate region.
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = 0.99999999999980993;
    for (i, c) in COEFFS.iter().enumerate() {
        acc += c / (x + (i + 1) as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}
