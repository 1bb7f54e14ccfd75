//! Descriptive statistics and one-way ANOVA with F-distribution tail
//! probabilities and critical values.
//!
//! The F CDF is evaluated through the regularized incomplete beta function
//! (Lentz continued fraction); critical values invert it by bisection. No
//! lookup tables, so any (df1, df2) pair works.

use thiserror::Error;

/// Errors raised by statistics operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("empty data")]
    EmptyData,
    #[error("at least two groups are required, got {0}")]
    TooFewGroups(usize),
    #[error("group {0} is empty")]
    EmptyGroup(usize),
    #[error("total sample count must exceed the number of groups")]
    NotEnoughSamples,
    #[error("within-group variance is zero; the F ratio is undefined")]
    ZeroWithinVariance,
    #[error("alpha must lie strictly between 0 and 1, got {0}")]
    AlphaOutOfRange(f64),
    #[error("x must be non-negative, got {0}")]
    NegativeX(f64),
    #[error("degrees of freedom must be at least 1, got ({0}, {1})")]
    BadDegreesOfFreedom(u64, u64),
}

/// One-way ANOVA decomposition and verdict at a significance level.
#[derive(Debug, Clone, PartialEq)]
pub struct AnovaResult {
    pub ss_between: f64,
    pub ss_within: f64,
    /// Between-groups degrees of freedom: groups − 1.
    pub df1: u64,
    /// Within-groups degrees of freedom: samples − groups.
    pub df2: u64,
    pub f_value: f64,
    pub p_value: f64,
    /// Critical value of the F distribution at the supplied alpha.
    pub f_critical: f64,
    pub alpha: f64,
    /// True when `f_value > f_critical`, equivalently `p_value < alpha`.
    pub significant: bool,
}

/// Arithmetic mean and sample standard deviation (n−1 divisor; 0 for a
/// single sample).
pub fn mean_std(samples: &[f64]) -> Result<(f64, f64), StatsError> {
    if samples.is_empty() {
        return Err(StatsError::EmptyData);
    }
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    if samples.len() == 1 {
        return Ok((mean, 0.0));
    }
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Ok((mean, var.sqrt()))
}

/// Standard one-way ANOVA over ≥ 2 groups.
///
/// `SS_b = Σ nᵢ(x̄ᵢ − x̄)²`, `SS_w = Σᵢ Σⱼ (xᵢⱼ − x̄ᵢ)²`,
/// `F = (SS_b/df1) / (SS_w/df2)`, `p = 1 − CDF_F(F)`.
pub fn one_way_anova(groups: &[Vec<f64>], alpha: f64) -> Result<AnovaResult, StatsError> {
    if groups.len() < 2 {
        return Err(StatsError::TooFewGroups(groups.len()));
    }
    if let Some(i) = groups.iter().position(|g| g.is_empty()) {
        return Err(StatsError::EmptyGroup(i));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(StatsError::AlphaOutOfRange(alpha));
    }
    let k = groups.len();
    let n_total: usize = groups.iter().map(|g| g.len()).sum();
    if n_total <= k {
        return Err(StatsError::NotEnoughSamples);
    }

    let grand_mean = groups.iter().flatten().sum::<f64>() / n_total as f64;
    let mut ss_between = 0.0;
    let mut ss_within = 0.0;
    for g in groups {
        let mean = g.iter().sum::<f64>() / g.len() as f64;
        ss_between += g.len() as f64 * (mean - grand_mean).powi(2);
        ss_within += g.iter().map(|x| (x - mean).powi(2)).sum::<f64>();
    }

    let df1 = (k - 1) as u64;
    let df2 = (n_total - k) as u64;
    let ms_within = ss_within / df2 as f64;
    if ms_within == 0.0 {
        return Err(StatsError::ZeroWithinVariance);
    }
    let f_value = (ss_between / df1 as f64) / ms_within;
    let p_value = 1.0 - f_cdf(f_value, df1, df2)?;
    let f_crit = f_critical(alpha, df1, df2)?;

    Ok(AnovaResult {
        ss_between,
        ss_within,
        df1,
        df2,
        f_value,
        p_value,
        f_critical: f_crit,
        alpha,
        significant: f_value > f_crit,
    })
}

/// CDF of the F distribution with (df1, df2) degrees of freedom:
/// `I_{df1·x/(df1·x+df2)}(df1/2, df2/2)`.
pub fn f_cdf(x: f64, df1: u64, df2: u64) -> Result<f64, StatsError> {
    if df1 < 1 || df2 < 1 {
        return Err(StatsError::BadDegreesOfFreedom(df1, df2));
    }
    if x.is_nan() || x < 0.0 {
        return Err(StatsError::NegativeX(x));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let d1 = df1 as f64;
    let d2 = df2 as f64;
    let t = d1 * x / (d1 * x + d2);
    Ok(regularized_beta(t, d1 / 2.0, d2 / 2.0))
}

/// The x with `f_cdf(x, df1, df2) = 1 − alpha`, by bracketing bisection to
/// an absolute tolerance of 1e−8.
pub fn f_critical(alpha: f64, df1: u64, df2: u64) -> Result<f64, StatsError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(StatsError::AlphaOutOfRange(alpha));
    }
    if df1 < 1 || df2 < 1 {
        return Err(StatsError::BadDegreesOfFreedom(df1, df2));
    }
    let target = 1.0 - alpha;
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    while f_cdf(hi, df1, df2)? < target {
        hi *= 2.0;
        if hi > 1e300 {
            break;
        }
    }
    while hi - lo > 1e-8 {
        let mid = 0.5 * (lo + hi);
        if f_cdf(mid, df1, df2)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// ln Γ(z) for z > 0, Lanczos approximation (g = 5, 6 coefficients).
fn ln_gamma(z: f64) -> f64 {
    debug_assert!(z > 0.0);
    const COEFFS: [f64; 6] = [
        76.18009172947146,
        -86.50532032941677,
        24.01409824083091,
        -1.231739572450155,
        0.1208650973866179e-2,
        -0.5395239384953e-5,
    ];
    let mut series = 1.000000000190015;
    for (i, c) in COEFFS.iter().enumerate() {
        series += c / (z + i as f64 + 1.0);
    }
    let tmp = z + 5.5;
    (z + 0.5) * tmp.ln() - tmp + (2.5066282746310005 * series / z).ln()
}

/// Regularized incomplete beta I_x(a, b) via Lentz's continued fraction,
/// using the symmetry relation for fast convergence. Converges well past
/// 1e-10 relative accuracy for the degree-of-freedom ranges used here.
fn regularized_beta(x: f64, a: f64, b: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let front =
        (a * x.ln() + b * (1.0 - x).ln() + ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b)).exp();
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_continued_fraction(x, a, b) / a
    } else {
        1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b
    }
}

fn beta_continued_fraction(x: f64, a: f64, b: f64) -> f64 {
    const MAX_ITER: usize = 500;
    const EPS: f64 = 1e-15;
    const TINY: f64 = 1e-30;

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

    for m in 1..=MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;

        let numerator = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + numerator * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + numerator / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;

        let numerator = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + numerator * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + numerator / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            break;
        }
    }
    h
}
