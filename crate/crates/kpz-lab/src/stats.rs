//! Empirical distributions and their comparison against tabulated reference
//! CDFs: Kolmogorov-Smirnov distance, sample moments, and the two-time
//! variance estimator for the edge process.

use crate::tw::DistTable;
use crate::{Error, Result};
use serde::Serialize;

/// Sorted sample with a free-form description of where it came from.
#[derive(Debug, Clone)]
pub struct EmpiricalDist {
    samples: Vec<f64>,
    pub provenance: String,
}

impl EmpiricalDist {
    pub fn new(mut samples: Vec<f64>, provenance: impl Into<String>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::InvalidInput("empty sample".into()));
        }
        if samples.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput("non-finite sample value".into()));
        }
        samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(EmpiricalDist { samples, provenance: provenance.into() })
    }

    pub fn n(&self) -> usize {
        self.samples.len()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }
}

/// Sup over the sample jump points of |F_emp - F_ref|, with the empirical
/// CDF right-continuous (tied values grouped) and the reference linearly
/// interpolated on its grid. The flag reports whether any sample fell
/// outside the table range (reference clamped).
pub fn ks_distance(e: &EmpiricalDist, table: &DistTable) -> (f64, bool) {
    let n = e.samples.len() as f64;
    let mut sup = 0.0f64;
    let mut clamped = false;
    let mut i = 0;
    while i < e.samples.len() {
        let x = e.samples[i];
        let mut j = i + 1;
        while j < e.samples.len() && e.samples[j] == x {
            j += 1;
        }
        let (f, c) = table.cdf(x);
        clamped |= c;
        sup = sup.max((f - j as f64 / n).abs());
        i = j;
    }
    (sup, clamped)
}

/// Sample moments: unbiased mean/variance, standardized central third and
/// fourth moments when the sample is large enough and non-degenerate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moments {
    pub mean: f64,
    pub variance: f64,
    pub skewness: Option<f64>,
    pub kurtosis: Option<f64>,
}

pub fn moments(e: &EmpiricalDist) -> Result<Moments> {
    let n = e.n();
    if n < 2 {
        return Err(Error::InvalidInput(format!("need at least 2 samples, got {n}")));
    }
    let nf = n as f64;
    let mean = e.samples.iter().sum::<f64>() / nf;
    let mut m2 = 0.0;
    let mut m3 = 0.0;
    let mut m4 = 0.0;
    for &x in &e.samples {
        let d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    let variance = m2 / (nf - 1.0);
    let (m2, m3, m4) = (m2 / nf, m3 / nf, m4 / nf);
    let skewness = (n >= 3 && m2 > 0.0).then(|| m3 / m2.powf(1.5));
    let kurtosis = (n >= 4 && m2 > 0.0).then(|| m4 / (m2 * m2));
    Ok(Moments { mean, variance, skewness, kurtosis })
}

/// Two-time variance estimator: sample variance of b - a over pairs of
/// rescaled edge values observed at a fixed lag.
pub fn estimate_g(pairs: &[(f64, f64)]) -> Result<f64> {
    if pairs.len() < 100 {
        return Err(Error::InvalidInput(format!(
            "need at least 100 pairs, got {}",
            pairs.len()
        )));
    }
    let n = pairs.len() as f64;
    let mean = pairs.iter().map(|(a, b)| b - a).sum::<f64>() / n;
    let ss = pairs.iter().map(|(a, b)| (b - a - mean).powi(2)).sum::<f64>();
    Ok(ss / (n - 1.0))
}

/// Mean and variance implied by a tabulated CDF, via midpoint sums of the
/// interval increments; second-order accurate in the grid step.
pub fn table_moments(table: &DistTable) -> (f64, f64) {
    let mut mean = 0.0;
    let mut second = 0.0;
    for i in 0..table.s.len() - 1 {
        let mid = 0.5 * (table.s[i] + table.s[i + 1]);
        let df = table.f[i + 1] - table.f[i];
        mean += mid * df;
        second += mid * mid * df;
    }
    let mass = table.f.last().unwrap() - table.f[0];
    (mean / mass, second / mass - (mean / mass).powi(2))
}

/// Summary of an empirical sample against a reference table.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub ks: f64,
    pub mean_diff: f64,
    pub var_diff: f64,
    pub n: usize,
    pub reference: String,
}

impl ComparisonReport {
    pub fn build(e: &EmpiricalDist, table: &DistTable, reference: impl Into<String>) -> Result<Self> {
        let (ks, _) = ks_distance(e, table);
        let m = moments(e)?;
        let (ref_mean, ref_var) = table_moments(table);
        Ok(ComparisonReport {
            ks,
            mean_diff: m.mean - ref_mean,
            var_diff: m.variance - ref_var,
            n: e.n(),
            reference: reference.into(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
