//! Log-log power-law fitting.

use crate::{LabError, Result};

/// Ordinary least squares on `(log x, log y)`.
///
/// Returns the fitted exponent and its standard error from the residual
/// variance. Needs at least 3 points with positive coordinates.
pub fn fit_exponent(points: &[(f64, f64)]) -> Result<(f64, f64)> {
    if points.len() < 3 {
        return Err(LabError::Fit(format!(
            "need at least 3 points, got {}",
            points.len()
        )));
    }
    if points.iter().any(|&(x, y)| !(x > 0.0) || !(y > 0.0)) {
        return Err(LabError::Fit("all points must be positive".into()));
    }
    let m = points.len() as f64;
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let xbar = logs.iter().map(|p| p.0).sum::<f64>() / m;
    let ybar = logs.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = logs.iter().map(|p| (p.0 - xbar).powi(2)).sum();
    if sxx == 0.0 {
        return Err(LabError::Fit("all x values coincide".into()));
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - xbar) * (p.1 - ybar)).sum();
    let slope = sxy / sxx;
    let intercept = ybar - slope * xbar;
    let ssr: f64 = logs
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum();
    let stderr = (ssr / (m - 2.0) / sxx).sqrt();
    if !slope.is_finite() {
        return Err(LabError::Fit("non-finite slope".into()));
    }
    Ok((slope, stderr))
}
