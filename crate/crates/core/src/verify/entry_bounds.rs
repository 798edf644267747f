//! Localisation of Perron entries in `K2 v L` (hubs non-adjacent): with the
//! vector scaled to max entry 1, both hubs sit at 1 and every forest vertex
//! lies in `[2/rho, 2/rho + 8/rho^2]`.

use super::VerificationReport;
use crate::error::{arg_err, Result};
use crate::forest::{k2_join, LinearForest, JOIN_A, JOIN_B};
use crate::spectral::{certify_non_strict, spectral_radius, Verdict, CERTIFY_FACTOR};

const DOMINATING_EDGE: bool = false;

pub fn verify_entry_bounds(n: usize, forest: &LinearForest, tol: f64) -> Result<VerificationReport> {
    if n < 4 {
        return arg_err(format!("need n >= 4, got {n}"));
    }
    if forest.total() + 2 != n {
        return arg_err(format!("forest {forest} has order {}, expected {}", forest.total(), n - 2));
    }
    let g = k2_join(forest, DOMINATING_EDGE);
    let r = spectral_radius(&g, tol)?;
    let rho = r.rho;
    let lo = 2.0 / rho;
    let hi = 2.0 / rho + 8.0 / (rho * rho);

    let (mut min_lower, mut min_upper) = (f64::INFINITY, f64::INFINITY);
    for &x in &r.x[2..] {
        min_lower = min_lower.min(x - lo);
        min_upper = min_upper.min(hi - x);
    }
    let hub_deviation = (r.x[JOIN_A] - 1.0).abs().max((r.x[JOIN_B] - 1.0).abs());

    let threshold = CERTIFY_FACTOR * tol;
    let verdicts = [
        certify_non_strict(min_lower, threshold),
        certify_non_strict(min_upper, threshold),
        certify_non_strict(-hub_deviation, threshold),
    ];
    let mut report = VerificationReport::new("entry-bounds", tol, DOMINATING_EDGE);
    report
        .param("n", n)
        .param("L", forest)
        .margin("rho", rho)
        .margin("min_lower_slack", min_lower)
        .margin("min_upper_slack", min_upper)
        .margin("hub_deviation", hub_deviation)
        .artifact("K2+L", &g, rho);
    report.holds = if verdicts.contains(&Verdict::Violated) {
        Verdict::Violated
    } else {
        Verdict::Certified
    };
    Ok(report)
}
