//! Maximises the radius of `K2 v L` over every linear forest `L` of order
//! `n - 2` with at most `max_parts` paths whose two longest paths satisfy
//! `n1 + n2 <= n - k - 3` (i.e. the join misses the cycle length `n - k`).

use rayon::prelude::*;
use serde::Serialize;

use super::VerificationReport;
use crate::error::{arg_err, Result};
use crate::forest::{extremal_forest, forests_up_to, k2_join, LinearForest};
use crate::spectral::{comparison_threshold, spectral_radius, Verdict};
use crate::verify::lemma2_min_order;

const DOMINATING_EDGE: bool = true;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ArgmaxOutcome {
    pub argmax: LinearForest,
    pub rho: f64,
    pub candidates: usize,
    /// Forests whose radius is within the comparison threshold of the best,
    /// the best itself included.
    pub ties: Vec<LinearForest>,
    pub report: VerificationReport,
}

/// Whether `forest` satisfies the missing-cycle constraint at `(n, k)`.
pub fn admissible(forest: &LinearForest, n: usize, k: usize) -> bool {
    let (n1, n2) = forest.top_two();
    n1 + n2 + k + 3 <= n
}

pub fn argmax_sweep(n: usize, k: usize, max_parts: usize, tol: f64, force: bool) -> Result<ArgmaxOutcome> {
    let within = lemma2_min_order(k).is_some_and(|m| n >= m);
    if !within && !force {
        return arg_err(format!(
            "need n >= 2^(k+8) + 3 (got n = {n}, k = {k}); use force to explore"
        ));
    }
    if max_parts < 3 {
        return arg_err(format!("max_parts must be at least 3, got {max_parts}"));
    }
    let expected = extremal_forest(n, k)?;

    let candidates: Vec<LinearForest> = forests_up_to(n - 2, max_parts)
        .filter(|f| admissible(f, n, k))
        .collect();
    let radii: Vec<f64> = candidates
        .par_iter()
        .map(|f| spectral_radius(&k2_join(f, DOMINATING_EDGE), tol).map(|r| r.rho))
        .collect::<Result<_>>()?;

    // first maximum in enumeration order
    let best = (0..radii.len()).fold(0, |b, i| if radii[i] > radii[b] { i } else { b });
    let threshold = comparison_threshold(tol, tol);
    let runner_up = (0..radii.len())
        .filter(|&i| i != best)
        .map(|i| radii[i])
        .fold(f64::NEG_INFINITY, f64::max);
    let ties: Vec<LinearForest> = (0..radii.len())
        .filter(|&i| radii[best] - radii[i] <= threshold)
        .map(|i| candidates[i].clone())
        .collect();
    let expected_idx = candidates
        .iter()
        .position(|f| *f == expected)
        .expect("extremal forest is admissible");
    let expected_gap = radii[best] - radii[expected_idx];
    let unique_gap = radii[best] - runner_up;

    let holds = if best == expected_idx {
        if unique_gap > threshold {
            Verdict::Certified
        } else {
            Verdict::Indeterminate
        }
    } else if expected_gap > threshold {
        Verdict::Violated
    } else {
        Verdict::Indeterminate
    };

    let argmax = candidates[best].clone();
    let graph = k2_join(&argmax, DOMINATING_EDGE);
    let mut report = VerificationReport::new("argmax", tol, DOMINATING_EDGE);
    report
        .param("n", n)
        .param("k", k)
        .param("max_parts", max_parts)
        .param("candidates", candidates.len())
        .param("argmax", &argmax)
        .param("expected", &expected)
        .param("ties", &ties)
        .margin("rho_best", radii[best])
        .margin("rho_runner_up", runner_up)
        .margin("unique_gap", unique_gap)
        .margin("expected_gap", expected_gap)
        .artifact("argmax", &graph, radii[best]);
    report.within_hypothesis = within;
    report.holds = holds;

    Ok(ArgmaxOutcome {
        argmax,
        rho: radii[best],
        candidates: candidates.len(),
        ties,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::DEFAULT_TOL;

    #[test]
    fn admissibility() {
        let f = LinearForest::new(&[255, 1, 1]).unwrap();
        assert!(admissible(&f, 259, 0));
        let f = LinearForest::new(&[256, 1]).unwrap();
        assert!(!admissible(&f, 259, 0));
        let f = LinearForest::new(&[257]).unwrap();
        assert!(!admissible(&f, 259, 0));
    }

    #[test]
    fn preconditions() {
        assert!(argmax_sweep(100, 0, 3, DEFAULT_TOL, false).is_err());
        assert!(argmax_sweep(259, 0, 2, DEFAULT_TOL, false).is_err());
    }

    #[test]
    fn forced_small_sweep_runs() {
        let out = argmax_sweep(30, 0, 3, DEFAULT_TOL, true).unwrap();
        assert!(!out.report.within_hypothesis);
        assert_eq!(out.candidates, forests_up_to(28, 3).filter(|f| admissible(f, 30, 0)).count());
        assert!(out.ties.contains(&out.argmax));
    }
}
