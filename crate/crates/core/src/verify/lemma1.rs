//! Fewer paths means a larger radius: for `a2 < a1 <= sqrt(2n - 4) / 4`,
//! every join with a forest of `a2 + 1` paths beats every join with a forest
//! of `a1 + 1` paths. Joins here omit the edge between the two hubs.

use rayon::prelude::*;

use super::{Counts, VerificationReport};
use crate::error::{arg_err, Result};
use crate::forest::{enumerate_lna, k2_join, LinearForest};
use crate::spectral::{certify_strict, comparison_threshold, spectral_radius};

const DOMINATING_EDGE: bool = false;

/// Largest `a` with `a <= sqrt(2n - 4) / 4`, i.e. `16 a^2 <= 2n - 4`.
pub fn lemma1_max_deficiency(n: usize) -> usize {
    if n < 2 {
        return 0;
    }
    let limit = 2 * n - 4;
    (0..).take_while(|&a: &usize| 16 * a * a <= limit).last().unwrap_or(0)
}

fn check_hypothesis(n: usize, a1: usize, a2: usize) -> Result<()> {
    if n < 4 {
        return arg_err(format!("need n >= 4, got {n}"));
    }
    if a2 >= a1 {
        return arg_err(format!("need a2 < a1 (got a1 = {a1}, a2 = {a2})"));
    }
    if 16 * a1 * a1 > 2 * n - 4 {
        return arg_err(format!(
            "need a1 <= sqrt(2n - 4) / 4 = {:.4} (got a1 = {a1})",
            ((2 * n - 4) as f64).sqrt() / 4.0
        ));
    }
    Ok(())
}

/// Certifies `rho(K2 v L2) > rho(K2 v L1)` for one pair of forests.
pub fn verify_lemma1(
    n: usize,
    a1: usize,
    a2: usize,
    l1: &LinearForest,
    l2: &LinearForest,
    tol: f64,
) -> Result<VerificationReport> {
    check_hypothesis(n, a1, a2)?;
    for (name, f, a) in [("L1", l1, a1), ("L2", l2, a2)] {
        if !f.in_family(n, a) {
            return arg_err(format!(
                "{name} = {f} is not a forest of order {} with {} paths",
                n - 2,
                a + 1
            ));
        }
    }
    let g1 = k2_join(l1, DOMINATING_EDGE);
    let g2 = k2_join(l2, DOMINATING_EDGE);
    let r1 = spectral_radius(&g1, tol)?;
    let r2 = spectral_radius(&g2, tol)?;
    let gap = r2.rho - r1.rho;

    let mut report = VerificationReport::new("lemma1", tol, DOMINATING_EDGE);
    report
        .param("n", n)
        .param("a1", a1)
        .param("a2", a2)
        .param("L1", l1)
        .param("L2", l2)
        .margin("rho_1", r1.rho)
        .margin("rho_2", r2.rho)
        .margin("rho_gap", gap)
        .artifact("K2+L1", &g1, r1.rho)
        .artifact("K2+L2", &g2, r2.rho);
    report.holds = certify_strict(gap, comparison_threshold(tol, tol));
    Ok(report)
}

struct Ranked {
    forest: LinearForest,
    rho: f64,
}

fn radii(n: usize, a: usize, tol: f64) -> Result<Vec<Ranked>> {
    let forests: Vec<LinearForest> = enumerate_lna(n, a)?.collect();
    forests
        .into_par_iter()
        .map(|forest| {
            let rho = spectral_radius(&k2_join(&forest, DOMINATING_EDGE), tol)?.rho;
            Ok(Ranked { forest, rho })
        })
        .collect()
}

/// Exhaustive check at order `n`: for every admissible `a2 < a1` and every
/// pair of forests of the two families. One report per `(a1, a2)` carries
/// the pair tally and the smallest gap, with the closest pair as artifacts.
pub fn sweep_lemma1(n: usize, tol: f64) -> Result<Vec<VerificationReport>> {
    let a_max = lemma1_max_deficiency(n);
    if n < 4 || a_max == 0 {
        return arg_err(format!("no admissible deficiencies at n = {n}"));
    }
    let families: Vec<Vec<Ranked>> = (0..=a_max).map(|a| radii(n, a, tol)).collect::<Result<_>>()?;
    let threshold = comparison_threshold(tol, tol);

    let mut reports = Vec::new();
    for a1 in 1..=a_max {
        for a2 in 0..a1 {
            let (low, high) = (&families[a1], &families[a2]);
            let mut sorted_high: Vec<f64> = high.iter().map(|r| r.rho).collect();
            sorted_high.sort_by(f64::total_cmp);

            let mut counts = Counts::default();
            for r1 in low {
                let below = sorted_high.partition_point(|&x| x - r1.rho < -threshold);
                let not_above = sorted_high.partition_point(|&x| x - r1.rho <= threshold);
                counts.violated += below as u64;
                counts.indeterminate += (not_above - below) as u64;
                counts.certified += (sorted_high.len() - not_above) as u64;
            }

            let worst_low = low
                .iter()
                .max_by(|p, q| p.rho.total_cmp(&q.rho))
                .expect("non-empty family");
            let worst_high = high
                .iter()
                .min_by(|p, q| p.rho.total_cmp(&q.rho))
                .expect("non-empty family");
            let g1 = k2_join(&worst_low.forest, DOMINATING_EDGE);
            let g2 = k2_join(&worst_high.forest, DOMINATING_EDGE);

            let mut report = VerificationReport::new("lemma1-sweep", tol, DOMINATING_EDGE);
            report
                .param("n", n)
                .param("a1", a1)
                .param("a2", a2)
                .param("family_sizes", [low.len(), high.len()])
                .param("closest_L1", &worst_low.forest)
                .param("closest_L2", &worst_high.forest)
                .margin("min_gap", worst_high.rho - worst_low.rho)
                .artifact("K2+L1", &g1, worst_low.rho)
                .artifact("K2+L2", &g2, worst_high.rho);
            report.holds = counts.verdict();
            report.counts = Some(counts);
            reports.push(report);
        }
    }
    Ok(reports)
}
