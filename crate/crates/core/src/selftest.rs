//! Small sanity suite of hand-checkable facts, run by `spex selftest`.

use crate::bounds::{planar_bounds_check, VertexSubsetPair};
use crate::cycles::{cycle_spectrum, find_cycle, in_gnk, join_cycle_certificate, CycleSearch, DEFAULT_BUDGET};
use crate::error::Result;
use crate::forest::{build_linear_forest, enumerate_lna, extremal_forest, extremal_graph, k2_join, LinearForest};
use crate::graph::{complete, complete_bipartite, cycle, path, Graph};
use crate::planarity::is_planar;
use crate::spectral::{rayleigh_quotient, spectral_radius, surgery_compare, DEFAULT_TOL};
use crate::verify::{argmax_sweep, verify_lemma1, verify_lemma2, PathMergeParams};

pub struct Check {
    pub name: &'static str,
    run: fn() -> Result<bool>,
}

impl Check {
    pub fn run(&self) -> bool {
        (self.run)().unwrap_or(false)
    }
}

fn forest(p: &[usize]) -> Result<LinearForest> {
    LinearForest::new(p)
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-10
}

fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn checks() -> Vec<Check> {
    vec![
        Check { name: "single edge", run: || Ok(Graph::from_edges(2, &[(0, 1)])?.edge_count() == 1) },
        Check {
            name: "path degrees",
            run: || {
                let g = Graph::from_edges(3, &[(0, 1), (1, 2)])?;
                Ok((0..3).map(|v| g.degree(v)).eq([1, 2, 1]))
            },
        },
        Check {
            name: "4-cycle is 2-regular",
            run: || {
                let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
                Ok((0..4).all(|v| g.degree(v) == 2))
            },
        },
        Check {
            name: "disjoint unions",
            run: || {
                let a = path(2).union(&path(1));
                let b = path(3).union(&path(3));
                let c = cycle(3)?.union(&cycle(3)?);
                Ok((a.n(), a.edge_count()) == (3, 1)
                    && (b.n(), b.edge_count()) == (6, 4)
                    && (c.n(), c.edge_count(), c.components().len()) == (6, 6, 2))
            },
        },
        Check {
            name: "joins",
            run: || {
                let a = complete(2).join(&empty(2));
                let b = empty(2).join(&empty(8));
                let c = complete(2).join(&build_linear_forest(&[4, 1, 1])?);
                Ok(a.edge_count() == 5 && b.edge_count() == 16 && c.edge_count() == 16)
            },
        },
        Check { name: "K4 planar, K5 not", run: || Ok(is_planar(&complete(4)) && !is_planar(&complete(5))) },
        Check {
            name: "planar edge bounds",
            run: || {
                let k4 = planar_bounds_check(&complete(4), &VertexSubsetPair::new(4, &[0, 1, 2, 3], &[])?)?;
                let y: Vec<usize> = (2..10).collect();
                let k28 = planar_bounds_check(&complete_bipartite(2, 8), &VertexSubsetPair::new(10, &[0, 1], &y)?)?;
                let c6 = planar_bounds_check(&cycle(6)?, &VertexSubsetPair::new(6, &[0, 1, 2, 3, 4, 5], &[])?)?;
                Ok(k4.holds && k4.inner_edges == 6 && k28.holds && k28.cross_edges == 16 && c6.holds)
            },
        },
        Check {
            name: "linear forests",
            run: || {
                let p3 = build_linear_forest(&[3])?;
                let two = build_linear_forest(&[2, 2])?;
                Ok(p3.edge_count() == 2 && (two.n(), two.edge_count()) == (4, 2))
            },
        },
        Check {
            name: "K2 joins",
            run: || {
                let g = k2_join(&forest(&[4, 1, 1])?, true);
                let k3 = k2_join(&forest(&[1])?, true);
                Ok(g.edge_count() == 16 && k3.edge_count() == 3 && k3.n() == 3)
            },
        },
        Check {
            name: "extremal forests",
            run: || {
                let g = extremal_graph(20, 2)?;
                Ok(extremal_forest(13, 1)?.parts() == [7, 2, 2]
                    && extremal_forest(20, 2)?.parts() == [12, 3, 3]
                    && g.n() == 20
                    && extremal_forest(20, 2)?.size() == 15)
            },
        },
        Check {
            name: "single-part family",
            run: || Ok(enumerate_lna(6, 0)?.map(|f| f.parts().to_vec()).eq([vec![4]])),
        },
        Check {
            name: "cycle radius",
            run: || Ok(close(spectral_radius(&cycle(5)?, DEFAULT_TOL)?.rho, 2.0) && close(spectral_radius(&cycle(100)?, DEFAULT_TOL)?.rho, 2.0)),
        },
        Check {
            name: "rayleigh quotient",
            run: || Ok(close(rayleigh_quotient(&complete(2), &[1.0, 1.0])?, 1.0) && close(rayleigh_quotient(&cycle(4)?, &[1.0; 4])?, 2.0)),
        },
        Check {
            name: "identity surgery",
            run: || {
                let c6 = cycle(6)?;
                let r = surgery_compare(&c6, &c6, DEFAULT_TOL)?;
                Ok(r.surgery_margin.abs() <= 1e-10 && r.bound_holds)
            },
        },
        Check {
            name: "5-cycle search",
            run: || {
                let c5 = cycle(5)?;
                Ok(find_cycle(&c5, 5, DEFAULT_BUDGET)?.is_found() && find_cycle(&c5, 4, DEFAULT_BUDGET)? == CycleSearch::Absent)
            },
        },
        Check {
            name: "join triangle",
            run: || Ok(join_cycle_certificate(&forest(&[4, 1, 1])?, 3)?.is_some_and(|c| c.len() == 3)),
        },
        Check { name: "K4 spectrum", run: || Ok(cycle_spectrum(&complete(4), 4, DEFAULT_BUDGET)?.present_lengths() == [3, 4]) },
        Check {
            name: "6-cycle misses triangles",
            run: || {
                let m = in_gnk(&cycle(6)?, 0, DEFAULT_BUDGET)?;
                Ok(m.member && m.witness == Some(3))
            },
        },
        Check {
            name: "verifier preconditions",
            run: || {
                let f = forest(&[36, 2])?;
                Ok(verify_lemma1(40, 2, 2, &f, &f, DEFAULT_TOL).is_err()
                    && verify_lemma2(&PathMergeParams::new(100, 0, 49, 49, &[]), DEFAULT_TOL).is_err()
                    && argmax_sweep(100, 0, 3, DEFAULT_TOL, false).is_err())
            },
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_pass() {
        for c in checks() {
            assert!(c.run(), "{}", c.name);
        }
    }
}
