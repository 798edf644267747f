//! Fixed parameter grids, versioned alongside the code so runs are
//! reproducible.

use serde::Deserialize;

use crate::error::{Result, SpexError};

const ACCEPTANCE: &str = include_str!("../grids/acceptance.toml");

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub version: u32,
    pub closed_form: ClosedFormGrid,
    pub oracle: OracleGrid,
    pub cycle_equivalence: CycleGrid,
    pub lemma1: Lemma1Grid,
    pub lemma2: Lemma2Grid,
    pub entry_bounds: EntryBoundsGrid,
    pub argmax: ArgmaxGrid,
    pub surgery: SurgeryGrid,
    pub graph6_planarity: Graph6Grid,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClosedFormGrid {
    pub n_min: usize,
    pub n_max: usize,
    pub abs_tol: f64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleGrid {
    pub n_max: usize,
    pub a_max: usize,
    pub random_graphs: usize,
    pub seed: u64,
    pub abs_tol: f64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleGrid {
    pub n_max: usize,
    pub k_max: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Lemma1Grid {
    pub orders: Vec<usize>,
    pub min_margin: f64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Lemma2Grid {
    pub n: usize,
    pub k: usize,
    pub pair_sum: usize,
    pub n2_min: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryBoundsGrid {
    pub samples: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArgmaxGrid {
    pub n: usize,
    pub k: usize,
    pub max_parts: usize,
    pub expected: Vec<usize>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurgeryGrid {
    pub pairs: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    pub slack: f64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Graph6Grid {
    pub n_max: usize,
    pub random_graphs: usize,
    pub exhaustive_n_max: usize,
    pub seed: u64,
}

impl Grid {
    pub fn parse(text: &str) -> Result<Grid> {
        toml::from_str(text).map_err(|e| SpexError::Parse {
            offset: e.span().map_or(0, |s| s.start),
            message: e.message().to_string(),
        })
    }

    /// The grid shipped with this build.
    pub fn acceptance() -> Grid {
        Grid::parse(ACCEPTANCE).expect("bundled grid parses")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_grid_loads() {
        let g = Grid::acceptance();
        assert_eq!(g.version, 1);
        assert_eq!(g.lemma1.orders, vec![40, 60, 80]);
        assert_eq!(g.argmax.expected, vec![255, 1, 1]);
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = ACCEPTANCE.replace("version = 1", "version = 1\nextra = 3");
        assert!(Grid::parse(&text).is_err());
    }
}
