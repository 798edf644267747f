//! Numerical certification of the spectral inequalities for joins of two
//! vertices with linear forests.
//!
//! Every check produces a [`VerificationReport`]: a self-contained record of
//! the parameters, the computed margins, a tri-state verdict and the graphs
//! involved (as graph6 together with their computed radius), so a report can
//! be re-validated from its artifacts alone.

mod argmax;
mod entry_bounds;
mod lemma1;
mod lemma2;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;
use crate::graph::Graph;
use crate::graph6;
use crate::spectral::{spectral_radius, Verdict};

pub use argmax::{argmax_sweep, ArgmaxOutcome};
pub use entry_bounds::verify_entry_bounds;
pub use lemma1::{lemma1_max_deficiency, sweep_lemma1, verify_lemma1};
pub use lemma2::{
    lemma2_min_order, sweep_lemma2, verify_claim33, verify_lemma2, IntervalKind, IntervalWitness,
    PathMergeParams,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Margin {
    pub name: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Artifact {
    pub role: String,
    pub graph6: String,
    pub rho: f64,
}

/// Tally of individual comparisons inside a sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub certified: u64,
    pub violated: u64,
    pub indeterminate: u64,
}

impl Counts {
    pub fn record(&mut self, v: Verdict) {
        match v {
            Verdict::Certified => self.certified += 1,
            Verdict::Violated => self.violated += 1,
            Verdict::Indeterminate => self.indeterminate += 1,
        }
    }

    pub fn merge(&mut self, other: Counts) {
        self.certified += other.certified;
        self.violated += other.violated;
        self.indeterminate += other.indeterminate;
    }

    pub fn verdict(&self) -> Verdict {
        if self.violated > 0 {
            Verdict::Violated
        } else if self.indeterminate > 0 {
            Verdict::Indeterminate
        } else {
            Verdict::Certified
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub params: BTreeMap<String, Value>,
    pub holds: Verdict,
    /// `false` when the check was forced outside the parameter range in
    /// which the inequality is proved.
    pub within_hypothesis: bool,
    pub dominating_edge: bool,
    pub tol: f64,
    pub margins: Vec<Margin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<Counts>,
    pub artifacts: Vec<Artifact>,
}

impl VerificationReport {
    pub(crate) fn new(check_id: &str, tol: f64, dominating_edge: bool) -> Self {
        VerificationReport {
            check_id: check_id.to_string(),
            params: BTreeMap::new(),
            holds: Verdict::Certified,
            within_hypothesis: true,
            dominating_edge,
            tol,
            margins: Vec::new(),
            counts: None,
            artifacts: Vec::new(),
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.params.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable parameter"),
        );
        self
    }

    pub(crate) fn margin(&mut self, name: impl Into<String>, value: f64) -> &mut Self {
        self.margins.push(Margin {
            name: name.into(),
            value,
        });
        self
    }

    pub(crate) fn artifact(&mut self, role: &str, g: &Graph, rho: f64) -> &mut Self {
        self.artifacts.push(Artifact {
            role: role.to_string(),
            graph6: graph6::encode(g),
            rho,
        });
        self
    }

    pub fn margin_value(&self, name: &str) -> Option<f64> {
        self.margins.iter().find(|m| m.name == name).map(|m| m.value)
    }

    pub fn is_violated(&self) -> bool {
        self.holds == Verdict::Violated
    }

    /// One JSON object on a single line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Decodes every artifact and recomputes its radius at the recorded
    /// tolerance; `true` iff all radii reproduce bit-for-bit.
    pub fn revalidate(&self) -> Result<bool> {
        for a in &self.artifacts {
            let g = graph6::decode(&a.graph6)?;
            let r = spectral_radius(&g, self.tol)?;
            if r.rho.to_bits() != a.rho.to_bits() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn params_compact(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Margin table with one row per (report, margin).
pub fn margins_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("check_id,params,holds,margin,value\n");
    for r in reports {
        let holds = serde_json::to_value(r.holds).expect("verdict serializes");
        let holds = holds.as_str().unwrap_or_default().to_string();
        for m in &r.margins {
            out.push_str(&format!(
                "{},{},{},{},{:e}\n",
                csv_field(&r.check_id),
                csv_field(&r.params_compact()),
                holds,
                csv_field(&m.name),
                m.value
            ));
        }
    }
    out
}
