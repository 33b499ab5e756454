//! JSON reports written by the commands.

use std::collections::BTreeMap;

use conjulin::embedding::SpectralReport;
use conjulin::{AffineSolutionSet, Complex64, Tolerance};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// `[re, im]`.
pub type Pair = [f64; 2];

pub fn pair(z: Complex64) -> Pair {
    [z.re, z.im]
}

pub fn pairs(v: &[Complex64]) -> Vec<Pair> {
    v.iter().copied().map(pair).collect()
}

pub fn unpair(v: &[Pair]) -> Vec<Complex64> {
    v.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalues {
    #[serde(rename = "A")]
    pub a: Vec<f64>,
    #[serde(rename = "M")]
    pub m: Vec<f64>,
    #[serde(rename = "S")]
    pub s: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Interlacing {
    pub cauchy: bool,
    pub schur: bool,
    pub cond_m_le_cond_a: bool,
    pub cond_s_le_cond_a: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reducible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feasible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_set: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub particular: Option<Vec<Pair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_basis: Option<Vec<Vec<Pair>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span_field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<Vec<Pair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvalues: Option<Eigenvalues>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition_numbers: Option<BTreeMap<String, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interlacing: Option<Interlacing>,
    pub residual: f64,
    pub tolerances: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(command: &str, tol: &Tolerance) -> Self {
        let tolerances = BTreeMap::from([
            ("rank_tol".to_owned(), tol.rank_tol),
            ("residual_tol".to_owned(), tol.residual_tol),
            ("eig_tol".to_owned(), tol.eig_tol),
        ]);
        Report {
            schema_version: SCHEMA_VERSION.to_owned(),
            command: command.to_owned(),
            reducible: None,
            feasible: None,
            row_set: None,
            particular: None,
            kernel_basis: None,
            span_field: None,
            x: None,
            z: None,
            eigenvalues: None,
            condition_numbers: None,
            interlacing: None,
            residual: 0.0,
            tolerances,
        }
    }

    pub fn with_solutions(mut self, s: &AffineSolutionSet) -> Self {
        self.feasible = Some(s.feasible);
        self.particular = s.particular.as_deref().map(pairs);
        self.kernel_basis = Some(s.kernel_basis.iter().map(|v| pairs(v)).collect());
        self.span_field = Some(s.span_field.as_str().to_owned());
        self
    }

    pub fn with_spectra(mut self, r: &SpectralReport) -> Self {
        self.eigenvalues = Some(Eigenvalues {
            a: r.eig_a.clone(),
            m: r.eig_m.clone(),
            s: r.eig_s.clone(),
        });
        self.condition_numbers = Some(BTreeMap::from([
            ("A".to_owned(), r.cond_a),
            ("M".to_owned(), r.cond_m),
            ("S".to_owned(), r.cond_s),
        ]));
        self.interlacing = Some(Interlacing {
            cauchy: r.cauchy_ok,
            schur: r.schur_ok,
            cond_m_le_cond_a: r.cond_m_le_cond_a,
            cond_s_le_cond_a: r.cond_s_le_cond_a,
        });
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
