use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use valspec::exactalg::{IntPoly, RatPoly};

/// One row of machine-readable output. Every big value is a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: String,
    pub p: u64,
    pub k: usize,
    /// Ascending degree. Normalized spectra use `num/den` strings.
    pub coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evaluations: Option<BTreeMap<String, String>>,
}

/// A computed spectrum, integral or normalized.
pub enum Spectrum {
    Int(IntPoly),
    Rat(RatPoly),
}

impl Spectrum {
    pub fn coeff_strings(&self) -> Vec<String> {
        match self {
            Spectrum::Int(p) => p.coeffs().iter().map(BigInt::to_string).collect(),
            Spectrum::Rat(p) => p.coeffs().iter().map(BigRational::to_string).collect(),
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        match self {
            Spectrum::Int(p) => p.eval(x),
            Spectrum::Rat(p) => p.eval(x),
        }
    }

    pub fn pretty(&self) -> String {
        match self {
            Spectrum::Int(p) => p.to_string(),
            Spectrum::Rat(p) => p.to_string(),
        }
    }
}

impl OutputRecord {
    pub fn new(n: &BigUint, p: u64, k: usize, spectrum: &Spectrum, evals: &[BigRational]) -> Self {
        let evaluations = (!evals.is_empty()).then(|| {
            evals
                .iter()
                .map(|x| (x.to_string(), spectrum.eval(x).to_string()))
                .collect()
        });
        OutputRecord {
            n: n.to_string(),
            p,
            k,
            coeffs: spectrum.coeff_strings(),
            evaluations,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// `n,p,k,degree,coeff_0,…` with every row padded to the widest record.
pub fn to_csv(records: &[OutputRecord]) -> String {
    let width = records
        .iter()
        .map(|r| r.coeffs.len())
        .max()
        .unwrap_or(0)
        .max(1);
    let mut out = String::from("n,p,k,degree");
    for i in 0..width {
        write!(out, ",coeff_{i}").unwrap();
    }
    out.push('\n');
    for r in records {
        let degree = r
            .coeffs
            .len()
            .checked_sub(1)
            .map_or_else(|| "-inf".to_string(), |d| d.to_string());
        write!(out, "{},{},{},{degree}", r.n, r.p, r.k).unwrap();
        for i in 0..width {
            out.push(',');
            out.push_str(r.coeffs.get(i).map_or("0", String::as_str));
        }
        out.push('\n');
    }
    out
}
