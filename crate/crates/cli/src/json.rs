//! JSON forms of symmetric functions, class functions and combinatorial
//! objects. Rationals are always written as `"num/den"` strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use shpf_core::characters::{ClassFunction, ClassValues};
use shpf_core::parking::SortedNaiveShifted;
use shpf_core::shifted::{matching_path, Garage, Matching, SortedOddShifted};
use shpf_core::{Partition, Rational, Sqrt2Rational, SymFunc, TPoly, TSymFunc};

use crate::error::CliError;

pub fn rational_to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Format(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((num, den)) => (num, den),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn partition_from_parts(parts: &[usize]) -> Result<Partition, CliError> {
    Partition::new(parts.to_vec()).map_err(|e| CliError::Format(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermValue {
    Coeff(String),
    Poly(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub partition: Vec<usize>,
    #[serde(flatten)]
    pub value: TermValue,
}

/// `{"degree": n, "basis": "p" | "v", "terms": [...]}` with terms in the
/// fixed partition order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub degree: usize,
    pub basis: String,
    pub terms: Vec<Term>,
}

impl SymFuncJson {
    pub fn from_coefficients(degree: usize, basis: &str, coeffs: &BTreeMap<Partition, Rational>) -> Self {
        let terms = coeffs
            .iter()
            .filter(|(_, c)| c.numer() != &BigInt::from(0))
            .map(|(l, c)| Term { partition: l.parts().to_vec(), value: TermValue::Coeff(rational_to_string(c)) })
            .collect();
        SymFuncJson { degree, basis: basis.to_string(), terms }
    }

    pub fn coefficients(&self) -> Result<BTreeMap<Partition, Rational>, CliError> {
        self.terms
            .iter()
            .map(|t| match &t.value {
                TermValue::Coeff(c) => Ok((partition_from_parts(&t.partition)?, parse_rational(c)?)),
                TermValue::Poly(_) => Err(CliError::Format("expected coefficients, found a polynomial".into())),
            })
            .collect()
    }

    pub fn polynomials(&self) -> Result<BTreeMap<Partition, TPoly>, CliError> {
        self.terms
            .iter()
            .map(|t| match &t.value {
                TermValue::Poly(cs) => {
                    let coeffs = cs.iter().map(|c| parse_rational(c)).collect::<Result<_, _>>()?;
                    Ok((partition_from_parts(&t.partition)?, TPoly::from_coeffs(coeffs)))
                }
                TermValue::Coeff(_) => Err(CliError::Format("expected a polynomial, found a coefficient".into())),
            })
            .collect()
    }
}

impl From<&SymFunc> for SymFuncJson {
    fn from(f: &SymFunc) -> Self {
        SymFuncJson::from_coefficients(f.degree(), "p", f.coeffs())
    }
}

impl From<&TSymFunc> for SymFuncJson {
    fn from(f: &TSymFunc) -> Self {
        let terms = f
            .coeffs()
            .iter()
            .map(|(l, poly)| Term {
                partition: l.parts().to_vec(),
                value: TermValue::Poly(poly.coeffs().iter().map(rational_to_string).collect()),
            })
            .collect();
        SymFuncJson { degree: f.degree(), basis: "p".into(), terms }
    }
}

impl TryFrom<&SymFuncJson> for SymFunc {
    type Error = CliError;

    fn try_from(json: &SymFuncJson) -> Result<Self, CliError> {
        if json.basis != "p" {
            return Err(CliError::Format(format!("expected basis \"p\", found {:?}", json.basis)));
        }
        SymFunc::from_terms(json.degree, json.coefficients()?).map_err(|e| CliError::Format(e.to_string()))
    }
}

impl TryFrom<&SymFuncJson> for TSymFunc {
    type Error = CliError;

    fn try_from(json: &SymFuncJson) -> Result<Self, CliError> {
        let polys = json.polynomials()?;
        if let Some(l) = polys.keys().find(|l| l.size() != json.degree) {
            return Err(CliError::Format(format!("partition {l} has the wrong size")));
        }
        Ok(TSymFunc::from_terms(json.degree, polys))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassValueJson {
    Ordinary(String),
    /// `[a, b]` meaning `a + b√2`.
    Spin([String; 2]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    #[serde(rename = "type")]
    pub cycle_type: Vec<usize>,
    pub value: ClassValueJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunctionJson {
    pub degree: usize,
    pub kind: String,
    pub values: Vec<ClassEntry>,
}

impl From<&ClassFunction> for ClassFunctionJson {
    fn from(chi: &ClassFunction) -> Self {
        let values = match chi.values() {
            ClassValues::Ordinary(v) => v
                .iter()
                .map(|(l, x)| ClassEntry {
                    cycle_type: l.parts().to_vec(),
                    value: ClassValueJson::Ordinary(rational_to_string(x)),
                })
                .collect(),
            ClassValues::Spin(v) => v
                .iter()
                .map(|(l, x)| ClassEntry {
                    cycle_type: l.parts().to_vec(),
                    value: ClassValueJson::Spin([rational_to_string(&x.a), rational_to_string(&x.b)]),
                })
                .collect(),
        };
        ClassFunctionJson { degree: chi.degree(), kind: chi.kind().to_string(), values }
    }
}

impl TryFrom<&ClassFunctionJson> for ClassFunction {
    type Error = CliError;

    fn try_from(json: &ClassFunctionJson) -> Result<Self, CliError> {
        let core = |e: shpf_core::Error| CliError::Format(e.to_string());
        match json.kind.as_str() {
            "ordinary" => {
                let mut values = BTreeMap::new();
                for entry in &json.values {
                    let ClassValueJson::Ordinary(v) = &entry.value else {
                        return Err(CliError::Format("spin value in an ordinary class function".into()));
                    };
                    values.insert(partition_from_parts(&entry.cycle_type)?, parse_rational(v)?);
                }
                ClassFunction::ordinary(json.degree, values).map_err(core)
            }
            "spin" => {
                let mut values = BTreeMap::new();
                for entry in &json.values {
                    let ClassValueJson::Spin([a, b]) = &entry.value else {
                        return Err(CliError::Format("ordinary value in a spin class function".into()));
                    };
                    let v = Sqrt2Rational::new(parse_rational(a)?, parse_rational(b)?);
                    values.insert(partition_from_parts(&entry.cycle_type)?, v);
                }
                ClassFunction::spin(json.degree, values).map_err(core)
            }
            other => Err(CliError::Format(format!("unknown class function kind {other:?}"))),
        }
    }
}

/// `{"p": [...], "sbar": [...], "tau": [[i, k], ...]}`, with `tau` omitted
/// for plain sorted naive objects and `path` given for matching paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectJson {
    pub p: Vec<usize>,
    pub sbar: Vec<i8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tau: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub path: Option<String>,
}

fn arcs(m: &Matching) -> Vec<[usize; 2]> {
    m.arcs().iter().map(|&(i, k)| [i, k]).collect()
}

impl ObjectJson {
    pub fn naive(x: &SortedNaiveShifted) -> Self {
        ObjectJson { p: x.p().entries().to_vec(), sbar: x.sbar().to_vec(), tau: None, path: None }
    }

    pub fn with_path(x: &SortedNaiveShifted) -> Self {
        ObjectJson { path: Some(matching_path(x).to_string()), ..ObjectJson::naive(x) }
    }

    pub fn garage(g: &Garage) -> Self {
        ObjectJson { tau: Some(arcs(&g.matching())), ..ObjectJson::naive(g.as_naive()) }
    }

    pub fn odd(y: &SortedOddShifted) -> Self {
        ObjectJson { p: y.p().entries().to_vec(), sbar: y.sbar().to_vec(), tau: Some(arcs(y.tau())), path: None }
    }

    pub fn to_odd(&self) -> Result<SortedOddShifted, CliError> {
        let arcs = self.tau.iter().flatten().map(|&[i, k]| (i, k)).collect();
        SortedOddShifted::from_parts(self.p.clone(), self.sbar.clone(), arcs)
            .map_err(|e| CliError::Format(e.to_string()))
    }

    pub fn to_naive(&self) -> Result<SortedNaiveShifted, CliError> {
        SortedNaiveShifted::from_parts(self.p.clone(), self.sbar.clone()).map_err(|e| CliError::Format(e.to_string()))
    }
}
