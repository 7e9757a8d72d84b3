//! JSON algebra spec files: structure constants plus optional triangular data, `Irr(T)` and `τ`.

use crate::algebra::{dense_to_sparse, GradedAlgebra, SparseVec};
use crate::field::Field;
use crate::klres::CIPresentation;
use crate::linalg::{zero_vec, Matrix, Vector};
use crate::zoo::{Bundle, TriangularData};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("JSON error at line {line}, column {column}: {msg}")]
    Json { line: usize, column: usize, msg: String },
    #[error("field `{field}`: {msg}")]
    Invalid { field: String, msg: String },
}

fn invalid(field: impl Into<String>, msg: impl Into<String>) -> SpecError {
    SpecError::Invalid { field: field.into(), msg: msg.into() }
}

/// Sparse vector `{index: coefficient}`.
pub type SparseSpec = BTreeMap<usize, String>;

/// A basis given either by indices of algebra basis vectors or by explicit sparse vectors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BasisSpec {
    Indices(Vec<usize>),
    Vectors(Vec<SparseSpec>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriangularSpec {
    pub minus: BasisSpec,
    pub torus: BasisSpec,
    pub plus: BasisSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IrrSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// one matrix per torus basis vector, row-major
    pub action: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrobeniusHintSpec {
    pub degree: i32,
    pub functional: SparseSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecFile {
    pub schema: u32,
    #[serde(default)]
    pub name: String,
    pub field: String,
    pub dim: usize,
    pub degrees: Vec<i32>,
    pub unit: SparseSpec,
    /// nonzero products `[i, j, {k: coeff}]`
    pub structure: Vec<(usize, usize, SparseSpec)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangular: Option<TriangularSpec>,
    #[serde(default, rename = "irr_T", skip_serializing_if = "Option::is_none")]
    pub irr_t: Option<Vec<IrrSpec>>,
    /// `τ(b_i)` for each basis vector
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anti_involution: Option<Vec<SparseSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frobenius_hint: Option<FrobeniusHintSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ci_minus: Option<CIPresentation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ci_plus: Option<CIPresentation>,
}

fn sparse_out(v: &[crate::Scalar]) -> SparseSpec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.to_string())).collect()
}

fn sparse_in(field: Field, n: usize, s: &SparseSpec, name: &str) -> Result<Vector, SpecError> {
    let mut v = zero_vec(field, n);
    for (&i, c) in s {
        if i >= n {
            return Err(invalid(name, format!("index {i} out of range (dim {n})")));
        }
        v[i] = field.parse(c).map_err(|e| invalid(name, format!("coefficient `{c}`: {e}")))?;
    }
    Ok(v)
}

fn basis_in(field: Field, n: usize, b: &BasisSpec, name: &str) -> Result<Vec<Vector>, SpecError> {
    match b {
        BasisSpec::Indices(ix) => ix
            .iter()
            .map(|&i| {
                if i >= n {
                    Err(invalid(name, format!("index {i} out of range (dim {n})")))
                } else {
                    Ok(crate::linalg::unit_vec(field, n, i))
                }
            })
            .collect(),
        BasisSpec::Vectors(vs) => vs.iter().map(|s| sparse_in(field, n, s, name)).collect(),
    }
}

/// Index form when every vector is a standard basis vector.
fn basis_out(vs: &[Vector]) -> BasisSpec {
    let idx: Option<Vec<usize>> = vs
        .iter()
        .map(|v| {
            let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
            (nz.len() == 1 && v[nz[0]].is_one()).then(|| nz[0])
        })
        .collect();
    match idx {
        Some(i) => BasisSpec::Indices(i),
        None => BasisSpec::Vectors(vs.iter().map(|v| sparse_out(v)).collect()),
    }
}

impl SpecFile {
    pub fn from_bundle(b: &Bundle) -> SpecFile {
        let a = &b.algebra;
        let n = a.dim();
        let mut structure = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let p = a.product(i, j);
                if !p.is_empty() {
                    structure.push((i, j, p.iter().map(|(k, c)| (*k, c.to_string())).collect()));
                }
            }
        }
        let (triangular, irr_t) = match &b.triangular {
            None => (None, None),
            Some(t) => (
                Some(TriangularSpec { minus: basis_out(&t.minus), torus: basis_out(&t.torus), plus: basis_out(&t.plus) }),
                Some(
                    t.irr
                        .iter()
                        .zip(&t.labels)
                        .map(|(mats, label)| IrrSpec {
                            dim: mats.first().map_or(0, |m| m.rows()),
                            label: Some(label.clone()),
                            action: mats
                                .iter()
                                .map(|m| (0..m.rows()).map(|r| m.row(r).iter().map(|x| x.to_string()).collect()).collect())
                                .collect(),
                        })
                        .collect(),
                ),
            ),
        };
        SpecFile {
            schema: SCHEMA,
            name: b.name.clone(),
            field: a.field().descriptor(),
            dim: n,
            degrees: a.degrees().to_vec(),
            unit: sparse_out(a.unit()),
            structure,
            triangular,
            irr_t,
            anti_involution: b.anti_involution.as_ref().map(|t| (0..n).map(|i| sparse_out(&t.col(i))).collect()),
            frobenius_hint: b.frobenius_hint.as_ref().map(|(d, v)| FrobeniusHintSpec { degree: *d, functional: sparse_out(v) }),
            ci_minus: b.ci_minus.clone(),
            ci_plus: b.ci_plus.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<SpecFile, SpecError> {
        serde_json::from_str(text).map_err(|e| SpecError::Json { line: e.line(), column: e.column(), msg: e.to_string() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    pub fn to_bundle(&self) -> Result<Bundle, SpecError> {
        if self.schema != SCHEMA {
            return Err(invalid("schema", format!("unsupported version {}", self.schema)));
        }
        let field = Field::parse_descriptor(&self.field).map_err(|e| invalid("field", e.to_string()))?;
        let n = self.dim;
        if self.degrees.len() != n {
            return Err(invalid("degrees", format!("expected {n} entries, found {}", self.degrees.len())));
        }
        let unit = sparse_in(field, n, &self.unit, "unit")?;
        let mut table: Vec<SparseVec> = vec![Vec::new(); n * n];
        for (pos, (i, j, s)) in self.structure.iter().enumerate() {
            let name = format!("structure[{pos}]");
            if *i >= n || *j >= n {
                return Err(invalid(name, format!("pair ({i}, {j}) out of range")));
            }
            table[i * n + j] = dense_to_sparse(&sparse_in(field, n, s, &name)?);
        }
        let algebra = GradedAlgebra::new(field, self.degrees.clone(), table, unit);
        let rep = algebra.verify();
        if !rep.passed() {
            return Err(invalid("structure", format!("algebra axioms fail: {:?}", rep)));
        }
        let triangular = match (&self.triangular, &self.irr_t) {
            (None, _) => None,
            (Some(_), None) => return Err(invalid("irr_T", "required with a triangular section")),
            (Some(t), Some(irr)) => {
                let torus = basis_in(field, n, &t.torus, "triangular.torus")?;
                let mut mats = Vec::new();
                let mut labels = Vec::new();
                for (l, s) in irr.iter().enumerate() {
                    let name = format!("irr_T[{l}]");
                    if s.action.len() != torus.len() {
                        return Err(invalid(name, format!("expected {} matrices, found {}", torus.len(), s.action.len())));
                    }
                    let mut ms = Vec::new();
                    for m in &s.action {
                        if m.len() != s.dim || m.iter().any(|r| r.len() != s.dim) {
                            return Err(invalid(&name, format!("matrices must be {0}x{0}", s.dim)));
                        }
                        let rows = m
                            .iter()
                            .map(|r| r.iter().map(|c| field.parse(c).map_err(|e| invalid(&name, format!("`{c}`: {e}")))).collect())
                            .collect::<Result<Vec<Vector>, _>>()?;
                        ms.push(Matrix::from_rows(field, &rows, s.dim));
                    }
                    mats.push(ms);
                    labels.push(s.label.clone().unwrap_or_else(|| l.to_string()));
                }
                Some(TriangularData {
                    minus: basis_in(field, n, &t.minus, "triangular.minus")?,
                    torus,
                    plus: basis_in(field, n, &t.plus, "triangular.plus")?,
                    irr: mats,
                    labels,
                })
            }
        };
        let anti_involution = match &self.anti_involution {
            None => None,
            Some(cols) => {
                if cols.len() != n {
                    return Err(invalid("anti_involution", format!("expected {n} columns")));
                }
                let cols = cols.iter().map(|c| sparse_in(field, n, c, "anti_involution")).collect::<Result<Vec<_>, _>>()?;
                Some(Matrix::from_cols(field, &cols, n))
            }
        };
        let frobenius_hint = match &self.frobenius_hint {
            None => None,
            Some(h) => Some((h.degree, sparse_in(field, n, &h.functional, "frobenius_hint")?)),
        };
        for (name, ci) in [("ci_minus", &self.ci_minus), ("ci_plus", &self.ci_plus)] {
            if let Some(ci) = ci {
                ci.validate().map_err(|e| invalid(name, e))?;
            }
        }
        Ok(Bundle {
            name: self.name.clone(),
            algebra,
            triangular,
            anti_involution,
            frobenius_hint,
            ci_minus: self.ci_minus.clone(),
            ci_plus: self.ci_plus.clone(),
        })
    }
}

pub fn load(text: &str) -> Result<Bundle, SpecError> {
    SpecFile::parse(text)?.to_bundle()
}

pub fn emit(b: &Bundle) -> String {
    SpecFile::from_bundle(b).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn round_trip() {
        for b in [
            zoo::truncated_square(2, Field::Rational).unwrap(),
            zoo::pathological4dim(Field::Rational),
            zoo::degenerate_triple(Field::prime(5)),
            zoo::restricted_sl2(3).unwrap(),
            zoo::rrca_cyclic(3, &[Field::cyclotomic(3).zeta(), Field::cyclotomic(3).one()]).unwrap(),
        ] {
            let text = emit(&b);
            let back = load(&text).unwrap();
            assert_eq!(back, b, "{}", b.name);
            assert_eq!(emit(&back), text);
        }
    }

    #[test]
    fn missing_unit_is_reported() {
        let mut v: serde_json::Value = serde_json::from_str(&emit(&zoo::pathological4dim(Field::Rational))).unwrap();
        v.as_object_mut().unwrap().remove("unit");
        let err = load(&v.to_string()).unwrap_err();
        assert!(err.to_string().contains("unit"), "{err}");
    }

    #[test]
    fn bad_coefficient_names_field() {
        let text = emit(&zoo::truncated_square(2, Field::Rational).unwrap()).replacen("\"1\"", "\"1/0x\"", 1);
        assert!(matches!(load(&text), Err(SpecError::Invalid { .. })));
    }
}
