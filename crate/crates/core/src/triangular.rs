//! Triangular decompositions `A = A^- (x) T (x) A^+`, the PBW transport and Borel subalgebras.

use crate::algebra::{jacobson_radical, lift_idempotents, GradedAlgebra, RingError};
use crate::field::Scalar;
use crate::linalg::{is_zero_vec, CoordBasis, Matrix, Subspace, Vector};
use crate::modrep::{hom_space, GradedModule};
use serde::Serialize;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct TriangularReport {
    pub items: Vec<CheckItem>,
    /// "complete", "assumed" (non-semisimple T) or "incomplete"
    pub irr_completeness: String,
    pub semisimple_t: bool,
}

impl TriangularReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem { name: name.into(), passed, detail: detail.into() });
    }

    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items.iter().filter(|i| !i.passed).collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TriangularError {
    #[error("not a triangular decomposition: {}", .0.failures().iter().map(|i| format!("{} ({})", i.name, i.detail)).collect::<Vec<_>>().join("; "))]
    Invalid(TriangularReport),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug)]
pub struct TriangularDecomposition {
    alg: GradedAlgebra,
    minus: Vec<Vector>,
    torus: Vec<Vector>,
    plus: Vec<Vector>,
    t_alg: GradedAlgebra,
    irr: Vec<GradedModule>,
    labels: Vec<String>,
    semisimple_t: bool,
    /// column `l` of the inverse PBW matrix, sparse
    pbw_inv_cols: Vec<Vec<(usize, Scalar)>>,
    t_idempotents: Vec<Vector>,
    induction: OnceLock<Vec<Vec<(usize, usize, Scalar)>>>,
}

impl Clone for TriangularDecomposition {
    fn clone(&self) -> Self {
        TriangularDecomposition {
            alg: self.alg.clone(),
            minus: self.minus.clone(),
            torus: self.torus.clone(),
            plus: self.plus.clone(),
            t_alg: self.t_alg.clone(),
            irr: self.irr.clone(),
            labels: self.labels.clone(),
            semisimple_t: self.semisimple_t,
            pbw_inv_cols: self.pbw_inv_cols.clone(),
            t_idempotents: self.t_idempotents.clone(),
            induction: OnceLock::new(),
        }
    }
}

/// `[1] + homogeneous nonzero-degree basis`, sorted by `|degree|`; `None` if the span is not graded
/// or its degree-0 part is not the unit line.
fn normalize_side(alg: &GradedAlgebra, vecs: &[Vector]) -> Result<Vec<Vector>, String> {
    let s = Subspace::from_vectors(alg.field(), alg.dim(), vecs.iter().cloned());
    let mut out: Vec<(i32, Vector)> = Vec::new();
    let mut zero_count = 0;
    for v in s.basis() {
        let d = alg.homogeneous_degree(v).ok_or_else(|| "span is not graded".to_string())?;
        if d == 0 {
            zero_count += 1;
        } else {
            out.push((d, v.clone()));
        }
    }
    if zero_count != 1 || !s.contains(alg.unit()) {
        return Err(format!("degree-0 part has dimension {} and must be the unit line", zero_count));
    }
    out.sort_by_key(|(d, _)| d.abs());
    let mut basis = vec![alg.unit().clone()];
    basis.extend(out.into_iter().map(|(_, v)| v));
    Ok(basis)
}

fn products(alg: &GradedAlgebra, a: &[Vector], b: &[Vector], c: &[Vector]) -> Vec<Vector> {
    let mut out = Vec::with_capacity(a.len() * b.len() * c.len());
    for x in a {
        for y in b {
            let xy = alg.mul(x, y);
            for z in c {
                out.push(alg.mul(&xy, z));
            }
        }
    }
    out
}

fn span_products(alg: &GradedAlgebra, a: &[Vector], b: &[Vector]) -> Subspace {
    let mut s = Subspace::zero(alg.field(), alg.dim());
    for x in a {
        for y in b {
            s.insert(alg.mul(x, y));
        }
    }
    s
}

fn is_subalgebra(alg: &GradedAlgebra, basis: &[Vector]) -> bool {
    let s = Subspace::from_vectors(alg.field(), alg.dim(), basis.iter().cloned());
    s.contains(alg.unit()) && basis.iter().all(|x| basis.iter().all(|y| s.contains(&alg.mul(x, y))))
}

/// Checks every axiom of a triangular decomposition for the candidate, with `irr` giving
/// one action matrix per torus basis vector for each simple `T`-module.
pub fn verify_triangular(alg: &GradedAlgebra, minus: &[Vector], torus: &[Vector], plus: &[Vector], irr: &[Vec<Matrix>]) -> TriangularReport {
    let mut rep = TriangularReport::default();
    let field = alg.field();
    let n = alg.dim();
    let m = normalize_side(alg, minus);
    let p = normalize_side(alg, plus);
    rep.push("A^-_0 = K", m.is_ok(), m.as_ref().err().cloned().unwrap_or_default());
    rep.push("A^+_0 = K", p.is_ok(), p.as_ref().err().cloned().unwrap_or_default());
    let (Ok(m), Ok(p)) = (m, p) else { return rep };

    let bad_minus: Vec<i32> = m.iter().filter_map(|v| alg.homogeneous_degree(v)).filter(|&d| d > 0).collect();
    let bad_plus: Vec<i32> = p.iter().filter_map(|v| alg.homogeneous_degree(v)).filter(|&d| d < 0).collect();
    let bad_t: Vec<Option<i32>> = torus.iter().map(|v| alg.homogeneous_degree(v)).filter(|d| *d != Some(0)).collect();
    rep.push("Supp A^- <= 0", bad_minus.is_empty(), format!("{:?}", bad_minus));
    rep.push("Supp A^+ >= 0", bad_plus.is_empty(), format!("{:?}", bad_plus));
    rep.push("Supp T = {0}", bad_t.is_empty(), format!("{:?}", bad_t));
    let t_indep = Subspace::from_vectors(field, n, torus.iter().cloned()).dim() == torus.len();
    rep.push("T basis independent", t_indep, "");
    for (name, b) in [("A^- subalgebra", &m), ("T subalgebra", &torus.to_vec()), ("A^+ subalgebra", &p)] {
        rep.push(name, is_subalgebra(alg, b), "");
    }

    let tensor = m.len() * torus.len() * p.len();
    let bij = tensor == n && Matrix::from_cols(field, &products(alg, &m, torus, &p), n).rank() == n;
    rep.push("multiplication map bijective", bij, format!("dim A^- * dim T * dim A^+ = {} vs dim A = {}", tensor, n));

    rep.push("A^+ T = T A^+", span_products(alg, &p, torus) == span_products(alg, torus, &p), "");
    rep.push("A^- T = T A^-", span_products(alg, &m, torus) == span_products(alg, torus, &m), "");

    let Some(t_alg) = (t_indep && is_subalgebra(alg, torus)).then(|| alg.restrict_to(torus)).flatten() else {
        return rep;
    };
    let mods: Vec<GradedModule> = irr.iter().map(|a| GradedModule::new(field, vec![0; a[0].rows()], a.clone())).collect();
    let mut sum_sq = 0;
    for (k, l) in mods.iter().enumerate() {
        let ok = irr[k].len() == torus.len() && l.verify(&t_alg).passed();
        rep.push(&format!("irr_T[{}] is a T-module", k), ok, "");
        if !ok {
            return rep;
        }
        let end = hom_space(&t_alg, l, l, 0).len();
        rep.push(&format!("End_T(irr_T[{}]) = K", k), end == 1, format!("commutant dimension {}", end));
        let img = Subspace::from_vectors(field, l.dim() * l.dim(), l.actions().iter().map(flatten));
        rep.push(&format!("irr_T[{}] absolutely irreducible", k), img.dim() == l.dim() * l.dim(), "");
        for (k2, l2) in mods.iter().enumerate().take(k) {
            let h = hom_space(&t_alg, l2, l, 0).len();
            rep.push(&format!("irr_T[{}] != irr_T[{}]", k2, k), h == 0, "");
        }
        sum_sq += l.dim() * l.dim();
    }
    rep.semisimple_t = sum_sq == torus.len();
    rep.irr_completeness = if rep.semisimple_t {
        "complete".into()
    } else {
        "assumed".into()
    };
    rep.push("irr_T nonempty", !mods.is_empty(), "");
    rep
}

fn flatten(m: &Matrix) -> Vector {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Minus,
    Plus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelData {
    pub sign: Sign,
    /// `a_i t_j`, index `i * dim T + j`
    pub basis: Vec<Vector>,
    pub augmentation: Vec<Vector>,
    /// `B -> T` in torus coordinates, `dim T x dim B`
    pub projection: Matrix,
}

impl TriangularDecomposition {
    pub fn new(
        alg: GradedAlgebra,
        minus: &[Vector],
        torus: &[Vector],
        plus: &[Vector],
        irr: &[Vec<Matrix>],
        labels: Option<Vec<String>>,
    ) -> Result<TriangularDecomposition, TriangularError> {
        let rep = verify_triangular(&alg, minus, torus, plus, irr);
        if !rep.passed() {
            return Err(TriangularError::Invalid(rep));
        }
        let field = alg.field();
        let n = alg.dim();
        let minus = normalize_side(&alg, minus).unwrap();
        let plus = normalize_side(&alg, plus).unwrap();
        let torus = torus.to_vec();
        let t_alg = alg.restrict_to(&torus).unwrap();
        let irr: Vec<GradedModule> = irr.iter().map(|a| GradedModule::new(field, vec![0; a[0].rows()], a.clone())).collect();
        let pbw = Matrix::from_cols(field, &products(&alg, &minus, &torus, &plus), n);
        let inv = pbw.inverse().expect("verified bijective");
        let pbw_inv_cols = (0..n)
            .map(|l| inv.col(l).into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        let jt = jacobson_radical(&t_alg, &irr)?;
        let lifted = lift_idempotents(&t_alg, &jt, &irr)?;
        let t_idempotents = (0..irr.len())
            .map(|k| {
                let e = &lifted.iter().find(|l| l.label == k && l.unit_index == 0).unwrap().elem;
                crate::linalg::combine(field, n, &torus, e)
            })
            .collect();
        let labels = labels.unwrap_or_else(|| (0..irr.len()).map(|k| k.to_string()).collect());
        assert_eq!(labels.len(), irr.len());
        Ok(TriangularDecomposition {
            alg,
            minus,
            torus,
            plus,
            t_alg,
            irr,
            labels,
            semisimple_t: rep.semisimple_t,
            pbw_inv_cols,
            t_idempotents,
            induction: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.alg
    }

    pub fn minus(&self) -> &[Vector] {
        &self.minus
    }

    pub fn torus(&self) -> &[Vector] {
        &self.torus
    }

    pub fn plus(&self) -> &[Vector] {
        &self.plus
    }

    pub fn torus_algebra(&self) -> &GradedAlgebra {
        &self.t_alg
    }

    pub fn irr(&self) -> &[GradedModule] {
        &self.irr
    }

    pub fn num_labels(&self) -> usize {
        self.irr.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn semisimple_t(&self) -> bool {
        self.semisimple_t
    }

    /// Idempotent of `T` (in algebra coordinates) lifting a rank-one matrix unit of each simple.
    pub fn torus_idempotents(&self) -> &[Vector] {
        &self.t_idempotents
    }

    pub fn tensor_index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.torus.len() + j) * self.plus.len() + k
    }

    pub fn tensor_split(&self, idx: usize) -> (usize, usize, usize) {
        let np = self.plus.len();
        let nt = self.torus.len();
        (idx / (nt * np), (idx / np) % nt, idx % np)
    }

    /// Unique coordinates of `a` over the basis `a^-_i t_j a^+_k`.
    pub fn pbw_coords(&self, a: &[Scalar]) -> Vector {
        let field = self.alg.field();
        let mut out = crate::linalg::zero_vec(field, self.alg.dim());
        for (l, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, c) in &self.pbw_inv_cols[l] {
                out[*r].add_mul(x, c);
            }
        }
        out
    }

    pub fn pbw_element(&self, i: usize, j: usize, k: usize) -> Vector {
        self.alg.mul(&self.alg.mul(&self.minus[i], &self.torus[j]), &self.plus[k])
    }

    /// Entries `(i', j, c)` with `b_k a^-_i = sum c a^-_{i'} t_j + (terms with nontrivial A^+ part)`,
    /// at position `k * dim A^- + i`.
    pub fn induction_table(&self) -> &[Vec<(usize, usize, Scalar)>] {
        self.induction.get_or_init(|| {
            let nm = self.minus.len();
            let mut out = Vec::with_capacity(self.alg.dim() * nm);
            for k in 0..self.alg.dim() {
                for a in &self.minus {
                    let prod = self.alg.mul_basis_left(k, a);
                    let c = self.pbw_coords(&prod);
                    let mut row = Vec::new();
                    for (idx, x) in c.into_iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        let (i2, j, l) = self.tensor_split(idx);
                        if l == 0 {
                            row.push((i2, j, x));
                        }
                    }
                    out.push(row);
                }
            }
            out
        })
    }

    /// Whether `A^+ (x) T (x) A^- -> A` is also bijective; otherwise a kernel vector over that tensor basis.
    pub fn ambidexterity_check(&self) -> Result<(), Vector> {
        let n = self.alg.dim();
        let cols = products(&self.alg, &self.plus, &self.torus, &self.minus);
        let m = Matrix::from_cols(self.alg.field(), &cols, n);
        let ker = m.kernel();
        match ker.basis().first() {
            None => Ok(()),
            Some(w) => Err(w.clone()),
        }
    }

    pub fn borel(&self, sign: Sign) -> BorelData {
        let field = self.alg.field();
        let side = match sign {
            Sign::Minus => &self.minus,
            Sign::Plus => &self.plus,
        };
        let nt = self.torus.len();
        let mut basis = Vec::new();
        let mut augmentation = Vec::new();
        let mut projection = Matrix::zeros(field, nt, side.len() * nt);
        for (i, a) in side.iter().enumerate() {
            for (j, t) in self.torus.iter().enumerate() {
                let v = self.alg.mul(a, t);
                if i == 0 {
                    projection.set(j, i * nt + j, field.one());
                } else {
                    augmentation.push(v.clone());
                }
                basis.push(v);
            }
        }
        BorelData { sign, basis, augmentation, projection }
    }

    /// `t a` for `a` in `A^±`, rewritten over the basis `a_i t_j` of the Borel subalgebra.
    pub fn braiding(&self, sign: Sign, t: usize, a: usize) -> Vec<(usize, usize, Scalar)> {
        let b = self.borel(sign);
        let nt = self.torus.len();
        let side = match b.sign {
            Sign::Minus => &self.minus,
            Sign::Plus => &self.plus,
        };
        let cb = CoordBasis::new(self.alg.field(), self.alg.dim(), b.basis.clone());
        let prod = self.alg.mul(&self.torus[t], &side[a]);
        cb.coords(&prod)
            .expect("Borel subalgebra not closed")
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(idx, x)| (idx / nt, idx % nt, x))
            .collect()
    }

    /// `((A^+)^op, T^op, (A^-)^op)` over the opposite algebra, with dual simples in the same order.
    pub fn opposite(&self) -> TriangularDecomposition {
        let op = self.alg.opposite();
        let irr: Vec<Vec<Matrix>> = self.irr.iter().map(|l| l.dual().actions().to_vec()).collect();
        TriangularDecomposition::new(op, &self.plus, &self.torus, &self.minus, &irr, Some(self.labels.clone()))
            .expect("opposite of a triangular decomposition is triangular")
    }

    /// Degree of each `A^-` basis vector.
    pub fn minus_degrees(&self) -> Vec<i32> {
        self.minus.iter().map(|v| self.alg.homogeneous_degree(v).unwrap_or(0)).collect()
    }

    pub fn plus_degrees(&self) -> Vec<i32> {
        self.plus.iter().map(|v| self.alg.homogeneous_degree(v).unwrap_or(0)).collect()
    }

    /// The `A^-` or `A^+` side as an algebra in its own right.
    pub fn side_algebra(&self, sign: Sign) -> GradedAlgebra {
        let b = match sign {
            Sign::Minus => &self.minus,
            Sign::Plus => &self.plus,
        };
        self.alg.restrict_to(b).expect("side is a subalgebra")
    }

    pub fn is_zero_elem(&self, v: &[Scalar]) -> bool {
        is_zero_vec(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::pathological;
    use crate::field::Field;
    use crate::linalg::unit_vec;

    fn trivial_irr(field: Field) -> Vec<Vec<Matrix>> {
        vec![vec![Matrix::identity(field, 1)]]
    }

    #[test]
    fn pathological_is_triangular_not_ambidextrous() {
        let q = Field::Rational;
        let a = pathological(q);
        let e = |i| unit_vec(q, 4, i);
        let td = TriangularDecomposition::new(a, &[e(0), e(1)], &[e(0)], &[e(0), e(2)], &trivial_irr(q), None).unwrap();
        let w = td.ambidexterity_check().unwrap_err();
        // y (x) 1 (x) x
        let mut expect = crate::linalg::zero_vec(q, 4);
        expect[td.tensor_index(1, 0, 1)] = q.one();
        assert_eq!(w, expect);
        let xy = unit_vec(q, 4, 3);
        let c = td.pbw_coords(&xy);
        assert_eq!(c, unit_vec(q, 4, td.tensor_index(1, 0, 1)));
        let op = td.opposite();
        assert_eq!(op.opposite().algebra(), td.algebra());
    }

    #[test]
    fn wrong_dimension_fails() {
        let q = Field::Rational;
        let a = pathological(q);
        let e = |i| unit_vec(q, 4, i);
        let rep = verify_triangular(&a, &[e(0), e(1)], &[e(0)], &[e(0), e(1), e(2)], &trivial_irr(q));
        assert!(!rep.passed());
    }
}
