//! Finite-dimensional graded algebras given by structure constants.

mod frobenius;
mod ring;

pub use frobenius::{frobenius_search, verify_frobenius, FrobeniusForm};
pub use ring::{
    block_partition, center, central_idempotents, ideal_generators, jacobson_radical, lift_idempotents, nilpotency_index, Block,
    LiftedIdempotent, RingError,
};

use crate::field::{Field, Scalar};
use crate::linalg::{axpy, is_zero_vec, unit_vec, zero_vec, CoordBasis, Matrix, Subspace, Vector};
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::OnceLock;

pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_to_dense(field: Field, n: usize, s: &[(usize, Scalar)]) -> Vector {
    let mut v = zero_vec(field, n);
    for (i, c) in s {
        v[*i].add_assign(c);
    }
    v
}

pub fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    field: Field,
    degrees: Vec<i32>,
    /// entry `i * n + j` holds `b_i * b_j`
    table: Vec<SparseVec>,
    unit: Vector,
    gens: OnceLock<Vec<usize>>,
}

impl PartialEq for GradedAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.degrees == o.degrees && self.table == o.table && self.unit == o.unit
    }
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct AlgebraReport {
    pub associativity_failures: Vec<(usize, usize, usize)>,
    pub unit_failures: Vec<usize>,
    pub grading_failures: Vec<(usize, usize)>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.associativity_failures.is_empty() && self.unit_failures.is_empty() && self.grading_failures.is_empty()
    }
}

const WITNESS_CAP: usize = 16;

impl GradedAlgebra {
    pub fn new(field: Field, degrees: Vec<i32>, table: Vec<SparseVec>, unit: Vector) -> GradedAlgebra {
        let n = degrees.len();
        assert_eq!(table.len(), n * n, "structure table has wrong size");
        assert_eq!(unit.len(), n);
        let table = table
            .into_iter()
            .map(|mut s| {
                s.retain(|(_, c)| !c.is_zero());
                s.sort_by_key(|(k, _)| *k);
                s
            })
            .collect();
        GradedAlgebra { field, degrees, table, unit, gens: OnceLock::new() }
    }

    /// Builds the table from a product rule on basis indices.
    pub fn from_fn(field: Field, degrees: Vec<i32>, unit: Vector, mut f: impl FnMut(usize, usize) -> SparseVec) -> GradedAlgebra {
        let n = degrees.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(f(i, j));
            }
        }
        GradedAlgebra::new(field, degrees, table, unit)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn zero_elem(&self) -> Vector {
        zero_vec(self.field, self.dim())
    }

    pub fn basis_elem(&self, i: usize) -> Vector {
        unit_vec(self.field, self.dim(), i)
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn support(&self) -> BTreeSet<i32> {
        self.degrees.iter().copied().collect()
    }

    pub fn indices_of_degree(&self, d: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    /// Degree of a nonzero homogeneous element.
    pub fn homogeneous_degree(&self, v: &[Scalar]) -> Option<i32> {
        let mut d = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match d {
                None => d = Some(self.degrees[i]),
                Some(e) if e != self.degrees[i] => return None,
                _ => {}
            }
        }
        d
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut r = zero_vec(self.field, n);
        let bn: Vec<usize> = (0..n).filter(|&j| !b[j].is_zero()).collect();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for &j in &bn {
                let tab = self.product(i, j);
                if tab.is_empty() {
                    continue;
                }
                let ab = ai.mul(&b[j]);
                for (k, c) in tab {
                    r[*k].add_mul(&ab, c);
                }
            }
        }
        r
    }

    /// `b_i * v`
    pub fn mul_basis_left(&self, i: usize, v: &[Scalar]) -> Vector {
        let mut r = self.zero_elem();
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in self.product(i, j) {
                r[*k].add_mul(x, c);
            }
        }
        r
    }

    /// `v * b_j`
    pub fn mul_basis_right(&self, v: &[Scalar], j: usize) -> Vector {
        let mut r = self.zero_elem();
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in self.product(i, j) {
                r[*k].add_mul(x, c);
            }
        }
        r
    }

    /// Matrix of `v -> a v`.
    pub fn left_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul_basis_right(a, j)).collect();
        Matrix::from_cols(self.field, &cols, self.dim())
    }

    /// Matrix of `v -> v a`.
    pub fn right_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|i| {
            let mut r = self.zero_elem();
            for (j, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (k, c) in self.product(i, j) {
                    r[*k].add_mul(x, c);
                }
            }
            r
        }).collect();
        Matrix::from_cols(self.field, &cols, self.dim())
    }

    pub fn verify(&self) -> AlgebraReport {
        let n = self.dim();
        let mut rep = AlgebraReport::default();
        for i in 0..n {
            for j in 0..n {
                if self.product(i, j).iter().any(|(k, _)| self.degrees[*k] != self.degrees[i] + self.degrees[j])
                    && rep.grading_failures.len() < WITNESS_CAP
                {
                    rep.grading_failures.push((i, j));
                }
            }
        }
        for i in 0..n {
            let b = self.basis_elem(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                rep.unit_failures.push(i);
            }
        }
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    // (b_i b_j) b_k
                    let mut left = self.zero_elem();
                    for (m, c) in ij {
                        for (l, d) in self.product(*m, k) {
                            left[*l].add_mul(c, d);
                        }
                    }
                    // b_i (b_j b_k)
                    let mut right = self.zero_elem();
                    for (m, c) in self.product(j, k) {
                        for (l, d) in self.product(i, *m) {
                            right[*l].add_mul(c, d);
                        }
                    }
                    if left != right {
                        rep.associativity_failures.push((i, j, k));
                        if rep.associativity_failures.len() >= WITNESS_CAP {
                            break 'outer;
                        }
                    }
                }
            }
        }
        rep
    }

    /// Same basis, negated degrees, reversed products.
    pub fn opposite(&self) -> GradedAlgebra {
        let n = self.dim();
        let degrees = self.degrees.iter().map(|d| -d).collect();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(self.product(j, i).clone());
            }
        }
        GradedAlgebra::new(self.field, degrees, table, self.unit.clone())
    }

    /// Smallest unital subalgebra containing `gens`.
    pub fn subalgebra_closure(&self, gens: &[Vector]) -> Subspace {
        let mut s = Subspace::from_vectors(self.field, self.dim(), vec![self.unit.clone()]);
        let mut queue: Vec<Vector> = vec![self.unit.clone()];
        for g in gens {
            if s.insert(g.clone()) {
                queue.push(g.clone());
            }
        }
        let gens: Vec<Vector> = gens.iter().filter(|g| !is_zero_vec(g)).cloned().collect();
        // words in the generators; right multiplication by generators suffices
        while let Some(v) = queue.pop() {
            for g in &gens {
                let w = self.mul(&v, g);
                if s.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        s
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn two_sided_ideal(&self, gens: &[Vector]) -> Subspace {
        self.ideal_closure(gens, true, true)
    }

    pub fn left_ideal(&self, gens: &[Vector]) -> Subspace {
        self.ideal_closure(gens, true, false)
    }

    pub fn right_ideal(&self, gens: &[Vector]) -> Subspace {
        self.ideal_closure(gens, false, true)
    }

    fn ideal_closure(&self, gens: &[Vector], left: bool, right: bool) -> Subspace {
        let n = self.dim();
        let mut s = Subspace::zero(self.field, n);
        let mut queue = Vec::new();
        for g in gens {
            if s.insert(g.clone()) {
                queue.push(g.clone());
            }
        }
        let algebra_gens = self.generators().to_vec();
        while let Some(v) = queue.pop() {
            for &i in &algebra_gens {
                if left {
                    let w = self.mul_basis_left(i, &v);
                    if s.insert(w.clone()) {
                        queue.push(w);
                    }
                }
                if right {
                    let w = self.mul_basis_right(&v, i);
                    if s.insert(w.clone()) {
                        queue.push(w);
                    }
                }
            }
        }
        s
    }

    /// Product `I * J` of two subspaces.
    pub fn subspace_product(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut s = Subspace::zero(self.field, self.dim());
        for x in a.basis() {
            for y in b.basis() {
                s.insert(self.mul(x, y));
            }
        }
        s
    }

    /// A set of basis indices generating the algebra, picked greedily by |degree|.
    pub fn generators(&self) -> &[usize] {
        self.gens.get_or_init(|| {
            let n = self.dim();
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&i| (self.degrees[i].abs(), i));
            let mut gens: Vec<usize> = Vec::new();
            let mut closure = self.subalgebra_closure(&[]);
            for i in order {
                if closure.dim() == n {
                    break;
                }
                let b = self.basis_elem(i);
                if closure.contains(&b) {
                    continue;
                }
                gens.push(i);
                let gv: Vec<Vector> = gens.iter().map(|&g| self.basis_elem(g)).collect();
                closure = self.subalgebra_closure(&gv);
            }
            // drop generators made redundant by later ones
            let mut k = 0;
            while k < gens.len() {
                let gv: Vec<Vector> = gens.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, &g)| self.basis_elem(g)).collect();
                if self.subalgebra_closure(&gv).dim() == n {
                    gens.remove(k);
                } else {
                    k += 1;
                }
            }
            gens
        })
    }

    /// Structure constants of the subalgebra spanned by `basis` (which must contain 1 and be closed).
    pub fn restrict_to(&self, basis: &[Vector]) -> Option<GradedAlgebra> {
        let n = self.dim();
        let cb = CoordBasis::try_new(self.field, n, basis.to_vec())?;
        let mut degrees = Vec::new();
        for v in basis {
            degrees.push(self.homogeneous_degree(v)?);
        }
        let k = basis.len();
        let mut table = Vec::with_capacity(k * k);
        for a in basis {
            for b in basis {
                let c = cb.coords(&self.mul(a, b))?;
                table.push(dense_to_sparse(&c));
            }
        }
        let unit = cb.coords(&self.unit)?;
        Some(GradedAlgebra::new(self.field, degrees, table, unit))
    }

    /// `A / I` on the complement basis of a graded two-sided ideal.
    pub fn quotient(&self, ideal: &Subspace) -> GradedAlgebra {
        let comp = ideal.complement_indices();
        let degrees: Vec<i32> = comp.iter().map(|&i| self.degrees[i]).collect();
        let mut table = Vec::with_capacity(comp.len() * comp.len());
        for &i in &comp {
            for &j in &comp {
                let v = sparse_to_dense(self.field, self.dim(), self.product(i, j));
                table.push(dense_to_sparse(&ideal.quotient_coords(&v)));
            }
        }
        let unit = ideal.quotient_coords(&self.unit);
        GradedAlgebra::new(self.field, degrees, table, unit)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// Linear combination `sum c_i b_i` of action matrices.
    pub fn combine_matrices(&self, mats: &[Matrix], a: &[Scalar]) -> Matrix {
        let (r, c) = (mats[0].rows(), mats[0].cols());
        let mut m = Matrix::zeros(self.field, r, c);
        for (x, mm) in a.iter().zip(mats) {
            m.add_scaled(x, mm);
        }
        m
    }

    /// `sum c_i v_i` as an algebra element
    pub fn elem_from_sparse(&self, s: &[(usize, Scalar)]) -> Vector {
        sparse_to_dense(self.field, self.dim(), s)
    }

    pub fn add_into(&self, acc: &mut Vector, a: &Scalar, v: &[Scalar]) {
        axpy(acc, a, v);
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// K[x]/(x^2), deg x = d
    pub fn dual_numbers(field: Field, d: i32) -> GradedAlgebra {
        GradedAlgebra::from_fn(field, vec![0, d], unit_vec(field, 2, 0), |i, j| match i + j {
            0 => vec![(0, field.one())],
            1 => vec![(1, field.one())],
            _ => vec![],
        })
    }

    /// K<x,y>/(x^2, yx, y^2) with basis 1, x, y, xy
    pub fn pathological(field: Field) -> GradedAlgebra {
        let one = field.one();
        GradedAlgebra::from_fn(field, vec![0, -1, 1, 0], unit_vec(field, 4, 0), |i, j| match (i, j) {
            (0, j) => vec![(j, one.clone())],
            (i, 0) => vec![(i, one.clone())],
            (1, 2) => vec![(3, one.clone())],
            _ => vec![],
        })
    }

    #[test]
    fn verify_small() {
        let q = Field::Rational;
        assert!(dual_numbers(q, -1).verify().passed());
        assert!(pathological(q).verify().passed());
        // x*x landing in degree -1 instead of -2
        let bad = GradedAlgebra::from_fn(q, vec![0, -1], unit_vec(q, 2, 0), |i, j| match (i, j) {
            (0, j) => vec![(j, q.one())],
            (i, 0) => vec![(i, q.one())],
            _ => vec![(1, q.one())],
        });
        let rep = bad.verify();
        assert_eq!(rep.grading_failures, vec![(1, 1)]);
    }

    #[test]
    fn opposite_of_pathological() {
        let q = Field::Rational;
        let a = pathological(q);
        let op = a.opposite();
        assert!(op.verify().passed());
        let x = a.basis_elem(1);
        let y = a.basis_elem(2);
        assert!(is_zero_vec(&op.mul(&x, &y)));
        assert_eq!(op.mul(&y, &x), a.basis_elem(3));
        assert!(is_zero_vec(&a.mul(&y, &x)));
        assert_eq!(op.opposite(), a);
        assert_eq!(op.degrees(), &[0, 1, -1, 0]);
    }

    #[test]
    fn closures() {
        let q = Field::Rational;
        let a = pathological(q);
        let unit_line = a.subalgebra_closure(&[a.unit().clone()]);
        assert_eq!(unit_line.dim(), 1);
        let x = a.basis_elem(1);
        let y = a.basis_elem(2);
        assert_eq!(a.subalgebra_closure(&[x.clone()]).dim(), 2);
        assert_eq!(a.subalgebra_closure(&[x.clone(), y.clone()]).dim(), 4);
        assert_eq!(a.two_sided_ideal(&[x.clone(), y.clone()]).dim(), 3);
        assert_eq!(a.two_sided_ideal(&[a.zero_elem()]).dim(), 0);
        assert_eq!(a.two_sided_ideal(&[a.unit().clone()]).dim(), 4);
        let gens: BTreeSet<usize> = a.generators().iter().copied().collect();
        assert_eq!(gens, BTreeSet::from([1, 2]));
    }
}
