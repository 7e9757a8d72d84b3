//! Radical, idempotent lifting, center and blocks, driven by explicit simple modules.

use super::GradedAlgebra;
use crate::linalg::{is_zero_vec, sub_vec, zero_vec, Matrix, Subspace, Vector};
use crate::modrep::GradedModule;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("simples incomplete: dim A/J = {quotient} but sum of squared simple dimensions is {expected}")]
    IncompleteSimples { quotient: usize, expected: usize },
    #[error("idempotent lift for simple {label} did not stabilise within {steps} Newton steps")]
    LiftDivergence { label: usize, steps: usize },
    #[error("matrix unit for simple {label} has no degree-0 preimage")]
    NoPreimage { label: usize },
}

/// Intersection of the annihilators of the given simples.
pub fn jacobson_radical(alg: &GradedAlgebra, simples: &[GradedModule]) -> Result<Subspace, RingError> {
    let m = entry_matrix(alg, simples, &(0..alg.dim()).collect::<Vec<_>>());
    let j = m.kernel();
    let expected: usize = simples.iter().map(|l| l.dim() * l.dim()).sum();
    let quotient = alg.dim() - j.dim();
    if quotient != expected {
        return Err(RingError::IncompleteSimples { quotient, expected });
    }
    Ok(j)
}

/// Rows: all matrix entries of all simples; columns: the selected algebra basis indices.
fn entry_matrix(alg: &GradedAlgebra, simples: &[GradedModule], cols: &[usize]) -> Matrix {
    let rows: usize = simples.iter().map(|l| l.dim() * l.dim()).sum();
    let mut m = Matrix::zeros(alg.field(), rows, cols.len());
    for (c, &k) in cols.iter().enumerate() {
        let mut r = 0;
        for l in simples {
            let a = l.action(k);
            for i in 0..l.dim() {
                for j in 0..l.dim() {
                    let x = a.get(i, j);
                    if !x.is_zero() {
                        m.set(r, c, x.clone());
                    }
                    r += 1;
                }
            }
        }
    }
    m
}

/// Greedy generators of the subspace `j` (an ideal) as a left or right ideal.
pub fn ideal_generators(alg: &GradedAlgebra, j: &Subspace, left: bool) -> Vec<Vector> {
    let mut basis: Vec<Vector> = j.basis().to_vec();
    basis.sort_by_key(|v| alg.homogeneous_degree(v).map(|d| d.abs()).unwrap_or(i32::MAX));
    let mut s = Subspace::zero(alg.field(), alg.dim());
    let mut gens = Vec::new();
    for v in basis {
        if s.contains(&v) {
            continue;
        }
        gens.push(v.clone());
        close_one_sided(alg, &mut s, vec![v], left);
    }
    gens
}

fn close_one_sided(alg: &GradedAlgebra, s: &mut Subspace, start: Vec<Vector>, left: bool) {
    let mut queue = Vec::new();
    for v in start {
        if s.insert(v.clone()) {
            queue.push(v);
        }
    }
    let ag = alg.generators().to_vec();
    while let Some(v) = queue.pop() {
        for &i in &ag {
            let w = if left { alg.mul_basis_left(i, &v) } else { alg.mul_basis_right(&v, i) };
            if s.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
}

/// Smallest `k` with `J^k = 0`.
pub fn nilpotency_index(alg: &GradedAlgebra, j: &Subspace) -> usize {
    let gens = ideal_generators(alg, j, false);
    let mut k = 1;
    let mut p = j.clone();
    while !p.is_zero() {
        // J^{k+1} = sum_g J^k g A
        let start: Vec<Vector> = p.basis().iter().flat_map(|x| gens.iter().map(move |g| alg.mul(x, g))).collect();
        let mut next = Subspace::zero(alg.field(), alg.dim());
        close_one_sided(alg, &mut next, start, false);
        p = next;
        k += 1;
        assert!(k <= alg.dim() + 2, "subspace is not nilpotent");
    }
    k
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftedIdempotent {
    pub elem: Vector,
    /// index of the simple module
    pub label: usize,
    /// which diagonal matrix unit of the simple it lifts
    pub unit_index: usize,
    pub degree_zero: bool,
}

fn newton_lift(alg: &GradedAlgebra, mut e: Vector, max_steps: usize) -> Option<Vector> {
    for _ in 0..=max_steps {
        let e2 = alg.mul(&e, &e);
        if e2 == e {
            return Some(e);
        }
        let e3 = alg.mul(&e2, &e);
        let f = alg.field();
        let three = f.from_i64(3);
        let two = f.from_i64(2);
        e = e2.iter().zip(&e3).map(|(a, b)| three.mul(a).sub(&two.mul(b))).collect();
    }
    None
}

fn ceil_log2(n: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

/// Complete orthogonal family of degree-0 primitive idempotents lifting the diagonal
/// matrix units of `A/J = prod End(L)`.
pub fn lift_idempotents(alg: &GradedAlgebra, radical: &Subspace, simples: &[GradedModule]) -> Result<Vec<LiftedIdempotent>, RingError> {
    let field = alg.field();
    let n = alg.dim();
    let deg0 = alg.indices_of_degree(0);
    let phi = entry_matrix(alg, simples, &deg0);
    let nil = nilpotency_index(alg, radical);
    let max_steps = ceil_log2(nil) + 2;
    let mut out: Vec<LiftedIdempotent> = Vec::new();
    let mut sum = zero_vec(field, n);
    let mut offset = 0;
    for (label, l) in simples.iter().enumerate() {
        let d = l.dim();
        for i in 0..d {
            let mut target = zero_vec(field, phi.rows());
            target[offset + i * d + i] = field.one();
            let x = phi.solve(&target).ok_or(RingError::NoPreimage { label })?;
            let mut a = zero_vec(field, n);
            for (c, &k) in deg0.iter().enumerate() {
                a[k] = x[c].clone();
            }
            let f = sub_vec(alg.unit(), &sum);
            let a = alg.mul(&alg.mul(&f, &a), &f);
            let e = newton_lift(alg, a, max_steps).ok_or(RingError::LiftDivergence { label, steps: max_steps })?;
            for (s, x) in sum.iter_mut().zip(&e) {
                s.add_assign(x);
            }
            let degree_zero = e.iter().enumerate().all(|(k, x)| x.is_zero() || alg.degree(k) == 0);
            out.push(LiftedIdempotent { elem: e, label, unit_index: i, degree_zero });
        }
        offset += d * d;
    }
    debug_assert_eq!(&sum, alg.unit());
    Ok(out)
}

/// `{z : z b = b z}`
pub fn center(alg: &GradedAlgebra) -> Subspace {
    let n = alg.dim();
    let gens = alg.generators().to_vec();
    let mut m = Matrix::zeros(alg.field(), n * gens.len().max(1), n);
    for (gi, &g) in gens.iter().enumerate() {
        for i in 0..n {
            let bi = alg.basis_elem(i);
            let d = sub_vec(&alg.mul_basis_right(&bi, g), &alg.mul_basis_left(g, &bi));
            for (r, x) in d.into_iter().enumerate() {
                if !x.is_zero() {
                    m.set(gi * n + r, i, x);
                }
            }
        }
    }
    m.kernel()
}

/// Partition of simple labels into blocks: labels on which every central element acts by the same scalar.
pub fn block_partition(alg: &GradedAlgebra, simples: &[GradedModule]) -> Vec<Vec<usize>> {
    let z = center(alg);
    let images: Vec<Vec<_>> = z
        .basis()
        .iter()
        .map(|c| simples.iter().map(|l| central_scalar(alg, l, c)).collect())
        .collect();
    let m = simples.len();
    let mut block_of: Vec<Option<usize>> = vec![None; m];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for a in 0..m {
        if block_of[a].is_some() {
            continue;
        }
        let id = blocks.len();
        let mut b = vec![a];
        block_of[a] = Some(id);
        for c in a + 1..m {
            if block_of[c].is_none() && images.iter().all(|v| v[a] == v[c]) {
                block_of[c] = Some(id);
                b.push(c);
            }
        }
        blocks.push(b);
    }
    blocks
}

fn central_scalar(alg: &GradedAlgebra, l: &GradedModule, z: &[crate::Scalar]) -> crate::Scalar {
    let m = alg.combine_matrices(l.actions(), z);
    m.get(0, 0).clone()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub labels: Vec<usize>,
    pub idempotent: Vector,
}

/// Central primitive idempotents, lifted inside the center.
pub fn central_idempotents(alg: &GradedAlgebra, simples: &[GradedModule]) -> Result<Vec<Block>, RingError> {
    let field = alg.field();
    let z = center(alg);
    let parts = block_partition(alg, simples);
    let zb: Vec<Vector> = z.basis().to_vec();
    let m = simples.len();
    // matrix from center coordinates to scalars per simple
    let mut img = Matrix::zeros(field, m, zb.len());
    for (c, v) in zb.iter().enumerate() {
        for (r, l) in simples.iter().enumerate() {
            img.set(r, c, central_scalar(alg, l, v));
        }
    }
    let steps = ceil_log2(alg.dim().max(2)) + 2;
    let mut out = Vec::new();
    for labels in parts {
        let mut target = zero_vec(field, m);
        for &l in &labels {
            target[l] = field.one();
        }
        let c = img.solve(&target).ok_or(RingError::NoPreimage { label: labels[0] })?;
        let mut e = zero_vec(field, alg.dim());
        for (x, v) in c.iter().zip(&zb) {
            crate::linalg::axpy(&mut e, x, v);
        }
        let e = newton_lift(alg, e, steps).ok_or(RingError::LiftDivergence { label: labels[0], steps })?;
        debug_assert!(!is_zero_vec(&e));
        out.push(Block { labels, idempotent: e });
    }
    Ok(out)
}
