//! Brute-force oracles shared by the integration tests.
//!
//! The composition-series oracle does not use idempotents, radicals or characters: it
//! enumerates homogeneous vectors, takes the smallest cyclic submodule over the current
//! layer, and reads the label off the torus action on its top degree.

#![allow(dead_code)]

use tricat::{Field, Scalar};
use tricat::laurent::{LaurentMatrix, LaurentPoly};
use tricat::linalg::{unit_vec, zero_vec, Subspace, Vector};
use tricat::modrep::GradedModule;
use tricat::zoo::Bundle;

/// One composition factor `L(label)[top]` of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub label: usize,
    pub top: i32,
    pub dim: usize,
}

/// Submodule generated by `vecs`, closing under the action of every algebra basis vector.
pub fn closure(m: &GradedModule, vecs: &[Vector]) -> Subspace {
    let mut s = Subspace::from_vectors(m.field(), m.dim(), vecs.iter().cloned());
    loop {
        let mut grew = false;
        for v in s.basis().to_vec() {
            for a in m.actions() {
                grew |= s.insert(a.mul_vec(&v));
            }
        }
        if !grew {
            return s;
        }
    }
}

fn degree_part(m: &GradedModule, s: &Subspace, d: i32) -> Subspace {
    let f = m.field();
    let coord = Subspace::from_vectors(f, m.dim(), m.indices_of_degree(d).into_iter().map(|i| unit_vec(f, m.dim(), i)));
    s.intersect(&coord)
}

/// Coefficient vectors for a `k`-dimensional homogeneous piece: all of `F_p^k`, or the
/// unit vectors when `k = 1` over an infinite field (the only case where that is exhaustive
/// up to scalars).
fn candidates(field: Field, k: usize) -> Vec<Vector> {
    if field.is_finite() {
        let q = field.characteristic() as usize;
        (1..q.pow(k as u32))
            .map(|mut n| {
                (0..k)
                    .map(|_| {
                        let c = field.from_i64((n % q) as i64);
                        n /= q;
                        c
                    })
                    .collect()
            })
            .collect()
    } else {
        assert!(k <= 1, "oracle enumerates infinite fields only on one-dimensional degree pieces");
        (0..k).map(|i| unit_vec(field, k, i)).collect()
    }
}

/// Scalar by which `t` acts on the one-dimensional top of the layer `w + s`.
fn eigenvalue(m: &GradedModule, t: &[Scalar], w: &[Scalar], s: &Subspace) -> Scalar {
    let mut w = w.to_vec();
    s.reduce(&mut w);
    let mut u = m.act(t).mul_vec(&w);
    s.reduce(&mut u);
    let i = w.iter().position(|x| !x.is_zero()).unwrap();
    let c = u[i].div(&w[i]);
    for (a, b) in u.iter().zip(&w) {
        assert_eq!(*a, c.mul(b), "top of a composition factor is not a torus eigenline");
    }
    c
}

/// A composition series of `m`, listed from the bottom.
pub fn composition_factors(b: &Bundle, m: &GradedModule) -> Vec<Factor> {
    let t = b.triangular.as_ref().expect("triangular data");
    let field = m.field();
    let support: Vec<i32> = {
        let mut d: Vec<i32> = m.degrees().to_vec();
        d.sort();
        d.dedup();
        d
    };
    let mut s = Subspace::zero(field, m.dim());
    let mut out = Vec::new();
    while s.dim() < m.dim() {
        let mut best: Option<Subspace> = None;
        for &d in &support {
            let idx = m.indices_of_degree(d);
            let rest = degree_part(m, &s, d);
            if rest.dim() == idx.len() {
                continue;
            }
            for c in candidates(field, idx.len()) {
                let mut v = zero_vec(field, m.dim());
                for (k, &i) in idx.iter().enumerate() {
                    v[i] = c[k].clone();
                }
                if s.contains(&v) {
                    continue;
                }
                let mut gens = s.basis().to_vec();
                gens.push(v);
                let next = closure(m, &gens);
                if best.as_ref().map_or(true, |b| next.dim() < b.dim()) {
                    best = Some(next);
                }
            }
        }
        let next = best.expect("proper submodule has a homogeneous complement vector");
        let top = *support.iter().rev().find(|&&d| degree_part(m, &next, d).dim() > degree_part(m, &s, d).dim()).unwrap();
        let (upper, lower) = (degree_part(m, &next, top), degree_part(m, &s, top));
        assert_eq!(upper.dim(), lower.dim() + 1, "top of a composition factor should be one-dimensional");
        let w = upper.basis().iter().find(|v| !lower.contains(v)).unwrap().clone();
        let vals: Vec<Scalar> = t.torus.iter().map(|x| eigenvalue(m, x, &w, &s)).collect();
        let label = t
            .irr
            .iter()
            .position(|mats| mats.iter().zip(&vals).all(|(a, v)| a.rows() == 1 && a.get(0, 0) == v))
            .expect("top matches a one-dimensional torus irreducible");
        out.push(Factor { label, top, dim: next.dim() - s.dim() });
        s = next;
    }
    out
}

/// `[M : L(μ)]` for each `μ`, with `L(μ)[s]` contributing `t^s`.
pub fn multiplicities(b: &Bundle, m: &GradedModule, n: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); n];
    for f in composition_factors(b, m) {
        out[f.label].add_term(f.top, 1);
    }
    out
}

/// `D_Δ` row by row from composition series of the proper standards.
pub fn decomposition_matrix(b: &Bundle, standards: &[GradedModule]) -> LaurentMatrix {
    let n = standards.len();
    LaurentMatrix::new(standards.iter().map(|d| multiplicities(b, d, n)).collect())
}

/// Dimension of the simple with each label, read off the factors' tops.
pub fn simple_dims(b: &Bundle, standards: &[GradedModule]) -> Vec<usize> {
    let mut dims = vec![0; standards.len()];
    for d in standards {
        for f in composition_factors(b, d) {
            assert!(dims[f.label] == 0 || dims[f.label] == f.dim, "label {} has two simple dimensions", f.label);
            dims[f.label] = f.dim;
        }
    }
    dims
}

pub fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}
