//! Certificates for graded Frobenius and graded symmetric forms.

use super::GradedAlgebra;
use crate::linalg::{zero_vec, Matrix, Subspace, Vector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusForm {
    /// value of the functional on each basis element
    pub functional: Vector,
    pub degree: i32,
    pub symmetric: bool,
}

/// `phi(b_i b_j)` for all pairs.
fn pairing(alg: &GradedAlgebra, phi: &[crate::Scalar]) -> Matrix {
    let n = alg.dim();
    let mut g = Matrix::zeros(alg.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = alg.field().zero();
            for (k, c) in alg.product(i, j) {
                acc.add_mul(c, &phi[*k]);
            }
            if !acc.is_zero() {
                g.set(i, j, acc);
            }
        }
    }
    g
}

/// Checks that `phi` lives on `A_d` and that every block `A_i x A_{d-i}` of the pairing is nondegenerate.
pub fn verify_frobenius(alg: &GradedAlgebra, phi: &[crate::Scalar], d: i32) -> bool {
    if phi.len() != alg.dim() || phi.iter().enumerate().any(|(k, x)| !x.is_zero() && alg.degree(k) != d) {
        return false;
    }
    let g = pairing(alg, phi);
    for i in alg.support() {
        let rows = alg.indices_of_degree(i);
        let cols = alg.indices_of_degree(d - i);
        if rows.len() != cols.len() || g.submatrix(&rows, &cols).rank() != rows.len() {
            return false;
        }
    }
    true
}

fn is_symmetric(alg: &GradedAlgebra, phi: &[crate::Scalar]) -> bool {
    let g = pairing(alg, phi);
    g == g.transpose()
}

/// Functionals on `A_d` (as full-length vectors) with `phi(ab) = phi(ba)`.
fn symmetric_functionals(alg: &GradedAlgebra, d: i32) -> Vec<Vector> {
    let field = alg.field();
    let n = alg.dim();
    let idx = alg.indices_of_degree(d);
    let mut cond = Subspace::zero(field, idx.len());
    for i in 0..n {
        for j in i + 1..n {
            if alg.degree(i) + alg.degree(j) != d {
                continue;
            }
            let mut v = zero_vec(field, n);
            for (k, c) in alg.product(i, j) {
                v[*k].add_assign(c);
            }
            for (k, c) in alg.product(j, i) {
                v[*k] = v[*k].sub(c);
            }
            cond.insert(idx.iter().map(|&k| v[k].clone()).collect());
        }
    }
    let ker = Matrix::from_rows(field, cond.basis(), idx.len()).kernel();
    ker.basis()
        .iter()
        .map(|w| {
            let mut v = zero_vec(field, n);
            for (c, &k) in w.iter().zip(&idx) {
                v[k] = c.clone();
            }
            v
        })
        .collect()
}

/// Hints first, then basis functionals, then `trials` seeded random combinations,
/// all inside the symmetric subspace before the full dual of `A_d`.
pub fn frobenius_search(alg: &GradedAlgebra, d: i32, trials: usize, seed: u64, hints: &[Vector]) -> Option<FrobeniusForm> {
    let field = alg.field();
    let n = alg.dim();
    let idx = alg.indices_of_degree(d);
    if idx.is_empty() {
        return None;
    }
    let accept = |phi: &Vector| -> Option<FrobeniusForm> {
        verify_frobenius(alg, phi, d).then(|| FrobeniusForm { functional: phi.clone(), degree: d, symmetric: is_symmetric(alg, phi) })
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sym = symmetric_functionals(alg, d);
    let dual_basis: Vec<Vector> = idx
        .iter()
        .map(|&k| {
            let mut v = zero_vec(field, n);
            v[k] = field.one();
            v
        })
        .collect();
    let mut fallback = None;
    for space in [&sym, &dual_basis] {
        if space.is_empty() {
            continue;
        }
        let span = Subspace::from_vectors(field, n, space.iter().cloned());
        let mut cands: Vec<Vector> = hints.iter().filter(|h| h.len() == n && span.contains(h)).cloned().collect();
        cands.extend(space.iter().cloned());
        for c in cands {
            if let Some(f) = accept(&c) {
                if f.symmetric {
                    return Some(f);
                }
                fallback.get_or_insert(f);
            }
        }
        for _ in 0..trials {
            let mut phi = zero_vec(field, n);
            for v in space {
                crate::linalg::axpy(&mut phi, &field.random(&mut rng, 1000), v);
            }
            if let Some(f) = accept(&phi) {
                if f.symmetric {
                    return Some(f);
                }
                fallback.get_or_insert(f);
            }
        }
        if fallback.is_some() {
            break;
        }
    }
    fallback
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{dual_numbers, pathological};
    use crate::field::Field;

    #[test]
    fn dual_numbers_symmetric() {
        let a = dual_numbers(Field::Rational, -1);
        let f = frobenius_search(&a, -1, 4, 0, &[]).unwrap();
        assert!(f.symmetric);
        assert!(frobenius_search(&a, 0, 4, 0, &[]).is_none());
    }

    #[test]
    fn pathological_has_no_certificate() {
        let a = pathological(Field::Rational);
        for d in -1..=1 {
            assert!(frobenius_search(&a, d, 16, 7, &[]).is_none(), "d = {d}");
        }
    }
}
