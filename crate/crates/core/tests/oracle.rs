//! Decomposition matrices against brute-force composition series.

mod common;

use common::{decomposition_matrix, lp, simple_dims};
use tricat::hwcat::Pipeline;
use tricat::laurent::LaurentMatrix;
use tricat::zoo::{self, Bundle};
use tricat::Field;

fn check(b: &Bundle) -> (LaurentMatrix, Vec<usize>) {
    let p = Pipeline::new(b.decomposition().unwrap(), 1);
    let oracle = decomposition_matrix(b, p.proper_standards());
    let dims = simple_dims(b, p.proper_standards());
    assert_eq!(p.decomposition_matrices().unwrap().d_delta, oracle, "{}", b.name);
    let lib_dims: Vec<usize> = p.simples().iter().map(|s| s.module.dim()).collect();
    assert_eq!(lib_dims, dims, "{}", b.name);
    (oracle, dims)
}

#[test]
fn truncated_square_two() {
    let (d, dims) = check(&zoo::truncated_square(2, Field::Rational).unwrap());
    assert_eq!(d, LaurentMatrix::new(vec![vec![lp(&[(0, 1), (-1, 1)])]]));
    assert_eq!(dims, [1]);
}

#[test]
fn truncated_square_three() {
    let (d, _) = check(&zoo::truncated_square(3, Field::Rational).unwrap());
    assert_eq!(d, LaurentMatrix::new(vec![vec![lp(&[(0, 1), (-1, 1), (-2, 1)])]]));
}

#[test]
fn pathological() {
    let (d, _) = check(&zoo::pathological4dim(Field::Rational));
    assert_eq!(d, LaurentMatrix::new(vec![vec![lp(&[(0, 1), (-1, 1)])]]));
}

#[test]
fn restricted_sl2_p3() {
    let (d, dims) = check(&zoo::restricted_sl2(3).unwrap());
    let (one, z) = (lp(&[(0, 1)]), lp(&[]));
    assert_eq!(
        d,
        LaurentMatrix::new(vec![
            vec![one.clone(), lp(&[(-1, 1)]), z.clone()],
            vec![lp(&[(-2, 1)]), one.clone(), z.clone()],
            vec![z.clone(), z, one],
        ])
    );
    assert_eq!(dims, [1, 2, 3]);
}

#[test]
fn rrca_zero_parameter() {
    for l in [2usize, 3] {
        let f = Field::cyclotomic(l as u32);
        let b = zoo::rrca_cyclic(l, &vec![f.zero(); l - 1]).unwrap();
        let (_, dims) = check(&b);
        assert!(dims.iter().all(|&d| d == 1), "{dims:?}");
    }
}

#[test]
fn generic_rrca() {
    for l in [2usize, 3] {
        let b = zoo::generic_rrca(l).unwrap();
        let (d, dims) = check(&b);
        assert_eq!(d, LaurentMatrix::identity(l));
        assert!(dims.iter().all(|&d| d == l), "{dims:?}");
    }
}

#[test]
fn rrca_zero_parameter_links_all_labels() {
    // at c = 0 every simple occurs in every Δ̄, so there is a single family
    let f = Field::cyclotomic(2);
    let b = zoo::rrca_cyclic(2, &[f.zero()]).unwrap();
    let (d, _) = check(&b);
    assert!(!d.get(0, 1).is_zero() && !d.get(1, 0).is_zero(), "{d:?}");
    let p = Pipeline::new(b.decomposition().unwrap(), 1);
    let fam = p.compare_families().unwrap();
    assert_eq!(fam.families, vec![vec![0, 1]]);
    assert_eq!(fam.standard_families, fam.families);
}
