//! Minimal resolutions, Koszulity, Tate characters and the degree criterion.

use tricat::algebra::GradedAlgebra;
use tricat::klres::{compare_tate, degrees_kl_criterion, koszul_check_up_to, minimal_resolution, tate_character, CIPresentation, KlVerdict};
use tricat::triangular::Sign;
use tricat::zoo;
use tricat::Field;

fn step_degrees(alg: &GradedAlgebra, max: usize) -> Vec<Vec<(i32, usize)>> {
    let (b, _) = minimal_resolution(alg, max);
    (0..=max).map(|m| b.0.get(&m).map(|r| r.iter().map(|(&i, &c)| (i, c)).collect()).unwrap_or_default()).collect()
}

#[test]
fn dual_numbers_resolution_is_linear() {
    let b = zoo::truncated_square(2, Field::Rational).unwrap();
    let a = b.decomposition().unwrap().side_algebra(Sign::Minus);
    let d = step_degrees(&a, 5);
    for (m, row) in d.iter().enumerate() {
        assert_eq!(row, &[(-(m as i32), 1)], "step {m}");
    }
    assert!(koszul_check_up_to(&a, 5).holds);
}

#[test]
fn cubic_truncation_resolution() {
    let b = zoo::truncated_square(3, Field::Rational).unwrap();
    let plus = b.decomposition().unwrap().side_algebra(Sign::Plus);
    let d = step_degrees(&plus, 5);
    let firsts: Vec<i32> = d.iter().map(|r| r[0].0).collect();
    assert_eq!(firsts, [0, 1, 3, 4, 6, 7]);
    assert!(d.iter().all(|r| r.len() == 1 && r[0].1 == 1));
    assert!(!koszul_check_up_to(&plus, 4).holds);
}

#[test]
fn tate_low_steps() {
    let ci = CIPresentation::new(vec![1, 2], vec![4, 6]).unwrap();
    assert_eq!(tate_character(&ci, 0, 0), 1);
    assert_eq!(tate_character(&ci, 0, 1), 0);
    // step 1 is U*: one class in each generator degree
    assert_eq!(tate_character(&ci, 1, 1), 1);
    assert_eq!(tate_character(&ci, 1, 2), 1);
    assert_eq!(tate_character(&ci, 1, 3), 0);
    // step 2 is ∧^2 U* + V
    assert_eq!(tate_character(&ci, 2, 3), 1);
    assert_eq!(tate_character(&ci, 2, 4), 1);
    assert_eq!(tate_character(&ci, 2, 6), 1);
}

#[test]
fn tate_matches_resolutions_of_truncated_squares() {
    for n in 2..=4 {
        let b = zoo::truncated_square(n, Field::Rational).unwrap();
        let td = b.decomposition().unwrap();
        for (sign, ci) in [(Sign::Minus, b.ci_minus.as_ref().unwrap()), (Sign::Plus, b.ci_plus.as_ref().unwrap())] {
            let c = compare_tate(ci, &td.side_algebra(sign), 6);
            assert!(c.agrees, "n = {n} {sign:?}: {:?}", c.mismatches);
            assert!(c.certifies_all_steps);
        }
    }
}

#[test]
fn degree_criterion_patterns() {
    let v = |x: &[i32], f: &[i32]| degrees_kl_criterion(&CIPresentation::new(x.to_vec(), f.to_vec()).unwrap());
    assert_eq!(v(&[1], &[2]), KlVerdict::Yes);
    assert_eq!(v(&[1], &[3]), KlVerdict::No);
    assert_eq!(v(&[1, 3], &[1, 2]), KlVerdict::Indeterminate);
    assert_eq!(v(&[3, 5], &[4, 8]), KlVerdict::Yes);
    assert_eq!(v(&[2], &[4]), KlVerdict::No);
}

#[test]
fn presentation_validation() {
    assert!(CIPresentation::new(vec![1], vec![]).is_err());
    assert!(CIPresentation::new(vec![0], vec![2]).is_err());
}
