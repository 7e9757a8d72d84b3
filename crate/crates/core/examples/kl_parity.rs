//! Ext parity, Tate characters and the degree criterion for complete intersections.

use tricat::hwcat::Pipeline;
use tricat::klres::{compare_tate, degrees_kl_criterion, kl_parity_check, tate_table, CIPresentation};
use tricat::triangular::Sign;
use tricat::zoo;
use tricat::Field;

fn main() {
    for n in [2, 3, 4] {
        let b = zoo::truncated_square(n, Field::Rational).unwrap();
        let td = b.decomposition().unwrap();
        let tate = compare_tate(b.ci_plus.as_ref().unwrap(), &td.side_algebra(Sign::Plus), 6);
        let r = kl_parity_check(&Pipeline::new(td, 0), 6).unwrap();
        match r.first_violation() {
            None => println!("n = {n}: parity holds to depth 6"),
            Some(v) => println!("n = {n}: Ext^{} nonzero in internal degree {}", v.m, v.shift),
        }
        println!("  Tate character matches the minimal resolution: {}", tate.agrees);
    }

    let ci = CIPresentation::new(vec![1, 3], vec![4, 6]).unwrap();
    for ((m, i), c) in tate_table(&ci, 3) {
        println!("Tate (m = {m}, degree {i}): {c}");
    }
    for (x, f) in [(vec![1], vec![2]), (vec![1], vec![3]), (vec![1, 3], vec![1, 2])] {
        let v = degrees_kl_criterion(&CIPresentation::new(x.clone(), f.clone()).unwrap());
        println!("generators {x:?}, relations {f:?}: {v:?}");
    }
}
