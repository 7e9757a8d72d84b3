//! Graded decomposition matrices of the truncated squares K[x,y]/(x^n, y^n).

use tricat::hwcat::Pipeline;
use tricat::zoo;
use tricat::Field;

fn main() {
    for n in 2..=4 {
        let b = zoo::truncated_square(n, Field::Rational).unwrap();
        let p = Pipeline::new(b.decomposition().unwrap(), 0);
        let m = p.decomposition_matrices().unwrap();
        let rel = p.verify_relation().unwrap();
        println!("n = {n}: C_L = {}, C_Δ = {}, D_Δ = {}", m.c_l.get(0, 0), m.c_delta.get(0, 0), m.d_delta.get(0, 0));
        println!("  C_Δ = D_Δ C_L: {}, recovered over Q(t): {}", rel.product_holds, rel.inverse_recovers_d);
    }
}
