//! The duality functor M -> (M^*)^τ on standard, simple and projective modules.

use tricat::hwcat::Pipeline;
use tricat::zoo;
use tricat::Field;

fn main() {
    for b in [zoo::truncated_square(2, Field::Rational).unwrap(), zoo::restricted_sl2(3).unwrap()] {
        let tau = b.anti_involution.clone().unwrap();
        let p = Pipeline::new(b.decomposition().unwrap(), 0);
        let r = p.verify_duality(&tau).unwrap();
        println!("{}: degree-0 Frobenius form: {}", b.name, r.frobenius_degree_zero);
        for c in &r.checks {
            println!("  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name);
        }
    }
}
