//! Restricted rational Cherednik algebras of Z_l: families at c = 0 and block centers at generic c.

use tricat::hwcat::Pipeline;
use tricat::zoo;
use tricat::Field;

fn main() {
    for l in [2usize, 3] {
        let f = Field::cyclotomic(l as u32);
        let zero = zoo::rrca_cyclic(l, &vec![f.zero(); l - 1]).unwrap();
        let p = Pipeline::new(zero.decomposition().unwrap(), 0);
        println!("Z_{l}, c = 0: families {:?}", p.families());

        let generic = zoo::generic_rrca(l).unwrap();
        let p = Pipeline::new(generic.decomposition().unwrap(), 0);
        for b in p.block_center_factorization().unwrap() {
            println!(
                "Z_{l}, generic c: block {:?}: dim Z c = {}, End Δ̄ · End ∇̄ = {}, (dim λ)^2 = {}",
                b.labels,
                b.center,
                b.product.map(|x| x.to_string()).unwrap_or_default(),
                b.simple_dim * b.simple_dim
            );
        }
    }
}
