//! Standard filtrations of projective covers and graded Brauer reciprocity.

use tricat::hwcat::Pipeline;
use tricat::zoo;

fn main() {
    let b = zoo::restricted_sl2(3).unwrap();
    let p = Pipeline::new(b.decomposition().unwrap(), 0);
    for l in 0..p.num_labels() {
        let proj = p.projective(l).unwrap();
        let f = p.standard_filtration(proj).unwrap();
        let layers: Vec<String> = f.layers.iter().map(|x| format!("Δ({})[{}]", x.label, x.shift)).collect();
        println!("P({l}) (dim {}): {}", proj.dim(), layers.join(", "));
    }
    let r = p.brauer_reciprocity_check().unwrap();
    println!("(P(λ):Δ(μ)) = bar [∇̄(μ):L(λ)] for all pairs: {}", r.holds());
}
