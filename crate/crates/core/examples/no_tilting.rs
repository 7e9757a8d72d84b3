//! K<x,y>/(x^2, yx, y^2): triangular but not ambidextrous, and without tilting objects.

use tricat::hwcat::Pipeline;
use tricat::report::verify_section;
use tricat::zoo;
use tricat::Field;

fn main() {
    let b = zoo::pathological4dim(Field::Rational);
    let (v, td) = verify_section(&b);
    println!("ambidextrous: {}", v.ambidextrous.unwrap());
    // (i, j, k, c) stands for c · A+[i] ⊗ T[j] ⊗ A-[k]; here y ⊗ 1 ⊗ x
    println!("kernel of A+ ⊗ T ⊗ A- -> A: {:?}", v.ambidexterity_witness.unwrap());
    let p = Pipeline::new(td.unwrap(), 0);
    let s = p.regular_socles().unwrap();
    // basis 1, x, y, xy
    let show = |sub: &tricat::Subspace| -> Vec<String> {
        sub.basis().iter().map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")).collect()
    };
    println!("Soc(_A A) = {:?}", show(&s.left));
    println!("Soc(A_A) = {:?}", show(&s.right));
    let si = p.self_injectivity_check().unwrap();
    println!("self-injective: {}", si.self_injective);
    for f in &si.failures {
        println!("  {f}");
    }
    println!("tilting data: {:?}", p.tilting_data().err());
}
