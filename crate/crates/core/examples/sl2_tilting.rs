//! Restricted enveloping algebra of sl2: simples, the h and † permutations, and tilting objects.
//!
//! Usage: `cargo run --example sl2_tilting -- [p]` (default 3).

use tricat::hwcat::Pipeline;
use tricat::report::find_frobenius;
use tricat::zoo;

fn main() {
    let p: u32 = std::env::args().nth(1).map_or(3, |s| s.parse().expect("p must be an odd prime"));
    let b = zoo::restricted_sl2(p).unwrap();
    let pl = Pipeline::new(b.decomposition().unwrap(), 0);
    for s in pl.simple_summaries() {
        println!("L({}) has graded dimension {}", s.label, s.graded_dim);
    }
    if let Some(f) = find_frobenius(&b, 0) {
        println!("Frobenius form in degree {} (symmetric: {})", f.degree, f.symmetric);
    }
    let t = pl.tilting_data().unwrap();
    for l in 0..pl.num_labels() {
        let src = t.tilting_source(l);
        println!("h({l}) = {}   †({l}) = {}   T({l}) = P({})[{}]", t.h[l], t.dagger[l], src.label, src.shift);
    }
    let w = pl.verify_tilting(&t).unwrap();
    println!("{} tilting objects with explicit Δ -> T -> ∇", w.len());
}
