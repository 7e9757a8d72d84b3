//! Writing a spec file, reading it back, and producing a JSON report.

use tricat::report::{build_report, RunOptions, Scope};
use tricat::specfile;
use tricat::zoo;

fn main() {
    let b = zoo::coinvariant_skew(2).unwrap();
    let text = specfile::emit(&b);
    println!("{text}");
    let back = specfile::load(&text).unwrap();
    assert_eq!(back, b);
    let report = build_report(&back, Scope::Bgg, &RunOptions::default());
    println!("{}", report.to_json());
}
