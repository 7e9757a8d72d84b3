//! Reports are byte-identical for a fixed seed.

use tricat::report::{build_report, RunOptions, Scope};
use tricat::zoo;
use tricat::Field;

#[test]
fn fixed_seed_reports_are_identical() {
    for b in [
        zoo::truncated_square(3, Field::Rational).unwrap(),
        zoo::pathological4dim(Field::Rational),
        zoo::restricted_sl2(3).unwrap(),
        zoo::generic_rrca(3).unwrap(),
    ] {
        for seed in [0, 11] {
            let opts = RunOptions { seed, max_step: 4, jobs: 1 };
            let a = build_report(&b, Scope::Full, &opts).to_json();
            let c = build_report(&b, Scope::Full, &RunOptions { jobs: 4, ..opts }).to_json();
            assert_eq!(a, c, "{} seed {seed}", b.name);
            assert_eq!(a, build_report(&b, Scope::Full, &opts).to_json());
        }
    }
}
