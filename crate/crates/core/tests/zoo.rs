//! Every catalog entry builds, verifies and survives the spec file round trip.

use tricat::report::pbw_round_trip;
use tricat::specfile;
use tricat::zoo::{self, CATALOG};

fn params(name: &str) -> Vec<Vec<String>> {
    let v = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    match name {
        "truncated-square" => vec![v(&["2"]), v(&["3", "Fp:5"])],
        "coinvariant-skew" => vec![v(&["2"]), v(&["3"])],
        "restricted-sl2" => vec![v(&["3"])],
        "rrca" => vec![v(&["2"]), v(&["3", "0", "0"]), v(&["3", "generic"])],
        _ => vec![v(&[])],
    }
}

#[test]
fn catalog_entries() {
    for (name, _) in CATALOG {
        for p in params(name) {
            let b = zoo::by_name(name, &p).unwrap_or_else(|e| panic!("{name} {p:?}: {e}"));
            assert!(b.algebra.verify().passed(), "{name}");
            let back = specfile::load(&specfile::emit(&b)).unwrap();
            assert_eq!(back, b, "{name} {p:?}");
            if b.triangular.is_some() {
                let td = b.decomposition().unwrap();
                assert!(pbw_round_trip(&td), "{name}");
                assert_eq!(td.algebra().dim(), td.minus().len() * td.torus().len() * td.plus().len());
            }
        }
    }
}

#[test]
fn bad_parameters() {
    assert!(zoo::by_name("truncated-square", &["1".into()]).is_err());
    assert!(zoo::by_name("restricted-sl2", &["9".into()]).is_err());
    assert!(zoo::by_name("rrca", &["3".into(), "x".into()]).is_err());
}

#[test]
fn degenerate_triple_candidates_fail() {
    let b = zoo::degenerate_triple(tricat::Field::Rational);
    for (minus, torus, plus) in zoo::degenerate_candidates(tricat::Field::Rational) {
        let irr = vec![vec![tricat::Matrix::identity(tricat::Field::Rational, 1)]];
        let rep = tricat::triangular::verify_triangular(&b.algebra, &minus, &torus, &plus, &irr);
        assert!(!rep.passed());
    }
}
