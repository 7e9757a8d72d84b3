//! Randomized field, linear algebra and Laurent polynomial laws.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tricat::laurent::LaurentPoly;
use tricat::{Field, Matrix, Scalar};

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::prime(2)),
        Just(Field::prime(7)),
        Just(Field::prime(101)),
        Just(Field::cyclotomic(3)),
        Just(Field::cyclotomic(4)),
        Just(Field::cyclotomic(5)),
    ]
}

fn scalars(f: Field, seed: u64, n: usize) -> Vec<Scalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| f.random(&mut rng, 20)).collect()
}

fn matrix(f: Field, seed: u64, r: usize, c: usize) -> Matrix {
    let s = scalars(f, seed, r * c);
    let rows: Vec<Vec<Scalar>> = s.chunks(c.max(1)).take(r).map(|x| x.to_vec()).collect();
    Matrix::from_rows(f, &rows, c)
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-4i32..4, -3i64..4), 0..5).prop_map(LaurentPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(f in fields(), seed in any::<u64>()) {
        let v = scalars(f, seed, 3);
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(a.add(b), b.add(a));
        prop_assert_eq!(a.mul(b), b.mul(a));
        prop_assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
        prop_assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
        prop_assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
        prop_assert!(a.add(&a.neg()).is_zero());
        prop_assert!(a.sub(a).is_zero());
        prop_assert_eq!(a.mul(&f.one()), a.clone());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            prop_assert_eq!(b.div(a).mul(a), b.clone());
        } else {
            prop_assert!(a.inv().is_none());
        }
    }

    #[test]
    fn scalar_text_round_trip(f in fields(), seed in any::<u64>()) {
        let a = &scalars(f, seed, 1)[0];
        prop_assert_eq!(&f.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rank_nullity_and_kernel(f in fields(), seed in any::<u64>(), r in 1usize..6, c in 1usize..6) {
        let m = matrix(f, seed, r, c);
        let k = m.kernel();
        prop_assert_eq!(k.dim() + m.rank(), c);
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn inverse_and_solve(f in fields(), seed in any::<u64>(), n in 1usize..6) {
        let m = matrix(f, seed, n, n);
        match m.inverse() {
            Some(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
                let b = scalars(f, seed ^ 1, n);
                let x = m.solve(&b).unwrap();
                prop_assert_eq!(m.mul_vec(&x), b);
            }
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn product_laws(f in fields(), seed in any::<u64>(), n in 1usize..5) {
        let (a, b, c) = (matrix(f, seed, n, n), matrix(f, seed ^ 2, n, n), matrix(f, seed ^ 3, n, n));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
    }

    #[test]
    fn laurent_ring(p in laurent(), q in laurent(), r in laurent()) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.mul(&q).bar(), p.bar().mul(&q.bar()));
        prop_assert_eq!(p.bar().bar(), p.clone());
        prop_assert_eq!(p.mul(&q).eval_one(), p.eval_one() * q.eval_one());
        prop_assert_eq!(p.to_rational_function().to_laurent(), Some(p.clone()));
    }
}
