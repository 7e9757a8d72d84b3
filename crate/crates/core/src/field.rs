//! Exact scalars over the rationals, prime fields and cyclotomic fields.

use crate::poly::{cyclotomic_poly, write_poly, QPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
    /// `Q[z]/Phi_n(z)`
    Cyclotomic(u32),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unknown field descriptor `{0}`")]
    Field(String),
    #[error("cannot parse scalar `{0}`: {1}")]
    Scalar(String, String),
}

#[derive(Debug)]
struct CycloCtx {
    n: u32,
    /// monic modulus, low degree first
    modulus: Vec<i64>,
}

fn cyclo_ctx(n: u32) -> Arc<CycloCtx> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut g = cache.lock().unwrap();
    g.entry(n)
        .or_insert_with(|| Arc::new(CycloCtx { n, modulus: cyclotomic_poly(n) }))
        .clone()
}

/// Element of `Q[z]/Phi_n`: exactly `phi(n)` coefficients, low degree first.
#[derive(Clone, Debug)]
pub struct Cyclo {
    ctx: Arc<CycloCtx>,
    c: Vec<BigRational>,
}

impl PartialEq for Cyclo {
    fn eq(&self, o: &Self) -> bool {
        self.ctx.n == o.ctx.n && self.c == o.c
    }
}
impl Eq for Cyclo {}

impl std::hash::Hash for Cyclo {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.ctx.n.hash(h);
        self.c.hash(h);
    }
}

impl Cyclo {
    fn from_poly(ctx: Arc<CycloCtx>, p: &QPoly) -> Cyclo {
        let m = ctx.modulus.len() - 1;
        let mut c: Vec<BigRational> = p.coeffs().to_vec();
        // reduce by the monic modulus from the top
        for k in (m..c.len()).rev() {
            if c[k].is_zero() {
                continue;
            }
            let f = c[k].clone();
            for (j, &b) in ctx.modulus.iter().enumerate() {
                if b != 0 {
                    c[k - m + j] -= &f * BigInt::from(b);
                }
            }
        }
        c.resize(m, BigRational::zero());
        Cyclo { ctx, c }
    }

    fn poly(&self) -> QPoly {
        QPoly::from_coeffs(self.c.clone())
    }

    pub fn order(&self) -> u32 {
        self.ctx.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }
}

/// A field element. All elements taking part in one computation share a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Box<BigRational>),
    /// value in `[0, p)`, then `p`
    Fp(u32, u32),
    Cyc(Box<Cyclo>),
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let (mut t, mut nt) = (0i64, 1i64);
    let (mut r, mut nr) = (p as i64, a as i64);
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    assert_eq!(r, 1, "not invertible mod {p}");
    t.rem_euclid(p as i64) as u64
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u32) -> Field {
        assert!(is_prime(p), "{p} is not prime");
        Field::Prime(p)
    }

    /// `Q(zeta_n)`, collapsed to `Q` when `phi(n) = 1`.
    pub fn cyclotomic(n: u32) -> Field {
        if n <= 2 {
            Field::Rational
        } else {
            Field::Cyclotomic(n)
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            Field::Rational => Scalar::Q(Box::new(BigRational::zero())),
            Field::Prime(p) => Scalar::Fp(0, p),
            Field::Cyclotomic(n) => {
                let ctx = cyclo_ctx(n);
                let m = ctx.modulus.len() - 1;
                Scalar::Cyc(Box::new(Cyclo { ctx, c: vec![BigRational::zero(); m] }))
            }
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, a: i64) -> Scalar {
        self.from_rational(&BigRational::from_integer(BigInt::from(a)))
    }

    pub fn from_frac(&self, n: i64, d: i64) -> Scalar {
        self.from_rational(&BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Image of a rational number; panics if the denominator vanishes mod p.
    pub fn from_rational(&self, a: &BigRational) -> Scalar {
        match *self {
            Field::Rational => Scalar::Q(Box::new(a.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let n = a.numer().mod_floor(&pb);
                let d = a.denom().mod_floor(&pb);
                let n: u64 = n.try_into().unwrap();
                let d: u64 = d.try_into().unwrap();
                let v = n * mod_inv(d, p as u64) % p as u64;
                Scalar::Fp(v as u32, p)
            }
            Field::Cyclotomic(n) => {
                let ctx = cyclo_ctx(n);
                Scalar::Cyc(Box::new(Cyclo::from_poly(ctx, &QPoly::constant(a.clone()))))
            }
        }
    }

    /// The generator `z` (a primitive n-th root of unity); `-1` for `Q` viewed as `Q(zeta_2)`.
    pub fn zeta(&self) -> Scalar {
        match *self {
            Field::Cyclotomic(n) => {
                let ctx = cyclo_ctx(n);
                Scalar::Cyc(Box::new(Cyclo::from_poly(ctx, &QPoly::from_ints(&[0, 1]))))
            }
            Field::Rational => self.from_i64(-1),
            Field::Prime(_) => panic!("no designated root of unity in a prime field"),
        }
    }

    pub fn descriptor(&self) -> String {
        match self {
            Field::Rational => "Q".into(),
            Field::Prime(p) => format!("Fp:{p}"),
            Field::Cyclotomic(n) => format!("Cyclotomic:{n}"),
        }
    }

    pub fn parse_descriptor(s: &str) -> Result<Field, ParseError> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let bad = || ParseError::Field(s.to_string());
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u32 = p.parse().map_err(|_| bad())?;
            if !is_prime(p) {
                return Err(bad());
            }
            return Ok(Field::Prime(p));
        }
        if let Some(n) = s.strip_prefix("Cyclotomic:") {
            let n: u32 = n.parse().map_err(|_| bad())?;
            if n == 0 || n > 1000 {
                return Err(bad());
            }
            return Ok(Field::cyclotomic(n));
        }
        Err(bad())
    }

    /// Parses `"3/2"`, `"-7"`, and for cyclotomic fields polynomials such as `"z^2+1"` or `"-1/2*z"`.
    pub fn parse(&self, s: &str) -> Result<Scalar, ParseError> {
        let err = |m: &str| ParseError::Scalar(s.to_string(), m.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err("empty"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in t.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(i > 0 && cur.ends_with('^')) {
                if i > 0 {
                    if cur.is_empty() {
                        return Err(err("dangling sign"));
                    }
                    terms.push((neg, std::mem::take(&mut cur)));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err("dangling sign"));
        }
        terms.push((neg, cur));
        let mut coeffs: Vec<BigRational> = Vec::new();
        for (neg, term) in terms {
            let (coef, power) = parse_term(&term).ok_or_else(|| err("bad term"))?;
            if power > 0 && !matches!(self, Field::Cyclotomic(_)) {
                return Err(err("`z` only allowed in cyclotomic fields"));
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigRational::zero());
            }
            let c = if neg { -coef } else { coef };
            coeffs[power] += c;
        }
        match *self {
            Field::Cyclotomic(n) => {
                let ctx = cyclo_ctx(n);
                Ok(Scalar::Cyc(Box::new(Cyclo::from_poly(ctx, &QPoly::from_coeffs(coeffs)))))
            }
            Field::Prime(p) => {
                let c = &coeffs[0];
                if (c.denom() % BigInt::from(p)).is_zero() {
                    return Err(err("denominator divisible by p"));
                }
                Ok(self.from_rational(c))
            }
            Field::Rational => Ok(self.from_rational(&coeffs[0])),
        }
    }

    /// A random element with small numerators, for seeded searches.
    pub fn random<R: Rng>(&self, rng: &mut R, bound: i64) -> Scalar {
        match *self {
            Field::Prime(p) => Scalar::Fp(rng.gen_range(0..p), p),
            Field::Rational => self.from_i64(rng.gen_range(-bound..=bound)),
            Field::Cyclotomic(n) => {
                let ctx = cyclo_ctx(n);
                let m = ctx.modulus.len() - 1;
                let c = (0..m)
                    .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-bound..=bound))))
                    .collect();
                Scalar::Cyc(Box::new(Cyclo { ctx, c }))
            }
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// `c`, `c*z`, `cz^k`, `z^k` (sign already stripped)
fn parse_term(t: &str) -> Option<(BigRational, usize)> {
    match t.find('z') {
        None => Some((parse_rational(t)?, 0)),
        Some(pos) => {
            let (c, rest) = t.split_at(pos);
            let c = c.strip_suffix('*').unwrap_or(c);
            let coef = if c.is_empty() { BigRational::one() } else { parse_rational(c)? };
            let rest = &rest[1..];
            let power = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')?.parse().ok()?
            };
            Some((coef, power))
        }
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp(_, p) => Field::Prime(*p),
            Scalar::Cyc(c) => Field::Cyclotomic(c.ctx.n),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(a) => a.is_zero(),
            Scalar::Fp(v, _) => *v == 0,
            Scalar::Cyc(c) => c.c.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(a) => a.is_one(),
            Scalar::Fp(v, _) => *v == 1,
            Scalar::Cyc(c) => c.c[0].is_one() && c.c[1..].iter().all(|x| x.is_zero()),
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(&**a + &**b)),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) => {
                debug_assert_eq!(p, q);
                let s = *a as u64 + *b as u64;
                Scalar::Fp((s % *p as u64) as u32, *p)
            }
            (Scalar::Cyc(a), Scalar::Cyc(b)) => {
                assert_eq!(a.ctx.n, b.ctx.n, "mixed cyclotomic fields");
                let c = a.c.iter().zip(&b.c).map(|(x, y)| x + y).collect();
                Scalar::Cyc(Box::new(Cyclo { ctx: a.ctx.clone(), c }))
            }
            _ => panic!("mixed fields: {:?} and {:?}", self.field(), o.field()),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(Box::new(-&**a)),
            Scalar::Fp(a, p) => Scalar::Fp(if *a == 0 { 0 } else { p - a }, *p),
            Scalar::Cyc(a) => Scalar::Cyc(Box::new(Cyclo {
                ctx: a.ctx.clone(),
                c: a.c.iter().map(|x| -x).collect(),
            })),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(&**a - &**b)),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => {
                let s = *a as u64 + (*p - *b) as u64;
                Scalar::Fp((s % *p as u64) as u32, *p)
            }
            _ => self.add(&o.neg()),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(&**a * &**b)),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) => {
                debug_assert_eq!(p, q);
                Scalar::Fp(((*a as u64 * *b as u64) % *p as u64) as u32, *p)
            }
            (Scalar::Cyc(a), Scalar::Cyc(b)) => {
                assert_eq!(a.ctx.n, b.ctx.n, "mixed cyclotomic fields");
                let prod = a.poly().mul(&b.poly());
                Scalar::Cyc(Box::new(Cyclo::from_poly(a.ctx.clone(), &prod)))
            }
            _ => panic!("mixed fields: {:?} and {:?}", self.field(), o.field()),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(a) => Scalar::Q(Box::new(a.recip())),
            Scalar::Fp(a, p) => Scalar::Fp(mod_inv(*a as u64, *p as u64) as u32, *p),
            Scalar::Cyc(a) => {
                let m = QPoly::from_ints(&a.ctx.modulus);
                let (g, s, _) = QPoly::ext_gcd(&a.poly(), &m);
                debug_assert!(g.is_one(), "cyclotomic modulus is irreducible");
                Scalar::Cyc(Box::new(Cyclo::from_poly(a.ctx.clone(), &s)))
            }
        })
    }

    pub fn div(&self, o: &Scalar) -> Scalar {
        self.mul(&o.inv().expect("division by zero"))
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn add_assign(&mut self, o: &Scalar) {
        match (&mut *self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => **a += &**b,
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => *a = ((*a as u64 + *b as u64) % *p as u64) as u32,
            _ => *self = self.add(o),
        }
    }

    /// `self += a * b`
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::Fp(s, p), Scalar::Fp(x, _), Scalar::Fp(y, _)) => {
                *s = ((*s as u64 + *x as u64 * *y as u64) % *p as u64) as u32
            }
            (Scalar::Q(s), Scalar::Q(x), Scalar::Q(y)) => **s += &**x * &**y,
            _ => *self = self.add(&a.mul(b)),
        }
    }

    /// `self -= a * b`
    pub fn sub_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::Fp(s, p), Scalar::Fp(x, _), Scalar::Fp(y, _)) => {
                let pp = *p as u64;
                let t = (*x as u64 * *y as u64) % pp;
                *s = ((*s as u64 + pp - t) % pp) as u32
            }
            (Scalar::Q(s), Scalar::Q(x), Scalar::Q(y)) => **s -= &**x * &**y,
            _ => *self = self.sub(&a.mul(b)),
        }
    }

    /// Rational value, when the element lies in the prime subfield of a characteristic-zero field.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Q(a) => Some((**a).clone()),
            Scalar::Cyc(c) if c.c[1..].iter().all(|x| x.is_zero()) => Some(c.c[0].clone()),
            _ => None,
        }
    }

    /// Small integer value, if representable (for prime fields the representative in `[0, p)`).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Fp(v, _) => Some(*v as i64),
            _ => {
                let r = self.to_rational()?;
                if r.is_integer() {
                    i64::try_from(r.to_integer()).ok()
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(a) => write!(f, "{}", a),
            Scalar::Fp(v, _) => write!(f, "{}", v),
            Scalar::Cyc(c) => write_poly(f, &c.c, "z"),
        }
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::add(self, o)
    }
}
impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::sub(self, o)
    }
}
impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar::mul(self, o)
    }
}
impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7);
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(a.add(&b), f.from_i64(1));
        assert_eq!(a.mul(&b), f.from_i64(1));
        assert_eq!(a.inv().unwrap(), f.from_i64(5));
        assert_eq!(f.from_frac(1, 2), f.from_i64(4));
        assert_eq!(f.from_i64(-1), f.from_i64(6));
    }

    #[test]
    fn cyclotomic_three() {
        let f = Field::cyclotomic(3);
        let z = f.zeta();
        // z^2 + z + 1 = 0
        let s = z.mul(&z).add(&z).add(&f.one());
        assert!(s.is_zero());
        assert_eq!(z.pow(3), f.one());
        let w = z.add(&f.from_i64(2));
        assert_eq!(w.mul(&w.inv().unwrap()), f.one());
    }

    #[test]
    fn parse_and_print_round_trip() {
        let f = Field::cyclotomic(5);
        for s in ["z^2+1", "-1/2*z^3+z-7", "0", "z", "-z^2", "3/4"] {
            let x = f.parse(s).unwrap();
            assert_eq!(f.parse(&x.to_string()).unwrap(), x, "{s}");
        }
        let q = Field::Rational;
        assert_eq!(q.parse("3/2").unwrap().to_string(), "3/2");
        assert_eq!(q.parse("-6/4").unwrap().to_string(), "-3/2");
        assert!(q.parse("z").is_err());
        assert!(q.parse("1/0").is_err());
        assert!(Field::prime(3).parse("1/3").is_err());
    }

    #[test]
    fn descriptors() {
        for d in ["Q", "Fp:5", "Cyclotomic:3"] {
            assert_eq!(Field::parse_descriptor(d).unwrap().descriptor(), d);
        }
        assert!(Field::parse_descriptor("Fp:4").is_err());
        assert_eq!(Field::parse_descriptor("Cyclotomic:2").unwrap(), Field::Rational);
    }
}

/// Serialized as its exact string form, e.g. `"3/2"` or `"z^2+1"`.
impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
