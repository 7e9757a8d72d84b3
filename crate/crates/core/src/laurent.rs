//! Integer Laurent polynomials, rational functions over Q, and matrices of both.

use crate::poly::QPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// `sum c_e t^e` with integer coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn t_pow(e: i32) -> Self {
        Self::monomial(e, 1)
    }

    pub fn monomial(e: i32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: i64) {
        if c == 0 {
            return;
        }
        let x = self.terms.entry(e).or_insert(0);
        *x += c;
        if *x == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in o.terms() {
            r.add_term(e, c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (e, c) in self.terms() {
            for (f, d) in o.terms() {
                r.add_term(e + f, c * d);
            }
        }
        r
    }

    /// Multiplication by `t^k`, i.e. the shift `[k]`.
    pub fn shift(&self, k: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e + k, c)))
    }

    /// `t -> t^{-1}`
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }

    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        let Some(lo) = self.min_exp() else {
            return RationalFunction::zero();
        };
        let shift = lo.min(0);
        let hi = self.max_exp().unwrap();
        let mut c = vec![BigRational::zero(); (hi - shift) as usize + 1];
        for (e, x) in self.terms() {
            c[(e - shift) as usize] = BigRational::from_integer(BigInt::from(x));
        }
        let num = QPoly::from_coeffs(c);
        let den = QPoly::monomial(BigRational::one(), (-shift) as usize);
        RationalFunction::new(num, den)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, &c) in self.terms.iter().rev() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let a = c.abs();
            match e {
                0 => write!(f, "{}", a)?,
                _ => {
                    if a != 1 {
                        write!(f, "{}", a)?;
                    }
                    if e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{}", e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            m.serialize_entry(&e.to_string(), c)?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let m: BTreeMap<String, i64> = BTreeMap::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (k, c) in m {
            let e: i32 = k.parse().map_err(serde::de::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Reduced quotient of polynomials over Q with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: QPoly,
    den: QPoly,
}

impl RationalFunction {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = QPoly::gcd(&num, &den);
        let (n, _) = num.divrem(&g);
        let (d, _) = den.divrem(&g);
        let lead = d.lead().unwrap().recip();
        RationalFunction { num: n.scale(&lead), den: d.scale(&lead) }
    }

    pub fn zero() -> Self {
        RationalFunction { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: QPoly::one(), den: QPoly::one() }
    }

    pub fn from_int(a: i64) -> Self {
        Self::new(QPoly::from_ints(&[a]), QPoly::one())
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv().expect("division by zero rational function"))
    }

    /// The Laurent polynomial this equals, when the denominator is a power of `t`
    /// and the numerator has integer coefficients.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let d = self.den.degree().unwrap();
        if self.den.coeffs()[..d].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut p = LaurentPoly::zero();
        for (k, c) in self.num.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return None;
            }
            let v = i64::try_from(c.to_integer()).ok()?;
            p.add_term(k as i32 - d as i32, v);
        }
        Some(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Square or rectangular matrix over `Z[t, t^-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct LaurentMatrix {
    pub rows: Vec<Vec<LaurentPoly>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("matrix is singular over Q(t)")]
pub struct Singular;

impl LaurentMatrix {
    pub fn new(rows: Vec<Vec<LaurentPoly>>) -> Self {
        LaurentMatrix { rows }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
            .collect();
        LaurentMatrix { rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.rows[i][j]
    }

    pub fn mul(&self, o: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.ncols(), o.nrows());
        let rows = (0..self.nrows())
            .map(|i| {
                (0..o.ncols())
                    .map(|j| {
                        let mut acc = LaurentPoly::zero();
                        for k in 0..self.ncols() {
                            acc = acc.add(&self.rows[i][k].mul(&o.rows[k][j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        LaurentMatrix { rows }
    }

    pub fn eval_one(&self) -> Vec<Vec<i64>> {
        self.rows.iter().map(|r| r.iter().map(|p| p.eval_one()).collect()).collect()
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> LaurentMatrix {
        LaurentMatrix { rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix { rows: self.rows.iter().map(|r| r.iter().map(|p| p.to_rational_function()).collect()).collect() }
    }

    /// Exact inverse over `Q(t)`.
    pub fn inverse(&self) -> Result<RatMatrix, Singular> {
        self.to_rational().inverse()
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
        let ncols = self.ncols();
        let widths: Vec<usize> = (0..ncols).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1)).collect();
        for r in &cells {
            let parts: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{:>w$}", c, w = *w)).collect();
            writeln!(f, "[ {} ]", parts.join("  "))?;
        }
        Ok(())
    }
}

/// Matrix over `Q(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: Vec<Vec<RationalFunction>>,
}

impl RatMatrix {
    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { RationalFunction::one() } else { RationalFunction::zero() }).collect())
            .collect();
        RatMatrix { rows }
    }

    pub fn mul(&self, o: &RatMatrix) -> RatMatrix {
        let n = self.rows.len();
        let k = o.rows.len();
        let m = o.rows.first().map_or(0, |r| r.len());
        let rows = (0..n)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let mut acc = RationalFunction::zero();
                        for l in 0..k {
                            if !self.rows[i][l].is_zero() && !o.rows[l][j].is_zero() {
                                acc = acc.add(&self.rows[i][l].mul(&o.rows[l][j]));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        RatMatrix { rows }
    }

    pub fn inverse(&self) -> Result<RatMatrix, Singular> {
        let n = self.rows.len();
        let mut a: Vec<Vec<RationalFunction>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                assert_eq!(r.len(), n, "inverse of a non-square matrix");
                let mut r = r.clone();
                r.extend((0..n).map(|j| if i == j { RationalFunction::one() } else { RationalFunction::zero() }));
                r
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(Singular)?;
            a.swap(c, p);
            let inv = a[c][c].inv().unwrap();
            a[c] = a[c].iter().map(|x| x.mul(&inv)).collect();
            let pivot = a[c].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != c && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        if !y.is_zero() {
                            *x = x.sub(&f.mul(y));
                        }
                    }
                }
            }
        }
        Ok(RatMatrix { rows: a.into_iter().map(|r| r[n..].to_vec()).collect() })
    }

    /// Converts back when every entry is a Laurent polynomial.
    pub fn to_laurent(&self) -> Option<LaurentMatrix> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_laurent()).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(LaurentMatrix { rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_basics() {
        let p = LaurentPoly::from_terms([(0, 1), (-1, 1)]);
        assert_eq!(p.to_string(), "1 + t^-1");
        assert_eq!(p.shift(1), LaurentPoly::from_terms([(1, 1), (0, 1)]));
        assert_eq!(p.bar(), LaurentPoly::from_terms([(0, 1), (1, 1)]));
        assert_eq!(p.eval_one(), 2);
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"-1":1,"0":1}"#);
        let back: LaurentPoly = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(LaurentMatrix::identity(3).inverse().unwrap(), RatMatrix::identity(3));
        let one_plus_t = LaurentPoly::from_terms([(0, 1), (1, 1)]);
        let inv = LaurentMatrix::new(vec![vec![one_plus_t.clone()]]).inverse().unwrap();
        assert_eq!(inv.rows[0][0], RationalFunction::new(QPoly::one(), QPoly::from_ints(&[1, 1])));
        let m = LaurentMatrix::new(vec![
            vec![LaurentPoly::one(), LaurentPoly::t_pow(1)],
            vec![LaurentPoly::zero(), LaurentPoly::one()],
        ]);
        let inv = m.inverse().unwrap();
        let expect = LaurentMatrix::new(vec![
            vec![LaurentPoly::one(), LaurentPoly::monomial(1, -1)],
            vec![LaurentPoly::zero(), LaurentPoly::one()],
        ]);
        assert_eq!(inv.to_laurent().unwrap(), expect);
        assert_eq!(m.to_rational().mul(&inv), RatMatrix::identity(2));
        let sing = LaurentMatrix::new(vec![vec![LaurentPoly::one(), LaurentPoly::one()], vec![LaurentPoly::one(), LaurentPoly::one()]]);
        assert_eq!(sing.inverse(), Err(Singular));
    }

    #[test]
    fn negative_powers_to_rational() {
        let p = LaurentPoly::from_terms([(-2, 3), (1, 1)]);
        let r = p.to_rational_function();
        assert_eq!(r.to_laurent().unwrap(), p);
    }
}
