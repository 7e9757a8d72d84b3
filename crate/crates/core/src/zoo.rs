//! Example algebras with their triangular data, built by exact rewriting on PBW normal forms.

use crate::algebra::{GradedAlgebra, SparseVec};
use crate::field::{Field, Scalar};
use crate::klres::CIPresentation;
use crate::linalg::{unit_vec, Matrix, Vector};
use crate::triangular::{TriangularDecomposition, TriangularError};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq)]
pub struct TriangularData {
    pub minus: Vec<Vector>,
    pub torus: Vec<Vector>,
    pub plus: Vec<Vector>,
    /// per simple `T`-module, one matrix per torus basis vector
    pub irr: Vec<Vec<Matrix>>,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Bundle {
    pub name: String,
    pub algebra: GradedAlgebra,
    pub triangular: Option<TriangularData>,
    /// column `i` holds `tau(b_i)`
    pub anti_involution: Option<Matrix>,
    pub frobenius_hint: Option<(i32, Vector)>,
    pub ci_minus: Option<CIPresentation>,
    pub ci_plus: Option<CIPresentation>,
}

#[derive(Debug, Error, PartialEq)]
pub enum ZooError {
    #[error("unknown zoo entry `{0}`")]
    Unknown(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("bundle `{0}` has no triangular section")]
    NoTriangular(String),
    #[error(transparent)]
    Triangular(#[from] TriangularError),
}

impl Bundle {
    pub fn decomposition(&self) -> Result<TriangularDecomposition, ZooError> {
        let t = self.triangular.as_ref().ok_or_else(|| ZooError::NoTriangular(self.name.clone()))?;
        Ok(TriangularDecomposition::new(self.algebra.clone(), &t.minus, &t.torus, &t.plus, &t.irr, Some(t.labels.clone()))?)
    }
}

fn basis(field: Field, n: usize, idx: impl IntoIterator<Item = usize>) -> Vec<Vector> {
    idx.into_iter().map(|i| unit_vec(field, n, i)).collect()
}

fn trivial_irr(field: Field) -> Vec<Vec<Matrix>> {
    vec![vec![Matrix::identity(field, 1)]]
}

fn scalar_irr(vals: Vec<Vec<Scalar>>) -> Vec<Vec<Matrix>> {
    vals.into_iter()
        .map(|row| row.into_iter().map(|x| Matrix::from_rows(x.field(), &[vec![x]], 1)).collect())
        .collect()
}

/// Permutation matrix of a basis involution.
fn perm_matrix(field: Field, n: usize, f: impl Fn(usize) -> usize) -> Matrix {
    let cols: Vec<Vector> = (0..n).map(|i| unit_vec(field, n, f(i))).collect();
    Matrix::from_cols(field, &cols, n)
}

/// `K[x,y]/(x^n, y^n)`, `deg x = -1`, `deg y = 1`; basis `x^a y^b` at `a n + b`.
pub fn truncated_square(n: usize, field: Field) -> Result<Bundle, ZooError> {
    if n < 2 {
        return Err(ZooError::BadParameter("truncated square needs n >= 2".into()));
    }
    let dim = n * n;
    let degrees = (0..dim).map(|i| (i % n) as i32 - (i / n) as i32).collect();
    let alg = GradedAlgebra::from_fn(field, degrees, unit_vec(field, dim, 0), |i, j| {
        let (a, b) = (i / n + j / n, i % n + j % n);
        if a < n && b < n {
            vec![(a * n + b, field.one())]
        } else {
            vec![]
        }
    });
    let top = (n - 1) * n + (n - 1);
    let ci = CIPresentation { generators: vec![1], relations: vec![n as i32] };
    Ok(Bundle {
        name: format!("truncated-square-{}", n),
        triangular: Some(TriangularData {
            minus: basis(field, dim, (0..n).map(|a| a * n)),
            torus: basis(field, dim, [0]),
            plus: basis(field, dim, 0..n),
            irr: trivial_irr(field),
            labels: vec!["triv".into()],
        }),
        anti_involution: Some(perm_matrix(field, dim, |i| (i % n) * n + i / n)),
        frobenius_hint: Some((0, unit_vec(field, dim, top))),
        ci_minus: Some(ci.clone()),
        ci_plus: Some(ci),
        algebra: alg,
    })
}

/// `K<x,y>/(x^2, yx, y^2)` on `1, x, y, xy`.
pub fn pathological4dim(field: Field) -> Bundle {
    let one = field.one();
    let alg = GradedAlgebra::from_fn(field, vec![0, -1, 1, 0], unit_vec(field, 4, 0), |i, j| match (i, j) {
        (0, j) => vec![(j, one.clone())],
        (i, 0) => vec![(i, one.clone())],
        (1, 2) => vec![(3, one.clone())],
        _ => vec![],
    });
    Bundle {
        name: "pathological".into(),
        triangular: Some(TriangularData {
            minus: basis(field, 4, [0, 1]),
            torus: basis(field, 4, [0]),
            plus: basis(field, 4, [0, 2]),
            irr: trivial_irr(field),
            labels: vec!["triv".into()],
        }),
        anti_involution: Some(perm_matrix(field, 4, |i| [0, 2, 1, 3][i])),
        frobenius_hint: None,
        ci_minus: Some(CIPresentation { generators: vec![1], relations: vec![2] }),
        ci_plus: Some(CIPresentation { generators: vec![1], relations: vec![2] }),
        algebra: alg,
    }
}

/// Commutative `K[x,y]/(x^2, xy, y^2)` on `1, x, y`; carries no triangular section.
pub fn degenerate_triple(field: Field) -> Bundle {
    let one = field.one();
    let alg = GradedAlgebra::from_fn(field, vec![0, -1, 1], unit_vec(field, 3, 0), |i, j| match (i, j) {
        (0, j) => vec![(j, one.clone())],
        (i, 0) => vec![(i, one.clone())],
        _ => vec![],
    });
    Bundle {
        name: "degenerate-triple".into(),
        algebra: alg,
        triangular: None,
        anti_involution: None,
        frobenius_hint: None,
        ci_minus: None,
        ci_plus: None,
    }
}

/// The two candidate triples for [`degenerate_triple`]: `(K[x]/x^2, K, K[y]/y^2)` and its mirror.
pub fn degenerate_candidates(field: Field) -> Vec<(Vec<Vector>, Vec<Vector>, Vec<Vector>)> {
    vec![
        (basis(field, 3, [0, 1]), basis(field, 3, [0]), basis(field, 3, [0, 2])),
        (basis(field, 3, [0, 2]), basis(field, 3, [0]), basis(field, 3, [0, 1])),
    ]
}

/// `K[x]/(x^m) x| Z_m` with `g x = zeta^{-1} x g`; basis `g^k x^b` at `k m + b`, `deg x = 1`.
pub fn coinvariant_skew(m: usize) -> Result<Bundle, ZooError> {
    if m < 2 {
        return Err(ZooError::BadParameter("coinvariant skew needs m >= 2".into()));
    }
    let field = Field::cyclotomic(m as u32);
    let zeta = field.zeta();
    let dim = m * m;
    let degrees = (0..dim).map(|i| (i % m) as i32).collect();
    let alg = GradedAlgebra::from_fn(field, degrees, unit_vec(field, dim, 0), |i, j| {
        let (k, b) = (i / m, i % m);
        let (l, c) = (j / m, j % m);
        if b + c >= m {
            return vec![];
        }
        // x^b g^l = zeta^{bl} g^l x^b
        vec![(((k + l) % m) * m + b + c, zeta.pow((b * l) as u64))]
    });
    let irr = scalar_irr((0..m).map(|i| (0..m).map(|k| zeta.pow((i * k) as u64)).collect()).collect());
    Ok(Bundle {
        name: format!("coinvariant-skew-{}", m),
        triangular: Some(TriangularData {
            minus: basis(field, dim, [0]),
            torus: basis(field, dim, (0..m).map(|k| k * m)),
            plus: basis(field, dim, 0..m),
            irr,
            labels: (0..m).map(|i| format!("chi{}", i)).collect(),
        }),
        anti_involution: None,
        frobenius_hint: None,
        ci_minus: Some(CIPresentation { generators: vec![], relations: vec![] }),
        ci_plus: Some(CIPresentation { generators: vec![1], relations: vec![m as i32] }),
        algebra: alg,
    })
}

/// Elements of the restricted enveloping algebra as `(a, c) -> values of a function of h on F_p`.
type Sl2Elem = std::collections::BTreeMap<(usize, usize), Vec<u64>>;

fn sl2_add(e: &mut Sl2Elem, key: (usize, usize), v: Vec<u64>, p: u64) {
    let slot = e.entry(key).or_insert_with(|| vec![0; p as usize]);
    for (s, x) in slot.iter_mut().zip(v) {
        *s = (*s + x) % p;
    }
    if slot.iter().all(|&x| x == 0) {
        e.remove(&key);
    }
}

/// Left multiplication by `f` (0), `h` (1) or `e` (2) on `f^a P(h) e^c`.
fn sl2_gen(g: u8, x: &Sl2Elem, p: u64) -> Sl2Elem {
    let pu = p as usize;
    let mut out = Sl2Elem::new();
    for (&(a, c), v) in x {
        match g {
            0 => {
                if a + 1 < pu {
                    sl2_add(&mut out, (a + 1, c), v.clone(), p);
                }
            }
            1 => {
                // h f^a = f^a (h - 2a)
                let w = (0..pu).map(|l| (l as u64 + 2 * p * p - 2 * a as u64) % p * v[l] % p).collect();
                sl2_add(&mut out, (a, c), w, p);
            }
            _ => {
                // e f^a P(h) e^c = f^a P(h-2) e^{c+1} + a f^{a-1} (h - a + 1) P(h) e^c
                if c + 1 < pu {
                    let w = (0..pu).map(|l| v[(l + 2 * pu - 2) % pu]).collect();
                    sl2_add(&mut out, (a, c + 1), w, p);
                }
                if a > 0 {
                    let w = (0..pu)
                        .map(|l| (a as u64 % p) * ((l as u64 + p * p + 1 - a as u64) % p) % p * v[l] % p)
                        .collect();
                    sl2_add(&mut out, (a - 1, c), w, p);
                }
            }
        }
    }
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut r = 1;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Inverse of the Vandermonde matrix `V[l][b] = l^b` over `F_p` (with `0^0 = 1`).
fn vandermonde_inverse(p: u64) -> Vec<Vec<u64>> {
    let n = p as usize;
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|l| {
            let mut row: Vec<u64> = (0..n).map(|b| (0..b).fold(1, |acc, _| acc * l as u64 % p)).collect();
            row.extend((0..n).map(|j| u64::from(j == l)));
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| a[r][c] != 0).unwrap();
        a.swap(c, piv);
        let inv = inv_mod(a[c][c], p);
        for x in a[c].iter_mut() {
            *x = *x * inv % p;
        }
        let prow = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != c && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Restricted enveloping algebra of `sl_2` over `F_p`; basis `f^a h^b e^c` at `(a p + b) p + c`,
/// degree `c - a`.
pub fn restricted_sl2(p: u32) -> Result<Bundle, ZooError> {
    if p < 3 || !(2..p).all(|d| p % d != 0) {
        return Err(ZooError::BadParameter("restricted sl2 needs an odd prime p".into()));
    }
    let field = Field::prime(p);
    let pu = p as usize;
    let pp = p as u64;
    let dim = pu * pu * pu;
    let vinv = vandermonde_inverse(pp);
    let index = |a: usize, b: usize, c: usize| (a * pu + b) * pu + c;
    // values of h^b at l
    let hpow = |b: usize| -> Vec<u64> { (0..pu).map(|l| (0..b).fold(1, |acc, _| acc * l as u64 % pp)).collect() };
    let degrees = (0..dim).map(|i| (i % pu) as i32 - (i / (pu * pu)) as i32).collect();
    let alg = GradedAlgebra::from_fn(field, degrees, unit_vec(field, dim, 0), |i, j| {
        let (a, b, c) = (i / (pu * pu), (i / pu) % pu, i % pu);
        let (a2, b2, c2) = (j / (pu * pu), (j / pu) % pu, j % pu);
        let mut x = Sl2Elem::new();
        x.insert((a2, c2), hpow(b2));
        for _ in 0..c {
            x = sl2_gen(2, &x, pp);
        }
        for _ in 0..b {
            x = sl2_gen(1, &x, pp);
        }
        for _ in 0..a {
            x = sl2_gen(0, &x, pp);
        }
        let mut out: SparseVec = Vec::new();
        for ((a3, c3), v) in x {
            for (bb, row) in vinv.iter().enumerate() {
                let coeff = row.iter().zip(&v).fold(0, |acc, (r, y)| (acc + r * y) % pp);
                if coeff != 0 {
                    out.push((index(a3, bb, c3), field.from_i64(coeff as i64)));
                }
            }
        }
        out
    });
    let irr = scalar_irr((0..pu).map(|l| (0..pu).map(|b| field.from_i64(hpow(b)[l] as i64)).collect()).collect());
    let ci = CIPresentation { generators: vec![1], relations: vec![p as i32] };
    Ok(Bundle {
        name: format!("restricted-sl2-{}", p),
        triangular: Some(TriangularData {
            minus: basis(field, dim, (0..pu).map(|a| index(a, 0, 0))),
            torus: basis(field, dim, (0..pu).map(|b| index(0, b, 0))),
            plus: basis(field, dim, (0..pu).map(|c| index(0, 0, c))),
            irr,
            labels: (0..pu).map(|l| l.to_string()).collect(),
        }),
        anti_involution: Some(perm_matrix(field, dim, |i| {
            let (a, b, c) = (i / (pu * pu), (i / pu) % pu, i % pu);
            index(c, b, a)
        })),
        frobenius_hint: None,
        ci_minus: Some(ci.clone()),
        ci_plus: Some(ci),
        algebra: alg,
    })
}

/// Restricted rational Cherednik algebra at `t = 0` for `Z_l` acting on a line, with
/// `[y, x] = -2 sum_k c_k g^k`. Basis `x^a g^k y^b` at `(a l + k) l + b`, `deg x = -1`, `deg y = 1`.
pub fn rrca_cyclic(l: usize, c: &[Scalar]) -> Result<Bundle, ZooError> {
    if l < 2 {
        return Err(ZooError::BadParameter("rrca needs l >= 2".into()));
    }
    if c.len() != l - 1 {
        return Err(ZooError::BadParameter(format!("rrca for Z_{} needs {} parameters", l, l - 1)));
    }
    let field = Field::cyclotomic(l as u32);
    if c.iter().any(|x| x.field() != field) {
        return Err(ZooError::BadParameter(format!("parameters must lie in {}", field.descriptor())));
    }
    let zeta = field.zeta();
    let zinv = zeta.inv().unwrap();
    let dim = l * l * l;
    let index = |a: usize, k: usize, b: usize| (a * l + k % l) * l + b;
    let degrees = (0..dim).map(|i| (i % l) as i32 - (i / (l * l)) as i32).collect();
    // left multiplication by x (0), g (1), y (2) on a dense vector
    let gen = |g: u8, v: &Vector| -> Vector {
        let mut out = crate::linalg::zero_vec(field, dim);
        for (i, s) in v.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let (a, k, b) = (i / (l * l), (i / l) % l, i % l);
            match g {
                0 => {
                    if a + 1 < l {
                        out[index(a + 1, k, b)].add_assign(s);
                    }
                }
                1 => out[index(a, k + 1, b)].add_mul(s, &zinv.pow(a as u64)),
                _ => {
                    if b + 1 < l {
                        out[index(a, k, b + 1)].add_mul(s, &zinv.pow(k as u64));
                    }
                    if a > 0 {
                        // y x^a = x^a y - 2 sum_j c_j (sum_i zeta^{-j(a-1-i)}) x^{a-1} g^j
                        for (j0, cj) in c.iter().enumerate() {
                            let j = j0 + 1;
                            let mut sum = field.zero();
                            for i in 0..a {
                                sum.add_assign(&zinv.pow((j * (a - 1 - i)) as u64));
                            }
                            let coef = field.from_i64(-2).mul(cj).mul(&sum).mul(s);
                            out[index(a - 1, j + k, b)].add_assign(&coef);
                        }
                    }
                }
            }
        }
        out
    };
    let alg = GradedAlgebra::from_fn(field, degrees, unit_vec(field, dim, 0), |i, j| {
        let (a, k, b) = (i / (l * l), (i / l) % l, i % l);
        let mut v = unit_vec(field, dim, j);
        for _ in 0..b {
            v = gen(2, &v);
        }
        for _ in 0..k {
            v = gen(1, &v);
        }
        for _ in 0..a {
            v = gen(0, &v);
        }
        crate::algebra::dense_to_sparse(&v)
    });
    let irr = scalar_irr((0..l).map(|i| (0..l).map(|k| zeta.pow((i * k) as u64)).collect()).collect());
    let anti_involution = (l == 2).then(|| {
        perm_matrix(field, dim, |i| {
            let (a, k, b) = (i / (l * l), (i / l) % l, i % l);
            index(b, k, a)
        })
    });
    let ci = CIPresentation { generators: vec![1], relations: vec![l as i32] };
    let cs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    Ok(Bundle {
        name: format!("rrca-{}[{}]", l, cs.join(",")),
        triangular: Some(TriangularData {
            minus: basis(field, dim, (0..l).map(|a| index(a, 0, 0))),
            torus: basis(field, dim, (0..l).map(|k| index(0, k, 0))),
            plus: basis(field, dim, (0..l).map(|b| index(0, 0, b))),
            irr,
            labels: (0..l).map(|i| format!("chi{}", i)).collect(),
        }),
        anti_involution,
        frobenius_hint: None,
        ci_minus: Some(ci.clone()),
        ci_plus: Some(ci),
        algebra: alg,
    })
}

/// The designated generic parameter `c = (1, 2, ..., l-1)`.
pub fn rrca_generic_parameters(l: usize) -> Vec<Scalar> {
    let field = Field::cyclotomic(l as u32);
    (1..l).map(|k| field.from_i64(k as i64)).collect()
}

/// Deterministic perturbation used when a parameter vector fails the genericity certificate.
pub fn rrca_perturb(c: &[Scalar], round: usize) -> Vec<Scalar> {
    c.iter().enumerate().map(|(k, x)| x.add(&x.field().from_frac((k + round + 1) as i64, 7))).collect()
}

/// `K[x, eps]/(x^2, eps^2)` with `deg x = -1`, `T = K[eps]/(eps^2)` non-semisimple; basis `x^a eps^b` at `2a + b`.
pub fn dual_numbers_torus(field: Field) -> Bundle {
    let alg = GradedAlgebra::from_fn(field, vec![0, 0, -1, -1], unit_vec(field, 4, 0), |i, j| {
        let (a, b) = (i / 2 + j / 2, i % 2 + j % 2);
        if a < 2 && b < 2 {
            vec![(2 * a + b, field.one())]
        } else {
            vec![]
        }
    });
    Bundle {
        name: "dual-numbers-torus".into(),
        triangular: Some(TriangularData {
            minus: basis(field, 4, [0, 2]),
            torus: basis(field, 4, [0, 1]),
            plus: basis(field, 4, [0]),
            irr: vec![vec![Matrix::identity(field, 1), Matrix::zeros(field, 1, 1)]],
            labels: vec!["triv".into()],
        }),
        anti_involution: None,
        frobenius_hint: None,
        ci_minus: Some(CIPresentation { generators: vec![1], relations: vec![2] }),
        ci_plus: Some(CIPresentation { generators: vec![], relations: vec![] }),
        algebra: alg,
    }
}

/// `A = T = Q Z_2`, with `A^- = A^+ = K`.
pub fn semisimple_torus() -> Bundle {
    let field = Field::Rational;
    let alg = GradedAlgebra::from_fn(field, vec![0, 0], unit_vec(field, 2, 0), |i, j| vec![((i + j) % 2, field.one())]);
    let irr = scalar_irr(vec![vec![field.one(), field.one()], vec![field.one(), field.from_i64(-1)]]);
    Bundle {
        name: "semisimple-torus".into(),
        triangular: Some(TriangularData {
            minus: basis(field, 2, [0]),
            torus: basis(field, 2, [0, 1]),
            plus: basis(field, 2, [0]),
            irr,
            labels: vec!["triv".into(), "sign".into()],
        }),
        anti_involution: Some(Matrix::identity(field, 2)),
        frobenius_hint: Some((0, unit_vec(field, 2, 0))),
        ci_minus: Some(CIPresentation { generators: vec![], relations: vec![] }),
        ci_plus: Some(CIPresentation { generators: vec![], relations: vec![] }),
        algebra: alg,
    }
}

/// Names accepted by [`by_name`], with their parameter syntax.
pub const CATALOG: &[(&str, &str)] = &[
    ("truncated-square", "n [field]"),
    ("pathological", "[field]"),
    ("degenerate-triple", "[field]"),
    ("coinvariant-skew", "m"),
    ("restricted-sl2", "p"),
    ("rrca", "l [c_1 ... c_{l-1} | generic]"),
    ("dual-numbers-torus", "[field]"),
    ("semisimple-torus", ""),
];

fn parse_usize(s: Option<&String>, what: &str, default: Option<usize>) -> Result<usize, ZooError> {
    match s {
        None => default.ok_or_else(|| ZooError::BadParameter(format!("missing {}", what))),
        Some(s) => s.parse().map_err(|_| ZooError::BadParameter(format!("{} must be a positive integer, got `{}`", what, s))),
    }
}

fn parse_field(s: Option<&String>) -> Result<Field, ZooError> {
    match s {
        None => Ok(Field::Rational),
        Some(s) => Field::parse_descriptor(s).map_err(|e| ZooError::BadParameter(e.to_string())),
    }
}

/// Builds a bundle from a catalog name and string parameters.
pub fn by_name(name: &str, params: &[String]) -> Result<Bundle, ZooError> {
    match name {
        "truncated-square" => truncated_square(parse_usize(params.first(), "n", Some(2))?, parse_field(params.get(1))?),
        "pathological" => Ok(pathological4dim(parse_field(params.first())?)),
        "degenerate-triple" => Ok(degenerate_triple(parse_field(params.first())?)),
        "coinvariant-skew" => coinvariant_skew(parse_usize(params.first(), "m", Some(2))?),
        "restricted-sl2" => restricted_sl2(parse_usize(params.first(), "p", Some(3))? as u32),
        "rrca" => {
            let l = parse_usize(params.first(), "l", Some(2))?;
            let rest = &params[params.len().min(1)..];
            if rest.is_empty() || rest == ["generic"] {
                generic_rrca(l)
            } else {
                let field = Field::cyclotomic(l as u32);
                let c = rest
                    .iter()
                    .map(|s| field.parse(s).map_err(|e| ZooError::BadParameter(e.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                rrca_cyclic(l, &c)
            }
        }
        "dual-numbers-torus" => Ok(dual_numbers_torus(parse_field(params.first())?)),
        "semisimple-torus" => Ok(semisimple_torus()),
        _ => Err(ZooError::Unknown(name.into())),
    }
}

/// RRCA at the designated generic parameter, perturbed until the block count equals `l`.
pub fn generic_rrca(l: usize) -> Result<Bundle, ZooError> {
    let mut c = rrca_generic_parameters(l);
    for round in 0..8 {
        let b = rrca_cyclic(l, &c)?;
        if crate::hwcat::block_count(&b.decomposition()?) == l {
            return Ok(b);
        }
        c = rrca_perturb(&c, round);
    }
    Err(ZooError::BadParameter(format!("no generic parameter certified for Z_{}", l)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundles_verify() {
        let q = Field::Rational;
        for b in [
            truncated_square(2, q).unwrap(),
            truncated_square(3, q).unwrap(),
            pathological4dim(q),
            degenerate_triple(q),
            coinvariant_skew(2).unwrap(),
            coinvariant_skew(3).unwrap(),
            dual_numbers_torus(q),
            semisimple_torus(),
        ] {
            assert!(b.algebra.verify().passed(), "{}", b.name);
            if b.triangular.is_some() {
                b.decomposition().unwrap();
            }
        }
    }

    #[test]
    fn restricted_sl2_relations() {
        let b = restricted_sl2(3).unwrap();
        let a = &b.algebra;
        assert_eq!(a.dim(), 27);
        assert!(a.verify().passed());
        let f = unit_vec(a.field(), 27, 9);
        let h = unit_vec(a.field(), 27, 3);
        let e = unit_vec(a.field(), 27, 1);
        // ef - fe = h
        let ef = a.mul(&e, &f);
        let fe = a.mul(&f, &e);
        assert_eq!(crate::linalg::sub_vec(&ef, &fe), h);
        // h^3 = h
        assert_eq!(a.mul(&a.mul(&h, &h), &h), h);
        b.decomposition().unwrap();
    }

    #[test]
    fn rrca_relations() {
        for l in [2usize, 3] {
            let field = Field::cyclotomic(l as u32);
            for c in [vec![field.zero(); l - 1], rrca_generic_parameters(l)] {
                let b = rrca_cyclic(l, &c).unwrap();
                assert!(b.algebra.verify().passed(), "{}", b.name);
                let td = b.decomposition().unwrap();
                assert!(td.ambidexterity_check().is_ok());
            }
        }
    }
}
