//! Dense matrices, reduced echelon forms and canonical subspaces.

use crate::field::{Field, Scalar};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

pub type Vector = Vec<Scalar>;

pub fn zero_vec(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `y += a * x`
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            yi.add_mul(a, xi);
        }
    }
}

pub fn scale_vec(v: &[Scalar], a: &Scalar) -> Vector {
    v.iter().map(|x| x.mul(a)).collect()
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vector], cols: usize) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, field, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(field: Field, cols: &[Vector], rows: usize) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, j, x.clone());
                }
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, &rows, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    t.set(j, i, x.clone());
                }
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut r = Matrix::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = o.row(k);
                let rrow = &mut r.data[i * o.cols..(i + 1) * o.cols];
                for (x, y) in rrow.iter_mut().zip(orow) {
                    if !y.is_zero() {
                        x.add_mul(a, y);
                    }
                }
            }
        }
        r
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len());
        let mut r = zero_vec(self.field, self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, ri) in r.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    ri.add_mul(a, x);
                }
            }
        }
        r
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    pub fn scale(&self, a: &Scalar) -> Matrix {
        let data = self.data.iter().map(|x| x.mul(a)).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    /// `self += a * o`
    pub fn add_scaled(&mut self, a: &Scalar, o: &Matrix) {
        if a.is_zero() {
            return;
        }
        for (x, y) in self.data.iter_mut().zip(&o.data) {
            if !y.is_zero() {
                x.add_mul(a, y);
            }
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Reduced row echelon form with its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.row_vecs();
        let pivots = rref_rows(&mut rows, self.cols);
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for r in &rows {
            data.extend(r.iter().cloned());
        }
        (Matrix { rows: self.rows, cols: self.cols, field: self.field, data }, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vecs();
        rref_rows(&mut rows, self.cols).len()
    }

    /// Right null space in canonical form.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vec(self.field, self.cols);
            v[f] = self.field.one();
            for (k, &p) in pivots.iter().enumerate() {
                let x = r.get(k, f);
                if !x.is_zero() {
                    v[p] = x.neg();
                }
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, basis)
    }

    /// One exact solution of `self * x = rhs`, or `None` when inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vector> {
        assert_eq!(rhs.len(), self.rows);
        let mut rows: Vec<Vector> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(rhs[i].clone());
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.field, self.cols);
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = rows[k][self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut rows: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(unit_vec(self.field, n, i));
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let inv: Vec<Vector> = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(self.field, &inv, n))
    }

    /// Kronecker product.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            m.set(i * o.rows + k, j * o.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        m
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", r.join(", "))?;
        }
        Ok(())
    }
}

/// In-place Gauss-Jordan on row vectors of length `cols`; returns pivot columns.
/// Zero rows end up at the bottom.
pub fn rref_rows(rows: &mut [Vector], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
        }
        let pivot_row = rows[r].clone();
        let nz: Vec<usize> = (c..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j].sub_mul(&f, &pivot_row[j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A subspace of `K^n` stored by its reduced echelon basis, so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let rows = (0..ambient).map(|i| unit_vec(field, ambient, i)).collect();
        Subspace { field, ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn from_vectors(field: Field, ambient: usize, vs: impl IntoIterator<Item = Vector>) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the projection onto pivot coordinates; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (j, x) in row.iter().enumerate().skip(p) {
                    if !x.is_zero() {
                        v[j].sub_mul(&f, x);
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vec(&w)
    }

    /// Adds `v` to the span, keeping the basis fully reduced. Returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (j, x) in v.iter().enumerate().skip(p) {
                    if !x.is_zero() {
                        row[j].sub_mul(&f, x);
                    }
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    /// Coordinates with respect to the stored basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates of `v` read off the pivot columns, assuming `v` lies in the subspace.
    pub fn coords_unchecked(&self, v: &[Scalar]) -> Vector {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Non-pivot columns: the standard vectors there span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_p = vec![false; self.ambient];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_p[i]).collect()
    }

    /// Coordinates of the class of `v` in the quotient, on the complement basis.
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vector {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        self.complement_indices().into_iter().map(|i| w[i].clone()).collect()
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &o.rows {
            s.insert(v.clone());
        }
        s
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        if self.is_zero() || o.is_zero() {
            return Subspace::zero(self.field, self.ambient);
        }
        // a in self with a mod o = 0
        let k = self.dim();
        let comp = o.complement_indices();
        let mut m = Matrix::zeros(self.field, comp.len(), k);
        for (j, v) in self.rows.iter().enumerate() {
            let q = o.quotient_coords(v);
            for (i, x) in q.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        let ker = m.kernel();
        let vs = ker.basis().iter().map(|c| combine(self.field, self.ambient, &self.rows, c));
        Subspace::from_vectors(self.field, self.ambient, vs.collect::<Vec<_>>())
    }

    pub fn is_subspace_of(&self, o: &Subspace) -> bool {
        self.rows.iter().all(|v| o.contains(v))
    }

    /// Basis matrix with the basis vectors as columns.
    pub fn col_matrix(&self) -> Matrix {
        Matrix::from_cols(self.field, &self.rows, self.ambient)
    }
}

/// `sum_i c_i v_i`
pub fn combine(field: Field, n: usize, vs: &[Vector], c: &[Scalar]) -> Vector {
    let mut r = zero_vec(field, n);
    for (v, a) in vs.iter().zip(c) {
        axpy(&mut r, a, v);
    }
    r
}

/// Coordinates with respect to an arbitrary (ordered, independent) basis.
#[derive(Clone, Debug)]
pub struct CoordBasis {
    vectors: Vec<Vector>,
    span: Subspace,
    /// `coords(v)_j = sum_r v[pivot_r] * m[r][j]`
    m: Vec<Vector>,
}

impl CoordBasis {
    /// Panics if the vectors are dependent.
    pub fn new(field: Field, ambient: usize, vectors: Vec<Vector>) -> CoordBasis {
        Self::try_new(field, ambient, vectors).expect("basis vectors are linearly dependent")
    }

    pub fn try_new(field: Field, ambient: usize, vectors: Vec<Vector>) -> Option<CoordBasis> {
        let k = vectors.len();
        let mut rows: Vec<Vector> = vectors
            .iter()
            .enumerate()
            .map(|(j, v)| {
                let mut r = v.clone();
                r.extend(unit_vec(field, k, j));
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, ambient + k);
        if k > 0 && (pivots.len() < k || pivots[k - 1] >= ambient) {
            return None;
        }
        let m: Vec<Vector> = rows.iter().map(|r| r[ambient..].to_vec()).collect();
        let span = Subspace::from_vectors(field, ambient, vectors.clone());
        Some(CoordBasis { vectors, span, m })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.span.contains(v) {
            return None;
        }
        Some(self.coords_unchecked(v))
    }

    pub fn coords_unchecked(&self, v: &[Scalar]) -> Vector {
        let field = self.span.field();
        let mut c = zero_vec(field, self.vectors.len());
        for (r, &p) in self.span.pivots().iter().enumerate() {
            axpy(&mut c, &v[p], &self.m[r]);
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let q = Field::Rational;
        let i2 = Matrix::identity(q, 2);
        let (r, p) = i2.rref();
        assert_eq!(r, i2);
        assert_eq!(p.len(), 2);
        let z = Matrix::zeros(q, 3, 4);
        assert_eq!(z.rref().0, z);
        assert_eq!(z.rank(), 0);
        let m = Matrix::from_i64(q, &[&[1, 2], &[2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(q, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let q = Field::Rational;
        assert_eq!(Matrix::identity(q, 3).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(q, 3, 3).kernel(), Subspace::full(q, 3));
        let f2 = Field::prime(2);
        let k = Matrix::from_i64(f2, &[&[1, 1]]).kernel();
        // all four vectors of F_2^2, by enumeration
        let mut sols = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                if (a + b) % 2 == 0 {
                    sols.push((a, b));
                }
            }
        }
        assert_eq!(sols.len(), 1 << k.dim());
        assert!(k.contains(&[f2.one(), f2.one()]));
    }

    #[test]
    fn solve_examples() {
        let q = Field::Rational;
        let v = vec![q.from_i64(3), q.from_i64(-1)];
        assert_eq!(Matrix::identity(q, 2).solve(&v), Some(v.clone()));
        let m = Matrix::from_i64(q, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.solve(&[q.from_i64(1), q.from_i64(3)]), None);
        let two = Matrix::from_i64(q, &[&[2]]);
        assert_eq!(two.solve(&[q.one()]), Some(vec![q.from_frac(1, 2)]));
    }

    #[test]
    fn coord_basis() {
        let q = Field::Rational;
        let vs = vec![vec![q.from_i64(1), q.from_i64(1)], vec![q.from_i64(1), q.from_i64(-1)]];
        let b = CoordBasis::new(q, 2, vs);
        let c = b.coords(&[q.from_i64(3), q.from_i64(1)]).unwrap();
        assert_eq!(c, vec![q.from_i64(2), q.from_i64(1)]);
    }

    #[test]
    fn intersection() {
        let q = Field::Rational;
        let a = Subspace::from_vectors(q, 3, vec![unit_vec(q, 3, 0), unit_vec(q, 3, 1)]);
        let b = Subspace::from_vectors(q, 3, vec![unit_vec(q, 3, 1), unit_vec(q, 3, 2)]);
        let c = a.intersect(&b);
        assert_eq!(c, Subspace::from_vectors(q, 3, vec![unit_vec(q, 3, 1)]));
    }
}
