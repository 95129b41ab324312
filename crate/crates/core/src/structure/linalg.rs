//! Dense exact linear algebra: matrices, echelon forms and subspaces.

use crate::field::{FieldSpec, Scalar};

/// Row-major dense matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), n * cols, "ragged rows");
        Matrix {
            field,
            rows: n,
            cols,
            data,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !f.is_zero(b) {
                        let v = f.add(out.get(i, j), &f.mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(f.zero(), |acc, (a, b)| {
                    if f.is_zero(a) || f.is_zero(b) {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, b))
                    }
                })
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        let f = self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), &f.mul(&factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn is_nonsingular(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Basis of `{ v : M v = 0 }`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "square matrix");
        let f = self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else {
                return f.zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = f.neg(&det);
            }
            let pivot = m.get(c, c).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).expect("nonzero pivot");
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..n {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = self.field;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// A subspace of `𝕂ⁿ`, stored as the rows of its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let mut s = Subspace::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![field.zero(); ambient];
            v[i] = field.one();
            s.insert(v);
        }
        s
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> FieldSpec {
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

    /// Echelon basis vectors, ordered by pivot column.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row).skip(p) {
                if !f.is_zero(r) {
                    *o = f.sub(o, &f.mul(&c, r));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        let f = self.field;
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("nonzero");
        for x in r.iter_mut().skip(p) {
            *x = f.mul(x, &inv);
        }
        for row in &mut self.rows {
            let c = row[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&r).skip(p) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }
}

/// An ordered linearly independent family with coordinate extraction.
#[derive(Clone, Debug)]
pub struct Basis {
    vectors: Vec<Vec<Scalar>>,
    echelon: Matrix,
    pivots: Vec<usize>,
    transform: Matrix,
}

impl Basis {
    /// `None` when the vectors are linearly dependent.
    pub fn new(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Option<Self> {
        let k = vectors.len();
        let mut aug = Matrix::zeros(field, k, ambient + k);
        for (i, v) in vectors.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                aug.set(i, j, x.clone());
            }
            aug.set(i, ambient + i, field.one());
        }
        let pivots = aug.rref();
        if pivots.iter().filter(|&&p| p < ambient).count() < k {
            return None;
        }
        let mut echelon = Matrix::zeros(field, k, ambient);
        let mut transform = Matrix::zeros(field, k, k);
        for i in 0..k {
            for j in 0..ambient {
                echelon.set(i, j, aug.get(i, j).clone());
            }
            for j in 0..k {
                transform.set(i, j, aug.get(i, ambient + j).clone());
            }
        }
        Some(Basis {
            vectors,
            echelon,
            pivots,
            transform,
        })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    /// Coordinates of `v` in this basis, or `None` when `v` lies outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = self.echelon.field();
        let mut rest = v.to_vec();
        let mut out = vec![f.zero(); self.len()];
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = rest[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (x, y) in rest.iter_mut().zip(self.echelon.row(r)) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
            for (o, t) in out.iter_mut().zip(self.transform.row(r)) {
                if !f.is_zero(t) {
                    *o = f.add(o, &f.mul(&c, t));
                }
            }
        }
        rest.iter().all(|x| f.is_zero(x)).then_some(out)
    }

    /// `Σ cᵢ vᵢ`.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let f = self.echelon.field();
        let mut out = vec![f.zero(); self.echelon.cols()];
        for (c, v) in coords.iter().zip(&self.vectors) {
            if f.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v) {
                *o = f.add(o, &f.mul(c, x));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: FieldSpec = FieldSpec::Prime(10009);

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(F, rows.iter().map(|r| r.iter().map(|&x| F.from_i64(x)).collect()).collect())
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|x| F.is_zero(x)));
        assert!(!a.is_nonsingular());
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(F, 2));
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_none());
        assert_eq!(a.determinant(), F.one());
        assert_eq!(m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]).determinant(), F.from_i64(-5));
    }

    #[test]
    fn subspace_insert_keeps_rref() {
        let v = |xs: &[i64]| xs.iter().map(|&x| F.from_i64(x)).collect::<Vec<_>>();
        let mut s = Subspace::zero(F, 3);
        assert!(s.insert(v(&[0, 2, 4])));
        assert!(s.insert(v(&[1, 1, 1])));
        assert!(!s.insert(v(&[2, 4, 6])));
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(s.basis()[0], v(&[1, 0, -1]));
        assert_eq!(s.basis()[1], v(&[0, 1, 2]));
        assert!(s.contains(&v(&[3, 5, 7])));
        assert!(!s.contains(&v(&[0, 0, 1])));
        assert_eq!(Subspace::full(F, 3).dim(), 3);
    }

    #[test]
    fn basis_coordinates() {
        let v = |xs: &[i64]| xs.iter().map(|&x| F.from_i64(x)).collect::<Vec<_>>();
        let b = Basis::new(F, 3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let c = b.coords(&v(&[2, 5, 3])).unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert_eq!(b.combine(&c), v(&[2, 5, 3]));
        assert!(b.coords(&v(&[1, 0, 0])).is_none());
        assert!(Basis::new(F, 2, vec![v(&[1, 2]), v(&[2, 4])]).is_none());
    }

    #[test]
    fn rationals_rank() {
        let q = FieldSpec::Rationals;
        let a = Matrix::from_rows(
            q,
            vec![
                vec![q.from_ratio(1, 2).unwrap(), q.one()],
                vec![q.one(), q.from_i64(2)],
            ],
        );
        assert_eq!(a.rank(), 1);
    }
}
