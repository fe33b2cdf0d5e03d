//! Dense linear algebra over a prime field `F_p`.
//!
//! Every Hom, Ext, rank and cone computation in the crate bottoms out here.
//! Matrices are tiny (a few hundred rows at most), so everything is dense and
//! row-major, with plain Gaussian elimination.

use std::fmt;

/// The prime field `F_p`. Elements are `u32` residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Default for Field {
    fn default() -> Self {
        Field { p: 2 }
    }
}

impl Field {
    /// Panics if `p` is not a prime.
    pub fn new(p: u32) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        Field { p }
    }

    pub fn prime(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn pow(self, mut a: u32, mut e: u32) -> u32 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// All elements `0..p`.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.p
    }

    /// Every vector of length `dim` over the field, in lexicographic order.
    /// Callers keep `p^dim` small.
    pub fn all_vectors(self, dim: usize) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0; dim]];
        for i in 0..dim {
            let mut next = Vec::with_capacity(out.len() * self.p as usize);
            for v in &out {
                for c in 0..self.p {
                    let mut w = v.clone();
                    w[i] = c;
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    /// One representative per line through the origin: nonzero vectors whose
    /// first nonzero entry is 1.
    pub fn projective_points(self, dim: usize) -> Vec<Vec<u32>> {
        self.all_vectors(dim)
            .into_iter()
            .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
            .collect()
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Row-major dense matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over F_{}",
            self.rows, self.cols, self.field.p
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, field.reduce(x));
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), rows);
            for (i, &x) in v.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: u32) {
        let i = r * self.cols + c;
        self.data[i] = self.field.add(self.data[i], v);
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        out.add_at(i, j, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(
            self.cols,
            v.len(),
            "dimension mismatch in matrix-vector product"
        );
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(self.field.neg(1))
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(piv) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if piv != row {
                for c in 0..self.cols {
                    self.data.swap(piv * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col));
            for c in col..self.cols {
                let v = self.get(row, c);
                self.set(row, c, f.mul(v, inv));
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = f.sub(self.get(r, c), f.mul(factor, self.get(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}

/// Rank over the field.
pub fn rank(m: &Matrix) -> usize {
    let mut work = m.clone();
    work.rref().len()
}

/// Basis of the null space `{v : m v = 0}`, one vector per free column.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<u32>> {
    let f = m.field();
    let mut work = m.clone();
    let pivots = work.rref();
    let mut is_pivot = vec![None; m.cols()];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let mut basis = Vec::new();
    for free in 0..m.cols() {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![0; m.cols()];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(work.get(r, free));
        }
        basis.push(v);
    }
    basis
}

/// Some `x` with `m x = b`, or `None` when the system is inconsistent.
///
/// Panics when `b` does not have `m.rows()` entries.
pub fn solve(m: &Matrix, b: &[u32]) -> Option<Vec<u32>> {
    assert_eq!(b.len(), m.rows(), "right-hand side has the wrong length");
    let f = m.field();
    let mut aug = Matrix::zeros(f, m.rows(), m.cols() + 1);
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            aug.set(r, c, m.get(r, c));
        }
        aug.set(r, m.cols(), b[r]);
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![0; m.cols()];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, m.cols());
    }
    Some(x)
}

/// Incrementally maintained span of vectors, kept in echelon form.
///
/// Used to pick complements (Hom bases modulo homotopy, minimal
/// approximations) without recomputing ranks from scratch.
#[derive(Debug, Clone)]
pub struct Span {
    field: Field,
    dim: usize,
    // (pivot column, row normalised so that row[pivot] == 1)
    rows: Vec<(usize, Vec<u32>)>,
}

impl Span {
    pub fn new(field: Field, dim: usize) -> Self {
        Span {
            field,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Reduce `v` against the current rows.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            let c = w[*p];
            if c != 0 {
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns true when it was independent of the current span.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.dim);
        let f = self.field;
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[p]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&w) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::new(2)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(f2(), 3)), 3);
        assert_eq!(rank(&Matrix::zeros(f2(), 2, 5)), 0);
        assert_eq!(rank(&Matrix::from_rows(f2(), &[vec![1, 1], vec![1, 1]])), 1);
        // Over F_3 the same matrix still has rank 1, but [[1,1],[1,2]] has rank 2.
        let f3 = Field::new(3);
        assert_eq!(rank(&Matrix::from_rows(f3, &[vec![1, 1], vec![1, 2]])), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(f2(), 2)).is_empty());
        let k = kernel_basis(&Matrix::zeros(f2(), 2, 2));
        assert_eq!(k, vec![vec![1, 0], vec![0, 1]]);
        let k = kernel_basis(&Matrix::from_rows(f2(), &[vec![1, 1]]));
        assert_eq!(k, vec![vec![1, 1]]);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(f2(), 3);
        assert_eq!(solve(&id, &[1, 0, 1]), Some(vec![1, 0, 1]));
        assert_eq!(solve(&Matrix::zeros(f2(), 2, 2), &[0, 1]), None);
        let x = solve(&Matrix::from_rows(f2(), &[vec![1, 1]]), &[1]).unwrap();
        assert!(x == vec![1, 0] || x == vec![0, 1]);
    }

    #[test]
    #[should_panic]
    fn solve_rejects_bad_rhs() {
        solve(&Matrix::identity(f2(), 2), &[1]);
    }

    #[test]
    fn span_tracks_rank() {
        let f = Field::new(5);
        let mut s = Span::new(f, 3);
        assert!(s.insert(&[1, 2, 3]));
        assert!(!s.insert(&[2, 4, 1]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(s.contains(&[1, 3, 4]));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn projective_points_count() {
        // (p^d - 1)/(p - 1) lines.
        assert_eq!(Field::new(2).projective_points(3).len(), 7);
        assert_eq!(Field::new(3).projective_points(2).len(), 4);
    }
}
