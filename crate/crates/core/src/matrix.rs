//! Dense matrices and linear maps.
//!
//! A matrix with `rows × cols` entries represents a linear map from a
//! `cols`-dimensional space to a `rows`-dimensional one; column `j` is the
//! image of the `j`-th basis vector. Tensor product bases are flattened
//! left-factor-major: `(i, j) ↦ i·dim₂ + j`, which makes flattening of
//! iterated tensors associative.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from row vectors. Panics if rows have unequal length.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m[(i, j)] = x.clone();
                }
            }
        }
        m
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| S::from_i64(x)).collect()).collect())
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[S] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<S>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Matrix product `self · rhs` (composition `self ∘ rhs`).
    pub fn mul(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(
            self.cols, rhs.rows,
            "shape mismatch in product: {:?} · {:?}",
            self.shape(),
            rhs.shape()
        );
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let rrow = rhs.row(k);
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(rrow) {
                    if !b.is_zero() {
                        *o += a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    /// Applies the map to a vector.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        let mut out = vec![S::zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + k];
                if !a.is_zero() {
                    *o += a.clone() * x.clone();
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.shape(), rhs.shape());
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.shape(), rhs.shape());
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &S) -> Matrix<S> {
        let data = self.data.iter().map(|a| a.clone() * c.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// In-place `self += c · rhs`.
    pub fn add_scaled(&mut self, c: &S, rhs: &Matrix<S>) {
        assert_eq!(self.shape(), rhs.shape());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                *a += c.clone() * b.clone();
            }
        }
    }

    /// Kronecker product; realises `f ⊗ g` on left-major tensor bases.
    pub fn neg(&self) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x.clone()).collect() }
    }

    pub fn kron(&self, rhs: &Matrix<S>) -> Matrix<S> {
        let (r1, c1) = self.shape();
        let (r2, c2) = rhs.shape();
        let mut out = Self::zeros(r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = &rhs[(k, l)];
                        if !b.is_zero() {
                            out[(i * r2 + k, j * c2 + l)] = a.clone() * b.clone();
                        }
                    }
                }
            }
        }
        out
    }

    /// `(a ⊗ b) · x` without forming the Kronecker product.
    pub fn kron_mul(a: &Matrix<S>, b: &Matrix<S>, x: &Matrix<S>) -> Matrix<S> {
        let (ar, ac) = a.shape();
        let (br, bc) = b.shape();
        assert_eq!(x.rows(), ac * bc, "kron_mul shape mismatch");
        let bt = b.transpose();
        let mut out = Matrix::zeros(ar * br, x.cols());
        for j in 0..x.cols() {
            let v = Matrix::from_fn(ac, bc, |p, q| x[(p * bc + q, j)].clone());
            if v.is_zero() {
                continue;
            }
            let w = a.mul(&v).mul(&bt);
            for (t, val) in w.data.into_iter().enumerate() {
                out[(t, j)] = val;
            }
        }
        out
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.rows, rhs.rows);
        Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    /// Row-major flattening, used when a matrix is itself an unknown.
    pub fn to_vec(&self) -> Vec<S> {
        self.data.clone()
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Column vector of a basis element.
pub fn unit<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

/// Tensor product of two vectors (left-major).
pub fn tensor_vec<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        if x.is_zero() {
            out.resize(out.len() + b.len(), S::zero());
            continue;
        }
        for y in b {
            out.push(x.clone() * y.clone());
        }
    }
    out
}

pub fn vec_is_zero<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn vec_add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn vec_scale<S: Scalar>(a: &[S], c: &S) -> Vec<S> {
    a.iter().map(|x| x.clone() * c.clone()).collect()
}

/// The flip `V ⊗ W → W ⊗ V`.
pub fn flip<S: Scalar>(dv: usize, dw: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(dv * dw, dv * dw);
    for i in 0..dv {
        for j in 0..dw {
            m[(j * dv + i, i * dw + j)] = S::one();
        }
    }
    m
}

/// Reorders tensor factors: output factor `k` is input factor `order[k]`.
/// `dims` are the input factor dimensions.
pub fn permute<S: Scalar>(dims: &[usize], order: &[usize]) -> Matrix<S> {
    assert_eq!(dims.len(), order.len());
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
    let mut m = Matrix::zeros(total, total);
    let mut idx = vec![0usize; dims.len()];
    for src in 0..total {
        let mut rest = src;
        for k in (0..dims.len()).rev() {
            idx[k] = rest % dims[k];
            rest /= dims[k];
        }
        let mut dst = 0;
        for (k, &o) in order.iter().enumerate() {
            dst = dst * out_dims[k] + idx[o];
        }
        m[(dst, src)] = S::one();
    }
    m
}

/// A k-linear map between finite-dimensional spaces, optionally labelled
/// with the names of the tensor factors of its domain and codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap<S: Scalar> {
    pub matrix: Matrix<S>,
    pub domain_labels: Vec<String>,
    pub codomain_labels: Vec<String>,
}

impl<S: Scalar> LinearMap<S> {
    pub fn new(matrix: Matrix<S>) -> Self {
        LinearMap { matrix, domain_labels: Vec::new(), codomain_labels: Vec::new() }
    }

    pub fn labelled(matrix: Matrix<S>, domain: &[&str], codomain: &[&str]) -> Self {
        LinearMap {
            matrix,
            domain_labels: domain.iter().map(|s| s.to_string()).collect(),
            codomain_labels: codomain.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n))
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &LinearMap<S>) -> LinearMap<S> {
        LinearMap {
            matrix: self.matrix.mul(&rhs.matrix),
            domain_labels: rhs.domain_labels.clone(),
            codomain_labels: self.codomain_labels.clone(),
        }
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.matrix.apply(v)
    }
}

impl<S: Scalar> From<Matrix<S>> for LinearMap<S> {
    fn from(matrix: Matrix<S>) -> Self {
        LinearMap::new(matrix)
    }
}

/// `a ⊗ b` on tensor-product bases; dimensions multiply and labels concatenate.
pub fn kron<S: Scalar>(a: &LinearMap<S>, b: &LinearMap<S>) -> LinearMap<S> {
    LinearMap {
        matrix: a.matrix.kron(&b.matrix),
        domain_labels: a.domain_labels.iter().chain(&b.domain_labels).cloned().collect(),
        codomain_labels: a.codomain_labels.iter().chain(&b.codomain_labels).cloned().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Q;

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_i64(rows)
    }

    #[test]
    fn identity_kron_identity() {
        let a = LinearMap::<Q>::identity(2);
        let b = LinearMap::<Q>::identity(3);
        assert!(kron(&a, &b).matrix.is_identity());
        assert_eq!(kron(&a, &b).domain_dim(), 6);
    }

    #[test]
    fn kron_with_zero_is_zero() {
        let a = LinearMap::new(m(&[&[1, 2], &[3, 4]]));
        let z = LinearMap::new(Matrix::<Q>::zeros(2, 2));
        assert!(kron(&a, &z).matrix.is_zero());
    }

    #[test]
    fn kron_matches_elementwise_definition() {
        // Brute force over all basis pairs: (a⊗b)(e_j ⊗ e_l) = a(e_j) ⊗ b(e_l).
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        for j in 0..2 {
            for l in 0..2 {
                let lhs = k.apply(&tensor_vec(&unit(2, j), &unit(2, l)));
                let rhs = tensor_vec(&a.column(j), &b.column(l));
                assert_eq!(lhs, rhs);
            }
        }
        // Row 1 = (0,1), column 2 = (1,0): a[0][1]·b[1][0] = 2·6.
        assert_eq!(k[(1, 2)], Q::from_i64(12));
    }

    #[test]
    fn kron_mul_matches_kron() {
        let a = m(&[&[1, 2, 0], &[3, 4, 1]]);
        let b = m(&[&[0, 5], &[6, 7]]);
        let x = Matrix::from_fn(6, 3, |i, j| Q::from_i64((i * 3 + j) as i64 % 5 - 2));
        assert_eq!(Matrix::kron_mul(&a, &b, &x), a.kron(&b).mul(&x));
    }

    #[test]
    fn flip_swaps_factors() {
        let f = flip::<Q>(2, 3);
        let v = tensor_vec(&unit::<Q>(2, 1), &unit(3, 2));
        assert_eq!(f.apply(&v), tensor_vec(&unit(3, 2), &unit(2, 1)));
        assert_eq!(permute::<Q>(&[2, 3], &[1, 0]), f);
    }

    #[test]
    fn permute_three_factors() {
        let v = tensor_vec(&tensor_vec(&unit::<Q>(2, 1), &unit(3, 0)), &unit(4, 3));
        let w = tensor_vec(&tensor_vec(&unit::<Q>(4, 3), &unit(2, 1)), &unit(3, 0));
        assert_eq!(permute::<Q>(&[2, 3, 4], &[2, 0, 1]).apply(&v), w);
    }
}
