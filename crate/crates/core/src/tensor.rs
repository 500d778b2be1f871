//! Balanced tensor products `X ⊗_R Y` realised as quotients of `X ⊗_k Y`.

use crate::linalg::{quotient_from_rows, Quotient};
use crate::matrix::{tensor_vec, Matrix};
use crate::scalar::Scalar;

/// `X ⊗_R Y` for a right `R`-module `X` and a left `R`-module `Y`, both
/// finite-dimensional. The ambient space is `X ⊗_k Y` (left-major).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Balanced<S: Scalar> {
    pub left_dim: usize,
    pub right_dim: usize,
    pub quotient: Quotient<S>,
}

impl<S: Scalar> Balanced<S> {
    /// `right_x` is `dx × dx·r` (`x ⊗ r ↦ x·r`), `left_y` is `dy × r·dy`
    /// (`r ⊗ y ↦ r·y`).
    pub fn new(right_x: &Matrix<S>, left_y: &Matrix<S>) -> Self {
        let dx = right_x.rows();
        let dy = left_y.rows();
        assert!(dx == 0 || right_x.cols() % dx == 0, "right action shape");
        let r = if dx == 0 { left_y.cols().checked_div(dy).unwrap_or(0) } else { right_x.cols() / dx };
        assert_eq!(left_y.cols(), r * dy, "left action shape does not match ring dimension");
        let mut rows = Vec::with_capacity(dx * r * dy);
        for i in 0..dx {
            for k in 0..r {
                let xr = right_x.column(i * r + k);
                for j in 0..dy {
                    let ry = left_y.column(k * dy + j);
                    let mut rel = vec![S::zero(); dx * dy];
                    for (a, x) in xr.iter().enumerate() {
                        rel[a * dy + j] = x.clone();
                    }
                    for (b, y) in ry.iter().enumerate() {
                        if !y.is_zero() {
                            rel[i * dy + b] -= y.clone();
                        }
                    }
                    if rel.iter().any(|v| !v.is_zero()) {
                        rows.push(rel);
                    }
                }
            }
        }
        Balanced { left_dim: dx, right_dim: dy, quotient: quotient_from_rows(dx * dy, rows) }
    }

    /// `X ⊗_k Y`, no relations.
    pub fn over_field(dx: usize, dy: usize) -> Self {
        Balanced { left_dim: dx, right_dim: dy, quotient: Quotient::identity(dx * dy) }
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn ambient(&self) -> usize {
        self.left_dim * self.right_dim
    }

    pub fn proj(&self) -> &Matrix<S> {
        &self.quotient.proj
    }

    pub fn sect(&self) -> &Matrix<S> {
        &self.quotient.sect
    }

    /// Class of `x ⊗ y`.
    pub fn class_of(&self, x: &[S], y: &[S]) -> Vec<S> {
        self.proj().apply(&tensor_vec(x, y))
    }

    /// Induced left action `r' ⊗ [x⊗y] ↦ [(r'·x)⊗y]` given the left action
    /// of `R'` on `X` (`dx × r'·dx`). Result is `q × r'·q`.
    pub fn left_action(&self, left_x: &Matrix<S>) -> Matrix<S> {
        assert_eq!(left_x.rows(), self.left_dim);
        let rp = left_x.cols().checked_div(self.left_dim).unwrap_or(0);
        let lift = Matrix::identity(rp).kron(self.sect());
        let act = left_x.kron(&Matrix::identity(self.right_dim));
        self.proj().mul(&act.mul(&lift))
    }

    /// Induced right action from the right action of `R''` on `Y`
    /// (`dy × dy·r''`). Result is `q × q·r''`.
    pub fn right_action(&self, right_y: &Matrix<S>) -> Matrix<S> {
        assert_eq!(right_y.rows(), self.right_dim);
        let rpp = right_y.cols().checked_div(self.right_dim).unwrap_or(0);
        let lift = self.sect().kron(&Matrix::identity(rpp));
        let act = Matrix::identity(self.left_dim).kron(right_y);
        self.proj().mul(&act.mul(&lift))
    }

    /// `f ⊗_R g : X ⊗_R Y → X' ⊗_R Y'` (well defined when `f`, `g` are
    /// `R`-linear).
    pub fn map_to(&self, target: &Balanced<S>, f: &Matrix<S>, g: &Matrix<S>) -> Matrix<S> {
        target.proj().mul(&f.kron(g).mul(self.sect()))
    }

    /// The k-level map `X ⊗_k Y → X' ⊗_R Y'` of `f ⊗ g` followed by projection.
    pub fn lifted_map_to(target: &Balanced<S>, f: &Matrix<S>, g: &Matrix<S>) -> Matrix<S> {
        target.proj().mul(&f.kron(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Q;

    fn group_mul(n: usize) -> Matrix<Q> {
        Matrix::from_fn(n, n * n, |i, j| if (j / n + j % n) % n == i { Q::from_i64(1) } else { Q::from_i64(0) })
    }

    #[test]
    fn a_tensor_a_over_a() {
        let m = group_mul(2);
        let b = Balanced::new(&m, &m);
        assert_eq!(b.dim(), 2);
    }

    #[test]
    fn tensor_with_zero() {
        let m = group_mul(2);
        let b = Balanced::new(&m, &Matrix::<Q>::zeros(0, 0));
        assert_eq!(b.dim(), 0);
    }

    #[test]
    fn over_field_has_no_relations() {
        let b = Balanced::<Q>::over_field(2, 3);
        assert_eq!(b.dim(), 6);
    }
}
