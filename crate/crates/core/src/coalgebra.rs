//! Coalgebras over the ground field, group-likes and cointegrals.

use crate::algebra::Algebra;
use crate::error::{ForgeError, Result};
use crate::linalg::AffineSystem;
use crate::matrix::{tensor_vec, unit, Matrix};
use crate::scalar::Scalar;
use crate::verdict::Verdict;

/// `comul` is `n² × n`; `counit` lists `ε(c_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra<S: Scalar> {
    pub dim: usize,
    pub comul: Matrix<S>,
    pub counit: Vec<S>,
}

impl<S: Scalar> Coalgebra<S> {
    pub fn new(comul: Matrix<S>, counit: Vec<S>) -> Result<Self> {
        let n = counit.len();
        if comul.shape() != (n * n, n) {
            return Err(ForgeError::Dimension(format!(
                "coproduct of a coalgebra of dimension {n} must be {}x{n}, got {}x{}",
                n * n,
                comul.rows(),
                comul.cols()
            )));
        }
        Ok(Coalgebra { dim: n, comul, counit })
    }

    pub fn ground() -> Self {
        Coalgebra { dim: 1, comul: Matrix::identity(1), counit: vec![S::one()] }
    }

    /// Group-like coalgebra on `n` basis elements (`Δg = g⊗g`, `ε(g) = 1`).
    pub fn grouplike_basis(n: usize) -> Self {
        let cols: Vec<Vec<S>> = (0..n).map(|i| tensor_vec(&unit(n, i), &unit(n, i))).collect();
        Coalgebra { dim: n, comul: Matrix::from_columns(n * n, &cols), counit: vec![S::one(); n] }
    }

    /// The matrix coalgebra `M^c(n)`: `Δe_{ij} = Σ_k e_{ik}⊗e_{kj}`, `ε(e_{ij}) = δ_{ij}`.
    pub fn matrix_coalgebra(n: usize) -> Self {
        let d = n * n;
        let mut comul = Matrix::zeros(d * d, d);
        let mut counit = vec![S::zero(); d];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    comul[((i * n + k) * d + (k * n + j), i * n + j)] = S::one();
                }
            }
            counit[i * n + i] = S::one();
        }
        Coalgebra { dim: d, comul, counit }
    }

    /// The dual coalgebra of a finite-dimensional algebra, on the dual basis.
    pub fn dual_of(algebra: &Algebra<S>) -> Self {
        Coalgebra { dim: algebra.dim, comul: algebra.mul.transpose(), counit: algebra.unit.clone() }
    }

    /// The dual algebra, on the dual basis.
    pub fn dual_algebra(&self) -> Algebra<S> {
        Algebra { dim: self.dim, mul: self.comul.transpose(), unit: self.counit.clone() }
    }

    /// `ε` as a `1 × n` matrix.
    pub fn counit_map(&self) -> Matrix<S> {
        Matrix::from_rows(vec![self.counit.clone()])
    }

    pub fn coproduct(&self, c: &[S]) -> Vec<S> {
        self.comul.apply(c)
    }

    pub fn counit_of(&self, c: &[S]) -> S {
        c.iter().zip(&self.counit).fold(S::zero(), |acc, (x, e)| acc + x.clone() * e.clone())
    }

    pub fn check(&self) -> Verdict {
        let id = Matrix::identity(self.dim);
        let e = self.counit_map();
        let mut v = Verdict::new();
        let lhs = self.comul.kron(&id).mul(&self.comul);
        let rhs = id.kron(&self.comul).mul(&self.comul);
        v.check("coassociativity", lhs == rhs, || "(Δ⊗id)Δ ≠ (id⊗Δ)Δ".into());
        v.check("left counit", e.kron(&id).mul(&self.comul).is_identity(), || "(ε⊗id)Δ ≠ id".into());
        v.check("right counit", id.kron(&e).mul(&self.comul).is_identity(), || "(id⊗ε)Δ ≠ id".into());
        v
    }

    /// `Δx = x⊗x` and `ε(x) = 1`.
    pub fn verify_grouplike(&self, x: &[S]) -> bool {
        x.len() == self.dim && self.coproduct(x) == tensor_vec(x, x) && self.counit_of(x) == S::one()
    }

    fn cointegral_residuals(&self, delta: &Matrix<S>) -> (Matrix<S>, Matrix<S>) {
        let id = Matrix::identity(self.dim);
        let retraction = delta.mul(&self.comul).sub(&self.counit_map());
        let lhs = id.kron(delta).mul(&self.comul.kron(&id));
        let rhs = delta.kron(&id).mul(&id.kron(&self.comul));
        (retraction, lhs.sub(&rhs))
    }

    /// The two defining equations of a cointegral on `n²` unknowns.
    pub fn cointegral_system(&self) -> AffineSystem<S> {
        let n = self.dim;
        let mut sys = AffineSystem::new(n * n);
        sys.push_matrix_affine(1, n * n, |d| self.cointegral_residuals(d).0);
        sys.push_matrix_affine(1, n * n, |d| self.cointegral_residuals(d).1);
        sys
    }

    /// Echelon-minimal cointegral, or `None` when the linear system is
    /// inconsistent.
    pub fn find_cointegral(&self) -> Option<Cointegral<S>> {
        let n = self.dim;
        let x = self.cointegral_system().solve().solution()?;
        let c = Cointegral { delta: Matrix::from_flat(1, n * n, x) };
        debug_assert!(c.verify(self).passed());
        Some(c)
    }
}

/// `δ: C⊗C → k` as a `1 × n²` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cointegral<S: Scalar> {
    pub delta: Matrix<S>,
}

impl<S: Scalar> Cointegral<S> {
    pub fn verify(&self, c: &Coalgebra<S>) -> Verdict {
        let mut v = Verdict::new();
        if self.delta.shape() != (1, c.dim * c.dim) {
            v.check("shape", false, || "cointegral has wrong shape".into());
            return v;
        }
        let (r, l) = c.cointegral_residuals(&self.delta);
        v.expect("retraction", r.is_zero());
        v.expect("colinearity", l.is_zero());
        v
    }

    pub fn value(&self, n: usize, i: usize, j: usize) -> &S {
        &self.delta[(0, i * n + j)]
    }
}
