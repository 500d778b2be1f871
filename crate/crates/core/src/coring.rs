//! A-corings, their axioms, standard constructions and morphisms.

use crate::algebra::{Algebra, Bimodule};
use crate::coalgebra::Coalgebra;
use crate::error::{ForgeError, Result};
use crate::linalg::{inverse, AffineSystem};
use crate::matrix::{tensor_vec, unit, Matrix};
use crate::scalar::Scalar;
use crate::tensor::Balanced;
use crate::verdict::Verdict;

/// An `A`-coring. `comul` lands in the materialised `C ⊗_A C` (`square`);
/// `counit` is `dim A × dim C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coring<S: Scalar> {
    pub algebra: Algebra<S>,
    pub carrier: Bimodule<S>,
    pub square: Balanced<S>,
    pub comul: Matrix<S>,
    pub counit: Matrix<S>,
}

/// `C ⊗_A C ⊗_A C` built as `(C ⊗_A C) ⊗_A C`, with the projection from
/// the k-level triple tensor.
#[derive(Clone, Debug)]
pub struct TripleTensor<S: Scalar> {
    pub space: Balanced<S>,
    /// `dim × c³`.
    pub proj: Matrix<S>,
}

impl<S: Scalar> Coring<S> {
    /// Builds a coring from a coproduct into `C ⊗_k C` (projected to the
    /// balanced tensor) and a counit.
    pub fn from_lifted(carrier: Bimodule<S>, comul_lifted: &Matrix<S>, counit: Matrix<S>) -> Result<Self> {
        let c = carrier.dim;
        let a = carrier.algebra.dim;
        if comul_lifted.shape() != (c * c, c) {
            return Err(ForgeError::Dimension(format!(
                "coproduct must be {}x{c}, got {}x{}",
                c * c,
                comul_lifted.rows(),
                comul_lifted.cols()
            )));
        }
        if counit.shape() != (a, c) {
            return Err(ForgeError::Dimension(format!(
                "counit must be {a}x{c}, got {}x{}",
                counit.rows(),
                counit.cols()
            )));
        }
        let square = Balanced::new(&carrier.right, &carrier.left);
        let comul = square.proj().mul(comul_lifted);
        Ok(Coring { algebra: carrier.algebra.clone(), carrier, square, comul, counit })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    /// The trivial coring `A` with `Δ(a) = a ⊗ 1` and `ε = id`.
    pub fn trivial(algebra: &Algebra<S>) -> Self {
        let n = algebra.dim;
        let cols: Vec<Vec<S>> = (0..n).map(|i| tensor_vec(&unit(n, i), &algebra.unit)).collect();
        Self::from_lifted(Bimodule::regular(algebra), &Matrix::from_columns(n * n, &cols), Matrix::identity(n))
            .expect("trivial coring shapes")
    }

    /// A coalgebra as a coring over the ground field.
    pub fn from_coalgebra(c: &Coalgebra<S>) -> Self {
        let k = Algebra::ground();
        let n = c.dim;
        let carrier = Bimodule { algebra: k, dim: n, left: Matrix::identity(n), right: Matrix::identity(n) };
        Self::from_lifted(carrier, &c.comul, c.counit_map()).expect("coalgebra shapes")
    }

    /// The Sweedler coring `A ⊗_R A` of a unital algebra map `f: R → A`,
    /// with `Δ(a⊗a') = a⊗1⊗1⊗a'` and `ε(a⊗a') = aa'`.
    pub fn sweedler(base: &Algebra<S>, algebra: &Algebra<S>, f: &Matrix<S>) -> Result<Self> {
        let v = base.check_algebra_map(algebra, f);
        if !v.passed() {
            return Err(ForgeError::Precondition(format!("not a unital algebra map: {v}")));
        }
        let n = algebra.dim;
        let id = Matrix::identity(n);
        let over_base = Balanced::new(&algebra.mul.mul(&id.kron(f)), &algebra.mul.mul(&f.kron(&id)));
        let left = over_base.left_action(&algebra.mul);
        let right = over_base.right_action(&algebra.mul);
        let carrier = Bimodule::new(algebra.clone(), left, right)?;
        let q = over_base.dim();
        let mut cols = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let l = over_base.class_of(&unit(n, i), &algebra.unit);
                let r = over_base.class_of(&algebra.unit, &unit(n, j));
                cols.push(tensor_vec(&l, &r));
            }
        }
        let lifted = Matrix::from_columns(q * q, &cols).mul(over_base.sect());
        let counit = algebra.mul.mul(over_base.sect());
        Self::from_lifted(carrier, &lifted, counit)
    }

    /// `sect ∘ Δ`: a representative of the coproduct in `C ⊗_k C`.
    pub fn comul_lifted(&self) -> Matrix<S> {
        self.square.sect().mul(&self.comul)
    }

    pub fn square_left_action(&self) -> Matrix<S> {
        self.square.left_action(&self.carrier.left)
    }

    pub fn square_right_action(&self) -> Matrix<S> {
        self.square.right_action(&self.carrier.right)
    }

    pub fn triple(&self) -> TripleTensor<S> {
        let space = Balanced::new(&self.square_right_action(), &self.carrier.left);
        let proj = space.proj().mul(&self.square.proj().kron(&Matrix::identity(self.dim())));
        TripleTensor { space, proj }
    }

    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        v.merge("carrier", self.carrier.check());
        let (c, a) = (self.dim(), self.algebra.dim);
        let ic = Matrix::identity(c);
        let ia = Matrix::identity(a);
        let sq_l = self.square_left_action();
        let sq_r = self.square_right_action();
        v.expect(
            "coproduct left linear",
            self.comul.mul(&self.carrier.left) == sq_l.mul(&ia.kron(&self.comul)),
        );
        v.expect(
            "coproduct right linear",
            self.comul.mul(&self.carrier.right) == sq_r.mul(&self.comul.kron(&ia)),
        );
        v.expect(
            "counit left linear",
            self.counit.mul(&self.carrier.left) == self.algebra.mul.mul(&ia.kron(&self.counit)),
        );
        v.expect(
            "counit right linear",
            self.counit.mul(&self.carrier.right) == self.algebra.mul.mul(&self.counit.kron(&ia)),
        );
        let d = self.comul_lifted();
        let t = self.triple();
        let lhs = t.proj.mul(&d.kron(&ic)).mul(&d);
        let rhs = t.proj.mul(&ic.kron(&d)).mul(&d);
        v.check("coassociativity", lhs == rhs, || "(Δ⊗C)Δ ≠ (C⊗Δ)Δ in C⊗C⊗C".into());
        let left = self.carrier.left.mul(&self.counit.kron(&ic)).mul(&d);
        let right = self.carrier.right.mul(&ic.kron(&self.counit)).mul(&d);
        v.check("left counit", left.is_identity(), || "(ε⊗C)Δ ≠ id".into());
        v.check("right counit", right.is_identity(), || "(C⊗ε)Δ ≠ id".into());
        v
    }

    /// `Δ(g) = g ⊗ g` in `C ⊗_A C` and `ε(g) = 1_A`.
    pub fn is_grouplike(&self, g: &[S]) -> bool {
        g.len() == self.dim()
            && self.comul.apply(g) == self.square.class_of(g, g)
            && self.counit.apply(g) == self.algebra.unit
    }
}

/// `(α, γ): (C : A) → (D : B)`.
#[derive(Clone, Debug)]
pub struct CoringMorphism<S: Scalar> {
    pub source: Coring<S>,
    pub target: Coring<S>,
    /// `dim B × dim A`.
    pub alpha: Matrix<S>,
    /// `dim D × dim C`.
    pub gamma: Matrix<S>,
}

impl<S: Scalar> CoringMorphism<S> {
    pub fn identity(c: &Coring<S>) -> Self {
        CoringMorphism {
            source: c.clone(),
            target: c.clone(),
            alpha: Matrix::identity(c.algebra.dim),
            gamma: Matrix::identity(c.dim()),
        }
    }

    /// `ε: C → A` into the trivial coring, with `α = id`.
    pub fn counit_morphism(c: &Coring<S>) -> Self {
        CoringMorphism {
            source: c.clone(),
            target: Coring::trivial(&c.algebra),
            alpha: Matrix::identity(c.algebra.dim),
            gamma: c.counit.clone(),
        }
    }

    /// `(C⊗_Aγ)`-level representative: `χ ∘ (γ⊗_Aγ) ∘ Δ_C` in `D ⊗_B D`.
    pub fn pushed_coproduct(&self) -> Matrix<S> {
        self.target.square.proj().mul(&self.gamma.kron(&self.gamma)).mul(&self.source.comul_lifted())
    }

    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        let (a, b) = (self.source.algebra.dim, self.target.algebra.dim);
        let (c, d) = (self.source.dim(), self.target.dim());
        if self.alpha.shape() != (b, a) || self.gamma.shape() != (d, c) {
            v.check("shape", false, || "α or γ has the wrong shape".into());
            return v;
        }
        v.merge("alpha", self.source.algebra.check_algebra_map(&self.target.algebra, &self.alpha));
        let tl = self.target.carrier.left.mul(&self.alpha.kron(&self.gamma));
        v.expect("gamma left linear", self.gamma.mul(&self.source.carrier.left) == tl);
        let tr = self.target.carrier.right.mul(&self.gamma.kron(&self.alpha));
        v.expect("gamma right linear", self.gamma.mul(&self.source.carrier.right) == tr);
        v.check(
            "counit",
            self.target.counit.mul(&self.gamma) == self.alpha.mul(&self.source.counit),
            || "ε_D∘γ ≠ α∘ε_C".into(),
        );
        v.check(
            "coproduct",
            self.pushed_coproduct() == self.target.comul.mul(&self.gamma),
            || "χ∘(γ⊗γ)∘Δ_C ≠ Δ_D∘γ".into(),
        );
        v
    }
}

/// Searches for a coring isomorphism over the identity of `A`.
///
/// The linear conditions (bimodule map, counit compatibility) are solved
/// first; the echelon-minimal solution is then checked against the
/// coproduct condition and invertibility. `None` means that candidate
/// failed, which is conclusive only when the linear conditions already pin
/// `γ` down uniquely.
pub fn find_isomorphism<S: Scalar>(source: &Coring<S>, target: &Coring<S>) -> Option<Matrix<S>> {
    if source.algebra != target.algebra || source.dim() != target.dim() {
        return None;
    }
    let (c, d) = (source.dim(), target.dim());
    let mut sys = AffineSystem::new(d * c);
    sys.push_matrix_affine(d, c, |g| {
        source.carrier.bilinearity_residual(&target.carrier, g).0
    });
    sys.push_matrix_affine(d, c, |g| {
        source.carrier.bilinearity_residual(&target.carrier, g).1
    });
    sys.push_matrix_affine(d, c, |g| target.counit.mul(g).sub(&source.counit));
    let gamma = Matrix::from_flat(d, c, sys.solve().solution()?);
    inverse(&gamma)?;
    let m = CoringMorphism {
        source: source.clone(),
        target: target.clone(),
        alpha: Matrix::identity(source.algebra.dim),
        gamma,
    };
    m.check().passed().then_some(m.gamma)
}
