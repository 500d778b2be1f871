//! Entwining structures, Hopf data and the Doi–Koppinen construction.

use crate::algebra::{Algebra, Bimodule};
use crate::coalgebra::Coalgebra;
use crate::coring::Coring;
use crate::error::{ForgeError, Result};
use crate::linalg::{inverse, rank, AffineSystem, Subspace, Term};
use crate::matrix::{flip, permute, Matrix};
use crate::scalar::Scalar;
use crate::verdict::Verdict;

/// `ψ: C⊗A → A⊗C` as an `a·c × c·a` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entwining<S: Scalar> {
    pub algebra: Algebra<S>,
    pub coalgebra: Coalgebra<S>,
    pub psi: Matrix<S>,
    pub psi_inverse: Option<Matrix<S>>,
}

impl<S: Scalar> Entwining<S> {
    pub fn new(algebra: Algebra<S>, coalgebra: Coalgebra<S>, psi: Matrix<S>) -> Result<Self> {
        let (a, c) = (algebra.dim, coalgebra.dim);
        if psi.shape() != (a * c, c * a) {
            return Err(ForgeError::Dimension(format!(
                "entwining map must be {}x{}, got {}x{}",
                a * c,
                c * a,
                psi.rows(),
                psi.cols()
            )));
        }
        Ok(Entwining { algebra, coalgebra, psi, psi_inverse: None })
    }

    /// `C = k` with `ψ` the canonical flip.
    pub fn flip(algebra: &Algebra<S>) -> Self {
        let a = algebra.dim;
        Entwining {
            algebra: algebra.clone(),
            coalgebra: Coalgebra::ground(),
            psi: flip(1, a),
            psi_inverse: Some(flip(a, 1)),
        }
    }

    /// Sets `psi_inverse` from exact matrix inversion when `ψ` is bijective.
    pub fn with_inverse(mut self) -> Self {
        self.psi_inverse = self.invert_psi();
        self
    }

    pub fn invert_psi(&self) -> Option<Matrix<S>> {
        inverse(&self.psi)
    }

    pub fn check_bowtie(&self) -> Verdict {
        let (a, c) = (self.algebra.dim, self.coalgebra.dim);
        let ia = Matrix::identity(a);
        let ic = Matrix::identity(c);
        let mu = &self.algebra.mul;
        let delta = &self.coalgebra.comul;
        let u = self.algebra.unit_map();
        let eps = self.coalgebra.counit_map();
        let psi = &self.psi;
        let mut v = Verdict::new();

        let lhs = psi.mul(&ic.kron(mu));
        let rhs = mu.kron(&ic).mul(&ia.kron(psi)).mul(&psi.kron(&ia));
        v.check("left pentagon", lhs == rhs, || "ψ∘(C⊗μ) ≠ (μ⊗C)∘(A⊗ψ)∘(ψ⊗A)".into());

        let lhs = ia.kron(delta).mul(psi);
        let rhs = psi.kron(&ic).mul(&ic.kron(psi)).mul(&delta.kron(&ia));
        v.check("right pentagon", lhs == rhs, || "(A⊗Δ)∘ψ ≠ (ψ⊗C)∘(C⊗ψ)∘(Δ⊗A)".into());

        v.check("left triangle", psi.mul(&ic.kron(&u)) == u.kron(&ic), || "ψ∘(C⊗ι) ≠ ι⊗C".into());
        v.check("right triangle", ia.kron(&eps).mul(psi) == eps.kron(&ia), || "(A⊗ε)∘ψ ≠ ε⊗A".into());

        if let Some(inv) = &self.psi_inverse {
            if inv.shape() != (c * a, a * c) {
                v.check("inverse", false, || "ψ⁻¹ has the wrong shape".into());
            } else {
                v.check("inverse right", psi.mul(inv).is_identity(), || "ψ∘ψ⁻¹ ≠ id".into());
                v.check("inverse left", inv.mul(psi).is_identity(), || "ψ⁻¹∘ψ ≠ id".into());
            }
        }
        v
    }

    /// The coring `A⊗C` with `a(a'⊗c)a'' = aa'ψ(c⊗a'')`, `Δ = A⊗Δ_C` and
    /// `ε = A⊗ε_C`.
    pub fn coring(&self) -> Result<Coring<S>> {
        let v = self.check_bowtie();
        if !v.passed() {
            return Err(ForgeError::Precondition(format!("bow-tie axioms fail: {v}")));
        }
        Ok(self.coring_unchecked())
    }

    /// The same structure maps without checking the bow-tie axioms; the
    /// coring axioms then fail exactly when the entwining is defective.
    pub fn coring_unchecked(&self) -> Coring<S> {
        let (a, c) = (self.algebra.dim, self.coalgebra.dim);
        let ia = Matrix::identity(a);
        let ic = Matrix::identity(c);
        let left = self.algebra.mul.kron(&ic);
        let right = self.algebra.mul.kron(&ic).mul(&ia.kron(&self.psi));
        let carrier = Bimodule { algebra: self.algebra.clone(), dim: a * c, left, right };
        let insert_unit = ic.kron(&self.algebra.unit_map()).kron(&ic);
        let lifted = ia.kron(&insert_unit.mul(&self.coalgebra.comul));
        let counit = ia.kron(&self.coalgebra.counit_map());
        Coring::from_lifted(carrier, &lifted, counit).expect("entwining coring shapes")
    }

    /// The element `1⊗c` of the entwining coring.
    pub fn coring_element(&self, c: &[S]) -> Vec<S> {
        crate::matrix::tensor_vec(&self.algebra.unit, c)
    }
}

/// A Hopf algebra with its antipode (and optionally its inverse).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra<S: Scalar> {
    pub algebra: Algebra<S>,
    pub coalgebra: Coalgebra<S>,
    pub antipode: Matrix<S>,
    pub antipode_inverse: Option<Matrix<S>>,
}

impl<S: Scalar> HopfAlgebra<S> {
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// The ground field as a Hopf algebra.
    pub fn trivial() -> Self {
        HopfAlgebra {
            algebra: Algebra::ground(),
            coalgebra: Coalgebra::ground(),
            antipode: Matrix::identity(1),
            antipode_inverse: Some(Matrix::identity(1)),
        }
    }

    /// `k[ℤ_n]` with `Δg = g⊗g` and `S(g) = g⁻¹`.
    pub fn cyclic_group(n: usize) -> Self {
        let s = Matrix::from_fn(n, n, |i, j| if (i + j) % n == 0 { S::one() } else { S::zero() });
        HopfAlgebra {
            algebra: Algebra::cyclic_group(n),
            coalgebra: Coalgebra::grouplike_basis(n),
            antipode: s.clone(),
            antipode_inverse: Some(s),
        }
    }

    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        v.merge("algebra", self.algebra.check());
        v.merge("coalgebra", self.coalgebra.check());
        let n = self.dim();
        if self.coalgebra.dim != n || self.antipode.shape() != (n, n) {
            v.check("shape", false, || "algebra, coalgebra and antipode dimensions differ".into());
            return v;
        }
        let mu = &self.algebra.mul;
        let delta = &self.coalgebra.comul;
        let eps = self.coalgebra.counit_map();
        let u = self.algebra.unit_map();
        let id = Matrix::identity(n);
        let middle = id.kron(&flip(n, n)).kron(&id);
        v.expect(
            "coproduct multiplicative",
            delta.mul(mu) == mu.kron(mu).mul(&middle).mul(&delta.kron(delta)),
        );
        v.expect("coproduct unital", delta.mul(&u) == u.kron(&u));
        v.expect("counit multiplicative", eps.mul(mu) == eps.kron(&eps));
        v.expect("counit unital", eps.mul(&u).is_identity());
        let ue = u.mul(&eps);
        v.expect("antipode left", mu.mul(&self.antipode.kron(&id)).mul(delta) == ue);
        v.expect("antipode right", mu.mul(&id.kron(&self.antipode)).mul(delta) == ue);
        if let Some(inv) = &self.antipode_inverse {
            v.expect("antipode inverse", inv.shape() == (n, n) && self.antipode.mul(inv).is_identity());
        }
        v
    }
}

/// A right `H`-comodule algebra: `coaction` is `a·h × a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra<S: Scalar> {
    pub algebra: Algebra<S>,
    pub coaction: Matrix<S>,
}

impl<S: Scalar> ComoduleAlgebra<S> {
    pub fn check(&self, h: &HopfAlgebra<S>) -> Verdict {
        let mut v = Verdict::new();
        let (a, n) = (self.algebra.dim, h.dim());
        if self.coaction.shape() != (a * n, a) {
            v.check("shape", false, || "coaction has the wrong shape".into());
            return v;
        }
        let ia = Matrix::identity(a);
        let ih = Matrix::identity(n);
        let rho = &self.coaction;
        v.expect(
            "coassociativity",
            rho.kron(&ih).mul(rho) == ia.kron(&h.coalgebra.comul).mul(rho),
        );
        v.expect("counit", ia.kron(&h.coalgebra.counit_map()).mul(rho).is_identity());
        let middle = ia.kron(&flip(n, a)).kron(&ih);
        v.expect(
            "multiplicative",
            rho.mul(&self.algebra.mul) == self.algebra.mul.kron(&h.algebra.mul).mul(&middle).mul(&rho.kron(rho)),
        );
        v.expect(
            "unital",
            rho.mul(&self.algebra.unit_map()) == self.algebra.unit_map().kron(&h.algebra.unit_map()),
        );
        v
    }
}

/// Output of [`doi_koppinen`].
#[derive(Clone, Debug)]
pub struct DoiKoppinen<S: Scalar> {
    pub entwining: Entwining<S>,
    /// `e = π(1_H)`.
    pub grouplike: Vec<S>,
    /// Right `H`-action on `C` (`c × c·h`).
    pub action: Matrix<S>,
    /// `a⊗c ↦ Σ c·S⁻¹(a₁) ⊗ a₀`, when `S⁻¹` was supplied.
    pub inverse_by_antipode: Option<Matrix<S>>,
}

/// `ψ(c⊗a) = Σ a₀ ⊗ c·a₁` for a comodule algebra `A`, a quotient coalgebra
/// `π: H → C` and the right `H`-action on `C` induced by `π`.
pub fn doi_koppinen<S: Scalar>(
    h: &HopfAlgebra<S>,
    a: &ComoduleAlgebra<S>,
    c: &Coalgebra<S>,
    pi: &Matrix<S>,
) -> Result<DoiKoppinen<S>> {
    let fail = |what: &str, v: Verdict| -> Result<()> {
        if v.passed() {
            Ok(())
        } else {
            Err(ForgeError::Precondition(format!("{what}: {v}")))
        }
    };
    fail("Hopf algebra", h.check())?;
    fail("comodule algebra", a.check(h))?;
    fail("coalgebra", c.check())?;
    let (n, d, ad) = (h.dim(), c.dim, a.algebra.dim);
    if pi.shape() != (d, n) {
        return Err(ForgeError::Dimension(format!("π must be {d}x{n}, got {}x{}", pi.rows(), pi.cols())));
    }
    let mut v = Verdict::new();
    v.expect("π coalgebra map", c.comul.mul(pi) == pi.kron(pi).mul(&h.coalgebra.comul));
    v.expect("π counital", c.counit_map().mul(pi) == h.coalgebra.counit_map());
    v.expect("π surjective", rank(pi) == d);
    fail("quotient map", v)?;

    // Right H-action on C through a section of π; defined iff ker π is a
    // right ideal.
    let ker = Subspace::kernel(pi);
    let ih = Matrix::identity(n);
    let ideal = pi.mul(&h.algebra.mul).mul(&ker.basis.kron(&ih));
    if !ideal.is_zero() {
        return Err(ForgeError::Precondition("π is not right H-linear: ker π is not a right ideal".into()));
    }
    let mut sys = AffineSystem::new(n * d);
    sys.push_terms(n, d, &[Term::left(&pi)], Some(&Matrix::identity(d).neg()));
    let section = Matrix::from_flat(n, d, sys.solve().solution().expect("π is surjective"));
    let action = pi.mul(&h.algebra.mul).mul(&section.kron(&ih));

    let ia = Matrix::identity(ad);
    let ic = Matrix::identity(d);
    let psi = ia
        .kron(&action)
        .mul(&flip(d, ad).kron(&ih))
        .mul(&ic.kron(&a.coaction));
    let inverse_by_antipode = h.antipode_inverse.as_ref().map(|sinv| {
        // a⊗c ↦ a₀⊗a₁⊗c ↦ a₀⊗S⁻¹(a₁)⊗c ↦ c⊗S⁻¹(a₁)⊗a₀ ↦ c·S⁻¹(a₁)⊗a₀
        action
            .kron(&ia)
            .mul(&permute(&[ad, n, d], &[2, 1, 0]))
            .mul(&ia.kron(sinv).kron(&ic))
            .mul(&a.coaction.kron(&ic))
    });
    let grouplike = pi.apply(&h.algebra.unit);
    let entwining = Entwining { algebra: a.algebra.clone(), coalgebra: c.clone(), psi, psi_inverse: None }.with_inverse();
    Ok(DoiKoppinen { entwining, grouplike, action, inverse_by_antipode })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{tensor_vec, unit};
    use crate::scalar::Q;

    fn hopf_z2() -> DoiKoppinen<Q> {
        let h = HopfAlgebra::<Q>::cyclic_group(2);
        let a = ComoduleAlgebra { algebra: h.algebra.clone(), coaction: h.coalgebra.comul.clone() };
        doi_koppinen(&h, &a, &h.coalgebra, &Matrix::identity(2)).unwrap()
    }

    #[test]
    fn flip_entwining() {
        let e = Entwining::<Q>::flip(&Algebra::cyclic_group(3));
        assert!(e.check_bowtie().passed());
        assert_eq!(e.invert_psi().unwrap(), e.psi_inverse.clone().unwrap());
        let c = e.coring().unwrap();
        assert!(c.check().passed());
        assert_eq!(c.dim(), 3);
    }

    #[test]
    fn doi_koppinen_z2_is_a_permutation() {
        let dk = hopf_z2();
        let e = &dk.entwining;
        // ψ(g^i ⊗ g^j) = g^j ⊗ g^{i+j}: brute force on the 4 basis tensors.
        for i in 0..2 {
            for j in 0..2 {
                let got = e.psi.apply(&tensor_vec(&unit(2, i), &unit(2, j)));
                assert_eq!(got, tensor_vec(&unit(2, j), &unit(2, (i + j) % 2)));
            }
        }
        assert!(e.check_bowtie().passed());
        assert_eq!(dk.inverse_by_antipode.as_ref(), e.psi_inverse.as_ref());
        assert_eq!(dk.grouplike, unit(2, 0));
        assert!(e.coalgebra.verify_grouplike(&dk.grouplike));
    }

    #[test]
    fn doi_koppinen_coring_is_valid() {
        let c = hopf_z2().entwining.coring().unwrap();
        assert_eq!(c.dim(), 4);
        assert!(c.check().passed());
        // Right action on 1⊗c is ψ(c⊗a).
        let e = hopf_z2().entwining;
        for ci in 0..2 {
            for ai in 0..2 {
                let one_c = e.coring_element(&unit(2, ci));
                let acted = c.carrier.right.apply(&tensor_vec(&one_c, &unit(2, ai)));
                assert_eq!(acted, e.psi.apply(&tensor_vec(&unit(2, ci), &unit(2, ai))));
            }
        }
    }

    #[test]
    fn trivial_hopf_gives_flip() {
        let h = HopfAlgebra::<Q>::trivial();
        let alg = Algebra::<Q>::cyclic_group(2);
        let a = ComoduleAlgebra { algebra: alg.clone(), coaction: Matrix::identity(2) };
        let dk = doi_koppinen(&h, &a, &Coalgebra::ground(), &Matrix::identity(1)).unwrap();
        assert_eq!(dk.entwining.psi, Entwining::flip(&alg).psi);
    }

    #[test]
    fn zero_psi_fails_right_triangle() {
        let mut e = hopf_z2().entwining;
        e.psi = Matrix::zeros(4, 4);
        e.psi_inverse = None;
        assert!(e.check_bowtie().violated("right triangle"));
        assert!(e.invert_psi().is_none());
    }

    #[test]
    fn sweedler_h4_is_hopf() {
        let h = crate::fixtures::sweedler_h4::<Q>();
        assert!(h.check().passed(), "{}", h.check());
    }

    #[test]
    fn doi_koppinen_rejects_bad_comodule_algebra() {
        let h = HopfAlgebra::<Q>::cyclic_group(2);
        let a = ComoduleAlgebra { algebra: h.algebra.clone(), coaction: Matrix::zeros(4, 2) };
        assert!(doi_koppinen(&h, &a, &h.coalgebra, &Matrix::identity(2)).is_err());
    }

    #[test]
    fn alpha_notation_consistency() {
        let e = hopf_z2().entwining;
        let inv = e.psi_inverse.clone().unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let x = tensor_vec(&unit::<Q>(2, i), &unit(2, j));
                assert_eq!(e.psi.apply(&inv.apply(&x)), x);
            }
        }
    }
}
