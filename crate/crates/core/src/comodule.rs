//! Comodules over a coring and the structures attached to them.

use crate::algebra::push_linearity;
use crate::algebra::{AModule, Algebra, DualBasis, DualModule, Side};
use crate::coring::{Coring, CoringMorphism};
use crate::error::{ForgeError, Result};
use crate::linalg::{AffineSystem, Embed, Subspace, Term};
use crate::matrix::{tensor_vec, unit, vec_add, Matrix};
use crate::scalar::Scalar;
use crate::tensor::Balanced;
use crate::verdict::Verdict;

/// A right comodule (`ρ: M → M ⊗_A C`) or a left comodule
/// (`ρ: M → C ⊗_A M`). The coaction is stored in the materialised
/// balanced tensor `tensor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule<S: Scalar> {
    pub coring: Coring<S>,
    pub side: Side,
    pub module: AModule<S>,
    pub tensor: Balanced<S>,
    pub coaction: Matrix<S>,
}

impl<S: Scalar> Comodule<S> {
    fn tensor_for(coring: &Coring<S>, module: &AModule<S>) -> Balanced<S> {
        match module.side {
            Side::Right => Balanced::new(&module.action, &coring.carrier.left),
            Side::Left => Balanced::new(&coring.carrier.right, &module.action),
        }
    }

    /// Builds from a k-level coaction into `M ⊗_k C` or `C ⊗_k M`.
    pub fn from_lifted(coring: &Coring<S>, module: AModule<S>, lifted: &Matrix<S>) -> Result<Self> {
        if module.algebra != coring.algebra {
            return Err(ForgeError::Mismatch("module and coring have different base algebras".into()));
        }
        let (d, c) = (module.dim, coring.dim());
        if lifted.shape() != (d * c, d) {
            return Err(ForgeError::Dimension(format!(
                "coaction of a {d}-dimensional comodule must be {}x{d}, got {}x{}",
                d * c,
                lifted.rows(),
                lifted.cols()
            )));
        }
        let tensor = Self::tensor_for(coring, &module);
        let coaction = tensor.proj().mul(lifted);
        Ok(Comodule { coring: coring.clone(), side: module.side, module, tensor, coaction })
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn lifted(&self) -> Matrix<S> {
        self.tensor.sect().mul(&self.coaction)
    }

    pub fn zero(coring: &Coring<S>, side: Side) -> Self {
        let module = AModule::zero(&coring.algebra, side);
        Self::from_lifted(coring, module, &Matrix::zeros(0, 0)).expect("zero comodule")
    }

    /// `C` over itself with `ρ = Δ`.
    pub fn regular(coring: &Coring<S>, side: Side) -> Self {
        Self::from_lifted(coring, coring.carrier.side(side), &coring.comul_lifted()).expect("regular comodule")
    }

    /// `A` with `a ↦ g·a` (right) or `a ↦ a·g` (left) for a group-like `g`.
    pub fn from_grouplike(coring: &Coring<S>, g: &[S], side: Side) -> Result<Self> {
        if !coring.is_grouplike(g) {
            return Err(ForgeError::Precondition("element is not group-like".into()));
        }
        let a = &coring.algebra;
        let n = a.dim;
        let cols: Vec<Vec<S>> = (0..n)
            .map(|i| match side {
                Side::Right => tensor_vec(&a.unit, &coring.carrier.right.apply(&tensor_vec(g, &unit(n, i)))),
                Side::Left => tensor_vec(&coring.carrier.left.apply(&tensor_vec(&unit(n, i), g)), &a.unit),
            })
            .collect();
        let lifted = Matrix::from_columns(n * coring.dim(), &cols);
        Self::from_lifted(coring, a.regular(side), &lifted)
    }

    /// `M ⊕ N` with the basis of `M` first.
    pub fn direct_sum(&self, other: &Comodule<S>) -> Result<Self> {
        if self.side != other.side || self.coring != other.coring {
            return Err(ForgeError::Mismatch("direct sum of incompatible comodules".into()));
        }
        let module = self.module.direct_sum(&other.module);
        let (d1, d2, c) = (self.dim(), other.dim(), self.coring.dim());
        let d = d1 + d2;
        let l1 = self.lifted();
        let l2 = other.lifted();
        let mut lifted = Matrix::zeros(d * c, d);
        let place = |m: usize, k: usize| match self.side {
            Side::Right => m * c + k,
            Side::Left => k * d + m,
        };
        for (src, off, n) in [(&l1, 0usize, d1), (&l2, d1, d2)] {
            for j in 0..n {
                for m in 0..n {
                    for k in 0..c {
                        let r = match self.side {
                            Side::Right => m * c + k,
                            Side::Left => k * n + m,
                        };
                        lifted[(place(off + m, k), off + j)] = src[(r, j)].clone();
                    }
                }
            }
        }
        Self::from_lifted(&self.coring, module, &lifted)
    }

    /// The A-action on the coaction target coming from `C`.
    pub fn tensor_action(&self) -> Matrix<S> {
        match self.side {
            Side::Right => self.tensor.right_action(&self.coring.carrier.right),
            Side::Left => self.tensor.left_action(&self.coring.carrier.left),
        }
    }

    /// `M ⊗_A C ⊗_A C` or `C ⊗_A C ⊗_A M`, with the projection from the k-level
    /// triple tensor.
    pub fn triple(&self) -> (Balanced<S>, Matrix<S>) {
        let c = &self.coring.carrier;
        match self.side {
            Side::Right => {
                let t = Balanced::new(&self.tensor_action(), &c.left);
                let p = t.proj().mul(&self.tensor.proj().kron(&Matrix::identity(c.dim)));
                (t, p)
            }
            Side::Left => {
                let t = Balanced::new(&c.right, &self.tensor_action());
                let p = t.proj().mul(&Matrix::identity(c.dim).kron(self.tensor.proj()));
                (t, p)
            }
        }
    }

    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        v.merge("module", self.module.check());
        let (d, a, c) = (self.dim(), self.coring.algebra.dim, self.coring.dim());
        let (im, ia, ic) = (Matrix::identity(d), Matrix::identity(a), Matrix::identity(c));
        let rho = &self.coaction;
        let linear = match self.side {
            Side::Right => rho.mul(&self.module.action) == self.tensor_action().mul(&rho.kron(&ia)),
            Side::Left => rho.mul(&self.module.action) == self.tensor_action().mul(&ia.kron(rho)),
        };
        v.check("coaction linear", linear, || "coaction is not A-linear".into());
        let lifted = self.lifted();
        let dl = self.coring.comul_lifted();
        let (_, pi3) = self.triple();
        let (lhs, rhs) = match self.side {
            Side::Right => (
                pi3.mul(&Matrix::kron_mul(&lifted, &ic, &lifted)),
                pi3.mul(&Matrix::kron_mul(&im, &dl, &lifted)),
            ),
            Side::Left => (
                pi3.mul(&Matrix::kron_mul(&ic, &lifted, &lifted)),
                pi3.mul(&Matrix::kron_mul(&dl, &im, &lifted)),
            ),
        };
        v.check("coassociativity", lhs == rhs, || "(ρ⊗C)ρ ≠ (M⊗Δ)ρ".into());
        let counit = match self.side {
            Side::Right => self.module.action.mul(&Matrix::kron_mul(&im, &self.coring.counit, &lifted)),
            Side::Left => self.module.action.mul(&Matrix::kron_mul(&self.coring.counit, &im, &lifted)),
        };
        v.check("counit", counit.is_identity(), || "(M⊗ε)ρ ≠ id".into());
        v
    }

    /// `f ⊗_A C` (right) or `C ⊗_A f` (left) for an A-linear `f: self → target`.
    pub fn tensor_map(&self, target: &Comodule<S>, f: &Matrix<S>) -> Matrix<S> {
        let ic = Matrix::identity(self.coring.dim());
        let moved = match self.side {
            Side::Right => Matrix::kron_mul(f, &ic, self.tensor.sect()),
            Side::Left => Matrix::kron_mul(&ic, f, self.tensor.sect()),
        };
        target.tensor.proj().mul(&moved)
    }

    /// `ρ_N ∘ f − (f ⊗ C) ∘ ρ_M`, computed on the k-level lift so that it is
    /// linear in `f` without assuming A-linearity.
    pub fn colinearity_residual(&self, target: &Comodule<S>, f: &Matrix<S>) -> Matrix<S> {
        let ic = Matrix::identity(self.coring.dim());
        let lifted = self.lifted();
        let pushed = match self.side {
            Side::Right => Matrix::kron_mul(f, &ic, &lifted),
            Side::Left => Matrix::kron_mul(&ic, f, &lifted),
        };
        target.coaction.mul(f).sub(&target.tensor.proj().mul(&pushed))
    }

    /// The cofree comodule `M ⊗_A C` (coaction `M ⊗ Δ`) or `C ⊗_A M`.
    pub fn cofree(&self) -> Comodule<S> {
        let c = self.coring.dim();
        let ic = Matrix::identity(c);
        let dl = self.coring.comul_lifted();
        let q = self.tensor.dim();
        let action = self.tensor_action();
        let module = AModule { algebra: self.coring.algebra.clone(), side: self.side, dim: q, action };
        let lifted = match self.side {
            Side::Right => {
                let im = Matrix::identity(self.dim());
                let up = Matrix::kron_mul(&im, &dl, self.tensor.sect());
                Matrix::kron_mul(self.tensor.proj(), &ic, &up)
            }
            Side::Left => {
                let im = Matrix::identity(self.dim());
                let up = Matrix::kron_mul(&dl, &im, self.tensor.sect());
                Matrix::kron_mul(&ic, self.tensor.proj(), &up)
            }
        };
        Comodule::from_lifted(&self.coring, module, &lifted).expect("cofree comodule shapes")
    }
}

fn ensure_compatible<S: Scalar>(m: &Comodule<S>, n: &Comodule<S>) -> Result<()> {
    if m.side != n.side {
        return Err(ForgeError::Mismatch("comodules on different sides".into()));
    }
    if m.coring != n.coring {
        return Err(ForgeError::Mismatch("comodules over different corings".into()));
    }
    Ok(())
}

/// The linear constraints defining `Hom^C(M, N)` on `dim N × dim M` unknowns.
pub fn colinear_system<S: Scalar>(m: &Comodule<S>, n: &Comodule<S>) -> AffineSystem<S> {
    let mut sys = AffineSystem::new(n.dim() * m.dim());
    push_linearity(&mut sys, &m.module, &n.module);
    let lifted = m.lifted();
    let embed = match m.side {
        Side::Right => Embed::KronIdentity(m.coring.dim()),
        Side::Left => Embed::IdentityKron(m.coring.dim()),
    };
    sys.push_terms(
        n.dim(),
        m.dim(),
        &[Term::left(&n.coaction), Term::new(Some(n.tensor.proj()), embed, Some(&lifted)).neg()],
        None,
    );
    sys
}

/// Basis of `Hom^C(M, N)`, echelon order.
pub fn colinear_hom<S: Scalar>(m: &Comodule<S>, n: &Comodule<S>) -> Result<Vec<Matrix<S>>> {
    ensure_compatible(m, n)?;
    let sys = colinear_system(m, n);
    Ok(sys.kernel().vectors().into_iter().map(|v| Matrix::from_flat(n.dim(), m.dim(), v)).collect())
}

/// Echelon-minimal colinear `f: M → N` with an extra affine condition
/// `extra(f) = 0`.
pub fn colinear_solve<S: Scalar>(
    m: &Comodule<S>,
    n: &Comodule<S>,
    extra: impl Fn(&Matrix<S>) -> Matrix<S>,
) -> Result<Option<Matrix<S>>> {
    ensure_compatible(m, n)?;
    let mut sys = colinear_system(m, n);
    sys.push_matrix_affine(n.dim(), m.dim(), extra);
    Ok(sys.solve().solution().map(|x| Matrix::from_flat(n.dim(), m.dim(), x)))
}

/// A subspace of `rows × cols` matrices with an echelon basis.
#[derive(Clone, Debug)]
pub struct MatrixSpace<S: Scalar> {
    pub rows: usize,
    pub cols: usize,
    pub basis: Vec<Matrix<S>>,
    space: Subspace<S>,
}

impl<S: Scalar> MatrixSpace<S> {
    pub fn new(rows: usize, cols: usize, spanning: &[Matrix<S>]) -> Self {
        let space = Subspace::span_of(rows * cols, &spanning.iter().map(Matrix::to_vec).collect::<Vec<_>>());
        let basis = space.vectors().into_iter().map(|v| Matrix::from_flat(rows, cols, v)).collect();
        MatrixSpace { rows, cols, basis, space }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coordinates(&self, f: &Matrix<S>) -> Option<Vec<S>> {
        if f.shape() != (self.rows, self.cols) {
            return None;
        }
        self.space.coordinates(&f.to_vec())
    }

    pub fn element(&self, coords: &[S]) -> Matrix<S> {
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (c, b) in coords.iter().zip(&self.basis) {
            out.add_scaled(c, b);
        }
        out
    }

    /// Matrix of `f` from this space to `target`, in the two bases.
    pub fn map_to(&self, target: &MatrixSpace<S>, f: impl Fn(&Matrix<S>) -> Matrix<S>) -> Result<Matrix<S>> {
        let cols = self
            .basis
            .iter()
            .map(|b| {
                target
                    .coordinates(&f(b))
                    .ok_or_else(|| ForgeError::Precondition("image leaves the target space".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(target.dim(), &cols))
    }

    /// A module structure over `ring`; `op(f, k)` is `f` acted on by the
    /// `k`-th basis element of the ring.
    pub fn module(
        &self,
        ring: &Algebra<S>,
        side: Side,
        op: impl Fn(&Matrix<S>, usize) -> Matrix<S>,
    ) -> Result<AModule<S>> {
        let (h, n) = (self.dim(), ring.dim);
        let mut action = Matrix::zeros(h, h * n);
        for (j, f) in self.basis.iter().enumerate() {
            for k in 0..n {
                let c = self
                    .coordinates(&op(f, k))
                    .ok_or_else(|| ForgeError::Precondition("space is not closed under the action".into()))?;
                let col = match side {
                    Side::Right => j * n + k,
                    Side::Left => k * h + j,
                };
                for (i, x) in c.into_iter().enumerate() {
                    action[(i, col)] = x;
                }
            }
        }
        Ok(AModule { algebra: ring.clone(), side, dim: h, action })
    }
}

/// A ring of endomorphisms given by a basis of matrices on a module, with
/// structure constants. With `opposite`, the product is `f·g = g∘f`.
#[derive(Clone, Debug)]
pub struct EndoRing<S: Scalar> {
    pub opposite: bool,
    pub module_dim: usize,
    pub basis: Vec<Matrix<S>>,
    pub algebra: Algebra<S>,
    space: Subspace<S>,
}

impl<S: Scalar> EndoRing<S> {
    /// Closes nothing: `basis` must span a subring containing the identity.
    pub fn from_basis(module_dim: usize, basis: Vec<Matrix<S>>, opposite: bool) -> Result<Self> {
        let d = module_dim;
        let space = Subspace::span_of(d * d, &basis.iter().map(Matrix::to_vec).collect::<Vec<_>>());
        let basis: Vec<Matrix<S>> = space.vectors().into_iter().map(|v| Matrix::from_flat(d, d, v)).collect();
        let n = basis.len();
        let coords = |f: &Matrix<S>| {
            space
                .coordinates(&f.to_vec())
                .ok_or_else(|| ForgeError::Precondition("endomorphisms are not closed under composition".into()))
        };
        let mut mul = Matrix::zeros(n, n * n);
        for i in 0..n {
            for j in 0..n {
                let p = if opposite { basis[j].mul(&basis[i]) } else { basis[i].mul(&basis[j]) };
                for (k, x) in coords(&p)?.into_iter().enumerate() {
                    mul[(k, i * n + j)] = x;
                }
            }
        }
        let unit = coords(&Matrix::identity(d))?;
        let algebra = Algebra { dim: n, mul, unit };
        Ok(EndoRing { opposite, module_dim: d, basis, algebra, space })
    }

    /// `End^C(M)`: composition for right comodules, opposite composition for
    /// left comodules.
    pub fn of(m: &Comodule<S>) -> Self {
        let basis = colinear_hom(m, m).expect("same comodule");
        Self::from_basis(m.dim(), basis, m.side == Side::Left).expect("colinear endomorphisms form a ring")
    }

    /// `End_A(M)` with composition (right modules) or opposite composition.
    pub fn of_module(m: &AModule<S>) -> Self {
        let basis = crate::algebra::module_hom(m, m).expect("same module");
        Self::from_basis(m.dim, basis, m.side == Side::Left).expect("module endomorphisms form a ring")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn element(&self, coords: &[S]) -> Matrix<S> {
        let d = self.module_dim;
        let mut out = Matrix::zeros(d, d);
        for (c, b) in coords.iter().zip(&self.basis) {
            out.add_scaled(c, b);
        }
        out
    }

    pub fn coordinates(&self, f: &Matrix<S>) -> Option<Vec<S>> {
        if f.shape() != (self.module_dim, self.module_dim) {
            return None;
        }
        self.space.coordinates(&f.to_vec())
    }

    pub fn product(&self, f: &Matrix<S>, g: &Matrix<S>) -> Matrix<S> {
        if self.opposite {
            g.mul(f)
        } else {
            f.mul(g)
        }
    }

    /// The module on which the ring acts naturally: a left module for
    /// composition, a right module for opposite composition.
    pub fn natural_module(&self) -> AModule<S> {
        let (d, n) = (self.module_dim, self.dim());
        let mut action = Matrix::zeros(d, d * n);
        for (j, f) in self.basis.iter().enumerate() {
            for i in 0..d {
                let col = if self.opposite { i * n + j } else { j * d + i };
                for r in 0..d {
                    action[(r, col)] = f[(r, i)].clone();
                }
            }
        }
        let side = if self.opposite { Side::Right } else { Side::Left };
        AModule { algebra: self.algebra.clone(), side, dim: d, action }
    }

    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        v.merge("algebra", self.algebra.check());
        v.expect("contains identity", self.coordinates(&Matrix::identity(self.module_dim)).is_some());
        v
    }
}

/// `M □_C N` inside the materialised `M ⊗_A N`.
#[derive(Clone, Debug)]
pub struct Cotensor<S: Scalar> {
    pub tensor: Balanced<S>,
    pub space: Subspace<S>,
    /// `ρ^M ⊗ N − M ⊗ ρ^N` on `M ⊗_A N`.
    pub omega: Matrix<S>,
}

impl<S: Scalar> Cotensor<S> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

pub fn cotensor<S: Scalar>(m: &Comodule<S>, n: &Comodule<S>) -> Result<Cotensor<S>> {
    if m.side != Side::Right || n.side != Side::Left {
        return Err(ForgeError::Mismatch("cotensor product needs a right and a left comodule".into()));
    }
    if m.coring != n.coring {
        return Err(ForgeError::Mismatch("comodules over different corings".into()));
    }
    let tensor = Balanced::new(&m.module.action, &n.module.action);
    let triple = Balanced::new(&m.tensor_action(), &n.module.action);
    let (dm, dn) = (m.dim(), n.dim());
    let to_triple = |x: &Matrix<S>| Matrix::kron_mul(m.tensor.proj(), &Matrix::identity(dn), x);
    let left = triple.proj().mul(&to_triple(&Matrix::kron_mul(&m.lifted(), &Matrix::identity(dn), tensor.sect())));
    let right = triple.proj().mul(&to_triple(&Matrix::kron_mul(&Matrix::identity(dm), &n.lifted(), tensor.sect())));
    let omega = left.sub(&right);
    let space = Subspace::kernel(&omega);
    Ok(Cotensor { tensor, space, omega })
}

/// `W^{co C}_g` with the right action of `S_g = A^{co C}_g` on it.
#[derive(Clone, Debug)]
pub struct Coinvariants<S: Scalar> {
    pub space: Subspace<S>,
    /// Basis of the coinvariants of `A` (as vectors in `A`).
    pub ring_basis: Vec<Vec<S>>,
    /// For each ring basis element, its operator on `space` coordinates.
    pub ring_action: Vec<Matrix<S>>,
}

pub fn coinvariants<S: Scalar>(w: &Comodule<S>, g: &[S]) -> Result<Coinvariants<S>> {
    if w.side != Side::Right {
        return Err(ForgeError::Mismatch("coinvariants are taken in a right comodule".into()));
    }
    if !w.coring.is_grouplike(g) {
        return Err(ForgeError::Precondition("element is not group-like".into()));
    }
    let fixed = |c: &Comodule<S>| {
        let gcol = Matrix::from_columns(c.coring.dim(), &[g.to_vec()]);
        let wg = c.tensor.proj().mul(&Matrix::identity(c.dim()).kron(&gcol));
        Subspace::kernel(&c.coaction.sub(&wg))
    };
    let space = fixed(w);
    let a_g = Comodule::from_grouplike(&w.coring, g, Side::Right)?;
    let ring = fixed(&a_g);
    let ring_basis = ring.vectors();
    let ring_action = ring_basis
        .iter()
        .map(|s| {
            let cols: Vec<Vec<S>> = space
                .vectors()
                .iter()
                .map(|x| space.coordinates(&w.module.act(x, s)).expect("coinvariants are an S-module"))
                .collect();
            Matrix::from_columns(space.dim(), &cols)
        })
        .collect();
    Ok(Coinvariants { space, ring_basis, ring_action })
}

/// The left comodule structure on `M*` of a finitely generated projective
/// right comodule, with the data used to build it.
#[derive(Clone, Debug)]
pub struct DualComodule<S: Scalar> {
    pub comodule: Comodule<S>,
    pub dual: DualModule<S>,
    pub dual_basis: DualBasis<S>,
    /// Coordinates of each `ξ^i` in the basis of `M*`.
    pub functional_coords: Vec<Vec<S>>,
}

/// `ξ ↦ Σ ξ(e^i₀) e^i₁ ⊗ ξ^i`.
pub fn dual_left_comodule<S: Scalar>(m: &Comodule<S>) -> Result<DualComodule<S>> {
    if m.side != Side::Right {
        return Err(ForgeError::Mismatch("dual comodule is built from a right comodule".into()));
    }
    let db = crate::algebra::find_dual_basis(&m.module)
        .ok_or_else(|| ForgeError::NotProjective("no dual basis exists".into()))?;
    let dual = DualModule::of(&m.module);
    let functional_coords: Vec<Vec<S>> =
        db.functionals.iter().map(|xi| dual.coordinates(xi).expect("dual basis functionals lie in M*")).collect();
    let (h, c) = (dual.dim(), m.coring.dim());
    let ic = Matrix::identity(c);
    let lifted_m = m.lifted();
    let mut cols = vec![vec![S::zero(); c * h]; h];
    for (e, xi_coords) in db.elements.iter().zip(&functional_coords) {
        let rho_e = lifted_m.apply(e);
        for (j, col) in cols.iter_mut().enumerate() {
            let in_c = m.coring.carrier.left.apply(&dual.basis[j].kron(&ic).apply(&rho_e));
            *col = vec_add(col, &tensor_vec(&in_c, xi_coords));
        }
    }
    let lifted = Matrix::from_columns(c * h, &cols);
    let comodule = Comodule::from_lifted(&m.coring, dual.module.clone(), &lifted)?;
    Ok(DualComodule { comodule, dual, dual_basis: db, functional_coords })
}

impl<S: Scalar> DualComodule<S> {
    /// The dual-basis identity relating the two coactions
    /// (`Σ e^i₀⊗e^i₁⊗ξ^i = Σ e^i⊗ξ^i₋₁⊗ξ^i₀`) and the pairing identity
    /// `Σ ξ(m₀)m₁ = Σ ξ₋₁ ξ₀(m)` on all basis pairs.
    pub fn check_identities(&self, m: &Comodule<S>) -> Verdict {
        let mut v = Verdict::new();
        let (d, h, c) = (m.dim(), self.dual.dim(), m.coring.dim());
        let ic = Matrix::identity(c);
        let carrier = &m.coring.carrier;
        let lifted_m = m.lifted();
        let lifted_d = self.comodule.lifted();
        let mut pairing = true;
        for j in 0..h {
            let xi = &self.dual.basis[j];
            let rho_xi = lifted_d.apply(&unit(h, j));
            for b in 0..d {
                let lhs = carrier.left.apply(&xi.kron(&ic).apply(&lifted_m.column(b)));
                // c ⊗ ξ' ↦ c·ξ'(m_b)
                let mut rhs = vec![S::zero(); c];
                for k in 0..c {
                    for t in 0..h {
                        let coef = &rho_xi[k * h + t];
                        if coef.is_zero() {
                            continue;
                        }
                        let a = self.dual.basis[t].column(b);
                        let prod = carrier.right.apply(&tensor_vec(&unit(c, k), &a));
                        for (r, p) in rhs.iter_mut().zip(prod) {
                            *r += coef.clone() * p;
                        }
                    }
                }
                pairing &= lhs == rhs;
            }
        }
        v.check("pairing identity", pairing, || "Σ ξ(m₀)m₁ ≠ Σ ξ₋₁ξ₀(m)".into());

        let t = Balanced::new(&m.tensor_action(), &self.comodule.module.action);
        let flatten = m.tensor.proj().kron(&Matrix::identity(h));
        let pi = |x: &[S]| t.proj().apply(&flatten.apply(x));
        let mut lhs = vec![S::zero(); d * c * h];
        let mut rhs = vec![S::zero(); d * c * h];
        for (e, xi) in self.dual_basis.elements.iter().zip(&self.functional_coords) {
            lhs = vec_add(&lhs, &tensor_vec(&lifted_m.apply(e), xi));
            rhs = vec_add(&rhs, &tensor_vec(e, &lifted_d.apply(xi)));
        }
        v.check("dual basis identity", pi(&lhs) == pi(&rhs), || "Σ e^i₀⊗e^i₁⊗ξ^i ≠ Σ e^i⊗ξ^i₋₁⊗ξ^i₀".into());
        v
    }
}

/// `Γ: End^C(M) → End^C(M*)` and its inverse, in the two ring bases.
#[derive(Clone, Debug)]
pub struct GammaIso<S: Scalar> {
    pub source: EndoRing<S>,
    pub target: EndoRing<S>,
    pub gamma: Matrix<S>,
    pub gamma_inverse: Matrix<S>,
}

/// `Γ(s)(ξ) = Σ ξ(s(e^i))ξ^i` and `Γ⁻¹(t)(m) = Σ e^i t(ξ^i)(m)`.
pub fn gamma_iso<S: Scalar>(m: &Comodule<S>, dual: &DualComodule<S>) -> Result<GammaIso<S>> {
    let source = EndoRing::of(m);
    let target = EndoRing::of(&dual.comodule);
    let (d, h) = (m.dim(), dual.dual.dim());
    let left_dual = &dual.comodule.module;
    let db = &dual.dual_basis;
    let gamma_of = |s: &Matrix<S>| {
        let cols: Vec<Vec<S>> = (0..h)
            .map(|j| {
                let xi = &dual.dual.basis[j];
                db.elements.iter().zip(&dual.functional_coords).fold(vec![S::zero(); h], |acc, (e, xic)| {
                    let a = xi.apply(&s.apply(e));
                    vec_add(&acc, &left_dual.act(xic, &a))
                })
            })
            .collect();
        Matrix::from_columns(h, &cols)
    };
    let gamma_inv_of = |t: &Matrix<S>| {
        let cols: Vec<Vec<S>> = (0..d)
            .map(|b| {
                db.elements.iter().zip(&dual.functional_coords).fold(vec![S::zero(); d], |acc, (e, xic)| {
                    let f = dual.dual.element(&t.apply(xic));
                    vec_add(&acc, &m.module.act(e, &f.column(b)))
                })
            })
            .collect();
        Matrix::from_columns(d, &cols)
    };
    let mut gamma = Matrix::zeros(target.dim(), source.dim());
    for (j, s) in source.basis.iter().enumerate() {
        let c = target
            .coordinates(&gamma_of(s))
            .ok_or_else(|| ForgeError::Precondition("Γ(s) is not colinear".into()))?;
        for (i, x) in c.into_iter().enumerate() {
            gamma[(i, j)] = x;
        }
    }
    let mut gamma_inverse = Matrix::zeros(source.dim(), target.dim());
    for (j, t) in target.basis.iter().enumerate() {
        let c = source
            .coordinates(&gamma_inv_of(t))
            .ok_or_else(|| ForgeError::Precondition("Γ⁻¹(t) is not colinear".into()))?;
        for (i, x) in c.into_iter().enumerate() {
            gamma_inverse[(i, j)] = x;
        }
    }
    Ok(GammaIso { source, target, gamma, gamma_inverse })
}

impl<S: Scalar> GammaIso<S> {
    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        v.expect("Γ∘Γ⁻¹ = id", self.gamma.mul(&self.gamma_inverse).is_identity());
        v.expect("Γ⁻¹∘Γ = id", self.gamma_inverse.mul(&self.gamma).is_identity());
        let multiplicative = self.gamma.mul(&self.source.algebra.mul)
            == self.target.algebra.mul.mul(&self.gamma.kron(&self.gamma));
        v.expect("multiplicative", multiplicative);
        v.expect("unital", self.gamma.apply(&self.source.algebra.unit) == self.target.algebra.unit);
        v
    }
}

/// A colinear, A-linear retraction of the coaction into the cofree
/// comodule, or `None` when none exists.
pub fn is_relatively_injective<S: Scalar>(m: &Comodule<S>) -> Option<Matrix<S>> {
    let cols = m.tensor.dim();
    relative_injectivity_system(m).solve().solution().map(|x| Matrix::from_flat(m.dim(), cols, x))
}

/// The constraints solved by [`is_relatively_injective`].
pub fn relative_injectivity_system<S: Scalar>(m: &Comodule<S>) -> AffineSystem<S> {
    let cofree = m.cofree();
    let rho = &m.coaction;
    let mut sys = colinear_system(&cofree, m);
    sys.push_terms(m.dim(), cofree.dim(), &[Term::right(rho)], Some(&Matrix::identity(m.dim()).neg()));
    sys
}

/// `M ⊗_A B` with coaction `m⊗b ↦ Σ m₀⊗γ(m₁)b`.
pub fn induced_comodule<S: Scalar>(m: &Comodule<S>, f: &CoringMorphism<S>) -> Result<Comodule<S>> {
    if m.side != Side::Right || m.coring != f.source {
        return Err(ForgeError::Mismatch("induction needs a right comodule over the source coring".into()));
    }
    let v = f.check();
    if !v.passed() {
        return Err(ForgeError::Precondition(format!("not a coring morphism: {v}")));
    }
    let b_alg = &f.target.algebra;
    let (d, b, dd) = (m.dim(), b_alg.dim, f.target.dim());
    let (im, ib, idd) = (Matrix::identity(d), Matrix::identity(b), Matrix::identity(dd));
    let b_left = b_alg.mul.mul(&f.alpha.kron(&ib));
    let mb = Balanced::new(&m.module.action, &b_left);
    let module = AModule { algebra: b_alg.clone(), side: Side::Right, dim: mb.dim(), action: mb.right_action(&b_alg.mul) };
    // m⊗b → m₀⊗m₁⊗b → m₀⊗γ(m₁)⊗b → m₀⊗γ(m₁)b → m₀⊗1⊗γ(m₁)b → [m₀⊗1]⊗γ(m₁)b
    let step1 = Matrix::kron_mul(&m.lifted(), &ib, mb.sect());
    let step2 = Matrix::kron_mul(&im, &f.gamma.kron(&ib), &step1);
    let step3 = Matrix::kron_mul(&im, &f.target.carrier.right, &step2);
    let step4 = Matrix::kron_mul(&im.kron(&b_alg.unit_map()), &idd, &step3);
    let lifted = Matrix::kron_mul(mb.proj(), &idd, &step4);
    Comodule::from_lifted(&f.target, module, &lifted)
}

/// `B ⊗_A C` as a left `D`-comodule: `b⊗c ↦ Σ bγ(c₁) ⊗ (1⊗c₂)`.
pub fn induced_left_comodule<S: Scalar>(f: &CoringMorphism<S>) -> Result<(Comodule<S>, Balanced<S>)> {
    let b_alg = &f.target.algebra;
    let (b, c, dd) = (b_alg.dim, f.source.dim(), f.target.dim());
    let (ib, ic, idd) = (Matrix::identity(b), Matrix::identity(c), Matrix::identity(dd));
    let b_right = b_alg.mul.mul(&ib.kron(&f.alpha));
    let bc = Balanced::new(&b_right, &f.source.carrier.left);
    let module = AModule { algebra: b_alg.clone(), side: Side::Left, dim: bc.dim(), action: bc.left_action(&b_alg.mul) };
    let step1 = Matrix::kron_mul(&ib, &f.source.comul_lifted(), bc.sect());
    let step2 = Matrix::kron_mul(&ib.kron(&f.gamma), &ic, &step1);
    let step3 = Matrix::kron_mul(&f.target.carrier.left, &ic, &step2);
    let step4 = Matrix::kron_mul(&idd.kron(&b_alg.unit_map()), &ic, &step3);
    let lifted = Matrix::kron_mul(&idd, bc.proj(), &step4);
    let com = Comodule::from_lifted(&f.target, module, &lifted)?;
    Ok((com, bc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::Q;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn dk_z2() -> Coring<Q> {
        fixtures::hopf_entwining::<Q>(&crate::entwining::HopfAlgebra::cyclic_group(2)).entwining.coring().unwrap()
    }

    #[test]
    fn regular_comodules_are_valid() {
        for c in [dk_z2(), Coring::trivial(&Algebra::cyclic_group(2))] {
            for side in [Side::Right, Side::Left] {
                let m = Comodule::regular(&c, side);
                assert!(m.check().passed(), "{side:?}: {}", m.check());
            }
        }
    }

    #[test]
    fn grouplike_comodule_and_endomorphisms() {
        let c = dk_z2();
        let g = vec![q(1), q(0), q(0), q(0)];
        assert!(c.is_grouplike(&g));
        let a = Comodule::from_grouplike(&c, &g, Side::Right).unwrap();
        assert!(a.check().passed());
        let end = EndoRing::of(&a);
        assert_eq!(end.dim(), 1);
        assert!(end.check().passed());
        assert!(Comodule::from_grouplike(&c, &[q(1), q(1), q(0), q(0)], Side::Right).is_err());
    }

    #[test]
    fn cotensor_and_coinvariants() {
        let c = dk_z2();
        let g = vec![q(1), q(0), q(0), q(0)];
        let r = Comodule::from_grouplike(&c, &g, Side::Right).unwrap();
        let l = Comodule::from_grouplike(&c, &g, Side::Left).unwrap();
        assert!(l.check().passed());
        let ct = cotensor(&r, &l).unwrap();
        assert_eq!(ct.dim(), 1);
        let co = coinvariants(&r, &g).unwrap();
        assert_eq!(co.space.dim(), 1);
        assert_eq!(co.space.vector(0), vec![q(1), q(0)]);
        assert_eq!(co.ring_basis.len(), 1);
        assert!(cotensor(&r, &r).is_err());
    }

    #[test]
    fn regular_comodule_is_relatively_injective() {
        let c = dk_z2();
        let m = Comodule::regular(&c, Side::Right);
        let p = is_relatively_injective(&m).unwrap();
        assert!(p.mul(&m.coaction).is_identity());
        let cofree = m.cofree();
        assert!(cofree.check().passed());
    }

    #[test]
    fn direct_sum_and_zero() {
        let c = dk_z2();
        let g = vec![q(1), q(0), q(0), q(0)];
        let a = Comodule::from_grouplike(&c, &g, Side::Right).unwrap();
        let s = a.direct_sum(&a).unwrap();
        assert!(s.check().passed());
        assert_eq!(EndoRing::of(&s).dim(), 4);
        let z = Comodule::zero(&c, Side::Left);
        assert_eq!(z.dim(), 0);
        assert!(z.check().passed());
        let l = Comodule::from_grouplike(&c, &g, Side::Left).unwrap();
        assert!(l.direct_sum(&l).unwrap().check().passed());
    }

    #[test]
    fn broken_coaction_is_rejected() {
        let c = dk_z2();
        let m = Comodule::regular(&c, Side::Right);
        let bad = Comodule::from_lifted(&c, m.module.clone(), &Matrix::zeros(m.dim() * c.dim(), m.dim())).unwrap();
        assert!(bad.check().violated("counit"));
        assert!(Comodule::from_lifted(&c, m.module.clone(), &Matrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn dual_comodule_and_gamma() {
        let c = dk_z2();
        let g = vec![q(1), q(0), q(0), q(0)];
        for m in [Comodule::from_grouplike(&c, &g, Side::Right).unwrap(), Comodule::regular(&c, Side::Right)] {
            let dual = dual_left_comodule(&m).unwrap();
            assert!(dual.comodule.check().passed(), "{}", dual.comodule.check());
            assert!(dual.check_identities(&m).passed(), "{}", dual.check_identities(&m));
            let gi = gamma_iso(&m, &dual).unwrap();
            assert!(gi.check().passed(), "{}", gi.check());
        }
    }

    #[test]
    fn induction_along_identity_and_counit() {
        let c = dk_z2();
        let id = CoringMorphism::identity(&c);
        let m = Comodule::regular(&c, Side::Right);
        let ind = induced_comodule(&m, &id).unwrap();
        assert!(ind.check().passed());
        assert_eq!(ind.dim(), m.dim());
        let eps = CoringMorphism::counit_morphism(&c);
        let ind = induced_comodule(&m, &eps).unwrap();
        assert!(ind.check().passed());
        let (left, _) = induced_left_comodule(&eps).unwrap();
        assert!(left.check().passed());
        assert_eq!(left.dim(), c.dim());
    }
}
