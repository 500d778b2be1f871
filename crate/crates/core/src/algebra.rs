//! Finite-dimensional unital associative algebras and their modules.

use crate::error::{ForgeError, Result};
use crate::linalg::{AffineSystem, Embed, Subspace, Term};
use crate::matrix::{tensor_vec, unit, vec_is_zero, Matrix};
use crate::scalar::Scalar;
use crate::tensor::Balanced;
use crate::verdict::Verdict;

/// An algebra given by structure constants: `mul` is `n × n²`, column
/// `i·n + j` holding `b_i b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<S: Scalar> {
    pub dim: usize,
    pub mul: Matrix<S>,
    pub unit: Vec<S>,
}

impl<S: Scalar> Algebra<S> {
    pub fn new(mul: Matrix<S>, unit: Vec<S>) -> Result<Self> {
        let n = unit.len();
        if mul.shape() != (n, n * n) {
            return Err(ForgeError::Dimension(format!(
                "multiplication of an algebra of dimension {n} must be {n}x{}, got {}x{}",
                n * n,
                mul.rows(),
                mul.cols()
            )));
        }
        Ok(Algebra { dim: n, mul, unit })
    }

    /// Builds from a product table on basis elements.
    pub fn from_table(dim: usize, unit: Vec<S>, product: impl Fn(usize, usize) -> Vec<S>) -> Self {
        let cols: Vec<Vec<S>> = (0..dim * dim).map(|c| product(c / dim, c % dim)).collect();
        Algebra { dim, mul: Matrix::from_columns(dim, &cols), unit }
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground() -> Self {
        Self::from_table(1, vec![S::one()], |_, _| vec![S::one()])
    }

    /// Group algebra of the cyclic group of order `n`, basis `g^0, …, g^{n-1}`.
    pub fn cyclic_group(n: usize) -> Self {
        Self::from_table(n, unit(n, 0), |i, j| unit(n, (i + j) % n))
    }

    /// `k[x]/(x^n)`, basis `1, x, …, x^{n-1}`.
    pub fn truncated_polynomial(n: usize) -> Self {
        Self::from_table(n, unit(n, 0), |i, j| if i + j < n { unit(n, i + j) } else { vec![S::zero(); n] })
    }

    /// `M_n(k)` with basis `e_{ij}` at index `i·n + j`.
    pub fn matrix_algebra(n: usize) -> Self {
        let d = n * n;
        let mut one = vec![S::zero(); d];
        for i in 0..n {
            one[i * n + i] = S::one();
        }
        Self::from_table(d, one, |a, b| {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            if j == k {
                unit(d, i * n + l)
            } else {
                vec![S::zero(); d]
            }
        })
    }

    pub fn product(&self, a: &[S], b: &[S]) -> Vec<S> {
        self.mul.apply(&tensor_vec(a, b))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<S> {
        self.mul.column(i * self.dim + j)
    }

    /// `x ↦ a·x`.
    pub fn left_mult(&self, a: &[S]) -> Matrix<S> {
        let n = self.dim;
        Matrix::from_columns(n, &(0..n).map(|j| self.product(a, &unit(n, j))).collect::<Vec<_>>())
    }

    /// `x ↦ x·a`.
    pub fn right_mult(&self, a: &[S]) -> Matrix<S> {
        let n = self.dim;
        Matrix::from_columns(n, &(0..n).map(|j| self.product(&unit(n, j), a)).collect::<Vec<_>>())
    }

    /// `k → A`, `1 ↦ 1_A`.
    pub fn unit_map(&self) -> Matrix<S> {
        Matrix::from_columns(self.dim, &[self.unit.clone()])
    }

    pub fn opposite(&self) -> Self {
        let n = self.dim;
        Algebra { dim: n, mul: self.mul.mul(&crate::matrix::flip(n, n)), unit: self.unit.clone() }
    }

    pub fn is_commutative(&self) -> bool {
        self.mul == self.opposite().mul
    }

    /// Associativity and both unit laws on all basis tensors.
    pub fn check(&self) -> Verdict {
        let n = self.dim;
        let id = Matrix::identity(n);
        let mut v = Verdict::new();
        let lhs = self.mul.mul(&self.mul.kron(&id));
        let rhs = self.mul.mul(&id.kron(&self.mul));
        v.check("associativity", lhs == rhs, || "mul∘(mul⊗id) ≠ mul∘(id⊗mul)".into());
        let u = self.unit_map();
        v.check("left unit", self.mul.mul(&u.kron(&id)).is_identity(), || "1·a ≠ a".into());
        v.check("right unit", self.mul.mul(&id.kron(&u)).is_identity(), || "a·1 ≠ a".into());
        v
    }

    /// Checks that `f: self → target` is a unital algebra map.
    pub fn check_algebra_map(&self, target: &Algebra<S>, f: &Matrix<S>) -> Verdict {
        let mut v = Verdict::new();
        if f.shape() != (target.dim, self.dim) {
            v.check("shape", false, || format!("map is {}x{}", f.rows(), f.cols()));
            return v;
        }
        v.expect("multiplicative", f.mul(&self.mul) == target.mul.mul(&f.kron(f)));
        v.expect("unital", f.apply(&self.unit) == target.unit);
        v
    }

    pub fn regular(&self, side: Side) -> AModule<S> {
        AModule { algebra: self.clone(), side, dim: self.dim, action: self.mul.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A one-sided module. A right action is `dim × dim·a` (`m ⊗ a ↦ m·a`), a
/// left action is `dim × a·dim` (`a ⊗ m ↦ a·m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AModule<S: Scalar> {
    pub algebra: Algebra<S>,
    pub side: Side,
    pub dim: usize,
    pub action: Matrix<S>,
}

impl<S: Scalar> AModule<S> {
    pub fn new(algebra: Algebra<S>, side: Side, action: Matrix<S>) -> Result<Self> {
        let d = action.rows();
        if action.cols() != d * algebra.dim {
            return Err(ForgeError::Dimension(format!(
                "action of a {d}-dimensional module over a {}-dimensional algebra must have {} columns, got {}",
                algebra.dim,
                d * algebra.dim,
                action.cols()
            )));
        }
        Ok(AModule { algebra, side, dim: d, action })
    }

    pub fn zero(algebra: &Algebra<S>, side: Side) -> Self {
        AModule { algebra: algebra.clone(), side, dim: 0, action: Matrix::zeros(0, 0) }
    }

    /// `A^n` with the regular action on each summand.
    pub fn free(algebra: &Algebra<S>, side: Side, n: usize) -> Self {
        let mut m = Self::zero(algebra, side);
        for _ in 0..n {
            m = m.direct_sum(&algebra.regular(side));
        }
        m
    }

    /// `M ⊕ N`, basis of `M` first.
    pub fn direct_sum(&self, other: &AModule<S>) -> Self {
        assert_eq!(self.side, other.side);
        let (d1, d2, a) = (self.dim, other.dim, self.algebra.dim);
        let d = d1 + d2;
        let mut act = Matrix::zeros(d, d * a);
        for m in 0..d {
            for r in 0..a {
                let (src, col, off) = if m < d1 { (self, m, 0) } else { (other, m - d1, d1) };
                let c = match self.side {
                    Side::Right => col * a + r,
                    Side::Left => r * src.dim + col,
                };
                let out = match self.side {
                    Side::Right => m * a + r,
                    Side::Left => r * d + m,
                };
                for i in 0..src.dim {
                    act[(off + i, out)] = src.action[(i, c)].clone();
                }
            }
        }
        AModule { algebra: self.algebra.clone(), side: self.side, dim: d, action: act }
    }

    /// `m·a` or `a·m` depending on the side.
    pub fn act(&self, m: &[S], a: &[S]) -> Vec<S> {
        match self.side {
            Side::Right => self.action.apply(&tensor_vec(m, a)),
            Side::Left => self.action.apply(&tensor_vec(a, m)),
        }
    }

    /// The operator of `a` on `M`.
    pub fn operator(&self, a: &[S]) -> Matrix<S> {
        let cols: Vec<Vec<S>> = (0..self.dim).map(|j| self.act(&unit(self.dim, j), a)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Action associativity and unitality on basis tensors.
    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        let im = Matrix::identity(self.dim);
        let ia = Matrix::identity(self.algebra.dim);
        let u = self.algebra.unit_map();
        let (assoc, unital) = match self.side {
            Side::Right => (
                self.action.mul(&self.action.kron(&ia)) == self.action.mul(&im.kron(&self.algebra.mul)),
                self.action.mul(&im.kron(&u)).is_identity(),
            ),
            Side::Left => (
                self.action.mul(&ia.kron(&self.action)) == self.action.mul(&self.algebra.mul.kron(&im)),
                self.action.mul(&u.kron(&im)).is_identity(),
            ),
        };
        v.expect("action associativity", assoc);
        v.expect("action unit", unital);
        v
    }

    /// Restriction of scalars along an algebra map `f: R → A`.
    pub fn restrict(&self, source: &Algebra<S>, f: &Matrix<S>) -> AModule<S> {
        let im = Matrix::identity(self.dim);
        let action = match self.side {
            Side::Right => self.action.mul(&im.kron(f)),
            Side::Left => self.action.mul(&f.kron(&im)),
        };
        AModule { algebra: source.clone(), side: self.side, dim: self.dim, action }
    }

    /// Residual of A-linearity for `f: self → target`.
    pub fn linearity_residual(&self, target: &AModule<S>, f: &Matrix<S>) -> Matrix<S> {
        let ia = Matrix::identity(self.algebra.dim);
        let pushed = match self.side {
            Side::Right => target.action.mul(&f.kron(&ia)),
            Side::Left => target.action.mul(&ia.kron(f)),
        };
        f.mul(&self.action).sub(&pushed)
    }
}

/// Adds the `A`-linearity constraints on `f: M → N` (`dim N × dim M`).
pub fn push_linearity<S: Scalar>(sys: &mut AffineSystem<S>, m: &AModule<S>, n: &AModule<S>) {
    let embed = match m.side {
        Side::Right => Embed::KronIdentity(m.algebra.dim),
        Side::Left => Embed::IdentityKron(m.algebra.dim),
    };
    sys.push_terms(n.dim, m.dim, &[Term::right(&m.action), Term::new(Some(&n.action), embed, None).neg()], None);
}

fn ensure_compatible<S: Scalar>(m: &AModule<S>, n: &AModule<S>) -> Result<()> {
    if m.side != n.side {
        return Err(ForgeError::Mismatch("modules on different sides".into()));
    }
    if m.algebra != n.algebra {
        return Err(ForgeError::Mismatch("modules over different algebras".into()));
    }
    Ok(())
}

/// Basis of `Hom_A(M, N)` as `dim N × dim M` matrices, in echelon order.
pub fn module_hom<S: Scalar>(m: &AModule<S>, n: &AModule<S>) -> Result<Vec<Matrix<S>>> {
    ensure_compatible(m, n)?;
    let mut sys = AffineSystem::new(n.dim * m.dim);
    push_linearity(&mut sys, m, n);
    Ok(sys.kernel().vectors().into_iter().map(|v| Matrix::from_flat(n.dim, m.dim, v)).collect())
}

/// `M ⊗_A N` for a right module `M` and a left module `N`.
pub fn tensor_over<S: Scalar>(m: &AModule<S>, n: &AModule<S>) -> Result<Balanced<S>> {
    if m.side != Side::Right || n.side != Side::Left {
        return Err(ForgeError::Mismatch("tensor product needs a right module and a left module".into()));
    }
    if m.algebra != n.algebra {
        return Err(ForgeError::Mismatch("modules over different algebras".into()));
    }
    Ok(Balanced::new(&m.action, &n.action))
}

/// `{e^i, ξ^i}` with `m = Σ e^i·ξ^i(m)` (right modules) or
/// `m = Σ ξ^i(m)·e^i` (left modules).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasis<S: Scalar> {
    pub elements: Vec<Vec<S>>,
    /// Each functional is an `a × dim M` matrix.
    pub functionals: Vec<Matrix<S>>,
}

impl<S: Scalar> DualBasis<S> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `Σ e^i ξ^i(−)` as a matrix on `M`.
    pub fn reconstruction(&self, m: &AModule<S>) -> Matrix<S> {
        let mut out = Matrix::zeros(m.dim, m.dim);
        for (e, xi) in self.elements.iter().zip(&self.functionals) {
            for b in 0..m.dim {
                let v = m.act(e, &xi.column(b));
                for (i, x) in v.into_iter().enumerate() {
                    out[(i, b)] += x;
                }
            }
        }
        out
    }

    /// The defining identity plus A-linearity of every functional.
    pub fn verify(&self, m: &AModule<S>) -> bool {
        let reg = m.algebra.regular(m.side);
        self.reconstruction(m).is_identity()
            && self.functionals.iter().all(|xi| m.linearity_residual(&reg, xi).is_zero())
    }
}

/// `M* = Hom_A(M, A)` with its basis, coordinates, and induced action on the
/// opposite side.
#[derive(Clone, Debug)]
pub struct DualModule<S: Scalar> {
    pub module: AModule<S>,
    pub basis: Vec<Matrix<S>>,
    space: Subspace<S>,
    rows: usize,
    cols: usize,
}

impl<S: Scalar> DualModule<S> {
    pub fn of(m: &AModule<S>) -> Self {
        let alg = &m.algebra;
        let reg = alg.regular(m.side);
        let basis = module_hom(m, &reg).expect("same algebra and side");
        let space = Subspace::span_of(alg.dim * m.dim, &basis.iter().map(Matrix::to_vec).collect::<Vec<_>>());
        let basis: Vec<Matrix<S>> =
            space.vectors().into_iter().map(|v| Matrix::from_flat(alg.dim, m.dim, v)).collect();
        let h = basis.len();
        let a = alg.dim;
        let mut this = DualModule {
            module: AModule::zero(alg, m.side.opposite()),
            basis,
            space,
            rows: a,
            cols: m.dim,
        };
        // (a·ξ)(m) = a ξ(m) for right M; (ξ·a)(m) = ξ(m) a for left M.
        let mut action = Matrix::zeros(h, h * a);
        for r in 0..a {
            let op = match m.side {
                Side::Right => alg.left_mult(&unit(a, r)),
                Side::Left => alg.right_mult(&unit(a, r)),
            };
            for j in 0..h {
                let image = op.mul(&this.basis[j]);
                let c = this.coordinates(&image).expect("Hom_A(M,A) is an A-module");
                let col = match m.side {
                    Side::Right => r * h + j,
                    Side::Left => j * a + r,
                };
                for (i, x) in c.into_iter().enumerate() {
                    action[(i, col)] = x;
                }
            }
        }
        this.module = AModule { algebra: alg.clone(), side: m.side.opposite(), dim: h, action };
        this
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

    /// The functional with the given coordinates.
    pub fn element(&self, coords: &[S]) -> Matrix<S> {
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (c, b) in coords.iter().zip(&self.basis) {
            out.add_scaled(c, b);
        }
        out
    }
}

/// Searches for a dual basis; `None` exactly when `M` is not projective.
pub fn find_dual_basis<S: Scalar>(m: &AModule<S>) -> Option<DualBasis<S>> {
    let reg = m.algebra.regular(m.side);
    let phis = module_hom(m, &reg).expect("same algebra and side");
    let (d, h) = (m.dim, phis.len());
    if d == 0 {
        return Some(DualBasis { elements: vec![], functionals: vec![] });
    }
    // Unknown x_{jk}: coefficient of e_j ⊗ φ_k in a preimage of id_M.
    let mut sys = AffineSystem::new(d * h);
    let mut pieces = Vec::with_capacity(d * h);
    for j in 0..d {
        for phi in &phis {
            let mut image = Vec::with_capacity(d * d);
            for b in 0..d {
                image.push(m.act(&unit(d, j), &phi.column(b)));
            }
            // Row-major over (i, b) to match the flattened identity.
            let flat: Vec<S> = (0..d * d).map(|t| image[t % d][t / d].clone()).collect();
            pieces.push(flat);
        }
    }
    let a = Matrix::from_columns(d * d, &pieces);
    sys.push(&a, Matrix::<S>::identity(d).as_slice()).expect("shapes agree");
    let x = sys.solve().solution()?;
    let mut db = DualBasis { elements: Vec::new(), functionals: Vec::new() };
    for (k, phi) in phis.iter().enumerate() {
        let e: Vec<S> = (0..d).fold(vec![S::zero(); d], |mut acc, j| {
            let c = &x[j * h + k];
            if !c.is_zero() {
                acc[j] += c.clone();
            }
            acc
        });
        if !vec_is_zero(&e) {
            db.elements.push(e);
            db.functionals.push(phi.clone());
        }
    }
    debug_assert!(db.verify(m));
    Some(db)
}

/// An `(A, A)`-bimodule: left action `dim × a·dim`, right action `dim × dim·a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule<S: Scalar> {
    pub algebra: Algebra<S>,
    pub dim: usize,
    pub left: Matrix<S>,
    pub right: Matrix<S>,
}

impl<S: Scalar> Bimodule<S> {
    pub fn new(algebra: Algebra<S>, left: Matrix<S>, right: Matrix<S>) -> Result<Self> {
        let d = left.rows();
        let a = algebra.dim;
        if left.shape() != (d, a * d) || right.shape() != (d, d * a) {
            return Err(ForgeError::Dimension(format!(
                "bimodule of dimension {d} over an algebra of dimension {a}: actions are {}x{} and {}x{}",
                left.rows(),
                left.cols(),
                right.rows(),
                right.cols()
            )));
        }
        Ok(Bimodule { algebra, dim: d, left, right })
    }

    pub fn regular(algebra: &Algebra<S>) -> Self {
        Bimodule { algebra: algebra.clone(), dim: algebra.dim, left: algebra.mul.clone(), right: algebra.mul.clone() }
    }

    pub fn left_module(&self) -> AModule<S> {
        AModule { algebra: self.algebra.clone(), side: Side::Left, dim: self.dim, action: self.left.clone() }
    }

    pub fn right_module(&self) -> AModule<S> {
        AModule { algebra: self.algebra.clone(), side: Side::Right, dim: self.dim, action: self.right.clone() }
    }

    pub fn side(&self, side: Side) -> AModule<S> {
        match side {
            Side::Left => self.left_module(),
            Side::Right => self.right_module(),
        }
    }

    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        v.merge("left", self.left_module().check());
        v.merge("right", self.right_module().check());
        let ia = Matrix::identity(self.algebra.dim);
        let a = self.right.mul(&self.left.kron(&ia));
        let b = self.left.mul(&ia.kron(&self.right));
        v.check("bimodule compatibility", a == b, || "(a·m)·b ≠ a·(m·b)".into());
        v
    }

    /// Residual of `f: self → target` being an `(A, A)`-bimodule map.
    pub fn bilinearity_residual(&self, target: &Bimodule<S>, f: &Matrix<S>) -> (Matrix<S>, Matrix<S>) {
        (
            self.left_module().linearity_residual(&target.left_module(), f),
            self.right_module().linearity_residual(&target.right_module(), f),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Q};
    use proptest::prelude::*;

    #[test]
    fn group_algebra_is_valid() {
        assert!(Algebra::<Q>::cyclic_group(2).check().passed());
        assert!(Algebra::<Q>::matrix_algebra(2).check().passed());
    }

    #[test]
    fn zero_product_breaks_unit() {
        let a = Algebra::<Q>::new(Matrix::zeros(2, 4), unit(2, 0)).unwrap();
        let v = a.check();
        assert!(v.violated("left unit") && v.violated("right unit"));
        assert!(!v.violated("associativity"));
    }

    #[test]
    fn hom_examples() {
        let a = Algebra::<Q>::cyclic_group(2);
        let r = a.regular(Side::Right);
        assert_eq!(module_hom(&r, &r).unwrap().len(), 2);
        assert!(module_hom(&r, &AModule::zero(&a, Side::Right)).unwrap().is_empty());
        let k = Algebra::<Q>::ground();
        assert_eq!(module_hom(&k.regular(Side::Right), &k.regular(Side::Right)).unwrap().len(), 1);
    }

    #[test]
    fn hom_rejects_mismatched_sides() {
        let a = Algebra::<Q>::cyclic_group(2);
        assert!(module_hom(&a.regular(Side::Right), &a.regular(Side::Left)).is_err());
    }

    #[test]
    fn tensor_examples() {
        let a = Algebra::<Q>::cyclic_group(2);
        let t = tensor_over(&a.regular(Side::Right), &a.regular(Side::Left)).unwrap();
        assert_eq!(t.dim(), 2);
        let z = tensor_over(&a.regular(Side::Right), &AModule::zero(&a, Side::Left)).unwrap();
        assert_eq!(z.dim(), 0);
    }

    #[test]
    fn dual_basis_examples() {
        let a = Algebra::<Q>::truncated_polynomial(2);
        let reg = a.regular(Side::Right);
        let db = find_dual_basis(&reg).unwrap();
        assert!(db.verify(&reg));
        assert_eq!(db.len(), 1);
        let free = AModule::free(&a, Side::Right, 2);
        let db2 = find_dual_basis(&free).unwrap();
        assert!(db2.verify(&free));
        assert_eq!(db2.len(), 2);
        // k with x acting as zero.
        let k = AModule::new(a.clone(), Side::Right, Matrix::from_i64(&[&[1, 0]])).unwrap();
        assert!(k.check().passed());
        assert!(find_dual_basis(&k).is_none());
        let kl = AModule::new(a, Side::Left, Matrix::from_i64(&[&[1, 0]])).unwrap();
        assert!(find_dual_basis(&kl).is_none());
    }

    #[test]
    fn left_dual_basis_over_noncommutative_algebra() {
        let a = Algebra::<Q>::matrix_algebra(2);
        // Column vectors k² as a left M_2(k)-module.
        let act = Matrix::from_fn(2, 8, |i, c| {
            let (r, m) = (c / 2, c % 2);
            let (p, q) = (r / 2, r % 2);
            if p == i && q == m { Q::from_i64(1) } else { Q::from_i64(0) }
        });
        let col = AModule::new(a, Side::Left, act).unwrap();
        assert!(col.check().passed());
        let db = find_dual_basis(&col).unwrap();
        assert!(db.verify(&col));
    }

    #[test]
    fn dual_module_of_regular() {
        let a = Algebra::<Fp<3>>::cyclic_group(3);
        let d = DualModule::of(&a.regular(Side::Right));
        assert_eq!(d.dim(), 3);
        assert_eq!(d.module.side, Side::Left);
        assert!(d.module.check().passed());
    }

    #[test]
    fn sweedler_h4_algebra_is_valid() {
        // Brute-force oracle: evaluate associativity on all 64 triples by hand
        // from the defining relations g² = 1, x² = 0, xg = −gx.
        let h = crate::fixtures::sweedler_h4::<Q>();
        let alg = &h.algebra;
        let mut ok = true;
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let l = alg.product(&alg.basis_product(i, j), &unit(4, k));
                    let r = alg.product(&unit(4, i), &alg.basis_product(j, k));
                    ok &= l == r;
                }
            }
        }
        assert!(ok);
        assert!(alg.check().passed());
    }

    fn random_algebra_element() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-2i64..=2, 4)
    }

    proptest! {
        #[test]
        fn endomorphisms_compose(x in random_algebra_element(), y in random_algebra_element()) {
            let a = Algebra::<Q>::matrix_algebra(2);
            let reg = a.regular(Side::Right);
            let hom = module_hom(&reg, &reg).unwrap();
            let comb = |c: &[i64]| {
                let mut m = Matrix::zeros(4, 4);
                for (ci, b) in c.iter().zip(&hom) {
                    m.add_scaled(&Q::from_i64(*ci), b);
                }
                m
            };
            let f = comb(&x).mul(&comb(&y));
            prop_assert!(reg.linearity_residual(&reg, &f).is_zero());
            let space = Subspace::span_of(16, &hom.iter().map(Matrix::to_vec).collect::<Vec<_>>());
            prop_assert!(space.contains(&f.to_vec()));
        }

        #[test]
        fn tensor_with_algebra_is_identity(n in 1usize..4) {
            let a = Algebra::<Q>::cyclic_group(n);
            let m = AModule::free(&a, Side::Left, 2);
            let t = tensor_over(&a.regular(Side::Right), &m).unwrap();
            prop_assert_eq!(t.dim(), m.dim);
            let embed = t.proj().mul(&a.unit_map().kron(&Matrix::identity(m.dim)));
            prop_assert_eq!(crate::linalg::rank(&embed), m.dim);
        }
    }
}
