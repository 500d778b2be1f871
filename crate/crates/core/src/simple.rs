//! Simplicity of right comodules.
//!
//! When `C` is finitely generated projective as a left `A`-module, the
//! subcomodules of `M` are the subspaces stable under the right `A`-action
//! and under the operators `m ↦ m₀·φ(m₁)` for `φ` in a dual basis of `*C`.
//! Simplicity is then irreducibility over the algebra `E` generated by these
//! operators, decided with a spin test.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{find_dual_basis, Side};
use crate::comodule::Comodule;
use crate::linalg::{rank, Subspace};
use crate::matrix::{unit, Matrix};
use crate::scalar::{Field, Scalar};

/// Enumeration cap on projective points of a kernel.
const MAX_POINTS: usize = 1 << 16;
const RANDOM_TRIES: usize = 64;
const SEED: u64 = 0x5eed_f0e5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity<S: Scalar> {
    Simple,
    /// A proper nonzero subcomodule (the zero subspace for `M = 0`).
    NotSimple(Subspace<S>),
    Unsupported(String),
}

impl<S: Scalar> Simplicity<S> {
    pub fn label(&self) -> &'static str {
        match self {
            Simplicity::Simple => "Simple",
            Simplicity::NotSimple(_) => "NotSimple",
            Simplicity::Unsupported(_) => "Unsupported",
        }
    }
}

/// Whether `u` is an `A`-submodule whose coaction lands in the image of
/// `U ⊗_A C`.
pub fn is_subcomodule<S: Scalar>(m: &Comodule<S>, u: &Subspace<S>) -> bool {
    let (a, c) = (m.coring.algebra.dim, m.coring.dim());
    let vecs = u.vectors();
    for v in &vecs {
        for i in 0..a {
            if !u.contains(&m.module.act(v, &unit(a, i))) {
                return false;
            }
        }
    }
    let image: Vec<Vec<S>> = vecs
        .iter()
        .flat_map(|v| {
            (0..c).map(move |k| m.tensor.proj().apply(&crate::matrix::tensor_vec(v, &unit(c, k))))
        })
        .collect();
    let image = Subspace::span_of(m.tensor.dim(), &image);
    vecs.iter().all(|v| image.contains(&m.coaction.apply(v)))
}

/// Generators of the algebra whose invariant subspaces are the
/// subcomodules, or `None` when `C` is not projective over `A`.
pub fn stability_operators<S: Scalar>(m: &Comodule<S>) -> Option<Vec<Matrix<S>>> {
    let db = find_dual_basis(&m.coring.carrier.left_module())?;
    let (d, a) = (m.dim(), m.coring.algebra.dim);
    let id = Matrix::identity(d);
    let mut ops: Vec<Matrix<S>> = (0..a).map(|i| m.module.operator(&unit(a, i))).collect();
    let lifted = m.lifted();
    for phi in &db.functionals {
        ops.push(m.module.action.mul(&id.kron(phi)).mul(&lifted));
    }
    Some(ops)
}

/// Linear span of all products of the generators, including the identity.
pub fn enveloping_algebra<S: Scalar>(d: usize, gens: &[Matrix<S>]) -> Vec<Matrix<S>> {
    let mut span = Subspace::span_of(d * d, &[Matrix::identity(d).to_vec()]);
    let mut basis = vec![Matrix::identity(d)];
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in gens {
                let p = g.mul(f);
                let v = p.to_vec();
                if !span.contains(&v) {
                    let mut all = span.vectors();
                    all.push(v);
                    span = Subspace::span_of(d * d, &all);
                    basis.push(p.clone());
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    basis
}

/// Smallest subspace containing `v` and stable under `ops`.
pub fn spin<S: Scalar>(v: &[S], ops: &[Matrix<S>]) -> Subspace<S> {
    let n = v.len();
    let mut span = Subspace::span_of(n, &[v.to_vec()]);
    let mut frontier = vec![v.to_vec()];
    while let Some(w) = frontier.pop() {
        for op in ops {
            let x = op.apply(&w);
            if !span.contains(&x) {
                let mut all = span.vectors();
                all.push(x.clone());
                span = Subspace::span_of(n, &all);
                frontier.push(x);
            }
        }
    }
    span
}

fn annihilator<S: Scalar>(w: &Subspace<S>) -> Subspace<S> {
    if w.dim() == 0 {
        return Subspace::full(w.ambient);
    }
    Subspace::kernel(&w.basis.transpose())
}

fn combine<S: Scalar>(basis: &[Matrix<S>], coeffs: &[S]) -> Matrix<S> {
    let mut out = Matrix::zeros(basis[0].rows(), basis[0].cols());
    for (c, b) in coeffs.iter().zip(basis) {
        out.add_scaled(c, b);
    }
    out
}

/// Projective points of a subspace over a finite field: vectors whose first
/// nonzero coordinate (in the subspace basis) is 1.
fn projective_points<S: Scalar>(space: &Subspace<S>, elements: &[S], cap: usize) -> Option<Vec<Vec<S>>> {
    let k = space.dim();
    let q = elements.len();
    let mut total = 0usize;
    for i in 0..k {
        total = total.saturating_add(q.saturating_pow((k - 1 - i) as u32));
    }
    if total > cap {
        return None;
    }
    let mut out = Vec::with_capacity(total);
    for lead in 0..k {
        let free = k - 1 - lead;
        let count = q.pow(free as u32);
        for idx in 0..count {
            let mut coeffs = vec![S::zero(); k];
            coeffs[lead] = S::one();
            let mut r = idx;
            for slot in coeffs.iter_mut().skip(lead + 1) {
                *slot = elements[r % q].clone();
                r /= q;
            }
            let mut v = vec![S::zero(); space.ambient];
            for (c, b) in coeffs.iter().zip(space.vectors()) {
                for (x, y) in v.iter_mut().zip(b) {
                    *x += c.clone() * y;
                }
            }
            out.push(v);
        }
    }
    Some(out)
}

/// Decides simplicity of a right comodule.
pub fn is_simple<S: Scalar>(m: &Comodule<S>) -> Simplicity<S> {
    if m.side != Side::Right {
        return Simplicity::Unsupported("only right comodules are handled".into());
    }
    let d = m.dim();
    if d == 0 {
        return Simplicity::NotSimple(Subspace::zero(0));
    }
    let Some(gens) = stability_operators(m) else {
        return Simplicity::Unsupported("C is not projective as a left A-module".into());
    };
    let e = enveloping_algebra(d, &gens);
    if d == 1 {
        return Simplicity::Simple;
    }
    for i in 0..d {
        let s = spin(&unit(d, i), &e);
        if s.dim() < d {
            return Simplicity::NotSimple(s);
        }
    }
    if e.len() == d * d {
        return Simplicity::Simple;
    }
    match S::field() {
        Field::PrimeField(p) => decide_finite(d, &e, p),
        Field::Rationals => decide_rational(d, &e),
    }
}

/// Norton's criterion for a singular `θ`: every kernel vector spins to `M`
/// and every vector of `ker θᵀ` spins to `M*` under the transposed algebra.
fn norton<S: Scalar>(
    d: usize,
    e: &[Matrix<S>],
    theta: &Matrix<S>,
    points: impl Fn(&Subspace<S>) -> Option<Vec<Vec<S>>>,
) -> Option<Simplicity<S>> {
    let ker = Subspace::kernel(theta);
    for v in points(&ker)? {
        let s = spin(&v, e);
        if s.dim() < d {
            return Some(Simplicity::NotSimple(s));
        }
    }
    let et: Vec<Matrix<S>> = e.iter().map(Matrix::transpose).collect();
    let kert = Subspace::kernel(&theta.transpose());
    for w in points(&kert)? {
        let s = spin(&w, &et);
        if s.dim() < d {
            return Some(Simplicity::NotSimple(annihilator(&s)));
        }
    }
    Some(Simplicity::Simple)
}

fn is_commutative<S: Scalar>(e: &[Matrix<S>]) -> bool {
    e.iter().all(|x| e.iter().all(|y| x.mul(y) == y.mul(x)))
}

fn power<S: Scalar>(x: &Matrix<S>, mut n: u64) -> Matrix<S> {
    let mut base = x.clone();
    let mut acc = Matrix::identity(x.rows());
    while n > 0 {
        if n & 1 == 1 {
            acc = acc.mul(&base);
        }
        base = base.mul(&base);
        n >>= 1;
    }
    acc
}

/// A nonzero singular element of the commutative algebra `K` (given by a
/// basis), found through the Frobenius map `y ↦ y^p`, or `None` when `K` is
/// a field.
fn singular_in_commutative<S: Scalar>(k: &[Matrix<S>], p: u64) -> Option<Matrix<S>> {
    let d = k[0].rows();
    let space = Subspace::span_of(d * d, &k.iter().map(Matrix::to_vec).collect::<Vec<_>>());
    // Coordinates are taken in the reduced basis of `space`, so elements are rebuilt from it.
    let k: Vec<Matrix<S>> = space.vectors().into_iter().map(|v| Matrix::from_flat(d, d, v)).collect();
    let n = k.len();
    let coords = |x: &Matrix<S>| space.coordinates(&x.to_vec()).expect("closed under powers");
    let frob = Matrix::from_columns(n, &k.iter().map(|b| coords(&power(b, p))).collect::<Vec<_>>());
    let nil = Subspace::kernel(&power(&frob, n as u64));
    if nil.dim() > 0 {
        return Some(combine(&k, &nil.vector(0)));
    }
    let fixed = Subspace::kernel(&frob.sub(&Matrix::identity(n)));
    let one = coords(&Matrix::identity(d));
    let y = fixed.vectors().into_iter().find(|v| !Subspace::span_of(n, &[one.clone()]).contains(v))?;
    let y = combine(&k, &y);
    S::elements()?
        .into_iter()
        .map(|c| y.sub(&Matrix::identity(d).scale(&c)))
        .find(|t| rank(t) < d)
}

/// `F_p[x]` as a list of matrices.
fn generated<S: Scalar>(x: &Matrix<S>) -> Vec<Matrix<S>> {
    enveloping_algebra(x.rows(), std::slice::from_ref(x))
}

fn decide_finite<S: Scalar>(d: usize, e: &[Matrix<S>], p: u64) -> Simplicity<S> {
    let elements = S::elements().expect("finite field");
    let points = |s: &Subspace<S>| projective_points(s, &elements, MAX_POINTS);
    let theta = if is_commutative(e) {
        match singular_in_commutative(e, p) {
            Some(t) => t,
            // `E` is a field, so `M` is simple exactly when it is one-dimensional over `E`.
            None => {
                return if e.len() == d {
                    Simplicity::Simple
                } else {
                    Simplicity::NotSimple(spin(&unit(d, 0), e))
                }
            }
        }
    } else {
        match find_singular(d, e, p) {
            Some(t) => t,
            None => return Simplicity::Unsupported("no singular element found in the enveloping algebra".into()),
        }
    };
    norton(d, e, &theta, points).unwrap_or_else(|| Simplicity::Unsupported("kernel too large to enumerate".into()))
}

fn candidates<S: Scalar>(e: &[Matrix<S>]) -> Vec<Matrix<S>> {
    let mut out: Vec<Matrix<S>> = e.iter().skip(1).cloned().collect();
    for (i, x) in e.iter().enumerate().skip(1) {
        for y in e.iter().skip(i + 1) {
            out.push(x.add(y));
            out.push(x.mul(y));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_TRIES {
        let coeffs: Vec<S> = (0..e.len()).map(|_| S::random(&mut rng)).collect();
        out.push(combine(e, &coeffs));
    }
    out
}

fn find_singular<S: Scalar>(d: usize, e: &[Matrix<S>], p: u64) -> Option<Matrix<S>> {
    for x in candidates(e) {
        if x.is_zero() {
            continue;
        }
        if rank(&x) < d {
            return Some(x);
        }
        if let Some(t) = singular_in_commutative(&generated(&x), p) {
            return Some(t);
        }
    }
    None
}

/// Over `Q` only a nullity-one `θ` gives a complete Norton test.
fn decide_rational<S: Scalar>(d: usize, e: &[Matrix<S>]) -> Simplicity<S> {
    let single = |s: &Subspace<S>| if s.dim() == 1 { Some(vec![s.vector(0)]) } else { None };
    let id = Matrix::identity(d);
    for x in candidates(e) {
        for c in -3i64..=3 {
            let t = x.sub(&id.scale(&S::from_i64(c)));
            if t.is_zero() {
                continue;
            }
            if d - rank(&t) == 1 {
                if let Some(v) = norton(d, e, &t, single) {
                    return v;
                }
            }
        }
    }
    Simplicity::Unsupported("no nullity-one element found over the rationals".into())
}
