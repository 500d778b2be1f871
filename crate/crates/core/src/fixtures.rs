//! Built-in example structures.

use crate::algebra::{AModule, Algebra, Side};
use crate::coalgebra::Coalgebra;
use crate::comodule::Comodule;
use crate::coring::Coring;
use crate::entwining::{doi_koppinen, ComoduleAlgebra, DoiKoppinen, HopfAlgebra};
use crate::linalg::inverse;
use crate::matrix::{tensor_vec, unit, Matrix};
use crate::scalar::Scalar;

/// Sweedler's four-dimensional Hopf algebra with basis `1, g, x, gx`
/// (index `i + 2j` for `g^i x^j`): `g² = 1`, `x² = 0`, `xg = −gx`,
/// `Δx = x⊗1 + g⊗x`, `S(x) = −gx`.
pub fn sweedler_h4<S: Scalar>() -> HopfAlgebra<S> {
    let idx = |i: usize, j: usize| i + 2 * j;
    let algebra = Algebra::from_table(4, unit(4, 0), |a, b| {
        let (i, j) = (a % 2, a / 2);
        let (k, l) = (b % 2, b / 2);
        if j + l >= 2 {
            return vec![S::zero(); 4];
        }
        let sign = if j * k % 2 == 1 { -S::one() } else { S::one() };
        let mut v = unit(4, idx((i + k) % 2, j + l));
        v[idx((i + k) % 2, j + l)] = sign;
        v
    });
    let e = |i, j| unit::<S>(4, idx(i, j));
    let add = |a: Vec<S>, b: Vec<S>| a.into_iter().zip(b).map(|(x, y)| x + y).collect::<Vec<S>>();
    let comul = Matrix::from_columns(
        16,
        &[
            tensor_vec(&e(0, 0), &e(0, 0)),
            tensor_vec(&e(1, 0), &e(1, 0)),
            add(tensor_vec(&e(0, 1), &e(0, 0)), tensor_vec(&e(1, 0), &e(0, 1))),
            add(tensor_vec(&e(1, 1), &e(1, 0)), tensor_vec(&e(0, 0), &e(1, 1))),
        ],
    );
    let coalgebra = Coalgebra { dim: 4, comul, counit: vec![S::one(), S::one(), S::zero(), S::zero()] };
    let neg = |v: Vec<S>| v.into_iter().map(|x| -x).collect::<Vec<S>>();
    let antipode = Matrix::from_columns(4, &[e(0, 0), e(1, 0), neg(e(1, 1)), e(0, 1)]);
    let antipode_inverse = inverse(&antipode);
    HopfAlgebra { algebra, coalgebra, antipode, antipode_inverse }
}

/// The Doi–Koppinen entwining of a Hopf algebra over itself (`A = C = H`).
pub fn hopf_entwining<S: Scalar>(h: &HopfAlgebra<S>) -> DoiKoppinen<S> {
    let a = ComoduleAlgebra { algebra: h.algebra.clone(), coaction: h.coalgebra.comul.clone() };
    doi_koppinen(h, &a, &h.coalgebra, &Matrix::identity(h.dim())).expect("H is an H-comodule algebra")
}

/// `k[x]/(x²)` graded by `ℤ₂` with `x` odd: `ρ(1) = 1⊗1`, `ρ(x) = x⊗g`.
pub fn graded_dual_numbers<S: Scalar>() -> ComoduleAlgebra<S> {
    let coaction = Matrix::from_columns(4, &[tensor_vec(&unit(2, 0), &unit(2, 0)), tensor_vec(&unit(2, 1), &unit(2, 1))]);
    ComoduleAlgebra { algebra: Algebra::truncated_polynomial(2), coaction }
}

/// The Doi–Koppinen entwining of [`graded_dual_numbers`] over `C = k[ℤ₂]`.
/// Its canonical map kills `x⊗x`.
pub fn twisted_z2<S: Scalar>() -> DoiKoppinen<S> {
    let h = HopfAlgebra::cyclic_group(2);
    doi_koppinen(&h, &graded_dual_numbers(), &h.coalgebra, &Matrix::identity(2)).expect("graded algebra")
}

/// `k[x]/(x² − x − 1)`, a field over `F₂` and `F₃`.
pub fn quadratic_algebra<S: Scalar>() -> Algebra<S> {
    Algebra::from_table(2, unit(2, 0), |i, j| match (i, j) {
        (0, k) | (k, 0) => unit(2, k),
        _ => vec![S::one(), S::one()],
    })
}

/// `k^n` as a right comodule over the matrix coalgebra, `ρ(e_j) = Σ_i e_i⊗e_{ij}`.
pub fn matrix_comodule<S: Scalar>(n: usize) -> Comodule<S> {
    let coring = Coring::from_coalgebra(&Coalgebra::matrix_coalgebra(n));
    let module = AModule { algebra: Algebra::ground(), side: Side::Right, dim: n, action: Matrix::identity(n) };
    let cols: Vec<Vec<S>> = (0..n)
        .map(|j| {
            let mut v = vec![S::zero(); n * n * n];
            for i in 0..n {
                v[i * n * n + i * n + j] = S::one();
            }
            v
        })
        .collect();
    Comodule::from_lifted(&coring, module, &Matrix::from_columns(n * n * n, &cols)).expect("matrix comodule")
}
