use forge_core::algebra::{Algebra, Side};
use forge_core::coalgebra::Coalgebra;
use forge_core::comodule::{colinear_hom, cotensor, is_relatively_injective, Comodule};
use forge_core::coring::Coring;
use forge_core::entwining::HopfAlgebra;
use forge_core::fixtures::hopf_entwining;
use forge_core::linalg::inverse;
use forge_core::matrix::unit;
use forge_core::simple::{is_simple, Simplicity};
use forge_core::{Matrix, Scalar, F2, F3, Q};
use proptest::prelude::*;

fn invertible(n: usize) -> impl Strategy<Value = (Matrix<Q>, Matrix<Q>)> {
    proptest::collection::vec(-2i64..=2, n * n).prop_filter_map("singular", move |v| {
        let p = Matrix::from_flat(n, n, v.into_iter().map(Q::from_i64).collect());
        inverse(&p).map(|q| (p, q))
    })
}

fn sample_algebra(kind: usize, n: usize) -> Algebra<Q> {
    match kind {
        0 => Algebra::cyclic_group(n),
        1 => Algebra::truncated_polynomial(n),
        _ => Algebra::matrix_algebra(1 + n / 2),
    }
}

fn transported_algebra(a: &Algebra<Q>, p: &Matrix<Q>, q: &Matrix<Q>) -> Algebra<Q> {
    Algebra::new(q.mul(&a.mul).mul(&p.kron(p)), q.apply(&a.unit)).unwrap()
}

fn transported_coalgebra(c: &Coalgebra<Q>, p: &Matrix<Q>, q: &Matrix<Q>) -> Coalgebra<Q> {
    let counit = Matrix::from_rows(vec![c.counit.clone()]).mul(p).row(0).to_vec();
    Coalgebra::new(q.kron(q).mul(&c.comul).mul(p), counit).unwrap()
}

fn grouplike_sum<S: Scalar>(coring: &Coring<S>, labels: &[usize]) -> Comodule<S> {
    let n = coring.dim();
    labels
        .iter()
        .map(|&i| Comodule::from_grouplike(coring, &unit(n, i), Side::Right).unwrap())
        .reduce(|acc, m| acc.direct_sum(&m).unwrap())
        .unwrap_or_else(|| Comodule::zero(coring, Side::Right))
}

fn algebra_case() -> impl Strategy<Value = (Algebra<Q>, (Matrix<Q>, Matrix<Q>))> {
    (0usize..3, 2usize..4).prop_flat_map(|(kind, n)| {
        let a = sample_algebra(kind, n);
        let d = a.dim;
        (Just(a), invertible(d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn algebra_axioms_survive_change_of_basis((a, (p, q)) in algebra_case()) {
        let b = transported_algebra(&a, &p, &q);
        prop_assert!(b.check().passed());
        prop_assert_eq!(b.is_commutative(), a.is_commutative());
    }

    #[test]
    fn coalgebra_axioms_and_cointegrals_survive_change_of_basis((a, (p, q)) in algebra_case()) {
        let c = Coalgebra::dual_of(&a);
        let d = transported_coalgebra(&c, &p, &q);
        prop_assert!(d.check().passed());
        let original = c.find_cointegral();
        let moved = d.find_cointegral();
        prop_assert_eq!(original.is_some(), moved.is_some());
        if let Some(delta) = moved {
            prop_assert!(delta.verify(&d).passed());
        }
    }

    #[test]
    fn dual_algebra_round_trips(kind in 0usize..3, n in 2usize..4) {
        let a = sample_algebra(kind, n);
        let c = Coalgebra::dual_of(&a);
        prop_assert!(c.check().passed());
        prop_assert_eq!(c.dual_algebra(), a);
    }

    #[test]
    fn grouplike_sums_are_comodules(n in 1usize..4, raw in proptest::collection::vec(0usize..4, 0..4)) {
        let coring = Coring::from_coalgebra(&Coalgebra::<Q>::grouplike_basis(n));
        let labels: Vec<usize> = raw.iter().map(|i| i % n).collect();
        let m = grouplike_sum(&coring, &labels);
        prop_assert_eq!(m.dim(), labels.len());
        prop_assert!(m.check().passed());
        for j in 0..n {
            let target = Comodule::from_grouplike(&coring, &unit(n, j), Side::Right).unwrap();
            let multiplicity = labels.iter().filter(|&&i| i == j).count();
            prop_assert_eq!(colinear_hom(&m, &target).unwrap().len(), multiplicity);
            prop_assert_eq!(colinear_hom(&target, &m).unwrap().len(), multiplicity);
        }
        let regular = Comodule::regular(&coring, Side::Left);
        prop_assert_eq!(cotensor(&m, &regular).unwrap().dim(), m.dim());
    }

    #[test]
    fn grouplike_sums_over_prime_fields_split(n in 1usize..4, raw in proptest::collection::vec(0usize..4, 1..4)) {
        fn verdict<S: Scalar>(n: usize, labels: &[usize]) -> bool {
            let coring = Coring::from_coalgebra(&Coalgebra::<S>::grouplike_basis(n));
            let m = grouplike_sum(&coring, labels);
            match is_simple(&m) {
                Simplicity::Simple => labels.len() == 1,
                Simplicity::NotSimple(_) => labels.len() > 1,
                _ => false,
            }
        }
        let labels: Vec<usize> = raw.iter().map(|i| i % n).collect();
        prop_assert!(verdict::<F2>(n, &labels));
        prop_assert!(verdict::<F3>(n, &labels));
    }
}

#[test]
fn regular_comodule_of_cyclic_hopf_coring_is_relatively_injective() {
    for n in 1..4 {
        let dk = hopf_entwining(&HopfAlgebra::<Q>::cyclic_group(n));
        let coring = dk.entwining.coring().unwrap();
        assert!(coring.check().passed(), "n = {n}");
        let c = Comodule::regular(&coring, Side::Right);
        assert!(c.check().passed());
        assert!(is_relatively_injective(&c).is_some(), "n = {n}");
    }
}
