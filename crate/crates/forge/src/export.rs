//! Core structures to wire-format specs.

use forge_core::algebra::{Algebra, Side};
use forge_core::coalgebra::Coalgebra;
use forge_core::comodule::Comodule;
use forge_core::coring::{Coring, CoringMorphism};
use forge_core::entwining::Entwining;
use forge_core::{Field, Matrix, Scalar};

use crate::doc::{
    AlgebraSpec, CoalgebraSpec, ComoduleSpec, CoringSpec, EntwiningSpec, FieldSpec, MorphismSpec, RawMatrix,
    RawVector, SideSpec,
};

pub fn field_spec(f: Field) -> FieldSpec {
    match f {
        Field::Rationals => FieldSpec::Q,
        Field::PrimeField(p) => FieldSpec::Fp { p },
    }
}

pub fn raw_vector<S: Scalar>(v: &[S]) -> RawVector {
    v.iter().map(Scalar::to_wire).collect()
}

pub fn raw_matrix<S: Scalar>(m: &Matrix<S>) -> RawMatrix {
    (0..m.rows()).map(|i| raw_vector(m.row(i))).collect()
}

pub fn side_spec(s: Side) -> SideSpec {
    match s {
        Side::Left => SideSpec::Left,
        Side::Right => SideSpec::Right,
    }
}

pub fn algebra_spec<S: Scalar>(a: &Algebra<S>) -> AlgebraSpec {
    AlgebraSpec { dim: a.dim, mul: raw_matrix(&a.mul), unit: raw_vector(&a.unit) }
}

pub fn coalgebra_spec<S: Scalar>(c: &Coalgebra<S>) -> CoalgebraSpec {
    CoalgebraSpec { dim: c.dim, comul: raw_matrix(&c.comul), counit: raw_vector(&c.counit) }
}

pub fn entwining_spec<S: Scalar>(algebra: &str, coalgebra: &str, e: &Entwining<S>) -> EntwiningSpec {
    EntwiningSpec { algebra: algebra.into(), coalgebra: coalgebra.into(), psi: raw_matrix(&e.psi) }
}

pub fn general_coring_spec<S: Scalar>(algebra: &str, c: &Coring<S>) -> CoringSpec {
    CoringSpec::General {
        algebra: algebra.into(),
        dim: c.dim(),
        left: raw_matrix(&c.carrier.left),
        right: raw_matrix(&c.carrier.right),
        comul: raw_matrix(&c.comul_lifted()),
        counit: raw_matrix(&c.counit),
    }
}

pub fn general_comodule_spec<S: Scalar>(coring: &str, m: &Comodule<S>) -> ComoduleSpec {
    ComoduleSpec::General {
        coring: coring.into(),
        side: side_spec(m.side),
        dim: m.dim(),
        action: raw_matrix(&m.module.action),
        coaction: raw_matrix(&m.lifted()),
    }
}

pub fn morphism_spec<S: Scalar>(source: &str, target: &str, f: &CoringMorphism<S>) -> MorphismSpec {
    MorphismSpec { source: source.into(), target: target.into(), alpha: raw_matrix(&f.alpha), gamma: raw_matrix(&f.gamma) }
}
