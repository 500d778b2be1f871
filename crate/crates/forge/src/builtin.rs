//! The shipped fixture library.

use std::collections::BTreeMap;

use forge_core::algebra::Algebra;
use forge_core::coalgebra::Coalgebra;
use forge_core::coring::{Coring, CoringMorphism};
use forge_core::entwining::{DoiKoppinen, HopfAlgebra};
use forge_core::fixtures;
use forge_core::matrix::tensor_vec;
use forge_core::{Matrix, Scalar, Q};

use crate::doc::{ComoduleSpec, CoringSpec, Document, GrouplikeSpec, SideSpec};
use crate::error::InputError;
use crate::export::*;

pub const NAMES: [&str; 7] = [
    "trivial-A2",
    "sweedler-z2",
    "hopf-z2",
    "hopf-z3",
    "twisted-z2",
    "sweedler-h4",
    "matrix-coalgebra-2",
];

/// The shipped JSON text of a builtin fixture.
pub fn shipped(name: &str) -> Option<&'static str> {
    Some(match name {
        "trivial-A2" => include_str!("../fixtures/trivial-A2.json"),
        "sweedler-z2" => include_str!("../fixtures/sweedler-z2.json"),
        "hopf-z2" => include_str!("../fixtures/hopf-z2.json"),
        "hopf-z3" => include_str!("../fixtures/hopf-z3.json"),
        "twisted-z2" => include_str!("../fixtures/twisted-z2.json"),
        "sweedler-h4" => include_str!("../fixtures/sweedler-h4.json"),
        "matrix-coalgebra-2" => include_str!("../fixtures/matrix-coalgebra-2.json"),
        _ => return None,
    })
}

pub fn builtin_fixture(name: &str) -> Result<Document, InputError> {
    let text = shipped(name).ok_or_else(|| InputError::UnknownFixture(name.into()))?;
    Document::parse(text)
}

fn empty() -> Document {
    Document {
        field: field_spec(Q::field()),
        algebras: BTreeMap::new(),
        coalgebras: BTreeMap::new(),
        entwinings: BTreeMap::new(),
        corings: BTreeMap::new(),
        comodules: BTreeMap::new(),
        morphisms: BTreeMap::new(),
        grouplikes: BTreeMap::new(),
        checks: Vec::new(),
    }
}

fn regular(coring: &str, side: SideSpec) -> ComoduleSpec {
    ComoduleSpec::Regular { coring: coring.into(), side }
}

/// An entwining fixture: `A`, `C`, `ψ`, the coring `AC`, the group-like
/// `e`, the comodule `M = A` it defines, the regular comodules and the
/// counit morphism onto the trivial coring `A`. Without `right_regular`
/// the right regular comodule is left out.
fn entwined(dk: &DoiKoppinen<Q>, right_regular: bool) -> Document {
    let e = &dk.entwining;
    let mut d = empty();
    d.algebras.insert("A".into(), algebra_spec(&e.algebra));
    d.coalgebras.insert("C".into(), coalgebra_spec(&e.coalgebra));
    d.entwinings.insert("psi".into(), entwining_spec("A", "C", e));
    d.corings.insert("AC".into(), CoringSpec::Entwining { entwining: "psi".into() });
    d.corings.insert("A".into(), CoringSpec::Trivial { algebra: "A".into() });
    d.grouplikes.insert(
        "e".into(),
        GrouplikeSpec { coalgebra: Some("C".into()), coring: None, element: raw_vector(&dk.grouplike) },
    );
    d.comodules.insert(
        "M".into(),
        ComoduleSpec::Grouplike { coring: "AC".into(), grouplike: "e".into(), side: SideSpec::Right },
    );
    if right_regular {
        d.comodules.insert("AC-right".into(), regular("AC", SideSpec::Right));
    }
    d.comodules.insert("AC-left".into(), regular("AC", SideSpec::Left));
    let coring = e.coring().expect("entwining fixtures satisfy the bow-tie axioms");
    d.morphisms.insert("counit".into(), morphism_spec("AC", "A", &CoringMorphism::counit_morphism(&coring)));
    d
}

/// Builds a fixture from the core constructions.
pub fn construct(name: &str) -> Result<Document, InputError> {
    let doc = match name {
        "trivial-A2" => {
            let a = Algebra::<Q>::truncated_polynomial(2);
            let mut d = empty();
            d.algebras.insert("A".into(), algebra_spec(&a));
            d.corings.insert("A".into(), CoringSpec::Trivial { algebra: "A".into() });
            d.comodules.insert("M".into(), regular("A", SideSpec::Right));
            d.comodules.insert("A-left".into(), regular("A", SideSpec::Left));
            let id = CoringMorphism::identity(&Coring::trivial(&a));
            d.morphisms.insert("identity".into(), morphism_spec("A", "A", &id));
            d
        }
        "sweedler-z2" => {
            let k = Algebra::<Q>::ground();
            let a = Algebra::<Q>::cyclic_group(2);
            let f = Matrix::from_columns(2, &[a.unit.clone()]);
            let coring = Coring::sweedler(&k, &a, &f).expect("unit map");
            let one = tensor_vec(&a.unit, &a.unit);
            debug_assert!(coring.is_grouplike(&one));
            let mut d = empty();
            d.algebras.insert("k".into(), algebra_spec(&k));
            d.algebras.insert("A".into(), algebra_spec(&a));
            d.corings.insert("AA".into(), CoringSpec::Sweedler { base: "k".into(), algebra: "A".into(), map: raw_matrix(&f) });
            d.corings.insert("A".into(), CoringSpec::Trivial { algebra: "A".into() });
            d.grouplikes.insert("one".into(), GrouplikeSpec { coalgebra: None, coring: Some("AA".into()), element: raw_vector(&one) });
            d.comodules.insert(
                "M".into(),
                ComoduleSpec::Grouplike { coring: "AA".into(), grouplike: "one".into(), side: SideSpec::Right },
            );
            d.comodules.insert("AA-right".into(), regular("AA", SideSpec::Right));
            d.comodules.insert("AA-left".into(), regular("AA", SideSpec::Left));
            d.morphisms.insert("counit".into(), morphism_spec("AA", "A", &CoringMorphism::counit_morphism(&coring)));
            d
        }
        "hopf-z2" => entwined(&fixtures::hopf_entwining(&HopfAlgebra::cyclic_group(2)), true),
        "hopf-z3" => entwined(&fixtures::hopf_entwining(&HopfAlgebra::cyclic_group(3)), true),
        "twisted-z2" => entwined(&fixtures::twisted_z2(), true),
        "sweedler-h4" => entwined(&fixtures::hopf_entwining(&fixtures::sweedler_h4()), false),
        "matrix-coalgebra-2" => {
            let c = Coalgebra::<Q>::matrix_coalgebra(2);
            let v = fixtures::matrix_comodule::<Q>(2);
            let mut d = empty();
            d.algebras.insert("k".into(), algebra_spec(&Algebra::<Q>::ground()));
            d.coalgebras.insert("C".into(), coalgebra_spec(&c));
            d.corings.insert("C".into(), CoringSpec::Coalgebra { coalgebra: "C".into() });
            d.comodules.insert("V".into(), general_comodule_spec("C", &v));
            d.comodules.insert("C-right".into(), regular("C", SideSpec::Right));
            d.comodules.insert("C-left".into(), regular("C", SideSpec::Left));
            d
        }
        _ => return Err(InputError::UnknownFixture(name.into())),
    };
    Ok(doc)
}
