//! Typed structures built from a [`Document`], with dimension validation.

use std::collections::BTreeMap;

use forge_core::algebra::{AModule, Algebra, Bimodule, Side};
use forge_core::coalgebra::Coalgebra;
use forge_core::comodule::Comodule;
use forge_core::coring::{Coring, CoringMorphism};
use forge_core::entwining::Entwining;
use forge_core::{Matrix, Scalar};

use crate::doc::{ComoduleSpec, CoringSpec, Document, RawMatrix, RawVector, SideSpec};
use crate::error::InputError;

/// Where a declared group-like lives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Owner {
    Coalgebra(String),
    Coring(String),
}

#[derive(Clone, Debug)]
pub struct Grouplike<S: Scalar> {
    pub owner: Owner,
    pub element: Vec<S>,
}

#[derive(Clone, Debug)]
pub struct NamedComodule<S: Scalar> {
    pub coring: String,
    pub comodule: Comodule<S>,
}

#[derive(Clone, Debug)]
pub struct NamedMorphism<S: Scalar> {
    pub source: String,
    pub target: String,
    pub morphism: CoringMorphism<S>,
}

#[derive(Clone, Debug)]
pub struct Model<S: Scalar> {
    pub algebras: BTreeMap<String, Algebra<S>>,
    pub coalgebras: BTreeMap<String, Coalgebra<S>>,
    pub entwinings: BTreeMap<String, Entwining<S>>,
    pub corings: BTreeMap<String, Coring<S>>,
    /// Entwining behind each coring of that kind.
    pub coring_entwining: BTreeMap<String, String>,
    pub comodules: BTreeMap<String, NamedComodule<S>>,
    pub morphisms: BTreeMap<String, NamedMorphism<S>>,
    pub grouplikes: BTreeMap<String, Grouplike<S>>,
    pub checks: Vec<String>,
}

fn scalar<S: Scalar>(path: &str, s: &str) -> Result<S, InputError> {
    S::parse_wire(s).map_err(|e| InputError::invalid(path, e))
}

pub fn vector<S: Scalar>(path: &str, v: &RawVector, len: usize) -> Result<Vec<S>, InputError> {
    if v.len() != len {
        return Err(InputError::invalid(path, format!("expected {len} entries, got {}", v.len())));
    }
    v.iter().enumerate().map(|(i, x)| scalar(&format!("{path}[{i}]"), x)).collect()
}

pub fn matrix<S: Scalar>(path: &str, m: &RawMatrix, rows: usize, cols: usize) -> Result<Matrix<S>, InputError> {
    if m.len() != rows {
        return Err(InputError::invalid(path, format!("expected {rows}x{cols}, got {} rows", m.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in m.iter().enumerate() {
        if row.len() != cols {
            return Err(InputError::invalid(
                format!("{path}[{i}]"),
                format!("expected {cols} entries, got {}", row.len()),
            ));
        }
        for (j, x) in row.iter().enumerate() {
            data.push(scalar(&format!("{path}[{i}][{j}]"), x)?);
        }
    }
    Ok(Matrix::from_flat(rows, cols, data))
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, path: &str, name: &str) -> Result<&'a T, InputError> {
    map.get(name).ok_or_else(|| InputError::UnknownName { path: path.into(), name: name.into() })
}

fn side(s: SideSpec) -> Side {
    match s {
        SideSpec::Left => Side::Left,
        SideSpec::Right => Side::Right,
    }
}

fn core_err(path: &str) -> impl Fn(forge_core::ForgeError) -> InputError + '_ {
    move |e| InputError::invalid(path, e.to_string())
}

impl<S: Scalar> Model<S> {
    pub fn build(doc: &Document) -> Result<Self, InputError> {
        let mut algebras = BTreeMap::new();
        for (name, a) in &doc.algebras {
            let p = format!("algebras.{name}");
            let mul = matrix(&format!("{p}.mul"), &a.mul, a.dim, a.dim * a.dim)?;
            let unit = vector(&format!("{p}.unit"), &a.unit, a.dim)?;
            algebras.insert(name.clone(), Algebra::new(mul, unit).map_err(core_err(&p))?);
        }
        let mut coalgebras = BTreeMap::new();
        for (name, c) in &doc.coalgebras {
            let p = format!("coalgebras.{name}");
            let comul = matrix(&format!("{p}.comul"), &c.comul, c.dim * c.dim, c.dim)?;
            let counit = vector(&format!("{p}.counit"), &c.counit, c.dim)?;
            coalgebras.insert(name.clone(), Coalgebra::new(comul, counit).map_err(core_err(&p))?);
        }
        let mut entwinings = BTreeMap::new();
        for (name, e) in &doc.entwinings {
            let p = format!("entwinings.{name}");
            let a = lookup(&algebras, &format!("{p}.algebra"), &e.algebra)?.clone();
            let c = lookup(&coalgebras, &format!("{p}.coalgebra"), &e.coalgebra)?.clone();
            let psi = matrix(&format!("{p}.psi"), &e.psi, a.dim * c.dim, c.dim * a.dim)?;
            entwinings.insert(name.clone(), Entwining::new(a, c, psi).map_err(core_err(&p))?.with_inverse());
        }
        let mut corings = BTreeMap::new();
        let mut coring_entwining = BTreeMap::new();
        for (name, spec) in &doc.corings {
            let p = format!("corings.{name}");
            let coring = match spec {
                CoringSpec::Trivial { algebra } => {
                    Coring::trivial(lookup(&algebras, &format!("{p}.algebra"), algebra)?)
                }
                CoringSpec::Coalgebra { coalgebra } => {
                    Coring::from_coalgebra(lookup(&coalgebras, &format!("{p}.coalgebra"), coalgebra)?)
                }
                CoringSpec::Entwining { entwining } => {
                    coring_entwining.insert(name.clone(), entwining.clone());
                    lookup(&entwinings, &format!("{p}.entwining"), entwining)?.coring_unchecked()
                }
                CoringSpec::Sweedler { base, algebra, map } => {
                    let b = lookup(&algebras, &format!("{p}.base"), base)?;
                    let a = lookup(&algebras, &format!("{p}.algebra"), algebra)?;
                    let f = matrix(&format!("{p}.map"), map, a.dim, b.dim)?;
                    Coring::sweedler(b, a, &f).map_err(core_err(&p))?
                }
                CoringSpec::General { algebra, dim, left, right, comul, counit } => {
                    let a = lookup(&algebras, &format!("{p}.algebra"), algebra)?;
                    let (n, d) = (a.dim, *dim);
                    let left = matrix(&format!("{p}.left"), left, d, n * d)?;
                    let right = matrix(&format!("{p}.right"), right, d, d * n)?;
                    let comul = matrix(&format!("{p}.comul"), comul, d * d, d)?;
                    let counit = matrix(&format!("{p}.counit"), counit, n, d)?;
                    let carrier = Bimodule::new(a.clone(), left, right).map_err(core_err(&p))?;
                    Coring::from_lifted(carrier, &comul, counit).map_err(core_err(&p))?
                }
            };
            corings.insert(name.clone(), coring);
        }
        let mut grouplikes = BTreeMap::new();
        for (name, g) in &doc.grouplikes {
            let p = format!("grouplikes.{name}");
            let (owner, len) = match (&g.coalgebra, &g.coring) {
                (Some(c), None) => {
                    (Owner::Coalgebra(c.clone()), lookup(&coalgebras, &format!("{p}.coalgebra"), c)?.dim)
                }
                (None, Some(c)) => (Owner::Coring(c.clone()), lookup(&corings, &format!("{p}.coring"), c)?.dim()),
                _ => return Err(InputError::invalid(&p, "exactly one of coalgebra or coring must be given")),
            };
            let element = vector(&format!("{p}.element"), &g.element, len)?;
            grouplikes.insert(name.clone(), Grouplike { owner, element });
        }
        let mut comodules = BTreeMap::new();
        for (name, spec) in &doc.comodules {
            let p = format!("comodules.{name}");
            let coring_name = spec.coring().to_string();
            let coring = lookup(&corings, &format!("{p}.coring"), &coring_name)?;
            let comodule = match spec {
                ComoduleSpec::Regular { side: s, .. } => Comodule::regular(coring, side(*s)),
                ComoduleSpec::Zero { side: s, .. } => Comodule::zero(coring, side(*s)),
                ComoduleSpec::Grouplike { grouplike, side: s, .. } => {
                    let gp = format!("{p}.grouplike");
                    let g = lookup(&grouplikes, &gp, grouplike)?;
                    let element = match &g.owner {
                        Owner::Coring(c) if *c == coring_name => g.element.clone(),
                        Owner::Coalgebra(c) => match coring_entwining.get(&coring_name) {
                            Some(e) if entwinings[e].coalgebra == coalgebras[c] => {
                                entwinings[e].coring_element(&g.element)
                            }
                            _ if doc.corings[&coring_name] == (CoringSpec::Coalgebra { coalgebra: c.clone() }) => {
                                g.element.clone()
                            }
                            _ => return Err(InputError::invalid(gp, "group-like does not belong to this coring")),
                        },
                        Owner::Coring(_) => {
                            return Err(InputError::invalid(gp, "group-like does not belong to this coring"))
                        }
                    };
                    Comodule::from_grouplike(coring, &element, side(*s)).map_err(core_err(&p))?
                }
                ComoduleSpec::General { side: s, dim, action, coaction, .. } => {
                    let (n, c, d) = (coring.algebra.dim, coring.dim(), *dim);
                    let action = matrix(&format!("{p}.action"), action, d, d * n)?;
                    let coaction = matrix(&format!("{p}.coaction"), coaction, d * c, d)?;
                    let module = AModule::new(coring.algebra.clone(), side(*s), action).map_err(core_err(&p))?;
                    Comodule::from_lifted(coring, module, &coaction).map_err(core_err(&p))?
                }
            };
            comodules.insert(name.clone(), NamedComodule { coring: coring_name, comodule });
        }
        let mut morphisms = BTreeMap::new();
        for (name, m) in &doc.morphisms {
            let p = format!("morphisms.{name}");
            let source = lookup(&corings, &format!("{p}.source"), &m.source)?.clone();
            let target = lookup(&corings, &format!("{p}.target"), &m.target)?.clone();
            let alpha = matrix(&format!("{p}.alpha"), &m.alpha, target.algebra.dim, source.algebra.dim)?;
            let gamma = matrix(&format!("{p}.gamma"), &m.gamma, target.dim(), source.dim())?;
            morphisms.insert(
                name.clone(),
                NamedMorphism {
                    source: m.source.clone(),
                    target: m.target.clone(),
                    morphism: CoringMorphism { source, target, alpha, gamma },
                },
            );
        }
        Ok(Model {
            algebras,
            coalgebras,
            entwinings,
            corings,
            coring_entwining,
            comodules,
            morphisms,
            grouplikes,
            checks: doc.checks.clone(),
        })
    }

    /// Group-likes of the coalgebra underlying an entwining.
    pub fn entwining_grouplikes(&self, entwining: &str) -> Vec<(&str, &[S])> {
        let e = &self.entwinings[entwining];
        self.grouplikes
            .iter()
            .filter_map(|(name, g)| match &g.owner {
                Owner::Coalgebra(c) if self.coalgebras[c] == e.coalgebra => Some((name.as_str(), g.element.as_slice())),
                _ => None,
            })
            .collect()
    }
}
