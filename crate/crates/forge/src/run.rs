//! Command pipelines over a typed [`Model`].

use forge_core::algebra::Side;
use forge_core::comodule::{colinear_hom, relative_injectivity_system, Comodule};
use forge_core::coring::{Coring, CoringMorphism};
use forge_core::descent::{
    associated_modules, duality_iso, faithful_flatness_verdict, fgp_associated_check, gamma_tilde_split,
    induce_principal, split_extension_check, theta_map, theta_naturality, FgpVerdict, InducedPrincipality,
    InductionDatum,
};
use forge_core::galois::{split_action_system, strong_connection, GaloisDatum, GaloisVerdict, Principality};
use forge_core::linalg::rank;
use forge_core::simple::{is_simple, Simplicity};
use forge_core::{Fp, Matrix, Scalar, Q};
use rayon::prelude::*;

use crate::doc::{Document, FieldSpec};
use crate::error::InputError;
use crate::model::{Model, NamedComodule, Owner};
use crate::report::{Certificate, Record, Report, Status};

pub const COMMANDS: [&str; 9] =
    ["check", "galois", "principal", "connection", "cointegral", "induce", "duality", "injectivity", "report"];

/// Order of the pipelines run by `report`.
pub const REPORT_ORDER: [&str; 8] =
    ["check", "cointegral", "galois", "principal", "connection", "induce", "duality", "injectivity"];

type Job<'a> = Box<dyn Fn() -> Vec<Record> + Send + Sync + 'a>;

macro_rules! dispatch_prime {
    ($p:expr, $f:ident, $($arg:expr),*) => {
        match $p {
            2 => $f::<Fp<2>>($($arg),*),
            3 => $f::<Fp<3>>($($arg),*),
            5 => $f::<Fp<5>>($($arg),*),
            7 => $f::<Fp<7>>($($arg),*),
            11 => $f::<Fp<11>>($($arg),*),
            13 => $f::<Fp<13>>($($arg),*),
            p => Err(InputError::UnsupportedField(format!(
                "F{p}: supported primes are 2, 3, 5, 7, 11 and 13"
            ))),
        }
    };
}

/// Validates the document against its field without running anything.
pub fn validate(doc: &Document) -> Result<(), InputError> {
    fn go<S: Scalar>(doc: &Document) -> Result<(), InputError> {
        Model::<S>::build(doc).map(|_| ())
    }
    match doc.field {
        FieldSpec::Q => go::<Q>(doc),
        FieldSpec::Fp { p } => dispatch_prime!(p, go, doc),
    }
}

pub fn run_document(doc: &Document, source: &str, command: &str, parallel: bool) -> Result<Report, InputError> {
    if !COMMANDS.contains(&command) {
        return Err(InputError::UnknownCommand(command.into()));
    }
    match doc.field {
        FieldSpec::Q => run::<Q>(doc, source, command, parallel),
        FieldSpec::Fp { p } => dispatch_prime!(p, run, doc, source, command, parallel),
    }
}

pub fn run<S: Scalar>(doc: &Document, source: &str, command: &str, parallel: bool) -> Result<Report, InputError> {
    let model = Model::<S>::build(doc)?;
    let commands: Vec<&str> = if command == "report" {
        if model.checks.is_empty() {
            REPORT_ORDER.to_vec()
        } else {
            for c in &model.checks {
                if !REPORT_ORDER.contains(&c.as_str()) {
                    return Err(InputError::invalid("checks", format!("unknown check {c:?}")));
                }
            }
            REPORT_ORDER.iter().copied().filter(|c| model.checks.iter().any(|x| x == c)).collect()
        }
    } else {
        vec![command]
    };
    let jobs: Vec<Job<'_>> = commands.iter().flat_map(|c| jobs_for(&model, c)).collect();
    let records: Vec<Record> = if parallel {
        jobs.par_iter().map(|j| j()).collect::<Vec<_>>().into_iter().flatten().collect()
    } else {
        jobs.iter().flat_map(|j| j()).collect()
    };
    Ok(Report { source: source.into(), field: S::field().to_string(), records })
}

fn jobs_for<'a, S: Scalar>(m: &'a Model<S>, command: &str) -> Vec<Job<'a>> {
    match command {
        "check" => check_jobs(m),
        "cointegral" => cointegral_jobs(m),
        "galois" => right_comodules(m).map(|(n, c)| job(move || vec![galois_record(n, c)])).collect(),
        "principal" => right_comodules(m).map(|(n, c)| job(move || vec![principal_record(n, c)])).collect(),
        "connection" => connection_jobs(m),
        "induce" => induce_jobs(m),
        "duality" => duality_jobs(m),
        "injectivity" => right_comodules(m).map(|(n, c)| job(move || injectivity_records(m, n, c))).collect(),
        _ => unreachable!("validated command"),
    }
}

fn job<'a>(f: impl Fn() -> Vec<Record> + Send + Sync + 'a) -> Job<'a> {
    Box::new(f)
}

fn right_comodules<S: Scalar>(m: &Model<S>) -> impl Iterator<Item = (&str, &NamedComodule<S>)> {
    m.comodules.iter().filter(|(_, c)| c.comodule.side == Side::Right).map(|(n, c)| (n.as_str(), c))
}

fn check_jobs<'a, S: Scalar>(m: &'a Model<S>) -> Vec<Job<'a>> {
    let mut jobs: Vec<Job<'a>> = Vec::new();
    for (n, a) in &m.algebras {
        jobs.push(job(move || {
            let mut r = Record::new("check", &format!("algebra {n}"), "associativity and unit");
            r.verdict("", &a.check());
            vec![r]
        }));
    }
    for (n, c) in &m.coalgebras {
        jobs.push(job(move || {
            let mut r = Record::new("check", &format!("coalgebra {n}"), "coassociativity and counit");
            r.verdict("", &c.check());
            vec![r]
        }));
    }
    for (n, e) in &m.entwinings {
        jobs.push(job(move || {
            let mut r = Record::new("check", &format!("entwining {n}"), "bow-tie axioms");
            r.verdict("", &e.check_bowtie());
            vec![r]
        }));
    }
    for (n, c) in &m.corings {
        jobs.push(job(move || {
            let mut r = Record::new("check", &format!("coring {n}"), "bimodule, coassociativity and counit");
            r.verdict("", &c.check());
            vec![r]
        }));
    }
    for (n, c) in &m.comodules {
        jobs.push(job(move || {
            let mut r = Record::new("check", &format!("comodule {n}"), "module, coassociativity and counit");
            r.verdict("", &c.comodule.check());
            vec![r]
        }));
    }
    for (n, f) in &m.morphisms {
        jobs.push(job(move || {
            let mut r = Record::new("check", &format!("morphism {n}"), "algebra map and coring map");
            r.verdict("", &f.morphism.check());
            vec![r]
        }));
    }
    for (n, g) in &m.grouplikes {
        jobs.push(job(move || {
            let mut r = Record::new("check", &format!("grouplike {n}"), "coproduct and counit");
            let ok = match &g.owner {
                Owner::Coalgebra(c) => m.coalgebras[c].verify_grouplike(&g.element),
                Owner::Coring(c) => m.corings[c].is_grouplike(&g.element),
            };
            r.item("group-like", ok);
            vec![r]
        }));
    }
    jobs
}

fn cointegral_jobs<'a, S: Scalar>(m: &'a Model<S>) -> Vec<Job<'a>> {
    m.coalgebras
        .iter()
        .map(|(n, c)| {
            job(move || {
                let mut r = Record::new("cointegral", &format!("coalgebra {n}"), "retraction of the coproduct, bicolinear");
                let sys = c.cointegral_system();
                let (eqs, unknowns) = (sys.equations(), sys.unknowns());
                match r.feasibility("cointegral equations", eqs, unknowns, sys.solve()) {
                    Some(x) => {
                        let delta = forge_core::coalgebra::Cointegral { delta: Matrix::from_flat(1, unknowns, x) };
                        r.verdict("", &delta.verify(c));
                        r.witness("delta", &delta.delta);
                    }
                    None => {
                        r.absent().note("the coalgebra admits no cointegral");
                    }
                }
                vec![r]
            })
        })
        .collect()
}

const GALOIS_ROUTE: &str = "canonical map on the dual tensor product";

fn galois_datum<S: Scalar>(command: &str, name: &str, c: &NamedComodule<S>) -> Result<GaloisDatum<S>, Record> {
    GaloisDatum::new(&c.comodule)
        .map_err(|e| Record::not_applicable(command, &format!("comodule {name}"), GALOIS_ROUTE, e.to_string()))
}

fn galois_record<S: Scalar>(name: &str, c: &NamedComodule<S>) -> Record {
    let g = match galois_datum("galois", name, c) {
        Ok(g) => g,
        Err(r) => return r,
    };
    let mut r = Record::new("galois", &format!("comodule {name}"), GALOIS_ROUTE);
    r.verdict("datum", &g.check());
    r.note(format!(
        "dim M = {}, dim S = {}, dim M*⊗_S M = {}, dim C = {}",
        c.comodule.dim(),
        g.endo.dim(),
        g.tensor.dim(),
        c.comodule.coring.dim()
    ));
    match g.is_galois() {
        GaloisVerdict::Galois { inverse } => {
            r.item("can bijective", true);
            r.item("inverse verified", g.can.mul(&inverse).is_identity() && inverse.mul(&g.can).is_identity());
            r.witness("can", &g.can).witness("can inverse", &inverse);
        }
        GaloisVerdict::NotGalois { rank, kernel, cokernel } => {
            r.item("can bijective", false);
            r.certificate(Certificate {
                system: "can".into(),
                rows: g.can.rows(),
                cols: g.can.cols(),
                rank,
                augmented_rank: None,
            });
            r.witness("can", &g.can);
            if let Some(k) = kernel {
                let killed = forge_core::matrix::vec_is_zero(&g.can.apply(&k));
                r.item("kernel witness nonzero and killed by can", killed && !forge_core::matrix::vec_is_zero(&k));
                r.vector_witness("kernel", &k);
            }
            if let Some(f) = cokernel {
                r.vector_witness("cokernel functional", &f);
            }
        }
    }
    let simplicity = is_simple(&c.comodule);
    r.note(format!("simplicity: {}", simplicity.label()));
    match &simplicity {
        Simplicity::Simple => {
            if let Ok(sg) = g.simple_galois_check(&simplicity) {
                r.item("simple: surjective can is bijective", sg.consistent());
            }
        }
        Simplicity::NotSimple(u) => {
            r.subspace_witness("proper subcomodule", u);
        }
        Simplicity::Unsupported(why) => {
            r.note(format!("simplicity undecided: {why}"));
        }
    }
    r
}

/// Both principality searches, with certificates for infeasible ones.
fn principality<S: Scalar>(r: &mut Record, g: &GaloisDatum<S>) -> Principality<S> {
    let (d, n) = (g.natural.dim, g.natural.algebra.dim);
    let sys = split_action_system(&g.natural);
    let splitting = r
        .feasibility("S-linear splitting of the action", sys.equations(), sys.unknowns(), sys.solve())
        .map(|x| Matrix::from_flat(n * d, d, x));
    let sys = g.colinear_section_system();
    let rows = g.dual.comodule.dim() * g.comodule.dim();
    let colinear_section = r
        .feasibility("colinear section of the canonical map", sys.equations(), sys.unknowns(), sys.solve())
        .map(|x| Matrix::from_flat(rows, g.coring().dim(), x));
    Principality { splitting, colinear_section }
}

fn principal_record<S: Scalar>(name: &str, c: &NamedComodule<S>) -> Record {
    const ROUTE: &str = "projective over S, cross-checked by a colinear section of the canonical map";
    let g = match galois_datum("principal", name, c) {
        Ok(g) => g,
        Err(r) => return r,
    };
    if !g.is_galois().is_galois() {
        return Record::not_applicable("principal", &format!("comodule {name}"), ROUTE, "comodule is not Galois");
    }
    let mut r = Record::new("principal", &format!("comodule {name}"), ROUTE);
    let p = principality(&mut r, &g);
    r.verdict("witness", &p.verify(&g));
    r.item("routes agree", p.agree());
    r.note(format!(
        "projective over S: {}; colinear section: {}",
        p.splitting.is_some(),
        p.colinear_section.is_some()
    ));
    if let Some(s) = &p.splitting {
        r.witness("splitting", s);
    }
    if let Some(t) = &p.colinear_section {
        r.witness("colinear section", t);
    }
    if p.agree() && !p.principal() {
        r.absent().note("the comodule is Galois but not principal");
    }
    r
}

fn connection_jobs<'a, S: Scalar>(m: &'a Model<S>) -> Vec<Job<'a>> {
    const ROUTE: &str = "strong connection from a cointegral";
    let mut jobs: Vec<Job<'a>> = Vec::new();
    for (en, e) in &m.entwinings {
        for (gn, g) in m.entwining_grouplikes(en) {
            jobs.push(job(move || {
                let subject = format!("entwining {en} with grouplike {gn}");
                let Some(delta) = e.coalgebra.find_cointegral() else {
                    return vec![Record::not_applicable("connection", &subject, ROUTE, "the coalgebra has no cointegral")];
                };
                let sc = match strong_connection(e, g, &delta) {
                    Ok(sc) => sc,
                    Err(err) => return vec![Record::not_applicable("connection", &subject, ROUTE, err.to_string())],
                };
                let mut r = Record::new("connection", &subject, ROUTE);
                r.verdict("", &sc.verify());
                match sc.principal_extension_conditions() {
                    Ok(v) => {
                        r.verdict("principal extension", &v);
                    }
                    Err(err) => {
                        r.item("principal extension", false).note(err.to_string());
                    }
                }
                r.witness("delta", &sc.delta.delta)
                    .witness("kappa", &sc.kappa)
                    .witness("sigma", &sc.sigma)
                    .subspace_witness("coinvariants", &sc.coinvariants);
                vec![r]
            }));
        }
    }
    jobs
}

fn induce_jobs<'a, S: Scalar>(m: &'a Model<S>) -> Vec<Job<'a>> {
    let mut jobs: Vec<Job<'a>> = Vec::new();
    for (fname, f) in &m.morphisms {
        for (cname, c) in m.comodules.iter().filter(|(_, c)| c.coring == f.source && c.comodule.side == Side::Right) {
            jobs.push(job(move || vec![induce_record(m, fname, &f.morphism, cname, c)]));
        }
    }
    jobs
}

fn induce_record<S: Scalar>(
    m: &Model<S>,
    fname: &str,
    f: &CoringMorphism<S>,
    cname: &str,
    c: &NamedComodule<S>,
) -> Record {
    const ROUTE: &str = "induction along a coring morphism with a split induced map";
    let subject = format!("comodule {cname} along {fname}");
    let fv = f.check();
    if !fv.passed() {
        let mut r = Record::new("induce", &subject, ROUTE);
        r.verdict("morphism", &fv);
        return r;
    }
    let d = match InductionDatum::new(&c.comodule, f) {
        Ok(d) => d,
        Err(e) => return Record::not_applicable("induce", &subject, ROUTE, e.to_string()),
    };
    if !d.source.is_galois().is_galois() {
        return Record::not_applicable("induce", &subject, ROUTE, "source comodule is not Galois");
    }
    let mut r = Record::new("induce", &subject, ROUTE);
    r.verdict("", &d.check());
    let target = &f.target;
    let mut family: Vec<(String, Comodule<S>)> = vec![
        ("target coring".into(), Comodule::regular(target, Side::Right)),
        ("induced".into(), d.induced.clone()),
        ("zero".into(), Comodule::zero(target, Side::Right)),
    ];
    for (n, other) in &m.comodules {
        if other.comodule.coring == *target && other.comodule.side == Side::Right {
            family.push((format!("comodule {n}"), other.comodule.clone()));
        }
    }
    let mut thetas = Vec::new();
    for (label, n) in &family {
        match theta_map(&d, n) {
            Ok(t) => {
                r.item(&format!("theta bijective on {label}"), t.is_bijective());
                thetas.push(Some(t));
            }
            Err(e) => {
                r.item(&format!("theta on {label}"), false).note(e.to_string());
                thetas.push(None);
            }
        }
    }
    // Naturality along a basis of colinear maps between members of the family.
    for ((la, a), ta) in family.iter().zip(&thetas) {
        for ((lb, b), tb) in family.iter().zip(&thetas) {
            let (Some(ta), Some(tb)) = (ta, tb) else { continue };
            let Ok(maps) = colinear_hom(a, b) else { continue };
            let all = maps.iter().all(|g| theta_naturality(&d, ta, tb, g).unwrap_or(false));
            if !maps.is_empty() {
                r.item(&format!("theta natural from {la} to {lb}"), all);
            }
        }
    }
    r.note("naturality is verified on the fixture family: target coring, induced comodule, zero, declared comodules");
    match gamma_tilde_split(&d) {
        Some(s) => {
            r.witness("gamma tilde section", &s);
            r.note("B⊗_A C is faithfully coflat: the induced map onto the target coring splits colinearly");
        }
        None => {
            r.note("the induced map onto the target coring has no colinear section");
        }
    }
    match induce_principal(&d) {
        Ok(InducedPrincipality::Checked { galois, principality }) => {
            r.item("induced comodule Galois", galois);
            r.item("induced comodule principal", principality.principal());
            r.item("induced principality routes agree", principality.agree());
            r.verdict("induced witness", &principality.verify(&GaloisDatum::new(&d.induced).expect("built above")));
        }
        Ok(InducedPrincipality::NotApplicable(why)) => {
            r.note(format!("principality of the induced comodule not applicable: {why}"));
        }
        Err(e) => {
            r.item("induced principality", false).note(e.to_string());
        }
    }
    r.witness("induced coaction", &d.induced.lifted());
    r
}

fn duality_jobs<'a, S: Scalar>(m: &'a Model<S>) -> Vec<Job<'a>> {
    let mut jobs: Vec<Job<'a>> = Vec::new();
    for (name, c) in right_comodules(m) {
        jobs.push(job(move || duality_records(m, name, c)));
    }
    for (en, e) in &m.entwinings {
        for (gn, g) in m.entwining_grouplikes(en) {
            jobs.push(job(move || {
                const ROUTE: &str = "coinvariants of cotensor and tensor products with the entwined algebra";
                let subject = format!("entwining {en} with grouplike {gn}");
                if !e.check_bowtie().passed() {
                    return vec![Record::not_applicable("duality", &subject, ROUTE, "bow-tie axioms fail")];
                }
                let entwined = e.coring_unchecked();
                let galois = Comodule::from_grouplike(&entwined, &e.coring_element(g), Side::Right)
                    .and_then(|a| GaloisDatum::new(&a))
                    .map(|d| d.is_galois().is_galois());
                if !matches!(galois, Ok(true)) {
                    return vec![Record::not_applicable(
                        "duality",
                        &subject,
                        ROUTE,
                        "the algebra is not a Galois comodule for this grouplike",
                    )];
                }
                let coring = Coring::from_coalgebra(&e.coalgebra);
                let u = Comodule::regular(&coring, Side::Left);
                let x = Comodule::regular(&coring, Side::Right);
                match associated_modules(e, g, &u, &x) {
                    Ok(am) => {
                        let mut r = Record::new("duality", &subject, ROUTE);
                        r.verdict("", &am.check(&e.algebra));
                        r.item("A□_C C ≅ A", am.cotensor.dim() == e.algebra.dim);
                        r.note(format!(
                            "dim S = {}, dim A□_C C = {}, dim Hom_ψ(C, A) = {}, dim (C⊗A)₀ = {}, dim Hom^C(C, A) = {}",
                            am.ring.dim,
                            am.cotensor.dim(),
                            am.hom_psi.dim(),
                            am.zero_part.dim(),
                            am.hom_colinear.dim()
                        ));
                        r.subspace_witness("coinvariants", &am.coinvariants);
                        vec![r]
                    }
                    Err(err) => vec![Record::not_applicable("duality", &subject, ROUTE, err.to_string())],
                }
            }));
        }
    }
    jobs
}

fn duality_records<S: Scalar>(m: &Model<S>, name: &str, c: &NamedComodule<S>) -> Vec<Record> {
    const ROUTE: &str = "composition pairing of colinear hom spaces over a principal comodule";
    let g = match galois_datum("duality", name, c) {
        Ok(g) => g,
        Err(r) => return vec![r],
    };
    let principal = g.is_galois().is_galois() && matches!(g.principal_via_splitting(), Ok(Some(_)));
    if !principal {
        return vec![Record::not_applicable("duality", &format!("comodule {name}"), ROUTE, "comodule is not principal")];
    }
    let coring = &c.comodule.coring;
    let mut family: Vec<(String, Comodule<S>)> = vec![
        ("itself".into(), c.comodule.clone()),
        ("the coring".into(), Comodule::regular(coring, Side::Right)),
        ("zero".into(), Comodule::zero(coring, Side::Right)),
    ];
    for (n, other) in right_comodules(m) {
        if other.comodule.coring == *coring && n != name {
            family.push((format!("comodule {n}"), other.comodule.clone()));
        }
    }
    let mut out = Vec::new();
    for (label, w) in &family {
        let mut r = Record::new("duality", &format!("comodule {name} against {label}"), ROUTE);
        match duality_iso(&g, w) {
            Ok(du) => {
                r.item("bijective", du.is_bijective());
                r.item("left S-linear", du.left_linear(&g));
                r.item("dim Hom(W, M) = dim Hom(M, W)", du.y.dim() == du.x.dim());
                match du.reflexivity(&g) {
                    Ok(v) => {
                        r.verdict("reflexivity", &v);
                    }
                    Err(e) => {
                        r.item("reflexivity", false).note(e.to_string());
                    }
                }
                if label == "the coring" {
                    r.item("dim Hom(C, M) = dim M", du.y.dim() == c.comodule.dim());
                    r.item("dim Hom(M, C) = dim M*", du.x.dim() == g.dual.dual.dim());
                }
                if du.matrix.rows() != du.matrix.cols() || rank(&du.matrix) < du.matrix.rows() {
                    r.certificate(Certificate {
                        system: "duality map".into(),
                        rows: du.matrix.rows(),
                        cols: du.matrix.cols(),
                        rank: rank(&du.matrix),
                        augmented_rank: None,
                    });
                }
                r.witness("duality map", &du.matrix);
            }
            Err(e) => {
                r.item("duality map", false).note(e.to_string());
            }
        }
        out.push(r);
    }
    out
}

fn injectivity_records<S: Scalar>(m: &Model<S>, name: &str, c: &NamedComodule<S>) -> Vec<Record> {
    const ROUTE: &str = "colinear retraction of the coaction";
    let mut r = Record::new("injectivity", &format!("comodule {name}"), ROUTE);
    let sys = relative_injectivity_system(&c.comodule);
    let cols = c.comodule.tensor.dim();
    let retraction = r
        .feasibility("colinear retraction of the coaction", sys.equations(), sys.unknowns(), sys.solve())
        .map(|x| Matrix::from_flat(c.comodule.dim(), cols, x));
    match &retraction {
        Some(p) => {
            r.item("retraction", p.mul(&c.comodule.coaction).is_identity());
            r.witness("retraction", p);
        }
        None => {
            r.absent().note("not relatively injective");
        }
    }
    let mut out = vec![r];
    let Ok(g) = GaloisDatum::new(&c.comodule) else {
        return out;
    };
    const SPLIT: &str = "sections of End^C(M) in End_A(M) and the map between their hom spaces";
    let mut s = Record::new("injectivity", &format!("split extension of comodule {name}"), SPLIT);
    match split_extension_check(&g) {
        Ok(se) => {
            s.verdict("", &se.verdict);
            s.item("agrees with the retraction search", se.right_s_sigma.is_some() == retraction.is_some());
            s.note(format!(
                "right-linear section: {}; left-linear section: {}; bimodule section: {}",
                se.right_s_sigma.is_some(),
                se.left_s_sigma.is_some(),
                se.bimodule_sigma.is_some()
            ));
            if let Some(sigma) = &se.right_s_sigma {
                s.witness("right-linear sigma", sigma);
            }
            if let Some(sigma) = &se.bimodule_sigma {
                s.witness("bimodule sigma", sigma);
            }
            if se.theta.is_none() {
                s.note("Theta not built: comodule is not Galois");
            }
        }
        Err(e) => {
            s.item("split extension", false).note(e.to_string());
        }
    }
    out.push(s);

    const FLAT: &str = "sufficient conditions for faithful flatness over S";
    let mut f = Record::new("injectivity", &format!("faithful flatness of comodule {name}"), FLAT);
    match faithful_flatness_verdict(&g) {
        Ok(ff) => {
            for route in &ff.routes {
                f.note(format!("route {}: {}", route.name, if route.applies { "applies" } else { "does not apply" }));
            }
            match ff.certified_by {
                Some(route) => {
                    f.note(format!("certified by: {route}"));
                    f.item("unit of the adjunction inverted", ff.nu_verified == Some(true));
                    if let Some(inv) = &ff.nu_inverse {
                        f.witness("nu inverse", inv);
                    }
                }
                None => {
                    f.status = Status::NotApplicable;
                    f.note("uncertified");
                }
            }
        }
        Err(e) => {
            f.item("faithful flatness", false).note(e.to_string());
        }
    }
    out.push(f);

    for (vn, v) in m.comodules.iter().filter(|(_, v)| v.comodule.side == Side::Left && v.coring == c.coring) {
        const FGP: &str = "dual basis of colinear maps into the dual comodule";
        let subject = format!("Hom(comodule {vn}, dual of {name}) over S");
        match fgp_associated_check(&g, &v.comodule) {
            Ok(FgpVerdict::Checked { hypothesis, dual_basis }) => {
                let mut rec = Record::new("injectivity", &subject, FGP);
                rec.note(format!("hypothesis: {hypothesis}"));
                rec.item("finitely generated projective", dual_basis.is_some());
                out.push(rec);
            }
            Ok(FgpVerdict::NotApplicable) => {
                out.push(Record::not_applicable("injectivity", &subject, FGP, "hypotheses unmet"));
            }
            Err(e) => out.push(Record::not_applicable("injectivity", &subject, FGP, e.to_string())),
        }
    }
    out
}
