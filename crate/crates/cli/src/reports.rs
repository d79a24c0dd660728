//! Command runners, report documents, certificate verification, and
//! text rendering. Every command emits a self-contained document that
//! re-parses; feeding it back with `--verify` rechecks the embedded
//! certificates without redoing the decision work.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use semigroup_actions::algebra::{self, AlgElem};
use semigroup_actions::constructions::{
    self, family, rees_build, rees_iso_spot_check, rees_report, union_build, FamilySpec,
    ReesReport, ReesSpec, UnionSpec,
};
use semigroup_actions::dynamics::{self, Decision, Witness};
use semigroup_actions::invertibility::{self, InvertibilityError, LaurentElem, LaurentVerdict};
use semigroup_actions::json::{
    InvertibilityWitnessDoc, PresentationDoc, RawElem, ReportDoc,
};
use semigroup_actions::modules;
use semigroup_actions::rng::SplitMix64;
use semigroup_actions::scalar::Ring;
use semigroup_actions::semigroup::{self, FiniteSemigroup, LeftCover, StructureFlags};

use crate::{Format, Request};

pub struct Outcome {
    pub body: String,
    pub unknown: bool,
}

pub fn run(request: &Request, input: &str) -> Result<Outcome, String> {
    match request.command.as_str() {
        "analyze" => analyze(request, input),
        "action" => action(request, input),
        "witness" => witness(request, input),
        "rees" => rees(request, input),
        "union" => union(request, input),
        "laurent" => laurent(request, input),
        "family" => family_cmd(request, input),
        other => Err(format!("unknown command {other:?}")),
    }
}

fn parse<'a, T: Deserialize<'a>>(input: &'a str) -> Result<T, String> {
    serde_json::from_str(input).map_err(|e| format!("parse error: {e}"))
}

fn emit<T: Serialize>(doc: &T, format: Format, text: String, unknown: bool) -> Result<Outcome, String> {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(doc).map_err(|e| e.to_string())?,
        Format::Text => text,
    };
    Ok(Outcome { body, unknown })
}

fn verified_outcome(format: Format, what: &str) -> Outcome {
    let body = match format {
        Format::Json => format!("{{\"verified\":true,\"command\":{what:?}}}"),
        Format::Text => format!("{what}: certificates verified"),
    };
    Outcome { body, unknown: false }
}

fn show_rat(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn show_elem(raw: &RawElem, sg: &Arc<FiniteSemigroup>) -> String {
    match raw.bind(sg) {
        Ok(e) => format!("{e}"),
        Err(_) => "<unbound>".to_string(),
    }
}

// --------------------------------------------------------------- analyze

#[derive(Serialize, Deserialize)]
struct AnalyzeDoc {
    semigroup: FiniteSemigroup,
    flags: StructureFlags,
    product_set_full: bool,
    cover: Option<LeftCover>,
    idempotent_cover: Option<Vec<usize>>,
    left_identity: Option<RawElem>,
    two_sided_identity: Option<RawElem>,
    inverse_identity: Option<RawElem>,
}

fn analyze(request: &Request, input: &str) -> Result<Outcome, String> {
    if request.verify {
        let doc: AnalyzeDoc = parse(input)?;
        verify_analyze(&doc)?;
        return Ok(verified_outcome(request.format, "analyze"));
    }
    let sg: FiniteSemigroup = parse(input)?;
    let shared = sg.clone().into_shared();
    let flags = semigroup::classify(&sg);
    let cover = semigroup::minimal_left_cover(&sg, request.budget);
    let idempotent_cover = match &cover {
        Some(c) => semigroup::reduce_to_idempotents(&sg, &c.elements)
            .map_err(|e| e.to_string())?,
        None => None,
    };
    let left = algebra::solve_left_identity(&shared, false);
    let two_sided = algebra::solve_left_identity(&shared, true);
    let inverse_identity = if flags.is_inverse {
        Some(constructions::inverse_semigroup_identity(&shared).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let to_raw = |e: &AlgElem| RawElem::from_elem(e).map_err(|e| e.to_string());
    let doc = AnalyzeDoc {
        semigroup: sg,
        product_set_full: shared.is_surjective_product(),
        cover,
        idempotent_cover,
        left_identity: left.as_ref().map(to_raw).transpose()?,
        two_sided_identity: two_sided.as_ref().map(to_raw).transpose()?,
        inverse_identity: inverse_identity.as_ref().map(to_raw).transpose()?,
        flags,
    };
    let mut text = String::new();
    text.push_str(&format!(
        "size: {}\nmonoid: {}  left identity element: {}  cancellative: {}\nregular: {}  inverse: {}\nidempotents: {:?}\nSS = S: {}\n",
        doc.semigroup.size(),
        doc.flags.is_monoid,
        doc.flags.has_left_identity_element,
        doc.flags.is_cancellative,
        doc.flags.is_regular,
        doc.flags.is_inverse,
        doc.flags.idempotents,
        doc.product_set_full,
    ));
    match &doc.cover {
        Some(c) => text.push_str(&format!(
            "cover: {:?} ({})\n",
            c.elements,
            if c.minimal { "minimal" } else { "possibly non-minimal" }
        )),
        None => text.push_str("cover: none (SS != S)\n"),
    }
    match &doc.idempotent_cover {
        Some(f) => text.push_str(&format!("idempotent cover: {f:?}\n")),
        None => text.push_str("idempotent cover: none\n"),
    }
    match &doc.left_identity {
        Some(e) => text.push_str(&format!("summable left identity: {}\n", show_elem(e, &shared))),
        None => text.push_str("summable left identity: none\n"),
    }
    match &doc.two_sided_identity {
        Some(e) => text.push_str(&format!("summable identity: {}\n", show_elem(e, &shared))),
        None => text.push_str("summable identity: none\n"),
    }
    emit(&doc, request.format, text, false)
}

fn verify_analyze(doc: &AnalyzeDoc) -> Result<(), String> {
    let sg = doc.semigroup.clone().into_shared();
    if semigroup::classify(&sg) != doc.flags {
        return Err("flags do not match the table".into());
    }
    let check_cover = |elements: &[usize]| -> bool {
        let mut seen = vec![false; sg.size()];
        for &t in elements {
            for u in 0..sg.size() {
                seen[sg.mul(t, u)] = true;
            }
        }
        seen.iter().all(|&b| b)
    };
    if let Some(c) = &doc.cover {
        if !check_cover(&c.elements) {
            return Err("stated cover does not cover".into());
        }
    }
    if let Some(f) = &doc.idempotent_cover {
        if !check_cover(f) || f.iter().any(|&e| !doc.flags.idempotents.contains(&e)) {
            return Err("stated idempotent cover invalid".into());
        }
    }
    let check_identity = |raw: &RawElem, two_sided: bool| -> Result<(), String> {
        let e = raw.bind(&sg).map_err(|e| e.to_string())?;
        for s in 0..sg.size() {
            let d = AlgElem::delta(sg.clone(), e.ring(), s);
            if e.convolve(&d).map_err(|e| e.to_string())? != d {
                return Err(format!("identity fails on the left at {s}"));
            }
            if two_sided && d.convolve(&e).map_err(|e| e.to_string())? != d {
                return Err(format!("identity fails on the right at {s}"));
            }
        }
        Ok(())
    };
    if let Some(raw) = &doc.left_identity {
        check_identity(raw, false)?;
    }
    if let Some(raw) = &doc.two_sided_identity {
        check_identity(raw, true)?;
    }
    if let Some(raw) = &doc.inverse_identity {
        check_identity(raw, true)?;
    }
    Ok(())
}

// ---------------------------------------------------------------- action

#[derive(Serialize, Deserialize)]
struct ActionDoc {
    presentation: PresentationDoc,
    budget: usize,
    report: ReportDoc,
}

fn action(request: &Request, input: &str) -> Result<Outcome, String> {
    if request.verify {
        let doc: ActionDoc = parse(input)?;
        verify_action(&doc)?;
        return Ok(verified_outcome(request.format, "action"));
    }
    let pres: PresentationDoc = parse(input)?;
    let j = pres.bind().map_err(|e| e.to_string())?;
    let report = dynamics::decide_expansive(&j, request.budget);
    let unknown = report.decision == Decision::Unknown;
    let doc = ActionDoc {
        presentation: pres,
        budget: request.budget,
        report: ReportDoc::from_report(&report),
    };
    let mut text = format!("decision: {:?} (route {:?})\n", report.decision, report.route);
    text.push_str(&format!("annihilator trivial: {}\n", report.annihilator_trivial));
    text.push_str(&format!(
        "invariant factors: {:?}  free rank: {}  dual size: {}\n",
        report.invariant_factors,
        report.free_rank,
        report
            .dual_size
            .as_ref()
            .map_or("infinite".to_string(), |s| s.to_string()),
    ));
    if let Some(c) = &report.cover {
        text.push_str(&format!("cover: {:?}\n", c.elements));
    }
    if let Some(v) = &report.optimal_constant {
        text.push_str(&format!("optimal constant: {}\n", show_rat(v)));
    }
    if let Some(v) = &report.theoretical_bound {
        text.push_str(&format!("cover bound: {}\n", show_rat(v)));
    }
    if report.witness.is_some() {
        text.push_str("witness: embedded in the JSON report\n");
    }
    emit(&doc, request.format, text, unknown)
}

fn verify_action(doc: &ActionDoc) -> Result<(), String> {
    let j = doc.presentation.bind().map_err(|e| e.to_string())?;
    let sg = j.semigroup().clone();
    let (n, m) = (j.ambient_rank(), sg.size());
    let report = doc.report.bind(n, m).map_err(|e| e.to_string())?;
    match report.decision {
        Decision::NonExpansive => {
            let witness = report.witness.as_ref().ok_or("non-expansive verdict without witness")?;
            match witness {
                Witness::AnnihilatorFunctional(f) => {
                    if f.len() != n * m || f.iter().all(Zero::is_zero) {
                        return Err("annihilator witness must be nonzero of full length".into());
                    }
                    let g = modules::z_generator_matrix(&j);
                    for col in 0..g.cols() {
                        let mut acc = BigRational::zero();
                        for (row, v) in f.iter().enumerate() {
                            acc += v * BigRational::from(g.entries()[row][col].clone());
                        }
                        if !acc.is_zero() {
                            return Err(format!("witness does not annihilate column {col}"));
                        }
                    }
                }
                Witness::SeparationPair { x, y } => {
                    if x == y {
                        return Err("separation pair must be distinct".into());
                    }
                    if !modules::membership_check(x, &j) || !modules::membership_check(y, &j) {
                        return Err("separation pair escapes the dual group".into());
                    }
                    let sep = dynamics::separation(x, y, &sg).map_err(|e| e.to_string())?;
                    if !sep.is_zero() {
                        return Err(format!("pair separates at {}", show_rat(&sep)));
                    }
                }
            }
        }
        Decision::Expansive => {
            if !report.annihilator_trivial {
                return Err("expansive verdict with a stated nontrivial annihilator".into());
            }
            if !modules::annihilator(&j).is_empty() {
                return Err("annihilator is not trivial".into());
            }
            if let Some(c) = &report.cover {
                let bound = dynamics::theoretical_constant(&j, &c.elements);
                match (&report.theoretical_bound, bound) {
                    (Some(stated), Ok(computed)) if *stated == computed => {}
                    (None, _) => {}
                    (Some(stated), Ok(computed)) => {
                        return Err(format!(
                            "stated bound {} differs from {}",
                            show_rat(stated),
                            show_rat(&computed)
                        ));
                    }
                    (Some(_), Err(e)) => return Err(format!("stated bound unverifiable: {e}")),
                }
            }
            if let (Some(optimal), Some(bound)) =
                (&report.optimal_constant, &report.theoretical_bound)
            {
                if optimal < bound {
                    return Err("optimal constant below the cover bound".into());
                }
            }
            if let Some(optimal) = &report.optimal_constant {
                if !optimal.is_positive() {
                    return Err("optimal constant must be positive".into());
                }
            }
        }
        Decision::Unknown => {}
    }
    Ok(())
}

// --------------------------------------------------------------- witness

#[derive(Serialize, Deserialize)]
struct WitnessCommandDoc {
    presentation: PresentationDoc,
    witness: Option<InvertibilityWitnessDoc>,
    reason: Option<String>,
}

fn witness(request: &Request, input: &str) -> Result<Outcome, String> {
    if request.verify {
        let doc: WitnessCommandDoc = parse(input)?;
        verify_witness_doc(&doc)?;
        return Ok(verified_outcome(request.format, "witness"));
    }
    let pres: PresentationDoc = parse(input)?;
    let j = pres.bind().map_err(|e| e.to_string())?;
    let (witness, reason) = match invertibility::right_invertibility_witness(&j) {
        Ok(Some(w)) => (
            Some(InvertibilityWitnessDoc::from_witness(&w).map_err(|e| e.to_string())?),
            None,
        ),
        Ok(None) => (None, Some("non_expansive".to_string())),
        Err(InvertibilityError::NoLeftIdentity) => {
            (None, Some("no_left_identity".to_string()))
        }
        Err(e) => return Err(e.to_string()),
    };
    let doc = WitnessCommandDoc { presentation: pres, witness, reason };
    let text = match (&doc.witness, &doc.reason) {
        (Some(w), _) => format!(
            "witness found: B and C of shape {}x{}, denominator scalar {}\n",
            w.b.rows, w.b.cols, w.m.0
        ),
        (None, Some(reason)) => format!("no witness: {reason}\n"),
        (None, None) => unreachable!(),
    };
    emit(&doc, request.format, text, false)
}

fn verify_witness_doc(doc: &WitnessCommandDoc) -> Result<(), String> {
    let j = doc.presentation.bind().map_err(|e| e.to_string())?;
    match (&doc.witness, doc.reason.as_deref()) {
        (Some(raw), _) => {
            let w = raw.bind(j.semigroup()).map_err(|e| e.to_string())?;
            invertibility::verify_witness(&j, &w)
        }
        (None, Some("no_left_identity")) => {
            if algebra::solve_left_identity(j.semigroup(), false).is_some() {
                Err("a left identity exists after all".into())
            } else {
                Ok(())
            }
        }
        (None, Some("non_expansive")) => {
            // Absence is certified by a nontrivial annihilator or a
            // dead pair; recheck the cheap half.
            if modules::annihilator(&j).is_empty()
                && dynamics::brute_force_decide(&j, 100_000) == Some(true)
            {
                Err("the action looks expansive; absence unjustified".into())
            } else {
                Ok(())
            }
        }
        (None, other) => Err(format!("unknown absence reason {other:?}")),
    }
}

// ------------------------------------------------------------------ rees

#[derive(Serialize, Deserialize)]
struct ReesDoc {
    spec: ReesSpec,
    semigroup: FiniteSemigroup,
    report: ReesReport,
    seed: u64,
    iso_samples: usize,
    iso_passed: bool,
}

fn rees(request: &Request, input: &str) -> Result<Outcome, String> {
    if request.verify {
        let doc: ReesDoc = parse(input)?;
        verify_rees(&doc)?;
        return Ok(verified_outcome(request.format, "rees"));
    }
    let spec: ReesSpec = parse(input)?;
    let built = rees_build(&spec).map_err(|e| e.to_string())?;
    let report = rees_report(&spec).map_err(|e| e.to_string())?;
    let shared = built.clone().into_shared();
    let mut rng = SplitMix64::new(request.seed);
    let iso_samples = 50;
    let iso_passed =
        rees_iso_spot_check(&spec, &shared, &mut rng, iso_samples).map_err(|e| e.to_string())?;
    let doc = ReesDoc { spec, semigroup: built, report, seed: request.seed, iso_samples, iso_passed };
    let text = format!(
        "size: {}\nexpansive: {}\nidempotent cover: {}\nsummable algebra unital: {}\nmatrix-picture spot check: {} ({} samples)\n",
        doc.semigroup.size(),
        doc.report.expansive,
        doc.report.idempotent_cover,
        doc.report.unital_l1,
        if doc.iso_passed { "passed" } else { "FAILED" },
        doc.iso_samples,
    );
    emit(&doc, request.format, text, false)
}

fn verify_rees(doc: &ReesDoc) -> Result<(), String> {
    let built = rees_build(&doc.spec).map_err(|e| e.to_string())?;
    if built != doc.semigroup {
        return Err("stated table differs from the rebuilt one".into());
    }
    let report = rees_report(&doc.spec).map_err(|e| e.to_string())?;
    if report != doc.report {
        return Err("stated criteria differ from the recomputed ones".into());
    }
    let mut rng = SplitMix64::new(doc.seed);
    let shared = built.into_shared();
    if !rees_iso_spot_check(&doc.spec, &shared, &mut rng, doc.iso_samples)
        .map_err(|e| e.to_string())?
    {
        return Err("matrix-picture spot check fails".into());
    }
    Ok(())
}

// ----------------------------------------------------------------- union

#[derive(Serialize, Deserialize)]
struct UnionDoc {
    spec: UnionSpec,
    semigroup: FiniteSemigroup,
    offsets: Vec<usize>,
    left_identity: Option<RawElem>,
}

fn union(request: &Request, input: &str) -> Result<Outcome, String> {
    if request.verify {
        let doc: UnionDoc = parse(input)?;
        verify_union(&doc)?;
        return Ok(verified_outcome(request.format, "union"));
    }
    let spec: UnionSpec = parse(input)?;
    let built = union_build(&spec).map_err(|e| e.to_string())?;
    let doc = UnionDoc {
        spec,
        semigroup: (*built.semigroup).clone(),
        offsets: built.offsets,
        left_identity: built
            .left_identity
            .as_ref()
            .map(|e| RawElem::from_elem(e).map_err(|e| e.to_string()))
            .transpose()?,
    };
    let text = match &doc.left_identity {
        Some(e) => format!(
            "size: {}\nsummable left identity: {}\n",
            doc.semigroup.size(),
            show_elem(e, &built.semigroup)
        ),
        None => format!(
            "size: {}\nsummable left identity: none (some component lacks one)\n",
            doc.semigroup.size()
        ),
    };
    emit(&doc, request.format, text, false)
}

fn verify_union(doc: &UnionDoc) -> Result<(), String> {
    let built = union_build(&doc.spec).map_err(|e| e.to_string())?;
    if *built.semigroup != doc.semigroup || built.offsets != doc.offsets {
        return Err("stated union differs from the rebuilt one".into());
    }
    match (&doc.left_identity, &built.left_identity) {
        (None, None) => Ok(()),
        (Some(raw), Some(_)) => {
            let e = raw.bind(&built.semigroup).map_err(|e| e.to_string())?;
            for s in 0..built.semigroup.size() {
                let d = AlgElem::delta(built.semigroup.clone(), Ring::Rat, s);
                if e.convolve(&d).map_err(|e| e.to_string())? != d {
                    return Err(format!("identity fails at element {s}"));
                }
            }
            Ok(())
        }
        _ => Err("identity presence disagrees with the components".into()),
    }
}

// --------------------------------------------------------------- laurent

#[derive(Serialize, Deserialize)]
struct LaurentWire {
    lo: i64,
    coeffs: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct LaurentInput {
    element: LaurentWire,
    #[serde(default = "default_truncation")]
    truncation: usize,
    #[serde(default = "default_tol")]
    tol: f64,
    #[serde(default = "default_tau")]
    tau: f64,
}

/// Accepts either the wrapped form or a bare `{"lo": .., "coeffs": ..}`.
fn parse_laurent_input(input: &str) -> Result<LaurentInput, String> {
    if let Ok(doc) = serde_json::from_str::<LaurentInput>(input) {
        return Ok(doc);
    }
    let element: LaurentWire = parse(input)?;
    Ok(LaurentInput {
        element,
        truncation: default_truncation(),
        tol: default_tol(),
        tau: default_tau(),
    })
}

fn default_truncation() -> usize {
    40
}

fn default_tol() -> f64 {
    1e-9
}

fn default_tau() -> f64 {
    invertibility::DEFAULT_ROOT_TAU
}

#[derive(Serialize, Deserialize)]
struct InverseWire {
    lo: i64,
    coeffs: Vec<f64>,
    claimed_bound: f64,
    measured_residual: f64,
}

#[derive(Serialize, Deserialize)]
struct LaurentDoc {
    element: LaurentWire,
    tau: f64,
    verdict: LaurentVerdict,
    roots: Vec<[f64; 2]>,
    moduli: Vec<f64>,
    min_circle_distance: f64,
    truncation: usize,
    tol: f64,
    inverse: Option<InverseWire>,
    inverse_error: Option<String>,
}

fn laurent(request: &Request, input: &str) -> Result<Outcome, String> {
    if request.verify {
        let doc: LaurentDoc = parse(input)?;
        verify_laurent(&doc)?;
        return Ok(verified_outcome(request.format, "laurent"));
    }
    let spec = parse_laurent_input(input)?;
    let elem = LaurentElem::new(spec.element.lo, spec.element.coeffs.clone());
    let report = invertibility::laurent_invertible(&elem, spec.tau).map_err(|e| e.to_string())?;
    let (inverse, inverse_error) = if report.verdict == LaurentVerdict::Invertible {
        match invertibility::laurent_inverse_truncated(&elem, spec.truncation, spec.tol) {
            Ok(inv) => (
                Some(InverseWire {
                    lo: inv.lo,
                    coeffs: inv.coeffs,
                    claimed_bound: inv.claimed_bound,
                    measured_residual: inv.measured_residual,
                }),
                None,
            ),
            Err(e) => (None, Some(e.to_string())),
        }
    } else {
        (None, None)
    };
    let doc = LaurentDoc {
        element: spec.element,
        tau: spec.tau,
        verdict: report.verdict,
        roots: report.roots.iter().map(|r| [r.re, r.im]).collect(),
        moduli: report.moduli,
        min_circle_distance: report.min_circle_distance,
        truncation: spec.truncation,
        tol: spec.tol,
        inverse,
        inverse_error,
    };
    let mut text = format!(
        "verdict: {:?}\nroots: {:?}\nmin distance to unit circle: {:.3e}\n",
        doc.verdict, doc.roots, doc.min_circle_distance
    );
    match (&doc.inverse, &doc.inverse_error) {
        (Some(inv), _) => text.push_str(&format!(
            "truncated inverse: window [{}, {}], residual {:.3e} (claimed {:.3e})\n",
            inv.lo,
            inv.lo + inv.coeffs.len() as i64 - 1,
            inv.measured_residual,
            inv.claimed_bound
        )),
        (None, Some(e)) => text.push_str(&format!("truncated inverse unavailable: {e}\n")),
        (None, None) => {}
    }
    emit(&doc, request.format, text, false)
}

fn verify_laurent(doc: &LaurentDoc) -> Result<(), String> {
    let elem = LaurentElem::new(doc.element.lo, doc.element.coeffs.clone());
    if let Some(inv) = &doc.inverse {
        // Re-measure the residual by direct window convolution.
        let mut residual = 0.0f64;
        let lo = elem.lo() + inv.lo;
        let len = elem.coeffs().len() + inv.coeffs.len().max(1) - 1;
        let mut prod = vec![0.0f64; len];
        for (i, c) in elem.coeffs().iter().enumerate() {
            let cv = c.to_f64().unwrap();
            for (j, &b) in inv.coeffs.iter().enumerate() {
                prod[i + j] += cv * b;
            }
        }
        for (idx, &v) in prod.iter().enumerate() {
            let target = if lo + idx as i64 == 0 { 1.0 } else { 0.0 };
            residual += (v - target).abs();
        }
        if residual > inv.measured_residual * (1.0 + 1e-9) + 1e-15 {
            return Err(format!(
                "re-measured residual {residual} exceeds the stated {}",
                inv.measured_residual
            ));
        }
        if inv.measured_residual > inv.claimed_bound * (1.0 + 1e-9) {
            return Err("stated residual exceeds the claimed bound".into());
        }
        if inv.measured_residual > doc.tol {
            return Err("stated residual exceeds the tolerance".into());
        }
    }
    // The verdict bands must match the reported moduli.
    let min_dist = doc
        .moduli
        .iter()
        .map(|m| (m - 1.0).abs())
        .fold(f64::INFINITY, f64::min);
    let expected = if doc.moduli.is_empty() || min_dist > doc.tau {
        LaurentVerdict::Invertible
    } else if min_dist <= doc.tau * 1e-3 {
        LaurentVerdict::NotInvertible
    } else {
        LaurentVerdict::Borderline
    };
    if expected != doc.verdict {
        return Err("verdict disagrees with the reported root moduli".into());
    }
    Ok(())
}

// ---------------------------------------------------------------- family

#[derive(Serialize, Deserialize)]
struct FamilyDoc {
    spec: FamilySpec,
    semigroup: FiniteSemigroup,
    flags: StructureFlags,
}

fn family_cmd(request: &Request, input: &str) -> Result<Outcome, String> {
    if request.verify {
        let doc: FamilyDoc = parse(input)?;
        verify_family(&doc)?;
        return Ok(verified_outcome(request.format, "family"));
    }
    let spec: FamilySpec = parse(input)?;
    let built = family(&spec).map_err(|e| e.to_string())?;
    let flags = semigroup::classify(&built);
    let doc = FamilyDoc { spec, semigroup: built, flags };
    let text = format!(
        "size: {}\nmonoid: {}  cancellative: {}  regular: {}  inverse: {}\nidempotents: {:?}\n",
        doc.semigroup.size(),
        doc.flags.is_monoid,
        doc.flags.is_cancellative,
        doc.flags.is_regular,
        doc.flags.is_inverse,
        doc.flags.idempotents,
    );
    emit(&doc, request.format, text, false)
}

fn verify_family(doc: &FamilyDoc) -> Result<(), String> {
    let built = family(&doc.spec).map_err(|e| e.to_string())?;
    if built != doc.semigroup {
        return Err("stated table differs from the family constructor".into());
    }
    if semigroup::classify(&built) != doc.flags {
        return Err("stated flags differ from the table".into());
    }
    Ok(())
}

