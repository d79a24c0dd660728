//! The shift dynamics on the dual group and the expansivity decision.
//!
//! The metric on `(T^S)^n` is the weighted coordinate sum
//!
//! ```text
//! d(x, y) = max_j Σ_{i=1..m} ρ(x_j(s_i), y_j(s_i)) / (2^i (1 + ρ(..)))
//! ```
//!
//! with `ρ` the arc distance on `R/Z` and `s_1, s_2, ...` the frozen
//! element enumeration (table order, weights starting at `2^{-1}`).
//! Separation of a pair takes the supremum of shifted distances over
//! the semigroup elements only — for a monoid the unshifted distance
//! is included automatically through the identity.
//!
//! The decision runs in three routes: a nonzero real annihilator
//! vector yields a one-parameter torus arc of non-separated points
//! (non-expansive, for any `S`); with a trivial annihilator and
//! `SS = S`, expansivity follows from the finite-cover bound, with a
//! brute-force enumeration filling in the optimal constant; when
//! `SS ≠ S` nothing short of enumeration decides, and past the budget
//! the outcome is reported unknown.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{AlgElem, AlgMat};
use crate::modules::{
    self, DualGroupStructure, ModulePresentation, ResidueEnumeration, ShapeMismatch, TorusPoint,
};
use crate::scalar::Ring;
use crate::semigroup::{self, FiniteSemigroup, LeftCover};

/// Budget for the exact-minimality search inside cover computation.
const COVER_SEARCH_BUDGET: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DynamicsError {
    ShapeMismatch(String),
    PreconditionViolated(String),
}

impl fmt::Display for DynamicsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynamicsError::ShapeMismatch(d) => write!(f, "shape mismatch: {d}"),
            DynamicsError::PreconditionViolated(d) => write!(f, "precondition violated: {d}"),
        }
    }
}

impl std::error::Error for DynamicsError {}

impl From<ShapeMismatch> for DynamicsError {
    fn from(e: ShapeMismatch) -> Self {
        DynamicsError::ShapeMismatch(e.0)
    }
}

/// Arc distance on `R/Z` between reduced representatives.
pub fn circle_distance(a: &BigRational, b: &BigRational) -> BigRational {
    let diff = a - b;
    let frac = &diff - diff.floor();
    let complement = BigRational::one() - &frac;
    frac.min(complement)
}

/// The weighted-sum metric; exact, bounded by 1.
pub fn metric_d(x: &TorusPoint, y: &TorusPoint) -> Result<BigRational, DynamicsError> {
    if x.ambient_rank() != y.ambient_rank() || x.semigroup_size() != y.semigroup_size() {
        return Err(DynamicsError::ShapeMismatch("points of different shapes".into()));
    }
    let m = x.semigroup_size();
    let mut best = BigRational::zero();
    for j in 0..x.ambient_rank() {
        let mut acc = BigRational::zero();
        for i in 1..=m {
            let rho = circle_distance(x.coord(j, i - 1), y.coord(j, i - 1));
            if !rho.is_zero() {
                let weight = BigInt::one() << i;
                let denom = (BigRational::one() + &rho) * BigRational::from(weight);
                acc += rho / denom;
            }
        }
        if acc > best {
            best = acc;
        }
    }
    Ok(best)
}

/// `sup_s d(s·x, s·y)` over the semigroup elements.
pub fn separation(
    x: &TorusPoint,
    y: &TorusPoint,
    sg: &FiniteSemigroup,
) -> Result<BigRational, DynamicsError> {
    let mut best = BigRational::zero();
    for s in 0..sg.size() {
        let d = metric_d(&modules::shift(x, s, sg), &modules::shift(y, s, sg))?;
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Decision {
    Expansive,
    NonExpansive,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Route {
    /// Trivial annihilator plus a finite cover.
    AnnihilatorRank,
    /// Full enumeration of the dual group.
    BruteForce,
    /// A real annihilator vector scales to a curve inside the dual.
    TorusArc,
}

/// Machine-checkable evidence for a non-expansive verdict.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// Nonzero real `f` with `f^T G = 0`; `π(λf)` stays in the dual
    /// group for every real `λ`, so no positive constant separates.
    AnnihilatorFunctional(Vec<BigRational>),
    /// Distinct points with separation exactly zero.
    SeparationPair { x: TorusPoint, y: TorusPoint },
}

/// Decision plus certificate data.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansivityReport {
    pub decision: Decision,
    pub route: Route,
    pub cover: Option<LeftCover>,
    pub annihilator_trivial: bool,
    /// `min` over distinct pairs of their separation, when the dual
    /// group was enumerated (1 for the trivial group, whose pairs are
    /// vacuous and the metric is bounded by 1).
    pub optimal_constant: Option<BigRational>,
    /// `(2^{r+1} ‖A‖₁)^{-1}` from the cover bound.
    pub theoretical_bound: Option<BigRational>,
    pub witness: Option<Witness>,
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
    /// `|X_J|` when finite.
    pub dual_size: Option<BigInt>,
}

/// The cover-based expansivity constant `(2^{r+1} ‖A‖₁)^{-1}`, where
/// `r` is the last enumeration position needed to contain the cover.
pub fn theoretical_constant(
    j: &ModulePresentation,
    cover: &[usize],
) -> Result<BigRational, DynamicsError> {
    let sg = j.semigroup();
    let mut covered = vec![false; sg.size()];
    for &t in cover {
        for u in 0..sg.size() {
            covered[sg.mul(t, u)] = true;
        }
    }
    if !covered.iter().all(|&b| b) {
        return Err(DynamicsError::PreconditionViolated("KS != S".into()));
    }
    let norm = j.matrix().l1_norm_exact().expect("integral matrix");
    if norm.is_zero() {
        return Err(DynamicsError::PreconditionViolated("A = 0".into()));
    }
    let r = cover.iter().copied().max().map_or(0, |t| t + 1);
    let weight = BigRational::from(BigInt::one() << (r + 1));
    Ok((weight * norm).recip())
}

struct BruteForce {
    /// A nonzero point all of whose shifts vanish, if one exists.
    dead_point: Option<TorusPoint>,
    optimal: Option<BigRational>,
}

/// Exhaustive scan of an enumerated dual group: looks for a nonzero
/// point annihilated by every shift, and otherwise minimizes the
/// separation over nonzero points. The separation of `x` and `y`
/// equals that of `x - y` and `0` (the metric is translation
/// invariant and shifts are homomorphisms), so scanning differences
/// against zero covers all distinct pairs.
fn brute_force_scan(
    sg: &FiniteSemigroup,
    points: &modules::ResiduePoints,
    want_optimal: bool,
) -> BruteForce {
    let m = sg.size();
    let n = points.n;
    let den = points.den;
    let in_products = {
        let mut seen = vec![false; m];
        for s in 0..m {
            for t in 0..m {
                seen[sg.mul(s, t)] = true;
            }
        }
        seen
    };

    // All shifts of z vanish iff z is zero on every product st.
    let mut dead = None;
    for residues in &points.residues {
        if residues.iter().all(|&c| c == 0) {
            continue;
        }
        let annihilated = (0..n).all(|i| {
            (0..m).all(|u| !in_products[u] || residues[i * m + u] == 0)
        });
        if annihilated {
            dead = Some(residues.clone());
            break;
        }
    }
    if let Some(res) = dead {
        let point = single_point(points, &res);
        return BruteForce { dead_point: Some(point), optimal: None };
    }
    if !want_optimal {
        return BruteForce { dead_point: None, optimal: None };
    }

    // Weighted metric terms depend only on (position, arc numerator);
    // cache them, and prune a candidate as soon as some shifted row
    // sum reaches the current minimum.
    let mut term_cache: HashMap<(usize, i64), BigRational> = HashMap::new();
    let mut term = |i: usize, c: i64| -> BigRational {
        term_cache
            .entry((i, c))
            .or_insert_with(|| {
                BigRational::new(BigInt::from(c), BigInt::from(den + c) << i)
            })
            .clone()
    };
    let mut min_sep: Option<BigRational> = None;
    'points: for residues in &points.residues {
        if residues.iter().all(|&c| c == 0) {
            continue;
        }
        let mut sep = BigRational::zero();
        for s in 0..m {
            for row in 0..n {
                let mut acc = BigRational::zero();
                for i in 1..=m {
                    let c = residues[row * m + sg.mul(i - 1, s)];
                    let c = c.min(den - c);
                    if c != 0 {
                        acc += term(i, c);
                        if let Some(cur) = &min_sep {
                            if acc >= *cur {
                                continue 'points;
                            }
                        }
                    }
                }
                if acc > sep {
                    sep = acc;
                }
            }
        }
        min_sep = Some(sep);
    }
    // With no annihilated point every nonzero point separates, and a
    // trivial group separates vacuously: report the metric bound.
    let optimal = Some(min_sep.unwrap_or_else(BigRational::one));
    BruteForce { dead_point: None, optimal }
}

fn single_point(points: &modules::ResiduePoints, residues: &[i64]) -> TorusPoint {
    let den = BigInt::from(points.den);
    TorusPoint::new(
        points.n,
        points.m,
        residues
            .iter()
            .map(|&c| BigRational::new(BigInt::from(c), den.clone()))
            .collect(),
    )
}

/// Decides expansivity of the shift action on the dual of the
/// presented module, with certificates. `budget` caps the size of any
/// dual-group enumeration.
pub fn decide_expansive(j: &ModulePresentation, budget: usize) -> ExpansivityReport {
    let sg = j.semigroup().clone();
    let g = modules::z_generator_matrix(j);
    let dual = modules::dual_structure_of_matrix(&g);
    let ss_is_s = sg.is_surjective_product();
    let cover = if ss_is_s {
        semigroup::minimal_left_cover(&sg, COVER_SEARCH_BUDGET)
    } else {
        None
    };
    let annihilator_trivial = dual.free_rank == 0;
    let dual_size = annihilator_trivial.then(|| dual.torsion_size.clone());

    let mut report = ExpansivityReport {
        decision: Decision::Unknown,
        route: Route::BruteForce,
        cover,
        annihilator_trivial,
        optimal_constant: None,
        theoretical_bound: None,
        witness: None,
        invariant_factors: dual.invariant_factors.clone(),
        free_rank: dual.free_rank,
        dual_size,
    };

    if dual.free_rank > 0 {
        let basis = modules::annihilator_of_matrix(&g);
        debug_assert!(!basis.is_empty());
        report.decision = Decision::NonExpansive;
        report.route = Route::TorusArc;
        report.witness = basis.into_iter().next().map(Witness::AnnihilatorFunctional);
        return report;
    }

    let enumeration = modules::enumerate_residues(&g, &dual, budget);
    if ss_is_s {
        report.decision = Decision::Expansive;
        report.route = Route::AnnihilatorRank;
        if let ResidueEnumeration::Points(points) = &enumeration {
            let scan = brute_force_scan(&sg, points, true);
            debug_assert!(scan.dead_point.is_none(), "cover route contradicted by scan");
            report.optimal_constant = scan.optimal;
        }
        if let Some(cover) = &report.cover {
            if !j.matrix().is_zero() {
                report.theoretical_bound =
                    theoretical_constant(j, &cover.elements).ok();
            }
        }
        return report;
    }

    match enumeration {
        ResidueEnumeration::Points(points) => {
            let scan = brute_force_scan(&sg, &points, true);
            match scan.dead_point {
                Some(y) => {
                    report.decision = Decision::NonExpansive;
                    report.witness = Some(Witness::SeparationPair {
                        x: TorusPoint::zero(points.n, points.m),
                        y,
                    });
                }
                None => {
                    report.decision = Decision::Expansive;
                    report.optimal_constant = scan.optimal;
                }
            }
        }
        ResidueEnumeration::OverBudget { .. } | ResidueEnumeration::Infinite => {
            report.decision = Decision::Unknown;
        }
    }
    report
}

/// Independent enumeration route for cross-checking the rank decision:
/// expansive iff no nonzero point has all shifts zero. `None` when the
/// dual group cannot be enumerated within the budget.
pub fn brute_force_decide(j: &ModulePresentation, budget: usize) -> Option<bool> {
    let g = modules::z_generator_matrix(j);
    let dual = modules::dual_structure_of_matrix(&g);
    if dual.free_rank > 0 {
        // An infinite dual group comes from a real annihilator vector,
        // whose scalings form a non-separated arc.
        return Some(false);
    }
    match modules::enumerate_residues(&g, &dual, budget) {
        ResidueEnumeration::Points(points) => {
            let scan = brute_force_scan(j.semigroup(), &points, false);
            Some(scan.dead_point.is_none())
        }
        _ => None,
    }
}

/// Output of the non-expansivity construction for `SS ≠ S`.
#[derive(Debug, Clone)]
pub struct DeadPairExample {
    pub presentation: ModulePresentation,
    pub x: TorusPoint,
    pub y: TorusPoint,
    /// The chosen element of `S - SS`.
    pub missed_element: usize,
}

/// For `SS ≠ S`, presents the doubled module (one generator `2δ_t` per
/// element) and a pair of points witnessing non-expansivity: the
/// annihilator is trivial, yet `y = ½·δ`-indicator at an element
/// outside `SS` collapses to zero under every shift. Absent when
/// `SS = S`.
pub fn nonexpansive_with_trivial_annihilator(
    sg: &std::sync::Arc<FiniteSemigroup>,
) -> Option<DeadPairExample> {
    let m = sg.size();
    let products = sg.product_set();
    let missed = (0..m).find(|u| !products.contains(u))?;
    let entries: Vec<AlgElem> = (0..m)
        .map(|t| AlgElem::from_int_coeffs(sg.clone(), Ring::Int, &[(t, 2)]))
        .collect();
    let presentation = ModulePresentation::new(AlgMat::from_entries(1, m, entries));
    let x = TorusPoint::zero(1, m);
    let mut coords = vec![BigRational::zero(); m];
    coords[missed] = BigRational::new(BigInt::one(), BigInt::from(2));
    let y = TorusPoint::new(1, m, coords);
    Some(DeadPairExample { presentation, x, y, missed_element: missed })
}

/// Convenience: report on the action presented by the dead-pair
/// construction, mainly for the command-line front end.
pub fn dual_structure(j: &ModulePresentation) -> DualGroupStructure {
    modules::dual_group_structure(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn cyclic(m: usize) -> Arc<FiniteSemigroup> {
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        FiniteSemigroup::validate_table(m, table).unwrap().into_shared()
    }

    fn right_zero(m: usize) -> Arc<FiniteSemigroup> {
        let table = (0..m).map(|_| (0..m).collect()).collect();
        FiniteSemigroup::validate_table(m, table).unwrap().into_shared()
    }

    fn null_with_zero(m: usize) -> Arc<FiniteSemigroup> {
        let table = (0..m).map(|_| vec![0; m]).collect();
        FiniteSemigroup::validate_table(m, table).unwrap().into_shared()
    }

    fn single_gen(sg: &Arc<FiniteSemigroup>, coeffs: &[(usize, i64)]) -> ModulePresentation {
        let a = AlgMat::from_entries(
            1,
            1,
            vec![AlgElem::from_int_coeffs(sg.clone(), Ring::Int, coeffs)],
        );
        ModulePresentation::new(a)
    }

    fn br(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn metric_is_zero_on_equal_points() {
        let x = TorusPoint::new(1, 2, vec![br(1, 3), br(2, 5)]);
        assert!(metric_d(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn metric_two_half_coordinates() {
        // ρ = ½ gives the term 1/(3·2^i): 1/6 + 1/12 = 1/4.
        let x = TorusPoint::new(1, 2, vec![br(1, 2), br(1, 2)]);
        let y = TorusPoint::zero(1, 2);
        assert_eq!(metric_d(&x, &y).unwrap(), br(1, 4));
    }

    #[test]
    fn circle_distance_wraps() {
        assert_eq!(circle_distance(&br(3, 4), &br(0, 1)), br(1, 4));
        assert_eq!(circle_distance(&br(1, 2), &br(0, 1)), br(1, 2));
        assert_eq!(circle_distance(&br(1, 10), &br(9, 10)), br(1, 5));
    }

    #[test]
    fn separation_collapses_on_null_semigroup() {
        let sg = null_with_zero(2);
        let x = TorusPoint::zero(1, 2);
        let y = TorusPoint::new(1, 2, vec![br(0, 1), br(1, 2)]);
        assert!(separation(&x, &y, &sg).unwrap().is_zero());
        assert!(separation(&x, &x, &sg).unwrap().is_zero());
    }

    #[test]
    fn separation_on_right_zero() {
        let sg = right_zero(2);
        let x = TorusPoint::new(1, 2, vec![br(0, 1), br(1, 2)]);
        let y = TorusPoint::zero(1, 2);
        assert_eq!(separation(&x, &y, &sg).unwrap(), br(1, 4));
    }

    #[test]
    fn decide_doubling_on_cyclic_two() {
        let sg = cyclic(2);
        let j = single_gen(&sg, &[(0, 2)]);
        let report = decide_expansive(&j, 10_000);
        assert_eq!(report.decision, Decision::Expansive);
        assert_eq!(report.route, Route::AnnihilatorRank);
        assert!(report.annihilator_trivial);
        assert_eq!(report.dual_size, Some(BigInt::from(4)));
        // min over the three nonzero points of their shifted distance
        // to zero: the mixed points reach 1/6, the all-half point 1/4.
        assert_eq!(report.optimal_constant, Some(br(1, 6)));
        assert_eq!(report.theoretical_bound, Some(br(1, 8)));
    }

    #[test]
    fn decide_doubling_on_right_zero() {
        let sg = right_zero(2);
        let j = single_gen(&sg, &[(0, 2)]);
        let report = decide_expansive(&j, 10_000);
        assert_eq!(report.decision, Decision::Expansive);
        assert_eq!(report.optimal_constant, Some(br(1, 4)));
        assert_eq!(report.theoretical_bound, Some(br(1, 8)));
    }

    #[test]
    fn decide_zero_module_is_torus_arc() {
        let sg = cyclic(2);
        let j = single_gen(&sg, &[]);
        let report = decide_expansive(&j, 10_000);
        assert_eq!(report.decision, Decision::NonExpansive);
        assert_eq!(report.route, Route::TorusArc);
        assert!(matches!(report.witness, Some(Witness::AnnihilatorFunctional(_))));
    }

    #[test]
    fn decide_doubled_null_module_finds_dead_pair() {
        let sg = null_with_zero(2);
        let a = AlgMat::from_entries(
            1,
            2,
            vec![
                AlgElem::from_int_coeffs(sg.clone(), Ring::Int, &[(0, 2)]),
                AlgElem::from_int_coeffs(sg.clone(), Ring::Int, &[(1, 2)]),
            ],
        );
        let j = ModulePresentation::new(a);
        let report = decide_expansive(&j, 10_000);
        assert_eq!(report.decision, Decision::NonExpansive);
        assert_eq!(report.route, Route::BruteForce);
        assert!(report.annihilator_trivial);
        let Some(Witness::SeparationPair { x, y }) = &report.witness else {
            panic!("expected a separation pair");
        };
        assert_ne!(x, y);
        assert!(separation(x, y, &sg).unwrap().is_zero());
    }

    #[test]
    fn theoretical_constant_examples() {
        let rz = right_zero(2);
        let j = single_gen(&rz, &[(0, 2)]);
        assert_eq!(theoretical_constant(&j, &[0]).unwrap(), br(1, 8));

        let c2 = cyclic(2);
        let j = single_gen(&c2, &[(0, 2)]);
        assert_eq!(theoretical_constant(&j, &[0]).unwrap(), br(1, 8));
    }

    #[test]
    fn theoretical_constant_rejects_bad_inputs() {
        let sg = null_with_zero(2);
        let j = single_gen(&sg, &[(0, 2)]);
        assert!(theoretical_constant(&j, &[1]).is_err());
        let c2 = cyclic(2);
        let zero = single_gen(&c2, &[]);
        assert!(theoretical_constant(&zero, &[0]).is_err());
    }

    #[test]
    fn counterexample_on_null_semigroups() {
        for m in 2..=4 {
            let sg = null_with_zero(m);
            let ex = nonexpansive_with_trivial_annihilator(&sg).unwrap();
            assert!(modules::annihilator(&ex.presentation).is_empty());
            assert_ne!(ex.x, ex.y);
            assert!(separation(&ex.x, &ex.y, &sg).unwrap().is_zero());
        }
    }

    #[test]
    fn counterexample_absent_for_groups() {
        let sg = cyclic(2);
        assert!(nonexpansive_with_trivial_annihilator(&sg).is_none());
    }

    #[test]
    fn brute_force_agrees_with_rank_route_on_samples() {
        let cases: Vec<(Arc<FiniteSemigroup>, Vec<(usize, i64)>)> = vec![
            (cyclic(2), vec![(0, 2)]),
            (cyclic(3), vec![(0, 1), (1, 1)]),
            (cyclic(4), vec![(0, 2), (2, 1)]),
            (right_zero(3), vec![(1, 2)]),
            (right_zero(2), vec![(0, 1), (1, -1)]),
        ];
        for (sg, coeffs) in cases {
            let j = single_gen(&sg, &coeffs);
            let report = decide_expansive(&j, 100_000);
            if let Some(brute) = brute_force_decide(&j, 100_000) {
                assert_eq!(
                    report.decision,
                    if brute { Decision::Expansive } else { Decision::NonExpansive },
                    "disagreement on {coeffs:?}"
                );
            }
        }
    }

    #[test]
    fn trivial_semigroup_full_pipeline() {
        let sg = FiniteSemigroup::validate_table(1, vec![vec![0]]).unwrap().into_shared();
        let j = single_gen(&sg, &[(0, 2)]);
        let report = decide_expansive(&j, 100);
        assert_eq!(report.decision, Decision::Expansive);
        assert_eq!(report.dual_size, Some(BigInt::from(2)));
        assert_eq!(report.optimal_constant, Some(br(1, 6)));
        assert_eq!(report.theoretical_bound, Some(br(1, 8)));
        let w = crate::invertibility::right_invertibility_witness(&j).unwrap().unwrap();
        assert_eq!(w.m, BigInt::from(2));
        crate::invertibility::verify_witness(&j, &w).unwrap();
    }

    #[test]
    fn two_by_two_presentation_decides_consistently() {
        let sg = cyclic(2);
        let zero = AlgElem::zero(sg.clone(), crate::scalar::Ring::Int);
        let a = AlgMat::from_entries(
            2,
            2,
            vec![
                AlgElem::from_int_coeffs(sg.clone(), crate::scalar::Ring::Int, &[(0, 2)]),
                zero,
                AlgElem::delta(sg.clone(), crate::scalar::Ring::Int, 1),
                AlgElem::from_int_coeffs(sg.clone(), crate::scalar::Ring::Int, &[(0, 2)]),
            ],
        );
        let j = ModulePresentation::new(a);
        let report = decide_expansive(&j, 100_000);
        assert_eq!(report.decision, Decision::Expansive);
        assert_eq!(brute_force_decide(&j, 100_000), Some(true));
        let (optimal, bound) = (
            report.optimal_constant.expect("within budget"),
            report.theoretical_bound.expect("cover exists"),
        );
        assert!(optimal >= bound);
        let w = crate::invertibility::right_invertibility_witness(&j).unwrap().unwrap();
        crate::invertibility::verify_witness(&j, &w).unwrap();
    }

    #[test]
    fn unknown_when_over_budget_without_cover() {
        let sg = null_with_zero(2);
        let a = AlgMat::from_entries(
            1,
            2,
            vec![
                AlgElem::from_int_coeffs(sg.clone(), Ring::Int, &[(0, 101)]),
                AlgElem::from_int_coeffs(sg.clone(), Ring::Int, &[(1, 103)]),
            ],
        );
        let j = ModulePresentation::new(a);
        let report = decide_expansive(&j, 100);
        assert_eq!(report.decision, Decision::Unknown);
    }
}
