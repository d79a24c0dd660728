//! Acceptance suite: one test per criterion, each ending in a printed
//! pass line (run with `--nocapture` to see them). Exact comparisons
//! throughout; the few floating-point checks carry their stated slack.

use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use semigroup_actions::algebra::{self, dual_apply_vec, pair_vec, AlgElem, AlgMat};
use semigroup_actions::constructions::{
    self, family, rees_build, rees_iso_spot_check, rees_report, union_build, FamilySpec,
    ReesSpec, UnionSpec,
};
use semigroup_actions::dynamics::{self, Decision};
use semigroup_actions::invertibility::{self, LaurentElem, LaurentVerdict};
use semigroup_actions::modules::{self, Enumeration, ModulePresentation, TorusPoint};
use semigroup_actions::rng::SplitMix64;
use semigroup_actions::scalar::{Ring, Scalar};
use semigroup_actions::semigroup::{self, FiniteSemigroup};

const ENUM_BUDGET: usize = 10_000;

fn shared(s: FiniteSemigroup) -> Arc<FiniteSemigroup> {
    s.into_shared()
}

fn cyclic(m: usize) -> Arc<FiniteSemigroup> {
    shared(family(&FamilySpec::CyclicGroup { m }).unwrap())
}

fn right_zero(m: usize) -> Arc<FiniteSemigroup> {
    shared(family(&FamilySpec::RightZero { m }).unwrap())
}

fn left_zero(m: usize) -> Arc<FiniteSemigroup> {
    shared(family(&FamilySpec::LeftZero { m }).unwrap())
}

fn trunc_min(m: usize) -> Arc<FiniteSemigroup> {
    shared(family(&FamilySpec::TruncMin { m }).unwrap())
}

fn null_with_zero(m: usize) -> Arc<FiniteSemigroup> {
    shared(family(&FamilySpec::NullWithZero { m }).unwrap())
}

fn br(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn random_rees_spec(rng: &mut SplitMix64, require_nonzero: bool) -> ReesSpec {
    loop {
        let group = match rng.below(3) {
            0 => family(&FamilySpec::CyclicGroup { m: 1 }).unwrap(),
            1 => family(&FamilySpec::CyclicGroup { m: 2 }).unwrap(),
            _ => family(&FamilySpec::CyclicGroup { m: 3 }).unwrap(),
        };
        let index_size = 1 + rng.below(3);
        let lambda_size = 1 + rng.below(3);
        let sandwich: Vec<Vec<Option<usize>>> = (0..lambda_size)
            .map(|_| {
                (0..index_size)
                    .map(|_| {
                        if rng.chance(1, 3) {
                            None
                        } else {
                            Some(rng.below(group.size()))
                        }
                    })
                    .collect()
            })
            .collect();
        let spec = ReesSpec { group, index_size, lambda_size, sandwich };
        if !require_nonzero || spec.sandwich.iter().flatten().any(Option::is_some) {
            return spec;
        }
    }
}

/// Random presentation matrix: entries with support at most two,
/// coefficients in -2..=2.
fn random_presentation(sg: &Arc<FiniteSemigroup>, rng: &mut SplitMix64) -> ModulePresentation {
    let n = 1 + rng.below(2);
    let k = 1 + rng.below(2);
    let m = sg.size();
    let entries: Vec<AlgElem> = (0..n * k)
        .map(|_| {
            let coeffs: Vec<(usize, i64)> = (0..2)
                .map(|_| (rng.below(m), rng.range_i64(-2, 2)))
                .collect();
            AlgElem::from_int_coeffs(sg.clone(), Ring::Int, &coeffs)
        })
        .collect();
    ModulePresentation::new(AlgMat::from_entries(n, k, entries))
}

struct SweepCase {
    label: String,
    j: ModulePresentation,
    report: dynamics::ExpansivityReport,
    brute: Option<bool>,
    annihilator_empty: bool,
}

struct Sweep {
    cases: Vec<SweepCase>,
    elapsed: Duration,
}

static SWEEP: OnceLock<Sweep> = OnceLock::new();

fn sweep_families() -> Vec<(String, Arc<FiniteSemigroup>)> {
    let mut list: Vec<(String, Arc<FiniteSemigroup>)> = Vec::new();
    for m in 2..=6 {
        list.push((format!("cyclic({m})"), cyclic(m)));
    }
    for m in 2..=4 {
        list.push((format!("right_zero({m})"), right_zero(m)));
    }
    for m in 2..=4 {
        list.push((format!("trunc_min({m})"), trunc_min(m)));
    }
    let mut rng = SplitMix64::new(0xC0FFEE);
    for i in 0..20 {
        let spec = random_rees_spec(&mut rng, true);
        let built = shared(rees_build(&spec).unwrap());
        list.push((format!("rees#{i}(m={})", built.size()), built));
    }
    list
}

fn the_sweep() -> &'static Sweep {
    SWEEP.get_or_init(|| {
        let start = Instant::now();
        let mut cases = Vec::new();
        let mut rng = SplitMix64::new(0xABCD_EF01);
        for (label, sg) in sweep_families() {
            assert!(sg.is_surjective_product(), "{label}: sweep family must satisfy SS = S");
            for idx in 0..50 {
                let j = random_presentation(&sg, &mut rng);
                let report = dynamics::decide_expansive(&j, ENUM_BUDGET);
                let brute = dynamics::brute_force_decide(&j, ENUM_BUDGET);
                let annihilator_empty = modules::annihilator(&j).is_empty();
                cases.push(SweepCase {
                    label: format!("{label}/A{idx}"),
                    j,
                    report,
                    brute,
                    annihilator_empty,
                });
            }
        }
        Sweep { cases, elapsed: start.elapsed() }
    })
}

// ---------------------------------------------------------------------
// Independent oracle pieces (recoded from the definitions, used to
// cross-check library values rather than trusting them).

fn oracle_rho(a: &BigRational, b: &BigRational) -> BigRational {
    let d = a - b;
    let f = &d - d.floor();
    let c = BigRational::one() - &f;
    f.min(c)
}

fn oracle_metric(x: &[BigRational], y: &[BigRational], n: usize, m: usize) -> BigRational {
    let mut best = BigRational::zero();
    for j in 0..n {
        let mut acc = BigRational::zero();
        for i in 1..=m {
            let rho = oracle_rho(&x[j * m + i - 1], &y[j * m + i - 1]);
            if !rho.is_zero() {
                acc += &rho / ((BigRational::one() + &rho) * br(1 << i, 1));
            }
        }
        if acc > best {
            best = acc;
        }
    }
    best
}

fn oracle_separation(
    sg: &FiniteSemigroup,
    x: &[BigRational],
    y: &[BigRational],
    n: usize,
) -> BigRational {
    let m = sg.size();
    let mut best = BigRational::zero();
    for s in 0..m {
        let shift = |p: &[BigRational]| -> Vec<BigRational> {
            let mut out = Vec::with_capacity(n * m);
            for i in 0..n {
                for t in 0..m {
                    out.push(p[i * m + sg.mul(t, s)].clone());
                }
            }
            out
        };
        let d = oracle_metric(&shift(x), &shift(y), n, m);
        if d > best {
            best = d;
        }
    }
    best
}

/// Grid-scan enumeration of the dual for one-generator modules whose
/// points have coordinates in (1/grid_den)·Z, followed by an all-pairs
/// separation minimum.
fn oracle_optimal_constant(
    sg: &Arc<FiniteSemigroup>,
    j: &ModulePresentation,
    grid_den: i64,
    expected_count: usize,
) -> BigRational {
    let m = sg.size();
    let n = j.ambient_rank();
    let g = modules::z_generator_matrix(j);
    let total = (grid_den as usize).pow((n * m) as u32);
    let mut points: Vec<Vec<BigRational>> = Vec::new();
    for code in 0..total {
        let mut c = code;
        let coords: Vec<BigRational> = (0..n * m)
            .map(|_| {
                let v = br((c % grid_den as usize) as i64, grid_den);
                c /= grid_den as usize;
                v
            })
            .collect();
        let member = (0..g.cols()).all(|col| {
            let mut acc = BigRational::zero();
            for (row, coord) in coords.iter().enumerate() {
                acc += coord * BigRational::from(g.entries()[row][col].clone());
            }
            acc.is_integer()
        });
        if member {
            points.push(coords);
        }
    }
    assert_eq!(points.len(), expected_count, "oracle grid misses points");
    let mut best: Option<BigRational> = None;
    for (a, pa) in points.iter().enumerate() {
        for pb in points.iter().skip(a + 1) {
            let sep = oracle_separation(sg, pa, pb, n);
            if best.as_ref().is_none_or(|b| sep < *b) {
                best = Some(sep);
            }
        }
    }
    best.expect("at least two points")
}

fn single_gen(sg: &Arc<FiniteSemigroup>, coeffs: &[(usize, i64)]) -> ModulePresentation {
    ModulePresentation::new(AlgMat::from_entries(
        1,
        1,
        vec![AlgElem::from_int_coeffs(sg.clone(), Ring::Int, coeffs)],
    ))
}

// ---------------------------------------------------------------------

#[test]
fn criterion_01_adjointness_suite() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0x5EED_0001);
    let pool: Vec<Arc<FiniteSemigroup>> = vec![
        cyclic(2),
        cyclic(3),
        cyclic(5),
        cyclic(8),
        right_zero(2),
        right_zero(4),
        left_zero(3),
        null_with_zero(3),
        trunc_min(4),
        shared(constructions::direct_product(
            &family(&FamilySpec::CyclicGroup { m: 2 }).unwrap(),
            &family(&FamilySpec::RightZero { m: 3 }).unwrap(),
        )),
        shared(
            rees_build(&ReesSpec {
                group: family(&FamilySpec::CyclicGroup { m: 2 }).unwrap(),
                index_size: 1,
                lambda_size: 2,
                sandwich: vec![vec![Some(0)], vec![None]],
            })
            .unwrap(),
        ),
    ];
    let rat = |rng: &mut SplitMix64| {
        Scalar::Rat(br(rng.range_i64(-3, 3), rng.range_i64(1, 4)))
    };
    for case in 0..500 {
        let sg = pool[rng.below(pool.len())].clone();
        let m = sg.size();
        let n = 1 + rng.below(3);
        let k = 1 + rng.below(3);
        let elem = |rng: &mut SplitMix64| {
            let entries: Vec<(usize, Scalar)> =
                (0..3).map(|_| (rng.below(m), rat(rng))).collect();
            AlgElem::from_coeffs(sg.clone(), Ring::Rat, entries)
        };
        let f: Vec<AlgElem> = (0..n).map(|_| elem(&mut rng)).collect();
        let b: Vec<AlgElem> = (0..k).map(|_| elem(&mut rng)).collect();
        let a = AlgMat::from_entries(n, k, (0..n * k).map(|_| elem(&mut rng)).collect());
        let lhs = pair_vec(&f, &a.apply_vec(&b).unwrap()).unwrap();
        let rhs = pair_vec(&dual_apply_vec(&f, &a).unwrap(), &b).unwrap();
        assert_eq!(lhs, rhs, "adjointness fails at case {case}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("criterion 01: PASS — 500 adjointness identities exact in {elapsed:?}");
}

#[test]
fn criterion_02_rank_route_matches_enumeration() {
    let sweep = the_sweep();
    let mut compared = 0usize;
    for case in &sweep.cases {
        assert_eq!(
            case.annihilator_empty,
            case.report.free_rank == 0,
            "{}: kernel basis and invariant-factor routes disagree",
            case.label
        );
        if let Some(brute) = case.brute {
            let expected = if brute { Decision::Expansive } else { Decision::NonExpansive };
            assert_eq!(
                case.report.decision, expected,
                "{}: rank route disagrees with enumeration",
                case.label
            );
            compared += 1;
        }
    }
    assert!(
        compared >= 500,
        "only {compared} cases had an enumerable dual group; sweep too thin"
    );
    assert!(
        sweep.elapsed < Duration::from_secs(120),
        "sweep took {:?}",
        sweep.elapsed
    );
    println!(
        "criterion 02: PASS — {} cases, {} enumeration cross-checks, 100% agreement in {:?}",
        sweep.cases.len(),
        compared,
        sweep.elapsed
    );
}

#[test]
fn criterion_03_trivial_annihilator_counterexample() {
    let start = Instant::now();
    for m in 2..=4 {
        let sg = null_with_zero(m);
        let ex = dynamics::nonexpansive_with_trivial_annihilator(&sg)
            .expect("null semigroups have SS != S");
        assert!(
            modules::annihilator(&ex.presentation).is_empty(),
            "m={m}: annihilator must be trivial"
        );
        assert_ne!(ex.x, ex.y, "m={m}: points must differ");
        assert!(
            dynamics::separation(&ex.x, &ex.y, &sg).unwrap().is_zero(),
            "m={m}: separation must vanish"
        );
        // Same value out of the independent metric oracle.
        assert!(oracle_separation(&sg, ex.x.coords(), ex.y.coords(), 1).is_zero());
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 03: PASS — dead pairs with trivial annihilators on null semigroups in {elapsed:?}");
}

#[test]
fn criterion_04_expansivity_constant_bound() {
    let sweep = the_sweep();
    let mut checked = 0usize;
    for case in &sweep.cases {
        if case.report.decision != Decision::Expansive || case.j.matrix().is_zero() {
            continue;
        }
        if let Some(optimal) = &case.report.optimal_constant {
            let bound = case
                .report
                .theoretical_bound
                .as_ref()
                .unwrap_or_else(|| panic!("{}: expansive case lacks the cover bound", case.label));
            assert!(
                optimal >= bound,
                "{}: optimal {} under bound {}",
                case.label,
                optimal,
                bound
            );
            checked += 1;
        }
    }
    assert!(checked >= 300, "only {checked} expansive brute-forced cases");

    // Pinned instances, recomputed by the grid oracle.
    let rz = right_zero(2);
    let j_rz = single_gen(&rz, &[(0, 2)]);
    let oracle_rz = oracle_optimal_constant(&rz, &j_rz, 8, 4);
    assert_eq!(oracle_rz, br(1, 4));
    let report_rz = dynamics::decide_expansive(&j_rz, ENUM_BUDGET);
    assert_eq!(report_rz.optimal_constant.as_ref(), Some(&oracle_rz));
    assert_eq!(report_rz.theoretical_bound, Some(br(1, 8)));

    let c2 = cyclic(2);
    let j_c2 = single_gen(&c2, &[(0, 2)]);
    let oracle_c2 = oracle_optimal_constant(&c2, &j_c2, 8, 4);
    assert_eq!(oracle_c2, br(1, 6));
    let report_c2 = dynamics::decide_expansive(&j_c2, ENUM_BUDGET);
    assert_eq!(report_c2.optimal_constant.as_ref(), Some(&oracle_c2));
    assert_eq!(report_c2.theoretical_bound, Some(br(1, 8)));
    assert!(oracle_c2 >= br(1, 8));

    println!(
        "criterion 04: PASS — {checked} sweep bounds plus pinned instances (1/4 vs 1/8, 1/6 vs 1/8)"
    );
}

#[test]
fn criterion_05_witness_round_trip() {
    let start = Instant::now();
    let union_a = union_build(&UnionSpec {
        components: vec![
            family(&FamilySpec::CyclicGroup { m: 2 }).unwrap(),
            family(&FamilySpec::CyclicGroup { m: 2 }).unwrap(),
        ],
    })
    .unwrap();
    let union_b = union_build(&UnionSpec {
        components: vec![
            family(&FamilySpec::RightZero { m: 2 }).unwrap(),
            family(&FamilySpec::CyclicGroup { m: 2 }).unwrap(),
        ],
    })
    .unwrap();
    assert!(union_a.left_identity.is_some());
    assert!(union_b.left_identity.is_some());
    let families: Vec<(String, Arc<FiniteSemigroup>)> = vec![
        ("right_zero(2)".into(), right_zero(2)),
        ("right_zero(3)".into(), right_zero(3)),
        ("trunc_min(3)".into(), trunc_min(3)),
        ("cyclic(4)".into(), cyclic(4)),
        ("union(c2,c2)".into(), union_a.semigroup.clone()),
        ("union(rz2,c2)".into(), union_b.semigroup.clone()),
    ];
    let mut rng = SplitMix64::new(0x0B57_AC1E);
    let mut witnesses = 0usize;
    let mut absences = 0usize;
    for (label, sg) in &families {
        for idx in 0..50 {
            let j = random_presentation(sg, &mut rng);
            let report = dynamics::decide_expansive(&j, ENUM_BUDGET);
            let witness = invertibility::right_invertibility_witness(&j)
                .unwrap_or_else(|e| panic!("{label}/A{idx}: {e}"));
            assert_eq!(
                witness.is_some(),
                report.decision == Decision::Expansive,
                "{label}/A{idx}: witness existence must track expansivity"
            );
            match witness {
                Some(w) => {
                    witnesses += 1;
                    invertibility::verify_witness(&j, &w)
                        .unwrap_or_else(|e| panic!("{label}/A{idx}: {e}"));
                    // Explicit identity B * C = Re{I} and lattice
                    // membership of the columns of B.
                    let b_rat = w.b.promote(Ring::Rat).unwrap();
                    assert_eq!(
                        b_rat.mat_mul(&w.c).unwrap(),
                        w.identity.real_part(),
                        "{label}/A{idx}: B*C must equal the real identity"
                    );
                    let m = sg.size();
                    for col in 0..w.b.cols() {
                        let mut flat = vec![BigInt::zero(); w.b.rows() * m];
                        for row in 0..w.b.rows() {
                            for (s, c) in w.b.entry(row, col).support() {
                                if let Scalar::Int(v) = c {
                                    flat[row * m + s] = v.clone();
                                }
                            }
                        }
                        assert!(
                            invertibility::module_membership(&flat, &j).unwrap(),
                            "{label}/A{idx}: column {col} of B not in the module"
                        );
                    }
                }
                None => absences += 1,
            }
        }
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 05: PASS — {witnesses} witnesses verified, {absences} certified absences, in {elapsed:?}"
    );
}

#[test]
fn criterion_06_identity_implies_cover() {
    let start = Instant::now();
    let mut scanned = 0usize;
    let mut with_identity = 0usize;
    let mut check = |sg: &Arc<FiniteSemigroup>| {
        scanned += 1;
        if algebra::solve_left_identity(sg, false).is_some() {
            with_identity += 1;
            assert!(
                semigroup::minimal_left_cover(sg, 10_000).is_some(),
                "left identity without finite cover on table {:?}",
                sg.table()
            );
        }
    };
    // All associative tables of order at most 3.
    check(&shared(FiniteSemigroup::validate_table(1, vec![vec![0]]).unwrap()));
    for code in 0..16usize {
        let table = vec![
            vec![code & 1, (code >> 1) & 1],
            vec![(code >> 2) & 1, (code >> 3) & 1],
        ];
        if let Ok(s) = FiniteSemigroup::validate_table(2, table) {
            check(&shared(s));
        }
    }
    for code in 0..19_683usize {
        let mut c = code;
        let mut table = vec![vec![0usize; 3]; 3];
        for row in table.iter_mut() {
            for slot in row.iter_mut() {
                *slot = c % 3;
                c /= 3;
            }
        }
        if let Ok(s) = FiniteSemigroup::validate_table(3, table) {
            check(&shared(s));
        }
    }
    // Family instances on top.
    for m in 1..=6 {
        check(&cyclic(m));
    }
    for m in 1..=4 {
        check(&right_zero(m));
        check(&left_zero(m));
        check(&null_with_zero(m));
        check(&trunc_min(m));
    }
    let mut rng = SplitMix64::new(0xFEED);
    for _ in 0..10 {
        let spec = random_rees_spec(&mut rng, false);
        check(&shared(rees_build(&spec).unwrap()));
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "criterion 06: PASS — {with_identity} left-unital tables out of {scanned} all have finite covers, in {elapsed:?}"
    );
}

#[test]
fn criterion_07_rees_criteria_cross_validation() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0x4E35);
    let mut fractional_identities = 0usize;
    for case in 0..200 {
        let spec = random_rees_spec(&mut rng, false);
        let report = rees_report(&spec).unwrap();
        let built = shared(rees_build(&spec).unwrap());

        let cover = semigroup::minimal_left_cover(&built, 10_000);
        assert_eq!(
            report.expansive,
            cover.is_some(),
            "case {case}: sandwich nonzeroness vs cover existence"
        );

        let all: Vec<usize> = (0..built.size()).collect();
        let idem_cover = built.is_surjective_product()
            && semigroup::reduce_to_idempotents(&built, &all).unwrap().is_some();
        assert_eq!(
            report.idempotent_cover, idem_cover,
            "case {case}: column condition vs idempotent reduction"
        );

        let two_sided = algebra::solve_left_identity(&built, true);
        assert_eq!(
            report.unital_l1,
            two_sided.is_some(),
            "case {case}: sandwich invertibility vs identity solve"
        );
        if let Some(e) = &two_sided {
            if e.support().any(|(_, c)| !c.as_rational().unwrap().is_integer()) {
                fractional_identities += 1;
            }
        }

        assert!(
            rees_iso_spot_check(&spec, &built, &mut rng, 100).unwrap(),
            "case {case}: matrix-algebra picture disagrees with convolution"
        );
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 07: PASS — 200 sandwich specs cross-validated ({fractional_identities} with non-integer identities), in {elapsed:?}"
    );
}

#[test]
fn criterion_08_disjoint_union_identities() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0x0D10);
    let parts: Vec<FiniteSemigroup> = vec![
        family(&FamilySpec::CyclicGroup { m: 2 }).unwrap(),
        family(&FamilySpec::CyclicGroup { m: 3 }).unwrap(),
        family(&FamilySpec::RightZero { m: 2 }).unwrap(),
        family(&FamilySpec::LeftZero { m: 2 }).unwrap(),
    ];
    for case in 0..50 {
        let count = 2 + rng.below(3);
        let components: Vec<FiniteSemigroup> =
            (0..count).map(|_| parts[rng.below(parts.len())].clone()).collect();
        let all_unital = components
            .iter()
            .all(|c| algebra::solve_left_identity(&shared(c.clone()), false).is_some());
        let built = union_build(&UnionSpec { components }).unwrap();
        assert_eq!(
            built.left_identity.is_some(),
            all_unital,
            "case {case}: union identity must exist exactly when all components are unital"
        );
        assert_eq!(
            algebra::solve_left_identity(&built.semigroup, false).is_some(),
            all_unital,
            "case {case}: direct solve must agree"
        );
        if let Some(e) = &built.left_identity {
            for s in 0..built.semigroup.size() {
                let delta = AlgElem::delta(built.semigroup.clone(), Ring::Rat, s);
                assert_eq!(
                    e.convolve(&delta).unwrap(),
                    delta,
                    "case {case}: identity fails at element {s}"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 08: PASS — 50 unions, identity existence and action exact, in {elapsed:?}");
}

#[test]
fn criterion_09_laurent_case() {
    let start = Instant::now();
    let a = LaurentElem::new(0, vec![-2, 1]);
    let report = invertibility::laurent_invertible(&a, invertibility::DEFAULT_ROOT_TAU).unwrap();
    assert_eq!(report.verdict, LaurentVerdict::Invertible);
    for n in [10usize, 20, 30] {
        let inv = invertibility::laurent_inverse_truncated(&a, n, 1e-2).unwrap();
        let bound = 2f64.powi(-(n as i32) - 1) * (1.0 + 1e-9);
        assert!(
            inv.measured_residual <= bound,
            "N={n}: residual {} exceeds {bound}",
            inv.measured_residual
        );
        // Re-measure the residual with an independent exact-window
        // convolution against the integer element.
        let mut resid = 0.0f64;
        for j in -1..=(n as i64 + 2) {
            let mut v = 0.0f64;
            for (idx, c) in a.coeffs().iter().enumerate() {
                let exp = a.lo() + idx as i64;
                let b_idx = j - exp - inv.lo;
                if b_idx >= 0 && (b_idx as usize) < inv.coeffs.len() {
                    v += c.to_f64().unwrap() * inv.coeffs[b_idx as usize];
                }
            }
            let target = if j == 0 { 1.0 } else { 0.0 };
            resid += (v - target).abs();
        }
        assert!(resid <= bound, "N={n}: independent residual {resid}");
    }
    let not_inv = LaurentElem::new(0, vec![-1, 1]);
    let report = invertibility::laurent_invertible(&not_inv, invertibility::DEFAULT_ROOT_TAU)
        .unwrap();
    assert_eq!(report.verdict, LaurentVerdict::NotInvertible);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 09: PASS — shifted doubling inverted with certified residuals in {elapsed:?}");
}

#[test]
fn criterion_10_duality_self_checks() {
    let start = Instant::now();
    let sweep = the_sweep();
    let mut rng = SplitMix64::new(0xD0A1);
    let mut enumerated_cases = 0usize;
    let mut point_total = 0usize;
    let mut phi_samples = 0usize;
    for case in &sweep.cases {
        if case.report.free_rank != 0 {
            continue;
        }
        let Some(size) = &case.report.dual_size else { continue };
        if *size > BigInt::from(ENUM_BUDGET) {
            continue;
        }
        let Enumeration::Points(points) = modules::enumerate_dual(&case.j, ENUM_BUDGET) else {
            panic!("{}: enumeration must succeed under the budget", case.label);
        };
        enumerated_cases += 1;
        point_total += points.len();
        assert_eq!(
            BigInt::from(points.len()),
            *size,
            "{}: point count must match the invariant factors",
            case.label
        );
        let product: BigInt = case
            .report
            .invariant_factors
            .iter()
            .fold(BigInt::one(), |acc, d| acc * d);
        assert_eq!(product, *size, "{}: factor product", case.label);

        // Fast exact membership on common-denominator residues.
        let sg = case.j.semigroup().clone();
        let m = sg.size();
        let n = case.j.ambient_rank();
        let g = modules::z_generator_matrix(&case.j);
        let mut den = BigInt::one();
        for p in &points {
            for c in p.coords() {
                den = num_integer::lcm(den.clone(), c.denom().clone());
            }
        }
        let den = den.to_i64().expect("denominator bounded by the budget");
        let gi: Vec<Vec<i64>> = g
            .entries()
            .iter()
            .map(|row| row.iter().map(|v| v.to_i64().unwrap()).collect())
            .collect();
        let to_res = |p: &TorusPoint| -> Vec<i64> {
            p.coords()
                .iter()
                .map(|c| (c * BigRational::from(BigInt::from(den))).to_integer().to_i64().unwrap())
                .collect()
        };
        let member = |res: &[i64]| -> bool {
            (0..g.cols()).all(|col| {
                let mut acc: i128 = 0;
                for (row, &c) in res.iter().enumerate() {
                    acc += c as i128 * gi[row][col] as i128;
                }
                acc % den as i128 == 0
            })
        };
        for p in &points {
            let res = to_res(p);
            assert!(member(&res), "{}: point escapes the dual group", case.label);
            for s in 0..m {
                let mut shifted = vec![0i64; n * m];
                for i in 0..n {
                    for t in 0..m {
                        shifted[i * m + t] = res[i * m + sg.mul(t, s)];
                    }
                }
                assert!(
                    member(&shifted),
                    "{}: shift by {s} leaves the dual group",
                    case.label
                );
            }
        }

        // Character round-trip and equivariance on random samples.
        if phi_samples < 100 && points.len() > 1 {
            for _ in 0..4 {
                let p = &points[rng.below(points.len())];
                let vector: Vec<AlgElem> = (0..n)
                    .map(|_| {
                        let coeffs: Vec<(usize, i64)> = (0..2)
                            .map(|_| (rng.below(m), rng.range_i64(-2, 2)))
                            .collect();
                        AlgElem::from_int_coeffs(sg.clone(), Ring::Int, &coeffs)
                    })
                    .collect();
                let (_, reextracted) = modules::phi_roundtrip(p, &vector).unwrap();
                assert_eq!(&reextracted, p, "{}: character round-trip", case.label);
                let s = rng.below(m);
                let lhs =
                    modules::torus_pair(&modules::shift(p, s, &sg), &vector).unwrap();
                let translated: Vec<AlgElem> = vector
                    .iter()
                    .map(|v| v.convolve(&AlgElem::delta(sg.clone(), Ring::Int, s)).unwrap())
                    .collect();
                let rhs = modules::torus_pair(p, &translated).unwrap();
                assert_eq!(lhs, rhs, "{}: equivariance", case.label);
                phi_samples += 1;
            }
        }
    }
    assert!(phi_samples >= 100, "only {phi_samples} character samples");
    assert!(enumerated_cases > 0);
    let elapsed = start.elapsed();
    println!(
        "criterion 10: PASS — {enumerated_cases} dual groups, {point_total} points membership- and shift-checked, {phi_samples} character samples, in {elapsed:?}"
    );
}
