//! Finitely generated right submodules of `Z[S]^n` and their duals.
//!
//! A presentation is an integer matrix `A` of algebra elements; the
//! presented module is the right submodule generated by the columns of
//! `A`, that is, the integer span of the columns themselves together
//! with all their right translates `A * (δ_t e_j)`. Expanding in the
//! point-mass basis turns the module into the integer column span of
//! one big matrix `G` with `n·m` rows, and the dual group
//!
//! ```text
//! X = { x ∈ (T^S)^n : <x, a> = 0 in T for all a in the module }
//! ```
//!
//! becomes the solution set of `x^T G ≡ 0 (mod 1)`, which the Smith
//! normal form of `G` describes completely: `X` is a direct sum of
//! cyclic groups of the invariant-factor orders and of `free_rank`
//! torus circles.
//!
//! Flattening order everywhere: coordinate `i` major, element index
//! minor, so `(i, s) ↦ i·m + s`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{AlgElem, AlgMat};
use crate::linalg::{self, IntMatrix, RatMatrix, SmithNormalForm};
use crate::scalar::Ring;
use crate::semigroup::FiniteSemigroup;

/// `(S, n, k, A)` presenting the right submodule generated by the
/// columns of `A ∈ M_{n×k}(Z[S])`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModulePresentation {
    semigroup: Arc<FiniteSemigroup>,
    n: usize,
    k: usize,
    a: AlgMat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeMismatch(pub String);

impl fmt::Display for ShapeMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "shape mismatch: {}", self.0)
    }
}

impl std::error::Error for ShapeMismatch {}

impl ModulePresentation {
    /// Wraps an integer matrix as a module presentation.
    pub fn new(a: AlgMat) -> Self {
        assert_eq!(a.ring(), Ring::Int, "presentations are integral");
        ModulePresentation { semigroup: a.semigroup().clone(), n: a.rows(), k: a.cols(), a }
    }

    pub fn semigroup(&self) -> &Arc<FiniteSemigroup> {
        &self.semigroup
    }

    pub fn ambient_rank(&self) -> usize {
        self.n
    }

    pub fn generator_count(&self) -> usize {
        self.k
    }

    pub fn matrix(&self) -> &AlgMat {
        &self.a
    }
}

/// Integer expansion of a presented module: one column per generator
/// (the generator itself, then its `m` right translates), `n·m` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZGeneratorMatrix {
    entries: IntMatrix,
    n: usize,
    k: usize,
    m: usize,
}

impl ZGeneratorMatrix {
    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn rows(&self) -> usize {
        self.n * self.m
    }

    pub fn cols(&self) -> usize {
        self.k * (self.m + 1)
    }
}

/// Expands the module into its integer generator matrix. Column
/// `j·(m+1)` is the flattened generator column `A e_j`; column
/// `j·(m+1) + 1 + t` is the flattened translate `A * (δ_t e_j)`.
pub fn z_generator_matrix(j: &ModulePresentation) -> ZGeneratorMatrix {
    let sg = j.semigroup();
    let m = sg.size();
    let (n, k) = (j.n, j.k);
    let mut entries = vec![vec![BigInt::zero(); k * (m + 1)]; n * m];
    for gen in 0..k {
        let base = gen * (m + 1);
        for i in 0..n {
            for (r, c) in j.a.entry(i, gen).support() {
                let v = match c {
                    crate::scalar::Scalar::Int(v) => v.clone(),
                    _ => unreachable!("presentations are integral"),
                };
                entries[i * m + r][base] += &v;
                for t in 0..m {
                    entries[i * m + sg.mul(r, t)][base + 1 + t] += &v;
                }
            }
        }
    }
    ZGeneratorMatrix { entries, n, k, m }
}

/// Canonical rational basis of the annihilator
/// `{f : f^T G = 0}` of the presented module; empty exactly when the
/// annihilator is trivial (equivalently the complex one is, `G` being
/// integral).
pub fn annihilator(j: &ModulePresentation) -> Vec<Vec<BigRational>> {
    let g = z_generator_matrix(j);
    annihilator_of_matrix(&g)
}

pub(crate) fn annihilator_of_matrix(g: &ZGeneratorMatrix) -> Vec<Vec<BigRational>> {
    let rat: RatMatrix = g
        .entries
        .iter()
        .map(|row| row.iter().map(|v| BigRational::from(v.clone())).collect())
        .collect();
    linalg::left_kernel_basis(&rat)
}

/// Invariant-factor description of the dual group, with the Smith
/// transforms needed to enumerate it.
#[derive(Debug, Clone)]
pub struct DualGroupStructure {
    pub snf: SmithNormalForm,
    /// Invariant factors greater than one.
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
    /// `Π dᵢ` over all nonzero diagonal entries; the dual group order
    /// when `free_rank == 0`.
    pub torsion_size: BigInt,
}

impl DualGroupStructure {
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }
}

pub fn dual_group_structure(j: &ModulePresentation) -> DualGroupStructure {
    dual_structure_of_matrix(&z_generator_matrix(j))
}

pub(crate) fn dual_structure_of_matrix(g: &ZGeneratorMatrix) -> DualGroupStructure {
    let snf = linalg::smith_normal_form(&g.entries);
    let nonzero = snf.nonzero_diagonal();
    let free_rank = g.rows() - nonzero.len();
    let torsion_size = nonzero.iter().fold(BigInt::one(), |acc, d| acc * d);
    let invariant_factors = nonzero.into_iter().filter(|d| !d.is_one()).collect();
    DualGroupStructure { snf, invariant_factors, free_rank, torsion_size }
}

/// An exact-rational point of `(T^S)^n`, coordinates reduced mod 1,
/// flattened `(i, s) ↦ i·m + s`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TorusPoint {
    n: usize,
    m: usize,
    coords: Vec<BigRational>,
}

fn reduce_mod_one(v: &BigRational) -> BigRational {
    v - v.floor()
}

impl TorusPoint {
    pub fn new(n: usize, m: usize, coords: Vec<BigRational>) -> Self {
        assert_eq!(coords.len(), n * m, "coordinate count mismatch");
        let coords = coords.iter().map(reduce_mod_one).collect();
        TorusPoint { n, m, coords }
    }

    pub fn zero(n: usize, m: usize) -> Self {
        TorusPoint { n, m, coords: vec![BigRational::zero(); n * m] }
    }

    pub fn ambient_rank(&self) -> usize {
        self.n
    }

    pub fn semigroup_size(&self) -> usize {
        self.m
    }

    /// Coordinate `x_i(s)`.
    pub fn coord(&self, i: usize, s: usize) -> &BigRational {
        &self.coords[i * self.m + s]
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn sub(&self, other: &TorusPoint) -> Result<TorusPoint, ShapeMismatch> {
        if self.n != other.n || self.m != other.m {
            return Err(ShapeMismatch("torus points of different shapes".into()));
        }
        Ok(TorusPoint::new(
            self.n,
            self.m,
            self.coords.iter().zip(other.coords.iter()).map(|(a, b)| a - b).collect(),
        ))
    }
}

/// The shift `(s·x)(t) = x(ts)` applied coordinatewise.
pub fn shift(x: &TorusPoint, s: usize, sg: &FiniteSemigroup) -> TorusPoint {
    assert_eq!(x.m, sg.size(), "point and semigroup sizes differ");
    assert!(s < sg.size(), "shift element out of range");
    let mut coords = Vec::with_capacity(x.coords.len());
    for i in 0..x.n {
        for t in 0..x.m {
            coords.push(x.coord(i, sg.mul(t, s)).clone());
        }
    }
    TorusPoint { n: x.n, m: x.m, coords }
}

/// `<x, a> mod 1`, computed with any rational lift of `x`; the value
/// does not depend on the lift because `a` is integral.
pub fn torus_pair(x: &TorusPoint, a: &[AlgElem]) -> Result<BigRational, ShapeMismatch> {
    if a.len() != x.n {
        return Err(ShapeMismatch(format!(
            "point of rank {} paired with vector of length {}",
            x.n,
            a.len()
        )));
    }
    let mut acc = BigRational::zero();
    for (i, ai) in a.iter().enumerate() {
        assert_eq!(ai.ring(), Ring::Int, "pairing requires integral vectors");
        if ai.semigroup().size() != x.m {
            return Err(ShapeMismatch("vector over a different semigroup size".into()));
        }
        for (t, c) in ai.support() {
            let v = match c {
                crate::scalar::Scalar::Int(v) => v.clone(),
                _ => unreachable!(),
            };
            acc += x.coord(i, t) * BigRational::from(v);
        }
    }
    Ok(reduce_mod_one(&acc))
}

/// Membership in the dual group: every generator column of `G` pairs
/// to zero mod 1.
pub fn membership_check(x: &TorusPoint, j: &ModulePresentation) -> bool {
    let g = z_generator_matrix(j);
    membership_against_matrix(x, &g)
}

pub(crate) fn membership_against_matrix(x: &TorusPoint, g: &ZGeneratorMatrix) -> bool {
    if x.coords.len() != g.rows() {
        return false;
    }
    for col in 0..g.cols() {
        let mut acc = BigRational::zero();
        for (row, coord) in x.coords.iter().enumerate() {
            let v = &g.entries[row][col];
            if !v.is_zero() {
                acc += coord * BigRational::from(v.clone());
            }
        }
        if !acc.is_integer() {
            return false;
        }
    }
    true
}

/// Character evaluation and coordinate re-extraction in one call: the
/// pairing `<x, a>` together with the point recovered by pairing `x`
/// against every basis vector `δ_t e_j`. Round-trip and equivariance
/// identities are checked against these in the test suites.
pub fn phi_roundtrip(
    x: &TorusPoint,
    a: &[AlgElem],
) -> Result<(BigRational, TorusPoint), ShapeMismatch> {
    let value = torus_pair(x, a)?;
    let sg = a
        .first()
        .map(|e| e.semigroup().clone())
        .ok_or_else(|| ShapeMismatch("empty vector".into()))?;
    let mut coords = Vec::with_capacity(x.n * x.m);
    for i in 0..x.n {
        for t in 0..x.m {
            let mut basis = vec![AlgElem::zero(sg.clone(), Ring::Int); x.n];
            basis[i] = AlgElem::delta(sg.clone(), Ring::Int, t);
            coords.push(torus_pair(x, &basis)?);
        }
    }
    Ok((value, TorusPoint::new(x.n, x.m, coords)))
}

/// Result of dual-group enumeration.
#[derive(Debug, Clone)]
pub enum Enumeration {
    Points(Vec<TorusPoint>),
    /// `free_rank > 0`.
    Infinite,
    OverBudget { size: BigInt },
}

/// All points of a finite dual group, sorted lexicographically, or the
/// reason enumeration is impossible.
pub fn enumerate_dual(j: &ModulePresentation, budget: usize) -> Enumeration {
    let g = z_generator_matrix(j);
    let dual = dual_structure_of_matrix(&g);
    match enumerate_residues(&g, &dual, budget) {
        ResidueEnumeration::Infinite => Enumeration::Infinite,
        ResidueEnumeration::OverBudget { size } => Enumeration::OverBudget { size },
        ResidueEnumeration::Points(rp) => {
            let mut points = rp.to_points();
            points.sort();
            Enumeration::Points(points)
        }
    }
}

/// Enumerated points in fixed-denominator residue form: coordinate
/// `(i,s)` of point `p` is `residues[p][i*m + s] / den`.
#[derive(Debug, Clone)]
pub(crate) struct ResiduePoints {
    pub den: i64,
    pub residues: Vec<Vec<i64>>,
    pub n: usize,
    pub m: usize,
}

impl ResiduePoints {
    pub fn to_points(&self) -> Vec<TorusPoint> {
        let den = BigInt::from(self.den);
        self.residues
            .iter()
            .map(|r| {
                TorusPoint::new(
                    self.n,
                    self.m,
                    r.iter()
                        .map(|&c| BigRational::new(BigInt::from(c), den.clone()))
                        .collect(),
                )
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub(crate) enum ResidueEnumeration {
    Points(ResiduePoints),
    Infinite,
    OverBudget { size: BigInt },
}

/// Solves `x^T G ≡ 0 (mod 1)` through the Smith transforms: with
/// `U G V = D`, the substitution `x = U^T y` reduces the system to
/// `y_j d_j ∈ Z`, so each torsion coordinate ranges over multiples of
/// `1/d_j` and free coordinates force an infinite group.
pub(crate) fn enumerate_residues(
    g: &ZGeneratorMatrix,
    dual: &DualGroupStructure,
    budget: usize,
) -> ResidueEnumeration {
    if dual.free_rank > 0 {
        return ResidueEnumeration::Infinite;
    }
    // Enumerations past ~2^31 points are infeasible regardless of the
    // caller's budget, and the i64 residue arithmetic relies on it.
    let cap = BigInt::from(budget.min(1 << 31));
    if dual.torsion_size > cap {
        return ResidueEnumeration::OverBudget { size: dual.torsion_size.clone() };
    }
    let rows = g.rows();
    let diag: Vec<i64> = dual
        .snf
        .diagonal
        .iter()
        .map(|d| d.to_i64().expect("factors bounded by the budget"))
        .collect();
    debug_assert_eq!(diag.len(), rows.min(g.cols()));
    // Common denominator for all coordinates.
    let den = diag.iter().fold(1i64, |acc, &d| acc.lcm(&d));
    // Increment vectors: bumping digit j by one adds row j of U scaled
    // by den/d_j, mod den.
    let digits: Vec<usize> = (0..diag.len()).filter(|&j| diag[j] > 1).collect();
    let adds: Vec<Vec<i64>> = digits
        .iter()
        .map(|&j| {
            let scale = den / diag[j];
            (0..rows)
                .map(|i| {
                    let u = dual.snf.u[j][i].mod_floor(&BigInt::from(den));
                    (u.to_i64().unwrap() * scale).rem_euclid(den)
                })
                .collect()
        })
        .collect();
    let mut counters = vec![0i64; digits.len()];
    let mut current = vec![0i64; rows];
    let mut residues = Vec::new();
    loop {
        residues.push(current.clone());
        // Mixed-radix increment; wrapping a digit from d-1 to 0 is the
        // same as adding its vector once more, since d·add ≡ 0.
        let mut pos = digits.len();
        let mut advanced = false;
        while pos > 0 {
            pos -= 1;
            for (x, a) in current.iter_mut().zip(adds[pos].iter()) {
                *x = (*x + a) % den;
            }
            counters[pos] += 1;
            if counters[pos] < diag[digits[pos]] {
                advanced = true;
                break;
            }
            counters[pos] = 0;
        }
        if !advanced {
            break;
        }
    }
    ResidueEnumeration::Points(ResiduePoints { den, residues, n: g.n, m: g.m })
}
