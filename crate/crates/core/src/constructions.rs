//! Constructors for the semigroup families used throughout: Rees
//! matrix semigroups over a finite group with a sandwich matrix,
//! disjoint unions glued along an absorbing zero, identities of
//! inverse semigroups, and a library of named one-parameter families.
//!
//! The Rees element set is `{z} ∪ I × G × Λ` with
//! `(i,g,λ)(j,h,μ) = (i, g·p_{λj}·h, μ)` and zero absorption when the
//! sandwich entry vanishes. The report flags are decided at the level
//! of the sandwich matrix: expansivity needs one nonzero entry, an
//! idempotent cover needs one per column, and unitality of the
//! summable algebra needs a square sandwich that is invertible over
//! the rational group algebra (tested through the left regular
//! representation and an exact determinant).

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{self, AlgElem, AlgMat};
use crate::linalg;
use crate::rng::SplitMix64;
use crate::scalar::{Ring, Scalar};
use crate::semigroup::{self, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    InvalidGroup(String),
    NotInverse,
    /// Contradicts the finite-idempotent identity construction; kept
    /// as an internal consistency failure.
    IdentitySolveFailed,
    UnknownFamily(String),
    BadSpec(String),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::InvalidGroup(d) => write!(f, "not a group: {d}"),
            ConstructError::NotInverse => write!(f, "semigroup is not inverse"),
            ConstructError::IdentitySolveFailed => write!(f, "identity solve failed"),
            ConstructError::UnknownFamily(name) => write!(f, "unknown family {name:?}"),
            ConstructError::BadSpec(d) => write!(f, "bad specification: {d}"),
        }
    }
}

impl std::error::Error for ConstructError {}

/// Rees matrix data: a finite group, index sets, and the `Λ × I`
/// sandwich matrix over `G ∪ {0}` (`None` encodes the zero).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesSpec {
    pub group: FiniteSemigroup,
    #[serde(rename = "I")]
    pub index_size: usize,
    #[serde(rename = "Lambda")]
    pub lambda_size: usize,
    #[serde(rename = "P")]
    pub sandwich: Vec<Vec<Option<usize>>>,
}

impl ReesSpec {
    pub fn validate(&self) -> Result<(), ConstructError> {
        let flags = semigroup::classify(&self.group);
        if !flags.is_monoid || !flags.is_cancellative {
            return Err(ConstructError::InvalidGroup(
                "the base semigroup must be a finite group".into(),
            ));
        }
        if self.index_size == 0 || self.lambda_size == 0 {
            return Err(ConstructError::BadSpec("index sets must be non-empty".into()));
        }
        if self.sandwich.len() != self.lambda_size
            || self.sandwich.iter().any(|row| row.len() != self.index_size)
        {
            return Err(ConstructError::BadSpec("sandwich matrix must be Λ × I".into()));
        }
        for row in &self.sandwich {
            for entry in row.iter().flatten() {
                if *entry >= self.group.size() {
                    return Err(ConstructError::BadSpec(format!(
                        "sandwich entry {entry} outside the group"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Index of `(i, g, λ)` in the built table; `0` is the zero.
    pub fn element_index(&self, i: usize, g: usize, lambda: usize) -> usize {
        1 + (i * self.group.size() + g) * self.lambda_size + lambda
    }

    pub fn built_size(&self) -> usize {
        1 + self.index_size * self.group.size() * self.lambda_size
    }
}

/// Builds the Rees matrix semigroup with zero.
pub fn rees_build(spec: &ReesSpec) -> Result<FiniteSemigroup, ConstructError> {
    spec.validate()?;
    let size = spec.built_size();
    let gsize = spec.group.size();
    let mut table = vec![vec![0usize; size]; size];
    for i in 0..spec.index_size {
        for g in 0..gsize {
            for lambda in 0..spec.lambda_size {
                let left = spec.element_index(i, g, lambda);
                for j in 0..spec.index_size {
                    for h in 0..gsize {
                        for mu in 0..spec.lambda_size {
                            let right = spec.element_index(j, h, mu);
                            table[left][right] = match spec.sandwich[lambda][j] {
                                None => 0,
                                Some(p) => {
                                    let prod = spec.group.mul(spec.group.mul(g, p), h);
                                    spec.element_index(i, prod, mu)
                                }
                            };
                        }
                    }
                }
            }
        }
    }
    FiniteSemigroup::validate_table(size, table)
        .map_err(|e| ConstructError::BadSpec(format!("rees table failed validation: {e}")))
}

/// Sandwich-level criteria for the built semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesReport {
    /// Some sandwich entry is nonzero.
    pub expansive: bool,
    /// Every column of the sandwich has a nonzero entry.
    pub idempotent_cover: bool,
    /// Square sandwich, invertible over the rational group algebra.
    pub unital_l1: bool,
}

pub fn rees_report(spec: &ReesSpec) -> Result<ReesReport, ConstructError> {
    spec.validate()?;
    let expansive = spec.sandwich.iter().flatten().any(Option::is_some);
    let idempotent_cover = (0..spec.index_size)
        .all(|i| (0..spec.lambda_size).any(|l| spec.sandwich[l][i].is_some()));
    let unital_l1 = spec.index_size == spec.lambda_size && {
        let gsize = spec.group.size();
        let dim = spec.lambda_size * gsize;
        // Left regular representation: p acts by g ↦ pg, a zero entry
        // by the zero block.
        let mut block = vec![vec![BigInt::zero(); dim]; dim];
        for (lambda, row) in spec.sandwich.iter().enumerate() {
            for (i, entry) in row.iter().enumerate() {
                if let Some(p) = entry {
                    for g in 0..gsize {
                        let h = spec.group.mul(*p, g);
                        block[lambda * gsize + h][i * gsize + g] = BigInt::one();
                    }
                }
            }
        }
        !linalg::determinant(&block).is_zero()
    };
    Ok(ReesReport { expansive, idempotent_cover, unital_l1 })
}

/// The matrix-algebra picture of the quotient by the zero ray: `a`
/// supported off `z` corresponds to `A ∈ M_{I×Λ}` over the group
/// algebra with `A_{iλ} = Σ_g a(i,g,λ) δ_g`, and multiplication
/// becomes `A·B = A P B`. The spot check convolves in the semigroup,
/// projects the zero coordinate away, and compares.
pub fn rees_iso_spot_check(
    spec: &ReesSpec,
    built: &Arc<FiniteSemigroup>,
    rng: &mut SplitMix64,
    samples: usize,
) -> Result<bool, ConstructError> {
    spec.validate()?;
    let group = spec.group.clone().into_shared();
    let gsize = group.size();
    let to_matrix = |elem: &AlgElem| -> AlgMat {
        let mut mat = AlgMat::zero(group.clone(), Ring::Rat, spec.index_size, spec.lambda_size);
        for i in 0..spec.index_size {
            for lambda in 0..spec.lambda_size {
                let coeffs: Vec<(usize, Scalar)> = (0..gsize)
                    .map(|g| {
                        (g, elem.coeff(spec.element_index(i, g, lambda)))
                    })
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                mat.set_entry(i, lambda, AlgElem::from_coeffs(group.clone(), Ring::Rat, coeffs));
            }
        }
        mat
    };
    let mut sandwich_mat = AlgMat::zero(group.clone(), Ring::Rat, spec.lambda_size, spec.index_size);
    for (lambda, row) in spec.sandwich.iter().enumerate() {
        for (i, entry) in row.iter().enumerate() {
            if let Some(p) = entry {
                sandwich_mat.set_entry(lambda, i, AlgElem::delta(group.clone(), Ring::Rat, *p));
            }
        }
    }

    let size = built.size();
    let random_off_zero = |rng: &mut SplitMix64| {
        let coeffs: Vec<(usize, i64)> = (0..3)
            .map(|_| (1 + rng.below(size - 1), rng.range_i64(-2, 2)))
            .collect();
        AlgElem::from_int_coeffs(built.clone(), Ring::Rat, &coeffs)
    };
    for _ in 0..samples {
        let a = random_off_zero(rng);
        let b = random_off_zero(rng);
        let conv = a.convolve(&b).expect("same semigroup");
        let projected = conv.restrict(&(1..size).collect::<Vec<_>>());
        let product = to_matrix(&a)
            .mat_mul(&sandwich_mat)
            .and_then(|ap| ap.mat_mul(&to_matrix(&b)))
            .expect("shapes agree");
        let mut back = AlgElem::zero(built.clone(), Ring::Rat);
        for i in 0..spec.index_size {
            for lambda in 0..spec.lambda_size {
                let coeffs: Vec<(usize, Scalar)> = product
                    .entry(i, lambda)
                    .support()
                    .map(|(g, c)| (spec.element_index(i, g, lambda), c.clone()))
                    .collect();
                back = back
                    .add(&AlgElem::from_coeffs(built.clone(), Ring::Rat, coeffs))
                    .expect("same semigroup");
            }
        }
        if back != projected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Disjoint union with a fresh absorbing zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionSpec {
    pub components: Vec<FiniteSemigroup>,
}

/// The built union along with the component embeddings.
#[derive(Debug, Clone)]
pub struct UnionBuild {
    pub semigroup: Arc<FiniteSemigroup>,
    /// Element offsets of the components; the zero sits at index 0.
    pub offsets: Vec<usize>,
    /// `(1-n)·δ_z + Σ eᵢ` when every component algebra has a left
    /// identity, verified by direct convolution on all point masses.
    pub left_identity: Option<AlgElem>,
}

pub fn union_build(spec: &UnionSpec) -> Result<UnionBuild, ConstructError> {
    let n = spec.components.len();
    if n < 2 {
        return Err(ConstructError::BadSpec("a union needs at least two components".into()));
    }
    let mut offsets = Vec::with_capacity(n);
    let mut size = 1usize;
    for c in &spec.components {
        offsets.push(size);
        size += c.size();
    }
    let mut table = vec![vec![0usize; size]; size];
    for (idx, c) in spec.components.iter().enumerate() {
        let off = offsets[idx];
        for s in 0..c.size() {
            for t in 0..c.size() {
                table[off + s][off + t] = off + c.mul(s, t);
            }
        }
    }
    let semigroup = FiniteSemigroup::validate_table(size, table)
        .map_err(|e| ConstructError::BadSpec(format!("union table failed validation: {e}")))?
        .into_shared();

    let mut identity_parts = Vec::with_capacity(n);
    let mut all_present = true;
    for (idx, c) in spec.components.iter().enumerate() {
        let shared = c.clone().into_shared();
        match algebra::solve_left_identity(&shared, false) {
            Some(e) => {
                let embedded = AlgElem::from_coeffs(
                    semigroup.clone(),
                    Ring::Rat,
                    e.support().map(|(s, cf)| (offsets[idx] + s, cf.clone())),
                );
                identity_parts.push(embedded);
            }
            None => {
                all_present = false;
                break;
            }
        }
    }
    let left_identity = if all_present {
        let mut e = AlgElem::from_coeffs(
            semigroup.clone(),
            Ring::Rat,
            [(
                0usize,
                Scalar::Rat(BigRational::from(BigInt::from(1 - n as i64))),
            )],
        );
        for part in &identity_parts {
            e = e.add(part).expect("same semigroup");
        }
        let verified = (0..size).all(|s| {
            let delta = AlgElem::delta(semigroup.clone(), Ring::Rat, s);
            e.convolve(&delta).map(|p| p == delta).unwrap_or(false)
        });
        verified.then_some(e)
    } else {
        None
    };
    Ok(UnionBuild { semigroup, offsets, left_identity })
}

/// Two-sided identity of the convolution algebra of an inverse
/// semigroup: solved on the idempotent subalgebra, extended by zero,
/// and verified on every point mass.
pub fn inverse_semigroup_identity(
    sg: &Arc<FiniteSemigroup>,
) -> Result<AlgElem, ConstructError> {
    let flags = semigroup::classify(sg);
    if !flags.is_inverse {
        return Err(ConstructError::NotInverse);
    }
    let idems = flags.idempotents;
    // Idempotents of an inverse semigroup are closed under products.
    let sub_table: Vec<Vec<usize>> = idems
        .iter()
        .map(|&e| {
            idems
                .iter()
                .map(|&f| {
                    idems
                        .iter()
                        .position(|&g| g == sg.mul(e, f))
                        .expect("idempotents are closed under multiplication")
                })
                .collect()
        })
        .collect();
    let sub = FiniteSemigroup::validate_table(idems.len(), sub_table)
        .expect("subsemigroup inherits associativity")
        .into_shared();
    let Some(sub_identity) = algebra::solve_left_identity(&sub, true) else {
        return Err(ConstructError::IdentitySolveFailed);
    };
    let extended = AlgElem::from_coeffs(
        sg.clone(),
        Ring::Rat,
        sub_identity.support().map(|(local, c)| (idems[local], c.clone())),
    );
    for s in 0..sg.size() {
        let delta = AlgElem::delta(sg.clone(), Ring::Rat, s);
        let left = extended.convolve(&delta).expect("same semigroup");
        let right = delta.convolve(&extended).expect("same semigroup");
        if left != delta || right != delta {
            return Err(ConstructError::IdentitySolveFailed);
        }
    }
    Ok(extended)
}

/// Named family constructors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum FamilySpec {
    CyclicGroup { m: usize },
    LeftZero { m: usize },
    RightZero { m: usize },
    /// `m` elements, every product equal to the zero at index 0.
    NullWithZero { m: usize },
    /// `{1, …, m}` under minimum; a monoid with identity `m`.
    TruncMin { m: usize },
    DirectProduct { left: Box<FamilySpec>, right: Box<FamilySpec> },
}

pub fn family(spec: &FamilySpec) -> Result<FiniteSemigroup, ConstructError> {
    let build = |m: usize, f: &dyn Fn(usize, usize) -> usize| {
        let table = (0..m).map(|a| (0..m).map(|b| f(a, b)).collect()).collect();
        FiniteSemigroup::validate_table(m, table)
            .map_err(|e| ConstructError::BadSpec(format!("family table invalid: {e}")))
    };
    match spec {
        FamilySpec::CyclicGroup { m } => {
            require_positive(*m)?;
            build(*m, &|a, b| (a + b) % m)
        }
        FamilySpec::LeftZero { m } => {
            require_positive(*m)?;
            build(*m, &|a, _| a)
        }
        FamilySpec::RightZero { m } => {
            require_positive(*m)?;
            build(*m, &|_, b| b)
        }
        FamilySpec::NullWithZero { m } => {
            require_positive(*m)?;
            build(*m, &|_, _| 0)
        }
        FamilySpec::TruncMin { m } => {
            require_positive(*m)?;
            build(*m, &|a, b| a.min(b))
        }
        FamilySpec::DirectProduct { left, right } => {
            let l = family(left)?;
            let r = family(right)?;
            Ok(direct_product(&l, &r))
        }
    }
}

/// Family lookup by plain name, for textual front ends.
pub fn family_by_name(name: &str, m: usize) -> Result<FiniteSemigroup, ConstructError> {
    let spec = match name {
        "cyclic_group" => FamilySpec::CyclicGroup { m },
        "left_zero" => FamilySpec::LeftZero { m },
        "right_zero" => FamilySpec::RightZero { m },
        "null_with_zero" => FamilySpec::NullWithZero { m },
        "trunc_min" => FamilySpec::TruncMin { m },
        other => return Err(ConstructError::UnknownFamily(other.to_string())),
    };
    family(&spec)
}

pub fn direct_product(a: &FiniteSemigroup, b: &FiniteSemigroup) -> FiniteSemigroup {
    let (ma, mb) = (a.size(), b.size());
    let table = (0..ma * mb)
        .map(|x| {
            let (xa, xb) = (x / mb, x % mb);
            (0..ma * mb)
                .map(|y| {
                    let (ya, yb) = (y / mb, y % mb);
                    a.mul(xa, ya) * mb + b.mul(xb, yb)
                })
                .collect()
        })
        .collect();
    FiniteSemigroup::validate_table(ma * mb, table).expect("product of semigroups is associative")
}

fn require_positive(m: usize) -> Result<(), ConstructError> {
    if m == 0 {
        return Err(ConstructError::BadSpec("family size must be positive".into()));
    }
    Ok(())
}
