//! Convolution algebras of a finite semigroup.
//!
//! `AlgElem` is a sparse, finitely supported coefficient map over one
//! of the rings in [`crate::scalar::Ring`]; since the semigroup is
//! finite it plays the role of both an algebra element and a bounded
//! functional. Convolution, the dual convolution, the canonical dual
//! pairing and the norms follow the usual formulas:
//!
//! ```text
//! (a * b)(s)  = sum over rt = s of a(r) b(t)
//! (f ⋆ a)(s)  = sum over t of f(ts) a(t)
//! <f, a>      = sum over t of f(t) a(t)
//! ‖A‖₁        = sum over all entries of ‖a_ij‖₁
//! ```
//!
//! Identity solvers work over the rationals with a canonical reduced
//! echelon elimination, so non-unique objects (left identities, right
//! inverses) come out deterministic.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::linalg::{self, RatMatrix};
use crate::scalar::{Ring, Scalar};
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraError {
    RingMismatch { left: Ring, right: Ring },
    SemigroupMismatch,
    DimensionMismatch { detail: String },
    /// `‖x * a_inv‖₁ >= 1`, the refinement series cannot converge.
    NotContractive { norm: f64 },
    /// The requested tolerance was not reached within the term budget.
    Budget { achieved: f64 },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::RingMismatch { left, right } => {
                write!(f, "ring mismatch: {left} vs {right}")
            }
            AlgebraError::SemigroupMismatch => write!(f, "elements live over different semigroups"),
            AlgebraError::DimensionMismatch { detail } => write!(f, "dimension mismatch: {detail}"),
            AlgebraError::NotContractive { norm } => {
                write!(f, "series not contractive: ‖x·a⁻¹‖₁ = {norm}")
            }
            AlgebraError::Budget { achieved } => {
                write!(f, "term budget exhausted, best residual {achieved}")
            }
        }
    }
}

impl std::error::Error for AlgebraError {}

/// Sparse coefficient map over a finite semigroup.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgElem {
    semigroup: Arc<FiniteSemigroup>,
    ring: Ring,
    coeffs: BTreeMap<usize, Scalar>,
}

fn same_semigroup(a: &Arc<FiniteSemigroup>, b: &Arc<FiniteSemigroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl AlgElem {
    pub fn zero(semigroup: Arc<FiniteSemigroup>, ring: Ring) -> Self {
        AlgElem { semigroup, ring, coeffs: BTreeMap::new() }
    }

    /// The point mass `δ_s`.
    pub fn delta(semigroup: Arc<FiniteSemigroup>, ring: Ring, s: usize) -> Self {
        assert!(s < semigroup.size(), "element index out of range");
        let mut coeffs = BTreeMap::new();
        coeffs.insert(s, Scalar::one(ring));
        AlgElem { semigroup, ring, coeffs }
    }

    /// The characteristic function `1_F`.
    pub fn indicator(semigroup: Arc<FiniteSemigroup>, ring: Ring, set: &[usize]) -> Self {
        let mut coeffs = BTreeMap::new();
        for &s in set {
            assert!(s < semigroup.size(), "element index out of range");
            coeffs.insert(s, Scalar::one(ring));
        }
        AlgElem { semigroup, ring, coeffs }
    }

    pub fn from_coeffs(
        semigroup: Arc<FiniteSemigroup>,
        ring: Ring,
        entries: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Self {
        let mut coeffs = BTreeMap::new();
        for (s, c) in entries {
            assert!(s < semigroup.size(), "element index out of range");
            assert_eq!(c.ring(), ring, "coefficient ring mismatch");
            if !c.is_zero() {
                let slot = coeffs.entry(s).or_insert_with(|| Scalar::zero(ring));
                *slot = &*slot + &c;
                if slot.is_zero() {
                    coeffs.remove(&s);
                }
            }
        }
        AlgElem { semigroup, ring, coeffs }
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_coeffs(
        semigroup: Arc<FiniteSemigroup>,
        ring: Ring,
        entries: &[(usize, i64)],
    ) -> Self {
        Self::from_coeffs(
            semigroup.clone(),
            ring,
            entries.iter().map(|&(s, v)| (s, Scalar::from_int(ring, v))),
        )
    }

    pub fn semigroup(&self) -> &Arc<FiniteSemigroup> {
        &self.semigroup
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeff(&self, s: usize) -> Scalar {
        self.coeffs.get(&s).cloned().unwrap_or_else(|| Scalar::zero(self.ring))
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(&s, c)| (s, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Restriction `f·1_F`: the value of `f` on `F`, zero elsewhere.
    pub fn restrict(&self, set: &[usize]) -> AlgElem {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(s, _)| set.contains(s))
            .map(|(&s, c)| (s, c.clone()))
            .collect();
        AlgElem { semigroup: self.semigroup.clone(), ring: self.ring, coeffs }
    }

    pub fn real_part(&self) -> AlgElem {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&s, c)| (s, c.real_part()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        AlgElem { semigroup: self.semigroup.clone(), ring: self.ring, coeffs }
    }

    /// Lossless ring embedding (`Int -> Rat -> GaussRat`, anything to
    /// floats).
    pub fn promote(&self, target: Ring) -> Option<AlgElem> {
        let mut coeffs = BTreeMap::new();
        for (&s, c) in &self.coeffs {
            coeffs.insert(s, c.promote(target)?);
        }
        Some(AlgElem { semigroup: self.semigroup.clone(), ring: target, coeffs })
    }

    fn compatible(&self, other: &AlgElem) -> Result<(), AlgebraError> {
        if !same_semigroup(&self.semigroup, &other.semigroup) {
            return Err(AlgebraError::SemigroupMismatch);
        }
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch { left: self.ring, right: other.ring });
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgElem) -> Result<AlgElem, AlgebraError> {
        self.compatible(other)?;
        let mut coeffs = self.coeffs.clone();
        for (&s, c) in &other.coeffs {
            let slot = coeffs.entry(s).or_insert_with(|| Scalar::zero(self.ring));
            *slot = &*slot + c;
            if slot.is_zero() {
                coeffs.remove(&s);
            }
        }
        Ok(AlgElem { semigroup: self.semigroup.clone(), ring: self.ring, coeffs })
    }

    pub fn sub(&self, other: &AlgElem) -> Result<AlgElem, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgElem {
        let coeffs = self.coeffs.iter().map(|(&s, c)| (s, -c)).collect();
        AlgElem { semigroup: self.semigroup.clone(), ring: self.ring, coeffs }
    }

    pub fn scale(&self, factor: &Scalar) -> AlgElem {
        assert_eq!(factor.ring(), self.ring, "scale factor ring mismatch");
        if factor.is_zero() {
            return AlgElem::zero(self.semigroup.clone(), self.ring);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&s, c)| (s, c * factor))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        AlgElem { semigroup: self.semigroup.clone(), ring: self.ring, coeffs }
    }

    /// Convolution `(a * b)(s) = Σ_{rt=s} a(r) b(t)`.
    pub fn convolve(&self, other: &AlgElem) -> Result<AlgElem, AlgebraError> {
        self.compatible(other)?;
        let sg = &self.semigroup;
        let mut coeffs: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (r, ar) in &self.coeffs {
            for (t, bt) in &other.coeffs {
                let s = sg.mul(*r, *t);
                let term = ar * bt;
                let slot = coeffs.entry(s).or_insert_with(|| Scalar::zero(self.ring));
                *slot = &*slot + &term;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(AlgElem { semigroup: sg.clone(), ring: self.ring, coeffs })
    }

    /// Dual convolution `(f ⋆ a)(s) = Σ_t f(ts) a(t)`.
    pub fn dual_convolve(&self, a: &AlgElem) -> Result<AlgElem, AlgebraError> {
        self.compatible(a)?;
        let sg = &self.semigroup;
        let m = sg.size();
        let mut coeffs = BTreeMap::new();
        for s in 0..m {
            let mut acc = Scalar::zero(self.ring);
            for (t, at) in &a.coeffs {
                let fts = self.coeffs.get(&sg.mul(*t, s));
                if let Some(f) = fts {
                    acc = &acc + &(f * at);
                }
            }
            if !acc.is_zero() {
                coeffs.insert(s, acc);
            }
        }
        Ok(AlgElem { semigroup: sg.clone(), ring: self.ring, coeffs })
    }

    /// Canonical dual pairing `<f, a> = Σ_t f(t) a(t)`.
    pub fn dual_pair(&self, a: &AlgElem) -> Result<Scalar, AlgebraError> {
        self.compatible(a)?;
        let mut acc = Scalar::zero(self.ring);
        for (t, ft) in &self.coeffs {
            if let Some(at) = a.coeffs.get(t) {
                acc = &acc + &(ft * at);
            }
        }
        Ok(acc)
    }

    /// `‖a‖₁` as an exact rational; for Gaussian rationals this is the
    /// `|re|+|im|` upper bound. `None` on floats.
    pub fn l1_norm_exact(&self) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for c in self.coeffs.values() {
            acc += c.abs_exact_upper()?;
        }
        Some(acc)
    }

    pub fn l1_norm_f64(&self) -> f64 {
        self.coeffs.values().map(Scalar::abs_f64).sum()
    }

    /// `‖f‖∞` (same exactness caveats as [`AlgElem::l1_norm_exact`]).
    pub fn linf_norm_exact(&self) -> Option<BigRational> {
        let mut best = BigRational::zero();
        for c in self.coeffs.values() {
            let v = c.abs_exact_upper()?;
            if v > best {
                best = v;
            }
        }
        Some(best)
    }

    pub fn linf_norm_f64(&self) -> f64 {
        self.coeffs.values().map(Scalar::abs_f64).fold(0.0, f64::max)
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (s, c) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({c})δ_{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// Dense matrix of algebra elements over a common semigroup and ring.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgMat {
    rows: usize,
    cols: usize,
    entries: Vec<AlgElem>,
}

impl AlgMat {
    pub fn zero(semigroup: Arc<FiniteSemigroup>, ring: Ring, rows: usize, cols: usize) -> Self {
        let entries = (0..rows * cols)
            .map(|_| AlgElem::zero(semigroup.clone(), ring))
            .collect();
        AlgMat { rows, cols, entries }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<AlgElem>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        assert!(!entries.is_empty(), "matrices must be non-empty");
        let sg = entries[0].semigroup().clone();
        let ring = entries[0].ring();
        for e in &entries {
            assert!(same_semigroup(e.semigroup(), &sg), "entries over different semigroups");
            assert_eq!(e.ring(), ring, "entries over different rings");
        }
        AlgMat { rows, cols, entries }
    }

    /// Diagonal matrix with copies of `e` on the diagonal.
    pub fn diagonal(e: &AlgElem, n: usize) -> Self {
        let mut mat = AlgMat::zero(e.semigroup().clone(), e.ring(), n, n);
        for i in 0..n {
            mat.set_entry(i, i, e.clone());
        }
        mat
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &AlgElem {
        &self.entries[i * self.cols + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, e: AlgElem) {
        assert!(same_semigroup(e.semigroup(), self.semigroup()), "semigroup mismatch");
        assert_eq!(e.ring(), self.ring(), "ring mismatch");
        self.entries[i * self.cols + j] = e;
    }

    pub fn semigroup(&self) -> &Arc<FiniteSemigroup> {
        self.entries[0].semigroup()
    }

    pub fn ring(&self) -> Ring {
        self.entries[0].ring()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(AlgElem::is_zero)
    }

    pub fn real_part(&self) -> AlgMat {
        AlgMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(AlgElem::real_part).collect(),
        }
    }

    pub fn promote(&self, target: Ring) -> Option<AlgMat> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.promote(target))
            .collect::<Option<Vec<_>>>()?;
        Some(AlgMat { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, factor: &Scalar) -> AlgMat {
        AlgMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(factor)).collect(),
        }
    }

    pub fn add(&self, other: &AlgMat) -> Result<AlgMat, AlgebraError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgebraError::DimensionMismatch {
                detail: format!(
                    "{}x{} + {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AlgMat { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &AlgMat) -> Result<AlgMat, AlgebraError> {
        self.add(&other.scale(&Scalar::from_int(other.ring(), -1)))
    }

    /// Matrix product with convolution entries:
    /// `(A * B)(i,j) = Σ_h a_ih * b_hj`.
    pub fn mat_mul(&self, other: &AlgMat) -> Result<AlgMat, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch {
                detail: format!(
                    "{}x{} * {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let sg = self.semigroup().clone();
        let ring = self.ring();
        let mut out = AlgMat::zero(sg.clone(), ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = AlgElem::zero(sg.clone(), ring);
                for h in 0..self.cols {
                    let term = self.entry(i, h).convolve(other.entry(h, j))?;
                    acc = acc.add(&term)?;
                }
                out.set_entry(i, j, acc);
            }
        }
        Ok(out)
    }

    /// `A * b` for a column vector `b` of length `cols`.
    pub fn apply_vec(&self, b: &[AlgElem]) -> Result<Vec<AlgElem>, AlgebraError> {
        if b.len() != self.cols {
            return Err(AlgebraError::DimensionMismatch {
                detail: format!("matrix {}x{} applied to vector {}", self.rows, self.cols, b.len()),
            });
        }
        let sg = self.semigroup().clone();
        let ring = self.ring();
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = AlgElem::zero(sg.clone(), ring);
            for (j, bj) in b.iter().enumerate() {
                acc = acc.add(&self.entry(i, j).convolve(bj)?)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// `‖A‖₁ = Σ_{i,j} ‖a_ij‖₁` (the entrywise sum).
    pub fn l1_norm_exact(&self) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for e in &self.entries {
            acc += e.l1_norm_exact()?;
        }
        Some(acc)
    }

    pub fn l1_norm_f64(&self) -> f64 {
        self.entries.iter().map(AlgElem::l1_norm_f64).sum()
    }
}

/// Row functional vector applied on the right: `(f ⋆ A)_j = Σ_i f_i ⋆ a_ij`.
pub fn dual_apply_vec(f: &[AlgElem], a: &AlgMat) -> Result<Vec<AlgElem>, AlgebraError> {
    if f.len() != a.rows() {
        return Err(AlgebraError::DimensionMismatch {
            detail: format!("functional vector {} against matrix {}x{}", f.len(), a.rows(), a.cols()),
        });
    }
    let sg = a.semigroup().clone();
    let ring = a.ring();
    let mut out = Vec::with_capacity(a.cols());
    for j in 0..a.cols() {
        let mut acc = AlgElem::zero(sg.clone(), ring);
        for (i, fi) in f.iter().enumerate() {
            acc = acc.add(&fi.dual_convolve(a.entry(i, j))?)?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// `<f, b> = Σ_i <f_i, b_i>` for equal-length vectors.
pub fn pair_vec(f: &[AlgElem], b: &[AlgElem]) -> Result<Scalar, AlgebraError> {
    if f.len() != b.len() {
        return Err(AlgebraError::DimensionMismatch {
            detail: format!("paired vectors of lengths {} and {}", f.len(), b.len()),
        });
    }
    let mut acc = Scalar::zero(f[0].ring());
    for (fi, bi) in f.iter().zip(b.iter()) {
        acc = &acc + &fi.dual_pair(bi)?;
    }
    Ok(acc)
}

/// Matrix of the left-convolution operator `b ↦ A * b` in the point-mass
/// basis: column `(j, t)` is the flattening of `A * (δ_t e_j)`, with
/// coordinate-major flattening `(i, s) ↦ i·m + s`.
pub fn convolution_operator_matrix(a: &AlgMat) -> RatMatrix {
    let sg = a.semigroup();
    let m = sg.size();
    let rows = a.rows() * m;
    let mut out = vec![vec![BigRational::zero(); a.cols() * m]; rows];
    for j in 0..a.cols() {
        for t in 0..m {
            let col = j * m + t;
            for i in 0..a.rows() {
                // A * (δ_t e_j) has i-th coordinate a_ij * δ_t.
                for (r, c) in a.entry(i, j).support() {
                    let s = sg.mul(r, t);
                    let v = c.as_rational().expect("exact ring required");
                    out[i * m + s][col] += v;
                }
            }
        }
    }
    out
}

/// Solves `e * δ_s = δ_s` for all `s` over the rationals (and
/// `δ_s * e = δ_s` too when `two_sided`). Returns the canonical
/// particular solution, or `None` when the system is inconsistent —
/// which decides (left) identity existence in the whole complex
/// convolution algebra, the data being rational.
pub fn solve_left_identity(
    semigroup: &Arc<FiniteSemigroup>,
    two_sided: bool,
) -> Option<AlgElem> {
    let m = semigroup.size();
    // Row per constraint (s, u): Σ_{r: rs=u} e(r) = [u = s].
    // Duplicate rows are merged; contradictory duplicates fail fast.
    let mut rows: HashMap<Vec<u8>, bool> = HashMap::new();
    let mut push_row = |coeffs: Vec<u8>, rhs: bool| -> bool {
        match rows.get(&coeffs) {
            Some(&old) if old != rhs => false,
            Some(_) => true,
            None => {
                rows.insert(coeffs, rhs);
                true
            }
        }
    };
    for s in 0..m {
        for u in 0..m {
            let mut coeffs = vec![0u8; m];
            for r in 0..m {
                if semigroup.mul(r, s) == u {
                    coeffs[r] += 1;
                }
            }
            if !push_row(coeffs, u == s) {
                return None;
            }
        }
    }
    if two_sided {
        for s in 0..m {
            for u in 0..m {
                let mut coeffs = vec![0u8; m];
                for t in 0..m {
                    if semigroup.mul(s, t) == u {
                        coeffs[t] += 1;
                    }
                }
                if !push_row(coeffs, u == s) {
                    return None;
                }
            }
        }
    }
    let mut row_list: Vec<(Vec<u8>, bool)> = rows.into_iter().collect();
    row_list.sort();
    let mat: RatMatrix = row_list
        .iter()
        .map(|(coeffs, _)| {
            coeffs.iter().map(|&c| BigRational::from(BigInt::from(c))).collect()
        })
        .collect();
    let rhs: Vec<BigRational> = row_list
        .iter()
        .map(|(_, r)| if *r { BigRational::one() } else { BigRational::zero() })
        .collect();
    let solution = linalg::solve_columns(&mat, &[rhs])?.swap_remove(0);
    Some(AlgElem::from_coeffs(
        semigroup.clone(),
        Ring::Rat,
        solution
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(s, v)| (s, Scalar::Rat(v))),
    ))
}

/// Solves `A * X = E` exactly over the rationals; `X` has shape
/// `A.cols x E.cols`. Canonical particular solution or `None`.
pub fn right_inverse_solve(a: &AlgMat, e: &AlgMat) -> Result<Option<AlgMat>, AlgebraError> {
    if !same_semigroup(a.semigroup(), e.semigroup()) {
        return Err(AlgebraError::SemigroupMismatch);
    }
    if a.rows() != e.rows() {
        return Err(AlgebraError::DimensionMismatch {
            detail: format!("A has {} rows, E has {}", a.rows(), e.rows()),
        });
    }
    let sg = a.semigroup().clone();
    let m = sg.size();
    let a_rat = a.promote(Ring::Rat).expect("exact ring required");
    let e_rat = e.promote(Ring::Rat).expect("exact ring required");
    let system = convolution_operator_matrix(&a_rat);
    let rhs: Vec<Vec<BigRational>> = (0..e.cols())
        .map(|j| {
            let mut col = vec![BigRational::zero(); a.rows() * m];
            for i in 0..e.rows() {
                for (s, c) in e_rat.entry(i, j).support() {
                    col[i * m + s] = c.as_rational().unwrap();
                }
            }
            col
        })
        .collect();
    let Some(solutions) = linalg::solve_columns(&system, &rhs) else {
        return Ok(None);
    };
    let mut x = AlgMat::zero(sg.clone(), Ring::Rat, a.cols(), e.cols());
    for (j, sol) in solutions.iter().enumerate() {
        for h in 0..a.cols() {
            let coeffs = (0..m)
                .map(|t| (t, Scalar::Rat(sol[h * m + t].clone())))
                .filter(|(_, c)| !c.is_zero());
            x.set_entry(h, j, AlgElem::from_coeffs(sg.clone(), Ring::Rat, coeffs));
        }
    }
    Ok(Some(x))
}

/// Truncated series `S_N = a⁻¹ + Σ_{k=1..N} a⁻¹ (x a⁻¹)^k`, stopped
/// once the geometric tail bound `q^{N+1}/(1-q)` with
/// `q = ‖x a⁻¹‖₁` falls under `tol` and the measured residual
/// `‖(a-x) S_N - e‖₁` does too.
pub fn neumann_refine(
    a: &AlgMat,
    x: &AlgMat,
    a_inv: &AlgMat,
    e: &AlgMat,
    tol: f64,
    max_terms: usize,
) -> Result<AlgMat, AlgebraError> {
    assert_eq!(a.ring(), Ring::Float64Complex, "refinement runs on the float ring");
    let p = x.mat_mul(a_inv)?;
    let q = p.l1_norm_f64();
    if q >= 1.0 {
        return Err(AlgebraError::NotContractive { norm: q });
    }
    let a_minus_x = a.sub(x)?;
    let residual = |s: &AlgMat| -> Result<f64, AlgebraError> {
        Ok(a_minus_x.mat_mul(s)?.sub(e)?.l1_norm_f64())
    };
    let mut series = a_inv.clone();
    let mut power = p.clone();
    let mut best = f64::INFINITY;
    for n in 0..=max_terms {
        let tail = q.powi(n as i32 + 1) / (1.0 - q);
        if tail <= tol {
            let r = residual(&series)?;
            best = best.min(r);
            if r <= tol {
                return Ok(series);
            }
        }
        if n == max_terms {
            break;
        }
        series = series.add(&a_inv.mat_mul(&power)?)?;
        power = power.mat_mul(&p)?;
    }
    Err(AlgebraError::Budget { achieved: best })
}
