//! Finite semigroups given by explicit multiplication tables.
//!
//! A semigroup of size `m` is stored as an `m x m` grid of element
//! indices, `table[s][t] = st`, validated for associativity at
//! construction. The element enumeration is the construction order
//! `0..m` and is frozen: the metric on the dual torus and the derived
//! separation constants are defined relative to it.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// Errors raised while validating a multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    /// A table entry is not an element index in `[0, m)`.
    OutOfRange { row: usize, col: usize, entry: usize },
    /// `(ab)c != a(bc)` for the given triple.
    NotAssociative { a: usize, b: usize, c: usize },
    /// The grid is not `m x m`.
    BadShape { expected: usize, row: usize, got: usize },
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupError::OutOfRange { row, col, entry } => {
                write!(f, "table[{row}][{col}] = {entry} is out of range")
            }
            SemigroupError::NotAssociative { a, b, c } => {
                write!(f, "associativity fails at ({a}, {b}, {c})")
            }
            SemigroupError::BadShape { expected, row, got } => {
                write!(f, "row {row} has {got} entries, expected {expected}")
            }
        }
    }
}

impl std::error::Error for SemigroupError {}

/// A finite semigroup with a fixed element enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTable", into = "RawTable")]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<Vec<usize>>,
}

/// Wire form of a semigroup: `{"size": m, "table": [[..], ..]}`.
#[derive(Serialize, Deserialize)]
struct RawTable {
    size: usize,
    table: Vec<Vec<usize>>,
}

impl TryFrom<RawTable> for FiniteSemigroup {
    type Error = SemigroupError;
    fn try_from(raw: RawTable) -> Result<Self, Self::Error> {
        FiniteSemigroup::validate_table(raw.size, raw.table)
    }
}

impl From<FiniteSemigroup> for RawTable {
    fn from(s: FiniteSemigroup) -> Self {
        RawTable { size: s.size, table: s.table }
    }
}

impl FiniteSemigroup {
    /// Validates an `m x m` grid as a semigroup table.
    ///
    /// Associativity is checked exhaustively over all `m^3` triples;
    /// the first failing triple is reported.
    pub fn validate_table(size: usize, table: Vec<Vec<usize>>) -> Result<Self, SemigroupError> {
        if table.len() != size {
            return Err(SemigroupError::BadShape { expected: size, row: usize::MAX, got: table.len() });
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(SemigroupError::BadShape { expected: size, row: r, got: row.len() });
            }
            for (c, &entry) in row.iter().enumerate() {
                if entry >= size {
                    return Err(SemigroupError::OutOfRange { row: r, col: c, entry });
                }
            }
        }
        for a in 0..size {
            for b in 0..size {
                let ab = table[a][b];
                for c in 0..size {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(SemigroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(FiniteSemigroup { size, table })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The product `st`.
    #[inline]
    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s][t]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.size
    }

    /// The product set `SS = {st : s,t in S}`, as a sorted list.
    pub fn product_set(&self) -> Vec<usize> {
        let mut seen = vec![false; self.size];
        for s in 0..self.size {
            for t in 0..self.size {
                seen[self.table[s][t]] = true;
            }
        }
        (0..self.size).filter(|&u| seen[u]).collect()
    }

    /// Whether `SS = S`.
    pub fn is_surjective_product(&self) -> bool {
        self.product_set().len() == self.size
    }

    /// Shared handle used by algebra elements referring to this semigroup.
    pub fn into_shared(self) -> Arc<FiniteSemigroup> {
        Arc::new(self)
    }
}

/// Structural predicates of a finite semigroup, computed exhaustively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFlags {
    pub is_monoid: bool,
    pub has_left_identity_element: bool,
    pub is_cancellative: bool,
    pub is_regular: bool,
    pub is_inverse: bool,
    /// Sorted list of idempotent elements.
    pub idempotents: Vec<usize>,
}

/// Computes all structural flags by exhaustive table checks.
pub fn classify(s: &FiniteSemigroup) -> StructureFlags {
    let m = s.size();
    let idempotents: Vec<usize> = (0..m).filter(|&e| s.mul(e, e) == e).collect();

    let is_left_identity = |e: usize| (0..m).all(|t| s.mul(e, t) == t);
    let is_right_identity = |e: usize| (0..m).all(|t| s.mul(t, e) == t);
    let has_left_identity_element = (0..m).any(is_left_identity);
    let is_monoid = (0..m).any(|e| is_left_identity(e) && is_right_identity(e));

    let left_cancellative =
        (0..m).all(|r| (0..m).all(|a| (0..m).all(|b| a == b || s.mul(r, a) != s.mul(r, b))));
    let right_cancellative =
        (0..m).all(|r| (0..m).all(|a| (0..m).all(|b| a == b || s.mul(a, r) != s.mul(b, r))));
    let is_cancellative = left_cancellative && right_cancellative;

    let is_regular = (0..m).all(|a| {
        (0..m).any(|x| s.mul(s.mul(a, x), a) == a && s.mul(s.mul(x, a), x) == x)
    });
    let idempotents_commute = idempotents
        .iter()
        .all(|&e| idempotents.iter().all(|&f| s.mul(e, f) == s.mul(f, e)));
    let is_inverse = is_regular && idempotents_commute;

    StructureFlags {
        is_monoid,
        has_left_identity_element,
        is_cancellative,
        is_regular,
        is_inverse,
        idempotents,
    }
}

/// A finite subset `K` with `KS = S`, together with whether the
/// minimality search completed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeftCover {
    /// Sorted element indices.
    pub elements: Vec<usize>,
    /// True when the cover is known to have minimum cardinality.
    pub minimal: bool,
}

fn covers(s: &FiniteSemigroup, k: &[usize]) -> bool {
    let mut seen = vec![false; s.size()];
    for &t in k {
        for u in 0..s.size() {
            seen[s.mul(t, u)] = true;
        }
    }
    seen.iter().all(|&b| b)
}

/// Advances `subset` to the next size-`|subset|` combination of `0..m`
/// in lexicographic order; false when exhausted.
fn next_combination(subset: &mut [usize], m: usize) -> bool {
    let size = subset.len();
    let mut i = size;
    while i > 0 {
        i -= 1;
        if subset[i] < m - size + i {
            subset[i] += 1;
            for j in i + 1..size {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Searches for a minimum-cardinality `K` with `KS = S`.
///
/// For finite `S` such a cover exists iff `SS = S`. A greedy set cover
/// is computed first; subsets of smaller size are then tried in
/// lexicographic order, up to `budget` candidate subsets. On budget
/// overrun the greedy cover is returned with `minimal = false`.
pub fn minimal_left_cover(s: &FiniteSemigroup, budget: usize) -> Option<LeftCover> {
    let m = s.size();
    if !s.is_surjective_product() {
        return None;
    }

    // Greedy: repeatedly take the element covering the most new products.
    let row_cover: Vec<Vec<usize>> = (0..m)
        .map(|t| {
            let mut seen = vec![false; m];
            for u in 0..m {
                seen[s.mul(t, u)] = true;
            }
            (0..m).filter(|&u| seen[u]).collect()
        })
        .collect();
    let mut covered = vec![false; m];
    let mut greedy = Vec::new();
    while covered.iter().any(|&b| !b) {
        let (best, _) = (0..m)
            .map(|t| (t, row_cover[t].iter().filter(|&&u| !covered[u]).count()))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .unwrap();
        for &u in &row_cover[best] {
            covered[u] = true;
        }
        greedy.push(best);
    }
    greedy.sort_unstable();

    // Exhaustive search below the greedy cardinality, lexicographic order.
    let mut examined = 0usize;
    for size in 1..greedy.len() {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            examined += 1;
            if examined > budget {
                return Some(LeftCover { elements: greedy, minimal: false });
            }
            if covers(s, &subset) {
                return Some(LeftCover { elements: subset, minimal: true });
            }
            if !next_combination(&mut subset, m) {
                break;
            }
        }
    }
    Some(LeftCover { elements: greedy, minimal: true })
}

/// Error for cover-reduction preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreconditionViolated(pub String);

impl fmt::Display for PreconditionViolated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "precondition violated: {}", self.0)
    }
}

impl std::error::Error for PreconditionViolated {}

/// Shrinks a cover `K` (with `KS = S`) to a cover by idempotents.
///
/// Phase one picks, for every `s`, a left stabilizer `r` with `rs = s`
/// (smallest index); when some element has no stabilizer the result is
/// absent. Phase two repeatedly removes a non-idempotent `t` from the
/// working set: any other stabilizer `t'` of `t` keeps stabilizing
/// everything `t` did. The final set is contained in the idempotents
/// and still covers.
pub fn reduce_to_idempotents(
    s: &FiniteSemigroup,
    k: &[usize],
) -> Result<Option<Vec<usize>>, PreconditionViolated> {
    if !covers(s, k) {
        return Err(PreconditionViolated("KS != S".into()));
    }
    let m = s.size();
    let mut working: Vec<usize> = Vec::new();
    for t in 0..m {
        match (0..m).find(|&r| s.mul(r, t) == t) {
            Some(r) => {
                if !working.contains(&r) {
                    working.push(r);
                }
            }
            None => return Ok(None),
        }
    }
    while let Some(pos) = working.iter().position(|&t| s.mul(t, t) != t) {
        let t = working[pos];
        // A stabilizer of t within the working set differs from t,
        // otherwise t would be idempotent.
        debug_assert!(working.iter().any(|&u| u != t && s.mul(u, t) == t));
        working.remove(pos);
    }
    working.sort_unstable();
    debug_assert!(covers(s, &working));
    Ok(Some(working))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cyclic(m: usize) -> FiniteSemigroup {
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        FiniteSemigroup::validate_table(m, table).unwrap()
    }

    fn right_zero(m: usize) -> FiniteSemigroup {
        let table = (0..m).map(|_| (0..m).collect()).collect();
        FiniteSemigroup::validate_table(m, table).unwrap()
    }

    fn left_zero(m: usize) -> FiniteSemigroup {
        let table = (0..m).map(|a| vec![a; m]).collect();
        FiniteSemigroup::validate_table(m, table).unwrap()
    }

    fn null2() -> FiniteSemigroup {
        FiniteSemigroup::validate_table(2, vec![vec![0, 0], vec![0, 0]]).unwrap()
    }

    #[test]
    fn trivial_monoid_validates() {
        let s = FiniteSemigroup::validate_table(1, vec![vec![0]]).unwrap();
        assert_eq!(s.size(), 1);
    }

    #[test]
    fn null_semigroup_validates() {
        let s = null2();
        assert_eq!(s.product_set(), vec![0]);
    }

    #[test]
    fn right_zero_validates() {
        // st = t: all 8 triples satisfy (ab)c = c = a(bc).
        let s = right_zero(2);
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    assert_eq!(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn bad_entry_is_reported() {
        let err = FiniteSemigroup::validate_table(2, vec![vec![0, 2], vec![0, 0]]).unwrap_err();
        assert_eq!(err, SemigroupError::OutOfRange { row: 0, col: 1, entry: 2 });
    }

    #[test]
    fn non_associative_triple_is_reported() {
        // table[0][1] = 1, table[1][1] = 0: (11)1 = 01 = 1, 1(11) = 10 = 0.
        let err =
            FiniteSemigroup::validate_table(2, vec![vec![0, 1], vec![0, 0]]).unwrap_err();
        match err {
            SemigroupError::NotAssociative { .. } => {}
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn classify_right_zero() {
        let flags = classify(&right_zero(2));
        assert!(flags.is_regular);
        assert!(!flags.is_inverse);
        assert!(!flags.is_monoid);
        assert_eq!(flags.idempotents, vec![0, 1]);
    }

    #[test]
    fn classify_cyclic_two() {
        let flags = classify(&cyclic(2));
        assert!(flags.is_monoid);
        assert!(flags.is_cancellative);
        assert!(flags.is_inverse);
        assert_eq!(flags.idempotents, vec![0]);
    }

    #[test]
    fn classify_null() {
        let flags = classify(&null2());
        assert!(!flags.is_regular);
        assert_eq!(flags.idempotents, vec![0]);
    }

    #[test]
    fn cover_right_zero_is_singleton() {
        let cover = minimal_left_cover(&right_zero(2), 1_000).unwrap();
        assert_eq!(cover.elements, vec![0]);
        assert!(cover.minimal);
    }

    #[test]
    fn cover_null_is_absent() {
        assert!(minimal_left_cover(&null2(), 1_000).is_none());
    }

    #[test]
    fn cover_left_zero_is_everything() {
        let cover = minimal_left_cover(&left_zero(2), 1_000).unwrap();
        assert_eq!(cover.elements, vec![0, 1]);
        assert!(cover.minimal);
    }

    #[test]
    fn cover_budget_overrun_flags_non_minimal() {
        // Greedy needs all three elements; a one-candidate budget
        // cannot finish the sizes-below search.
        let cover = minimal_left_cover(&left_zero(3), 1).unwrap();
        assert_eq!(cover.elements, vec![0, 1, 2]);
        assert!(!cover.minimal);
        let generous = minimal_left_cover(&left_zero(3), 1_000).unwrap();
        assert!(generous.minimal);
    }

    #[test]
    fn reduce_right_zero_cover() {
        let s = right_zero(2);
        let f = reduce_to_idempotents(&s, &[0]).unwrap().unwrap();
        assert_eq!(f, vec![0]);
    }

    #[test]
    fn reduce_cyclic_cover_to_identity() {
        let s = cyclic(2);
        let f = reduce_to_idempotents(&s, &[0, 1]).unwrap().unwrap();
        assert_eq!(f, vec![0]);
    }

    #[test]
    fn reduce_rejects_non_cover() {
        let s = null2();
        assert!(reduce_to_idempotents(&s, &[1]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = cyclic(3);
        let text = serde_json::to_string(&s).unwrap();
        let back: FiniteSemigroup = serde_json::from_str(&text).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn json_rejects_bad_table() {
        let res: Result<FiniteSemigroup, _> =
            serde_json::from_str(r#"{"size":2,"table":[[0,1],[0,0]]}"#);
        assert!(res.is_err());
    }
}
