//! Exact dense linear algebra over the rationals and the integers.
//!
//! Rational elimination uses reduced row echelon form with
//! lexicographic pivot order, so solvers return a canonical particular
//! solution (free variables zero). Integer matrices get a Smith normal
//! form with both unimodular transforms, a column-style Hermite
//! echelon for lattice membership, and a Bareiss determinant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type RatMatrix = Vec<Vec<BigRational>>;
pub type IntMatrix = Vec<Vec<BigInt>>;

/// Reduced row echelon form, pivoting only within the first
/// `pivot_limit` columns. Returns the pivot column indices.
pub fn rref(mat: &mut RatMatrix, pivot_limit: usize) -> Vec<usize> {
    let rows = mat.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_limit {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].recip();
        for v in mat[r].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        let row_r = mat[r].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (vi, vr) in row.iter_mut().zip(row_r.iter()) {
                    if !vr.is_zero() {
                        *vi = &*vi - &(&f * vr);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(mat: &RatMatrix) -> usize {
    if mat.is_empty() {
        return 0;
    }
    let mut work = mat.clone();
    let cols = work[0].len();
    rref(&mut work, cols).len()
}

/// Solves `M x = b` for each right-hand side column, all against one
/// elimination. Returns `None` when any system is inconsistent.
pub fn solve_columns(mat: &RatMatrix, rhs: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let nrhs = rhs.len();
    let mut work: RatMatrix = (0..rows)
        .map(|i| {
            let mut row = mat[i].clone();
            row.extend(rhs.iter().map(|col| col[i].clone()));
            row
        })
        .collect();
    let pivots = rref(&mut work, cols);
    // Rows past the rank have zero coefficient part; each rhs entry
    // there must vanish.
    for row in work.iter().skip(pivots.len()) {
        for j in 0..nrhs {
            if !row[cols + j].is_zero() {
                return None;
            }
        }
    }
    let mut solutions = vec![vec![BigRational::zero(); cols]; nrhs];
    for (r, &pc) in pivots.iter().enumerate() {
        for j in 0..nrhs {
            solutions[j][pc] = work[r][cols + j].clone();
        }
    }
    Some(solutions)
}

/// Canonical basis of `{x : x^T M = 0}` (the left kernel), obtained
/// from the reduced echelon form of the transpose: one vector per free
/// column, in ascending order.
pub fn left_kernel_basis(mat: &RatMatrix) -> Vec<Vec<BigRational>> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut t: RatMatrix = (0..cols)
        .map(|j| (0..rows).map(|i| mat[i][j].clone()).collect())
        .collect();
    let pivots = rref(&mut t, rows);
    let mut is_pivot = vec![false; rows];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for fc in 0..rows {
        if is_pivot[fc] {
            continue;
        }
        let mut v = vec![BigRational::zero(); rows];
        v[fc] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -t[r][fc].clone();
        }
        basis.push(v);
    }
    basis
}

/// Smith normal form `U * A * V = D` with unimodular `U`, `V`.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// The full diagonal of `D` (length `min(rows, cols)`), invariant
    /// factors first, padded with zeros.
    pub diagonal: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
}

impl SmithNormalForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Nonzero diagonal entries, including any equal to one.
    pub fn nonzero_diagonal(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_zero()).cloned().collect()
    }
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn smith_normal_form(a0: &IntMatrix) -> SmithNormalForm {
    let rows = a0.len();
    let cols = if rows == 0 { 0 } else { a0[0].len() };
    let mut a = a0.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);

    let swap_rows = |a: &mut IntMatrix, u: &mut IntMatrix, i: usize, j: usize| {
        a.swap(i, j);
        u.swap(i, j);
    };
    let swap_cols = |a: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
    };
    let negate_row = |a: &mut IntMatrix, u: &mut IntMatrix, i: usize| {
        for x in a[i].iter_mut() {
            *x = -&*x;
        }
        for x in u[i].iter_mut() {
            *x = -&*x;
        }
    };
    // row_i -= q * row_k
    let row_sub = |m: &mut IntMatrix, i: usize, k: usize, q: &BigInt| {
        let row_k = m[k].clone();
        for (x, y) in m[i].iter_mut().zip(row_k.iter()) {
            *x = &*x - &(q * y);
        }
    };
    // col_j -= q * col_k
    let col_sub = |m: &mut IntMatrix, j: usize, k: usize, q: &BigInt| {
        for row in m.iter_mut() {
            let t = &row[j] - &(q * &row[k]);
            row[j] = t;
        }
    };

    let n = rows.min(cols);
    let mut k = 0;
    while k < n {
        // Smallest-magnitude nonzero pivot keeps entry growth tame.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !a[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut a, &mut u, k, pi);
        swap_cols(&mut a, &mut v, k, pj);
        if a[k][k].is_negative() {
            negate_row(&mut a, &mut u, k);
        }

        loop {
            let mut dirty = false;
            for i in k + 1..rows {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = &a[i][k] / &a[k][k];
                if !q.is_zero() {
                    row_sub(&mut a, i, k, &q);
                    row_sub(&mut u, i, k, &q);
                }
                if !a[i][k].is_zero() {
                    swap_rows(&mut a, &mut u, k, i);
                    if a[k][k].is_negative() {
                        negate_row(&mut a, &mut u, k);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            for j in k + 1..cols {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = &a[k][j] / &a[k][k];
                if !q.is_zero() {
                    col_sub(&mut a, j, k, &q);
                    col_sub(&mut v, j, k, &q);
                }
                if !a[k][j].is_zero() {
                    swap_cols(&mut a, &mut v, k, j);
                    if a[k][k].is_negative() {
                        negate_row(&mut a, &mut u, k);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Row and column k are clear; force the divisibility chain.
            let d = a[k][k].clone();
            let mut offender = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(&a[i][j] % &d).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    // row_k += row_i reintroduces the entry in row k.
                    let minus_one = -BigInt::one();
                    row_sub(&mut a, k, i, &minus_one);
                    row_sub(&mut u, k, i, &minus_one);
                }
                None => break,
            }
        }
        k += 1;
    }

    let diagonal = (0..n).map(|i| a[i][i].clone()).collect();
    SmithNormalForm { u, v, diagonal, rows, cols }
}

/// Multiplies two integer matrices (for self-checks and small blocks).
pub fn int_mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let rows = a.len();
    let inner = if rows == 0 { 0 } else { a[0].len() };
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    let mut out = vec![vec![BigInt::zero(); cols]; rows];
    for i in 0..rows {
        for h in 0..inner {
            if a[i][h].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[h][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][h] * &b[h][j]);
                }
            }
        }
    }
    out
}

/// Integer determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a0: &IntMatrix) -> BigInt {
    let n = a0.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = a0.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Column echelon basis of the column lattice of `a`: columns with
/// strictly increasing pivot rows, positive pivots, zeros above each
/// pivot. Obtained by unimodular column operations only, so the
/// integer column span is preserved.
pub fn column_echelon(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut work: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j].clone()).collect::<Vec<BigInt>>())
        .filter(|col| col.iter().any(|x| !x.is_zero()))
        .collect();
    let mut result = Vec::new();
    for row in 0..rows {
        loop {
            let nz: Vec<usize> =
                (0..work.len()).filter(|&j| !work[j][row].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            let &jmin = nz
                .iter()
                .min_by(|&&x, &&y| work[x][row].abs().cmp(&work[y][row].abs()))
                .unwrap();
            for &j in &nz {
                if j == jmin {
                    continue;
                }
                let q = &work[j][row] / &work[jmin][row];
                if !q.is_zero() {
                    let base = work[jmin].clone();
                    for (x, y) in work[j].iter_mut().zip(base.iter()) {
                        *x = &*x - &(&q * y);
                    }
                }
            }
            work.retain(|col| col.iter().any(|x| !x.is_zero()));
        }
        if let Some(j) = (0..work.len()).find(|&j| !work[j][row].is_zero()) {
            let mut col = work.swap_remove(j);
            if col[row].is_negative() {
                for x in col.iter_mut() {
                    *x = -&*x;
                }
            }
            result.push(col);
        }
    }
    result
}

/// Decides membership of `v` in the integer column span given by a
/// column echelon basis.
pub fn in_echelon_span(echelon: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut v = v.to_vec();
    for col in echelon {
        let pivot_row = col.iter().position(|x| !x.is_zero()).expect("nonzero column");
        if v[pivot_row].is_zero() {
            continue;
        }
        if !(&v[pivot_row] % &col[pivot_row]).is_zero() {
            return false;
        }
        let q = &v[pivot_row] / &col[pivot_row];
        for (x, y) in v.iter_mut().zip(col.iter()) {
            *x = &*x - &(&q * y);
        }
    }
    v.iter().all(|x| x.is_zero())
}
