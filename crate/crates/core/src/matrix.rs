//! Dense exact integer matrices, Smith normal form, and the lattice
//! computations built on it (cokernels, finite quotient enumeration).
//!
//! All algorithms are desk-scale dense; determinism matters more than
//! asymptotics here because downstream presentations are golden-tested.

use crate::arith::{content, frac, gcd, Int, Rat};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = Int;
    fn index(&self, (r, c): (usize, usize)) -> &Int {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Int {
        &mut self.data[r * self.cols + c]
    }
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> Vec<Int> {
        (0..self.cols).map(|c| self[(r, c)].clone()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<Int> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self[(r, k)].is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let t = &self[(r, k)] * &other[(k, c)];
                    out[(r, c)] += t;
                }
            }
        }
        out
    }

    pub fn mul_vec_rat(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| Rat::from_integer(self[(r, c)].clone()) * &v[c])
                    .sum()
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[a] += k * row[b]
    fn add_row(&mut self, a: usize, b: usize, k: &Int) {
        for c in 0..self.cols {
            let t = k * &self[(b, c)];
            self[(a, c)] += t;
        }
    }

    /// col[a] += k * col[b]
    fn add_col(&mut self, a: usize, b: usize, k: &Int) {
        for r in 0..self.rows {
            let t = k * &self[(r, b)];
            self[(r, a)] += t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self[(r, c)].clone();
            self[(r, c)] = v;
        }
    }
}

/// U * M * V = D with U, V unimodular and D in Smith normal form.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl SmithDecomposition {
    /// The diagonal invariant factors, including any zeros.
    pub fn diagonal(&self) -> Vec<Int> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Position of the pivot: smallest absolute value among nonzero entries of
/// the trailing submatrix, ties broken by row-major position.
fn pick_pivot(m: &IntMat, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..m.rows() {
        for c in t..m.cols() {
            if m[(r, c)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((r, c)),
                Some(b) => {
                    if m[(r, c)].abs() < m[b].abs() {
                        best = Some((r, c));
                    }
                }
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &IntMat) -> SmithDecomposition {
    let mut d = m.clone();
    let mut u = IntMat::identity(m.rows());
    let mut v = IntMat::identity(m.cols());
    let n = m.rows().min(m.cols());

    let mut t = 0;
    while t < n {
        let Some((pr, pc)) = pick_pivot(&d, t) else {
            break;
        };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        // Clear row and column t; each reduction shrinks |pivot| or zeroes
        // an entry, so this terminates.
        loop {
            let mut dirty = false;
            for r in t + 1..d.rows() {
                if d[(r, t)].is_zero() {
                    continue;
                }
                let q = div_round(&d[(r, t)], &d[(t, t)]);
                let nq = -q;
                d.add_row(r, t, &nq);
                u.add_row(r, t, &nq);
                if !d[(r, t)].is_zero() {
                    // remainder smaller than pivot: promote it
                    d.swap_rows(t, r);
                    u.swap_rows(t, r);
                    dirty = true;
                }
            }
            for c in t + 1..d.cols() {
                if d[(t, c)].is_zero() {
                    continue;
                }
                let q = div_round(&d[(t, c)], &d[(t, t)]);
                let nq = -q;
                d.add_col(c, t, &nq);
                v.add_col(c, t, &nq);
                if !d[(t, c)].is_zero() {
                    d.swap_cols(t, c);
                    v.swap_cols(t, c);
                    dirty = true;
                }
            }
            if !dirty {
                let col_clear = (t + 1..d.rows()).all(|r| d[(r, t)].is_zero());
                let row_clear = (t + 1..d.cols()).all(|c| d[(t, c)].is_zero());
                if col_clear && row_clear {
                    break;
                }
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    // Enforce the divisibility chain d_1 | d_2 | ... by folding offenders
    // back into the pivot position.
    loop {
        let mut fixed = true;
        for i in 0..n.saturating_sub(1) {
            let a = d[(i, i)].clone();
            let b = d[(i + 1, i + 1)].clone();
            if a.is_zero() && !b.is_zero() {
                // move the nonzero factor forward
                d.swap_rows(i, i + 1);
                u.swap_rows(i, i + 1);
                d.swap_cols(i, i + 1);
                v.swap_cols(i, i + 1);
                fixed = false;
                continue;
            }
            if a.is_zero() || (&b % &a).is_zero() {
                continue;
            }
            // standard 2x2 repair: add column i+1 to column i, re-reduce
            d.add_col(i, i + 1, &Int::one());
            v.add_col(i, i + 1, &Int::one());
            let g = gcd(&a, &b);
            // row reduce the 2x2 block [[a,0],[b,b]] back to diagonal(g, ab/g)
            // via the general clearing loop restricted to the block
            clear_block(&mut d, &mut u, &mut v, i);
            debug_assert_eq!(d[(i, i)].abs(), g.abs());
            fixed = false;
        }
        if fixed {
            break;
        }
    }

    for i in 0..n {
        if d[(i, i)].is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }

    debug_assert!(u.mul(m).mul(&v) == d);
    SmithDecomposition { u, d, v }
}

/// Re-diagonalize starting at position t (used by the divisibility repair).
fn clear_block(d: &mut IntMat, u: &mut IntMat, v: &mut IntMat, t: usize) {
    loop {
        let Some((pr, pc)) = pick_pivot(d, t) else {
            return;
        };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);
        let mut done = true;
        for r in t + 1..d.rows() {
            if d[(r, t)].is_zero() {
                continue;
            }
            let q = -div_round(&d[(r, t)], &d[(t, t)]);
            d.add_row(r, t, &q);
            u.add_row(r, t, &q);
            if !d[(r, t)].is_zero() {
                done = false;
            }
        }
        for c in t + 1..d.cols() {
            if d[(t, c)].is_zero() {
                continue;
            }
            let q = -div_round(&d[(t, c)], &d[(t, t)]);
            d.add_col(c, t, &q);
            v.add_col(c, t, &q);
            if !d[(t, c)].is_zero() {
                done = false;
            }
        }
        if done {
            return;
        }
    }
}

/// Integer division rounding toward the nearest integer (halves toward zero),
/// keeping remainders at most |b|/2 so the clearing loop contracts.
fn div_round(a: &Int, b: &Int) -> Int {
    let (q, r) = num_integer::Integer::div_rem(a, b);
    let two_r: Int = &r * Int::from(2);
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Isomorphism type of `Z^rows / image(M)`: free rank plus torsion
/// coefficients in divisibility-chain form.
pub fn cokernel_structure(m: &IntMat) -> (usize, Vec<Int>) {
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion: Vec<Int> = diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    (m.rows() - rank, torsion)
}

pub fn rank(m: &IntMat) -> usize {
    smith_normal_form(m)
        .diagonal()
        .iter()
        .filter(|d| !d.is_zero())
        .count()
}

pub fn det(m: &IntMat) -> Int {
    assert_eq!(m.rows(), m.cols(), "determinant of non-square matrix");
    // |det| from the SNF diagonal; sign from rational elimination.
    let snf = smith_normal_form(m);
    let mut d = Int::one();
    for x in snf.diagonal() {
        d *= x;
    }
    if d.is_zero() {
        return d;
    }
    let rows: Vec<Vec<Rat>> = (0..m.rows())
        .map(|r| m.row(r).into_iter().map(Rat::from_integer).collect())
        .collect();
    if det_sign_negative(rows) {
        -d
    } else {
        d
    }
}

fn det_sign_negative(mut rows: Vec<Vec<Rat>>) -> bool {
    let n = rows.len();
    let mut neg = false;
    for i in 0..n {
        let Some(p) = (i..n).find(|&r| !rows[r][i].is_zero()) else {
            return false;
        };
        if p != i {
            rows.swap(i, p);
            neg = !neg;
        }
        if rows[i][i].is_negative() {
            neg = !neg;
        }
        for r in i + 1..n {
            let f = &rows[r][i] / &rows[i][i];
            for c in i..n {
                let t = &f * &rows[i][c];
                rows[r][c] = &rows[r][c] - t;
            }
        }
    }
    neg
}

/// Representatives of the finite quotient `Z^d / M Z^d` realized as the
/// rational points `frac(M^{-1} b)` of `[0,1)^d`, in lexicographic order.
pub fn lattice_coset_reps(m: &IntMat) -> Result<Vec<Vec<Rat>>> {
    assert_eq!(m.rows(), m.cols(), "coset reps of non-square matrix");
    let n = m.rows();
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    if diag.iter().any(|d| d.is_zero()) {
        return Err(Error::InfiniteQuotient);
    }
    // M^{-1} Z^d mod Z^d = V D^{-1} Z^d mod Z^d; the box 0 <= k_i < d_i
    // enumerates it bijectively because V is unimodular.
    let mut reps = Vec::new();
    let mut k = vec![Int::zero(); n];
    loop {
        let x: Vec<Rat> = (0..n)
            .map(|i| Rat::new(k[i].clone(), diag[i].clone()))
            .collect();
        let vx = snf.v.mul_vec_rat(&x);
        reps.push(vx.iter().map(frac).collect::<Vec<Rat>>());
        // increment the mixed-radix counter
        let mut i = n;
        loop {
            if i == 0 {
                reps.sort();
                return Ok(reps);
            }
            i -= 1;
            k[i] += 1;
            if k[i] < diag[i] {
                break;
            }
            k[i] = Int::zero();
        }
    }
}

/// Saturated integer basis of `ker(M)` (as matrix columns).
pub fn kernel_basis(m: &IntMat) -> IntMat {
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    let r = diag.iter().filter(|d| !d.is_zero()).count();
    let cols: Vec<usize> = (r..m.cols()).collect();
    let mut out = IntMat::zeros(m.cols(), cols.len());
    for (j, &c) in cols.iter().enumerate() {
        for i in 0..m.cols() {
            out[(i, j)] = snf.v[(i, c)].clone();
        }
    }
    out
}

/// Solve `A x = b` exactly over the rationals for square nonsingular A.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n));
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for i in 0..n {
        let p = (i..n).find(|&r| !m[r][i].is_zero())?;
        m.swap(i, p);
        let piv = m[i][i].clone();
        for c in i..=n {
            m[i][c] = &m[i][c] / &piv;
        }
        for r in 0..n {
            if r == i || m[r][i].is_zero() {
                continue;
            }
            let f = m[r][i].clone();
            for c in i..=n {
                let t = &f * &m[i][c];
                m[r][c] = &m[r][c] - t;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Exact inverse of a square rational matrix, if nonsingular.
pub fn invert_rat(rows: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = rows.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[j] = Rat::one();
        cols.push(solve_square(rows, &e)?);
    }
    // columns of the inverse were computed; transpose into rows
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Basis (as rows) of the lattice spanned by the rows of `m`.
pub fn row_lattice_basis(m: &IntMat) -> IntMat {
    let snf = smith_normal_form(m);
    let r = snf.diagonal().iter().filter(|d| !d.is_zero()).count();
    // rows of D V^{-1} span the same lattice as rows of M
    let vinv_rat = invert_rat(
        &(0..snf.v.rows())
            .map(|i| {
                snf.v
                    .row(i)
                    .into_iter()
                    .map(Rat::from_integer)
                    .collect::<Vec<Rat>>()
            })
            .collect::<Vec<_>>(),
    )
    .expect("V is unimodular");
    let mut out = IntMat::zeros(r, m.cols());
    for i in 0..r {
        for j in 0..m.cols() {
            let x = &vinv_rat[i][j] * Rat::from_integer(snf.d[(i, i)].clone());
            debug_assert!(x.denom().is_one());
            out[(i, j)] = x.to_integer();
        }
    }
    out
}

/// Rank of a set of rational row vectors.
pub fn rank_rat(rows: &[Vec<Rat>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &piv;
            for k in c..cols {
                let t = &f * &m[rank][k];
                m[r][k] = &m[r][k] - t;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Primitive form of an integer vector: `v / content(v)`. Zero stays zero.
pub fn primitive_part(v: &[Int]) -> (Int, Vec<Int>) {
    let c = content(v);
    if c.is_zero() || c.is_one() {
        return (Int::one(), v.to_vec());
    }
    (c.clone(), v.iter().map(|x| x / &c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    /// Independent oracle: the product d_1..d_k of invariant factors equals
    /// the gcd of all k x k minors.
    fn minor_gcd_oracle(m: &IntMat, k: usize) -> Int {
        use itertools::Itertools;
        let mut g = Int::zero();
        for rows in (0..m.rows()).combinations(k) {
            for cols in (0..m.cols()).combinations(k) {
                let sub: Vec<Vec<Rat>> = rows
                    .iter()
                    .map(|&r| {
                        cols.iter()
                            .map(|&c| Rat::from_integer(m[(r, c)].clone()))
                            .collect()
                    })
                    .collect();
                g = gcd(&g, &det_rat(&sub));
            }
        }
        g
    }

    fn det_rat(m: &[Vec<Rat>]) -> Int {
        let n = m.len();
        if n == 0 {
            return Int::one();
        }
        let mut acc = Int::zero();
        // cofactor expansion; fine for the tiny oracle sizes used here
        if n == 1 {
            return m[0][0].numer().clone();
        }
        for (j, _) in m[0].iter().enumerate() {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rat>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            acc += m[0][j].numer() * det_rat(&minor) * int(sign);
        }
        acc
    }

    #[test]
    fn snf_identity() {
        let m = IntMat::identity(2);
        let s = smith_normal_form(&m);
        assert_eq!(s.d, IntMat::identity(2));
        assert_eq!(s.u, IntMat::identity(2));
        assert_eq!(s.v, IntMat::identity(2));
    }

    #[test]
    fn snf_diag_2_3() {
        let m = IntMat::from_i64(&[&[2, 0], &[0, 3]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal(), vec![int(1), int(6)]);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
        // oracle: gcd of 1x1 minors is 1, the 2x2 determinant is 6
        assert_eq!(minor_gcd_oracle(&m, 1), int(1));
        assert_eq!(minor_gcd_oracle(&m, 2).abs(), int(6));
    }

    #[test]
    fn snf_zero() {
        let m = IntMat::zeros(1, 1);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal(), vec![int(0)]);
    }

    #[test]
    fn snf_divisibility_chain_and_reconstruction() {
        let m = IntMat::from_i64(&[&[4, 6, 2], &[6, 4, 8], &[10, 2, 4]]);
        let s = smith_normal_form(&m);
        let d = s.diagonal();
        for i in 0..d.len() - 1 {
            if !d[i].is_zero() {
                assert!((&d[i + 1] % &d[i]).is_zero(), "chain broken: {:?}", d);
            }
        }
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
        assert_eq!(det(&s.u).abs(), int(1));
        assert_eq!(det(&s.v).abs(), int(1));
        // oracle on every minor level
        let mut prod = Int::one();
        for (k, dk) in d.iter().enumerate() {
            prod *= dk;
            assert_eq!(minor_gcd_oracle(&m, k + 1).abs(), prod.abs());
        }
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(
            cokernel_structure(&IntMat::from_i64(&[&[3]])),
            (0, vec![int(3)])
        );
        assert_eq!(cokernel_structure(&IntMat::identity(3)), (0, vec![]));
        // column (1,2,3)^T: Z^3/(1,2,3)Z is free of rank 2
        let m = IntMat::from_i64(&[&[1], &[2], &[3]]);
        assert_eq!(cokernel_structure(&m), (2, vec![]));
    }

    #[test]
    fn coset_reps_examples() {
        let r = lattice_coset_reps(&IntMat::from_i64(&[&[1]])).unwrap();
        assert_eq!(r, vec![vec![rat0(0, 1)]]);
        let r = lattice_coset_reps(&IntMat::from_i64(&[&[3]])).unwrap();
        assert_eq!(r, vec![vec![rat0(0, 1)], vec![rat0(1, 3)], vec![rat0(2, 3)]]);
        let r = lattice_coset_reps(&IntMat::from_i64(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(r.len(), 4);
        for v in &r {
            for x in v {
                assert!(x == &rat0(0, 1) || x == &rat0(1, 2));
            }
        }
        assert!(lattice_coset_reps(&IntMat::from_i64(&[&[0]])).is_err());
    }

    /// Direct-enumeration oracle for coset representatives.
    #[test]
    fn coset_reps_match_direct_enumeration() {
        use std::collections::BTreeSet;
        let m = IntMat::from_i64(&[&[2, 1], &[-1, 3]]);
        let d = det(&m).abs();
        let n: i64 = 7;
        assert_eq!(d, int(n));
        let inv_rows: Vec<Vec<Rat>> = (0..2)
            .map(|i| {
                let mut b = vec![rat0(0, 1); 2];
                b[i] = rat0(1, 1);
                b
            })
            .collect();
        // columns of M^{-1} via exact solves
        let c0 = solve_square(
            &(0..2)
                .map(|r| {
                    (0..2)
                        .map(|c| Rat::from_integer(m[(r, c)].clone()))
                        .collect()
                })
                .collect::<Vec<_>>(),
            &inv_rows[0],
        )
        .unwrap();
        let c1 = solve_square(
            &(0..2)
                .map(|r| {
                    (0..2)
                        .map(|c| Rat::from_integer(m[(r, c)].clone()))
                        .collect()
                })
                .collect::<Vec<_>>(),
            &inv_rows[1],
        )
        .unwrap();
        let mut expect = BTreeSet::new();
        for b0 in 0..n {
            for b1 in 0..n {
                let v: Vec<Rat> = (0..2)
                    .map(|i| frac(&(&c0[i] * rat0(b0, 1) + &c1[i] * rat0(b1, 1))))
                    .collect();
                expect.insert(v);
            }
        }
        let got: BTreeSet<Vec<Rat>> = lattice_coset_reps(&m).unwrap().into_iter().collect();
        assert_eq!(got, expect);
        assert_eq!(got.len(), 7);
    }

    #[test]
    fn kernel_basis_is_saturated() {
        let m = IntMat::from_i64(&[&[1, 2, 3]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        // saturation: cokernel of the kernel basis inside Z^3 has no torsion
        assert_eq!(cokernel_structure(&k).1, vec![]);
    }

    fn rat0(p: i64, q: i64) -> Rat {
        Rat::new(int(p), int(q))
    }
}
