//! Exact integer and rational linear algebra.
//!
//! Integer vectors and matrices use `i64` storage with `i128` intermediates;
//! any overflow panics instead of wrapping. Rational work is done over
//! arbitrary-precision [`Rational`] values, with elimination carried out
//! fraction-free (Bareiss) on cleared-denominator integer rows.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision reduced fraction.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("affine dependence is not unique (points do not affinely span)")]
    DependenceNotUnique,
    #[error("expected {expected} points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Converts a rational known to be integral into `i64`.
pub fn rat_to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

pub(crate) fn checked(v: i128) -> i64 {
    i64::try_from(v).expect("integer overflow in exact arithmetic")
}

pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Divides out the gcd of the entries. Zero vectors are left unchanged.
pub fn make_primitive(v: &mut [i64]) {
    let g = gcd_slice(v);
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

/// Negates `v` if its first nonzero entry is negative. Returns whether it flipped.
pub fn sign_fix(v: &mut [i64]) -> bool {
    match v.iter().find(|x| **x != 0) {
        Some(x) if *x < 0 => {
            v.iter_mut().for_each(|x| *x = -*x);
            true
        }
        _ => false,
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    checked(a.iter().zip(b).map(|(x, y)| *x as i128 * *y as i128).sum())
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.as_ref().len(), c, "ragged matrix rows");
            data.extend_from_slice(row.as_ref());
        }
        IntMatrix { rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols<R: AsRef<[i64]>>(cols: &[R]) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s: i128 = (0..self.cols)
                    .map(|k| self.get(i, k) as i128 * other.get(k, j) as i128)
                    .sum();
                out.set(i, j, checked(s));
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn determinant(&self) -> i64 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        det_i64(&self.to_rows())
    }

    pub fn rank(&self) -> usize {
        rank_i64(&self.to_rows())
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs() == 1
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        RatMatrix { rows: r, cols: c, data }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        RatMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|&x| rat(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut s = Rational::zero();
                for k in 0..self.cols {
                    s += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, s);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Entries as integers, if every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        let data = self.data.iter().map(rat_to_i64).collect::<Option<Vec<_>>>()?;
        Some(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let (rows, scale) = clear_denominators(&self.to_rows());
        let d = det_big(&rows);
        Rational::new(d, scale)
    }
}

/// Multiplies each row by the lcm of its denominators. Returns the integer
/// rows and the product of the row multipliers.
fn clear_denominators(rows: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut total = BigInt::one();
    let out = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            total *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    (out, total)
}

/// Fraction-free (Bareiss) row echelon form. Returns the echelon rows, the
/// pivot columns and the number of row swaps.
fn bareiss_echelon(mut m: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>, usize) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        // entries left of the pivot in row r are zero already; keep the rows
        // above r untouched (they are already reduced at earlier pivots)
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (m, pivots, swaps)
}

pub fn det_big(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let (m, pivots, swaps) = bareiss_echelon(rows.to_vec());
    if pivots.len() < n {
        return BigInt::zero();
    }
    let d = m[n - 1][n - 1].clone();
    if swaps % 2 == 1 {
        -d
    } else {
        d
    }
}

fn to_big_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Determinant of a square integer matrix by `i128` Bareiss elimination.
pub fn det_i64(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> =
        rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut prev: i128 = 1;
    let mut sign = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != 0) else {
            return 0;
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[k][k].checked_mul(m[i][j]);
                let b = m[i][k].checked_mul(m[k][j]);
                match (a, b) {
                    (Some(a), Some(b)) => m[i][j] = (a - b) / prev,
                    _ => return checked_big_det(rows),
                }
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    checked(sign * m[n - 1][n - 1])
}

fn checked_big_det(rows: &[Vec<i64>]) -> i64 {
    det_big(&to_big_rows(rows)).to_i64().expect("determinant overflows i64")
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    bareiss_echelon(to_big_rows(rows)).1.len()
}

/// Integer basis (primitive, sign-fixed vectors) of the rational kernel
/// `{x : M x = 0}`.
pub fn kernel_basis(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let m: Vec<Vec<Rational>> =
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    rational_kernel(&m, cols)
        .into_iter()
        .map(|v| {
            let mut iv = integerize(&v);
            sign_fix(&mut iv);
            iv
        })
        .collect()
}

/// Scales a rational vector to a primitive integer vector with the same direction.
pub fn integerize(v: &[Rational]) -> Vec<i64> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    ints.iter()
        .map(|x| {
            let y = if g.is_zero() { x.clone() } else { x / &g };
            y.to_i64().expect("integer overflow converting rational vector")
        })
        .collect()
}

/// Reduced row echelon data over the rationals: (rref rows, pivot columns).
fn rational_rref(m: &[Vec<Rational>], cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    if m.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let (ints, _) = clear_denominators(m);
    let (ech, pivots, _) = bareiss_echelon(ints);
    let mut rows: Vec<Vec<Rational>> = ech
        .into_iter()
        .take(pivots.len())
        .map(|r| r.into_iter().map(Rational::from_integer).collect())
        .collect();
    // back-substitute to reduced form
    for (k, &c) in pivots.iter().enumerate().rev() {
        let p = rows[k][c].clone();
        for x in rows[k].iter_mut() {
            *x /= &p;
        }
        for i in 0..k {
            let f = rows[i][c].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let sub = &f * &rows[k][j];
                rows[i][j] -= sub;
            }
        }
    }
    (rows, pivots)
}

fn rational_kernel(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let (rref, pivots) = rational_rref(m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -rref[k][f].clone();
            }
            v
        })
        .collect()
}

/// Result of [`solve_linear`]: one particular solution plus a kernel basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub particular: Vec<Rational>,
    pub kernel: Vec<Vec<Rational>>,
}

/// Solves `A x = rhs` exactly. Returns `None` when the system is inconsistent.
pub fn solve_linear(a: &RatMatrix, rhs: &[Rational]) -> Option<Solution> {
    assert_eq!(a.rows(), rhs.len(), "right-hand side length mismatch");
    let cols = a.cols();
    let aug: Vec<Vec<Rational>> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    let (rref, pivots) = rational_rref(&aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (k, &pc) in pivots.iter().enumerate() {
        x[pc] = rref[k][cols].clone();
    }
    let kernel = rational_kernel(&a.to_rows(), cols);
    Some(Solution { particular: x, kernel })
}

/// Solves a square system with a unique solution; `None` if singular.
pub fn solve_square(a: &RatMatrix, rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.rows();
    assert_eq!(n, a.cols());
    assert_eq!(n, rhs.len());
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c][c..].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == c || m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].clone();
            for k in c..=n {
                let sub = &f * &m[c][k];
                m[r][k] -= sub;
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular,
/// `U·M = H`, `H` in echelon form with positive pivots and entries above each
/// pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.rows();
    let cols = m.cols();
    let mut h: Vec<Vec<i128>> =
        m.to_rows().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
    let mut u: Vec<Vec<i128>> = IntMatrix::identity(rows)
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();

    fn combine(rows: &mut [Vec<i128>], i: usize, k: usize, a: i128, b: i128, c: i128, d: i128) {
        // (row_i, row_k) <- (a row_i + b row_k, c row_i + d row_k)
        for j in 0..rows[i].len() {
            let x = rows[i][j];
            let y = rows[k][j];
            rows[i][j] = a.checked_mul(x).and_then(|p| p.checked_add(b.checked_mul(y)?)).expect("HNF overflow");
            rows[k][j] = c.checked_mul(x).and_then(|p| p.checked_add(d.checked_mul(y)?)).expect("HNF overflow");
        }
    }

    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for k in r + 1..rows {
            if h[k][c] == 0 {
                continue;
            }
            let x = h[r][c];
            let y = h[k][c];
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (a, b, cc, d) = (s, t, -y / g, x / g);
            combine(&mut h, r, k, a, b, cc, d);
            combine(&mut u, r, k, a, b, cc, d);
        }
        if h[r][c] == 0 {
            continue;
        }
        if h[r][c] < 0 {
            h[r].iter_mut().for_each(|x| *x = -*x);
            u[r].iter_mut().for_each(|x| *x = -*x);
        }
        let p = h[r][c];
        for i in 0..r {
            let q = num_integer::Integer::div_floor(&h[i][c], &p);
            if q != 0 {
                for j in 0..cols {
                    h[i][j] -= q * h[r][j];
                }
                for j in 0..rows {
                    u[i][j] -= q * u[r][j];
                }
            }
        }
        r += 1;
    }
    let to_mat = |v: Vec<Vec<i128>>| {
        let rows: Vec<Vec<i64>> =
            v.into_iter().map(|r| r.into_iter().map(checked).collect()).collect();
        rows
    };
    let hr = to_mat(h);
    let ur = to_mat(u);
    let hm = if hr.is_empty() { IntMatrix::zeros(0, cols) } else { IntMatrix::from_rows(&hr) };
    let um = if ur.is_empty() { IntMatrix::zeros(0, 0) } else { IntMatrix::from_rows(&ur) };
    (hm, um)
}

/// Nonzero rows of the Hermite normal form: a basis of the lattice spanned by
/// the given vectors.
pub fn lattice_basis(vectors: &[Vec<i64>], dim: usize) -> Vec<Vec<i64>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (h, _) = hermite_normal_form(&IntMatrix::from_rows(vectors));
    h.to_rows().into_iter().filter(|r| r.iter().any(|x| *x != 0)).inspect(|r| debug_assert_eq!(r.len(), dim)).collect()
}

/// The affine dependence of `n + 2` points spanning `Z^n`: the unique
/// (up to scale) `b` with `Σ b_i = 0` and `Σ b_i v_i = 0`, made primitive with
/// its first nonzero entry positive.
pub fn affine_dependence(points: &[Vec<i64>]) -> Result<Vec<i64>, ExactError> {
    let Some(n) = points.first().map(Vec::len) else {
        return Err(ExactError::WrongPointCount { expected: 2, got: 0 });
    };
    if points.len() != n + 2 {
        return Err(ExactError::WrongPointCount { expected: n + 2, got: points.len() });
    }
    if points.iter().any(|p| p.len() != n) {
        return Err(ExactError::Dimension("points of mixed dimension".into()));
    }
    // (n+1) x (n+2) matrix with rows [1..1], then coordinates; kernel entries are
    // the signed maximal minors.
    let m = n + 2;
    let mut b = Vec::with_capacity(m);
    for skip in 0..m {
        let minor: Vec<Vec<i64>> = (0..=n)
            .map(|row| {
                (0..m)
                    .filter(|&c| c != skip)
                    .map(|c| if row == 0 { 1 } else { points[c][row - 1] })
                    .collect()
            })
            .collect();
        let d = det_i64(&minor);
        b.push(if skip % 2 == 0 { d } else { -d });
    }
    if b.iter().all(|x| *x == 0) {
        return Err(ExactError::DependenceNotUnique);
    }
    make_primitive(&mut b);
    sign_fix(&mut b);
    Ok(b)
}

/// Exact rational value of `vᵀ M v` for integer `v` and rational `M`.
pub fn rational_quadratic(m: &RatMatrix, v: &[Rational]) -> Rational {
    let mv = m.mul_vec(v);
    mv.iter().zip(v).map(|(a, b)| a * b).sum()
}

pub fn is_zero_vec(v: &[i64]) -> bool {
    v.iter().all(|x| *x == 0)
}

pub fn abs_max(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).max().unwrap_or(0)
}

pub fn rat_is_positive(r: &Rational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn hnf_identity_and_swap() {
        let (h, u) = hermite_normal_form(&IntMatrix::identity(2));
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u, IntMatrix::identity(2));

        let swap = m(&[&[0, 1], &[1, 0]]);
        let (h, u) = hermite_normal_form(&swap);
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u, swap);
    }

    #[test]
    fn hnf_reduces_above_pivot() {
        let a = m(&[&[2, 4], &[0, 3]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h, m(&[&[2, 1], &[0, 3]]));
        assert_eq!(u.mul(&a), h);
        assert_eq!(u.determinant().abs(), 1);
    }

    #[test]
    fn hnf_rank_deficient() {
        let a = m(&[&[2, 4, 6], &[1, 2, 3], &[0, 0, 5]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(u.mul(&a), h);
        assert_eq!(u.determinant().abs(), 1);
        assert_eq!(h.row(2), &[0, 0, 0]);
        assert_eq!(h.row(0), &[1, 2, 3]);
    }

    #[test]
    fn dependence_examples() {
        let sq = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        assert_eq!(affine_dependence(&sq).unwrap(), vec![1, -1, -1, 1]);
        let col = vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1]];
        assert_eq!(affine_dependence(&col).unwrap(), vec![1, -2, 1, 0]);
    }

    #[test]
    fn dependence_degenerate() {
        // n = 3, five points on the plane x3 = 0 plus a repeated apex line:
        // only four of them affinely span a 2-flat, so the kernel is 2-dimensional
        let pts = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![2, 1, 0]];
        assert_eq!(affine_dependence(&pts), Err(ExactError::DependenceNotUnique));
        let short = vec![vec![0, 0], vec![1, 0], vec![0, 1]];
        assert!(matches!(affine_dependence(&short), Err(ExactError::WrongPointCount { .. })));
    }

    #[test]
    fn solve_examples() {
        let id = RatMatrix::identity(3);
        let v = vec![rat(1), rat_frac(2, 3), rat(-5)];
        let s = solve_linear(&id, &v).unwrap();
        assert_eq!(s.particular, v);
        assert!(s.kernel.is_empty());

        let a = RatMatrix::from_int(&m(&[&[2, 1], &[1, 2]]));
        let s = solve_linear(&a, &[rat(1), rat(1)]).unwrap();
        assert_eq!(s.particular, vec![rat_frac(1, 3), rat_frac(1, 3)]);

        let a = RatMatrix::from_int(&m(&[&[1, 1], &[2, 2]]));
        assert!(solve_linear(&a, &[rat(0), rat(1)]).is_none());
        let s = solve_linear(&a, &[rat(1), rat(2)]).unwrap();
        assert_eq!(s.kernel.len(), 1);
        assert_eq!(a.mul_vec(&s.particular), vec![rat(1), rat(2)]);
    }

    #[test]
    fn determinants_and_rank() {
        assert_eq!(m(&[&[4, 2, 2, 2], &[2, 2, 1, 1], &[2, 1, 2, 1], &[2, 1, 1, 2]]).determinant(), 4);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), -1);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(kernel_basis(&[vec![1, 2], vec![2, 4]], 2), vec![vec![2, -1]]);
    }
}
