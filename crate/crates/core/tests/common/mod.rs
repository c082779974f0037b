//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

type Q = BigRational;

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Solves `m x = rhs` for an overdetermined but consistent system with a
/// unique solution, by plain Gaussian elimination.
pub fn solve_unique(mut m: Vec<Vec<Q>>, mut rhs: Vec<Q>) -> Option<Vec<Q>> {
    let cols = m.first()?.len();
    let mut row = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(row, p);
        rhs.swap(row, p);
        let inv = m[row][c].recip();
        for k in 0..cols {
            m[row][k] = &m[row][k] * &inv;
        }
        rhs[row] = &rhs[row] * &inv;
        for r in 0..m.len() {
            if r != row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..cols {
                    let t = &f * &m[row][k];
                    m[r][k] = &m[r][k] - t;
                }
                let t = &f * &rhs[row];
                rhs[r] = &rhs[r] - t;
            }
        }
        pivots.push(c);
        row += 1;
    }
    if pivots.len() != cols || rhs[row..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(rhs[..cols].to_vec())
}

fn quad(a: &[Vec<i64>], x: &[i128]) -> i128 {
    let n = a.len();
    let mut s = 0i128;
    for i in 0..n {
        for j in 0..n {
            s += a[i][j] as i128 * x[i] * x[j];
        }
    }
    s
}

/// Empty-sphere test for a lattice polytope under an integer form: its
/// vertices are co-spherical, no lattice point lies strictly inside the
/// sphere, and the lattice points on it are exactly the vertices.
pub fn empty_sphere(a: &[Vec<i64>], verts: &[Vec<i64>]) -> Result<(), String> {
    let n = a.len();
    let av = |v: &[i64]| -> Vec<i64> { (0..n).map(|i| (0..n).map(|j| a[i][j] * v[j]).sum()).collect() };
    let norm = |v: &[i64]| -> i64 { av(v).iter().zip(v).map(|(x, y)| x * y).sum() };
    let v0 = &verts[0];
    let mut m = Vec::new();
    let mut rhs = Vec::new();
    for v in &verts[1..] {
        let d: Vec<i64> = v.iter().zip(v0).map(|(x, y)| x - y).collect();
        m.push(av(&d).iter().map(|x| q(2 * x)).collect());
        rhs.push(q(norm(v) - norm(v0)));
    }
    let c = solve_unique(m, rhs).ok_or("vertices have no unique circumcenter")?;
    let den = c.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let big_c: Vec<i128> = c.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer().to_i128().unwrap()).collect();
    let d = den.to_i128().unwrap();
    let shifted = |x: &[i64]| -> Vec<i128> { x.iter().zip(&big_c).map(|(xi, ci)| d * *xi as i128 - ci).collect() };
    let r = quad(a, &shifted(v0));
    for v in verts {
        if quad(a, &shifted(v)) != r {
            return Err(format!("vertex {v:?} off the circumsphere"));
        }
    }
    // box: |x_i - c_i|² ≤ r · (a⁻¹)_ii / d²
    let arat: Vec<Vec<Q>> = a.iter().map(|row| row.iter().map(|x| q(*x)).collect()).collect();
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![Q::zero(); n];
        e[i] = Q::one();
        let inv_ii = solve_unique(arat.clone(), e).ok_or("singular form")?[i].clone();
        let b = ((r as f64) * inv_ii.to_f64().unwrap()).sqrt() / d as f64 + 1.0;
        let ci = c[i].to_f64().unwrap();
        lo.push((ci - b).floor() as i64);
        hi.push((ci + b).ceil() as i64);
    }
    let mut x = lo.clone();
    loop {
        let s = quad(a, &shifted(&x));
        if s < r {
            return Err(format!("lattice point {x:?} strictly inside"));
        }
        if s == r && !verts.contains(&x) {
            return Err(format!("lattice point {x:?} on the sphere but not a vertex"));
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(());
            }
            if x[k] < hi[k] {
                x[k] += 1;
                break;
            }
            x[k] = lo[k];
            k += 1;
        }
    }
}

/// Integer matrix of a form given as rows of rationals that are integral.
pub fn int_rows(m: &[Vec<Q>]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.iter().map(|x| x.to_integer().to_i64().unwrap()).collect()).collect()
}

pub fn abs_det(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    let m: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|x| q(*x)).collect()).collect();
    // det via elimination
    let mut m = m;
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else { return 0 };
        m.swap(c, p);
        det = &det * &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] = &m[r][k] - t;
            }
        }
    }
    det.abs().to_integer().to_i64().unwrap()
}
