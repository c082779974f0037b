//! Exact polyhedral cones: double description between facet functionals and
//! extreme rays, over primitive integer vectors.
//!
//! Cones are handled in any ambient dimension; [`SymVec`] gives the
//! coordinates used for symmetric matrices, where a functional `f` acts on a
//! form `a` by the plain coordinate dot product.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exact::{
    self, dot, integerize, kernel_basis, make_primitive, rank_i64, rat, IntMatrix, RatMatrix,
    Rational,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("cone is not pointed (contains a line)")]
    NotPointed,
    #[error("no generators given")]
    Empty,
    #[error("vector of length {got} in ambient dimension {ambient}")]
    Dimension { ambient: usize, got: usize },
}

/// `n(n+1)/2`.
pub fn sym_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Coordinates of a symmetric `n × n` integer matrix, one per pair `i ≤ j`
/// in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymVec {
    n: usize,
    coords: Vec<i64>,
}

impl SymVec {
    pub fn new(n: usize, coords: Vec<i64>) -> Self {
        assert_eq!(coords.len(), sym_dim(n), "SymVec length mismatch");
        SymVec { n, coords }
    }

    pub fn zero(n: usize) -> Self {
        SymVec { n, coords: vec![0; sym_dim(n)] }
    }

    /// Position of pair `(i, j)` in the coordinate vector.
    pub fn index(n: usize, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * n - i * (i + 1) / 2 + j
    }

    pub fn from_matrix(m: &IntMatrix) -> Self {
        let n = m.rows();
        assert_eq!(n, m.cols());
        let mut coords = Vec::with_capacity(sym_dim(n));
        for i in 0..n {
            for j in i..n {
                coords.push(m.get(i, j));
            }
        }
        SymVec { n, coords }
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            for j in i..self.n {
                let v = self.get(i, j);
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        m
    }

    /// Rank-one form `q qᵀ`.
    pub fn outer(q: &[i64]) -> Self {
        let n = q.len();
        let mut coords = Vec::with_capacity(sym_dim(n));
        for i in 0..n {
            for j in i..n {
                coords.push(q[i] * q[j]);
            }
        }
        SymVec { n, coords }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.coords[Self::index(self.n, i, j)]
    }

    pub fn pair(&self, other: &SymVec) -> i64 {
        dot(&self.coords, &other.coords)
    }

    pub fn pair_rational(&self, form: &RatMatrix) -> Rational {
        let mut s = Rational::zero();
        for i in 0..self.n {
            for j in i..self.n {
                let c = self.get(i, j);
                if c != 0 {
                    s += rat(c) * form.get(i, j);
                }
            }
        }
        s
    }

    pub fn add(&self, other: &SymVec) -> SymVec {
        SymVec {
            n: self.n,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> SymVec {
        SymVec { n: self.n, coords: self.coords.iter().map(|a| a * k).collect() }
    }

    pub fn primitive(mut self) -> SymVec {
        make_primitive(&mut self.coords);
        self
    }

    /// `Pᵀ M P` for the matrix `M` this vector encodes.
    pub fn congruence(&self, p: &IntMatrix) -> SymVec {
        SymVec::from_matrix(&p.transpose().mul(&self.to_matrix()).mul(p))
    }
}

/// Where a point sits relative to a cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Containment {
    Interior,
    /// Inside the cone, on the listed facets.
    Boundary(Vec<usize>),
    Outside,
}

/// A pointed polyhedral cone given by both its extreme rays and its
/// irredundant facet functionals (`⟨f, x⟩ ≥ 0`), plus equations cutting out
/// its linear span when that span is proper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDD {
    ambient: usize,
    span_dim: usize,
    rays: Vec<Vec<i64>>,
    facets: Vec<Vec<i64>>,
    equations: Vec<Vec<i64>>,
    /// `incidence[f][r]` is true when facet `f` vanishes on ray `r`.
    incidence: Vec<Vec<bool>>,
}

impl ConeDD {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn span_dim(&self) -> usize {
        self.span_dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn facets(&self) -> &[Vec<i64>] {
        &self.facets
    }

    pub fn equations(&self) -> &[Vec<i64>] {
        &self.equations
    }

    pub fn incidence(&self) -> &[Vec<bool>] {
        &self.incidence
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.span_dim == self.ambient
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.span_dim
    }

    /// Indices of rays on which facet `f` vanishes.
    pub fn tight_rays(&self, f: usize) -> Vec<usize> {
        (0..self.rays.len()).filter(|&r| self.incidence[f][r]).collect()
    }

    pub fn facet_index(&self, f: &[i64]) -> Option<usize> {
        self.facets.binary_search_by(|x| x.as_slice().cmp(f)).ok()
    }

    pub fn has_ray(&self, r: &[i64]) -> bool {
        self.rays.binary_search_by(|x| x.as_slice().cmp(r)).is_ok()
    }

    /// Sum of the (primitive) extreme rays.
    pub fn ray_sum(&self) -> Vec<i64> {
        let mut s = vec![0i64; self.ambient];
        for r in &self.rays {
            for (a, b) in s.iter_mut().zip(r) {
                *a += b;
            }
        }
        s
    }

    /// Whether two extreme rays span a 2-face.
    pub fn rays_adjacent(&self, r1: usize, r2: usize) -> bool {
        let common: Vec<usize> = (0..self.facets.len())
            .filter(|&f| self.incidence[f][r1] && self.incidence[f][r2])
            .collect();
        if self.span_dim < 2 {
            return false;
        }
        let rows: Vec<Vec<i64>> = common.iter().map(|&f| self.facets[f].clone()).collect();
        let mut rows = rows;
        rows.extend(self.equations.iter().cloned());
        rank_i64(&rows) == self.ambient - 2
    }
}

/// Classifies a rational point against the cone.
pub fn cone_contains(c: &ConeDD, a: &[Rational]) -> Containment {
    assert_eq!(a.len(), c.ambient);
    let eval = |f: &[i64]| -> Rational { f.iter().zip(a).map(|(x, y)| rat(*x) * y).sum() };
    if c.equations.iter().any(|e| !eval(e).is_zero()) {
        return Containment::Outside;
    }
    let mut tight = Vec::new();
    for (i, f) in c.facets.iter().enumerate() {
        let v = eval(f);
        if v.is_negative() {
            return Containment::Outside;
        }
        if v.is_zero() {
            tight.push(i);
        }
    }
    if tight.is_empty() {
        Containment::Interior
    } else {
        Containment::Boundary(tight)
    }
}

pub fn cone_contains_int(c: &ConeDD, a: &[i64]) -> Containment {
    let r: Vec<Rational> = a.iter().map(|&x| rat(x)).collect();
    cone_contains(c, &r)
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn contains_all(&self, sub: &Bits) -> bool {
        self.0.iter().zip(&sub.0).all(|(a, b)| a & b == *b)
    }
}

fn normalized_rows(rows: &[Vec<i64>], ambient: usize) -> Result<Vec<Vec<i64>>, ConeError> {
    let mut set = BTreeSet::new();
    for r in rows {
        if r.len() != ambient {
            return Err(ConeError::Dimension { ambient, got: r.len() });
        }
        let mut v = r.clone();
        if exact::is_zero_vec(&v) {
            continue;
        }
        make_primitive(&mut v);
        set.insert(v);
    }
    Ok(set.into_iter().collect())
}

fn combine(pos: &[i64], vp: i64, neg: &[i64], vn: i64) -> Vec<i64> {
    // vp > 0 > vn; result vanishes on the current row
    let mut out: Vec<i128> = pos
        .iter()
        .zip(neg)
        .map(|(p, q)| (vp as i128) * (*q as i128) - (vn as i128) * (*p as i128))
        .collect();
    let g = out.iter().fold(0i128, |g, x| num_integer::Integer::gcd(&g, x));
    if g > 1 {
        out.iter_mut().for_each(|x| *x /= g);
    }
    out.into_iter().map(exact::checked).collect()
}

/// Extreme rays of `{x : ⟨row, x⟩ ≥ 0 for all rows}` by incremental double
/// description. Rows must already be primitive and distinct.
fn double_description(rows: &[Vec<i64>], dim: usize) -> Result<Vec<Vec<i64>>, ConeError> {
    if rank_i64(rows) < dim {
        return Err(ConeError::NotPointed);
    }
    let m = rows.len();
    // greedy initial basis in input order
    let mut basis: Vec<usize> = Vec::with_capacity(dim);
    let mut chosen: Vec<Vec<i64>> = Vec::with_capacity(dim);
    for (i, r) in rows.iter().enumerate() {
        chosen.push(r.clone());
        if rank_i64(&chosen) == chosen.len() {
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        } else {
            chosen.pop();
        }
    }
    let a_b = RatMatrix::from_int(&IntMatrix::from_rows(&chosen));
    let mut rays: Vec<Vec<i64>> = Vec::with_capacity(dim);
    let mut zeros: Vec<Bits> = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut e = vec![Rational::zero(); dim];
        e[j] = rat(1);
        let sol = exact::solve_linear(&a_b, &e).expect("basis rows are independent");
        rays.push(integerize(&sol.particular));
        let mut z = Bits::new(m);
        for (k, &bi) in basis.iter().enumerate() {
            if k != j {
                z.set(bi);
            }
        }
        zeros.push(z);
    }
    let in_basis: BTreeSet<usize> = basis.iter().copied().collect();
    for (ri, row) in rows.iter().enumerate() {
        if in_basis.contains(&ri) {
            continue;
        }
        let vals: Vec<i64> = rays.iter().map(|r| dot(row, r)).collect();
        if vals.iter().all(|v| *v >= 0) {
            for (z, v) in zeros.iter_mut().zip(&vals) {
                if *v == 0 {
                    z.set(ri);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] < 0).collect();
        let mut new_rays = Vec::new();
        let mut new_zeros = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = zeros[p].and(&zeros[q]);
                if (common.count() as usize) + 2 < dim {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .all(|k| k == p || k == q || !zeros[k].contains_all(&common));
                if !adjacent {
                    continue;
                }
                let r = combine(&rays[p], vals[p], &rays[q], vals[q]);
                let mut z = common;
                z.set(ri);
                new_rays.push(r);
                new_zeros.push(z);
            }
        }
        let mut kept_rays = Vec::with_capacity(rays.len() + new_rays.len());
        let mut kept_zeros = Vec::with_capacity(rays.len() + new_rays.len());
        for (i, (r, mut z)) in rays.into_iter().zip(zeros).enumerate() {
            if vals[i] >= 0 {
                if vals[i] == 0 {
                    z.set(ri);
                }
                kept_rays.push(r);
                kept_zeros.push(z);
            }
        }
        kept_rays.extend(new_rays);
        kept_zeros.extend(new_zeros);
        rays = kept_rays;
        zeros = kept_zeros;
    }
    let mut rays: Vec<Vec<i64>> = rays.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    rays.sort();
    Ok(rays)
}

/// Orthogonal projection of `f` onto the row space of `span`, made primitive.
fn project_to_span(f: &[i64], span: &[Vec<i64>]) -> Vec<i64> {
    let s = RatMatrix::from_int(&IntMatrix::from_rows(span));
    let st = s.transpose();
    let g = s.mul(&st);
    let fr: Vec<Rational> = f.iter().map(|&x| rat(x)).collect();
    let sf = s.mul_vec(&fr);
    let y = exact::solve_linear(&g, &sf).expect("Gram matrix of a basis is invertible").particular;
    integerize(&st.mul_vec(&y))
}

fn finish(
    ambient: usize,
    rays: Vec<Vec<i64>>,
    candidates: &[Vec<i64>],
) -> ConeDD {
    let span_dim = rank_i64(&rays);
    let (equations, span_basis) = if span_dim < ambient && !rays.is_empty() {
        (kernel_basis(&rays, ambient), exact::lattice_basis(&rays, ambient))
    } else if rays.is_empty() {
        ((0..ambient).map(|i| unit(ambient, i)).collect(), Vec::new())
    } else {
        (Vec::new(), Vec::new())
    };
    let mut facets = BTreeSet::new();
    if span_dim > 0 {
        for f in candidates {
            let tight: Vec<Vec<i64>> =
                rays.iter().filter(|r| dot(f, r) == 0).cloned().collect();
            if tight.len() == rays.len() {
                continue;
            }
            if rank_i64(&tight) + 1 != span_dim {
                continue;
            }
            let canon = if span_dim < ambient {
                project_to_span(f, &span_basis)
            } else {
                let mut v = f.clone();
                make_primitive(&mut v);
                v
            };
            facets.insert(canon);
        }
    }
    let facets: Vec<Vec<i64>> = facets.into_iter().collect();
    let incidence = facets
        .iter()
        .map(|f| rays.iter().map(|r| dot(f, r) == 0).collect())
        .collect();
    ConeDD { ambient, span_dim, rays, facets, equations, incidence }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Extreme rays and irredundant facets of `{x : ⟨f, x⟩ ≥ 0 for all f}`.
pub fn dual_description(functionals: &[Vec<i64>], ambient: usize) -> Result<ConeDD, ConeError> {
    if functionals.is_empty() {
        return Err(ConeError::Empty);
    }
    let rows = normalized_rows(functionals, ambient)?;
    let rays = double_description(&rows, ambient)?;
    Ok(finish(ambient, rays, &rows))
}

/// Facets of the cone generated by `rays`; non-extreme generators are dropped.
pub fn facets_of_rays(rays: &[Vec<i64>], ambient: usize) -> Result<ConeDD, ConeError> {
    let gens = normalized_rows(rays, ambient)?;
    if gens.is_empty() {
        return Err(ConeError::Empty);
    }
    let k = rank_i64(&gens);
    let (coords, basis): (Vec<Vec<i64>>, Option<Vec<Vec<i64>>>) = if k == ambient {
        (gens.clone(), None)
    } else {
        let basis = exact::lattice_basis(&gens, ambient);
        let bt = RatMatrix::from_int(&IntMatrix::from_rows(&basis)).transpose();
        let coords = gens
            .iter()
            .map(|g| {
                let gr: Vec<Rational> = g.iter().map(|&x| rat(x)).collect();
                let s = exact::solve_linear(&bt, &gr).expect("generator lies in its own span");
                s.particular
                    .iter()
                    .map(|x| exact::rat_to_i64(x).expect("HNF basis coordinates are integral"))
                    .collect()
            })
            .collect();
        (coords, Some(basis))
    };
    let dual_rays = double_description(&coords, k)?;
    if rank_i64(&dual_rays) < k {
        return Err(ConeError::NotPointed);
    }
    // lift facet functionals back to the ambient space, inside the span
    let facets: Vec<Vec<i64>> = match &basis {
        None => dual_rays,
        Some(b) => {
            let s = RatMatrix::from_int(&IntMatrix::from_rows(b));
            let g = s.mul(&s.transpose());
            dual_rays
                .iter()
                .map(|gf| {
                    let gr: Vec<Rational> = gf.iter().map(|&x| rat(x)).collect();
                    let y = exact::solve_linear(&g, &gr).expect("invertible Gram").particular;
                    integerize(&s.transpose().mul_vec(&y))
                })
                .collect()
        }
    };
    // extreme generators: tight facet set of rank k - 1
    let extreme: Vec<Vec<i64>> = gens
        .iter()
        .filter(|r| {
            let tight: Vec<Vec<i64>> =
                facets.iter().filter(|f| dot(f, r) == 0).cloned().collect();
            rank_i64(&tight) + 1 == k
        })
        .cloned()
        .collect();
    Ok(finish(ambient, extreme, &facets))
}
