//! Delaunay geometry of the integer lattice under an exact positive definite
//! form: closest vectors, empty-sphere tests, cells and the star of 0.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::cone::{facets_of_rays, SymVec};
use crate::exact::{
    kernel_basis, make_primitive, rank_i64, rat, solve_square, IntMatrix, RatMatrix, Rational,
};

pub type Point = Vec<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DelaunayError {
    #[error("matrix is not square and symmetric")]
    NotSymmetric,
    #[error("form is not positive definite")]
    NotPositiveDefinite,
    #[error("expected dimension {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("vertices are not co-spherical")]
    NoCircumsphere,
    #[error("vertices do not affinely span the space")]
    NotSpanning,
    #[error("point lies on a {0}-dimensional face of the tiling")]
    OnFace(usize),
}

/// A positive definite rational quadratic form `x ↦ xᵀ a x`, with its
/// `a = Uᵀ D U` decomposition cached for lattice enumeration.
#[derive(Clone)]
pub struct QuadForm {
    m: RatMatrix,
    diag: Vec<Rational>,
    // upper unit triangular, stored row-wise; u[i][j] meaningful for j > i
    upper: Vec<Vec<Rational>>,
}

impl PartialEq for QuadForm {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for QuadForm {}

impl fmt::Debug for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n())
            .map(|i| {
                let row: Vec<String> = (0..self.n()).map(|j| self.m.get(i, j).to_string()).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        write!(f, "QuadForm[{}]", rows.join(", "))
    }
}

impl QuadForm {
    pub fn new(m: RatMatrix) -> Result<Self, DelaunayError> {
        if m.rows() != m.cols() || !m.is_symmetric() {
            return Err(DelaunayError::NotSymmetric);
        }
        let n = m.rows();
        let mut diag: Vec<Rational> = Vec::with_capacity(n);
        let mut upper = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            let mut d = m.get(i, i).clone();
            for k in 0..i {
                d -= &diag[k] * &upper[k][i] * &upper[k][i];
            }
            if !d.is_positive() {
                return Err(DelaunayError::NotPositiveDefinite);
            }
            upper[i][i] = Rational::one();
            for j in i + 1..n {
                let mut s = m.get(i, j).clone();
                for k in 0..i {
                    s -= &diag[k] * &upper[k][i] * &upper[k][j];
                }
                upper[i][j] = s / &d;
            }
            diag.push(d);
        }
        Ok(QuadForm { m, diag, upper })
    }

    pub fn from_int(m: &IntMatrix) -> Result<Self, DelaunayError> {
        Self::new(RatMatrix::from_int(m))
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, DelaunayError> {
        Self::from_int(&IntMatrix::from_rows(rows))
    }

    pub fn from_symvec(s: &SymVec) -> Result<Self, DelaunayError> {
        Self::from_int(&s.to_matrix())
    }

    pub fn n(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.m.get(i, j)
    }

    pub fn norm(&self, v: &[Rational]) -> Rational {
        assert_eq!(v.len(), self.n());
        let mut s = Rational::zero();
        for i in 0..self.n() {
            if v[i].is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for j in 0..self.n() {
                if !v[j].is_zero() {
                    row += self.m.get(i, j) * &v[j];
                }
            }
            s += row * &v[i];
        }
        s
    }

    pub fn norm_int(&self, v: &[i64]) -> Rational {
        self.inner_int(v, v)
    }

    pub fn inner_int(&self, x: &[i64], y: &[i64]) -> Rational {
        let mut s = Rational::zero();
        for i in 0..self.n() {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.n() {
                if y[j] != 0 {
                    s += self.m.get(i, j) * rat(x[i] * y[j]);
                }
            }
        }
        s
    }

    /// `a v`.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.m.mul_vec(v)
    }

    pub fn determinant(&self) -> Rational {
        self.diag.iter().fold(Rational::one(), |p, d| p * d)
    }

    pub fn to_int_matrix(&self) -> Option<IntMatrix> {
        self.m.to_int()
    }

    /// The primitive integer matrix proportional to this form.
    pub fn primitive_symvec(&self) -> SymVec {
        let n = self.n();
        let mut coords = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                coords.push(self.m.get(i, j).clone());
            }
        }
        SymVec::new(n, crate::exact::integerize(&coords))
    }

    /// `Pᵀ a P`.
    pub fn transform(&self, p: &IntMatrix) -> QuadForm {
        let pr = RatMatrix::from_int(p);
        QuadForm::new(pr.transpose().mul(&self.m).mul(&pr)).expect("congruent form stays definite")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sphere {
    pub center: Vec<Rational>,
    pub radius_sq: Rational,
}

/// A Delaunay cell as its sorted vertex list; a simplex when it has `n + 1`
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    vertices: Vec<Point>,
}

pub type Simplex = Cell;

impl Cell {
    pub fn new(mut vertices: Vec<Point>) -> Self {
        vertices.sort();
        vertices.dedup();
        Cell { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.vertices.first().map_or(0, |v| v.len())
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim() + 1
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.vertices.binary_search_by(|v| v.as_slice().cmp(p)).is_ok()
    }

    pub fn translate(&self, t: &[i64]) -> Cell {
        Cell::new(self.vertices.iter().map(|v| add(v, t)).collect())
    }

    /// `C − v`.
    pub fn shift_to_origin(&self, v: &[i64]) -> Cell {
        Cell::new(self.vertices.iter().map(|w| sub(w, v)).collect())
    }

    /// The main simplex `{0, e₁, …, eₙ}`.
    pub fn main_simplex(n: usize) -> Cell {
        let mut vs = vec![vec![0; n]];
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            vs.push(e);
        }
        Cell::new(vs)
    }
}

/// A facet of a cell, with the integer functional `h₀ + h·x` that vanishes
/// on it and is positive on the rest of the cell. `functional[0]` is `h₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub vertices: Vec<Point>,
    pub functional: Vec<i64>,
}

impl Facet {
    pub fn eval(&self, p: &[Rational]) -> Rational {
        let mut s = rat(self.functional[0]);
        for (h, x) in self.functional[1..].iter().zip(p) {
            if *h != 0 {
                s += rat(*h) * x;
            }
        }
        s
    }

    pub fn contains_origin(&self) -> bool {
        self.functional[0] == 0
    }
}

/// The Delaunay cells containing 0.
#[derive(Clone, Debug)]
pub struct DelaunayStar {
    pub form: QuadForm,
    pub cells: Vec<Cell>,
    pub simplicial: bool,
}

impl DelaunayStar {
    pub fn n(&self) -> usize {
        self.form.n()
    }

    pub fn contains_cell(&self, c: &Cell) -> bool {
        self.cells.binary_search(c).is_ok()
    }

    pub fn has_main_simplex(&self) -> bool {
        self.contains_cell(&Cell::main_simplex(self.n()))
    }

    /// One cell per translation class: the lexicographically smallest of the
    /// translates `C − v` for `v ∈ C`.
    pub fn translation_classes(&self) -> Vec<Cell> {
        let mut set = BTreeSet::new();
        for c in &self.cells {
            let rep = c.vertices().iter().map(|v| c.shift_to_origin(v)).min().unwrap();
            set.insert(rep);
        }
        set.into_iter().collect()
    }
}

pub(crate) fn add(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn sub(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn to_rat(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

fn rat_sub(v: &[i64], c: &[Rational]) -> Vec<Rational> {
    v.iter().zip(c).map(|(x, y)| rat(*x) - y).collect()
}

pub fn norm(a: &QuadForm, v: &[Rational]) -> Rational {
    a.norm(v)
}

/// All integers `x` with `(x − m)² ≤ s`, or `None` when there are none.
fn int_range(m: &Rational, s: &Rational) -> Option<(i64, i64)> {
    if s.is_negative() {
        return None;
    }
    let ok = |x: i64| {
        let d = rat(x) - m;
        &d * &d <= *s
    };
    let mf = m.to_f64().unwrap_or(0.0);
    let sf = s.to_f64().unwrap_or(0.0).sqrt();
    let mut lo = (mf - sf).floor() as i64 - 1;
    let mut hi = (mf + sf).ceil() as i64 + 1;
    while ok(lo - 1) {
        lo -= 1;
    }
    while ok(hi + 1) {
        hi += 1;
    }
    while lo <= hi && !ok(lo) {
        lo += 1;
    }
    while hi >= lo && !ok(hi) {
        hi -= 1;
    }
    (lo <= hi).then_some((lo, hi))
}

struct Search<'a> {
    form: &'a QuadForm,
    c: &'a [Rational],
    x: Vec<i64>,
    bound: Rational,
    shrink: bool,
    exclude_zero: bool,
    found: Vec<(Rational, Point)>,
}

impl Search<'_> {
    fn center(&self, i: usize) -> Rational {
        let mut m = self.c[i].clone();
        for j in i + 1..self.x.len() {
            let u = &self.form.upper[i][j];
            if !u.is_zero() {
                m -= u * (rat(self.x[j]) - &self.c[j]);
            }
        }
        m
    }

    fn run(&mut self, level: usize, partial: Rational) {
        let i = level - 1;
        let m = self.center(i);
        let d = &self.form.diag[i];
        let Some((lo, hi)) = int_range(&m, &((&self.bound - &partial) / d)) else {
            return;
        };
        // closest first
        let mut xs: Vec<i64> = (lo..=hi).collect();
        let mf = m.to_f64().unwrap_or(0.0);
        xs.sort_by(|a, b| {
            ((*a as f64) - mf).abs().partial_cmp(&((*b as f64) - mf).abs()).unwrap().then(a.cmp(b))
        });
        for xi in xs {
            let t = rat(xi) - &m;
            let val = &partial + d * &t * &t;
            if val > self.bound {
                continue;
            }
            self.x[i] = xi;
            if i == 0 {
                if self.exclude_zero && self.x.iter().all(|v| *v == 0) {
                    continue;
                }
                if self.shrink && val < self.bound {
                    self.bound = val.clone();
                    self.found.clear();
                }
                self.found.push((val, self.x.clone()));
            } else {
                self.run(level - 1, val);
            }
        }
        self.x[i] = 0;
    }
}

/// Sequential rounding: a lattice point near `c`, used to seed the bound.
fn babai(a: &QuadForm, c: &[Rational]) -> Point {
    let n = a.n();
    let mut s = Search {
        form: a,
        c,
        x: vec![0; n],
        bound: Rational::zero(),
        shrink: false,
        exclude_zero: false,
        found: Vec::new(),
    };
    for i in (0..n).rev() {
        let m = s.center(i);
        s.x[i] = m.round().to_integer().to_i64().expect("coordinate overflow");
    }
    s.x
}

/// All lattice points `v` with `(v − c)ᵀ a (v − c) ≤ bound`, sorted.
pub fn points_within(a: &QuadForm, c: &[Rational], bound: &Rational) -> Vec<(Rational, Point)> {
    let n = a.n();
    let mut s = Search {
        form: a,
        c,
        x: vec![0; n],
        bound: bound.clone(),
        shrink: false,
        exclude_zero: false,
        found: Vec::new(),
    };
    if n > 0 {
        s.run(n, Rational::zero());
    }
    let mut out = s.found;
    out.sort_by(|x, y| x.1.cmp(&y.1));
    out
}

/// Minimum of `(v − c)ᵀ a (v − c)` over `v ∈ ℤⁿ` and all minimizers (sorted).
pub fn closest_vectors(a: &QuadForm, c: &[Rational]) -> (Rational, Vec<Point>) {
    let n = a.n();
    assert_eq!(c.len(), n);
    let start = babai(a, c);
    let bound = a.norm(&rat_sub(&start, c));
    let mut s = Search {
        form: a,
        c,
        x: vec![0; n],
        bound,
        shrink: true,
        exclude_zero: false,
        found: Vec::new(),
    };
    s.run(n, Rational::zero());
    let min = s.bound.clone();
    let mut pts: Vec<Point> = s.found.into_iter().filter(|(v, _)| *v == min).map(|(_, p)| p).collect();
    pts.sort();
    pts.dedup();
    (min, pts)
}

/// Nonzero lattice vectors of norm at most `bound`.
pub fn short_vectors(a: &QuadForm, bound: &Rational) -> Vec<(Rational, Point)> {
    let zero = vec![Rational::zero(); a.n()];
    points_within(a, &zero, bound).into_iter().filter(|(_, p)| p.iter().any(|x| *x != 0)).collect()
}

/// Minimal norm and the full set of minimal vectors (both signs), sorted.
pub fn minimal_vectors(a: &QuadForm) -> (Rational, Vec<Point>) {
    let n = a.n();
    let bound = (0..n).map(|i| a.get(i, i).clone()).min().expect("n > 0");
    let zero = vec![Rational::zero(); n];
    let mut s = Search {
        form: a,
        c: &zero,
        x: vec![0; n],
        bound,
        shrink: true,
        exclude_zero: true,
        found: Vec::new(),
    };
    s.run(n, Rational::zero());
    let min = s.bound.clone();
    let mut pts: Vec<Point> = s.found.into_iter().filter(|(v, _)| *v == min).map(|(_, p)| p).collect();
    pts.sort();
    pts.dedup();
    (min, pts)
}

/// Indices of a maximal affinely independent subset, greedily in order.
pub fn affine_basis(points: &[Point]) -> Vec<usize> {
    let mut idx = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let mut r = vec![1];
        r.extend_from_slice(p);
        rows.push(r);
        if rank_i64(&rows) == rows.len() {
            idx.push(i);
        } else {
            rows.pop();
        }
    }
    idx
}

/// The sphere through all `vertices`, which must affinely span.
pub fn circumsphere(a: &QuadForm, vertices: &[Point]) -> Result<Sphere, DelaunayError> {
    let n = a.n();
    let basis = affine_basis(vertices);
    if basis.len() != n + 1 {
        return Err(DelaunayError::NotSpanning);
    }
    let v0 = &vertices[basis[0]];
    let q0 = a.norm_int(v0);
    let row_of = |v: &Point| -> (Vec<Rational>, Rational) {
        let diff = to_rat(&sub(v, v0));
        let row: Vec<Rational> = a.apply(&diff).into_iter().map(|x| x * rat(2)).collect();
        (row, a.norm_int(v) - &q0)
    };
    let (rows, rhs): (Vec<Vec<Rational>>, Vec<Rational>) =
        basis[1..].iter().map(|&i| row_of(&vertices[i])).unzip();
    let center = solve_square(&RatMatrix::from_rows(rows), &rhs).ok_or(DelaunayError::NotSpanning)?;
    let radius_sq = a.norm(&rat_sub(v0, &center));
    for v in vertices {
        if a.norm(&rat_sub(v, &center)) != radius_sq {
            return Err(DelaunayError::NoCircumsphere);
        }
    }
    Ok(Sphere { center, radius_sq })
}

/// Whether `vertices` is exactly the lattice point set of an empty sphere.
pub fn is_delaunay(a: &QuadForm, vertices: &[Point]) -> Result<bool, DelaunayError> {
    for v in vertices {
        if v.len() != a.n() {
            return Err(DelaunayError::Dimension { expected: a.n(), got: v.len() });
        }
    }
    let s = circumsphere(a, vertices)?;
    let (min, pts) = closest_vectors(a, &s.center);
    if min != s.radius_sq {
        return Ok(false);
    }
    let mut vs = vertices.to_vec();
    vs.sort();
    vs.dedup();
    Ok(vs == pts)
}

/// Facets of a full-dimensional lattice cell.
pub fn cell_facets(cell: &Cell) -> Vec<Facet> {
    let n = cell.dim();
    let vs = cell.vertices();
    if cell.is_simplex() {
        return (0..vs.len())
            .map(|skip| {
                let rows: Vec<Vec<i64>> = vs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, v)| {
                        let mut r = vec![1];
                        r.extend_from_slice(v);
                        r
                    })
                    .collect();
                let mut h = kernel_basis(&rows, n + 1).pop().expect("simplex facet is a hyperplane");
                let w = &vs[skip];
                let val = h[0] + crate::exact::dot(&h[1..], w);
                if val < 0 {
                    h.iter_mut().for_each(|x| *x = -*x);
                }
                make_primitive(&mut h);
                let vertices =
                    vs.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| v.clone()).collect();
                Facet { vertices, functional: h }
            })
            .collect();
    }
    let lifted: Vec<Vec<i64>> = vs
        .iter()
        .map(|v| {
            let mut r = vec![1];
            r.extend_from_slice(v);
            r
        })
        .collect();
    let hull = facets_of_rays(&lifted, n + 1).expect("cell is a polytope");
    hull.facets()
        .iter()
        .map(|f| {
            let vertices = vs
                .iter()
                .filter(|v| f[0] + crate::exact::dot(&f[1..], v) == 0)
                .cloned()
                .collect();
            Facet { vertices, functional: f.clone() }
        })
        .collect()
}

/// Moves the center of an empty sphere through `p0` along `c0 + t·d`
/// (`d` is `a`-orthogonal to the affine hull of the points already on the
/// sphere) until new lattice points reach it. `v` must satisfy
/// `dᵀ a (v − p0) > 0`. Returns the sphere's lattice points and the sphere.
fn advance_sphere(
    a: &QuadForm,
    p0: &[i64],
    c0: &[Rational],
    r0: &Rational,
    d: &[Rational],
    mut v: Point,
) -> (Vec<Point>, Sphere) {
    let ad = a.apply(d);
    let beta = |v: &[i64]| -> Rational {
        sub(v, p0).iter().zip(&ad).map(|(x, y)| rat(*x) * y).sum::<Rational>() * rat(2)
    };
    loop {
        let b = beta(&v);
        debug_assert!(b.is_positive());
        let alpha = a.norm(&rat_sub(&v, c0)) - r0;
        let t = alpha / b;
        let center: Vec<Rational> = c0.iter().zip(d).map(|(c, x)| c + &t * x).collect();
        let radius_sq = a.norm(&rat_sub(p0, &center));
        let (min, pts) = closest_vectors(a, &center);
        if min < radius_sq {
            v = pts.into_iter().next().unwrap();
            continue;
        }
        debug_assert_eq!(min, radius_sq);
        return (pts, Sphere { center, radius_sq });
    }
}

/// The cell on the other side of `facet` of `cell`.
pub fn pivot(a: &QuadForm, cell: &Cell, facet: &Facet) -> Cell {
    let sphere = circumsphere(a, cell.vertices()).expect("cell is Delaunay");
    let h: Vec<Rational> = facet.functional[1..].iter().map(|&x| rat(-x)).collect();
    let d = solve_square(a.matrix(), &h).expect("definite form is invertible");
    let p0 = &facet.vertices[0];
    let i = facet.functional[1..].iter().position(|x| *x != 0).expect("nonzero normal");
    let mut v = p0.clone();
    v[i] -= facet.functional[1 + i].signum();
    let (pts, _) = advance_sphere(a, p0, &sphere.center, &sphere.radius_sq, &d, v);
    Cell::new(pts)
}

/// Some Delaunay cell containing 0, found by growing an empty sphere from
/// the origin.
pub fn seed_cell(a: &QuadForm) -> Cell {
    let n = a.n();
    let mut pts: Vec<Point> = vec![vec![0; n]];
    let mut center = vec![Rational::zero(); n];
    let mut radius_sq = Rational::zero();
    let candidates: Vec<Vec<i64>> = std::iter::once((1..=n as i64).map(|k| k * k + 1).collect())
        .chain((0..n).map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        }))
        .collect();
    loop {
        let basis = affine_basis(&pts);
        if basis.len() == n + 1 {
            return Cell::new(pts);
        }
        let p0 = pts[basis[0]].clone();
        let dirs: Vec<Vec<Rational>> =
            basis[1..].iter().map(|&i| to_rat(&sub(&pts[i], &p0))).collect();
        let d = candidates
            .iter()
            .map(|g| orthogonal_part(a, &to_rat(g), &dirs))
            .find(|d| d.iter().any(|x| !x.is_zero()))
            .expect("some candidate leaves the span");
        let ad = a.apply(&d);
        let i = ad.iter().position(|x| !x.is_zero()).unwrap();
        let mut v = p0.clone();
        v[i] += if ad[i].is_positive() { 1 } else { -1 };
        let (new_pts, s) = advance_sphere(a, &p0, &center, &radius_sq, &d, v);
        pts = new_pts;
        center = s.center;
        radius_sq = s.radius_sq;
    }
}

/// Component of `g` `a`-orthogonal to the span of `dirs`.
fn orthogonal_part(a: &QuadForm, g: &[Rational], dirs: &[Vec<Rational>]) -> Vec<Rational> {
    if dirs.is_empty() {
        return g.to_vec();
    }
    let k = dirs.len();
    let adirs: Vec<Vec<Rational>> = dirs.iter().map(|d| a.apply(d)).collect();
    let dotr = |x: &[Rational], y: &[Rational]| -> Rational { x.iter().zip(y).map(|(p, q)| p * q).sum() };
    let gram = RatMatrix::from_rows(
        (0..k).map(|i| (0..k).map(|j| dotr(&dirs[i], &adirs[j])).collect()).collect(),
    );
    let rhs: Vec<Rational> = adirs.iter().map(|ad| dotr(ad, g)).collect();
    let y = solve_square(&gram, &rhs).expect("independent directions");
    let mut out = g.to_vec();
    for (yi, d) in y.iter().zip(dirs) {
        for (o, x) in out.iter_mut().zip(d) {
            *o -= yi * x;
        }
    }
    out
}

/// The Delaunay cell whose interior contains `p`.
pub fn delaunay_cell(a: &QuadForm, p: &[Rational]) -> Result<Cell, DelaunayError> {
    let n = a.n();
    if p.len() != n {
        return Err(DelaunayError::Dimension { expected: n, got: p.len() });
    }
    let shift: Vec<i64> =
        p.iter().map(|x| x.floor().to_integer().to_i64().expect("coordinate overflow")).collect();
    let mut cur = seed_cell(a).translate(&shift);
    loop {
        let facets = cell_facets(&cur);
        let vals: Vec<Rational> = facets.iter().map(|f| f.eval(p)).collect();
        if let Some(k) = vals.iter().position(|v| v.is_negative()) {
            cur = pivot(a, &cur, &facets[k]);
            continue;
        }
        let tight: Vec<Vec<i64>> = facets
            .iter()
            .zip(&vals)
            .filter(|(_, v)| v.is_zero())
            .map(|(f, _)| f.functional[1..].to_vec())
            .collect();
        if tight.is_empty() {
            return Ok(cur);
        }
        return Err(DelaunayError::OnFace(n - rank_i64(&tight)));
    }
}

/// All Delaunay cells containing 0, by pivoting across facets through 0
/// and closing under the translations `C ↦ C − v`.
pub fn delaunay_star(a: &QuadForm) -> DelaunayStar {
    let mut cells: BTreeSet<Cell> = BTreeSet::new();
    let mut facets_of: HashMap<Cell, Vec<Facet>> = HashMap::new();
    let mut facet_count: HashMap<Vec<Point>, u32> = HashMap::new();
    let mut queue: VecDeque<Cell> = VecDeque::new();
    let insert_all = |c: &Cell,
                          cells: &mut BTreeSet<Cell>,
                          facets_of: &mut HashMap<Cell, Vec<Facet>>,
                          facet_count: &mut HashMap<Vec<Point>, u32>,
                          queue: &mut VecDeque<Cell>| {
        for v in c.vertices() {
            let t = c.shift_to_origin(v);
            if cells.contains(&t) {
                continue;
            }
            let fs: Vec<Facet> = cell_facets(&t).into_iter().filter(|f| f.contains_origin()).collect();
            for f in &fs {
                *facet_count.entry(f.vertices.clone()).or_insert(0) += 1;
            }
            facets_of.insert(t.clone(), fs);
            cells.insert(t.clone());
            queue.push_back(t);
        }
    };
    let seed = seed_cell(a);
    insert_all(&seed, &mut cells, &mut facets_of, &mut facet_count, &mut queue);
    while let Some(c) = queue.pop_front() {
        let fs = facets_of[&c].clone();
        for f in fs {
            if facet_count[&f.vertices] >= 2 {
                continue;
            }
            let next = pivot(a, &c, &f);
            debug_assert!(!cells.contains(&next));
            insert_all(&next, &mut cells, &mut facets_of, &mut facet_count, &mut queue);
        }
    }
    let cells: Vec<Cell> = cells.into_iter().collect();
    let simplicial = cells.iter().all(|c| c.is_simplex());
    DelaunayStar { form: a.clone(), cells, simplicial }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_frac;

    fn a2() -> QuadForm {
        QuadForm::from_rows(&[vec![2, 1], vec![1, 2]]).unwrap()
    }

    fn cell(vs: &[&[i64]]) -> Cell {
        Cell::new(vs.iter().map(|v| v.to_vec()).collect())
    }

    #[test]
    fn norms() {
        let i2 = QuadForm::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(i2.norm_int(&[1, 1]), rat(2));
        assert_eq!(a2().norm_int(&[1, -1]), rat(2));
        assert_eq!(a2().norm_int(&[0, 0]), rat(0));
    }

    #[test]
    fn rejects_indefinite() {
        assert_eq!(
            QuadForm::from_rows(&[vec![1, 2], vec![2, 1]]).unwrap_err(),
            DelaunayError::NotPositiveDefinite
        );
        assert_eq!(QuadForm::from_rows(&[vec![1, 2], vec![0, 1]]).unwrap_err(), DelaunayError::NotSymmetric);
    }

    #[test]
    fn cvp_examples() {
        let i2 = QuadForm::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let (m, pts) = closest_vectors(&i2, &[rat_frac(1, 2), rat_frac(1, 2)]);
        assert_eq!(m, rat_frac(1, 2));
        assert_eq!(pts, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let (m, pts) = closest_vectors(&a2(), &[rat_frac(1, 3), rat_frac(1, 3)]);
        assert_eq!(m, rat_frac(2, 3));
        assert_eq!(pts, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        let i3 = QuadForm::from_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let (m, pts) = closest_vectors(&i3, &[rat(0), rat(0), rat(0)]);
        assert_eq!(m, rat(0));
        assert_eq!(pts, vec![vec![0, 0, 0]]);
    }

    #[test]
    fn delaunay_tests() {
        assert!(is_delaunay(&a2(), &[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap());
        let i2 = QuadForm::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(!is_delaunay(&i2, &[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap());
        assert!(!is_delaunay(&a2(), &[vec![0, 0], vec![1, 0], vec![0, 2]]).unwrap());
        assert_eq!(
            is_delaunay(&a2(), &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]),
            Err(DelaunayError::NoCircumsphere)
        );
    }

    #[test]
    fn cells_by_point() {
        let c = delaunay_cell(&a2(), &[rat_frac(1, 4), rat_frac(1, 4)]).unwrap();
        assert_eq!(c, cell(&[&[0, 0], &[1, 0], &[0, 1]]));
        let i2 = QuadForm::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let c = delaunay_cell(&i2, &[rat_frac(1, 2), rat_frac(1, 2)]).unwrap();
        assert_eq!(c.len(), 4);
        let far = delaunay_cell(&a2(), &[rat_frac(31, 4), rat_frac(-9, 4)]).unwrap();
        assert!(is_delaunay(&a2(), far.vertices()).unwrap());
        assert_eq!(delaunay_cell(&i2, &[rat_frac(1, 2), rat(0)]), Err(DelaunayError::OnFace(1)));
        assert_eq!(delaunay_cell(&a2(), &[rat(0), rat(0)]), Err(DelaunayError::OnFace(0)));
    }

    #[test]
    fn hexagonal_star() {
        let s = delaunay_star(&a2());
        assert!(s.simplicial);
        let expect: BTreeSet<Cell> = [
            cell(&[&[0, 0], &[1, 0], &[0, 1]]),
            cell(&[&[0, 0], &[-1, 0], &[0, -1]]),
            cell(&[&[0, 0], &[1, 0], &[1, -1]]),
            cell(&[&[0, 0], &[0, -1], &[1, -1]]),
            cell(&[&[0, 0], &[-1, 0], &[-1, 1]]),
            cell(&[&[0, 0], &[0, 1], &[-1, 1]]),
        ]
        .into_iter()
        .collect();
        assert_eq!(s.cells.iter().cloned().collect::<BTreeSet<_>>(), expect);
        assert_eq!(s.translation_classes().len(), 2);
    }

    #[test]
    fn square_star() {
        let i2 = QuadForm::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let s = delaunay_star(&i2);
        assert!(!s.simplicial);
        assert_eq!(s.cells.len(), 4);
        assert!(s.cells.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn minimal_vectors_a2() {
        let (m, v) = minimal_vectors(&a2());
        assert_eq!(m, rat(2));
        assert_eq!(v.len(), 6);
    }
}
