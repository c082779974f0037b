//! L-domains of simplicial Delaunay stars: wall inequalities, the cone they
//! cut out, flips across walls, and arithmetic equivalence of forms.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;
use thiserror::Error;

use crate::cone::{dual_description, sym_dim, ConeDD, ConeError, SymVec};
use crate::delaunay::{
    delaunay_star, minimal_vectors, short_vectors, Cell, DelaunayError, DelaunayStar, Point,
    QuadForm,
};
use crate::exact::{affine_dependence, IntMatrix, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LtypeError {
    #[error("simplices do not share a facet")]
    NotAdjacent,
    #[error("star is not simplicial")]
    NotSimplicial,
    #[error("wall inequalities do not cut out a full-dimensional cone")]
    NotPrimitive,
    #[error("form lies on a wall of its domain")]
    FormOnWall,
    #[error("facet {0} lies on the boundary of the hypermetric cone")]
    BoundaryFacet(usize),
    #[error("facet {0} has no repartitioning polytope")]
    NotAWall(usize),
    #[error("boundary marking disagrees with hypermetric facets on facet {0}")]
    BoundaryMismatch(usize),
    #[error("certification failed: {0}")]
    Certification(&'static str),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Delaunay(#[from] DelaunayError),
}

/// The n+2 points of two adjacent simplices with their affine dependence,
/// oriented so that `Σ bᵢ vᵢᵀ a vᵢ ≥ 0` on the domain of the pair.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RepartitionPolytope {
    pub points: Vec<Point>,
    pub dependence: Vec<i64>,
}

impl RepartitionPolytope {
    /// The same polytope translated so that its smallest point is 0 (a
    /// canonical representative of the translation class).
    pub fn normalized(&self) -> RepartitionPolytope {
        let min = self.points.iter().min().unwrap().clone();
        let mut pairs: Vec<(Point, i64)> = self
            .points
            .iter()
            .map(|p| crate::delaunay::sub(p, &min))
            .zip(self.dependence.iter().copied())
            .collect();
        pairs.sort();
        let (points, dependence) = pairs.into_iter().unzip();
        RepartitionPolytope { points, dependence }
    }

    /// Cells of the current triangulation (`positive = true`) or of the
    /// flipped one.
    pub fn triangulation(&self, positive: bool) -> Vec<Cell> {
        (0..self.points.len())
            .filter(|&i| if positive { self.dependence[i] > 0 } else { self.dependence[i] < 0 })
            .map(|skip| {
                Cell::new(
                    self.points.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, p)| p.clone()).collect(),
                )
            })
            .collect()
    }

    pub fn translate(&self, t: &[i64]) -> RepartitionPolytope {
        RepartitionPolytope {
            points: self.points.iter().map(|p| crate::delaunay::add(p, t)).collect(),
            dependence: self.dependence.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallInequality {
    pub functional: SymVec,
    pub source_pair: (Cell, Cell),
    pub polytope: RepartitionPolytope,
}

/// `f` with `⟨f, a⟩ = Σ bᵢ vᵢᵀ a vᵢ`, not yet normalized.
fn functional_of(points: &[Point], b: &[i64]) -> SymVec {
    let n = points[0].len();
    let mut coords = Vec::with_capacity(sym_dim(n));
    for i in 0..n {
        for j in i..n {
            let s: i64 = points.iter().zip(b).map(|(v, bk)| bk * v[i] * v[j]).sum();
            coords.push(if i == j { s } else { 2 * s });
        }
    }
    SymVec::new(n, coords)
}

/// The linear inequality on forms under which `s1` and `s2` remain Delaunay
/// together.
pub fn repartition_inequality(s1: &Cell, s2: &Cell) -> Result<WallInequality, LtypeError> {
    let n = s1.dim();
    let common = s1.vertices().iter().filter(|v| s2.contains(v)).count();
    if common != n || s1.len() != n + 1 || s2.len() != n + 1 {
        return Err(LtypeError::NotAdjacent);
    }
    let extra = s2.vertices().iter().find(|v| !s1.contains(v)).unwrap().clone();
    let mut points = s1.vertices().to_vec();
    points.push(extra);
    let mut b = affine_dependence(&points).map_err(|_| LtypeError::NotAdjacent)?;
    if b[n + 1] < 0 {
        b.iter_mut().for_each(|x| *x = -*x);
    }
    let functional = functional_of(&points, &b).primitive();
    if functional.coords().iter().all(|x| *x == 0) {
        return Err(LtypeError::NotAdjacent);
    }
    Ok(WallInequality {
        functional,
        source_pair: (s1.clone(), s2.clone()),
        polytope: RepartitionPolytope { points, dependence: b },
    })
}

/// All wall inequalities from pairs of cells of a simplicial star sharing a
/// facet (which then contains 0).
pub fn star_walls(cells: &[Cell]) -> Result<Vec<WallInequality>, LtypeError> {
    let mut by_facet: BTreeMap<Vec<Point>, Vec<usize>> = BTreeMap::new();
    for (k, c) in cells.iter().enumerate() {
        if !c.is_simplex() {
            return Err(LtypeError::NotSimplicial);
        }
        let n = c.dim();
        for skip in c.vertices() {
            if skip.iter().all(|x| *x == 0) {
                continue;
            }
            let facet: Vec<Point> = c.vertices().iter().filter(|v| *v != skip).cloned().collect();
            debug_assert_eq!(facet.len(), n);
            by_facet.entry(facet).or_default().push(k);
        }
    }
    let mut walls = Vec::new();
    for ks in by_facet.values() {
        if ks.len() == 2 {
            walls.push(repartition_inequality(&cells[ks[0]], &cells[ks[1]])?);
        }
    }
    Ok(walls)
}

/// A primitive L-domain with everything needed to traverse from it.
#[derive(Clone, Debug)]
pub struct LDomainRecord {
    pub star: DelaunayStar,
    pub cone: ConeDD,
    pub interior_form: QuadForm,
    pub fingerprint: Fingerprint,
    /// For each facet of `cone`, the distinct repartitioning polytopes
    /// (up to translation) whose inequality is that facet.
    pub wall_map: Vec<Vec<RepartitionPolytope>>,
    /// For each facet, whether it lies on the boundary of the hypermetric cone.
    pub hyp_boundary: Vec<bool>,
    /// Wall inequalities that are not facets of the cone.
    pub redundant_inequalities: Vec<SymVec>,
}

impl LDomainRecord {
    pub fn n(&self) -> usize {
        self.star.n()
    }

    pub fn rays(&self) -> Vec<SymVec> {
        self.cone.rays().iter().map(|r| SymVec::new(self.n(), r.clone())).collect()
    }

    pub fn facets(&self) -> Vec<SymVec> {
        self.cone.facets().iter().map(|f| SymVec::new(self.n(), f.clone())).collect()
    }

    /// Canonical identity of the cone: its sorted primitive rays.
    pub fn key(&self) -> Vec<Vec<i64>> {
        self.cone.rays().to_vec()
    }

    pub fn hyp_boundary_facets(&self) -> Vec<usize> {
        (0..self.hyp_boundary.len()).filter(|&i| self.hyp_boundary[i]).collect()
    }

    /// Facets crossing into another primitive domain of the hypermetric cone.
    pub fn interior_walls(&self) -> Vec<usize> {
        (0..self.hyp_boundary.len()).filter(|&i| !self.hyp_boundary[i]).collect()
    }
}

pub fn interior_form(rec: &LDomainRecord) -> QuadForm {
    rec.interior_form.clone()
}

fn cone_from_walls(n: usize, walls: &[WallInequality]) -> Result<ConeDD, LtypeError> {
    let fs: Vec<Vec<i64>> = walls
        .iter()
        .map(|w| w.functional.coords().to_vec())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cone = dual_description(&fs, sym_dim(n)).map_err(|e| match e {
        ConeError::NotPointed => LtypeError::NotPrimitive,
        other => LtypeError::Cone(other),
    })?;
    if !cone.is_full_dimensional() {
        return Err(LtypeError::NotPrimitive);
    }
    Ok(cone)
}

fn assemble(star: DelaunayStar, walls: Vec<WallInequality>, cone: ConeDD) -> Result<LDomainRecord, LtypeError> {
    let n = star.n();
    for f in cone.facets() {
        if !SymVec::new(n, f.clone()).pair_rational(star.form.matrix()).is_positive() {
            return Err(LtypeError::FormOnWall);
        }
    }
    let sum = SymVec::new(n, cone.ray_sum());
    let interior_form = QuadForm::from_symvec(&sum)?;
    let mut wall_map: Vec<BTreeSet<RepartitionPolytope>> = vec![BTreeSet::new(); cone.facets().len()];
    let mut redundant = BTreeSet::new();
    for w in &walls {
        match cone.facet_index(w.functional.coords()) {
            Some(i) => {
                wall_map[i].insert(w.polytope.normalized());
            }
            None => {
                redundant.insert(w.functional.clone());
            }
        }
    }
    let fingerprint = fingerprint(&interior_form);
    let mut rec = LDomainRecord {
        star,
        cone,
        interior_form,
        fingerprint,
        wall_map: wall_map.into_iter().map(|s| s.into_iter().collect()).collect(),
        hyp_boundary: Vec::new(),
        redundant_inequalities: redundant.into_iter().collect(),
    };
    rec.hyp_boundary = crate::enumerate::mark_hyp_boundary(&rec)?;
    Ok(rec)
}

/// Whether `c` is a lattice translate of `main`.
pub fn is_translate_of(c: &Cell, main: &Cell) -> bool {
    c.len() == main.len() && {
        let t = crate::delaunay::sub(&c.vertices()[0], &main.vertices()[0]);
        main.translate(&t) == *c
    }
}

/// The L-domain of a simplicial star.
pub fn build_ldomain(star: DelaunayStar) -> Result<LDomainRecord, LtypeError> {
    if !star.simplicial {
        return Err(LtypeError::NotSimplicial);
    }
    let walls = star_walls(&star.cells)?;
    let cone = cone_from_walls(star.n(), &walls)?;
    assemble(star, walls, cone)
}

/// The star on the other side of wall `facet`, certified against a direct
/// recomputation at an interior form of the neighboring domain.
pub fn flip(rec: &LDomainRecord, facet: usize) -> Result<DelaunayStar, LtypeError> {
    flip_record(rec, facet).map(|r| r.star)
}

/// Like [`flip`], returning the full neighboring record.
pub fn flip_record(rec: &LDomainRecord, facet: usize) -> Result<LDomainRecord, LtypeError> {
    if rec.hyp_boundary.get(facet).copied().unwrap_or(false) {
        return Err(LtypeError::BoundaryFacet(facet));
    }
    flip_unchecked(rec, facet)
}

/// Flips across any facet with repartitioning polytopes, including ones on
/// the hypermetric boundary.
pub fn flip_unchecked(rec: &LDomainRecord, facet: usize) -> Result<LDomainRecord, LtypeError> {
    let polys = rec.wall_map.get(facet).filter(|p| !p.is_empty()).ok_or(LtypeError::NotAWall(facet))?;
    let mut remove = BTreeSet::new();
    let mut insert = BTreeSet::new();
    for p in polys {
        for u in &p.points {
            let neg: Vec<i64> = u.iter().map(|x| -x).collect();
            let q = p.translate(&neg);
            let zero = vec![0; rec.n()];
            remove.extend(q.triangulation(true).into_iter().filter(|c| c.contains(&zero)));
            insert.extend(q.triangulation(false).into_iter().filter(|c| c.contains(&zero)));
        }
    }
    let current: BTreeSet<Cell> = rec.star.cells.iter().cloned().collect();
    if !remove.is_subset(&current) || insert.iter().any(|c| current.contains(c)) {
        return Err(LtypeError::Certification("flipped cells missing from star"));
    }
    let cells: Vec<Cell> = current.difference(&remove).cloned().chain(insert).collect::<BTreeSet<_>>().into_iter().collect();
    let walls = star_walls(&cells)?;
    let cone = cone_from_walls(rec.n(), &walls)?;
    let a = QuadForm::from_symvec(&SymVec::new(rec.n(), cone.ray_sum()))?;
    let star = delaunay_star(&a);
    if star.cells != cells {
        return Err(LtypeError::Certification("flipped star differs from recomputed star"));
    }
    assemble(star, walls, cone)
}

/// Invariants of a form preserved by arithmetic equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub n: usize,
    pub det: Rational,
    pub min_norm: Rational,
    pub min_count: usize,
    pub gram_multiset: Vec<(Rational, usize)>,
}

pub fn fingerprint(a: &QuadForm) -> Fingerprint {
    let (min_norm, mins) = minimal_vectors(a);
    let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
    for (i, x) in mins.iter().enumerate() {
        for y in &mins[i + 1..] {
            *counts.entry(a.inner_int(x, y)).or_insert(0) += 1;
        }
    }
    Fingerprint {
        n: a.n(),
        det: a.determinant(),
        min_norm,
        min_count: mins.len(),
        gram_multiset: counts.into_iter().collect(),
    }
}

struct IsoSearch<'a> {
    a: &'a QuadForm,
    b: &'a QuadForm,
    cands: Vec<Vec<Point>>,
    cols: Vec<Point>,
    all: bool,
    found: Vec<IntMatrix>,
}

impl IsoSearch<'_> {
    fn run(&mut self, i: usize) -> bool {
        let n = self.a.n();
        if i == n {
            let p = IntMatrix::from_cols(&self.cols);
            if p.determinant().abs() == 1 {
                self.found.push(p);
                return !self.all;
            }
            return false;
        }
        for k in 0..self.cands[i].len() {
            let x = self.cands[i][k].clone();
            let ok = (0..i).all(|j| self.a.inner_int(&self.cols[j], &x) == *self.b.get(j, i));
            if !ok {
                continue;
            }
            self.cols.push(x);
            if crate::exact::rank_i64(&self.cols) == self.cols.len() && self.run(i + 1) {
                return true;
            }
            self.cols.pop();
        }
        false
    }
}

fn iso_search(a: &QuadForm, b: &QuadForm, all: bool) -> Vec<IntMatrix> {
    let n = a.n();
    let max_diag = (0..n).map(|i| b.get(i, i).clone()).max().unwrap();
    let pool = short_vectors(a, &max_diag);
    let cands: Vec<Vec<Point>> = (0..n)
        .map(|i| pool.iter().filter(|(v, _)| v == b.get(i, i)).map(|(_, p)| p.clone()).collect())
        .collect();
    let mut s = IsoSearch { a, b, cands, cols: Vec::new(), all, found: Vec::new() };
    s.run(0);
    s.found
}

/// A unimodular `P` with `Pᵀ a P = b`, if one exists. Of `P` and `−P` the
/// one whose first column has a positive leading entry is returned.
pub fn arithmetically_equivalent(a: &QuadForm, b: &QuadForm) -> Option<IntMatrix> {
    if a.n() != b.n() {
        return None;
    }
    if a == b {
        return Some(IntMatrix::identity(a.n()));
    }
    if fingerprint(a) != fingerprint(b) {
        return None;
    }
    let p = iso_search(a, b, false).into_iter().next()?;
    let col = p.col(0);
    if col.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
        let neg: Vec<Vec<i64>> = p.to_rows().iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        return Some(IntMatrix::from_rows(&neg));
    }
    Some(p)
}

/// The automorphism group `{P : Pᵀ a P = a}`, sorted.
pub fn stabilizer(a: &QuadForm) -> Vec<IntMatrix> {
    let mut g = iso_search(a, a, true);
    g.sort_by_key(|x| x.to_rows());
    g
}

/// Sign of `⟨f, a⟩` as a convenience for callers holding rational forms.
pub fn evaluate(f: &SymVec, a: &QuadForm) -> Rational {
    f.pair_rational(a.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delaunay::delaunay_star;
    use crate::exact::rat;

    fn cell(vs: &[&[i64]]) -> Cell {
        Cell::new(vs.iter().map(|v| v.to_vec()).collect())
    }

    fn a2() -> QuadForm {
        QuadForm::from_rows(&[vec![2, 1], vec![1, 2]]).unwrap()
    }

    #[test]
    fn wall_examples() {
        let w = repartition_inequality(&cell(&[&[0, 0], &[1, 0], &[0, 1]]), &cell(&[&[1, 0], &[0, 1], &[1, 1]]))
            .unwrap();
        assert_eq!(w.functional.coords(), &[0, 1, 0]);
        assert_eq!(evaluate(&w.functional, &a2()), rat(1));
        let w = repartition_inequality(&cell(&[&[0, 0], &[1, 0], &[0, 1]]), &cell(&[&[0, 0], &[1, 0], &[1, -1]]))
            .unwrap();
        assert_eq!(w.functional.coords(), &[0, -1, 1]);
        assert_eq!(
            repartition_inequality(&cell(&[&[0, 0], &[1, 0], &[0, 1]]), &cell(&[&[0, 0], &[-1, 0], &[0, -1]])),
            Err(LtypeError::NotAdjacent)
        );
    }

    #[test]
    fn hexagonal_domain() {
        let rec = build_ldomain(delaunay_star(&a2())).unwrap();
        assert_eq!(rec.cone.rays(), &[vec![0, 0, 1], vec![1, 0, 0], vec![1, 1, 1]]);
        assert_eq!(rec.interior_form, a2());
        assert_eq!(rec.hyp_boundary, vec![true; 3]);
    }

    #[test]
    fn hexagonal_flip() {
        let rec = build_ldomain(delaunay_star(&a2())).unwrap();
        let f = rec.cone.facet_index(&[0, 1, 0]).unwrap();
        assert_eq!(flip_record(&rec, f).unwrap_err(), LtypeError::BoundaryFacet(f));
        let next = flip_unchecked(&rec, f).unwrap();
        let other = delaunay_star(&QuadForm::from_rows(&[vec![2, -1], vec![-1, 2]]).unwrap());
        assert_eq!(next.star.cells, other.cells);
        assert!(next.star.contains_cell(&cell(&[&[0, 0], &[1, 0], &[1, 1]])));
        let g = next.cone.facet_index(&[0, -1, 0]).unwrap();
        let back = flip_unchecked(&next, g).unwrap();
        assert_eq!(back.key(), rec.key());
    }

    #[test]
    fn equivalence_examples() {
        let b = QuadForm::from_rows(&[vec![2, -1], vec![-1, 2]]).unwrap();
        let p = arithmetically_equivalent(&a2(), &b).unwrap();
        assert_eq!(a2().transform(&p), b);
        assert_eq!(arithmetically_equivalent(&a2(), &a2()), Some(IntMatrix::identity(2)));
        let c = QuadForm::from_rows(&[vec![1, 0], vec![0, 3]]).unwrap();
        assert_eq!(arithmetically_equivalent(&a2(), &c), None);
    }

    #[test]
    fn stabilizer_orders() {
        let i2 = QuadForm::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(stabilizer(&i2).len(), 8);
        assert_eq!(stabilizer(&a2()).len(), 12);
    }
}
