//! Hypermetrics on the points `{0, …, n}`, the covariance map to forms,
//! hypermetric facets, cut metrics with their rank-one images, and
//! principal L-domains given by orders.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::cone::{sym_dim, SymVec};
use crate::delaunay::{delaunay_star, QuadForm};
use crate::exact::{rat, rat_frac, RatMatrix, Rational};
use crate::ltype::{build_ldomain, LDomainRecord, LtypeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypError {
    #[error("entries of z must sum to 1")]
    BadZ,
    #[error("facet list only available for 3 to 6 points, got {0}")]
    Unsupported(usize),
    #[error("expected {expected} values, got {got}")]
    Length { expected: usize, got: usize },
    #[error("negative distance")]
    Negative,
    #[error("not an order of 1..{0}")]
    BadOrder(usize),
}

/// Distances on pairs `i < j` of the points `{0, …, n_points − 1}`, stored in
/// lexicographic pair order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypermetric {
    n_points: usize,
    dist: Vec<Rational>,
}

fn pair_index(n_points: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * n_points - i * (i + 1) / 2 + (j - i - 1)
}

impl Hypermetric {
    pub fn new(n_points: usize, dist: Vec<Rational>) -> Result<Self, HypError> {
        let expected = n_points * n_points.saturating_sub(1) / 2;
        if dist.len() != expected {
            return Err(HypError::Length { expected, got: dist.len() });
        }
        if dist.iter().any(|d| d.is_negative()) {
            return Err(HypError::Negative);
        }
        Ok(Hypermetric { n_points, dist })
    }

    pub fn from_fn(n_points: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut dist = Vec::new();
        for i in 0..n_points {
            for j in i + 1..n_points {
                dist.push(f(i, j));
            }
        }
        Hypermetric { n_points, dist }
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn distances(&self) -> &[Rational] {
        &self.dist
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        if i == j {
            Rational::zero()
        } else {
            self.dist[pair_index(self.n_points, i, j)].clone()
        }
    }

    /// The cut metric `δ_S`: 1 on pairs separated by `S`, else 0.
    pub fn cut(n_points: usize, s: &[usize]) -> Self {
        Self::from_fn(n_points, |i, j| rat((s.contains(&i) != s.contains(&j)) as i64))
    }

    /// Relabels points: the new point `k` is the old point `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.n_points, |i, j| self.get(perm[i], perm[j]))
    }
}

/// `a_ij = ½(d(b,i) + d(b,j) − d(i,j))` with `b = base` moved to position 0
/// and the remaining points kept in increasing order.
pub fn covariance(d: &Hypermetric, base: usize) -> RatMatrix {
    let n = d.n_points() - 1;
    let others: Vec<usize> = (0..d.n_points()).filter(|&p| p != base).collect();
    let half = rat_frac(1, 2);
    let mut m = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = (d.get(base, others[i]) + d.get(base, others[j]) - d.get(others[i], others[j])) * &half;
            m.set(i, j, v);
        }
    }
    m
}

/// Inverse of [`covariance`] with base 0: `d(0,i) = a_ii`,
/// `d(i,j) = a_ii + a_jj − 2a_ij`.
pub fn covariance_inverse(a: &RatMatrix) -> Hypermetric {
    let n = a.rows();
    Hypermetric::from_fn(n + 1, |i, j| {
        if i == 0 {
            a.get(j - 1, j - 1).clone()
        } else {
            a.get(i - 1, i - 1) + a.get(j - 1, j - 1) - a.get(i - 1, j - 1) * rat(2)
        }
    })
}

/// `H_z(d) = Σ_{i<j} z_i z_j d(i,j)`.
pub fn hyp_value(z: &[i64], d: &Hypermetric) -> Result<Rational, HypError> {
    if z.iter().sum::<i64>() != 1 {
        return Err(HypError::BadZ);
    }
    if z.len() != d.n_points() {
        return Err(HypError::Length { expected: d.n_points(), got: z.len() });
    }
    let mut s = Rational::zero();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            if z[i] != 0 && z[j] != 0 {
                s += rat(z[i] * z[j]) * d.get(i, j);
            }
        }
    }
    Ok(s)
}

fn orbit_representatives(n_points: usize) -> Result<Vec<Vec<i64>>, HypError> {
    let pad = |v: &[i64]| {
        let mut z = v.to_vec();
        z.resize(n_points, 0);
        z
    };
    let reps: Vec<&[i64]> = match n_points {
        3 => vec![&[1, 1, -1]],
        4 => vec![&[1, 1, -1]],
        5 => vec![&[1, 1, -1], &[1, 1, 1, -1, -1]],
        6 => vec![&[1, 1, -1], &[1, 1, 1, -1, -1], &[1, 1, 1, 1, -1, -2], &[2, 1, 1, -1, -1, -1]],
        _ => return Err(HypError::Unsupported(n_points)),
    };
    Ok(reps.into_iter().map(pad).collect())
}

fn permutations_of(v: &[i64]) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let mut cur = v.to_vec();
    cur.sort();
    loop {
        out.insert(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// All facet vectors `z` of the hypermetric cone on `n_points` points,
/// sorted.
pub fn hyp_facets(n_points: usize) -> Result<Vec<Vec<i64>>, HypError> {
    let mut all = BTreeSet::new();
    for r in orbit_representatives(n_points)? {
        all.extend(permutations_of(&r));
    }
    Ok(all.into_iter().collect())
}

/// Number of facet orbits and facets, for display.
pub fn hyp_facet_orbits(n_points: usize) -> Result<Vec<(Vec<i64>, usize)>, HypError> {
    Ok(orbit_representatives(n_points)?.into_iter().map(|r| {
        let k = permutations_of(&r).len();
        (r, k)
    }).collect())
}

/// The functional `f` on forms (base 0) with `⟨f, ξ(d)⟩ = −H_z(d)`, made
/// primitive, so that the hypermetric inequality reads `⟨f, a⟩ ≥ 0`.
pub fn facet_functional(z: &[i64]) -> SymVec {
    let n = z.len() - 1;
    let mut coords = Vec::with_capacity(sym_dim(n));
    for i in 1..=n {
        for j in i..=n {
            coords.push(if i == j { z[i] * z[i] - z[i] } else { 2 * z[i] * z[j] });
        }
    }
    SymVec::new(n, coords).primitive()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

pub fn classify(d: &Hypermetric) -> Result<Membership, HypError> {
    let mut boundary = false;
    for z in hyp_facets(d.n_points())? {
        let v = hyp_value(&z, d)?;
        if v.is_positive() {
            return Ok(Membership::Outside);
        }
        boundary |= v.is_zero();
    }
    Ok(if boundary { Membership::Boundary } else { Membership::Interior })
}

pub fn is_hypermetric(d: &Hypermetric) -> Result<bool, HypError> {
    Ok(classify(d)? != Membership::Outside)
}

/// `b(S)`: the 0/1 indicator of `S ⊆ {1, …, n}` as a vector of length n.
pub fn indicator(s: &[usize], n: usize) -> Vec<i64> {
    (1..=n).map(|i| s.contains(&i) as i64).collect()
}

/// `p(S) = b(S) b(S)ᵀ`.
pub fn cut_ray(s: &[usize], n: usize) -> SymVec {
    SymVec::outer(&indicator(s, n))
}

/// A complete order of `{1, …, n}`, stored as the lexicographically smaller
/// of itself and its reverse.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderSpec {
    order: Vec<usize>,
}

impl OrderSpec {
    pub fn new(order: Vec<usize>) -> Result<Self, HypError> {
        let n = order.len();
        let mut sorted = order.clone();
        sorted.sort();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return Err(HypError::BadOrder(n));
        }
        let rev: Vec<usize> = order.iter().rev().copied().collect();
        Ok(OrderSpec { order: order.min(rev) })
    }

    pub fn identity(n: usize) -> Self {
        OrderSpec { order: (1..=n).collect() }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Contiguous nonempty subchains, each as a sorted element set.
    pub fn subchains(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut s = self.order[i..=j].to_vec();
                s.sort();
                out.push(s);
            }
        }
        out
    }

    /// Extreme rays `p(S)` of the principal domain, sorted.
    pub fn rays(&self) -> Vec<SymVec> {
        let mut rays: Vec<SymVec> = self.subchains().iter().map(|s| cut_ray(s, self.n())).collect();
        rays.sort();
        rays
    }
}

/// The canonical orders of `{1, …, n}` (one per order/reverse pair), sorted.
pub fn canonical_orders(n: usize) -> Vec<OrderSpec> {
    let base: Vec<i64> = (1..=n as i64).collect();
    permutations_of(&base)
        .into_iter()
        .filter(|p| n < 2 || p[0] < p[n - 1])
        .map(|p| OrderSpec { order: p.into_iter().map(|x| x as usize).collect() })
        .collect()
}

/// The principal L-domain of an order, built from the Delaunay star of the
/// sum of its rays and checked against the expected rays.
pub fn principal_domain(o: &OrderSpec) -> Result<LDomainRecord, LtypeError> {
    let n = o.n();
    let rays = o.rays();
    let sum = rays.iter().skip(1).fold(rays[0].clone(), |s, r| s.add(r));
    let form = QuadForm::from_symvec(&sum)?;
    let rec = build_ldomain(delaunay_star(&form))?;
    let expected: Vec<Vec<i64>> = rays.into_iter().map(|r| r.into_coords()).collect();
    if rec.key() != expected || rec.n() != n {
        return Err(LtypeError::Certification("principal domain rays"));
    }
    Ok(rec)
}

/// One record per canonical order.
pub fn enumerate_principal(n: usize) -> Result<Vec<LDomainRecord>, LtypeError> {
    canonical_orders(n).iter().map(principal_domain).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones(n_points: usize) -> Hypermetric {
        Hypermetric::from_fn(n_points, |_, _| rat(1))
    }

    #[test]
    fn covariance_of_cuts() {
        let m = covariance(&Hypermetric::cut(3, &[1, 2]), 0);
        assert_eq!(m, RatMatrix::from_int(&cut_ray(&[1, 2], 2).to_matrix()));
        let m = covariance(&Hypermetric::cut(3, &[1]), 0);
        assert_eq!(m, RatMatrix::from_int(&cut_ray(&[1], 2).to_matrix()));
    }

    #[test]
    fn covariance_round_trip() {
        let i2 = RatMatrix::identity(2);
        let d = covariance_inverse(&i2);
        assert_eq!(d.distances(), &[rat(1), rat(1), rat(2)]);
        assert_eq!(covariance(&d, 0), i2);
    }

    #[test]
    fn hyp_values() {
        assert_eq!(hyp_value(&[1, 1, -1], &ones(3)).unwrap(), rat(-1));
        assert_eq!(hyp_value(&[1, 1, 1, -1, -1], &Hypermetric::cut(5, &[1])).unwrap(), rat(0));
        assert_eq!(hyp_value(&[1, 0, 0], &ones(3)).unwrap(), rat(0));
        assert_eq!(hyp_value(&[1, 1, 0], &ones(3)), Err(HypError::BadZ));
    }

    #[test]
    fn facet_counts() {
        assert_eq!(hyp_facets(3).unwrap().len(), 3);
        assert_eq!(hyp_facets(4).unwrap().len(), 12);
        assert_eq!(hyp_facets(5).unwrap().len(), 40);
        assert_eq!(hyp_facets(6).unwrap().len(), 210);
        assert_eq!(hyp_facets(7), Err(HypError::Unsupported(7)));
    }

    #[test]
    fn membership() {
        assert_eq!(classify(&Hypermetric::cut(3, &[1])).unwrap(), Membership::Boundary);
        assert_eq!(classify(&ones(3)).unwrap(), Membership::Interior);
        let bad = Hypermetric::new(3, vec![rat(3), rat(1), rat(1)]).unwrap();
        assert_eq!(classify(&bad).unwrap(), Membership::Outside);
    }

    #[test]
    fn facet_functional_matches_value() {
        let a = RatMatrix::from_int(&crate::exact::IntMatrix::from_rows(&[
            vec![3, 2, 1],
            vec![2, 4, 2],
            vec![1, 2, 3],
        ]));
        let d = covariance_inverse(&a);
        for z in hyp_facets(4).unwrap() {
            let f = facet_functional(&z);
            let h = hyp_value(&z, &d).unwrap();
            // f is a positive multiple of −H_z
            let v = f.pair_rational(&a);
            assert_eq!(v.is_zero(), h.is_zero());
            assert_eq!(v.is_positive(), h.is_negative());
        }
    }

    #[test]
    fn orders() {
        assert_eq!(canonical_orders(2).len(), 1);
        assert_eq!(canonical_orders(3).len(), 3);
        assert_eq!(canonical_orders(4).len(), 12);
        assert_eq!(OrderSpec::new(vec![3, 2, 1]).unwrap(), OrderSpec::identity(3));
        assert_eq!(OrderSpec::identity(3).subchains().len(), 6);
    }

    #[test]
    fn principal_n2_and_n3() {
        let rec = principal_domain(&OrderSpec::identity(2)).unwrap();
        assert_eq!(rec.cone.rays().len(), 3);
        let rec = principal_domain(&OrderSpec::identity(3)).unwrap();
        assert_eq!(rec.cone.rays().len(), 6);
        assert_eq!(rec.interior_form, QuadForm::from_rows(&[vec![3, 2, 1], vec![2, 4, 2], vec![1, 2, 3]]).unwrap());
        assert!(rec.star.has_main_simplex());
    }
}
