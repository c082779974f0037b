mod common;

use std::collections::BTreeMap;

use ldomain::cone::{dual_description, facets_of_rays, SymVec};
use ldomain::delaunay::{delaunay_star, QuadForm};
use ldomain::enumerate::{all_permutations, orbit_key, point_permutation_matrix};
use ldomain::exact::{rank_i64, rat_frac, IntMatrix, RatMatrix};
use ldomain::hyp::{classify, covariance, covariance_inverse, Hypermetric, Membership};
use ldomain::ltype::arithmetically_equivalent;
use ldomain::unimod::{dual_system, graphic_system, is_unimodular, Graph, Matroid};
use proptest::prelude::*;

fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for &(i, j, k) in ops {
        let (i, j) = (i % n, j % n);
        if i != j {
            let mut e = IntMatrix::identity(n);
            e.set(i, j, k);
            m = m.mul(&e);
        }
    }
    m
}

/// `BᵀB + I` for an integer `B`: positive definite with integer entries.
fn pd_form(n: usize, b: &[i64]) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| b[k * n + i] * b[k * n + j]).sum::<i64>() + i64::from(i == j))
                .collect()
        })
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn covariance_round_trip(pts in 2usize..7, vals in prop::collection::vec((0i64..40, 1i64..9), 15)) {
        let m = pts * (pts - 1) / 2;
        let d = Hypermetric::new(pts, vals[..m].iter().map(|&(p, q)| rat_frac(p, q)).collect()).unwrap();
        for base in 0..pts {
            prop_assert_eq!(covariance_inverse(&covariance(&d, base)).permuted(&rebase(pts, base)), d.clone());
        }
    }

    #[test]
    fn cut_combinations_are_hypermetric(weights in prop::collection::vec(0i64..4, 15)) {
        // nonnegative combinations of cuts on 5 points
        let d = Hypermetric::from_fn(5, |i, j| {
            let mut s = 0;
            for (k, w) in weights.iter().enumerate() {
                let mask = k + 1;
                if ((mask >> i) & 1) != ((mask >> j) & 1) {
                    s += w;
                }
            }
            rat_frac(s, 1)
        });
        prop_assert_ne!(classify(&d).unwrap(), Membership::Outside);
    }

    #[test]
    fn symvec_congruence_matches_matrix(b in prop::collection::vec(-2i64..3, 9), ops in prop::collection::vec((0usize..3, 0usize..3, -1i64..2), 0..8)) {
        let a = pd_form(3, &b);
        let p = unimodular(3, &ops);
        let s = SymVec::from_matrix(&IntMatrix::from_rows(&a));
        prop_assert_eq!(s.to_matrix().to_rows(), a.clone());
        let direct = p.transpose().mul(&IntMatrix::from_rows(&a)).mul(&p);
        prop_assert_eq!(s.congruence(&p).to_matrix(), direct);
    }

    #[test]
    fn cone_descriptions_agree(pts in prop::collection::vec(prop::collection::vec(0i64..4, 3), 3..9)) {
        let mut rays: Vec<Vec<i64>> = pts.into_iter().map(|mut p| { p.push(1); p }).collect();
        rays.sort();
        rays.dedup();
        prop_assume!(rank_i64(&rays) == 4);
        let c = facets_of_rays(&rays, 4).unwrap();
        // every facet supports the input and is tight on a codimension-1 set of extreme rays
        for f in c.facets() {
            prop_assert!(rays.iter().all(|r| dot(f, r) >= 0));
            let tight: Vec<Vec<i64>> = c.rays().iter().filter(|r| dot(f, r) == 0).cloned().collect();
            prop_assert_eq!(rank_i64(&tight), 3);
        }
        // extreme rays are inputs not in the cone of the others (checked by the facets)
        for r in c.rays() {
            prop_assert!(rays.contains(r));
        }
        let back = dual_description(c.facets(), 4).unwrap();
        prop_assert_eq!(back.rays(), c.rays());
    }

    #[test]
    fn stars_are_empty_sphere_and_closed(n in 2usize..4, b in prop::collection::vec(-2i64..3, 9)) {
        let a = pd_form(n, &b[..n * n]);
        let star = delaunay_star(&QuadForm::from_rows(&a).unwrap());
        for c in &star.cells {
            prop_assert!(c.contains(&vec![0; n]));
            common::empty_sphere(&a, c.vertices()).map_err(TestCaseError::fail)?;
        }
        if star.simplicial {
            // every facet through 0 lies in exactly two cells of the star
            let mut count: BTreeMap<Vec<Vec<i64>>, usize> = BTreeMap::new();
            for c in &star.cells {
                for skip in 0..c.len() {
                    let f: Vec<Vec<i64>> = c.vertices().iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| v.clone()).collect();
                    if f.contains(&vec![0; n]) {
                        *count.entry(f).or_insert(0) += 1;
                    }
                }
            }
            prop_assert!(count.values().all(|k| *k == 2));
        }
    }

    #[test]
    fn equivalence_finds_witness(b in prop::collection::vec(-2i64..3, 9), ops in prop::collection::vec((0usize..3, 0usize..3, -1i64..2), 0..8)) {
        let a = QuadForm::from_rows(&pd_form(3, &b)).unwrap();
        let p = unimodular(3, &ops);
        let t = a.transform(&p);
        let w = arithmetically_equivalent(&a, &t).expect("equivalent by construction");
        prop_assert_eq!(w.determinant().abs(), 1);
        prop_assert_eq!(a.transform(&w), t);
    }

    #[test]
    fn graphic_duals(extra in prop::collection::vec((0usize..5, 0usize..5), 0..6)) {
        let mut edges: Vec<(usize, usize)> = (1..5).map(|v| (v - 1, v)).collect();
        for (u, v) in extra {
            if u != v { edges.push((u.min(v), u.max(v))); }
        }
        let g = graphic_system(&Graph::new(5, edges));
        prop_assert!(is_unimodular(&g));
        let d = dual_system(&g).unwrap();
        prop_assert!(is_unimodular(&d));
        let dd = dual_system(&d).unwrap();
        prop_assert!(Matroid::of_vectors(&dd).is_isomorphic(&Matroid::of_vectors(&g)));
    }

    #[test]
    fn orbit_key_is_invariant(k in 0usize..24) {
        let sigma = all_permutations(4)[k].clone();
        let mats: Vec<IntMatrix> = all_permutations(4).iter().map(|s| point_permutation_matrix(s)).collect();
        let rays: Vec<Vec<i64>> = ldomain::hyp::OrderSpec::identity(3).rays().into_iter().map(|r| r.into_coords()).collect();
        let m = point_permutation_matrix(&sigma);
        let moved: Vec<Vec<i64>> = rays.iter().map(|r| SymVec::new(3, r.clone()).congruence(&m).primitive().into_coords()).collect();
        prop_assert_eq!(orbit_key(&moved, 3, &mats), orbit_key(&rays, 3, &mats));
    }
}

/// Permutation sending the rebased labeling back to the original one.
fn rebase(pts: usize, base: usize) -> Vec<usize> {
    let mut order = vec![base];
    order.extend((0..pts).filter(|&i| i != base));
    let mut pos = vec![0; pts];
    for (k, &p) in order.iter().enumerate() {
        pos[p] = k;
    }
    pos
}

#[test]
fn rational_forms_round_trip() {
    let m = RatMatrix::from_rows(vec![vec![rat_frac(3, 2), rat_frac(-1, 3)], vec![rat_frac(-1, 3), rat_frac(5, 7)]]);
    assert_eq!(covariance(&covariance_inverse(&m), 0), m);
}
