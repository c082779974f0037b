//! Unimodular vector systems: graphic and cographic systems, duality,
//! 0/1 representations, dicing domains, matroids by circuits, and the
//! twelve D₄ root representatives with their triple classification.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::cone::{facets_of_rays, sym_dim, ConeDD, ConeError, SymVec};
use crate::exact::{
    det_i64, dot, lattice_basis, rank_i64, rat, rat_to_i64, sign_fix, solve_square, IntMatrix,
    RatMatrix, Rational,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnimodError {
    #[error("vector system is not unimodular")]
    NotUnimodular,
    #[error("vector system does not span its space")]
    NotSpanning,
    #[error("graph is not connected")]
    Disconnected,
    #[error("vector of length {got} in dimension {dim}")]
    Dimension { dim: usize, got: usize },
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// Integer vectors in `ℤ^dim`, each sign-fixed (first nonzero entry
/// positive). Parallel and zero vectors are kept: they arise in cographic
/// systems and duals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSystem {
    dim: usize,
    vectors: Vec<Vec<i64>>,
}

impl VectorSystem {
    pub fn new(dim: usize, vectors: Vec<Vec<i64>>) -> Result<Self, UnimodError> {
        let mut out = Vec::with_capacity(vectors.len());
        for mut v in vectors {
            if v.len() != dim {
                return Err(UnimodError::Dimension { dim, got: v.len() });
            }
            sign_fix(&mut v);
            out.push(v);
        }
        Ok(VectorSystem { dim, vectors: out })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn rank(&self) -> usize {
        rank_i64(&self.vectors)
    }

    /// `W v` for every vector, sign-fixed again.
    pub fn transformed(&self, w: &IntMatrix) -> VectorSystem {
        VectorSystem::new(w.rows(), self.vectors.iter().map(|v| w.mul_vec(v)).collect())
            .expect("matching dimensions")
    }

    /// Coordinates in a basis of the lattice the vectors generate.
    pub fn in_generated_lattice(&self) -> VectorSystem {
        let basis = lattice_basis(&self.vectors, self.dim);
        let k = basis.len();
        let bt = RatMatrix::from_int(&IntMatrix::from_rows(&basis)).transpose();
        // least squares is exact here: solve (B Bᵀ) y = B v
        let b = RatMatrix::from_int(&IntMatrix::from_rows(&basis));
        let g = b.mul(&bt);
        let coords = self
            .vectors
            .iter()
            .map(|v| {
                let rv: Vec<Rational> = v.iter().map(|&x| rat(x)).collect();
                let y = solve_square(&g, &b.mul_vec(&rv)).expect("basis is independent");
                y.iter().map(|x| rat_to_i64(x).expect("vector lies in its lattice")).collect()
            })
            .collect();
        VectorSystem::new(k, coords).unwrap()
    }
}

fn for_each_subset(m: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            if !rec(i + 1, m, k, cur, f) {
                return false;
            }
            cur.pop();
        }
        true
    }
    rec(0, m, k, &mut Vec::with_capacity(k), f)
}

/// Every `dim`-subset has determinant 0 or ±1.
pub fn is_unimodular(u: &VectorSystem) -> bool {
    let n = u.dim();
    if n == 0 {
        return true;
    }
    for_each_subset(u.len(), n, &mut |idx| {
        let rows: Vec<Vec<i64>> = idx.iter().map(|&i| u.vectors[i].clone()).collect();
        det_i64(&rows).abs() <= 1
    })
}

/// A graph on vertices `0..n_vertices`; edge `(i, j)` is oriented from `i`
/// to `j`. Multi-edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n_vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        assert!(edges.iter().all(|&(a, b)| a < n_vertices && b < n_vertices), "edge endpoint out of range");
        Graph { n_vertices, edges }
    }

    pub fn complete(n: usize) -> Self {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::new(n, e)
    }

    /// `K₅` with the edge `{3, 4}` removed.
    pub fn k5_minus_edge() -> Self {
        let mut g = Graph::complete(5);
        g.edges.retain(|&e| e != (3, 4));
        g
    }

    pub fn k33() -> Self {
        let mut e = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                e.push((i, j));
            }
        }
        Graph::new(6, e)
    }

    /// The planar dual of `K₅ − 1`: a hexagon with three chords, which is the
    /// triangular prism.
    pub fn k5_minus_edge_dual() -> Self {
        let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend([(0, 3), (1, 5), (2, 4)]);
        Graph::new(6, e)
    }

    pub fn is_connected(&self) -> bool {
        if self.n_vertices == 0 {
            return true;
        }
        self.spanning_tree().len() + 1 == self.n_vertices
    }

    /// BFS tree from vertex 0 as `(edge, parent, child)`, in discovery order.
    fn spanning_tree(&self) -> Vec<(usize, usize, usize)> {
        let mut seen = vec![false; self.n_vertices];
        let mut tree = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        while let Some(x) = queue.pop_front() {
            for (k, &(a, b)) in self.edges.iter().enumerate() {
                let y = if a == x { b } else if b == x { a } else { continue };
                if !seen[y] {
                    seen[y] = true;
                    tree.push((k, x, y));
                    queue.push_back(y);
                }
            }
        }
        tree
    }
}

/// `e_i − e_j` per edge, with the last coordinate dropped.
pub fn graphic_system(g: &Graph) -> VectorSystem {
    let d = g.n_vertices.saturating_sub(1);
    let vs = g
        .edges
        .iter()
        .map(|&(i, j)| {
            let mut v = vec![0i64; g.n_vertices];
            v[i] += 1;
            v[j] -= 1;
            v.truncate(d);
            v
        })
        .collect();
    VectorSystem::new(d, vs).unwrap()
}

/// Rows of a cycle-space basis (fundamental cycles of a BFS tree), read
/// column-wise: one vector in `ℤ^{|E|−|V|+1}` per edge.
pub fn cographic_system(g: &Graph) -> Result<VectorSystem, UnimodError> {
    if !g.is_connected() {
        return Err(UnimodError::Disconnected);
    }
    let tree = g.spanning_tree();
    let in_tree: BTreeSet<usize> = tree.iter().map(|t| t.0).collect();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.n_vertices];
    let mut depth = vec![0usize; g.n_vertices];
    for &(k, p, c) in &tree {
        parent[c] = Some((p, k));
        depth[c] = depth[p] + 1;
    }
    let chords: Vec<usize> = (0..g.edges.len()).filter(|k| !in_tree.contains(k)).collect();
    let mut cycles: Vec<Vec<i64>> = Vec::new();
    for &k in &chords {
        let mut cyc = vec![0i64; g.edges.len()];
        let (a, b) = g.edges[k];
        cyc[k] = 1;
        // walk from b back to a through the tree: the cycle is a→b then b⇝a
        let (mut x, mut y) = (b, a);
        let mut up_x = Vec::new();
        let mut up_y = Vec::new();
        while x != y {
            if depth[x] >= depth[y] {
                let (p, e) = parent[x].unwrap();
                up_x.push((x, p, e));
                x = p;
            } else {
                let (p, e) = parent[y].unwrap();
                up_y.push((p, y, e));
                y = p;
            }
        }
        for (from, to, e) in up_x.into_iter().chain(up_y.into_iter().rev()) {
            let (ea, eb) = g.edges[e];
            cyc[e] += if (ea, eb) == (from, to) { 1 } else { -1 };
            debug_assert!((ea, eb) == (from, to) || (eb, ea) == (from, to));
        }
        cycles.push(cyc);
    }
    let dim = cycles.len();
    let vs = (0..g.edges.len()).map(|e| cycles.iter().map(|c| c[e]).collect()).collect();
    VectorSystem::new(dim, vs)
}

/// `U = B (I | A)` for the first independent basis `B`; the dual is
/// `(−Aᵀ | I)` with columns in the original element order.
pub fn dual_system(u: &VectorSystem) -> Result<VectorSystem, UnimodError> {
    let n = u.dim();
    let m = u.len();
    if u.rank() != n {
        return Err(UnimodError::NotSpanning);
    }
    if !is_unimodular(u) {
        return Err(UnimodError::NotUnimodular);
    }
    let mut basis: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, v) in u.vectors.iter().enumerate() {
        rows.push(v.clone());
        if rank_i64(&rows) == rows.len() {
            basis.push(i);
        } else {
            rows.pop();
        }
    }
    let bmat = RatMatrix::from_int(&IntMatrix::from_cols(&rows));
    let others: Vec<usize> = (0..m).filter(|i| !basis.contains(i)).collect();
    // A[k][j]: coefficient of basis vector k in other vector j
    let a: Vec<Vec<i64>> = others
        .iter()
        .map(|&j| {
            let rv: Vec<Rational> = u.vectors[j].iter().map(|&x| rat(x)).collect();
            solve_square(&bmat, &rv).unwrap().iter().map(|x| rat_to_i64(x).unwrap()).collect()
        })
        .collect();
    let k = others.len();
    let mut out = vec![Vec::new(); m];
    for (bk, &i) in basis.iter().enumerate() {
        out[i] = (0..k).map(|j| -a[j][bk]).collect();
    }
    for (j, &i) in others.iter().enumerate() {
        let mut e = vec![0; k];
        e[j] = 1;
        out[i] = e;
    }
    VectorSystem::new(k, out)
}

/// Search for rows `u_1, …, u_n` of a unimodular `W` lying in one cell of
/// the dicing at 0, so that for each `v` the entries of `W v` are all in
/// `{0, 1}` or all in `{0, −1}`.
struct Rep01<'a> {
    u: &'a VectorSystem,
    cands: Vec<Vec<i64>>,
    values: Vec<Vec<i64>>,
    chosen: Vec<usize>,
    sign: Vec<i64>,
}

impl Rep01<'_> {
    fn run(&mut self, start: usize) -> bool {
        let n = self.u.dim();
        if self.chosen.len() == n {
            let rows: Vec<Vec<i64>> = self.chosen.iter().map(|&c| self.cands[c].clone()).collect();
            return det_i64(&rows).abs() == 1;
        }
        for c in start..self.cands.len() {
            let vals = &self.values[c];
            if vals.iter().zip(&self.sign).any(|(x, s)| *x != 0 && *s != 0 && *x != *s) {
                continue;
            }
            let mut rows: Vec<Vec<i64>> = self.chosen.iter().map(|&k| self.cands[k].clone()).collect();
            rows.push(self.cands[c].clone());
            if rank_i64(&rows) < rows.len() {
                continue;
            }
            let saved = self.sign.clone();
            for (s, x) in self.sign.iter_mut().zip(vals) {
                if *x != 0 {
                    *s = *x;
                }
            }
            self.chosen.push(c);
            if self.run(c + 1) {
                return true;
            }
            self.chosen.pop();
            self.sign = saved;
        }
        false
    }
}

/// A unimodular `W` with every `W v ∈ ±{0,1}ⁿ`, or `None` when there is
/// none (including when `U` is not unimodular or does not span).
pub fn is_01_representable(u: &VectorSystem) -> Option<IntMatrix> {
    let n = u.dim();
    if n == 0 {
        return Some(IntMatrix::identity(0));
    }
    if u.rank() != n || !is_unimodular(u) {
        return None;
    }
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for v in &u.vectors {
        rows.push(v.clone());
        if rank_i64(&rows) < rows.len() {
            rows.pop();
        }
    }
    // points x with |v·x| ≤ 1 for all v: x = B⁻ᵀ t with t ∈ {−1,0,1}ⁿ
    let b = RatMatrix::from_int(&IntMatrix::from_rows(&rows));
    let mut cands = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut t = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            t.push(rat((c % 3) as i64 - 1));
            c /= 3;
        }
        let x = solve_square(&b, &t).unwrap();
        let x: Vec<i64> = x.iter().map(|q| rat_to_i64(q).expect("unimodular basis")).collect();
        if x.iter().all(|c| *c == 0) {
            continue;
        }
        if u.vectors.iter().all(|v| dot(v, &x).abs() <= 1) {
            cands.push(x);
        }
    }
    cands.sort();
    let values: Vec<Vec<i64>> = cands.iter().map(|x| u.vectors.iter().map(|v| dot(v, x)).collect()).collect();
    let mut s = Rep01 { u, cands, values, chosen: Vec::new(), sign: vec![0; u.len()] };
    if s.run(0) {
        let rows: Vec<Vec<i64>> = s.chosen.iter().map(|&c| s.cands[c].clone()).collect();
        Some(IntMatrix::from_rows(&rows))
    } else {
        None
    }
}

/// Whether every vector is, up to sign, a 0/1 vector.
pub fn is_01(u: &VectorSystem) -> bool {
    u.vectors.iter().all(|v| v.iter().all(|x| *x == 0 || *x == 1))
}

/// The cone generated by the rank-one forms `v vᵀ`.
pub fn dicing_domain(u: &VectorSystem) -> Result<ConeDD, UnimodError> {
    if !is_unimodular(u) {
        return Err(UnimodError::NotUnimodular);
    }
    let rays: Vec<Vec<i64>> =
        u.vectors.iter().filter(|v| v.iter().any(|x| *x != 0)).map(|v| SymVec::outer(v).into_coords()).collect();
    Ok(facets_of_rays(&rays, sym_dim(u.dim()))?)
}

/// A matroid on `0..m` given by its rank function on all subsets.
#[derive(Clone, Debug)]
pub struct Matroid {
    m: usize,
    rank: Vec<u8>,
}

impl Matroid {
    pub fn of_vectors(u: &VectorSystem) -> Matroid {
        let m = u.len();
        assert!(m <= 20, "matroid too large for subset enumeration");
        let mut rank = vec![0u8; 1 << m];
        // rank[mask] from rank[mask without its top element]
        let mut bases: Vec<Vec<Vec<i64>>> = vec![Vec::new(); 1 << m];
        for mask in 1usize..(1 << m) {
            let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
            let rest = mask & !(1 << top);
            let mut b = bases[rest].clone();
            b.push(u.vectors[top].clone());
            if rank_i64(&b) == b.len() {
                rank[mask] = rank[rest] + 1;
                bases[mask] = b;
            } else {
                rank[mask] = rank[rest];
                bases[mask] = bases[rest].clone();
            }
        }
        Matroid { m, rank }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn rank_of(&self, mask: u32) -> usize {
        self.rank[mask as usize] as usize
    }

    pub fn rank(&self) -> usize {
        self.rank[(1usize << self.m) - 1] as usize
    }

    /// Minimal dependent sets as bitmasks, sorted.
    pub fn circuits(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << self.m) {
            let k = mask.count_ones() as usize;
            if self.rank_of(mask) != k - 1 {
                continue;
            }
            let minimal = (0..self.m).filter(|i| mask & (1 << i) != 0).all(|i| self.rank_of(mask & !(1 << i)) == k - 1);
            if minimal {
                out.push(mask);
            }
        }
        out
    }

    /// Complements of hyperplanes (minimal sets meeting every basis).
    pub fn cocircuits(&self) -> Vec<u32> {
        let full = (1u32 << self.m) - 1;
        let r = self.rank();
        let mut out = Vec::new();
        for mask in 0..=full {
            if self.rank_of(mask) + 1 != r {
                continue;
            }
            let closed = (0..self.m).filter(|i| mask & (1 << i) == 0).all(|i| self.rank_of(mask | (1 << i)) == r);
            if closed {
                out.push(full & !mask);
            }
        }
        out.sort();
        out
    }

    /// A bijection of ground sets carrying circuits onto circuits.
    pub fn isomorphism(&self, other: &Matroid) -> Option<Vec<usize>> {
        if self.m != other.m || self.rank() != other.rank() {
            return None;
        }
        let c1 = self.circuits();
        let c2 = other.circuits();
        if c1.len() != c2.len() {
            return None;
        }
        let sig = |cs: &[u32], m: usize| -> Vec<Vec<u32>> {
            (0..m)
                .map(|e| {
                    let mut s: Vec<u32> = cs.iter().filter(|c| *c & (1 << e) != 0).map(|c| c.count_ones()).collect();
                    s.sort();
                    s
                })
                .collect()
        };
        let s1 = sig(&c1, self.m);
        let s2 = sig(&c2, self.m);
        let mut ms1 = s1.clone();
        let mut ms2 = s2.clone();
        ms1.sort();
        ms2.sort();
        if ms1 != ms2 {
            return None;
        }
        let set2: BTreeSet<u32> = c2.iter().copied().collect();
        let mut map = vec![usize::MAX; self.m];
        let mut used = vec![false; self.m];
        fn image(c: u32, map: &[usize]) -> Option<u32> {
            let mut out = 0u32;
            let mut c = c;
            while c != 0 {
                let i = c.trailing_zeros() as usize;
                if map[i] == usize::MAX {
                    return None;
                }
                out |= 1 << map[i];
                c &= c - 1;
            }
            Some(out)
        }
        fn rec(
            e: usize,
            m: usize,
            s1: &[Vec<u32>],
            s2: &[Vec<u32>],
            c1: &[u32],
            set2: &BTreeSet<u32>,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if e == m {
                return true;
            }
            for f in 0..m {
                if used[f] || s1[e] != s2[f] {
                    continue;
                }
                map[e] = f;
                used[f] = true;
                let ok = c1
                    .iter()
                    .filter(|c| *c & (1 << e) != 0)
                    .all(|&c| image(c, map).is_none_or(|im| set2.contains(&im)));
                if ok && rec(e + 1, m, s1, s2, c1, set2, map, used) {
                    return true;
                }
                used[f] = false;
                map[e] = usize::MAX;
            }
            false
        }
        rec(0, self.m, &s1, &s2, &c1, &set2, &mut map, &mut used).then_some(map)
    }

    pub fn is_isomorphic(&self, other: &Matroid) -> bool {
        self.isomorphism(other).is_some()
    }
}

/// The three quadruples `Q₁, Q₂, Q₃` of pairwise orthogonal D₄ roots, one
/// root from each opposite pair. Vectors live in `ℤ⁴` with inner product
/// `xᵀy / 2`, so every root has norm 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D4Roots {
    pub quadruples: [Vec<Vec<i64>>; 3],
}

impl Default for D4Roots {
    fn default() -> Self {
        Self::new()
    }
}

impl D4Roots {
    pub fn new() -> Self {
        let q1 = (0..4)
            .map(|i| {
                let mut v = vec![0; 4];
                v[i] = 2;
                v
            })
            .collect();
        let q2 = vec![vec![1, 1, 1, 1], vec![1, 1, -1, -1], vec![1, -1, 1, -1], vec![1, -1, -1, 1]];
        let q3 = vec![vec![1, 1, 1, -1], vec![1, 1, -1, 1], vec![1, -1, 1, 1], vec![1, -1, -1, -1]];
        D4Roots { quadruples: [q1, q2, q3] }
    }

    pub fn all(&self) -> Vec<Vec<i64>> {
        self.quadruples.iter().flatten().cloned().collect()
    }

    pub fn inner(x: &[i64], y: &[i64]) -> i64 {
        dot(x, y) / 2
    }

    /// All 64 triples `(r₁, r₂, r₃)` with `rᵢ ∈ Qᵢ`.
    pub fn triples(&self) -> Vec<[Vec<i64>; 3]> {
        let mut out = Vec::new();
        for a in &self.quadruples[0] {
            for b in &self.quadruples[1] {
                for c in &self.quadruples[2] {
                    out.push([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
        out
    }

    /// The nine roots left after removing a triple.
    pub fn complement(&self, t: &[Vec<i64>; 3]) -> Vec<Vec<i64>> {
        self.all().into_iter().filter(|r| !t.contains(r)).collect()
    }
}

/// `r_ij = r_i − (r_iᵀ r_j) r_j`.
pub fn reflect(ri: &[i64], rj: &[i64]) -> Vec<i64> {
    let c = D4Roots::inner(ri, rj);
    ri.iter().zip(rj).map(|(a, b)| a - c * b).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleRank {
    pub rank: usize,
    pub r12: Vec<i64>,
    pub r23: Vec<i64>,
    pub r31: Vec<i64>,
}

pub fn triple_rank(t: &[Vec<i64>; 3]) -> TripleRank {
    TripleRank {
        rank: rank_i64(t),
        r12: reflect(&t[0], &t[1]),
        r23: reflect(&t[1], &t[2]),
        r31: reflect(&t[2], &t[0]),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MaxUnimodular {
    K33Cographic,
    K5Minus1Graphic,
}

/// Reference matroids: the graphic matroid of `K₅ − 1` and the cographic
/// matroid of `K₃₃`.
pub fn reference_matroids() -> (Matroid, Matroid) {
    let g = Matroid::of_vectors(&graphic_system(&Graph::k5_minus_edge()));
    let c = Matroid::of_vectors(&cographic_system(&Graph::k33()).expect("K33 is connected"));
    (g, c)
}

/// Identifies the matroid of a nine-element rank-4 vector system.
pub fn identify_nine(u: &VectorSystem) -> Option<MaxUnimodular> {
    let m = Matroid::of_vectors(u);
    let (g, c) = reference_matroids();
    if m.is_isomorphic(&g) {
        Some(MaxUnimodular::K5Minus1Graphic)
    } else if m.is_isomorphic(&c) {
        Some(MaxUnimodular::K33Cographic)
    } else {
        None
    }
}

/// Matroid type of `D(4) − t`, which must be unimodular in the lattice it
/// generates.
pub fn classify_max_unimodular_d4(roots: &D4Roots, t: &[Vec<i64>; 3]) -> Result<MaxUnimodular, UnimodError> {
    let u = VectorSystem::new(4, roots.complement(t))?.in_generated_lattice();
    if !is_unimodular(&u) {
        return Err(UnimodError::NotUnimodular);
    }
    identify_nine(&u).ok_or(UnimodError::NotUnimodular)
}

/// Number of circuits of each size.
pub fn circuit_size_counts(m: &Matroid) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for c in m.circuits() {
        *out.entry(c.count_ones()).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(dim: usize, v: &[&[i64]]) -> VectorSystem {
        VectorSystem::new(dim, v.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn unimodularity() {
        assert!(is_unimodular(&vs(2, &[&[1, 0], &[0, 1], &[1, 1]])));
        assert!(!is_unimodular(&vs(2, &[&[1, 0], &[0, 1], &[1, 2]])));
        assert!(is_unimodular(&graphic_system(&Graph::complete(4))));
    }

    #[test]
    fn graphic_examples() {
        let p = graphic_system(&Graph::new(3, vec![(0, 1), (1, 2)]));
        assert_eq!(p.vectors(), &[vec![1, -1], vec![0, 1]]);
        let k3 = graphic_system(&Graph::complete(3));
        assert_eq!(k3.len(), 3);
        let k5 = graphic_system(&Graph::complete(5));
        assert_eq!((k5.len(), k5.dim()), (10, 4));
        assert!(is_unimodular(&k5));
    }

    #[test]
    fn cographic_examples() {
        let c3 = cographic_system(&Graph::complete(3)).unwrap();
        assert_eq!(c3.vectors(), &[vec![1], vec![1], vec![1]]);
        let k33 = cographic_system(&Graph::k33()).unwrap();
        assert_eq!((k33.len(), k33.dim()), (9, 4));
        assert!(is_unimodular(&k33));
        let dual = cographic_system(&Graph::k5_minus_edge_dual()).unwrap();
        let g = Matroid::of_vectors(&graphic_system(&Graph::k5_minus_edge()));
        assert!(Matroid::of_vectors(&dual).is_isomorphic(&g));
        assert!(!Matroid::of_vectors(&k33).is_isomorphic(&g));
    }

    #[test]
    fn duals() {
        let e = dual_system(&vs(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!((e.dim(), e.len()), (0, 2));
        let k4 = graphic_system(&Graph::complete(4));
        let d = dual_system(&k4).unwrap();
        assert_eq!(d.dim(), 3);
        let co = cographic_system(&Graph::complete(4)).unwrap();
        assert!(Matroid::of_vectors(&d).is_isomorphic(&Matroid::of_vectors(&co)));
        let dd = dual_system(&d).unwrap();
        assert!(Matroid::of_vectors(&dd).is_isomorphic(&Matroid::of_vectors(&k4)));
    }

    #[test]
    fn zero_one() {
        let w = is_01_representable(&vs(2, &[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert!(is_01(&vs(2, &[&[1, 0], &[0, 1], &[1, 1]]).transformed(&w)));
        let a2 = vs(2, &[&[1, 0], &[0, 1], &[1, -1]]);
        let w = is_01_representable(&a2).unwrap();
        assert!(is_01(&a2.transformed(&w)));
        let roots = D4Roots::new();
        let mut q = roots.quadruples[0].clone();
        q.push(vec![1, 1, 1, 1]);
        assert_eq!(is_01_representable(&vs(4, &q.iter().map(|v| v.as_slice()).collect::<Vec<_>>())), None);
    }

    #[test]
    fn d4_triples() {
        let roots = D4Roots::new();
        let ts = roots.triples();
        assert_eq!(ts.len(), 64);
        let rank2 = ts.iter().filter(|t| triple_rank(t).rank == 2).count();
        assert_eq!(rank2, 16);
        for t in &ts {
            let r = triple_rank(t);
            if r.rank == 3 {
                assert_eq!(rank_i64(&[r.r12.clone(), r.r23.clone(), r.r31.clone()]), 2);
            }
        }
    }

    #[test]
    fn bond_counts() {
        let k33 = Matroid::of_vectors(&graphic_system(&Graph::k33()));
        let prism = Matroid::of_vectors(&graphic_system(&Graph::k5_minus_edge_dual()));
        let three = |m: &Matroid| m.cocircuits().iter().filter(|c| c.count_ones() == 3).count();
        assert_eq!(three(&k33), 6);
        assert_eq!(three(&prism), 7);
    }
}
