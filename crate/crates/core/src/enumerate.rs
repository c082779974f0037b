//! Traversal of the primitive L-domains inside the hypermetric cone by
//! crossing walls, with orbit, L-type and dimension-4 type classification.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cone::SymVec;
use crate::delaunay::{delaunay_star, Cell, QuadForm};
use crate::exact::IntMatrix;
use crate::hyp::{facet_functional, hyp_facets, principal_domain, OrderSpec};
use crate::ltype::{
    arithmetically_equivalent, build_ldomain, flip_record, is_translate_of, stabilizer, LDomainRecord,
    LtypeError,
};
use crate::unimod::{identify_nine, MaxUnimodular, VectorSystem};

#[derive(Debug, Error)]
pub enum EnumError {
    #[error("resource limit reached after {} domains", .0.domain_count)]
    ResourceLimit(Box<EnumerationReport>),
    #[error("n = {0} is outside the supported range 2..=5")]
    Unsupported(usize),
    #[error("n = 5 is a long run and needs the allow-long option")]
    NeedsAllowLong,
    #[error("domain {0} has an unrecognized ray structure")]
    UnknownType(usize),
    #[error(transparent)]
    Ltype(#[from] LtypeError),
    #[error("journal: {0}")]
    Journal(String),
}

/// Per-facet flag: true when the facet lies on the boundary of the
/// hypermetric cone. A facet is boundary when one of its repartitioning
/// polytopes has a translate of the main simplex among its current cells;
/// for up to 6 points this is checked against the hypermetric facet list.
pub fn mark_hyp_boundary(rec: &LDomainRecord) -> Result<Vec<bool>, LtypeError> {
    let n = rec.n();
    let main = Cell::main_simplex(n);
    let rule: Vec<bool> = rec
        .wall_map
        .iter()
        .map(|polys| {
            polys.iter().any(|p| p.triangulation(true).iter().any(|c| is_translate_of(c, &main)))
        })
        .collect();
    if !rec.star.has_main_simplex() {
        return Ok(rule);
    }
    if let Ok(zs) = hyp_facets(n + 1) {
        let hyp: BTreeSet<Vec<i64>> = zs.iter().map(|z| facet_functional(z).into_coords()).collect();
        for (i, f) in rec.cone.facets().iter().enumerate() {
            if hyp.contains(f) != rule[i] {
                return Err(LtypeError::BoundaryMismatch(i));
            }
        }
    }
    Ok(rule)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DomainType {
    Principal,
    TypeII,
    TypeIII,
}

impl DomainType {
    pub fn name(self) -> &'static str {
        match self {
            DomainType::Principal => "principal",
            DomainType::TypeII => "II",
            DomainType::TypeIII => "III",
        }
    }
}

/// The Gram matrix of D₄ in the basis of an affine basis of its
/// cross-polytope.
pub fn a_d4() -> QuadForm {
    QuadForm::from_rows(&[vec![4, 2, 2, 2], vec![2, 2, 1, 1], vec![2, 1, 2, 1], vec![2, 1, 1, 2]])
        .expect("a(D4) is positive definite")
}

/// `q` with `q qᵀ = r` (first nonzero entry positive), for a rank-one ray.
pub fn rank_one_vector(r: &SymVec) -> Option<Vec<i64>> {
    let n = r.n();
    let i0 = (0..n).find(|&i| r.get(i, i) != 0)?;
    let d = r.get(i0, i0);
    let s = (d as f64).sqrt().round() as i64;
    if s * s != d {
        return None;
    }
    let q: Vec<i64> = (0..n).map(|j| r.get(i0, j) / s).collect();
    (SymVec::outer(&q) == *r).then_some(q)
}

pub fn ray_rank(r: &SymVec) -> usize {
    r.to_matrix().rank()
}

/// Principal, type II or type III, for a primitive domain with n = 4.
pub fn classify_type_dim4(rec: &LDomainRecord) -> Option<DomainType> {
    if rec.n() != 4 {
        return None;
    }
    let rays = rec.rays();
    let ranks: Vec<usize> = rays.iter().map(ray_rank).collect();
    if ranks.iter().all(|r| *r == 1) {
        return (rays.len() == 10).then_some(DomainType::Principal);
    }
    let big: Vec<usize> = (0..rays.len()).filter(|&i| ranks[i] != 1).collect();
    if big.len() != 1 || ranks[big[0]] != 4 || rays.len() != 10 {
        return None;
    }
    let r4 = QuadForm::from_symvec(&rays[big[0]]).ok()?;
    arithmetically_equivalent(&r4, &a_d4())?;
    let qs: Vec<Vec<i64>> =
        rays.iter().enumerate().filter(|(i, _)| *i != big[0]).map(|(_, r)| rank_one_vector(r)).collect::<Option<_>>()?;
    match identify_nine(&VectorSystem::new(4, qs).ok()?)? {
        MaxUnimodular::K5Minus1Graphic => Some(DomainType::TypeII),
        MaxUnimodular::K33Cographic => Some(DomainType::TypeIII),
    }
}

/// `M` with `M e_i = v_σ(i) − v_σ(0)` where `v_0 = 0` and `v_i = e_i`:
/// relabeling the points `{0, …, n}` by `σ` acts on forms as `a ↦ Mᵀ a M`.
pub fn point_permutation_matrix(sigma: &[usize]) -> IntMatrix {
    let n = sigma.len() - 1;
    let v = |k: usize| -> Vec<i64> {
        let mut e = vec![0; n];
        if k > 0 {
            e[k - 1] = 1;
        }
        e
    };
    let cols: Vec<Vec<i64>> = (1..=n).map(|i| crate::delaunay::sub(&v(sigma[i]), &v(sigma[0]))).collect();
    IntMatrix::from_cols(&cols)
}

pub fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Smallest image of a ray set under the point permutations.
pub fn orbit_key(rays: &[Vec<i64>], n: usize, mats: &[IntMatrix]) -> Vec<Vec<i64>> {
    mats.iter()
        .map(|m| {
            let mut img: Vec<Vec<i64>> =
                rays.iter().map(|r| SymVec::new(n, r.clone()).congruence(m).primitive().into_coords()).collect();
            img.sort();
            img
        })
        .min()
        .unwrap()
}

#[derive(Clone, Debug)]
pub struct TraverseOptions {
    pub max_domains: Option<usize>,
    pub timeout: Option<Duration>,
    pub jobs: usize,
    pub allow_long: bool,
    pub journal: Option<PathBuf>,
    pub resume: bool,
}

impl Default for TraverseOptions {
    fn default() -> Self {
        TraverseOptions { max_domains: None, timeout: None, jobs: 1, allow_long: false, journal: None, resume: false }
    }
}

/// All domains found, in discovery order, keyed by their sorted rays.
#[derive(Clone, Debug, Default)]
pub struct DomainRegistry {
    pub records: Vec<LDomainRecord>,
    index: HashMap<Vec<Vec<i64>>, usize>,
    /// Rays of each wall face mapped to the domains having it as a facet.
    faces: HashMap<Vec<Vec<i64>>, Vec<usize>>,
    /// `(parent, facet)` by which each domain was first reached.
    pub discovered_from: Vec<Option<(usize, usize)>>,
    pub flips: usize,
    pub duplicates: usize,
    pub skipped: usize,
}

impl DomainRegistry {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, key: &[Vec<i64>]) -> Option<usize> {
        self.index.get(key).copied()
    }

    fn face_rays(rec: &LDomainRecord, f: usize) -> Vec<Vec<i64>> {
        rec.cone.tight_rays(f).into_iter().map(|r| rec.cone.rays()[r].clone()).collect()
    }

    /// Inserts unless the ray set is known; returns (index, was_new).
    pub fn insert(&mut self, rec: LDomainRecord, from: Option<(usize, usize)>) -> (usize, bool) {
        if let Some(&i) = self.index.get(&rec.key()) {
            self.duplicates += 1;
            return (i, false);
        }
        let i = self.records.len();
        for f in rec.interior_walls() {
            self.faces.entry(Self::face_rays(&rec, f)).or_default().push(i);
        }
        self.index.insert(rec.key(), i);
        self.records.push(rec);
        self.discovered_from.push(from);
        (i, true)
    }

    /// Whether the wall `f` of domain `i` already has a known domain on its
    /// other side.
    pub fn neighbor_known(&self, i: usize, f: usize) -> bool {
        let face = Self::face_rays(&self.records[i], f);
        self.faces.get(&face).is_some_and(|ds| ds.iter().any(|&d| d != i))
    }

    /// Every interior wall face is shared by exactly two domains.
    pub fn walls_closed(&self) -> bool {
        self.faces.values().all(|ds| ds.len() == 2)
    }

    /// Distinct boundary facet functionals over all domains.
    pub fn boundary_functionals(&self) -> BTreeSet<Vec<i64>> {
        let mut out = BTreeSet::new();
        for r in &self.records {
            for f in r.hyp_boundary_facets() {
                out.insert(r.cone.facets()[f].clone());
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub complete: bool,
    pub domain_count: usize,
    pub orbit_count: usize,
    pub ltype_count: usize,
    pub hyp_facet_count: usize,
    pub census: Option<BTreeMap<String, usize>>,
    pub rank4_rays: Option<usize>,
    pub walls_closed: bool,
    pub flips: usize,
    pub duplicate_discoveries: usize,
    pub known_walls_skipped: usize,
    #[serde(skip)]
    pub runtime: Duration,
}

impl EnumerationReport {
    /// One summary line, e.g. `domains=3 orbits=1 ltypes=1 hyp_facets=12`.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "domains={} orbits={} ltypes={} hyp_facets={}",
            self.domain_count, self.orbit_count, self.ltype_count, self.hyp_facet_count
        );
        if let Some(c) = &self.census {
            let g = |k: &str| c.get(k).copied().unwrap_or(0);
            let _ = write!(s, " census={}/{}/{}", g("principal"), g("II"), g("III"));
        }
        s
    }

    /// `key=value` lines; runtime is left out so output is reproducible.
    pub fn to_text(&self) -> String {
        let mut s = self.summary();
        s.push('\n');
        let _ = writeln!(s, "n={}", self.n);
        let _ = writeln!(s, "complete={}", self.complete);
        let _ = writeln!(s, "domains={}", self.domain_count);
        let _ = writeln!(s, "orbits={}", self.orbit_count);
        let _ = writeln!(s, "ltypes={}", self.ltype_count);
        let _ = writeln!(s, "hyp_facets={}", self.hyp_facet_count);
        if let Some(c) = &self.census {
            for (k, v) in c {
                let _ = writeln!(s, "census.{k}={v}");
            }
        }
        if let Some(r) = self.rank4_rays {
            let _ = writeln!(s, "rank4_rays={r}");
        }
        let _ = writeln!(s, "walls_closed={}", self.walls_closed);
        let _ = writeln!(s, "flips={}", self.flips);
        let _ = writeln!(s, "duplicate_discoveries={}", self.duplicate_discoveries);
        let _ = writeln!(s, "known_walls_skipped={}", self.known_walls_skipped);
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JournalLine {
    Domain {
        index: usize,
        fingerprint: String,
        rays: Vec<Vec<i64>>,
        facets: Vec<Vec<i64>>,
        #[serde(rename = "type")]
        kind: Option<DomainType>,
        from: Option<(usize, usize)>,
    },
    Done {
        done: usize,
    },
}

struct Journal {
    out: std::io::BufWriter<std::fs::File>,
}

impl Journal {
    fn open(path: &Path, append: bool) -> Result<Self, EnumError> {
        let f = std::fs::OpenOptions::new()
            .create(true)
            .append(append)
            .write(true)
            .truncate(!append)
            .open(path)
            .map_err(|e| EnumError::Journal(e.to_string()))?;
        Ok(Journal { out: std::io::BufWriter::new(f) })
    }

    fn write(&mut self, line: &JournalLine) -> Result<(), EnumError> {
        let s = serde_json::to_string(line).map_err(|e| EnumError::Journal(e.to_string()))?;
        writeln!(self.out, "{s}").map_err(|e| EnumError::Journal(e.to_string()))
    }

    fn flush(&mut self) -> Result<(), EnumError> {
        self.out.flush().map_err(|e| EnumError::Journal(e.to_string()))
    }
}

fn domain_line(reg: &DomainRegistry, i: usize) -> JournalLine {
    let r = &reg.records[i];
    JournalLine::Domain {
        index: i,
        fingerprint: format!("{:?}", r.fingerprint),
        rays: r.key(),
        facets: r.cone.facets().to_vec(),
        kind: classify_type_dim4(r),
        from: reg.discovered_from[i],
    }
}

/// Rebuilds a record from its rays through the star of their sum.
pub fn record_from_rays(n: usize, rays: &[Vec<i64>]) -> Result<LDomainRecord, LtypeError> {
    let mut sum = SymVec::zero(n);
    for r in rays {
        sum = sum.add(&SymVec::new(n, r.clone()));
    }
    let rec = build_ldomain(delaunay_star(&QuadForm::from_symvec(&sum)?))?;
    if rec.key() != rays {
        return Err(LtypeError::Certification("journal rays"));
    }
    Ok(rec)
}

fn load_journal(path: &Path, n: usize) -> Result<(DomainRegistry, Vec<usize>), EnumError> {
    let f = std::fs::File::open(path).map_err(|e| EnumError::Journal(e.to_string()))?;
    let mut reg = DomainRegistry::default();
    let mut done = BTreeSet::new();
    for line in BufReader::new(f).lines() {
        let line = line.map_err(|e| EnumError::Journal(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<JournalLine>(&line).map_err(|e| EnumError::Journal(e.to_string()))? {
            JournalLine::Domain { index, rays, from, .. } => {
                if index != reg.len() {
                    return Err(EnumError::Journal(format!("unexpected domain index {index}")));
                }
                reg.insert(record_from_rays(n, &rays)?, from);
            }
            JournalLine::Done { done: d } => {
                done.insert(d);
            }
        }
    }
    let frontier = (0..reg.len()).filter(|i| !done.contains(i)).collect();
    Ok((reg, frontier))
}

/// Breadth-first traversal over wall crossings from the principal domain
/// of the identity order, never crossing hypermetric boundary facets.
pub fn traverse(n: usize, opts: &TraverseOptions) -> Result<(DomainRegistry, EnumerationReport), EnumError> {
    if !(2..=5).contains(&n) {
        return Err(EnumError::Unsupported(n));
    }
    if n == 5 && !opts.allow_long {
        return Err(EnumError::NeedsAllowLong);
    }
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| EnumError::Journal(e.to_string()))?;

    let (mut reg, mut level, mut journal) = match (&opts.journal, opts.resume) {
        (Some(p), true) if p.exists() => {
            let (reg, frontier) = load_journal(p, n)?;
            (reg, frontier, Some(Journal::open(p, true)?))
        }
        _ => {
            let mut reg = DomainRegistry::default();
            let seed = principal_domain(&OrderSpec::identity(n))?;
            reg.insert(seed, None);
            let mut j = match &opts.journal {
                Some(p) => Some(Journal::open(p, false)?),
                None => None,
            };
            if let Some(j) = j.as_mut() {
                j.write(&domain_line(&reg, 0))?;
            }
            (reg, vec![0], j)
        }
    };

    let mut limited = false;
    'outer: while !level.is_empty() {
        let mut tasks = Vec::new();
        for &i in &level {
            for f in reg.records[i].interior_walls() {
                if reg.neighbor_known(i, f) {
                    reg.skipped += 1;
                } else {
                    tasks.push((i, f));
                }
            }
        }
        let results: Vec<Result<LDomainRecord, LtypeError>> =
            pool.install(|| tasks.par_iter().map(|&(i, f)| flip_record(&reg.records[i], f)).collect());
        reg.flips += tasks.len();
        let mut next = Vec::new();
        for (&(i, f), res) in tasks.iter().zip(results) {
            let rec = res?;
            let (k, new) = reg.insert(rec, Some((i, f)));
            if new {
                next.push(k);
                if let Some(j) = journal.as_mut() {
                    j.write(&domain_line(&reg, k))?;
                }
                let over_count = opts.max_domains.is_some_and(|m| reg.len() >= m);
                let over_time = opts.timeout.is_some_and(|t| start.elapsed() >= t);
                if over_count || over_time {
                    limited = true;
                    break 'outer;
                }
            }
        }
        if let Some(j) = journal.as_mut() {
            for &i in &level {
                j.write(&JournalLine::Done { done: i })?;
            }
            j.flush()?;
        }
        level = next;
    }
    if let Some(j) = journal.as_mut() {
        j.flush()?;
    }
    let report = build_report(&reg, n, !limited, start.elapsed())?;
    if limited {
        return Err(EnumError::ResourceLimit(Box::new(report)));
    }
    Ok((reg, report))
}

fn build_report(reg: &DomainRegistry, n: usize, complete: bool, runtime: Duration) -> Result<EnumerationReport, EnumError> {
    let (census, rank4) = if n == 4 {
        let mut c = BTreeMap::new();
        for (i, r) in reg.records.iter().enumerate() {
            let t = classify_type_dim4(r).ok_or(EnumError::UnknownType(i))?;
            *c.entry(t.name().to_string()).or_insert(0) += 1;
        }
        (Some(c), Some(rank4_rays(reg).len()))
    } else {
        (None, None)
    };
    Ok(EnumerationReport {
        n,
        complete,
        domain_count: reg.len(),
        orbit_count: orbit_count(reg, n),
        ltype_count: ltype_count(reg),
        hyp_facet_count: reg.boundary_functionals().len(),
        census,
        rank4_rays: rank4,
        walls_closed: reg.walls_closed(),
        flips: reg.flips,
        duplicate_discoveries: reg.duplicates,
        known_walls_skipped: reg.skipped,
        runtime,
    })
}

/// Distinct extreme rays of rank 4 over all domains.
pub fn rank4_rays(reg: &DomainRegistry) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for r in &reg.records {
        for ray in r.rays() {
            if ray_rank(&ray) == 4 {
                out.insert(ray.into_coords());
            }
        }
    }
    out
}

/// Orbits of the registered domains under relabelings of the points.
pub fn orbit_count(reg: &DomainRegistry, n: usize) -> usize {
    let mats: Vec<IntMatrix> = all_permutations(n + 1).iter().map(|s| point_permutation_matrix(s)).collect();
    reg.records.iter().map(|r| orbit_key(&r.key(), n, &mats)).collect::<BTreeSet<_>>().len()
}

/// Arithmetic equivalence classes of interior forms, with one
/// representative record index per class.
pub fn ltype_classes(reg: &DomainRegistry) -> Vec<Vec<usize>> {
    let mut by_fp: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for (i, r) in reg.records.iter().enumerate() {
        by_fp.entry(r.fingerprint.clone()).or_default().push(i);
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for members in by_fp.values() {
        let mut local: Vec<Vec<usize>> = Vec::new();
        for &i in members {
            let a = &reg.records[i].interior_form;
            match local.iter_mut().find(|c| arithmetically_equivalent(&reg.records[c[0]].interior_form, a).is_some()) {
                Some(c) => c.push(i),
                None => local.push(vec![i]),
            }
        }
        classes.extend(local);
    }
    classes.sort();
    classes
}

pub fn ltype_count(reg: &DomainRegistry) -> usize {
    ltype_classes(reg).len()
}

/// Orbits of translation classes of simplices (each written with a vertex
/// at 0) under the automorphism group of the interior form. Each such
/// orbit corresponds to one orbit of domains under point relabeling.
pub fn orbits_via_stabilizer(rec: &LDomainRecord) -> Vec<Vec<Cell>> {
    let group = stabilizer(&rec.interior_form);
    let classes = rec.star.translation_classes();
    let canon = |c: &Cell| c.vertices().iter().map(|v| c.shift_to_origin(v)).min().unwrap();
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut orbits = Vec::new();
    for c in &classes {
        if seen.contains(c) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        for p in &group {
            let img = Cell::new(c.vertices().iter().map(|v| p.mul_vec(v)).collect());
            orbit.insert(canon(&img));
        }
        seen.extend(orbit.iter().cloned());
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

/// The diagonal of the cross-polytope spanned by the basic simplex of a
/// rank-4 ray, as a lattice vector: the longest edge among `0, e_1, …, e_4`.
pub fn basic_diagonal(r: &SymVec) -> Vec<i64> {
    let n = r.n();
    let pt = |k: usize| -> Vec<i64> {
        let mut e = vec![0; n];
        if k > 0 {
            e[k - 1] = 1;
        }
        e
    };
    let m = r.to_matrix();
    let mut best = (i64::MIN, vec![]);
    for i in 0..=n {
        for j in i + 1..=n {
            let q = crate::delaunay::sub(&pt(j), &pt(i));
            let d: i64 = m.mul_vec(&q).iter().zip(&q).map(|(x, y)| x * y).sum();
            if d > best.0 {
                best = (d, q);
            }
        }
    }
    best.1
}

/// The rank-one form that widens the Voronoi cell of `r` along `q`.
pub fn free_form(r: &SymVec, q: &[i64]) -> SymVec {
    let mut u = r.to_matrix().mul_vec(q);
    crate::exact::make_primitive(&mut u);
    SymVec::outer(&u)
}

/// For a non-principal domain with n = 4: false when the domain contains
/// both its rank-4 ray and the free form of that ray's basic diagonal.
/// `None` for domains without a rank-4 ray.
pub fn diagonal_excluded(rec: &LDomainRecord) -> Option<bool> {
    let rays = rec.rays();
    let r4 = rays.iter().find(|r| ray_rank(r) == 4)?;
    let f = free_form(r4, &basic_diagonal(r4));
    Some(!rays.contains(&f))
}

/// The domains whose rank-4 ray is `ray` (for n = 4).
pub fn domains_with_ray(reg: &DomainRegistry, ray: &[i64]) -> Vec<usize> {
    (0..reg.len()).filter(|&i| reg.records[i].cone.has_ray(ray)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_traversals() {
        let (reg, rep) = traverse(2, &TraverseOptions::default()).unwrap();
        assert_eq!(reg.len(), 1);
        assert_eq!(rep.summary(), "domains=1 orbits=1 ltypes=1 hyp_facets=3");
        let (_, rep) = traverse(3, &TraverseOptions::default()).unwrap();
        assert_eq!(rep.summary(), "domains=3 orbits=1 ltypes=1 hyp_facets=12");
        assert!(rep.walls_closed);
    }

    #[test]
    fn permutation_matrix_acts_on_cuts() {
        // swapping points 0 and 1 turns the cut {1} into {0}, i.e. {1,2}
        let m = point_permutation_matrix(&[1, 0, 2]);
        assert_eq!(crate::hyp::cut_ray(&[1], 2).congruence(&m), crate::hyp::cut_ray(&[1, 2], 2));
        assert_eq!(crate::hyp::cut_ray(&[2], 2).congruence(&m), crate::hyp::cut_ray(&[2], 2));
    }

    #[test]
    fn limits() {
        let opts = TraverseOptions { max_domains: Some(2), ..Default::default() };
        match traverse(3, &opts) {
            Err(EnumError::ResourceLimit(r)) => assert!(!r.complete && r.domain_count == 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(traverse(5, &TraverseOptions::default()), Err(EnumError::NeedsAllowLong)));
    }
}
