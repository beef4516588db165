//! Lattice points of the dominant region, the dot action of the affine Weyl
//! group, paths and their `l`-equivalence, and the bounds derived from them.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Error, Result};
use crate::tableaux::{Dominance, Partition};

/// A point of `Z^k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `rho = (k-1, ..., 1, 0)`.
    pub fn rho(k: usize) -> Self {
        LatticePoint((0..k).rev().map(|v| v as i64).collect())
    }

    /// `e^{(i)}`: `i` ones followed by zeros.
    pub fn e(i: usize, k: usize) -> Self {
        LatticePoint((0..k).map(|a| i64::from(a < i)).collect())
    }

    /// `lambda + rho`.
    pub fn from_partition(lambda: &Partition, k: usize) -> Result<Self> {
        if lambda.len() > k {
            return Err(Error::Shape(format!("{lambda} has more than {k} rows")));
        }
        Ok(LatticePoint(lambda.padded(k).iter().enumerate().map(|(a, &p)| p as i64 + (k - 1 - a) as i64).collect()))
    }

    /// `self - rho`, if that is a partition.
    pub fn to_partition(&self) -> Result<Partition> {
        let k = self.k();
        let parts: Vec<i64> = self.0.iter().enumerate().map(|(a, &y)| y - (k - 1 - a) as i64).collect();
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!("{self} is not of the form lambda + rho")));
        }
        Partition::new(&parts.iter().map(|&p| p as u32).collect::<Vec<_>>())
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Strictly decreasing coordinates.
    pub fn in_d(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Strictly decreasing and non-negative.
    pub fn in_d_plus(&self) -> bool {
        self.in_d() && self.0.last().is_none_or(|&v| v >= 0)
    }

    fn require_d_plus(&self) -> Result<()> {
        if self.in_d_plus() {
            Ok(())
        } else {
            Err(domain(format!("{self} is not strictly decreasing and non-negative")))
        }
    }

    /// `y_i - y_{i+1} >= l` for all `i`.
    pub fn is_interior(&self, l: u32) -> Result<bool> {
        self.require_d_plus()?;
        Ok(self.0.windows(2).all(|w| w[0] - w[1] >= l as i64))
    }

    /// All differences `y_i - y_j` divisible by `l`.
    pub fn is_critical(&self, l: u32) -> Result<bool> {
        self.require_d_plus()?;
        Ok(self.0.windows(2).all(|w| (w[0] - w[1]).rem_euclid(l as i64) == 0))
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// The multiset of residues mod `l`, as counts.
    pub fn residue_counts(&self, l: u32) -> Vec<usize> {
        let mut counts = vec![0; l as usize];
        for &y in &self.0 {
            counts[y.rem_euclid(l as i64) as usize] += 1;
        }
        counts
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (a, y) in self.0.iter().enumerate() {
            if a > 0 {
                write!(f, ",")?;
            }
            write!(f, "{y}")?;
        }
        write!(f, ")")
    }
}

/// `y -> sigma(y) + translation`, where `sigma(y)_{sigma(a)} = y_a` and the translation
/// has entries in `l Z` summing to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeylElement {
    /// `perm[a]` is the image of coordinate `a` (0-based)
    pub perm: Vec<usize>,
    pub translation: Vec<i64>,
}

impl AffineWeylElement {
    pub fn identity(k: usize) -> Self {
        AffineWeylElement { perm: (0..k).collect(), translation: vec![0; k] }
    }

    /// `tau_i`: `y_i -= l`, `y_{i+1} += l` (1-based `i`).
    pub fn tau(i: usize, k: usize, l: u32) -> Result<Self> {
        if i == 0 || i >= k {
            return Err(Error::Index { index: i as i64, range: format!("1..={}", k - 1) });
        }
        let mut w = Self::identity(k);
        w.translation[i - 1] = -(l as i64);
        w.translation[i] = l as i64;
        Ok(w)
    }

    /// Reflection in the hyperplane `y_a - y_b = m l` (1-based `a != b`).
    pub fn reflection(a: usize, b: usize, m: i64, k: usize, l: u32) -> Result<Self> {
        if a == 0 || b == 0 || a > k || b > k || a == b {
            return Err(domain(format!("bad reflection indices {a}, {b}")));
        }
        let mut w = Self::identity(k);
        w.perm.swap(a - 1, b - 1);
        w.translation[a - 1] = m * l as i64;
        w.translation[b - 1] = -m * l as i64;
        Ok(w)
    }

    pub fn apply(&self, y: &LatticePoint) -> LatticePoint {
        let mut out = vec![0; y.k()];
        for (a, &v) in y.0.iter().enumerate() {
            out[self.perm[a]] = v;
        }
        for (o, t) in out.iter_mut().zip(&self.translation) {
            *o += t;
        }
        LatticePoint(out)
    }

    /// `self o other`.
    pub fn compose(&self, other: &AffineWeylElement) -> AffineWeylElement {
        // self(other(y)) = sigma_s(sigma_o(y) + t_o) + t_s
        let perm: Vec<usize> = other.perm.iter().map(|&p| self.perm[p]).collect();
        let mut translation = self.translation.clone();
        for (a, &t) in other.translation.iter().enumerate() {
            translation[self.perm[a]] += t;
        }
        AffineWeylElement { perm, translation }
    }

    /// `w . v = w(v + rho) - rho`.
    pub fn dot(&self, v: &LatticePoint) -> LatticePoint {
        let rho = LatticePoint::rho(v.k());
        self.apply(&v.add(&rho)).sub(&rho)
    }

    /// The dot action on a partition with at most `k` rows; `None` if the image is not a partition.
    pub fn dot_partition(&self, lambda: &Partition, k: usize) -> Result<Option<Partition>> {
        let y = LatticePoint::from_partition(lambda, k)?;
        Ok(self.apply(&y).to_partition().ok())
    }
}

fn check_pair(lambda: &Partition, mu: &Partition, k: usize) -> Result<()> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size() as usize, mu.size() as usize));
    }
    if lambda.len() > k || mu.len() > k {
        return Err(Error::Shape(format!("more than {k} rows")));
    }
    Ok(())
}

/// Same block, decided by the residue multisets of `lambda + rho` and `mu + rho`.
pub fn same_block(lambda: &Partition, mu: &Partition, l: u32, k: usize) -> Result<bool> {
    check_pair(lambda, mu, k)?;
    let y = LatticePoint::from_partition(lambda, k)?;
    let z = LatticePoint::from_partition(mu, k)?;
    Ok(y.residue_counts(l) == z.residue_counts(l))
}

/// The points of `D^+` of the same size reachable from `y` by single affine
/// reflections followed by sorting.
pub fn dot_orbit_shell(y: &LatticePoint, l: u32) -> Result<BTreeSet<LatticePoint>> {
    y.require_d_plus()?;
    let l = l as i64;
    let mut seen = BTreeSet::from([y.clone()]);
    let mut queue = VecDeque::from([y.clone()]);
    while let Some(z) = queue.pop_front() {
        let k = z.k();
        for a in 0..k {
            for b in 0..k {
                if a == b {
                    continue;
                }
                // y_a -> y_a - m l, y_b -> y_b + m l with m >= 1, staying non-negative
                let mut m = 1;
                while z.0[a] - m * l >= 0 {
                    let mut w = z.0.clone();
                    w[a] -= m * l;
                    w[b] += m * l;
                    w.sort_unstable_by(|p, q| q.cmp(p));
                    let p = LatticePoint(w);
                    if p.in_d_plus() && seen.insert(p.clone()) {
                        queue.push_back(p);
                    }
                    m += 1;
                }
            }
        }
    }
    Ok(seen)
}

/// The three block criteria: equal `l`-cores, equal residue multisets, dot-orbit membership.
pub fn block_criteria(lambda: &Partition, mu: &Partition, l: u32, k: usize) -> Result<[bool; 3]> {
    check_pair(lambda, mu, k)?;
    let cores = lambda.l_core(l) == mu.l_core(l);
    let residues = same_block(lambda, mu, l, k)?;
    let y = LatticePoint::from_partition(lambda, k)?;
    let z = LatticePoint::from_partition(mu, k)?;
    let orbit = dot_orbit_shell(&y, l)?.contains(&z);
    Ok([cores, residues, orbit])
}

/// The critical point `c` associated to an interior point and the residues `r_1 .. r_{k-1}`.
pub fn associated_critical_point(y: &LatticePoint, l: u32) -> Result<(LatticePoint, Vec<i64>)> {
    if !y.is_interior(l)? {
        return Err(domain(format!("{y} is not interior for l = {l}")));
    }
    let k = y.k();
    let r: Vec<i64> = (0..k.saturating_sub(1)).map(|a| (y.0[a] - y.0[a + 1]).rem_euclid(l as i64)).collect();
    let c = (0..k).map(|a| y.0[a] - r[a.min(r.len())..].iter().sum::<i64>()).collect();
    Ok((LatticePoint(c), r))
}

/// A path of unit steps; `steps[s]` is the 1-based coordinate increased at step `s + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LatticePath {
    pub start: LatticePoint,
    pub steps: Vec<usize>,
}

impl LatticePath {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn points(&self) -> Vec<LatticePoint> {
        let mut out = vec![self.start.clone()];
        let mut cur = self.start.clone();
        for &a in &self.steps {
            cur.0[a - 1] += 1;
            out.push(cur.clone());
        }
        out
    }

    pub fn end(&self) -> LatticePoint {
        self.points().pop().unwrap()
    }

    /// Every point lies in `D`.
    pub fn is_valid(&self) -> bool {
        self.points().iter().all(LatticePoint::in_d)
    }

    /// Residues of the increased coordinate after each step.
    pub fn step_residues(&self, l: u32) -> Vec<i64> {
        let pts = self.points();
        self.steps.iter().enumerate().map(|(s, &a)| pts[s + 1].0[a - 1].rem_euclid(l as i64)).collect()
    }

    /// Segment lengths `k-1` (`r_{k-1}` times), ..., `1` (`r_1` times).
    pub fn segment_lengths(r: &[i64]) -> Vec<usize> {
        let mut out = Vec::new();
        for i in (1..=r.len()).rev() {
            out.extend(core::iter::repeat(i).take(r[i - 1] as usize));
        }
        out
    }
}

/// The path from `c(y)` to `y` adding `r_{k-1}` copies of `e^{(k-1)}`, then `r_{k-2}` copies of
/// `e^{(k-2)}`, and so on, each copy column-wise (rows `1, 2, ..., i`).
pub fn canonical_path(y: &LatticePoint, l: u32) -> Result<(LatticePath, Vec<i64>)> {
    let (c, r) = associated_critical_point(y, l)?;
    let mut steps = Vec::new();
    for i in LatticePath::segment_lengths(&r) {
        steps.extend(1..=i);
    }
    Ok((LatticePath { start: c, steps }, r))
}

/// Paths equivalent to a reference path, tallied by endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathOrbitSummary {
    pub reference: LatticePath,
    pub residues: Vec<i64>,
    /// `N(t_rho, lambda)` keyed by endpoint
    pub endpoint_counts: BTreeMap<LatticePoint, u64>,
    /// distinct reduced paths keyed by final diagram
    pub reduced_counts: BTreeMap<Partition, u64>,
}

impl PathOrbitSummary {
    pub fn total_paths(&self) -> u64 {
        self.endpoint_counts.values().sum()
    }

    pub fn count_at(&self, y: &LatticePoint) -> u64 {
        self.endpoint_counts.get(y).copied().unwrap_or(0)
    }
}

/// One step of the equivalence: increase a coordinate so that its new value has the given residue.
fn successors(p: &LatticePoint, residue: i64, l: i64) -> impl Iterator<Item = LatticePoint> + '_ {
    (0..p.k()).filter_map(move |a| {
        if (p.0[a] + 1).rem_euclid(l) != residue || (a > 0 && p.0[a - 1] <= p.0[a] + 1) {
            return None;
        }
        let mut q = p.clone();
        q.0[a] += 1;
        Some(q)
    })
}

/// All paths in `D` from the start of `reference` that are step-by-step equivalent to it,
/// counted by endpoint; reduced paths use the segmentation given by `r`.
pub fn path_orbit(reference: &LatticePath, l: u32, r: &[i64]) -> Result<PathOrbitSummary> {
    let li = l as i64;
    let targets = reference.step_residues(l);
    let mut layer: BTreeMap<LatticePoint, u64> = BTreeMap::from([(reference.start.clone(), 1)]);
    for &res in &targets {
        let mut next = BTreeMap::new();
        for (p, &n) in &layer {
            for q in successors(p, res, li) {
                *next.entry(q).or_insert(0) += n;
            }
        }
        layer = next;
    }
    let segs = LatticePath::segment_lengths(r);
    if segs.iter().sum::<usize>() != targets.len() {
        return Err(domain("segment lengths do not match the path length"));
    }
    // reduced paths: count sequences of segment endpoints
    let mut reduced: BTreeMap<LatticePoint, u64> = BTreeMap::from([(reference.start.clone(), 1)]);
    let mut pos = 0;
    for len in segs {
        let mut next: BTreeMap<LatticePoint, u64> = BTreeMap::new();
        for (p, &n) in &reduced {
            let mut ends = BTreeSet::from([p.clone()]);
            for &res in &targets[pos..pos + len] {
                ends = ends.iter().flat_map(|e| successors(e, res, li).collect::<Vec<_>>()).collect();
            }
            for e in ends {
                *next.entry(e).or_insert(0) += n;
            }
        }
        reduced = next;
        pos += len;
    }
    let mut reduced_counts = BTreeMap::new();
    for (p, n) in reduced {
        if let Ok(lambda) = p.to_partition() {
            reduced_counts.insert(lambda, n);
        }
    }
    Ok(PathOrbitSummary { reference: reference.clone(), residues: r.to_vec(), endpoint_counts: layer, reduced_counts })
}

/// The orbit summary of the canonical path of `mu + rho`.
pub fn canonical_orbit(mu: &Partition, l: u32, k: usize) -> Result<PathOrbitSummary> {
    let y = LatticePoint::from_partition(mu, k)?;
    let (path, r) = canonical_path(&y, l)?;
    path_orbit(&path, l, &r)
}

/// `n(lambda, mu)`: distinct reduced paths equivalent to the canonical path of `mu + rho`
/// that end in `lambda + rho`.
pub fn reduced_path_bound(lambda: &Partition, mu: &Partition, l: u32, k: usize) -> Result<u64> {
    check_pair(lambda, mu, k)?;
    Ok(canonical_orbit(mu, l, k)?.reduced_counts.get(lambda).copied().unwrap_or(0))
}

/// `sum_lambda d_{lambda mu}` bound: all equivalent paths over those ending in `mu + rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumBound {
    pub total_paths: u64,
    pub paths_at_mu: u64,
    /// closed-form double product with `d_i = sum_{j >= i} r_j`, `m(j, i)` read literally
    pub closed_form: u64,
    /// the same with the arguments of `m` exchanged
    pub closed_form_swapped: u64,
}

impl SumBound {
    /// `total / at_mu`, rounded down.
    pub fn value(&self) -> u64 {
        self.total_paths / self.paths_at_mu.max(1)
    }

    pub fn is_exact(&self) -> bool {
        self.paths_at_mu > 0 && self.total_paths % self.paths_at_mu == 0
    }
}

pub fn sum_bound(mu: &Partition, l: u32, k: usize) -> Result<SumBound> {
    let y = LatticePoint::from_partition(mu, k)?;
    let summary = canonical_orbit(mu, l, k)?;
    let r = &summary.residues;
    let mut d = vec![0i64; k + 1];
    for i in (1..k).rev() {
        d[i] = d[i + 1] + r[i - 1];
    }
    let m = |a: i64, b: i64| -> u64 {
        y.0.iter().enumerate().filter(|(s, &v)| (*s as i64 + 1) > a && v.rem_euclid(l as i64) == b.rem_euclid(l as i64)).count()
            as u64
    };
    let closed = |swap: bool| -> u64 {
        let mut prod = 1u64;
        for i in 1..k {
            for j in d[i + 1]..d[i] {
                let mm = if swap { m(i as i64, j) } else { m(j, i as i64) };
                prod = prod.saturating_mul(binomial(mm + i as u64, i as u64));
            }
        }
        prod
    };
    Ok(SumBound {
        total_paths: summary.total_paths(),
        paths_at_mu: summary.count_at(&y),
        closed_form: closed(false),
        closed_form_swapped: closed(true),
    })
}

fn binomial(n: u64, r: u64) -> u64 {
    let mut acc = 1u64;
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Semistandard skew tableaux of shape `outer / inner` with `weight[j-1]` entries `j`,
/// each entry `j` in a cell of content congruent to `offset + j` mod `l`.
pub fn count_residue_sst(outer: &Partition, inner: &Partition, weight: &[u32], l: u32, offset: i64) -> u64 {
    if !outer.contains(inner) || outer.size() != inner.size() + weight.iter().sum::<u32>() {
        return 0;
    }
    let rows = outer.len();
    let start: Vec<u32> = (0..rows).map(|a| inner.parts().get(a).copied().unwrap_or(0)).collect();
    let target: Vec<u32> = outer.parts().to_vec();
    sst_rec(&start, &target, weight, 0, l as i64, offset)
}

fn sst_rec(shape: &[u32], target: &[u32], weight: &[u32], j: usize, l: i64, offset: i64) -> u64 {
    if j == weight.len() {
        return u64::from(shape == target);
    }
    // choose a horizontal strip of size weight[j]: new row lengths between old and
    // min(target, previous row's old length)
    let mut total = 0;
    let mut new = shape.to_vec();
    strip_rec(shape, target, weight[j] as i64, 0, &mut new, &mut |next| {
        let ok = (0..shape.len()).all(|a| {
            (shape[a]..next[a]).all(|col| (col as i64 - a as i64 - offset - (j as i64 + 1)).rem_euclid(l) == 0)
        });
        if ok {
            total += sst_rec(next, target, weight, j + 1, l, offset);
        }
    });
    total
}

fn strip_rec(shape: &[u32], target: &[u32], remaining: i64, a: usize, new: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if a == shape.len() {
        if remaining == 0 {
            f(new);
        }
        return;
    }
    let cap = if a == 0 { target[0] } else { target[a].min(shape[a - 1]) };
    let lo = shape[a];
    let mut v = lo;
    while v <= cap && (v - lo) as i64 <= remaining {
        new[a] = v;
        strip_rec(shape, target, remaining - (v - lo) as i64, a + 1, new, f);
        v += 1;
    }
    new[a] = lo;
}

/// The semistandard count attached to `n(lambda, mu)`: shape `lambda / (c - rho)`, weight
/// `(k-1)^{r_{k-1}} ... 1^{r_1}`, entry `j` at contents congruent to `c_k + j - k`.
pub fn reduced_path_sst_count(lambda: &Partition, mu: &Partition, l: u32, k: usize) -> Result<u64> {
    sst_count_with_offset(lambda, mu, l, k, true)
}

/// As [`reduced_path_sst_count`], but with residues `j - k` (ignoring `c_k`).
pub fn reduced_path_sst_count_unshifted(lambda: &Partition, mu: &Partition, l: u32, k: usize) -> Result<u64> {
    sst_count_with_offset(lambda, mu, l, k, false)
}

fn sst_count_with_offset(lambda: &Partition, mu: &Partition, l: u32, k: usize, shifted: bool) -> Result<u64> {
    check_pair(lambda, mu, k)?;
    let y = LatticePoint::from_partition(mu, k)?;
    let (c, r) = associated_critical_point(&y, l)?;
    let inner = c.to_partition()?;
    let weight: Vec<u32> = LatticePath::segment_lengths(&r).iter().map(|&s| s as u32).collect();
    let offset = if shifted { c.0[k - 1] - k as i64 } else { -(k as i64) };
    Ok(count_residue_sst(lambda, &inner, &weight, l, offset))
}

/// A sufficient reason for `S^lambda = D^lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SimplicityCertificate {
    /// `lambda = (l-1) rho`
    SmallestCritical,
    /// `lambda + rho` is `k`-critical
    Critical,
    /// no other diagram of the dot orbit dominates `lambda`
    HighestInOrbit,
    None,
}

impl SimplicityCertificate {
    pub fn name(&self) -> &'static str {
        match self {
            SimplicityCertificate::SmallestCritical => "smallest-critical",
            SimplicityCertificate::Critical => "critical",
            SimplicityCertificate::HighestInOrbit => "highest-in-orbit",
            SimplicityCertificate::None => "none",
        }
    }

    pub fn is_positive(&self) -> bool {
        *self != SimplicityCertificate::None
    }
}

/// Which diagrams count as the orbit of `lambda` when testing for the highest one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitReading {
    /// diagrams with at most `k` rows in the dot orbit
    KRows,
    /// all partitions of the same size with the same `l`-core
    AllPartitions,
}

/// Whether no other member of the orbit dominates `lambda`.
pub fn highest_in_orbit(lambda: &Partition, l: u32, k: usize, reading: OrbitReading) -> Result<bool> {
    let others: Vec<Partition> = match reading {
        OrbitReading::KRows => {
            let y = LatticePoint::from_partition(lambda, k)?;
            dot_orbit_shell(&y, l)?.iter().map(|p| p.to_partition()).collect::<Result<_>>()?
        }
        OrbitReading::AllPartitions => {
            let core = lambda.l_core(l);
            Partition::all(lambda.size()).into_iter().filter(|p| p.l_core(l) == core).collect()
        }
    };
    for mu in others {
        if mu != *lambda && mu.dominance_compare(lambda)? == Dominance::Dominates {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The strongest applicable certificate, in the order `(l-1) rho`, critical, highest in orbit.
pub fn simplicity_certificate(lambda: &Partition, l: u32, k: usize) -> Result<SimplicityCertificate> {
    let y = LatticePoint::from_partition(lambda, k)?;
    let smallest = LatticePoint::rho(k).0.iter().map(|&v| v * (l as i64 - 1)).collect::<Vec<_>>();
    if lambda.padded(k).iter().map(|&v| v as i64).collect::<Vec<_>>() == smallest {
        return Ok(SimplicityCertificate::SmallestCritical);
    }
    if y.is_critical(l)? {
        return Ok(SimplicityCertificate::Critical);
    }
    if highest_in_orbit(lambda, l, k, OrbitReading::KRows)? {
        return Ok(SimplicityCertificate::HighestInOrbit);
    }
    Ok(SimplicityCertificate::None)
}

/// A path given by its points, not necessarily through `D`.
pub type PointPath = Vec<LatticePoint>;

/// `s^{(i)}`: reflect the part of the path after point `i` in `y_a - y_b = m l`.
pub fn reflect_suffix(path: &[LatticePoint], i: usize, a: usize, b: usize, m: i64, l: u32) -> Result<PointPath> {
    let w = AffineWeylElement::reflection(a, b, m, path[0].k(), l)?;
    Ok(path.iter().enumerate().map(|(u, p)| if u <= i { p.clone() } else { w.apply(p) }).collect())
}

/// Equivalence of two point paths with unit steps: at each step the increased
/// coordinates end with congruent values.
pub fn paths_equivalent(p: &[LatticePoint], q: &[LatticePoint], l: u32) -> bool {
    if p.len() != q.len() || p.first() != q.first() {
        return false;
    }
    let step_value = |path: &[LatticePoint], s: usize| -> Option<i64> {
        let diff: Vec<usize> = (0..path[s].k()).filter(|&a| path[s + 1].0[a] != path[s].0[a]).collect();
        if diff.len() != 1 || path[s + 1].0[diff[0]] - path[s].0[diff[0]] != 1 {
            return None;
        }
        Some(path[s + 1].0[diff[0]])
    };
    (0..p.len() - 1).all(|s| match (step_value(p, s), step_value(q, s)) {
        (Some(x), Some(y)) => (x - y).rem_euclid(l as i64) == 0,
        _ => false,
    })
}

/// Reflections `y_a - y_b = m l` (`a < b`) whose hyperplane contains `y`.
pub fn hyperplanes_through(y: &LatticePoint, l: u32) -> Vec<(usize, usize, i64)> {
    let mut out = Vec::new();
    for a in 0..y.k() {
        for b in a + 1..y.k() {
            let diff = y.0[a] - y.0[b];
            if diff.rem_euclid(l as i64) == 0 {
                out.push((a + 1, b + 1, diff / l as i64));
            }
        }
    }
    out
}

/// Transforms `from` into `to` by suffix reflections, following the constructive
/// argument: at the first step where they differ, reflect in the hyperplane
/// through the common point that swaps the two increased coordinates.
pub fn reflection_sequence(from: &[LatticePoint], to: &[LatticePoint], l: u32) -> Option<Vec<(usize, usize, usize, i64)>> {
    let mut cur = from.to_vec();
    let mut seq = Vec::new();
    for _ in 0..=from.len() * from[0].k() {
        let Some(s) = (0..cur.len()).find(|&u| cur[u] != to[u]) else { return Some(seq) };
        if s == 0 {
            return None;
        }
        let i = s - 1;
        let row = |p: &[LatticePoint]| (0..p[i].k()).find(|&a| p[i + 1].0[a] != p[i].0[a]);
        let (Some(a), Some(b)) = (row(&cur), row(to)) else { return None };
        let diff = cur[i].0[a] - cur[i].0[b];
        if diff.rem_euclid(l as i64) != 0 {
            return None;
        }
        let m = diff / l as i64;
        cur = reflect_suffix(&cur, i, a + 1, b + 1, m, l).ok()?;
        seq.push((i, a + 1, b + 1, m));
    }
    None
}

/// Every path in `D` from the start of `reference` equivalent to it, as point lists.
pub fn enumerate_equivalent_paths(reference: &LatticePath, l: u32) -> Vec<PointPath> {
    let targets = reference.step_residues(l);
    let mut paths = vec![vec![reference.start.clone()]];
    for &res in &targets {
        let mut next = Vec::new();
        for p in &paths {
            for q in successors(p.last().unwrap(), res, l as i64) {
                let mut np = p.clone();
                np.push(q);
                next.push(np);
            }
        }
        paths = next;
    }
    paths
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn pt(v: &[i64]) -> LatticePoint {
        LatticePoint(v.to_vec())
    }

    #[test]
    fn dot_action_examples() {
        let w = AffineWeylElement::reflection(1, 2, 1, 2, 2).unwrap();
        assert_eq!(w.dot_partition(&p(&[2]), 2).unwrap(), Some(p(&[1, 1])));
        let id = AffineWeylElement::identity(3);
        assert_eq!(id.dot(&pt(&[3, 1, 0])), pt(&[3, 1, 0]));
        let tau = AffineWeylElement::tau(1, 3, 2).unwrap();
        let y = pt(&[5, 2, 0]);
        assert_eq!(tau.apply(&y), pt(&[3, 4, 0]));
        let c = w.compose(&tau_k2());
        let z = pt(&[7, 3]);
        assert_eq!(c.apply(&z), w.apply(&tau_k2().apply(&z)));
    }

    fn tau_k2() -> AffineWeylElement {
        AffineWeylElement::tau(1, 2, 2).unwrap()
    }

    #[test]
    fn blocks() {
        assert!(same_block(&p(&[2]), &p(&[1, 1]), 2, 2).unwrap());
        assert!(!same_block(&p(&[3]), &p(&[2, 1]), 2, 3).unwrap());
        assert_eq!(block_criteria(&p(&[3]), &p(&[2, 1]), 2, 3).unwrap(), [false; 3]);
        assert_eq!(block_criteria(&p(&[2]), &p(&[1, 1]), 2, 2).unwrap(), [true; 3]);
        assert!(same_block(&p(&[2]), &p(&[2, 1]), 2, 2).is_err());
    }

    #[test]
    fn interior_and_critical() {
        assert!(pt(&[6, 3, 0]).is_critical(3).unwrap());
        assert!(pt(&[4, 2, 0]).is_critical(2).unwrap());
        assert!(!pt(&[4, 2, 0]).is_interior(3).unwrap());
        assert!(pt(&[1, 2]).is_interior(2).is_err());
    }

    #[test]
    fn critical_point_example() {
        let (c, r) = associated_critical_point(&pt(&[9, 5, 1]), 3).unwrap();
        assert_eq!(c, pt(&[7, 4, 1]));
        assert_eq!(r, vec![1, 1]);
        let (path, _) = canonical_path(&pt(&[9, 5, 1]), 3).unwrap();
        assert_eq!(path.steps, vec![1, 2, 1]);
        assert!(path.is_valid());
        let (path, r) = canonical_path(&pt(&[6, 3, 0]), 3).unwrap();
        assert!(path.is_empty());
        assert_eq!(r, vec![0, 0]);
    }

    #[test]
    fn canonical_orbit_counts() {
        let mu = LatticePoint(vec![9, 5, 1]).to_partition().unwrap();
        let s = canonical_orbit(&mu, 3, 3).unwrap();
        assert_eq!(s.count_at(&pt(&[9, 5, 1])), 2);
        assert_eq!(s.reduced_counts[&mu], 1);
        for e in s.endpoint_counts.keys() {
            assert!(e <= &pt(&[9, 5, 1]));
        }
        let b = sum_bound(&mu, 3, 3).unwrap();
        assert_eq!(b.paths_at_mu, 2);
    }

    #[test]
    fn orbit_of_a_row_path() {
        let path = LatticePath { start: pt(&[10, 5, 0]), steps: vec![1, 1, 1] };
        let s = path_orbit(&path, 5, &[3, 0]).unwrap();
        assert_eq!(s.total_paths() as usize, enumerate_equivalent_paths(&path, 5).len());
        assert!(s.count_at(&pt(&[13, 5, 0])) >= 1);
        let empty = LatticePath { start: pt(&[6, 3, 0]), steps: vec![] };
        assert_eq!(path_orbit(&empty, 3, &[0, 0]).unwrap().total_paths(), 1);
    }

    #[test]
    fn sst_matches_reduced_paths_small() {
        for l in [2u32, 3] {
            for n in 1..=9 {
                for mu in Partition::all_with_max_rows(n, 3) {
                    let y = LatticePoint::from_partition(&mu, 3).unwrap();
                    if !y.is_interior(l).unwrap() {
                        continue;
                    }
                    for lambda in Partition::all_with_max_rows(n, 3) {
                        assert_eq!(
                            reduced_path_bound(&lambda, &mu, l, 3).unwrap(),
                            reduced_path_sst_count(&lambda, &mu, l, 3).unwrap(),
                            "{lambda} {mu} l={l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn certificates() {
        assert_eq!(simplicity_certificate(&p(&[2, 1]), 2, 3).unwrap(), SimplicityCertificate::SmallestCritical);
        assert_eq!(simplicity_certificate(&p(&[4, 1]), 2, 3).unwrap(), SimplicityCertificate::Critical);
        assert_eq!(simplicity_certificate(&p(&[2]), 2, 2).unwrap(), SimplicityCertificate::HighestInOrbit);
        assert_eq!(simplicity_certificate(&p(&[1, 1]), 2, 2).unwrap(), SimplicityCertificate::None);
    }

    #[test]
    fn reflections_generate_orbit() {
        let (path, _) = canonical_path(&pt(&[9, 5, 1]), 3).unwrap();
        let members = enumerate_equivalent_paths(&path, 3);
        let reference = path.points();
        for m in &members {
            assert!(paths_equivalent(&reference, m, 3));
            let seq = reflection_sequence(&reference, m, 3).expect("reachable");
            let mut cur = reference.clone();
            for (i, a, b, mm) in seq {
                cur = reflect_suffix(&cur, i, a, b, mm, 3).unwrap();
            }
            assert_eq!(&cur, m);
            for (i, point) in m.iter().enumerate() {
                for (a, b, mm) in hyperplanes_through(point, 3) {
                    let r = reflect_suffix(m, i, a, b, mm, 3).unwrap();
                    assert!(paths_equivalent(&reference, &r, 3));
                    if r.iter().all(LatticePoint::in_d) {
                        assert!(members.contains(&r));
                    }
                }
            }
        }
    }
}
