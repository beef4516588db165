//! Canonical basis of the level-one Fock space and the decomposition numbers
//! `d_{lambda mu}(v)` it encodes.
//!
//! `f_i` adds an `i`-node `gamma` with weight `v^N`, where `N` is the number of
//! addable `i`-nodes strictly right of `gamma` minus the removable ones. The
//! ladder vector `A(mu)` is corrected top-down by bar-invariant multiples of
//! earlier columns until every off-diagonal coefficient lies in `v Z[v]`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::LaurentPolynomial;
use crate::error::{domain, invariant, Error, Result};
use crate::tableaux::Partition;

type Lp = LaurentPolynomial;

/// A finite combination of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Partition, Lp>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(lambda: &Partition) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda.clone(), &Lp::one());
        v
    }

    pub fn vacuum() -> Self {
        Self::basis(&Partition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Lp {
        self.terms.get(lambda).cloned().unwrap_or_else(Lp::zero)
    }

    /// Terms in lexicographically descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Lp)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &Lp) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(lambda.clone()).or_insert_with(Lp::zero);
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add_scaled(&mut self, c: &Lp, other: &FockVector) {
        for (p, x) in &other.terms {
            self.add_term(p.clone(), &(c * x));
        }
    }

    pub fn scale(&self, c: &Lp) -> FockVector {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn at_one(&self) -> BTreeMap<Partition, i64> {
        self.terms
            .iter()
            .filter_map(|(p, c)| {
                let v = c.at_one();
                (v != 0.into()).then(|| (p.clone(), i64::try_from(v).unwrap_or(i64::MAX)))
            })
            .collect()
    }
}

fn residue(row: usize, col: usize, l: u32) -> u32 {
    (col as i64 - row as i64).rem_euclid(l as i64) as u32
}

/// `(row, col)` addable and removable `i`-nodes of `lambda`.
fn i_nodes(lambda: &Partition, i: u32, l: u32) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let add = lambda.addable_cells().into_iter().filter(|&(r, c)| residue(r, c, l) == i).collect();
    let rem = lambda.removable_cells().into_iter().filter(|&(r, c)| residue(r, c, l) == i).collect();
    (add, rem)
}

/// `f_i` on a Fock vector.
pub fn f_operator(i: u32, vec: &FockVector, l: u32) -> Result<FockVector> {
    if l < 2 || i >= l {
        return Err(domain(format!("residue {i} for l = {l}")));
    }
    let mut out = FockVector::zero();
    for (lambda, c) in &vec.terms {
        let (add, rem) = i_nodes(lambda, i, l);
        for &(r, col) in &add {
            // right of gamma = strictly larger column
            let a = add.iter().filter(|&&(_, c2)| c2 > col).count() as i32;
            let b = rem.iter().filter(|&&(_, c2)| c2 > col).count() as i32;
            out.add_term(lambda.add_cell(r), &c.shift(a - b));
        }
    }
    Ok(out)
}

/// Divided power `f_i^{(m)} = f_i^m / [m]!`.
pub fn f_divided_power(i: u32, m: u32, vec: &FockVector, l: u32) -> Result<FockVector> {
    let mut cur = vec.clone();
    for _ in 0..m {
        cur = f_operator(i, &cur, l)?;
    }
    let fact = Lp::quantum_factorial(m);
    let mut out = FockVector::zero();
    for (p, c) in &cur.terms {
        let q = c.div_exact(&fact).ok_or_else(|| invariant(format!("[{m}]! does not divide the coefficient of {p}")))?;
        out.add_term(p.clone(), &q);
    }
    Ok(out)
}

/// Ladder sizes of `mu`: ladder `L` holds nodes `(r, c)` with `(r-1) + (l-1)(c-1) = L`, all of residue `-L`.
fn ladders(mu: &Partition, l: u32) -> Vec<u32> {
    let mut sizes: Vec<u32> = Vec::new();
    for (r, c) in mu.cells() {
        let lad = (r - 1) + (l as usize - 1) * (c - 1);
        if sizes.len() <= lad {
            sizes.resize(lad + 1, 0);
        }
        sizes[lad] += 1;
    }
    sizes
}

/// `A(mu)`: divided powers of `f` along the ladders of `mu`.
pub fn ladder_vector(mu: &Partition, l: u32) -> Result<FockVector> {
    let mut v = FockVector::vacuum();
    for (lad, &m) in ladders(mu, l).iter().enumerate() {
        if m > 0 {
            v = f_divided_power((l - lad as u32 % l) % l, m, &v, l)?;
        }
    }
    Ok(v)
}

/// Canonical basis vectors, memoized per `l`.
#[derive(Clone, Debug)]
pub struct CanonicalBasis {
    l: u32,
    cache: BTreeMap<Partition, FockVector>,
}

impl CanonicalBasis {
    pub fn new(l: u32) -> Result<Self> {
        if l < 2 {
            return Err(domain(format!("l = {l}")));
        }
        Ok(CanonicalBasis { l, cache: BTreeMap::new() })
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// `G(mu)` for `l`-regular `mu`.
    pub fn get(&mut self, mu: &Partition) -> Result<FockVector> {
        if let Some(g) = self.cache.get(mu) {
            return Ok(g.clone());
        }
        if !mu.is_l_regular(self.l) {
            return Err(domain(format!("{mu} is not {}-regular", self.l)));
        }
        let mut g = ladder_vector(mu, self.l)?;
        if g.coeff(mu) != Lp::one() {
            return Err(invariant(format!("ladder vector of {mu} has leading coefficient {}", g.coeff(mu))));
        }
        loop {
            // highest term whose coefficient is not in v Z[v]
            let bad = g
                .terms()
                .find(|(p, c)| *p != mu && !c.min_degree_at_least(1))
                .map(|(p, c)| (p.clone(), c.clone()));
            let Some((lambda, c)) = bad else { break };
            if !lambda.is_l_regular(self.l) {
                return Err(invariant(format!("non-regular {lambda} needs a correction in G({mu})")));
            }
            let alpha = bar_invariant_part(&c);
            let g_lambda = self.get(&lambda)?;
            g.add_scaled(&-&alpha, &g_lambda);
        }
        self.cache.insert(mu.clone(), g.clone());
        Ok(g)
    }
}

/// The bar-invariant `alpha` with `c - alpha` in `v Z[v]`.
fn bar_invariant_part(c: &Lp) -> Lp {
    let mut terms = Vec::new();
    for (e, x) in c.terms() {
        if e <= 0 {
            let x = i64::try_from(x.clone()).unwrap_or(0);
            terms.push((e, x));
            if e < 0 {
                terms.push((-e, x));
            }
        }
    }
    Lp::from_terms(terms)
}

/// `G(mu)` for `l`-regular `mu`.
pub fn canonical_basis(mu: &Partition, l: u32) -> Result<FockVector> {
    CanonicalBasis::new(l)?.get(mu)
}

/// Rows: all partitions of `n` (lex descending); columns: the `l`-regular ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub n: u32,
    pub l: u32,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    /// `entries[row][col]`
    pub entries: Vec<Vec<Lp>>,
}

impl DecompositionMatrix {
    pub fn row_index(&self, lambda: &Partition) -> Option<usize> {
        self.rows.iter().position(|p| p == lambda)
    }

    pub fn col_index(&self, mu: &Partition) -> Option<usize> {
        self.cols.iter().position(|p| p == mu)
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&Lp> {
        Some(&self.entries[self.row_index(lambda)?][self.col_index(mu)?])
    }

    /// `d_{lambda mu}(1)`; zero for non-regular `mu`.
    pub fn at_one(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.get(lambda, mu).map_or(0, |c| i64::try_from(c.at_one()).unwrap_or(i64::MAX))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda");
        for mu in &self.cols {
            out.push_str(&format!(",\"{mu}\""));
        }
        out.push('\n');
        for (r, lambda) in self.rows.iter().enumerate() {
            out.push_str(&format!("\"{lambda}\""));
            for c in &self.entries[r] {
                out.push_str(&format!(",{}", c.to_compact_string()));
            }
            out.push('\n');
        }
        out
    }
}

/// The decomposition matrix of `H_n` at a primitive `l`-th root of unity.
pub fn decomposition_matrix(n: u32, l: u32) -> Result<DecompositionMatrix> {
    decomposition_matrix_with(&mut CanonicalBasis::new(l)?, n)
}

pub fn decomposition_matrix_with(basis: &mut CanonicalBasis, n: u32) -> Result<DecompositionMatrix> {
    if n == 0 {
        return Err(domain("n = 0"));
    }
    let l = basis.l();
    let rows = Partition::all(n);
    let cols: Vec<Partition> = rows.iter().filter(|p| p.is_l_regular(l)).cloned().collect();
    let mut entries = vec_of_zeros(rows.len(), cols.len());
    // increasing order so that corrections hit the cache
    for (c, mu) in cols.iter().enumerate().rev() {
        let g = basis.get(mu)?;
        for (r, lambda) in rows.iter().enumerate() {
            entries[r][c] = g.coeff(lambda);
        }
    }
    Ok(DecompositionMatrix { n, l, rows, cols, entries })
}

fn vec_of_zeros(r: usize, c: usize) -> Vec<Vec<Lp>> {
    (0..r).map(|_| (0..c).map(|_| Lp::zero()).collect()).collect()
}

/// Summary of a successful self-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfCheckReport {
    pub n: u32,
    pub l: u32,
    pub rows: usize,
    pub cols: usize,
    pub nonzero: usize,
}

/// Unitriangularity, regular columns, dominance and core support, positivity.
pub fn structural_check(m: &DecompositionMatrix) -> Result<SelfCheckReport> {
    let l = m.l;
    let fail = |lambda: &Partition, mu: &Partition, what: &str| Error::Invariant(format!("({lambda}, {mu}): {what}"));
    let expected: Vec<Partition> = m.rows.iter().filter(|p| p.is_l_regular(l)).cloned().collect();
    if m.cols != expected {
        return Err(invariant("column set is not the l-regular partitions"));
    }
    let mut nonzero = 0;
    for (r, lambda) in m.rows.iter().enumerate() {
        for (c, mu) in m.cols.iter().enumerate() {
            let d = &m.entries[r][c];
            if lambda == mu {
                if !d.is_one() {
                    return Err(fail(lambda, mu, "diagonal entry is not 1"));
                }
                nonzero += 1;
                continue;
            }
            if d.is_zero() {
                continue;
            }
            nonzero += 1;
            if !mu.dominates(lambda) {
                return Err(fail(lambda, mu, "support outside dominance"));
            }
            if lambda.l_core(l) != mu.l_core(l) {
                return Err(fail(lambda, mu, "different l-cores"));
            }
            if !d.has_nonnegative_coeffs() || !d.min_degree_at_least(1) {
                return Err(fail(lambda, mu, "coefficient not in v N[v]"));
            }
        }
    }
    Ok(SelfCheckReport { n: m.n, l, rows: m.rows.len(), cols: m.cols.len(), nonzero })
}

/// `sum_mu d_{lambda mu}(1) rank_mu = dim S^lambda` for every row, where
/// `rank` gives the dimension of the simple module labelled by `mu`.
pub fn rank_identity(m: &DecompositionMatrix, rank: &mut dyn FnMut(&Partition) -> Result<usize>) -> Result<()> {
    let ranks: Vec<usize> = m.cols.iter().map(|mu| rank(mu)).collect::<Result<_>>()?;
    for lambda in &m.rows {
        let lhs: i64 = m.cols.iter().zip(&ranks).map(|(mu, &r)| m.at_one(lambda, mu) * r as i64).sum();
        let rhs = lambda.hook_length_count() as i64;
        if lhs != rhs {
            return Err(invariant(format!("{lambda}: sum of d * rank = {lhs}, dim S = {rhs}")));
        }
    }
    Ok(())
}

/// Structural checks plus the Gram-rank identity under `labeling`.
pub fn oracle_selfcheck(n: u32, l: u32, labeling: crate::hecke::Labeling) -> Result<SelfCheckReport> {
    let m = decomposition_matrix(n, l)?;
    let report = structural_check(&m)?;
    rank_identity(&m, &mut |mu| {
        crate::hecke::specht_gram_rank(&labeling.apply(mu), l, crate::hecke::GramForm::Contravariant)
    })?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn f_on_vacuum() {
        let v = f_operator(0, &FockVector::vacuum(), 2).unwrap();
        assert_eq!(v, FockVector::basis(&p(&[1])));
        assert!(f_operator(1, &FockVector::vacuum(), 2).unwrap().is_zero());
        assert!(f_operator(0, &FockVector::zero(), 2).unwrap().is_zero());
    }

    #[test]
    fn branching_count() {
        for n in 0..6 {
            for lambda in Partition::all(n).into_iter().chain((n == 0).then(Partition::empty)) {
                let start = FockVector::basis(&lambda);
                let total: usize = (0..3).map(|i| f_operator(i, &start, 3).unwrap().at_one().len()).sum();
                assert_eq!(total, lambda.addable_cells().len());
            }
        }
    }

    #[test]
    fn small_canonical_basis() {
        let g = canonical_basis(&p(&[2]), 2).unwrap();
        assert_eq!(g.coeff(&p(&[2])), Lp::one());
        assert_eq!(g.coeff(&p(&[1, 1])), Lp::monomial(1, 1));
        let g = canonical_basis(&p(&[3, 1]), 7).unwrap();
        assert_eq!(g, FockVector::basis(&p(&[3, 1])));
        assert!(canonical_basis(&p(&[1, 1]), 2).is_err());
    }

    #[test]
    fn n3_l2() {
        let m = decomposition_matrix(3, 2).unwrap();
        let ones: Vec<Vec<i64>> = m.rows.iter().map(|r| m.cols.iter().map(|c| m.at_one(r, c)).collect()).collect();
        assert_eq!(ones, vec![vec![1, 0], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn structure_small() {
        for l in 2..=4 {
            for n in 1..=8 {
                structural_check(&decomposition_matrix(n, l).unwrap()).unwrap();
            }
        }
        let m = decomposition_matrix(4, 5).unwrap();
        for (r, lambda) in m.rows.iter().enumerate() {
            for (c, mu) in m.cols.iter().enumerate() {
                assert_eq!(m.entries[r][c].is_one(), lambda == mu);
                assert!(lambda == mu || m.entries[r][c].is_zero());
            }
        }
    }

    #[test]
    fn corrupted_matrix_is_rejected() {
        let mut m = decomposition_matrix(3, 2).unwrap();
        let r = m.row_index(&p(&[1, 1, 1])).unwrap();
        let c = m.col_index(&p(&[2, 1])).unwrap();
        assert!(m.entries[r][c].is_zero());
        m.entries[r][c] = Lp::monomial(1, 1);
        let err = structural_check(&m).unwrap_err();
        assert!(format!("{err}").contains("l-cores"), "{err}");
    }

    #[test]
    fn divided_powers_agree_with_direct_formula() {
        let l = 2;
        let start = FockVector::basis(&p(&[2, 1]));
        let f2 = f_divided_power(0, 2, &start, l).unwrap();
        for (lambda, c) in f2.terms() {
            assert!(c.has_nonnegative_coeffs(), "{lambda}: {c}");
        }
        assert_eq!(f2.coeff(&p(&[3, 2])), Lp::one());
    }

    #[test]
    fn gram_identity_small() {
        for (n, l) in [(4, 2), (4, 3), (5, 2)] {
            oracle_selfcheck(n, l, crate::hecke::Labeling::Identity).unwrap();
        }
    }
}
