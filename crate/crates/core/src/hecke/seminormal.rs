//! The seminormal representation in its square-root-free form
//! `e_i t = a_d t + a_{-d} s_i t`, `d = d(t; i)`, on standard (skew) tableaux.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::algebra::{HeckeAlgebra, HeckeElement};
use crate::arith::{a_d, Field, Matrix, RationalFunction};
use crate::error::{invariant, Error, Result};
use crate::tableaux::{enumerate_standard_tableaux, Partition, StandardTableau};

type Rf = RationalFunction;

/// `V_{outer/inner}` with its basis of standard tableaux.
#[derive(Clone, Debug)]
pub struct SeminormalBlock {
    inner: Partition,
    outer: Partition,
    tableaux: Vec<StandardTableau>,
    index: BTreeMap<Vec<usize>, usize>,
    /// `e_cols[i-1][s]`: the nonzero entries of `e_i` applied to basis vector `s`
    e_cols: Vec<Vec<Vec<(usize, Rf)>>>,
}

impl SeminormalBlock {
    pub fn new(outer: &Partition, inner: &Partition) -> Result<Self> {
        let tableaux = enumerate_standard_tableaux(outer, inner)?;
        let index = tableaux.iter().enumerate().map(|(k, t)| (t.row_word(), k)).collect();
        let m = (outer.size() - inner.size()) as usize;
        let mut cache: BTreeMap<i64, Rf> = BTreeMap::new();
        let mut coeff = |d: i64| -> Result<Rf> {
            if let Some(v) = cache.get(&d) {
                return Ok(v.clone());
            }
            let v = a_d(d)?;
            cache.insert(d, v.clone());
            Ok(v)
        };
        let mut block = SeminormalBlock { inner: inner.clone(), outer: outer.clone(), tableaux, index, e_cols: Vec::new() };
        for i in 1..m {
            let mut cols = Vec::with_capacity(block.tableaux.len());
            for t in &block.tableaux {
                let d = t.d(i);
                if d == 0 {
                    return Err(invariant(format!("entries {i}, {} share a diagonal in {t}", i + 1)));
                }
                let mut col = Vec::new();
                let ad = coeff(d)?;
                if !ad.is_zero() {
                    col.push((block.index[&t.row_word()], ad));
                    if let Some(st) = t.swap(i) {
                        col.push((block.index[&st.row_word()], coeff(-d)?));
                    }
                }
                cols.push(col);
            }
            block.e_cols.push(cols);
        }
        Ok(block)
    }

    pub fn straight(lambda: &Partition) -> Result<Self> {
        Self::new(lambda, &Partition::empty())
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// Number of entries of each tableau.
    pub fn size(&self) -> usize {
        (self.outer.size() - self.inner.size()) as usize
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        if t.inner() != &self.inner || t.outer() != &self.outer {
            return None;
        }
        self.index.get(&t.row_word()).copied()
    }

    fn check(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.size() {
            return Err(Error::Index { index: i as i64, range: format!("1..={}", self.size().saturating_sub(1)) });
        }
        Ok(())
    }

    /// Matrix of `e_i` (column `s` holds `e_i s`).
    pub fn e_matrix(&self, i: usize) -> Result<Matrix<Rf>> {
        self.check(i)?;
        let mut m = Matrix::zeros(self.dim(), self.dim(), &Rf::zero());
        for (s, col) in self.e_cols[i - 1].iter().enumerate() {
            for (r, v) in col {
                m.set(*r, s, v.clone());
            }
        }
        Ok(m)
    }

    /// Matrix of `T_i = x - e_i`.
    pub fn t_matrix(&self, i: usize) -> Result<Matrix<Rf>> {
        let e = self.e_matrix(i)?;
        Ok(Matrix::identity(self.dim(), &Rf::zero()).scale(&Rf::x()).sub(&e))
    }

    /// `e_i v`.
    pub fn apply_e(&self, i: usize, v: &[Rf]) -> Vec<Rf> {
        let mut out = vec![Rf::zero(); v.len()];
        for (s, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, a) in &self.e_cols[i - 1][s] {
                out[*r] = &out[*r] + &(c * a);
            }
        }
        out
    }

    /// `T_i v`.
    pub fn apply_t(&self, i: usize, v: &[Rf]) -> Vec<Rf> {
        let e = self.apply_e(i, v);
        v.iter().zip(e).map(|(a, b)| &a.shift(1) - &b).collect()
    }

    /// The matrix of `h` on this block.
    pub fn image(&self, alg: &HeckeAlgebra<Rf>, h: &HeckeElement) -> Result<Matrix<Rf>> {
        if alg.n() != self.size() {
            return Err(Error::SizeMismatch(alg.n(), self.size()));
        }
        let mut m = Matrix::zeros(self.dim(), self.dim(), &Rf::zero());
        for s in 0..self.dim() {
            let mut v = vec![Rf::zero(); self.dim()];
            v[s] = Rf::one();
            let col = alg.act_dense(h, &v, &|i, x| self.apply_t(i, x));
            for (r, c) in col.into_iter().enumerate() {
                m.set(r, s, c);
            }
        }
        Ok(m)
    }

    /// Weights `w_t` of the invariant form: `w_{s_i t} / w_t = a_d / a_{-d}`.
    pub fn form_weights(&self) -> Result<Vec<Rf>> {
        let mut w: Vec<Option<Rf>> = vec![None; self.dim()];
        if self.dim() == 0 {
            return Ok(Vec::new());
        }
        w[0] = Some(Rf::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            let t = &self.tableaux[s];
            for i in 1..self.size() {
                let Some(st) = t.swap(i) else { continue };
                let d = t.d(i);
                let r = self.index[&st.row_word()];
                let ratio = &a_d(d)? / &a_d(-d)?;
                let val = w[s].as_ref().unwrap() * &ratio;
                match &w[r] {
                    Some(existing) if *existing != val => {
                        return Err(invariant(format!("inconsistent form weights at {st}")));
                    }
                    Some(_) => {}
                    None => {
                        w[r] = Some(val);
                        queue.push_back(r);
                    }
                }
            }
        }
        w.into_iter().map(|v| v.ok_or_else(|| invariant("tableau graph is disconnected"))).collect()
    }

    /// Squared symmetric-form coefficient `(w_s / w_t) X[s][t]^2`.
    pub fn squared_coefficient(weights: &[Rf], x: &Matrix<Rf>, s: usize, t: usize) -> Rf {
        let v = x.get(s, t);
        &(&weights[s] / &weights[t]) * &(v * v)
    }

    /// Diagonal matrix of `M_i`, from the Murphy eigenvalues.
    pub fn murphy_diagonal(&self, i: usize) -> Matrix<Rf> {
        Matrix::from_fn(self.dim(), self.dim(), |r, c| {
            if r == c {
                murphy_eigenvalue(&self.tableaux[r], i).unwrap()
            } else {
                Rf::zero()
            }
        })
    }
}

/// `x^{i - 1 + c_i(t) - r_i(t)}`.
pub fn murphy_eigenvalue(t: &StandardTableau, i: usize) -> Result<Rf> {
    if i < 2 || i > t.size() {
        return Err(Error::Index { index: i as i64, range: format!("2..={}", t.size()) });
    }
    Ok(Rf::x_pow(murphy_exponent(t, i)))
}

pub fn murphy_exponent(t: &StandardTableau, i: usize) -> i64 {
    i as i64 - 1 + t.content(i)
}

/// `x^{n(n-1) - sum_{i<j} (lambda_i + 1) lambda_j}`, the scalar of `Delta_n^2` on `V_lambda`.
pub fn central_scalar(lambda: &Partition) -> Rf {
    let n = lambda.size() as i64;
    let p = lambda.parts();
    let mut corr = 0i64;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            corr += (p[i] as i64 + 1) * p[j] as i64;
        }
    }
    Rf::x_pow(n * (n - 1) - corr)
}

/// The seminormal representation on `V(n, k)`: one block per partition of `n`
/// with at most `k` rows.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    n: usize,
    blocks: Vec<SeminormalBlock>,
}

impl MatrixRep {
    pub fn seminormal(n: usize, k: Option<usize>) -> Result<Self> {
        let parts = Partition::all_with_max_rows(n as u32, k.unwrap_or(n));
        let blocks = parts.iter().map(SeminormalBlock::straight).collect::<Result<_>>()?;
        Ok(MatrixRep { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[SeminormalBlock] {
        &self.blocks
    }

    pub fn block(&self, lambda: &Partition) -> Option<&SeminormalBlock> {
        self.blocks.iter().find(|b| b.outer() == lambda)
    }

    pub fn generator_count(&self) -> usize {
        self.n.saturating_sub(1)
    }

    /// `T_i` matrices of every block.
    pub fn t_matrices(&self, lambda: &Partition) -> Result<Vec<Matrix<Rf>>> {
        let b = self.block(lambda).ok_or_else(|| Error::Shape(format!("no block {lambda}")))?;
        (1..self.n).map(|i| b.t_matrix(i)).collect()
    }
}

/// Braid, commutation and quadratic relations for the matrices `T_1 .. T_{n-1}`.
pub fn relations_hold<F: Field>(ts: &[Matrix<F>], q: &F) -> bool {
    let Some(first) = ts.first() else { return true };
    let dim = first.rows();
    let id = Matrix::identity(dim, q);
    let qm1 = q.sub(&q.one_like());
    for (a, t) in ts.iter().enumerate() {
        let lhs = t.mul(t);
        let rhs = t.scale(&qm1).add(&id.scale(q));
        if lhs != rhs {
            return false;
        }
        for (b, u) in ts.iter().enumerate().skip(a + 1) {
            if b == a + 1 {
                if t.mul(u).mul(t) != u.mul(t).mul(u) {
                    return false;
                }
            } else if t.mul(u) != u.mul(t) {
                return false;
            }
        }
    }
    true
}

/// Checks every block of the representation.
pub fn verify_presentation(rep: &MatrixRep) -> Result<bool> {
    for b in rep.blocks() {
        let ts: Vec<Matrix<Rf>> = (1..rep.n()).map(|i| b.t_matrix(i)).collect::<Result<_>>()?;
        if !relations_hold(&ts, &Rf::x()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Poly;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn small_blocks() {
        let b = SeminormalBlock::straight(&p(&[2])).unwrap();
        assert!(b.e_matrix(1).unwrap().is_zero());
        let b = SeminormalBlock::straight(&p(&[1, 1])).unwrap();
        assert_eq!(*b.e_matrix(1).unwrap().get(0, 0), Rf::from_poly(Poly::from_ints(&[1, 1])));
    }

    #[test]
    fn hook_block_e2() {
        let b = SeminormalBlock::straight(&p(&[2, 1])).unwrap();
        let e = b.e_matrix(2).unwrap();
        let a2 = Rf::new(Poly::from_ints(&[1, 1, 1]), Poly::from_ints(&[1, 1])).unwrap();
        let am2 = Rf::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[1, 1])).unwrap();
        assert_eq!(*e.get(0, 0), a2);
        assert_eq!(*e.get(0, 1), a2);
        assert_eq!(*e.get(1, 0), am2);
        assert_eq!(*e.get(1, 1), am2);
    }

    #[test]
    fn relations_small() {
        let rep = MatrixRep::seminormal(4, None).unwrap();
        assert!(verify_presentation(&rep).unwrap());
        let b = SeminormalBlock::straight(&p(&[2, 1])).unwrap();
        let mut t1 = b.t_matrix(1).unwrap();
        let t2 = b.t_matrix(2).unwrap();
        t1.set(0, 1, Rf::one());
        assert!(!relations_hold(&[t1, t2], &Rf::x()));
    }

    #[test]
    fn central_scalars() {
        assert_eq!(central_scalar(&p(&[2, 1])), Rf::x_pow(3));
        assert_eq!(central_scalar(&p(&[4])), Rf::x_pow(12));
        assert_eq!(central_scalar(&p(&[1, 1])), Rf::one());
    }
}
