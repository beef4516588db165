//! Permutation modules `W^lambda` and the tensor representation on `V^{(x)n}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::perm::SymmetricGroup;
use crate::arith::{Field, Matrix, RationalFunction};
use crate::error::{Error, Result};
use crate::tableaux::Composition;

/// Sparse vector keyed by basis index.
pub type SparseVector<F> = BTreeMap<u32, F>;

/// `W^lambda`, with basis the words of content `lambda` (letter `j` repeated
/// `lambda_j` times). The word of `L_w` is `w` applied to `1^{lambda_1} 2^{lambda_2} ...`,
/// so `s_i` swaps positions `i, i+1` and the length is the number of inversions.
#[derive(Clone, Debug)]
pub struct PermutationModule {
    lambda: Composition,
    words: Vec<Vec<u8>>,
    index: BTreeMap<Vec<u8>, u32>,
    lengths: Vec<u32>,
    /// `swap[i-1][b]`: index of the word with positions `i, i+1` exchanged
    swap: Vec<Vec<u32>>,
}

impl PermutationModule {
    pub fn new(lambda: &Composition) -> Result<Self> {
        let n: usize = lambda.0.iter().map(|&p| p as usize).sum();
        if lambda.0.len() > u8::MAX as usize {
            return Err(Error::SizeGuard(format!("{} parts", lambda.0.len())));
        }
        let mut base = Vec::with_capacity(n);
        for (j, &p) in lambda.0.iter().enumerate() {
            base.extend(core::iter::repeat(j as u8 + 1).take(p as usize));
        }
        let mut words = Vec::new();
        let mut cur = base;
        loop {
            words.push(cur.clone());
            if !next_word(&mut cur) {
                break;
            }
        }
        let index: BTreeMap<Vec<u8>, u32> = words.iter().enumerate().map(|(k, w)| (w.clone(), k as u32)).collect();
        let lengths = words.iter().map(|w| inversions(w)).collect();
        let swap = (1..n)
            .map(|i| {
                words
                    .iter()
                    .map(|w| {
                        let mut s = w.clone();
                        s.swap(i - 1, i);
                        index[&s]
                    })
                    .collect()
            })
            .collect();
        Ok(PermutationModule { lambda: lambda.clone(), words, index, lengths, swap })
    }

    pub fn composition(&self) -> &Composition {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.words.first().map_or(0, |w| w.len())
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }

    pub fn word(&self, b: u32) -> &[u8] {
        &self.words[b as usize]
    }

    pub fn index_of(&self, word: &[u8]) -> Option<u32> {
        self.index.get(word).copied()
    }

    pub fn length(&self, b: u32) -> u32 {
        self.lengths[b as usize]
    }

    /// The minimal-length representative `w` of the coset `w Y_lambda` labelled by basis index `b`.
    pub fn coset_representative(&self, b: u32) -> Vec<u8> {
        let word = self.word(b);
        let mut start: Vec<usize> = Vec::with_capacity(self.lambda.0.len());
        let mut acc = 0usize;
        for &p in &self.lambda.0 {
            start.push(acc);
            acc += p as usize;
        }
        // w^{-1}(j) is the next unused base position carrying letter word[j]
        let mut perm = alloc::vec![0u8; word.len()];
        for (j, &a) in word.iter().enumerate() {
            let pos = start[a as usize - 1];
            start[a as usize - 1] += 1;
            perm[pos] = j as u8 + 1;
        }
        perm
    }

    /// Basis representatives as elements of `group`.
    pub fn coset_representatives(&self, group: &SymmetricGroup) -> Vec<u32> {
        (0..self.dim() as u32).map(|b| group.index_of(&self.coset_representative(b)).unwrap()).collect()
    }

    /// `T_i L_b` as a list of `(basis index, coefficient)`.
    pub fn t_on_basis<F: Field>(&self, q: &F, i: usize, b: u32) -> Vec<(u32, F)> {
        let w = self.word(b);
        let s = self.swap[i - 1][b as usize];
        if w[i - 1] == w[i] {
            alloc::vec![(b, q.clone())]
        } else if w[i - 1] < w[i] {
            alloc::vec![(s, q.one_like())]
        } else {
            alloc::vec![(b, q.sub(&q.one_like())), (s, q.clone())]
        }
    }

    /// `T_i v` on a sparse vector.
    pub fn apply_t<F: Field>(&self, q: &F, i: usize, v: &SparseVector<F>) -> SparseVector<F> {
        let mut out: SparseVector<F> = BTreeMap::new();
        for (&b, c) in v {
            for (r, a) in self.t_on_basis(q, i, b) {
                let add = c.mul(&a);
                let e = out.entry(r).or_insert_with(|| q.zero_like());
                *e = e.add(&add);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Dense matrix of `T_i` for parameter `q`.
    pub fn t_matrix_with<F: Field>(&self, q: &F, i: usize) -> Result<Matrix<F>> {
        if i == 0 || i >= self.n() {
            return Err(Error::Index { index: i as i64, range: format!("1..={}", self.n().saturating_sub(1)) });
        }
        let mut m = Matrix::zeros(self.dim(), self.dim(), &q.zero_like());
        for b in 0..self.dim() as u32 {
            for (r, a) in self.t_on_basis(q, i, b) {
                m.set(r as usize, b as usize, a);
            }
        }
        Ok(m)
    }

    /// Generic matrix of `T_i` (`q = x`).
    pub fn t_matrix(&self, i: usize) -> Result<Matrix<RationalFunction>> {
        self.t_matrix_with(&RationalFunction::x(), i)
    }

    pub fn t_matrices(&self) -> Result<Vec<Matrix<RationalFunction>>> {
        (1..self.n()).map(|i| self.t_matrix(i)).collect()
    }
}

/// Index of `e_{a_1} (x) ... (x) e_{a_n}` (letters `1..=k`) in the natural basis.
pub fn tensor_index(k: usize, letters: &[u8]) -> usize {
    letters.iter().fold(0, |acc, &a| acc * k + (a as usize - 1))
}

fn tensor_letters(k: usize, n: usize, mut idx: usize) -> Vec<u8> {
    let mut out = alloc::vec![0u8; n];
    for j in (0..n).rev() {
        out[j] = (idx % k) as u8 + 1;
        idx /= k;
    }
    out
}

/// `R_i` on `V^{(x)n}`, `dim V = k`, acting on factors `i, i+1`.
pub fn tensor_matrix(k: usize, n: usize, i: usize) -> Result<Matrix<RationalFunction>> {
    if i == 0 || i >= n {
        return Err(Error::Index { index: i as i64, range: format!("1..={}", n.saturating_sub(1)) });
    }
    let dim = k.checked_pow(n as u32).filter(|&d| d <= 1 << 16).ok_or_else(|| Error::SizeGuard(format!("{k}^{n}")))?;
    let q = RationalFunction::x();
    let mut m = Matrix::zeros(dim, dim, &RationalFunction::zero());
    for col in 0..dim {
        let w = tensor_letters(k, n, col);
        let mut s = w.clone();
        s.swap(i - 1, i);
        let sc = tensor_index(k, &s);
        if w[i - 1] == w[i] {
            m.set(col, col, q.clone());
        } else if w[i - 1] < w[i] {
            m.set(sc, col, RationalFunction::one());
        } else {
            m.set(col, col, &q - &RationalFunction::one());
            m.set(sc, col, q.clone());
        }
    }
    Ok(m)
}

fn next_word(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn inversions(w: &[u8]) -> u32 {
    let mut c = 0;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if w[a] > w[b] {
                c += 1;
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::relations_hold;
    type Rf = RationalFunction;

    #[test]
    fn small_modules() {
        let m = PermutationModule::new(&Composition(alloc::vec![2])).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(*m.t_matrix(1).unwrap().get(0, 0), Rf::x());
        let m = PermutationModule::new(&Composition(alloc::vec![1, 1])).unwrap();
        let t = m.t_matrix(1).unwrap();
        assert_eq!(*t.get(1, 0), Rf::one());
        assert_eq!(*t.get(1, 1), &Rf::x() - &Rf::one());
        assert_eq!(*t.get(0, 1), Rf::x());
        assert_eq!(PermutationModule::new(&Composition(alloc::vec![2, 1])).unwrap().dim(), 3);
    }

    #[test]
    fn coset_reps_have_word_length() {
        let g = SymmetricGroup::new(5);
        let m = PermutationModule::new(&Composition(alloc::vec![2, 1, 2])).unwrap();
        let reps = m.coset_representatives(&g);
        for (b, &w) in reps.iter().enumerate() {
            assert_eq!(g.length(w), m.length(b as u32));
        }
    }

    #[test]
    fn tensor_relations() {
        let ts: Vec<_> = (1..4).map(|i| tensor_matrix(2, 4, i).unwrap()).collect();
        assert!(relations_hold(&ts, &Rf::x()));
        let r = tensor_matrix(2, 2, 1).unwrap();
        assert_eq!(*r.get(tensor_index(2, &[2, 1]), tensor_index(2, &[1, 2])), Rf::one());
    }

    #[test]
    fn iota_intertwines() {
        let k = 3;
        let n = 4;
        let lambda = Composition(alloc::vec![2, 1, 1]);
        let m = PermutationModule::new(&lambda).unwrap();
        for i in 1..n {
            let r = tensor_matrix(k, n, i).unwrap();
            let t = m.t_matrix(i).unwrap();
            for b in 0..m.dim() {
                let col = tensor_index(k, m.word(b as u32));
                for c in 0..m.dim() {
                    let row = tensor_index(k, m.word(c as u32));
                    assert_eq!(r.get(row, col), t.get(c, b));
                }
            }
        }
    }
}
