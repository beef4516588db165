//! Tables for the symmetric group `S_n` in one-line notation.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Largest `n` for which the group tables are built.
pub const MAX_N: usize = 8;

/// `S_n` with its elements ranked in lexicographic order of one-line notation.
///
/// Composition is `(uv)(j) = u(v(j))`, so `s_i w` swaps the values `i, i+1` of
/// `w` and `w s_i` swaps the positions `i, i+1`.
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    n: usize,
    perms: Vec<Vec<u8>>,
    index: BTreeMap<Vec<u8>, u32>,
    length: Vec<u32>,
    /// `left[i-1][w] = s_i w`
    left: Vec<Vec<u32>>,
    /// `right[i-1][w] = w s_i`
    right: Vec<Vec<u32>>,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Self {
        assert!((1..=MAX_N).contains(&n), "symmetric group rank out of range");
        let mut perms = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            perms.push(cur.clone());
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let index: BTreeMap<Vec<u8>, u32> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let length = perms.iter().map(|p| inversions(p)).collect();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 1..n {
            left.push(
                perms
                    .iter()
                    .map(|p| {
                        let q: Vec<u8> = p
                            .iter()
                            .map(|&v| if v as usize == i { v + 1 } else if v as usize == i + 1 { v - 1 } else { v })
                            .collect();
                        index[&q]
                    })
                    .collect(),
            );
            right.push(
                perms
                    .iter()
                    .map(|p| {
                        let mut q = p.clone();
                        q.swap(i - 1, i);
                        index[&q]
                    })
                    .collect(),
            );
        }
        SymmetricGroup { n, perms, index, length, left, right }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn perm(&self, w: u32) -> &[u8] {
        &self.perms[w as usize]
    }

    pub fn index_of(&self, p: &[u8]) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn length(&self, w: u32) -> u32 {
        self.length[w as usize]
    }

    pub fn left_mul(&self, i: usize, w: u32) -> u32 {
        self.left[i - 1][w as usize]
    }

    pub fn right_mul(&self, i: usize, w: u32) -> u32 {
        self.right[i - 1][w as usize]
    }

    pub fn inverse(&self, w: u32) -> u32 {
        let p = self.perm(w);
        let mut inv = alloc::vec![0u8; self.n];
        for (j, &v) in p.iter().enumerate() {
            inv[v as usize - 1] = j as u8 + 1;
        }
        self.index[&inv]
    }

    pub fn compose(&self, u: u32, v: u32) -> u32 {
        let (pu, pv) = (self.perm(u), self.perm(v));
        let c: Vec<u8> = pv.iter().map(|&j| pu[j as usize - 1]).collect();
        self.index[&c]
    }

    /// The canonical reduced word: peel off the first right descent repeatedly,
    /// so `w = word(w s_i) . s_i` with `i` the smallest position where `w(i) > w(i+1)`.
    pub fn reduced_word(&self, w: u32) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w;
        while let Some(i) = self.first_right_descent(cur) {
            word.push(i);
            cur = self.right_mul(i, cur);
        }
        word.reverse();
        word
    }

    pub fn first_right_descent(&self, w: u32) -> Option<usize> {
        let p = self.perm(w);
        (1..self.n).find(|&i| p[i - 1] > p[i])
    }

    /// The smallest `i` with `l(s_i w) < l(w)`.
    pub fn first_left_descent(&self, w: u32) -> Option<usize> {
        (1..self.n).find(|&i| self.length(self.left_mul(i, w)) < self.length(w))
    }

    /// Element from a word in the simple reflections (not necessarily reduced).
    pub fn from_word(&self, word: &[usize]) -> u32 {
        word.iter().fold(self.identity(), |w, &i| self.right_mul(i, w))
    }

    /// Elements ordered by length (ties by rank), handy for prefix recursions.
    pub fn by_length(&self) -> Vec<u32> {
        let mut v: Vec<u32> = (0..self.order() as u32).collect();
        v.sort_by_key(|&w| (self.length(w), w));
        v
    }
}

fn inversions(p: &[u8]) -> u32 {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

fn next_permutation(v: &mut [u8]) -> bool {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables() {
        let g = SymmetricGroup::new(4);
        assert_eq!(g.order(), 24);
        for w in 0..24 {
            let word = g.reduced_word(w);
            assert_eq!(word.len() as u32, g.length(w));
            assert_eq!(g.from_word(&word), w);
            assert_eq!(g.compose(w, g.inverse(w)), g.identity());
            for i in 1..4 {
                let s = g.from_word(&[i]);
                assert_eq!(g.left_mul(i, w), g.compose(s, w));
                assert_eq!(g.right_mul(i, w), g.compose(w, s));
            }
        }
    }
}
