//! Partitions, compositions, standard (skew) tableaux, rim hooks and cores.
//!
//! Cells are 1-based `(row, column)` pairs with row 1 on top. The content of a
//! cell is `column - row`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{domain, Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

/// Outcome of comparing two partitions in the dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Dominates,
    Dominated,
    Equal,
    Incomparable,
}

impl Partition {
    /// Validates and strips trailing zeros.
    pub fn new(parts: &[u32]) -> Result<Self> {
        let mut v: Vec<u32> = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        if v.windows(2).any(|w| w[0] < w[1]) || v.contains(&0) {
            return Err(domain(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(v))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(parts: &[u32]) -> Self {
        let mut v: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Row length with `part(r) = 0` beyond the last row; `r` is 1-based.
    pub fn part(&self, r: usize) -> u32 {
        if r == 0 {
            return u32::MAX;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `k`.
    pub fn padded(&self, k: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(k.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect())
    }

    /// Whether the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row) as usize >= col
    }

    /// Cells in row-reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &p) in self.0.iter().enumerate() {
            for c in 1..=p as usize {
                out.push((r + 1, c));
            }
        }
        out
    }

    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        (1..=self.len() + 1).filter(|&r| self.part(r) < self.part(r - 1)).map(|r| (r, self.part(r) as usize + 1)).collect()
    }

    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        (1..=self.len()).filter(|&r| self.part(r) > self.part(r + 1)).map(|r| (r, self.part(r) as usize)).collect()
    }

    pub fn add_cell(&self, row: usize) -> Partition {
        let mut v = self.0.clone();
        if row > v.len() {
            v.push(1);
        } else {
            v[row - 1] += 1;
        }
        Partition(v)
    }

    pub fn remove_cell(&self, row: usize) -> Partition {
        let mut v = self.0.clone();
        v[row - 1] -= 1;
        if v[row - 1] == 0 {
            v.pop();
        }
        Partition(v)
    }

    pub fn hook_length(&self, row: usize, col: usize) -> u32 {
        let arm = self.part(row) - col as u32;
        let leg = self.conjugate().part(col) - row as u32;
        arm + leg + 1
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn hook_length_count(&self) -> u64 {
        let n = self.size() as u64;
        let mut num: u128 = (1..=n as u128).product();
        for (r, c) in self.cells() {
            num /= self.hook_length(r, c) as u128;
        }
        num as u64
    }

    /// `sum_i (i - 1) * lambda_i`.
    pub fn n_statistic(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// Whether no part value occurs `l` or more times.
    pub fn is_l_regular(&self, l: u32) -> bool {
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if (j - i) as u32 >= l {
                return false;
            }
            i = j;
        }
        true
    }

    /// The `l`-core, removing rim hooks of length `l` until none is left.
    pub fn l_core(&self, l: u32) -> Partition {
        let mut cur = self.clone();
        while let Some(next) = cur.rim_hook_removals(l).into_iter().next() {
            cur = next;
        }
        cur
    }

    /// All partitions obtained by removing one rim hook of length `l`,
    /// starting from the hook whose foot lies in the lowest row.
    pub fn rim_hook_removals(&self, l: u32) -> Vec<Partition> {
        // beta numbers: moving a bead from b to b - l removes an l-rim hook
        let r = self.len();
        let beta: Vec<i64> = (0..r).map(|i| self.0[i] as i64 + (r - 1 - i) as i64).collect();
        let set: BTreeSet<i64> = beta.iter().copied().collect();
        let mut out = Vec::new();
        for i in (0..r).rev() {
            let b = beta[i] - l as i64;
            if b >= 0 && !set.contains(&b) {
                let mut nb = beta.clone();
                nb[i] = b;
                nb.sort_unstable_by(|a, b| b.cmp(a));
                let parts: Vec<u32> = nb.iter().enumerate().map(|(j, &x)| (x - (r - 1 - j) as i64) as u32).collect();
                out.push(Partition::new(&parts).unwrap());
            }
        }
        out
    }

    pub fn dominance_compare(&self, other: &Partition) -> Result<Dominance> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size() as usize, other.size() as usize));
        }
        let (mut ge, mut le) = (true, true);
        let (mut a, mut b) = (0u32, 0u32);
        for r in 1..=self.len().max(other.len()) {
            a += self.part(r);
            b += other.part(r);
            ge &= a >= b;
            le &= a <= b;
        }
        Ok(match (ge, le) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Dominates,
            (false, true) => Dominance::Dominated,
            (false, false) => Dominance::Incomparable,
        })
    }

    /// `self ⊵ other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        matches!(self.dominance_compare(other), Ok(Dominance::Dominates | Dominance::Equal))
    }

    /// Lexicographic comparison of the part sequences.
    pub fn lex_cmp(&self, other: &Partition) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// All partitions of `n`, lexicographically descending.
    pub fn all(n: u32) -> Vec<Partition> {
        Self::all_with_max_rows(n, n as usize)
    }

    /// Partitions of `n` with at most `k` rows, lexicographically descending.
    pub fn all_with_max_rows(n: u32, k: usize) -> Vec<Partition> {
        fn rec(n: u32, max: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == k {
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, k, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A finite sequence of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

/// A standard filling of `outer / inner` by `1..=m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    inner: Partition,
    outer: Partition,
    /// `pos[i - 1]` is the cell of entry `i`.
    pos: Vec<(usize, usize)>,
}

impl StandardTableau {
    /// From entries listed row by row (only the cells of the skew shape).
    pub fn from_rows(inner: &Partition, rows: &[Vec<u32>]) -> Result<Self> {
        let mut cells = BTreeMap::new();
        let mut outer = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            let start = inner.part(r + 1) as usize;
            for (c, &e) in row.iter().enumerate() {
                if cells.insert(e, (r + 1, start + c + 1)).is_some() {
                    return Err(domain(format!("entry {e} repeated")));
                }
            }
            outer.push((start + row.len()) as u32);
        }
        for r in rows.len() + 1..=inner.len() {
            outer.push(inner.part(r));
        }
        let outer = Partition::new(&outer).map_err(|_| Error::Shape("rows do not form a skew shape".into()))?;
        if !outer.contains(inner) {
            return Err(Error::Shape(format!("{inner} is not contained in {outer}")));
        }
        let m = cells.len() as u32;
        if cells.keys().copied().ne(1..=m) {
            return Err(domain("entries must be exactly 1..m"));
        }
        let t = StandardTableau { inner: inner.clone(), outer, pos: cells.into_values().collect() };
        if !t.is_standard() {
            return Err(domain("entries do not increase along rows and columns"));
        }
        Ok(t)
    }

    /// Straight tableau from its rows.
    pub fn from_straight_rows(rows: &[Vec<u32>]) -> Result<Self> {
        Self::from_rows(&Partition::empty(), rows)
    }

    /// From the row index of each entry, added in order to `inner`.
    pub fn from_row_word(inner: &Partition, word: &[usize]) -> Result<Self> {
        let mut shape = inner.clone();
        let mut pos = Vec::with_capacity(word.len());
        for &r in word {
            if r == 0 || shape.part(r) >= shape.part(r - 1) {
                return Err(domain(format!("cannot add a cell in row {r} of {shape}")));
            }
            shape = shape.add_cell(r);
            pos.push((r, shape.part(r) as usize));
        }
        Ok(StandardTableau { inner: inner.clone(), outer: shape, pos })
    }

    fn is_standard(&self) -> bool {
        let idx: BTreeMap<(usize, usize), usize> = self.pos.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        idx.iter().all(|(&(r, c), &i)| {
            let right = idx.get(&(r, c + 1)).is_none_or(|&j| j > i);
            let below = idx.get(&(r + 1, c)).is_none_or(|&j| j > i);
            right && below
        })
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    /// Outer shape (the shape, for straight tableaux).
    pub fn shape(&self) -> &Partition {
        &self.outer
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.pos.len()
    }

    /// Cell of entry `i` (1-based).
    pub fn position(&self, i: usize) -> (usize, usize) {
        self.pos[i - 1]
    }

    pub fn row_of(&self, i: usize) -> usize {
        self.pos[i - 1].0
    }

    pub fn col_of(&self, i: usize) -> usize {
        self.pos[i - 1].1
    }

    /// `c_i(t) - r_i(t)`.
    pub fn content(&self, i: usize) -> i64 {
        let (r, c) = self.pos[i - 1];
        c as i64 - r as i64
    }

    pub fn content_vector(&self) -> Vec<i64> {
        (1..=self.size()).map(|i| self.content(i)).collect()
    }

    /// Row index of each entry.
    pub fn row_word(&self) -> Vec<usize> {
        self.pos.iter().map(|p| p.0).collect()
    }

    /// Entries row by row.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<(usize, u32)>> = vec![Vec::new(); self.outer.len()];
        for (i, &(r, c)) in self.pos.iter().enumerate() {
            rows[r - 1].push((c, i as u32 + 1));
        }
        rows.into_iter()
            .map(|mut row| {
                row.sort_unstable();
                row.into_iter().map(|(_, e)| e).collect()
            })
            .collect()
    }

    /// `d(t; i, j)`, the difference of the contents of `i` and `j`.
    pub fn axial_distance(&self, i: usize, j: usize) -> Result<i64> {
        let m = self.size();
        for x in [i, j] {
            if x == 0 || x > m {
                return Err(Error::Index { index: x as i64, range: format!("1..={m}") });
            }
        }
        Ok(self.content(i) - self.content(j))
    }

    /// `d(t; i) = d(t; i, i + 1)`, unchecked.
    pub fn d(&self, i: usize) -> i64 {
        self.content(i) - self.content(i + 1)
    }

    /// `s_i t`, swapping entries `i` and `i + 1`, if the result is standard.
    pub fn swap(&self, i: usize) -> Option<StandardTableau> {
        let (a, b) = (self.pos[i - 1], self.pos[i]);
        if a.0 == b.0 || a.1 == b.1 {
            return None;
        }
        let mut t = self.clone();
        t.pos.swap(i - 1, i);
        Some(t)
    }

    /// The tableau formed by entries `1..=k`.
    pub fn prefix(&self, k: usize) -> StandardTableau {
        let word = &self.row_word()[..k];
        StandardTableau::from_row_word(&self.inner, word).unwrap()
    }

    /// The skew tableau formed by entries `from+1..=to`, renumbered from 1.
    pub fn segment(&self, from: usize, to: usize) -> StandardTableau {
        let start = self.prefix(from).outer;
        StandardTableau::from_row_word(&start, &self.row_word()[from..to]).unwrap()
    }

    /// Number of rows used by the outer shape.
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.inner.is_empty() {
            write!(f, "{}/", self.inner)?;
        }
        f.write_str("[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{row:?}")?;
        }
        f.write_str("]")
    }
}

/// All standard tableaux of shape `outer / inner`, in lexicographically
/// descending order of content vectors.
pub fn enumerate_standard_tableaux(outer: &Partition, inner: &Partition) -> Result<Vec<StandardTableau>> {
    if !outer.contains(inner) {
        return Err(Error::Shape(format!("{inner} is not contained in {outer}")));
    }
    let m = (outer.size() - inner.size()) as usize;
    let mut words = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(shape: &Partition, outer: &Partition, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for r in 1..=outer.len() {
            if shape.part(r) < outer.part(r) && shape.part(r) < shape.part(r - 1) {
                cur.push(r);
                rec(&shape.add_cell(r), outer, left - 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(inner, outer, m, &mut cur, &mut words);
    let mut out: Vec<StandardTableau> =
        words.iter().map(|w| StandardTableau::from_row_word(inner, w).unwrap()).collect();
    sort_tableaux(&mut out);
    Ok(out)
}

/// Sorts by content vector, lexicographically descending.
pub fn sort_tableaux(ts: &mut [StandardTableau]) {
    ts.sort_by_cached_key(|t| core::cmp::Reverse(t.content_vector()));
}

/// All straight standard tableaux of size `n` with at most `k` rows, grouped by
/// shape (shapes lexicographically descending).
pub fn tableaux_up_to_rows(n: u32, k: usize) -> Vec<StandardTableau> {
    Partition::all_with_max_rows(n, k)
        .iter()
        .flat_map(|p| enumerate_standard_tableaux(p, &Partition::empty()).unwrap())
        .collect()
}

/// Content vector reduced mod `l`.
pub fn residue_vector(t: &StandardTableau, l: u32) -> Vec<i64> {
    t.content_vector().iter().map(|c| c.rem_euclid(l as i64)).collect()
}

/// Every straight tableau of the same size with at most `k` rows whose content
/// vector agrees with that of `t` modulo `l`.
pub fn l_equivalence_class(t: &StandardTableau, l: u32, k: usize) -> Result<Vec<StandardTableau>> {
    if t.num_rows() > k {
        return Err(Error::Shape(format!("{t} has more than {k} rows")));
    }
    let target = residue_vector(t, l);
    Ok(tableaux_up_to_rows(t.size() as u32, k).into_iter().filter(|s| residue_vector(s, l) == target).collect())
}

/// Partition of the size-`n`, at most `k`-row tableaux into `l`-equivalence classes.
pub fn l_equivalence_classes(n: u32, l: u32, k: usize) -> Vec<Vec<StandardTableau>> {
    let mut classes: BTreeMap<Vec<i64>, Vec<StandardTableau>> = BTreeMap::new();
    for t in tableaux_up_to_rows(n, k) {
        classes.entry(residue_vector(&t, l)).or_default().push(t);
    }
    classes.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn st(rows: &[&[u32]]) -> StandardTableau {
        StandardTableau::from_straight_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_standard_tableaux(&p(&[2, 1]), &Partition::empty()).unwrap().len(), 2);
        assert_eq!(enumerate_standard_tableaux(&p(&[5]), &Partition::empty()).unwrap().len(), 1);
        assert_eq!(enumerate_standard_tableaux(&p(&[2, 2]), &p(&[1])).unwrap().len(), 2);
        assert!(enumerate_standard_tableaux(&p(&[2]), &p(&[1, 1])).is_err());
        let ts = enumerate_standard_tableaux(&p(&[2, 1]), &Partition::empty()).unwrap();
        assert_eq!(ts[0], st(&[&[1, 2], &[3]]));
    }

    #[test]
    fn axial_distances() {
        let t1 = st(&[&[1, 2], &[3]]);
        let t2 = st(&[&[1, 3], &[2]]);
        assert_eq!(t1.axial_distance(2, 3).unwrap(), 2);
        assert_eq!(t2.axial_distance(2, 3).unwrap(), -2);
        assert_eq!(t1.axial_distance(1, 2).unwrap(), -1);
        assert!(t1.axial_distance(0, 2).is_err());
        assert!(t1.axial_distance(1, 4).is_err());
    }

    #[test]
    fn cores() {
        assert_eq!(p(&[3, 1]).l_core(2), Partition::empty());
        assert_eq!(p(&[2, 1]).l_core(2), p(&[2, 1]));
        assert_eq!(p(&[4, 2, 1]).l_core(8), p(&[4, 2, 1]));
    }

    #[test]
    fn regularity_and_dominance() {
        assert!(!p(&[1, 1]).is_l_regular(2));
        assert!(p(&[2, 1]).is_l_regular(2));
        assert!(!p(&[2, 2, 2]).is_l_regular(3));
        assert_eq!(p(&[3, 1]).dominance_compare(&p(&[2, 2])).unwrap(), Dominance::Dominates);
        assert_eq!(p(&[3, 1, 1, 1]).dominance_compare(&p(&[2, 2, 2])).unwrap(), Dominance::Incomparable);
        assert_eq!(p(&[2, 1]).dominance_compare(&p(&[2, 1])).unwrap(), Dominance::Equal);
        assert!(p(&[2]).dominance_compare(&p(&[2, 1])).is_err());
    }

    #[test]
    fn equivalence_classes() {
        let t = st(&[&[1, 2], &[3]]);
        assert_eq!(l_equivalence_class(&t, 2, 3).unwrap().len(), 2);
        assert_eq!(l_equivalence_class(&t, 7, 3).unwrap(), vec![t.clone()]);
        let row = st(&[&[1, 2, 3, 4]]);
        let class = l_equivalence_class(&row, 2, 2).unwrap();
        assert!(class.contains(&row));
        for s in &class {
            assert_eq!(residue_vector(s, 2), vec![0, 1, 0, 1]);
        }
    }

    #[test]
    fn conjugate_and_swap() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        let t1 = st(&[&[1, 2], &[3]]);
        assert_eq!(t1.swap(2).unwrap(), st(&[&[1, 3], &[2]]));
        assert!(t1.swap(1).is_none());
    }
}
