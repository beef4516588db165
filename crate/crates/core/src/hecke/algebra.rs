//! The Hecke algebra `H_n(q)` in the `T_w` basis.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::perm::{SymmetricGroup, MAX_N};
use crate::arith::{CyclotomicNumber, Rational, RationalFunction, Ring};
use crate::error::{Error, Result};

/// `H_n` over a field `F`, with quadratic parameter `q`.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra<F> {
    group: Arc<SymmetricGroup>,
    q: F,
    /// `children[u]`: elements whose canonical word extends that of `u` by one letter
    children: Arc<Vec<Vec<(usize, u32)>>>,
    /// `left_children[u]`: pairs `(i, s_i u)` with `i` the first left descent of `s_i u`
    left_children: Arc<Vec<Vec<(usize, u32)>>>,
}

/// `sum_w c_w T_w`, keyed by the rank of `w` in its symmetric group.
#[derive(Clone, PartialEq, Debug)]
pub struct HeckeElement<F = RationalFunction> {
    n: usize,
    terms: BTreeMap<u32, F>,
}

impl HeckeAlgebra<RationalFunction> {
    /// The generic algebra over `Q(x)` with `q = x`.
    pub fn generic(n: usize) -> Result<Self> {
        Self::with_parameter(n, RationalFunction::x())
    }
}

impl HeckeAlgebra<Rational> {
    /// The group algebra `Q S_n` (`q = 1`).
    pub fn at_one(n: usize) -> Result<Self> {
        Self::with_parameter(n, Rational::from_integer(1.into()))
    }
}

impl HeckeAlgebra<CyclotomicNumber> {
    /// `H_n(zeta_l)` over `Q(zeta_l)`.
    pub fn at_root(n: usize, l: u32) -> Result<Self> {
        Self::with_parameter(n, CyclotomicNumber::zeta_pow(l, 1))
    }
}

impl<F: Ring> HeckeAlgebra<F> {
    pub fn with_parameter(n: usize, q: F) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::SizeGuard(format!("n = {n} outside 1..={MAX_N}")));
        }
        let group = SymmetricGroup::new(n);
        let mut children = alloc::vec![Vec::new(); group.order()];
        for w in 1..group.order() as u32 {
            let i = group.first_right_descent(w).unwrap();
            children[group.right_mul(i, w) as usize].push((i, w));
        }
        let mut left_children = alloc::vec![Vec::new(); group.order()];
        for w in 1..group.order() as u32 {
            let i = group.first_left_descent(w).unwrap();
            left_children[group.left_mul(i, w) as usize].push((i, w));
        }
        Ok(HeckeAlgebra {
            group: Arc::new(group),
            q,
            children: Arc::new(children),
            left_children: Arc::new(left_children),
        })
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn group(&self) -> &SymmetricGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> HeckeElement<F> {
        HeckeElement { n: self.n(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> HeckeElement<F> {
        self.scalar(self.q.one_like())
    }

    pub fn scalar(&self, c: F) -> HeckeElement<F> {
        self.term(self.group.identity(), c)
    }

    pub fn term(&self, w: u32, c: F) -> HeckeElement<F> {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        HeckeElement { n: self.n(), terms }
    }

    /// `T_w`.
    pub fn basis(&self, w: u32) -> HeckeElement<F> {
        self.term(w, self.q.one_like())
    }

    /// `T_w` for `w` given by a word in the simple reflections (any word; the
    /// product of the `T_i` is taken literally).
    pub fn word(&self, word: &[usize]) -> Result<HeckeElement<F>> {
        let mut acc = self.one();
        for &i in word {
            self.check_generator(i)?;
            acc = self.right_mul_gen(&acc, i);
        }
        Ok(acc)
    }

    /// `T_i`.
    pub fn generator(&self, i: usize) -> Result<HeckeElement<F>> {
        self.check_generator(i)?;
        Ok(self.basis(self.group.from_word(&[i])))
    }

    /// `e_i = q - T_i`.
    pub fn e(&self, i: usize) -> Result<HeckeElement<F>> {
        Ok(self.one().scale(&self.q).sub(&self.generator(i)?))
    }

    /// The product `e_{i_1} e_{i_2} ...`.
    pub fn e_word(&self, word: &[usize]) -> Result<HeckeElement<F>> {
        let mut acc = self.one();
        for &i in word {
            self.check_generator(i)?;
            acc = self.right_mul_e(&acc, i);
        }
        Ok(acc)
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n() {
            return Err(Error::Index { index: i as i64, range: format!("1..={}", self.n() - 1) });
        }
        Ok(())
    }

    fn check(&self, a: &HeckeElement<F>) -> Result<()> {
        if a.n != self.n() {
            return Err(Error::SizeMismatch(a.n, self.n()));
        }
        Ok(())
    }

    /// `T_i a`.
    pub fn left_mul_gen(&self, a: &HeckeElement<F>, i: usize) -> HeckeElement<F> {
        let q = &self.q;
        let qm1 = q.sub(&q.one_like());
        let mut out = self.zero();
        for (&w, c) in &a.terms {
            let sw = self.group.left_mul(i, w);
            if self.group.length(sw) > self.group.length(w) {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(w, c.mul(&qm1));
                out.add_term(sw, c.mul(q));
            }
        }
        out
    }

    /// `a T_i`.
    pub fn right_mul_gen(&self, a: &HeckeElement<F>, i: usize) -> HeckeElement<F> {
        let q = &self.q;
        let qm1 = q.sub(&q.one_like());
        let mut out = self.zero();
        for (&w, c) in &a.terms {
            let ws = self.group.right_mul(i, w);
            if self.group.length(ws) > self.group.length(w) {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(w, c.mul(&qm1));
                out.add_term(ws, c.mul(q));
            }
        }
        out
    }

    /// `a e_i = q a - a T_i`.
    pub fn right_mul_e(&self, a: &HeckeElement<F>, i: usize) -> HeckeElement<F> {
        a.scale(&self.q).sub(&self.right_mul_gen(a, i))
    }

    /// `e_i a`.
    pub fn left_mul_e(&self, a: &HeckeElement<F>, i: usize) -> HeckeElement<F> {
        a.scale(&self.q).sub(&self.left_mul_gen(a, i))
    }

    /// The product `a b`, as `sum_w b_w (a T_w)` with `a T_w` built along the
    /// canonical-word tree.
    pub fn multiply(&self, a: &HeckeElement<F>, b: &HeckeElement<F>) -> Result<HeckeElement<F>> {
        self.check(a)?;
        self.check(b)?;
        if a.terms.is_empty() || b.terms.is_empty() {
            return Ok(self.zero());
        }
        let mut needed = alloc::vec![false; self.dim()];
        for &w in b.terms.keys() {
            let mut cur = w;
            while !needed[cur as usize] {
                needed[cur as usize] = true;
                match self.group.first_right_descent(cur) {
                    Some(i) => cur = self.group.right_mul(i, cur),
                    None => break,
                }
            }
        }
        let mut out = self.zero();
        self.multiply_rec(self.group.identity(), a, b, &needed, &mut out);
        Ok(out)
    }

    fn multiply_rec(&self, u: u32, au: &HeckeElement<F>, b: &HeckeElement<F>, needed: &[bool], out: &mut HeckeElement<F>) {
        if let Some(c) = b.terms.get(&u) {
            out.add_assign(&au.scale(c));
        }
        for &(i, w) in &self.children[u as usize] {
            if needed[w as usize] {
                let aw = self.right_mul_gen(au, i);
                self.multiply_rec(w, &aw, b, needed, out);
            }
        }
    }

    /// `h v` in a module given by the action `apply_t(i, v) = T_i v`.
    pub fn act<V: Clone>(
        &self,
        h: &HeckeElement<F>,
        v: &V,
        apply_t: &dyn Fn(usize, &V) -> V,
        scale_add: &dyn Fn(&mut V, &F, &V),
        zero: V,
    ) -> V {
        let mut needed = alloc::vec![false; self.dim()];
        for &w in h.terms.keys() {
            let mut cur = w;
            while !needed[cur as usize] {
                needed[cur as usize] = true;
                match self.group.first_left_descent(cur) {
                    Some(i) => cur = self.group.left_mul(i, cur),
                    None => break,
                }
            }
        }
        let mut out = zero;
        let mut stack = alloc::vec![(self.group.identity(), v.clone())];
        while let Some((u, tu)) = stack.pop() {
            if let Some(c) = h.terms.get(&u) {
                scale_add(&mut out, c, &tu);
            }
            for &(i, w) in &self.left_children[u as usize] {
                if needed[w as usize] {
                    stack.push((w, apply_t(i, &tu)));
                }
            }
        }
        out
    }

    /// `h v` for dense vectors.
    pub fn act_dense(&self, h: &HeckeElement<F>, v: &[F], apply_t: &dyn Fn(usize, &[F]) -> Vec<F>) -> Vec<F> {
        let zero = alloc::vec![self.q.zero_like(); v.len()];
        self.act(
            h,
            &v.to_vec(),
            &|i, x: &Vec<F>| apply_t(i, x),
            &|acc: &mut Vec<F>, c: &F, x: &Vec<F>| {
                for (a, b) in acc.iter_mut().zip(x) {
                    if !b.is_zero() {
                        *a = a.add(&c.mul(b));
                    }
                }
            },
            zero,
        )
    }

    pub fn pow(&self, a: &HeckeElement<F>, e: u32) -> Result<HeckeElement<F>> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// `M_i = T_{i-1} ... T_1 T_1 ... T_{i-1}`.
    pub fn murphy(&self, i: usize) -> Result<HeckeElement<F>> {
        if i < 2 || i > self.n() {
            return Err(Error::Index { index: i as i64, range: format!("2..={}", self.n()) });
        }
        let word: Vec<usize> = (1..i).rev().chain(1..i).collect();
        self.word(&word)
    }

    /// `a M_i`, by right multiplication with the generators of the word of `M_i`.
    pub fn right_mul_murphy(&self, a: &HeckeElement<F>, i: usize) -> HeckeElement<F> {
        let mut acc = a.clone();
        for j in (1..i).rev().chain(1..i) {
            acc = self.right_mul_gen(&acc, j);
        }
        acc
    }

    /// `Delta_n^2 = (T_1 ... T_{n-1})^n`.
    pub fn delta_squared(&self) -> HeckeElement<F> {
        let n = self.n();
        let mut acc = self.one();
        for _ in 0..n {
            for i in 1..n {
                acc = self.right_mul_gen(&acc, i);
            }
        }
        acc
    }

    /// Coefficients keyed by canonical reduced words.
    pub fn terms_by_word(&self, a: &HeckeElement<F>) -> Vec<(Vec<usize>, F)> {
        a.terms.iter().map(|(&w, c)| (self.group.reduced_word(w), c.clone())).collect()
    }

    /// The coefficient of `T_w` for `w` given by its one-line notation.
    pub fn coefficient(&self, a: &HeckeElement<F>, perm: &[u8]) -> Option<F> {
        let w = self.group.index_of(perm)?;
        Some(a.terms.get(&w).cloned().unwrap_or_else(|| self.q.zero_like()))
    }
}

impl<F: Ring> HeckeElement<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &F)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn get(&self, w: u32) -> Option<&F> {
        self.terms.get(&w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: u32, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "Hecke elements of different rank");
        for (&w, c) in &other.terms {
            self.add_term(w, c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&w, c) in &other.terms {
            out.add_term(w, c.neg());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return HeckeElement { n: self.n, terms: BTreeMap::new() };
        }
        HeckeElement { n: self.n, terms: self.terms.iter().map(|(&w, v)| (w, v.mul(c))).collect() }
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> HeckeElement<G> {
        let terms = self.terms.iter().map(|(&w, c)| (w, f(c))).filter(|(_, c)| !c.is_zero()).collect();
        HeckeElement { n: self.n, terms }
    }
}

/// The first `T_w` coefficient with a pole at `zeta_l`.
#[derive(Clone, Debug, PartialEq)]
pub struct PoleWitness {
    pub word: Vec<usize>,
    pub coefficient: RationalFunction,
    pub order: u32,
}

impl HeckeAlgebra<RationalFunction> {
    /// `Ok(())` if every coefficient is evaluable at `zeta_l`, otherwise a witness.
    pub fn evaluability(&self, a: &HeckeElement, l: u32) -> core::result::Result<(), PoleWitness> {
        for (&w, c) in &a.terms {
            let order = c.pole_order(l);
            if order > 0 {
                return Err(PoleWitness { word: self.group.reduced_word(w), coefficient: c.clone(), order });
            }
        }
        Ok(())
    }

    /// Evaluate every coefficient at `zeta_l`.
    pub fn evaluate_at_root(&self, a: &HeckeElement, l: u32) -> Result<HeckeElement<CyclotomicNumber>> {
        let mut terms = BTreeMap::new();
        for (&w, c) in &a.terms {
            let v = c.evaluate_at_root(l)?;
            if !v.is_zero() {
                terms.insert(w, v);
            }
        }
        Ok(HeckeElement { n: a.n, terms })
    }

    /// Evaluate every coefficient at `x = 1`.
    pub fn evaluate_at_one(&self, a: &HeckeElement) -> Result<HeckeElement<Rational>> {
        let mut terms = BTreeMap::new();
        for (&w, c) in &a.terms {
            let v = c.evaluate_at_one()?;
            if !Ring::is_zero(&v) {
                terms.insert(w, v);
            }
        }
        Ok(HeckeElement { n: a.n, terms })
    }

    pub fn describe(&self, a: &HeckeElement) -> String {
        let mut s = String::new();
        for (i, (word, c)) in self.terms_by_word(a).iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            s.push_str(&format!("({c})T{word:?}"));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Poly;

    #[test]
    fn quadratic_relation() {
        let h = HeckeAlgebra::generic(2).unwrap();
        let t = h.generator(1).unwrap();
        let t2 = h.multiply(&t, &t).unwrap();
        let expected = t.scale(&RationalFunction::from_poly(Poly::from_ints(&[-1, 1]))).add(&h.scalar(RationalFunction::x()));
        assert_eq!(t2, expected);
        assert_eq!(h.multiply(&h.one(), &t2).unwrap(), t2);
    }

    #[test]
    fn braid_relation() {
        let h = HeckeAlgebra::generic(3).unwrap();
        let a = h.word(&[1, 2, 1]).unwrap();
        let b = h.word(&[2, 1, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 1);
    }

    #[test]
    fn associativity_sample() {
        let h = HeckeAlgebra::generic(4).unwrap();
        let a = h.word(&[1, 2, 3]).unwrap().add(&h.e(2).unwrap());
        let b = h.word(&[3, 1]).unwrap().add(&h.one());
        let c = h.murphy(3).unwrap();
        let ab_c = h.multiply(&h.multiply(&a, &b).unwrap(), &c).unwrap();
        let a_bc = h.multiply(&a, &h.multiply(&b, &c).unwrap()).unwrap();
        assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn size_mismatch() {
        let h2 = HeckeAlgebra::generic(2).unwrap();
        let h3 = HeckeAlgebra::generic(3).unwrap();
        assert!(matches!(h3.multiply(&h2.one(), &h3.one()), Err(Error::SizeMismatch(2, 3))));
    }
}
