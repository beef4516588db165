//! Laurent polynomials in `v` with integer coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, &BigInt::from(c));
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, e: i32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `v = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc + c)
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn shift(&self, k: i32) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// The part with exponents `< e`.
    pub fn truncate_below(&self, e: i32) -> Self {
        LaurentPolynomial { terms: self.terms.range(..e).map(|(&k, c)| (k, c.clone())).collect() }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Whether every exponent is at least `e`.
    pub fn min_degree_at_least(&self, e: i32) -> bool {
        self.min_degree().is_none_or(|m| m >= e)
    }

    /// Quantum integer `[k] = v^{k-1} + v^{k-3} + ... + v^{1-k}`.
    pub fn quantum_integer(k: u32) -> Self {
        let k = k as i32;
        Self::from_terms((0..k).map(|i| (k - 1 - 2 * i, 1)))
    }

    /// `[k]! = [1][2]...[k]`.
    pub fn quantum_factorial(k: u32) -> Self {
        (1..=k).fold(Self::one(), |acc, i| &acc * &Self::quantum_integer(i))
    }

    /// Exact division; `None` if `divisor` does not divide `self` in `Z[v, v^{-1}]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dmin = divisor.min_degree()?;
        let dmax = divisor.max_degree()?;
        let lead = divisor.terms[&dmax].clone();
        let floor = self.min_degree().unwrap_or(0) - dmin;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_degree() {
            let shift = top - dmax;
            if shift < floor {
                return None;
            }
            let (q, r) = rem.terms[&top].div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (&e, d) in &divisor.terms {
                rem.add_term(e + shift, &-(d * &q));
            }
            quot.add_term(shift, &q);
        }
        Some(quot)
    }

    /// Renders as e.g. `v+v^3`, `1`, `-2v^-1+v`.
    pub fn to_compact_string(&self) -> String {
        alloc::format!("{}", self)
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let a = c.abs();
            if e == 0 || !a.is_one() {
                write!(f, "{}", a)?;
            }
            match e {
                0 => {}
                1 => f.write_str("v")?,
                _ => write!(f, "v^{}", e)?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, &-c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e, c) in &self.terms {
            for (&f, d) in &rhs.terms {
                out.add_term(e + f, &(c * d));
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        let p = LaurentPolynomial::from_terms([(1, 1), (3, 1)]);
        assert_eq!(p.to_compact_string(), "v+v^3");
        assert_eq!(LaurentPolynomial::from_terms([(-1, -2), (0, 1)]).to_compact_string(), "-2v^-1+1");
        assert_eq!(LaurentPolynomial::zero().to_compact_string(), "0");
    }

    #[test]
    fn quantum_factorial_division() {
        let f3 = LaurentPolynomial::quantum_factorial(3);
        let q2 = LaurentPolynomial::quantum_integer(2);
        let q3 = LaurentPolynomial::quantum_integer(3);
        assert_eq!(f3.div_exact(&q3).unwrap(), q2);
        assert_eq!(f3.at_one(), BigInt::from(6));
        assert!(q3.div_exact(&q2).is_none());
        assert_eq!(f3.bar(), f3);
    }
}
