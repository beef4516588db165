//! Cyclotomic polynomials and the cyclotomic fields `Q(zeta_l)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Poly, Rational};
use crate::error::{domain, Result};

pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub(crate) fn mobius(n: u32) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, from
/// `Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}`.
pub fn cyclotomic_coeffs(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    let mut poly: Vec<i64> = vec![1];
    let divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    // multiply first so that every later division is exact
    for &d in &divisors {
        if mobius(n / d) == 1 {
            let d = d as usize;
            let mut next = vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            // divide by x^d - 1: q_i = -(p_i - q_{i-d})
            let d = d as usize;
            let qlen = poly.len() - d;
            let mut q = vec![0i64; qlen];
            for i in 0..qlen {
                let prev = if i >= d { q[i - d] } else { 0 };
                q[i] = prev - poly[i];
            }
            poly = q;
        }
    }
    while poly.last() == Some(&0) {
        poly.pop();
    }
    poly
}

pub fn cyclotomic_poly(n: u32) -> Poly {
    Poly::from_ints(&cyclotomic_coeffs(n))
}

/// An element of `Q(zeta_l)` in the power basis `1, zeta, ..., zeta^{phi(l)-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    l: u32,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    pub fn zero(l: u32) -> Self {
        CyclotomicNumber { l, coeffs: vec![Rational::zero(); totient(l) as usize] }
    }

    pub fn one(l: u32) -> Self {
        Self::from_rational(l, Rational::one())
    }

    pub fn from_rational(l: u32, c: Rational) -> Self {
        let mut z = Self::zero(l);
        z.coeffs[0] = c;
        z
    }

    pub fn from_int(l: u32, c: i64) -> Self {
        Self::from_rational(l, Rational::from_integer(BigInt::from(c)))
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(l: u32, k: i64) -> Self {
        let e = k.rem_euclid(l as i64) as usize;
        Self::from_poly(l, &Poly::monomial(e))
    }

    /// Reduce a polynomial in `zeta` modulo `Phi_l`.
    pub fn from_poly(l: u32, p: &Poly) -> Self {
        let phi = totient(l) as usize;
        let r = if p.degree().is_some_and(|d| d >= phi) { p.rem(&cyclotomic_poly(l)) } else { p.clone() };
        let mut coeffs = vec![Rational::zero(); phi];
        for (i, c) in r.coeffs().iter().enumerate() {
            coeffs[i] = c.clone();
        }
        CyclotomicNumber { l, coeffs }
    }

    pub fn from_coeffs(l: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if l < 1 {
            return Err(domain("cyclotomic modulus must be positive"));
        }
        Ok(Self::from_poly(l, &Poly::from_coeffs(coeffs)))
    }

    pub fn modulus(&self) -> u32 {
        self.l
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn as_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the number lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = self.as_poly().ext_gcd(&cyclotomic_poly(self.l));
        debug_assert!(g.is_one());
        Some(Self::from_poly(self.l, &s))
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.l, other.l, "cyclotomic moduli differ");
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = alloc::format!("{}", self.as_poly());
        write!(f, "{}", s.replace('x', "z"))
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(rhs);
        CyclotomicNumber { l: self.l, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(rhs);
        CyclotomicNumber { l: self.l, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(rhs);
        if self.coeffs.len() == 1 {
            return CyclotomicNumber { l: self.l, coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]] };
        }
        CyclotomicNumber::from_poly(self.l, &(&self.as_poly() * &rhs.as_poly()))
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { l: self.l, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_coeffs(1), [-1, 1]);
        assert_eq!(cyclotomic_coeffs(2), [1, 1]);
        assert_eq!(cyclotomic_coeffs(3), [1, 1, 1]);
        assert_eq!(cyclotomic_coeffs(4), [1, 0, 1]);
        assert_eq!(cyclotomic_coeffs(6), [1, -1, 1]);
        assert_eq!(cyclotomic_coeffs(12), [1, 0, -1, 0, 1]);
        // Phi_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_coeffs(105).contains(&-2));
    }

    #[test]
    fn degrees_match_totient() {
        for n in 1..60 {
            assert_eq!(cyclotomic_coeffs(n).len() as u32 - 1, totient(n), "n = {n}");
        }
    }

    #[test]
    fn zeta_relations() {
        for l in [2u32, 3, 5, 7] {
            let z = CyclotomicNumber::zeta_pow(l, 1);
            let mut acc = CyclotomicNumber::one(l);
            let mut sum = CyclotomicNumber::zero(l);
            for _ in 0..l {
                sum = &sum + &acc;
                acc = &acc * &z;
            }
            assert!(acc.is_one(), "zeta^l = 1 for l = {l}");
            assert!(sum.is_zero(), "sum of powers vanishes for prime l = {l}");
        }
    }

    #[test]
    fn inverse() {
        let l = 5;
        let a = &CyclotomicNumber::from_int(l, 2) + &CyclotomicNumber::zeta_pow(l, 3);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert!(CyclotomicNumber::zero(l).inv().is_none());
    }
}
