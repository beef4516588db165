//! Rational functions in `x` with a factored denominator.
//!
//! The denominator is stored as `x^a * prod_j Phi_j^{m_j} * rest`, where `rest`
//! is monic and coprime to `x` and to every cyclotomic polynomial. Fractions
//! are always reduced, so two equal functions compare equal structurally, and
//! the pole order at a primitive `l`-th root of unity is a map lookup.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::cyclotomic::{cyclotomic_poly, mobius, totient};
use num_bigint::BigInt;
use super::{CyclotomicNumber, Poly, Rational};
use crate::error::{domain, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Denominator {
    x_pow: u32,
    cyclo: BTreeMap<u32, u32>,
    rest: Poly,
}

impl Denominator {
    fn one() -> Self {
        Denominator { x_pow: 0, cyclo: BTreeMap::new(), rest: Poly::one() }
    }

    fn is_one(&self) -> bool {
        self.x_pow == 0 && self.cyclo.is_empty() && self.rest.is_one()
    }

    fn to_poly(&self) -> Poly {
        let mut p = self.rest.shift_up(self.x_pow as usize);
        for (&j, &m) in &self.cyclo {
            p = &p * &cyclotomic_poly(j).pow(m);
        }
        p
    }

    /// Factor a nonzero polynomial as `c * x^a * prod Phi_j^m * rest`; returns `(c, denominator)`.
    fn factor(p: &Poly) -> (Rational, Denominator) {
        let x_pow = p.x_valuation();
        let mut rest = p.shift_down(x_pow);
        let mut cyclo = BTreeMap::new();
        // Phi_j | rest forces Phi_j(a) | L rest(a) for integers a, L clearing denominators
        let mut probes = [integral_value(&rest, 2), integral_value(&rest, 3)];
        let mut j = 1u32;
        loop {
            let deg = rest.degree().unwrap_or(0);
            if deg == 0 {
                break;
            }
            // phi(j) >= sqrt(j / 2) bounds the search
            if (j as usize) > 2 * deg * deg + 2 {
                break;
            }
            if (totient(j) as usize) <= deg {
                let vals = [cyclotomic_value(j, 2), cyclotomic_value(j, 3)];
                let mut m = 0;
                while probes.iter().zip(&vals).all(|(p, v)| (p % v).is_zero()) {
                    match rest.div_exact(&cyclotomic_poly(j)) {
                        Some(q) => {
                            rest = q;
                            m += 1;
                            probes = [integral_value(&rest, 2), integral_value(&rest, 3)];
                        }
                        None => break,
                    }
                }
                if m > 0 {
                    cyclo.insert(j, m);
                }
            }
            j += 1;
        }
        let lc = rest.leading().cloned().expect("factor of zero polynomial");
        (lc.clone(), Denominator { x_pow: x_pow as u32, cyclo, rest: rest.scale(&lc.recip()) })
    }

    fn lcm(&self, other: &Denominator) -> Denominator {
        let mut cyclo = self.cyclo.clone();
        for (&j, &m) in &other.cyclo {
            let e = cyclo.entry(j).or_insert(0);
            *e = (*e).max(m);
        }
        let rest = if other.rest.is_one() {
            self.rest.clone()
        } else if self.rest.is_one() {
            other.rest.clone()
        } else {
            let g = self.rest.gcd(&other.rest);
            (&self.rest * &other.rest).div_exact(&g).unwrap().monic()
        };
        Denominator { x_pow: self.x_pow.max(other.x_pow), cyclo, rest }
    }

    /// `self / sub` as a polynomial, assuming `sub` divides `self`.
    fn cofactor(&self, sub: &Denominator) -> Poly {
        let mut p = if sub.rest.is_one() { self.rest.clone() } else { self.rest.div_exact(&sub.rest).unwrap() };
        p = p.shift_up((self.x_pow - sub.x_pow) as usize);
        for (&j, &m) in &self.cyclo {
            let d = m - sub.cyclo.get(&j).copied().unwrap_or(0);
            if d > 0 {
                p = &p * &cyclotomic_poly(j).pow(d);
            }
        }
        p
    }
}

/// `L p(a)` with `L` the least common denominator of the coefficients of `p`.
fn integral_value(p: &Poly, a: i64) -> BigInt {
    let l = p.denominator_lcm();
    let v = p.eval(&Rational::from_integer(BigInt::from(a)));
    (v * Rational::from_integer(l)).to_integer()
}

/// `Phi_j(a) = prod_{d | j} (a^d - 1)^{mu(j/d)}` for `a >= 2`.
fn cyclotomic_value(j: u32, a: i64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for d in 1..=j {
        if j % d != 0 {
            continue;
        }
        let f = num_traits::pow(BigInt::from(a), d as usize) - BigInt::one();
        match mobius(j / d) {
            1 => num *= f,
            -1 => den *= f,
            _ => {}
        }
    }
    num / den
}

/// An element of `Q(x)`, kept in lowest terms with a monic factored denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Denominator,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Denominator::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Denominator::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(Poly::from_ints(&[c]))
    }

    /// `x`.
    pub fn x() -> Self {
        Self::x_pow(1)
    }

    /// `x^k` for any integer `k`.
    pub fn x_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Poly::monomial(k as usize))
        } else {
            let mut den = Denominator::one();
            den.x_pow = (-k) as u32;
            RationalFunction { num: Poly::one(), den }
        }
    }

    /// `num / den`, reduced. Fails on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(domain("zero denominator"));
        }
        let (c, den) = Denominator::factor(&den);
        let mut f = RationalFunction { num: num.scale(&c.recip()), den };
        f.reduce();
        Ok(f)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Denominator::one();
            return;
        }
        let v = (self.num.x_valuation() as u32).min(self.den.x_pow);
        if v > 0 {
            self.num = self.num.shift_down(v as usize);
            self.den.x_pow -= v;
        }
        let keys: alloc::vec::Vec<u32> = self.den.cyclo.keys().copied().collect();
        for j in keys {
            let phi = cyclotomic_poly(j);
            let m = self.den.cyclo.get_mut(&j).unwrap();
            while *m > 0 {
                match self.num.div_exact(&phi) {
                    Some(q) => {
                        self.num = q;
                        *m -= 1;
                    }
                    None => break,
                }
            }
            if *m == 0 {
                self.den.cyclo.remove(&j);
            }
        }
        if !self.den.rest.is_one() {
            let g = self.num.gcd(&self.den.rest);
            if !g.is_one() {
                self.num = self.num.div_exact(&g).unwrap();
                self.den.rest = self.den.rest.div_exact(&g).unwrap().monic();
            }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> Poly {
        self.den.to_poly()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value, if the function is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// Multiplicity of `Phi_l` in the denominator (zero when `f` has no pole at `zeta_l`).
    pub fn pole_order(&self, l: u32) -> u32 {
        self.den.cyclo.get(&l).copied().unwrap_or(0)
    }

    /// `Phi_l`-adic valuation: negative for a pole, positive for a zero.
    pub fn cyclotomic_valuation(&self, l: u32) -> i64 {
        let p = self.pole_order(l);
        if p > 0 {
            return -(p as i64);
        }
        if self.num.is_zero() {
            return i64::MAX;
        }
        let phi = cyclotomic_poly(l);
        let mut num = self.num.clone();
        let mut v = 0;
        while let Some(q) = num.div_exact(&phi) {
            num = q;
            v += 1;
        }
        v
    }

    /// Whether the function has no pole at a primitive `l`-th root of unity.
    pub fn is_evaluable_at(&self, l: u32) -> bool {
        self.pole_order(l) == 0
    }

    /// Substitute `x -> zeta_l`, a primitive `l`-th root of unity.
    pub fn evaluate_at_root(&self, l: u32) -> Result<CyclotomicNumber> {
        if l < 2 {
            return Err(domain(format!("root-of-unity order must be at least 2, got {l}")));
        }
        self.evaluate_cyclotomic(l)
    }

    fn evaluate_cyclotomic(&self, l: u32) -> Result<CyclotomicNumber> {
        let order = self.pole_order(l);
        if order > 0 {
            return Err(Error::Pole { point: format!("zeta_{l}"), order });
        }
        let num = CyclotomicNumber::from_poly(l, &self.num);
        if self.den.is_one() {
            return Ok(num);
        }
        let mut den = CyclotomicNumber::from_poly(l, &self.den.rest);
        if self.den.x_pow > 0 {
            den = &den * &CyclotomicNumber::zeta_pow(l, self.den.x_pow as i64);
        }
        for (&j, &m) in &self.den.cyclo {
            let phi = CyclotomicNumber::from_poly(l, &cyclotomic_poly(j));
            for _ in 0..m {
                den = &den * &phi;
            }
        }
        let inv = den.inv().ok_or_else(|| Error::Pole { point: format!("zeta_{l}"), order: 1 })?;
        Ok(&num * &inv)
    }

    /// Substitute `x -> 1`.
    pub fn evaluate_at_one(&self) -> Result<Rational> {
        let order = self.pole_order(1);
        if order > 0 {
            return Err(Error::Pole { point: "1".to_string(), order });
        }
        let den = self.den.to_poly().eval(&Rational::one());
        Ok(self.num.eval(&Rational::one()) / den)
    }

    /// Substitute `x -> x^k` for `k >= 1`.
    pub fn compose_power(&self, k: u32) -> Self {
        if k == 1 || self.num.is_zero() {
            return self.clone();
        }
        Self::new(self.num.compose_power(k as usize), self.den.to_poly().compose_power(k as usize)).unwrap()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::new(self.den.to_poly(), self.num.clone()).unwrap())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    /// `x^k * self` for any integer `k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.num.is_zero() || k == 0 {
            return self.clone();
        }
        let mut out = self.clone();
        if k > 0 {
            let k = k as u32;
            let cancel = k.min(out.den.x_pow);
            out.den.x_pow -= cancel;
            out.num = out.num.shift_up((k - cancel) as usize);
        } else {
            let k = (-k) as u32;
            let cancel = k.min(out.num.x_valuation() as u32);
            out.num = out.num.shift_down(cancel as usize);
            out.den.x_pow += k - cancel;
        }
        out
    }

    /// Multiply by a polynomial.
    pub fn mul_poly(&self, p: &Poly) -> Self {
        if self.num.is_zero() || p.is_zero() {
            return Self::zero();
        }
        let mut out = RationalFunction { num: &self.num * p, den: self.den.clone() };
        if !out.den.is_one() {
            out.reduce();
        }
        out
    }
}

/// Writes `items[k] = scale * polys[k]` with `1 / scale` the least common
/// multiple of the denominators; returns `(polys, scale)`.
pub fn clear_denominators(items: &[RationalFunction]) -> (alloc::vec::Vec<Poly>, RationalFunction) {
    let den = items.iter().fold(Denominator::one(), |acc, f| acc.lcm(&f.den));
    let polys = items.iter().map(|f| &f.num * &den.cofactor(&f.den)).collect();
    (polys, RationalFunction { num: Poly::one(), den })
}

/// `a_d(x) = (1 - x^{d+1}) / (1 - x^d)` for `d != 0`.
pub fn a_d(d: i64) -> Result<RationalFunction> {
    if d == 0 {
        return Err(domain("a_0 is undefined"));
    }
    let one = RationalFunction::one();
    let num = &one - &RationalFunction::x_pow(d + 1);
    let den = &one - &RationalFunction::x_pow(d);
    Ok(&num / &den)
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den.to_poly())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let mut out = RationalFunction { num: &self.num + &rhs.num, den: self.den.clone() };
            out.reduce();
            return out;
        }
        let den = self.den.lcm(&rhs.den);
        let num = &(&self.num * &den.cofactor(&self.den)) + &(&rhs.num * &den.cofactor(&rhs.den));
        let mut out = RationalFunction { num, den };
        out.reduce();
        out
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalFunction::zero();
        }
        if rhs.den.is_one() {
            return self.mul_poly(&rhs.num);
        }
        if self.den.is_one() {
            return rhs.mul_poly(&self.num);
        }
        let mut cyclo = self.den.cyclo.clone();
        for (&j, &m) in &rhs.den.cyclo {
            *cyclo.entry(j).or_insert(0) += m;
        }
        let den = Denominator { x_pow: self.den.x_pow + rhs.den.x_pow, cyclo, rest: &self.den.rest * &rhs.den.rest };
        let mut out = RationalFunction { num: &self.num * &rhs.num, den };
        out.reduce();
        out
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn poly(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn a_d_small_values() {
        assert_eq!(a_d(1).unwrap(), RationalFunction::from_poly(poly(&[1, 1])));
        assert_eq!(a_d(-2).unwrap(), RationalFunction::new(poly(&[0, 1]), poly(&[1, 1])).unwrap());
        assert_eq!(&a_d(2).unwrap() + &a_d(-2).unwrap(), RationalFunction::from_poly(poly(&[1, 1])));
        assert!(a_d(0).is_err());
    }

    #[test]
    fn evaluation_at_roots() {
        let f = RationalFunction::from_poly(poly(&[1, 1]));
        assert!(f.evaluate_at_root(2).unwrap().is_zero());

        let g = RationalFunction::new(poly(&[1]), poly(&[1, 0, -1])).unwrap();
        assert!(matches!(g.evaluate_at_root(2), Err(Error::Pole { order: 1, .. })));

        let h = RationalFunction::new(poly(&[1, 0, 0, 0, -1]), poly(&[1, 0, -1])).unwrap();
        let z = CyclotomicNumber::zeta_pow(3, 1);
        assert_eq!(h.evaluate_at_root(3).unwrap(), -&z);
    }

    #[test]
    fn evaluation_at_one() {
        assert_eq!(a_d(3).unwrap().evaluate_at_one().unwrap(), rat(4, 3));
        assert_eq!(RationalFunction::x_pow(2).evaluate_at_one().unwrap(), rat(1, 1));
        let f = RationalFunction::new(poly(&[1]), poly(&[1, -1])).unwrap();
        assert!(f.evaluate_at_one().is_err());
    }

    #[test]
    fn canonical_form() {
        // (x^2 - 1)/(x - 1) built two ways
        let a = RationalFunction::new(poly(&[-1, 0, 1]), poly(&[-1, 1])).unwrap();
        let b = &RationalFunction::x() + &RationalFunction::one();
        assert_eq!(a, b);
        let c = &RationalFunction::x_pow(-1) * &RationalFunction::x();
        assert!(c.is_one());
        // (x^3 + 2)/(2x^2 - 2): non-cyclotomic numerator, scaled denominator
        let d = RationalFunction::new(poly(&[2, 0, 0, 1]), poly(&[-2, 0, 2])).unwrap();
        let e = &RationalFunction::new(poly(&[2, 0, 0, 1]), poly(&[-1, 1])).unwrap()
            * &RationalFunction::new(poly(&[1]), poly(&[2, 2])).unwrap();
        assert_eq!(d, e);
    }

    #[test]
    fn non_cyclotomic_denominators() {
        let f = RationalFunction::new(poly(&[1]), poly(&[2, 1])).unwrap(); // 1/(x+2)
        let g = RationalFunction::new(poly(&[1]), poly(&[-3, 1])).unwrap(); // 1/(x-3)
        let s = &f + &g;
        assert_eq!(s, RationalFunction::new(poly(&[-1, 2]), poly(&[-6, -1, 1])).unwrap());
        assert_eq!(&(&s - &g) - &f, RationalFunction::zero());
        assert_eq!(f.evaluate_at_one().unwrap(), rat(1, 3));
    }

    #[test]
    fn valuations() {
        let f = RationalFunction::new(poly(&[1, 1]).pow(2), poly(&[1, 0, 0, 1])).unwrap();
        // (1+x)^2 / ((1+x)(1-x+x^2)) = (1+x)/Phi_6
        assert_eq!(f.cyclotomic_valuation(2), 1);
        assert_eq!(f.cyclotomic_valuation(6), -1);
        assert_eq!(f.pole_order(6), 1);
    }

    #[test]
    fn compose_power_of_a_d() {
        let f = a_d(1).unwrap().compose_power(2);
        assert_eq!(f, RationalFunction::from_poly(poly(&[1, 0, 1])));
    }
}
