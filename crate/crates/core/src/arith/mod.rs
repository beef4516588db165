//! Exact scalars: rationals, polynomials, rational functions in `x`,
//! cyclotomic numbers, Laurent polynomials in `v`, and dense matrices over
//! any of the fields.

mod cyclotomic;
mod laurent;
mod linalg;
mod poly;
mod ratfunc;

pub use cyclotomic::{cyclotomic_coeffs, cyclotomic_poly, totient, CyclotomicNumber};
pub use laurent::LaurentPolynomial;
pub use linalg::{EchelonBasis, Field, Matrix, Ring};
pub use poly::Poly;
pub use ratfunc::{a_d, clear_denominators, RationalFunction};

pub type Rational = num_rational::BigRational;

/// `n / d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Formats a rational as `"p/q"`, or `"p"` for integers.
pub fn rational_string(r: &Rational) -> alloc::string::String {
    if r.is_integer() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}
