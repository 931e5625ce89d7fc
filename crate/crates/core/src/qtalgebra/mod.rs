//! Exact arithmetic for Laurent polynomials in `q, t` and for fractions over
//! products of binomials `1 - t^a q^b`.

mod fraction;
mod poly;

pub use fraction::{
    canonicalize_factor, rational, BinomialFactor, BinomialProduct, NotPolynomial, QTFraction,
    ZeroFactor,
};
pub use poly::{EvalError, LaurentPoly, Monomial, ParseError};
