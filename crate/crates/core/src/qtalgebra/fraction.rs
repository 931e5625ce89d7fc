//! Fractions whose denominators are products of binomials `1 - t^a q^b`.
//!
//! Denominators stay factored. A factor is stored in canonical orientation
//! (`a > 0`, or `a == 0` and `b > 0`) and the identity
//! `1 - m = -m (1 - m^-1)` moves the difference into a sign and a unit
//! monomial, so the same binomial appearing in both orientations cancels.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use super::poly::{EvalError, LaurentPoly, Monomial};

/// `1 - t^a q^b` in canonical orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinomialFactor {
    a: i32,
    b: i32,
}

impl BinomialFactor {
    /// `None` unless `(a, b)` is already canonical.
    pub fn new(a: i32, b: i32) -> Option<Self> {
        (a > 0 || (a == 0 && b > 0)).then_some(BinomialFactor { a, b })
    }

    pub fn t_exp(self) -> i32 {
        self.a
    }

    pub fn q_exp(self) -> i32 {
        self.b
    }

    pub fn monomial(self) -> Monomial {
        Monomial::new(self.a, self.b)
    }

    pub fn expand(self) -> LaurentPoly {
        LaurentPoly::one_minus(self.monomial())
    }
}

impl fmt::Display for BinomialFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1 - {})", self.monomial())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("the binomial 1 - t^0 q^0 is identically zero")]
pub struct ZeroFactor;

/// Rewrites `1 - t^a q^b` as `sign * unit * factor` with `factor` canonical.
pub fn canonicalize_factor(a: i32, b: i32) -> Result<(i8, Monomial, BinomialFactor), ZeroFactor> {
    if let Some(f) = BinomialFactor::new(a, b) {
        return Ok((1, Monomial::ONE, f));
    }
    if (a, b) == (0, 0) {
        return Err(ZeroFactor);
    }
    let f = BinomialFactor { a: -a, b: -b };
    Ok((-1, Monomial::new(a, b), f))
}

/// `sign * unit * prod (1 - m_i)` with the factors kept as a canonical multiset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinomialProduct {
    pub sign: i8,
    pub unit: Monomial,
    pub factors: BTreeMap<BinomialFactor, u32>,
}

impl Default for BinomialProduct {
    fn default() -> Self {
        BinomialProduct { sign: 1, unit: Monomial::ONE, factors: BTreeMap::new() }
    }
}

impl BinomialProduct {
    pub fn one() -> Self {
        BinomialProduct::default()
    }

    /// Multiplies by `1 - t^a q^b`.
    pub fn push(&mut self, a: i32, b: i32) -> Result<(), ZeroFactor> {
        let (s, u, f) = canonicalize_factor(a, b)?;
        self.sign *= s;
        self.unit = self.unit * u;
        *self.factors.entry(f).or_default() += 1;
        Ok(())
    }

    pub fn push_monomial(&mut self, m: Monomial) -> Result<(), ZeroFactor> {
        self.push(m.t, m.q)
    }

    /// Multiplies by the difference of monomials `m1 - m2 = m1 (1 - m2/m1)`.
    pub fn push_difference(&mut self, m1: Monomial, m2: Monomial) -> Result<(), ZeroFactor> {
        self.unit = self.unit * m1;
        self.push_monomial(m2 * m1.inverse())
    }

    pub fn times(&self, other: &BinomialProduct) -> BinomialProduct {
        let mut out = self.clone();
        out.sign *= other.sign;
        out.unit = out.unit * other.unit;
        for (f, k) in &other.factors {
            *out.factors.entry(*f).or_default() += k;
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn factor_list(&self) -> Vec<BinomialFactor> {
        self.factors
            .iter()
            .flat_map(|(f, k)| std::iter::repeat_n(*f, *k as usize))
            .collect()
    }

    pub fn expand(&self) -> LaurentPoly {
        let mut p = LaurentPoly::monomial(self.unit, self.sign as i64);
        for f in self.factor_list() {
            p = p.mul_one_minus(f.monomial());
        }
        p
    }

    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational, EvalError> {
        let mut acc = LaurentPoly::monomial(self.unit, self.sign as i64).eval(q0, t0)?;
        for f in self.factor_list() {
            acc *= f.expand().eval(q0, t0)?;
        }
        Ok(acc)
    }
}

/// `sign * t^u q^v * numerator / prod(denominator)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QTFraction {
    pub sign: i8,
    pub unit: Monomial,
    pub numerator: LaurentPoly,
    pub denominator: BTreeMap<BinomialFactor, u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a polynomial: {residual}")]
pub struct NotPolynomial {
    pub residual: QTFraction,
}

impl From<LaurentPoly> for QTFraction {
    fn from(p: LaurentPoly) -> Self {
        QTFraction { sign: 1, unit: Monomial::ONE, numerator: p, denominator: BTreeMap::new() }
    }
}

impl QTFraction {
    pub fn zero() -> Self {
        LaurentPoly::zero().into()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    /// `numerator / den`, where `den` carries its own sign and unit.
    pub fn over(numerator: LaurentPoly, den: &BinomialProduct) -> Self {
        QTFraction {
            sign: den.sign,
            unit: den.unit.inverse(),
            numerator,
            denominator: den.factors.clone(),
        }
    }

    /// Quotient of two factored products.
    pub fn ratio(num: &BinomialProduct, den: &BinomialProduct) -> Self {
        let mut f = QTFraction::over(num.factor_list().into_iter().fold(LaurentPoly::one(), |p, b| {
            p.mul_one_minus(b.monomial())
        }), den);
        f.sign *= num.sign;
        f.unit = f.unit * num.unit;
        f
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_empty()
    }

    pub fn denominator_degree(&self) -> u32 {
        self.denominator.values().sum()
    }

    /// Numerator with sign and unit folded in.
    pub fn signed_numerator(&self) -> LaurentPoly {
        let p = self.numerator.mul_monomial(self.unit);
        if self.sign < 0 {
            -p
        } else {
            p
        }
    }

    /// Per-factor maximum of the multiplicities.
    fn common_denominator<'a>(
        dens: impl IntoIterator<Item = &'a BTreeMap<BinomialFactor, u32>>,
    ) -> BTreeMap<BinomialFactor, u32> {
        let mut out: BTreeMap<BinomialFactor, u32> = BTreeMap::new();
        for d in dens {
            for (f, k) in d {
                let e = out.entry(*f).or_default();
                *e = (*e).max(*k);
            }
        }
        out
    }

    fn lift_to(&self, common: &BTreeMap<BinomialFactor, u32>) -> LaurentPoly {
        let mut p = self.signed_numerator();
        for (f, k) in common {
            let have = self.denominator.get(f).copied().unwrap_or(0);
            for _ in have..*k {
                p = p.mul_one_minus(f.monomial());
            }
        }
        p
    }

    /// Sum over the per-factor maximum common denominator.
    pub fn add(&self, other: &QTFraction) -> QTFraction {
        QTFraction::sum(&[self.clone(), other.clone()])
    }

    /// Sum of many fractions in one pass; the lifted numerators are computed
    /// in parallel and combined in a fixed order.
    pub fn sum(items: &[QTFraction]) -> QTFraction {
        let common = QTFraction::common_denominator(items.iter().map(|x| &x.denominator));
        let lifted: Vec<LaurentPoly> = items.par_iter().map(|x| x.lift_to(&common)).collect();
        let numerator = lifted.into_iter().sum();
        QTFraction { sign: 1, unit: Monomial::ONE, numerator, denominator: common }
    }

    pub fn mul(&self, other: &QTFraction) -> QTFraction {
        let mut denominator = self.denominator.clone();
        for (f, k) in &other.denominator {
            *denominator.entry(*f).or_default() += k;
        }
        QTFraction {
            sign: self.sign * other.sign,
            unit: self.unit * other.unit,
            numerator: &self.numerator * &other.numerator,
            denominator,
        }
    }

    /// Cancels every denominator factor that divides the numerator exactly.
    pub fn reduce(&self) -> QTFraction {
        let mut numerator = self.numerator.clone();
        let mut denominator = BTreeMap::new();
        if numerator.is_zero() {
            return QTFraction::zero();
        }
        for (f, k) in &self.denominator {
            let mut left = *k;
            while left > 0 {
                match numerator.div_one_minus(f.monomial()) {
                    Some(r) => {
                        numerator = r;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                denominator.insert(*f, left);
            }
        }
        QTFraction { sign: self.sign, unit: self.unit, numerator, denominator }
    }

    /// Reduces and returns the polynomial value, or the irreducible residual.
    pub fn to_polynomial(&self) -> Result<LaurentPoly, NotPolynomial> {
        let r = self.reduce();
        if r.is_polynomial() {
            Ok(r.signed_numerator())
        } else {
            Err(NotPolynomial { residual: r })
        }
    }

    /// Symbolic equality of the represented rational functions.
    pub fn value_eq(&self, other: &QTFraction) -> bool {
        let common = QTFraction::common_denominator([&self.denominator, &other.denominator]);
        self.lift_to(&common) == other.lift_to(&common)
    }

    /// Value at `q = q0`, `t = t0`; `None` at a pole.
    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> Result<Option<BigRational>, EvalError> {
        let num = self.signed_numerator().eval(q0, t0)?;
        let mut den = BigRational::one();
        for (f, k) in &self.denominator {
            let v = f.expand().eval(q0, t0)?;
            for _ in 0..*k {
                den *= &v;
            }
        }
        if den.is_zero() {
            return Ok(None);
        }
        Ok(Some(num / den))
    }

    pub fn swap_qt(&self) -> QTFraction {
        // A factor (1 - t^a q^b) becomes (1 - t^b q^a), which may need reorienting.
        let mut den = BinomialProduct::one();
        for (f, k) in &self.denominator {
            for _ in 0..*k {
                den.push(f.q_exp(), f.t_exp()).expect("nonzero factor");
            }
        }
        let mut out = QTFraction::over(self.numerator.swap_qt(), &den);
        out.sign *= self.sign;
        out.unit = out.unit * self.unit.swap_qt();
        out
    }
}

impl fmt::Display for QTFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.signed_numerator();
        if self.denominator.is_empty() {
            return write!(f, "{num}");
        }
        write!(f, "({num}) / ")?;
        let mut first = true;
        for (b, k) in &self.denominator {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{b}")?;
            if *k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

/// Exact rational constant, used by the evaluation helpers and tests.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn frac(num: &str, factors: &[(i32, i32)]) -> QTFraction {
        let mut den = BinomialProduct::one();
        for &(a, b) in factors {
            den.push(a, b).unwrap();
        }
        QTFraction::over(p(num), &den)
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize_factor(1, 0), Ok((1, Monomial::ONE, BinomialFactor::new(1, 0).unwrap())));
        assert_eq!(
            canonicalize_factor(-1, 1),
            Ok((-1, Monomial::new(-1, 1), BinomialFactor::new(1, -1).unwrap()))
        );
        assert_eq!(canonicalize_factor(0, 0), Err(ZeroFactor));
        assert_eq!(canonicalize_factor(0, -2).unwrap().2, BinomialFactor::new(0, 2).unwrap());
    }

    #[test]
    fn canonical_round_trip_small_grid() {
        for a in -6..=6 {
            for b in -6..=6 {
                if (a, b) == (0, 0) {
                    continue;
                }
                let (s, u, f) = canonicalize_factor(a, b).unwrap();
                let rebuilt = f.expand().mul_monomial(u).scale(&BigInt::from(s));
                assert_eq!(rebuilt, LaurentPoly::one_minus(Monomial::new(a, b)), "({a},{b})");
            }
        }
    }

    #[test]
    fn add_zero_is_identity() {
        let x = frac("q + 2", &[(0, 1), (1, -1)]);
        assert!(x.add(&QTFraction::zero()).value_eq(&x));
    }

    #[test]
    fn textbook_common_denominator() {
        let x = frac("1", &[(0, 1)]).add(&frac("1", &[(1, 0)]));
        assert_eq!(x.numerator, p("2 - q - t"));
        assert_eq!(x.denominator.len(), 2);
    }

    #[test]
    fn two_term_nested_sum_is_polynomial() {
        // q^2(1+q)/(q-t) + t^2(1+t)/(t-q)
        let mut d1 = BinomialProduct::one();
        d1.push_difference(Monomial::new(0, 1), Monomial::new(1, 0)).unwrap();
        let mut d2 = BinomialProduct::one();
        d2.push_difference(Monomial::new(1, 0), Monomial::new(0, 1)).unwrap();
        let x = QTFraction::over(p("q^2 + q^3"), &d1);
        let y = QTFraction::over(p("t^2 + t^3"), &d2);
        assert_eq!(x.add(&y).to_polynomial().unwrap(), p("q + t + q^2 + q*t + t^2"));
    }

    #[test]
    fn reduce_examples() {
        let x = frac("1 - q^2", &[(0, 1)]);
        assert_eq!(x.reduce().to_polynomial().unwrap(), p("1 + q"));
        let y = frac("1 + q", &[(1, 0)]).reduce();
        assert_eq!(y.reduce(), y);
        assert!(frac("1", &[(0, 1)]).to_polynomial().is_err());
    }

    #[test]
    fn eval_reports_poles() {
        let x = frac("1", &[(1, -1)]);
        assert_eq!(x.eval(&rational(2, 1), &rational(2, 1)).unwrap(), None);
        assert_eq!(x.eval(&rational(2, 1), &rational(1, 1)).unwrap(), Some(rational(2, 1)));
    }

    #[test]
    fn swap_qt_preserves_value_under_swapped_point() {
        let x = frac("q^2 - t", &[(1, -2), (0, 1), (2, 1)]);
        let a = rational(3, 1);
        let b = rational(5, 7);
        assert_eq!(x.eval(&a, &b).unwrap(), x.swap_qt().eval(&b, &a).unwrap());
    }
}
