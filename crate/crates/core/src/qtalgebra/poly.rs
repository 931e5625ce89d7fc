//! Laurent polynomials in `t` and `q` over arbitrary-precision integers.
//!
//! Terms are stored in a `BTreeMap` keyed by [`Monomial`], whose derived
//! ordering is lexicographic on `(e_t, e_q)`. Division routines rely on that
//! ordering; display uses a separate canonical order (ascending total degree,
//! then ascending `q`-exponent).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// The monomial `t^t q^q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub t: i32,
    pub q: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { t: 0, q: 0 };

    pub const fn new(t: i32, q: i32) -> Self {
        Monomial { t, q }
    }

    pub fn inverse(self) -> Self {
        Monomial::new(-self.t, -self.q)
    }

    pub fn is_one(self) -> bool {
        self == Monomial::ONE
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_qt(self) -> Self {
        Monomial::new(self.q, self.t)
    }

    pub fn total_degree(self) -> i64 {
        self.t as i64 + self.q as i64
    }

    /// Ordering used for display and serialization.
    pub fn display_cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.q.cmp(&other.q))
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.t + rhs.t, self.q + rhs.q)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut parts = Vec::with_capacity(2);
        for (name, e) in [("q", self.q), ("t", self.t)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        f.write_str(&parts.join("*"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("zero base raised to negative power in term {0}")]
    ZeroToNegativePower(Monomial),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty polynomial text")]
    Empty,
    #[error("malformed term {0:?}")]
    BadTerm(String),
}

/// A finitely supported map from exponent pairs to nonzero integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(Monomial::ONE, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(Monomial::ONE, c.into())
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(Monomial::new(1, 0), 1)
    }

    pub fn q() -> Self {
        LaurentPoly::monomial(Monomial::new(0, 1), 1)
    }

    /// The binomial `1 - m`.
    pub fn one_minus(m: Monomial) -> Self {
        let mut p = LaurentPoly::one();
        p.add_term(m, -BigInt::one());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical display order.
    pub fn canonical_terms(&self) -> Vec<(Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c)).collect();
        v.sort_by(|a, b| a.0.display_cmp(&b.0));
        v
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn sub_term_ref(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(-c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() -= c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k * m, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Exchanges `q` and `t` in every term.
    pub fn swap_qt(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k.swap_qt(), c.clone())).collect(),
        }
    }

    /// `self * (1 - m)`.
    pub fn mul_one_minus(&self, m: Monomial) -> Self {
        let mut out = self.clone();
        for (k, c) in &self.terms {
            out.sub_term_ref(*k * m, c);
        }
        out
    }

    /// Exact quotient `self / (1 - m)`, or `None` when `1 - m` does not divide.
    ///
    /// Along every line `x + j*m` the quotient coefficients are running sums
    /// of the dividend's, so divisibility means each line sums to zero.
    pub fn div_one_minus(&self, m: Monomial) -> Option<Self> {
        assert!(!m.is_one(), "division by 1 - 1");
        if m < Monomial::ONE {
            // 1 - m = -m (1 - m^-1)
            let r = self.div_one_minus(m.inverse())?;
            return Some(-r.mul_monomial(m.inverse()));
        }
        let Some((_, t_max, _, q_max)) = self.exponent_box() else {
            return Some(LaurentPoly::zero());
        };
        let mut carry: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        let mut quotient = LaurentPoly::zero();
        let mut src = self.terms.iter().peekable();
        loop {
            let next_src = src.peek().map(|(k, _)| **k);
            let key = match (next_src, carry.keys().next().copied()) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            let mut val = carry.remove(&key).unwrap_or_default();
            if next_src == Some(key) {
                val += src.next().unwrap().1;
            }
            if val.is_zero() {
                continue;
            }
            if key.t > t_max || (m.t == 0 && key.q > q_max) {
                // the line has left the support, so this running sum never cancels
                return None;
            }
            *carry.entry(key * m).or_default() += &val;
            quotient.terms.insert(key, val);
        }
        Some(quotient)
    }

    /// Exponent box `(t_min, t_max, q_min, q_max)`, `None` for the zero polynomial.
    pub fn exponent_box(&self) -> Option<(i32, i32, i32, i32)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut b = (first.t, first.t, first.q, first.q);
        for m in it {
            b.0 = b.0.min(m.t);
            b.1 = b.1.max(m.t);
            b.2 = b.2.min(m.q);
            b.3 = b.3.max(m.q);
        }
        Some(b)
    }

    /// Exact division `self / den`, or `None` when `den` does not divide `self`.
    ///
    /// Division runs with `t` as the outer variable: the lexicographically
    /// largest term of the remainder is cancelled against the leading term of
    /// `den` at each step. Quotient terms are confined to the box permitted by
    /// the per-variable degree ranges, which guarantees termination.
    ///
    /// Panics if `den` is zero.
    pub fn exact_div(&self, den: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!den.is_zero(), "exact_div by zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (nt0, nt1, nq0, nq1) = self.exponent_box().unwrap();
        let (dt0, dt1, dq0, dq1) = den.exponent_box().unwrap();
        let (lo_t, hi_t, lo_q, hi_q) = (nt0 - dt0, nt1 - dt1, nq0 - dq0, nq1 - dq1);
        if lo_t > hi_t || lo_q > hi_q {
            return None;
        }
        let (&lead_m, lead_c) = den.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero();
        while let Some((&m, c)) = rem.terms.iter().next_back() {
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return None;
            }
            let e = Monomial::new(m.t - lead_m.t, m.q - lead_m.q);
            if e.t < lo_t || e.t > hi_t || e.q < lo_q || e.q > hi_q {
                return None;
            }
            for (dm, dc) in &den.terms {
                rem.sub_term_ref(*dm * e, &(dc * &qc));
            }
            quotient.terms.insert(e, qc);
        }
        Some(quotient)
    }

    /// Evaluates at `q = q0`, `t = t0`.
    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational, EvalError> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            if (t0.is_zero() && m.t < 0) || (q0.is_zero() && m.q < 0) {
                return Err(EvalError::ZeroToNegativePower(*m));
            }
            acc += BigRational::from_integer(c.clone()) * t0.pow(m.t) * q0.pow(m.q);
        }
        Ok(acc)
    }

    /// Sum of all coefficients, i.e. the value at `q = t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn is_qt_symmetric(&self) -> bool {
        *self == self.swap_qt()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.canonical_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;

    /// Parses sums of terms like `2*q^3*t^-1`; accepts the display format.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut out = LaurentPoly::zero();
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut i = 0;
        // Split on +/- that are not part of an exponent.
        let mut pieces = Vec::new();
        while i < bytes.len() {
            let ch = bytes[i] as char;
            if (ch == '+' || ch == '-') && i > start && bytes[i - 1] != b'^' {
                pieces.push(&compact[start..i]);
                start = i;
            }
            i += 1;
        }
        pieces.push(&compact[start..]);
        for piece in pieces {
            let (neg, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(ParseError::BadTerm(piece.to_string()));
            }
            let mut coeff = BigInt::one();
            let mut mono = Monomial::ONE;
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => {
                        let e: i32 = e.parse().map_err(|_| ParseError::BadTerm(piece.to_string()))?;
                        (b, e)
                    }
                    None => (factor, 1),
                };
                match base {
                    "q" => mono.q += exp,
                    "t" => mono.t += exp,
                    _ => {
                        if factor.contains('^') {
                            return Err(ParseError::BadTerm(piece.to_string()));
                        }
                        let c: BigInt =
                            base.parse().map_err(|_| ParseError::BadTerm(piece.to_string()))?;
                        coeff *= c;
                    }
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term_ref(*m, c);
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
        } else {
            *self += &rhs;
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.sub_term_ref(*m, c);
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (small, big) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = LaurentPoly::zero();
        for (ms, cs) in &small.terms {
            for (mb, cb) in &big.terms {
                out.add_term(*ms * *mb, cs * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}
