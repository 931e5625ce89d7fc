//! Torus-fixed-point sums on the Hilbert scheme of points and on the nested
//! Hilbert scheme.
//!
//! Every summand is a fiber character divided by `prod (1 - w)` over the
//! cotangent weights `w` at the fixed point. Fixed points of `Hil^n` are
//! partitions of `n`; fixed points of `Hil^{n,n-1}` are [`NestedPair`]s.
//! Arms and legs are taken in `mu` unless a function says otherwise.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::partitions::{enumerate_partitions, nested_pairs, Cell, NestedPair, Partition};
use crate::qtalgebra::{BinomialProduct, LaurentPoly, Monomial, QTFraction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizationError {
    #[error("the fixed-point sum for n={n}, m={m} does not reduce to a polynomial: {residual}")]
    NotPolynomial { n: usize, m: usize, residual: QTFraction },
    #[error("denominator of {pair} differs between the closed form ({closed}) and the weight classes ({weights})")]
    InconsistentDenominator { pair: String, closed: String, weights: String },
    #[error("a tangent weight at {0} is trivial")]
    TrivialWeight(String),
}

fn arm_leg(mu: &Partition, c: Cell) -> (i32, i32) {
    let al = mu.armleg(c).expect("cell taken from the diagram");
    (al.arm as i32, al.leg as i32)
}

/// `sum t^h q^k` over the cells of `mu`.
pub fn b_mu(mu: &Partition) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for c in mu.cells() {
        p.add_term(c.character(), 1.into());
    }
    p
}

/// `prod (1 - t^h q^k)` over the cells other than the origin.
pub fn pi_mu_cells(mu: &Partition) -> BinomialProduct {
    let mut out = BinomialProduct::one();
    for c in mu.cells().filter(|c| (c.h, c.k) != (0, 0)) {
        out.push_monomial(c.character()).expect("non-origin cell");
    }
    out
}

/// `prod (1 - t^(1+l) q^-a)(1 - t^-l q^(1+a))` over the cells of `mu`.
pub fn hilb_cotangent_factors(mu: &Partition) -> BinomialProduct {
    let mut out = BinomialProduct::one();
    for c in mu.cells() {
        let (a, l) = arm_leg(mu, c);
        out.push(1 + l, -a).expect("t-exponent is positive");
        out.push(-l, 1 + a).expect("q-exponent is positive");
    }
    out
}

/// A multiset of torus weights `t^a q^b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    weights: BTreeMap<Monomial, u32>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, w: Monomial) {
        *self.weights.entry(w).or_default() += 1;
    }

    pub fn len(&self) -> usize {
        self.weights.values().map(|&k| k as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn multiplicity(&self, w: Monomial) -> u32 {
        self.weights.get(&w).copied().unwrap_or(0)
    }

    /// Weights with repetition, in monomial order.
    pub fn iter(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.weights
            .iter()
            .flat_map(|(w, k)| std::iter::repeat_n(*w, *k as usize))
    }

    /// The dual multiset.
    pub fn inverse(&self) -> WeightMultiset {
        self.iter().map(Monomial::inverse).collect()
    }
}

impl FromIterator<Monomial> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut out = WeightMultiset::new();
        for w in iter {
            out.push(w);
        }
        out
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.iter().map(|w| w.to_string()).collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

/// Tangent weights at a nested fixed point, split into the eight classes
/// `A1..A8` (index 0 holds `A1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedWeights {
    pub classes: [WeightMultiset; 8],
}

impl NestedWeights {
    pub fn class(&self, i: usize) -> &WeightMultiset {
        &self.classes[i - 1]
    }

    pub fn all(&self) -> WeightMultiset {
        self.classes.iter().flat_map(|c| c.iter()).collect()
    }
}

/// Eigenvalue of `d*` at a cell with arm `a` and leg `l`.
fn d_star(a: i32, l: i32) -> Monomial {
    Monomial::new(-1 - l, a)
}

/// Eigenvalue of `u*` at a cell with arm `a` and leg `l`.
fn u_star(a: i32, l: i32) -> Monomial {
    Monomial::new(l, -1 - a)
}

/// The eight tangent weight classes.
///
/// `A1`/`A2` carry `d*`/`u*` on the corner's row/column (arms and legs in
/// `mu`); `A5`/`A6` carry `u*`/`d*` on the same cells with arms and legs in
/// `nu`; `A3 = {q^-1}`, `A4 = {t^-1}`; `A7`/`A8` carry `d*`/`u*` on every
/// other cell of `mu` except the corner.
pub fn nested_weight_classes(pair: &NestedPair) -> NestedWeights {
    let mu = pair.mu();
    let nu = pair.nu();
    let mut classes: [WeightMultiset; 8] = Default::default();
    for c in pair.row_cells() {
        let (a, l) = arm_leg(mu, c);
        classes[0].push(d_star(a, l));
        let (a, l) = arm_leg(&nu, c);
        classes[4].push(u_star(a, l));
    }
    for c in pair.col_cells() {
        let (a, l) = arm_leg(mu, c);
        classes[1].push(u_star(a, l));
        let (a, l) = arm_leg(&nu, c);
        classes[5].push(d_star(a, l));
    }
    classes[2].push(Monomial::new(0, -1));
    classes[3].push(Monomial::new(-1, 0));
    for c in pair.other_cells() {
        let (a, l) = arm_leg(mu, c);
        classes[6].push(d_star(a, l));
        classes[7].push(u_star(a, l));
    }
    NestedWeights { classes }
}

/// `(1-t)(1-q) P1 P2 P3` built from the product formulas.
pub fn nested_denominator_closed_form(pair: &NestedPair) -> BinomialProduct {
    let mu = pair.mu();
    let mut out = BinomialProduct::one();
    out.push(1, 0).expect("nonzero");
    out.push(0, 1).expect("nonzero");
    for c in pair.other_cells() {
        let (a, l) = arm_leg(mu, c);
        out.push(1 + l, -a).expect("nonzero");
        out.push(-l, 1 + a).expect("nonzero");
    }
    for c in pair.row_cells() {
        let (a, l) = arm_leg(mu, c);
        out.push(1 + l, -a).expect("nonzero");
        out.push(-l, a).expect("row cells have a positive arm");
    }
    for c in pair.col_cells() {
        let (a, l) = arm_leg(mu, c);
        out.push(-l, 1 + a).expect("nonzero");
        out.push(l, -a).expect("column cells have a positive leg");
    }
    out
}

/// `prod (1 - w^-1)` over the tangent weights.
pub fn nested_denominator_from_weights(pair: &NestedPair) -> Result<BinomialProduct, LocalizationError> {
    let mut out = BinomialProduct::one();
    for w in nested_weight_classes(pair).all().iter() {
        out.push_monomial(w.inverse())
            .map_err(|_| LocalizationError::TrivialWeight(pair.to_string()))?;
    }
    Ok(out)
}

/// The cotangent product at a nested fixed point, cross-checked between the
/// closed form and the weight classes.
pub fn nested_denominator(pair: &NestedPair) -> Result<BinomialProduct, LocalizationError> {
    let closed = nested_denominator_closed_form(pair);
    let weights = nested_denominator_from_weights(pair)?;
    if closed != weights {
        return Err(LocalizationError::InconsistentDenominator {
            pair: pair.to_string(),
            closed: render_product(&closed),
            weights: render_product(&weights),
        });
    }
    Ok(closed)
}

fn render_product(p: &BinomialProduct) -> String {
    let sign = if p.sign < 0 { "-" } else { "" };
    let factors: Vec<String> = p.factor_list().iter().map(|f| f.to_string()).collect();
    format!("{sign}{}*{}", p.unit, factors.join("*"))
}

/// Character of the fiber at `I_mu`:
/// `t^(m n(mu)) q^(m n(mu')) B_mu (1-t)(1-q) prod_{cells != origin} (1 - t^h q^k)`.
pub fn fiber_series(mu: &Partition, m: usize) -> LaurentPoly {
    let shift = Monomial::new((m * mu.n_stat()) as i32, (m * mu.conjugate().n_stat()) as i32);
    let mut p = b_mu(mu).mul_monomial(shift);
    p = p.mul_one_minus(Monomial::new(1, 0)).mul_one_minus(Monomial::new(0, 1));
    for f in pi_mu_cells(mu).factor_list() {
        p = p.mul_one_minus(f.monomial());
    }
    p
}

/// One summand per partition of `n`, in partition order.
pub fn catalan_terms(n: usize, m: usize) -> Vec<QTFraction> {
    enumerate_partitions(n)
        .par_iter()
        .map(|mu| QTFraction::over(fiber_series(mu, m), &hilb_cotangent_factors(mu)))
        .collect()
}

/// `C_n^(m)(q,t)`; a non-polynomial result is reported as an error.
pub fn catalan_loc(n: usize, m: usize) -> Result<LaurentPoly, LocalizationError> {
    QTFraction::sum(&catalan_terms(n, m))
        .to_polynomial()
        .map_err(|e| LocalizationError::NotPolynomial { n, m, residual: e.residual })
}

/// One summand per nested pair of size `n`, in pair order.
pub fn nested_terms(n: usize, m: usize) -> Result<Vec<QTFraction>, LocalizationError> {
    nested_pairs(n)
        .par_iter()
        .map(|pair| Ok(QTFraction::over(fiber_series(pair.mu(), m), &nested_denominator(pair)?)))
        .collect()
}

/// Result of the nested fixed-point sum. A residual fraction is a legitimate
/// outcome: polynomiality here is only conjectured.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NestedOutcome {
    Polynomial(LaurentPoly),
    NotPolynomial(QTFraction),
}

impl NestedOutcome {
    pub fn polynomial(&self) -> Option<&LaurentPoly> {
        match self {
            NestedOutcome::Polynomial(p) => Some(p),
            NestedOutcome::NotPolynomial(_) => None,
        }
    }
}

/// `N_n^(m)(q,t)`.
pub fn nested_loc(n: usize, m: usize) -> Result<NestedOutcome, LocalizationError> {
    let total = QTFraction::sum(&nested_terms(n, m)?);
    Ok(match total.to_polynomial() {
        Ok(p) => NestedOutcome::Polynomial(p),
        Err(e) => NestedOutcome::NotPolynomial(e.residual),
    })
}
