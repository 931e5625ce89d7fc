//! Macdonald-Pieri coefficients and their relation to the cotangent
//! products at fixed points.
//!
//! With `Pi_mu` the cotangent product at `I_mu` and `Pi_{mu,nu}` the one at
//! the nested point, `c = Pi_mu / Pi_{mu,nu}` holds identically. The
//! companion formula for `d` is known only up to a unit and the placement of
//! `(1-t)(1-q)`, so [`calibrate_d_identity`] tries a small family of
//! normalizations and reports which of them hold.

use std::fmt;

use crate::localization::{hilb_cotangent_factors, nested_denominator, LocalizationError};
use crate::partitions::{nested_pairs, NestedPair};
use crate::qtalgebra::{BinomialProduct, LaurentPoly, Monomial, QTFraction};

fn tq(t: i32, q: i32) -> Monomial {
    Monomial::new(t, q)
}

fn push_diff(p: &mut BinomialProduct, m1: Monomial, m2: Monomial) {
    p.push_difference(m1, m2).expect("monomials differ");
}

fn arm_leg(pair: &NestedPair, c: crate::partitions::Cell) -> (i32, i32) {
    let al = pair.mu().armleg(c).expect("cell of mu");
    (al.arm as i32, al.leg as i32)
}

/// Coefficient of `H_nu` in the `p1`-derivative of `H_mu`.
pub fn c_pieri(pair: &NestedPair) -> QTFraction {
    let mut num = BinomialProduct::one();
    let mut den = BinomialProduct::one();
    for c in pair.row_cells() {
        let (a, l) = arm_leg(pair, c);
        push_diff(&mut num, tq(l, 0), tq(0, a + 1));
        push_diff(&mut den, tq(l, 0), tq(0, a));
    }
    for c in pair.col_cells() {
        let (a, l) = arm_leg(pair, c);
        push_diff(&mut num, tq(0, a), tq(l + 1, 0));
        push_diff(&mut den, tq(0, a), tq(l, 0));
    }
    QTFraction::ratio(&num, &den).reduce()
}

/// Coefficient of `H_mu` in `e1 * H_nu`.
pub fn d_pieri(pair: &NestedPair) -> QTFraction {
    let mut num = BinomialProduct::one();
    let mut den = BinomialProduct::one();
    for c in pair.row_cells() {
        let (a, l) = arm_leg(pair, c);
        push_diff(&mut num, tq(0, a - 1), tq(l + 1, 0));
        push_diff(&mut den, tq(0, a), tq(l + 1, 0));
    }
    for c in pair.col_cells() {
        let (a, l) = arm_leg(pair, c);
        push_diff(&mut num, tq(l - 1, 0), tq(0, a + 1));
        push_diff(&mut den, tq(l, 0), tq(0, a + 1));
    }
    QTFraction::ratio(&num, &den).reduce()
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub pair: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

/// `c_pieri == Pi_mu / Pi_{mu,nu}` for every nested pair of size `n`.
pub fn verify_c_identity(n: usize) -> Result<Vec<PairCheck>, LocalizationError> {
    nested_pairs(n)
        .iter()
        .map(|pair| {
            let lhs = c_pieri(pair);
            let rhs = QTFraction::ratio(&hilb_cotangent_factors(pair.mu()), &nested_denominator(pair)?).reduce();
            Ok(PairCheck {
                pair: pair.to_string(),
                holds: lhs.value_eq(&rhs),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        })
        .collect()
}

/// Sign of the exponents in the unit `t^(s l') q^(s a')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnitSign {
    Plus,
    Minus,
    Absent,
}

/// Where `(1-t)(1-q)` is placed relative to `Pi_nu / Pi_{mu,nu}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorPlacement {
    Denominator,
    Numerator,
    Absent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DVariant {
    pub unit: UnitSign,
    pub placement: FactorPlacement,
}

impl DVariant {
    /// The normalization as printed: `t^l' q^a' Pi_nu / ((1-t)(1-q) Pi_{mu,nu})`.
    pub const PRINTED: DVariant = DVariant { unit: UnitSign::Plus, placement: FactorPlacement::Denominator };

    pub fn all() -> Vec<DVariant> {
        let mut out = Vec::new();
        for unit in [UnitSign::Plus, UnitSign::Minus, UnitSign::Absent] {
            for placement in [FactorPlacement::Denominator, FactorPlacement::Numerator, FactorPlacement::Absent] {
                out.push(DVariant { unit, placement });
            }
        }
        out
    }

    /// Right-hand side of the candidate identity at `pair`.
    pub fn evaluate(self, pair: &NestedPair) -> Result<QTFraction, LocalizationError> {
        let corner = pair.corner();
        let (lp, ap) = (corner.h as i32, corner.k as i32);
        let unit = match self.unit {
            UnitSign::Plus => tq(lp, ap),
            UnitSign::Minus => tq(-lp, -ap),
            UnitSign::Absent => Monomial::ONE,
        };
        let mut num = hilb_cotangent_factors(&pair.nu());
        num.unit = num.unit * unit;
        let mut den = nested_denominator(pair)?;
        let target = match self.placement {
            FactorPlacement::Denominator => Some(&mut den),
            FactorPlacement::Numerator => Some(&mut num),
            FactorPlacement::Absent => None,
        };
        if let Some(p) = target {
            p.push(1, 0).expect("nonzero");
            p.push(0, 1).expect("nonzero");
        }
        Ok(QTFraction::ratio(&num, &den).reduce())
    }
}

impl fmt::Display for DVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = match self.unit {
            UnitSign::Plus => "t^l' q^a'",
            UnitSign::Minus => "t^-l' q^-a'",
            UnitSign::Absent => "1",
        };
        match self.placement {
            FactorPlacement::Denominator => write!(f, "{unit} * Pi_nu / ((1-t)(1-q) Pi_mu,nu)"),
            FactorPlacement::Numerator => write!(f, "{unit} * (1-t)(1-q) Pi_nu / Pi_mu,nu"),
            FactorPlacement::Absent => write!(f, "{unit} * Pi_nu / Pi_mu,nu"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantResult {
    pub variant: DVariant,
    /// Pairs checked and pairs where the variant equals `d_pieri`.
    pub checked: usize,
    pub matched: usize,
    /// First pair, in enumeration order, where the variant fails.
    pub first_failure: Option<PairCheck>,
}

impl VariantResult {
    pub fn holds(&self) -> bool {
        self.matched == self.checked
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCalibrationReport {
    pub n_max: usize,
    /// The printed normalization evaluated at the single-cell pair.
    pub printed_at_single_cell: String,
    pub variants: Vec<VariantResult>,
}

impl DCalibrationReport {
    pub fn matching(&self) -> Vec<DVariant> {
        self.variants.iter().filter(|v| v.holds()).map(|v| v.variant).collect()
    }

    pub fn printed(&self) -> &VariantResult {
        self.variants
            .iter()
            .find(|v| v.variant == DVariant::PRINTED)
            .expect("printed variant is part of the family")
    }
}

impl fmt::Display for DCalibrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "d-coefficient calibration over nested pairs of size 1..={}", self.n_max)?;
        writeln!(f, "printed form at mu=(1): {} (d = 1)", self.printed_at_single_cell)?;
        for v in &self.variants {
            let verdict = if v.holds() { "MATCH" } else { "mismatch" };
            write!(f, "{verdict:8} {}/{}  {}", v.matched, v.checked, v.variant)?;
            if let Some(fail) = &v.first_failure {
                write!(f, "  [first failure {}: {} vs {}]", fail.pair, fail.rhs, fail.lhs)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Compares every normalization in [`DVariant::all`] against `d_pieri` on all
/// nested pairs of size at most `n_max`.
pub fn calibrate_d_identity(n_max: usize) -> Result<DCalibrationReport, LocalizationError> {
    let pairs: Vec<NestedPair> = (1..=n_max).flat_map(nested_pairs).collect();
    let targets: Vec<QTFraction> = pairs.iter().map(d_pieri).collect();
    let mut variants = Vec::new();
    for variant in DVariant::all() {
        let mut matched = 0;
        let mut first_failure = None;
        for (pair, lhs) in pairs.iter().zip(&targets) {
            let rhs = variant.evaluate(pair)?;
            if lhs.value_eq(&rhs) {
                matched += 1;
            } else if first_failure.is_none() {
                first_failure = Some(PairCheck {
                    pair: pair.to_string(),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                    holds: false,
                });
            }
        }
        variants.push(VariantResult { variant, checked: pairs.len(), matched, first_failure });
    }
    let single = NestedPair::new(
        crate::partitions::Partition::new(vec![1]).expect("valid"),
        crate::partitions::Cell::new(0, 0),
    )
    .expect("corner");
    let printed_at_single_cell = DVariant::PRINTED.evaluate(&single)?.to_string();
    Ok(DCalibrationReport { n_max, printed_at_single_cell, variants })
}

/// `c` or `d` evaluated as a polynomial, when it is one.
pub fn as_polynomial(x: &QTFraction) -> Option<LaurentPoly> {
    x.to_polynomial().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{Cell, Partition};

    fn pair(v: &[usize], h: usize, k: usize) -> NestedPair {
        NestedPair::new(Partition::new(v.to_vec()).unwrap(), Cell::new(h, k)).unwrap()
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn c_examples() {
        assert_eq!(as_polynomial(&c_pieri(&pair(&[1], 0, 0))), Some(LaurentPoly::one()));
        assert_eq!(as_polynomial(&c_pieri(&pair(&[2], 0, 1))), Some(poly("1 + q")));
        assert_eq!(as_polynomial(&c_pieri(&pair(&[1, 1], 1, 0))), Some(poly("1 + t")));
    }

    #[test]
    fn d_examples() {
        assert_eq!(as_polynomial(&d_pieri(&pair(&[1], 0, 0))), Some(LaurentPoly::one()));
        let mut den = BinomialProduct::one();
        den.push_difference(Monomial::new(0, 1), Monomial::new(1, 0)).unwrap();
        let expected = QTFraction::over(poly("1 - t"), &den);
        assert!(d_pieri(&pair(&[2], 0, 1)).value_eq(&expected));
        assert!(d_pieri(&pair(&[1, 1], 1, 0)).value_eq(&expected.swap_qt()));
    }

    #[test]
    fn c_identity_small() {
        for n in 1..=4 {
            for check in verify_c_identity(n).unwrap() {
                assert!(check.holds, "{check:?}");
            }
        }
    }

    #[test]
    fn printed_d_form_fails_at_single_cell() {
        let single = pair(&[1], 0, 0);
        let printed = DVariant::PRINTED.evaluate(&single).unwrap();
        assert!(!printed.value_eq(&QTFraction::one()));
    }
}
