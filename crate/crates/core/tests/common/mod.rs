//! Oracles and generators shared by the integration tests. Everything here is
//! computed independently of the library's own enumeration code.

#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use qtcat_core::qtalgebra::{BinomialProduct, LaurentPoly, Monomial, QTFraction};

/// Seed for every randomized suite; fixed so failures reproduce exactly.
pub const PROPERTY_SEED: u64 = 0x0051_7CA7_2026;
/// Minimum number of cases per randomized property.
pub const PROPERTY_CASES: u32 = 1000;
/// Random evaluation points per value-preservation case.
pub const EVAL_POINTS: usize = 20;

pub fn property_config() -> Config {
    Config {
        cases: PROPERTY_CASES,
        rng_seed: RngSeed::Fixed(PROPERTY_SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

/// Catalan numbers from the convolution recurrence.
pub fn catalan(n: usize) -> BigInt {
    let mut c = vec![BigInt::from(1)];
    for k in 1..=n {
        let next = (0..k).map(|i| &c[i] * &c[k - 1 - i]).sum();
        c.push(next);
    }
    c[n].clone()
}

/// `n / 2 * Catalan(n + 1)`, the conjectured value of the nested series at `q = t = 1`.
pub fn half_n_catalan(n: usize) -> BigRational {
    BigRational::new(BigInt::from(n) * catalan(n + 1), BigInt::from(2))
}

/// Partition counts by dynamic programming over part sizes.
pub fn partition_count(n: usize) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// All partitions of `n` as plain vectors, generated without the library.
pub fn raw_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
        }
        for p in 1..=rest.min(max) {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Pairs `(mu, nu)` with `|mu| = n`, `|nu| = n - 1` and `nu` inside `mu`.
pub fn brute_force_nested_count(n: usize) -> usize {
    let big = raw_partitions(n);
    let small = raw_partitions(n - 1);
    let inside = |nu: &Vec<usize>, mu: &Vec<usize>| {
        nu.len() <= mu.len() && nu.iter().zip(mu).all(|(a, b)| a <= b)
    };
    big.iter()
        .map(|mu| small.iter().filter(|nu| inside(nu, mu)).count())
        .sum()
}

/// Dyck words of size `n` found by filtering all binary words.
pub fn brute_force_dyck_words(n: usize) -> Vec<Vec<bool>> {
    (0u32..1 << (2 * n))
        .map(|bits| (0..2 * n).map(|i| bits >> (2 * n - 1 - i) & 1 == 1).collect::<Vec<bool>>())
        .filter(|w| {
            let mut h = 0i32;
            w.iter().all(|&s| {
                h += if s { -1 } else { 1 };
                h >= 0
            }) && h == 0
        })
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn reference_tables_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../reference-tables")
}

/// Polynomial stored in a reference-table file; `#` lines are comments.
pub fn load_reference(m: usize, k: usize) -> LaurentPoly {
    let path = reference_tables_dir().join(format!("nested-m{m}-k{k}.txt"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let body: String = text.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join(" ");
    body.trim().parse().unwrap_or_else(|e| panic!("{}: {e:?}", path.display()))
}

/// Monomials where two polynomials differ.
pub fn term_differences(a: &LaurentPoly, b: &LaurentPoly) -> usize {
    (a - b).len()
}

pub fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-5i32..=5, -5i32..=5), -9i64..=9), 0..7)
        .prop_map(|v| LaurentPoly::from_terms(v.into_iter().map(|((t, q), c)| (Monomial::new(t, q), c))))
}

pub fn arb_factor() -> impl Strategy<Value = (i32, i32)> {
    (-3i32..=3, -3i32..=3).prop_filter("nonzero binomial", |&f| f != (0, 0))
}

/// A fraction `poly * prod(shared) / prod(den)`; the shared factors give the
/// reduction something to cancel.
pub fn arb_fraction() -> impl Strategy<Value = QTFraction> {
    (
        arb_poly(),
        prop::collection::vec(arb_factor(), 0..4),
        prop::collection::vec((arb_factor(), any::<bool>()), 0..4),
    )
        .prop_map(|(p, extra, den)| {
            let mut d = BinomialProduct::one();
            let mut num = p;
            for &(a, b) in &extra {
                d.push(a, b).unwrap();
            }
            for &((a, b), cancel) in &den {
                d.push(a, b).unwrap();
                if cancel {
                    num = num.mul_one_minus(Monomial::new(a, b));
                }
            }
            QTFraction::over(num, &d)
        })
}

/// Nonzero rationals with small numerators and denominators.
pub fn arb_point() -> impl Strategy<Value = (BigRational, BigRational)> {
    let r = (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=7)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)));
    (r.clone(), r)
}
