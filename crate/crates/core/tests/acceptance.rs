//! Acceptance suite. Prints one verdict line per criterion and exits nonzero
//! if any hard criterion fails. Reported criteria print their verdict but
//! never affect the exit status.

mod common;

use std::process::ExitCode;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::TestRunner;

use common::*;
use qtcat_core::dyck::{comb_catalan, comb_nested};
use qtcat_core::localization::{catalan_loc, nested_loc, nested_terms, NestedOutcome};
use qtcat_core::oracle::{catalan_by_interpolation, nested_by_interpolation};
use qtcat_core::partitions::{cell_count_series, nested_pairs};
use qtcat_core::pieri::{calibrate_d_identity, verify_c_identity, DVariant};
use qtcat_core::qtalgebra::{LaurentPoly, QTFraction};

/// Printed table entries `(k, m)`.
const TABLE_ENTRIES: [(usize, usize); 9] =
    [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (3, 3), (4, 3)];
/// Terms allowed to differ between a table entry and the computed series.
const TABLE_TERM_TOLERANCE: usize = 0;
const CATALAN_MATCH_N_MAX: usize = 8;
const CATALAN_SPECIALIZATION_N_MAX: usize = 12;
const CONJECTURE_N_MAX: usize = 6;
const CONJECTURE_M_MAX: usize = 3;
const PATH_MODEL_N: [usize; 3] = [2, 3, 4];
const PIERI_C_N_MAX: usize = 7;
const PIERI_D_N_MAX: usize = 6;
const CELL_COUNT_K_MAX: usize = 10;
const ORACLE_N_MAX: usize = 5;
const ORACLE_M_MAX: usize = 2;

enum Kind {
    Hard,
    Reported,
}

struct Ledger {
    hard_failures: usize,
}

impl Ledger {
    fn record(&mut self, id: u32, kind: Kind, ok: bool, summary: &str) {
        let verdict = if ok { "PASS" } else { "FAIL" };
        let tag = match kind {
            Kind::Hard => "hard",
            Kind::Reported => "reported",
        };
        println!("[{verdict}] criterion {id:>2} ({tag}): {summary}");
        if !ok && matches!(kind, Kind::Hard) {
            self.hard_failures += 1;
        }
    }
}

fn info(line: &str) {
    println!("       {line}");
}

fn nested_poly(n: usize, m: usize) -> Option<LaurentPoly> {
    match nested_loc(n, m) {
        Ok(NestedOutcome::Polynomial(p)) => Some(p),
        _ => None,
    }
}

/// Size of the fixed-point sum that reproduces table entry `(k, m)`.
fn table_size(k: usize, m: usize) -> usize {
    if m == 1 {
        k + 1
    } else {
        k
    }
}

fn table_reproduction(ledger: &mut Ledger) {
    let mut matched = 0;
    for (k, m) in TABLE_ENTRIES {
        let n = table_size(k, m);
        let reference = load_reference(m, k);
        let diff = nested_poly(n, m).map(|p| term_differences(&p, &reference));
        // the tolerance is zero today; keep the comparison general
        #[allow(clippy::absurd_extreme_comparisons)]
        let ok = diff.is_some_and(|d| d <= TABLE_TERM_TOLERANCE);
        matched += ok as usize;
        info(&format!(
            "N^({m})_{k} vs series(n={n}, m={m}): {} reference terms, {} differing",
            reference.len(),
            diff.map_or("no polynomial".to_string(), |d| d.to_string())
        ));
    }
    ledger.record(
        1,
        Kind::Hard,
        matched == TABLE_ENTRIES.len(),
        &format!("table reproduction, {matched}/{} entries exact (n = k+1 for m = 1, n = k for m >= 2)", TABLE_ENTRIES.len()),
    );
    // The uniform shift n = k+1 only lines up with the m = 1 rows.
    let uniform: Vec<String> = TABLE_ENTRIES
        .iter()
        .filter(|&&(_, m)| m >= 2)
        .map(|&(k, m)| {
            let same = nested_poly(k + 1, m) == Some(load_reference(m, k));
            format!("N^({m})_{k}:{}", if same { "match" } else { "mismatch" })
        })
        .collect();
    info(&format!("uniform shift n = k+1 for m >= 2: {}", uniform.join(", ")));
}

fn theorem_cross_check(ledger: &mut Ledger) {
    let bad: Vec<usize> = (1..=CATALAN_MATCH_N_MAX)
        .filter(|&n| catalan_loc(n, 1).ok() != Some(comb_catalan(n)))
        .collect();
    ledger.record(
        2,
        Kind::Hard,
        bad.is_empty(),
        &format!("fixed-point sum equals area/bounce series for n <= {CATALAN_MATCH_N_MAX}; failures {bad:?}"),
    );
}

fn catalan_specialization(ledger: &mut Ledger) {
    let bad: Vec<usize> = (1..=CATALAN_SPECIALIZATION_N_MAX)
        .filter(|&n| comb_catalan(n).eval_at_one() != catalan(n))
        .collect();
    ledger.record(
        3,
        Kind::Hard,
        bad.is_empty(),
        &format!("series at q=t=1 gives Catalan(n) for n <= {CATALAN_SPECIALIZATION_N_MAX}; failures {bad:?}"),
    );
}

fn worked_example(ledger: &mut Ledger) {
    let expected: LaurentPoly = "q^2 + q + q*t + t + t^2".parse().unwrap();
    let comb = comb_nested(2);
    let loc = nested_poly(2, 1);
    let ok = comb == expected && loc.as_ref() == Some(&expected);
    ledger.record(4, Kind::Hard, ok, &format!("path model n=2 gives {comb}; fixed-point sum gives {}", loc.map_or("-".into(), |p| p.to_string())));
}

fn conjectures(ledger: &mut Ledger) {
    let mut not_poly = Vec::new();
    let mut negative = Vec::new();
    let mut asymmetric = Vec::new();
    for n in 1..=CONJECTURE_N_MAX {
        for m in 1..=CONJECTURE_M_MAX {
            match nested_poly(n, m) {
                None => not_poly.push((n, m)),
                Some(p) => {
                    if !p.has_nonnegative_coefficients() {
                        negative.push((n, m));
                    }
                    if !p.is_qt_symmetric() {
                        asymmetric.push((n, m));
                    }
                }
            }
        }
    }
    info(&format!(
        "polynomial/nonnegative/symmetric for n <= {CONJECTURE_N_MAX}, m <= {CONJECTURE_M_MAX}: exceptions {not_poly:?} {negative:?} {asymmetric:?}"
    ));
    let model: Vec<(usize, bool)> =
        PATH_MODEL_N.iter().map(|&n| (n, nested_poly(n, 1) == Some(comb_nested(n)))).collect();
    info(&format!("path model equals fixed-point sum: {model:?}"));
    let mut special_ok = true;
    for n in 1..=CONJECTURE_N_MAX {
        let got = nested_poly(n, 1).map(|p| BigRational::from_integer(p.eval_at_one()));
        let want = half_n_catalan(n);
        // the displayed closed form n/(2(n+1)) * binom(2(n+1), n+1)
        let printed = BigRational::new(
            BigInt::from(n) * BigInt::from(binomial(2 * (n + 1), n + 1)),
            BigInt::from(2 * (n + 1)),
        );
        special_ok &= got.as_ref() == Some(&want);
        info(&format!(
            "n={n}: value at (1,1) {} ; n/2*Catalan(n+1) = {want} ; n/(2(n+1))*binom(2n+2,n+1) = {printed}",
            got.map_or("-".into(), |v| v.to_string())
        ));
    }
    let ok = not_poly.is_empty()
        && negative.is_empty()
        && asymmetric.is_empty()
        && model.iter().all(|x| x.1)
        && special_ok;
    ledger.record(5, Kind::Reported, ok, "nested conjectures: polynomiality, positivity, symmetry, path model, value at (1,1)");
}

fn pieri_c(ledger: &mut Ledger) {
    let mut total = 0;
    let mut failed = Vec::new();
    for n in 1..=PIERI_C_N_MAX {
        for check in verify_c_identity(n).expect("denominators consistent") {
            total += 1;
            if !check.holds {
                failed.push(check.pair);
            }
        }
    }
    ledger.record(
        6,
        Kind::Hard,
        failed.is_empty(),
        &format!("c = Pi_mu / Pi_mu,nu on {total} pairs with n <= {PIERI_C_N_MAX}; failures {failed:?}"),
    );
}

fn pieri_d(ledger: &mut Ledger) {
    let first = calibrate_d_identity(PIERI_D_N_MAX).expect("denominators consistent");
    let second = calibrate_d_identity(PIERI_D_N_MAX).expect("denominators consistent");
    for line in first.to_string().lines() {
        info(line);
    }
    let deterministic = first == second && first.to_string() == second.to_string();
    let printed_fails = !first.printed().holds();
    let matching: Vec<String> = first.matching().iter().map(|v| v.to_string()).collect();
    ledger.record(
        7,
        Kind::Reported,
        deterministic && printed_fails,
        &format!(
            "d calibration for n <= {PIERI_D_N_MAX}: deterministic={deterministic}, printed form fails at mu=(1)={printed_fails}, matching {matching:?}, printed variant {}",
            DVariant::PRINTED
        ),
    );
}

fn zero_fiber(ledger: &mut Ledger) {
    let table = cell_count_series(CELL_COUNT_K_MAX);
    let mut bad = Vec::new();
    for k in 1..=CELL_COUNT_K_MAX {
        let top_ok = table.top_exponent(k) == Some(k - 1);
        let sum_ok = table.row_sum(k) == num_bigint::BigUint::from(nested_pairs(k).len());
        if !(top_ok && sum_ok) {
            bad.push(k);
        }
    }
    ledger.record(
        8,
        Kind::Hard,
        bad.is_empty(),
        &format!("cell counts: top v-exponent k-1 and row sum = fixed points for k <= {CELL_COUNT_K_MAX}; failures {bad:?}"),
    );
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> bool {
    let mut runner = TestRunner::new(property_config());
    match runner.run(&strategy, test) {
        Ok(()) => {
            info(&format!("{name}: {PROPERTY_CASES} cases ok"));
            true
        }
        Err(e) => {
            info(&format!("{name}: {e}"));
            false
        }
    }
}

fn properties(ledger: &mut Ledger) {
    let mut ok = true;
    ok &= run_property("ring axioms", (arb_poly(), arb_poly(), arb_poly()), |(a, b, c)| {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        Ok(())
    });
    ok &= run_property(
        "value preserved by add and reduce",
        (arb_fraction(), arb_fraction(), prop::collection::vec(arb_point(), 3 * EVAL_POINTS)),
        |(x, y, points)| {
            let s = x.add(&y);
            let r = s.reduce();
            let mut seen = 0;
            for (q0, t0) in &points {
                let vals: Option<Vec<BigRational>> =
                    [&x, &y, &s, &r].iter().map(|f| f.eval(q0, t0).unwrap()).collect();
                let Some(v) = vals else { continue };
                prop_assert_eq!(&v[0] + &v[1], v[2].clone());
                prop_assert_eq!(&v[2], &v[3]);
                seen += 1;
                if seen == EVAL_POINTS {
                    break;
                }
            }
            prop_assert_eq!(seen, EVAL_POINTS);
            Ok(())
        },
    );
    ok &= run_property("exact division round trip", (arb_poly(), arb_poly()), |(r, d)| {
        if !d.is_zero() {
            prop_assert_eq!((&r * &d).exact_div(&d), Some(r));
        }
        Ok(())
    });
    ok &= run_property(
        "canonical form under permuted summation",
        (prop::collection::vec(arb_fraction(), 1..6), any::<u64>()),
        |(items, seed)| {
            let mut shuffled = items.clone();
            let mut s = seed;
            for i in (1..shuffled.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                shuffled.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(QTFraction::sum(&items).reduce(), QTFraction::sum(&shuffled).reduce());
            Ok(())
        },
    );
    let terms = nested_terms(5, 2).expect("denominators consistent");
    let mut reversed = terms.clone();
    reversed.reverse();
    let fixed_point_order = QTFraction::sum(&terms).reduce() == QTFraction::sum(&reversed).reduce();
    info(&format!("nested n=5, m=2 sum independent of fixed-point order: {fixed_point_order}"));
    ok &= fixed_point_order;
    ledger.record(
        9,
        Kind::Hard,
        ok,
        &format!("property suites, {PROPERTY_CASES} cases each, seed {PROPERTY_SEED:#x}"),
    );
}

fn oracle_equivalence(ledger: &mut Ledger) {
    let mut bad = Vec::new();
    for n in 1..=ORACLE_N_MAX {
        for m in 1..=ORACLE_M_MAX {
            if catalan_by_interpolation(n, m).ok() != catalan_loc(n, m).ok() {
                bad.push(format!("C({n},{m})"));
            }
            if nested_by_interpolation(n, m).ok() != nested_poly(n, m) {
                bad.push(format!("N({n},{m})"));
            }
        }
    }
    ledger.record(
        10,
        Kind::Hard,
        bad.is_empty(),
        &format!("interpolation oracle equals symbolic sums for n <= {ORACLE_N_MAX}, m <= {ORACLE_M_MAX}; failures {bad:?}"),
    );
}

fn main() -> ExitCode {
    let mut ledger = Ledger { hard_failures: 0 };
    table_reproduction(&mut ledger);
    theorem_cross_check(&mut ledger);
    catalan_specialization(&mut ledger);
    worked_example(&mut ledger);
    conjectures(&mut ledger);
    pieri_c(&mut ledger);
    pieri_d(&mut ledger);
    zero_fiber(&mut ledger);
    properties(&mut ledger);
    oracle_equivalence(&mut ledger);
    println!("acceptance: {} hard failure(s)", ledger.hard_failures);
    if ledger.hard_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
