//! The three subcommands, as functions returning the text to print and the
//! exit status.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use num_bigint::BigInt;

use qtcat_core::dyck::{comb_catalan, comb_nested};
use qtcat_core::localization::{catalan_loc, nested_loc, NestedOutcome};
use qtcat_core::partitions::{cell_count_series, nested_pairs};
use qtcat_core::pieri::{calibrate_d_identity, verify_c_identity};
use qtcat_core::QTFraction;

use crate::record::{Cache, Kind, ResultRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    CatalanMatch,
    NestedMatch,
    Symmetry,
    Positivity,
    PieriC,
    PieriDCalibrate,
    Counts,
}

/// Text to print and the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: u8,
}

/// Marker placed at the top of a report when the nested sum is not a polynomial.
pub const VIOLATION_MARKER: &str = "CONJECTURE VIOLATION";

pub fn evaluate(kind: Kind, n: usize, m: usize) -> Result<ResultRecord> {
    Ok(match kind {
        Kind::CatalanComb => ResultRecord::polynomial(kind, n, m, &comb_catalan(n)),
        Kind::NestedComb => ResultRecord::polynomial(kind, n, m, &comb_nested(n)),
        Kind::CatalanLoc => ResultRecord::polynomial(kind, n, m, &catalan_loc(n, m)?),
        Kind::NestedLoc => match nested_loc(n, m)? {
            NestedOutcome::Polynomial(p) => ResultRecord::polynomial(kind, n, m, &p),
            NestedOutcome::NotPolynomial(residual) => violation_record(n, m, &residual),
        },
        Kind::PieriReport => ResultRecord::report(kind, n, m, pieri_report(n)?),
        Kind::Cells => ResultRecord::report(kind, n, m, cells_report(n)),
    })
}

/// Record for a nested sum that failed to reduce to a polynomial.
pub fn violation_record(n: usize, m: usize, residual: &QTFraction) -> ResultRecord {
    ResultRecord::report(
        Kind::NestedLoc,
        n,
        m,
        format!("{VIOLATION_MARKER}: the nested sum for n={n}, m={m} is not a polynomial\nresidual: {residual}"),
    )
}

fn pieri_report(n: usize) -> Result<String> {
    let mut out = String::new();
    writeln!(out, "c = Pi_mu / Pi_mu,nu for nested pairs of size {n}:")?;
    for check in verify_c_identity(n)? {
        let verdict = if check.holds { "holds" } else { "FAILS" };
        writeln!(out, "  {verdict}  {}  c = {}", check.pair, check.lhs)?;
    }
    write!(out, "{}", calibrate_d_identity(n)?)?;
    Ok(out)
}

fn cells_report(n: usize) -> String {
    let table = cell_count_series(n);
    let mut out = String::from("k: b[k][0..k-1] (coefficient of v^i t^k), row sum\n");
    for k in 1..=n {
        let row: Vec<String> = table.row(k)[..k].iter().map(|c| c.to_string()).collect();
        let top = table.top_exponent(k).map_or("-".to_string(), |i| i.to_string());
        writeln!(out, "{k}: [{}] sum {} top {top}", row.join(", "), table.row_sum(k)).unwrap();
    }
    out
}

fn validate(kind: Kind, n: usize, m: usize) -> Result<()> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    if m == 0 {
        bail!("--m must be at least 1");
    }
    if !kind.uses_m() && m != 1 {
        bail!("{kind} does not take --m");
    }
    Ok(())
}

pub fn compute(kind: Kind, n: usize, m: usize, format: Format, cache: Option<&Cache>) -> Result<Outcome> {
    validate(kind, n, m)?;
    let record = match cache.and_then(|c| c.load(kind, n, m)) {
        Some(hit) => hit,
        None => {
            let fresh = evaluate(kind, n, m)?;
            if let Some(c) = cache {
                c.store(&fresh)?;
            }
            fresh
        }
    };
    let output = match format {
        Format::Text => record.render_text()?,
        Format::Json => record.to_json(),
    };
    Ok(Outcome { output, exit_code: 0 })
}

/// Label of the printed table entry reproduced by the sum with this `n`.
pub fn table_index(n: usize, m: usize) -> usize {
    if m == 1 {
        n - 1
    } else {
        n
    }
}

pub fn table(m: usize, n_max: usize, format: Format) -> Result<Outcome> {
    if m == 0 || n_max < 2 {
        bail!("table needs --m >= 1 and --n-max >= 2");
    }
    let records: Vec<ResultRecord> =
        (2..=n_max).map(|n| evaluate(Kind::NestedLoc, n, m)).collect::<Result<_>>()?;
    let output = match format {
        Format::Text => {
            let mut out = String::new();
            for r in &records {
                writeln!(out, "N^({m})_{} [n={}, m={m}]: {}", table_index(r.n, m), r.n, r.render_text()?)?;
            }
            out.trim_end().to_string()
        }
        Format::Json => serde_json::to_string(&records)?,
    };
    Ok(Outcome { output, exit_code: 0 })
}

struct Checks {
    lines: Vec<String>,
    hard_failures: usize,
}

impl Checks {
    fn theorem(&mut self, ok: bool, what: String) {
        self.lines.push(format!("[{}] {what}", if ok { "PASS" } else { "FAIL" }));
        self.hard_failures += !ok as usize;
    }

    fn conjecture(&mut self, ok: bool, what: String) {
        let tag = if ok { "CONJECTURE HOLDS" } else { "CONJECTURE FAILS" };
        self.lines.push(format!("[{tag}] {what}"));
    }
}

fn nested_poly(n: usize, m: usize) -> Result<Option<qtcat_core::LaurentPoly>> {
    Ok(nested_loc(n, m)?.polynomial().cloned())
}

pub fn verify(suite: Suite, n_max: usize, m_max: usize) -> Result<Outcome> {
    if n_max == 0 || m_max == 0 {
        bail!("--n-max and --m-max must be at least 1");
    }
    let mut c = Checks { lines: Vec::new(), hard_failures: 0 };
    match suite {
        Suite::CatalanMatch => {
            for n in 1..=n_max {
                let ok = catalan_loc(n, 1)? == comb_catalan(n);
                c.theorem(ok, format!("n={n}: fixed-point sum equals area/bounce series"));
            }
        }
        Suite::NestedMatch => {
            for n in 1..=n_max {
                let ok = nested_poly(n, 1)? == Some(comb_nested(n));
                c.conjecture(ok, format!("n={n}: nested fixed-point sum equals path model"));
            }
        }
        Suite::Symmetry => {
            for n in 1..=n_max {
                for m in 1..=m_max {
                    c.theorem(catalan_loc(n, m)?.is_qt_symmetric(), format!("n={n} m={m}: Catalan sum symmetric"));
                    let ok = nested_poly(n, m)?.is_some_and(|p| p.is_qt_symmetric());
                    c.conjecture(ok, format!("n={n} m={m}: nested sum symmetric"));
                }
            }
        }
        Suite::Positivity => {
            for n in 1..=n_max {
                for m in 1..=m_max {
                    let ok = nested_poly(n, m)?.is_some_and(|p| p.has_nonnegative_coefficients());
                    c.conjecture(ok, format!("n={n} m={m}: nested sum is a polynomial with nonnegative coefficients"));
                }
            }
        }
        Suite::PieriC => {
            for n in 1..=n_max {
                let checks = verify_c_identity(n)?;
                let bad: Vec<&str> = checks.iter().filter(|x| !x.holds).map(|x| x.pair.as_str()).collect();
                c.theorem(bad.is_empty(), format!("n={n}: c identity on {} pairs, failures {bad:?}", checks.len()));
            }
        }
        Suite::PieriDCalibrate => {
            let report = calibrate_d_identity(n_max)?;
            c.lines.extend(report.to_string().lines().map(str::to_string));
        }
        Suite::Counts => {
            let table = cell_count_series(n_max);
            for k in 1..=n_max {
                let pairs = nested_pairs(k).len();
                let ok = table.top_exponent(k) == Some(k - 1) && table.row_sum(k) == pairs.into();
                c.theorem(ok, format!("k={k}: cell counts have top exponent k-1 and sum {pairs}"));
                let catalan = comb_catalan(k).eval_at_one();
                let expected = BigInt::from(binomial(2 * k, k)) / BigInt::from(k + 1);
                c.theorem(catalan == expected, format!("k={k}: Catalan series at (1,1) is {catalan}"));
                let nested = nested_poly(k, 1)?.map(|p| BigInt::from(2) * p.eval_at_one());
                let want = BigInt::from(k) * BigInt::from(binomial(2 * k + 2, k + 1)) / BigInt::from(k + 2);
                c.conjecture(nested == Some(want), format!("k={k}: nested series at (1,1) is k/2 * Catalan(k+1)"));
            }
        }
    }
    let status = if c.hard_failures == 0 { "ok" } else { "FAILED" };
    c.lines.push(format!("{status}: {} hard failure(s)", c.hard_failures));
    Ok(Outcome { output: c.lines.join("\n"), exit_code: (c.hard_failures > 0) as u8 })
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
