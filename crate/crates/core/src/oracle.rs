//! Evaluation-and-interpolation oracle for the fixed-point sums.
//!
//! The summands are rebuilt here straight from arm and leg data and evaluated
//! at exact rational points, bypassing the fraction arithmetic entirely. The
//! values are then interpolated on a tensor grid that covers an a priori
//! exponent box, and one extra point checks that the interpolant really is
//! the sum. Grid coordinates for `t` and `q` are drawn from disjoint sets of
//! primes, so no `t^a q^b` with `(a, b) != (0, 0)` equals 1 and no summand has
//! a pole on the grid.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::partitions::{enumerate_partitions, nested_pairs, Partition};
use crate::qtalgebra::{LaurentPoly, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("interpolant disagrees with the sum at the check point; the sum is not a polynomial in the box")]
    CheckPointMismatch,
    #[error("interpolated coefficient {0} is not an integer")]
    NonIntegral(BigRational),
}

/// `shift * B * (1-t)(1-q) * prod_{cells != origin} (1 - t^h q^k) / prod (1 - t^a q^b)`.
#[derive(Clone, Debug)]
struct Summand {
    shift: (i32, i32),
    cells: Vec<(i32, i32)>,
    den: Vec<(i32, i32)>,
}

fn armleg(mu: &Partition, h: usize, k: usize) -> (i32, i32) {
    let parts = mu.parts();
    let arm = parts[h] - 1 - k;
    let leg = parts.iter().filter(|&&p| p > k).count() - 1 - h;
    (arm as i32, leg as i32)
}

fn diagram(mu: &Partition) -> Vec<(usize, usize)> {
    mu.parts()
        .iter()
        .enumerate()
        .flat_map(|(h, &p)| (0..p).map(move |k| (h, k)))
        .collect()
}

fn numerator_data(mu: &Partition, m: usize) -> ((i32, i32), Vec<(i32, i32)>) {
    let cells: Vec<(i32, i32)> = diagram(mu).iter().map(|&(h, k)| (h as i32, k as i32)).collect();
    let t_shift: i32 = cells.iter().map(|c| c.0).sum();
    let q_shift: i32 = cells.iter().map(|c| c.1).sum();
    ((m as i32 * t_shift, m as i32 * q_shift), cells)
}

fn catalan_summands(n: usize, m: usize) -> Vec<Summand> {
    enumerate_partitions(n)
        .iter()
        .map(|mu| {
            let (shift, cells) = numerator_data(mu, m);
            let mut den = Vec::new();
            for (h, k) in diagram(mu) {
                let (a, l) = armleg(mu, h, k);
                den.push((1 + l, -a));
                den.push((-l, 1 + a));
            }
            Summand { shift, cells, den }
        })
        .collect()
}

fn nested_summands(n: usize, m: usize) -> Vec<Summand> {
    nested_pairs(n)
        .iter()
        .map(|pair| {
            let mu = pair.mu();
            let (zh, zk) = (pair.corner().h, pair.corner().k);
            let (shift, cells) = numerator_data(mu, m);
            let mut den = vec![(1, 0), (0, 1)];
            for (h, k) in diagram(mu) {
                let (a, l) = armleg(mu, h, k);
                if (h, k) == (zh, zk) {
                    continue;
                } else if h == zh {
                    den.push((1 + l, -a));
                    den.push((-l, a));
                } else if k == zk {
                    den.push((-l, 1 + a));
                    den.push((l, -a));
                } else {
                    den.push((1 + l, -a));
                    den.push((-l, 1 + a));
                }
            }
            Summand { shift, cells, den }
        })
        .collect()
}

fn power(x: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

fn mono(t0: &BigRational, q0: &BigRational, a: i32, b: i32) -> BigRational {
    power(t0, a) * power(q0, b)
}

impl Summand {
    fn eval(&self, t0: &BigRational, q0: &BigRational) -> BigRational {
        let one = BigRational::one();
        let mut b = BigRational::zero();
        let mut prod = (&one - t0) * (&one - q0);
        for &(h, k) in &self.cells {
            let c = mono(t0, q0, h, k);
            if (h, k) != (0, 0) {
                prod *= &one - &c;
            }
            b += c;
        }
        let mut den = BigRational::one();
        for &(a, bq) in &self.den {
            den *= &one - mono(t0, q0, a, bq);
        }
        mono(t0, q0, self.shift.0, self.shift.1) * b * prod / den
    }

    /// `(t_min, t_max, q_min, q_max)` of the summand as a ratio of Laurent
    /// polynomials: numerator bounds minus exact denominator degrees.
    fn degree_bounds(&self) -> (i32, i32, i32, i32) {
        let max_h = self.cells.iter().map(|c| c.0).max().unwrap_or(0);
        let max_k = self.cells.iter().map(|c| c.1).max().unwrap_or(0);
        let sum_h: i32 = self.cells.iter().map(|c| c.0).sum();
        let sum_k: i32 = self.cells.iter().map(|c| c.1).sum();
        let num = (
            self.shift.0,
            self.shift.0 + max_h + 1 + sum_h,
            self.shift.1,
            self.shift.1 + max_k + 1 + sum_k,
        );
        let den = self.den.iter().fold((0, 0, 0, 0), |acc, &(a, b)| {
            (acc.0 + a.min(0), acc.1 + a.max(0), acc.2 + b.min(0), acc.3 + b.max(0))
        });
        (num.0 - den.0, num.1 - den.1, num.2 - den.2, num.3 - den.3)
    }
}

fn primes(count: usize) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(count);
    let mut c = 2i64;
    while out.len() < count {
        if out.iter().take_while(|&&p| p * p <= c).all(|&p| c % p != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// Coefficients, lowest degree first, of the polynomial through `(xs[i], ys[i])`.
fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    // Horner expansion of the Newton form
    let mut coeffs = vec![dd[n - 1].clone()];
    for k in (0..n - 1).rev() {
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &xs[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}

fn sum_at(terms: &[Summand], t0: &BigRational, q0: &BigRational) -> BigRational {
    terms.iter().map(|s| s.eval(t0, q0)).fold(BigRational::zero(), |a, b| a + b)
}

fn reconstruct(terms: &[Summand]) -> Result<LaurentPoly, OracleError> {
    let (t_lo, t_hi, q_lo, q_hi) = terms.iter().map(Summand::degree_bounds).fold(
        (i32::MAX, i32::MIN, i32::MAX, i32::MIN),
        |acc, b| (acc.0.min(b.0), acc.1.max(b.1), acc.2.min(b.2), acc.3.max(b.3)),
    );
    let nt = (t_hi - t_lo + 1) as usize;
    let nq = (q_hi - q_lo + 1) as usize;
    let ps = primes(2 * (nt.max(nq) + 1));
    let rat = |p: i64| BigRational::from_integer(BigInt::from(p));
    let ts: Vec<BigRational> = ps.iter().step_by(2).take(nt + 1).map(|&p| rat(p)).collect();
    let qs: Vec<BigRational> = ps.iter().skip(1).step_by(2).take(nq + 1).map(|&p| rat(p)).collect();

    // values of the sum divided by t^t_lo q^q_lo, one row per q node
    let rows: Vec<Vec<BigRational>> = qs[..nq]
        .par_iter()
        .map(|q0| {
            let ys: Vec<BigRational> = ts[..nt]
                .iter()
                .map(|t0| sum_at(terms, t0, q0) / mono(t0, q0, t_lo, q_lo))
                .collect();
            interpolate(&ts[..nt], &ys)
        })
        .collect();

    let mut out = LaurentPoly::zero();
    for i in 0..nt {
        let ys: Vec<BigRational> = rows.iter().map(|r| r[i].clone()).collect();
        for (j, c) in interpolate(&qs[..nq], &ys).into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return Err(OracleError::NonIntegral(c));
            }
            out.add_term(Monomial::new(t_lo + i as i32, q_lo + j as i32), c.to_integer());
        }
    }

    let (tc, qc) = (&ts[nt], &qs[nq]);
    let expected = sum_at(terms, tc, qc);
    let got = out.eval(qc, tc).expect("check point is nonzero");
    if expected != got {
        return Err(OracleError::CheckPointMismatch);
    }
    Ok(out)
}

/// `C_n^(m)` reconstructed from point values.
pub fn catalan_by_interpolation(n: usize, m: usize) -> Result<LaurentPoly, OracleError> {
    reconstruct(&catalan_summands(n, m))
}

/// `N_n^(m)` reconstructed from point values.
pub fn nested_by_interpolation(n: usize, m: usize) -> Result<LaurentPoly, OracleError> {
    reconstruct(&nested_summands(n, m))
}
