//! Partitions, Young-diagram cells and nested pairs.
//!
//! A cell is `(h, k)`: row `h` (its co-leg) and column `k` (its co-arm), both
//! 0-based. Cell `(h, k)` lies in `mu` iff `h < mu.len()` and `k < mu[h]`, and
//! carries the torus character `t^h q^k`. With this convention the 1-based
//! statistic `n(mu) = sum (i-1) mu_i` is the sum of `h` over all cells.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::qtalgebra::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("cell ({h},{k}) is not in the diagram of {mu}")]
    CellOutside { mu: Partition, h: usize, k: usize },
    #[error("cell ({h},{k}) is not a removable corner of {mu}")]
    NotACorner { mu: Partition, h: usize, k: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub h: usize,
    pub k: usize,
}

impl Cell {
    pub const fn new(h: usize, k: usize) -> Self {
        Cell { h, k }
    }

    /// `t^h q^k`.
    pub fn character(self) -> Monomial {
        Monomial::new(self.h as i32, self.k as i32)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h, self.k)
    }
}

/// Arm, leg, co-arm and co-leg of a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArmLeg {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

/// Weakly decreasing positive parts; the empty partition is the partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(PartitionError::NotAPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The integer partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((0..width).map(|k| self.0.iter().take_while(|&&p| p > k).count()).collect())
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.h < self.0.len() && c.k < self.0[c.h]
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(h, &p)| (0..p).map(move |k| Cell::new(h, k)))
    }

    fn column_height(&self, k: usize) -> usize {
        self.0.iter().take_while(|&&p| p > k).count()
    }

    pub fn armleg(&self, c: Cell) -> Result<ArmLeg, PartitionError> {
        if !self.contains(c) {
            return Err(PartitionError::CellOutside { mu: self.clone(), h: c.h, k: c.k });
        }
        Ok(ArmLeg {
            arm: self.0[c.h] - 1 - c.k,
            leg: self.column_height(c.k) - 1 - c.h,
            coarm: c.k,
            coleg: c.h,
        })
    }

    /// Removable corners, ordered by row.
    pub fn corners(&self) -> Vec<Cell> {
        (0..self.0.len())
            .filter(|&h| h + 1 == self.0.len() || self.0[h + 1] < self.0[h])
            .map(|h| Cell::new(h, self.0[h] - 1))
            .collect()
    }

    pub fn remove_corner(&self, c: Cell) -> Result<Partition, PartitionError> {
        if !self.corners().contains(&c) {
            return Err(PartitionError::NotACorner { mu: self.clone(), h: c.h, k: c.k });
        }
        let mut parts = self.0.clone();
        parts[c.h] -= 1;
        if parts[c.h] == 0 {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// `n(mu) = sum_i (i-1) mu_i` with 1-based `i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Exponents `(h, k)` of the minimal monomial generators `x^h y^k` of the
    /// monomial ideal whose standard monomials are the cells of `self`,
    /// ordered by `h`.
    pub fn canonical_generators(&self) -> Vec<Cell> {
        let mut gens = Vec::new();
        for (h, &p) in self.0.iter().enumerate() {
            if h == 0 || p < self.0[h - 1] {
                gens.push(Cell::new(h, p));
            }
        }
        gens.push(Cell::new(self.0.len(), 0));
        gens
    }

    /// Number of distinct part sizes.
    pub fn distinct_parts(&self) -> usize {
        let mut v = self.0.clone();
        v.dedup();
        v.len()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first,
/// `(1,...,1)` last.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A partition `mu` with a removable corner; `nu = mu \ corner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NestedPair {
    mu: Partition,
    corner: Cell,
}

impl NestedPair {
    pub fn new(mu: Partition, corner: Cell) -> Result<Self, PartitionError> {
        if !mu.corners().contains(&corner) {
            return Err(PartitionError::NotACorner { h: corner.h, k: corner.k, mu });
        }
        Ok(NestedPair { mu, corner })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn corner(&self) -> Cell {
        self.corner
    }

    pub fn nu(&self) -> Partition {
        self.mu.remove_corner(self.corner).expect("corner validated at construction")
    }

    pub fn n(&self) -> usize {
        self.mu.size()
    }

    /// Cells of `mu` in the corner's row, excluding the corner.
    pub fn row_cells(&self) -> Vec<Cell> {
        (0..self.corner.k).map(|k| Cell::new(self.corner.h, k)).collect()
    }

    /// Cells of `mu` in the corner's column, excluding the corner.
    pub fn col_cells(&self) -> Vec<Cell> {
        (0..self.corner.h).map(|h| Cell::new(h, self.corner.k)).collect()
    }

    /// Cells of `mu` sharing neither row nor column with the corner.
    pub fn other_cells(&self) -> Vec<Cell> {
        self.mu
            .cells()
            .filter(|c| c.h != self.corner.h && c.k != self.corner.k)
            .collect()
    }

    /// Exchanges rows and columns.
    pub fn transpose(&self) -> NestedPair {
        NestedPair { mu: self.mu.conjugate(), corner: Cell::new(self.corner.k, self.corner.h) }
    }
}

impl fmt::Display for NestedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} minus {}", self.mu, self.corner)
    }
}

/// All nested pairs of size `n`, in partition order then corner order.
pub fn nested_pairs(n: usize) -> Vec<NestedPair> {
    enumerate_partitions(n)
        .into_iter()
        .flat_map(|mu| {
            mu.corners()
                .into_iter()
                .map(move |corner| NestedPair { mu: mu.clone(), corner })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Coefficients `b[k][i]` of `v^i t^k` in `t/(1 - t v) * prod_{j>=1} 1/(1 - t^j v^(j-1))`,
/// for `1 <= k <= max_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCountTable {
    rows: Vec<Vec<BigUint>>,
}

impl CellCountTable {
    pub fn max_k(&self) -> usize {
        self.rows.len()
    }

    /// `b[k][i]`; zero outside the computed range.
    pub fn get(&self, k: usize, i: usize) -> BigUint {
        if k == 0 {
            return BigUint::zero();
        }
        self.rows
            .get(k - 1)
            .and_then(|r| r.get(i))
            .cloned()
            .unwrap_or_default()
    }

    /// Row `k` as `[b[k][0], ..., b[k][max_k]]`.
    pub fn row(&self, k: usize) -> &[BigUint] {
        &self.rows[k - 1]
    }

    /// Largest `i` with `b[k][i] != 0`.
    pub fn top_exponent(&self, k: usize) -> Option<usize> {
        self.row(k).iter().rposition(|c| !c.is_zero())
    }

    pub fn row_sum(&self, k: usize) -> BigUint {
        self.row(k).iter().sum()
    }
}

pub fn cell_count_series(max_k: usize) -> CellCountTable {
    // Dense grid c[k][i], 0 <= i <= k <= max_k, truncated at t-degree max_k.
    let n = max_k;
    let mut c = vec![vec![BigUint::zero(); n + 1]; n + 1];
    if n >= 1 {
        c[1][0] = BigUint::from(1u32);
    }
    // multiply by 1/(1 - t^a v^b) in place
    let divide_by = |a: usize, b: usize, c: &mut Vec<Vec<BigUint>>| {
        for k in a..=n {
            for i in b..=n {
                let add = c[k - a][i - b].clone();
                if !add.is_zero() {
                    c[k][i] += add;
                }
            }
        }
    };
    divide_by(1, 1, &mut c);
    for j in 1..=n {
        divide_by(j, j - 1, &mut c);
    }
    let rows = c.into_iter().skip(1).collect();
    CellCountTable { rows }
}
