//! Dyck paths and the statistics behind the combinatorial series.
//!
//! A path of size `n` is a word of `n` zeros (up steps) and `n` ones (right
//! steps) from `(0,0)` to `(n,n)` staying weakly above the diagonal.
//!
//! The bounce scan starts at `(n,n)`, walks west along the current height
//! until it meets the up step of the path that arrives at that height, drops
//! to the diagonal at that column and repeats. The columns `j1 > j2 > ... > 0`
//! where it lands are the contacts; `bounce` is their sum.
//!
//! Bounce section `i` (for `1 <= i <= b-1`, with `j0 = n` and `jb = 0`) is the
//! part of the path from `(j(i+1), j(i))` to `(j(i), j(i-1))`. For the nested
//! series a peak (a `01` factor) belongs to the section holding its right
//! step; peaks on the final run at height `n` are not counted. Sections are
//! weighted from the bottom: the lowest section contributes `t^0`, the one
//! above it `t^1`, and so on. This assignment reproduces the localization
//! values of the nested series (checked in the test suites).

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use thiserror::Error;

use crate::qtalgebra::{LaurentPoly, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("invalid step {0:?}; expected '0' or '1'")]
    BadStep(char),
    #[error("word {0} is not a Dyck path")]
    NotDyck(String),
    #[error("statistic undefined on the path with all up steps first")]
    AllUpFirst,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    /// `false` = up (0), `true` = right (1).
    steps: Vec<bool>,
}

/// Contacts of the bounce scan and the step ranges of the bounce sections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BounceData {
    /// `j1 > j2 > ... > j(b-1) > 0`.
    pub contacts: Vec<usize>,
    /// `sections[i-1]` is the index range of section `i` in the step word.
    pub sections: Vec<Range<usize>>,
}

impl DyckPath {
    pub fn from_steps(steps: Vec<bool>) -> Result<Self, DyckError> {
        let mut height: i64 = 0;
        for &s in &steps {
            height += if s { -1 } else { 1 };
            if height < 0 {
                return Err(DyckError::NotDyck(render(&steps)));
            }
        }
        if height != 0 {
            return Err(DyckError::NotDyck(render(&steps)));
        }
        Ok(DyckPath { steps })
    }

    /// The path `0^n 1^n`.
    pub fn all_up_first(n: usize) -> Self {
        let mut steps = vec![false; n];
        steps.extend(std::iter::repeat_n(true, n));
        DyckPath { steps }
    }

    /// The path `(01)^n`.
    pub fn staircase(n: usize) -> Self {
        DyckPath { steps: (0..2 * n).map(|i| i % 2 == 1).collect() }
    }

    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    pub fn is_all_up_first(&self) -> bool {
        let n = self.size();
        self.steps[..n].iter().all(|s| !s)
    }

    /// `x` coordinate of the up step arriving at each height `1..=n`.
    fn up_columns(&self) -> Vec<usize> {
        let mut cols = vec![0; self.size() + 1];
        let (mut x, mut y) = (0, 0);
        for &s in &self.steps {
            if s {
                x += 1;
            } else {
                y += 1;
                cols[y] = x;
            }
        }
        cols
    }

    /// Full cells between the path and the diagonal.
    pub fn area(&self) -> usize {
        let cols = self.up_columns();
        (1..=self.size()).map(|y| (y - 1) - cols[y]).sum()
    }

    /// Pairs `i < j` with `a_i < a_j` in the step word.
    pub fn coinv(&self) -> usize {
        let mut zeros = 0;
        let mut count = 0;
        for &s in &self.steps {
            if s {
                count += zeros;
            } else {
                zeros += 1;
            }
        }
        count
    }

    pub fn bounce_contacts(&self) -> BounceData {
        let n = self.size();
        let cols = self.up_columns();
        let mut contacts = Vec::new();
        let mut y = n;
        while y > 0 {
            let j = cols[y];
            if j == 0 {
                break;
            }
            contacts.push(j);
            y = j;
        }
        // boundary points j_i for i = 0..=b with j_0 = n, j_b = 0
        let mut js = Vec::with_capacity(contacts.len() + 2);
        js.push(n);
        js.extend(&contacts);
        js.push(0);
        // the lattice point (x, y) is reached after x + y steps
        let sections = (1..js.len() - 1)
            .map(|i| (js[i + 1] + js[i])..(js[i] + js[i - 1]))
            .collect();
        BounceData { contacts, sections }
    }

    pub fn bounce(&self) -> usize {
        self.bounce_contacts().contacts.iter().sum()
    }

    /// `sum (j_i - 1)` over the contacts.
    pub fn s3(&self) -> Result<usize, DyckError> {
        let contacts = self.bounce_contacts().contacts;
        if contacts.is_empty() {
            return Err(DyckError::AllUpFirst);
        }
        Ok(contacts.iter().map(|j| j - 1).sum())
    }

    /// Peak counts per bounce section, lowest section first.
    pub fn v_poly(&self) -> Result<Vec<usize>, DyckError> {
        let data = self.bounce_contacts();
        if data.contacts.is_empty() {
            return Err(DyckError::AllUpFirst);
        }
        let mut v: Vec<usize> = data
            .sections
            .iter()
            .map(|r| {
                r.clone()
                    .filter(|&k| k > 0 && self.steps[k] && !self.steps[k - 1])
                    .count()
            })
            .collect();
        v.reverse();
        Ok(v)
    }

    /// Number of `01` factors in the word.
    pub fn peaks(&self) -> usize {
        self.steps.windows(2).filter(|w| !w[0] && w[1]).count()
    }
}

fn render(steps: &[bool]) -> String {
    steps.iter().map(|&s| if s { '1' } else { '0' }).collect()
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.steps))
    }
}

impl FromStr for DyckPath {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(DyckError::BadStep(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        DyckPath::from_steps(steps)
    }
}

/// All Dyck paths of size `n`, lexicographic on the step word.
pub fn enumerate_dyck(n: usize) -> Vec<DyckPath> {
    fn rec(n: usize, ups: usize, rights: usize, word: &mut Vec<bool>, out: &mut Vec<DyckPath>) {
        if ups == n && rights == n {
            out.push(DyckPath { steps: word.clone() });
            return;
        }
        if ups < n {
            word.push(false);
            rec(n, ups + 1, rights, word, out);
            word.pop();
        }
        if rights < ups {
            word.push(true);
            rec(n, ups, rights + 1, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// `sum_P q^area(P) t^bounce(P)` over Dyck paths of size `n`.
pub fn comb_catalan(n: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for p in enumerate_dyck(n) {
        out.add_term(Monomial::new(p.bounce() as i32, p.area() as i32), 1.into());
    }
    out
}

/// `sum_P q^area(P) t^s3(P) sum_i v_i t^i` over Dyck paths of size `n + 1`
/// other than `0^(n+1) 1^(n+1)`.
pub fn comb_nested(n: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for p in enumerate_dyck(n + 1) {
        if p.is_all_up_first() {
            continue;
        }
        let area = p.area() as i32;
        let s3 = p.s3().expect("excluded above") as i32;
        for (i, v) in p.v_poly().expect("excluded above").into_iter().enumerate() {
            out.add_term(Monomial::new(s3 + i as i32, area), v.into());
        }
    }
    out
}
