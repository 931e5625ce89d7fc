//! Result records, their JSON form, and the on-disk cache.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use qtcat_core::{LaurentPoly, Monomial, ENGINE_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    CatalanComb,
    CatalanLoc,
    NestedComb,
    NestedLoc,
    PieriReport,
    Cells,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::CatalanComb => "catalan-comb",
            Kind::CatalanLoc => "catalan-loc",
            Kind::NestedComb => "nested-comb",
            Kind::NestedLoc => "nested-loc",
            Kind::PieriReport => "pieri-report",
            Kind::Cells => "cells",
        }
    }

    /// Whether the computation depends on `m`.
    pub fn uses_m(self) -> bool {
        matches!(self, Kind::CatalanLoc | Kind::NestedLoc)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub t: i32,
    pub q: i32,
    /// Decimal string so arbitrary precision survives any JSON reader.
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub kind: Kind,
    pub n: usize,
    pub m: usize,
    pub terms: Vec<Term>,
    pub engine: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<String>,
}

fn now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

impl ResultRecord {
    pub fn polynomial(kind: Kind, n: usize, m: usize, p: &LaurentPoly) -> Self {
        let terms = p
            .canonical_terms()
            .into_iter()
            .map(|(mono, c)| Term { t: mono.t, q: mono.q, c: c.to_string() })
            .collect();
        ResultRecord { kind, n, m, terms, engine: ENGINE_VERSION.to_string(), timestamp: now(), report: None }
    }

    pub fn report(kind: Kind, n: usize, m: usize, body: String) -> Self {
        ResultRecord {
            kind,
            n,
            m,
            terms: Vec::new(),
            engine: ENGINE_VERSION.to_string(),
            timestamp: now(),
            report: Some(body),
        }
    }

    pub fn to_polynomial(&self) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for term in &self.terms {
            let c = BigInt::from_str(&term.c).with_context(|| format!("bad coefficient {:?}", term.c))?;
            p.add_term(Monomial::new(term.t, term.q), c);
        }
        Ok(p)
    }

    /// Text rendering: the report if there is one, else the polynomial.
    pub fn render_text(&self) -> Result<String> {
        match &self.report {
            Some(body) => Ok(body.trim_end().to_string()),
            None => Ok(self.to_polynomial()?.to_string()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn is_current(&self) -> bool {
        self.engine == ENGINE_VERSION
    }
}

/// Directory of `{kind}-{n}-{m}.json` records.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, kind: Kind, n: usize, m: usize) -> PathBuf {
        self.dir.join(format!("{kind}-{n}-{m}.json"))
    }

    /// A record from the current engine, if one is stored; stale or
    /// unreadable entries count as misses.
    pub fn load(&self, kind: Kind, n: usize, m: usize) -> Option<ResultRecord> {
        let text = std::fs::read_to_string(self.path(kind, n, m)).ok()?;
        let record = ResultRecord::from_json(&text).ok()?;
        (record.is_current() && record.kind == kind && record.n == n && record.m == m).then_some(record)
    }

    pub fn store(&self, record: &ResultRecord) -> Result<()> {
        std::fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating cache directory {}", self.dir.display()))?;
        let path = self.path(record.kind, record.n, record.m);
        if path.is_dir() {
            bail!("cache entry {} is a directory", path.display());
        }
        std::fs::write(&path, record.to_json()).with_context(|| format!("writing {}", path.display()))
    }
}
