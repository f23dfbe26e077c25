//! Serializable views of core results. Every collection is ordered, so JSON output is
//! byte-for-byte deterministic.

use golod_core::koszul::HomologySummary;
use golod_core::monomial::MonomialIdeal;
use golod_core::poincare::BigradedSeries;
use golod_core::resolution::BettiTable;
use golod_core::{Ideal, Ring};
use serde::Serialize;

/// How the process should exit after a successful computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// The computation finished and the answer is negative.
    Negative,
}

impl Outcome {
    pub fn from_verdict(ok: bool) -> Self {
        if ok {
            Outcome::Success
        } else {
            Outcome::Negative
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Negative => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub outcome: Outcome,
}

impl Report {
    pub fn new(text: String, json: impl Serialize, outcome: Outcome) -> Self {
        Report {
            text,
            json: serde_json::to_value(json).expect("report serializes"),
            outcome,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RingJson {
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
}

impl From<&Ring> for RingJson {
    fn from(r: &Ring) -> Self {
        RingJson {
            variables: r.names().to_vec(),
            weights: r.weights().to_vec(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdealJson {
    pub ring: RingJson,
    pub generators: Vec<String>,
}

impl From<&Ideal> for IdealJson {
    fn from(i: &Ideal) -> Self {
        IdealJson {
            ring: i.ring().into(),
            generators: i.generator_strings(),
        }
    }
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        IdealJson {
            ring: i.ring().into(),
            generators: i.to_polynomials().iter().map(|p| p.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BettiEntry {
    pub i: usize,
    pub d: u32,
    pub b: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BettiJson {
    pub entries: Vec<BettiEntry>,
    pub totals: Vec<usize>,
}

impl From<&BettiTable> for BettiJson {
    fn from(t: &BettiTable) -> Self {
        BettiJson {
            entries: t
                .entries()
                .iter()
                .map(|(&(i, d), &b)| BettiEntry { i, d, b })
                .collect(),
            totals: (0..=t.length()).map(|i| t.total(i)).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HomologyEntry {
    pub l: usize,
    pub d: u32,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HomologyJson {
    pub l_max: usize,
    pub d_max: u32,
    pub strands: Vec<HomologyEntry>,
    pub truncated: bool,
}

impl From<&HomologySummary> for HomologyJson {
    fn from(h: &HomologySummary) -> Self {
        HomologyJson {
            l_max: h.bounds.l_max,
            d_max: h.bounds.d_max,
            strands: h
                .dims()
                .into_iter()
                .map(|((l, d), dim)| HomologyEntry { l, d, dim })
                .collect(),
            truncated: h.truncated,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SeriesEntry {
    pub i: usize,
    pub d: u32,
    pub c: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SeriesJson {
    pub i_max: usize,
    pub d_max: u32,
    pub coefficients: Vec<SeriesEntry>,
    pub totals: Vec<u64>,
    pub text: String,
}

impl From<&BigradedSeries> for SeriesJson {
    fn from(s: &BigradedSeries) -> Self {
        SeriesJson {
            i_max: s.bounds.i_max,
            d_max: s.bounds.d_max,
            coefficients: s
                .coefficients()
                .iter()
                .map(|(&(i, d), &c)| SeriesEntry { i, d, c })
                .collect(),
            totals: s.totals(),
            text: s.to_string(),
        }
    }
}
