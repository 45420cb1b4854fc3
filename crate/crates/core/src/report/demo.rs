//! Built-in corpus of worked examples with their expected verdicts.

use super::document::{locus_document, run_classify, LocusDocument, ReportDocument};
use super::job::JobSpec;
use crate::classify::{Verdict, Verdicts};
use crate::curve::make_curve;
use crate::error::Result;
use crate::parse::parse_poly;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub curve: &'static str,
    pub numerator: &'static str,
    pub denominator: &'static str,
    /// Value at the origin, the only real bad point of every entry.
    pub value: &'static str,
    /// `regular, k_plus, k_r_plus, integral`.
    pub expected: [bool; 4],
}

impl CorpusEntry {
    pub fn job(&self) -> JobSpec {
        JobSpec::function(self.curve, self.numerator, self.denominator).at("0", "0", self.value)
    }

    pub fn expected_verdicts(&self) -> Verdicts {
        let [r, kp, krp, i] = self.expected.map(Verdict::from_bool);
        Verdicts { regular: r, k_plus: kp, k_r_plus: krp, integral: i }
    }
}

pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry { name: "cusp", curve: "y^2 - x^3", numerator: "y", denominator: "x", value: "0", expected: [false, true, true, true] },
    CorpusEntry {
        name: "cusp-with-conjugate-nodes",
        curve: "y^2 - x^3*(x^2+1)^2",
        numerator: "y",
        denominator: "x*(x^2+1)",
        value: "0",
        expected: [false, false, true, true],
    },
    CorpusEntry {
        name: "quartic",
        curve: "y^4 - x*(x^2+y^2)",
        numerator: "y^2",
        denominator: "x",
        value: "0",
        expected: [false, false, false, true],
    },
    CorpusEntry {
        name: "cubic",
        curve: "y^3 - x^2*y^2 + y*x^2*(x+1) - x^4*(x+1)",
        numerator: "y",
        denominator: "x",
        value: "0",
        expected: [false, false, false, true],
    },
    CorpusEntry { name: "node", curve: "y^2 - x^2*(x+1)", numerator: "y", denominator: "x", value: "1", expected: [false, false, false, true] },
];

/// Curve with real and non-real singularities of several kinds.
pub const SINGULAR_CURVE: &str = "(y^4+x^6)*(y^2-(x-1)^3*(x-2)^2*(x^2+1)^2*(x^2+4)^3)";
pub const SINGULAR_CURVE_REAL: &[&str] = &["(0, 0)", "(1, 0)", "(2, 0)"];
pub const SINGULAR_CURVE_NON_REAL: &[&str] = &["{x^2 + 1 = 0, y = 0}", "{x^2 + 4 = 0, y = 0}"];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DemoEntry {
    pub name: String,
    pub expected: Verdicts,
    pub agrees: bool,
    pub report: ReportDocument,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocusEntry {
    pub name: String,
    pub agrees: bool,
    pub report: LocusDocument,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DemoDocument {
    pub entries: Vec<DemoEntry>,
    pub singular_locus: LocusEntry,
}

impl DemoDocument {
    pub fn agrees(&self) -> bool {
        self.entries.iter().all(|e| e.agrees) && self.singular_locus.agrees
    }
}

/// Whether a singular-locus listing has the expected real and non-real
/// points and at least seven complex points.
pub fn locus_agrees(doc: &LocusDocument) -> bool {
    let has = |label: &str, real: bool| doc.points.iter().any(|p| p.label == label && p.real == real);
    SINGULAR_CURVE_REAL.iter().all(|l| has(l, true))
        && SINGULAR_CURVE_NON_REAL.iter().all(|l| has(l, false))
        && doc.real_points == SINGULAR_CURVE_REAL.len()
        && doc.closed_points >= 7
}

pub fn run_demo(probe: bool) -> Result<DemoDocument> {
    let mut entries = Vec::new();
    for e in CORPUS {
        let mut job = e.job();
        job.options.probe = probe;
        let report = run_classify(&job)?;
        entries.push(DemoEntry { name: e.name.into(), expected: e.expected_verdicts(), agrees: report.verdicts == e.expected_verdicts(), report });
    }
    let curve = make_curve(&parse_poly(SINGULAR_CURVE)?)?;
    let report = locus_document(&curve)?;
    let singular_locus = LocusEntry { name: "singular-locus".into(), agrees: locus_agrees(&report), report };
    Ok(DemoDocument { entries, singular_locus })
}
