//! Report documents and the pipelines producing them. Every document is a
//! plain value with a fixed key order; polynomials appear as canonical
//! strings so certificates can be diffed and re-parsed.

use super::job::JobSpec;
use crate::classify::{
    classify_with, continuity_probe, present_extension, verify_r_subintegral, ClassificationReport, CurveFunction, FiberReport, ProbeOutcome,
    Regularity, Verdicts,
};
use crate::curve::{fiber_constancy_check, BadPoint, PlaneCurve, W_NAMES};
use crate::error::{Error, Result};
use crate::groebner::{MPoly, Var};
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValueDoc {
    pub index: usize,
    pub point: String,
    pub value: String,
    /// Whether the value was filled in rather than given.
    pub filled: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FunctionDoc {
    pub numerator: String,
    pub denominator: String,
    pub values: Vec<ValueDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub condition: u8,
    pub name: String,
    pub point: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificatesDoc {
    /// Relation monic in `t` satisfied by the function.
    pub integral_relation: Option<String>,
    /// Polynomial equal to the function, when it is regular.
    pub regular_witness: Option<String>,
    pub regularity: String,
    pub failure_witnesses: Vec<WitnessDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionDoc {
    pub index: u8,
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiberDoc {
    pub point: String,
    pub real: bool,
    pub fiber_poly: String,
    /// `null` when the fibre is the whole line.
    pub distinct_complex: Option<usize>,
    pub distinct_real: Option<usize>,
    pub real_roots: Vec<String>,
    pub singleton: Option<String>,
    pub assigned: Option<String>,
    pub matches: Option<bool>,
}

impl From<&FiberReport> for FiberDoc {
    fn from(r: &FiberReport) -> Self {
        FiberDoc {
            point: r.point.clone(),
            real: r.real,
            fiber_poly: r.fiber_poly.clone(),
            distinct_complex: r.distinct_complex,
            distinct_real: r.distinct_real,
            real_roots: r.real_roots.clone(),
            singleton: r.singleton_text.clone(),
            assigned: r.assigned.clone(),
            matches: r.matches,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleDoc {
    pub x: String,
    pub y: String,
    pub value: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeDoc {
    pub point: String,
    /// `consistent`, `violated` or `inconclusive`.
    pub outcome: String,
    /// Branches sampled at the final radius; absent after a violation.
    pub branches: Option<usize>,
    pub sample: Option<SampleDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub job: JobSpec,
    pub curve: String,
    pub function: FunctionDoc,
    pub verdicts: Verdicts,
    pub hierarchy_consistent: bool,
    pub certificates: CertificatesDoc,
    pub conditions: Vec<ConditionDoc>,
    pub fibers: Vec<FiberDoc>,
    pub probe: Option<Vec<ProbeDoc>>,
    pub caveats: Vec<String>,
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointDoc {
    pub label: String,
    pub real: bool,
    pub class_size: usize,
    pub real_count: usize,
}

impl From<&BadPoint> for PointDoc {
    fn from(b: &BadPoint) -> Self {
        PointDoc { label: b.label(), real: b.is_real(), class_size: b.class_size(), real_count: b.real_count() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealPointDoc {
    pub index: usize,
    pub point: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FibersDocument {
    pub job: JobSpec,
    pub curve: String,
    pub function: FunctionDoc,
    pub bad_points: Vec<PointDoc>,
    pub real_points: Vec<RealPointDoc>,
    pub fibers: Vec<FiberDoc>,
    pub caveats: Vec<String>,
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub relations: Vec<String>,
    pub integral_relation: String,
    pub elimination: Vec<String>,
    pub birational: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointWitnessDoc {
    pub point: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubintegralityDoc {
    pub r_subintegral: bool,
    pub subintegral: bool,
    pub witnesses: Vec<PointWitnessDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PresentDocument {
    pub job: JobSpec,
    pub curve: String,
    pub function: FunctionDoc,
    pub integral: bool,
    pub presentation: Option<PresentationDoc>,
    pub subintegrality: Option<SubintegralityDoc>,
    pub fibers: Vec<FiberDoc>,
    pub caveats: Vec<String>,
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphismFiberDoc {
    pub point: String,
    pub real: bool,
    pub fiber: String,
    pub distinct: usize,
    pub constant: bool,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphismDocument {
    pub job: JobSpec,
    pub target: String,
    pub u: String,
    pub v: String,
    pub function: String,
    pub constant_on_real_fibers: bool,
    pub fibers: Vec<MorphismFiberDoc>,
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocusDocument {
    pub curve: String,
    pub points: Vec<PointDoc>,
    /// Complex points counted with their conjugates.
    pub closed_points: usize,
    pub real_points: usize,
}

fn function_doc(f: &CurveFunction, filled: &[usize]) -> FunctionDoc {
    FunctionDoc {
        numerator: f.p().to_string(),
        denominator: f.q().to_string(),
        values: f
            .real_points()
            .iter()
            .enumerate()
            .map(|(i, rp)| ValueDoc { index: i, point: rp.label(), value: f.value_label(i), filled: filled.contains(&i) })
            .collect(),
    }
}

fn fill_caveats(f: &CurveFunction, filled: &[usize]) -> Vec<String> {
    filled.iter().map(|&i| format!("no value was given at {}; using {}", f.real_points()[i].label(), f.value_label(i))).collect()
}

fn regularity_doc(r: &Regularity) -> (Option<String>, String) {
    match r {
        Regularity::Yes { h } => (Some(h.to_string()), format!("the function equals {h} on the curve")),
        Regularity::NotInIdeal { normal_form } => (None, format!("numerator is not in <F, q>; remainder {normal_form}")),
        Regularity::ValueMismatch { h, point } => (None, format!("equals {h} off the bad points but not at {point}")),
    }
}

fn sample_text(v: f64) -> String {
    format!("{v:.9}")
}

fn probe_docs(f: &CurveFunction, job: &JobSpec) -> Result<Vec<ProbeDoc>> {
    let schedule = job.schedule()?;
    Ok(f.real_points()
        .iter()
        .enumerate()
        .map(|(i, rp)| {
            let (outcome, branches, sample) = match continuity_probe(f, i, &schedule) {
                ProbeOutcome::Consistent { branches } => ("consistent", Some(branches), None),
                ProbeOutcome::Inconclusive => ("inconclusive", Some(0), None),
                ProbeOutcome::Violated(s) => (
                    "violated",
                    None,
                    Some(SampleDoc { x: sample_text(s.x), y: sample_text(s.y), value: sample_text(s.value), expected: sample_text(s.expected) }),
                ),
            };
            ProbeDoc { point: rp.label(), outcome: outcome.into(), branches, sample }
        })
        .collect())
}

/// Assembles the document for an already classified function.
pub fn report_document(job: &JobSpec, f: &CurveFunction, filled: &[usize], report: &ClassificationReport) -> ReportDocument {
    let (regular_witness, regularity) = regularity_doc(&report.regularity);
    let failure_witnesses = report
        .conditions
        .iter()
        .filter_map(|c| {
            c.witness.as_ref().map(|w| WitnessDoc { condition: c.index, name: c.name.into(), point: w.point.clone(), detail: w.detail.clone() })
        })
        .collect();
    let mut caveats = fill_caveats(f, filled);
    caveats.extend(report.caveats.iter().cloned());
    ReportDocument {
        job: job.clone(),
        curve: f.curve().poly().to_string(),
        function: function_doc(f, filled),
        verdicts: report.verdicts,
        hierarchy_consistent: report.hierarchy_consistent,
        certificates: CertificatesDoc {
            integral_relation: report.integral_relation.as_ref().map(MPoly::to_string),
            regular_witness,
            regularity,
            failure_witnesses,
        },
        conditions: report.conditions.iter().map(|c| ConditionDoc { index: c.index, name: c.name.into(), passed: c.passed }).collect(),
        fibers: report.fibers.iter().map(FiberDoc::from).collect(),
        probe: None,
        caveats,
        elapsed: None,
    }
}

/// Parse, validate, classify and optionally probe one job.
pub fn run_classify(job: &JobSpec) -> Result<ReportDocument> {
    let start = Instant::now();
    let curve = job.build_curve()?;
    let (f, filled) = job.build_function(&curve)?;
    let report = classify_with(&f, job.options.realness_budget)?;
    let mut doc = report_document(job, &f, &filled, &report);
    if job.options.probe {
        doc.probe = Some(probe_docs(&f, job)?);
    }
    doc.elapsed = Some(start.elapsed());
    Ok(doc)
}

/// The bad locus, the real points with their indices, and the fibre table.
pub fn run_fibers(job: &JobSpec) -> Result<FibersDocument> {
    let start = Instant::now();
    let curve = job.build_curve()?;
    let (f, filled) = job.build_function(&curve)?;
    Ok(FibersDocument {
        job: job.clone(),
        curve: curve.poly().to_string(),
        function: function_doc(&f, &filled),
        bad_points: f.bad_points().iter().map(PointDoc::from).collect(),
        real_points: f.real_points().iter().enumerate().map(|(i, rp)| RealPointDoc { index: i, point: rp.label() }).collect(),
        fibers: f.fibers()?.iter().map(FiberDoc::from).collect(),
        caveats: fill_caveats(&f, &filled),
        elapsed: Some(start.elapsed()),
    })
}

/// The ring obtained by adjoining the function, when it is integral.
pub fn run_present(job: &JobSpec) -> Result<PresentDocument> {
    let start = Instant::now();
    let curve = job.build_curve()?;
    let (f, filled) = job.build_function(&curve)?;
    let strings = |v: &[MPoly]| v.iter().map(MPoly::to_string).collect::<Vec<_>>();
    let (presentation, subintegrality) = match present_extension(&f) {
        Ok(p) => {
            let s = verify_r_subintegral(&f)?;
            (
                Some(PresentationDoc {
                    relations: strings(&p.relations),
                    integral_relation: p.integral_relation.to_string(),
                    elimination: strings(&p.elimination),
                    birational: p.birational,
                }),
                Some(SubintegralityDoc {
                    r_subintegral: s.r_subintegral,
                    subintegral: s.subintegral,
                    witnesses: s.witnesses.into_iter().map(|w| PointWitnessDoc { point: w.point, detail: w.detail }).collect(),
                }),
            )
        }
        Err(Error::NotIntegral) => (None, None),
        Err(e) => return Err(e),
    };
    Ok(PresentDocument {
        job: job.clone(),
        curve: curve.poly().to_string(),
        function: function_doc(&f, &filled),
        integral: presentation.is_some(),
        presentation,
        subintegrality,
        fibers: f.fibers()?.iter().map(FiberDoc::from).collect(),
        caveats: fill_caveats(&f, &filled),
        elapsed: Some(start.elapsed()),
    })
}

/// Whether the job's function of `w` is constant on the fibres of its
/// parametrisation over real points.
pub fn run_check_morphism(job: &JobSpec) -> Result<MorphismDocument> {
    let start = Instant::now();
    let curve = job.build_curve()?;
    let (m, p) = job.build_morphism(&curve)?;
    let check = fiber_constancy_check(&m, &p)?;
    let w = |u| MPoly::from_upoly(u, Var::T).display_with(W_NAMES);
    Ok(MorphismDocument {
        job: job.clone(),
        target: curve.poly().to_string(),
        u: w(m.u()),
        v: w(m.v()),
        function: w(&p),
        constant_on_real_fibers: check.constant_on_real_fibers,
        fibers: check
            .fibers
            .into_iter()
            .map(|f| MorphismFiberDoc { point: f.point, real: f.real, fiber: f.fiber, distinct: f.distinct, constant: f.constant, values: f.values })
            .collect(),
        elapsed: Some(start.elapsed()),
    })
}

pub fn locus_document(curve: &PlaneCurve) -> Result<LocusDocument> {
    let points = curve.singular_locus()?;
    Ok(LocusDocument {
        curve: curve.poly().to_string(),
        points: points.iter().map(PointDoc::from).collect(),
        closed_points: points.iter().map(BadPoint::class_size).sum(),
        real_points: points.iter().map(BadPoint::real_count).sum(),
    })
}
