//! Jobs, report documents, their human and machine renderings, and the
//! built-in demo corpus.

mod demo;
mod document;
mod job;
mod render;

pub use demo::{locus_agrees, run_demo, CorpusEntry, DemoDocument, DemoEntry, LocusEntry, CORPUS, SINGULAR_CURVE, SINGULAR_CURVE_NON_REAL, SINGULAR_CURVE_REAL};
pub use document::{
    locus_document, report_document, run_check_morphism, run_classify, run_fibers, run_present, CertificatesDoc, ConditionDoc, FiberDoc,
    FibersDocument, FunctionDoc, LocusDocument, MorphismDocument, MorphismFiberDoc, PointDoc, PointWitnessDoc, PresentDocument,
    PresentationDoc, ProbeDoc, RealPointDoc, ReportDocument, SampleDoc, SubintegralityDoc, ValueDoc, WitnessDoc,
};
pub use job::{AssignmentSpec, Format, JobOptions, JobSpec, MorphismSpec, PointSpec, ScheduleSpec, W};
pub use render::{emit, parse_document, to_machine, Render};
