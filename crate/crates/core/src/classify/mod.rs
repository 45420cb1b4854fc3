//! Deciding where a rational function on a curve sits in the chain
//! regular ⊂ seminormal ⊂ R-seminormal ⊂ integral, with certificates.

mod extension;
mod fiber;
mod function;
mod graph;
mod probe;
mod verdict;

pub use extension::{present_extension, verify_r_subintegral, Presentation, Subintegrality};
pub use fiber::FiberReport;
pub use function::{make_function, make_function_filling, suggest_assignments, Assignment, CurveFunction, Locator, RealPoint};
pub use graph::GraphIdeal;
pub use probe::{continuity_probe, ProbeOutcome, ProbeSample, ProbeSchedule};
pub use verdict::{
    classify, classify_with, graph_real_closed, in_kplus, in_krplus, is_integral, is_regular, ClassificationReport,
    Condition, Membership, Regularity, Verdict, Verdicts, Witness, DEFAULT_REALNESS_BUDGET,
};
