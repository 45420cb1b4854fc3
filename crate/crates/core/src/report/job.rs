//! Job descriptions, read from JSON files or assembled from flags, and
//! their conversion into validated inputs.

use crate::arith::rational::Q;
use crate::arith::upoly::UPoly;
use crate::classify::{make_function, make_function_filling, Assignment, CurveFunction, Locator, ProbeSchedule, DEFAULT_REALNESS_BUDGET};
use crate::curve::{make_curve, PlaneCurve, PresentedMorphism};
use crate::error::{Error, Result};
use crate::groebner::{MPoly, Var};
use crate::parse::parse_with;
use serde::{Deserialize, Serialize};

/// Variable name for the parameter of a morphism from the line.
pub const W: &[(&str, Var)] = &[("w", Var::T)];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Human,
    Machine,
}

/// A point given by rational coordinates or by its index among the real
/// bad points.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointSpec {
    Index(usize),
    Coords([String; 2]),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AssignmentSpec {
    pub at: PointSpec,
    /// Polynomial in the point's coordinates `x`, `y`.
    pub value: String,
}

/// `w -> (u(w), v(w))` onto the job's curve, with a function of `w`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphismSpec {
    pub u: String,
    pub v: String,
    pub function: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScheduleSpec {
    pub initial_radius: String,
    pub shrink: String,
    pub steps: usize,
}

impl Default for ScheduleSpec {
    fn default() -> Self {
        ScheduleSpec { initial_radius: "1/10".into(), shrink: "1/10".into(), steps: 6 }
    }
}

fn default_budget() -> usize {
    DEFAULT_REALNESS_BUDGET
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JobOptions {
    #[serde(default = "default_budget")]
    pub realness_budget: usize,
    #[serde(default)]
    pub probe: bool,
    #[serde(default)]
    pub probe_schedule: ScheduleSpec,
    /// Fill unassigned real bad points with suggested values.
    #[serde(default)]
    pub fill_missing: bool,
    #[serde(default)]
    pub format: Format,
}

impl Default for JobOptions {
    fn default() -> Self {
        JobOptions { realness_budget: DEFAULT_REALNESS_BUDGET, probe: false, probe_schedule: ScheduleSpec::default(), fill_missing: false, format: Format::Human }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JobSpec {
    pub curve: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numerator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator: Option<String>,
    #[serde(default)]
    pub assignments: Vec<AssignmentSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphism: Option<MorphismSpec>,
    #[serde(default)]
    pub options: JobOptions,
}

fn field(text: &str, what: &str, vars: &[(&str, Var)]) -> Result<MPoly> {
    parse_with(text, vars).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse { pos, msg: format!("{msg} (in {what})") },
        other => other,
    })
}

fn rational(text: &str, what: &str) -> Result<Q> {
    field(text, what, crate::parse::XY)?
        .constant_value()
        .ok_or_else(|| Error::InvalidAssignment(format!("{what} must be a rational number, got {text}")))
}

impl JobSpec {
    pub fn function(curve: &str, numerator: &str, denominator: &str) -> Self {
        JobSpec {
            curve: curve.into(),
            numerator: Some(numerator.into()),
            denominator: Some(denominator.into()),
            assignments: Vec::new(),
            morphism: None,
            options: JobOptions::default(),
        }
    }

    /// Adds a value at rational coordinates.
    pub fn at(mut self, x: &str, y: &str, value: &str) -> Self {
        self.assignments.push(AssignmentSpec { at: PointSpec::Coords([x.into(), y.into()]), value: value.into() });
        self
    }

    pub fn build_curve(&self) -> Result<PlaneCurve> {
        make_curve(&field(&self.curve, "curve", crate::parse::XY)?)
    }

    pub fn numerator_poly(&self) -> Result<MPoly> {
        let text = self.numerator.as_deref().ok_or_else(|| Error::Precondition("the job has no numerator".into()))?;
        field(text, "numerator", crate::parse::XY)
    }

    pub fn denominator_poly(&self) -> Result<MPoly> {
        self.denominator.as_deref().map_or(Ok(MPoly::one()), |d| field(d, "denominator", crate::parse::XY))
    }

    pub fn build_assignments(&self) -> Result<Vec<Assignment>> {
        self.assignments
            .iter()
            .map(|a| {
                let at = match &a.at {
                    PointSpec::Index(i) => Locator::Index(*i),
                    PointSpec::Coords([x, y]) => Locator::Coords(rational(x, "x coordinate")?, rational(y, "y coordinate")?),
                };
                Ok(Assignment { at, value: field(&a.value, "assigned value", crate::parse::XY)? })
            })
            .collect()
    }

    /// The validated function and the indices of real points whose values
    /// were filled in.
    pub fn build_function(&self, curve: &PlaneCurve) -> Result<(CurveFunction, Vec<usize>)> {
        let (p, q) = (self.numerator_poly()?, self.denominator_poly()?);
        let assignments = self.build_assignments()?;
        if self.options.fill_missing {
            make_function_filling(curve, &p, &q, &assignments)
        } else {
            Ok((make_function(curve, &p, &q, &assignments)?, Vec::new()))
        }
    }

    pub fn build_morphism(&self, curve: &PlaneCurve) -> Result<(PresentedMorphism, UPoly<Q>)> {
        let m = self.morphism.as_ref().ok_or_else(|| Error::Precondition("the job has no morphism".into()))?;
        let u = field(&m.u, "morphism u", W)?;
        let v = field(&m.v, "morphism v", W)?;
        let p = field(&m.function, "morphism function", W)?;
        let p = p.to_upoly(Var::T).expect("parsed in w only");
        Ok((PresentedMorphism::from_polys(&u, &v, curve)?, p))
    }

    pub fn schedule(&self) -> Result<ProbeSchedule> {
        let s = &self.options.probe_schedule;
        let initial_radius = rational(&s.initial_radius, "probe radius")?;
        let shrink = rational(&s.shrink, "probe shrink factor")?;
        let zero = Q::from_integer(0.into());
        let one = Q::from_integer(1.into());
        if initial_radius <= zero || shrink <= zero || shrink >= one || s.steps < 2 {
            return Err(Error::Precondition("probe schedule needs radius > 0, 0 < shrink < 1 and at least 2 steps".into()));
        }
        Ok(ProbeSchedule { initial_radius, shrink, steps: s.steps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let text = r#"{"curve": "y^2 - x^3", "numerator": "y", "denominator": "x",
            "assignments": [{"at": ["0", "0"], "value": "0"}, {"at": 1, "value": "x"}]}"#;
        let job: JobSpec = serde_json::from_str(text).unwrap();
        assert_eq!(job.assignments[0].at, PointSpec::Coords(["0".into(), "0".into()]));
        assert_eq!(job.assignments[1].at, PointSpec::Index(1));
        assert_eq!(job.options, JobOptions::default());
        let back: JobSpec = serde_json::from_str(&serde_json::to_string(&job).unwrap()).unwrap();
        assert_eq!(back, job);
    }

    #[test]
    fn building() {
        let job = JobSpec::function("y^2 - x^3", "y", "x").at("0", "0", "0");
        let c = job.build_curve().unwrap();
        let (f, filled) = job.build_function(&c).unwrap();
        assert_eq!(f.real_points().len(), 1);
        assert!(filled.is_empty());
        let mut job = JobSpec::function("y^2 - x^3", "y", "x");
        assert!(matches!(job.build_function(&c), Err(Error::MissingAssignment(_))));
        job.options.fill_missing = true;
        assert_eq!(job.build_function(&c).unwrap().1, [0]);
        let job = JobSpec::function("y^2 - x^3", "y", "x").at("x", "0", "0");
        assert!(matches!(job.build_assignments(), Err(Error::InvalidAssignment(_))));
        let job = JobSpec::function("y^2 - x^3", "y +", "x");
        match job.numerator_poly() {
            Err(Error::Parse { msg, .. }) => assert!(msg.ends_with("(in numerator)"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn morphism() {
        let mut job = JobSpec::function("y^2 - x^3", "y", "x");
        job.morphism = Some(MorphismSpec { u: "w^2".into(), v: "w^3".into(), function: "w".into() });
        let c = job.build_curve().unwrap();
        let (_, p) = job.build_morphism(&c).unwrap();
        assert_eq!(p.degree(), Some(1));
    }
}
