//! Human tables and the canonical machine format.

use super::demo::DemoDocument;
use super::document::{
    FiberDoc, FibersDocument, FunctionDoc, LocusDocument, MorphismDocument, PresentDocument, ProbeDoc, ReportDocument,
};
use super::job::Format;
use crate::classify::Verdict;
use crate::error::{Error, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;
use std::fmt::Write;
use std::time::Duration;

/// Plain-text rendering of a document.
pub trait Render {
    fn human(&self) -> String;
}

/// Pretty JSON with two-space indentation and a trailing newline; key order
/// is the field order of the document types.
pub fn to_machine<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialise");
    s.push('\n');
    s
}

pub fn emit<T: Serialize + Render>(doc: &T, format: Format) -> String {
    match format {
        Format::Human => doc.human(),
        Format::Machine => to_machine(doc),
    }
}

/// Reads a document back from its machine form.
pub fn parse_document<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: format!("line {}: {e}", e.line()) })
}

const MAX_CELL: usize = 64;

/// Cells longer than [`MAX_CELL`] characters keep their head and tail.
fn elide(c: &str) -> String {
    let chars: Vec<char> = c.chars().collect();
    if chars.len() <= MAX_CELL {
        return c.to_string();
    }
    let half = (MAX_CELL - 5) / 2;
    let head: String = chars[..half].iter().collect();
    let tail: String = chars[chars.len() - half..].iter().collect();
    format!("{head} ... {tail}")
}

/// Left-aligned columns separated by two spaces.
fn table(out: &mut String, indent: &str, header: &[&str], rows: &[Vec<String>]) {
    let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|c| elide(c)).collect()).collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in &rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::from(indent);
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(&format!("{c:<w$}  ", w = *w));
            }
        }
        s.trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec())).unwrap();
    for r in &rows {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect())).unwrap();
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".into(), |v| v.to_string())
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn verdict(v: Verdict) -> String {
    yes_no(v.is_yes())
}

fn head(out: &mut String, curve: &str, f: &FunctionDoc) {
    writeln!(out, "curve     {curve} = 0").unwrap();
    writeln!(out, "function  ({}) / ({})", f.numerator, f.denominator).unwrap();
    for v in &f.values {
        let note = if v.filled { "  (filled)" } else { "" };
        writeln!(out, "value     #{} {} -> {}{note}", v.index, v.point, v.value).unwrap();
    }
}

fn fiber_table(out: &mut String, fibers: &[FiberDoc]) {
    writeln!(out, "\nfibres over bad points").unwrap();
    if fibers.is_empty() {
        writeln!(out, "  none").unwrap();
        return;
    }
    let rows: Vec<Vec<String>> = fibers
        .iter()
        .map(|f| {
            vec![
                f.point.clone(),
                yes_no(f.real),
                f.fiber_poly.clone(),
                f.distinct_complex.map_or("inf".into(), |n| n.to_string()),
                opt(&f.distinct_real),
                if f.real { format!("{{{}}}", f.real_roots.join(", ")) } else { "-".into() },
                opt(&f.singleton),
                opt(&f.assigned),
                f.matches.map_or("-".into(), yes_no),
            ]
        })
        .collect();
    table(out, "  ", &["point", "real", "fibre", "complex", "real", "real roots", "singleton", "assigned", "match"], &rows);
}

fn caveats(out: &mut String, caveats: &[String]) {
    if caveats.is_empty() {
        return;
    }
    writeln!(out, "\ncaveats").unwrap();
    for c in caveats {
        writeln!(out, "  - {c}").unwrap();
    }
}

fn timing(out: &mut String, elapsed: Option<Duration>) {
    if let Some(d) = elapsed {
        writeln!(out, "\ntime      {:.1} ms", d.as_secs_f64() * 1e3).unwrap();
    }
}

fn probe_table(out: &mut String, probe: &[ProbeDoc]) {
    writeln!(out, "\ncontinuity probe").unwrap();
    let rows: Vec<Vec<String>> = probe
        .iter()
        .map(|p| {
            let detail = match &p.sample {
                Some(s) => format!("p/q = {} at ({}, {}), value {}", s.value, s.x, s.y, s.expected),
                None => p.branches.map_or(String::new(), |b| format!("{b} branches")),
            };
            vec![p.point.clone(), p.outcome.clone(), detail]
        })
        .collect();
    table(out, "  ", &["point", "outcome", "detail"], &rows);
}

impl Render for ReportDocument {
    fn human(&self) -> String {
        let mut out = String::new();
        head(&mut out, &self.curve, &self.function);
        let v = &self.verdicts;
        writeln!(out).unwrap();
        let rows = vec![
            vec!["regular".into(), verdict(v.regular)],
            vec!["k_plus".into(), verdict(v.k_plus)],
            vec!["k_r_plus".into(), verdict(v.k_r_plus)],
            vec!["integral".into(), verdict(v.integral)],
        ];
        table(&mut out, "", &["class", "member"], &rows);
        if !self.hierarchy_consistent {
            writeln!(out, "warning: verdicts violate the inclusion chain").unwrap();
        }
        let c = &self.certificates;
        writeln!(out, "\nintegral relation  {}", opt(&c.integral_relation)).unwrap();
        writeln!(out, "regularity         {}", c.regularity).unwrap();
        writeln!(out, "\nconditions").unwrap();
        let rows: Vec<Vec<String>> = self
            .conditions
            .iter()
            .map(|k| {
                let w = c.failure_witnesses.iter().find(|w| w.condition == k.index);
                let detail = w.map_or(String::new(), |w| format!("at {}: {}", w.point, w.detail));
                vec![k.index.to_string(), k.name.clone(), if k.passed { "pass" } else { "FAIL" }.into(), detail]
            })
            .collect();
        table(&mut out, "  ", &["#", "condition", "result", "witness"], &rows);
        fiber_table(&mut out, &self.fibers);
        if let Some(p) = &self.probe {
            probe_table(&mut out, p);
        }
        caveats(&mut out, &self.caveats);
        timing(&mut out, self.elapsed);
        out
    }
}

impl Render for FibersDocument {
    fn human(&self) -> String {
        let mut out = String::new();
        head(&mut out, &self.curve, &self.function);
        writeln!(out, "\nbad points").unwrap();
        let rows: Vec<Vec<String>> =
            self.bad_points.iter().map(|p| vec![p.label.clone(), yes_no(p.real), p.class_size.to_string(), p.real_count.to_string()]).collect();
        table(&mut out, "  ", &["point", "real", "complex points", "real points"], &rows);
        writeln!(out, "\nreal bad points").unwrap();
        let rows: Vec<Vec<String>> = self.real_points.iter().map(|p| vec![p.index.to_string(), p.point.clone()]).collect();
        table(&mut out, "  ", &["index", "point"], &rows);
        fiber_table(&mut out, &self.fibers);
        caveats(&mut out, &self.caveats);
        timing(&mut out, self.elapsed);
        out
    }
}

impl Render for PresentDocument {
    fn human(&self) -> String {
        let mut out = String::new();
        head(&mut out, &self.curve, &self.function);
        match (&self.presentation, &self.subintegrality) {
            (Some(p), Some(s)) => {
                writeln!(out, "\nrelations (lex, t > x > y)").unwrap();
                for r in &p.relations {
                    writeln!(out, "  {r}").unwrap();
                }
                writeln!(out, "\nintegral relation  {}", p.integral_relation).unwrap();
                writeln!(out, "elimination        {}", p.elimination.join(", ")).unwrap();
                writeln!(out, "birational         {}", yes_no(p.birational)).unwrap();
                writeln!(out, "r-subintegral      {}", yes_no(s.r_subintegral)).unwrap();
                writeln!(out, "subintegral        {}", yes_no(s.subintegral)).unwrap();
                for w in &s.witnesses {
                    writeln!(out, "  at {}: {}", w.point, w.detail).unwrap();
                }
            }
            _ => writeln!(out, "\nnot integral: no relation monic in t, so no finite presentation").unwrap(),
        }
        fiber_table(&mut out, &self.fibers);
        caveats(&mut out, &self.caveats);
        timing(&mut out, self.elapsed);
        out
    }
}

impl Render for MorphismDocument {
    fn human(&self) -> String {
        let mut out = String::new();
        writeln!(out, "target    {} = 0", self.target).unwrap();
        writeln!(out, "map       w -> ({}, {})", self.u, self.v).unwrap();
        writeln!(out, "function  {}", self.function).unwrap();
        writeln!(out, "constant on real fibres  {}", yes_no(self.constant_on_real_fibers)).unwrap();
        writeln!(out, "\nfibres with several points").unwrap();
        if self.fibers.is_empty() {
            writeln!(out, "  none").unwrap();
        } else {
            let rows: Vec<Vec<String>> = self
                .fibers
                .iter()
                .map(|f| vec![f.point.clone(), yes_no(f.real), f.fiber.clone(), f.distinct.to_string(), yes_no(f.constant), f.values.join(", ")])
                .collect();
            table(&mut out, "  ", &["point", "real", "fibre", "points", "constant", "values"], &rows);
        }
        timing(&mut out, self.elapsed);
        out
    }
}

impl Render for LocusDocument {
    fn human(&self) -> String {
        let mut out = String::new();
        writeln!(out, "curve     {} = 0", self.curve).unwrap();
        writeln!(out, "singular points: {} classes, {} complex points, {} real", self.points.len(), self.closed_points, self.real_points).unwrap();
        let rows: Vec<Vec<String>> =
            self.points.iter().map(|p| vec![p.label.clone(), yes_no(p.real), p.class_size.to_string(), p.real_count.to_string()]).collect();
        table(&mut out, "  ", &["point", "real", "complex points", "real points"], &rows);
        out
    }
}

impl Render for DemoDocument {
    fn human(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            writeln!(out, "== {} ({})", e.name, if e.agrees { "as expected" } else { "UNEXPECTED" }).unwrap();
            out.push_str(&e.report.human());
            writeln!(out).unwrap();
        }
        let l = &self.singular_locus;
        writeln!(out, "== {} ({})", l.name, if l.agrees { "as expected" } else { "UNEXPECTED" }).unwrap();
        out.push_str(&l.report.human());
        out
    }
}
