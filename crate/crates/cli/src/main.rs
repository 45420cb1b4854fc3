//! `seminorm`: classify rational functions on plane curves from the command
//! line.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use seminorm_core::report::{
    emit, run_check_morphism, run_classify, run_demo, run_fibers, run_present, AssignmentSpec, Format, JobSpec, MorphismSpec, PointSpec,
    Render,
};
use seminorm_core::Error;
use serde::Serialize;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "seminorm", version, about = "Decide whether p/q on a real plane curve is regular, seminormal, R-seminormal or integral")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verdicts, certificates and fibre table for one function.
    Classify(JobArgs),
    /// Bad points, their indices and the fibres of the graph closure.
    Fibers(JobArgs),
    /// Relations of the ring generated by the function and its fibre checks.
    Present(JobArgs),
    /// Fibre constancy of a function of w along w -> (u(w), v(w)).
    CheckMorphism {
        #[command(flatten)]
        job: JobArgs,
        /// First coordinate of the map, a polynomial in w.
        #[arg(long)]
        u: Option<String>,
        /// Second coordinate of the map, a polynomial in w.
        #[arg(long)]
        v: Option<String>,
        /// Function on the source, a polynomial in w.
        #[arg(long = "map-function")]
        map_function: Option<String>,
    },
    /// Replay the built-in corpus of worked examples.
    Demo {
        #[arg(long, value_enum, default_value = "human")]
        format: FormatArg,
        #[arg(long, overrides_with = "no_probe")]
        probe: bool,
        #[arg(long = "no-probe")]
        no_probe: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Machine,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Human => Format::Human,
            FormatArg::Machine => Format::Machine,
        }
    }
}

#[derive(Args)]
struct JobArgs {
    /// JSON job file, or `-` for stdin; an array of jobs with --batch.
    #[arg(long)]
    input: Option<String>,
    /// Curve equation F(x, y).
    #[arg(long)]
    curve: Option<String>,
    /// Numerator p(x, y).
    #[arg(long)]
    num: Option<String>,
    /// Denominator q(x, y); defaults to 1.
    #[arg(long)]
    den: Option<String>,
    /// Value at a real bad point: `a,b=EXPR` for rational coordinates or
    /// `#i=EXPR` for the i-th real bad point. EXPR may use x and y.
    #[arg(long = "value")]
    values: Vec<String>,
    /// Use suggested values at real bad points left unassigned.
    #[arg(long)]
    fill_missing: bool,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Samples tried per component when certifying realness.
    #[arg(long)]
    realness_budget: Option<usize>,
    /// Run the numeric continuity probe at each real bad point.
    #[arg(long, overrides_with = "no_probe")]
    probe: bool,
    #[arg(long = "no-probe")]
    no_probe: bool,
    /// Treat --input as an array of jobs, classified in parallel.
    #[arg(long, requires = "input")]
    batch: bool,
}

#[derive(Serialize)]
struct ErrorBody {
    code: &'static str,
    message: String,
}

#[derive(Serialize)]
struct ErrorDoc {
    error: ErrorBody,
}

impl ErrorDoc {
    fn new(code: &'static str, message: String) -> Self {
        ErrorDoc { error: ErrorBody { code, message } }
    }
}

impl From<&Error> for ErrorDoc {
    fn from(e: &Error) -> Self {
        ErrorDoc::new(e.code(), e.to_string())
    }
}

impl Render for ErrorDoc {
    fn human(&self) -> String {
        format!("error[{}]: {}\n", self.error.code, self.error.message)
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum Item<T> {
    Ok(T),
    Err(ErrorDoc),
}

fn parse_value(text: &str) -> Result<AssignmentSpec, ErrorDoc> {
    let bad = || ErrorDoc::new("E_USAGE", format!("cannot read --value {text:?}; expected a,b=EXPR or #i=EXPR"));
    let (loc, value) = text.split_once('=').ok_or_else(bad)?;
    let at = match loc.trim().strip_prefix('#') {
        Some(i) => PointSpec::Index(i.trim().parse().map_err(|_| bad())?),
        None => {
            let (a, b) = loc.split_once(',').ok_or_else(bad)?;
            PointSpec::Coords([a.trim().into(), b.trim().into()])
        }
    };
    Ok(AssignmentSpec { at, value: value.trim().into() })
}

fn read_input(path: &str) -> Result<String, ErrorDoc> {
    let mut text = String::new();
    let res = if path == "-" { std::io::stdin().read_to_string(&mut text).map(|_| ()) } else { std::fs::read_to_string(path).map(|t| text = t) };
    res.map_err(|e| ErrorDoc::new("E_IO", format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn json_error(e: serde_json::Error) -> ErrorDoc {
    ErrorDoc::new("E_JOB", format!("invalid job file at line {} column {}: {e}", e.line(), e.column()))
}

impl JobArgs {
    /// Flags given on the command line override the job file.
    fn apply(&self, job: &mut JobSpec) -> Result<(), ErrorDoc> {
        if let Some(c) = &self.curve {
            job.curve = c.clone();
        }
        if let Some(n) = &self.num {
            job.numerator = Some(n.clone());
        }
        if let Some(d) = &self.den {
            job.denominator = Some(d.clone());
        }
        for v in &self.values {
            job.assignments.push(parse_value(v)?);
        }
        job.options.fill_missing |= self.fill_missing;
        if let Some(f) = self.format {
            job.options.format = f.into();
        }
        if let Some(b) = self.realness_budget {
            job.options.realness_budget = b;
        }
        if self.probe {
            job.options.probe = true;
        }
        if self.no_probe {
            job.options.probe = false;
        }
        Ok(())
    }

    fn jobs(&self) -> Result<Vec<JobSpec>, ErrorDoc> {
        let mut jobs = match &self.input {
            Some(path) => {
                let text = read_input(path)?;
                if self.batch {
                    serde_json::from_str::<Vec<JobSpec>>(&text).map_err(json_error)?
                } else {
                    vec![serde_json::from_str::<JobSpec>(&text).map_err(json_error)?]
                }
            }
            None => {
                let curve = self.curve.clone().ok_or_else(|| ErrorDoc::new("E_USAGE", "give --curve or --input".into()))?;
                vec![JobSpec { curve, numerator: None, denominator: None, assignments: Vec::new(), morphism: None, options: Default::default() }]
            }
        };
        for job in &mut jobs {
            self.apply(job)?;
        }
        Ok(jobs)
    }

    fn format(&self, jobs: &[JobSpec]) -> Format {
        self.format.map(Format::from).or(jobs.first().map(|j| j.options.format)).unwrap_or_default()
    }
}

fn usage_failure(e: ErrorDoc, format: Format) -> ExitCode {
    match format {
        Format::Human => eprint!("{}", e.human()),
        Format::Machine => print!("{}", emit(&e, Format::Machine)),
    }
    ExitCode::from(2)
}

/// Runs every job (in parallel for a batch) and prints the results in
/// input order. Any failed job makes the exit code 2.
fn run_jobs<T, F>(args: &JobArgs, run: F) -> ExitCode
where
    T: Serialize + Render + Send,
    F: Fn(&JobSpec) -> Result<T, Error> + Sync,
{
    let fallback = args.format.map(Format::from).unwrap_or_default();
    let jobs = match args.jobs() {
        Ok(j) => j,
        Err(e) => return usage_failure(e, fallback),
    };
    let format = args.format(&jobs);
    let results: Vec<Result<T, Error>> = jobs.par_iter().map(&run).collect();
    let failed = results.iter().any(Result::is_err);
    if args.batch {
        let items: Vec<Item<T>> = results.into_iter().map(|r| r.map_or_else(|e| Item::Err(ErrorDoc::from(&e)), Item::Ok)).collect();
        match format {
            Format::Machine => print!("{}", seminorm_core::report::to_machine(&items)),
            Format::Human => {
                for (i, item) in items.iter().enumerate() {
                    println!("== job {i}");
                    match item {
                        Item::Ok(doc) => print!("{}", doc.human()),
                        Item::Err(e) => print!("{}", e.human()),
                    }
                }
            }
        }
    } else {
        match results.into_iter().next().expect("one job") {
            Ok(doc) => print!("{}", emit(&doc, format)),
            Err(e) => return usage_failure(ErrorDoc::from(&e), format),
        }
    }
    if failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify(args) => run_jobs(&args, run_classify),
        Command::Fibers(args) => run_jobs(&args, run_fibers),
        Command::Present(args) => run_jobs(&args, run_present),
        Command::CheckMorphism { job, u, v, map_function } => {
            let (u, v, function) = (u, v, map_function);
            run_jobs(&job, move |base: &JobSpec| {
                let mut request = base.clone();
                let mut m = request.morphism.take().unwrap_or(MorphismSpec { u: String::new(), v: String::new(), function: "w".into() });
                if let Some(u) = &u {
                    m.u = u.clone();
                }
                if let Some(v) = &v {
                    m.v = v.clone();
                }
                if let Some(f) = &function {
                    m.function = f.clone();
                }
                if m.u.is_empty() || m.v.is_empty() {
                    return Err(Error::Precondition("check-morphism needs --u and --v (or a morphism in the job file)".into()));
                }
                request.morphism = Some(m);
                run_check_morphism(&request)
            })
        }
        Command::Demo { format, probe, no_probe } => match run_demo(probe && !no_probe) {
            Ok(doc) => {
                print!("{}", emit(&doc, format.into()));
                if doc.agrees() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => usage_failure(ErrorDoc::from(&e), format.into()),
        },
    }
}
