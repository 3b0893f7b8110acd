//! Job dispatch for the command-line tool: load an input file, run one
//! computation, and render the answer as text or a single JSON object.

mod corpus;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde_json::{json, Value};
use thiserror::Error;

use crate::dispatch_field;
use crate::error::ParseError;
use crate::field::FieldSpec;
use crate::groebner::{
    buchberger, initial_ideal, initial_ideal_stability, parse_ideal, specialize, GroebnerError, IdealFile,
    MonomialIdeal, MonomialOrder,
};
use crate::simplicial::{
    buchsbaum_verdict, cohen_macaulay_witness, complex_of_ideal, dual_graph, parse_complex, reduced_homology,
    sr_ideal, BuchsbaumVerdict, SimplicialComplex, SimplicialError,
};
use crate::sqfree::{ccm_verdict, lyubeznik_table, SqfreeError, MAX_MODULE_VARS};

pub use corpus::{run_corpus, CorpusError, CorpusSummary, CriterionResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

/// Primes used by `stability` when none are given.
pub const DEFAULT_PRIMES: [u32; 5] = [2, 3, 5, 7, 11];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Homology,
    Cm,
    Buchsbaum,
    Ccm,
    Lyubeznik,
    DualGraph,
    Groebner,
    InitialIdeal,
    Radical,
    Stability,
    SrIdeal,
    ComplexOfIdeal,
}

impl Command {
    pub const ALL: [Command; 12] = [
        Command::Homology,
        Command::Cm,
        Command::Buchsbaum,
        Command::Ccm,
        Command::Lyubeznik,
        Command::DualGraph,
        Command::Groebner,
        Command::InitialIdeal,
        Command::Radical,
        Command::Stability,
        Command::SrIdeal,
        Command::ComplexOfIdeal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Homology => "homology",
            Command::Cm => "cm",
            Command::Buchsbaum => "buchsbaum",
            Command::Ccm => "ccm",
            Command::Lyubeznik => "lyubeznik",
            Command::DualGraph => "dual-graph",
            Command::Groebner => "groebner",
            Command::InitialIdeal => "initial-ideal",
            Command::Radical => "radical",
            Command::Stability => "stability",
            Command::SrIdeal => "sr-ideal",
            Command::ComplexOfIdeal => "complex-of-ideal",
        }
    }

    /// Whether the command reads a simplicial complex (ideal files are converted).
    pub fn takes_complex(self) -> bool {
        matches!(
            self,
            Command::Homology
                | Command::Cm
                | Command::Buchsbaum
                | Command::Ccm
                | Command::Lyubeznik
                | Command::DualGraph
                | Command::SrIdeal
        )
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown command `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
}

/// One invocation. `field: None` means: the file's `char:` line if present, else `QQ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub input: PathBuf,
    pub field: Option<FieldSpec>,
    pub order: MonomialOrder,
    pub output: OutputMode,
    pub primes: Vec<u32>,
}

impl JobSpec {
    pub fn new(command: Command, input: impl Into<PathBuf>) -> Self {
        JobSpec {
            command,
            input: input.into(),
            field: None,
            order: MonomialOrder::default(),
            output: OutputMode::Text,
            primes: DEFAULT_PRIMES.to_vec(),
        }
    }

    pub fn with_field(mut self, field: FieldSpec) -> Self {
        self.field = Some(field);
        self
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }

    pub fn json(mut self) -> Self {
        self.output = OutputMode::Json;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JobError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl JobError {
    pub fn exit_code(&self) -> i32 {
        match self {
            JobError::Io { .. } | JobError::Parse(_) => EXIT_PARSE,
            JobError::Precondition(_) => EXIT_PRECONDITION,
            JobError::Internal(_) => EXIT_FAILURE,
        }
    }
}

impl From<SimplicialError> for JobError {
    fn from(e: SimplicialError) -> Self {
        JobError::Precondition(e.to_string())
    }
}

impl From<GroebnerError> for JobError {
    fn from(e: GroebnerError) -> Self {
        JobError::Precondition(e.to_string())
    }
}

impl From<SqfreeError> for JobError {
    fn from(e: SqfreeError) -> Self {
        match e {
            SqfreeError::VoidComplex | SqfreeError::TooManyVariables(_) | SqfreeError::ZeroModule => {
                JobError::Precondition(e.to_string())
            }
            other => JobError::Internal(other.to_string()),
        }
    }
}

/// A computed answer. `result` and `witness` are the machine-readable payload;
/// the text rendering is derived from the same values.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: Command,
    pub input: String,
    pub field: FieldSpec,
    pub result: Value,
    pub witness: Value,
    pub detail: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command.name(),
            "input": self.input,
            "field": self.field,
            "result": self.result,
            "witness": self.witness,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "command: {}\ninput: {}\nfield: {}\nresult: {}\nwitness: {}\n",
            self.command,
            self.input,
            self.field,
            render(&self.result),
            render(&self.witness)
        );
        for line in &self.detail {
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Exit status plus the text destined for standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(spec: &JobSpec) -> Outcome {
    match execute(spec) {
        Ok(report) => Outcome {
            code: EXIT_OK,
            stdout: match spec.output {
                OutputMode::Json => format!("{}\n", report.to_json()),
                OutputMode::Text => report.to_text(),
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Runs a job and returns the report without rendering.
pub fn execute(spec: &JobSpec) -> Result<Report, JobError> {
    let text = std::fs::read_to_string(&spec.input).map_err(|e| JobError::Io {
        path: spec.input.display().to_string(),
        message: e.to_string(),
    })?;
    execute_text(spec.command, &text, &spec.input, spec.field, spec.order, &spec.primes)
}

pub(crate) fn execute_text(
    command: Command,
    text: &str,
    input: &Path,
    field: Option<FieldSpec>,
    order: MonomialOrder,
    primes: &[u32],
) -> Result<Report, JobError> {
    let input = input.display().to_string();
    if command.takes_complex() {
        let complex = load_complex(text)?;
        let field = field.unwrap_or_default();
        return complex_job(command, &complex, field, input);
    }
    let file = parse_ideal(text)?;
    let field = field.or(file.characteristic).unwrap_or_default();
    ideal_job(command, &file, field, order, primes, input)
}

/// Reads a complex file, or a radical monomial ideal file (`vars:` header) via its complex.
pub fn load_complex(text: &str) -> Result<SimplicialComplex, JobError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    if first.is_some_and(|l| l.starts_with("vars:")) {
        let file = parse_ideal(text)?;
        let monomial = file
            .ideal
            .as_monomial_ideal()
            .ok_or_else(|| JobError::Precondition("ideal input for a complex command must be monomial".into()))?;
        Ok(complex_of_ideal(&monomial)?)
    } else {
        Ok(parse_complex(text)?)
    }
}

fn faces_json(faces: &[crate::subset::Subset]) -> Value {
    json!(faces.iter().map(|f| f.elements()).collect::<Vec<_>>())
}

fn require_module_size(complex: &SimplicialComplex) -> Result<(), JobError> {
    if complex.vertex_count() > MAX_MODULE_VARS {
        return Err(SqfreeError::TooManyVariables(complex.vertex_count()).into());
    }
    Ok(())
}

fn complex_job(command: Command, complex: &SimplicialComplex, field: FieldSpec, input: String) -> Result<Report, JobError> {
    let mut detail = Vec::new();
    let (result, witness) = match command {
        Command::Homology => {
            let h = reduced_homology(complex, field)?;
            for (k, d) in h.dims.iter().enumerate() {
                detail.push(format!("H~_{} = {d}", k as isize - 1));
            }
            (json!(h.dims), Value::Null)
        }
        Command::Cm => {
            if complex.is_void() {
                return Err(SimplicialError::VoidComplex.into());
            }
            let w = cohen_macaulay_witness(complex, field);
            (json!(w.is_none()), w.map_or(Value::Null, |f| json!(f.elements())))
        }
        Command::Buchsbaum => match buchsbaum_verdict(complex, field) {
            BuchsbaumVerdict::Buchsbaum => (json!(true), Value::Null),
            BuchsbaumVerdict::Void => return Err(SimplicialError::VoidComplex.into()),
            BuchsbaumVerdict::NotPure => (json!(false), json!("not pure")),
            BuchsbaumVerdict::FailingLink(f) => (json!(false), json!(f.elements())),
        },
        Command::Ccm => {
            require_module_size(complex)?;
            let v = ccm_verdict(complex, field)?;
            if let Some(l) = v.lambda_23 {
                detail.push(format!("lambda_2,3 = {l}"));
            }
            (json!(v.ccm), json!(v.witness))
        }
        Command::Lyubeznik => {
            require_module_size(complex)?;
            let t = lyubeznik_table(complex, field)?;
            detail.push(format!("trivial: {}", t.is_trivial()));
            detail.extend(t.to_string().lines().map(str::to_owned));
            (serde_json::to_value(&t).expect("plain data"), Value::Null)
        }
        Command::DualGraph => {
            let g = dual_graph(complex);
            detail.push(format!("components: {}", g.components));
            (g.to_json(), Value::Null)
        }
        Command::SrIdeal => {
            let j = sr_ideal(complex);
            detail.push(j.to_string());
            (json!(j.to_strings()), Value::Null)
        }
        _ => unreachable!("ideal commands are dispatched separately"),
    };
    Ok(Report {
        command,
        input,
        field,
        result,
        witness,
        detail,
    })
}

fn initial_over(file: &IdealFile, field: FieldSpec, order: MonomialOrder) -> Result<MonomialIdeal, JobError> {
    Ok(dispatch_field!(field, f => initial_ideal(&specialize(&file.ideal, f)?, order))?)
}

fn ideal_job(
    command: Command,
    file: &IdealFile,
    field: FieldSpec,
    order: MonomialOrder,
    primes: &[u32],
    input: String,
) -> Result<Report, JobError> {
    let mut detail = Vec::new();
    let mut reported_field = field;
    let (result, witness) = match command {
        Command::Groebner => {
            let basis: Vec<String> = dispatch_field!(field, f => {
                buchberger(&specialize(&file.ideal, f)?, order)?
                    .iter()
                    .map(|g| g.to_string())
                    .collect()
            });
            detail.extend(basis.iter().cloned());
            (json!(basis), Value::Null)
        }
        Command::InitialIdeal => {
            let j = initial_over(file, field, order)?;
            detail.push(j.to_string());
            (json!(j.to_strings()), Value::Null)
        }
        Command::Radical => {
            let j = initial_over(file, field, order)?;
            let bad = j.first_non_squarefree().map(|m| m.to_string());
            detail.push(format!("initial ideal: {j}"));
            (json!(bad.is_none()), json!(bad))
        }
        Command::ComplexOfIdeal => {
            let j = file
                .ideal
                .as_monomial_ideal()
                .ok_or_else(|| JobError::Precondition("complex-of-ideal needs a monomial ideal".into()))?;
            let c = complex_of_ideal(&j)?;
            detail.push(c.to_string().trim_end().to_owned());
            (faces_json(c.facets()), Value::Null)
        }
        Command::Stability => {
            reported_field = FieldSpec::RATIONALS;
            let bad: Vec<u32> = primes.iter().copied().filter(|&p| FieldSpec::new(p as u64).map_or(true, |s| s.is_rationals())).collect();
            if !bad.is_empty() {
                return Err(JobError::Precondition(format!("not primes: {bad:?}")));
            }
            let report = initial_ideal_stability(&file.ideal, order, primes)?;
            detail.push(format!("reference: {}", report.reference));
            detail.push(format!("agreeing: {:?}", report.agreeing()));
            detail.push(format!("disagreeing: {:?}", report.disagreeing()));
            detail.push(format!("errored: {:?}", report.errored()));
            let result = json!({
                "reference": report.reference.to_strings(),
                "all_agree": report.all_agree(),
                "agreeing": report.agreeing(),
                "disagreeing": report.disagreeing(),
                "errored": report.errored(),
            });
            (result, serde_json::to_value(&report.outcomes).expect("plain data"))
        }
        _ => unreachable!("complex commands are dispatched separately"),
    };
    Ok(Report {
        command,
        input,
        field: reported_field,
        result,
        witness,
        detail,
    })
}
