//! Regression corpus: TOML manifests naming input files, commands and expected
//! JSON fragments, plus built-in property checks over listed complexes.
//!
//! ```toml
//! [[case]]
//! name = "determinantal initial ideal"
//! criterion = 1
//! command = "initial-ideal"
//! input = "determinantal.ideal"
//! expect = [{ pointer = "/result", value = ["x2*x4", "x3*x4", "x3*x5"] }]
//!
//! [[check]]
//! name = "Hochster degree-zero formula"
//! criterion = 9
//! kind = "hochster"
//! inputs = ["simply.complex"]
//! chars = [0, 2, 5]
//! ```

use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;
use thiserror::Error;

use super::{execute_text, load_complex, Command, JobError};
use crate::dispatch_field;
use crate::field::{Field, FieldSpec};
use crate::groebner::MonomialOrder;
use crate::simplicial::{reduced_homology, SimplicialComplex};
use crate::sqfree::{
    depth, ext_dual, ext_duals, is_ccm, lyubeznik_consistency, sr_module, SquarefreeModule,
};
use crate::subset::Subset;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus directory {0} does not exist")]
    MissingDir(PathBuf),
    #[error("corpus directory {0} holds no manifest")]
    Empty(PathBuf),
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("bad manifest {path}: {message}")]
    Manifest { path: PathBuf, message: String },
    #[error("missing corpus file {0}")]
    MissingInput(PathBuf),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    #[serde(default, rename = "case")]
    cases: Vec<CaseSpec>,
    #[serde(default, rename = "check")]
    checks: Vec<CheckSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CaseSpec {
    name: String,
    criterion: u32,
    command: String,
    input: String,
    #[serde(default, rename = "char")]
    characteristic: Option<u64>,
    #[serde(default)]
    order: Option<String>,
    expect: Vec<Expectation>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Expectation {
    pointer: String,
    /// Omitted means JSON `null`, which TOML cannot spell.
    #[serde(default)]
    value: Option<toml::Value>,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
enum CheckKind {
    /// `dim Ext^{n-i-1}(K[Δ], ω)_∅ = dim H̃_i(Δ)` for all `i`.
    Hochster,
    /// Upper-triangular table, `λ_{d,d}` against the dual graph, CM complexes trivial.
    TableShape,
    /// `Ext^{n-i}(Ext^{n-3}(K[Δ], ω), ω)` has finite length for `i < 3` when `dim Δ = 2`.
    FiniteLength,
    /// Nonzero Ext modules vanishing in degree `∅` have positive depth.
    DepthPositive,
    /// `Ext^k(K[Δ], ω) = 0` below `n - dim K[Δ]`.
    Grade,
    /// Random two-dimensional complexes with `H̃_1 = 0` are CCM.
    RandomSimplyConnected,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CheckSpec {
    name: String,
    criterion: u32,
    kind: CheckKind,
    #[serde(default)]
    inputs: Vec<String>,
    #[serde(default = "default_chars")]
    chars: Vec<u64>,
    #[serde(default)]
    count: Option<usize>,
    #[serde(default)]
    max_vertices: Option<usize>,
    #[serde(default)]
    seed: Option<u64>,
}

fn default_chars() -> Vec<u64> {
    vec![0]
}

/// Outcome of one corpus entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub manifest: String,
    pub name: String,
    pub criterion: u32,
    pub passed: bool,
    pub message: String,
    pub millis: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSummary {
    pub results: Vec<CriterionResult>,
}

impl CorpusSummary {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> usize {
        self.results.iter().filter(|r| !r.passed).count()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&format!(
                "{} [criterion {:>2}] {} ({} ms){}\n",
                if r.passed { "PASS" } else { "FAIL" },
                r.criterion,
                r.name,
                r.millis,
                if r.message.is_empty() { String::new() } else { format!(": {}", r.message) }
            ));
        }
        out.push_str(&format!(
            "{} passed, {} failed\n",
            self.results.len() - self.failures(),
            self.failures()
        ));
        out
    }
}

enum Entry {
    Case(CaseSpec),
    Check(CheckSpec),
}

struct Loaded {
    manifest: String,
    dir: PathBuf,
    entry: Entry,
}

/// Runs every `*.toml` manifest in `dir`, in file-name order. Entries execute in
/// parallel; results keep manifest order.
pub fn run_corpus(dir: &Path) -> Result<CorpusSummary, CorpusError> {
    if !dir.is_dir() {
        return Err(CorpusError::MissingDir(dir.to_path_buf()));
    }
    let mut manifests: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CorpusError::Io {
            path: dir.to_path_buf(),
            message: e.to_string(),
        })?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    manifests.sort();
    if manifests.is_empty() {
        return Err(CorpusError::Empty(dir.to_path_buf()));
    }
    let mut entries = Vec::new();
    for path in &manifests {
        let text = std::fs::read_to_string(path).map_err(|e| CorpusError::Io {
            path: path.clone(),
            message: e.to_string(),
        })?;
        let manifest: Manifest = toml::from_str(&text).map_err(|e| CorpusError::Manifest {
            path: path.clone(),
            message: e.to_string(),
        })?;
        let label = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
        for case in manifest.cases {
            entries.push(Loaded {
                manifest: label.clone(),
                dir: dir.to_path_buf(),
                entry: Entry::Case(case),
            });
        }
        for check in manifest.checks {
            entries.push(Loaded {
                manifest: label.clone(),
                dir: dir.to_path_buf(),
                entry: Entry::Check(check),
            });
        }
    }
    if entries.is_empty() {
        return Err(CorpusError::Empty(dir.to_path_buf()));
    }
    for e in &entries {
        let inputs: Vec<&String> = match &e.entry {
            Entry::Case(c) => vec![&c.input],
            Entry::Check(c) => c.inputs.iter().collect(),
        };
        for input in inputs {
            let p = e.dir.join(input);
            if !p.is_file() {
                return Err(CorpusError::MissingInput(p));
            }
        }
    }
    let results = entries.par_iter().map(run_entry).collect();
    Ok(CorpusSummary { results })
}

fn run_entry(loaded: &Loaded) -> CriterionResult {
    let start = Instant::now();
    let (name, criterion, outcome) = match &loaded.entry {
        Entry::Case(c) => (c.name.clone(), c.criterion, run_case(&loaded.dir, c)),
        Entry::Check(c) => (c.name.clone(), c.criterion, run_check(&loaded.dir, c)),
    };
    CriterionResult {
        manifest: loaded.manifest.clone(),
        name,
        criterion,
        passed: outcome.is_ok(),
        message: outcome.err().unwrap_or_default(),
        millis: start.elapsed().as_millis(),
    }
}

fn read(dir: &Path, input: &str) -> Result<String, String> {
    std::fs::read_to_string(dir.join(input)).map_err(|e| format!("{input}: {e}"))
}

fn field_of(c: u64) -> Result<FieldSpec, String> {
    FieldSpec::new(c).map_err(|e| e.to_string())
}

fn run_case(dir: &Path, case: &CaseSpec) -> Result<(), String> {
    let command: Command = case.command.parse()?;
    let field = case.characteristic.map(field_of).transpose()?;
    let order: MonomialOrder = match &case.order {
        Some(o) => o.parse()?,
        None => MonomialOrder::default(),
    };
    let text = read(dir, &case.input)?;
    let report = execute_text(command, &text, Path::new(&case.input), field, order, &super::DEFAULT_PRIMES)
        .map_err(|e| e.to_string())?;
    let json = report.to_json();
    for exp in &case.expect {
        let want = match &exp.value {
            Some(v) => serde_json::to_value(v).map_err(|e| e.to_string())?,
            None => serde_json::Value::Null,
        };
        match json.pointer(&exp.pointer) {
            Some(got) if *got == want => {}
            Some(got) => return Err(format!("{}: expected {want}, got {got}", exp.pointer)),
            None => return Err(format!("{}: missing from report", exp.pointer)),
        }
    }
    Ok(())
}

fn complexes(dir: &Path, check: &CheckSpec) -> Result<Vec<(String, SimplicialComplex)>, String> {
    check
        .inputs
        .iter()
        .map(|input| {
            let text = read(dir, input)?;
            let c = load_complex(&text).map_err(|e: JobError| format!("{input}: {e}"))?;
            Ok((input.clone(), c))
        })
        .collect()
}

fn run_check(dir: &Path, check: &CheckSpec) -> Result<(), String> {
    let fields = check.chars.iter().map(|&c| field_of(c)).collect::<Result<Vec<_>, _>>()?;
    if check.kind == CheckKind::RandomSimplyConnected {
        let count = check.count.unwrap_or(200);
        let max_vertices = check.max_vertices.unwrap_or(7);
        let seed = check.seed.unwrap_or(0);
        for &field in &fields {
            random_simply_connected(field, count, max_vertices, seed)?;
        }
        return Ok(());
    }
    let inputs = complexes(dir, check)?;
    if inputs.is_empty() {
        return Err("check lists no inputs".into());
    }
    for (name, complex) in &inputs {
        for &field in &fields {
            let r = match check.kind {
                CheckKind::Hochster => hochster(complex, field),
                CheckKind::TableShape => table_shape(complex, field),
                CheckKind::FiniteLength => finite_length(complex, field),
                CheckKind::DepthPositive => depth_positive(complex, field),
                CheckKind::Grade => grade(complex, field),
                CheckKind::RandomSimplyConnected => unreachable!(),
            };
            r.map_err(|m| format!("{name} over {field}: {m}"))?;
        }
    }
    Ok(())
}

fn hochster(complex: &SimplicialComplex, spec: FieldSpec) -> Result<(), String> {
    let h = reduced_homology(complex, spec).map_err(|e| e.to_string())?;
    let n = complex.vertex_count();
    let dims: Vec<usize> = dispatch_field!(spec, f => {
        let exts = ext_duals(&sr_module(complex, f)).map_err(|e| e.to_string())?;
        exts.iter().map(|e| e.dim(Subset::EMPTY)).collect()
    });
    // Ext^{n-i-1} for i = -1 .. n-1 covers every index 0 ..= n
    for i in -1..n as isize {
        let k = (n as isize - i - 1) as usize;
        if dims[k] != h.reduced_betti(i) {
            return Err(format!(
                "Ext^{k} at the empty degree has dimension {} but H~_{i} = {}",
                dims[k],
                h.reduced_betti(i)
            ));
        }
    }
    Ok(())
}

fn table_shape(complex: &SimplicialComplex, spec: FieldSpec) -> Result<(), String> {
    let r = lyubeznik_consistency(complex, spec).map_err(|e| e.to_string())?;
    if !r.upper_triangular {
        return Err(format!("table is not upper triangular: {:?}", r.table.entries));
    }
    if !r.top_matches_components {
        return Err(format!(
            "lambda_d,d = {} but the dual graph has {} top components",
            r.table.get(r.table.d, r.table.d),
            r.top_components
        ));
    }
    if !r.cm_implies_trivial {
        return Err("Cohen-Macaulay complex with a nontrivial table".into());
    }
    Ok(())
}

fn finite_length(complex: &SimplicialComplex, spec: FieldSpec) -> Result<(), String> {
    if complex.dimension() != Some(2) {
        return Ok(());
    }
    let n = complex.vertex_count();
    dispatch_field!(spec, f => {
        let e = ext_dual(&sr_module(complex, f), n - 3).map_err(|e| e.to_string())?;
        let outer = ext_duals(&e).map_err(|e| e.to_string())?;
        for i in 0..3 {
            if !outer[n - i].is_finite_length() {
                return Err(format!("Ext^{}(Ext^{}(K[D])) is not of finite length", n - i, n - 3));
            }
        }
        Ok(())
    })
}

fn check_depth<F: Field>(m: &SquarefreeModule<F>, what: &str) -> Result<(), String> {
    if m.is_zero() || m.dim(Subset::EMPTY) != 0 {
        return Ok(());
    }
    match depth(m) {
        Ok(d) if d >= 1 => Ok(()),
        Ok(d) => Err(format!("{what} vanishes at the empty degree but has depth {d}")),
        Err(e) => Err(e.to_string()),
    }
}

fn depth_positive(complex: &SimplicialComplex, spec: FieldSpec) -> Result<(), String> {
    dispatch_field!(spec, f => {
        let exts = ext_duals(&sr_module(complex, f)).map_err(|e| e.to_string())?;
        for (k, e) in exts.iter().enumerate() {
            check_depth(e, &format!("Ext^{k}"))?;
            if e.is_zero() {
                continue;
            }
            for (l, ee) in ext_duals(e).map_err(|e| e.to_string())?.iter().enumerate() {
                check_depth(ee, &format!("Ext^{l}(Ext^{k})"))?;
            }
        }
        Ok(())
    })
}

fn grade(complex: &SimplicialComplex, spec: FieldSpec) -> Result<(), String> {
    let n = complex.vertex_count();
    let d = complex.krull_dimension().ok_or("void complex")?;
    dispatch_field!(spec, f => {
        let exts = ext_duals(&sr_module(complex, f)).map_err(|e| e.to_string())?;
        match exts[..n - d].iter().position(|e| !e.is_zero()) {
            Some(k) => Err(format!("Ext^{k} is nonzero below the grade {}", n - d)),
            None if exts[n - d].is_zero() => Err(format!("Ext^{} vanishes", n - d)),
            None => Ok(()),
        }
    })
}

/// A random complex of dimension exactly two on at most `max_vertices` vertices:
/// random triangles plus a few random extra edges.
pub fn random_two_dim_complex<R: Rng>(rng: &mut R, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(3..=max_vertices.max(3));
    let triples: Vec<Subset> = Subset::all_graded(n).into_iter().filter(|s| s.len() == 3).collect();
    let density = rng.gen_range(0.1..0.6);
    let mut gens: Vec<Subset> = triples.iter().copied().filter(|_| rng.gen_bool(density)).collect();
    if gens.is_empty() {
        gens.push(triples[rng.gen_range(0..triples.len())]);
    }
    let pairs: Vec<Subset> = Subset::all_graded(n).into_iter().filter(|s| s.len() == 2).collect();
    for _ in 0..rng.gen_range(0..3) {
        gens.push(pairs[rng.gen_range(0..pairs.len())]);
    }
    SimplicialComplex::new(n, gens).expect("subsets of [n]")
}

fn random_simply_connected(field: FieldSpec, count: usize, max_vertices: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = 0;
    let mut attempts = 0;
    while found < count {
        attempts += 1;
        if attempts > 1000 * count.max(1) {
            return Err(format!("only {found} of {count} samples had H~_1 = 0"));
        }
        let c = random_two_dim_complex(&mut rng, max_vertices);
        let h = reduced_homology(&c, field).map_err(|e| e.to_string())?;
        if h.reduced_betti(1) != 0 {
            continue;
        }
        found += 1;
        if !is_ccm(&c, field).map_err(|e| e.to_string())? {
            return Err(format!("H~_1 = 0 but not CCM: {:?}", c.facet_lists()));
        }
    }
    Ok(())
}
