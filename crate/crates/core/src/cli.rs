//! The `tri` command line: argument parsing, report assembly, and exit codes.
//!
//! Every invocation prints one JSON report on stdout:
//! `{"command", "inputs_digest", "result", "status", "timestamp"}`. The digest
//! is a SHA-256 over the command name, the input file bytes, and the options
//! that influence the result. Status maps to the exit code
//! (`ok` 0, `predicate_false` 1, `input_error` 2, `unsupported` 3).

use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exterior::leibniz_action;
use crate::io::{bases_from_str, bases_to_value, matrix_from_str, vector_from_str};
use crate::linalg::Matrix;
use crate::mub::{check_unbiased, weyl_heisenberg_bases, UNITARY_TOL};
use crate::scalars::FieldValue;
use crate::selftest::{run_selftest, Level};
use crate::spectra::{discriminant_d, discriminant_dr, g_factor_matrix, spectrum, SpectrumReport};
use crate::triangulant::triangulant_with;
use crate::triangulant_k::{
    theorem_k_krylov_check, theorem_k_oracle, triangulant_k_with, TriangulantKOptions, TriangulantKReport,
    DEFAULT_SEED,
};

pub const SEED_ENV: &str = "TRI_SEED";

#[derive(Debug, Parser)]
#[command(name = "tri", version, about = "Triangulants of matrix pairs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute T(A,B), or T_k(A,B) with --k.
    Compute {
        #[arg(short = 'A', value_name = "A.json")]
        a: PathBuf,
        #[arg(short = 'B', value_name = "B.json")]
        b: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Add spectra, correction factors, and the kernel dimension of M.
        #[arg(long)]
        diagnostics: bool,
        /// Seed for interpolation directions.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Report T_k together with the invariant-subspace characterizations.
    Check {
        #[arg(short = 'A', value_name = "A.json")]
        a: PathBuf,
        #[arg(short = 'B', value_name = "B.json")]
        b: PathBuf,
        #[arg(long)]
        k: usize,
        /// Vector for the Krylov-dimension criterion.
        #[arg(long, value_name = "v.json")]
        vector: Option<PathBuf>,
        /// Search all pairs of eigen(co)vector spans for a degenerate pairing.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Characteristic polynomial, eigenvalues, discriminants, and G_k.
    Spectrum {
        #[arg(short = 'A', value_name = "A.json")]
        a: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Mutually unbiased bases.
    Mub {
        #[command(subcommand)]
        command: MubCommand,
    },
    /// Run the seeded invariant suites.
    Selftest {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "quick")]
        level: Level,
    },
}

#[derive(Debug, Subcommand)]
pub enum MubCommand {
    /// Certify every pair in a basis collection.
    Certify {
        bases: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Build the Weyl-Heisenberg collection in prime dimension p.
    Construct {
        #[arg(long)]
        p: u64,
        /// Also write the collection to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    PredicateFalse,
    InputError,
    Unsupported,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::PredicateFalse => 1,
            Status::InputError => 2,
            Status::Unsupported => 3,
        }
    }

    pub fn for_error(e: &Error) -> Status {
        match e {
            Error::NotSplit(_)
            | Error::NotSimple(_)
            | Error::Unsupported(_)
            | Error::SizeCap(_)
            | Error::Interpolation(_) => Status::Unsupported,
            _ => Status::InputError,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CliReport {
    pub command: String,
    pub inputs_digest: String,
    pub result: Value,
    pub status: Status,
    pub timestamp: u64,
}

impl CliReport {
    pub fn error(command: &str, digest: String, e: &Error) -> Self {
        CliReport {
            command: command.into(),
            inputs_digest: digest,
            result: json!({ "error": e.to_string() }),
            status: Status::for_error(e),
            timestamp: now(),
        }
    }
}

impl CliReport {
    /// Report for arguments that failed to parse.
    pub fn usage_error(message: String) -> Self {
        CliReport {
            command: "tri".into(),
            inputs_digest: String::new(),
            result: json!({ "error": message }),
            status: Status::InputError,
            timestamp: now(),
        }
    }
}

fn now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

/// Seed precedence: flag, then `TRI_SEED`, then the library default.
pub fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| std::env::var(SEED_ENV).ok()?.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    fn new(command: &str) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(command.as_bytes());
        Inputs { hasher }
    }

    fn option(&mut self, name: &str, value: impl std::fmt::Debug) {
        self.hasher.update(format!("\0{name}={value:?}").as_bytes());
    }

    fn file(&mut self, path: &Path) -> Result<String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
        self.hasher.update(b"\0file\0");
        self.hasher.update(text.as_bytes());
        Ok(text)
    }

    fn digest(&self) -> String {
        hex::encode(self.hasher.clone().finalize())
    }
}

pub fn run(cli: Cli) -> CliReport {
    let name = command_name(&cli.command);
    let mut inputs = Inputs::new(name);
    let outcome = dispatch(&cli.command, &mut inputs);
    let digest = inputs.digest();
    match outcome {
        Ok((result, status)) => CliReport {
            command: name.into(),
            inputs_digest: digest,
            result,
            status,
            timestamp: now(),
        },
        Err(e) => CliReport::error(name, digest, &e),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Compute { .. } => "compute",
        Command::Check { .. } => "check",
        Command::Spectrum { .. } => "spectrum",
        Command::Mub { command: MubCommand::Certify { .. } } => "mub certify",
        Command::Mub { command: MubCommand::Construct { .. } } => "mub construct",
        Command::Selftest { .. } => "selftest",
    }
}

fn dispatch(command: &Command, inputs: &mut Inputs) -> Result<(Value, Status)> {
    match command {
        Command::Compute { a, b, k, diagnostics, seed } => {
            let (a, b) = (matrix_from_str(&inputs.file(a)?)?, matrix_from_str(&inputs.file(b)?)?);
            let seed = resolve_seed(*seed);
            inputs.option("k", k);
            inputs.option("diagnostics", diagnostics);
            inputs.option("seed", seed);
            compute(&a, &b, *k, *diagnostics, seed)
        }
        Command::Check { a, b, k, vector, oracle, seed } => {
            let (a, b) = (matrix_from_str(&inputs.file(a)?)?, matrix_from_str(&inputs.file(b)?)?);
            let v = match vector {
                Some(path) => Some(vector_from_str(&inputs.file(path)?)?),
                None => None,
            };
            let seed = resolve_seed(*seed);
            inputs.option("k", k);
            inputs.option("oracle", oracle);
            inputs.option("seed", seed);
            check(&a, &b, *k, v, *oracle, seed)
        }
        Command::Spectrum { a, k } => {
            let a = matrix_from_str(&inputs.file(a)?)?;
            inputs.option("k", k);
            spectrum_command(&a, *k)
        }
        Command::Mub { command: MubCommand::Certify { bases, tol } } => {
            let text = inputs.file(bases)?;
            inputs.option("tol", tol);
            certify(&text, *tol)
        }
        Command::Mub { command: MubCommand::Construct { p, out } } => {
            inputs.option("p", p);
            let bases = weyl_heisenberg_bases(*p)?;
            let collection = bases_to_value(&bases);
            if let Some(path) = out {
                std::fs::write(path, serde_json::to_string_pretty(&collection)?)?;
            }
            Ok((
                json!({
                    "p": p,
                    "count": bases.len(),
                    "written_to": out.as_ref().map(|p| p.display().to_string()),
                    "collection": collection,
                }),
                Status::Ok,
            ))
        }
        Command::Selftest { seed, level } => {
            let seed = resolve_seed(*seed);
            inputs.option("seed", seed);
            inputs.option("level", level);
            let report = run_selftest(seed, *level);
            let status = if report.failed == 0 { Status::Ok } else { Status::PredicateFalse };
            Ok((serde_json::to_value(report)?, status))
        }
    }
}

fn scalar(v: &FieldValue) -> Value {
    Value::String(v.to_string())
}

fn opt_scalar(v: &Option<FieldValue>) -> Value {
    v.as_ref().map_or(Value::Null, scalar)
}

pub fn spectrum_json(s: &SpectrumReport) -> Value {
    json!({
        "charpoly": s.charpoly.pretty(),
        "charpoly_coefficients": s.charpoly.coeffs().iter().map(scalar).collect::<Vec<_>>(),
        "split": s.split,
        "backend": s.backend,
        "eigenvalues": s.eigenvalues.iter().map(|e| json!({
            "value": scalar(&e.value),
            "algebraic_mult": e.algebraic_mult,
            "geometric_mult": e.geometric_mult,
        })).collect::<Vec<_>>(),
    })
}

pub fn triangulant_k_json(n: usize, r: &TriangulantKReport) -> Value {
    json!({
        "n": n,
        "k": r.k,
        "value": scalar(&r.value),
        "method": r.method,
        "gk_a": opt_scalar(&r.gk_a),
        "gk_b": opt_scalar(&r.gk_b),
        "t_upstairs": opt_scalar(&r.t_upstairs),
        "samples_used": r.samples_used,
    })
}

fn insert_spectra(out: &mut Map<String, Value>, a: &Matrix, b: &Matrix) {
    for (key, m) in [("spectrum_a", a), ("spectrum_b", b)] {
        let v = match spectrum(m, None) {
            Ok(s) => spectrum_json(&s),
            Err(e) => json!({ "error": e.to_string() }),
        };
        out.insert(key.into(), v);
    }
}

fn compute(a: &Matrix, b: &Matrix, k: Option<usize>, diagnostics: bool, seed: u64) -> Result<(Value, Status)> {
    let n = a.rows();
    let mut out = match k {
        None => {
            let r = triangulant_with(a, b, diagnostics)?;
            let mut m = Map::new();
            m.insert("n".into(), json!(n));
            m.insert("value".into(), scalar(&r.value));
            m.insert("method".into(), json!(r.method));
            m.insert("degenerate_by_convention".into(), json!(n == 1));
            if let Some(d) = r.kernel_dim {
                m.insert("kernel_dim".into(), json!(d));
            }
            m
        }
        Some(k) => {
            let opts = TriangulantKOptions { seed, ..Default::default() };
            let r = triangulant_k_with(a, b, k, &opts)?;
            let Value::Object(mut m) = triangulant_k_json(n, &r) else { unreachable!() };
            if diagnostics && k > 0 && k < n {
                for (key, mat) in [("gk_a_exact", a), ("gk_b_exact", b)] {
                    let g = g_factor_matrix(mat, k, None)?;
                    m.insert(key.into(), json!(g.map(|g| json!({ "value": scalar(&g.value), "route": g.route }))));
                }
                let upstairs = triangulant_with(&leibniz_action(a, k)?, &leibniz_action(b, k)?, true)?;
                m.insert("kernel_dim_upstairs".into(), json!(upstairs.kernel_dim));
            }
            m
        }
    };
    if diagnostics {
        insert_spectra(&mut out, a, b);
    }
    Ok((Value::Object(out), Status::Ok))
}

fn check(
    a: &Matrix,
    b: &Matrix,
    k: usize,
    vector: Option<(crate::scalars::FieldDescriptor, Vec<FieldValue>)>,
    oracle: bool,
    seed: u64,
) -> Result<(Value, Status)> {
    let n = a.rows();
    let opts = TriangulantKOptions { seed, ..Default::default() };
    let t = triangulant_k_with(a, b, k, &opts)?;
    let mut out = Map::new();
    out.insert("triangulant_k".into(), triangulant_k_json(n, &t));
    let mut holds = t.value.is_zero();
    if oracle {
        let o = theorem_k_oracle(a, b, k)?;
        out.insert(
            "oracle".into(),
            json!({
                "degenerate_pair_exists": o.degenerate_pair_exists,
                "witness": o.witness.as_ref().map(|(s, t)| json!({
                    "covector_indices": s,
                    "vector_indices": t,
                    "covector_eigenvalues": s.iter().map(|&i| scalar(&o.eigs_a[i - 1])).collect::<Vec<_>>(),
                    "vector_eigenvalues": t.iter().map(|&j| scalar(&o.eigs_b[j - 1])).collect::<Vec<_>>(),
                })),
                "eigenvalues_a": o.eigs_a.iter().map(scalar).collect::<Vec<_>>(),
                "eigenvalues_b": o.eigs_b.iter().map(scalar).collect::<Vec<_>>(),
            }),
        );
        holds = o.degenerate_pair_exists;
    }
    if let Some((field, v)) = vector {
        if field != a.field() {
            return Err(Error::FieldMismatch(a.field(), field));
        }
        out.insert("krylov".into(), serde_json::to_value(theorem_k_krylov_check(a, b, k, &v)?)?);
    }
    out.insert("verdict".into(), json!(holds));
    let status = if holds { Status::Ok } else { Status::PredicateFalse };
    Ok((Value::Object(out), status))
}

fn spectrum_command(a: &Matrix, k: Option<usize>) -> Result<(Value, Status)> {
    let n = a.require_square("spectrum")?;
    let field = a.field();
    let s = spectrum(a, None)?;
    let Value::Object(mut out) = spectrum_json(&s) else { unreachable!() };
    out.insert("D".into(), scalar(&s.charpoly.discriminant()?));
    if let Some(eigs) = s.eigenvalue_list() {
        let mut dr = Map::new();
        for r in 1..=n / 2 {
            dr.insert(r.to_string(), scalar(&discriminant_dr(field, &eigs, r)?));
        }
        out.insert("D_r".into(), Value::Object(dr));
        debug_assert!(discriminant_d(field, &eigs).field_eq(&s.charpoly.discriminant()?).unwrap_or(true));
    }
    if let Some(k) = k {
        let g = g_factor_matrix(a, k, None)?;
        out.insert("k".into(), json!(k));
        out.insert("G_k".into(), g.as_ref().map_or(Value::Null, |g| scalar(&g.value)));
        out.insert("G_k_route".into(), json!(g.map(|g| g.route)));
    }
    let status = if s.split { Status::Ok } else { Status::Unsupported };
    Ok((Value::Object(out), status))
}

fn certify(text: &str, tol: f64) -> Result<(Value, Status)> {
    let bases = bases_from_str(text, UNITARY_TOL)?;
    let mut pairs = Vec::new();
    let (mut all_unbiased, mut all_saturated) = (true, true);
    for i in 0..bases.len() {
        for j in i + 1..bases.len() {
            let c = check_unbiased(&bases[i], &bases[j], tol)?;
            all_unbiased &= c.verdict;
            all_saturated &= c.saturated;
            let mut entry = serde_json::to_value(&c)?;
            entry["i"] = json!(i);
            entry["j"] = json!(j);
            pairs.push(entry);
        }
    }
    let status = if all_unbiased { Status::Ok } else { Status::PredicateFalse };
    Ok((
        json!({
            "n": bases.first().map_or(0, |b| b.dimension()),
            "bases": bases.len(),
            "tol": tol,
            "pairs": pairs,
            "all_unbiased": all_unbiased,
            "all_saturated": all_saturated,
        }),
        status,
    ))
}
