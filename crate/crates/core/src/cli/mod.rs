//! Command-line frontend.

mod generators;
mod report;

pub use generators::{conic_family, conic_vars, katsura, katsura_vars};
pub use report::{border_basis_json, matrices_json, polynomial_json, roots_json, syzygy_json};

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::border::{compute_border_basis, BorderError};
use crate::choice::{ChoiceFunction, ChoiceKind};
use crate::coeff::{Field, FieldConfig, FloatField, PrimeField, Rationals};
use crate::poly::{format_system, parse_polynomial, ParseError, Polynomial, SystemSource};
use crate::quotient::MultiplicationSystem;
use crate::solve::{self, SolveError};
use crate::syzygy::{generate_syzygies, SyzygyError};

#[derive(Debug, Parser)]
#[command(name = "borderbasis", version, about = "Border bases, normal forms and roots of zero-dimensional polynomial systems")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Coefficient field: qq, fp:<p> or f64:<eps>. Overrides the input header.
    #[arg(long, global = true)]
    pub field: Option<FieldConfig>,
    /// Choice function: drvl, dlex, mac, minsz or mix:<seed>.
    #[arg(long, global = true, default_value = "mac")]
    pub choice: ChoiceKind,
    /// Ignore coefficients below this magnitude when choosing leading monomials.
    #[arg(long, global = true)]
    pub eps: Option<f64>,
    /// Seed of the random combination used by `solve`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the multiplication matrices as JSON to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub dump_matrices: Option<PathBuf>,
    /// Also list the commutation syzygies.
    #[arg(long, global = true)]
    pub syzygies: bool,
    /// Include wall-clock timings per phase (makes the output non-reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Action {
    Basis,
    Matrices,
    Syzygies,
    Solve,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a border basis.
    Basis { file: PathBuf },
    /// Print the multiplication matrices.
    Matrices { file: PathBuf },
    /// List the commutation syzygies.
    Syzygies { file: PathBuf },
    /// Approximate the roots.
    Solve { file: PathBuf },
    /// Normal form of a polynomial modulo the system.
    Normalform {
        #[arg(short = 'p', long = "poly")]
        poly: String,
        file: PathBuf,
    },
    /// Run on the Katsura(n) system.
    Katsura {
        #[arg(short = 'n')]
        n: usize,
        /// Print the generated system and exit.
        #[arg(long)]
        show: bool,
        #[arg(value_enum, default_value = "basis")]
        action: Action,
    },
    /// Run on the family {a x1^2 + b x2^2 + e1 x1 x2, c x1^2 + d x2^2 + e2 x1 x2}.
    Conics {
        #[arg(long, allow_hyphen_values = true, num_args = 6, value_names = ["A", "B", "C", "D", "E1", "E2"])]
        coeffs: Vec<String>,
        #[arg(long)]
        show: bool,
        #[arg(value_enum, default_value = "basis")]
        action: Action,
    },
}

/// Failure categories, mapped to exit codes 1, 2 and 3.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    NotZeroDimensional(String),
    #[error("{0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::NotZeroDimensional(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<BorderError> for CliError {
    fn from(e: BorderError) -> Self {
        match e {
            BorderError::NotZeroDimensional { .. } => CliError::NotZeroDimensional(e.to_string()),
            BorderError::EmptyInput => CliError::Input(e.to_string()),
            other => CliError::Numeric(other.to_string()),
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        CliError::Numeric(e.to_string())
    }
}

impl From<SyzygyError> for CliError {
    fn from(e: SyzygyError) -> Self {
        CliError::Numeric(e.to_string())
    }
}

/// A system before its coefficients are read into a field.
enum Source {
    Text(SystemSource),
    Katsura(usize),
    Conics([String; 6]),
}

impl Source {
    fn vars(&self) -> Vec<String> {
        match self {
            Source::Text(s) => s.vars.clone(),
            Source::Katsura(n) => katsura_vars(*n),
            Source::Conics(_) => conic_vars(),
        }
    }

    fn default_field(&self) -> FieldConfig {
        match self {
            Source::Text(s) => s.field,
            _ => FieldConfig::Rational,
        }
    }

    fn polynomials<K: Field>(&self, field: &K) -> Result<Vec<Polynomial<K>>, CliError> {
        match self {
            Source::Text(s) => Ok(s.polynomials(field)?),
            Source::Katsura(n) => katsura(field, *n).map_err(|e| CliError::Input(e.to_string())),
            Source::Conics(c) => {
                let vals: Vec<K::Elem> = c
                    .iter()
                    .map(|t| parse_polynomial(t, &[], field).map(|p| p.coeff(&crate::poly::Monomial::one(0))))
                    .collect::<Result<_, _>>()?;
                let (sys, regular) =
                    conic_family(field, [&vals[0], &vals[1], &vals[2], &vals[3], &vals[4], &vals[5]]);
                if !regular {
                    eprintln!("warning: ad - bc = 0, the system is in general not zero-dimensional");
                }
                Ok(sys)
            }
        }
    }
}

fn read_source(file: &PathBuf) -> Result<Source, CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| CliError::Input(format!("reading {}: {e}", file.display())))?;
    Ok(Source::Text(SystemSource::parse(&text)?))
}

/// Parses `args` and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed command and returns what it prints on success.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let (source, action, poly, show) = match &cli.command {
        Command::Basis { file } => (read_source(file)?, Action::Basis, None, false),
        Command::Matrices { file } => (read_source(file)?, Action::Matrices, None, false),
        Command::Syzygies { file } => (read_source(file)?, Action::Syzygies, None, false),
        Command::Solve { file } => (read_source(file)?, Action::Solve, None, false),
        Command::Normalform { poly, file } => (read_source(file)?, Action::Basis, Some(poly.clone()), false),
        Command::Katsura { n, show, action } => (Source::Katsura(*n), *action, None, *show),
        Command::Conics { coeffs, show, action } => {
            let c: [String; 6] = coeffs.clone().try_into().map_err(|_| CliError::Input("--coeffs needs six values".into()))?;
            (Source::Conics(c), *action, None, *show)
        }
    };
    let field = cli.opts.field.unwrap_or_else(|| source.default_field());
    let job = Job { opts: &cli.opts, source: &source, action, poly: poly.as_deref(), show };
    match field {
        FieldConfig::Rational => job.run(&Rationals),
        FieldConfig::Prime(p) => job.run(&PrimeField::new(p).map_err(|e| CliError::Input(e.to_string()))?),
        FieldConfig::Float(eps) => job.run(&FloatField::new(eps).map_err(|e| CliError::Input(e.to_string()))?),
    }
}

struct Job<'a> {
    opts: &'a Options,
    source: &'a Source,
    action: Action,
    poly: Option<&'a str>,
    show: bool,
}

impl Job<'_> {
    fn run<K: Field>(&self, field: &K) -> Result<String, CliError> {
        let vars = self.source.vars();
        let inputs = self.source.polynomials(field)?;
        let normalized = format_system(&vars, &inputs);
        if self.show {
            return Ok(normalized);
        }
        let digest: String = Sha256::digest(normalized.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
        let cf = match self.opts.eps {
            Some(e) => ChoiceFunction::with_eps(self.opts.choice, e),
            None => ChoiceFunction::new(self.opts.choice),
        };
        let mut timings = Map::new();
        let mut clock = Instant::now();
        let mut lap = |name: &str, timings: &mut Map<String, Value>| {
            timings.insert(name.into(), json!(clock.elapsed().as_secs_f64()));
            clock = Instant::now();
        };

        let bb = compute_border_basis(&inputs, &cf)?;
        lap("basis", &mut timings);
        let ms = MultiplicationSystem::build(&bb.family)?;
        let commutation = ms.check_commutation();
        lap("matrices", &mut timings);

        if let Some(path) = &self.opts.dump_matrices {
            let text = serde_json::to_string_pretty(&matrices_json(&ms, &vars)).unwrap();
            std::fs::write(path, text + "\n")
                .map_err(|e| CliError::Input(format!("writing {}: {e}", path.display())))?;
        }

        let mut out = Map::new();
        out.insert("digest".into(), json!(digest));
        out.insert("choice".into(), json!(cf.kind.to_string()));
        if let Some(e) = cf.eps {
            out.insert("eps".into(), json!(e));
        }
        let mut text = String::new();

        if let Some(p) = self.poly {
            let p = parse_polynomial(p, &vars, field)?;
            let nf = ms.normal_form(&p);
            out.insert("vars".into(), json!(vars));
            out.insert("field".into(), json!(field.config().to_string()));
            out.insert("input".into(), json!(p.format_with(&vars)));
            out.insert("normal_form".into(), json!(nf.format_with(&vars)));
            out.insert("coordinates".into(), polynomial_json(&nf, &vars));
            text.push_str(&nf.format_with(&vars));
            text.push('\n');
            return Ok(self.finish(out, text, timings));
        }

        out.extend(border_basis_json(&bb, &vars));
        out.insert("rule_count".into(), json!(bb.family.num_rules()));
        out.insert("commutes".into(), json!(commutation.commutes));
        text.push_str(&format!("field: {}\nchoice: {}\n", field.config(), cf.kind));
        if let Some(w) = &bb.inconsistency_witness {
            text.push_str(&format!("inconsistent: {} is in the ideal\n", w.format_with(&vars)));
        }
        text.push_str(&format!(
            "dimension: {}\nloops: {}\ncommutes: {}\nbasis: {}\n",
            bb.dimension(),
            bb.loops,
            commutation.commutes,
            bb.basis().iter().map(|m| m.format_with(&vars)).collect::<Vec<_>>().join(", ")
        ));

        match self.action {
            Action::Basis => {
                text.push_str("rules:\n");
                for (lead, tail) in bb.family.rules() {
                    text.push_str(&format!("  {} -> {}\n", lead.format_with(&vars), tail.format_with(&vars)));
                }
            }
            Action::Matrices => {
                let mj = matrices_json(&ms, &vars);
                out.insert("matrices".into(), mj["matrices"].clone());
                for i in 0..ms.nvars() {
                    text.push_str(&format!("M_{}:\n", vars[i]));
                    for row in ms.row_major(i) {
                        let cells: Vec<String> = row.iter().map(|c| field.format(c)).collect();
                        text.push_str(&format!("  [{}]\n", cells.join(", ")));
                    }
                }
            }
            Action::Syzygies => {}
            Action::Solve => {
                let (roots, clustered) = solve::eigen_roots(&ms, self.opts.seed)?;
                let mnacr = solve::mnacr(&roots, &inputs);
                let rs = solve::RootSet { roots, mnacr, seed: self.opts.seed, clustered };
                lap("eigen", &mut timings);
                if let Value::Object(m) = roots_json(&rs) {
                    out.extend(m);
                }
                text.push_str(&format!("roots ({}):\n", rs.roots.len()));
                for r in &rs.roots {
                    let coords: Vec<String> = r.iter().map(|z| format!("{:.12e}{:+.12e}i", z.re, z.im)).collect();
                    text.push_str(&format!("  ({})\n", coords.join(", ")));
                }
                text.push_str(&format!("mnacr: {:e}\n", rs.mnacr));
                if rs.clustered > 0 {
                    text.push_str(&format!("clustered eigenvalues: {}\n", rs.clustered));
                }
            }
        }

        if self.action == Action::Syzygies || self.opts.syzygies {
            let rels = if bb.is_inconsistent() { Vec::new() } else { generate_syzygies(&bb.family)? };
            lap("syzygies", &mut timings);
            out.insert("syzygies".into(), Value::Array(rels.iter().map(|r| syzygy_json(r, &vars)).collect()));
            text.push_str(&format!("syzygies ({}):\n", rels.len()));
            for r in &rels {
                let (m, i, j) = &r.origin;
                let body: Vec<String> =
                    r.vector.format_with(&vars).into_iter().map(|(w, h)| format!("({h})*f[{w}]")).collect();
                text.push_str(&format!(
                    "  {} ({}; {}, {}): {}\n",
                    r.kind,
                    m.format_with(&vars),
                    vars[*i],
                    vars[*j],
                    body.join(" + ")
                ));
            }
        }
        Ok(self.finish(out, text, timings))
    }

    fn finish(&self, mut out: Map<String, Value>, mut text: String, timings: Map<String, Value>) -> String {
        if self.opts.timings {
            text.push_str(&format!("timings: {}\n", Value::Object(timings.clone())));
            out.insert("timings".into(), Value::Object(timings));
        }
        if self.opts.json {
            serde_json::to_string_pretty(&Value::Object(out)).unwrap() + "\n"
        } else {
            text
        }
    }
}
