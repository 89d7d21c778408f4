use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use symdet_core::basis::colength_truncated_oracle;
use symdet_core::io::{load_ideal, load_matrix, InputError};
use symdet_core::polar::{prime_field_cross_check, PrimeCrossCheck};
use symdet_core::poly::DEFAULT_PRIME;
use symdet_core::{
    a_l_ideal, mixed_polar_degree, polar_degree_hypersurface, polar_is_empty, sample_codim,
    total_polar_degree_corank2, BasisError, Colength, ColengthMethod, FieldTag, GenericityOptions, IdealSpec, Limits,
    PolarError,
};

mod render;

#[derive(Parser, Debug)]
#[command(name = "symdet", version, about = "Polar multiplicities of symmetric determinantal singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Coefficient field for colength computations.
    #[arg(long, value_enum, default_value_t = Field::Q, global = true)]
    field: Field,
    /// Prime for `--field fp`.
    #[arg(long, default_value_t = DEFAULT_PRIME, global = true)]
    prime: u64,
    /// Random congruences tried besides the given coordinates.
    #[arg(long, default_value_t = 2, global = true)]
    trials: usize,
    #[arg(long, env = "SYMDET_SEED", default_value_t = 0x5eed, global = true)]
    seed: u64,
    #[arg(long, default_value_t = 50, global = true)]
    degree_cap: u32,
    #[arg(long, default_value_t = 1_000_000, global = true)]
    step_cap: u64,
    #[arg(long, value_enum, default_value_t = Output::Json, global = true)]
    output: Output,
    /// Include standard-monomial witnesses.
    #[arg(long, global = true)]
    witness: bool,
    /// Skip sampling the codimension of the target locus.
    #[arg(long, global = true)]
    skip_target_check: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Field {
    Q,
    Fp,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Mora,
    Oracle,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Mixed polar degree deg Γ_{i,j}.
    MixedPolar {
        file: PathBuf,
        #[arg(short = 'i')]
        i: usize,
        #[arg(short = 'j')]
        j: usize,
    },
    /// Multiplicity of the polar curve.
    PolarDegree {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        corank: u8,
    },
    /// Local colength of an ideal file, or of A(i,j,n)_l for a matrix file.
    Colength {
        file: PathBuf,
        #[arg(short = 'i', requires_all = ["j", "l"])]
        i: Option<usize>,
        #[arg(short = 'j', requires_all = ["i", "l"])]
        j: Option<usize>,
        #[arg(long, requires_all = ["i", "j"])]
        l: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Mora)]
        method: Method,
    },
    /// Sampled codimension of the rank <= r locus at the origin.
    CheckCodim {
        file: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Emptiness of the polar variety of dimension l of the rank <= r locus.
    IsEmpty {
        /// Matrix file supplying n; alternatively pass --n.
        file: Option<PathBuf>,
        #[arg(long, required_unless_present = "file")]
        n: Option<usize>,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        l: usize,
    },
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

impl From<PolarError> for Failure {
    fn from(e: PolarError) -> Self {
        let code = match &e {
            PolarError::NotFinite { .. } | PolarError::AllTrialsNotFinite { .. } => 2,
            PolarError::Basis(b) => basis_code(b),
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<BasisError> for Failure {
    fn from(e: BasisError) -> Self {
        Failure { code: basis_code(&e), message: e.to_string() }
    }
}

impl From<symdet_core::MatrixError> for Failure {
    fn from(e: symdet_core::MatrixError) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn basis_code(e: &BasisError) -> u8 {
    match e {
        BasisError::ResourceExhausted { .. } | BasisError::DegreeCapExceeded { .. } => 3,
        _ => 1,
    }
}

impl Common {
    fn field_tag(&self) -> Result<FieldTag, Failure> {
        match self.field {
            Field::Q => Ok(FieldTag::Rationals),
            Field::Fp => FieldTag::prime(self.prime).map_err(|e| Failure { code: 1, message: e.to_string() }),
        }
    }

    fn limits(&self) -> Limits {
        Limits { step_cap: self.step_cap, degree_cap: self.degree_cap }
    }

    fn options(&self) -> Result<GenericityOptions, Failure> {
        let opts = GenericityOptions {
            trials: self.trials,
            seed: self.seed,
            field: self.field_tag()?,
            limits: self.limits(),
            check_target: !self.skip_target_check,
            keep_witness: self.witness,
        };
        opts.validate()?;
        Ok(opts)
    }
}

#[derive(Serialize)]
struct ColengthReport {
    label: String,
    vars: Vec<String>,
    generators: Vec<String>,
    field: FieldTag,
    probabilistic: bool,
    method: ColengthMethod,
    colength: Colength,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cross_check: Option<PrimeCrossCheck>,
}

#[derive(Serialize)]
struct EmptinessReport {
    n: usize,
    r: usize,
    l: usize,
    bound: i64,
    empty: bool,
}

fn emit<T: Serialize>(common: &Common, report: &T, text: impl FnOnce(&T) -> String) {
    match common.output {
        Output::Json => println!("{}", serde_json::to_string_pretty(report).expect("serializable")),
        Output::Text => print!("{}", text(report)),
    }
}

fn colength_command(common: &Common, file: &Path, ijl: Option<(usize, usize, usize)>, method: Method) -> Result<u8, Failure> {
    let ideal: IdealSpec = match ijl {
        Some((i, j, l)) => a_l_ideal(&load_matrix(file)?, i, j, l)?,
        None => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Failure { code: 1, message: format!("cannot read {}: {e}", file.display()) })?;
            if text.contains("\"matrix\"") {
                return Err(Failure { code: 1, message: "matrix file given; pass -i, -j and --l to select A(i,j,n)_l".into() });
            }
            load_ideal(file)?
        }
    };
    let field = common.field_tag()?;
    let limits = common.limits();
    let result = match (method, field) {
        (Method::Mora, _) => symdet_core::polar::colength_in_field(&ideal, field, limits)?,
        (Method::Oracle, FieldTag::Rationals) => colength_truncated_oracle(&ideal, common.degree_cap)?,
        (Method::Oracle, FieldTag::PrimeField(p)) => {
            colength_truncated_oracle(&ideal.reduce_mod(p).map_err(PolarError::from)?, common.degree_cap)?
        }
    };
    let cross_check = match field {
        FieldTag::PrimeField(p) => Some(prime_field_cross_check(&ideal, p, limits)?),
        FieldTag::Rationals => None,
    };
    let colength = result.value;
    let report = ColengthReport {
        label: ideal.label().to_string(),
        vars: ideal.vars().to_vec(),
        generators: ideal.generator_strings(),
        field,
        probabilistic: field != FieldTag::Rationals,
        method: result.method,
        colength,
        witness: common.witness.then(|| result.witness_strings(ideal.vars())),
        cross_check,
    };
    emit(common, &report, |r| render::colength(r.label.as_str(), &r.colength, r.method, r.witness.as_deref()));
    Ok(if colength == Colength::Infinite { 2 } else { 0 })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let common = &cli.common;
    match &cli.command {
        Command::MixedPolar { file, i, j } => {
            let f = load_matrix(file)?;
            let report = mixed_polar_degree(&f, *i, *j, &common.options()?)?;
            emit(common, &report, render::mixed);
            Ok(0)
        }
        Command::PolarDegree { file, corank } => {
            let f = load_matrix(file)?;
            let opts = common.options()?;
            let report = if *corank == 2 { total_polar_degree_corank2(&f, &opts)? } else { polar_degree_hypersurface(&f, &opts)? };
            emit(common, &report, render::polar);
            Ok(0)
        }
        Command::Colength { file, i, j, l, method } => {
            let ijl = match (i, j, l) {
                (Some(i), Some(j), Some(l)) => Some((*i, *j, *l)),
                _ => None,
            };
            colength_command(common, file, ijl, *method)
        }
        Command::CheckCodim { file, r } => {
            let f = load_matrix(file)?;
            let sample = sample_codim(&f, *r, common.seed, common.limits())?;
            emit(common, &sample, render::codim);
            Ok(if sample.pass { 0 } else { 2 })
        }
        Command::IsEmpty { file, n, r, l } => {
            let n = match (file, n) {
                (Some(path), _) => load_matrix(path)?.n(),
                (None, Some(n)) => *n,
                (None, None) => unreachable!("enforced by clap"),
            };
            let empty = polar_is_empty(n, *r, *l)?;
            let report = EmptinessReport { n, r: *r, l: *l, bound: (r * (r + 1) / 2) as i64 - 1, empty };
            emit(common, &report, |e| format!("P_{} of rank <= {} locus (n={}): {}\n", e.l, e.r, e.n, if e.empty { "empty" } else { "not empty" }));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
