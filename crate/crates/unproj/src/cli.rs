//! Command-line interface. Exit codes: 0 success or all checks pass,
//! 1 some check failed, 2 usage or parse error, 3 timeout.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use unproj_core::arith::{Field, PrimeField, RationalField};
use unproj_core::groebner::{buchberger, dimension, Budget, Ideal};
use unproj_core::ideal_ops::{algebra_map_kernel, eliminate, intersect, quotient, saturate, AlgebraMap};
use unproj_core::poly::{MonomialOrder, Polynomial, Ring, RingContext};
use unproj_core::unprojection::{build_generic_family, CheckId, UnprojectionFamily};

use crate::parse::parse_polynomial;
use crate::problem::{emit_problem_file, parse_order, parse_problem_file, ProblemFile};
use crate::report::emit_report;
use crate::runner::{verify_all, Deadline, RunOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

/// Default largest `n` accepted by `verify`.
pub const DEFAULT_MAX_N: usize = 4;
pub const MAX_N_ENV: &str = "UNPROJ_MAX_N";

#[derive(Parser, Debug)]
#[command(name = "unproj", version, about = "Exact ideal computations and generic Type III unprojection checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Problem file to read.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Override the file's monomial order (lex, grevlex, block(...)).
    #[arg(long)]
    order: Option<String>,
    /// Coefficient field: q or fp:P.
    #[arg(long, default_value = "q")]
    field: String,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    timeout: Option<f64>,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis of an ideal.
    Gb {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Normal form of a polynomial modulo an ideal.
    Nf {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        poly: String,
    },
    /// Intersection of two ideals.
    Intersect {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        with: String,
    },
    /// Colon ideal NUM : DEN.
    Colon {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        num: String,
        #[arg(long)]
        den: String,
    },
    /// Saturation by a polynomial.
    Saturate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        poly: String,
    },
    /// Elimination of variables.
    Eliminate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
    },
    /// Kernel of a map into the file's ring modulo an ideal.
    Kernel {
        #[command(flatten)]
        common: Common,
        /// Source-only variable and its image numerator, as NAME=EXPR.
        #[arg(long = "map", value_name = "NAME=EXPR")]
        maps: Vec<String>,
        /// Common denominator of the images.
        #[arg(long)]
        den: Option<String>,
        /// Ideal of the file taken as the modulus (default zero).
        #[arg(long)]
        modulus: Option<String>,
        /// Target variables shared with the source and mapped identically.
        #[arg(long, value_delimiter = ',')]
        base: Vec<String>,
    },
    /// Krull dimension of the quotient ring.
    Dim {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Write the generic family for a given n as a problem file.
    Family {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification checks for a given n.
    Verify {
        #[arg(long)]
        n: i64,
        /// Run only this check (repeatable).
        #[arg(long = "check", value_name = "ID")]
        checks: Vec<String>,
        #[arg(long, default_value = "q")]
        field: String,
        /// Per-check wall-clock limit in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        /// Per-computation limit on processed S-pairs.
        #[arg(long)]
        max_pairs: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report elapsed_ms as 0 for reproducible output.
        #[arg(long)]
        no_timings: bool,
        /// Re-verify ideal operation postconditions (slow).
        #[arg(long)]
        post_checks: bool,
        /// Largest admissible n (default 4, or the UNPROJ_MAX_N variable).
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Timeout,
}

impl From<unproj_core::Error> for CliError {
    fn from(e: unproj_core::Error) -> Self {
        match e {
            unproj_core::Error::Timeout => CliError::Timeout,
            other => CliError::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

pub fn parse_field(s: &str) -> Result<FieldSpec, String> {
    if s == "q" {
        return Ok(FieldSpec::Rational);
    }
    let p = s
        .strip_prefix("fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| format!("invalid field '{s}' (expected q or fp:P)"))?;
    PrimeField::new(p).map_err(|e| e.to_string())?;
    Ok(FieldSpec::Prime(p))
}

fn timeout_of(secs: Option<f64>) -> CliResult<Option<Duration>> {
    match secs {
        None => Ok(None),
        Some(t) if t.is_finite() && t > 0.0 => Ok(Some(Duration::from_secs_f64(t))),
        Some(t) => Err(CliError::Usage(format!("timeout must be positive, got {t}"))),
    }
}

fn write_output(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> CliResult<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| CliError::Usage(format!("cannot write output: {e}"))),
    }
}

struct Loaded<K: Field> {
    file: ProblemFile<K>,
    ring: Ring<K>,
    budget: Budget,
}

impl<K: Field> Loaded<K> {
    fn new(common: &Common, field: K) -> CliResult<Self> {
        let text = std::fs::read_to_string(&common.input)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", common.input.display())))?;
        let file = parse_problem_file(&text, field)
            .map_err(|e| CliError::Usage(format!("{}: {e}", common.input.display())))?;
        let ring = match &common.order {
            None => file.ring.clone(),
            Some(o) => {
                let order = parse_order(o, file.ring.variables()).map_err(CliError::Usage)?;
                file.ring.with_order(order)?
            }
        };
        let mut budget = Budget::unlimited();
        if let Some(t) = timeout_of(common.timeout)? {
            budget = budget.with_interrupt(Arc::new(Deadline::after(t)));
        }
        Ok(Loaded { file, ring, budget })
    }

    fn ideal(&self, name: Option<&str>) -> CliResult<Ideal<K>> {
        let gens = match name {
            Some(n) => self.file.ideal(n).ok_or_else(|| CliError::Usage(format!("no ideal named '{n}' in the input")))?,
            None => {
                let (_, g) = self.file.ideals.first().ok_or_else(|| CliError::Usage("the input declares no ideal".into()))?;
                g.as_slice()
            }
        };
        let moved = gens.iter().map(|g| g.to_ring(&self.ring)).collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::new(&self.ring, moved)?)
    }

    fn poly(&self, text: &str) -> CliResult<Polynomial<K>> {
        parse_polynomial(text, &self.ring).map_err(|e| CliError::Usage(format!("--poly: {e}")))
    }
}

fn ideal_text<K: Field>(ideal: &Ideal<K>) -> String {
    emit_problem_file(ideal.ring(), &[("result", ideal.generators())])
}

fn compute<K: Field>(cmd: &Command, field: K, stdout: &mut dyn Write) -> CliResult<i32> {
    let (common, text) = match cmd {
        Command::Gb { common, ideal } => {
            let l = Loaded::new(common, field)?;
            let i = l.ideal(ideal.as_deref())?;
            let gb = buchberger(&i, l.ring.order(), &l.budget)?;
            (common, ideal_text(&Ideal::from_basis(gb)))
        }
        Command::Nf { common, ideal, poly } => {
            let l = Loaded::new(common, field)?;
            let i = l.ideal(ideal.as_deref())?;
            let f = l.poly(poly)?;
            let gb = i.groebner_basis(&l.budget)?;
            (common, format!("{}\n", gb.normal_form(&f)))
        }
        Command::Intersect { common, ideal, with } => {
            let l = Loaded::new(common, field)?;
            let r = intersect(&l.ideal(Some(ideal))?, &l.ideal(Some(with))?, &l.budget)?;
            (common, ideal_text(&r))
        }
        Command::Colon { common, num, den } => {
            let l = Loaded::new(common, field)?;
            let r = quotient(&l.ideal(Some(num))?, &l.ideal(Some(den))?, &l.budget)?;
            (common, ideal_text(&r))
        }
        Command::Saturate { common, ideal, poly } => {
            let l = Loaded::new(common, field)?;
            let r = saturate(&l.ideal(ideal.as_deref())?, &l.poly(poly)?, &l.budget)?;
            (common, ideal_text(&r))
        }
        Command::Eliminate { common, ideal, vars } => {
            let l = Loaded::new(common, field)?;
            let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
            let r = eliminate(&l.ideal(ideal.as_deref())?, &refs, &l.budget)?;
            (common, ideal_text(&r))
        }
        Command::Kernel { common, maps, den, modulus, base } => {
            let l = Loaded::new(common, field)?;
            let r = kernel(&l, maps, den.as_deref(), modulus.as_deref(), base, common.order.as_deref())?;
            (common, ideal_text(&r))
        }
        Command::Dim { common, ideal } => {
            let l = Loaded::new(common, field)?;
            let d = dimension(&l.ideal(ideal.as_deref())?, &l.budget)?;
            (common, format!("{d}\n"))
        }
        Command::Family { .. } | Command::Verify { .. } => unreachable!("handled separately"),
    };
    write_output(common.out.as_deref(), &text, stdout)?;
    Ok(EXIT_OK)
}

fn kernel<K: Field>(
    l: &Loaded<K>,
    maps: &[String],
    den: Option<&str>,
    modulus: Option<&str>,
    base: &[String],
    order: Option<&str>,
) -> CliResult<Ideal<K>> {
    let target = &l.ring;
    let mut names: Vec<String> = base.to_vec();
    let mut images: Vec<(String, Polynomial<K>)> = Vec::new();
    for m in maps {
        let (name, expr) = m
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--map expects NAME=EXPR, got '{m}'")))?;
        let name = name.trim().to_owned();
        let p = parse_polynomial(expr, target).map_err(|e| CliError::Usage(format!("--map {name}: {e}")))?;
        names.push(name.clone());
        images.push((name, p));
    }
    for b in base {
        target.require_var(b)?;
    }
    let src_order = match order {
        Some(o) => parse_order(o, &names).map_err(CliError::Usage)?,
        None => MonomialOrder::Grevlex,
    };
    let source = RingContext::new(target.field().clone(), names, src_order, None)?;
    let d = den
        .map(|t| parse_polynomial(t, target).map_err(|e| CliError::Usage(format!("--den: {e}"))))
        .transpose()?;
    let q = match modulus {
        Some(_) => l.ideal(modulus)?,
        None => Ideal::zero(target),
    };
    let refs: Vec<(&str, Polynomial<K>)> = images.iter().map(|(n, p)| (n.as_str(), p.clone())).collect();
    let map = AlgebraMap::new(&source, target, refs, d, q)?;
    Ok(algebra_map_kernel(&map, &l.budget)?)
}

/// Problem file with the family's ring (lex, `T` weighted 1) and the
/// ideals `I_X, I_D, I_r, Delta1, ker_psi, J, ker_phi`.
pub fn family_text<K: Field>(f: &UnprojectionFamily<K>) -> Result<String, unproj_core::Error> {
    let ring = f.ring_t().with_order(MonomialOrder::Lex)?;
    let lift = |ps: &[Polynomial<K>]| ps.iter().map(|p| p.to_ring(&ring)).collect::<Result<Vec<_>, _>>();
    let c = f.claimed_ideals()?;
    let blocks: Vec<(&str, Vec<Polynomial<K>>)> = vec![
        ("I_X", lift(f.i_x().generators())?),
        ("I_D", lift(f.i_d().generators())?),
        ("I_r", lift(f.i_r().generators())?),
        ("Delta1", lift(std::slice::from_ref(f.delta1()))?),
        ("ker_psi", lift(c.ker_psi.generators())?),
        ("J", lift(c.j.generators())?),
        ("ker_phi", lift(c.ker_phi.generators())?),
    ];
    let refs: Vec<(&str, &[Polynomial<K>])> = blocks.iter().map(|(n, g)| (*n, g.as_slice())).collect();
    Ok(emit_problem_file(&ring, &refs))
}

fn max_n(flag: Option<usize>) -> CliResult<usize> {
    if let Some(m) = flag {
        return Ok(m);
    }
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{MAX_N_ENV} must be a nonnegative integer, got '{v}'"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn positive_n(n: i64) -> CliResult<usize> {
    if n < 1 {
        return Err(CliError::Usage(format!("n must be at least 1, got {n}")));
    }
    Ok(n as usize)
}

fn verify_with<K: Field>(field: K, n: usize, ids: &[CheckId], opts: &RunOptions, out: Option<&Path>, stdout: &mut dyn Write) -> CliResult<i32> {
    let family = build_generic_family(field, n)?;
    let report = verify_all(&family, ids, opts);
    write_output(out, &emit_report(&report), stdout)?;
    Ok(report.exit_code())
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> CliResult<i32> {
    match &cli.command {
        Command::Family { n, out } => {
            let n = positive_n(*n)?;
            let f = build_generic_family(RationalField, n)?;
            write_output(out.as_deref(), &family_text(&f)?, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify { n, checks, field, timeout, max_pairs, out, no_timings, post_checks, max_n: cap } => {
            let n = positive_n(*n)?;
            let cap = max_n(*cap)?;
            if n > cap {
                return Err(CliError::Usage(format!("n = {n} exceeds the limit {cap}; raise it with --max-n or {MAX_N_ENV}")));
            }
            let ids = if checks.is_empty() {
                CheckId::ALL.to_vec()
            } else {
                checks.iter().map(|c| c.parse::<CheckId>()).collect::<Result<Vec<_>, _>>()?
            };
            let opts = RunOptions {
                timeout: timeout_of(*timeout)?,
                max_pairs: *max_pairs,
                timings: !no_timings,
                post_checks: *post_checks,
            };
            match parse_field(field).map_err(CliError::Usage)? {
                FieldSpec::Rational => verify_with(RationalField, n, &ids, &opts, out.as_deref(), stdout),
                FieldSpec::Prime(p) => verify_with(PrimeField::new(p)?, n, &ids, &opts, out.as_deref(), stdout),
            }
        }
        other => {
            let common = match other {
                Command::Gb { common, .. }
                | Command::Nf { common, .. }
                | Command::Intersect { common, .. }
                | Command::Colon { common, .. }
                | Command::Saturate { common, .. }
                | Command::Eliminate { common, .. }
                | Command::Kernel { common, .. }
                | Command::Dim { common, .. } => common,
                Command::Family { .. } | Command::Verify { .. } => unreachable!(),
            };
            match parse_field(&common.field).map_err(CliError::Usage)? {
                FieldSpec::Rational => compute(other, RationalField, stdout),
                FieldSpec::Prime(p) => compute(other, PrimeField::new(p)?, stdout),
            }
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            EXIT_USAGE
        }
        Err(CliError::Timeout) => {
            let _ = writeln!(stderr, "error: resource budget exhausted");
            EXIT_TIMEOUT
        }
    }
}
