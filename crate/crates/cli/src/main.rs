//! `jtvo`: exact calculus for determinant-defined symmetric functions.
//!
//! Exit codes: 0 on success, 1 when a verified identity fails to hold,
//! 2 on usage errors (bad flags, malformed input, out-of-range sizes).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jtvo_core::{
    apply_word, elementary, he_matrices, hook_schur, parse_coeff, parse_int_vector,
    product_is_identity, run_named_suite, schur, BosonState, Error, Family, OperatorWord, Poly,
    Result, SuiteReport, COLUMN_LIMIT, SUITE_NAMES,
};

#[derive(Parser)]
#[command(
    name = "jtvo",
    version,
    about = "Exact symbolic calculus for determinant-defined symmetric functions \
             and the Clifford-operator action on them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schur-type function of an integer index vector (straightened)
    Schur {
        /// Comma-separated integer index vector, e.g. "3,1" or "-1,2"
        #[arg(allow_hyphen_values = true)]
        index: String,
        #[command(flatten)]
        family: FamilyOpts,
        #[command(flatten)]
        io: IoOpts,
    },
    /// Generalized elementary function e(p, a)
    Elementary {
        #[arg(allow_hyphen_values = true)]
        p: i64,
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[command(flatten)]
        family: FamilyOpts,
        #[command(flatten)]
        io: IoOpts,
    },
    /// Hook-indexed function s(m|n)
    Hook {
        #[arg(allow_hyphen_values = true)]
        m: i64,
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[command(flatten)]
        family: FamilyOpts,
        #[command(flatten)]
        io: IoOpts,
    },
    /// Apply an operator word to a basis state
    Apply {
        /// Operator word, rightmost letter first, e.g. "psi:3,psistar:0"
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Basis state literal shape@charge, e.g. "2,1@0" or "@-1"
        #[arg(long, allow_hyphen_values = true)]
        state: String,
        #[command(flatten)]
        io: IoOpts,
    },
    /// Transition matrices H and E on an index window, with product check
    Matrices {
        /// Lower window index
        #[arg(long, allow_hyphen_values = true)]
        lo: i64,
        /// Upper window index (exclusive of lo, lo < hi)
        #[arg(long, allow_hyphen_values = true)]
        hi: i64,
        #[command(flatten)]
        family: FamilyOpts,
        #[command(flatten)]
        io: IoOpts,
    },
    /// Run verification suites (all built-in families are swept)
    Verify {
        /// Suite name, or "all"
        #[arg(default_value = "all")]
        suite: String,
        /// Seed for the randomized straightening sweep
        #[arg(long)]
        seed: Option<u64>,
        /// Cap on the partition weight of the swept shapes
        #[arg(long)]
        max_weight: Option<i64>,
        #[command(flatten)]
        io: IoOpts,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum FamilyArg {
    Classical,
    LieCharacter,
    Shifted,
    LinearRecurrence,
}

impl FamilyArg {
    fn name(self) -> &'static str {
        match self {
            FamilyArg::Classical => "classical",
            FamilyArg::LieCharacter => "lie-character",
            FamilyArg::Shifted => "shifted",
            FamilyArg::LinearRecurrence => "linear-recurrence",
        }
    }
}

#[derive(Args, Clone, Default)]
struct FamilyOpts {
    /// Generator family
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Recurrence coefficients a_0,...,a_l as comma-separated rationals
    /// (linear-recurrence only), e.g. "1,1" or "1/2,-3"
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Disable the redundant internal stabilization assertions
    #[arg(long)]
    no_self_checks: bool,
}

#[derive(Args, Clone, Default)]
struct IoOpts {
    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,
    /// TOML config file mirroring the flags (flags take precedence)
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Values read from a `--config` TOML file. Every key mirrors a flag.
#[derive(Clone, Default)]
struct FileConfig {
    family: Option<String>,
    coeffs: Option<String>,
    no_self_checks: Option<bool>,
    json: Option<bool>,
    seed: Option<u64>,
    max_weight: Option<i64>,
}

fn load_config(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read config {}: {e}", path.display())))?;
    let table: toml::Table = text
        .parse()
        .map_err(|e| Error::Parse(format!("bad config {}: {e}", path.display())))?;
    let mut cfg = FileConfig::default();
    for (key, value) in &table {
        match key.as_str() {
            "family" => cfg.family = Some(expect_str(key, value)?),
            "coeffs" => cfg.coeffs = Some(expect_str(key, value)?),
            "no_self_checks" => cfg.no_self_checks = Some(expect_bool(key, value)?),
            "json" => cfg.json = Some(expect_bool(key, value)?),
            "seed" => {
                let n = expect_int(key, value)?;
                cfg.seed = Some(u64::try_from(n).map_err(|_| {
                    Error::Parse(format!("config key {key:?} must be nonnegative"))
                })?);
            }
            "max_weight" => cfg.max_weight = Some(expect_int(key, value)?),
            other => {
                return Err(Error::Parse(format!("unknown config key {other:?}")));
            }
        }
    }
    Ok(cfg)
}

fn expect_str(key: &str, value: &toml::Value) -> Result<String> {
    value
        .as_str()
        .map(str::to_owned)
        .ok_or_else(|| Error::Parse(format!("config key {key:?} must be a string")))
}

fn expect_bool(key: &str, value: &toml::Value) -> Result<bool> {
    value
        .as_bool()
        .ok_or_else(|| Error::Parse(format!("config key {key:?} must be a boolean")))
}

fn expect_int(key: &str, value: &toml::Value) -> Result<i64> {
    value
        .as_integer()
        .ok_or_else(|| Error::Parse(format!("config key {key:?} must be an integer")))
}

fn resolve_io(io: &IoOpts) -> Result<(FileConfig, bool)> {
    let cfg = match &io.config {
        Some(path) => load_config(path)?,
        None => FileConfig::default(),
    };
    let json = io.json || cfg.json.unwrap_or(false);
    Ok((cfg, json))
}

fn resolve_family(opts: &FamilyOpts, cfg: &FileConfig) -> Result<(Family, &'static str)> {
    let arg = match opts.family {
        Some(arg) => arg,
        None => match cfg.family.as_deref() {
            Some(s) => FamilyArg::from_str(s, true)
                .map_err(|e| Error::Parse(format!("config family: {e}")))?,
            None => FamilyArg::Classical,
        },
    };
    let family = match arg {
        FamilyArg::Classical => Family::classical(),
        FamilyArg::LieCharacter => Family::lie_character(),
        FamilyArg::Shifted => Family::shifted(),
        FamilyArg::LinearRecurrence => {
            let text = opts
                .coeffs
                .clone()
                .or_else(|| cfg.coeffs.clone())
                .ok_or_else(|| {
                    Error::Parse("linear-recurrence needs --coeffs a_0,...,a_l".into())
                })?;
            let coeffs = text
                .split(',')
                .map(|tok| parse_coeff(tok.trim()))
                .collect::<Result<Vec<_>>>()?;
            Family::linear_recurrence(coeffs)?
        }
    };
    let suppress = opts.no_self_checks || cfg.no_self_checks.unwrap_or(false);
    let family = if suppress {
        family.without_self_checks()
    } else {
        family
    };
    Ok((family, arg.name()))
}

/// What a handler produced: the rendered text, the JSON report, and
/// whether every checked identity held.
struct Output {
    text: String,
    json: serde_json::Value,
    identity_ok: bool,
}

impl Output {
    fn value(text: String, json: serde_json::Value) -> Self {
        Output {
            text,
            json,
            identity_ok: true,
        }
    }
}

fn exit_code(outcome: &Result<Output>) -> u8 {
    match outcome {
        Ok(out) if out.identity_ok => 0,
        Ok(_) => 1,
        Err(Error::IdentityViolation(_)) => 1,
        Err(_) => 2,
    }
}

fn run_schur(index: &str, family: &FamilyOpts, io: &IoOpts) -> Result<Output> {
    let (cfg, json) = resolve_io(io)?;
    let (f, name) = resolve_family(family, &cfg)?;
    let v = parse_int_vector(index)?;
    if v.len() > COLUMN_LIMIT {
        return Err(Error::Range(format!(
            "index vector has {} entries; at most {COLUMN_LIMIT} are supported",
            v.len()
        )));
    }
    let poly = schur(&f, &v);
    let report = serde_json::json!({
        "schema": 1,
        "command": "schur",
        "family": name,
        "index": v,
        "result": poly.to_json(),
    });
    Ok(Output::value(poly.to_string(), report).with_json_flag(json))
}

fn run_elementary(p: i64, a: i64, family: &FamilyOpts, io: &IoOpts) -> Result<Output> {
    let (cfg, json) = resolve_io(io)?;
    let (f, name) = resolve_family(family, &cfg)?;
    if p - a > COLUMN_LIMIT as i64 {
        return Err(Error::Range(format!(
            "e({p}, {a}) needs a determinant of size {}, above the limit {COLUMN_LIMIT}",
            p - a
        )));
    }
    let poly = elementary(&f, p, a);
    let report = serde_json::json!({
        "schema": 1,
        "command": "elementary",
        "family": name,
        "p": p,
        "a": a,
        "result": poly.to_json(),
    });
    Ok(Output::value(poly.to_string(), report).with_json_flag(json))
}

fn run_hook(m: i64, n: i64, family: &FamilyOpts, io: &IoOpts) -> Result<Output> {
    let (cfg, json) = resolve_io(io)?;
    let (f, name) = resolve_family(family, &cfg)?;
    if n > COLUMN_LIMIT as i64 || m > COLUMN_LIMIT as i64 {
        return Err(Error::Range(format!(
            "hook indices ({m}, {n}) exceed the supported size {COLUMN_LIMIT}"
        )));
    }
    let poly = hook_schur(&f, m, n);
    let report = serde_json::json!({
        "schema": 1,
        "command": "hook",
        "family": name,
        "m": m,
        "n": n,
        "result": poly.to_json(),
    });
    Ok(Output::value(poly.to_string(), report).with_json_flag(json))
}

fn run_apply(word: &str, state: &str, io: &IoOpts) -> Result<Output> {
    let (_cfg, json) = resolve_io(io)?;
    let word: OperatorWord = word.parse()?;
    let state: BosonState = state.parse()?;
    let out = apply_word(&word, &state);
    let report = serde_json::json!({
        "schema": 1,
        "command": "apply",
        "word": word.to_string(),
        "result": out.to_json(),
    });
    Ok(Output::value(out.to_string(), report).with_json_flag(json))
}

fn run_matrices(lo: i64, hi: i64, family: &FamilyOpts, io: &IoOpts) -> Result<Output> {
    let (cfg, json) = resolve_io(io)?;
    let (f, name) = resolve_family(family, &cfg)?;
    if hi - lo >= COLUMN_LIMIT as i64 {
        return Err(Error::Range(format!(
            "window ({lo}, {hi}) is wider than the supported size {COLUMN_LIMIT}"
        )));
    }
    let (hm, em) = he_matrices(&f, lo, hi)?;
    let product_ok = product_is_identity(&hm, &em);

    let mut text = String::new();
    let row_line = |label: &str, idx: i64, row: &[Poly]| {
        let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        format!("{label}[{idx}] = {}\n", cells.join(" | "))
    };
    text.push_str(&format!("window [{lo}, {hi}], family {name}\n"));
    for (i, row) in hm.iter().enumerate() {
        text.push_str(&row_line("H", lo + i as i64, row));
    }
    for (i, row) in em.iter().enumerate() {
        text.push_str(&row_line("E", lo + i as i64, row));
    }
    text.push_str(&format!(
        "product H*E = identity: {}",
        if product_ok { "PASS" } else { "FAIL" }
    ));

    let to_rows = |mat: &[Vec<Poly>]| -> serde_json::Value {
        serde_json::Value::Array(
            mat.iter()
                .map(|row| serde_json::Value::Array(row.iter().map(|p| p.to_json()).collect()))
                .collect(),
        )
    };
    let report = serde_json::json!({
        "schema": 1,
        "command": "matrices",
        "family": name,
        "lo": lo,
        "hi": hi,
        "h": to_rows(&hm),
        "e": to_rows(&em),
        "product_is_identity": product_ok,
    });
    let mut out = Output::value(text, report).with_json_flag(json);
    out.identity_ok = product_ok;
    Ok(out)
}

fn run_one_suite(name: &str, seed: u64, max_weight: Option<i64>) -> SuiteReport {
    run_named_suite(name, seed, max_weight)
        .unwrap_or_else(|| unreachable!("unvalidated suite name {name:?}"))
}

fn run_verify(
    suite: &str,
    seed: Option<u64>,
    max_weight: Option<i64>,
    io: &IoOpts,
) -> Result<Output> {
    let (cfg, json) = resolve_io(io)?;
    let seed = seed.or(cfg.seed).unwrap_or(0);
    let max_weight = max_weight.or(cfg.max_weight);
    let selected: Vec<&str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else if SUITE_NAMES.contains(&suite) {
        vec![SUITE_NAMES.iter().find(|n| **n == suite).copied().unwrap()]
    } else {
        return Err(Error::Parse(format!(
            "unknown suite {suite:?}; available: all, {}",
            SUITE_NAMES.join(", ")
        )));
    };

    let reports: Vec<SuiteReport> = selected
        .iter()
        .map(|name| run_one_suite(name, seed, max_weight))
        .collect();
    let all_ok = reports.iter().all(SuiteReport::passed);

    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.to_string());
        text.push('\n');
    }
    text.push_str(&format!(
        "verify: {} suites, {}",
        reports.len(),
        if all_ok { "all passed" } else { "FAILURES" }
    ));

    let suites_json: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            serde_json::json!({
                "name": r.name,
                "cases": r.cases,
                "failures": r.failures,
                "pass": r.passed(),
                "counterexample": r.first_counterexample,
            })
        })
        .collect();
    let report = serde_json::json!({
        "schema": 1,
        "command": "verify",
        "suite": suite,
        "seed": seed,
        "max_weight": max_weight,
        "suites": suites_json,
        "pass": all_ok,
    });
    let mut out = Output::value(text, report).with_json_flag(json);
    out.identity_ok = all_ok;
    Ok(out)
}

impl Output {
    /// Collapse to the JSON rendering when requested.
    fn with_json_flag(mut self, json: bool) -> Output {
        if json {
            self.text = serde_json::to_string_pretty(&self.json).expect("serializable report");
        }
        self
    }
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Schur { index, family, io } => run_schur(index, family, io),
        Command::Elementary { p, a, family, io } => run_elementary(*p, *a, family, io),
        Command::Hook { m, n, family, io } => run_hook(*m, *n, family, io),
        Command::Apply { word, state, io } => run_apply(word, state, io),
        Command::Matrices { lo, hi, family, io } => run_matrices(*lo, *hi, family, io),
        Command::Verify {
            suite,
            seed,
            max_weight,
            io,
        } => run_verify(suite, *seed, *max_weight, io),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let code = exit_code(&outcome);
    match &outcome {
        Ok(out) => println!("{}", out.text),
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(code)
}
