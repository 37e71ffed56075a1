//! The `lcd` command-line tool.
//!
//! Exit codes: 0 success (or "yes"), 1 a domain "no" (not LCD, no optimal
//! code, a discrepancy in a table), 2 usage or data errors, 3 search budget
//! exhausted.

use std::io::{Read, Write};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{Field, Form};
use crate::bounds::{griesmer_ld_upper, ld2_exact, BoundKind, Provenance};
use crate::code::LinearCode;
use crate::construct::{extend_lcd, optimal_n2_for, recipes, QUATERNARY_BASES};
use crate::oracle::{brute_ld, enumerate_optimal_k2, first_profile_with_distance, SearchOptions, DEFAULT_BUDGET};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Bumped whenever a JSON field is renamed or removed.
pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable overriding the default search budget.
pub const BUDGET_ENV: &str = "LCD_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "lcd", version, about = "LCD codes over GF(2), GF(3) and GF(4)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report n, k, d, hull dimension, Gram matrix and the LCD verdict.
    Check {
        /// Generator matrix file, or `-` for standard input.
        path: String,
        #[arg(long)]
        form: Option<Form>,
    },
    /// Print an optimal [n, 2] LCD generator matrix.
    Construct {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        form: Option<Form>,
    },
    /// Tabulate LD(n, k) from closed forms, the oracle, or both.
    Table(TableArgs),
    /// List optimal [n, 2] LCD codes up to equivalence (JSON).
    Enumerate {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        /// Target distance; defaults to LD(n, 2).
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        form: Option<Form>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Add one dimension to a ternary LCD code, keeping it LCD.
    Extend {
        /// Generator matrix file, or `-` for standard input.
        path: String,
    },
    /// Show the construction recipes.
    Recipes {
        #[arg(long)]
        q: Option<u32>,
        /// Re-run the search behind the GF(4) base profiles and print them.
        #[arg(long)]
        derive: bool,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Maximum candidates per search.
    #[arg(long)]
    pub budget: Option<u64>,
}

impl SearchArgs {
    fn options(&self) -> Result<SearchOptions> {
        let budget = match self.budget {
            Some(b) => b,
            None => match std::env::var(BUDGET_ENV) {
                Ok(v) => v.trim().parse().map_err(|_| Error::Domain(format!("{BUDGET_ENV}={v} is not an integer")))?,
                Err(_) => DEFAULT_BUDGET,
            },
        };
        Ok(SearchOptions { budget, jobs: self.jobs })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Closed,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub form: Option<Form>,
    #[arg(long, default_value_t = 2)]
    pub nmin: usize,
    #[arg(long)]
    pub nmax: usize,
    #[arg(long, conflicts_with = "kmax")]
    pub k: Option<usize>,
    /// Tabulate every k from 1 to this value.
    #[arg(long)]
    pub kmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Closed)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub out: OutputFormat,
    /// Leave the timestamp out of the metadata.
    #[arg(long)]
    pub no_timestamp: bool,
    #[command(flatten)]
    pub search: SearchArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    /// Closed form and oracle agree.
    Confirmed,
    /// Closed form and oracle disagree.
    Discrepant,
    /// Closed form only (not searched).
    Unchecked,
    /// Oracle only (no closed form for this k or form).
    OracleOnly,
    /// Neither value is available.
    Unavailable,
    /// The oracle ran out of budget.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub q: u8,
    pub n: usize,
    pub k: usize,
    pub form: Form,
    /// Best known value: the oracle's when it ran, else the closed form's.
    pub value: Option<usize>,
    pub provenance: Option<Provenance>,
    pub kind: Option<BoundKind>,
    pub closed_value: Option<usize>,
    pub oracle_value: Option<usize>,
    pub griesmer_upper: Option<usize>,
    pub confirmed: bool,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableMetadata {
    pub schema_version: u32,
    pub tool_version: String,
    pub q: u8,
    pub form: Form,
    pub n_min: usize,
    pub n_max: usize,
    pub k_values: Vec<usize>,
    pub mode: Mode,
    /// Seconds since the Unix epoch.
    pub timestamp: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableDocument {
    pub metadata: TableMetadata,
    pub rows: Vec<TableRow>,
}

/// Euclidean, except Hermitian over GF(4).
pub fn default_form(field: Field) -> Form {
    if field == Field::Gf4 {
        Form::Hermitian
    } else {
        Form::Euclidean
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Budget { .. } => EXIT_BUDGET,
        Error::NoOptimalLcd { .. } => EXIT_NO,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Domain(format!("i/o error: {e}"))
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text).map_err(io_err)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Domain(format!("cannot read {path}: {e}")))?;
    }
    Ok(text)
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Check { path, form } => {
            let code = LinearCode::parse(&read_input(&path, stdin)?)?;
            cmd_check(&code, form, out)
        }
        Command::Construct { q, n, form } => cmd_construct(Field::new(q)?, n, form, out, err),
        Command::Table(args) => cmd_table(&args, out),
        Command::Enumerate { q, n, d, form, search } => {
            let field = Field::new(q)?;
            let form = form.unwrap_or(default_form(field));
            let report = enumerate_optimal_k2(field, n, form, d, &search.options()?)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes")).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Extend { path } => {
            let code = LinearCode::parse(&read_input(&path, stdin)?)?;
            cmd_extend(&code, out, err)
        }
        Command::Recipes { q, derive } => cmd_recipes(q, derive, out),
    }
}

pub fn cmd_check(code: &LinearCode, form: Option<Form>, out: &mut dyn Write) -> Result<i32> {
    let form = form.unwrap_or(default_form(code.field()));
    let gram = code.gram(form)?;
    let lcd = code.is_lcd(form)?;
    let d = code.min_distance()?;
    let hull = code.hull_dim(form)?;
    let verdict = if lcd { "yes" } else { "no" };
    let text = format!(
        "field: {}\nform: {form}\nn: {}\nk: {}\nd: {d}\nhull_dim: {hull}\ngram: {gram}\nLCD: {verdict}, d={d}, gram={gram}\n",
        code.field(),
        code.n(),
        code.k()
    );
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(if lcd { EXIT_OK } else { EXIT_NO })
}

pub fn cmd_construct(field: Field, n: usize, form: Option<Form>, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let expected = default_form(field);
    if let Some(f) = form {
        field.check_form(f)?;
        if f != expected {
            return Err(Error::Unsupported(format!("constructions over {field} use the {expected} form")));
        }
    }
    match optimal_n2_for(field, n) {
        Ok(code) => {
            out.write_all(code.to_text().as_bytes()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Err(e @ Error::NoOptimalLcd { .. }) => {
            writeln!(err, "{e}").map_err(io_err)?;
            Ok(EXIT_NO)
        }
        Err(e) => Err(e),
    }
}

pub fn cmd_extend(code: &LinearCode, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let extended = extend_lcd(code)?;
    let field = code.field();
    let beta = extended.generator().row(extended.k() - 1);
    let b = field.inner(Form::Euclidean, beta, beta);
    out.write_all(extended.to_text().as_bytes()).map_err(io_err)?;
    writeln!(err, "b={b}\ngram={}", extended.gram(Form::Euclidean)?).map_err(io_err)?;
    Ok(EXIT_OK)
}

/// Builds the table rows; `Err` only for invalid arguments.
pub fn build_table(args: &TableArgs) -> Result<TableDocument> {
    let field = Field::new(args.q)?;
    let form = args.form.unwrap_or(default_form(field));
    field.check_form(form)?;
    if args.nmin == 0 || args.nmin > args.nmax {
        return Err(Error::Domain(format!("need 1 <= nmin <= nmax, got {}..{}", args.nmin, args.nmax)));
    }
    let k_values: Vec<usize> = match (args.k, args.kmax) {
        (Some(k), _) => vec![k],
        (None, Some(kmax)) => (1..=kmax).collect(),
        (None, None) => vec![2],
    };
    if k_values.contains(&0) {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let opts = args.search.options()?;
    let mut rows = Vec::new();
    for n in args.nmin..=args.nmax {
        for &k in k_values.iter().filter(|&&k| k <= n) {
            rows.push(table_row(field, n, k, form, args.mode, &opts)?);
        }
    }
    let timestamp = (!args.no_timestamp)
        .then(|| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0));
    Ok(TableDocument {
        metadata: TableMetadata {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            q: field.order(),
            form,
            n_min: args.nmin,
            n_max: args.nmax,
            k_values,
            mode: args.mode,
            timestamp,
        },
        rows,
    })
}

fn table_row(field: Field, n: usize, k: usize, form: Form, mode: Mode, opts: &SearchOptions) -> Result<TableRow> {
    let closed = if k == 2 && mode != Mode::Oracle && n >= 2 {
        match ld2_exact(field, n, form) {
            Ok(r) => Some(r),
            Err(Error::Unsupported(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let mut skipped = false;
    let oracle = if mode == Mode::Closed {
        None
    } else {
        match brute_ld(field, n, k, form, opts) {
            Ok(r) => Some(r),
            Err(Error::Budget { .. }) => {
                skipped = true;
                None
            }
            Err(e) => return Err(e),
        }
    };
    let closed_value = closed.as_ref().map(|r| r.value);
    let oracle_value = oracle.as_ref().map(|r| r.value);
    let status = match (closed_value, oracle_value) {
        _ if skipped => RowStatus::Skipped,
        (Some(c), Some(o)) if c == o => RowStatus::Confirmed,
        (Some(_), Some(_)) => RowStatus::Discrepant,
        (Some(_), None) => RowStatus::Unchecked,
        (None, Some(_)) => RowStatus::OracleOnly,
        (None, None) => RowStatus::Unavailable,
    };
    let best = oracle.as_ref().or(closed.as_ref());
    let provenance = match (status, &closed) {
        (RowStatus::Confirmed, Some(c)) => Some(match c.provenance {
            Provenance::ClosedFormUnconfirmed => Provenance::ClosedForm,
            p => p,
        }),
        _ => best.map(|r| r.provenance),
    };
    Ok(TableRow {
        q: field.order(),
        n,
        k,
        form,
        value: best.map(|r| r.value),
        provenance,
        kind: best.map(|r| r.kind),
        closed_value,
        oracle_value,
        griesmer_upper: griesmer_ld_upper(field, n, k).ok(),
        confirmed: status == RowStatus::Confirmed,
        status,
    })
}

pub fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Result<i32> {
    let doc = build_table(args)?;
    match args.out {
        OutputFormat::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("table serializes")).map_err(io_err)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in &doc.rows {
                w.serialize(row).map_err(|e| Error::Domain(format!("csv: {e}")))?;
            }
            w.flush().map_err(io_err)?;
        }
    }
    let code = if doc.rows.iter().any(|r| r.status == RowStatus::Discrepant) {
        EXIT_NO
    } else if doc.rows.iter().any(|r| r.status == RowStatus::Skipped) {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    Ok(code)
}

pub fn cmd_recipes(q: Option<u32>, derive: bool, out: &mut dyn Write) -> Result<i32> {
    if derive {
        out.write_all(derive_quaternary_bases()?.as_bytes()).map_err(io_err)?;
        return Ok(EXIT_OK);
    }
    let fields = match q {
        Some(q) => vec![Field::new(q)?],
        None => Field::ALL.to_vec(),
    };
    let mut text = String::new();
    for field in fields {
        for r in recipes(field) {
            let assignment: Vec<String> =
                r.assignment.iter().map(|&((i, j), e)| format!("S{i}{j}={e}")).collect();
            let gram = match r.gram {
                Some(g) => format!("[[{},{}],[{},{}]]", g[0][0], g[0][1], g[1][0], g[1][1]),
                None => "varies".into(),
            };
            text.push_str(&format!(
                "q={} {}: {}; d={}; gram={gram}\n",
                r.q,
                r.label(),
                assignment.join(" "),
                r.distance
            ));
        }
    }
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(EXIT_OK)
}

/// Rust source for the GF(4) base profile table, recomputed by search.
pub fn derive_quaternary_bases() -> Result<String> {
    let mut s = format!("pub const QUATERNARY_BASES: [(usize, [u32; 16]); {}] = [\n", QUATERNARY_BASES.len());
    for &(n0, _) in &QUATERNARY_BASES {
        let d = ld2_exact(Field::Gf4, n0, Form::Hermitian)?.value;
        let p = first_profile_with_distance(Field::Gf4, n0, Form::Hermitian, d)?
            .ok_or_else(|| Error::Postcondition(format!("no Hermitian LCD [{n0}, 2, {d}] profile")))?;
        let counts: Vec<String> = p.counts().iter().map(|c| c.to_string()).collect();
        s.push_str(&format!("    ({n0}, [{}]),\n", counts.join(", ")));
    }
    s.push_str("];\n");
    Ok(s)
}
