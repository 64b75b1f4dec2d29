//! `hadamard`: construct, verify and tabulate Hadamard matrices.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 open order (no
//! construction known), 3 construction known but its data is not shipped,
//! 4 verification failed.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use hadamard::diffsets::{cds, search_orbit_sds};
use hadamard::exactmat::{
    hadamard_defect, parse_any, skew_hadamard_defect, to_csv, to_pm1, Matrix, MatrixDocument,
};
use hadamard::registry::{resolve, MethodFilter, ResolveOptions, ResolveOutcome, Status};
use hadamard::seqfam::{t_sequences, turyn_sequences, turyn_sequences_exist, SeqFamily};
use hadamard::{catalog, Error};

const OK: u8 = 0;
const USAGE: u8 = 1;
const OPEN: u8 = 2;
const NO_DATA: u8 = 3;
const FAILED: u8 = 4;

#[derive(Parser)]
#[command(name = "hadamard", version, about = "Hadamard and skew Hadamard matrices")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Pm1,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a matrix of the given order and print it.
    Construct {
        order: usize,
        #[arg(long)]
        skew: bool,
        #[arg(long, value_enum, default_value_t = Format::Pm1)]
        format: Format,
        /// Skip the final Hadamard check.
        #[arg(long)]
        no_check: bool,
        /// Force a construction, e.g. `SDS`, `CW(3)` or `Double`.
        #[arg(long)]
        method: Option<String>,
    },
    /// Report whether a matrix of the given order can be built, without building it.
    Exists {
        order: usize,
        #[arg(long)]
        skew: bool,
    },
    /// Check a matrix file (pm1, csv or json).
    Verify {
        file: PathBuf,
        #[arg(long)]
        skew: bool,
        #[arg(long)]
        verbose: bool,
    },
    /// Print the dispatch table for odd n up to `max`.
    Table {
        #[arg(long, default_value_t = 249)]
        max: usize,
        #[arg(long)]
        skew: bool,
    },
    /// Generate an auxiliary object.
    Gen {
        #[command(subcommand)]
        object: GenObject,
        #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum GenObject {
    /// T-sequences of the given length.
    TSequences {
        #[arg(long)]
        length: usize,
    },
    /// Turyn sequences of lengths (l, l, l-1, l-1).
    Turyn {
        #[arg(long)]
        length: usize,
    },
    /// A supplementary difference set over Z_n.
    Sds {
        #[arg(long)]
        order: u32,
        #[arg(long)]
        skew: bool,
    },
    /// Complementary difference sets in a group of the given order.
    Cds {
        #[arg(long)]
        order: u64,
    },
    /// Williamson matrices (first rows) of the given odd order.
    Williamson {
        #[arg(long)]
        order: usize,
    },
}

/// A failure with its exit code.
struct Exit(u8, String);

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Self {
        let code = match e.downcast_ref::<Error>() {
            Some(Error::NotApplicable(_)) => NO_DATA,
            Some(Error::CheckFailed { .. }) => FAILED,
            _ => USAGE,
        };
        Exit(code, format!("{e:#}"))
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

type CmdResult = std::result::Result<(), Exit>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.cmd {
        Cmd::Construct { order, skew, format, no_check, method } => construct(order, skew, format, !no_check, method),
        Cmd::Exists { order, skew } => exists(order, skew),
        Cmd::Verify { file, skew, verbose } => verify(&file, skew, verbose),
        Cmd::Table { max, skew } => table(max, skew),
        Cmd::Gen { object, format } => gen(object, format),
    };
    match result {
        Ok(()) => ExitCode::from(OK),
        Err(Exit(code, msg)) => {
            eprintln!("hadamard: {msg}");
            ExitCode::from(code)
        }
    }
}

fn out(text: &str) -> CmdResult {
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
        .map_err(|e| Exit(USAGE, format!("writing output: {e}")))
}

fn kind(skew: bool) -> &'static str {
    if skew {
        "skew Hadamard"
    } else {
        "Hadamard"
    }
}

/// Maps a non-constructed outcome to its exit code and message.
fn not_built(order: usize, skew: bool, o: &ResolveOutcome) -> Exit {
    let note = o.note.clone().unwrap_or_default();
    match o.status {
        Status::UnknownOrder => Exit(OPEN, format!("order {order} is open: {note}")),
        _ => {
            let pref = o.preferred.map(|m| format!(" (table method: {m})")).unwrap_or_default();
            Exit(NO_DATA, format!("{} order {order} not implemented{pref}: {note}", kind(skew)))
        }
    }
}

fn construct(order: usize, skew: bool, format: Format, check: bool, method: Option<String>) -> CmdResult {
    let method = method
        .map(|m| m.parse::<MethodFilter>())
        .transpose()
        .map_err(|e| Exit(USAGE, e.to_string()))?;
    let o = resolve(order, ResolveOptions { skew, existence: false, check, method })?;
    let Some(h) = &o.matrix else {
        return Err(not_built(order, skew, &o));
    };
    if let Some(note) = &o.note {
        eprintln!("hadamard: {note}");
    }
    let text = match format {
        Format::Pm1 => to_pm1(h),
        Format::Csv => to_csv(h),
        Format::Json => MatrixDocument::new(h, skew, o.recipe.clone()).to_json() + "\n",
    };
    out(&text)
}

fn exists(order: usize, skew: bool) -> CmdResult {
    let o = resolve(order, ResolveOptions { skew, existence: true, check: true, method: None })?;
    if o.status != Status::ExistsOnly {
        return Err(not_built(order, skew, &o));
    }
    let recipe = o.recipe.unwrap_or_default();
    out(&format!("{} matrix of order {order}: yes, via {recipe}\n", kind(skew)))
}

fn verify(file: &PathBuf, skew: bool, verbose: bool) -> CmdResult {
    let text = std::fs::read_to_string(file)
        .with_context(|| format!("reading {}", file.display()))
        .map_err(|e| Exit(USAGE, format!("{e:#}")))?;
    let m: Matrix = parse_any(&text).map_err(|e| Exit(USAGE, format!("{}: {e}", file.display())))?;
    let defect = if skew {
        skew_hadamard_defect(&m).map(|d| d.to_string())
    } else {
        hadamard_defect(&m).map(|d| d.to_string())
    };
    match defect {
        None => {
            if verbose {
                out(&format!("{}: {} matrix of order {}\n", file.display(), kind(skew), m.rows()))?;
            }
            Ok(())
        }
        Some(d) => Err(Exit(FAILED, format!("{}: {d}", file.display()))),
    }
}

fn table(max: usize, skew: bool) -> CmdResult {
    if max > 1000 {
        return Err(Exit(USAGE, "--max is at most 1000".into()));
    }
    let cat = catalog::global()?;
    let mut text = String::new();
    for n in (1..=max).step_by(2) {
        let cell = cat.dispatch.lookup(n as u32, skew);
        let name = match cell {
            Some(Some(m)) => m.to_string(),
            Some(None) => "UNKNOWN".into(),
            None => "-".into(),
        };
        let o = resolve(4 * n, ResolveOptions { skew, existence: true, check: true, method: None })?;
        let built = match o.status {
            Status::UnknownOrder => String::new(),
            Status::NotImplemented => "NO-DATA".into(),
            _ if o.fallback => format!("via {}", o.recipe.unwrap_or_default()),
            _ => "ok".into(),
        };
        text.push_str(format!("{n:>4}  {name:<12} {built}").trim_end());
        text.push('\n');
    }
    out(&text)
}

fn rows_pm1(rows: &[Vec<i8>]) -> String {
    rows.iter()
        .map(|r| {
            let mut s: String = r
                .iter()
                .map(|&v| match v {
                    1 => '+',
                    -1 => '-',
                    _ => '0',
                })
                .collect();
            s.push('\n');
            s
        })
        .collect()
}

fn rows_csv(rows: &[Vec<i8>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(i8::to_string).collect::<Vec<_>>().join(",") + "\n")
        .collect()
}

fn emit_rows(rows: &[Vec<i8>], json: serde_json::Value, format: Format) -> CmdResult {
    out(&match format {
        Format::Pm1 => rows_pm1(rows),
        Format::Csv => rows_csv(rows),
        Format::Json => json.to_string() + "\n",
    })
}

fn emit_family(fam: &SeqFamily, format: Format) -> CmdResult {
    let json = serde_json::to_value(fam).map_err(|e| Exit(USAGE, e.to_string()))?;
    emit_rows(&fam.members, json, format)
}

fn gen(object: GenObject, format: Format) -> CmdResult {
    match object {
        GenObject::TSequences { length } => emit_family(&t_sequences(length)?, format),
        GenObject::Turyn { length } => {
            if !turyn_sequences_exist(length) {
                return Err(Exit(OPEN, format!("no Turyn sequences of length {length} are known")));
            }
            emit_family(&turyn_sequences(length)?, format)
        }
        GenObject::Cds { order } => {
            let pair = cds(order, None)?;
            let sets = vec![pair.a.clone(), pair.b.clone()];
            let json = serde_json::json!({ "group": pair.group, "a": pair.a, "b": pair.b });
            emit_sets(&sets, json, format)
        }
        GenObject::Sds { order, skew } => {
            let cat = catalog::global()?;
            let fam = match cat.sds_family(order, skew) {
                Some(f) => f.clone(),
                None => search_orbit_sds(order, skew, 20_000_000)?
                    .ok_or_else(|| Exit(NO_DATA, format!("no SDS over Z_{order} in the catalog or by orbit search")))?
                    .build()?,
            };
            let json = serde_json::json!({
                "group": fam.group,
                "sets": fam.sets,
                "lambda": fam.lambda,
                "skew": fam.is_skew(),
            });
            emit_sets(&fam.sets, json, format)
        }
        GenObject::Williamson { order } => {
            let q = hadamard::constructions::families::williamson_quad(order)?;
            let json = serde_json::to_value(&q).map_err(|e| Exit(USAGE, e.to_string()))?;
            emit_rows(q.rows(), json, format)
        }
    }
}

fn emit_sets(sets: &[Vec<u32>], json: serde_json::Value, format: Format) -> CmdResult {
    out(&match format {
        Format::Json => json.to_string() + "\n",
        Format::Csv | Format::Pm1 => sets
            .iter()
            .map(|s| s.iter().map(u32::to_string).collect::<Vec<_>>().join(",") + "\n")
            .collect(),
    })
}
