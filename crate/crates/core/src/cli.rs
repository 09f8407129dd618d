//! Command-line front end.
//!
//! ```text
//! supercat table <T|S|C|B> <MAX_M> <MAX_N>
//! supercat verify <IDENTITY|all> [--max-m M] [--max-n N] [--max-sum K] [--max X] [--force]
//! supercat map <MAP> [PATH]...
//! supercat enumerate <dyck|motzkin|ballot|ballot-even|pairs> <ARGS>... [--count]
//! supercat render <PATH> [OUT] [--markers]
//! ```
//!
//! Exit codes: 0 success, 1 failed check or violated precondition, 2 usage.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bijections::{
    dyck_to_motzkin, expand_no_return, expand_return, join_balanced, motzkin_to_dyck,
    shrink_no_return, shrink_return, split_balanced, DyckPair,
};
use crate::enumerate::{
    enum_ballot, enum_ballot_even, enum_dyck, enum_motzkin2, enum_pairs_total, PathFamily,
};
use crate::error::{Error, Result};
use crate::paths::{reverse, DyckPath, LatticePath, MotzkinStep, TwoMotzkinPath};
use crate::render::{render_svg, RenderOptions};
use crate::table::{Table, TableKind};
use crate::verify::{self, Bounds, Identity, VerificationReport};

#[derive(Debug, Parser)]
#[command(
    name = "supercat",
    version,
    about = "Super Catalan numbers and lattice path bijections"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,

    /// Worker threads; 0 means one per core.
    #[arg(long, global = true, env = "SUPERCAT_JOBS", default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a table of T, S, C or B values.
    Table {
        #[arg(value_parser = parse_table_kind)]
        kind: TableKind,
        max_m: u64,
        max_n: u64,
    },
    /// Check an identity or bijection over a range.
    Verify {
        /// One of the identity names, or `all`.
        #[arg(value_parser = parse_target)]
        identity: Target,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_sum: Option<usize>,
        /// Sets both --max-m and --max-n.
        #[arg(long)]
        max: Option<usize>,
        /// Allow enumeration-backed checks beyond m + n = 18.
        #[arg(long)]
        force: bool,
    },
    /// Apply a bijection to path(s).
    Map {
        #[arg(value_enum)]
        map: MapKind,
        /// Input paths. `unpair` reads two lines from stdin when none are given.
        paths: Vec<String>,
    },
    /// List the paths of a family.
    Enumerate {
        #[arg(value_enum)]
        family: FamilyKind,
        params: Vec<usize>,
        /// Print only the number of paths.
        #[arg(long)]
        count: bool,
    },
    /// Draw a path as SVG.
    Render {
        path: String,
        /// Output file; stdout when omitted.
        out: Option<PathBuf>,
        #[arg(long)]
        markers: bool,
        #[arg(long, default_value_t = 40)]
        unit: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    One(Identity),
    All,
}

fn parse_target(s: &str) -> std::result::Result<Target, String> {
    if s == "all" {
        return Ok(Target::All);
    }
    s.parse::<Identity>().map(Target::One).map_err(|_| {
        let names: Vec<_> = Identity::ALL.iter().map(|id| id.name()).collect();
        format!("expected one of: {}, all", names.join(", "))
    })
}

fn parse_table_kind(s: &str) -> std::result::Result<TableKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    M2d,
    D2m,
    F,
    FInv,
    G,
    GInv,
    Pair,
    Unpair,
    Reverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Dyck,
    Motzkin,
    Ballot,
    BallotEven,
    Pairs,
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return 1;
        }
    };
    let result = execute(&cli, &pool, stdin, out, err);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(
    cli: &Cli,
    pool: &rayon::ThreadPool,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8> {
    match &cli.command {
        Command::Table { kind, max_m, max_n } => {
            let (table, warnings) = Table::build(*kind, *max_m, *max_n);
            for w in warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let text = match cli.format {
                Format::Tsv => table.to_tsv(),
                Format::Json => table.to_json(),
            };
            write_out(out, &text)?;
            Ok(0)
        }
        Command::Verify {
            identity,
            max_m,
            max_n,
            max_sum,
            max,
            force,
        } => {
            let bounds = Bounds {
                max_m: max_m.or(*max),
                max_n: max_n.or(*max),
                max_sum: *max_sum,
            };
            let reports = match identity {
                Target::One(id) => vec![pool.install(|| verify::run(*id, &bounds, *force))?],
                Target::All => pool.install(|| verify::run_all(&bounds, *force))?,
            };
            write_out(
                out,
                &format_reports(&reports, cli.format, matches!(identity, Target::All)),
            )?;
            Ok(if reports.iter().all(|r| r.passed) {
                0
            } else {
                1
            })
        }
        Command::Map { map, paths } => {
            let lines = apply_map(*map, paths, stdin)?;
            write_out(
                out,
                &lines.iter().map(|l| format!("{l}\n")).collect::<String>(),
            )?;
            Ok(0)
        }
        Command::Enumerate {
            family,
            params,
            count,
        } => {
            enumerate(pool, *family, params, *count, cli.format, out)?;
            Ok(0)
        }
        Command::Render {
            path,
            out: file,
            markers,
            unit,
        } => {
            let parsed = LatticePath::<MotzkinStep>::parse(path)?;
            let svg = render_svg(
                &parsed,
                &RenderOptions {
                    unit: *unit,
                    markers: *markers,
                },
            )?;
            match file {
                Some(file) => std::fs::write(file, svg)
                    .map_err(|e| Error::Io(format!("cannot write {}: {e}", file.display())))?,
                None => write_out(out, &svg)?,
            }
            Ok(0)
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Io(format!("cannot write output: {e}")))
}

/// Text or canonical JSON. `all` always produces a JSON array.
pub fn format_reports(reports: &[VerificationReport], format: Format, as_list: bool) -> String {
    match format {
        Format::Tsv => reports.iter().map(|r| r.to_text()).collect(),
        Format::Json => {
            let json = if as_list || reports.len() != 1 {
                serde_json::to_string_pretty(reports)
            } else {
                serde_json::to_string_pretty(&reports[0])
            };
            json.expect("reports serialize") + "\n"
        }
    }
}

fn one_input(map: MapKind, paths: &[String]) -> Result<&str> {
    match paths {
        [single] => Ok(single),
        _ => Err(Error::Parameter(format!(
            "map {map:?} takes exactly one path, got {}",
            paths.len()
        ))),
    }
}

/// Applies `map` and returns the output lines. `pair` prints the two
/// components on two lines; the height-one path prints both of its pairs.
pub fn apply_map(map: MapKind, paths: &[String], stdin: &mut dyn BufRead) -> Result<Vec<String>> {
    let dyck = |s: &str| DyckPath::parse(s);
    Ok(match map {
        MapKind::M2d => {
            vec![motzkin_to_dyck(&TwoMotzkinPath::parse(one_input(map, paths)?)?)?.render()]
        }
        MapKind::D2m => vec![dyck_to_motzkin(&dyck(one_input(map, paths)?)?)?.render()],
        MapKind::F => vec![shrink_no_return(&dyck(one_input(map, paths)?)?)?.render()],
        MapKind::FInv => vec![expand_no_return(&dyck(one_input(map, paths)?)?)?.render()],
        MapKind::G => vec![shrink_return(&dyck(one_input(map, paths)?)?)?.render()],
        MapKind::GInv => vec![expand_return(&dyck(one_input(map, paths)?)?)?.render()],
        MapKind::Reverse => vec![reverse(&TwoMotzkinPath::parse(one_input(map, paths)?)?).render()],
        MapKind::Pair => split_balanced(&dyck(one_input(map, paths)?)?)?
            .pairs()
            .into_iter()
            .flat_map(|p| [p.first.render(), p.second.render()])
            .collect(),
        MapKind::Unpair => {
            let inputs: Vec<String> = if paths.is_empty() {
                let mut lines = Vec::new();
                for line in stdin.lines().take(2) {
                    let line = line.map_err(|e| Error::Io(format!("cannot read stdin: {e}")))?;
                    lines.push(line.trim().to_string());
                }
                lines
            } else {
                paths.to_vec()
            };
            if inputs.len() != 2 {
                return Err(Error::Parameter(format!(
                    "unpair takes two paths, got {}",
                    inputs.len()
                )));
            }
            let pair = DyckPair::new(dyck(&inputs[0])?, dyck(&inputs[1])?);
            vec![join_balanced(&pair)?.render()]
        }
    })
}

fn enumerate(
    pool: &rayon::ThreadPool,
    family: FamilyKind,
    params: &[usize],
    count_only: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<()> {
    let want = if matches!(family, FamilyKind::Ballot) {
        2
    } else {
        1
    };
    if params.len() != want {
        return Err(Error::Parameter(format!(
            "{family:?} takes {want} parameter(s), got {}",
            params.len()
        )));
    }
    if count_only {
        let count = pool.install(|| -> Result<u64> {
            Ok(match family {
                FamilyKind::Dyck => PathFamily::Dyck(params[0]).count()?,
                FamilyKind::Motzkin => PathFamily::Motzkin2(params[0]).count()?,
                FamilyKind::Ballot => PathFamily::Ballot(params[0], params[1]).count()?,
                FamilyKind::BallotEven => PathFamily::BallotEven(params[0]).count()?,
                FamilyKind::Pairs => enum_pairs_total(params[0]).count() as u64,
            })
        })?;
        let text = match format {
            Format::Tsv => format!("{count}\n"),
            Format::Json => format!("{{\"count\":\"{count}\"}}\n"),
        };
        return write_out(out, &text);
    }
    let rows: Box<dyn Iterator<Item = Vec<String>>> = match family {
        FamilyKind::Dyck => Box::new(enum_dyck(params[0]).map(|p| vec![p.render()])),
        FamilyKind::Motzkin => Box::new(enum_motzkin2(params[0]).map(|p| vec![p.render()])),
        FamilyKind::Ballot => {
            Box::new(enum_ballot(params[0], params[1])?.map(|p| vec![p.render()]))
        }
        FamilyKind::BallotEven => Box::new(enum_ballot_even(params[0]).map(|p| vec![p.render()])),
        FamilyKind::Pairs => {
            Box::new(enum_pairs_total(params[0]).map(|(a, b)| vec![a.render(), b.render()]))
        }
    };
    match format {
        Format::Tsv => {
            for row in rows {
                write_out(out, &(row.join("\t") + "\n"))?;
            }
        }
        Format::Json => {
            let values: Vec<serde_json::Value> = rows
                .map(|row| match row.as_slice() {
                    [single] => serde_json::Value::from(single.clone()),
                    _ => serde_json::Value::from(row),
                })
                .collect();
            write_out(
                out,
                &(serde_json::to_string(&values).expect("strings serialize") + "\n"),
            )?;
        }
    }
    Ok(())
}
