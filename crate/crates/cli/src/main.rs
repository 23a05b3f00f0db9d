use std::path::PathBuf;

use clap::{Parser, Subcommand};

use vcpath_bijection::Offset;
use vcpath_cli::{
    cmd_count, cmd_enumerate, cmd_gf, cmd_map, cmd_oeis, cmd_tables, run_suite, CliError,
    CountOpts, Direction, EnumerateFormat, EnumerateOpts, GfFormat, GfOpts, MapOpts, OeisOpts,
    TableFormat, TablesOpts, VerifyOptions,
};

#[derive(Parser)]
#[command(
    name = "vcpath",
    version,
    about = "Lattice paths with vertical steps: tables, bijections, series"
)]
struct Cli {
    /// Never touch the network; use bundled or cached sequence data only.
    #[arg(long, global = true)]
    offline: bool,
    /// Raise the enumeration safety limit on the horizontal length.
    #[arg(long, global = true)]
    limit: Option<i64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count paths of a class: the full table, or one height.
    Count {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// List paths as step words, lexicographically.
    Enumerate {
        /// A class id, or a plain family (motzkin, grandmotzkin, schroder,
        /// delannoy).
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        end_height: Option<i64>,
        /// Source-set filter for plain families.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value = "lines")]
        format: String,
    },
    /// Apply a substitution map to one path.
    Map {
        #[arg(long)]
        direction: String,
        #[arg(long)]
        offset: String,
        #[arg(long)]
        input: String,
    },
    /// Expand a named generating function.
    Gf {
        #[arg(long)]
        name: String,
        #[arg(long)]
        order: i64,
        #[arg(long, default_value = "plain")]
        format: String,
    },
    /// Render a counting table in the reference layout.
    Tables {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Run a verification suite; prints one PASS/FAIL line per check.
    Verify {
        /// dp, bijection, gf, kernel, oeis, golden, or all.
        #[arg(long)]
        suite: String,
        /// X-order for series checks.
        #[arg(long)]
        order: Option<i64>,
        /// Largest width cross-checked against enumeration.
        #[arg(long)]
        oracle_n: Option<i64>,
        /// Directory holding table snapshots (golden suite).
        #[arg(long)]
        golden_dir: Option<PathBuf>,
    },
    /// Compare a class ground sequence against an archived sequence.
    Oeis {
        /// A-number to compare against, e.g. A001006.
        #[arg(long)]
        check: String,
        #[arg(long)]
        class: String,
        /// identity, bisect-even, bisect-odd, or row-bisect; applied to
        /// the archived sequence.
        #[arg(long, default_value = "identity")]
        transform: String,
    },
}

fn parse_table_format(name: &str) -> Result<TableFormat, CliError> {
    TableFormat::from_name(name)
        .ok_or_else(|| CliError::Usage(format!("unknown format {name:?}; expected csv, json, or markdown")))
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Count { class, n, m, format } => {
            let out = cmd_count(&CountOpts {
                class,
                n,
                m,
                format: parse_table_format(&format)?,
            })?;
            print!("{out}");
            Ok(0)
        }
        Command::Tables { class, n, format } => {
            let out = cmd_tables(&TablesOpts {
                class,
                n,
                format: parse_table_format(&format)?,
            })?;
            print!("{out}");
            Ok(0)
        }
        Command::Enumerate {
            class,
            n,
            end_height,
            filter,
            format,
        } => {
            let format = EnumerateFormat::from_name(&format).ok_or_else(|| {
                CliError::Usage(format!("unknown format {format:?}; expected lines or json"))
            })?;
            let out = cmd_enumerate(&EnumerateOpts {
                class,
                n,
                end_height,
                filter,
                format,
                limit: cli.limit,
            })?;
            print!("{out}");
            Ok(0)
        }
        Command::Map {
            direction,
            offset,
            input,
        } => {
            let direction = Direction::from_name(&direction).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown direction {direction:?}; expected phi, psi, gamma, or lambda"
                ))
            })?;
            let offset = match offset.as_str() {
                "first" => Offset::First,
                "second" => Offset::Second,
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown offset {other:?}; expected first or second"
                    )))
                }
            };
            let out = cmd_map(&MapOpts {
                direction,
                offset,
                input,
            })?;
            print!("{out}");
            Ok(0)
        }
        Command::Gf { name, order, format } => {
            let format = GfFormat::from_name(&format).ok_or_else(|| {
                CliError::Usage(format!("unknown format {format:?}; expected plain or json"))
            })?;
            let out = cmd_gf(&GfOpts { name, order, format })?;
            print!("{out}");
            Ok(0)
        }
        Command::Oeis {
            check,
            class,
            transform,
        } => {
            match cmd_oeis(&OeisOpts {
                a_number: check,
                class,
                transform,
                offline: cli.offline,
            }) {
                Ok(out) => {
                    print!("{out}");
                    Ok(0)
                }
                Err(CliError::Check(report)) => {
                    print!("{report}");
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        Command::Verify {
            suite,
            order,
            oracle_n,
            golden_dir,
        } => {
            let defaults = VerifyOptions::default();
            let opts = VerifyOptions {
                order: order.unwrap_or(defaults.order),
                oracle_n: oracle_n.unwrap_or(defaults.oracle_n),
                golden_dir,
                offline: cli.offline,
            };
            let results = run_suite(&suite, &opts)?;
            let mut failed = false;
            for r in &results {
                if r.passed {
                    println!("PASS {}: {}", r.name, r.detail);
                } else {
                    failed = true;
                    println!("FAIL {}: {}", r.name, r.detail);
                }
                eprintln!("{}: {} ms", r.name, r.millis);
            }
            Ok(if failed { 1 } else { 0 })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Check(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    };
    std::process::exit(code);
}
