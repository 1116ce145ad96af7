mod build;
mod report;
mod tables;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rank3kit::graphs::CONSTRUCTION_CAP;
use rank3kit::iso::{CellRule, SearchOptions, AUT_CAP};
use rank3kit::Error;

/// Exit status for invalid parameters or usage.
pub const EXIT_INVALID: u8 = 2;
/// Exit status when a size cap refuses the request.
pub const EXIT_CAP: u8 = 3;
/// Exit status when a search budget runs out.
pub const EXIT_TIMEOUT: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "rank3kit", version, about = "Affine rank-3 graphs, orbitals and 2-closures")]
struct Cli {
    /// Vertex cap for construction and automorphism search.
    #[arg(long, global = true, env = "RANK3KIT_CAP")]
    cap: Option<usize>,

    /// Acknowledge a cap above the default automorphism-search cap.
    #[arg(long, global = true)]
    allow_large: bool,

    /// Seed for random relabelings used by the checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cell selection rule of the automorphism search.
    #[arg(long, global = true, value_enum, default_value_t = RuleArg::Largest)]
    cell_rule: RuleArg,

    /// Wall-clock budget in seconds for each search.
    #[arg(long, global = true)]
    budget_secs: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RuleArg {
    Smallest,
    Largest,
    First,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graph construction.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Run a named verification and print a JSON report.
    Verify {
        #[arg(value_enum)]
        target: verify::Target,
        /// Grid bounds `Q_MAX,M_MAX` for the intersection search.
        #[arg(long, value_parser = parse_bounds)]
        bounds: Option<(u64, u32)>,
    },
    /// 2-closure of a permutation group given as a JSON list of image lists.
    Closure {
        #[arg(long)]
        generators: PathBuf,
    },
    /// Print one of the reference tables.
    Table {
        #[arg(value_enum)]
        which: tables::Which,
        #[arg(long, value_enum, default_value_t = tables::Format::Text)]
        format: tables::Format,
        /// Grid bounds `Q_MAX,M_MAX` for generated tables.
        #[arg(long, value_parser = parse_bounds)]
        bounds: Option<(u64, u32)>,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    /// Build a family graph and write it with a JSON sidecar.
    Build {
        #[arg(value_enum)]
        family: build::FamilyName,
        /// Family parameters, e.g. `polar - 2 8` takes sign, m and q.
        #[arg(num_args = 0..)]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = build::OutFormat::Graph6)]
        out: build::OutFormat,
        /// Output file; the sidecar is written next to it with `.json` appended.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn parse_bounds(s: &str) -> Result<(u64, u32), String> {
    let (q, m) = s
        .split_once(',')
        .ok_or_else(|| format!("expected Q_MAX,M_MAX, got {s:?}"))?;
    let q = q.trim().parse().map_err(|e| format!("bad Q_MAX: {e}"))?;
    let m = m.trim().parse().map_err(|e| format!("bad M_MAX: {e}"))?;
    Ok((q, m))
}

/// Caps and search settings shared by all commands.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub construction_cap: usize,
    pub search: SearchOptions,
    pub seed: u64,
}

impl Settings {
    fn from_cli(cli: &Cli) -> Result<Self, String> {
        let rule = match cli.cell_rule {
            RuleArg::Smallest => CellRule::Smallest,
            RuleArg::Largest => CellRule::Largest,
            RuleArg::First => CellRule::First,
        };
        let (construction_cap, search_cap) = match cli.cap {
            Some(c) if c > AUT_CAP && !cli.allow_large => {
                return Err(format!(
                    "cap {c} exceeds the default search cap {AUT_CAP}; pass --allow-large to acknowledge"
                ))
            }
            Some(c) => (c, c),
            None => (CONSTRUCTION_CAP, AUT_CAP),
        };
        let mut search = SearchOptions::default().with_cap(search_cap).with_rule(rule);
        if let Some(s) = cli.budget_secs {
            search = search.with_budget(Duration::from_secs(s));
        }
        Ok(Settings {
            construction_cap,
            search,
            seed: cli.seed,
        })
    }
}

/// Prints an error and maps it to an exit status.
pub fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(match err {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Timeout(_) => EXIT_TIMEOUT,
        _ => EXIT_INVALID,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = match Settings::from_cli(&cli) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    match cli.command {
        Command::Graph(GraphCommand::Build {
            family,
            params,
            out,
            output,
        }) => build::run(family, &params, out, output, &settings),
        Command::Verify { target, bounds } => verify::run(target, bounds, &settings),
        Command::Closure { generators } => build::closure(&generators, &settings),
        Command::Table {
            which,
            format,
            bounds,
        } => tables::run(which, format, bounds),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_parsing() {
        assert_eq!(parse_bounds("16,6"), Ok((16, 6)));
        assert_eq!(parse_bounds(" 32 , 8 "), Ok((32, 8)));
        assert!(parse_bounds("16").is_err());
        assert!(parse_bounds("a,b").is_err());
    }

    #[test]
    fn cap_settings() {
        let parse = |args: &[&str]| Cli::try_parse_from(std::iter::once("rank3kit").chain(args.iter().copied())).unwrap();
        let cli = parse(&["table", "classes"]);
        let s = Settings::from_cli(&cli).unwrap();
        assert_eq!((s.construction_cap, s.search.cap), (CONSTRUCTION_CAP, AUT_CAP));
        assert!(Settings::from_cli(&parse(&["--cap", "4096", "table", "classes"])).is_err());
        let s = Settings::from_cli(&parse(&["--cap", "4096", "--allow-large", "table", "classes"])).unwrap();
        assert_eq!(s.search.cap, 4096);
    }
}
