mod commands;
mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand};
use greenfn::ggg::LinearKind;
use greenfn::lusztig::factorize;
use greenfn::oracle::{FiniteMatrixGroup, OracleCache, CACHE_ENV};

use commands::{cmd_block, cmd_restrict, resolve_block, BlockSource, RestrictOptions};
use report::Format;
use suites::{cmd_verify, Suite};

/// Environment variable overriding the data directory.
const DATA_ENV: &str = "GREENFN_DATA_DIR";

#[derive(Parser)]
#[command(
    name = "greenfn",
    version,
    about = "Generalized Green functions of GL_n and SL_n blocks"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factorize a block and print Ω, Ξ, P̃, Λ̃ and Q̃.
    #[command(group(ArgGroup::new("source").required(true).args(["gl", "sl", "load"])))]
    Block {
        #[arg(long, value_name = "N")]
        gl: Option<usize>,
        #[arg(long, value_name = "N", requires = "d")]
        sl: Option<usize>,
        /// Divisor of N selecting the SL_N block.
        #[arg(long, requires = "sl")]
        d: Option<usize>,
        /// Which primitive d-th root of unity labels the block (prime to d).
        #[arg(long, default_value_t = 1, requires = "sl")]
        j: usize,
        /// Block descriptor file (JSON).
        #[arg(long, value_name = "FILE")]
        load: Option<PathBuf>,
    },
    /// Restrict from GL_N to a standard Levi subgroup.
    Restrict {
        #[arg(long, value_name = "N")]
        gl: usize,
        /// Levi composition, e.g. 3,2.
        #[arg(long, value_delimiter = ',', required = true)]
        levi: Vec<usize>,
        /// Also restrict the Gelfand-Graev character of this pair.
        #[arg(long, value_name = "PAIR")]
        ggg: Option<String>,
        /// Compare the subregular closed form with the general pipeline.
        #[arg(long)]
        subregular: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest rank checked (suite-dependent default).
        #[arg(long)]
        n: Option<usize>,
        /// Prime field size for the oracle suite.
        #[arg(long, default_value_t = 3)]
        q: u32,
        /// Recompute oracle results instead of reading the cache.
        #[arg(long)]
        no_cache: bool,
    },
}

fn data_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(DATA_ENV) {
        return Some(d.into());
    }
    std::env::current_exe()
        .ok()?
        .parent()
        .map(|p| p.join("data"))
}

fn oracle_cache(no_cache: bool) -> OracleCache {
    if no_cache {
        OracleCache::disabled()
    } else if std::env::var_os(CACHE_ENV).is_some() {
        OracleCache::from_env()
    } else {
        data_dir().map_or_else(OracleCache::disabled, |d| OracleCache::new(d.join("cache")))
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("Run `greenfn --help` for usage.");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (report, ok) = match &cli.command {
        Command::Block { gl, sl, d, j, load } => {
            let src = match (gl, sl, d, load) {
                (Some(n), _, _, _) => BlockSource::Gl(*n),
                (_, Some(n), Some(d), _) => BlockSource::Sl {
                    n: *n,
                    d: *d,
                    j: *j,
                },
                (_, _, _, Some(p)) => BlockSource::Load(p),
                _ => return usage_error("no block source"),
            };
            let table = match resolve_block(&src).and_then(|b| Ok(factorize(&b)?)) {
                Ok(t) => t,
                Err(e) => return usage_error(e),
            };
            (cmd_block(&table), true)
        }
        Command::Restrict {
            gl,
            levi,
            ggg,
            subregular,
        } => {
            let o = RestrictOptions {
                n: *gl,
                levi,
                ggg: ggg.as_deref(),
                subregular: *subregular,
            };
            match cmd_restrict(&o) {
                Ok(r) => (r, true),
                Err(e) => return usage_error(e),
            }
        }
        Command::Verify {
            suite,
            n,
            q,
            no_cache,
        } => {
            if *suite == Suite::Oracle {
                if let Err(e) = FiniteMatrixGroup::new(LinearKind::Gl, 1, *q) {
                    return usage_error(e);
                }
            }
            cmd_verify(*suite, *n, *q, &oracle_cache(*no_cache))
        }
    };
    print!("{}", report.render(cli.format));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
