use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lozenge_cli::{
    cmd_count, cmd_macmahon, cmd_render, cmd_sweep, cmd_verify, CliError, Method, Outcome, RegionSpecFile,
    SweepClass, SweepConfig, EXIT_INVALID,
};
use lozenge_core::par::Exec;
use lozenge_core::theorem::{Route, Routes};

#[derive(Parser)]
#[command(name = "lozenge", version, about = "Exact lozenge tiling counts and the snowflake flip ratio")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Enum,
    Det,
    Decomp,
    All,
}

impl RouteArg {
    fn routes(self, symmetric: bool) -> Routes {
        let counts = match self {
            RouteArg::Enum => vec![Route::Enumeration],
            RouteArg::Det => vec![Route::Determinant],
            RouteArg::Decomp => vec![Route::Decomposition],
            RouteArg::All => vec![Route::Determinant, Route::Enumeration, Route::Decomposition],
        };
        Routes { counts, symmetric }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count the tilings of the region in a spec file.
    Count {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
    },
    /// Check the flip ratio (and symmetric ratios) for an H or snowflake spec.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "det")]
        method: RouteArg,
        /// Skip the symmetric-count checks.
        #[arg(long)]
        no_symmetric: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Verify many random specs drawn from a seed.
    Sweep {
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        #[arg(long, default_value_t = 2)]
        x_max: u32,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value = "plain")]
        class: SweepClass,
        #[arg(long, value_enum, default_value = "det")]
        method: RouteArg,
        /// Evaluate candidates on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
    /// Draw the region, optionally with one of its tilings, as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Index of the tiling to draw, in enumeration order.
        #[arg(long)]
        tiling: Option<usize>,
        /// Draw the diagonals and hole-position labels.
        #[arg(long)]
        overlay: bool,
    },
    /// Evaluate the box formula for plane partitions in an a x b x c box.
    Macmahon { a: u32, b: u32, c: u32 },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Count { file, method } => cmd_count(&RegionSpecFile::load(&file)?, method),
        Command::Verify { file, method, no_symmetric, json, timing } => {
            cmd_verify(&RegionSpecFile::load(&file)?, &method.routes(!no_symmetric), json, timing)
        }
        Command::Sweep { n_max, x_max, trials, seed, class, method, sequential } => {
            let cfg = SweepConfig { n_max, x_max, trials, seed, class };
            let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
            Ok(cmd_sweep(&cfg, &method.routes(class != SweepClass::Plain), exec))
        }
        Command::Render { file, out, tiling, overlay } => cmd_render(&RegionSpecFile::load(&file)?, &out, tiling, overlay),
        Command::Macmahon { a, b, c } => Ok(cmd_macmahon(a, b, c)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(o) => {
            let _ = std::io::stdout().write_all(o.stdout.as_bytes());
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}
