use std::path::PathBuf;
use std::process::ExitCode;

use basictop::cli::{run_text, Command, Config, EXIT_USAGE};
use clap::Parser;

#[derive(Parser)]
#[command(name = "basictop", version, about = "Saturations, reductions and basic topologies on finite carriers")]
struct Args {
    /// Workspace document
    #[arg(long, short, global = true)]
    doc: Option<PathBuf>,
    #[arg(long, env = "BASICTOP_SUBSET_CAP", default_value_t = 4096, global = true)]
    subset_cap: usize,
    #[arg(long, env = "BASICTOP_SAMPLE_COUNT", default_value_t = 200, global = true)]
    sample_count: usize,
    #[arg(long, env = "BASICTOP_SEED", default_value_t = 1, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = Config {
        subset_cap: args.subset_cap,
        sample_count: args.sample_count,
        seed: args.seed,
    };
    let text = match &args.doc {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(t) => Some(t),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE as u8);
            }
        },
        None => None,
    };
    let outcome = run_text(text.as_deref(), &args.command, &config);
    if outcome.code == 0 || outcome.code == 1 {
        print!("{}", outcome.text);
    } else {
        eprint!("{}", outcome.text);
    }
    ExitCode::from(outcome.code as u8)
}
