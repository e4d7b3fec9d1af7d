use std::path::PathBuf;
use std::process::ExitCode;

use autoseq_cli::commands::execute;
use autoseq_cli::config::{CommandKind, RunConfig};
use clap::{Args, Parser, Subcommand};

/// Automatic sequences and their pseudorandomness measures.
#[derive(Parser)]
#[command(name = "autoseq", version)]
struct Cli {
    /// key=value file; flags given on the command line take precedence
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// worker threads (default: RAYON_NUM_THREADS or all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SeqArgs {
    /// catalog name, e.g. thue-morse or pattern:k=2,p=111
    sequence: Option<String>,
    /// prefix length
    #[arg(long)]
    count: Option<usize>,
    /// poly:a0,a1,..., primes, floor:c or geom:g; repeatable, applied in order
    #[arg(long)]
    transform: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print a prefix of a sequence
    Gen(SeqArgs),
    /// CSV profile of a measure
    Profile {
        #[command(flatten)]
        seq: SeqArgs,
        /// linear, maxorder, welldist, correlation, expansion or subword
        #[arg(long)]
        measure: Option<String>,
        /// correlation order k, or factor length for subword
        #[arg(long)]
        order: Option<usize>,
        /// p (prime field) for linear and expansion
        #[arg(long)]
        field: Option<String>,
        /// sample every stride-th N
        #[arg(long)]
        stride: Option<usize>,
    },
    /// Plain-text P1 bitmap of a prefix
    Figure {
        #[command(flatten)]
        seq: SeqArgs,
        /// COLSxROWS
        #[arg(long)]
        grid: Option<String>,
    },
    /// Run acceptance suites
    Verify {
        /// identities, profiles, bounds, oracles, ff, statistical or all
        suite: Option<String>,
    },
    /// Histogram of T or R along a polynomial over F_{p^r}
    Ff {
        /// p^r
        #[arg(long)]
        field: Option<String>,
        /// T or R
        #[arg(long)]
        kind: Option<String>,
        /// coefficient indices c0,c1,... or `irreducible`
        #[arg(long)]
        poly: Option<String>,
        /// largest field size to enumerate
        #[arg(long)]
        cap: Option<u128>,
    },
}

type Setter<'a> = dyn FnMut(&str, Option<String>) -> Result<(), String> + 'a;

fn build(cli: Cli) -> Result<RunConfig, String> {
    let kind = match &cli.command {
        Command::Gen(_) => CommandKind::Gen,
        Command::Profile { .. } => CommandKind::Profile,
        Command::Figure { .. } => CommandKind::Figure,
        Command::Verify { .. } => CommandKind::Verify,
        Command::Ff { .. } => CommandKind::Ff,
    };
    let mut cfg = match &cli.config {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let cfg = RunConfig::parse(&text)?;
            if cfg.command != kind {
                return Err(format!(
                    "config file is for '{}', not '{}'",
                    cfg.command.name(),
                    kind.name()
                ));
            }
            cfg
        }
        None => RunConfig::new(kind),
    };
    let mut set = |k: &str, v: Option<String>| match v {
        Some(v) => cfg.set(k, &v),
        None => Ok(()),
    };
    set("threads", cli.threads.map(|t| t.to_string()))?;
    set("out", cli.out.map(|o| o.display().to_string()))?;
    let seq_args = |set: &mut Setter, a: SeqArgs| -> Result<(), String> {
        set("sequence", a.sequence)?;
        set("count", a.count.map(|c| c.to_string()))?;
        for t in a.transform {
            set("transform", Some(t))?;
        }
        Ok(())
    };
    match cli.command {
        Command::Gen(a) => seq_args(&mut set, a)?,
        Command::Profile {
            seq,
            measure,
            order,
            field,
            stride,
        } => {
            seq_args(&mut set, seq)?;
            set("measure", measure)?;
            set("order", order.map(|o| o.to_string()))?;
            set("field", field)?;
            set("stride", stride.map(|s| s.to_string()))?;
        }
        Command::Figure { seq, grid } => {
            seq_args(&mut set, seq)?;
            set("grid", grid)?;
        }
        Command::Verify { suite } => set("suite", suite)?,
        Command::Ff {
            field,
            kind,
            poly,
            cap,
        } => {
            set("field", field)?;
            set("kind", kind)?;
            set("poly", poly)?;
            set("cap", cap.map(|c| c.to_string()))?;
        }
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let cfg = match build(cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("autoseq: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(n) = cfg.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("autoseq: {e}");
            return ExitCode::from(2);
        }
    }
    let out = match execute(&cfg) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("autoseq: {e}");
            return ExitCode::from(2);
        }
    };
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &out.text) {
                eprintln!("autoseq: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", out.text),
    }
    ExitCode::from(out.status as u8)
}
