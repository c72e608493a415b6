use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use trilie::corpus;
use trilie::{parse_assignment, run, Error, ProblemFile, ReportFormat, RunConfig, Task};

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

/// Verify 3-Lie algebras, their extensions and Maurer-Cartan data described in a `tlx 1` problem file.
#[derive(Parser)]
#[command(name = "tlx", version)]
struct Cli {
    /// Problem file; `corpus:NAME` selects a bundled file (see --list-corpus).
    #[arg(required_unless_present = "list_corpus")]
    file: Option<String>,
    /// Fix parameters, e.g. `r1=1,r2=-1/2`; unfixed parameters are sampled.
    #[arg(long, default_value = "")]
    param: String,
    /// Number of parameter samples for families.
    #[arg(long, default_value_t = trilie::run::DEFAULT_SAMPLES)]
    samples: usize,
    /// Seed for sampling and randomized sub-checks (decimal or 0x-hex).
    #[arg(long, default_value = "0x3117", value_parser = parse_seed)]
    seed: u64,
    /// Comma-separated tasks, overriding the file's task list.
    #[arg(long)]
    task: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    report: Format,
    /// List the bundled problem files and exit.
    #[arg(long)]
    list_corpus: bool,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    }
    .map_err(|e| e.to_string())
}

fn execute(cli: &Cli, file: &str) -> Result<trilie::Report, Error> {
    let text = match file.strip_prefix("corpus:") {
        Some(name) => corpus::source(name)?.to_string(),
        None => std::fs::read_to_string(PathBuf::from(file)).map_err(|e| Error::Io(format!("{file}: {e}")))?,
    };
    let problem = ProblemFile::parse(&text)?;
    let cfg = RunConfig {
        seed: cli.seed,
        samples: cli.samples,
        fixed: parse_assignment(&cli.param)?,
        tasks: cli.task.as_deref().map(Task::parse_list).transpose()?,
    };
    run(&problem, file, &cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.list_corpus {
        for (name, _) in corpus::CORPUS {
            println!("{name}");
        }
        return ExitCode::SUCCESS;
    }
    let file = cli.file.clone().expect("required by clap");
    match execute(&cli, &file) {
        Ok(report) => {
            let format = match cli.report {
                Format::Text => ReportFormat::Text,
                Format::Machine => ReportFormat::Machine,
            };
            print!("{}", report.render(format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("tlx: {e}");
            ExitCode::from(2)
        }
    }
}
