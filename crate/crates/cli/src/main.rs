mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use mcgverify_core::coset_enum::{todd_coxeter, CosetError, DEFAULT_MAX_COSETS};
use mcgverify_core::mod2::{mod2_action, MappingClassWord};
use mcgverify_core::subgroup_pres::abelianization;
use mcgverify_core::verifier::{run_all, run_check, VerifyConfig, CHECK_IDS};
use mcgverify_core::words::parse_presentation_file;

use report::{Report, ReportConfig};

#[derive(Parser)]
#[command(name = "mcgverify", version, about = "Checks generating sets and homology of level 2 twist subgroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Run theorem-level checks and emit a report.
    Verify {
        #[arg(long, conflicts_with = "check", required_unless_present = "check")]
        all: bool,
        #[arg(long)]
        check: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_genus: usize,
        #[arg(long, env = "MCGVERIFY_MAX_COSETS", default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Drop the timestamp and per-check timings so reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Enumerate cosets of the subgroup listed on `sub:` lines.
    CosetEnum {
        file: PathBuf,
        #[arg(long, env = "MCGVERIFY_MAX_COSETS", default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        #[arg(long)]
        dump_table: bool,
    },
    /// Print the abelianization of a presented group.
    Abelianize { file: PathBuf },
    /// Print the mod-2 homology action of a mapping class word.
    Action {
        #[arg(long)]
        genus: usize,
        word: String,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    all: bool,
    check: Option<String>,
    max_genus: usize,
    max_cosets: usize,
    format: Format,
    out: Option<PathBuf>,
    no_timing: bool,
) -> Result<bool, CliError> {
    let config = VerifyConfig { max_genus, max_cosets, ..VerifyConfig::default() };
    let (checks, results) = if all {
        (CHECK_IDS.iter().map(|s| s.to_string()).collect(), run_all(&config))
    } else {
        let id = check.expect("clap requires --all or --check");
        if !CHECK_IDS.contains(&id.as_str()) {
            return Err(CliError::Usage(format!("unknown check {id:?}; valid ids: {}", CHECK_IDS.join(", "))));
        }
        (vec![id.clone()], run_check(&id, &config))
    };
    let results = results.map_err(|e| CliError::Usage(e.to_string()))?;
    let report = Report::new(ReportConfig { checks, verify: config }, results, !no_timing);
    let text = match format {
        Format::Json => report.to_json(),
        Format::Md => report.to_markdown(),
    };
    emit(&text, out.as_ref())?;
    let s = report.summary;
    if out.is_some() {
        eprintln!("pass: {}, fail: {}, discrepancy: {}", s.pass, s.fail, s.discrepancy);
    }
    Ok(s.fail == 0)
}

fn cmd_coset_enum(file: &PathBuf, max_cosets: usize, dump_table: bool) -> Result<(), CliError> {
    let parsed = parse_presentation_file(&read(file)?).map_err(|e| CliError::Usage(e.to_string()))?;
    let table = todd_coxeter(&parsed.presentation, &parsed.subgroup, max_cosets).map_err(|e| match e {
        CosetError::Overflow { live, cap } => {
            CliError::Failed(format!("coset enumeration overflow: {live} live cosets (cap {cap})"))
        }
        other => CliError::Failed(other.to_string()),
    })?;
    table.audit().map_err(|e| CliError::Failed(e.to_string()))?;
    println!("index: {}", table.n_cosets());
    if dump_table {
        print!("{}", table.to_tsv());
    }
    Ok(())
}

fn cmd_abelianize(file: &PathBuf) -> Result<(), CliError> {
    let parsed = parse_presentation_file(&read(file)?).map_err(|e| CliError::Usage(e.to_string()))?;
    let h = abelianization(&parsed.presentation);
    println!("{h}");
    println!("{}", serde_json::to_string(&h).expect("group serializes"));
    Ok(())
}

fn cmd_action(genus: usize, word: &str) -> Result<(), CliError> {
    let w: MappingClassWord = word.parse().map_err(|e: mcgverify_core::mod2::HomologyError| CliError::Usage(e.to_string()))?;
    let m = mod2_action(&w, genus).map_err(|e| CliError::Usage(e.to_string()))?;
    for row in m.to_row_strings() {
        println!("{row}");
    }
    println!("identity: {}", m.is_identity());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify { all, check, max_genus, max_cosets, format, out, no_timing } => {
            cmd_verify(all, check, max_genus, max_cosets, format, out, no_timing)
        }
        Command::CosetEnum { file, max_cosets, dump_table } => cmd_coset_enum(&file, max_cosets, dump_table).map(|_| true),
        Command::Abelianize { file } => cmd_abelianize(&file).map(|_| true),
        Command::Action { genus, word } => cmd_action(genus, &word).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
