//! `liemeta`: classify, brute-force and audit Lie metabelian symmetric
//! elements of integral group rings.
//!
//! Exit codes: 0 success, 1 disagreement or failed audit, 2 bad input,
//! 3 brute-force budget exceeded.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lie_metabelian::audit::AuditConfig;
use lie_metabelian::catalog;
use lie_metabelian::groupfile;
use lie_metabelian::lie::{LieError, DEFAULT_BUDGET};
use lie_metabelian::report::{self, IdentitySelection, RunReport};
use lie_metabelian::Group;

#[derive(Parser)]
#[command(
    name = "liemeta",
    version,
    about = "Lie metabelian symmetric elements of ZG"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural verdicts only.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Structural and brute-force verdicts.
    Brute {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cross-check both routes on every catalog group up to an order.
    Validate {
        #[arg(long, default_value_t = 32)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Also run audits on every group.
        #[arg(long, value_enum)]
        identity: Option<Identity>,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Replay ring identities on one group.
    Audit {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "all")]
        identity: Identity,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Inspect or export the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long, default_value_t = usize::MAX)]
        max_order: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Write every group as a table-form group file.
    Export {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, default_value_t = usize::MAX)]
        max_order: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Catalog name, e.g. Q8 or D8xC2.
    #[arg(long)]
    name: Option<String>,
    /// Group file (JSON, table or permutations).
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct Sampling {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Tuples sampled per audit when exhaustive checking is too large.
    #[arg(long, default_value_t = 1000)]
    sample_budget: usize,
}

impl Sampling {
    fn config(&self, budget: usize) -> AuditConfig {
        AuditConfig {
            sample_budget: self.sample_budget,
            seed: self.seed,
            brute_budget: budget,
            ..AuditConfig::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Identity {
    Eq1,
    Eq2,
    Eq3,
    Expansions,
    Cond3,
    Lemmas,
    All,
}

impl From<Identity> for IdentitySelection {
    fn from(i: Identity) -> Self {
        match i {
            Identity::Eq1 => Self::Eq1,
            Identity::Eq2 => Self::Eq2,
            Identity::Eq3 => Self::Eq3,
            Identity::Expansions => Self::Expansions,
            Identity::Cond3 => Self::Cond3,
            Identity::Lemmas => Self::Lemmas,
            Identity::All => Self::All,
        }
    }
}

enum Failure {
    Input(String),
    Budget(LieError),
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        Failure::Budget(e)
    }
}

fn resolve(input: &Input) -> Result<(String, Group), Failure> {
    if let Some(name) = &input.name {
        let entry = catalog::by_name(name).ok_or_else(|| {
            Failure::Input(format!(
                "unknown group `{name}`; known: {}",
                catalog::names().join(", ")
            ))
        })?;
        return Ok((entry.name, entry.group));
    }
    let path = input.file.as_ref().expect("clap enforces one input");
    groupfile::load_group(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce(&T) -> String) {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
            s.push('\n');
            s
        }
        Format::Table => table(value),
    };
    let mut out = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Classify { input, format } => {
            let (name, group) = resolve(&input)?;
            emit(
                format,
                &RunReport::classify(&name, &group),
                report::render_run,
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Brute {
            input,
            budget,
            format,
        } => {
            let (name, group) = resolve(&input)?;
            let r = RunReport::classify(&name, &group).with_brute(&group, budget)?;
            emit(format, &r, report::render_run);
            Ok(if r.agrees() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Validate {
            max_order,
            budget,
            identity,
            sampling,
            format,
        } => {
            let config = sampling.config(budget);
            let r = report::validate(max_order, budget, identity.map(Into::into), &config)?;
            emit(format, &r, report::render_validation);
            Ok(if r.all_agree && r.audits_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Audit {
            input,
            identity,
            budget,
            sampling,
            format,
        } => {
            let (name, group) = resolve(&input)?;
            let config = sampling.config(budget);
            let r =
                RunReport::classify(&name, &group).with_audits(&group, identity.into(), &config)?;
            emit(format, &r, report::render_run);
            Ok(if r.audits_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Catalog {
            action: CatalogAction::List { max_order, format },
        } => {
            #[derive(Serialize)]
            struct Row {
                name: String,
                order: usize,
                construction: String,
            }
            let rows: Vec<Row> = catalog::catalog(max_order)
                .into_iter()
                .map(|e| Row {
                    name: e.name,
                    order: e.group.order(),
                    construction: e.construction,
                })
                .collect();
            emit(format, &rows, |rows| {
                rows.iter()
                    .map(|r| format!("{:<10} {:>4}  {}\n", r.name, r.order, r.construction))
                    .collect()
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog {
            action: CatalogAction::Export { dir, max_order },
        } => {
            let paths = groupfile::export_catalog(&catalog::catalog(max_order), &dir)
                .map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
            for p in paths {
                println!("{}", p.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
