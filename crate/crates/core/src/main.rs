use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ncforge::field::FieldSpec;
use ncforge::gbasis::{complete, DEFAULT_DEGREE_BOUND, DEFAULT_MAX_RULES};
use ncforge::verify::{
    find_check, parse_grid, parse_presentation, run_all, run_check, scan, CheckConfig, Report, ReportSet, Status,
    CHECKS, DEFAULT_SEED, DEFAULT_TRIALS,
};
use ncforge::Result;

#[derive(Parser)]
#[command(name = "ncforge", version, about = "Groebner bases and structure checks for small noncommutative algebras")]
struct Cli {
    /// Coefficient field: `fp:P` for a prime P, or `qq`.
    #[arg(long, global = true, default_value = "fp:10009")]
    field: FieldSpec,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Degree bound for completion.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_BOUND)]
    bound: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_RULES)]
    max_rules: usize,
    /// Trials for randomized identity tests.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Write the JSON report to this path (`-` for stdout).
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one check.
    Check { id: String },
    /// Run a check at every point of a parameter grid.
    Scan {
        id: String,
        /// `default`, `random:N`, `box:LO..HI`, or tuples like `1,3;1,-1;2,5,7`.
        #[arg(long, default_value = "default")]
        grid: String,
    },
    /// Run every check.
    All,
    /// List the available checks.
    List,
    /// Complete a presentation file and print its rules and normal words.
    Basis { file: PathBuf },
}

fn config(cli: &Cli) -> CheckConfig {
    CheckConfig {
        degree_bound: cli.bound,
        max_rules: cli.max_rules,
        trials: cli.trials,
        ..CheckConfig::new(cli.field, cli.seed)
    }
}

fn emit(cli: &Cli, json: Result<String>, summary: &[String]) -> Result<()> {
    match cli.json.as_deref() {
        Some(p) if p.as_os_str() == "-" => out(&json?),
        Some(p) => {
            std::fs::write(p, json? + "\n")?;
            summary.iter().for_each(|s| out(s));
        }
        None => summary.iter().for_each(|s| out(s)),
    }
    Ok(())
}

fn out(line: &str) {
    let _ = writeln!(std::io::stdout(), "{line}");
}

fn exit_status(status: Status) -> u8 {
    match status {
        Status::Pass | Status::Skipped => 0,
        Status::Fail => 1,
        Status::Error => 2,
    }
}

fn exit_code(status: Status) -> ExitCode {
    ExitCode::from(exit_status(status))
}

fn single(cli: &Cli, report: Report) -> Result<ExitCode> {
    emit(cli, report.to_json(), &[report.summary()])?;
    Ok(exit_code(report.status))
}

fn basis(cli: &Cli, file: &PathBuf) -> Result<ExitCode> {
    let text = std::fs::read_to_string(file)?;
    let p = parse_presentation(&text, cli.field)?;
    let rs = complete(&p, cli.bound, cli.max_rules)?;
    let words = match rs.is_finite_dimensional()? {
        true => Some(rs.normal_words(None)?),
        false => None,
    };
    let labels: Option<Vec<String>> =
        words.as_ref().map(|ws| ws.iter().map(|w| rs.alphabet().format_word(w)).collect());
    let json = serde_json::to_string_pretty(&serde_json::json!({
        "field": cli.field.to_string(),
        "rules": rs.display_rules(),
        "finite_dimensional": words.is_some(),
        "dimension": words.as_ref().map(Vec::len),
        "normal_words": labels,
    }))
    .map_err(Into::into);
    let mut lines: Vec<String> = rs.display_rules();
    match &labels {
        Some(ws) => {
            lines.push(format!("dimension {}", ws.len()));
            lines.push(ws.join(" "));
        }
        None => lines.push("infinite-dimensional".into()),
    }
    emit(cli, json, &lines)?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let cfg = config(cli);
    match &cli.command {
        Command::List => {
            for c in CHECKS {
                let mode = if c.is_scannable() { "scan" } else { "once" };
                out(&format!("{:<18} {:<5} {}", c.id, mode, c.summary));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { id } => single(cli, run_check(id, &cfg)?),
        Command::Scan { id, grid } => {
            find_check(id)?;
            let cfg = CheckConfig {
                grid: parse_grid(grid, cli.field, cli.seed)?,
                ..cfg
            };
            single(cli, scan(id, &cfg)?)
        }
        Command::All => {
            let set = ReportSet::new(run_all(&cfg)?);
            let lines: Vec<String> = set.reports.iter().map(Report::summary).collect();
            emit(cli, set.to_json(), &lines)?;
            Ok(exit_code(set.status))
        }
        Command::Basis { file } => basis(cli, file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses_map_to_exit_codes() {
        let codes: Vec<u8> = [Status::Pass, Status::Skipped, Status::Fail, Status::Error]
            .into_iter()
            .map(exit_status)
            .collect();
        assert_eq!(codes, [0, 0, 1, 2]);
        assert_eq!(exit_status(Status::combine([Status::Pass, Status::Fail, Status::Skipped])), 1);
    }
}
