//! Command-line orchestration: load a mapping, run the pipeline, emit
//! deterministic reports, map failures to exit codes.

use std::path::PathBuf;

use crate::facons::{collect_facons, max_facons_count};
use crate::parser::{parse_mapping, PolynomialMapping};
use crate::report::{render_text, JsonReport};
use crate::strata::{asymptotic_set, AnalysisConfig};
use crate::verify::{catalog_numeric_checks, oracle_cross_check};

pub const EXIT_OK: i32 = 0;
/// Input file missing, unreadable, unparsable, or invalid flags.
pub const EXIT_INPUT_ERROR: i32 = 2;
/// The numeric oracles disagree with the symbolic results.
pub const EXIT_VERIFY_MISMATCH: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Full report: dominance, catalog, strata, filtration, frontier.
    Analyze { input: PathBuf },
    /// Stratification view only.
    Stratify { input: PathBuf },
    /// Evaluate the façon-counting formula for dimension `n`.
    CountFacons { n: u32 },
    /// Run the numeric oracles against the symbolic catalog.
    Verify { input: PathBuf },
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub max_exponent: i64,
    pub degree: u32,
    pub seed: u64,
    pub trials: u32,
    pub samples: usize,
    pub format: OutputFormat,
}

impl RunConfig {
    fn analysis(&self) -> AnalysisConfig {
        AnalysisConfig {
            max_exponent: self.max_exponent,
            degree: self.degree,
            seed: self.seed,
            trials: self.trials,
            samples: self.samples,
        }
    }
}

/// Run one command; prints the report to stdout, diagnostics to stderr, and
/// returns the process exit status.
pub fn run(config: &RunConfig) -> i32 {
    match run_inner(config) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_INPUT_ERROR
        }
    }
}

fn run_inner(config: &RunConfig) -> Result<i32, String> {
    if config.max_exponent < 1 {
        return Err("max exponent must be at least 1".into());
    }
    if config.degree < 1 {
        return Err("equation degree bound must be at least 1".into());
    }
    match &config.command {
        Command::CountFacons { n } => {
            if *n < 1 {
                return Err("dimension must be at least 1".into());
            }
            println!("{}", max_facons_count(*n));
            Ok(EXIT_OK)
        }
        Command::Analyze { input } => {
            let mapping = load(input)?;
            let report = asymptotic_set(&mapping, &config.analysis());
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            match config.format {
                OutputFormat::Json => print!("{}", JsonReport::from_report(&report).to_json_string()),
                OutputFormat::Text => print!("{}", render_text(&report)),
            }
            Ok(EXIT_OK)
        }
        Command::Stratify { input } => {
            let mapping = load(input)?;
            let report = asymptotic_set(&mapping, &config.analysis());
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            let full = JsonReport::from_report(&report);
            match config.format {
                OutputFormat::Json => {
                    let view = serde_json::json!({
                        "strata": serde_json::to_value(&full.strata).expect("serializable"),
                        "filtration": serde_json::to_value(&full.filtration).expect("serializable"),
                        "frontier": full.frontier,
                        "frontier_violations": full.frontier_violations,
                        "scope": serde_json::to_value(&full.scope).expect("serializable"),
                    });
                    println!("{}", serde_json::to_string_pretty(&view).expect("serializable"));
                }
                OutputFormat::Text => {
                    let text = render_text(&report);
                    // Keep the stratification section of the full rendering.
                    for line in text.lines() {
                        if line.starts_with("mapping:")
                            || line.starts_with("strata:")
                            || line.starts_with("  S")
                            || line.starts_with("filtration:")
                            || line.starts_with("frontier")
                            || line.starts_with("top dimension:")
                            || line.starts_with("scope:")
                        {
                            println!("{line}");
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { input } => {
            let mapping = load(input)?;
            // The brute-force oracle is meaningful at desk scale only.
            let bound = config.max_exponent.min(2);
            let (oracle_ok, mismatches) = oracle_cross_check(&mapping, bound, config.seed);
            let catalog = collect_facons(&mapping, bound);
            let checks = catalog_numeric_checks(&mapping, &catalog, config.seed);
            let all_passed = oracle_ok && checks.iter().all(|c| c.report.passed);

            match config.format {
                OutputFormat::Json => {
                    let view = serde_json::json!({
                        "oracle_ok": oracle_ok,
                        "mismatches": mismatches,
                        "checks": checks.iter().map(|c| serde_json::json!({
                            "facon": c.facon,
                            "tuple": c.tuple,
                            "passed": c.report.passed,
                            "schedule": c.report.schedule,
                            "deviations": c.report.deviations,
                            "tolerance": c.report.tolerance,
                            "note": c.report.note,
                        })).collect::<Vec<_>>(),
                        "passed": all_passed,
                        "scope": {"max_exponent": bound, "seed": config.seed},
                    });
                    println!("{}", serde_json::to_string_pretty(&view).expect("serializable"));
                }
                OutputFormat::Text => {
                    println!(
                        "oracle cross-check (E = {bound}): {}",
                        if oracle_ok { "ok" } else { "MISMATCH" }
                    );
                    for m in &mismatches {
                        println!("  {m}");
                    }
                    for c in &checks {
                        let final_dev =
                            c.report.deviations.last().copied().unwrap_or(f64::INFINITY);
                        println!(
                            "class {} {}: {} (final deviation {:.3e}, tol {:.0e})",
                            c.facon,
                            c.tuple,
                            if c.report.passed { "passed" } else { "FAILED" },
                            final_dev,
                            c.report.tolerance,
                        );
                        if let Some(note) = &c.report.note {
                            println!("  note: {note}");
                        }
                    }
                    println!("verify: {}", if all_passed { "all checks passed" } else { "FAILED" });
                }
            }
            Ok(if all_passed { EXIT_OK } else { EXIT_VERIFY_MISMATCH })
        }
    }
}

fn load(path: &PathBuf) -> Result<PolynomialMapping, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {}", path.display(), e))?;
    parse_mapping(&text).map_err(|e| format!("{}:{}", path.display(), e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_facons_runs() {
        let config = RunConfig {
            command: Command::CountFacons { n: 3 },
            max_exponent: 4,
            degree: 4,
            seed: 0,
            trials: 8,
            samples: 200,
            format: OutputFormat::Text,
        };
        assert_eq!(run(&config), EXIT_OK);
    }

    #[test]
    fn missing_input_is_an_input_error() {
        let config = RunConfig {
            command: Command::Analyze { input: PathBuf::from("/no/such/file.map") },
            max_exponent: 2,
            degree: 4,
            seed: 0,
            trials: 8,
            samples: 60,
            format: OutputFormat::Json,
        };
        assert_eq!(run(&config), EXIT_INPUT_ERROR);
    }

    #[test]
    fn invalid_flags_are_input_errors() {
        let config = RunConfig {
            command: Command::CountFacons { n: 3 },
            max_exponent: 0,
            degree: 4,
            seed: 0,
            trials: 8,
            samples: 200,
            format: OutputFormat::Text,
        };
        assert_eq!(run(&config), EXIT_INPUT_ERROR);
    }
}
