use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use curvesing::input::parse_input;
use curvesing::pipeline::{degree_cap_from_env, exit, exit_code, run_pipeline, Options, SampleSpec};
use curvesing::poly::ring::parse_rational;
use curvesing::poly::Rational;

#[derive(Parser)]
#[command(name = "curvesing", version, about = "Singularities of rational parametrized curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the singularities of the parametrization in FILE (`-` for stdin).
    Classify {
        file: PathBuf,
        /// Use the space curve reduction even for plane input.
        #[arg(long)]
        space: bool,
        /// Parameter of the Möbius reparametrization, e.g. `2` or `-3/2`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_theta)]
        theta: Option<Rational>,
        /// Check every multiplicity against the implicit equation.
        #[arg(long)]
        verify: bool,
        /// Emit sample points `<a>:<b>:<count>` for plotting.
        #[arg(long, allow_hyphen_values = true, value_name = "A:B:COUNT")]
        sample: Option<SampleSpec>,
        /// Also write the sample CSV to this file.
        #[arg(long, requires = "sample")]
        sample_out: Option<PathBuf>,
        /// Significant digits of the sample output.
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=60))]
        digits: u32,
        /// Write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

fn parse_theta(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational number"))
}

fn read_file(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
}

fn fail(code: i32, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("curvesing: {msg}");
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let Command::Classify {
        file,
        space,
        theta,
        verify,
        sample,
        sample_out,
        digits,
        out,
        format,
    } = Cli::parse().command;

    let degree_cap = match degree_cap_from_env() {
        Ok(c) => c,
        Err(e) => return fail(exit::USAGE, e),
    };
    let text = match read_file(&file) {
        Ok(t) => t,
        Err(e) => return fail(exit::IO, format!("{}: {e}", file.display())),
    };
    let doc = match parse_input(&text) {
        Ok(d) => d,
        Err(e) => return fail(exit::PARSE, format!("{}:{e}", file.display())),
    };
    let opts = Options {
        space,
        theta,
        verify,
        sample,
        digits: digits as usize,
        degree_cap,
    };
    let report = match run_pipeline(&doc, &opts) {
        Ok(r) => r,
        Err(e) => return fail(exit_code(&e), e),
    };

    let rendered = match format {
        Format::Text => report.render_text(),
        Format::Machine => report.to_json(),
    };
    let written = match &out {
        Some(path) => std::fs::write(path, &rendered).map_err(|e| (path.clone(), e)),
        None => {
            print!("{rendered}");
            Ok(())
        }
    };
    if let Err((path, e)) = written {
        return fail(exit::IO, format!("{}: {e}", path.display()));
    }
    if let (Some(path), Some(samples)) = (&sample_out, &report.samples) {
        if let Err(e) = std::fs::write(path, samples.to_csv()) {
            return fail(exit::IO, format!("{}: {e}", path.display()));
        }
    }
    if report.verification.as_ref().is_some_and(|v| !v.all_agree) {
        return fail(exit::VERIFY_MISMATCH, "oracle multiplicities disagree with the classifier");
    }
    ExitCode::SUCCESS
}
