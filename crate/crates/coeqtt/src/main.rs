use clap::{Args, Parser, Subcommand};
use coeqtt::diag::Diagnostic;
use coeqtt::driver::{load_manifest, Checker};
use coeqtt::print::print_core;
use coeqtt::term::AxiomName;
use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Check .hott proof files, print normal forms, audit axiom use.
#[derive(Parser)]
#[command(name = "coeqtt", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CommonOpts {
    /// Files to check, in dependency order.
    files: Vec<PathBuf>,
    /// Read additional files (in order) from a manifest.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Also include `optional:` entries of the manifest.
    #[arg(long)]
    include_optional: bool,
    /// Disable ANSI colors.
    #[arg(long)]
    no_color: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Type-check files; one `ok` line per accepted declaration.
    Check {
        #[command(flatten)]
        common: CommonOpts,
        /// Emit diagnostics as newline-delimited JSON on stdout.
        #[arg(long)]
        json: bool,
    },
    /// Print the normal form of a checked declaration's body.
    Nf {
        /// Declaration (or axiom) name.
        target: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print the sorted transitive axiom set of a declaration.
    Axioms {
        /// Declaration (or axiom) name.
        target: String,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn collect_files(common: &CommonOpts) -> std::io::Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    if let Some(m) = &common.manifest {
        files.extend(load_manifest(m, common.include_optional)?);
    }
    files.extend(common.files.iter().cloned());
    Ok(files)
}

fn print_diag(d: &Diagnostic, color: bool) {
    if color {
        eprintln!("\x1b[31m{d}\x1b[0m");
    } else {
        eprintln!("{d}");
    }
}

fn run_checker(common: &CommonOpts) -> Result<Checker, ExitCode> {
    let files = match collect_files(common) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return Err(ExitCode::from(2));
        }
    };
    if files.is_empty() {
        eprintln!("error: no input files (give files or --manifest)");
        return Err(ExitCode::from(2));
    }
    let mut checker = Checker::new();
    if let Err(e) = checker.check_files(&files) {
        eprintln!("error: {e}");
        return Err(ExitCode::from(2));
    }
    Ok(checker)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Check { common, json } => {
            let checker = match run_checker(&common) {
                Ok(c) => c,
                Err(code) => return code,
            };
            let color = !common.no_color && std::io::stderr().is_terminal();
            let mut out = std::io::stdout().lock();
            for line in &checker.lines {
                let _ = writeln!(out, "{line}");
            }
            for d in &checker.diagnostics {
                if json {
                    let _ = writeln!(out, "{}", d.to_json());
                } else {
                    print_diag(d, color);
                }
            }
            if checker.error_count() > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Cmd::Nf { target, common } => {
            let checker = match run_checker(&common) {
                Ok(c) => c,
                Err(code) => return code,
            };
            let color = !common.no_color && std::io::stderr().is_terminal();
            for d in &checker.diagnostics {
                print_diag(d, color);
            }
            if checker.error_count() > 0 {
                return ExitCode::from(1);
            }
            // Axiom constants are normal forms already.
            if AxiomName::from_str(&target).is_some() {
                println!("{target}");
                return ExitCode::SUCCESS;
            }
            match checker.sig.lookup(&target) {
                Some((_, decl)) => {
                    let nf = coeqtt::nbe::quote(&checker.sig, 0, &decl.body_value);
                    println!("{}", print_core(&nf));
                    ExitCode::SUCCESS
                }
                None => {
                    eprintln!("error: unknown target `{target}`");
                    ExitCode::from(1)
                }
            }
        }
        Cmd::Axioms { target, common } => {
            let checker = match run_checker(&common) {
                Ok(c) => c,
                Err(code) => return code,
            };
            let color = !common.no_color && std::io::stderr().is_terminal();
            for d in &checker.diagnostics {
                print_diag(d, color);
            }
            if checker.error_count() > 0 {
                return ExitCode::from(1);
            }
            if let Some(a) = AxiomName::from_str(&target) {
                println!("{a}");
                return ExitCode::SUCCESS;
            }
            match checker.sig.axiom_usage(&target) {
                Some(set) => {
                    for a in set {
                        println!("{a}");
                    }
                    ExitCode::SUCCESS
                }
                None => {
                    eprintln!("error: unknown target `{target}`");
                    ExitCode::from(1)
                }
            }
        }
    }
}
