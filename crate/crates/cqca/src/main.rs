//! Command-line front end: classification, space-time diagrams, stabilizer
//! and quasifree entanglement timeseries, glider extraction, conjugation,
//! and product-state expectation values.
//!
//! Exit codes: 0 success, 2 invalid input, 3 internal invariant violation.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cqca::csca::{by_name, CscaMatrix};
use cqca::pauli::{expectation_timeseries, PauliWord, ProductState};
use cqca::quasifree::{entropy_timeseries, QuasifreeError};
use cqca::spacetime::{evolve_grid, render_ascii, render_pgm, stats_csv};
use cqca::stabilizer_ent::{evolve_entanglement, StabilizerGenerator};
use cqca::symplectic::PhaseVector;
use cqca::csca::conjugator_to_standard;

#[derive(Parser)]
#[command(name = "cqca", about = "Clifford quantum cellular automata on the qubit chain")]
struct Cli {
    /// Seed for any randomized sweep (reserved; all commands here are
    /// deterministic).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Ascii,
    Pgm,
}

#[derive(Args)]
struct AutoArg {
    /// Automaton: a named key (Gs, G, F, H, P, Gn:<n>) or a matrix literal
    /// [[p11; p12]; [p21; p22]].
    #[arg(long)]
    auto: String,
}

impl AutoArg {
    fn parse(&self) -> Result<CscaMatrix, CliError> {
        let m = by_name(&self.auto)
            .or_else(|_| self.auto.parse::<CscaMatrix>())
            .map_err(|e| CliError::Input(format!("cannot parse automaton: {}", e)))?;
        let violations = m.validate();
        if !violations.is_empty() {
            let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            return Err(CliError::Input(format!("invalid automaton: {}", msgs.join("; "))));
        }
        Ok(m)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the trace classification of an automaton.
    Classify(AutoArg),
    /// Render the space-time diagram of a seed word.
    Spacetime {
        #[command(flatten)]
        auto: AutoArg,
        /// Seed Pauli word, e.g. "0:X 1:Z".
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 8)]
        steps: u64,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Stabilizer entanglement timeseries as CSV.
    StabEnt {
        #[command(flatten)]
        auto: AutoArg,
        /// Generator word (letters only; phase ignored).
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 20)]
        steps: u64,
        /// Region length L for the finite-region column.
        #[arg(long)]
        window: Option<u64>,
    },
    /// Quasifree window-entropy timeseries as CSV.
    QfEnt {
        /// Interpolation parameter of the ω_A family.
        #[arg(long = "A")]
        a: f64,
        #[arg(long)]
        window: usize,
        #[arg(long, default_value_t = 40)]
        steps: i64,
    },
    /// Print the minimal glider of an automaton.
    Glider(AutoArg),
    /// Print the automaton taking a speed-1 glider vector to the standard
    /// one.
    Conjugate {
        /// Phase-space vector "(p | m)".
        #[arg(long)]
        xi: String,
    },
    /// Product-state expectation timeseries of an evolving word as CSV.
    Expectation {
        #[command(flatten)]
        auto: AutoArg,
        /// Bloch vector "x,y,z" of the product state.
        #[arg(long)]
        bloch: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 12)]
        steps: u64,
    },
}

enum CliError {
    Input(String),
    Internal(String),
}

impl From<QuasifreeError> for CliError {
    fn from(e: QuasifreeError) -> Self {
        match e {
            QuasifreeError::ParamOutOfRange => CliError::Input(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

/// Fixed 12-significant-digit scientific notation for CSV stability.
fn sig12(v: f64) -> String {
    // +0.0 and −0.0 must print identically.
    format!("{:.11e}", if v == 0.0 { 0.0 } else { v })
}

fn run(cli: &Cli) -> Result<Vec<u8>, CliError> {
    let input = |e: &dyn std::fmt::Display| CliError::Input(e.to_string());
    match &cli.command {
        Command::Classify(auto) => {
            let m = auto.parse()?;
            Ok(format!("{} trace={}\n", m.classify(), m.trace()).into_bytes())
        }
        Command::Spacetime { auto, word, steps, format } => {
            let m = auto.parse()?;
            let seed: PauliWord = word.parse().map_err(|e| input(&e))?;
            let grid = evolve_grid(&m, &seed, *steps);
            Ok(match format {
                Format::Ascii => render_ascii(&grid).into_bytes(),
                Format::Pgm => render_pgm(&grid),
                Format::Csv => stats_csv(&grid).into_bytes(),
            })
        }
        Command::StabEnt { auto, word, steps, window } => {
            let m = auto.parse()?;
            let w: PauliWord = word.parse().map_err(|e| input(&e))?;
            let xi = w.phase_vector();
            StabilizerGenerator::new(&xi).map_err(|e| input(&e))?;
            let bip = evolve_entanglement(&m, &xi, *steps, None)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            let mut out = String::new();
            match window {
                None => {
                    out.push_str("t,n,E_bipartite\n");
                    for (t, e) in bip.iter().enumerate() {
                        out.push_str(&format!("{},{},{}\n", t, e, e));
                    }
                }
                Some(l) => {
                    let reg = evolve_entanglement(&m, &xi, *steps, Some(*l))
                        .map_err(|e| CliError::Internal(e.to_string()))?;
                    out.push_str("t,n,E_bipartite,E_region\n");
                    for (t, (e, r)) in bip.iter().zip(&reg).enumerate() {
                        out.push_str(&format!("{},{},{},{}\n", t, e, e, r));
                    }
                }
            }
            Ok(out.into_bytes())
        }
        Command::QfEnt { a, window, steps } => {
            if *window == 0 {
                return Err(CliError::Input("window must be at least 1".into()));
            }
            let series = entropy_timeseries(*a, *window, *steps)?;
            let mut out = String::from("t,S\n");
            for (t, s) in series.iter().enumerate() {
                out.push_str(&format!("{},{}\n", t, sig12(*s)));
            }
            Ok(out.into_bytes())
        }
        Command::Glider(auto) => {
            let m = auto.parse()?;
            let (xi, n) = m.minimal_glider().map_err(|e| input(&e))?;
            Ok(format!("xi={} n={}\n", xi, n).into_bytes())
        }
        Command::Conjugate { xi } => {
            let xi: PhaseVector = xi.parse().map_err(|e| input(&e))?;
            let b = conjugator_to_standard(&xi).map_err(|e| input(&e))?;
            Ok(format!("{}\n", b).into_bytes())
        }
        Command::Expectation { auto, bloch, word, steps } => {
            let m = auto.parse()?;
            let parts: Vec<&str> = bloch.split(',').collect();
            if parts.len() != 3 {
                return Err(CliError::Input("bloch vector must be x,y,z".into()));
            }
            let mut xyz = [0.0f64; 3];
            for (slot, p) in xyz.iter_mut().zip(&parts) {
                *slot = p
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Input(format!("bad bloch component {:?}", p)))?;
            }
            let s = ProductState::new(xyz[0], xyz[1], xyz[2]).map_err(|e| input(&e))?;
            let w: PauliWord = word.parse().map_err(|e| input(&e))?;
            let series = expectation_timeseries(&m, &s, &w, *steps);
            let mut out = String::from("t,re,im\n");
            for (t, v) in series.iter().enumerate() {
                out.push_str(&format!("{},{},{}\n", t, sig12(v.re), sig12(v.im)));
            }
            Ok(out.into_bytes())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(bytes) => {
            let res = match &cli.out {
                Some(path) => std::fs::write(path, &bytes).map_err(|e| e.to_string()),
                None => std::io::stdout().write_all(&bytes).map_err(|e| e.to_string()),
            };
            match res {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {}", e);
                    ExitCode::from(2)
                }
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {}", msg);
            ExitCode::from(3)
        }
    }
}
