//! `qudit-qec`: fidelity sweeps, exact polynomials, thresholds and the
//! verification table for the d18, d50, five and seven codes.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage, 3 domain error.

mod format;
mod verify;

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qudit_qec::channels::{validate_distribution, validity_bound, ChannelFamily};
use qudit_qec::codes::{codeword_term_counts, CodeId};
use qudit_qec::exactpoly::{Point, RationalPolynomial};
use qudit_qec::fidelity::{effectiveness_threshold, FidelityEngine};
use qudit_qec::Error;
use serde_json::json;

use crate::format::{sig12, PRange};

#[derive(Parser)]
#[command(name = "qudit-qec", version, about = "Entanglement fidelity of qudit and qubit codes under Pauli noise")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Table of the built-in codes.
    Codes {
        #[arg(value_parser = ["list"])]
        action: Option<String>,
    },
    /// Entanglement fidelity at a single point.
    Fidelity {
        #[arg(long)]
        code: CodeId,
        #[arg(long)]
        p: f64,
        #[command(flatten)]
        channel: ChannelArgs,
    },
    /// Exact fidelity polynomial as JSON.
    Polynomial {
        #[arg(long)]
        code: CodeId,
        #[command(flatten)]
        channel: ChannelArgs,
        #[arg(long, value_enum, default_value_t = Method::Trace)]
        method: Method,
        /// Dump the channel's term table instead of the fidelity.
        #[arg(long)]
        terms: bool,
    },
    /// Smallest p where 1 - F(p) = p, with the channel's validity bound.
    Threshold {
        #[arg(long)]
        code: CodeId,
        #[command(flatten)]
        channel: ChannelArgs,
    },
    /// Fidelity sweep over p, one column per code.
    Compare {
        #[arg(long, value_delimiter = ',', required = true)]
        codes: Vec<CodeId>,
        /// start:end:step
        #[arg(long, default_value = "0:0.026:0.0005")]
        p: PRange,
        #[command(flatten)]
        channel: ChannelArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Invariant checks and reference polynomial comparison.
    Verify,
}

#[derive(Args, Clone, Copy)]
struct ChannelArgs {
    /// Defaults to asymmetric when --kappa != 1, correlated when --mu != 0.
    #[arg(long, value_enum)]
    channel: Option<ChannelArg>,
    #[arg(long, default_value_t = 1.0)]
    kappa: f64,
    #[arg(long, default_value_t = 0.0)]
    mu: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChannelArg {
    Symmetric,
    Asymmetric,
    Correlated,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Trace,
    Correctable,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

impl ChannelArgs {
    fn family(&self) -> Result<ChannelFamily> {
        let family = match self.channel {
            Some(ChannelArg::Symmetric) => ChannelFamily::Symmetric,
            Some(ChannelArg::Asymmetric) => ChannelFamily::Asymmetric,
            Some(ChannelArg::Correlated) => ChannelFamily::Correlated,
            None if self.kappa != 1.0 && self.mu != 0.0 => {
                bail!("no channel family has both kappa != 1 and mu != 0")
            }
            None if self.kappa != 1.0 => ChannelFamily::Asymmetric,
            None if self.mu != 0.0 => ChannelFamily::Correlated,
            None => ChannelFamily::Symmetric,
        };
        family.check_parameters(self.kappa, self.mu)?;
        Ok(family)
    }

    fn point(&self, p: f64) -> Point {
        Point::new(p, self.kappa, self.mu)
    }
}

fn engine(code: CodeId, family: ChannelFamily) -> Result<FidelityEngine> {
    FidelityEngine::for_code(code, family).with_context(|| format!("{code} with the {family} channel"))
}

fn check_p(p: f64, kappa: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        bail!("p = {p} lies outside [0, 1]");
    }
    if kappa * p > 1.0 {
        bail!("kappa * p = {} exceeds 1", kappa * p);
    }
    Ok(())
}

fn codes_table() {
    println!("{:<6} {:<9} {:>10} {:>9} {:>14}", "name", "size", "generators", "syndromes", "codeword terms");
    for id in CodeId::ALL {
        let code = id.build();
        let size = match code.n_qubits() {
            Some(n) => format!("n={n}"),
            None => format!("d={}", code.hilbert_dim()),
        };
        let (t0, t1) = codeword_term_counts(&code);
        println!(
            "{:<6} {:<9} {:>10} {:>9} {:>14}",
            id.to_string(),
            size,
            code.generators().len(),
            code.syndrome_space_size(),
            format!("{t0},{t1}")
        );
    }
}

fn fidelity(code: CodeId, p: f64, ch: ChannelArgs) -> Result<()> {
    let family = ch.family()?;
    check_p(p, ch.kappa)?;
    let e = engine(code, family)?;
    let report = validate_distribution(e.terms(), ch.point(p));
    if !report.valid {
        eprintln!(
            "warning: channel weights leave [0, 1] at p = {p} ({} operators); validity bound {}",
            report.offending.len(),
            report.validity_bound.map_or("none".to_string(), sig12)
        );
    }
    println!("{}", sig12(e.value(ch.point(p))));
    Ok(())
}

fn polynomial(code: CodeId, ch: ChannelArgs, method: Method, terms: bool) -> Result<()> {
    let family = ch.family()?;
    let e = engine(code, family)?;
    if terms {
        let table: Vec<_> = e
            .terms()
            .iter()
            .map(|t| json!({ "operator": t.operator.to_string(), "weight": t.weight }))
            .collect();
        println!("{}", serde_json::to_string(&table)?);
        return Ok(());
    }
    let f: RationalPolynomial = match method {
        Method::Trace => e.polynomial()?,
        Method::Correctable => e.correctable_sum()?,
    };
    println!("{}", f.to_json());
    Ok(())
}

fn threshold(code: CodeId, ch: ChannelArgs) -> Result<()> {
    let family = ch.family()?;
    let e = engine(code, family)?;
    let f = e.polynomial()?;
    let t = match effectiveness_threshold(&f, ch.kappa, ch.mu) {
        Ok(r) => Some(r.threshold),
        Err(Error::NoThreshold { .. }) => None,
        Err(err) => return Err(err.into()),
    };
    let report = json!({
        "code": code.to_string(),
        "kappa": ch.kappa,
        "mu": ch.mu,
        "threshold": t,
        "validity_bound": validity_bound(e.terms(), ch.kappa, ch.mu),
    });
    println!("{report}");
    Ok(())
}

fn compare(codes: &[CodeId], range: PRange, ch: ChannelArgs, out: OutputFormat) -> Result<()> {
    let family = ch.family()?;
    let ps = range.points();
    for &p in &ps {
        check_p(p, ch.kappa)?;
    }
    let mut columns = Vec::with_capacity(codes.len());
    for &code in codes {
        let f = engine(code, family)?.polynomial()?;
        columns.push(ps.iter().map(|&p| f.eval(ch.point(p))).collect::<Vec<_>>());
    }
    match out {
        OutputFormat::Csv => {
            let mut s = String::from("p");
            for c in codes {
                s.push(',');
                s.push_str(&c.to_string());
            }
            s.push('\n');
            for (i, &p) in ps.iter().enumerate() {
                s.push_str(&sig12(p));
                for col in &columns {
                    s.push(',');
                    s.push_str(&sig12(col[i]));
                }
                s.push('\n');
            }
            print!("{s}");
        }
        OutputFormat::Json => {
            let rows: Vec<Vec<f64>> = ps
                .iter()
                .enumerate()
                .map(|(i, &p)| std::iter::once(p).chain(columns.iter().map(|c| c[i])).collect())
                .collect();
            let names: Vec<String> = codes.iter().map(|c| c.to_string()).collect();
            let doc = json!({ "channel": family.name(), "kappa": ch.kappa, "mu": ch.mu, "codes": names, "rows": rows });
            println!("{doc}");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Codes { .. } => codes_table(),
        Command::Fidelity { code, p, channel } => fidelity(code, p, channel)?,
        Command::Polynomial { code, channel, method, terms } => polynomial(code, channel, method, terms)?,
        Command::Threshold { code, channel } => threshold(code, channel)?,
        Command::Compare { codes, p, channel, format } => compare(&codes, p, channel, format)?,
        Command::Verify => {
            return Ok(if verify::run()? { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
