//! `wcomb`: exact transvectants, Wronskians and Wronskian combinants of
//! binary forms, with JSON output.

mod error;
mod json;
mod parse;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use wcomb_core::scalar::int;
use wcomb_core::verify::{
    quintic_coefficients, random_independent_forms, run_suite, seeded_rng, suite_names,
    SuiteConfig,
};
use wcomb_core::{
    gamma, psi_matrix, recover_subspace, transvectant, verify_keyprop, wronskian,
    wronskian_combinants, BinaryForm, Error, Subspace,
};

use crate::error::CliError;
use crate::parse::{parse_family, parse_form, read_source, Convention};

#[derive(Parser)]
#[command(name = "wcomb", version, about = "Exact Wronskian combinants of binary forms")]
struct Cli {
    /// Read and write coefficient arrays in the binomially weighted convention
    /// `f = sum binom(d, j) a_j x1^(d-j) x2^j`.
    #[arg(long, global = true)]
    binomial: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The k-th transvectant (E, F)_k.
    Transvect {
        #[arg(allow_hyphen_values = true)]
        e: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
        k: usize,
    },
    /// The normalized Wronskian of forms of a common order.
    Wronskian {
        #[arg(required = true, allow_hyphen_values = true)]
        forms: Vec<String>,
    },
    /// The Wronskian combinants C_q of r forms of order d.
    Combinants {
        #[arg(required = true, allow_hyphen_values = true)]
        forms: Vec<String>,
    },
    /// Kernel and rank of the operator psi_E defined by a combinant family file.
    PsiKernel {
        /// JSON family file, or `-` for stdin.
        family: String,
    },
    /// Recovers the subspace and scalar k with E = k C from a family file.
    Recover {
        /// JSON family file, or `-` for stdin.
        family: String,
    },
    /// Gamma_p(B; A_1..A_r).
    Gamma {
        #[arg(allow_hyphen_values = true)]
        b: String,
        p: usize,
        #[arg(required = true, allow_hyphen_values = true)]
        forms: Vec<String>,
    },
    /// Checks the three Gamma_p identities for B and A_1..A_r.
    VerifyKeyprop {
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(required = true, allow_hyphen_values = true)]
        forms: Vec<String>,
    },
    /// Normalized projective point of the combinants of span(A_1..A_r).
    Embed {
        #[arg(required = true, allow_hyphen_values = true)]
        forms: Vec<String>,
    },
    /// Runs the randomized exact invariant suites.
    VerifySuite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 4)]
        rmax: usize,
        #[arg(long, default_value_t = 8)]
        dmax: usize,
        /// Run only the named suite (repeatable).
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// List suite names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Expresses C_0 (A_1, A_2)_5 for two random quintics in terms of
    /// C_2^2, (C_0, C_0)_4 and (C_0, C_2)_2.
    QuinticIdentity {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn forms(args: &[String], conv: Convention) -> Result<Vec<BinaryForm>, CliError> {
    args.iter().map(|a| parse_form(a, conv)).collect()
}

fn print(value: &impl Serialize) {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    // a closed pipe downstream is not an error
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn run(cli: Cli) -> Result<(), CliError> {
    let conv = if cli.binomial {
        Convention::Binomial
    } else {
        Convention::Raw
    };
    match cli.command {
        Command::Transvect { e, f, k } => {
            let (e, f) = (parse_form(&e, conv)?, parse_form(&f, conv)?);
            print(&json::form(&transvectant(&e, &f, k), conv));
        }
        Command::Wronskian { forms: args } => {
            print(&json::form(&wronskian(&forms(&args, conv)?)?, conv));
        }
        Command::Combinants { forms: args } => {
            print(&json::family(&wronskian_combinants(&forms(&args, conv)?)?, conv));
        }
        Command::PsiKernel { family } => {
            let e = parse_family(&read_source(&family)?, conv)?;
            if e.is_zero() {
                return Err(Error::ZeroCombinants.into());
            }
            let map = psi_matrix(&e);
            let rank = map.rank();
            let threshold = e.d() - e.r() + 1;
            let kernel = map.kernel_forms();
            print(&json!({
                "r": e.r(),
                "d": e.d(),
                "rank": rank,
                "threshold": threshold,
                "in_image": rank <= threshold,
                "kernel_dim": kernel.len(),
                "kernel": json::forms(&kernel, conv),
            }));
        }
        Command::Recover { family } => {
            let e = parse_family(&read_source(&family)?, conv)?;
            let rec = recover_subspace(&e)?;
            print(&json!({
                "r": e.r(),
                "d": e.d(),
                "subspace": json::forms(&rec.subspace.canonical_forms(), conv),
                "k": json::scalar(&rec.k),
            }));
        }
        Command::Gamma { b, p, forms: args } => {
            let b = parse_form(&b, conv)?;
            print(&json::form(&gamma(&b, &forms(&args, conv)?, p)?, conv));
        }
        Command::VerifyKeyprop { b, forms: args } => {
            let b = parse_form(&b, conv)?;
            let report = verify_keyprop(&b, &forms(&args, conv)?)?;
            print(&json!({
                "vanishing": report.vanishing,
                "product": report.product,
                "jacobian": report.jacobian,
                "all": report.all(),
            }));
            if !report.all() {
                return Err(CliError::verification("keyprop-failed", "a Gamma identity does not hold"));
            }
        }
        Command::Embed { forms: args } => {
            let s = Subspace::new(&forms(&args, conv)?)?;
            print(&json::point(&wcomb_core::pluecker_point(&s)?, conv));
        }
        Command::VerifySuite {
            seed,
            cases,
            rmax,
            dmax,
            suites,
            list,
        } => {
            if list {
                print(&suite_names());
                return Ok(());
            }
            let names = if suites.is_empty() {
                suite_names().into_iter().map(String::from).collect()
            } else {
                suites
            };
            let config = SuiteConfig {
                seed,
                cases,
                rmax,
                dmax,
            };
            let mut reports = Vec::new();
            for name in &names {
                let report = run_suite(name, &config)
                    .ok_or_else(|| CliError::parse(format!("unknown suite {name:?}")))?;
                reports.push(report);
            }
            let passed = reports.iter().all(|r| r.passed());
            print(&json!({
                "seed": seed,
                "cases": cases,
                "rmax": rmax,
                "dmax": dmax,
                "passed": passed,
                "suites": reports.iter().map(|r| json!({
                    "name": r.name,
                    "cases": r.cases,
                    "passed": r.passed(),
                    "failures": r.failures,
                })).collect::<Vec<_>>(),
            }));
            if !passed {
                let failed = reports.iter().filter(|r| !r.passed()).count();
                return Err(CliError::verification(
                    "suite-failed",
                    format!("{failed} of {} suites failed", reports.len()),
                ));
            }
        }
        Command::QuinticIdentity { seed } => {
            let mut rng = seeded_rng(seed);
            let a = random_independent_forms(&mut rng, 2, 5);
            let got = quintic_coefficients(&a[0], &a[1])?;
            let expected = [int(50), int(-15), int(-40)];
            let matches = got == expected;
            print(&json!({
                "seed": seed,
                "forms": json::forms(&a, conv),
                "coefficients": got.iter().map(json::scalar).collect::<Vec<_>>(),
                "matches": matches,
            }));
            if !matches {
                return Err(CliError::verification("quintic-mismatch", "coefficients differ from (50, -15, -40)"));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError {
                code: "usage",
                kind: error::Kind::Parse,
                message: e.render().to_string().trim_end().to_string(),
            };
            eprintln!("{}", serde_json::to_string(&err).expect("serializable"));
            return ExitCode::from(err.kind.exit_code());
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{}", serde_json::to_string(&err).expect("serializable"));
            ExitCode::from(err.kind.exit_code())
        }
    }
}
