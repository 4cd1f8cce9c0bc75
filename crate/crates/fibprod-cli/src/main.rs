//! `fibprod` — query the coefficients of the Fibonacci infinite product.
//!
//! Exit codes: 0 success, 1 verification mismatch or failed proof check,
//! 2 usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;

use fibprod::fibonacci::FibIndex;
use fibprod::proofs::{self, PropositionPart};
use fibprod::{density, engine, oracle};

#[derive(Parser)]
#[command(name = "fibprod", version, about = "Coefficients of (1-x)(1-x^2)(1-x^3)(1-x^5)(1-x^8)...")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a(m) as -1, 0 or 1; m may have hundreds of digits.
    Coeff {
        #[arg(value_parser = parse_big)]
        m: BigUint,
    },
    /// Print the coefficients a(lo..=hi).
    Range {
        #[arg(value_parser = parse_big)]
        lo: BigUint,
        #[arg(value_parser = parse_big)]
        hi: BigUint,
        #[arg(long, value_enum, default_value_t = RangeFormat::Text)]
        format: RangeFormat,
    },
    /// Print the series prefix through degree N in display style.
    Series {
        #[arg(value_parser = parse_big)]
        n: BigUint,
    },
    /// Print the degrees m <= N with a(m) != 0, one per line.
    Support {
        #[arg(value_parser = parse_big)]
        n: BigUint,
    },
    /// Compare the engine against an independent oracle on [0, N].
    Verify {
        #[arg(long, value_parser = parse_big)]
        max: BigUint,
        #[arg(long, value_enum)]
        oracle: OracleKind,
    },
    /// Print the nonzero-count table and zero-density columns.
    Density {
        #[arg(long = "max-n")]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Print the roots of x^4 - x^3 - 2 with residuals.
    Roots {
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Exhaustively verify one part of the interval recursion at index n.
    Prove {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        part: u8,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum RangeFormat {
    Text,
    Csv,
    Jsonl,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Product,
    Partitions,
}

fn parse_big(s: &str) -> Result<BigUint, String> {
    let t = s.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("'{s}' is not a non-negative decimal integer"));
    }
    Ok(BigUint::parse_bytes(t.as_bytes(), 10).unwrap())
}

/// Range/series/support/verify stream coefficients densely, so their
/// arguments must be machine-size.
fn desk_scale(value: &BigUint, name: &str) -> Result<u64, String> {
    value
        .to_u64()
        .ok_or_else(|| format!("{name} = {value} is too large for dense streaming; use `coeff` for point queries"))
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    // Die quietly when the consumer of a long table goes away (e.g. `| head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => usage_error(&msg),
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Coeff { m } => {
            println!("{}", engine::a_fast(&m));
            Ok(ExitCode::SUCCESS)
        }
        Command::Range { lo, hi, format } => {
            let lo = desk_scale(&lo, "lo")?;
            let hi = desk_scale(&hi, "hi")?;
            if lo > hi {
                return Err(format!("empty range: lo = {lo} exceeds hi = {hi}"));
            }
            let s = engine::stream(hi);
            if format == RangeFormat::Csv {
                println!("m,a");
            }
            for m in lo..=hi {
                let a = s.get(m).unwrap();
                match format {
                    RangeFormat::Text => println!("{m} {a}"),
                    RangeFormat::Csv => println!("{m},{a}"),
                    RangeFormat::Jsonl => println!("{{\"m\":{m},\"a\":{a}}}"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Series { n } => {
            let n = desk_scale(&n, "N")?;
            println!("{}", render_series(n));
            Ok(ExitCode::SUCCESS)
        }
        Command::Support { n } => {
            let n = desk_scale(&n, "N")?;
            for m in engine::support(n) {
                println!("{m}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max, oracle } => {
            let max = desk_scale(&max, "max")?;
            let mismatch = match oracle {
                OracleKind::Product => {
                    let series = oracle::product_series(max);
                    let streamed = engine::stream(max);
                    (0..=max).find(|&m| series.get(m) != streamed.get(m))
                }
                OracleKind::Partitions => (0..=max).find(|&m| {
                    let brute = oracle::a_bruteforce(m).expect("desk-scale tally");
                    engine::a_fast_u64(m) != brute
                }),
            };
            match mismatch {
                None => {
                    let name = match oracle {
                        OracleKind::Product => "product",
                        OracleKind::Partitions => "partitions",
                    };
                    println!("ok: engine agrees with the {name} oracle on [0, {max}]");
                    Ok(ExitCode::SUCCESS)
                }
                Some(m) => {
                    eprintln!("mismatch at degree {m}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Density { max_n, format } => {
            let n_max = FibIndex::new(max_n).map_err(|e| e.to_string())?;
            let records = density::alpha_recurrence(n_max);
            if format == TableFormat::Csv {
                println!("n,alpha,fib,alpha_over_fib,alpha_over_fib_decimal,zero_density,zero_density_decimal");
            } else {
                println!("{:>4} {:>24} {:>24} {:>22} {:>16} {:>22} {:>16}",
                    "n", "alpha", "F_n", "alpha/F_n", "(decimal)", "p(F_n - 1)", "(decimal)");
            }
            for rec in &records {
                let ratio_dec = rec.ratio.to_f64().unwrap_or(f64::NAN);
                let p = &rec.fib_n - &rec.alpha;
                let p_frac = format!("{}/{}", p, rec.fib_n);
                let p_dec = 1.0 - ratio_dec;
                let a_frac = format!("{}/{}", rec.alpha, rec.fib_n);
                match format {
                    TableFormat::Csv => println!(
                        "{},{},{},{a_frac},{ratio_dec:.12},{p_frac},{p_dec:.12}",
                        rec.n, rec.alpha, rec.fib_n
                    ),
                    TableFormat::Text => println!(
                        "{:>4} {:>24} {:>24} {:>22} {:>16.12} {:>22} {:>16.12}",
                        rec.n, rec.alpha, rec.fib_n, a_frac, ratio_dec, p_frac, p_dec
                    ),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Roots { tol } => {
            let rs = density::roots(tol).map_err(|e| e.to_string())?;
            let res = rs.residuals();
            println!("r1 = {:.15}  (residual {:e})", rs.r1, res[0]);
            println!("r2 = {:.15}  (residual {:e})", rs.r2, res[1]);
            println!("r3 = {:.15} + {:.15}i  (residual {:e})", rs.r3.re, rs.r3.im, res[2]);
            println!("r4 = {:.15} - {:.15}i  (residual {:e})", rs.r4.re, -rs.r4.im, res[3]);
            println!("lambda = {:.15}", rs.lambda);
            println!("r1/lambda = {:.15}", rs.r1 / rs.lambda);
            Ok(ExitCode::SUCCESS)
        }
        Command::Prove { part, n } => {
            let part = PropositionPart::from_number(part).expect("clap range 1..=3");
            let n = FibIndex::new(n).map_err(|e| e.to_string())?;
            let report = proofs::verify_proposition(part, n).map_err(|e| e.to_string())?;
            println!("{report}");
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

/// Display-style prefix, e.g. `1 - x - x^2 + x^4 + ...`.
fn render_series(n_max: u64) -> String {
    let s = engine::stream(n_max);
    let mut out = String::from("1");
    for m in 1..=n_max {
        let term = match m {
            1 => "x".to_string(),
            _ => format!("x^{m}"),
        };
        match s.get(m).unwrap().value() {
            1 => {
                out.push_str(" + ");
                out.push_str(&term);
            }
            -1 => {
                out.push_str(" - ");
                out.push_str(&term);
            }
            _ => {}
        }
    }
    out.push_str(" + ...");
    out
}
