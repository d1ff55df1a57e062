//! `oddprime`: prime-count parity, divisor sums and prime polynomials from the
//! command line.

use clap::{Args, Parser, Subcommand, ValueEnum};
use oddprime_core::arith::{isqrt, pi_oracle, tau_sum_oracle, two_omega_oracle};
use oddprime_core::hyperbola::divisor_summatory_with;
use oddprime_core::parity::{pi_parity_interval, two_omega_sum};
use oddprime_core::polyring::{self, oracle as poly_oracle, Gf2Poly, QuotientCtx};
use oddprime_core::search::{find_prime_above, find_prime_above_oracle};
use oddprime_core::{Config, Interval, LargeDMode, WorkCounters};
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "oddprime", version, about = "Prime-count parity and related sums")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Exponent λ: Möbius values for d ≤ b^λ come from a sieve
    #[arg(long, global = true, default_value_t = 0.49)]
    lambda: f64,
    /// Width exponent slack: intervals up to b^(1/2+c) take the fast path
    #[arg(long, global = true, default_value_t = 0.01)]
    c: f64,
    /// Strassen falls back to the triple loop at or below this dimension
    #[arg(long, global = true, default_value_t = 64)]
    strassen_cutoff: usize,
    /// How Möbius values above b^λ are obtained
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Paper)]
    large_d_mode: ModeArg,
    /// Print one JSON object per run instead of the bare result
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Paper,
    Sieve,
}

#[derive(Subcommand)]
enum Command {
    #[command(flatten)]
    Run(Op),
    /// Same subcommands, answered by brute force
    Oracle {
        #[command(subcommand)]
        op: Op,
    },
    /// Work counters for a subcommand at several sizes, one JSON line each
    Bench(Bench),
}

#[derive(Subcommand, Clone)]
enum Op {
    /// D(x) = Σ_{n≤x} τ(n)
    DivisorSum { x: u64 },
    /// Parity of the number of primes in [a, b] (0 or 1)
    PiParity { a: u64, b: u64 },
    /// Σ_{a≤n≤b} 2^ω(n)
    TwoOmega { a: u64, b: u64 },
    /// A prime in (N, 2N] found by parity-guided bisection
    FindPrime {
        n: u64,
        /// Number of pieces probed before bisecting
        #[arg(long, default_value_t = 16)]
        splits: u64,
    },
    /// Σ_{a≤p≤b} t^p mod (2, g), printed in hex (lowest coefficients first)
    PrimePoly {
        a: u64,
        b: u64,
        /// Modulus g as hex (nibble k holds t^4k..t^4k+3) or `t^q-1`
        #[arg(long, value_parser = parse_modulus)]
        modulus: Gf2Poly,
    },
    /// Prime-count parity in each class mod q, class 0 first
    ResidueParity { a: u64, b: u64, q: u64 },
}

#[derive(Args)]
struct Bench {
    #[arg(value_enum)]
    op: BenchOp,
    /// Sizes x; interval commands use [x, x + ⌊√x⌋]
    #[arg(long, value_delimiter = ',', required = true)]
    points: Vec<u64>,
    /// Modulus for prime-poly
    #[arg(long, value_parser = parse_modulus, default_value = "t^64-1")]
    modulus: Gf2Poly,
    /// Class count for residue-parity
    #[arg(long, default_value_t = 12)]
    q: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchOp {
    DivisorSum,
    PiParity,
    TwoOmega,
    FindPrime,
    PrimePoly,
    ResidueParity,
}

fn parse_modulus(s: &str) -> Result<Gf2Poly, String> {
    polyring::parse_modulus(s).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    inputs: Map<String, Value>,
    output: Value,
    work: WorkCounters,
    elapsed_ns: u128,
}

impl RunReport {
    fn plain(&self) -> String {
        match &self.output {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
}

fn bits(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn command_name(op: &Op) -> &'static str {
    match op {
        Op::DivisorSum { .. } => "divisor-sum",
        Op::PiParity { .. } => "pi-parity",
        Op::TwoOmega { .. } => "two-omega",
        Op::FindPrime { .. } => "find-prime",
        Op::PrimePoly { .. } => "prime-poly",
        Op::ResidueParity { .. } => "residue-parity",
    }
}

fn inputs(op: &Op) -> Map<String, Value> {
    let v = match op {
        Op::DivisorSum { x } => json!({ "x": x }),
        Op::PiParity { a, b } | Op::TwoOmega { a, b } => json!({ "a": a, "b": b }),
        Op::FindPrime { n, splits } => json!({ "n": n, "splits": splits }),
        Op::PrimePoly { a, b, modulus } => json!({ "a": a, "b": b, "modulus": polyring::to_hex(modulus) }),
        Op::ResidueParity { a, b, q } => json!({ "a": a, "b": b, "q": q }),
    };
    match v {
        Value::Object(m) => m,
        _ => unreachable!(),
    }
}

fn evaluate(op: &Op, oracle: bool, cfg: &Config, work: &mut WorkCounters) -> oddprime_core::Result<Value> {
    let out = match op {
        Op::DivisorSum { x } => {
            let d = if oracle { tau_sum_oracle(*x)? } else { divisor_summatory_with(*x, cfg, work)? };
            json!(d)
        }
        Op::PiParity { a, b } => {
            let i = Interval::new(*a, *b)?;
            let odd = if oracle { pi_oracle(i) % 2 == 1 } else { pi_parity_interval(i, cfg, work)? };
            json!(odd as u8)
        }
        Op::TwoOmega { a, b } => {
            let i = Interval::new(*a, *b)?;
            json!(if oracle { two_omega_oracle(i)? } else { two_omega_sum(i, cfg, work)? })
        }
        Op::FindPrime { n, splits } => {
            let cfg = Config { initial_splits: *splits, ..cfg.clone() };
            let trace =
                if oracle { find_prime_above_oracle(*n, &cfg, work)? } else { find_prime_above(*n, &cfg, work)? };
            json!(trace.result)
        }
        Op::PrimePoly { a, b, modulus } => {
            let i = Interval::new(*a, *b)?;
            let ctx = QuotientCtx::new(modulus.clone())?;
            let p = if oracle {
                poly_oracle::prime_poly_oracle(i, &ctx)
            } else {
                polyring::prime_poly_mod(i, &ctx, cfg, work)?
            };
            json!(polyring::to_hex(&p))
        }
        Op::ResidueParity { a, b, q } => {
            let i = Interval::new(*a, *b)?;
            if *q == 0 {
                return Err(oddprime_core::Error::InvalidArgument("q must be at least 1".into()));
            }
            let v = if oracle {
                poly_oracle::residue_parity_oracle(i, *q)
            } else {
                polyring::residue_class_parity(i, *q, cfg, work)?
            };
            json!(bits(&v))
        }
    };
    Ok(out)
}

fn run(op: &Op, oracle: bool, cfg: &Config) -> oddprime_core::Result<RunReport> {
    let mut work = WorkCounters::default();
    let start = Instant::now();
    let output = evaluate(op, oracle, cfg, &mut work)?;
    let elapsed_ns = start.elapsed().as_nanos();
    let name = command_name(op);
    let command = if oracle { format!("oracle {name}") } else { name.to_string() };
    Ok(RunReport { command, inputs: inputs(op), output, work, elapsed_ns })
}

fn bench_op(bench: &Bench, x: u64) -> Op {
    let (a, b) = (x.max(2), x.max(2) + isqrt(x));
    match bench.op {
        BenchOp::DivisorSum => Op::DivisorSum { x },
        BenchOp::PiParity => Op::PiParity { a, b },
        BenchOp::TwoOmega => Op::TwoOmega { a, b },
        BenchOp::FindPrime => Op::FindPrime { n: x, splits: 16 },
        BenchOp::PrimePoly => Op::PrimePoly { a, b, modulus: bench.modulus.clone() },
        BenchOp::ResidueParity => Op::ResidueParity { a, b, q: bench.q },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let o = &cli.opts;
    let cfg = Config {
        large_d_exponent: o.lambda,
        c: o.c,
        strassen_cutoff: o.strassen_cutoff,
        large_d_mode: match o.large_d_mode {
            ModeArg::Paper => LargeDMode::Paper,
            ModeArg::Sieve => LargeDMode::Sieve,
        },
        ..Config::default()
    };
    let runs: Vec<(Op, bool)> = match &cli.command {
        Command::Run(op) => vec![(op.clone(), false)],
        Command::Oracle { op } => vec![(op.clone(), true)],
        Command::Bench(bench) => bench.points.iter().map(|&x| (bench_op(bench, x), false)).collect(),
    };
    let as_json = o.json || matches!(cli.command, Command::Bench(_));
    for (op, oracle) in runs {
        match run(&op, oracle, &cfg) {
            Ok(report) if as_json => println!("{}", serde_json::to_string(&report).expect("serializable")),
            Ok(report) => println!("{}", report.plain()),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        }
    }
    ExitCode::SUCCESS
}
