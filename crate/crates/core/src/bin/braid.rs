//! `braid`: command-line front end.
//!
//! Exit codes: 0 positive verdict, 1 negative verdict, 2 input error,
//! 3 unsupported (`exp(x) = 0`).

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use braidlog::bench::{self, BenchConfig};
use braidlog::wordio::{self, BatchPair};
use braidlog::{exp_sum, gwp_with_stats, left_canonical_form, BraidIndex, BraidWord, GwpReport, Verdict};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

const POSITIVE: u8 = 0;
const NEGATIVE: u8 = 1;
const INPUT_ERROR: u8 = 2;
const UNSUPPORTED: u8 = 3;

#[derive(Parser)]
#[command(name = "braid", version, about = "Braid words, normal forms and braid logarithms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Index {
    /// Braid index (number of strands).
    #[arg(short = 'n', value_name = "N")]
    n: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exponent sum of a word.
    Exp {
        #[command(flatten)]
        index: Index,
        word: String,
    },
    /// Print the left canonical form of a word.
    Nf {
        #[command(flatten)]
        index: Index,
        word: String,
    },
    /// Decide whether two words represent the same braid.
    Eq {
        #[command(flatten)]
        index: Index,
        u: String,
        v: String,
    },
    /// Print the k-th power of a word (use `--` before a negative k).
    Pow {
        #[command(flatten)]
        index: Index,
        word: String,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Decide whether y is a power of x and print the exponent.
    Log {
        #[command(flatten)]
        index: Index,
        x: String,
        y: String,
        /// Emit a JSON object instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run `log` on every `x<TAB>y` line of a file (`-` reads stdin).
    Batch {
        #[command(flatten)]
        index: Index,
        file: PathBuf,
        /// Report wall_ns as 0 for reproducible output.
        #[arg(long)]
        omit_timing: bool,
    },
    /// Empirical scaling run; CSV on stdout, fitted slopes on stderr.
    Bench {
        /// Braid indices: `a..b` (every integer) or a comma list.
        #[arg(long = "n", value_name = "RANGE")]
        indices: String,
        /// Word lengths: `a..b` (doubling) or a comma list.
        #[arg(long = "M", value_name = "RANGE")]
        lengths: String,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report wall_ns as 0 for byte-identical output.
        #[arg(long)]
        omit_timing: bool,
    },
}

#[derive(Serialize)]
struct BatchLine {
    line: usize,
    #[serde(flatten)]
    report: GwpReport,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn index(ix: &Index) -> Result<BraidIndex, String> {
    BraidIndex::new(ix.n).map_err(|e| e.to_string())
}

fn word(text: &str, n: BraidIndex) -> Result<BraidWord, String> {
    wordio::parse(text, n).map_err(|e| format!("{text:?}: {e}"))
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Exp { index: ix, word: w } => {
            let w = word(&w, index(&ix)?)?;
            println!("{}", exp_sum(&w));
            Ok(POSITIVE)
        }
        Command::Nf { index: ix, word: w } => {
            let w = word(&w, index(&ix)?)?;
            println!("{}", left_canonical_form(&w));
            Ok(POSITIVE)
        }
        Command::Eq { index: ix, u, v } => {
            let n = index(&ix)?;
            let (u, v) = (word(&u, n)?, word(&v, n)?);
            if braidlog::equal(&u, &v).map_err(|e| e.to_string())? {
                println!("equal");
                Ok(POSITIVE)
            } else {
                println!("unequal");
                Ok(NEGATIVE)
            }
        }
        Command::Pow { index: ix, word: w, k } => {
            let w = word(&w, index(&ix)?)?;
            let p = w.try_pow(k).map_err(|e| e.to_string())?;
            println!("{}", wordio::format(&p));
            Ok(POSITIVE)
        }
        Command::Log { index: ix, x, y, json } => {
            let n = index(&ix)?;
            let (x, y) = (word(&x, n)?, word(&y, n)?);
            let (result, stats) = gwp_with_stats(&x, &y).map_err(|e| e.to_string())?;
            if json {
                let report = GwpReport::new(result.verdict, stats);
                println!("{}", serde_json::to_string(&report).map_err(|e| e.to_string())?);
            } else {
                println!("{}", result.verdict);
            }
            Ok(exit_code(result.verdict))
        }
        Command::Batch { index: ix, file, omit_timing } => {
            let n = index(&ix)?;
            let text = read_input(&file)?;
            let pairs = wordio::parse_batch(&text, n).map_err(|e| e.to_string())?;
            let lines: Vec<Result<String, String>> = pairs
                .par_iter()
                .map(|BatchPair { line, x, y }| {
                    let (result, mut stats) = gwp_with_stats(x, y).map_err(|e| format!("line {line}: {e}"))?;
                    if omit_timing {
                        stats.wall_ns = 0;
                    }
                    let out = BatchLine { line: *line, report: GwpReport::new(result.verdict, stats) };
                    serde_json::to_string(&out).map_err(|e| e.to_string())
                })
                .collect();
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for line in lines {
                writeln!(out, "{}", line?).map_err(|e| e.to_string())?;
            }
            Ok(POSITIVE)
        }
        Command::Bench { indices, lengths, trials, seed, omit_timing } => {
            if trials == 0 {
                return Err("--trials must be at least 1".into());
            }
            let config = BenchConfig {
                indices: bench::parse_index_range(&indices)?,
                lengths: bench::parse_length_range(&lengths)?,
                trials,
                seed,
            };
            let records = bench::run_bench(&config);
            bench::write_csv(&records, io::stdout().lock(), omit_timing).map_err(|e| e.to_string())?;
            let cells = bench::cell_means(&records);
            let fmt = |s: Option<f64>| s.map_or("n/a".to_string(), |v| format!("{v:.3}"));
            for s in bench::slopes_in_m(&cells) {
                eprintln!(
                    "slope vs M (n={}): factor_ops {}, wall_time {}",
                    s.fixed,
                    fmt(s.factor_ops),
                    fmt(s.wall_time)
                );
            }
            for s in bench::slopes_in_n(&cells) {
                eprintln!(
                    "slope vs n (M={}): factor_ops {}, wall_time {}",
                    s.fixed,
                    fmt(s.factor_ops),
                    fmt(s.wall_time)
                );
            }
            Ok(POSITIVE)
        }
    }
}

fn exit_code(v: Verdict) -> u8 {
    match v {
        Verdict::Power(_) => POSITIVE,
        Verdict::NotPower(_) => NEGATIVE,
        Verdict::ZeroExponentUnsupported => UNSUPPORTED,
    }
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}
