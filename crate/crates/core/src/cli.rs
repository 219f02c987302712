//! The `abelwords` command line.
//!
//! Exit codes: 0 positive verdict, 1 negative verdict, 2 usage or domain
//! error, 3 enumeration budget exceeded.

use std::io::{Read, Write};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::constructions::{self, ConstructionSpec, Family};
use crate::counting::{self, CountRow, EnumConfig};
use crate::error::{domain, Error, Result};
use crate::numtheory::is_prime;
use crate::parikh::Word;
use crate::primitivity::Algorithm;
use crate::relations;
use crate::roots;

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "abelwords",
    version,
    about = "Abelian primitive words: recognition, roots, constructions, counting"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Oracle,
    Fast,
    Linear,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Oracle => Algorithm::Oracle,
            AlgorithmArg::Fast => Algorithm::Fast,
            AlgorithmArg::Linear => Algorithm::Linear,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Prop1,
    Multiroot,
    Antichain,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Prop1 => Family::Prop1,
            FamilyArg::Multiroot => Family::Multiroot,
            FamilyArg::Antichain => Family::Antichain,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a word is A-primitive.
    Check {
        /// Word over a..z, or `-` to read standard input.
        word: String,
        #[arg(long, value_enum, default_value = "linear")]
        algorithm: AlgorithmArg,
        /// Alphabet size; defaults to the largest letter present.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the A-roots and A-primitive roots of a word.
    Roots {
        word: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a word from one of the constructed families.
    Construct {
        #[arg(value_enum)]
        family: FamilyArg,
        parameter: u64,
    },
    /// Test whether ux and xu are related block-wise and extract a witness.
    Relate {
        u: String,
        x: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Count primitive and A-primitive words of one length.
    Count {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        /// Enumeration threads; defaults to available parallelism.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Count rows n = 1..=max-n for one alphabet size.
    Table {
        #[arg(long)]
        k: u64,
        #[arg(long = "max-n")]
        max_n: u64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Time the three deciders on unary and aabb(ab)^m inputs.
    Bench {
        /// Word lengths, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = vec![1usize << 20, 1 << 21, 1 << 22])]
        sizes: Vec<usize>,
        /// Timed runs per measurement; the mean is reported.
        #[arg(long, default_value_t = 5)]
        runs: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_POSITIVE
            };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "abelwords: {e}");
            match e {
                Error::Budget { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Internal(format!("i/o: {e}"))
}

fn read_word(arg: &str, k: Option<usize>, stdin: &mut dyn Read) -> Result<Word> {
    let text = if arg == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf).map_err(io_err)?;
        buf.trim().to_string()
    } else {
        arg.to_string()
    };
    let word: Word = text.parse()?;
    match k {
        Some(k) => word.with_alphabet(k),
        None => Ok(word),
    }
}

fn non_empty(word: Word) -> Result<Word> {
    if word.is_empty() {
        return Err(domain("the word is empty"));
    }
    Ok(word)
}

fn enum_config(threads: Option<usize>) -> Result<EnumConfig> {
    let mut config = EnumConfig::from_env()?;
    config.threads = threads.unwrap_or(0);
    Ok(config)
}

fn write_json(out: &mut dyn Write, value: &Value) -> Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string(value).expect("json values serialize")
    )
    .map_err(io_err)
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Check {
            word,
            algorithm,
            k,
            format,
        } => {
            let word = non_empty(read_word(&word, k, stdin)?)?;
            let algorithm = Algorithm::from(algorithm);
            let start = Instant::now();
            let verdict = algorithm.decide(&word)?;
            let elapsed = start.elapsed();
            match format {
                Format::Json => write_json(
                    out,
                    &json!({
                        "length": word.len(),
                        "alphabet_size": word.alphabet_size(),
                        "algorithm": algorithm.name(),
                        "verdict": verdict_label(verdict.is_a_primitive),
                        "witness": verdict.witness_root_length,
                    }),
                )?,
                Format::Tsv => {
                    writeln!(out, "length\talphabet_size\talgorithm\tverdict\twitness")
                        .map_err(io_err)?;
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}",
                        word.len(),
                        word.alphabet_size(),
                        algorithm,
                        verdict_label(verdict.is_a_primitive),
                        verdict
                            .witness_root_length
                            .map_or(String::new(), |d| d.to_string())
                    )
                    .map_err(io_err)?;
                }
                Format::Text => {
                    match verdict.witness_root_length {
                        None => writeln!(out, "A-primitive"),
                        Some(d) => writeln!(out, "not A-primitive: A-root of length {d}"),
                    }
                    .map_err(io_err)?;
                    writeln!(out, "length: {}", word.len()).map_err(io_err)?;
                    writeln!(out, "alphabet size: {}", word.alphabet_size()).map_err(io_err)?;
                    writeln!(out, "algorithm: {algorithm}").map_err(io_err)?;
                    writeln!(out, "elapsed: {elapsed:?}").map_err(io_err)?;
                }
            }
            Ok(if verdict.is_a_primitive {
                EXIT_POSITIVE
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Roots { word, k, format } => {
            let word = read_word(&word, k, stdin)?;
            let profile = roots::root_profile(&word)?;
            let prefixes: Vec<(usize, String)> = profile
                .a_primitive_root_lengths
                .iter()
                .map(|&d| (d, word.prefix(d).to_string()))
                .collect();
            if format == Format::Json {
                write_json(
                    out,
                    &json!({
                        "length": profile.word_length,
                        "a_root_lengths": profile.a_root_lengths,
                        "a_primitive_roots": prefixes
                            .iter()
                            .map(|(d, r)| json!({"length": d, "root": r}))
                            .collect::<Vec<_>>(),
                    }),
                )?;
            } else if profile.is_a_primitive() {
                writeln!(out, "word is A-primitive: it has no proper A-root").map_err(io_err)?;
            } else {
                let lens: Vec<String> = profile
                    .a_root_lengths
                    .iter()
                    .map(usize::to_string)
                    .collect();
                writeln!(out, "A-root lengths: {}", lens.join(" ")).map_err(io_err)?;
                writeln!(out, "distinct A-primitive roots: {}", prefixes.len()).map_err(io_err)?;
                for (d, r) in &prefixes {
                    writeln!(out, "{d}\t{r}").map_err(io_err)?;
                }
            }
            Ok(EXIT_POSITIVE)
        }
        Command::Construct { family, parameter } => {
            let word = ConstructionSpec {
                family: family.into(),
                parameter,
            }
            .build()?;
            writeln!(out, "{word}").map_err(io_err)?;
            Ok(EXIT_POSITIVE)
        }
        Command::Relate { u, x, n, format } => {
            let u = non_empty(read_word(&u, None, stdin)?)?;
            let x = non_empty(read_word(&x, None, stdin)?)?;
            let witness = relations::commute_check(&u, &x, n)?;
            let (ux, xu) = (u.concat(&x), x.concat(&u));
            let simeq = relations::simeq_n(&ux, &xu, n)?;
            let shared = match &witness {
                Some(_) if u.len() % n == 0 && x.len() % n == 0 => {
                    relations::shared_root_check(&u, &x, n)?
                }
                _ => None,
            };
            if format == Format::Json {
                let factors: Vec<Value> = witness
                    .iter()
                    .flat_map(|w| w.alphas.iter().zip(&w.betas))
                    .map(|(a, b)| json!({"alpha": a.to_string(), "beta": b.to_string()}))
                    .collect();
                write_json(
                    out,
                    &json!({
                        "n": n,
                        "sim": witness.is_some(),
                        "simeq": simeq,
                        "witness": witness.as_ref().map(|w| json!({"r": w.r, "s": w.s, "factors": factors})),
                        "shared_root": shared.as_ref().map(Word::to_string),
                    }),
                )?;
            } else {
                match &witness {
                    Some(w) => {
                        writeln!(out, "commute under ~_{n}").map_err(io_err)?;
                        writeln!(out, "simeq: {simeq}").map_err(io_err)?;
                        writeln!(out, "r = {}, s = {}", w.r, w.s).map_err(io_err)?;
                        for (i, (a, b)) in w.alphas.iter().zip(&w.betas).enumerate() {
                            writeln!(out, "{}\talpha = {a}\tbeta = {b}", i + 1).map_err(io_err)?;
                        }
                        if let Some(root) = &shared {
                            writeln!(out, "shared A-root of length {n}: x starts with {root}")
                                .map_err(io_err)?;
                        }
                    }
                    None => {
                        writeln!(out, "do not commute under ~_{n}").map_err(io_err)?;
                        writeln!(out, "simeq: {simeq}").map_err(io_err)?;
                    }
                }
            }
            Ok(if witness.is_some() {
                EXIT_POSITIVE
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Count {
            k,
            n,
            format,
            threads,
        } => {
            let row = counting::count_row(k, n, &enum_config(threads)?)?;
            match format {
                Format::Json => {
                    let mut line = serde_json::to_string(&row).expect("rows serialize");
                    line.push('\n');
                    out.write_all(line.as_bytes()).map_err(io_err)?;
                }
                Format::Tsv => out
                    .write_all(counting::render_tsv(std::slice::from_ref(&row)).as_bytes())
                    .map_err(io_err)?,
                Format::Text => write_row_text(out, k, &row)?,
            }
            Ok(EXIT_POSITIVE)
        }
        Command::Table {
            k,
            max_n,
            format,
            threads,
        } => {
            let table = counting::figure1_table(k, max_n, &enum_config(threads)?)?;
            match format {
                Format::Json => out.write_all(table.to_json().as_bytes()).map_err(io_err)?,
                Format::Tsv => out.write_all(table.to_tsv().as_bytes()).map_err(io_err)?,
                Format::Text => {
                    for row in &table.rows {
                        write_row_text(out, k, row)?;
                    }
                }
            }
            Ok(EXIT_POSITIVE)
        }
        Command::Bench {
            sizes,
            runs,
            format,
        } => {
            bench(out, &sizes, runs.max(1), format)?;
            Ok(EXIT_POSITIVE)
        }
    }
}

fn verdict_label(is_a_primitive: bool) -> &'static str {
    if is_a_primitive {
        "A-primitive"
    } else {
        "not A-primitive"
    }
}

fn write_row_text(out: &mut dyn Write, k: u64, row: &CountRow) -> Result<()> {
    writeln!(
        out,
        "k = {k}, n = {}: psi = {}, psi_a = {}, delta = {}",
        row.n, row.psi, row.psi_a, row.delta
    )
    .map_err(io_err)
}

/// Largest prime `p` with `2p ≤ len`.
fn prop1_parameter(len: usize) -> Option<u64> {
    (2..=(len / 2) as u64).rev().find(|&p| is_prime(p))
}

fn bench(out: &mut dyn Write, sizes: &[usize], runs: u32, format: Format) -> Result<()> {
    let mut rows: Vec<(String, usize, Algorithm, Duration)> = Vec::new();
    for &size in sizes {
        if size == 0 {
            return Err(domain("bench sizes must be positive"));
        }
        let unary = Word::new(vec![0; size], 1)?;
        let mut inputs = vec![("unary", unary)];
        if let Some(p) = prop1_parameter(size) {
            inputs.push(("prop1", constructions::prop1_word(p)?));
        }
        for (label, word) in inputs {
            for algorithm in Algorithm::ALL {
                let mut total = Duration::ZERO;
                for _ in 0..runs {
                    let start = Instant::now();
                    std::hint::black_box(algorithm.decide(std::hint::black_box(&word))?);
                    total += start.elapsed();
                }
                rows.push((label.to_string(), word.len(), algorithm, total / runs));
            }
        }
    }
    let ratio = |i: usize| -> Option<f64> {
        let (label, len, alg, t) = &rows[i];
        rows[..i]
            .iter()
            .rev()
            .find(|(l, _, a, _)| l == label && a == alg)
            .filter(|(_, prev_len, _, _)| prev_len < len)
            .map(|(_, _, _, prev)| t.as_secs_f64() / prev.as_secs_f64().max(1e-12))
    };
    match format {
        Format::Json => {
            let values: Vec<Value> = (0..rows.len())
                .map(|i| {
                    let (label, len, alg, t) = &rows[i];
                    json!({
                        "input": label,
                        "length": len,
                        "algorithm": alg.name(),
                        "mean_seconds": t.as_secs_f64(),
                        "ratio_to_previous": ratio(i),
                    })
                })
                .collect();
            write_json(out, &Value::Array(values))?;
        }
        _ => {
            writeln!(
                out,
                "input\tlength\talgorithm\tmean_seconds\tratio_to_previous"
            )
            .map_err(io_err)?;
            for (i, (label, len, alg, t)) in rows.iter().enumerate() {
                writeln!(
                    out,
                    "{label}\t{len}\t{alg}\t{:.6}\t{}",
                    t.as_secs_f64(),
                    ratio(i).map_or("-".to_string(), |r| format!("{r:.2}"))
                )
                .map_err(io_err)?;
            }
        }
    }
    Ok(())
}
