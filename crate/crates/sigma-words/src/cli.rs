//! Command-line surface: generation, counting, kernels, verification and
//! table emission.
//!
//! Exit codes: 0 success (and, for verify/sweep/table, all rows agree);
//! 1 at least one disagreement or unsupported row; 2 usage or parse
//! error; 3 word length cap exceeded.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::formula::formula_count;
use crate::kernel::{kernel, m_count};
use crate::oracle::{count_generalized, count_pattern};
use crate::pattern::{GeneralizedPattern, Semantics};
use crate::verify::{all_agree, cross_check, sweep_dashless, to_csv, to_jsonl, CheckRow};
use crate::word::{build_word, sigma_letter, Word, WordKind};
use crate::Error;

#[derive(Parser)]
#[command(name = "sigma-words", disable_help_flag = false)]
#[command(about = "Sigma-words: generation and exact pattern occurrence counting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    C,
    D,
}

impl From<KindArg> for WordKind {
    fn from(k: KindArg) -> WordKind {
        match k {
            KindArg::C => WordKind::C,
            KindArg::D => WordKind::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Raw,
    Lines,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Oracle,
    Formula,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Pattern,
    Literal,
}

#[derive(Subcommand)]
enum Command {
    /// Print the word C_n or D_n
    Generate {
        #[arg(long, value_enum, default_value = "c")]
        kind: KindArg,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "raw")]
        format: FormatArg,
    },
    /// Print one letter of the sigma-sequence via the direct formula
    Letter {
        #[arg(long)]
        index: u64,
    },
    /// Print a kernel window, and optionally a subword count inside it
    Kernel {
        /// Word to take the kernel of: c:N, d:N, or a literal word
        #[arg(long)]
        word: String,
        #[arg(long)]
        order: u32,
        /// Also print the number of occurrences of this block in the kernel
        #[arg(long)]
        count: Option<String>,
    },
    /// Count occurrences of a pattern in C_n or D_n
    Count {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "c")]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "pattern")]
        semantics: SemanticsArg,
    },
    /// Cross-check formula against oracle for one pattern
    Verify {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Cross-check every dashless pattern up to a length
    Sweep {
        #[arg(long)]
        max_len: u32,
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Cross-check every pattern listed in a file, one per line
    Table {
        #[arg(long)]
        patterns_file: String,
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        report: ReportArgs,
    },
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: ReportFormat,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } => 3,
        Error::OverlappingBlocks { .. } | Error::OverlapAtAnchor { .. } => 1,
        _ => 2,
    }
}

fn parse_word_spec(spec: &str) -> Result<Word, Error> {
    if let Some(n) = spec.strip_prefix("c:").or_else(|| spec.strip_prefix("C:")) {
        let n: u32 = n.parse().map_err(|_| Error::Parse(format!("bad word order in {spec:?}")))?;
        build_word(WordKind::C, n)
    } else if let Some(n) = spec.strip_prefix("d:").or_else(|| spec.strip_prefix("D:")) {
        let n: u32 = n.parse().map_err(|_| Error::Parse(format!("bad word order in {spec:?}")))?;
        build_word(WordKind::D, n)
    } else {
        Word::from_str(spec)
    }
}

fn emit_report(rows: &[CheckRow], format: ReportFormat, out: &mut String) -> i32 {
    match format {
        ReportFormat::Csv => out.push_str(&to_csv(rows)),
        ReportFormat::Jsonl => out.push_str(&to_jsonl(rows)),
    }
    if all_agree(rows) {
        0
    } else {
        1
    }
}

fn execute(command: Command, out: &mut String) -> Result<i32, Error> {
    match command {
        Command::Generate { kind, n, format } => {
            let word = build_word(kind.into(), n)?;
            match format {
                FormatArg::Raw => {
                    let _ = writeln!(out, "{word}");
                }
                FormatArg::Lines => {
                    for i in 1..=word.len() {
                        let _ = writeln!(out, "{}", word.letter(i));
                    }
                }
            }
            Ok(0)
        }
        Command::Letter { index } => {
            if index == 0 {
                return Err(Error::Parse("positions are 1-based".into()));
            }
            let _ = writeln!(out, "{}", sigma_letter(index));
            Ok(0)
        }
        Command::Kernel { word, order, count } => {
            let w = parse_word_spec(&word)?;
            let ker = kernel(&w, order)?;
            let _ = writeln!(out, "kernel: {ker}");
            if let Some(block) = count {
                let block: Word = block.parse()?;
                let _ = writeln!(out, "count: {}", m_count(order, &block, &w)?);
            }
            Ok(0)
        }
        Command::Count { pattern, n, kind, method, semantics } => {
            let p: GeneralizedPattern = pattern.parse()?;
            let kind: WordKind = kind.into();
            let semantics = match semantics {
                SemanticsArg::Pattern => Semantics::Pattern,
                SemanticsArg::Literal => Semantics::Literal,
            };
            let oracle = |p: &GeneralizedPattern| -> Result<crate::Count, Error> {
                let word = build_word(kind, n)?;
                Ok(match semantics {
                    Semantics::Pattern => count_pattern(&word, p),
                    Semantics::Literal => count_generalized(&word, p),
                })
            };
            let formula = |p: &GeneralizedPattern| -> Result<crate::Count, Error> {
                if semantics == Semantics::Literal {
                    return Err(Error::Domain(
                        "the formula engine computes pattern-semantics counts; use --method oracle for literal counts".into(),
                    ));
                }
                let pair = formula_count(p, n)?;
                Ok(match kind {
                    WordKind::C => pair.c,
                    WordKind::D => pair.d,
                })
            };
            let value = match method {
                MethodArg::Oracle => oracle(&p)?,
                MethodArg::Formula => formula(&p)?,
                MethodArg::Auto => formula(&p).or_else(|_| oracle(&p))?,
            };
            let _ = writeln!(out, "{value}");
            Ok(0)
        }
        Command::Verify { pattern, n_min, n_max, report } => {
            let p: GeneralizedPattern = pattern.parse()?;
            if n_min < 1 || n_min > n_max {
                return Err(Error::Domain(format!("invalid range {n_min}..{n_max}")));
            }
            let rows = cross_check(&p, n_min, n_max)?;
            Ok(emit_report(&rows, report.format, out))
        }
        Command::Sweep { max_len, n_max, report } => {
            if max_len < 1 || n_max < 1 {
                return Err(Error::Domain("sweep bounds must be at least 1".into()));
            }
            let rows = sweep_dashless(max_len, n_max)?;
            Ok(emit_report(&rows, report.format, out))
        }
        Command::Table { patterns_file, n_min, n_max, report } => {
            if n_min < 1 || n_min > n_max {
                return Err(Error::Domain(format!("invalid range {n_min}..{n_max}")));
            }
            let text = std::fs::read_to_string(&patterns_file)
                .map_err(|e| Error::Parse(format!("cannot read {patterns_file}: {e}")))?;
            let mut rows = Vec::new();
            for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
                let p: GeneralizedPattern = line.parse()?;
                rows.extend(cross_check(&p, n_min, n_max)?);
            }
            Ok(emit_report(&rows, report.format, out))
        }
    }
}

/// Runs one command, writing data to `stdout` and diagnostics to
/// `stderr`; returns the process exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage; keep its exit semantics for
            // --help but report usage errors as code 2.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mut out = String::new();
    match execute(cli.command, &mut out) {
        Ok(code) => {
            print!("{out}");
            code
        }
        Err(e) => {
            print!("{out}");
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let mut argv = vec!["sigma-words"];
        argv.extend_from_slice(args);
        let cli = Cli::try_parse_from(&argv).expect("args should parse");
        let mut out = String::new();
        match execute(cli.command, &mut out) {
            Ok(code) => (code, out),
            Err(e) => (exit_code_for(&e), out),
        }
    }

    #[test]
    fn generate_and_letter() {
        let (code, out) = run_capture(&["generate", "--kind", "d", "--n", "2"]);
        assert_eq!((code, out.trim()), (0, "122"));
        let (code, out) = run_capture(&["letter", "--index", "12"]);
        assert_eq!((code, out.trim()), (0, "2"));
    }

    #[test]
    fn count_methods_agree() {
        let (code, out) = run_capture(&["count", "--pattern", "1-221", "--n", "5"]);
        assert_eq!((code, out.trim()), (0, "47"));
        let (_, oracle_out) =
            run_capture(&["count", "--pattern", "1-221", "--n", "5", "--method", "oracle"]);
        assert_eq!(out, oracle_out);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, _) = run_capture(&["verify", "--pattern", "12", "--n-min", "2", "--n-max", "10"]);
        assert_eq!(code, 0);
        // Overlapping three-block pattern: unsupported rows, exit 1.
        let (code, _) = run_capture(&["verify", "--pattern", "1-12-21", "--n-min", "4", "--n-max", "5"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn cap_exit_code() {
        let (code, _) = run_capture(&["generate", "--kind", "c", "--n", "30"]);
        assert_eq!(code, 3);
    }

    #[test]
    fn kernel_command() {
        let (code, out) = run_capture(&["kernel", "--word", "111211221", "--order", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("12112"));
        let (code, out) =
            run_capture(&["kernel", "--word", "c:3", "--order", "2", "--count", "21"]);
        assert_eq!(code, 0);
        assert!(out.contains("count: 1"), "{out}");
    }
}
