//! Command-line frontend: sequence terms, gap expansions, verification
//! sweeps, tiling enumeration and the strategy bench. Machine output goes
//! to standard output, diagnostics to standard error; `--json` switches
//! the structured commands to JSON with all big integers as decimal
//! strings.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use gapseq::bench::{csv_header, format_table, run_bench, Strategy};
use gapseq::identities::{
    check_addition, check_docagne, check_gap_identity, check_lucas_bridge, check_tiling_addition,
    check_tiling_docagne, VerificationReport,
};
use gapseq::lacunary::{
    fib_lacunary, gap_formula, lucas_congruence, lucas_expand, pell_lacunary, LacunaryExpansion,
};
use gapseq::seq::SequenceSpec;
use gapseq::tilings::{
    enumerate_boards, enumerate_bracelets, partition_bracelets, MAX_BRACELET_CELLS,
};

#[derive(Parser)]
#[command(
    name = "gapseq",
    version,
    about = "Exact Fibonacci/Lucas/Pell arithmetic: gap recurrences, identity verification, tiling enumeration"
)]
struct Cli {
    /// Emit JSON instead of plain text (not available for bench, which
    /// emits CSV)
    #[arg(long, global = true)]
    json: bool,

    /// Upper bound for n in verify sweeps (per-suite default otherwise)
    #[arg(long, global = true, value_parser = parse_index)]
    max_n: Option<i64>,

    /// Upper bound for the gap N in verify sweeps (per-suite default
    /// otherwise)
    #[arg(long, global = true, value_parser = parse_index)]
    max_gap: Option<i64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceName {
    Fib,
    Lucas,
    Pell,
    Gibonacci,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "kebab-case")]
enum SuiteName {
    Addition,
    Docagne,
    Bridge,
    TilingAddition,
    TilingDocagne,
    Gap,
    Thm1,
    Thm2,
    Corollary,
    Pell,
    Partition,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TileKind {
    Board,
    Bracelet,
    Partition,
}

#[derive(Subcommand)]
enum Command {
    /// Print one term of a sequence exactly
    Seq {
        sequence: SequenceName,
        #[arg(value_parser = parse_index, allow_hyphen_values = true)]
        n: i64,
        /// Initial term G(0) (gibonacci only)
        #[arg(long, value_parser = parse_big, allow_hyphen_values = true)]
        g0: Option<BigInt>,
        /// Initial term G(1) (gibonacci only)
        #[arg(long, value_parser = parse_big, allow_hyphen_values = true)]
        g1: Option<BigInt>,
    },
    /// Print the gap expansion of a Lucas number
    Expand {
        #[arg(value_parser = parse_index)]
        n: i64,
        /// Gap N between expansion indices
        #[arg(long, value_parser = parse_index)]
        gap: i64,
    },
    /// Run a verification suite and report pass/fail counts
    Verify {
        suite: SuiteName,
        /// Check the (1,1)-seeded Pell variant instead of the sweep: its
        /// divergence from the gap formula at n=5, N=2 is the expected
        /// result (pell suite only)
        #[arg(long)]
        paper_convention: bool,
    },
    /// Enumerate tilings, or partition bracelets at a gap
    Tile {
        kind: TileKind,
        #[arg(value_parser = parse_index)]
        n: i64,
        /// Gap N (partition only)
        #[arg(long, value_parser = parse_index)]
        gap: Option<i64>,
    },
    /// Time Lucas evaluation strategies and emit CSV
    Bench {
        /// Comma-separated list of iterative, fast-doubling, lacunary; or
        /// all
        #[arg(long, default_value = "all")]
        strategies: String,
        /// Comma-separated list of n values
        #[arg(long)]
        n: String,
        /// Gap for the lacunary strategy
        #[arg(long, value_parser = parse_unsigned, default_value = "0")]
        gap: u64,
        /// Repetitions per measurement; minimum time is reported
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), default_value = "1")]
        reps: u32,
        /// Write CSV here and print the table to standard output instead
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Arbitrary-precision decimal input narrowed to a supported index.
fn parse_index(s: &str) -> Result<i64, String> {
    let big = parse_big(s)?;
    i64::try_from(&big).map_err(|_| format!("{s} is outside the supported index range"))
}

fn parse_big(s: &str) -> Result<BigInt, String> {
    BigInt::from_str(s.trim()).map_err(|_| format!("{s} is not a decimal integer"))
}

fn parse_unsigned(s: &str) -> Result<u64, String> {
    let big = parse_big(s)?;
    u64::try_from(&big).map_err(|_| format!("{s} is not a supported non-negative value"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Seq {
            sequence,
            n,
            g0,
            g1,
        } => {
            cmd_seq(sequence, n, g0, g1, cli.json)?;
            Ok(true)
        }
        Command::Expand { n, gap } => {
            cmd_expand(n, gap, cli.json)?;
            Ok(true)
        }
        Command::Verify {
            suite,
            paper_convention,
        } => cmd_verify(suite, paper_convention, cli.max_n, cli.max_gap, cli.json),
        Command::Tile { kind, n, gap } => {
            cmd_tile(kind, n, gap, cli.json)?;
            Ok(true)
        }
        Command::Bench {
            strategies,
            n,
            gap,
            reps,
            out,
        } => {
            if cli.json {
                return Err("bench emits CSV; --json is not supported here".into());
            }
            cmd_bench(&strategies, &n, gap, reps, out)?;
            Ok(true)
        }
    }
}

fn cmd_seq(
    sequence: SequenceName,
    n: i64,
    g0: Option<BigInt>,
    g1: Option<BigInt>,
    json: bool,
) -> Result<(), String> {
    if sequence != SequenceName::Gibonacci && (g0.is_some() || g1.is_some()) {
        return Err("--g0 and --g1 only apply to gibonacci".into());
    }
    let spec = match sequence {
        SequenceName::Fib => SequenceSpec::fibonacci(),
        SequenceName::Lucas => SequenceSpec::lucas(),
        SequenceName::Pell => SequenceSpec::pell(),
        SequenceName::Gibonacci => {
            let (g0, g1) = match (g0, g1) {
                (Some(g0), Some(g1)) => (g0, g1),
                _ => return Err("gibonacci requires both --g0 and --g1".into()),
            };
            SequenceSpec::gibonacci(g0, g1)
        }
    };
    let value = spec.term(n);
    if json {
        let mut doc = json!({
            "sequence": spec.name.clone(),
            "n": n,
            "value": value.to_string(),
        });
        if spec.name == "gibonacci" {
            doc["g0"] = json!(spec.init0.to_string());
            doc["g1"] = json!(spec.init1.to_string());
        }
        println!("{doc}");
    } else {
        println!("{value}");
    }
    Ok(())
}

fn format_expansion(e: &LacunaryExpansion) -> String {
    let mut line = format!("L_{} = {}·(", e.n, e.outer_coefficient);
    for (i, t) in e.terms.iter().enumerate() {
        if i > 0 {
            line.push(' ');
        }
        let sign = if t.sign < 0 { '−' } else { '+' };
        let _ = write!(line, "{sign}L_{}", t.index);
    }
    let residual_sign = if e.residual.sign < 0 { '−' } else { '+' };
    let _ = write!(
        line,
        ") {residual_sign} L_{} = {}",
        e.residual.index,
        e.evaluate()
    );
    line
}

fn cmd_expand(n: i64, gap: i64, json: bool) -> Result<(), String> {
    let expansion = lucas_expand(n, gap).map_err(|e| e.to_string())?;
    if json {
        println!("{}", expansion.to_json());
    } else {
        println!("{}", format_expansion(&expansion));
    }
    Ok(())
}

/// Aggregated outcome of one verification suite.
struct SuiteResult {
    name: &'static str,
    checked: u64,
    failed: u64,
    /// Up to 16 (case, detail) witnesses.
    failures: Vec<(String, String)>,
    note: Option<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            checked: 0,
            failed: 0,
            failures: Vec::new(),
            note: None,
        }
    }

    fn pass(&mut self) {
        self.checked += 1;
    }

    fn fail(&mut self, case: String, detail: String) {
        self.checked += 1;
        self.failed += 1;
        if self.failures.len() < 16 {
            self.failures.push((case, detail));
        }
    }

    fn record_report(&mut self, report: Result<VerificationReport, gapseq::Error>, case: String) {
        match report {
            Ok(r) if r.passed => self.pass(),
            Ok(r) => self.fail(case, format!("lhs={} rhs={}", r.lhs, r.rhs)),
            Err(e) => self.fail(case, e.to_string()),
        }
    }

    fn to_json(&self) -> Value {
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|(case, detail)| json!({"case": case, "detail": detail}))
            .collect();
        let mut doc = json!({
            "suite": self.name,
            "checked": self.checked,
            "failed": self.failed,
            "failures": failures,
        });
        if let Some(note) = &self.note {
            doc["note"] = json!(note);
        }
        doc
    }
}

fn run_addition(max_n: i64) -> SuiteResult {
    let mut out = SuiteResult::new("addition");
    for m in 1..=max_n {
        for n in 0..=max_n {
            out.record_report(check_addition(m, n), format!("m={m}, n={n}"));
        }
    }
    out
}

fn run_docagne(max_n: i64) -> SuiteResult {
    let mut out = SuiteResult::new("docagne");
    for m in 0..=max_n {
        for n in 0..=m {
            out.record_report(check_docagne(m, n), format!("m={m}, n={n}"));
        }
    }
    out
}

fn run_bridge(max_n: i64) -> SuiteResult {
    let mut out = SuiteResult::new("bridge");
    for n in 1..=max_n {
        out.record_report(check_lucas_bridge(n), format!("n={n}"));
    }
    out
}

fn run_tiling_addition(max_n: i64) -> SuiteResult {
    let mut out = SuiteResult::new("tiling-addition");
    for m in 0..=max_n {
        for n in 0..=max_n {
            out.record_report(check_tiling_addition(m, n), format!("m={m}, n={n}"));
        }
    }
    out
}

fn run_tiling_docagne(max_n: i64) -> SuiteResult {
    let mut out = SuiteResult::new("tiling-docagne");
    for m in 0..=max_n {
        for n in 0..=m {
            out.record_report(check_tiling_docagne(m, n), format!("m={m}, n={n}"));
        }
    }
    out
}

fn run_gap(max_n: i64, max_gap: i64) -> SuiteResult {
    let mut out = SuiteResult::new("gap");
    for gap in 1..=max_gap {
        for n in (2 * gap)..=max_n {
            out.record_report(check_gap_identity(n, gap), format!("n={n}, N={gap}"));
        }
    }
    out
}

fn run_thm1(max_n: i64, max_gap: i64) -> SuiteResult {
    let mut out = SuiteResult::new("thm1");
    let table = SequenceSpec::fibonacci().values_up_to(max_n);
    for gap in 2..=max_gap {
        for n in gap..=max_n {
            match fib_lacunary(n, gap) {
                Ok(v) if v == table[n as usize] => out.pass(),
                Ok(v) => out.fail(
                    format!("n={n}, N={gap}"),
                    format!("got {v}, expected {}", table[n as usize]),
                ),
                Err(e) => out.fail(format!("n={n}, N={gap}"), e.to_string()),
            }
        }
    }
    out
}

fn run_thm2(max_n: i64, max_gap: i64) -> SuiteResult {
    let mut out = SuiteResult::new("thm2");
    let table = SequenceSpec::lucas().values_up_to(max_n);
    for gap in 1..=max_gap {
        for n in (2 * gap)..=max_n {
            match lucas_expand(n, gap) {
                Ok(e) => {
                    let v = e.evaluate();
                    if v == table[n as usize] {
                        out.pass();
                    } else {
                        out.fail(
                            format!("n={n}, N={gap}"),
                            format!("got {v}, expected {}", table[n as usize]),
                        );
                    }
                }
                Err(e) => out.fail(format!("n={n}, N={gap}"), e.to_string()),
            }
        }
    }
    out
}

fn run_corollary(max_n: i64, max_gap: i64) -> SuiteResult {
    let mut out = SuiteResult::new("corollary");
    for gap in 1..=max_gap {
        for n in (2 * gap)..=max_n {
            match lucas_congruence(n, gap) {
                Ok((residue, _)) if residue == BigInt::from(0) => out.pass(),
                Ok((residue, _)) => out.fail(
                    format!("n={n}, N={gap}"),
                    format!("residue {residue}, expected 0"),
                ),
                Err(e) => out.fail(format!("n={n}, N={gap}"), e.to_string()),
            }
        }
    }
    out
}

fn run_pell(max_n: i64, max_gap: i64) -> SuiteResult {
    let mut out = SuiteResult::new("pell");
    let table = SequenceSpec::pell().values_up_to(max_n);
    for gap in 2..=max_gap {
        for n in (gap + 1)..=max_n {
            match pell_lacunary(n, gap) {
                Ok(v) if v == table[n as usize] => out.pass(),
                Ok(v) => out.fail(
                    format!("n={n}, N={gap}"),
                    format!("got {v}, expected {}", table[n as usize]),
                ),
                Err(e) => out.fail(format!("n={n}, N={gap}"), e.to_string()),
            }
        }
    }
    out
}

/// The (1,1)-seeded Pell variant must diverge from the gap formula: the
/// formula yields 61 at n=5, N=2 while that sequence's own term is 41.
/// The check passes when the divergence is present.
fn run_pell_convention() -> SuiteResult {
    let mut out = SuiteResult::new("pell-convention");
    let reseeded = SequenceSpec::pell_family(1, 1);
    let formula = gap_formula(&reseeded, 5, 2);
    let term = reseeded.term(5);
    match formula {
        Ok(v) if v == BigInt::from(61) && term == BigInt::from(41) => {
            out.pass();
            out.note = Some(format!(
                "(1,1)-seeded formula gives {v} but the sequence term is {term} at n=5, N=2; divergence expected"
            ));
        }
        Ok(v) => out.fail(
            "n=5, N=2".into(),
            format!("expected formula 61 and term 41, got formula {v} and term {term}"),
        ),
        Err(e) => out.fail("n=5, N=2".into(), e.to_string()),
    }
    out
}

fn run_partition(max_n: i64, max_gap: Option<i64>) -> SuiteResult {
    let mut out = SuiteResult::new("partition");
    let cap = max_n.min(MAX_BRACELET_CELLS);
    for n in 6..=cap {
        let gap_cap = max_gap.map_or(n / 2, |g| g.min(n / 2));
        for gap in 2..=gap_cap {
            match partition_bracelets(n, gap) {
                Ok(_) => out.pass(),
                Err(e) => out.fail(format!("n={n}, N={gap}"), e.to_string()),
            }
        }
    }
    out
}

fn cmd_verify(
    suite: SuiteName,
    paper_convention: bool,
    max_n: Option<i64>,
    max_gap: Option<i64>,
    json: bool,
) -> Result<bool, String> {
    if paper_convention && suite != SuiteName::Pell {
        return Err("--paper-convention only applies to the pell suite".into());
    }
    for bound in [max_n, max_gap].into_iter().flatten() {
        if bound < 0 {
            return Err("bounds must be non-negative".into());
        }
    }
    // Per-suite sweep defaults, overridable by --max-n / --max-gap.
    let n_or = |default: i64| max_n.unwrap_or(default);
    let gap_or = |default: i64| max_gap.unwrap_or(default);

    let mut results: Vec<SuiteResult> = Vec::new();
    let all = suite == SuiteName::All;
    if all || suite == SuiteName::Addition {
        results.push(run_addition(n_or(60)));
    }
    if all || suite == SuiteName::Docagne {
        results.push(run_docagne(n_or(60)));
    }
    if all || suite == SuiteName::Bridge {
        results.push(run_bridge(n_or(200)));
    }
    if all || suite == SuiteName::TilingAddition {
        results.push(run_tiling_addition(n_or(60)));
    }
    if all || suite == SuiteName::TilingDocagne {
        results.push(run_tiling_docagne(n_or(60)));
    }
    if all || suite == SuiteName::Gap {
        results.push(run_gap(n_or(200), gap_or(15)));
    }
    if all || suite == SuiteName::Thm1 {
        results.push(run_thm1(n_or(400), gap_or(12)));
    }
    if all || suite == SuiteName::Thm2 {
        results.push(run_thm2(n_or(400), gap_or(12)));
    }
    if all || suite == SuiteName::Corollary {
        results.push(run_corollary(n_or(400), gap_or(12)));
    }
    if suite == SuiteName::Pell && paper_convention {
        results.push(run_pell_convention());
    } else if all || suite == SuiteName::Pell {
        results.push(run_pell(n_or(400), gap_or(12)));
        if all {
            results.push(run_pell_convention());
        }
    }
    if all || suite == SuiteName::Partition {
        results.push(run_partition(n_or(20), max_gap));
    }

    let ok = results.iter().all(|r| r.failed == 0);
    if json {
        let suites: Vec<Value> = results.iter().map(|r| r.to_json()).collect();
        println!("{}", json!({"suites": suites, "ok": ok}));
    } else {
        for r in &results {
            match &r.note {
                Some(note) => println!(
                    "{}: passed {}/{} ({note})",
                    r.name,
                    r.checked - r.failed,
                    r.checked
                ),
                None => println!("{}: passed {}/{}", r.name, r.checked - r.failed, r.checked),
            }
            for (case, detail) in &r.failures {
                eprintln!("  FAIL [{}] {case}: {detail}", r.name);
            }
            if r.failed > r.failures.len() as u64 {
                eprintln!(
                    "  ... and {} more failures in {}",
                    r.failed - r.failures.len() as u64,
                    r.name
                );
            }
        }
    }
    Ok(ok)
}

fn cmd_tile(kind: TileKind, n: i64, gap: Option<i64>, json: bool) -> Result<(), String> {
    if kind != TileKind::Partition && gap.is_some() {
        return Err("--gap only applies to partition".into());
    }
    match kind {
        TileKind::Board => {
            let boards = enumerate_boards(n).map_err(|e| e.to_string())?;
            let lines: Vec<String> = boards.iter().map(|b| b.export_line()).collect();
            print_enumeration("board", n, &lines, json);
        }
        TileKind::Bracelet => {
            let bracelets = enumerate_bracelets(n).map_err(|e| e.to_string())?;
            let lines: Vec<String> = bracelets.iter().map(|b| b.export_line()).collect();
            print_enumeration("bracelet", n, &lines, json);
        }
        TileKind::Partition => {
            let gap = gap.ok_or("partition requires --gap")?;
            let report = partition_bracelets(n, gap).map_err(|e| e.to_string())?;
            if json {
                println!("{}", report.to_json());
            } else {
                println!(
                    "n={} N={} a={} b={} r1={} r2={} c={} d={} A={}",
                    report.n,
                    report.gap,
                    report.count_a,
                    report.count_b,
                    report.count_r1,
                    report.count_r2,
                    report.count_c,
                    report.count_d,
                    report.correction
                );
            }
        }
    }
    Ok(())
}

fn print_enumeration(kind: &str, n: i64, lines: &[String], json: bool) {
    if json {
        println!(
            "{}",
            json!({
                "kind": kind,
                "n": n,
                "count": lines.len().to_string(),
                "tilings": lines,
            })
        );
    } else {
        for line in lines {
            println!("{line}");
        }
        println!("count={}", lines.len());
    }
}

fn parse_strategies(s: &str) -> Result<Vec<Strategy>, String> {
    if s.trim() == "all" {
        return Ok(Strategy::ALL.to_vec());
    }
    s.split(',')
        .map(|part| match part.trim() {
            "iterative" => Ok(Strategy::Iterative),
            "fast-doubling" => Ok(Strategy::FastDoubling),
            "lacunary" => Ok(Strategy::LacunaryRecombine),
            other => Err(format!(
                "unknown strategy {other:?}; expected iterative, fast-doubling, lacunary or all"
            )),
        })
        .collect()
}

fn parse_n_list(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(|part| parse_unsigned(part.trim()))
        .collect()
}

fn cmd_bench(
    strategies: &str,
    n_list: &str,
    gap: u64,
    reps: u32,
    out: Option<PathBuf>,
) -> Result<(), String> {
    let strategies = parse_strategies(strategies)?;
    let n_values = parse_n_list(n_list)?;
    let records = run_bench(&strategies, &n_values, gap, reps).map_err(|e| e.to_string())?;

    let mut csv = String::from(csv_header());
    csv.push('\n');
    for r in &records {
        csv.push_str(&r.csv_row());
        csv.push('\n');
    }
    match out {
        Some(path) => {
            std::fs::write(&path, &csv)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            print!("{}", format_table(&records));
        }
        None => print!("{csv}"),
    }
    Ok(())
}
