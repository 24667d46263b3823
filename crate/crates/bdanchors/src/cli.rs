//! Argument grammar and subcommand dispatch.

use std::ffi::OsString;
use std::fmt;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use bdanchors_core::index::{Mode, TextIndex};
use bdanchors_core::oracles::{avg_anchor_count, gen_random_string, gen_synthetic, CountMode, SyntheticConfig};
use bdanchors_core::sampling::{sample, Order, Scheme, SchemeParams};
use bdanchors_core::similarity::{top_k_query, DictionaryIndex, QueryParams};

use crate::index_file::{read_index, write_index};
use crate::io::{read_lines, read_text};
use crate::report;

/// Seed used by every randomized command when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Parser)]
#[command(
    name = "bdanchors",
    version,
    about = "Bidirectional string anchors: sampling, indexing and similarity search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the sampled positions of a text (1-based, one per line).
    Sample(SampleArgs),
    /// Sample sizes and densities of several schemes as CSV.
    Density(DensityArgs),
    /// Build or query an on-disk anchor index.
    #[command(subcommand)]
    Index(IndexCommand),
    /// Same as `index build`.
    #[command(name = "index-build")]
    IndexBuild(IndexBuildArgs),
    /// Same as `index search`.
    #[command(name = "index-search")]
    IndexSearch(IndexSearchArgs),
    /// Top-K edit-distance search of queries against a dictionary.
    Topk(TopkArgs),
    /// Print a uniform random string.
    Gen(GenArgs),
    /// Write a clustered top-K benchmark (queries.txt, dict.txt, truth.csv).
    GenSynthetic(GenSyntheticArgs),
    /// Average number of bd-anchors of length-n strings.
    AvgCount(AvgCountArgs),
    /// F1 of top-K search on a generated benchmark, per ℓ.
    Eval(EvalArgs),
}

#[derive(Debug, Subcommand)]
enum IndexCommand {
    /// Index the bd-anchors of a text and write the index file.
    Build(IndexBuildArgs),
    /// Find every occurrence of each pattern (one per line).
    Search(IndexSearchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Bda,
    Rbda,
    Std,
    Win,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Bda => Scheme::Bda,
            SchemeArg::Rbda => Scheme::Rbda,
            SchemeArg::Std => Scheme::MinStd,
            SchemeArg::Win => Scheme::MinWin,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Lex,
    Hashed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Range reporting over both sorted orders.
    V1,
    /// One-sided search with letter verification.
    V2,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::V1 => Mode::Range,
            ModeArg::V2 => Mode::OneSided,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountModeArg {
    Exhaustive,
    #[value(alias = "mc")]
    MonteCarlo,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Args)]
struct TextArgs {
    /// Input text file.
    #[arg(long)]
    text: PathBuf,
    /// Read the text as FASTA (drop '>' header lines and line breaks).
    #[arg(long)]
    fasta: bool,
}

#[derive(Debug, Args)]
struct OrderArgs {
    /// k-mer order for minimizer schemes.
    #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
    order: OrderArg,
    /// Seed of the hashed k-mer order.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

impl OrderArgs {
    fn order(&self) -> Order {
        match self.order {
            OrderArg::Lex => Order::Lex,
            OrderArg::Hashed => Order::Hashed(self.seed),
        }
    }
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[arg(long, value_enum)]
    scheme: SchemeArg,
    /// Window length ℓ (for minimizers, ℓ = w + k - 1).
    #[arg(long, value_parser = positive)]
    ell: Option<usize>,
    /// Minimizer window count.
    #[arg(long, value_parser = positive)]
    w: Option<usize>,
    /// Minimizer k-mer length.
    #[arg(long, value_parser = positive)]
    k: Option<usize>,
    /// Reduction for rbda (default ⌈3 log ℓ / log σ⌉ over the text's letters).
    #[arg(long)]
    r: Option<usize>,
    #[command(flatten)]
    order: OrderArgs,
    #[command(flatten)]
    input: TextArgs,
    /// Print a CSV summary row instead of positions.
    #[arg(long)]
    csv: bool,
}

#[derive(Debug, Args)]
struct DensityArgs {
    #[command(flatten)]
    input: TextArgs,
    /// Window lengths, comma separated.
    #[arg(long, value_delimiter = ',', required = true, value_parser = positive)]
    ells: Vec<usize>,
    /// Schemes to report, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [SchemeArg::Bda, SchemeArg::Rbda, SchemeArg::Std, SchemeArg::Win])]
    schemes: Vec<SchemeArg>,
    /// Reduction for rbda rows (default depends on ℓ and σ).
    #[arg(long)]
    r: Option<usize>,
    /// Restrict minimizer rows to these window counts.
    #[arg(long, value_delimiter = ',', value_parser = positive)]
    ws: Option<Vec<usize>>,
    #[command(flatten)]
    order: OrderArgs,
}

#[derive(Debug, Args)]
struct IndexBuildArgs {
    #[command(flatten)]
    input: TextArgs,
    #[arg(long, value_parser = positive)]
    ell: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::V1)]
    mode: ModeArg,
    /// Index file to write.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct IndexSearchArgs {
    /// Index file written by `index build`.
    #[arg(long)]
    index: PathBuf,
    /// The indexed text (not stored in the index file).
    #[command(flatten)]
    input: TextArgs,
    /// Patterns, one per line.
    #[arg(long)]
    pattern_file: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::V1)]
    mode: ModeArg,
}

#[derive(Debug, Args)]
struct TopkArgs {
    /// Dictionary, one string per line.
    #[arg(long)]
    dict: PathBuf,
    #[arg(long, value_parser = positive)]
    ell: usize,
    /// Number of results per query.
    #[arg(long, value_parser = positive)]
    k: usize,
    /// Minimum number of hits for a string to be considered.
    #[arg(long, default_value_t = 0)]
    tau: usize,
    /// Identity-score slack; 0 ranks by identity score only.
    #[arg(long, default_value_t = 0)]
    delta: usize,
    /// Queries, one per line.
    #[arg(long)]
    queries: PathBuf,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = positive)]
    sigma: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Args)]
struct GenSyntheticArgs {
    /// JSON object with any of: num_queries, qlen, k, d, d_prime, sigma, seed.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Overrides the configuration's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory (created if missing).
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct AvgCountArgs {
    #[arg(long, value_parser = positive)]
    n: usize,
    #[arg(long, value_parser = positive)]
    ell: usize,
    #[arg(long, default_value_t = 2, value_parser = positive)]
    sigma: usize,
    #[arg(long, value_enum, default_value_t = CountModeArg::Exhaustive)]
    mode: CountModeArg,
    /// Random strings drawn in monte-carlo mode.
    #[arg(long, default_value_t = 1_000_000)]
    trials: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// Benchmark configuration, as for gen-synthetic.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Window lengths, comma separated.
    #[arg(long, value_delimiter = ',', required = true, value_parser = positive)]
    ell: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    tau: usize,
    #[arg(long, default_value_t = 0)]
    delta: usize,
}

/// A flag combination the grammar cannot express, reported like a parse
/// error.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

/// Runs one command with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = run_with(argv, &mut out, &mut std::io::stderr());
    if out.flush().is_err() {
        return 1;
    }
    code
}

/// Runs one command. Returns 0 on success, 1 on a domain or I/O error and 2
/// on a usage error; diagnostics go to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let line = format!("{e:#}").replace('\n', " ");
            let _ = writeln!(err, "error: {line}");
            if e.downcast_ref::<Usage>().is_some() {
                2
            } else {
                1
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Sample(a) => cmd_sample(a, out),
        Command::Density(a) => cmd_density(a, out),
        Command::Index(IndexCommand::Build(a)) | Command::IndexBuild(a) => cmd_index_build(a),
        Command::Index(IndexCommand::Search(a)) | Command::IndexSearch(a) => cmd_index_search(a, out),
        Command::Topk(a) => cmd_topk(a, out),
        Command::Gen(a) => cmd_gen(a, out),
        Command::GenSynthetic(a) => cmd_gen_synthetic(a),
        Command::AvgCount(a) => cmd_avg_count(a, out),
        Command::Eval(a) => cmd_eval(a, out),
    }
}

fn scheme_params(a: &SampleArgs, text: &[u8]) -> Result<SchemeParams> {
    let scheme: Scheme = a.scheme.into();
    match scheme {
        Scheme::Bda | Scheme::Rbda => {
            if a.w.is_some() || a.k.is_some() {
                return usage("--w and --k only apply to the std and win schemes");
            }
            let Some(ell) = a.ell else {
                return usage("--ell is required for bd-anchor schemes");
            };
            if scheme == Scheme::Bda {
                if a.r.is_some_and(|r| r != 0) {
                    return usage("--r only applies to the rbda scheme");
                }
                return Ok(SchemeParams::bda(ell));
            }
            Ok(SchemeParams::rbda(ell, a.r.unwrap_or_else(|| report::auto_r(text, ell))))
        }
        Scheme::MinStd | Scheme::MinWin => {
            if a.r.is_some() {
                return usage("--r only applies to the rbda scheme");
            }
            let (w, k) = match (a.ell, a.w, a.k) {
                (_, Some(w), Some(k)) => {
                    if a.ell.is_some_and(|ell| ell != w + k - 1) {
                        return usage("--ell must equal w + k - 1");
                    }
                    (w, k)
                }
                (Some(ell), Some(w), None) if w <= ell => (w, ell + 1 - w),
                (Some(ell), None, Some(k)) if k <= ell => (ell + 1 - k, k),
                _ => return usage("minimizer schemes need two of --ell, --w, --k with w + k - 1 = ℓ"),
            };
            Ok(SchemeParams::minimizers(scheme, w, k, a.order.order()))
        }
    }
}

fn cmd_sample(a: SampleArgs, out: &mut dyn Write) -> Result<()> {
    let text = read_text(&a.input.text, a.input.fasta)?;
    let params = scheme_params(&a, &text)?;
    let s = sample(&text, params)?;
    if a.csv {
        writeln!(out, "{}", report::SAMPLE_HEADER)?;
        writeln!(out, "{}", report::sample_row(&s))?;
    } else {
        for p in s.positions() {
            writeln!(out, "{p}")?;
        }
    }
    Ok(())
}

fn cmd_density(a: DensityArgs, out: &mut dyn Write) -> Result<()> {
    let text = read_text(&a.input.text, a.input.fasta)?;
    let schemes: Vec<Scheme> = a.schemes.iter().map(|&s| s.into()).collect();
    let rows = report::density_rows(&text, &a.ells, &schemes, a.r, a.ws.as_deref(), a.order.order())?;
    writeln!(out, "{}", report::SAMPLE_HEADER)?;
    for row in rows {
        writeln!(out, "{row}")?;
    }
    Ok(())
}

fn cmd_index_build(a: IndexBuildArgs) -> Result<()> {
    let text = read_text(&a.input.text, a.input.fasta)?;
    let ix = TextIndex::build(&text, a.ell, a.mode.into())?;
    let file = File::create(&a.out).with_context(|| format!("cannot create {}", a.out.display()))?;
    let mut w = BufWriter::new(file);
    write_index(&mut w, &ix)?;
    w.flush().with_context(|| format!("cannot write {}", a.out.display()))?;
    Ok(())
}

fn load_index(path: &Path, text: Vec<u8>, mode: Mode) -> Result<TextIndex> {
    let mut file = File::open(path).with_context(|| format!("cannot read {}", path.display()))?;
    read_index(&mut file, text, mode).with_context(|| format!("{}", path.display()))
}

fn cmd_index_search(a: IndexSearchArgs, out: &mut dyn Write) -> Result<()> {
    let text = read_text(&a.input.text, a.input.fasta)?;
    let ix = load_index(&a.index, text, a.mode.into())?;
    let patterns = read_lines(&a.pattern_file)?;
    if let Some((id, p)) = patterns.iter().enumerate().find(|(_, p)| p.len() < ix.ell()) {
        return Err(bdanchors_core::Error::PatternTooShort { len: p.len(), ell: ix.ell() })
            .context(format!("pattern {id}"));
    }
    writeln!(out, "{}", report::SEARCH_HEADER)?;
    for (id, p) in patterns.iter().enumerate() {
        for start in ix.search(p)? {
            writeln!(out, "{id},{start}")?;
        }
    }
    Ok(())
}

fn cmd_topk(a: TopkArgs, out: &mut dyn Write) -> Result<()> {
    let dict = read_lines(&a.dict)?;
    let queries = read_lines(&a.queries)?;
    let dix = DictionaryIndex::build(dict, a.ell).with_context(|| format!("{}", a.dict.display()))?;
    let params = QueryParams { k: a.k, tau: a.tau, delta: a.delta };
    writeln!(out, "{}", report::TOPK_HEADER)?;
    for (id, q) in queries.iter().enumerate() {
        let top = top_k_query(&dix, q, params).with_context(|| format!("query {id}"))?;
        for row in report::topk_rows(id, &top) {
            writeln!(out, "{row}")?;
        }
    }
    Ok(())
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> Result<()> {
    let s = gen_random_string(a.n, a.sigma, a.seed)?;
    out.write_all(&s)?;
    writeln!(out)?;
    Ok(())
}

fn load_config(path: Option<&Path>) -> Result<SyntheticConfig> {
    let Some(path) = path else {
        return Ok(SyntheticConfig::default());
    };
    let raw = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&raw).with_context(|| format!("{}: bad configuration", path.display()))
}

fn write_lines(path: &Path, lines: &[Vec<u8>]) -> Result<()> {
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    let mut w = BufWriter::new(file);
    for line in lines {
        w.write_all(line)?;
        w.write_all(b"\n")?;
    }
    w.flush().with_context(|| format!("cannot write {}", path.display()))
}

fn cmd_gen_synthetic(a: GenSyntheticArgs) -> Result<()> {
    let mut cfg = load_config(a.config.as_deref())?;
    if let Some(seed) = a.seed {
        cfg.seed = seed;
    }
    let data = gen_synthetic(&cfg)?;
    fs::create_dir_all(&a.out).with_context(|| format!("cannot create {}", a.out.display()))?;
    write_lines(&a.out.join("queries.txt"), &data.queries)?;
    write_lines(&a.out.join("dict.txt"), &data.dictionary)?;
    let truth: Vec<Vec<u8>> = std::iter::once(b"query_id,string_id".to_vec())
        .chain(
            data.truth.iter().enumerate().flat_map(|(q, ids)| ids.iter().map(move |s| format!("{q},{s}").into_bytes())),
        )
        .collect();
    write_lines(&a.out.join("truth.csv"), &truth)
}

fn cmd_avg_count(a: AvgCountArgs, out: &mut dyn Write) -> Result<()> {
    let mode = match a.mode {
        CountModeArg::Exhaustive => CountMode::Exhaustive,
        CountModeArg::MonteCarlo => CountMode::MonteCarlo,
    };
    let stats = avg_anchor_count(a.n, a.ell, a.sigma, mode, a.trials, a.seed)?;
    writeln!(out, "{}", report::AVG_HEADER)?;
    writeln!(out, "{}", report::avg_row(&stats))?;
    Ok(())
}

fn cmd_eval(a: EvalArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = load_config(a.config.as_deref())?;
    writeln!(out, "{}", report::EVAL_HEADER)?;
    for &ell in &a.ell {
        let f1 = report::synthetic_f1(&cfg, ell, a.tau, a.delta)?;
        writeln!(out, "{}", report::eval_row(&cfg, ell, a.tau, a.delta, &f1))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn grammar_is_consistent() {
        Cli::command().debug_assert();
    }
}
