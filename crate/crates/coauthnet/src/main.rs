//! Command-line front end: parse a corpus, run the analysis pipeline, and
//! write the report bundle; or generate a synthetic corpus for testing.
//!
//! Exit codes: 0 success, 1 unusable input (parse/IO/bad parameters),
//! 2 analysis completed but some statistics were degenerate (whatever was
//! computable is still written).

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use coauthnet::corpus::{Corpus, CorpusFormat};
use coauthnet::export::{cag_dot, cag_graphml, pag_dot, pag_graphml};
use coauthnet::report::{
    analyze, distribution_csv, mixing_csv, summary_json, trend_csv, AnalysisOptions,
};
use coauthnet::synth::{generate, SynthParams};

#[derive(Parser)]
#[command(
    name = "coauthnet",
    version,
    about = "Co-authorship network statistics from bibliographic records"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a corpus file and write a report bundle.
    Analyze(AnalyzeArgs),
    /// Write a seeded synthetic corpus as JSONL on standard output.
    Synth(SynthArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExportArg {
    Graphml,
    Dot,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Corpus file (one record per paper).
    path: PathBuf,
    /// Input encoding.
    #[arg(long, value_enum, default_value_t = FormatArg::Jsonl)]
    format: FormatArg,
    /// Output directory for the report bundle.
    #[arg(long, default_value = "report")]
    out: PathBuf,
    /// Number of entries in the most-productive / most-connected lists.
    #[arg(long = "top-k", default_value_t = 5)]
    top_k: usize,
    /// Significance level for coefficient tests.
    #[arg(long, default_value_t = 0.01)]
    alpha: f64,
    /// Years to extrapolate beyond the last observed year.
    #[arg(long, default_value_t = 5)]
    horizon: u32,
    /// Graph formats to write (comma separated).
    #[arg(long, value_enum, value_delimiter = ',', default_value = "graphml,dot")]
    export: Vec<ExportArg>,
}

#[derive(Args)]
struct SynthArgs {
    /// Generator seed; same seed, same bytes.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Number of papers to generate.
    #[arg(long, default_value_t = 100)]
    papers: usize,
    /// Target papers-per-author power-law exponent (must be below -1).
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    phi: f64,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Analyze(args) => run_analyze(args),
        Command::Synth(args) => run_synth(args),
    }
}

fn run_analyze(args: AnalyzeArgs) -> anyhow::Result<ExitCode> {
    anyhow::ensure!(
        args.alpha > 0.0 && args.alpha < 1.0,
        "--alpha must lie strictly between 0 and 1"
    );
    let format = match args.format {
        FormatArg::Jsonl => CorpusFormat::Jsonl,
        FormatArg::Csv => CorpusFormat::Csv,
    };
    let corpus = Corpus::from_path(&args.path, format)
        .with_context(|| format!("reading corpus {}", args.path.display()))?;
    for warning in corpus.warnings() {
        eprintln!("warning: {warning}");
    }

    let options = AnalysisOptions {
        top_k: args.top_k,
        alpha: args.alpha,
        horizon: args.horizon,
    };
    let analysis = analyze(&corpus, &options);

    fs::create_dir_all(&args.out)
        .with_context(|| format!("creating output directory {}", args.out.display()))?;
    let write = |name: &str, contents: &str| {
        let path = args.out.join(name);
        fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))
    };
    write("summary.json", &summary_json(&corpus, &analysis))?;
    write(
        "authors_per_paper.csv",
        &distribution_csv(
            &analysis.dist_authors_per_paper,
            analysis.fit_authors_per_paper.as_ref(),
        ),
    )?;
    write(
        "papers_per_author.csv",
        &distribution_csv(
            &analysis.dist_papers_per_author,
            analysis.fit_papers_per_author.as_ref(),
        ),
    )?;
    write(
        "coauthors_per_author.csv",
        &distribution_csv(
            &analysis.dist_coauthors_per_author,
            analysis.fit_coauthors_per_author.as_ref(),
        ),
    )?;
    write("mixing_papers.csv", &mixing_csv(analysis.mixing_papers.as_ref()))?;
    write(
        "mixing_coauthors.csv",
        &mixing_csv(analysis.mixing_coauthors.as_ref()),
    )?;
    write("trend.csv", &trend_csv(&analysis))?;
    for export in dedup(&args.export) {
        match export {
            ExportArg::Graphml => {
                write("pag.graphml", &pag_graphml(&analysis.pag))?;
                write("cag.graphml", &cag_graphml(&analysis.cag))?;
            }
            ExportArg::Dot => {
                write("pag.dot", &pag_dot(&analysis.pag))?;
                write("cag.dot", &cag_dot(&analysis.cag))?;
            }
        }
    }

    if analysis.is_degenerate() {
        for reason in &analysis.degenerate {
            eprintln!("degenerate: {reason}");
        }
        Ok(ExitCode::from(2))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn run_synth(args: SynthArgs) -> anyhow::Result<ExitCode> {
    let corpus = generate(&SynthParams {
        seed: args.seed,
        papers: args.papers,
        phi: args.phi,
    })?;
    std::io::stdout()
        .write_all(corpus.to_jsonl().as_bytes())
        .context("writing corpus to stdout")?;
    Ok(ExitCode::SUCCESS)
}

fn dedup(exports: &[ExportArg]) -> Vec<ExportArg> {
    let mut seen = Vec::new();
    for &e in exports {
        if !seen.contains(&e) {
            seen.push(e);
        }
    }
    seen
}
