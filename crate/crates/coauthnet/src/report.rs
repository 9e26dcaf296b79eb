//! Runs the full analysis over a parsed corpus and serializes the report
//! bundle: a JSON summary plus CSV plot tables.
//!
//! Serialization rules that keep golden files stable: floats are rounded to
//! 6 significant digits, non-finite values become null, maps keep insertion
//! order, and anything order-sensitive (warnings, histograms, top lists) is
//! emitted in a canonical sort so record order in the input cannot leak
//! into the report.

use serde_json::{json, Value};

use crate::bigraph::{
    author_degrees, authors_per_paper_stats, build_pag, paper_degrees, papers_per_author_stats,
    top_authors_by_papers, BipartiteGraph, DegreeStats,
};
use crate::coauthor::{
    build_cag, coauthor_degrees, coauthors_per_author_stats, components, top_authors_by_coauthors,
    CoauthorGraph, Component,
};
use crate::corpus::{corpus_summary, AuthorKey, Corpus, YearSummary};
use crate::mixing::{
    assortativity, mixing_plot_data, productivity_collaboration_correlation, AttributeSelector,
    MixingResult,
};
use crate::powerfit::{
    fit_power_law, frequency_distribution, lotka_comparison, FrequencyDistribution, PowerLawFit,
};
use crate::trend::{fit_trend, TrendFit};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalysisOptions {
    /// Length of the most-productive / most-connected author lists.
    pub top_k: usize,
    /// Significance level for the power-law coefficient tests.
    pub alpha: f64,
    /// Years to extrapolate past the last observed one.
    pub horizon: u32,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            top_k: 5,
            alpha: 0.01,
            horizon: 5,
        }
    }
}

/// Everything the report bundle is built from. Optional fields are None
/// when the corpus is too small or too uniform for that statistic; each
/// such case is recorded in `degenerate`.
pub struct Analysis {
    pub options: AnalysisOptions,
    pub pag: BipartiteGraph,
    pub cag: CoauthorGraph,
    pub components: Vec<Component>,
    pub per_year: Vec<YearSummary>,
    pub authors_per_paper: DegreeStats,
    pub papers_per_author: DegreeStats,
    pub coauthors_per_author: DegreeStats,
    pub dist_authors_per_paper: FrequencyDistribution,
    pub dist_papers_per_author: FrequencyDistribution,
    pub dist_coauthors_per_author: FrequencyDistribution,
    pub fit_authors_per_paper: Option<PowerLawFit>,
    pub fit_papers_per_author: Option<PowerLawFit>,
    pub fit_coauthors_per_author: Option<PowerLawFit>,
    pub productivity_collaboration_r: Option<f64>,
    pub mixing_papers: Option<MixingResult>,
    pub mixing_coauthors: Option<MixingResult>,
    pub trend_papers: Option<TrendFit>,
    pub trend_authors: Option<TrendFit>,
    pub top_by_papers: Vec<(AuthorKey, usize)>,
    pub top_by_coauthors: Vec<(AuthorKey, usize)>,
    /// Human-readable reasons for every statistic that could not be
    /// computed. Empty means the full report is present.
    pub degenerate: Vec<String>,
}

impl Analysis {
    pub fn is_degenerate(&self) -> bool {
        !self.degenerate.is_empty()
    }
}

pub fn analyze(corpus: &Corpus, options: &AnalysisOptions) -> Analysis {
    let pag = build_pag(corpus);
    let cag = build_cag(&pag);
    let comps = components(&cag);
    let per_year = corpus_summary(corpus);

    let paper_deg = paper_degrees(&pag);
    let author_deg = author_degrees(&pag);
    let coauth_deg = coauthor_degrees(&cag);

    let dist_authors_per_paper = frequency_distribution(&paper_deg, false);
    let dist_papers_per_author = frequency_distribution(&author_deg, false);
    let dist_coauthors_per_author = frequency_distribution(&coauth_deg, true);

    let mut degenerate = Vec::new();

    let mut fit = |label: &str, fd: &FrequencyDistribution| match fit_power_law(fd, options.alpha)
    {
        Ok(f) => Some(f),
        Err(e) => {
            degenerate.push(format!("{label} fit: {e}"));
            None
        }
    };
    let fit_authors_per_paper = fit("authors-per-paper", &dist_authors_per_paper);
    let fit_papers_per_author = fit("papers-per-author", &dist_papers_per_author);
    let fit_coauthors_per_author = fit("coauthors-per-author", &dist_coauthors_per_author);

    let productivity_collaboration_r = match productivity_collaboration_correlation(&cag) {
        Ok(r) => Some(r),
        Err(e) => {
            degenerate.push(format!("productivity-collaboration correlation: {e}"));
            None
        }
    };
    let mut mix = |attr: AttributeSelector| match assortativity(&cag, attr) {
        Ok(m) => Some(m),
        Err(e) => {
            degenerate.push(format!("assortativity ({}): {e}", attr.name()));
            None
        }
    };
    let mixing_papers = mix(AttributeSelector::Papers);
    let mixing_coauthors = mix(AttributeSelector::Coauthors);

    // Trend runs on observed years only; materialized gap years carry no
    // observation.
    let observed: Vec<&YearSummary> = per_year.iter().filter(|y| y.papers > 0).collect();
    let paper_series: Vec<(i32, u64)> = observed
        .iter()
        .map(|y| (y.year, y.cumulative_papers))
        .collect();
    let author_series: Vec<(i32, u64)> = observed
        .iter()
        .map(|y| (y.year, y.cumulative_authors))
        .collect();
    let mut trend = |label: &str, series: &[(i32, u64)]| match fit_trend(series, options.horizon)
    {
        Ok(t) => Some(t),
        Err(e) => {
            degenerate.push(format!("{label} trend: {e}"));
            None
        }
    };
    let trend_papers = trend("cumulative-papers", &paper_series);
    let trend_authors = trend("cumulative-authors", &author_series);

    Analysis {
        options: *options,
        top_by_papers: top_authors_by_papers(&pag, options.top_k),
        top_by_coauthors: top_authors_by_coauthors(&cag, options.top_k),
        authors_per_paper: authors_per_paper_stats(&pag),
        papers_per_author: papers_per_author_stats(&pag),
        coauthors_per_author: coauthors_per_author_stats(&cag),
        pag,
        cag,
        components: comps,
        per_year,
        dist_authors_per_paper,
        dist_papers_per_author,
        dist_coauthors_per_author,
        fit_authors_per_paper,
        fit_papers_per_author,
        fit_coauthors_per_author,
        productivity_collaboration_r,
        mixing_papers,
        mixing_coauthors,
        trend_papers,
        trend_authors,
        degenerate,
    }
}

/// Rounds to 6 significant digits through a decimal string so the value is
/// identical on every platform; non-finite maps to null.
fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.5e}").parse().expect("decimal float reparses");
    json!(rounded)
}

fn stats_json(s: &DegreeStats) -> Value {
    json!({"min": s.min, "avg": num(s.avg), "max": s.max})
}

fn fit_json(fit: &PowerLawFit) -> Value {
    json!({
        "c": num(fit.c),
        "phi": num(fit.phi),
        "r_squared": num(fit.r_squared),
        "se_log_c": num(fit.se_log_c),
        "se_phi": num(fit.se_phi),
        "t_log_c": num(fit.t_log_c),
        "t_phi": num(fit.t_phi),
        "p_log_c": num(fit.p_log_c),
        "p_phi": num(fit.p_phi),
        "n_points": fit.n_points,
        "alpha": num(fit.alpha),
        "significant_log_c": fit.significant_log_c(),
        "significant_phi": fit.significant_phi(),
    })
}

fn trend_json(fit: &TrendFit) -> Value {
    json!({
        "slope": num(fit.slope),
        "intercept": num(fit.intercept),
        "r_squared": num(fit.r_squared),
        "extrapolation": fit
            .extrapolation
            .iter()
            .map(|&(year, value)| json!({"year": year, "predicted": num(value)}))
            .collect::<Vec<_>>(),
    })
}

fn opt<T>(value: &Option<T>, f: impl Fn(&T) -> Value) -> Value {
    value.as_ref().map(f).unwrap_or(Value::Null)
}

/// The machine-readable report. Identical corpus content yields identical
/// bytes regardless of record order in the input file.
pub fn summary_json(corpus: &Corpus, analysis: &Analysis) -> String {
    let first_year = analysis.per_year.first().map(|y| y.year);
    let last_year = analysis.per_year.last().map(|y| y.year);
    let mut warnings: Vec<&String> = corpus.warnings().iter().collect();
    warnings.sort();

    let mut size_census: Vec<(usize, usize)> = Vec::new();
    {
        let mut sizes: Vec<usize> = analysis.components.iter().map(|c| c.size()).collect();
        sizes.sort_unstable();
        for s in sizes {
            match size_census.last_mut() {
                Some(last) if last.0 == s => last.1 += 1,
                _ => size_census.push((s, 1)),
            }
        }
    }
    let largest = size_census.last().map(|&(s, _)| s).unwrap_or(0);
    let singletons = size_census
        .iter()
        .find(|&&(s, _)| s == 1)
        .map(|&(_, c)| c)
        .unwrap_or(0);

    let doc = json!({
        "corpus": {
            "papers": corpus.paper_count(),
            "authors": corpus.author_count(),
            "raw_author_mentions": corpus.raw_name_count(),
            "incidences": analysis.pag.edge_count(),
            "first_year": first_year,
            "last_year": last_year,
            "warnings": warnings,
        },
        "degrees": {
            "authors_per_paper": stats_json(&analysis.authors_per_paper),
            "papers_per_author": stats_json(&analysis.papers_per_author),
            "coauthors_per_author": stats_json(&analysis.coauthors_per_author),
        },
        "coauthorship": {
            "edges": analysis.cag.edge_count(),
            "directed_edges": 2 * analysis.cag.edge_count(),
            "components": {
                "count": analysis.components.len(),
                "largest": largest,
                "singletons": singletons,
                "sizes": size_census,
            },
        },
        "fits": {
            "authors_per_paper": opt(&analysis.fit_authors_per_paper, fit_json),
            "papers_per_author": opt(&analysis.fit_papers_per_author, |f| {
                let mut v = fit_json(f);
                v.as_object_mut()
                    .expect("fit serializes to an object")
                    .insert("lotka_deviation".into(), num(lotka_comparison(f)));
                v
            }),
            "coauthors_per_author": opt(&analysis.fit_coauthors_per_author, fit_json),
        },
        "mixing": {
            "productivity_collaboration_r": opt(&analysis.productivity_collaboration_r, |r| num(*r)),
            "papers": opt(&analysis.mixing_papers, mixing_json),
            "coauthors": opt(&analysis.mixing_coauthors, mixing_json),
        },
        "trend": {
            "papers": opt(&analysis.trend_papers, trend_json),
            "authors": opt(&analysis.trend_authors, trend_json),
        },
        "top_authors": {
            "by_papers": analysis
                .top_by_papers
                .iter()
                .map(|(key, n)| json!({"author": key.display(), "papers": n}))
                .collect::<Vec<_>>(),
            "by_coauthors": analysis
                .top_by_coauthors
                .iter()
                .map(|(key, n)| json!({"author": key.display(), "coauthors": n}))
                .collect::<Vec<_>>(),
        },
        "per_year": analysis.per_year,
        "degenerate": analysis.degenerate,
    });
    let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
    out.push('\n');
    out
}

fn mixing_json(m: &MixingResult) -> Value {
    json!({"r": num(m.r), "directed_edges": m.n_directed_edges})
}

fn csv_into_string(writer: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(writer.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}

fn csv_float(x: f64) -> String {
    match num(x) {
        Value::Null => String::new(),
        v => v.to_string(),
    }
}

/// Degree histogram with the fitted curve sampled at each observed degree.
/// The fitted column is empty when no fit exists (and always at degree 0,
/// which the power law cannot model).
pub fn distribution_csv(fd: &FrequencyDistribution, fit: Option<&PowerLawFit>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["degree", "frequency", "fitted_frequency"])
        .expect("csv header");
    for &(degree, freq) in fd.points() {
        let fitted = match fit {
            Some(f) if degree > 0 => csv_float(f.fitted(degree as f64)),
            _ => String::new(),
        };
        w.write_record([degree.to_string(), freq.to_string(), fitted])
            .expect("csv row");
    }
    csv_into_string(w)
}

/// Directed endpoint-attribute pairs, aggregated. Header only when the
/// mixing statistic is undefined.
pub fn mixing_csv(result: Option<&MixingResult>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["tau_start", "tau_end", "count"])
        .expect("csv header");
    if let Some(res) = result {
        for (start, end, count) in mixing_plot_data(res) {
            w.write_record([csv_float(start), csv_float(end), count.to_string()])
                .expect("csv row");
        }
    }
    csv_into_string(w)
}

/// Observed cumulative series with fitted values, then the extrapolated
/// years with empty observation columns.
pub fn trend_csv(analysis: &Analysis) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "year",
        "observed_cumulative_papers",
        "observed_cumulative_authors",
        "fitted_papers",
        "fitted_authors",
        "is_extrapolated",
    ])
    .expect("csv header");
    let fitted = |t: &Option<TrendFit>, year: i32| {
        t.as_ref()
            .map(|f| csv_float(f.predict(year)))
            .unwrap_or_default()
    };
    for row in analysis.per_year.iter().filter(|y| y.papers > 0) {
        w.write_record([
            row.year.to_string(),
            row.cumulative_papers.to_string(),
            row.cumulative_authors.to_string(),
            fitted(&analysis.trend_papers, row.year),
            fitted(&analysis.trend_authors, row.year),
            "false".to_string(),
        ])
        .expect("csv row");
    }
    let mut future: Vec<i32> = analysis
        .trend_papers
        .iter()
        .chain(analysis.trend_authors.iter())
        .flat_map(|t| t.extrapolation.iter().map(|&(y, _)| y))
        .collect();
    future.sort_unstable();
    future.dedup();
    for year in future {
        w.write_record([
            year.to_string(),
            String::new(),
            String::new(),
            fitted(&analysis.trend_papers, year),
            fitted(&analysis.trend_authors, year),
            "true".to_string(),
        ])
        .expect("csv row");
    }
    csv_into_string(w)
}
