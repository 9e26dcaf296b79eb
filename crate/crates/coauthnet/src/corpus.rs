//! Corpus ingestion: author-name normalization and JSONL/CSV parsing into
//! an indexed paper collection.
//!
//! Raw author names are printed inconsistently across records ("Juan dela
//! Cruz", "Dela Cruz, Juan", "J. dela Cruz"), so identity is resolved to a
//! surname-plus-initials key. The distinct-author index is an ordered map,
//! keeping every lookup during parsing at O(log M).

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

/// An author name exactly as printed in a source record.
pub type RawAuthorName = String;

/// Normalized author identity: folded surname plus ordered given-name
/// initials. Two raw names collapse to the same author exactly when their
/// keys are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AuthorKey {
    /// Case-folded surname, diacritics stripped, internal spaces removed.
    pub surname: String,
    /// First letter of each given-name token, in order, no separators.
    /// Empty when the raw name had no given-name part.
    pub initials: String,
}

impl AuthorKey {
    pub fn new(surname: impl Into<String>, initials: impl Into<String>) -> Self {
        AuthorKey {
            surname: surname.into(),
            initials: initials.into(),
        }
    }

    /// Canonical textual rendering. `normalize_name` maps it back to the
    /// same key, which is what makes corpus serialization round-trip.
    pub fn display(&self) -> String {
        if self.initials.is_empty() {
            self.surname.clone()
        } else {
            let spaced: Vec<String> = self.initials.chars().map(|c| c.to_string()).collect();
            format!("{}, {}", self.surname, spaced.join(" "))
        }
    }
}

impl fmt::Display for AuthorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NameError {
    #[error("malformed author name {0:?}: no surname token")]
    MalformedName(String),
}

/// Surname particles that are pulled into the surname when they precede it.
const PARTICLES: [&str; 5] = ["de", "del", "dela", "van", "von"];

/// Generational suffixes stripped from the surname token set.
const SUFFIXES: [&str; 5] = ["jr", "sr", "ii", "iii", "iv"];

pub(crate) struct NormalizedName {
    pub key: AuthorKey,
    pub suffix_stripped: bool,
}

/// Unicode canonical decomposition with combining marks dropped, then
/// lowercased. "Saldaña" and "Saldana" fold to the same bytes.
fn fold(raw: &str) -> String {
    raw.nfd()
        .filter(|c| !is_combining_mark(*c))
        .collect::<String>()
        .to_lowercase()
}

fn is_suffix(token: &str) -> bool {
    SUFFIXES.contains(&token.trim_end_matches('.'))
}

fn strip_punct(token: &str) -> &str {
    token.trim_matches(|c: char| !c.is_alphanumeric())
}

fn has_letter(s: &str) -> bool {
    s.chars().any(|c| c.is_alphabetic())
}

fn initials_of(tokens: &[&str]) -> String {
    tokens
        .iter()
        .filter_map(|t| t.chars().find(|c| c.is_alphabetic()))
        .collect()
}

/// Normalizes a printed author name to its [`AuthorKey`].
///
/// A single comma reads as "Surname(s), Given ..."; without a comma the
/// last token is the surname and any immediately preceding particles are
/// merged into it ("Juan de la Cruz" -> surname "delacruz"). Generational
/// suffixes are removed from the surname side.
pub fn normalize_name(raw: &str) -> Result<AuthorKey, NameError> {
    normalize_name_full(raw).map(|n| n.key)
}

pub(crate) fn normalize_name_full(raw: &str) -> Result<NormalizedName, NameError> {
    let folded = fold(raw);
    let mut suffix_stripped = false;

    let (surname_tokens, given_tokens): (Vec<&str>, Vec<&str>) = match folded.find(',') {
        Some(pos) => {
            let (s, g) = folded.split_at(pos);
            let g = g[1..].replace(',', " ");
            let surname: Vec<&str> = s
                .split_whitespace()
                .filter(|t| {
                    let keep = !is_suffix(t);
                    suffix_stripped |= !keep;
                    keep
                })
                .collect();
            // The given side outlives this block via re-tokenizing below.
            let given: Vec<String> = g.split_whitespace().map(str::to_string).collect();
            return finish(raw, surname, given, suffix_stripped);
        }
        None => {
            let mut tokens: Vec<&str> = folded.split_whitespace().collect();
            while tokens.last().is_some_and(|t| is_suffix(t)) {
                tokens.pop();
                suffix_stripped = true;
            }
            if tokens.is_empty() {
                return Err(NameError::MalformedName(raw.to_string()));
            }
            let mut start = tokens.len() - 1;
            loop {
                if start == 0 {
                    break;
                }
                let prev = tokens[start - 1];
                if PARTICLES.contains(&prev) {
                    start -= 1;
                } else if prev == "la" && start >= 2 && tokens[start - 2] == "de" {
                    start -= 2;
                } else {
                    break;
                }
            }
            (tokens[start..].to_vec(), tokens[..start].to_vec())
        }
    };

    let given: Vec<String> = given_tokens.iter().map(|t| t.to_string()).collect();
    finish(raw, surname_tokens, given, suffix_stripped)
}

fn finish(
    raw: &str,
    surname_tokens: Vec<&str>,
    given_tokens: Vec<String>,
    suffix_stripped: bool,
) -> Result<NormalizedName, NameError> {
    let surname: String = surname_tokens.iter().map(|t| strip_punct(t)).collect();
    if !has_letter(&surname) {
        return Err(NameError::MalformedName(raw.to_string()));
    }
    let refs: Vec<&str> = given_tokens.iter().map(String::as_str).collect();
    Ok(NormalizedName {
        key: AuthorKey {
            surname,
            initials: initials_of(&refs),
        },
        suffix_stripped,
    })
}

/// One bibliographic record with normalized, deduplicated authors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaperRecord {
    pub id: String,
    pub year: i32,
    pub authors: Vec<AuthorKey>,
}

pub const YEAR_MIN: i32 = 1900;
pub const YEAR_MAX: i32 = 2100;

/// Input format of a corpus byte stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusFormat {
    Jsonl,
    Csv,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("duplicate paper id {0:?}")]
    DuplicatePaperId(String),
    #[error("corpus contains no records")]
    EmptyCorpus,
    #[error("read error: {0}")]
    Io(#[from] std::io::Error),
}

/// A parsed corpus: N papers, M distinct authors, L raw author entries.
/// M <= L always; the gap is exactly the name variants and repeat
/// appearances the normalization collapsed.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Corpus {
    papers: Vec<PaperRecord>,
    authors: Vec<AuthorKey>,
    author_index: BTreeMap<AuthorKey, usize>,
    raw_name_count: usize,
    warnings: Vec<String>,
}

impl Corpus {
    pub fn papers(&self) -> &[PaperRecord] {
        &self.papers
    }

    /// Distinct authors in first-appearance order.
    pub fn authors(&self) -> &[AuthorKey] {
        &self.authors
    }

    pub fn paper_count(&self) -> usize {
        self.papers.len()
    }

    pub fn author_count(&self) -> usize {
        self.authors.len()
    }

    /// Total raw author entries across all records, before deduplication.
    pub fn raw_name_count(&self) -> usize {
        self.raw_name_count
    }

    /// Sum of per-paper author-list lengths; equals the PAG edge count.
    pub fn total_author_slots(&self) -> usize {
        self.papers.iter().map(|p| p.authors.len()).sum()
    }

    pub fn author_index(&self, key: &AuthorKey) -> Option<usize> {
        self.author_index.get(key).copied()
    }

    /// Non-fatal notes collected during parsing (stripped suffixes,
    /// collapsed duplicate authors).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Builds a corpus from already-normalized records, enforcing the same
    /// invariants as parsing. Intended for generators and tests.
    pub fn from_records(records: Vec<PaperRecord>) -> Result<Corpus, ParseError> {
        let mut corpus = Corpus::default();
        let mut seen_ids = BTreeMap::new();
        for (ordinal, rec) in records.into_iter().enumerate() {
            let line = ordinal + 1;
            if rec.authors.is_empty() {
                return Err(ParseError::Malformed {
                    line,
                    reason: format!("paper {:?} has no authors", rec.id),
                });
            }
            if !(YEAR_MIN..=YEAR_MAX).contains(&rec.year) {
                return Err(ParseError::Malformed {
                    line,
                    reason: format!("year {} out of range [{YEAR_MIN}, {YEAR_MAX}]", rec.year),
                });
            }
            if seen_ids.insert(rec.id.clone(), ()).is_some() {
                return Err(ParseError::DuplicatePaperId(rec.id));
            }
            let mut distinct = Vec::with_capacity(rec.authors.len());
            for key in rec.authors {
                if distinct.contains(&key) {
                    return Err(ParseError::Malformed {
                        line,
                        reason: format!("duplicate author {key} in paper {:?}", rec.id),
                    });
                }
                corpus.intern(&key);
                distinct.push(key);
            }
            corpus.raw_name_count += distinct.len();
            corpus.papers.push(PaperRecord {
                id: rec.id,
                year: rec.year,
                authors: distinct,
            });
        }
        if corpus.papers.is_empty() {
            return Err(ParseError::EmptyCorpus);
        }
        Ok(corpus)
    }

    fn intern(&mut self, key: &AuthorKey) -> usize {
        if let Some(&idx) = self.author_index.get(key) {
            return idx;
        }
        let idx = self.authors.len();
        self.authors.push(key.clone());
        self.author_index.insert(key.clone(), idx);
        idx
    }

    fn push_raw(
        &mut self,
        line: usize,
        id: String,
        year: i64,
        raw_authors: &[String],
        seen_ids: &mut BTreeMap<String, ()>,
    ) -> Result<(), ParseError> {
        if raw_authors.is_empty() {
            return Err(ParseError::Malformed {
                line,
                reason: format!("paper {id:?} has no authors"),
            });
        }
        if year < YEAR_MIN as i64 || year > YEAR_MAX as i64 {
            return Err(ParseError::Malformed {
                line,
                reason: format!("year {year} out of range [{YEAR_MIN}, {YEAR_MAX}]"),
            });
        }
        if seen_ids.insert(id.clone(), ()).is_some() {
            return Err(ParseError::DuplicatePaperId(id));
        }
        let mut authors: Vec<AuthorKey> = Vec::with_capacity(raw_authors.len());
        for raw in raw_authors {
            let normalized = normalize_name_full(raw).map_err(|e| ParseError::Malformed {
                line,
                reason: e.to_string(),
            })?;
            if normalized.suffix_stripped {
                self.warnings
                    .push(format!("line {line}: suffix stripped from {raw:?}"));
            }
            self.raw_name_count += 1;
            if authors.contains(&normalized.key) {
                self.warnings.push(format!(
                    "line {line}: {raw:?} duplicates author {} in paper {id:?}",
                    normalized.key
                ));
                continue;
            }
            self.intern(&normalized.key);
            authors.push(normalized.key);
        }
        self.papers.push(PaperRecord {
            id,
            year: year as i32,
            authors,
        });
        Ok(())
    }

    /// Canonical JSONL serialization: one record per line, authors rendered
    /// through [`AuthorKey::display`]. Parsing the output reproduces the
    /// corpus exactly.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for p in &self.papers {
            let line = JsonRecordOut {
                id: &p.id,
                year: p.year,
                authors: p.authors.iter().map(AuthorKey::display).collect(),
            };
            out.push_str(&serde_json::to_string(&line).expect("record serializes"));
            out.push('\n');
        }
        out
    }

    pub fn from_path(path: &Path, format: CorpusFormat) -> Result<Corpus, ParseError> {
        parse_corpus(File::open(path)?, format)
    }
}

#[derive(Serialize)]
struct JsonRecordOut<'a> {
    id: &'a str,
    year: i32,
    authors: Vec<String>,
}

#[derive(Deserialize)]
struct JsonRecordIn {
    id: String,
    year: i64,
    #[serde(default)]
    #[allow(dead_code)]
    title: Option<String>,
    authors: Vec<String>,
}

/// Parses a corpus byte stream. Rejects the whole stream on the first
/// malformed record: silently skipping rows would change every statistic
/// downstream.
pub fn parse_corpus(reader: impl Read, format: CorpusFormat) -> Result<Corpus, ParseError> {
    let mut corpus = Corpus::default();
    let mut seen_ids = BTreeMap::new();
    match format {
        CorpusFormat::Jsonl => {
            for (idx, line) in BufReader::new(reader).lines().enumerate() {
                let line_no = idx + 1;
                let text = line?;
                if text.trim().is_empty() {
                    continue;
                }
                let rec: JsonRecordIn =
                    serde_json::from_str(&text).map_err(|e| ParseError::Malformed {
                        line: line_no,
                        reason: e.to_string(),
                    })?;
                corpus.push_raw(line_no, rec.id, rec.year, &rec.authors, &mut seen_ids)?;
            }
        }
        CorpusFormat::Csv => parse_csv(reader, &mut corpus, &mut seen_ids)?,
    }
    if corpus.papers.is_empty() {
        return Err(ParseError::EmptyCorpus);
    }
    Ok(corpus)
}

fn parse_csv(
    reader: impl Read,
    corpus: &mut Corpus,
    seen_ids: &mut BTreeMap<String, ()>,
) -> Result<(), ParseError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);
    {
        let headers = rdr.headers().map_err(|e| ParseError::Malformed {
            line: 1,
            reason: e.to_string(),
        })?;
        let got: Vec<String> = headers.iter().map(|h| h.trim().to_lowercase()).collect();
        if got != ["id", "year", "authors"] {
            return Err(ParseError::Malformed {
                line: 1,
                reason: format!("expected header id,year,authors, got {}", got.join(",")),
            });
        }
    }
    for result in rdr.records() {
        let record = result.map_err(|e| {
            let line = e
                .position()
                .map(|p| p.line() as usize)
                .unwrap_or_default();
            ParseError::Malformed {
                line,
                reason: e.to_string(),
            }
        })?;
        let line = record
            .position()
            .map(|p| p.line() as usize)
            .unwrap_or_default();
        let id = record.get(0).unwrap_or_default().to_string();
        let year_field = record.get(1).unwrap_or_default().trim();
        let year: i64 = year_field.parse().map_err(|_| ParseError::Malformed {
            line,
            reason: format!("year {year_field:?} is not an integer"),
        })?;
        let authors: Vec<String> = record
            .get(2)
            .unwrap_or_default()
            .split(';')
            .map(|a| a.trim().to_string())
            .filter(|a| !a.is_empty())
            .collect();
        corpus.push_raw(line, id, year, &authors, seen_ids)?;
    }
    Ok(())
}

/// Per-year activity, one row per calendar year from the first observed
/// year to the last. Years with no papers are materialized with zero
/// counts so the cumulative series has a contiguous axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct YearSummary {
    pub year: i32,
    pub papers: u64,
    pub new_authors: u64,
    pub cumulative_papers: u64,
    pub cumulative_authors: u64,
}

/// An author is new in the first year any of their papers appeared.
pub fn corpus_summary(corpus: &Corpus) -> Vec<YearSummary> {
    let Some(min_year) = corpus.papers.iter().map(|p| p.year).min() else {
        return Vec::new();
    };
    let max_year = corpus.papers.iter().map(|p| p.year).max().unwrap();

    let mut first_seen: BTreeMap<&AuthorKey, i32> = BTreeMap::new();
    for paper in &corpus.papers {
        for author in &paper.authors {
            first_seen
                .entry(author)
                .and_modify(|y| *y = (*y).min(paper.year))
                .or_insert(paper.year);
        }
    }

    let span = (max_year - min_year) as usize + 1;
    let mut papers_per_year = vec![0u64; span];
    for paper in &corpus.papers {
        papers_per_year[(paper.year - min_year) as usize] += 1;
    }
    let mut new_per_year = vec![0u64; span];
    for (_, year) in first_seen {
        new_per_year[(year - min_year) as usize] += 1;
    }

    let mut rows = Vec::with_capacity(span);
    let (mut cum_papers, mut cum_authors) = (0u64, 0u64);
    for offset in 0..span {
        cum_papers += papers_per_year[offset];
        cum_authors += new_per_year[offset];
        rows.push(YearSummary {
            year: min_year + offset as i32,
            papers: papers_per_year[offset],
            new_authors: new_per_year[offset],
            cumulative_papers: cum_papers,
            cumulative_authors: cum_authors,
        });
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(surname: &str, initials: &str) -> AuthorKey {
        AuthorKey::new(surname, initials)
    }

    #[test]
    fn name_variants_collapse_to_one_key() {
        let expect = key("delacruz", "j");
        for raw in ["Juan dela Cruz", "Dela Cruz, Juan", "J. dela Cruz"] {
            assert_eq!(normalize_name(raw).unwrap(), expect, "raw: {raw}");
        }
    }

    #[test]
    fn single_token_name_has_empty_initials() {
        assert_eq!(normalize_name("X").unwrap(), key("x", ""));
    }

    #[test]
    fn two_token_particle_merges() {
        assert_eq!(
            normalize_name("Maria Elena de la Cruz").unwrap(),
            key("delacruz", "me")
        );
        assert_eq!(
            normalize_name("de la Cruz, Maria Elena").unwrap(),
            key("delacruz", "me")
        );
    }

    #[test]
    fn diacritics_fold_away() {
        assert_eq!(
            normalize_name("Saldaña, José").unwrap(),
            normalize_name("Jose Saldana").unwrap()
        );
    }

    #[test]
    fn case_is_folded() {
        assert_eq!(
            normalize_name("DELA CRUZ, JUAN").unwrap(),
            key("delacruz", "j")
        );
    }

    #[test]
    fn suffix_is_stripped_and_flagged() {
        let n = normalize_name_full("Juan Cruz Jr.").unwrap();
        assert_eq!(n.key, key("cruz", "j"));
        assert!(n.suffix_stripped);

        let n = normalize_name_full("Cruz III, Juan").unwrap();
        assert_eq!(n.key, key("cruz", "j"));
        assert!(n.suffix_stripped);

        let plain = normalize_name_full("Juan Cruz").unwrap();
        assert!(!plain.suffix_stripped);
    }

    #[test]
    fn hyphenated_given_token_is_one_initial() {
        assert_eq!(
            normalize_name("Jean-Paul Cruz").unwrap(),
            key("cruz", "j")
        );
    }

    #[test]
    fn punctuation_only_name_is_malformed() {
        for raw in ["...", "  ", ", ", "Jr."] {
            assert!(
                matches!(normalize_name(raw), Err(NameError::MalformedName(_))),
                "raw: {raw:?}"
            );
        }
    }

    #[test]
    fn rendering_is_idempotent_under_normalization() {
        for raw in ["Juan dela Cruz", "X", "Maria Elena de la Cruz", "P. K. Wong"] {
            let k = normalize_name(raw).unwrap();
            assert_eq!(normalize_name(&k.display()).unwrap(), k, "raw: {raw}");
        }
    }

    const TWO_PAPER_JSONL: &str = concat!(
        "{\"id\":\"p1\",\"year\":2000,\"title\":\"t\",\"authors\":[\"A One\",\"B Two\"]}\n",
        "{\"id\":\"p2\",\"year\":2001,\"authors\":[\"B Two\",\"C Three\",\"D Four\"]}\n",
    );

    #[test]
    fn jsonl_two_records_parse() {
        let corpus = parse_corpus(TWO_PAPER_JSONL.as_bytes(), CorpusFormat::Jsonl).unwrap();
        assert_eq!(corpus.paper_count(), 2);
        assert_eq!(corpus.author_count(), 4);
        assert_eq!(corpus.raw_name_count(), 5);
        assert_eq!(corpus.total_author_slots(), 5);
        assert_eq!(corpus.papers()[0].authors.len(), 2);
        assert_eq!(corpus.authors()[1], key("two", "b"));
    }

    #[test]
    fn jsonl_unknown_fields_are_ignored() {
        let line = "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A One\"],\"venue\":\"x\",\"pages\":7}\n";
        let corpus = parse_corpus(line.as_bytes(), CorpusFormat::Jsonl).unwrap();
        assert_eq!(corpus.paper_count(), 1);
    }

    #[test]
    fn duplicate_paper_id_rejected() {
        let text = "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A One\"]}\n\
                    {\"id\":\"p1\",\"year\":2001,\"authors\":[\"B Two\"]}\n";
        match parse_corpus(text.as_bytes(), CorpusFormat::Jsonl) {
            Err(ParseError::DuplicatePaperId(id)) => assert_eq!(id, "p1"),
            other => panic!("expected DuplicatePaperId, got {other:?}"),
        }
    }

    #[test]
    fn year_out_of_range_rejected() {
        for year in ["1899", "2101"] {
            let text = format!("{{\"id\":\"p1\",\"year\":{year},\"authors\":[\"A One\"]}}\n");
            match parse_corpus(text.as_bytes(), CorpusFormat::Jsonl) {
                Err(ParseError::Malformed { line: 1, .. }) => {}
                other => panic!("expected Malformed, got {other:?}"),
            }
        }
    }

    #[test]
    fn empty_author_list_rejected() {
        let text = "{\"id\":\"p1\",\"year\":2000,\"authors\":[]}\n";
        assert!(matches!(
            parse_corpus(text.as_bytes(), CorpusFormat::Jsonl),
            Err(ParseError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn empty_stream_rejected() {
        assert!(matches!(
            parse_corpus("".as_bytes(), CorpusFormat::Jsonl),
            Err(ParseError::EmptyCorpus)
        ));
        assert!(matches!(
            parse_corpus("id,year,authors\n".as_bytes(), CorpusFormat::Csv),
            Err(ParseError::EmptyCorpus)
        ));
    }

    #[test]
    fn malformed_json_reports_line() {
        let text = "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A One\"]}\nnot json\n";
        match parse_corpus(text.as_bytes(), CorpusFormat::Jsonl) {
            Err(ParseError::Malformed { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected Malformed, got {other:?}"),
        }
    }

    #[test]
    fn within_paper_variant_duplicates_collapse_with_warning() {
        let text =
            "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"Juan dela Cruz\",\"Dela Cruz, Juan\"]}\n";
        let corpus = parse_corpus(text.as_bytes(), CorpusFormat::Jsonl).unwrap();
        assert_eq!(corpus.papers()[0].authors.len(), 1);
        assert_eq!(corpus.raw_name_count(), 2);
        assert_eq!(corpus.warnings().len(), 1);
    }

    #[test]
    fn csv_parses_quoted_author_field() {
        let text = "id,year,authors\np1,2000,\"A One; B Two\"\np2,2001,C Three\n";
        let corpus = parse_corpus(text.as_bytes(), CorpusFormat::Csv).unwrap();
        assert_eq!(corpus.paper_count(), 2);
        assert_eq!(corpus.author_count(), 3);
        assert_eq!(corpus.papers()[0].authors[1], key("two", "b"));
    }

    #[test]
    fn csv_wrong_header_rejected() {
        let text = "paper,year,names\np1,2000,A One\n";
        assert!(matches!(
            parse_corpus(text.as_bytes(), CorpusFormat::Csv),
            Err(ParseError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn csv_bad_year_reports_line() {
        let text = "id,year,authors\np1,2000,A One\np2,soon,B Two\n";
        match parse_corpus(text.as_bytes(), CorpusFormat::Csv) {
            Err(ParseError::Malformed { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected Malformed, got {other:?}"),
        }
    }

    #[test]
    fn canonical_round_trip_preserves_corpus() {
        let corpus = parse_corpus(TWO_PAPER_JSONL.as_bytes(), CorpusFormat::Jsonl).unwrap();
        let once = parse_corpus(corpus.to_jsonl().as_bytes(), CorpusFormat::Jsonl).unwrap();
        let twice = parse_corpus(once.to_jsonl().as_bytes(), CorpusFormat::Jsonl).unwrap();
        assert_eq!(once, twice);
        assert_eq!(once.paper_count(), corpus.paper_count());
        assert_eq!(once.authors(), corpus.authors());
    }

    #[test]
    fn summary_of_two_year_archive() {
        let text = "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A1\",\"A2\"]}\n\
                    {\"id\":\"p2\",\"year\":2001,\"authors\":[\"A2\",\"A3\"]}\n";
        let corpus = parse_corpus(text.as_bytes(), CorpusFormat::Jsonl).unwrap();
        let rows = corpus_summary(&corpus);
        assert_eq!(
            rows,
            vec![
                YearSummary {
                    year: 2000,
                    papers: 1,
                    new_authors: 2,
                    cumulative_papers: 1,
                    cumulative_authors: 2,
                },
                YearSummary {
                    year: 2001,
                    papers: 1,
                    new_authors: 1,
                    cumulative_papers: 2,
                    cumulative_authors: 3,
                },
            ]
        );
    }

    #[test]
    fn summary_materializes_gap_years_with_zeros() {
        let text = "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A1\"]}\n\
                    {\"id\":\"p2\",\"year\":2003,\"authors\":[\"A1\",\"A2\"]}\n";
        let corpus = parse_corpus(text.as_bytes(), CorpusFormat::Jsonl).unwrap();
        let rows = corpus_summary(&corpus);
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[1].year, 2001);
        assert_eq!(rows[1].papers, 0);
        assert_eq!(rows[1].new_authors, 0);
        assert_eq!(rows[1].cumulative_papers, 1);
        assert_eq!(rows[2].cumulative_authors, 1);
        assert_eq!(rows[3].cumulative_authors, 2);
    }

    #[test]
    fn author_first_year_is_minimum_even_with_unsorted_input() {
        let text = "{\"id\":\"p1\",\"year\":2005,\"authors\":[\"A1\"]}\n\
                    {\"id\":\"p2\",\"year\":2003,\"authors\":[\"A1\"]}\n";
        let corpus = parse_corpus(text.as_bytes(), CorpusFormat::Jsonl).unwrap();
        let rows = corpus_summary(&corpus);
        assert_eq!(rows[0].year, 2003);
        assert_eq!(rows[0].new_authors, 1);
        assert_eq!(rows[2].new_authors, 0);
    }
}
