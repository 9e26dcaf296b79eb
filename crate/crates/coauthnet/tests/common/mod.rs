//! Shared helpers for integration tests: a seeded random-corpus generator
//! and deliberately naive reference implementations used as oracles.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coauthnet::corpus::{parse_corpus, Corpus, CorpusFormat};

pub fn corpus_from_jsonl(text: &str) -> Corpus {
    parse_corpus(text.as_bytes(), CorpusFormat::Jsonl).expect("test corpus parses")
}

/// Two papers: {A1, A2} and {A2, A3, A4}. Authors intern in first-appearance
/// order, so indices 0..4 are A1..A4 and papers 0..2 are p1, p2.
pub fn two_paper_archive() -> Corpus {
    corpus_from_jsonl(
        "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A1\",\"A2\"]}\n\
         {\"id\":\"p2\",\"year\":2001,\"authors\":[\"A2\",\"A3\",\"A4\"]}\n",
    )
}

/// Small random corpus: up to 30 papers, up to 6 distinct authors each,
/// drawn from a pool so collaborations repeat.
pub fn random_corpus(seed: u64) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_papers = rng.gen_range(1..=30);
    let pool: usize = rng.gen_range(1..=40);
    let mut lines = String::new();
    for i in 0..n_papers {
        let size = rng.gen_range(1..=6usize).min(pool);
        let mut ids: Vec<usize> = (0..pool).collect();
        ids.shuffle(&mut rng);
        ids.truncate(size);
        let year = rng.gen_range(2000..=2010);
        let authors: Vec<String> = ids.iter().map(|a| format!("\"w{a}\"")).collect();
        lines.push_str(&format!(
            "{{\"id\":\"p{i}\",\"year\":{year},\"authors\":[{}]}}\n",
            authors.join(",")
        ));
    }
    corpus_from_jsonl(&lines)
}

/// Incidence matrix by linear scan over the records: cell (i, j) is true
/// when paper i lists author j.
pub fn oracle_incidence(corpus: &Corpus) -> Vec<Vec<bool>> {
    corpus
        .papers()
        .iter()
        .map(|paper| {
            corpus
                .authors()
                .iter()
                .map(|author| paper.authors.contains(author))
                .collect()
        })
        .collect()
}

pub fn oracle_paper_degrees(incidence: &[Vec<bool>]) -> Vec<usize> {
    incidence
        .iter()
        .map(|row| row.iter().filter(|&&b| b).count())
        .collect()
}

pub fn oracle_author_degrees(incidence: &[Vec<bool>]) -> Vec<usize> {
    if incidence.is_empty() {
        return Vec::new();
    }
    (0..incidence[0].len())
        .map(|j| incidence.iter().filter(|row| row[j]).count())
        .collect()
}

/// Co-appearance adjacency: authors j and k are linked when some paper
/// lists both. Quadratic in authors, linear scan over papers.
pub fn oracle_coauthor_matrix(corpus: &Corpus) -> Vec<Vec<bool>> {
    let m = corpus.author_count();
    let incidence = oracle_incidence(corpus);
    let mut adj = vec![vec![false; m]; m];
    for j in 0..m {
        for k in (j + 1)..m {
            let linked = incidence.iter().any(|row| row[j] && row[k]);
            adj[j][k] = linked;
            adj[k][j] = linked;
        }
    }
    adj
}

pub fn oracle_coauthor_degrees(adj: &[Vec<bool>]) -> Vec<usize> {
    adj.iter()
        .map(|row| row.iter().filter(|&&b| b).count())
        .collect()
}

/// Connected components of the co-appearance graph by breadth-first
/// search, each as a sorted member set, ordered by smallest member.
pub fn oracle_components(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let m = adj.len();
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut members = BTreeSet::new();
        let mut queue = vec![start];
        seen[start] = true;
        while let Some(v) = queue.pop() {
            members.insert(v);
            for (w, &linked) in adj[v].iter().enumerate() {
                if linked && !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        out.push(members.into_iter().collect());
    }
    out
}
