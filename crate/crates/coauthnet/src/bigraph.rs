//! Paper-author bipartite graph and its degree statistics.
//!
//! Vertices keep first-appearance order from the corpus; the incidence
//! structure is stored as sorted adjacency on both sides, so degree reads
//! are O(1) and membership checks are O(log deg).

use serde::Serialize;

use crate::corpus::{AuthorKey, Corpus};

#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteGraph {
    paper_ids: Vec<String>,
    author_keys: Vec<AuthorKey>,
    paper_authors: Vec<Vec<usize>>,
    author_papers: Vec<Vec<usize>>,
    edge_count: usize,
}

impl BipartiteGraph {
    pub fn paper_count(&self) -> usize {
        self.paper_ids.len()
    }

    pub fn author_count(&self) -> usize {
        self.author_keys.len()
    }

    /// Edges in the incidence structure; equals the total author slots of
    /// the corpus and the sum of either degree sequence.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn paper_ids(&self) -> &[String] {
        &self.paper_ids
    }

    pub fn author_keys(&self) -> &[AuthorKey] {
        &self.author_keys
    }

    /// Author indices on paper `i`, ascending.
    pub fn paper_authors(&self, i: usize) -> &[usize] {
        &self.paper_authors[i]
    }

    /// Paper indices authored by `j`, ascending.
    pub fn author_papers(&self, j: usize) -> &[usize] {
        &self.author_papers[j]
    }

    pub fn has_edge(&self, paper: usize, author: usize) -> bool {
        self.paper_authors[paper].binary_search(&author).is_ok()
    }

    /// Row-major edge iteration: (paper index, author index).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.paper_authors
            .iter()
            .enumerate()
            .flat_map(|(i, authors)| authors.iter().map(move |&j| (i, j)))
    }
}

/// Builds the bipartite graph. One ordered-index lookup per author slot,
/// so construction is O(sum(M_i) * log M).
pub fn build_pag(corpus: &Corpus) -> BipartiteGraph {
    let n = corpus.paper_count();
    let m = corpus.author_count();
    let mut paper_authors: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut author_papers: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut edge_count = 0;

    for (i, paper) in corpus.papers().iter().enumerate() {
        let mut row: Vec<usize> = paper
            .authors
            .iter()
            .map(|key| {
                corpus
                    .author_index(key)
                    .expect("corpus interns every author it stores")
            })
            .collect();
        row.sort_unstable();
        edge_count += row.len();
        for &j in &row {
            author_papers[j].push(i);
        }
        paper_authors.push(row);
    }
    // Papers are visited in ascending order, so author_papers is sorted.

    BipartiteGraph {
        paper_ids: corpus.papers().iter().map(|p| p.id.clone()).collect(),
        author_keys: corpus.authors().to_vec(),
        paper_authors,
        author_papers,
        edge_count,
    }
}

/// Authors per paper, indexed like the corpus paper list.
pub fn paper_degrees(g: &BipartiteGraph) -> Vec<usize> {
    g.paper_authors.iter().map(Vec::len).collect()
}

/// Papers per author, indexed like the corpus author list.
pub fn author_degrees(g: &BipartiteGraph) -> Vec<usize> {
    g.author_papers.iter().map(Vec::len).collect()
}

/// Minimum, mean and maximum of a degree sequence. An empty sequence
/// yields all zeros.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DegreeStats {
    pub min: usize,
    pub avg: f64,
    pub max: usize,
}

pub(crate) fn degree_stats(degrees: &[usize]) -> DegreeStats {
    if degrees.is_empty() {
        return DegreeStats {
            min: 0,
            avg: 0.0,
            max: 0,
        };
    }
    let mut min = usize::MAX;
    let mut max = 0usize;
    let mut sum = 0u64;
    for &d in degrees {
        min = min.min(d);
        max = max.max(d);
        sum += d as u64;
    }
    DegreeStats {
        min,
        avg: sum as f64 / degrees.len() as f64,
        max,
    }
}

pub fn authors_per_paper_stats(g: &BipartiteGraph) -> DegreeStats {
    degree_stats(&paper_degrees(g))
}

pub fn papers_per_author_stats(g: &BipartiteGraph) -> DegreeStats {
    degree_stats(&author_degrees(g))
}

/// Top `k` authors by paper count, descending; ties broken by key order.
/// Returns min(k, M) entries.
pub fn top_authors_by_papers(g: &BipartiteGraph, k: usize) -> Vec<(AuthorKey, usize)> {
    rank_authors(g.author_keys(), &author_degrees(g), k)
}

pub(crate) fn rank_authors(
    keys: &[AuthorKey],
    values: &[usize],
    k: usize,
) -> Vec<(AuthorKey, usize)> {
    let mut ranked: Vec<(AuthorKey, usize)> = keys
        .iter()
        .cloned()
        .zip(values.iter().copied())
        .collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    ranked.truncate(k);
    ranked
}
