//! Mixing patterns on the co-authorship graph: does productivity track
//! collaboration, and do authors attach to others like themselves?
//!
//! Scalar assortativity is the Pearson correlation over the directed edge
//! list: every undirected edge {u, v} contributes both (tau_u, tau_v) and
//! (tau_v, tau_u), which is exactly the mixing-matrix formulation with
//! cell fractions summing to 1.

use thiserror::Error;

use crate::coauthor::{coauthor_degrees, CoauthorGraph};
use crate::stats::pearson;

/// Vertex attribute used for mixing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AttributeSelector {
    /// Papers written (bipartite degree).
    Papers,
    /// Distinct collaborators (co-authorship degree).
    Coauthors,
}

impl AttributeSelector {
    pub fn name(&self) -> &'static str {
        match self {
            AttributeSelector::Papers => "papers",
            AttributeSelector::Coauthors => "coauthors",
        }
    }

    fn values(&self, cg: &CoauthorGraph) -> Vec<f64> {
        match self {
            AttributeSelector::Papers => cg
                .papers_per_author()
                .iter()
                .map(|&v| v as f64)
                .collect(),
            AttributeSelector::Coauthors => {
                coauthor_degrees(cg).iter().map(|&v| v as f64).collect()
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MixingError {
    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(&'static str),
    #[error("mixing undefined: {0}")]
    UndefinedMixing(&'static str),
}

/// Assortativity outcome. `edge_pairs` holds both orientations of every
/// undirected edge, so its length `n_directed_edges` is always even and the
/// pair multiset is symmetric under swapping the coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct MixingResult {
    pub r: f64,
    pub n_directed_edges: usize,
    pub edge_pairs: Vec<(f64, f64)>,
}

/// Pearson correlation between papers written and distinct collaborators
/// across all authors.
pub fn productivity_collaboration_correlation(cg: &CoauthorGraph) -> Result<f64, MixingError> {
    let x = AttributeSelector::Papers.values(cg);
    let y = AttributeSelector::Coauthors.values(cg);
    pearson(&x, &y).ok_or(MixingError::UndefinedCorrelation(
        "constant attribute vector or fewer than 2 authors",
    ))
}

/// Degree-correlation style assortativity over a vertex attribute.
pub fn assortativity(
    cg: &CoauthorGraph,
    attribute: AttributeSelector,
) -> Result<MixingResult, MixingError> {
    assortativity_values(cg, &attribute.values(cg))
}

/// Assortativity over caller-supplied attribute values (one per author).
/// The coefficient is invariant under affine maps tau -> a*tau + b, a != 0.
pub fn assortativity_values(
    cg: &CoauthorGraph,
    tau: &[f64],
) -> Result<MixingResult, MixingError> {
    assert_eq!(
        tau.len(),
        cg.author_count(),
        "one attribute value per author"
    );
    if cg.edge_count() == 0 {
        return Err(MixingError::UndefinedMixing("graph has no edges"));
    }
    let mut edge_pairs = Vec::with_capacity(2 * cg.edge_count());
    for (a, b, _) in cg.edges() {
        edge_pairs.push((tau[a], tau[b]));
        edge_pairs.push((tau[b], tau[a]));
    }
    let starts: Vec<f64> = edge_pairs.iter().map(|&(s, _)| s).collect();
    let ends: Vec<f64> = edge_pairs.iter().map(|&(_, e)| e).collect();
    let r = pearson(&starts, &ends).ok_or(MixingError::UndefinedMixing(
        "zero attribute variance over edge endpoints",
    ))?;
    Ok(MixingResult {
        r,
        n_directed_edges: edge_pairs.len(),
        edge_pairs,
    })
}

/// Aggregates the directed pairs into (tau_start, tau_end, count) rows,
/// ascending. Counts sum to `n_directed_edges`.
pub fn mixing_plot_data(result: &MixingResult) -> Vec<(f64, f64, u64)> {
    let mut sorted = result.edge_pairs.clone();
    sorted.sort_by(|a, b| {
        a.0.total_cmp(&b.0).then_with(|| a.1.total_cmp(&b.1))
    });
    let mut rows: Vec<(f64, f64, u64)> = Vec::new();
    for (s, e) in sorted {
        match rows.last_mut() {
            Some(last) if last.0 == s && last.1 == e => last.2 += 1,
            _ => rows.push((s, e, 1)),
        }
    }
    rows
}

/// Mixing matrix over attribute value classes. Cells hold directed edge
/// counts, so fractions sum to exactly total/total = 1.
#[derive(Clone, Debug, PartialEq)]
pub struct MixingMatrix {
    classes: Vec<f64>,
    counts: Vec<Vec<u64>>,
    total: u64,
}

impl MixingMatrix {
    /// Distinct attribute values, ascending.
    pub fn classes(&self) -> &[f64] {
        &self.classes
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Fraction of directed edges from class `i` to class `j`.
    pub fn fraction(&self, i: usize, j: usize) -> f64 {
        self.counts[i][j] as f64 / self.total as f64
    }

    /// Row marginal f_i: fraction of directed edges starting in class `i`.
    pub fn row_marginal(&self, i: usize) -> f64 {
        let row: u64 = self.counts[i].iter().sum();
        row as f64 / self.total as f64
    }
}

pub fn mixing_matrix(result: &MixingResult) -> MixingMatrix {
    let mut classes: Vec<f64> = result
        .edge_pairs
        .iter()
        .flat_map(|&(s, e)| [s, e])
        .collect();
    classes.sort_by(f64::total_cmp);
    classes.dedup();
    let index = |v: f64| classes.binary_search_by(|c| c.total_cmp(&v)).unwrap();
    let mut counts = vec![vec![0u64; classes.len()]; classes.len()];
    for &(s, e) in &result.edge_pairs {
        counts[index(s)][index(e)] += 1;
    }
    MixingMatrix {
        classes,
        counts,
        total: result.edge_pairs.len() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coauthor::build_cag_from_corpus;
    use crate::corpus::{parse_corpus, Corpus, CorpusFormat};
    use approx::assert_relative_eq;

    fn corpus(text: &str) -> Corpus {
        parse_corpus(text.as_bytes(), CorpusFormat::Jsonl).unwrap()
    }

    /// Two papers: {A1, A2} and {A2, A3, A4}.
    fn archive() -> CoauthorGraph {
        build_cag_from_corpus(&corpus(
            "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A1\",\"A2\"]}\n\
             {\"id\":\"p2\",\"year\":2001,\"authors\":[\"A2\",\"A3\",\"A4\"]}\n",
        ))
    }

    /// Three papers sharing a hub: the co-authorship graph is a star K_1,3.
    fn star() -> CoauthorGraph {
        build_cag_from_corpus(&corpus(
            "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"H\",\"L1\"]}\n\
             {\"id\":\"p2\",\"year\":2001,\"authors\":[\"H\",\"L2\"]}\n\
             {\"id\":\"p3\",\"year\":2002,\"authors\":[\"H\",\"L3\"]}\n",
        ))
    }

    #[test]
    fn productivity_tracks_collaboration_on_archive() {
        // P = (1,2,1,1), C = (1,3,2,2); value frozen from an independent
        // computation.
        let r = productivity_collaboration_correlation(&archive()).unwrap();
        assert_relative_eq!(r, 0.816_496_580_927_725_8, max_relative = 1e-12);
    }

    #[test]
    fn identical_attribute_vectors_correlate_exactly() {
        // Every author on exactly one shared paper: P = C + constant shift
        // fails, so build two papers with the same overlap pattern.
        let cg = build_cag_from_corpus(&corpus(
            "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A\",\"B\"]}\n\
             {\"id\":\"p2\",\"year\":2001,\"authors\":[\"C\",\"D\",\"E\"]}\n",
        ));
        // P = (1,1,1,1,1) constant: correlation undefined.
        assert_eq!(
            productivity_collaboration_correlation(&cg),
            Err(MixingError::UndefinedCorrelation(
                "constant attribute vector or fewer than 2 authors"
            ))
        );
    }

    #[test]
    fn star_with_degree_attribute_is_perfectly_disassortative() {
        let cg = star();
        let res = assortativity(&cg, AttributeSelector::Coauthors).unwrap();
        assert!((res.r - (-1.0)).abs() < 1e-12);
        assert_eq!(res.n_directed_edges, 6);
    }

    #[test]
    fn equal_attribute_edges_are_perfectly_assortative() {
        // Two disjoint cliques of different sizes: every edge joins
        // equal-degree endpoints.
        let cg = build_cag_from_corpus(&corpus(
            "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A\",\"B\"]}\n\
             {\"id\":\"p2\",\"year\":2001,\"authors\":[\"C\",\"D\",\"E\"]}\n",
        ));
        let res = assortativity(&cg, AttributeSelector::Coauthors).unwrap();
        assert!((res.r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn directed_edge_list_is_symmetric_and_even() {
        let res = assortativity(&archive(), AttributeSelector::Coauthors).unwrap();
        assert_eq!(res.n_directed_edges % 2, 0);
        assert_eq!(res.n_directed_edges, res.edge_pairs.len());
        for &(s, e) in &res.edge_pairs {
            assert!(res.edge_pairs.contains(&(e, s)));
        }
    }

    #[test]
    fn affine_attribute_transform_leaves_r_unchanged() {
        let cg = archive();
        let tau: Vec<f64> = coauthor_degrees(&cg).iter().map(|&v| v as f64).collect();
        let shifted: Vec<f64> = tau.iter().map(|v| 2.0 * v + 3.0).collect();
        let r0 = assortativity_values(&cg, &tau).unwrap().r;
        let r1 = assortativity_values(&cg, &shifted).unwrap().r;
        assert!((r0 - r1).abs() < 1e-12);
    }

    #[test]
    fn edgeless_graph_has_undefined_mixing() {
        let cg = build_cag_from_corpus(&corpus(
            "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A\"]}\n\
             {\"id\":\"p2\",\"year\":2001,\"authors\":[\"B\"]}\n",
        ));
        assert_eq!(
            assortativity(&cg, AttributeSelector::Coauthors),
            Err(MixingError::UndefinedMixing("graph has no edges"))
        );
    }

    #[test]
    fn constant_attribute_has_undefined_mixing() {
        // Single clique: all degrees equal, zero endpoint variance.
        let cg = build_cag_from_corpus(&corpus(
            "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A\",\"B\",\"C\"]}\n",
        ));
        assert_eq!(
            assortativity(&cg, AttributeSelector::Coauthors),
            Err(MixingError::UndefinedMixing(
                "zero attribute variance over edge endpoints"
            ))
        );
    }

    #[test]
    fn plot_data_aggregates_directed_pairs() {
        let res = assortativity(&archive(), AttributeSelector::Coauthors).unwrap();
        let rows = mixing_plot_data(&res);
        assert_eq!(
            rows,
            vec![
                (1.0, 3.0, 1),
                (2.0, 2.0, 2),
                (2.0, 3.0, 2),
                (3.0, 1.0, 1),
                (3.0, 2.0, 2),
            ]
        );
        let total: u64 = rows.iter().map(|r| r.2).sum();
        assert_eq!(total, res.n_directed_edges as u64);
    }

    #[test]
    fn matrix_cells_sum_to_all_directed_edges() {
        let res = assortativity(&archive(), AttributeSelector::Coauthors).unwrap();
        let mx = mixing_matrix(&res);
        let cell_sum: u64 = mx.counts().iter().flatten().sum();
        assert_eq!(cell_sum, mx.total());
        assert_eq!(mx.total(), res.n_directed_edges as u64);
        let frac_sum: f64 = (0..mx.classes().len())
            .flat_map(|i| (0..mx.classes().len()).map(move |j| (i, j)))
            .map(|(i, j)| mx.fraction(i, j))
            .sum();
        assert!((frac_sum - 1.0).abs() < 1e-12);
        let marginal_sum: f64 = (0..mx.classes().len()).map(|i| mx.row_marginal(i)).sum();
        assert!((marginal_sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn matrix_is_symmetric_for_undirected_input() {
        let res = assortativity(&archive(), AttributeSelector::Papers).unwrap();
        let mx = mixing_matrix(&res);
        for i in 0..mx.classes().len() {
            for j in 0..mx.classes().len() {
                assert_eq!(mx.counts()[i][j], mx.counts()[j][i]);
            }
        }
    }
}
