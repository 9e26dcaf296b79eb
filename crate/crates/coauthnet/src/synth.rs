//! Seeded synthetic corpus generator whose papers-per-author distribution
//! follows a discrete power law with a chosen exponent.
//!
//! The degree multiset is built from rounded expected counts of the
//! truncated power law rather than by iid sampling: unweighted log-log
//! regression over a sampled histogram is dominated by singleton tail bins
//! and recovers a far shallower exponent than the target. Rounded expected
//! counts keep the fitted exponent within a few hundredths of the target
//! while the seed still drives which author gets which degree and which
//! papers they land on. Paper sizes follow their own skewed capacity
//! multiset so that authors-per-paper also spans several distinct values.

use std::collections::BinaryHeap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::corpus::{AuthorKey, Corpus, PaperRecord};

const DEGREE_SUPPORT_CAP: usize = 1000;
/// Average authors per paper aimed for when sizing the incidence mass.
const INCIDENCE_FACTOR: f64 = 2.5;
const ANCHOR_MAX_ITER: usize = 64;
/// Paper-size capacity shape: most papers small, a skewed tail upward.
const SIZE_SUPPORT_CAP: usize = 13;
const SIZE_EXPONENT: f64 = -2.6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SynthParams {
    pub seed: u64,
    pub papers: usize,
    pub phi: f64,
}

impl Default for SynthParams {
    fn default() -> Self {
        SynthParams {
            seed: 42,
            papers: 100,
            phi: -2.0,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SynthError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(&'static str),
}

/// Generates a corpus of `papers` records. Same parameters give identical
/// records; the seed moves authors between degrees and papers but does not
/// change the degree multiset itself.
pub fn generate(params: &SynthParams) -> Result<Corpus, SynthError> {
    if params.papers == 0 {
        return Err(SynthError::InvalidParams("paper count must be at least 1"));
    }
    if !params.phi.is_finite() || params.phi >= -1.0 {
        return Err(SynthError::InvalidParams(
            "target exponent must be finite and below -1",
        ));
    }
    let n = params.papers;
    let mut degrees = degree_multiset(n, params.phi);
    let mass: u64 = degrees.iter().map(|&d| d as u64).sum();
    let mut capacities = paper_capacity_multiset(n, mass);

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    degrees.shuffle(&mut rng);
    capacities.shuffle(&mut rng);

    // Each author takes the papers with the most remaining capacity. Every
    // paper sits in the heap exactly once, so one author never lands on the
    // same paper twice, and because total capacity <= incidence mass a
    // paper left untouched would have to outrank one driven negative,
    // which the largest-remaining rule forbids: every paper is covered.
    let mut paper_authors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut heap: BinaryHeap<(i64, usize)> = capacities
        .iter()
        .enumerate()
        .map(|(paper, &cap)| (cap as i64, paper))
        .collect();
    let mut picked = Vec::new();
    for (author, &degree) in degrees.iter().enumerate() {
        picked.clear();
        for _ in 0..degree {
            let (remaining, paper) = heap.pop().expect("degree never exceeds paper count");
            paper_authors[paper].push(author);
            picked.push((remaining - 1, paper));
        }
        heap.extend(picked.drain(..));
    }

    let year_span = n.min(10);
    let records = paper_authors
        .into_iter()
        .enumerate()
        .map(|(i, mut authors)| {
            authors.sort_unstable();
            PaperRecord {
                id: format!("p{:05}", i + 1),
                year: 2000 + ((i * year_span) / n) as i32,
                authors: authors
                    .into_iter()
                    .map(|m| AuthorKey::new(format!("author{:05}", m + 1), ""))
                    .collect(),
            }
        })
        .collect();
    Ok(Corpus::from_records(records).expect("generated records are well formed"))
}

/// Author degree multiset: k repeated round(A*p_k) times, where p_k is the
/// truncated power law over [1, min(1000, n)] and the scale A is grown
/// until the incidence mass reaches max(n, round(2.5 n)).
fn degree_multiset(n: usize, phi: f64) -> Vec<usize> {
    let kmax = n.min(DEGREE_SUPPORT_CAP);
    let weights: Vec<f64> = (1..=kmax).map(|k| (k as f64).powf(phi)).collect();
    let z: f64 = weights.iter().sum();
    let p: Vec<f64> = weights.iter().map(|w| w / z).collect();

    let target: u64 = if n == 1 {
        1
    } else {
        (n as u64).max((INCIDENCE_FACTOR * n as f64).round() as u64)
    };
    let mean_degree: f64 = p.iter().zip(1..).map(|(pk, k)| pk * k as f64).sum();
    let mut scale = ((target as f64 / mean_degree).round() as u64).max(1);

    let counts_for = |a: u64| -> Vec<u64> {
        let mut counts: Vec<u64> = p
            .iter()
            .map(|&pk| {
                let expected = a as f64 * pk;
                if expected >= 1.0 {
                    expected.round() as u64
                } else {
                    0
                }
            })
            .collect();
        if counts[0] == 0 {
            counts[0] = 1;
        }
        counts
    };
    let mass = |counts: &[u64]| -> u64 {
        counts.iter().zip(1u64..).map(|(c, k)| c * k).sum()
    };

    let mut counts = counts_for(scale);
    for _ in 0..ANCHOR_MAX_ITER {
        let t = mass(&counts);
        if t >= target {
            break;
        }
        let grown = (scale as f64 * target as f64 / t as f64).ceil() as u64;
        scale = grown.max(scale + 1);
        counts = counts_for(scale);
    }

    let mut degrees: Vec<usize> = Vec::new();
    for (k, &c) in (1..).zip(counts.iter()) {
        for _ in 0..c {
            degrees.push(k);
        }
    }
    // Coverage floor: assignment reaches every paper only when the
    // incidence mass is at least n.
    let mut t = mass(&counts) as usize;
    while t < n {
        degrees.push(1);
        t += 1;
    }
    degrees
}

/// Target authors-per-paper capacities: one per paper, each >= 1, summing
/// to at most `mass_budget` (the hard requirement for full coverage). The
/// counts follow a rounded truncated power law over paper sizes, forced to
/// sum to exactly n; incidence mass beyond the capacity total spills onto
/// papers roughly evenly via the assignment heap.
fn paper_capacity_multiset(n: usize, mass_budget: u64) -> Vec<u64> {
    let smax = n.min(SIZE_SUPPORT_CAP);
    let weights: Vec<f64> = (1..=smax).map(|s| (s as f64).powf(SIZE_EXPONENT)).collect();
    let z: f64 = weights.iter().sum();
    let mut counts: Vec<u64> = weights
        .iter()
        .map(|w| (n as f64 * w / z).round() as u64)
        .collect();

    let mut total: u64 = counts.iter().sum();
    while total > n as u64 {
        // Rounding slack is tiny next to the dominant size-1 bin; shrink
        // the smallest non-empty size first.
        let bin = counts.iter().position(|&c| c > 0).expect("total > 0");
        let cut = counts[bin].min(total - n as u64);
        counts[bin] -= cut;
        total -= cut;
    }
    counts[0] += n as u64 - total;

    // The mean target size sits well under the incidence factor, so the
    // budget holds for any n; degrade toward size 1 if it ever did not.
    let mut mass: u64 = counts.iter().zip(1u64..).map(|(c, s)| c * s).sum();
    while mass > mass_budget {
        let bin = counts
            .iter()
            .rposition(|&c| c > 0)
            .expect("counts sum to n >= 1");
        if bin == 0 {
            break;
        }
        counts[bin] -= 1;
        counts[0] += 1;
        mass -= bin as u64;
    }

    let mut capacities = Vec::with_capacity(n);
    for (s, &c) in (1u64..).zip(counts.iter()) {
        for _ in 0..c {
            capacities.push(s);
        }
    }
    capacities
}
