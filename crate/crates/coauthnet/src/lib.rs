//! Bibliometric analysis of paper-author corpora: bipartite incidence
//! graphs, co-authorship networks, degree statistics, log-log power-law
//! fits with coefficient significance tests, attribute mixing patterns,
//! and cumulative growth trends.
//!
//! The pipeline is deterministic end to end: a corpus plus a set of
//! analysis options fully determines every output byte. All randomness
//! lives in [`synth`] behind an explicit seed.

#![forbid(unsafe_code)]

pub mod bigraph;
pub mod coauthor;
pub mod corpus;
pub mod export;
pub mod mixing;
pub mod powerfit;
pub mod report;
pub mod stats;
pub mod synth;
pub mod trend;
