//! Co-authorship graph: authors are vertices, an edge joins two authors who
//! share at least one paper. Isolated vertices (single-author-only people)
//! stay in the vertex set. Edge weights count shared papers; every degree
//! statistic uses the unweighted view.

use std::collections::BTreeMap;

use crate::bigraph::{degree_stats, rank_authors, BipartiteGraph, DegreeStats};
use crate::corpus::{AuthorKey, Corpus};

#[derive(Clone, Debug, PartialEq)]
pub struct CoauthorGraph {
    author_keys: Vec<AuthorKey>,
    neighbors: Vec<Vec<usize>>,
    weights: BTreeMap<(usize, usize), u64>,
    papers_per_author: Vec<usize>,
}

impl CoauthorGraph {
    pub fn author_count(&self) -> usize {
        self.author_keys.len()
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    pub fn author_keys(&self) -> &[AuthorKey] {
        &self.author_keys
    }

    /// Distinct collaborators of author `j`, ascending.
    pub fn neighbors(&self, j: usize) -> &[usize] {
        &self.neighbors[j]
    }

    /// Papers shared by the pair, or 0 when no edge exists.
    pub fn weight(&self, a: usize, b: usize) -> u64 {
        let pair = (a.min(b), a.max(b));
        self.weights.get(&pair).copied().unwrap_or(0)
    }

    /// Undirected edges as (low index, high index, weight), ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.weights.iter().map(|(&(a, b), &w)| (a, b, w))
    }

    /// Papers written by each author, carried over from the bipartite
    /// graph so attribute selectors work from this graph alone.
    pub fn papers_per_author(&self) -> &[usize] {
        &self.papers_per_author
    }

    fn from_author_lists<'a>(
        author_keys: Vec<AuthorKey>,
        papers_per_author: Vec<usize>,
        papers: impl Iterator<Item = &'a [usize]>,
    ) -> CoauthorGraph {
        let m = author_keys.len();
        let mut weights: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for row in papers {
            for (pos, &a) in row.iter().enumerate() {
                for &b in &row[pos + 1..] {
                    let pair = (a.min(b), a.max(b));
                    *weights.entry(pair).or_insert(0) += 1;
                }
            }
        }
        let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); m];
        for &(a, b) in weights.keys() {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        CoauthorGraph {
            author_keys,
            neighbors,
            weights,
            papers_per_author,
        }
    }
}

/// Projects the bipartite graph onto its author side: each paper's author
/// list contributes a complete subgraph.
pub fn build_cag(g: &BipartiteGraph) -> CoauthorGraph {
    let papers_per_author: Vec<usize> = (0..g.author_count())
        .map(|j| g.author_papers(j).len())
        .collect();
    CoauthorGraph::from_author_lists(
        g.author_keys().to_vec(),
        papers_per_author,
        (0..g.paper_count()).map(|i| g.paper_authors(i)),
    )
}

/// Builds the co-authorship graph straight from corpus records, without
/// materializing the bipartite graph. Kept as an independent construction
/// path; both routes must agree.
pub fn build_cag_from_corpus(corpus: &Corpus) -> CoauthorGraph {
    let m = corpus.author_count();
    let mut papers_per_author = vec![0usize; m];
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(corpus.paper_count());
    for paper in corpus.papers() {
        let mut row: Vec<usize> = paper
            .authors
            .iter()
            .map(|key| corpus.author_index(key).expect("author interned"))
            .collect();
        row.sort_unstable();
        for &j in &row {
            papers_per_author[j] += 1;
        }
        rows.push(row);
    }
    CoauthorGraph::from_author_lists(
        corpus.authors().to_vec(),
        papers_per_author,
        rows.iter().map(Vec::as_slice),
    )
}

/// Distinct collaborators per author, indexed like the author list.
pub fn coauthor_degrees(cg: &CoauthorGraph) -> Vec<usize> {
    cg.neighbors.iter().map(Vec::len).collect()
}

pub fn coauthors_per_author_stats(cg: &CoauthorGraph) -> DegreeStats {
    degree_stats(&coauthor_degrees(cg))
}

/// Top `k` authors by collaborator count, descending; ties broken by key
/// order. Returns min(k, M) entries.
pub fn top_authors_by_coauthors(cg: &CoauthorGraph, k: usize) -> Vec<(AuthorKey, usize)> {
    rank_authors(cg.author_keys(), &coauthor_degrees(cg), k)
}

/// A connected component of the co-authorship graph.
#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    /// Member author indices, ascending.
    pub members: Vec<usize>,
    /// Members ranked by collaborator count descending, key order on ties.
    pub central: Vec<(AuthorKey, usize)>,
}

impl Component {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Weighted quick-union with path halving.
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
    }
}

/// Connected components ordered by smallest member index; members are
/// ascending within each component. Isolated authors form singletons.
pub fn components(cg: &CoauthorGraph) -> Vec<Component> {
    let m = cg.author_count();
    let mut uf = UnionFind::new(m);
    for (a, b, _) in cg.edges() {
        uf.union(a, b);
    }
    let degrees = coauthor_degrees(cg);
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..m {
        let root = uf.find(v);
        groups.entry(root).or_default().push(v);
    }
    let mut comps: Vec<Component> = groups
        .into_values()
        .map(|members| {
            // Vertices are visited ascending, so members arrive sorted and
            // the first member is the smallest.
            let mut central: Vec<(AuthorKey, usize)> = members
                .iter()
                .map(|&v| (cg.author_keys[v].clone(), degrees[v]))
                .collect();
            central.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
            Component { members, central }
        })
        .collect();
    comps.sort_by_key(|c| c.members[0]);
    comps
}
