use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total edge coloring of a host graph with colors `1..=t`.
///
/// Colors are 1-based throughout the crate. The assignment vector runs
/// parallel to `host.edges()`, so every host edge carries exactly one color
/// by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    host: Graph,
    t: usize,
    assignment: Vec<usize>,
}

impl EdgeColoring {
    pub fn new(host: Graph, t: usize, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != host.edge_count() {
            return Err(Error::AssignmentLength {
                got: assignment.len(),
                want: host.edge_count(),
            });
        }
        if let Some(&c) = assignment.iter().find(|&&c| c < 1 || c > t) {
            return Err(Error::ColorOutOfRange { color: c, t });
        }
        Ok(EdgeColoring {
            host,
            t,
            assignment,
        })
    }

    /// Builds host and coloring together from `(u, v, color)` triples.
    pub fn from_colored_edges<I>(n: usize, t: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        let mut listed: Vec<(usize, usize, usize)> = Vec::new();
        let mut builder = Graph::builder(n)?;
        for (u, v, c) in triples {
            if builder.has_edge(u, v) {
                return Err(Error::OverlappingParts(u.min(v), u.max(v)));
            }
            builder.add_edge(u, v)?;
            listed.push((u.min(v), u.max(v), c));
        }
        let host = builder.build();
        listed.sort_unstable();
        let assignment = listed.iter().map(|&(_, _, c)| c).collect();
        EdgeColoring::new(host, t, assignment)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Colors aligned with `host().edges()`.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.host
            .edges()
            .binary_search(&key)
            .ok()
            .map(|idx| self.assignment[idx])
    }

    /// The subgraph carrying color `i`.
    pub fn color_class(&self, i: usize) -> Result<Graph> {
        if i < 1 || i > self.t {
            return Err(Error::ColorOutOfRange {
                color: i,
                t: self.t,
            });
        }
        let edges = self
            .host
            .edges()
            .iter()
            .zip(&self.assignment)
            .filter(|(_, &c)| c == i)
            .map(|(&e, _)| e);
        Graph::from_edges(self.host.n(), edges)
    }

    /// Degree of `v` inside color class `i`, without materializing the class.
    pub fn color_degree(&self, v: usize, i: usize) -> Result<usize> {
        if v >= self.host.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.host.n(),
            });
        }
        if i < 1 || i > self.t {
            return Err(Error::ColorOutOfRange {
                color: i,
                t: self.t,
            });
        }
        Ok(self
            .host
            .edges()
            .iter()
            .zip(&self.assignment)
            .filter(|(&(u, w), &c)| c == i && (u == v || w == v))
            .count())
    }

    /// Per-vertex degree table, one row per color `1..=t`.
    pub fn color_degree_table(&self) -> Vec<Vec<usize>> {
        let n = self.host.n();
        let mut table = vec![vec![0usize; n]; self.t];
        for (&(u, v), &c) in self.host.edges().iter().zip(&self.assignment) {
            table[c - 1][u] += 1;
            table[c - 1][v] += 1;
        }
        table
    }
}

/// An ordered list of edge-disjoint subgraphs of a host.
///
/// `complete` records whether the parts cover every host edge, in which case
/// the decomposition doubles as an edge coloring (part `i` = color `i + 1`).
#[derive(Debug, Clone)]
pub struct Decomposition {
    host: Graph,
    parts: Vec<Graph>,
    complete: bool,
}

impl Decomposition {
    pub fn new(host: Graph, parts: Vec<Graph>) -> Result<Self> {
        let mut seen = Graph::empty(host.n())?;
        for part in &parts {
            if part.n() != host.n() {
                return Err(Error::OrderMismatch(part.n(), host.n()));
            }
            for &(u, v) in part.edges() {
                if !host.has_edge(u, v) {
                    return Err(Error::PartOutsideHost(u, v));
                }
                if seen.has_edge(u, v) {
                    return Err(Error::OverlappingParts(u, v));
                }
            }
            seen = seen.union(part)?;
        }
        let complete = seen.edge_count() == host.edge_count();
        Ok(Decomposition {
            host,
            parts,
            complete,
        })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn parts(&self) -> &[Graph] {
        &self.parts
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Reads a complete decomposition as an edge coloring; `None` otherwise.
    pub fn coloring(&self) -> Option<EdgeColoring> {
        if !self.complete {
            return None;
        }
        let triples = self
            .parts
            .iter()
            .enumerate()
            .flat_map(|(i, part)| part.edges().iter().map(move |&(u, v)| (u, v, i + 1)));
        EdgeColoring::from_colored_edges(self.host.n(), self.parts.len(), triples).ok()
    }
}
