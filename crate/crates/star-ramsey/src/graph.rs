use crate::error::{Error, Result};

/// Hard cap on vertex counts so adjacency rows fit in a `u64` bitset.
///
/// Everything this crate builds or searches lives on well under 64 vertices;
/// the cap keeps the decision engine's inner loops branch-free.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on the dense vertex set `0..n`.
///
/// No loops, no parallel edges. Values are immutable once built; use
/// [`GraphBuilder`] (or the convenience constructors) to assemble one. The
/// edge list is kept sorted with `u < v` in each pair, so iteration order is
/// deterministic everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
            edges: Vec::new(),
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut b = GraphBuilder::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v)?;
            }
        }
        Ok(b.build())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn builder(n: usize) -> Result<GraphBuilder> {
        GraphBuilder::new(n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = if v < self.n { self.adj[v] } else { 0 };
        (0..self.n).filter(move |&u| row >> u & 1 == 1)
    }

    /// Adjacency row of `v` as a bitset; bit `u` is set iff `uv` is an edge.
    pub fn adjacency_row(&self, v: usize) -> u64 {
        if v < self.n {
            self.adj[v]
        } else {
            0
        }
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree exactly `d`.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.min_degree();
        if self.max_degree() == d {
            Some(d)
        } else {
            None
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    /// Edge-wise union with another graph on the same vertex set.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::OrderMismatch(self.n, other.n));
        }
        let adj: Vec<u64> = self
            .adj
            .iter()
            .zip(&other.adj)
            .map(|(a, b)| a | b)
            .collect();
        Ok(Graph::from_adjacency(self.n, adj))
    }

    /// True when the two graphs share no edge.
    pub fn edge_disjoint(&self, other: &Graph) -> bool {
        self.adj.iter().zip(&other.adj).all(|(a, b)| a & b == 0)
    }

    pub(crate) fn from_adjacency(n: usize, adj: Vec<u64>) -> Graph {
        let mut edges = Vec::new();
        for (u, &bits) in adj.iter().enumerate() {
            // Keep only neighbors above u; two shifts so u = 63 stays in range.
            let mut row = bits & (u64::MAX << u << 1);
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                edges.push((u, v));
                row &= row - 1;
            }
        }
        Graph { n, adj, edges }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

/// Mutable staging area for building a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(GraphBuilder { n, adj: vec![0; n] })
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        Ok(())
    }

    /// Inserts edge `uv`; inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        self.check_pair(u, v)?;
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(self)
    }

    /// Removes edge `uv` if present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        self.check_pair(u, v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(self)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && self.adj[u] >> v & 1 == 1
    }

    pub fn build(self) -> Graph {
        Graph::from_adjacency(self.n, self.adj)
    }
}

/// Spanning cycle on `0..n` through the given vertex sequence.
pub(crate) fn cycle_graph(n: usize, order: &[usize]) -> Result<Graph> {
    let mut b = GraphBuilder::new(n)?;
    for i in 0..order.len() {
        b.add_edge(order[i], order[(i + 1) % order.len()])?;
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn degrees_match_hand_counts() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.degree(0).unwrap(), 2);
        assert_eq!(k3.edge_count(), 3);

        let e4 = Graph::empty(4).unwrap();
        assert_eq!(e4.degree(2).unwrap(), 0);

        assert_eq!(c5().degree(3).unwrap(), 2);
        assert_eq!(c5().regularity(), Some(2));
    }

    #[test]
    fn degree_rejects_out_of_range_vertex() {
        let g = Graph::complete(3).unwrap();
        assert!(matches!(
            g.degree(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn builder_rejects_loops_and_bad_vertices() {
        let mut b = GraphBuilder::new(4).unwrap();
        assert!(matches!(b.add_edge(1, 1), Err(Error::LoopEdge(1))));
        assert!(matches!(
            b.add_edge(0, 4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn largest_supported_order_builds_cleanly() {
        let k = Graph::complete(64).unwrap();
        assert_eq!(k.edge_count(), 64 * 63 / 2);
        assert_eq!(k.regularity(), Some(63));

        let mut b = GraphBuilder::new(64).unwrap();
        b.add_edge(62, 63).unwrap();
        let g = b.build();
        assert_eq!(g.edges(), &[(62, 63)]);
        assert_eq!(g.degree(63).unwrap(), 1);
    }

    #[test]
    fn edge_list_is_sorted_and_deduplicated() {
        let g = Graph::from_edges(4, [(3, 1), (0, 2), (1, 3), (2, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
        assert!(g.has_edge(1, 3));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn union_and_disjointness() {
        let a = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, [(1, 2)]).unwrap();
        assert!(a.edge_disjoint(&b));
        let u = a.union(&b).unwrap();
        assert_eq!(u.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert!(!u.edge_disjoint(&b));
        assert!(a.union(&Graph::empty(5).unwrap()).is_err());
    }

    #[test]
    fn neighbors_iterate_in_order() {
        let g = c5();
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1, 4]);
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![1, 3]);
    }
}
