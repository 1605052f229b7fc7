//! Deterministic decompositions of complete graphs and the extremal
//! star-free constructions assembled from them.
//!
//! `K_n` with `n` even splits into `n-1` perfect matchings (round-robin
//! rotation); `K_n` with `n` odd splits into `(n-1)/2` Hamiltonian cycles
//! (rotated zigzag). Both constructions are canonical so that everything
//! downstream, including serialized witnesses, is stable across runs.

use crate::coloring::Decomposition;
use crate::error::{Error, Result};
use crate::graph::{cycle_graph, Graph, GraphBuilder};

/// An ordered Hamiltonian cycle decomposition of `K_n`, `n` odd.
///
/// Cycles are stored as vertex sequences so callers can split them into
/// paths and matchings without re-deriving the traversal order.
#[derive(Debug, Clone)]
pub struct CyclePlan {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CyclePlan {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// The `idx`-th cycle as a graph on all `n` vertices.
    pub fn cycle_graph(&self, idx: usize) -> Result<Graph> {
        cycle_graph(self.n, &self.cycles[idx])
    }

    pub fn to_decomposition(&self) -> Result<Decomposition> {
        let parts = (0..self.cycles.len())
            .map(|i| self.cycle_graph(i))
            .collect::<Result<Vec<_>>>()?;
        Decomposition::new(Graph::complete(self.n)?, parts)
    }
}

/// Splits `K_n` (`n` even) into `n-1` perfect matchings.
///
/// Round-robin rotation: vertex `n-1` sits still while `0..n-1` rotate, so
/// round `r` pairs `n-1` with `r` and `(r+i, r-i) mod (n-1)` for the rest.
pub fn one_factorization(n: usize) -> Result<Decomposition> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddOrder(n));
    }
    let host = Graph::complete(n)?;
    if n == 0 {
        return Decomposition::new(host, Vec::new());
    }
    let ring = n - 1;
    let mut parts = Vec::with_capacity(ring);
    for round in 0..ring {
        let mut b = GraphBuilder::new(n)?;
        b.add_edge(n - 1, round)?;
        for i in 1..n / 2 {
            b.add_edge((round + i) % ring, (round + ring - i) % ring)?;
        }
        parts.push(b.build());
    }
    Decomposition::new(host, parts)
}

/// Splits `K_n` (`n` odd) into `(n-1)/2` Hamiltonian cycles.
///
/// Rotated zigzag: with hub `n-1` and ring `Z_{n-1}`, cycle `j` walks
/// `hub, j, j+1, j-1, j+2, j-2, ...` so consecutive ring edges use each
/// circular difference exactly once; rotating by `j` keeps them disjoint.
pub fn hamiltonian_decomposition(n: usize) -> Result<CyclePlan> {
    if n % 2 != 1 {
        return Err(Error::EvenOrder(n));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    if n == 1 {
        return Ok(CyclePlan {
            n,
            cycles: Vec::new(),
        });
    }
    let ring = n - 1;
    let half = ring / 2;
    let mut cycles = Vec::with_capacity(half);
    for j in 0..half {
        let mut seq = Vec::with_capacity(n);
        seq.push(n - 1);
        seq.push(j);
        for i in 1..=half {
            seq.push((j + i) % ring);
            if i < half {
                seq.push((j + ring - i) % ring);
            }
        }
        cycles.push(seq);
    }
    Ok(CyclePlan { n, cycles })
}

/// Builds an `r`-regular graph on `n` vertices from canonical decompositions.
pub fn regular_graph(n: usize, r: usize) -> Result<Graph> {
    let max = n.saturating_sub(1);
    if r > max {
        return Err(Error::DegreeOutOfRange { r, max, n });
    }
    if r == 0 {
        return Graph::empty(n);
    }
    let mut acc = Graph::empty(n)?;
    if n.is_multiple_of(2) {
        let factors = one_factorization(n)?;
        for part in &factors.parts()[..r] {
            acc = acc.union(part)?;
        }
    } else {
        if r % 2 == 1 {
            return Err(Error::ParityInfeasible { n, r });
        }
        let plan = hamiltonian_decomposition(n)?;
        for idx in 0..r / 2 {
            acc = acc.union(&plan.cycle_graph(idx)?)?;
        }
    }
    Ok(acc)
}

/// Largest possible edge count of a `K_{1,s}`-free graph on `n` vertices.
///
/// `K_{1,s}`-freeness is exactly the degree bound `max degree <= s-1`, so the
/// answer is `((s-1)n - 1) / 2` when `n` is odd and `s` even (an `(s-1)`-
/// regular graph cannot exist) and `(s-1)n / 2` otherwise. Both divisions are
/// exact; a remainder would mean a parity bug, so it is asserted.
pub fn star_free_edge_bound(n: usize, s: usize) -> Result<usize> {
    if s < 1 || s > n.saturating_sub(1) {
        return Err(Error::StarSizeOutOfRange {
            s,
            max: n.saturating_sub(1),
            n,
        });
    }
    let numerator = if n % 2 == 1 && s.is_multiple_of(2) {
        (s - 1) * n - 1
    } else {
        (s - 1) * n
    };
    assert_eq!(
        numerator % 2,
        0,
        "parity bug in star_free_edge_bound({n},{s})"
    );
    Ok(numerator / 2)
}

/// A `K_{1,s}`-free graph on `n` vertices with the maximum number of edges.
///
/// When an `(s-1)`-regular graph exists it is one; otherwise (`n` odd, `s`
/// even) the extremal graph is an `(s-2)`-regular layer plus a maximum
/// matching of one more Hamiltonian cycle, leaving a single vertex of
/// degree `s-2`.
pub fn max_star_free_graph(n: usize, s: usize) -> Result<Graph> {
    let bound = star_free_edge_bound(n, s)?;
    let g = if n % 2 == 1 && s.is_multiple_of(2) {
        let plan = hamiltonian_decomposition(n)?;
        let mut acc = Graph::empty(n)?;
        let layers = (s - 2) / 2;
        for idx in 0..layers {
            acc = acc.union(&plan.cycle_graph(idx)?)?;
        }
        let spare = &plan.cycles()[layers];
        let mut b = GraphBuilder::new(n)?;
        for pair in spare.chunks_exact(2) {
            b.add_edge(pair[0], pair[1])?;
        }
        acc.union(&b.build())?
    } else {
        regular_graph(n, s - 1)?
    };
    debug_assert_eq!(g.edge_count(), bound);
    debug_assert!(g.max_degree() < s);
    Ok(g)
}

/// Splits a spanning path on an odd number of vertices into its two
/// edge-disjoint maximum matchings.
///
/// `start` orients the path: the first returned matching contains the path's
/// first edge out of `start` (and therefore covers `start`), the second
/// covers the opposite endpoint. Each matching misses exactly one endpoint.
pub fn path_two_matchings(path: &Graph, start: usize) -> Result<(Graph, Graph)> {
    let n = path.n();
    if n % 2 != 1 {
        return Err(Error::EvenOrder(n));
    }
    if start >= n {
        return Err(Error::VertexOutOfRange { vertex: start, n });
    }
    if n == 1 {
        return Ok((Graph::empty(1)?, Graph::empty(1)?));
    }
    if path.edge_count() != n - 1 {
        return Err(Error::NotAPath(format!(
            "expected {} edges, found {}",
            n - 1,
            path.edge_count()
        )));
    }
    if path.degree(start)? != 1 {
        return Err(Error::NotAnEndpoint(start));
    }

    let mut order = Vec::with_capacity(n);
    order.push(start);
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let d = path.degree(cur)?;
        if d > 2 {
            return Err(Error::NotAPath(format!("vertex {cur} has degree {d}")));
        }
        let next = path.neighbors(cur).find(|&w| w != prev);
        match next {
            Some(w) => {
                order.push(w);
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    if order.len() != n {
        return Err(Error::NotAPath(format!(
            "walk from {start} covers {} of {n} vertices",
            order.len()
        )));
    }

    let mut first = GraphBuilder::new(n)?;
    let mut second = GraphBuilder::new(n)?;
    for (i, pair) in order.windows(2).enumerate() {
        if i % 2 == 0 {
            first.add_edge(pair[0], pair[1])?;
        } else {
            second.add_edge(pair[0], pair[1])?;
        }
    }
    Ok((first.build(), second.build()))
}
