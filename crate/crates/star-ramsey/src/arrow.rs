//! Exact arrowing decisions and the brute-force searches built on them.
//!
//! `G -> (K_{1,m_1}, ..., K_{1,m_t})` holds when every `t`-coloring of
//! `E(G)` has some vertex with `m_i` edges of color `i`. The decision
//! procedure backtracks over edges keeping one degree counter per vertex and
//! color; a branch dies the moment a counter would reach `m_i`, so any fully
//! colored leaf is a genuine star-free coloring and is returned as a
//! certificate. Exhausting the tree proves arrowing.
//!
//! The search never lies: budget exhaustion is an error, not a verdict, and
//! every `NotArrows` certificate is re-checked with [`find_mono_star`]
//! before it leaves this module.

use std::time::Instant;

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::formulas::ramsey_stars;
use crate::graph::Graph;
use crate::params::StarParams;

/// Vertex limit for full labeled-graph enumeration (`2^21` graphs at 7).
pub const ENUMERATION_LIMIT: usize = 7;

/// Caps on a single decision's backtracking search.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl SearchBudget {
    pub const DEFAULT_MAX_NODES: u64 = 100_000_000;
    pub const DEFAULT_MAX_SECONDS: f64 = 60.0;

    pub fn new(max_nodes: u64, max_seconds: f64) -> Self {
        debug_assert!(max_nodes > 0 && max_seconds > 0.0);
        SearchBudget {
            max_nodes,
            max_seconds,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: Self::DEFAULT_MAX_NODES,
            max_seconds: Self::DEFAULT_MAX_SECONDS,
        }
    }
}

/// A vertex that centers a monochromatic star.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonoStar {
    pub center: usize,
    pub color: usize,
}

/// Outcome of one arrowing decision.
#[derive(Debug, Clone)]
pub enum ArrowVerdict {
    /// Every coloring was pruned or refuted; `nodes_explored` counts the
    /// color assignments the search tried.
    Arrows { nodes_explored: u64 },
    /// A star-free coloring exists; here is one.
    NotArrows { certificate: EdgeColoring },
}

impl ArrowVerdict {
    pub fn arrows(&self) -> bool {
        matches!(self, ArrowVerdict::Arrows { .. })
    }
}

/// First vertex/color pair whose color class contains `K_{1,m_i}`, scanning
/// vertices then colors in increasing order. Cost `O(t n + e)`.
pub fn find_mono_star(c: &EdgeColoring, p: &StarParams) -> Result<Option<MonoStar>> {
    if c.t() != p.t() {
        return Err(Error::ColorCountMismatch {
            got: c.t(),
            want: p.t(),
        });
    }
    let table = c.color_degree_table();
    let m = p.sizes();
    Ok((0..c.host().n()).find_map(|v| {
        m.iter().enumerate().find_map(|(i, &mi)| {
            (table[i][v] >= mi).then(|| MonoStar {
                center: v,
                color: i + 1,
            })
        })
    }))
}

struct Searcher<'a> {
    order: Vec<(usize, usize)>,
    m: &'a [usize],
    t: usize,
    cnt: Vec<u16>,
    assign: Vec<usize>,
    forced_first: Option<usize>,
    nodes: u64,
    budget: SearchBudget,
    started: Instant,
}

impl<'a> Searcher<'a> {
    fn new(
        host: &Graph,
        p: &'a StarParams,
        budget: SearchBudget,
        forced_first: Option<usize>,
    ) -> Self {
        // High-degree endpoints first: pigeonhole contradictions surface at
        // saturated vertices, so putting their edges early fails fast.
        let mut order = host.edges().to_vec();
        let deg = host.degrees();
        order.sort_by_key(|&(u, v)| (std::cmp::Reverse(deg[u].min(deg[v])), u, v));
        let t = p.t();
        Searcher {
            assign: vec![0; order.len()],
            order,
            m: p.sizes(),
            t,
            cnt: vec![0; host.n() * t],
            forced_first,
            nodes: 0,
            budget,
            started: Instant::now(),
        }
    }

    fn dfs(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let (u, v) = self.order[depth];
        let (lo, hi) = match (depth, self.forced_first) {
            (0, Some(c)) => (c, c),
            _ => (1, self.t),
        };
        for c in lo..=hi {
            self.nodes += 1;
            if self.nodes > self.budget.max_nodes
                || (self.nodes & 0xFFF == 0
                    && self.started.elapsed().as_secs_f64() > self.budget.max_seconds)
            {
                return Err(Error::BudgetExhausted { nodes: self.nodes });
            }
            let iu = u * self.t + c - 1;
            let iv = v * self.t + c - 1;
            let cap = self.m[c - 1] as u16;
            if self.cnt[iu] + 1 < cap && self.cnt[iv] + 1 < cap {
                self.cnt[iu] += 1;
                self.cnt[iv] += 1;
                self.assign[depth] = c;
                if self.dfs(depth + 1)? {
                    return Ok(true);
                }
                self.cnt[iu] -= 1;
                self.cnt[iv] -= 1;
            }
        }
        Ok(false)
    }

    fn run(mut self, host: &Graph, p: &StarParams) -> Result<(Option<EdgeColoring>, u64)> {
        if self.dfs(0)? {
            let triples = self
                .order
                .iter()
                .zip(&self.assign)
                .map(|(&(u, v), &c)| (u, v, c));
            let cert = EdgeColoring::from_colored_edges(host.n(), p.t(), triples)?;
            assert!(
                find_mono_star(&cert, p)?.is_none(),
                "unsound certificate escaped the pruner"
            );
            Ok((Some(cert), self.nodes))
        } else {
            Ok((None, self.nodes))
        }
    }
}

fn all_sizes_equal(p: &StarParams) -> bool {
    p.sizes().windows(2).all(|w| w[0] == w[1])
}

/// Decides whether `g` arrows the stars of `p` within the given budget.
///
/// When all `m_i` coincide the first edge's color is pinned to 1; the colors
/// are interchangeable then, so this loses no colorings, only symmetry.
pub fn arrows_decision(g: &Graph, p: &StarParams, budget: &SearchBudget) -> Result<ArrowVerdict> {
    let forced = if all_sizes_equal(p) && g.edge_count() > 0 {
        Some(1)
    } else {
        None
    };
    let (cert, nodes) = Searcher::new(g, p, *budget, forced).run(g, p)?;
    Ok(match cert {
        Some(certificate) => ArrowVerdict::NotArrows { certificate },
        None => ArrowVerdict::Arrows {
            nodes_explored: nodes,
        },
    })
}

/// Same decision, with the first edge's color choices split across threads.
///
/// Every subtree runs to completion and the merge scans subtrees in color
/// order, so the verdict, the certificate and (for `Arrows`) the node count
/// all match the sequential ones exactly. Each worker gets the full budget.
pub fn arrows_decision_parallel(
    g: &Graph,
    p: &StarParams,
    budget: &SearchBudget,
    workers: usize,
) -> Result<ArrowVerdict> {
    if workers <= 1 || g.edge_count() == 0 {
        return arrows_decision(g, p, budget);
    }
    let colors: Vec<usize> = if all_sizes_equal(p) {
        vec![1]
    } else {
        (1..=p.t()).collect()
    };
    let results: Vec<Result<(Option<EdgeColoring>, u64)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = colors
            .iter()
            .map(|&c| scope.spawn(move || Searcher::new(g, p, *budget, Some(c)).run(g, p)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut total_nodes = 0u64;
    for result in results {
        match result? {
            (Some(certificate), _) => return Ok(ArrowVerdict::NotArrows { certificate }),
            (None, nodes) => total_nodes += nodes,
        }
    }
    Ok(ArrowVerdict::Arrows {
        nodes_explored: total_nodes,
    })
}

/// Result of scanning complete graphs upward until one arrows.
#[derive(Debug, Clone)]
pub struct RamseySearchOutcome {
    pub value: usize,
    /// Star-free certificates for every order below the threshold.
    pub certificates: Vec<(usize, EdgeColoring)>,
    pub nodes: u64,
}

pub fn ramsey_search_detailed(
    p: &StarParams,
    n_max: usize,
    budget: &SearchBudget,
) -> Result<RamseySearchOutcome> {
    let mut certificates = Vec::new();
    let mut nodes = 0u64;
    for n in 1..=n_max {
        match arrows_decision(&Graph::complete(n)?, p, budget)? {
            ArrowVerdict::Arrows { nodes_explored } => {
                nodes += nodes_explored;
                return Ok(RamseySearchOutcome {
                    value: n,
                    certificates,
                    nodes,
                });
            }
            ArrowVerdict::NotArrows { certificate } => certificates.push((n, certificate)),
        }
    }
    Err(Error::NotFound(n_max))
}

/// Least `N <= n_max` with `K_N -> (K_{1,m_1}, ..., K_{1,m_t})`.
pub fn ramsey_search(p: &StarParams, n_max: usize, budget: &SearchBudget) -> Result<usize> {
    ramsey_search_detailed(p, n_max, budget).map(|o| o.value)
}

/// Result of scanning how much of the last star `K_N` keeps.
#[derive(Debug, Clone)]
pub struct StarCriticalSearchOutcome {
    pub value: usize,
    /// Star-free certificates for every kept-degree below the threshold.
    pub certificates: Vec<(usize, EdgeColoring)>,
    pub nodes: u64,
}

/// Scan with the pruned star centered on `center` instead of vertex 0; the
/// answer cannot depend on the choice, which a test pins down.
pub fn star_critical_search_at(
    p: &StarParams,
    center: usize,
    budget: &SearchBudget,
) -> Result<StarCriticalSearchOutcome> {
    let big_n = ramsey_stars(p);
    if center >= big_n {
        return Err(Error::VertexOutOfRange {
            vertex: center,
            n: big_n,
        });
    }
    let others: Vec<usize> = (0..big_n).filter(|&v| v != center).collect();
    let mut certificates = Vec::new();
    let mut nodes = 0u64;
    for kept in 0..big_n {
        let mut builder = Graph::builder(big_n)?;
        for u in 0..big_n {
            for v in u + 1..big_n {
                builder.add_edge(u, v)?;
            }
        }
        for &w in &others[kept..] {
            builder.remove_edge(center, w)?;
        }
        match arrows_decision(&builder.build(), p, budget)? {
            ArrowVerdict::Arrows { nodes_explored } => {
                nodes += nodes_explored;
                return Ok(StarCriticalSearchOutcome {
                    value: kept,
                    certificates,
                    nodes,
                });
            }
            ArrowVerdict::NotArrows { certificate } => certificates.push((kept, certificate)),
        }
    }
    unreachable!("K_N must arrow at its own Ramsey number");
}

pub fn star_critical_search_detailed(
    p: &StarParams,
    budget: &SearchBudget,
) -> Result<StarCriticalSearchOutcome> {
    star_critical_search_at(p, 0, budget)
}

/// Least `s` such that `K_N` minus a star `K_{1,N-1-s}` at one vertex still
/// arrows, where `N` is the star Ramsey number.
pub fn star_critical_search(p: &StarParams, budget: &SearchBudget) -> Result<usize> {
    star_critical_search_detailed(p, budget).map(|o| o.value)
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Result<Graph> {
    Graph::from_edges(
        n,
        pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e),
    )
}

fn check_enumeration_scale(n: usize) -> Result<()> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::RefusedScale {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// Result of the exhaustive regular-graph scan on `N` vertices.
#[derive(Debug, Clone)]
pub struct RegularSearchOutcome {
    pub value: usize,
    /// `exists[r]`: some `r`-regular graph on `N` vertices exists.
    pub exists: Vec<bool>,
    /// `all_arrow[r]`: every `r`-regular graph arrows (vacuously true).
    pub all_arrow: Vec<bool>,
    /// One star-free certificate per degree that fails `all_arrow`.
    pub certificates: Vec<(usize, EdgeColoring)>,
    pub graphs_tested: u64,
    pub nodes: u64,
}

pub fn regular_ramsey_search_detailed(
    p: &StarParams,
    budget: &SearchBudget,
) -> Result<RegularSearchOutcome> {
    let big_n = ramsey_stars(p);
    check_enumeration_scale(big_n)?;
    let pairs = vertex_pairs(big_n);
    let degrees = big_n.max(1);
    let mut exists = vec![false; degrees];
    let mut all_arrow = vec![true; degrees];
    let mut certificates: Vec<(usize, EdgeColoring)> = Vec::new();
    let mut graphs_tested = 0u64;
    let mut nodes = 0u64;
    for mask in 0..1u64 << pairs.len() {
        let r = match regularity_of_mask(big_n, &pairs, mask) {
            Some(r) => r,
            None => continue,
        };
        exists[r] = true;
        if !all_arrow[r] {
            continue;
        }
        let g = graph_from_mask(big_n, &pairs, mask)?;
        graphs_tested += 1;
        match arrows_decision(&g, p, budget)? {
            ArrowVerdict::Arrows { nodes_explored } => nodes += nodes_explored,
            ArrowVerdict::NotArrows { certificate } => {
                all_arrow[r] = false;
                certificates.push((r, certificate));
            }
        }
    }
    // Least degree that exists such that everything from it upward arrows.
    let mut value = None;
    for r in (0..degrees).rev() {
        if !all_arrow[r] {
            break;
        }
        if exists[r] {
            value = Some(r);
        }
    }
    let value = value.expect("K_N is (N-1)-regular and arrows at its Ramsey number");
    Ok(RegularSearchOutcome {
        value,
        exists,
        all_arrow,
        certificates,
        graphs_tested,
        nodes,
    })
}

fn regularity_of_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Option<usize> {
    let mut deg = [0u8; crate::graph::MAX_VERTICES];
    let mut rest = mask;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        let (u, v) = pairs[b];
        deg[u] += 1;
        deg[v] += 1;
        rest &= rest - 1;
    }
    let r = deg[0];
    if deg[..n].iter().all(|&d| d == r) {
        Some(r as usize)
    } else {
        None
    }
}

/// Smallest degree `r` (reading the threshold monotonically, over degrees
/// that are realizable on `N = r(...)` vertices) from which every regular
/// graph arrows. Exhaustive over all labeled graphs; `N <= 7` only.
pub fn regular_ramsey_search(p: &StarParams, budget: &SearchBudget) -> Result<usize> {
    regular_ramsey_search_detailed(p, budget).map(|o| o.value)
}

/// Result of the exhaustive minimum-degree scan on `n` vertices.
#[derive(Debug, Clone)]
pub struct MinDegreeSearchOutcome {
    pub value: usize,
    /// A star-free coloring of a graph with the highest non-arrowing
    /// minimum degree, i.e. `value - 1`.
    pub witness: Option<EdgeColoring>,
    pub graphs_tested: u64,
    pub nodes: u64,
}

pub fn min_degree_search_detailed(
    p: &StarParams,
    n: usize,
    budget: &SearchBudget,
) -> Result<MinDegreeSearchOutcome> {
    check_enumeration_scale(n)?;
    let pairs = vertex_pairs(n);
    let mut best: Option<(usize, EdgeColoring)> = None;
    let mut graphs_tested = 0u64;
    let mut nodes = 0u64;
    for mask in 0..1u64 << pairs.len() {
        let delta = min_degree_of_mask(n, &pairs, mask);
        if let Some((d, _)) = &best {
            if delta <= *d {
                continue;
            }
        }
        let g = graph_from_mask(n, &pairs, mask)?;
        graphs_tested += 1;
        match arrows_decision(&g, p, budget)? {
            ArrowVerdict::Arrows { nodes_explored } => nodes += nodes_explored,
            ArrowVerdict::NotArrows { certificate } => best = Some((delta, certificate)),
        }
    }
    let (max_nonarrow_delta, witness) = match best {
        Some((d, w)) => (d, Some(w)),
        // Unreachable for valid params: the empty graph never arrows.
        None => (0, None),
    };
    Ok(MinDegreeSearchOutcome {
        value: max_nonarrow_delta + 1,
        witness,
        graphs_tested,
        nodes,
    })
}

fn min_degree_of_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> usize {
    let mut deg = [0u8; crate::graph::MAX_VERTICES];
    let mut rest = mask;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        let (u, v) = pairs[b];
        deg[u] += 1;
        deg[v] += 1;
        rest &= rest - 1;
    }
    deg[..n].iter().map(|&d| d as usize).min().unwrap_or(0)
}

/// Least `d` such that every graph on `n` vertices with minimum degree at
/// least `d` arrows. Exhaustive over all labeled graphs; `n <= 7` only.
pub fn min_degree_search(p: &StarParams, n: usize, budget: &SearchBudget) -> Result<usize> {
    min_degree_search_detailed(p, n, budget).map(|o| o.value)
}

/// Hunts for a `d`-regular graph on `n` vertices that does not arrow and
/// returns a star-free coloring of it. Used as the fallback when the
/// closed-form witness construction degenerates. `Err(NotFound)` means every
/// `d`-regular graph on `n` vertices arrows.
pub fn regular_nonarrowing_search(
    p: &StarParams,
    n: usize,
    d: usize,
    budget: &SearchBudget,
) -> Result<EdgeColoring> {
    check_enumeration_scale(n)?;
    let pairs = vertex_pairs(n);
    for mask in 0..1u64 << pairs.len() {
        if regularity_of_mask(n, &pairs, mask) != Some(d) {
            continue;
        }
        let g = graph_from_mask(n, &pairs, mask)?;
        if let ArrowVerdict::NotArrows { certificate } = arrows_decision(&g, p, budget)? {
            return Ok(certificate);
        }
    }
    Err(Error::NotFound(n))
}
