//! Explicit extremal colorings certifying the lower bounds.
//!
//! Both builders work the same way: decompose (most of) a complete graph of
//! odd order into Hamiltonian cycles, hand each color a quota of whole
//! cycles, and when a color's quota is half a cycle short, split one cycle
//! into two near-perfect matchings and share it between two colors. The star
//! sizes are first rewritten in a canonical order (even sizes ascending,
//! then odd sizes ascending) so that the splitting always pairs even sizes;
//! the finished coloring is relabeled back to the caller's order.
//!
//! Every witness is audited against its exact expected degree table before
//! it is returned. A failed audit is an internal bug, reported as
//! [`Error::AuditFailed`] rather than papered over.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arrow::{find_mono_star, MonoStar};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::factorize::{hamiltonian_decomposition, one_factorization, path_two_matchings};
use crate::formulas::{ramsey_stars, regular_threshold_g};
use crate::graph::Graph;
use crate::params::StarParams;

/// How a witness was assembled, for inspection and tests.
///
/// All slot tables are indexed by *canonical* color (see `params`);
/// `color_map[a]` gives the 1-based color the caller sees for canonical
/// index `a`.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessPlan {
    pub params: StarParams,
    pub color_map: Vec<usize>,
    pub n: usize,
    /// Regularity of the host for the regular witnesses, `None` for the
    /// star-critical host, which is deliberately irregular.
    pub host_degree: Option<usize>,
    /// The vertex whose star is pruned in the star-critical witness.
    pub distinguished: Option<usize>,
    /// Endpoints of the split edges, in canonical color order.
    pub special_vertices: Vec<usize>,
    /// Edges carved out of the split cycles: deleted from the host in the
    /// star-critical construction, rerouted to the last paired color in the
    /// regular ones.
    pub split_edges: Vec<(usize, usize)>,
    /// Whole Hamiltonian cycles assigned to each canonical color.
    pub cycles_by_color: Vec<Vec<usize>>,
    /// One-factor indices per canonical color (even-order branch only).
    pub matchings_by_color: Vec<Vec<usize>>,
}

/// Everything a certificate check can say about one coloring.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub n: usize,
    pub t: usize,
    pub star_free: bool,
    /// Every (vertex, color) whose class degree reaches the forbidden star.
    pub violations: Vec<MonoStar>,
    pub host_degrees: Vec<usize>,
    pub host_regularity: Option<usize>,
    pub class_edge_counts: Vec<usize>,
    pub class_max_degrees: Vec<usize>,
}

/// Checks `c` against the stars of `p` and summarizes its shape.
pub fn audit_witness(c: &EdgeColoring, p: &StarParams) -> Result<AuditReport> {
    if c.t() != p.t() {
        return Err(Error::ColorCountMismatch {
            got: c.t(),
            want: p.t(),
        });
    }
    let table = c.color_degree_table();
    let m = p.sizes();
    let mut violations = Vec::new();
    // Vertex-major order, matching the scan order of `find_mono_star`.
    #[allow(clippy::needless_range_loop)]
    for v in 0..c.host().n() {
        for (i, &mi) in m.iter().enumerate() {
            if table[i][v] >= mi {
                violations.push(MonoStar {
                    center: v,
                    color: i + 1,
                });
            }
        }
    }
    let class_edge_counts = (1..=c.t())
        .map(|i| c.color_class(i).map(|g| g.edge_count()))
        .collect::<Result<_>>()?;
    Ok(AuditReport {
        n: c.host().n(),
        t: c.t(),
        star_free: violations.is_empty(),
        violations,
        host_degrees: c.host().degrees(),
        host_regularity: c.host().regularity(),
        class_edge_counts,
        class_max_degrees: table
            .iter()
            .map(|row| row.iter().copied().max().unwrap_or(0))
            .collect(),
    })
}

/// Largest degree of a regular graph on `n` vertices that can avoid
/// arrowing: one below the regular threshold, stepped down once more when
/// that degree has odd parity on an odd order and so is not realizable.
pub fn max_nonarrowing_regular_degree(p: &StarParams, n: usize) -> Result<usize> {
    let g = regular_threshold_g(p, n)?.value;
    let mut d = g - 1;
    if n % 2 == 1 && d % 2 == 1 {
        d -= 1;
    }
    Ok(d)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::AuditFailed(msg.into()))
    }
}

/// `map[a]` = 1-based output color for canonical index `a`, matching sizes
/// stably so relabeling restores the caller's parameter order.
fn color_permutation(original: &StarParams, canonical: &StarParams) -> Vec<usize> {
    let mut used = vec![false; original.t()];
    canonical
        .sizes()
        .iter()
        .map(|&size| {
            let j = original
                .sizes()
                .iter()
                .enumerate()
                .position(|(j, &s)| s == size && !used[j])
                .expect("canonical sizes are a permutation of the original");
            used[j] = true;
            j + 1
        })
        .collect()
}

fn graph_minus_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let gone = (u.min(v), u.max(v));
    Graph::from_edges(g.n(), g.edges().iter().copied().filter(|&e| e != gone))
}

/// Picks one edge from each cycle so that all picked edges are pairwise
/// vertex-disjoint, preferring lexicographically small edges. Backtracks
/// across cycles, so it only fails when no such selection exists at all.
fn choose_disjoint_edges(cycles: &[Graph]) -> Option<Vec<(usize, usize)>> {
    fn step(cycles: &[Graph], idx: usize, used: &mut u64, out: &mut Vec<(usize, usize)>) -> bool {
        if idx == cycles.len() {
            return true;
        }
        for &(a, b) in cycles[idx].edges() {
            let mask = 1u64 << a | 1u64 << b;
            if *used & mask == 0 {
                *used |= mask;
                out.push((a, b));
                if step(cycles, idx + 1, used, out) {
                    return true;
                }
                out.pop();
                *used &= !mask;
            }
        }
        false
    }
    let mut out = Vec::with_capacity(cycles.len());
    let mut used = 0u64;
    if step(cycles, 0, &mut used, &mut out) {
        Some(out)
    } else {
        None
    }
}

/// Edge triples accumulated per canonical color, then relabeled and checked.
struct ClassSet {
    n: usize,
    triples: Vec<(usize, usize, usize)>,
}

impl ClassSet {
    fn new(n: usize) -> Self {
        ClassSet {
            n,
            triples: Vec::new(),
        }
    }

    fn add_graph(&mut self, canon_color: usize, g: &Graph) {
        for &(u, v) in g.edges() {
            self.triples.push((u, v, canon_color));
        }
    }

    fn add_edge(&mut self, canon_color: usize, u: usize, v: usize) {
        self.triples.push((u.min(v), u.max(v), canon_color));
    }

    fn into_coloring(self, t: usize, color_map: &[usize]) -> Result<EdgeColoring> {
        EdgeColoring::from_colored_edges(
            self.n,
            t,
            self.triples
                .into_iter()
                .map(|(u, v, a)| (u, v, color_map[a])),
        )
    }
}

/// Compares the canonical-color degree table of `cert` against `expected`
/// (also in canonical order) and confirms the coloring is star-free for the
/// caller's parameters.
fn audit_exact(
    cert: &EdgeColoring,
    original: &StarParams,
    color_map: &[usize],
    expected: &[Vec<usize>],
) -> Result<()> {
    let table = cert.color_degree_table();
    for (a, want) in expected.iter().enumerate() {
        let got = &table[color_map[a] - 1];
        ensure(
            got == want,
            format!(
                "class {} degree table mismatch: got {got:?}, want {want:?}",
                a + 1
            ),
        )?;
    }
    ensure(
        find_mono_star(cert, original)?.is_none(),
        "assembled witness contains a monochromatic star",
    )
}

/// Extremal coloring behind the star-critical number when at least two star
/// sizes are even (and evenly many are): a coloring of `K_n` minus a small
/// star at vertex 0 in which no color holds a forbidden star, for
/// `n` the star Ramsey number. Other parity patterns have star-critical
/// number 1 and no comparable construction, reported as
/// [`Error::EvenBranchRequired`].
pub fn star_critical_witness_with_plan(p: &StarParams) -> Result<(EdgeColoring, WitnessPlan)> {
    let canon = p.canonical();
    let k = canon.even_count();
    if k < 2 || k % 2 == 1 {
        return Err(Error::EvenBranchRequired(k));
    }
    let t = canon.t();
    let m = canon.sizes().to_vec();
    let n = ramsey_stars(&canon);
    let cycles = hamiltonian_decomposition(n)?;

    // Whole-cycle quotas: the first k/2 colors also own a split cycle.
    let mut cycles_by_color: Vec<Vec<usize>> = vec![Vec::new(); t];
    let mut next = 0usize;
    for a in 0..t {
        let want = if a < k / 2 {
            m[a] / 2
        } else if a < k {
            m[a] / 2 - 1
        } else {
            (m[a] - 1) / 2
        };
        for _ in 0..want {
            cycles_by_color[a].push(next);
            next += 1;
        }
    }
    ensure(
        next == cycles.cycle_count(),
        "cycle quotas must consume the whole decomposition",
    )?;

    let v = 0usize;
    let mut classes = ClassSet::new(n);
    let mut specials = Vec::with_capacity(k / 2);
    let mut split_edges = Vec::with_capacity(k / 2);
    for (a, cycle_ids) in cycles_by_color.iter().enumerate().take(k / 2) {
        let cyc = cycles.cycle_graph(cycle_ids[0])?;
        let u = cyc
            .neighbors(v)
            .min()
            .expect("a spanning cycle visits vertex 0");
        let path = graph_minus_edge(&cyc, v, u)?;
        let (covers_v, misses_v) = path_two_matchings(&path, v)?;
        classes.add_graph(a, &covers_v);
        classes.add_graph(a + k / 2, &misses_v);
        specials.push(u);
        split_edges.push((v, u));
    }
    for (a, cycle_ids) in cycles_by_color.iter().enumerate() {
        let extras = if a < k / 2 {
            &cycle_ids[1..]
        } else {
            &cycle_ids[..]
        };
        for &idx in extras {
            classes.add_graph(a, &cycles.cycle_graph(idx)?);
        }
    }

    let color_map = color_permutation(p, &canon);
    let cert = classes.into_coloring(t, &color_map)?;

    // Expected degrees: the split-cycle owners miss their far endpoint
    // once, their partners miss vertex 0 once, whole-cycle colors are
    // regular.
    let mut expected = vec![Vec::new(); t];
    for a in 0..t {
        let mut row = vec![m[a] - 1; n];
        if a < k / 2 {
            row[specials[a]] = m[a] - 2;
        } else if a < k {
            row[v] = m[a] - 2;
        }
        expected[a] = row;
    }
    audit_exact(&cert, p, &color_map, &expected)?;
    ensure(
        cert.host().edge_count() == n * (n - 1) / 2 - k / 2,
        "host must be the complete graph minus the split edges",
    )?;
    ensure(
        specials.iter().collect::<BTreeSet<_>>().len() == k / 2,
        "split edges must leave distinct far endpoints",
    )?;

    let plan = WitnessPlan {
        params: canon,
        color_map,
        n,
        host_degree: None,
        distinguished: Some(v),
        special_vertices: specials,
        split_edges,
        cycles_by_color,
        matchings_by_color: vec![Vec::new(); t],
    };
    Ok((cert, plan))
}

pub fn star_critical_witness(p: &StarParams) -> Result<EdgeColoring> {
    star_critical_witness_with_plan(p).map(|(c, _)| c)
}

/// A regular graph of the largest non-arrowing degree on `n` vertices,
/// together with a star-free coloring of it.
///
/// Four assemblies cover the parity cases: even orders use one-factors; odd
/// orders use whole Hamiltonian cycles when every size is odd, and
/// split cycles otherwise. With evenly many even sizes the split leaves the
/// last even color half a matching short, which only works out when its
/// size is at least 4: all-even-sizes-equal-2 parameter lists on odd orders
/// are reported as [`Error::DegenerateBranch`] (an exhaustive search can
/// still find witnesses there; this builder only refuses to guess).
pub fn regular_nonarrowing_witness_with_plan(
    p: &StarParams,
    n: usize,
) -> Result<(EdgeColoring, WitnessPlan)> {
    let canon = p.canonical();
    let t = canon.t();
    let m = canon.sizes().to_vec();
    let k = canon.even_count();
    let d = max_nonarrowing_regular_degree(&canon, n)?;
    let color_map = color_permutation(p, &canon);

    let mut cycles_by_color: Vec<Vec<usize>> = vec![Vec::new(); t];
    let mut matchings_by_color: Vec<Vec<usize>> = vec![Vec::new(); t];
    let mut specials: Vec<usize> = Vec::new();
    let mut split_edges: Vec<(usize, usize)> = Vec::new();
    let mut classes = ClassSet::new(n);
    let mut expected: Vec<Vec<usize>> = (0..t).map(|a| vec![m[a] - 1; n]).collect();

    if d == 0 {
        // Only (2,2) on odd orders lands here: the empty graph is the best
        // regular graph that avoids arrowing.
        expected = vec![vec![0; n]; t];
    } else if n.is_multiple_of(2) {
        let factors = one_factorization(n)?;
        let mut next = 0usize;
        for a in 0..t {
            for _ in 0..m[a] - 1 {
                matchings_by_color[a].push(next);
                classes.add_graph(a, &factors.parts()[next]);
                next += 1;
            }
        }
        ensure(next == d, "one-factor quotas must sum to the host degree")?;
    } else if k == 0 {
        let cycles = hamiltonian_decomposition(n)?;
        let mut next = 0usize;
        for a in 0..t {
            for _ in 0..(m[a] - 1) / 2 {
                cycles_by_color[a].push(next);
                classes.add_graph(a, &cycles.cycle_graph(next)?);
                next += 1;
            }
        }
        ensure(
            2 * next == d,
            "cycle quotas must sum to half the host degree",
        )?;
    } else {
        // Odd order with k >= 1 even sizes: split cycles between paired
        // colors and reroute the leftover edges to the last even color.
        let pairs = if k % 2 == 1 { (k - 1) / 2 } else { k / 2 };
        let partner = |a: usize| if k % 2 == 1 { k - 2 - a } else { a + k / 2 };
        if k.is_multiple_of(2) && m[k - 1] == 2 {
            return Err(Error::DegenerateBranch(format!(
                "on odd orders with evenly many even sizes the last even \
                 color gives up a full matching, which needs its star size \
                 to be at least 4; {canon} has largest even size 2"
            )));
        }
        let cycles = hamiltonian_decomposition(n)?;
        let mut next = 0usize;
        for a in 0..t {
            let want = if a < pairs {
                m[a] / 2
            } else if a < k {
                m[a] / 2 - 1 - usize::from(k.is_multiple_of(2) && a == k - 1)
            } else {
                (m[a] - 1) / 2
            };
            for _ in 0..want {
                cycles_by_color[a].push(next);
                next += 1;
            }
        }
        ensure(
            2 * next == d,
            "cycle quotas must sum to half the host degree",
        )?;

        let split_cycles = (0..pairs)
            .map(|a| cycles.cycle_graph(cycles_by_color[a][0]))
            .collect::<Result<Vec<_>>>()?;
        let picked = choose_disjoint_edges(&split_cycles).ok_or_else(|| {
            Error::ConstructionInfeasible(
                "no vertex-disjoint choice of one edge per split cycle".into(),
            )
        })?;
        specials = vec![usize::MAX; if k % 2 == 1 { k - 1 } else { k }];
        for (a, &(lo, hi)) in picked.iter().enumerate() {
            let path = graph_minus_edge(&split_cycles[a], lo, hi)?;
            let (covers_hi, covers_lo) = path_two_matchings(&path, hi)?;
            classes.add_graph(a, &covers_hi);
            classes.add_graph(partner(a), &covers_lo);
            classes.add_edge(k - 1, lo, hi);
            specials[a] = lo;
            specials[partner(a)] = hi;
            split_edges.push((lo, hi));
        }
        for (a, cycle_ids) in cycles_by_color.iter().enumerate() {
            let extras = if a < pairs {
                &cycle_ids[1..]
            } else {
                &cycle_ids[..]
            };
            for &idx in extras {
                classes.add_graph(a, &cycles.cycle_graph(idx)?);
            }
        }

        for a in 0..k {
            if a != k - 1 {
                expected[a][specials[a]] = m[a] - 2;
            }
        }
        if k % 2 == 1 {
            // The last even color holds the split edges and its own whole
            // cycles; everyone sits one below its cap except the split
            // endpoints.
            expected[k - 1] = vec![m[k - 1] - 2; n];
            for &u in &specials {
                expected[k - 1][u] = m[k - 1] - 1;
            }
        } else {
            // Here the last even color also takes one near-perfect
            // matching, missing its own special vertex.
            expected[k - 1] = vec![m[k - 1] - 3; n];
            for &u in &specials[..k - 1] {
                expected[k - 1][u] = m[k - 1] - 2;
            }
        }
    }

    let cert = classes.into_coloring(t, &color_map)?;
    audit_exact(&cert, p, &color_map, &expected)?;
    ensure(
        cert.host().regularity() == Some(d),
        format!("host must be {d}-regular"),
    )?;

    let plan = WitnessPlan {
        params: canon,
        color_map,
        n,
        host_degree: Some(d),
        distinguished: None,
        special_vertices: specials,
        split_edges,
        cycles_by_color,
        matchings_by_color,
    };
    Ok((cert, plan))
}

pub fn regular_nonarrowing_witness(p: &StarParams, n: usize) -> Result<EdgeColoring> {
    regular_nonarrowing_witness_with_plan(p, n).map(|(c, _)| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::json::coloring_to_json;

    fn p(sizes: &[usize]) -> StarParams {
        StarParams::new(sizes.to_vec()).unwrap()
    }

    #[test]
    fn two_two_witness_is_the_golden_triangle_minus_an_edge() {
        let (cert, plan) = star_critical_witness_with_plan(&p(&[2, 2])).unwrap();
        assert_eq!(
            coloring_to_json(&cert),
            r#"{"n":3,"t":2,"edges":[[0,2,1],[1,2,2]]}"#
        );
        assert_eq!(plan.n, 3);
        assert_eq!(plan.distinguished, Some(0));
        assert_eq!(plan.split_edges, vec![(0, 1)]);
        // Host degrees: pruned vertex 1, its lost neighbor 1, the rest 2.
        assert_eq!(cert.host().degrees(), vec![1, 1, 2]);
    }

    #[test]
    fn star_critical_witness_shapes() {
        // (2,2,3): K_5 minus one edge at vertex 0.
        let (cert, plan) = star_critical_witness_with_plan(&p(&[2, 2, 3])).unwrap();
        assert_eq!(cert.host().n(), 5);
        assert_eq!(cert.host().degree(0).unwrap(), 3);
        assert_eq!(cert.host().edge_count(), 9);
        let report = audit_witness(&cert, &p(&[2, 2, 3])).unwrap();
        assert!(report.star_free);
        assert_eq!(report.class_max_degrees, vec![1, 1, 2]);
        assert_eq!(plan.cycles_by_color, vec![vec![0], vec![], vec![1]]);

        // (2,2,2,2): two split cycles, vertex 0 keeps degree 2.
        let (cert, _) = star_critical_witness_with_plan(&p(&[2, 2, 2, 2])).unwrap();
        assert_eq!(cert.host().n(), 5);
        assert_eq!(cert.host().degree(0).unwrap(), 2);
        assert!(audit_witness(&cert, &p(&[2, 2, 2, 2])).unwrap().star_free);
    }

    #[test]
    fn star_critical_needs_evenly_many_even_sizes() {
        assert!(matches!(
            star_critical_witness(&p(&[2, 3])),
            Err(Error::EvenBranchRequired(1))
        ));
        assert!(matches!(
            star_critical_witness(&p(&[3, 3])),
            Err(Error::EvenBranchRequired(0))
        ));
    }

    #[test]
    fn star_critical_relabels_to_the_given_color_order() {
        // (3,2,2) canonicalizes to (2,2,3); the witness must come back in
        // the caller's order, with color 1 the size-3 star.
        let given = p(&[3, 2, 2]);
        let (cert, plan) = star_critical_witness_with_plan(&given).unwrap();
        assert_eq!(plan.color_map, vec![2, 3, 1]);
        let report = audit_witness(&cert, &given).unwrap();
        assert!(report.star_free);
        assert_eq!(report.class_max_degrees, vec![2, 1, 1]);
    }

    #[test]
    fn regular_witness_even_order_uses_one_factors() {
        let (cert, plan) = regular_nonarrowing_witness_with_plan(&p(&[3, 3]), 6).unwrap();
        assert_eq!(cert.host().regularity(), Some(4));
        for i in 1..=2 {
            assert_eq!(cert.color_class(i).unwrap().regularity(), Some(2));
        }
        assert_eq!(plan.host_degree, Some(4));
        assert_eq!(plan.matchings_by_color, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn regular_witness_odd_order_all_odd_sizes_uses_cycles() {
        let (cert, _) = regular_nonarrowing_witness_with_plan(&p(&[3, 3]), 7).unwrap();
        assert_eq!(cert.host().regularity(), Some(4));
        for i in 1..=2 {
            assert_eq!(cert.color_class(i).unwrap().regularity(), Some(2));
        }
    }

    #[test]
    fn regular_witness_one_even_size_reroutes_nothing() {
        // (2,3) on 5 vertices: the even color ends up empty and the odd
        // color takes one whole cycle.
        let cert = regular_nonarrowing_witness(&p(&[2, 3]), 5).unwrap();
        assert_eq!(cert.host().regularity(), Some(2));
        assert_eq!(cert.color_class(1).unwrap().edge_count(), 0);
        assert_eq!(cert.color_class(2).unwrap().regularity(), Some(2));
    }

    #[test]
    fn regular_witness_three_even_sizes_splits_one_cycle() {
        let (cert, plan) = regular_nonarrowing_witness_with_plan(&p(&[2, 2, 2]), 5).unwrap();
        assert_eq!(cert.host().regularity(), Some(2));
        // One split cycle: two near-perfect matchings and a single edge.
        assert_eq!(plan.split_edges.len(), 1);
        assert_eq!(cert.color_class(3).unwrap().edge_count(), 1);
        assert!(audit_witness(&cert, &p(&[2, 2, 2])).unwrap().star_free);
    }

    #[test]
    fn regular_witness_paired_even_sizes_hand_checked() {
        // (2,4) on 5 vertices: the split cycle is (4,0,1,3,2), the split
        // edge the lexicographically first one, and the two matchings land
        // exactly here.
        let (cert, plan) = regular_nonarrowing_witness_with_plan(&p(&[2, 4]), 5).unwrap();
        assert_eq!(plan.split_edges, vec![(0, 1)]);
        let class1: Vec<_> = cert.color_class(1).unwrap().edges().to_vec();
        let class2: Vec<_> = cert.color_class(2).unwrap().edges().to_vec();
        assert_eq!(class1, vec![(1, 3), (2, 4)]);
        assert_eq!(class2, vec![(0, 1), (0, 4), (2, 3)]);
        assert_eq!(cert.host().regularity(), Some(2));
    }

    #[test]
    fn regular_witness_smallest_case_is_empty() {
        let cert = regular_nonarrowing_witness(&p(&[2, 2]), 5).unwrap();
        assert_eq!(cert.host().edge_count(), 0);
        assert_eq!(cert.host().n(), 5);
    }

    #[test]
    fn regular_witness_degenerate_branch_is_reported() {
        assert!(matches!(
            regular_nonarrowing_witness(&p(&[2, 2, 3]), 5),
            Err(Error::DegenerateBranch(_))
        ));
    }

    #[test]
    fn regular_witness_rejects_orders_below_the_ramsey_number() {
        assert!(matches!(
            regular_nonarrowing_witness(&p(&[3, 3]), 5),
            Err(Error::BelowRamsey { n: 5, r: 6 })
        ));
    }

    #[test]
    fn witnesses_survive_the_exhaustive_decision() {
        use crate::arrow::{arrows_decision, SearchBudget};
        let budget = SearchBudget::default();
        for sizes in [vec![2, 2], vec![2, 2, 3]] {
            let params = p(&sizes);
            let cert = star_critical_witness(&params).unwrap();
            let verdict = arrows_decision(cert.host(), &params, &budget).unwrap();
            assert!(!verdict.arrows(), "{params}");
        }
        for (sizes, n) in [(vec![3, 3], 6), (vec![2, 3], 5), (vec![2, 4], 5)] {
            let params = p(&sizes);
            let cert = regular_nonarrowing_witness(&params, n).unwrap();
            let verdict = arrows_decision(cert.host(), &params, &budget).unwrap();
            assert!(!verdict.arrows(), "{params} on {n}");
        }
    }

    #[test]
    fn witness_degrees_match_the_planned_quotas_on_a_grid() {
        // Every parameter list with t <= 3, sizes <= 5 and evenly many even
        // sizes must produce a clean star-critical witness; every list at
        // all must produce clean regular witnesses (or an honest error) on
        // the first few feasible orders.
        let mut lists: Vec<Vec<usize>> = Vec::new();
        for a in 2..=5usize {
            for b in 2..=5usize {
                lists.push(vec![a, b]);
                for c in 2..=5usize {
                    lists.push(vec![a, b, c]);
                }
            }
        }
        for sizes in lists {
            let params = p(&sizes);
            let k = params.even_count();
            if k >= 2 && k.is_multiple_of(2) {
                let (cert, _) = star_critical_witness_with_plan(&params)
                    .unwrap_or_else(|e| panic!("star-critical {params}: {e}"));
                let report = audit_witness(&cert, &params).unwrap();
                assert!(report.star_free, "{params}");
            }
            let r = ramsey_stars(&params);
            for n in r..r + 3 {
                match regular_nonarrowing_witness(&params, n) {
                    Ok(cert) => {
                        let report = audit_witness(&cert, &params).unwrap();
                        assert!(report.star_free, "{params} on {n}");
                        let d = max_nonarrowing_regular_degree(&params, n).unwrap();
                        assert_eq!(report.host_regularity, Some(d), "{params} on {n}");
                    }
                    Err(Error::DegenerateBranch(_)) => {
                        let canon = params.canonical();
                        assert!(n % 2 == 1 && k >= 2 && k.is_multiple_of(2));
                        assert_eq!(canon.sizes()[k - 1], 2, "{params} on {n}");
                    }
                    Err(e) => panic!("regular {params} on {n}: {e}"),
                }
            }
        }
    }
}
