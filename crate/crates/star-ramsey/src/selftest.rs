//! One runnable suite tying the whole crate together.
//!
//! Nine independent checks, each pitting two implementations against each
//! other: the closed forms against a from-scratch restatement and against
//! exhaustive search, the witness builders against the decision engine, the
//! decompositions against brute-force maxima, and the star detector against
//! a naive recount. A criterion never fails silently; its `detail` names the
//! first mismatch.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arrow::{
    find_mono_star, min_degree_search, ramsey_search, regular_ramsey_search_detailed,
    star_critical_search_detailed, SearchBudget,
};
use crate::coloring::EdgeColoring;
use crate::construct::{
    audit_witness, max_nonarrowing_regular_degree, regular_nonarrowing_witness,
    star_critical_witness_with_plan,
};
use crate::error::{Error, Result};
use crate::factorize::{
    hamiltonian_decomposition, max_star_free_graph, one_factorization, star_free_edge_bound,
};
use crate::formulas::{
    min_degree_threshold_f, ramsey_stars, regular_ramsey_stars, regular_threshold_g,
    star_critical_stars, threshold_chain, Branch,
};
use crate::graph::Graph;
use crate::params::StarParams;

/// Verdict of one self-test criterion.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub const CRITERIA: [(usize, &str); 9] = [
    (1, "closed-form grid"),
    (2, "complete-graph scan"),
    (3, "star-critical scan"),
    (4, "regular-graph scan"),
    (5, "minimum-degree scan"),
    (6, "witness audits"),
    (7, "decomposition identities"),
    (8, "edge-count bound"),
    (9, "mono-star fuzz"),
];

/// Runs one criterion by id (1 through 9).
pub fn run_criterion(id: usize) -> Result<CriterionOutcome> {
    let (_, name) = *CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .ok_or(Error::NotFound(id))?;
    let outcome = match id {
        1 => formula_grid(),
        2 => complete_scan(),
        3 => star_critical_scan(),
        4 => regular_scan(),
        5 => min_degree_scan(),
        6 => witness_audits(),
        7 => decomposition_identities(),
        8 => edge_count_bound(),
        _ => mono_star_fuzz(),
    };
    let (passed, detail) = match outcome {
        Ok(detail) => (true, detail),
        Err(e) => (false, e.to_string()),
    };
    Ok(CriterionOutcome {
        id,
        name,
        passed,
        detail,
    })
}

/// Runs all nine criteria in order.
pub fn run_all() -> Vec<CriterionOutcome> {
    CRITERIA
        .iter()
        .map(|&(id, _)| run_criterion(id).expect("criterion ids are exhaustive"))
        .collect()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::AuditFailed(msg()))
    }
}

/// Calls `f` on every list of length `t` over `lo..=hi`.
fn for_each_list(
    t: usize,
    lo: usize,
    hi: usize,
    f: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let mut m = vec![lo; t];
    loop {
        f(&m)?;
        let mut i = 0;
        loop {
            if i == t {
                return Ok(());
            }
            m[i] += 1;
            if m[i] <= hi {
                break;
            }
            m[i] = lo;
            i += 1;
        }
    }
}

/// From-scratch restatement of the closed forms, deliberately structured
/// differently from the library path: everything in terms of the raw list.
fn reference_thresholds(sizes: &[usize]) -> (usize, usize, usize) {
    let t = sizes.len();
    let sum: usize = sizes.iter().sum();
    let evens = sizes.iter().filter(|&&x| x % 2 == 0).count();
    let paired = evens >= 2 && evens % 2 == 0;
    if paired {
        (sum - t + 1, sum - t + 1 - evens / 2, sum - t)
    } else {
        (sum - t + 2, 1, sum - t + 1)
    }
}

fn reference_g(sizes: &[usize], n: usize) -> usize {
    let t = sizes.len();
    let sum: usize = sizes.iter().sum();
    let evens = sizes.iter().filter(|&&x| x % 2 == 0).count();
    if n % 2 == 1 && evens >= 2 && evens % 2 == 0 {
        sum - t
    } else {
        sum - t + 1
    }
}

fn reference_f(sizes: &[usize], n: usize) -> usize {
    let t = sizes.len();
    let sum: usize = sizes.iter().sum();
    let evens = sizes.iter().filter(|&&x| x % 2 == 0).count();
    if evens == 0 || n.is_multiple_of(2) {
        sum - t + 1
    } else {
        sum - t
    }
}

fn formula_grid() -> Result<String> {
    let mut count = 0usize;
    for t in 2..=4 {
        for_each_list(t, 2, 6, &mut |sizes| {
            count += 1;
            let p = StarParams::new(sizes.to_vec())?;
            let (want_r, want_rs, want_rr) = reference_thresholds(sizes);
            let r = ramsey_stars(&p);
            check(r == want_r, || {
                format!("{p}: Ramsey number {r}, restatement {want_r}")
            })?;
            let rs = star_critical_stars(&p);
            check(rs == want_rs, || {
                format!("{p}: star-critical {rs}, restatement {want_rs}")
            })?;
            let rr = regular_ramsey_stars(&p);
            check(rr == want_rr, || {
                format!("{p}: regular number {rr}, restatement {want_rr}")
            })?;
            let (c_rs, c_rr, c_r) = threshold_chain(&p)?;
            check((c_rs, c_rr, c_r) == (rs, rr, r), || {
                format!("{p}: chain values diverge")
            })?;
            for n in r..=r + 1 {
                let g = regular_threshold_g(&p, n)?;
                check(g.value == reference_g(sizes, n), || {
                    format!(
                        "{p} at n={n}: g {}, restatement {}",
                        g.value,
                        reference_g(sizes, n)
                    )
                })?;
                let even_pairs = p.even_count() >= 2 && p.even_count() % 2 == 0;
                let want_branch = if n % 2 == 1 && even_pairs {
                    Branch::OddNEvenK2
                } else {
                    Branch::Otherwise
                };
                check(g.branch == want_branch, || {
                    format!("{p} at n={n}: g branch mislabeled")
                })?;
                let f = min_degree_threshold_f(&p, n)?;
                check(f.value == reference_f(sizes, n), || {
                    format!(
                        "{p} at n={n}: f {}, restatement {}",
                        f.value,
                        reference_f(sizes, n)
                    )
                })?;
                let want_branch = if p.even_count() == 0 || n % 2 == 0 {
                    Branch::K0OrEvenN
                } else {
                    Branch::Otherwise
                };
                check(f.branch == want_branch, || {
                    format!("{p} at n={n}: f branch mislabeled")
                })?;
            }
            let g_at_r = regular_threshold_g(&p, r)?.value;
            check(g_at_r == rr, || {
                format!("{p}: regular threshold at the Ramsey number is {g_at_r}, not {rr}")
            })?;
            Ok(())
        })?;
    }
    Ok(format!(
        "{count} parameter lists match an independent restatement"
    ))
}

fn complete_scan() -> Result<String> {
    let budget = SearchBudget::default();
    let cases: &[&[usize]] = &[&[2, 2], &[2, 3], &[3, 3], &[2, 2, 2]];
    for sizes in cases {
        let p = StarParams::new(sizes.to_vec())?;
        let want = ramsey_stars(&p);
        let got = ramsey_search(&p, want + 2, &budget)?;
        check(got == want, || {
            format!("{p}: scan found {got}, formula says {want}")
        })?;
    }
    Ok(format!(
        "{} Ramsey numbers re-derived by exhaustive search",
        cases.len()
    ))
}

fn star_critical_scan() -> Result<String> {
    let budget = SearchBudget::default();
    let cases: &[&[usize]] = &[&[2, 2], &[3, 3], &[2, 2, 3]];
    for sizes in cases {
        let p = StarParams::new(sizes.to_vec())?;
        let want = star_critical_stars(&p);
        let out = star_critical_search_detailed(&p, &budget)?;
        check(out.value == want, || {
            format!("{p}: scan found {}, formula says {want}", out.value)
        })?;
        check(out.certificates.len() == want, || {
            format!("{p}: expected a certificate below every kept degree")
        })?;
    }
    Ok(format!(
        "{} star-critical numbers re-derived by exhaustive search",
        cases.len()
    ))
}

fn regular_scan() -> Result<String> {
    let budget = SearchBudget::default();
    let cases: &[&[usize]] = &[&[2, 2], &[2, 3], &[2, 2, 2]];
    for sizes in cases {
        let p = StarParams::new(sizes.to_vec())?;
        let want = regular_ramsey_stars(&p);
        let out = regular_ramsey_search_detailed(&p, &budget)?;
        check(out.value == want, || {
            format!("{p}: scan found {}, formula says {want}", out.value)
        })?;
        check(out.exists[want], || {
            format!("{p}: threshold degree is not realizable")
        })?;
        check(
            (want..out.all_arrow.len()).all(|r| out.all_arrow[r]),
            || format!("{p}: some degree above the threshold fails to arrow"),
        )?;
    }
    Ok(format!(
        "{} regular thresholds re-derived by exhaustive search",
        cases.len()
    ))
}

fn min_degree_scan() -> Result<String> {
    let budget = SearchBudget::default();
    let cases: &[(&[usize], usize)] = &[(&[2, 2], 4), (&[2, 2], 5), (&[2, 3], 5)];
    for &(sizes, n) in cases {
        let p = StarParams::new(sizes.to_vec())?;
        let want = min_degree_threshold_f(&p, n)?.value;
        let got = min_degree_search(&p, n, &budget)?;
        check(got == want, || {
            format!("{p} at n={n}: scan found {got}, formula says {want}")
        })?;
    }
    Ok(format!(
        "{} minimum-degree thresholds re-derived by exhaustive search",
        cases.len()
    ))
}

fn witness_audits() -> Result<String> {
    let mut built = 0usize;
    let mut degenerate = 0usize;
    for t in 2..=4 {
        for_each_list(t, 2, 6, &mut |sizes| {
            let p = StarParams::new(sizes.to_vec())?;
            let k = p.even_count();
            let n = ramsey_stars(&p);
            if k >= 2 && k % 2 == 0 {
                let (cert, plan) = star_critical_witness_with_plan(&p)?;
                let report = audit_witness(&cert, &p)?;
                check(report.star_free, || {
                    format!("{p}: star-critical witness not star-free")
                })?;
                check(cert.host().edge_count() == n * (n - 1) / 2 - k / 2, || {
                    format!("{p}: star-critical host has the wrong size")
                })?;
                check(cert.host().degree(0)? == n - 1 - k / 2, || {
                    format!("{p}: pruned vertex keeps the wrong degree")
                })?;
                for &u in &plan.special_vertices {
                    check(cert.host().degree(u)? == n - 2, || {
                        format!("{p}: split endpoint {u} has the wrong host degree")
                    })?;
                }
                built += 1;
            }
            for order in n..n + 3 {
                match regular_nonarrowing_witness(&p, order) {
                    Ok(cert) => {
                        let report = audit_witness(&cert, &p)?;
                        check(report.star_free, || {
                            format!("{p} on {order}: regular witness not star-free")
                        })?;
                        let d = max_nonarrowing_regular_degree(&p, order)?;
                        check(report.host_regularity == Some(d), || {
                            format!("{p} on {order}: witness is not {d}-regular")
                        })?;
                        built += 1;
                    }
                    Err(Error::DegenerateBranch(_)) => {
                        let canon = p.canonical();
                        check(
                            order % 2 == 1 && k >= 2 && k % 2 == 0 && canon.sizes()[k - 1] == 2,
                            || format!("{p} on {order}: unexpected degenerate branch"),
                        )?;
                        degenerate += 1;
                    }
                    Err(e) => return Err(e),
                }
            }
            Ok(())
        })?;
    }
    Ok(format!(
        "{built} witnesses audited clean, {degenerate} degenerate cases correctly refused"
    ))
}

fn reaches_all(g: &Graph) -> bool {
    if g.n() == 0 {
        return false;
    }
    let mut seen = 1u64;
    let mut frontier = vec![0usize];
    while let Some(v) = frontier.pop() {
        for u in g.neighbors(v) {
            if seen >> u & 1 == 0 {
                seen |= 1 << u;
                frontier.push(u);
            }
        }
    }
    seen.count_ones() as usize == g.n()
}

fn decomposition_identities() -> Result<String> {
    for n in [2usize, 4, 6, 8, 10] {
        let f = one_factorization(n)?;
        check(f.is_complete(), || {
            format!("one-factorization of K_{n} is incomplete")
        })?;
        check(f.parts().len() == n - 1, || {
            format!("one-factorization of K_{n} has the wrong factor count")
        })?;
        for part in f.parts() {
            check(part.regularity() == Some(1), || {
                format!("a factor of K_{n} is not a perfect matching")
            })?;
        }
    }
    for n in [3usize, 5, 7, 9, 11] {
        let plan = hamiltonian_decomposition(n)?;
        check(plan.cycle_count() == (n - 1) / 2, || {
            format!("cycle decomposition of K_{n} has the wrong cycle count")
        })?;
        let decomp = plan.to_decomposition()?;
        check(decomp.is_complete(), || {
            format!("cycle decomposition of K_{n} is incomplete")
        })?;
        for idx in 0..plan.cycle_count() {
            let cyc = plan.cycle_graph(idx)?;
            check(cyc.regularity() == Some(2) && reaches_all(&cyc), || {
                format!("part {idx} of K_{n} is not a spanning cycle")
            })?;
        }
    }

    // Extremal edge counts: formula vs a single sweep over all graphs.
    let mut checked = 0usize;
    for n in 2..=7usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut best = vec![0usize; n];
        for mask in 0..1u64 << pairs.len() {
            let mut deg = [0usize; 8];
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            let max_deg = deg[..n].iter().copied().max().unwrap_or(0);
            let edges = mask.count_ones() as usize;
            if edges > best[max_deg] {
                best[max_deg] = edges;
            }
        }
        for s in 1..n {
            let brute = (0..s).map(|d| best[d]).max().unwrap_or(0);
            let bound = star_free_edge_bound(n, s)?;
            check(bound == brute, || {
                format!("edge bound for order {n}, star size {s}: formula {bound}, sweep {brute}")
            })?;
            let extremal = max_star_free_graph(n, s)?;
            check(
                extremal.edge_count() == bound && extremal.max_degree() < s,
                || format!("extremal graph for order {n}, star size {s} misses the bound"),
            )?;
            checked += 1;
        }
    }
    Ok(format!(
        "factorizations of ten complete graphs verified, {checked} extremal edge counts match brute force"
    ))
}

fn edge_count_bound() -> Result<String> {
    let budget = SearchBudget::default();
    let mut checked = 0usize;
    for sizes in [&[2usize, 2] as &[usize], &[2, 2, 3]] {
        let p = StarParams::new(sizes.to_vec())?;
        let n = ramsey_stars(&p);
        let k = p.even_count();
        let cap = n * (n - 1) / 2 - k / 2;
        let out = star_critical_search_detailed(&p, &budget)?;
        let mut biggest = 0usize;
        for (kept, cert) in &out.certificates {
            let e = cert.host().edge_count();
            check(e <= cap, || {
                format!("{p}: a non-arrowing host with {kept} kept edges has {e} > {cap} edges")
            })?;
            biggest = biggest.max(e);
            checked += 1;
        }
        check(biggest == cap, || {
            format!("{p}: no non-arrowing host reaches the {cap}-edge ceiling")
        })?;
    }
    Ok(format!(
        "{checked} search certificates respect the edge ceiling, with equality attained"
    ))
}

fn mono_star_fuzz() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_C0DE);
    let rounds = 10_000usize;
    for round in 0..rounds {
        let n = rng.gen_range(1..=8usize);
        let t = rng.gen_range(2..=4usize);
        let sizes: Vec<usize> = (0..t).map(|_| rng.gen_range(2..=4usize)).collect();
        let p = StarParams::new(sizes)?;
        let mut triples = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    triples.push((u, v, rng.gen_range(1..=t)));
                }
            }
        }
        let coloring = EdgeColoring::from_colored_edges(n, t, triples.iter().copied())?;
        // Naive recount, straight off the triple list.
        let mut deg = vec![0usize; n * t];
        for &(u, v, c) in &triples {
            deg[u * t + c - 1] += 1;
            deg[v * t + c - 1] += 1;
        }
        let mut naive = None;
        'outer: for v in 0..n {
            for (i, &mi) in p.sizes().iter().enumerate() {
                if deg[v * t + i] >= mi {
                    naive = Some((v, i + 1));
                    break 'outer;
                }
            }
        }
        let got = find_mono_star(&coloring, &p)?.map(|s| (s.center, s.color));
        check(got == naive, || {
            format!("round {round}: detector found {got:?}, recount found {naive:?}")
        })?;
    }
    Ok(format!(
        "{rounds} random colorings agree with a naive recount"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_criterion_passes() {
        for outcome in run_all() {
            assert!(
                outcome.passed,
                "criterion {} ({}) failed: {}",
                outcome.id, outcome.name, outcome.detail
            );
        }
    }

    #[test]
    fn unknown_criterion_is_an_error() {
        assert!(matches!(run_criterion(0), Err(Error::NotFound(0))));
        assert!(matches!(run_criterion(10), Err(Error::NotFound(10))));
    }
}
