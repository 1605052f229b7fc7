//! Cross-checks between the pruned arrowing decision and an independent
//! brute-force enumeration, plus structural properties the decision must
//! satisfy regardless of which graph it is asked about.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use star_ramsey::arrow::{
    arrows_decision, arrows_decision_parallel, ramsey_search, star_critical_search, ArrowVerdict,
    SearchBudget,
};
use star_ramsey::{EdgeColoring, Graph, GraphBuilder, StarParams};

fn budget() -> SearchBudget {
    SearchBudget::default()
}

/// Enumerates every coloring with a base-t odometer and checks each one for
/// a monochromatic star directly, without sharing any code with the pruned
/// searcher.
fn naive_arrows(graph: &Graph, params: &StarParams) -> bool {
    let edges = graph.edges();
    let t = params.t();
    let m = params.sizes();
    let mut digits = vec![0usize; edges.len()];
    loop {
        let mut counts = vec![0usize; graph.n() * t];
        let mut star_free = true;
        'scan: for (&(u, v), &c) in edges.iter().zip(digits.iter()) {
            for vertex in [u, v] {
                let slot = vertex * t + c;
                counts[slot] += 1;
                if counts[slot] >= m[c] {
                    star_free = false;
                    break 'scan;
                }
            }
        }
        if star_free {
            return false;
        }
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return true;
            }
            digits[pos] += 1;
            if digits[pos] < t {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut builder = GraphBuilder::new(n).expect("small order");
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(density) {
                builder.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    builder.build()
}

fn certificate_is_star_free(cert: &EdgeColoring, params: &StarParams) {
    let m = params.sizes();
    let t = params.t();
    let mut counts = vec![0usize; cert.host().n() * t];
    for (&(u, v), &c) in cert.host().edges().iter().zip(cert.assignment()) {
        counts[u * t + c - 1] += 1;
        counts[v * t + c - 1] += 1;
    }
    for v in 0..cert.host().n() {
        for c in 0..t {
            assert!(
                counts[v * t + c] < m[c],
                "certificate has {} edges of color {} at vertex {}",
                counts[v * t + c],
                c + 1,
                v
            );
        }
    }
}

#[test]
fn decision_matches_naive_enumeration_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0C0FFEE);
    let shapes: [&[usize]; 5] = [&[2, 2], &[2, 3], &[3, 3], &[2, 2, 2], &[2, 2, 3]];
    for round in 0..60 {
        let n = rng.gen_range(2..=5);
        let density = [0.3, 0.6, 0.9][round % 3];
        let graph = random_graph(&mut rng, n, density);
        if graph.edge_count() > 9 {
            continue;
        }
        for sizes in shapes {
            let params = StarParams::new(sizes.to_vec()).expect("valid sizes");
            let expected = naive_arrows(&graph, &params);
            let verdict = arrows_decision(&graph, &params, &budget()).expect("within budget");
            assert_eq!(
                verdict.arrows(),
                expected,
                "verdict mismatch on {:?} vs {:?}",
                graph.edges(),
                sizes
            );
            if let ArrowVerdict::NotArrows { certificate } = verdict {
                certificate_is_star_free(&certificate, &params);
            }
        }
    }
}

#[test]
fn adding_edges_never_destroys_arrowing() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD1CE);
    let params = StarParams::new(vec![2, 2]).expect("valid sizes");
    for _ in 0..40 {
        let n = rng.gen_range(3..=6);
        let graph = random_graph(&mut rng, n, 0.7);
        if !arrows_decision(&graph, &params, &budget())
            .expect("within budget")
            .arrows()
        {
            continue;
        }
        let mut builder = GraphBuilder::new(n).expect("small order");
        for &(u, v) in graph.edges() {
            builder.add_edge(u, v).expect("fresh edge");
        }
        let mut grew = false;
        'grow: for u in 0..n {
            for v in (u + 1)..n {
                if !graph.has_edge(u, v) {
                    builder.add_edge(u, v).expect("fresh edge");
                    grew = true;
                    break 'grow;
                }
            }
        }
        if !grew {
            continue;
        }
        let supergraph = builder.build();
        assert!(
            arrows_decision(&supergraph, &params, &budget())
                .expect("within budget")
                .arrows(),
            "supergraph of an arrowing graph stopped arrowing: {:?}",
            supergraph.edges()
        );
    }
}

#[test]
fn parallel_decision_agrees_with_sequential_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xFA57);
    let shapes: [&[usize]; 3] = [&[2, 3], &[3, 3], &[2, 2, 3]];
    for _ in 0..25 {
        let n = rng.gen_range(3..=6);
        let graph = random_graph(&mut rng, n, 0.6);
        for sizes in shapes {
            let params = StarParams::new(sizes.to_vec()).expect("valid sizes");
            let sequential = arrows_decision(&graph, &params, &budget()).expect("within budget");
            let parallel =
                arrows_decision_parallel(&graph, &params, &budget(), 4).expect("within budget");
            match (&sequential, &parallel) {
                (
                    ArrowVerdict::Arrows { nodes_explored: a },
                    ArrowVerdict::Arrows { nodes_explored: b },
                ) => assert_eq!(a, b),
                (
                    ArrowVerdict::NotArrows { certificate: a },
                    ArrowVerdict::NotArrows { certificate: b },
                ) => assert_eq!(a, b),
                _ => panic!("parallel and sequential verdicts disagree"),
            }
        }
    }
}

#[test]
fn relabeling_colors_does_not_change_the_verdict() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBEAD);
    let forward = StarParams::new(vec![2, 3]).expect("valid sizes");
    let backward = StarParams::new(vec![3, 2]).expect("valid sizes");
    for _ in 0..40 {
        let n = rng.gen_range(3..=6);
        let graph = random_graph(&mut rng, n, 0.6);
        let a = arrows_decision(&graph, &forward, &budget()).expect("within budget");
        let b = arrows_decision(&graph, &backward, &budget()).expect("within budget");
        assert_eq!(
            a.arrows(),
            b.arrows(),
            "verdict changed under color relabeling on {:?}",
            graph.edges()
        );
    }
}

#[test]
fn searched_values_respect_the_threshold_chain() {
    for sizes in [vec![2, 2], vec![2, 3], vec![3, 3], vec![2, 2, 2]] {
        let params = StarParams::new(sizes).expect("valid sizes");
        let r = ramsey_search(&params, 12, &budget()).expect("small instance");
        let rs = star_critical_search(&params, &budget()).expect("small instance");
        assert!(rs >= 1, "star-critical value must be positive");
        assert!(rs < r, "star-critical value must stay below the order");
        assert_eq!(r, star_ramsey::formulas::ramsey_stars(&params));
        assert_eq!(rs, star_ramsey::formulas::star_critical_stars(&params));
    }
}

#[test]
fn core_types_are_send_and_sync() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Graph>();
    assert_send_sync::<EdgeColoring>();
    assert_send_sync::<StarParams>();
    assert_send_sync::<ArrowVerdict>();
    assert_send_sync::<SearchBudget>();
}
