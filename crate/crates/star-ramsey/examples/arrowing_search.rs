//! Decide arrowing for specific graphs, with certificates and budgets.
//!
//! The decision is exact: either every edge coloring was ruled out, or a
//! star-free coloring is returned that anyone can re-check. Budgets turn
//! long searches into an explicit error rather than a wrong answer.
//!
//! ```bash
//! cargo run --example arrowing_search
//! ```

use star_ramsey::arrow::{
    arrows_decision, arrows_decision_parallel, find_mono_star, ArrowVerdict, SearchBudget,
};
use star_ramsey::{Error, Graph, StarParams};

fn main() -> star_ramsey::Result<()> {
    let budget = SearchBudget::default();
    let p33 = StarParams::new(vec![3, 3])?;

    // K_6 forces a monochromatic K_{1,3} in two colors, K_5 does not.
    for n in [5usize, 6] {
        let g = Graph::complete(n)?;
        match arrows_decision(&g, &p33, &budget)? {
            ArrowVerdict::Arrows { nodes_explored } => {
                println!("K_{n} arrows (3,3): every coloring dies, {nodes_explored} nodes");
            }
            ArrowVerdict::NotArrows { certificate } => {
                assert!(find_mono_star(&certificate, &p33)?.is_none());
                println!(
                    "K_{n} does not arrow (3,3): classes of sizes {:?} dodge it",
                    (1..=2)
                        .map(|i| certificate.color_class(i).map(|c| c.edge_count()))
                        .collect::<star_ramsey::Result<Vec<_>>>()?
                );
            }
        }
    }

    // The same verdict from four workers, bit for bit.
    let k6 = Graph::complete(6)?;
    let seq = arrows_decision(&k6, &p33, &budget)?;
    let par = arrows_decision_parallel(&k6, &p33, &budget, 4)?;
    assert_eq!(seq.arrows(), par.arrows());
    println!("parallel search agrees with sequential on K_6");

    // A starved budget is an error, never a verdict.
    let tiny = SearchBudget::new(10, 60.0);
    match arrows_decision(&Graph::complete(6)?, &p33, &tiny) {
        Err(Error::BudgetExhausted { nodes }) => {
            println!("with a 10-node budget the search stops honestly after {nodes} nodes");
        }
        other => panic!("expected budget exhaustion, got {other:?}"),
    }
    Ok(())
}
