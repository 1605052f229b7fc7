//! Largest-degree regular graphs that still avoid arrowing, one per parity
//! branch of the construction.
//!
//! ```bash
//! cargo run --example regular_witness
//! ```

use star_ramsey::arrow::{regular_nonarrowing_search, SearchBudget};
use star_ramsey::construct::{
    audit_witness, max_nonarrowing_regular_degree, regular_nonarrowing_witness_with_plan,
};
use star_ramsey::{Error, StarParams};

fn show(sizes: &[usize], n: usize) -> star_ramsey::Result<()> {
    let p = StarParams::new(sizes.to_vec())?;
    let d = max_nonarrowing_regular_degree(&p, n)?;
    match regular_nonarrowing_witness_with_plan(&p, n) {
        Ok((cert, plan)) => {
            let report = audit_witness(&cert, &p)?;
            assert!(report.star_free);
            assert_eq!(report.host_regularity, Some(d));
            let pieces = if !plan.matchings_by_color.iter().all(Vec::is_empty) {
                format!("one-factors {:?}", plan.matchings_by_color)
            } else if plan.split_edges.is_empty() {
                format!("cycles {:?}", plan.cycles_by_color)
            } else {
                format!(
                    "cycles {:?}, split edges {:?}",
                    plan.cycles_by_color, plan.split_edges
                )
            };
            println!("{p} on {n} vertices: {d}-regular witness from {pieces}");
        }
        Err(Error::DegenerateBranch(why)) => {
            // The closed-form assembly cannot cover this corner; an
            // exhaustive hunt still can at this scale.
            println!("{p} on {n} vertices: assembly degenerates ({why})");
            let cert = regular_nonarrowing_search(&p, n, d, &SearchBudget::default())?;
            println!("  ... exhaustive search found a {d}-regular witness instead");
            assert!(audit_witness(&cert, &p)?.star_free);
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

fn main() -> star_ramsey::Result<()> {
    show(&[3, 3], 6)?; // even order: one-factors
    show(&[3, 3], 7)?; // odd order, all sizes odd: whole cycles
    show(&[2, 3], 5)?; // odd order, one even size: cycles, nothing split
    show(&[2, 2, 2], 5)?; // odd order, three even sizes: one split cycle
    show(&[2, 4], 5)?; // odd order, two even sizes: split plus rerouted edge
    show(&[2, 2], 5)?; // the empty-graph corner
    show(&[2, 2, 3], 5)?; // degenerate corner, search fallback
    Ok(())
}
