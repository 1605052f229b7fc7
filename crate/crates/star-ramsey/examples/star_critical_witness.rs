//! Build the coloring that pins down the star-critical number from below.
//!
//! For parameter lists with evenly many (and at least two) even star sizes,
//! the complete graph at the Ramsey number stays colorable after deleting
//! half that many edges at one vertex. This example builds that witness for
//! (2,2,3), shows how the Hamiltonian cycles were divided up, and re-checks
//! the result with the audit.
//!
//! ```bash
//! cargo run --example star_critical_witness
//! ```

use star_ramsey::construct::{audit_witness, star_critical_witness_with_plan};
use star_ramsey::formulas::{ramsey_stars, star_critical_stars};
use star_ramsey::json::coloring_to_json;
use star_ramsey::StarParams;

fn main() -> star_ramsey::Result<()> {
    let p = StarParams::new(vec![2, 2, 3])?;
    let r = ramsey_stars(&p);
    let r_star = star_critical_stars(&p);
    println!("params {p}: Ramsey number {r}, star-critical number {r_star}");

    let (cert, plan) = star_critical_witness_with_plan(&p)?;
    println!(
        "\nwitness host: K_{r} minus {} edge(s) at vertex 0",
        plan.split_edges.len()
    );
    println!("split edges:  {:?}", plan.split_edges);
    println!("cycle quotas: {:?}", plan.cycles_by_color);
    println!("host degrees: {:?}", cert.host().degrees());

    // Vertex 0 keeps exactly r_star - 1 neighbors: one more forced edge and
    // the coloring below would stop existing.
    assert_eq!(cert.host().degree(0)?, r_star - 1);

    let report = audit_witness(&cert, &p)?;
    assert!(report.star_free);
    println!(
        "class max degrees: {:?} (caps {:?})",
        report.class_max_degrees,
        p.sizes()
    );

    println!("\ncertificate:\n{}", coloring_to_json(&cert));
    Ok(())
}
