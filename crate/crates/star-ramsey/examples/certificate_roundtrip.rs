//! Certificates as bytes: canonical JSON in, identical JSON out, plus DOT
//! for anything that draws graphs.
//!
//! ```bash
//! cargo run --example certificate_roundtrip
//! ```

use star_ramsey::construct::star_critical_witness;
use star_ramsey::json::{coloring_from_json, coloring_to_dot, coloring_to_json};
use star_ramsey::StarParams;

fn main() -> star_ramsey::Result<()> {
    let p = StarParams::new(vec![2, 2, 3])?;
    let cert = star_critical_witness(&p)?;

    let json = coloring_to_json(&cert);
    println!("certificate: {json}");

    // Parse it back: the result is the same coloring and, serialized again,
    // the same bytes. Edges are sorted with u < v, so there is exactly one
    // canonical spelling per coloring.
    let parsed = coloring_from_json(&json)?;
    assert_eq!(parsed, cert);
    assert_eq!(coloring_to_json(&parsed), json);
    println!("round trip: byte identical");

    // Anything malformed is rejected, not repaired.
    for bad in [
        r#"{"n":3,"t":2,"edges":[[2,0,1]]}"#, // endpoints out of order
        r#"{"n":3,"t":2,"edges":[[0,1,7]]}"#, // color out of range
        r#"{"n":3,"t":2,"edges":[[0,3,1]]}"#, // vertex out of range
        r#"{"n":3,"t":2,"edges":[[0,1,1],[0,1,2]]}"#, // duplicate edge
    ] {
        assert!(coloring_from_json(bad).is_err(), "accepted {bad}");
    }
    println!("malformed inputs rejected: 4/4");

    println!("\nDOT rendering:\n{}", coloring_to_dot(&cert));
    Ok(())
}
