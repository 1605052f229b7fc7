//! Print every closed-form threshold for a few parameter lists.
//!
//! ```bash
//! cargo run --example thresholds
//! ```

use star_ramsey::formulas::{
    min_degree_threshold_f, ramsey_stars, regular_threshold_g, threshold_chain,
};
use star_ramsey::StarParams;

fn main() -> star_ramsey::Result<()> {
    let lists: &[&[usize]] = &[
        &[2, 2],
        &[2, 3],
        &[3, 3],
        &[2, 2, 2],
        &[2, 2, 3],
        &[4, 6],
        &[3, 4, 5, 6],
    ];

    println!(
        "{:<14} {:>3} {:>7} {:>4} {:>6} {:>6}",
        "params", "r", "r_star", "rr", "g(r)", "f(r)"
    );
    for sizes in lists {
        let p = StarParams::new(sizes.to_vec())?;
        let (r_star, rr, r) = threshold_chain(&p)?;
        let g = regular_threshold_g(&p, r)?.value;
        let f = min_degree_threshold_f(&p, r)?.value;
        println!(
            "{:<14} {r:>3} {r_star:>7} {rr:>4} {g:>6} {f:>6}",
            p.to_string()
        );

        // The chain is guaranteed, not an accident; fail loudly if it breaks.
        assert!(1 <= r_star && r_star <= rr && rr < r);
        assert_eq!(g, rr, "the regular threshold at the Ramsey number is rr");
    }

    // The degree thresholds depend on the parity of the order.
    let p = StarParams::new(vec![2, 2, 3])?;
    println!("\n(2,2,3) degree thresholds by order:");
    for n in 5..=8 {
        let g = regular_threshold_g(&p, n)?;
        let f = min_degree_threshold_f(&p, n)?;
        println!(
            "  n={n}: g={} ({:?}), f={} ({:?})",
            g.value, g.branch, f.value, f.branch
        );
    }
    let _ = ramsey_stars(&p);
    Ok(())
}
