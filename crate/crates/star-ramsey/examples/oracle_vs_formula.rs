//! Re-derive the closed-form numbers by exhaustive search.
//!
//! Nothing here consults the formulas while searching; the two columns
//! agree because the mathematics does.
//!
//! ```bash
//! cargo run --release --example oracle_vs_formula
//! ```

use star_ramsey::arrow::{
    min_degree_search, ramsey_search, regular_ramsey_search, star_critical_search, SearchBudget,
};
use star_ramsey::formulas::{
    min_degree_threshold_f, ramsey_stars, regular_ramsey_stars, star_critical_stars,
};
use star_ramsey::StarParams;

fn main() -> star_ramsey::Result<()> {
    let budget = SearchBudget::default();
    let lists: &[&[usize]] = &[&[2, 2], &[2, 3], &[3, 3], &[2, 2, 2], &[2, 2, 3]];

    println!(
        "{:<10} {:>8} {:>8} {:>10} {:>10}",
        "params", "r", "scan", "r_star", "scan"
    );
    for sizes in lists {
        let p = StarParams::new(sizes.to_vec())?;
        let r = ramsey_stars(&p);
        let r_scan = ramsey_search(&p, r + 2, &budget)?;
        let rs = star_critical_stars(&p);
        let rs_scan = star_critical_search(&p, &budget)?;
        println!(
            "{:<10} {r:>8} {r_scan:>8} {rs:>10} {rs_scan:>10}",
            p.to_string()
        );
        assert_eq!(r, r_scan);
        assert_eq!(rs, rs_scan);
    }

    // The regular and minimum-degree thresholds need full graph
    // enumeration, so they only run where the Ramsey number stays small.
    println!("\n{:<10} {:>8} {:>8}", "params", "rr", "scan");
    for sizes in [&[2usize, 2] as &[usize], &[2, 3], &[2, 2, 2]] {
        let p = StarParams::new(sizes.to_vec())?;
        let rr = regular_ramsey_stars(&p);
        let rr_scan = regular_ramsey_search(&p, &budget)?;
        println!("{:<10} {rr:>8} {rr_scan:>8}", p.to_string());
        assert_eq!(rr, rr_scan);
    }

    println!("\n{:<10} {:>3} {:>8} {:>8}", "params", "n", "f(n)", "scan");
    for (sizes, n) in [(&[2usize, 2] as &[usize], 4), (&[2, 2], 5), (&[2, 3], 5)] {
        let p = StarParams::new(sizes.to_vec())?;
        let f = min_degree_threshold_f(&p, n)?.value;
        let f_scan = min_degree_search(&p, n, &budget)?;
        println!("{:<10} {n:>3} {f:>8} {f_scan:>8}", p.to_string());
        assert_eq!(f, f_scan);
    }
    Ok(())
}
