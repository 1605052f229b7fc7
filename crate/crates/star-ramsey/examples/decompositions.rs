//! The decomposition toolbox the witnesses are assembled from.
//!
//! Complete graphs of even order split into perfect matchings, those of odd
//! order into Hamiltonian cycles; on top of both sit the densest graphs
//! whose maximum degree stays below a given star size.
//!
//! ```bash
//! cargo run --example decompositions
//! ```

use star_ramsey::factorize::{
    hamiltonian_decomposition, max_star_free_graph, one_factorization, star_free_edge_bound,
};

fn main() -> star_ramsey::Result<()> {
    let f = one_factorization(8)?;
    println!("K_8 = union of {} perfect matchings:", f.parts().len());
    for (i, part) in f.parts().iter().enumerate() {
        println!("  M{}: {:?}", i + 1, part.edges());
    }
    assert!(f.is_complete());

    let h = hamiltonian_decomposition(9)?;
    println!("\nK_9 = union of {} Hamiltonian cycles:", h.cycle_count());
    for (i, cycle) in h.cycles().iter().enumerate() {
        println!("  C{}: {:?}", i + 1, cycle);
    }
    assert!(h.to_decomposition()?.is_complete());

    println!("\ndensest graphs with max degree < s on 7 vertices:");
    for s in 2..7 {
        let bound = star_free_edge_bound(7, s)?;
        let g = max_star_free_graph(7, s)?;
        assert_eq!(g.edge_count(), bound);
        assert!(g.max_degree() < s);
        println!("  s={s}: {bound} edges, degrees {:?}", g.degrees());
    }
    Ok(())
}
