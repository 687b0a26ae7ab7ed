//! Extend maximal K_q-free families one step at a time, starting from {K_6}.
//!
//!     cargo run --release --example maximal_search

use std::time::Instant;

use folkman::search::{plus_clique_descent, run_algorithm_1, FamilySpec};
use folkman::{ArrowVector, Graph, GraphSet, Result};

fn main() -> Result<()> {
    // H(a; 8; n) with alpha <= 3, grown two vertices per step
    let (q, t) = (8, 3);
    let mut maximal: GraphSet = [Graph::complete(6)?].iter().collect();
    let mut plus = plus_clique_descent(&maximal, &ArrowVector::new(vec![3])?, q, t, false);
    println!("{:<22} {:>8} {:>10}", "family", "maximal", "(+K7)");
    println!("{:<22} {:>8} {:>10}", "H(3; 8; 6)", maximal.len(), plus.len());
    for (entry, n) in [(4, 8), (5, 10), (6, 12)] {
        let spec = FamilySpec::new(ArrowVector::new(vec![entry])?, q, n, 2, t)?;
        let start = Instant::now();
        maximal = run_algorithm_1(&spec, &plus)?;
        plus = plus_clique_descent(&maximal, &spec.a, q, t, false);
        println!(
            "{:<22} {:>8} {:>10}   {:.2}s",
            spec.family_label(),
            maximal.len(),
            plus.len(),
            start.elapsed().as_secs_f64()
        );
    }
    for g in maximal.sorted_graphs().iter().take(3) {
        println!("  {}", g.to_graph6());
    }
    Ok(())
}
