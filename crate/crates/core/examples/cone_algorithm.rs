//! The cone-aware extension compared with the plain one.
//!
//!     cargo run --release --example cone_algorithm

use folkman::search::{cone_vertex_count, plus_clique_descent, run_algorithm_1, run_algorithm_2, FamilySpec};
use folkman::{ArrowVector, Graph, GraphSet, Result};

fn main() -> Result<()> {
    let t = 3;
    let k7: GraphSet = [Graph::complete(7)?].iter().collect();
    let k6: GraphSet = [Graph::complete(6)?].iter().collect();

    // A2 = H(4; 8; 8), built from {K6}
    let h4 = run_algorithm_1(&FamilySpec::new(ArrowVector::new(vec![4])?, 8, 8, 2, t)?, &k6)?;

    let spec = FamilySpec::new(ArrowVector::new(vec![5])?, 9, 9, 2, t)?;
    let a1 = plus_clique_descent(&k7, &ArrowVector::new(vec![4])?, 9, t, false);
    let plain = run_algorithm_1(&spec, &a1)?;
    let coned = run_algorithm_2(&spec, &a1, &h4)?;
    println!("{}: plain {} graphs, cone-aware {} graphs, equal: {}", spec, plain.len(), coned.len(), plain == coned);
    for g in coned.sorted_graphs() {
        println!("  {}  cone vertices: {}", g.to_graph6(), cone_vertex_count(&g));
    }
    Ok(())
}
