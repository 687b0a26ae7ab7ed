//! Vertex arrowing: decide G -> (a_1, ..., a_s) and show witnesses.
//!
//!     cargo run --example arrowing

use folkman::clique::{clique_number, independence_number};
use folkman::{arrows, find_free_partition, ArrowVector, Graph, Result};

fn main() -> Result<()> {
    let two_two: ArrowVector = "2 2".parse()?;
    let two_three: ArrowVector = "2 3".parse()?;

    let c5 = Graph::cycle(5)?;
    let c6 = Graph::cycle(6)?;
    println!("C5 -> {two_two}: {}", arrows(&c5, &two_two));
    // bipartite, so a 2-coloring without monochromatic edges exists
    match find_free_partition(&c6, &two_two) {
        Some(parts) => println!("C6 -/-> {two_two}, classes {:?}", parts.iter().map(|p| p.iter().collect::<Vec<_>>()).collect::<Vec<_>>()),
        None => println!("C6 -> {two_two}"),
    }

    // the complement of C7 is K4-free on 7 vertices and still arrows (2, 3)
    let g = Graph::cycle(7)?.complement();
    println!(
        "complement of C7: omega {}, alpha {}, -> {two_two}: {}, -> {two_three}: {}",
        clique_number(&g),
        independence_number(&g),
        arrows(&g, &two_two),
        arrows(&g, &two_three)
    );

    // (2, 2, 2) is the same as 4-chromatic
    let v: ArrowVector = "2,2,2".parse()?;
    for n in [5, 7] {
        let cn = Graph::cycle(n)?;
        println!("C{n} -> {v}: {}, K4 -> {v}: {}", arrows(&cn, &v), arrows(&Graph::complete(4)?, &v));
    }
    Ok(())
}
