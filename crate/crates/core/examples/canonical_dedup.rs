//! Canonical labeling and isomorphism-free sets of graphs.
//!
//!     cargo run --example canonical_dedup

use folkman::enumerate::all_classes;
use folkman::{canonical_form, Graph, GraphSet, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn main() -> Result<()> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let petersen = Graph::from_graph6("IheA@GUAo")?;
    let mut set = GraphSet::new();
    for _ in 0..50 {
        let mut perm: Vec<usize> = (0..10).collect();
        perm.shuffle(&mut rng);
        set.insert(&petersen.permute(&perm));
    }
    println!("50 relabelings of the Petersen graph -> {} class, canonical {}", set.len(), canonical_form(&petersen).graph6());

    for n in 1..=7 {
        let classes = all_classes(n)?;
        println!("n = {n}: {:>4} graphs up to isomorphism, digest {}", classes.len(), &classes.digest()[..16]);
    }
    Ok(())
}
