//! Read, write and transform graphs in graph6.
//!
//!     cargo run --example graph6_io

use folkman::graph::{read_graph6_file, write_graph6_file};
use folkman::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = Graph::from_graph6("Dhc")?;
    println!("C5: order {}, size {}, edges {:?}", c5.order(), c5.size(), c5.edges().collect::<Vec<_>>());

    let k3 = Graph::complete(3)?;
    let wheel = Graph::complete(1)?.join(&c5)?;
    let graphs = [
        ("complement of C7", Graph::cycle(7)?.complement()),
        ("K1 + C5", wheel),
        ("K3 u C5", k3.disjoint_union(&c5)?),
        ("K5 - e", Graph::complete(5)?.remove_edge(0, 4)?),
    ];
    for (name, g) in &graphs {
        println!("{name:>18}: {}", g.to_graph6());
    }

    let dir = std::env::temp_dir().join(format!("folkman-graph6-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("some.g6");
    write_graph6_file(&path, graphs.iter().map(|(_, g)| g))?;
    let back = read_graph6_file(&path)?;
    assert!(back.iter().zip(&graphs).all(|(a, (_, b))| a == b));
    println!("wrote and re-read {} graphs via {}", back.len(), path.display());
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
