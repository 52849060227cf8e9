//! Writes the connected quartic graphs on 8 vertices as graph6, reads them
//! back through the streaming reader and checks which are optimal.

use std::io::Write;

use trireg::io::write_graph6;
use trireg::search::filter_optimal;
use trireg::{enumerate_regular_graphs, ingest_graph6_stream};

fn main() -> trireg::Result<()> {
    let path = std::env::temp_dir().join("trireg-quartic-8.g6");
    let mut file = std::fs::File::create(&path)?;
    for g in enumerate_regular_graphs(8, 4, true)? {
        writeln!(file, "{}", write_graph6(&g)?)?;
    }
    drop(file);
    let graphs = ingest_graph6_stream(&path)?.collect::<trireg::Result<Vec<_>>>()?;
    println!("read {} graphs from {}", graphs.len(), path.display());
    for g in filter_optimal(graphs)? {
        println!("optimal: {}", write_graph6(&g)?);
    }
    std::fs::remove_file(&path)?;
    Ok(())
}
