//! Build a circulant graph, inspect it, and write it as DOT.

use circulant_t2::CirculantGraph;

fn main() -> circulant_t2::Result<()> {
    let g = CirculantGraph::from_jumps(16, &[1, 2, 7])?;
    println!(
        "{g}: degree {}, {} edges, connected: {}",
        g.degree(),
        g.edge_count(),
        g.is_connected()
    );
    println!("neighbors of 0: {:?}", g.neighbors(0));
    let (len, count) = g.periodic_cycles(2)?;
    println!("jump 2 splits the vertices into {count} cycles of length {len}");

    let c5 = CirculantGraph::from_jumps(5, &[1])?;
    print!("{}", c5.to_dot());
    Ok(())
}
