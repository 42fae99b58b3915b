//! Adam's versus Type-2 isomorphism for pairs of circulant graphs.

use circulant_t2::iso::{adams_witness, classify};
use circulant_t2::CirculantGraph;

fn main() -> circulant_t2::Result<()> {
    let r1 = CirculantGraph::from_jumps(81, &[3, 7, 20, 34])?;
    let pairs = [
        (
            r1.clone(),
            CirculantGraph::from_jumps(81, &[8, 15, 19, 35])?,
            None,
        ),
        (
            r1.clone(),
            CirculantGraph::from_jumps(81, &[3, 11, 16, 38])?,
            Some(3),
        ),
        (
            CirculantGraph::from_jumps(16, &[1, 2, 7])?,
            CirculantGraph::from_jumps(16, &[2, 3, 5])?,
            None,
        ),
        (
            CirculantGraph::from_jumps(27, &[1, 3])?,
            CirculantGraph::from_jumps(27, &[1, 4])?,
            None,
        ),
    ];
    for (g, h, r) in pairs {
        let verdict = classify(&g, &h, r)?;
        println!("{g} vs {h}: {verdict}");
        for note in &verdict.notes {
            println!("  note: {note}");
        }
    }

    let g = CirculantGraph::from_jumps(16, &[1, 2, 7])?;
    let h = CirculantGraph::from_jumps(16, &[2, 3, 5])?;
    println!(
        "least Adam's multiplier for C_16(1,2,7) -> C_16(2,3,5): {:?}",
        adams_witness(&g, &h)?
    );
    Ok(())
}
