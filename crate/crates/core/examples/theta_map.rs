//! The vertex map Θ_{n,r,t} and its action on a circulant graph.

use circulant_t2::transform::{circulant_image, theta_graph};
use circulant_t2::{CirculantGraph, Modulus, ThetaMap};

fn main() -> circulant_t2::Result<()> {
    let n = Modulus::new(27)?;
    let g = CirculantGraph::from_jumps(27, &[1, 3, 8, 10])?;
    let base = ThetaMap::new(n, 3, 0)?;
    println!(
        "m = gcd(27, 3) = {}, {} distinct maps",
        base.m(),
        base.period()
    );

    for t in 0..base.period() {
        let map = base.with_t(t);
        let labeled = theta_graph(&map, &g)?;
        match circulant_image(&map, &g)? {
            Some(h) => println!("{map}: {h}"),
            None => println!("{map}: not circulant ({} edges)", labeled.edges().len()),
        }
    }

    let a = base.with_t(4);
    let b = base.with_t(7);
    println!("{a} ∘ {b} = {}", a.compose(&b)?);
    println!("inverse of {a} is {}", a.inverse());
    Ok(())
}
