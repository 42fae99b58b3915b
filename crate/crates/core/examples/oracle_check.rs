//! Cross-check a Type-2 witness with the brute-force oracles.

use circulant_t2::oracle::{
    exhaustive_type2_sweep, isomorphic_bruteforce, verify_bijection_is_isomorphism, SearchOutcome,
    VertexBijection,
};
use circulant_t2::{CirculantGraph, ThetaMap};

fn main() -> circulant_t2::Result<()> {
    let g = CirculantGraph::from_jumps(27, &[1, 3, 8, 10])?;
    let h = CirculantGraph::from_jumps(27, &[3, 4, 5, 13])?;

    let theta = VertexBijection::from_theta(&ThetaMap::new(g.n(), 3, 1)?)?;
    println!(
        "Θ_{{27,3,1}} is an isomorphism: {}",
        verify_bijection_is_isomorphism(&theta, &g, &h)
    );

    match isomorphic_bruteforce(&g, &h, 10_000_000) {
        SearchOutcome::Isomorphic(f) => println!("search found f with f(1) = {}", f.apply(1)),
        other => println!("search: {other:?}"),
    }

    let report = exhaustive_type2_sweep(&g, 3)?;
    for row in &report.rows {
        println!(
            "t={} circulant={:?} adams={:?}",
            row.t, row.circulant, row.adams
        );
    }
    println!("Type-2 rows: {:?}", report.type2_rows());
    Ok(())
}
