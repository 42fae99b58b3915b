//! The order-8n family with respect to r = 2.

use circulant_t2::families::{r2_family, R2FamilyParams};
use circulant_t2::iso::t2_orbit;
use circulant_t2::CirculantGraph;

fn main() -> circulant_t2::Result<()> {
    for n in 2..=4 {
        for s in 1..=n {
            let Ok(params) = R2FamilyParams::new(n, s, vec![1]) else {
                continue;
            };
            let (r, s_set) = r2_family(&params)?;
            let g = CirculantGraph::new(r)?;
            let orbit = t2_orbit(&g, 2)?.expect("R and S are Type-2 related");
            let ts: Vec<u64> = orbit.members().iter().map(|(t, _)| *t).collect();
            println!("n={n} s={s}: {g} <-> C_{}({s_set}), t = {ts:?}", g.n());
        }
    }
    Ok(())
}
