//! A Type-2 family of order np³, its group, and the annexure tables.
//!
//! `cargo run --example family_orbit -- 7 5 3 2` prints the order-1715 family.

use circulant_t2::catalog::{annexure_row, render_annexure};
use circulant_t2::families::FamilyParams;
use circulant_t2::iso::t2_orbit;

fn main() -> circulant_t2::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("p n x y must be integers"))
        .collect();
    let (p, n, x, y) = match args[..] {
        [p, n, x, y] => (p, n, x, y),
        _ => (3, 3, 1, 2),
    };
    let params = FamilyParams::new(p, n, x, y, 1)?;
    for i in 1..=p {
        let member = params.with_i(i)?;
        println!(
            "i={i} d={} {}",
            member.d_value(),
            annexure_row(&member.graph()?)
        );
    }

    let orbit = t2_orbit(&params.graph()?, p)?.expect("family members are Type-2 related");
    println!("t1 = {}, order {}", orbit.t1(), orbit.order());
    orbit.verify_group()?;
    println!(
        "group law verified, pairwise non-Adam's: {}",
        orbit.pairwise_non_adams()?
    );

    let annexure = render_annexure()?;
    println!(
        "annexure: {} tables, {} rows",
        annexure.lines().filter(|l| l.starts_with("table")).count(),
        annexure.lines().filter(|l| l.starts_with("C_")).count()
    );
    Ok(())
}
