//! Reflexive reduction, units, and scaling a connection set.

use circulant_t2::modring::{mod_inverse, reflexive_reduce, scale_set, units};
use circulant_t2::Modulus;

fn main() -> circulant_t2::Result<()> {
    let n = Modulus::new(81)?;
    let r = reflexive_reduce(n, [3, 7, 20, 34, 47, 61, 74, 78])?;
    println!("R = {{{r}}} in half-form mod {n}");

    let us = units(n);
    println!("|Z_{n}^*| = {}", us.len());

    let s = scale_set(n, 5, &r)?;
    println!("5R = {{{s}}}");
    let back = scale_set(n, mod_inverse(5, n)?, &s)?;
    println!("5^-1 = {}, 5^-1 (5R) = {{{back}}}", mod_inverse(5, n)?);
    Ok(())
}
