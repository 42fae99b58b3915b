//! Exact arithmetic over `Z_n`.
//!
//! Everything here works on `u64` residues; products go through `u128`, so
//! moduli far beyond the sizes used by the families (n up to 10^7 and more)
//! never overflow.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::circulant::ConnectionSet;
use crate::error::{Error, Result};

/// Order of a circulant graph. Always at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::ModulusTooSmall(n));
        }
        Ok(Modulus(n))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// `⌊n/2⌋`, the largest jump allowed in half-form.
    #[inline]
    pub fn half(self) -> u64 {
        self.0 / 2
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.0 as u128) as u64
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        let n = self.0;
        (a % n + n - b % n) % n
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        self.sub(0, a)
    }

    /// Reflection of a nonzero residue into `[1, ⌊n/2⌋]`.
    #[inline]
    pub fn reflect(self, a: u64) -> u64 {
        let a = a % self.0;
        a.min(self.0 - a)
    }

    pub fn residue(self, value: u64) -> Result<Residue> {
        Residue::new(value, self)
    }
}

impl TryFrom<u64> for Modulus {
    type Error = Error;
    fn try_from(n: u64) -> Result<Self> {
        Modulus::new(n)
    }
}

impl From<Modulus> for u64 {
    fn from(m: Modulus) -> u64 {
        m.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: u64, modulus: Modulus) -> Result<Self> {
        if value >= modulus.get() {
            return Err(Error::ResidueOutOfRange {
                value,
                modulus: modulus.get(),
            });
        }
        Ok(Residue { value, modulus })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }
}

pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    Ok(gcd_unchecked(a, b))
}

pub(crate) fn gcd_unchecked(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// gcd of every value in `values`; zero for an empty slice.
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| gcd_unchecked(acc, v))
}

/// Deterministic trial division; fine for the primes the families use.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Inverse of `a` mod `n` by the extended Euclidean algorithm.
pub fn mod_inverse(a: u64, n: Modulus) -> Result<u64> {
    let (mut old_r, mut r) = (a as i128 % n.get() as i128, n.get() as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotAUnit {
            a,
            modulus: n.get(),
        });
    }
    Ok(old_s.rem_euclid(n.get() as i128) as u64)
}

/// The multiplicative group `φ_n` of residues coprime to `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitsGroup {
    modulus: Modulus,
    elements: Vec<u64>,
}

impl UnitsGroup {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Sorted ascending; always starts with 1.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: u64) -> bool {
        self.elements
            .binary_search(&(a % self.modulus.get()))
            .is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().copied()
    }
}

pub fn units(n: Modulus) -> UnitsGroup {
    let elements = (1..n.get())
        .filter(|&x| gcd_unchecked(n.get(), x) == 1)
        .collect();
    UnitsGroup {
        modulus: n,
        elements,
    }
}

/// Reflexive modular reduction: reduce mod n, fold values above n/2 onto
/// `n - v`, collapse duplicates, sort.
pub fn reflexive_reduce<I>(n: Modulus, values: I) -> Result<ConnectionSet>
where
    I: IntoIterator<Item = i64>,
{
    let mut jumps = Vec::new();
    for v in values {
        let r = n.reduce(v);
        if r == 0 {
            return Err(Error::DegenerateJump {
                value: v,
                modulus: n.get(),
            });
        }
        jumps.push(n.reflect(r));
    }
    ConnectionSet::new(n, jumps)
}

/// `aS` under reflexive reduction. `a` must be a unit.
pub fn scale_set(n: Modulus, a: u64, s: &ConnectionSet) -> Result<ConnectionSet> {
    if s.modulus() != n {
        return Err(Error::ModulusMismatch {
            left: n.get(),
            right: s.modulus().get(),
        });
    }
    let a = a % n.get();
    if gcd_unchecked(n.get(), a) != 1 {
        return Err(Error::NotAUnit {
            a,
            modulus: n.get(),
        });
    }
    // reflection commutes with negation, so the half-form is enough
    let mut jumps: Vec<u64> = s.jumps().iter().map(|&r| n.reflect(n.mul(a, r))).collect();
    jumps.sort_unstable();
    Ok(ConnectionSet::from_sorted_unchecked(n, jumps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(81, 3).unwrap(), 3);
        assert_eq!(gcd(1715, 7).unwrap(), 7);
        assert_eq!(gcd(16, 5).unwrap(), 1);
        assert_eq!(gcd(12, 0).unwrap(), 12);
        assert_eq!(gcd(0, 0), Err(Error::GcdOfZeros));
    }

    #[test]
    fn modulus_rejects_small() {
        assert!(Modulus::new(2).is_err());
        assert!(Modulus::new(3).is_ok());
    }

    #[test]
    fn units_examples() {
        assert_eq!(units(m(9)).elements(), &[1, 2, 4, 5, 7, 8]);
        assert_eq!(units(m(12)).elements(), &[1, 5, 7, 11]);
        assert_eq!(units(m(1715)).len(), 1176);
    }

    #[test]
    fn reflexive_reduce_examples() {
        let n = m(81);
        let got = reflexive_reduce(n, [3, 7, 20, 34, 47, 61, 74, 78].map(|v| 5 * v)).unwrap();
        assert_eq!(got.jumps(), &[8, 15, 19, 35]);

        let got = reflexive_reduce(m(27), [1, 26, 3, 24]).unwrap();
        assert_eq!(got.jumps(), &[1, 3]);

        // 5, 10, 35 -> 5, 6, 3
        let got = reflexive_reduce(m(16), [5, 10, 35]).unwrap();
        assert_eq!(got.jumps(), &[3, 5, 6]);
    }

    #[test]
    fn reflexive_reduce_rejects_zero() {
        assert!(matches!(
            reflexive_reduce(m(27), [1, 27]),
            Err(Error::DegenerateJump { value: 27, .. })
        ));
        assert!(reflexive_reduce(m(27), [-54]).is_err());
    }

    #[test]
    fn negative_values_reduce() {
        let got = reflexive_reduce(m(27), [-1, -3]).unwrap();
        assert_eq!(got.jumps(), &[1, 3]);
    }

    #[test]
    fn scale_set_examples() {
        let n = m(81);
        let r = ConnectionSet::new(n, vec![3, 7, 20, 34]).unwrap();
        let doubled = reflexive_reduce(n, [6, 14, 40, 68, 13, 41, 67, 75]).unwrap();
        assert_eq!(scale_set(n, 2, &r).unwrap(), doubled);
        assert_eq!(scale_set(n, 1, &r).unwrap(), r);
        assert_eq!(scale_set(n, 5, &r).unwrap().jumps(), &[8, 15, 19, 35]);
        assert!(matches!(scale_set(n, 3, &r), Err(Error::NotAUnit { .. })));
    }

    #[test]
    fn inverse() {
        let n = m(81);
        for a in units(n).iter() {
            let b = mod_inverse(a, n).unwrap();
            assert_eq!(n.mul(a, b), 1);
        }
        assert!(mod_inverse(6, n).is_err());
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn large_modulus_does_not_overflow() {
        let n = m(10_000_019);
        let s = ConnectionSet::new(n, vec![5_000_000, 4_999_999]).unwrap();
        let scaled = scale_set(n, 9_999_999, &s).unwrap();
        // -1 is an involution on the half-form
        assert_eq!(scale_set(n, n.get() - 1, &s).unwrap(), s);
        assert_eq!(scaled.len(), 2);
    }
}
