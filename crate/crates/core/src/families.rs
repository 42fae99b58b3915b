//! Parametric Type-2 families.
//!
//! For a prime `p` and `n ≥ 1` the connection set `R^{np³, x+yp}_i` on
//! `Z_{np³}` is built from
//!
//! ```text
//! d = (i-1)·x·p·n + x + y·p
//! { j·np² ± d : j = 0..p } ∪ { p·p_1, ..., p·p_{k-2} } (and negatives)
//! ```
//!
//! where the multipliers `p_1..p_{k-2}` default to `{1}`. The `p` graphs for
//! `i = 1..p` form one Type-2 orbit with respect to `r = p`, and
//! `Θ_{np³,p,n}` advances `i` by one.
//!
//! `p = 2` is routed through the order-`8n` construction
//! ([`R2FamilyParams`]), which is what the general formula specializes to.

use crate::circulant::{CirculantGraph, ConnectionSet};
use crate::error::{Error, Result};
use crate::modring::{gcd_all, is_prime, Modulus};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

fn canonical_multipliers(mut extras: Vec<u64>) -> Result<Vec<u64>> {
    extras.sort_unstable();
    extras.dedup();
    if extras.is_empty() {
        return Err(invalid("multiplier list must be nonempty"));
    }
    if extras[0] == 0 {
        return Err(invalid("multipliers must be positive"));
    }
    let g = gcd_all(&extras);
    if g != 1 {
        return Err(invalid(format!(
            "gcd of multipliers {:?} is {g}, must be 1",
            extras
        )));
    }
    Ok(extras)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    p: u64,
    n: u64,
    x: u64,
    y: u64,
    i: u64,
    extras: Option<Vec<u64>>,
}

impl FamilyParams {
    pub fn new(p: u64, n: u64, x: u64, y: u64, i: u64) -> Result<Self> {
        let params = FamilyParams {
            p,
            n,
            x,
            y,
            i,
            extras: None,
        };
        params.validate()?;
        Ok(params)
    }

    /// Replaces `{p, np³ - p}` by `{p·p_j, p·(np³ - p_j)}`; the multipliers
    /// must have gcd 1.
    pub fn with_extras(mut self, extras: Vec<u64>) -> Result<Self> {
        self.extras = Some(canonical_multipliers(extras)?);
        self.validate()?;
        Ok(self)
    }

    pub fn with_i(&self, i: u64) -> Result<Self> {
        let mut next = self.clone();
        next.i = i;
        next.validate()?;
        Ok(next)
    }

    fn validate(&self) -> Result<()> {
        let FamilyParams { p, n, x, y, i, .. } = *self;
        if !is_prime(p) {
            return Err(invalid(format!("p = {p} must be prime")));
        }
        if n == 0 {
            return Err(invalid("n must be at least 1"));
        }
        if !(1..p).contains(&x) {
            return Err(invalid(format!(
                "x must satisfy 1 ≤ x ≤ p−1 (x = {x}, p = {p})"
            )));
        }
        if y > n * p - 1 {
            return Err(invalid(format!(
                "y must satisfy 0 ≤ y ≤ np−1 (y = {y}, np−1 = {})",
                n * p - 1
            )));
        }
        let offset = x + y * p;
        if !(1..n * p * p).contains(&offset) {
            return Err(invalid(format!(
                "x + yp must satisfy 1 ≤ x+yp ≤ np²−1 (x+yp = {offset})"
            )));
        }
        if !(1..=p).contains(&i) {
            return Err(invalid(format!(
                "i must satisfy 1 ≤ i ≤ p (i = {i}, p = {p})"
            )));
        }
        if p == 2 {
            self.r2_params()?;
        }
        Ok(())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn i(&self) -> u64 {
        self.i
    }

    pub fn extras(&self) -> Option<&[u64]> {
        self.extras.as_deref()
    }

    /// `x + y·p`.
    pub fn offset(&self) -> u64 {
        self.x + self.y * self.p
    }

    /// Graph order `n·p³`.
    pub fn order(&self) -> u64 {
        self.n * self.p.pow(3)
    }

    pub fn modulus(&self) -> Modulus {
        Modulus::new(self.order()).expect("n·p³ ≥ 8")
    }

    /// `d = (i-1)·x·p·n + x + y·p`.
    pub fn d_value(&self) -> u64 {
        (self.i - 1) * self.x * self.p * self.n + self.offset()
    }

    fn multipliers(&self) -> Vec<u64> {
        self.extras.clone().unwrap_or_else(|| vec![1])
    }

    /// The `p = 2` case as an order-`8n` family. The odd jump `2s - 1` is
    /// `x + 2y`, folded into `[1, 2n - 1]`.
    pub fn r2_params(&self) -> Result<R2FamilyParams> {
        if self.p != 2 {
            return Err(invalid("only p = 2 maps onto the order-8n family"));
        }
        let mut odd = self.offset();
        if odd > 2 * self.n {
            odd = 4 * self.n - odd;
        }
        R2FamilyParams::new(self.n, odd.div_ceil(2), self.multipliers())
    }

    /// `R^{np³, x+yp}_i` in half-form.
    pub fn connection_set(&self) -> Result<ConnectionSet> {
        if self.p == 2 {
            let (r, s) = r2_family(&self.r2_params()?)?;
            return Ok(if self.i == 1 { r } else { s });
        }
        odd_prime_set(self.p, self.n, self.d_value(), &self.multipliers())
    }

    pub fn graph(&self) -> Result<CirculantGraph> {
        let g = CirculantGraph::new(self.connection_set()?)?;
        if !g.is_connected() {
            return Err(Error::JumpCollision(format!("{g} is disconnected")));
        }
        Ok(g)
    }

    /// Sets for `i, i+1, ..., i+p-1`, indices taken cyclically in `1..=p`.
    pub fn orbit(&self) -> Result<Vec<ConnectionSet>> {
        (0..self.p)
            .map(|k| self.with_i((self.i - 1 + k) % self.p + 1)?.connection_set())
            .collect()
    }

    /// Same family with `x + yp` replaced by `np² - x - yp`; generates the
    /// same connection set for every `i`.
    pub fn mirror(&self) -> FamilyParams {
        let p = self.p;
        let offset = self.n * p * p - self.offset();
        FamilyParams {
            x: offset % p,
            y: offset / p,
            ..self.clone()
        }
    }
}

fn odd_prime_set(p: u64, n: u64, d: u64, multipliers: &[u64]) -> Result<ConnectionSet> {
    let modulus = Modulus::new(n * p.pow(3))?;
    let step = (n * p * p) as i64;
    let d = d as i64;
    let mut derived: Vec<u64> = (0..p as i64)
        .map(|j| j * step + d)
        .chain((1..=p as i64).map(|j| j * step - d))
        .map(|v| modulus.reflect(modulus.reduce(v)))
        .collect();
    derived.sort_unstable();
    derived.dedup();
    if derived.len() != p as usize || derived.iter().any(|&v| v % p == 0) {
        return Err(Error::JumpCollision(format!(
            "d = {d} yields {:?} mod {modulus}, expected {p} distinct non-multiples of {p}",
            derived
        )));
    }
    let mut scaled = Vec::with_capacity(multipliers.len());
    for &e in multipliers {
        let v = modulus.reduce((p * e) as i64);
        if v == 0 {
            return Err(Error::JumpCollision(format!("{p}·{e} ≡ 0 mod {modulus}")));
        }
        let v = modulus.reflect(v);
        if scaled.contains(&v) {
            return Err(Error::JumpCollision(format!(
                "{p}·{e} reduces onto jump {v} already produced by another multiplier"
            )));
        }
        scaled.push(v);
    }
    let mut jumps = derived;
    jumps.extend(scaled);
    ConnectionSet::new(modulus, jumps)
}

/// `R^{np³,x+yp}_i` without multipliers: contains `p` and `np³ - p`.
pub fn base_family_set(params: &FamilyParams) -> Result<ConnectionSet> {
    if params.extras.is_some() {
        return Err(invalid("base family takes no multipliers"));
    }
    params.connection_set()
}

pub fn extended_family_set(params: &FamilyParams) -> Result<ConnectionSet> {
    if params.extras.is_none() {
        return Err(invalid("extended family needs multipliers p_1..p_{k-2}"));
    }
    params.connection_set()
}

pub fn family_orbit(params: &FamilyParams) -> Result<Vec<ConnectionSet>> {
    params.orbit()
}

pub fn mirror_params(params: &FamilyParams) -> FamilyParams {
    params.mirror()
}

pub fn d_value(params: &FamilyParams) -> u64 {
    params.d_value()
}

/// Order-`8n` family with respect to `r = 2`:
/// `R = {2s-1, 4n-2s+1, 2p_1, ...}`, `S = {2n-(2s-1), 2n+2s-1, 2p_1, ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct R2FamilyParams {
    n: u64,
    s: u64,
    evens: Vec<u64>,
}

impl R2FamilyParams {
    pub fn new(n: u64, s: u64, evens: Vec<u64>) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("n must be at least 2 (n = {n})")));
        }
        if s == 0 || 2 * s - 1 > 2 * n - 1 {
            return Err(invalid(format!(
                "s must satisfy 1 ≤ 2s−1 ≤ 2n−1 (s = {s}, n = {n})"
            )));
        }
        if 2 * s - 1 == n {
            return Err(invalid(format!("n ≠ 2s−1 is required (n = {n}, s = {s})")));
        }
        let evens = canonical_multipliers(evens)?;
        Ok(R2FamilyParams { n, s, evens })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn evens(&self) -> &[u64] {
        &self.evens
    }

    /// `8n`.
    pub fn order(&self) -> u64 {
        8 * self.n
    }

    pub fn modulus(&self) -> Modulus {
        Modulus::new(self.order()).expect("8n ≥ 16")
    }
}

pub fn r2_family(params: &R2FamilyParams) -> Result<(ConnectionSet, ConnectionSet)> {
    let modulus = params.modulus();
    let (n, odd) = (params.n as i64, 2 * params.s as i64 - 1);
    let mut evens = Vec::with_capacity(params.evens.len());
    for &e in &params.evens {
        let v = modulus.reduce(2 * e as i64);
        if v == 0 {
            return Err(Error::JumpCollision(format!("2·{e} ≡ 0 mod {modulus}")));
        }
        let v = modulus.reflect(v);
        if evens.contains(&v) {
            return Err(Error::JumpCollision(format!(
                "2·{e} reduces onto jump {v} already produced by another multiplier"
            )));
        }
        evens.push(v);
    }
    let build = |a: i64, b: i64| -> Result<ConnectionSet> {
        let mut jumps: Vec<u64> = [a, b]
            .iter()
            .map(|&v| modulus.reflect(modulus.reduce(v)))
            .collect();
        jumps.extend(&evens);
        ConnectionSet::new(modulus, jumps)
    };
    let r = build(odd, 4 * n - odd)?;
    let s = build(2 * n - odd, 2 * n + odd)?;
    Ok((r, s))
}
