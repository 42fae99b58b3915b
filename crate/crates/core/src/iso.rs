//! Adam's (multiplier) isomorphism, Type-2 isomorphism through `Θ_{n,r,t}`,
//! and the Type-2 group `T2_{n,r}(C_n(R))`.

use std::collections::BTreeSet;
use std::fmt;

use crate::circulant::{CirculantGraph, ConnectionSet};
use crate::error::{Error, Result};
use crate::modring::{gcd_unchecked, scale_set, units};
use crate::transform::{circulant_image, theta_graph, LabeledGraph, ThetaMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    Identical,
    Adams { a: u64 },
    Type2 { r: u64, t: u64 },
    NotRelated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoVerdict {
    pub kind: VerdictKind,
    pub notes: Vec<String>,
}

impl IsoVerdict {
    fn new(kind: VerdictKind) -> Self {
        IsoVerdict {
            kind,
            notes: Vec::new(),
        }
    }

    /// Identical, Adam's, or Type-2.
    pub fn is_related(&self) -> bool {
        !matches!(self.kind, VerdictKind::NotRelated)
    }
}

impl fmt::Display for IsoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VerdictKind::Identical => write!(f, "identical"),
            VerdictKind::Adams { a } => write!(f, "adams a={a}"),
            VerdictKind::Type2 { r, t } => write!(f, "type2 r={r} t={t}"),
            VerdictKind::NotRelated => write!(f, "not-related-by-these-methods"),
        }
    }
}

fn same_modulus(g1: &CirculantGraph, g2: &CirculantGraph) -> Result<()> {
    if g1.n() != g2.n() {
        return Err(Error::ModulusMismatch {
            left: g1.n().get(),
            right: g2.n().get(),
        });
    }
    Ok(())
}

/// Sorted multiset `{gcd(n, r) : r ∈ R}`.
pub fn gcd_signature(g: &CirculantGraph) -> Vec<u64> {
    let n = g.n().get();
    let mut sig: Vec<u64> = g.jumps().iter().map(|&r| gcd_unchecked(n, r)).collect();
    sig.sort_unstable();
    sig
}

/// Necessary condition for isomorphism: equal gcd signatures.
pub fn gcd_signature_compatible(g1: &CirculantGraph, g2: &CirculantGraph) -> Result<bool> {
    same_modulus(g1, g2)?;
    Ok(gcd_signature(g1) == gcd_signature(g2))
}

/// Least unit `a` with `a·R1 = R2`, by exhaustive sweep over `φ_n`.
pub fn adams_witness(g1: &CirculantGraph, g2: &CirculantGraph) -> Result<Option<u64>> {
    same_modulus(g1, g2)?;
    if g1.jumps().len() != g2.jumps().len() {
        return Ok(None);
    }
    let n = g1.n();
    let target = g2.connection_set();
    for a in units(n).iter() {
        if &scale_set(n, a, g1.connection_set())? == target {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// The Type-1 orbit `{a·R : a ∈ φ_n}`.
pub fn adams_orbit(g: &CirculantGraph) -> BTreeSet<ConnectionSet> {
    let n = g.n();
    units(n)
        .iter()
        .map(|a| scale_set(n, a, g.connection_set()).expect("units are units"))
        .collect()
}

fn check_type2_scope(g: &CirculantGraph, r: u64) -> Result<ThetaMap> {
    let map = ThetaMap::new(g.n(), r, 0)?;
    g.require_jump(r)?;
    if g.jumps().len() < 3 {
        return Err(Error::TooFewJumps(g.jumps().len()));
    }
    Ok(map)
}

/// Every `t ∈ [1, n/m - 1]` whose image is circulant, differs from `R`, and
/// is not Adam's isomorphic to `C_n(R)`; ascending in `t`.
pub fn search_type2(g: &CirculantGraph, r: u64) -> Result<Vec<(u64, CirculantGraph)>> {
    let map = check_type2_scope(g, r)?;
    let mut found = Vec::new();
    for t in 1..map.period() {
        if let Some(img) = circulant_image(&map.with_t(t), g)? {
            if img != *g && adams_witness(g, &img)?.is_none() {
                found.push((t, img));
            }
        }
    }
    Ok(found)
}

/// All `n/m` images `Θ_{n,r,t}(C_n(R))`, circulant or not, in `t` order.
pub fn v_orbit(g: &CirculantGraph, r: u64) -> Result<Vec<LabeledGraph>> {
    let map = ThetaMap::new(g.n(), r, 0)?;
    (0..map.period())
        .map(|t| theta_graph(&map.with_t(t), g))
        .collect()
}

/// `T2_{n,r}(C_n(R))`: images at `t = 0, t1, 2·t1, ...` up to the first
/// return to `R`, where `t1` is the least Type-2 witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T2Orbit {
    base: CirculantGraph,
    map: ThetaMap,
    t1: u64,
    members: Vec<(u64, CirculantGraph)>,
}

impl T2Orbit {
    pub fn base(&self) -> &CirculantGraph {
        &self.base
    }

    pub fn r(&self) -> u64 {
        self.map.r()
    }

    pub fn t1(&self) -> u64 {
        self.t1
    }

    /// `(t, graph)` pairs; the first is `(0, base)`.
    pub fn members(&self) -> &[(u64, CirculantGraph)] {
        &self.members
    }

    pub fn graphs(&self) -> impl Iterator<Item = &CirculantGraph> {
        self.members.iter().map(|(_, g)| g)
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// `q·t1 = n/m`, i.e. the orbit uses the whole period of `Θ_{n,r,·}`.
    pub fn spans_full_period(&self) -> bool {
        self.order() as u64 * self.t1 == self.map.period()
    }

    fn index_of(&self, g: &CirculantGraph) -> Option<usize> {
        self.members.iter().position(|(_, h)| h == g)
    }

    /// Member produced by `Θ_{t_a} ∘ Θ_{t_b}` applied to the base.
    pub fn compose_members(&self, a: usize, b: usize) -> Result<CirculantGraph> {
        let ma = self.map.with_t(self.members[a].0);
        let mb = self.map.with_t(self.members[b].0);
        let composed = ma.compose(&mb)?;
        circulant_image(&composed, &self.base)?.ok_or_else(|| {
            Error::GroupLaw(format!("Θ image at t={} is not circulant", composed.t()))
        })
    }

    /// Identity, pairwise distinctness, closure, inverses, and the cyclic
    /// law `member_a ∘ member_b = member_{a+b mod q}`.
    pub fn verify_group(&self) -> Result<()> {
        let q = self.order();
        if self.members.first().map(|(t, g)| (*t, g)) != Some((0, &self.base)) {
            return Err(Error::GroupLaw("identity is not the first member".into()));
        }
        let distinct: BTreeSet<_> = self.graphs().collect();
        if distinct.len() != q {
            return Err(Error::GroupLaw("members are not pairwise distinct".into()));
        }
        for a in 0..q {
            for b in 0..q {
                let prod = self.compose_members(a, b)?;
                match self.index_of(&prod) {
                    Some(idx) if idx == (a + b) % q => {}
                    Some(idx) => {
                        return Err(Error::GroupLaw(format!(
                            "member {a} ∘ member {b} gave member {idx}, expected {}",
                            (a + b) % q
                        )))
                    }
                    None => {
                        return Err(Error::GroupLaw(format!(
                            "member {a} ∘ member {b} = {prod} is outside the orbit"
                        )))
                    }
                }
            }
            let inv = self.map.with_t(self.members[a].0).inverse();
            let img = circulant_image(&inv, &self.base)?;
            if img.as_ref().and_then(|g| self.index_of(g)) != Some((q - a) % q) {
                return Err(Error::GroupLaw(format!("member {a} has no inverse")));
            }
        }
        Ok(())
    }

    /// No two members are Adam's isomorphic (exhaustive unit sweep per pair).
    pub fn pairwise_non_adams(&self) -> Result<bool> {
        for (i, (_, a)) in self.members.iter().enumerate() {
            for (_, b) in &self.members[i + 1..] {
                if adams_witness(a, b)?.is_some() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn t2_orbit(g: &CirculantGraph, r: u64) -> Result<Option<T2Orbit>> {
    let found = search_type2(g, r)?;
    let Some((t1, _)) = found.first().cloned() else {
        return Ok(None);
    };
    let map = ThetaMap::new(g.n(), r, 0)?;
    let period = map.period();
    let mut members = vec![(0, g.clone())];
    let mut t = t1;
    while t % period != 0 {
        let img = circulant_image(&map.with_t(t), g)?
            .ok_or_else(|| Error::GroupLaw(format!("Θ image at t={t} is not circulant")))?;
        if img == *g {
            break;
        }
        members.push((t, img));
        t += t1;
    }
    let orbit = T2Orbit {
        base: g.clone(),
        map,
        t1,
        members,
    };
    orbit.verify_group()?;
    Ok(Some(orbit))
}

/// Identical, then Adam's, then Type-2 over the given `r` or every shared
/// jump with `gcd(n, r) > 1` in ascending order.
pub fn classify(g1: &CirculantGraph, g2: &CirculantGraph, r: Option<u64>) -> Result<IsoVerdict> {
    same_modulus(g1, g2)?;
    if g1 == g2 {
        return Ok(IsoVerdict::new(VerdictKind::Identical));
    }
    if let Some(a) = adams_witness(g1, g2)? {
        return Ok(IsoVerdict::new(VerdictKind::Adams { a }));
    }
    let mut verdict = IsoVerdict::new(VerdictKind::NotRelated);
    if g1.jumps().len() < 3 || g2.jumps().len() < 3 {
        verdict.notes.push(format!(
            "Type-2 testing needs |R| = |S| >= 3 (got {} and {})",
            g1.jumps().len(),
            g2.jumps().len()
        ));
        return Ok(verdict);
    }
    if g1.jumps().len() != g2.jumps().len() {
        verdict.notes.push("connection sets differ in size".into());
        return Ok(verdict);
    }
    let n = g1.n();
    let candidates: Vec<u64> = match r {
        Some(r) => {
            g1.require_jump(r)?;
            let r = n.reflect(r);
            if gcd_unchecked(n.get(), r) == 1 {
                return Err(Error::CoprimeJump {
                    r,
                    modulus: n.get(),
                });
            }
            if !g2.connection_set().contains_residue(r) {
                verdict.notes.push(format!(
                    "{r} is not a jump of {g2}; no Type-2 map w.r.t. it"
                ));
                return Ok(verdict);
            }
            vec![r]
        }
        None => g1
            .jumps()
            .iter()
            .copied()
            .filter(|&r| gcd_unchecked(n.get(), r) > 1 && g2.connection_set().contains_residue(r))
            .collect(),
    };
    if candidates.is_empty() {
        verdict
            .notes
            .push("no shared jump r with gcd(n, r) > 1".into());
        return Ok(verdict);
    }
    for r in candidates {
        let map = ThetaMap::new(n, r, 0)?;
        for t in 1..map.period() {
            if circulant_image(&map.with_t(t), g1)?.as_ref() == Some(g2) {
                return Ok(IsoVerdict::new(VerdictKind::Type2 { r, t }));
            }
        }
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: u64, jumps: &[u64]) -> CirculantGraph {
        CirculantGraph::from_jumps(n, jumps).unwrap()
    }

    #[test]
    fn signature() {
        let a = c(27, &[1, 3, 8, 10]);
        assert!(gcd_signature_compatible(&a, &c(27, &[3, 4, 5, 13])).unwrap());
        assert!(!gcd_signature_compatible(&a, &c(27, &[1, 2, 8, 10])).unwrap());
        assert!(gcd_signature_compatible(&a, &a).unwrap());
        assert!(gcd_signature_compatible(&a, &c(28, &[1])).is_err());
    }

    #[test]
    fn adams_examples() {
        let g = c(81, &[3, 7, 20, 34]);
        assert_eq!(
            adams_witness(&g, &c(81, &[8, 15, 19, 35])).unwrap(),
            Some(5)
        );
        assert_eq!(adams_witness(&g, &g).unwrap(), Some(1));
        let h = c(27, &[1, 3, 8, 10]);
        assert_eq!(adams_witness(&h, &c(27, &[3, 4, 5, 13])).unwrap(), None);
    }

    #[test]
    fn orbit_examples() {
        let orbit = adams_orbit(&c(5, &[1]));
        let sets: Vec<&[u64]> = orbit.iter().map(|s| s.jumps()).collect();
        assert_eq!(sets, vec![&[1][..], &[2][..]]);

        let orbit = adams_orbit(&c(81, &[3, 7, 20, 34]));
        assert!(orbit.contains(c(81, &[8, 15, 19, 35]).connection_set()));
        let orbit = adams_orbit(&c(27, &[1, 3, 8, 10]));
        assert!(!orbit.contains(c(27, &[3, 4, 5, 13]).connection_set()));
    }

    #[test]
    fn search_examples() {
        let found = search_type2(&c(27, &[1, 3, 8, 10]), 3).unwrap();
        let ts: Vec<u64> = found.iter().map(|(t, _)| *t).collect();
        assert_eq!(ts, vec![1, 2, 4, 5, 7, 8]);
        assert_eq!(found[0].1, c(27, &[3, 4, 5, 13]));
        assert_eq!(found[1].1, c(27, &[2, 3, 7, 11]));

        let found = search_type2(&c(16, &[1, 2, 7]), 2).unwrap();
        assert_eq!(found, vec![(2, c(16, &[2, 3, 5])), (6, c(16, &[2, 3, 5]))]);

        assert!(search_type2(&c(8, &[1, 2, 3]), 2).unwrap().is_empty());
    }

    #[test]
    fn search_errors() {
        assert!(matches!(
            search_type2(&c(27, &[1, 3, 8, 10]), 1),
            Err(Error::CoprimeJump { .. })
        ));
        assert!(matches!(
            search_type2(&c(27, &[1, 3]), 3),
            Err(Error::TooFewJumps(2))
        ));
    }

    #[test]
    fn t2_examples() {
        let orbit = t2_orbit(&c(27, &[1, 3, 8, 10]), 3).unwrap().unwrap();
        assert_eq!(orbit.t1(), 1);
        let sets: Vec<&[u64]> = orbit.graphs().map(|g| g.jumps()).collect();
        assert_eq!(
            sets,
            vec![&[1, 3, 8, 10][..], &[3, 4, 5, 13], &[2, 3, 7, 11]]
        );
        assert!(!orbit.spans_full_period());
        assert!(orbit.pairwise_non_adams().unwrap());

        let orbit = t2_orbit(&c(16, &[1, 2, 7]), 2).unwrap().unwrap();
        assert_eq!(orbit.order(), 2);
        assert_eq!(orbit.t1(), 2);
        assert_eq!(orbit.members()[1].1, c(16, &[2, 3, 5]));

        assert_eq!(t2_orbit(&c(8, &[1, 2, 3]), 2).unwrap(), None);
    }

    #[test]
    fn v_orbit_sizes() {
        assert_eq!(v_orbit(&c(27, &[1, 3, 8, 10]), 3).unwrap().len(), 9);
        assert_eq!(v_orbit(&c(81, &[3, 7, 20, 34]), 3).unwrap().len(), 27);
        assert_eq!(v_orbit(&c(16, &[1, 2, 7]), 2).unwrap().len(), 8);
        assert!(v_orbit(&c(16, &[1, 2, 7]), 1).is_err());
    }

    #[test]
    fn classify_examples() {
        let g = c(81, &[3, 7, 20, 34]);
        assert_eq!(
            classify(&g, &c(81, &[8, 15, 19, 35]), None).unwrap().kind,
            VerdictKind::Adams { a: 5 }
        );
        assert_eq!(
            classify(&g, &c(81, &[3, 11, 16, 38]), Some(3))
                .unwrap()
                .kind,
            VerdictKind::Type2 { r: 3, t: 3 }
        );
        assert_eq!(
            classify(&g, &c(81, &[3, 11, 16, 38]), None).unwrap().kind,
            VerdictKind::Type2 { r: 3, t: 3 }
        );
        assert_eq!(classify(&g, &g, None).unwrap().kind, VerdictKind::Identical);
        assert_eq!(
            classify(&c(27, &[1, 3, 8, 10]), &c(27, &[1, 3, 8, 11]), None)
                .unwrap()
                .kind,
            VerdictKind::NotRelated
        );
        let v = classify(&c(27, &[1, 3]), &c(27, &[1, 4]), None).unwrap();
        assert_eq!(v.kind, VerdictKind::NotRelated);
        assert!(v.notes[0].contains(">= 3"));
        assert!(classify(&g, &c(82, &[1]), None).is_err());
    }
}
