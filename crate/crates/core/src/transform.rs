//! The vertex map `Θ_{n,r,t}: x ↦ x + j·t·m (mod n)` where `m = gcd(n, r)`
//! and `j = x mod m`, its action on circulant graphs, and circulancy
//! detection of the images.

use std::collections::BTreeSet;
use std::fmt;

use crate::circulant::{Adjacency, CirculantGraph, ConnectionSet};
use crate::error::{Error, Result};
use crate::modring::{gcd_unchecked, Modulus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaMap {
    n: Modulus,
    r: u64,
    m: u64,
    t: u64,
}

impl ThetaMap {
    /// `r` is stored in half-form; `t` is reduced mod `n/m`.
    pub fn new(n: Modulus, r: u64, t: u64) -> Result<Self> {
        let r = r % n.get();
        if r == 0 {
            return Err(Error::DegenerateJump {
                value: 0,
                modulus: n.get(),
            });
        }
        let m = gcd_unchecked(n.get(), r);
        if m == 1 {
            return Err(Error::CoprimeJump {
                r,
                modulus: n.get(),
            });
        }
        let period = n.get() / m;
        Ok(ThetaMap {
            n,
            r: n.reflect(r),
            m,
            t: t % period,
        })
    }

    pub fn n(&self) -> Modulus {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// `gcd(n, r)`.
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `n / m`, the number of distinct maps for this `(n, r)`.
    pub fn period(&self) -> u64 {
        self.n.get() / self.m
    }

    pub fn with_t(&self, t: u64) -> Self {
        ThetaMap {
            t: t % self.period(),
            ..*self
        }
    }

    pub fn apply(&self, x: u64) -> u64 {
        let x = x % self.n.get();
        let j = x % self.m;
        let shift = self.n.mul(j, self.n.mul(self.t, self.m));
        self.n.add(x, shift)
    }

    /// Image of every vertex, indexed by vertex.
    pub fn table(&self) -> Vec<u64> {
        (0..self.n.get()).map(|x| self.apply(x)).collect()
    }

    /// `Θ_t ∘ Θ_t' = Θ_{t + t' mod n/m}`.
    pub fn compose(&self, other: &ThetaMap) -> Result<ThetaMap> {
        if self.n != other.n || self.r != other.r {
            return Err(Error::ComposeMismatch {
                n1: self.n.get(),
                r1: self.r,
                n2: other.n.get(),
                r2: other.r,
            });
        }
        Ok(self.with_t(self.t + other.t))
    }

    pub fn inverse(&self) -> ThetaMap {
        self.with_t(self.period() - self.t)
    }
}

impl fmt::Display for ThetaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Θ_{{{},{},{}}}", self.n, self.r, self.t)
    }
}

pub fn theta_vertex(map: &ThetaMap, x: u64) -> u64 {
    map.apply(x)
}

pub fn compose(a: &ThetaMap, b: &ThetaMap) -> Result<ThetaMap> {
    a.compose(b)
}

/// A simple graph on `Z_n` with no assumed symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    n: Modulus,
    adj: Vec<Vec<u64>>,
}

impl LabeledGraph {
    pub fn from_edges<I>(n: Modulus, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let size = n.get() as usize;
        let mut adj = vec![Vec::new(); size];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n.get() {
                    return Err(Error::ResidueOutOfRange {
                        value: w,
                        modulus: n.get(),
                    });
                }
            }
            if u == v {
                return Err(Error::DegenerateJump {
                    value: 0,
                    modulus: n.get(),
                });
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(LabeledGraph { n, adj })
    }

    pub fn from_circulant(g: &CirculantGraph) -> Self {
        let adj = (0..g.n().get()).map(|v| g.neighbors(v)).collect();
        LabeledGraph { n: g.n(), adj }
    }

    pub fn n(&self) -> Modulus {
        self.n
    }

    pub fn edges(&self) -> BTreeSet<(u64, u64)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| {
                let u = u as u64;
                list.iter().filter(move |&&v| u < v).map(move |&v| (u, v))
            })
            .collect()
    }

    /// Symmetric equidistance at `v_0`: `0 ~ j ⇔ 0 ~ n - j`.
    pub fn satisfies_equidistance(&self) -> bool {
        let n = self.n.get();
        self.adj[0]
            .iter()
            .all(|&j| self.adj[0].binary_search(&(n - j)).is_ok())
    }

    /// Whether every vertex's neighborhood is `v_0`'s shifted by the vertex,
    /// i.e. the graph is invariant under rotation.
    pub fn is_circulant(&self) -> bool {
        let n = self.n;
        let base = &self.adj[0];
        let mut shifted = Vec::with_capacity(base.len());
        (1..n.get()).all(|u| {
            shifted.clear();
            shifted.extend(base.iter().map(|&s| n.add(u, s)));
            shifted.sort_unstable();
            shifted == self.adj[u as usize]
        })
    }

    /// `C_n(S)` with `S` read off `v_0`'s neighbors, when the graph is circulant.
    pub fn as_circulant(&self) -> Option<CirculantGraph> {
        if !(self.satisfies_equidistance() && self.is_circulant()) {
            return None;
        }
        let set = ConnectionSet::from_symmetric(self.n, &self.adj[0]).ok()?;
        CirculantGraph::new(set).ok()
    }
}

impl Adjacency for LabeledGraph {
    fn order(&self) -> u64 {
        self.n.get()
    }

    fn has_edge(&self, u: u64, v: u64) -> bool {
        self.adj
            .get(u as usize)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    fn neighbors_of(&self, v: u64) -> Vec<u64> {
        self.adj[v as usize].clone()
    }

    fn simple_edge_count(&self) -> u64 {
        self.adj.iter().map(|l| l.len() as u64).sum::<u64>() / 2
    }
}

pub fn satisfies_equidistance(h: &LabeledGraph) -> bool {
    h.satisfies_equidistance()
}

fn check_applicable(map: &ThetaMap, g: &CirculantGraph) -> Result<()> {
    if map.n() != g.n() {
        return Err(Error::ModulusMismatch {
            left: map.n().get(),
            right: g.n().get(),
        });
    }
    g.require_jump(map.r())
}

/// Edge image `{(Θ(u), Θ(v)) : (u, v) ∈ E(g)}`.
pub fn theta_graph(map: &ThetaMap, g: &CirculantGraph) -> Result<LabeledGraph> {
    check_applicable(map, g)?;
    let table = map.table();
    let edges = g
        .edges()
        .into_iter()
        .map(|(u, v)| (table[u as usize], table[v as usize]));
    LabeledGraph::from_edges(g.n(), edges)
}

/// The image as `C_n(S)` if it is circulant. The `v_0` equidistance test and
/// the all-vertex rotation test are both run and must agree.
pub fn circulant_image(map: &ThetaMap, g: &CirculantGraph) -> Result<Option<CirculantGraph>> {
    if map.t() == 0 {
        check_applicable(map, g)?;
        return Ok(Some(g.clone()));
    }
    let h = theta_graph(map, g)?;
    let equidistant = h.satisfies_equidistance();
    let circulant = h.is_circulant();
    if equidistant != circulant {
        return Err(Error::CirculancyDisagreement {
            equidistant,
            circulant,
        });
    }
    if !circulant {
        return Ok(None);
    }
    let set = ConnectionSet::from_symmetric(g.n(), &h.neighbors_of(0))?;
    Ok(Some(CirculantGraph::new(set)?))
}
