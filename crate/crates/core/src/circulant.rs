//! Circulant graphs `C_n(R)` on the vertex set `Z_n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modring::{gcd_unchecked, Modulus};

/// Jump sizes of a circulant graph in canonical half-form: sorted, distinct,
/// each in `[1, ⌊n/2⌋]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ConnectionSet {
    modulus: Modulus,
    jumps: Vec<u64>,
}

impl ConnectionSet {
    /// Validates and canonicalizes half-form jumps. Duplicates collapse; an
    /// empty set is allowed here (graphs reject it).
    pub fn new(modulus: Modulus, mut jumps: Vec<u64>) -> Result<Self> {
        let max = modulus.half();
        if let Some(&bad) = jumps.iter().find(|&&j| j == 0 || j > max) {
            return Err(Error::JumpOutOfRange {
                jump: bad,
                max,
                modulus: modulus.get(),
            });
        }
        jumps.sort_unstable();
        jumps.dedup();
        Ok(ConnectionSet { modulus, jumps })
    }

    /// Half-form of an arbitrary symmetric listing such as `{1,3,24,26}` mod 27.
    /// Fails when the listing is not closed under negation.
    pub fn from_symmetric(modulus: Modulus, values: &[u64]) -> Result<Self> {
        let n = modulus.get();
        let mut full: Vec<u64> = values.iter().map(|v| v % n).collect();
        full.sort_unstable();
        full.dedup();
        if full.first() == Some(&0) {
            return Err(Error::DegenerateJump {
                value: 0,
                modulus: n,
            });
        }
        if let Some(&v) = full
            .iter()
            .find(|&&v| full.binary_search(&(n - v)).is_err())
        {
            return Err(Error::Parse(format!(
                "{v} is listed but {} is not; the set is not symmetric mod {n}",
                n - v
            )));
        }
        let half = full.into_iter().filter(|&v| v <= n / 2).collect();
        ConnectionSet::new(modulus, half)
    }

    pub(crate) fn from_sorted_unchecked(modulus: Modulus, jumps: Vec<u64>) -> Self {
        debug_assert!(jumps.windows(2).all(|w| w[0] < w[1]));
        ConnectionSet { modulus, jumps }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn jumps(&self) -> &[u64] {
        &self.jumps
    }

    pub fn len(&self) -> usize {
        self.jumps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jumps.is_empty()
    }

    /// Membership of a residue in the expanded symmetric set.
    pub fn contains_residue(&self, v: u64) -> bool {
        let v = v % self.modulus.get();
        v != 0 && self.jumps.binary_search(&self.modulus.reflect(v)).is_ok()
    }

    /// The full symmetric subset `{r, n - r}` of `Z_n \ {0}`, ascending.
    pub fn expanded(&self) -> Vec<u64> {
        let n = self.modulus.get();
        let mut full: Vec<u64> = self.jumps.iter().flat_map(|&r| [r, n - r]).collect();
        full.sort_unstable();
        full.dedup();
        full
    }
}

impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.jumps))
    }
}

pub(crate) fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Read-only adjacency, shared by circulant graphs and arbitrary labeled
/// graphs on `Z_n`.
pub trait Adjacency {
    fn order(&self) -> u64;
    fn has_edge(&self, u: u64, v: u64) -> bool;
    /// Sorted neighbors of `v`.
    fn neighbors_of(&self, v: u64) -> Vec<u64>;
    /// Simple (undirected, loop-free) edge count.
    fn simple_edge_count(&self) -> u64;
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CirculantGraph {
    jumps: ConnectionSet,
}

impl CirculantGraph {
    pub fn new(jumps: ConnectionSet) -> Result<Self> {
        if jumps.is_empty() {
            return Err(Error::EmptyConnectionSet);
        }
        Ok(CirculantGraph { jumps })
    }

    /// `C_n(jumps)` from a half-form jump list.
    pub fn from_jumps(n: u64, jumps: &[u64]) -> Result<Self> {
        let n = Modulus::new(n)?;
        CirculantGraph::new(ConnectionSet::new(n, jumps.to_vec())?)
    }

    pub fn n(&self) -> Modulus {
        self.jumps.modulus()
    }

    pub fn connection_set(&self) -> &ConnectionSet {
        &self.jumps
    }

    pub fn jumps(&self) -> &[u64] {
        self.jumps.jumps()
    }

    fn has_antipodal_jump(&self) -> bool {
        let n = self.n().get();
        n.is_multiple_of(2) && self.jumps().last() == Some(&(n / 2))
    }

    pub fn degree(&self) -> u64 {
        let k = self.jumps.len() as u64;
        if self.has_antipodal_jump() {
            2 * k - 1
        } else {
            2 * k
        }
    }

    pub fn neighbors(&self, v: u64) -> Vec<u64> {
        let n = self.n();
        let v = v % n.get();
        let mut out: Vec<u64> = self
            .jumps()
            .iter()
            .flat_map(|&r| [n.add(v, r), n.sub(v, r)])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Simple edges: `n·k`, less `n/2` when `n/2` is a jump.
    pub fn edge_count(&self) -> u64 {
        let n = self.n().get();
        let k = self.jumps.len() as u64;
        if self.has_antipodal_jump() {
            n * k - n / 2
        } else {
            n * k
        }
    }

    /// Edge count with each antipodal edge counted twice, i.e. `n·k`.
    pub fn double_edge_count(&self) -> u64 {
        self.n().get() * self.jumps.len() as u64
    }

    /// Connected iff `gcd(n, r_1, ..., r_k) = 1`.
    pub fn is_connected(&self) -> bool {
        self.jumps()
            .iter()
            .fold(self.n().get(), |acc, &r| gcd_unchecked(acc, r))
            == 1
    }

    /// Length and number of the periodic cycles traced by jump `r`:
    /// `(n / gcd(n, r), gcd(n, r))`.
    pub fn periodic_cycles(&self, r: u64) -> Result<(u64, u64)> {
        self.require_jump(r)?;
        let n = self.n().get();
        let g = gcd_unchecked(n, r % n);
        Ok((n / g, g))
    }

    pub(crate) fn require_jump(&self, r: u64) -> Result<()> {
        if self.jumps.contains_residue(r) {
            Ok(())
        } else {
            Err(Error::NotAJump {
                jump: r,
                modulus: self.n().get(),
                jumps: self.jumps.to_string(),
            })
        }
    }

    /// First row of the adjacency matrix.
    pub fn adjacency_row(&self) -> Vec<u8> {
        (0..self.n().get())
            .map(|j| u8::from(self.jumps.contains_residue(j)))
            .collect()
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let n = self.n().get();
        let mut out = Vec::with_capacity(self.edge_count() as usize);
        for u in 0..n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Graphviz rendering with nodes `"0"..."n-1"`.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph \"C_{}({})\" {{\n", self.n(), self.jumps);
        for v in 0..self.n().get() {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  \"{u}\" -- \"{v}\";\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl Adjacency for CirculantGraph {
    fn order(&self) -> u64 {
        self.n().get()
    }

    fn has_edge(&self, u: u64, v: u64) -> bool {
        let n = self.n();
        self.jumps.contains_residue(n.sub(v, u))
    }

    fn neighbors_of(&self, v: u64) -> Vec<u64> {
        self.neighbors(v)
    }

    fn simple_edge_count(&self) -> u64 {
        self.edge_count()
    }
}

impl fmt::Display for CirculantGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}({})", self.n(), self.jumps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: u64, jumps: &[u64]) -> CirculantGraph {
        CirculantGraph::from_jumps(n, jumps).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(c(27, &[1, 3, 8, 10]).to_string(), "C_27(1,3,8,10)");
        assert_eq!(c(16, &[7, 2, 1]).jumps(), &[1, 2, 7]);
        assert!(matches!(
            CirculantGraph::from_jumps(8, &[5]),
            Err(Error::JumpOutOfRange {
                jump: 5,
                max: 4,
                ..
            })
        ));
        assert_eq!(
            CirculantGraph::from_jumps(8, &[]),
            Err(Error::EmptyConnectionSet)
        );
        assert!(CirculantGraph::from_jumps(8, &[0]).is_err());
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(c(27, &[1, 3]).neighbors(0), vec![1, 3, 24, 26]);
        assert_eq!(c(16, &[1, 2, 7]).neighbors(0), vec![1, 2, 7, 9, 14, 15]);
        assert_eq!(c(8, &[1, 4]).neighbors(0), vec![1, 4, 7]);
        assert_eq!(c(8, &[1, 4]).degree(), 3);
    }

    #[test]
    fn edge_counts() {
        assert_eq!(c(27, &[1, 3, 8, 10]).edge_count(), 108);
        assert_eq!(c(8, &[1, 4]).edge_count(), 12);
        assert_eq!(c(8, &[1, 4]).double_edge_count(), 16);
        assert_eq!(c(16, &[1, 2, 7]).edge_count(), 48);
        assert_eq!(c(8, &[1, 4]).edges().len(), 12);
    }

    #[test]
    fn connectivity() {
        assert!(!c(27, &[3, 9]).is_connected());
        assert!(c(27, &[1, 3]).is_connected());
        assert!(c(81, &[3, 7, 20, 34]).is_connected());
    }

    #[test]
    fn periodic_cycles_examples() {
        let g = c(81, &[3, 7, 20, 34]);
        assert_eq!(g.periodic_cycles(3).unwrap(), (27, 3));
        assert_eq!(g.periodic_cycles(78).unwrap(), (27, 3));
        assert_eq!(g.periodic_cycles(7).unwrap(), (81, 1));
        assert!(matches!(g.periodic_cycles(5), Err(Error::NotAJump { .. })));
        let g = c(1715, &[7, 17, 228, 262, 473, 507, 718, 752]);
        assert_eq!(g.periodic_cycles(7).unwrap(), (245, 7));
    }

    #[test]
    fn adjacency_row_is_symmetric() {
        let row = c(16, &[1, 2, 7]).adjacency_row();
        assert_eq!(row[0], 0);
        for i in 1..16 {
            assert_eq!(row[i], row[16 - i]);
        }
    }

    #[test]
    fn symmetric_listing() {
        let n = Modulus::new(27).unwrap();
        let s = ConnectionSet::from_symmetric(n, &[1, 3, 8, 10, 17, 19, 24, 26]).unwrap();
        assert_eq!(s.jumps(), &[1, 3, 8, 10]);
        assert_eq!(s.expanded(), vec![1, 3, 8, 10, 17, 19, 24, 26]);
        assert!(ConnectionSet::from_symmetric(n, &[1, 3, 8, 10, 17, 19, 24, 25]).is_err());
    }

    #[test]
    fn dot_export() {
        let dot = c(5, &[1]).to_dot();
        assert!(dot.starts_with("graph \"C_5(1)\" {"));
        assert!(dot.contains("\"0\" -- \"1\";"));
        assert!(dot.contains("\"0\" -- \"4\";"));
        assert_eq!(dot.matches("--").count(), 5);
    }
}
