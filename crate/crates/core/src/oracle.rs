//! Independent checks that do not go through the connection-set algebra:
//! explicit edge-by-edge verification of vertex bijections, a backtracking
//! isomorphism search for small orders, and a brute-force `t` sweep.

use std::collections::BTreeSet;

use crate::circulant::{Adjacency, CirculantGraph};
use crate::error::{Error, Result};
use crate::modring::{gcd_unchecked, Modulus};
use crate::transform::ThetaMap;

/// A permutation of `Z_n`; vertex `v` maps to `image[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexBijection {
    n: Modulus,
    image: Vec<u64>,
}

impl VertexBijection {
    pub fn new(n: Modulus, image: Vec<u64>) -> Result<Self> {
        let mut seen = vec![false; n.get() as usize];
        if image.len() != seen.len() {
            return Err(Error::NotAPermutation(n.get()));
        }
        for &v in &image {
            match seen.get_mut(v as usize) {
                Some(slot) if !*slot => *slot = true,
                _ => return Err(Error::NotAPermutation(n.get())),
            }
        }
        Ok(VertexBijection { n, image })
    }

    pub fn identity(n: Modulus) -> Self {
        VertexBijection {
            n,
            image: (0..n.get()).collect(),
        }
    }

    pub fn from_theta(map: &ThetaMap) -> Result<Self> {
        VertexBijection::new(map.n(), map.table())
    }

    /// `x ↦ a·x`, the map behind Adam's isomorphism.
    pub fn multiplier(n: Modulus, a: u64) -> Result<Self> {
        VertexBijection::new(n, (0..n.get()).map(|x| n.mul(a, x)).collect())
    }

    pub fn n(&self) -> Modulus {
        self.n
    }

    pub fn apply(&self, v: u64) -> u64 {
        self.image[v as usize]
    }

    pub fn image(&self) -> &[u64] {
        &self.image
    }
}

/// Every edge of `g` maps onto an edge of `h` and the edge counts agree.
pub fn verify_bijection_is_isomorphism<H: Adjacency>(
    f: &VertexBijection,
    g: &CirculantGraph,
    h: &H,
) -> bool {
    if f.n() != g.n() || h.order() != g.n().get() {
        return false;
    }
    g.edge_count() == h.simple_edge_count()
        && g.edges()
            .into_iter()
            .all(|(u, v)| h.has_edge(f.apply(u), f.apply(v)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Isomorphic(VertexBijection),
    NotIsomorphic,
    /// Budget exhausted after visiting this many search nodes.
    Inconclusive {
        nodes: u64,
    },
}

struct DenseGraph {
    adj: Vec<Vec<bool>>,
    common: Vec<Vec<u32>>,
}

impl DenseGraph {
    fn build<G: Adjacency>(g: &G) -> Self {
        let n = g.order() as usize;
        let lists: Vec<Vec<u64>> = (0..n as u64).map(|v| g.neighbors_of(v)).collect();
        let mut adj = vec![vec![false; n]; n];
        for (u, list) in lists.iter().enumerate() {
            for &v in list {
                adj[u][v as usize] = true;
            }
        }
        let mut common = vec![vec![0u32; n]; n];
        for u in 0..n {
            for v in 0..n {
                common[u][v] = lists[u].iter().filter(|&&w| adj[v][w as usize]).count() as u32;
            }
        }
        DenseGraph { adj, common }
    }
}

struct Search<'a> {
    g: &'a DenseGraph,
    h: &'a DenseGraph,
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn consistent(&self, v: usize, w: usize) -> bool {
        if self.g.common[v][v] != self.h.common[w][w] {
            return false;
        }
        self.order.iter().all(|&u| match self.map[u] {
            Some(fu) => {
                self.g.adj[u][v] == self.h.adj[fu][w] && self.g.common[u][v] == self.h.common[fu][w]
            }
            None => true,
        })
    }

    fn extend(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        let v = self.order[depth];
        for w in 0..self.used.len() {
            if self.used[w] || !self.consistent(v, w) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.map[v] = Some(w);
            self.used[w] = true;
            match self.extend(depth + 1) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.map[v] = None;
            self.used[w] = false;
        }
        Some(false)
    }
}

/// Vertex order for the search: breadth-first from 0, so every vertex after
/// the first has an already-placed neighbor.
fn bfs_order(g: &DenseGraph) -> Vec<usize> {
    let n = g.adj.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for (v, &edge) in g.adj[u].iter().enumerate() {
                if edge && !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
    }
    order
}

/// Backtracking isomorphism search with adjacency and common-neighbor
/// pruning. Vertex 0 is pinned to 0, which loses nothing because `h` is
/// vertex-transitive. Exceeding `budget` search nodes gives
/// [`SearchOutcome::Inconclusive`], never a negative answer.
pub fn isomorphic_bruteforce(g: &CirculantGraph, h: &CirculantGraph, budget: u64) -> SearchOutcome {
    if g.n() != h.n() || g.degree() != h.degree() || g.edge_count() != h.edge_count() {
        return SearchOutcome::NotIsomorphic;
    }
    let dg = DenseGraph::build(g);
    let dh = DenseGraph::build(h);
    // common-neighbor profile of vertex 0 is an invariant
    let profile = |d: &DenseGraph| {
        let mut row = d.common[0].clone();
        row.sort_unstable();
        row
    };
    if profile(&dg) != profile(&dh) {
        return SearchOutcome::NotIsomorphic;
    }
    let n = g.n().get() as usize;
    let mut search = Search {
        g: &dg,
        h: &dh,
        order: bfs_order(&dg),
        map: vec![None; n],
        used: vec![false; n],
        nodes: 0,
        budget,
    };
    search.map[0] = Some(0);
    search.used[0] = true;
    match search.extend(1) {
        Some(true) => {
            let image = search.map.iter().map(|m| m.unwrap() as u64).collect();
            SearchOutcome::Isomorphic(
                VertexBijection::new(g.n(), image).expect("search builds a permutation"),
            )
        }
        Some(false) => SearchOutcome::NotIsomorphic,
        None => SearchOutcome::Inconclusive {
            nodes: search.nodes,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub t: u64,
    /// Half-form jumps of the image when it is circulant.
    pub circulant: Option<Vec<u64>>,
    /// Least unit `a` whose multiplier map carries `g` onto the image.
    pub adams: Option<u64>,
}

impl SweepRow {
    pub fn is_type2(&self, base: &CirculantGraph) -> bool {
        matches!(&self.circulant, Some(j) if j.as_slice() != base.jumps()) && self.adams.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub base: CirculantGraph,
    pub r: u64,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    /// `(t, jumps)` for every non-identity, circulant, non-Adam's image.
    pub fn type2_rows(&self) -> Vec<(u64, Vec<u64>)> {
        self.rows
            .iter()
            .filter(|row| row.t > 0 && row.is_type2(&self.base))
            .map(|row| (row.t, row.circulant.clone().unwrap()))
            .collect()
    }
}

type EdgeSet = BTreeSet<(u64, u64)>;

fn normalized(u: u64, v: u64) -> (u64, u64) {
    (u.min(v), u.max(v))
}

fn mapped_edges(g: &CirculantGraph, f: impl Fn(u64) -> u64) -> EdgeSet {
    g.edges()
        .into_iter()
        .map(|(u, v)| normalized(f(u), f(v)))
        .collect()
}

/// Rotation invariance of a raw edge set; the jumps are the differences at 0.
fn circulant_jumps(n: Modulus, edges: &EdgeSet) -> Option<Vec<u64>> {
    let rotated: EdgeSet = edges
        .iter()
        .map(|&(u, v)| normalized(n.add(u, 1), n.add(v, 1)))
        .collect();
    if &rotated != edges {
        return None;
    }
    let mut jumps: Vec<u64> = edges
        .iter()
        .filter(|(u, _)| *u == 0)
        .map(|&(_, v)| v.min(n.get() - v))
        .collect();
    jumps.sort_unstable();
    jumps.dedup();
    Some(jumps)
}

/// For every `t ∈ [0, n/m - 1]`: map every edge through the explicit vertex
/// formula, test rotation invariance, and test each unit multiplier map
/// against the resulting edge set.
pub fn exhaustive_type2_sweep(g: &CirculantGraph, r: u64) -> Result<SweepReport> {
    let n = g.n();
    let m = gcd_unchecked(n.get(), r % n.get());
    if r.is_multiple_of(n.get()) || m == 1 {
        return Err(Error::CoprimeJump {
            r,
            modulus: n.get(),
        });
    }
    let period = n.get() / m;
    let units: Vec<u64> = (1..n.get())
        .filter(|&a| gcd_unchecked(a, n.get()) == 1)
        .collect();
    let mut rows = Vec::with_capacity(period as usize);
    for t in 0..period {
        let theta = |x: u64| (x + (x % m) * t * m) % n.get();
        let image = mapped_edges(g, theta);
        let circulant = circulant_jumps(n, &image);
        let adams = match circulant {
            Some(_) => units
                .iter()
                .copied()
                .find(|&a| mapped_edges(g, |x| n.mul(a, x)) == image),
            None => None,
        };
        rows.push(SweepRow {
            t,
            circulant,
            adams,
        });
    }
    Ok(SweepReport {
        base: g.clone(),
        r: n.reflect(r),
        rows,
    })
}
