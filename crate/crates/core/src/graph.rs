//! Simple undirected graphs on dense vertex labels `0..n`, with generators,
//! breadth-first distances, power graphs and exact packings.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::independence;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid size for {family}: {reason}")]
    InvalidSize { family: String, reason: String },
    #[error("packing distance must be at least 1")]
    ZeroPackingDistance,
}

/// Shortest-path length between two vertices. `Unreachable` compares greater
/// than every finite distance and deliberately has no arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// `true` when the two endpoints may share color `i` in a packing coloring.
    pub fn exceeds(self, i: u32) -> bool {
        match self {
            Distance::Finite(d) => d > i,
            Distance::Unreachable => true,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u32(*d),
            Distance::Unreachable => s.serialize_none(),
        }
    }
}

/// A sorted set of vertices of some graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<FixedBitSet>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub fn generate(family: &Family) -> Result<Self, GraphError> {
        family.validate()?;
        let edges: Vec<(usize, usize)> = match *family {
            Family::Path(n) => (1..n).map(|v| (v - 1, v)).collect(),
            Family::Cycle(n) => (0..n).map(|v| (v, (v + 1) % n)).collect(),
            Family::Complete(n) => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
            Family::Empty(_) => Vec::new(),
            Family::Petersen => {
                let mut e = Vec::with_capacity(15);
                for i in 0..5 {
                    e.push((i, (i + 1) % 5));
                    e.push((i, i + 5));
                    e.push((5 + i, 5 + (i + 2) % 5));
                }
                e
            }
        };
        Graph::from_edge_list(family.order(), &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub(crate) fn neighbor_bits(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// `K1` counts as complete.
    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// `K1` counts as edgeless.
    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|a| a.is_clear())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(|&d| d != UNREACHABLE_RAW)
    }

    /// `true` when the graph is `0 - 1 - ... - (n-1)`.
    pub fn is_canonical_path(&self) -> bool {
        self.n >= 1
            && self.size() + 1 == self.n
            && (1..self.n).all(|v| self.is_adjacent(v - 1, v))
    }

    fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE_RAW; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for v in self.adj[u].ones() {
                if dist[v] == UNREACHABLE_RAW {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distances(&self) -> DistanceMatrix {
        let mut dist = Vec::with_capacity(self.n * self.n);
        for s in 0..self.n {
            dist.extend(self.bfs(s));
        }
        DistanceMatrix { n: self.n, dist }
    }

    pub fn diameter(&self) -> Distance {
        self.distances().diameter()
    }

    /// Same vertices; `u ~ v` iff `0 < d(u, v) <= t`.
    pub fn power(&self, t: u32) -> Result<Graph, GraphError> {
        if t == 0 {
            return Err(GraphError::ZeroPackingDistance);
        }
        Ok(self.distances().power_graph(t))
    }

    pub fn induced_edges(&self, vertices: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.is_adjacent(u, v) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

const UNREACHABLE_RAW: u32 = u32::MAX;

/// All-pairs hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        match self.dist[u * self.n + v] {
            UNREACHABLE_RAW => Distance::Unreachable,
            d => Distance::Finite(d),
        }
    }

    /// Max finite entry, or `Unreachable` when some pair is disconnected.
    pub fn diameter(&self) -> Distance {
        if self.dist.contains(&UNREACHABLE_RAW) {
            return Distance::Unreachable;
        }
        Distance::Finite(self.dist.iter().copied().max().unwrap_or(0))
    }

    /// Largest finite distance, ignoring disconnected pairs.
    pub fn max_finite(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE_RAW)
            .max()
            .unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&UNREACHABLE_RAW)
    }

    /// Vertices within distance `radius` of `v`, including `v`.
    pub fn ball(&self, v: usize, radius: u32) -> impl Iterator<Item = usize> + '_ {
        self.dist[v * self.n..(v + 1) * self.n]
            .iter()
            .enumerate()
            .filter(move |&(_, &d)| d <= radius)
            .map(|(u, _)| u)
    }

    pub fn power_graph(&self, t: u32) -> Graph {
        let mut adj = vec![FixedBitSet::with_capacity(self.n); self.n];
        for (u, row) in adj.iter_mut().enumerate() {
            for v in self.ball(u, t) {
                if v != u {
                    row.insert(v);
                }
            }
        }
        Graph::from_adjacency(adj)
    }
}

/// Standard graph families with canonical numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Petersen,
}

impl Family {
    pub fn order(&self) -> usize {
        match *self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::Empty(n) => n,
            Family::Petersen => 10,
        }
    }

    fn validate(&self) -> Result<(), GraphError> {
        let bad = |reason: &str| {
            Err(GraphError::InvalidSize {
                family: self.name().to_string(),
                reason: reason.to_string(),
            })
        };
        match *self {
            Family::Cycle(n) if n < 3 => bad("a cycle needs at least 3 vertices"),
            Family::Path(0) | Family::Complete(0) | Family::Empty(0) => {
                bad("at least one vertex is required")
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Empty(_) => "empty",
            Family::Petersen => "petersen",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Petersen => f.write_str("petersen"),
            other => write!(f, "{}:{}", other.name(), other.order()),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("petersen") {
            return Ok(Family::Petersen);
        }
        let (name, size) = s
            .split_once(':')
            .ok_or_else(|| GraphError::UnknownFamily(s.to_string()))?;
        let n: usize = size.trim().parse().map_err(|_| GraphError::InvalidSize {
            family: name.to_string(),
            reason: format!("`{size}` is not a vertex count"),
        })?;
        let family = match name.trim().to_ascii_lowercase().as_str() {
            "path" => Family::Path(n),
            "cycle" => Family::Cycle(n),
            "complete" => Family::Complete(n),
            "empty" => Family::Empty(n),
            _ => return Err(GraphError::UnknownFamily(name.to_string())),
        };
        family.validate()?;
        Ok(family)
    }
}

/// Exact independence number with a deterministic witness.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let set = independence::maximum_independent_set(g);
    (set.len(), set)
}

/// Exact `t`-packing number: vertices pairwise more than `t` apart.
pub fn packing_number(g: &Graph, t: u32) -> Result<(usize, VertexSet), GraphError> {
    Ok(independence_number(&g.power(t)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::generate(&Family::Path(n)).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.size(), 1);
        assert!(k2.is_complete());
        let e3 = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(e3.size(), 0);
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (1, 0)]).unwrap();
        assert_eq!(p4, path(4));
    }

    #[test]
    fn edge_list_rejections() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(GraphError::SelfLoop { v: 1 })
        );
    }

    #[test]
    fn families() {
        assert_eq!(path(8).size(), 7);
        assert_eq!(Graph::generate(&Family::Complete(3)).unwrap().size(), 3);
        assert_eq!(Graph::generate(&Family::Empty(6)).unwrap().size(), 0);
        let pet = Graph::generate(&Family::Petersen).unwrap();
        assert_eq!(pet.size(), 15);
        assert!((0..10).all(|v| pet.degree(v) == 3));
        assert_eq!(pet.diameter(), Distance::Finite(2));
    }

    #[test]
    fn family_parsing() {
        assert_eq!("path:8".parse::<Family>().unwrap(), Family::Path(8));
        assert_eq!("Petersen".parse::<Family>().unwrap(), Family::Petersen);
        assert!(matches!("cycle:2".parse::<Family>(), Err(GraphError::InvalidSize { .. })));
        assert!(matches!("path:0".parse::<Family>(), Err(GraphError::InvalidSize { .. })));
        assert!(matches!("star:4".parse::<Family>(), Err(GraphError::UnknownFamily(_))));
        assert!(matches!("path:x".parse::<Family>(), Err(GraphError::InvalidSize { .. })));
        assert_eq!(Family::Cycle(5).to_string(), "cycle:5");
    }

    #[test]
    fn distances_and_diameter() {
        assert_eq!(path(4).distances().get(0, 3), Distance::Finite(3));
        let e2 = Graph::generate(&Family::Empty(2)).unwrap();
        assert_eq!(e2.distances().get(0, 1), Distance::Unreachable);
        let c5 = Graph::generate(&Family::Cycle(5)).unwrap();
        assert_eq!(c5.distances().get(0, 2), Distance::Finite(2));
        assert_eq!(path(8).diameter(), Distance::Finite(7));
        assert_eq!(Graph::generate(&Family::Complete(4)).unwrap().diameter(), Distance::Finite(1));
        assert_eq!(Graph::generate(&Family::Empty(3)).unwrap().diameter(), Distance::Unreachable);
        assert_eq!(path(1).diameter(), Distance::Finite(0));
    }

    #[test]
    fn unreachable_orders_above_finite() {
        assert!(Distance::Unreachable > Distance::Finite(u32::MAX - 1));
        assert!(Distance::Unreachable.exceeds(1_000));
        assert!(!Distance::Finite(2).exceeds(2));
    }

    #[test]
    fn completeness_predicates() {
        let k4 = Graph::generate(&Family::Complete(4)).unwrap();
        assert!(k4.is_complete() && !k4.is_edgeless());
        let p3 = path(3);
        assert!(!p3.is_complete() && !p3.is_edgeless());
        let k1 = path(1);
        assert!(k1.is_complete() && k1.is_edgeless());
    }

    #[test]
    fn power_graphs() {
        assert_eq!(path(4).power(1).unwrap(), path(4));
        assert_eq!(
            path(4).power(3).unwrap(),
            Graph::generate(&Family::Complete(4)).unwrap()
        );
        let c6 = Graph::generate(&Family::Cycle(6)).unwrap();
        let sq = c6.power(2).unwrap();
        assert_eq!(sq.neighbors(0).collect::<Vec<_>>(), vec![1, 2, 4, 5]);
        assert_eq!(path(3).power(0), Err(GraphError::ZeroPackingDistance));
    }

    #[test]
    fn independence_and_packing_examples() {
        assert_eq!(independence_number(&path(8)).0, 4);
        assert_eq!(independence_number(&Graph::generate(&Family::Complete(5)).unwrap()).0, 1);
        assert_eq!(packing_number(&path(8), 2).unwrap().0, 3);
        assert_eq!(packing_number(&path(8), 7).unwrap().0, 1);
        let c6 = Graph::generate(&Family::Cycle(6)).unwrap();
        assert_eq!(packing_number(&c6, 2).unwrap().0, 2);
    }

    #[test]
    fn canonical_path_detection() {
        assert!(path(5).is_canonical_path());
        assert!(path(1).is_canonical_path());
        let relabelled = Graph::from_edge_list(3, &[(0, 2), (2, 1)]).unwrap();
        assert!(!relabelled.is_canonical_path());
        assert!(!Graph::generate(&Family::Cycle(4)).unwrap().is_canonical_path());
    }
}
