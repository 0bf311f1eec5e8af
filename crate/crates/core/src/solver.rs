//! Packing colorings: verification, greedy colorings, counting lower bounds
//! and an exact branch-and-bound search.
//!
//! The exact search colors vertices depth-first in a fixed order (descending
//! degree, ties by index). Two facts keep the tree small:
//!
//! * In a connected graph of diameter `D`, a color `i >= D` can be used at
//!   most once. Those colors are interchangeable, so the search only decides
//!   *whether* a vertex is a singleton and numbers the singletons at the end.
//! * Class `i` holds at most `ρ_i(G)` vertices, and at most one vertex of
//!   every clique of the power graph `G^i`. A fixed clique cover of `G^i`
//!   bounds how many of the still-feasible vertices class `i` can absorb.

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{packing_number, Distance, DistanceMatrix, Graph, VertexSet};

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("vertex {vertex} has color 0; colors start at 1")]
    ZeroColor { vertex: usize },
    #[error("coloring covers {found} vertices but the graph has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("declared k = {declared} but the largest color used is {actual}")]
    DeclaredK { declared: u32, actual: u32 },
    #[error("declared n = {declared} but {actual} colors are listed")]
    DeclaredN { declared: usize, actual: usize },
    #[error("malformed coloring JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("the counting bound needs a connected graph")]
    Disconnected,
}

/// A map from vertices to colors `1..=k`. Validity is checked by
/// [`verify_coloring`], not assumed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackingColoring {
    colors: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct ColoringFile {
    n: usize,
    k: u32,
    colors: Vec<u32>,
}

impl PackingColoring {
    pub fn new(colors: Vec<u32>) -> Result<Self, ColoringError> {
        if let Some(vertex) = colors.iter().position(|&c| c == 0) {
            return Err(ColoringError::ZeroColor { vertex });
        }
        Ok(PackingColoring { colors })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Largest color used.
    pub fn k(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// The color class `X_i`.
    pub fn class(&self, i: u32) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == i)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ColoringError> {
        let file: ColoringFile = serde_json::from_str(text)?;
        if file.n != file.colors.len() {
            return Err(ColoringError::DeclaredN {
                declared: file.n,
                actual: file.colors.len(),
            });
        }
        let c = PackingColoring::new(file.colors)?;
        if c.k() != file.k {
            return Err(ColoringError::DeclaredK {
                declared: file.k,
                actual: c.k(),
            });
        }
        Ok(c)
    }
}

impl Serialize for PackingColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ColoringFile {
            n: self.colors.len(),
            k: self.k(),
            colors: self.colors.clone(),
        }
        .serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Valid,
    /// `u < v` share `color` but sit at distance `distance <= color`.
    Invalid {
        u: usize,
        v: usize,
        color: u32,
        distance: u32,
    },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => f.write_str("valid"),
            Verdict::Invalid {
                u,
                v,
                color,
                distance,
            } => write!(
                f,
                "invalid: vertices {u} and {v} share color {color} at distance {distance}"
            ),
        }
    }
}

pub fn verify_coloring(g: &Graph, c: &PackingColoring) -> Result<Verdict, ColoringError> {
    verify_with_distances(&g.distances(), c)
}

/// Reports the lexicographically first violating pair.
pub fn verify_with_distances(
    dist: &DistanceMatrix,
    c: &PackingColoring,
) -> Result<Verdict, ColoringError> {
    let n = dist.order();
    if c.len() != n {
        return Err(ColoringError::LengthMismatch {
            expected: n,
            found: c.len(),
        });
    }
    for u in 0..n {
        for v in u + 1..n {
            let color = c.colors[u];
            if c.colors[v] == color {
                if let Distance::Finite(d) = dist.get(u, v) {
                    if d <= color {
                        return Ok(Verdict::Invalid {
                            u,
                            v,
                            color,
                            distance: d,
                        });
                    }
                }
            }
        }
    }
    Ok(Verdict::Valid)
}

/// First-fit in vertex index order.
pub fn greedy_coloring(g: &Graph) -> PackingColoring {
    let dist = g.distances();
    let n = g.order();
    let mut colors = vec![0u32; n];
    for v in 0..n {
        let mut c = 1;
        while (0..v).any(|u| colors[u] == c && !dist.get(u, v).exceeds(c)) {
            c += 1;
        }
        colors[v] = c;
    }
    PackingColoring { colors }
}

/// Smallest `k` with `cap(1) + ... + cap(k) >= n`.
fn cumulative_bound(n: usize, mut cap: impl FnMut(u32) -> usize) -> u32 {
    let mut covered = 0;
    let mut k = 0;
    while covered < n {
        k += 1;
        covered += cap(k);
    }
    k
}

/// Lower bound from class capacities: class 1 holds at most `α(G)` vertices,
/// class `i` at most `ρ_i(G)`, and classes `i >= diam(G)` one vertex each.
pub fn counting_lower_bound(g: &Graph) -> Result<u32, SolverError> {
    let dist = g.distances();
    if !dist.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let mut caps = Capacities::new(g, &dist);
    Ok(cumulative_bound(g.order(), |i| caps.get(i)))
}

/// `ρ_i(G)` memoised; constant for `i` at or above the largest finite
/// distance, where it counts the connected components.
struct Capacities<'a> {
    g: &'a Graph,
    saturation: u32,
    values: Vec<usize>,
}

impl<'a> Capacities<'a> {
    fn new(g: &'a Graph, dist: &DistanceMatrix) -> Self {
        Capacities {
            g,
            saturation: dist.max_finite().max(1),
            values: Vec::new(),
        }
    }

    fn get(&mut self, i: u32) -> usize {
        let i = i.min(self.saturation);
        while self.values.len() < i as usize {
            let t = self.values.len() as u32 + 1;
            let (rho, _) = packing_number(self.g, t).expect("t >= 1");
            self.values.push(rho);
        }
        self.values[i as usize - 1]
    }
}

/// Wall-clock and node-count limits for a search. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn seconds(s: u64) -> Self {
        Budget {
            time: Some(Duration::from_secs(s)),
            nodes: None,
        }
    }

    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.nodes = Some(nodes);
        self
    }
}

struct Meter {
    start: Instant,
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
    nodes: u64,
    exhausted: bool,
}

impl Meter {
    fn new(budget: &Budget) -> Self {
        let start = Instant::now();
        Meter {
            start,
            deadline: budget.time.map(|t| start + t),
            max_nodes: budget.nodes,
            nodes: 0,
            exhausted: false,
        }
    }

    /// Counts one node; `false` once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.max_nodes.is_some_and(|m| self.nodes > m) {
            self.exhausted = true;
        }
        if self.nodes & 0x3ff == 0 && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.exhausted = true;
        }
        !self.exhausted
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(PackingColoring),
    /// Exhaustive proof that no coloring with colors `1..=k` exists.
    Infeasible,
    Timeout,
}

/// Decision version: a valid coloring with every color at most `k`.
pub fn find_coloring_with_k(g: &Graph, k: u32, budget: &Budget) -> SearchOutcome {
    let mut meter = Meter::new(budget);
    PackingSearch::new(g).decide(k, &mut meter)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveStatus {
    Optimal,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub best: PackingColoring,
    pub optimal: bool,
    pub lower_bound: u32,
    pub explored: u64,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl SolveResult {
    pub fn status(&self) -> SolveStatus {
        if self.optimal {
            SolveStatus::Optimal
        } else {
            SolveStatus::Timeout
        }
    }
}

/// `χ_ρ(G)`: decides `k = lb, lb + 1, ...` until a coloring appears or the
/// greedy coloring is reached. Each failed `k` is an exhaustive refutation,
/// so the first success is optimal.
pub fn exact_chi_rho(g: &Graph, budget: &Budget) -> SolveResult {
    let mut meter = Meter::new(budget);
    let greedy = greedy_coloring(g);
    let mut search = PackingSearch::new(g);
    let lower = cumulative_bound(g.order(), |i| search.caps.get(i));
    let finish = |best, optimal, meter: &Meter| SolveResult {
        best,
        optimal,
        lower_bound: lower,
        explored: meter.nodes,
        elapsed: meter.start.elapsed(),
    };

    for k in lower..greedy.k() {
        match search.decide(k, &mut meter) {
            SearchOutcome::Found(c) => return finish(c, true, &meter),
            SearchOutcome::Infeasible => {}
            SearchOutcome::Timeout => return finish(greedy, false, &meter),
        }
    }
    finish(greedy, true, &meter)
}

const SINGLETON: u32 = u32::MAX;

/// Per-radius precomputation: balls as bitsets and a clique cover of `G^i`.
struct RadiusData {
    balls: Vec<u64>,
    cliques: Vec<Vec<u64>>,
}

struct PackingSearch<'a> {
    n: usize,
    words: usize,
    connected: bool,
    /// Largest finite distance (the diameter when connected).
    reach: u32,
    order: Vec<usize>,
    caps: Capacities<'a>,
    radii: Vec<RadiusData>,
    dist: DistanceMatrix,
}

fn bit(words: &[u64], v: usize) -> bool {
    words[v / 64] >> (v % 64) & 1 == 1
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

impl<'a> PackingSearch<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let dist = g.distances();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        PackingSearch {
            n,
            words: n.div_ceil(64).max(1),
            connected: dist.is_connected(),
            reach: dist.max_finite(),
            order,
            caps: Capacities::new(g, &dist),
            radii: Vec::new(),
            dist,
        }
    }

    /// Index into `radii` for color `i`: every radius past the largest
    /// finite distance behaves the same.
    fn radius_slot(&self, i: u32) -> usize {
        i.min(self.reach.max(1)) as usize - 1
    }

    fn ensure_radius(&mut self, i: u32) {
        let slot = self.radius_slot(i);
        while self.radii.len() <= slot {
            let r = self.radii.len() as u32 + 1;
            let (n, w) = (self.n, self.words);
            let mut balls = vec![0u64; n * w];
            for v in 0..n {
                for u in self.dist.ball(v, r) {
                    balls[v * w + u / 64] |= 1 << (u % 64);
                }
            }
            // Greedy lowest-index clique cover of the power graph.
            let mut cliques = Vec::new();
            let mut covered = vec![0u64; w];
            for v in 0..n {
                if bit(&covered, v) {
                    continue;
                }
                let mut clique = vec![0u64; w];
                let mut common: Vec<u64> = balls[v * w..(v + 1) * w].to_vec();
                for u in v..n {
                    if !bit(&covered, u) && bit(&common, u) {
                        clique[u / 64] |= 1 << (u % 64);
                        covered[u / 64] |= 1 << (u % 64);
                        for (c, b) in common.iter_mut().zip(&balls[u * w..(u + 1) * w]) {
                            *c &= b;
                        }
                    }
                }
                cliques.push(clique);
            }
            self.radii.push(RadiusData { balls, cliques });
        }
    }

    fn decide(&mut self, k: u32, meter: &mut Meter) -> SearchOutcome {
        if self.n == 0 {
            return SearchOutcome::Found(PackingColoring { colors: Vec::new() });
        }
        if k == 0 {
            return SearchOutcome::Infeasible;
        }
        // Colors above `classes` are interchangeable singletons.
        let classes = if self.connected {
            k.min(self.reach.saturating_sub(1))
        } else {
            k
        };
        for i in 1..=classes {
            self.ensure_radius(i);
        }
        let caps: Vec<usize> = (1..=classes).map(|i| self.caps.get(i)).collect();
        let slots: Vec<usize> = (1..=classes).map(|i| self.radius_slot(i)).collect();

        let w = self.words;
        let mut uncolored = vec![0u64; w];
        for v in 0..self.n {
            uncolored[v / 64] |= 1 << (v % 64);
        }
        let mut state = State {
            assignment: vec![0; self.n],
            uncolored,
            blocked: vec![0u64; classes as usize * w],
            sizes: vec![0; classes as usize],
            singletons_left: (k - classes) as usize,
            scratch: vec![0u64; w],
        };
        let ctx = Ctx {
            words: w,
            order: &self.order,
            caps: &caps,
            radii: &self.radii,
            slots: &slots,
        };
        match ctx.dfs(0, &mut state, meter) {
            Some(true) => {
                let mut next_color = classes + 1;
                let colors = state
                    .assignment
                    .iter()
                    .map(|&c| {
                        if c == SINGLETON {
                            next_color += 1;
                            next_color - 1
                        } else {
                            c
                        }
                    })
                    .collect();
                SearchOutcome::Found(PackingColoring { colors })
            }
            Some(false) => SearchOutcome::Infeasible,
            None => SearchOutcome::Timeout,
        }
    }
}

struct State {
    assignment: Vec<u32>,
    uncolored: Vec<u64>,
    /// Per class: vertices within distance `i` of the class.
    blocked: Vec<u64>,
    sizes: Vec<usize>,
    singletons_left: usize,
    scratch: Vec<u64>,
}

struct Ctx<'s> {
    words: usize,
    order: &'s [usize],
    caps: &'s [usize],
    radii: &'s [RadiusData],
    slots: &'s [usize],
}

impl Ctx<'_> {
    /// `false` when the uncolored vertices cannot all be placed: either more
    /// of them fit no open class than there are singleton colors left, or
    /// they outnumber what the classes can absorb plus the singletons.
    fn feasible(&self, st: &mut State) -> bool {
        let w = self.words;
        let remaining = popcount(&st.uncolored);
        let mut absorb = 0;
        // Vertices that no open class can take.
        let mut dead = std::mem::take(&mut st.scratch);
        dead.copy_from_slice(&st.uncolored);
        for (c, &cap) in self.caps.iter().enumerate() {
            let room = cap - st.sizes[c];
            if room == 0 {
                continue;
            }
            let blocked = &st.blocked[c * w..(c + 1) * w];
            let mut hits = 0;
            for clique in &self.radii[self.slots[c]].cliques {
                if clique
                    .iter()
                    .zip(blocked)
                    .zip(&st.uncolored)
                    .any(|((q, b), u)| q & !b & u != 0)
                {
                    hits += 1;
                    if hits == room {
                        break;
                    }
                }
            }
            absorb += hits;
            for (d, b) in dead.iter_mut().zip(blocked) {
                *d &= b;
            }
        }
        let ok = popcount(&dead) <= st.singletons_left && remaining <= absorb + st.singletons_left;
        st.scratch = dead;
        ok
    }

    /// `Some(true)` on success (assignment left in `st`), `Some(false)` when
    /// the subtree is exhausted, `None` on budget exhaustion.
    fn dfs(&self, depth: usize, st: &mut State, meter: &mut Meter) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        if !meter.tick() {
            return None;
        }
        if !self.feasible(st) {
            return Some(false);
        }
        let w = self.words;
        let v = self.order[depth];
        let (word, mask) = (v / 64, 1u64 << (v % 64));
        st.uncolored[word] &= !mask;

        for c in 0..self.caps.len() {
            if st.sizes[c] == self.caps[c] || st.blocked[c * w + word] & mask != 0 {
                continue;
            }
            let ball = &self.radii[self.slots[c]].balls[v * w..(v + 1) * w];
            let saved: Vec<u64> = st.blocked[c * w..(c + 1) * w].to_vec();
            for (b, x) in st.blocked[c * w..(c + 1) * w].iter_mut().zip(ball) {
                *b |= x;
            }
            st.sizes[c] += 1;
            st.assignment[v] = c as u32 + 1;
            let r = self.dfs(depth + 1, st, meter);
            st.sizes[c] -= 1;
            st.blocked[c * w..(c + 1) * w].copy_from_slice(&saved);
            match r {
                Some(false) => {}
                other => {
                    if other.is_none() {
                        st.uncolored[word] |= mask;
                    }
                    return other;
                }
            }
        }

        if st.singletons_left > 0 {
            st.singletons_left -= 1;
            st.assignment[v] = SINGLETON;
            let r = self.dfs(depth + 1, st, meter);
            st.singletons_left += 1;
            if r != Some(false) {
                return r;
            }
        }
        st.uncolored[word] |= mask;
        st.assignment[v] = 0;
        Some(false)
    }
}
