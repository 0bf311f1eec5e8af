//! Exact maximum independent sets by branch and bound.
//!
//! Branching picks the candidate of maximum degree inside the candidate set
//! (lowest index on ties) and tries "in" before "out". The bound is a greedy
//! clique cover of the remaining candidates: an independent set meets every
//! clique at most once.

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, VertexSet};

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    /// When set, collect every independent set of exactly this size.
    enumerate: Option<usize>,
    found: Vec<VertexSet>,
}

pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut search = Search {
        g,
        best: greedy_independent_set(g),
        enumerate: None,
        found: Vec::new(),
    };
    let mut current = Vec::new();
    let all = full_set(g.order());
    search.run(&mut current, all);
    VertexSet::new(search.best)
}

/// Every independent set of maximum cardinality, in search order.
pub fn all_maximum_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let alpha = maximum_independent_set(g).len();
    let mut search = Search {
        g,
        best: Vec::new(),
        enumerate: Some(alpha),
        found: Vec::new(),
    };
    let mut current = Vec::new();
    search.run(&mut current, full_set(g.order()));
    search.found
}

fn full_set(n: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

/// Min-degree greedy; only used to seed the incumbent.
fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let mut cand = full_set(g.order());
    let mut out = Vec::new();
    while !cand.is_clear() {
        let v = cand
            .ones()
            .min_by_key(|&v| (g.neighbor_bits(v).intersection_count(&cand), v))
            .expect("non-empty candidate set");
        out.push(v);
        cand.set(v, false);
        cand.difference_with(g.neighbor_bits(v));
    }
    out
}

fn clique_cover_size(g: &Graph, cand: &FixedBitSet) -> usize {
    let mut remaining = cand.clone();
    let mut cliques = 0;
    while let Some(v) = remaining.ones().next() {
        remaining.set(v, false);
        let mut extend = remaining.clone();
        extend.intersect_with(g.neighbor_bits(v));
        while let Some(u) = extend.ones().next() {
            remaining.set(u, false);
            extend.set(u, false);
            extend.intersect_with(g.neighbor_bits(u));
        }
        cliques += 1;
    }
    cliques
}

impl Search<'_> {
    fn run(&mut self, current: &mut Vec<usize>, mut cand: FixedBitSet) {
        let mark = current.len();

        // Candidates with no neighbour among the candidates belong to every
        // maximal extension.
        let isolated: Vec<usize> = cand
            .ones()
            .filter(|&v| self.g.neighbor_bits(v).is_disjoint(&cand))
            .collect();
        for v in isolated {
            current.push(v);
            cand.set(v, false);
        }

        if cand.is_clear() {
            match self.enumerate {
                Some(target) if current.len() == target => {
                    self.found.push(VertexSet::new(current.clone()))
                }
                Some(_) => {}
                None if current.len() > self.best.len() => self.best = current.clone(),
                None => {}
            }
            current.truncate(mark);
            return;
        }

        let bound = current.len() + clique_cover_size(self.g, &cand);
        let pruned = match self.enumerate {
            Some(target) => bound < target,
            None => bound <= self.best.len(),
        };
        if pruned {
            current.truncate(mark);
            return;
        }

        let v = cand
            .ones()
            .max_by_key(|&v| {
                (
                    self.g.neighbor_bits(v).intersection_count(&cand),
                    std::cmp::Reverse(v),
                )
            })
            .expect("non-empty candidate set");

        let mut with_v = cand.clone();
        with_v.set(v, false);
        with_v.difference_with(self.g.neighbor_bits(v));
        current.push(v);
        self.run(current, with_v);
        current.pop();

        cand.set(v, false);
        self.run(current, cand);
        current.truncate(mark);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    /// All-subsets oracle.
    fn brute_alpha(g: &Graph) -> usize {
        let n = g.order();
        let edges = g.edges();
        (0u32..1 << n)
            .filter(|mask| edges.iter().all(|&(u, v)| mask & (1 << u) == 0 || mask & (1 << v) == 0))
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn is_independent(g: &Graph, s: &VertexSet) -> bool {
        s.iter().all(|u| s.iter().all(|v| !g.is_adjacent(u, v)))
    }

    #[test]
    fn petersen_alpha_matches_brute_force() {
        let g = Graph::generate(&Family::Petersen).unwrap();
        let s = maximum_independent_set(&g);
        assert_eq!(s.len(), brute_alpha(&g));
        assert_eq!(s.len(), 4);
        assert!(is_independent(&g, &s));
    }

    #[test]
    fn empty_graph_takes_everything() {
        let g = Graph::generate(&Family::Empty(5)).unwrap();
        assert_eq!(maximum_independent_set(&g).members(), &[0, 1, 2, 3, 4]);
        assert_eq!(all_maximum_independent_sets(&g).len(), 1);
    }

    #[test]
    fn zero_vertices() {
        let g = Graph::empty(0);
        assert!(maximum_independent_set(&g).is_empty());
    }

    #[test]
    fn enumerates_all_maximum_sets_of_a_path() {
        // P5 has the unique maximum independent set {0, 2, 4}; P4 has three.
        let p5 = Graph::generate(&Family::Path(5)).unwrap();
        assert_eq!(all_maximum_independent_sets(&p5), vec![VertexSet::new(vec![0, 2, 4])]);
        let p4 = Graph::generate(&Family::Path(4)).unwrap();
        let mut sets = all_maximum_independent_sets(&p4);
        sets.sort_by(|a, b| a.members().cmp(b.members()));
        assert_eq!(
            sets,
            vec![
                VertexSet::new(vec![0, 2]),
                VertexSet::new(vec![0, 3]),
                VertexSet::new(vec![1, 3]),
            ]
        );
    }

    #[test]
    fn witness_is_deterministic() {
        let g = Graph::generate(&Family::Cycle(7)).unwrap();
        assert_eq!(maximum_independent_set(&g), maximum_independent_set(&g));
    }
}
