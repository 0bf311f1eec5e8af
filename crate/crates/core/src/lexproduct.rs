//! Lexicographic products `G ∘ H`.
//!
//! Vertex `(g, h)` has flat index `g * |H| + h`, so each `H`-layer `H^g` is
//! a contiguous block and the `G`-layer `G^h` is the stride-`|H|` slice
//! starting at `h`.

use crate::graph::{independence_number, Distance, DistanceMatrix, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    graph: Graph,
    ng: usize,
    nh: usize,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn factor_orders(&self) -> (usize, usize) {
        (self.ng, self.nh)
    }

    pub fn index(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.ng && h < self.nh);
        g * self.nh + h
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.nh, v % self.nh)
    }

    /// `G^h`: the copy of `G` at fixed `h`.
    pub fn g_layer(&self, h: usize) -> VertexSet {
        (0..self.ng).map(|g| self.index(g, h)).collect()
    }

    /// `H^g`: the copy of `H` at fixed `g`.
    pub fn h_layer(&self, g: usize) -> VertexSet {
        (0..self.nh).map(|h| self.index(g, h)).collect()
    }
}

/// `(g1,h1) ~ (g2,h2)` iff `g1 ~ g2`, or `g1 = g2` and `h1 ~ h2`.
pub fn lex_product(g: &Graph, h: &Graph) -> ProductGraph {
    let (ng, nh) = (g.order(), h.order());
    let mut edges = Vec::with_capacity(g.size() * nh * nh + ng * h.size());
    for (g1, g2) in g.edges() {
        for h1 in 0..nh {
            for h2 in 0..nh {
                edges.push((g1 * nh + h1, g2 * nh + h2));
            }
        }
    }
    for gv in 0..ng {
        for (h1, h2) in h.edges() {
            edges.push((gv * nh + h1, gv * nh + h2));
        }
    }
    let graph = Graph::from_edge_list(ng * nh, &edges).expect("product edges are in range");
    ProductGraph { graph, ng, nh }
}

/// Closed-form distance in `G ∘ H` from the factor distances.
///
/// Within one `H`-layer the distance is `d_H` truncated at 2 when `g` has a
/// neighbour in `G` (the detour through an adjacent layer); an isolated `g`,
/// including the one-vertex `G`, leaves `d_H` untouched.
pub fn lex_distance(
    dg: &DistanceMatrix,
    dh: &DistanceMatrix,
    (g1, h1): (usize, usize),
    (g2, h2): (usize, usize),
) -> Distance {
    if g1 != g2 {
        return dg.get(g1, g2);
    }
    let within = dh.get(h1, h2);
    let has_neighbour = (0..dg.order()).any(|x| dg.get(g1, x) == Distance::Finite(1));
    if has_neighbour {
        within.min(Distance::Finite(2))
    } else {
        within
    }
}

/// `α(G ∘ H) = α(G)·α(H)` with witness `A_G × A_H`.
pub fn product_alpha_set(g: &Graph, h: &Graph) -> (usize, VertexSet) {
    let (ag, set_g) = independence_number(g);
    let (ah, set_h) = independence_number(h);
    let nh = h.order();
    let witness = set_g
        .iter()
        .flat_map(|gv| set_h.iter().map(move |hv| gv * nh + hv))
        .collect();
    (ag * ah, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn gen(f: Family) -> Graph {
        Graph::generate(&f).unwrap()
    }

    #[test]
    fn small_products() {
        let p = lex_product(&gen(Family::Path(2)), &gen(Family::Path(2)));
        assert_eq!(p.graph(), &gen(Family::Complete(4)));
        let p = lex_product(&gen(Family::Empty(2)), &gen(Family::Complete(2)));
        assert_eq!(p.graph().order(), 4);
        assert_eq!(p.graph().edges(), vec![(0, 1), (2, 3)]);
        let p = lex_product(&gen(Family::Path(8)), &gen(Family::Path(6)));
        assert_eq!(p.graph().order(), 48);
    }

    #[test]
    fn index_round_trip_and_layers() {
        let p = lex_product(&gen(Family::Path(3)), &gen(Family::Cycle(4)));
        for v in 0..12 {
            let (g, h) = p.coords(v);
            assert_eq!(p.index(g, h), v);
        }
        assert_eq!(p.g_layer(1).members(), &[1, 5, 9]);
        assert_eq!(p.h_layer(2).members(), &[8, 9, 10, 11]);
    }

    #[test]
    fn distance_cases() {
        let g = gen(Family::Path(5));
        let h = gen(Family::Path(4));
        let (dg, dh) = (g.distances(), h.distances());
        assert_eq!(lex_distance(&dg, &dh, (1, 0), (1, 1)), Distance::Finite(1));
        assert_eq!(lex_distance(&dg, &dh, (1, 0), (1, 3)), Distance::Finite(2));
        assert_eq!(lex_distance(&dg, &dh, (0, 2), (4, 2)), Distance::Finite(4));
        assert_eq!(lex_distance(&dg, &dh, (0, 0), (4, 3)), Distance::Finite(4));
        assert_eq!(lex_distance(&dg, &dh, (2, 3), (2, 3)), Distance::Finite(0));
    }

    #[test]
    fn single_vertex_outer_factor_keeps_inner_distance() {
        let g = gen(Family::Path(1));
        let h = gen(Family::Path(4));
        assert_eq!(
            lex_distance(&g.distances(), &h.distances(), (0, 0), (0, 3)),
            Distance::Finite(3)
        );
        let e = gen(Family::Empty(2));
        assert_eq!(
            lex_distance(&g.distances(), &e.distances(), (0, 0), (0, 1)),
            Distance::Unreachable
        );
    }

    #[test]
    fn product_independence() {
        assert_eq!(product_alpha_set(&gen(Family::Path(4)), &gen(Family::Path(3))).0, 4);
        assert_eq!(product_alpha_set(&gen(Family::Complete(3)), &gen(Family::Complete(2))).0, 1);
        let (a, w) = product_alpha_set(&gen(Family::Path(8)), &gen(Family::Path(6)));
        assert_eq!(a, 12);
        let p = lex_product(&gen(Family::Path(8)), &gen(Family::Path(6)));
        assert!(w.iter().all(|u| w.iter().all(|v| !p.graph().is_adjacent(u, v))));
    }
}
