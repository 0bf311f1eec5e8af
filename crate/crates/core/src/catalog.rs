//! Small graph collections used for sweeps: the standard inner factors and
//! every connected graph up to isomorphism on a handful of vertices.

use std::collections::BTreeSet;

use crate::graph::{Family, Graph};

/// `P_2..P_6`, `C_3..C_6`, `K_2..K_5`, labelled by their family descriptor.
pub fn standard_factors() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let families = (2..=6)
        .map(Family::Path)
        .chain((3..=6).map(Family::Cycle))
        .chain((2..=5).map(Family::Complete));
    for f in families {
        out.push((f.to_string(), Graph::generate(&f).expect("valid family")));
    }
    out
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    // Position of (u, v), u < v, in row-major upper-triangle order.
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

fn canonical_mask(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| {
            edges.iter().fold(0u64, |m, &(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                m | 1 << pair_index(n, a, b)
            })
        })
        .min()
        .unwrap_or(0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative of every isomorphism class of connected graphs on
/// `n` vertices. Brute force over all labelled graphs; meant for `n <= 6`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "exhaustive enumeration is limited to tiny graphs");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(n, &edges).expect("valid pairs");
        if !g.is_connected() {
            continue;
        }
        if seen.insert(canonical_mask(n, &edges, &perms)) {
            out.push(g);
        }
    }
    out
}
