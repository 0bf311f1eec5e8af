//! Independent oracles for the integration tests. Nothing here calls into the
//! search code it is used to check.

#![allow(dead_code)]

use lexpack_core::graph::{Family, Graph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn gen(f: Family) -> Graph {
    Graph::generate(&f).unwrap()
}

pub fn path(n: usize) -> Graph {
    gen(Family::Path(n))
}

/// Floyd–Warshall with `None` for "no path".
#[allow(clippy::needless_range_loop)]
pub fn floyd(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for v in g.neighbors(u) {
            d[u][v] = Some(1);
        }
    }
    for m in 0..n {
        for u in 0..n {
            for v in 0..n {
                if let (Some(a), Some(b)) = (d[u][m], d[m][v]) {
                    if d[u][v].is_none_or(|x| x > a + b) {
                        d[u][v] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Largest independent set size by enumerating every vertex subset.
pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20);
    let adj: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).fold(0u32, |m, v| m | 1 << v))
        .collect();
    (0u32..1 << n)
        .filter(|&mask| (0..n).all(|u| mask >> u & 1 == 0 || adj[u] & mask == 0))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Largest `t`-packing by enumerating every vertex subset.
pub fn brute_packing(g: &Graph, t: u32) -> usize {
    let d = floyd(g);
    let n = g.order();
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|u| {
                mask >> u & 1 == 0
                    || (u + 1..n).all(|v| mask >> v & 1 == 0 || d[u][v].is_none_or(|x| x > t))
            })
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Plain backtracking over colors `1..=k`, vertices in index order, checking
/// each new vertex against the earlier ones. Returns the smallest `k`.
pub fn brute_chi_rho(g: &Graph) -> u32 {
    let d = floyd(g);
    let n = g.order();
    fn fits(d: &[Vec<Option<u32>>], colors: &[u32], v: usize, c: u32) -> bool {
        (0..v).all(|u| colors[u] != c || d[u][v].is_none_or(|x| x > c))
    }
    fn go(d: &[Vec<Option<u32>>], colors: &mut Vec<u32>, k: u32) -> bool {
        let v = colors.len();
        if v == d.len() {
            return true;
        }
        for c in 1..=k {
            if fits(d, colors, v, c) {
                colors.push(c);
                if go(d, colors, k) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (1..=(n as u32).max(1))
        .find(|&k| go(&d, &mut Vec::new(), k))
        .unwrap_or(0)
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
