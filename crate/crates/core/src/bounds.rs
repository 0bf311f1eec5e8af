//! Closed-form bounds on `χ_ρ(G ∘ H)` and the layered colorings that attain
//! the upper bounds.
//!
//! Every report keeps its terms, so a value can be recomputed as
//! `order_product - alpha_product - rho_sum - layer_credit + offset`.
//! Empty index ranges contribute 0.
//!
//! Path constructions address `P_n` as `0 - 1 - ... - (n-1)`. The
//! independent set used for color 1 is the even indices; the odd indices of
//! each layer through the independent set of `H` host the extra colors
//! `j = k+2 ..= |H|+1`, spaced `p_j = 2⌊j/2⌋ + 2` apart starting at index 1.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{independence_number, packing_number, Distance, Graph, VertexSet};
use crate::independence::all_maximum_independent_sets;
use crate::lexproduct::lex_product;
use crate::solver::PackingColoring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("G must be connected")]
    Disconnected,
    #[error("G must have at least two vertices")]
    TrivialOuterFactor,
    #[error(
        "H is edgeless and diam(G) = {diameter} >= 3; the layered upper bound \
         only extends to edgeless H when diam(G) <= 2"
    )]
    EdgelessInner { diameter: u32 },
    #[error("H must not be edgeless (this also excludes |H| = 1)")]
    EdgelessPathInner,
    #[error("path length must be at least 2, got {0}")]
    PathTooShort(usize),
    #[error("clique size must be at least 2, got {0}")]
    CliqueTooSmall(usize),
    #[error("G must be the path 0 - 1 - ... - (n-1)")]
    NotAPath,
    #[error("t must be at least 2, got {0}")]
    NtTooSmall(u32),
    #[error("1 + lcm(2..={0}) does not fit in 64 bits")]
    NtOverflow(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BoundSource {
    #[serde(rename = "lex-lower")]
    LexLower,
    #[serde(rename = "lex-upper")]
    LexUpper,
    #[serde(rename = "path-upper")]
    PathUpper,
    #[serde(rename = "path-complete-upper")]
    PathCompleteUpper,
    /// `G` complete.
    #[serde(rename = "exact-complete")]
    ExactComplete,
    #[serde(rename = "exact-diameter-2")]
    ExactDiameterTwo,
    #[serde(rename = "exact-diameter-3")]
    ExactDiameterThree,
    /// `|H| - α(H) >= diam(G) - 1`.
    #[serde(rename = "exact-large-fiber")]
    ExactLargeFiber,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("source serializes");
        f.write_str(s.as_str().expect("string tag"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Exactness {
    Lower,
    Upper,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTerms {
    /// `|G|·|H|`, or `n|H|` for paths.
    pub order_product: u64,
    /// `α(G)α(H)`.
    pub alpha_product: u64,
    pub rho_sum: u64,
    /// Inclusive `[from, to]` of the ρ-sum; absent when the range is empty.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho_range: Option<[u32; 2]>,
    /// Vertices recolored into the layers through the independent set of `H`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub layer_credit: Option<u64>,
    pub offset: u64,
    pub offset_label: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter: Option<u32>,
}

impl BoundTerms {
    pub fn evaluate(&self) -> u64 {
        self.order_product + self.offset
            - self.alpha_product
            - self.rho_sum
            - self.layer_credit.unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub source: BoundSource,
    pub value: u64,
    pub terms: BoundTerms,
    pub exactness: Exactness,
}

impl BoundReport {
    fn new(source: BoundSource, exactness: Exactness, terms: BoundTerms) -> Self {
        BoundReport {
            source,
            value: terms.evaluate(),
            terms,
            exactness,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Aligned multi-line breakdown.
    pub fn breakdown(&self) -> String {
        let t = &self.terms;
        let mut rows: Vec<(String, String)> = vec![
            ("|G|·|H|".into(), format!("{}", t.order_product)),
            ("- α(G)α(H)".into(), format!("-{}", t.alpha_product)),
        ];
        let range = match t.rho_range {
            Some([a, b]) => format!("- Σρ_i, i={a}..{b}"),
            None => "- Σρ_i (empty)".into(),
        };
        rows.push((range, format!("-{}", t.rho_sum)));
        if let Some(c) = t.layer_credit {
            rows.push(("- Σt_j".into(), format!("-{c}")));
        }
        rows.push((format!("+ {}", t.offset_label), format!("+{}", t.offset)));
        let width = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
        let mut out = format!("{} [{:?}] = {}\n", self.source, self.exactness, self.value);
        for (label, value) in rows {
            let pad = width - label.chars().count();
            out.push_str(&format!("  {label}{} {value:>6}\n", " ".repeat(pad)));
        }
        out
    }
}

/// Facts about a factor pair shared by every formula.
struct Factors<'a> {
    g: &'a Graph,
    ng: u64,
    nh: u64,
    alpha_g: (usize, VertexSet),
    alpha_h: (usize, VertexSet),
    diameter: u32,
    g_complete: bool,
    h_edgeless: bool,
}

impl<'a> Factors<'a> {
    fn new(g: &'a Graph, h: &Graph) -> Result<Self, BoundError> {
        let diameter = match g.diameter() {
            Distance::Finite(d) => d,
            Distance::Unreachable => return Err(BoundError::Disconnected),
        };
        if g.order() < 2 {
            return Err(BoundError::TrivialOuterFactor);
        }
        Ok(Factors {
            g,
            ng: g.order() as u64,
            nh: h.order() as u64,
            alpha_g: independence_number(g),
            alpha_h: independence_number(h),
            diameter,
            g_complete: g.is_complete(),
            h_edgeless: h.is_edgeless(),
        })
    }

    fn alpha_product(&self) -> u64 {
        (self.alpha_g.0 * self.alpha_h.0) as u64
    }

    /// `|H| - α(H)`: layers `G^h` left empty by color 1.
    fn k(&self) -> u64 {
        self.nh - self.alpha_h.0 as u64
    }

    fn rho(&self, i: u32) -> u64 {
        if i >= self.diameter {
            1
        } else {
            packing_number(self.g, i).expect("i >= 1").0 as u64
        }
    }

    /// `Σ_{i=from}^{to} ρ_i(G)` and its range, `None` when empty.
    fn rho_sum(&self, from: u32, to: u32) -> (u64, Option<[u32; 2]>) {
        if to < from {
            return (0, None);
        }
        ((from..=to).map(|i| self.rho(i)).sum(), Some([from, to]))
    }

    fn base_terms(&self, rho_to: u32, offset: u64, offset_label: &'static str) -> BoundTerms {
        let (rho_sum, rho_range) = self.rho_sum(2, rho_to);
        BoundTerms {
            order_product: self.ng * self.nh,
            alpha_product: self.alpha_product(),
            rho_sum,
            rho_range,
            layer_credit: None,
            offset,
            offset_label,
            k: None,
            diameter: Some(self.diameter),
        }
    }

    fn check_upper(&self) -> Result<(), BoundError> {
        if self.h_edgeless && self.diameter >= 3 {
            return Err(BoundError::EdgelessInner {
                diameter: self.diameter,
            });
        }
        Ok(())
    }

    fn d(&self) -> u64 {
        if self.g_complete {
            1
        } else {
            self.diameter as u64 - 1
        }
    }
}

/// `1` for complete `G`, otherwise `diam(G) - 1`.
pub fn d_of(g: &Graph) -> Result<u64, BoundError> {
    match g.diameter() {
        Distance::Unreachable => Err(BoundError::Disconnected),
        _ if g.is_complete() => Ok(1),
        Distance::Finite(d) => Ok(d as u64 - 1),
    }
}

/// `|G||H| - α(G)α(H) - Σ_{i=2}^{diam(G)-1} ρ_i(G) + d(G)`.
pub fn lower_bound_lex(g: &Graph, h: &Graph) -> Result<BoundReport, BoundError> {
    let f = Factors::new(g, h)?;
    let terms = f.base_terms(f.diameter.saturating_sub(1), f.d(), "d(G)");
    Ok(BoundReport::new(BoundSource::LexLower, Exactness::Lower, terms))
}

/// `|G||H| - α(G)α(H) - Σ_{i=2}^{k+1} ρ_i(G) + k + 1` with `k = |H| - α(H)`.
pub fn upper_bound_lex(g: &Graph, h: &Graph) -> Result<BoundReport, BoundError> {
    let f = Factors::new(g, h)?;
    f.check_upper()?;
    let k = f.k();
    let mut terms = f.base_terms(k as u32 + 1, k + 1, "k+1");
    terms.k = Some(k);
    Ok(BoundReport::new(BoundSource::LexUpper, Exactness::Upper, terms))
}

/// The exact value when one of the closed-form regimes applies, checked in
/// order: `G` complete, `diam(G) = 2`, `diam(G) = 3` with `H` not edgeless,
/// then `|H| - α(H) >= diam(G) - 1` with `H` not edgeless.
pub fn corollary_exact(g: &Graph, h: &Graph) -> Result<Option<BoundReport>, BoundError> {
    let f = Factors::new(g, h)?;
    let diam = f.diameter;
    let report = |source, terms| Some(BoundReport::new(source, Exactness::Exact, terms));
    Ok(if diam == 1 {
        // α(G) = 1 here, so α(G)α(H) = α(H).
        report(BoundSource::ExactComplete, f.base_terms(1, 1, "1"))
    } else if diam == 2 {
        report(BoundSource::ExactDiameterTwo, f.base_terms(1, 1, "1"))
    } else if diam == 3 && !f.h_edgeless {
        report(BoundSource::ExactDiameterThree, f.base_terms(2, 2, "2"))
    } else if !f.h_edgeless && f.k() >= diam as u64 - 1 {
        let mut terms = f.base_terms(diam - 1, diam as u64 - 1, "diam(G)-1");
        terms.k = Some(f.k());
        report(BoundSource::ExactLargeFiber, terms)
    } else {
        None
    })
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// Minimum spacing of color `j` along the odd positions of a path layer.
pub fn spacing(j: u64) -> u64 {
    2 * (j / 2) + 2
}

/// How many vertices of color `j` fit on the odd positions of `P_n`.
pub fn extra_count(n: u64, j: u64) -> u64 {
    (n / 2 - 1) / (j / 2 + 1) + 1
}

fn check_path_inputs(n: usize, h: &Graph) -> Result<(), BoundError> {
    if n < 2 {
        return Err(BoundError::PathTooShort(n));
    }
    if h.is_edgeless() {
        return Err(BoundError::EdgelessPathInner);
    }
    Ok(())
}

/// Improved upper bound for `P_n ∘ H`.
pub fn path_upper_bound(n: usize, h: &Graph) -> Result<BoundReport, BoundError> {
    check_path_inputs(n, h)?;
    let n64 = n as u64;
    let nh = h.order() as u64;
    let alpha_h = independence_number(h).0 as u64;
    let k = nh - alpha_h;
    let rho_sum = (2..=k + 1).map(|i| ceil_div(n64, i + 1)).sum();
    let credit = (k + 2..=nh + 1).map(|j| extra_count(n64, j)).sum();
    let terms = BoundTerms {
        order_product: n64 * nh,
        alpha_product: ceil_div(n64, 2) * alpha_h,
        rho_sum,
        rho_range: (k >= 1).then_some([2, k as u32 + 1]),
        layer_credit: Some(credit),
        offset: nh + 1,
        offset_label: "|H|+1",
        k: Some(k),
        diameter: Some(n as u32 - 1),
    };
    Ok(BoundReport::new(BoundSource::PathUpper, Exactness::Upper, terms))
}

/// The path bound specialised to `H = K_m`.
pub fn path_complete_upper_bound(n: usize, m: usize) -> Result<BoundReport, BoundError> {
    if n < 2 {
        return Err(BoundError::PathTooShort(n));
    }
    if m < 2 {
        return Err(BoundError::CliqueTooSmall(m));
    }
    let (n64, m64) = (n as u64, m as u64);
    let terms = BoundTerms {
        order_product: n64 * m64,
        alpha_product: ceil_div(n64, 2),
        rho_sum: (2..=m64).map(|i| ceil_div(n64, i + 1)).sum(),
        rho_range: Some([2, m as u32]),
        layer_credit: Some((n64 / 2 - 1) / (m64.div_ceil(2) + 1)),
        offset: m64,
        offset_label: "m",
        k: Some(m64 - 1),
        diameter: Some(n as u32 - 1),
    };
    Ok(BoundReport::new(
        BoundSource::PathCompleteUpper,
        Exactness::Upper,
        terms,
    ))
}

/// Placement of one extra color along a path layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathSpacing {
    pub color: u32,
    pub layer: usize,
    pub spacing: u64,
    pub count: u64,
}

/// A layered coloring of `G ∘ H` together with how it was laid out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionPlan {
    /// Color -> the `G`-layer (an `H` vertex) holding it, for colors that
    /// live in a single layer.
    pub layer_of_color: BTreeMap<u32, usize>,
    pub spacings: Vec<PathSpacing>,
    pub coloring: PackingColoring,
}

/// Fills colors `2..=k+1` into the layers outside `A_H` and returns the
/// partial assignment (0 = unassigned) plus the next free color.
fn layered_base(
    g: &Graph,
    h: &Graph,
    set_g: &VertexSet,
    set_h: &VertexSet,
    layer_of_color: &mut BTreeMap<u32, usize>,
) -> Vec<u32> {
    let nh = h.order();
    let mut colors = vec![0u32; g.order() * nh];
    for gv in set_g.iter() {
        for hv in set_h.iter() {
            colors[gv * nh + hv] = 1;
        }
    }
    let free_layers = (0..nh).filter(|&hv| !set_h.contains(hv));
    for (hv, color) in free_layers.zip(2u32..) {
        let (_, packing) = packing_number(g, color).expect("color >= 2");
        for gv in packing.iter() {
            colors[gv * nh + hv] = color;
        }
        layer_of_color.insert(color, hv);
    }
    colors
}

fn assign_singletons(mut colors: Vec<u32>, first: u32) -> PackingColoring {
    for (c, next) in colors.iter_mut().filter(|c| **c == 0).zip(first..) {
        *c = next;
    }
    PackingColoring::new(colors).expect("every vertex colored")
}

/// The layered coloring behind [`upper_bound_lex`].
pub fn theorem2_plan(g: &Graph, h: &Graph) -> Result<ConstructionPlan, BoundError> {
    let f = Factors::new(g, h)?;
    f.check_upper()?;
    let mut layer_of_color = BTreeMap::new();
    let colors = layered_base(g, h, &f.alpha_g.1, &f.alpha_h.1, &mut layer_of_color);
    Ok(ConstructionPlan {
        layer_of_color,
        spacings: Vec::new(),
        coloring: assign_singletons(colors, f.k() as u32 + 2),
    })
}

pub fn theorem2_coloring(g: &Graph, h: &Graph) -> Result<PackingColoring, BoundError> {
    Ok(theorem2_plan(g, h)?.coloring)
}

/// The coloring behind [`path_upper_bound`].
pub fn theorem5_plan(n: usize, h: &Graph) -> Result<ConstructionPlan, BoundError> {
    check_path_inputs(n, h)?;
    let path = Graph::from_edge_list(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>())
        .expect("path edges in range");
    let nh = h.order();
    let set_path: VertexSet = (0..n).step_by(2).collect();
    let (alpha_h, set_h) = independence_number(h);
    let k = (nh - alpha_h) as u32;

    let mut layer_of_color = BTreeMap::new();
    let mut colors = layered_base(&path, h, &set_path, &set_h, &mut layer_of_color);
    let mut spacings = Vec::new();
    for (hv, j) in set_h.iter().zip(k + 2..=nh as u32 + 1) {
        let p = spacing(j as u64);
        let count = extra_count(n as u64, j as u64);
        for s in 0..count {
            let gv = 1 + (s * p) as usize;
            debug_assert_eq!(colors[gv * nh + hv], 0);
            colors[gv * nh + hv] = j;
        }
        layer_of_color.insert(j, hv);
        spacings.push(PathSpacing {
            color: j,
            layer: hv,
            spacing: p,
            count,
        });
    }
    Ok(ConstructionPlan {
        layer_of_color,
        spacings,
        coloring: assign_singletons(colors, nh as u32 + 2),
    })
}

pub fn theorem5_coloring(n: usize, h: &Graph) -> Result<PackingColoring, BoundError> {
    Ok(theorem5_plan(n, h)?.coloring)
}

/// `1 + lcm(2, 3, ..., t+1)`.
pub fn nt_value(t: u32) -> Result<u64, BoundError> {
    if t < 2 {
        return Err(BoundError::NtTooSmall(t));
    }
    let mut l: u64 = 1;
    for x in 2..=t as u64 + 1 {
        let step = x / l.gcd(&x);
        l = l.checked_mul(step).ok_or(BoundError::NtOverflow(t + 1))?;
    }
    l.checked_add(1).ok_or(BoundError::NtOverflow(t + 1))
}

/// Whether every maximum `i`-packing of `P_{n_t}`, `1 <= i <= t`, contains
/// both end vertices. Enumerates all maximum packings.
pub fn nt_endpoint_property(t: u32) -> Result<bool, BoundError> {
    let n = nt_value(t)? as usize;
    let path = Graph::from_edge_list(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>())
        .expect("path edges in range");
    Ok((1..=t).all(|i| {
        let power = path.power(i).expect("i >= 1");
        all_maximum_independent_sets(&power)
            .iter()
            .all(|s| s.contains(0) && s.contains(n - 1))
    }))
}

/// Product graph a construction colors; kept here so callers can verify.
pub fn construction_graph(g: &Graph, h: &Graph) -> Graph {
    lex_product(g, h).into_graph()
}
