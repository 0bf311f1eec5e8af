//! Name-keyed registries of bound rules and layered constructions, so the
//! CLI and sweeps can select formulas at runtime.

use crate::bounds::{
    corollary_exact, lower_bound_lex, path_upper_bound, theorem2_plan, theorem5_plan,
    upper_bound_lex, BoundError, BoundReport, ConstructionPlan,
};
use crate::graph::Graph;
use crate::lexproduct::{lex_product, ProductGraph};

/// The factor pair `(G, H)` of a lexicographic product `G ∘ H`.
#[derive(Debug, Clone)]
pub struct LexPair {
    pub g: Graph,
    pub h: Graph,
}

impl LexPair {
    pub fn new(g: Graph, h: Graph) -> Self {
        LexPair { g, h }
    }

    pub fn product(&self) -> ProductGraph {
        lex_product(&self.g, &self.h)
    }

    /// `Some(n)` when `G` is the canonical path on `n` vertices.
    pub fn path_length(&self) -> Option<usize> {
        self.g.is_canonical_path().then(|| self.g.order())
    }
}

pub trait BoundRule: Send + Sync {
    fn name(&self) -> &'static str;

    /// `Ok(None)` when the rule does not speak about this pair.
    fn evaluate(&self, pair: &LexPair) -> Result<Option<BoundReport>, BoundError>;
}

struct LexLower;
struct LexUpper;
struct PathUpper;
struct ClosedForm;

impl BoundRule for LexLower {
    fn name(&self) -> &'static str {
        "lex-lower"
    }

    fn evaluate(&self, pair: &LexPair) -> Result<Option<BoundReport>, BoundError> {
        lower_bound_lex(&pair.g, &pair.h).map(Some)
    }
}

impl BoundRule for LexUpper {
    fn name(&self) -> &'static str {
        "lex-upper"
    }

    fn evaluate(&self, pair: &LexPair) -> Result<Option<BoundReport>, BoundError> {
        upper_bound_lex(&pair.g, &pair.h).map(Some)
    }
}

impl BoundRule for PathUpper {
    fn name(&self) -> &'static str {
        "path-upper"
    }

    fn evaluate(&self, pair: &LexPair) -> Result<Option<BoundReport>, BoundError> {
        match pair.path_length() {
            Some(n) => path_upper_bound(n, &pair.h).map(Some),
            None => Ok(None),
        }
    }
}

impl BoundRule for ClosedForm {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn evaluate(&self, pair: &LexPair) -> Result<Option<BoundReport>, BoundError> {
        corollary_exact(&pair.g, &pair.h)
    }
}

#[derive(Default)]
pub struct BoundRegistry {
    rules: Vec<Box<dyn BoundRule>>,
}

impl BoundRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Lower, upper, path-upper and closed-form exact rules, in that order.
    pub fn standard() -> Self {
        let mut r = Self::new();
        r.register(Box::new(LexLower));
        r.register(Box::new(LexUpper));
        r.register(Box::new(PathUpper));
        r.register(Box::new(ClosedForm));
        r
    }

    /// Replaces any rule with the same name.
    pub fn register(&mut self, rule: Box<dyn BoundRule>) {
        self.rules.retain(|r| r.name() != rule.name());
        self.rules.push(rule);
    }

    pub fn get(&self, name: &str) -> Option<&dyn BoundRule> {
        self.rules.iter().find(|r| r.name() == name).map(|r| r.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.rules.iter().map(|r| r.name()).collect()
    }

    pub fn evaluate_all(
        &self,
        pair: &LexPair,
    ) -> Vec<(&'static str, Result<Option<BoundReport>, BoundError>)> {
        self.rules.iter().map(|r| (r.name(), r.evaluate(pair))).collect()
    }
}

pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;

    /// The bound whose value the construction attains.
    fn target(&self, pair: &LexPair) -> Result<BoundReport, BoundError>;

    fn build(&self, pair: &LexPair) -> Result<ConstructionPlan, BoundError>;
}

struct LayeredConstruction;
struct PathLayeredConstruction;

impl Construction for LayeredConstruction {
    fn name(&self) -> &'static str {
        "theorem2"
    }

    fn target(&self, pair: &LexPair) -> Result<BoundReport, BoundError> {
        upper_bound_lex(&pair.g, &pair.h)
    }

    fn build(&self, pair: &LexPair) -> Result<ConstructionPlan, BoundError> {
        theorem2_plan(&pair.g, &pair.h)
    }
}

impl Construction for PathLayeredConstruction {
    fn name(&self) -> &'static str {
        "theorem5"
    }

    fn target(&self, pair: &LexPair) -> Result<BoundReport, BoundError> {
        let n = pair.path_length().ok_or(BoundError::NotAPath)?;
        path_upper_bound(n, &pair.h)
    }

    fn build(&self, pair: &LexPair) -> Result<ConstructionPlan, BoundError> {
        let n = pair.path_length().ok_or(BoundError::NotAPath)?;
        theorem5_plan(n, &pair.h)
    }
}

#[derive(Default)]
pub struct ConstructionRegistry {
    constructions: Vec<Box<dyn Construction>>,
}

impl ConstructionRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn standard() -> Self {
        let mut r = Self::new();
        r.register(Box::new(LayeredConstruction));
        r.register(Box::new(PathLayeredConstruction));
        r
    }

    pub fn register(&mut self, c: Box<dyn Construction>) {
        self.constructions.retain(|x| x.name() != c.name());
        self.constructions.push(c);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Construction> {
        self.constructions
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.constructions.iter().map(|c| c.name()).collect()
    }
}
