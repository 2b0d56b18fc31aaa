use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::sepsys::{GroundSystem, VertexSet};

/// Non-negative integer weight per vertex, indexed in canonical vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightFunction {
    weights: Vec<u64>,
}

impl WeightFunction {
    pub fn new(g: &GroundSystem, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != g.vertex_count() {
            return Err(Error::InvalidWeights(format!(
                "{} weights for {} vertices",
                weights.len(),
                g.vertex_count()
            )));
        }
        Ok(WeightFunction { weights })
    }

    pub fn zero(g: &GroundSystem) -> Self {
        Self::constant(g, 0)
    }

    pub fn constant(g: &GroundSystem, c: u64) -> Self {
        WeightFunction {
            weights: vec![c; g.vertex_count()],
        }
    }

    /// 1 on `x`, 0 elsewhere.
    pub fn indicator(g: &GroundSystem, x: VertexSet) -> Self {
        WeightFunction {
            weights: (0..g.vertex_count()).map(|i| u64::from(x.contains(i))).collect(),
        }
    }

    /// Every vertex must be named exactly once.
    pub fn from_named(g: &GroundSystem, named: &BTreeMap<String, u64>) -> Result<Self> {
        let mut weights = vec![None; g.vertex_count()];
        for (name, &w) in named {
            weights[g.index_of(name)?] = Some(w);
        }
        let weights = weights
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| Error::InvalidWeights(format!("no weight for vertex `{}`", g.name(i))))
            })
            .collect::<Result<_>>()?;
        Ok(WeightFunction { weights })
    }

    pub fn to_named(&self, g: &GroundSystem) -> BTreeMap<String, u64> {
        g.names().iter().cloned().zip(self.weights.iter().copied()).collect()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn values(&self) -> &[u64] {
        &self.weights
    }

    pub fn get(&self, v: usize) -> u64 {
        self.weights[v]
    }

    /// `w(U) = Σ_{u ∈ U} w(u)`; cannot overflow for up to 64 vertices.
    pub fn weight_of(&self, set: VertexSet) -> u128 {
        set.iter().map(|v| u128::from(self.weights[v])).sum()
    }
}
