//! Positive vertex weights in degree, unit, or explicit mode.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    Degree,
    Unit,
    Explicit,
}

/// A strictly positive weight per vertex.
///
/// Degree mode sets `w(v) = deg(v)` and therefore rejects graphs with
/// isolated vertices. Evaluators that need exact rational arithmetic
/// require every weight to be an integer; `is_integral` reports that.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightAssignment {
    mode: WeightMode,
    values: Vec<f64>,
    integral: bool,
}

impl WeightAssignment {
    /// Degree weights `w(v) = deg(v)`; errors if any vertex is isolated.
    pub fn degree(graph: &Graph) -> Result<Self> {
        if let Some(v) = graph.has_isolated_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
        Ok(Self {
            mode: WeightMode::Degree,
            values: graph.degrees().iter().map(|&d| d as f64).collect(),
            integral: true,
        })
    }

    /// Unit weights `w(v) = 1`.
    pub fn unit(graph: &Graph) -> Self {
        Self {
            mode: WeightMode::Unit,
            values: vec![1.0; graph.n()],
            integral: true,
        }
    }

    /// Explicit weights; each must be finite and strictly positive.
    pub fn explicit(values: Vec<f64>) -> Result<Self> {
        for (vertex, &value) in values.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::NonPositiveWeight { vertex, value });
            }
        }
        let integral = values
            .iter()
            .all(|v| v.fract() == 0.0 && *v <= u64::MAX as f64);
        Ok(Self {
            mode: WeightMode::Explicit,
            values,
            integral,
        })
    }

    pub fn mode(&self) -> WeightMode {
        self.mode
    }

    pub fn value(&self, v: usize) -> f64 {
        self.values[v]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// True when every weight is a whole number, enabling exact rational
    /// evaluation.
    pub fn is_integral(&self) -> bool {
        self.integral
    }

    /// Weight of `v` as an integer; requires `is_integral()`.
    pub fn integer_value(&self, v: usize) -> Result<u64> {
        if !self.integral {
            return Err(Error::NonIntegralWeights);
        }
        Ok(self.values[v] as u64)
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_weights_on_path() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let w = WeightAssignment::degree(&g).unwrap();
        assert_eq!(w.values(), &[1.0, 2.0, 1.0]);
        assert!(w.is_integral());
        assert_eq!(w.mode(), WeightMode::Degree);
    }

    #[test]
    fn degree_weights_reject_isolated_vertex() {
        let g = Graph::build(3, &[(0, 1)]).unwrap();
        assert_eq!(
            WeightAssignment::degree(&g).unwrap_err(),
            Error::IsolatedVertex(2)
        );
    }

    #[test]
    fn unit_weights() {
        let g = Graph::build(4, &[(0, 1)]).unwrap();
        let w = WeightAssignment::unit(&g);
        assert_eq!(w.values(), &[1.0; 4]);
        assert!(w.is_integral());
    }

    #[test]
    fn explicit_rejects_nonpositive() {
        assert_eq!(
            WeightAssignment::explicit(vec![1.0, 0.0]).unwrap_err(),
            Error::NonPositiveWeight {
                vertex: 1,
                value: 0.0
            }
        );
        assert!(WeightAssignment::explicit(vec![1.0, f64::NAN]).is_err());
        assert!(WeightAssignment::explicit(vec![-2.0]).is_err());
    }

    #[test]
    fn integrality_detection() {
        let w = WeightAssignment::explicit(vec![2.0, 3.0]).unwrap();
        assert!(w.is_integral());
        assert_eq!(w.integer_value(1).unwrap(), 3);
        let w = WeightAssignment::explicit(vec![2.5]).unwrap();
        assert!(!w.is_integral());
        assert_eq!(w.integer_value(0).unwrap_err(), Error::NonIntegralWeights);
    }
}
