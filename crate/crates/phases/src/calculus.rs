//! Finite-difference consistency of the capacity and entropy
//! differentials along one-parameter families of phases.

use crate::error::PhaseError;
use crate::phase::{GraphPhase, NormConvention};
use crate::vec3::Vec3;

/// An affine family: vertex vectors move as `ω_u(t) = base_u + t · dir_u`.
#[derive(Debug, Clone)]
pub struct AffineFamily {
    pub base: GraphPhase,
    pub directions: Vec<Vec3>,
}

impl AffineFamily {
    pub fn at(&self, t: f64) -> Result<GraphPhase, PhaseError> {
        let omega = self
            .base
            .omega
            .iter()
            .zip(&self.directions)
            .map(|(&w, &d)| w.add(d.scale(t)))
            .collect();
        GraphPhase::new(self.base.graph.clone(), omega, self.base.op)
    }

    /// Analytic derivative of the capacity: the sum of the directions.
    pub fn capacity_gradient(&self) -> Vec3 {
        self.directions.iter().fold(Vec3::zero(), |a, &d| a.add(d))
    }

    /// Analytic derivative of the entropy at `t`:
    /// `Σ ⟨ω_u(t), dir_u⟩ / ‖ω_u(t)‖²` under the plain-norm convention.
    pub fn entropy_gradient(&self, t: f64) -> Result<f64, PhaseError> {
        let ph = self.at(t)?;
        let mut total = 0.0;
        for (u, (&w, &d)) in ph.omega.iter().zip(&self.directions).enumerate() {
            let n2 = w.norm_sq();
            if n2 == 0.0 {
                return Err(PhaseError::ZeroNormVertex { vertex: u });
            }
            total += w.dot(d) / n2;
        }
        Ok(total)
    }
}

/// Deviations between central finite differences and the analytic
/// derivatives at `t = 0`.
pub struct DiffCheck {
    pub capacity_deviation: f64,
    pub entropy_deviation: f64,
}

pub fn differential_check(family: &AffineFamily, step: f64) -> Result<DiffCheck, PhaseError> {
    if step <= 0.0 {
        return Err(PhaseError::InvalidInput("step must be positive".into()));
    }
    let plus = family.at(step)?;
    let minus = family.at(-step)?;
    let cap_fd = plus.capacity().sub(minus.capacity()).scale(1.0 / (2.0 * step));
    let capacity_deviation = cap_fd.sub(family.capacity_gradient()).max_abs();
    let en_plus = plus.entropy(NormConvention::Plain)?;
    let en_minus = minus.entropy(NormConvention::Plain)?;
    let en_fd = (en_plus - en_minus) / (2.0 * step);
    let entropy_deviation = (en_fd - family.entropy_gradient(0.0)?).abs();
    Ok(DiffCheck { capacity_deviation, entropy_deviation })
}
