//! Floating-point evaluation of the truncated hyper-Catalan series as a root
//! approximator for geometric polynomials `1 - a + c2 a^2 + c3 a^3 + ...`.
//!
//! Convergence is detected heuristically from the per-level increments and
//! never assumed; divergence is reported in the diagnostics, not raised.

use num_traits::ToPrimitive;

use crate::closedform::hyper_catalan;
use crate::series::Truncation;

/// Partial-sum value with per-level diagnostics.
#[derive(Debug, Clone)]
pub struct SeriesEvaluation {
    /// Sum of all level increments through the requested face level.
    pub value: f64,
    /// Increment contributed by each face level, index = level.
    pub increments: Vec<f64>,
    /// Cauchy-tail heuristic: the final five increment magnitudes were
    /// non-decreasing (and nonzero), so the partial sums look divergent.
    pub divergence_suspected: bool,
}

/// Evaluate `sum_m C_m * prod c_k^{m_k}` over all types with at most
/// `max_level` faces, accumulated level by level. `coeffs[0]` is `c2`.
pub fn evaluate_truncated_s(coeffs: &[f64], max_level: u32) -> SeriesEvaluation {
    let coeffs = if coeffs.is_empty() {
        &[0.0][..]
    } else {
        coeffs
    };
    let max_gon = coeffs.len() as u32 + 1;
    let trunc = Truncation::new(max_level, max_gon);
    let mut increments = Vec::with_capacity(max_level as usize + 1);
    let mut value = 0.0;
    for level in 0..=max_level {
        let mut increment = 0.0;
        for m in trunc.types_at_level(level) {
            let mut term = hyper_catalan(&m).to_f64().unwrap_or(f64::INFINITY);
            for (k, mult) in m.iter() {
                term *= coeffs[(k - 2) as usize].powi(mult as i32);
            }
            increment += term;
        }
        increments.push(increment);
        value += increment;
    }
    let divergence_suspected = tail_non_decreasing(&increments);
    SeriesEvaluation {
        value,
        increments,
        divergence_suspected,
    }
}

fn tail_non_decreasing(increments: &[f64]) -> bool {
    if increments.len() < 5 {
        return false;
    }
    let tail = &increments[increments.len() - 5..];
    let magnitudes: Vec<f64> = tail.iter().map(|x| x.abs()).collect();
    magnitudes.windows(2).all(|w| w[1] >= w[0]) && *magnitudes.last().unwrap() > 0.0
}

/// `|1 - alpha + sum_k c_k alpha^k|`, the geometric-polynomial residual.
pub fn residual_norm(coeffs: &[f64], alpha: f64) -> f64 {
    let mut g = 1.0 - alpha;
    let mut power = alpha;
    for &c in coeffs {
        power *= alpha;
        g += c * power;
    }
    g.abs()
}
