//! Closed-form Schrodinger basis pairs for the three potentials.
//!
//! The bases are deliberately unnormalized (pure cos/sin, pure decaying and
//! growing exponentials, pure Ai/Bi); all normalization constants are folded
//! into the trajectory closed forms through the analytic Wronskian carried on
//! [`BasisPair`]. Growing members are held in log space so the step barrier
//! and deep Airy regimes never overflow.

use crate::error::{Error, Result};
use crate::microstate::PhysicalSetup;
use crate::scaled::ScaledValue;
use crate::specfun;

/// The potential models with closed-form bases.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PotentialModel {
    /// V = 0 everywhere.
    Free,
    /// V = U for x >= 0, V = 0 for x < 0; only the forbidden interior
    /// x >= 0 is served here (the allowed side is the free model).
    Step { barrier: f64 },
    /// V = f x with constant force f > 0.
    Linear { force: f64 },
}

impl PotentialModel {
    /// Potential value at x.
    pub fn value_at(&self, x: f64) -> f64 {
        match *self {
            PotentialModel::Free => 0.0,
            PotentialModel::Step { barrier } => {
                if x >= 0.0 {
                    barrier
                } else {
                    0.0
                }
            }
            PotentialModel::Linear { force } => force * x,
        }
    }
}

/// Independent Schrodinger solutions (phi, theta) with first derivatives at
/// one point, plus their (x-independent) Wronskian `phi theta' - phi' theta`.
#[derive(Clone, Copy, Debug)]
pub struct BasisPair {
    pub x: f64,
    pub phi: ScaledValue,
    pub theta: ScaledValue,
    pub phi_prime: ScaledValue,
    pub theta_prime: ScaledValue,
    /// Analytic Wronskian: k/hbar (free), 2 kappa/hbar (step),
    /// (dzeta/dx)/pi (linear). Always positive.
    pub wronskian: ScaledValue,
}

/// Wavenumber sqrt(2 m E)/hbar-type scales for each potential.
pub fn wavenumber(setup: &PhysicalSetup) -> f64 {
    (2.0 * setup.mass * setup.energy).sqrt()
}

pub fn decay_rate(setup: &PhysicalSetup, barrier: f64) -> f64 {
    (2.0 * setup.mass * (barrier - setup.energy)).sqrt()
}

/// Airy argument zeta(x) = (2 m f)^(1/3) (x - E/f) / hbar^(2/3) and its
/// x-derivative.
pub fn airy_argument(setup: &PhysicalSetup, force: f64, x: f64) -> (f64, f64) {
    let dzdx = (2.0 * setup.mass * force).cbrt() / setup.hbar.powf(2.0 / 3.0);
    let zeta = dzdx * (x - setup.energy / force);
    (zeta, dzdx)
}

/// Evaluates the basis pair at x.
pub fn basis(setup: &PhysicalSetup, x: f64) -> Result<BasisPair> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("basis point must be finite, got {x}")));
    }
    match setup.potential {
        PotentialModel::Free => {
            let k = wavenumber(setup);
            let rate = k / setup.hbar;
            let u = rate * x;
            // Shared cos/sin evaluations keep phi/theta' (and theta/phi')
            // bit-identical up to the rate factor, so quadratic-form
            // cancellations below are exact for a = b, c = 0.
            let cos_u = ScaledValue::from_f64(u.cos());
            let sin_u = ScaledValue::from_f64(u.sin());
            let sv_rate = ScaledValue::from_f64(rate);
            Ok(BasisPair {
                x,
                phi: cos_u,
                theta: sin_u,
                phi_prime: sv_rate.mul(sin_u).neg(),
                theta_prime: sv_rate.mul(cos_u),
                wronskian: sv_rate,
            })
        }
        PotentialModel::Step { barrier } => {
            if x < 0.0 {
                return Err(Error::Domain(format!(
                    "step basis covers the forbidden interior x >= 0, got {x}"
                )));
            }
            let kappa = decay_rate(setup, barrier);
            let rate = kappa / setup.hbar;
            let exponent = rate * x;
            let phi = ScaledValue::from_parts(-exponent, 1);
            let theta = ScaledValue::from_parts(exponent, 1);
            let sv_rate = ScaledValue::from_f64(rate);
            Ok(BasisPair {
                x,
                phi,
                theta,
                phi_prime: sv_rate.mul(phi).neg(),
                theta_prime: sv_rate.mul(theta),
                wronskian: sv_rate.scale(2.0),
            })
        }
        PotentialModel::Linear { force } => {
            let (zeta, dzdx) = airy_argument(setup, force, x);
            let set = specfun::airy_scaled(zeta)?;
            let sv_dzdx = ScaledValue::from_f64(dzdx);
            Ok(BasisPair {
                x,
                phi: set.ai,
                theta: set.bi,
                phi_prime: set.ai_prime.mul(sv_dzdx),
                theta_prime: set.bi_prime.mul(sv_dzdx),
                wronskian: sv_dzdx.scale(std::f64::consts::FRAC_1_PI),
            })
        }
    }
}

/// Relative residual of y'' + (2m/hbar^2)(E - V) y = 0 for both basis
/// members, with y'' from a five-point stencil evaluated in log space.
///
/// The stencil step is 1e-3 of the local characteristic length; a plain
/// three-point stencil at that step would sit on the roundoff floor, the
/// five-point form keeps truncation and roundoff both near 1e-9.
pub fn schrodinger_residual(setup: &PhysicalSetup, x: f64) -> Result<(f64, f64)> {
    let gamma = 2.0 * setup.mass / (setup.hbar * setup.hbar)
        * (setup.potential.value_at(x) - setup.energy);
    let (h, energy_scale) = match setup.potential {
        PotentialModel::Free => {
            let k = wavenumber(setup);
            (1e-3 * setup.hbar / k, setup.energy.abs())
        }
        PotentialModel::Step { barrier } => {
            let kappa = decay_rate(setup, barrier);
            (1e-3 * setup.hbar / kappa, (barrier - setup.energy).abs())
        }
        PotentialModel::Linear { force } => {
            let (zeta, dzdx) = airy_argument(setup, force, x);
            let quantum_scale =
                (setup.hbar * setup.hbar * force * force / (2.0 * setup.mass)).cbrt();
            (
                1e-3 / (dzdx * zeta.abs().sqrt().max(1.0)),
                (setup.energy - force * x).abs().max(quantum_scale),
            )
        }
    };
    // keep the stencil inside the admissible domain of the step interior
    let x0 = if matches!(setup.potential, PotentialModel::Step { .. }) && x < 2.0 * h {
        2.0 * h
    } else {
        x
    };
    let gamma_scale = 2.0 * setup.mass / (setup.hbar * setup.hbar) * energy_scale;

    let residual_of = |pick_theta: bool| -> Result<f64> {
        let get = |xx: f64| -> Result<ScaledValue> {
            let bp = basis(setup, xx)?;
            Ok(if pick_theta { bp.theta } else { bp.phi })
        };
        let y0 = get(x0)?;
        let stencil = ScaledValue::sum(&[
            get(x0 - 2.0 * h)?.neg(),
            get(x0 - h)?.scale(16.0),
            y0.scale(-30.0),
            get(x0 + h)?.scale(16.0),
            get(x0 + 2.0 * h)?.neg(),
        ]);
        let ypp = stencil.scale(1.0 / (12.0 * h * h));
        let diff = ypp.sub(y0.scale(gamma));
        // normalize by the local magnitude gamma_scale * |y|
        let norm = y0.abs().scale(gamma_scale);
        Ok(diff.div(norm).to_f64().abs())
    };
    Ok((residual_of(false)?, residual_of(true)?))
}
