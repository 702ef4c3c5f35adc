//! Microstate coefficients (a, b, c), physical setups, and the
//! coefficient <-> initial-value correspondence.
//!
//! A microstate of energy E is the particular QSHJE solution picked by the
//! triple (a, b, c) in `D = a phi^2 + b theta^2 + c phi theta`. The same
//! information is carried by the initial values `[Wx(x0), Wxx(x0)]` together
//! with the Wronskian constant; the conversions below go back and forth under
//! the gauge `a b - c^2/4 = 1` (the triple is only defined up to a joint
//! rescaling, fixing the discriminant makes it unique).

use crate::error::{Error, Result};
use crate::potentials::{self, PotentialModel};
use crate::scaled::ScaledValue;
use crate::trajectory;

/// Coefficient triple selecting one QSHJE solution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Microstate {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Microstate {
    /// Validates and constructs; see [`Microstate::validate`].
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        Microstate { a, b, c }.validate()
    }

    /// The discriminant `a b - c^2/4` of the quadratic form.
    pub fn discriminant(&self) -> f64 {
        self.a * self.b - self.c * self.c / 4.0
    }

    /// Checks positive definiteness of `a phi^2 + b theta^2 + c phi theta`:
    /// a > 0, b > 0 and `a b - c^2/4 > 0`. Anything else makes the conjugate
    /// momentum diverge or change sign somewhere.
    pub fn validate(self) -> Result<Self> {
        let disc = self.discriminant();
        if !(self.a.is_finite() && self.b.is_finite() && self.c.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "non-finite microstate ({}, {}, {})",
                self.a, self.b, self.c
            )));
        }
        if self.a <= 0.0 || self.b <= 0.0 || disc <= 0.0 {
            return Err(Error::NonPositiveDefinite {
                a: self.a,
                b: self.b,
                c: self.c,
                discriminant: disc,
            });
        }
        Ok(self)
    }

    /// sqrt(a b - c^2/4); the normalization factor in all closed forms.
    pub fn q(&self) -> f64 {
        self.discriminant().sqrt()
    }

    /// Rescales (a, b, c) jointly so the discriminant becomes 1. Leaves every
    /// trajectory quantity invariant.
    pub fn gauge_normalized(&self) -> Microstate {
        let q = self.q();
        Microstate {
            a: self.a / q,
            b: self.b / q,
            c: self.c / q,
        }
    }
}

/// Mass, energy, hbar, and the potential. hbar is an independent variable
/// here: the classical limit is always a trend over a decreasing hbar grid,
/// never an evaluation at hbar = 0.
#[derive(Clone, Copy, Debug)]
pub struct PhysicalSetup {
    pub mass: f64,
    pub energy: f64,
    pub hbar: f64,
    pub potential: PotentialModel,
}

impl PhysicalSetup {
    pub fn new(mass: f64, energy: f64, hbar: f64, potential: PotentialModel) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidParameter(format!("mass must be > 0, got {mass}")));
        }
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::InvalidParameter(format!("hbar must be > 0, got {hbar}")));
        }
        if !energy.is_finite() {
            return Err(Error::InvalidParameter(format!("energy must be finite, got {energy}")));
        }
        match potential {
            PotentialModel::Free => {
                if energy <= 0.0 {
                    return Err(Error::InvalidParameter(format!(
                        "free particle requires E > 0, got {energy}"
                    )));
                }
            }
            PotentialModel::Step { barrier } => {
                if !(barrier.is_finite() && barrier > energy) {
                    return Err(Error::InvalidParameter(format!(
                        "step barrier requires U > E, got U = {barrier}, E = {energy}"
                    )));
                }
            }
            PotentialModel::Linear { force } => {
                if !(force.is_finite() && force > 0.0) {
                    return Err(Error::InvalidParameter(format!(
                        "linear potential requires f > 0, got {force}"
                    )));
                }
            }
        }
        Ok(PhysicalSetup {
            mass,
            energy,
            hbar,
            potential,
        })
    }

    /// Same setup at another hbar.
    pub fn with_hbar(&self, hbar: f64) -> Result<Self> {
        Self::new(self.mass, self.energy, hbar, self.potential)
    }
}

/// Amplitude and phase of the residual-indeterminacy oscillation.
///
/// The oscillating denominator term carries amplitude
/// `sqrt((a-b)^2 + c^2)` and phase shift `arccot(c / (a - b))`; the squared
/// amplitude is the quantity that survives the classical limit.
#[derive(Clone, Copy, Debug)]
pub struct IndeterminacySignature {
    /// `(a - b)^2 + c^2`, dimensionless.
    pub amplitude_sq: f64,
    /// Phase in [0, pi]; `None` when the amplitude vanishes (a = b, c = 0) and
    /// the oscillating term is identically absent.
    pub phase: Option<f64>,
}

/// Computes the indeterminacy amplitude and phase of a microstate.
pub fn indeterminacy_signature(ms: &Microstate) -> IndeterminacySignature {
    let diff = ms.a - ms.b;
    let amplitude_sq = diff * diff + ms.c * ms.c;
    if amplitude_sq == 0.0 {
        return IndeterminacySignature {
            amplitude_sq,
            phase: None,
        };
    }
    // arccot(c/(a-b)) realized as atan2(a-b, c), shifted into [0, pi].
    let mut phase = (ms.a - ms.b).atan2(ms.c);
    if phase < 0.0 {
        phase += std::f64::consts::PI;
    }
    IndeterminacySignature {
        amplitude_sq,
        phase: Some(phase),
    }
}

/// Initial values `(Wx(x0), Wxx(x0))` of the microstate's trajectory.
pub fn initials_from_coefficients(
    setup: &PhysicalSetup,
    ms: &Microstate,
    x0: f64,
) -> Result<(f64, f64)> {
    ms.validate()?;
    let wx = trajectory::conjugate_momentum(setup, ms, x0)?;
    let (wxx, _) = trajectory::momentum_derivatives(setup, ms, x0)?;
    Ok((wx, wxx))
}

/// Recovers the coefficient triple from initial values, in the gauge
/// `a b - c^2/4 = 1`.
///
/// With the basis pair (phi, theta) and its derivatives at x0 forming the
/// columns of P, the quadratic form M = [[a, c/2], [c/2, b]] is fixed by its
/// three evaluations
///
/// ```text
/// v' M v  = D(x0)   = hbar w q / Wx0
/// v' M u  = D'(x0)/2, D'(x0) = -Wxx0 D(x0)^2 / (hbar w q)
/// u' M u  = G        = (D'^2/4 + q^2 w^2) / D        (Lagrange identity)
/// ```
///
/// where v = (phi, theta), u = (phi', theta'), w is the basis Wronskian and
/// q = 1 in this gauge. Then `M = P^{-T} Q P^{-1}` in closed form.
pub fn coefficients_from_initials(
    setup: &PhysicalSetup,
    x0: f64,
    wx0: f64,
    wxx0: f64,
) -> Result<Microstate> {
    if !(wx0.is_finite() && wx0 > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "Wx(x0) must be finite and > 0, got {wx0}"
        )));
    }
    if !wxx0.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "Wxx(x0) must be finite, got {wxx0}"
        )));
    }
    let basis = potentials::basis(setup, x0)?;
    let w = basis.wronskian;
    // q = 1 gauge.
    let n = w.scale(setup.hbar); // hbar * w * q
    let d = n.div(ScaledValue::from_f64(wx0));
    let d1 = d.square().div(n).scale(-wxx0);
    let g = d1
        .square()
        .scale(0.25)
        .add(w.square())
        .div(d);

    // R = P^{-1} = (1/w) [[theta', -phi'], [-theta, phi]]
    let r11 = basis.theta_prime.div(w);
    let r12 = basis.phi_prime.neg().div(w);
    let r21 = basis.theta.neg().div(w);
    let r22 = basis.phi.div(w);

    let half_d1 = d1.scale(0.5);
    let m11 = ScaledValue::sum(&[
        r11.square().mul(d),
        r11.mul(r21).mul(d1),
        r21.square().mul(g),
    ]);
    let m22 = ScaledValue::sum(&[
        r12.square().mul(d),
        r12.mul(r22).mul(d1),
        r22.square().mul(g),
    ]);
    let m12 = ScaledValue::sum(&[
        r11.mul(r12).mul(d),
        r11.mul(r22).add(r21.mul(r12)).mul(half_d1),
        r21.mul(r22).mul(g),
    ]);

    let (a, b, c) = (m11.to_f64(), m22.to_f64(), m12.scale(2.0).to_f64());
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::NoRealSolution(format!(
            "coefficients overflow f64 at x0 = {x0} (a = {a}, b = {b}, c = {c})"
        )));
    }
    Microstate::new(a, b, c).map_err(|_| {
        Error::NoRealSolution(format!(
            "recovered triple not positive definite at x0 = {x0}: ({a}, {b}, {c})"
        ))
    })
}
