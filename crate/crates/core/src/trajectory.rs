//! Closed-form trajectory quantities at one (setup, microstate, x) point.
//!
//! Everything reduces to the quadratic forms of the basis pair,
//!
//! ```text
//! D  = a phi^2 + b theta^2 + c phi theta        (> 0, positive definite)
//! D' = 2 a phi phi' + 2 b theta theta' + c (phi' theta + phi theta')
//! G  = a phi'^2 + b theta'^2 + c phi' theta'
//! ```
//!
//! assembled in sign-tracked log space. With the basis Wronskian w and
//! q = sqrt(a b - c^2/4):
//!
//! ```text
//! Wx   = hbar w q / D
//! Wxx  = -Wx D'/D
//! Wxxx =  Wx (2 (D'/D)^2 - D''/D),      D'' = 2G + 2 gamma D
//! {W; x} = (1/2)(D'/D)^2 - D''/D,       gamma = (2m/hbar^2)(V - E)
//! ```
//!
//! so the QSHJE residual reduces to the Lagrange identity
//! `D'^2 - 4 G D = -4 q^2 w^2`, which holds for any values of the basis pair
//! with that cross product: the numerical residual measures only the accuracy
//! of the special functions, never the algebra.
//!
//! The reduced action is `W = hbar arctan[(b theta/phi + c/2)/q] + K`, K = 0.
//! The unwrapped convention adds hbar*pi per zero of phi so that W stays
//! continuous and strictly increasing; the branch count is anchored at x = 0
//! for the free particle (no zero ever crosses the origin as E varies) and at
//! the forbidden side for the linear potential (Ai has finitely many zeros to
//! the right), which keeps W continuous in E so Jacobi's theorem
//! `t - t0 = dW/dE` survives finite differencing.

use crate::error::{Error, Result};
use crate::microstate::{Microstate, PhysicalSetup};
use crate::potentials::{self, BasisPair, PotentialModel};
use crate::scaled::ScaledValue;

/// Branch convention for the reduced action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducedActionConvention {
    /// Continuous, strictly increasing branch (the default for tables).
    Unwrapped,
    /// Principal arctan value in (-pi/2 hbar, pi/2 hbar].
    Principal,
}

/// All trajectory quantities at one point. `w` is branch-unwrapped with K = 0.
#[derive(Clone, Copy, Debug)]
pub struct TrajectoryPoint {
    pub x: f64,
    pub w: f64,
    pub wx: f64,
    pub wxx: f64,
    pub wxxx: f64,
    /// hbar^2 {W; x} / (4 m), the quantum term of the QSHJE.
    pub quantum_term: f64,
    pub t_minus_t0: f64,
    /// Signed residual of the QSHJE; vanishes identically in exact arithmetic.
    pub residual: f64,
    /// Hamilton's principal function W - E (t - t0).
    pub s: f64,
}

/// Shared per-point evaluation state.
struct Kernel {
    basis: BasisPair,
    /// D, D', G as defined in the module docs.
    d: ScaledValue,
    d1: ScaledValue,
    g: ScaledValue,
    /// hbar * w * q, the constant numerator of Wx.
    numerator: ScaledValue,
    /// (2m/hbar^2)(V - E) at this x.
    gamma: f64,
    q: f64,
}

fn kernel(setup: &PhysicalSetup, ms: &Microstate, x: f64) -> Result<Kernel> {
    ms.validate()?;
    let basis = potentials::basis(setup, x)?;
    let q = ms.q();
    let sa = ScaledValue::from_f64(ms.a);
    let sb = ScaledValue::from_f64(ms.b);
    let sc = ScaledValue::from_f64(ms.c);

    let d = ScaledValue::sum(&[
        sa.mul(basis.phi.square()),
        sb.mul(basis.theta.square()),
        sc.mul(basis.phi).mul(basis.theta),
    ]);
    if d.sign <= 0 {
        return Err(Error::Numerical(format!(
            "denominator lost positivity at x = {x} (conditioning too extreme)"
        )));
    }
    let d1 = ScaledValue::sum(&[
        sa.mul(basis.phi).mul(basis.phi_prime).scale(2.0),
        sb.mul(basis.theta).mul(basis.theta_prime).scale(2.0),
        sc.mul(basis.phi_prime).mul(basis.theta),
        sc.mul(basis.phi).mul(basis.theta_prime),
    ]);
    let g = ScaledValue::sum(&[
        sa.mul(basis.phi_prime.square()),
        sb.mul(basis.theta_prime.square()),
        sc.mul(basis.phi_prime).mul(basis.theta_prime),
    ]);
    let gamma = 2.0 * setup.mass / (setup.hbar * setup.hbar)
        * (setup.potential.value_at(x) - setup.energy);
    Ok(Kernel {
        numerator: basis.wronskian.scale(setup.hbar * q),
        basis,
        d,
        d1,
        g,
        gamma,
        q,
    })
}

impl Kernel {
    fn wx_scaled(&self) -> ScaledValue {
        self.numerator.div(self.d)
    }

    fn wx(&self) -> f64 {
        self.wx_scaled().to_f64()
    }

    /// D'/D as f64 (bounded by the basis growth rate).
    fn u1(&self) -> f64 {
        self.d1.div(self.d).to_f64()
    }

    fn derivatives(&self) -> (f64, f64) {
        let wx = self.wx();
        let u1 = self.u1();
        let g_over_d = self.g.div(self.d).to_f64();
        let wxx = -wx * u1;
        let wxxx = wx * (2.0 * u1 * u1 - (2.0 * g_over_d + 2.0 * self.gamma));
        (wxx, wxxx)
    }

    fn quantum_term(&self, setup: &PhysicalSetup, x: f64) -> f64 {
        let u1 = self.u1();
        let g_over_d = self.g.div(self.d).to_f64();
        let schwarzian_part = 0.5 * u1 * u1 - 2.0 * g_over_d;
        (setup.energy - setup.potential.value_at(x))
            + setup.hbar * setup.hbar / (4.0 * setup.mass) * schwarzian_part
    }

    /// Principal arctan argument (b theta/phi + c/2)/q as a scaled value;
    /// None encodes a pole of theta/phi (zero of phi).
    fn arctan_argument(&self, ms: &Microstate) -> Option<ScaledValue> {
        if self.basis.phi.is_zero() {
            return None;
        }
        let ratio = self.basis.theta.div(self.basis.phi);
        Some(
            ratio
                .scale(ms.b)
                .add(ScaledValue::from_f64(ms.c / 2.0))
                .scale(1.0 / self.q),
        )
    }
}

/// arctan of a scaled value, switching to the pi/2 - 1/g tail once |g|
/// exceeds f64-comfortable range.
fn atan_scaled(g: ScaledValue) -> f64 {
    match g.sign {
        0 => 0.0,
        s => {
            if g.log_magnitude > 36.0 {
                let tail = (-g.log_magnitude).exp();
                f64::from(s) * (std::f64::consts::FRAC_PI_2 - tail)
            } else {
                g.to_f64().atan()
            }
        }
    }
}

/// DLMF 9.9.18 estimate of the k-th negative Airy zero; accurate to far
/// better than the local zero spacing for every k >= 1.
fn airy_zero_estimate(k: u64) -> f64 {
    let t = 3.0 * std::f64::consts::PI * (4.0 * k as f64 - 1.0) / 8.0;
    let t2 = t * t;
    -t.powf(2.0 / 3.0) * (1.0 + 5.0 / 48.0 / t2 - 5.0 / 36.0 / (t2 * t2))
}

/// Number of Airy zeros to the right of zeta, parity-corrected against the
/// computed sign of Ai(zeta) so the count flips exactly where the evaluated
/// basis changes sign.
fn airy_zero_count_above(zeta: f64, sign_ai: i8) -> u64 {
    let mut count = if zeta >= -2.0 {
        0
    } else {
        // monotone predicate: estimate(k) > zeta
        let mut lo = 1_u64; // estimate(1) > zeta is checked below
        if airy_zero_estimate(1) <= zeta {
            0
        } else {
            let mut hi = (2.0 * (-zeta).powf(1.5) / (3.0 * std::f64::consts::PI)) as u64 + 8;
            while airy_zero_estimate(hi) > zeta {
                hi *= 2;
            }
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if airy_zero_estimate(mid) > zeta {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            lo
        }
    };
    if sign_ai != 0 {
        let even = count % 2 == 0;
        if even != (sign_ai > 0) {
            let dist_above = if count >= 1 {
                (airy_zero_estimate(count) - zeta).abs()
            } else {
                f64::INFINITY
            };
            let dist_below = (zeta - airy_zero_estimate(count + 1)).abs();
            if count == 0 || dist_below < dist_above {
                count += 1;
            } else {
                count -= 1;
            }
        }
    }
    count
}

/// Signed count of phi zeros between 0 and x for the free particle,
/// parity-corrected against the computed sign of cos(k x / hbar).
fn free_branch_count(u: f64, sign_phi: i8) -> i64 {
    let t = u / std::f64::consts::PI + 0.5;
    let mut n = t.floor() as i64;
    if sign_phi != 0 {
        let even = n.rem_euclid(2) == 0;
        if even != (sign_phi > 0) {
            let frac = t - t.floor();
            n += if frac < 0.5 { -1 } else { 1 };
        }
    }
    n
}

/// Conjugate momentum Wx > 0.
pub fn conjugate_momentum(setup: &PhysicalSetup, ms: &Microstate, x: f64) -> Result<f64> {
    Ok(kernel(setup, ms, x)?.wx())
}

/// Conjugate momentum in log-scaled form (the step interior underflows f64
/// already at moderate 2 kappa x / hbar).
pub fn conjugate_momentum_scaled(
    setup: &PhysicalSetup,
    ms: &Microstate,
    x: f64,
) -> Result<ScaledValue> {
    Ok(kernel(setup, ms, x)?.wx_scaled())
}

/// Reduced action with K = 0 in the requested branch convention.
pub fn reduced_action(
    setup: &PhysicalSetup,
    ms: &Microstate,
    x: f64,
    convention: ReducedActionConvention,
) -> Result<f64> {
    let kr = kernel(setup, ms, x)?;
    let principal = match kr.arctan_argument(ms) {
        Some(arg) => atan_scaled(arg),
        None => std::f64::consts::FRAC_PI_2,
    };
    let branch = match convention {
        ReducedActionConvention::Principal => 0.0,
        ReducedActionConvention::Unwrapped => match setup.potential {
            PotentialModel::Free => {
                let k = potentials::wavenumber(setup);
                let u = k * x / setup.hbar;
                free_branch_count(u, kr.basis.phi.sign) as f64
            }
            PotentialModel::Step { .. } => 0.0,
            PotentialModel::Linear { force } => {
                let (zeta, _) = potentials::airy_argument(setup, force, x);
                -(airy_zero_count_above(zeta, kr.basis.phi.sign) as f64)
            }
        },
    };
    Ok(setup.hbar * (principal + branch * std::f64::consts::PI))
}

/// Analytic Wxx and Wxxx.
pub fn momentum_derivatives(
    setup: &PhysicalSetup,
    ms: &Microstate,
    x: f64,
) -> Result<(f64, f64)> {
    Ok(kernel(setup, ms, x)?.derivatives())
}

/// The quantum term hbar^2 {W; x} / (4m).
pub fn quantum_term(setup: &PhysicalSetup, ms: &Microstate, x: f64) -> Result<f64> {
    Ok(kernel(setup, ms, x)?.quantum_term(setup, x))
}

/// Signed residual of the QSHJE at x; zero in exact arithmetic.
pub fn qshje_residual(setup: &PhysicalSetup, ms: &Microstate, x: f64) -> Result<f64> {
    let kr = kernel(setup, ms, x)?;
    let wx = kr.wx();
    let qt = kr.quantum_term(setup, x);
    Ok(wx * wx / (2.0 * setup.mass) + setup.potential.value_at(x) - setup.energy + qt)
}

/// Jacobi time t - t0 = dW/dE from the closed forms.
///
/// The step-barrier and linear-potential derivatives are strictly negative
/// for x inside the forbidden region: raising E at fixed x lowers the decay
/// exponent, so W falls. Both still vanish in the classical limit.
pub fn jacobi_time(setup: &PhysicalSetup, ms: &Microstate, x: f64) -> Result<f64> {
    let kr = kernel(setup, ms, x)?;
    let q = kr.q;
    let prefactor = match setup.potential {
        PotentialModel::Free => {
            let k = potentials::wavenumber(setup);
            setup.mass * x * q / k
        }
        PotentialModel::Step { barrier } => {
            let kappa = potentials::decay_rate(setup, barrier);
            -2.0 * setup.mass * x * q / kappa
        }
        PotentialModel::Linear { force } => {
            let cube = (2.0 * setup.mass / (force * force)).cbrt();
            -setup.hbar.cbrt() * std::f64::consts::FRAC_1_PI * cube * q
        }
    };
    let t = ScaledValue::from_f64(prefactor).div(kr.d).to_f64();
    // normalize -0.0 from deep-barrier underflow
    Ok(if t == 0.0 { 0.0 } else { t })
}

/// Hamilton's principal function S = W - E (t - t0), unwrapped branch.
pub fn principal_function(setup: &PhysicalSetup, ms: &Microstate, x: f64) -> Result<f64> {
    let w = reduced_action(setup, ms, x, ReducedActionConvention::Unwrapped)?;
    let t = jacobi_time(setup, ms, x)?;
    Ok(w - setup.energy * t)
}

/// Full evaluation at one point (single kernel pass).
pub fn trajectory_point(setup: &PhysicalSetup, ms: &Microstate, x: f64) -> Result<TrajectoryPoint> {
    let kr = kernel(setup, ms, x)?;
    let wx = kr.wx();
    let (wxx, wxxx) = kr.derivatives();
    let qt = kr.quantum_term(setup, x);
    let residual = wx * wx / (2.0 * setup.mass) + setup.potential.value_at(x) - setup.energy + qt;
    let w = reduced_action(setup, ms, x, ReducedActionConvention::Unwrapped)?;
    let t = jacobi_time(setup, ms, x)?;
    Ok(TrajectoryPoint {
        x,
        w,
        wx,
        wxx,
        wxxx,
        quantum_term: qt,
        t_minus_t0: t,
        residual,
        s: w - setup.energy * t,
    })
}

/// Per-point evaluation over a grid; errors are collected, not fatal.
pub fn trajectory_table(
    setup: &PhysicalSetup,
    ms: &Microstate,
    grid: &[f64],
) -> Vec<(f64, Result<TrajectoryPoint>)> {
    grid.iter()
        .map(|&x| (x, trajectory_point(setup, ms, x)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free(hbar: f64) -> PhysicalSetup {
        PhysicalSetup::new(1.0, 0.5, hbar, PotentialModel::Free).unwrap()
    }

    fn step(hbar: f64) -> PhysicalSetup {
        PhysicalSetup::new(1.0, 0.5, hbar, PotentialModel::Step { barrier: 1.0 }).unwrap()
    }

    fn linear(hbar: f64) -> PhysicalSetup {
        PhysicalSetup::new(1.0, 0.5, hbar, PotentialModel::Linear { force: 1.0 }).unwrap()
    }

    const CLASSICAL: Microstate = Microstate {
        a: 1.0,
        b: 1.0,
        c: 0.0,
    };

    #[test]
    fn free_classical_microstate_is_exactly_classical() {
        for &hbar in &[1.0, 1e-3, 1e-7] {
            let setup = free(hbar);
            for &x in &[0.0, 0.37, 5.11, -2.3] {
                let p = trajectory_point(&setup, &CLASSICAL, x).unwrap();
                assert!((p.wx - 1.0).abs() < 1e-13, "Wx at {x}, hbar {hbar}");
                // zero relative to the scale of the cancelling log-space
                // terms (k^2/hbar for Wxx, k^3/hbar^2 for Wxxx)
                assert!(p.wxx.abs() <= 1e-12 / hbar, "Wxx = {} at hbar {hbar}", p.wxx);
                assert!(p.wxxx.abs() <= 1e-12 / (hbar * hbar));
                assert!((p.w - x).abs() < 1e-12 * x.abs().max(1.0), "W at {x}");
                assert!((p.t_minus_t0 - x).abs() < 1e-12 * x.abs().max(1.0));
                assert!(p.residual.abs() < 1e-13);
                // S = E (t - t0) for the classical-correspondence microstate
                assert!((p.s - 0.5 * x).abs() < 1e-12 * x.abs().max(1.0));
            }
        }
    }

    #[test]
    fn step_examples() {
        let setup = step(0.1);
        let ms = CLASSICAL;
        assert!((conjugate_momentum(&setup, &ms, 0.0).unwrap() - 1.0).abs() < 1e-14);
        let wx = conjugate_momentum(&setup, &ms, 0.5).unwrap();
        let want = 1.0 / (10.0_f64.cosh());
        assert!((wx / want - 1.0).abs() < 1e-12);
    }

    #[test]
    fn step_maslov_and_limits() {
        let ms = Microstate::new(1.3, 0.9, 0.4).unwrap();
        // W/hbar -> pi/2, qt -> E - U, |t| -> 0 as hbar shrinks
        let mut last_t = f64::INFINITY;
        for &hbar in &[1e-1, 1e-2, 1e-3, 1e-4] {
            let setup = step(hbar);
            let w = reduced_action(&setup, &ms, 1.0, ReducedActionConvention::Unwrapped).unwrap();
            let qt = quantum_term(&setup, &ms, 1.0).unwrap();
            let t = jacobi_time(&setup, &ms, 1.0).unwrap();
            assert!(t <= 0.0, "step Jacobi time is <= 0, got {t}");
            assert!(t.abs() <= last_t); // ties once the value underflows
            last_t = t.abs();
            if hbar <= 1e-3 {
                assert!((w / hbar - std::f64::consts::FRAC_PI_2).abs() < 1e-6);
                assert!((qt - (-0.5)).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn step_time_matches_closed_form_magnitude() {
        // |t - t0| = 2 m x q / (kappa D) with D = a e^- + b e^+ + c.
        let setup = step(0.7);
        let ms = Microstate::new(2.0, 1.0, 0.5).unwrap();
        let x = 0.4;
        let kappa = 1.0_f64; // sqrt(2*1*(1-0.5)) = 1
        let e_plus = (2.0 * kappa * x / 0.7).exp();
        let d = ms.a / e_plus + ms.b * e_plus + ms.c;
        let want = -2.0 * 1.0 * x * ms.q() / (kappa * d);
        let got = jacobi_time(&setup, &ms, x).unwrap();
        assert!((got / want - 1.0).abs() < 1e-13);
    }

    #[test]
    fn residual_identity_random_microstates() {
        let microstates = [
            Microstate::new(1.7, 0.4, -0.6).unwrap(),
            Microstate::new(0.3, 3.1, 0.8).unwrap(),
            Microstate::new(5.0, 5.0, -4.0).unwrap(),
        ];
        for setup in [free(0.05), step(0.05), linear(0.05)] {
            for ms in &microstates {
                for i in 0..40 {
                    let x = 0.02 + 0.9 * (i as f64) / 40.0;
                    let r = qshje_residual(&setup, ms, x).unwrap();
                    assert!(
                        r.abs() < 1e-9,
                        "residual {r} at x = {x} for {ms:?} in {:?}",
                        setup.potential
                    );
                }
            }
        }
    }

    #[test]
    fn unwrapped_minus_principal_is_multiple_of_hbar_pi() {
        let setup = free(0.03);
        let ms = Microstate::new(2.0, 1.0, 0.5).unwrap();
        for i in 0..60 {
            let x = -1.0 + (i as f64) * 0.07;
            let wu = reduced_action(&setup, &ms, x, ReducedActionConvention::Unwrapped).unwrap();
            let wp = reduced_action(&setup, &ms, x, ReducedActionConvention::Principal).unwrap();
            let n = (wu - wp) / (setup.hbar * std::f64::consts::PI);
            assert!((n - n.round()).abs() < 1e-8, "offset {n} at x = {x}");
        }
    }

    #[test]
    fn unwrapped_action_is_monotone() {
        for setup in [free(0.04), linear(0.04)] {
            let ms = Microstate::new(1.4, 0.6, 0.3).unwrap();
            let mut last = f64::NEG_INFINITY;
            for i in 0..=300 {
                let x = 0.0 + 0.9 * (i as f64) / 300.0;
                let w =
                    reduced_action(&setup, &ms, x, ReducedActionConvention::Unwrapped).unwrap();
                assert!(w > last, "W not increasing at x = {x} ({:?})", setup.potential);
                last = w;
            }
        }
    }

    #[test]
    fn gauge_invariance_of_momentum() {
        let ms = Microstate::new(1.7, 0.4, -0.6).unwrap();
        let scaled = Microstate::new(1.7 * 3.7, 0.4 * 3.7, -0.6 * 3.7).unwrap();
        for setup in [free(0.2), step(0.2), linear(0.2)] {
            for &x in &[0.11, 0.52, 0.93] {
                let w1 = conjugate_momentum(&setup, &ms, x).unwrap();
                let w2 = conjugate_momentum(&setup, &scaled, x).unwrap();
                assert!((w1 / w2 - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn linear_classical_microstate_deep_allowed_region() {
        // (1,1,0): Wx -> sqrt(2m(E - fx)) with corrections ~ |zeta|^-3.
        let x = 0.25;
        for &hbar in &[1e-7, 1e-8] {
            let setup = linear(hbar);
            let wx = conjugate_momentum(&setup, &CLASSICAL, x).unwrap();
            let classical = (2.0 * (0.5 - x)).sqrt();
            assert!(
                (wx / classical - 1.0).abs() < 1e-12,
                "hbar = {hbar}: {}",
                (wx / classical - 1.0).abs()
            );
        }
    }

    #[test]
    fn table_collects_per_point_errors() {
        let setup = step(0.1);
        let grid = [-0.5, 0.2, 0.6];
        let rows = trajectory_table(&setup, &CLASSICAL, &grid);
        assert!(rows[0].1.is_err()); // x < 0 outside the step interior
        assert!(rows[1].1.is_ok());
        assert!(rows[2].1.is_ok());
    }
}
