//! Independent brute-force checks for the closed forms.
//!
//! Nothing here shares a numerical kernel with the trajectory module: the
//! integrator is classic fourth-order Runge-Kutta, the quadrature is adaptive
//! Simpson (the cycle-average machinery uses Gauss-Legendre), and derivatives
//! come from central stencils with Richardson extrapolation. Agreement between
//! the two routes is therefore evidence, not tautology.

use crate::error::{Error, Result};
use crate::microstate::{Microstate, PhysicalSetup};
use crate::potentials::{self, PotentialModel};
use crate::scaled::ScaledValue;

/// Fixed-step configuration for the fourth-order integrator.
#[derive(Clone, Copy, Debug)]
pub struct IntegratorConfig {
    pub step: f64,
    pub x_start: f64,
    pub x_end: f64,
}

impl IntegratorConfig {
    pub fn new(step: f64, x_start: f64, x_end: f64) -> Result<Self> {
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidParameter(format!("step must be > 0, got {step}")));
        }
        if !(x_start.is_finite() && x_end.is_finite()) || x_end == x_start {
            return Err(Error::InvalidParameter(format!(
                "bad integration range [{x_start}, {x_end}]"
            )));
        }
        Ok(IntegratorConfig {
            step,
            x_start,
            x_end,
        })
    }
}

/// One sample of the integrated solution.
#[derive(Clone, Copy, Debug)]
pub struct OdeSample {
    pub x: f64,
    pub y: f64,
    pub y_prime: f64,
}

/// One sample in log form: y = sign * exp(log_y), w = y'/y.
#[derive(Clone, Copy, Debug)]
pub struct LogOdeSample {
    pub x: f64,
    pub log_y: f64,
    pub sign: i8,
    pub w: f64,
}

fn gamma_of(setup: &PhysicalSetup) -> impl Fn(f64) -> f64 + '_ {
    move |x: f64| {
        2.0 * setup.mass / (setup.hbar * setup.hbar)
            * (setup.potential.value_at(x) - setup.energy)
    }
}

/// RK4 step for the linear system (y, y')' = (y', gamma y).
fn rk4_linear(gamma: &impl Fn(f64) -> f64, x: f64, y: f64, yp: f64, h: f64) -> (f64, f64) {
    let f = |x: f64, y: f64, yp: f64| (yp, gamma(x) * y);
    let (k1y, k1p) = f(x, y, yp);
    let (k2y, k2p) = f(x + 0.5 * h, y + 0.5 * h * k1y, yp + 0.5 * h * k1p);
    let (k3y, k3p) = f(x + 0.5 * h, y + 0.5 * h * k2y, yp + 0.5 * h * k2p);
    let (k4y, k4p) = f(x + h, y + h * k3y, yp + h * k3p);
    (
        y + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
        yp + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p),
    )
}

/// RK4 step for the log form (L, w)' = (w, gamma - w^2), valid while y != 0.
fn rk4_log(gamma: &impl Fn(f64) -> f64, x: f64, l: f64, w: f64, h: f64) -> (f64, f64) {
    let f = |x: f64, _l: f64, w: f64| (w, gamma(x) - w * w);
    let (k1l, k1w) = f(x, l, w);
    let (k2l, k2w) = f(x + 0.5 * h, l + 0.5 * h * k1l, w + 0.5 * h * k1w);
    let (k3l, k3w) = f(x + 0.5 * h, l + 0.5 * h * k2l, w + 0.5 * h * k2w);
    let (k4l, k4w) = f(x + h, l + h * k3l, w + h * k3w);
    (
        l + h / 6.0 * (k1l + 2.0 * k2l + 2.0 * k3l + k4l),
        w + h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w),
    )
}

fn run_linear(
    gamma: &impl Fn(f64) -> f64,
    y0: f64,
    y0p: f64,
    config: &IntegratorConfig,
    substeps_per_step: usize,
) -> Result<Vec<OdeSample>> {
    let span = config.x_end - config.x_start;
    let n_steps = (span.abs() / config.step).ceil().max(1.0) as usize;
    let h = span / (n_steps * substeps_per_step) as f64;
    let mut samples = Vec::with_capacity(n_steps + 1);
    let (mut y, mut yp) = (y0, y0p);
    samples.push(OdeSample {
        x: config.x_start,
        y,
        y_prime: yp,
    });
    for i in 0..n_steps {
        for j in 0..substeps_per_step {
            let x = config.x_start + h * (i * substeps_per_step + j) as f64;
            let (ny, nyp) = rk4_linear(gamma, x, y, yp, h);
            y = ny;
            yp = nyp;
            if !y.is_finite() || !yp.is_finite() || y.abs() > 1e300 || yp.abs() > 1e300 {
                return Err(Error::Range(format!(
                    "solution exceeds f64 range near x = {x}; use the log-form integrator"
                )));
            }
        }
        samples.push(OdeSample {
            x: config.x_start + span * (i + 1) as f64 / n_steps as f64,
            y,
            y_prime: yp,
        });
    }
    Ok(samples)
}

fn run_log(
    gamma: &impl Fn(f64) -> f64,
    l0: f64,
    sign: i8,
    w0: f64,
    config: &IntegratorConfig,
    substeps_per_step: usize,
) -> Vec<LogOdeSample> {
    let span = config.x_end - config.x_start;
    let n_steps = (span.abs() / config.step).ceil().max(1.0) as usize;
    let h = span / (n_steps * substeps_per_step) as f64;
    let mut samples = Vec::with_capacity(n_steps + 1);
    let (mut l, mut w) = (l0, w0);
    samples.push(LogOdeSample {
        x: config.x_start,
        log_y: l,
        sign,
        w,
    });
    for i in 0..n_steps {
        for j in 0..substeps_per_step {
            let x = config.x_start + h * (i * substeps_per_step + j) as f64;
            let (nl, nw) = rk4_log(gamma, x, l, w, h);
            l = nl;
            w = nw;
        }
        samples.push(LogOdeSample {
            x: config.x_start + span * (i + 1) as f64 / n_steps as f64,
            log_y: l,
            sign,
            w,
        });
    }
    samples
}

/// Integrates y'' = (2m/hbar^2)(V - E) y from (y0, y0') with classic RK4.
///
/// Runs at the configured step and at half step; the halving must move the
/// endpoint by less than 1e-8 relative (convergence gate) or the step is
/// rejected. Returns the half-step solution sampled at the coarse points.
pub fn integrate_schrodinger(
    setup: &PhysicalSetup,
    y0: f64,
    y0_prime: f64,
    config: &IntegratorConfig,
) -> Result<Vec<OdeSample>> {
    let gamma = gamma_of(setup);
    let coarse = run_linear(&gamma, y0, y0_prime, config, 1)?;
    let fine = run_linear(&gamma, y0, y0_prime, config, 2)?;
    let (ce, fe) = (coarse.last().unwrap(), fine.last().unwrap());
    let scale = fe.y.abs().max(fe.y_prime.abs()).max(1e-300);
    let diff = ((ce.y - fe.y).abs()).max((ce.y_prime - fe.y_prime).abs()) / scale;
    if diff > 1e-8 {
        return Err(Error::Numerical(format!(
            "convergence gate failed: halving the step moved the endpoint by {diff:.3e} (> 1e-8); reduce step {}",
            config.step
        )));
    }
    Ok(fine)
}

/// Single fixed-resolution RK4 run without the convergence gate; intended
/// for step-refinement studies where the error itself is the object.
pub fn integrate_schrodinger_fixed(
    setup: &PhysicalSetup,
    y0: f64,
    y0_prime: f64,
    config: &IntegratorConfig,
) -> Result<Vec<OdeSample>> {
    run_linear(&gamma_of(setup), y0, y0_prime, config, 1)
}

/// Log-form variant for solutions without zeros (forbidden-region members):
/// integrates (ln|y|, y'/y) so exponential growth never overflows.
pub fn integrate_schrodinger_log(
    setup: &PhysicalSetup,
    log_y0: f64,
    sign: i8,
    w0: f64,
    config: &IntegratorConfig,
) -> Result<Vec<LogOdeSample>> {
    if sign == 0 {
        return Err(Error::InvalidParameter(
            "log-form integration needs a nonzero solution".into(),
        ));
    }
    let gamma = gamma_of(setup);
    let coarse = run_log(&gamma, log_y0, sign, w0, config, 1);
    let fine = run_log(&gamma, log_y0, sign, w0, config, 2);
    let (ce, fe) = (coarse.last().unwrap(), fine.last().unwrap());
    let scale = fe.log_y.abs().max(fe.w.abs()).max(1.0);
    let diff = ((ce.log_y - fe.log_y).abs()).max((ce.w - fe.w).abs()) / scale;
    if diff > 1e-8 {
        return Err(Error::Numerical(format!(
            "convergence gate failed in log form: endpoint moved by {diff:.3e}"
        )));
    }
    Ok(fine)
}

/// Default integrator step: 1e-3 of the local wavelength in allowed regions,
/// of the decay length hbar/kappa in the step interior.
pub fn default_step(setup: &PhysicalSetup, x_hint: f64) -> f64 {
    match setup.potential {
        PotentialModel::Free => {
            1e-3 * std::f64::consts::PI * setup.hbar / potentials::wavenumber(setup)
        }
        PotentialModel::Step { barrier } => {
            1e-3 * setup.hbar / potentials::decay_rate(setup, barrier)
        }
        PotentialModel::Linear { force } => {
            let local = (2.0 * setup.mass * (setup.energy - force * x_hint).abs())
                .sqrt()
                .max((2.0 * setup.mass * force * setup.hbar).cbrt());
            1e-3 * std::f64::consts::PI * setup.hbar / local
        }
    }
}

/// Conjugate momentum assembled from numerically integrated bases.
///
/// Initial data for each member comes from the closed-form basis at the first
/// grid point; from there the members are integrated independently, the
/// Wronskian drift is gated at 1e-8, and
/// `Wx = hbar w q / (a phi^2 + b theta^2 + c phi theta)` is assembled from
/// the integrated values.
pub fn numeric_conjugate_momentum(
    setup: &PhysicalSetup,
    ms: &Microstate,
    x_grid: &[f64],
) -> Result<Vec<f64>> {
    ms.validate()?;
    if x_grid.len() < 2 {
        return Err(Error::InvalidParameter("need at least two grid points".into()));
    }
    if x_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter("x grid must be strictly increasing".into()));
    }
    let start = x_grid[0];
    let bp0 = potentials::basis(setup, start)?;
    let q = ms.q();
    let w_analytic = bp0.wronskian;
    let step = default_step(setup, 0.5 * (start + x_grid[x_grid.len() - 1]));

    let log_form = matches!(setup.potential, PotentialModel::Step { .. });
    let mut out = Vec::with_capacity(x_grid.len());

    if log_form {
        // both members are sign-definite exponentials: integrate (ln|y|, y'/y)
        let members: Vec<Vec<LogOdeSample>> = [
            (bp0.phi, bp0.phi_prime),
            (bp0.theta, bp0.theta_prime),
        ]
        .iter()
        .map(|(y, yp)| {
            let w0 = yp.div(*y).to_f64();
            let mut samples = vec![LogOdeSample {
                x: start,
                log_y: y.log_magnitude,
                sign: y.sign,
                w: w0,
            }];
            for pair in x_grid.windows(2) {
                let config = IntegratorConfig::new(step, pair[0], pair[1])?;
                let last = *samples.last().unwrap();
                let leg =
                    integrate_schrodinger_log(setup, last.log_y, last.sign, last.w, &config)?;
                samples.push(*leg.last().unwrap());
            }
            Ok(samples)
        })
        .collect::<Result<_>>()?;
        for i in 0..x_grid.len() {
            let (phi, theta) = (&members[0][i], &members[1][i]);
            let sv_phi = ScaledValue::from_parts(phi.log_y, phi.sign);
            let sv_theta = ScaledValue::from_parts(theta.log_y, theta.sign);
            // Wronskian = phi theta (w_theta - w_phi)
            let wr = sv_phi.mul(sv_theta).scale(theta.w - phi.w);
            let drift = (wr.div(w_analytic).to_f64() - 1.0).abs();
            if drift > 1e-8 {
                return Err(Error::Numerical(format!(
                    "Wronskian gauge drift {drift:.3e} at x = {}",
                    x_grid[i]
                )));
            }
            let d = quadratic_form_scaled(ms, sv_phi, sv_theta);
            out.push(w_analytic.scale(setup.hbar * q).div(d).to_f64());
        }
    } else {
        let members: Vec<Vec<OdeSample>> = [
            (bp0.phi, bp0.phi_prime),
            (bp0.theta, bp0.theta_prime),
        ]
        .iter()
        .map(|(y, yp)| {
            let mut samples = vec![OdeSample {
                x: start,
                y: y.to_f64(),
                y_prime: yp.to_f64(),
            }];
            for pair in x_grid.windows(2) {
                let config = IntegratorConfig::new(step, pair[0], pair[1])?;
                let last = *samples.last().unwrap();
                let leg = integrate_schrodinger(setup, last.y, last.y_prime, &config)?;
                samples.push(*leg.last().unwrap());
            }
            Ok(samples)
        })
        .collect::<Result<_>>()?;
        for i in 0..x_grid.len() {
            let (phi, theta) = (&members[0][i], &members[1][i]);
            let wr = phi.y * theta.y_prime - phi.y_prime * theta.y;
            let drift = (wr / w_analytic.to_f64() - 1.0).abs();
            if drift > 1e-8 {
                return Err(Error::Numerical(format!(
                    "Wronskian gauge drift {drift:.3e} at x = {}",
                    x_grid[i]
                )));
            }
            let d = ms.a * phi.y * phi.y + ms.b * theta.y * theta.y + ms.c * phi.y * theta.y;
            out.push(setup.hbar * w_analytic.to_f64() * q / d);
        }
    }
    Ok(out)
}

fn quadratic_form_scaled(ms: &Microstate, phi: ScaledValue, theta: ScaledValue) -> ScaledValue {
    ScaledValue::sum(&[
        phi.square().scale(ms.a),
        theta.square().scale(ms.b),
        phi.mul(theta).scale(ms.c),
    ])
}

/// Central finite difference of order 1..=3 with one Richardson step.
/// Returns (value, error_estimate).
pub fn fd_derivative(
    f: &dyn Fn(f64) -> f64,
    x: f64,
    order: u8,
    h: f64,
) -> Result<(f64, f64)> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidParameter(format!("fd step must be > 0, got {h}")));
    }
    let stencil = |h: f64| -> f64 {
        match order {
            1 => (f(x + h) - f(x - h)) / (2.0 * h),
            2 => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
            3 => (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h))
                / (2.0 * h * h * h),
            _ => f64::NAN,
        }
    };
    if !(1..=3).contains(&order) {
        return Err(Error::InvalidParameter(format!(
            "derivative order must be 1..=3, got {order}"
        )));
    }
    let d_h = stencil(h);
    let d_half = stencil(0.5 * h);
    // central stencils have even error expansions: one step removes h^2
    let value = (4.0 * d_half - d_h) / 3.0;
    if !value.is_finite() {
        return Err(Error::Numerical(format!("finite difference overflowed at x = {x}")));
    }
    Ok((value, (value - d_half).abs()))
}

/// Step choice balancing truncation against cancellation for central
/// differences of the given order: h = eps^(1/(order+2)) * scale.
pub fn fd_default_step(order: u8, scale: f64) -> f64 {
    f64::EPSILON.powf(1.0 / (f64::from(order) + 2.0)) * scale
}

/// Mean of f over [x_center - w/2, x_center + w/2] by adaptive Simpson
/// quadrature, absolute tolerance 1e-10 on the mean.
pub fn quad_cycle_average(
    f: &dyn Fn(f64) -> f64,
    x_center: f64,
    wavelength: f64,
) -> Result<f64> {
    if !(wavelength.is_finite() && wavelength > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "wavelength must be > 0, got {wavelength}"
        )));
    }
    let a = x_center - 0.5 * wavelength;
    let b = x_center + 0.5 * wavelength;
    let tol = 1e-10 * wavelength;
    let integral = adaptive_simpson(f, a, b, tol)?;
    Ok(integral / wavelength)
}

fn simpson(a: f64, fa: f64, b: f64, fb: f64, fm: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, fa, b, fb, fm);
    simpson_recurse(f, a, fa, b, fb, m, fm, whole, tol, 48)
}

#[allow(clippy::too_many_arguments)]
fn simpson_recurse(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    fa: f64,
    b: f64,
    fb: f64,
    m: f64,
    fm: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, fa, m, fm, flm);
    let right = simpson(m, fm, b, fb, frm);
    let err = left + right - whole;
    if err.abs() <= 15.0 * tol.max(1e-16 * (left + right).abs()) {
        return Ok(left + right + err / 15.0);
    }
    if depth == 0 {
        return Err(Error::QuadratureNotConverged {
            achieved: err.abs() / 15.0,
            requested: tol,
        });
    }
    let l = simpson_recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)?;
    let r = simpson_recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1)?;
    Ok(l + r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free(hbar: f64) -> PhysicalSetup {
        PhysicalSetup::new(1.0, 0.5, hbar, PotentialModel::Free).unwrap()
    }

    #[test]
    fn free_integration_matches_cosine() {
        // y'' = -y for m=1, E=1/2, hbar=1: y = cos(x) over ten wavelengths.
        let setup = free(1.0);
        let config = IntegratorConfig::new(0.01, 0.0, 20.0 * std::f64::consts::PI).unwrap();
        let samples = integrate_schrodinger(&setup, 1.0, 0.0, &config).unwrap();
        for s in samples.iter().step_by(100) {
            assert!((s.y - s.x.cos()).abs() < 1e-8, "at x = {}", s.x);
        }
    }

    #[test]
    fn fourth_order_convergence() {
        // endpoint away from multiples of pi: the leading h^4 phase error
        // of RK4 on y'' = -y is proportional to x sin(x) and would vanish
        // at period boundaries, faking fifth-order decay
        let setup = free(1.0);
        let end = 30.0_f64;
        let exact = end.cos();
        let mut errs = Vec::new();
        for steps in [0.02, 0.01] {
            let config = IntegratorConfig::new(steps, 0.0, end).unwrap();
            let samples = run_linear(&gamma_of(&setup), 1.0, 0.0, &config, 1).unwrap();
            errs.push((samples.last().unwrap().y - exact).abs());
        }
        let ratio = errs[0] / errs[1];
        assert!(
            (14.0..=18.0).contains(&ratio),
            "error ratio {ratio} not ~16 (errors {errs:?})"
        );
    }

    #[test]
    fn zero_initial_data_stays_zero() {
        let setup = free(0.3);
        let config = IntegratorConfig::new(0.01, 0.0, 1.0).unwrap();
        let samples = integrate_schrodinger(&setup, 0.0, 0.0, &config).unwrap();
        assert!(samples.iter().all(|s| s.y == 0.0 && s.y_prime == 0.0));
    }

    #[test]
    fn convergence_gate_rejects_coarse_step() {
        let setup = free(0.01); // wavelength ~ 0.03
        let config = IntegratorConfig::new(0.05, 0.0, 1.0).unwrap();
        assert!(integrate_schrodinger(&setup, 1.0, 0.0, &config).is_err());
    }

    #[test]
    fn log_form_tracks_growing_exponential() {
        // step barrier: theta = exp(kappa x / hbar), kappa = 1, hbar = 0.01;
        // by x = 1 the solution is e^100, far past f64.
        let setup =
            PhysicalSetup::new(1.0, 0.5, 0.01, PotentialModel::Step { barrier: 1.0 }).unwrap();
        let config = IntegratorConfig::new(1e-5, 0.0, 1.0).unwrap();
        let samples = integrate_schrodinger_log(&setup, 0.0, 1, 100.0, &config).unwrap();
        let last = samples.last().unwrap();
        assert!((last.log_y - 100.0).abs() < 1e-6);
        assert!((last.w - 100.0).abs() < 1e-6);
    }

    #[test]
    fn fd_exact_on_polynomials() {
        // central stencils are exact on cubics for any h; a large step keeps
        // the roundoff floor at machine level
        let f = |x: f64| 2.0 * x * x * x - 3.0 * x * x + x - 7.0;
        let (d1, _) = fd_derivative(&f, 1.3, 1, 0.5).unwrap();
        assert!((d1 - (6.0 * 1.3 * 1.3 - 6.0 * 1.3 + 1.0)).abs() < 1e-9);
        let (d2, _) = fd_derivative(&f, 1.3, 2, 0.5).unwrap();
        assert!((d2 - (12.0 * 1.3 - 6.0)).abs() < 1e-9);
        let (d3, _) = fd_derivative(&f, 1.3, 3, 0.5).unwrap();
        assert!((d3 - 12.0).abs() < 1e-9);
    }

    #[test]
    fn quad_average_of_cosine_vanishes() {
        let f = |x: f64| x.cos();
        let mean = quad_cycle_average(&f, 0.37, 2.0 * std::f64::consts::PI).unwrap();
        assert!(mean.abs() < 1e-12);
    }
}
