//! The classical-limit laboratory.
//!
//! Cycle averages over one oscillation of the conjugate momentum, hbar sweeps
//! with envelope extraction, forbidden-region limits, turning-point region
//! width, and the eta(hbar) microstate family. The classical limit is always
//! reported as a trend over a decreasing geometric hbar grid plus a fitted
//! asymptote, never by evaluating at hbar = 0.

use crate::error::{Error, Result};
use crate::microstate::{Microstate, PhysicalSetup};
use crate::potentials::{self, PotentialModel};
use crate::scaled::ScaledValue;
use crate::trajectory::{self, ReducedActionConvention};

/// Gauss-Legendre 10-point nodes (positive half) and weights on [-1, 1].
const GL10_NODES: [f64; 5] = [
    0.1488743389816312,
    0.4333953941292472,
    0.6794095682990244,
    0.8650633666889845,
    0.9739065285171717,
];
const GL10_WEIGHTS: [f64; 5] = [
    0.2955242247147529,
    0.2692667193099963,
    0.2190863625159820,
    0.1494513491505806,
    0.0666713443086881,
];

fn gl10_panel(f: &dyn Fn(f64) -> Result<f64>, a: f64, b: f64) -> Result<f64> {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = 0.0;
    for i in 0..5 {
        acc += GL10_WEIGHTS[i] * (f(mid - half * GL10_NODES[i])? + f(mid + half * GL10_NODES[i])?);
    }
    Ok(acc * half)
}

fn adaptive_gl(f: &dyn Fn(f64) -> Result<f64>, a: f64, b: f64, tol: f64, depth: u32) -> Result<f64> {
    let whole = gl10_panel(f, a, b)?;
    let mid = 0.5 * (a + b);
    let left = gl10_panel(f, a, mid)?;
    let right = gl10_panel(f, mid, b)?;
    let split = left + right;
    if (split - whole).abs() <= tol.max(1e-15 * split.abs()) {
        return Ok(split);
    }
    if depth == 0 {
        return Err(Error::QuadratureNotConverged {
            achieved: (split - whole).abs(),
            requested: tol,
        });
    }
    Ok(adaptive_gl(f, a, mid, 0.5 * tol, depth - 1)? + adaptive_gl(f, mid, b, 0.5 * tol, depth - 1)?)
}

/// Length of one cycle of the oscillating denominator term at x.
///
/// Free: exactly pi hbar / sqrt(2mE). Linear: the x interval over which the
/// doubled Airy phase (4/3)|zeta|^(3/2) advances by 2 pi, solved so that the
/// interval is centered on x and stays inside the allowed region. Forbidden
/// regions have no cycle.
pub fn local_wavelength(setup: &PhysicalSetup, x: f64) -> Result<f64> {
    match setup.potential {
        PotentialModel::Free => {
            Ok(std::f64::consts::PI * setup.hbar / potentials::wavenumber(setup))
        }
        PotentialModel::Step { .. } => Err(Error::Domain(
            "no oscillation cycle in the forbidden region".into(),
        )),
        PotentialModel::Linear { force } => {
            let (zeta, dzdx) = potentials::airy_argument(setup, force, x);
            if zeta >= 0.0 {
                return Err(Error::Domain(format!(
                    "no oscillation cycle in the forbidden region (zeta = {zeta:.3})"
                )));
            }
            let x_t = setup.energy / force;
            // phase(x) = (4/3)|zeta|^(3/2); its inverse in x
            let x_of_phase =
                |p: f64| x_t - (0.75 * p).powf(2.0 / 3.0) / dzdx;
            let two_pi = 2.0 * std::f64::consts::PI;
            let total = 4.0 / 3.0 * (-zeta).powf(1.5);
            // centered cycle: find right-edge phase p with
            // x(p) + x(p + 2 pi) = 2 x
            let g = |p: f64| x_of_phase(p) + x_of_phase(p + two_pi) - 2.0 * x;
            if g(0.0) < 0.0 {
                return Err(Error::Domain(format!(
                    "cycle centered at x = {x} does not fit inside the allowed region"
                )));
            }
            let (mut lo, mut hi) = (0.0, total);
            for _ in 0..90 {
                let mid = 0.5 * (lo + hi);
                if g(mid) >= 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let p = 0.5 * (lo + hi);
            Ok(x_of_phase(p) - x_of_phase(p + two_pi))
        }
    }
}

/// Quadrature means of Wx, Wx^2 and the quantum term over one cycle.
#[derive(Clone, Copy, Debug)]
pub struct CycleAverage {
    pub mean: f64,
    pub mean_square: f64,
    pub variance: f64,
    pub quantum_term_mean: f64,
    pub wavelength: f64,
}

const QUAD_TOL: f64 = 1e-10;

fn cycle_mean(
    setup: &PhysicalSetup,
    x: f64,
    wavelength: f64,
    f: &dyn Fn(f64) -> Result<f64>,
) -> Result<f64> {
    let _ = setup;
    let a = x - 0.5 * wavelength;
    let b = x + 0.5 * wavelength;
    Ok(adaptive_gl(f, a, b, QUAD_TOL * wavelength, 40)? / wavelength)
}

/// Adaptive Gauss-Legendre cycle averages at x (allowed regions only).
pub fn cycle_average(setup: &PhysicalSetup, ms: &Microstate, x: f64) -> Result<CycleAverage> {
    let wavelength = local_wavelength(setup, x)?;
    let mean = cycle_mean(setup, x, wavelength, &|xx| {
        trajectory::conjugate_momentum(setup, ms, xx)
    })?;
    let mean_square = cycle_mean(setup, x, wavelength, &|xx| {
        trajectory::conjugate_momentum(setup, ms, xx).map(|w| w * w)
    })?;
    let quantum_term_mean = cycle_mean(setup, x, wavelength, &|xx| {
        trajectory::quantum_term(setup, ms, xx)
    })?;
    Ok(CycleAverage {
        mean,
        mean_square,
        variance: mean_square - mean * mean,
        quantum_term_mean,
        wavelength,
    })
}

/// Cycle average of the free-particle Jacobi time with the linear x factor
/// frozen at the window center, reproducing the averaged equation of motion:
/// the average equals (m / 2E)^(1/2) x for every microstate.
pub fn average_time(setup: &PhysicalSetup, ms: &Microstate, x: f64) -> Result<f64> {
    if setup.potential != PotentialModel::Free {
        return Err(Error::Domain(
            "averaged motion with a frozen numerator is defined for the free particle".into(),
        ));
    }
    // t(x') with x frozen is x Wx(x') / (2E)
    let wavelength = local_wavelength(setup, x)?;
    let mean_wx = cycle_mean(setup, x, wavelength, &|xx| {
        trajectory::conjugate_momentum(setup, ms, xx)
    })?;
    Ok(x * mean_wx / (2.0 * setup.energy))
}

/// Observables an hbar sweep can track.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Observable {
    Wx,
    W,
    WOverHbar,
    TMinusT0,
    QuantumTerm,
    Residual,
}

impl Observable {
    pub const ALL: [Observable; 6] = [
        Observable::Wx,
        Observable::W,
        Observable::WOverHbar,
        Observable::TMinusT0,
        Observable::QuantumTerm,
        Observable::Residual,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Observable::Wx => "Wx",
            Observable::W => "W",
            Observable::WOverHbar => "W_over_hbar",
            Observable::TMinusT0 => "t_minus_t0",
            Observable::QuantumTerm => "quantum_term",
            Observable::Residual => "residual",
        }
    }
}

impl std::fmt::Display for Observable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Observable {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Observable::ALL
            .iter()
            .copied()
            .find(|o| o.name() == s)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown observable '{s}' (expected one of Wx, W, W_over_hbar, t_minus_t0, quantum_term, residual)"
                ))
            })
    }
}

/// One sweep sample: observable value and its local envelope at fixed x.
/// Values are kept in scaled form so step-barrier sweeps stay meaningful far
/// below the f64 underflow threshold.
#[derive(Clone, Copy, Debug)]
pub struct SweepRecord {
    pub hbar: f64,
    pub x: f64,
    pub observable: Observable,
    pub value: ScaledValue,
    pub envelope_min: ScaledValue,
    pub envelope_max: ScaledValue,
}

fn observable_value(
    setup: &PhysicalSetup,
    ms: &Microstate,
    x: f64,
    obs: Observable,
) -> Result<ScaledValue> {
    Ok(match obs {
        Observable::Wx => trajectory::conjugate_momentum_scaled(setup, ms, x)?,
        Observable::W => ScaledValue::from_f64(trajectory::reduced_action(
            setup,
            ms,
            x,
            ReducedActionConvention::Unwrapped,
        )?),
        Observable::WOverHbar => ScaledValue::from_f64(
            trajectory::reduced_action(setup, ms, x, ReducedActionConvention::Unwrapped)?
                / setup.hbar,
        ),
        Observable::TMinusT0 => ScaledValue::from_f64(trajectory::jacobi_time(setup, ms, x)?),
        Observable::QuantumTerm => ScaledValue::from_f64(trajectory::quantum_term(setup, ms, x)?),
        Observable::Residual => ScaledValue::from_f64(trajectory::qshje_residual(setup, ms, x)?),
    })
}

/// min/max of f over [a, b]: coarse scan plus golden-section refinement in
/// the bracketing neighborhoods. Deterministic (fixed iteration counts).
fn sampled_extrema(
    f: &dyn Fn(f64) -> Result<ScaledValue>,
    a: f64,
    b: f64,
) -> Result<(ScaledValue, ScaledValue)> {
    const N: usize = 33;
    let mut xs = [0.0_f64; N];
    let mut vs = [ScaledValue::ZERO; N];
    for i in 0..N {
        xs[i] = a + (b - a) * i as f64 / (N - 1) as f64;
        vs[i] = f(xs[i])?;
    }
    let mut imin = 0;
    let mut imax = 0;
    for i in 1..N {
        if vs[i].cmp_value(vs[imin]) == std::cmp::Ordering::Less {
            imin = i;
        }
        if vs[i].cmp_value(vs[imax]) == std::cmp::Ordering::Greater {
            imax = i;
        }
    }
    let golden = |i: usize, maximize: bool| -> Result<ScaledValue> {
        let lo = xs[i.saturating_sub(1)];
        let hi = xs[(i + 1).min(N - 1)];
        let inv_phi = 0.618_033_988_749_894_9_f64;
        let (mut a, mut b) = (lo, hi);
        let mut c = b - inv_phi * (b - a);
        let mut d = a + inv_phi * (b - a);
        let mut fc = f(c)?;
        let mut fd = f(d)?;
        let mut best = if maximize { vs[i].max_value(fc).max_value(fd) } else { vs[i].min_value(fc).min_value(fd) };
        for _ in 0..48 {
            let keep_left = match fc.cmp_value(fd) {
                std::cmp::Ordering::Greater => maximize,
                _ => !maximize,
            };
            if keep_left {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = f(c)?;
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = f(d)?;
            }
            best = if maximize {
                best.max_value(fc).max_value(fd)
            } else {
                best.min_value(fc).min_value(fd)
            };
        }
        Ok(best)
    };
    Ok((golden(imin, false)?, golden(imax, true)?))
}

/// Envelope window geometry for a sweep point.
fn envelope(
    setup: &PhysicalSetup,
    ms: &Microstate,
    x: f64,
    obs: Observable,
) -> Result<(ScaledValue, ScaledValue)> {
    let eval = |xx: f64| observable_value(setup, ms, xx, obs);
    match setup.potential {
        PotentialModel::Free => {
            let k = potentials::wavenumber(setup);
            let wavelength = std::f64::consts::PI * setup.hbar / k;
            let q = ms.q();
            let p = ms.a + ms.b;
            let amp = ((ms.a - ms.b).powi(2) + ms.c * ms.c).sqrt();
            let wx_lo = 2.0 * k * q / (p + amp);
            let wx_hi = 2.0 * k * q / (p - amp);
            // analytic denominator extrema cover the Wx-derived observables
            let pair = match obs {
                Observable::Wx => Some((wx_lo, wx_hi)),
                Observable::TMinusT0 => {
                    let s = x / (2.0 * setup.energy);
                    let (t1, t2) = (s * wx_lo, s * wx_hi);
                    Some((t1.min(t2), t1.max(t2)))
                }
                Observable::QuantumTerm => Some((
                    setup.energy - wx_hi * wx_hi / (2.0 * setup.mass),
                    setup.energy - wx_lo * wx_lo / (2.0 * setup.mass),
                )),
                Observable::W | Observable::WOverHbar => {
                    // monotone in x: window endpoints
                    let lo = observable_value(setup, ms, x - 0.5 * wavelength, obs)?;
                    let hi = observable_value(setup, ms, x + 0.5 * wavelength, obs)?;
                    return Ok((lo, hi));
                }
                Observable::Residual => None,
            };
            match pair {
                Some((lo, hi)) => Ok((ScaledValue::from_f64(lo), ScaledValue::from_f64(hi))),
                None => sampled_extrema(&eval, x - 0.5 * wavelength, x + 0.5 * wavelength),
            }
        }
        PotentialModel::Step { barrier } => {
            // no oscillation: a window a fraction of the decay length wide,
            // with the analytic critical point of the denominator included
            let kappa = potentials::decay_rate(setup, barrier);
            let half = 5e-4 * setup.hbar / (2.0 * kappa);
            let lo_x = (x - half).max(0.0);
            let hi_x = x + half;
            let mut candidates = vec![lo_x, x, hi_x];
            if ms.a != ms.b {
                let x_star = setup.hbar * (ms.a / ms.b).ln() / (4.0 * kappa);
                if x_star > lo_x && x_star < hi_x {
                    candidates.push(x_star);
                }
            }
            let mut lo = eval(candidates[0])?;
            let mut hi = lo;
            for &c in &candidates[1..] {
                let v = eval(c)?;
                lo = lo.min_value(v);
                hi = hi.max_value(v);
            }
            Ok((lo, hi))
        }
        PotentialModel::Linear { force } => {
            let (zeta, dzdx) = potentials::airy_argument(setup, force, x);
            if zeta < 0.0 {
                if let Ok(wavelength) = local_wavelength(setup, x) {
                    return sampled_extrema(
                        &eval,
                        x - 0.5 * wavelength,
                        x + 0.5 * wavelength,
                    );
                }
            }
            // forbidden side or too close to the turning point: local window
            let scale = 1.0 / (dzdx * zeta.abs().sqrt().max(1.0));
            let half = 5e-4 * scale;
            sampled_extrema(&eval, x - half, x + half)
        }
    }
}

fn sweep_point(
    setup: &PhysicalSetup,
    ms: &Microstate,
    x: f64,
    obs: Observable,
) -> Result<SweepRecord> {
    let value = observable_value(setup, ms, x, obs)?;
    let (lo, hi) = envelope(setup, ms, x, obs)?;
    Ok(SweepRecord {
        hbar: setup.hbar,
        x,
        observable: obs,
        value,
        envelope_min: lo.min_value(value),
        envelope_max: hi.max_value(value),
    })
}

/// Evaluates one observable with its envelope across an hbar grid.
/// Per-point failures are recorded, not fatal.
pub fn hbar_sweep(
    setup_template: &PhysicalSetup,
    ms: &Microstate,
    x: f64,
    hbar_grid: &[f64],
    observable: Observable,
) -> Vec<(f64, Result<SweepRecord>)> {
    hbar_grid
        .iter()
        .map(|&hbar| {
            let record = setup_template
                .with_hbar(hbar)
                .and_then(|setup| sweep_point(&setup, ms, x, observable));
            (hbar, record)
        })
        .collect()
}

/// Geometric grid from start to stop inclusive.
pub fn geometric_grid(start: f64, stop: f64, points: usize) -> Result<Vec<f64>> {
    if !(start.is_finite() && stop.is_finite() && start > 0.0 && stop > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "geometric grid endpoints must be positive, got {start}:{stop}"
        )));
    }
    if points < 2 {
        return Err(Error::InvalidParameter(format!(
            "geometric grid needs at least 2 points, got {points}"
        )));
    }
    let (la, lb) = (start.ln(), stop.ln());
    let mut grid: Vec<f64> = (0..points)
        .map(|i| (la + (lb - la) * i as f64 / (points - 1) as f64).exp())
        .collect();
    grid[0] = start;
    grid[points - 1] = stop;
    Ok(grid)
}

/// Least-squares line fit.
#[derive(Clone, Copy, Debug)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub rms_residual: f64,
}

pub fn fit_line(xs: &[f64], ys: &[f64]) -> Result<LinearFit> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "line fit needs matching samples (>= 2), got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|&x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(&x, &y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidParameter("degenerate abscissa in line fit".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss: f64 = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| {
            let r = y - (intercept + slope * x);
            r * r
        })
        .sum();
    Ok(LinearFit {
        slope,
        intercept,
        rms_residual: (ss / n).sqrt(),
    })
}

/// Width of the region around the turning point x_t = E/f where the motion
/// stays quantum at the given relative threshold.
///
/// Allowed side: the outermost point where the cycle-averaged Wx deviates
/// from the classical momentum by at least epsilon (relative, floored at
/// 1e-3 sqrt(2mE) since the classical momentum vanishes at the turning
/// point). Forbidden side: the outermost point where Wx has not yet fallen
/// below epsilon * sqrt(2mE); the absolute scale is used because the
/// classical momentum is zero there. Both criteria are pure functions of the
/// Airy argument, which is what produces the hbar^(2/3) width scaling.
pub fn turning_region_width(
    setup_template: &PhysicalSetup,
    ms: &Microstate,
    hbar: f64,
    epsilon: f64,
) -> Result<f64> {
    let force = match setup_template.potential {
        PotentialModel::Linear { force } => force,
        _ => {
            return Err(Error::Domain(
                "turning-region width is defined for the linear potential".into(),
            ))
        }
    };
    if !(epsilon.is_finite() && epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be in (0, 1), got {epsilon}"
        )));
    }
    let setup = setup_template.with_hbar(hbar)?;
    let k = potentials::wavenumber(&setup);
    let floor = 1e-3 * k;
    let x_t = setup.energy / force;
    let (_, dzdx) = potentials::airy_argument(&setup, force, x_t);
    let x_of = |zeta: f64| x_t + zeta / dzdx;

    // allowed side: relative deviation of the cycle-averaged momentum
    let allowed_dev = |zeta: f64| -> Result<f64> {
        let x = x_of(zeta);
        let p_cl = (2.0 * setup.mass * (setup.energy - force * x)).sqrt();
        match local_wavelength(&setup, x).and_then(|wavelength| {
            cycle_mean(&setup, x, wavelength, &|xx| {
                trajectory::conjugate_momentum(&setup, ms, xx)
            })
        }) {
            Ok(mean) => Ok((mean - p_cl).abs() / p_cl.max(floor)),
            // no clean cycle fits: the point is still quantum
            Err(Error::Domain(_)) => Ok(f64::INFINITY),
            Err(e) => Err(e),
        }
    };
    const SCAN_STEP: f64 = 0.5;
    const SCAN_MAX: f64 = 80.0;
    let mut last_violation: Option<f64> = None;
    let mut zeta = -SCAN_STEP;
    while zeta >= -SCAN_MAX {
        if allowed_dev(zeta)? >= epsilon {
            last_violation = Some(zeta);
        }
        zeta -= SCAN_STEP;
    }
    let zeta_allowed = match last_violation {
        None => 0.0,
        Some(v) if v <= -SCAN_MAX + SCAN_STEP => {
            return Err(Error::Numerical(format!(
                "allowed-side boundary not bracketed within zeta >= -{SCAN_MAX}"
            )))
        }
        Some(v) => {
            let (mut inside, mut outside) = (v, v - SCAN_STEP);
            for _ in 0..50 {
                let mid = 0.5 * (inside + outside);
                if allowed_dev(mid)? >= epsilon {
                    inside = mid;
                } else {
                    outside = mid;
                }
            }
            0.5 * (inside + outside)
        }
    };

    // forbidden side: absolute smallness of Wx
    let forbidden_excess = |zeta: f64| -> Result<f64> {
        let wx = trajectory::conjugate_momentum(&setup, ms, x_of(zeta))?;
        Ok(wx - epsilon * k)
    };
    let mut last_violation: Option<f64> = None;
    let mut zeta = 0.0;
    while zeta <= SCAN_MAX {
        if forbidden_excess(zeta)? >= 0.0 {
            last_violation = Some(zeta);
        }
        zeta += SCAN_STEP;
    }
    let zeta_forbidden = match last_violation {
        None => 0.0,
        Some(v) if v >= SCAN_MAX - SCAN_STEP => {
            return Err(Error::Numerical(format!(
                "forbidden-side boundary not bracketed within zeta <= {SCAN_MAX}"
            )))
        }
        Some(v) => {
            let (mut inside, mut outside) = (v, v + SCAN_STEP);
            for _ in 0..50 {
                let mid = 0.5 * (inside + outside);
                if forbidden_excess(mid)? >= 0.0 {
                    inside = mid;
                } else {
                    outside = mid;
                }
            }
            0.5 * (inside + outside)
        }
    };

    Ok(x_of(zeta_forbidden) - x_of(zeta_allowed))
}

/// A family of microstates whose indeterminacy amplitude is a prescribed
/// function of hbar, at fixed oscillation phase.
pub struct EtaFamily {
    pub eta_of_hbar: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub base_phase: f64,
}

/// Builds the microstate with `(a-b)^2 + c^2 = amplitude_sq` and
/// `ab - c^2/4 = 1` at the given phase: c = sqrt(eta) cos(phase),
/// a - b = sqrt(eta) sin(phase).
pub fn microstate_with_amplitude(amplitude_sq: f64, base_phase: f64) -> Result<Microstate> {
    if !(amplitude_sq.is_finite() && amplitude_sq >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "indeterminacy amplitude must be >= 0, got {amplitude_sq}"
        )));
    }
    let root = amplitude_sq.sqrt();
    let diff = root * base_phase.sin();
    let c = root * base_phase.cos();
    let t = (4.0 + amplitude_sq).sqrt();
    Microstate::new(0.5 * (t + diff), 0.5 * (t - diff), c)
}

/// Sweeps the Wx envelope at fixed x over an hbar grid, with the microstate
/// rebuilt at each hbar from the prescribed eta(hbar).
pub fn eta_family_sweep(
    setup_template: &PhysicalSetup,
    family: &EtaFamily,
    hbar_grid: &[f64],
    x: f64,
) -> Vec<(f64, Result<SweepRecord>)> {
    hbar_grid
        .iter()
        .map(|&hbar| {
            let record = (|| {
                let eta = (family.eta_of_hbar)(hbar);
                let ms = microstate_with_amplitude(eta, family.base_phase)?;
                let setup = setup_template.with_hbar(hbar)?;
                sweep_point(&setup, &ms, x, Observable::Wx)
            })();
            (hbar, record)
        })
        .collect()
}
