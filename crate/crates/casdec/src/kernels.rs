//! Cavity vacuum two-point functions and noise kernels.
//!
//! Everything is evaluated two independent ways:
//!
//! * a direct mode sum over the discrete cavity spectrum (the oracle), with
//!   the transverse-momentum integral done by numerical quadrature, and
//! * the image-resummed closed form obtained through the Dirac-comb identity,
//!   a rapidly converging sum over image displacements `m L`.
//!
//! The UV regularization is the exponential cutoff `exp(-omega * epsilon)`
//! with `epsilon = 1/(k_max c)` inserted under the momentum integral, which
//! makes the closed forms in `(tau - i epsilon)` exact rather than
//! approximate. Transverse separations are set to zero throughout (they are
//! negligible against `c tau` for a nonrelativistic particle).
//!
//! Units: reduced (`hbar = c = epsilon0 = L = 1`). The noise kernel carries
//! the coupling `e^2 = 4 pi alpha`.

use crate::error::{Error, Result};
use crate::quad;
use crate::real::Real;
use crate::specfun::{self, PolygammaOrder};
use crate::units::PhysicalConstants;
use num_complex::Complex;

/// UV cutoff bookkeeping: `epsilon = 1/(k_max c)` in reduced time units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Regularization<S: Real> {
    pub epsilon: S,
}

impl<S: Real> Regularization<S> {
    pub fn new(epsilon: S) -> Result<Self> {
        if !(epsilon > S::zero()) {
            return Err(Error::Config(format!("epsilon must be positive, got {epsilon}")));
        }
        Ok(Self { epsilon })
    }

    /// Cutoff momentum `k_max = 1/epsilon` (reduced).
    #[inline]
    pub fn k_max(&self) -> S {
        self.epsilon.recip()
    }
}

/// Truncation and tolerance policy for the infinite sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl<S: Real> {
    /// Image-sum truncation.
    pub m_max: u32,
    /// Cavity-mode truncation; `None` derives it from the cutoff so that the
    /// cutoff, not the truncation, limits accuracy.
    pub n_max: Option<u32>,
    /// Quadrature density: nodes per oscillation period in the mode sums.
    pub k_quad: u32,
    pub abs_tol: S,
    pub rel_tol: S,
}

impl<S: Real> Default for SeriesControl<S> {
    fn default() -> Self {
        Self {
            m_max: 10_000,
            n_max: None,
            k_quad: 8,
            abs_tol: S::lit(1e-14),
            rel_tol: S::lit(1e-6),
        }
    }
}

impl<S: Real> SeriesControl<S> {
    pub fn validate(&self) -> Result<()> {
        if self.m_max == 0 || self.k_quad == 0 {
            return Err(Error::Config("series truncations must be positive".into()));
        }
        if !(self.rel_tol > S::zero() && self.rel_tol < S::one()) {
            return Err(Error::Config(format!(
                "rel_tol must lie in (0, 1), got {}",
                self.rel_tol
            )));
        }
        if !(self.abs_tol >= S::zero()) {
            return Err(Error::Config("abs_tol must be non-negative".into()));
        }
        Ok(())
    }

    /// Mode-sum truncation: `n_max = ceil(20 / (pi epsilon))` unless pinned.
    pub fn n_max_for(&self, reg: &Regularization<S>) -> u32 {
        self.n_max.unwrap_or_else(|| {
            let v = S::lit(20.0) / (S::PI() * reg.epsilon);
            v.ceil().to_f64().map(|x| x as u32).unwrap_or(u32::MAX).max(4)
        })
    }
}

/// A single kernel evaluation. `flagged` marks points within `5 epsilon` of a
/// lightcone time `c tau = m L`, where the strict `epsilon -> 0` limit
/// diverges; downstream consumers decide how to render them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPoint<S: Real> {
    pub tau: S,
    pub value: S,
    pub flagged: bool,
}

#[inline]
fn s_parameter<S: Real>(tau: S, reg: &Regularization<S>) -> Complex<S> {
    // s = epsilon + i tau, so that m^2 L^2 - c^2 (tau - i eps)^2 = m^2 + s^2
    Complex::new(reg.epsilon, tau)
}

/// True when `tau` lies within `5 epsilon` of an integer multiple of `L/c`.
fn near_lightcone<S: Real>(tau: S, reg: &Regularization<S>, include_zero: bool) -> bool {
    let nearest = tau.round();
    if nearest == S::zero() && !include_zero {
        return false;
    }
    (tau - nearest).abs() < S::lit(5.0) * reg.epsilon
}

/// `sum_{m=1}^{m_max} 1/(m^2 + s^2)^2` plus a polygamma tail estimate.
fn image_sum_tail<S: Real>(s2: Complex<S>, m_max: u32) -> Complex<S> {
    let mut acc = Complex::<S>::new(S::zero(), S::zero());
    for m in 1..=m_max as usize {
        let m2 = S::from_index(m * m);
        let d = Complex::new(m2, S::zero()) + s2;
        acc += (d * d).finv();
    }
    // tail: sum_{m>M} m^-4 (1 + s^2/m^2)^-2 ~ psi3/6 - 2 s^2 psi5/120 + 3 s^4 psi7/5040
    let edge = S::from_index(m_max as usize + 1);
    let p3 = specfun::polygamma(PolygammaOrder::new(3).unwrap(), edge).unwrap() / S::lit(6.0);
    let p5 = specfun::polygamma(PolygammaOrder::new(5).unwrap(), edge).unwrap() / S::lit(120.0);
    let p7 = specfun::polygamma(PolygammaOrder::new(7).unwrap(), edge).unwrap() / S::lit(5040.0);
    acc += Complex::new(p3, S::zero()) - s2 * S::lit(2.0) * p5 + s2 * s2 * S::lit(3.0) * p7;
    acc
}

/// Image-resummed two-point function of the x-polarized field at the cavity
/// center: `(1/pi^2) sum_{m in Z} 1/(m^2 + s^2)^2` with `s = eps + i tau`.
pub fn two_point_image_resummed<S: Real>(
    tau: S,
    reg: &Regularization<S>,
    ctl: &SeriesControl<S>,
) -> Result<Complex<S>> {
    ctl.validate()?;
    let s = s_parameter(tau, reg);
    let s2 = s * s;
    let m0 = (s2 * s2).finv();
    let sum = image_sum_tail(s2, ctl.m_max);
    Ok((m0 + sum * S::lit(2.0)) * S::FRAC_1_PI() * S::FRAC_1_PI())
}

/// Empty-space noise kernel (the `m = 0` image term alone).
pub fn noise_kernel_empty_space<S: Real>(
    consts: &PhysicalConstants<S>,
    tau: S,
    reg: &Regularization<S>,
) -> S {
    let s = s_parameter(tau, reg);
    let s2 = s * s;
    S::lit(4.0) * consts.alpha * S::FRAC_1_PI() * (s2 * s2).finv().re
}

/// Full noise kernel between the plates (symmetrized field correlator of a
/// centered superposition), image-resummed:
/// `N(tau) = (4 alpha / pi) Re sum_{m in Z} 1/(m^2 + s^2)^2`.
pub fn noise_kernel_total<S: Real>(
    consts: &PhysicalConstants<S>,
    tau: S,
    reg: &Regularization<S>,
    ctl: &SeriesControl<S>,
) -> Result<KernelPoint<S>> {
    ctl.validate()?;
    let s = s_parameter(tau, reg);
    let s2 = s * s;
    let total = (s2 * s2).finv() + image_sum_tail(s2, ctl.m_max) * S::lit(2.0);
    Ok(KernelPoint {
        tau,
        value: S::lit(4.0) * consts.alpha * S::FRAC_1_PI() * total.re,
        flagged: near_lightcone(tau, reg, true),
    })
}

/// Observationally relevant noise kernel: the `m = 0` empty-space dressing
/// term removed, `N_ob(tau) = (8 alpha / pi) Re sum_{m>=1} 1/(m^2 + s^2)^2`.
pub fn noise_kernel_observable<S: Real>(
    consts: &PhysicalConstants<S>,
    tau: S,
    reg: &Regularization<S>,
    ctl: &SeriesControl<S>,
) -> Result<KernelPoint<S>> {
    ctl.validate()?;
    let s = s_parameter(tau, reg);
    let s2 = s * s;
    let sum = image_sum_tail(s2, ctl.m_max);
    Ok(KernelPoint {
        tau,
        value: S::lit(8.0) * consts.alpha * S::FRAC_1_PI() * sum.re,
        flagged: near_lightcone(tau, reg, false),
    })
}

/// Short-time limit of the observable noise kernel,
/// `N_cas = (8 alpha / pi) zeta(4) = 4 pi^3 alpha / 45`, proportional to the
/// vacuum energy density shift `pi^2/(720 L^4)` between ideal plates.
pub fn noise_kernel_casimir<S: Real>(consts: &PhysicalConstants<S>) -> S {
    let z4: S = specfun::zeta_int(4).expect("zeta(4)");
    S::lit(8.0) * consts.alpha * S::FRAC_1_PI() * z4
}

/// Noise kernel for the field correlated across the full plate separation
/// (positions `-L/2` and `+L/2`): alternating mode weights resum into an
/// `L`-comb minus a `2L`-comb,
/// `N(tau) = (8 alpha/pi) Re [ sum_m 1/(m^2+s^2)^2 - sum_m 1/(4m^2+s^2)^2 ]`.
///
/// The `m = 0` pieces cancel identically, so the kernel is finite at
/// `tau = 0` and its `epsilon -> 0` divergences sit at odd multiples of `L/c`
/// only: even round-trip times drop out of the cross correlator.
pub fn noise_kernel_large_sep<S: Real>(
    consts: &PhysicalConstants<S>,
    tau: S,
    reg: &Regularization<S>,
    ctl: &SeriesControl<S>,
) -> Result<KernelPoint<S>> {
    ctl.validate()?;
    let s = s_parameter(tau, reg);
    let s2 = s * s;
    let sum_l = image_sum_tail(s2, ctl.m_max);
    let sum_2l = image_sum_tail(s2 * S::lit(0.25), ctl.m_max) * S::lit(1.0 / 16.0);
    let value = S::lit(16.0) * consts.alpha * S::FRAC_1_PI() * (sum_l - sum_2l).re;
    // strict-limit poles only at odd lightcone times
    let nearest = tau.round();
    let is_odd = (nearest.to_f64().unwrap_or(0.0).abs() as u64) % 2 == 1;
    let flagged = is_odd && (tau - nearest).abs() < S::lit(5.0) * reg.epsilon;
    Ok(KernelPoint { tau, value, flagged })
}

/// Mode-sum two-point function
/// `G(x1, x2, tau) = (1/L) sum_n int d^2k/(2pi)^2 (k_par^2 / 2 omega_n)
///  cos(n pi (x1+L/2)/L) cos(n pi (x2+L/2)/L) e^{-i omega_n tau} e^{-omega_n eps}`,
/// the independent oracle for the image-resummed forms.
///
/// The transverse integral is reduced exactly to a frequency integral
/// `int_{|n|pi}^inf (omega^2 - n^2 pi^2) e^{-(eps + i tau) omega} domega / (4 pi)`
/// and evaluated by composite Gauss-Legendre panels sized against both the
/// oscillation period `2 pi / tau` and the cutoff decay `1/eps`.
pub fn two_point_mode_sum<S: Real>(
    x1: S,
    x2: S,
    tau: S,
    reg: &Regularization<S>,
    ctl: &SeriesControl<S>,
) -> Result<Complex<S>> {
    if !(x1.abs() <= S::lit(0.5) && x2.abs() <= S::lit(0.5)) {
        return Err(Error::Geometry(format!(
            "positions must satisfy |x| <= L/2, got {x1}, {x2}"
        )));
    }
    if tau < S::zero() {
        return Err(Error::Input(format!("tau must be >= 0, got {tau}")));
    }
    mode_sum_g(x1, x2, tau, reg, ctl)
}

/// Internal mode sum without the sign restriction on `tau` (used by
/// symmetrization checks).
pub(crate) fn mode_sum_g<S: Real>(
    x1: S,
    x2: S,
    tau: S,
    reg: &Regularization<S>,
    ctl: &SeriesControl<S>,
) -> Result<Complex<S>> {
    ctl.validate()?;
    let eps = reg.epsilon;
    let n_max = ctl.n_max_for(reg);
    let needed = S::lit(20.0) / eps;
    if S::from_f64(n_max as f64).unwrap() * S::PI() < needed {
        log::warn!(
            "mode-sum truncation n_max = {n_max} resolves less than 20 cutoff lengths; \
             accuracy is truncation-limited"
        );
    }

    let s = Complex::new(eps, tau);
    // panel width against oscillation and decay
    let period = if tau.abs() > S::lit(1e-12) {
        S::lit(2.0) * S::PI() / tau.abs()
    } else {
        S::infinity()
    };
    let decay_scale = eps.recip() * S::lit(0.1);
    let width = (period / S::from_index(ctl.k_quad.max(4) as usize)).min(decay_scale);
    let omega_span = S::lit(40.0) / eps;

    let integral_from = |kappa: S, panel_width: S| -> Complex<S> {
        let f = |omega: S| -> Complex<S> {
            let k2 = omega * omega - kappa * kappa;
            (-s * omega).exp() * k2
        };
        let hi = kappa + omega_span;
        let panels = ((omega_span / panel_width).to_f64().unwrap()).ceil() as usize;
        quad::composite(&f, kappa, hi, panels.max(8))
    };

    // convergence check on the n = 0 term: halve the panel width
    let coarse = integral_from(S::zero(), width);
    let fine = integral_from(S::zero(), width * S::lit(0.5));
    let scale = fine.norm().max(S::lit(1e-300));
    if (coarse - fine).norm() / scale > ctl.rel_tol.max(S::lit(1e-9)) {
        return Err(Error::Numerical(format!(
            "transverse-momentum quadrature not converged (rel err {})",
            ((coarse - fine).norm() / scale)
        )));
    }

    let phase1 = |n: usize| ((S::from_index(n)) * S::PI() * (x1 + S::lit(0.5))).cos();
    let phase2 = |n: usize| ((S::from_index(n)) * S::PI() * (x2 + S::lit(0.5))).cos();

    let mut total = fine; // n = 0, cos terms are 1
    for n in 1..=n_max as usize {
        let w = phase1(n) * phase2(n);
        if w == S::zero() {
            continue;
        }
        let kappa = S::from_index(n) * S::PI();
        total += integral_from(kappa, width) * (w + w);
    }
    Ok(total * (S::lit(4.0) * S::PI()).recip())
}

/// Symmetrized noise kernel from the mode sum,
/// `N = (e^2/2) [G(tau) + G(-tau)]`, with the imaginary residue returned for
/// reality checks.
pub fn noise_kernel_from_mode_sum<S: Real>(
    consts: &PhysicalConstants<S>,
    x1: S,
    x2: S,
    tau: S,
    reg: &Regularization<S>,
    ctl: &SeriesControl<S>,
) -> Result<Complex<S>> {
    let forward = mode_sum_g(x1, x2, tau, reg, ctl)?;
    let backward = mode_sum_g(x1, x2, -tau, reg, ctl)?;
    Ok((forward + backward) * (consts.e_squared() * S::lit(0.5)))
}

/// Residuals of the Dirac-comb resummation identities applied to a Gaussian
/// test function of momentum-space width `test_width`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombResiduals<S: Real> {
    /// Even comb: `sum_{n even} delta_n = (L/2pi) sum_m e^{i m k L}`.
    pub even: S,
    /// Alternating comb: `sum_n (-1)^n delta_n = 2 sum delta_{2n} - sum delta_n`.
    pub alternating: S,
}

impl<S: Real> CombResiduals<S> {
    pub fn max(&self) -> S {
        self.even.max(self.alternating)
    }
}

/// Applies both comb identities to `g(k) = exp(-k^2 / (2 w^2))` and returns
/// the relative mismatch of the two sides, each evaluated by direct
/// summation.
pub fn comb_resum_check<S: Real>(test_width: S, ctl: &SeriesControl<S>) -> Result<CombResiduals<S>> {
    if !(test_width > S::zero()) {
        return Err(Error::Input(format!("test width must be positive, got {test_width}")));
    }
    ctl.validate()?;
    let w = test_width;
    let n_max = ctl.n_max.unwrap_or(200) as i64;
    let m_max = ctl.m_max.min(100_000) as i64;
    let g = |k: S| (-(k * k) / (S::lit(2.0) * w * w)).exp();
    // Fourier transform of g against e^{i m k L}: w sqrt(2 pi) e^{-m^2 L^2 w^2 / 2}
    let ft = |m_l: S| w * (S::lit(2.0) * S::PI()).sqrt() * (-(m_l * m_l) * w * w * S::lit(0.5)).exp();

    let mut lhs_even = g(S::zero());
    let mut lhs_alt = g(S::zero());
    for n in 1..=n_max {
        let k = S::from_f64(n as f64).unwrap() * S::PI();
        let sign = if n % 2 == 0 { S::one() } else { -S::one() };
        if n % 2 == 0 {
            lhs_even += S::lit(2.0) * g(k);
        }
        lhs_alt += S::lit(2.0) * sign * g(k);
    }

    let mut sum_l = ft(S::zero());
    let mut sum_2l = ft(S::zero());
    for m in 1..=m_max {
        let mf = S::from_f64(m as f64).unwrap();
        sum_l += S::lit(2.0) * ft(mf);
        sum_2l += S::lit(2.0) * ft(S::lit(2.0) * mf);
    }
    let rhs_even = sum_l * (S::lit(2.0) * S::PI()).recip();
    let rhs_alt = (sum_l - sum_2l) * S::FRAC_1_PI();

    let rel = |lhs: S, rhs: S| {
        let scale = lhs.abs().max(rhs.abs()).max(S::lit(1e-300));
        (lhs - rhs).abs() / scale
    };
    Ok(CombResiduals {
        even: rel(lhs_even, rhs_even),
        alternating: rel(lhs_alt, rhs_alt),
    })
}
