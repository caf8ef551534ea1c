//! Image-charge geometry, the exact effective potential, its Taylor
//! expansion, and the effective oscillator frequency.
//!
//! Positions and energies are reduced: lengths in units of the plate
//! separation `L`, potentials in units of `alpha*hbar*c/L`. The electron sits
//! at `x` with `|x| < 1/2`; plates are the planes `x = -1/2` and `x = +1/2`.
//!
//! A note on the overlap of the image-charge state itself: the many-body
//! position states of the image ladder are orthogonal for any two distinct
//! electron positions, so their overlap kernel is the trivial identity
//! (1 when `x' = x`, 0 otherwise). There is nothing finite to compute, and it
//! carries no which-path memory; it is therefore documented here rather than
//! exposed as an operation.

use crate::error::{Error, Result};
use crate::real::Real;
use crate::specfun::{self, PolygammaOrder};
use crate::units::PhysicalConstants;

/// Positions in units of `L` are rejected within this distance of a plate,
/// where the potential diverges.
pub const PLATE_GUARD: f64 = 1e-9;

/// Truncated ladder of image charges induced by an electron at `source_x`.
///
/// Per shell `n >= 1` the positive images sit at `-(2n-1) - x` and
/// `(2n-1) - x`, the negative ones at `-2n + x` and `2n + x` (units of `L`).
#[derive(Debug, Clone, PartialEq)]
pub struct ImageSet<S: Real> {
    /// Positive image positions, shell-ordered as `[left_1, right_1, left_2, ...]`.
    pub positive: Vec<S>,
    /// Negative image positions, same ordering.
    pub negative: Vec<S>,
    pub n_max: u32,
    pub source_x: S,
}

fn check_position<S: Real>(x: S) -> Result<()> {
    if !(x.abs() < S::lit(0.5)) {
        return Err(Error::Geometry(format!(
            "electron position must satisfy |x| < L/2, got x/L = {x}"
        )));
    }
    Ok(())
}

/// Builds the truncated image ladder for an electron at `x`.
pub fn image_positions<S: Real>(x: S, n_max: u32) -> Result<ImageSet<S>> {
    check_position(x)?;
    if n_max < 1 {
        return Err(Error::Config("n_max must be at least 1".into()));
    }
    let mut positive = Vec::with_capacity(2 * n_max as usize);
    let mut negative = Vec::with_capacity(2 * n_max as usize);
    for n in 1..=n_max as usize {
        let odd = S::from_index(2 * n - 1);
        let even = S::from_index(2 * n);
        positive.push(-odd - x);
        positive.push(odd - x);
        negative.push(-even + x);
        negative.push(even + x);
    }
    Ok(ImageSet {
        positive,
        negative,
        n_max,
        source_x: x,
    })
}

/// Which plate to probe in [`boundary_residual`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Plate {
    Left,
    Right,
}

/// Electrostatic potential of electron plus truncated images, evaluated on a
/// plate plane at transverse offset `y_offset`, in units of `e/(4 pi eps0 L)`.
///
/// The exact infinite ladder cancels pairwise on the plates, so the residual
/// is a pure truncation effect and decays like `1/n_max`.
pub fn boundary_residual<S: Real>(x: S, plate: Plate, y_offset: S, n_max: u32) -> Result<S> {
    check_position(x)?;
    if n_max < 1 {
        return Err(Error::Config("n_max must be at least 1".into()));
    }
    let plate_x = match plate {
        Plate::Left => S::lit(-0.5),
        Plate::Right => S::lit(0.5),
    };
    let y2 = y_offset * y_offset;
    let contrib = |charge_x: S, sign: S| {
        let d = plate_x - charge_x;
        sign / (d * d + y2).sqrt()
    };
    // electron carries charge -e; positive images +e; negative images -e
    let mut total = contrib(x, -S::one());
    for n in 1..=n_max as usize {
        let odd = S::from_index(2 * n - 1);
        let even = S::from_index(2 * n);
        total += contrib(-odd - x, S::one());
        total += contrib(odd - x, S::one());
        total += contrib(-even + x, -S::one());
        total += contrib(even + x, -S::one());
    }
    Ok(total)
}

/// x-dependent part of the image potential as a truncated series
/// (units `alpha*hbar*c/L`):
///
/// ```text
/// v(x) = -2 sum_{n=0}^{n_max} [1/(2n+1)] * 4x^2 / ((2n+1)^2 - 4x^2)
/// ```
///
/// An Euler-Maclaurin tail estimate is appended so the truncation error is
/// far below the series' own convergence scale.
pub fn potential_series<S: Real>(x: S, n_max: u64) -> Result<S> {
    check_position(x)?;
    let x2 = x * x;
    if x2 == S::zero() {
        return Ok(S::zero());
    }
    let four_x2 = S::lit(4.0) * x2;
    let mut sum = S::zero();
    let mut n = 0u64;
    while n <= n_max {
        let odd = S::from_f64(2.0 * n as f64 + 1.0).unwrap();
        sum += four_x2 / (odd * (odd * odd - four_x2));
        n += 1;
    }
    // midpoint Euler-Maclaurin tail: integral of the summand from n_max + 1/2
    let v = S::from_f64(2.0 * n_max as f64 + 2.0).unwrap();
    let tail = -(S::one() - four_x2 / (v * v)).ln() / S::lit(2.0);
    Ok(-S::lit(2.0) * (sum + tail))
}

/// Exact closed form of the image potential (units `alpha*hbar*c/L`):
/// `v(x) = [H(-1/2 - x) + H(-1/2 + x) + ln 16] / 2`.
///
/// Diverges to `-inf` at the plates; positions within [`PLATE_GUARD`] of a
/// plate are rejected as [`Error::Pole`].
pub fn potential_closed<S: Real>(x: S) -> Result<S> {
    if !(x.abs() < S::lit(0.5 - PLATE_GUARD)) {
        return Err(Error::Pole {
            location: x.to_f64().unwrap_or(f64::NAN),
            context: "image potential diverges at the plates".into(),
        });
    }
    let half = S::lit(0.5);
    let a = specfun::harmonic_real(-half - x)?;
    let b = specfun::harmonic_real(-half + x)?;
    Ok((a + b + S::lit(16.0).ln()) * half)
}

/// Coefficient of `(x/L)^(2n)` in the Taylor expansion of the image
/// potential (units `alpha*hbar*c/L`): `psi(2n, 1/2) / (2n)!`.
pub fn taylor_coefficient<S: Real>(n: u32) -> Result<S> {
    if n == 0 {
        return Err(Error::Config("taylor_coefficient requires n >= 1".into()));
    }
    let order = PolygammaOrder::new(2 * n)?;
    let psi = specfun::polygamma(order, S::lit(0.5))?;
    let mut fact = S::one();
    for k in 1..=2 * n as usize {
        fact *= S::from_index(k);
    }
    Ok(psi / fact)
}

/// Partial Taylor sum of the image potential through order `2 n_terms`
/// (units `alpha*hbar*c/L`).
pub fn potential_taylor<S: Real>(x: S, n_terms: u32) -> Result<S> {
    check_position(x)?;
    let mut v = S::zero();
    for n in 1..=n_terms {
        v += taylor_coefficient::<S>(n)? * x.powi(2 * n as i32);
    }
    Ok(v)
}

/// External trap plus leading image correction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectivePotentialParams<S: Real> {
    /// External trap angular frequency, units `c/L`.
    pub omega: S,
    /// Electron mass, units `hbar/(c L)`.
    pub mass: S,
    /// Highest retained Taylor order `2n` (must be even and >= 2).
    pub taylor_order: u32,
}

impl<S: Real> EffectivePotentialParams<S> {
    pub fn new(omega: S, mass: S, taylor_order: u32) -> Result<Self> {
        if !(omega >= S::zero()) {
            return Err(Error::Config(format!("omega must be >= 0, got {omega}")));
        }
        if !(mass > S::zero()) {
            return Err(Error::Config(format!("mass must be positive, got {mass}")));
        }
        if taylor_order < 2 || taylor_order % 2 != 0 {
            return Err(Error::Config(format!(
                "taylor_order must be even and >= 2, got {taylor_order}"
            )));
        }
        Ok(Self {
            omega,
            mass,
            taylor_order,
        })
    }
}

/// Effective trap frequency with the leading image correction:
/// `Omega_eff^2 = Omega^2 + alpha * psi(2, 1/2) / (m L^3)` (reduced units).
///
/// The correction is negative, so `Omega_eff < Omega`; a non-positive
/// radicand means the trap cannot hold the electron against the plates.
pub fn effective_frequency<S: Real>(
    params: &EffectivePotentialParams<S>,
    consts: &PhysicalConstants<S>,
) -> Result<S> {
    let psi2 = specfun::polygamma(PolygammaOrder::new(2)?, S::lit(0.5))?;
    let radicand = params.omega * params.omega + consts.alpha * psi2 / params.mass;
    if !(radicand > S::zero()) {
        return Err(Error::Instability(format!(
            "trap too weak: Omega_eff^2 = {radicand} <= 0; the electron runs to a plate"
        )));
    }
    Ok(radicand.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn image_positions_at_center() {
        let set = image_positions(0.0f64, 1).unwrap();
        assert_eq!(set.positive, vec![-1.0, 1.0]);
        assert_eq!(set.negative, vec![-2.0, 2.0]);
    }

    #[test]
    fn image_positions_off_center() {
        let set = image_positions(0.2f64, 1).unwrap();
        assert_relative_eq!(set.positive[0], -1.2);
        assert_relative_eq!(set.positive[1], 0.8);
        assert_relative_eq!(set.negative[0], -1.8);
        assert_relative_eq!(set.negative[1], 2.2);
    }

    #[test]
    fn negative_image_distances_are_position_independent() {
        for &x in &[-0.41, -0.1, 0.0, 0.27, 0.49] {
            let set = image_positions(x, 6).unwrap();
            for (i, &pos) in set.negative.iter().enumerate() {
                let n = (i / 2 + 1) as f64;
                assert_relative_eq!((pos - x).abs(), 2.0 * n, max_relative = 1e-14);
            }
        }
    }

    #[test]
    fn image_positions_rejects_outside_cavity() {
        assert!(matches!(image_positions(0.5f64, 1), Err(Error::Geometry(_))));
        assert!(matches!(image_positions(-0.7f64, 1), Err(Error::Geometry(_))));
        assert!(image_positions(0.0f64, 0).is_err());
    }

    #[test]
    fn boundary_residual_shrinks_under_doubling() {
        let mut n = 100u32;
        let mut prev = f64::INFINITY;
        while n <= 12800 {
            let r = boundary_residual(0.0f64, Plate::Right, 0.5, n).unwrap().abs();
            assert!(r < prev, "residual not decreasing at n_max = {n}: {r} vs {prev}");
            prev = r;
            n *= 2;
        }
        assert!(prev < 1e-4, "residual at n_max = 12800 is {prev}");
    }

    #[test]
    fn boundary_residual_off_center() {
        let r = boundary_residual(0.3f64, Plate::Left, 1.0, 10_000).unwrap().abs();
        assert!(r < 1e-3, "off-center residual {r}");
    }

    #[test]
    fn potential_series_is_even_and_zero_at_center() {
        assert_eq!(potential_series(0.0f64, 1000).unwrap(), 0.0);
        for &x in &[0.1, 0.23, 0.44] {
            let plus = potential_series(x, 100_000).unwrap();
            let minus = potential_series(-x, 100_000).unwrap();
            assert_relative_eq!(plus, minus, max_relative = 1e-14);
        }
    }

    #[test]
    fn potential_closed_vanishes_at_center() {
        // 2 H(-1/2) + ln 16 = -4 ln 2 + 4 ln 2
        assert!(potential_closed(0.0f64).unwrap().abs() < 1e-10);
    }

    #[test]
    fn series_and_closed_form_agree() {
        for &x in &[-0.45, -0.35, -0.25, -0.15, -0.05, 0.05, 0.15, 0.25, 0.35, 0.45] {
            let series = potential_series(x, 1_000_000).unwrap();
            let closed = potential_closed(x).unwrap();
            assert_relative_eq!(series, closed, max_relative = 1e-6);
        }
    }

    #[test]
    fn potential_is_even_and_has_interior_maximum() {
        for &x in &[0.05, 0.21, 0.37, 0.49] {
            assert_relative_eq!(
                potential_closed(x).unwrap(),
                potential_closed(-x).unwrap(),
                max_relative = 1e-12,
                epsilon = 1e-12
            );
        }
        // strict local maximum at x = 0: negative second difference
        let h = 1e-3;
        let second = potential_closed(h).unwrap() - 2.0 * potential_closed(0.0f64).unwrap()
            + potential_closed(-h).unwrap();
        assert!(second < 0.0);
        // monotone decrease toward the plates
        let mut prev = potential_closed(0.0f64).unwrap();
        for i in 1..=49 {
            let v = potential_closed(i as f64 * 0.01).unwrap();
            assert!(v < prev, "potential not decreasing at x = {}", i as f64 * 0.01);
            prev = v;
        }
    }

    #[test]
    fn potential_closed_rejects_plate_neighborhood() {
        assert!(matches!(potential_closed(0.5f64), Err(Error::Pole { .. })));
        assert!(matches!(potential_closed(0.4999999999f64), Err(Error::Pole { .. })));
    }

    #[test]
    fn taylor_coefficients_are_negative_and_match_anchor() {
        for n in 1..=5 {
            // orders above PolygammaOrder::MAX are rejected, so cap at 2n <= 12
            if 2 * n <= 12 {
                let c = taylor_coefficient::<f64>(n).unwrap();
                assert!(c < 0.0, "Taylor coefficient {n} not negative: {c}");
            }
        }
        let c1 = taylor_coefficient::<f64>(1).unwrap();
        assert!((c1 - (-8.4144)).abs() < 5e-4, "c1 = {c1}");
    }

    #[test]
    fn taylor_sum_matches_closed_form_near_center() {
        let x = 0.1f64;
        let taylor = potential_taylor(x, 3).unwrap();
        let closed = potential_closed(x).unwrap();
        assert_relative_eq!(taylor, closed, max_relative = 1e-4);
    }

    #[test]
    fn effective_frequency_is_redshifted() {
        let consts = PhysicalConstants::<f64>::default();
        let params = EffectivePotentialParams::new(1.0, 1.0, 2).unwrap();
        let w = effective_frequency(&params, &consts).unwrap();
        assert!(w < params.omega);
        assert!(w > 0.0);

        // decoupling: alpha -> 0 recovers the bare trap
        let weak = PhysicalConstants::new(1e-12f64).unwrap();
        let w0 = effective_frequency(&params, &weak).unwrap();
        assert_relative_eq!(w0, params.omega, max_relative = 1e-9);

        // heavy mass: correction scales as 1/m
        let heavy = EffectivePotentialParams::new(1.0, 1e9, 2).unwrap();
        let wh = effective_frequency(&heavy, &consts).unwrap();
        assert_relative_eq!(wh, 1.0, max_relative = 1e-9);
    }

    #[test]
    fn effective_frequency_instability() {
        let consts = PhysicalConstants::new(0.5f64).unwrap();
        let params = EffectivePotentialParams::new(0.1, 1.0, 2).unwrap();
        assert!(matches!(
            effective_frequency(&params, &consts),
            Err(Error::Instability(_))
        ));
    }
}
