//! Reduced-unit system and physical constants.
//!
//! Internally the toolkit works with `hbar = c = epsilon0 = 1` and the plate
//! separation `L = 1`, so lengths are `x/L`, times are `ct/L` and energies are
//! multiples of `alpha*hbar*c/L`. Conversions to and from SI quantities exist
//! only at the CLI boundary.

use crate::error::{Error, Result};
use crate::real::Real;

/// CODATA fine-structure constant.
pub const ALPHA_CODATA: f64 = 1.0 / 137.035999;
/// Reduced Planck constant (J s).
pub const HBAR_SI: f64 = 1.054_571_817e-34;
/// Speed of light (m/s).
pub const C_SI: f64 = 299_792_458.0;
/// Vacuum permittivity (F/m).
pub const EPSILON0_SI: f64 = 8.854_187_812_8e-12;
/// Elementary charge (C).
pub const E_CHARGE_SI: f64 = 1.602_176_634e-19;

/// Coupling constants in reduced units (`hbar = c = epsilon0 = 1`).
///
/// Only `alpha` is adjustable; tests set `alpha = 1` to magnify decoherence
/// exponents that would otherwise saturate to 1 in double precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants<S: Real> {
    pub alpha: S,
}

impl<S: Real> PhysicalConstants<S> {
    pub fn new(alpha: S) -> Result<Self> {
        if !(alpha > S::zero() && alpha < S::one()) {
            return Err(Error::Config(format!(
                "fine-structure constant must satisfy 0 < alpha < 1, got {alpha}"
            )));
        }
        Ok(Self { alpha })
    }

    /// Squared elementary charge in reduced units: `e^2 = 4 pi alpha`.
    #[inline]
    pub fn e_squared(&self) -> S {
        S::lit(4.0) * S::PI() * self.alpha
    }
}

impl<S: Real> Default for PhysicalConstants<S> {
    fn default() -> Self {
        Self {
            alpha: S::lit(ALPHA_CODATA),
        }
    }
}

/// Cavity geometry: plates at `x = -1/2` and `x = +1/2` in reduced units.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CavityConfig<S: Real> {
    /// Optional SI plate separation, used only for CLI input/output.
    pub l_si: Option<S>,
}

impl<S: Real> CavityConfig<S> {
    pub fn with_l_si(l_si: S) -> Result<Self> {
        if !(l_si > S::zero()) {
            return Err(Error::Config(format!("plate separation must be positive, got {l_si}")));
        }
        Ok(Self { l_si: Some(l_si) })
    }

    /// Whether a reduced position lies strictly between the plates.
    #[inline]
    pub fn contains(&self, x: S) -> bool {
        x.abs() <= S::lit(0.5)
    }
}

/// The three quantity kinds the toolkit converts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuantityKind {
    Length,
    Time,
    Energy,
}

impl QuantityKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "length" => Ok(Self::Length),
            "time" => Ok(Self::Time),
            "energy" => Ok(Self::Energy),
            other => Err(Error::Config(format!("unknown quantity kind `{other}`"))),
        }
    }
}

/// SI <-> reduced conversion scales anchored on the plate separation.
///
/// `length_unit = L`, `time_unit = L/c`, `energy_unit = alpha*hbar*c/L`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedUnits<S: Real> {
    pub l_si: S,
    pub alpha: S,
}

impl<S: Real> ReducedUnits<S> {
    pub fn new(l_si: S, alpha: S) -> Result<Self> {
        if !(l_si > S::zero()) {
            return Err(Error::Config(format!("length unit must be positive, got {l_si}")));
        }
        if !(alpha > S::zero()) {
            return Err(Error::Config(format!("alpha must be positive, got {alpha}")));
        }
        Ok(Self { l_si, alpha })
    }

    /// SI magnitude of one reduced unit of the given kind.
    pub fn unit_si(&self, kind: QuantityKind) -> S {
        match kind {
            QuantityKind::Length => self.l_si,
            QuantityKind::Time => self.l_si / S::lit(C_SI),
            QuantityKind::Energy => {
                self.alpha * S::lit(HBAR_SI) * S::lit(C_SI) / self.l_si
            }
        }
    }

    /// Converts an SI value into reduced units.
    pub fn to_reduced(&self, value: S, kind: QuantityKind) -> S {
        value / self.unit_si(kind)
    }

    /// Converts a reduced value back to SI.
    pub fn from_reduced(&self, value: S, kind: QuantityKind) -> S {
        value * self.unit_si(kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn length_and_time_units_are_definitions() {
        let u = ReducedUnits::new(1.3e-6_f64, ALPHA_CODATA).unwrap();
        assert_relative_eq!(u.to_reduced(1.3e-6, QuantityKind::Length), 1.0, max_relative = 1e-15);
        assert_relative_eq!(
            u.to_reduced(1.3e-6 / C_SI, QuantityKind::Time),
            1.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(u.to_reduced(2.6e-6, QuantityKind::Length), 2.0, max_relative = 1e-15);
    }

    #[test]
    fn roundtrip_is_identity() {
        let u = ReducedUnits::new(4.7e-7_f64, ALPHA_CODATA).unwrap();
        for kind in [QuantityKind::Length, QuantityKind::Time, QuantityKind::Energy] {
            for &v in &[1.0e-9, 3.7, 8.2e11] {
                let roundtrip = u.from_reduced(u.to_reduced(v, kind), kind);
                assert_relative_eq!(roundtrip, v, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn unknown_kind_is_a_config_error() {
        assert!(matches!(QuantityKind::parse("charge"), Err(Error::Config(_))));
    }

    #[test]
    fn alpha_must_be_in_range() {
        assert!(PhysicalConstants::<f64>::new(0.0).is_err());
        assert!(PhysicalConstants::<f64>::new(1.5).is_err());
        let c = PhysicalConstants::<f64>::default();
        assert!(c.alpha > 0.0 && c.alpha < 1.0);
    }
}
