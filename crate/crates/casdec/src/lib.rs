//! Numerical toolkit for the electrodynamics of an electron between two
//! parallel, perfectly conducting plates.
//!
//! Everything is computed in reduced units `hbar = c = epsilon0 = 1` with the
//! plate separation `L` as the unit of length (so time is measured in `L/c`
//! and all positions live in `[-1/2, 1/2]`). In these units every decoherence
//! exponent collapses to `alpha * (dx/L)^2 * g(ct/L)` for a dimensionless
//! profile `g`; the fine-structure constant `alpha` is configurable.
//!
//! The crate is organized around:
//!
//! * [`specfun`] — real-argument digamma / polygamma / harmonic-number /
//!   integer-zeta evaluation,
//! * [`images`] — image-charge geometry, the exact image potential and the
//!   effective trap frequency,
//! * [`kernels`] — cavity vacuum two-point functions and noise kernels,
//!   evaluated both by direct mode sums and by image resummation,
//! * [`decoherence`] — suppression of density-matrix off-diagonals for
//!   sudden, adiabatic and tabulated switching of the coupling,
//! * [`master_eq`] — grid-based integration of the bremsstrahlung master
//!   equation plus its closed-form dephasing solution,
//! * [`units`] — reduced-unit bookkeeping and SI conversions.
//!
//! All numerical routines are generic over the scalar type through the
//! [`Real`] trait (`f32` or `f64`); the concrete aliases below pin the
//! double-precision instantiation used by the CLI and the test suites.

pub mod decoherence;
pub mod error;
pub mod images;
pub mod kernels;
pub mod master_eq;
pub mod quad;
pub mod real;
pub mod specfun;
pub mod units;

pub use error::{Error, Result};
pub use real::Real;

/// Concrete scalar used by the command-line tools and the acceptance suite.
pub type Scalar = f64;
/// Complex number over the default scalar.
pub type Complex = num_complex::Complex<Scalar>;

pub type PhysicalConstants = units::PhysicalConstants<Scalar>;
pub type CavityConfig = units::CavityConfig<Scalar>;
pub type ReducedUnits = units::ReducedUnits<Scalar>;
pub type Regularization = kernels::Regularization<Scalar>;
pub type SeriesControl = kernels::SeriesControl<Scalar>;
pub type SuperpositionPair = decoherence::SuperpositionPair<Scalar>;
pub type SwitchingProfile = decoherence::SwitchingProfile<Scalar>;
pub type DecoherenceCurve = decoherence::DecoherenceCurve<Scalar>;
pub type DensityMatrixGrid = master_eq::DensityMatrixGrid<Scalar>;
pub type OscillatorParams = master_eq::OscillatorParams<Scalar>;
pub type TrajectoryEstimate = master_eq::TrajectoryEstimate<Scalar>;
