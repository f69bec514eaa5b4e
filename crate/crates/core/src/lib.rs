/*! Velocity-gauge strong-field ionization rates and laser-parameter diagnostics.

Everything works in atomic units (hbar = m_e = |e| = 1). The crate is split
into four layers:

- [`params`]: dimensionless intensity parameters (z, z1, the Keldysh
  parameter), tunneling-condition reports, and classification of the
  (frequency, intensity) plane into dipole-valid and dipole-invalid regimes.
- [`bessel`]: ordinary Bessel functions of integer order, the two-argument
  generalized Bessel function, and large-order asymptotic forms, all
  evaluated without external special-function libraries.
- [`bound_states`]: momentum-space hydrogenic initial states (1s, 2p) under
  the symmetric Fourier convention.
- [`rates`]: the channel-sum differential and total ionization rates for
  circular and linear polarization, photoelectron spectra, momentum maps,
  and tunneling-exponential diagnostics.

All operations are pure functions of their inputs and safe to call
concurrently.
*/

pub mod bessel;
pub mod bound_states;
pub mod constants;
pub mod error;
pub mod numeric;
pub mod params;
pub mod rates;

pub use bessel::{BesselEval, EvalMethod};
pub use bound_states::{BoundStateModel, OrbitalKind};
pub use error::{Error, Result};
pub use params::{
    ConditionReport, Drive, FieldParams, LaserInput, Polarization, RegimeCell, RegimeLabel,
    RegimeMap,
};
