//! Physical constants in atomic units.

/// Speed of light in atomic units (inverse fine-structure constant).
pub const SPEED_OF_LIGHT: f64 = 137.035999;

/// One atomic unit of intensity expressed in W/cm^2.
///
/// An intensity `I` in W/cm^2 converts to atomic units as
/// `I / INTENSITY_AU_WCM2`, and the peak field of a linearly polarized wave
/// of intensity `I` (a.u.) is `sqrt(I)`.
pub const INTENSITY_AU_WCM2: f64 = 3.50945e16;

/// Converts an intensity from W/cm^2 to atomic units.
pub fn intensity_wcm2_to_au(i_wcm2: f64) -> f64 {
    i_wcm2 / INTENSITY_AU_WCM2
}

/// Converts an intensity from atomic units to W/cm^2.
pub fn intensity_au_to_wcm2(i_au: f64) -> f64 {
    i_au * INTENSITY_AU_WCM2
}
