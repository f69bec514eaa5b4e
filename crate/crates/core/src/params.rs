//! Dimensionless laser-intensity parameters and regime classification.
//!
//! A laser/atom configuration in atomic units is reduced to the parameter
//! set (z, z1, gamma_K, alpha0, beta0, z_f):
//!
//! ```text
//! z  = U_p / omega            z1 = 2 U_p / E_B = 1 / gamma_K^2
//! alpha0_c = sqrt(2 z / omega)     (circular orbit radius)
//! alpha0_l = 2 sqrt(z / omega)     (linear quiver amplitude)
//! beta0    = z / (2 c)             (figure-8 drift amplitude)
//! z_f      = 2 z / c^2             (relativistic-onset parameter)
//! ```
//!
//! The identity 2 z / z1 = E_B / omega ties the "many photons needed"
//! condition to a pure intensity-parameter statement; `tunneling_conditions`
//! reports both sides and their residual. `classify_regime` and
//! `regime_map` carve the (frequency, intensity) plane into the dipole-valid
//! "oasis", the magnetic-dominated band, the fully relativistic domain, and
//! the high-frequency region.

use serde::{Deserialize, Serialize};

use crate::constants::{intensity_au_to_wcm2, SPEED_OF_LIGHT};
use crate::error::{Error, Result};

/// Polarization of the driving field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarization {
    Linear,
    Circular,
}

/// How the field strength is specified: either the ponderomotive energy
/// directly, or the peak electric field (converted using the polarization).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Drive {
    /// U_p in hartree.
    PonderomotiveEnergy(f64),
    /// Peak field magnitude E0 in a.u. (5.14e9 V/cm per unit).
    PeakField(f64),
}

/// Physical laser input in atomic units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaserInput {
    /// Photon energy (hartree).
    pub omega: f64,
    pub drive: Drive,
    pub polarization: Polarization,
}

/// The complete derived parameter set. Every field is in atomic units;
/// dimensionless quantities are marked as such.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldParams {
    pub omega: f64,
    /// Ponderomotive energy U_p.
    pub up: f64,
    /// Peak electric field consistent with `up` under the polarization
    /// used at derivation time.
    pub e0: f64,
    /// Binding energy of the initial state.
    pub e_b: f64,
    /// Intensity parameter z = U_p / omega (dimensionless).
    pub z: f64,
    /// Intensity parameter z1 = 2 U_p / E_B (dimensionless).
    pub z1: f64,
    /// Keldysh parameter gamma_K = 1 / sqrt(z1).
    pub gamma_k: f64,
    /// Circular-orbit radius alpha0_c = sqrt(2 z / omega).
    pub alpha0_c: f64,
    /// Linear quiver amplitude alpha0_l = 2 sqrt(z / omega).
    pub alpha0_l: f64,
    /// Drift amplitude along propagation, beta0 = z / (2c).
    pub beta0: f64,
    /// Relativistic-onset parameter z_f = 2 z / c^2.
    pub z_f: f64,
}

/// U_p for a peak field E0 at frequency omega.
pub fn up_from_peak_field(e0: f64, omega: f64, polarization: Polarization) -> f64 {
    match polarization {
        Polarization::Linear => e0 * e0 / (4.0 * omega * omega),
        Polarization::Circular => e0 * e0 / (2.0 * omega * omega),
    }
}

/// Peak field E0 for a ponderomotive energy U_p at frequency omega.
pub fn peak_field_from_up(up: f64, omega: f64, polarization: Polarization) -> f64 {
    match polarization {
        Polarization::Linear => 2.0 * omega * up.sqrt(),
        Polarization::Circular => std::f64::consts::SQRT_2 * omega * up.sqrt(),
    }
}

/// U_p from an intensity in atomic units, using the linear-polarization
/// peak-field convention E0 = sqrt(I).
pub fn up_from_intensity_au(intensity_au: f64, omega: f64) -> f64 {
    intensity_au / (4.0 * omega * omega)
}

fn check_positive(name: &str, value: f64) -> Result<()> {
    if !(value > 0.0) || !value.is_finite() {
        return Err(Error::domain(format!("{name} must be positive, got {value}")));
    }
    Ok(())
}

fn check_non_negative(name: &str, value: f64) -> Result<()> {
    if !(value >= 0.0) || !value.is_finite() {
        return Err(Error::domain(format!("{name} must be >= 0, got {value}")));
    }
    Ok(())
}

/// Derives the full [`FieldParams`] set from a laser input and a binding
/// energy. Purely arithmetic and deterministic.
pub fn derive_params(input: &LaserInput, e_b: f64) -> Result<FieldParams> {
    check_positive("omega", input.omega)?;
    check_positive("e_b", e_b)?;
    let omega = input.omega;
    let (up, e0) = match input.drive {
        Drive::PonderomotiveEnergy(up) => {
            check_non_negative("up", up)?;
            (up, peak_field_from_up(up, omega, input.polarization))
        }
        Drive::PeakField(e0) => {
            check_non_negative("e0", e0)?;
            (up_from_peak_field(e0, omega, input.polarization), e0)
        }
    };
    let z = up / omega;
    let z1 = 2.0 * up / e_b;
    Ok(FieldParams {
        omega,
        up,
        e0,
        e_b,
        z,
        z1,
        gamma_k: 1.0 / z1.sqrt(),
        alpha0_c: (2.0 * z / omega).sqrt(),
        alpha0_l: 2.0 * (z / omega).sqrt(),
        beta0: z / (2.0 * SPEED_OF_LIGHT),
        z_f: 2.0 * z / (SPEED_OF_LIGHT * SPEED_OF_LIGHT),
    })
}

/// Default threshold standing in for the ">> 1" of the tunneling
/// conditions.
pub const DEFAULT_CONDITION_THRESHOLD: f64 = 10.0;

/// The tunneling-condition diagnostics: the two ratio pairs, the boolean
/// flags against a threshold, and the residual of the identity
/// 2 z / z1 = E_B / omega.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub z1: f64,
    pub eb_over_omega: f64,
    pub two_z_over_z1: f64,
    pub gamma_k: f64,
    pub threshold: f64,
    /// Whether z1 >= threshold ("field strong enough for quasistatic language").
    pub z1_large: bool,
    /// Whether E_B/omega >= threshold ("very many photons needed").
    pub eb_large: bool,
    /// |2 z / z1 - E_B / omega|.
    pub identity_residual: f64,
}

/// Evaluates the tunneling conditions with the default threshold of 10.
pub fn tunneling_conditions(fp: &FieldParams) -> ConditionReport {
    tunneling_conditions_with_threshold(fp, DEFAULT_CONDITION_THRESHOLD)
}

/// Evaluates the tunneling conditions against a caller-chosen threshold.
pub fn tunneling_conditions_with_threshold(fp: &FieldParams, threshold: f64) -> ConditionReport {
    let eb_over_omega = fp.e_b / fp.omega;
    let two_z_over_z1 = 2.0 * fp.z / fp.z1;
    ConditionReport {
        z1: fp.z1,
        eb_over_omega,
        two_z_over_z1,
        gamma_k: fp.gamma_k,
        threshold,
        z1_large: fp.z1 >= threshold,
        eb_large: eb_over_omega >= threshold,
        identity_residual: (two_z_over_z1 - eb_over_omega).abs(),
    }
}

/// Region labels for the (frequency, intensity) plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegimeLabel {
    /// Dipole-valid region where quasistatic language can be meaningful.
    Oasis,
    /// Magnetic-field effects break the dipole approximation (beta0 >= 1).
    Magnetic,
    /// Fully relativistic conditions (z_f >= 1).
    Relativistic,
    /// One photon covers the binding energy (omega >= E_B).
    HighFrequency,
}

impl RegimeLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegimeLabel::Oasis => "oasis",
            RegimeLabel::Magnetic => "magnetic",
            RegimeLabel::Relativistic => "relativistic",
            RegimeLabel::HighFrequency => "high-frequency",
        }
    }
}

/// One classified point of the (omega, I) plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeCell {
    pub omega: f64,
    pub intensity_au: f64,
    pub intensity_wcm2: f64,
    pub beta0: f64,
    pub z_f: f64,
    pub gamma_k: f64,
    pub label: RegimeLabel,
}

/// Classifies one point of the plane. Intensity is in atomic units and is
/// converted to U_p with the linear peak-field convention.
pub fn classify_regime(omega: f64, intensity_au: f64, e_b: f64) -> Result<RegimeCell> {
    check_positive("omega", omega)?;
    check_non_negative("intensity", intensity_au)?;
    check_positive("e_b", e_b)?;
    let up = up_from_intensity_au(intensity_au, omega);
    let z = up / omega;
    let beta0 = z / (2.0 * SPEED_OF_LIGHT);
    let z_f = 2.0 * z / (SPEED_OF_LIGHT * SPEED_OF_LIGHT);
    let gamma_k = (e_b / (2.0 * up)).sqrt();
    let label = if z_f >= 1.0 {
        RegimeLabel::Relativistic
    } else if beta0 >= 1.0 {
        RegimeLabel::Magnetic
    } else if omega >= e_b {
        RegimeLabel::HighFrequency
    } else {
        RegimeLabel::Oasis
    };
    Ok(RegimeCell {
        omega,
        intensity_au,
        intensity_wcm2: intensity_au_to_wcm2(intensity_au),
        beta0,
        z_f,
        gamma_k,
        label,
    })
}

/// Grid resolution for [`regime_map`]; both axes are log-spaced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegimeGridSpec {
    pub n_omega: usize,
    pub n_intensity: usize,
}

/// An analytic boundary curve sampled on the map's omega axis (or, for the
/// vertical omega = E_B line, on the intensity axis).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polyline {
    pub label: String,
    /// Vertices as (omega, intensity) pairs in atomic units.
    pub vertices: Vec<[f64; 2]>,
}

/// A classified grid plus the analytic boundary polylines.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimeMap {
    pub omegas: Vec<f64>,
    pub intensities_au: Vec<f64>,
    /// Row-major: index = omega index * n_intensity + intensity index.
    pub cells: Vec<RegimeCell>,
    pub polylines: Vec<Polyline>,
}

fn log_spaced(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (llo, lhi) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == n - 1 {
                hi
            } else {
                (llo + (lhi - llo) * i as f64 / (n - 1) as f64).exp()
            }
        })
        .collect()
}

/// Builds the regime map over `omega_range` x `intensity_range` (both in
/// a.u., log-spaced) with boundary polylines for beta0 = 1, z_f = 1, each
/// requested constant gamma_K, and the vertical omega = E_B line.
pub fn regime_map(
    omega_range: (f64, f64),
    intensity_range_au: (f64, f64),
    grid: RegimeGridSpec,
    e_b: f64,
    gamma_lines: &[f64],
) -> Result<RegimeMap> {
    check_positive("omega range start", omega_range.0)?;
    check_positive("intensity range start", intensity_range_au.0)?;
    check_positive("e_b", e_b)?;
    if omega_range.1 <= omega_range.0 {
        return Err(Error::domain(format!(
            "omega range is empty: {:?}",
            omega_range
        )));
    }
    if intensity_range_au.1 <= intensity_range_au.0 {
        return Err(Error::domain(format!(
            "intensity range is empty: {:?}",
            intensity_range_au
        )));
    }
    if grid.n_omega < 2 || grid.n_intensity < 2 {
        return Err(Error::domain(format!(
            "grid must be at least 2x2, got {}x{}",
            grid.n_omega, grid.n_intensity
        )));
    }
    for (i, g) in gamma_lines.iter().enumerate() {
        check_positive(&format!("gamma_lines[{i}]"), *g)?;
    }

    let omegas = log_spaced(omega_range.0, omega_range.1, grid.n_omega);
    let intensities = log_spaced(intensity_range_au.0, intensity_range_au.1, grid.n_intensity);

    use rayon::prelude::*;
    let cells: Vec<RegimeCell> = omegas
        .par_iter()
        .flat_map_iter(|&om| {
            intensities
                .iter()
                .map(move |&i_au| classify_regime(om, i_au, e_b).expect("validated inputs"))
        })
        .collect();

    let c = SPEED_OF_LIGHT;
    let in_range = |i: f64| i >= intensity_range_au.0 && i <= intensity_range_au.1;
    let mut polylines = Vec::new();

    // Each boundary is I(omega) = 4 omega^2 U_p(omega) for its defining U_p.
    let sampled = |label: String, up_of_omega: &dyn Fn(f64) -> f64| -> Polyline {
        let vertices = omegas
            .iter()
            .filter_map(|&om| {
                let i_au = 4.0 * om * om * up_of_omega(om);
                in_range(i_au).then_some([om, i_au])
            })
            .collect();
        Polyline { label, vertices }
    };

    // beta0 = 1  <=>  U_p = 2 c omega
    polylines.push(sampled("beta0=1".into(), &|om| 2.0 * c * om));
    // z_f = 1  <=>  U_p = c^2 omega / 2
    polylines.push(sampled("z_f=1".into(), &|om| 0.5 * c * c * om));
    for &g in gamma_lines {
        // gamma_K = g  <=>  U_p = E_B / (2 g^2)
        polylines.push(sampled(format!("gamma_K={g}"), &|_om| e_b / (2.0 * g * g)));
    }
    // omega = E_B: vertical line sampled on the intensity axis.
    if e_b >= omega_range.0 && e_b <= omega_range.1 {
        polylines.push(Polyline {
            label: "omega=E_B".into(),
            vertices: intensities.iter().map(|&i| [e_b, i]).collect(),
        });
    }

    Ok(RegimeMap {
        omegas,
        intensities_au: intensities,
        cells,
        polylines,
    })
}
