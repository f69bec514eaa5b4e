//! Momentum-space initial-state models: hydrogenic 1s and 2p orbitals with
//! an effective charge.
//!
//! Wavefunctions follow the symmetric Fourier convention
//! `phi(p) = (2 pi)^{-3/2} integral d^3r exp(-i p.r) phi(r)`, under which
//! `integral |phi(p)|^2 d^3p = 1`. The quantization axis of the 2p orbitals
//! is the z-axis of the momentum vector handed in; rate code aligns that
//! axis with the polarization direction.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which orbital shape the model uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitalKind {
    Hydrogenic1s,
    /// 2p, m = 0 (amplitude along the quantization axis).
    Hydrogenic2pM0,
    /// 2p, |m| = 1 (the m = +1 phase convention; m = -1 is its conjugate).
    Hydrogenic2pM1,
    /// 2p shell averaged over m: an isotropic density model. Its
    /// "amplitude" is defined as the square root of the averaged density.
    Hydrogenic2pAveraged,
}

impl OrbitalKind {
    pub fn principal_n(&self) -> u32 {
        match self {
            OrbitalKind::Hydrogenic1s => 1,
            _ => 2,
        }
    }
}

/// Z_eff that places a hydrogenic level with principal quantum number
/// `principal_n` at binding energy `e_b`: Z = n sqrt(2 E_B).
pub fn effective_charge_for(e_b: f64, principal_n: u32) -> Result<f64> {
    if !(e_b > 0.0) || !e_b.is_finite() {
        return Err(Error::domain(format!("e_b must be positive, got {e_b}")));
    }
    match principal_n {
        1 | 2 => Ok(principal_n as f64 * (2.0 * e_b).sqrt()),
        n => Err(Error::domain(format!(
            "principal_n must be 1 or 2 for the shipped orbitals, got {n}"
        ))),
    }
}

/// An immutable initial-state model: orbital shape, effective charge, and
/// the binding energy used in the rate formulas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundStateModel {
    pub kind: OrbitalKind,
    pub z_eff: f64,
    pub e_b: f64,
}

impl BoundStateModel {
    pub fn new(kind: OrbitalKind, z_eff: f64, e_b: f64) -> Result<Self> {
        if !(z_eff > 0.0) || !z_eff.is_finite() {
            return Err(Error::domain(format!("z_eff must be positive, got {z_eff}")));
        }
        if !(e_b > 0.0) || !e_b.is_finite() {
            return Err(Error::domain(format!("e_b must be positive, got {e_b}")));
        }
        Ok(Self { kind, z_eff, e_b })
    }

    /// Builds the model with Z_eff matched to the binding energy.
    pub fn from_binding_energy(kind: OrbitalKind, e_b: f64) -> Result<Self> {
        let z_eff = effective_charge_for(e_b, kind.principal_n())?;
        Self::new(kind, z_eff, e_b)
    }

    /// Radial momentum amplitude of the 2p shell (the factor multiplying
    /// the spherical harmonic), without the (-i)^l phase.
    fn radial_2p(&self, p: f64) -> f64 {
        let z = self.z_eff;
        let b = z * z / 4.0;
        let d = p * p + b;
        (2.0 / std::f64::consts::PI).sqrt() * 2.0 * z.powi(3) * z.sqrt() * p / (6.0f64.sqrt() * d * d * d)
    }

    fn amp_1s(&self, p: f64) -> f64 {
        let z = self.z_eff;
        let d = p * p + z * z;
        (2.0 * std::f64::consts::SQRT_2 / std::f64::consts::PI) * z * z * z.sqrt() / (d * d)
    }

    /// phi_i(p) for a momentum vector in a.u.; the z-axis is the
    /// quantization axis.
    pub fn momentum_wavefunction(&self, p: [f64; 3]) -> Complex64 {
        let pm = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        match self.kind {
            OrbitalKind::Hydrogenic1s => Complex64::new(self.amp_1s(pm), 0.0),
            OrbitalKind::Hydrogenic2pM0 => {
                let cos_t = if pm > 0.0 { p[2] / pm } else { 0.0 };
                let y10 = (3.0 / (4.0 * std::f64::consts::PI)).sqrt() * cos_t;
                Complex64::new(0.0, -1.0) * self.radial_2p(pm) * y10
            }
            OrbitalKind::Hydrogenic2pM1 => {
                let (sin_t, phase) = if pm > 0.0 {
                    let st = (p[0] * p[0] + p[1] * p[1]).sqrt() / pm;
                    (st, Complex64::new(p[0], p[1]).to_polar().1)
                } else {
                    (0.0, 0.0)
                };
                let y11 = -(3.0 / (8.0 * std::f64::consts::PI)).sqrt() * sin_t;
                Complex64::new(0.0, -1.0)
                    * self.radial_2p(pm)
                    * y11
                    * Complex64::from_polar(1.0, phase)
            }
            OrbitalKind::Hydrogenic2pAveraged => {
                Complex64::new(self.momentum_density(pm, 0.0).sqrt(), 0.0)
            }
        }
    }

    /// |phi_i(p)|^2 as a function of |p| and the polar angle cosine. No
    /// orbital here depends on azimuth, which is what makes the circular
    /// rate azimuth-independent for every shipped state.
    pub fn momentum_density(&self, p: f64, cos_theta: f64) -> f64 {
        match self.kind {
            OrbitalKind::Hydrogenic1s => {
                let a = self.amp_1s(p);
                a * a
            }
            OrbitalKind::Hydrogenic2pM0 => {
                let g = self.radial_2p(p);
                g * g * 3.0 / (4.0 * std::f64::consts::PI) * cos_theta * cos_theta
            }
            OrbitalKind::Hydrogenic2pM1 => {
                let g = self.radial_2p(p);
                g * g * 3.0 / (8.0 * std::f64::consts::PI) * (1.0 - cos_theta * cos_theta)
            }
            OrbitalKind::Hydrogenic2pAveraged => {
                let g = self.radial_2p(p);
                g * g / (4.0 * std::f64::consts::PI)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn effective_charge_reference_points() {
        assert_eq!(effective_charge_for(0.5, 1).unwrap(), 1.0);
        assert_eq!(effective_charge_for(0.125, 2).unwrap(), 1.0);
        let ne = effective_charge_for(0.7925, 2).unwrap();
        assert!((ne - 2.5179356624028344).abs() < 1e-12, "{ne}");
        assert!(effective_charge_for(0.5, 3).is_err());
        assert!(effective_charge_for(-0.5, 1).is_err());
    }

    #[test]
    fn hydrogen_1s_at_rest() {
        let h = BoundStateModel::from_binding_energy(OrbitalKind::Hydrogenic1s, 0.5).unwrap();
        assert_eq!(h.z_eff, 1.0);
        let v = h.momentum_wavefunction([0.0, 0.0, 0.0]);
        assert!((v.re - 0.9003163161571061).abs() < 1e-15);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn tail_falls_as_p_minus_8() {
        let h = BoundStateModel::from_binding_energy(OrbitalKind::Hydrogenic1s, 0.5).unwrap();
        let r = h.momentum_density(3.0, 0.3) / h.momentum_density(30.0, 0.3);
        let expected = (901.0f64 / 10.0).powi(4);
        assert!((r - expected).abs() / expected < 1e-12);
    }

    #[test]
    fn s_state_is_spherically_symmetric() {
        let h = BoundStateModel::from_binding_energy(OrbitalKind::Hydrogenic1s, 0.5).unwrap();
        let p = 1.7;
        let reference = h.momentum_wavefunction([0.0, 0.0, p]).re;
        // directions whose norms match the reference to the last bit
        for dir in [
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.0, 0.0, -1.0],
            [0.6, 0.8, 0.0],
            [0.0, -0.8, 0.6],
        ] {
            let v = h.momentum_wavefunction([p * dir[0], p * dir[1], p * dir[2]]).re;
            assert!((v - reference).abs() <= 1e-14 * reference.abs());
        }
    }

    #[test]
    fn p_state_m0_has_equatorial_node() {
        let ne = BoundStateModel::from_binding_energy(OrbitalKind::Hydrogenic2pM0, 0.7925).unwrap();
        // any p perpendicular to the quantization axis
        let v = ne.momentum_wavefunction([0.9, -0.3, 0.0]);
        assert!(v.norm() < 1e-14);
        // and a maximum along the axis
        let along = ne.momentum_wavefunction([0.0, 0.0, 0.9486833]);
        assert!(along.norm() > 0.0);
    }

    #[test]
    fn m1_density_complements_m0() {
        let s = BoundStateModel::from_binding_energy(OrbitalKind::Hydrogenic2pM1, 0.7925).unwrap();
        // no amplitude along the axis, maximal in the equator
        assert!(s.momentum_density(0.9, 1.0) < 1e-30);
        assert!(s.momentum_density(0.9, 0.0) > 0.0);
    }

    #[test]
    fn averaged_density_is_mean_over_m() {
        let eb = 0.7925;
        let avg =
            BoundStateModel::from_binding_energy(OrbitalKind::Hydrogenic2pAveraged, eb).unwrap();
        let m0 = BoundStateModel::from_binding_energy(OrbitalKind::Hydrogenic2pM0, eb).unwrap();
        let m1 = BoundStateModel::from_binding_energy(OrbitalKind::Hydrogenic2pM1, eb).unwrap();
        for (p, ct) in [(0.3, 0.2), (1.1, -0.7), (2.4, 0.99)] {
            let mean =
                (m0.momentum_density(p, ct) + 2.0 * m1.momentum_density(p, ct)) / 3.0;
            let got = avg.momentum_density(p, ct);
            assert!((got - mean).abs() <= 1e-15 * mean.abs().max(1e-30), "p={p}");
        }
    }

    #[test]
    fn wavefunction_density_consistency() {
        let s = BoundStateModel::from_binding_energy(OrbitalKind::Hydrogenic2pM1, 0.7925).unwrap();
        let p = [0.4f64, -0.2, 0.5];
        let pm = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        let ct = p[2] / pm;
        let from_wf = s.momentum_wavefunction(p).norm_sqr();
        let direct = s.momentum_density(pm, ct);
        assert!((from_wf - direct).abs() <= 1e-15 * direct);
    }
}
