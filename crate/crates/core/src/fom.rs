//! Figure of merit FOM = S_a·N, force/acceleration conversion and the
//! thermal force-noise floor.
//!
//! All spectral densities are single scalars at the measurement band.
//! Amplitude densities (√S) are what records carry; power densities (S)
//! appear only inside the FOM and thermal formulas.

use std::fmt;

use thiserror::Error;

use crate::catalog::{Catalog, ExperimentRecord};
use crate::chem::{nuclei_count, ChemError, PeriodicTable};
use crate::quantity::{angular_frequency, asd_to_psd, Constants};

/// Relative disagreement between a supplied √S_a and the one derived from
/// √S_F above which a warning is attached.
pub const NOISE_CONSISTENCY_TOLERANCE: f64 = 0.02;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FomError {
    #[error("mass must be positive, got {0}")]
    NonPositiveMass(f64),
    #[error("{0} must be non-negative, got {1}")]
    NegativeInput(&'static str, f64),
    #[error("{0} must be positive, got {1}")]
    NonPositive(&'static str, f64),
    #[error("record has neither sqrt_sf nor sqrt_sa")]
    MissingNoise,
    #[error(transparent)]
    Chem(#[from] ChemError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum FomWarning {
    /// Supplied √S_a disagrees with √S_F / m by more than the tolerance.
    InconsistentNoise { supplied: f64, derived: f64 },
    /// Measured total force noise lies below the computed thermal floor.
    BelowThermalFloor { measured: f64, thermal: f64 },
}

impl fmt::Display for FomWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FomWarning::InconsistentNoise { supplied, derived } => write!(
                f,
                "sqrt_sa {supplied:e} disagrees with sqrt_sf/mass = {derived:e} ({:+.1}%)",
                (supplied / derived - 1.0) * 100.0
            ),
            FomWarning::BelowThermalFloor { measured, thermal } => {
                write!(f, "measured sqrt_sf {measured:e} is below the thermal floor {thermal:e}")
            }
        }
    }
}

/// Derived quantities for one record.
#[derive(Debug, Clone, PartialEq)]
pub struct FomResult {
    /// Nuclei in the test mass.
    pub n_nuclei: f64,
    /// Whether `n_nuclei` came from the record's override.
    pub n_overridden: bool,
    /// N/√Hz
    pub sqrt_sf: f64,
    /// m s⁻²/√Hz
    pub sqrt_sa: f64,
    /// m²/s³
    pub fom: f64,
    pub thermal_sqrt_sf: Option<f64>,
    pub thermal_fom: Option<f64>,
    pub thermally_limited: bool,
    pub show_thermal_marker: bool,
    pub warnings: Vec<FomWarning>,
}

/// √S_a = √S_F / m.
pub fn accel_asd_from_force(sqrt_sf: f64, mass: f64) -> Result<f64, FomError> {
    check_mass(mass)?;
    non_negative("sqrt_sf", sqrt_sf)?;
    Ok(sqrt_sf / mass)
}

/// √S_F = m·√S_a.
pub fn force_asd_from_accel(sqrt_sa: f64, mass: f64) -> Result<f64, FomError> {
    check_mass(mass)?;
    non_negative("sqrt_sa", sqrt_sa)?;
    Ok(sqrt_sa * mass)
}

/// FOM = S_a·N.
pub fn fom_from_psd(s_a: f64, n: f64) -> Result<f64, FomError> {
    non_negative("s_a", s_a)?;
    non_negative("n", n)?;
    Ok(s_a * n)
}

/// FOM = σ_a²·N·ΔT, computed through S_a = σ_a²·ΔT.
pub fn fom_from_variance(sigma_a: f64, n: f64, delta_t: f64) -> Result<f64, FomError> {
    non_negative("sigma_a", sigma_a)?;
    non_negative("delta_t", delta_t)?;
    fom_from_psd(sigma_a * sigma_a * delta_t, n)
}

/// Thermal force PSD 4·k_B·T·m·ω0/Q in N²/Hz.
pub fn thermal_force_psd(temp: f64, mass: f64, omega0: f64, q: f64, k_b: f64) -> Result<f64, FomError> {
    non_negative("temperature", temp)?;
    check_mass(mass)?;
    positive("omega0", omega0)?;
    positive("quality", q)?;
    Ok(4.0 * k_b * temp * mass * omega0 / q)
}

/// FOM of a thermally limited experiment, 4·N·k_B·T·ω0/(m·Q).
pub fn thermal_fom(n: f64, temp: f64, omega0: f64, mass: f64, q: f64, k_b: f64) -> Result<f64, FomError> {
    non_negative("n", n)?;
    non_negative("temperature", temp)?;
    check_mass(mass)?;
    positive("omega0", omega0)?;
    positive("quality", q)?;
    Ok(4.0 * n * k_b * temp * omega0 / (mass * q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThermalClass {
    /// Thermal floor exceeds half the measured noise.
    pub thermally_limited: bool,
    /// Measured noise is at least twice the thermal floor.
    pub show_thermal_marker: bool,
}

/// Compares amplitude densities. The two flags are complementary: exactly
/// one is set for any pair of inputs.
pub fn classify_thermal(measured_sqrt_sf: f64, thermal_sqrt_sf: f64) -> ThermalClass {
    let thermally_limited = thermal_sqrt_sf > measured_sqrt_sf / 2.0;
    ThermalClass {
        thermally_limited,
        show_thermal_marker: !thermally_limited && measured_sqrt_sf >= 2.0 * thermal_sqrt_sf,
    }
}

/// Runs the full pipeline for one record.
///
/// N comes from `n_override` when present, otherwise from the material.
/// √S_F wins when both noise figures are given; √S_a is then recomputed and
/// a warning is attached if the supplied value disagrees by more than 2%.
/// Thermal fields are filled only when temperature, f0 and Q are all known.
pub fn evaluate_record(rec: &ExperimentRecord, pt: &PeriodicTable, c: &Constants) -> Result<FomResult, FomError> {
    check_mass(rec.mass)?;
    let mut warnings = Vec::new();

    let n_nuclei = match rec.n_override {
        Some(n) => n,
        None => nuclei_count(rec.mass, &rec.material, pt)?,
    };

    let (sqrt_sf, sqrt_sa) = match (rec.sqrt_sf, rec.sqrt_sa) {
        (Some(sf), supplied) => {
            let sa = accel_asd_from_force(sf, rec.mass)?;
            if let Some(supplied) = supplied {
                if (supplied / sa - 1.0).abs() > NOISE_CONSISTENCY_TOLERANCE {
                    warnings.push(FomWarning::InconsistentNoise { supplied, derived: sa });
                }
            }
            (sf, sa)
        }
        (None, Some(sa)) => (force_asd_from_accel(sa, rec.mass)?, sa),
        (None, None) => return Err(FomError::MissingNoise),
    };

    let s_a = asd_to_psd(sqrt_sa).map_err(|_| FomError::NegativeInput("sqrt_sa", sqrt_sa))?;
    let fom = fom_from_psd(s_a, n_nuclei)?;

    let mut result = FomResult {
        n_nuclei,
        n_overridden: rec.n_override.is_some(),
        sqrt_sf,
        sqrt_sa,
        fom,
        thermal_sqrt_sf: None,
        thermal_fom: None,
        thermally_limited: false,
        show_thermal_marker: false,
        warnings,
    };

    if let (Some(temp), Some(f0), Some(q)) = (rec.temp, rec.f0, rec.quality) {
        let omega0 = angular_frequency(f0);
        let thermal_sqrt_sf = thermal_force_psd(temp, rec.mass, omega0, q, c.k_b)?.sqrt();
        let class = classify_thermal(sqrt_sf, thermal_sqrt_sf);
        if sqrt_sf < thermal_sqrt_sf {
            result.warnings.push(FomWarning::BelowThermalFloor { measured: sqrt_sf, thermal: thermal_sqrt_sf });
        }
        result.thermal_sqrt_sf = Some(thermal_sqrt_sf);
        result.thermal_fom = Some(thermal_fom(n_nuclei, temp, omega0, rec.mass, q, c.k_b)?);
        result.thermally_limited = class.thermally_limited;
        result.show_thermal_marker = class.show_thermal_marker;
    }

    Ok(result)
}

/// Evaluates every record; the error names the first failing record.
pub fn evaluate_catalog(
    cat: &Catalog,
    pt: &PeriodicTable,
    c: &Constants,
) -> Result<Vec<FomResult>, (String, FomError)> {
    cat.records().iter().map(|r| evaluate_record(r, pt, c).map_err(|e| (r.name.clone(), e))).collect()
}

fn check_mass(mass: f64) -> Result<(), FomError> {
    if mass.is_finite() && mass > 0.0 {
        Ok(())
    } else {
        Err(FomError::NonPositiveMass(mass))
    }
}

fn non_negative(what: &'static str, v: f64) -> Result<(), FomError> {
    if v >= 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(FomError::NegativeInput(what, v))
    }
}

fn positive(what: &'static str, v: f64) -> Result<(), FomError> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(FomError::NonPositive(what, v))
    }
}
