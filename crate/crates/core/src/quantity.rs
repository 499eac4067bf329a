//! Physical constants and unit-tagged scalars.
//!
//! Units are a closed set: only the handful that occur in force-noise
//! bookkeeping exist, and arithmetic never converts between them.

use std::f64::consts::PI;
use std::fmt;

use thiserror::Error;

/// Avogadro constant, exact in SI (mol⁻¹).
pub const AVOGADRO: f64 = 6.02214076e23;

/// Embedded defaults, in the same format accepted by [`load_constants`].
pub const DEFAULT_CONSTANTS_TEXT: &str = include_str!("../data/constants.txt");

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuantityError {
    #[error("cannot combine {lhs} with {rhs}")]
    UnitMismatch { lhs: Unit, rhs: Unit },
    #[error("value {0} is not finite")]
    NonFinite(f64),
    #[error("input must be non-negative, got {0}")]
    NegativeInput(f64),
    #[error("{0} is not a spectral density of the expected kind")]
    WrongUnit(Unit),
    #[error("line {line}: unknown constant `{name}`")]
    UnknownConstant { line: usize, name: String },
    #[error("line {line}: constant `{name}` must be positive")]
    NonPositive { line: usize, name: String },
    #[error("line {line}: expected `name value`, got `{text}`")]
    Malformed { line: usize, text: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unit {
    Kilogram,
    Hertz,
    RadPerSecond,
    Kelvin,
    Second,
    /// σ_F
    Newton,
    /// σ_a
    MeterPerSecond2,
    /// √S_F, N/√Hz
    ForceAsd,
    /// √S_a, m s⁻²/√Hz
    AccelAsd,
    /// S_F, N²/Hz
    ForcePsd,
    /// S_a, m² s⁻⁴/Hz
    AccelPsd,
    /// FOM_D2, m²/s³
    Fom,
    KgPerMol,
    PerMol,
    Dimensionless,
}

impl Unit {
    pub const ALL: [Unit; 15] = [
        Unit::Kilogram,
        Unit::Hertz,
        Unit::RadPerSecond,
        Unit::Kelvin,
        Unit::Second,
        Unit::Newton,
        Unit::MeterPerSecond2,
        Unit::ForceAsd,
        Unit::AccelAsd,
        Unit::ForcePsd,
        Unit::AccelPsd,
        Unit::Fom,
        Unit::KgPerMol,
        Unit::PerMol,
        Unit::Dimensionless,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Unit::Kilogram => "kg",
            Unit::Hertz => "Hz",
            Unit::RadPerSecond => "rad/s",
            Unit::Kelvin => "K",
            Unit::Second => "s",
            Unit::Newton => "N",
            Unit::MeterPerSecond2 => "m/s^2",
            Unit::ForceAsd => "N/rtHz",
            Unit::AccelAsd => "m s^-2/rtHz",
            Unit::ForcePsd => "N^2/Hz",
            Unit::AccelPsd => "m^2 s^-4/Hz",
            Unit::Fom => "m^2/s^3",
            Unit::KgPerMol => "kg/mol",
            Unit::PerMol => "1/mol",
            Unit::Dimensionless => "1",
        }
    }

    fn squared(self) -> Option<Unit> {
        match self {
            Unit::ForceAsd => Some(Unit::ForcePsd),
            Unit::AccelAsd => Some(Unit::AccelPsd),
            Unit::Dimensionless => Some(Unit::Dimensionless),
            _ => None,
        }
    }

    fn square_root(self) -> Option<Unit> {
        match self {
            Unit::ForcePsd => Some(Unit::ForceAsd),
            Unit::AccelPsd => Some(Unit::AccelAsd),
            Unit::Dimensionless => Some(Unit::Dimensionless),
            _ => None,
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A finite value with its unit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    value: f64,
    unit: Unit,
}

impl Quantity {
    pub fn new(value: f64, unit: Unit) -> Result<Self, QuantityError> {
        if !value.is_finite() {
            return Err(QuantityError::NonFinite(value));
        }
        Ok(Quantity { value, unit })
    }

    pub fn value(self) -> f64 {
        self.value
    }

    pub fn unit(self) -> Unit {
        self.unit
    }

    fn same_unit(self, rhs: Quantity) -> Result<(), QuantityError> {
        if self.unit == rhs.unit {
            Ok(())
        } else {
            Err(QuantityError::UnitMismatch { lhs: self.unit, rhs: rhs.unit })
        }
    }

    pub fn try_add(self, rhs: Quantity) -> Result<Quantity, QuantityError> {
        self.same_unit(rhs)?;
        Quantity::new(self.value + rhs.value, self.unit)
    }

    pub fn try_sub(self, rhs: Quantity) -> Result<Quantity, QuantityError> {
        self.same_unit(rhs)?;
        Quantity::new(self.value - rhs.value, self.unit)
    }

    /// Dimensionless ratio of two like quantities.
    pub fn ratio(self, rhs: Quantity) -> Result<f64, QuantityError> {
        self.same_unit(rhs)?;
        Ok(self.value / rhs.value)
    }

    pub fn scale(self, factor: f64) -> Result<Quantity, QuantityError> {
        Quantity::new(self.value * factor, self.unit)
    }

    /// Squares an amplitude spectral density into a power spectral density.
    pub fn to_psd(self) -> Result<Quantity, QuantityError> {
        let unit = self.unit.squared().ok_or(QuantityError::WrongUnit(self.unit))?;
        Quantity::new(asd_to_psd(self.value)?, unit)
    }

    pub fn to_asd(self) -> Result<Quantity, QuantityError> {
        let unit = self.unit.square_root().ok_or(QuantityError::WrongUnit(self.unit))?;
        Quantity::new(psd_to_asd(self.value)?, unit)
    }

    /// Converts a frequency in Hz to an angular frequency.
    pub fn to_angular(self) -> Result<Quantity, QuantityError> {
        match self.unit {
            Unit::Hertz => Quantity::new(angular_frequency(self.value), Unit::RadPerSecond),
            Unit::RadPerSecond => Ok(self),
            other => Err(QuantityError::WrongUnit(other)),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e} {}", self.value, self.unit)
    }
}

/// S = (√S)².
pub fn asd_to_psd(x: f64) -> Result<f64, QuantityError> {
    if x < 0.0 {
        return Err(QuantityError::NegativeInput(x));
    }
    Ok(x * x)
}

pub fn psd_to_asd(s: f64) -> Result<f64, QuantityError> {
    if s < 0.0 {
        return Err(QuantityError::NegativeInput(s));
    }
    Ok(s.sqrt())
}

/// ω = 2π·f. Every Hz → rad/s conversion in the crate goes through here.
pub fn angular_frequency(f_hz: f64) -> f64 {
    2.0 * PI * f_hz
}

/// Physical constants in SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// Gravitational constant, m³ kg⁻¹ s⁻².
    pub g: f64,
    /// Avogadro constant, mol⁻¹.
    pub n_a: f64,
    /// Boltzmann constant, J/K.
    pub k_b: f64,
    /// Planck length, m.
    pub l_p: f64,
    /// Planck mass, kg.
    pub m_p: f64,
    /// Nucleus radius, m.
    pub r_n: f64,
    /// Nucleus mass, kg.
    pub m_n: f64,
}

impl Constants {
    pub const NAMES: [&'static str; 7] = ["G", "N_A", "k_B", "l_P", "m_P", "r_N", "m_N"];

    fn slot(&mut self, name: &str) -> Option<&mut f64> {
        Some(match name {
            "G" => &mut self.g,
            "N_A" => &mut self.n_a,
            "k_B" => &mut self.k_b,
            "l_P" => &mut self.l_p,
            "m_P" => &mut self.m_p,
            "r_N" => &mut self.r_n,
            "m_N" => &mut self.m_n,
            _ => return None,
        })
    }

    /// Value by config-file name.
    pub fn get(&self, name: &str) -> Option<f64> {
        let mut copy = *self;
        copy.slot(name).map(|v| *v)
    }

    /// Applies `name value` lines on top of `self`.
    pub fn overlay(mut self, text: &str) -> Result<Constants, QuantityError> {
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut fields = content.split_whitespace();
            let (Some(name), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(QuantityError::Malformed { line, text: content.to_string() });
            };
            let value: f64 = value.parse().map_err(|_| QuantityError::Malformed { line, text: content.to_string() })?;
            let slot =
                self.slot(name).ok_or_else(|| QuantityError::UnknownConstant { line, name: name.to_string() })?;
            if !(value.is_finite() && value > 0.0) {
                return Err(QuantityError::NonPositive { line, name: name.to_string() });
            }
            *slot = value;
        }
        Ok(self)
    }
}

impl Default for Constants {
    fn default() -> Self {
        let zero = Constants { g: 0.0, n_a: 0.0, k_b: 0.0, l_p: 0.0, m_p: 0.0, r_n: 0.0, m_n: 0.0 };
        zero.overlay(DEFAULT_CONSTANTS_TEXT).expect("embedded constants file is valid")
    }
}

/// Defaults overridden by the pairs in `text`.
pub fn load_constants(text: &str) -> Result<Constants, QuantityError> {
    Constants::default().overlay(text)
}
