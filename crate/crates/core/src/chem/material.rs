use std::fmt;

use super::{molar_mass, ChemError, Formula, PeriodicTable};
use crate::quantity::AVOGADRO;

const FRACTION_SUM_TOLERANCE: f64 = 1e-9;

/// One formula and the mass fraction it contributes.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub formula: Formula,
    pub fraction: f64,
}

/// Composition of a test mass by mass fraction.
///
/// Text form is either a bare formula (`Si3N4`) or a mixture
/// `f1*Formula1+f2*Formula2+...` with no whitespace.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialSpec {
    components: Vec<Component>,
}

impl MaterialSpec {
    pub fn pure(formula: Formula) -> Self {
        MaterialSpec { components: vec![Component { formula, fraction: 1.0 }] }
    }

    pub fn mixture(components: Vec<Component>) -> Result<Self, ChemError> {
        if components.is_empty() {
            return Err(ChemError::parse(0, "empty material"));
        }
        for c in &components {
            if !(c.fraction.is_finite() && c.fraction > 0.0 && c.fraction <= 1.0) {
                return Err(ChemError::BadFraction(c.fraction.to_string()));
            }
        }
        let sum: f64 = components.iter().map(|c| c.fraction).sum();
        if (sum - 1.0).abs() > FRACTION_SUM_TOLERANCE {
            return Err(ChemError::FractionSum(sum));
        }
        Ok(MaterialSpec { components })
    }

    pub fn parse(text: &str) -> Result<Self, ChemError> {
        if !text.contains('*') {
            return Formula::parse(text).map(MaterialSpec::pure);
        }
        let mut components = Vec::new();
        for part in split_components(text) {
            let (fraction, formula) = part
                .split_once('*')
                .ok_or_else(|| ChemError::parse(0, "mixture component needs 'fraction*formula'"))?;
            let fraction: f64 = fraction.parse().map_err(|_| ChemError::BadFraction(fraction.to_string()))?;
            components.push(Component { formula: Formula::parse(formula)?, fraction });
        }
        MaterialSpec::mixture(components)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Number of nuclei in `mass` kilograms of this material.
    pub fn nuclei_count(&self, mass: f64, pt: &PeriodicTable) -> Result<f64, ChemError> {
        nuclei_count(mass, self, pt)
    }
}

/// Splits at `+` signs that start a new `fraction*` component, leaving
/// trailing charge signs attached to their formula.
fn split_components(text: &str) -> Vec<&str> {
    let bytes = text.as_bytes();
    let mut parts = Vec::new();
    let mut start = 0;
    for (i, &b) in bytes.iter().enumerate() {
        if b == b'+' && i > start {
            let next = bytes.get(i + 1).copied();
            if matches!(next, Some(c) if c.is_ascii_digit() || c == b'.') {
                parts.push(&text[start..i]);
                start = i + 1;
            }
        }
    }
    parts.push(&text[start..]);
    parts
}

impl fmt::Display for MaterialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [only] = self.components.as_slice() {
            if only.fraction == 1.0 {
                return write!(f, "{}", only.formula);
            }
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}*{}", c.fraction, c.formula)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for MaterialSpec {
    type Err = ChemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MaterialSpec::parse(s)
    }
}

/// Σ over components of `(mass·fraction / M) · N_A · nuclei per formula`.
pub fn nuclei_count(mass: f64, mat: &MaterialSpec, pt: &PeriodicTable) -> Result<f64, ChemError> {
    if !(mass.is_finite() && mass >= 0.0) {
        return Err(ChemError::BadMass(mass));
    }
    let mut total = 0.0;
    for c in &mat.components {
        let m = molar_mass(&c.formula, pt)?;
        total += mass * c.fraction / m * AVOGADRO * c.formula.nuclei() as f64;
    }
    Ok(total)
}
