//! Chemical formulas, standard atomic weights and nucleus counting.
//!
//! Only the flat `SymbolCount` grammar used by test-mass materials is
//! supported: no parentheses, hydrates or isotope prefixes.

mod formula;
mod material;
mod table;

use thiserror::Error;

pub use formula::{Formula, Term};
pub use material::{nuclei_count, Component, MaterialSpec};
pub use table::{element, Element, PeriodicTable, ELEMENTS};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChemError {
    #[error("unknown element symbol `{0}`")]
    UnknownElement(String),
    #[error("malformed formula at position {position}: {message}")]
    Parse { position: usize, message: &'static str },
    #[error("mass fraction `{0}` must be a number in (0, 1]")]
    BadFraction(String),
    #[error("mass fractions sum to {0}, expected 1")]
    FractionSum(f64),
    #[error("atomic weight for `{0}` must be positive")]
    NonPositiveWeight(String),
    #[error("mass must be finite and non-negative, got {0}")]
    BadMass(f64),
}

impl ChemError {
    fn parse(position: usize, message: &'static str) -> Self {
        ChemError::Parse { position, message }
    }

    /// Variant name, for diagnostics that report the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            ChemError::UnknownElement(_) => "UnknownElement",
            ChemError::Parse { .. } => "ParseError",
            ChemError::BadFraction(_) => "BadFraction",
            ChemError::FractionSum(_) => "FractionSum",
            ChemError::NonPositiveWeight(_) => "NonPositiveWeight",
            ChemError::BadMass(_) => "BadMass",
        }
    }
}

/// Parses a formula against the embedded periodic table.
pub fn parse_formula(text: &str) -> Result<Formula, ChemError> {
    Formula::parse(text)
}

/// Molar mass of one formula unit, in kg/mol.
pub fn molar_mass(f: &Formula, pt: &PeriodicTable) -> Result<f64, ChemError> {
    f.terms().iter().try_fold(0.0, |acc, t| {
        let w = pt.weight(t.element.symbol).ok_or_else(|| ChemError::UnknownElement(t.element.symbol.into()))?;
        Ok(acc + f64::from(t.count) * w)
    })
}

/// Σ of the term counts.
pub fn nuclei_per_formula(f: &Formula) -> u64 {
    f.nuclei()
}
