//! Dimensionless spacetime-diffusion bounds from a figure of merit.
//!
//! Both model bounds are linear in FOM. Two routes are offered: scaling
//! from a published (FOM, bound) anchor pair, and direct SI evaluation with
//! configurable nucleus radius and mass. The anchored route reproduces the
//! published numbers; the SI route depends on `r_N` and `m_N`, which are
//! not pinned down, so only ratios between FOMs are comparable across the
//! two.

use std::fmt;

use thiserror::Error;

use crate::quantity::Constants;

/// FOM of the reference torsion-balance bound: σ_a = 1e-7 m/s², N = 1e26,
/// ΔT = 100 s.
pub const CAVENDISH_SIGMA_A: f64 = 1e-7;
pub const CAVENDISH_N: f64 = 1e26;
pub const CAVENDISH_DELTA_T: f64 = 100.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("anchor is for {anchor}, requested {requested}")]
    ModelMismatch { requested: ModelId, anchor: ModelId },
    #[error("{0} must be positive, got {1}")]
    NonPositive(&'static str, f64),
    #[error("{0} must be non-negative, got {1}")]
    Negative(&'static str, f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelId {
    /// Bound on l_P³·D_2/m_P, scales as r_N⁴/(m_N·G²).
    UltraLocalDiscrete,
    /// Bound on l_P²·D_2, scales as r_N³/G².
    NonLocalContinuous,
}

impl ModelId {
    pub const ALL: [ModelId; 2] = [ModelId::UltraLocalDiscrete, ModelId::NonLocalContinuous];

    pub fn key(self) -> &'static str {
        match self {
            ModelId::UltraLocalDiscrete => "discrete",
            ModelId::NonLocalContinuous => "continuous",
        }
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelId::UltraLocalDiscrete => "ultra-local discrete",
            ModelId::NonLocalContinuous => "non-local continuous",
        })
    }
}

/// A published (FOM, bound) pair plus the model's lower bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundAnchor {
    pub model: ModelId,
    /// m²/s³
    pub fom_ref: f64,
    pub bound_ref: f64,
    pub lower_bound: f64,
}

impl BoundAnchor {
    /// Updated bounds at the best absolute on-Earth FOM, 2.98e-1 m²/s³.
    pub fn default_for(model: ModelId) -> BoundAnchor {
        match model {
            ModelId::UltraLocalDiscrete => {
                BoundAnchor { model, fom_ref: 2.98e-1, bound_ref: 1e-16, lower_bound: 1e-25 }
            }
            ModelId::NonLocalContinuous => {
                BoundAnchor { model, fom_ref: 2.98e-1, bound_ref: 1e-24, lower_bound: 1e-35 }
            }
        }
    }

    pub fn defaults() -> [BoundAnchor; 2] {
        ModelId::ALL.map(BoundAnchor::default_for)
    }

    pub fn new(model: ModelId, fom_ref: f64, bound_ref: f64, lower_bound: f64) -> Result<Self, BoundsError> {
        positive("fom_ref", fom_ref)?;
        positive("bound_ref", bound_ref)?;
        positive("lower_bound", lower_bound)?;
        Ok(BoundAnchor { model, fom_ref, bound_ref, lower_bound })
    }

    fn expect(&self, model: ModelId) -> Result<(), BoundsError> {
        if self.model == model {
            Ok(())
        } else {
            Err(BoundsError::ModelMismatch { requested: model, anchor: self.model })
        }
    }
}

/// Direct SI evaluation of the right-hand side of the model bound.
///
/// The expression is not dimensionless under naive unit analysis; the bare
/// SI number is returned.
pub fn si_bound(model: ModelId, fom: f64, c: &Constants) -> Result<f64, BoundsError> {
    non_negative("fom", fom)?;
    let g2 = c.g * c.g;
    Ok(match model {
        ModelId::UltraLocalDiscrete => fom * c.r_n.powi(4) / (c.m_n * g2),
        ModelId::NonLocalContinuous => fom * c.r_n.powi(3) / g2,
    })
}

/// bound_ref · fom / fom_ref.
pub fn anchored_bound(model: ModelId, fom: f64, a: &BoundAnchor) -> Result<f64, BoundsError> {
    a.expect(model)?;
    non_negative("fom", fom)?;
    Ok(a.bound_ref * (fom / a.fom_ref))
}

/// FOM at which the anchored bound equals `bound`.
pub fn fom_threshold(model: ModelId, bound: f64, a: &BoundAnchor) -> Result<f64, BoundsError> {
    a.expect(model)?;
    positive("bound", bound)?;
    Ok(a.fom_ref * (bound / a.bound_ref))
}

/// log10(baseline / fom).
pub fn orders_of_improvement(fom: f64, baseline_fom: f64) -> Result<f64, BoundsError> {
    positive("fom", fom)?;
    positive("baseline_fom", baseline_fom)?;
    Ok((baseline_fom / fom).log10())
}

/// FOM of the reference torsion-balance experiment, 1e14 m²/s³.
pub fn cavendish_fom() -> f64 {
    crate::fom::fom_from_variance(CAVENDISH_SIGMA_A, CAVENDISH_N, CAVENDISH_DELTA_T).expect("positive constants")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub model: ModelId,
    pub fom: f64,
    pub anchored_bound: f64,
    pub si_bound: f64,
    pub below_lower_bound: bool,
    pub orders_vs_cavendish: f64,
}

/// Both bound routes and the improvement over the torsion balance for `fom`.
pub fn bound_report(fom: f64, anchor: &BoundAnchor, c: &Constants) -> Result<BoundReport, BoundsError> {
    let anchored = anchored_bound(anchor.model, fom, anchor)?;
    Ok(BoundReport {
        model: anchor.model,
        fom,
        anchored_bound: anchored,
        si_bound: si_bound(anchor.model, fom, c)?,
        below_lower_bound: anchored < anchor.lower_bound,
        orders_vs_cavendish: orders_of_improvement(fom, cavendish_fom())?,
    })
}

fn positive(what: &'static str, v: f64) -> Result<(), BoundsError> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(BoundsError::NonPositive(what, v))
    }
}

fn non_negative(what: &'static str, v: f64) -> Result<(), BoundsError> {
    if v >= 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(BoundsError::Negative(what, v))
    }
}
