//! Upper bounds on spacetime diffusion from precision force and
//! acceleration experiments.
//!
//! The figure of merit `FOM = S_a·N` (acceleration-noise power spectral
//! density times the number of nuclei in the test mass) sets the upper
//! bound on the diffusion parameter in both surviving classical-quantum
//! gravity models. This crate computes it from raw experiment records,
//! classifies thermal limits, maps FOM to the model bounds and renders the
//! reference table and figure.

pub mod bounds;
pub mod catalog;
pub mod chem;
pub mod fom;
pub mod quantity;
pub mod report;

pub use bounds::{anchored_bound, fom_threshold, orders_of_improvement, si_bound, BoundAnchor, BoundReport, ModelId};
pub use catalog::{
    embedded_table1, parse_records, rank, select_for_figure, Catalog, Category, ExperimentRecord, RankFilter,
};
pub use chem::{molar_mass, nuclei_count, nuclei_per_formula, parse_formula, Formula, MaterialSpec, PeriodicTable};
pub use fom::{evaluate_catalog, evaluate_record, FomResult};
pub use quantity::{load_constants, Constants, Quantity, Unit};
