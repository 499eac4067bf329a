//! Output products: the recomputed table, the FOM-vs-mass figure and the
//! bounds summary.

mod figure;
mod summary;
mod table;

use thiserror::Error;

use crate::bounds::BoundsError;

pub use figure::{emit_figure, figure_points, FigureOutput, FigurePoint, Marker, FOM_RANGE, MASS_RANGE};
pub use summary::emit_bounds_summary;
pub use table::{emit_table, TABLE_HEADER};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReportError {
    #[error("nothing to plot")]
    EmptyInput,
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

/// Three significant figures in scientific notation, `2.79e11` style.
/// Exact ties round half to even.
pub fn sig3(x: f64) -> String {
    format!("{x:.2e}")
}

/// `x` rounded to three significant figures.
pub fn round_sig3(x: f64) -> f64 {
    sig3(x).parse().expect("formatted float parses")
}
