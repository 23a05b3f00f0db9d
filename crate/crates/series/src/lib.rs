//! Exact truncated-series engine for the lattice path toolkit.
//!
//! Provides Puiseux-capable truncated series over exact coefficient rings,
//! the kernel polynomials of the three weighted step sets with their small
//! branches, residue-based constant-term extraction, a catalogue of named
//! generating functions, and functional-equation verification against the
//! dynamic-programming tables.

mod bivariate;
mod catalogue;
mod coeff;
mod combine;
mod kernel;
mod laurent;
mod residue;
mod series;
mod verify;

pub use bivariate::BivariateSeries;
pub use catalogue::{expand_named_gf, CatalogueError, GfExpansion, CATALOGUE_NAMES};
pub use catalogue::{discriminant_p, motzkin_q_r};
pub use coeff::{Coeff, CycRational};
pub use combine::{bisection_combine, bisection_split, CombineMode};
pub use kernel::{
    evaluate_kernel, hensel_symmetric_functions, kernel_dy, rationalize, solve_kernel_roots,
    symmetric_functions_small_roots, KernelId, KernelRoots, KernelTerms,
};
pub use laurent::LaurentPoly;
pub use residue::residue_extract_constant_term;
pub use series::{SeriesError, TruncatedSeries};
pub use verify::{
    class_series_from_counts, kernel_for_family, section_series, verify_kernel_equation,
    KernelEquationReport, SectionSeries,
};
