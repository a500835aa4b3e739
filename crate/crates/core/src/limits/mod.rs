//! Finite-level invariants and their limits.

pub mod estimate;
pub mod level;
pub mod table;

pub use estimate::{
    extrapolate, linear_fit, parse_rational, rational_string, rational_to_f64, EstimateValue,
    InvariantEstimate, LevelSample, Model, Rational,
};
pub use level::{
    density_diagnostic, density_level, density_numerator, f_limbus_estimate, f_limbus_level,
    f_threshold_estimate, f_threshold_level, graded_density_level, h_estimate, h_level, h_levels,
    hilbert_kunz, hilbert_kunz_level, hilbert_samuel, hilbert_samuel_lengths, stable_point_level,
    DensityDiagnostic, LimbusLevel, StablePoint,
};
pub use table::{length_table, raw_length, raw_lengths, LengthTable, SharedTable};
