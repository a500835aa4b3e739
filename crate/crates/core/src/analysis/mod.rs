//! Second-order structure of h: Boij ratios, ℋ_n, Frobenius–Poincaré
//! values, scaling identities, asymptotes and inequality checks.

pub mod asymptotes;
pub mod boij;
pub mod identities;
pub mod inequalities;
pub mod poincare;

pub use asymptotes::{asymptote_check, AsymptoteFit, AsymptoteReport};
pub use boij::{
    boij_ratios, convex_functional, slice_lengths, BoijReport, BoijRow, ConvexPoint,
    ConvexReport, ConvexityContext,
};
pub use identities::{adjoin_variable_check, scaling_check, AdjoinReport, AdjoinRow, ScalingReport, ScalingRow};
pub use inequalities::{inequality_report, InequalityCheck};
pub use poincare::{dvr_limit, frobenius_poincare_integral, frobenius_poincare_level, ComplexPoint};
