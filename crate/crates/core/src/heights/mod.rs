//! Weil and canonical heights over ℚ, preperiodicity certificates, and
//! numerical checks of norm growth along orbits.
//!
//! Heights are natural-log valued. Logarithms of big integers are taken
//! from their leading 64 bits, which keeps the rounding error far below
//! every tolerance used here.

mod canonical;
mod growth;

pub use canonical::{
    canonical_height, height_constant, is_preperiodic, weil_height, HeightBounds, HeightEstimate, Preperiodicity,
};
pub use growth::{archimedean_proximity, norm_growth_report, prime_to_s_norm, NormGrowthReport, NormGrowthRow};
