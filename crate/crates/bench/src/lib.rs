//! Benchmark fixtures.

use rsq::Family;

/// The default desk ranks.
pub const DESK: &[(Family, usize)] = &[(Family::A, 2), (Family::B, 2), (Family::C, 2), (Family::D, 3)];
