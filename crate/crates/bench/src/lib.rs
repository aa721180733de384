//! Shared inputs for the benchmarks.

use eulerspline_core::numeric::rat;
use eulerspline_core::ExactRational;

/// Orders used by the exact-arithmetic benchmarks.
pub const ORDERS: [u32; 3] = [16, 64, 128];

/// Quarter-integer points across the support `[0, d]`.
pub fn quarter_grid(d: u32) -> Vec<ExactRational> {
    (0..=4 * d as i64).map(|m| rat(m, 4)).collect()
}
