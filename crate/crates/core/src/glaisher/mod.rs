//! Generating functions, the correction series `ε_m`, identity checks and
//! the exceptional-set density scan.

mod density;
mod epsilon;
mod gf;
mod verify;

pub use density::{density_report, nonzero_support, window_bound, DensityStats};
pub use epsilon::{epsilon, p_polynomial, EpsilonRoute};
pub use gf::{gf_bj_lhs, gf_c, gf_d, gf_regular, glaisher_finite_product, RegularForm};
pub use verify::{
    is_triangular_plus_one, verify, Failure, IdentityReport, Status, Theorem, VerifyOptions,
};

use crate::error::{Error, Result};

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        Err(Error::Domain(format!("m must be at least 2, got {m}")))
    } else {
        Ok(())
    }
}
