//! Exact arithmetic for Glaisher-type partition identities: big-integer and
//! cyclotomic scalars, truncated power series, partition counters, and
//! checks of the associated q-series identities.

pub mod error;
pub mod glaisher;
pub mod partitions;
mod poly;
pub mod ring;
pub mod series;

pub use error::{Error, Result};
pub use glaisher::{
    density_report, epsilon, p_polynomial, verify, DensityStats, EpsilonRoute, IdentityReport,
    Status, Theorem, VerifyOptions,
};
pub use partitions::{count_table, CountTable, Family, FamilySpec};
pub use ring::{CoeffRing, CycInt, CycPoly, Cyclotomic, Integer, Integers};
pub use series::{Count, PochSpec, Series};
