//! Benchmark workloads, shared by the criterion harness and usable from
//! other profiling drivers.

use glaisher_core::glaisher::{
    density_report, epsilon, gf_c, gf_d, verify, EpsilonRoute, Theorem, VerifyOptions,
};
use glaisher_core::partitions::{count_table, Family, FamilySpec};
use glaisher_core::series::{pochhammer, qbinomial, Count, PochSpec, Series};
use glaisher_core::{Integer, Integers};

/// `(q;q)_∞` to precision `n`.
pub fn euler_product(n: usize) -> Series {
    let spec = PochSpec::new(Integer::from(1), 1, 1, Count::Infinite).expect("valid spec");
    pochhammer(&Integers, &spec, n)
}

pub fn series_square(s: &Series) -> Series {
    s.mul(s).expect("same precision")
}

pub fn gaussian_binomial(a: i64, b: i64) -> Series {
    qbinomial(a, b, (a * b) as usize)
}

pub fn count(family: Family, m: usize, j: Option<usize>, n_max: usize) -> Integer {
    let table = count_table(FamilySpec::new(family, m, j).expect("valid family"), n_max);
    table.counts()[n_max].clone()
}

pub fn epsilon_route(m: usize, n: usize, route: EpsilonRoute) -> Series {
    epsilon(m, n, route).expect("route valid for m")
}

pub fn c_and_d(m: usize, n: usize) -> (Series, Series) {
    (gf_c(m, n).expect("m >= 2"), gf_d(m, n).expect("m >= 2"))
}

pub fn verify_corrected(m: usize, n_max: usize) -> bool {
    verify(
        Theorem::CorrectedIdentity,
        m,
        VerifyOptions { n_max, n_sum: 1 },
    )
    .expect("valid theorem")
    .passed()
}

pub fn density_nonzero(m: usize, x: usize) -> usize {
    density_report(m, x).expect("valid input").nonzero_count
}
