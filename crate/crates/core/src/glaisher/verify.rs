//! Machine checks of the partition and q-series identities. Each check
//! evaluates both sides along independent paths and reports the lowest
//! failing index.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{count_table, Family, FamilySpec};
use crate::ring::Integer;
use crate::series::{Count, Series};

use super::check_m;
use super::epsilon::{epsilon, triangular, EpsilonRoute};
use super::gf::{gf_bj_lhs, gf_regular, glaisher_finite_product, RegularForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `A_m(n) = B_m(n)`.
    Glaisher,
    /// `B_m(n) = Σ_j B_m^(j)(n)`, `n >= 1`.
    Decomposition,
    /// `B_m^(m-1)(n) = C_m(n+1)`.
    ShiftIdentity,
    /// `m·C_m(n) = D_m(n) + E_m(n)`.
    CorrectedIdentity,
    /// Closed form of `ε_3`.
    Epsilon3Closed,
    /// `3·C_3(n) = D_3(n)` exactly off `{k(k+1)/2 + 1}`.
    ThirdOrder,
    /// The four-way chain through `C_m(n+1)` and `(D_m + E_m)(n+1)/m`.
    Chain,
    /// Finite series = `(q^m;q^m)_N / (q;q)_{mN}`.
    FiniteSeries,
    /// Infinite series = `(q^m;q^m)_∞ / (q;q)_∞`.
    InfiniteSeries,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::Glaisher,
        Theorem::Decomposition,
        Theorem::ShiftIdentity,
        Theorem::CorrectedIdentity,
        Theorem::Epsilon3Closed,
        Theorem::ThirdOrder,
        Theorem::Chain,
        Theorem::FiniteSeries,
        Theorem::InfiniteSeries,
    ];

    /// Stable selector string.
    pub fn id(self) -> &'static str {
        match self {
            Theorem::Glaisher => "T1.2",
            Theorem::Decomposition => "E1.4",
            Theorem::ShiftIdentity => "T1.3",
            Theorem::CorrectedIdentity => "T1.4",
            Theorem::Epsilon3Closed => "T1.5",
            Theorem::ThirdOrder => "T1.6",
            Theorem::Chain => "T1.8",
            Theorem::FiniteSeries => "T1.9",
            Theorem::InfiniteSeries => "C1.10",
        }
    }

    pub fn requires_m3(self) -> bool {
        matches!(self, Theorem::Epsilon3Closed | Theorem::ThirdOrder)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Domain(format!("unknown theorem {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub theorem: Theorem,
    pub m: usize,
    pub range: (usize, usize),
    pub status: Status,
    pub first_failure: Option<Failure>,
    pub elapsed: Duration,
    /// Evaluation paths compared, e.g. `"epsilon:definition"`.
    pub routes: Vec<String>,
    /// Observations that do not affect the verdict.
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Upper end of the index range, or the series precision for T1.9/C1.10.
    pub n_max: usize,
    /// Summation limit for T1.9.
    pub n_sum: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 200,
            n_sum: 10,
        }
    }
}

/// Accumulates the lowest failure over several comparisons.
#[derive(Default)]
struct Outcome {
    first: Option<Failure>,
    routes: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn record(&mut self, n: usize, lhs: impl fmt::Display, rhs: impl fmt::Display) {
        if self.first.as_ref().is_none_or(|f| n < f.n) {
            self.first = Some(Failure {
                n,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Compare two sequences over `lo..=hi` and record the first difference.
    fn compare(
        &mut self,
        lo: usize,
        hi: usize,
        lhs: impl Fn(usize) -> Integer,
        rhs: impl Fn(usize) -> Integer,
    ) {
        for n in lo..=hi {
            let (l, r) = (lhs(n), rhs(n));
            if l != r {
                self.record(n, l, r);
                return;
            }
        }
    }

    fn route(&mut self, r: impl Into<String>) {
        self.routes.push(r.into());
    }
}

fn table(family: Family, m: usize, j: Option<usize>, n_max: usize) -> Vec<Integer> {
    let spec = FamilySpec::new(family, m, j).expect("m validated by caller");
    count_table(spec, n_max).counts().to_vec()
}

fn coeff(s: &Series, n: usize) -> Integer {
    s.coeffs()[n].clone()
}

/// Whether `n = k(k+1)/2 + 1` for some `k >= 0`.
pub fn is_triangular_plus_one(n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let t = n - 1;
    let mut k = ((2.0 * t as f64).sqrt()) as usize;
    while triangular(k) > t {
        k -= 1;
    }
    while triangular(k + 1) <= t {
        k += 1;
    }
    triangular(k) == t
}

/// Epsilon routes compared by the T1.4 check. The identity route is left
/// out since it is `m·C - D` by construction.
fn independent_routes(m: usize) -> Vec<EpsilonRoute> {
    [
        EpsilonRoute::Definition,
        EpsilonRoute::Triangular,
        EpsilonRoute::QBinomial,
        EpsilonRoute::Closed3,
    ]
    .into_iter()
    .filter(|r| r.valid_for(m))
    .collect()
}

/// Each valid independent route at the given precision, computed in parallel.
fn epsilon_by_routes(m: usize, precision: usize) -> Result<Vec<(EpsilonRoute, Series)>> {
    use rayon::prelude::*;
    independent_routes(m)
        .into_par_iter()
        .map(|r| epsilon(m, precision, r).map(|s| (r, s)))
        .collect()
}

pub fn verify(theorem: Theorem, m: usize, opts: VerifyOptions) -> Result<IdentityReport> {
    check_m(m)?;
    if theorem.requires_m3() && m != 3 {
        return Err(Error::Domain(format!(
            "{theorem} is stated for m = 3 only, got m = {m}"
        )));
    }
    let start = Instant::now();
    let hi = opts.n_max;
    let mut out = Outcome::default();
    let lo = match theorem {
        Theorem::Decomposition | Theorem::Chain | Theorem::ThirdOrder => 1.min(hi),
        _ => 0,
    };

    match theorem {
        Theorem::Glaisher => {
            let a = table(Family::A, m, None, hi);
            let b = table(Family::B, m, None, hi);
            out.route("dp:A_m");
            out.route("dp:B_m");
            out.compare(0, hi, |n| a[n].clone(), |n| b[n].clone());
            let ga = gf_regular(m, RegularForm::AProduct, hi)?;
            let gb = gf_regular(m, RegularForm::BProduct, hi)?;
            out.route("series:A_product");
            out.route("series:B_product");
            out.compare(0, hi, |n| coeff(&ga, n), |n| coeff(&gb, n));
        }
        Theorem::Decomposition => {
            let b = table(Family::B, m, None, hi);
            let parts: Vec<Vec<Integer>> =
                (1..m).map(|j| table(Family::Bj, m, Some(j), hi)).collect();
            out.route("dp:B_m");
            out.route("dp:sum_j B_m^(j)");
            out.notes
                .push("n = 0 excluded: B_m(0) = 1 while every B_m^(j)(0) = 0".into());
            out.compare(
                lo,
                hi,
                |n| parts.iter().map(|p| &p[n]).sum(),
                |n| b[n].clone(),
            );
        }
        Theorem::ShiftIdentity => {
            let bj = table(Family::Bj, m, Some(m - 1), hi);
            let c = table(Family::C, m, None, hi + 1);
            out.route("dp:B_m^(m-1)(n)");
            out.route("dp:C_m(n+1)");
            out.compare(0, hi, |n| bj[n].clone(), |n| c[n + 1].clone());
        }
        Theorem::CorrectedIdentity => {
            let c = table(Family::C, m, None, hi);
            let d = table(Family::D, m, None, hi);
            let eps = epsilon_by_routes(m, hi)?;
            let (base_route, base) = &eps[0];
            for (route, s) in &eps {
                out.route(format!("epsilon:{route}"));
                if route != base_route {
                    for n in 0..=hi {
                        if s.coeffs()[n] != base.coeffs()[n] {
                            out.record(
                                n,
                                format!("{base_route}:{}", base.coeffs()[n]),
                                format!("{route}:{}", s.coeffs()[n]),
                            );
                            break;
                        }
                    }
                }
            }
            let mi = Integer::from(m);
            let lhs = |n: usize| &mi * &c[n];
            let rhs = |n: usize| &d[n] + &base.coeffs()[n];
            for n in 0..=hi.min(1) {
                let holds = lhs(n) == rhs(n);
                out.notes.push(format!(
                    "n = {n}: m*C = {}, D + E = {} ({})",
                    lhs(n),
                    rhs(n),
                    if holds { "holds" } else { "fails" }
                ));
            }
            out.compare(0, hi, lhs, rhs);
        }
        Theorem::Epsilon3Closed => {
            let def = epsilon(3, hi, EpsilonRoute::Definition)?;
            let closed = epsilon(3, hi, EpsilonRoute::Closed3)?;
            out.route("epsilon:definition");
            out.route("epsilon:closed3");
            out.compare(0, hi, |n| coeff(&def, n), |n| coeff(&closed, n));
        }
        Theorem::ThirdOrder => {
            let c = table(Family::C, 3, None, hi);
            let d = table(Family::D, 3, None, hi);
            out.route("dp:3*C_3");
            out.route("dp:D_3");
            let mut excluded = 0;
            for n in lo..=hi {
                let lhs = Integer::from(3) * &c[n];
                let holds = lhs == d[n];
                let exceptional = is_triangular_plus_one(n);
                excluded += exceptional as usize;
                if holds == exceptional {
                    out.record(n, lhs, &d[n]);
                    break;
                }
            }
            out.notes.push(format!(
                "{excluded} exceptional indices k(k+1)/2 + 1 in range, inequality required there"
            ));
        }
        Theorem::Chain => {
            let a = table(Family::A, m, None, hi);
            let b = table(Family::B, m, None, hi);
            let c = table(Family::C, m, None, hi + 1);
            let d = table(Family::D, m, None, hi + 1);
            let e = epsilon(m, hi + 1, EpsilonRoute::Triangular)?;
            let partial: Vec<Vec<Integer>> = (1..m.saturating_sub(1))
                .map(|k| table(Family::Bj, m, Some(k), hi))
                .collect();
            out.route("dp:A_m");
            out.route("dp:B_m");
            out.route("dp:sum_k B_m^(k) + C_m(n+1)");
            out.route("dp+epsilon:sum_k B_m^(k) + (D_m + E_m)(n+1)/m");
            let mi = Integer::from(m);
            for n in lo..=hi {
                let head: Integer = partial.iter().map(|p| &p[n]).sum();
                let via_c = &head + &c[n + 1];
                let de = &d[n + 1] + &e.coeffs()[n + 1];
                let divisible = (&de % &mi).is_zero();
                let via_d = &head + &de / &mi;
                if a[n] != b[n] {
                    out.record(n, &a[n], &b[n]);
                    break;
                }
                if b[n] != via_c {
                    out.record(n, &b[n], via_c);
                    break;
                }
                if !divisible || via_c != via_d {
                    out.record(n, via_c, format!("{head} + ({de})/{m}"));
                    break;
                }
            }
        }
        Theorem::FiniteSeries => {
            let lhs = gf_bj_lhs(m, Count::Finite(opts.n_sum), hi)?;
            let rhs = glaisher_finite_product(m, opts.n_sum, hi)?;
            out.route(format!("series:lhs(N_sum={})", opts.n_sum));
            out.route(format!("product:(q^m;q^m)_{0}/(q;q)_{{m*{0}}}", opts.n_sum));
            out.compare(0, hi, |n| coeff(&lhs, n), |n| coeff(&rhs, n));
        }
        Theorem::InfiniteSeries => {
            let lhs = gf_bj_lhs(m, Count::Infinite, hi)?;
            let rhs = gf_regular(m, RegularForm::BProduct, hi)?;
            out.route("series:lhs(N_sum=inf)");
            out.route("product:B_product");
            out.compare(0, hi, |n| coeff(&lhs, n), |n| coeff(&rhs, n));
        }
    }

    let status = if out.first.is_some() {
        Status::Fail
    } else {
        Status::Pass
    };
    Ok(IdentityReport {
        theorem,
        m,
        range: (lo, hi),
        status,
        first_failure: out.first,
        elapsed: start.elapsed(),
        routes: out.routes,
        notes: out.notes,
    })
}
