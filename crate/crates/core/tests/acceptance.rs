//! Acceptance run. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All comparisons are exact; the only
//! tolerances are the wall-clock budgets and the density ratio floor below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use glaisher_core::glaisher::{
    density_report, epsilon, gf_c, gf_d, gf_regular, nonzero_support, p_polynomial, verify,
    window_bound, EpsilonRoute, RegularForm, Theorem, VerifyOptions,
};
use glaisher_core::partitions::{brute_force_count, count_table, Family, FamilySpec};
use glaisher_core::ring::{binomial, cyc_arith, ArithOp, CoeffRing, CycInt, Cyclotomic};
use glaisher_core::series::{inv_pochhammer, pochhammer, qbinomial, Count, PochSpec, Series};
use glaisher_core::{Integer, Integers};
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const SECOND: Duration = Duration::from_secs(1);
/// Floor on `N(x)/x` for `m = 3`, `x = 5000`.
const M3_RATIO_FLOOR: f64 = 0.97;

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table(family: Family, m: usize, j: Option<usize>, n_max: usize) -> Vec<Integer> {
    count_table(FamilySpec::new(family, m, j).unwrap(), n_max)
        .counts()
        .to_vec()
}

fn opts(n_max: usize) -> VerifyOptions {
    VerifyOptions { n_max, n_sum: 1 }
}

fn check_verify(theorem: Theorem, m: usize, o: VerifyOptions) -> Outcome {
    let r = verify(theorem, m, o).map_err(|e| e.to_string())?;
    ensure(r.passed(), || match &r.first_failure {
        Some(f) => format!("{theorem} m = {m}: n = {} lhs {} rhs {}", f.n, f.lhs, f.rhs),
        None => format!("{theorem} m = {m} failed"),
    })
}

fn glaisher_suite() -> Outcome {
    for m in 2..=6 {
        check_verify(Theorem::Glaisher, m, opts(300))?;
        let a = table(Family::A, m, None, 300);
        let b = table(Family::B, m, None, 300);
        let ga = gf_regular(m, RegularForm::AProduct, 300).unwrap();
        let gb = gf_regular(m, RegularForm::BProduct, 300).unwrap();
        ensure(a == b, || format!("enumeration A != B at m = {m}"))?;
        ensure(ga.coeffs() == a.as_slice(), || {
            format!("A product != A counts at m = {m}")
        })?;
        ensure(ga == gb, || format!("A product != B product at m = {m}"))?;
    }
    Ok(())
}

fn shift_identity_suite() -> Outcome {
    (2..=5).try_for_each(|m| check_verify(Theorem::ShiftIdentity, m, opts(200)))
}

fn corrected_identity_suite() -> Outcome {
    let n_max = 300;
    let mut failures = Vec::new();
    for m in 2..=5 {
        let routes = [
            EpsilonRoute::Definition,
            EpsilonRoute::Triangular,
            EpsilonRoute::QBinomial,
        ];
        let eps: Vec<Series> = routes
            .iter()
            .map(|&r| epsilon(m, n_max, r).unwrap())
            .collect();
        if eps[0] != eps[1] || eps[1] != eps[2] {
            failures.push(format!("m = {m}: routes disagree"));
            continue;
        }
        let c = table(Family::C, m, None, n_max);
        let d = table(Family::D, m, None, n_max);
        let m_int = Integer::from(m);
        if let Some(n) = (0..=n_max).find(|&n| &m_int * &c[n] != &d[n] + &eps[0].coeffs()[n]) {
            failures.push(format!(
                "m = {m}: n = {n}, m*C = {}, D + E = {}",
                &m_int * &c[n],
                &d[n] + &eps[0].coeffs()[n]
            ));
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn epsilon3_closed_form() -> Outcome {
    let def = epsilon(3, 500, EpsilonRoute::Definition).unwrap();
    let closed = epsilon(3, 500, EpsilonRoute::Closed3).unwrap();
    ensure(def == closed, || "definition != closed form".into())?;
    let prefix: Vec<Integer> = [2, -1, -2].into_iter().map(Integer::from).collect();
    ensure(def.coeffs()[..3] == prefix[..], || {
        format!("prefix {:?}", &def.coeffs()[..3])
    })
}

fn is_triangular_plus_one(n: usize) -> bool {
    (0..)
        .map(|k: usize| k * (k + 1) / 2 + 1)
        .take_while(|&t| t <= n)
        .any(|t| t == n)
}

fn third_order() -> Outcome {
    check_verify(Theorem::ThirdOrder, 3, opts(500))?;
    let c = table(Family::C, 3, None, 500);
    let d = table(Family::D, 3, None, 500);
    for n in 1..=500 {
        let equal = Integer::from(3) * &c[n] == d[n];
        ensure(equal != is_triangular_plus_one(n), || {
            format!("n = {n}: 3C == D is {equal}")
        })?;
    }
    Ok(())
}

fn density_suite() -> Outcome {
    let x = 5000;
    for m in 2..=6 {
        let d = density_report(m, x).unwrap();
        let s_m = p_polynomial(m)
            .unwrap()
            .coeffs()
            .iter()
            .filter(|c| !c.is_zero())
            .count() as u64;
        let per_window = (1u64 << (m - 1)) - m as u64;
        let bound = per_window * (10_000f64.sqrt() as u64 + 1) + s_m;
        ensure(bound == window_bound(m, x).unwrap(), || {
            format!("m = {m}: bound {bound}")
        })?;
        ensure(d.nonzero_count as u64 <= bound, || {
            format!("m = {m}: nonzero {} > bound {bound}", d.nonzero_count)
        })?;
    }
    let support: Vec<usize> = nonzero_support(3, x)
        .unwrap()
        .into_iter()
        .filter(|&n| n > 0)
        .collect();
    let expected: Vec<usize> = (0..)
        .map(|k: usize| k * (k + 1) / 2 + 1)
        .take_while(|&t| t < x)
        .collect();
    ensure(support == expected, || {
        "m = 3 support is not the near-triangular set".into()
    })?;
    let ratio = density_report(3, x).unwrap().ratio();
    ensure(ratio >= M3_RATIO_FLOOR, || format!("m = 3 ratio {ratio}"))
}

fn series_identities() -> Outcome {
    for m in 2..=5 {
        for n_sum in 1..=10 {
            check_verify(
                Theorem::FiniteSeries,
                m,
                VerifyOptions { n_max: 100, n_sum },
            )?;
        }
        check_verify(Theorem::InfiniteSeries, m, opts(200))?;
    }
    Ok(())
}

/// Generating function of partitions whose largest part is `≡ j (mod m)`
/// and which have no part divisible by `m`.
fn bj_series(m: usize, j: usize, n: usize) -> Series {
    let mut total = Series::zero(Integers, n);
    let mut prod = Series::one(Integers, n);
    for l in 1..=n {
        if l % m == 0 {
            continue;
        }
        prod.div_one_minus(l);
        if l % m == j {
            total = total.add(&prod.shift(l)).unwrap();
        }
    }
    total
}

fn oracle_triple() -> Outcome {
    let n = 35;
    for m in 2..=5 {
        let mut gfs = vec![
            (
                FamilySpec::new(Family::A, m, None).unwrap(),
                gf_regular(m, RegularForm::AProduct, n).unwrap(),
            ),
            (
                FamilySpec::new(Family::B, m, None).unwrap(),
                gf_regular(m, RegularForm::BProduct, n).unwrap(),
            ),
            (
                FamilySpec::new(Family::C, m, None).unwrap(),
                gf_c(m, n).unwrap(),
            ),
            (
                FamilySpec::new(Family::D, m, None).unwrap(),
                gf_d(m, n).unwrap(),
            ),
        ];
        gfs.extend((1..m).map(|j| {
            (
                FamilySpec::new(Family::Bj, m, Some(j)).unwrap(),
                bj_series(m, j, n),
            )
        }));
        for (spec, gf) in gfs {
            let dp = count_table(spec, n);
            for k in 0..=n {
                let brute = brute_force_count(spec, k).unwrap();
                ensure(
                    &brute == dp.get(k).unwrap() && brute == gf.coeffs()[k],
                    || {
                        format!(
                            "{spec} at n = {k}: brute {brute}, dp {}, gf {}",
                            dp.get(k).unwrap(),
                            gf.coeffs()[k]
                        )
                    },
                )?;
            }
        }
    }
    Ok(())
}

fn epsilon2_constant() -> Outcome {
    let e = epsilon(2, 2000, EpsilonRoute::Triangular).unwrap();
    ensure(e == Series::one(Integers, 2000), || "eps_2 != 1".into())?;
    let c = table(Family::C, 2, None, 2000);
    let d = table(Family::D, 2, None, 2000);
    match (1..=2000).find(|&n| Integer::from(2) * &c[n] != d[n]) {
        Some(n) => Err(format!(
            "epsilon_2 = 1 holds, but 2*C_2({n}) = {} != D_2({n}) = {}",
            Integer::from(2) * &c[n],
            d[n]
        )),
        None => Ok(()),
    }
}

fn run_props<S: Strategy>(
    strategy: S,
    cases: u32,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Outcome {
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(
            proptest::test_runner::RngAlgorithm::ChaCha,
        ),
    );
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn cyc(m: usize, coords: &[i64]) -> CycInt {
    Cyclotomic::new(m)
        .unwrap()
        .element(coords.iter().map(|&c| Integer::from(c)).collect())
}

fn pentagonal(n_max: usize) -> Vec<i64> {
    let mut out = vec![0i64; n_max + 1];
    out[0] = 1;
    for k in 1i64.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let lo = (k * (3 * k - 1) / 2) as usize;
        if lo > n_max {
            break;
        }
        out[lo] += sign;
        if let Some(v) = out.get_mut((k * (3 * k + 1) / 2) as usize) {
            *v += sign;
        }
    }
    out
}

fn property_suites() -> Outcome {
    let triple = (2usize..=12).prop_flat_map(|m| {
        let v = || prop::collection::vec(-50i64..50, 0..=m);
        (Just(m), v(), v(), v())
    });
    run_props(triple, 256, |(m, a, b, c)| {
        let (a, b, c) = (cyc(m, &a), cyc(m, &b), cyc(m, &c));
        let op = |x: &CycInt, y: &CycInt, o| cyc_arith(x, y, o).unwrap();
        use ArithOp::*;
        prop_assert_eq!(op(&op(&a, &b, Mul), &c, Mul), op(&a, &op(&b, &c, Mul), Mul));
        prop_assert_eq!(op(&a, &b, Mul), op(&b, &a, Mul));
        prop_assert_eq!(
            op(&a, &op(&b, &c, Add), Mul),
            op(&op(&a, &b, Mul), &op(&a, &c, Mul), Add)
        );
        prop_assert_eq!(op(&op(&a, &b, Sub), &b, Add), a);
        Ok(())
    })?;
    run_props((2usize..=12, -40i64..40), 128, |(m, e)| {
        let ring = Cyclotomic::new(m).unwrap();
        let z = ring.root_power(e);
        let acc = (0..m).fold(ring.one(), |acc, _| ring.mul(&acc, &z));
        prop_assert_eq!(acc, ring.one());
        Ok(())
    })?;
    let counts = prop_oneof![Just(Count::Infinite), (0usize..30).prop_map(Count::Finite)];
    run_props((1usize..12, 1usize..8, counts), 32, |(e, s, count)| {
        let spec = PochSpec::new(Integer::one(), e, s, count).unwrap();
        let p = pochhammer(&Integers, &spec, 64);
        prop_assert_eq!(
            p.mul(&inv_pochhammer(e, s, count, 64).unwrap()).unwrap(),
            Series::one(Integers, 64)
        );
        Ok(())
    })?;
    for a in 0..=8i64 {
        for b in 0..=8i64 {
            ensure(qbinomial(a, b, 80) == qbinomial(b, a, 80), || {
                format!("symmetry ({a}, {b})")
            })?;
            let total: Integer = qbinomial(a, b, (a * b) as usize).coeffs().iter().sum();
            ensure(total == binomial((a + b) as u64, a as u64), || {
                format!("q = 1 at ({a}, {b})")
            })?;
        }
    }
    let euler = PochSpec::new(Integer::one(), 1, 1, Count::Infinite).unwrap();
    ensure(
        pochhammer(&Integers, &euler, 100).to_i64s() == Some(pentagonal(100)),
        || "pentagonal sign pattern".into(),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "Glaisher A = B, m 2..=6, n <= 300, counts and products",
            30 * SECOND,
            glaisher_suite,
        ),
        (
            "B^(m-1)(n) = C(n+1), m 2..=5, n <= 200",
            30 * SECOND,
            shift_identity_suite,
        ),
        (
            "m*C = D + E on three epsilon routes, m 2..=5, n <= 300",
            120 * SECOND,
            corrected_identity_suite,
        ),
        (
            "epsilon_3 definition = closed form to 500, prefix 2, -1, -2",
            60 * SECOND,
            epsilon3_closed_form,
        ),
        (
            "3*C_3 = D_3 exactly off k(k+1)/2 + 1, n <= 500",
            30 * SECOND,
            third_order,
        ),
        (
            "density window bound at x = 5000, m = 3 support and ratio",
            60 * SECOND,
            density_suite,
        ),
        (
            "finite and infinite Glaisher series, m 2..=5",
            60 * SECOND,
            series_identities,
        ),
        (
            "brute force = DP = generating function, m 2..=5, n <= 35",
            120 * SECOND,
            oracle_triple,
        ),
        (
            "epsilon_2 = 1 to precision 2000",
            30 * SECOND,
            epsilon2_constant,
        ),
        (
            "ring and series property suites",
            30 * SECOND,
            property_suites,
        ),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= *budget, || {
                format!("took {elapsed:.1?}, budget {budget:?}")
            })
        });
        match outcome {
            Ok(()) => println!("[PASS] {:>2}. {name} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2}. {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
