use glaisher_core::glaisher::{gf_bj_lhs, gf_c, gf_d, gf_regular, RegularForm};
use glaisher_core::partitions::{brute_force_count, count_table, Family, FamilySpec};
use glaisher_core::series::Count;
use glaisher_core::Integer;

fn specs(m: usize) -> Vec<FamilySpec> {
    let mut out: Vec<FamilySpec> = [Family::A, Family::B, Family::C, Family::D]
        .into_iter()
        .map(|f| FamilySpec::new(f, m, None).unwrap())
        .collect();
    out.extend((1..m).map(|j| FamilySpec::new(Family::Bj, m, Some(j)).unwrap()));
    out
}

fn counts(f: Family, m: usize, j: Option<usize>, n_max: usize) -> Vec<Integer> {
    count_table(FamilySpec::new(f, m, j).unwrap(), n_max)
        .counts()
        .to_vec()
}

#[test]
fn brute_force_agrees_with_dp() {
    for m in 2..=6 {
        for spec in specs(m) {
            let table = count_table(spec, 35);
            for n in 0..=35 {
                assert_eq!(
                    &brute_force_count(spec, n).unwrap(),
                    table.get(n).unwrap(),
                    "{spec} at n = {n}"
                );
            }
        }
    }
}

#[test]
fn glaisher_counts() {
    for m in 2..=6 {
        assert_eq!(
            counts(Family::A, m, None, 300),
            counts(Family::B, m, None, 300),
            "m = {m}"
        );
    }
}

#[test]
fn regular_partitions_split_by_largest_residue() {
    for m in 2..=6 {
        let b = counts(Family::B, m, None, 300);
        let parts: Vec<_> = (1..m)
            .map(|j| counts(Family::Bj, m, Some(j), 300))
            .collect();
        assert_eq!(
            parts.iter().map(|p| &p[0]).sum::<Integer>(),
            Integer::from(0)
        );
        for n in 1..=300 {
            let sum: Integer = parts.iter().map(|p| &p[n]).sum();
            assert_eq!(sum, b[n], "m = {m}, n = {n}");
        }
    }
}

#[test]
fn shift_identity() {
    for m in 2..=5 {
        let bj = counts(Family::Bj, m, Some(m - 1), 200);
        let c = counts(Family::C, m, None, 201);
        assert_eq!(bj[..], c[1..], "m = {m}");
    }
}

#[test]
fn d_dominates_a() {
    for m in 2..=6 {
        let a = counts(Family::A, m, None, 150);
        let d = counts(Family::D, m, None, 150);
        for n in 1..=150 {
            assert!(d[n] >= a[n] && a[n] >= Integer::from(0), "m = {m}, n = {n}");
        }
    }
}

#[test]
fn generating_functions_match_dp() {
    for m in 2..=5 {
        let n = 120;
        assert_eq!(
            gf_c(m, n).unwrap().coeffs(),
            counts(Family::C, m, None, n).as_slice()
        );
        assert_eq!(
            gf_d(m, n).unwrap().coeffs(),
            counts(Family::D, m, None, n).as_slice()
        );
        let b = counts(Family::B, m, None, n);
        assert_eq!(
            gf_regular(m, RegularForm::BProduct, n).unwrap().coeffs(),
            b.as_slice()
        );
        assert_eq!(
            gf_regular(m, RegularForm::AProduct, n).unwrap().coeffs(),
            counts(Family::A, m, None, n).as_slice()
        );
        assert_eq!(
            gf_bj_lhs(m, Count::Infinite, n).unwrap().coeffs(),
            b.as_slice()
        );
    }
}

#[test]
fn large_counts_exceed_machine_words() {
    let t = counts(Family::B, 10, None, 1000);
    assert!(t[1000] > Integer::from(u64::MAX));
    assert_eq!(t, counts(Family::A, 10, None, 1000));
}
