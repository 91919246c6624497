//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; every comparison is exact unless a tolerance is
//! stated inline.

use num_bigint::BigInt;
use zeonperm::bipoly::BiPoly;
use zeonperm::charpoly::charpoly;
use zeonperm::comb::rat;
use zeonperm::derange;
use zeonperm::exppoly;
use zeonperm::matrix::ExactMatrix;
use zeonperm::permanent::zeon_power_perm;
use zeonperm::unipoly::UniPoly;
use zeonperm::verify::run_suite;

const SEED: u64 = 0x5EED;

fn gate(criterion: &str, suite: &str) {
    let results = run_suite(suite, SEED).expect("suite exists");
    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("{}: {}", r.name, r.detail))
        .collect();
    if failed.is_empty() {
        println!("criterion {criterion}: PASS ({} checks)", results.len());
    } else {
        println!("criterion {criterion}: FAIL ({})", failed.join("; "));
        panic!("criterion {criterion} failed: {}", failed.join("; "));
    }
}

#[test]
fn criterion_01_reference_triangles() {
    // independently frozen spot values
    assert_eq!(
        derange::derangement_number(5, 2).unwrap(),
        BigInt::from(64)
    );
    assert_eq!(
        derange::derangement_number(9, 0).unwrap(),
        BigInt::from(133496)
    );
    assert_eq!(
        derange::arrangement_number(5, 2).unwrap(),
        BigInt::from(212)
    );
    assert_eq!(
        derange::arrangement_number(9, 0).unwrap(),
        BigInt::from(986410)
    );

    // the CSV fixtures use the square layout: 10 zero-padded rows
    for (fixture, triangle) in [
        (
            include_str!("data/derangement_triangle.csv"),
            derange::derangement_triangle(9),
        ),
        (
            include_str!("data/arrangement_triangle.csv"),
            derange::arrangement_triangle(9),
        ),
    ] {
        for (n, line) in fixture.trim().lines().enumerate() {
            let cells: Vec<&str> = line.trim().split(',').collect();
            assert_eq!(cells.len(), 10);
            for (ell, cell) in cells.iter().enumerate() {
                let expected: BigInt = cell.parse().unwrap();
                let got = if ell <= n {
                    triangle[n][ell].clone()
                } else {
                    BigInt::from(0)
                };
                assert_eq!(got, expected, "triangle entry n={n} ell={ell}");
            }
        }
    }
    gate("01 reference-triangles", "triangles");
}

#[test]
fn criterion_02_h_table() {
    assert_eq!(
        exppoly::h_poly(3, 2).to_string(),
        "2*s^3*t^2+18*s^2*t^3+72*s*t^4+120*t^5"
    );
    gate("02 h-table", "hpoly");
}

#[test]
fn criterion_03_johnson_example() {
    gate("03 johnson-example", "johnson-example");
}

#[test]
fn criterion_04_worked_charpolys() {
    // direct check against the known factorizations
    let mut j_minus_i = ExactMatrix::all_ones(5);
    let mut i_plus_j = ExactMatrix::all_ones(5);
    for d in 0..5 {
        j_minus_i.set(d, d, BiPoly::zero());
        i_plus_j.set(d, d, BiPoly::constant(2));
    }
    let cp = charpoly(&zeon_power_perm(&j_minus_i, 3).unwrap()).unwrap();
    let expect = UniPoly::from_roots(&[
        (BigInt::from(0), 5),
        (BigInt::from(32), 1),
        (BigInt::from(-3), 4),
    ]);
    assert_eq!(cp, expect);
    let cp = charpoly(&zeon_power_perm(&i_plus_j, 3).unwrap()).unwrap();
    let expect = UniPoly::from_roots(&[
        (BigInt::from(106), 1),
        (BigInt::from(11), 4),
        (BigInt::from(2), 5),
    ]);
    assert_eq!(cp, expect);
    gate("04 worked-charpolys", "derangement-spectra");
}

#[test]
fn criterion_05_oracle_equivalence() {
    gate("05 oracle-equivalence", "oracle-equivalence");
}

#[test]
fn criterion_06_subgraph_expansion() {
    assert_eq!(
        zeonperm::subgraphs::enumerate_elementary(3, 1).unwrap().len(),
        5
    );
    gate("06 subgraph-expansion", "subgraphs");
}

#[test]
fn criterion_07_group_identities() {
    gate("07 group-identities", "groups");
}

#[test]
fn criterion_08_identity_suite() {
    gate("08 identity-suite", "identities");
}

#[test]
fn criterion_09_asymptotics() {
    // tolerances pinned here as well as inside the suite:
    // 1e-12 against e at n=20, 1e-9 against sqrt(e)
    let r = exppoly::q_asymptotic_ratio(20, &rat(1, 1), &rat(1, 1), &rat(0, 1)).unwrap();
    assert!((r - std::f64::consts::E).abs() < 1e-12);
    let r = exppoly::q_asymptotic_ratio(20, &rat(1, 1), &rat(1, 1), &rat(1, 1)).unwrap();
    assert!((r - 0.5f64.exp()).abs() < 1e-9);
    gate("09 asymptotics", "asymptotics");
}

#[test]
fn criterion_10_enumeration_oracles() {
    let listed = derange::deranged_permutations(3, 1).unwrap();
    let strings: Vec<String> = listed
        .iter()
        .map(|p| p.iter().map(ToString::to_string).collect())
        .collect();
    assert_eq!(strings, vec!["213", "231", "312"]);
    assert_eq!(
        derange::arrangements_containing(3, 2).unwrap().len(),
        8
    );
    gate("10 enumeration-oracles", "enumeration");
}
