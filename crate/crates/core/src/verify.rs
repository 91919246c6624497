//! Named verification suites runnable from the CLI (`verify --suite ...`)
//! and from the acceptance tests. Every check compares two independently
//! computed values exactly; the seeded suites draw their random inputs
//! from a SplitMix64 stream so runs are reproducible.

use num_bigint::BigInt;
use num_traits::One;

use crate::bipoly::BiPoly;
use crate::charpoly::charpoly;
use crate::comb::rat;
use crate::derange::{self, CountKind};
use crate::error::{Error, Result};
use crate::exppoly;
use crate::genfunc::expgf_check;
use crate::golden;
use crate::groups::{self, Permutation};
use crate::johnson;
use crate::matrix::ExactMatrix;
use crate::permanent::{per_via_traces, permanent, zeon_power_perm, zeon_power_sum};
use crate::rng::SplitMix64;
use crate::subgraphs;
use crate::unipoly::UniPoly;
use crate::zeon::induced_matrix_zeon;

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn ok(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }

    fn from_eq<T: PartialEq + std::fmt::Debug>(
        name: impl Into<String>,
        got: T,
        want: T,
    ) -> Self {
        if got == want {
            Self::ok(name, "exact match")
        } else {
            Self::fail(name, format!("got {got:?}, want {want:?}"))
        }
    }
}

pub const SUITES: &[&str] = &[
    "triangles",
    "hpoly",
    "johnson-example",
    "derangement-spectra",
    "oracle-equivalence",
    "subgraphs",
    "groups",
    "identities",
    "asymptotics",
    "enumeration",
];

/// Run one named suite ("all" runs everything) with the given seed for
/// the randomized suites.
pub fn run_suite(name: &str, seed: u64) -> Result<Vec<CheckResult>> {
    match name {
        "triangles" => Ok(triangles()),
        "hpoly" => Ok(hpoly()),
        "johnson-example" => johnson_example(),
        "derangement-spectra" => derangement_spectra(),
        "oracle-equivalence" => oracle_equivalence(seed),
        "subgraphs" => subgraph_suite(),
        "groups" => group_suite(seed),
        "identities" => identity_suite(),
        "asymptotics" => asymptotics(),
        "enumeration" => enumeration_suite(),
        "all" => {
            let mut all = Vec::new();
            for suite in SUITES {
                all.extend(run_suite(suite, seed)?);
            }
            Ok(all)
        }
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// Criterion: both reference triangles reproduced exactly for n <= 9.
fn triangles() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let d = derange::derangement_triangle(9);
    let a = derange::arrangement_triangle(9);
    let mut d_ok = true;
    let mut a_ok = true;
    for n in 0..=9usize {
        for ell in 0..=n {
            let dg = BigInt::from(golden::D_TRIANGLE[n][ell]);
            let ag = BigInt::from(golden::A_TRIANGLE[n][ell]);
            d_ok &= d[n][ell] == dg
                && derange::derangement_number(n, ell).map(|v| v == dg).unwrap_or(false);
            a_ok &= a[n][ell] == ag
                && derange::arrangement_number(n, ell).map(|v| v == ag).unwrap_or(false);
        }
    }
    out.push(if d_ok {
        CheckResult::ok("triangles/derangement", "rows 0..=9 match the reference table")
    } else {
        CheckResult::fail("triangles/derangement", "mismatch against reference table")
    });
    out.push(if a_ok {
        CheckResult::ok("triangles/arrangement", "rows 0..=9 match the reference table")
    } else {
        CheckResult::fail("triangles/arrangement", "mismatch against reference table")
    });
    out.push(CheckResult::from_eq(
        "triangles/spot-values",
        (
            derange::derangement_number(5, 2).unwrap(),
            derange::derangement_number(9, 0).unwrap(),
            derange::arrangement_number(5, 2).unwrap(),
            derange::arrangement_number(9, 0).unwrap(),
        ),
        (
            BigInt::from(64),
            BigInt::from(133496),
            BigInt::from(212),
            BigInt::from(986410),
        ),
    ));
    out
}

/// Criterion: the h-table for n, m <= 4 as canonical strings.
fn hpoly() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut ok = true;
    let mut first_bad = String::new();
    for n in 0..=4usize {
        for m in 0..=4usize {
            let got = exppoly::h_poly(n, m).to_string();
            if got != golden::H_TABLE[n][m] {
                ok = false;
                first_bad = format!("h({n},{m}) = {got}, want {}", golden::H_TABLE[n][m]);
            }
        }
    }
    out.push(if ok {
        CheckResult::ok("hpoly/table", "25 polynomials match verbatim")
    } else {
        CheckResult::fail("hpoly/table", first_bad)
    });
    out
}

/// Criterion: the reference 6x6 matrix, its trace, and its spectrum at
/// n = 4, ell = 2.
fn johnson_example() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let assembled = zeon_power_perm(&ExactMatrix::si_plus_tx(&ExactMatrix::all_ones(4)), 2)?;
    let mut matrix_ok = true;
    for i in 0..6 {
        for j in 0..6 {
            if assembled.get(i, j).to_string() != golden::SITJ_N4_L2[i][j] {
                matrix_ok = false;
            }
        }
    }
    out.push(if matrix_ok {
        CheckResult::ok("johnson-example/matrix", "all 36 entries match")
    } else {
        CheckResult::fail("johnson-example/matrix", "entry mismatch")
    });
    out.push(CheckResult::from_eq(
        "johnson-example/trace",
        assembled.trace().to_string(),
        golden::SITJ_N4_L2_TRACE.to_string(),
    ));
    let spectrum: Vec<(String, usize)> = johnson::spectrum_si_plus_tj(4, 2)?
        .into_iter()
        .map(|e| (e.eigenvalue.to_string(), e.multiplicity))
        .collect();
    let expected: Vec<(String, usize)> = golden::SITJ_N4_L2_SPECTRUM
        .iter()
        .map(|(e, m)| (e.to_string(), *m))
        .collect();
    out.push(CheckResult::from_eq(
        "johnson-example/spectrum",
        spectrum,
        expected,
    ));
    Ok(out)
}

fn j_minus_i(n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::all_ones(n);
    for i in 0..n {
        m.set(i, i, BiPoly::zero());
    }
    m
}

fn i_plus_j(n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::all_ones(n);
    for i in 0..n {
        m.set(i, i, BiPoly::constant(2));
    }
    m
}

/// Criterion: characteristic polynomials of the two worked 10x10
/// examples, matched against both the reference factorizations and the
/// knight's-move spectra.
fn derangement_spectra() -> Result<Vec<CheckResult>> {
    fn check_case(
        name: &str,
        base: ExactMatrix,
        kind: CountKind,
        expected: &[(i64, usize)],
        out: &mut Vec<CheckResult>,
    ) -> Result<()> {
        let induced = zeon_power_perm(&base, 3)?;
        let cp = charpoly(&induced)?;
        let reference = UniPoly::from_roots(
            &expected
                .iter()
                .map(|&(v, m)| (BigInt::from(v), m))
                .collect::<Vec<_>>(),
        );
        out.push(CheckResult::from_eq(
            format!("{name}/charpoly"),
            cp.clone(),
            reference,
        ));
        let spec = derange::specialized_spectrum(kind, 5, 3)?;
        let got: Vec<(BigInt, usize)> = spec
            .iter()
            .map(|e| (e.eigenvalue.clone(), e.multiplicity))
            .collect();
        let want: Vec<(BigInt, usize)> = expected
            .iter()
            .map(|&(v, m)| (BigInt::from(v), m))
            .collect();
        out.push(CheckResult::from_eq(format!("{name}/spectrum"), got, want));
        let from_spec = UniPoly::from_roots(
            &spec
                .iter()
                .map(|e| (e.eigenvalue.clone(), e.multiplicity))
                .collect::<Vec<_>>(),
        );
        out.push(CheckResult::from_eq(format!("{name}/product"), cp, from_spec));
        Ok(())
    }

    let mut out = Vec::new();
    check_case(
        "derangement-spectra/j-minus-i",
        j_minus_i(5),
        CountKind::Derangement,
        &golden::J_MINUS_I_N5_L3_SPECTRUM,
        &mut out,
    )?;
    check_case(
        "derangement-spectra/i-plus-j",
        i_plus_j(5),
        CountKind::Arrangement,
        &golden::I_PLUS_J_N5_L3_SPECTRUM,
        &mut out,
    )?;
    Ok(out)
}

/// Criterion: the three constructions of (sI + tX)^(ell) agree entrywise
/// on 25 seeded random integer matrices with n <= 5, and the trace
/// formula reproduces per(sI + tX).
fn oracle_equivalence(seed: u64) -> Result<Vec<CheckResult>> {
    let mut rng = SplitMix64::new(seed);
    let mut failures = Vec::new();
    for case in 0..25 {
        let n = 1 + (rng.next_u64() % 5) as usize;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.next_range(-2, 3)).collect())
            .collect();
        let x = ExactMatrix::from_int_rows(&rows)?;
        let sitx = ExactMatrix::si_plus_tx(&x);
        for ell in 0..=n {
            let by_perm = zeon_power_perm(&sitx, ell)?;
            let by_sum = zeon_power_sum(&x, ell)?;
            let by_zeon = induced_matrix_zeon(&sitx, ell)?;
            if by_perm != by_sum {
                failures.push(format!("case {case} ell {ell}: sum route differs"));
            }
            if by_perm != by_zeon {
                failures.push(format!("case {case} ell {ell}: zeon route differs"));
            }
        }
        if per_via_traces(&x)? != permanent(&sitx) {
            failures.push(format!("case {case}: trace formula differs"));
        }
    }
    Ok(vec![if failures.is_empty() {
        CheckResult::ok(
            "oracle-equivalence/constructions",
            "25 matrices, all levels, three routes and the trace formula agree",
        )
    } else {
        CheckResult::fail("oracle-equivalence/constructions", failures.join("; "))
    }])
}

/// Criterion: 5 weighted subgraphs on 3 vertices for every ell, and the
/// subgraph expansion equals the permanent of the weighted matrix for
/// n <= 7.
fn subgraph_suite() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();

    // the five weight/cycle pairs per marking of K_3
    let figure: [&[(&str, usize)]; 4] = [
        &[
            ("s^3+3*s^2*t+3*s*t^2+t^3", 0),
            ("s*t^2+t^3", 0),
            ("s*t^2+t^3", 0),
            ("s*t^2+t^3", 0),
            ("t^3", 1),
        ],
        &[
            ("s^2*t+2*s*t^2+t^3", 0),
            ("t^3", 0),
            ("s*t^2+t^3", 0),
            ("s*t^2+t^3", 0),
            ("t^3", 1),
        ],
        &[
            ("s*t^2+t^3", 0),
            ("t^3", 0),
            ("s*t^2+t^3", 0),
            ("t^3", 0),
            ("t^3", 1),
        ],
        &[("t^3", 0), ("t^3", 0), ("t^3", 0), ("t^3", 0), ("t^3", 1)],
    ];
    let mut fig_ok = true;
    for (ell, want) in figure.iter().enumerate() {
        let subs = subgraphs::enumerate_elementary(3, ell)?;
        if subs.len() != 5 {
            fig_ok = false;
            continue;
        }
        let mut got: Vec<(String, usize)> = subs
            .iter()
            .map(|e| (e.weight().to_string(), e.cycle_count()))
            .collect();
        got.sort();
        let mut want: Vec<(String, usize)> =
            want.iter().map(|&(w, c)| (w.to_string(), c)).collect();
        want.sort();
        if got != want {
            fig_ok = false;
        }
    }
    out.push(if fig_ok {
        CheckResult::ok(
            "subgraphs/k3-weights",
            "5 subgraphs with the listed weights for every marking",
        )
    } else {
        CheckResult::fail("subgraphs/k3-weights", "weight multiset mismatch")
    });

    let mut per_ok = true;
    for n in 0..=7usize {
        for ell in 0..=n {
            if subgraphs::perm_via_subgraphs(n, ell)? != permanent(&exppoly::m_matrix(n, ell)?) {
                per_ok = false;
            }
        }
    }
    out.push(if per_ok {
        CheckResult::ok(
            "subgraphs/permanent",
            "expansion equals per(M) for all n <= 7",
        )
    } else {
        CheckResult::fail("subgraphs/permanent", "expansion mismatch")
    });
    Ok(out)
}

fn dihedral_generators(n: usize) -> Vec<Permutation> {
    let rotation = Permutation::from_cycles(n, &[(1..=n).collect()]).expect("valid cycle");
    let reflection =
        Permutation::new((0..n).map(|i| n - 1 - i).collect()).expect("valid reflection");
    vec![rotation, reflection]
}

/// Criterion: the triple equality of the orbit generating function for
/// standard families and seeded random subgroups of S_7, plus the C_4
/// orbit count.
fn group_suite(seed: u64) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let mut check_group = |label: String, gens: Vec<Permutation>| -> Result<bool> {
        let group = groups::group_closure(&gens, groups::DEFAULT_CLOSURE_CAP)?;
        let (a, b, c) = groups::molien_check(&group)?;
        let ok = a == b && b == c;
        if !ok {
            out.push(CheckResult::fail(
                format!("groups/molien/{label}"),
                "triple equality failed",
            ));
        }
        Ok(ok)
    };

    let mut all_ok = true;
    all_ok &= check_group("trivial".into(), vec![Permutation::identity(4)])?;
    for n in 1..=8usize {
        let gen = if n == 1 {
            Permutation::identity(1)
        } else {
            Permutation::from_cycles(n, &[(1..=n).collect()])?
        };
        all_ok &= check_group(format!("cyclic-{n}"), vec![gen])?;
    }
    for n in 3..=8usize {
        all_ok &= check_group(format!("dihedral-{n}"), dihedral_generators(n))?;
    }
    for n in 1..=6usize {
        let gens = if n == 1 {
            vec![Permutation::identity(1)]
        } else {
            vec![
                Permutation::from_cycles(n, &[vec![1, 2]])?,
                Permutation::from_cycles(n, &[(1..=n).collect()])?,
            ]
        };
        all_ok &= check_group(format!("symmetric-{n}"), gens)?;
    }
    let mut rng = SplitMix64::new(seed);
    for case in 0..20 {
        let gens = vec![
            Permutation::new(rng.permutation(7))?,
            Permutation::new(rng.permutation(7))?,
        ];
        all_ok &= check_group(format!("random-s7-{case}"), gens)?;
    }
    if all_ok {
        out.push(CheckResult::ok(
            "groups/molien",
            "triple equality for trivial, cyclic, dihedral, symmetric, and 20 random subgroups",
        ));
    }

    let c4 = groups::group_closure(
        &[Permutation::from_cycles(4, &[vec![1, 2, 3, 4]])?],
        groups::DEFAULT_CLOSURE_CAP,
    )?;
    out.push(CheckResult::from_eq(
        "groups/c4-orbits",
        groups::orbit_count_ell_sets(&c4, 2)?,
        BigInt::from(2),
    ));
    Ok(out)
}

/// Criterion: the exact identity suite for n <= 8.
fn identity_suite() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    const NMAX: usize = 8;
    let tri = exppoly::p_triangle(NMAX);

    let mut closed_ok = true;
    let mut initial_ok = true;
    for n in 0..=NMAX {
        for ell in 0..=n {
            closed_ok &= tri.entry(n, ell) == &exppoly::p_poly(n, ell)?;
            initial_ok &= exppoly::pst_sum_from_initial(n, ell)? == *tri.entry(n, ell);
        }
    }
    out.push(CheckResult::from_eq(
        "identities/triangle-closed-form",
        closed_ok,
        true,
    ));
    out.push(CheckResult::from_eq(
        "identities/triangle-from-initial",
        initial_ok,
        true,
    ));

    let mut alt_ok = true;
    for n in 0..=NMAX {
        alt_ok &= exppoly::pst_alternating_sum(n) == BiPoly::monomial(BigInt::one(), n as u32, 0);
    }
    out.push(CheckResult::from_eq(
        "identities/alternating-sum",
        alt_ok,
        true,
    ));

    let mut d_ok = true;
    for (n, row) in derange::derangement_triangle(NMAX).iter().enumerate() {
        for (ell, from_recurrence) in row.iter().enumerate() {
            let closed = derange::derangement_number(n, ell)?;
            d_ok &= closed == derange::derangement_incl_excl(n, ell)?;
            d_ok &= closed == derange::derangement_from_classics(n, ell)?;
            d_ok &= &closed == from_recurrence;
        }
    }
    out.push(CheckResult::from_eq("identities/derangement-forms", d_ok, true));

    let mut a_ok = true;
    for (n, row) in derange::arrangement_triangle(NMAX).iter().enumerate() {
        for (ell, from_recurrence) in row.iter().enumerate() {
            let closed = derange::arrangement_number(n, ell)?;
            a_ok &= closed == derange::arrangement_convolution(n, ell)?;
            a_ok &= closed == derange::arrangement_from_totals(n, ell)?;
            a_ok &= &closed == from_recurrence;
        }
    }
    out.push(CheckResult::from_eq("identities/arrangement-forms", a_ok, true));

    let mut forms_ok = true;
    for n in 0..=NMAX {
        for m in 0..=n {
            let expect = exppoly::h_poly(n - m, m);
            forms_ok &= exppoly::h_diag_forms(n, m).iter().all(|f| f == &expect);
        }
    }
    out.push(CheckResult::from_eq("identities/h-variant-forms", forms_ok, true));

    let mut spec_ok = true;
    let mut trace_ok = true;
    let mut rowsum_ok = true;
    for n in 1..=NMAX {
        for ell in 0..=n {
            let spectrum = johnson::spectrum_si_plus_tj(n, ell)?;
            for entry in &spectrum {
                let a = entry.alpha;
                let lhs = &entry.eigenvalue
                    * &BiPoly::monomial(
                        crate::comb::factorial(n - ell - a),
                        0,
                        (n - ell - a) as u32,
                    );
                let rhs = &BiPoly::monomial(BigInt::one(), a as u32, 0)
                    * &exppoly::h_poly(ell - a, n - ell - a);
                spec_ok &= lhs == rhs;
            }
            let mut weighted = BiPoly::zero();
            for entry in &spectrum {
                weighted += &entry.eigenvalue.scale(&BigInt::from(entry.multiplicity));
            }
            trace_ok &= weighted == johnson::trace_poly(n, ell)?;

            let assembled = johnson::assemble_expansion(n, ell)?;
            let expect = johnson::rowsum_poly(n, ell)?;
            for i in 0..assembled.dim() {
                rowsum_ok &= assembled.row_sum(i) == expect;
            }
        }
    }
    out.push(CheckResult::from_eq("identities/spectrum-h-identity", spec_ok, true));
    out.push(CheckResult::from_eq("identities/trace-identity", trace_ok, true));
    out.push(CheckResult::from_eq("identities/rowsum-eigenvector", rowsum_ok, true));

    let mut gf_ok = true;
    for m in 0..=2usize {
        let seq: Vec<BiPoly> = (0..=6).map(|n| exppoly::h_poly(n, m)).collect();
        gf_ok &= expgf_check(&seq, m, 6)?;
    }
    out.push(CheckResult::from_eq("identities/generating-function", gf_ok, true));

    Ok(out)
}

/// Criterion: convergence of the normalized associated polynomials.
fn asymptotics() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let r = exppoly::q_asymptotic_ratio(20, &rat(1, 1), &rat(1, 1), &rat(0, 1))?;
    let err = (r - std::f64::consts::E).abs();
    out.push(if err < 1e-12 {
        CheckResult::ok("asymptotics/e", format!("|ratio - e| = {err:.3e} < 1e-12"))
    } else {
        CheckResult::fail("asymptotics/e", format!("|ratio - e| = {err:.3e} >= 1e-12"))
    });
    let r = exppoly::q_asymptotic_ratio(20, &rat(1, 1), &rat(1, 1), &rat(1, 1))?;
    let err = (r - 0.5f64.exp()).abs();
    out.push(if err < 1e-9 {
        CheckResult::ok(
            "asymptotics/sqrt-e",
            format!("|ratio - e^(1/2)| = {err:.3e} < 1e-9"),
        )
    } else {
        CheckResult::fail(
            "asymptotics/sqrt-e",
            format!("|ratio - e^(1/2)| = {err:.3e} >= 1e-9"),
        )
    });
    Ok(out)
}

/// Criterion: brute-force enumeration oracles equal the closed forms
/// (derangements through n = 9, arrangements through n = 8), including
/// the worked lists.
fn enumeration_suite() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();

    let mut d_ok = true;
    for n in 0..=9usize {
        for ell in 0..=n {
            d_ok &= derange::oracle_deranged_count(n, ell)?
                == derange::derangement_number(n, ell)?;
        }
    }
    out.push(CheckResult::from_eq("enumeration/deranged-counts", d_ok, true));

    let mut a_ok = true;
    for n in 0..=8usize {
        for ell in 0..=n {
            a_ok &= derange::oracle_arrangement_count(n, ell)?
                == derange::arrangement_number(n, ell)?;
        }
    }
    out.push(CheckResult::from_eq("enumeration/arrangement-counts", a_ok, true));

    let listed = derange::deranged_permutations(3, 1)?;
    out.push(CheckResult::from_eq(
        "enumeration/d31-list",
        listed,
        vec![vec![2, 1, 3], vec![2, 3, 1], vec![3, 1, 2]],
    ));
    let arrangements = derange::arrangements_containing(3, 2)?;
    out.push(CheckResult::from_eq(
        "enumeration/a32-count",
        arrangements.len(),
        8,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(
            run_suite("nope", 0),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn fast_suites_pass() {
        for suite in ["triangles", "hpoly", "asymptotics"] {
            let results = run_suite(suite, 0xA11CE).unwrap();
            assert!(!results.is_empty());
            for r in &results {
                assert!(r.passed, "{}: {}", r.name, r.detail);
            }
        }
    }
}
