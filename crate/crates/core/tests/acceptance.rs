//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. All comparisons are exact; truncation bounds are
//! pinned below.

use std::process::ExitCode;
use std::time::Instant;

use skewgroth::beta::binomial_i64;
use skewgroth::noncomm::{expand_sG_double, expand_sG_single, expand_sg, perp_expand_g, Basis, Expansion, SkewSum};
use skewgroth::verify::{self, Report};
use skewgroth::{BetaPoly, Partition, SkewShape, SymFunc};

const DUALITY_MAX: usize = 6;
const DUALITY_DEGREE: usize = 6;
const ORACLE_MAX: usize = 5;
const ORACLE_VARS: [usize; 3] = [2, 3, 4];
const ORACLE_DEGREE: usize = 8;
const SKEW_MAX: usize = 5;
const SKEW_DEGREE: usize = 7;
const FINITE_MAX: usize = 4;
const FINITE_ROWS: usize = 5;
const FINITE_DEGREE: usize = 6;
const DUAL_DET_MAX: usize = 6;
const PERP_DET_MAX: usize = 5;
const PERP_DET_X_DEGREE: usize = 6;
const KNUTH_INDEX: usize = 4;
const KNUTH_SHAPE: usize = 5;
const FG_LETTERS: usize = 3;
const FG_NU: usize = 3;
const FG_SHAPE: usize = 4;
const SUPER_MAX: usize = 3;
const SUPER_LETTERS: usize = 3;
const GRADING_MAX: usize = 6;
const EXPANSION_NU: usize = 3;
const EXPANSION_MAX: usize = 4;

fn p(x: &[usize]) -> Partition {
    Partition::from_slice(x)
}

fn int(c: i64) -> BetaPoly {
    BetaPoly::from_int(c)
}

fn beta(c: i64, e: usize) -> BetaPoly {
    BetaPoly::int_monomial(c, e)
}

fn sum(terms: &[(&[usize], &[usize], BetaPoly)]) -> SkewSum {
    SkewSum::from_terms(terms.iter().map(|(o, i, c)| (SkewShape::new(p(o), p(i)).unwrap(), c.clone())))
}

fn dual(terms: SkewSum) -> Expansion {
    Expansion { basis: Basis::Dual, validity_mod: None, terms }
}

fn merge(name: &str, parts: Vec<Report>) -> Report {
    let mut out = Report::new(name);
    for r in parts {
        out.checked += r.checked;
        out.failed += r.failed;
        out.failures.extend(r.failures.into_iter().map(|f| format!("[{}] {f}", r.name)));
        out.notes.extend(r.notes.into_iter().map(|n| format!("[{}] {n}", r.name)));
    }
    out
}

fn worked_examples() -> Report {
    let mut rep = Report::new("worked examples");

    let five = sum(&[
        (&[4, 1], &[1], int(1)),
        (&[3, 2], &[1], int(1)),
        (&[3, 1, 1], &[1], int(1)),
        (&[3, 1, 1, 1], &[1], beta(-1, 1)),
        (&[3, 1], &[], int(-1)),
    ]);
    let got = expand_sG_double(&p(&[1]), &p(&[3, 1]), &p(&[1]), 4, 1).unwrap();
    rep.check(got.terms == five && got.validity_mod == Some(3), || format!("s1·G(3,1)\\\\(1): {:?}", got.terms));
    let got = expand_sG_single(&p(&[1]), &p(&[3, 1]), &p(&[1]), 4, 1).unwrap();
    rep.check(got.terms == five, || format!("s1·G(3,1)/(1): {:?}", got.terms));

    for n in 1..=5 {
        let got = expand_sg(&Partition::row(n), &p(&[]), &p(&[]), 1).unwrap();
        rep.check(got.terms == sum(&[(&[n], &[], int(1))]), || format!("s({n})·g∅: {:?}", got.terms));
    }

    for n in 1..=5usize {
        let got = expand_sg(&Partition::column(n), &p(&[]), &p(&[]), n).unwrap();
        let mut want = SkewSum::zero();
        for k in 1..=n {
            let c = binomial_i64(n as i64 - 1, (n - k) as i64);
            want.add_term(SkewShape::straight(Partition::column(k)), &beta(c, n - k));
        }
        rep.check(got.terms == want, || format!("s(1^{n}): {:?}", got.terms));
    }

    let nine = sum(&[
        (&[4, 1], &[1], int(1)),
        (&[3, 2], &[1], int(1)),
        (&[3, 1, 1], &[1], int(1)),
        (&[2, 2, 1], &[1], int(1)),
        (&[3, 1], &[], int(-1)),
        (&[2, 2], &[], int(-1)),
        (&[2, 1, 1], &[], int(-1)),
        (&[3, 1], &[1], beta(1, 1)),
        (&[2, 1], &[], beta(-1, 1)),
    ]);
    let got = expand_sg(&p(&[2]), &p(&[2, 1]), &p(&[1]), 3).unwrap();
    rep.check(got.terms == nine, || format!("s2·g(2,1)/(1): {:?}", got.terms));

    let s2 = SymFunc::schur(&p(&[2]), 2);
    let got = expand_sg(&p(&[2]), &p(&[1]), &p(&[1]), 2).unwrap();
    let five_dual = sum(&[
        (&[3], &[1], int(1)),
        (&[2, 1], &[1], int(1)),
        (&[2], &[], int(-1)),
        (&[1, 1], &[], int(-1)),
        (&[1, 1], &[1], beta(-1, 1)),
    ]);
    rep.check(got.terms == five_dual, || format!("s2·g(1)/(1): {:?}", got.terms));
    let collapsed = dual(sum(&[(&[2, 1], &[1], int(1)), (&[1, 1], &[], int(-1)), (&[1], &[], beta(-1, 1))]));
    rep.check(collapsed.realize(2) == s2, || "s2 = g(2,1)/(1) − g(1,1) − βg(1)".into());
    rep.check(got.realize(2) == s2, || "s2 from the expansion".into());

    let s3 = SymFunc::schur(&p(&[3]), 3);
    let presentations: Vec<(&[usize], SkewSum)> = vec![
        (&[], sum(&[(&[3], &[], int(1))])),
        (
            &[1],
            sum(&[
                (&[3, 1], &[1], int(1)),
                (&[2, 1], &[], int(-1)),
                (&[2, 1], &[1], beta(-1, 1)),
                (&[1, 1], &[], beta(1, 1)),
                (&[1], &[], beta(1, 2)),
            ]),
        ),
        (
            &[1, 1],
            sum(&[
                (&[3], &[], int(1)),
                (&[2, 1], &[], int(1)),
                (&[1, 1, 1], &[], int(1)),
                (&[2, 1, 1], &[1], int(-1)),
                (&[1, 1], &[], beta(1, 1)),
            ]),
        ),
        (&[2], sum(&[(&[3, 2], &[2], int(1)), (&[2, 2], &[1], int(-1)), (&[2], &[], beta(-1, 1))])),
    ];
    for (lam, shown) in presentations {
        let lam = p(lam);
        let shown = dual(shown);
        rep.check(shown.realize(3) == s3, || format!("s3 presentation at {lam:?}"));
        let got = expand_sg(&p(&[3]), &lam, &lam, lam.len() + 1).unwrap();
        rep.check(got.realize(3) == s3, || format!("s3 from the expansion at {lam:?}"));
    }

    let nu = p(&[2, 1]);
    let got = perp_expand_g(&nu, &p(&[2, 1]), &p(&[]), 2).unwrap();
    rep.check(got.realize(0) == SymFunc::one(0), || format!("s(2,1)^⊥g(2,1): {:?}", got.terms));
    let got = perp_expand_g(&nu, &p(&[2, 2]), &p(&[]), 2).unwrap();
    let want = SymFunc::schur(&p(&[1]), 1).sub(&SymFunc::constant(beta(1, 1), 1));
    rep.check(got.realize(1) == want, || format!("s(2,1)^⊥g(2,2): {:?}", got.terms));
    let got = perp_expand_g(&nu, &p(&[3, 3, 1]), &p(&[2]), 3).unwrap();
    let shown =
        dual(sum(&[(&[1, 1], &[], int(1)), (&[2], &[], int(1)), (&[2, 1], &[1], int(1)), (&[1], &[], beta(-1, 1))]));
    rep.check(got.realize(2) == shown.realize(2), || format!("s(2,1)^⊥g(3,3,1)/(2): {:?}", got.terms));
    rep
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Box<dyn Fn() -> Report>);
    let criteria: Vec<Criterion> = vec![
        ("1 duality", Box::new(|| verify::duality(DUALITY_MAX, DUALITY_DEGREE))),
        ("2 ratio formula", Box::new(|| verify::oracle_ratio(ORACLE_MAX, &ORACLE_VARS, ORACLE_DEGREE))),
        ("3 double-skew determinant", Box::new(|| verify::double_det(SKEW_MAX, SKEW_DEGREE))),
        ("4 rook-strip relation", Box::new(|| verify::rook_strip(SKEW_MAX, SKEW_DEGREE))),
        (
            "5 finite-variable determinants",
            Box::new(|| verify::finite_variables(FINITE_MAX, FINITE_ROWS, FINITE_DEGREE)),
        ),
        ("6 dual skew determinant", Box::new(|| verify::dual_det(DUAL_DET_MAX))),
        (
            "7 perp determinants",
            Box::new(|| {
                merge(
                    "perp determinants",
                    vec![verify::dual_perp_dets(PERP_DET_MAX), verify::s_perp_big_det(PERP_DET_MAX, PERP_DET_X_DEGREE)],
                )
            }),
        ),
        ("8 worked examples", Box::new(worked_examples)),
        (
            "9 property suites",
            Box::new(|| {
                merge(
                    "property suites",
                    vec![
                        verify::knuth(KNUTH_INDEX, KNUTH_SHAPE),
                        verify::commutation(KNUTH_INDEX, KNUTH_SHAPE),
                        verify::schur_commutativity(FG_LETTERS, FG_NU, FG_SHAPE),
                        verify::supersymmetric(SUPER_MAX, SUPER_LETTERS),
                        verify::grading(GRADING_MAX),
                    ],
                )
            }),
        ),
        ("10 expansion congruences", Box::new(|| verify::product_expansions(EXPANSION_NU, EXPANSION_MAX, 0))),
    ];
    let mut all = true;
    for (label, run) in criteria {
        let start = Instant::now();
        let rep = run();
        all &= rep.passed();
        let status = if rep.passed() { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {label}: {} checks, {} failed ({:.1}s)",
            rep.checked,
            rep.failed,
            start.elapsed().as_secs_f64()
        );
        for n in &rep.notes {
            println!("    note: {n}");
        }
        for f in &rep.failures {
            println!("    counterexample: {f}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
