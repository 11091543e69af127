//! Identity checks over ranges of shapes, each returning a [`Report`] that
//! records how many cases ran and which failed.

use std::fmt;

use crate::grothendieck::{
    finite_var_G_det, g_perp_g_det, g_schur, g_skew, g_skew_det, rook_strip_sum, s_perp_G_det, s_perp_g_det,
    DoubleEntry, G_schur, G_skew_double, G_skew_double_det, G_skew_double_det_with, G_skew_single_det, SkewKind,
};
use crate::noncomm::{
    apply_op, expand_sG_double, expand_sG_single, expand_sg, noncomm_schur_apply, perp_expand_G, perp_expand_g, Action,
    Op, SkewSum,
};
use crate::oracle::{bialternant, eval_symfunc, eval_two_alphabet, identify_alphabets, ratio_formula_G, schur_poly};
use crate::partition::{Partition, SkewShape};
use crate::supersym::{super_schur, super_schur_dual_jt};
use crate::symfunc::SymFunc;
use crate::BetaPoly;

/// Failures kept verbatim per report; the rest are only counted.
const KEEP: usize = 5;

#[derive(Clone, Debug)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), checked: 0, failed: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEEP {
                self.failures.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} checks", self.name, self.checked)?;
        if !self.passed() {
            write!(f, ", {} failed", self.failed)?;
        }
        for n in &self.notes {
            write!(f, "\n    note: {n}")?;
        }
        for x in &self.failures {
            write!(f, "\n    counterexample: {x}")?;
        }
        Ok(())
    }
}

/// All `(λ, μ)` with `μ ⊆ λ` and `|λ| ≤ max`.
pub fn skew_pairs(max: usize) -> Vec<(Partition, Partition)> {
    Partition::all_up_to(max)
        .into_iter()
        .flat_map(|l| l.subpartitions().into_iter().map(move |m| (l.clone(), m)))
        .collect()
}

pub fn duality(max: usize, d: usize) -> Report {
    let mut rep = Report::new(format!("duality |λ|,|μ| ≤ {max}, D = {d}"));
    let shapes = Partition::all_up_to(max);
    let duals: Vec<SymFunc> = shapes.iter().map(|m| g_schur(m).with_degree_bound(d)).collect();
    for lam in &shapes {
        let big = G_schur(lam, d);
        for (mu, g) in shapes.iter().zip(&duals) {
            let want = if lam == mu { BetaPoly::one() } else { BetaPoly::zero() };
            let got = big.hall_inner(g);
            rep.check(got.as_ref() == Ok(&want), || format!("⟨G{lam:?}, g{mu:?}⟩ = {got:?}"));
        }
    }
    rep
}

pub fn oracle_ratio(max: usize, vars: &[usize], d: usize) -> Report {
    let mut rep = Report::new(format!("ratio formula |λ| ≤ {max}, n ∈ {vars:?}, x-degree ≤ {d}"));
    for &n in vars {
        for lam in Partition::all_up_to(max) {
            if lam.len() > n {
                continue;
            }
            let ratio = ratio_formula_G(&lam, n).map(|p| p.truncate_degree(d as u32));
            let eval = eval_symfunc(&G_schur(&lam, d), n).truncate_degree(d as u32);
            rep.check(ratio.as_ref() == Ok(&eval), || format!("λ = {lam:?}, n = {n}"));
        }
    }
    rep
}

pub fn oracle_bialternant(max: usize, vars: &[usize]) -> Report {
    let mut rep = Report::new(format!("bialternant |λ| ≤ {max}, n ∈ {vars:?}"));
    for &n in vars {
        for lam in Partition::all_up_to(max) {
            if lam.len() <= n {
                let b = bialternant(&lam, n);
                rep.check(b.as_ref() == Ok(&schur_poly(&lam, n)), || format!("λ = {lam:?}, n = {n}"));
            }
        }
    }
    rep
}

/// `G_λ(x, y) = Σ_μ G_μ(x) G_{λ\\μ}(y)` in `mx + my` variables up to total degree `d`.
pub fn coproduct(max: usize, mx: usize, my: usize, d: usize) -> Report {
    let mut rep = Report::new(format!("coproduct |λ| ≤ {max}, {mx}+{my} variables, degree ≤ {d}"));
    let n = mx + my;
    for lam in Partition::all_up_to(max) {
        let lhs = eval_symfunc(&G_schur(&lam, d), n).truncate_degree(d as u32);
        let mut rhs = crate::oracle::MultiPoly::zero(n);
        for mu in lam.subpartitions() {
            let x = eval_symfunc(&G_schur(&mu, d), mx).embed(0, n);
            let y = eval_symfunc(&G_skew_double(&lam, &mu, d), my).embed(mx, n);
            rhs = rhs.add(&x.mul(&y).truncate_degree(d as u32));
        }
        rep.check(lhs == rhs, || format!("λ = {lam:?}"));
    }
    rep
}

pub fn double_det(max: usize, d: usize) -> Report {
    let mut rep = Report::new(format!("G_(λ\\\\μ) determinant vs adjoint, |λ| ≤ {max}, D = {d}"));
    for (lam, mu) in skew_pairs(max) {
        let ok = G_skew_double_det(&lam, &mu, d) == G_skew_double(&lam, &mu, d);
        rep.check(ok, || format!("{lam:?}/{mu:?}"));
    }
    rep
}

/// The determinant at `r`, `r+1`, …, `r+extra` rows against the adjoint.
pub fn double_det_row_invariance(max: usize, d: usize, extra: usize) -> Report {
    let mut rep = Report::new(format!("G_(λ\\\\μ) determinant at r..r+{extra} rows, |λ| ≤ {max}, D = {d}"));
    for (lam, mu) in skew_pairs(max) {
        let adjoint = G_skew_double(&lam, &mu, d);
        let r0 = lam.len().max(mu.len()).max(1);
        for r in r0..=r0 + extra {
            let det = G_skew_double_det_with(&lam, &mu, d, r, DoubleEntry::Convolution);
            rep.check(det == adjoint, || format!("{lam:?}/{mu:?} at r = {r}"));
        }
    }
    rep
}

pub fn rook_strip(max: usize, d: usize) -> Report {
    let mut rep = Report::new(format!("rook-strip relation, |λ| ≤ {max}, D = {d}"));
    for (lam, mu) in skew_pairs(max) {
        let ok = rook_strip_sum(&lam, &mu, d) == G_skew_double_det(&lam, &mu, d);
        rep.check(ok, || format!("{lam:?}/{mu:?}"));
    }
    rep
}

/// Finite-variable determinants against `ι_m π_m` of the stable objects, for
/// every `r ≤ max_r` with `r ≥ ℓ(λ)` and every `m ≤ r − ℓ(μ)`.
pub fn finite_variables(max: usize, max_r: usize, d: usize) -> Report {
    let mut rep = Report::new(format!("finite-variable determinants, |λ| ≤ {max}, r ≤ {max_r}, D = {d}"));
    for (lam, mu) in skew_pairs(max) {
        let double = G_skew_double(&lam, &mu, d);
        let single = G_skew_single_det(&lam, &mu, d);
        for r in lam.len().max(1)..=max_r {
            for m in 0..=r.saturating_sub(mu.len()) {
                for (kind, target) in [(SkewKind::Double, &double), (SkewKind::Single, &single)] {
                    let got = finite_var_G_det(&lam, &mu, m, r, d, kind);
                    let want = target.truncate_length(m);
                    rep.check(got.as_ref().map(|g| g.terms()) == Ok(want.terms()), || {
                        format!("{kind:?} {lam:?}/{mu:?}, r = {r}, m = {m}")
                    });
                }
            }
        }
    }
    rep
}

pub fn dual_det(max: usize) -> Report {
    let mut rep = Report::new(format!("g_(λ/μ) determinant vs adjoint, |λ| ≤ {max}"));
    for (lam, mu) in skew_pairs(max) {
        rep.check(g_skew_det(&lam, &mu) == g_skew(&lam, &mu), || format!("{lam:?}/{mu:?}"));
    }
    rep
}

pub fn dual_perp_dets(max: usize) -> Report {
    let mut rep = Report::new(format!("s^⊥g and g^⊥g determinants, |λ| ≤ {max}"));
    for (lam, mu) in skew_pairs(max) {
        let g = g_schur(&lam);
        let s_perp = g.perp_schur(&mu);
        rep.check(s_perp_g_det(&lam, &mu) == s_perp, || format!("s^⊥g {lam:?}/{mu:?}"));
        let g_perp = g.perp_exact(&g_schur(&mu), lam.size());
        rep.check(g_perp_g_det(&lam, &mu) == g_perp, || format!("g^⊥g {lam:?}/{mu:?}"));
    }
    rep
}

/// `s_μ^⊥ G_λ` from its β-series determinant against the adjoint path, up to
/// x-degree `d`. The β cutoff is the largest exponent that can survive at
/// x-degree `d`, and every case is confirmed stable one step further.
pub fn s_perp_big_det(max: usize, d: usize) -> Report {
    let mut rep = Report::new(format!("s^⊥G determinant, |λ| ≤ {max}, x-degree ≤ {d}"));
    let mut max_cut = 0;
    let mut stable = 0;
    for (lam, mu) in skew_pairs(max) {
        let cut = (d + mu.size()).saturating_sub(lam.size());
        max_cut = max_cut.max(cut);
        let adjoint = G_schur(&lam, d + mu.size()).perp_schur(&mu);
        let got = s_perp_G_det(&lam, &mu, d, cut);
        if got.is_ok() {
            stable += 1;
        }
        rep.check(got.as_ref().map(|g| g.terms()) == Ok(adjoint.terms()), || format!("{lam:?}/{mu:?}: {got:?}"));
    }
    rep.notes.push(format!("β cutoff up to {max_cut}; {stable} of {} cases unchanged at cutoff + 1", rep.checked));
    rep
}

/// Every constructor output carries its grading and satisfies it.
pub fn grading(max: usize) -> Report {
    let mut rep = Report::new(format!("grading invariant, |λ| ≤ {max}"));
    let d = max;
    let mut expect = |name: &str, lam: &Partition, mu: &Partition, f: SymFunc| {
        let ok = f.grading().is_some() && f.is_consistently_graded();
        rep.check(ok, || format!("{name} {lam:?}/{mu:?}"));
    };
    for lam in Partition::all_up_to(max) {
        let e = Partition::empty();
        expect("G", &lam, &e, G_schur(&lam, d));
        expect("g", &lam, &e, g_schur(&lam));
    }
    for (lam, mu) in skew_pairs(max) {
        expect("g/", &lam, &mu, g_skew(&lam, &mu));
        expect("g/ det", &lam, &mu, g_skew_det(&lam, &mu));
        if lam.size() <= 5 {
            expect("G//", &lam, &mu, G_skew_double(&lam, &mu, d));
            expect("G// det", &lam, &mu, G_skew_double_det(&lam, &mu, d));
            expect("G/ det", &lam, &mu, G_skew_single_det(&lam, &mu, d));
        }
    }
    rep
}

/// `op_{w_1} ⋯ op_{w_N}` on a single partition.
pub fn apply_word_to_partition(op: Op, word: &[usize], lambda: &Partition) -> SkewSum {
    let action = match op {
        Op::AddClosed | Op::AddBox => Action::Dot,
        Op::RemoveClosed | Op::RemoveBox => Action::Star,
    };
    crate::noncomm::apply_word(op, word, &SkewSum::single(SkewShape::straight(lambda.clone())), action)
}

/// The plactic relations for `u`, `v` and the reversed ones for `U`, `V`.
pub fn knuth(max_index: usize, max: usize) -> Report {
    let mut rep = Report::new(format!("Knuth relations, indices ≤ {max_index}, |λ| ≤ {max}"));
    let shapes = Partition::all_up_to(max);
    let idx = 1..=max_index;
    for op in [Op::AddClosed, Op::AddBox, Op::RemoveClosed, Op::RemoveBox] {
        let reversed = matches!(op, Op::RemoveClosed | Op::RemoveBox);
        // `le(a, b)` is `a ≤ b` in the order the family is plactic for.
        let le = |a: usize, b: usize| if reversed { a >= b } else { a <= b };
        let lt = |a: usize, b: usize| a != b && le(a, b);
        for i in idx.clone() {
            for j in idx.clone() {
                for k in idx.clone() {
                    let mut pairs = Vec::new();
                    if le(i, j) && lt(j, k) {
                        pairs.push(([i, k, j], [k, i, j]));
                    }
                    if lt(i, j) && le(j, k) {
                        pairs.push(([j, i, k], [j, k, i]));
                    }
                    for (a, b) in pairs {
                        for lam in &shapes {
                            let ok = apply_word_to_partition(op, &a, lam) == apply_word_to_partition(op, &b, lam);
                            rep.check(ok, || format!("{op}{a:?} ≠ {op}{b:?} on {lam:?}"));
                        }
                    }
                }
            }
        }
    }
    rep
}

/// `U_i u_j = u_j U_i` and `V_i v_j = v_j V_i` on skew shapes.
pub fn commutation(max_index: usize, max: usize) -> Report {
    let mut rep = Report::new(format!("u/U and v/V commutation, indices ≤ {max_index}, |λ| ≤ {max}"));
    for (lam, mu) in skew_pairs(max) {
        let e = SkewSum::single(SkewShape::new(lam.clone(), mu.clone()).expect("pair"));
        for (add, remove) in [(Op::AddClosed, Op::RemoveClosed), (Op::AddBox, Op::RemoveBox)] {
            for i in 1..=max_index {
                for j in 1..=max_index {
                    let ab = apply_op(remove, i, &apply_op(add, j, &e, Action::Dot), Action::Dot);
                    let ba = apply_op(add, j, &apply_op(remove, i, &e, Action::Dot), Action::Dot);
                    rep.check(ab == ba, || format!("{remove}{i}{add}{j} on {lam:?}/{mu:?}"));
                }
            }
        }
    }
    rep
}

/// `s_α(u_m) s_γ(u_m) = s_γ(u_m) s_α(u_m)` on partitions with `|λ| ≤ max`.
pub fn schur_commutativity(m: usize, max_nu: usize, max: usize) -> Report {
    let mut rep = Report::new(format!("commuting s_α(u_{m}), |α| ≤ {max_nu}, |λ| ≤ {max}"));
    let nus: Vec<SkewShape> = Partition::all_up_to(max_nu).into_iter().map(SkewShape::straight).collect();
    for lam in Partition::all_up_to(max) {
        let e = SkewSum::single(SkewShape::straight(lam.clone()));
        let first: Vec<SkewSum> =
            nus.iter().map(|a| noncomm_schur_apply(Op::AddClosed, a, m, &e, Action::Dot)).collect();
        for (x, a) in nus.iter().enumerate() {
            for (y, b) in nus.iter().enumerate().skip(x + 1) {
                let ab = noncomm_schur_apply(Op::AddClosed, a, m, &first[y], Action::Dot);
                let ba = noncomm_schur_apply(Op::AddClosed, b, m, &first[x], Action::Dot);
                rep.check(ab == ba, || format!("s{:?}, s{:?} on {lam:?}", a.outer(), b.outer()));
            }
        }
    }
    rep
}

/// Dual Jacobi–Trudi agreement and `s_λ(x/x) = δ_{λ∅}`.
pub fn supersymmetric(max: usize, m: usize) -> Report {
    let mut rep = Report::new(format!("supersymmetric Schur, |λ| ≤ {max}, {m} letters"));
    for lam in Partition::all_up_to(max) {
        let s = super_schur(&lam, max, max);
        rep.check(super_schur_dual_jt(&lam, max, max) == s, || format!("dual Jacobi–Trudi {lam:?}"));
        let collapsed = identify_alphabets(&eval_two_alphabet(&s, m, m), m);
        let want = if lam.is_empty() { crate::oracle::MultiPoly::one(m) } else { crate::oracle::MultiPoly::zero(m) };
        rep.check(collapsed == want, || format!("s{lam:?}(x/x) = {collapsed:?}"));
    }
    rep
}

/// Product expansions against direct multiplication: the `G` kinds modulo
/// `I_{r−s}` at `D = |λ|+|ν|+2`, the `g` kind exactly. `extra` enlarges `r`
/// beyond its minimum for the `G` kinds.
pub fn product_expansions(max_nu: usize, max: usize, extra: usize) -> Report {
    let mut rep = Report::new(format!("product expansions, |ν| ≤ {max_nu}, |λ| ≤ {max}, r up to minimum + {extra}"));
    for nu in Partition::all_up_to(max_nu) {
        for (lam, mu) in skew_pairs(max) {
            let d = lam.size() + nu.size() + 2;
            let s_nu = SymFunc::schur(&nu, d);
            let s = mu.len();
            let r_min = lam.len().max(s);
            let double = s_nu.mul(&G_skew_double(&lam, &mu, d));
            let single = s_nu.mul(&G_skew_single_det(&lam, &mu, d));
            for r in r_min..=r_min + extra {
                let n = r - s;
                let e = expand_sG_double(&nu, &lam, &mu, r, s).expect("legal bounds");
                let ok = e.realize(d).truncate_length(n).terms() == double.truncate_length(n).terms();
                rep.check(ok, || format!("sG// ν = {nu:?}, {lam:?}/{mu:?}, r = {r}, s = {s}"));
                let e = expand_sG_single(&nu, &lam, &mu, r, s).expect("legal bounds");
                let ok = e.realize(d).truncate_length(n).terms() == single.truncate_length(n).terms();
                rep.check(ok, || format!("sG/ ν = {nu:?}, {lam:?}/{mu:?}, r = {r}, s = {s}"));
            }
            let r = lam.len() + nu.len();
            let bound = lam.size() - mu.size() + nu.size();
            let e = expand_sg(&nu, &lam, &mu, r).expect("legal bounds");
            let direct = SymFunc::schur(&nu, bound).mul(&g_skew(&lam, &mu).with_degree_bound(bound));
            rep.check(e.realize(bound) == direct, || format!("sg ν = {nu:?}, {lam:?}/{mu:?}, r = {r}"));
        }
    }
    rep
}

/// Perp expansions against `s_ν^⊥` of the direct objects: exactly for `g`,
/// up to degree `D = |λ|+2` for `G`.
pub fn perp_expansions(max_nu: usize, max: usize) -> Report {
    let mut rep = Report::new(format!("perp expansions, |ν| ≤ {max_nu}, |λ| ≤ {max}"));
    for nu in Partition::all_up_to(max_nu) {
        for (lam, mu) in skew_pairs(max) {
            let r = lam.len().max(1);
            let g = perp_expand_g(&nu, &lam, &mu, r).expect("legal bounds");
            let bound = (lam.size() - mu.size()).saturating_sub(nu.size());
            let direct = g_skew(&lam, &mu).perp_schur(&nu).with_degree_bound(bound);
            rep.check(g.realize(bound) == direct, || format!("s^⊥g ν = {nu:?}, {lam:?}/{mu:?}"));
            let d = lam.size() + 2;
            let e = perp_expand_G(&nu, &lam, &mu, r).expect("legal bounds");
            let direct = G_skew_single_det(&lam, &mu, d + nu.size()).perp_schur(&nu);
            rep.check(e.realize(d) == direct, || format!("s^⊥G ν = {nu:?}, {lam:?}/{mu:?}"));
        }
    }
    rep
}

/// Named groups used by the command-line front end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Duality,
    Determinants,
    Expansions,
    Knuth,
    Oracle,
    All,
}

impl std::str::FromStr for Suite {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        Ok(match s {
            "duality" => Suite::Duality,
            "determinants" => Suite::Determinants,
            "expansions" => Suite::Expansions,
            "knuth" => Suite::Knuth,
            "oracle" => Suite::Oracle,
            "all" => Suite::All,
            _ => return Err(crate::Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// Runs a suite with shapes up to `max` boxes, degree bound `d` and `vars`
/// variables for oracle checks.
pub fn run_suite(suite: Suite, max: usize, d: usize, vars: usize) -> Vec<Report> {
    let d = d.max(max);
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Duality {
        out.push(duality(max, d));
    }
    if all || suite == Suite::Determinants {
        out.push(double_det(max, d));
        out.push(rook_strip(max, d));
        out.push(finite_variables(max.min(4), max.min(4) + 1, d));
        out.push(dual_det(max));
        out.push(dual_perp_dets(max));
        out.push(s_perp_big_det(max, d));
    }
    if all || suite == Suite::Expansions {
        out.push(product_expansions(max.min(3), max, 0));
        out.push(perp_expansions(max.min(3), max));
    }
    if all || suite == Suite::Knuth {
        out.push(knuth(4, max));
        out.push(commutation(4, max));
        out.push(schur_commutativity(3, max.min(3), max));
    }
    if all || suite == Suite::Oracle {
        let ns: Vec<usize> = (1..=vars.max(1)).collect();
        out.push(oracle_ratio(max, &ns, d));
        out.push(oracle_bialternant(max, &ns));
        out.push(supersymmetric(max.min(3), vars.max(1)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for rep in run_suite(Suite::All, 3, 4, 2) {
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn report_formatting() {
        let mut r = Report::new("demo");
        r.check(true, || unreachable!());
        r.check(false, || "bad case".into());
        assert!(!r.passed());
        assert_eq!(r.to_string(), "FAIL demo: 2 checks, 1 failed\n    counterexample: bad case");
    }

    #[test]
    fn suite_names() {
        assert_eq!("knuth".parse::<Suite>().unwrap(), Suite::Knuth);
        assert!("nope".parse::<Suite>().is_err());
    }
}
