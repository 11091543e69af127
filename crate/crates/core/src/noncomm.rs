//! Box-adding and box-removing operators on partitions and skew shapes,
//! non-commutative Schur functions in them, and the expansion algorithms for
//! `s_ν · G`, `s_ν · g`, `s_ν^⊥ G` and `s_ν^⊥ g`.
//!
//! Four operator families act on a partition `λ` (row index `i ≥ 1`):
//!
//! | family | symbol | action |
//! |---|---|---|
//! | [`Op::AddClosed`] | `u_i` | add a box to row `i`, close up to a diagram, weight `(−β)^{filled}` |
//! | [`Op::AddBox`] | `v_i` | add a box to row `i` if possible, else `−β·λ` |
//! | [`Op::RemoveClosed`] | `U_i` | remove a box from row `i`, close down, weight `(−β)^{emptied}`; `0` if `λ_i = 0` |
//! | [`Op::RemoveBox`] | `V_i` | remove a box from row `i` if possible, else `−β·λ` |
//!
//! On a skew shape `(λ, μ)` the ordinary action lets the adding families act
//! on `λ` and the removing families act on `μ`. The transposed (`∗`) action
//! swaps the roles and sends results that break containment to zero, except
//! for `V_i`, which then multiplies by `−β` as it does on a blocked row.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::beta::BetaPoly;
use crate::error::{Error, Result};
use crate::grothendieck::{g_skew, G_skew_double, G_skew_single_det};
use crate::partition::{prefix_min_closure, suffix_max_closure, Partition, SkewShape};
use crate::symfunc::{skew_schur_at_negbeta, SymFunc};
use crate::tableau::enumerate_ssyt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    AddClosed,
    AddBox,
    RemoveClosed,
    RemoveBox,
}

impl Op {
    /// Families indexed by a primed alphabet `1' > 2' > ⋯`.
    fn primed(self) -> bool {
        matches!(self, Op::RemoveClosed | Op::RemoveBox)
    }

    fn adds(self) -> bool {
        matches!(self, Op::AddClosed | Op::AddBox)
    }

    /// The single-partition action; `None` is the zero vector.
    pub fn act(self, i: usize, lambda: &Partition) -> Option<(Partition, BetaPoly)> {
        assert!(i >= 1, "operator indices start at 1");
        let row = i - 1;
        match self {
            Op::AddClosed => {
                let mut seq = lambda.to_seq(i);
                seq[row] += 1;
                let (p, e) = suffix_max_closure(&seq).expect("adding a box keeps ascents ≤ 1");
                Some((p, BetaPoly::neg_beta_pow(e)))
            }
            Op::AddBox => {
                if row == 0 || lambda.part(row - 1) > lambda.part(row) {
                    let mut seq = lambda.to_seq(i);
                    seq[row] += 1;
                    Some((to_partition(&seq), BetaPoly::one()))
                } else {
                    Some((lambda.clone(), BetaPoly::neg_beta_pow(1)))
                }
            }
            Op::RemoveClosed => {
                if lambda.part(row) == 0 {
                    return None;
                }
                let mut seq = lambda.to_seq(i);
                seq[row] -= 1;
                let (p, e) = prefix_min_closure(&seq).expect("removing a box keeps ascents ≤ 1");
                Some((p, BetaPoly::neg_beta_pow(e)))
            }
            Op::RemoveBox => {
                if lambda.part(row) > lambda.part(row + 1) {
                    let mut seq = lambda.to_seq(i);
                    seq[row] -= 1;
                    Some((to_partition(&seq), BetaPoly::one()))
                } else {
                    Some((lambda.clone(), BetaPoly::neg_beta_pow(1)))
                }
            }
        }
    }
}

fn to_partition(seq: &[i64]) -> Partition {
    Partition::new(seq.iter().map(|&x| x as usize).collect()).expect("valid diagram")
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Op::AddClosed => "u",
            Op::AddBox => "v",
            Op::RemoveClosed => "U",
            Op::RemoveBox => "V",
        };
        write!(f, "{c}")
    }
}

impl FromStr for Op {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u" => Ok(Op::AddClosed),
            "v" => Ok(Op::AddBox),
            "U" => Ok(Op::RemoveClosed),
            "V" => Ok(Op::RemoveBox),
            _ => Err(Error::Parse(format!("unknown operator family {s:?}"))),
        }
    }
}

/// Which way operators act on skew shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    /// Adding families on the outer shape, removing families on the inner one.
    Dot,
    /// Adding families on the inner shape, removing families on the outer
    /// one, with a containment guard.
    Star,
}

/// A `ℚ[β]`-combination of skew shapes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SkewSum {
    terms: BTreeMap<SkewShape, BetaPoly>,
}

impl SkewSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(shape: SkewShape) -> Self {
        let mut s = Self::zero();
        s.add_term(shape, &BetaPoly::one());
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (SkewShape, BetaPoly)>>(terms: I) -> Self {
        let mut s = Self::zero();
        for (k, c) in terms {
            s.add_term(k, &c);
        }
        s
    }

    pub fn add_term(&mut self, shape: SkewShape, c: &BetaPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(shape.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&shape);
        }
    }

    pub fn terms(&self) -> &BTreeMap<SkewShape, BetaPoly> {
        &self.terms
    }

    pub fn coeff(&self, shape: &SkewShape) -> BetaPoly {
        self.terms.get(shape).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &BetaPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }
}

/// One operator applied to every term of `elt`.
pub fn apply_op(op: Op, i: usize, elt: &SkewSum, action: Action) -> SkewSum {
    let mut out = SkewSum::zero();
    for (shape, c) in &elt.terms {
        if let Some((next, w)) = act_on_shape(op, i, shape, action) {
            out.add_term(next, &(c * &w));
        }
    }
    out
}

/// Star action shorthand.
pub fn apply_star(op: Op, i: usize, elt: &SkewSum) -> SkewSum {
    apply_op(op, i, elt, Action::Star)
}

fn act_on_shape(op: Op, i: usize, shape: &SkewShape, action: Action) -> Option<(SkewShape, BetaPoly)> {
    let on_outer = op.adds() == (action == Action::Dot);
    let (outer, inner) = (shape.outer(), shape.inner());
    if on_outer {
        let (p, w) = op.act(i, outer)?;
        match SkewShape::new(p, inner.clone()) {
            Ok(s) => Some((s, w)),
            // G_{(λ−e_i)/μ} = −β G_{λ/μ} when the removed box lies over μ
            Err(_) if op == Op::RemoveBox => Some((shape.clone(), BetaPoly::neg_beta_pow(1))),
            Err(_) => None,
        }
    } else {
        let (p, w) = op.act(i, inner)?;
        SkewShape::new(outer.clone(), p).ok().map(|s| (s, w))
    }
}

/// Applies the monomial `op_{w_1} op_{w_2} ⋯ op_{w_N}`; the rightmost factor acts first.
pub fn apply_word(op: Op, word: &[usize], elt: &SkewSum, action: Action) -> SkewSum {
    let mut cur = elt.clone();
    for &i in word.iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = apply_op(op, i, &cur, action);
    }
    cur
}

/// Operator words of `s_ν(op_1, …, op_m)`: column words of the tableaux of
/// shape `ν` over `1..=m`, relabelled `i ↦ m+1−i` for primed families.
pub fn schur_words(op: Op, shape: &SkewShape, m: usize) -> Vec<Vec<usize>> {
    enumerate_ssyt(shape, m)
        .iter()
        .map(|t| {
            let w = t.column_word();
            if op.primed() {
                w.into_iter().map(|e| m + 1 - e).collect()
            } else {
                w
            }
        })
        .collect()
}

/// `s_ν(op_1, …, op_m)` applied to `elt`.
pub fn noncomm_schur_apply(op: Op, shape: &SkewShape, m: usize, elt: &SkewSum, action: Action) -> SkewSum {
    let mut out = SkewSum::zero();
    for w in schur_words(op, shape, m) {
        out = out.add(&apply_word(op, &w, elt, action));
    }
    out
}

/// `s_ν(a_m / B_s) = Σ_{κ⊆ν} (−1)^{|ν/κ|} s_{(ν/κ)'}(B_s) s_κ(a_m)` applied to `elt`.
pub fn super_noncomm_apply(nu: &Partition, m: usize, s: usize, adding: Op, removing: Op, elt: &SkewSum) -> SkewSum {
    let mut out = SkewSum::zero();
    for kappa in nu.subpartitions() {
        let first = noncomm_schur_apply(adding, &SkewShape::straight(kappa.clone()), m, elt, Action::Dot);
        if first.is_zero() {
            continue;
        }
        let rest = SkewShape::new(nu.clone(), kappa.clone()).expect("subpartition").conjugate();
        let second = noncomm_schur_apply(removing, &rest, s, &first, Action::Dot);
        let sign = if (nu.size() - kappa.size()).is_multiple_of(2) { 1 } else { -1 };
        out = out.add(&second.scale(&BetaPoly::from_int(sign)));
    }
    out
}

/// `s_ν(F_r / (−β)^r) ∗ elt`, with the second alphabet `r` copies of `−β`.
pub fn super_negbeta_apply(nu: &Partition, op: Op, r: usize, elt: &SkewSum) -> SkewSum {
    let mut out = SkewSum::zero();
    for kappa in nu.subpartitions() {
        let rest = SkewShape::new(nu.clone(), kappa.clone()).expect("subpartition").conjugate();
        let scalar = skew_schur_at_negbeta(&rest, r);
        if scalar.is_zero() {
            continue;
        }
        let sign = if (nu.size() - kappa.size()).is_multiple_of(2) { 1 } else { -1 };
        let part = noncomm_schur_apply(op, &SkewShape::straight(kappa), r, elt, Action::Star);
        out = out.add(&part.scale(&scalar.scale(&crate::beta::rat(sign))));
    }
    out
}

/// Which family of skew polynomials an expansion is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// `G_{λ\\μ}`
    DoubleG,
    /// `G_{λ/μ}`
    SingleG,
    /// `g_{λ/μ}`
    Dual,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::DoubleG => "G//",
            Basis::SingleG => "G/",
            Basis::Dual => "g",
        }
    }
}

/// A linear combination of skew shapes read in a given basis; when
/// `validity_mod` is `Some(n)` it is only claimed modulo `I_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub basis: Basis,
    pub validity_mod: Option<usize>,
    pub terms: SkewSum,
}

impl Expansion {
    /// Maps every shape to its skew polynomial and sums, up to degree `d`.
    pub fn realize(&self, d: usize) -> SymFunc {
        let mut acc = SymFunc::zero(d);
        for (shape, c) in self.terms.terms() {
            let (o, i) = (shape.outer(), shape.inner());
            let f = match self.basis {
                Basis::DoubleG => G_skew_double(o, i, d),
                Basis::SingleG => G_skew_single_det(o, i, d),
                Basis::Dual => g_skew(o, i).with_degree_bound(d),
            };
            acc = acc.add(&f.scale(c));
        }
        acc
    }
}

fn start(lambda: &Partition, mu: &Partition) -> Result<SkewSum> {
    Ok(SkewSum::single(SkewShape::new(lambda.clone(), mu.clone())?))
}

/// `s_ν g_{λ/μ} = g(s_ν(v_{r+1}/V_r)·(λ,μ))`, exact for `r ≥ ℓ(λ)+ℓ(ν)`.
pub fn expand_sg(nu: &Partition, lambda: &Partition, mu: &Partition, r: usize) -> Result<Expansion> {
    if r < lambda.len() + nu.len() {
        return Err(Error::Precondition(format!("r = {r} < ℓ(λ) + ℓ(ν) = {}", lambda.len() + nu.len())));
    }
    let terms = super_noncomm_apply(nu, r + 1, r, Op::AddBox, Op::RemoveBox, &start(lambda, mu)?);
    Ok(Expansion { basis: Basis::Dual, validity_mod: None, terms })
}

fn expand_s_times_g_big(
    nu: &Partition,
    lambda: &Partition,
    mu: &Partition,
    r: usize,
    s: usize,
    basis: Basis,
) -> Result<Expansion> {
    if r < lambda.len() {
        return Err(Error::Precondition(format!("r = {r} < ℓ(λ) = {}", lambda.len())));
    }
    if s < mu.len() {
        return Err(Error::Precondition(format!("s = {s} < ℓ(μ) = {}", mu.len())));
    }
    if s > r {
        return Err(Error::Precondition(format!("s = {s} > r = {r}")));
    }
    let terms = super_noncomm_apply(nu, r, s, Op::AddClosed, Op::RemoveClosed, &start(lambda, mu)?);
    Ok(Expansion { basis, validity_mod: Some(r - s), terms })
}

/// `s_ν G_{λ\\μ} ≡ G_{\\}(s_ν(u_r/U_s)·(λ,μ)) mod I_{r−s}`.
#[allow(non_snake_case)]
pub fn expand_sG_double(nu: &Partition, lambda: &Partition, mu: &Partition, r: usize, s: usize) -> Result<Expansion> {
    expand_s_times_g_big(nu, lambda, mu, r, s, Basis::DoubleG)
}

/// `s_ν G_{λ/μ} ≡ G(s_ν(u_r/U_s)·(λ,μ)) mod I_{r−s}`.
#[allow(non_snake_case)]
pub fn expand_sG_single(nu: &Partition, lambda: &Partition, mu: &Partition, r: usize, s: usize) -> Result<Expansion> {
    expand_s_times_g_big(nu, lambda, mu, r, s, Basis::SingleG)
}

/// `s_ν^⊥ G_{λ/μ} = G(s_ν(V_r/(−β)^r) ∗ (λ,μ))` for `r ≥ ℓ(λ)`.
#[allow(non_snake_case)]
pub fn perp_expand_G(nu: &Partition, lambda: &Partition, mu: &Partition, r: usize) -> Result<Expansion> {
    if r < lambda.len() {
        return Err(Error::Precondition(format!("r = {r} < ℓ(λ) = {}", lambda.len())));
    }
    let terms = super_negbeta_apply(nu, Op::RemoveBox, r, &start(lambda, mu)?);
    Ok(Expansion { basis: Basis::SingleG, validity_mod: None, terms })
}

/// `s_ν^⊥ g_{λ/μ} = g(s_ν(U_r) ∗ (λ,μ))` for `r ≥ ℓ(λ)`.
pub fn perp_expand_g(nu: &Partition, lambda: &Partition, mu: &Partition, r: usize) -> Result<Expansion> {
    if r < lambda.len() {
        return Err(Error::Precondition(format!("r = {r} < ℓ(λ) = {}", lambda.len())));
    }
    let shape = SkewShape::straight(nu.clone());
    let terms = noncomm_schur_apply(Op::RemoveClosed, &shape, r, &start(lambda, mu)?, Action::Star);
    Ok(Expansion { basis: Basis::Dual, validity_mod: None, terms })
}
