//! Truncated symmetric functions over ℚ[β] in the Schur basis.
//!
//! A [`SymFunc`] stores the Schur coefficients of an element of the completed
//! ring up to a degree bound `D`: every coefficient of `s_λ` with `|λ| ≤ D`
//! is exact, and nothing is known about higher degrees. Optionally the value
//! is only meaningful modulo `I_n` (the span of `s_λ` with `ℓ(λ) > n`), which
//! is an ideal, so products and determinants can be carried out there.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::beta::{binomial, BetaPoly};
use crate::error::{Error, Result};
use crate::lr;
use crate::partition::{Partition, SkewShape};
use crate::ring::{rational_det, RingElement};
use crate::tableau::enumerate_ssyt;

/// How β is weighted when checking homogeneity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaWeight {
    /// `deg β = −1`: the `G` family, where `s_ν` carries `β^{|ν|−d}`.
    Negative,
    /// `deg β = +1`: the `g` family, where `s_ν` carries `β^{d−|ν|}`.
    Positive,
}

/// Declared homogeneous degree of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grading {
    pub degree: i64,
    pub beta_weight: BetaWeight,
}

impl Grading {
    pub fn lowering(degree: i64) -> Self {
        Self { degree, beta_weight: BetaWeight::Negative }
    }

    pub fn raising(degree: i64) -> Self {
        Self { degree, beta_weight: BetaWeight::Positive }
    }

    /// The β-exponent a coefficient of `s_ν` must have.
    pub fn expected_exponent(&self, nu: &Partition) -> Option<usize> {
        let e = match self.beta_weight {
            BetaWeight::Negative => nu.size() as i64 - self.degree,
            BetaWeight::Positive => self.degree - nu.size() as i64,
        };
        usize::try_from(e).ok()
    }
}

#[derive(Clone)]
pub struct SymFunc {
    terms: BTreeMap<Partition, BetaPoly>,
    degree_bound: usize,
    length_modulus: Option<usize>,
    grading: Option<Grading>,
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
            && self.degree_bound == other.degree_bound
            && self.length_modulus == other.length_modulus
    }
}

impl Eq for SymFunc {}

impl SymFunc {
    pub fn zero(degree_bound: usize) -> Self {
        Self { terms: BTreeMap::new(), degree_bound, length_modulus: None, grading: None }
    }

    pub fn one(degree_bound: usize) -> Self {
        Self::constant(BetaPoly::one(), degree_bound)
    }

    pub fn constant(c: BetaPoly, degree_bound: usize) -> Self {
        Self::from_terms([(Partition::empty(), c)], degree_bound)
    }

    /// `s_λ`, or zero when `|λ| > D`.
    pub fn schur(lambda: &Partition, degree_bound: usize) -> Self {
        Self::from_terms([(lambda.clone(), BetaPoly::one())], degree_bound)
    }

    /// Collects terms, merging repeats and dropping zeros and terms above the bound.
    pub fn from_terms<I>(terms: I, degree_bound: usize) -> Self
    where
        I: IntoIterator<Item = (Partition, BetaPoly)>,
    {
        let mut f = Self::zero(degree_bound);
        for (p, c) in terms {
            f.add_term(p, &c);
        }
        f
    }

    fn add_term(&mut self, p: Partition, c: &BetaPoly) {
        if c.is_zero() || p.size() > self.degree_bound {
            return;
        }
        if self.length_modulus.is_some_and(|n| p.len() > n) {
            return;
        }
        let slot = self.terms.entry(p).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn length_modulus(&self) -> Option<usize> {
        self.length_modulus
    }

    pub fn grading(&self) -> Option<Grading> {
        self.grading
    }

    pub fn with_grading(mut self, g: Grading) -> Self {
        self.grading = Some(g);
        self
    }

    /// Overrides the degree bound without touching the terms; for callers that
    /// know the value is exact to a different degree.
    pub fn with_degree_bound(mut self, d: usize) -> Self {
        self.degree_bound = d;
        self.terms.retain(|p, _| p.size() <= d);
        self
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BetaPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> BetaPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|λ|` in the support.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn scale(&self, c: &BetaPoly) -> Self {
        let mut out = self.empty_like(self.degree_bound);
        for (p, v) in &self.terms {
            out.add_term(p.clone(), &(v * c));
        }
        out
    }

    fn empty_like(&self, degree_bound: usize) -> Self {
        Self { terms: BTreeMap::new(), degree_bound, length_modulus: self.length_modulus, grading: None }
    }

    fn combined_modulus(&self, other: &Self) -> Option<usize> {
        match (self.length_modulus, other.length_modulus) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.empty_like(self.degree_bound.min(other.degree_bound));
        out.length_modulus = self.combined_modulus(other);
        for (p, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(p.clone(), c);
        }
        if self.grading == other.grading {
            out.grading = self.grading;
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = -&*v;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Schur-basis product via Littlewood–Richardson coefficients.
    pub fn mul(&self, other: &Self) -> Self {
        let bound = self.degree_bound.min(other.degree_bound);
        let mut out = self.empty_like(bound);
        out.length_modulus = self.combined_modulus(other);
        let mut acc: BTreeMap<Partition, BetaPoly> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.size() + b.size() > bound {
                    continue;
                }
                let c = ca * cb;
                for (lam, k) in lr::product(a, b).iter() {
                    if out.length_modulus.is_some_and(|n| lam.len() > n) {
                        continue;
                    }
                    let term = c.scale(&BigRational::from_integer(BigInt::from(*k)));
                    *acc.entry(lam.clone()).or_default() += &term;
                }
            }
        }
        for (p, c) in acc {
            out.add_term(p, &c);
        }
        out
    }

    /// `s_μ^⊥ f`. The result is exact up to degree `D − |μ|`, and modulo
    /// `I_{n−ℓ(μ)}` when `f` is only known modulo `I_n`.
    pub fn perp_schur(&self, mu: &Partition) -> Self {
        let mut out = self.empty_like(self.degree_bound.saturating_sub(mu.size()));
        out.length_modulus = self.length_modulus.map(|n| n.saturating_sub(mu.len()));
        let mut acc: BTreeMap<Partition, BetaPoly> = BTreeMap::new();
        for (lam, c) in &self.terms {
            if !lam.contains(mu) {
                continue;
            }
            for (nu, k) in lr::skew_expansion(lam, mu).iter() {
                let term = c.scale(&BigRational::from_integer(BigInt::from(*k)));
                *acc.entry(nu.clone()).or_default() += &term;
            }
        }
        for (p, c) in acc {
            out.add_term(p, &c);
        }
        out
    }

    /// `g^⊥ f` for a finitely supported `g`.
    pub fn perp(&self, g: &SymFunc) -> Self {
        let top = g.max_degree().unwrap_or(0);
        let max_len = g.terms.keys().map(Partition::len).max().unwrap_or(0);
        let mut out = self.empty_like(self.degree_bound.saturating_sub(top));
        out.length_modulus = self.length_modulus.map(|n| n.saturating_sub(max_len));
        for (kappa, c) in &g.terms {
            let part = self.perp_schur(kappa).scale(c);
            for (p, v) in &part.terms {
                out.add_term(p.clone(), v);
            }
        }
        out
    }

    /// `g^⊥ f` for a polynomial `f` whose stored terms are complete in every
    /// degree; the result gets the supplied bound instead of a pessimistic one.
    pub fn perp_exact(&self, g: &SymFunc, bound: usize) -> Self {
        let mut out = self.empty_like(bound);
        for (kappa, c) in &g.terms {
            for (p, v) in &self.perp_schur(kappa).scale(c).terms {
                out.add_term(p.clone(), v);
            }
        }
        out
    }

    /// Hall inner product `⟨self, g⟩`; requires `self` to be exact up to the
    /// top degree of `g`.
    pub fn hall_inner(&self, g: &SymFunc) -> Result<BetaPoly> {
        let needed = g.max_degree().unwrap_or(0);
        if self.degree_bound < needed {
            return Err(Error::DegreeBound { bound: self.degree_bound, needed });
        }
        let mut acc = BetaPoly::zero();
        for (lam, c) in &g.terms {
            if let Some(v) = self.terms.get(lam) {
                acc += &(v * c);
            }
        }
        Ok(acc)
    }

    /// `ι_n ∘ π_n`: drops every `s_λ` with `ℓ(λ) > n`. A value known modulo
    /// `I_k` with `n ≤ k` is fully determined afterwards.
    pub fn truncate_length(&self, n: usize) -> Self {
        let mut out = self.clone();
        out.terms.retain(|p, _| p.len() <= n);
        if out.length_modulus.is_some_and(|k| n <= k) {
            out.length_modulus = None;
        }
        out
    }

    /// Reinterprets the value in `Λ/I_n`; later products drop long terms.
    pub fn modulo_length(&self, n: usize) -> Self {
        let mut out = self.clone();
        out.terms.retain(|p, _| p.len() <= n);
        out.length_modulus = Some(out.length_modulus.map_or(n, |m| m.min(n)));
        out
    }

    /// Lowers the degree bound to `d` (no-op if already lower).
    pub fn truncate_degree(&self, d: usize) -> Self {
        let mut out = self.clone();
        out.degree_bound = out.degree_bound.min(d);
        let bound = out.degree_bound;
        out.terms.retain(|p, _| p.size() <= bound);
        out
    }

    /// Drops every coefficient term of β-degree above `b`.
    pub fn truncate_beta(&self, b: usize) -> Self {
        let mut out = self.empty_like(self.degree_bound);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &c.truncate_beta(b));
        }
        out
    }

    /// Substitutes a rational value for β.
    pub fn eval_beta(&self, beta: &BigRational) -> Self {
        let mut out = self.empty_like(self.degree_bound);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &BetaPoly::constant(c.eval(beta)));
        }
        out
    }

    /// Whether every coefficient is the monomial the grading dictates.
    pub fn satisfies_grading(&self, g: Grading) -> bool {
        self.terms.iter().all(|(nu, c)| match g.expected_exponent(nu) {
            Some(e) => c.monomial_exponent() == Some(e),
            None => false,
        })
    }

    /// Checks the stored grading flag; `true` when no flag is set.
    pub fn is_consistently_graded(&self) -> bool {
        self.grading.is_none_or(|g| self.satisfies_grading(g))
    }

    /// Whether two values agree on every `s_λ` with `|λ| ≤ d`.
    pub fn agrees_to_degree(&self, other: &Self, d: usize) -> bool {
        let a = self.truncate_degree(d);
        let b = other.truncate_degree(d);
        a.terms == b.terms
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [D={}", self.degree_bound)?;
        if let Some(n) = self.length_modulus {
            write!(f, ", mod I_{n}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})s{p:?}")?;
        }
        Ok(())
    }
}

impl RingElement for SymFunc {
    fn zero_like(&self) -> Self {
        self.empty_like(self.degree_bound)
    }
    fn one_like(&self) -> Self {
        let mut one = self.empty_like(self.degree_bound);
        one.add_term(Partition::empty(), &BetaPoly::one());
        one
    }
    fn is_zero(&self) -> bool {
        SymFunc::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

/// `h_i`: `s_(i)` for `i > 0`, `1` for `i = 0`, `0` for `i < 0`.
pub fn h_gen(i: i64, degree_bound: usize) -> SymFunc {
    match i {
        i if i < 0 => SymFunc::zero(degree_bound),
        i => SymFunc::schur(&Partition::row(i as usize), degree_bound),
    }
}

/// `e_i`: `s_(1^i)` for `i > 0`, `1` for `i = 0`, `0` for `i < 0`.
pub fn e_gen(i: i64, degree_bound: usize) -> SymFunc {
    match i {
        i if i < 0 => SymFunc::zero(degree_bound),
        i => SymFunc::schur(&Partition::column(i as usize), degree_bound),
    }
}

/// `s_{λ/μ}(−β, …, −β)` with `r` copies of `−β`.
pub fn skew_schur_at_negbeta(shape: &SkewShape, r: usize) -> BetaPoly {
    let count = enumerate_ssyt(shape, r).len() as i64;
    let mut out = BetaPoly::neg_beta_pow(shape.size());
    out = out.scale(&BigRational::from_integer(BigInt::from(count)));
    out
}

/// `s_λ(1^m)` from the Jacobi–Trudi determinant `det(h_{λ_i−i+j}(1^m))`,
/// using `h_k(1^m) = C(m+k−1, k)`.
pub fn schur_at_ones(lambda: &Partition, m: usize) -> BigInt {
    let r = lambda.len();
    let h = |k: i64| -> BigRational {
        if k < 0 {
            BigRational::zero()
        } else {
            BigRational::from_integer(binomial(m as i64 + k - 1, k))
        }
    };
    let matrix: Vec<Vec<BigRational>> =
        (0..r).map(|i| (0..r).map(|j| h(lambda.part(i) as i64 - i as i64 + j as i64)).collect()).collect();
    let d = rational_det(&matrix);
    assert!(d.is_integer());
    if r == 0 {
        return BigInt::one();
    }
    d.to_integer()
}
