//! Exact polynomials in finitely many variables over `ℚ[β]`, used as an
//! independent check on the symmetric-function layer.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::beta::BetaPoly;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ring::{laplace_det, RingElement};
use crate::supersym::SuperSym;
use crate::symfunc::SymFunc;

/// An exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BetaPoly>,
    nvars: usize,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { terms: BTreeMap::new(), nvars }
    }

    pub fn constant(c: BetaPoly, nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(BetaPoly::one(), nvars)
    }

    /// `x_{i+1}`, zero-indexed.
    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i < nvars, "variable {i} out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BetaPoly::one())
    }

    pub fn monomial(exps: Vec<u32>, c: BetaPoly) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(Monomial(exps), &c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, BetaPoly)>>(nvars: usize, terms: I) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Parse(format!("exponent vector {e:?} has length ≠ {nvars}")));
            }
            p.add_term(Monomial(e), &c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: &BetaPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BetaPoly)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> BetaPoly {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(), nvars: self.nvars }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BetaPoly) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), &(v * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
                out.add_term(Monomial(e), &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Drops every monomial of total degree above `cap`.
    pub fn truncate_degree(&self, cap: u32) -> Self {
        Self {
            terms: self.terms.iter().filter(|(m, _)| m.degree() <= cap).map(|(m, c)| (m.clone(), c.clone())).collect(),
            nvars: self.nvars,
        }
    }

    /// Renames variable `i` to `target[i]` in a ring of `nvars` variables.
    pub fn rename_vars(&self, target: &[usize], nvars: usize) -> Self {
        assert_eq!(target.len(), self.nvars, "one target per variable");
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &k) in m.0.iter().enumerate() {
                e[target[i]] += k;
            }
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Places the variables at positions `offset..offset+self.nvars` of a larger ring.
    pub fn embed(&self, offset: usize, nvars: usize) -> Self {
        let target: Vec<usize> = (0..self.nvars).map(|i| offset + i).collect();
        self.rename_vars(&target, nvars)
    }

    pub fn eval_beta(&self, beta: &num_rational::BigRational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &BetaPoly::constant(c.eval(beta)));
        }
        out
    }

    /// Exact division by `x_i − x_j`; fails if the remainder is nonzero.
    pub fn div_linear(&self, i: usize, j: usize) -> Result<Self> {
        assert!(i != j && i < self.nvars && j < self.nvars);
        // Write self = Σ_k c_k x_i^k and divide by (x_i − x_j) synthetically.
        let mut by_power: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::take(&mut e[i]);
            by_power.entry(k).or_insert_with(|| Self::zero(self.nvars)).add_term(Monomial(e), c);
        }
        let Some(&top) = by_power.keys().next_back() else {
            return Ok(Self::zero(self.nvars));
        };
        let xj = Self::var(j, self.nvars);
        let xi = Self::var(i, self.nvars);
        let mut quotient = Self::zero(self.nvars);
        let mut carry = Self::zero(self.nvars);
        for k in (0..=top).rev() {
            let ck = by_power.remove(&k).unwrap_or_else(|| Self::zero(self.nvars));
            carry = ck.add(&carry.mul(&xj));
            if k == 0 {
                break;
            }
            quotient = quotient.add(&carry.mul(&xi.pow(k - 1)));
        }
        if !carry.is_zero() {
            return Err(Error::InexactDivision(format!("nonzero remainder dividing by x{} − x{}", i + 1, j + 1)));
        }
        Ok(quotient)
    }

    /// Exact division by `∏_{i<j} (x_i − x_j)`.
    pub fn div_vandermonde(&self) -> Result<Self> {
        let mut cur = self.clone();
        for i in 0..self.nvars {
            for j in i + 1..self.nvars {
                cur = cur.div_linear(i, j)?;
            }
        }
        Ok(cur)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "x{}", i + 1)?,
                    _ => write!(f, "x{}^{e}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl RingElement for MultiPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars)
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
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

/// `h_k(x_1, …, x_m)`; zero for `k < 0`.
pub fn complete_poly(k: i64, m: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(m);
    if k < 0 {
        return out;
    }
    if m == 0 {
        return if k == 0 { MultiPoly::one(0) } else { out };
    }
    let mut e = vec![0u32; m];
    compositions(k as u32, 0, &mut e, &mut |e| out.add_term(Monomial(e.to_vec()), &BetaPoly::one()));
    out
}

fn compositions(rest: u32, pos: usize, e: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if pos + 1 == e.len() {
        e[pos] = rest;
        emit(e);
        return;
    }
    for k in 0..=rest {
        e[pos] = k;
        compositions(rest - k, pos + 1, e, emit);
    }
}

type SchurKey = (Partition, usize);

fn schur_cache() -> &'static Mutex<HashMap<SchurKey, MultiPoly>> {
    static CACHE: std::sync::OnceLock<Mutex<HashMap<SchurKey, MultiPoly>>> = std::sync::OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `s_λ(x_1, …, x_m)` by the Jacobi–Trudi determinant `det(h_{λ_i − i + j})`.
pub fn schur_poly(lambda: &Partition, m: usize) -> MultiPoly {
    if lambda.len() > m {
        return MultiPoly::zero(m);
    }
    let key = (lambda.clone(), m);
    if let Some(p) = schur_cache().lock().unwrap().get(&key) {
        return p.clone();
    }
    let r = lambda.len();
    let matrix: Vec<Vec<MultiPoly>> = (0..r)
        .map(|i| (0..r).map(|j| complete_poly(lambda.part(i) as i64 - i as i64 + j as i64, m)).collect())
        .collect();
    let p = laplace_det(&matrix, &MultiPoly::one(m));
    schur_cache().lock().unwrap().insert(key, p.clone());
    p
}

/// `f(x_1, …, x_m, 0, 0, …)`.
pub fn eval_symfunc(f: &SymFunc, m: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(m);
    for (nu, c) in f.terms() {
        if nu.len() <= m {
            out = out.add(&schur_poly(nu, m).scale(c));
        }
    }
    out
}

/// `∏_{i<j} (x_i − x_j)` in `n` variables.
pub fn vandermonde(n: usize) -> MultiPoly {
    let mut out = MultiPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            out = out.mul(&MultiPoly::var(i, n).sub(&MultiPoly::var(j, n)));
        }
    }
    out
}

fn alternant_ratio(lambda: &Partition, n: usize, deformed: bool) -> Result<MultiPoly> {
    if lambda.len() > n {
        return Err(Error::Precondition(format!("ℓ(λ) = {} > n = {n}", lambda.len())));
    }
    let one = MultiPoly::one(n);
    let matrix: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            let x = MultiPoly::var(i, n);
            let twist = one.add(&x.scale(&BetaPoly::beta_pow(1)));
            (0..n)
                .map(|j| {
                    let p = x.pow((lambda.part(j) + n - 1 - j) as u32);
                    if deformed {
                        p.mul(&twist.pow(j as u32))
                    } else {
                        p
                    }
                })
                .collect()
        })
        .collect();
    laplace_det(&matrix, &one).div_vandermonde()
}

/// `G_λ(x_1, …, x_n) = det(x_i^{λ_j+n−j} (1+βx_i)^{j−1}) / ∏_{i<j}(x_i − x_j)`.
#[allow(non_snake_case)]
pub fn ratio_formula_G(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    alternant_ratio(lambda, n, true)
}

/// `s_λ(x_1, …, x_n) = det(x_i^{λ_j+n−j}) / ∏_{i<j}(x_i − x_j)`.
pub fn bialternant(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    alternant_ratio(lambda, n, false)
}

/// Substitutes `x_1..x_mx` for the first alphabet and `y_1..y_my` for the
/// second, as one ring of `mx + my` variables.
pub fn eval_two_alphabet(f: &SuperSym, mx: usize, my: usize) -> MultiPoly {
    let n = mx + my;
    let mut out = MultiPoly::zero(n);
    for ((a, b), c) in f.terms() {
        if a.len() > mx || b.len() > my {
            continue;
        }
        let x = schur_poly(a, mx).embed(0, n);
        let y = schur_poly(b, my).embed(mx, n);
        out = out.add(&x.mul(&y).scale(&BetaPoly::constant(c.clone())));
    }
    out
}

/// Identifies `y_k` with `x_k` in a two-alphabet evaluation with `m` letters each.
pub fn identify_alphabets(p: &MultiPoly, m: usize) -> MultiPoly {
    assert_eq!(p.nvars(), 2 * m);
    let target: Vec<usize> = (0..2 * m).map(|i| i % m).collect();
    p.rename_vars(&target, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grothendieck::G_schur;
    use crate::supersym::{super_e, super_schur};

    fn p(x: &[usize]) -> Partition {
        Partition::from_slice(x)
    }

    fn x(i: usize, n: usize) -> MultiPoly {
        MultiPoly::var(i, n)
    }

    #[test]
    fn schur_evaluations() {
        assert_eq!(eval_symfunc(&SymFunc::schur(&p(&[1]), 3), 2), x(0, 2).add(&x(1, 2)));
        assert!(eval_symfunc(&SymFunc::schur(&p(&[1, 1, 1]), 3), 2).is_zero());
        let s21 = x(0, 2).pow(2).mul(&x(1, 2)).add(&x(0, 2).mul(&x(1, 2).pow(2)));
        assert_eq!(eval_symfunc(&SymFunc::schur(&p(&[2, 1]), 3), 2), s21);
    }

    #[test]
    fn ratio_formula_small() {
        let n = 2;
        let g1 = x(0, n).add(&x(1, n)).add(&x(0, n).mul(&x(1, n)).scale(&BetaPoly::beta_pow(1)));
        assert_eq!(ratio_formula_G(&p(&[1]), n).unwrap(), g1);
        assert_eq!(ratio_formula_G(&p(&[]), n).unwrap(), MultiPoly::one(n));
        let lam = p(&[2]);
        assert_eq!(
            ratio_formula_G(&lam, n).unwrap().truncate_degree(4),
            eval_symfunc(&G_schur(&lam, 4), n).truncate_degree(4)
        );
        assert!(ratio_formula_G(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn bialternant_matches_jacobi_trudi() {
        for n in 1..=3 {
            for lam in Partition::all_up_to(4) {
                if lam.len() <= n {
                    assert_eq!(bialternant(&lam, n).unwrap(), schur_poly(&lam, n), "{lam:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn inexact_division_is_reported() {
        let f = x(0, 2).pow(2).add(&x(1, 2));
        assert!(matches!(f.div_linear(0, 1), Err(Error::InexactDivision(_))));
        let g = x(0, 2).pow(3).sub(&x(1, 2).pow(3));
        let q = g.div_linear(0, 1).unwrap();
        assert_eq!(q.mul(&x(0, 2).sub(&x(1, 2))), g);
    }

    #[test]
    fn two_alphabets() {
        let n = 2;
        assert_eq!(eval_two_alphabet(&super_schur(&p(&[1]), 2, 2), 1, 1), x(0, n).sub(&x(1, n)));
        let e1 = x(0, 3).add(&x(1, 3)).sub(&x(2, 3));
        assert_eq!(eval_two_alphabet(&super_e(1, 2, 2), 2, 1), e1);
        for lam in [p(&[1]), p(&[2]), p(&[1, 1])] {
            let v = eval_two_alphabet(&super_schur(&lam, 3, 3), 2, 2);
            assert!(identify_alphabets(&v, 2).is_zero(), "{lam:?}");
        }
    }

    #[test]
    fn graded_lex_order() {
        let f = MultiPoly::one(2).add(&x(1, 2)).add(&x(0, 2)).add(&x(0, 2).pow(2));
        let order: Vec<Vec<u32>> = f.terms().map(|(e, _)| e.to_vec()).collect();
        assert_eq!(order, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0]]);
    }
}
