//! Two-alphabet symmetric functions `Σ c · s_α(x) s_β(y)`, used for the
//! supersymmetric Schur functions `s_λ(x/y)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::lr;
use crate::partition::{Partition, SkewShape};
use crate::ring::RingElement;

type Key = (Partition, Partition);

/// Element of `Λ(x) ⊗ Λ(y)` truncated at x-degree `dx` and y-degree `dy`.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperSym {
    terms: BTreeMap<Key, BigRational>,
    dx: usize,
    dy: usize,
}

impl SuperSym {
    pub fn zero(dx: usize, dy: usize) -> Self {
        Self { terms: BTreeMap::new(), dx, dy }
    }

    pub fn one(dx: usize, dy: usize) -> Self {
        let mut f = Self::zero(dx, dy);
        f.add_term(Partition::empty(), Partition::empty(), &BigRational::one());
        f
    }

    /// `s_a(x) s_b(y)`
    pub fn basis(a: Partition, b: Partition, dx: usize, dy: usize) -> Self {
        let mut f = Self::zero(dx, dy);
        f.add_term(a, b, &BigRational::one());
        f
    }

    fn add_term(&mut self, a: Partition, b: Partition, c: &BigRational) {
        if c.is_zero() || a.size() > self.dx || b.size() > self.dy {
            return;
        }
        let key = (a, b);
        let slot = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Key, BigRational> {
        &self.terms
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.dx, self.dy)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let mut out = Self::zero(self.dx.min(other.dx), self.dy.min(other.dy));
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), b.clone(), c);
        }
        let s = BigRational::from_integer(BigInt::from(sign));
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), &(c * &s));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (dx, dy) = (self.dx.min(other.dx), self.dy.min(other.dy));
        let mut out = Self::zero(dx, dy);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                if a1.size() + a2.size() > dx || b1.size() + b2.size() > dy {
                    continue;
                }
                let c = c1 * c2;
                let xs = lr::product(a1, a2);
                let ys = lr::product(b1, b2);
                for (a, ka) in xs.iter() {
                    for (b, kb) in ys.iter() {
                        let k = BigRational::from_integer(BigInt::from(ka * kb));
                        out.add_term(a.clone(), b.clone(), &(&c * &k));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for SuperSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·s{a:?}(x)s{b:?}(y)")?;
        }
        Ok(())
    }
}

impl RingElement for SuperSym {
    fn zero_like(&self) -> Self {
        Self::zero(self.dx, self.dy)
    }
    fn one_like(&self) -> Self {
        Self::one(self.dx, self.dy)
    }
    fn is_zero(&self) -> bool {
        SuperSym::is_zero(self)
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

/// `e_i(x/y) = Σ_k (−1)^k h_k(y) e_{i−k}(x)`; zero for `i < 0`.
pub fn super_e(i: i64, dx: usize, dy: usize) -> SuperSym {
    let mut out = SuperSym::zero(dx, dy);
    for k in 0..=i.max(-1) {
        let sign = BigRational::from_integer(BigInt::from(if k % 2 == 0 { 1 } else { -1 }));
        out.add_term(Partition::column((i - k) as usize), Partition::row(k as usize), &sign);
    }
    out
}

/// `s_λ(x/y) = Σ_{μ⊆λ} (−1)^{|λ/μ|} s_{(λ/μ)'}(y) s_μ(x)`.
pub fn super_schur(lambda: &Partition, dx: usize, dy: usize) -> SuperSym {
    let mut out = SuperSym::zero(dx, dy);
    for mu in lambda.subpartitions() {
        let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("subpartition").conjugate();
        let sign: i64 = if (lambda.size() - mu.size()).is_multiple_of(2) { 1 } else { -1 };
        for (nu, k) in lr::skew_expansion(shape.outer(), shape.inner()).iter() {
            let c = BigRational::from_integer(BigInt::from(sign * *k as i64));
            out.add_term(mu.clone(), nu.clone(), &c);
        }
    }
    out
}

/// Dual Jacobi–Trudi: `det(e_{λ'_i − i + j}(x/y))` over `ℓ(λ')` rows.
pub fn super_schur_dual_jt(lambda: &Partition, dx: usize, dy: usize) -> SuperSym {
    let conj = lambda.conjugate();
    let r = conj.len();
    let matrix: Vec<Vec<SuperSym>> =
        (0..r).map(|i| (0..r).map(|j| super_e(conj.part(i) as i64 - i as i64 + j as i64, dx, dy)).collect()).collect();
    crate::ring::laplace_det(&matrix, &SuperSym::one(dx, dy))
}
