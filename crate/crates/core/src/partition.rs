//! Partitions, skew shapes, and the closure maps that normalize integer
//! sequences back into partitions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers (trailing zeros removed).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// Panics on non-partitions; meant for literals.
    pub fn from_slice(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("not a partition")
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, zero-indexed, padded with zeros.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (1..=width).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Self { parts }
    }

    /// Whether the diagram of `self` contains the diagram of `mu`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// Parts as signed integers, zero padded to length `r`.
    pub fn to_seq(&self, r: usize) -> Vec<i64> {
        (0..r.max(self.len())).map(|i| self.part(i) as i64).collect()
    }

    /// Removable corners as zero-indexed row numbers.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.part(i) > self.part(i + 1)).collect()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions with `|λ| ≤ n`, graded-lex ascending.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        let mut out: Vec<Partition> = (0..=n).flat_map(Partition::all_of_size).collect();
        out.sort();
        out
    }

    /// All partitions contained in `self`, graded-lex ascending.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_contained(self, 0, usize::MAX, &mut cur, &mut out);
        out.sort();
        out
    }
}

fn gen_partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=n.min(max)).rev() {
        cur.push(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop();
    }
}

fn gen_contained(outer: &Partition, i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition { parts: cur.clone() });
    if i >= outer.len() {
        return;
    }
    for p in 1..=outer.part(i).min(max) {
        cur.push(p);
        gen_contained(outer, i + 1, p, cur, out);
        cur.pop();
    }
}

/// Graded lexicographic: by size first, then lexicographically on parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Text form: `3,1`, or `-` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::Parse(format!("{s:?} is not weakly decreasing")))
    }
}

/// A skew shape `outer/inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        Self { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// The transposed skew shape `λ'/μ'`.
    pub fn conjugate(&self) -> Self {
        Self { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// Cells `(row, col)`, zero-indexed, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len()).flat_map(|i| (self.inner.part(i)..self.outer.part(i)).map(move |j| (i, j))).collect()
    }

    pub fn is_rook_strip(&self) -> bool {
        let cells = self.cells();
        let mut rows: Vec<usize> = cells.iter().map(|c| c.0).collect();
        let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        rows.len() == cells.len() && cols.len() == cells.len()
    }
}

impl Ord for SkewShape {
    fn cmp(&self, other: &Self) -> Ordering {
        self.outer.cmp(&other.outer).then_with(|| self.inner.cmp(&other.inner))
    }
}

impl PartialOrd for SkewShape {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (o, i) = match s.split_once('/') {
            Some((o, i)) => (o, i),
            None => (s, "-"),
        };
        let outer: Partition = o.parse()?;
        let inner: Partition = i.parse()?;
        SkewShape::new(outer, inner)
    }
}

/// All `σ ⊆ μ` with `μ/σ` a rook strip, paired with `|μ/σ|`.
///
/// Only corners can be removed, and any subset of corners works. Ordered by
/// increasing number of removed boxes, then by `σ` decreasing.
pub fn rook_strip_predecessors(mu: &Partition) -> Vec<(Partition, usize)> {
    let corners = mu.corners();
    let mut out = Vec::with_capacity(1 << corners.len());
    for mask in 0u32..(1 << corners.len()) {
        let mut parts = mu.parts.clone();
        for (k, &row) in corners.iter().enumerate() {
            if mask & (1 << k) != 0 {
                parts[row] -= 1;
            }
        }
        let sigma = Partition::new(parts).expect("removing corners keeps a partition");
        out.push((sigma, mask.count_ones() as usize));
    }
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));
    out
}

fn check_ascent(n: &[i64]) -> Result<()> {
    if n.windows(2).any(|w| w[0] - w[1] < -1) || n.iter().any(|&x| x < -1) {
        return Err(Error::AscentViolation(n.to_vec()));
    }
    Ok(())
}

/// `n ↦ (n̄, |n̄| − |n|)` where `n̄_i = max(n_i, …, n_r)`: the smallest
/// diagram containing `n`.
///
/// A trailing `-1` is lifted to `0` first; that lift is also counted in the
/// exponent, so the caller's scalar is always `(-β)^exponent`.
pub fn suffix_max_closure(n: &[i64]) -> Result<(Partition, usize)> {
    check_ascent(n)?;
    let mut seq = n.to_vec();
    if seq.last() == Some(&-1) {
        *seq.last_mut().unwrap() = 0;
    }
    let mut closure = vec![0i64; seq.len()];
    let mut running = i64::MIN;
    for i in (0..seq.len()).rev() {
        running = running.max(seq[i]);
        closure[i] = running;
    }
    if closure.iter().any(|&x| x < 0) {
        return Err(Error::NegativeClosure(n.to_vec()));
    }
    let exponent = closure.iter().sum::<i64>() - n.iter().sum::<i64>();
    let parts = closure.into_iter().map(|x| x as usize).collect();
    Ok((Partition::new(parts).expect("suffix maxima are decreasing"), exponent as usize))
}

/// `n ↦ (n̲, |n| − |n̲|)` where `n̲_i = min(n_1, …, n_i)`: the largest diagram
/// contained in `n`.
pub fn prefix_min_closure(n: &[i64]) -> Result<(Partition, usize)> {
    check_ascent(n)?;
    let mut closure = vec![0i64; n.len()];
    let mut running = i64::MAX;
    for (i, &x) in n.iter().enumerate() {
        running = running.min(x);
        closure[i] = running;
    }
    if closure.iter().any(|&x| x < 0) {
        return Err(Error::NegativeClosure(n.to_vec()));
    }
    let exponent = n.iter().sum::<i64>() - closure.iter().sum::<i64>();
    let parts = closure.into_iter().map(|x| x as usize).collect();
    Ok((Partition::new(parts).expect("prefix minima are decreasing"), exponent as usize))
}
