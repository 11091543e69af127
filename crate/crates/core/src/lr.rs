//! Littlewood–Richardson coefficients by counting LR tableaux.
//!
//! Skew expansions `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν` and products `s_μ s_ν` are
//! memoized in process-wide caches behind a `Mutex`; cached values are pure
//! functions of their keys so the lock only affects timing.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::partition::Partition;

type Expansion = Arc<Vec<(Partition, u64)>>;

fn skew_cache() -> &'static Mutex<HashMap<(Partition, Partition), Expansion>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), Expansion>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn product_cache() -> &'static Mutex<HashMap<(Partition, Partition), Expansion>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), Expansion>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Schur expansion of the skew Schur function `s_{outer/inner}`.
pub fn skew_expansion(outer: &Partition, inner: &Partition) -> Expansion {
    let key = (outer.clone(), inner.clone());
    if let Some(v) = skew_cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = Arc::new(compute_skew(outer, inner));
    skew_cache().lock().unwrap().insert(key, v.clone());
    v
}

/// `c^λ_{μν}`
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    skew_expansion(lambda, mu).iter().find(|(p, _)| p == nu).map_or(0, |(_, c)| *c)
}

/// Schur expansion of `s_a · s_b`.
pub fn product(a: &Partition, b: &Partition) -> Expansion {
    let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if let Some(v) = product_cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let (a, b) = (&key.0, &key.1);
    let n = a.size() + b.size();
    let max_part = a.part(0) + b.part(0);
    let max_len = a.len() + b.len();
    let mut out = Vec::new();
    for lam in Partition::all_of_size(n) {
        if lam.part(0) > max_part || lam.len() > max_len || !lam.contains(a) || !lam.contains(b) {
            continue;
        }
        let c = lr_coefficient(&lam, a, b);
        if c != 0 {
            out.push((lam, c));
        }
    }
    out.sort();
    let v = Arc::new(out);
    product_cache().lock().unwrap().insert(key, v.clone());
    v
}

/// Fills the skew shape in reverse reading order (rows top to bottom, each
/// right to left) keeping the word a lattice word, and tallies contents.
fn compute_skew(outer: &Partition, inner: &Partition) -> Vec<(Partition, u64)> {
    if !outer.contains(inner) {
        return Vec::new();
    }
    let mut cells = Vec::new();
    for i in 0..outer.len() {
        for j in (inner.part(i)..outer.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..outer.len()).map(|i| vec![0; outer.part(i)]).collect();
    let mut counts = vec![0usize; outer.len() + 2];
    let mut tally: BTreeMap<Partition, u64> = BTreeMap::new();
    fill(outer, inner, &cells, 0, &mut grid, &mut counts, &mut tally);
    tally.into_iter().collect()
}

fn fill(
    outer: &Partition,
    inner: &Partition,
    cells: &[(usize, usize)],
    k: usize,
    grid: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
    tally: &mut BTreeMap<Partition, u64>,
) {
    if k == cells.len() {
        let content: Vec<usize> = counts[1..].iter().copied().take_while(|&c| c > 0).collect();
        *tally.entry(Partition::new(content).expect("lattice word content")).or_default() += 1;
        return;
    }
    let (i, j) = cells[k];
    // entry must not exceed the one to its right
    let hi_right = if j + 1 < outer.part(i) { grid[i][j + 1] } else { usize::MAX };
    let lo = if i > 0 && j >= inner.part(i - 1) { grid[i - 1][j] + 1 } else { 1 };
    let hi = hi_right.min(i + 1);
    for e in lo..=hi {
        if e > 1 && counts[e] + 1 > counts[e - 1] {
            continue;
        }
        grid[i][j] = e;
        counts[e] += 1;
        fill(outer, inner, cells, k + 1, grid, counts, tally);
        counts[e] -= 1;
    }
    grid[i][j] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &[usize]) -> Partition {
        Partition::from_slice(x)
    }

    #[test]
    fn known_coefficients() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[])), 1);
        assert_eq!(lr_coefficient(&p(&[4, 2]), &p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1, 1])), 0);
    }

    #[test]
    fn pieri_products() {
        let v = product(&p(&[1]), &p(&[1]));
        assert_eq!(*v, vec![(p(&[1, 1]), 1), (p(&[2]), 1)]);
        let v = product(&p(&[2, 1]), &p(&[]));
        assert_eq!(*v, vec![(p(&[2, 1]), 1)]);
    }

    #[test]
    fn lr_symmetric_in_factors() {
        for lam in Partition::all_up_to(6) {
            for mu in lam.subpartitions() {
                for (nu, c) in skew_expansion(&lam, &mu).iter() {
                    assert_eq!(lr_coefficient(&lam, nu, &mu), *c);
                }
            }
        }
    }
}
