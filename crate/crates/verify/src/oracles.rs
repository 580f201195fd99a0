//! Slow reference implementations used to cross-check the core crate.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use vpro_core::{Letter, LinearExtension, PStrictLabeling, Poset};

/// Number of Kreweras words of length `3n`: `4^n (3n)! / ((n+1)! (2n+1)!)`.
pub fn kreweras_count(n: u32) -> u128 {
    let rising: u128 = (2 * n as u128 + 2..=3 * n as u128).product();
    let fact: u128 = (1..=n as u128 + 1).product();
    4u128.pow(n) * rising / fact
}

/// Every weakly increasing sequence of length `len` with values in `lo..=hi`.
pub fn weak_sequences(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for mut rest in weak_sequences(len - 1, first, hi) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Raisable/lowerable straight from the definition: some valid labeling
/// differing from `f` only on fiber `p` has a larger (smaller) value at
/// `layer`.
pub fn free_by_search(f: &PStrictLabeling, p: Letter, layer: usize) -> (bool, bool) {
    let (lo, hi) = f.restriction().intervals[p.index()];
    let v = f.value(p, layer);
    let [a, b, c] = f.fibers().clone();
    let mut raise = false;
    let mut lower = false;
    for fiber in weak_sequences(f.ell(), lo, hi) {
        let w = fiber[layer - 1];
        if (w > v && !raise) || (w < v && !lower) {
            let mut fibers = [a.clone(), b.clone(), c.clone()];
            fibers[p.index()] = fiber;
            let [x, y, z] = fibers;
            if PStrictLabeling::new(f.q(), x, y, z).is_ok() {
                raise |= w > v;
                lower |= w < v;
            }
        }
    }
    (raise, lower)
}

/// Counts labelings by filtering every assignment of `[1, q]` to the `3 ell`
/// positions through the validator.
pub fn count_labelings_by_filter(ell: usize, q: usize) -> usize {
    let total = 3 * ell;
    let mut vals = vec![1usize; total];
    let mut count = 0;
    loop {
        let (a, rest) = vals.split_at(ell);
        let (b, c) = rest.split_at(ell);
        if PStrictLabeling::new(q, a.to_vec(), b.to_vec(), c.to_vec()).is_ok() {
            count += 1;
        }
        let Some(i) = (0..total).rev().find(|&i| vals[i] < q) else {
            return count;
        };
        vals[i] += 1;
        vals[i + 1..].fill(1);
    }
}

/// Counts order-preserving maps `P -> {0, ..., ell}` by filtering all maps.
pub fn count_ppartitions_by_filter(poset: &Poset, ell: usize) -> usize {
    let n = poset.len();
    let mut vals = vec![0usize; n];
    let mut count = 0;
    loop {
        if poset.covers().iter().all(|&(x, y)| vals[x] <= vals[y]) {
            count += 1;
        }
        let Some(i) = (0..n).rev().find(|&i| vals[i] < ell) else {
            return count;
        };
        vals[i] += 1;
        vals[i + 1..].fill(0);
    }
}

/// A uniformly chosen minimal element is labeled at each step.
pub fn random_linear_extension(poset: &Arc<Poset>, rng: &mut impl Rng) -> LinearExtension {
    let n = poset.len();
    let mut remaining_below: Vec<usize> = (0..n).map(|x| poset.lower_covers(x).len()).collect();
    let mut available: Vec<usize> = (0..n).filter(|&x| remaining_below[x] == 0).collect();
    let mut labels = vec![0; n];
    for label in 1..=n {
        available.sort_unstable();
        let &x = available.choose(rng).expect("poset is acyclic");
        available.retain(|&y| y != x);
        labels[x] = label;
        for &y in poset.upper_covers(x) {
            remaining_below[y] -= 1;
            if remaining_below[y] == 0 {
                available.push(y);
            }
        }
    }
    LinearExtension::new(Arc::clone(poset), labels).expect("topological order")
}
