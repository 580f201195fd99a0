//! P-strict labelings of `V x [ell]` with labels in `[q]`, the Bender–Knuth
//! involutions `tau_k` and P-strict promotion.
//!
//! A labeling is stored by fibers: `fibers[p][i - 1] = f(p, i)` for
//! `p` in `A, B, C`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kreweras::Letter;
use crate::poset::{make_v, Poset};

/// Per-element label intervals `[lo, hi]`, indexed like the poset's elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionFunction {
    pub q: usize,
    pub intervals: Vec<(usize, usize)>,
}

impl RestrictionFunction {
    pub fn contains(&self, x: usize, label: usize) -> bool {
        let (lo, hi) = self.intervals[x];
        lo <= label && label <= hi
    }

    /// Checks that every `k` in every `R(p)` is attained by some labeling whose
    /// whole fiber over `p` equals `k`. Constant fibers reduce this to a single
    /// strict labeling of `P`, which is searched exhaustively.
    pub fn is_consistent(&self, poset: &Poset) -> bool {
        (0..poset.len()).all(|p| {
            let (lo, hi) = self.intervals[p];
            lo <= hi && (lo..=hi).all(|k| self.strict_labeling_with(poset, p, k))
        })
    }

    fn strict_labeling_with(&self, poset: &Poset, fixed: usize, value: usize) -> bool {
        fn go(r: &RestrictionFunction, poset: &Poset, order: &[usize], vals: &mut [usize], fixed: usize, value: usize) -> bool {
            let Some((&x, rest)) = order.split_first() else {
                return true;
            };
            let floor = poset.lower_covers(x).iter().map(|&y| vals[y] + 1).max().unwrap_or(0);
            let (lo, hi) = r.intervals[x];
            let candidates = if x == fixed { value..=value } else { lo.max(floor)..=hi };
            for v in candidates {
                if v < floor || !r.contains(x, v) {
                    continue;
                }
                vals[x] = v;
                if go(r, poset, rest, vals, fixed, value) {
                    return true;
                }
            }
            false
        }
        let order = topological(poset);
        let mut vals = vec![0; poset.len()];
        go(self, poset, &order, &mut vals, fixed, value)
    }
}

fn topological(poset: &Poset) -> Vec<usize> {
    let mut order: Vec<usize> = (0..poset.len()).collect();
    order.sort_by_key(|&x| (0..poset.len()).filter(|&y| poset.lt(y, x)).count());
    order
}

/// `R^q` on a graded poset of rank `n`: `R(p) = [rk(p) + 1, q - n + rk(p)]`.
pub fn restriction_rq(poset: &Poset, q: usize) -> Result<RestrictionFunction> {
    let n = poset.poset_rank().ok_or(Error::NotGraded)?;
    if q < n + 1 {
        return Err(Error::QTooSmall { q, min: n + 1 });
    }
    let intervals = (0..poset.len())
        .map(|x| {
            let rk = poset.rank(x).expect("graded");
            (rk + 1, q - n + rk)
        })
        .collect();
    Ok(RestrictionFunction { q, intervals })
}

/// Label bounds of `R^q` on V.
pub(crate) fn bounds(letter: Letter, q: usize) -> (usize, usize) {
    match letter {
        Letter::A => (1, q - 1),
        Letter::B | Letter::C => (2, q),
    }
}

/// A P-strict labeling of `V x [ell]` with restriction `R^q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "crate::json::LabelingJson", try_from = "crate::json::LabelingJson")]
pub struct PStrictLabeling {
    q: usize,
    fibers: [Vec<usize>; 3],
}

impl PStrictLabeling {
    pub fn new(q: usize, a: Vec<usize>, b: Vec<usize>, c: Vec<usize>) -> Result<Self> {
        if q < 2 {
            return Err(Error::QTooSmall { q, min: 2 });
        }
        let f = PStrictLabeling { q, fibers: [a, b, c] };
        f.check()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(q: usize, fibers: [Vec<usize>; 3]) -> Self {
        PStrictLabeling { q, fibers }
    }

    fn check(&self) -> Result<()> {
        let ell = self.fibers[0].len();
        if self.fibers.iter().any(|f| f.len() != ell) {
            return Err(Error::InvalidLabeling("fibers have different lengths".into()));
        }
        for letter in Letter::ALL {
            let fiber = self.fiber(letter);
            let (lo, hi) = bounds(letter, self.q);
            if let Some(v) = fiber.iter().find(|&&v| v < lo || v > hi) {
                return Err(Error::InvalidLabeling(format!("label {v} of {letter} outside [{lo}, {hi}]")));
            }
            if fiber.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidLabeling(format!("fiber {letter} is not weakly increasing")));
            }
        }
        for i in 0..ell {
            let (a, b, c) = (self.fibers[0][i], self.fibers[1][i], self.fibers[2][i]);
            if a >= b || a >= c {
                return Err(Error::InvalidLabeling(format!("layer {} is not strict: ({a}, {b}, {c})", i + 1)));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn ell(&self) -> usize {
        self.fibers[0].len()
    }

    pub fn fiber(&self, p: Letter) -> &[usize] {
        &self.fibers[p.index()]
    }

    pub fn fibers(&self) -> &[Vec<usize>; 3] {
        &self.fibers
    }

    /// `f(p, i)` with a 1-based layer index.
    pub fn value(&self, p: Letter, layer: usize) -> usize {
        self.fibers[p.index()][layer - 1]
    }

    /// Layer `L_i` as `(f(A,i), f(B,i), f(C,i))`.
    pub fn layer(&self, layer: usize) -> (usize, usize, usize) {
        let i = layer - 1;
        (self.fibers[0][i], self.fibers[1][i], self.fibers[2][i])
    }

    pub fn restriction(&self) -> RestrictionFunction {
        restriction_rq(&make_v(), self.q).expect("q >= 2")
    }

    /// Copy of this labeling with fiber `p` replaced.
    pub fn with_fiber(&self, p: Letter, fiber: Vec<usize>) -> PStrictLabeling {
        let mut fibers = self.fibers.clone();
        fibers[p.index()] = fiber;
        PStrictLabeling::new_unchecked(self.q, fibers)
    }

    /// Exchanges the B and C fibers.
    pub fn flip_bc(&self) -> PStrictLabeling {
        let [a, b, c] = self.fibers.clone();
        PStrictLabeling::new_unchecked(self.q, [a, c, b])
    }

    /// Whether `(p, layer)` can be raised by changing fiber `p` alone.
    ///
    /// Raising a label forces every equal label later in the fiber up with
    /// it; the minimal such move is feasible iff any raise is.
    pub fn is_raisable(&self, p: Letter, layer: usize) -> bool {
        let fiber = self.fiber(p);
        let v = fiber[layer - 1];
        if v + 1 > bounds(p, self.q).1 {
            return false;
        }
        if p != Letter::A {
            return true;
        }
        (layer - 1..self.ell())
            .take_while(|&j| fiber[j] == v)
            .all(|j| self.fibers[1][j].min(self.fibers[2][j]) > v + 1)
    }

    /// Whether `(p, layer)` can be lowered by changing fiber `p` alone.
    pub fn is_lowerable(&self, p: Letter, layer: usize) -> bool {
        let fiber = self.fiber(p);
        let v = fiber[layer - 1];
        if v < bounds(p, self.q).0 + 1 {
            return false;
        }
        if p == Letter::A {
            return true;
        }
        (0..layer)
            .rev()
            .take_while(|&j| fiber[j] == v)
            .all(|j| self.fibers[0][j] + 1 < v)
    }
}

impl fmt::Display for PStrictLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A={:?} B={:?} C={:?} (q={})",
            self.fibers[0], self.fibers[1], self.fibers[2], self.q
        )
    }
}

/// Weakly increasing sequences `s` with `lower[i] <= s[i] <= upper`, in
/// lexicographic order.
fn monotone_sequences(lower: Vec<usize>, upper: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = {
        let mut s = lower.clone();
        for i in 1..s.len() {
            s[i] = s[i].max(s[i - 1]);
        }
        s.iter().all(|&v| v <= upper).then_some(s)
    };
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        // Rightmost position that can still be bumped.
        let mut i = next.len();
        while i > 0 {
            i -= 1;
            if next[i] < upper {
                next[i] += 1;
                for j in i + 1..next.len() {
                    next[j] = next[j - 1].max(lower[j]);
                }
                current = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// Every labeling in `L_{V x [ell]}(R^q)`, lexicographic on the
/// concatenation of the A, B and C fibers.
pub fn enumerate_labelings(ell: usize, q: usize) -> Result<impl Iterator<Item = PStrictLabeling>> {
    if q < 2 {
        return Err(Error::QTooSmall { q, min: 2 });
    }
    Ok(monotone_sequences(vec![1; ell], q - 1).flat_map(move |a| {
        let floor: Vec<usize> = a.iter().map(|x| x + 1).collect();
        let floor_c = floor.clone();
        monotone_sequences(floor, q).flat_map(move |b| {
            let a = a.clone();
            monotone_sequences(floor_c.clone(), q)
                .map(move |c| PStrictLabeling::new_unchecked(q, [a.clone(), b.clone(), c]))
        })
    }))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FreeLabels {
    /// Positions `(p, layer)` with label `k` that are raisable.
    pub raisable: Vec<(Letter, usize)>,
    /// Positions `(p, layer)` with label `k + 1` that are lowerable.
    pub lowerable: Vec<(Letter, usize)>,
}

fn check_k(k: usize, q: usize) -> Result<()> {
    if k < 1 || k + 1 > q {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: q.saturating_sub(1),
        });
    }
    Ok(())
}

pub fn free_labels(k: usize, f: &PStrictLabeling) -> Result<FreeLabels> {
    check_k(k, f.q)?;
    let mut out = FreeLabels::default();
    for p in Letter::ALL {
        for (i, &v) in f.fiber(p).iter().enumerate() {
            if v == k && f.is_raisable(p, i + 1) {
                out.raisable.push((p, i + 1));
            } else if v == k + 1 && f.is_lowerable(p, i + 1) {
                out.lowerable.push((p, i + 1));
            }
        }
    }
    Ok(out)
}

/// The `k`-th Bender–Knuth involution.
pub fn bender_knuth_tau(k: usize, f: &PStrictLabeling) -> Result<PStrictLabeling> {
    check_k(k, f.q)?;
    Ok(tau(k, f))
}

pub(crate) fn tau(k: usize, f: &PStrictLabeling) -> PStrictLabeling {
    let mut fibers = f.fibers.clone();
    for p in Letter::ALL {
        let fiber = f.fiber(p);
        let mut region = Vec::new();
        let mut lowered = 0;
        for (i, &v) in fiber.iter().enumerate() {
            if v == k && f.is_raisable(p, i + 1) {
                region.push(i);
            } else if v == k + 1 && f.is_lowerable(p, i + 1) {
                region.push(i);
                lowered += 1;
            }
        }
        debug_assert!(region.windows(2).all(|w| w[1] == w[0] + 1));
        for (n, &i) in region.iter().enumerate() {
            fibers[p.index()][i] = if n < lowered { k } else { k + 1 };
        }
    }
    PStrictLabeling::new_unchecked(f.q, fibers)
}

/// `Pro = tau_{q-1} ... tau_2 tau_1`, with `tau_1` applied first.
pub fn promote_pstrict(f: &PStrictLabeling) -> PStrictLabeling {
    (1..f.q).fold(f.clone(), |g, k| tau(k, &g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{make_v, Poset};

    fn lab(q: usize, a: &[usize], b: &[usize], c: &[usize]) -> PStrictLabeling {
        PStrictLabeling::new(q, a.to_vec(), b.to_vec(), c.to_vec()).unwrap()
    }

    #[test]
    fn rq_intervals() {
        let v = make_v();
        let r = restriction_rq(&v, 9).unwrap();
        assert_eq!(r.intervals, vec![(1, 8), (2, 9), (2, 9)]);
        let r = restriction_rq(&v, 3).unwrap();
        assert_eq!(r.intervals, vec![(1, 2), (2, 3), (2, 3)]);
        let chain = Poset::from_names(&["x", "y"], &[("x", "y")]).unwrap();
        let r = restriction_rq(&chain, 2).unwrap();
        assert_eq!(r.intervals, vec![(1, 1), (2, 2)]);
        assert!(matches!(restriction_rq(&chain, 1), Err(Error::QTooSmall { .. })));
        for q in 2..8 {
            let r = restriction_rq(&v, q).unwrap();
            for p in Letter::ALL {
                assert_eq!(r.intervals[p.index()], bounds(p, q));
            }
        }
    }

    #[test]
    fn rq_is_maximal_consistent() {
        let v = make_v();
        for q in 3..8 {
            let r = restriction_rq(&v, q).unwrap();
            assert!(r.is_consistent(&v));
            for p in 0..3 {
                let mut wider = r.clone();
                wider.intervals[p].1 += 1;
                if wider.intervals[p].1 <= q {
                    assert!(!wider.is_consistent(&v), "q={q} p={p}");
                }
                let mut lower = r.clone();
                lower.intervals[p].0 -= 1;
                if lower.intervals[p].0 >= 1 {
                    assert!(!lower.is_consistent(&v), "q={q} p={p}");
                }
            }
        }
    }

    #[test]
    fn labeling_counts() {
        assert_eq!(enumerate_labelings(1, 3).unwrap().count(), 5);
        assert_eq!(enumerate_labelings(2, 3).unwrap().count(), 14);
        assert_eq!(enumerate_labelings(0, 3).unwrap().count(), 1);
        let all: Vec<_> = enumerate_labelings(2, 4).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(PStrictLabeling::is_valid));
    }

    #[test]
    fn validation_errors() {
        assert!(PStrictLabeling::new(3, vec![1], vec![1], vec![2]).is_err());
        assert!(PStrictLabeling::new(3, vec![2, 1], vec![3, 3], vec![3, 3]).is_err());
        assert!(PStrictLabeling::new(3, vec![1], vec![4], vec![2]).is_err());
        assert!(PStrictLabeling::new(3, vec![1], vec![2, 3], vec![2]).is_err());
    }

    #[test]
    fn free_label_examples() {
        let f = lab(3, &[1], &[3], &[3]);
        let fl = free_labels(1, &f).unwrap();
        assert_eq!(fl.raisable, vec![(Letter::A, 1)]);
        assert!(fl.lowerable.is_empty());

        let f = lab(3, &[1], &[2], &[3]);
        let fl = free_labels(2, &f).unwrap();
        assert_eq!(fl.raisable, vec![(Letter::B, 1)]);
        assert_eq!(fl.lowerable, vec![(Letter::C, 1)]);

        let f = lab(4, &[2], &[3], &[4]);
        assert_eq!(free_labels(2, &f).unwrap(), FreeLabels::default());
        assert!(free_labels(0, &f).is_err());
        assert!(free_labels(4, &f).is_err());
    }

    #[test]
    fn tau_examples() {
        let f = lab(3, &[1], &[2], &[3]);
        assert_eq!(bender_knuth_tau(2, &f).unwrap(), lab(3, &[1], &[3], &[2]));
        let f = lab(4, &[2], &[3], &[4]);
        assert_eq!(bender_knuth_tau(2, &f).unwrap(), f);
        let f = lab(3, &[1], &[3], &[3]);
        assert_eq!(promote_pstrict(&f), lab(3, &[2], &[3], &[3]));
    }

    #[test]
    fn tau_is_involution() {
        for f in enumerate_labelings(2, 4).unwrap() {
            for k in 1..4 {
                let g = bender_knuth_tau(k, &f).unwrap();
                assert!(g.is_valid(), "{g}");
                assert_eq!(bender_knuth_tau(k, &g).unwrap(), f);
            }
        }
    }

    #[test]
    fn promotion_period_single_layer() {
        for f in enumerate_labelings(1, 4).unwrap() {
            let g = (0..8).fold(f.clone(), |g, _| promote_pstrict(&g));
            assert_eq!(g, f);
        }
    }
}
