//! Finite posets, the V poset, products with chains and linear extensions.
//!
//! Elements are addressed by dense indices `0..len`; each index carries an
//! opaque [`ElementId`] used for display and serialization. The full order
//! relation is computed once at construction.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementId {
    Atom(String),
    /// An element of a product `P x [k]`: base element and layer (1-based).
    Pair(Box<ElementId>, usize),
}

impl ElementId {
    pub fn atom(name: impl Into<String>) -> Self {
        ElementId::Atom(name.into())
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementId::Atom(s) => f.write_str(s),
            ElementId::Pair(p, i) => write!(f, "({p},{i})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Poset {
    ids: Vec<ElementId>,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    /// Row-major `len x len` matrix of `a <= b`.
    leq: Vec<bool>,
    ranks: Option<Vec<usize>>,
}

impl Poset {
    /// Builds a poset from element ids and cover pairs `(lower, upper)`.
    ///
    /// Rejects cycles and covers implied by transitivity. The grading is
    /// detected automatically.
    pub fn new(ids: Vec<ElementId>, covers: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = ids.len();
        let mut seen = HashSet::new();
        for id in &ids {
            if !seen.insert(id) {
                return Err(Error::DuplicateElement(id.to_string()));
            }
        }

        let mut covers: Vec<(usize, usize)> = covers.into_iter().collect();
        covers.sort_unstable();
        covers.dedup();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(Error::UnknownCoverElement(a, b));
            }
            if a == b {
                return Err(Error::Cycle);
            }
            upper[a].push(b);
            lower[b].push(a);
        }

        let topo = topological_order(&upper, &lower).ok_or(Error::Cycle)?;

        // Reflexive-transitive closure, processed from the top down.
        let mut leq = vec![false; n * n];
        for &x in topo.iter().rev() {
            leq[x * n + x] = true;
            for &y in &upper[x] {
                for z in 0..n {
                    if leq[y * n + z] {
                        leq[x * n + z] = true;
                    }
                }
            }
        }

        for &(a, b) in &covers {
            if (0..n).any(|c| c != a && c != b && leq[a * n + c] && leq[c * n + b]) {
                return Err(Error::RedundantCover(a, b));
            }
        }

        let mut poset = Poset {
            ids,
            covers,
            upper,
            lower,
            leq,
            ranks: None,
        };
        poset.ranks = poset.detect_grading(&topo);
        Ok(poset)
    }

    /// Convenience constructor from atom names and named cover pairs.
    pub fn from_names(names: &[&str], covers: &[(&str, &str)]) -> Result<Self> {
        let ids: Vec<ElementId> = names.iter().map(|s| ElementId::atom(*s)).collect();
        let find = |s: &str| {
            names
                .iter()
                .position(|x| *x == s)
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let pairs = covers
            .iter()
            .map(|(a, b)| Ok((find(a)?, find(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Poset::new(ids, pairs)
    }

    fn detect_grading(&self, topo: &[usize]) -> Option<Vec<usize>> {
        let n = self.len();
        if n == 0 {
            return None;
        }
        let mut rank = vec![0usize; n];
        for &x in topo {
            rank[x] = self.lower[x].iter().map(|&y| rank[y] + 1).max().unwrap_or(0);
        }
        if self.covers.iter().any(|&(a, b)| rank[b] != rank[a] + 1) {
            return None;
        }
        let mut maximal = (0..n).filter(|&x| self.upper[x].is_empty()).map(|x| rank[x]);
        let top = maximal.next()?;
        if maximal.all(|r| r == top) {
            Some(rank)
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[ElementId] {
        &self.ids
    }

    pub fn id(&self, x: usize) -> &ElementId {
        &self.ids[x]
    }

    pub fn index_of(&self, id: &ElementId) -> Option<usize> {
        self.ids.iter().position(|e| e == id)
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// True when `a` covers `b` or `b` covers `a`.
    pub fn share_cover(&self, a: usize, b: usize) -> bool {
        self.upper[a].contains(&b) || self.upper[b].contains(&a)
    }

    pub fn is_graded(&self) -> bool {
        self.ranks.is_some()
    }

    pub fn rank(&self, x: usize) -> Option<usize> {
        self.ranks.as_ref().map(|r| r[x])
    }

    /// The rank `n` of a graded poset: every maximal chain has `n + 1` elements.
    pub fn poset_rank(&self) -> Option<usize> {
        self.ranks.as_ref().and_then(|r| r.iter().copied().max())
    }

    /// Returns `Some(n)` when this poset is exactly `product_with_chain(V, n)`.
    pub fn v_chain_length(&self) -> Option<usize> {
        let n = self.len();
        if n == 0 || !n.is_multiple_of(3) {
            return None;
        }
        let k = n / 3;
        let reference = product_with_chain(&make_v(), k).ok()?;
        (*self == reference).then_some(k)
    }

    /// True when listing the elements by index is itself a linear extension.
    pub fn index_order_is_linear(&self) -> bool {
        self.covers.iter().all(|&(a, b)| a < b)
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.covers == other.covers
    }
}

impl Eq for Poset {}

impl PartialOrd for Poset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ids
            .cmp(&other.ids)
            .then_with(|| self.covers.cmp(&other.covers))
    }
}

fn topological_order(upper: &[Vec<usize>], lower: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = upper.len();
    let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
    let mut ready: Vec<usize> = (0..n).rev().filter(|&x| indegree[x] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = ready.pop() {
        order.push(x);
        for &y in &upper[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                ready.push(y);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// The poset V on `{A, B, C}` with covers `A < B` and `A < C`.
pub fn make_v() -> Poset {
    Poset::from_names(&["A", "B", "C"], &[("A", "B"), ("A", "C")]).expect("V is a valid poset")
}

/// `base x [k]`. Elements are ordered fiber-major: `(p, i)` has index
/// `p * k + (i - 1)`.
pub fn product_with_chain(base: &Poset, k: usize) -> Result<Poset> {
    if k < 1 {
        return Err(Error::EmptyChain(k));
    }
    let idx = |p: usize, i: usize| p * k + (i - 1);
    let ids = base
        .ids()
        .iter()
        .flat_map(|p| (1..=k).map(move |i| ElementId::Pair(Box::new(p.clone()), i)))
        .collect();
    let mut covers = Vec::new();
    for &(p, p2) in base.covers() {
        for i in 1..=k {
            covers.push((idx(p, i), idx(p2, i)));
        }
    }
    for p in 0..base.len() {
        for i in 1..k {
            covers.push((idx(p, i), idx(p, i + 1)));
        }
    }
    Poset::new(ids, covers)
}

/// An order-preserving bijection from the poset onto `{1..m}`.
#[derive(Clone, Debug)]
pub struct LinearExtension {
    poset: Arc<Poset>,
    labels: Vec<usize>,
}

impl LinearExtension {
    pub fn new(poset: Arc<Poset>, labels: Vec<usize>) -> Result<Self> {
        let m = poset.len();
        if labels.len() != m {
            return Err(Error::InvalidLinearExtension(format!(
                "{} labels for {} elements",
                labels.len(),
                m
            )));
        }
        let mut seen = vec![false; m + 1];
        for &l in &labels {
            if l == 0 || l > m || seen[l] {
                return Err(Error::InvalidLinearExtension(format!("label {l} repeated or out of range")));
            }
            seen[l] = true;
        }
        for &(a, b) in poset.covers() {
            if labels[a] >= labels[b] {
                return Err(Error::InvalidLinearExtension(format!(
                    "{} < {} but labels are {} >= {}",
                    poset.id(a),
                    poset.id(b),
                    labels[a],
                    labels[b]
                )));
            }
        }
        Ok(LinearExtension { poset, labels })
    }

    pub(crate) fn from_parts_unchecked(poset: Arc<Poset>, labels: Vec<usize>) -> Self {
        LinearExtension { poset, labels }
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    /// Labels in element-index order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> usize {
        self.labels[x]
    }

    /// Elements listed by increasing label.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.labels.len()];
        for (x, &l) in self.labels.iter().enumerate() {
            seq[l - 1] = x;
        }
        seq
    }

    pub(crate) fn labels_mut(&mut self) -> &mut Vec<usize> {
        &mut self.labels
    }
}

impl PartialEq for LinearExtension {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && (Arc::ptr_eq(&self.poset, &other.poset) || self.poset == other.poset)
    }
}

impl Eq for LinearExtension {}

impl std::hash::Hash for LinearExtension {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
    }
}

impl PartialOrd for LinearExtension {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LinearExtension {
    fn cmp(&self, other: &Self) -> Ordering {
        self.labels.cmp(&other.labels).then_with(|| {
            if Arc::ptr_eq(&self.poset, &other.poset) {
                Ordering::Equal
            } else {
                self.poset.cmp(&other.poset)
            }
        })
    }
}

/// All linear extensions, in lexicographic order of the label vector read in
/// element order.
pub fn linear_extensions(poset: &Arc<Poset>) -> impl Iterator<Item = LinearExtension> {
    let n = poset.len();
    let mut indegree: Vec<usize> = (0..n).map(|x| poset.lower_covers(x).len()).collect();
    let mut labels = vec![0usize; n];
    let mut out = Vec::new();
    extend_all(poset, &mut indegree, &mut labels, 1, &mut out);
    out.sort_unstable();
    let poset = Arc::clone(poset);
    out.into_iter()
        .map(move |labels| LinearExtension::from_parts_unchecked(Arc::clone(&poset), labels))
}

fn extend_all(
    poset: &Poset,
    indegree: &mut [usize],
    labels: &mut [usize],
    next: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if next > labels.len() {
        out.push(labels.to_vec());
        return;
    }
    for x in 0..labels.len() {
        if labels[x] == 0 && indegree[x] == 0 {
            labels[x] = next;
            for &y in poset.upper_covers(x) {
                indegree[y] -= 1;
            }
            extend_all(poset, indegree, labels, next + 1, out);
            for &y in poset.upper_covers(x) {
                indegree[y] += 1;
            }
            labels[x] = 0;
        }
    }
}

/// The lexicographically first linear extension.
pub fn first_linear_extension(poset: &Arc<Poset>) -> LinearExtension {
    if poset.index_order_is_linear() {
        return LinearExtension::from_parts_unchecked(Arc::clone(poset), (1..=poset.len()).collect());
    }
    linear_extensions(poset)
        .next()
        .expect("a finite poset has a linear extension")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_shape() {
        let v = make_v();
        assert_eq!(v.len(), 3);
        assert_eq!(v.covers().len(), 2);
        assert_eq!(v.rank(0), Some(0));
        assert_eq!(v.rank(1), Some(1));
        assert_eq!(v.poset_rank(), Some(1));
        assert!(!v.comparable(1, 2));
        assert!(v.lt(0, 2));
    }

    #[test]
    fn products() {
        let v = make_v();
        let p1 = product_with_chain(&v, 1).unwrap();
        assert_eq!((p1.len(), p1.covers().len()), (3, 2));
        let p2 = product_with_chain(&v, 2).unwrap();
        assert_eq!((p2.len(), p2.covers().len()), (6, 7));
        let p6 = product_with_chain(&v, 6).unwrap();
        assert_eq!((p6.len(), p6.covers().len()), (18, 27));
        assert_eq!(p6.poset_rank(), Some(6));
        for p in 0..3 {
            for i in 1..=6 {
                assert_eq!(p6.rank(p * 6 + i - 1), Some(v.rank(p).unwrap() + i - 1));
            }
        }
        assert_eq!(p6.v_chain_length(), Some(6));
        assert_eq!(v.v_chain_length(), None);
        assert!(matches!(product_with_chain(&v, 0), Err(Error::EmptyChain(0))));
    }

    #[test]
    fn rejects_bad_covers() {
        let ids = vec![ElementId::atom("x"), ElementId::atom("y"), ElementId::atom("z")];
        assert_eq!(Poset::new(ids.clone(), [(0, 1), (1, 0)]), Err(Error::Cycle));
        assert_eq!(
            Poset::new(ids.clone(), [(0, 1), (1, 2), (0, 2)]),
            Err(Error::RedundantCover(0, 2))
        );
        assert_eq!(Poset::new(ids, [(0, 5)]), Err(Error::UnknownCoverElement(0, 5)));
    }

    #[test]
    fn ungraded_poset() {
        // x < y < z and x < w < z plus x < u with u maximal: chains of length 3 and 2.
        let p = Poset::from_names(&["x", "y", "z", "u"], &[("x", "y"), ("y", "z"), ("x", "u")]).unwrap();
        assert!(!p.is_graded());
    }

    #[test]
    fn extension_counts() {
        let v = make_v();
        let counts: Vec<usize> = (1..=3)
            .map(|k| linear_extensions(&Arc::new(product_with_chain(&v, k).unwrap())).count())
            .collect();
        assert_eq!(counts, vec![2, 16, 192]);
        let empty = Arc::new(Poset::new(vec![], []).unwrap());
        assert_eq!(linear_extensions(&empty).count(), 1);
    }

    #[test]
    fn extensions_are_sorted_and_valid() {
        let p = Arc::new(product_with_chain(&make_v(), 2).unwrap());
        let all: Vec<_> = linear_extensions(&p).collect();
        assert!(all.windows(2).all(|w| w[0].labels() < w[1].labels()));
        for e in &all {
            LinearExtension::new(Arc::clone(&p), e.labels().to_vec()).unwrap();
        }
        assert_eq!(first_linear_extension(&p), all[0]);
    }
}
