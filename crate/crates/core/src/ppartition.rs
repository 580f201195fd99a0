//! `ell`-bounded P-partitions, piecewise-linear toggles, rowmotion,
//! toggle-promotion and poset automorphisms.
//!
//! Values are integers in `0..=ell`, i.e. the points of the order polytope
//! with denominator `ell` scaled by `ell`.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::kreweras::Letter;
use crate::poset::{ElementId, LinearExtension, Poset};

#[derive(Clone, Debug)]
pub struct PPartition {
    poset: Arc<Poset>,
    ell: usize,
    values: Vec<usize>,
}

impl PPartition {
    pub fn new(poset: Arc<Poset>, ell: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != poset.len() {
            return Err(Error::InvalidPPartition(format!(
                "{} values for {} elements",
                values.len(),
                poset.len()
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v > ell) {
            return Err(Error::InvalidPPartition(format!("value {v} exceeds {ell}")));
        }
        for &(a, b) in poset.covers() {
            if values[a] > values[b] {
                return Err(Error::InvalidPPartition(format!(
                    "{} <= {} but {} > {}",
                    poset.id(a),
                    poset.id(b),
                    values[a],
                    values[b]
                )));
            }
        }
        Ok(PPartition { poset, ell, values })
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn value(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn is_valid(&self) -> bool {
        PPartition::new(Arc::clone(&self.poset), self.ell, self.values.clone()).is_ok()
    }

    fn toggle_in_place(&mut self, x: usize) {
        let above = self
            .poset
            .upper_covers(x)
            .iter()
            .map(|&y| self.values[y])
            .min()
            .unwrap_or(self.ell);
        let below = self
            .poset
            .lower_covers(x)
            .iter()
            .map(|&y| self.values[y])
            .max()
            .unwrap_or(0);
        self.values[x] = above + below - self.values[x];
    }

    fn same_poset(&self, other: &Poset) -> bool {
        std::ptr::eq(self.poset.as_ref(), other) || *self.poset == *other
    }
}

impl PartialEq for PPartition {
    fn eq(&self, other: &Self) -> bool {
        self.ell == other.ell && self.values == other.values && other.same_poset(&self.poset)
    }
}

impl Eq for PPartition {}

impl Hash for PPartition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ell.hash(state);
        self.values.hash(state);
    }
}

impl PartialOrd for PPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ell
            .cmp(&other.ell)
            .then_with(|| self.values.cmp(&other.values))
            .then_with(|| {
                if Arc::ptr_eq(&self.poset, &other.poset) {
                    Ordering::Equal
                } else {
                    self.poset.cmp(&other.poset)
                }
            })
    }
}

/// All order-preserving maps `P -> {0..ell}`, lexicographic in element order.
pub fn enumerate_ppartitions(poset: &Arc<Poset>, ell: usize) -> Vec<PPartition> {
    // Any order-consistent partial assignment extends to a full one, so a
    // plain backtrack in element order never dead-ends.
    fn go(poset: &Poset, ell: usize, vals: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = vals.len();
        if x == poset.len() {
            out.push(vals.clone());
            return;
        }
        let lo = (0..x).filter(|&y| poset.leq(y, x)).map(|y| vals[y]).max().unwrap_or(0);
        let hi = (0..x).filter(|&y| poset.leq(x, y)).map(|y| vals[y]).min().unwrap_or(ell);
        for v in lo..=hi {
            vals.push(v);
            go(poset, ell, vals, out);
            vals.pop();
        }
    }
    let mut out = Vec::new();
    go(poset, ell, &mut Vec::with_capacity(poset.len()), &mut out);
    out.into_iter()
        .map(|values| PPartition {
            poset: Arc::clone(poset),
            ell,
            values,
        })
        .collect()
}

/// Reflects the value at `x` within `[max below, min above]`, where the
/// virtual bottom contributes 0 and the virtual top contributes `ell`.
pub fn toggle(x: usize, f: &PPartition) -> Result<PPartition> {
    if x >= f.poset.len() {
        return Err(Error::UnknownElement(x.to_string()));
    }
    let mut g = f.clone();
    g.toggle_in_place(x);
    Ok(g)
}

/// Toggle addressed by element id.
pub fn toggle_id(id: &ElementId, f: &PPartition) -> Result<PPartition> {
    let x = f.poset.index_of(id).ok_or_else(|| Error::UnknownElement(id.to_string()))?;
    toggle(x, f)
}

/// `row = tau_{p_1} ... tau_{p_m}`: toggles from the top of the linear
/// extension down to its bottom.
pub fn rowmotion(f: &PPartition, ext: &LinearExtension) -> Result<PPartition> {
    if !f.same_poset(ext.poset()) {
        return Err(Error::PosetMismatch);
    }
    Ok(rowmotion_along(f, &ext.sequence()))
}

/// Rowmotion with a precomputed element sequence (bottom to top).
pub fn rowmotion_along(f: &PPartition, sequence: &[usize]) -> PPartition {
    let mut g = f.clone();
    for &x in sequence.iter().rev() {
        g.toggle_in_place(x);
    }
    g
}

/// Toggle groups of toggle-promotion on `V x [q - 2]`, in application order.
///
/// Group `k` holds the elements `(p, i)` with `i = q - n + rk(p) - k`, where
/// `n = 1` is the rank of V.
pub fn togpro_groups(q: usize) -> Result<Vec<Vec<usize>>> {
    if q < 3 {
        return Err(Error::QTooSmall { q, min: 3 });
    }
    let layers = q - 2;
    let mut groups = Vec::new();
    for k in 1.. {
        let mut group = Vec::new();
        let mut any_left = false;
        for p in Letter::ALL {
            let rk = usize::from(p != Letter::A);
            // i = q - 1 + rk - k, as a signed quantity.
            let i = (q + rk) as isize - 1 - k as isize;
            if i >= 1 {
                any_left = true;
            }
            if i >= 1 && i as usize <= layers {
                group.push(p.index() * layers + i as usize - 1);
            }
        }
        if !any_left {
            break;
        }
        groups.push(group);
    }
    Ok(groups)
}

pub fn togpro(f: &PPartition, q: usize) -> Result<PPartition> {
    if q < 3 || f.poset.v_chain_length() != Some(q - 2) {
        return Err(Error::PosetMismatch);
    }
    Ok(togpro_with(f, &togpro_groups(q)?))
}

pub fn togpro_with(f: &PPartition, groups: &[Vec<usize>]) -> PPartition {
    let mut g = f.clone();
    for group in groups {
        for &x in group {
            g.toggle_in_place(x);
        }
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetAutomorphism {
    poset: Arc<Poset>,
    mapping: Vec<usize>,
}

impl PosetAutomorphism {
    pub fn new(poset: Arc<Poset>, mapping: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        if mapping.len() != n {
            return Err(Error::NotAnAutomorphism("wrong length".into()));
        }
        let mut hit = vec![false; n];
        for &y in &mapping {
            if y >= n || hit[y] {
                return Err(Error::NotAnAutomorphism("not a bijection".into()));
            }
            hit[y] = true;
        }
        let mut image: Vec<(usize, usize)> = poset.covers().iter().map(|&(a, b)| (mapping[a], mapping[b])).collect();
        image.sort_unstable();
        if image != poset.covers() {
            return Err(Error::NotAnAutomorphism("covers not preserved".into()));
        }
        Ok(PosetAutomorphism { poset, mapping })
    }

    pub fn identity(poset: Arc<Poset>) -> Self {
        let mapping = (0..poset.len()).collect();
        PosetAutomorphism { poset, mapping }
    }

    /// Exchanges B and C in V or layerwise in `V x [k]`.
    pub fn flip(poset: Arc<Poset>) -> Result<Self> {
        fn swap(id: &ElementId) -> ElementId {
            match id {
                ElementId::Atom(s) if s == "B" => ElementId::atom("C"),
                ElementId::Atom(s) if s == "C" => ElementId::atom("B"),
                ElementId::Pair(p, i) => ElementId::Pair(Box::new(swap(p)), *i),
                other => other.clone(),
            }
        }
        let mapping = poset
            .ids()
            .iter()
            .map(|id| {
                poset
                    .index_of(&swap(id))
                    .ok_or_else(|| Error::NotAnAutomorphism(format!("no image for {id}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PosetAutomorphism::new(poset, mapping)
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn image(&self, x: usize) -> usize {
        self.mapping[x]
    }

    pub fn inverse(&self) -> PosetAutomorphism {
        let mut mapping = vec![0; self.mapping.len()];
        for (x, &y) in self.mapping.iter().enumerate() {
            mapping[y] = x;
        }
        PosetAutomorphism {
            poset: Arc::clone(&self.poset),
            mapping,
        }
    }
}

/// `(psi f)(x) = f(psi(x))`.
pub fn apply_automorphism(psi: &PosetAutomorphism, f: &PPartition) -> Result<PPartition> {
    if !f.same_poset(&psi.poset) {
        return Err(Error::PosetMismatch);
    }
    let values = (0..f.values.len()).map(|x| f.values[psi.mapping[x]]).collect();
    Ok(PPartition {
        poset: Arc::clone(&f.poset),
        ell: f.ell,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{first_linear_extension, linear_extensions, make_v, product_with_chain};

    fn v() -> Arc<Poset> {
        Arc::new(make_v())
    }

    fn vk(k: usize) -> Arc<Poset> {
        Arc::new(product_with_chain(&make_v(), k).unwrap())
    }

    fn pp(p: &Arc<Poset>, ell: usize, vals: &[usize]) -> PPartition {
        PPartition::new(Arc::clone(p), ell, vals.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        let all = enumerate_ppartitions(&v(), 1);
        let vals: Vec<_> = all.iter().map(|f| f.values().to_vec()).collect();
        assert_eq!(vals, vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1], vec![1, 1, 1]]);
        assert_eq!(enumerate_ppartitions(&v(), 2).len(), 14);
        assert_eq!(enumerate_ppartitions(&vk(2), 1).len(), 14);
        assert!(enumerate_ppartitions(&vk(3), 2).iter().all(PPartition::is_valid));
    }

    #[test]
    fn rejects_invalid() {
        assert!(PPartition::new(v(), 1, vec![1, 0, 1]).is_err());
        assert!(PPartition::new(v(), 1, vec![0, 2, 1]).is_err());
        assert!(PPartition::new(v(), 1, vec![0, 1]).is_err());
    }

    #[test]
    fn toggles() {
        let p = v();
        assert_eq!(toggle(0, &pp(&p, 1, &[0, 1, 1])).unwrap().values(), &[1, 1, 1]);
        assert_eq!(toggle(1, &pp(&p, 1, &[0, 0, 0])).unwrap().values(), &[0, 1, 0]);
        assert!(toggle(3, &pp(&p, 1, &[0, 0, 0])).is_err());
        for f in enumerate_ppartitions(&p, 2) {
            for x in 0..3 {
                let g = toggle(x, &f).unwrap();
                assert!(g.is_valid());
                assert_eq!(toggle(x, &g).unwrap(), f);
            }
        }
    }

    #[test]
    fn rowmotion_examples() {
        let p = v();
        let ext = first_linear_extension(&p);
        assert_eq!(rowmotion(&pp(&p, 1, &[0, 0, 0]), &ext).unwrap().values(), &[1, 1, 1]);
        assert_eq!(rowmotion(&pp(&p, 1, &[0, 0, 1]), &ext).unwrap().values(), &[0, 1, 0]);
        let other = first_linear_extension(&vk(1));
        assert_eq!(rowmotion(&pp(&p, 1, &[0, 0, 0]), &other), Err(Error::PosetMismatch));
    }

    #[test]
    fn rowmotion_ignores_extension_choice() {
        let p = vk(2);
        let exts: Vec<_> = linear_extensions(&p).collect();
        for f in enumerate_ppartitions(&p, 1) {
            let first = rowmotion(&f, &exts[0]).unwrap();
            assert!(exts.iter().all(|e| rowmotion(&f, e).unwrap() == first));
        }
    }

    #[test]
    fn togpro_examples() {
        let p = vk(1);
        assert_eq!(togpro(&pp(&p, 1, &[0, 0, 0]), 3).unwrap().values(), &[0, 1, 1]);
        assert_eq!(togpro(&pp(&p, 2, &[0, 0, 0]), 3).unwrap().values(), &[0, 2, 2]);
        assert_eq!(togpro(&pp(&p, 1, &[0, 0, 0]), 4), Err(Error::PosetMismatch));
        // q = 4 on V x [2]: (A,2); (A,1),(B,2),(C,2); (B,1),(C,1).
        assert_eq!(togpro_groups(4).unwrap(), vec![vec![1], vec![0, 3, 5], vec![2, 4]]);
    }

    #[test]
    fn flip() {
        let p = v();
        let flip = PosetAutomorphism::flip(Arc::clone(&p)).unwrap();
        let f = pp(&p, 1, &[0, 1, 0]);
        let g = apply_automorphism(&flip, &f).unwrap();
        assert_eq!(g.values(), &[0, 0, 1]);
        assert_eq!(apply_automorphism(&flip, &g).unwrap(), f);
        assert_eq!(flip.inverse(), flip);
        assert!(PosetAutomorphism::new(Arc::clone(&p), vec![1, 0, 2]).is_err());
        assert!(PosetAutomorphism::new(p, vec![0, 0, 2]).is_err());
    }

    #[test]
    fn toggles_conjugate_under_automorphisms() {
        let p = vk(2);
        let flip = PosetAutomorphism::flip(Arc::clone(&p)).unwrap();
        for f in enumerate_ppartitions(&p, 2) {
            for x in 0..p.len() {
                let lhs = toggle(x, &apply_automorphism(&flip, &f).unwrap()).unwrap();
                let rhs = apply_automorphism(&flip, &toggle(flip.image(x), &f).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
