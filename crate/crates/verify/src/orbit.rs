//! Cycle decomposition of a bijection on a finite set.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub ell: usize,
    pub q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub action: String,
    pub params: Params,
    pub count: usize,
    /// Orbit sizes, in order of each orbit's least element.
    pub orbit_sizes: Vec<usize>,
    pub order: u64,
    pub checks: BTreeMap<String, bool>,
}

impl OrbitReport {
    pub fn sizes_sum_to_count(&self) -> bool {
        self.orbit_sizes.iter().sum::<usize>() == self.count
    }

    pub fn order_is_lcm(&self) -> bool {
        self.order == lcm_of(&self.orbit_sizes)
    }

    pub fn sorted_sizes(&self) -> Vec<usize> {
        let mut s = self.orbit_sizes.clone();
        s.sort_unstable();
        s
    }
}

pub fn lcm_of(sizes: &[usize]) -> u64 {
    sizes.iter().fold(1u64, |acc, &s| acc.lcm(&(s as u64)))
}

/// A permutation of a sorted element list, with its cycles.
#[derive(Clone, Debug)]
pub struct Orbits<T> {
    pub elements: Vec<T>,
    /// `image[i]` is the index of the image of `elements[i]`.
    pub image: Vec<usize>,
    /// Cycles as index lists, each starting at its least index.
    pub cycles: Vec<Vec<usize>>,
}

impl<T> Orbits<T> {
    pub fn sizes(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    pub fn order(&self) -> u64 {
        lcm_of(&self.sizes())
    }

    /// Index reached from `i` after `times` steps.
    pub fn step(&self, i: usize, times: usize) -> usize {
        (0..times).fold(i, |j, _| self.image[j])
    }
}

/// Sorts `elements`, applies `action` to each in parallel, and walks the
/// resulting permutation.
pub fn orbits<T, F>(mut elements: Vec<T>, action: F) -> Result<Orbits<T>>
where
    T: Ord + Send + Sync,
    F: Fn(&T) -> T + Sync,
{
    elements.par_sort_unstable();
    if elements.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateElement);
    }
    let image = elements
        .par_iter()
        .enumerate()
        .map(|(i, x)| {
            elements
                .binary_search(&action(x))
                .map_err(|_| Error::OutsideSet { index: i })
        })
        .collect::<Result<Vec<usize>>>()?;
    let mut preimage = vec![usize::MAX; image.len()];
    for (i, &j) in image.iter().enumerate() {
        if preimage[j] != usize::MAX {
            return Err(Error::NotBijective {
                first: preimage[j],
                second: i,
            });
        }
        preimage[j] = i;
    }
    let mut seen = vec![false; image.len()];
    let mut cycles = Vec::new();
    for start in 0..image.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = image[i];
        }
        cycles.push(cycle);
    }
    Ok(Orbits {
        elements,
        image,
        cycles,
    })
}

pub fn orbit_decomposition<T, F>(action_name: &str, params: Params, elements: Vec<T>, action: F) -> Result<OrbitReport>
where
    T: Ord + Send + Sync,
    F: Fn(&T) -> T + Sync,
{
    Ok(report_of(action_name, params, &orbits(elements, action)?))
}

pub fn report_of<T>(action_name: &str, params: Params, o: &Orbits<T>) -> OrbitReport {
    let mut report = OrbitReport {
        action: action_name.to_string(),
        params,
        count: o.elements.len(),
        orbit_sizes: o.sizes(),
        order: o.order(),
        checks: BTreeMap::new(),
    };
    let sum = report.sizes_sum_to_count();
    let lcm = report.order_is_lcm();
    report.checks.insert("sizes_sum_to_count".into(), sum);
    report.checks.insert("order_is_lcm".into(), lcm);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Params = Params { ell: 1, q: 1 };

    #[test]
    fn rotation_of_z6() {
        let r = orbit_decomposition("rot", P, (0..6).collect(), |x| (x + 2) % 6).unwrap();
        assert_eq!(r.orbit_sizes, vec![3, 3]);
        assert_eq!(r.order, 3);
        assert!(r.checks.values().all(|&b| b));
    }

    #[test]
    fn mixed_cycles() {
        let perm = [1, 2, 0, 4, 3, 5];
        let r = orbit_decomposition("p", P, (0..6).collect(), |&x: &usize| perm[x]).unwrap();
        assert_eq!(r.orbit_sizes, vec![3, 2, 1]);
        assert_eq!(r.order, 6);
    }

    #[test]
    fn rejects_bad_actions() {
        let e = orbit_decomposition("c", P, (0..4).collect(), |_| 0).unwrap_err();
        assert!(matches!(e, Error::NotBijective { .. }));
        let e = orbit_decomposition("o", P, (0..4).collect(), |x| x + 1).unwrap_err();
        assert_eq!(e, Error::OutsideSet { index: 3 });
        let e = orbit_decomposition("d", P, vec![1, 1], |x| *x).unwrap_err();
        assert_eq!(e, Error::DuplicateElement);
    }

    #[test]
    fn empty_set() {
        let r = orbit_decomposition("e", P, Vec::<u8>::new(), |x| *x).unwrap();
        assert_eq!(r.count, 0);
        assert_eq!(r.order, 1);
    }
}
