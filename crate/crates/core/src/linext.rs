//! Bender–Knuth involutions and promotion on linear extensions.

use crate::error::{Error, Result};
use crate::poset::LinearExtension;

/// `t_i`: swap labels `i` and `i + 1` when their elements are incomparable.
pub fn bender_knuth(i: usize, ext: &LinearExtension) -> Result<LinearExtension> {
    let m = ext.labels().len();
    if i < 1 || i + 1 > m {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: m.saturating_sub(1),
        });
    }
    let mut out = ext.clone();
    let mut at = ext.sequence();
    swap_if_incomparable(&mut out, &mut at, i);
    Ok(out)
}

fn swap_if_incomparable(ext: &mut LinearExtension, at: &mut [usize], i: usize) {
    let (x, y) = (at[i - 1], at[i]);
    if !ext.poset().comparable(x, y) {
        let labels = ext.labels_mut();
        labels.swap(x, y);
        at.swap(i - 1, i);
    }
}

/// `Pro = t_{m-1} ... t_2 t_1`, with `t_1` applied first.
pub fn promote_linext(ext: &LinearExtension) -> LinearExtension {
    let m = ext.labels().len();
    let mut out = ext.clone();
    let mut at = ext.sequence();
    for i in 1..m {
        swap_if_incomparable(&mut out, &mut at, i);
    }
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::poset::{linear_extensions, make_v, product_with_chain};

    fn v1() -> Arc<crate::Poset> {
        Arc::new(product_with_chain(&make_v(), 1).unwrap())
    }

    #[test]
    fn single_layer_moves() {
        let p = v1();
        let e = LinearExtension::new(p.clone(), vec![1, 2, 3]).unwrap();
        assert_eq!(bender_knuth(2, &e).unwrap().labels(), &[1, 3, 2]);
        assert_eq!(bender_knuth(1, &e).unwrap(), e);
        assert_eq!(promote_linext(&e).labels(), &[1, 3, 2]);
        assert!(bender_knuth(0, &e).is_err());
        assert!(bender_knuth(3, &e).is_err());
    }

    #[test]
    fn involutions_on_v2() {
        let p = Arc::new(product_with_chain(&make_v(), 2).unwrap());
        for e in linear_extensions(&p) {
            for i in 1..6 {
                let t = bender_knuth(i, &e).unwrap();
                LinearExtension::new(p.clone(), t.labels().to_vec()).unwrap();
                assert_eq!(bender_knuth(i, &t).unwrap(), e);
            }
        }
    }

    #[test]
    fn promotion_order_6n() {
        for n in 1..=2 {
            let p = Arc::new(product_with_chain(&make_v(), n).unwrap());
            for e in linear_extensions(&p) {
                let mut f = e.clone();
                for _ in 0..6 * n {
                    f = promote_linext(&f);
                }
                assert_eq!(f, e);
            }
        }
    }
}
