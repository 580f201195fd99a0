//! Worked examples on `V x [6]` and the `(6, 9)` word, reproduced exactly.

use std::sync::Arc;

use vpro_core::multiword::promoted_double_arc;
use vpro_core::*;

const FIG_WORD: &str = "ACABBAABCCACBABCCB";
const FIG_WORD_PRO: &str = "AABBAABCCACBABCCBC";
const MULTI: &str = "A|CA|BBAA|BCCA|C|BA|B|CC|B";
const MULTI_PRO: &str = "AA|BBAA|BCCA|C|BA|B|CC|B|C";

fn fibers_ext(a: [usize; 6], b: [usize; 6], c: [usize; 6]) -> LinearExtension {
    let poset = Arc::new(product_with_chain(&make_v(), 6).unwrap());
    let labels = a.iter().chain(&b).chain(&c).copied().collect();
    LinearExtension::new(poset, labels).unwrap()
}

fn figure_extension() -> LinearExtension {
    fibers_ext(
        [1, 3, 6, 7, 11, 14],
        [4, 5, 8, 13, 15, 18],
        [2, 9, 10, 12, 16, 17],
    )
}

#[test]
fn promotion_of_linear_extension() {
    let expected = fibers_ext(
        [1, 2, 5, 6, 10, 13],
        [3, 4, 7, 12, 14, 17],
        [8, 9, 11, 15, 16, 18],
    );
    assert_eq!(promote_linext(&figure_extension()), expected);
}

#[test]
fn kreweras_word_pair() {
    let w = to_kreweras(&figure_extension()).unwrap();
    assert_eq!(w.to_string(), FIG_WORD);
    assert_eq!(from_kreweras(&w).unwrap(), figure_extension());
    assert_eq!(w.promote().to_string(), FIG_WORD_PRO);
    assert_eq!(
        to_kreweras(&promote_linext(&figure_extension())).unwrap().to_string(),
        FIG_WORD_PRO
    );
}

#[test]
fn kreweras_bump_diagram() {
    let d = bump_diagram(&FIG_WORD.parse().unwrap());
    assert_eq!(d.arcs_b, vec![(1, 5), (3, 4), (6, 18), (7, 8), (11, 13), (14, 15)]);
    assert_eq!(d.arcs_c, vec![(1, 2), (3, 17), (6, 10), (7, 9), (11, 12), (14, 16)]);
}

#[test]
fn multi_word_and_labeling() {
    let f = PStrictLabeling::new(
        9,
        vec![1, 2, 3, 3, 4, 6],
        vec![3, 3, 4, 6, 7, 9],
        vec![2, 4, 4, 5, 8, 8],
    )
    .unwrap();
    let w = word_of_labeling(&f);
    assert_eq!(w.to_string(), MULTI);
    assert_eq!(labeling_of_word(&MULTI.parse().unwrap()), f);
    assert!(validate_word(w.blocks().to_vec(), 6, 9).is_ok());
}

#[test]
fn generalized_diagram_and_layers() {
    let w: PartialMultiKrewerasWord = MULTI.parse().unwrap();
    let d = generalized_bump_diagram(&w);
    assert_eq!(d.a_block, vec![1, 2, 3, 3, 4, 6]);
    assert_eq!(d.b_block, vec![3, 3, 9, 4, 6, 7]);
    assert_eq!(d.c_block, vec![2, 8, 4, 4, 5, 8]);
    assert_eq!(d.double_arc_indices(), vec![3]);
    assert!(d.is_noncrossing());
    let layers: Vec<_> = [(1, 3, 2), (2, 3, 8), (3, 9, 4), (3, 4, 4), (4, 6, 5), (6, 7, 8)]
        .into_iter()
        .map(|(a, b, c)| VLayer::new(a, b, c))
        .collect();
    // Unsorted, in A order, these are exactly the six figure layers.
    assert_eq!((0..6).map(|i| d.layer(i)).collect::<Vec<_>>(), layers);
    let mut sorted = layers.clone();
    sorted.sort();
    assert_eq!(layer_decomposition(&w), sorted);
}

#[test]
fn promoted_word_and_layers() {
    let w: PartialMultiKrewerasWord = MULTI.parse().unwrap();
    let pro = promote_word(&w);
    assert_eq!(pro.to_string(), MULTI_PRO);
    let d = generalized_bump_diagram(&pro);
    let expected: Vec<_> = [(1, 2, 9), (1, 2, 7), (2, 8, 3), (2, 3, 3), (3, 5, 4), (5, 6, 7)]
        .into_iter()
        .map(|(a, b, c)| VLayer::new(a, b, c))
        .collect();
    assert_eq!((0..6).map(|i| d.layer(i)).collect::<Vec<_>>(), expected);
    let rotated: Vec<_> = generalized_bump_diagram(&w)
        .layers()
        .into_iter()
        .map(|l| l.promote(9))
        .collect();
    let mut rotated_sorted = rotated;
    rotated_sorted.sort();
    assert_eq!(layer_decomposition(&pro), rotated_sorted);
}

#[test]
fn double_arc_of_figure() {
    let w: PartialMultiKrewerasWord = MULTI.parse().unwrap();
    assert_eq!(double_arcs(&w), vec![(3, 4)]);
    let deleted = delete_double_arc(&w, (3, 4)).unwrap();
    assert_eq!(deleted.to_string(), "A|CA|BBA|CA|C|BA|B|CC|B");
    assert_eq!(promoted_double_arc((3, 4), 9), (2, 3));
    let pro = promote_word(&w);
    assert_eq!(double_arcs(&pro), vec![(2, 3)]);
    assert_eq!(delete_double_arc(&pro, (2, 3)).unwrap(), promote_word(&deleted));
    let (s, sizes) = standardize(&deleted).unwrap();
    assert_eq!(destandardize(&s, &sizes).unwrap(), deleted);
    assert!(!generalized_bump_diagram(&w).shortest_arcs().is_empty());
}

#[test]
fn standardization_pair() {
    let (s1, z1) = standardize(&"∅|AA|CC|BB".parse().unwrap()).unwrap();
    let (s2, z2) = standardize(&"A|A|CC|BB".parse().unwrap()).unwrap();
    assert_eq!(s1.to_string(), "AACCBB");
    assert_eq!(s1, s2);
    assert_eq!(z1, vec![0, 2, 2, 2]);
    assert_eq!(z2, vec![1, 1, 2, 2]);
    assert_eq!(destandardize(&s1, &z1).unwrap().to_string(), "∅|AA|CC|BB");
    assert_eq!(destandardize(&s2, &z2).unwrap().to_string(), "A|A|CC|BB");
}
