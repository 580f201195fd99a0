//! `(ell, q)`-partial multi Kreweras words: the word model of P-strict
//! labelings of `V x [ell]`, their generalized bump diagrams, noncrossing
//! layer decompositions, double arcs and standardization.
//!
//! Within a block the closers (B's and C's) precede the A's. A's are
//! linearly ordered by block and then by index inside the block; `A_i`
//! refers to the `i`-th A (0-based) in this order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kreweras::{KrewerasWord, Letter};
use crate::pstrict::{enumerate_labelings, promote_pstrict, tau, PStrictLabeling};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "crate::json::WordJson", try_from = "crate::json::WordJson")]
pub struct PartialMultiKrewerasWord {
    ell: usize,
    q: usize,
    /// Letter counts `[nA, nB, nC]` per block.
    blocks: Vec<[usize; 3]>,
}

/// Accepts `blocks` iff every letter occurs `ell` times and, for each block
/// `i`, the B's and C's through block `i` are bounded by the A's through
/// block `i - 1`.
pub fn validate_word(blocks: Vec<[usize; 3]>, ell: usize, q: usize) -> Result<PartialMultiKrewerasWord> {
    if blocks.len() != q {
        return Err(Error::BlockCountMismatch {
            expected: q,
            found: blocks.len(),
        });
    }
    for letter in Letter::ALL {
        let found: usize = blocks.iter().map(|b| b[letter.index()]).sum();
        if found != ell {
            return Err(Error::LetterCountMismatch {
                letter,
                expected: ell,
                found,
            });
        }
    }
    let mut a_before = 0;
    let (mut nb, mut nc) = (0, 0);
    for (i, block) in blocks.iter().enumerate() {
        nb += block[1];
        nc += block[2];
        if nb > a_before {
            return Err(Error::PrefixViolation {
                block: i + 1,
                letter: Letter::B,
            });
        }
        if nc > a_before {
            return Err(Error::PrefixViolation {
                block: i + 1,
                letter: Letter::C,
            });
        }
        a_before += block[0];
    }
    Ok(PartialMultiKrewerasWord { ell, q, blocks })
}

impl PartialMultiKrewerasWord {
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn blocks(&self) -> &[[usize; 3]] {
        &self.blocks
    }

    /// Counts of block `i` (1-based).
    pub fn block(&self, i: usize) -> [usize; 3] {
        self.blocks[i - 1]
    }

    pub fn block_size(&self, i: usize) -> usize {
        self.blocks[i - 1].iter().sum()
    }

    pub fn flip_bc(&self) -> PartialMultiKrewerasWord {
        PartialMultiKrewerasWord {
            ell: self.ell,
            q: self.q,
            blocks: self.blocks.iter().map(|&[a, b, c]| [a, c, b]).collect(),
        }
    }

    /// Block (1-based) of every occurrence of `p`, in increasing order.
    fn positions_of(&self, p: Letter) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| std::iter::repeat_n(i + 1, b[p.index()]))
            .collect()
    }
}

impl fmt::Display for PartialMultiKrewerasWord {
    /// Blocks joined by `|`, letters as `B*C*A*`, empty blocks as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &[a, b, c]) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            if a + b + c == 0 {
                f.write_str("∅")?;
            }
            for (letter, n) in [("B", b), ("C", c), ("A", a)] {
                for _ in 0..n {
                    f.write_str(letter)?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for PartialMultiKrewerasWord {
    type Err = Error;

    /// Parses the `|`-separated text form; `q` is the number of blocks and
    /// `ell` the number of A's.
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .trim()
            .split('|')
            .map(|block| {
                let mut counts = [0usize; 3];
                for ch in block.trim().chars() {
                    match ch {
                        '∅' => {}
                        _ => {
                            let l = Letter::from_char(ch)
                                .ok_or_else(|| Error::Parse(format!("unexpected character {ch:?}")))?;
                            counts[l.index()] += 1;
                        }
                    }
                }
                Ok(counts)
            })
            .collect::<Result<Vec<_>>>()?;
        let ell = blocks.iter().map(|b| b[0]).sum();
        let q = blocks.len();
        validate_word(blocks, ell, q)
    }
}

/// `W^{-1}`: block `i` holds one `p` for every label `i` in the fiber over `p`.
pub fn word_of_labeling(f: &PStrictLabeling) -> PartialMultiKrewerasWord {
    let mut blocks = vec![[0usize; 3]; f.q()];
    for p in Letter::ALL {
        for &v in f.fiber(p) {
            blocks[v - 1][p.index()] += 1;
        }
    }
    PartialMultiKrewerasWord {
        ell: f.ell(),
        q: f.q(),
        blocks,
    }
}

/// `W`: the fiber over `p` lists the blocks of the `p`'s in increasing order.
pub fn labeling_of_word(w: &PartialMultiKrewerasWord) -> PStrictLabeling {
    PStrictLabeling::new_unchecked(
        w.q,
        [
            w.positions_of(Letter::A),
            w.positions_of(Letter::B),
            w.positions_of(Letter::C),
        ],
    )
}

pub fn enumerate_words(ell: usize, q: usize) -> Result<impl Iterator<Item = PartialMultiKrewerasWord>> {
    Ok(enumerate_labelings(ell, q)?.map(|f| word_of_labeling(&f)))
}

/// Word-level `tau_k`, conjugated through `W`.
pub fn tau_word(k: usize, w: &PartialMultiKrewerasWord) -> Result<PartialMultiKrewerasWord> {
    let f = crate::pstrict::bender_knuth_tau(k, &labeling_of_word(w))?;
    Ok(word_of_labeling(&f))
}

/// Equals the word with the fiber content of the promoted layers
/// `{L.promote(q)}`. The layer multiset of the result can differ from the
/// promoted layers themselves: `AA|B|B|C|C` has layers `(1,2,4), (1,3,5)`,
/// while its promotion `A|A|C|C|BB` has `(1,5,4), (2,5,3)`.
pub fn promote_word(w: &PartialMultiKrewerasWord) -> PartialMultiKrewerasWord {
    word_of_labeling(&promote_pstrict(&labeling_of_word(w)))
}

pub fn promote_word_n(w: &PartialMultiKrewerasWord, times: usize) -> PartialMultiKrewerasWord {
    let mut f = labeling_of_word(w);
    for _ in 0..times {
        f = (1..f.q()).fold(f, |g, k| tau(k, &g));
    }
    word_of_labeling(&f)
}

/// A labeling of V by itself: `a < b`, `a < c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VLayer {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl VLayer {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        VLayer { a, b, c }
    }

    /// Promotion of a single strict labeling of V with labels in `[q]`.
    pub fn promote(self, q: usize) -> VLayer {
        let VLayer { a, b, c } = self;
        if a > 1 {
            VLayer::new(a - 1, b - 1, c - 1)
        } else if b == c {
            VLayer::new(b - 1, q, q)
        } else if b < c {
            VLayer::new(b - 1, q, c - 1)
        } else {
            VLayer::new(c - 1, b - 1, q)
        }
    }
}

impl fmt::Display for VLayer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Color of the shorter of the two arcs leaving an A; `Both` for double arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ArcColor {
    B,
    C,
    Both,
}

/// One letter slot of the generalized bump diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub block: usize,
    /// 0-based position inside the block.
    pub within: usize,
    pub letter: Letter,
    /// Index of the A this slot belongs to (itself for an A, its opener otherwise).
    pub a_index: usize,
}

/// The generalized bump diagram, stored per A: its block and the blocks of
/// the B and C it is matched to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedBumpDiagram {
    pub q: usize,
    pub a_block: Vec<usize>,
    pub b_block: Vec<usize>,
    pub c_block: Vec<usize>,
}

pub fn generalized_bump_diagram(w: &PartialMultiKrewerasWord) -> GeneralizedBumpDiagram {
    generalized_bump_diagram_ordered(w, |_, n| (0..n).collect())
}

/// Like [`generalized_bump_diagram`], with the A's of each block pushed in
/// the order given by `order(block, count)` (a permutation of `0..count`).
/// Slot indices are still assigned in the canonical order.
pub fn generalized_bump_diagram_ordered(
    w: &PartialMultiKrewerasWord,
    order: impl Fn(usize, usize) -> Vec<usize>,
) -> GeneralizedBumpDiagram {
    let ell = w.ell;
    let mut a_block = Vec::with_capacity(ell);
    let mut b_block = vec![0; ell];
    let mut c_block = vec![0; ell];
    let mut stack_b: Vec<usize> = Vec::new();
    let mut stack_c: Vec<usize> = Vec::new();
    for (i, &[na, nb, nc]) in w.blocks.iter().enumerate() {
        let block = i + 1;
        for _ in 0..nb {
            b_block[stack_b.pop().expect("valid word")] = block;
        }
        for _ in 0..nc {
            c_block[stack_c.pop().expect("valid word")] = block;
        }
        let first = a_block.len();
        a_block.extend(std::iter::repeat_n(block, na));
        for j in order(block, na) {
            stack_b.push(first + j);
            stack_c.push(first + j);
        }
    }
    GeneralizedBumpDiagram {
        q: w.q,
        a_block,
        b_block,
        c_block,
    }
}

impl GeneralizedBumpDiagram {
    pub fn ell(&self) -> usize {
        self.a_block.len()
    }

    /// B-arcs as `(A block, B block)`, one per A in linear order.
    pub fn arcs_b(&self) -> Vec<(usize, usize)> {
        self.a_block.iter().copied().zip(self.b_block.iter().copied()).collect()
    }

    pub fn arcs_c(&self) -> Vec<(usize, usize)> {
        self.a_block.iter().copied().zip(self.c_block.iter().copied()).collect()
    }

    /// Indices of A's whose B and C lie in the same block.
    pub fn double_arc_indices(&self) -> Vec<usize> {
        (0..self.ell()).filter(|&i| self.b_block[i] == self.c_block[i]).collect()
    }

    pub fn layer(&self, i: usize) -> VLayer {
        VLayer::new(self.a_block[i], self.b_block[i], self.c_block[i])
    }

    /// The layers sorted into a canonical multiset representation.
    pub fn layers(&self) -> Vec<VLayer> {
        let mut layers: Vec<VLayer> = (0..self.ell()).map(|i| self.layer(i)).collect();
        layers.sort_unstable();
        layers
    }

    pub fn shortest_arc(&self, i: usize) -> (ArcColor, usize) {
        let (b, c) = (self.b_block[i], self.c_block[i]);
        match b.cmp(&c) {
            std::cmp::Ordering::Less => (ArcColor::B, b),
            std::cmp::Ordering::Greater => (ArcColor::C, c),
            std::cmp::Ordering::Equal => (ArcColor::Both, b),
        }
    }

    /// `(color, A block, closer block)` of every shortest arc, sorted.
    pub fn shortest_arcs(&self) -> Vec<(ArcColor, usize, usize)> {
        let mut out: Vec<_> = (0..self.ell())
            .map(|i| {
                let (color, end) = self.shortest_arc(i);
                (color, self.a_block[i], end)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Every matching is noncrossing in the degenerate sense: an arc from an
    /// A strictly inside another arc may not end strictly beyond it.
    /// Also checks that each closer lies in a strictly later block.
    pub fn is_noncrossing(&self) -> bool {
        let ell = self.ell();
        [&self.b_block, &self.c_block].iter().all(|closers| {
            (0..ell).all(|i| {
                closers[i] > self.a_block[i]
                    && (i + 1..ell).all(|j| {
                        let inside = self.a_block[j] < closers[i];
                        !(inside && closers[j] > closers[i])
                    })
            })
        })
    }

    /// Materializes the letter slots. Closers within a block are ordered by
    /// opener index descending (B before C for a double arc), then the A's.
    pub fn positions(&self) -> Vec<Slot> {
        let mut slots = Vec::with_capacity(3 * self.ell());
        for block in 1..=self.q {
            let mut closers: Vec<(usize, Letter)> = Vec::new();
            for i in 0..self.ell() {
                if self.b_block[i] == block {
                    closers.push((i, Letter::B));
                }
                if self.c_block[i] == block {
                    closers.push((i, Letter::C));
                }
            }
            closers.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
            let mut within = 0;
            for (a_index, letter) in closers {
                slots.push(Slot {
                    block,
                    within,
                    letter,
                    a_index,
                });
                within += 1;
            }
            for i in (0..self.ell()).filter(|&i| self.a_block[i] == block) {
                slots.push(Slot {
                    block,
                    within,
                    letter: Letter::A,
                    a_index: i,
                });
                within += 1;
            }
        }
        slots
    }
}

/// The noncrossing layer decomposition as a sorted multiset.
pub fn layer_decomposition(w: &PartialMultiKrewerasWord) -> Vec<VLayer> {
    generalized_bump_diagram(w).layers()
}

/// Rebuilds the word from a layer multiset.
pub fn word_of_layers(layers: &[VLayer], q: usize) -> Result<PartialMultiKrewerasWord> {
    let mut blocks = vec![[0usize; 3]; q];
    for l in layers {
        for (letter, v) in [(Letter::A, l.a), (Letter::B, l.b), (Letter::C, l.c)] {
            if v < 1 || v > q {
                return Err(Error::Parse(format!("layer {l} outside [1, {q}]")));
            }
            blocks[v - 1][letter.index()] += 1;
        }
    }
    validate_word(blocks, layers.len(), q)
}

/// Double arcs as sorted `(A block, closer block)` pairs, with multiplicity.
pub fn double_arcs(w: &PartialMultiKrewerasWord) -> Vec<(usize, usize)> {
    let d = generalized_bump_diagram(w);
    let mut out: Vec<_> = d
        .double_arc_indices()
        .into_iter()
        .map(|i| (d.a_block[i], d.b_block[i]))
        .collect();
    out.sort_unstable();
    out
}

/// Where a double arc `(k, j)` lands after one promotion.
pub fn promoted_double_arc((k, j): (usize, usize), q: usize) -> (usize, usize) {
    if k > 1 {
        (k - 1, j - 1)
    } else {
        (j - 1, q)
    }
}

/// Removes one A from block `k` and one B and one C from block `j`.
pub fn delete_double_arc(w: &PartialMultiKrewerasWord, (k, j): (usize, usize)) -> Result<PartialMultiKrewerasWord> {
    if !double_arcs(w).contains(&(k, j)) {
        return Err(Error::NoSuchDoubleArc(k, j));
    }
    let mut blocks = w.blocks.clone();
    blocks[k - 1][0] -= 1;
    blocks[j - 1][1] -= 1;
    blocks[j - 1][2] -= 1;
    validate_word(blocks, w.ell - 1, w.q)
}

/// Flattens a double-arc-free word to a Kreweras word, ordering the closers
/// of each block so their arcs nest. Returns the block sizes alongside.
pub fn standardize(w: &PartialMultiKrewerasWord) -> Result<(KrewerasWord, Vec<usize>)> {
    let d = generalized_bump_diagram(w);
    if !d.double_arc_indices().is_empty() {
        return Err(Error::HasDoubleArcs);
    }
    let letters = d.positions().into_iter().map(|s| s.letter).collect();
    let sizes = (1..=w.q).map(|i| w.block_size(i)).collect();
    Ok((KrewerasWord::new_unchecked(letters), sizes))
}

/// Cuts a Kreweras word into consecutive blocks of the given sizes.
pub fn destandardize(word: &KrewerasWord, block_sizes: &[usize]) -> Result<PartialMultiKrewerasWord> {
    let total: usize = block_sizes.iter().sum();
    if total != word.len() {
        return Err(Error::BlockSizeMismatch {
            expected: word.len(),
            found: total,
        });
    }
    let mut letters = word.letters().iter();
    let blocks = block_sizes
        .iter()
        .map(|&size| {
            let mut counts = [0usize; 3];
            for l in letters.by_ref().take(size) {
                counts[l.index()] += 1;
            }
            counts
        })
        .collect();
    validate_word(blocks, word.n(), block_sizes.len())
}
