//! Kreweras words, their promotion, and Kreweras bump diagrams.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{make_v, product_with_chain, LinearExtension, Poset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    /// Position in `[A, B, C]`; also the element index of the letter in V.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Letter {
        Letter::ALL[i]
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'A' => Some(Letter::A),
            'B' => Some(Letter::B),
            'C' => Some(Letter::C),
            _ => None,
        }
    }

    /// Exchanges B and C.
    pub fn flipped(self) -> Letter {
        match self {
            Letter::A => Letter::A,
            Letter::B => Letter::C,
            Letter::C => Letter::B,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Letter::A => "A",
            Letter::B => "B",
            Letter::C => "C",
        };
        f.write_str(c)
    }
}

/// A word in `A, B, C` with equal letter counts where every prefix has at
/// least as many A's as B's and as C's.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KrewerasWord {
    letters: Vec<Letter>,
}

impl KrewerasWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let mut counts = [0usize; 3];
        for (pos, &l) in letters.iter().enumerate() {
            counts[l.index()] += 1;
            if counts[1] > counts[0] || counts[2] > counts[0] {
                return Err(Error::InvalidKrewerasWord(format!(
                    "prefix of length {} has more {l}'s than A's",
                    pos + 1
                )));
            }
        }
        if counts[0] != counts[1] || counts[0] != counts[2] {
            return Err(Error::InvalidKrewerasWord(format!(
                "letter counts {counts:?} are not equal"
            )));
        }
        Ok(KrewerasWord { letters })
    }

    pub(crate) fn new_unchecked(letters: Vec<Letter>) -> Self {
        KrewerasWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of A's (the `n` of a word of length `3n`).
    pub fn n(&self) -> usize {
        self.letters.len() / 3
    }

    /// Smallest 1-based index whose prefix balances A against B or against C.
    pub fn iota(&self) -> Option<usize> {
        let (mut ab, mut ac) = (0isize, 0isize);
        for (i, l) in self.letters.iter().enumerate() {
            match l {
                Letter::A => {
                    ab += 1;
                    ac += 1;
                }
                Letter::B => ab -= 1,
                Letter::C => ac -= 1,
            }
            if ab == 0 || ac == 0 {
                return Some(i + 1);
            }
        }
        None
    }

    pub fn promote(&self) -> KrewerasWord {
        let Some(iota) = self.iota() else {
            return self.clone();
        };
        let w = &self.letters;
        let mut out = Vec::with_capacity(w.len());
        out.extend_from_slice(&w[1..iota - 1]);
        out.push(Letter::A);
        out.extend_from_slice(&w[iota..]);
        out.push(w[iota - 1]);
        KrewerasWord::new_unchecked(out)
    }

    pub fn promote_n(&self, times: usize) -> KrewerasWord {
        (0..times).fold(self.clone(), |w, _| w.promote())
    }

    pub fn flip_bc(&self) -> KrewerasWord {
        KrewerasWord::new_unchecked(self.letters.iter().map(|l| l.flipped()).collect())
    }

    /// All Kreweras words of length `3n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<KrewerasWord> {
        fn go(n: usize, counts: [usize; 3], cur: &mut Vec<Letter>, out: &mut Vec<KrewerasWord>) {
            if cur.len() == 3 * n {
                out.push(KrewerasWord::new_unchecked(cur.clone()));
                return;
            }
            for l in Letter::ALL {
                let mut c = counts;
                c[l.index()] += 1;
                if c[l.index()] <= n && c[1] <= c[0] && c[2] <= c[0] {
                    cur.push(l);
                    go(n, c, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(n, [0; 3], &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for KrewerasWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for KrewerasWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|c| Letter::from_char(c).ok_or_else(|| Error::Parse(format!("unexpected character {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        KrewerasWord::new(letters)
    }
}

/// Forgets the layer coordinate of a linear extension of `V x [n]`.
pub fn to_kreweras(ext: &LinearExtension) -> Result<KrewerasWord> {
    let n = ext.poset().v_chain_length().ok_or(Error::NotVProduct)?;
    let letters = ext
        .sequence()
        .into_iter()
        .map(|x| Letter::from_index(x / n))
        .collect();
    Ok(KrewerasWord::new_unchecked(letters))
}

/// Inverse of [`to_kreweras`]; the `k`-th occurrence of a letter is placed in layer `k`.
pub fn from_kreweras(word: &KrewerasWord) -> Result<LinearExtension> {
    let n = word.n();
    if n == 0 {
        return LinearExtension::new(Arc::new(Poset::new(vec![], [])?), vec![]);
    }
    let poset = Arc::new(product_with_chain(&make_v(), n)?);
    from_kreweras_on(word, &poset)
}

/// As [`from_kreweras`], reusing an existing `V x [n]` poset.
pub fn from_kreweras_on(word: &KrewerasWord, poset: &Arc<Poset>) -> Result<LinearExtension> {
    let n = poset.v_chain_length().ok_or(Error::NotVProduct)?;
    if word.n() != n {
        return Err(Error::PosetMismatch);
    }
    let mut seen = [0usize; 3];
    let mut labels = vec![0; 3 * n];
    for (pos, l) in word.letters().iter().enumerate() {
        seen[l.index()] += 1;
        labels[l.index() * n + seen[l.index()] - 1] = pos + 1;
    }
    Ok(LinearExtension::from_parts_unchecked(Arc::clone(poset), labels))
}

/// Two arcs `(i, j)`, `(k, l)` cross when `i <= k < j < l` (in some order).
pub fn crosses(x: (usize, usize), y: (usize, usize)) -> bool {
    let ((i, j), (k, l)) = if x <= y { (x, y) } else { (y, x) };
    i <= k && k < j && j < l
}

pub fn is_noncrossing(arcs: &[(usize, usize)]) -> bool {
    arcs.iter()
        .enumerate()
        .all(|(s, &x)| arcs[s + 1..].iter().all(|&y| !crosses(x, y)))
}

/// The pair of noncrossing matchings `M^B`, `M^C` of a Kreweras word.
/// Positions are 1-based; arcs are sorted by opener.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BumpDiagram {
    pub length: usize,
    pub arcs_b: Vec<(usize, usize)>,
    pub arcs_c: Vec<(usize, usize)>,
}

pub fn bump_diagram(word: &KrewerasWord) -> BumpDiagram {
    let mut stack_b = Vec::new();
    let mut stack_c = Vec::new();
    let mut arcs_b = Vec::new();
    let mut arcs_c = Vec::new();
    for (i, l) in word.letters().iter().enumerate() {
        let pos = i + 1;
        match l {
            Letter::A => {
                stack_b.push(pos);
                stack_c.push(pos);
            }
            Letter::B => arcs_b.push((stack_b.pop().expect("valid word"), pos)),
            Letter::C => arcs_c.push((stack_c.pop().expect("valid word"), pos)),
        }
    }
    arcs_b.sort_unstable();
    arcs_c.sort_unstable();
    BumpDiagram {
        length: word.len(),
        arcs_b,
        arcs_c,
    }
}
