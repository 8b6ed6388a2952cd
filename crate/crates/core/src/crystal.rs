//! Type C crystal of the natural module and its tensor powers.
//!
//! Letters use the same codes as tensor space: `1..=m` are `1..m` and
//! `2m+1-i` is `i'`, so numeric order is the alphabet order
//! `1 < .. < m < m' < .. < 1'`. Tensor products follow the Kashiwara
//! convention: `e_i(b1 ⊗ b2)` acts on `b1` when `φ_i(b1) ≥ ε_i(b2)`.
//!
//! `J0` is realized as the set of words whose connected component has highest
//! weight zero. Identifying this with the index set of the canonical basis
//! of the based module is an assumption, checked here only through the
//! dimension of invariants.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::tensor::{embed_letter, prime};
use crate::{Error, Result};

/// Default cap on the number of words `(2m)^N` that [`j_zero`] scans.
pub const DEFAULT_MAX_WORDS: usize = 1 << 22;

/// Note attached to every crystal report.
pub const J0_ASSUMPTION: &str =
    "J0 is taken to be the words in highest-weight-zero crystal components; this is checked only via |J0| = dim of invariants";

fn check_letter(l: usize, m: usize) -> Result<()> {
    if l == 0 || l > 2 * m {
        return Err(Error::OutOfRange(format!("letter {l} outside 1..{}", 2 * m)));
    }
    Ok(())
}

/// `f_i` on a single letter: `i → i+1` and `(i+1)' → i'` for `i < m`,
/// `m → m'` for `i = m`.
pub fn letter_f(i: usize, l: usize, m: usize) -> Option<usize> {
    if i == 0 || i > m {
        return None;
    }
    if l == i {
        return Some(if i < m { i + 1 } else { prime(m, m) });
    }
    if i < m && l == prime(i + 1, m) {
        return Some(prime(i, m));
    }
    None
}

pub fn letter_e(i: usize, l: usize, m: usize) -> Option<usize> {
    (1..=2 * m).find(|&k| letter_f(i, k, m) == Some(l))
}

/// `(ε_i, φ_i)` of a letter; each is 0 or 1.
pub fn letter_strings(i: usize, l: usize, m: usize) -> (usize, usize) {
    (letter_e(i, l, m).is_some() as usize, letter_f(i, l, m).is_some() as usize)
}

/// A word in alphabet(m), read as `b_1 ⊗ .. ⊗ b_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CrystalWord {
    m: usize,
    letters: Vec<usize>,
}

impl CrystalWord {
    pub fn new(m: usize, letters: Vec<usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::OutOfRange("rank m must be positive".into()));
        }
        for &l in &letters {
            check_letter(l, m)?;
        }
        Ok(CrystalWord { m, letters })
    }

    pub fn m(&self) -> usize {
        self.m
    }
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }
    pub fn len(&self) -> usize {
        self.letters.len()
    }
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Weight in ℤ^m: letter `j` adds `ε_j`, letter `j'` subtracts it.
    pub fn weight(&self) -> Vec<i64> {
        let mut w = vec![0i64; self.m];
        for &l in &self.letters {
            if l <= self.m {
                w[l - 1] += 1;
            } else {
                w[prime(l, self.m) - 1] -= 1;
            }
        }
        w
    }

    /// Unbracketed positions `(minus, plus)` of the i-signature, left to right.
    fn signature(&self, i: usize) -> (Vec<usize>, Vec<usize>) {
        let mut minus = Vec::new();
        let mut plus: Vec<usize> = Vec::new();
        for (p, &l) in self.letters.iter().enumerate() {
            let (e, f) = letter_strings(i, l, self.m);
            if e == 1 {
                // a `+` to the left cancels this `-`
                if plus.pop().is_none() {
                    minus.push(p);
                }
            }
            if f == 1 {
                plus.push(p);
            }
        }
        (minus, plus)
    }

    pub fn epsilon(&self, i: usize) -> usize {
        self.signature(i).0.len()
    }

    pub fn phi(&self, i: usize) -> usize {
        self.signature(i).1.len()
    }

    pub fn e(&self, i: usize) -> Option<CrystalWord> {
        let p = *self.signature(i).0.last()?;
        let mut w = self.clone();
        w.letters[p] = letter_e(i, w.letters[p], self.m)?;
        Some(w)
    }

    pub fn f(&self, i: usize) -> Option<CrystalWord> {
        let p = *self.signature(i).1.first()?;
        let mut w = self.clone();
        w.letters[p] = letter_f(i, w.letters[p], self.m)?;
        Some(w)
    }

    /// Same letters read in alphabet(m0) through `i ↦ i`, `i' ↦ i'`.
    pub fn embed(&self, m0: usize) -> Result<CrystalWord> {
        if m0 < self.m {
            return Err(Error::Precondition(format!("cannot embed alphabet({}) into alphabet({m0})", self.m)));
        }
        CrystalWord::new(m0, self.letters.iter().map(|&l| embed_letter(l, self.m, m0)).collect())
    }
}

impl fmt::Display for CrystalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l <= self.m { l.to_string() } else { format!("{}'", prime(l, self.m)) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub fn word_e(i: usize, w: &CrystalWord) -> Option<CrystalWord> {
    w.e(i)
}

pub fn word_f(i: usize, w: &CrystalWord) -> Option<CrystalWord> {
    w.f(i)
}

/// Applies raising operators until none applies, trying `e_1, .., e_m` in
/// the order given by `order`.
pub fn raise_with_order(w: &CrystalWord, mut order: impl FnMut(&CrystalWord) -> Vec<usize>) -> (CrystalWord, usize) {
    let mut cur = w.clone();
    let mut steps = 0;
    'outer: loop {
        for i in order(&cur) {
            if let Some(next) = cur.e(i) {
                cur = next;
                steps += 1;
                continue 'outer;
            }
        }
        return (cur, steps);
    }
}

/// Highest weight of the component of `w`, with the number of raising steps.
pub fn highest_weight_of(w: &CrystalWord) -> (Vec<i64>, usize) {
    let (hw, steps) = highest_weight_word(w);
    (hw.weight(), steps)
}

pub fn highest_weight_word(w: &CrystalWord) -> (CrystalWord, usize) {
    let m = w.m;
    raise_with_order(w, |_| (1..=m).collect())
}

fn all_words(m: usize, len: usize, max_words: usize) -> Result<Vec<CrystalWord>> {
    let total = (2 * m).checked_pow(len as u32).filter(|&t| t <= max_words).ok_or_else(|| {
        Error::Guard(format!("(2m)^N for (m, N) = ({m}, {len}) exceeds the limit {max_words}"))
    })?;
    let base = 2 * m;
    Ok((0..total)
        .map(|mut idx| {
            let mut letters = vec![0; len];
            for p in (0..len).rev() {
                letters[p] = idx % base + 1;
                idx /= base;
            }
            CrystalWord { m, letters }
        })
        .collect())
}

/// Words of length `N` whose component has highest weight zero, sorted.
pub fn j_zero(m: usize, len: usize, max_words: usize) -> Result<Vec<CrystalWord>> {
    let words = all_words(m, len, max_words)?;
    Ok(words
        .into_par_iter()
        .filter(|w| w.weight().iter().all(|&c| c == 0) && highest_weight_of(w).0.iter().all(|&c| c == 0))
        .collect())
}

/// Component sizes keyed by highest-weight word.
pub fn components(m: usize, len: usize, max_words: usize) -> Result<Vec<(CrystalWord, usize)>> {
    let words = all_words(m, len, max_words)?;
    let hws: Vec<CrystalWord> = words.par_iter().map(|w| highest_weight_word(w).0).collect();
    let mut counts = std::collections::BTreeMap::new();
    for h in hws {
        *counts.entry(h).or_insert(0usize) += 1;
    }
    Ok(counts.into_iter().collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct InclusionReport {
    pub m: usize,
    pub m0: usize,
    #[serde(rename = "N")]
    pub len: usize,
    pub size_small: usize,
    pub size_big: usize,
    /// embedded words of the small set absent from the big one
    pub missing: Vec<Vec<usize>>,
    pub note: &'static str,
}

impl InclusionReport {
    pub fn holds(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Embeds `j_zero(m, N)` into alphabet(m0) and looks each word up in `j_zero(m0, N)`.
pub fn inclusion_check(m: usize, m0: usize, len: usize, max_words: usize) -> Result<InclusionReport> {
    if m == 0 || m > m0 || (m0 - m) % 2 != 0 {
        return Err(Error::Precondition(format!("inclusion needs 1 <= m <= m0 with m0 - m even, got ({m}, {m0})")));
    }
    let small = j_zero(m, len, max_words)?;
    let big = j_zero(m0, len, max_words)?;
    let mut missing = Vec::new();
    for w in &small {
        let e = w.embed(m0)?;
        if big.binary_search(&e).is_err() {
            missing.push(e.letters);
        }
    }
    Ok(InclusionReport {
        m,
        m0,
        len,
        size_small: small.len(),
        size_big: big.len(),
        missing,
        note: J0_ASSUMPTION,
    })
}
