//! Words over non-negative integer symbols: square detection, a ternary
//! squarefree generator, and the two interleaving constructions that keep
//! words squarefree when they are interrupted by blocks over a disjoint
//! alphabet.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Symbol = u32;

/// A finite sequence of symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Symbol> {
        self.0
    }

    pub fn alphabet(&self) -> BTreeSet<Symbol> {
        self.0.iter().copied().collect()
    }

    /// True if all symbols are pairwise distinct.
    pub fn is_rainbow(&self) -> bool {
        self.alphabet().len() == self.0.len()
    }

    pub fn find_repetition(&self) -> Option<Repetition> {
        find_repetition(&self.0)
    }

    pub fn is_nonrepetitive(&self) -> bool {
        is_nonrepetitive(&self.0)
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// A square `w[start..start + 2 * half_length]` whose two halves are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Repetition {
    pub start: usize,
    pub half_length: usize,
}

/// Returns the square with the smallest start, ties broken by the smallest
/// half length, or `None` if the word is squarefree.
///
/// For each half length `n` the scan keeps the length of the current run of
/// positions with `w[i] == w[i + n]`; a run reaching `n` marks a square.
/// Total cost is O(L²).
pub fn find_repetition<T: PartialEq>(w: &[T]) -> Option<Repetition> {
    let len = w.len();
    let mut best: Option<Repetition> = None;
    for half in 1..=len / 2 {
        // Only squares starting strictly before the current best can win.
        let max_start = match best {
            Some(Repetition { start: 0, .. }) => break,
            Some(b) => (b.start - 1).min(len - 2 * half),
            None => len - 2 * half,
        };
        let mut run = 0usize;
        for i in 0..max_start + half {
            if w[i] == w[i + half] {
                run += 1;
                if run == half {
                    best = Some(Repetition {
                        start: i + 1 - half,
                        half_length: half,
                    });
                    break;
                }
            } else {
                run = 0;
            }
        }
    }
    best
}

pub fn is_nonrepetitive<T: PartialEq>(w: &[T]) -> bool {
    find_repetition(w).is_none()
}

/// Prefix of the fixed point of the morphism `0 -> 012, 1 -> 02, 2 -> 1`,
/// the ternary word counting the 1s between consecutive 0s of the
/// Thue-Morse sequence. It is squarefree.
pub fn thue_word(length: usize) -> Word {
    let mut w: Vec<Symbol> = vec![0];
    while w.len() < length {
        let mut next = Vec::with_capacity(w.len() * 3);
        for &s in &w {
            match s {
                0 => next.extend_from_slice(&[0, 1, 2]),
                1 => next.extend_from_slice(&[0, 2]),
                _ => next.push(1),
            }
        }
        w = next;
    }
    w.truncate(length);
    Word(w)
}

/// Split positions `n_1 < ... < n_r` of a base word of length `m`, each in
/// `1..m`, so that every segment between consecutive cuts is nonempty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CutPoints(Vec<usize>);

impl CutPoints {
    pub fn new(cuts: Vec<usize>) -> Self {
        CutPoints(cuts)
    }

    pub fn none() -> Self {
        CutPoints(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks the cuts against a base word of length `m`.
    pub fn validate(&self, m: usize) -> Result<(), WordError> {
        let mut prev = 0;
        for &c in &self.0 {
            if c <= prev || c >= m {
                return Err(WordError::BadCuts {
                    cuts: self.0.clone(),
                    base_len: m,
                });
            }
            prev = c;
        }
        Ok(())
    }

    /// The segments `A[0..n_1], A[n_1..n_2], ..., A[n_r..m]` as ranges.
    fn segments(&self, m: usize) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        let starts = std::iter::once(0).chain(self.0.iter().copied());
        let ends = self.0.iter().copied().chain(std::iter::once(m));
        starts.zip(ends).map(|(s, e)| s..e)
    }
}

/// Which input of an interleaving failed its own check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordRole {
    Base,
    Block(usize),
}

impl fmt::Display for WordRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordRole::Base => f.write_str("base word"),
            WordRole::Block(i) => write!(f, "block {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("symbol {symbol} occurs in both the base word and an interrupting block")]
    AlphabetOverlap { symbol: Symbol },
    #[error("{role} contains a repetition")]
    NotNonrepetitive { role: WordRole },
    #[error("base word is not rainbow")]
    NotRainbow,
    #[error("cut points {cuts:?} are not strictly increasing interior positions of a word of length {base_len}")]
    BadCuts { cuts: Vec<usize>, base_len: usize },
    #[error("expected {expected} interrupting blocks, got {found}")]
    BlockCount { expected: usize, found: usize },
    #[error("interior block {index} is empty")]
    EmptyInteriorBlock { index: usize },
    #[error("base word is empty")]
    EmptyBase,
}

/// Interleaves `blocks[0] A[..n_1] blocks[1] A[n_1..n_2] ... A[n_r..] blocks[r+1]`.
///
/// The base word and every block must be squarefree, and the base alphabet
/// must be disjoint from the union of the block alphabets. Under these
/// conditions the output is squarefree: deleting the block symbols from a
/// square leaves a square of the base word, unless the square lies inside a
/// single block. The outer blocks may be empty, the interior ones may not.
pub fn interleave(a: &Word, cuts: &CutPoints, blocks: &[Word]) -> Result<Word, WordError> {
    check_shape(a, cuts, blocks.len())?;
    for (index, b) in blocks.iter().enumerate() {
        if b.is_empty() && index != 0 && index != blocks.len() - 1 {
            return Err(WordError::EmptyInteriorBlock { index });
        }
    }
    if !a.is_nonrepetitive() {
        return Err(WordError::NotNonrepetitive {
            role: WordRole::Base,
        });
    }
    for (i, b) in blocks.iter().enumerate() {
        if !b.is_nonrepetitive() {
            return Err(WordError::NotNonrepetitive {
                role: WordRole::Block(i),
            });
        }
    }
    let base = a.alphabet();
    if let Some(&symbol) = blocks
        .iter()
        .flat_map(|b| b.iter())
        .find(|s| base.contains(s))
    {
        return Err(WordError::AlphabetOverlap { symbol });
    }

    let out = splice(a, cuts, blocks.iter().map(|b| b.symbols()));
    debug_assert!(out.is_nonrepetitive());
    Ok(out)
}

/// Interrupts a rainbow word with single symbols outside its alphabet:
/// `b_0 A[..n_1] b_1 ... A[n_r..] b_{r+1}`. The singles need not be distinct.
pub fn rainbow_interrupt(
    a: &Word,
    cuts: &CutPoints,
    singles: &[Symbol],
) -> Result<Word, WordError> {
    check_shape(a, cuts, singles.len())?;
    if !a.is_rainbow() {
        return Err(WordError::NotRainbow);
    }
    let base = a.alphabet();
    if let Some(&symbol) = singles.iter().find(|s| base.contains(s)) {
        return Err(WordError::AlphabetOverlap { symbol });
    }

    let out = splice(a, cuts, singles.iter().map(std::slice::from_ref));
    debug_assert!(out.is_nonrepetitive());
    Ok(out)
}

fn check_shape(a: &Word, cuts: &CutPoints, pieces: usize) -> Result<(), WordError> {
    if a.is_empty() {
        return Err(WordError::EmptyBase);
    }
    cuts.validate(a.len())?;
    if pieces != cuts.len() + 2 {
        return Err(WordError::BlockCount {
            expected: cuts.len() + 2,
            found: pieces,
        });
    }
    Ok(())
}

fn splice<'a>(a: &Word, cuts: &CutPoints, mut pieces: impl Iterator<Item = &'a [Symbol]>) -> Word {
    let mut out = Vec::new();
    for seg in cuts.segments(a.len()) {
        out.extend_from_slice(pieces.next().expect("piece count checked"));
        out.extend_from_slice(&a[seg]);
    }
    out.extend_from_slice(pieces.next().expect("piece count checked"));
    Word(out)
}
