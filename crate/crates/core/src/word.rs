//! Finite words and the prefix/suffix algebra.
//!
//! A [`Word`] is an immutable sequence of letters. Output-alphabet words use
//! `char` letters (the default type parameter); words over the two-letter
//! domain of a binary morphism use [`Bin`] and are aliased as [`BinWord`].

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Anything usable as a letter.
pub trait Symbol: Copy + Eq + Ord + Hash + fmt::Debug + fmt::Display {}

impl<T: Copy + Eq + Ord + Hash + fmt::Debug + fmt::Display> Symbol for T {}

/// A letter of the binary domain alphabet `{0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bin {
    Zero,
    One,
}

impl Bin {
    pub const BOTH: [Bin; 2] = [Bin::Zero, Bin::One];

    pub fn flip(self) -> Bin {
        match self {
            Bin::Zero => Bin::One,
            Bin::One => Bin::Zero,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Bin::Zero => 0,
            Bin::One => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Bin::Zero => '0',
            Bin::One => '1',
        }
    }
}

impl fmt::Display for Bin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word. The empty word is the empty sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word<L = char>(Vec<L>);

/// A word over `{0, 1}`.
pub type BinWord = Word<Bin>;

impl<L> Default for Word<L> {
    fn default() -> Self {
        Word(Vec::new())
    }
}

impl<L: Symbol> Word<L> {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<L>) -> Self {
        Word(letters)
    }

    pub fn letter(l: L) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<L> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<L> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<L> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word<L>) -> Word<L> {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, l: L) {
        self.0.push(l);
    }

    pub fn append(&mut self, other: &Word<L>) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn pow(&self, k: usize) -> Word<L> {
        Word(self.0.repeat(k))
    }

    /// The first `n` letters (the whole word if it is shorter).
    pub fn prefix(&self, n: usize) -> Word<L> {
        Word(self.0[..n.min(self.len())].to_vec())
    }

    /// The last `n` letters (the whole word if it is shorter).
    pub fn suffix(&self, n: usize) -> Word<L> {
        let n = n.min(self.len());
        Word(self.0[self.len() - n..].to_vec())
    }

    /// Drops the first `n` letters.
    pub fn skip(&self, n: usize) -> Word<L> {
        Word(self.0[n.min(self.len())..].to_vec())
    }

    pub fn starts_with(&self, prefix: &Word<L>) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &Word<L>) -> bool {
        self.0.ends_with(&suffix.0)
    }
}

impl BinWord {
    /// Swaps `0` and `1` letter by letter.
    pub fn flipped(&self) -> BinWord {
        Word(self.0.iter().map(|b| b.flip()).collect())
    }
}

impl<L: Symbol> FromIterator<L> for Word<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl From<&str> for Word<char> {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}

impl From<String> for Word<char> {
    fn from(s: String) -> Self {
        Word(s.chars().collect())
    }
}

impl FromStr for BinWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(Bin::Zero),
                '1' => Ok(Bin::One),
                other => Err(Error::InvalidBinaryLetter(other)),
            })
            .collect()
    }
}

/// Shorthand for a binary word literal. Panics on anything but `0`/`1`.
pub fn bits(s: &str) -> BinWord {
    s.parse().expect("binary word literal")
}

impl<L: Symbol> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl<L: Symbol> fmt::Debug for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Longest common prefix.
pub fn lcp<L: Symbol>(u: &Word<L>, v: &Word<L>) -> Word<L> {
    let n = u.0.iter().zip(&v.0).take_while(|(a, b)| a == b).count();
    u.prefix(n)
}

/// Longest common suffix.
pub fn lcs<L: Symbol>(u: &Word<L>, v: &Word<L>) -> Word<L> {
    let n =
        u.0.iter()
            .rev()
            .zip(v.0.iter().rev())
            .take_while(|(a, b)| a == b)
            .count();
    u.suffix(n)
}

/// `u` is a prefix of `v`.
pub fn is_prefix<L: Symbol>(u: &Word<L>, v: &Word<L>) -> bool {
    v.starts_with(u)
}

/// `u` is a suffix of `v`.
pub fn is_suffix<L: Symbol>(u: &Word<L>, v: &Word<L>) -> bool {
    v.ends_with(u)
}

pub fn prefix_comparable<L: Symbol>(u: &Word<L>, v: &Word<L>) -> bool {
    is_prefix(u, v) || is_prefix(v, u)
}

pub fn suffix_comparable<L: Symbol>(u: &Word<L>, v: &Word<L>) -> bool {
    is_suffix(u, v) || is_suffix(v, u)
}

/// The word `z` with `v = u·z`.
pub fn strip_prefix<L: Symbol>(u: &Word<L>, v: &Word<L>) -> Result<Word<L>> {
    if is_prefix(u, v) {
        Ok(v.skip(u.len()))
    } else {
        Err(Error::NotAPrefix {
            prefix: u.to_string(),
            word: v.to_string(),
        })
    }
}

/// The word `z` with `v = z·u`.
pub fn strip_suffix<L: Symbol>(u: &Word<L>, v: &Word<L>) -> Result<Word<L>> {
    if is_suffix(u, v) {
        Ok(v.prefix(v.len() - u.len()))
    } else {
        Err(Error::NotASuffix {
            suffix: u.to_string(),
            word: v.to_string(),
        })
    }
}

pub fn commutes<L: Symbol>(u: &Word<L>, v: &Word<L>) -> bool {
    u.len() + v.len() == 0 || (u.concat(v) == v.concat(u))
}

fn covering_power<L: Symbol>(u: &Word<L>, v: &Word<L>) -> Result<Option<Word<L>>> {
    if u.is_empty() {
        return Ok(None);
    }
    if v.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    Ok(Some(v.pow(u.len().div_ceil(v.len()))))
}

/// Every binary word of length at most `max_len`, shortest first.
pub fn bin_words_up_to(max_len: usize) -> impl Iterator<Item = BinWord> {
    (0..=max_len).flat_map(|n| {
        (0u64..1 << n).map(move |mask| {
            (0..n)
                .map(|i| {
                    if mask >> (n - 1 - i) & 1 == 1 {
                        Bin::One
                    } else {
                        Bin::Zero
                    }
                })
                .collect()
        })
    })
}

/// `u` is a suffix of `v^k` for `k = ⌈|u|/|v|⌉`.
pub fn is_suffix_of_power<L: Symbol>(u: &Word<L>, v: &Word<L>) -> Result<bool> {
    Ok(covering_power(u, v)?.is_none_or(|p| is_suffix(u, &p)))
}

/// `u` is a prefix of `v^k` for `k = ⌈|u|/|v|⌉`.
pub fn is_prefix_of_power<L: Symbol>(u: &Word<L>, v: &Word<L>) -> Result<bool> {
    Ok(covering_power(u, v)?.is_none_or(|p| is_prefix(u, &p)))
}
