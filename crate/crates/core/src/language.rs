//! Bounded expansion of regular expressions over words.

use std::collections::BTreeSet;

use crate::word::{Symbol, Word};

/// A regular expression whose atoms are whole words.
#[derive(Clone, Debug)]
pub enum Expr<L: Symbol> {
    Atom(Word<L>),
    Union(Vec<Expr<L>>),
    Concat(Vec<Expr<L>>),
    Star(Box<Expr<L>>),
}

impl<L: Symbol> Expr<L> {
    pub fn atom(w: Word<L>) -> Self {
        Expr::Atom(w)
    }

    pub fn star(e: Expr<L>) -> Self {
        Expr::Star(Box::new(e))
    }

    /// All words of the language with length at most `max_len`.
    pub fn expand(&self, max_len: usize) -> BTreeSet<Word<L>> {
        match self {
            Expr::Atom(w) => {
                if w.len() <= max_len {
                    BTreeSet::from([w.clone()])
                } else {
                    BTreeSet::new()
                }
            }
            Expr::Union(parts) => parts.iter().flat_map(|p| p.expand(max_len)).collect(),
            Expr::Concat(parts) => {
                let mut acc = BTreeSet::from([Word::empty()]);
                for p in parts {
                    let right = p.expand(max_len);
                    acc = concat_bounded(&acc, &right, max_len);
                }
                acc
            }
            Expr::Star(inner) => {
                let base: Vec<Word<L>> = inner
                    .expand(max_len)
                    .into_iter()
                    .filter(|w| !w.is_empty())
                    .collect();
                star_bounded(&base, max_len)
            }
        }
    }
}

fn concat_bounded<L: Symbol>(
    left: &BTreeSet<Word<L>>,
    right: &BTreeSet<Word<L>>,
    max_len: usize,
) -> BTreeSet<Word<L>> {
    let mut out = BTreeSet::new();
    for a in left {
        for b in right {
            if a.len() + b.len() <= max_len {
                out.insert(a.concat(b));
            }
        }
    }
    out
}

/// The submonoid generated by `base`, up to `max_len`. Empty generators are
/// ignored.
pub fn star_bounded<L: Symbol>(base: &[Word<L>], max_len: usize) -> BTreeSet<Word<L>> {
    let mut out = BTreeSet::from([Word::empty()]);
    let mut frontier = vec![Word::empty()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for b in base.iter().filter(|b| !b.is_empty()) {
                if w.len() + b.len() <= max_len {
                    let ext = w.concat(b);
                    if !out.contains(&ext) {
                        out.insert(ext.clone());
                        next.push(ext);
                    }
                }
            }
        }
        frontier = next;
    }
    out
}

/// A finite slice of a language: every word of length at most `max_len`,
/// sorted by length and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanguageSample {
    pub max_len: usize,
    pub words: Vec<Word>,
}

impl LanguageSample {
    pub fn new(max_len: usize, words: impl IntoIterator<Item = Word>) -> Self {
        let mut words: Vec<Word> = words.into_iter().filter(|w| w.len() <= max_len).collect();
        words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        words.dedup();
        LanguageSample { max_len, words }
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words
            .binary_search_by(|x| x.len().cmp(&w.len()).then_with(|| x.cmp(w)))
            .is_ok()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The length-`max_len` restriction of this sample.
    pub fn restrict(&self, max_len: usize) -> LanguageSample {
        LanguageSample::new(max_len, self.words.iter().cloned())
    }
}
