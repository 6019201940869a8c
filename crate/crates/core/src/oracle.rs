//! Brute-force reference computations for small lengths.

use std::collections::BTreeSet;

use crate::language::{star_bounded, LanguageSample};
use crate::structure::{language_of, IntersectionDescription};
use crate::word::{Symbol, Word};

/// `w ∈ {gens}*`.
pub fn member<L: Symbol>(w: &Word<L>, gens: &[Word<L>]) -> bool {
    let letters = w.letters();
    let n = letters.len();
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 0..n {
        if !reach[i] {
            continue;
        }
        for g in gens.iter().filter(|g| !g.is_empty()) {
            let end = i + g.len();
            if end <= n && &letters[i..end] == g.letters() {
                reach[end] = true;
            }
        }
    }
    reach[n]
}

/// The number of factorizations of `w` over `gens`.
pub fn factorization_count<L: Symbol>(w: &Word<L>, gens: &[Word<L>]) -> u64 {
    let letters = w.letters();
    let n = letters.len();
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for i in 0..n {
        if ways[i] == 0 {
            continue;
        }
        for g in gens.iter().filter(|g| !g.is_empty()) {
            let end = i + g.len();
            if end <= n && &letters[i..end] == g.letters() {
                ways[end] = ways[end].saturating_add(ways[i]);
            }
        }
    }
    ways[n]
}

/// A factorization of `w` over `gens`, as indices into `gens`.
pub fn factorize<L: Symbol>(w: &Word<L>, gens: &[Word<L>]) -> Option<Vec<usize>> {
    let letters = w.letters();
    let n = letters.len();
    // back[j]: the generator ending some factorization of the first j letters.
    let mut back: Vec<Option<usize>> = vec![None; n + 1];
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 0..n {
        if !reach[i] {
            continue;
        }
        for (k, g) in gens.iter().enumerate().filter(|(_, g)| !g.is_empty()) {
            let end = i + g.len();
            if end <= n && !reach[end] && &letters[i..end] == g.letters() {
                reach[end] = true;
                back[end] = Some(k);
            }
        }
    }
    if !reach[n] {
        return None;
    }
    let mut out = Vec::new();
    let mut j = n;
    while j > 0 {
        let k = back[j]?;
        out.push(k);
        j -= gens[k].len();
    }
    out.reverse();
    Some(out)
}

/// Upper estimate of how many words `{gens}*` has up to `max_len`, counting
/// factorizations.
fn factorization_mass(gens: &[Word], max_len: usize) -> u64 {
    let mut count = vec![0u64; max_len + 1];
    count[0] = 1;
    for n in 1..=max_len {
        for g in gens.iter().filter(|g| !g.is_empty() && g.len() <= n) {
            count[n] = count[n].saturating_add(count[n - g.len()]);
        }
    }
    count.iter().fold(0u64, |a, &b| a.saturating_add(b))
}

/// `{gens}*` up to `max_len`.
pub fn enumerate_monoid(gens: &[Word], max_len: usize) -> LanguageSample {
    LanguageSample::new(max_len, star_bounded(gens, max_len))
}

/// `{x,y}* ∩ {u,v}*` up to `max_len`, by enumerating the smaller monoid and
/// filtering with the other.
pub fn intersect_bruteforce(
    x: &Word,
    y: &Word,
    u: &Word,
    v: &Word,
    max_len: usize,
) -> LanguageSample {
    let first = [x.clone(), y.clone()];
    let second = [u.clone(), v.clone()];
    let (enumerated, filter) =
        if factorization_mass(&first, max_len) <= factorization_mass(&second, max_len) {
            (&first, &second)
        } else {
            (&second, &first)
        };
    let words: BTreeSet<Word> = star_bounded(enumerated, max_len)
        .into_iter()
        .filter(|w| member(w, filter))
        .collect();
    LanguageSample::new(max_len, words)
}

pub const WITNESS_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub max_len: usize,
    pub equal: bool,
    /// In the brute-force intersection but not in the description.
    pub missing: Vec<Word>,
    /// In the description but not in the brute-force intersection.
    pub extra: Vec<Word>,
}

/// Compares the described language with brute force up to `max_len`.
pub fn verify(
    x: &Word,
    y: &Word,
    u: &Word,
    v: &Word,
    desc: &IntersectionDescription,
    max_len: usize,
) -> VerificationReport {
    let truth = intersect_bruteforce(x, y, u, v, max_len);
    let claimed = language_of(desc, max_len);
    let missing: Vec<Word> = truth
        .words
        .iter()
        .filter(|w| !claimed.contains(w))
        .take(WITNESS_CAP)
        .cloned()
        .collect();
    let extra: Vec<Word> = claimed
        .words
        .iter()
        .filter(|w| !truth.contains(w))
        .take(WITNESS_CAP)
        .cloned()
        .collect();
    VerificationReport {
        max_len,
        equal: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
    }
}
