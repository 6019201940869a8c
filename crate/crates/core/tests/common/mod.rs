#![allow(dead_code)]

use std::collections::BTreeSet;

use bintersect_core::morphism::BinMorphism;
use bintersect_core::structure::{make_context, CharacterizationContext, ContextOutcome};
use bintersect_core::word::commutes;
use bintersect_core::{characterize, Bin, BinWord, IntersectionDescription, Shape, Word};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn word(rng: &mut impl Rng, min: usize, max: usize) -> Word {
    let n = rng.gen_range(min..=max);
    (0..n).map(|_| if rng.gen() { 'a' } else { 'b' }).collect()
}

pub fn bin_word(rng: &mut impl Rng, max: usize) -> BinWord {
    let n = rng.gen_range(0..=max);
    (0..n)
        .map(|_| if rng.gen() { Bin::One } else { Bin::Zero })
        .collect()
}

/// A binary code over `{a, b}` with both generators of length 1 to `max`.
pub fn code(rng: &mut impl Rng, max: usize) -> (Word, Word) {
    loop {
        let (x, y) = (word(rng, 1, max), word(rng, 1, max));
        if !commutes(&x, &y) {
            return (x, y);
        }
    }
}

pub type Codes = [Word; 4];

pub fn codes(rng: &mut impl Rng, max: usize) -> Codes {
    let (x, y) = code(rng, max);
    let (u, v) = code(rng, max);
    [x, y, u, v]
}

pub fn context(c: &Codes) -> Option<CharacterizationContext> {
    match make_context(&c[0], &c[1], &c[2], &c[3]).unwrap() {
        ContextOutcome::Comparable(ctx) => Some(*ctx),
        ContextOutcome::Incomparable { .. } => None,
    }
}

pub fn describe(c: &Codes) -> IntersectionDescription {
    characterize(&c[0], &c[1], &c[2], &c[3]).unwrap()
}

pub fn marked_pair(ctx: &CharacterizationContext) -> (&BinMorphism, &BinMorphism) {
    (&ctx.g, &ctx.h)
}

/// Distinct code quadruples whose intersection is an infinite family, found
/// by seeded rejection sampling.
pub fn random_families(seed: u64, count: usize) -> Vec<(Codes, IntersectionDescription)> {
    let mut rng = rng(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let c = codes(&mut rng, 4);
        let d = describe(&c);
        if matches!(d.shape, Shape::InfiniteFamily(_)) && seen.insert(c.clone()) {
            out.push((c, d));
        }
    }
    out
}
