//! Binary morphisms `{0,1}* → Σ*` given by their two letter images.

use crate::error::{inconsistency, Error, Result};
use crate::word::{commutes, is_prefix, lcp, strip_prefix, Bin, BinWord, Symbol, Word};

/// A morphism on `{0,1}*` whose images form a binary code.
///
/// The same type serves output-alphabet morphisms (`L = char`) and the block
/// morphisms on `{0,1}*` (`L = Bin`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinMorphism<L: Symbol = char> {
    images: [Word<L>; 2],
}

impl<L: Symbol> BinMorphism<L> {
    /// Fails with [`Error::NotACode`] when the images commute, which includes
    /// any empty image.
    pub fn new(image0: Word<L>, image1: Word<L>) -> Result<Self> {
        if commutes(&image0, &image1) {
            return Err(Error::NotACode(image0.to_string(), image1.to_string()));
        }
        Ok(BinMorphism {
            images: [image0, image1],
        })
    }

    pub fn image(&self, b: Bin) -> &Word<L> {
        &self.images[b.index()]
    }

    pub fn images(&self) -> (&Word<L>, &Word<L>) {
        (&self.images[0], &self.images[1])
    }

    pub fn apply(&self, w: &BinWord) -> Word<L> {
        let mut out = Word::empty();
        for &b in w.letters() {
            out.append(self.image(b));
        }
        out
    }

    /// `f(01) ∧_p f(10)`.
    pub fn alpha(&self) -> Word<L> {
        let (x, y) = self.images();
        lcp(&x.concat(y), &y.concat(x))
    }

    /// The conjugate morphism `w ↦ α⁻¹ f(w) α`, which is always marked.
    pub fn marked_version(&self) -> Result<BinMorphism<L>> {
        let alpha = self.alpha();
        let conj = |img: &Word<L>| {
            strip_prefix(&alpha, &img.concat(&alpha))
                .map_err(|_| inconsistency(format!("α = {alpha} is not a prefix of {img}·α")))
        };
        let marked = BinMorphism {
            images: [conj(&self.images[0])?, conj(&self.images[1])?],
        };
        if !marked.is_marked() {
            return Err(inconsistency(format!(
                "marked version ({}, {}) is not marked",
                marked.images[0], marked.images[1]
            )));
        }
        Ok(marked)
    }

    pub fn is_marked(&self) -> bool {
        match (self.images[0].first(), self.images[1].first()) {
            (Some(a), Some(b)) => a != b,
            _ => false,
        }
    }

    /// The morphism `w ↦ f(w̄)` where `w̄` swaps `0` and `1`.
    pub fn with_letters_swapped(&self) -> BinMorphism<L> {
        BinMorphism {
            images: [self.images[1].clone(), self.images[0].clone()],
        }
    }

    /// The letter whose image starts with `l`. Unique for marked morphisms.
    pub fn letter_starting_with(&self, l: L) -> Option<Bin> {
        Bin::BOTH
            .into_iter()
            .find(|&b| self.image(b).first() == Some(l))
    }

    /// Factorizes `w` over the images of a marked morphism.
    ///
    /// The images of a marked morphism form a prefix code, so the greedy
    /// left-to-right parse is the only one.
    pub fn parse_marked(&self, w: &Word<L>) -> Option<BinWord> {
        debug_assert!(self.is_marked());
        let mut rest = w.letters();
        let mut out = BinWord::empty();
        while let Some(&l) = rest.first() {
            let b = self.letter_starting_with(l)?;
            let img = self.image(b).letters();
            if !rest.starts_with(img) {
                return None;
            }
            out.push(b);
            rest = &rest[img.len()..];
        }
        Some(out)
    }
}

/// The α-prefix property: `α ≤_p f(w)·α`.
pub fn alpha_prefix_holds<L: Symbol>(m: &BinMorphism<L>, w: &BinWord) -> bool {
    let alpha = m.alpha();
    is_prefix(&alpha, &m.apply(w).concat(&alpha))
}
