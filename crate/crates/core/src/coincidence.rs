//! The deterministic overflow matcher on a pair of marked morphisms.
//!
//! Two words `α·g(r)` and `h(s)` are grown letter by letter. At every point
//! one side is ahead by a nonempty *debt*; the lagging side is extended by the
//! unique letter whose image starts with the first letter of the debt (both
//! morphisms are marked, so there is at most one). The debt is always a suffix
//! of the initial debt or of one of the four images, so the state space is
//! finite and every run ends in a target, a cycle or a mismatch.

use std::collections::HashSet;
use std::fmt;

use crate::error::{inconsistency, Error, Result};
use crate::morphism::BinMorphism;
use crate::word::{is_prefix, is_suffix, Bin, BinWord, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    GAhead,
    HAhead,
}

impl Side {
    fn tag(self) -> char {
        match self {
            Side::GAhead => 'G',
            Side::HAhead => 'H',
        }
    }
}

/// Which side leads, and by how much. The debt is never empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OverflowState {
    pub side: Side,
    pub debt: Word,
}

impl OverflowState {
    pub fn g_ahead(debt: Word) -> Self {
        OverflowState {
            side: Side::GAhead,
            debt,
        }
    }
}

/// The letter appended by one step, tagged with the side it went to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extension {
    GSide(Bin),
    HSide(Bin),
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extension::GSide(b) => write!(f, "G:{b}"),
            Extension::HSide(b) => write!(f, "H:{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum After {
    Balanced,
    State(OverflowState),
}

/// No image of the lagging side is prefix-comparable with the debt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stuck;

/// A pair of words `(g_word, h_word)`. Letter blocks have both components
/// nonempty; the starting block may have empty components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub g_word: BinWord,
    pub h_word: BinWord,
}

impl Block {
    pub fn new(g_word: BinWord, h_word: BinWord) -> Self {
        Block { g_word, h_word }
    }

    pub fn empty() -> Self {
        Block::new(BinWord::empty(), BinWord::empty())
    }

    /// The same block with `0` and `1` swapped in both components.
    pub fn flipped(&self) -> Block {
        Block::new(self.g_word.flipped(), self.h_word.flipped())
    }
}

/// The optional `0`- and `1`-blocks. Together they define the (possibly
/// partial) block morphisms `𝔢` (first components) and `𝔣` (second).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialBlocks {
    pub block0: Option<Block>,
    pub block1: Option<Block>,
}

impl PartialBlocks {
    pub fn get(&self, b: Bin) -> Option<&Block> {
        match b {
            Bin::Zero => self.block0.as_ref(),
            Bin::One => self.block1.as_ref(),
        }
    }

    pub fn both(&self) -> Option<(&Block, &Block)> {
        Some((self.block0.as_ref()?, self.block1.as_ref()?))
    }

    pub fn require(&self, b: Bin) -> Result<&Block> {
        self.get(b).ok_or(Error::MissingBlock(b.as_char()))
    }

    /// `𝔢(τ)`.
    pub fn e(&self, tau: &BinWord) -> Result<BinWord> {
        let mut out = BinWord::empty();
        for &b in tau.letters() {
            out.append(&self.require(b)?.g_word);
        }
        Ok(out)
    }

    /// `𝔣(τ)`.
    pub fn f(&self, tau: &BinWord) -> Result<BinWord> {
        let mut out = BinWord::empty();
        for &b in tau.letters() {
            out.append(&self.require(b)?.h_word);
        }
        Ok(out)
    }

    /// Relabels the block domain: swaps the two blocks and flips the letters
    /// inside them. These are the blocks of the letter-swapped morphisms.
    pub fn mirrored(&self) -> PartialBlocks {
        PartialBlocks {
            block0: self.block1.as_ref().map(Block::flipped),
            block1: self.block0.as_ref().map(Block::flipped),
        }
    }
}

/// One line of the step log.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEvent {
    pub state: OverflowState,
    pub extension: Extension,
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "side={} debt={} extend={}",
            self.state.side.tag(),
            self.state.debt,
            self.extension
        )
    }
}

pub type Tracer<'a> = &'a mut dyn FnMut(&TraceEvent);

/// Termination predicates a run can stop at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    /// The debt was consumed exactly.
    Balanced,
    /// The accumulated pair extends to a solution of `α·g(r) = h(s)·α`.
    ///
    /// Checked right after every H-side extension: the H-cut `s` closes iff
    /// `h(s)·α` lies in `α·g({0,1}*)`. The completion of `r` is the unique
    /// parse of the leftover over the images of `g`, which may diverge from
    /// the letters the run itself would choose next.
    Closes(Word),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunOutcome {
    ReachedTarget {
        g_word: BinWord,
        h_word: BinWord,
        target: Target,
    },
    Cycle {
        at: OverflowState,
    },
    Stuck {
        at: OverflowState,
    },
}

/// Where a run begins: the state plus the words already accumulated.
#[derive(Clone, Debug)]
pub struct Start {
    pub state: OverflowState,
    pub g_word: BinWord,
    pub h_word: BinWord,
}

/// Extends the lagging side by one letter.
pub fn step(
    g: &BinMorphism,
    h: &BinMorphism,
    st: &OverflowState,
) -> std::result::Result<(Extension, After), Stuck> {
    let lead = st.debt.first().ok_or(Stuck)?;
    let (lagging, wrap): (&BinMorphism, fn(Bin) -> Extension) = match st.side {
        Side::GAhead => (h, Extension::HSide),
        Side::HAhead => (g, Extension::GSide),
    };
    let b = lagging.letter_starting_with(lead).ok_or(Stuck)?;
    let img = lagging.image(b);
    let ext = wrap(b);
    if *img == st.debt {
        Ok((ext, After::Balanced))
    } else if is_prefix(img, &st.debt) {
        let next = OverflowState {
            side: st.side,
            debt: st.debt.skip(img.len()),
        };
        Ok((ext, After::State(next)))
    } else if is_prefix(&st.debt, img) {
        let flipped = match st.side {
            Side::GAhead => Side::HAhead,
            Side::HAhead => Side::GAhead,
        };
        let next = OverflowState {
            side: flipped,
            debt: img.skip(st.debt.len()),
        };
        Ok((ext, After::State(next)))
    } else {
        Err(Stuck)
    }
}

/// Upper bound on the number of distinct states a run from `init_debt` visits.
pub fn state_space_bound(g: &BinMorphism, h: &BinMorphism, init_debt: &Word) -> usize {
    let images: usize = [g, h]
        .iter()
        .map(|m| m.image(Bin::Zero).len() + m.image(Bin::One).len())
        .sum();
    2 * (init_debt.len() + images + 5)
}

pub fn default_step_cap(g: &BinMorphism, h: &BinMorphism, init_debt: &Word) -> usize {
    4 * state_space_bound(g, h, init_debt)
}

fn debt_invariant_holds(g: &BinMorphism, h: &BinMorphism, init: &Word, debt: &Word) -> bool {
    is_suffix(debt, init)
        || [g, h]
            .iter()
            .any(|m| Bin::BOTH.iter().any(|&b| is_suffix(debt, m.image(b))))
}

fn closing_completion(g: &BinMorphism, alpha: &Word, after: &OverflowState) -> Option<BinWord> {
    match after.side {
        Side::GAhead => {
            if after.debt.len() > alpha.len() || !is_prefix(&after.debt, alpha) {
                return None;
            }
            g.parse_marked(&alpha.skip(after.debt.len()))
        }
        Side::HAhead => g.parse_marked(&after.debt.concat(alpha)),
    }
}

/// Iterates [`step`] until a target, a revisited state, or a mismatch.
///
/// A `Balanced` event always ends the run; it is an error when `Balanced` is
/// not among the targets, since there is no state to continue from.
pub fn run(
    g: &BinMorphism,
    h: &BinMorphism,
    start: Start,
    targets: &[Target],
    step_cap: usize,
    trace: Tracer<'_>,
) -> Result<RunOutcome> {
    let init_debt = start.state.debt.clone();
    let mut state = start.state;
    let mut r = start.g_word;
    let mut s = start.h_word;
    // (state, last extension was on H). Closing checks depend on both.
    let mut seen: HashSet<(OverflowState, bool)> = HashSet::new();
    let mut just_extended_h = false;
    for _ in 0..step_cap {
        if !debt_invariant_holds(g, h, &init_debt, &state.debt) {
            return Err(inconsistency(format!(
                "debt {} is not a suffix of the initial debt or of an image",
                state.debt
            )));
        }
        if !seen.insert((state.clone(), just_extended_h)) {
            return Ok(RunOutcome::Cycle { at: state });
        }
        let (ext, after) = match step(g, h, &state) {
            Ok(x) => x,
            Err(Stuck) => return Ok(RunOutcome::Stuck { at: state }),
        };
        trace(&TraceEvent {
            state: state.clone(),
            extension: ext,
        });
        match ext {
            Extension::GSide(b) => r.push(b),
            Extension::HSide(b) => s.push(b),
        }
        let next = match after {
            After::Balanced => {
                if targets.contains(&Target::Balanced) {
                    return Ok(RunOutcome::ReachedTarget {
                        g_word: r,
                        h_word: s,
                        target: Target::Balanced,
                    });
                }
                return Err(inconsistency(
                    "run balanced although balancing was not a target",
                ));
            }
            After::State(next) => next,
        };
        just_extended_h = matches!(ext, Extension::HSide(_));
        if just_extended_h {
            for t in targets {
                if let Target::Closes(alpha) = t {
                    if let Some(z) = closing_completion(g, alpha, &next) {
                        return Ok(RunOutcome::ReachedTarget {
                            g_word: r.concat(&z),
                            h_word: s,
                            target: t.clone(),
                        });
                    }
                }
            }
        }
        state = next;
    }
    Err(inconsistency(format!(
        "run exceeded the step cap {step_cap} without revisiting a state"
    )))
}

fn noop(_: &TraceEvent) {}

/// The least `(p, q)` with `α·g(p) = h(q)`, if any.
pub fn starting_block(g: &BinMorphism, h: &BinMorphism, alpha: &Word) -> Result<Option<Block>> {
    starting_block_traced(g, h, alpha, &mut noop)
}

pub fn starting_block_traced(
    g: &BinMorphism,
    h: &BinMorphism,
    alpha: &Word,
    trace: Tracer<'_>,
) -> Result<Option<Block>> {
    if alpha.is_empty() {
        return Ok(Some(Block::empty()));
    }
    let start = Start {
        state: OverflowState::g_ahead(alpha.clone()),
        g_word: BinWord::empty(),
        h_word: BinWord::empty(),
    };
    let cap = default_step_cap(g, h, alpha);
    match run(g, h, start, &[Target::Balanced], cap, trace)? {
        RunOutcome::ReachedTarget { g_word, h_word, .. } => {
            if alpha.concat(&g.apply(&g_word)) != h.apply(&h_word) {
                return Err(inconsistency(format!(
                    "starting block ({g_word}, {h_word}) does not satisfy α·g(p) = h(q)"
                )));
            }
            Ok(Some(Block::new(g_word, h_word)))
        }
        RunOutcome::Cycle { .. } | RunOutcome::Stuck { .. } => Ok(None),
    }
}

/// The minimal solution `(e, f)` of `g(e) = h(f)` with `e` starting with `a`.
pub fn letter_block(g: &BinMorphism, h: &BinMorphism, a: Bin) -> Result<Option<Block>> {
    letter_block_traced(g, h, a, &mut noop)
}

pub fn letter_block_traced(
    g: &BinMorphism,
    h: &BinMorphism,
    a: Bin,
    trace: Tracer<'_>,
) -> Result<Option<Block>> {
    let seed = g.image(a).clone();
    let cap = default_step_cap(g, h, &seed);
    let start = Start {
        state: OverflowState::g_ahead(seed),
        g_word: BinWord::letter(a),
        h_word: BinWord::empty(),
    };
    match run(g, h, start, &[Target::Balanced], cap, trace)? {
        RunOutcome::ReachedTarget { g_word, h_word, .. } => {
            if g.apply(&g_word) != h.apply(&h_word) || h_word.is_empty() {
                return Err(inconsistency(format!(
                    "{a}-block ({g_word}, {h_word}) is not a solution"
                )));
            }
            Ok(Some(Block::new(g_word, h_word)))
        }
        RunOutcome::Cycle { .. } | RunOutcome::Stuck { .. } => Ok(None),
    }
}

/// With no starting block: the unique least nonempty `(r, s)` with
/// `α·g(r) = h(s)·α`, if any.
pub fn minimal_solution_no_start(
    g: &BinMorphism,
    h: &BinMorphism,
    alpha: &Word,
) -> Result<Option<(BinWord, BinWord)>> {
    minimal_solution_no_start_traced(g, h, alpha, &mut noop)
}

pub fn minimal_solution_no_start_traced(
    g: &BinMorphism,
    h: &BinMorphism,
    alpha: &Word,
    trace: Tracer<'_>,
) -> Result<Option<(BinWord, BinWord)>> {
    if alpha.is_empty() {
        return Err(inconsistency("α = ε always has the starting block (ε, ε)"));
    }
    let start = Start {
        state: OverflowState::g_ahead(alpha.clone()),
        g_word: BinWord::empty(),
        h_word: BinWord::empty(),
    };
    let cap = default_step_cap(g, h, alpha);
    match run(g, h, start, &[Target::Closes(alpha.clone())], cap, trace)? {
        RunOutcome::ReachedTarget { g_word, h_word, .. } => {
            let lhs = alpha.concat(&g.apply(&g_word));
            let rhs = h.apply(&h_word).concat(alpha);
            if lhs != rhs || g_word.is_empty() {
                return Err(inconsistency(format!(
                    "({g_word}, {h_word}) does not solve α·g(r) = h(s)·α"
                )));
            }
            Ok(Some((g_word, h_word)))
        }
        RunOutcome::Cycle { .. } | RunOutcome::Stuck { .. } => Ok(None),
    }
}

/// The unique `τ` with `𝔢(τ) = r` and `𝔣(τ) = s` for a solution `g(r) = h(s)`.
pub fn decompose(
    g: &BinMorphism,
    h: &BinMorphism,
    blocks: &PartialBlocks,
    solution: (&BinWord, &BinWord),
) -> Result<BinWord> {
    let (r, s) = solution;
    let fail = || Error::DecompositionFailure(r.to_string(), s.to_string());
    if g.apply(r) != h.apply(s) {
        return Err(fail());
    }
    let (mut rest_r, mut rest_s) = (r.letters(), s.letters());
    let mut tau = BinWord::empty();
    while let Some(&c) = rest_r.first() {
        let block = blocks.get(c).ok_or_else(fail)?;
        let (e, f) = (block.g_word.letters(), block.h_word.letters());
        if !rest_r.starts_with(e) || !rest_s.starts_with(f) {
            return Err(fail());
        }
        tau.push(c);
        rest_r = &rest_r[e.len()..];
        rest_s = &rest_s[f.len()..];
    }
    if !rest_s.is_empty() {
        return Err(fail());
    }
    Ok(tau)
}
