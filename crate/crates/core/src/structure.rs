//! The full characterization of `{x,y}* ∩ {u,v}*`.
//!
//! The input codes are read as morphisms `g₀: 0 ↦ x, 1 ↦ y` and
//! `h₀: 0 ↦ u, 1 ↦ v`. After reducing to their marked versions `g`, `h`, the
//! coincidence set `g₀(r) = h₀(s)` is described through the starting block
//! `(p, q)`, the letter blocks, and the set `T` of block words `τ` for which
//! `(p, q)` is a suffix of `(p·𝔢(τ), q·𝔣(τ))`.

use std::collections::BTreeSet;

use crate::coincidence::{self, Block, PartialBlocks, TraceEvent, Tracer};
use crate::error::{inconsistency, Error, Result};
use crate::language::{Expr, LanguageSample};
use crate::morphism::BinMorphism;
use crate::word::{
    bin_words_up_to, bits, is_prefix, is_suffix, prefix_comparable, strip_prefix, strip_suffix,
    Bin, BinWord, Word,
};

/// `g₀`, `h₀`, their marked versions, and the words `α_g`, `α_h`,
/// `α = α_h⁻¹·α_g`. Invariant: `α_h ≤_p α_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationContext {
    pub g0: BinMorphism,
    pub h0: BinMorphism,
    /// The input pairs were exchanged to get `α_h ≤_p α_g`.
    pub swapped: bool,
    pub g: BinMorphism,
    pub h: BinMorphism,
    pub alpha_g: Word,
    pub alpha_h: Word,
    pub alpha: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContextOutcome {
    Comparable(Box<CharacterizationContext>),
    /// `α` of the two codes are prefix-incomparable: only `ε` is common.
    Incomparable {
        alpha_xy: Word,
        alpha_uv: Word,
    },
}

pub fn make_context(x: &Word, y: &Word, u: &Word, v: &Word) -> Result<ContextOutcome> {
    let first = BinMorphism::new(x.clone(), y.clone())?;
    let second = BinMorphism::new(u.clone(), v.clone())?;
    let (a1, a2) = (first.alpha(), second.alpha());
    if !prefix_comparable(&a1, &a2) {
        return Ok(ContextOutcome::Incomparable {
            alpha_xy: a1,
            alpha_uv: a2,
        });
    }
    let swapped = !is_prefix(&a2, &a1);
    let (g0, h0) = if swapped {
        (second, first)
    } else {
        (first, second)
    };
    CharacterizationContext::from_morphisms(g0, h0, swapped)
        .map(|c| ContextOutcome::Comparable(Box::new(c)))
}

impl CharacterizationContext {
    fn from_morphisms(g0: BinMorphism, h0: BinMorphism, swapped: bool) -> Result<Self> {
        let alpha_g = g0.alpha();
        let alpha_h = h0.alpha();
        let alpha = strip_prefix(&alpha_h, &alpha_g)
            .map_err(|_| inconsistency("α_h is not a prefix of α_g"))?;
        Ok(CharacterizationContext {
            g: g0.marked_version()?,
            h: h0.marked_version()?,
            g0,
            h0,
            swapped,
            alpha_g,
            alpha_h,
            alpha,
        })
    }

    /// The context of the letter-swapped morphisms `w ↦ g₀(w̄)`, `w ↦ h₀(w̄)`.
    /// The α words are symmetric in the two letters and do not change.
    pub fn mirrored(&self) -> CharacterizationContext {
        CharacterizationContext {
            g0: self.g0.with_letters_swapped(),
            h0: self.h0.with_letters_swapped(),
            swapped: self.swapped,
            g: self.g.with_letters_swapped(),
            h: self.h.with_letters_swapped(),
            alpha_g: self.alpha_g.clone(),
            alpha_h: self.alpha_h.clone(),
            alpha: self.alpha.clone(),
        }
    }
}

/// The integer `t`, with both counting conventions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TParameter {
    /// Least `t ≥ 0` with `1·0^{t+1} ∈ T`.
    pub t: usize,
    /// `t + 1`, the exponent of the `0`-tail of the last minimal element.
    pub tail_exponent: usize,
}

impl TParameter {
    pub fn new(t: usize) -> Self {
        TParameter {
            t,
            tail_exponent: t + 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfiniteFamily {
    pub beta0: Word,
    pub beta: Word,
    pub gamma: Word,
    pub delta: Word,
    pub epsilon: Word,
    pub t: TParameter,
    /// The pipeline ran on letter-swapped morphisms (the singleton in `T` was `1`).
    pub mirrored_letters: bool,
}

/// The shape of the intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    OnlyEmpty,
    Cyclic {
        generator: Word,
    },
    FreeRankTwo {
        beta: Word,
        gamma: Word,
    },
    /// `(β₀ + β(γ(1 + δ + ⋯ + δᵗ))*ε)*`
    InfiniteFamily(InfiniteFamily),
}

/// Everything computed on the way, in the letter frame the formulas used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnesses {
    pub alpha_g: Word,
    pub alpha_h: Word,
    pub context: Option<CharacterizationContext>,
    pub starting_block: Option<Block>,
    pub blocks: PartialBlocks,
    /// `[0 ∈ T, 1 ∈ T]`; `false` for a letter without a block.
    pub singleton_in_t: [bool; 2],
    /// The minimal solution found when there is no starting block.
    pub minimal_solution: Option<(BinWord, BinWord)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionDescription {
    pub shape: Shape,
    pub witnesses: Witnesses,
}

impl IntersectionDescription {
    pub fn mirrored_letters(&self) -> bool {
        matches!(&self.shape, Shape::InfiniteFamily(f) if f.mirrored_letters)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InfiniteForm {
    Dagger,
    DaggerDagger,
}

/// The refinement of the infinitely generated case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfiniteFormDetail {
    pub form: InfiniteForm,
    /// `q = f′·𝔣(0)^k` with `|f′| < |𝔣(0)|`.
    pub f_prime: BinWord,
    pub k: usize,
    /// `k − t − 1` for the double-dagger form.
    pub m: Option<usize>,
}

/// `(p, q) ≤_s (p·𝔢(τ), q·𝔣(τ))`.
pub fn tpred(pq: &Block, blocks: &PartialBlocks, tau: &BinWord) -> Result<bool> {
    let pe = pq.g_word.concat(&blocks.e(tau)?);
    let qf = pq.h_word.concat(&blocks.f(tau)?);
    Ok(is_suffix(&pq.g_word, &pe) && is_suffix(&pq.h_word, &qf))
}

fn one_zeros(i: usize) -> BinWord {
    let mut w = BinWord::letter(Bin::One);
    w.append(&BinWord::letter(Bin::Zero).pow(i));
    w
}

/// The least `t ≥ 0` with `1·0^{t+1} ∈ T`.
///
/// Requires both blocks, `0 ∈ T` and `1 ∉ T`.
pub fn compute_t(
    ctx: &CharacterizationContext,
    pq: &Block,
    blocks: &PartialBlocks,
) -> Result<TParameter> {
    let (b0, _) = blocks
        .both()
        .ok_or_else(|| Error::MissingBlock(if blocks.block0.is_none() { '0' } else { '1' }))?;
    if !tpred(pq, blocks, &bits("0"))? || tpred(pq, blocks, &bits("1"))? {
        return Err(inconsistency("compute_t needs 0 ∈ T and 1 ∉ T"));
    }
    let (p, q) = (&pq.g_word, &pq.h_word);
    let bound = q
        .len()
        .div_ceil(b0.h_word.len())
        .max(p.len().div_ceil(b0.g_word.len()))
        + 1;

    let mut by_full = None;
    let mut by_q = None;
    for t in 0..=bound {
        let tail = one_zeros(t + 1);
        if by_full.is_none() && tpred(pq, blocks, &tail)? {
            by_full = Some(t);
        }
        if by_q.is_none() && is_suffix(q, &q.concat(&blocks.f(&tail)?)) {
            by_q = Some(t);
        }
    }
    let t = match (by_full, by_q) {
        (Some(a), Some(b)) if a == b => a,
        (Some(a), Some(b)) => {
            return Err(inconsistency(format!(
                "least t from the full membership test ({a}) differs from the q-only test ({b})"
            )))
        }
        _ => return Err(inconsistency(format!("no t ≤ {bound} puts 1·0^(t+1) in T"))),
    };

    // Consequences that hold at every 1·0^i in T.
    let tail = one_zeros(t + 1);
    if !(is_suffix(p, &b0.g_word) && *p != b0.g_word) {
        return Err(inconsistency(format!(
            "p = {p} is not a proper suffix of 𝔢(0)"
        )));
    }
    if !is_suffix(q, &blocks.f(&tail)?) {
        return Err(inconsistency(format!(
            "q = {q} is not a suffix of 𝔣(1·0^(t+1))"
        )));
    }
    let lhs = ctx.alpha_g.concat(&ctx.g.apply(p));
    if !is_suffix(&lhs, &ctx.g.apply(&blocks.e(&tail)?)) {
        return Err(inconsistency("α_g·g(p) is not a suffix of g(𝔢(1·0^(t+1)))"));
    }
    Ok(TParameter::new(t))
}

fn both_sides(what: &str, from_g: Result<Word>, from_h: Result<Word>) -> Result<Word> {
    let (a, b) = (from_g?, from_h?);
    if a != b {
        return Err(inconsistency(format!(
            "{what}: the two formulas disagree ({a} vs {b})"
        )));
    }
    Ok(a)
}

fn conj_strip(p: &BinWord, e: &BinWord) -> Result<BinWord> {
    // p·e·p⁻¹
    strip_suffix(p, &p.concat(e)).map_err(|_| inconsistency(format!("{p} ≰_s {p}{e}")))
}

pub fn characterize(x: &Word, y: &Word, u: &Word, v: &Word) -> Result<IntersectionDescription> {
    characterize_traced(x, y, u, v, &mut |_| {})
}

/// [`characterize`], streaming every matcher step to `trace`.
pub fn characterize_traced(
    x: &Word,
    y: &Word,
    u: &Word,
    v: &Word,
    trace: Tracer<'_>,
) -> Result<IntersectionDescription> {
    let ctx = match make_context(x, y, u, v)? {
        ContextOutcome::Incomparable { alpha_xy, alpha_uv } => {
            return Ok(IntersectionDescription {
                shape: Shape::OnlyEmpty,
                witnesses: Witnesses {
                    alpha_g: alpha_xy,
                    alpha_h: alpha_uv,
                    context: None,
                    starting_block: None,
                    blocks: PartialBlocks::default(),
                    singleton_in_t: [false, false],
                    minimal_solution: None,
                },
            })
        }
        ContextOutcome::Comparable(ctx) => *ctx,
    };
    let (g, h) = (&ctx.g, &ctx.h);
    let starting = coincidence::starting_block_traced(g, h, &ctx.alpha, trace)?;
    let blocks = PartialBlocks {
        block0: coincidence::letter_block_traced(g, h, Bin::Zero, trace)?,
        block1: coincidence::letter_block_traced(g, h, Bin::One, trace)?,
    };
    let mut witnesses = Witnesses {
        alpha_g: ctx.alpha_g.clone(),
        alpha_h: ctx.alpha_h.clone(),
        context: Some(ctx.clone()),
        starting_block: starting.clone(),
        blocks: blocks.clone(),
        singleton_in_t: [false, false],
        minimal_solution: None,
    };

    let Some(pq) = starting else {
        let shape = match coincidence::minimal_solution_no_start_traced(g, h, &ctx.alpha, trace)? {
            Some((r, s)) => {
                let generator = both_sides(
                    "minimal solution",
                    Ok(ctx.g0.apply(&r)),
                    Ok(ctx.h0.apply(&s)),
                )?;
                witnesses.minimal_solution = Some((r, s));
                Shape::Cyclic { generator }
            }
            None => Shape::OnlyEmpty,
        };
        return Ok(IntersectionDescription { shape, witnesses });
    };

    let mut in_t = [false, false];
    for c in Bin::BOTH {
        if blocks.get(c).is_some() {
            in_t[c.index()] = tpred(&pq, &blocks, &BinWord::letter(c))?;
        }
    }
    witnesses.singleton_in_t = in_t;

    let image_of = |ctx: &CharacterizationContext, pq: &Block, blocks: &PartialBlocks, c: Bin| {
        let block = blocks.require(c)?;
        both_sides(
            "block image",
            conj_strip(&pq.g_word, &block.g_word).map(|w| ctx.g0.apply(&w)),
            conj_strip(&pq.h_word, &block.h_word).map(|w| ctx.h0.apply(&w)),
        )
    };

    let shape = match in_t {
        [false, false] => Shape::OnlyEmpty,
        [true, true] => Shape::FreeRankTwo {
            beta: image_of(&ctx, &pq, &blocks, Bin::Zero)?,
            gamma: image_of(&ctx, &pq, &blocks, Bin::One)?,
        },
        [a, _] => {
            let c = if a { Bin::Zero } else { Bin::One };
            if blocks.get(c.flip()).is_none() {
                Shape::Cyclic {
                    generator: image_of(&ctx, &pq, &blocks, c)?,
                }
            } else if c == Bin::Zero {
                let fam = infinite_family(&ctx, &pq, &blocks, false)?;
                Shape::InfiniteFamily(fam)
            } else {
                let mctx = ctx.mirrored();
                let mpq = pq.flipped();
                let mblocks = blocks.mirrored();
                let fam = infinite_family(&mctx, &mpq, &mblocks, true)?;
                witnesses.context = Some(mctx);
                witnesses.starting_block = Some(mpq);
                witnesses.blocks = mblocks;
                witnesses.singleton_in_t = [true, false];
                Shape::InfiniteFamily(fam)
            }
        }
    };
    Ok(IntersectionDescription { shape, witnesses })
}

fn infinite_family(
    ctx: &CharacterizationContext,
    pq: &Block,
    blocks: &PartialBlocks,
    mirrored_letters: bool,
) -> Result<InfiniteFamily> {
    let t = compute_t(ctx, pq, blocks)?;
    let (b0, b1) = blocks.both().ok_or(Error::MissingBlock('1'))?;
    let (p, q) = (&pq.g_word, &pq.h_word);
    let (g, h) = (&ctx.g, &ctx.h);
    let tail = one_zeros(t.t + 1);

    let beta0 = both_sides(
        "β₀",
        conj_strip(p, &b0.g_word).map(|w| ctx.g0.apply(&w)),
        conj_strip(q, &b0.h_word).map(|w| ctx.h0.apply(&w)),
    )?;
    let beta = both_sides(
        "β",
        Ok(ctx.alpha_g.concat(&g.apply(p))),
        Ok(ctx.alpha_h.concat(&h.apply(q))),
    )?;
    let gamma = both_sides("γ", Ok(g.apply(&b1.g_word)), Ok(h.apply(&b1.h_word)))?;
    let delta = both_sides("δ", Ok(g.apply(&b0.g_word)), Ok(h.apply(&b0.h_word)))?;
    let eps_side = |m: &BinMorphism, prefix: &BinWord, block_word: BinWord, alpha: &Word| {
        let stripped = strip_suffix(prefix, &block_word).map_err(|_| {
            inconsistency("ε: the starting block is not a suffix of the tail block")
        })?;
        strip_suffix(alpha, &m.apply(&stripped))
            .map_err(|_| inconsistency("ε: α is not a suffix of the tail image"))
    };
    let epsilon = both_sides(
        "ε",
        eps_side(g, p, blocks.e(&tail)?, &ctx.alpha_g),
        eps_side(h, q, blocks.f(&tail)?, &ctx.alpha_h),
    )?;
    Ok(InfiniteFamily {
        beta0,
        beta,
        gamma,
        delta,
        epsilon,
        t,
        mirrored_letters,
    })
}

/// Splits `q = f′·𝔣(0)^k` and decides between the `†` and `††` shapes.
pub fn classify_infinite_form(desc: &IntersectionDescription) -> Result<InfiniteFormDetail> {
    let Shape::InfiniteFamily(fam) = &desc.shape else {
        return Err(inconsistency(
            "classify_infinite_form needs an infinite family",
        ));
    };
    let w = &desc.witnesses;
    let ctx = w
        .context
        .as_ref()
        .ok_or_else(|| inconsistency("missing context"))?;
    let pq = w
        .starting_block
        .as_ref()
        .ok_or_else(|| inconsistency("missing starting block"))?;
    let (b0, b1) = w.blocks.both().ok_or(Error::MissingBlock('1'))?;
    let (f0, f1, q) = (&b0.h_word, &b1.h_word, &pq.h_word);

    let mut f_prime = q.clone();
    let mut k = 0;
    while f_prime.len() >= f0.len() && is_suffix(f0, &f_prime) {
        f_prime = f_prime.prefix(f_prime.len() - f0.len());
        k += 1;
    }
    if f_prime.len() >= f0.len() || !is_suffix(&f_prime, f0) {
        return Err(inconsistency(format!(
            "q = {q} is not a suffix of 𝔣(0)* = ({f0})*"
        )));
    }

    let lhs = ctx.alpha_g.concat(&ctx.g.apply(&pq.g_word));
    let rhs = ctx
        .alpha_h
        .concat(&ctx.h.apply(&f_prime))
        .concat(&ctx.h.apply(f0).pow(k));
    if lhs != rhs {
        return Err(inconsistency("α_g·g(p) ≠ α_h·h(f′)·h(𝔣(0))^k"));
    }

    let t = fam.t.t;
    if k == t {
        return Ok(InfiniteFormDetail {
            form: InfiniteForm::Dagger,
            f_prime,
            k,
            m: None,
        });
    }
    if k < t {
        return Err(inconsistency(format!("k = {k} is below t = {t}")));
    }
    let m = k - t - 1;
    if !is_suffix(&f_prime.concat(&f0.pow(m)), f1) {
        return Err(inconsistency(format!(
            "f′·𝔣(0)^{m} is not a suffix of 𝔣(1) = {f1}"
        )));
    }
    Ok(InfiniteFormDetail {
        form: InfiniteForm::DaggerDagger,
        f_prime,
        k,
        m: Some(m),
    })
}

fn bin_atom(s: &str) -> Expr<Bin> {
    Expr::atom(bits(s))
}

/// The block words of all solutions, up to `max_len`, read off the shape.
pub fn enumerate_t(desc: &IntersectionDescription, max_len: usize) -> BTreeSet<BinWord> {
    let expr = match &desc.shape {
        Shape::OnlyEmpty => return BTreeSet::from([BinWord::empty()]),
        Shape::Cyclic { .. } => match desc.witnesses.singleton_in_t {
            [true, false] => Expr::star(bin_atom("0")),
            [false, true] => Expr::star(bin_atom("1")),
            // Without a starting block T is undefined.
            _ => return BTreeSet::from([BinWord::empty()]),
        },
        Shape::FreeRankTwo { .. } => Expr::star(Expr::Union(vec![bin_atom("0"), bin_atom("1")])),
        Shape::InfiniteFamily(fam) => {
            let t = fam.t.t;
            let short_tails = (0..=t).map(|i| Expr::atom(one_zeros(i))).collect();
            Expr::star(Expr::Union(vec![
                bin_atom("0"),
                Expr::Concat(vec![
                    Expr::star(Expr::Union(short_tails)),
                    Expr::atom(one_zeros(t + 1)),
                ]),
            ]))
        }
    };
    expr.expand(max_len)
}

/// Minimal nonempty elements of `T` up to `max_len`, sieved directly from
/// [`tpred`].
pub fn enumerate_t_basis(
    pq: &Block,
    blocks: &PartialBlocks,
    max_len: usize,
) -> Result<BTreeSet<BinWord>> {
    blocks
        .both()
        .ok_or_else(|| Error::MissingBlock(if blocks.block0.is_none() { '0' } else { '1' }))?;
    let mut members = BTreeSet::new();
    for tau in bin_words_up_to(max_len) {
        if tpred(pq, blocks, &tau)? {
            members.insert(tau);
        }
    }
    Ok(members
        .iter()
        .filter(|tau| {
            !tau.is_empty()
                && !(1..tau.len())
                    .any(|i| members.contains(&tau.prefix(i)) && members.contains(&tau.skip(i)))
        })
        .cloned()
        .collect())
}

/// The described language up to `max_len`.
pub fn language_of(desc: &IntersectionDescription, max_len: usize) -> LanguageSample {
    let expr = match &desc.shape {
        Shape::OnlyEmpty => return LanguageSample::new(max_len, [Word::empty()]),
        Shape::Cyclic { generator } => Expr::star(Expr::atom(generator.clone())),
        Shape::FreeRankTwo { beta, gamma } => Expr::star(Expr::Union(vec![
            Expr::atom(beta.clone()),
            Expr::atom(gamma.clone()),
        ])),
        Shape::InfiniteFamily(fam) => {
            let delta_powers = (0..=fam.t.t)
                .map(|i| Expr::atom(fam.delta.pow(i)))
                .collect();
            let inner = Expr::star(Expr::Concat(vec![
                Expr::atom(fam.gamma.clone()),
                Expr::Union(delta_powers),
            ]));
            Expr::star(Expr::Union(vec![
                Expr::atom(fam.beta0.clone()),
                Expr::Concat(vec![
                    Expr::atom(fam.beta.clone()),
                    inner,
                    Expr::atom(fam.epsilon.clone()),
                ]),
            ]))
        }
    };
    LanguageSample::new(max_len, expr.expand(max_len))
}

/// Forwards matcher steps, for callers that want to collect them.
pub fn collect_trace(events: &mut Vec<TraceEvent>) -> impl FnMut(&TraceEvent) + '_ {
    move |e| events.push(e.clone())
}
