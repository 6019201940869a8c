//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use bintersect_core::coincidence::{letter_block, starting_block, Block, PartialBlocks};
use bintersect_core::fixtures::{self, Fixture};
use bintersect_core::oracle::{factorize, verify};
use bintersect_core::structure::{
    classify_infinite_form, enumerate_t, enumerate_t_basis, tpred, CharacterizationContext,
};
use bintersect_core::word::{
    bin_words_up_to, commutes, is_prefix, is_suffix, is_suffix_of_power, lcs, strip_suffix,
};
use bintersect_core::{
    morphism::alpha_prefix_holds, Bin, BinWord, IntersectionDescription, Shape, Word,
};
use common::{bin_word, code, codes, context, describe, random_families, rng, Codes};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn checked(fx: &Fixture, verify_len: usize) -> Result<IntersectionDescription, String> {
    let (desc, problems) = fixtures::check(fx).map_err(|e| format!("{}: {e}", fx.name))?;
    ensure!(problems.is_empty(), "{}: {}", fx.name, problems.join("; "));
    let report = verify(&fx.x, &fx.y, &fx.u, &fx.v, &desc, verify_len);
    ensure!(
        report.equal,
        "{}: verify at {verify_len} differs, missing {:?}, extra {:?}",
        fx.name,
        report.missing,
        report.extra
    );
    Ok(desc)
}

fn within(start: Instant, budget: Duration, what: &str) -> Result<(), String> {
    let spent = start.elapsed();
    ensure!(spent < budget, "{what} took {spent:?}, budget {budget:?}");
    Ok(())
}

fn dagger_family() -> Outcome {
    let start = Instant::now();
    let desc = checked(&fixtures::dagger_family(), 30)?;
    let w = &desc.witnesses;
    ensure!(
        w.alpha_g == Word::from("a") && w.alpha_h.is_empty(),
        "α_g = {}, α_h = {}",
        w.alpha_g,
        w.alpha_h
    );
    let Shape::InfiniteFamily(fam) = &desc.shape else {
        return Err(format!("shape {:?}", desc.shape));
    };
    let got = [&fam.beta0, &fam.beta, &fam.gamma, &fam.delta, &fam.epsilon].map(|x| x.to_string());
    ensure!(
        got == ["abaaba", "a", "abaaba", "baabaa", "abaababaaba"],
        "generators {got:?}"
    );
    within(start, Duration::from_secs(5), "dagger family")?;
    Ok(format!(
        "t=0 tail_exponent=1, verified to length 30 in {:?}",
        start.elapsed()
    ))
}

fn power_tails() -> Outcome {
    let mut times = Vec::new();
    for m in 1..=3 {
        let start = Instant::now();
        checked(&fixtures::power_tail(m), 24)?;
        within(start, Duration::from_secs(5), &format!("m={m}"))?;
        times.push(start.elapsed());
    }
    Ok(format!("m=1,2,3 verified to length 24 ({times:?})"))
}

fn double_dagger_family() -> Outcome {
    let start = Instant::now();
    checked(&fixtures::double_dagger_family(), 40)?;
    within(start, Duration::from_secs(10), "double-dagger family")?;
    Ok(format!(
        "double-dagger m=1 k=3, verified to length 40 in {:?}",
        start.elapsed()
    ))
}

fn small_cases() -> Outcome {
    let start = Instant::now();
    for fx in fixtures::small_cases() {
        checked(&fx, 20)?;
    }
    within(start, Duration::from_secs(10), "small cases")?;
    Ok(format!("10 rows in {:?}", start.elapsed()))
}

fn randomized_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(0x5eed_0005);
    let mut counts = [0usize; 4];
    const PAIRS: usize = 1000;
    for _ in 0..PAIRS {
        let c = codes(&mut rng, 4);
        let desc = bintersect_core::characterize(&c[0], &c[1], &c[2], &c[3])
            .map_err(|e| format!("{c:?}: {e}"))?;
        let idx = match &desc.shape {
            Shape::OnlyEmpty => 0,
            Shape::Cyclic { .. } => 1,
            Shape::FreeRankTwo { .. } => 2,
            Shape::InfiniteFamily(_) => {
                classify_infinite_form(&desc).map_err(|e| format!("{c:?}: {e}"))?;
                3
            }
        };
        counts[idx] += 1;
        let report = verify(&c[0], &c[1], &c[2], &c[3], &desc, 20);
        ensure!(
            report.equal,
            "{c:?}: missing {:?}, extra {:?}",
            report.missing,
            report.extra
        );
    }
    within(start, Duration::from_secs(120), "random suite")?;
    Ok(format!(
        "{PAIRS} pairs (empty {}, cyclic {}, free {}, family {}) in {:?}",
        counts[0],
        counts[1],
        counts[2],
        counts[3],
        start.elapsed()
    ))
}

fn marked_version_suite() -> Result<(), String> {
    let mut rng = rng(61);
    for _ in 0..1000 {
        let (x, y) = code(&mut rng, 6);
        let f = bintersect_core::BinMorphism::new(x, y).unwrap();
        let fm = f.marked_version().map_err(|e| e.to_string())?;
        ensure!(fm.is_marked(), "{f:?}: marked version not marked");
        let w = bin_word(&mut rng, 8);
        let alpha = f.alpha();
        ensure!(
            alpha.concat(&fm.apply(&w)) == f.apply(&w).concat(&alpha),
            "{f:?}, {w}: α·f_m(w) ≠ f(w)·α"
        );
    }
    Ok(())
}

fn alpha_prefix_suite() -> Result<(), String> {
    let mut rng = rng(62);
    for _ in 0..1000 {
        let (x, y) = code(&mut rng, 6);
        let f = bintersect_core::BinMorphism::new(x, y).unwrap();
        let w = bin_word(&mut rng, 8);
        ensure!(alpha_prefix_holds(&f, &w), "{f:?}, {w}");
    }
    Ok(())
}

fn random_context(rng: &mut impl Rng) -> (Codes, CharacterizationContext) {
    loop {
        let c = codes(rng, 4);
        if let Some(ctx) = context(&c) {
            return (c, ctx);
        }
    }
}

fn conjugation_suite() -> Result<usize, String> {
    let mut rng = rng(63);
    let mut positives = 0;
    for _ in 0..1000 {
        let (_, ctx) = random_context(&mut rng);
        let h_gens = [
            ctx.h0.image(Bin::Zero).clone(),
            ctx.h0.image(Bin::One).clone(),
        ];
        let mut pairs = Vec::new();
        for _ in 0..20 {
            pairs.push((bin_word(&mut rng, 6), bin_word(&mut rng, 6)));
        }
        // A factorizable image gives a positive instance.
        let r = bin_word(&mut rng, 6);
        if let Some(ix) = factorize(&ctx.g0.apply(&r), &h_gens) {
            let s: BinWord = ix.into_iter().map(|k| Bin::BOTH[k]).collect();
            if s.len() <= 6 {
                pairs.push((r, s));
            }
        }
        for (r, s) in pairs {
            let lhs = ctx.g0.apply(&r) == ctx.h0.apply(&s);
            let rhs = ctx.alpha.concat(&ctx.g.apply(&r)) == ctx.h.apply(&s).concat(&ctx.alpha);
            ensure!(lhs == rhs, "{ctx:?}, ({r}, {s}): {lhs} vs {rhs}");
            positives += lhs as usize;
        }
    }
    ensure!(positives > 0, "no positive instance was sampled");
    Ok(positives)
}

fn periodicity_suite() -> Result<(), String> {
    let mut rng = rng(64);
    for i in 0..1000 {
        let (u, v) = if i % 4 == 0 {
            let z = common::word(&mut rng, 1, 3);
            (z.pow(rng.gen_range(1..=3)), z.pow(rng.gen_range(1..=3)))
        } else {
            (common::word(&mut rng, 1, 6), common::word(&mut rng, 1, 6))
        };
        let k = 2 * (u.len() + v.len());
        let longest = lcs(&u.pow(k), &v.pow(k));
        for n in 0..=longest.len().min(3 * (u.len() + v.len())) {
            let w = longest.suffix(n);
            let premise =
                is_suffix_of_power(&w, &u).unwrap() && is_suffix_of_power(&w, &v).unwrap();
            ensure!(premise, "{w} is a common suffix of powers of {u}, {v}");
            if u.len() + v.len() <= w.len() {
                ensure!(
                    commutes(&u, &v),
                    "{u}, {v}: common suffix {w} without commuting"
                );
            }
        }
    }
    Ok(())
}

fn letters_of(blocks: &PartialBlocks) -> Vec<Bin> {
    Bin::BOTH
        .into_iter()
        .filter(|&b| blocks.get(b).is_some())
        .collect()
}

fn words_over(letters: &[Bin], max_len: usize) -> Vec<BinWord> {
    bin_words_up_to(max_len)
        .filter(|w| w.letters().iter().all(|b| letters.contains(b)))
        .collect()
}

/// Closure properties of `T` (quotients, last letters, powers), and the agreement of `enumerate_t` with direct
/// membership, on one instance with a starting block.
fn t_closure(desc: &IntersectionDescription, name: &str) -> Result<(), String> {
    let w = &desc.witnesses;
    let Some(pq) = &w.starting_block else {
        return Ok(());
    };
    let blocks = &w.blocks;
    let letters = letters_of(blocks);
    let tp = |tau: &BinWord| tpred(pq, blocks, tau).map_err(|e| format!("{name}: {e}"));
    const LEN: usize = 8;
    let mut members = BTreeSet::new();
    for tau in words_over(&letters, LEN) {
        if tp(&tau)? {
            members.insert(tau);
        }
    }
    for tau in &members {
        for i in 1..tau.len() {
            if members.contains(&tau.prefix(i)) {
                ensure!(
                    members.contains(&tau.skip(i)),
                    "{name}: quotient of {tau} at {i}"
                );
            }
        }
        if let Some(c) = tau.last() {
            if tau.len() <= 6 {
                ensure!(tp(&BinWord::letter(c))?, "{name}: {tau} ∈ T but {c} ∉ T");
            }
        }
    }
    for &c in &letters {
        for i in 1..=LEN {
            if tp(&BinWord::letter(c).pow(i))? {
                ensure!(tp(&BinWord::letter(c))?, "{name}: {c}^{i} ∈ T but {c} ∉ T");
            }
        }
    }
    let described = enumerate_t(desc, LEN);
    ensure!(
        described == members,
        "{name}: T from the shape {described:?} differs from membership {members:?}"
    );
    Ok(())
}

fn key_relation(c: &Codes, desc: &IntersectionDescription) -> Result<(), String> {
    const LEN: usize = 10;
    let w = &desc.witnesses;
    let ctx = w.context.as_ref().ok_or("missing context")?;
    let pq = w.starting_block.as_ref().ok_or("missing starting block")?;
    let h_gens = [
        ctx.h0.image(Bin::Zero).clone(),
        ctx.h0.image(Bin::One).clone(),
    ];
    let mut brute = BTreeSet::new();
    for r in bin_words_up_to(LEN) {
        if let Some(ix) = factorize(&ctx.g0.apply(&r), &h_gens) {
            let s: BinWord = ix.into_iter().map(|k| Bin::BOTH[k]).collect();
            brute.insert((r, s));
        }
    }
    let mut from_t = BTreeSet::new();
    for tau in words_over(&letters_of(&w.blocks), LEN) {
        if !tpred(pq, &w.blocks, &tau).map_err(|e| e.to_string())? {
            continue;
        }
        let e = w.blocks.e(&tau).unwrap();
        if e.len() > LEN {
            continue;
        }
        let f = w.blocks.f(&tau).unwrap();
        let r = strip_suffix(&pq.g_word, &pq.g_word.concat(&e)).map_err(|e| e.to_string())?;
        let s = strip_suffix(&pq.h_word, &pq.h_word.concat(&f)).map_err(|e| e.to_string())?;
        from_t.insert((r, s));
    }
    ensure!(
        brute == from_t,
        "{c:?}: brute force {brute:?} vs from T {from_t:?}"
    );
    Ok(())
}

/// Exhaustive check of the starting block and both letter blocks up to
/// `LEN` letters on the left.
fn block_minimality(ctx: &CharacterizationContext) -> Result<(), String> {
    const LEN: usize = 8;
    let (g, h) = (&ctx.g, &ctx.h);
    let sols: Vec<(BinWord, BinWord)> = bin_words_up_to(LEN)
        .filter_map(|p| {
            h.parse_marked(&ctx.alpha.concat(&g.apply(&p)))
                .map(|q| (p, q))
        })
        .collect();
    let start = starting_block(g, h, &ctx.alpha).map_err(|e| e.to_string())?;
    match &start {
        Some(Block { g_word, h_word }) => {
            for (p, q) in &sols {
                ensure!(
                    is_prefix(g_word, p) && is_prefix(h_word, q),
                    "{ctx:?}: solution ({p}, {q}) below starting block ({g_word}, {h_word})"
                );
            }
            if g_word.len() <= LEN {
                ensure!(
                    sols.contains(&(g_word.clone(), h_word.clone())),
                    "{ctx:?}: starting block is not a solution"
                );
            }
        }
        None => ensure!(
            sols.is_empty(),
            "{ctx:?}: missed starting block {:?}",
            sols[0]
        ),
    }

    for a in Bin::BOTH {
        let sols: Vec<(BinWord, BinWord)> = bin_words_up_to(LEN)
            .filter(|e| e.first() == Some(a))
            .filter_map(|e| h.parse_marked(&g.apply(&e)).map(|f| (e, f)))
            .collect();
        let minimal: Vec<&(BinWord, BinWord)> = sols
            .iter()
            .filter(|(e, _)| {
                !sols
                    .iter()
                    .any(|(e1, _)| e1.len() < e.len() && is_prefix(e1, e))
            })
            .collect();
        let block = letter_block(g, h, a).map_err(|e| e.to_string())?;
        match &block {
            Some(b) if b.g_word.len() <= LEN => {
                ensure!(
                    minimal == vec![&(b.g_word.clone(), b.h_word.clone())],
                    "{ctx:?}: {a}-block {b:?} vs minimal solutions {minimal:?}"
                );
            }
            _ => ensure!(
                minimal.is_empty(),
                "{ctx:?}: {a}-block {block:?} vs minimal solutions {minimal:?}"
            ),
        }
        for (e, _) in &sols {
            let b = block.as_ref().ok_or("solution without a block")?;
            ensure!(
                is_prefix(&b.g_word, e),
                "{ctx:?}: {e} does not start with the {a}-block"
            );
        }
    }
    Ok(())
}

fn property_suites() -> Outcome {
    let start = Instant::now();
    marked_version_suite().map_err(|e| format!("marked version: {e}"))?;
    alpha_prefix_suite().map_err(|e| format!("α-prefix: {e}"))?;
    let positives = conjugation_suite().map_err(|e| format!("conjugated equation: {e}"))?;
    periodicity_suite().map_err(|e| format!("periodicity: {e}"))?;

    let families = random_families(66, 50);
    for fx in fixtures::all() {
        let desc = bintersect_core::characterize(&fx.x, &fx.y, &fx.u, &fx.v).unwrap();
        t_closure(&desc, &fx.name)?;
    }
    for (c, desc) in &families {
        t_closure(desc, &format!("{c:?}"))?;
    }

    let mut rng = rng(67);
    let mut with_start = 0;
    while with_start < 50 {
        let c = codes(&mut rng, 4);
        let desc = describe(&c);
        if desc.witnesses.starting_block.is_some() {
            key_relation(&c, &desc).map_err(|e| format!("key relation: {e}"))?;
            with_start += 1;
        }
    }

    let mut rng = common::rng(68);
    for _ in 0..50 {
        let (_, ctx) = random_context(&mut rng);
        block_minimality(&ctx).map_err(|e| format!("blocks: {e}"))?;
    }
    within(start, Duration::from_secs(120), "property suites")?;
    Ok(format!(
        "7 suites, {positives} positive coincidence samples, in {:?}",
        start.elapsed()
    ))
}

fn expected_basis(t: usize, max_len: usize) -> BTreeSet<BinWord> {
    let tail = BinWord::letter(Bin::Zero).pow(t + 1);
    let occurrences = |w: &BinWord| {
        (0..=w.len().saturating_sub(tail.len()))
            .filter(|&i| w.len() >= tail.len() && w.skip(i).prefix(tail.len()) == tail)
            .count()
    };
    bin_words_up_to(max_len)
        .filter(|w| {
            *w == BinWord::letter(Bin::Zero)
                || (w.first() == Some(Bin::One) && is_suffix(&tail, w) && occurrences(w) == 1)
        })
        .collect()
}

fn t_basis() -> Outcome {
    let mut instances: Vec<(String, IntersectionDescription)> = (1..=3)
        .map(fixtures::power_tail)
        .chain([fixtures::dagger_family(), fixtures::double_dagger_family()])
        .map(|fx| {
            let d = bintersect_core::characterize(&fx.x, &fx.y, &fx.u, &fx.v).unwrap();
            (fx.name, d)
        })
        .collect();
    instances.extend(
        random_families(77, 25)
            .into_iter()
            .map(|(c, d)| (format!("{c:?}"), d)),
    );
    let mut mirrored = 0;
    for (name, desc) in &instances {
        let Shape::InfiniteFamily(fam) = &desc.shape else {
            return Err(format!("{name}: not an infinite family"));
        };
        mirrored += fam.mirrored_letters as usize;
        let t = fam.t.t;
        let w = &desc.witnesses;
        let pq = w.starting_block.as_ref().ok_or("missing starting block")?;
        let got = enumerate_t_basis(pq, &w.blocks, t + 6).map_err(|e| e.to_string())?;
        let want = expected_basis(t, t + 6);
        ensure!(got == want, "{name}: basis {got:?}, expected {want:?}");
    }
    Ok(format!(
        "{} instances ({mirrored} with swapped letters)",
        instances.len()
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 dagger family end to end", dagger_family),
        ("2 power tails, m = 1..3", power_tails),
        ("3 double-dagger family", double_dagger_family),
        ("4 small cases", small_cases),
        ("5 randomized oracle", randomized_oracle),
        ("6 property suites", property_suites),
        ("7 minimal elements of T", t_basis),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
