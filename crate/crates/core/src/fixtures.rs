//! Reference instances with known answers, covering every outcome.

use crate::coincidence::Block;
use crate::oracle::intersect_bruteforce;
use crate::structure::{
    characterize, classify_infinite_form, InfiniteForm, IntersectionDescription, Shape,
};
use crate::word::{bits, Word};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpectedShape {
    /// Checked against brute force up to the given length as well.
    OnlyEmpty {
        bruteforce_len: usize,
    },
    Cyclic {
        generator: String,
    },
    InfiniteFamily {
        /// Least `t` with `1·0^{t+1}` in `T`.
        t: usize,
        /// The length of the `0`-tail of the last minimal element of `T`,
        /// `t + 1`.
        tail_exponent: usize,
        form: Option<ExpectedForm>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedForm {
    pub form: InfiniteForm,
    pub f_prime: String,
    pub k: usize,
    pub m: Option<usize>,
}

/// Two binary words as `0`/`1` strings.
pub type Pair = (String, String);

fn pair(e: &str, f: &str) -> Option<Pair> {
    Some((e.to_string(), f.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub x: Word,
    pub y: Word,
    pub u: Word,
    pub v: Word,
    pub alpha: String,
    pub starting_block: Option<Pair>,
    pub block0: Option<Pair>,
    pub block1: Option<Pair>,
    /// The marked images `(g(0), g(1), h(0), h(1))`, where checked.
    pub marked: Option<[String; 4]>,
    pub shape: ExpectedShape,
}

fn fixture(name: impl Into<String>, codes: [&str; 4]) -> Fixture {
    Fixture {
        name: name.into(),
        x: codes[0].into(),
        y: codes[1].into(),
        u: codes[2].into(),
        v: codes[3].into(),
        alpha: String::new(),
        starting_block: None,
        block0: None,
        block1: None,
        marked: None,
        shape: ExpectedShape::OnlyEmpty { bruteforce_len: 20 },
    }
}

/// `g₀ = (a, aᵐb)`, `h₀ = (a, baᵐ)`.
pub fn power_tail(m: usize) -> Fixture {
    let am = "a".repeat(m);
    let bam = format!("b{am}");
    Fixture {
        alpha: am.clone(),
        starting_block: pair("", &"0".repeat(m)),
        block0: pair("0", "0"),
        block1: pair("1", "1"),
        marked: Some(["a".into(), bam.clone(), "a".into(), bam.clone()]),
        shape: ExpectedShape::InfiniteFamily {
            t: m - 1,
            tail_exponent: m,
            form: Some(ExpectedForm {
                form: InfiniteForm::DaggerDagger,
                f_prime: String::new(),
                k: m,
                m: Some(0),
            }),
        },
        ..fixture(
            format!("power-tail m={m}"),
            ["a", &format!("{am}b"), "a", &bam],
        )
    }
}

pub fn dagger_family() -> Fixture {
    Fixture {
        alpha: "a".into(),
        starting_block: pair("", "0"),
        block0: pair("00", "10"),
        block1: pair("11", "01"),
        marked: Some(["baa".into(), "aba".into(), "a".into(), "baaba".into()]),
        shape: ExpectedShape::InfiniteFamily {
            t: 0,
            tail_exponent: 1,
            form: Some(ExpectedForm {
                form: InfiniteForm::Dagger,
                f_prime: "0".into(),
                k: 0,
                m: None,
            }),
        },
        ..fixture("dagger", ["aba", "aab", "a", "baaba"])
    }
}

pub fn double_dagger_family() -> Fixture {
    Fixture {
        alpha: "aaaaaa".into(),
        starting_block: pair("", "000000"),
        block0: pair("0", "00"),
        block1: pair("1", "100"),
        marked: Some(["aa".into(), "baaaaaa".into(), "a".into(), "baaaa".into()]),
        shape: ExpectedShape::InfiniteFamily {
            t: 1,
            tail_exponent: 2,
            form: Some(ExpectedForm {
                form: InfiniteForm::DaggerDagger,
                f_prime: "".into(),
                k: 3,
                m: Some(1),
            }),
        },
        ..fixture("double-dagger", ["aa", "aaaaaab", "a", "baaaa"])
    }
}

/// Ten small instances covering every combination of present and absent blocks.
pub fn small_cases() -> Vec<Fixture> {
    let empty = ExpectedShape::OnlyEmpty { bruteforce_len: 20 };
    let cyclic = |generator: &str| ExpectedShape::Cyclic {
        generator: generator.into(),
    };
    let row = |i: usize, codes, alpha: &str, pq, b0, b1, shape| Fixture {
        alpha: alpha.into(),
        starting_block: pq,
        block0: b0,
        block1: b1,
        shape,
        ..fixture(format!("small case {i}"), codes)
    };
    vec![
        row(
            1,
            ["aabb", "ab", "aba", "bab"],
            "a",
            pair("1", "0"),
            None,
            pair("111", "10"),
            cyclic("ababab"),
        ),
        row(
            2,
            ["aa", "ab", "aba", "ba"],
            "a",
            pair("1", "0"),
            None,
            pair("1", "1"),
            empty.clone(),
        ),
        row(
            3,
            ["aabb", "ab", "aba", "babb"],
            "a",
            pair("1", "0"),
            None,
            None,
            empty.clone(),
        ),
        row(
            4,
            ["aab", "aba", "aba", "baa"],
            "a",
            None,
            pair("0", "0"),
            pair("1", "1"),
            cyclic("aba"),
        ),
        row(
            5,
            ["aab", "abb", "aba", "bba"],
            "a",
            None,
            pair("0", "0"),
            pair("1", "1"),
            empty.clone(),
        ),
        row(
            6,
            ["aabb", "ab", "abaa", "bb"],
            "a",
            None,
            None,
            None,
            cyclic("abaabb"),
        ),
        row(
            7,
            ["aab", "abb", "aa", "bb"],
            "a",
            None,
            None,
            None,
            empty.clone(),
        ),
        row(
            8,
            ["aab", "abb", "aab", "bba"],
            "a",
            None,
            None,
            pair("1", "1"),
            cyclic("aab"),
        ),
        row(
            9,
            ["aab", "abb", "aba", "bab"],
            "a",
            None,
            pair("0", "0"),
            None,
            empty.clone(),
        ),
        row(
            10,
            ["abaab", "ababab", "a", "ba"],
            "aba",
            pair("", "01"),
            pair("0", "011"),
            pair("1", "111"),
            empty,
        ),
    ]
}

/// Every fixture: the power tails for m = 1, 2, 3, both family forms and the small cases.
pub fn all() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = (1..=3).map(power_tail).collect();
    out.push(dagger_family());
    out.push(double_dagger_family());
    out.extend(small_cases());
    out
}

fn block_str(b: Option<&Block>) -> Option<(String, String)> {
    b.map(|b| (b.g_word.to_string(), b.h_word.to_string()))
}

/// The pipeline result for `fx` and every way it differs from the
/// expectations.
pub fn check(fx: &Fixture) -> Result<(IntersectionDescription, Vec<String>)> {
    let desc = characterize(&fx.x, &fx.y, &fx.u, &fx.v)?;
    let mut problems = Vec::new();
    let mut expect = |what: &str, got: String, want: String| {
        if got != want {
            problems.push(format!("{what}: got {got}, expected {want}"));
        }
    };
    let w = &desc.witnesses;
    let ctx = w.context.as_ref();
    expect(
        "alpha",
        format!("{:?}", ctx.map(|c| c.alpha.to_string())),
        format!("{:?}", Some(&fx.alpha)),
    );
    expect(
        "mirrored",
        desc.mirrored_letters().to_string(),
        "false".into(),
    );
    if let (Some(images), Some(c)) = (&fx.marked, ctx) {
        let got = [&c.g, &c.h]
            .map(|m| m.images())
            .map(|(a, b)| [a.to_string(), b.to_string()])
            .concat();
        expect("marked images", format!("{got:?}"), format!("{images:?}"));
    }
    expect(
        "starting block",
        format!("{:?}", block_str(w.starting_block.as_ref())),
        format!("{:?}", fx.starting_block),
    );
    expect(
        "0-block",
        format!("{:?}", block_str(w.blocks.block0.as_ref())),
        format!("{:?}", fx.block0),
    );
    expect(
        "1-block",
        format!("{:?}", block_str(w.blocks.block1.as_ref())),
        format!("{:?}", fx.block1),
    );

    match (&fx.shape, &desc.shape) {
        (ExpectedShape::OnlyEmpty { bruteforce_len }, Shape::OnlyEmpty) => {
            let brute = intersect_bruteforce(&fx.x, &fx.y, &fx.u, &fx.v, *bruteforce_len);
            expect(
                "brute-force intersection",
                format!("{:?}", brute.words),
                format!("{:?}", vec![Word::<char>::empty()]),
            );
        }
        (ExpectedShape::Cyclic { generator }, Shape::Cyclic { generator: got }) => {
            expect("generator", got.to_string(), generator.to_string());
        }
        (
            ExpectedShape::InfiniteFamily {
                t,
                tail_exponent,
                form,
            },
            Shape::InfiniteFamily(fam),
        ) => {
            expect("t", fam.t.t.to_string(), t.to_string());
            expect(
                "tail exponent",
                fam.t.tail_exponent.to_string(),
                tail_exponent.to_string(),
            );
            if let Some(want) = form {
                let got = classify_infinite_form(&desc)?;
                expect(
                    "form",
                    format!(
                        "{:?} f'={} k={} m={:?}",
                        got.form, got.f_prime, got.k, got.m
                    ),
                    format!(
                        "{:?} f'={} k={} m={:?}",
                        want.form,
                        bits(&want.f_prime),
                        want.k,
                        want.m
                    ),
                );
            }
        }
        (want, got) => expect("shape", format!("{got:?}"), format!("{want:?}")),
    }
    Ok((desc, problems))
}
