//! Report model and rendering for the `bintersect` binary.

use bintersect_core::coincidence::Block;
use bintersect_core::{
    InfiniteForm, InfiniteFormDetail, IntersectionDescription, Shape, VerificationReport, Word,
};
use serde::{Deserialize, Serialize};

/// The blocks as binary strings; `null` for an absent block.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Blocks {
    pub e0: Option<String>,
    pub e1: Option<String>,
    pub f0: Option<String>,
    pub f1: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub equal: bool,
    pub extra: Vec<String>,
    pub max_len: usize,
    pub missing: Vec<String>,
}

/// The structured report. Fields are declared in key order, so the JSON
/// output has sorted keys. Keys that do not apply are `null`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub alpha: Option<String>,
    pub alpha_g: String,
    pub alpha_h: String,
    pub beta: Option<String>,
    pub beta0: Option<String>,
    pub blocks: Blocks,
    pub case: String,
    pub delta: Option<String>,
    pub epsilon: Option<String>,
    pub f_prime: Option<String>,
    pub form: Option<String>,
    pub gamma: Option<String>,
    pub generator: Option<String>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub mirrored_letters: bool,
    pub p: Option<String>,
    pub q: Option<String>,
    pub swapped: bool,
    pub t: Option<usize>,
    pub tail_exponent: Option<usize>,
    pub verification: Option<Verification>,
}

fn s(w: &Word) -> Option<String> {
    Some(w.to_string())
}

impl Report {
    pub fn new(
        desc: &IntersectionDescription,
        detail: Option<&InfiniteFormDetail>,
        verification: Option<&VerificationReport>,
    ) -> Report {
        let w = &desc.witnesses;
        let block = |b: Option<&Block>, right: bool| {
            b.map(|b| if right { &b.h_word } else { &b.g_word }.to_string())
        };
        let mut report = Report {
            alpha: w.context.as_ref().and_then(|c| s(&c.alpha)),
            alpha_g: w.alpha_g.to_string(),
            alpha_h: w.alpha_h.to_string(),
            beta: None,
            beta0: None,
            blocks: Blocks {
                e0: block(w.blocks.block0.as_ref(), false),
                e1: block(w.blocks.block1.as_ref(), false),
                f0: block(w.blocks.block0.as_ref(), true),
                f1: block(w.blocks.block1.as_ref(), true),
            },
            case: String::new(),
            delta: None,
            epsilon: None,
            f_prime: detail.map(|d| d.f_prime.to_string()),
            form: detail.map(|d| {
                match d.form {
                    InfiniteForm::Dagger => "dagger",
                    InfiniteForm::DaggerDagger => "dagger_dagger",
                }
                .to_string()
            }),
            gamma: None,
            generator: None,
            k: detail.map(|d| d.k),
            m: detail.and_then(|d| d.m),
            mirrored_letters: desc.mirrored_letters(),
            p: w.starting_block.as_ref().map(|b| b.g_word.to_string()),
            q: w.starting_block.as_ref().map(|b| b.h_word.to_string()),
            swapped: w.context.as_ref().is_some_and(|c| c.swapped),
            t: None,
            tail_exponent: None,
            verification: verification.map(|v| Verification {
                equal: v.equal,
                extra: v.extra.iter().map(Word::to_string).collect(),
                max_len: v.max_len,
                missing: v.missing.iter().map(Word::to_string).collect(),
            }),
        };
        match &desc.shape {
            Shape::OnlyEmpty => report.case = "only_empty".into(),
            Shape::Cyclic { generator } => {
                report.case = "cyclic".into();
                report.generator = s(generator);
            }
            Shape::FreeRankTwo { beta, gamma } => {
                report.case = "free_rank_two".into();
                report.beta = s(beta);
                report.gamma = s(gamma);
            }
            Shape::InfiniteFamily(fam) => {
                report.case = "infinite_family".into();
                report.beta0 = s(&fam.beta0);
                report.beta = s(&fam.beta);
                report.gamma = s(&fam.gamma);
                report.delta = s(&fam.delta);
                report.epsilon = s(&fam.epsilon);
                report.t = Some(fam.t.t);
                report.tail_exponent = Some(fam.t.tail_exponent);
            }
        }
        report
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    /// The intersection as a regular expression over the output alphabet.
    pub fn language(&self) -> String {
        let get = |x: &Option<String>| shown(x.as_deref().unwrap_or(""));
        match self.case.as_str() {
            "cyclic" => format!("({})*", get(&self.generator)),
            "free_rank_two" => format!("({} + {})*", get(&self.beta), get(&self.gamma)),
            "infinite_family" => {
                let delta = get(&self.delta);
                let powers: Vec<String> = (0..=self.t.unwrap_or(0))
                    .map(|i| match i {
                        0 => "ε".to_string(),
                        1 => delta.clone(),
                        _ => format!("({delta})^{i}"),
                    })
                    .collect();
                let inner = match powers.len() {
                    1 => get(&self.gamma),
                    _ => format!("{}({})", get(&self.gamma), powers.join(" + ")),
                };
                format!(
                    "({} + {}({inner})*{})*",
                    get(&self.beta0),
                    get(&self.beta),
                    get(&self.epsilon)
                )
            }
            _ => "{ε}".to_string(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, value: String| out.push_str(&format!("{key:<16}{value}\n"));
        let opt = |x: &Option<String>| x.as_deref().map(shown).unwrap_or_else(|| "-".into());
        let num = |x: Option<usize>| x.map(|n| n.to_string()).unwrap_or_else(|| "-".into());
        line("case", self.case.clone());
        line("intersection", self.language());
        line("alpha_g", shown(&self.alpha_g));
        line("alpha_h", shown(&self.alpha_h));
        line("alpha", opt(&self.alpha));
        line("swapped", self.swapped.to_string());
        line(
            "starting block",
            match (&self.p, &self.q) {
                (Some(p), Some(q)) => format!("({}, {})", shown(p), shown(q)),
                _ => "-".into(),
            },
        );
        for (name, e, f) in [
            ("0-block", &self.blocks.e0, &self.blocks.f0),
            ("1-block", &self.blocks.e1, &self.blocks.f1),
        ] {
            line(
                name,
                match (e, f) {
                    (Some(e), Some(f)) => format!("({}, {})", shown(e), shown(f)),
                    _ => "-".into(),
                },
            );
        }
        if self.case == "infinite_family" {
            line("mirrored", self.mirrored_letters.to_string());
            line("t", num(self.t));
            line("tail_exponent", num(self.tail_exponent));
            line("form", opt(&self.form));
            line("f_prime", opt(&self.f_prime));
            line("k", num(self.k));
            line("m", num(self.m));
        }
        if let Some(v) = &self.verification {
            line(
                "verification",
                format!("max_len={} equal={}", v.max_len, v.equal),
            );
            for (name, words) in [("missing", &v.missing), ("extra", &v.extra)] {
                if !words.is_empty() {
                    line(
                        name,
                        words.iter().map(|w| shown(w)).collect::<Vec<_>>().join(" "),
                    );
                }
            }
        }
        out
    }
}

/// A word for display; `ε` when empty.
fn shown(w: &str) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        w.to_string()
    }
}
