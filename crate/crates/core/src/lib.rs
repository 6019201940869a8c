//! Intersections of two free binary monoids `{x,y}* ∩ {u,v}*`.
//!
//! [`characterize`] decides the shape of the intersection and returns its
//! generators together with the intermediate witnesses. [`oracle`] provides
//! brute-force ground truth for bounded lengths.

pub mod coincidence;
pub mod error;
pub mod fixtures;
pub mod language;
pub mod morphism;
pub mod oracle;
pub mod structure;
pub mod word;

pub use coincidence::{Block, PartialBlocks, TraceEvent};
pub use error::{Error, Result};
pub use language::LanguageSample;
pub use morphism::BinMorphism;
pub use oracle::{verify, VerificationReport};
pub use structure::{
    characterize, characterize_traced, classify_infinite_form, InfiniteFamily, InfiniteForm,
    InfiniteFormDetail, IntersectionDescription, Shape, TParameter,
};
pub use word::{bits, Bin, BinWord, Word};
