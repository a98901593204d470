//! Relation catalogs for the six presentations, single-step rewriting,
//! certified rewrite traces, translation homomorphisms between the
//! presentations, and a bounded bidirectional equivalence search.

mod catalog;
mod maps;
mod rewrite;
mod search;

pub use catalog::{catalog, CATALOG_NAMES};
pub use maps::{derive_generator, expand_reduced, map_f, map_g, translate_to_reduced};
pub use rewrite::{
    rewrite_step, verify_trace, Direction, RewriteStep, RewriteTrace, StepJson, TraceJson,
};
pub use search::{search_equiv, search_equiv_seq, SearchBounds, SearchOutcome};

use crate::error::{Error, Result};
use crate::words::{Alphabet, Mode, Word};

/// A defining relation: an unordered pair of words that denote the same
/// monoid element. Rewriting may apply it in either direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(label: impl Into<String>, lhs: Word, rhs: Word) -> Result<Self> {
        let label = label.into();
        if lhs.n() != rhs.n() || lhs.mode() != rhs.mode() || lhs.alphabet() != rhs.alphabet() {
            return Err(Error::Alphabet(format!("relation {label} mixes word contexts")));
        }
        if lhs.pi_image() != rhs.pi_image() {
            return Err(Error::Constraint(format!("relation {label} is not π-compatible")));
        }
        Ok(Relation { label, lhs, rhs })
    }
}

/// A named, fully instantiated relation catalog.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub name: String,
    pub n: usize,
    pub alphabet: Alphabet,
    pub mode: Mode,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn relation(&self, label: &str) -> Result<&Relation> {
        self.relations
            .iter()
            .find(|r| r.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.relations.iter().map(|r| r.label.as_str())
    }
}
