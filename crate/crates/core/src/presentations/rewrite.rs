//! Single-step rewriting and certified rewrite traces.
//!
//! A trace is a replayable chain of relation applications — the
//! machine-checkable form of an equational derivation. Verification replays
//! every step; nothing about a trace is trusted.

use serde::{Deserialize, Serialize};

use super::{Presentation, Relation};
use crate::error::{Error, Result};
use crate::words::Word;

/// Which side of the relation is matched: `Lr` replaces lhs by rhs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "lr")]
    Lr,
    #[serde(rename = "rl")]
    Rl,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Lr => Direction::Rl,
            Direction::Rl => Direction::Lr,
        }
    }
}

/// One relation application at a letter position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub label: String,
    pub dir: Direction,
    pub pos: usize,
}

/// A certified chain of rewrite steps from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteTrace {
    pub start: Word,
    pub end: Word,
    pub steps: Vec<RewriteStep>,
}

/// Applies one relation at `pos`: the source side must occur there as a
/// contiguous subword; it is replaced by the other side.
pub fn rewrite_step(w: &Word, rel: &Relation, dir: Direction, pos: usize) -> Result<Word> {
    let (from, to) = match dir {
        Direction::Lr => (&rel.lhs, &rel.rhs),
        Direction::Rl => (&rel.rhs, &rel.lhs),
    };
    let pat = from.letters();
    let letters = w.letters();
    if pos + pat.len() > letters.len() {
        return Err(Error::StepMismatch {
            pos,
            msg: format!("pattern `{from}` overruns the word `{w}`"),
        });
    }
    if letters[pos..pos + pat.len()] != *pat {
        return Err(Error::StepMismatch {
            pos,
            msg: format!("`{from}` does not occur in `{w}` at {pos}"),
        });
    }
    let mut out = Vec::with_capacity(letters.len() - pat.len() + to.len());
    out.extend_from_slice(&letters[..pos]);
    out.extend_from_slice(to.letters());
    out.extend_from_slice(&letters[pos + pat.len()..]);
    Word::new(w.n(), w.mode(), w.alphabet(), out)
}

/// Replays the trace against the presentation. `Ok` means every step applied
/// and the final word equals `end` exactly; failures carry the step index.
pub fn verify_trace(trace: &RewriteTrace, pres: &Presentation) -> Result<()> {
    let mut current = trace.start.clone();
    for (index, step) in trace.steps.iter().enumerate() {
        let rel = pres
            .relation(&step.label)
            .map_err(|e| Error::TraceStep { index, msg: e.to_string() })?;
        current = rewrite_step(&current, rel, step.dir, step.pos)
            .map_err(|e| Error::TraceStep { index, msg: e.to_string() })?;
    }
    if current != trace.end {
        return Err(Error::TraceStep {
            index: trace.steps.len(),
            msg: format!("replay ends at `{current}`, expected `{}`", trace.end),
        });
    }
    Ok(())
}

/// Serialized step.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepJson {
    pub label: String,
    pub dir: Direction,
    pub pos: usize,
}

/// Serialized trace, words in the token grammar. The presentation name and
/// strand count identify the catalog the labels refer to.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceJson {
    pub presentation: String,
    pub n: usize,
    pub start: String,
    pub end: String,
    pub steps: Vec<StepJson>,
}

impl TraceJson {
    pub fn of(trace: &RewriteTrace, pres: &Presentation) -> Self {
        TraceJson {
            presentation: pres.name.clone(),
            n: pres.n,
            start: trace.start.to_string(),
            end: trace.end.to_string(),
            steps: trace
                .steps
                .iter()
                .map(|s| StepJson { label: s.label.clone(), dir: s.dir, pos: s.pos })
                .collect(),
        }
    }

    /// Loads the referenced catalog and parses the trace against it.
    pub fn load(&self) -> Result<(Presentation, RewriteTrace)> {
        let pres = super::catalog(&self.presentation, self.n)?;
        let start = Word::parse(&self.start, pres.n, pres.mode, pres.alphabet)?;
        let end = Word::parse(&self.end, pres.n, pres.mode, pres.alphabet)?;
        let steps = self
            .steps
            .iter()
            .map(|s| RewriteStep { label: s.label.clone(), dir: s.dir, pos: s.pos })
            .collect();
        Ok((pres, RewriteTrace { start, end, steps }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::catalog;
    use crate::words::{Alphabet, Mode};

    fn vstm3() -> Presentation {
        catalog("vstm", 3).unwrap()
    }

    fn w(text: &str) -> Word {
        Word::parse(text, 3, Mode::Monoid, Alphabet::Standard).unwrap()
    }

    #[test]
    fn rewrite_step_examples() {
        let p = vstm3();
        // ν₁² = 1 applied inside a word
        let out = rewrite_step(&w("s1 v1 v1 t2"), p.relation("eq20-nu-1").unwrap(), Direction::Lr, 1)
            .unwrap();
        assert_eq!(out.to_string(), "s1 t2");
        // eq22 right-to-left: τ₂ s₁ s₂ → s₁ s₂ τ₁
        let out = rewrite_step(&w("t2 s1 s2"), p.relation("eq22-1-2").unwrap(), Direction::Rl, 0)
            .unwrap();
        assert_eq!(out.to_string(), "s1 s2 t1");
        // detour relation
        let out = rewrite_step(&w("v1 v2 v1"), p.relation("eq23-1-2").unwrap(), Direction::Lr, 0)
            .unwrap();
        assert_eq!(out.to_string(), "v2 v1 v2");
        // no match
        let err = rewrite_step(&w("s1 s2"), p.relation("eq20-s-1").unwrap(), Direction::Lr, 0);
        assert!(matches!(err, Err(Error::StepMismatch { pos: 0, .. })));
        // insertion via the empty side
        let out = rewrite_step(&w("s2"), p.relation("eq20-nu-1").unwrap(), Direction::Rl, 1)
            .unwrap();
        assert_eq!(out.to_string(), "s2 v1 v1");
    }

    #[test]
    fn verify_trace_examples() {
        let p = vstm3();
        // empty trace with start = end
        let t = RewriteTrace { start: w("s1 v2"), end: w("s1 v2"), steps: vec![] };
        assert!(verify_trace(&t, &p).is_ok());
        // τ₁ s₂ s₁ ⇒ s₂ s₁ τ₂ in one application of eq22-2-1
        let t = RewriteTrace {
            start: w("t1 s2 s1"),
            end: w("s2 s1 t2"),
            steps: vec![RewriteStep { label: "eq22-2-1".into(), dir: Direction::Rl, pos: 0 }],
        };
        assert!(verify_trace(&t, &p).is_ok());
        // corrupted position reports the step index
        let bad = RewriteTrace {
            start: w("t1 s2 s1"),
            end: w("s2 s1 t2"),
            steps: vec![RewriteStep { label: "eq22-2-1".into(), dir: Direction::Rl, pos: 1 }],
        };
        match verify_trace(&bad, &p) {
            Err(Error::TraceStep { index: 0, .. }) => {}
            other => panic!("expected step-0 failure, got {other:?}"),
        }
        // unknown label
        let bad = RewriteTrace {
            start: w("e"),
            end: w("e"),
            steps: vec![RewriteStep { label: "eq99".into(), dir: Direction::Lr, pos: 0 }],
        };
        assert!(matches!(verify_trace(&bad, &p), Err(Error::TraceStep { index: 0, .. })));
        // wrong endpoint
        let bad = RewriteTrace { start: w("s1"), end: w("s2"), steps: vec![] };
        assert!(verify_trace(&bad, &p).is_err());
    }

    #[test]
    fn trace_json_round_trip() {
        let p = vstm3();
        let t = RewriteTrace {
            start: w("t1 s2 s1"),
            end: w("s2 s1 t2"),
            steps: vec![RewriteStep { label: "eq22-2-1".into(), dir: Direction::Rl, pos: 0 }],
        };
        let js = TraceJson::of(&t, &p);
        let text = serde_json::to_string(&js).unwrap();
        let back: TraceJson = serde_json::from_str(&text).unwrap();
        let (pres, t2) = back.load().unwrap();
        assert_eq!(t2, t);
        assert!(verify_trace(&t2, &pres).is_ok());
    }
}
