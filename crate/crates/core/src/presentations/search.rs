//! Bounded bidirectional breadth-first search for word equivalence.
//!
//! The word problem for these monoids is not solved; the search is a
//! semi-decision procedure. A positive answer always comes with a
//! [`RewriteTrace`] certificate that replays independently; a negative
//! answer is only ever `Unknown`.

use std::collections::HashMap;

use super::rewrite::{Direction, RewriteStep, RewriteTrace};
use super::Presentation;
use crate::error::{Error, Result};
use crate::par;
use crate::words::{Generator, Word};

/// Search limits. `max_len` bounds intermediate word length (default:
/// `max(|u|, |w|) + 6`); `max_nodes` caps total visited words (default 10⁶).
#[derive(Debug, Clone, Copy)]
pub struct SearchBounds {
    pub max_len: Option<usize>,
    pub max_nodes: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_len: None, max_nodes: 1_000_000 }
    }
}

/// Search result: a verified derivation, or nothing within bounds.
#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Proved(RewriteTrace),
    Unknown,
}

impl SearchOutcome {
    pub fn is_proved(&self) -> bool {
        matches!(self, SearchOutcome::Proved(_))
    }
}

struct Side {
    words: Vec<Vec<Generator>>,
    parent: Vec<Option<(usize, RewriteStep)>>,
    index: HashMap<Vec<Generator>, usize>,
    frontier: Vec<usize>,
}

impl Side {
    fn new(root: Vec<Generator>) -> Self {
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        Side { words: vec![root], parent: vec![None], index, frontier: vec![0] }
    }

    fn insert(&mut self, letters: Vec<Generator>, from: usize, step: RewriteStep) -> Option<usize> {
        if self.index.contains_key(&letters) {
            return None;
        }
        let id = self.words.len();
        self.index.insert(letters.clone(), id);
        self.words.push(letters);
        self.parent.push(Some((from, step)));
        Some(id)
    }

    /// Steps from the root to `id`.
    fn path(&self, mut id: usize) -> Vec<RewriteStep> {
        let mut steps = Vec::new();
        while let Some((from, step)) = &self.parent[id] {
            steps.push(step.clone());
            id = *from;
        }
        steps.reverse();
        steps
    }
}

/// Searches for a rewriting derivation `u ⇒ w` inside the presentation.
///
/// Both words must share the presentation's strand count, alphabet, and
/// mode. Words with different permutation images are rejected immediately
/// (every catalog relation is π-compatible, so no derivation can exist —
/// but the two-valued contract still reports `Unknown`).
pub fn search_equiv(
    u: &Word,
    w: &Word,
    pres: &Presentation,
    bounds: &SearchBounds,
) -> Result<SearchOutcome> {
    search_impl(u, w, pres, bounds, true)
}

/// Sequential twin of [`search_equiv`]: frontier expansion stays on one
/// thread. Results are identical; this exists so the benchmark suite can
/// compare the two inside one build.
pub fn search_equiv_seq(
    u: &Word,
    w: &Word,
    pres: &Presentation,
    bounds: &SearchBounds,
) -> Result<SearchOutcome> {
    search_impl(u, w, pres, bounds, false)
}

fn search_impl(
    u: &Word,
    w: &Word,
    pres: &Presentation,
    bounds: &SearchBounds,
    parallel: bool,
) -> Result<SearchOutcome> {
    for word in [u, w] {
        if word.n() != pres.n || word.alphabet() != pres.alphabet || word.mode() != pres.mode {
            return Err(Error::Alphabet(format!(
                "word `{word}` does not live in presentation {} at n = {}",
                pres.name, pres.n
            )));
        }
    }
    if u.pi_image() != w.pi_image() {
        return Ok(SearchOutcome::Unknown);
    }
    let max_len = bounds.max_len.unwrap_or(u.len().max(w.len()) + 6);
    if u == w {
        return Ok(SearchOutcome::Proved(RewriteTrace {
            start: u.clone(),
            end: w.clone(),
            steps: vec![],
        }));
    }

    let mut fwd = Side::new(u.letters().to_vec());
    let mut bwd = Side::new(w.letters().to_vec());

    loop {
        if fwd.frontier.is_empty() && bwd.frontier.is_empty() {
            return Ok(SearchOutcome::Unknown);
        }
        if fwd.words.len() + bwd.words.len() > bounds.max_nodes {
            return Ok(SearchOutcome::Unknown);
        }
        // expand the smaller live frontier
        let expand_fwd = !fwd.frontier.is_empty()
            && (bwd.frontier.is_empty() || fwd.frontier.len() <= bwd.frontier.len());
        let (side, other) = if expand_fwd { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };

        let frontier_words: Vec<(usize, Vec<Generator>)> =
            side.frontier.iter().map(|&id| (id, side.words[id].clone())).collect();
        let expand = |(_, letters): &(usize, Vec<Generator>)| successors(letters, pres, max_len);
        let batches: Vec<Vec<(Vec<Generator>, RewriteStep)>> = if parallel {
            par::map_slice(&frontier_words, expand)
        } else {
            frontier_words.iter().map(expand).collect()
        };

        let mut next = Vec::new();
        let mut meet: Option<(usize, usize)> = None; // (this side's node, other side's node)
        'insert: for ((from, _), batch) in frontier_words.iter().zip(batches) {
            for (letters, step) in batch {
                if let Some(id) = side.insert(letters, *from, step) {
                    next.push(id);
                    if let Some(&other_id) = other.index.get(&side.words[id]) {
                        meet = Some((id, other_id));
                        break 'insert;
                    }
                    if side.words.len() + other.words.len() > bounds.max_nodes {
                        break 'insert;
                    }
                }
            }
        }
        side.frontier = next;

        if let Some((this_id, other_id)) = meet {
            let (f_id, b_id) = if expand_fwd { (this_id, other_id) } else { (other_id, this_id) };
            let mut steps = fwd.path(f_id);
            let mut back = bwd.path(b_id);
            back.reverse();
            for s in &mut back {
                s.dir = s.dir.flip();
            }
            steps.extend(back);
            return Ok(SearchOutcome::Proved(RewriteTrace {
                start: u.clone(),
                end: w.clone(),
                steps,
            }));
        }
    }
}

/// All single-step rewrites of a word, in catalog order, then by direction,
/// then by position — the canonical expansion order that makes the search
/// deterministic (and identical with and without the `parallel` feature).
fn successors(
    letters: &[Generator],
    pres: &Presentation,
    max_len: usize,
) -> Vec<(Vec<Generator>, RewriteStep)> {
    let mut out = Vec::new();
    for rel in &pres.relations {
        for dir in [Direction::Lr, Direction::Rl] {
            let (from, to) = match dir {
                Direction::Lr => (rel.lhs.letters(), rel.rhs.letters()),
                Direction::Rl => (rel.rhs.letters(), rel.lhs.letters()),
            };
            if from.len() > letters.len() {
                continue;
            }
            let new_len = letters.len() - from.len() + to.len();
            if new_len > max_len {
                continue;
            }
            for pos in 0..=letters.len() - from.len() {
                if &letters[pos..pos + from.len()] == from {
                    let mut next = Vec::with_capacity(new_len);
                    next.extend_from_slice(&letters[..pos]);
                    next.extend_from_slice(to);
                    next.extend_from_slice(&letters[pos + from.len()..]);
                    out.push((
                        next,
                        RewriteStep { label: rel.label.clone(), dir, pos },
                    ));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{catalog, verify_trace};
    use crate::words::{Alphabet, Mode};

    fn w(text: &str, n: usize) -> Word {
        Word::parse(text, n, Mode::Monoid, Alphabet::Standard).unwrap()
    }

    #[test]
    fn trivial_involution() {
        let p = catalog("vstm", 3).unwrap();
        let out = search_equiv(&w("s1 s1", 3), &w("e", 3), &p, &SearchBounds::default()).unwrap();
        match out {
            SearchOutcome::Proved(trace) => {
                assert_eq!(trace.steps.len(), 1);
                verify_trace(&trace, &p).unwrap();
            }
            SearchOutcome::Unknown => panic!("s1 s1 ≡ e must be proved"),
        }
    }

    #[test]
    fn base_case_of_the_mixed_relation() {
        let p = catalog("vstm", 3).unwrap();
        let out =
            search_equiv(&w("t1 s2 s1", 3), &w("s2 s1 t2", 3), &p, &SearchBounds::default())
                .unwrap();
        match out {
            SearchOutcome::Proved(trace) => verify_trace(&trace, &p).unwrap(),
            SearchOutcome::Unknown => panic!("τ₁s₂s₁ ≡ s₂s₁τ₂ must be proved"),
        }
    }

    #[test]
    fn distinct_generators_stay_unknown() {
        let p = catalog("vstm", 3).unwrap();
        let bounds = SearchBounds { max_len: Some(6), max_nodes: 20_000 };
        let out = search_equiv(&w("s1", 3), &w("t1", 3), &p, &bounds).unwrap();
        assert!(!out.is_proved());
    }

    #[test]
    fn pi_mismatch_short_circuits() {
        let p = catalog("vstm", 3).unwrap();
        let out = search_equiv(&w("s1", 3), &w("e", 3), &p, &SearchBounds::default()).unwrap();
        assert!(!out.is_proved());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let p = catalog("vstm", 3).unwrap();
        let bad = Word::parse("s1", 4, Mode::Monoid, Alphabet::Standard).unwrap();
        assert!(search_equiv(&bad, &bad, &p, &SearchBounds::default()).is_err());
    }

    #[test]
    fn derived_relation_eq46() {
        // s_i ν_j ν_i = ν_j ν_i s_j for |i−j| = 1, and the τ version
        let p = catalog("vstm", 3).unwrap();
        let bounds = SearchBounds { max_len: Some(12), max_nodes: 200_000 };
        for (lhs, rhs) in [("s1 v2 v1", "v2 v1 s2"), ("t1 v2 v1", "v2 v1 t2")] {
            let out = search_equiv(&w(lhs, 3), &w(rhs, 3), &p, &bounds).unwrap();
            match out {
                SearchOutcome::Proved(trace) => verify_trace(&trace, &p).unwrap(),
                SearchOutcome::Unknown => panic!("{lhs} ≡ {rhs} must be proved"),
            }
        }
    }

    #[test]
    fn derived_relation_s_tau_s() {
        // the remark after the defining relations: s₁τ₂s₁ = s₂τ₁s₂
        let p = catalog("vstm", 3).unwrap();
        let bounds = SearchBounds { max_len: Some(12), max_nodes: 200_000 };
        let out = search_equiv(&w("s1 t2 s1", 3), &w("s2 t1 s2", 3), &p, &bounds).unwrap();
        match out {
            SearchOutcome::Proved(trace) => verify_trace(&trace, &p).unwrap(),
            SearchOutcome::Unknown => panic!("s₁τ₂s₁ ≡ s₂τ₁s₂ must be proved"),
        }
    }

    #[test]
    fn seq_and_default_agree() {
        let p = catalog("vstm", 3).unwrap();
        let bounds = SearchBounds::default();
        let a = search_equiv(&w("t1 s2 s1", 3), &w("s2 s1 t2", 3), &p, &bounds).unwrap();
        let b = search_equiv_seq(&w("t1 s2 s1", 3), &w("s2 s1 t2", 3), &p, &bounds).unwrap();
        match (a, b) {
            (SearchOutcome::Proved(x), SearchOutcome::Proved(y)) => assert_eq!(x, y),
            _ => panic!("both must prove"),
        }
    }
}
