//! Translation homomorphisms between the presentations: the reduced-alphabet
//! expansion of `s_{i+1}` and `τ_{i+1}`, and the mutually inverse maps F, G
//! between the connecting-string monoid and the standard presentation.

use crate::error::{Error, Result};
use crate::words::{Alphabet, GenKind, Generator, Mode, Word};

/// The reduced-presentation spelling of a standard generator:
///
/// * `s_{i+1} = (ν_i…ν_1)(ν_{i+1}…ν_2) s_1 (ν_2…ν_{i+1})(ν_1…ν_i)`
/// * `τ_{i+1} = (ν_i…ν_1)(ν_{i+1}…ν_2) τ_1 (ν_2…ν_{i+1})(ν_1…ν_i)`
///
/// and the same sandwich for `τ_{i+1}⁻¹` (the ν prefix/suffix are mutually
/// inverse). `s_1`, `τ_1`, and every `ν_i` are their own spelling.
pub fn derive_generator(kind: GenKind, index: usize, n: usize) -> Result<Word> {
    if index == 0 || index >= n {
        return Err(Error::Index(format!("generator index {index} with n = {n}")));
    }
    let mode = if kind == GenKind::TauInv { Mode::Group } else { Mode::Monoid };
    match kind {
        GenKind::Nu => {
            return Word::new(n, mode, Alphabet::Reduced, vec![Generator::new(GenKind::Nu, index)])
        }
        GenKind::S | GenKind::Tau | GenKind::TauInv => {}
        other => {
            return Err(Error::Alphabet(format!(
                "no reduced spelling for {}{index}",
                other.prefix()
            )))
        }
    }
    let mut letters = Vec::new();
    let i = index - 1; // the paper's detour depth
    for k in (1..=i).rev() {
        letters.push(Generator::new(GenKind::Nu, k));
    }
    for k in (2..=index).rev() {
        letters.push(Generator::new(GenKind::Nu, k));
    }
    letters.push(Generator::new(kind, 1));
    for k in 2..=index {
        letters.push(Generator::new(GenKind::Nu, k));
    }
    for k in 1..=i {
        letters.push(Generator::new(GenKind::Nu, k));
    }
    Word::new(n, mode, Alphabet::Reduced, letters)
}

/// Reduced-alphabet words denote standard-alphabet words letter for letter;
/// this re-tags one.
pub fn expand_reduced(w: &Word) -> Result<Word> {
    if w.alphabet() != Alphabet::Reduced {
        return Err(Error::Alphabet(format!(
            "expand_reduced expects the reduced alphabet, got {}",
            w.alphabet().name()
        )));
    }
    Word::new(w.n(), w.mode(), Alphabet::Standard, w.letters().to_vec())
}

/// Rewrites a standard-alphabet word over the reduced generating set by
/// substituting the detour spelling for every `s_i`/`τ_i` with i ≥ 2.
pub fn translate_to_reduced(w: &Word) -> Result<Word> {
    if w.alphabet() != Alphabet::Standard {
        return Err(Error::Alphabet(format!(
            "expected the standard alphabet, got {}",
            w.alphabet().name()
        )));
    }
    let mut out = Word::empty(w.n(), w.mode(), Alphabet::Reduced);
    for g in w.letters() {
        out = out.concat(&derive_generator(g.kind, g.index, w.n())?.with_mode(w.mode())?)?;
    }
    Ok(out)
}

/// F: M_n → VSTM_n, the connecting-string expansion
/// `ν_i ↦ ν_i`, `μ_i ↦ s_i ν_i`, `μ_i⁻¹ ↦ ν_i s_i`, `γ_i ↦ τ_i ν_i`.
pub fn map_f(w: &Word) -> Result<Word> {
    if w.alphabet() != Alphabet::Connecting {
        return Err(Error::Alphabet(format!(
            "F expects the connecting alphabet, got {}",
            w.alphabet().name()
        )));
    }
    let mut letters = Vec::with_capacity(2 * w.len());
    for g in w.letters() {
        let i = g.index;
        match g.kind {
            GenKind::Nu => letters.push(Generator::new(GenKind::Nu, i)),
            GenKind::Mu => {
                letters.push(Generator::new(GenKind::S, i));
                letters.push(Generator::new(GenKind::Nu, i));
            }
            GenKind::MuInv => {
                letters.push(Generator::new(GenKind::Nu, i));
                letters.push(Generator::new(GenKind::S, i));
            }
            GenKind::Gamma => {
                letters.push(Generator::new(GenKind::Tau, i));
                letters.push(Generator::new(GenKind::Nu, i));
            }
            other => {
                return Err(Error::Alphabet(format!(
                    "letter {}{i} is not a connecting generator",
                    other.prefix()
                )))
            }
        }
    }
    Word::new(w.n(), w.mode(), Alphabet::Standard, letters)
}

/// G: VSTM_n → M_n, `ν_i ↦ ν_i`, `s_i ↦ μ_i ν_i`, `τ_i ↦ γ_i ν_i`.
///
/// Defined on monoid words only: a group-level G would need γ inverses,
/// which M_n does not have.
pub fn map_g(w: &Word) -> Result<Word> {
    if w.alphabet() != Alphabet::Standard {
        return Err(Error::Alphabet(format!(
            "G expects the standard alphabet, got {}",
            w.alphabet().name()
        )));
    }
    let mut letters = Vec::with_capacity(2 * w.len());
    for g in w.letters() {
        let i = g.index;
        match g.kind {
            GenKind::Nu => letters.push(Generator::new(GenKind::Nu, i)),
            GenKind::S => {
                letters.push(Generator::new(GenKind::Mu, i));
                letters.push(Generator::new(GenKind::Nu, i));
            }
            GenKind::Tau => {
                letters.push(Generator::new(GenKind::Gamma, i));
                letters.push(Generator::new(GenKind::Nu, i));
            }
            GenKind::TauInv => {
                return Err(Error::Mode(
                    "G is defined on monoid words; τ⁻¹ has no connecting-string image".into(),
                ))
            }
            other => {
                return Err(Error::Alphabet(format!(
                    "letter {}{i} is not a standard generator",
                    other.prefix()
                )))
            }
        }
    }
    Word::new(w.n(), Mode::Monoid, Alphabet::Connecting, letters)
}

impl Word {
    /// Re-tags the mode; fails when letters need the group (τ⁻¹ in a monoid).
    pub(crate) fn with_mode(&self, mode: Mode) -> Result<Word> {
        Word::new(self.n(), mode, self.alphabet(), self.letters().to_vec())
    }
}
