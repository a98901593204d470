//! Free words over the generator alphabets of the twin-group family, plus
//! the permutation projection π onto `S_n`.
//!
//! Token grammar: whitespace-separated `<prefix><index>` tokens with
//! prefixes `s`, `t`, `T` (τ⁻¹), `v`, `m`, `M` (μ⁻¹), `g`; the empty word is
//! spelled `e`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generator kind across all alphabets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    /// Twin generator `s_i`.
    S,
    /// Singular generator `τ_i`.
    Tau,
    /// `τ_i⁻¹` (group mode only).
    TauInv,
    /// Virtual generator `ν_i`.
    Nu,
    /// Connecting string `μ_i = s_i ν_i`.
    Mu,
    /// `μ_i⁻¹ = ν_i s_i`.
    MuInv,
    /// Connecting string `γ_i = τ_i ν_i`.
    Gamma,
}

impl GenKind {
    pub fn prefix(self) -> char {
        match self {
            GenKind::S => 's',
            GenKind::Tau => 't',
            GenKind::TauInv => 'T',
            GenKind::Nu => 'v',
            GenKind::Mu => 'm',
            GenKind::MuInv => 'M',
            GenKind::Gamma => 'g',
        }
    }

    fn from_prefix(c: char) -> Option<Self> {
        Some(match c {
            's' => GenKind::S,
            't' => GenKind::Tau,
            'T' => GenKind::TauInv,
            'v' => GenKind::Nu,
            'm' => GenKind::Mu,
            'M' => GenKind::MuInv,
            'g' => GenKind::Gamma,
            _ => return None,
        })
    }

    /// π sends s, τ, τ⁻¹, ν of index i to the transposition (i, i+1);
    /// the connecting strings are pure and map to the identity.
    pub fn is_transposition(self) -> bool {
        matches!(self, GenKind::S | GenKind::Tau | GenKind::TauInv | GenKind::Nu)
    }
}

/// One indexed generator letter; indices are 1-based and at most n−1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub fn new(kind: GenKind, index: usize) -> Self {
        Generator { kind, index }
    }

    pub fn token(&self) -> String {
        format!("{}{}", self.kind.prefix(), self.index)
    }

    pub fn parse(tok: &str) -> Result<Self> {
        let mut chars = tok.chars();
        let prefix = chars.next().ok_or_else(|| Error::Parse("empty token".into()))?;
        let kind = GenKind::from_prefix(prefix)
            .ok_or_else(|| Error::Parse(format!("unknown token `{tok}`")))?;
        let rest = chars.as_str();
        if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad index in token `{tok}`")));
        }
        let index: usize =
            rest.parse().map_err(|_| Error::Parse(format!("bad index in token `{tok}`")))?;
        if index == 0 {
            return Err(Error::Parse(format!("indices are 1-based: `{tok}`")));
        }
        Ok(Generator { kind, index })
    }

    /// The letter cancelling this one on free reduction, if any. `s`, `ν`
    /// are involutive; `τ`, `μ` cancel against their explicit inverses;
    /// `γ` has no inverse letter.
    pub fn cancels_with(&self, other: &Generator) -> bool {
        if self.index != other.index {
            return false;
        }
        matches!(
            (self.kind, other.kind),
            (GenKind::S, GenKind::S)
                | (GenKind::Nu, GenKind::Nu)
                | (GenKind::Tau, GenKind::TauInv)
                | (GenKind::TauInv, GenKind::Tau)
                | (GenKind::Mu, GenKind::MuInv)
                | (GenKind::MuInv, GenKind::Mu)
        )
    }
}

/// Monoid words have no τ⁻¹ letters; μ⁻¹ is allowed (the monoid `M_n` lists
/// it among its generators).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Monoid,
    Group,
}

/// Generator alphabets of the four presentations families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Alphabet {
    /// `{s_i}` — the twin group.
    Twin,
    /// `{s_i, τ_i(⁻¹), ν_i}` — VSTM/VST and the singular twin monoid.
    Standard,
    /// `{s_1, τ_1(⁻¹), ν_1..ν_{n−1}}` — the reduced presentation.
    Reduced,
    /// `{μ_i(⁻¹), γ_i, ν_i}` — the connecting-string monoid `M_n`.
    Connecting,
}

impl Alphabet {
    pub fn name(self) -> &'static str {
        match self {
            Alphabet::Twin => "twin",
            Alphabet::Standard => "standard",
            Alphabet::Reduced => "reduced",
            Alphabet::Connecting => "connecting",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "twin" => Alphabet::Twin,
            "standard" => Alphabet::Standard,
            "reduced" => Alphabet::Reduced,
            "connecting" => Alphabet::Connecting,
            other => return Err(Error::Alphabet(format!("unknown alphabet `{other}`"))),
        })
    }

    pub fn admits(self, g: &Generator) -> bool {
        match self {
            Alphabet::Twin => g.kind == GenKind::S,
            Alphabet::Standard => {
                matches!(g.kind, GenKind::S | GenKind::Tau | GenKind::TauInv | GenKind::Nu)
            }
            Alphabet::Reduced => match g.kind {
                GenKind::Nu => true,
                GenKind::S | GenKind::Tau | GenKind::TauInv => g.index == 1,
                _ => false,
            },
            Alphabet::Connecting => {
                matches!(g.kind, GenKind::Mu | GenKind::MuInv | GenKind::Gamma | GenKind::Nu)
            }
        }
    }
}

/// A free word: a validated letter sequence over one alphabet with a fixed
/// strand count and mode.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    n: usize,
    mode: Mode,
    alphabet: Alphabet,
    letters: Vec<Generator>,
}

impl Word {
    pub fn new(n: usize, mode: Mode, alphabet: Alphabet, letters: Vec<Generator>) -> Result<Self> {
        for g in &letters {
            validate_letter(g, n, mode, alphabet)?;
        }
        Ok(Word { n, mode, alphabet, letters })
    }

    pub fn empty(n: usize, mode: Mode, alphabet: Alphabet) -> Self {
        Word { n, mode, alphabet, letters: Vec::new() }
    }

    /// Parses the whitespace-separated token grammar; `e` is the empty word.
    pub fn parse(text: &str, n: usize, mode: Mode, alphabet: Alphabet) -> Result<Self> {
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks == ["e"] || toks.is_empty() {
            return Ok(Self::empty(n, mode, alphabet));
        }
        let letters = toks
            .iter()
            .map(|t| {
                if *t == "e" {
                    Err(Error::Parse("`e` may only stand alone".into()))
                } else {
                    Generator::parse(t)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, mode, alphabet, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.n != other.n || self.mode != other.mode || self.alphabet != other.alphabet {
            return Err(Error::Alphabet("concatenation across different word contexts".into()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { n: self.n, mode: self.mode, alphabet: self.alphabet, letters })
    }

    /// Deletes adjacent cancelling pairs (`s_i s_i`, `ν_i ν_i`, `τ_i τ_i⁻¹`,
    /// `μ_i μ_i⁻¹`, in both orders for the inverse pairs) until none remain.
    /// The stack scan reaches the fixed point in one pass.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last().is_some_and(|top| top.cancels_with(&g)) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Word { n: self.n, mode: self.mode, alphabet: self.alphabet, letters: out }
    }

    /// The permutation image under π, composing transpositions left to
    /// right along the word.
    pub fn pi_image(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.n).collect();
        for g in &self.letters {
            if g.kind.is_transposition() {
                let (a, b) = (g.index - 1, g.index);
                for x in images.iter_mut() {
                    if *x == a {
                        *x = b;
                    } else if *x == b {
                        *x = a;
                    }
                }
            }
        }
        Permutation { images }
    }

    /// True when the word lies in the virtual singular pure twin kernel.
    pub fn is_pure(&self) -> bool {
        self.pi_image().is_identity()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let toks: Vec<String> = self.letters.iter().map(Generator::token).collect();
        write!(f, "{}", toks.join(" "))
    }
}

fn validate_letter(g: &Generator, n: usize, mode: Mode, alphabet: Alphabet) -> Result<()> {
    if g.index >= n {
        return Err(Error::Index(format!("generator {} needs index < n = {n}", g.token())));
    }
    if !alphabet.admits(g) {
        return Err(Error::Alphabet(format!(
            "generator {} is not in the {} alphabet",
            g.token(),
            alphabet.name()
        )));
    }
    if mode == Mode::Monoid && g.kind == GenKind::TauInv {
        return Err(Error::Mode(format!(
            "{} is a group-only letter (τ inverses exist only in the group)",
            g.token()
        )));
    }
    Ok(())
}

/// A permutation of `{1, …, n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds from 1-based images; must be a bijection of `{1, …, n}`.
    pub fn from_one_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x < 1 || x > n || seen[x - 1] {
                return Err(Error::Parse(format!("not a bijection of 1..={n}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|x| x - 1).collect() })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// 0-based application.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` then `other` (left-to-right composition, matching π).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    /// 1-based image sequence, the external form.
    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }
}

/// Serialized word form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WordJson {
    pub n: usize,
    pub mode: Mode,
    pub alphabet: Alphabet,
    pub letters: Vec<String>,
}

impl WordJson {
    pub fn of(w: &Word) -> Self {
        WordJson {
            n: w.n(),
            mode: w.mode(),
            alphabet: w.alphabet(),
            letters: w.letters().iter().map(Generator::token).collect(),
        }
    }

    pub fn to_word(&self) -> Result<Word> {
        let letters =
            self.letters.iter().map(|t| Generator::parse(t)).collect::<Result<Vec<_>>>()?;
        Word::new(self.n, self.mode, self.alphabet, letters)
    }
}
