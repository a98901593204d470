//! The relation catalogs.
//!
//! Families are instantiated over every valid index combination. Detour-type
//! families (`x_i y_j x_i = x_j y_i x_j` with |i−j| = 1) are symmetric under
//! swapping (i, j), so they are instantiated once at j = i+1; the mixed
//! `s_i s_j τ_i = τ_j s_i s_j` family is not symmetric and both orders are
//! kept. Commuting families take i < j with the generator-kind pair ranging
//! over all ordered combinations.

use super::{Presentation, Relation};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Mode, Word};

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: &[&str] =
    &["vstm", "vst", "twin", "stm", "st", "reduced-vstm", "mn", "reduced-mn"];

/// Builds a fully instantiated presentation by name. Requires n ≥ 2; index
/// families that need |i−j| = 1 are empty at n = 2 and those needing
/// |i−j| ≥ 2 are empty for n ≤ 3.
pub fn catalog(name: &str, n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::Index(format!("presentations need n ≥ 2, got {n}")));
    }
    let builder = Builder::new(n);
    match name {
        "vstm" => Ok(builder.vstm_like("vstm", Mode::Monoid)),
        "vst" => Ok(builder.vstm_like("vst", Mode::Group)),
        "twin" => Ok(builder.twin()),
        "stm" => Ok(builder.stm_like("stm", Mode::Monoid)),
        "st" => Ok(builder.stm_like("st", Mode::Group)),
        "reduced-vstm" => Ok(builder.reduced_vstm()),
        "mn" => Ok(builder.mn()),
        "reduced-mn" => Ok(builder.reduced_mn()),
        other => Err(Error::UnknownPresentation(other.to_string())),
    }
}

struct Builder {
    n: usize,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { n }
    }

    fn rel(
        &self,
        out: &mut Vec<Relation>,
        mode: Mode,
        alphabet: Alphabet,
        label: String,
        lhs: &str,
        rhs: &str,
    ) {
        let lhs = Word::parse(lhs, self.n, mode, alphabet).expect("catalog lhs");
        let rhs = Word::parse(rhs, self.n, mode, alphabet).expect("catalog rhs");
        out.push(Relation::new(label, lhs, rhs).expect("catalog relation"));
    }

    /// Adjacent ordered pairs (i, j), |i−j| = 1.
    fn adjacent_pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (1..n).flat_map(move |i| {
            [(i, i + 1), (i + 1, i)]
                .into_iter()
                .filter(move |&(a, b)| a < n && b < n && a >= 1 && b >= 1)
        })
    }

    /// Distant pairs i < j with j − i ≥ 2.
    fn distant_pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (1..n).flat_map(move |i| (i + 2..n).map(move |j| (i, j)))
    }

    fn vstm_like(&self, name: &str, mode: Mode) -> Presentation {
        let n = self.n;
        let al = Alphabet::Standard;
        let mut rels = Vec::new();
        for i in 1..n {
            self.rel(&mut rels, mode, al, format!("eq20-s-{i}"), &format!("s{i} s{i}"), "e");
            self.rel(&mut rels, mode, al, format!("eq20-nu-{i}"), &format!("v{i} v{i}"), "e");
        }
        for i in 1..n {
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq21-{i}"),
                &format!("t{i} s{i}"),
                &format!("s{i} t{i}"),
            );
        }
        for (i, j) in self.adjacent_pairs() {
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq22-{i}-{j}"),
                &format!("s{i} s{j} t{i}"),
                &format!("t{j} s{i} s{j}"),
            );
        }
        for i in 1..n.saturating_sub(1) {
            let j = i + 1;
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq23-{i}-{j}"),
                &format!("v{i} v{j} v{i}"),
                &format!("v{j} v{i} v{j}"),
            );
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq24-{i}-{j}"),
                &format!("v{i} s{j} v{i}"),
                &format!("v{j} s{i} v{j}"),
            );
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq25-{i}-{j}"),
                &format!("v{i} t{j} v{i}"),
                &format!("v{j} t{i} v{j}"),
            );
        }
        for (i, j) in self.distant_pairs() {
            for a in ['s', 't', 'v'] {
                for b in ['s', 't', 'v'] {
                    self.rel(
                        &mut rels,
                        mode,
                        al,
                        format!("comm-{a}{i}-{b}{j}"),
                        &format!("{a}{i} {b}{j}"),
                        &format!("{b}{j} {a}{i}"),
                    );
                }
            }
        }
        Presentation { name: name.to_string(), n, alphabet: al, mode, relations: rels }
    }

    fn twin(&self) -> Presentation {
        let n = self.n;
        let (mode, al) = (Mode::Group, Alphabet::Twin);
        let mut rels = Vec::new();
        for i in 1..n {
            self.rel(&mut rels, mode, al, format!("eq15-{i}"), &format!("s{i} s{i}"), "e");
        }
        for (i, j) in self.distant_pairs() {
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq16-{i}-{j}"),
                &format!("s{i} s{j}"),
                &format!("s{j} s{i}"),
            );
        }
        Presentation { name: "twin".into(), n, alphabet: al, mode, relations: rels }
    }

    fn stm_like(&self, name: &str, mode: Mode) -> Presentation {
        let n = self.n;
        let al = Alphabet::Standard;
        let mut rels = Vec::new();
        for i in 1..n {
            self.rel(&mut rels, mode, al, format!("eq15-{i}"), &format!("s{i} s{i}"), "e");
        }
        for (i, j) in self.distant_pairs() {
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq16-{i}-{j}"),
                &format!("s{i} s{j}"),
                &format!("s{j} s{i}"),
            );
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq4-{i}-{j}"),
                &format!("t{i} t{j}"),
                &format!("t{j} t{i}"),
            );
            // τ_i s_j = s_j τ_i needs both index orders
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq17-{i}-{j}"),
                &format!("t{i} s{j}"),
                &format!("s{j} t{i}"),
            );
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq17-{j}-{i}"),
                &format!("t{j} s{i}"),
                &format!("s{i} t{j}"),
            );
        }
        for i in 1..n {
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq18-{i}"),
                &format!("t{i} s{i}"),
                &format!("s{i} t{i}"),
            );
        }
        for (i, j) in self.adjacent_pairs() {
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq19-{i}-{j}"),
                &format!("s{i} s{j} t{i}"),
                &format!("t{j} s{i} s{j}"),
            );
        }
        Presentation { name: name.to_string(), n, alphabet: al, mode, relations: rels }
    }

    fn reduced_vstm(&self) -> Presentation {
        let n = self.n;
        let (mode, al) = (Mode::Monoid, Alphabet::Reduced);
        let mut rels = Vec::new();
        for i in 1..n.saturating_sub(1) {
            let j = i + 1;
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq36-{i}-{j}"),
                &format!("v{i} v{j} v{i}"),
                &format!("v{j} v{i} v{j}"),
            );
        }
        for (i, j) in self.distant_pairs() {
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq37-{i}-{j}"),
                &format!("v{i} v{j}"),
                &format!("v{j} v{i}"),
            );
        }
        for i in 1..n {
            self.rel(&mut rels, mode, al, format!("eq38-nu-{i}"), &format!("v{i} v{i}"), "e");
        }
        self.rel(&mut rels, mode, al, "eq38-s1".into(), "s1 s1", "e");
        self.rel(&mut rels, mode, al, "eq39".into(), "s1 t1", "t1 s1");
        for i in 3..n {
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq40-t-{i}"),
                &format!("t1 v{i}"),
                &format!("v{i} t1"),
            );
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq40-s-{i}"),
                &format!("s1 v{i}"),
                &format!("v{i} s1"),
            );
        }
        if n >= 3 {
            self.rel(
                &mut rels,
                mode,
                al,
                "eq41".into(),
                "t1 v1 v2 s1 v2 v1 s1",
                "v1 v2 s1 v2 v1 s1 v1 v2 t1 v2 v1",
            );
        }
        if n >= 4 {
            self.rel(
                &mut rels,
                mode,
                al,
                "eq42".into(),
                "s1 v2 v3 v1 v2 s1 v2 v1 v3 v2",
                "v2 v3 v1 v2 s1 v2 v1 v3 v2 s1",
            );
            self.rel(
                &mut rels,
                mode,
                al,
                "eq43".into(),
                "t1 v2 v3 v1 v2 s1 v2 v1 v3 v2",
                "v2 v3 v1 v2 s1 v2 v1 v3 v2 t1",
            );
            self.rel(
                &mut rels,
                mode,
                al,
                "eq44".into(),
                "t1 v2 v3 v1 v2 t1 v2 v1 v3 v2",
                "v2 v3 v1 v2 t1 v2 v1 v3 v2 t1",
            );
        }
        Presentation { name: "reduced-vstm".into(), n, alphabet: al, mode, relations: rels }
    }

    fn mn(&self) -> Presentation {
        let n = self.n;
        let (mode, al) = (Mode::Monoid, Alphabet::Connecting);
        let mut rels = Vec::new();
        for i in 1..n {
            self.rel(&mut rels, mode, al, format!("eq25-nu-{i}"), &format!("v{i} v{i}"), "e");
            self.rel(&mut rels, mode, al, format!("eq25-mu-{i}"), &format!("m{i} M{i}"), "e");
            self.rel(&mut rels, mode, al, format!("eq25-imu-{i}"), &format!("M{i} m{i}"), "e");
        }
        for i in 1..n.saturating_sub(1) {
            let j = i + 1;
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq26-{i}-{j}"),
                &format!("v{i} v{j} v{i}"),
                &format!("v{j} v{i} v{j}"),
            );
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq27-{i}-{j}"),
                &format!("v{i} m{j} v{i}"),
                &format!("v{j} m{i} v{j}"),
            );
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq28-{i}-{j}"),
                &format!("v{i} g{j} v{i}"),
                &format!("v{j} g{i} v{j}"),
            );
        }
        for (i, j) in self.adjacent_pairs() {
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq29-{i}-{j}"),
                &format!("m{j} v{j} m{i} v{j} g{i}"),
                &format!("g{i} v{j} m{i} v{j} m{j}"),
            );
        }
        for i in 1..n {
            self.rel(
                &mut rels,
                mode,
                al,
                format!("eq30-{i}"),
                &format!("m{i} v{i} g{i}"),
                &format!("g{i} v{i} m{i}"),
            );
        }
        for (i, j) in self.distant_pairs() {
            for a in ['m', 'g', 'v'] {
                for b in ['m', 'g', 'v'] {
                    self.rel(
                        &mut rels,
                        mode,
                        al,
                        format!("eq31-{a}{i}-{b}{j}"),
                        &format!("{a}{i} {b}{j}"),
                        &format!("{b}{j} {a}{i}"),
                    );
                }
            }
        }
        Presentation { name: "mn".into(), n, alphabet: al, mode, relations: rels }
    }

    fn reduced_mn(&self) -> Presentation {
        let n = self.n;
        let (mode, al) = (Mode::Monoid, Alphabet::Connecting);
        let mut rels = Vec::new();
        for i in 1..n {
            self.rel(&mut rels, mode, al, format!("rmn-id-nu-{i}"), &format!("v{i} v{i}"), "e");
        }
        self.rel(&mut rels, mode, al, "rmn-id-mu".into(), "m1 M1", "e");
        self.rel(&mut rels, mode, al, "rmn-id-imu".into(), "M1 m1", "e");
        for i in 1..n.saturating_sub(1) {
            let j = i + 1;
            self.rel(
                &mut rels,
                mode,
                al,
                format!("rmn-braid-{i}-{j}"),
                &format!("v{i} v{j} v{i}"),
                &format!("v{j} v{i} v{j}"),
            );
        }
        if n >= 3 {
            // eq29 at (i, j) = (1, 2) with μ₂ detoured to ν₁ν₂μ₁ν₂ν₁
            self.rel(
                &mut rels,
                mode,
                al,
                "rmn-mix".into(),
                "v1 v2 m1 v2 v1 v2 m1 v2 g1",
                "g1 v2 m1 v2 v1 v2 m1 v2 v1",
            );
        }
        self.rel(&mut rels, mode, al, "rmn-swap".into(), "m1 v1 g1", "g1 v1 m1");
        for (i, j) in self.distant_pairs() {
            self.rel(
                &mut rels,
                mode,
                al,
                format!("rmn-comm-nu-{i}-{j}"),
                &format!("v{i} v{j}"),
                &format!("v{j} v{i}"),
            );
        }
        for i in 3..n {
            self.rel(
                &mut rels,
                mode,
                al,
                format!("rmn-comm-mu-{i}"),
                &format!("m1 v{i}"),
                &format!("v{i} m1"),
            );
            self.rel(
                &mut rels,
                mode,
                al,
                format!("rmn-comm-g-{i}"),
                &format!("g1 v{i}"),
                &format!("v{i} g1"),
            );
        }
        if n >= 4 {
            self.rel(
                &mut rels,
                mode,
                al,
                "rmn-gg".into(),
                "g1 v2 v1 v3 v2 g1 v2 v3 v1 v2",
                "v2 v1 v3 v2 g1 v2 v3 v1 v2 g1",
            );
            self.rel(
                &mut rels,
                mode,
                al,
                "rmn-gm".into(),
                "g1 v2 v1 v3 v2 m1 v2 v3 v1 v2",
                "v2 v1 v3 v2 m1 v2 v3 v1 v2 g1",
            );
            self.rel(
                &mut rels,
                mode,
                al,
                "rmn-mm".into(),
                "m1 v2 v1 v3 v2 m1 v2 v3 v1 v2",
                "v2 v1 v3 v2 m1 v2 v3 v1 v2 m1",
            );
        }
        Presentation { name: "reduced-mn".into(), n, alphabet: al, mode, relations: rels }
    }
}
