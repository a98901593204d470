//! Homogeneous 2-local representations of the twin group and its virtual
//! singular extensions: the block constructors, homomorphic word evaluation,
//! symbolic relation checking, and diagonal-conjugation equivalences.

mod spec;

pub use spec::{AnyRepresentation, RepSpecJson};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{local_embed, Matrix};
use crate::par;
use crate::presentations::Presentation;
use crate::ring::{GaussianRational, LaurentPoly, Ring};
use crate::words::{Alphabet, GenKind, Generator, Mode, Word};

/// Construction record, used by the irreducibility module to attach the
/// matching criterion verdict and canonical witness candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Eta1,
    Eta2 { f: LaurentPoly },
    Eta1Prime(Eta1PrimeParams),
    Eta2Prime(Eta2PrimeParams),
    Upsilon { family: u8 },
    Custom,
}

/// Parameter of the extension of the first twin representation:
/// the ν-block scalar `v(t)`, required to be a unit of Z[t^±1].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eta1PrimeParams {
    pub v: LaurentPoly,
}

impl Eta1PrimeParams {
    pub fn new(v: LaurentPoly) -> Result<Self> {
        if !v.is_unit() {
            return Err(Error::NotAUnit(v.to_string()));
        }
        Ok(Eta1PrimeParams { v })
    }
}

/// Parameters of the extension of the second twin representation.
/// `f` and `v` must be units; the τ-block determinant `w² − f²y²` must be a
/// unit for the group-mode representation (the monoid waives it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eta2PrimeParams {
    pub f: LaurentPoly,
    pub w: LaurentPoly,
    pub y: LaurentPoly,
    pub v: LaurentPoly,
}

impl Eta2PrimeParams {
    pub fn new(f: LaurentPoly, w: LaurentPoly, y: LaurentPoly, v: LaurentPoly) -> Result<Self> {
        if !f.is_unit() {
            return Err(Error::NotAUnit(format!("f = {f}")));
        }
        if !v.is_unit() {
            return Err(Error::NotAUnit(format!("v = {v}")));
        }
        Ok(Eta2PrimeParams { f, w, y, v })
    }

    /// Determinant of the τ-block `[[w, f²y], [y, w]]`.
    pub fn tau_det(&self) -> LaurentPoly {
        let f2y = &(&self.f * &self.f) * &self.y;
        &(&self.w * &self.w) - &(&f2y * &self.y)
    }
}

/// Parameters of the six homogeneous 2-local families over Q(i).
///
/// Families 2 and 3 replace the square root √(1−bc) by an explicit scalar
/// `a` constrained exactly by `a² + bc = 1`, which keeps all arithmetic in
/// Q(i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UpsilonParams {
    Family1 { b: GaussianRational, x: GaussianRational, y: GaussianRational, v: GaussianRational },
    Family2 { a: GaussianRational, b: GaussianRational, c: GaussianRational, v: GaussianRational },
    Family3 { a: GaussianRational, b: GaussianRational, c: GaussianRational, v: GaussianRational },
    Family4 { v: GaussianRational },
    Family5 { v: GaussianRational },
    Family6,
}

impl UpsilonParams {
    pub fn family(&self) -> u8 {
        match self {
            UpsilonParams::Family1 { .. } => 1,
            UpsilonParams::Family2 { .. } => 2,
            UpsilonParams::Family3 { .. } => 3,
            UpsilonParams::Family4 { .. } => 4,
            UpsilonParams::Family5 { .. } => 5,
            UpsilonParams::Family6 => 6,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            UpsilonParams::Family1 { b, x, y, v } => {
                if b.is_zero() {
                    return Err(Error::Constraint("family 1 needs b ≠ 0".into()));
                }
                if v.is_zero() {
                    return Err(Error::Constraint("family 1 needs v ≠ 0".into()));
                }
                // det T₁ = x² − y²/b²
                let b2 = b.mul(b);
                let det = x.mul(x).sub(&y.mul(y).exact_div(&b2).unwrap());
                if det.is_zero() {
                    return Err(Error::Constraint("family 1 needs x² − y²/b² ≠ 0".into()));
                }
                Ok(())
            }
            UpsilonParams::Family2 { a, b, c, v } | UpsilonParams::Family3 { a, b, c, v } => {
                let lhs = a.mul(a).add(&b.mul(c));
                if lhs != GaussianRational::one() {
                    return Err(Error::Constraint(format!(
                        "families 2/3 need a² + bc = 1, got {lhs}"
                    )));
                }
                if v.is_zero() {
                    return Err(Error::Constraint("families 2/3 need v ≠ 0".into()));
                }
                Ok(())
            }
            UpsilonParams::Family4 { v } | UpsilonParams::Family5 { v } => {
                if v.is_zero() {
                    return Err(Error::Constraint("families 4/5 need v ≠ 0".into()));
                }
                Ok(())
            }
            UpsilonParams::Family6 => Ok(()),
        }
    }
}

/// A representation: one n×n image per generator letter, over an exact ring.
///
/// Invariant kept by every constructor: when `τ⁻¹` is in the domain its
/// image is the exact inverse of `τ`'s image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation<R: Ring> {
    n: usize,
    alphabet: Alphabet,
    mode: Mode,
    images: BTreeMap<Generator, Matrix<R>>,
    label: String,
    provenance: Provenance,
}

impl<R: Ring> Representation<R> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn image(&self, g: &Generator) -> Option<&Matrix<R>> {
        self.images.get(g)
    }

    /// Generator images in canonical (kind, index) order.
    pub fn images(&self) -> impl Iterator<Item = (&Generator, &Matrix<R>)> {
        self.images.iter()
    }

    /// Homomorphic evaluation: the ordered product of the letter images;
    /// the empty word maps to the identity.
    pub fn eval(&self, w: &Word) -> Result<Matrix<R>> {
        if w.n() != self.n {
            return Err(Error::Dimension(format!("word over n = {} vs rep n = {}", w.n(), self.n)));
        }
        let mut acc = Matrix::identity(self.n);
        for g in w.letters() {
            let img = self
                .images
                .get(g)
                .ok_or_else(|| Error::MissingGenerator(g.token()))?;
            acc = acc.mul(img)?;
        }
        Ok(acc)
    }

    /// Checks every catalog relation by exact entrywise comparison of the
    /// two evaluations. Returns the labels of violated relations in catalog
    /// order; empty means the images define a representation.
    pub fn check_relations(&self, pres: &Presentation) -> Result<Vec<String>> {
        self.check_relations_impl(pres, true)
    }

    /// Sequential twin of [`Self::check_relations`] for the bench suite.
    pub fn check_relations_seq(&self, pres: &Presentation) -> Result<Vec<String>> {
        self.check_relations_impl(pres, false)
    }

    fn check_relations_impl(&self, pres: &Presentation, parallel: bool) -> Result<Vec<String>> {
        let verdicts: Vec<Result<Option<String>>> = if parallel {
            par::map_slice(&pres.relations, |rel| self.check_one(rel))
        } else {
            pres.relations.iter().map(|rel| self.check_one(rel)).collect()
        };
        let mut violated = Vec::new();
        for v in verdicts {
            if let Some(label) = v? {
                violated.push(label);
            }
        }
        Ok(violated)
    }

    fn check_one(&self, rel: &crate::presentations::Relation) -> Result<Option<String>> {
        let lhs = self.eval(&rel.lhs)?;
        let rhs = self.eval(&rel.rhs)?;
        Ok(if lhs == rhs { None } else { Some(rel.label.clone()) })
    }

    /// Replaces every image X by `D⁻¹ X D` with `D = diag(d)`. All entries
    /// of `d` must be invertible.
    pub fn conjugate_diag(&self, d: &[R]) -> Result<Representation<R>> {
        let images = self
            .images
            .iter()
            .map(|(g, m)| Ok((*g, m.conjugate_diag(d)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Representation {
            n: self.n,
            alphabet: self.alphabet,
            mode: self.mode,
            images,
            label: format!("{}''", self.label),
            provenance: self.provenance.clone(),
        })
    }
}

impl Representation<LaurentPoly> {
    /// Exact specialization `t ↦ t0` of every image, landing in Q(i).
    pub fn specialize(&self, t0: &GaussianRational) -> Result<Representation<GaussianRational>> {
        if t0.is_zero() {
            return Err(Error::EvalAtZero);
        }
        let images = self
            .images
            .iter()
            .map(|(g, m)| {
                let n = m.size();
                let mut out = Matrix::zero(n);
                for i in 0..n {
                    for j in 0..n {
                        out.set(i, j, m.get(i, j).eval(t0)?);
                    }
                }
                Ok((*g, out))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Representation {
            n: self.n,
            alphabet: self.alphabet,
            mode: self.mode,
            images,
            label: format!("{} at t = {t0}", self.label),
            provenance: self.provenance.clone(),
        })
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Index(format!("representations need n ≥ 2, got {n}")));
    }
    Ok(())
}

/// The twin s-block `[[1−t, t], [2−t, t−1]]`.
pub fn eta1_block() -> Matrix<LaurentPoly> {
    let lp = |s: &str| LaurentPoly::parse(s).unwrap();
    Matrix::from_rows(vec![
        vec![lp("1 - t"), lp("t")],
        vec![lp("2 - t"), lp("t - 1")],
    ])
    .unwrap()
}

/// Anti-diagonal block `[[0, u], [u⁻¹, 0]]` for a unit `u`.
fn antidiagonal_unit_block(u: &LaurentPoly, what: &str) -> Result<Matrix<LaurentPoly>> {
    let inv = u.unit_inverse().ok_or_else(|| Error::NotAUnit(format!("{what} = {u}")))?;
    Matrix::from_rows(vec![
        vec![LaurentPoly::zero(), u.clone()],
        vec![inv, LaurentPoly::zero()],
    ])
}

/// The first twin representation: `s_i ↦ [[1−t, t], [2−t, t−1]]` embedded
/// 2-locally at position i.
pub fn eta1(n: usize) -> Result<Representation<LaurentPoly>> {
    check_n(n)?;
    from_blocks_impl(
        n,
        Alphabet::Twin,
        Mode::Group,
        Some(eta1_block()),
        None,
        None,
        "eta1".into(),
        Provenance::Eta1,
    )
}

/// The second twin representation: `s_i ↦ [[0, f], [1/f, 0]]` for a unit f.
pub fn eta2(n: usize, f: &LaurentPoly) -> Result<Representation<LaurentPoly>> {
    check_n(n)?;
    from_blocks_impl(
        n,
        Alphabet::Twin,
        Mode::Group,
        Some(antidiagonal_unit_block(f, "f")?),
        None,
        None,
        "eta2".into(),
        Provenance::Eta2 { f: f.clone() },
    )
}

/// The extension of `eta1` to the full group: `τ_i ↦ I`,
/// `ν_i ↦ [[0, v], [1/v, 0]]` with `v` a unit.
pub fn eta1_prime(n: usize, params: &Eta1PrimeParams) -> Result<Representation<LaurentPoly>> {
    check_n(n)?;
    from_blocks_impl(
        n,
        Alphabet::Standard,
        Mode::Group,
        Some(eta1_block()),
        Some(Matrix::identity(2)),
        Some(antidiagonal_unit_block(&params.v, "v")?),
        "eta1'".into(),
        Provenance::Eta1Prime(params.clone()),
    )
}

/// The extension of `eta2`: `s_i ↦ [[0, f], [1/f, 0]]`,
/// `τ_i ↦ [[w, f²y], [y, w]]`, `ν_i ↦ [[0, v], [1/v, 0]]`.
///
/// In group mode the τ-block must be invertible over Z[t^±1] (unit
/// determinant); the monoid representation exists for all parameters.
pub fn eta2_prime(
    n: usize,
    params: &Eta2PrimeParams,
    mode: Mode,
) -> Result<Representation<LaurentPoly>> {
    check_n(n)?;
    let f2y = &(&params.f * &params.f) * &params.y;
    let tau = Matrix::from_rows(vec![
        vec![params.w.clone(), f2y],
        vec![params.y.clone(), params.w.clone()],
    ])?;
    if mode == Mode::Group && !params.tau_det().is_unit() {
        return Err(Error::Constraint(format!(
            "group mode needs the τ-block determinant w² − f²y² = {} to be a unit",
            params.tau_det()
        )));
    }
    from_blocks_impl(
        n,
        Alphabet::Standard,
        mode,
        Some(antidiagonal_unit_block(&params.f, "f")?),
        Some(tau),
        Some(antidiagonal_unit_block(&params.v, "v")?),
        "eta2'".into(),
        Provenance::Eta2Prime(params.clone()),
    )
}

/// One of the six homogeneous 2-local families over Q(i), after exact
/// constraint validation.
pub fn upsilon(n: usize, params: &UpsilonParams) -> Result<Representation<GaussianRational>> {
    check_n(n)?;
    params.validate()?;
    let one = GaussianRational::one;
    let zero = GaussianRational::zero;
    let anti = |v: &GaussianRational| -> Matrix<GaussianRational> {
        Matrix::from_rows(vec![
            vec![zero(), v.clone()],
            vec![v.inverse().unwrap(), zero()],
        ])
        .unwrap()
    };
    let ident = Matrix::identity(2);
    let (s, t, v) = match params {
        UpsilonParams::Family1 { b, x, y, v } => {
            let b2 = b.mul(b);
            let t = Matrix::from_rows(vec![
                vec![x.clone(), y.clone()],
                vec![y.exact_div(&b2).unwrap(), x.clone()],
            ])?;
            (anti(b), t, anti(v))
        }
        UpsilonParams::Family2 { a, b, c, v } => {
            let s = Matrix::from_rows(vec![
                vec![a.neg(), b.clone()],
                vec![c.clone(), a.clone()],
            ])?;
            (s, ident.clone(), anti(v))
        }
        UpsilonParams::Family3 { a, b, c, v } => {
            let s = Matrix::from_rows(vec![
                vec![a.clone(), b.clone()],
                vec![c.clone(), a.neg()],
            ])?;
            (s, ident.clone(), anti(v))
        }
        UpsilonParams::Family4 { v } => {
            let s = Matrix::from_rows(vec![
                vec![one().neg(), zero()],
                vec![zero(), one().neg()],
            ])?;
            (s, ident.clone(), anti(v))
        }
        UpsilonParams::Family5 { v } => (ident.clone(), ident.clone(), anti(v)),
        UpsilonParams::Family6 => (ident.clone(), ident.clone(), ident.clone()),
    };
    from_blocks_impl(
        n,
        Alphabet::Standard,
        Mode::Group,
        Some(s),
        Some(t),
        Some(v),
        format!("upsilon{}", params.family()),
        Provenance::Upsilon { family: params.family() },
    )
}

/// Generic homogeneous 2-local builder: `s_i`/`τ_i`/`ν_i` all take the same
/// block at every position. Group mode additionally installs `τ_i⁻¹` as the
/// exact inverse of the τ-block, which must therefore be invertible.
pub fn from_blocks<R: Ring>(
    n: usize,
    s_block: &Matrix<R>,
    t_block: &Matrix<R>,
    v_block: &Matrix<R>,
    mode: Mode,
) -> Result<Representation<R>> {
    check_n(n)?;
    from_blocks_impl(
        n,
        Alphabet::Standard,
        mode,
        Some(s_block.clone()),
        Some(t_block.clone()),
        Some(v_block.clone()),
        "blocks".into(),
        Provenance::Custom,
    )
}

#[allow(clippy::too_many_arguments)]
fn from_blocks_impl<R: Ring>(
    n: usize,
    alphabet: Alphabet,
    mode: Mode,
    s_block: Option<Matrix<R>>,
    t_block: Option<Matrix<R>>,
    v_block: Option<Matrix<R>>,
    label: String,
    provenance: Provenance,
) -> Result<Representation<R>> {
    let mut images = BTreeMap::new();
    let mut place = |kind: GenKind, block: &Matrix<R>| -> Result<()> {
        for i in 1..n {
            images.insert(Generator::new(kind, i), local_embed(i, n, block)?);
        }
        Ok(())
    };
    if let Some(b) = &s_block {
        place(GenKind::S, b)?;
    }
    if let Some(b) = &t_block {
        place(GenKind::Tau, b)?;
        if mode == Mode::Group {
            let inv = b.inverse_2x2().map_err(|_| {
                Error::Constraint(format!(
                    "group mode needs an invertible τ-block, determinant {}",
                    b.det()
                ))
            })?;
            place(GenKind::TauInv, &inv)?;
        }
    }
    if let Some(b) = &v_block {
        place(GenKind::Nu, b)?;
    }
    Ok(Representation { n, alphabet, mode, images, label, provenance })
}

/// Builds a representation from explicit per-generator images (the fully
/// explicit JSON form). Every image must be n×n.
pub fn from_images<R: Ring>(
    n: usize,
    images: BTreeMap<Generator, Matrix<R>>,
) -> Result<Representation<R>> {
    check_n(n)?;
    for (g, m) in &images {
        if m.size() != n {
            return Err(Error::Dimension(format!(
                "image of {} is {}×{}, expected {n}×{n}",
                g.token(),
                m.size(),
                m.size()
            )));
        }
        if g.index >= n {
            return Err(Error::Index(format!("generator {} with n = {n}", g.token())));
        }
    }
    let has_kind = |k: GenKind| images.keys().any(|g| g.kind == k);
    let mode = if has_kind(GenKind::TauInv) { Mode::Group } else { Mode::Monoid };
    let alphabet = if has_kind(GenKind::Mu) || has_kind(GenKind::Gamma) {
        Alphabet::Connecting
    } else {
        Alphabet::Standard
    };
    Ok(Representation { n, alphabet, mode, images, label: "explicit".into(), provenance: Provenance::Custom })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::catalog;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    fn word(text: &str, n: usize) -> Word {
        Word::parse(text, n, Mode::Group, Alphabet::Standard).unwrap()
    }

    #[test]
    fn eta1_block_placement() {
        let rep = eta1(3).unwrap();
        let s2 = rep.image(&Generator::new(GenKind::S, 2)).unwrap();
        assert_eq!(s2.get(0, 0), &lp("1"));
        assert_eq!(s2.get(1, 1), &lp("1 - t"));
        assert_eq!(s2.get(1, 2), &lp("t"));
        assert_eq!(s2.get(2, 1), &lp("2 - t"));
        assert_eq!(s2.get(2, 2), &lp("t - 1"));
    }

    #[test]
    fn eta1_satisfies_the_twin_relations() {
        let rep = eta1(4).unwrap();
        let tw = Word::parse("s1 s1", 4, Mode::Group, Alphabet::Twin).unwrap();
        assert!(rep.eval(&tw).unwrap().is_identity());
        let far1 = Word::parse("s1 s3", 4, Mode::Group, Alphabet::Twin).unwrap();
        let far2 = Word::parse("s3 s1", 4, Mode::Group, Alphabet::Twin).unwrap();
        assert_eq!(rep.eval(&far1).unwrap(), rep.eval(&far2).unwrap());
        assert!(rep.check_relations(&catalog("twin", 4).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn eta2_examples() {
        let rep = eta2(3, &lp("t")).unwrap();
        let s1 = rep.image(&Generator::new(GenKind::S, 1)).unwrap();
        assert_eq!(s1.get(0, 1), &lp("t"));
        assert_eq!(s1.get(1, 0), &lp("t^-1"));
        let sq = Word::parse("s1 s1", 3, Mode::Group, Alphabet::Twin).unwrap();
        assert!(rep.eval(&sq).unwrap().is_identity());
        // f = −1 is a unit
        assert!(eta2(3, &lp("-1")).is_ok());
        assert!(eta2(3, &lp("1 + t")).is_err());
    }

    #[test]
    fn eta1_prime_examples() {
        let rep = eta1_prime(4, &Eta1PrimeParams::new(lp("t")).unwrap()).unwrap();
        // τ images are the identity
        assert!(rep.image(&Generator::new(GenKind::Tau, 2)).unwrap().is_identity());
        assert!(rep.image(&Generator::new(GenKind::TauInv, 2)).unwrap().is_identity());
        // ν² = 1
        assert!(rep.eval(&word("v1 v1", 4)).unwrap().is_identity());
        // the whole catalog passes
        assert!(rep.check_relations(&catalog("vst", 4).unwrap()).unwrap().is_empty());
        assert!(Eta1PrimeParams::new(lp("1 + t")).is_err());
    }

    #[test]
    fn eta2_prime_examples() {
        let p = Eta2PrimeParams::new(lp("1"), lp("0"), lp("1"), lp("1")).unwrap();
        let rep = eta2_prime(3, &p, Mode::Monoid).unwrap();
        let tau = rep.image(&Generator::new(GenKind::Tau, 1)).unwrap();
        assert_eq!(tau.get(0, 1), &lp("1"));
        assert_eq!(tau.get(1, 0), &lp("1"));
        assert_eq!(tau.get(0, 0), &lp("0"));
        // w² − f²y² = −1 is a unit, so this one also lives in the group
        assert!(eta2_prime(3, &p, Mode::Group).is_ok());
        // w = y = f = 1 has singular τ-block: monoid only
        let singular = Eta2PrimeParams::new(lp("1"), lp("1"), lp("1"), lp("1")).unwrap();
        assert!(eta2_prime(3, &singular, Mode::Monoid).is_ok());
        assert!(eta2_prime(3, &singular, Mode::Group).is_err());
        // w = 2, f = y = 1: determinant 3 is nonzero yet not a unit of the ring
        let nonunit = Eta2PrimeParams::new(lp("1"), lp("2"), lp("1"), lp("1")).unwrap();
        assert!(eta2_prime(3, &nonunit, Mode::Group).is_err());

        let p = Eta2PrimeParams::new(lp("t"), lp("1"), lp("t"), lp("t^2")).unwrap();
        let rep = eta2_prime(4, &p, Mode::Monoid).unwrap();
        assert!(rep.check_relations(&catalog("vstm", 4).unwrap()).unwrap().is_empty());
        // s-block coincides with eta2's
        let e2 = eta2(4, &lp("t")).unwrap();
        assert_eq!(
            rep.image(&Generator::new(GenKind::S, 2)),
            e2.image(&Generator::new(GenKind::S, 2))
        );
    }

    #[test]
    fn upsilon_families() {
        let g = |s: &str| GaussianRational::parse(s).unwrap();
        // family 4 blocks
        let rep = upsilon(3, &UpsilonParams::Family4 { v: g("7") }).unwrap();
        let s1 = rep.image(&Generator::new(GenKind::S, 1)).unwrap();
        assert_eq!(s1.get(0, 0), &g("-1"));
        assert!(rep.image(&Generator::new(GenKind::Tau, 1)).unwrap().is_identity());
        // family 6 is trivial
        let rep = upsilon(3, &UpsilonParams::Family6).unwrap();
        for (_, m) in rep.images() {
            assert!(m.is_identity());
        }
        // family 2 on the conic a² + bc = 1
        let p = UpsilonParams::Family2 { a: g("3/5"), b: g("4/5"), c: g("4/5"), v: g("2") };
        let rep = upsilon(4, &p).unwrap();
        assert!(rep.check_relations(&catalog("vst", 4).unwrap()).unwrap().is_empty());
        // constraint violations
        assert!(upsilon(3, &UpsilonParams::Family1 { b: g("0"), x: g("1"), y: g("0"), v: g("1") })
            .is_err());
        assert!(upsilon(3, &UpsilonParams::Family1 { b: g("1"), x: g("1"), y: g("1"), v: g("1") })
            .is_err());
        assert!(upsilon(3, &UpsilonParams::Family2 { a: g("1"), b: g("1"), c: g("1"), v: g("1") })
            .is_err());
        assert!(upsilon(3, &UpsilonParams::Family4 { v: g("0") }).is_err());
    }

    #[test]
    fn from_blocks_examples() {
        // trivial representation passes everything
        let i2 = Matrix::<LaurentPoly>::identity(2);
        let rep = from_blocks(3, &i2, &i2, &i2, Mode::Group).unwrap();
        assert!(rep.check_relations(&catalog("vst", 3).unwrap()).unwrap().is_empty());
        // eta1' blocks reproduce eta1_prime exactly
        let v = lp("t");
        let vb = Matrix::from_rows(vec![
            vec![lp("0"), v.clone()],
            vec![v.unit_inverse().unwrap(), lp("0")],
        ])
        .unwrap();
        let rep = from_blocks(4, &eta1_block(), &Matrix::identity(2), &vb, Mode::Group).unwrap();
        let reference = eta1_prime(4, &Eta1PrimeParams::new(lp("t")).unwrap()).unwrap();
        for (g, m) in reference.images() {
            assert_eq!(rep.image(g), Some(m));
        }
        // a unipotent block is not an involution
        let unipotent =
            Matrix::from_rows(vec![vec![lp("1"), lp("1")], vec![lp("0"), lp("1")]]).unwrap();
        let rep = from_blocks(3, &unipotent, &i2, &i2, Mode::Group).unwrap();
        let violations = rep.check_relations(&catalog("vst", 3).unwrap()).unwrap();
        assert!(violations.contains(&"eq20-s-1".to_string()));
    }

    #[test]
    fn eval_examples() {
        let rep = eta1_prime(3, &Eta1PrimeParams::new(lp("t")).unwrap()).unwrap();
        assert!(rep.eval(&word("t1 t2 t1", 3)).unwrap().is_identity());
        assert!(rep.eval(&word("s1 s1", 3)).unwrap().is_identity());
        let p = Eta2PrimeParams::new(lp("t"), lp("1"), lp("t"), lp("t^2")).unwrap();
        let rep2 = eta2_prime(3, &p, Mode::Monoid).unwrap();
        assert_eq!(
            rep2.eval(&word("s1 t1", 3).with_mode(Mode::Monoid).unwrap()).unwrap(),
            rep2.eval(&word("t1 s1", 3).with_mode(Mode::Monoid).unwrap()).unwrap()
        );
        // monoid-mode rep has no τ⁻¹ image
        assert!(matches!(rep2.eval(&word("T1", 3)), Err(Error::MissingGenerator(_))));
    }

    #[test]
    fn bad_nu_block_is_reported_with_its_label() {
        let i2 = Matrix::<LaurentPoly>::identity(2);
        let bad_v =
            Matrix::from_rows(vec![vec![lp("0"), lp("1")], vec![lp("2"), lp("0")]]).unwrap();
        let rep = from_blocks(3, &i2, &i2, &bad_v, Mode::Group).unwrap();
        let violations = rep.check_relations(&catalog("vstm", 3).unwrap()).unwrap();
        assert!(violations.contains(&"eq20-nu-1".to_string()));
        // parallel and sequential agree, in catalog order
        let seq = rep.check_relations_seq(&catalog("vstm", 3).unwrap()).unwrap();
        assert_eq!(violations, seq);
    }

    #[test]
    fn conjugation_examples() {
        let rep = eta1_prime(3, &Eta1PrimeParams::new(lp("t")).unwrap()).unwrap();
        // identity diagonal leaves the representation unchanged
        let same = rep.conjugate_diag(&[lp("1"), lp("1"), lp("1")]).unwrap();
        for (g, m) in rep.images() {
            assert_eq!(same.image(g), Some(m));
        }
        // D = diag(v^{n−1}, …, v, 1) turns the ν-blocks into plain swaps
        let d = [lp("t^2"), lp("t"), lp("1")];
        let conj = rep.conjugate_diag(&d).unwrap();
        let v1 = conj.image(&Generator::new(GenKind::Nu, 1)).unwrap();
        assert_eq!(v1.get(0, 1), &lp("1"));
        assert_eq!(v1.get(1, 0), &lp("1"));
        // and the s-block into [[1−t, t/v], [(2−t)v, t−1]]; here v = t
        let s1 = conj.image(&Generator::new(GenKind::S, 1)).unwrap();
        assert_eq!(s1.get(0, 1), &lp("1"));
        assert_eq!(s1.get(1, 0), &(&lp("2 - t") * &lp("t")));
        // non-unit diagonal entries are rejected
        assert!(rep.conjugate_diag(&[lp("2"), lp("1"), lp("1")]).is_err());
        // conjugation preserves relation checking
        assert!(conj.check_relations(&catalog("vst", 3).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn unfaithfulness_witness() {
        for n in 3..=5 {
            let rep = eta1_prime(n, &Eta1PrimeParams::new(lp("t")).unwrap()).unwrap();
            let t1 = word("t1", n);
            assert!(rep.eval(&t1).unwrap().is_identity());
            assert!(!t1.is_empty());
            assert!(!t1.is_pure());
        }
    }

    #[test]
    fn restriction_consistency() {
        let n = 4;
        let e1p = eta1_prime(n, &Eta1PrimeParams::new(lp("-t^3")).unwrap()).unwrap();
        let e1 = eta1(n).unwrap();
        for i in 1..n {
            let g = Generator::new(GenKind::S, i);
            assert_eq!(e1p.image(&g), e1.image(&g));
        }
        let p = Eta2PrimeParams::new(lp("t^2"), lp("1 - t"), lp("3"), lp("-1")).unwrap();
        let e2p = eta2_prime(n, &p, Mode::Monoid).unwrap();
        let e2 = eta2(n, &lp("t^2")).unwrap();
        for i in 1..n {
            let g = Generator::new(GenKind::S, i);
            assert_eq!(e2p.image(&g), e2.image(&g));
        }
    }

    #[test]
    fn specialization() {
        let rep = eta1_prime(3, &Eta1PrimeParams::new(lp("t")).unwrap()).unwrap();
        let at3 = rep.specialize(&GaussianRational::from_int(3)).unwrap();
        let s1 = at3.image(&Generator::new(GenKind::S, 1)).unwrap();
        assert_eq!(s1.get(0, 0), &GaussianRational::from_int(-2));
        assert!(rep.specialize(&GaussianRational::zero()).is_err());
    }
}
