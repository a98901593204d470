//! Exact irreducibility decisions at Q(i) specializations.
//!
//! The computational oracle is the matrix-algebra span test: over an
//! algebraically closed field a finite-dimensional representation is
//! irreducible iff its images generate the full matrix algebra. Algebra
//! dimension is invariant under field extension, so exact rank n² over
//! Q(i) ⊂ C certifies irreducibility over C, and rank < n² certifies a
//! proper invariant subspace. The dimension is always reported so the
//! evidence stays inspectable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kernel_of_rows, Matrix, RowSpace};
use crate::par;
use crate::reps::{Eta2PrimeParams, Provenance, Representation};
use crate::ring::{GaussianRational, LaurentPoly, Ring};

/// Verdict of an irreducibility check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Irreducible,
    Reducible,
}

/// Outcome of [`decide`]: the algebra dimension, the verdict it implies,
/// an invariant-line witness when one was found, and the criterion verdict
/// predicted by the matching theorem when the representation is η₁′ or η₂′.
#[derive(Debug, Clone)]
pub struct IrreducibilityReport {
    pub n: usize,
    pub t0: GaussianRational,
    pub algebra_dimension: usize,
    pub verdict: Verdict,
    pub witness: Option<Vec<GaussianRational>>,
    pub predicate: Option<Verdict>,
}

/// Dimension of the unital matrix algebra generated by `mats`, by exact
/// closure: seed the span with the identity, then keep multiplying the
/// newly independent elements by the generators until the span is stable.
pub fn burnside_dimension(mats: &[Matrix<GaussianRational>]) -> usize {
    burnside_impl(mats, true)
}

/// Sequential twin of [`burnside_dimension`] for the bench suite.
pub fn burnside_dimension_seq(mats: &[Matrix<GaussianRational>]) -> usize {
    burnside_impl(mats, false)
}

fn burnside_impl(mats: &[Matrix<GaussianRational>], parallel: bool) -> usize {
    assert!(!mats.is_empty(), "algebra span of an empty generator list");
    let n = mats[0].size();
    assert!(mats.iter().all(|m| m.size() == n), "mixed matrix sizes");
    let full = n * n;
    let mut space = RowSpace::new(full);
    let mut fresh: Vec<Matrix<GaussianRational>> = Vec::new();
    let identity = Matrix::identity(n);
    if space.insert(identity.flatten()) {
        fresh.push(identity);
    }
    // the dimension grows every productive round, so this terminates well
    // before the defensive cap
    let max_rounds = full + 2;
    for _ in 0..max_rounds {
        if fresh.is_empty() || space.rank() == full {
            break;
        }
        let pairs: Vec<(usize, usize)> = (0..fresh.len())
            .flat_map(|b| (0..mats.len()).map(move |g| (b, g)))
            .collect();
        let mul = |&(b, g): &(usize, usize)| fresh[b].mul(&mats[g]).expect("sizes agree");
        let products: Vec<Matrix<GaussianRational>> = if parallel {
            par::map_slice(&pairs, mul)
        } else {
            pairs.iter().map(mul).collect()
        };
        let mut next = Vec::new();
        for p in products {
            if space.rank() == full {
                break;
            }
            if space.insert(p.flatten()) {
                next.push(p);
            }
        }
        fresh = next;
    }
    space.rank()
}

/// True iff every matrix maps span(x) into span(x), by exact
/// proportionality. The zero vector is rejected.
pub fn invariant_vector_check(
    mats: &[Matrix<GaussianRational>],
    x: &[GaussianRational],
) -> Result<bool> {
    let pivot = match x.iter().position(|c| !c.is_zero()) {
        Some(p) => p,
        None => return Err(Error::Constraint("the zero vector spans no line".into())),
    };
    for m in mats {
        let y = m.apply(x)?;
        let lambda = y[pivot].exact_div(&x[pivot]).expect("pivot is nonzero");
        for (yi, xi) in y.iter().zip(x.iter()) {
            if *yi != lambda.mul(xi) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The irreducibility criterion for η₁′: irreducible iff `v(t) ≠ 1`.
pub fn eta1_irreducible_predicate(v: &LaurentPoly) -> bool {
    *v != LaurentPoly::one()
}

/// The irreducibility criterion for η₂′: irreducible iff
/// `f ≠ v` or `w + f²y/v ≠ 1` or `vy + w ≠ 1`, all exactly in Z[t^±1];
/// the middle condition is compared after clearing the unit denominator v.
pub fn eta2_irreducible_predicate(p: &Eta2PrimeParams) -> bool {
    if p.f != p.v {
        return true;
    }
    let f2y = &(&p.f * &p.f) * &p.y;
    // w·v + f²y ≠ v  ⇔  w + f²y/v ≠ 1
    if &(&p.w * &p.v) + &f2y != p.v {
        return true;
    }
    &(&p.v * &p.y) + &p.w != LaurentPoly::one()
}

/// Specializes the representation at `t0`, runs the algebra-span test, and
/// (when reducible) searches the canonical invariant-line witnesses: the
/// all-ones vector, its diagonal-weighted variant from the representation's
/// own ν-parameter, and the common fixed space of all images.
pub fn decide(rep: &Representation<LaurentPoly>, t0: &GaussianRational) -> Result<IrreducibilityReport> {
    let specialized = rep.specialize(t0)?;
    let n = specialized.n();
    let mats: Vec<Matrix<GaussianRational>> =
        specialized.images().map(|(_, m)| m.clone()).collect();
    let algebra_dimension = burnside_dimension(&mats);
    let verdict = if algebra_dimension == n * n { Verdict::Irreducible } else { Verdict::Reducible };

    let witness = if verdict == Verdict::Reducible {
        find_witness(rep, &mats, n, t0)?
    } else {
        None
    };

    let predicate = match rep.provenance() {
        Provenance::Eta1Prime(p) => Some(verdict_of(eta1_irreducible_predicate(&p.v))),
        Provenance::Eta2Prime(p) => Some(verdict_of(eta2_irreducible_predicate(p))),
        _ => None,
    };

    Ok(IrreducibilityReport { n, t0: t0.clone(), algebra_dimension, verdict, witness, predicate })
}

fn verdict_of(irreducible: bool) -> Verdict {
    if irreducible {
        Verdict::Irreducible
    } else {
        Verdict::Reducible
    }
}

fn find_witness(
    rep: &Representation<LaurentPoly>,
    mats: &[Matrix<GaussianRational>],
    n: usize,
    t0: &GaussianRational,
) -> Result<Option<Vec<GaussianRational>>> {
    let mut candidates: Vec<Vec<GaussianRational>> = Vec::new();
    candidates.push(vec![GaussianRational::one(); n]);
    // D = diag(v^{n−1}, …, v, 1) applied to the all-ones vector
    let v_param = match rep.provenance() {
        Provenance::Eta1Prime(p) => Some(p.v.clone()),
        Provenance::Eta2Prime(p) => Some(p.v.clone()),
        _ => None,
    };
    if let Some(v) = v_param {
        let v0 = v.eval(t0)?;
        if !v0.is_zero() {
            let weighted: Result<Vec<GaussianRational>> =
                (0..n).map(|k| v0.pow((n - 1 - k) as i64)).collect();
            candidates.push(weighted?);
        }
    }
    for cand in candidates {
        if invariant_vector_check(mats, &cand)? {
            return Ok(Some(cand));
        }
    }
    // intersection of the kernels of (ρ(g) − I): a common fixed vector
    let identity = Matrix::identity(n);
    let mut rows = Vec::new();
    for m in mats {
        for i in 0..n {
            let row: Vec<GaussianRational> = (0..n)
                .map(|j| m.get(i, j).sub(identity.get(i, j)))
                .collect();
            rows.push(row);
        }
    }
    let kernel = kernel_of_rows(rows, n);
    for cand in kernel {
        if invariant_vector_check(mats, &cand)? {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// Serialized report form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportJson {
    pub n: usize,
    pub t0: String,
    pub algebra_dimension: usize,
    pub verdict: Verdict,
    pub witness: Option<Vec<String>>,
    pub predicate: Option<Verdict>,
}

impl ReportJson {
    pub fn of(report: &IrreducibilityReport) -> Self {
        ReportJson {
            n: report.n,
            t0: report.t0.to_string(),
            algebra_dimension: report.algebra_dimension,
            verdict: report.verdict,
            witness: report
                .witness
                .as_ref()
                .map(|w| w.iter().map(|c| c.to_string()).collect()),
            predicate: report.predicate,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{eta1_prime, eta2_prime, Eta1PrimeParams};
    use crate::words::Mode;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    fn g(s: &str) -> GaussianRational {
        GaussianRational::parse(s).unwrap()
    }

    fn eta1p(n: usize, v: &str) -> Representation<LaurentPoly> {
        eta1_prime(n, &Eta1PrimeParams::new(lp(v)).unwrap()).unwrap()
    }

    #[test]
    fn scalars_only() {
        let mats = vec![Matrix::<GaussianRational>::identity(3)];
        assert_eq!(burnside_dimension(&mats), 1);
    }

    #[test]
    fn eta1_prime_with_trivial_nu_is_reducible() {
        let rep = eta1p(3, "1").specialize(&g("3")).unwrap();
        let mats: Vec<_> = rep.images().map(|(_, m)| m.clone()).collect();
        assert!(burnside_dimension(&mats) < 9);
    }

    #[test]
    fn eta1_prime_generic_is_full() {
        let rep = eta1p(3, "t").specialize(&g("3")).unwrap();
        let mats: Vec<_> = rep.images().map(|(_, m)| m.clone()).collect();
        assert_eq!(burnside_dimension(&mats), 9);
        assert_eq!(burnside_dimension_seq(&mats), 9);
    }

    #[test]
    fn invariant_vector_examples() {
        let rep = eta1p(3, "1").specialize(&g("5")).unwrap();
        let mats: Vec<_> = rep.images().map(|(_, m)| m.clone()).collect();
        let ones = vec![g("1"), g("1"), g("1")];
        assert!(invariant_vector_check(&mats, &ones).unwrap());

        let rep = eta1p(3, "t").specialize(&g("2")).unwrap();
        let mats: Vec<_> = rep.images().map(|(_, m)| m.clone()).collect();
        let e1 = vec![g("1"), g("0"), g("0")];
        assert!(!invariant_vector_check(&mats, &e1).unwrap());
        let zero = vec![g("0"), g("0"), g("0")];
        assert!(invariant_vector_check(&mats, &zero).is_err());
    }

    #[test]
    fn eta1_predicate() {
        assert!(!eta1_irreducible_predicate(&lp("1")));
        assert!(eta1_irreducible_predicate(&lp("-1")));
        assert!(eta1_irreducible_predicate(&lp("t")));
    }

    #[test]
    fn eta2_predicate() {
        // f = v = 1, w = 0, y = 1: all three equalities hold
        let p = Eta2PrimeParams::new(lp("1"), lp("0"), lp("1"), lp("1")).unwrap();
        assert!(!eta2_irreducible_predicate(&p));
        // f ≠ v forces irreducibility
        let p = Eta2PrimeParams::new(lp("t"), lp("5"), lp("1 + t"), lp("1")).unwrap();
        assert!(eta2_irreducible_predicate(&p));
        // f = v = t, w = 1, y = 0
        let p = Eta2PrimeParams::new(lp("t"), lp("1"), lp("0"), lp("t")).unwrap();
        assert!(!eta2_irreducible_predicate(&p));
    }

    #[test]
    fn decide_examples() {
        // v = 1: reducible with the all-ones witness, predicate agrees
        let report = decide(&eta1p(4, "1"), &g("5")).unwrap();
        assert_eq!(report.verdict, Verdict::Reducible);
        assert_eq!(report.predicate, Some(Verdict::Reducible));
        assert_eq!(report.witness, Some(vec![g("1"), g("1"), g("1"), g("1")]));
        assert!(report.algebra_dimension < 16);

        // v = t: irreducible of full dimension
        let report = decide(&eta1p(4, "t"), &g("3")).unwrap();
        assert_eq!(report.verdict, Verdict::Irreducible);
        assert_eq!(report.algebra_dimension, 16);
        assert_eq!(report.predicate, Some(Verdict::Irreducible));
        assert!(report.witness.is_none());

        // forbidden specialization
        assert!(decide(&eta1p(3, "t"), &GaussianRational::zero()).is_err());

        // η₂′ criterion attached
        let p = Eta2PrimeParams::new(lp("t"), lp("1"), lp("t"), lp("t^2")).unwrap();
        let rep = eta2_prime(3, &p, Mode::Monoid).unwrap();
        let report = decide(&rep, &g("2")).unwrap();
        assert_eq!(report.predicate, Some(Verdict::Irreducible));
    }

    #[test]
    fn decided_witnesses_always_verify() {
        for (v, t0) in [("1", "2"), ("1", "3"), ("1", "1/2")] {
            let report = decide(&eta1p(3, v), &g(t0)).unwrap();
            if let Some(w) = &report.witness {
                let rep = eta1p(3, v).specialize(&g(t0)).unwrap();
                let mats: Vec<_> = rep.images().map(|(_, m)| m.clone()).collect();
                assert!(invariant_vector_check(&mats, w).unwrap());
            } else {
                panic!("v = 1 must produce a witness");
            }
        }
    }

    #[test]
    fn dimension_is_conjugation_invariant() {
        let rep = eta1p(3, "t");
        let conj = rep.conjugate_diag(&[lp("t^2"), lp("t"), lp("1")]).unwrap();
        for t0 in ["3", "1/2"] {
            let a = decide(&rep, &g(t0)).unwrap().algebra_dimension;
            let b = decide(&conj, &g(t0)).unwrap().algebra_dimension;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn report_json_shape() {
        let report = decide(&eta1p(4, "t"), &g("3")).unwrap();
        let js = ReportJson::of(&report);
        let text = serde_json::to_string(&js).unwrap();
        assert!(text.contains("\"algebra_dimension\":16"));
        assert!(text.contains("\"verdict\":\"irreducible\""));
        assert!(text.contains("\"t0\":\"3\""));
    }
}
