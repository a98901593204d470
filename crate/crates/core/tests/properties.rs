//! Randomized algebraic property checks with a fixed seed, plus the
//! independent determinant oracle (Laplace expansion) cross-checking the
//! Bareiss/Sarrus implementation.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use vstlab::linalg::{local_embed, Matrix};
use vstlab::ring::{GaussianRational, LaurentPoly, Rational, Ring};
use vstlab::words::{Alphabet, GenKind, Generator, Mode, Word};

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5f5_1ab)
}

fn random_laurent(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let terms = rng.gen_range(0..4);
    LaurentPoly::from_pairs((0..terms).map(|_| {
        (rng.gen_range(-3..=3), rng.gen_range(-4..=4))
    }))
}

fn random_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    let part = |r: &mut ChaCha8Rng| {
        Rational::new(r.gen_range(-6i64..=6).into(), r.gen_range(1i64..=4).into())
    };
    GaussianRational::new(part(rng), part(rng))
}

fn random_nonzero_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let g = random_gaussian(rng);
        if !g.is_zero() {
            return g;
        }
    }
}

#[test]
fn laurent_ring_axioms() {
    let mut rng = rng();
    for _ in 0..1000 {
        let a = random_laurent(&mut rng);
        let b = random_laurent(&mut rng);
        let c = random_laurent(&mut rng);
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&a + &b, &b + &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(&a * &LaurentPoly::one(), a);
    }
}

#[test]
fn gaussian_field_axioms() {
    let mut rng = rng();
    for _ in 0..1000 {
        let a = random_gaussian(&mut rng);
        let b = random_gaussian(&mut rng);
        let c = random_gaussian(&mut rng);
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !a.is_zero() {
            assert_eq!(a.mul(&a.inverse().unwrap()), GaussianRational::one());
        }
    }
}

#[test]
fn unit_inverses_multiply_to_one() {
    let mut rng = rng();
    for _ in 0..200 {
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let u = LaurentPoly::from_pairs([(rng.gen_range(-5..=5), sign)]);
        let inv = u.unit_inverse().expect("±t^k is a unit");
        assert_eq!(&u * &inv, LaurentPoly::one());
    }
}

#[test]
fn evaluation_is_a_ring_homomorphism() {
    let mut rng = rng();
    for _ in 0..300 {
        let a = random_laurent(&mut rng);
        let b = random_laurent(&mut rng);
        let t0 = random_nonzero_gaussian(&mut rng);
        let prod = (&a * &b).eval(&t0).unwrap();
        assert_eq!(prod, a.eval(&t0).unwrap().mul(&b.eval(&t0).unwrap()));
        let sum = (&a + &b).eval(&t0).unwrap();
        assert_eq!(sum, a.eval(&t0).unwrap().add(&b.eval(&t0).unwrap()));
    }
}

#[test]
fn serialization_is_canonical() {
    // serialize ∘ parse ∘ serialize is the identity on canonical strings
    let mut rng = rng();
    for _ in 0..500 {
        let a = random_laurent(&mut rng);
        let s = a.to_string();
        let reparsed = LaurentPoly::parse(&s).unwrap();
        assert_eq!(reparsed, a);
        assert_eq!(reparsed.to_string(), s);

        let g = random_gaussian(&mut rng);
        let s = g.to_string();
        let reparsed = GaussianRational::parse(&s).unwrap();
        assert_eq!(reparsed, g);
        assert_eq!(reparsed.to_string(), s);
    }
}

fn random_block(rng: &mut ChaCha8Rng) -> Matrix<LaurentPoly> {
    Matrix::from_rows(vec![
        vec![random_laurent(rng), random_laurent(rng)],
        vec![random_laurent(rng), random_laurent(rng)],
    ])
    .unwrap()
}

fn random_gaussian_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix<GaussianRational> {
    Matrix::from_rows((0..n).map(|_| (0..n).map(|_| random_gaussian(rng)).collect()).collect())
        .unwrap()
}

/// Independent oracle: determinant by Laplace expansion along the first row.
fn det_laplace<R: Ring>(m: &Matrix<R>) -> R {
    let n = m.size();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = R::zero();
    for j in 0..n {
        if m.get(0, j).is_zero() {
            continue;
        }
        let minor_rows: Vec<Vec<R>> = (1..n)
            .map(|i| (0..n).filter(|&k| k != j).map(|k| m.get(i, k).clone()).collect())
            .collect();
        let minor = Matrix::from_rows(minor_rows).unwrap();
        let term = m.get(0, j).mul(&det_laplace(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

#[test]
fn determinant_matches_the_laplace_oracle() {
    let mut rng = rng();
    for n in 1..=5 {
        for _ in 0..12 {
            let rows: Vec<Vec<LaurentPoly>> = (0..n)
                .map(|_| (0..n).map(|_| random_laurent(&mut rng)).collect())
                .collect();
            let m = Matrix::from_rows(rows).unwrap();
            assert_eq!(m.det(), det_laplace(&m), "n = {n}");
        }
    }
}

#[test]
fn determinant_is_multiplicative() {
    let mut rng = rng();
    for n in 2..=5 {
        for _ in 0..10 {
            let a = random_gaussian_matrix(&mut rng, n);
            let b = random_gaussian_matrix(&mut rng, n);
            assert_eq!(a.mul(&b).unwrap().det(), a.det().mul(&b.det()));
        }
    }
}

#[test]
fn rank_plus_kernel_dimension_is_n() {
    let mut rng = rng();
    for n in 2..=5 {
        for _ in 0..10 {
            // bias towards singular matrices by sometimes duplicating a row
            let mut m = random_gaussian_matrix(&mut rng, n);
            if rng.gen_bool(0.5) {
                let src = rng.gen_range(0..n);
                let dst = rng.gen_range(0..n);
                for j in 0..n {
                    m.set(dst, j, m.get(src, j).clone());
                }
            }
            assert_eq!(m.rank() + m.kernel().len(), n);
        }
    }
}

#[test]
fn distant_local_blocks_commute() {
    // the structural source of all the |i−j| ≥ 2 commuting relations
    let mut rng = rng();
    for _ in 0..40 {
        let n = rng.gen_range(4..=7);
        let i = rng.gen_range(1..n - 2);
        let j = rng.gen_range(i + 2..n);
        let a = local_embed(i, n, &random_block(&mut rng)).unwrap();
        let b = local_embed(j, n, &random_block(&mut rng)).unwrap();
        assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap(), "i = {i}, j = {j}, n = {n}");
    }
}

#[test]
fn local_embedding_is_multiplicative() {
    let mut rng = rng();
    for _ in 0..40 {
        let n = rng.gen_range(2..=6);
        let i = rng.gen_range(1..n);
        let a = random_block(&mut rng);
        let b = random_block(&mut rng);
        let lhs = local_embed(i, n, &a.mul(&b).unwrap()).unwrap();
        let rhs = local_embed(i, n, &a).unwrap().mul(&local_embed(i, n, &b).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Word {
    let kinds = [GenKind::S, GenKind::Tau, GenKind::TauInv, GenKind::Nu];
    let letters: Vec<Generator> = (0..len)
        .map(|_| Generator::new(*kinds.choose(rng).unwrap(), rng.gen_range(1..n)))
        .collect();
    Word::new(n, Mode::Group, Alphabet::Standard, letters).unwrap()
}

#[test]
fn pi_is_a_homomorphism_on_random_words() {
    let mut rng = rng();
    for _ in 0..300 {
        let n = rng.gen_range(2..=6);
        let ulen = rng.gen_range(0..8);
        let vlen = rng.gen_range(0..8);
        let u = random_word(&mut rng, n, ulen);
        let v = random_word(&mut rng, n, vlen);
        let uv = u.concat(&v).unwrap();
        assert_eq!(uv.pi_image(), u.pi_image().compose(&v.pi_image()));
    }
}

#[test]
fn free_reduction_properties() {
    let mut rng = rng();
    for _ in 0..300 {
        let n = rng.gen_range(2..=5);
        let len = rng.gen_range(0..12);
        let w = random_word(&mut rng, n, len);
        let r = w.free_reduce();
        assert!(r.len() <= w.len());
        assert_eq!(r.free_reduce(), r, "idempotent");
        assert_eq!(r.pi_image(), w.pi_image(), "π-preserving");
        // no cancellable adjacent pair survives
        for pair in r.letters().windows(2) {
            assert!(!pair[0].cancels_with(&pair[1]));
        }
    }
}

#[test]
fn word_parse_format_round_trip() {
    let mut rng = rng();
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let len = rng.gen_range(0..10);
        let w = random_word(&mut rng, n, len);
        let text = w.to_string();
        assert_eq!(Word::parse(&text, n, Mode::Group, Alphabet::Standard).unwrap(), w);
    }
}
