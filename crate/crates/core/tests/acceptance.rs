//! Acceptance gate: one test per shipping criterion, each printing a single
//! `criterion N (...): PASS` line on success.
//!
//! Every comparison here is exact — big-rational or Laurent-polynomial
//! equality, never floating point. Randomized criteria draw from
//! `ChaCha8Rng` streams keyed by the fixed seed 42 plus a per-criterion
//! label, so reruns are deterministic and any failure is replayable from
//! the witness alone. Where a criterion needs an oracle, the oracle is
//! implemented locally in this file (e.g. cofactor expansion) so that it
//! shares no code with the kernel under test.

use num::BigInt;
use num::traits::Zero;
use rand::Rng;

use asmlab::asm::{count_asms, count_closed_form, enumerate_asms, for_each_asm};
use asmlab::decomp::{conjecture_check, factorization_check, kuperberg_b};
use asmlab::ice::{asm_to_ice, brute_zn, ice_to_asm, ik_zn, ik_zn_uv, SpectralParams};
use asmlab::identities::{
    aigner_check, cor_jrl_check, corollary12_check, delta_sigma_check, enum_identity_check,
    matrix_aigner_at_i, matrix_behrend_t, matrix_c, matrix_j, proof_chain_check, symmetry_check,
    theorem1_check, EnumVariant,
};
use asmlab::report::CheckError;
use asmlab::ring::{rat, MPoly, QuadExt, Rat, SqMatrix, Zeta4};
use asmlab::sample::{draw_nonzero_rat, draw_rat, rng_for};
use asmlab::symfunc::{fq_direct, fq_factored, zn_via_lascoux};

const SEED: u64 = 42;

/// Criterion 1: exhaustive enumeration counts match the closed-form product
/// at orders 1..=7.
#[test]
fn criterion_01_counting() {
    let known: [u64; 7] = [1, 2, 7, 42, 429, 7436, 218348];
    for n in 1..=7usize {
        let walked = count_asms(n);
        assert_eq!(walked, known[n - 1], "walk count at order {n}");
        assert_eq!(BigInt::from(walked), count_closed_form(n), "closed form at order {n}");
        assert_eq!(enumerate_asms(n).len() as u64, walked, "materialized list at order {n}");
    }
    println!("criterion 1 (exhaustive counts match the closed form, orders 1-7): PASS");
}

/// Criterion 2: the doubly refined generating function equals its cleared
/// determinant form as a Laurent-polynomial identity, orders 2..=5.
#[test]
fn criterion_02_doubly_refined_determinant() {
    for n in 2..=5usize {
        let report = theorem1_check(n).expect("orders 2..=5 are supported");
        assert!(report.pass, "order {n}: {:?}", report.witness);
    }
    println!("criterion 2 (doubly refined determinant identity, orders 2-5): PASS");
}

/// Criterion 3: the base -1 specialization's determinant hits
/// `4^{n(n-1)/2} n!` at orders 1..=8.
#[test]
fn criterion_03_factorial_determinant() {
    for n in 1..=8usize {
        let report = corollary12_check(n);
        assert!(report.pass, "order {n}: {:?}", report.witness);
    }
    println!("criterion 3 (factorial determinant evaluation, orders 1-8): PASS");
}

/// Criterion 4: the brute-force weighted sum over configurations equals the
/// determinant form of the partition function — in both parameterizations —
/// at 20 seeded generic rational points per order, orders 1..=4.
#[test]
fn criterion_04_partition_function() {
    for n in 1..=4usize {
        for iter in 0..20u64 {
            let mut rng = rng_for(SEED, "acceptance-ik", n as u64, iter);
            let params = SpectralParams::draw_generic(n, &mut rng);
            let brute = brute_zn(&params);
            let det = ik_zn(&params).expect("draw is generic by construction");
            let det_uv = ik_zn_uv(&params).expect("draw is generic by construction");
            assert_eq!(brute, det, "bracket form at order {n}, sample {iter}");
            assert_eq!(brute, det_uv, "difference form at order {n}, sample {iter}");
        }
    }
    println!("criterion 4 (partition function vs determinant, orders 1-4, 20 samples each): PASS");
}

/// Criterion 5: the direct kernel determinant equals its factored
/// triangular form at 20 seeded points per order (orders 1..=4), and the
/// factorization route to the partition function agrees with the
/// determinant route at orders 2..=3.
#[test]
fn criterion_05_factored_kernel() {
    for n in 1..=4usize {
        let mut done = 0u64;
        let mut iter = 0u64;
        while done < 20 {
            let mut rng = rng_for(SEED, "acceptance-fq", n as u64, iter);
            iter += 1;
            let v: Vec<Rat> = (0..n).map(|_| draw_nonzero_rat(&mut rng)).collect();
            let u: Vec<Rat> = (0..n).map(|_| draw_nonzero_rat(&mut rng)).collect();
            let q = draw_nonzero_rat(&mut rng);
            // A draw with coincident points (or q in {0, 1}) leaves one side
            // undefined; redraw rather than compare.
            let (direct, factored) = match (fq_direct(&v, &u, &q), fq_factored(&v, &u, &q)) {
                (Ok(d), Ok(f)) => (d, f),
                _ => continue,
            };
            assert_eq!(direct, factored, "order {n}, sample {done} (draw {})", iter - 1);
            done += 1;
        }
    }
    for n in 2..=3usize {
        for iter in 0..10u64 {
            let mut rng = rng_for(SEED, "acceptance-lascoux", n as u64, iter);
            let params = SpectralParams::draw_generic(n, &mut rng);
            let via_kernel = zn_via_lascoux(&params).expect("draw is generic by construction");
            let via_det = ik_zn(&params).expect("draw is generic by construction");
            assert_eq!(via_kernel, via_det, "order {n}, sample {iter}");
        }
    }
    println!("criterion 5 (factored kernel and its partition-function route): PASS");
}

/// Criterion 6: the full derivation chain — weighted sum, endpoint-weight
/// determinant, row-operated variants, and the specialized generating
/// function — agrees link by link at seeded generic points, orders 2..=3.
#[test]
fn criterion_06_derivation_chain() {
    for n in 2..=3usize {
        let mut done = 0u64;
        let mut iter = 0u64;
        while done < 5 {
            let mut rng = rng_for(SEED, "acceptance-chain", n as u64, iter);
            iter += 1;
            let r = draw_nonzero_rat(&mut rng);
            let s = draw_nonzero_rat(&mut rng);
            let t = draw_nonzero_rat(&mut rng);
            match proof_chain_check(n, &r, &s, &t) {
                Ok(report) => {
                    assert!(report.pass, "order {n}, sample {done}: {:?}", report.witness);
                    done += 1;
                }
                // Excluded parameter locus (roots of unity, coincident
                // weights): redraw.
                Err(CheckError::DegenerateParams(_)) => continue,
                Err(e) => panic!("order {n}: unexpected rejection: {e}"),
            }
        }
    }
    println!("criterion 6 (derivation chain at seeded points, orders 2-3): PASS");
}

/// Criterion 7: the inversion/reduction determinant chain holds and the
/// normalized determinant is palindromic at orders 1..=5, with the two
/// smallest expansions reproduced byte for byte.
#[test]
fn criterion_07_determinant_chain() {
    for n in 1..=5usize {
        let chain = cor_jrl_check(n);
        assert!(chain.pass, "chain at order {n}: {:?}", chain.witness);
        let pal = symmetry_check(n);
        assert!(pal.pass, "palindromy at order {n}: {:?}", pal.witness);
    }
    let g1 = matrix_j(1).det().shift_p(-3);
    assert_eq!(g1.to_string(), "-p^-3 + p^-1 + p - p^3");
    let g2 = matrix_j(2).det().shift_p(-4);
    assert_eq!(
        g2.to_string(),
        "-2*p^-8 + 8*p^-6 - 8*p^-4 - 8*p^-2 + 20 - 8*p^2 - 8*p^4 + 8*p^6 - 2*p^8"
    );
    println!("criterion 7 (determinant chain and palindromy, orders 1-5): PASS");
}

/// Criterion 8: the three root-of-unity determinant evaluations match their
/// closed forms — the period-6 table at orders 1..=7, the Gaussian-integer
/// matrix at orders 1..=8, the period-3 table at orders 1..=7.
#[test]
fn criterion_08_root_of_unity_determinants() {
    for n in 1..=7usize {
        let report = enum_identity_check(EnumVariant::One, n);
        assert!(report.pass, "period-6 variant at order {n}: {:?}", report.witness);
    }
    for n in 1..=8usize {
        let report = enum_identity_check(EnumVariant::Two, n);
        assert!(report.pass, "Gaussian variant at order {n}: {:?}", report.witness);
    }
    for n in 1..=7usize {
        let report = enum_identity_check(EnumVariant::Three, n);
        assert!(report.pass, "period-3 variant at order {n}: {:?}", report.witness);
    }
    println!("criterion 8 (root-of-unity determinant evaluations): PASS");
}

fn gauss(a: i64, b: i64) -> QuadExt<Zeta4> {
    QuadExt::new(rat(a, 1), rat(b, 1))
}

/// Criterion 9: the three comparison matrices share the determinant
/// `2^{n(n-1)/2}` at orders 1..=6, the order-4 instances match their
/// published entries exactly, and the alternating-factor matrix reproduces
/// the weighted generating function symbolically at orders 2..=5.
#[test]
fn criterion_09_comparison_matrices() {
    for n in 1..=6usize {
        let report = aigner_check(n);
        assert!(report.pass, "order {n}: {:?}", report.witness);
    }

    // Order-4 instances, frozen entry by entry.
    let ma = matrix_aigner_at_i(4);
    let ma_expected = [
        [gauss(1, 0), gauss(1, -1), gauss(0, -1), gauss(0, 0)],
        [gauss(0, 0), gauss(2, 0), gauss(3, -3), gauss(0, -4)],
        [gauss(0, -1), gauss(0, 0), gauss(6, 0), gauss(10, -10)],
        [gauss(1, -1), gauss(0, -4), gauss(0, 0), gauss(20, 0)],
    ];
    for i in 1..=4usize {
        for j in 1..=4usize {
            assert_eq!(ma.entry(i, j), &ma_expected[i - 1][j - 1], "geometric factor ({i},{j})");
        }
    }
    assert_eq!(ma.det(), QuadExt::from_int(64));

    let mb = matrix_behrend_t(4);
    let mb_expected: [[i64; 4]; 4] =
        [[1, 1, 1, 1], [0, 2, 3, 4], [2, 4, 9, 14], [4, 12, 24, 44]];
    for i in 1..=4usize {
        for j in 1..=4usize {
            assert_eq!(
                mb.entry(i, j),
                &BigInt::from(mb_expected[i - 1][j - 1]),
                "recursive triangle ({i},{j})"
            );
        }
    }
    assert_eq!(mb.det(), BigInt::from(64));

    let mc = matrix_c(4);
    let mc_expected = [
        [rat(0, 1), rat(2, 1), rat(0, 1), rat(-1, 2)],
        [rat(-8, 1), rat(4, 1), rat(2, 1), rat(-2, 1)],
        [rat(-4, 1), rat(0, 1), rat(5, 1), rat(-5, 2)],
        [rat(0, 1), rat(-2, 1), rat(4, 1), rat(-1, 2)],
    ];
    for i in 1..=4usize {
        for j in 1..=4usize {
            assert_eq!(mc.entry(i, j), &mc_expected[i - 1][j - 1], "rescaled real ({i},{j})");
        }
    }
    assert_eq!(mc.det(), rat(64, 1));

    println!("criterion 9 (comparison matrices, orders 1-6, order-4 entries frozen): PASS");
}

/// Build a polynomial in `(z, rho)` from `(coefficient, z power, rho power)`
/// triples.
fn zr_poly(terms: &[(i64, i32, i32)]) -> MPoly {
    let full: Vec<(i64, i32, i32, i32, i32)> =
        terms.iter().map(|&(c, ze, re)| (c, 0, ze, re, 0)).collect();
    MPoly::from_int_terms(&full)
}

/// Criterion 10: the two-factor decomposition of the plain generating
/// function holds at orders 2..=7, and the refined decomposition holds
/// there too, reproducing the published refined factors at indices 4 and 6.
#[test]
fn criterion_10_decomposition() {
    let table = kuperberg_b(7).expect("factor table through index 8");
    for n in 2..=7usize {
        let factor = factorization_check(&table, n);
        assert!(factor.pass, "plain factorization at order {n}: {:?}", factor.witness);
        let outcome = conjecture_check(&table, n);
        assert!(outcome.report.pass, "refined split at order {n}: {:?}", outcome.report.witness);
    }

    let b4 = conjecture_check(&table, 3).b_poly.expect("order 3 division succeeds");
    assert_eq!(b4, zr_poly(&[(2, 0, 0), (2, 0, 1), (1, 1, 1), (2, 0, 2)]));

    let b6 = conjecture_check(&table, 5).b_poly.expect("order 5 division succeeds");
    let b6_expected = zr_poly(&[
        (12, 0, 0),
        (2, 1, 0),
        (12, 0, 1),
        (20, 1, 1),
        (12, 0, 2),
        (3, 2, 1),
        (26, 1, 2),
        (12, 0, 3),
        (6, 2, 2),
        (20, 1, 3),
        (12, 0, 4),
        (1, 3, 2),
        (3, 2, 3),
        (2, 1, 4),
    ]);
    assert_eq!(b6, b6_expected);

    println!("criterion 10 (two-factor and refined decompositions, orders 2-7): PASS");
}

/// Cofactor (Laplace) expansion along the first row — an independent oracle
/// for the fraction-free determinant kernel, deliberately sharing no code
/// with it.
fn det_cofactor<T>(m: &[Vec<T>]) -> T
where
    T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Sub<Output = T>,
{
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = T::zero();
    for j in 0..n {
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| {
                row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect()
            })
            .collect();
        let term = m[0][j].clone() * det_cofactor(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// A random sparse Laurent polynomial in all four variables.
fn draw_poly(rng: &mut impl Rng) -> MPoly {
    let mut acc = MPoly::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let coeff = draw_rat(rng);
        let term = MPoly::constant(coeff)
            .mul(&MPoly::p_pow(rng.gen_range(-3..=3)))
            .mul(&MPoly::z_var().pow(rng.gen_range(0..=2)))
            .mul(&MPoly::rho_var().pow(rng.gen_range(0..=2)))
            .mul(&MPoly::tau_var().pow(rng.gen_range(0..=2)));
        acc = acc.add(&term);
    }
    acc
}

/// Criterion 11: seeded property suites — ring axioms on random Laurent
/// polynomials, the fraction-free determinant against an independent
/// cofactor oracle over both integers and rationals, the configuration
/// bijection round trip with its local statistics, and the periodic sign
/// tables against direct root-of-unity evaluation.
#[test]
fn criterion_11_property_suites() {
    // Ring axioms on random sparse Laurent polynomials.
    for iter in 0..40u64 {
        let mut rng = rng_for(SEED, "acceptance-ring", 0, iter);
        let a = draw_poly(&mut rng);
        let b = draw_poly(&mut rng);
        let c = draw_poly(&mut rng);
        assert_eq!(a.add(&b), b.add(&a), "commutative addition, draw {iter}");
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)), "associative addition, draw {iter}");
        assert_eq!(a.mul(&b), b.mul(&a), "commutative product, draw {iter}");
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)), "associative product, draw {iter}");
        assert_eq!(
            a.mul(&b.add(&c)),
            a.mul(&b).add(&a.mul(&c)),
            "distributive law, draw {iter}"
        );
        assert_eq!(a.add(&MPoly::zero()), a, "additive identity, draw {iter}");
        assert_eq!(a.mul(&MPoly::one()), a, "multiplicative identity, draw {iter}");
        assert!(a.sub(&a).is_zero(), "additive inverse, draw {iter}");
    }

    // Fraction-free determinant vs cofactor expansion, integer entries.
    for iter in 0..30u64 {
        let mut rng = rng_for(SEED, "acceptance-det-int", 0, iter);
        let n = rng.gen_range(1..=4usize);
        let entries: Vec<Vec<BigInt>> = (0..n)
            .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-9..=9i64))).collect())
            .collect();
        let kernel = SqMatrix::from_fn(n, |i, j| entries[i - 1][j - 1].clone()).det();
        assert_eq!(kernel, det_cofactor(&entries), "integer determinant, draw {iter}");
    }

    // Fraction-free determinant vs cofactor expansion, rational entries.
    for iter in 0..30u64 {
        let mut rng = rng_for(SEED, "acceptance-det-rat", 0, iter);
        let n = rng.gen_range(1..=4usize);
        let entries: Vec<Vec<Rat>> =
            (0..n).map(|_| (0..n).map(|_| draw_rat(&mut rng)).collect()).collect();
        let kernel = SqMatrix::from_fn(n, |i, j| entries[i - 1][j - 1].clone()).det();
        assert_eq!(kernel, det_cofactor(&entries), "rational determinant, draw {iter}");
    }

    // Configuration bijection: exact round trip and local statistics, all
    // matrices through order 4.
    for n in 1..=4usize {
        for_each_asm(n, |a| {
            let ice = asm_to_ice(a);
            let back = ice_to_asm(&ice).expect("image of the bijection is valid");
            assert_eq!(&back, a, "round trip at order {n}");
            let counts = ice.counts();
            let mu = a.stats().mu as usize;
            assert_eq!(counts.n2, mu, "negative entries at order {n}");
            assert_eq!(counts.n1, n + mu, "positive entries plus order at order {n}");
            let total = counts.n1 + counts.n2 + counts.n3 + counts.n4 + counts.n5 + counts.n6;
            assert_eq!(total, n * n, "vertex total at order {n}");
            assert_eq!(
                counts.n3 + counts.n4 + counts.n5 + counts.n6,
                n * n - n - 2 * mu,
                "neutral vertices at order {n}"
            );
        });
    }

    // Periodic sign tables against root-of-unity evaluation.
    let tables = delta_sigma_check(12);
    assert!(tables.pass, "sign tables: {:?}", tables.witness);

    println!("criterion 11 (property suites): PASS");
}
