mod common;

use common::field;
use frobrep::gf::{build_extension, embedding, eval_poly, factor_roots, Field, FieldElem};
use proptest::prelude::*;

fn elem(f: &Field, idx: u64) -> FieldElem {
    f.from_index(idx % f.size().unwrap() as u64)
}

const SMALL: [(u64, usize); 8] = [(2, 1), (2, 3), (2, 8), (3, 2), (3, 5), (5, 3), (7, 2), (13, 1)];

proptest! {
    #[test]
    fn frobenius_is_a_ring_automorphism(k in 0..SMALL.len(), a in any::<u64>(), b in any::<u64>(), n in 0usize..10) {
        let (p, m) = SMALL[k];
        let f = field(p, m);
        let (x, y) = (elem(&f, a), elem(&f, b));
        prop_assert_eq!(f.frob(&f.add(&x, &y), n), f.add(&f.frob(&x, n), &f.frob(&y, n)));
        prop_assert_eq!(f.frob(&f.mul(&x, &y), n), f.mul(&f.frob(&x, n), &f.frob(&y, n)));
        prop_assert_eq!(f.frob(&x, 1), f.pow(&x, p));
        prop_assert_eq!(f.frob(&x, m), x);
    }

    #[test]
    fn field_axioms(k in 0..SMALL.len(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (p, m) = SMALL[k];
        let f = field(p, m);
        let (x, y, z) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
        prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
        prop_assert_eq!(f.sub(&f.add(&x, &y), &y), x.clone());
        prop_assert_eq!(f.square(&x), f.mul(&x, &x));
        if let Some(inv) = f.inv(&x) {
            prop_assert!(f.is_one(&f.mul(&x, &inv)));
        } else {
            prop_assert!(f.is_zero(&x));
        }
    }

    #[test]
    fn large_binary_fields(a in any::<[u64; 4]>(), b in any::<[u64; 4]>()) {
        let f = build_extension(2, 200, 0).unwrap();
        let coeffs = |w: [u64; 4]| (0..200).map(|i| (w[i / 64] >> (i % 64)) & 1).collect::<Vec<_>>();
        let (x, y) = (f.from_coeffs(&coeffs(a)), f.from_coeffs(&coeffs(b)));
        prop_assert_eq!(f.frob(&f.mul(&x, &y), 3), f.mul(&f.frob(&x, 3), &f.frob(&y, 3)));
        prop_assert_eq!(f.frob(&x, 200), x);
    }
}

/// Whether the monic polynomial with low coefficients `low` has no factor of
/// degree <= m/2, by trial division over all monic candidates.
fn brute_irreducible(p: u64, low: &[u64]) -> bool {
    let m = low.len();
    let mut poly = low.to_vec();
    poly.push(1);
    for d in 1..=m / 2 {
        for idx in 0..p.pow(d as u32) {
            let mut div: Vec<u64> = (0..d).map(|i| idx / p.pow(i as u32) % p).collect();
            div.push(1);
            let mut rem = poly.clone();
            for k in (d..rem.len()).rev() {
                let c = rem[k];
                for (i, &dc) in div.iter().enumerate() {
                    rem[k - d + i] = (rem[k - d + i] + p * p - c * dc % p) % p;
                }
            }
            if rem[..d].iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[test]
fn irreducibility_agrees_with_trial_division() {
    for (p, m) in [(2u64, 2usize), (2, 3), (2, 4), (2, 6), (2, 8), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)] {
        assert!(p.pow(m as u32) <= 1 << 16);
        let mut irreducible = 0;
        for idx in 0..p.pow(m as u32) {
            let low: Vec<u64> = (0..m).map(|i| idx / p.pow(i as u32) % p).collect();
            let mut modulus = low.clone();
            modulus.push(1);
            let expect = brute_irreducible(p, &low);
            assert_eq!(Field::new(p, modulus).is_ok(), expect, "p={p} {low:?}");
            irreducible += usize::from(expect);
        }
        let necklaces: i64 = frobrep::arith::divisors(m as u64)
            .into_iter()
            .map(|d| mobius(m as u64 / d) * (p as i64).pow(d as u32))
            .sum();
        assert_eq!(irreducible as i64 * m as i64, necklaces, "p={p} m={m}");
    }
}

fn mobius(n: u64) -> i64 {
    let f = frobrep::arith::factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[test]
fn roots_agree_with_exhaustive_evaluation() {
    let mut rng = common::rng(7);
    for (p, m) in [(2u64, 4usize), (2, 6), (3, 3), (5, 2), (2, 12), (3, 7), (7, 4)] {
        let f = field(p, m);
        assert!(f.size().unwrap() <= 4096);
        let all: Vec<FieldElem> = f.elements().collect();
        for deg in 1..=5 {
            let mut poly: Vec<FieldElem> = (0..deg).map(|_| f.random(&mut rng)).collect();
            poly.push(f.random_nonzero(&mut rng));
            let mut expect: Vec<FieldElem> = all
                .iter()
                .filter(|x| f.is_zero(&eval_poly(&f, &poly, x)))
                .cloned()
                .collect();
            expect.sort_by(|a, b| f.cmp_elems(a, b));
            let mut got = factor_roots(&f, &poly).unwrap();
            got.sort_by(|a, b| f.cmp_elems(a, b));
            got.dedup();
            assert_eq!(got, expect, "p={p} m={m} deg={deg}");
        }
    }
}

#[test]
fn embeddings_compose() {
    let mut chains = 0;
    for (p, cmax) in [(2u64, 24usize), (3, 12), (5, 6)] {
        for a in (1..=4).filter(|&a| p.pow(a as u32) <= 16) {
            for c in (a..=cmax).step_by(a) {
                for b in (a..=c).step_by(a).filter(|b| c % b == 0) {
                    let [fa, fb, fc] = [a, b, c].map(|d| field(p, d));
                    let ab = embedding(&fa, &fb).unwrap();
                    let bc = embedding(&fb, &fc).unwrap();
                    let ac = embedding(&fa, &fc).unwrap();
                    for x in fa.elements() {
                        assert_eq!(bc.apply(&ab.apply(&x)), ac.apply(&x), "p={p} {a}|{b}|{c}");
                    }
                    chains += 1;
                }
            }
        }
    }
    assert!(chains > 100);
}

#[test]
fn quadratic_into_quartic_uses_smallest_root() {
    let (f4, f16) = (field(2, 2), field(2, 4));
    let image = embedding(&f4, &f16).unwrap().apply(&f4.gen());
    let poly: Vec<FieldElem> = f4.modulus().iter().map(|&c| f16.from_int(c as i64)).collect();
    let roots = factor_roots(&f16, &poly).unwrap();
    assert_eq!(image, roots[0]);
    assert!(f16.is_zero(&eval_poly(&f16, &poly, &image)));
}

#[test]
fn embeddings_are_injective_homomorphisms() {
    let (small, big) = (field(3, 2), field(3, 6));
    let e = embedding(&small, &big).unwrap();
    let all: Vec<FieldElem> = small.elements().collect();
    let mut images: Vec<FieldElem> = all.iter().map(|x| e.apply(x)).collect();
    for x in &all {
        for y in &all {
            assert_eq!(e.apply(&small.mul(x, y)), big.mul(&e.apply(x), &e.apply(y)));
            assert_eq!(e.apply(&small.add(x, y)), big.add(&e.apply(x), &e.apply(y)));
        }
        assert_eq!(e.preimage(&e.apply(x)).as_ref(), Some(x));
    }
    images.sort_by(|a, b| big.cmp_elems(a, b));
    images.dedup();
    assert_eq!(images.len(), all.len());
    assert!(e.preimage(&big.gen()).is_none());
}
