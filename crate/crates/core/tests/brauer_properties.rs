mod common;

use common::{battery, cyclic, random_invertible, rng};
use frobrep::arith::{divisors, euler_phi, gcd, is_prime, mult_order};
use frobrep::brauer::{
    brauer_class, check_compat, cyclotomic_poly, galois_twist_cyclo, reduce_mod_p, Compat, Cyclo,
    RepCyclo,
};
use frobrep::gf::FieldElem;
use frobrep::matfq::MatFq;
use frobrep::rep::RepFq;
use frobrep::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn cyclotomic_polynomials_factor_x_n_minus_one() {
    for n in 1..=60u64 {
        let prod = divisors(n)
            .into_iter()
            .map(cyclotomic_poly)
            .fold(vec![1], |acc, f| poly_mul(&acc, &f));
        let mut expect = vec![0; n as usize + 1];
        expect[0] = -1;
        expect[n as usize] = 1;
        assert_eq!(prod, expect, "n={n}");
        assert_eq!(cyclotomic_poly(n).len() as u64 - 1, euler_phi(n));
    }
}

fn cyclo(n: u64, coeffs: &[i64]) -> Cyclo {
    let c = coeffs.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect();
    Cyclo::from_coeffs(n, c)
}

proptest! {
    #[test]
    fn galois_action_is_a_ring_automorphism(
        n in 1u64..=15,
        a in prop::collection::vec(-5i64..=5, 1..16),
        b in prop::collection::vec(-5i64..=5, 1..16),
        k in 1i64..60,
    ) {
        prop_assume!(gcd(k as u64 % n, n) == 1 || n == 1);
        let (x, y) = (cyclo(n, &a), cyclo(n, &b));
        prop_assert_eq!(x.add(&y).galois(k), x.galois(k).add(&y.galois(k)));
        prop_assert_eq!(x.mul(&y).galois(k), x.galois(k).mul(&y.galois(k)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
    }

    #[test]
    fn lifting_and_converting_back(n in 1u64..=12, mult in 1u64..=4, a in prop::collection::vec(-9i64..=9, 1..12)) {
        let x = cyclo(n, &a);
        let big = n * mult;
        let up = x.lift_to(big);
        prop_assert_eq!(up.convert(n), Some(x.clone()));
        prop_assert_eq!(up.mul(&up), x.mul(&x).lift_to(big));
    }
}

#[test]
fn conversion_detects_elements_outside_the_subfield() {
    assert_eq!(Cyclo::xi_pow(12, 1).convert(6), None);
    assert_eq!(Cyclo::xi_pow(12, 2).convert(6), Some(Cyclo::xi_pow(6, 1)));
    // ξ_8 + ξ_8^{-1} = √2 is not in Q(ξ_4) = Q(i).
    let sqrt2 = Cyclo::xi_pow(8, 1).add(&Cyclo::xi_pow(8, 7));
    assert_eq!(sqrt2.mul(&sqrt2).as_integer(), Some(BigInt::from(2)));
    assert_eq!(sqrt2.convert(4), None);
}

/// θ_e as reduce_mod_p sees it: the image of ξ_e under the generator of C_e.
fn theta(e: u64, p: u64) -> (RepFq, FieldElem) {
    let chi = RepCyclo::cyclic_character(cyclic(e as usize), e, 1).unwrap();
    let red = reduce_mod_p(&chi, p).unwrap();
    let t = red.gen_images()[0].get(0, 0).clone();
    (red, t)
}

#[test]
fn brauer_lift_is_multiplicative() {
    for e in 2..=12u64 {
        let primes: Vec<u64> = (2u64..).filter(|&p| is_prime(p) && e % p != 0).take(3).collect();
        for p in primes {
            let (red, t) = theta(e, p);
            let f = red.field().clone();
            assert_eq!(f.degree() as u64, mult_order(p, e));
            let g = cyclic(e as usize);
            let class_of = |i: u64| {
                let m = MatFq::diagonal(&f, &[f.pow(&t, i)]);
                brauer_class(&RepFq::new(g.clone(), &f, vec![m]).unwrap(), p).unwrap()
            };
            let classes: Vec<_> = (0..e).map(class_of).collect();
            let gen = g.generators()[0];
            let at = g.conjugacy_classes().iter().position(|c| c.contains(&gen)).unwrap();
            for i in 0..e {
                assert_eq!(classes[i as usize].values[at], Cyclo::xi_pow(e, i as i64), "e={e} p={p} i={i}");
                for j in 0..e {
                    let prod = classes[i as usize].mul(&classes[j as usize]).unwrap();
                    assert!(prod.same_values(&classes[((i + j) % e) as usize]), "e={e} p={p} {i}+{j}");
                }
            }
        }
    }
}

#[test]
fn brauer_classes_of_the_battery() {
    let mut rng = rng(41);
    let mut checked = 0;
    for c in battery() {
        let rep = &c.rep;
        let p = rep.field().p();
        if (rep.group().order() as u64).is_multiple_of(p) {
            assert!(matches!(brauer_class(rep, p), Err(Error::PDividesGroupOrder { .. })));
            continue;
        }
        let cls = brauer_class(rep, p).unwrap();
        assert_eq!(cls.degree(), rep.rank() as i64, "{}", c.label);
        let pm = random_invertible(rep.field(), rep.rank(), &mut rng);
        let conj = brauer_class(&rep.conjugate(&pm).unwrap(), p).unwrap();
        assert_eq!(cls, conj, "{}", c.label);
        let twisted = brauer_class(&rep.twist(1), p).unwrap();
        let expect: Vec<Cyclo> = cls.values.iter().map(|v| v.galois(p as i64)).collect();
        assert_eq!(twisted.values, expect, "{}", c.label);
        checked += 1;
    }
    assert!(checked >= 50, "{checked}");
}

#[test]
fn compat_example_cases() {
    let chi = RepCyclo::cyclic_character(cyclic(3), 3, 1).unwrap();
    assert_eq!(check_compat(&chi, 2, 5).unwrap(), Compat::Holds);
    assert_eq!(check_compat(&chi, 1, 7).unwrap(), Compat::Holds);
    assert_eq!(
        check_compat(&chi, 2, 7).unwrap_err(),
        Error::CongruenceViolated { p: 7, a: 2, n: 3 }
    );
    assert_eq!(
        galois_twist_cyclo(&chi, 3).unwrap_err(),
        Error::NotCoprime { a: 3, n: 3 }
    );
    assert_eq!(reduce_mod_p(&chi, 3).unwrap_err(), Error::DividesConductor { p: 3, n: 3 });
}

#[test]
fn reduction_lands_in_the_expected_field() {
    for n in [3u64, 4, 5, 7, 8, 9] {
        for p in [2u64, 3, 5, 7, 11, 13].into_iter().filter(|p| n % p != 0) {
            let (red, t) = theta(n, p);
            let f = red.field();
            assert_eq!(f.degree() as u64, mult_order(p, n));
            assert_eq!(f.mult_order(&t, n), Some(n), "n={n} p={p}");
        }
    }
}
