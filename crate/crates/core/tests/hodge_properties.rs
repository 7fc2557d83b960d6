mod common;

use common::{battery, cyclic, field};
use frobrep::gf::FieldElem;
use frobrep::hodge::{check_twist_equality, hodge_curve};
use frobrep::matfq::MatFq;
use frobrep::rep::RepFq;
use frobrep::Error;

/// Dimensions of the vectors fixed by every generator, acting on columns and
/// on rows, found by enumeration.
fn brute_fixed(rep: &RepFq) -> Option<(usize, usize)> {
    let f = rep.field();
    let q = f.size()? as u64;
    let r = rep.rank();
    let total = q.checked_pow(r as u32).filter(|&t| t <= 1 << 12)?;
    let (mut cols, mut rows) = (0u64, 0u64);
    for idx in 0..total {
        let x: Vec<FieldElem> = (0..r as u32).map(|i| f.from_index(idx / q.pow(i) % q)).collect();
        let col = MatFq::new(f, r, 1, x.clone()).unwrap();
        cols += u64::from(rep.gen_images().iter().all(|m| m.mul(&col) == col));
        rows += u64::from(rep.gen_images().iter().all(|m| m.vec_mul(&x) == x));
    }
    let dim = |n: u64| (0..).find(|&d| q.pow(d) == n).unwrap() as usize;
    Some((dim(cols), dim(rows)))
}

#[test]
fn hodge_numbers_match_fixed_vector_counts() {
    let mut checked = 0;
    for c in battery() {
        let Some((a, b)) = brute_fixed(&c.rep) else { continue };
        let h = hodge_curve(&c.rep, 3).unwrap();
        let mut got = [h.h0, h.h2];
        let mut want = [a, b];
        got.sort();
        want.sort();
        assert_eq!(got, want, "{}", c.label);
        checked += 1;
    }
    assert!(checked > 100, "{checked}");
}

#[test]
fn euler_characteristic_and_realizability() {
    for c in battery() {
        let r = c.rep.rank() as i64;
        for g in 0..=4usize {
            match hodge_curve(&c.rep, g) {
                Ok(h) => {
                    assert_eq!(h.euler(), 2 * r * (1 - g as i64), "{}", c.label);
                    assert_eq!((h.rank, h.genus), (c.rep.rank(), g));
                }
                Err(Error::NotRealizable { h1 }) => {
                    assert_eq!(g, 0, "{}", c.label);
                    assert!(h1 < 0);
                    let h0 = c.rep.invariants_dim() as i64;
                    let h2 = c.rep.dual().invariants_dim() as i64;
                    assert_eq!(h1, h0 + h2 - 2 * r);
                }
                Err(e) => panic!("{}: {e}", c.label),
            }
        }
    }
}

#[test]
fn twists_never_change_hodge_numbers() {
    for c in battery() {
        for g in 1..=3 {
            let report = check_twist_equality(&c.rep, g).unwrap();
            assert!(report.equal, "{}", c.label);
            assert_eq!(report.twists.len(), c.rep.field().degree());
        }
    }
}

#[test]
fn nontrivial_character_on_the_projective_line() {
    let f = field(2, 4);
    let w = f.pow(&f.gen(), 3);
    let rep = RepFq::new(cyclic(5), &f, vec![MatFq::diagonal(&f, &[w])]).unwrap();
    assert_eq!(hodge_curve(&rep, 0).unwrap_err(), Error::NotRealizable { h1: -2 });
    assert_eq!(hodge_curve(&rep, 1).unwrap().triple(), [0, 0, 0]);
}
