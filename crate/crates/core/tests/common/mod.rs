//! Shared fixtures: a battery of small representations over finite fields.

#![allow(dead_code)]

use std::sync::Arc;

use frobrep::gf::{build_extension, Field, FieldElem};
use frobrep::grp::{standard_group, Group, StandardKind};
use frobrep::matfq::MatFq;
use frobrep::rep::RepFq;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct Case {
    pub label: String,
    pub rep: RepFq,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn field(p: u64, m: usize) -> Field {
    build_extension(p, m, 0).unwrap()
}

pub fn group(kind: StandardKind) -> Arc<Group> {
    Arc::new(standard_group(kind).unwrap())
}

pub fn cyclic(n: usize) -> Arc<Group> {
    group(StandardKind::Cyclic(n))
}

pub fn klein() -> Arc<Group> {
    group(StandardKind::ElementaryAbelian(2, 2))
}

pub fn s3() -> Arc<Group> {
    group(StandardKind::Dihedral(3))
}

/// Every ζ in `f` with ζ^n = 1, in index order.
pub fn roots_of_unity(f: &Field, n: u64) -> Vec<FieldElem> {
    f.elements()
        .filter(|z| !f.is_zero(z) && f.is_one(&f.pow(z, n)))
        .collect()
}

pub fn random_matrix<R: Rng>(f: &Field, r: usize, rng: &mut R) -> MatFq {
    let entries = (0..r * r).map(|_| f.random(rng)).collect();
    MatFq::new(f, r, r, entries).unwrap()
}

pub fn random_invertible<R: Rng>(f: &Field, r: usize, rng: &mut R) -> MatFq {
    loop {
        let m = random_matrix(f, r, rng);
        if m.rank() == r {
            return m;
        }
    }
}

/// The k×k Jordan block with eigenvalue 1.
pub fn jordan(f: &Field, k: usize) -> MatFq {
    let mut m = MatFq::identity(f, k);
    for i in 0..k - 1 {
        m.set(i, i + 1, f.one());
    }
    m
}

pub fn mat_order(m: &MatFq) -> usize {
    let id = MatFq::identity(m.field(), m.rows());
    let mut cur = m.clone();
    let mut k = 1;
    while cur != id {
        cur = cur.mul(m);
        k += 1;
    }
    k
}

fn push(out: &mut Vec<Case>, label: String, group: &Arc<Group>, f: &Field, gens: Vec<MatFq>) {
    let rep = RepFq::new(group.clone(), f, gens).unwrap_or_else(|e| panic!("{label}: {e}"));
    out.push(Case { label, rep });
}

fn cyclic_cases(out: &mut Vec<Case>, n: usize, f: &Field) {
    let g = cyclic(n);
    let tag = format!("C{n}/F{}^{}", f.p(), f.degree());
    let zs = roots_of_unity(f, n as u64);
    for (i, z) in zs.iter().enumerate() {
        push(out, format!("{tag} chi{i}"), &g, f, vec![MatFq::diagonal(f, std::slice::from_ref(z))]);
    }
    for i in 0..zs.len() {
        for j in i..zs.len().min(i + 2) {
            let d = MatFq::diagonal(f, &[zs[i].clone(), zs[j].clone()]);
            push(out, format!("{tag} chi{i}+chi{j}"), &g, f, vec![d]);
        }
    }
    if zs.len() >= 3 {
        let d = MatFq::diagonal(f, &zs[..3]);
        push(out, format!("{tag} chi0+chi1+chi2"), &g, f, vec![d]);
    }
    for k in 2..=3 {
        let j = jordan(f, k);
        if !n.is_multiple_of(mat_order(&j)) {
            continue;
        }
        for (i, z) in zs.iter().enumerate().take(2) {
            push(out, format!("{tag} chi{i}*J{k}"), &g, f, vec![j.scale(z)]);
        }
    }
    if n == 6 && f.p() == 3 {
        let m = jordan(f, 2).block_diag(&MatFq::diagonal(f, &[f.from_int(-1)]));
        push(out, format!("{tag} J2+sign"), &g, f, vec![m]);
    }
}

fn klein_cases(out: &mut Vec<Case>, f: &Field) {
    let g = klein();
    let tag = format!("V4/F{}^{}", f.p(), f.degree());
    let signs = roots_of_unity(f, 2);
    for (i, a) in signs.iter().enumerate() {
        for (j, b) in signs.iter().enumerate() {
            let gens = vec![MatFq::diagonal(f, std::slice::from_ref(a)), MatFq::diagonal(f, std::slice::from_ref(b))];
            push(out, format!("{tag} chi{i}{j}"), &g, f, gens);
        }
    }
    if let [p, m] = &signs[..] {
        let a = MatFq::diagonal(f, &[p.clone(), m.clone(), p.clone()]);
        let b = MatFq::diagonal(f, &[m.clone(), m.clone(), p.clone()]);
        push(out, format!("{tag} mixed3"), &g, f, vec![a, b]);
    }
    if f.p() == 2 {
        let j2 = jordan(f, 2);
        let id2 = MatFq::identity(f, 2);
        push(out, format!("{tag} J2,I"), &g, f, vec![j2.clone(), id2]);
        push(out, format!("{tag} J2,J2"), &g, f, vec![j2.clone(), j2]);
        let e = |i: usize, j: usize| {
            let mut m = MatFq::identity(f, 3);
            m.set(i, j, f.one());
            m
        };
        push(out, format!("{tag} E01,E02"), &g, f, vec![e(0, 1), e(0, 2)]);
        push(out, format!("{tag} E02,E12"), &g, f, vec![e(0, 2), e(1, 2)]);
        push(out, format!("{tag} E01E02,E02"), &g, f, vec![e(0, 1).mul(&e(0, 2)), e(0, 2)]);
    }
}

fn perm(f: &Field, images: &[usize]) -> MatFq {
    let n = images.len();
    let mut m = MatFq::zero(f, n, n);
    for (j, &i) in images.iter().enumerate() {
        m.set(i, j, f.one());
    }
    m
}

fn s3_cases(out: &mut Vec<Case>, f: &Field) {
    let g = s3();
    let tag = format!("S3/F{}^{}", f.p(), f.degree());
    let one = MatFq::identity(f, 1);
    push(out, format!("{tag} trivial"), &g, f, vec![one.clone(), one.clone()]);
    let sign = MatFq::diagonal(f, &[f.from_int(-1)]);
    if f.p() != 2 {
        push(out, format!("{tag} sign"), &g, f, vec![one, sign]);
    }
    let rot = MatFq::from_ints(f, &[&[0, -1], &[1, -1]]);
    let swap = MatFq::from_ints(f, &[&[0, 1], &[1, 0]]);
    push(out, format!("{tag} standard"), &g, f, vec![rot, swap.clone()]);
    push(out, format!("{tag} perm3"), &g, f, vec![perm(f, &[1, 2, 0]), perm(f, &[0, 2, 1])]);
    let w = roots_of_unity(f, 3);
    if w.len() == 3 {
        let d = MatFq::diagonal(f, &[w[1].clone(), w[2].clone()]);
        push(out, format!("{tag} diag(w,w^2)"), &g, f, vec![d, swap]);
    }
}

/// Representations of C2, C3, C4, C6, V4 and S3 of rank at most 3 over
/// F_2, F_4, F_3 and F_9, together with seeded random conjugates of the
/// prime-field ones over the quadratic extension.
pub fn battery() -> Vec<Case> {
    let mut out = Vec::new();
    for p in [2u64, 3] {
        for m in [1usize, 2] {
            let f = field(p, m);
            for n in [2, 3, 4, 6] {
                cyclic_cases(&mut out, n, &f);
            }
            klein_cases(&mut out, &f);
            s3_cases(&mut out, &f);
        }
    }
    let mut rng = rng(0xba77e7);
    let conjugates: Vec<Case> = out
        .iter()
        .filter(|c| c.rep.field().degree() == 1 && c.rep.rank() >= 2)
        .map(|c| {
            let f = field(c.rep.field().p(), 2);
            let big = c.rep.extend_scalars(&f).unwrap();
            let p = random_invertible(&f, big.rank(), &mut rng);
            Case {
                label: format!("{} ^P/F{}^2", c.label, f.p()),
                rep: big.conjugate(&p).unwrap(),
            }
        })
        .collect();
    out.extend(conjugates);
    out
}
