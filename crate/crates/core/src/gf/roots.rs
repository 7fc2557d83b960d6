//! Root extraction over F_{p^m}: distinct-degree split by x^{p^m} - x, then
//! equal-degree splitting with a fixed-seed random shift.

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Field, FieldElem};
use crate::error::{Error, Result};

const SPLIT_SEED: u64 = 0x005e_ed0f_c0de;

type Poly = Vec<FieldElem>;

fn trim(f: &Field, a: &mut Poly) {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
}

fn monic(f: &Field, a: &Poly) -> Poly {
    let lead = f.inv(a.last().expect("nonzero polynomial")).unwrap();
    a.iter().map(|c| f.mul(c, &lead)).collect()
}

fn rem(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    trim(f, &mut r);
    let db = b.len() - 1;
    let lead_inv = f.inv(&b[db]).unwrap();
    while r.len() > db {
        let k = r.len() - 1;
        let c = f.mul(&r[k], &lead_inv);
        for (j, bj) in b.iter().enumerate() {
            let idx = k - db + j;
            r[idx] = f.sub(&r[idx], &f.mul(&c, bj));
        }
        trim(f, &mut r);
    }
    r
}

fn mulmod(f: &Field, a: &Poly, b: &Poly, m: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    rem(f, &out, m)
}

fn gcd(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(f, &mut x);
    trim(f, &mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        monic(f, &x)
    }
}

fn sub_poly(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
            f.sub(&x, &y)
        })
        .collect();
    trim(f, &mut out);
    out
}

/// h^p mod m
fn frob_poly(f: &Field, h: &Poly, m: &Poly) -> Poly {
    let mut acc: Poly = vec![f.one()];
    let mut base = h.clone();
    let mut e = f.p();
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        e >>= 1;
        if e > 0 {
            base = mulmod(f, &base, &base, m);
        }
    }
    acc
}

fn pow_big(f: &Field, h: &Poly, e: &BigUint, m: &Poly) -> Poly {
    let mut acc: Poly = vec![f.one()];
    for i in (0..e.bits()).rev() {
        acc = mulmod(f, &acc, &acc, m);
        if e.bit(i) {
            acc = mulmod(f, &acc, h, m);
        }
    }
    acc
}

/// Distinct roots of `poly` (little-endian coefficients) in `f`, sorted by the
/// field's element order.
pub fn factor_roots(f: &Field, poly: &[FieldElem]) -> Result<Vec<FieldElem>> {
    let mut a: Poly = poly.to_vec();
    trim(f, &mut a);
    if a.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    if a.len() == 1 {
        return Ok(Vec::new());
    }
    let a = monic(f, &a);
    // x^{p^m} mod a
    let x: Poly = vec![f.zero(), f.one()];
    let mut xq = rem(f, &x, &a);
    for _ in 0..f.degree() {
        xq = frob_poly(f, &xq, &a);
    }
    let g = gcd(f, &a, &sub_poly(f, &xq, &x));
    let mut roots = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    split(f, g, &mut rng, &mut roots);
    roots.sort_by(|u, v| f.cmp_elems(u, v));
    roots.dedup();
    Ok(roots)
}

fn split(f: &Field, g: Poly, rng: &mut ChaCha8Rng, out: &mut Vec<FieldElem>) {
    match g.len() {
        0 | 1 => return,
        2 => {
            out.push(f.neg(&g[0]));
            return;
        }
        _ => {}
    }
    loop {
        let shift = f.random(rng);
        let h = if f.p() == 2 {
            // absolute trace of (shift * x) modulo g
            let base: Poly = rem(f, &vec![f.zero(), shift], &g);
            let mut t = base.clone();
            let mut acc = base;
            for _ in 1..f.degree() {
                t = mulmod(f, &t, &t, &g);
                acc = sub_poly(f, &acc, &t);
            }
            acc
        } else {
            let q = BigUint::from(f.p()).pow(f.degree() as u32);
            let e = (q - 1u32) / 2u32;
            let lin: Poly = vec![shift, f.one()];
            let r = pow_big(f, &rem(f, &lin, &g), &e, &g);
            sub_poly(f, &r, &vec![f.one()])
        };
        let d = gcd(f, &g, &h);
        if d.len() > 1 && d.len() < g.len() {
            let other = quotient(f, &g, &d);
            split(f, d, rng, out);
            split(f, other, rng, out);
            return;
        }
    }
}

fn quotient(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead_inv = f.inv(&b[db]).unwrap();
    let mut q = vec![f.zero(); a.len() - db];
    while r.len() > db {
        let k = r.len() - 1;
        let c = f.mul(&r[k], &lead_inv);
        for (j, bj) in b.iter().enumerate() {
            let idx = k - db + j;
            r[idx] = f.sub(&r[idx], &f.mul(&c, bj));
        }
        q[k - db] = c;
        trim(f, &mut r);
    }
    q
}

/// Evaluates a polynomial (little-endian) at `x` by Horner's rule.
pub fn eval_poly(f: &Field, poly: &[FieldElem], x: &FieldElem) -> FieldElem {
    poly.iter()
        .rev()
        .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}
