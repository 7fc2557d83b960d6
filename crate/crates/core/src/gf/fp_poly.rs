//! Dense polynomials over a prime field F_p, little-endian, trailing zeros trimmed.

use crate::arith::inv_mod;

pub(crate) fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

/// Division with remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (db..r.len()).rev() {
        let c = r[k] * lead_inv % p;
        if c == 0 {
            continue;
        }
        q[k - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            let idx = k - db + j;
            r[idx] = (r[idx] + p - c * bj % p) % p;
        }
    }
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub(crate) fn monic(a: &[u64], p: u64) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let li = inv_mod(l, p);
            a.iter().map(|&c| c * li % p).collect()
        }
    }
}

/// Monic gcd.
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// Inverse of `a` modulo `f`, if gcd(a, f) = 1.
pub(crate) fn inv_mod_poly(a: &[u64], f: &[u64], p: u64) -> Option<Vec<u64>> {
    // Invariant: s * a == x (mod f)
    let mut x0 = f.to_vec();
    let mut x1 = a.to_vec();
    trim(&mut x0);
    trim(&mut x1);
    let mut s0: Vec<u64> = Vec::new();
    let mut s1: Vec<u64> = vec![1];
    while !x1.is_empty() {
        let (q, r) = divrem(&x0, &x1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        x0 = x1;
        x1 = r;
        s0 = s1;
        s1 = s2;
    }
    if x0.len() != 1 {
        return None;
    }
    let c = inv_mod(x0[0], p);
    let mut out: Vec<u64> = s0.iter().map(|&v| v * c % p).collect();
    let (_, r) = divrem(&out, f, p);
    out = r;
    Some(out)
}
