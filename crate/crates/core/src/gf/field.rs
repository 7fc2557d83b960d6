use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use num_bigint::BigUint;
use rand::Rng;

use super::{binary, fp_poly};
use crate::arith::is_prime;
use crate::error::{Error, Result};

/// A finite field F_{p^m} given by a monic irreducible modulus over F_p.
///
/// Prime fields use m = 1 with modulus `x`, so every field shares one code path.
/// For p = 2 elements are stored bit-packed; otherwise one coefficient per limb.
pub struct FieldDesc {
    p: u64,
    m: usize,
    modulus: Vec<u64>,
    neg_tail: Vec<u64>,
    words: usize,
    reducer: Option<binary::Reducer>,
}

/// Shared handle to a [`FieldDesc`].
#[derive(Clone)]
pub struct Field(Arc<FieldDesc>);

/// An element of some [`Field`]; only meaningful together with that field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem(pub(crate) Vec<u64>);

impl Deref for Field {
    type Target = FieldDesc;
    fn deref(&self) -> &FieldDesc {
        &self.0
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.p == other.p && self.modulus == other.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}{:?}", self.p, self.m, self.modulus)
    }
}

impl Field {
    /// Validates `modulus` (little-endian, monic, irreducible) and builds the field.
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::BadField(format!("characteristic {p} too large")));
        }
        if modulus.len() < 2 || modulus.iter().any(|&c| c >= p) || *modulus.last().unwrap() != 1 {
            return Err(Error::BadField(format!(
                "modulus {modulus:?} must be monic of degree >= 1 with coefficients in [0,{p})"
            )));
        }
        if modulus.len() == 2 && modulus[0] != 0 {
            return Err(Error::BadField("prime fields use the modulus x".into()));
        }
        let field = Field::unchecked(p, modulus);
        if field.m > 1 && !field.modulus_is_irreducible() {
            return Err(Error::BadField(format!(
                "modulus {:?} is reducible over F_{p}",
                field.modulus
            )));
        }
        Ok(field)
    }

    /// Builds the quotient ring F_p[x]/(modulus) without checking irreducibility.
    pub(crate) fn unchecked(p: u64, modulus: Vec<u64>) -> Field {
        let m = modulus.len() - 1;
        let neg_tail = modulus[..m].iter().map(|&c| (p - c) % p).collect();
        let words = if p == 2 { m.div_ceil(64) } else { m };
        let reducer = (p == 2).then(|| binary::Reducer::new(binary::pack(&modulus, (m + 1).div_ceil(64)), m));
        Field(Arc::new(FieldDesc {
            p,
            m,
            modulus,
            neg_tail,
            words,
            reducer,
        }))
    }

    pub fn prime_field(p: u64) -> Result<Field> {
        Field::new(p, vec![0, 1])
    }

    /// Rabin's test: x^{p^m} = x and gcd(x^{p^{m/l}} - x, f) = 1 for primes l | m.
    /// A cheap pass first rules out factors of small degree.
    pub(crate) fn modulus_is_irreducible(&self) -> bool {
        let p = self.p;
        let m = self.m;
        if m == 1 {
            return true;
        }
        if self.modulus[0] == 0 {
            return false;
        }
        let x = self.gen();
        let small = (m / 2).min(24);
        let maximal: Vec<usize> = crate::arith::factorize(m as u64)
            .into_iter()
            .map(|(l, _)| m / l as usize)
            .collect();
        let mut acc = self.one();
        let mut cur = x.clone();
        for k in 1..=m {
            cur = self.frob1(&cur);
            let diff = self.sub(&cur, &x);
            if k <= small {
                acc = self.mul(&acc, &diff);
                if k == small {
                    let g = fp_poly::gcd(&self.coeffs(&acc), &self.modulus, p);
                    if g.len() > 1 {
                        return false;
                    }
                }
            }
            if maximal.contains(&k) {
                let g = fp_poly::gcd(&self.coeffs(&diff), &self.modulus, p);
                if g.len() > 1 {
                    return false;
                }
            }
        }
        cur == x
    }
}

impl FieldDesc {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Extension degree over F_p.
    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Field size, if it fits in a u128.
    pub fn size(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.m as u32)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(vec![0; self.words])
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    /// The class of x (zero in a prime field).
    pub fn gen(&self) -> FieldElem {
        if self.m == 1 {
            return self.zero();
        }
        self.from_coeffs(&[0, 1])
    }

    pub fn from_int(&self, v: i64) -> FieldElem {
        let c = v.rem_euclid(self.p as i64) as u64;
        self.from_coeffs(&[c])
    }

    /// Element with the given little-endian coefficients (reduced mod p; at most m of them).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElem {
        assert!(coeffs.len() <= self.m, "too many coefficients for F_p^{}", self.m);
        let c: Vec<u64> = coeffs.iter().map(|&v| v % self.p).collect();
        if self.p == 2 {
            FieldElem(binary::pack(&c, self.words))
        } else {
            let mut v = c;
            v.resize(self.m, 0);
            FieldElem(v)
        }
    }

    /// Little-endian coefficient vector of length m.
    pub fn coeffs(&self, e: &FieldElem) -> Vec<u64> {
        if self.p == 2 {
            binary::unpack(&e.0, self.m)
        } else {
            e.0.clone()
        }
    }

    pub fn is_zero(&self, e: &FieldElem) -> bool {
        e.0.iter().all(|&w| w == 0)
    }

    pub fn is_one(&self, e: &FieldElem) -> bool {
        *e == self.one()
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        if self.p == 2 {
            FieldElem(a.0.iter().zip(&b.0).map(|(x, y)| x ^ y).collect())
        } else {
            let p = self.p;
            FieldElem(a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % p).collect())
        }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        if self.p == 2 {
            a.clone()
        } else {
            let p = self.p;
            FieldElem(a.0.iter().map(|&x| (p - x) % p).collect())
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        if self.p == 2 {
            self.add(a, b)
        } else {
            let p = self.p;
            FieldElem(a.0.iter().zip(&b.0).map(|(x, y)| (x + p - y) % p).collect())
        }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        if self.p == 2 {
            let prod = binary::clmul(&a.0, &b.0);
            return FieldElem(self.reducer.as_ref().unwrap().reduce(prod));
        }
        let p = self.p;
        let m = self.m;
        if m == 1 {
            return FieldElem(vec![a.0[0] * b.0[0] % p]);
        }
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        self.reduce_odd(prod)
    }

    fn reduce_odd(&self, mut prod: Vec<u64>) -> FieldElem {
        let p = self.p;
        let m = self.m;
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &t) in self.neg_tail.iter().enumerate() {
                let idx = k - m + j;
                prod[idx] = (prod[idx] + c * t) % p;
            }
        }
        prod.truncate(m);
        prod.resize(m, 0);
        FieldElem(prod)
    }

    pub fn square(&self, a: &FieldElem) -> FieldElem {
        if self.p == 2 {
            let sq = binary::square(&a.0);
            return FieldElem(self.reducer.as_ref().unwrap().reduce(sq));
        }
        self.mul(a, a)
    }

    pub fn pow(&self, a: &FieldElem, mut exp: u64) -> FieldElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    pub fn pow_big(&self, a: &FieldElem, exp: &BigUint) -> FieldElem {
        let mut acc = self.one();
        for i in (0..exp.bits()).rev() {
            acc = self.square(&acc);
            if exp.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    pub(crate) fn frob1(&self, a: &FieldElem) -> FieldElem {
        if self.p == 2 {
            self.square(a)
        } else if self.m == 1 {
            a.clone()
        } else {
            self.pow(a, self.p)
        }
    }

    /// a^{p^n}.
    pub fn frob(&self, a: &FieldElem, n: usize) -> FieldElem {
        let mut out = a.clone();
        for _ in 0..n % self.m {
            out = self.frob1(&out);
        }
        out
    }

    pub fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        if self.is_zero(a) {
            return None;
        }
        let c = fp_poly::inv_mod_poly(&self.coeffs(a), &self.modulus, self.p)?;
        Some(self.from_coeffs(&c))
    }

    /// Total order on elements: compare the integers sum c_i p^i.
    pub fn cmp_elems(&self, a: &FieldElem, b: &FieldElem) -> Ordering {
        a.0.iter().rev().cmp(b.0.iter().rev())
    }

    /// The integer sum c_i p^i, when it fits.
    pub fn index_of(&self, e: &FieldElem) -> Option<u64> {
        let mut acc: u64 = 0;
        for &c in self.coeffs(e).iter().rev() {
            acc = acc.checked_mul(self.p)?.checked_add(c)?;
        }
        Some(acc)
    }

    pub fn from_index(&self, mut idx: u64) -> FieldElem {
        let mut c = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            c.push(idx % self.p);
            idx /= self.p;
        }
        self.from_coeffs(&c)
    }

    /// All elements in index order. Only for small fields.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let n = self.size().expect("field too large to enumerate") as u64;
        (0..n).map(move |i| self.from_index(i))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        let c: Vec<u64> = (0..self.m).map(|_| rng.gen_range(0..self.p)).collect();
        self.from_coeffs(&c)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        loop {
            let e = self.random(rng);
            if !self.is_zero(&e) {
                return e;
            }
        }
    }

    /// Multiplicative order of a nonzero element, searched up to `bound`.
    pub fn mult_order(&self, a: &FieldElem, bound: u64) -> Option<u64> {
        let one = self.one();
        let mut x = a.clone();
        for k in 1..=bound {
            if x == one {
                return Some(k);
            }
            x = self.mul(&x, a);
        }
        None
    }
}
