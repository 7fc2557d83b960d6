//! Exact arithmetic in cyclotomic fields Q(ξ_n).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, euler_phi, gcd, lcm};

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Coefficients (little-endian) of the n-th cyclotomic polynomial,
/// from Φ_n = (x^n - 1) / ∏_{d | n, d < n} Φ_d.
pub fn cyclotomic_poly(n: u64) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    cyclotomic_arc(n).as_ref().clone()
}

fn cyclotomic_arc(n: u64) -> Arc<Vec<i64>> {
    if let Some(c) = phi_cache().lock().unwrap().get(&n) {
        return c.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d < n {
            num = exact_div(&num, &cyclotomic_arc(d));
        }
    }
    let arc = Arc::new(num);
    phi_cache().lock().unwrap().entry(n).or_insert(arc).clone()
}

/// Exact division of integer polynomials by a monic divisor.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// An element of Q(ξ_n) in the power basis 1, ξ, ..., ξ^{φ(n)-1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    n: u64,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}·ξ"),
                _ => format!("{c}·ξ^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0 [Q(ξ_{})]", self.n)
        } else {
            write!(f, "{} [Q(ξ_{})]", terms.join(" + "), self.n)
        }
    }
}

impl Cyclo {
    pub fn zero(n: u64) -> Cyclo {
        Cyclo {
            n,
            coeffs: vec![BigRational::zero(); euler_phi(n) as usize],
        }
    }

    pub fn from_int(n: u64, v: i64) -> Cyclo {
        let mut c = Cyclo::zero(n);
        c.coeffs[0] = BigRational::from_integer(v.into());
        c
    }

    pub fn one(n: u64) -> Cyclo {
        Cyclo::from_int(n, 1)
    }

    /// ξ_n^k (k taken mod n).
    pub fn xi_pow(n: u64, k: i64) -> Cyclo {
        let k = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![BigRational::zero(); k + 1];
        raw[k] = BigRational::one();
        Cyclo::reduce(n, raw)
    }

    /// Element from power-basis coefficients of any length (reduced mod Φ_n).
    pub fn from_coeffs(n: u64, coeffs: Vec<BigRational>) -> Cyclo {
        Cyclo::reduce(n, coeffs)
    }

    fn reduce(n: u64, mut raw: Vec<BigRational>) -> Cyclo {
        let phi = cyclotomic_arc(n);
        let deg = phi.len() - 1;
        for k in (deg..raw.len()).rev() {
            let c = std::mem::take(&mut raw[k]);
            if c.is_zero() {
                continue;
            }
            for (i, &pc) in phi[..deg].iter().enumerate() {
                if pc != 0 {
                    raw[k - deg + i] -= &c * BigRational::from_integer(pc.into());
                }
            }
        }
        raw.resize(deg, BigRational::zero());
        Cyclo { n, coeffs: raw }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The integer value, if this is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().any(|c| !c.is_zero()) || !self.coeffs[0].is_integer() {
            return None;
        }
        Some(self.coeffs[0].to_integer())
    }

    fn same(&self, other: &Cyclo) {
        assert_eq!(self.n, other.n, "cyclotomic conductors differ");
    }

    pub fn add(&self, other: &Cyclo) -> Cyclo {
        self.same(other);
        Cyclo {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Cyclo) -> Cyclo {
        self.same(other);
        Cyclo {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclo) -> Cyclo {
        self.same(other);
        let len = (self.coeffs.len() + other.coeffs.len()).saturating_sub(1);
        let mut raw = vec![BigRational::zero(); len.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Cyclo::reduce(self.n, raw)
    }

    /// Image under the automorphism ξ -> ξ^a (gcd(a, n) = 1).
    pub fn galois(&self, a: i64) -> Cyclo {
        let n = self.n as i64;
        debug_assert_eq!(gcd(a.rem_euclid(n) as u64, self.n), 1);
        self.substitute(self.n, a.rem_euclid(n) as u64)
    }

    /// Σ c_i ξ_n^i evaluated with ξ_n replaced by ξ_target^step.
    fn substitute(&self, target: u64, step: u64) -> Cyclo {
        let mut raw = vec![BigRational::zero(); target as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(i as u64 * step % target) as usize] += c;
            }
        }
        Cyclo::reduce(target, raw)
    }

    /// The same element in Q(ξ_N) for a multiple N of n, via ξ_n = ξ_N^{N/n}.
    pub fn lift_to(&self, big: u64) -> Cyclo {
        assert_eq!(big % self.n, 0, "{} does not divide {big}", self.n);
        self.substitute(big, big / self.n)
    }

    /// Re-expresses the element in Q(ξ_target), if it lies in that subfield.
    pub fn convert(&self, target: u64) -> Option<Cyclo> {
        if target == self.n {
            return Some(self.clone());
        }
        if target.is_multiple_of(self.n) {
            return Some(self.lift_to(target));
        }
        let big = lcm(self.n, target);
        let me = self.lift_to(big);
        let basis: Vec<Vec<BigRational>> = (0..euler_phi(target) as i64)
            .map(|i| Cyclo::xi_pow(target, i).lift_to(big).coeffs)
            .collect();
        let sol = solve_rational(&basis, &me.coeffs)?;
        Some(Cyclo {
            n: target,
            coeffs: sol,
        })
    }
}

/// Solves Σ x_i rows[i] = target over Q; None if inconsistent.
fn solve_rational(rows: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = rows.len();
    let c = target.len();
    // augmented system: one equation per coordinate
    let mut aug: Vec<Vec<BigRational>> = (0..c)
        .map(|j| {
            let mut row: Vec<BigRational> = rows.iter().map(|r| r[j].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..=k {
        let Some(sel) = (r..c).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        if col == k {
            return None;
        }
        aug.swap(r, sel);
        let inv = aug[r][col].recip();
        for v in aug[r].iter_mut() {
            *v *= &inv;
        }
        let pivot = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let mut x = vec![BigRational::zero(); k];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][k].clone();
    }
    Some(x)
}

/// Whether every coefficient has denominator prime to p.
pub(crate) fn is_p_integral(c: &Cyclo, p: u64) -> bool {
    let p = BigInt::from(p);
    c.coeffs
        .iter()
        .all(|q| !(q.denom().abs() % &p).is_zero())
}

/// A square matrix over Q(ξ_n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloMat {
    n: u64,
    size: usize,
    entries: Vec<Cyclo>,
}

impl CycloMat {
    pub fn new(n: u64, rows: Vec<Vec<Cyclo>>) -> Option<CycloMat> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) || rows.iter().flatten().any(|c| c.n != n) {
            return None;
        }
        Some(CycloMat {
            n,
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> CycloMat {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&v| Cyclo::from_int(1, v)).collect())
            .collect();
        CycloMat::new(1, data).expect("square input")
    }

    pub fn identity(n: u64, size: usize) -> CycloMat {
        let entries = (0..size * size)
            .map(|k| Cyclo::from_int(n, i64::from(k / size == k % size)))
            .collect();
        CycloMat { n, size, entries }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclo {
        &self.entries[i * self.size + j]
    }

    pub fn map(&self, n: u64, f: impl Fn(&Cyclo) -> Cyclo) -> CycloMat {
        CycloMat {
            n,
            size: self.size,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &CycloMat) -> CycloMat {
        assert_eq!(self.size, other.size);
        let s = self.size;
        let entries = (0..s * s)
            .map(|k| {
                let (i, j) = (k / s, k % s);
                (0..s).fold(Cyclo::zero(self.n), |acc, t| {
                    acc.add(&self.get(i, t).mul(other.get(t, j)))
                })
            })
            .collect();
        CycloMat {
            n: self.n,
            size: s,
            entries,
        }
    }

    pub fn trace(&self) -> Cyclo {
        (0..self.size).fold(Cyclo::zero(self.n), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn block_diag(&self, other: &CycloMat) -> CycloMat {
        let s = self.size + other.size;
        let entries = (0..s * s)
            .map(|k| {
                let (i, j) = (k / s, k % s);
                match (i < self.size, j < self.size) {
                    (true, true) => self.get(i, j).clone(),
                    (false, false) => other.get(i - self.size, j - self.size).clone(),
                    _ => Cyclo::zero(self.n),
                }
            })
            .collect();
        CycloMat {
            n: self.n,
            size: s,
            entries,
        }
    }

    pub fn kron(&self, other: &CycloMat) -> CycloMat {
        let (a, b) = (self.size, other.size);
        let s = a * b;
        let entries = (0..s * s)
            .map(|k| {
                let (i, j) = (k / s, k % s);
                self.get(i / b, j / b).mul(other.get(i % b, j % b))
            })
            .collect();
        CycloMat {
            n: self.n,
            size: s,
            entries,
        }
    }
}
