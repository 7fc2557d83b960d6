//! Finite fields F_{p^m}: construction, Frobenius, embeddings and root finding.

mod binary;
mod field;
pub(crate) mod fp_poly;
mod roots;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use field::{Field, FieldDesc, FieldElem};
pub use roots::{eval_poly, factor_roots};

use crate::arith::{divisors, factorize, gcd, is_prime};
use crate::error::{Error, Result};

type FieldKey = (u64, usize, u64);

fn field_cache() -> &'static Mutex<HashMap<FieldKey, Field>> {
    static CACHE: OnceLock<Mutex<HashMap<FieldKey, Field>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Builds F_{p^m} with a modulus drawn deterministically from `seed`.
///
/// Candidates are random monic polynomials with nonzero constant term, tested
/// for irreducibility until one passes. Results are memoized per (p, m, seed).
pub fn build_extension(p: u64, m: usize, seed: u64) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::BadParams("extension degree must be positive".into()));
    }
    let key = (p, m, seed);
    if let Some(f) = field_cache().lock().unwrap().get(&key) {
        return Ok(f.clone());
    }
    let field = if m == 1 {
        Field::prime_field(p)?
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(
            seed ^ p.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ ((m as u64) << 40),
        );
        loop {
            let mut modulus: Vec<u64> = (0..m).map(|_| rng.gen_range(0..p)).collect();
            if modulus[0] == 0 {
                continue;
            }
            modulus.push(1);
            let cand = Field::unchecked(p, modulus);
            if cand.modulus_is_irreducible() {
                break cand;
            }
        }
    };
    Ok(field_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(field)
        .clone())
}

/// A fixed ring embedding F_{p^a} -> F_{p^b}: the images of 1, x, ..., x^{a-1}.
#[derive(Clone)]
pub struct Embedding {
    pub source: Field,
    pub target: Field,
    powers: Arc<Vec<FieldElem>>,
}

type EmbedKey = (u64, Vec<u64>, Vec<u64>);

fn embed_cache() -> &'static Mutex<HashMap<EmbedKey, Embedding>> {
    static CACHE: OnceLock<Mutex<HashMap<EmbedKey, Embedding>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The canonical embedding, cached per field pair.
///
/// Between seed-0 fields of moderate size, x maps to the root picked by the
/// compatible system of [`lattice`], so that embeddings compose; the image of
/// a maximal subfield is then the smallest root allowed by the subfields
/// fixed before it. Otherwise x maps to the smallest root of the source
/// modulus in the target.
pub fn embedding(source: &Field, target: &Field) -> Result<Embedding> {
    if source.p() != target.p() {
        return Err(Error::DifferentCharacteristic(source.p(), target.p()));
    }
    let (a, b) = (source.degree(), target.degree());
    if b % a != 0 {
        return Err(Error::NoEmbedding { src: a, dst: b });
    }
    let key = (
        source.p(),
        source.modulus().to_vec(),
        target.modulus().to_vec(),
    );
    if let Some(e) = embed_cache().lock().unwrap().get(&key) {
        return Ok(e.clone());
    }
    let powers = if a == 1 {
        vec![target.one()]
    } else {
        let root = if source == target {
            target.gen()
        } else if lattice_sized(target) && is_canonical(source) && is_canonical(target) {
            lattice(source.p(), b)?[&a].clone()
        } else {
            minimal_root(source, target)?
        };
        let mut pw = vec![target.one()];
        for _ in 1..a {
            let next = target.mul(pw.last().unwrap(), &root);
            pw.push(next);
        }
        pw
    };
    let emb = Embedding {
        source: source.clone(),
        target: target.clone(),
        powers: Arc::new(powers),
    };
    Ok(embed_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(emb)
        .clone())
}

/// Targets up to this many bits get lattice-compatible embeddings.
const LATTICE_BITS: f64 = 64.0;

fn lattice_sized(f: &Field) -> bool {
    f.degree() as f64 * (f.p() as f64).log2() <= LATTICE_BITS
}

fn is_canonical(f: &Field) -> bool {
    build_extension(f.p(), f.degree(), 0).is_ok_and(|c| c == *f)
}

/// The smallest root of the source modulus in the target.
fn minimal_root(source: &Field, target: &Field) -> Result<FieldElem> {
    minimal_roots(source, target)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::BadField("source modulus has no root in the target".into()))
}

/// Σ c_i r^i in `target`.
fn eval_coeffs(target: &Field, coeffs: &[u64], r: &FieldElem) -> FieldElem {
    coeffs.iter().rev().fold(target.zero(), |acc, &c| {
        target.add(&target.mul(&acc, r), &target.from_int(c as i64))
    })
}

type Lattice = Arc<HashMap<usize, FieldElem>>;

fn lattice_cache() -> &'static Mutex<HashMap<(u64, usize), Lattice>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, usize), Lattice>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Images in the seed-0 field F_{p^c} of the generators of its seed-0
/// subfields F_{p^b}, 1 < b < c, chosen so that embeddings compose.
///
/// Maximal subfields are fixed in increasing order of degree, each by the
/// smallest root of its modulus that agrees with the ones already fixed on
/// their common subfield. Smaller subfields go through the smallest maximal
/// subfield containing them.
fn lattice(p: u64, c: usize) -> Result<Lattice> {
    if let Some(l) = lattice_cache().lock().unwrap().get(&(p, c)) {
        return Ok(l.clone());
    }
    let target = build_extension(p, c, 0)?;
    let mut maximal: Vec<usize> = factorize(c as u64)
        .iter()
        .map(|&(l, _)| c / l as usize)
        .filter(|&b| b > 1)
        .collect();
    maximal.sort_unstable();
    let mut roots: HashMap<usize, FieldElem> = HashMap::new();
    let mut subs: Vec<(usize, Field, Lattice)> = Vec::new();
    for &b in &maximal {
        let src = build_extension(p, b, 0)?;
        let sub = lattice(p, b)?;
        let image = |src: &Field, sub: &Lattice, r: &FieldElem, g: usize| {
            eval_coeffs(&target, &src.coeffs(&sub[&g]), r)
        };
        let root = minimal_roots(&src, &target)?
            .into_iter()
            .find(|r| {
                subs.iter().all(|(b2, src2, sub2)| {
                    let g = gcd(b as u64, *b2 as u64) as usize;
                    g == 1 || image(&src, &sub, r, g) == image(src2, sub2, &roots[b2], g)
                })
            })
            .ok_or_else(|| Error::BadField(format!("no compatible embedding of degree {b}")))?;
        roots.insert(b, root);
        subs.push((b, src, sub));
    }
    for a in divisors(c as u64).into_iter().map(|a| a as usize) {
        if a == 1 || a == c || roots.contains_key(&a) {
            continue;
        }
        let (b, src, sub) = subs.iter().find(|(b, ..)| b % a == 0).expect("a maximal subfield contains a");
        let r = eval_coeffs(&target, &src.coeffs(&sub[&a]), &roots[b]);
        roots.insert(a, r);
    }
    let l = Arc::new(roots);
    Ok(lattice_cache().lock().unwrap().entry((p, c)).or_insert(l).clone())
}

/// All roots of the source modulus in the target, smallest first.
fn minimal_roots(source: &Field, target: &Field) -> Result<Vec<FieldElem>> {
    let poly: Vec<FieldElem> = source
        .modulus()
        .iter()
        .map(|&c| target.from_int(c as i64))
        .collect();
    factor_roots(target, &poly)
}

impl Embedding {
    pub fn apply(&self, e: &FieldElem) -> FieldElem {
        let t = &self.target;
        self.source
            .coeffs(e)
            .iter()
            .zip(self.powers.iter())
            .filter(|(c, _)| **c != 0)
            .fold(t.zero(), |acc, (&c, pw)| {
                t.add(&acc, &t.mul(&t.from_int(c as i64), pw))
            })
    }

    /// Preimage of `e`, if `e` lies in the image.
    pub fn preimage(&self, e: &FieldElem) -> Option<FieldElem> {
        let p = self.source.p();
        let a = self.source.degree();
        // rows: images of the source basis, as F_p vectors; solve c * rows = e.
        let rows: Vec<Vec<u64>> = self.powers.iter().map(|w| self.target.coeffs(w)).collect();
        let sol = crate::matfq::fp_solve_left(&rows, &self.target.coeffs(e), p)?;
        debug_assert_eq!(sol.len(), a);
        Some(self.source.from_coeffs(&sol))
    }
}

/// Image of `e` (an element of `source`) in `target`.
pub fn embed(e: &FieldElem, source: &Field, target: &Field) -> Result<FieldElem> {
    Ok(embedding(source, target)?.apply(e))
}

/// Field JSON: `{"p": int, "m": int, "modulus": [int,...]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldJson {
    pub p: u64,
    pub m: usize,
    pub modulus: Vec<u64>,
}

impl FieldJson {
    pub fn from_field(f: &Field) -> Self {
        FieldJson {
            p: f.p(),
            m: f.degree(),
            modulus: f.modulus().to_vec(),
        }
    }

    pub fn to_field(&self) -> Result<Field> {
        if self.modulus.len() != self.m + 1 {
            return Err(Error::BadField(format!(
                "modulus length {} != m + 1 = {}",
                self.modulus.len(),
                self.m + 1
            )));
        }
        Field::new(self.p, self.modulus.clone())
    }
}

pub fn elem_to_json(f: &Field, e: &FieldElem) -> Vec<u64> {
    f.coeffs(e)
}

pub fn elem_from_json(f: &Field, v: &[u64]) -> Result<FieldElem> {
    if v.len() != f.degree() || v.iter().any(|&c| c >= f.p()) {
        return Err(Error::Parse(format!(
            "element {v:?} is not a length-{} vector over F_{}",
            f.degree(),
            f.p()
        )));
    }
    Ok(f.from_coeffs(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let f2 = build_extension(2, 1, 0).unwrap();
        assert_eq!(f2.modulus(), &[0, 1]);
        let f4 = build_extension(2, 2, 0).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        assert_eq!(build_extension(4, 1, 0).err(), Some(Error::NotPrime(4)));
    }

    #[test]
    fn frob_of_omega() {
        let f4 = build_extension(2, 2, 0).unwrap();
        let w = f4.gen();
        assert_eq!(f4.frob(&w, 1), f4.add(&w, &f4.one()));
    }

    #[test]
    fn factor_root_examples() {
        let f2 = build_extension(2, 1, 0).unwrap();
        let poly: Vec<_> = [1, 1, 1].iter().map(|&c| f2.from_int(c)).collect();
        assert!(factor_roots(&f2, &poly).unwrap().is_empty());
        let f4 = build_extension(2, 2, 0).unwrap();
        let poly: Vec<_> = [1, 1, 1].iter().map(|&c| f4.from_int(c)).collect();
        let w = f4.gen();
        assert_eq!(
            factor_roots(&f4, &poly).unwrap(),
            vec![w.clone(), f4.add(&w, &f4.one())]
        );
        let f3 = build_extension(3, 1, 0).unwrap();
        let poly = vec![f3.from_int(-1), f3.zero(), f3.one()];
        assert_eq!(
            factor_roots(&f3, &poly).unwrap(),
            vec![f3.from_int(1), f3.from_int(2)]
        );
        assert_eq!(
            factor_roots(&f3, &[f3.zero()]).err(),
            Some(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn embedding_examples() {
        let f2 = build_extension(2, 1, 0).unwrap();
        let f4 = build_extension(2, 2, 0).unwrap();
        let f8 = build_extension(2, 3, 0).unwrap();
        let f16 = build_extension(2, 4, 0).unwrap();
        assert_eq!(embed(&f2.one(), &f2, &f4).unwrap(), f4.one());
        let img = embed(&f4.gen(), &f4, &f16).unwrap();
        let modulus: Vec<_> = [1, 1, 1].iter().map(|&c| f16.from_int(c)).collect();
        assert!(f16.is_zero(&eval_poly(&f16, &modulus, &img)));
        // minimal among the two roots
        let roots = factor_roots(&f16, &modulus).unwrap();
        assert_eq!(img, roots[0]);
        assert_eq!(
            embed(&f4.gen(), &f4, &f8).err(),
            Some(Error::NoEmbedding { src: 2, dst: 3 })
        );
        let f9 = build_extension(3, 2, 0).unwrap();
        assert_eq!(
            embed(&f9.gen(), &f9, &f4).err(),
            Some(Error::DifferentCharacteristic(3, 2))
        );
        let e = embedding(&f4, &f16).unwrap();
        assert_eq!(e.preimage(&img), Some(f4.gen()));
        assert_eq!(e.preimage(&f16.gen()), None);
    }
}
