//! Intertwiners, isomorphism search and the Frobenius period.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::RepFq;
use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::gf::{build_extension, embedding, Field, FieldElem};
use crate::matfq::MatFq;

const EXHAUSTIVE_LIMIT: u128 = 1 << 16;
const GRID_LIMIT: u128 = 1 << 18;
const SUBSET_LIMIT: usize = 10;

/// Parameters of the randomized part of [`find_isomorphism`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoSearch {
    pub trials: usize,
    pub seed: u64,
}

impl Default for IsoSearch {
    fn default() -> Self {
        IsoSearch {
            trials: 64,
            seed: 0,
        }
    }
}

/// Outcome of a conclusive isomorphism search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isomorphism {
    /// Invertible M with ρ(g) M = M ρ'(g) for every g.
    Found(MatFq),
    NotIsomorphic,
}

/// Canonical basis of {M : ρ(g) M = M ρ'(g) for all generators g}.
///
/// M is r x r'; the basis is the reduced echelon basis of the solution space
/// with M flattened row-major.
pub fn hom_space(a: &RepFq, b: &RepFq) -> Result<Vec<MatFq>> {
    a.check_compatible(b)?;
    let f = a.field();
    let (r, s) = (a.rank(), b.rank());
    let vars = r * s;
    let gens = a.gen_images().len();
    // one column per scalar equation, one row per unknown
    let mut sys = MatFq::zero(f, vars, (gens * vars).max(1));
    for (gi, (ra, rb)) in a.gen_images().iter().zip(b.gen_images()).enumerate() {
        for i in 0..r {
            for j in 0..s {
                let eq = gi * vars + i * s + j;
                for k in 0..r {
                    let v = sys.get(k * s + j, eq).clone();
                    sys.set(k * s + j, eq, f.add(&v, ra.get(i, k)));
                }
                for k in 0..s {
                    let v = sys.get(i * s + k, eq).clone();
                    sys.set(i * s + k, eq, f.sub(&v, rb.get(k, j)));
                }
            }
        }
    }
    sys.kernel_basis()
        .into_iter()
        .map(|v| MatFq::new(f, r, s, v))
        .collect()
}

fn combine(f: &Field, basis: &[MatFq], coeffs: &[FieldElem]) -> MatFq {
    let first = &basis[0];
    basis
        .iter()
        .zip(coeffs)
        .fold(MatFq::zero(f, first.rows(), first.cols()), |acc, (b, c)| {
            acc.add(&b.scale(c))
        })
}

/// Looks for an invertible intertwiner ρ(g) M = M ρ'(g).
///
/// Tries 0/1 combinations of the hom-space basis (sparsest first), seeded
/// random combinations, then either enumerates the whole hom space (when
/// small) or evaluates det(Σ t_i B_i) on a grid S^k with |S| > r. That determinant has degree at
/// most r in each t_i, so vanishing on the grid means it vanishes identically
/// and no invertible intertwiner exists over any extension. Anything else is
/// reported as [`Error::Inconclusive`].
pub fn find_isomorphism(a: &RepFq, b: &RepFq, search: IsoSearch) -> Result<Isomorphism> {
    a.check_compatible(b)?;
    if a.rank() != b.rank() {
        return Ok(Isomorphism::NotIsomorphic);
    }
    let basis = hom_space(a, b)?;
    if basis.is_empty() {
        return Ok(Isomorphism::NotIsomorphic);
    }
    let f = a.field();
    let k = basis.len();
    for mask in subset_order(k) {
        let coeffs: Vec<FieldElem> = (0..k)
            .map(|i| if mask >> i & 1 == 1 { f.one() } else { f.zero() })
            .collect();
        let m = combine(f, &basis, &coeffs);
        if m.invert().is_ok() {
            return Ok(Isomorphism::Found(m));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    for _ in 0..search.trials {
        let coeffs: Vec<FieldElem> = (0..k).map(|_| f.random(&mut rng)).collect();
        let m = combine(f, &basis, &coeffs);
        if m.invert().is_ok() {
            return Ok(Isomorphism::Found(m));
        }
    }
    let size = f.size().unwrap_or(u128::MAX);
    let space = size.checked_pow(k as u32).unwrap_or(u128::MAX);
    if space <= EXHAUSTIVE_LIMIT {
        for idx in 0..space {
            let mut rest = idx;
            let coeffs: Vec<FieldElem> = (0..k)
                .map(|_| {
                    let c = f.from_index((rest % size) as u64);
                    rest /= size;
                    c
                })
                .collect();
            let m = combine(f, &basis, &coeffs);
            if m.invert().is_ok() {
                return Ok(Isomorphism::Found(m));
            }
        }
        return Ok(Isomorphism::NotIsomorphic);
    }
    grid_certificate(f, &basis, a.rank())
}

/// Nonempty subsets of the basis as bit masks, fewest elements first: all of
/// them for k <= SUBSET_LIMIT, otherwise the singletons and the full set.
fn subset_order(k: usize) -> Vec<u64> {
    let full = if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
    if k > SUBSET_LIMIT {
        return (0..k).map(|i| 1u64 << i).chain(std::iter::once(full)).collect();
    }
    let mut masks: Vec<u64> = (1..=full).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    masks
}

fn grid_certificate(f: &Field, basis: &[MatFq], r: usize) -> Result<Isomorphism> {
    let k = basis.len();
    let inconclusive = Error::Inconclusive { hom_dim: k };
    let side = r as u128 + 1;
    match side.checked_pow(k as u32) {
        Some(n) if n <= GRID_LIMIT => {}
        _ => return Err(inconclusive),
    }
    let big_enough = |fld: &Field| fld.size().is_none_or(|s| s >= side);
    let grid_field = if big_enough(f) {
        f.clone()
    } else {
        let mut d = 2;
        loop {
            let l = build_extension(f.p(), f.degree() * d, 0)?;
            if big_enough(&l) {
                break l;
            }
            d += 1;
        }
    };
    let emb = embedding(f, &grid_field)?;
    let lifted: Vec<MatFq> = basis.iter().map(|m| m.embed(&emb)).collect();
    let points: Vec<FieldElem> = (0..side as u64).map(|i| grid_field.from_index(i)).collect();
    let mut digits = vec![0usize; k];
    loop {
        let coeffs: Vec<FieldElem> = digits.iter().map(|&d| points[d].clone()).collect();
        let m = combine(&grid_field, &lifted, &coeffs);
        if !grid_field.is_zero(&m.det()?) {
            if grid_field == *f {
                return Ok(Isomorphism::Found(m));
            }
            return Err(inconclusive);
        }
        let Some(pos) = digits.iter().position(|&d| d + 1 < points.len()) else {
            return Ok(Isomorphism::NotIsomorphic);
        };
        digits[pos] += 1;
        digits[..pos].fill(0);
    }
}

/// Least n >= 1 with F^n∘ρ ≅ ρ.
///
/// F^m∘ρ = ρ over F_{p^m}, and {n : F^n∘ρ ≅ ρ} is closed under addition
/// and negation mod m, so it is the subgroup generated by the period, which
/// therefore divides m. Only divisors of m are tested.
pub fn frobenius_period(rep: &RepFq, search: IsoSearch) -> Result<usize> {
    let m = rep.field().degree();
    for d in divisors(m as u64) {
        let d = d as usize;
        if d == m {
            return Ok(m);
        }
        if let Isomorphism::Found(_) = find_isomorphism(rep, &rep.twist(d), search)? {
            return Ok(d);
        }
    }
    unreachable!("m divides itself")
}
