//! Representations over cyclotomic fields and their reduction mod p.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::cyclo::{is_p_integral, Cyclo, CycloMat};
use crate::arith::{gcd, inv_mod, is_prime, lcm, mult_order};
use crate::error::{Error, Result};
use crate::gf::{build_extension, factor_roots, Field, FieldElem};
use crate::grp::Group;
use crate::matfq::MatFq;
use crate::rep::{GroupSource, RepFq};

/// A homomorphism G -> GL_r(Q(ξ_n)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepCyclo {
    group: Arc<Group>,
    n: u64,
    rank: usize,
    gen_images: Vec<CycloMat>,
    images: Vec<CycloMat>,
}

impl RepCyclo {
    /// Validates generator images exactly against the Cayley table.
    pub fn new(group: Arc<Group>, n: u64, gen_images: Vec<CycloMat>) -> Result<RepCyclo> {
        let rank = gen_images.first().map_or(1, CycloMat::size);
        RepCyclo::with_rank(group, n, rank, gen_images)
    }

    fn with_rank(group: Arc<Group>, n: u64, rank: usize, gen_images: Vec<CycloMat>) -> Result<RepCyclo> {
        if n == 0 {
            return Err(Error::BadParams("conductor must be positive".into()));
        }
        if gen_images.len() != group.generators().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} generators",
                gen_images.len(),
                group.generators().len()
            )));
        }
        if let Some(m) = gen_images.iter().find(|m| m.size() != rank || m.conductor() != n) {
            return Err(Error::DimensionMismatch(format!(
                "image of size {} over Q(ξ_{}) in a rank-{rank} representation over Q(ξ_{n})",
                m.size(),
                m.conductor()
            )));
        }
        let tree = group.spanning_tree();
        let mut images: Vec<Option<CycloMat>> = vec![None; group.order()];
        images[group.identity()] = Some(CycloMat::identity(n, rank));
        for a in group.bfs_order() {
            if let Some((parent, k)) = tree[a] {
                images[a] = Some(images[parent].as_ref().unwrap().mul(&gen_images[k]));
            }
        }
        let images: Vec<CycloMat> = images.into_iter().map(Option::unwrap).collect();
        for a in 0..group.order() {
            for b in 0..group.order() {
                if images[a].mul(&images[b]) != images[group.mul(a, b)] {
                    return Err(Error::NotHomomorphism { a, b });
                }
            }
        }
        Ok(RepCyclo {
            group,
            n,
            rank,
            gen_images,
            images,
        })
    }

    pub fn trivial(group: Arc<Group>, rank: usize) -> RepCyclo {
        let gens = vec![CycloMat::identity(1, rank); group.generators().len()];
        RepCyclo::with_rank(group, 1, rank, gens).expect("trivial representation")
    }

    /// The 1-dimensional representation of a cyclic group sending the
    /// generator to ξ_n^k.
    pub fn cyclic_character(group: Arc<Group>, n: u64, k: i64) -> Result<RepCyclo> {
        let m = CycloMat::new(n, vec![vec![Cyclo::xi_pow(n, k)]]).unwrap();
        RepCyclo::new(group, n, vec![m])
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gen_images(&self) -> &[CycloMat] {
        &self.gen_images
    }

    pub fn image(&self, g: usize) -> &CycloMat {
        &self.images[g]
    }

    /// The same representation over Q(ξ_N), N a multiple of n.
    pub fn with_conductor(&self, big: u64) -> RepCyclo {
        let map = |ms: &[CycloMat]| ms.iter().map(|m| m.map(big, |c| c.lift_to(big))).collect();
        RepCyclo {
            group: self.group.clone(),
            n: big,
            rank: self.rank,
            gen_images: map(&self.gen_images),
            images: map(&self.images),
        }
    }

    fn common(&self, other: &RepCyclo) -> Result<(RepCyclo, RepCyclo)> {
        if !(Arc::ptr_eq(&self.group, &other.group) || self.group == other.group) {
            return Err(Error::GroupMismatch);
        }
        let n = lcm(self.n, other.n);
        Ok((self.with_conductor(n), other.with_conductor(n)))
    }

    pub fn dsum(&self, other: &RepCyclo) -> Result<RepCyclo> {
        let (a, b) = self.common(other)?;
        let gens = a.gen_images.iter().zip(&b.gen_images).map(|(x, y)| x.block_diag(y)).collect();
        RepCyclo::new(a.group.clone(), a.n, gens)
    }

    pub fn tensor(&self, other: &RepCyclo) -> Result<RepCyclo> {
        let (a, b) = self.common(other)?;
        let gens = a.gen_images.iter().zip(&b.gen_images).map(|(x, y)| x.kron(y)).collect();
        RepCyclo::new(a.group.clone(), a.n, gens)
    }
}

/// Applies ξ -> ξ^a to every entry.
pub fn galois_twist_cyclo(rep: &RepCyclo, a: i64) -> Result<RepCyclo> {
    let n = rep.n;
    if gcd(a.rem_euclid(n as i64) as u64, n) != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    let map = |ms: &[CycloMat]| ms.iter().map(|m| m.map(n, |c| c.galois(a))).collect();
    Ok(RepCyclo {
        group: rep.group.clone(),
        n,
        rank: rep.rank,
        gen_images: map(&rep.gen_images),
        images: map(&rep.images),
    })
}

/// F_{p^d} with d = ord_n(p), and the canonical root of Φ_n in it: the root
/// whose coefficient vector is smallest.
pub(crate) fn canonical_root(n: u64, p: u64) -> Result<(Field, FieldElem)> {
    let d = if n <= 2 { 1 } else { mult_order(p % n, n) as usize };
    let field = build_extension(p, d, 0)?;
    let poly: Vec<FieldElem> = super::cyclotomic_poly(n)
        .iter()
        .map(|&c| field.from_int(c))
        .collect();
    let root = factor_roots(&field, &poly)?
        .into_iter()
        .next()
        .expect("Φ_n splits over F_{p^ord_n(p)}");
    Ok((field, root))
}

fn rational_mod_p(q: &BigRational, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let num = (q.numer() % &pb + &pb) % &pb;
    let den = (q.denom() % &pb + &pb) % &pb;
    let (num, den) = (num.to_u64().unwrap(), den.to_u64().unwrap());
    num * inv_mod(den, p) % p
}

/// Reduces a representation with p-integral entries modulo p, sending ξ_n to
/// the canonical root of Φ_n in F_{p^{ord_n(p)}}.
pub fn reduce_mod_p(rep: &RepCyclo, p: u64) -> Result<RepFq> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = rep.n;
    if n.is_multiple_of(p) {
        return Err(Error::DividesConductor { p, n });
    }
    for (k, m) in rep.gen_images.iter().enumerate() {
        for i in 0..m.size() {
            for j in 0..m.size() {
                if !is_p_integral(m.get(i, j), p) {
                    return Err(Error::NotPIntegral {
                        generator: rep.group.generators()[k],
                        row: i,
                        col: j,
                        p,
                    });
                }
            }
        }
    }
    let (field, theta) = canonical_root(n, p)?;
    let powers: Vec<FieldElem> = std::iter::successors(Some(field.one()), |x| Some(field.mul(x, &theta)))
        .take(Cyclo::zero(n).coeffs().len())
        .collect();
    let reduce = |c: &Cyclo| {
        c.coeffs()
            .iter()
            .zip(&powers)
            .filter(|(q, _)| !q.is_zero())
            .fold(field.zero(), |acc, (q, pw)| {
                let v = field.from_int(rational_mod_p(q, p) as i64);
                field.add(&acc, &field.mul(&v, pw))
            })
    };
    let gens = rep
        .gen_images
        .iter()
        .map(|m| {
            let entries = (0..m.size() * m.size())
                .map(|k| reduce(m.get(k / m.size(), k % m.size())))
                .collect();
            MatFq::new(&field, m.size(), m.size(), entries)
        })
        .collect::<Result<Vec<_>>>()?;
    RepFq::with_rank(rep.group.clone(), &field, rep.rank, gens)
}

/// Cyclotomic representation JSON. Each matrix entry is a list of φ(n)
/// `[numerator, denominator]` pairs in the power basis.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RepCycloJson {
    pub group: GroupSource,
    pub n: u64,
    pub rank: usize,
    pub images: BTreeMap<String, Vec<Vec<Vec<[i64; 2]>>>>,
}

impl RepCycloJson {
    pub fn from_rep(rep: &RepCyclo) -> Result<Self> {
        let g = rep.group();
        let entry = |c: &Cyclo| -> Result<Vec<[i64; 2]>> {
            c.coeffs()
                .iter()
                .map(|q| match (q.numer().to_i64(), q.denom().to_i64()) {
                    (Some(a), Some(b)) => Ok([a, b]),
                    _ => Err(Error::Parse("coefficient exceeds 64 bits".into())),
                })
                .collect()
        };
        let mut images = BTreeMap::new();
        for (&gen, m) in g.generators().iter().zip(rep.gen_images()) {
            let rows = (0..m.size())
                .map(|i| (0..m.size()).map(|j| entry(m.get(i, j))).collect())
                .collect::<Result<Vec<Vec<_>>>>()?;
            images.insert(g.element_name(gen).to_string(), rows);
        }
        Ok(RepCycloJson {
            group: GroupSource::Inline(g.to_json()),
            n: rep.conductor(),
            rank: rep.rank(),
            images,
        })
    }

    pub fn to_rep(&self, base: &Path) -> Result<RepCyclo> {
        let group = Arc::new(self.group.load(base)?);
        let n = self.n;
        if n == 0 {
            return Err(Error::Parse("conductor must be positive".into()));
        }
        let phi = crate::arith::euler_phi(n) as usize;
        if let Some(extra) = self
            .images
            .keys()
            .find(|k| group.index_of(k).is_none_or(|i| !group.generators().contains(&i)))
        {
            return Err(Error::Parse(format!("{extra} is not a generator")));
        }
        let gens = group
            .generators()
            .iter()
            .map(|&g| {
                let name = group.element_name(g);
                let rows = self
                    .images
                    .get(name)
                    .ok_or_else(|| Error::Parse(format!("missing image for generator {name}")))?;
                let data = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|e| {
                                if e.len() != phi || e.iter().any(|q| q[1] == 0) {
                                    return Err(Error::Parse(format!(
                                        "entry of {name} must have {phi} coefficients with nonzero denominators"
                                    )));
                                }
                                let coeffs = e
                                    .iter()
                                    .map(|q| BigRational::new(q[0].into(), q[1].into()))
                                    .collect();
                                Ok(Cyclo::from_coeffs(n, coeffs))
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                let m = CycloMat::new(n, data)
                    .ok_or_else(|| Error::Parse(format!("image of {name} is not square")))?;
                if m.size() != self.rank {
                    return Err(Error::Parse(format!(
                        "image of {name} has size {}, declared rank {}",
                        m.size(),
                        self.rank
                    )));
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Ok(RepCyclo::trivial(group, self.rank).with_conductor(n));
        }
        RepCyclo::new(group, n, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{standard_group, StandardKind};

    fn cyc(n: usize) -> Arc<Group> {
        Arc::new(standard_group(StandardKind::Cyclic(n)).unwrap())
    }

    #[test]
    fn galois_examples() {
        let chi = RepCyclo::cyclic_character(cyc(3), 3, 1).unwrap();
        assert_eq!(galois_twist_cyclo(&chi, 1).unwrap(), chi);
        let tw = galois_twist_cyclo(&chi, 2).unwrap();
        let expect = Cyclo::from_int(3, -1).sub(&Cyclo::xi_pow(3, 1));
        assert_eq!(tw.gen_images()[0].get(0, 0), &expect);
        let c4 = RepCyclo::cyclic_character(cyc(4), 4, 1).unwrap();
        assert_eq!(
            galois_twist_cyclo(&c4, 2).unwrap_err(),
            Error::NotCoprime { a: 2, n: 4 }
        );
    }

    #[test]
    fn reduction_examples() {
        let chi = RepCyclo::cyclic_character(cyc(3), 3, 1).unwrap();
        let r7 = reduce_mod_p(&chi, 7).unwrap();
        assert_eq!(r7.field().degree(), 1);
        assert_eq!(r7.gen_images()[0], MatFq::from_ints(r7.field(), &[&[2]]));
        let r2 = reduce_mod_p(&chi, 2).unwrap();
        let f4 = r2.field().clone();
        assert_eq!(f4.degree(), 2);
        assert_eq!(r2.gen_images()[0], MatFq::diagonal(&f4, &[f4.gen()]));
        assert_eq!(reduce_mod_p(&chi, 3).unwrap_err(), Error::DividesConductor { p: 3, n: 3 });
        let triv = RepCyclo::trivial(cyc(2), 1);
        let t5 = reduce_mod_p(&triv, 5).unwrap();
        assert_eq!(t5, RepFq::trivial(cyc(2), t5.field(), 1));
        // a conjugate of the swap representation by diag(1, 2)
        let s = CycloMat::new(
            1,
            vec![
                vec![Cyclo::from_int(1, 0), Cyclo::from_coeffs(1, vec![BigRational::new(1.into(), 2.into())])],
                vec![Cyclo::from_int(1, 2), Cyclo::from_int(1, 0)],
            ],
        )
        .unwrap();
        let rep = RepCyclo::new(cyc(2), 1, vec![s]).unwrap();
        assert_eq!(
            reduce_mod_p(&rep, 2).unwrap_err(),
            Error::NotPIntegral { generator: 1, row: 0, col: 1, p: 2 }
        );
        assert!(reduce_mod_p(&rep, 3).is_ok());
    }

    #[test]
    fn json_roundtrip() {
        let chi = RepCyclo::cyclic_character(cyc(6), 6, 5).unwrap();
        let j = RepCycloJson::from_rep(&chi).unwrap();
        let text = serde_json::to_string(&j).unwrap();
        let back: RepCycloJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_rep(Path::new(".")).unwrap(), chi);
    }
}
