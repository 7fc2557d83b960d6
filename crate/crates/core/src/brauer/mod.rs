//! Cyclotomic representations, reduction mod p, Brauer characters and the
//! decomposition map.

mod cyclo;
mod rep_cyclo;

use std::sync::Arc;

use serde_json::{json, Value};

use crate::arith::{gcd, is_prime, lcm};
use crate::error::{Error, Result};
use crate::gf::{build_extension, embedding};
use crate::grp::Group;
use crate::matfq::MatFq;
use crate::rep::RepFq;

pub use cyclo::{cyclotomic_poly, Cyclo, CycloMat};
pub use rep_cyclo::{galois_twist_cyclo, reduce_mod_p, RepCyclo, RepCycloJson};

/// A Grothendieck-group class, recorded by its (ordinary or Brauer)
/// character on the conjugacy classes of G, in increasing order of their
/// smallest element. Values lie in Q(ξ_e), e the exponent of G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GClass {
    pub group: Arc<Group>,
    /// `(p, d)` for a class over F_{p^d}; `None` in characteristic zero.
    pub modulus: Option<(u64, usize)>,
    pub values: Vec<Cyclo>,
}

impl GClass {
    fn zip_with(&self, other: &GClass, f: impl Fn(&Cyclo, &Cyclo) -> Cyclo) -> Result<GClass> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(GClass {
            group: self.group.clone(),
            modulus: self.modulus,
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &GClass) -> Result<GClass> {
        self.zip_with(other, Cyclo::add)
    }

    pub fn mul(&self, other: &GClass) -> Result<GClass> {
        self.zip_with(other, Cyclo::mul)
    }

    /// Whether the two classes have equal character vectors.
    pub fn same_values(&self, other: &GClass) -> bool {
        self.values == other.values
    }

    /// Value at the identity class.
    pub fn degree(&self) -> i64 {
        use num_traits::ToPrimitive;
        self.values[0]
            .as_integer()
            .and_then(|v| v.to_i64())
            .expect("character degree is an integer")
    }

    /// `{"modulus": [p, d] | null, "classes": [[names...]...], "values": [[[num, den]...]...]}`.
    pub fn to_json(&self) -> Value {
        let classes: Vec<Vec<&str>> = self
            .group
            .conjugacy_classes()
            .iter()
            .map(|c| c.iter().map(|&g| self.group.element_name(g)).collect())
            .collect();
        let values: Vec<Vec<[String; 2]>> = self
            .values
            .iter()
            .map(|v| {
                v.coeffs()
                    .iter()
                    .map(|q| [q.numer().to_string(), q.denom().to_string()])
                    .collect()
            })
            .collect();
        json!({
            "modulus": self.modulus,
            "conductor": self.values.first().map(Cyclo::conductor),
            "classes": classes,
            "values": values,
        })
    }
}

fn class_representatives(g: &Group) -> Vec<usize> {
    g.conjugacy_classes().iter().map(|c| c[0]).collect()
}

/// Ordinary character of a characteristic-zero representation.
pub fn ordinary_class(rep: &RepCyclo) -> GClass {
    let g = rep.group();
    let e = g.exponent() as u64;
    let values = class_representatives(g)
        .into_iter()
        .map(|c| {
            rep.image(c)
                .trace()
                .convert(e)
                .expect("character values lie in Q(ξ_e)")
        })
        .collect();
    GClass {
        group: g.clone(),
        modulus: None,
        values,
    }
}

/// Brauer character of a representation over F_{p^m} with p ∤ |G|.
///
/// Each ρ(g) is semisimple with eigenvalues in μ_e. Multiplicities are read
/// off as dim ker(ρ(g) - ζ^k) over a field containing μ_e, where ζ is the
/// canonical root of Φ_e; ζ^k lifts to ξ_e^k.
pub fn brauer_class(rep: &RepFq, p: u64) -> Result<GClass> {
    let f = rep.field();
    if f.p() != p {
        return Err(Error::BadParams(format!(
            "representation has characteristic {}, not {p}",
            f.p()
        )));
    }
    let g = rep.group();
    if (g.order() as u64).is_multiple_of(p) {
        return Err(Error::PDividesGroupOrder {
            p,
            order: g.order(),
        });
    }
    let e = g.exponent() as u64;
    let (root_field, theta) = rep_cyclo::canonical_root(e, p)?;
    let big = build_extension(p, lcm(f.degree() as u64, root_field.degree() as u64) as usize, 0)?;
    let zeta = embedding(&root_field, &big)?.apply(&theta);
    let emb = embedding(f, &big)?;
    let r = rep.rank();
    let mut values = Vec::new();
    for c in class_representatives(g) {
        let a = rep.image(c).embed(&emb);
        let order = g.element_order(c) as u64;
        let mut value = Cyclo::zero(e);
        let mut total = 0;
        let mut lam = big.one();
        for k in 0..e {
            // eigenvalues of ρ(c) have order dividing ord(c)
            if (k * order).is_multiple_of(e) {
                let shifted = a.sub(&MatFq::identity(&big, r).scale(&lam));
                let mult = r - shifted.rank();
                if mult > 0 {
                    total += mult;
                    value = value.add(&Cyclo::xi_pow(e, k as i64).mul(&Cyclo::from_int(e, mult as i64)));
                }
            }
            lam = big.mul(&lam, &zeta);
        }
        assert_eq!(total, r, "ρ(g) is semisimple with eigenvalues in μ_e when p ∤ |G|");
        values.push(value);
    }
    Ok(GClass {
        group: g.clone(),
        modulus: Some((p, f.degree())),
        values,
    })
}

/// d(ρ): the Brauer character of the reduction of ρ mod p.
pub fn decomposition_class(rep: &RepCyclo, p: u64) -> Result<GClass> {
    let order = rep.group().order();
    if is_prime(p) && (order as u64).is_multiple_of(p) {
        return Err(Error::PDividesGroupOrder { p, order });
    }
    brauer_class(&reduce_mod_p(rep, p)?, p)
}

/// Outcome of [`check_compat`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Compat {
    Holds,
    Fails { left: GClass, right: GClass },
}

/// Compares d(σ_a ρ) with the Brauer class of F∘(ρ mod p), for p ≡ a (mod n).
pub fn check_compat(rep: &RepCyclo, a: i64, p: u64) -> Result<Compat> {
    let n = rep.conductor();
    if gcd(a.rem_euclid(n as i64) as u64, n) != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if (p % n) as i64 != a.rem_euclid(n as i64) {
        return Err(Error::CongruenceViolated { p, a, n });
    }
    let left = decomposition_class(&galois_twist_cyclo(rep, a)?, p)?;
    let right = brauer_class(&reduce_mod_p(rep, p)?.twist(1), p)?;
    Ok(if left == right {
        Compat::Holds
    } else {
        Compat::Fails { left, right }
    })
}

/// The first `count` primes p ≡ a (mod n) with p <= bound, in increasing
/// order. Fewer are returned when the bound is too small.
pub fn primes_in_ap(a: i64, n: u64, count: usize, bound: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::BadParams("modulus must be positive".into()));
    }
    let r = a.rem_euclid(n as i64) as u64;
    if gcd(r, n) != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    let bound = bound as usize;
    let mut composite = vec![false; bound + 1];
    let mut out = Vec::new();
    for k in 2..=bound {
        if composite[k] {
            continue;
        }
        for multiple in (k * k..=bound).step_by(k) {
            composite[multiple] = true;
        }
        if k as u64 % n == r {
            out.push(k as u64);
            if out.len() == count {
                break;
            }
        }
    }
    Ok(out)
}
