//! Hodge numbers of representation-defined bundles on curves.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rep::RepFq;

/// (h^0, h^1, h^2) of Hodge cohomology for a rank-r bundle on a genus-g curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HodgeNumbers {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    pub rank: usize,
    pub genus: usize,
}

impl HodgeNumbers {
    pub fn triple(&self) -> [usize; 3] {
        [self.h0, self.h1, self.h2]
    }

    /// h0 - h1 + h2, which equals 2r(1 - g).
    pub fn euler(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }
}

/// Hodge numbers of the degree-zero bundle attached to ρ on a genus-g curve.
///
/// h^0 = dim (k^r)^ρ and h^2 = dim (k^r)^{ρ^∨} by Serre duality. Riemann–Roch
/// with deg V = 0 gives h^1(V) = h^0(V) + r(g - 1) and
/// h^0(V ⊗ Ω) = h^0(V^∨) + r(g - 1), so h^1 = h^0 + h^2 + 2r(g - 1).
pub fn hodge_curve(rep: &RepFq, genus: usize) -> Result<HodgeNumbers> {
    let h0 = rep.invariants_dim();
    let h2 = rep.dual().invariants_dim();
    let r = rep.rank() as i64;
    let h1 = h0 as i64 + h2 as i64 + 2 * r * (genus as i64 - 1);
    if h1 < 0 {
        return Err(Error::NotRealizable { h1 });
    }
    Ok(HodgeNumbers {
        h0,
        h1: h1 as usize,
        h2,
        rank: rep.rank(),
        genus,
    })
}

/// Hodge numbers of every Frobenius twist F^n∘ρ, n = 1..m, against ρ's own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistReport {
    pub base: HodgeNumbers,
    pub twists: Vec<(usize, HodgeNumbers)>,
    pub equal: bool,
}

impl TwistReport {
    /// `{"base": [h0,h1,h2], "twists": [{"n", "h"}], "equal": bool}`.
    pub fn to_json(&self) -> Value {
        let twists: Vec<Value> = self
            .twists
            .iter()
            .map(|(n, h)| json!({"n": n, "h": h.triple()}))
            .collect();
        json!({
            "base": self.base.triple(),
            "twists": twists,
            "equal": self.equal,
        })
    }
}

pub fn check_twist_equality(rep: &RepFq, genus: usize) -> Result<TwistReport> {
    let base = hodge_curve(rep, genus)?;
    let twists = (1..=rep.field().degree())
        .map(|n| Ok((n, hodge_curve(&rep.twist(n), genus)?)))
        .collect::<Result<Vec<_>>>()?;
    let equal = twists.iter().all(|(_, h)| *h == base);
    Ok(TwistReport {
        base,
        twists,
        equal,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::gf::build_extension;
    use crate::grp::{standard_group, Group, StandardKind};
    use crate::matfq::MatFq;

    fn cyc(n: usize) -> Arc<Group> {
        Arc::new(standard_group(StandardKind::Cyclic(n)).unwrap())
    }

    #[test]
    fn curve_examples() {
        let f4 = build_extension(2, 2, 0).unwrap();
        let t = RepFq::trivial(cyc(3), &f4, 1);
        assert_eq!(hodge_curve(&t, 2).unwrap().triple(), [1, 4, 1]);
        assert_eq!(hodge_curve(&t, 0).unwrap().triple(), [1, 0, 1]);
        let w = RepFq::new(cyc(3), &f4, vec![MatFq::diagonal(&f4, &[f4.gen()])]).unwrap();
        assert_eq!(hodge_curve(&w, 2).unwrap().triple(), [0, 2, 0]);
        assert_eq!(hodge_curve(&w, 0).unwrap_err(), Error::NotRealizable { h1: -2 });
    }

    #[test]
    fn twist_reports() {
        let f4 = build_extension(2, 2, 0).unwrap();
        let w = RepFq::new(cyc(3), &f4, vec![MatFq::diagonal(&f4, &[f4.gen()])]).unwrap();
        let rep = check_twist_equality(&w, 2).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.twists.len(), 2);
        assert_eq!(
            rep.to_json(),
            json!({"base": [0, 2, 0], "twists": [{"n": 1, "h": [0, 2, 0]}, {"n": 2, "h": [0, 2, 0]}], "equal": true})
        );
        let f2 = build_extension(2, 1, 0).unwrap();
        let reg = RepFq::new(cyc(2), &f2, vec![MatFq::from_ints(&f2, &[&[0, 1], &[1, 0]])]).unwrap();
        assert!(check_twist_equality(&reg, 1).unwrap().equal);
        assert!(check_twist_equality(&RepFq::trivial(cyc(2), &f2, 2), 0).unwrap().equal);
    }
}
