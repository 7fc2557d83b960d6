//! Descent to a smaller field via the Lang equation, and unitriangularization.

use super::{fixed_columns, find_isomorphism, IsoSearch, Isomorphism, RepFq};
use crate::arith::PGroupKind;
use crate::error::{Error, Result};
use crate::gf::{build_extension, embedding, Field, FieldElem};
use crate::matfq::{lang_solve, rank_of, MatFq};

/// Result of [`descend`].
#[derive(Debug, Clone)]
pub struct Descent {
    /// ρ₁ = N ρ N^{-1}, with entries expressed in F_{p^n}.
    pub rep: RepFq,
    /// M with F^n∘ρ(g) = M^{-1} ρ(g) M.
    pub intertwiner: MatFq,
    /// Invertible N over `ambient` with N^(p^n) = N M.
    pub witness: MatFq,
    pub ambient: Field,
}

/// Conjugates ρ into GL_r(F_{p^n}).
///
/// Finds M with ρ(g) M = M F^n(ρ(g)), solves N^(q) = N M for invertible N
/// (q = p^n) and returns ρ₁ = N ρ N^{-1}, which is then fixed by F^n:
/// F^n(ρ₁) = N M · M^{-1} ρ M · M^{-1} N^{-1}.
pub fn descend(rep: &RepFq, n: usize, s_max: usize, search: IsoSearch) -> Result<Descent> {
    if n == 0 {
        return Err(Error::BadParams("descent degree must be positive".into()));
    }
    let twisted = rep.twist(n);
    let m = match find_isomorphism(rep, &twisted, search)? {
        Isomorphism::Found(m) => m,
        Isomorphism::NotIsomorphic => return Err(Error::NotPeriodic(n)),
    };
    let minv = m.inverse()?;
    for (g, tg) in rep.gen_images().iter().zip(twisted.gen_images()) {
        assert_eq!(*tg, minv.mul(g).mul(&m), "intertwiner orientation");
    }
    let p = rep.field().p();
    let q = p
        .checked_pow(n as u32)
        .ok_or_else(|| Error::BadParams(format!("{p}^{n} overflows")))?;
    let sol = lang_solve(&m, q, s_max)?;
    let ambient = sol.ambient;
    let big = rep.extend_scalars(&ambient)?;
    let conj = big.conjugate(&sol.matrix)?;
    let sub = build_extension(p, n, 0)?;
    // Through the field of ρ when it contains F_{p^n}, so that ρ₁ is read in
    // the same copy of F_{p^n} that ρ's own field sees.
    let path = if rep.field().degree().is_multiple_of(n) {
        vec![embedding(rep.field(), &ambient)?, embedding(&sub, rep.field())?]
    } else {
        vec![embedding(&sub, &ambient)?]
    };
    let pull = |e: &FieldElem| {
        path.iter()
            .try_fold(e.clone(), |x, emb| emb.preimage(&x))
            .ok_or_else(|| Error::IncompatibleFields("descended entry not in F_{p^n}".into()))
    };
    let mut gens = Vec::with_capacity(conj.gen_images().len());
    for g in conj.gen_images() {
        let entries = g.entries().iter().map(pull).collect::<Result<Vec<_>>>()?;
        gens.push(MatFq::new(&sub, g.rows(), g.cols(), entries)?);
    }
    let rep1 = RepFq::with_rank(rep.group().clone(), &sub, rep.rank(), gens)?;
    Ok(Descent {
        rep: rep1,
        intertwiner: m,
        witness: sol.matrix,
        ambient,
    })
}

/// Result of [`unitriangularize`].
#[derive(Debug, Clone)]
pub struct Unitriangular {
    /// P with ρ'(g) = P ρ(g) P^{-1}.
    pub change_of_basis: MatFq,
    pub conjugated: RepFq,
}

/// Puts a p-group representation in characteristic p into unit upper
/// triangular form.
///
/// Builds a flag b_1, ..., b_r with ρ(g) b_j ∈ b_j + span(b_1..b_{j-1}): at
/// each step the action on V / span(b_1..b_k) is again a p-group in
/// characteristic p, so it has a nonzero fixed vector, which is lifted.
pub fn unitriangularize(rep: &RepFq) -> Result<Unitriangular> {
    let f = rep.field();
    let p = f.p();
    match rep.image_is_p_group() {
        PGroupKind::Trivial => {}
        PGroupKind::Yes(q) if q == p => {}
        _ => {
            return Err(Error::NotPGroupInCharP {
                image_order: rep.image_order(),
                p,
            })
        }
    }
    let r = rep.rank();
    let mut flag: Vec<Vec<FieldElem>> = Vec::new();
    while flag.len() < r {
        let k = flag.len();
        let complement = complete_basis(f, &flag, r);
        let cols: Vec<Vec<FieldElem>> = flag.iter().chain(&complement).cloned().collect();
        let b = MatFq::from_rows(f, cols)?.transpose();
        let binv = b.inverse()?;
        let quotients: Vec<MatFq> = rep
            .gen_images()
            .iter()
            .map(|g| {
                let c = binv.mul(g).mul(&b);
                let entries = (k..r)
                    .flat_map(|i| (k..r).map(move |j| (i, j)))
                    .map(|(i, j)| c.get(i, j).clone())
                    .collect();
                MatFq::new(f, r - k, r - k, entries).unwrap()
            })
            .collect();
        let fixed = fixed_columns(f, r - k, &quotients);
        let v = fixed.first().expect("p-group in characteristic p has fixed vectors");
        let lifted = complement.iter().zip(v).fold(vec![f.zero(); r], |acc, (c, coef)| {
            acc.iter()
                .zip(c)
                .map(|(a, x)| f.add(a, &f.mul(coef, x)))
                .collect()
        });
        flag.push(lifted);
    }
    let pinv = MatFq::from_rows(f, flag)?.transpose();
    let p_mat = pinv.inverse()?;
    let conjugated = rep.conjugate(&p_mat)?;
    debug_assert!(conjugated.gen_images().iter().all(MatFq::is_unit_upper_triangular));
    Ok(Unitriangular {
        change_of_basis: p_mat,
        conjugated,
    })
}

/// Standard basis vectors extending the independent set `vs` to a basis.
fn complete_basis(f: &Field, vs: &[Vec<FieldElem>], r: usize) -> Vec<Vec<FieldElem>> {
    let mut current = vs.to_vec();
    let mut out = Vec::new();
    for i in 0..r {
        if current.len() == r {
            break;
        }
        let mut e = vec![f.zero(); r];
        e[i] = f.one();
        current.push(e.clone());
        if rank_of(f, &current) == current.len() {
            out.push(e);
        } else {
            current.pop();
        }
    }
    out
}
