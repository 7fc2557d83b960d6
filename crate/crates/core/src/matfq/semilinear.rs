//! The Frobenius-semilinear equation x^(q) = x M over finite fields.
//!
//! For M over F = F_{p^m} and q = p^n, put u = lcm(m, n) / n and let
//! P = M M^(q) ... M^(q^{u-1}). Every solution satisfies x^(q^{u t}) = x P^t,
//! so all solutions are rational over F_{q^{u t}} as soon as P^t is the
//! identity on the stable image of P. That bound replaces an open-ended
//! search over ambient degrees.

use crate::arith::{divisors, lcm, log_exact};
use crate::error::{Error, Result};
use crate::gf::{build_extension, embedding, Field, FieldElem};

use super::{fp, rank_of, MatFq};

fn check_q(m: &MatFq, q: u64) -> Result<usize> {
    let p = m.field().p();
    log_exact(q, p).ok_or_else(|| {
        Error::IncompatibleFields(format!("q = {q} is not a power of the characteristic {p}"))
    })
}

fn require_square(m: &MatFq) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// u and P = M M^(q) ... M^(q^{u-1}), with entries in the field of M.
fn twisted_norm(m: &MatFq, n: usize) -> (usize, MatFq) {
    let deg = m.field().degree();
    let u = lcm(deg as u64, n as u64) as usize / n;
    let mut acc = m.clone();
    for i in 1..u {
        acc = acc.mul(&m.frob(n * i));
    }
    (u, acc)
}

fn pow_mat(m: &MatFq, mut e: usize) -> MatFq {
    let mut acc = MatFq::identity(m.field(), m.rows());
    let mut base = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    acc
}

/// F_q-basis of {x in ambient^r : x^(q) = x M}.
///
/// The map x -> x^(q) - x M is F_p-linear on ambient^r; its kernel is computed
/// in F_p coordinates and then thinned to an F_q-basis.
pub fn semilinear_kernel(m: &MatFq, q: u64, ambient: &Field) -> Result<Vec<Vec<FieldElem>>> {
    require_square(m)?;
    let n = check_q(m, q)?;
    let p = m.field().p();
    if ambient.p() != p {
        return Err(Error::IncompatibleFields(format!(
            "ambient characteristic {} differs from {p}",
            ambient.p()
        )));
    }
    let d = ambient.degree();
    if !d.is_multiple_of(m.field().degree()) || !d.is_multiple_of(n) {
        return Err(Error::IncompatibleFields(format!(
            "F_{p}^{d} contains neither F_{p}^{} nor F_{q}",
            m.field().degree()
        )));
    }
    let emb = embedding(m.field(), ambient)?;
    let me = m.embed(&emb);
    let r = m.rows();
    let f = ambient;

    let mut images: Vec<Vec<u64>> = Vec::with_capacity(r * d);
    for k in 0..r {
        for t in 0..d {
            let mut unit = vec![0u64; t + 1];
            unit[t] = 1;
            let a = f.from_coeffs(&unit);
            let fa = f.frob(&a, n);
            let mut coords = Vec::with_capacity(r * d);
            for j in 0..r {
                let mut y = f.neg(&f.mul(&a, me.get(k, j)));
                if j == k {
                    y = f.add(&y, &fa);
                }
                coords.extend(f.coeffs(&y));
            }
            images.push(coords);
        }
    }
    let kernel = fp::left_kernel(&images, r * d, p);

    let to_vec = |c: &[u64]| -> Vec<FieldElem> {
        (0..r).map(|j| f.from_coeffs(&c[j * d..(j + 1) * d])).collect()
    };
    let flatten = |v: &[FieldElem]| -> Vec<u64> { v.iter().flat_map(|e| f.coeffs(e)).collect() };

    if n == 1 {
        return Ok(kernel.iter().map(|c| to_vec(c)).collect());
    }
    let fq = build_extension(p, n, 0)?;
    let zeta = embedding(&fq, ambient)?.apply(&fq.gen());
    let mut span: Vec<Vec<u64>> = Vec::new();
    let mut basis = Vec::new();
    for c in &kernel {
        let mut trial = span.clone();
        trial.push(c.clone());
        if fp::rank(&trial, p) == fp::rank(&span, p) {
            continue;
        }
        let v = to_vec(c);
        let mut z = f.one();
        for _ in 0..n {
            let scaled: Vec<FieldElem> = v.iter().map(|e| f.mul(e, &z)).collect();
            span.push(flatten(&scaled));
            z = f.mul(&z, &zeta);
        }
        fp::rref(&mut span, p);
        span.retain(|row| row.iter().any(|&x| x != 0));
        basis.push(v);
    }
    Ok(basis)
}

/// Result of [`omega_count`]: #Omega = q^dim, first reached over F_{q^degree}
/// (composed with the field of M).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaCount {
    pub count: u128,
    pub dim: usize,
    pub degree: usize,
}

fn dim_at(m: &MatFq, q: u64, n: usize, s: usize) -> Result<usize> {
    let deg = lcm(m.field().degree() as u64, (n * s) as u64) as usize;
    let ambient = build_extension(m.field().p(), deg, 0)?;
    Ok(semilinear_kernel(m, q, &ambient)?.len())
}

/// Counts the solutions of x^(q) = x M over the algebraic closure.
pub fn omega_count(m: &MatFq, q: u64, s_max: usize) -> Result<OmegaCount> {
    require_square(m)?;
    let n = check_q(m, q)?;
    let r = m.rows();
    let (u, norm) = twisted_norm(m, n);
    let base = pow_mat(&norm, r);
    let mut cur = base.mul(&norm);
    let mut t = 1;
    while cur != base {
        t += 1;
        if u * t > s_max {
            let partial = if u <= s_max {
                Some((q as u128).pow(dim_at(m, q, n, u)? as u32))
            } else {
                None
            };
            return Err(Error::DegreeCapExceeded {
                cap: s_max,
                needed: None,
                partial_count: partial,
            });
        }
        cur = cur.mul(&norm);
    }
    let s_star = u * t;
    if s_star > s_max {
        return Err(Error::DegreeCapExceeded {
            cap: s_max,
            needed: Some(s_star),
            partial_count: None,
        });
    }
    let invertible = m.invert().is_ok();
    let target = if invertible {
        r
    } else {
        dim_at(m, q, n, s_star)?
    };
    for s in divisors(s_star as u64) {
        let s = s as usize;
        let dim = if s == s_star && !invertible {
            target
        } else {
            dim_at(m, q, n, s)?
        };
        if dim == target || s == s_star {
            return Ok(OmegaCount {
                count: (q as u128).pow(dim as u32),
                dim,
                degree: s,
            });
        }
    }
    unreachable!("s_star is its own divisor")
}

/// An invertible solution N of N^(q) = N M, over `ambient` = F_{q^degree}.
#[derive(Debug, Clone)]
pub struct LangSolution {
    pub matrix: MatFq,
    pub ambient: Field,
    pub degree: usize,
}

/// Solves the Lang equation N^(q) = N M for invertible M.
///
/// Over L = F_{q^s} with P^s = I the operator T(x) = x^(q) M^{-1} has order
/// dividing s, and its fixed space is the image of y -> sum_i T^i(y). Rows are
/// produced from y = a^j e_k (a the generator of L, j ascending) and kept
/// greedily while they raise the rank.
pub fn lang_solve(m: &MatFq, q: u64, s_max: usize) -> Result<LangSolution> {
    require_square(m)?;
    let n = check_q(m, q)?;
    let (minv, _) = m.invert()?;
    let r = m.rows();
    let p = m.field().p();
    let (u, norm) = twisted_norm(m, n);
    let id = MatFq::identity(m.field(), r);
    let mut cur = norm.clone();
    let mut order = 1;
    while cur != id {
        order += 1;
        if u * order > s_max {
            return Err(Error::DegreeCapExceeded {
                cap: s_max,
                needed: None,
                partial_count: None,
            });
        }
        cur = cur.mul(&norm);
    }
    let s = u * order;
    let ambient = build_extension(p, n * s, 0)?;
    let f = &ambient;
    let emb = embedding(m.field(), f)?;
    let me = m.embed(&emb);
    let w: Vec<MatFq> = (0..u).map(|j| minv.frob(n * j).embed(&emb)).collect();
    let mut partial = Vec::with_capacity(s);
    let mut acc = MatFq::identity(f, r);
    for i in 0..s {
        let next = w[i % u].mul(&acc);
        partial.push(acc);
        acc = next;
    }

    let mut rows: Vec<Vec<FieldElem>> = Vec::new();
    'outer: for j in 0..f.degree() {
        let mut unit = vec![0u64; j + 1];
        unit[j] = 1;
        let mut g = f.from_coeffs(&unit);
        let mut sum = MatFq::zero(f, r, r);
        for ri in &partial {
            sum = sum.add(&ri.scale(&g));
            g = f.frob(&g, n);
        }
        for k in 0..r {
            let cand = sum.row(k);
            let mut trial = rows.clone();
            trial.push(cand);
            if rank_of(f, &trial) > rows.len() {
                rows = trial;
                if rows.len() == r {
                    break 'outer;
                }
            }
        }
    }
    let matrix = MatFq::from_rows(f, rows)?;
    if matrix.rows() != r || matrix.frob(n) != matrix.mul(&me) || matrix.invert().is_err() {
        return Err(Error::Singular);
    }
    Ok(LangSolution {
        matrix,
        ambient,
        degree: s,
    })
}
