//! Representations of finite groups over finite fields.

mod descent;
mod isom;
mod json;

use std::collections::HashSet;
use std::sync::Arc;

use crate::arith::{classify_order, PGroupKind};
use crate::error::{Error, Result};
use crate::gf::{embedding, Field, FieldElem};
use crate::grp::Group;
use crate::matfq::MatFq;

pub use descent::{descend, unitriangularize, Descent, Unitriangular};
pub use isom::{find_isomorphism, frobenius_period, hom_space, Isomorphism, IsoSearch};
pub use json::{GroupSource, RepJson};

/// A homomorphism G -> GL_r(K), stored with the image of every element.
#[derive(Clone, Debug)]
pub struct RepFq {
    group: Arc<Group>,
    field: Field,
    rank: usize,
    gen_images: Vec<MatFq>,
    images: Vec<MatFq>,
}

impl PartialEq for RepFq {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group)
            && self.field == other.field
            && self.gen_images == other.gen_images
    }
}
impl Eq for RepFq {}

fn same_group(a: &Arc<Group>, b: &Arc<Group>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl RepFq {
    /// Validates generator images and expands them to every group element.
    ///
    /// Every pair (a, b) is checked against the Cayley table.
    pub fn new(group: Arc<Group>, field: &Field, gen_images: Vec<MatFq>) -> Result<RepFq> {
        let rank = gen_images.first().map_or(1, MatFq::rows);
        RepFq::with_rank(group, field, rank, gen_images)
    }

    /// As [`RepFq::new`], with the rank given explicitly (needed when the
    /// group has no generators).
    pub fn with_rank(
        group: Arc<Group>,
        field: &Field,
        rank: usize,
        gen_images: Vec<MatFq>,
    ) -> Result<RepFq> {
        if gen_images.len() != group.generators().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} generators",
                gen_images.len(),
                group.generators().len()
            )));
        }
        for m in &gen_images {
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::DimensionMismatch(format!(
                    "generator image is {}x{}, expected {rank}x{rank}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        for (k, m) in gen_images.iter().enumerate() {
            if m.invert().is_err() {
                return Err(Error::NotInvertible(group.generators()[k]));
            }
        }
        let tree = group.spanning_tree();
        let mut images: Vec<Option<MatFq>> = vec![None; group.order()];
        images[group.identity()] = Some(MatFq::identity(field, rank));
        for a in group.bfs_order() {
            if let Some((parent, k)) = tree[a] {
                let m = images[parent].as_ref().unwrap().mul(&gen_images[k]);
                images[a] = Some(m);
            }
        }
        let images: Vec<MatFq> = images.into_iter().map(Option::unwrap).collect();
        let n = group.order();
        for a in 0..n {
            for b in 0..n {
                if images[a].mul(&images[b]) != images[group.mul(a, b)] {
                    return Err(Error::NotHomomorphism { a, b });
                }
            }
        }
        Ok(RepFq {
            group,
            field: field.clone(),
            rank,
            gen_images,
            images,
        })
    }

    /// The trivial representation of rank r.
    pub fn trivial(group: Arc<Group>, field: &Field, rank: usize) -> RepFq {
        let id = MatFq::identity(field, rank);
        let gens = vec![id; group.generators().len()];
        RepFq::with_rank(group, field, rank, gens).expect("trivial representation")
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gen_images(&self) -> &[MatFq] {
        &self.gen_images
    }

    /// Image of the group element with index `g`.
    pub fn image(&self, g: usize) -> &MatFq {
        &self.images[g]
    }

    fn rebuild(&self, field: &Field, gen_images: Vec<MatFq>) -> Result<RepFq> {
        let rank = gen_images.first().map_or(self.rank, MatFq::rows);
        RepFq::with_rank(self.group.clone(), field, rank, gen_images)
    }

    /// The Frobenius twist F^n∘ρ: every entry raised to the p^n-th power.
    pub fn twist(&self, n: usize) -> RepFq {
        let map = |ms: &[MatFq]| ms.iter().map(|m| m.frob(n)).collect();
        RepFq {
            group: self.group.clone(),
            field: self.field.clone(),
            rank: self.rank,
            gen_images: map(&self.gen_images),
            images: map(&self.images),
        }
    }

    /// g -> ρ(g)^{-T}.
    pub fn dual(&self) -> RepFq {
        let map = |ms: &[MatFq]| {
            ms.iter()
                .map(|m| m.inverse().expect("images are invertible").transpose())
                .collect()
        };
        RepFq {
            group: self.group.clone(),
            field: self.field.clone(),
            rank: self.rank,
            gen_images: map(&self.gen_images),
            images: map(&self.images),
        }
    }

    fn check_compatible(&self, other: &RepFq) -> Result<()> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn dsum(&self, other: &RepFq) -> Result<RepFq> {
        self.check_compatible(other)?;
        let gens = self
            .gen_images
            .iter()
            .zip(&other.gen_images)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        self.rebuild(&self.field, gens)
    }

    /// Kronecker product; basis vector (i, j) has index i·r' + j.
    pub fn tensor(&self, other: &RepFq) -> Result<RepFq> {
        self.check_compatible(other)?;
        let gens = self
            .gen_images
            .iter()
            .zip(&other.gen_images)
            .map(|(a, b)| a.kron(b))
            .collect();
        self.rebuild(&self.field, gens)
    }

    /// g -> P ρ(g) P^{-1}.
    pub fn conjugate(&self, p: &MatFq) -> Result<RepFq> {
        if p.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let pinv = p.inverse()?;
        let gens = self.gen_images.iter().map(|m| p.mul(m).mul(&pinv)).collect();
        self.rebuild(&self.field, gens)
    }

    /// The same representation over an extension field.
    pub fn extend_scalars(&self, target: &Field) -> Result<RepFq> {
        let emb = embedding(&self.field, target)?;
        let map = |ms: &[MatFq]| ms.iter().map(|m| m.embed(&emb)).collect();
        Ok(RepFq {
            group: self.group.clone(),
            field: target.clone(),
            rank: self.rank,
            gen_images: map(&self.gen_images),
            images: map(&self.images),
        })
    }

    /// Basis (as column vectors) of the common fixed space of all ρ(g).
    pub fn fixed_vectors(&self) -> Vec<Vec<FieldElem>> {
        fixed_columns(&self.field, self.rank, &self.gen_images)
    }

    /// dim of (K^r)^ρ.
    pub fn invariants_dim(&self) -> usize {
        self.fixed_vectors().len()
    }

    /// Order of ρ(G), by closure of the generator images.
    pub fn image_order(&self) -> usize {
        let id = MatFq::identity(&self.field, self.rank);
        let mut seen: HashSet<Vec<FieldElem>> = HashSet::from([id.entries().to_vec()]);
        let mut frontier = vec![id];
        while let Some(m) = frontier.pop() {
            for g in &self.gen_images {
                let next = m.mul(g);
                if seen.insert(next.entries().to_vec()) {
                    frontier.push(next);
                }
            }
        }
        seen.len()
    }

    pub fn image_is_p_group(&self) -> PGroupKind {
        classify_order(self.image_order())
    }

    /// Whether every entry of every image lies in F_{p^n} (is fixed by F^n).
    pub fn is_defined_over(&self, n: usize) -> bool {
        self.gen_images.iter().all(|m| m.frob(n) == *m)
    }
}

/// Column vectors v with (A_i - I) v = 0 for all i, in canonical echelon form.
pub(crate) fn fixed_columns(field: &Field, r: usize, mats: &[MatFq]) -> Vec<Vec<FieldElem>> {
    if mats.is_empty() {
        return MatFq::identity(field, r).row_vectors();
    }
    let id = MatFq::identity(field, r);
    let diffs: Vec<MatFq> = mats.iter().map(|m| m.sub(&id)).collect();
    MatFq::vstack(&diffs).transpose().kernel_basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_extension;
    use crate::grp::{standard_group, StandardKind};

    fn cyc(n: usize) -> Arc<Group> {
        Arc::new(standard_group(StandardKind::Cyclic(n)).unwrap())
    }

    #[test]
    fn validation_examples() {
        let f3 = build_extension(3, 1, 0).unwrap();
        let swap = MatFq::from_ints(&f3, &[&[0, 1], &[1, 0]]);
        assert!(RepFq::new(cyc(2), &f3, vec![swap]).is_ok());
        let shear = MatFq::from_ints(&f3, &[&[1, 1], &[0, 1]]);
        assert_eq!(
            RepFq::new(cyc(2), &f3, vec![shear]),
            Err(Error::NotHomomorphism { a: 1, b: 1 })
        );
        let f4 = build_extension(2, 2, 0).unwrap();
        let w = MatFq::diagonal(&f4, &[f4.gen()]);
        assert!(RepFq::new(cyc(3), &f4, vec![w]).is_ok());
        let sing = MatFq::from_ints(&f3, &[&[1, 1], &[1, 1]]);
        assert_eq!(
            RepFq::new(cyc(2), &f3, vec![sing]),
            Err(Error::NotInvertible(1))
        );
    }

    #[test]
    fn twist_dual_tensor() {
        let f4 = build_extension(2, 2, 0).unwrap();
        let w = f4.gen();
        let w2 = f4.mul(&w, &w);
        let chi = RepFq::new(cyc(3), &f4, vec![MatFq::diagonal(&f4, std::slice::from_ref(&w))]).unwrap();
        let chi2 = RepFq::new(cyc(3), &f4, vec![MatFq::diagonal(&f4, std::slice::from_ref(&w2))]).unwrap();
        assert_eq!(chi.twist(1), chi2);
        assert_eq!(chi.twist(2), chi);
        assert_eq!(chi.dual(), chi2);
        assert_eq!(chi.tensor(&chi2).unwrap(), RepFq::trivial(cyc(3), &f4, 1));
        let triv = RepFq::trivial(cyc(3), &f4, 2);
        assert_eq!(triv.dual(), triv);
        assert_eq!(triv.twist(1), triv);
    }

    #[test]
    fn mismatches() {
        let f2 = build_extension(2, 1, 0).unwrap();
        let f4 = build_extension(2, 2, 0).unwrap();
        let a = RepFq::trivial(cyc(3), &f2, 1);
        let b = RepFq::trivial(cyc(3), &f4, 1);
        let c = RepFq::trivial(cyc(2), &f2, 1);
        assert_eq!(a.dsum(&b), Err(Error::FieldMismatch));
        assert_eq!(a.tensor(&c), Err(Error::GroupMismatch));
    }

    #[test]
    fn invariants_examples() {
        let f3 = build_extension(3, 1, 0).unwrap();
        let f2 = build_extension(2, 1, 0).unwrap();
        assert_eq!(RepFq::trivial(cyc(2), &f3, 3).invariants_dim(), 3);
        for f in [&f3, &f2] {
            let swap = MatFq::from_ints(f, &[&[0, 1], &[1, 0]]);
            assert_eq!(RepFq::new(cyc(2), f, vec![swap]).unwrap().invariants_dim(), 1);
        }
    }

    #[test]
    fn image_classification() {
        let f3 = build_extension(3, 1, 0).unwrap();
        assert_eq!(
            RepFq::trivial(cyc(4), &f3, 2).image_is_p_group(),
            PGroupKind::Trivial
        );
        let swap = MatFq::from_ints(&f3, &[&[0, 1], &[1, 0]]);
        let reg = RepFq::new(cyc(2), &f3, vec![swap]).unwrap();
        assert_eq!(reg.image_is_p_group(), PGroupKind::Yes(2));
        let f7 = build_extension(7, 1, 0).unwrap();
        let d3 = Arc::new(standard_group(StandardKind::Dihedral(3)).unwrap());
        let rot = MatFq::from_ints(&f7, &[&[2, 0], &[0, 4]]);
        let refl = MatFq::from_ints(&f7, &[&[0, 1], &[1, 0]]);
        let rho = RepFq::new(d3, &f7, vec![rot, refl]).unwrap();
        assert_eq!(rho.image_order(), 6);
        assert_eq!(rho.image_is_p_group(), PGroupKind::No);
    }
}
