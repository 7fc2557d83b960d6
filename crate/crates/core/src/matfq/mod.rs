//! Dense matrices over finite fields, and the Frobenius-semilinear solvers.

mod fp;
mod semilinear;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{elem_from_json, elem_to_json, Embedding, Field, FieldElem, FieldJson};

pub use semilinear::{lang_solve, omega_count, semilinear_kernel, LangSolution, OmegaCount};

pub(crate) use fp::solve_left as fp_solve_left;

/// Row-major r x c matrix over a finite field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatFq {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElem>,
}

impl MatFq {
    pub fn new(field: &Field, rows: usize, cols: usize, entries: Vec<FieldElem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(MatFq {
            field: field.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        MatFq::new(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix of small integers, reduced into the prime subfield.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|row| row.iter().map(|&v| field.from_int(v)).collect())
            .collect();
        MatFq::from_rows(field, data).expect("rectangular input")
    }

    pub fn zero(field: &Field, rows: usize, cols: usize) -> Self {
        MatFq {
            field: field.clone(),
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = MatFq::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn diagonal(field: &Field, diag: &[FieldElem]) -> Self {
        let mut m = MatFq::zero(field, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vec<FieldElem> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn row_vectors(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn mul(&self, other: &MatFq) -> MatFq {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = MatFq::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), &f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        let f = &self.field;
        (0..self.cols)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .fold(f.zero(), |acc, (i, x)| f.add(&acc, &f.mul(x, self.get(i, j))))
            })
            .collect()
    }

    pub fn add(&self, other: &MatFq) -> MatFq {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &MatFq) -> MatFq {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    fn zip_with(&self, other: &MatFq, f: impl Fn(&FieldElem, &FieldElem) -> FieldElem) -> MatFq {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        MatFq {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&FieldElem) -> FieldElem) -> MatFq {
        MatFq {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElem) -> MatFq {
        self.map(|a| self.field.mul(a, c))
    }

    pub fn transpose(&self) -> MatFq {
        let mut out = MatFq::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Entrywise e -> e^{p^n}.
    pub fn frob(&self, n: usize) -> MatFq {
        self.map(|a| self.field.frob(a, n))
    }

    /// Entrywise image under an embedding of fields.
    pub fn embed(&self, emb: &Embedding) -> MatFq {
        assert!(emb.source == self.field);
        MatFq {
            field: emb.target.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| emb.apply(e)).collect(),
        }
    }

    pub fn kron(&self, other: &MatFq) -> MatFq {
        let f = &self.field;
        let (r2, c2) = (other.rows, other.cols);
        let mut out = MatFq::zero(f, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for k in 0..r2 {
                    for l in 0..c2 {
                        out.set(i * r2 + k, j * c2 + l, f.mul(self.get(i, j), other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(&self, other: &MatFq) -> MatFq {
        let mut out = MatFq::zero(&self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Stacks matrices with equal column counts vertically.
    pub fn vstack(parts: &[MatFq]) -> MatFq {
        let field = parts[0].field.clone();
        let cols = parts[0].cols;
        let mut entries = Vec::new();
        for m in parts {
            assert_eq!(m.cols, cols);
            entries.extend(m.entries.iter().cloned());
        }
        let rows = entries.len() / cols.max(1);
        MatFq {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == MatFq::identity(&self.field, self.rows)
    }

    pub fn is_unit_upper_triangular(&self) -> bool {
        let f = &self.field;
        self.is_square()
            && (0..self.rows).all(|i| {
                f.is_one(self.get(i, i)) && (0..i).all(|j| f.is_zero(self.get(i, j)))
            })
    }

    /// Reduced row echelon form (first nonzero entry in column order pivots).
    pub fn rref(&self) -> (MatFq, Vec<usize>) {
        let mut rows = self.row_vectors();
        let pivots = rref_rows(&self.field, &mut rows, self.cols);
        let m = MatFq {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: rows.into_iter().flatten().collect(),
        };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of {x : x A = 0} in reduced echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElem>> {
        let f = &self.field;
        let (t, pivots) = self.transpose().rref();
        let n = self.rows;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis: Vec<Vec<FieldElem>> = free
            .iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); n];
                v[fc] = f.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(t.get(row, fc));
                }
                v
            })
            .collect();
        rref_rows(f, &mut basis, n);
        basis
    }

    pub fn det(&self) -> Result<FieldElem> {
        self.require_square()?;
        Ok(self.gauss_jordan().1)
    }

    /// Inverse together with the determinant.
    pub fn invert(&self) -> Result<(MatFq, FieldElem)> {
        self.require_square()?;
        match self.gauss_jordan() {
            (Some(inv), det) => Ok((inv, det)),
            (None, _) => Err(Error::Singular),
        }
    }

    pub fn inverse(&self) -> Result<MatFq> {
        Ok(self.invert()?.0)
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn gauss_jordan(&self) -> (Option<MatFq>, FieldElem) {
        let f = &self.field;
        let n = self.rows;
        let mut a = self.row_vectors();
        let mut inv = MatFq::identity(f, n).row_vectors();
        let mut det = f.one();
        for c in 0..n {
            let Some(sel) = (c..n).find(|&i| !f.is_zero(&a[i][c])) else {
                return (None, f.zero());
            };
            if sel != c {
                a.swap(c, sel);
                inv.swap(c, sel);
                det = f.neg(&det);
            }
            det = f.mul(&det, &a[c][c]);
            let pinv = f.inv(&a[c][c]).unwrap();
            for v in a[c].iter_mut().chain(inv[c].iter_mut()) {
                *v = f.mul(v, &pinv);
            }
            for i in 0..n {
                if i == c || f.is_zero(&a[i][c]) {
                    continue;
                }
                let factor = a[i][c].clone();
                for j in 0..n {
                    let t = f.mul(&factor, &a[c][j]);
                    a[i][j] = f.sub(&a[i][j], &t);
                    let t = f.mul(&factor, &inv[c][j]);
                    inv[i][j] = f.sub(&inv[i][j], &t);
                }
            }
        }
        let m = MatFq::from_rows(f, inv).unwrap();
        (Some(m), det)
    }
}

/// In-place RREF of a list of row vectors; returns pivot columns.
pub(crate) fn rref_rows(f: &Field, rows: &mut [Vec<FieldElem>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = f.inv(&rows[r][c]).unwrap();
        for v in rows[r].iter_mut() {
            *v = f.mul(v, &inv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot) {
                *v = f.sub(v, &f.mul(&factor, pv));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a set of row vectors.
pub(crate) fn rank_of(f: &Field, rows: &[Vec<FieldElem>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = rows.to_vec();
    rref_rows(f, &mut r, ncols).len()
}

/// Matrix JSON: `{"field": FieldJSON, "rows": r, "cols": c, "entries": [[elem,...],...]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatrixJson {
    pub field: FieldJson,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Vec<u64>>>,
}

impl MatrixJson {
    pub fn from_mat(m: &MatFq) -> Self {
        MatrixJson {
            field: FieldJson::from_field(&m.field),
            rows: m.rows,
            cols: m.cols,
            entries: entries_to_json(m),
        }
    }

    pub fn to_mat(&self) -> Result<MatFq> {
        let field = self.field.to_field()?;
        let m = entries_from_json(&field, &self.entries)?;
        if m.rows != self.rows || m.cols != self.cols {
            return Err(Error::Parse(format!(
                "declared {}x{} but entries are {}x{}",
                self.rows, self.cols, m.rows, m.cols
            )));
        }
        Ok(m)
    }
}

pub fn entries_to_json(m: &MatFq) -> Vec<Vec<Vec<u64>>> {
    (0..m.rows)
        .map(|i| (0..m.cols).map(|j| elem_to_json(&m.field, m.get(i, j))).collect())
        .collect()
}

pub fn entries_from_json(field: &Field, entries: &[Vec<Vec<u64>>]) -> Result<MatFq> {
    let rows = entries
        .iter()
        .map(|row| row.iter().map(|e| elem_from_json(field, e)).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    MatFq::from_rows(field, rows).map_err(|e| Error::Parse(e.to_string()))
}
