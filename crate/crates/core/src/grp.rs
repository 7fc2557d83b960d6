//! Finite groups given by Cayley tables.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::arith::{classify_order, is_prime, PGroupKind};
use crate::error::{Error, Result};

/// A finite group stored as a full multiplication table.
///
/// `table[a][b]` is the index of the product `a * b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    generators: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

/// Group JSON: `{"name", "elements", "table", "generators"}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupJson {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub generators: Vec<usize>,
}

/// Which family [`standard_group`] should build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    /// Z/n.
    Cyclic(usize),
    /// The dihedral group of order 2n.
    Dihedral(usize),
    /// (Z/p)^k.
    ElementaryAbelian(u64, u32),
}

impl Group {
    /// Validates a Cayley table and a generating set.
    ///
    /// `elements` may be empty, in which case elements are named by index.
    pub fn from_table(
        name: &str,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        generators: Vec<usize>,
    ) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if let Some(i) = table.iter().position(|row| row.len() != n) {
            return Err(Error::NotAGroup(format!("row {i} has the wrong length")));
        }
        if let Some((i, j)) = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| table[i][j] >= n)
        {
            return Err(Error::NotAGroup(format!("entry ({i},{j}) out of range")));
        }
        check_latin(&table)?;
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a][b] == identity)
                .expect("latin square");
            if table[b][a] != identity {
                return Err(Error::NotAGroup(format!(
                    "left and right inverses of {a} differ"
                )));
            }
            inverse[a] = b;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails for ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        if generators.is_empty() && n > 1 {
            return Err(Error::NotGenerating {
                closure: 1,
                order: n,
            });
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= n) {
            return Err(Error::BadParams(format!("generator {g} out of range")));
        }
        let elements = if elements.is_empty() {
            (0..n).map(|i| i.to_string()).collect()
        } else if elements.len() != n {
            return Err(Error::BadParams(format!(
                "{} element names for a table of order {n}",
                elements.len()
            )));
        } else {
            elements
        };
        let group = Group {
            name: name.to_string(),
            elements,
            table,
            generators,
            inverse,
            identity,
        };
        let closure = group.closure(&group.generators).len();
        if closure != n {
            return Err(Error::NotGenerating { closure, order: n });
        }
        Ok(group)
    }

    pub fn from_json(j: &GroupJson) -> Result<Group> {
        Group::from_table(
            &j.name,
            j.elements.clone(),
            j.table.clone(),
            j.generators.clone(),
        )
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            name: self.name.clone(),
            elements: self.elements.clone(),
            table: self.table.clone(),
            generators: self.generators.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    /// Elements reachable from the identity by right multiplication with `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        let mut out = vec![self.identity];
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let b = self.mul(a, g);
                if !seen[b] {
                    seen[b] = true;
                    out.push(b);
                    queue.push_back(b);
                }
            }
        }
        out
    }

    /// Words in the generators for every element: `(parent, generator)` with
    /// `element = parent * generators[generator]`; the identity has no parent.
    pub fn spanning_tree(&self) -> Vec<Option<(usize, usize)>> {
        let mut tree = vec![None; self.order()];
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for (k, &g) in self.generators.iter().enumerate() {
                let b = self.mul(a, g);
                if !seen[b] {
                    seen[b] = true;
                    tree[b] = Some((a, k));
                    queue.push_back(b);
                }
            }
        }
        tree
    }

    /// BFS order of elements matching [`Group::spanning_tree`].
    pub fn bfs_order(&self) -> Vec<usize> {
        self.closure(&self.generators)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order())
            .map(|a| self.element_order(a) as u64)
            .fold(1, crate::arith::lcm) as usize
    }

    /// Conjugacy classes, each sorted, ordered by their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..n)
                .map(|g| self.mul(self.mul(g, a), self.inv(g)))
                .collect();
            cls.sort_unstable();
            cls.dedup();
            for &c in &cls {
                class_of[c] = classes.len();
            }
            classes.push(cls);
        }
        classes
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn check_latin(table: &[Vec<usize>]) -> Result<()> {
    let n = table.len();
    for (i, row) in table.iter().enumerate() {
        let mut seen = vec![false; n];
        for &v in row {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAGroup(format!("row {i} repeats {v}")));
            }
        }
    }
    for j in 0..n {
        let mut seen = vec![false; n];
        for row in table {
            if std::mem::replace(&mut seen[row[j]], true) {
                return Err(Error::NotAGroup(format!("column {j} repeats {}", row[j])));
            }
        }
    }
    Ok(())
}

/// Classifies |G| as trivial, a prime power, or neither.
pub fn is_p_group(g: &Group) -> PGroupKind {
    classify_order(g.order())
}

/// Builds one of the standard small groups with a canonical element order.
///
/// * `Cyclic(n)`: element i is g^i; generator g = 1.
/// * `Dihedral(n)`: k < n is r^k, k >= n is r^(k-n) s; generators r = 1, s = n.
/// * `ElementaryAbelian(p, k)`: element i has base-p digits as coordinates;
///   generators are the unit vectors p^j.
pub fn standard_group(kind: StandardKind) -> Result<Group> {
    match kind {
        StandardKind::Cyclic(n) => {
            if n == 0 {
                return Err(Error::BadParams("cyclic group needs n >= 1".into()));
            }
            let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
            let names = (0..n)
                .map(|i| match i {
                    0 => "e".to_string(),
                    1 => "g".to_string(),
                    _ => format!("g^{i}"),
                })
                .collect();
            let gens = if n == 1 { vec![] } else { vec![1] };
            Group::from_table(&format!("C{n}"), names, table, gens)
        }
        StandardKind::Dihedral(n) => {
            if n < 3 {
                return Err(Error::BadParams("dihedral group needs n >= 3".into()));
            }
            let split = |x: usize| (x % n, x / n);
            let table = (0..2 * n)
                .map(|a| {
                    (0..2 * n)
                        .map(|b| {
                            let ((i, s), (j, t)) = (split(a), split(b));
                            let k = if s == 0 { i + j } else { i + n - j } % n;
                            k + n * ((s + t) % 2)
                        })
                        .collect()
                })
                .collect();
            let names = (0..2 * n)
                .map(|x| {
                    let (i, s) = split(x);
                    let r = match i {
                        0 => String::new(),
                        1 => "r".into(),
                        _ => format!("r^{i}"),
                    };
                    match (r.is_empty(), s) {
                        (true, 0) => "e".into(),
                        (_, 0) => r,
                        _ => format!("{r}s"),
                    }
                })
                .collect();
            Group::from_table(&format!("D{n}"), names, table, vec![1, n])
        }
        StandardKind::ElementaryAbelian(p, k) => {
            if !is_prime(p) || k == 0 {
                return Err(Error::BadParams(
                    "elementary abelian group needs p prime and k >= 1".into(),
                ));
            }
            let order = (p as usize)
                .checked_pow(k)
                .filter(|&o| o <= 4096)
                .ok_or_else(|| Error::BadParams("group too large".into()))?;
            let p = p as usize;
            let digits = |mut x: usize| {
                (0..k)
                    .map(|_| {
                        let d = x % p;
                        x /= p;
                        d
                    })
                    .collect::<Vec<_>>()
            };
            let table = (0..order)
                .map(|a| {
                    let da = digits(a);
                    (0..order)
                        .map(|b| {
                            digits(b)
                                .iter()
                                .zip(&da)
                                .rev()
                                .fold(0, |acc, (x, y)| acc * p + (x + y) % p)
                        })
                        .collect()
                })
                .collect();
            let names = (0..order)
                .map(|x| {
                    let d: Vec<String> = digits(x).iter().map(|v| v.to_string()).collect();
                    format!("({})", d.join(","))
                })
                .collect();
            let gens = (0..k).map(|j| p.pow(j)).collect();
            Group::from_table(&format!("E{p}^{k}"), names, table, gens)
        }
    }
}
