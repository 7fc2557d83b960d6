use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::RepFq;
use crate::error::{Error, Result};
use crate::gf::FieldJson;
use crate::grp::{Group, GroupJson};
use crate::matfq::{entries_from_json, entries_to_json};

/// A group given inline or as a path to a group JSON file.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum GroupSource {
    Inline(GroupJson),
    Path(String),
}

impl GroupSource {
    /// Loads the group; relative paths are resolved against `base`.
    pub fn load(&self, base: &Path) -> Result<Group> {
        match self {
            GroupSource::Inline(j) => Group::from_json(j),
            GroupSource::Path(p) => {
                let path = base.join(p);
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                let j: GroupJson = serde_json::from_str(&text)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                Group::from_json(&j)
            }
        }
    }
}

/// Representation JSON: `{"group", "field", "rank", "images": {generator: entries}}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RepJson {
    pub group: GroupSource,
    pub field: FieldJson,
    pub rank: usize,
    pub images: BTreeMap<String, Vec<Vec<Vec<u64>>>>,
}

impl RepJson {
    pub fn from_rep(rep: &RepFq) -> Self {
        let g = rep.group();
        let images = g
            .generators()
            .iter()
            .zip(rep.gen_images())
            .map(|(&gen, m)| (g.element_name(gen).to_string(), entries_to_json(m)))
            .collect();
        RepJson {
            group: GroupSource::Inline(g.to_json()),
            field: FieldJson::from_field(rep.field()),
            rank: rep.rank(),
            images,
        }
    }

    pub fn to_rep(&self, base: &Path) -> Result<RepFq> {
        let group = Arc::new(self.group.load(base)?);
        let field = self.field.to_field()?;
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
                let entries = self
                    .images
                    .get(name)
                    .ok_or_else(|| Error::Parse(format!("missing image for generator {name}")))?;
                let m = entries_from_json(&field, entries)?;
                if m.rows() != self.rank || m.cols() != self.rank {
                    return Err(Error::Parse(format!(
                        "image of {name} is {}x{}, declared rank {}",
                        m.rows(),
                        m.cols(),
                        self.rank
                    )));
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        RepFq::with_rank(group, &field, self.rank, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_extension;
    use crate::grp::{standard_group, StandardKind};
    use crate::matfq::MatFq;

    #[test]
    fn roundtrip() {
        let f4 = build_extension(2, 2, 0).unwrap();
        let d3 = Arc::new(standard_group(StandardKind::Dihedral(3)).unwrap());
        let w = f4.gen();
        let w2 = f4.mul(&w, &w);
        let rot = MatFq::diagonal(&f4, &[w, w2]);
        let refl = MatFq::from_ints(&f4, &[&[0, 1], &[1, 0]]);
        let rep = RepFq::new(d3, &f4, vec![rot, refl]).unwrap();
        let text = serde_json::to_string(&RepJson::from_rep(&rep)).unwrap();
        let back: RepJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_rep(Path::new(".")).unwrap(), rep);
    }
}
