//! JSON ingestion and emission for groups and towers.
//!
//! Three wire formats, all with an explicit `"format"` discriminator:
//! `cayley-v1` (full multiplication table), `perm-v1` (permutation
//! generators, closed by breadth-first enumeration), and `tower-v1` (a list
//! of group documents plus adjacent connecting maps as image vectors).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::hom::GroupHom;
use crate::tower::ProfiniteTower;

#[derive(Serialize, Deserialize)]
#[serde(tag = "format")]
pub enum GroupDocument {
    #[serde(rename = "cayley-v1")]
    Cayley {
        order: usize,
        table: Vec<Vec<Elem>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    #[serde(rename = "perm-v1")]
    Perm {
        degree: usize,
        generators: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "format", rename = "tower-v1")]
pub struct TowerDocument {
    pub levels: Vec<GroupDocument>,
    /// `maps[k]` is the image vector of the connecting map from level `k+1`
    /// onto level `k`; its length is the order of level `k+1`.
    pub maps: Vec<Vec<Elem>>,
}

impl GroupDocument {
    /// Full validation on ingestion: table documents go through the complete
    /// group-law check, permutation documents through closure enumeration.
    pub fn into_group(self) -> Result<FiniteGroup> {
        match self {
            GroupDocument::Cayley {
                order,
                table,
                label,
            } => FiniteGroup::from_table_labeled(order, table, label),
            GroupDocument::Perm {
                degree,
                generators,
                label,
            } => {
                let g = FiniteGroup::from_permutations(degree, &generators)?;
                Ok(match label {
                    Some(l) => g.with_label(l),
                    None => g,
                })
            }
        }
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupDocument::Cayley {
            order: g.order(),
            table: g.table_rows(),
            label: g.label().map(str::to_owned),
        }
    }
}

/// Parses either group format from a JSON string.
pub fn group_from_json(text: &str) -> Result<FiniteGroup> {
    let doc: GroupDocument = serde_json::from_str(text)?;
    doc.into_group()
}

/// Emits a group as a `cayley-v1` document.
pub fn group_to_json(g: &FiniteGroup) -> String {
    serde_json::to_string(&GroupDocument::from_group(g)).expect("group document serializes")
}

/// Parses a `tower-v1` document: every level is validated as a group, every
/// map as a surjective-or-not homomorphism vector with the right endpoints.
/// Surjectivity itself is left to the validation report, matching the
/// report-style contract.
pub fn tower_from_json(text: &str) -> Result<ProfiniteTower> {
    let doc: TowerDocument = serde_json::from_str(text)?;
    let levels: Vec<FiniteGroup> = doc
        .levels
        .into_iter()
        .map(GroupDocument::into_group)
        .collect::<Result<_>>()?;
    if doc.maps.len() + 1 != levels.len() {
        return Err(Error::BadParams(format!(
            "tower with {} levels needs {} maps, got {}",
            levels.len(),
            levels.len().saturating_sub(1),
            doc.maps.len()
        )));
    }
    let connecting: Vec<GroupHom> = doc
        .maps
        .into_iter()
        .enumerate()
        .map(|(k, image_of)| GroupHom::new(levels[k + 1].clone(), levels[k].clone(), image_of))
        .collect::<Result<_>>()?;
    ProfiniteTower::new(levels, connecting)
}

/// Emits a tower as a `tower-v1` document with `cayley-v1` levels.
pub fn tower_to_json(t: &ProfiniteTower) -> String {
    let doc = TowerDocument {
        levels: t.levels().iter().map(GroupDocument::from_group).collect(),
        maps: (0..t.depth() - 1)
            .map(|k| t.connecting(k).image_vector().to_vec())
            .collect(),
    };
    serde_json::to_string(&doc).expect("tower document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{named_group, NamedGroupSpec};

    #[test]
    fn cayley_roundtrip() {
        let g = named_group(&NamedGroupSpec::Symmetric(3)).unwrap();
        let text = group_to_json(&g);
        let back = group_from_json(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn perm_document_closure() {
        let text = r#"{"format":"perm-v1","degree":3,"generators":[[1,0,2],[0,2,1]],"label":"S3"}"#;
        let g = group_from_json(text).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(), Some("S3"));
    }

    #[test]
    fn invalid_table_rejected() {
        let text = r#"{"format":"cayley-v1","order":2,"table":[[0,1],[1,1]]}"#;
        assert!(group_from_json(text).is_err());
    }

    #[test]
    fn unknown_format_rejected() {
        let text = r#"{"format":"cayley-v2","order":1,"table":[[0]]}"#;
        assert!(matches!(group_from_json(text), Err(Error::Json(_))));
    }

    #[test]
    fn tower_roundtrip() {
        let c2 = named_group(&NamedGroupSpec::Cyclic(2)).unwrap();
        let c4 = named_group(&NamedGroupSpec::Cyclic(4)).unwrap();
        let map = GroupHom::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        let t = ProfiniteTower::new(vec![c2, c4], vec![map]).unwrap();
        let text = tower_to_json(&t);
        let back = tower_from_json(&text).unwrap();
        assert_eq!(back.depth(), 2);
        assert_eq!(back.connecting(0).image_vector(), t.connecting(0).image_vector());
    }

    #[test]
    fn tower_with_wrong_map_count_rejected() {
        let text = r#"{"format":"tower-v1","levels":[{"format":"cayley-v1","order":1,"table":[[0]]}],"maps":[[0]]}"#;
        assert!(tower_from_json(text).is_err());
    }
}
