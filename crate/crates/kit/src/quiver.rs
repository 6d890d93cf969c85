//! JSON file format for graded quivers.
//!
//! ```json
//! { "algebra": {"family": "A", "rank": 1}, "level": 2,
//!   "vertices": [{"id": "1", "grade": [0]}, ...],
//!   "edges": [{"from": "1", "to": "2", "grade_fundamental": 1, "multiplicity": 1}, ...] }
//! ```
//!
//! `grade_fundamental` is the 1-based index `j` of the fundamental weight
//! `w_j`. Vertex grades are coordinates in the center `Z(g)`; omit them on
//! every vertex for an ungraded quiver.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use verlinde_core::gusrep::{QuiverEdge, QuiverVertex};
use verlinde_core::{Error, Family, GradedQuiver};

use crate::error::{KitError, KitResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub family: String,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexSpec {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grade: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub from: String,
    pub to: String,
    pub grade_fundamental: usize,
    pub multiplicity: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub algebra: AlgebraSpec,
    pub level: u64,
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<EdgeSpec>,
}

fn schema(msg: String) -> KitError {
    KitError::Core(Error::Schema(msg))
}

impl QuiverFile {
    pub fn load(path: &Path) -> KitResult<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|source| KitError::Io { path: path.to_path_buf(), source })?;
        serde_json::from_str(&text).map_err(|source| KitError::Json { path: path.to_path_buf(), source })
    }

    pub fn to_quiver(&self) -> KitResult<GradedQuiver> {
        let mut chars = self.algebra.family.chars();
        let family = match (chars.next().map(|c| c.to_ascii_uppercase()).and_then(Family::from_char), chars.next()) {
            (Some(f), None) => f,
            _ => return Err(schema(format!("unknown family {:?}", self.algebra.family))),
        };
        let mut index = BTreeMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.id.as_str(), i).is_some() {
                return Err(schema(format!("duplicate vertex id {:?}", v.id)));
            }
        }
        let graded = self.vertices.iter().filter(|v| v.grade.is_some()).count();
        if graded != 0 && graded != self.vertices.len() {
            return Err(schema("either every vertex or no vertex carries a grade".into()));
        }
        let lookup = |id: &str| index.get(id).copied().ok_or_else(|| schema(format!("unknown vertex id {id:?}")));
        let edges = self
            .edges
            .iter()
            .map(|e| {
                if e.grade_fundamental == 0 {
                    return Err(schema("grade_fundamental is 1-based".into()));
                }
                Ok(QuiverEdge {
                    from: lookup(&e.from)?,
                    to: lookup(&e.to)?,
                    grade: e.grade_fundamental - 1,
                    multiplicity: e.multiplicity,
                })
            })
            .collect::<KitResult<Vec<_>>>()?;
        Ok(GradedQuiver {
            family,
            rank: self.algebra.rank,
            level: self.level,
            vertices: self.vertices.iter().map(|v| QuiverVertex { id: v.id.clone(), grade: v.grade.clone() }).collect(),
            edges,
        })
    }

    pub fn from_quiver(q: &GradedQuiver) -> Self {
        QuiverFile {
            algebra: AlgebraSpec { family: q.family.as_char().to_string(), rank: q.rank },
            level: q.level,
            vertices: q.vertices.iter().map(|v| VertexSpec { id: v.id.clone(), grade: v.grade.clone() }).collect(),
            edges: q
                .edges
                .iter()
                .map(|e| EdgeSpec {
                    from: q.vertices[e.from].id.clone(),
                    to: q.vertices[e.to].id.clone(),
                    grade_fundamental: e.grade + 1,
                    multiplicity: e.multiplicity,
                })
                .collect(),
        }
    }
}
