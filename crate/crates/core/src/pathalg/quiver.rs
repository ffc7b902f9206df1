use serde::{Deserialize, Serialize};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word, WordDoc};

use super::NatMatrix;

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub payload: Option<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
    /// Generator index carried by the arrow, if any.
    pub label: Option<usize>,
    pub payload: Option<Word>,
}

/// A finite quiver. Vertex and arrow ids are positions in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    out: Vec<Vec<ArrowId>>,
    inc: Vec<Vec<ArrowId>>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>, payload: Option<Word>) -> VertexId {
        self.vertices.push(Vertex {
            name: name.into(),
            payload,
        });
        self.out.push(Vec::new());
        self.inc.push(Vec::new());
        self.vertices.len() - 1
    }

    pub fn add_arrow(
        &mut self,
        name: impl Into<String>,
        source: VertexId,
        target: VertexId,
        label: Option<usize>,
        payload: Option<Word>,
    ) -> Result<ArrowId> {
        for v in [source, target] {
            if v >= self.vertices.len() {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
        }
        let id = self.arrows.len();
        self.arrows.push(Arrow {
            name: name.into(),
            source,
            target,
            label,
            payload,
        });
        self.out[source].push(id);
        self.inc[target].push(id);
        Ok(id)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn out_arrows(&self, v: VertexId) -> &[ArrowId] {
        &self.out[v]
    }

    pub fn in_arrows(&self, v: VertexId) -> &[ArrowId] {
        &self.inc[v]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// `M[u][v]` = number of arrows from `u` to `v`.
    pub fn incidence(&self) -> NatMatrix {
        let n = self.num_vertices();
        let mut m = NatMatrix::zeros(n, n);
        for a in &self.arrows {
            *m.get_mut(a.source, a.target) += 1;
        }
        m
    }

    /// The opposite quiver: every arrow reversed, names and payloads kept.
    pub fn opposite(&self) -> Quiver {
        let mut q = Quiver::new();
        for v in &self.vertices {
            q.add_vertex(v.name.clone(), v.payload.clone());
        }
        for a in &self.arrows {
            q.add_arrow(
                a.name.clone(),
                a.target,
                a.source,
                a.label,
                a.payload.clone(),
            )
            .expect("vertices copied");
        }
        q
    }

    /// JSON document; payloads and labels are encoded with `alphabet` when given.
    pub fn to_doc(&self, alphabet: Option<&Presentation>) -> QuiverDoc {
        let encode = |w: &Option<Word>| match (w, alphabet) {
            (Some(w), Some(p)) => Some(p.encode_word(w)),
            _ => None,
        };
        QuiverDoc {
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| VertexDoc {
                    id,
                    name: v.name.clone(),
                    payload: encode(&v.payload),
                })
                .collect(),
            arrows: self
                .arrows
                .iter()
                .enumerate()
                .map(|(id, a)| ArrowDoc {
                    id,
                    name: a.name.clone(),
                    source: a.source,
                    target: a.target,
                    label: match (a.label, alphabet) {
                        (Some(x), Some(p)) => Some(p.generators()[x].name.clone()),
                        _ => None,
                    },
                    payload: encode(&a.payload),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: VertexId,
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub payload: Option<WordDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub id: ArrowId,
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub payload: Option<WordDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub vertices: Vec<VertexDoc>,
    pub arrows: Vec<ArrowDoc>,
}

/// A path: a trivial path at a vertex, or a composable arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: ArrowSeq,
}

// paths in the sweeps rarely exceed a dozen arrows; keep them off the heap
type ArrowSeq = SmallVec<[ArrowId; 12]>;

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            source: v,
            target: v,
            arrows: ArrowSeq::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Self {
        let arrow = q.arrow(a);
        Path {
            source: arrow.source,
            target: arrow.target,
            arrows: smallvec![a],
        }
    }

    /// A path through `arrows`, which must be nonempty and composable.
    pub fn from_arrows(q: &Quiver, arrows: &[ArrowId]) -> Result<Self> {
        let (&first, rest) = arrows
            .split_first()
            .ok_or_else(|| Error::UnknownArrow("empty arrow sequence".into()))?;
        if let Some(&bad) = arrows.iter().find(|&&a| a >= q.num_arrows()) {
            return Err(Error::UnknownArrow(format!("#{bad}")));
        }
        let mut path = Path::arrow(q, first);
        for &a in rest {
            path = path
                .then_arrow(q, a)
                .ok_or(Error::NotComposable(*path.arrows.last().unwrap(), a))?;
        }
        Ok(path)
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Same as [`Path::is_empty`]: a path with no arrows.
    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// First traverse `self`, then `other`; `None` unless `other` starts
    /// where `self` ends.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = ArrowSeq::with_capacity(self.len() + other.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    pub fn then_arrow(&self, q: &Quiver, a: ArrowId) -> Option<Path> {
        let arrow = q.arrow(a);
        if arrow.source != self.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Some(Path {
            source: self.source,
            target: arrow.target,
            arrows,
        })
    }

    /// Vertices visited, including both endpoints.
    pub fn vertices(&self, q: &Quiver) -> Vec<VertexId> {
        let mut out = vec![self.source];
        out.extend(self.arrows.iter().map(|&a| q.arrow(a).target));
        out
    }
}

/// All paths of length `n` in `q`, ordered by source then arrow sequence.
pub fn paths_of_length(q: &Quiver, n: usize) -> Vec<Path> {
    let mut layer: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|p| q.out_arrows(p.target()).iter().map(move |&a| (p, a)))
            .map(|(p, a)| p.then_arrow(q, a).expect("out arrow composes"))
            .collect();
    }
    layer
}
