//! The labeled Ufnarovskii graph and the word/path correspondence.
//!
//! Vertices are the legal words of length `ell`, arrows the legal words of
//! length `ell + 1`; the arrow for `w` runs from the length-`ell` prefix of
//! `w` to its length-`ell` suffix and is labeled by the first letter of `w`.
//! A legal word of length `n + ell` corresponds to the length-`n` path
//! through its successive width-`ell` windows.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::pathalg::{
    paths_of_length, to_dot, ArrowId, ArrowNaming, Path, Quiver, QuiverDoc, VertexId,
};
use crate::presentation::{Presentation, Word};

#[derive(Clone, Debug)]
pub struct UfnarovskiiGraph {
    presentation: Presentation,
    quiver: Quiver,
    vertex_of: HashMap<Word, VertexId>,
    arrow_of: HashMap<Word, ArrowId>,
}

/// Builds the Ufnarovskii graph of `p`.
pub fn build_ufnarovskii(p: &Presentation) -> Result<UfnarovskiiGraph> {
    UfnarovskiiGraph::new(p)
}

impl UfnarovskiiGraph {
    pub fn new(p: &Presentation) -> Result<Self> {
        let ell = p.ell();
        let vertex_words = p.legal_words(ell)?;
        let arrow_words = p.legal_words(ell + 1)?;

        let mut quiver = Quiver::new();
        let mut vertex_of = HashMap::with_capacity(vertex_words.len());
        for w in vertex_words {
            let id = quiver.add_vertex(p.render(&w), Some(w.clone()));
            vertex_of.insert(w, id);
        }
        let mut arrow_of = HashMap::with_capacity(arrow_words.len());
        let mut pairs = HashMap::new();
        for w in arrow_words {
            let source = vertex_of[&w.prefix(ell)];
            let target = vertex_of[&w.suffix(ell)];
            let label = w.first();
            let id = quiver.add_arrow(p.render(&w), source, target, label, Some(w.clone()))?;
            assert!(
                pairs.insert((source, target), id).is_none(),
                "two arrows between one ordered vertex pair"
            );
            arrow_of.insert(w, id);
        }
        let graph = UfnarovskiiGraph {
            presentation: p.clone(),
            quiver,
            vertex_of,
            arrow_of,
        };
        for a in graph.quiver.arrows() {
            // stored label must agree with the payload and the source vertex
            let payload = a.payload.as_ref().expect("payload");
            assert_eq!(a.label, payload.first());
            assert_eq!(
                a.label,
                graph
                    .quiver
                    .vertex(a.source)
                    .payload
                    .as_ref()
                    .and_then(Word::first)
            );
        }
        Ok(graph)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn ell(&self) -> usize {
        self.presentation.ell()
    }

    pub fn vertex_of(&self, w: &Word) -> Option<VertexId> {
        self.vertex_of.get(w).copied()
    }

    pub fn arrow_of(&self, w: &Word) -> Option<ArrowId> {
        self.arrow_of.get(w).copied()
    }

    pub fn vertex_word(&self, v: VertexId) -> &Word {
        self.quiver
            .vertex(v)
            .payload
            .as_ref()
            .expect("vertex payload")
    }

    pub fn arrow_word(&self, a: ArrowId) -> &Word {
        self.quiver
            .arrow(a)
            .payload
            .as_ref()
            .expect("arrow payload")
    }

    pub fn arrow_label(&self, a: ArrowId) -> usize {
        self.quiver.arrow(a).label.expect("arrow label")
    }

    /// The path through the width-`ell` windows of `w`.
    pub fn word_to_path(&self, w: &Word) -> Result<Path> {
        let ell = self.ell();
        if w.len() < ell {
            return Err(Error::WordTooShort {
                word: self.presentation.render(w),
                ell,
            });
        }
        if !self.presentation.is_legal(w) {
            return Err(Error::IllegalWord(self.presentation.render(w)));
        }
        if w.len() == ell {
            return Ok(Path::trivial(self.vertex_of[w]));
        }
        let arrows: Vec<ArrowId> = w
            .windows(ell + 1)
            .map(|window| self.arrow_of[&window])
            .collect();
        Path::from_arrows(&self.quiver, &arrows)
    }

    /// Overlap-merges the arrow payloads of `p` back into a word of length
    /// `len(p) + ell`.
    pub fn path_to_word(&self, p: &Path) -> Word {
        let mut w = self.vertex_word(p.source()).clone();
        for &a in p.arrows() {
            w.push(self.arrow_word(a).last().expect("nonempty payload"));
        }
        w
    }

    /// Every path whose label sequence is `u`, found by walking forward from
    /// the vertices that carry an arrow labeled `u[0]`.
    pub fn paths_with_label(&self, u: &Word) -> Vec<Path> {
        let Some(first) = u.first() else {
            return Vec::new();
        };
        let q = &self.quiver;
        let mut frontier: Vec<Path> = (0..q.num_vertices())
            .flat_map(|v| q.out_arrows(v).iter().copied())
            .filter(|&a| q.arrow(a).label == Some(first))
            .map(|a| Path::arrow(q, a))
            .collect();
        for &x in &u.letters()[1..] {
            frontier = frontier
                .iter()
                .flat_map(|p| {
                    q.out_arrows(p.target())
                        .iter()
                        .filter(move |&&a| q.arrow(a).label == Some(x))
                        .map(move |&a| p.then_arrow(q, a).expect("out arrow composes"))
                })
                .collect();
            if frontier.is_empty() {
                break;
            }
        }
        frontier.sort();
        frontier
    }

    /// Whether some `v` in `L_ell` makes `u v` legal; equivalent to a path
    /// labeled `u` existing.
    pub fn path_exists_labeled(&self, u: &Word) -> bool {
        self.presentation.has_legal_extension(u, self.ell())
    }

    pub fn paths_of_length(&self, n: usize) -> Vec<Path> {
        paths_of_length(&self.quiver, n)
    }

    pub fn to_dot(&self, naming: ArrowNaming) -> String {
        to_dot(&self.quiver, naming, Some(&self.presentation))
    }

    pub fn to_doc(&self) -> QuiverDoc {
        self.quiver.to_doc(Some(&self.presentation))
    }
}
