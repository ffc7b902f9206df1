//! The homomorphism `f` from the monomial algebra into the path algebra of
//! its Ufnarovskii graph, and the short words that generate its kernel.
//!
//! `f` sends a generator to the sum of all arrows carrying its label, hence a
//! word to the sum of all paths carrying that word as label. Its kernel is
//! spanned by the illegal words together with the legal words having a
//! suffix of length at most `ell` that labels no path.

mod checks;

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::pathalg::{Path, PathSum};
use crate::presentation::{all_words, Presentation, Word};
use crate::ufngraph::UfnarovskiiGraph;

pub use checks::{
    verify_cokernel_stability, verify_images, verify_independence, verify_kernel_annihilation,
    verify_relations_killed, SweepOptions,
};

/// `f` together with the cached images of the generators.
#[derive(Clone, Debug)]
pub struct Homomorphism<'g> {
    graph: &'g UfnarovskiiGraph,
    letters: Vec<PathSum>,
}

impl<'g> Homomorphism<'g> {
    pub fn new(graph: &'g UfnarovskiiGraph) -> Self {
        let q = graph.quiver();
        let letters = (0..graph.presentation().num_generators())
            .map(|x| {
                PathSum::from_paths(
                    (0..q.num_arrows())
                        .filter(|&a| q.arrow(a).label == Some(x))
                        .map(|a| Path::arrow(q, a)),
                )
                .expect("arrows share degree 1")
            })
            .collect();
        Homomorphism { graph, letters }
    }

    pub fn graph(&self) -> &'g UfnarovskiiGraph {
        self.graph
    }

    /// Sum of all arrows labeled `x` (zero if there are none).
    pub fn f_letter(&self, x: usize) -> &PathSum {
        &self.letters[x]
    }

    /// `f(x_1)···f(x_r)`; the empty word maps to the identity `Σ e_v`.
    pub fn f_word(&self, w: &Word) -> PathSum {
        match w.letters().split_first() {
            None => PathSum::identity(self.graph.quiver()),
            Some((&first, rest)) => rest.iter().fold(self.letters[first].clone(), |acc, &x| {
                acc.multiply(&self.letters[x])
            }),
        }
    }

    /// Sum of the paths returned by the label walk; agrees with
    /// [`Homomorphism::f_word`] on nonempty words.
    pub fn f_word_by_walk(&self, w: &Word) -> PathSum {
        PathSum::from_paths(self.graph.paths_with_label(w)).expect("paths of one length")
    }
}

/// A member of the kernel generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KernelWord {
    pub word: Word,
    /// Illegal members already lie in the relation ideal.
    pub legal: bool,
}

/// Words of length `1..=ell` that label no path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelData {
    ell: usize,
    words: Vec<KernelWord>,
    lookup: HashSet<Word>,
}

impl KernelData {
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn words(&self) -> &[KernelWord] {
        &self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.lookup.contains(w)
    }

    /// Legal members only; these are the generators beyond the relations.
    pub fn legal_words(&self) -> impl Iterator<Item = &Word> {
        self.words.iter().filter(|k| k.legal).map(|k| &k.word)
    }

    /// Whether some suffix of `w` of length at most `ell` is a member.
    pub fn suffix_criterion(&self, w: &Word) -> bool {
        (1..=self.ell.min(w.len())).any(|len| self.lookup.contains(&w.suffix(len)))
    }
}

/// All words of length `1..=ell` with no labeled path, in length-then-lex order.
pub fn kernel_generators(graph: &UfnarovskiiGraph) -> Result<KernelData> {
    let p = graph.presentation();
    let ell = p.ell();
    let mut words = Vec::new();
    for len in 1..=ell {
        let candidates = (p.num_generators() as f64).powi(len as i32);
        if candidates > p.enumeration_bound() as f64 {
            return Err(Error::EnumerationGuard {
                length: len,
                candidates: format!("{candidates}"),
                bound: p.enumeration_bound(),
            });
        }
        for w in all_words(p.num_generators(), len) {
            if graph.paths_with_label(&w).is_empty() {
                let legal = p.is_legal(&w);
                words.push(KernelWord { word: w, legal });
            }
        }
    }
    let lookup = words.iter().map(|k| k.word.clone()).collect();
    Ok(KernelData { ell, words, lookup })
}

/// Whether the legal word `w` is killed by `f`, decided by the suffix
/// criterion. Illegal words are rejected: they lie in the relation ideal.
pub fn kernel_membership(w: &Word, kernel: &KernelData, p: &Presentation) -> Result<bool> {
    if !p.is_legal(w) {
        return Err(Error::IllegalWord(p.render(w)));
    }
    Ok(kernel.suffix_criterion(w))
}

/// Dimensions of the degree-`r` pieces of the algebra, the kernel of `f`
/// and its image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeDims {
    pub degree: usize,
    pub dim: u64,
    pub kernel: u64,
    pub image: u64,
}

pub fn kernel_dimensions(
    p: &Presentation,
    kernel: &KernelData,
    max_degree: usize,
    exec: Exec,
) -> Result<Vec<DegreeDims>> {
    (0..=max_degree)
        .map(|r| {
            let words = p.legal_words_with(r, exec)?;
            let killed = exec.map(&words, |w| kernel.suffix_criterion(w));
            let kernel_dim = killed.iter().filter(|&&k| k).count() as u64;
            let dim = words.len() as u64;
            Ok(DegreeDims {
                degree: r,
                dim,
                kernel: kernel_dim,
                image: dim - kernel_dim,
            })
        })
        .collect()
}
