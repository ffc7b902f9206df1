//! Quivers, path-algebra arithmetic, incidence matrices and path counting.

mod dot;
mod isomorphism;
mod matrix;
mod pathsum;
mod quiver;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::presentation::Presentation;
use crate::report::CheckReport;
use crate::ufngraph::UfnarovskiiGraph;

pub use dot::{to_dot, ArrowNaming};
pub use isomorphism::{graphs_isomorphic, matrices_isomorphic, DEFAULT_VERTEX_BOUND};
pub use matrix::{
    count_paths, count_paths_with, path_count_totals, BigMatrix, IncidenceMatrix, NatMatrix,
};
pub use pathsum::PathSum;
pub use quiver::{
    paths_of_length, Arrow, ArrowDoc, ArrowId, Path, Quiver, QuiverDoc, Vertex, VertexDoc, VertexId,
};

/// Quiver with `M[u][v]` unlabeled arrows `u -> v`. Vertices are named by
/// index; arrows `u->v#k` for the `k`-th parallel arrow.
pub fn quiver_from_matrix(m: &IncidenceMatrix) -> Result<Quiver> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "incidence matrix must be square, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let mut q = Quiver::new();
    for v in 0..m.rows() {
        q.add_vertex(v.to_string(), None);
    }
    for u in 0..m.rows() {
        for v in 0..m.cols() {
            for k in 0..m.get(u, v) {
                q.add_arrow(format!("{u}->{v}#{k}"), u, v, None, None)?;
            }
        }
    }
    Ok(q)
}

/// The pair of quivers with incidence matrices `L·R` and `R·L`.
pub fn lr_rl_pair(left: &NatMatrix, right: &NatMatrix) -> Result<(Quiver, Quiver)> {
    if left.cols() != right.rows() || right.cols() != left.rows() {
        return Err(Error::DimensionMismatch(format!(
            "L is {}x{}, R is {}x{}; need m x n and n x m",
            left.rows(),
            left.cols(),
            right.rows(),
            right.cols()
        )));
    }
    Ok((
        quiver_from_matrix(&left.mul(right)?)?,
        quiver_from_matrix(&right.mul(left)?)?,
    ))
}

/// How a quiver matched a reference: as drawn, after reversing every arrow,
/// both, or neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatchVariant {
    Direct,
    Transposed,
    Both,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub variant: MatchVariant,
    /// Vertex bijection for the direct match, if any.
    pub direct: Option<Vec<usize>>,
    /// Vertex bijection after transposing the candidate's incidence matrix.
    pub transposed: Option<Vec<usize>>,
}

/// Compares `candidate` with `reference` as drawn and with all arrows reversed.
pub fn compare_up_to_transpose(
    candidate: &Quiver,
    reference: &Quiver,
    vertex_bound: usize,
) -> Result<Comparison> {
    let direct = graphs_isomorphic(candidate, reference, vertex_bound)?;
    let transposed = matrices_isomorphic(
        &candidate.incidence().transpose(),
        &reference.incidence(),
        vertex_bound,
    )?;
    let variant = match (&direct, &transposed) {
        (Some(_), Some(_)) => MatchVariant::Both,
        (Some(_), None) => MatchVariant::Direct,
        (None, Some(_)) => MatchVariant::Transposed,
        (None, None) => MatchVariant::None,
    };
    Ok(Comparison {
        variant,
        direct,
        transposed,
    })
}

/// Dimension count on both sides of the word/path bijection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTail {
    pub ell: usize,
    /// `|L_{n+ell}|` for `n = 0..=N`.
    pub legal_words: Vec<String>,
    /// Total number of length-`n` paths for `n = 0..=N`.
    pub paths: Vec<String>,
    pub report: CheckReport,
}

/// Checks `|L_{n+ell}|` against the number of length-`n` paths of the
/// Ufnarovskii graph for every `n` up to `max_len`. Word counts come from the
/// factor automaton, path counts from powers of the incidence matrix.
pub fn hilbert_tail_check(
    p: &Presentation,
    graph: &UfnarovskiiGraph,
    max_len: usize,
    exec: Exec,
) -> HilbertTail {
    let ell = p.ell();
    let words: Vec<BigUint> = exec.map_range(max_len + 1, |n| p.count_legal_words(n + ell));
    let paths = path_count_totals(graph.quiver(), max_len, exec);
    let mismatch = (0..=max_len).find(|&n| words[n] != paths[n]);
    let mut report =
        CheckReport::new("hilbert-tail", 0, max_len).count("degrees", max_len as u64 + 1);
    if let Some(n) = mismatch {
        report = report.fail(format!(
            "n={n}: |L_{}|={} but {} paths",
            n + ell,
            words[n],
            paths[n]
        ));
    }
    HilbertTail {
        ell,
        legal_words: words.iter().map(ToString::to_string).collect(),
        paths: paths.iter().map(ToString::to_string).collect(),
        report,
    }
}
