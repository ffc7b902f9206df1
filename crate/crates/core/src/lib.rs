//! Ufnarovskii graphs of finitely presented monomial algebras.
//!
//! A monomial algebra `k<G>/(F)` is described by a [`Presentation`]: an
//! alphabet `G` and a set `F` of forbidden words. Its Ufnarovskii graph has
//! the legal words of length `ell` as vertices and those of length `ell + 1`
//! as arrows, where `ell + 1` is the longest forbidden length. The crate
//! builds the graph, realizes the graded homomorphism `f` into the path
//! algebra, computes the short words generating its kernel, and checks the
//! combinatorial identities behind all of this exhaustively up to a degree
//! bound.
//!
//! ```
//! use ufn_core::{build_ufnarovskii, Homomorphism, Presentation};
//!
//! let p = Presentation::from_strs(&["x", "y"], &["yyy"]).unwrap();
//! let graph = build_ufnarovskii(&p).unwrap();
//! assert_eq!(graph.quiver().num_vertices(), 4);
//! let f = Homomorphism::new(&graph);
//! assert_eq!(f.f_letter(0).len(), 4);
//! ```
//!
//! Data-parallel sweeps run on rayon when the `parallel` feature is on (the
//! default); pass [`Exec::Sequential`] to any `*_with` entry point to stay on
//! one thread.

pub mod corpus;
pub mod error;
pub mod exec;
pub mod hom;
pub mod pathalg;
pub mod presentation;
pub mod report;
pub mod ufngraph;
pub mod verify;
pub mod veronese;

pub use error::{Error, Result};
pub use exec::Exec;
pub use hom::{
    kernel_dimensions, kernel_generators, kernel_membership, DegreeDims, Homomorphism, KernelData,
    KernelWord,
};
pub use pathalg::{
    count_paths, graphs_isomorphic, hilbert_tail_check, lr_rl_pair, quiver_from_matrix,
    ArrowNaming, IncidenceMatrix, NatMatrix, Path, PathSum, Quiver,
};
pub use presentation::{is_legal_by_scan, normalize_forbidden, Letter, Presentation, Word};
pub use report::{CheckReport, VerifyReport};
pub use ufngraph::{build_ufnarovskii, UfnarovskiiGraph};
pub use verify::verify_presentation;
pub use veronese::{
    quiver_to_presentation, veronese_presentation, veronese_ufn_graph, QuiverInput,
    VeronesePresentation,
};
