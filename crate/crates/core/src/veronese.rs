//! Veronese presentations and quiver-with-relations ingestion.
//!
//! For `n >= ell` the degree-`n` legal words serve as new generators, and
//! legality of a long word is decided by adjacent block pairs alone: every
//! forbidden word has length at most `ell + 1 <= n + 1`, so any occurrence
//! fits inside two consecutive blocks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pathalg::{ArrowId, Quiver};
use crate::presentation::{Presentation, Word};
use crate::report::CheckReport;
use crate::ufngraph::{build_ufnarovskii, UfnarovskiiGraph};

#[derive(Clone, Debug)]
pub struct VeronesePresentation {
    base: Presentation,
    n: usize,
    block_letters: Vec<Word>,
    quadratic_relations: Vec<(usize, usize)>,
    presentation: Presentation,
}

/// Presentation of the `n`-th Veronese subalgebra on the blocks `L_n`, with
/// the pairs `(u, v)` whose concatenation is illegal as relations. Block
/// generators are named by their base word unless `aliases` are given.
pub fn veronese_presentation(
    base: &Presentation,
    n: usize,
    aliases: Option<&[String]>,
) -> Result<VeronesePresentation> {
    let ell = base.ell();
    if n < ell {
        return Err(Error::VeroneseBelowBound { n, ell });
    }
    let blocks = base.legal_words(n)?;
    let names: Vec<String> = match aliases {
        Some(a) if a.len() != blocks.len() => {
            return Err(Error::AliasCount {
                expected: blocks.len(),
                got: a.len(),
            })
        }
        Some(a) => a.to_vec(),
        None => blocks.iter().map(|b| base.render(b)).collect(),
    };
    let mut relations = Vec::new();
    for (i, u) in blocks.iter().enumerate() {
        for (j, v) in blocks.iter().enumerate() {
            if !base.is_legal(&u.concat(v)) {
                relations.push((i, j));
            }
        }
    }
    // L_n may be empty, in which case the Veronese subalgebra is just k
    let presentation = Presentation::build(
        names,
        relations
            .iter()
            .map(|&(i, j)| Word::new(vec![i, j]))
            .collect(),
    )?
    .with_enumeration_bound(base.enumeration_bound());
    Ok(VeronesePresentation {
        base: base.clone(),
        n,
        block_letters: blocks,
        quadratic_relations: relations,
        presentation,
    })
}

impl VeronesePresentation {
    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_letters(&self) -> &[Word] {
        &self.block_letters
    }

    pub fn quadratic_relations(&self) -> &[(usize, usize)] {
        &self.quadratic_relations
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Concatenates the blocks of a Veronese word into a base word.
    pub fn to_base(&self, w: &Word) -> Word {
        let mut out = Word::empty();
        for &b in w.letters() {
            for &x in self.block_letters[b].letters() {
                out.push(x);
            }
        }
        out
    }

    /// Chops a base word into blocks; `None` unless its length is a multiple
    /// of `n` and every block is legal.
    pub fn from_base(&self, w: &Word) -> Option<Word> {
        if !w.len().is_multiple_of(self.n) {
            return None;
        }
        w.letters()
            .chunks(self.n)
            .map(|chunk| self.block_letters.binary_search(&Word::from(chunk)).ok())
            .collect::<Option<Vec<_>>>()
            .map(Word::new)
    }

    /// Compares `|L_m|` of the Veronese presentation with `|L_{nm}|` of the
    /// base for `m = 0..=max_m`.
    pub fn hilbert_agreement(&self, max_m: usize) -> HilbertAgreement {
        let rows: Vec<HilbertRow> = (0..=max_m)
            .map(|m| HilbertRow {
                m,
                veronese: self.presentation.count_legal_words(m).to_string(),
                base: self.base.count_legal_words(self.n * m).to_string(),
            })
            .collect();
        let mut report = CheckReport::new("veronese-hilbert-agreement", 0, max_m)
            .count("degrees", max_m as u64 + 1);
        if let Some(row) = rows.iter().find(|r| r.veronese != r.base) {
            report = report.fail(format!("m={}: {} vs {}", row.m, row.veronese, row.base));
        }
        HilbertAgreement { rows, report }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub m: usize,
    pub veronese: String,
    pub base: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertAgreement {
    pub rows: Vec<HilbertRow>,
    pub report: CheckReport,
}

/// The Ufnarovskii graph of a Veronese presentation (window width 1).
pub fn veronese_ufn_graph(vp: &VeronesePresentation) -> Result<UfnarovskiiGraph> {
    build_ufnarovskii(&vp.presentation)
}

/// On-disk quiver with relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverInputDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub forbidden_paths: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub from: String,
    pub to: String,
}

/// A finite quiver with named arrows and a set of forbidden paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverInput {
    quiver: Quiver,
    forbidden_paths: Vec<Vec<ArrowId>>,
}

/// Noted in reports: degree zero of the connected algebra is one copy of the
/// field, while the path-algebra quotient has one idempotent per vertex.
pub const DEGREE_ZERO_NOTE: &str =
    "degree 0 differs: the connected presentation has dimension 1, the quiver algebra one per vertex; only degrees >= 1 are modeled";

impl QuiverInput {
    pub fn new(quiver: Quiver, forbidden_paths: Vec<Vec<ArrowId>>) -> Result<Self> {
        for path in &forbidden_paths {
            let names: Vec<&str> = path
                .iter()
                .map(|&a| {
                    quiver
                        .arrows()
                        .get(a)
                        .map_or("?", |arrow| arrow.name.as_str())
                })
                .collect();
            if path.len() < 2 {
                return Err(Error::IllFormedForbiddenPath(format!(
                    "{names:?} has length < 2"
                )));
            }
            if path.iter().any(|&a| a >= quiver.num_arrows()) {
                return Err(Error::IllFormedForbiddenPath(format!(
                    "{names:?} names an unknown arrow"
                )));
            }
            if path
                .windows(2)
                .any(|w| quiver.arrow(w[0]).target != quiver.arrow(w[1]).source)
            {
                return Err(Error::IllFormedForbiddenPath(format!(
                    "{names:?} is not composable"
                )));
            }
        }
        Ok(QuiverInput {
            quiver,
            forbidden_paths,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: QuiverInputDoc = serde_json::from_str(text)?;
        Self::from_doc(&doc)
    }

    pub fn from_doc(doc: &QuiverInputDoc) -> Result<Self> {
        let mut quiver = Quiver::new();
        let mut vertex_ids = BTreeMap::new();
        for v in &doc.vertices {
            if vertex_ids
                .insert(v.as_str(), quiver.add_vertex(v.clone(), None))
                .is_some()
            {
                return Err(Error::DuplicateGenerator(format!("vertex {v}")));
            }
        }
        let lookup = |v: &str| {
            vertex_ids
                .get(v)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(v.to_string()))
        };
        let mut arrow_ids = BTreeMap::new();
        for a in &doc.arrows {
            let id =
                quiver.add_arrow(a.name.clone(), lookup(&a.from)?, lookup(&a.to)?, None, None)?;
            if arrow_ids.insert(a.name.as_str(), id).is_some() {
                return Err(Error::DuplicateGenerator(a.name.clone()));
            }
        }
        let forbidden = doc
            .forbidden_paths
            .iter()
            .map(|path| {
                path.iter()
                    .map(|name| {
                        arrow_ids
                            .get(name.as_str())
                            .copied()
                            .ok_or_else(|| Error::UnknownArrow(name.clone()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        QuiverInput::new(quiver, forbidden)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn forbidden_paths(&self) -> &[Vec<ArrowId>] {
        &self.forbidden_paths
    }
}

/// Presentation on the arrows: non-composable pairs `ab` and the given
/// forbidden paths are the relations.
pub fn quiver_to_presentation(qi: &QuiverInput) -> Result<Presentation> {
    let q = &qi.quiver;
    let names: Vec<String> = q.arrows().iter().map(|a| a.name.clone()).collect();
    let mut forbidden = Vec::new();
    for a in 0..q.num_arrows() {
        for b in 0..q.num_arrows() {
            if q.arrow(a).target != q.arrow(b).source {
                forbidden.push(Word::new(vec![a, b]));
            }
        }
    }
    forbidden.extend(qi.forbidden_paths.iter().map(|p| Word::new(p.clone())));
    Presentation::new(names, forbidden)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aliases(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn cube_relation_second_veronese() {
        let p = Presentation::from_strs(&["x", "y"], &["yyy"]).unwrap();
        let vp = veronese_presentation(&p, 2, Some(&aliases(&["s", "t", "u", "v"]))).unwrap();
        let vpp = vp.presentation();
        assert_eq!(vpp.generator_names(), ["s", "t", "u", "v"]);
        let rels: Vec<String> = vpp.forbidden().iter().map(|w| vpp.render(w)).collect();
        let mut expected = vec!["vu", "tv", "vv"];
        expected.sort();
        let mut got = rels.clone();
        got.sort();
        assert_eq!(got, expected);
        let g = veronese_ufn_graph(&vp).unwrap();
        assert_eq!(
            (g.quiver().num_vertices(), g.quiver().num_arrows()),
            (4, 13)
        );

        let plain = veronese_presentation(&p, 2, None).unwrap();
        assert_eq!(
            plain.presentation().generator_names(),
            ["xx", "xy", "yx", "yy"]
        );
        assert!(matches!(
            veronese_presentation(&p, 2, Some(&aliases(&["s"]))),
            Err(Error::AliasCount {
                expected: 4,
                got: 1
            })
        ));
    }

    #[test]
    fn nilpotent_base_gives_trivial_veronese() {
        // x^2 = 0: no legal blocks of length 2, so the Veronese is k
        let p = Presentation::from_strs(&["x"], &["xx"]).unwrap();
        let vp = veronese_presentation(&p, 2, None).unwrap();
        assert_eq!(vp.presentation().num_generators(), 0);
        assert!(vp.hilbert_agreement(4).report.passed);
        let g = veronese_ufn_graph(&vp).unwrap();
        assert_eq!((g.quiver().num_vertices(), g.quiver().num_arrows()), (0, 0));
    }

    #[test]
    fn below_window_rejected() {
        let p = Presentation::from_strs(&["x", "y"], &["yyy"]).unwrap();
        assert!(matches!(
            veronese_presentation(&p, 1, None),
            Err(Error::VeroneseBelowBound { n: 1, ell: 2 })
        ));
    }

    #[test]
    fn free_and_identity_cases() {
        let free = Presentation::from_strs(&["x", "y"], &[]).unwrap();
        let vp = veronese_presentation(&free, 3, None).unwrap();
        assert_eq!(vp.presentation().num_generators(), 8);
        assert!(vp.quadratic_relations().is_empty());
        let g = veronese_ufn_graph(&veronese_presentation(&free, 2, None).unwrap()).unwrap();
        assert_eq!(
            (g.quiver().num_vertices(), g.quiver().num_arrows()),
            (4, 16)
        );

        let p = Presentation::from_strs(&["x", "y", "z"], &["zz", "zy"]).unwrap();
        let vp = veronese_presentation(&p, 1, None).unwrap();
        assert_eq!(vp.presentation().generator_names(), p.generator_names());
        assert_eq!(vp.presentation().forbidden(), p.forbidden());
    }

    #[test]
    fn block_chopping() {
        let p = Presentation::from_strs(&["x", "y"], &["yyy"]).unwrap();
        let vp = veronese_presentation(&p, 2, None).unwrap();
        let w = p.parse_word("xyyx").unwrap();
        let v = vp.from_base(&w).unwrap();
        assert_eq!(vp.to_base(&v), w);
        assert!(vp.from_base(&p.parse_word("xyy").unwrap()).is_none());
        assert!(vp.hilbert_agreement(5).report.passed);
    }

    #[test]
    fn two_cycle_quiver() {
        let qi = QuiverInput::from_json(
            r#"{"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"1"}]}"#,
        )
        .unwrap();
        let p = quiver_to_presentation(&qi).unwrap();
        let rels: Vec<String> = p.forbidden().iter().map(|w| p.render(w)).collect();
        assert_eq!(rels, ["aa", "bb"]);
    }

    #[test]
    fn one_vertex_quiver_gives_free_relations_only() {
        let qi = QuiverInput::from_json(
            r#"{"vertices":["o"],"arrows":[{"name":"x","from":"o","to":"o"},{"name":"y","from":"o","to":"o"}],
                "forbidden_paths":[["y","y","y"]]}"#,
        )
        .unwrap();
        let p = quiver_to_presentation(&qi).unwrap();
        let expected = Presentation::from_strs(&["x", "y"], &["yyy"]).unwrap();
        assert_eq!(p.generator_names(), expected.generator_names());
        assert_eq!(p.forbidden(), expected.forbidden());
    }

    #[test]
    fn bad_quiver_inputs() {
        let bad_vertex = r#"{"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"9"}]}"#;
        assert!(matches!(
            QuiverInput::from_json(bad_vertex),
            Err(Error::UnknownVertex(_))
        ));
        let short = r#"{"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"1"}],"forbidden_paths":[["a"]]}"#;
        assert!(matches!(
            QuiverInput::from_json(short),
            Err(Error::IllFormedForbiddenPath(_))
        ));
        let broken = r#"{"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],"forbidden_paths":[["a","a"]]}"#;
        assert!(matches!(
            QuiverInput::from_json(broken),
            Err(Error::IllFormedForbiddenPath(_))
        ));
        let unknown = r#"{"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"1"}],"forbidden_paths":[["a","q"]]}"#;
        assert!(matches!(
            QuiverInput::from_json(unknown),
            Err(Error::UnknownArrow(_))
        ));
        let dup = r#"{"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"1"},{"name":"a","from":"1","to":"1"}]}"#;
        assert!(matches!(
            QuiverInput::from_json(dup),
            Err(Error::DuplicateGenerator(_))
        ));
    }
}
