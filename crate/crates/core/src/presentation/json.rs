use serde::{Deserialize, Serialize};

use super::{Presentation, Word};
use crate::error::{Error, Result};

/// A word in JSON: a compact string when every generator name is one
/// character, otherwise an array of generator names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WordDoc {
    Compact(String),
    Names(Vec<String>),
}

/// On-disk presentation: `{"generators": [...], "relations": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    pub generators: Vec<String>,
    #[serde(default)]
    pub relations: Vec<WordDoc>,
}

impl Presentation {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PresentationDoc = serde_json::from_str(text)?;
        Presentation::from_doc(&doc)
    }

    pub fn from_doc(doc: &PresentationDoc) -> Result<Self> {
        let probe = Presentation::new(doc.generators.clone(), Vec::new())?;
        let relations = doc
            .relations
            .iter()
            .map(|r| probe.decode_word(r))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(doc.generators.clone(), relations)
    }

    pub fn to_doc(&self) -> PresentationDoc {
        PresentationDoc {
            generators: self
                .generator_names()
                .iter()
                .map(|s| s.to_string())
                .collect(),
            relations: self
                .forbidden()
                .iter()
                .map(|w| self.encode_word(w))
                .collect(),
        }
    }

    pub fn decode_word(&self, doc: &WordDoc) -> Result<Word> {
        match doc {
            WordDoc::Compact(s) if self.is_compact() => self.parse_word(s),
            WordDoc::Compact(s) => Err(Error::CompactFormUnavailable(s.clone())),
            WordDoc::Names(names) => self.word_from_names(names),
        }
    }

    pub fn encode_word(&self, w: &Word) -> WordDoc {
        if self.is_compact() {
            WordDoc::Compact(
                w.letters()
                    .iter()
                    .map(|&x| self.generators[x].name.as_str())
                    .collect(),
            )
        } else {
            WordDoc::Names(
                w.letters()
                    .iter()
                    .map(|&x| self.generators[x].name.clone())
                    .collect(),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_word_encodings() {
        let p =
            Presentation::from_json(r#"{"generators":["x","y","z"],"relations":["zz",["z","y"]]}"#)
                .unwrap();
        assert_eq!(p.num_generators(), 3);
        assert_eq!(p.forbidden().len(), 2);
        assert_eq!(p.ell(), 1);

        let free = Presentation::from_json(r#"{"generators":["x"],"relations":[]}"#).unwrap();
        assert_eq!(free.ell(), 1);
        assert!(free.forbidden().is_empty());

        let y3 = Presentation::from_json(r#"{"generators":["x","y"],"relations":[["y","y","y"]]}"#)
            .unwrap();
        assert_eq!(y3.ell(), 2);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(
            Presentation::from_json(r#"{"generators":["x","x"],"relations":[]}"#),
            Err(Error::DuplicateGenerator(_))
        ));
        assert!(matches!(
            Presentation::from_json(r#"{"generators":["x"],"relations":["xq"]}"#),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(matches!(
            Presentation::from_json(r#"{"generators":["x","y"],"relations":["y"]}"#),
            Err(Error::ShortRelation(_))
        ));
        assert!(matches!(
            Presentation::from_json(r#"{"generators":[],"relations":[]}"#),
            Err(Error::NoGenerators)
        ));
        assert!(matches!(
            Presentation::from_json(r#"{"generators":["ab","c"],"relations":["abc"]}"#),
            Err(Error::CompactFormUnavailable(_))
        ));
        assert!(matches!(Presentation::from_json("{"), Err(Error::Json(_))));
    }

    #[test]
    fn document_round_trip() {
        let p = Presentation::from_strs(&["ab", "c"], &["c ab", "ab ab c"]).unwrap();
        let text = serde_json::to_string(&p.to_doc()).unwrap();
        let q = Presentation::from_json(&text).unwrap();
        assert_eq!(p.forbidden(), q.forbidden());
    }
}
