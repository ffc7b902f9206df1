//! Worked examples and seeded random presentations for bulk verification.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::presentation::{Presentation, Word};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub presentation: Presentation,
}

/// Size limits for random presentations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusShape {
    pub max_generators: usize,
    pub max_relation_len: usize,
    pub max_relations: usize,
}

impl Default for CorpusShape {
    fn default() -> Self {
        CorpusShape {
            max_generators: 3,
            max_relation_len: 4,
            max_relations: 4,
        }
    }
}

const NAMES: [&str; 8] = ["x", "y", "z", "w", "u", "v", "s", "t"];

/// `x,y,z` with `zz, zy`; `x,y` with `yyy`; `x,y` with `xy, xx`.
pub fn worked_examples() -> Vec<CorpusEntry> {
    let entry = |name: &str, gens: &[&str], rels: &[&str]| CorpusEntry {
        name: name.to_string(),
        presentation: Presentation::from_strs(gens, rels).expect("valid example"),
    };
    vec![
        entry("zz-zy", &["x", "y", "z"], &["zz", "zy"]),
        entry("yyy", &["x", "y"], &["yyy"]),
        entry("xy-xx", &["x", "y"], &["xy", "xx"]),
    ]
}

/// `count` presentations drawn from a ChaCha stream seeded with `seed`.
pub fn random_presentations(seed: u64, count: usize, shape: CorpusShape) -> Vec<CorpusEntry> {
    assert!(shape.max_generators <= NAMES.len() && shape.max_relation_len >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let g = rng.gen_range(1..=shape.max_generators);
            let relations = rng.gen_range(0..=shape.max_relations);
            let forbidden: Vec<Word> = (0..relations)
                .map(|_| {
                    let len = rng.gen_range(2..=shape.max_relation_len);
                    Word::new((0..len).map(|_| rng.gen_range(0..g)).collect())
                })
                .collect();
            let presentation = Presentation::new(NAMES[..g].to_vec(), forbidden)
                .expect("valid random presentation");
            CorpusEntry {
                name: format!("random-{seed}-{i}"),
                presentation,
            }
        })
        .collect()
}

/// Worked examples followed by `count` random presentations.
pub fn corpus(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut out = worked_examples();
    out.extend(random_presentations(seed, count, CorpusShape::default()));
    out
}
