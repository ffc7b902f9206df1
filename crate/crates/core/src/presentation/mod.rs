//! Alphabets, words and forbidden-factor legality.

mod automaton;
mod json;
mod word;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exec::Exec;
use automaton::FactorAutomaton;
pub(crate) use automaton::DEAD;

pub use json::{PresentationDoc, WordDoc};
pub use word::{all_words, Word};

/// Default cap on the candidate space `|G|^r` when materializing `L_r`.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 10_000_000;

/// A generator: its position in the generator list and its name.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub name: String,
}

/// A finitely presented monomial algebra `k<G>/(F)`.
#[derive(Clone)]
pub struct Presentation {
    generators: Vec<Letter>,
    forbidden: Vec<Word>,
    normalized: Vec<Word>,
    ell: usize,
    compact: bool,
    automaton: FactorAutomaton,
    enumeration_bound: u64,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let forbidden: Vec<String> = self.forbidden.iter().map(|w| self.render(w)).collect();
        f.debug_struct("Presentation")
            .field("generators", &self.generator_names())
            .field("forbidden", &forbidden)
            .field("ell", &self.ell)
            .finish()
    }
}

impl Presentation {
    /// Builds a presentation from generator names and forbidden words given
    /// as index sequences. Duplicate forbidden words are merged.
    pub fn new<S: Into<String>>(names: Vec<S>, forbidden: Vec<Word>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::NoGenerators);
        }
        Self::build(names, forbidden)
    }

    /// As [`Presentation::new`], but an empty generator list yields the
    /// trivial algebra `k`. A Veronese subalgebra whose blocks are all
    /// illegal is of this kind.
    pub(crate) fn build(names: Vec<String>, forbidden: Vec<Word>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for name in &names {
            if name.is_empty() {
                return Err(Error::EmptyGeneratorName);
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        let generators: Vec<Letter> = names
            .into_iter()
            .enumerate()
            .map(|(index, name)| Letter { index, name })
            .collect();
        let compact = generators.iter().all(|g| g.name.chars().count() == 1);
        for w in &forbidden {
            if let Some(&x) = w.letters().iter().find(|&&x| x >= generators.len()) {
                return Err(Error::UnknownGenerator(format!("#{x}")));
            }
        }
        let forbidden: Vec<Word> = forbidden
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut p = Presentation {
            automaton: FactorAutomaton::new(generators.len(), &[]),
            generators,
            normalized: Vec::new(),
            ell: 1,
            compact,
            forbidden: Vec::new(),
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
        };
        for w in &forbidden {
            if w.len() <= 1 {
                return Err(Error::ShortRelation(p.render(w)));
            }
        }
        p.normalized = normalize_forbidden(&forbidden);
        p.ell = forbidden.iter().map(|w| w.len() - 1).max().unwrap_or(1);
        p.automaton = FactorAutomaton::new(p.generators.len(), &p.normalized);
        p.forbidden = forbidden;
        Ok(p)
    }

    /// Builds a presentation from generator names and relations spelled with
    /// those names (see [`Presentation::parse_word`]).
    pub fn from_strs(names: &[&str], relations: &[&str]) -> Result<Self> {
        let probe = Presentation::new(names.to_vec(), Vec::new())?;
        let words = relations
            .iter()
            .map(|r| probe.parse_word(r))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(names.to_vec(), words)
    }

    /// Replaces the enumeration guard (candidate count `|G|^r`).
    pub fn with_enumeration_bound(mut self, bound: u64) -> Self {
        self.enumeration_bound = bound;
        self
    }

    pub fn enumeration_bound(&self) -> u64 {
        self.enumeration_bound
    }

    pub fn generators(&self) -> &[Letter] {
        &self.generators
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.name.as_str()).collect()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Forbidden words as given (deduplicated, sorted).
    pub fn forbidden(&self) -> &[Word] {
        &self.forbidden
    }

    /// Forbidden words with no other forbidden word as a factor.
    pub fn normalized_forbidden(&self) -> &[Word] {
        &self.normalized
    }

    /// Window width: longest forbidden length minus one, or 1 when `F` is empty.
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// The window width the normalized relations alone would give.
    pub fn normalized_ell(&self) -> usize {
        self.normalized
            .iter()
            .map(|w| w.len() - 1)
            .max()
            .unwrap_or(1)
    }

    /// Whether every generator name is a single character, so that words
    /// can be written as plain strings.
    pub fn is_compact(&self) -> bool {
        self.compact
    }

    /// Renders a word: concatenated names for single-character alphabets,
    /// `·`-joined otherwise; the empty word renders as `1`.
    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let sep = if self.compact { "" } else { "·" };
        w.letters()
            .iter()
            .map(|&x| self.generators[x].name.as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn letter_index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Parses a word. Compact alphabets read one character per letter; other
    /// alphabets expect names separated by whitespace, `.` or `·`.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        if self.compact {
            s.chars()
                .map(|c| self.letter_index(&c.to_string()))
                .collect::<Result<Vec<_>>>()
                .map(Word::new)
        } else {
            s.split(|c: char| c.is_whitespace() || c == '.' || c == '·')
                .filter(|t| !t.is_empty())
                .map(|t| self.letter_index(t))
                .collect::<Result<Vec<_>>>()
                .map(Word::new)
        }
    }

    pub fn word_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Word> {
        names
            .iter()
            .map(|n| self.letter_index(n.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    /// Legality via the factor automaton.
    pub fn is_legal(&self, w: &Word) -> bool {
        self.automaton.accepts(w)
    }

    /// Whether some `v` in `L_len` makes `u v` legal.
    pub fn has_legal_extension(&self, u: &Word, len: usize) -> bool {
        let state = self.automaton.run(self.automaton.start(), u.letters());
        state != DEAD && self.extends(state, len)
    }

    fn extends(&self, state: u32, len: usize) -> bool {
        if len == 0 {
            return true;
        }
        (0..self.num_generators()).any(|x| {
            let next = self.automaton.step(state, x);
            next != DEAD && self.extends(next, len - 1)
        })
    }

    pub(crate) fn automaton_start(&self) -> u32 {
        self.automaton.start()
    }

    /// One automaton step; `None` once the word read so far is illegal.
    pub(crate) fn automaton_step(&self, state: u32, x: usize) -> Option<u32> {
        let next = self.automaton.step(state, x);
        (next != DEAD).then_some(next)
    }

    /// Raw automaton step; stays at [`DEAD`] once a forbidden factor is seen.
    pub(crate) fn automaton_step_raw(&self, state: u32, x: usize) -> u32 {
        self.automaton.step(state, x)
    }

    pub(crate) fn check_guard(&self, len: usize) -> Result<()> {
        let candidates = BigUint::from(self.num_generators()).pow(len as u32);
        if candidates > BigUint::from(self.enumeration_bound) {
            return Err(Error::EnumerationGuard {
                length: len,
                candidates: candidates.to_string(),
                bound: self.enumeration_bound,
            });
        }
        Ok(())
    }

    /// `L_r`: legal words of length `r` in lexicographic order.
    pub fn legal_words(&self, r: usize) -> Result<Vec<Word>> {
        self.legal_words_with(r, Exec::default())
    }

    pub fn legal_words_with(&self, r: usize, exec: Exec) -> Result<Vec<Word>> {
        self.check_guard(r)?;
        // split on short prefixes so the parallel mode has enough tasks
        let g = self.num_generators();
        let mut depth = 0;
        while depth < r && g.pow(depth as u32) < 64 {
            depth += 1;
        }
        let mut prefixes = Vec::new();
        let mut buf = Word::empty();
        self.collect_legal(self.automaton.start(), depth, &mut buf, &mut |w, s| {
            prefixes.push((w.clone(), s))
        });
        let parts = exec.map(&prefixes, |(prefix, state)| {
            let mut out = Vec::new();
            let mut buf = prefix.clone();
            self.collect_legal(*state, r - depth, &mut buf, &mut |w, _| out.push(w.clone()));
            out
        });
        Ok(parts.into_iter().flatten().collect())
    }

    fn collect_legal(
        &self,
        state: u32,
        remaining: usize,
        buf: &mut Word,
        emit: &mut dyn FnMut(&Word, u32),
    ) {
        if remaining == 0 {
            emit(buf, state);
            return;
        }
        for x in 0..self.num_generators() {
            let next = self.automaton.step(state, x);
            if next != DEAD {
                buf.push(x);
                self.collect_legal(next, remaining - 1, buf, emit);
                buf.pop();
            }
        }
    }

    /// `|L_r|` by dynamic programming over the factor automaton; no
    /// materialization, so no enumeration guard.
    pub fn count_legal_words(&self, r: usize) -> BigUint {
        self.automaton.count(r)
    }
}

/// Reference legality test: scans every contiguous factor of `w`.
pub fn is_legal_by_scan(w: &Word, forbidden: &[Word]) -> bool {
    !forbidden.iter().any(|f| w.contains_factor(f))
}

/// Drops every forbidden word that has a distinct forbidden word as a factor.
/// The generated ideal, and therefore legality, is unchanged.
pub fn normalize_forbidden(forbidden: &[Word]) -> Vec<Word> {
    let set: BTreeSet<&Word> = forbidden.iter().collect();
    set.iter()
        .filter(|w| !set.iter().any(|f| f != *w && w.contains_factor(f)))
        .map(|w| (*w).clone())
        .collect()
}
