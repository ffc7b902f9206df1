use std::fmt;

/// A finite sequence of generator indices.
///
/// Words compare lexicographically by index, so words of equal length sort in
/// declared generator order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: usize) -> Self {
        Word(vec![x])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix(&self, len: usize) -> Word {
        Word(self.0[self.0.len() - len..].to_vec())
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(&mut self, x: usize) {
        self.0.push(x);
    }

    pub fn pop(&mut self) -> Option<usize> {
        self.0.pop()
    }

    /// True when `other` occurs as a contiguous factor of `self`.
    pub fn contains_factor(&self, other: &Word) -> bool {
        other.is_empty() || self.0.windows(other.len()).any(|w| w == other.0.as_slice())
    }

    /// Windows of width `width`, left to right.
    pub fn windows(&self, width: usize) -> impl Iterator<Item = Word> + '_ {
        self.0.windows(width).map(|w| Word(w.to_vec()))
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

/// Iterates over every word of length `len` over `alphabet` letters in
/// lexicographic order.
pub fn all_words(alphabet: usize, len: usize) -> impl Iterator<Item = Word> {
    let total = (alphabet as u128)
        .checked_pow(len as u32)
        .unwrap_or(u128::MAX);
    let mut current = vec![0usize; len];
    let mut emitted: u128 = 0;
    std::iter::from_fn(move || {
        if emitted >= total || (alphabet == 0 && len > 0) {
            return None;
        }
        let out = Word(current.clone());
        emitted += 1;
        for slot in current.iter_mut().rev() {
            *slot += 1;
            if *slot < alphabet {
                break;
            }
            *slot = 0;
        }
        Some(out)
    })
}
