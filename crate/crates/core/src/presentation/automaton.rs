//! Multi-pattern factor automaton over a finite alphabet.
//!
//! Aho-Corasick construction over the forbidden words; a state is dead once
//! the input read so far contains a forbidden factor. Only live states get a
//! transition row, so quadratic presentations with many relations stay small.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigUint;
use num_traits::Zero;

use super::Word;

pub(crate) const DEAD: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct FactorAutomaton {
    alphabet: usize,
    // live_states x alphabet, entries are live state ids or DEAD
    delta: Vec<u32>,
    live: usize,
}

impl FactorAutomaton {
    pub(crate) fn new(alphabet: usize, forbidden: &[Word]) -> Self {
        let mut children: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new()];
        let mut terminal = vec![false];
        for word in forbidden {
            let mut node = 0;
            for &x in word.letters() {
                node = match children[node].get(&x) {
                    Some(&next) => next,
                    None => {
                        children.push(BTreeMap::new());
                        terminal.push(false);
                        let next = children.len() - 1;
                        children[node].insert(x, next);
                        next
                    }
                };
            }
            terminal[node] = true;
        }

        // BFS order, fail links and dead flags
        let n = children.len();
        let mut fail = vec![0usize; n];
        let mut dead = terminal.clone();
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([0usize]);
        while let Some(node) = queue.pop_front() {
            order.push(node);
            for (&x, &child) in &children[node] {
                if node != 0 {
                    let mut f = fail[node];
                    loop {
                        if let Some(&next) = children[f].get(&x) {
                            fail[child] = next;
                            break;
                        }
                        if f == 0 {
                            fail[child] = 0;
                            break;
                        }
                        f = fail[f];
                    }
                }
                dead[child] = dead[child] || dead[fail[child]];
                queue.push_back(child);
            }
        }

        let mut live_id = vec![DEAD; n];
        let mut live = 0usize;
        for &node in &order {
            if !dead[node] {
                live_id[node] = live as u32;
                live += 1;
            }
        }

        // a live node's fail target is live and shallower, so rows fill in BFS order
        let mut delta = vec![DEAD; live * alphabet];
        for &node in &order {
            if dead[node] {
                continue;
            }
            let row = live_id[node] as usize * alphabet;
            for x in 0..alphabet {
                delta[row + x] = match children[node].get(&x) {
                    Some(&child) => live_id[child],
                    None if node == 0 => 0,
                    None => delta[live_id[fail[node]] as usize * alphabet + x],
                };
            }
        }
        FactorAutomaton {
            alphabet,
            delta,
            live,
        }
    }

    pub(crate) fn start(&self) -> u32 {
        0
    }

    #[inline]
    pub(crate) fn step(&self, state: u32, x: usize) -> u32 {
        if state == DEAD {
            DEAD
        } else {
            self.delta[state as usize * self.alphabet + x]
        }
    }

    pub(crate) fn run(&self, state: u32, letters: &[usize]) -> u32 {
        letters.iter().fold(state, |s, &x| self.step(s, x))
    }

    pub(crate) fn accepts(&self, word: &Word) -> bool {
        self.run(self.start(), word.letters()) != DEAD
    }

    /// Number of words of length `len` that never reach the dead state.
    pub(crate) fn count(&self, len: usize) -> BigUint {
        let mut counts = vec![BigUint::zero(); self.live];
        counts[0] = BigUint::from(1u32);
        for _ in 0..len {
            let mut next = vec![BigUint::zero(); self.live];
            for (state, c) in counts.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let row = state * self.alphabet;
                for &t in &self.delta[row..row + self.alphabet] {
                    if t != DEAD {
                        next[t as usize] += c;
                    }
                }
            }
            counts = next;
        }
        counts.into_iter().sum()
    }
}
