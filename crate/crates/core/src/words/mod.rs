//! Group words, presentations, and their traces under the two-generator
//! parametrization.

mod fricke;
mod matrix;
mod symmetrize;

use std::fmt;

use crate::error::{Error, Result};

pub use fricke::{trace_poly, trace_poly_with_budget, DEFAULT_LENGTH_BUDGET};
pub use matrix::{
    derive_meridian_trace, eval_word, relation_entries, rep_matrix, word_trace, Mat2, ParamMatrix,
};
pub use symmetrize::{chebyshev, symmetrize};

/// A word in generators (lower case) and their inverses (upper case).
/// Construction never reduces; see [`GroupWord::free_reduce`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupWord {
    letters: Vec<char>,
}

fn inverse_letter(c: char) -> char {
    if c.is_ascii_lowercase() {
        c.to_ascii_uppercase()
    } else {
        c.to_ascii_lowercase()
    }
}

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord::default()
    }

    /// Parses letters against declared generators; whitespace is ignored.
    pub fn parse(text: &str, gens: &[char]) -> Result<Self> {
        let mut letters = Vec::new();
        for c in text.chars().filter(|c| !c.is_whitespace()) {
            if !c.is_ascii_alphabetic() || !gens.contains(&c.to_ascii_lowercase()) {
                return Err(Error::UndeclaredLetter(c));
            }
            letters.push(c);
        }
        Ok(GroupWord { letters })
    }

    pub(crate) fn from_letters(letters: Vec<char>) -> Self {
        GroupWord { letters }
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<char> = Vec::with_capacity(self.letters.len());
        for &c in &self.letters {
            if out.last() == Some(&inverse_letter(c)) {
                out.pop();
            } else {
                out.push(c);
            }
        }
        GroupWord { letters: out }
    }

    /// Free reduction followed by cancelling inverse pairs across the ends.
    pub fn cyclic_reduce(&self) -> Self {
        let mut w = self.free_reduce().letters;
        while w.len() >= 2 && w[0] == inverse_letter(w[w.len() - 1]) {
            w.pop();
            w.remove(0);
        }
        GroupWord { letters: w }
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&c| inverse_letter(c))
                .collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { letters }
    }

    /// Moves the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(k % self.letters.len());
        }
        GroupWord { letters }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Generators, relators, and named words such as meridians.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<char>,
    pub relators: Vec<GroupWord>,
    pub named_words: Vec<(String, GroupWord)>,
}

impl Presentation {
    pub fn word(&self, name: &str) -> Result<&GroupWord> {
        self.named_words
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, w)| w)
            .ok_or_else(|| Error::InvalidArgument(format!("no word named `{name}`")))
    }

    pub fn parse_word(&self, text: &str) -> Result<GroupWord> {
        GroupWord::parse(text, &self.generators)
    }
}

/// Parses a word over the generators `a` and `b`.
pub fn parse_word(text: &str) -> Result<GroupWord> {
    GroupWord::parse(text, &['a', 'b'])
}

/// Reads the `presentation v1` format.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let bad = |ln: usize, m: &str| Error::fixture("<presentation>", format!("line {ln}: {m}"));
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, "presentation v1")) => {}
        _ => return Err(bad(1, "expected `presentation v1`")),
    }
    let mut generators = Vec::new();
    let mut relators = Vec::new();
    let mut named_words = Vec::new();
    for (ln, line) in lines {
        if let Some(g) = line.strip_prefix("gens:") {
            for name in g.split_whitespace() {
                let mut cs = name.chars();
                match (cs.next(), cs.next()) {
                    (Some(c), None) if c.is_ascii_lowercase() => generators.push(c),
                    _ => return Err(bad(ln, "generators must be single lower-case letters")),
                }
            }
        } else if let Some(r) = line.strip_prefix("rel:") {
            relators.push(GroupWord::parse(r, &generators)?);
        } else if let Some(rest) = line.strip_prefix("word ") {
            let (name, w) = rest
                .split_once(':')
                .ok_or_else(|| bad(ln, "expected `word <name>: <letters>`"))?;
            named_words.push((name.trim().to_string(), GroupWord::parse(w, &generators)?));
        } else {
            return Err(bad(ln, "unrecognized line"));
        }
    }
    if generators.is_empty() {
        return Err(bad(2, "missing `gens:` line"));
    }
    Ok(Presentation {
        generators,
        relators,
        named_words,
    })
}
