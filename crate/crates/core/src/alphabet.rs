//! Letters, alphabets and words.
//!
//! A [`Letter`] is an index into its [`Alphabet`]; the index order is the
//! order in which the alphabet was declared, and every sorted word list in the
//! crate uses it.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u8);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Finite words are plain letter vectors; `Ord` on them is lexicographic.
pub type Word = Vec<Letter>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet(Arc<[char]>);

impl Alphabet {
    pub fn new(names: impl IntoIterator<Item = char>) -> Result<Self> {
        let names: Vec<char> = names.into_iter().collect();
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if names.len() > u8::MAX as usize {
            return Err(Error::AlphabetMismatch(format!("{} letters is too many", names.len())));
        }
        for (i, c) in names.iter().enumerate() {
            if names[..i].contains(c) {
                return Err(Error::AlphabetMismatch(format!("letter {c} appears twice")));
            }
            if c.is_whitespace() {
                return Err(Error::AlphabetMismatch("letters must be visible characters".into()));
            }
        }
        Ok(Alphabet(names.into()))
    }

    /// Alphabet from the characters of a string, e.g. `"abc"`.
    pub fn from_str_chars(s: &str) -> Result<Self> {
        Self::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, a: Letter) -> char {
        self.0[a.index()]
    }

    pub fn letter(&self, c: char) -> Option<Letter> {
        self.0.iter().position(|&x| x == c).map(|i| Letter(i as u8))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.0.len()).map(|i| Letter(i as u8))
    }

    pub fn names(&self) -> &[char] {
        &self.0
    }

    /// Parses a word written as consecutive letter names; `""` and `"ε"` are the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        if s == "ε" {
            return Ok(Vec::new());
        }
        s.chars()
            .map(|c| {
                self.letter(c)
                    .ok_or_else(|| Error::AlphabetMismatch(format!("letter {c} is not in the alphabet")))
            })
            .collect()
    }

    pub fn render(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        w.iter().map(|&a| self.name(a)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.0.iter() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
