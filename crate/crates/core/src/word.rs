//! Alphabets, signed letters, words and free-group reduction.
//!
//! Letters are stored as `2 * generator + inverse_bit`, so the derived order
//! is the alphabet order `x < x' < y < y' < ...` used for every tie-break in
//! the crate.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A signed generator: `x` or `x⁻¹`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Letter(u32);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter((generator as u32) << 1 | inverse as u32)
    }

    pub fn positive(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub fn from_index(index: usize) -> Self {
        Letter(index as u32)
    }

    pub fn generator(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// Position in the signed alphabet, `0..2 * rank`.
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The generating set `X`, in declaration order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut lookup = HashMap::new();
        let mut owned = Vec::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            let name = name.as_ref();
            if !valid_identifier(name) {
                return Err(Error::InvalidGeneratorName(name.to_string()));
            }
            if lookup.insert(name.to_string(), i).is_some() {
                return Err(Error::DuplicateGenerator(name.to_string()));
            }
            owned.push(name.to_string());
        }
        Ok(Alphabet {
            names: owned,
            lookup,
        })
    }

    /// Number of generators `|X|`.
    pub fn rank(&self) -> usize {
        self.names.len()
    }

    /// Number of signed letters `|A| = 2|X|`.
    pub fn letter_count(&self) -> usize {
        2 * self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, generator: usize) -> &str {
        &self.names[generator]
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    /// All signed letters in alphabet order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.letter_count()).map(Letter::from_index)
    }

    pub fn format_letter(&self, letter: Letter) -> String {
        let name = self.name(letter.generator());
        if letter.is_inverse() {
            format!("{name}'")
        } else {
            name.to_string()
        }
    }

    /// Renders a word in the textual syntax accepted by [`Alphabet::parse_word`].
    pub fn format_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.letters()
            .iter()
            .map(|&l| self.format_letter(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses whitespace-separated tokens `g` / `g'`; the lone token `1` is
    /// the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens == ["1"] {
            return Ok(Word::empty());
        }
        let mut letters = Vec::with_capacity(tokens.len());
        for token in tokens {
            let (name, inverse) = match token.strip_suffix('\'') {
                Some(stem) => (stem, true),
                None => (token, false),
            };
            if !valid_identifier(name) {
                return Err(Error::MalformedToken(token.to_string()));
            }
            let g = self
                .generator(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            letters.push(Letter::new(g, inverse));
        }
        Ok(Word(letters))
    }
}

/// A word over `A = X ⊔ X⁻¹`; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The formal inverse: reversed with every letter inverted.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// `rev(w)`: the letters in reverse order, not inverted.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Every letter inverted, order kept.
    pub fn invert_letters(&self) -> Word {
        Word(self.0.iter().map(|l| l.inverse()).collect())
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator()).max()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

/// Cancels adjacent `a a⁻¹` pairs until none remain.
pub fn free_reduce(word: &Word) -> FreeGroupElement {
    let mut stack: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word.letters() {
        if stack.last() == Some(&l.inverse()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    FreeGroupElement(Word(stack))
}

/// A freely reduced word, i.e. an element of the free group on the
/// generators. Also used for free groups whose generators are graph edges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct FreeGroupElement(Word);

impl FreeGroupElement {
    pub fn identity() -> Self {
        FreeGroupElement(Word::empty())
    }

    pub fn generator(g: usize) -> Self {
        FreeGroupElement(Word(vec![Letter::positive(g)]))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &FreeGroupElement) -> FreeGroupElement {
        free_reduce(&self.0.concat(&other.0))
    }

    pub fn inverse(&self) -> FreeGroupElement {
        FreeGroupElement(self.0.inverse())
    }

    /// Exponent sum of each generator, i.e. the image in the abelianisation.
    pub fn abelianize(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for l in self.0.letters() {
            v[l.generator()] += if l.is_inverse() { -1 } else { 1 };
        }
        v
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| {
                if l.is_inverse() {
                    format!("g{}'", l.generator())
                } else {
                    format!("g{}", l.generator())
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Alphabet {
        Alphabet::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn parse_tokens() {
        let a = Alphabet::new(&["x"]).unwrap();
        let w = a.parse_word("x x' x").unwrap();
        assert_eq!(
            w.letters(),
            &[Letter::new(0, false), Letter::new(0, true), Letter::new(0, false)]
        );
        assert!(a.parse_word("1").unwrap().is_empty());
        assert!(a.parse_word("   ").unwrap().is_empty());

        let b = Alphabet::new(&["ab", "c"]).unwrap();
        let w = b.parse_word("ab c'").unwrap();
        assert_eq!(w.letters(), &[Letter::new(0, false), Letter::new(1, true)]);
    }

    #[test]
    fn parse_errors() {
        let a = xy();
        assert_eq!(
            a.parse_word("x''"),
            Err(Error::MalformedToken("x''".into()))
        );
        assert_eq!(a.parse_word("z"), Err(Error::UnknownGenerator("z".into())));
        assert_eq!(a.parse_word("x 1"), Err(Error::MalformedToken("1".into())));
        assert!(matches!(
            Alphabet::new(&["x", "x"]),
            Err(Error::DuplicateGenerator(_))
        ));
        assert!(matches!(
            Alphabet::new(&["1x"]),
            Err(Error::InvalidGeneratorName(_))
        ));
    }

    #[test]
    fn format_round_trip() {
        let a = xy();
        for text in ["x y' x", "1", "y'"] {
            assert_eq!(a.format_word(&a.parse_word(text).unwrap()), text);
        }
    }

    #[test]
    fn letter_order_interleaves_inverses() {
        let a = xy();
        let names: Vec<String> = a.letters().map(|l| a.format_letter(l)).collect();
        assert_eq!(names, ["x", "x'", "y", "y'"]);
    }

    #[test]
    fn reduction_examples() {
        let a = Alphabet::new(&["x", "e", "f"]).unwrap();
        let r = free_reduce(&a.parse_word("x x' x").unwrap());
        assert_eq!(a.format_word(r.word()), "x");
        assert!(free_reduce(&Word::empty()).is_identity());
        assert!(free_reduce(&a.parse_word("e f f' e'").unwrap()).is_identity());
    }

    #[test]
    fn word_operations() {
        let a = xy();
        let w = a.parse_word("x y'").unwrap();
        assert_eq!(a.format_word(&w.inverse()), "y x'");
        assert_eq!(a.format_word(&w.reversed()), "y' x");
        assert_eq!(a.format_word(&w.invert_letters()), "x' y");
    }
}
