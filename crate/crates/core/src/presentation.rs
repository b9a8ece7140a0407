//! Inverse monoid presentations `[X : R]` and their text format.
//!
//! ```text
//! # the free semilattice on two generators
//! generators: e f
//! relation: e e = e
//! relation: e f = f e
//! ```

use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

/// A relation `l = r`, stored exactly as given.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    /// `l⁻¹r`.
    pub fn quotient(&self) -> Word {
        self.lhs.inverse().concat(&self.rhs)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    alphabet: Alphabet,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relations: Vec<Relation>) -> Result<Self> {
        let rank = alphabet.rank();
        for rel in &relations {
            for side in [&rel.lhs, &rel.rhs] {
                if let Some(g) = side.max_generator() {
                    if g >= rank {
                        return Err(Error::AlphabetMismatch(g + 1, rank));
                    }
                }
            }
        }
        Ok(Presentation {
            alphabet,
            relations,
        })
    }

    /// Builds a presentation from generator names and textual relations.
    pub fn from_strs<S: AsRef<str>>(generators: &[S], relations: &[(&str, &str)]) -> Result<Self> {
        let alphabet = Alphabet::new(generators)?;
        let relations = relations
            .iter()
            .map(|(l, r)| {
                Ok(Relation {
                    lhs: alphabet.parse_word(l)?,
                    rhs: alphabet.parse_word(r)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation {
            alphabet,
            relations,
        })
    }

    /// Parses the line-based file format. Blank lines and `#` comments are
    /// skipped; the first remaining line must declare the generators.
    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet: Option<Alphabet> = None;
        let mut relations = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| err("expected `generators:` or `relation:`".into()))?;
            match (key.trim(), &alphabet) {
                ("generators", None) => {
                    let names: Vec<&str> = rest.split_whitespace().collect();
                    alphabet = Some(Alphabet::new(&names).map_err(|e| err(e.to_string()))?);
                }
                ("generators", Some(_)) => return Err(err("generators declared twice".into())),
                (_, None) => return Err(err("the first line must declare generators".into())),
                ("relation", Some(a)) => {
                    let (l, r) = rest
                        .split_once('=')
                        .ok_or_else(|| err("relation needs `=`".into()))?;
                    let lhs = a.parse_word(l).map_err(|e| err(e.to_string()))?;
                    let rhs = a.parse_word(r).map_err(|e| err(e.to_string()))?;
                    relations.push(Relation { lhs, rhs });
                }
                (other, Some(_)) => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        let alphabet = alphabet.ok_or(Error::Parse {
            line: 0,
            message: "no generators line".into(),
        })?;
        Ok(Presentation {
            alphabet,
            relations,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.alphabet.rank()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse_word(text)
    }

    /// Renders the presentation in the file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("generators: {}\n", self.alphabet.names().join(" "));
        for rel in &self.relations {
            out.push_str(&format!(
                "relation: {} = {}\n",
                self.alphabet.format_word(&rel.lhs),
                self.alphabet.format_word(&rel.rhs)
            ));
        }
        out
    }

    /// Adjoins a zero `z`: relations `z z = z`, then `y z = z` and `z y = z`
    /// for every old generator `y`.
    pub fn adjoin_zero(&self, z: &str) -> Result<Presentation> {
        if self.alphabet.generator(z).is_some() {
            return Err(Error::NameClash(z.to_string()));
        }
        let mut names = self.alphabet.names().to_vec();
        names.push(z.to_string());
        let alphabet = Alphabet::new(&names)?;
        let zl = Word::new(vec![Letter::positive(self.rank())]);
        let mut relations = self.relations.clone();
        relations.push(Relation {
            lhs: zl.concat(&zl),
            rhs: zl.clone(),
        });
        for y in 0..self.rank() {
            let yl = Word::new(vec![Letter::positive(y)]);
            relations.push(Relation {
                lhs: yl.concat(&zl),
                rhs: zl.clone(),
            });
            relations.push(Relation {
                lhs: zl.concat(&yl),
                rhs: zl.clone(),
            });
        }
        Ok(Presentation {
            alphabet,
            relations,
        })
    }
}
