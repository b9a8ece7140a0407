//! The four shipped examples: a two-generator semilattice, the bicyclic
//! monoid, the symmetric inverse monoid on two points, and the semilattice
//! with a zero adjoined.

use crate::error::{Error, Result};
use crate::monoid::FiniteInverseMonoid;
use crate::presentation::Presentation;
use crate::stephen::{enumerate_monoid, StephenBudget};
use crate::word::Alphabet;

pub const BUILTIN_NAMES: [&str; 4] = ["semilattice", "bicyclic", "i2", "semilattice0"];

#[derive(Clone, Debug)]
pub struct Builtin {
    pub name: &'static str,
    pub presentation: Presentation,
    /// A table backend, when the example ships with one.
    pub table: Option<FiniteInverseMonoid>,
}

impl Builtin {
    /// The table backend if present, otherwise Stephen enumeration.
    pub fn monoid(&self, budget: StephenBudget) -> Result<FiniteInverseMonoid> {
        match &self.table {
            Some(m) => Ok(m.clone()),
            None => enumerate_monoid(&self.presentation, budget),
        }
    }
}

pub fn semilattice_presentation() -> Presentation {
    Presentation::from_strs(&["e", "f"], &[("e e", "e"), ("f f", "f"), ("e f", "f e")])
        .expect("well-formed")
}

pub fn bicyclic_presentation() -> Presentation {
    Presentation::from_strs(&["x"], &[("x x'", "1")]).expect("well-formed")
}

/// `ℐ₂` on `{t, e}`: `t t = 1`, `e e = e`, and `e t e` is a zero.
pub fn i2_presentation() -> Presentation {
    Presentation::from_strs(
        &["t", "e"],
        &[("t t", "1"), ("e e", "e"), ("e t e t", "e t e"), ("t e t e", "e t e")],
    )
    .expect("well-formed")
}

/// `t` swaps the two points, `e` is the partial identity on the first.
pub fn i2_table() -> FiniteInverseMonoid {
    let a = Alphabet::new(&["t", "e"]).expect("valid names");
    FiniteInverseMonoid::from_partial_bijections(a, 2, &[vec![Some(1), Some(0)], vec![Some(0), None]])
        .expect("generators are partial bijections")
}

pub fn builtin(name: &str) -> Result<Builtin> {
    let name = name.strip_prefix("builtin:").unwrap_or(name);
    Ok(match name {
        "semilattice" => Builtin {
            name: "semilattice",
            presentation: semilattice_presentation(),
            table: None,
        },
        "bicyclic" => Builtin {
            name: "bicyclic",
            presentation: bicyclic_presentation(),
            table: None,
        },
        "i2" => Builtin {
            name: "i2",
            presentation: i2_presentation(),
            table: Some(i2_table()),
        },
        "semilattice0" => Builtin {
            name: "semilattice0",
            presentation: semilattice_presentation().adjoin_zero("z")?,
            table: None,
        },
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_names_resolve() {
        for n in BUILTIN_NAMES {
            assert_eq!(builtin(n).unwrap().name, n);
            assert_eq!(builtin(&format!("builtin:{n}")).unwrap().name, n);
        }
        assert_eq!(builtin("nope").unwrap_err(), Error::UnknownBuiltin("nope".into()));
    }

    #[test]
    fn finite_sizes() {
        let b = StephenBudget::default();
        assert_eq!(builtin("semilattice").unwrap().monoid(b).unwrap().size(), 4);
        assert_eq!(builtin("i2").unwrap().monoid(b).unwrap().size(), 7);
        assert_eq!(builtin("semilattice0").unwrap().monoid(b).unwrap().size(), 5);
        assert_eq!(
            builtin("bicyclic").unwrap().monoid(StephenBudget::new(50, 50).unwrap()).unwrap_err(),
            Error::NotFinishedWithinBudget
        );
    }
}
