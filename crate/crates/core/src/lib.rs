//! Computational toolkit for inverse monoid presentations.

pub mod builtins;
pub mod cover;
pub mod error;
mod fold;
pub mod matrix;
pub mod monoid;
pub mod munn;
pub mod presentation;
pub mod pseudoregular;
pub mod relmod;
pub mod schutz;
pub mod squier;
pub mod stephen;
pub mod verify;
pub mod word;
pub mod xmod;

pub use error::{Error, Result};
pub use monoid::FiniteInverseMonoid;
pub use munn::{munn_tree, MunnTree};
pub use word::{free_reduce, Alphabet, FreeGroupElement, Letter, Word};
pub use presentation::{Presentation, Relation};
pub use schutz::{schutzenberger_graph, GraphStatus, SchutzGraph};
pub use stephen::{enumerate_monoid, m_equal, stephen_graph, Equality, StephenBudget};
pub use cover::{Cover, KernelGroup, TElement};
pub use matrix::IntegerMatrix;
pub use relmod::{relation_module, LauschModule, MonoidModule};
pub use squier::{LambdaGenerator, Squier, SquierEdge, SquierPath, TwoCellResult};
pub use xmod::{CanonicalForm, CrossedElement, CrossedModule, ExactSequenceReport};
