//! Tooling for palindromic-rich words: a rollback-capable palindromic-factor
//! index, richness predicates with certificates, standard extensions and the
//! forced-extension walk, switch machinery, the recursive extremal
//! constructions, and exhaustive search over rich words.
//!
//! A word of length `n` is *rich* if it contains `n + 1` distinct
//! palindromic factors, counting the empty word.

pub mod construction;
pub mod error;
pub mod extension;
pub mod naive;
pub mod pal_index;
pub mod phi_search;
pub mod richness;
pub mod switches;
pub mod word;

pub use error::{Error, Result};
pub use pal_index::PalIndex;
pub use word::{affix, occ, suffix_union, trim, AffixKind, Alphabet, Side, Word};
