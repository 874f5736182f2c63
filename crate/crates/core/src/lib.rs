//! Exact character tables of small finite groups, and checkers for groups
//! with an irreducible character of unusually large degree.
//!
//! A group of order `n` with an irreducible character of degree `d` has
//! `n = d(d + e)` for some integer `e >= 0`. This crate builds groups from
//! Cayley tables, computes their complex character tables exactly
//! (Dixon's method, values in cyclotomic fields), and decides the
//! structural conditions that characterise small `e`.

mod bitset;
pub mod character;
pub mod config;
pub mod classify;
pub mod cyclotomic;
pub mod error;
pub mod families;
pub mod field;
pub mod gagola;
pub mod brauer;
pub mod group;
pub mod modp;

pub use config::{Config, DEFAULT_SEED, ORDER_BOUND_ENV};
pub use error::{Axiom, Error, Result};
pub use character::{dixon_char_table, CharTable, Character, ClassFunction};
pub use cyclotomic::Cyclotomic;
pub use group::{Group, Subgroup};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/cyclotomics.md")]
    mod cyclotomics {}
    #[doc = include_str!("../../../book/src/character-tables.md")]
    mod character_tables {}
    #[doc = include_str!("../../../book/src/structural-conditions.md")]
    mod structural_conditions {}
    #[doc = include_str!("../../../book/src/brauer.md")]
    mod brauer {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/formats.md")]
    mod formats {}
}
