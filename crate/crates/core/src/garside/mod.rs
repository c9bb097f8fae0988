//! Garside structure of a finite-type Artin group: simples, normal forms, and the word problem.

pub mod element;
pub mod simple;
pub mod word;

pub use element::ArtinElement;
pub use word::{GeneratorWord, Letter};
