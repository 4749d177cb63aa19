//! Cambrian and m-Cambrian lattices of finite Coxeter groups.

pub mod braid;
pub mod cambrian;
pub mod checks;
pub mod coxeter;
pub mod error;
pub mod factorization;
pub mod interval_poset;
pub mod io;
pub mod m_cambrian;
pub mod orders;
pub mod poset;
pub mod subword;
pub mod tamari;

pub use cambrian::{Cambrian, CoxeterWord};
pub use coxeter::{CoxeterSystem, Elem, Word};
pub use error::{Error, Result};
pub use factorization::{ColoredReflection, MCambrian, MFactorization};
pub use poset::FinitePoset;
pub use subword::Facet;
