//! Finite skew braces and set-theoretic solutions of the Yang-Baxter and
//! reflection equations.
//!
//! Everything is table-based and exhaustively verifiable: groups are Cayley
//! tables, braidings and reflection maps are pair tables, and every defining
//! equation can be checked over the full tuple space at small order.

pub mod action;
pub mod brace;
pub mod braiding;
pub mod catalog;
pub mod group;
pub mod io;
pub mod product;
pub mod reflection;
pub mod report;

pub use action::BraceAction;
pub use brace::SkewBrace;
pub use braiding::{BraidingOperator, PairMap};
pub use group::{FiniteGroup, GroupAction};
pub use reflection::ReflectionMap;
pub use report::{Check, CheckReport};
