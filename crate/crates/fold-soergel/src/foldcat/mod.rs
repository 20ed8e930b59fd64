//! The folded diagram category: coloured objects, generators, expressions and
//! their evaluation as equivariant bimodule maps.
//!
//! Colours: orange (`o`) is the invertible object `X`, green (`g`) is `Y` and
//! brown (`b`) is `Z`.  A diagram is written as an [`Expr`]: generators and
//! identities combined by composition, horizontal concatenation, sums and
//! scalars.  Planar isotopy is not decided symbolically; instead cups and caps
//! are explicit generators and rotated generators are defined by them.

mod catalog;
pub mod diagrams;
mod eval;
mod expr;
mod idempotents;
mod parse;

pub use catalog::{
    default_forcing_family, relation_catalog, relation_catalog_with, CatalogOptions, Relation, RelationKind,
};
pub use eval::{rotate, Evaluator};
pub use expr::{Colour, Expr, FWord, GenName};
pub use idempotents::{check_suite, idempotent_suite, IdempotentEntry, Pair, Suite, SuiteCheck};
pub use parse::parse_expr;
