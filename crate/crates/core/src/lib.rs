//! Classification engine for linear codes over small prime fields.
//!
//! The library classifies `[n,k,d]` codes over F_q up to monomial
//! equivalence by inverse-shortening extension search, deduplicates
//! representatives through canonical labeling of an associated digraph,
//! computes exact covering radii, and propagates existence /
//! non-existence consequences through standard bounds rules. The shipped
//! pipeline runs the whole chain for q = 5 up to length 21, dimension 5.

pub mod canon;
pub mod covrad;
pub mod dfs;
pub mod error;
pub mod extend;
pub mod gf;
pub mod linear_code;
pub mod pipeline;

pub use error::{Error, Result};
pub use gf::{FieldSpec, GFVec};
pub use linear_code::{GeneratorMatrix, LinearCode, WeightEnumerator};
