//! Exact computations on numerical semigroups.
//!
//! - [`semigroup`]: validated semigroups and brute-force oracles (Apery sets,
//!   Frobenius number, genus, order, symmetry).
//! - [`closed_forms`]: Apery and Frobenius formulas for `<a, a+1, b>` and
//!   `<a, a+1, a+d>`.
//! - [`hilbert`]: the first Hilbert coefficient of `k[[H]]` by three methods
//!   and its closed forms.
//! - [`herzog`]: Herzog parameters of three-generated semigroups and the
//!   Cohen-Macaulay property of the tangent cone.
//! - [`cli`]: sweeps comparing formulas to oracles, and report emission.

pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod herzog;
pub mod hilbert;
pub mod semigroup;

pub use closed_forms::{EvalMode, FamilyParams};
pub use error::{Error, Result};
pub use herzog::{CmVerdict, HerzogData};
pub use hilbert::HilbertSummary;
pub use semigroup::{AperyTable, NumericalSemigroup, OrderTable};
