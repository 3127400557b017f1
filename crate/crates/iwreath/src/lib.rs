//! Finite inverse symmetric semigroups `IS_n`, their partial wreath
//! products `IS_m ≀_p IS_n`, and the R-/L-cross-section constructions,
//! together with exhaustive machinery that verifies the classification
//! theorems (every cross-section isomorphism is a conjugacy) and the
//! counting formulas at small sizes.
//!
//! See the `examples/` directory for a runnable tour of each capability,
//! and the `iwreath` binary for the batch command-line interface.

pub mod config;
pub mod counting;
pub mod cross_sections;
pub mod error;
pub mod isn;
pub mod notation;
pub mod oracle;
pub mod semigroup;
pub mod structure;
pub mod verify;
pub mod wreath;

pub use error::{Error, Result};
pub use isn::PartialBijection;
pub use wreath::WreathElement;
