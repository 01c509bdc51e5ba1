//! Quantum discord, classical correlation, concurrence and entanglement of
//! formation for quasi-Werner mixtures of bipartite superposed coherent states.
//!
//! [`closed_form`] evaluates the analytic expressions, [`oracle`] recomputes
//! the same quantities by brute force from the 4×4 density matrix built in
//! [`scs_states`], and [`minimizer`] optimizes the discord over the
//! measurement basis. The [`cli`] module backs the `scs-discord` binary.

pub mod cli;
pub mod closed_form;
pub mod entropy;
pub mod error;
pub mod minimizer;
pub mod oracle;
pub mod scs_states;

pub use error::{Error, Result};
