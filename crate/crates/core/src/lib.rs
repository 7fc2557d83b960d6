//! Frobenius twists of finite-group representations over finite fields:
//! descent to a minimal field of definition through the Lang equation, the
//! decomposition map from characteristic zero, and Hodge numbers of
//! representation-defined bundles on curves.

pub mod arith;
pub mod brauer;
pub mod cli;
pub mod error;
pub mod gf;
pub mod grp;
pub mod hodge;
pub mod matfq;
pub mod rep;

pub use error::{Error, Result};
