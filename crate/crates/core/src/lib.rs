//! Finite groups as Cayley tables, sums of (relative) element orders, and
//! exhaustive sweeps that check the known bounds on those sums over a
//! catalog of small groups.

mod bitset;
pub mod cli;
pub mod constructors;
pub mod error;
pub mod group;
pub mod group_spec;
pub mod psi;
pub mod structure;
pub mod verify;

pub use bitset::BitSet;
pub use constructors::{Builder, DEFAULT_CAP};
pub use error::{Error, Result, ValidationError};
pub use group::{Element, FiniteGroup, Subgroup, IDENTITY};
pub use group_spec::{parse_group_spec, GroupSpec};
pub use psi::PsiValue;
