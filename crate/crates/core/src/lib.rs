//! Exact traces of Coxeter elements on irreducible representations of
//! finite Coxeter groups.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactnum`]: rationals, cyclotomic numbers, Laurent polynomials and
//!   rational functions in the Hecke parameter.
//! - [`combinatorics`]: partitions, bipartitions, symbols and the
//!   `a`/`b`/`f` invariants that decide family membership.
//! - [`groups`]: Weyl groups of types A, B, D as signed permutation groups.
//! - [`characters`]: character engines, Coxeter traces, cell decompositions.
//! - [`hecke`]: Iwahori–Hecke modules and monomial trace checks.
//! - [`noncrystal`]: dihedral groups in closed form and stored H3/H4 data.
//! - [`tables`]: stored data for the exceptional Weyl groups.
//! - [`oracle`]: brute-force cross-checks (orthogonality, wedge powers,
//!   centralizers).
//! - [`verify`]: the invariant suite driven by the command-line tool.

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod exactnum;
pub mod groups;
pub mod hecke;
pub mod label;
pub mod noncrystal;
pub mod oracle;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use label::IrrLabel;
