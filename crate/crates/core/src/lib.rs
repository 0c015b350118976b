//! Exact computations with rational Cherednik algebras `H_{t,c}(G, h)` for
//! built-in finite reflection groups (cyclic groups `Z_l` and dihedral groups
//! `I2(m)`, in particular `W(B2) = I2(4)` and `W(G2) = I2(6)`).
//!
//! The crate constructs standard, baby-Verma and integral-reflection module
//! realizations with explicit operator actions, local and global Dirac
//! operators, Dirac cohomology and indices, multiplicity and Dirac-index
//! polynomial matrices, Euler-Poincare and elliptic pairings, and the dual
//! Dunkl-Opdam complex. All arithmetic is exact, over the field tower
//! `Q ⊂ Q(zeta_m) ⊂ Q(zeta_m)(c)` with a transcendental parameter `c`, so
//! "generic parameter" results are certificates rather than samples.
//!
//! The `cherednik` binary exposes the functionality as a CLI; see the README.

pub mod characters;
pub mod clifford;
pub mod dirac;
pub mod field;
pub mod global;
pub mod group;
pub mod linalg;
pub mod modules;
pub mod poly;
pub mod verify;

pub use field::{Cyclotomic, ParamScalar, Rational, Scalar};
