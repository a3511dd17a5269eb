//! Combinatorics of enveloping monoids of simple algebraic groups.
//!
//! The monoid itself never appears: everything here works on the finite data
//! that indexes its orbits.
//!
//! - [`dynkin`]: Dynkin diagrams (Bourbaki numbering) and node subsets.
//! - [`weyl`]: exact Weyl-group enumeration, Bruhat order, coset representatives.
//! - [`envlattice`]: the cross-section lattice of essential pairs `e(I,J)`,
//!   its order, covers, type map, meet/join and the face-coordinate isomorphism.
//! - [`classify`]: local monoid classification (J-coirreducible stabilizers,
//!   J-linear stabilizers, the navel, symbolic unit-group descriptors).
//! - [`renner`]: standard forms in the Renner monoid, the Bruhat–Chevalley–Renner
//!   comparison and rank-one orbit posets.
//! - [`counting`]: the type-A orbit count `d_n` by recurrence, generating
//!   function and direct enumeration.
//! - [`verify`]: aggregated invariant checks used by the CLI and the acceptance suite.
//!
//! Indexing convention for type A: `d_n` counts the orbits for the rank-`n`
//! diagram `A_n`, i.e. for `SL(n+1)`. So `d_2 = 11` is the lattice of `A_2`.

pub mod caps;
pub mod classify;
pub mod counting;
pub mod dynkin;
pub mod envlattice;
pub mod error;
pub mod export;
pub mod oracle;
pub mod renner;
pub mod verify;
pub mod weyl;

pub use caps::Caps;
pub use dynkin::{DiagramKind, DynkinDiagram, NodeSet};
pub use envlattice::{CrossSectionLattice, Face, Idempotent, TypeMapData};
pub use error::{Error, Result};
pub use weyl::{ElemId, WeylElement, WeylGroup};
