//! Idempotents, one-sided units and the lattice invariants they induce on
//! monoids, together with the fifteen-element monoid of functors built from
//! them.
//!
//! Monoids are either finite Cayley tables, catalog entries of the bicyclic
//! monoid with zero `B^0`, or direct products of those. Every Cayley table is
//! row-major: `table[i * n + j]` is the index of `x_i · x_j`.

pub mod builtin;
pub mod congruence;
pub mod error;
pub mod finite;
pub mod fplus;
pub mod functor;
pub mod greens;
pub mod invariants;
pub mod lattice;
pub mod monoid;
pub mod report;
pub mod suites;
pub mod symbolic;

pub use error::{Error, Result};
pub use finite::{FiniteMonoid, MonoidDocument};
pub use functor::FunctorId;
pub use greens::{greens, GreensData, Partition};
pub use invariants::{apply_functor, is_identity_stable, monoid_type, type_product, MonoidType};
pub use monoid::{Element, MonoidRef, Restriction, SubSet, SubmonoidHandle};
pub use symbolic::{BicyclicElement, CatalogSet, Region};
pub use lattice::{build_lattice, classify_shape, emit_hasse, HasseFormat, InvariantLattice};
pub use builtin::{parse_builtin, parse_product, standard_family};
pub use report::{Check, Fact, RunReport};
