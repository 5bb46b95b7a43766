//! Triangulations of cyclic polytopes and the two higher Stasheff–Tamari
//! orders, together with their representation-theoretic counterparts for the
//! higher Auslander algebras of type A: tilting modules and cluster-tilting
//! objects (even dimensions) and equivalence classes of d-maximal green
//! sequences (odd dimensions).
//!
//! Everything is combinatorial and exact. Vertices of `C(m, δ)` are the points
//! `p(i) = (i, i², …, i^δ)` for `i ∈ [m]`, simplices are [`VertexTuple`]s, and
//! every homological predicate is expressed through the intertwining relation.
//!
//! Module map:
//!
//! * [`combinat`]: increasing tuples and the intertwining relation.
//! * [`polytope`]: facets of `C(m, δ)`, internal simplices, volumes and circuits.
//! * [`triangulation`]: validated triangulations and bistellar flips.
//! * [`orders`]: enumeration, the two orders, Hasse diagrams and lattice checks.
//! * [`reptheory`]: quivers, tilting states, perpendicular categories and
//!   green sequences with their orders.
//! * [`io`]: JSON and DOT encodings with validating decoders.

pub mod combinat;
pub mod error;
pub mod io;
pub mod orders;
pub mod polytope;
pub mod reptheory;
pub mod triangulation;

pub use combinat::{IndexSetKind, Label, VertexTuple};
pub use error::{Error, Result};
pub use orders::{Limits, Relation, TriangulationPoset};
pub use polytope::{FacetClass, PolytopeSpec};
pub use triangulation::{FlipDirection, FlipEvent, Side, Triangulation};
