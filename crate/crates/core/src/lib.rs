//! Admissible sequences, reflection functors and reduced words for acyclic
//! quivers.
//!
//! * [`graph`]: graphs, Cartan matrices, orientations, the vertex poset,
//!   filters and hulls.
//! * [`admissible`]: (+)-admissible sequences, their lattice, canonical forms
//!   and principal sequences.
//! * [`weyl`]: the Weyl group acting on the root lattice, reduced words,
//!   Coxeter elements and c-sorting words.
//! * [`rep`]: exact-arithmetic representations, reflection functors, the
//!   Coxeter functor and shortest annihilating sequences.
//! * [`io`]: JSON file formats and literal parsing.

pub mod admissible;
pub mod error;
pub mod graph;
pub mod io;
pub mod rep;
pub mod weyl;

pub use admissible::{AdmissibleSeq, CanonicalForm, MultVector};
pub use error::{Error, Result};
pub use graph::{Graph, Quiver, VertexSet};
