//! Exact, finite-scale Stone duality and non-Archimedean function algebras.
//!
//! The crate builds the chain
//!
//! ```text
//! FiniteSpace ──clopens──▶ BoolAlg ──ultrafilters──▶ UfSpace
//!      │                                                │
//!      └──── C(X,k) ──maximal ideals / seminorms────────┘
//! ```
//!
//! and checks every identity along the way with exact arithmetic:
//!
//! * [`topo`]: finite topological spaces, continuous maps, components, partitions.
//! * [`balg`]: finite Boolean algebras, the F2-algebra structure, filters and ultrafilters.
//! * [`ufspace`]: the ultrafilter space UF(X), principal ultrafilters, cluster points,
//!   pushforwards and the universal extension of maps.
//! * [`valfield`]: trivially valued finite fields, Q and Q(i), and p-adically valued Q,
//!   with symbolic magnitudes.
//! * [`funcalg`]: the algebra C(X,k), sup norms, ultrafilter seminorms, maximal ideals,
//!   quotient norms and Berkovich points.
//! * [`compactify`]: evaluation embeddings, extension of functions to UF(X), separation
//!   quotients, locally constant approximation and ground field extension.
//! * [`verify`]: named property suites producing machine-readable reports.
//!
//! Runnable walkthroughs for each capability live in the crate's `examples/` directory.

pub mod balg;
pub mod bits;
pub mod compactify;
pub mod error;
pub mod funcalg;
pub mod io;
pub mod topo;
pub mod ufspace;
pub mod valfield;
pub mod verify;

pub use balg::{BoolAlg, Element, Filter, Ultrafilter};
pub use error::{Error, Result};
pub use funcalg::{BerkovichPoint, BoundedFunction, IdealDescriptor};
pub use topo::{ContinuousMap, FiniteSpace, Partition};
pub use ufspace::UfSpace;
pub use valfield::{AbsValue, Scalar, ValuedField};
