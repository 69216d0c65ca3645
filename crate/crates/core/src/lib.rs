//! Exact combinatorics and topology of the quasitoric spaces attached to
//! simple convex polytopes, rational or not.
//!
//! Coordinates live in `Q` or a real quadratic field `Q(sqrt d)` and every
//! computation is exact. From a halfspace description the crate derives the
//! vertex set and face lattice, f- and h-vectors, vertex indices along a
//! generic height, the chart groups `Gamma_nu`, and the Betti numbers of
//! the space, which it obtains both as `b_2j = h_j` and by replaying the
//! Mayer-Vietoris induction over the charts.
//!
//! ```
//! use qtoric::{analyze, fixtures};
//!
//! let cube = fixtures::fixture("cube-3").unwrap();
//! let a = analyze(&cube, 0).unwrap();
//! assert_eq!(a.h_from_f.entries(), [1, 3, 3, 1]);
//! assert_eq!(a.filtration.betti.entries(), [1, 0, 3, 0, 3, 0, 1]);
//! ```

pub mod atlas;
pub mod cohomology;
pub mod combinatorics;
mod error;
pub mod exactnum;
pub mod fixtures;
pub mod linalg;
pub mod pipeline;
pub mod polytope;
pub mod quasilattice;
pub mod snf;

pub use error::{Error, GeometryError, Result};
pub use exactnum::{FieldSpec, NumError, Scalar};
pub use pipeline::{analyze, analyze_with_direction, Analysis};
pub use polytope::{parse_spec, FacetSet, PolytopeSpec, Vertex};
