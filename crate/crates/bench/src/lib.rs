//! Shared setup for the criterion benchmarks.

use qtoric::polytope::{build_face_lattice, simple_vertices, FaceLattice};
use qtoric::{fixtures, PolytopeSpec, Vertex};

/// A builtin spec together with its vertices and face lattice.
pub struct Prepared {
    pub spec: PolytopeSpec,
    pub vertices: Vec<Vertex>,
    pub lattice: FaceLattice,
}

pub fn prepare(name: &str) -> Prepared {
    let spec = fixtures::fixture(name).unwrap_or_else(|| panic!("unknown fixture {name}"));
    let vertices = simple_vertices(&spec).expect("simple fixture");
    let lattice = build_face_lattice(&spec, &vertices).expect("lattice");
    Prepared {
        spec,
        vertices,
        lattice,
    }
}
