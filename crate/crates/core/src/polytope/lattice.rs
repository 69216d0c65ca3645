use std::collections::HashMap;

use crate::combinatorics::FVector;
use crate::error::{Error, Result};

use super::{FacetSet, PolytopeSpec, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub active: FacetSet,
    pub dim: usize,
    /// Indices into the vertex list, ascending.
    pub vertices: Vec<usize>,
}

/// All faces of a simple polytope, sorted by dimension and then active set.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    n: usize,
    d: usize,
    faces: Vec<Face>,
    index: HashMap<FacetSet, usize>,
    /// `(lower, upper)` face indices with `upper` covering `lower`.
    covers: Vec<(usize, usize)>,
}

impl FaceLattice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, active: FacetSet) -> Option<&Face> {
        self.index.get(&active).map(|&i| &self.faces[i])
    }

    pub fn faces_of_dim(&self, dim: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == dim)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Edges at a vertex: `(facet left along the edge, other endpoint)`.
    pub fn vertex_edges(&self, vertex: &Vertex, vertex_id: usize) -> Vec<(usize, usize)> {
        vertex
            .active
            .iter()
            .map(|j| {
                let edge = self
                    .face(vertex.active.without(j))
                    .expect("edge of a simple vertex is in the lattice");
                let other = *edge
                    .vertices
                    .iter()
                    .find(|&&w| w != vertex_id)
                    .expect("edge has two endpoints");
                (j, other)
            })
            .collect()
    }

    /// Number of faces covering or covered by face `i`.
    pub fn degree(&self, i: usize) -> usize {
        self.covers
            .iter()
            .filter(|&&(lo, hi)| lo == i || hi == i)
            .count()
    }
}

/// Faces of a simple polytope are exactly the subsets of vertex active
/// sets; the face `I_F = S` has vertices `{w : S ⊆ I_w}` and dimension
/// `n - |S|`.
pub fn build_face_lattice(spec: &PolytopeSpec, vertices: &[Vertex]) -> Result<FaceLattice> {
    let n = spec.n;
    let mut faces: Vec<Face> = Vec::new();
    let mut seen: HashMap<FacetSet, ()> = HashMap::new();
    for v in vertices {
        if v.active.len() != n {
            return Err(Error::invariant(format!(
                "vertex with active set {} is not simple",
                v.active
            )));
        }
        for s in v.active.subsets() {
            if seen.insert(s, ()).is_some() {
                continue;
            }
            let members: Vec<usize> = (0..vertices.len())
                .filter(|&w| s.is_subset(vertices[w].active))
                .collect();
            let closure = members.iter().fold(FacetSet::full(spec.d()), |acc, &w| {
                acc.intersection(vertices[w].active)
            });
            if closure != s {
                return Err(Error::invariant(format!(
                    "face {{{s}}} has vertices spanning the smaller face {{{closure}}}"
                )));
            }
            faces.push(Face {
                active: s,
                dim: n - s.len(),
                vertices: members,
            });
        }
    }
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then(a.active.cmp(&b.active)));

    for f in faces.iter().filter(|f| f.dim == 1) {
        if f.vertices.len() != 2 {
            return Err(Error::invariant(format!(
                "edge {{{}}} has {} vertices",
                f.active,
                f.vertices.len()
            )));
        }
    }

    let index: HashMap<FacetSet, usize> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.active, i))
        .collect();
    let mut covers = Vec::new();
    for (upper, f) in faces.iter().enumerate() {
        for j in f.active.complement(spec.d()).iter() {
            if let Some(&lower) = index.get(&f.active.with(j)) {
                covers.push((lower, upper));
            }
        }
    }
    covers.sort_unstable();

    if faces.iter().filter(|f| f.dim == n).count() != 1 {
        return Err(Error::invariant("lattice must have exactly one top face"));
    }
    Ok(FaceLattice {
        n,
        d: spec.d(),
        faces,
        index,
        covers,
    })
}

pub fn f_vector(lattice: &FaceLattice) -> FVector {
    let mut counts = vec![0u64; lattice.n + 1];
    for f in lattice.faces() {
        counts[f.dim] += 1;
    }
    FVector::new(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::polytope::simple_vertices;

    fn lattice_of(name: &str) -> (Vec<Vertex>, FaceLattice) {
        let spec = fixtures::fixture(name).unwrap();
        let vs = simple_vertices(&spec).unwrap();
        let lat = build_face_lattice(&spec, &vs).unwrap();
        (vs, lat)
    }

    /// Oracle: count faces by brute force over every subset of facets,
    /// keeping those whose common vertex set is nonempty and whose
    /// active-set intersection gives back the subset.
    fn brute_force_f(vertices: &[Vertex], n: usize, d: usize) -> Vec<u64> {
        let mut counts = vec![0u64; n + 1];
        for bits in 0u64..(1u64 << d) {
            let s = FacetSet::from_indices((0..d).filter(|j| bits & (1 << j) != 0));
            let members: Vec<&Vertex> = vertices.iter().filter(|v| s.is_subset(v.active)).collect();
            if members.is_empty() {
                continue;
            }
            let closure = members
                .iter()
                .fold(FacetSet::full(d), |acc, v| acc.intersection(v.active));
            if closure == s {
                counts[n - s.len()] += 1;
            }
        }
        counts
    }

    #[test]
    fn known_f_vectors() {
        for (name, f) in [
            ("cube-3", vec![8, 12, 6, 1]),
            ("simplex-2", vec![3, 3, 1]),
            ("cube-2", vec![4, 4, 1]),
            ("pentagon", vec![5, 5, 1]),
            ("dodecahedron", vec![20, 30, 12, 1]),
        ] {
            let (vs, lat) = lattice_of(name);
            assert_eq!(f_vector(&lat).entries(), f.as_slice(), "{name}");
            assert_eq!(brute_force_f(&vs, lat.n(), lat.d()), f, "{name} oracle");
        }
    }

    #[test]
    fn every_vertex_has_n_edges() {
        for name in ["cube-3", "dodecahedron", "cube-4", "simplex-4"] {
            let (vs, lat) = lattice_of(name);
            for (i, v) in vs.iter().enumerate() {
                let edges = lat.vertex_edges(v, i);
                assert_eq!(edges.len(), lat.n());
                let face_id = lat
                    .faces()
                    .iter()
                    .position(|f| f.active == v.active)
                    .unwrap();
                assert_eq!(lat.degree(face_id), lat.n());
            }
        }
    }

    #[test]
    fn triangle_faces() {
        let (_, lat) = lattice_of("simplex-2");
        assert_eq!(lat.faces().len(), 7);
        let top = lat.face(FacetSet::EMPTY).unwrap();
        assert_eq!(top.dim, 2);
        assert_eq!(top.vertices.len(), 3);
        // covers: 3 vertex-edge pairs twice, plus 3 edges under the top
        assert_eq!(lat.covers().len(), 9);
    }
}
