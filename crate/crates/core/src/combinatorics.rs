//! f- and h-vectors, and vertex indices along a generic height function.
//!
//! The h-vector is computed twice: from the f-vector by the alternating
//! binomial transform, and as the histogram of vertex indices, where the
//! index of a vertex is the number of edges leaving it downward.

use std::fmt;

use num_integer::binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, GeometryError, Result};
use crate::exactnum::{dot, Scalar};
use crate::polytope::{FaceLattice, FacetSet, PolytopeSpec, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Self {
        FVector(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HVector(Vec<i64>);

impl HVector {
    pub fn new(entries: Vec<i64>) -> Self {
        HVector(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn reversed(&self) -> HVector {
        HVector(self.0.iter().rev().copied().collect())
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// `h_k = sum_{i=0}^{k} (-1)^(k-i) C(n-i, n-k) f_(n-i)`.
pub fn h_from_f(f: &FVector) -> HVector {
    let n = f.dim();
    let fv = f.entries();
    let h = (0..=n)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let term = binomial((n - i) as i64, (n - k) as i64) * fv[n - i] as i64;
                    if (k - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    HVector(h)
}

/// Palindrome test `h_k = h_(n-k)`.
pub fn dehn_sommerville(h: &HVector) -> bool {
    let e = h.entries();
    e.iter().eq(e.iter().rev())
}

pub fn heights(vertices: &[Vertex], direction: &[Scalar]) -> Vec<Scalar> {
    vertices.iter().map(|v| dot(&v.coords, direction)).collect()
}

/// Vertex ids sorted by increasing height, or the first colliding pair.
fn height_order(heights: &[Scalar]) -> std::result::Result<Vec<usize>, (usize, usize)> {
    let mut order: Vec<usize> = (0..heights.len()).collect();
    order.sort_by(|&a, &b| heights[a].cmp_value(&heights[b]));
    for w in order.windows(2) {
        if heights[w[0]] == heights[w[1]] {
            return Err((w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    Ok(order)
}

/// True when all vertex heights along `direction` are pairwise distinct.
///
/// A linear function with distinct vertex values is non-constant on every
/// edge, hence on every positive-dimensional face, so this is the whole
/// genericity condition.
pub fn is_generic(vertices: &[Vertex], direction: &[Scalar]) -> bool {
    height_order(&heights(vertices, direction)).is_ok()
}

const INITIAL_RANGE: i64 = 1 << 10;
const DIRECTION_RETRIES: u32 = 24;

/// Deterministic generic direction with integer coordinates drawn from
/// `[-R, R]`, `R` doubling on every rejected candidate.
pub fn generic_direction(
    spec: &PolytopeSpec,
    vertices: &[Vertex],
    seed: u64,
) -> Result<Vec<Scalar>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut range = INITIAL_RANGE;
    for _ in 0..DIRECTION_RETRIES {
        let coords: Vec<i64> = (0..spec.n)
            .map(|_| rng.random_range(-range..=range))
            .collect();
        range = range.saturating_mul(2);
        if coords.iter().all(|&c| c == 0) {
            continue;
        }
        let dir: Vec<Scalar> = coords
            .iter()
            .map(|&c| Scalar::from_int(c, spec.field))
            .collect();
        if is_generic(vertices, &dir) {
            return Ok(dir);
        }
    }
    Err(GeometryError::DirectionBudget {
        seed,
        retries: DIRECTION_RETRIES,
    }
    .into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseVertex {
    /// Index into the vertex list.
    pub vertex: usize,
    pub active: FacetSet,
    pub height: Scalar,
    pub index: usize,
    /// `I_(F_k)` of the largest face having this vertex as its lowest point.
    pub face: FacetSet,
    pub face_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseData {
    pub n: usize,
    pub direction: Vec<Scalar>,
    /// Vertices by strictly increasing height.
    pub order: Vec<MorseVertex>,
}

pub fn morse_data(
    spec: &PolytopeSpec,
    vertices: &[Vertex],
    lattice: &FaceLattice,
    direction: &[Scalar],
) -> Result<MorseData> {
    let hs = heights(vertices, direction);
    let order = height_order(&hs).map_err(|(a, b)| GeometryError::NonGeneric(a, b))?;

    let mut entries = Vec::with_capacity(order.len());
    for &id in &order {
        let v = &vertices[id];
        let mut face = FacetSet::EMPTY;
        let mut upward = 0;
        for (j, other) in lattice.vertex_edges(v, id) {
            if hs[other].cmp_value(&hs[id]).is_lt() {
                face = face.with(j);
            } else {
                upward += 1;
            }
        }
        let index = face.len();
        let f = lattice.face(face).ok_or_else(|| {
            Error::invariant(format!(
                "descending set {{{face}}} at vertex {{{}}} is not a face",
                v.active
            ))
        })?;
        if f.dim != upward {
            return Err(Error::invariant(format!(
                "face {{{face}}} has dimension {} but vertex {{{}}} has {upward} upward edges",
                f.dim, v.active
            )));
        }
        if f.vertices.iter().any(|&w| hs[w].cmp_value(&hs[id]).is_lt()) {
            return Err(Error::invariant(format!(
                "vertex {{{}}} is not the lowest point of face {{{face}}}",
                v.active
            )));
        }
        entries.push(MorseVertex {
            vertex: id,
            active: v.active,
            height: hs[id].clone(),
            index,
            face,
            face_dim: spec.n - index,
        });
    }
    Ok(MorseData {
        n: spec.n,
        direction: direction.to_vec(),
        order: entries,
    })
}

/// Histogram of vertex indices.
pub fn h_from_morse(md: &MorseData) -> HVector {
    let mut h = vec![0i64; md.n + 1];
    for v in &md.order {
        h[v.index] += 1;
    }
    HVector(h)
}
