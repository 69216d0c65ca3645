//! Simple polytopes given by halfspaces `<mu, X_j> >= lambda_j`.
//!
//! Vertices are enumerated exactly by solving every `n`-subset of facet
//! equations; the face lattice of a simple polytope then follows from the
//! vertex active sets alone.

mod facet_set;
mod lattice;
mod spec_file;

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{fmt_point, GeometryError, Result};
use crate::exactnum::{dot, FieldSpec, Scalar};
use crate::linalg;

pub use facet_set::{FacetSet, MAX_FACETS};
pub use lattice::{build_face_lattice, f_vector, Face, FaceLattice};
pub use spec_file::{format_spec, parse_spec};

/// One facet inequality `<mu, normal> >= offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Vec<Scalar>,
    pub offset: Scalar,
}

/// H-representation of a polytope plus optional extra quasilattice
/// generators. Facet order is significant: it fixes the facet indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeSpec {
    pub n: usize,
    pub field: FieldSpec,
    pub facets: Vec<Halfspace>,
    pub extra_generators: Vec<Vec<Scalar>>,
    pub name: Option<String>,
}

impl PolytopeSpec {
    pub fn d(&self) -> usize {
        self.facets.len()
    }

    pub fn normals(&self) -> impl Iterator<Item = &[Scalar]> {
        self.facets.iter().map(|h| h.normal.as_slice())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Slack `<mu, X_j> - lambda_j` of facet `j` at `point`.
    pub fn slack(&self, j: usize, point: &[Scalar]) -> Scalar {
        let h = &self.facets[j];
        dot(point, &h.normal) - &h.offset
    }

    fn validate(&self) -> Result<()> {
        if self.d() > MAX_FACETS {
            return Err(GeometryError::TooManyFacets(self.d()).into());
        }
        for (j, h) in self.facets.iter().enumerate() {
            if h.normal.iter().all(Scalar::is_zero) {
                return Err(GeometryError::ZeroNormal(j + 1).into());
            }
        }
        Ok(())
    }
}

impl fmt::Display for PolytopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_spec(self))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub coords: Vec<Scalar>,
    /// Every facet tight at this point.
    pub active: FacetSet,
}

/// Exact vertex set, sorted by active set.
///
/// Points tight on more than `n` facets are kept once with the full tight
/// set, so non-simple vertices surface in [`check_simple`].
pub fn enumerate_vertices(spec: &PolytopeSpec) -> Result<Vec<Vertex>> {
    spec.validate()?;
    let n = spec.n;
    let normals: Vec<Vec<Scalar>> = spec.normals().map(<[Scalar]>::to_vec).collect();
    if linalg::rank(&normals) < n {
        return Err(GeometryError::Degenerate.into());
    }

    let mut found: BTreeMap<FacetSet, Vec<Scalar>> = BTreeMap::new();
    for subset in (0..spec.d()).combinations(n) {
        let key = FacetSet::from_indices(subset.iter().copied());
        // A subsystem inside a known tight set can only reproduce that vertex.
        if found.keys().any(|t| key.is_subset(*t)) {
            continue;
        }
        let a: Vec<Vec<Scalar>> = subset.iter().map(|&j| normals[j].clone()).collect();
        let b: Vec<Scalar> = subset
            .iter()
            .map(|&j| spec.facets[j].offset.clone())
            .collect();
        let Some(point) = linalg::solve(&a, &b) else {
            continue;
        };
        let mut active = FacetSet::EMPTY;
        let mut feasible = true;
        for j in 0..spec.d() {
            match spec.slack(j, &point).sign() {
                0 => active = active.with(j),
                s if s < 0 => {
                    feasible = false;
                    break;
                }
                _ => {}
            }
        }
        if feasible {
            found.insert(active, point);
        }
    }

    if found.is_empty() {
        return Err(GeometryError::Empty.into());
    }
    if let Some(dir) = recession_direction(spec) {
        return Err(GeometryError::Unbounded(dir).into());
    }
    Ok(found
        .into_iter()
        .map(|(active, coords)| Vertex { coords, active })
        .collect())
}

/// A nonzero `y` with `<y, X_j> >= 0` for all `j`, if one exists.
///
/// With spanning normals the recession cone is pointed, so it is nontrivial
/// exactly when it has an extreme ray; extreme rays lie on `n-1`
/// independent facet hyperplanes.
pub fn recession_direction(spec: &PolytopeSpec) -> Option<Vec<Scalar>> {
    let n = spec.n;
    let normals: Vec<Vec<Scalar>> = spec.normals().map(<[Scalar]>::to_vec).collect();
    for subset in (0..spec.d()).combinations(n - 1) {
        let rows: Vec<Vec<Scalar>> = subset.iter().map(|&j| normals[j].clone()).collect();
        let kernel = linalg::nullspace(&rows, n, spec.field);
        if kernel.len() != 1 {
            continue;
        }
        let y = &kernel[0];
        for cand in [y.clone(), y.iter().map(|x| -x).collect::<Vec<_>>()] {
            if normals.iter().all(|x| dot(&cand, x).sign() >= 0) {
                return Some(cand);
            }
        }
    }
    None
}

/// Outcome of the simplicity check; every violation is listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityReport {
    pub n: usize,
    /// Vertex coordinates and active sets with more than `n` facets.
    pub nonsimple_vertices: Vec<Vertex>,
    /// 1-based indices of facets that are not genuine facets: tight on a
    /// set of too small dimension, or duplicating an earlier facet.
    pub redundant_facets: Vec<usize>,
    pub bounded: bool,
    /// Dimension of the affine hull of the vertices.
    pub affine_dim: usize,
}

impl SimplicityReport {
    pub fn full_dimensional(&self) -> bool {
        self.affine_dim == self.n
    }

    pub fn is_simple(&self) -> bool {
        self.nonsimple_vertices.is_empty()
            && self.redundant_facets.is_empty()
            && self.bounded
            && self.full_dimensional()
    }
}

impl fmt::Display for SimplicityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_simple() {
            return f.write_str("polytope is simple");
        }
        let mut lines = Vec::new();
        for v in &self.nonsimple_vertices {
            lines.push(format!(
                "vertex ({}) lies on {} facets",
                fmt_point(&v.coords),
                v.active.len()
            ));
        }
        for j in &self.redundant_facets {
            lines.push(format!("facet {j} is redundant"));
        }
        if !self.bounded {
            lines.push("polytope is unbounded".into());
        }
        if !self.full_dimensional() {
            lines.push(format!(
                "polytope has dimension {} < {}",
                self.affine_dim, self.n
            ));
        }
        write!(f, "{}; polytope not simple", lines.join("; "))
    }
}

/// Dimension of the affine hull of `points`; `None` for the empty set.
fn affine_dim(points: &[&[Scalar]]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<Vec<Scalar>> = rest
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(x, y)| x - y).collect())
        .collect();
    Some(if diffs.is_empty() {
        0
    } else {
        linalg::rank(&diffs)
    })
}

pub fn check_simple(spec: &PolytopeSpec, vertices: &[Vertex]) -> SimplicityReport {
    let n = spec.n;
    let nonsimple_vertices = vertices
        .iter()
        .filter(|v| v.active.len() != n)
        .cloned()
        .collect();

    let mut redundant_facets = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for j in 0..spec.d() {
        let on: Vec<usize> = (0..vertices.len())
            .filter(|&i| vertices[i].active.contains(j))
            .collect();
        let pts: Vec<&[Scalar]> = on.iter().map(|&i| vertices[i].coords.as_slice()).collect();
        let genuine = affine_dim(&pts) == Some(n - 1);
        if !genuine || seen.contains(&on) {
            redundant_facets.push(j + 1);
        }
        seen.push(on);
    }

    let all: Vec<&[Scalar]> = vertices.iter().map(|v| v.coords.as_slice()).collect();
    SimplicityReport {
        n,
        nonsimple_vertices,
        redundant_facets,
        bounded: recession_direction(spec).is_none(),
        affine_dim: affine_dim(&all).unwrap_or(0),
    }
}

/// Enumerates vertices and rejects anything that is not a simple polytope.
pub fn simple_vertices(spec: &PolytopeSpec) -> Result<Vec<Vertex>> {
    let vertices = enumerate_vertices(spec)?;
    let report = check_simple(spec, &vertices);
    if !report.is_simple() {
        return Err(GeometryError::NotSimple(Box::new(report)).into());
    }
    Ok(vertices)
}
