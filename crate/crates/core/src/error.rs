use thiserror::Error;

use crate::exactnum::{NumError, Scalar};
use crate::polytope::SimplicityReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error("line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            msg: msg.into(),
        }
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("polytope is empty")]
    Empty,
    #[error("polytope is unbounded along direction ({})", fmt_point(.0))]
    Unbounded(Vec<Scalar>),
    #[error("facet normals do not span the ambient space")]
    Degenerate,
    #[error("{0}")]
    NotSimple(Box<SimplicityReport>),
    #[error("{0} facets exceed the supported maximum of 64")]
    TooManyFacets(usize),
    #[error("facet {0} has a zero normal")]
    ZeroNormal(usize),
    #[error("no generic direction found after {retries} retries (seed {seed})")]
    DirectionBudget { seed: u64, retries: u32 },
    #[error("direction is not generic: vertices {0} and {1} have equal height")]
    NonGeneric(usize, usize),
    #[error("no vertex with active set {0}")]
    UnknownVertex(String),
}

pub(crate) fn fmt_point(coords: &[Scalar]) -> String {
    coords
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
