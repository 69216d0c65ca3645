//! Builtin polytope specs.

use std::fmt::Write as _;

use crate::polytope::{parse_spec, PolytopeSpec};

/// Every builtin name, in listing order.
pub const FIXTURES: &[&str] = &[
    "simplex-1",
    "simplex-2",
    "simplex-3",
    "simplex-4",
    "cube-2",
    "cube-3",
    "cube-4",
    "pentagon",
    "hexagon",
    "dodecahedron",
    "cp2-triangle",
    "weighted-triangle-2",
    "weighted-triangle-3",
    "golden-triangle",
    "golden-quad",
    "pyramid",
];

/// The builtins that are simple polytopes (all but `pyramid`).
pub const SIMPLE_FIXTURES: &[&str] = &[
    "simplex-1",
    "simplex-2",
    "simplex-3",
    "simplex-4",
    "cube-2",
    "cube-3",
    "cube-4",
    "pentagon",
    "hexagon",
    "dodecahedron",
    "cp2-triangle",
    "weighted-triangle-2",
    "weighted-triangle-3",
    "golden-triangle",
    "golden-quad",
];

fn unit(n: usize, i: usize, v: i64) -> String {
    (0..n)
        .map(|k| if k == i { v.to_string() } else { "0".into() })
        .collect::<Vec<_>>()
        .join(" ")
}

fn simplex(n: usize) -> String {
    let mut s = format!("# standard {n}-simplex\ndim {n}\n");
    for i in 0..n {
        writeln!(s, "facet {} | 0", unit(n, i, 1)).unwrap();
    }
    writeln!(s, "facet {} | -1", vec!["-1"; n].join(" ")).unwrap();
    s
}

fn cube(n: usize) -> String {
    let mut s = format!("# unit {n}-cube\ndim {n}\n");
    for i in 0..n {
        writeln!(s, "facet {} | 0", unit(n, i, 1)).unwrap();
    }
    for i in 0..n {
        writeln!(s, "facet {} | -1", unit(n, i, -1)).unwrap();
    }
    s
}

fn weighted_triangle(q: u32) -> String {
    format!("# triangle with normal (-1,-{q})\ndim 2\nfacet 1 0 | 0\nfacet 0 1 | 0\nfacet -1 -{q} | -1\n")
}

/// Regular dodecahedron: facet normals are the twelve icosahedron vertices
/// `(0,±1,±φ)`, `(±1,±φ,0)`, `(±φ,0,±1)`.
fn dodecahedron() -> String {
    let mut s = String::from("# regular dodecahedron, phi = 1/2+1/2s\ndim 3\nsqrt 5\n");
    let phi = |neg: bool| if neg { "-1/2-1/2s" } else { "1/2+1/2s" };
    let one = |neg: bool| if neg { "-1" } else { "1" };
    for (a, b) in [(false, false), (false, true), (true, false), (true, true)] {
        writeln!(s, "facet 0 {} {} | -1", one(a), phi(b)).unwrap();
        writeln!(s, "facet {} {} 0 | -1", one(a), phi(b)).unwrap();
        writeln!(s, "facet {} 0 {} | -1", phi(a), one(b)).unwrap();
    }
    s
}

const PENTAGON: &str = "\
# pentagon with vertices (0,0) (2,0) (2,1) (1,2) (0,2)
dim 2
facet 1 0 | 0
facet 0 1 | 0
facet -1 0 | -2
facet 0 -1 | -2
facet -1 -1 | -3
";

const HEXAGON: &str = "\
# hexagon with vertices (1,0) (2,0) (2,1) (1,2) (0,2) (0,1)
dim 2
facet 1 0 | 0
facet 0 1 | 0
facet -1 0 | -2
facet 0 -1 | -2
facet -1 -1 | -3
facet 1 1 | 1
";

const CP2_TRIANGLE: &str = "\
# Delzant triangle of the projective plane
dim 2
facet 1 0 | 0
facet 0 1 | 0
facet -1 -1 | -1
";

const GOLDEN_TRIANGLE: &str = "\
# triangle with normal (-1,-phi), phi = 1/2+1/2s
dim 2
sqrt 5
facet 1 0 | 0
facet 0 1 | 0
facet -1 -1/2-1/2s | -1
";

const GOLDEN_QUAD: &str = "\
# quadrilateral with one irrational normal (-1,-phi)
dim 2
sqrt 5
facet 1 0 | 0
facet 0 1 | 0
facet 0 -1 | -1
facet -1 -1/2-1/2s | -2
";

const PYRAMID: &str = "\
# square pyramid with apex (0,0,1); not simple
dim 3
facet 0 0 1 | 0
facet -1 0 -1 | -1
facet 1 0 -1 | -1
facet 0 -1 -1 | -1
facet 0 1 -1 | -1
";

/// Spec file text of a builtin, or `None` for an unknown name.
pub fn fixture_text(name: &str) -> Option<String> {
    let text = match name {
        "simplex-1" => simplex(1),
        "simplex-2" => simplex(2),
        "simplex-3" => simplex(3),
        "simplex-4" => simplex(4),
        "cube-2" => cube(2),
        "cube-3" => cube(3),
        "cube-4" => cube(4),
        "pentagon" => PENTAGON.into(),
        "hexagon" => HEXAGON.into(),
        "dodecahedron" => dodecahedron(),
        "cp2-triangle" => CP2_TRIANGLE.into(),
        "weighted-triangle-2" => weighted_triangle(2),
        "weighted-triangle-3" => weighted_triangle(3),
        "golden-triangle" => GOLDEN_TRIANGLE.into(),
        "golden-quad" => GOLDEN_QUAD.into(),
        "pyramid" => PYRAMID.into(),
        _ => return None,
    };
    Some(text)
}

/// Parsed builtin, named after itself.
pub fn fixture(name: &str) -> Option<PolytopeSpec> {
    let text = fixture_text(name)?;
    Some(
        parse_spec(&text)
            .expect("builtin spec parses")
            .with_name(name),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_parse() {
        for name in FIXTURES {
            let spec = fixture(name).unwrap();
            assert_eq!(spec.name.as_deref(), Some(*name));
        }
        assert!(fixture("nope").is_none());
        assert_eq!(fixture("cube-3").unwrap().d(), 6);
        assert_eq!(fixture("dodecahedron").unwrap().d(), 12);
    }
}
