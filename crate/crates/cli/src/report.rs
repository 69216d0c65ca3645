//! Human-readable reports. Scalars are printed exactly, with a decimal
//! approximation in parentheses when they are not integers.

use std::fmt::Write as _;

use qtoric::atlas::Chart;
use qtoric::cohomology::{format_polynomial, poincare_polynomial};
use qtoric::combinatorics::HVector;
use qtoric::pipeline::histograms_over_seeds;
use qtoric::polytope::simple_vertices;
use qtoric::quasilattice::{gamma_generators, gamma_structure, GroupStructure};
use qtoric::{analyze, fixtures, Analysis, FacetSet, GeometryError, PolytopeSpec, Result, Scalar};

fn is_integer(x: &Scalar) -> bool {
    x.is_rational() && x.rational_part().is_integer()
}

fn approx(x: &Scalar) -> String {
    if is_integer(x) {
        x.to_string()
    } else {
        format!("{x} (≈{:.6})", x.to_f64())
    }
}

fn point(coords: &[Scalar]) -> String {
    let exact: Vec<String> = coords.iter().map(ToString::to_string).collect();
    let mut s = format!("({})", exact.join(","));
    if !coords.iter().all(is_integer) {
        let dec: Vec<String> = coords
            .iter()
            .map(|x| format!("{:.6}", x.to_f64()))
            .collect();
        write!(s, " (≈{})", dec.join(",")).unwrap();
    }
    s
}

fn braces(set: FacetSet) -> String {
    format!("{{{set}}}")
}

/// Left-aligned columns separated by two spaces.
fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        writeln!(out, "  {}", padded.join("  ").trim_end()).unwrap();
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
}

fn group_cells(g: &GroupStructure) -> Vec<String> {
    let torsion: Vec<String> = g.torsion.iter().map(ToString::to_string).collect();
    vec![
        g.to_string(),
        g.kind.to_string(),
        g.order.as_ref().map_or("inf".into(), ToString::to_string),
        g.free_rank.to_string(),
        if torsion.is_empty() {
            "-".into()
        } else {
            torsion.join(",")
        },
    ]
}

fn header(out: &mut String, spec: &PolytopeSpec) {
    writeln!(out, "spec: {}", spec.name.as_deref().unwrap_or("(unnamed)")).unwrap();
    writeln!(out, "field: {}", spec.field).unwrap();
    writeln!(out, "n: {}  d: {}", spec.n, spec.d()).unwrap();
}

fn vertex_table(out: &mut String, a: &Analysis) {
    let rows: Vec<Vec<String>> = a
        .morse
        .order
        .iter()
        .enumerate()
        .map(|(k, v)| {
            vec![
                (k + 1).to_string(),
                braces(v.active),
                point(&a.vertices[v.vertex].coords),
                approx(&v.height),
                v.index.to_string(),
                braces(v.face),
                v.face_dim.to_string(),
            ]
        })
        .collect();
    table(
        out,
        &["k", "vertex", "coords", "height", "index", "F_k", "dim F_k"],
        &rows,
    );
}

fn chart_table(out: &mut String, charts: &[Chart]) {
    let rows: Vec<Vec<String>> = charts
        .iter()
        .map(|c| {
            let mut row = vec![braces(c.vertex)];
            row.extend(group_cells(&c.group));
            row
        })
        .collect();
    table(
        out,
        &["vertex", "group", "kind", "order", "free_rank", "torsion"],
        &rows,
    );
}

/// Full report; returns the failed cross-checks.
pub fn check(
    out: &mut String,
    spec: &PolytopeSpec,
    seed: u64,
    directions: u64,
) -> Result<Vec<String>> {
    let a = analyze(spec, seed)?;
    let mut failures = a.failures();

    header(out, spec);
    writeln!(out, "simple: yes").unwrap();
    writeln!(out, "seed: {seed}").unwrap();
    writeln!(out, "f: {}", a.f).unwrap();
    writeln!(out, "h (from f): {}", a.h_from_f).unwrap();
    writeln!(out, "h (from indices): {}", a.h_from_morse).unwrap();
    writeln!(out, "rational: {} (zrank {})", a.rational, a.zrank).unwrap();
    writeln!(out, "direction: {}", point(&a.morse.direction)).unwrap();
    writeln!(out, "vertices:").unwrap();
    vertex_table(out, &a);
    writeln!(out, "charts:").unwrap();
    chart_table(out, &a.charts);
    let agree = if a.filtration.betti == a.betti_from_h {
        "methods agree"
    } else {
        "methods DISAGREE"
    };
    writeln!(out, "b: {} ({agree})", a.filtration.betti).unwrap();

    if directions > 0 {
        let start = seed.wrapping_add(1);
        let hists = histograms_over_seeds(spec, &a.vertices, &a.lattice, start, directions)?;
        let bad: Vec<&HVector> = hists
            .iter()
            .map(|(_, h)| h)
            .filter(|h| **h != a.h_from_f)
            .collect();
        if bad.is_empty() {
            writeln!(
                out,
                "directions: {directions} more seeds, all histograms equal h"
            )
            .unwrap();
        } else {
            writeln!(
                out,
                "directions: {} of {directions} histograms differ from h",
                bad.len()
            )
            .unwrap();
            failures.extend(
                bad.iter()
                    .map(|h| format!("index histogram {h} differs from h {}", a.h_from_f)),
            );
        }
    }
    if failures.is_empty() {
        writeln!(out, "result: OK").unwrap();
    } else {
        writeln!(out, "result: FAILED ({} checks)", failures.len()).unwrap();
    }
    Ok(failures)
}

pub fn hvector(out: &mut String, spec: &PolytopeSpec) -> Result<()> {
    let vertices = simple_vertices(spec)?;
    let lattice = qtoric::polytope::build_face_lattice(spec, &vertices)?;
    let f = qtoric::polytope::f_vector(&lattice);
    writeln!(out, "f: {f}").unwrap();
    writeln!(out, "h: {}", qtoric::combinatorics::h_from_f(&f)).unwrap();
    Ok(())
}

/// Returns whether the two computations agree.
pub fn betti(out: &mut String, spec: &PolytopeSpec, seed: u64) -> Result<bool> {
    let a = analyze(spec, seed)?;
    let agree = a.filtration.betti == a.betti_from_h;
    if agree {
        writeln!(out, "b: {} (methods agree)", a.betti_from_h).unwrap();
    } else {
        writeln!(out, "b (closed form): {}", a.betti_from_h).unwrap();
        writeln!(out, "b (filtration): {}", a.filtration.betti).unwrap();
    }
    writeln!(
        out,
        "poincare: {}",
        format_polynomial(&poincare_polynomial(&a.betti_from_h))
    )
    .unwrap();
    writeln!(
        out,
        "euler: {}",
        qtoric::cohomology::euler_characteristic(&a.betti_from_h)
    )
    .unwrap();
    writeln!(out, "rational: {} (zrank {})", a.rational, a.zrank).unwrap();
    writeln!(out, "seed: {seed}").unwrap();
    Ok(agree)
}

pub fn morse(out: &mut String, spec: &PolytopeSpec, seed: u64) -> Result<()> {
    let a = analyze(spec, seed)?;
    writeln!(out, "seed: {seed}").unwrap();
    writeln!(out, "direction: {}", point(&a.morse.direction)).unwrap();
    vertex_table(out, &a);
    writeln!(out, "index histogram: {}", a.h_from_morse).unwrap();
    Ok(())
}

pub fn group(out: &mut String, spec: &PolytopeSpec, set: FacetSet) -> Result<()> {
    let vertices = simple_vertices(spec)?;
    let v = vertices
        .iter()
        .find(|v| v.active == set)
        .ok_or_else(|| GeometryError::UnknownVertex(set.to_string()))?;
    let gens = gamma_generators(spec, v)?;
    let structure = gamma_structure(&gens.iter().map(|g| g.element.clone()).collect::<Vec<_>>());

    writeln!(out, "vertex: {} at {}", braces(v.active), point(&v.coords)).unwrap();
    writeln!(out, "generators:").unwrap();
    let rows: Vec<Vec<String>> = gens
        .iter()
        .map(|g| {
            vec![
                g.label.to_string(),
                point(g.element.coords()),
                if g.element.is_torsion() {
                    "torsion"
                } else {
                    "irrational"
                }
                .into(),
            ]
        })
        .collect();
    table(out, &["source", "element mod 1", "type"], &rows);
    let cells = group_cells(&structure);
    writeln!(out, "group: {}", cells[0]).unwrap();
    writeln!(out, "kind: {}", cells[1]).unwrap();
    writeln!(out, "order: {}", cells[2]).unwrap();
    writeln!(out, "free_rank: {}", cells[3]).unwrap();
    writeln!(out, "torsion: {}", cells[4]).unwrap();
    Ok(())
}

pub fn examples(out: &mut String) {
    let rows: Vec<Vec<String>> = fixtures::FIXTURES
        .iter()
        .map(|name| {
            let spec = fixtures::fixture(name).expect("builtin fixture");
            vec![
                name.to_string(),
                spec.n.to_string(),
                spec.d().to_string(),
                spec.field.to_string(),
            ]
        })
        .collect();
    table(out, &["name", "n", "d", "field"], &rows);
}
