//! Combinatorial atlas of the quasitoric space: strata of the open set
//! `C^d_Delta`, one chart per vertex with its model group, the orbit
//! census, and the overlap data of the chart filtration. Also the
//! line-oriented atlas document.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::combinatorics::MorseData;
use crate::error::{Error, Result};
use crate::pipeline::Analysis;
use crate::polytope::{parse_spec, FaceLattice, FacetSet, PolytopeSpec, Vertex};
use crate::quasilattice::{gamma_generators, gamma_structure, GammaGenerator, GroupStructure};

/// `C^F x (C*)^(F^c)`: coordinates in `I_F` may vanish, the rest may not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub face: FacetSet,
    pub zero_coords: FacetSet,
    pub free_coords: FacetSet,
}

pub fn strata(lattice: &FaceLattice) -> Vec<Stratum> {
    lattice
        .faces()
        .iter()
        .map(|f| Stratum {
            face: f.active,
            zero_coords: f.active,
            free_coords: f.active.complement(lattice.d()),
        })
        .collect()
}

/// Chart `C^nu / Gamma_nu -> V_nu`, `[z] -> [z + 1_(nu^c)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    pub vertex: FacetSet,
    pub model_dimension: usize,
    pub generators: Vec<GammaGenerator>,
    pub group: GroupStructure,
    /// Coordinates set to 1 by the chart map, `nu^c`.
    pub anchor: FacetSet,
    /// Faces whose strata lie in `V_nu`: those with `I_F ⊆ I_nu`.
    pub strata: Vec<FacetSet>,
}

pub fn charts(spec: &PolytopeSpec, vertices: &[Vertex]) -> Result<Vec<Chart>> {
    vertices
        .iter()
        .map(|v| {
            let generators = gamma_generators(spec, v)?;
            let elems: Vec<_> = generators.iter().map(|g| g.element.clone()).collect();
            let mut strata: Vec<FacetSet> = v.active.subsets().collect();
            strata.sort();
            Ok(Chart {
                vertex: v.active,
                model_dimension: spec.n,
                group: gamma_structure(&elems),
                generators,
                anchor: v.active.complement(spec.d()),
                strata,
            })
        })
        .collect()
}

/// Two charts `V_nu`, `V_mu`. Their overlap is the union of the strata with
/// `I_F ⊆ I_nu ∩ I_mu`; it always holds the dense stratum `I_F = ∅`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartPair {
    pub first: FacetSet,
    pub second: FacetSet,
    pub shared: FacetSet,
}

/// Adjacency of every pair of charts, in chart order.
pub fn chart_pairs(charts: &[Chart]) -> Vec<ChartPair> {
    let mut out = Vec::new();
    for (i, a) in charts.iter().enumerate() {
        for b in &charts[i + 1..] {
            out.push(ChartPair {
                first: a.vertex,
                second: b.vertex,
                shared: a.vertex.intersection(b.vertex),
            });
        }
    }
    out
}

/// Number of torus orbits of each complex dimension; an `r`-face carries an
/// `r`-dimensional orbit.
pub fn orbit_census(lattice: &FaceLattice) -> BTreeMap<usize, usize> {
    let mut census = BTreeMap::new();
    for f in lattice.faces() {
        *census.entry(f.dim).or_insert(0) += 1;
    }
    census
}

/// `W_(k-1) ∩ V_k ≅ ((C^(F_k) \ 0) x C^(nu_k \ F_k)) / Gamma`, which has the
/// cohomology of a sphere of real dimension `2 |F_k| - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapRecord {
    pub step: usize,
    pub vertex: FacetSet,
    pub face: FacetSet,
    pub sphere_dim: usize,
    pub residual_block: FacetSet,
}

/// One record per filtration step `k = 2..f_0`.
pub fn overlap_records(md: &MorseData) -> Result<Vec<OverlapRecord>> {
    md.order
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, v)| {
            if v.index == 0 || v.face.len() != v.index {
                return Err(Error::invariant(format!(
                    "filtration step {} has index {} and face {{{}}}",
                    k + 1,
                    v.index,
                    v.face
                )));
            }
            Ok(OverlapRecord {
                step: k + 1,
                vertex: v.active,
                face: v.face,
                sphere_dim: 2 * v.index - 1,
                residual_block: v.active.difference(v.face),
            })
        })
        .collect()
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Atlas document. Section and record order is fixed, so equal inputs give
/// byte-identical output.
pub fn emit_atlas(a: &Analysis) -> String {
    let mut out = String::new();
    let w = &mut out;
    w.push_str("[spec]\n");
    w.push_str(&a.spec.to_string());

    writeln!(w, "[fvector]\n{}", a.f).unwrap();
    writeln!(w, "[hvector]\n{}", a.h_from_f).unwrap();
    writeln!(w, "[rational]\nrational {}\nzrank {}", a.rational, a.zrank).unwrap();

    w.push_str("[charts]\n");
    for c in &a.charts {
        let torsion = join(c.group.torsion.iter());
        let order = c
            .group
            .order
            .as_ref()
            .map_or("inf".into(), ToString::to_string);
        let gens = join(
            c.generators
                .iter()
                .map(|g| format!("{}:{}", g.label, g.element)),
        );
        writeln!(
            w,
            "vertex={} dim={} group={} kind={} order={} free_rank={} torsion={} anchor={} gens={}",
            c.vertex,
            c.model_dimension,
            c.group.to_string().replace(' ', ""),
            c.group.kind,
            order,
            c.group.free_rank,
            torsion.replace(' ', ","),
            c.anchor,
            gens.replace(' ', ";"),
        )
        .unwrap();
    }

    w.push_str("[strata]\n");
    for s in &a.strata {
        writeln!(
            w,
            "face={} zero={} free={}",
            s.face, s.zero_coords, s.free_coords
        )
        .unwrap();
    }

    w.push_str("[morse]\n");
    writeln!(w, "seed {}", a.seed).unwrap();
    writeln!(w, "direction {}", join(a.morse.direction.iter())).unwrap();
    for (k, v) in a.morse.order.iter().enumerate() {
        writeln!(
            w,
            "k={} vertex={} height={} index={} face={} face_dim={}",
            k + 1,
            v.active,
            v.height,
            v.index,
            v.face,
            v.face_dim
        )
        .unwrap();
    }

    w.push_str("[overlaps]\n");
    for r in &a.overlaps {
        writeln!(
            w,
            "k={} vertex={} face={} sphere_dim={} residual={}",
            r.step, r.vertex, r.face, r.sphere_dim, r.residual_block
        )
        .unwrap();
    }

    writeln!(w, "[betti]\n{}", a.filtration.betti).unwrap();
    out
}

/// The echoed `[spec]` section of an atlas document.
pub fn parse_atlas_spec(doc: &str) -> Result<PolytopeSpec> {
    let mut lines = doc.lines().skip_while(|l| l.trim() != "[spec]");
    if lines.next().is_none() {
        return Err(Error::parse(1, 1, "atlas document has no [spec] section"));
    }
    let body: Vec<&str> = lines.take_while(|l| !l.starts_with('[')).collect();
    let name = body
        .first()
        .and_then(|l| l.strip_prefix("# "))
        .map(str::to_string);
    let mut spec = parse_spec(&body.join("\n"))?;
    spec.name = name;
    Ok(spec)
}
