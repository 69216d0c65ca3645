//! End-to-end analysis of a polytope spec.

use crate::atlas::{self, Chart, OverlapRecord, Stratum};
use crate::cohomology::{self, BettiVector, Filtration};
use crate::combinatorics::{self, FVector, HVector, MorseData};
use crate::error::Result;
use crate::exactnum::Scalar;
use crate::polytope::{self, FaceLattice, FacetSet, PolytopeSpec, Vertex};
use crate::quasilattice::{self, KernelBasis, Quasilattice};

#[derive(Debug, Clone)]
pub struct Analysis {
    pub spec: PolytopeSpec,
    pub seed: u64,
    pub vertices: Vec<Vertex>,
    pub lattice: FaceLattice,
    pub f: FVector,
    pub h_from_f: HVector,
    pub morse: MorseData,
    pub h_from_morse: HVector,
    pub zrank: usize,
    pub rational: bool,
    pub kernel: KernelBasis,
    pub charts: Vec<Chart>,
    pub strata: Vec<Stratum>,
    pub overlaps: Vec<OverlapRecord>,
    pub betti_from_h: BettiVector,
    pub filtration: Filtration,
}

pub fn analyze(spec: &PolytopeSpec, seed: u64) -> Result<Analysis> {
    analyze_with_direction(spec, seed, None)
}

/// Like [`analyze`], but with an explicit height direction when given.
pub fn analyze_with_direction(
    spec: &PolytopeSpec,
    seed: u64,
    direction: Option<Vec<Scalar>>,
) -> Result<Analysis> {
    let vertices = polytope::simple_vertices(spec)?;
    let lattice = polytope::build_face_lattice(spec, &vertices)?;
    let f = polytope::f_vector(&lattice);
    let h_from_f = combinatorics::h_from_f(&f);

    let direction = match direction {
        Some(d) => d,
        None => combinatorics::generic_direction(spec, &vertices, seed)?,
    };
    let morse = combinatorics::morse_data(spec, &vertices, &lattice, &direction)?;
    let h_from_morse = combinatorics::h_from_morse(&morse);

    let q = Quasilattice::from_spec(spec);
    let zrank = quasilattice::quasilattice_zrank(&q);
    let kernel = quasilattice::kernel_basis(spec)?;
    let charts = atlas::charts(spec, &vertices)?;
    let strata = atlas::strata(&lattice);
    let overlaps = atlas::overlap_records(&morse)?;

    let betti_from_h = cohomology::betti_from_h(&h_from_f).map_err(invariant)?;
    let filtration = cohomology::mv_filtration(&morse).map_err(invariant)?;

    Ok(Analysis {
        spec: spec.clone(),
        seed,
        vertices,
        lattice,
        f,
        h_from_f,
        morse,
        h_from_morse,
        zrank,
        rational: zrank == spec.n,
        kernel,
        charts,
        strata,
        overlaps,
        betti_from_h,
        filtration,
    })
}

fn invariant(e: cohomology::BettiError) -> crate::Error {
    crate::Error::Invariant(e.to_string())
}

impl Analysis {
    /// Every cross-check that failed, empty when the run is consistent.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.spec.n;
        let h = self.h_from_f.entries();
        let f = self.f.entries();
        let f0 = f[0] as i64;
        if self.h_from_f != self.h_from_morse {
            out.push(format!(
                "h-vector from f ({}) differs from index histogram ({})",
                self.h_from_f, self.h_from_morse
            ));
        }
        if !combinatorics::dehn_sommerville(&self.h_from_f) {
            out.push(format!("h-vector {} is not palindromic", self.h_from_f));
        }
        if h[0] != 1 || h[n] != 1 {
            out.push("h_0 and h_n must be 1".into());
        }
        if n >= 1 && h[1] != f[n - 1] as i64 - (n as i64) * f[n] as i64 {
            out.push("h_1 differs from f_(n-1) - n f_n".into());
        }
        if self.h_from_f.sum() != f0 {
            out.push(format!(
                "sum of h is {} but f_0 is {f0}",
                self.h_from_f.sum()
            ));
        }
        if self.filtration.betti != self.betti_from_h {
            out.push(format!(
                "filtration Betti numbers ({}) differ from closed form ({})",
                self.filtration.betti, self.betti_from_h
            ));
        }
        if !self.filtration.betti.is_palindrome() {
            out.push("Betti numbers are not palindromic".into());
        }
        if cohomology::euler_characteristic(&self.filtration.betti) != f0 {
            out.push("Euler characteristic differs from f_0".into());
        }
        if self.charts.len() != self.vertices.len() {
            out.push("chart count differs from f_0".into());
        }
        let faces: u64 = f.iter().sum();
        if self.strata.len() as u64 != faces {
            out.push("stratum count differs from the number of faces".into());
        }
        if self
            .charts
            .iter()
            .any(|c| !c.strata.contains(&FacetSet::EMPTY))
        {
            out.push("a chart misses the dense stratum".into());
        }
        if self.rational != (self.zrank == n) {
            out.push("rationality flag inconsistent with zrank".into());
        }
        out
    }
}

/// Index histograms for `count` consecutive seeds starting at `seed`.
pub fn histograms_over_seeds(
    spec: &PolytopeSpec,
    vertices: &[Vertex],
    lattice: &FaceLattice,
    seed: u64,
    count: u64,
) -> Result<Vec<(Vec<Scalar>, HVector)>> {
    (seed..seed + count)
        .map(|s| {
            let dir = combinatorics::generic_direction(spec, vertices, s)?;
            let md = combinatorics::morse_data(spec, vertices, lattice, &dir)?;
            Ok((dir, combinatorics::h_from_morse(&md)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn builtins_are_consistent() {
        for name in fixtures::SIMPLE_FIXTURES {
            let a = analyze(&fixtures::fixture(name).unwrap(), 3).unwrap();
            assert!(a.failures().is_empty(), "{name}: {:?}", a.failures());
        }
    }

    #[test]
    fn pyramid_is_rejected() {
        let err = analyze(&fixtures::fixture("pyramid").unwrap(), 0).unwrap_err();
        assert!(err.to_string().contains("lies on 4 facets"));
    }
}
