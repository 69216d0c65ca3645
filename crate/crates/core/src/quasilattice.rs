//! The group-theoretic side: the projection `e_j -> X_j`, its kernel, the
//! quasilattice `Q` spanned by the normals, and the chart groups
//! `Gamma_nu = N ∩ T^nu`.
//!
//! At a simple vertex `nu` the projection restricted to the coordinates in
//! `I_nu` is the invertible matrix `A_nu` with columns `X_j, j ∈ I_nu`, so
//! `Gamma_nu ≅ A_nu^{-1}(Q) / Z^nu`. It is generated by the images
//! `A_nu^{-1} q mod 1` of the generators `q` of `Q`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, GeometryError, Result};
use crate::exactnum::{common_denominator, FieldSpec, Scalar};
use crate::linalg;
use crate::polytope::{PolytopeSpec, Vertex};
use crate::snf::smith_normal_form;

/// The `Z`-module generated by the facet normals and any extra generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quasilattice {
    pub n: usize,
    pub field: FieldSpec,
    pub generators: Vec<Vec<Scalar>>,
}

impl Quasilattice {
    pub fn from_spec(spec: &PolytopeSpec) -> Self {
        let generators = spec
            .normals()
            .map(<[Scalar]>::to_vec)
            .chain(spec.extra_generators.iter().cloned())
            .collect();
        Quasilattice {
            n: spec.n,
            field: spec.field,
            generators,
        }
    }

    /// Whether the generators span `R^n`.
    pub fn spans(&self) -> bool {
        linalg::rank(&self.generators) == self.n
    }
}

/// Rows of rationals: each generator's coordinates, rational parts first,
/// then (for a quadratic field) the sqrt parts.
fn embed(vectors: &[Vec<Scalar>], field: FieldSpec) -> Vec<Vec<Scalar>> {
    vectors
        .iter()
        .map(|v| {
            let mut row: Vec<Scalar> = v
                .iter()
                .map(|x| Scalar::rational(x.rational_part().clone(), FieldSpec::RATIONAL))
                .collect();
            if !field.is_rational() {
                row.extend(
                    v.iter()
                        .map(|x| Scalar::rational(x.sqrt_part().clone(), FieldSpec::RATIONAL)),
                );
            }
            row
        })
        .collect()
}

/// Rank of the generated `Z`-module: the `Q`-rank of the generators after
/// embedding `Q(sqrt d)^n` into `Q^{2n}`.
pub fn quasilattice_zrank(q: &Quasilattice) -> usize {
    linalg::rank(&embed(&q.generators, q.field))
}

/// A spanning finitely generated `Z`-module is a lattice iff its rank is `n`.
pub fn is_rational(q: &Quasilattice) -> bool {
    quasilattice_zrank(q) == q.n
}

/// Basis of `ker(pi) ⊂ R^d`, the Lie algebra of `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub vectors: Vec<Vec<Scalar>>,
}

pub fn kernel_basis(spec: &PolytopeSpec) -> Result<KernelBasis> {
    // n x d matrix whose columns are the normals.
    let normals: Vec<Vec<Scalar>> = spec.normals().map(<[Scalar]>::to_vec).collect();
    let pi = linalg::transpose(&normals);
    if linalg::rank(&pi) < spec.n {
        return Err(GeometryError::Degenerate.into());
    }
    Ok(KernelBasis {
        vectors: linalg::nullspace(&pi, spec.d(), spec.field),
    })
}

/// A point of a compact torus, coordinates reduced into `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusElement {
    coords: Vec<Scalar>,
}

impl TorusElement {
    pub fn new(coords: impl IntoIterator<Item = Scalar>) -> Self {
        TorusElement {
            coords: coords.into_iter().map(|x| x.fract()).collect(),
        }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn is_torsion(&self) -> bool {
        self.coords.iter().all(Scalar::is_rational)
    }

    /// Group operation.
    #[must_use]
    pub fn add(&self, other: &TorusElement) -> TorusElement {
        TorusElement::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b))
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        f.write_str(&crate::error::fmt_point(&self.coords))?;
        f.write_str(")")
    }
}

/// Which generator of `Q` an element of `Gamma_nu` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorLabel {
    /// Facet normal `X_j`, 0-based.
    Facet(usize),
    /// Extra `qgen` generator, 0-based.
    Extra(usize),
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorLabel::Facet(j) => write!(f, "X{}", j + 1),
            GeneratorLabel::Extra(i) => write!(f, "q{}", i + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaGenerator {
    pub label: GeneratorLabel,
    /// Coordinates indexed by `I_nu` in ascending order.
    pub element: TorusElement,
    /// `A_nu^{-1} q` before reduction mod 1.
    pub lift: Vec<Scalar>,
}

/// `A_nu^{-1} q mod Z^nu` for every generator `q` outside `I_nu`.
pub fn gamma_generators(spec: &PolytopeSpec, vertex: &Vertex) -> Result<Vec<GammaGenerator>> {
    if vertex.active.len() != spec.n {
        return Err(Error::invariant(format!(
            "vertex {{{}}} is not simple",
            vertex.active
        )));
    }
    let columns: Vec<Vec<Scalar>> = vertex
        .active
        .iter()
        .map(|j| spec.facets[j].normal.clone())
        .collect();
    let a = linalg::transpose(&columns);

    let sources = (0..spec.d())
        .filter(|&j| !vertex.active.contains(j))
        .map(|j| (GeneratorLabel::Facet(j), &spec.facets[j].normal))
        .chain(
            spec.extra_generators
                .iter()
                .enumerate()
                .map(|(i, g)| (GeneratorLabel::Extra(i), g)),
        );
    sources
        .map(|(label, q)| {
            let lift = linalg::solve(&a, q).ok_or_else(|| {
                Error::invariant(format!("chart matrix at {{{}}} is singular", vertex.active))
            })?;
            Ok(GammaGenerator {
                label,
                element: TorusElement::new(lift.iter().cloned()),
                lift,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Trivial,
    Finite,
    Infinite,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Trivial => "trivial",
            GroupKind::Finite => "finite",
            GroupKind::Infinite => "infinite",
        })
    }
}

/// Isomorphism type `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` of the subgroup of
/// the torus generated by `generators`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    pub kind: GroupKind,
    /// Group order, present exactly when the group is finite.
    pub order: Option<BigInt>,
    pub free_rank: usize,
    /// Invariant factors greater than 1, each dividing the next.
    pub torsion: Vec<BigInt>,
    pub generators: Vec<TorusElement>,
}

impl fmt::Display for GroupStructure {
    /// `trivial`, `Z2 x Z4`, `Z^1` and so on.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z{t}")));
        if parts.is_empty() {
            f.write_str("trivial")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

/// Structure of `L / Z^m` where `L = Z^m + sum Z g_i` for the lifts `g_i`.
///
/// Each lift is embedded into `Q^{2m}` (rational parts, then sqrt parts)
/// and scaled by the common denominator `M`. A Smith form of the stacked
/// rows gives a basis of `M L` together with a column transform; expressing
/// `M Z^m` in that basis yields a relation matrix whose Smith form is the
/// presentation of the quotient.
pub fn gamma_structure(gens: &[TorusElement]) -> GroupStructure {
    let generators = gens.to_vec();
    let Some(m) = gens.first().map(|g| g.coords().len()) else {
        return GroupStructure {
            kind: GroupKind::Trivial,
            order: Some(BigInt::one()),
            free_rank: 0,
            torsion: Vec::new(),
            generators,
        };
    };
    let width = 2 * m;

    let scale = common_denominator(gens.iter().flat_map(|g| g.coords()));
    let scale_q = BigRational::from_integer(scale.clone());
    let to_int = |r: &BigRational| {
        let v = r * &scale_q;
        debug_assert!(v.is_integer());
        v.to_integer()
    };
    let mut rows: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| {
            g.coords()
                .iter()
                .map(|x| to_int(x.rational_part()))
                .chain(g.coords().iter().map(|x| to_int(x.sqrt_part())))
                .collect()
        })
        .collect();
    for k in 0..m {
        let mut row = vec![BigInt::zero(); width];
        row[k] = scale.clone();
        rows.push(row);
    }

    let lattice = smith_normal_form(&rows, width);
    let r = lattice.rank();
    let q = &lattice.col_transform;
    let relations: Vec<Vec<BigInt>> = (0..m)
        .map(|k| {
            (0..r)
                .map(|j| {
                    let num = &scale * &q[k][j];
                    let s = &lattice.invariants[j];
                    debug_assert!((&num % s).is_zero(), "M Z^m lies in M L");
                    num / s
                })
                .collect()
        })
        .collect();
    let quotient = smith_normal_form(&relations, r);
    debug_assert_eq!(quotient.rank(), m);

    let free_rank = r - quotient.rank();
    let torsion: Vec<BigInt> = quotient
        .invariants
        .into_iter()
        .filter(|t| !t.is_one())
        .collect();
    let (kind, order) = if free_rank > 0 {
        (GroupKind::Infinite, None)
    } else if torsion.is_empty() {
        (GroupKind::Trivial, Some(BigInt::one()))
    } else {
        let order = torsion.iter().product();
        (GroupKind::Finite, Some(order))
    };
    GroupStructure {
        kind,
        order,
        free_rank,
        torsion,
        generators,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::dot;
    use crate::fixtures;
    use crate::polytope::{parse_spec, simple_vertices, FacetSet};
    use std::collections::HashSet;

    fn q5() -> FieldSpec {
        FieldSpec::sqrt(5).unwrap()
    }

    fn elem(xs: &[&str], field: FieldSpec) -> TorusElement {
        TorusElement::new(xs.iter().map(|x| Scalar::parse(x, field).unwrap()))
    }

    fn vertex(spec: &PolytopeSpec, active: &str) -> Vertex {
        let want: FacetSet = active.parse().unwrap();
        simple_vertices(spec)
            .unwrap()
            .into_iter()
            .find(|v| v.active == want)
            .unwrap()
    }

    /// Oracle: close the generator set under addition in the torus.
    /// Only meaningful for finite groups; gives up past `limit` elements.
    fn brute_force_order(gens: &[TorusElement], limit: usize) -> Option<usize> {
        let m = gens.first().map_or(0, |g| g.coords().len());
        let field = gens
            .first()
            .and_then(|g| g.coords().first())
            .map_or(FieldSpec::RATIONAL, Scalar::field);
        let zero = TorusElement::new(vec![Scalar::zero(field); m]);
        let mut seen: HashSet<TorusElement> = HashSet::from([zero.clone()]);
        let mut frontier = vec![zero];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.add(g);
                if seen.insert(y.clone()) {
                    if seen.len() > limit {
                        return None;
                    }
                    frontier.push(y);
                }
            }
        }
        Some(seen.len())
    }

    #[test]
    fn kernel_bases() {
        let tri = fixtures::fixture("cp2-triangle").unwrap();
        let k = kernel_basis(&tri).unwrap();
        let q = FieldSpec::RATIONAL;
        assert_eq!(k.vectors, vec![vec![Scalar::one(q); 3]]);

        let sq = fixtures::fixture("cube-2").unwrap();
        let k = kernel_basis(&sq).unwrap();
        let v = |xs: [i64; 4]| {
            xs.iter()
                .map(|&x| Scalar::from_int(x, q))
                .collect::<Vec<_>>()
        };
        assert_eq!(k.vectors, vec![v([1, 0, 1, 0]), v([0, 1, 0, 1])]);

        let golden = fixtures::fixture("golden-triangle").unwrap();
        let k = kernel_basis(&golden).unwrap();
        let phi = Scalar::parse("1/2+1/2s", q5()).unwrap();
        assert_eq!(
            k.vectors,
            vec![vec![Scalar::one(q5()), phi, Scalar::one(q5())]]
        );
    }

    #[test]
    fn kernel_vectors_annihilate_normals() {
        for name in fixtures::SIMPLE_FIXTURES {
            let spec = fixtures::fixture(name).unwrap();
            let k = kernel_basis(&spec).unwrap();
            assert_eq!(k.vectors.len(), spec.d() - spec.n, "{name}");
            for v in &k.vectors {
                for i in 0..spec.n {
                    let row: Vec<Scalar> = spec.normals().map(|x| x[i].clone()).collect();
                    assert!(dot(&row, v).is_zero(), "{name}");
                }
            }
        }
    }

    #[test]
    fn zrank_and_rationality() {
        let rank = |name: &str| {
            quasilattice_zrank(&Quasilattice::from_spec(&fixtures::fixture(name).unwrap()))
        };
        assert_eq!(rank("cp2-triangle"), 2);
        assert_eq!(rank("golden-triangle"), 3);
        assert_eq!(rank("cube-2"), 2);
        assert_eq!(rank("golden-quad"), 3);
        assert_eq!(rank("dodecahedron"), 6);
        for name in ["cp2-triangle", "cube-3", "weighted-triangle-2"] {
            assert!(
                is_rational(&Quasilattice::from_spec(&fixtures::fixture(name).unwrap())),
                "{name}"
            );
        }
        assert!(!is_rational(&Quasilattice::from_spec(
            &fixtures::fixture("golden-triangle").unwrap()
        )));
        assert!(Quasilattice::from_spec(&fixtures::fixture("golden-triangle").unwrap()).spans());
    }

    #[test]
    fn chart_generators() {
        let cp2 = fixtures::fixture("cp2-triangle").unwrap();
        let g = gamma_generators(&cp2, &vertex(&cp2, "1,2")).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].label, GeneratorLabel::Facet(2));
        assert!(g[0].element.is_zero());

        let w = fixtures::fixture("weighted-triangle-2").unwrap();
        let g = gamma_generators(&w, &vertex(&w, "1,3")).unwrap();
        assert_eq!(g[0].label, GeneratorLabel::Facet(1));
        assert_eq!(g[0].element, elem(&["1/2", "1/2"], FieldSpec::RATIONAL));

        let golden = fixtures::fixture("golden-triangle").unwrap();
        let g = gamma_generators(&golden, &vertex(&golden, "1,3")).unwrap();
        // -1/phi mod 1 = 2 - phi; it generates the same group as 1/phi.
        assert_eq!(g[0].element, elem(&["3/2-1/2s", "3/2-1/2s"], q5()));
        assert!(!g[0].element.is_torsion());
    }

    #[test]
    fn lifts_represent_their_generators() {
        // A_nu * (lift mod 1) - q must be an integer combination of the
        // columns of A_nu.
        for name in fixtures::SIMPLE_FIXTURES {
            let spec = fixtures::fixture(name).unwrap();
            for v in simple_vertices(&spec).unwrap() {
                let cols: Vec<Vec<Scalar>> = v
                    .active
                    .iter()
                    .map(|j| spec.facets[j].normal.clone())
                    .collect();
                for g in gamma_generators(&spec, &v).unwrap() {
                    let q = match g.label {
                        GeneratorLabel::Facet(j) => &spec.facets[j].normal,
                        GeneratorLabel::Extra(i) => &spec.extra_generators[i],
                    };
                    let reduced: Vec<Scalar> = (0..spec.n)
                        .map(|i| {
                            let row: Vec<Scalar> = cols.iter().map(|c| c[i].clone()).collect();
                            dot(&row, g.element.coords())
                        })
                        .collect();
                    let diff: Vec<Scalar> = reduced.iter().zip(q).map(|(a, b)| a - b).collect();
                    let a = linalg::transpose(&cols);
                    let coeffs = linalg::solve(&a, &diff).unwrap();
                    assert!(
                        coeffs
                            .iter()
                            .all(|c| c.is_rational() && c.rational_part().is_integer()),
                        "{name} {}",
                        v.active
                    );
                }
            }
        }
    }

    #[test]
    fn structures() {
        let q = FieldSpec::RATIONAL;
        let trivial = gamma_structure(&[elem(&["0", "0"], q)]);
        assert_eq!(trivial.kind, GroupKind::Trivial);
        assert_eq!(trivial.order, Some(BigInt::one()));
        assert_eq!(gamma_structure(&[]).kind, GroupKind::Trivial);

        let z2 = gamma_structure(&[elem(&["1/2", "1/2"], q)]);
        assert_eq!(z2.kind, GroupKind::Finite);
        assert_eq!(z2.order, Some(BigInt::from(2)));
        assert_eq!(z2.torsion, vec![BigInt::from(2)]);
        assert_eq!(z2.to_string(), "Z2");

        let klein = gamma_structure(&[elem(&["1/2", "0"], q), elem(&["0", "1/2"], q)]);
        assert_eq!(klein.torsion, vec![BigInt::from(2), BigInt::from(2)]);
        let z6 = gamma_structure(&[elem(&["1/2", "0"], q), elem(&["0", "1/3"], q)]);
        assert_eq!(z6.torsion, vec![BigInt::from(6)]);
        let mixed =
            gamma_structure(&[elem(&["1/4", "1/6", "0"], q), elem(&["0", "1/2", "2/3"], q)]);
        assert_eq!(
            mixed.order.unwrap(),
            BigInt::from(brute_force_order(&mixed.generators, 1000).unwrap())
        );

        let golden = gamma_structure(&[elem(&["-1/2+1/2s", "-1/2+1/2s"], q5())]);
        assert_eq!(golden.kind, GroupKind::Infinite);
        assert_eq!(golden.free_rank, 1);
        assert!(golden.torsion.is_empty());
        assert_eq!(golden.to_string(), "Z^1");

        let both = gamma_structure(&[elem(&["0+1s", "0"], q5()), elem(&["1/3", "0"], q5())]);
        assert_eq!(both.free_rank, 1);
        assert_eq!(both.torsion, vec![BigInt::from(3)]);
    }

    #[test]
    fn structure_is_invariant_under_permutation_and_zero() {
        let q = FieldSpec::RATIONAL;
        let a = elem(&["1/4", "1/6"], q);
        let b = elem(&["1/2", "2/3"], q);
        let z = elem(&["0", "0"], q);
        let s1 = gamma_structure(&[a.clone(), b.clone()]);
        let s2 = gamma_structure(&[b.clone(), a.clone(), z]);
        assert_eq!(
            (s1.order.clone(), s1.torsion.clone()),
            (s2.order, s2.torsion)
        );
        assert_eq!(
            s1.order.unwrap(),
            BigInt::from(brute_force_order(&[a, b], 1000).unwrap())
        );
    }

    #[test]
    fn finite_orders_match_brute_force() {
        for name in [
            "weighted-triangle-2",
            "weighted-triangle-3",
            "cp2-triangle",
            "cube-3",
        ] {
            let spec = fixtures::fixture(name).unwrap();
            for v in simple_vertices(&spec).unwrap() {
                let elems: Vec<TorusElement> = gamma_generators(&spec, &v)
                    .unwrap()
                    .into_iter()
                    .map(|g| g.element)
                    .collect();
                let s = gamma_structure(&elems);
                assert_eq!(
                    s.order.unwrap(),
                    BigInt::from(brute_force_order(&elems, 64).unwrap())
                );
            }
        }
    }

    #[test]
    fn extra_generators_enlarge_the_group() {
        let spec =
            parse_spec("dim 2\nfacet 1 0 | 0\nfacet 0 1 | 0\nfacet -1 -1 | -1\nqgen 1/3 0\n")
                .unwrap();
        let v = vertex(&spec, "1,2");
        let elems: Vec<TorusElement> = gamma_generators(&spec, &v)
            .unwrap()
            .into_iter()
            .map(|g| g.element)
            .collect();
        assert_eq!(elems.len(), 2);
        assert_eq!(gamma_structure(&elems).order, Some(BigInt::from(3)));
    }
}
