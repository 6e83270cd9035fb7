//! Fano polytopes: exact facet enumeration, smooth Fano validation, a
//! unimodular normal form, and the standard constructors.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{bareiss_determinant, IntMatrix, LatticeVector};

/// A lattice polytope given by its vertex list.
///
/// Construction only checks shapes; [`validate_smooth_fano`] decides whether
/// the vertex set really is a smooth Fano polytope. Vertex indices follow
/// input order everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoPolytope {
    name: String,
    dim: usize,
    vertices: Vec<LatticeVector>,
}

impl FanoPolytope {
    pub fn new(name: impl Into<String>, dim: usize, vertices: Vec<LatticeVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ShapeMismatch(
                "polytope dimension must be positive".into(),
            ));
        }
        if let Some(v) = vertices.iter().find(|v| v.rank() != dim) {
            return Err(Error::ShapeMismatch(format!(
                "vertex {v} in a polytope of dimension {dim}"
            )));
        }
        Ok(Self {
            name: name.into(),
            dim,
            vertices,
        })
    }

    /// Convenience constructor from small integer rows.
    pub fn from_rows(name: impl Into<String>, dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            name,
            dim,
            rows.iter().map(|r| LatticeVector::from_i64s(r)).collect(),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Image under the linear map `u` (applied to every vertex).
    pub fn transformed(&self, u: &IntMatrix) -> Result<Self> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| u.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.name.clone(), u.rows(), vertices)
    }

    /// Reorders vertices: the new vertex `i` is the old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            name: self.name.clone(),
            dim: self.dim,
            vertices: perm.iter().map(|&i| self.vertices[i].clone()).collect(),
        }
    }
}

impl fmt::Display for FanoPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {}):", self.name, self.dim)?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Vertices `e₁, …, eₙ, −(e₁+⋯+eₙ)`: the polytope of `ℙⁿ`.
pub fn simplex(n: usize) -> FanoPolytope {
    let mut vertices: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
    vertices.push(LatticeVector::new(vec![BigInt::from(-1); n]));
    FanoPolytope {
        name: format!("simplex:{n}"),
        dim: n,
        vertices,
    }
}

/// The hexagon of the degree-6 del Pezzo surface, vertices in cyclic order.
pub fn hexagon() -> FanoPolytope {
    FanoPolytope::from_rows(
        "hexagon",
        2,
        &[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]],
    )
    .expect("static hexagon data")
}

/// Free sum `conv(P × {0} ∪ {0} × Q)`, the polytope of the product variety.
/// Vertices of `p` come first, then those of `q`.
pub fn free_sum(p: &FanoPolytope, q: &FanoPolytope) -> FanoPolytope {
    let zp = LatticeVector::zero(p.dim);
    let zq = LatticeVector::zero(q.dim);
    let vertices = p
        .vertices
        .iter()
        .map(|v| v.concat(&zq))
        .chain(q.vertices.iter().map(|w| zp.concat(w)))
        .collect();
    FanoPolytope {
        name: format!("{}*{}", p.name, q.name),
        dim: p.dim + q.dim,
        vertices,
    }
}

/// A supporting hyperplane `⟨normal, x⟩ = offset` with every point on the
/// `≤` side, together with the points lying on it.
#[derive(Clone, Debug)]
pub(crate) struct HullFacet {
    pub vertices: Vec<usize>,
    pub offset: BigInt,
}

pub(crate) fn affine_rank(points: &[LatticeVector]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let diffs: Vec<LatticeVector> = points[1..].iter().map(|p| p - first).collect();
    if diffs.is_empty() {
        return 0;
    }
    IntMatrix::from_rows(&diffs).map_or(0, |m| m.rank())
}

/// Brute-force facet search: every `n`-subset spanning an affine hyperplane
/// with all points weakly on one side defines a facet. Assumes the points
/// are full-dimensional.
pub(crate) fn hull_facets(points: &[LatticeVector], n: usize) -> Vec<HullFacet> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for subset in (0..points.len()).combinations(n) {
        let base = &points[subset[0]];
        let diffs: Vec<Vec<BigInt>> = subset[1..]
            .iter()
            .map(|&i| (&points[i] - base).into_coords())
            .collect();
        let normal: Vec<BigInt> = (0..n)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = diffs
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let d = bareiss_determinant(minor);
                if j % 2 == 1 {
                    -d
                } else {
                    d
                }
            })
            .collect();
        let mut normal = LatticeVector::new(normal);
        if normal.is_zero() {
            continue;
        }
        normal = normal.primitive_part();
        let mut offset = normal.dot(base);
        let slack: Vec<BigInt> = points.iter().map(|p| normal.dot(p) - &offset).collect();
        let above = slack.iter().any(Signed::is_positive);
        let below = slack.iter().any(Signed::is_negative);
        if above && below {
            continue;
        }
        if above {
            offset = -offset;
        }
        let on: Vec<usize> = (0..points.len()).filter(|&i| slack[i].is_zero()).collect();
        if seen.insert(on.clone()) {
            out.push(HullFacet {
                vertices: on,
                offset,
            });
        }
    }
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

/// Maximal faces of a simplicial polytope, as vertex-index sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceLattice {
    dim: usize,
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
}

impl FaceLattice {
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// A set is a face iff it lies in some facet.
    pub fn is_face(&self, set: &[usize]) -> Result<bool> {
        if let Some(&index) = set.iter().find(|&&i| i >= self.vertex_count) {
            return Err(Error::BadIndex {
                index,
                len: self.vertex_count,
            });
        }
        Ok(self
            .facets
            .iter()
            .any(|f| set.iter().all(|i| f.binary_search(i).is_ok())))
    }

    /// Every face (every subset of every facet), sorted, including `∅`.
    pub fn all_faces(&self) -> Vec<Vec<usize>> {
        let mut faces = BTreeSet::new();
        for f in &self.facets {
            for k in 0..=f.len() {
                for s in f.iter().copied().combinations(k) {
                    faces.insert(s);
                }
            }
        }
        faces.into_iter().collect()
    }
}

/// Exact facets of `p`, sorted lexicographically by index set.
pub fn facets(p: &FanoPolytope) -> Result<FaceLattice> {
    let n = p.dim;
    if p.vertices.len() < n + 1 || affine_rank(&p.vertices) < n {
        return Err(Error::NotFanoShape("not full-dimensional".into()));
    }
    let hull = hull_facets(&p.vertices, n);
    if hull.iter().any(|f| !f.offset.is_positive()) {
        return Err(Error::NotFanoShape(
            "origin is not an interior point".into(),
        ));
    }
    if let Some(f) = hull.iter().find(|f| f.vertices.len() != n) {
        return Err(Error::NotFanoShape(format!(
            "facet {:?} is not a simplex",
            f.vertices
        )));
    }
    Ok(FaceLattice {
        dim: n,
        vertex_count: p.vertices.len(),
        facets: hull.into_iter().map(|f| f.vertices).collect(),
    })
}

pub fn is_face(p: &FanoPolytope, set: &[usize]) -> Result<bool> {
    if let Some(&index) = set.iter().find(|&&i| i >= p.vertex_count()) {
        return Err(Error::BadIndex {
            index,
            len: p.vertex_count(),
        });
    }
    facets(p)?.is_face(set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    PrimitiveVertices,
    DistinctVertices,
    FullDimensional,
    OriginInterior,
    AllPointsAreVertices,
    Simplicial,
    UnimodularFacets,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Not evaluated because a prerequisite failed.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ValidationFailure {
    NonPrimitiveVertex {
        index: usize,
    },
    DuplicateVertex {
        first: usize,
        second: usize,
    },
    NotFullDimensional,
    OriginNotInterior,
    NotAVertex {
        index: usize,
    },
    NonSimplicialFacet {
        vertices: Vec<usize>,
    },
    NonUnimodularFacet {
        vertices: Vec<usize>,
        determinant: String,
    },
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonPrimitiveVertex { index } => write!(f, "vertex {index} is not primitive"),
            Self::DuplicateVertex { first, second } => {
                write!(f, "vertices {first} and {second} coincide")
            }
            Self::NotFullDimensional => write!(f, "not full-dimensional"),
            Self::OriginNotInterior => write!(f, "origin is not an interior point"),
            Self::NotAVertex { index } => write!(f, "point {index} is not a vertex"),
            Self::NonSimplicialFacet { vertices } => {
                write!(f, "facet {vertices:?} is not a simplex")
            }
            Self::NonUnimodularFacet {
                vertices,
                determinant,
            } => write!(f, "facet {vertices:?} has determinant {determinant}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub conditions: Vec<(Condition, Status)>,
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.conditions.iter().all(|&(_, s)| s == Status::Pass)
    }

    pub fn status(&self, c: Condition) -> Status {
        self.conditions
            .iter()
            .find(|(k, _)| *k == c)
            .map_or(Status::Skipped, |&(_, s)| s)
    }

    pub fn summary(&self) -> String {
        if self.failures.is_empty() {
            return "ok".into();
        }
        self.failures.iter().map(ToString::to_string).join("; ")
    }
}

/// Checks every smooth Fano condition and reports all failures.
///
/// Order: vertex primitivity and distinctness, full dimension, hull shape
/// (origin interior, every point a vertex, simplicial facets), then facet
/// unimodularity. A unimodular facet lies on a hyperplane at lattice
/// distance one from the origin, so passing all checks certifies that the
/// origin is the only interior lattice point.
pub fn validate_smooth_fano(p: &FanoPolytope) -> ValidationReport {
    let n = p.dim;
    let verts = &p.vertices;
    let mut conditions = Vec::new();
    let mut failures = Vec::new();
    let mut mark =
        |c: Condition, ok: bool| conditions.push((c, if ok { Status::Pass } else { Status::Fail }));

    let non_primitive: Vec<usize> = (0..verts.len())
        .filter(|&i| !verts[i].content().is_one())
        .collect();
    mark(Condition::PrimitiveVertices, non_primitive.is_empty());
    failures.extend(
        non_primitive
            .into_iter()
            .map(|index| ValidationFailure::NonPrimitiveVertex { index }),
    );

    let duplicates: Vec<(usize, usize)> = (0..verts.len())
        .tuple_combinations()
        .filter(|&(a, b)| verts[a] == verts[b])
        .collect();
    mark(Condition::DistinctVertices, duplicates.is_empty());
    let distinct = duplicates.is_empty();
    failures.extend(
        duplicates
            .into_iter()
            .map(|(first, second)| ValidationFailure::DuplicateVertex { first, second }),
    );

    let full = verts.len() > n && affine_rank(verts) == n;
    mark(Condition::FullDimensional, full);
    if !full {
        failures.push(ValidationFailure::NotFullDimensional);
    }

    let hull_stage = [
        Condition::OriginInterior,
        Condition::AllPointsAreVertices,
        Condition::Simplicial,
        Condition::UnimodularFacets,
    ];
    if !(full && distinct) {
        conditions.extend(hull_stage.iter().map(|&c| (c, Status::Skipped)));
        return ValidationReport {
            conditions,
            failures,
        };
    }

    let hull = hull_facets(verts, n);
    let interior = hull.iter().all(|f| f.offset.is_positive());
    conditions.push((Condition::OriginInterior, pass(interior)));
    if !interior {
        failures.push(ValidationFailure::OriginNotInterior);
    }

    let covered: BTreeSet<usize> = hull
        .iter()
        .flat_map(|f| f.vertices.iter().copied())
        .collect();
    let loose: Vec<usize> = (0..verts.len()).filter(|i| !covered.contains(i)).collect();
    conditions.push((Condition::AllPointsAreVertices, pass(loose.is_empty())));
    failures.extend(
        loose
            .into_iter()
            .map(|index| ValidationFailure::NotAVertex { index }),
    );

    let fat: Vec<&HullFacet> = hull.iter().filter(|f| f.vertices.len() != n).collect();
    conditions.push((Condition::Simplicial, pass(fat.is_empty())));
    failures.extend(fat.iter().map(|f| ValidationFailure::NonSimplicialFacet {
        vertices: f.vertices.clone(),
    }));

    let mut unimodular = true;
    for f in hull.iter().filter(|f| f.vertices.len() == n) {
        let rows: Vec<LatticeVector> = f.vertices.iter().map(|&i| verts[i].clone()).collect();
        let det = IntMatrix::from_rows(&rows)
            .and_then(|m| m.determinant())
            .unwrap_or_else(|_| BigInt::zero());
        if !det.abs().is_one() {
            unimodular = false;
            failures.push(ValidationFailure::NonUnimodularFacet {
                vertices: f.vertices.clone(),
                determinant: det.to_string(),
            });
        }
    }
    conditions.push((Condition::UnimodularFacets, pass(unimodular)));

    ValidationReport {
        conditions,
        failures,
    }
}

fn pass(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Canonical representative of a smooth Fano polytope up to lattice
/// automorphisms and vertex relabelling.
///
/// For every facet the vertices are written in the basis given by that
/// facet (the facet becomes the identity block, which is the Hermite form
/// of the vertex matrix with the facet first); rows are then permuted and
/// columns sorted, and the least matrix in row-major order wins.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm(IntMatrix);

impl NormalForm {
    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn vertex_count(&self) -> usize {
        self.0.cols()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn normal_form(p: &FanoPolytope) -> Result<NormalForm> {
    let lattice = facets(p)?;
    let n = p.dim;
    let m = p.vertex_count();
    let mut best: Option<Vec<Vec<BigInt>>> = None;
    for facet in lattice.facets() {
        let cols: Vec<LatticeVector> = facet.iter().map(|&i| p.vertices[i].clone()).collect();
        let basis = IntMatrix::from_columns(n, &cols)?;
        let inv = basis
            .inverse_unimodular()
            .ok_or_else(|| Error::InvalidPolytope {
                name: p.name.clone(),
                failures: format!("facet {facet:?} is not unimodular"),
            })?;
        let coords: Vec<LatticeVector> = p
            .vertices
            .iter()
            .map(|v| inv.apply(v))
            .collect::<Result<_>>()?;
        let rows: Vec<Vec<BigInt>> = (0..n)
            .map(|i| coords.iter().map(|c| c.coords()[i].clone()).collect())
            .collect();
        let mut search = RowSearch::new(rows, m);
        search.run(&mut best);
    }
    let best = best.expect("a valid polytope has at least one facet");
    let entries = best.into_iter().flatten().collect();
    Ok(NormalForm(IntMatrix::new(n, m, entries)?))
}

/// Branch and bound over row orders of one facet's coordinate matrix.
///
/// Sorting columns makes the first `k` rows of the result depend only on
/// the first `k` chosen rows, so prefixes that already exceed the best
/// known matrix are cut. Rows that can be swapped without changing the
/// column multiset are interchangeable; only one of each class is tried at
/// every node.
struct RowSearch {
    rows: Vec<Vec<BigInt>>,
    cols: usize,
    class: Vec<usize>,
}

impl RowSearch {
    fn new(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let n = rows.len();
        let sorted_cols = |order: &[usize]| -> Vec<Vec<BigInt>> {
            let mut c: Vec<Vec<BigInt>> = (0..cols)
                .map(|j| order.iter().map(|&i| rows[i][j].clone()).collect())
                .collect();
            c.sort();
            c
        };
        let identity: Vec<usize> = (0..n).collect();
        let reference = sorted_cols(&identity);
        let mut class: Vec<usize> = (0..n).collect();
        for i in 0..n {
            if class[i] != i {
                continue;
            }
            #[allow(clippy::needless_range_loop)]
            for j in i + 1..n {
                if class[j] != j {
                    continue;
                }
                let mut order = identity.clone();
                order.swap(i, j);
                if sorted_cols(&order) == reference {
                    class[j] = i;
                }
            }
        }
        Self { rows, cols, class }
    }

    fn prefix(&self, order: &[usize]) -> Vec<Vec<BigInt>> {
        let mut columns: Vec<Vec<&BigInt>> = (0..self.cols)
            .map(|j| order.iter().map(|&i| &self.rows[i][j]).collect())
            .collect();
        columns.sort();
        (0..order.len())
            .map(|k| columns.iter().map(|c| c[k].clone()).collect())
            .collect()
    }

    fn run(&mut self, best: &mut Option<Vec<Vec<BigInt>>>) {
        let mut order = Vec::with_capacity(self.rows.len());
        self.descend(&mut order, best);
    }

    fn descend(&self, order: &mut Vec<usize>, best: &mut Option<Vec<Vec<BigInt>>>) {
        let n = self.rows.len();
        if order.len() == n {
            let full = self.prefix(order);
            if best.as_ref().is_none_or(|b| full < *b) {
                *best = Some(full);
            }
            return;
        }
        let mut tried_classes = Vec::new();
        for r in 0..n {
            if order.contains(&r) || tried_classes.contains(&self.class[r]) {
                continue;
            }
            tried_classes.push(self.class[r]);
            order.push(r);
            let prefix = self.prefix(order);
            let keep = match best {
                None => true,
                Some(b) => prefix.as_slice() <= &b[..order.len()],
            };
            if keep {
                self.descend(order, best);
            }
            order.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(v: &[&[usize]]) -> Vec<Vec<usize>> {
        v.iter().map(|s| s.to_vec()).collect()
    }

    #[test]
    fn simplex_triangle_facets() {
        let f = facets(&simplex(2)).unwrap();
        assert_eq!(f.facets(), sets(&[&[0, 1], &[0, 2], &[1, 2]]));
    }

    #[test]
    fn hexagon_edges_are_consecutive_pairs() {
        let f = facets(&hexagon()).unwrap();
        assert_eq!(
            f.facets(),
            sets(&[&[0, 1], &[0, 5], &[1, 2], &[2, 3], &[3, 4], &[4, 5]])
        );
    }

    #[test]
    fn square_has_four_facets() {
        let sq = free_sum(&simplex(1), &simplex(1));
        assert_eq!(facets(&sq).unwrap().facets().len(), 4);
        assert!(validate_smooth_fano(&sq).is_valid());
    }

    #[test]
    fn facets_reject_bad_shapes() {
        let flat = FanoPolytope::from_rows("flat", 2, &[&[1, 0], &[-1, 0]]).unwrap();
        assert!(matches!(facets(&flat), Err(Error::NotFanoShape(_))));
        let off = FanoPolytope::from_rows("off", 2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert!(matches!(facets(&off), Err(Error::NotFanoShape(_))));
        let boundary = FanoPolytope::from_rows("b", 2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert!(matches!(facets(&boundary), Err(Error::NotFanoShape(_))));
    }

    #[test]
    fn hexagon_validates() {
        let r = validate_smooth_fano(&hexagon());
        assert!(r.is_valid(), "{r:?}");
        assert!(r.failures.is_empty());
    }

    #[test]
    fn weighted_triangle_has_non_unimodular_edge() {
        let p = FanoPolytope::from_rows("w", 2, &[&[1, 0], &[0, 1], &[-1, -2]]).unwrap();
        let r = validate_smooth_fano(&p);
        assert!(!r.is_valid());
        assert_eq!(r.status(Condition::UnimodularFacets), Status::Fail);
        assert_eq!(
            r.failures,
            vec![ValidationFailure::NonUnimodularFacet {
                vertices: vec![0, 2],
                determinant: "-2".into()
            }]
        );
    }

    #[test]
    fn non_primitive_vertex_reported() {
        let p = FanoPolytope::from_rows("np", 2, &[&[2, 0], &[0, 1], &[-1, -1]]).unwrap();
        let r = validate_smooth_fano(&p);
        assert_eq!(r.status(Condition::PrimitiveVertices), Status::Fail);
        assert!(r
            .failures
            .contains(&ValidationFailure::NonPrimitiveVertex { index: 0 }));
        assert!(!r.is_valid());
    }

    #[test]
    fn validation_reports_everything() {
        // interior point, non-simplicial edge, non-primitive vertex
        let p = FanoPolytope::from_rows(
            "mess",
            2,
            &[&[2, 2], &[1, 0], &[0, 1], &[-1, -1], &[0, 0], &[-1, 1]],
        )
        .unwrap();
        let r = validate_smooth_fano(&p);
        assert_eq!(r.status(Condition::PrimitiveVertices), Status::Fail);
        assert_eq!(r.status(Condition::AllPointsAreVertices), Status::Fail);
        assert!(r.failures.len() >= 3, "{:?}", r.failures);
    }

    #[test]
    fn duplicate_vertices_skip_hull() {
        let p = FanoPolytope::from_rows("d", 1, &[&[1], &[1], &[-1]]).unwrap();
        let r = validate_smooth_fano(&p);
        assert_eq!(r.status(Condition::DistinctVertices), Status::Fail);
        assert_eq!(r.status(Condition::Simplicial), Status::Skipped);
    }

    #[test]
    fn face_queries() {
        let h = hexagon();
        assert!(is_face(&h, &[0, 1]).unwrap());
        assert!(!is_face(&h, &[0, 2]).unwrap());
        assert!(is_face(&h, &[]).unwrap());
        assert!(matches!(is_face(&h, &[6]), Err(Error::BadIndex { .. })));
        assert_eq!(facets(&h).unwrap().all_faces().len(), 1 + 6 + 6);
    }

    #[test]
    fn constructors() {
        assert_eq!(
            simplex(1).vertices(),
            &[
                LatticeVector::from_i64s(&[1]),
                LatticeVector::from_i64s(&[-1])
            ]
        );
        let sharp = free_sum(&simplex(2), &hexagon());
        assert_eq!((sharp.dim(), sharp.vertex_count()), (4, 9));
        assert!(validate_smooth_fano(&sharp).is_valid());
        for n in 1..=10 {
            assert!(validate_smooth_fano(&simplex(n)).is_valid(), "simplex({n})");
        }
    }

    #[test]
    fn free_sum_facet_count_multiplies() {
        let (p, q) = (hexagon(), simplex(2));
        let s = free_sum(&p, &q);
        assert_eq!(
            facets(&s).unwrap().facets().len(),
            facets(&p).unwrap().facets().len() * facets(&q).unwrap().facets().len()
        );
    }

    #[test]
    fn normal_form_examples() {
        let a = simplex(2);
        let b = FanoPolytope::from_rows("perm", 2, &[&[0, 1], &[1, 0], &[-1, -1]]).unwrap();
        assert_eq!(normal_form(&a).unwrap(), normal_form(&b).unwrap());
        let sq = free_sum(&simplex(1), &simplex(1));
        assert_ne!(normal_form(&a).unwrap(), normal_form(&sq).unwrap());
        let u = IntMatrix::from_i64s(2, 2, &[2, 1, 1, 1]).unwrap();
        let h = hexagon();
        assert_eq!(
            normal_form(&h).unwrap(),
            normal_form(&h.transformed(&u).unwrap().permuted(&[3, 1, 4, 0, 5, 2])).unwrap()
        );
    }

    #[test]
    fn normal_form_separates_inequivalent_pentagon_shapes() {
        // P² blown up in one point versus ℙ¹×ℙ¹: both have four vertices
        let f1 =
            FanoPolytope::from_rows("F1", 2, &[&[1, 0], &[0, 1], &[-1, -1], &[0, -1]]).unwrap();
        let sq = free_sum(&simplex(1), &simplex(1));
        assert!(validate_smooth_fano(&f1).is_valid());
        assert_ne!(normal_form(&f1).unwrap(), normal_form(&sq).unwrap());
    }
}
