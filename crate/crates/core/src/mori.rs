//! Toric Mori theory on a complete smooth fan: primitive collections and
//! relations, curve classes in `N₁ = ker F`, minimal components, and the
//! cone conditions attached to extremal relations.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::{from_mask, to_mask, Fan, RaySet};
use crate::lattice::LatticeVector;

/// A minimal non-face: the rays do not span a cone, every proper subset
/// does. Indices are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PrimitiveCollection(Vec<usize>);

impl PrimitiveCollection {
    /// Checks both defining clauses against `fan`.
    pub fn new(fan: &Fan, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        let mask = fan.mask_of(&indices)?;
        if !is_minimal_non_face(fan, mask) {
            return Err(Error::InternalInconsistency(format!(
                "{indices:?} is not a primitive collection"
            )));
        }
        Ok(Self(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn mask(&self) -> RaySet {
        to_mask(&self.0)
    }
}

fn is_minimal_non_face(fan: &Fan, mask: RaySet) -> bool {
    mask.count_ones() >= 2
        && !fan.is_cone_mask(mask)
        && from_mask(mask)
            .into_iter()
            .all(|i| fan.is_cone_mask(mask & !(1 << i)))
}

/// `Σ_{i∈collection} vᵢ = Σ aⱼ·yⱼ` with `{yⱼ}` the minimal cone containing
/// the left-hand sum and every `aⱼ > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveRelation {
    pub collection: PrimitiveCollection,
    pub rhs: Vec<(usize, BigInt)>,
    /// Anticanonical degree `|collection| − Σ aⱼ`.
    pub degree: i64,
}

impl PrimitiveRelation {
    pub fn is_zero_sum(&self) -> bool {
        self.rhs.is_empty()
    }

    pub fn rhs_indices(&self) -> Vec<usize> {
        self.rhs.iter().map(|(i, _)| *i).collect()
    }
}

/// A minimal component: a zero-sum primitive collection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MinimalComponent {
    pub collection: PrimitiveCollection,
    pub degree: usize,
    pub codegree: usize,
}

/// An element of `N₁`: integer coefficients on the ray generators whose
/// weighted sum vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveClass(Vec<BigInt>);

impl CurveClass {
    pub fn new(fan: &Fan, coefficients: Vec<BigInt>) -> Result<Self> {
        if coefficients.len() != fan.ray_count() {
            return Err(Error::NotACurveClass);
        }
        let mut sum = LatticeVector::zero(fan.dim());
        for (c, g) in coefficients.iter().zip(fan.generators()) {
            if !c.is_zero() {
                sum = &sum + &g.scaled(c);
            }
        }
        if !sum.is_zero() {
            return Err(Error::NotACurveClass);
        }
        Ok(Self(coefficients))
    }

    pub fn from_i64s(fan: &Fan, coefficients: &[i64]) -> Result<Self> {
        Self::new(fan, coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    /// Intersection with `−K`: the sum of all coefficients.
    pub fn anticanonical_degree(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn negative_support(&self) -> Vec<usize> {
        (0..self.0.len())
            .filter(|&i| self.0[i].is_negative())
            .collect()
    }
}

/// All primitive collections, ordered by size and then lexicographically.
///
/// Level-wise search: a set of size `k+1` is examined only when every
/// `k`-subset is a cone; it is then either a cone (kept for the next level)
/// or a primitive collection. Sizes run from 2 to `n+1`.
pub fn primitive_collections(fan: &Fan) -> Vec<PrimitiveCollection> {
    let n = fan.dim();
    let m = fan.ray_count();
    let mut level: Vec<RaySet> = (0..m)
        .map(|i| 1 << i)
        .filter(|&s| fan.is_cone_mask(s))
        .collect();
    let mut out = Vec::new();
    for _size in 2..=n + 1 {
        let current: HashSet<RaySet> = level.iter().copied().collect();
        let mut next = Vec::new();
        for &face in &level {
            let top = 63 - face.leading_zeros() as usize;
            for j in top + 1..m {
                let cand = face | (1 << j);
                let closed = from_mask(cand)
                    .into_iter()
                    .all(|i| i == j || current.contains(&(cand & !(1 << i))));
                if !closed {
                    continue;
                }
                if fan.is_cone_mask(cand) {
                    next.push(cand);
                } else {
                    out.push(PrimitiveCollection(from_mask(cand)));
                }
            }
        }
        next.sort_unstable();
        level = next;
        if level.is_empty() {
            break;
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
    out
}

pub fn primitive_relation(fan: &Fan, pc: &PrimitiveCollection) -> Result<PrimitiveRelation> {
    let sum = LatticeVector::sum(
        fan.dim(),
        pc.indices().iter().map(|&i| &fan.generators()[i]),
    );
    let loc = fan.minimal_cone_containing(&sum)?;
    let coeffs = loc.integer_coefficients().ok_or_else(|| {
        Error::InternalInconsistency(format!(
            "primitive relation of {:?} has fractional coefficients",
            pc.indices()
        ))
    })?;
    if coeffs.iter().any(|c| !c.is_positive()) {
        return Err(Error::InternalInconsistency(
            "non-positive coefficient in minimal cone".into(),
        ));
    }
    let total: BigInt = coeffs.iter().sum();
    let degree = (BigInt::from(pc.len()) - total)
        .to_i64()
        .ok_or_else(|| Error::InternalInconsistency("degree out of range".into()))?;
    if loc.support.iter().any(|i| pc.indices().contains(i)) {
        return Err(Error::InternalInconsistency(format!(
            "relation of {:?} has overlapping sides",
            pc.indices()
        )));
    }
    Ok(PrimitiveRelation {
        collection: pc.clone(),
        rhs: loc.support.into_iter().zip(coeffs).collect(),
        degree,
    })
}

pub fn primitive_relations(fan: &Fan) -> Result<Vec<PrimitiveRelation>> {
    primitive_collections(fan)
        .iter()
        .map(|pc| primitive_relation(fan, pc))
        .collect()
}

/// Minimal components from already computed relations.
pub fn minimal_components_of(dim: usize, relations: &[PrimitiveRelation]) -> Vec<MinimalComponent> {
    let mut out: Vec<MinimalComponent> = relations
        .iter()
        .filter(|r| r.is_zero_sum())
        .map(|r| MinimalComponent {
            collection: r.collection.clone(),
            degree: r.collection.len(),
            codegree: dim + 1 - r.collection.len(),
        })
        .collect();
    out.sort_by(|a, b| a.collection.indices().cmp(b.collection.indices()));
    out
}

/// Zero-sum primitive collections, with degree `k` and codegree `n+1−k`.
pub fn minimal_components(fan: &Fan) -> Result<Vec<MinimalComponent>> {
    Ok(minimal_components_of(fan.dim(), &primitive_relations(fan)?))
}

/// `+1` on the collection, `−aⱼ` on the right-hand side.
pub fn curve_class_of(fan: &Fan, rel: &PrimitiveRelation) -> Result<CurveClass> {
    let mut coeffs = vec![BigInt::zero(); fan.ray_count()];
    for &i in rel.collection.indices() {
        coeffs[i] += 1;
    }
    for (j, a) in &rel.rhs {
        coeffs[*j] -= a;
    }
    CurveClass::new(fan, coeffs)
}

pub fn anticanonical_degree(c: &CurveClass) -> BigInt {
    c.anticanonical_degree()
}

/// A relation is effective when the generators carrying negative
/// coefficients span a cone.
pub fn is_effective_relation(fan: &Fan, c: &CurveClass) -> Result<bool> {
    if c.coefficients().len() != fan.ray_count() {
        return Err(Error::NotACurveClass);
    }
    fan.is_cone(&c.negative_support())
}

/// Degree-one primitive relations on a Fano fan are extremal. Only this
/// sufficient condition is certified.
pub fn is_extremal_degree_one(rel: &PrimitiveRelation) -> bool {
    rel.degree == 1
}

/// A cone predicted by the extremal-ray structure theorem that is missing
/// from the fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReidViolation {
    pub dropped: usize,
    pub extension: Vec<usize>,
    pub missing_cone: Vec<usize>,
}

/// For every extension `Z` of the right-hand cone (disjoint from both
/// sides, `rhs ∪ Z` a cone) and every left-hand vertex `vᵢ`, checks that
/// `(collection ∖ vᵢ) ∪ rhs ∪ Z` is a cone. Returns every failure.
pub fn verify_reid_cones(fan: &Fan, rel: &PrimitiveRelation) -> Result<Vec<ReidViolation>> {
    if !is_extremal_degree_one(rel) {
        return Err(Error::NotCertifiedExtremal(rel.degree));
    }
    let lhs = rel.collection.mask();
    let rhs = to_mask(&rel.rhs_indices());
    let mut extensions: BTreeSet<RaySet> = BTreeSet::new();
    for &cone in fan.max_cone_masks() {
        if cone & rhs != rhs {
            continue;
        }
        let free = cone & !rhs & !lhs;
        let mut sub = free;
        loop {
            extensions.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    let mut violations = Vec::new();
    for &z in &extensions {
        for i in rel.collection.indices() {
            let target = (lhs & !(1 << i)) | rhs | z;
            if !fan.is_cone_mask(target) {
                violations.push(ReidViolation {
                    dropped: *i,
                    extension: from_mask(z),
                    missing_cone: from_mask(target),
                });
            }
        }
    }
    Ok(violations)
}

/// Number of primitive collections of the form `cone ∪ {w}`.
pub fn count_pc_extensions(fan: &Fan, cone: &[usize]) -> Result<usize> {
    let mask = fan.mask_of(cone)?;
    if !fan.is_cone_mask(mask) {
        return Err(Error::NotACone(cone.to_vec()));
    }
    Ok(count_extensions_among(&primitive_collections(fan), cone))
}

/// As [`count_pc_extensions`], over a precomputed collection list.
pub fn count_extensions_among(collections: &[PrimitiveCollection], cone: &[usize]) -> usize {
    let mask = to_mask(cone);
    collections
        .iter()
        .filter(|pc| pc.len() == cone.len() + 1 && pc.mask() & mask == mask)
        .count()
}

/// `|G(Σ)| − n`.
pub fn picard_rank(fan: &Fan) -> usize {
    fan.ray_count() - fan.dim()
}

/// A zero-sum collection of a star quotient lifted back to the fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientLift {
    pub center: Vec<usize>,
    /// Quotient ray indices of the zero-sum collection.
    pub quotient_collection: Vec<usize>,
    /// Chosen original generators, one per quotient ray.
    pub lifted: Vec<usize>,
    /// `center ∪ lifted` minus the last lift; verified to be a cone.
    pub cone_with_center: Vec<usize>,
}

/// For each zero-sum collection `ȳ₁,…,ȳ_{t+1}` of the star quotient by
/// `sigma`, lifts the rays, checks that the lifted sum lies in
/// `span(sigma)` and that `sigma` together with any `t` of the lifts spans
/// a cone. A failed check is reported as [`Error::LiftFailure`].
pub fn lift_quotient_components(fan: &Fan, sigma: &[usize]) -> Result<Vec<QuotientLift>> {
    let q = fan.star_quotient(sigma)?;
    let center_mask = to_mask(&q.center);
    let mut out = Vec::new();
    for comp in minimal_components(&q.fan)? {
        let rays = comp.collection.indices().to_vec();
        let lifted: Vec<usize> = rays.iter().map(|&r| q.lift(r)).collect();
        let failure = || Error::LiftFailure {
            center: q.center.clone(),
            collection: rays.clone(),
        };
        let sum = LatticeVector::sum(fan.dim(), lifted.iter().map(|&i| &fan.generators()[i]));
        if !q.projection.apply(&sum)?.is_zero() {
            return Err(failure());
        }
        let lifted_mask = to_mask(&lifted);
        if lifted_mask & center_mask != 0 || lifted_mask.count_ones() as usize != lifted.len() {
            return Err(failure());
        }
        for &y in &lifted {
            if !fan.is_cone_mask(center_mask | (lifted_mask & !(1 << y))) {
                return Err(failure());
            }
        }
        let last = *lifted.last().expect("collections have at least two rays");
        out.push(QuotientLift {
            center: q.center.clone(),
            quotient_collection: rays,
            lifted: lifted.clone(),
            cone_with_center: from_mask(center_mask | (lifted_mask & !(1 << last))),
        });
    }
    Ok(out)
}
