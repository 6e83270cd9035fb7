//! Complete smooth fans: the face fan of a smooth Fano polytope, exact
//! point location, and star quotients.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{quotient_projection, IntMatrix, LatticeVector, QuotientProjection};
use crate::polytope::{self, validate_smooth_fano, FanoPolytope};

/// Subsets of at most 64 rays, one bit per ray index.
pub(crate) type RaySet = u64;

pub(crate) fn to_mask(set: &[usize]) -> RaySet {
    set.iter().fold(0, |m, &i| m | (1 << i))
}

pub(crate) fn from_mask(mask: RaySet) -> Vec<usize> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

/// A complete simplicial fan whose maximal cones are unimodular.
#[derive(Clone, Debug)]
pub struct Fan {
    dim: usize,
    generators: Vec<LatticeVector>,
    max_cones: Vec<Vec<usize>>,
    masks: Vec<RaySet>,
    // inverse of the matrix whose columns are the cone's generators
    inverses: Vec<IntMatrix>,
}

impl PartialEq for Fan {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.generators == other.generators
            && self.max_cones == other.max_cones
    }
}

impl Eq for Fan {}

impl Fan {
    /// Builds a fan from ray generators and maximal cones, checking sizes and
    /// unimodularity. Completeness is not checked here; see
    /// [`Fan::ridge_defects`].
    pub fn new(
        dim: usize,
        generators: Vec<LatticeVector>,
        max_cones: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if generators.len() > 64 {
            return Err(Error::TooManyRays(generators.len()));
        }
        if let Some(g) = generators.iter().find(|g| g.rank() != dim) {
            return Err(Error::ShapeMismatch(format!("generator {g} in rank {dim}")));
        }
        let mut cones: Vec<Vec<usize>> = max_cones
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        cones.sort();
        cones.dedup();
        let mut masks = Vec::with_capacity(cones.len());
        let mut inverses = Vec::with_capacity(cones.len());
        for cone in &cones {
            if cone.len() != dim {
                return Err(Error::InvalidFan(format!(
                    "maximal cone {cone:?} has {} rays in dimension {dim}",
                    cone.len()
                )));
            }
            if let Some(&index) = cone.iter().find(|&&i| i >= generators.len()) {
                return Err(Error::BadIndex {
                    index,
                    len: generators.len(),
                });
            }
            let cols: Vec<LatticeVector> = cone.iter().map(|&i| generators[i].clone()).collect();
            let inv = IntMatrix::from_columns(dim, &cols)?
                .inverse_unimodular()
                .ok_or_else(|| Error::InvalidFan(format!("cone {cone:?} is not unimodular")))?;
            masks.push(to_mask(cone));
            inverses.push(inv);
        }
        Ok(Self {
            dim,
            generators,
            max_cones: cones,
            masks,
            inverses,
        })
    }

    /// The face fan of a validated smooth Fano polytope.
    pub fn from_polytope(p: &FanoPolytope) -> Result<Self> {
        let report = validate_smooth_fano(p);
        if !report.is_valid() {
            return Err(Error::InvalidPolytope {
                name: p.name().to_string(),
                failures: report.summary(),
            });
        }
        let lattice = polytope::facets(p)?;
        Self::new(p.dim(), p.vertices().to_vec(), lattice.facets().to_vec())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    #[inline]
    pub fn ray_count(&self) -> usize {
        self.generators.len()
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub(crate) fn mask_of(&self, set: &[usize]) -> Result<RaySet> {
        if let Some(&index) = set.iter().find(|&&i| i >= self.generators.len()) {
            return Err(Error::BadIndex {
                index,
                len: self.generators.len(),
            });
        }
        Ok(to_mask(set))
    }

    pub(crate) fn is_cone_mask(&self, mask: RaySet) -> bool {
        self.masks.iter().any(|&c| c & mask == mask)
    }

    pub(crate) fn max_cone_masks(&self) -> &[RaySet] {
        &self.masks
    }

    /// True iff the rays in `set` span a cone of the fan.
    pub fn is_cone(&self, set: &[usize]) -> Result<bool> {
        Ok(self.is_cone_mask(self.mask_of(set)?))
    }

    /// Locates `point` in the unique cone containing it in its relative
    /// interior.
    pub fn minimal_cone_containing(&self, point: &LatticeVector) -> Result<ConeLocation> {
        if point.rank() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "point {point} in a fan of rank {}",
                self.dim
            )));
        }
        if point.is_zero() {
            return Ok(ConeLocation {
                support: vec![],
                coefficients: vec![],
            });
        }
        for (cone, inv) in self.max_cones.iter().zip(&self.inverses) {
            let coeffs = inv.apply(point)?;
            if coeffs.coords().iter().any(Signed::is_negative) {
                continue;
            }
            let (support, coefficients) = cone
                .iter()
                .zip(coeffs.coords())
                .filter(|(_, c)| !c.is_zero())
                .map(|(&i, c)| (i, BigRational::from_integer(c.clone())))
                .unzip();
            return Ok(ConeLocation {
                support,
                coefficients,
            });
        }
        Err(Error::FanNotComplete(point.to_string()))
    }

    /// Every `(n−1)`-face of a complete simplicial fan lies in exactly two
    /// maximal cones. Returns the ridges violating that.
    pub fn ridge_defects(&self) -> Vec<(Vec<usize>, usize)> {
        let mut count: HashMap<RaySet, usize> = HashMap::new();
        for &m in &self.masks {
            for i in from_mask(m) {
                *count.entry(m & !(1 << i)).or_default() += 1;
            }
        }
        let mut bad: Vec<(Vec<usize>, usize)> = count
            .into_iter()
            .filter(|&(_, c)| c != 2)
            .map(|(r, c)| (from_mask(r), c))
            .collect();
        bad.sort();
        bad
    }

    /// Star quotient by the cone `sigma`: the fan living in `ℤⁿ / span(σ)`
    /// whose rays are the projected generators adjacent to `σ`.
    pub fn star_quotient(&self, sigma: &[usize]) -> Result<QuotientFan> {
        let smask = self.mask_of(sigma)?;
        if !self.is_cone_mask(smask) {
            return Err(Error::NotACone(sigma.to_vec()));
        }
        let center = from_mask(smask);
        let kernel: Vec<LatticeVector> =
            center.iter().map(|&i| self.generators[i].clone()).collect();
        let projection = quotient_projection(self.dim, &kernel)?;

        let star: Vec<RaySet> = self
            .masks
            .iter()
            .filter(|&&m| m & smask == smask)
            .map(|&m| m & !smask)
            .collect();
        let neighbors = from_mask(star.iter().fold(0, |a, &m| a | m));

        let mut rays: Vec<LatticeVector> = Vec::new();
        let mut preimages: Vec<Vec<usize>> = Vec::new();
        let mut ray_of: HashMap<usize, usize> = HashMap::new();
        for w in neighbors {
            let image = projection.apply(&self.generators[w])?.primitive_part();
            if image.is_zero() {
                return Err(Error::InternalInconsistency(format!(
                    "generator {w} projects to zero modulo cone {center:?}"
                )));
            }
            let slot = match rays.iter().position(|r| *r == image) {
                Some(k) => k,
                None => {
                    rays.push(image);
                    preimages.push(Vec::new());
                    rays.len() - 1
                }
            };
            preimages[slot].push(w);
            ray_of.insert(w, slot);
        }
        let cones: Vec<Vec<usize>> = star
            .iter()
            .map(|&m| {
                let set: BTreeSet<usize> = from_mask(m).iter().map(|w| ray_of[w]).collect();
                set.into_iter().collect()
            })
            .collect();
        let fan = Fan::new(projection.target_rank(), rays, cones)?;
        Ok(QuotientFan {
            fan,
            center,
            projection,
            preimages,
        })
    }
}

/// The minimal cone containing a point, with the point's (strictly
/// positive) coordinates in that cone's generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeLocation {
    pub support: Vec<usize>,
    pub coefficients: Vec<BigRational>,
}

impl ConeLocation {
    /// Recomputes `Σ cᵢ·gᵢ`; `None` if some coefficient is not integral.
    pub fn reconstruct(&self, fan: &Fan) -> Option<LatticeVector> {
        let mut acc = LatticeVector::zero(fan.dim());
        for (&i, c) in self.support.iter().zip(&self.coefficients) {
            if !c.is_integer() {
                return None;
            }
            acc = &acc + &fan.generators()[i].scaled(&c.to_integer());
        }
        Some(acc)
    }

    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coefficients
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// Star quotient of a fan by a cone together with the lift back to the
/// original generators.
#[derive(Clone, Debug)]
pub struct QuotientFan {
    pub fan: Fan,
    pub center: Vec<usize>,
    pub projection: QuotientProjection,
    /// Original generators projecting onto each quotient ray, ascending.
    pub preimages: Vec<Vec<usize>>,
}

impl QuotientFan {
    /// The lowest-index original generator over quotient ray `ray`.
    pub fn lift(&self, ray: usize) -> usize {
        self.preimages[ray][0]
    }
}

pub fn fan_from_polytope(p: &FanoPolytope) -> Result<Fan> {
    Fan::from_polytope(p)
}

pub fn minimal_cone_containing(fan: &Fan, point: &LatticeVector) -> Result<ConeLocation> {
    fan.minimal_cone_containing(point)
}

pub fn is_cone(fan: &Fan, set: &[usize]) -> Result<bool> {
    fan.is_cone(set)
}

pub fn star_quotient_fan(fan: &Fan, sigma: &[usize]) -> Result<QuotientFan> {
    fan.star_quotient(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{free_sum, hexagon, simplex};
    use num_traits::One;

    fn rational_is_one(c: &BigRational) -> bool {
        c.is_one()
    }

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(c)
    }

    #[test]
    fn cone_counts() {
        assert_eq!(
            Fan::from_polytope(&simplex(2)).unwrap().max_cones().len(),
            3
        );
        assert_eq!(Fan::from_polytope(&hexagon()).unwrap().max_cones().len(), 6);
        let p1_dp6 = free_sum(&simplex(1), &hexagon());
        assert_eq!(Fan::from_polytope(&p1_dp6).unwrap().max_cones().len(), 12);
    }

    #[test]
    fn invalid_polytope_has_no_fan() {
        let p = FanoPolytope::from_rows("w", 2, &[&[1, 0], &[0, 1], &[-1, -2]]).unwrap();
        assert!(matches!(
            Fan::from_polytope(&p),
            Err(Error::InvalidPolytope { .. })
        ));
    }

    #[test]
    fn point_location_in_hexagon() {
        let fan = Fan::from_polytope(&hexagon()).unwrap();
        let origin = fan.minimal_cone_containing(&v(&[0, 0])).unwrap();
        assert!(origin.support.is_empty());
        let loc = fan.minimal_cone_containing(&v(&[2, 1])).unwrap();
        assert_eq!(loc.support, vec![0, 1]);
        assert!(loc.coefficients.iter().all(rational_is_one));
        let ray = fan.minimal_cone_containing(&v(&[1, 1])).unwrap();
        assert_eq!(ray.support, vec![1]);
        assert!(rational_is_one(&ray.coefficients[0]));
        assert!(fan.minimal_cone_containing(&v(&[1])).is_err());
    }

    #[test]
    fn incomplete_fan_is_detected() {
        let fan = Fan::new(2, vec![v(&[1, 0]), v(&[0, 1])], vec![vec![0, 1]]).unwrap();
        assert!(matches!(
            fan.minimal_cone_containing(&v(&[-1, 0])),
            Err(Error::FanNotComplete(_))
        ));
        assert!(!fan.ridge_defects().is_empty());
    }

    #[test]
    fn cone_membership() {
        let fan = Fan::from_polytope(&hexagon()).unwrap();
        assert!(fan.is_cone(&[0, 1]).unwrap());
        assert!(!fan.is_cone(&[0, 3]).unwrap());
        assert!(fan.is_cone(&[]).unwrap());
        assert!(matches!(fan.is_cone(&[9]), Err(Error::BadIndex { .. })));
    }

    #[test]
    fn quotient_of_p2_x_p1_by_p1_ray() {
        let fan = Fan::from_polytope(&free_sum(&simplex(2), &simplex(1))).unwrap();
        // vertex 3 is e₃
        let q = fan.star_quotient(&[3]).unwrap();
        assert_eq!(q.fan.dim(), 2);
        assert_eq!(q.fan.ray_count(), 3);
        assert_eq!(q.fan.max_cones().len(), 3);
        assert_eq!(q.fan.generators()[2], v(&[-1, -1]));
        assert!(q.fan.ridge_defects().is_empty());
    }

    #[test]
    fn quotient_of_hexagon_by_ray() {
        let fan = Fan::from_polytope(&hexagon()).unwrap();
        let q = fan.star_quotient(&[0]).unwrap();
        assert_eq!(q.fan.dim(), 1);
        let mut rays: Vec<LatticeVector> = q.fan.generators().to_vec();
        rays.sort();
        assert_eq!(rays, vec![v(&[-1]), v(&[1])]);
        assert_eq!(q.preimages, vec![vec![1], vec![5]]);
    }

    #[test]
    fn quotient_by_empty_cone_is_identity() {
        let fan = Fan::from_polytope(&hexagon()).unwrap();
        let q = fan.star_quotient(&[]).unwrap();
        assert_eq!(q.fan, fan);
        assert_eq!(q.preimages, (0..6).map(|i| vec![i]).collect::<Vec<_>>());
    }

    #[test]
    fn quotient_by_maximal_cone_is_a_point() {
        let fan = Fan::from_polytope(&hexagon()).unwrap();
        let q = fan.star_quotient(&[0, 1]).unwrap();
        assert_eq!(q.fan.dim(), 0);
        assert_eq!(q.fan.ray_count(), 0);
        assert_eq!(q.fan.max_cones(), &[Vec::<usize>::new()]);
    }

    #[test]
    fn quotient_requires_cone() {
        let fan = Fan::from_polytope(&hexagon()).unwrap();
        assert!(matches!(
            fan.star_quotient(&[0, 3]),
            Err(Error::NotACone(_))
        ));
    }
}
