//! Independent reference implementations used as oracles by the
//! integration and acceptance tests. None of them call into the code they
//! check beyond reading polytope and fan data.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use fano_toric::{Fan, FanoPolytope, IntMatrix, LatticeVector};

/// Solves `a · x = b` over ℚ by Gauss-Jordan elimination; `None` if `a`
/// is singular.
pub fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
        }
    }
    Some(b)
}

fn q(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Facets of a simplicial polytope with the origin inside: the `n`-subsets
/// whose vertices are linearly independent and whose unique functional
/// `u` with `u·vᵢ = 1` on the subset is at most 1 on every vertex.
pub fn oracle_facets(p: &FanoPolytope) -> BTreeSet<Vec<usize>> {
    let n = p.dim();
    let vs = p.vertices();
    let mut out = BTreeSet::new();
    for subset in (0..vs.len()).combinations(n) {
        let a = subset
            .iter()
            .map(|&i| vs[i].coords().iter().map(q).collect())
            .collect();
        let Some(u) = solve(a, vec![BigRational::one(); n]) else {
            continue;
        };
        let ok = vs.iter().all(|v| {
            let val: BigRational = v.coords().iter().zip(&u).map(|(c, ui)| q(c) * ui).sum();
            val <= BigRational::one()
        });
        if ok {
            out.insert(subset);
        }
    }
    out
}

/// Primitive collections by scanning every subset of rays: a subset is a
/// cone iff some maximal cone contains it, and a collection is primitive
/// iff it is not a cone while each subset obtained by dropping one element
/// is.
pub fn oracle_primitive_collections(fan: &Fan) -> BTreeSet<Vec<usize>> {
    let m = fan.ray_count();
    assert!(m <= 16, "brute force is limited to 16 rays");
    let cones: Vec<u32> = fan
        .max_cones()
        .iter()
        .map(|c| c.iter().fold(0u32, |acc, &i| acc | (1 << i)))
        .collect();
    let is_cone = |s: u32| cones.iter().any(|&c| s & c == s);
    let mut out = BTreeSet::new();
    for s in 1u32..(1 << m) {
        if is_cone(s) {
            continue;
        }
        if (0..m).all(|i| s & (1 << i) == 0 || is_cone(s & !(1 << i))) {
            out.insert((0..m).filter(|&i| s & (1 << i) != 0).collect());
        }
    }
    out
}

/// Smooth Fano polygon test from the cyclic structure: sorted by angle,
/// consecutive rays form lattice bases and every `b` in
/// `vᵢ₋₁ + vᵢ₊₁ = b·vᵢ` is at most 1. Returns the cyclic `b` sequence.
pub fn polygon_sequence(points: &[[i64; 2]]) -> Option<Vec<i64>> {
    let m = points.len();
    if m < 3 {
        return None;
    }
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| {
        let ha = (a[1] < 0 || (a[1] == 0 && a[0] < 0)) as u8;
        let hb = (b[1] < 0 || (b[1] == 0 && b[0] < 0)) as u8;
        ha.cmp(&hb)
            .then_with(|| 0.cmp(&(a[0] * b[1] - a[1] * b[0])))
    });
    for i in 0..m {
        let (a, b) = (pts[i], pts[(i + 1) % m]);
        if a[0] * b[1] - a[1] * b[0] != 1 {
            return None;
        }
    }
    let mut seq = Vec::with_capacity(m);
    for i in 0..m {
        let (prev, cur, next) = (pts[(i + m - 1) % m], pts[i], pts[(i + 1) % m]);
        let s = [prev[0] + next[0], prev[1] + next[1]];
        let b = if cur[0] != 0 {
            s[0] / cur[0]
        } else {
            s[1] / cur[1]
        };
        assert_eq!(
            [b * cur[0], b * cur[1]],
            s,
            "smooth fans satisfy the wall relation"
        );
        if b > 1 {
            return None;
        }
        seq.push(b);
    }
    Some(seq)
}

/// The least rotation or reflection of a cyclic sequence; a complete
/// invariant of smooth complete toric surfaces.
pub fn cyclic_canonical(seq: &[i64]) -> Vec<i64> {
    let m = seq.len();
    let rev: Vec<i64> = seq.iter().rev().copied().collect();
    (0..m)
        .flat_map(|r| {
            [
                (0..m).map(|i| seq[(i + r) % m]).collect::<Vec<_>>(),
                (0..m).map(|i| rev[(i + r) % m]).collect::<Vec<_>>(),
            ]
        })
        .min()
        .unwrap()
}

/// Smooth Fano polygon classes in `[-b, b]²` by the cyclic oracle.
pub fn oracle_polygon_classes(b: i64) -> BTreeSet<Vec<i64>> {
    let pts: Vec<[i64; 2]> = (-b..=b)
        .cartesian_product(-b..=b)
        .filter(|&(x, y)| num_integer::gcd(x, y) == 1)
        .map(|(x, y)| [x, y])
        .collect();
    (3..=pts.len().min(8))
        .flat_map(|k| pts.iter().copied().combinations(k))
        .filter_map(|s| polygon_sequence(&s))
        .map(|s| cyclic_canonical(&s))
        .collect()
}

pub fn polygon_points(p: &FanoPolytope) -> Vec<[i64; 2]> {
    use num_traits::ToPrimitive;
    p.vertices()
        .iter()
        .map(|v| {
            [
                v.coords()[0].to_i64().unwrap(),
                v.coords()[1].to_i64().unwrap(),
            ]
        })
        .collect()
}

/// Largest `ρ` with `ρ·(k−1) ≤ n(n+1)/2`, found by counting up.
pub fn oracle_cfh_bound(n: i64, k: i64) -> i64 {
    let mut rho = 0;
    while 2 * (rho + 1) * (k - 1) <= n * (n + 1) {
        rho += 1;
    }
    rho
}

/// A unimodular matrix built from elementary row operations
/// `(target, source, factor)` followed by optional sign flips.
pub fn unimodular(n: usize, ops: &[(usize, usize, i64)], flips: &[bool]) -> IntMatrix {
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for &(t, s, f) in ops {
        let (t, s) = (t % n, s % n);
        if t == s {
            rows.swap(t, (t + 1) % n);
            continue;
        }
        for j in 0..n {
            rows[t][j] += f * rows[s][j];
        }
    }
    for (i, &flip) in flips.iter().enumerate().take(n) {
        if flip {
            for x in &mut rows[i] {
                *x = -*x;
            }
        }
    }
    IntMatrix::from_i64s(n, n, &rows.concat()).unwrap()
}

pub fn abs_is_one(x: &BigInt) -> bool {
    x.abs().is_one()
}

pub fn vec(xs: &[i64]) -> LatticeVector {
    LatticeVector::from_i64s(xs)
}
