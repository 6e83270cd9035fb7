//! Exhaustive search for smooth Fano polygons in a box.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_integer::Integer;
use rayon::prelude::*;

use crate::lattice::LatticeVector;
use crate::polytope::{normal_form, validate_smooth_fano, FanoPolytope, NormalForm};

/// Largest absolute coordinate, then the vertex list.
type Rank = (i64, Vec<[i64; 2]>);

fn primitive_points(b: i64) -> Vec<[i64; 2]> {
    let mut pts = Vec::new();
    for x in -b..=b {
        for y in -b..=b {
            if x.gcd(&y) == 1 {
                pts.push([x, y]);
            }
        }
    }
    pts
}

/// Every smooth Fano polygon with vertices among the primitive points of
/// `[-b, b]²`, one per normal-form class, ordered by vertex count and then
/// normal form. Classes are named `polygon:1`, `polygon:2`, ...; each
/// representative has the smallest largest coordinate, ties broken by the
/// sorted vertex list, so a larger box yields the same output.
///
/// # Panics
/// If `b < 1`.
pub fn enumerate_2d(b: i64) -> Vec<FanoPolytope> {
    assert!(b >= 1, "box radius must be at least 1");
    let pts = primitive_points(b);
    let max = pts.len().min(8);
    let subsets: Vec<Vec<usize>> = (3..=max)
        .flat_map(|k| (0..pts.len()).combinations(k))
        .collect();
    let found: Vec<(NormalForm, Rank, FanoPolytope)> = subsets
        .par_iter()
        .filter_map(|subset| {
            let verts = subset
                .iter()
                .map(|&i| LatticeVector::from_i64s(&pts[i]))
                .collect();
            let p = FanoPolytope::new("", 2, verts).ok()?;
            if !validate_smooth_fano(&p).is_valid() {
                return None;
            }
            let coords: Vec<[i64; 2]> = subset.iter().map(|&i| pts[i]).collect();
            let norm = coords.iter().flatten().map(|c| c.abs()).max().unwrap_or(0);
            Some((normal_form(&p).ok()?, (norm, coords), p))
        })
        .collect();
    let mut classes: BTreeMap<(usize, NormalForm), (Rank, FanoPolytope)> = BTreeMap::new();
    for (nf, rank, p) in found {
        let key = (nf.vertex_count(), nf);
        match classes.get(&key) {
            Some((r, _)) if *r <= rank => {}
            _ => {
                classes.insert(key, (rank, p));
            }
        }
    }
    classes
        .into_values()
        .enumerate()
        .map(|(i, (_, p))| p.with_name(format!("polygon:{}", i + 1)))
        .collect()
}
