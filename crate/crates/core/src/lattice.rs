//! Exact integer linear algebra over `ℤⁿ`.
//!
//! Everything here works with arbitrary-precision integers; no floating
//! point is used in any predicate. The module provides lattice vectors,
//! dense integer matrices with Bareiss determinants, Smith and Hermite
//! normal forms, and the projection onto the quotient of `ℤⁿ` by a
//! saturated sublattice.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A point of the lattice `ℤⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<BigInt>);

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![BigInt::zero(); rank])
    }

    /// The `i`-th standard basis vector of `ℤ^rank`.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = BigInt::one();
        v
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Non-negative gcd of the coordinates (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// The vector divided by the gcd of its coordinates.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self(self.0.iter().map(|c| c / &g).collect())
    }

    pub fn dot(&self, other: &Self) -> BigInt {
        debug_assert_eq!(self.rank(), other.rank());
        self.0
            .iter()
            .zip(&other.0)
            .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    /// Concatenate coordinates, embedding into `ℤ^(n+m)`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut coords = self.0.clone();
        coords.extend(other.0.iter().cloned());
        Self(coords)
    }

    /// Sum of a sequence of vectors of the given rank.
    pub fn sum<'a>(rank: usize, vectors: impl IntoIterator<Item = &'a LatticeVector>) -> Self {
        vectors
            .into_iter()
            .fold(Self::zero(rank), |acc, v| &acc + v)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;

    fn add(self, rhs: Self) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;

    fn sub(self, rhs: Self) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;

    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|c| -c).collect())
    }
}

/// True iff the gcd of the coordinates is 1.
pub fn is_primitive(v: &LatticeVector) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.content().is_one())
}

/// True iff `vectors` is a basis of `ℤⁿ`, i.e. their determinant is ±1.
pub fn is_unimodular_basis(vectors: &[LatticeVector]) -> Result<bool> {
    let m = IntMatrix::from_rows(vectors)?;
    if m.rows() != m.cols() {
        return Err(Error::ShapeMismatch(format!(
            "{} vectors of rank {}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m.determinant()?.abs().is_one())
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64s(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::new(
            rows,
            cols,
            entries.iter().map(|&e| BigInt::from(e)).collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Matrix whose rows are the given vectors. The column count of an empty
    /// list is zero.
    pub fn from_rows(rows: &[LatticeVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, LatticeVector::rank);
        if let Some(bad) = rows.iter().find(|r| r.rank() != cols) {
            return Err(Error::ShapeMismatch(format!(
                "row of rank {} in a matrix with {cols} columns",
                bad.rank()
            )));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.coords().iter().cloned())
            .collect();
        Self::new(rows.len(), cols, entries)
    }

    /// Matrix whose columns are the given vectors, each of rank `rank`.
    pub fn from_columns(rank: usize, columns: &[LatticeVector]) -> Result<Self> {
        let mut m = Self::zeros(rank, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.rank() != rank {
                return Err(Error::ShapeMismatch(format!(
                    "column of rank {} in a matrix with {rank} rows",
                    c.rank()
                )));
            }
            for (i, x) in c.coords().iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> LatticeVector {
        LatticeVector(self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> LatticeVector {
        LatticeVector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn row_vectors(&self) -> Vec<LatticeVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self · v`.
    pub fn apply(&self, v: &LatticeVector) -> Result<LatticeVector> {
        if v.rank() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of rank {} against {} columns",
                v.rank(),
                self.cols
            )));
        }
        Ok(LatticeVector(
            (0..self.rows)
                .map(|i| {
                    self.entries[i * self.cols..(i + 1) * self.cols]
                        .iter()
                        .zip(v.coords())
                        .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        ))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    fn to_nested(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(bareiss_determinant(self.to_nested()))
    }

    pub fn rank(&self) -> usize {
        fraction_free_rank(self.to_nested())
    }

    /// Inverse over `ℚ`, or `None` when singular.
    pub fn inverse_rational(&self) -> Option<Vec<Vec<BigRational>>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..2 * n)
                    .map(|j| {
                        if j < n {
                            BigRational::from_integer(self[(i, j)].clone())
                        } else if j - n == i {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    let (top, bottom) = if r < col {
                        let (t, b) = a.split_at_mut(col);
                        (&mut t[r], &b[0])
                    } else {
                        let (t, b) = a.split_at_mut(r);
                        (&mut b[0], &t[col])
                    };
                    for (x, p) in top.iter_mut().zip(bottom.iter()) {
                        *x -= &f * p;
                    }
                }
            }
        }
        Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// Integer inverse of a unimodular matrix; `None` if the matrix is not
    /// invertible over `ℤ`.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        let inv = self.inverse_rational()?;
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        for (i, row) in inv.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                if !x.is_integer() {
                    return None;
                }
                out[(i, j)] = x.to_integer();
            }
        }
        Some(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k · row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k · col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }

    /// Smith normal form `D = U · self · V`.
    ///
    /// Pivots are the nonzero entries of least absolute value, ties broken by
    /// row-major position, so the transforms are reproducible.
    pub fn smith_normal_form(&self) -> SmithForm {
        let (rows, cols) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut u = Self::identity(rows);
        let mut v = Self::identity(cols);

        for t in 0..rows.min(cols) {
            loop {
                let Some((pi, pj)) = d.min_abs_position(t) else {
                    return SmithForm { u, d, v };
                };
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);

                let pivot = d[(t, t)].clone();
                let mut clean = true;
                for i in t + 1..rows {
                    if d[(i, t)].is_zero() {
                        continue;
                    }
                    let q = -(&d[(i, t)] / &pivot);
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    clean &= d[(i, t)].is_zero();
                }
                for j in t + 1..cols {
                    if d[(t, j)].is_zero() {
                        continue;
                    }
                    let q = -(&d[(t, j)] / &pivot);
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    clean &= d[(t, j)].is_zero();
                }
                if !clean {
                    continue;
                }
                let offender = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
                match offender {
                    Some(i) => {
                        let one = BigInt::one();
                        d.add_row_multiple(t, i, &one);
                        u.add_row_multiple(t, i, &one);
                    }
                    None => break,
                }
            }
            if d[(t, t)].is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
        }
        SmithForm { u, d, v }
    }

    fn min_abs_position(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self[(bi, bj)].abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    /// Row-style Hermite normal form `W · self` with `W` unimodular: echelon
    /// form, positive pivots, entries above each pivot reduced into
    /// `[0, pivot)`. Zero rows sink to the bottom.
    pub fn hermite_normal_form(&self) -> IntMatrix {
        let mut h = self.clone();
        let mut p = 0;
        for j in 0..self.cols {
            if p == self.rows {
                break;
            }
            loop {
                let mut best: Option<usize> = None;
                for i in p..self.rows {
                    if h[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|b| h[(i, j)].abs() < h[(b, j)].abs()) {
                        best = Some(i);
                    }
                }
                let Some(b) = best else { break };
                h.swap_rows(p, b);
                let pivot = h[(p, j)].clone();
                let mut done = true;
                for i in p + 1..self.rows {
                    if h[(i, j)].is_zero() {
                        continue;
                    }
                    let q = -(&h[(i, j)] / &pivot);
                    h.add_row_multiple(i, p, &q);
                    done &= h[(i, j)].is_zero();
                }
                if done {
                    break;
                }
            }
            if h[(p, j)].is_zero() {
                continue;
            }
            if h[(p, j)].is_negative() {
                h.negate_row(p);
            }
            let pivot = h[(p, j)].clone();
            for i in 0..p {
                let q = -h[(i, j)].div_floor(&pivot);
                if !q.is_zero() {
                    h.add_row_multiple(i, p, &q);
                }
            }
            p += 1;
        }
        h
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// `d = u · m · v` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    m.smith_normal_form()
}

pub(crate) fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

fn fraction_free_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            let piv = a[rank][c].clone();
            #[allow(clippy::needless_range_loop)]
            for j in c..cols {
                let v = &a[r][j] * &piv - &a[rank][j] * &f;
                a[r][j] = v;
            }
            // keep entries small
            let g = a[r].iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in a[r].iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Linear projection `ℤⁿ → ℤ^(n−r)` whose kernel is the span of a saturated
/// rank-`r` sublattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientProjection {
    pub ambient_rank: usize,
    pub kernel_rank: usize,
    pub matrix: IntMatrix,
}

impl QuotientProjection {
    pub fn target_rank(&self) -> usize {
        self.ambient_rank - self.kernel_rank
    }

    pub fn apply(&self, v: &LatticeVector) -> Result<LatticeVector> {
        self.matrix.apply(v)
    }
}

/// Projection killing `span(kernel_basis)`.
///
/// The kernel vectors must extend to a basis of `ℤⁿ`. The returned matrix
/// is in Hermite normal form, so the result depends only on the span.
pub fn quotient_projection(
    ambient_rank: usize,
    kernel_basis: &[LatticeVector],
) -> Result<QuotientProjection> {
    let r = kernel_basis.len();
    if r > ambient_rank {
        return Err(Error::NotSaturated);
    }
    let k = IntMatrix::from_columns(ambient_rank, kernel_basis)?;
    let snf = k.smith_normal_form();
    if (0..r).any(|i| !snf.d[(i, i)].is_one()) {
        return Err(Error::NotSaturated);
    }
    let rest: Vec<LatticeVector> = (r..ambient_rank).map(|i| snf.u.row(i)).collect();
    let matrix = if rest.is_empty() {
        IntMatrix::zeros(0, ambient_rank)
    } else {
        IntMatrix::from_rows(&rest)?.hermite_normal_form()
    };
    Ok(QuotientProjection {
        ambient_rank,
        kernel_rank: r,
        matrix,
    })
}
