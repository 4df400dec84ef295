//! Exact integer and rational linear algebra.
//!
//! Hermite normal form, sublattices of `Z^n` with membership and coordinates,
//! and functionals restricted to a sublattice. Matrices are plain `Vec<Vec<T>>`
//! in row-major order.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::{clear_denominators, dot, is_zero_vec, primitive, Int, Rat};

pub type IntMatrix<T> = Vec<Vec<T>>;
pub type RatMatrix<T> = Vec<Vec<Rat<T>>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero vector spans no ray")]
    ZeroVector,
    #[error("vector does not lie in the rational span of the lattice")]
    OutsideSpan,
}

fn check_len<T>(v: &[T], n: usize) -> Result<(), LinError> {
    if v.len() != n {
        return Err(LinError::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    Ok(())
}

fn axpy<T: Int>(row: &mut [T], q: &T, other: &[T]) {
    for (a, b) in row.iter_mut().zip(other) {
        *a = a.clone() - q.clone() * b.clone();
    }
}

/// Row-style Hermite normal form of the row span of `m`.
///
/// The result is upper echelon with positive pivots, every entry above a pivot
/// reduced into `[0, pivot)`, and zero rows dropped. Two matrices have the same
/// row lattice iff their HNFs are equal.
pub fn hnf<T: Int>(m: &[Vec<T>]) -> IntMatrix<T> {
    let mut rows: Vec<Vec<T>> = m.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        loop {
            let pick = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(p) = pick else { break };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            let mut done = true;
            for row in rows.iter_mut().skip(r + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot_row[c]);
                axpy(row, &q, &pivot_row);
                if !row[c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r == rows.len() || rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().take(r) {
            let q = row[c].div_floor(&pivot_row[c]);
            if !q.is_zero() {
                axpy(row, &q, &pivot_row);
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows.retain(|row| !is_zero_vec(row));
    rows
}

/// Reduced row echelon form over the rationals; returns the nonzero rows and
/// their pivot columns.
pub fn rref<T: Int>(m: &[Vec<T>]) -> (RatMatrix<T>, Vec<usize>) {
    let mut a: RatMatrix<T> = m
        .iter()
        .map(|r| r.iter().map(|x| Ratio::from_integer(x.clone())).collect())
        .collect();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                *x = x.clone() - f.clone() * y.clone();
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank<T: Int>(m: &[Vec<T>]) -> usize {
    rref(m).1.len()
}

/// Integer basis of `{x : m x = 0}`, each vector primitive.
pub fn nullspace<T: Int>(m: &[Vec<T>], ncols: usize) -> IntMatrix<T> {
    let (r, pivots) = rref(m);
    let mut out = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::<T>::zero(); ncols];
        v[f] = Rat::one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = -row[f].clone();
        }
        out.push(clear_denominators(&v));
    }
    out
}

/// Canonical integer basis of the rational row space: RREF rows scaled to
/// primitive integer vectors.
pub fn row_space_basis<T: Int>(m: &[Vec<T>]) -> IntMatrix<T> {
    rref(m).0.iter().map(|r| clear_denominators(r)).collect()
}

/// Coefficients `c` with `sum c_k vectors[k] = target`, if any exist.
/// Free coefficients are set to zero.
pub fn solve_combination<T: Int>(vectors: &[Vec<T>], target: &[T]) -> Option<Vec<Rat<T>>> {
    let k = vectors.len();
    let n = target.len();
    let aug: Vec<Vec<T>> = (0..n)
        .map(|i| {
            let mut row: Vec<T> = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut c = vec![Rat::<T>::zero(); k];
    for (row, &p) in r.iter().zip(&pivots) {
        c[p] = row[k].clone();
    }
    Some(c)
}

/// Adjugate-style inverse of a nonsingular square matrix: returns `(adj, d)`
/// with `m * adj = d * I` and `d > 0`.
pub fn inverse_with_det<T: Int>(m: &[Vec<T>]) -> Option<(IntMatrix<T>, T)> {
    let n = m.len();
    let mut a: RatMatrix<T> = m
        .iter()
        .map(|r| r.iter().map(|x| Ratio::from_integer(x.clone())).collect())
        .collect();
    let mut inv: RatMatrix<T> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    let mut det = Rat::<T>::one();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        if p != c {
            a.swap(p, c);
            inv.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det = det * piv.clone();
        let pinv = piv.recip();
        for j in 0..n {
            a[c][j] = a[c][j].clone() * pinv.clone();
            inv[c][j] = inv[c][j].clone() * pinv.clone();
        }
        let (arow, irow) = (a[c].clone(), inv[c].clone());
        for i in (0..n).filter(|&i| i != c) {
            let f = a[i][c].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                a[i][j] = a[i][j].clone() - f.clone() * arow[j].clone();
                inv[i][j] = inv[i][j].clone() - f.clone() * irow[j].clone();
            }
        }
    }
    let d = det.to_integer().abs();
    let dd = Ratio::from_integer(d.clone());
    let adj = inv
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let y = x.clone() * dd.clone();
                    debug_assert!(y.is_integer());
                    y.to_integer()
                })
                .collect()
        })
        .collect();
    Some((adj, d))
}

/// A functional on a sublattice, given by its values on the HNF basis rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualVector<T>(pub Vec<T>);

impl<T: Int> DualVector<T> {
    /// Evaluate on a lattice element given in basis coordinates.
    pub fn pair(&self, coords: &[T]) -> T {
        dot(&self.0, coords)
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.0)
    }

    /// Primitive in `Hom(L, Z)`: coordinates have gcd one.
    pub fn is_primitive(&self) -> bool {
        crate::scalar::content(&self.0).is_one()
    }

    /// If `self = q * other` for a rational `q > 0`, return `q`.
    pub fn positive_ratio(&self, other: &DualVector<T>) -> Option<Rat<T>> {
        if self.0.len() != other.0.len() || other.is_zero() || self.is_zero() {
            return None;
        }
        let k = other.0.iter().position(|x| !x.is_zero())?;
        let q = Ratio::new(self.0[k].clone(), other.0[k].clone());
        if !q.is_positive() {
            return None;
        }
        let proportional = self
            .0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| Ratio::from_integer(a.clone()) == q.clone() * Ratio::from_integer(b.clone()));
        proportional.then_some(q)
    }
}

/// A sublattice of `Z^n`, stored by its HNF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubLattice<T> {
    ambient: usize,
    basis: IntMatrix<T>,
    pivots: Vec<usize>,
}

impl<T: Int> SubLattice<T> {
    /// The Z-span of `gens`.
    pub fn from_generators(ambient: usize, gens: &[Vec<T>]) -> Result<Self, LinError> {
        for g in gens {
            check_len(g, ambient)?;
        }
        let basis = hnf(gens);
        let pivots = basis
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("HNF rows are nonzero"))
            .collect();
        Ok(SubLattice {
            ambient,
            basis,
            pivots,
        })
    }

    pub fn full(ambient: usize) -> Self {
        let gens: Vec<Vec<T>> = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { T::one() } else { T::zero() }).collect())
            .collect();
        Self::from_generators(ambient, &gens).expect("identity rows have the ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    /// Integer coordinates of `v` in the HNF basis, or `None` when `v` is not
    /// a lattice point.
    pub fn coordinates(&self, v: &[T]) -> Result<Option<Vec<T>>, LinError> {
        check_len(v, self.ambient)?;
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if rest[..p].iter().any(|x| !x.is_zero()) {
                return Ok(None);
            }
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return Ok(None);
            }
            axpy(&mut rest, &q, row);
            coords.push(q);
        }
        Ok(is_zero_vec(&rest).then_some(coords))
    }

    pub fn is_member(&self, v: &[T]) -> Result<bool, LinError> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Rational coordinates of `v` in the HNF basis, when `v` lies in the
    /// rational span.
    pub fn rational_coordinates(&self, v: &[T]) -> Result<Option<Vec<Rat<T>>>, LinError> {
        check_len(v, self.ambient)?;
        let mut rest: Vec<Rat<T>> = v.iter().map(|x| Ratio::from_integer(x.clone())).collect();
        let mut coords = Vec::with_capacity(self.rank());
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if rest[..p].iter().any(|x| !x.is_zero()) {
                return Ok(None);
            }
            let q = rest[p].clone() / Ratio::from_integer(row[p].clone());
            for (x, b) in rest.iter_mut().zip(row) {
                *x = x.clone() - q.clone() * Ratio::from_integer(b.clone());
            }
            coords.push(q);
        }
        Ok(rest.iter().all(|x| x.is_zero()).then_some(coords))
    }

    /// The lattice element with the given basis coordinates.
    pub fn combine(&self, coords: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            for (o, b) in out.iter_mut().zip(row) {
                *o = o.clone() + c.clone() * b.clone();
            }
        }
        out
    }

    /// The shortest nonzero lattice point on the ray through `v`.
    pub fn primitive_part(&self, v: &[T]) -> Result<Vec<T>, LinError> {
        if is_zero_vec(v) {
            check_len(v, self.ambient)?;
            return Err(LinError::ZeroVector);
        }
        let coords = self.rational_coordinates(v)?.ok_or(LinError::OutsideSpan)?;
        Ok(self.combine(&clear_denominators(&coords)))
    }

    /// Restrict an ambient functional `f` (as a coefficient vector on `Z^n`)
    /// to this lattice.
    pub fn restrict_functional(&self, f: &[T]) -> Result<DualVector<T>, LinError> {
        check_len(f, self.ambient)?;
        Ok(DualVector(self.basis.iter().map(|row| dot(row, f)).collect()))
    }

    /// True iff `other` is a sublattice of `self`.
    pub fn contains_lattice(&self, other: &SubLattice<T>) -> bool {
        other
            .basis
            .iter()
            .all(|b| self.is_member(b).unwrap_or(false))
    }
}

/// Primitive integer vector on the ray of `v`.
pub fn primitive_vector<T: Int>(v: &[T]) -> Vec<T> {
    primitive(v)
}
