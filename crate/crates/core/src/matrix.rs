//! Dense complex square matrices.
//!
//! Storage is row-major. All public accessors take 1-based `(i, j)` indices so
//! code reads the same as the entry formulas `a_ij`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Double-precision complex scalar used for every matrix entry.
pub type ComplexScalar = Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    entries: Vec<ComplexScalar>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![ComplexScalar::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for k in 0..n {
            m.entries[k * n + k] = ComplexScalar::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from a 1-based entry function.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ComplexScalar) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    /// Takes ownership of a row-major buffer, which must hold exactly `n * n` entries.
    pub fn from_row_major(n: usize, entries: Vec<ComplexScalar>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries for n = {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(Self { n, entries })
    }

    pub fn from_rows<R: AsRef<[ComplexScalar]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (idx, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    idx + 1,
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Self::from_row_major(n, entries)
    }

    /// Real-valued convenience constructor, mostly for fixtures.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let rows: Vec<Vec<ComplexScalar>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| ComplexScalar::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[ComplexScalar] {
        &self.entries
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [ComplexScalar] {
        &mut self.entries
    }

    pub fn into_row_major(self) -> Vec<ComplexScalar> {
        self.entries
    }

    /// Entry `(i, j)`, 1-based.
    ///
    /// Panics when an index is outside `1..=n`.
    pub fn get(&self, i: usize, j: usize) -> ComplexScalar {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j),
            "index ({i}, {j}) out of range for n = {}",
            self.n
        );
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: ComplexScalar) {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j),
            "index ({i}, {j}) out of range for n = {}",
            self.n
        );
        self.entries[(i - 1) * self.n + (j - 1)] = value;
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[ComplexScalar] {
        &self.entries[(i - 1) * self.n..i * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ComplexScalar]> {
        self.entries.chunks(self.n)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max))
    }

    /// `max |self - reference| / max |reference|`, falling back to the absolute
    /// deviation when the reference is identically zero.
    pub fn rel_deviation(&self, reference: &DenseMatrix) -> Result<f64> {
        let diff = self.max_abs_diff(reference)?;
        let scale = reference.max_abs();
        Ok(if scale > 0.0 { diff / scale } else { diff })
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn scale(&self, factor: ComplexScalar) -> DenseMatrix {
        DenseMatrix {
            n: self.n,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn sub(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(DenseMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(x, y)| x - y)
                .collect(),
        })
    }

    /// `self - shift * I`.
    pub fn shift_diagonal(&self, shift: ComplexScalar) -> DenseMatrix {
        let mut out = self.clone();
        for k in 0..self.n {
            out.entries[k * self.n + k] -= shift;
        }
        out
    }
}

/// Reverses the row order, i.e. left multiplication by the exchange matrix.
pub fn flip_rows(m: &DenseMatrix) -> DenseMatrix {
    let n = m.n;
    let mut entries = Vec::with_capacity(n * n);
    for i in (1..=n).rev() {
        entries.extend_from_slice(m.row(i));
    }
    DenseMatrix { n, entries }
}

/// True when `|m_ij - m_{n+1-i, n+1-j}| <= tol` for every entry.
pub fn is_centrosymmetric(m: &DenseMatrix, tol: f64) -> bool {
    let n = m.n;
    let len = n * n;
    // Rotating by 180 degrees maps row-major index p to len - 1 - p.
    (0..len).all(|p| (m.entries[p] - m.entries[len - 1 - p]).norm() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> ComplexScalar {
        ComplexScalar::new(re, 0.0)
    }

    #[test]
    fn identity_flips_to_anti_identity() {
        let flipped = flip_rows(&DenseMatrix::identity(3));
        for i in 1..=3 {
            for j in 1..=3 {
                let expected = if j == 4 - i { 1.0 } else { 0.0 };
                assert_eq!(flipped.get(i, j), c(expected));
            }
        }
    }

    #[test]
    fn flip_is_an_involution() {
        let m = DenseMatrix::from_fn(4, |i, j| ComplexScalar::new(i as f64, 0.5 * j as f64 - 1.0));
        assert_eq!(flip_rows(&flip_rows(&m)), m);
    }

    #[test]
    fn centrosymmetry_detects_asymmetry() {
        let m = DenseMatrix::from_real_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        assert!(!is_centrosymmetric(&m, 0.0));
        assert!(is_centrosymmetric(&m, 3.0));
        let s = DenseMatrix::from_real_rows(&[[1.0, 2.0], [2.0, 1.0]]).unwrap();
        assert!(is_centrosymmetric(&s, 0.0));
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows: Vec<Vec<ComplexScalar>> = vec![vec![c(1.0), c(2.0)], vec![c(3.0)]];
        assert!(matches!(DenseMatrix::from_rows(&rows), Err(Error::InvalidMatrix(_))));
        assert!(DenseMatrix::from_row_major(2, vec![c(0.0); 3]).is_err());
    }

    #[test]
    fn one_based_accessors() {
        let m = DenseMatrix::from_real_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        assert_eq!(m.get(1, 2), c(2.0));
        assert_eq!(m.get(2, 1), c(3.0));
        assert_eq!(m.row(2), &[c(3.0), c(4.0)]);
    }

    #[test]
    #[should_panic]
    fn zero_index_panics() {
        DenseMatrix::identity(2).get(0, 1);
    }
}
