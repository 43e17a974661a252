//! Brute-force dense complex linear algebra used as ground truth for the
//! closed forms: O(n³) products, binary exponentiation, LU with partial
//! pivoting, and the three-term tridiagonal determinant recurrence.

use crate::error::{Error, Result};
use crate::matrix::{ComplexScalar, DenseMatrix};

/// Pivots at or below this magnitude are treated as exact zeros.
pub const PIVOT_FLOOR: f64 = 1e-300;

fn zero() -> ComplexScalar {
    ComplexScalar::new(0.0, 0.0)
}

fn one() -> ComplexScalar {
    ComplexScalar::new(1.0, 0.0)
}

pub fn mat_mul(x: &DenseMatrix, y: &DenseMatrix) -> Result<DenseMatrix> {
    let n = x.n();
    if n != y.n() {
        return Err(Error::DimensionMismatch { left: n, right: y.n() });
    }
    let (xs, ys) = (x.as_slice(), y.as_slice());
    let mut out = DenseMatrix::zeros(n);
    let os = out.as_mut_slice();
    // i-k-j order keeps the inner loop on contiguous rows of y and out.
    for i in 0..n {
        let out_row = &mut os[i * n..(i + 1) * n];
        for k in 0..n {
            let xik = xs[i * n + k];
            if xik == zero() {
                continue;
            }
            let y_row = &ys[k * n..(k + 1) * n];
            for (o, &ykj) in out_row.iter_mut().zip(y_row) {
                *o += xik * ykj;
            }
        }
    }
    Ok(out)
}

/// `m^r` by binary exponentiation; `r = 0` gives the identity.
pub fn mat_power(m: &DenseMatrix, r: u64) -> DenseMatrix {
    let n = m.n();
    let mut result = DenseMatrix::identity(n);
    let mut base = m.clone();
    let mut e = r;
    let mut first = true;
    while e > 0 {
        if e & 1 == 1 {
            result = if first {
                first = false;
                base.clone()
            } else {
                mat_mul(&result, &base).expect("square factors of equal size")
            };
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base).expect("square factors of equal size");
        }
    }
    result
}

/// `m^r` for any integer `r`; negative exponents invert first.
pub fn mat_power_signed(m: &DenseMatrix, r: i64) -> Result<DenseMatrix> {
    if r >= 0 {
        Ok(mat_power(m, r as u64))
    } else {
        let inv = lu_inverse(m)?;
        Ok(mat_power(&inv, r.unsigned_abs()))
    }
}

/// Packed `P·A = L·U` factorization with unit-diagonal `L`.
#[derive(Debug, Clone)]
pub struct LuFactorization {
    n: usize,
    packed: Vec<ComplexScalar>,
    /// `perm[k]` is the 1-based original row now in position `k + 1`.
    perm: Vec<usize>,
    sign: i8,
    /// First step (1-based) whose pivot fell at or below [`PIVOT_FLOOR`].
    singular_at: Option<usize>,
}

impl LuFactorization {
    pub fn new(m: &DenseMatrix) -> Self {
        let n = m.n();
        let mut a = m.as_slice().to_vec();
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut sign = 1i8;
        let mut singular_at = None;

        for k in 0..n {
            let (p, pmag) = (k..n)
                .map(|i| (i, a[i * n + k].norm()))
                .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
                sign = -sign;
            }
            if pmag <= PIVOT_FLOOR {
                singular_at.get_or_insert(k + 1);
                continue;
            }
            let pivot = a[k * n + k];
            for i in (k + 1)..n {
                let factor = a[i * n + k] / pivot;
                a[i * n + k] = factor;
                if factor == zero() {
                    continue;
                }
                for j in (k + 1)..n {
                    let ukj = a[k * n + j];
                    a[i * n + j] -= factor * ukj;
                }
            }
        }

        Self {
            n,
            packed: a,
            perm,
            sign,
            singular_at,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn permutation_sign(&self) -> i8 {
        self.sign
    }

    pub fn is_singular(&self) -> bool {
        self.singular_at.is_some()
    }

    pub fn lower(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Greater => self.packed[(i - 1) * self.n + (j - 1)],
            std::cmp::Ordering::Equal => one(),
            std::cmp::Ordering::Less => zero(),
        })
    }

    pub fn upper(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.n, |i, j| {
            if i <= j {
                self.packed[(i - 1) * self.n + (j - 1)]
            } else {
                zero()
            }
        })
    }

    /// Rows of the original matrix in pivot order, `P·A`.
    pub fn permute_rows(&self, m: &DenseMatrix) -> DenseMatrix {
        DenseMatrix::from_fn(self.n, |i, j| m.get(self.perm[i - 1], j))
    }

    pub fn det(&self) -> ComplexScalar {
        if self.is_singular() {
            return zero();
        }
        let diag = (0..self.n).fold(one(), |acc, k| acc * self.packed[k * self.n + k]);
        diag * f64::from(self.sign)
    }

    fn pivot_magnitudes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|k| self.packed[k * self.n + k].norm())
    }

    /// Solves `A x = rhs` for one right-hand side.
    fn solve_in_place(&self, rhs: &mut [ComplexScalar]) {
        let n = self.n;
        let permuted: Vec<ComplexScalar> = self.perm.iter().map(|&p| rhs[p - 1]).collect();
        rhs.copy_from_slice(&permuted);
        for i in 0..n {
            let row = &self.packed[i * n..i * n + i];
            let acc = row.iter().zip(&rhs[..i]).fold(rhs[i], |acc, (l, x)| acc - l * x);
            rhs[i] = acc;
        }
        for i in (0..n).rev() {
            let row = &self.packed[i * n + i + 1..(i + 1) * n];
            let acc = row.iter().zip(&rhs[i + 1..]).fold(rhs[i], |acc, (u, x)| acc - u * x);
            rhs[i] = acc / self.packed[i * n + i];
        }
    }

    /// Inverse by column-wise solves.
    ///
    /// Fails on an exactly zero pivot, or when the smallest pivot is below
    /// `n·ε` times the largest (the matrix is numerically singular).
    pub fn inverse(&self) -> Result<DenseMatrix> {
        if let Some(step) = self.singular_at {
            return Err(Error::SingularMatrix { step, pivot: 0.0 });
        }
        let max_pivot = self.pivot_magnitudes().fold(0.0, f64::max);
        let threshold = self.n as f64 * f64::EPSILON * max_pivot;
        if let Some((step, pivot)) = self
            .pivot_magnitudes()
            .enumerate()
            .find(|&(_, p)| p <= threshold)
        {
            return Err(Error::SingularMatrix { step: step + 1, pivot });
        }

        let n = self.n;
        let mut inv = DenseMatrix::zeros(n);
        let mut column = vec![zero(); n];
        for j in 0..n {
            column.iter_mut().for_each(|c| *c = zero());
            column[j] = one();
            self.solve_in_place(&mut column);
            for (i, &v) in column.iter().enumerate() {
                inv.set(i + 1, j + 1, v);
            }
        }
        Ok(inv)
    }
}

pub fn lu_det(m: &DenseMatrix) -> ComplexScalar {
    LuFactorization::new(m).det()
}

pub fn lu_inverse(m: &DenseMatrix) -> Result<DenseMatrix> {
    LuFactorization::new(m).inverse()
}

/// Determinant `D_m` of the `m × m` tridiagonal matrix with constant bands,
/// via `D_m = diag·D_{m-1} - sub·sup·D_{m-2}`, `D_0 = 1`, `D_{-1} = 0`.
pub fn tridiag_det(
    m: usize,
    sub: ComplexScalar,
    diag: ComplexScalar,
    sup: ComplexScalar,
) -> ComplexScalar {
    let off = sub * sup;
    let (mut prev, mut cur) = (zero(), one());
    for _ in 0..m {
        let next = diag * cur - off * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Dense `m × m` matrix with constant sub-, main and super-diagonal bands.
pub fn dense_tridiag(
    m: usize,
    sub: ComplexScalar,
    diag: ComplexScalar,
    sup: ComplexScalar,
) -> DenseMatrix {
    DenseMatrix::from_fn(m, |i, j| {
        if i == j {
            diag
        } else if i == j + 1 {
            sub
        } else if j == i + 1 {
            sup
        } else {
            zero()
        }
    })
}
