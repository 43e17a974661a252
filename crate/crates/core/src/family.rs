//! The two anti-tridiagonal families and their tridiagonal companions.
//!
//! Family A: `Ã_n` is `tridiag(-b, a, -b)` with the boundary entries
//! `ã_11 = ã_nn = a`, `ã_12 = ã_{n,n-1} = 2b`, `ã_21 = ã_{n-1,n} = b`.
//! Family B: `B̃_n` is `tridiag(b, a, b)` with corners `a + b`.
//! In both cases the anti-tridiagonal matrix is `J_n` times the tridiagonal
//! one, and `J_n` commutes with it.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{flip_rows, ComplexScalar, DenseMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
}

impl Family {
    /// Smallest dimension for which the family's entry rules are consistent.
    ///
    /// At n = 2 the Family-A rules `ã_21 = b` and `ã_{n,n-1} = 2b` name the same entry.
    pub const fn min_dimension(self) -> usize {
        match self {
            Family::A => 3,
            Family::B => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => f.write_str("A"),
            Family::B => f.write_str("B"),
        }
    }
}

/// Validated description of one matrix: family, dimension and the two
/// complex parameters. Every builder goes through this type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntiTridiagSpec {
    family: Family,
    n: usize,
    a: ComplexScalar,
    b: ComplexScalar,
}

impl AntiTridiagSpec {
    pub fn new(family: Family, n: usize, a: ComplexScalar, b: ComplexScalar) -> Result<Self> {
        if !(a.re.is_finite() && a.im.is_finite()) {
            return Err(Error::NonFiniteParameter("a"));
        }
        if !(b.re.is_finite() && b.im.is_finite()) {
            return Err(Error::NonFiniteParameter("b"));
        }
        if b.re == 0.0 && b.im == 0.0 {
            return Err(Error::ZeroOffDiagonal);
        }
        let min = family.min_dimension();
        if n < min {
            return Err(Error::InvalidDimension {
                n,
                min,
                context: match family {
                    Family::A => "family A",
                    Family::B => "family B",
                },
            });
        }
        Ok(Self { family, n, a, b })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> ComplexScalar {
        self.a
    }

    pub fn b(&self) -> ComplexScalar {
        self.b
    }

    /// The tridiagonal companion `Ã_n` or `B̃_n`.
    pub fn build_tilde(&self) -> DenseMatrix {
        let (n, a, b) = (self.n, self.a, self.b);
        let mut m = DenseMatrix::zeros(n);
        match self.family {
            Family::A => {
                for k in 1..=n {
                    m.set(k, k, a);
                }
                for k in 1..n {
                    m.set(k, k + 1, -b);
                    m.set(k + 1, k, -b);
                }
                m.set(1, 2, b * 2.0);
                m.set(n, n - 1, b * 2.0);
                m.set(2, 1, b);
                m.set(n - 1, n, b);
            }
            Family::B => {
                for k in 1..=n {
                    m.set(k, k, a);
                }
                for k in 1..n {
                    m.set(k, k + 1, b);
                    m.set(k + 1, k, b);
                }
                m.set(1, 1, a + b);
                m.set(n, n, a + b);
            }
        }
        m
    }

    /// The anti-tridiagonal matrix `A_n` or `B_n`.
    pub fn build_anti(&self) -> DenseMatrix {
        flip_rows(&self.build_tilde())
    }

    /// Same family and dimension with new parameters.
    pub fn with_params(&self, a: ComplexScalar, b: ComplexScalar) -> Result<Self> {
        Self::new(self.family, self.n, a, b)
    }
}

/// The exchange matrix `J_n`: ones on the anti-diagonal.
pub fn exchange_matrix(n: usize) -> Result<DenseMatrix> {
    if n < 1 {
        return Err(Error::InvalidDimension {
            n,
            min: 1,
            context: "exchange matrix",
        });
    }
    Ok(DenseMatrix::from_fn(n, |i, j| {
        if j == n + 1 - i {
            ComplexScalar::new(1.0, 0.0)
        } else {
            ComplexScalar::new(0.0, 0.0)
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::is_centrosymmetric;

    fn re(x: f64) -> ComplexScalar {
        ComplexScalar::new(x, 0.0)
    }

    fn real_matrix<const N: usize>(rows: [[f64; N]; N]) -> DenseMatrix {
        DenseMatrix::from_real_rows(&rows).unwrap()
    }

    #[test]
    fn rejects_zero_b_and_small_n() {
        assert_eq!(
            AntiTridiagSpec::new(Family::A, 3, re(1.0), re(0.0)),
            Err(Error::ZeroOffDiagonal)
        );
        assert!(matches!(
            AntiTridiagSpec::new(Family::A, 2, re(1.0), re(3.0)),
            Err(Error::InvalidDimension { n: 2, min: 3, .. })
        ));
        assert!(matches!(
            AntiTridiagSpec::new(Family::B, 1, re(1.0), re(3.0)),
            Err(Error::InvalidDimension { n: 1, min: 2, .. })
        ));
        assert!(AntiTridiagSpec::new(Family::A, 3, re(1.0), re(3.0)).is_ok());
        assert!(AntiTridiagSpec::new(Family::B, 5, re(1.0), ComplexScalar::i()).is_ok());
        assert!(AntiTridiagSpec::new(Family::B, 2, re(1.0), ComplexScalar::new(0.0, -0.0)).is_err());
        assert_eq!(
            AntiTridiagSpec::new(Family::B, 3, re(f64::NAN), re(1.0)),
            Err(Error::NonFiniteParameter("a"))
        );
    }

    #[test]
    fn tilde_a_small_cases() {
        let s3 = AntiTridiagSpec::new(Family::A, 3, re(1.0), re(3.0)).unwrap();
        assert_eq!(
            s3.build_tilde(),
            real_matrix([[1.0, 6.0, 0.0], [3.0, 1.0, 3.0], [0.0, 6.0, 1.0]])
        );
        let s5 = AntiTridiagSpec::new(Family::A, 5, re(1.0), re(3.0)).unwrap();
        assert_eq!(
            s5.build_tilde(),
            real_matrix([
                [1.0, 6.0, 0.0, 0.0, 0.0],
                [3.0, 1.0, -3.0, 0.0, 0.0],
                [0.0, -3.0, 1.0, -3.0, 0.0],
                [0.0, 0.0, -3.0, 1.0, 3.0],
                [0.0, 0.0, 0.0, 6.0, 1.0],
            ])
        );
    }

    #[test]
    fn tilde_b_two_by_two() {
        let s = AntiTridiagSpec::new(Family::B, 2, re(1.0), ComplexScalar::i()).unwrap();
        let t = s.build_tilde();
        assert_eq!(t.get(1, 1), ComplexScalar::new(1.0, 1.0));
        assert_eq!(t.get(1, 2), ComplexScalar::i());
        assert_eq!(t.get(2, 1), ComplexScalar::i());
        assert_eq!(t.get(2, 2), ComplexScalar::new(1.0, 1.0));
    }

    #[test]
    fn anti_builders_match_displays() {
        let s3 = AntiTridiagSpec::new(Family::A, 3, re(1.0), re(3.0)).unwrap();
        assert_eq!(
            s3.build_anti(),
            real_matrix([[0.0, 6.0, 1.0], [3.0, 1.0, 3.0], [1.0, 6.0, 0.0]])
        );
        let b2 = AntiTridiagSpec::new(Family::B, 2, re(1.0), re(1.0)).unwrap();
        assert_eq!(b2.build_anti(), real_matrix([[1.0, 2.0], [2.0, 1.0]]));

        let s5 = AntiTridiagSpec::new(Family::A, 5, re(1.0), re(3.0)).unwrap();
        let a5 = s5.build_anti();
        assert_eq!(a5.row(1), &[re(0.0), re(0.0), re(0.0), re(6.0), re(1.0)]);
        assert_eq!(a5.row(2), &[re(0.0), re(0.0), re(-3.0), re(1.0), re(3.0)]);
        assert_eq!(a5.row(5), &[re(1.0), re(6.0), re(0.0), re(0.0), re(0.0)]);
    }

    #[test]
    fn interior_uses_minus_b_for_family_a() {
        for n in 4..9 {
            let s = AntiTridiagSpec::new(Family::A, n, re(0.5), ComplexScalar::new(1.0, -2.0)).unwrap();
            let t = s.build_tilde();
            assert_eq!(t.get(2, 3), -s.b());
            assert_eq!(t.get(2, 1), s.b());
        }
    }

    #[test]
    fn exchange_matrix_shapes() {
        assert_eq!(exchange_matrix(1).unwrap(), real_matrix([[1.0]]));
        assert_eq!(exchange_matrix(2).unwrap(), real_matrix([[0.0, 1.0], [1.0, 0.0]]));
        assert_eq!(
            exchange_matrix(3).unwrap(),
            real_matrix([[0.0, 0.0, 1.0], [0.0, 1.0, 0.0], [1.0, 0.0, 0.0]])
        );
        assert!(exchange_matrix(0).is_err());
        assert!(is_centrosymmetric(&exchange_matrix(4).unwrap(), 0.0));
    }

    #[test]
    fn tilde_is_centrosymmetric() {
        let s = AntiTridiagSpec::new(Family::A, 5, re(1.0), re(3.0)).unwrap();
        assert!(is_centrosymmetric(&s.build_tilde(), 0.0));
        let s = AntiTridiagSpec::new(Family::B, 6, ComplexScalar::new(0.3, -0.7), ComplexScalar::new(1.0, -1.0))
            .unwrap();
        assert!(is_centrosymmetric(&s.build_tilde(), 0.0));
    }
}
