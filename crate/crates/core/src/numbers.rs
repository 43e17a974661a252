//! Fibonacci polynomials, Fibonacci and Pell numbers, and the determinant
//! identities and complex product factorizations obtained from the
//! eigenvalues of `A_n(x, i)` and `B_n(1 or 2, i)`.
//!
//! With `b = i`:
//!
//! * `det Ã_n(x, i) = (x² + 4) F_{n-1}(x)`, and `det A_n = det J_n · det Ã_n`.
//! * `F_{n-1}(x) = ∏_{k=1..n} (x + 2i cos((k-1)π/(n-1))) / (x² + 4)`.
//! * `det B̃_n(1, i) = (1 + 2i) F_n`, `det B̃_n(2, i) = (2 + 2i) P_n`.
//! * `F_n = ∏_{k=2..n} (1 + 2i cos((k-1)π/n))`, `P_n = ∏_{k=2..n} (2 + 2i cos((k-1)π/n))`.

use std::fmt;

use crate::chebyshev::{cheb_at_rational_angle, DoubledDegree};
use crate::error::{Error, Result};
use crate::family::{AntiTridiagSpec, Family};
use crate::matrix::ComplexScalar;
use crate::oracle::{lu_det, tridiag_det};

/// Largest Fibonacci index evaluated exactly.
pub const FIB_CAP: u32 = 180;
/// Largest Pell index evaluated exactly.
pub const PELL_CAP: u32 = 95;

pub const FIB_PRODUCT_TOL: f64 = 1e-9;
pub const PELL_PRODUCT_TOL: f64 = 1e-8;
pub const DET_IDENTITY_TOL: f64 = 1e-8;
pub const LAPLACE_TOL: f64 = 1e-9;

/// Distance from `±2i` inside which the Fibonacci-polynomial quotient is refused.
pub const POLE_GUARD: f64 = 1e-12;

fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

/// `F_m(x)` by the forward recurrence `F_m = x F_{m-1} + F_{m-2}`, `F_0 = 0`, `F_1 = 1`.
pub fn fib_poly(m: u32, x: ComplexScalar) -> ComplexScalar {
    let (mut prev, mut cur) = (c(0.0, 0.0), c(1.0, 0.0));
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = x * cur + prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn exact_sequence(m: u32, step: i128, sequence: &'static str, cap: u32) -> Result<i128> {
    if m > cap {
        return Err(Error::OverflowExactInteger { sequence, index: m, cap });
    }
    let (mut prev, mut cur) = (0i128, 1i128);
    if m == 0 {
        return Ok(0);
    }
    for index in 1..m {
        let next = step
            .checked_mul(cur)
            .and_then(|v| v.checked_add(prev))
            .ok_or(Error::OverflowExactInteger { sequence, index, cap })?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Exact Fibonacci number `F_m`, `m <= FIB_CAP`.
pub fn fib_int(m: u32) -> Result<i128> {
    exact_sequence(m, 1, "fibonacci", FIB_CAP)
}

/// Exact Pell number `P_m`, `m <= PELL_CAP`.
pub fn pell_int(m: u32) -> Result<i128> {
    exact_sequence(m, 2, "pell", PELL_CAP)
}

/// `det J_n`: `+1` when `n ≡ 0, 1 (mod 4)`, else `-1`. Equals `(-1)^⌊n/2⌋`.
pub fn sign_j(n: usize) -> i32 {
    if matches!(n % 4, 0 | 1) {
        1
    } else {
        -1
    }
}

fn require_min(n: usize, min: usize, context: &'static str) -> Result<()> {
    if n < min {
        Err(Error::InvalidDimension { n, min, context })
    } else {
        Ok(())
    }
}

/// `det A_n(x, i) = sign(J_n) (x² + 4) F_{n-1}(x)`.
pub fn det_identity_a(n: usize, x: ComplexScalar) -> Result<ComplexScalar> {
    require_min(n, 3, "determinant identity of family A")?;
    Ok((x * x + 4.0) * fib_poly((n - 1) as u32, x) * f64::from(sign_j(n)))
}

/// `∏_{k=1..n} (x + 2i cos((k-1)π/(n-1))) / (x² + 4)`, which equals `F_{n-1}(x)`.
pub fn fib_poly_product(n: usize, x: ComplexScalar) -> Result<ComplexScalar> {
    require_min(n, 3, "Fibonacci polynomial product")?;
    let two_i = c(0.0, 2.0);
    if (x - two_i).norm() <= POLE_GUARD || (x + two_i).norm() <= POLE_GUARD {
        return Err(Error::Domain(format!(
            "x = {x} is within {POLE_GUARD:e} of a root of x² + 4"
        )));
    }
    let den = (n - 1) as u64;
    let product = (0..n as u64).fold(c(1.0, 0.0), |acc, k| {
        acc * (x + two_i * cheb_at_rational_angle(DoubledDegree::integer(1), k, den))
    });
    Ok(product / (x * x + 4.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sequence {
    Fib,
    Pell,
}

impl Sequence {
    /// Diagonal parameter `a` that turns `det B̃_n(a, i)` into this sequence.
    pub fn diagonal(self) -> f64 {
        match self {
            Sequence::Fib => 1.0,
            Sequence::Pell => 2.0,
        }
    }

    pub fn exact(self, m: u32) -> Result<i128> {
        match self {
            Sequence::Fib => fib_int(m),
            Sequence::Pell => pell_int(m),
        }
    }
}

/// `det B_n(a, i) = sign(J_n) (a + 2i) S_n` with `a = 1` (Fibonacci) or `a = 2` (Pell).
pub fn det_identity_b(n: usize, variant: Sequence) -> Result<ComplexScalar> {
    require_min(n, 2, "determinant identity of family B")?;
    let exact = variant.exact(n as u32)? as f64;
    Ok(c(variant.diagonal(), 2.0) * exact * f64::from(sign_j(n)))
}

/// `∏_{k=2..n} (a + 2i cos((k-1)π/n))` accumulated in increasing `k`.
fn sequence_product(n: usize, diagonal: f64) -> ComplexScalar {
    let den = n as u64;
    (1..n as u64).fold(c(1.0, 0.0), |acc, k| {
        acc * c(diagonal, 2.0 * cheb_at_rational_angle(DoubledDegree::integer(1), k, den))
    })
}

/// Laplace expansion of `det B̃_n` along its first two and last two rows:
/// `(a+b)² D_{n-2} - 2b²(a+b) D_{n-3} + b⁴ D_{n-4}`, `D_m = det tridiag_m(b, a, b)`.
pub fn laplace_expansion_b(n: usize, a: ComplexScalar, b: ComplexScalar) -> Result<ComplexScalar> {
    require_min(n, 4, "Laplace expansion of family B")?;
    if b.re == 0.0 && b.im == 0.0 {
        return Err(Error::ZeroOffDiagonal);
    }
    let d = |m: usize| tridiag_det(m, b, a, b);
    let apb = a + b;
    let b2 = b * b;
    Ok(apb * apb * d(n - 2) - b2 * apb * 2.0 * d(n - 3) + b2 * b2 * d(n - 4))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `det A_n(x, i) = ±(x² + 4) F_{n-1}(x)`
    DetAFibPoly,
    /// `F_{n-1}(x)` as a product over the eigenvalues of `Ã_n(x, i)`
    FibPolyProduct,
    /// `det B_n(1, i) = ±(1 + 2i) F_n`
    DetBFib,
    /// `det B_n(2, i) = ±(2 + 2i) P_n`
    DetBPell,
    FibProduct,
    PellProduct,
    /// Laplace expansion of `det B̃_n`
    LaplaceB,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::DetAFibPoly => "detA",
            Identity::FibPolyProduct => "fibpoly",
            Identity::DetBFib => "detB-fib",
            Identity::DetBPell => "detB-pell",
            Identity::FibProduct => "fib",
            Identity::PellProduct => "pell",
            Identity::LaplaceB => "laplaceB",
        }
    }

    pub fn default_tolerance(self) -> f64 {
        match self {
            Identity::FibProduct => FIB_PRODUCT_TOL,
            Identity::PellProduct => PELL_PRODUCT_TOL,
            Identity::LaplaceB => LAPLACE_TOL,
            Identity::DetAFibPoly | Identity::FibPolyProduct | Identity::DetBFib | Identity::DetBPell => {
                DET_IDENTITY_TOL
            }
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The closed-form side of an identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExactValue {
    Integer(i128),
    Complex(ComplexScalar),
}

impl ExactValue {
    pub fn as_complex(self) -> ComplexScalar {
        match self {
            ExactValue::Integer(v) => c(v as f64, 0.0),
            ExactValue::Complex(z) => z,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FactorizationReport {
    pub identity: Identity,
    pub n: usize,
    pub x: Option<ComplexScalar>,
    pub exact_value: ExactValue,
    pub product_value: ComplexScalar,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl FactorizationReport {
    pub fn new(
        identity: Identity,
        n: usize,
        x: Option<ComplexScalar>,
        exact_value: ExactValue,
        product_value: ComplexScalar,
        tolerance: f64,
    ) -> Self {
        let exact = exact_value.as_complex();
        let abs_residual = (product_value - exact).norm();
        let scale = exact.norm();
        let rel_residual = if scale > 0.0 { abs_residual / scale } else { abs_residual };
        let mut report = Self {
            identity,
            n,
            x,
            exact_value,
            product_value,
            abs_residual,
            rel_residual,
            tolerance,
            passed: false,
        };
        report.passed = report.evaluate(tolerance);
        report
    }

    fn evaluate(&self, tolerance: f64) -> bool {
        let real_ok = match self.exact_value {
            ExactValue::Integer(v) => self.product_value.im.abs() <= tolerance * (v as f64).abs().max(1.0),
            ExactValue::Complex(_) => true,
        };
        self.rel_residual <= tolerance && real_ok
    }

    /// Re-judges the same residuals against another tolerance.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self.passed = self.evaluate(tolerance);
        self
    }
}

fn product_report(n: usize, variant: Sequence) -> Result<FactorizationReport> {
    require_min(n, 2, "Fibonacci/Pell product")?;
    let exact = variant.exact(n as u32)?;
    let identity = match variant {
        Sequence::Fib => Identity::FibProduct,
        Sequence::Pell => Identity::PellProduct,
    };
    Ok(FactorizationReport::new(
        identity,
        n,
        None,
        ExactValue::Integer(exact),
        sequence_product(n, variant.diagonal()),
        identity.default_tolerance(),
    ))
}

/// `∏_{k=2..n} (1 + 2i cos((k-1)π/n))` against the exact `F_n`.
pub fn fib_product(n: usize) -> Result<FactorizationReport> {
    product_report(n, Sequence::Fib)
}

/// `∏_{k=2..n} (2 + 2i cos((k-1)π/n))` against the exact `P_n`.
pub fn pell_product(n: usize) -> Result<FactorizationReport> {
    product_report(n, Sequence::Pell)
}

/// Closed form of `det A_n(x, i)` against the LU determinant.
pub fn det_a_report(n: usize, x: ComplexScalar) -> Result<FactorizationReport> {
    let exact = det_identity_a(n, x)?;
    let spec = AntiTridiagSpec::new(Family::A, n, x, c(0.0, 1.0))?;
    Ok(FactorizationReport::new(
        Identity::DetAFibPoly,
        n,
        Some(x),
        ExactValue::Complex(exact),
        lu_det(&spec.build_anti()),
        Identity::DetAFibPoly.default_tolerance(),
    ))
}

/// `F_{n-1}(x)` by recurrence against the eigenvalue product.
pub fn fib_poly_report(n: usize, x: ComplexScalar) -> Result<FactorizationReport> {
    let product = fib_poly_product(n, x)?;
    Ok(FactorizationReport::new(
        Identity::FibPolyProduct,
        n,
        Some(x),
        ExactValue::Complex(fib_poly((n - 1) as u32, x)),
        product,
        Identity::FibPolyProduct.default_tolerance(),
    ))
}

/// Closed form of `det B_n(a, i)` against the LU determinant.
pub fn det_b_report(n: usize, variant: Sequence) -> Result<FactorizationReport> {
    let exact = det_identity_b(n, variant)?;
    let spec = AntiTridiagSpec::new(Family::B, n, c(variant.diagonal(), 0.0), c(0.0, 1.0))?;
    let identity = match variant {
        Sequence::Fib => Identity::DetBFib,
        Sequence::Pell => Identity::DetBPell,
    };
    Ok(FactorizationReport::new(
        identity,
        n,
        None,
        ExactValue::Complex(exact),
        lu_det(&spec.build_anti()),
        identity.default_tolerance(),
    ))
}

/// LU determinant of `B̃_n(a, b)` against its Laplace expansion.
pub fn laplace_report(n: usize, a: ComplexScalar, b: ComplexScalar) -> Result<FactorizationReport> {
    let expansion = laplace_expansion_b(n, a, b)?;
    let spec = AntiTridiagSpec::new(Family::B, n, a, b)?;
    Ok(FactorizationReport::new(
        Identity::LaplaceB,
        n,
        Some(a),
        ExactValue::Complex(lu_det(&spec.build_tilde())),
        expansion,
        Identity::LaplaceB.default_tolerance(),
    ))
}
