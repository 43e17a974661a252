//! Chebyshev polynomials of the first kind, `T_s(cos θ) = cos(sθ)`, at integer
//! and half-integer degrees.
//!
//! Degrees are carried doubled so `(2j - 1)/2` is exact. Evaluation is
//! angle-first: the spectral nodes are always `cos θ` for a known `θ`, so going
//! through `arccos` would only add error.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Slack allowed past `|x| = 1` before [`cheb_at_node`] rejects its argument.
pub const NODE_SLACK: f64 = 1e-12;

/// A Chebyshev degree `s = twice_s / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubledDegree(u32);

impl DoubledDegree {
    pub const fn from_twice(twice_s: u32) -> Self {
        Self(twice_s)
    }

    /// Integer degree `s`.
    pub const fn integer(s: u32) -> Self {
        Self(2 * s)
    }

    /// Half-integer degree `(2j - 1)/2`, for `j >= 1`.
    pub const fn half_odd(j: u32) -> Self {
        assert!(j >= 1, "half-integer degree index starts at 1");
        Self(2 * j - 1)
    }

    pub const fn twice(self) -> u32 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }
}

/// `T_s(cos θ) = cos(sθ)` for `θ ∈ [0, π]`.
///
/// Exact at `θ = 0` for every degree and at `θ = π` for integer degrees.
pub fn cheb_at_angle(deg: DoubledDegree, theta: f64) -> f64 {
    if theta == 0.0 || deg.0 == 0 {
        return 1.0;
    }
    if theta == PI && deg.is_integer() {
        return if (deg.0 / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
    }
    (deg.value() * theta).cos()
}

/// `T_s(x)` for `x ∈ [-1, 1]`, via `θ = arccos x`.
pub fn cheb_at_node(deg: DoubledDegree, x: f64) -> Result<f64> {
    if x.is_nan() || x.abs() > 1.0 + NODE_SLACK {
        return Err(Error::Domain(format!(
            "Chebyshev node {x} lies outside [-1, 1]"
        )));
    }
    Ok(cheb_at_angle(deg, x.clamp(-1.0, 1.0).acos()))
}

/// `T_s(cos θ)` for the rational angle `θ = num·π/den`.
///
/// The phase `s·θ` is reduced with integer arithmetic before any trigonometry,
/// so the spectral engine gets exact zeros and signs at multiples of `π/2` and
/// no error growth in the degree.
pub fn cheb_at_rational_angle(deg: DoubledDegree, num: u64, den: u64) -> f64 {
    assert!(den > 0, "angle denominator must be positive");
    // s·θ = π · (twice·num) / (2·den); period 2π is 4·den in these units.
    let period = 4 * den;
    let mut p = (u64::from(deg.0) * num) % period;
    if p > 2 * den {
        p = period - p;
    }
    // p ∈ [0, 2den] now, angle ∈ [0, π].
    let (p, sign) = if p > den { (2 * den - p, -1.0) } else { (p, 1.0) };
    // p ∈ [0, den], angle ∈ [0, π/2].
    let half_pi_units = 2.0 * den as f64;
    let value = if 2 * p > den {
        (PI * (den - p) as f64 / half_pi_units).sin()
    } else {
        (PI * p as f64 / half_pi_units).cos()
    };
    sign * value
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn degree_zero_is_one() {
        for theta in [0.0, 0.3, 1.0, PI / 2.0, PI] {
            assert_eq!(cheb_at_angle(DoubledDegree::integer(0), theta), 1.0);
        }
    }

    #[test]
    fn half_degree_at_right_angle() {
        let v = cheb_at_angle(DoubledDegree::from_twice(1), PI / 2.0);
        assert!((v - FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn degree_two_at_third_pi() {
        let v = cheb_at_angle(DoubledDegree::integer(2), PI / 3.0);
        assert!((v + 0.5).abs() < 1e-15);
    }

    #[test]
    fn node_form_matches_polynomials() {
        for x in [-1.0, 0.0, 0.5, 1.0] {
            let v = cheb_at_node(DoubledDegree::integer(1), x).unwrap();
            assert!((v - x).abs() < 1e-12, "T_1({x}) = {v}");
        }
        let t3 = cheb_at_node(DoubledDegree::integer(3), 0.5).unwrap();
        assert!((t3 - (4.0 * 0.125 - 3.0 * 0.5)).abs() < 1e-12);
        assert!((t3 + 1.0).abs() < 1e-12);
    }

    #[test]
    fn node_outside_domain_rejected() {
        assert!(matches!(
            cheb_at_node(DoubledDegree::integer(2), 1.5),
            Err(Error::Domain(_))
        ));
        assert!(cheb_at_node(DoubledDegree::integer(2), f64::NAN).is_err());
        assert!(cheb_at_node(DoubledDegree::integer(2), 1.0 + 1e-13).is_ok());
    }

    #[test]
    fn endpoints_are_exact() {
        for s in 0..60 {
            let d = DoubledDegree::integer(s);
            assert_eq!(cheb_at_angle(d, 0.0), 1.0);
            let expected = if s % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(cheb_at_angle(d, PI), expected);
            assert_eq!(cheb_at_rational_angle(d, 1, 1), expected);
            assert_eq!(cheb_at_rational_angle(d, 0, 7), 1.0);
        }
    }

    #[test]
    fn rational_matches_direct_cosine() {
        for den in 1..25u64 {
            for num in 0..=den {
                for twice in 0..80u32 {
                    let d = DoubledDegree::from_twice(twice);
                    let theta = num as f64 * PI / den as f64;
                    let direct = (d.value() * theta).cos();
                    let reduced = cheb_at_rational_angle(d, num, den);
                    assert!(
                        (direct - reduced).abs() < 1e-12,
                        "twice={twice} num={num} den={den}: {direct} vs {reduced}"
                    );
                }
            }
        }
    }

    #[test]
    fn rational_gives_exact_zero_at_right_angle() {
        // T_1(cos π/2) and T_3(cos π/2)
        assert_eq!(cheb_at_rational_angle(DoubledDegree::integer(1), 1, 2), 0.0);
        assert_eq!(cheb_at_rational_angle(DoubledDegree::integer(3), 1, 2), 0.0);
    }

    #[test]
    #[should_panic]
    fn half_odd_index_starts_at_one() {
        let _ = DoubledDegree::half_odd(0);
    }
}
