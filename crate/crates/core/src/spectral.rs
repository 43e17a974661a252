//! Eigen-structure of `Ã_n` / `B̃_n` and the closed-form `r`-th power engine
//! for the anti-tridiagonal matrices `A_n`, `B_n`.
//!
//! Both tridiagonal companions are diagonalized by Chebyshev vectors:
//!
//! * Family A: `λ_k = a + 2b cos θ_k`, `θ_k = kπ/(n-1)`, `k = 0..n-1`, with
//!   eigenvector components `σ_i T_{i-1}(cos θ_k)`. The resulting entry formula
//!   is
//!
//!   `u_ij(r) = σ_i σ_j c_j / (n-1) · [ λ_ext^r T T + λ_ext'^r T T + 2 Σ_interior λ_k^r T T ]`
//!
//!   where `c_j = 1/2` for `j ∈ {1, n}` (else 1) and the sign pattern is
//!   `σ_1 = 1`, `σ_i = (-1)^i` for `2 <= i <= n-1`, `σ_n = (-1)^(n-1)`.
//!   The sign pattern comes from the `-b` interior bands and is what turns the
//!   alternating interior into the plain Chebyshev recurrence.
//!
//! * Family B: `λ_k = a + 2b cos θ_k`, `θ_k = kπ/n`, and
//!   `ṽ_ij(r) = Σ_k f_k λ_k^r T_{(2i-1)/2}(cos θ_k) T_{(2j-1)/2}(cos θ_k)` with
//!   `f = 1/n` at `θ = 0` and `2/n` elsewhere.
//!
//! Since `J_n` commutes with the companion and squares to the identity,
//! `A^r = Ã^r` for even `r` and `A^r = J Ã^r` for odd `r`.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::chebyshev::{cheb_at_rational_angle, DoubledDegree};
use crate::error::{Error, Result};
use crate::family::{AntiTridiagSpec, Family};
use crate::matrix::{flip_rows, ComplexScalar, DenseMatrix};

/// Negative powers are refused when `min |λ| <= SINGULARITY_THRESHOLD · max |λ|`.
pub const SINGULARITY_THRESHOLD: f64 = 1e-10;

/// Default relative tolerance for closed form against the oracle.
pub const DEFAULT_ORACLE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    spec: AntiTridiagSpec,
    /// Angles are `k·π / angle_den` for `k = 0..n-1`.
    angle_den: usize,
    angles: Vec<f64>,
    eigenvalues: Vec<ComplexScalar>,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    summation_order: Vec<usize>,
}

impl SpectralData {
    pub fn new(spec: &AntiTridiagSpec) -> Self {
        let n = spec.n();
        let angle_den = match spec.family() {
            Family::A => n - 1,
            Family::B => n,
        };
        let angles: Vec<f64> = (0..n).map(|k| k as f64 * PI / angle_den as f64).collect();
        // cos θ_k through the exact phase reduction; T_1(cos θ) = cos θ.
        let nodes: Vec<f64> = (0..n)
            .map(|k| cheb_at_rational_angle(DoubledDegree::integer(1), k as u64, angle_den as u64))
            .collect();
        let eigenvalues = nodes
            .iter()
            .map(|&m| spec.a() + spec.b() * (2.0 * m))
            .collect();

        let weights = match spec.family() {
            Family::A => {
                let d = (n - 1) as f64;
                (0..n)
                    .map(|k| if k == 0 || k == n - 1 { 1.0 / d } else { 2.0 / d })
                    .collect()
            }
            Family::B => (0..n)
                .map(|k| if k == 0 { 1.0 / n as f64 } else { 2.0 / n as f64 })
                .collect(),
        };

        let summation_order = match spec.family() {
            // Formula slot 2 holds angle 0 (a+2b), slot 3 holds angle π (a-2b);
            // slot 1 and slots 4.. take the interior angles in increasing order.
            Family::A => {
                let mut interior = 1..n - 1;
                let mut order = Vec::with_capacity(n);
                order.push(interior.next().expect("n >= 3 leaves an interior angle"));
                order.push(0);
                order.push(n - 1);
                order.extend(interior);
                order
            }
            Family::B => (0..n).collect(),
        };

        Self {
            spec: *spec,
            angle_den,
            angles,
            eigenvalues,
            nodes,
            weights,
            summation_order,
        }
    }

    pub fn spec(&self) -> &AntiTridiagSpec {
        &self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family()
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    /// Increasing angles `θ_k ∈ [0, π]`.
    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    /// Eigenvalues of the tridiagonal companion, in increasing-angle order.
    pub fn eigenvalues(&self) -> &[ComplexScalar] {
        &self.eigenvalues
    }

    /// Chebyshev nodes `m_k = (λ_k - a)/(2b) = cos θ_k`.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Quadrature weight attached to each angle.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `summation_order()[slot]` is the angle index used for formula index `slot + 1`.
    pub fn summation_order(&self) -> &[usize] {
        &self.summation_order
    }

    /// Eigenvalues listed by formula index (`λ_1, λ_2, …`).
    pub fn eigenvalues_in_summation_order(&self) -> Vec<ComplexScalar> {
        self.summation_order.iter().map(|&k| self.eigenvalues[k]).collect()
    }

    fn min_max_modulus(&self) -> (f64, f64) {
        self.eigenvalues
            .iter()
            .map(|z| z.norm())
            .fold((f64::INFINITY, 0.0), |(lo, hi), m| (lo.min(m), hi.max(m)))
    }

    pub fn is_singular(&self) -> bool {
        let (lo, hi) = self.min_max_modulus();
        lo <= SINGULARITY_THRESHOLD * hi
    }

    /// `λ_k^r` for every angle; negative `r` requires a nonsingular spectrum.
    pub fn eigenvalue_powers(&self, r: i64) -> Result<Vec<ComplexScalar>> {
        if r < 0 && self.is_singular() {
            let (min_abs, max_abs) = self.min_max_modulus();
            return Err(Error::SingularSpectrum {
                family: self.family(),
                n: self.n(),
                min_abs,
                max_abs,
            });
        }
        Ok(self.eigenvalues.iter().map(|&z| scalar_pow(z, r)).collect())
    }

    /// Eigenvector profile value at row `i` (1-based) and angle index `k`:
    /// `T_{i-1}(m_k)` for Family A, `T_{(2i-1)/2}(m_k)` for Family B.
    fn profile(&self, i: usize, k: usize) -> f64 {
        let deg = match self.family() {
            Family::A => DoubledDegree::integer((i - 1) as u32),
            Family::B => DoubledDegree::half_odd(i as u32),
        };
        cheb_at_rational_angle(deg, k as u64, self.angle_den as u64)
    }

    /// Family-A sign `σ_i`; always `+1` for Family B.
    fn row_sign(&self, i: usize) -> f64 {
        let n = self.n();
        match self.family() {
            Family::B => 1.0,
            Family::A => {
                let exponent = if i == 1 {
                    0
                } else if i == n {
                    n - 1
                } else {
                    i
                };
                if exponent % 2 == 0 {
                    1.0
                } else {
                    -1.0
                }
            }
        }
    }

    /// Family-A column factor `c_j` (1/2 on the two boundary columns).
    fn column_factor(&self, j: usize) -> f64 {
        match self.family() {
            Family::A if j == 1 || j == self.n() => 0.5,
            _ => 1.0,
        }
    }

    fn check_index(&self, i: usize, j: usize) -> Result<()> {
        let n = self.n();
        if (1..=n).contains(&i) && (1..=n).contains(&j) {
            Ok(())
        } else {
            Err(Error::Domain(format!("entry ({i}, {j}) outside 1..={n}")))
        }
    }

    /// Entry `(i, j)` of the companion power `Ã_n^r` / `B̃_n^r` by the spectral sum.
    pub fn tilde_power_entry(&self, i: usize, j: usize, r: i64) -> Result<ComplexScalar> {
        self.check_index(i, j)?;
        let powers = self.eigenvalue_powers(r)?;
        Ok(self.entry_from_powers(&powers, i, j))
    }

    fn entry_from_powers(&self, powers: &[ComplexScalar], i: usize, j: usize) -> ComplexScalar {
        let sum = self
            .summation_order
            .iter()
            .fold(ComplexScalar::new(0.0, 0.0), |acc, &k| {
                acc + powers[k] * (self.weights[k] * self.profile(i, k) * self.profile(j, k))
            });
        sum * (self.row_sign(i) * self.row_sign(j) * self.column_factor(j))
    }

    /// Assembles the whole companion power. Rows are independent and built in
    /// parallel; each entry sums in formula order, so output is deterministic.
    pub fn tilde_power(&self, r: i64) -> Result<DenseMatrix> {
        let n = self.n();
        let powers = self.eigenvalue_powers(r)?;

        // profiles[i * n + k] = σ_i · profile(i + 1, k)
        let mut profiles = vec![0.0; n * n];
        for i in 0..n {
            let sign = self.row_sign(i + 1);
            for k in 0..n {
                profiles[i * n + k] = sign * self.profile(i + 1, k);
            }
        }
        let weighted: Vec<(usize, ComplexScalar)> = self
            .summation_order
            .iter()
            .map(|&k| (k, powers[k] * self.weights[k]))
            .collect();
        let col_factors: Vec<f64> = (1..=n).map(|j| self.column_factor(j)).collect();

        let mut entries = vec![ComplexScalar::new(0.0, 0.0); n * n];
        entries.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
            let pi = &profiles[i * n..(i + 1) * n];
            for (j, out) in row.iter_mut().enumerate() {
                let pj = &profiles[j * n..(j + 1) * n];
                let sum = weighted
                    .iter()
                    .fold(ComplexScalar::new(0.0, 0.0), |acc, &(k, w)| acc + w * (pi[k] * pj[k]));
                *out = sum * col_factors[j];
            }
        });

        let u = DenseMatrix::from_row_major(n, entries)?;
        if !u.is_finite() {
            return Err(Error::NonFinite(format!(
                "family {} n = {n} r = {r}",
                self.family()
            )));
        }
        Ok(u)
    }

    /// Eigenvalues of the anti-tridiagonal matrix, increasing-angle order.
    ///
    /// `J` acts on the k-th companion eigenvector as `(-1)^(k-1)` for Family B
    /// and `(-1)^(n+k)` for Family A (1-based `k`).
    pub fn eigenvalues_anti(&self) -> Vec<ComplexScalar> {
        let n = self.n();
        self.eigenvalues
            .iter()
            .enumerate()
            .map(|(idx, &lambda)| {
                let k = idx + 1;
                let exponent = match self.family() {
                    Family::A => n + k,
                    Family::B => k - 1,
                };
                if exponent % 2 == 0 {
                    lambda
                } else {
                    -lambda
                }
            })
            .collect()
    }
}

/// Spectral data for a spec; shorthand for [`SpectralData::new`].
pub fn spectrum(spec: &AntiTridiagSpec) -> SpectralData {
    SpectralData::new(spec)
}

/// `z^r` by binary exponentiation; negative `r` powers the reciprocal.
pub fn scalar_pow(z: ComplexScalar, r: i64) -> ComplexScalar {
    let mut base = if r < 0 { z.inv() } else { z };
    let mut e = r.unsigned_abs();
    let mut acc = ComplexScalar::new(1.0, 0.0);
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        e >>= 1;
        if e > 0 {
            base *= base;
        }
    }
    acc
}

/// `Ã_n^r` or `B̃_n^r` from the spectral sums, without the parity flip.
pub fn closed_power_tilde(spec: &AntiTridiagSpec, r: i64) -> Result<DenseMatrix> {
    SpectralData::new(spec).tilde_power(r)
}

/// `A_n^r` or `B_n^r`: the companion power, row-reversed when `r` is odd.
pub fn closed_power(spec: &AntiTridiagSpec, r: i64) -> Result<DenseMatrix> {
    let u = closed_power_tilde(spec, r)?;
    Ok(if r.rem_euclid(2) == 1 { flip_rows(&u) } else { u })
}

pub fn eigenvalues_anti(spec: &AntiTridiagSpec) -> Vec<ComplexScalar> {
    SpectralData::new(spec).eigenvalues_anti()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::is_centrosymmetric;
    use crate::oracle::{lu_det, mat_mul, mat_power, mat_power_signed};

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    fn spec(family: Family, n: usize, a: ComplexScalar, b: ComplexScalar) -> AntiTridiagSpec {
        AntiTridiagSpec::new(family, n, a, b).unwrap()
    }

    fn close(x: ComplexScalar, y: ComplexScalar, tol: f64) -> bool {
        (x - y).norm() <= tol
    }

    #[test]
    fn example_one_spectrum_in_formula_order() {
        let sd = spectrum(&spec(Family::A, 3, c(1.0, 0.0), c(3.0, 0.0)));
        let got = sd.eigenvalues_in_summation_order();
        for (g, e) in got.iter().zip([1.0, 7.0, -5.0]) {
            assert!(close(*g, c(e, 0.0), 1e-14), "{got:?}");
        }
        assert_eq!(sd.summation_order(), &[1, 0, 2]);
    }

    #[test]
    fn example_two_spectrum_multiset() {
        let sd = spectrum(&spec(Family::A, 5, c(1.0, 0.0), c(3.0, 0.0)));
        let r2 = 3.0 * 2f64.sqrt();
        let mut expected = vec![1.0, 7.0, -5.0, 1.0 + r2, 1.0 - r2];
        let mut got: Vec<f64> = sd.eigenvalues().iter().map(|z| z.re).collect();
        expected.sort_by(f64::total_cmp);
        got.sort_by(f64::total_cmp);
        for (g, e) in got.iter().zip(&expected) {
            assert!((g - e).abs() < 1e-13);
        }
        let slots = sd.eigenvalues_in_summation_order();
        assert!(close(slots[1], c(7.0, 0.0), 1e-14));
        assert!(close(slots[2], c(-5.0, 0.0), 1e-14));
    }

    #[test]
    fn family_b_two_by_two_spectrum() {
        let sd = spectrum(&spec(Family::B, 2, c(1.0, 0.0), c(0.0, 1.0)));
        assert!(close(sd.eigenvalues()[0], c(1.0, 2.0), 1e-15));
        assert!(close(sd.eigenvalues()[1], c(1.0, 0.0), 1e-15));
        assert_eq!(sd.weights(), &[0.5, 1.0]);
        assert_eq!(sd.angles(), &[0.0, PI / 2.0]);
    }

    #[test]
    fn spectral_invariants() {
        for n in 2..12 {
            let sd = spectrum(&spec(Family::B, n, c(0.3, -0.7), c(1.0, -1.0)));
            let total: f64 = sd.weights().iter().sum();
            assert!((total - (2 * n - 1) as f64 / n as f64).abs() < 1e-14);
            assert!(sd.angles().windows(2).all(|w| w[0] < w[1]));
            assert!(sd.nodes().iter().all(|m| m.abs() <= 1.0));
        }
        for n in 3..12 {
            let sd = spectrum(&spec(Family::A, n, c(2.0, 0.0), c(0.0, 1.0)));
            let mut order = sd.summation_order().to_vec();
            assert_eq!((order[1], order[2]), (0, n - 1));
            order.sort_unstable();
            assert_eq!(order, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn entries_from_example_one() {
        let sd = spectrum(&spec(Family::A, 3, c(1.0, 0.0), c(3.0, 0.0)));
        assert!(close(sd.tilde_power_entry(1, 1, 3).unwrap(), c(55.0, 0.0), 1e-11));
        assert!(close(sd.tilde_power_entry(2, 2, 3).unwrap(), c(109.0, 0.0), 1e-11));
        assert!(close(sd.tilde_power_entry(3, 1, 3).unwrap(), c(54.0, 0.0), 1e-11));
        assert!(sd.tilde_power_entry(0, 1, 1).is_err());
        assert!(sd.tilde_power_entry(1, 4, 1).is_err());
    }

    #[test]
    fn family_b_entry_is_b_at_first_power() {
        let sd = spectrum(&spec(Family::B, 2, c(1.0, 0.0), c(1.0, 0.0)));
        assert!(close(sd.tilde_power_entry(1, 2, 1).unwrap(), c(1.0, 0.0), 1e-15));
    }

    #[test]
    fn example_one_closed_power() {
        let s = spec(Family::A, 3, c(1.0, 0.0), c(3.0, 0.0));
        let expected = DenseMatrix::from_real_rows(&[
            [54.0, 234.0, 55.0],
            [117.0, 109.0, 117.0],
            [55.0, 234.0, 54.0],
        ])
        .unwrap();
        assert!(closed_power(&s, 3).unwrap().max_abs_diff(&expected).unwrap() <= 1e-9);
    }

    #[test]
    fn zero_power_is_identity() {
        for (family, n) in [(Family::A, 3), (Family::A, 8), (Family::B, 2), (Family::B, 7)] {
            let s = spec(family, n, c(0.3, -0.7), c(0.0, 1.0));
            let p = closed_power(&s, 0).unwrap();
            assert!(p.max_abs_diff(&DenseMatrix::identity(n)).unwrap() < 1e-13);
        }
    }

    #[test]
    fn example_two_is_unflipped_at_even_power() {
        let s = spec(Family::A, 5, c(1.0, 0.0), c(3.0, 0.0));
        let oracle = mat_power(&s.build_anti(), 4);
        assert_eq!(oracle.get(1, 1), c(595.0, 0.0));
        let closed = closed_power(&s, 4).unwrap();
        assert!(closed.max_abs_diff(&oracle).unwrap() <= 1e-9);
        assert!(close(closed.get(1, 3), c(-756.0, 0.0), 1e-9));
    }

    #[test]
    fn oracle_equivalence_small_grid() {
        let pool_a = [c(1.0, 0.0), c(0.0, -1.0), c(1.0, 1.0), c(0.3, -0.7), c(2.0, 0.0)];
        let pool_b = [c(1.0, 0.0), c(3.0, 0.0), c(0.0, 1.0), c(1.0, -1.0)];
        for family in [Family::A, Family::B] {
            for n in family.min_dimension()..=9 {
                for &a in &pool_a {
                    for &b in &pool_b {
                        let s = spec(family, n, a, b);
                        for r in 0..=5 {
                            let oracle = mat_power(&s.build_anti(), r as u64);
                            let closed = closed_power(&s, r).unwrap();
                            let dev = closed.rel_deviation(&oracle).unwrap();
                            assert!(dev <= 1e-8, "{s:?} r={r} dev={dev}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn negative_powers_match_oracle_inverse() {
        let s = spec(Family::A, 6, c(1.0, 1.0), c(0.0, 1.0));
        for r in [-1, -2, -3] {
            let closed = closed_power(&s, r).unwrap();
            let oracle = mat_power_signed(&s.build_anti(), r).unwrap();
            assert!(closed.rel_deviation(&oracle).unwrap() < 1e-10);
        }
        let s = spec(Family::B, 5, c(2.0, 0.0), c(0.0, 1.0));
        let inv = closed_power(&s, -1).unwrap();
        let prod = mat_mul(&inv, &s.build_anti()).unwrap();
        assert!(prod.max_abs_diff(&DenseMatrix::identity(5)).unwrap() < 1e-12);
    }

    #[test]
    fn singular_spectrum_refuses_negative_powers() {
        // a = 0, b = 1, n = 3: eigenvalue 2 cos(π/2) = 0.
        let s = spec(Family::A, 3, c(0.0, 0.0), c(1.0, 0.0));
        assert!(matches!(closed_power(&s, -1), Err(Error::SingularSpectrum { .. })));
        assert!(closed_power(&s, 2).is_ok());
        // Family B angles stop short of π, so 2 + 2cos θ stays away from 0.
        let s = spec(Family::B, 4, c(2.0, 0.0), c(1.0, 0.0));
        assert!(closed_power(&s, -1).is_ok());
    }

    #[test]
    fn overflow_reported_as_non_finite() {
        let s = spec(Family::B, 3, c(10.0, 0.0), c(5.0, 0.0));
        assert!(matches!(closed_power(&s, 1000), Err(Error::NonFinite(_))));
    }

    #[test]
    fn odd_power_is_flipped_companion() {
        let s = spec(Family::A, 7, c(0.3, -0.7), c(1.0, -1.0));
        for r in [1, 3, 5, -1] {
            assert_eq!(
                closed_power(&s, r).unwrap(),
                flip_rows(&closed_power_tilde(&s, r).unwrap())
            );
        }
        assert_eq!(closed_power(&s, 4).unwrap(), closed_power_tilde(&s, 4).unwrap());
    }

    #[test]
    fn companion_power_is_centrosymmetric() {
        let s = spec(Family::A, 9, c(1.0, 1.0), c(3.0, 0.0));
        let u = closed_power_tilde(&s, 5).unwrap();
        assert!(is_centrosymmetric(&u, 1e-9 * u.max_abs()));
    }

    #[test]
    fn anti_eigenvalues_small_cases() {
        let got = eigenvalues_anti(&spec(Family::A, 3, c(1.0, 0.0), c(3.0, 0.0)));
        for (g, e) in got.iter().zip([7.0, -1.0, -5.0]) {
            assert!(close(*g, c(e, 0.0), 1e-14), "{got:?}");
        }
        let got = eigenvalues_anti(&spec(Family::B, 2, c(1.0, 0.0), c(0.0, 1.0)));
        assert!(close(got[0], c(1.0, 2.0), 1e-15));
        assert!(close(got[1], c(-1.0, 0.0), 1e-15));
        for n in 2..10 {
            let s = spec(Family::B, n, c(0.3, 0.1), c(2.0, -1.0));
            assert_eq!(eigenvalues_anti(&s)[0], s.a() + s.b() * 2.0);
        }
    }

    #[test]
    fn anti_eigenvalues_are_roots_for_even_and_odd_n() {
        for family in [Family::A, Family::B] {
            for n in family.min_dimension()..=10 {
                let s = spec(family, n, c(1.0, 0.5), c(0.7, -0.2));
                let anti = s.build_anti();
                let scale = (2.0 * (s.a().norm() + 2.0 * s.b().norm())).powi(n as i32);
                let mut product = c(1.0, 0.0);
                for mu in eigenvalues_anti(&s) {
                    let residual = lu_det(&anti.shift_diagonal(mu)).norm();
                    assert!(residual <= 1e-6 * scale, "{family:?} n={n} mu={mu}");
                    product *= mu;
                }
                let det = lu_det(&anti);
                assert!((product - det).norm() <= 1e-7 * det.norm(), "{family:?} n={n}");
            }
        }
    }

    #[test]
    fn scalar_power_cases() {
        assert_eq!(scalar_pow(c(0.0, 1.0), 4), c(1.0, 0.0));
        assert_eq!(scalar_pow(c(2.0, 0.0), -3), c(0.125, 0.0));
        assert_eq!(scalar_pow(c(3.0, 4.0), 0), c(1.0, 0.0));
        assert!(close(scalar_pow(c(1.0, 1.0), 3), c(-2.0, 2.0), 1e-15));
    }
}
