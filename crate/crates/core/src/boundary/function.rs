use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::{CircleShift, FourierMultiplier};
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Which component of the complement of the unit circle a point lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Interior,
    Exterior,
}

/// Element of `E = L²(T)`: Fourier coefficients for modes `−N..=N`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryFunction {
    order: usize,
    coeffs: Vec<Complex64>,
}

fn forward_dft(data: &mut [Complex64]) {
    let fft = FftPlanner::new().plan_fft_forward(data.len());
    fft.process(data);
}

fn inverse_dft(data: &mut [Complex64]) {
    let fft = FftPlanner::new().plan_fft_inverse(data.len());
    fft.process(data);
}

impl BoundaryFunction {
    /// Builds a function from a coefficient vector ordered by ascending mode.
    pub fn new(order: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument(
                "truncation order must be positive".into(),
            ));
        }
        if coeffs.len() != 2 * order + 1 {
            return Err(Error::InvalidGrid {
                expected: 2 * order + 1,
                got: coeffs.len(),
            });
        }
        if coeffs
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::InvalidArgument("non-finite coefficient".into()));
        }
        Ok(Self { order, coeffs })
    }

    pub(crate) fn from_coeffs_unchecked(order: usize, coeffs: Vec<Complex64>) -> Self {
        debug_assert_eq!(coeffs.len(), 2 * order + 1);
        Self { order, coeffs }
    }

    pub fn zeros(order: usize) -> Self {
        Self::from_coeffs_unchecked(order, vec![ZERO; 2 * order + 1])
    }

    pub fn constant(order: usize, value: Complex64) -> Self {
        let mut out = Self::zeros(order);
        out.coeffs[order] = value;
        out
    }

    /// `value·e^{inθ}`.
    pub fn mode(order: usize, n: i64, value: Complex64) -> Result<Self> {
        Self::from_modes(order, &[(n, value)])
    }

    /// Builds a function from a sparse list of `(n, φ̂(n))`; repeated modes add up.
    pub fn from_modes(order: usize, modes: &[(i64, Complex64)]) -> Result<Self> {
        let mut out = Self::zeros(order);
        for &(n, value) in modes {
            *out.coeff_mut(n)? += value;
        }
        Ok(out)
    }

    /// Trigonometric interpolant of `f` on the grid of order `order`.
    pub fn from_fn<F: Fn(f64) -> Complex64>(order: usize, f: F) -> Self {
        let samples: Vec<Complex64> = super::angular_grid(order).into_iter().map(f).collect();
        Self::analyze(&samples).expect("grid length is odd by construction")
    }

    /// Real-valued convenience variant of [`Self::from_fn`].
    pub fn from_real_fn<F: Fn(f64) -> f64>(order: usize, f: F) -> Self {
        Self::from_fn(order, |t| Complex64::new(f(t), 0.0))
    }

    /// Fourier analysis of samples on the uniform odd grid `θ_j = 2πj/(2N+1)`.
    pub fn analyze(samples: &[Complex64]) -> Result<Self> {
        let len = samples.len();
        if len < 3 || len.is_multiple_of(2) {
            return Err(Error::InvalidGrid {
                expected: 2 * (len / 2).max(1) + 1,
                got: len,
            });
        }
        let order = len / 2;
        let mut buf = samples.to_vec();
        forward_dft(&mut buf);
        let scale = 1.0 / len as f64;
        let coeffs = (-(order as i64)..=order as i64)
            .map(|n| buf[n.rem_euclid(len as i64) as usize] * scale)
            .collect();
        Self::new(order, coeffs)
    }

    /// Samples on the uniform grid; inverse of [`Self::analyze`].
    pub fn synthesize(&self) -> Vec<Complex64> {
        let len = self.coeffs.len();
        let mut buf = vec![ZERO; len];
        for (n, c) in self.modes() {
            buf[n.rem_euclid(len as i64) as usize] = c;
        }
        inverse_dft(&mut buf);
        buf
    }

    /// Evaluates the Fourier series at an arbitrary angle.
    pub fn eval(&self, theta: f64) -> Complex64 {
        self.modes()
            .map(|(n, c)| c * Complex64::from_polar(1.0, n as f64 * theta))
            .sum()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Iterator over `(n, φ̂(n))` in ascending `n`.
    pub fn modes(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let order = self.order as i64;
        (-order..=order).zip(self.coeffs.iter().copied())
    }

    /// `φ̂(n)`, zero outside the truncation.
    pub fn coeff(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.order {
            ZERO
        } else {
            self.coeffs[(n + self.order as i64) as usize]
        }
    }

    pub fn coeff_mut(&mut self, n: i64) -> Result<&mut Complex64> {
        if n.unsigned_abs() as usize > self.order {
            return Err(Error::ModeOutOfRange {
                mode: n,
                order: self.order,
            });
        }
        Ok(&mut self.coeffs[(n + self.order as i64) as usize])
    }

    /// Re-truncates to another order, zero-padding or dropping modes.
    pub fn with_order(&self, order: usize) -> Self {
        let coeffs = (-(order as i64)..=order as i64)
            .map(|n| self.coeff(n))
            .collect();
        Self::from_coeffs_unchecked(order, coeffs)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::TruncationMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// Coefficient-space max norm.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `‖φ‖_E = (2π Σ|φ̂(n)|²)^{1/2}`.
    pub fn norm(&self) -> f64 {
        (2.0 * PI * self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>()).sqrt()
    }

    /// `⟨φ,ψ⟩_E = 2π Σ φ̂(n) conj(ψ̂(n))`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        self.check_order(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b.conj())
            .sum::<Complex64>()
            * (2.0 * PI))
    }

    /// Largest violation of `φ̂(−n) = conj φ̂(n)`.
    pub fn conjugate_symmetry_defect(&self) -> f64 {
        (0..=self.order as i64)
            .map(|n| (self.coeff(-n) - self.coeff(n).conj()).norm())
            .fold(0.0, f64::max)
    }

    /// Real-valuedness test at tolerance `1e−12·‖coeffs‖`.
    pub fn is_real(&self) -> bool {
        let scale = self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        self.conjugate_symmetry_defect() <= 1e-12 * scale
    }

    /// Pointwise complex conjugate.
    pub fn conj(&self) -> Self {
        let coeffs = self.coeffs.iter().rev().map(|c| c.conj()).collect();
        Self::from_coeffs_unchecked(self.order, coeffs)
    }

    /// Pointwise real part.
    pub fn real_part(&self) -> Self {
        (self + &self.conj()) * Complex64::new(0.5, 0.0)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        self * factor
    }

    /// `self + factor·other`.
    pub fn axpy(&self, factor: Complex64, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + factor * b)
            .collect();
        Ok(Self::from_coeffs_unchecked(self.order, coeffs))
    }

    pub fn apply(&self, multiplier: &FourierMultiplier) -> Self {
        multiplier.apply(self)
    }

    /// `Hφ`, multiplier `−i·sgn(n)`.
    pub fn hilbert_transform(&self) -> Self {
        FourierMultiplier::hilbert().apply(self)
    }

    /// `Sφ`, multiplier `+1` on `n ≥ 0` and `−1` on `n < 0`.
    pub fn cauchy_singular(&self) -> Self {
        FourierMultiplier::cauchy_singular().apply(self)
    }

    /// Dirichlet-to-Neumann map of the unit disk, multiplier `|n|`.
    pub fn dtn_circle(&self) -> Self {
        FourierMultiplier::dirichlet_to_neumann().apply(self)
    }

    /// `dφ/ds`, multiplier `i·n`.
    pub fn tangential_derivative(&self) -> Self {
        FourierMultiplier::tangential_derivative().apply(self)
    }

    /// Pointwise product truncated back to `[−N, N]`.
    ///
    /// The product is formed on a grid of `2(2N+1)` points, which holds the
    /// full convolution of two bandwidth-`N` series without aliasing.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order;
        let fine = 2 * (2 * order + 1);
        let spread = |f: &Self| {
            let mut buf = vec![ZERO; fine];
            for (n, c) in f.modes() {
                buf[n.rem_euclid(fine as i64) as usize] = c;
            }
            inverse_dft(&mut buf);
            buf
        };
        let a = spread(self);
        let b = spread(other);
        let mut prod: Vec<Complex64> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
        forward_dft(&mut prod);
        let scale = 1.0 / fine as f64;
        let coeffs = (-(order as i64)..=order as i64)
            .map(|n| prod[n.rem_euclid(fine as i64) as usize] * scale)
            .collect();
        Ok(Self::from_coeffs_unchecked(order, coeffs))
    }

    /// `(τφ)(θ) = φ(α(θ))`, interpolated at the grid and re-analyzed.
    pub fn compose_shift(&self, shift: &CircleShift) -> Result<Self> {
        if shift.order() != self.order {
            return Err(Error::TruncationMismatch {
                left: self.order,
                right: shift.order(),
            });
        }
        let samples: Vec<Complex64> = shift.targets().iter().map(|&a| self.eval(a)).collect();
        Self::analyze(&samples)
    }

    /// Sokhotski–Plemelj boundary values `(Φ⁺, Φ⁻) = (φ + Sφ, −φ + Sφ)`.
    pub fn plemelj_traces(&self) -> (Self, Self) {
        let two = Complex64::new(2.0, 0.0);
        let plus = self
            .modes()
            .map(|(n, c)| if n >= 0 { c * two } else { ZERO })
            .collect();
        let minus = self
            .modes()
            .map(|(n, c)| if n < 0 { -c * two } else { ZERO })
            .collect();
        (
            Self::from_coeffs_unchecked(self.order, plus),
            Self::from_coeffs_unchecked(self.order, minus),
        )
    }

    /// Cauchy integral `(1/πi)∮ φ(t)dt/(t − z)` off the contour.
    ///
    /// Interior: `2 Σ_{n≥0} φ̂(n) zⁿ`; exterior: `−2 Σ_{n<0} φ̂(n) zⁿ`.
    pub fn cauchy_integral_eval(&self, z: Complex64, side: Side) -> Result<Complex64> {
        let r = z.norm();
        match side {
            Side::Interior => {
                if r >= 1.0 {
                    return Err(Error::WrongSide {
                        z,
                        side: "interior",
                    });
                }
                // Horner in z over n = N..0
                let acc = (0..=self.order as i64)
                    .rev()
                    .fold(ZERO, |acc, n| acc * z + self.coeff(n));
                Ok(acc * 2.0)
            }
            Side::Exterior => {
                if r <= 1.0 {
                    return Err(Error::WrongSide {
                        z,
                        side: "exterior",
                    });
                }
                let w = z.inv();
                let acc = (1..=self.order as i64)
                    .rev()
                    .fold(ZERO, |acc, n| acc * w + self.coeff(-n));
                Ok(-(acc * w) * 2.0)
            }
        }
    }
}

impl Add for &BoundaryFunction {
    type Output = BoundaryFunction;

    fn add(self, rhs: Self) -> BoundaryFunction {
        self.axpy(Complex64::new(1.0, 0.0), rhs)
            .expect("truncation orders must agree")
    }
}

impl Sub for &BoundaryFunction {
    type Output = BoundaryFunction;

    fn sub(self, rhs: Self) -> BoundaryFunction {
        self.axpy(Complex64::new(-1.0, 0.0), rhs)
            .expect("truncation orders must agree")
    }
}

impl Add for BoundaryFunction {
    type Output = BoundaryFunction;

    fn add(self, rhs: Self) -> BoundaryFunction {
        &self + &rhs
    }
}

impl Sub for BoundaryFunction {
    type Output = BoundaryFunction;

    fn sub(self, rhs: Self) -> BoundaryFunction {
        &self - &rhs
    }
}

impl Neg for &BoundaryFunction {
    type Output = BoundaryFunction;

    fn neg(self) -> BoundaryFunction {
        self * Complex64::new(-1.0, 0.0)
    }
}

impl Mul<Complex64> for &BoundaryFunction {
    type Output = BoundaryFunction;

    fn mul(self, rhs: Complex64) -> BoundaryFunction {
        let coeffs = self.coeffs.iter().map(|c| c * rhs).collect();
        BoundaryFunction::from_coeffs_unchecked(self.order, coeffs)
    }
}

impl Mul<Complex64> for BoundaryFunction {
    type Output = BoundaryFunction;

    fn mul(self, rhs: Complex64) -> BoundaryFunction {
        &self * rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn max_diff(a: &BoundaryFunction, b: &BoundaryFunction) -> f64 {
        (a - b).max_abs_coeff()
    }

    /// Direct O(N²) discrete Fourier sum, independent of the FFT path.
    fn direct_dft(samples: &[Complex64]) -> Vec<Complex64> {
        let len = samples.len();
        let order = (len / 2) as i64;
        (-order..=order)
            .map(|n| {
                samples
                    .iter()
                    .enumerate()
                    .map(|(j, x)| {
                        x * Complex64::from_polar(
                            1.0,
                            -2.0 * PI * (n * j as i64) as f64 / len as f64,
                        )
                    })
                    .sum::<Complex64>()
                    / len as f64
            })
            .collect()
    }

    #[test]
    fn analyze_constant_and_pure_mode() {
        let ones = vec![c(1.0, 0.0); 9];
        let phi = BoundaryFunction::analyze(&ones).unwrap();
        assert_eq!(phi.order(), 4);
        assert_abs_diff_eq!(phi.coeff(0).re, 1.0, epsilon = 1e-15);
        assert!(phi
            .modes()
            .filter(|(n, _)| *n != 0)
            .all(|(_, c)| c.norm() < 1e-15));

        let e1 = BoundaryFunction::from_fn(4, |t| Complex64::from_polar(1.0, t));
        assert_abs_diff_eq!(e1.coeff(1).re, 1.0, epsilon = 1e-15);
        assert!(e1
            .modes()
            .filter(|(n, _)| *n != 1)
            .all(|(_, c)| c.norm() < 1e-15));
    }

    #[test]
    fn analyze_rejects_even_length() {
        let err = BoundaryFunction::analyze(&[c(1.0, 0.0); 8]).unwrap_err();
        assert!(matches!(err, Error::InvalidGrid { got: 8, .. }));
    }

    #[test]
    fn analyze_matches_direct_sum() {
        let samples: Vec<Complex64> = super::super::angular_grid(10)
            .iter()
            .map(|&t| c((3.0 * t).sin().exp(), (t.cos() * 2.0).tanh()))
            .collect();
        let phi = BoundaryFunction::analyze(&samples).unwrap();
        for (a, b) in phi.coeffs().iter().zip(direct_dft(&samples)) {
            assert!((a - b).norm() < 1e-14);
        }
        let back = phi.synthesize();
        for (a, b) in back.iter().zip(&samples) {
            assert!((a - b).norm() < 1e-13 * b.norm().max(1.0));
        }
    }

    #[test]
    fn synthesize_pure_modes() {
        let one = BoundaryFunction::constant(3, c(1.0, 0.0));
        assert!(one
            .synthesize()
            .iter()
            .all(|s| (s - c(1.0, 0.0)).norm() < 1e-15));
        let e1 = BoundaryFunction::mode(3, 1, c(1.0, 0.0)).unwrap();
        for (s, t) in e1.synthesize().iter().zip(super::super::angular_grid(3)) {
            assert!((s - Complex64::from_polar(1.0, t)).norm() < 1e-15);
        }
    }

    #[test]
    fn hilbert_examples() {
        let n = 6;
        assert_eq!(
            BoundaryFunction::constant(n, c(1.0, 0.0))
                .hilbert_transform()
                .max_abs_coeff(),
            0.0
        );
        let cos = BoundaryFunction::from_real_fn(n, f64::cos);
        let sin = BoundaryFunction::from_real_fn(n, f64::sin);
        assert!(max_diff(&cos.hilbert_transform(), &sin) < 1e-15);
        assert!(max_diff(&sin.hilbert_transform(), &-&cos) < 1e-15);
    }

    #[test]
    fn cauchy_singular_examples() {
        let n = 5;
        let t2 = BoundaryFunction::mode(n, 2, c(1.0, 0.0)).unwrap();
        assert_eq!(t2.cauchy_singular(), t2);
        let tm3 = BoundaryFunction::mode(n, -3, c(1.0, 0.0)).unwrap();
        assert_eq!(tm3.cauchy_singular(), -&tm3);
        let one = BoundaryFunction::constant(n, c(1.0, 0.0));
        assert_eq!(one.cauchy_singular(), one);
    }

    #[test]
    fn dtn_and_derivative_examples() {
        let n = 5;
        assert_eq!(
            BoundaryFunction::constant(n, c(1.0, 0.0))
                .dtn_circle()
                .max_abs_coeff(),
            0.0
        );
        let e1 = BoundaryFunction::mode(n, 1, c(1.0, 0.0)).unwrap();
        assert_eq!(e1.dtn_circle(), e1);
        let em3 = BoundaryFunction::mode(n, -3, c(1.0, 0.0)).unwrap();
        assert_eq!(em3.dtn_circle(), &em3 * c(3.0, 0.0));

        assert_eq!(
            BoundaryFunction::constant(n, c(1.0, 0.0))
                .tangential_derivative()
                .max_abs_coeff(),
            0.0
        );
        assert_eq!(e1.tangential_derivative(), &e1 * c(0.0, 1.0));
        let cos = BoundaryFunction::from_real_fn(n, f64::cos);
        let msin = BoundaryFunction::from_real_fn(n, |t| -t.sin());
        assert!(max_diff(&cos.tangential_derivative(), &msin) < 1e-15);
    }

    #[test]
    fn multiply_examples() {
        let n = 6;
        let phi = BoundaryFunction::from_fn(n, |t| c(t.cos(), (2.0 * t).sin()));
        let one = BoundaryFunction::constant(n, c(1.0, 0.0));
        assert!(max_diff(&one.multiply(&phi).unwrap(), &phi) < 1e-15);
        let e1 = BoundaryFunction::mode(n, 1, c(1.0, 0.0)).unwrap();
        let e2 = BoundaryFunction::mode(n, 2, c(1.0, 0.0)).unwrap();
        assert!(max_diff(&e1.multiply(&e1).unwrap(), &e2) < 1e-15);
    }

    #[test]
    fn multiply_matches_direct_convolution() {
        let n = 8;
        let a = BoundaryFunction::from_modes(
            n,
            &[
                (-4, c(0.3, 0.1)),
                (-1, c(1.0, -2.0)),
                (0, c(0.5, 0.0)),
                (3, c(-0.7, 0.2)),
                (4, c(0.1, 0.9)),
            ],
        )
        .unwrap();
        let b = BoundaryFunction::from_modes(
            n,
            &[
                (-3, c(0.2, 0.2)),
                (2, c(1.5, 0.0)),
                (4, c(0.0, -1.0)),
                (8, c(2.0, 1.0)),
                (-8, c(0.4, -0.4)),
            ],
        )
        .unwrap();
        let prod = a.multiply(&b).unwrap();
        for k in -(n as i64)..=n as i64 {
            let direct: Complex64 = (-(n as i64)..=n as i64)
                .map(|m| a.coeff(m) * b.coeff(k - m))
                .sum();
            assert!((prod.coeff(k) - direct).norm() < 1e-14, "mode {k}");
        }
    }

    #[test]
    fn compose_shift_examples() {
        let n = 8;
        let phi = BoundaryFunction::from_fn(n, |t| c(t.cos() + 0.2, (3.0 * t).sin()));
        let id = CircleShift::identity(n);
        assert!(max_diff(&phi.compose_shift(&id).unwrap(), &phi) < 1e-14);

        let e1 = BoundaryFunction::mode(n, 1, c(1.0, 0.0)).unwrap();
        let rot = CircleShift::rotation(n, PI / 2.0);
        assert!(max_diff(&e1.compose_shift(&rot).unwrap(), &(&e1 * c(0.0, 1.0))) < 1e-14);

        let warp = CircleShift::from_fn(n, |t| t + 0.3 * t.sin()).unwrap();
        let shifted = e1.compose_shift(&warp).unwrap();
        for (s, t) in shifted
            .synthesize()
            .iter()
            .zip(super::super::angular_grid(n))
        {
            let exact = Complex64::from_polar(1.0, t + 0.3 * t.sin());
            assert!((s - exact).norm() < 1e-13);
        }
    }

    #[test]
    fn plemelj_examples() {
        let n = 4;
        let t = BoundaryFunction::mode(n, 1, c(1.0, 0.0)).unwrap();
        let (plus, minus) = t.plemelj_traces();
        assert_eq!(plus, &t * c(2.0, 0.0));
        assert_eq!(minus.max_abs_coeff(), 0.0);

        let tinv = BoundaryFunction::mode(n, -1, c(1.0, 0.0)).unwrap();
        let (plus, minus) = tinv.plemelj_traces();
        assert_eq!(plus.max_abs_coeff(), 0.0);
        assert_eq!(minus, &tinv * c(-2.0, 0.0));
    }

    #[test]
    fn cauchy_integral_examples() {
        let n = 4;
        let t = BoundaryFunction::mode(n, 1, c(1.0, 0.0)).unwrap();
        let tinv = BoundaryFunction::mode(n, -1, c(1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(
            t.cauchy_integral_eval(c(0.5, 0.0), Side::Interior)
                .unwrap()
                .re,
            1.0,
            epsilon = 1e-15
        );
        assert_eq!(
            t.cauchy_integral_eval(c(2.0, 0.0), Side::Exterior).unwrap(),
            ZERO
        );
        assert_abs_diff_eq!(
            tinv.cauchy_integral_eval(c(2.0, 0.0), Side::Exterior)
                .unwrap()
                .re,
            -1.0,
            epsilon = 1e-15
        );
        assert!(matches!(
            t.cauchy_integral_eval(c(2.0, 0.0), Side::Interior),
            Err(Error::WrongSide { .. })
        ));
        assert!(matches!(
            t.cauchy_integral_eval(c(0.2, 0.0), Side::Exterior),
            Err(Error::WrongSide { .. })
        ));
    }

    #[test]
    fn cauchy_integral_vanishes_at_infinity() {
        let phi = BoundaryFunction::from_fn(6, |t| c(t.cos().exp(), t.sin()));
        let far = phi
            .cauchy_integral_eval(c(1e8, 0.0), Side::Exterior)
            .unwrap();
        assert!(far.norm() < 1e-7);
    }

    #[test]
    fn parseval_matches_grid_quadrature() {
        let phi = BoundaryFunction::from_fn(7, |t| c((2.0 * t).cos(), t.sin() * 0.5 + 0.1));
        let samples = phi.synthesize();
        let quad =
            samples.iter().map(|s| s.norm_sqr()).sum::<f64>() * 2.0 * PI / samples.len() as f64;
        assert_abs_diff_eq!(phi.norm().powi(2), quad, epsilon = 1e-13);
    }

    #[test]
    fn is_real_detects_symmetry() {
        assert!(BoundaryFunction::from_real_fn(5, |t| t.cos() + 0.1).is_real());
        assert!(!BoundaryFunction::mode(5, 1, c(1.0, 0.0)).unwrap().is_real());
    }

    #[test]
    fn rejects_wrong_length_and_nan() {
        assert!(BoundaryFunction::new(2, vec![ZERO; 4]).is_err());
        assert!(BoundaryFunction::new(1, vec![ZERO, c(f64::NAN, 0.0), ZERO]).is_err());
    }
}
