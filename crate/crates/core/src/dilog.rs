//! Complex dilogarithm and the Bloch–Wigner function.
//!
//! `D(z) = Im(Li2(z)) + arg(1-z)·log|z|` is the single-valued dilogarithm
//! variant whose value at the shape parameter of an ideal tetrahedron is the
//! tetrahedron's hyperbolic volume. `Li2` is evaluated by the Bernoulli
//! series in `u = -log(1-z)` after standard inversion/reflection reductions,
//! which keeps `|u| <= pi/3` and gives ~1e-16 relative accuracy at `f64`.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Bernoulli numbers `B_k` as exact (numerator, denominator) pairs, `k = 0..=30`.
/// Odd entries beyond `B_1` vanish.
const BERNOULLI: [(f64, f64); 31] = [
    (1.0, 1.0),
    (-1.0, 2.0),
    (1.0, 6.0),
    (0.0, 1.0),
    (-1.0, 30.0),
    (0.0, 1.0),
    (1.0, 42.0),
    (0.0, 1.0),
    (-1.0, 30.0),
    (0.0, 1.0),
    (5.0, 66.0),
    (0.0, 1.0),
    (-691.0, 2730.0),
    (0.0, 1.0),
    (7.0, 6.0),
    (0.0, 1.0),
    (-3617.0, 510.0),
    (0.0, 1.0),
    (43867.0, 798.0),
    (0.0, 1.0),
    (-174611.0, 330.0),
    (0.0, 1.0),
    (854513.0, 138.0),
    (0.0, 1.0),
    (-236364091.0, 2730.0),
    (0.0, 1.0),
    (8553103.0, 6.0),
    (0.0, 1.0),
    (-23749461029.0, 870.0),
    (0.0, 1.0),
    (8615841276005.0, 14322.0),
];

/// Series coefficients `B_k / (k+1)!` for `Li2(z) = sum c_k u^{k+1}`.
fn series_coeffs<T: Scalar>() -> Vec<T> {
    let mut factorial = 1.0f64; // (k+1)! built incrementally
    let mut out = Vec::with_capacity(BERNOULLI.len());
    for (k, (num, den)) in BERNOULLI.iter().enumerate() {
        factorial *= (k + 1) as f64;
        out.push(T::of(num / den / factorial));
    }
    out
}

fn series<T: Scalar>(z: Complex<T>) -> Complex<T> {
    let u = -(Complex::one() - z).ln();
    let mut sum = Complex::zero();
    let mut upow = u;
    for c in series_coeffs::<T>() {
        if !c.is_zero() {
            sum = sum + upow * c;
        }
        upow = upow * u;
    }
    sum
}

/// Principal-branch complex dilogarithm `Li2(z) = sum_{k>=1} z^k / k^2`.
pub fn dilog<T: Scalar>(z: Complex<T>) -> Complex<T> {
    let half = T::of(0.5);
    let pi2_6 = T::PI() * T::PI() / T::of(6.0);
    if z.is_zero() {
        return Complex::zero();
    }
    if z == Complex::one() {
        return Complex::new(pi2_6, T::zero());
    }
    if z.norm_sqr() > T::one() {
        // Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2
        let log_neg = (-z).ln();
        return -dilog(z.inv()) - Complex::new(pi2_6, T::zero()) - log_neg * log_neg * half;
    }
    if z.re > half {
        // Li2(z) = pi^2/6 - log(z)log(1-z) - Li2(1-z)
        let w = Complex::one() - z;
        return Complex::new(pi2_6, T::zero()) - z.ln() * w.ln() - dilog(w);
    }
    series(z)
}

/// Bloch–Wigner function `D(z)`: the hyperbolic volume of the ideal
/// tetrahedron with shape `z` (positive for `Im z > 0`, zero on the reals).
pub fn bloch_wigner<T: Scalar>(z: Complex<T>) -> T {
    if z.im.is_zero() {
        // D vanishes identically on the real line; avoid branch-cut noise.
        return T::zero();
    }
    dilog(z).im + (Complex::one() - z).arg() * z.norm().ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Cplx;

    const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932;
    /// Volume of the regular ideal tetrahedron.
    const V3: f64 = 1.014_941_606_409_653_625_021_202_554_3;

    #[test]
    fn dilog_reference_points() {
        let half = dilog(Cplx::new(0.5, 0.0));
        let expect = std::f64::consts::PI.powi(2) / 12.0 - 0.5 * 2f64.ln().powi(2);
        assert!((half.re - expect).abs() < 1e-15, "Li2(1/2) = {}", half.re);
        assert!(half.im.abs() < 1e-15);

        let minus_one = dilog(Cplx::new(-1.0, 0.0));
        assert!((minus_one.re + std::f64::consts::PI.powi(2) / 12.0).abs() < 1e-15);

        let at_i = dilog(Cplx::new(0.0, 1.0));
        assert!((at_i.re + std::f64::consts::PI.powi(2) / 48.0).abs() < 1e-15);
        assert!((at_i.im - CATALAN).abs() < 1e-15);
    }

    #[test]
    fn bloch_wigner_at_i_is_catalan() {
        assert!((bloch_wigner(Cplx::new(0.0, 1.0)) - CATALAN).abs() < 1e-14);
    }

    #[test]
    fn regular_ideal_tetrahedron_volume() {
        let z = Cplx::from_polar(1.0, std::f64::consts::FRAC_PI_3);
        assert!((bloch_wigner(z) - V3).abs() < 1e-14);
    }

    #[test]
    fn vanishes_on_reals() {
        for x in [-7.5, -1.0, -0.3, 0.2, 0.5, 0.99, 1.7, 42.0] {
            assert_eq!(bloch_wigner(Cplx::new(x, 0.0)), 0.0);
        }
    }

    #[test]
    fn conjugation_antisymmetry() {
        for (re, im) in [(0.3, 0.8), (-1.2, 0.4), (2.5, 1.9), (0.01, 3.0)] {
            let z = Cplx::new(re, im);
            let d = bloch_wigner(z);
            assert!((d + bloch_wigner(z.conj())).abs() < 1e-13, "z = {z}");
        }
    }

    #[test]
    fn five_term_relation() {
        // D(x) + D(y) + D((1-x)/(1-xy)) + D(1-xy) + D((1-y)/(1-xy)) = 0
        let one = Cplx::new(1.0, 0.0);
        let cases = [
            (Cplx::new(0.3, 0.4), Cplx::new(-0.2, 0.7)),
            (Cplx::new(0.8, 0.1), Cplx::new(0.5, 0.5)),
            (Cplx::new(-1.5, 0.9), Cplx::new(0.2, -0.3)),
        ];
        for (x, y) in cases {
            let xy = x * y;
            let total = bloch_wigner(x)
                + bloch_wigner(y)
                + bloch_wigner((one - x) / (one - xy))
                + bloch_wigner(one - xy)
                + bloch_wigner((one - y) / (one - xy));
            assert!(total.abs() < 1e-12, "five-term residue {total} at x={x}, y={y}");
        }
    }

    #[test]
    fn f32_instantiation_agrees_coarsely() {
        let z32 = num_complex::Complex::<f32>::new(0.0, 1.0);
        assert!((bloch_wigner(z32) - CATALAN as f32).abs() < 1e-5);
    }
}
