//! Octonion algebra and the 2-fold vector cross product on its imaginary part.
//!
//! Multiplication is built by Cayley-Dickson doubling of the quaternions,
//! `(a, b)(c, d) = (ac - d̄b, da + bc̄)`, which reproduces the standard
//! cross-product table `g(e_i x e_j, e_k) = Omega0(e_i, e_j, e_k)` used by
//! the rest of the crate. The calibration test in [`crate::forms`] guards
//! the sign convention.

use std::ops::{Add, Mul, Neg, Sub};

/// A quaternion `w + xi + yj + zk`. Internal carrier for the doubling.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Hamilton product, accumulated with fused multiply-adds to keep the
    /// norm-multiplicativity defect within a few ulps.
    pub fn mul(self, o: Quaternion) -> Quaternion {
        let w = self
            .w
            .mul_add(o.w, -self.x.mul_add(o.x, self.y.mul_add(o.y, self.z * o.z)));
        let x = self
            .w
            .mul_add(o.x, self.x.mul_add(o.w, self.y.mul_add(o.z, -self.z * o.y)));
        let y = self
            .w
            .mul_add(o.y, -self.x.mul_add(o.z, -self.y.mul_add(o.w, self.z * o.x)));
        let z = self
            .w
            .mul_add(o.z, self.x.mul_add(o.y, -self.y.mul_add(o.x, -self.z * o.w)));
        Quaternion::new(w, x, y, z)
    }
}

/// An octonion stored as a real part plus the seven imaginary coordinates
/// `x1..x7`, matching the identification
/// `Im O = Im H + H = {(x1 i + x2 j + x3 k, x4 + x5 i + x6 j + x7 k)}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Octonion {
    pub re: f64,
    pub im: [f64; 7],
}

impl Octonion {
    pub const ZERO: Octonion = Octonion {
        re: 0.0,
        im: [0.0; 7],
    };
    pub const ONE: Octonion = Octonion {
        re: 1.0,
        im: [0.0; 7],
    };

    pub const fn new(re: f64, im: [f64; 7]) -> Self {
        Octonion { re, im }
    }

    /// Basis element `e_i`, `i` in `1..=7`.
    pub fn basis(i: usize) -> Self {
        assert!((1..=7).contains(&i), "basis index must be in 1..=7");
        let mut im = [0.0; 7];
        im[i - 1] = 1.0;
        Octonion { re: 0.0, im }
    }

    fn halves(self) -> (Quaternion, Quaternion) {
        let a = Quaternion::new(self.re, self.im[0], self.im[1], self.im[2]);
        let b = Quaternion::new(self.im[3], self.im[4], self.im[5], self.im[6]);
        (a, b)
    }

    fn from_halves(a: Quaternion, b: Quaternion) -> Self {
        Octonion {
            re: a.w,
            im: [a.x, a.y, a.z, b.w, b.x, b.y, b.z],
        }
    }

    pub fn conj(self) -> Self {
        let (a, b) = self.halves();
        Octonion::from_halves(a.conj(), -b)
    }

    pub fn norm_sq(self) -> f64 {
        self.im
            .iter()
            .fold(self.re * self.re, |acc, &c| c.mul_add(c, acc))
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(self, s: f64) -> Self {
        let mut im = self.im;
        for c in &mut im {
            *c *= s;
        }
        Octonion { re: self.re * s, im }
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, o: Octonion) -> Octonion {
        let mut im = self.im;
        for (c, d) in im.iter_mut().zip(o.im) {
            *c += d;
        }
        Octonion {
            re: self.re + o.re,
            im,
        }
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, o: Octonion) -> Octonion {
        self + (-o)
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        self.scale(-1.0)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    /// Cayley-Dickson doubling `(a, b)(c, d) = (ac - d̄b, da + bc̄)`.
    fn mul(self, o: Octonion) -> Octonion {
        let (a, b) = self.halves();
        let (c, d) = o.halves();
        let first = a.mul(c) - d.conj().mul(b);
        let second = d.mul(a) + b.mul(c.conj());
        Octonion::from_halves(first, second)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

/// Octonion multiplication as a free function.
pub fn oct_mul(a: Octonion, b: Octonion) -> Octonion {
    a * b
}

/// Octonion conjugation as a free function.
pub fn conj(a: Octonion) -> Octonion {
    a.conj()
}

/// A vector in the 7-dimensional imaginary octonions, coordinates `x1..x7`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImOctonion(pub [f64; 7]);

impl ImOctonion {
    pub const ZERO: ImOctonion = ImOctonion([0.0; 7]);

    /// Basis element `e_i`, `i` in `1..=7`.
    pub fn basis(i: usize) -> Self {
        assert!((1..=7).contains(&i), "basis index must be in 1..=7");
        let mut c = [0.0; 7];
        c[i - 1] = 1.0;
        ImOctonion(c)
    }

    pub fn embed(self) -> Octonion {
        Octonion {
            re: 0.0,
            im: self.0,
        }
    }

    /// Imaginary part of a full octonion; the real part is dropped.
    pub fn from_octonion(o: Octonion) -> Self {
        ImOctonion(o.im)
    }

    pub fn dot(self, o: ImOctonion) -> f64 {
        self.0
            .iter()
            .zip(o.0)
            .fold(0.0, |acc, (&a, b)| a.mul_add(b, acc))
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(self, s: f64) -> Self {
        let mut c = self.0;
        for x in &mut c {
            *x *= s;
        }
        ImOctonion(c)
    }

    pub fn normalized(self) -> Self {
        self.scale(1.0 / self.norm())
    }
}

impl Add for ImOctonion {
    type Output = ImOctonion;
    fn add(self, o: ImOctonion) -> ImOctonion {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(o.0) {
            *a += b;
        }
        ImOctonion(c)
    }
}

impl Sub for ImOctonion {
    type Output = ImOctonion;
    fn sub(self, o: ImOctonion) -> ImOctonion {
        self + o.scale(-1.0)
    }
}

impl Neg for ImOctonion {
    type Output = ImOctonion;
    fn neg(self) -> ImOctonion {
        self.scale(-1.0)
    }
}

/// The 2-fold vector cross product `u x v = Im(v̄ u)` on `Im O`.
pub fn cross(u: ImOctonion, v: ImOctonion) -> ImOctonion {
    ImOctonion::from_octonion(v.embed().conj() * u.embed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    const ULP8: f64 = 8.0 * f64::EPSILON;

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    fn random_unit(rng: &mut impl Rng) -> Octonion {
        loop {
            let mut o = Octonion::ZERO;
            o.re = rng.sample(rand_distr::StandardNormal);
            for c in &mut o.im {
                *c = rng.sample(rand_distr::StandardNormal);
            }
            let n = o.norm();
            if n > 1e-3 {
                return o.scale(1.0 / n);
            }
        }
    }

    #[test]
    fn identity_is_neutral() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let b = random_unit(&mut rng);
            assert_eq!(Octonion::ONE * b, b);
            assert_eq!(b * Octonion::ONE, b);
        }
    }

    #[test]
    fn quaternion_subalgebra() {
        // i * j = k in the first quaternionic factor.
        assert_eq!(e(1) * e(2), e(3));
        assert_eq!(e(2) * e(3), e(1));
        assert_eq!(e(3) * e(1), e(2));
        assert_eq!(e(1) * e(1), -Octonion::ONE);
    }

    #[test]
    fn norm_multiplicativity_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut worst: f64 = 0.0;
        for _ in 0..10_000 {
            let a = random_unit(&mut rng);
            let b = random_unit(&mut rng);
            let defect = ((a * b).norm() - a.norm() * b.norm()).abs();
            worst = worst.max(defect);
        }
        assert!(worst <= ULP8, "worst defect {worst:e} above 8 ulps");
    }

    #[test]
    fn conjugation_gives_norm_square() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let a = random_unit(&mut rng);
            let p = a * a.conj();
            assert!((p.re - a.norm_sq()).abs() <= ULP8);
            for c in p.im {
                assert!(c.abs() <= ULP8);
            }
        }
    }

    #[test]
    fn conj_is_anti_automorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10_000 {
            let a = random_unit(&mut rng);
            let b = random_unit(&mut rng);
            let lhs = (a * b).conj();
            let rhs = b.conj() * a.conj();
            assert!((lhs.re - rhs.re).abs() <= ULP8);
            for (x, y) in lhs.im.iter().zip(rhs.im) {
                assert!((x - y).abs() <= ULP8);
            }
        }
    }

    #[test]
    fn conj_fixes_real_axis_and_negates_imaginary() {
        assert_eq!(Octonion::ONE.conj(), Octonion::ONE);
        assert_eq!(e(1).conj(), -e(1));
        assert_eq!(e(7).conj(), -e(7));
    }

    #[test]
    fn imoctonion_round_trip() {
        let v = ImOctonion([1.0, -2.0, 3.5, 0.0, 0.25, -0.125, 7.0]);
        assert_eq!(ImOctonion::from_octonion(v.embed()), v);
        assert_eq!(v.embed().re, 0.0);
    }

    #[test]
    fn cross_of_first_basis_pair() {
        let e1 = ImOctonion::basis(1);
        let e2 = ImOctonion::basis(2);
        assert_eq!(cross(e1, e2), ImOctonion::basis(3));
    }

    #[test]
    fn cross_e1_e6_is_minus_e7() {
        let got = cross(ImOctonion::basis(1), ImOctonion::basis(6));
        assert_eq!(got, -ImOctonion::basis(7));
    }

    #[test]
    fn cross_self_vanishes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let u = ImOctonion::from_octonion(random_unit(&mut rng));
            let c = cross(u, u);
            for x in c.0 {
                assert!(x.abs() <= 1e-15);
            }
        }
    }

    proptest! {
        #[test]
        fn cross_is_antisymmetric(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = ImOctonion::from_octonion(random_unit(&mut rng));
            let v = ImOctonion::from_octonion(random_unit(&mut rng));
            let a = cross(u, v);
            let b = cross(v, u);
            for (x, y) in a.0.iter().zip(b.0) {
                prop_assert!((x + y).abs() <= 1e-14);
            }
        }

        #[test]
        fn lagrange_identity(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(77));
            let u = ImOctonion::from_octonion(random_unit(&mut rng));
            let v = ImOctonion::from_octonion(random_unit(&mut rng));
            let c = cross(u, v);
            let lhs = c.norm_sq() + u.dot(v) * u.dot(v);
            let rhs = u.norm_sq() * v.norm_sq();
            prop_assert!((lhs - rhs).abs() <= 1e-12);
        }
    }
}
