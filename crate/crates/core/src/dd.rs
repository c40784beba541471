//! Double-double arithmetic.
//!
//! A [`Dd`] is an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`, giving
//! roughly 106 bits of significand. Error-free transforms use `f64::mul_add`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd { hi: std::f64::consts::PI, lo: 1.2246467991473532e-16 };
    pub const TWO_PI: Dd = Dd { hi: std::f64::consts::TAU, lo: 2.4492935982947064e-16 };
    pub const HALF_PI: Dd = Dd { hi: std::f64::consts::FRAC_PI_2, lo: 6.123233995736766e-17 };
    pub const LN2: Dd = Dd { hi: std::f64::consts::LN_2, lo: 2.3190468138462996e-17 };

    #[inline]
    pub const fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (h, l) = quick_two_sum(hi, lo);
        Dd { hi: h, lo: l }
    }

    /// Exact ratio of two integers that fit in an `f64` mantissa each.
    pub fn ratio(num: i128, den: i128) -> Dd {
        Dd::from_i128(num) / Dd::from_i128(den)
    }

    pub fn from_i128(n: i128) -> Dd {
        let hi = n as f64;
        let rest = n - hi as i128;
        Dd::new(hi, rest as f64)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    pub fn sqr(self) -> Dd {
        self * self
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    pub fn mul_pow2(self, e: i32) -> Dd {
        let f = 2f64.powi(e);
        Dd { hi: self.hi * f, lo: self.lo * f }
    }

    pub fn floor(self) -> Dd {
        let hi = self.hi.floor();
        if hi == self.hi {
            Dd::new(hi, self.lo.floor())
        } else {
            Dd::from_f64(hi)
        }
    }

    pub fn round(self) -> Dd {
        (self + Dd::from_f64(0.5)).floor()
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let y = self.hi.sqrt();
        let (p, e) = two_prod(y, y);
        let r = ((self.hi - p) - e + self.lo) / (2.0 * y);
        Dd::new(y, r)
    }

    pub fn powi(self, mut n: i32) -> Dd {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut base = self;
        let mut acc = Dd::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }

    pub fn exp(self) -> Dd {
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / Dd::LN2.hi).round();
        let r = (self - Dd::LN2 * k).mul_pow2(-10);
        // expm1 by Taylor for |r| < 4e-4, squared up as (1+m)^2 - 1 = 2m + m^2
        let mut term = r;
        let mut m = r;
        for j in 2..=14 {
            term = term * r / j as f64;
            m += term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        for _ in 0..10 {
            m = m.mul_pow2(1) + m * m;
        }
        let sum = m + 1.0;
        // split the scaling to avoid intermediate overflow of 2^k
        let k = k as i32;
        let half = k / 2;
        sum.mul_pow2(half).mul_pow2(k - half)
    }

    pub fn ln(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::from_f64(f64::NAN);
        }
        let mut y = Dd::from_f64(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - 1.0;
        }
        y
    }

    /// Returns (sin x, cos x).
    pub fn sin_cos(self) -> (Dd, Dd) {
        let k = (self / Dd::HALF_PI).round();
        let r = self - Dd::HALF_PI * k;
        let r2 = r * r;
        let mut s = r;
        let mut c = Dd::ONE;
        let mut ts = r;
        let mut tc = Dd::ONE;
        let mut j = 1.0;
        loop {
            ts = -(ts * r2) / ((j + 1.0) * (j + 2.0));
            tc = -(tc * r2) / (j * (j + 1.0));
            s += ts;
            c += tc;
            j += 2.0;
            if ts.hi.abs() < 1e-34 && tc.hi.abs() < 1e-34 {
                break;
            }
        }
        let q = (k.hi as i64).rem_euclid(4);
        match q {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn atan2(y: Dd, x: Dd) -> Dd {
        let mut th = Dd::from_f64(y.to_f64().atan2(x.to_f64()));
        for _ in 0..2 {
            let (s, c) = th.sin_cos();
            let num = y * c - x * s;
            let den = x * c + y * s;
            th += num / den;
        }
        th
    }

    pub fn cosh_sinh(self) -> (Dd, Dd) {
        if self.hi.abs() < 0.1 {
            // series keeps sinh accurate near zero
            let x2 = self * self;
            let mut t = self;
            let mut s = self;
            let mut j = 1.0;
            loop {
                t = t * x2 / ((j + 1.0) * (j + 2.0));
                s += t;
                j += 2.0;
                if t.hi.abs() < 1e-34 {
                    break;
                }
            }
            let c = (Dd::ONE + s * s).sqrt();
            return (c, s);
        }
        let e = self.exp();
        let ei = e.recip();
        ((e + ei).mul_pow2(-1), (e - ei).mul_pow2(-1))
    }

    /// Decimal rendering with `digits` significant digits, scientific form.
    pub fn to_sci(self, digits: usize) -> String {
        if !self.is_finite() {
            return format!("{}", self.hi);
        }
        if self.hi == 0.0 {
            return format!("0.{}e0", "0".repeat(digits.saturating_sub(1)));
        }
        let neg = self.hi < 0.0;
        let mut x = self.abs();
        let mut e = x.hi.log10().floor() as i32;
        x = x / Dd::from_f64(10.0).powi(e);
        if x.hi >= 10.0 {
            x = x / 10.0;
            e += 1;
        } else if x.hi < 1.0 {
            x = x * 10.0;
            e -= 1;
        }
        let mut ds = Vec::with_capacity(digits + 1);
        for _ in 0..=digits {
            let d = x.hi.floor().clamp(0.0, 9.0);
            ds.push(d as u8);
            x = (x - d) * 10.0;
        }
        // round half up on the guard digit
        if ds[digits] >= 5 {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    e += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
        ds.truncate(digits);
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push((b'0' + ds[0]) as char);
        if digits > 1 {
            out.push('.');
            for &d in &ds[1..] {
                out.push((b'0' + d) as char);
            }
        }
        out.push_str(&format!("e{e}"));
        out
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::from_f64(x)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci(32))
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Sub<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: f64) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * b);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + q3
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, b: f64) -> Dd {
        self / Dd::from_f64(b)
    }
}

impl AddAssign for Dd {
    fn add_assign(&mut self, b: Dd) {
        *self = *self + b;
    }
}

impl SubAssign for Dd {
    fn sub_assign(&mut self, b: Dd) {
        *self = *self - b;
    }
}

impl MulAssign for Dd {
    fn mul_assign(&mut self, b: Dd) {
        *self = *self * b;
    }
}

/// Complex number with double-double parts.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ZERO: DdComplex = DdComplex { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: DdComplex = DdComplex { re: Dd::ONE, im: Dd::ZERO };
    pub const I: DdComplex = DdComplex { re: Dd::ZERO, im: Dd::ONE };

    #[inline]
    pub const fn new(re: Dd, im: Dd) -> DdComplex {
        DdComplex { re, im }
    }

    #[inline]
    pub fn from_c64(z: Complex64) -> DdComplex {
        DdComplex { re: Dd::from_f64(z.re), im: Dd::from_f64(z.im) }
    }

    #[inline]
    pub fn real(x: Dd) -> DdComplex {
        DdComplex { re: x, im: Dd::ZERO }
    }

    #[inline]
    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn conj(self) -> DdComplex {
        DdComplex { re: self.re, im: -self.im }
    }

    pub fn norm_sqr(self) -> Dd {
        self.re * self.re + self.im * self.im
    }

    pub fn norm(self) -> f64 {
        self.to_c64().norm()
    }

    pub fn scale(self, k: Dd) -> DdComplex {
        DdComplex { re: self.re * k, im: self.im * k }
    }

    pub fn recip(self) -> DdComplex {
        let d = self.norm_sqr();
        DdComplex { re: self.re / d, im: -self.im / d }
    }

    pub fn exp(self) -> DdComplex {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        DdComplex { re: m * c, im: m * s }
    }

    /// Principal logarithm.
    pub fn ln(self) -> DdComplex {
        let r = self.norm_sqr().ln().mul_pow2(-1);
        DdComplex { re: r, im: Dd::atan2(self.im, self.re) }
    }

    pub fn sin(self) -> DdComplex {
        let (s, c) = self.re.sin_cos();
        let (ch, sh) = self.im.cosh_sinh();
        DdComplex { re: s * ch, im: c * sh }
    }

    /// `x^self` for a positive real base supplied as its logarithm.
    pub fn pow_from_ln(self, ln_base: Dd) -> DdComplex {
        self.scale(ln_base).exp()
    }
}

impl Neg for DdComplex {
    type Output = DdComplex;
    fn neg(self) -> DdComplex {
        DdComplex { re: -self.re, im: -self.im }
    }
}

impl Add for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn add(self, b: DdComplex) -> DdComplex {
        DdComplex { re: self.re + b.re, im: self.im + b.im }
    }
}

impl Add<f64> for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn add(self, b: f64) -> DdComplex {
        DdComplex { re: self.re + b, im: self.im }
    }
}

impl Sub for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn sub(self, b: DdComplex) -> DdComplex {
        DdComplex { re: self.re - b.re, im: self.im - b.im }
    }
}

impl Sub<f64> for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn sub(self, b: f64) -> DdComplex {
        DdComplex { re: self.re - b, im: self.im }
    }
}

impl Mul for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn mul(self, b: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re * b.re - self.im * b.im,
            im: self.re * b.im + self.im * b.re,
        }
    }
}

impl Mul<f64> for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn mul(self, b: f64) -> DdComplex {
        DdComplex { re: self.re * b, im: self.im * b }
    }
}

impl Div for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn div(self, b: DdComplex) -> DdComplex {
        let d = b.norm_sqr();
        DdComplex {
            re: (self.re * b.re + self.im * b.im) / d,
            im: (self.im * b.re - self.re * b.im) / d,
        }
    }
}

impl Div<f64> for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn div(self, b: f64) -> DdComplex {
        DdComplex { re: self.re / b, im: self.im / b }
    }
}

impl AddAssign for DdComplex {
    fn add_assign(&mut self, b: DdComplex) {
        *self = *self + b;
    }
}

impl SubAssign for DdComplex {
    fn sub_assign(&mut self, b: DdComplex) {
        *self = *self - b;
    }
}

impl MulAssign for DdComplex {
    fn mul_assign(&mut self, b: DdComplex) {
        *self = *self * b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: Dd, tol: f64) -> bool {
        ((a - b).to_f64() / b.to_f64().abs().max(1e-300)).abs() < tol
    }

    #[test]
    fn sqrt_two_squared() {
        let r = Dd::from_f64(2.0).sqrt();
        assert!((r * r - 2.0).to_f64().abs() < 1e-31);
    }

    #[test]
    fn exp_ln_round_trip() {
        for &x in &[0.3, 1.0, 7.25, -12.5, 40.0] {
            let d = Dd::from_f64(x);
            assert!(close(d.exp().ln(), d, 1e-30), "x = {x}");
        }
    }

    #[test]
    fn exp_one_matches_e() {
        // e = 2.718281828459045 + 1.4456468917292502e-16
        let e = Dd::ONE.exp();
        assert_eq!(e.hi, std::f64::consts::E);
        assert!((e.lo - 1.4456468917292502e-16).abs() < 1e-31);
    }

    #[test]
    fn sin_cos_pythagoras_and_pi() {
        for &x in &[0.1, 1.0, 2.5, 10.0, 123.456, -77.7] {
            let (s, c) = Dd::from_f64(x).sin_cos();
            assert!((s * s + c * c - 1.0).to_f64().abs() < 1e-30);
        }
        let (s, c) = (Dd::PI / 6.0).sin_cos();
        assert!((s - 0.5).to_f64().abs() < 1e-31);
        assert!((c * c - 0.75).to_f64().abs() < 1e-31);
    }

    #[test]
    fn atan2_recovers_angle() {
        let th = Dd::from_f64(2.0);
        let (s, c) = th.sin_cos();
        assert!((Dd::atan2(s, c) - th).to_f64().abs() < 1e-31);
    }

    #[test]
    fn decimal_rendering() {
        let third = Dd::ONE / 3.0;
        assert_eq!(third.to_sci(32), "3.3333333333333333333333333333333e-1");
        assert_eq!(Dd::from_f64(-2.5).to_sci(3), "-2.50e0");
    }

    #[test]
    fn complex_exp_ln() {
        let z = DdComplex::from_c64(Complex64::new(0.7, -3.1));
        let w = z.ln().exp();
        assert!((w - z).norm() < 1e-30);
    }
}
