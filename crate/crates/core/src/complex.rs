//! Minimal complex arithmetic for resolvent boundary values.
//!
//! Only the operations the reduced resolvent integrals need: field arithmetic,
//! the principal square root, and magnitude.  The principal branch (cut along
//! the negative real axis, `Re sqrt ≥ 0`) is what makes the closed form
//! `(2π)^{-1} ∫ dθ/(a - cos θ) = 1/(sqrt(a-1)·sqrt(a+1))` analytic on the
//! whole complex plane minus the band `[-1, 1]`.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

pub const fn c64(re: f64, im: f64) -> C64 {
    C64 { re, im }
}

impl C64 {
    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Principal square root: `Re ≥ 0`, branch cut on the negative real axis.
    pub fn sqrt(self) -> C64 {
        if self.re == 0.0 && self.im == 0.0 {
            return c64(0.0, 0.0);
        }
        let r = self.abs();
        // Stable half-angle form: sqrt(z) = sqrt((r+re)/2) + i·sign(im)·sqrt((r-re)/2).
        let half_sum = ((r + self.re) * 0.5).max(0.0).sqrt();
        let half_diff = ((r - self.re) * 0.5).max(0.0).sqrt();
        if self.im >= 0.0 {
            c64(half_sum, half_diff)
        } else {
            c64(half_sum, -half_diff)
        }
    }

    pub fn recip(self) -> C64 {
        let d = self.re * self.re + self.im * self.im;
        c64(self.re / d, -self.im / d)
    }

    pub fn scale(self, s: f64) -> C64 {
        c64(self.re * s, self.im * s)
    }
}

impl Add for C64 {
    type Output = C64;
    fn add(self, o: C64) -> C64 {
        c64(self.re + o.re, self.im + o.im)
    }
}

impl Sub for C64 {
    type Output = C64;
    fn sub(self, o: C64) -> C64 {
        c64(self.re - o.re, self.im - o.im)
    }
}

impl Mul for C64 {
    type Output = C64;
    fn mul(self, o: C64) -> C64 {
        c64(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Div for C64 {
    type Output = C64;
    fn div(self, o: C64) -> C64 {
        self * o.recip()
    }
}

impl Neg for C64 {
    type Output = C64;
    fn neg(self) -> C64 {
        c64(-self.re, -self.im)
    }
}

impl Add<f64> for C64 {
    type Output = C64;
    fn add(self, s: f64) -> C64 {
        c64(self.re + s, self.im)
    }
}

impl Sub<f64> for C64 {
    type Output = C64;
    fn sub(self, s: f64) -> C64 {
        c64(self.re - s, self.im)
    }
}
