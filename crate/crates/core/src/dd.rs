//! Double-double arithmetic (about 106 bits of mantissa).
//!
//! Only what the extended-precision series reference needs: add, multiply,
//! and division by a double.

use core::ops::{Add, Mul, Neg, Sub};

use crate::ComplexScalar;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, libm::fma(a, b, -p))
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

impl DoubleDouble {
    pub const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };
    pub const ONE: DoubleDouble = DoubleDouble { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let (p, e) = two_prod(q1, b);
        let (s, t) = two_sum(self.hi, -p);
        let t = t - e + self.lo;
        let q2 = (s + t) / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        DoubleDouble { hi, lo }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }
}

impl Add for DoubleDouble {
    type Output = Self;

    fn add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        DoubleDouble { hi, lo }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;

    fn neg(self) -> Self {
        DoubleDouble {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;

    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;

    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DoubleDouble { hi, lo }
    }
}

/// Complex number with double-double parts.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ComplexDD {
    pub re: DoubleDouble,
    pub im: DoubleDouble,
}

impl ComplexDD {
    pub const ZERO: ComplexDD = ComplexDD {
        re: DoubleDouble::ZERO,
        im: DoubleDouble::ZERO,
    };
    pub const ONE: ComplexDD = ComplexDD {
        re: DoubleDouble::ONE,
        im: DoubleDouble::ZERO,
    };

    pub fn from_complex(z: ComplexScalar) -> Self {
        ComplexDD {
            re: DoubleDouble::from_f64(z.re),
            im: DoubleDouble::from_f64(z.im),
        }
    }

    pub fn to_complex(self) -> ComplexScalar {
        ComplexScalar::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn div_f64(self, b: f64) -> Self {
        ComplexDD {
            re: self.re.div_f64(b),
            im: self.im.div_f64(b),
        }
    }

    /// `|re| + |im|` rounded to double, enough for tail estimates.
    pub fn l1_norm(self) -> f64 {
        self.re.to_f64().abs() + self.im.to_f64().abs()
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl Add for ComplexDD {
    type Output = Self;

    fn add(self, b: Self) -> Self {
        ComplexDD {
            re: self.re + b.re,
            im: self.im + b.im,
        }
    }
}

impl Sub for ComplexDD {
    type Output = Self;

    fn sub(self, b: Self) -> Self {
        ComplexDD {
            re: self.re - b.re,
            im: self.im - b.im,
        }
    }
}

impl Neg for ComplexDD {
    type Output = Self;

    fn neg(self) -> Self {
        ComplexDD {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for ComplexDD {
    type Output = Self;

    fn mul(self, b: Self) -> Self {
        ComplexDD {
            re: self.re * b.re - self.im * b.im,
            im: self.re * b.im + self.im * b.re,
        }
    }
}
