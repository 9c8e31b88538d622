//! Double-double arithmetic (an unevaluated sum `hi + lo` of two f64, about
//! 106 significant bits).
//!
//! Only what the Mittag-Leffler series needs lives here: the four basic
//! operations, `exp`, `ln` and `ln Γ` for positive arguments. The series for
//! `E_{δ,θ}(-x)` cancels like `exp(x^{1/δ})`, so its terms must be formed and
//! summed with more than 53 bits for the result to keep full f64 accuracy.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub(crate) struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

const LN_2: DoubleDouble = DoubleDouble {
    hi: 0.6931471805599453,
    lo: 2.3190468138462996e-17,
};

const HALF_LN_2PI: DoubleDouble = DoubleDouble {
    hi: 0.9189385332046728,
    lo: -3.8782941580672414e-17,
};

/// `B_{2j} / (2j (2j - 1))` for j = 1..=14 as exact numerator/denominator pairs.
const STIRLING: [(f64, f64); 14] = [
    (1.0, 12.0),
    (-1.0, 360.0),
    (1.0, 1260.0),
    (-1.0, 1680.0),
    (1.0, 1188.0),
    (-691.0, 360360.0),
    (1.0, 156.0),
    (-3617.0, 122400.0),
    (43867.0, 244188.0),
    (-174611.0, 125400.0),
    (854513.0, 63756.0),
    (-236364091.0, 1506960.0),
    (8553103.0, 3900.0),
    (-23749461029.0, 657720.0),
];

/// Stirling's series is applied only above this point; smaller arguments
/// are shifted up with the recurrence.
const STIRLING_MIN: f64 = 25.0;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
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

impl DoubleDouble {
    pub const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };
    pub const ONE: DoubleDouble = DoubleDouble { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    #[inline]
    fn renorm(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        DoubleDouble { hi, lo }
    }

    /// Exact product of two f64 values.
    #[inline]
    pub fn product(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        DoubleDouble { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        DoubleDouble::renorm(p, e + self.lo * b)
    }

    #[inline]
    fn ldexp(self, k: i32) -> Self {
        // two half steps so that 2^k itself never overflows or underflows
        let half = 2f64.powi(k / 2);
        let rest = 2f64.powi(k - k / 2);
        DoubleDouble {
            hi: self.hi * half * rest,
            lo: self.lo * half * rest,
        }
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.78 {
            return DoubleDouble::from_f64(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return DoubleDouble::ZERO;
        }
        if self.hi == 0.0 {
            return DoubleDouble::ONE;
        }
        // x = k ln2 + r, |r| <= ln2/2, then exp(r) = (1 + s)^(2^9) with s = expm1(r / 2^9)
        let k = (self.hi / LN_2.hi).round();
        let r = (self - LN_2.mul_f64(k)).ldexp(-9);
        let mut s = r;
        let mut term = r;
        for n in 2..=14 {
            term = term * r / DoubleDouble::from_f64(n as f64);
            s = s + term;
            if term.hi.abs() < 1e-34 {
                break;
            }
        }
        for _ in 0..9 {
            s = s.mul_f64(2.0) + s * s;
        }
        (s + DoubleDouble::ONE).ldexp(k as i32)
    }

    /// Natural logarithm of a positive value (one Newton step on `exp`).
    pub fn ln(self) -> Self {
        debug_assert!(self.hi > 0.0);
        let x = DoubleDouble::from_f64(self.hi.ln());
        x + self * (-x).exp() - DoubleDouble::ONE
    }

    /// `ln Γ(self)` for `self > 0`.
    pub fn ln_gamma(self) -> Self {
        debug_assert!(self.hi > 0.0);
        let mut y = self;
        let mut shift = DoubleDouble::ONE;
        while y.hi < STIRLING_MIN {
            shift = shift * y;
            y = y + DoubleDouble::ONE;
        }
        let inv = DoubleDouble::ONE / y;
        let inv2 = inv * inv;
        let mut series = DoubleDouble::ZERO;
        for &(num, den) in STIRLING.iter().rev() {
            series = series * inv2 + DoubleDouble::from_f64(num) / DoubleDouble::from_f64(den);
        }
        let stirling = (y - DoubleDouble::from_f64(0.5)) * y.ln() - y + HALF_LN_2PI + series * inv;
        if shift == DoubleDouble::ONE {
            stirling
        } else {
            stirling - shift.ln()
        }
    }
}

impl Add for DoubleDouble {
    type Output = DoubleDouble;
    #[inline]
    fn add(self, b: DoubleDouble) -> DoubleDouble {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        DoubleDouble::renorm(s1, s2 + t2)
    }
}

impl Neg for DoubleDouble {
    type Output = DoubleDouble;
    #[inline]
    fn neg(self) -> DoubleDouble {
        DoubleDouble {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for DoubleDouble {
    type Output = DoubleDouble;
    #[inline]
    fn sub(self, b: DoubleDouble) -> DoubleDouble {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = DoubleDouble;
    #[inline]
    fn mul(self, b: DoubleDouble) -> DoubleDouble {
        let (p1, p2) = two_prod(self.hi, b.hi);
        DoubleDouble::renorm(p1, p2 + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Div for DoubleDouble {
    type Output = DoubleDouble;
    fn div(self, b: DoubleDouble) -> DoubleDouble {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        DoubleDouble::renorm(q1, q2) + DoubleDouble::from_f64(q3)
    }
}
